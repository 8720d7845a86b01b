//! Linear realizations: disjoint arcs over a base line whose interleaving
//! graph is the tree.

use crate::awtree::{AWTree, Sign, Weight};

/// Arcs over the base line. Arc `a` occupies the two word positions holding
/// `a`; positive arcs are drawn in the upper half-plane, negative below,
/// which keeps interleaving arcs disjoint (adjacent vertices have opposite
/// signs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRealization {
    /// Arc id at each endpoint position; every arc appears exactly twice.
    word: Vec<usize>,
    signs: Vec<Sign>,
    weights: Vec<Weight>,
    /// Tree vertex realized by each arc.
    vertex_of: Vec<usize>,
}

impl LinearRealization {
    pub fn new(
        word: Vec<usize>,
        signs: Vec<Sign>,
        weights: Vec<Weight>,
        vertex_of: Vec<usize>,
    ) -> LinearRealization {
        let n = signs.len();
        assert_eq!(word.len(), 2 * n);
        assert_eq!(weights.len(), n);
        assert_eq!(vertex_of.len(), n);
        let mut count = vec![0usize; n];
        for &a in &word {
            count[a] += 1;
        }
        assert!(
            count.iter().all(|&c| c == 2),
            "each arc needs two endpoints"
        );
        LinearRealization {
            word,
            signs,
            weights,
            vertex_of,
        }
    }

    pub fn n_arcs(&self) -> usize {
        self.signs.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn sign(&self, arc: usize) -> Sign {
        self.signs[arc]
    }

    pub fn weight(&self, arc: usize) -> Weight {
        self.weights[arc]
    }

    pub fn vertex_of(&self, arc: usize) -> usize {
        self.vertex_of[arc]
    }

    /// Left and right endpoint positions of an arc.
    pub fn span(&self, arc: usize) -> (usize, usize) {
        let mut it = self
            .word
            .iter()
            .enumerate()
            .filter(|(_, &a)| a == arc)
            .map(|(i, _)| i);
        let l = it.next().expect("arc present");
        let r = it.next().expect("arc appears twice");
        (l, r)
    }

    /// Two arcs interleave when their endpoints alternate along the line.
    pub fn interleaves(&self, a: usize, b: usize) -> bool {
        let (la, ra) = self.span(a);
        let (lb, rb) = self.span(b);
        (la < lb && lb < ra && ra < rb) || (lb < la && la < rb && rb < ra)
    }

    /// Edges of the interleaving graph, as tree-vertex pairs.
    pub fn interleave_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n_arcs();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.interleaves(a, b) {
                    let (u, v) = (self.vertex_of[a], self.vertex_of[b]);
                    out.push((u.min(v), u.max(v)));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Checks the realization invariants against its tree: the interleaving
    /// graph is exactly the edge set, and interleaving arcs carry opposite
    /// signs.
    pub fn is_realization_of(&self, t: &AWTree) -> bool {
        if self.n_arcs() != t.n_vertices() {
            return false;
        }
        for arc in 0..self.n_arcs() {
            let v = self.vertex_of[arc];
            if self.signs[arc] != t.sign(v) || self.weights[arc] != t.weight(v) {
                return false;
            }
        }
        let edges: Vec<(usize, usize)> = t.edges().to_vec();
        self.interleave_edges() == edges
    }

    /// Endpoint sequence as a label string plus a legend, e.g. `A B A B`.
    pub fn to_text(&self) -> String {
        fn label(i: usize) -> String {
            let letter = (b'A' + (i % 26) as u8) as char;
            if i < 26 {
                letter.to_string()
            } else {
                format!("{letter}{}", i / 26)
            }
        }
        let mut out = String::new();
        let line: Vec<String> = self.word.iter().map(|&a| label(a)).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
        for arc in 0..self.n_arcs() {
            let sign = match self.signs[arc] {
                Sign::Plus => '+',
                Sign::Minus => '-',
            };
            out.push_str(&format!(
                "{} {} {} v{}\n",
                label(arc),
                sign,
                self.weights[arc],
                self.vertex_of[arc]
            ));
        }
        out
    }
}

/// Canonical realization: components laid out left to right by least
/// vertex; inside a component, depth-first from the least vertex, each
/// child arc inserted around its parent's right endpoint. Every child
/// interleaves its parent exactly once and nothing else.
pub fn realize_tree(t: &AWTree) -> LinearRealization {
    let n = t.n_vertices();
    let signs = (0..n).map(|v| t.sign(v)).collect();
    let weights = (0..n).map(|v| t.weight(v)).collect();
    let mut word: Vec<usize> = Vec::with_capacity(2 * n);
    for members in t.components() {
        let root = members[0];
        word.push(root);
        word.push(root);
        // Depth-first insertion; stack of (vertex, parent).
        let mut stack: Vec<(usize, usize)> = t
            .neighbors(root)
            .into_iter()
            .rev()
            .map(|c| (c, root))
            .collect();
        while let Some((v, parent)) = stack.pop() {
            let right = word
                .iter()
                .enumerate()
                .filter(|(_, &a)| a == parent)
                .map(|(i, _)| i)
                .nth(1)
                .expect("parent placed");
            word.insert(right + 1, v);
            word.insert(right, v);
            for c in t.neighbors(v).into_iter().rev() {
                if c != parent {
                    stack.push((c, v));
                }
            }
        }
    }
    LinearRealization::new(word, signs, weights, (0..n).collect())
}
