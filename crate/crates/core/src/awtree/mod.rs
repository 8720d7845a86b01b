//! Alternatingly weighted forests and their surgery matrices.
//!
//! A tree carries a sign in {+1, -1} per vertex, alternating across edges,
//! and a weight in {0, 1, oo}. Encoding the weight as a fraction a/b with
//! (a, b) in {(0,1), (1,1), (1,0)} produces an integer matrix whose
//! absolute determinant is the first-homology order of the surgered
//! manifold, and whose absolute-value permanent counts the Heegaard Floer
//! generators. Equality of the two is the strong L-space certificate.

mod enumerate;
mod matrix;
mod ops;

pub use enumerate::{enumerate_trees, sample_trees, EXHAUSTIVE_LIMIT};
pub use matrix::{
    build_matrix, determinant, expansion_signatures, is_effective, permanent_abs, Effectiveness,
    ExpansionSignatures, SignedMatrix, SIGNATURE_LIMIT,
};
pub use ops::{apply_tree_op, op_sites, TreeOp};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Weight {
    Zero,
    One,
    Infinity,
}

impl Weight {
    /// Fraction encoding a/b, with 1/0 standing for infinity.
    pub fn fraction(self) -> (i64, i64) {
        match self {
            Weight::Zero => (0, 1),
            Weight::One => (1, 1),
            Weight::Infinity => (1, 0),
        }
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Weight::Zero => write!(f, "0"),
            Weight::One => write!(f, "1"),
            Weight::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("the underlying graph contains a cycle")]
    CycleFound,
    #[error("edge {0}-{1} joins two vertices of equal sign")]
    SignClash(usize, usize),
    #[error("vertex id {0} out of range")]
    NoSuchVertex(usize),
    #[error("duplicate or self-loop edge {0}-{1}")]
    BadEdge(usize, usize),
    #[error("size {0} exceeds the limit {1} for this operation")]
    SizeLimit(usize, usize),
    #[error("site does not match the operation's shape: {0}")]
    SiteShapeMismatch(String),
    #[error("malformed tree text: {0}")]
    Malformed(String),
}

/// An alternatingly weighted forest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AWTree {
    signs: Vec<Sign>,
    weights: Vec<Weight>,
    /// Edges as ordered pairs (lo, hi), sorted.
    edges: Vec<(usize, usize)>,
}

impl AWTree {
    /// Builds and validates a forest.
    pub fn new(
        signs: Vec<Sign>,
        weights: Vec<Weight>,
        mut edges: Vec<(usize, usize)>,
    ) -> Result<AWTree, TreeError> {
        assert_eq!(signs.len(), weights.len());
        let n = signs.len();
        for e in edges.iter_mut() {
            if e.0 == e.1 || e.0 >= n || e.1 >= n {
                return Err(TreeError::BadEdge(e.0, e.1));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(TreeError::BadEdge(w[0].0, w[0].1));
        }
        let t = AWTree {
            signs,
            weights,
            edges,
        };
        t.validate()?;
        Ok(t)
    }

    pub const fn empty() -> AWTree {
        AWTree {
            signs: Vec::new(),
            weights: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Acyclicity and sign alternation.
    pub fn validate(&self) -> Result<(), TreeError> {
        let n = self.n_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            if self.signs[a] == self.signs[b] {
                return Err(TreeError::SignClash(a, b));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(TreeError::CycleFound);
            }
            parent[ra] = rb;
        }
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.signs.len()
    }

    pub fn sign(&self, v: usize) -> Sign {
        self.signs[v]
    }

    pub fn weight(&self, v: usize) -> Weight {
        self.weights[v]
    }

    pub fn set_weight(&mut self, v: usize, w: Weight) {
        self.weights[v] = w;
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Vertex sets of the connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Removes the listed vertices, renumbering the rest order-preservingly.
    pub fn remove_vertices(&self, remove: &[usize]) -> AWTree {
        let n = self.n_vertices();
        let mut keep = vec![true; n];
        for &v in remove {
            keep[v] = false;
        }
        let mut map = vec![usize::MAX; n];
        let mut next = 0;
        for v in 0..n {
            if keep[v] {
                map[v] = next;
                next += 1;
            }
        }
        let signs = (0..n).filter(|&v| keep[v]).map(|v| self.signs[v]).collect();
        let weights = (0..n)
            .filter(|&v| keep[v])
            .map(|v| self.weights[v])
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| keep[a] && keep[b])
            .map(|&(a, b)| (map[a], map[b]))
            .collect();
        AWTree {
            signs,
            weights,
            edges,
        }
    }

    /// Parses the tree text format: lines `v<id> <+|-> <0|1|inf>` followed by
    /// `e <id> <id>`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<AWTree, TreeError> {
        let mut ids: Vec<u64> = Vec::new();
        let mut signs = Vec::new();
        let mut weights = Vec::new();
        let mut raw_edges: Vec<(u64, u64)> = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields[0] {
                f if f.starts_with('v') => {
                    if fields.len() != 3 {
                        return Err(TreeError::Malformed(line.to_string()));
                    }
                    let id: u64 = f[1..]
                        .parse()
                        .map_err(|_| TreeError::Malformed(line.to_string()))?;
                    if ids.contains(&id) {
                        return Err(TreeError::Malformed(format!("duplicate vertex {id}")));
                    }
                    ids.push(id);
                    signs.push(match fields[1] {
                        "+" => Sign::Plus,
                        "-" => Sign::Minus,
                        _ => return Err(TreeError::Malformed(line.to_string())),
                    });
                    weights.push(match fields[2] {
                        "0" => Weight::Zero,
                        "1" => Weight::One,
                        "inf" | "oo" => Weight::Infinity,
                        _ => return Err(TreeError::Malformed(line.to_string())),
                    });
                }
                "e" => {
                    if fields.len() != 3 {
                        return Err(TreeError::Malformed(line.to_string()));
                    }
                    let a = fields[1]
                        .parse()
                        .map_err(|_| TreeError::Malformed(line.into()))?;
                    let b = fields[2]
                        .parse()
                        .map_err(|_| TreeError::Malformed(line.into()))?;
                    raw_edges.push((a, b));
                }
                _ => return Err(TreeError::Malformed(line.to_string())),
            }
        }
        let index_of = |id: u64| ids.iter().position(|&x| x == id);
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (a, b) in raw_edges {
            let (ia, ib) = match (index_of(a), index_of(b)) {
                (Some(x), Some(y)) => (x, y),
                _ => {
                    return Err(TreeError::Malformed(format!(
                        "edge {a} {b} names unknown vertex"
                    )))
                }
            };
            edges.push((ia, ib));
        }
        AWTree::new(signs, weights, edges)
    }

    /// Parses the JSON mirror:
    /// `{"vertices":[{"id":0,"sign":"+","weight":"0"},...],"edges":[[0,1],...]}`.
    pub fn parse_json(text: &str) -> Result<AWTree, TreeError> {
        #[derive(serde::Deserialize)]
        struct RawVertex {
            id: u64,
            sign: String,
            weight: String,
        }
        #[derive(serde::Deserialize)]
        struct Raw {
            vertices: Vec<RawVertex>,
            #[serde(default)]
            edges: Vec<[u64; 2]>,
        }
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| TreeError::Malformed(e.to_string()))?;
        let mut text_form = String::new();
        for v in &raw.vertices {
            text_form.push_str(&format!("v{} {} {}\n", v.id, v.sign, v.weight));
        }
        for e in &raw.edges {
            text_form.push_str(&format!("e {} {}\n", e[0], e[1]));
        }
        AWTree::parse(&text_form)
    }

    /// Serializes to the JSON mirror with dense ids.
    pub fn to_json(&self) -> String {
        let vertices: Vec<serde_json::Value> = (0..self.n_vertices())
            .map(|v| {
                serde_json::json!({
                    "id": v,
                    "sign": match self.signs[v] { Sign::Plus => "+", Sign::Minus => "-" },
                    "weight": self.weights[v].to_string(),
                })
            })
            .collect();
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(a, b)| [a, b]).collect();
        serde_json::json!({ "vertices": vertices, "edges": edges }).to_string()
    }

    /// Renders the tree text format with dense ids.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in 0..self.n_vertices() {
            let sign = match self.signs[v] {
                Sign::Plus => "+",
                Sign::Minus => "-",
            };
            out.push_str(&format!("v{v} {sign} {}\n", self.weights[v]));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("e {a} {b}\n"));
        }
        out
    }

    /// Canonical text invariant: isomorphic decorated forests agree. Rooted
    /// codes taken at every vertex, minimized per component, components
    /// sorted.
    pub fn canonical_text(&self) -> String {
        fn rooted(t: &AWTree, v: usize, from: Option<usize>) -> String {
            let mut parts: Vec<String> = t
                .neighbors(v)
                .into_iter()
                .filter(|&u| Some(u) != from)
                .map(|u| rooted(t, u, Some(v)))
                .collect();
            parts.sort();
            let s = match t.signs[v] {
                Sign::Plus => '+',
                Sign::Minus => '-',
            };
            format!("({s}{}{})", t.weights[v], parts.concat())
        }
        let mut comps: Vec<String> = self
            .components()
            .iter()
            .map(|members| {
                members
                    .iter()
                    .map(|&v| rooted(self, v, None))
                    .min()
                    .expect("nonempty component")
            })
            .collect();
        comps.sort();
        comps.concat()
    }
}

/// Result of the strong L-space check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H1 {
    Order(u64),
    NotRationalHomologySphere,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongCheck {
    pub h1: H1,
    pub strong_lspace: bool,
}

/// Computes |H1| of the induced manifold and the strong L-space verdict:
/// determinant zero means no rational homology sphere; otherwise the
/// generator count (absolute permanent) must equal |H1|.
pub fn h1_and_strong_check(t: &AWTree) -> StrongCheck {
    let m = build_matrix(t, None);
    let det = determinant(&m);
    if det == 0 {
        return StrongCheck {
            h1: H1::NotRationalHomologySphere,
            strong_lspace: false,
        };
    }
    let perm = permanent_abs(&m).expect("tree sizes stay within the permanent limit");
    StrongCheck {
        h1: H1::Order(det.unsigned_abs()),
        strong_lspace: perm == det.unsigned_abs(),
    }
}
