//! Enumeration and sampling of alternatingly weighted forests.

use super::{AWTree, Sign, TreeError, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Largest vertex count accepted by the exhaustive enumeration.
pub const EXHAUSTIVE_LIMIT: usize = 7;

const WEIGHTS: [Weight; 3] = [Weight::Zero, Weight::One, Weight::Infinity];

/// Canonical form of an undecorated forest: minimal rooted code per
/// component, sorted.
fn forest_shape_code(n: usize, edges: &[(usize, usize)]) -> String {
    let t = AWTree::new(
        bipartite_signs(n, edges),
        vec![Weight::Zero; n],
        edges.to_vec(),
    )
    .expect("acyclic by construction");
    // Strip decoration variance: the rooted code of the shape only.
    fn rooted(t: &AWTree, v: usize, from: Option<usize>) -> String {
        let mut parts: Vec<String> = t
            .neighbors(v)
            .into_iter()
            .filter(|&u| Some(u) != from)
            .map(|u| rooted(t, u, Some(v)))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    let mut comps: Vec<String> = t
        .components()
        .iter()
        .map(|m| m.iter().map(|&v| rooted(&t, v, None)).min().unwrap())
        .collect();
    comps.sort();
    comps.concat()
}

/// Signs alternating across edges, the lowest vertex of each component
/// positive.
fn bipartite_signs(n: usize, edges: &[(usize, usize)]) -> Vec<Sign> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut signs = vec![None; n];
    for v0 in 0..n {
        if signs[v0].is_some() {
            continue;
        }
        signs[v0] = Some(Sign::Plus);
        let mut stack = vec![v0];
        while let Some(v) = stack.pop() {
            let s = signs[v].unwrap();
            for &u in &adj[v] {
                if signs[u].is_none() {
                    signs[u] = Some(s.flip());
                    stack.push(u);
                }
            }
        }
    }
    signs.into_iter().map(|s| s.unwrap()).collect()
}

/// One representative labeled forest per isomorphism class, for each vertex
/// count 1..=n.
fn forest_shapes(n: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    for k in 1..=n {
        let all_pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
            .collect();
        let mut seen = BTreeSet::new();
        // Forests on k vertices have at most k-1 edges; enumerate edge
        // subsets by recursion with an acyclicity filter.
        fn rec(
            k: usize,
            pairs: &[(usize, usize)],
            idx: usize,
            chosen: &mut Vec<(usize, usize)>,
            parent: &mut Vec<usize>,
            seen: &mut BTreeSet<String>,
            out: &mut Vec<(usize, Vec<(usize, usize)>)>,
        ) {
            if idx == pairs.len() {
                let code = forest_shape_code(k, chosen);
                if seen.insert(code) {
                    out.push((k, chosen.clone()));
                }
                return;
            }
            rec(k, pairs, idx + 1, chosen, parent, seen, out);
            let (a, b) = pairs[idx];
            fn find(parent: &mut [usize], mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                let saved = parent.clone();
                parent[ra] = rb;
                chosen.push((a, b));
                rec(k, pairs, idx + 1, chosen, parent, seen, out);
                chosen.pop();
                *parent = saved;
            }
        }
        let mut chosen = Vec::new();
        let mut parent: Vec<usize> = (0..k).collect();
        rec(
            k,
            &all_pairs,
            0,
            &mut chosen,
            &mut parent,
            &mut seen,
            &mut out,
        );
    }
    out
}

/// Every alternatingly weighted forest with 1..=n vertices: one unlabeled
/// shape representative, two sign polarities per component, all weight
/// assignments. Decorated duplicates arising from shape symmetries are not
/// collapsed.
pub fn enumerate_trees(max_vertices: usize) -> Result<Vec<AWTree>, TreeError> {
    if max_vertices > EXHAUSTIVE_LIMIT {
        return Err(TreeError::SizeLimit(max_vertices, EXHAUSTIVE_LIMIT));
    }
    let mut out = Vec::new();
    for (k, edges) in forest_shapes(max_vertices) {
        let base = bipartite_signs(k, &edges);
        let t0 =
            AWTree::new(base.clone(), vec![Weight::Zero; k], edges.clone()).expect("valid shape");
        let comps = t0.components();
        for polarity in 0u32..(1 << comps.len()) {
            let mut signs = base.clone();
            for (ci, members) in comps.iter().enumerate() {
                if polarity & (1 << ci) != 0 {
                    for &v in members {
                        signs[v] = signs[v].flip();
                    }
                }
            }
            let mut weights = vec![Weight::Zero; k];
            loop {
                out.push(
                    AWTree::new(signs.clone(), weights.clone(), edges.clone())
                        .expect("valid decoration"),
                );
                // Odometer over weight assignments.
                let mut pos = 0;
                loop {
                    if pos == k {
                        break;
                    }
                    let next = match weights[pos] {
                        Weight::Zero => Some(Weight::One),
                        Weight::One => Some(Weight::Infinity),
                        Weight::Infinity => None,
                    };
                    match next {
                        Some(w) => {
                            weights[pos] = w;
                            break;
                        }
                        None => {
                            weights[pos] = Weight::Zero;
                            pos += 1;
                        }
                    }
                }
                if pos == k {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// `count` random connected trees with up to `max_vertices` vertices:
/// uniform labeled trees with uniform decorations, deterministic in the
/// seed.
pub fn sample_trees(max_vertices: usize, count: usize, seed: u64) -> Vec<AWTree> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(random_tree(&mut rng, max_vertices));
    }
    out
}

/// One uniform labeled tree on 1..=max vertices with random decorations.
pub(crate) fn random_tree(rng: &mut ChaCha8Rng, max_vertices: usize) -> AWTree {
    let n = rng.gen_range(1..=max_vertices);
    let edges = if n <= 2 {
        if n == 2 {
            vec![(0usize, 1usize)]
        } else {
            Vec::new()
        }
    } else {
        // Pruefer sequence decoding yields uniform labeled trees.
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let mut degree = vec![1usize; n];
        for &v in &seq {
            degree[v] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        for &v in &seq {
            let leaf = *leaves.iter().next().expect("nonempty");
            leaves.remove(&leaf);
            edges.push((leaf.min(v), leaf.max(v)));
            degree[v] -= 1;
            if degree[v] == 1 {
                leaves.insert(v);
            }
        }
        let rest: Vec<usize> = leaves.into_iter().collect();
        debug_assert_eq!(rest.len(), 2);
        edges.push((rest[0].min(rest[1]), rest[0].max(rest[1])));
        edges
    };
    let mut signs = bipartite_signs(n, &edges);
    if rng.gen_bool(0.5) {
        for s in signs.iter_mut() {
            *s = s.flip();
        }
    }
    let weights = (0..n).map(|_| WEIGHTS[rng.gen_range(0..3)]).collect();
    AWTree::new(signs, weights, edges).expect("valid random tree")
}
