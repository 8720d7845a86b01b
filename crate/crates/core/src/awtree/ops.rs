//! The four invertible tree operations.

use super::{AWTree, Sign, TreeError, Weight};

/// The four operations. Sites are vertex ids: the vertex gaining an
/// infinity leaf for op 1, the univalent vertex being consumed otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TreeOp {
    AttachInfinityLeaf,
    RemoveZeroLeafPair,
    FoldOneIntoZero,
    DropOneLeaf,
}

impl TreeOp {
    pub fn number(self) -> u8 {
        match self {
            TreeOp::AttachInfinityLeaf => 1,
            TreeOp::RemoveZeroLeafPair => 2,
            TreeOp::FoldOneIntoZero => 3,
            TreeOp::DropOneLeaf => 4,
        }
    }

    pub fn from_number(n: u8) -> Option<TreeOp> {
        match n {
            1 => Some(TreeOp::AttachInfinityLeaf),
            2 => Some(TreeOp::RemoveZeroLeafPair),
            3 => Some(TreeOp::FoldOneIntoZero),
            4 => Some(TreeOp::DropOneLeaf),
            _ => None,
        }
    }
}

/// The unique neighbor of a univalent vertex.
fn sole_neighbor(t: &AWTree, v: usize) -> Result<usize, TreeError> {
    let nbrs = t.neighbors(v);
    if nbrs.len() != 1 {
        return Err(TreeError::SiteShapeMismatch(format!(
            "vertex {v} has degree {}, expected 1",
            nbrs.len()
        )));
    }
    Ok(nbrs[0])
}

/// Applies one operation at the given site.
///
/// 1. Attach a new infinity-weight leaf to `site` (sign forced opposite).
/// 2. `site` is a univalent zero-weight vertex whose neighbor carries a
///    finite weight: remove both and all incident edges. An infinity
///    neighbor is rejected; cancelling the pair is only a surgery move when
///    the neighbor is an actual surgery component, and the manifold (hence
///    the determinant) would change otherwise.
/// 3. `site` is a univalent one-weight vertex next to a zero-weight vertex:
///    remove `site`, the neighbor's weight becomes one.
/// 4. `site` is a univalent one-weight vertex next to a one-weight vertex:
///    remove `site`.
pub fn apply_tree_op(t: &AWTree, op: TreeOp, site: usize) -> Result<AWTree, TreeError> {
    if site >= t.n_vertices() {
        return Err(TreeError::NoSuchVertex(site));
    }
    match op {
        TreeOp::AttachInfinityLeaf => {
            let mut signs: Vec<Sign> = (0..t.n_vertices()).map(|v| t.sign(v)).collect();
            let mut weights: Vec<Weight> = (0..t.n_vertices()).map(|v| t.weight(v)).collect();
            let mut edges = t.edges().to_vec();
            signs.push(t.sign(site).flip());
            weights.push(Weight::Infinity);
            edges.push((site, t.n_vertices()));
            AWTree::new(signs, weights, edges)
        }
        TreeOp::RemoveZeroLeafPair => {
            if t.weight(site) != Weight::Zero {
                return Err(TreeError::SiteShapeMismatch(format!(
                    "vertex {site} has weight {}, expected 0",
                    t.weight(site)
                )));
            }
            let next = sole_neighbor(t, site)?;
            if t.weight(next) == Weight::Infinity {
                return Err(TreeError::SiteShapeMismatch(
                    "neighbor of the zero leaf carries an infinite weight".into(),
                ));
            }
            Ok(t.remove_vertices(&[site, next]))
        }
        TreeOp::FoldOneIntoZero => {
            if t.weight(site) != Weight::One {
                return Err(TreeError::SiteShapeMismatch(format!(
                    "vertex {site} has weight {}, expected 1",
                    t.weight(site)
                )));
            }
            let next = sole_neighbor(t, site)?;
            if t.weight(next) != Weight::Zero {
                return Err(TreeError::SiteShapeMismatch(format!(
                    "neighbor has weight {}, expected 0",
                    t.weight(next)
                )));
            }
            let mut out = t.remove_vertices(&[site]);
            let next_new = if next > site { next - 1 } else { next };
            out.set_weight(next_new, Weight::One);
            Ok(out)
        }
        TreeOp::DropOneLeaf => {
            if t.weight(site) != Weight::One {
                return Err(TreeError::SiteShapeMismatch(format!(
                    "vertex {site} has weight {}, expected 1",
                    t.weight(site)
                )));
            }
            let next = sole_neighbor(t, site)?;
            if t.weight(next) != Weight::One {
                return Err(TreeError::SiteShapeMismatch(format!(
                    "neighbor has weight {}, expected 1",
                    t.weight(next)
                )));
            }
            Ok(t.remove_vertices(&[site]))
        }
    }
}

/// All sites where the operation applies.
pub fn op_sites(t: &AWTree, op: TreeOp) -> Vec<usize> {
    (0..t.n_vertices())
        .filter(|&v| apply_tree_op(t, op, v).is_ok())
        .collect()
}
