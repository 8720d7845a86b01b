//! The surgery-to-branched-cover bridge between weighted trees and
//! alternating diagrams.
//!
//! A tree is drawn as a system of disjoint arcs over a base line: positive
//! vertices above, negative below, with two arcs interleaving along the line
//! exactly when their vertices are adjacent. Replacing each arc by the
//! tangle its weight dictates turns the closed-up base line into an
//! alternating diagram; replaying a reduction certificate backwards
//! recovers a tree from a diagram. Determinant conservation between
//! |det Mat(T)| and the diagram determinant cross-validates every step.

mod induce;
mod realize;
mod reverse;

pub use induce::m_induced_diagram;
pub use realize::{realize_tree, LinearRealization};
pub use reverse::diagram_to_tree;

use crate::awtree::{build_matrix, determinant, AWTree};
use crate::diagram::{link_determinant, Diagram};
use crate::reduce::{decide_b_reducible, Certificate, Reducibility};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MontesinosError {
    #[error("no alternating assignment exists for the induced map")]
    AlternationUnsatisfiable,
    #[error("the induced map is not a sphere embedding")]
    NonSphericalInduced,
    #[error("certificate does not verify against the diagram: {0}")]
    CertificateInvalid(String),
    #[error("reverse step {step} matches no realization template")]
    CaseAnalysisFailure { step: usize },
    #[error("determinant conservation violated: tree {tree} vs diagram {diagram}")]
    DeterminantMismatch { tree: u64, diagram: u64 },
    #[error("reducibility search exhausted its budget")]
    BudgetExhausted,
}

/// Per-assertion report of the tree -> diagram -> tree round trip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTripReport {
    pub crossings: usize,
    pub alternating: bool,
    pub b_reducible: bool,
    pub tree_det: u64,
    pub diagram_det: u64,
    pub det_match: bool,
    pub reverse_det: u64,
    pub reverse_det_match: bool,
}

impl RoundTripReport {
    pub fn passed(&self) -> bool {
        self.alternating && self.b_reducible && self.det_match && self.reverse_det_match
    }
}

/// Builds the induced diagram of a tree and checks the four round-trip
/// assertions: the diagram alternates, it is B-reducible, and the absolute
/// tree determinant matches the diagram determinant in both directions of
/// the translation.
pub fn roundtrip_verify(t: &AWTree, budget: usize) -> Result<RoundTripReport, MontesinosError> {
    let realization = realize_tree(t);
    let diagram = m_induced_diagram(&realization)?;
    let alternating = diagram.is_alternating();
    let tree_det = determinant(&build_matrix(t, None)).unsigned_abs();
    let diagram_det = link_determinant(&diagram);
    let cert: Option<Certificate> =
        match decide_b_reducible(&diagram, crate::reduce::DEFAULT_BUDGET.min(budget)) {
            Reducibility::Found(c) => Some(c),
            Reducibility::NotReducible => None,
            Reducibility::BudgetExhausted => return Err(MontesinosError::BudgetExhausted),
        };
    let (b_reducible, reverse_det) = match cert {
        Some(cert) => {
            let (tree2, _) = diagram_to_tree(&diagram, &cert)?;
            (
                true,
                determinant(&build_matrix(&tree2, None)).unsigned_abs(),
            )
        }
        None => (false, 0),
    };
    Ok(RoundTripReport {
        crossings: diagram.n_crossings(),
        alternating,
        b_reducible,
        tree_det,
        diagram_det,
        det_match: tree_det == diagram_det,
        reverse_det,
        reverse_det_match: b_reducible && reverse_det == diagram_det,
    })
}

/// Induced diagram of a tree via its canonical realization.
pub fn induced_diagram_of_tree(t: &AWTree) -> Result<Diagram, MontesinosError> {
    m_induced_diagram(&realize_tree(t))
}

#[cfg(test)]
mod tests;
