//! Certificate-driven reverse translation: diagram to tree.
//!
//! The certificate's replay gives the chain of diagrams down to a
//! crossingless end state. Walking the chain backwards, each reinstated
//! crossing is realized by inserting one weight-one arc into the running
//! linear realization; the insertion templates are the arc either sitting
//! alone on the axis (a new isolated vertex) or straddling one endpoint of
//! an existing arc (a new leaf), plus the variant that first plays a
//! one-weight back down to zero on the straddled arc. Every candidate is
//! checked by rebuilding the induced diagram and comparing canonical codes
//! against the replayed target, so an accepted step is correct by
//! construction; if no template matches, the step fails loudly.

use super::induce::m_induced_diagram;
use super::{LinearRealization, MontesinosError};
use crate::awtree::{AWTree, Sign, Weight};
use crate::diagram::{canonical_code, link_determinant, Diagram};
use crate::reduce::{verify_certificate, Certificate};

/// State carried through the reverse replay: a forest plus a realization of
/// it whose arc ids equal the vertex ids.
#[derive(Clone, Debug)]
struct State {
    signs: Vec<Sign>,
    weights: Vec<Weight>,
    edges: Vec<(usize, usize)>,
    word: Vec<usize>,
}

impl State {
    fn tree(&self) -> AWTree {
        AWTree::new(self.signs.clone(), self.weights.clone(), self.edges.clone())
            .expect("reverse states stay valid forests")
    }

    fn realization(&self) -> LinearRealization {
        LinearRealization::new(
            self.word.clone(),
            self.signs.clone(),
            self.weights.clone(),
            (0..self.signs.len()).collect(),
        )
    }

    fn induced(&self) -> Result<Diagram, MontesinosError> {
        m_induced_diagram(&self.realization())
    }

    /// Arcs with exactly one endpoint in the half-open old-position range
    /// [i, j) — the arcs a new arc inserted at (i, j) would interleave.
    fn interleaved_by_insertion(&self, i: usize, j: usize) -> Vec<usize> {
        let mut hits = std::collections::BTreeMap::new();
        for (pos, &arc) in self.word.iter().enumerate() {
            if pos >= i && pos < j {
                *hits.entry(arc).or_insert(0usize) += 1;
            }
        }
        hits.into_iter()
            .filter(|&(_, c)| c == 1)
            .map(|(a, _)| a)
            .collect()
    }

    /// Inserts a new weight-one arc with endpoints before old positions `i`
    /// and `j`, attached to `attach` (edge + opposite sign) or isolated with
    /// the given polarity.
    fn insert_arc(&self, i: usize, j: usize, attach: Option<usize>, polarity: Sign) -> State {
        let mut s = self.clone();
        let id = s.signs.len();
        let sign = match attach {
            Some(u) => s.signs[u].flip(),
            None => polarity,
        };
        s.signs.push(sign);
        s.weights.push(Weight::One);
        if let Some(u) = attach {
            s.edges.push((u.min(id), u.max(id)));
        }
        s.word.insert(j, id);
        s.word.insert(i, id);
        s
    }
}

/// Candidate next states for one reverse step, figure templates only, in a
/// deterministic order.
fn candidates(state: &State) -> Vec<State> {
    let len = state.word.len();
    let mut out = Vec::new();
    for i in 0..=len {
        for j in i..=len {
            let interleaved = state.interleaved_by_insertion(i, j);
            match interleaved.len() {
                0 => {
                    out.push(state.insert_arc(i, j, None, Sign::Plus));
                    out.push(state.insert_arc(i, j, None, Sign::Minus));
                }
                1 => {
                    let u = interleaved[0];
                    out.push(state.insert_arc(i, j, Some(u), Sign::Plus));
                    // Variant: fold the straddled arc's weight back to zero
                    // before attaching (the reverse of the weight-folding
                    // tree operation).
                    if state.weights[u] == Weight::One {
                        let mut folded = state.clone();
                        folded.weights[u] = Weight::Zero;
                        out.push(folded.insert_arc(i, j, Some(u), Sign::Plus));
                    }
                }
                _ => {}
            }
        }
    }
    out
}

/// Rebuilds a tree and linear realization from a diagram and a verified
/// reduction certificate, replaying the moves backwards. The returned tree
/// satisfies |det Mat| = link determinant of the diagram.
pub fn diagram_to_tree(
    d: &Diagram,
    cert: &Certificate,
) -> Result<(AWTree, LinearRealization), MontesinosError> {
    match verify_certificate(d, cert) {
        Ok(true) => {}
        Ok(false) => {
            return Err(MontesinosError::CertificateInvalid(
                "certificate does not reach a crossingless diagram".into(),
            ))
        }
        Err(e) => return Err(MontesinosError::CertificateInvalid(e.to_string())),
    }
    // Forward replay to collect the diagram chain.
    let mut chain = vec![d.clone()];
    for mv in &cert.moves {
        let cur = chain.last().unwrap();
        let next = crate::reduce::replay_move(cur, mv)
            .map_err(|e| MontesinosError::CertificateInvalid(e.to_string()))?;
        chain.push(next);
    }
    let end = chain.last().unwrap();
    debug_assert_eq!(end.n_crossings(), 0);

    // Base state: one zero arc fewer than there are circles; the induced
    // diagram of k-1 disjoint zero arcs is exactly k circles.
    let loops = end.free_loops();
    let base_arcs = loops.saturating_sub(1);
    let mut word = Vec::with_capacity(2 * base_arcs);
    for a in 0..base_arcs {
        word.push(a);
        word.push(a);
    }
    let mut state = State {
        signs: vec![Sign::Plus; base_arcs],
        weights: vec![Weight::Zero; base_arcs],
        edges: Vec::new(),
        word,
    };
    debug_assert_eq!(
        canonical_code(&state.induced()?, true),
        canonical_code(end, true),
        "base realization must induce the crossingless end state"
    );

    // Reverse replay: reinstate one crossing per step.
    for step in (0..cert.moves.len()).rev() {
        let target = canonical_code(&chain[step], true);
        let mut matched = None;
        for cand in candidates(&state) {
            let induced = match cand.induced() {
                Ok(diag) => diag,
                Err(_) => continue,
            };
            if canonical_code(&induced, true) == target {
                matched = Some(cand);
                break;
            }
        }
        state = matched.ok_or(MontesinosError::CaseAnalysisFailure { step })?;
    }

    let tree = state.tree();
    let realization = state.realization();
    let tree_det =
        crate::awtree::determinant(&crate::awtree::build_matrix(&tree, None)).unsigned_abs();
    let diagram_det = link_determinant(d);
    if tree_det != diagram_det {
        return Err(MontesinosError::DeterminantMismatch {
            tree: tree_det,
            diagram: diagram_det,
        });
    }
    Ok((tree, realization))
}
