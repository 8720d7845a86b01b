//! Reducible disks, (I)/(II)-moves and the B-reducibility decision.
//!
//! A disk is 1-reducible when its boundary meets the diagram at a single
//! crossing diagonally: some face occupies two opposite corners there. It is
//! 2-reducible when the boundary passes diagonally through two crossings,
//! its two arcs running through a pair of faces that sit at opposite corners
//! of both. The corresponding moves eliminate one crossing each; a diagram
//! is B-reducible when some move sequence reaches a crossingless diagram.

use crate::diagram::{canonical_code, Diagram};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};
use thiserror::Error;

/// Default node limit for the reducibility search.
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("site is not present in the current diagram")]
    StaleSite,
}

/// Replay failure, reported with the index of the offending move
/// (the initial-code check counts as step 0).
#[derive(Debug, Error, PartialEq, Eq)]
#[error("certificate replay failed at step {step}: {reason}")]
pub struct ReplayError {
    pub step: usize,
    pub reason: String,
}

/// A place where a (I)- or (II)-move applies.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ReducibleSite {
    /// Nugatory crossing: `face` occupies corners `axis` and `axis + 2` of `c`.
    One { c: usize, axis: u8, face: usize },
    /// Crossings `c1 < c2` with faces `f1`, `f2` at opposite corners of both:
    /// `f1` at corner `axis1` of `c1` and `axis2` of `c2`, `f2` diagonally
    /// across at each.
    Two {
        c1: usize,
        c2: usize,
        axis1: u8,
        axis2: u8,
        faces: (usize, usize),
    },
}

/// One recorded reduction move. For a (II)-move on a crossing pair that
/// admits two distinct disk patterns, the order of `c1`/`c2` selects the
/// pattern: ascending order means the first site in canonical order,
/// descending the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Move {
    #[serde(rename = "I")]
    I { c: usize },
    #[serde(rename = "II")]
    II {
        c1: usize,
        c2: usize,
        smoothed: usize,
    },
}

/// A replayable reduction of a diagram to crossingless components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// Canonical code (reflection disabled) of the starting diagram, hex.
    pub initial: String,
    /// Canonical code of the crossingless end state, hex.
    pub r#final: String,
    pub moves: Vec<Move>,
}

/// Outcome of [`decide_b_reducible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reducibility {
    Found(Certificate),
    NotReducible,
    BudgetExhausted,
}

/// All nugatory crossings, in canonical order. At most one site per
/// crossing is reported: the lowest doubled axis.
pub fn find_one_reducible(d: &Diagram) -> Vec<ReducibleSite> {
    let faces = d.faces();
    let mut out = Vec::new();
    for c in 0..d.n_crossings() {
        for axis in 0..2u8 {
            let f1 = Diagram::face_at_corner(&faces, c, axis as usize);
            let f2 = Diagram::face_at_corner(&faces, c, axis as usize + 2);
            if f1 == f2 {
                out.push(ReducibleSite::One { c, axis, face: f1 });
                break;
            }
        }
    }
    out
}

/// All crossing pairs admitting the shared-opposite-faces pattern, in
/// canonical order. A pair can carry up to two sites (one per axis class).
pub fn find_two_reducible(d: &Diagram) -> Vec<ReducibleSite> {
    let faces = d.faces();
    // Opposite-corner face pairs, keyed by the unordered face pair.
    let mut by_pair: BTreeMap<(usize, usize), Vec<(usize, u8)>> = BTreeMap::new();
    for c in 0..d.n_crossings() {
        for axis in 0..2u8 {
            let f1 = Diagram::face_at_corner(&faces, c, axis as usize);
            let f2 = Diagram::face_at_corner(&faces, c, axis as usize + 2);
            if f1 != f2 {
                let key = (f1.min(f2), f1.max(f2));
                by_pair.entry(key).or_default().push((c, axis));
            }
        }
    }
    let mut out = Vec::new();
    for ((fa, fb), hits) in by_pair {
        for i in 0..hits.len() {
            for j in i + 1..hits.len() {
                let (c1, axis1) = hits[i];
                let (c2, axis2) = hits[j];
                debug_assert!(c1 < c2);
                out.push(ReducibleSite::Two {
                    c1,
                    c2,
                    axis1,
                    axis2,
                    faces: (fa, fb),
                });
            }
        }
    }
    out.sort();
    out
}

/// Reduction sites in search order: (I)-sites first, then (II)-sites.
pub fn find_sites(d: &Diagram) -> Vec<ReducibleSite> {
    let mut sites = find_one_reducible(d);
    sites.extend(find_two_reducible(d));
    sites
}

fn site_is_current(d: &Diagram, site: &ReducibleSite) -> bool {
    match site {
        ReducibleSite::One { c, .. } => {
            find_one_reducible(d)
                .iter()
                .any(|s| matches!(s, ReducibleSite::One { c: c2, .. } if c2 == c))
                && matches!(find_one_reducible(d).iter().find(|s| matches!(s, ReducibleSite::One { c: c2, .. } if c2 == c)), Some(s) if s == site)
        }
        ReducibleSite::Two { .. } => find_two_reducible(d).contains(site),
    }
}

/// Eliminates a nugatory crossing by the connectivity-preserving smoothing:
/// the untwist whose arcs hug the doubled face's two corners. Reversing the
/// disk as in the original move would differ only by a mirror of the disk
/// interior, which no tracked quantity sees.
pub fn apply_move_i(d: &Diagram, site: &ReducibleSite) -> Result<Diagram, MoveError> {
    let (c, axis) = match site {
        ReducibleSite::One { c, axis, .. } => (*c, *axis as usize),
        _ => return Err(MoveError::StaleSite),
    };
    if !site_is_current(d, site) {
        return Err(MoveError::StaleSite);
    }
    Ok(d.smooth_with_arcs(c, [(axis, axis + 1), (axis + 2, axis + 3)]))
}

/// Smooths one crossing of a 2-reducible pair, with the arcs hugging the
/// corners of the two shared faces. The other resolution would double the
/// merged face at the partner crossing and make it nugatory after every
/// (II)-move, which the disk calculus forbids.
pub fn apply_move_ii(
    d: &Diagram,
    site: &ReducibleSite,
    smoothed: usize,
) -> Result<Diagram, MoveError> {
    let (c1, c2, axis1, axis2) = match site {
        ReducibleSite::Two {
            c1,
            c2,
            axis1,
            axis2,
            ..
        } => (*c1, *c2, *axis1, *axis2),
        _ => return Err(MoveError::StaleSite),
    };
    if !find_two_reducible(d).contains(site) {
        return Err(MoveError::StaleSite);
    }
    let (c, axis) = if smoothed == c1 {
        (c1, axis1 as usize)
    } else if smoothed == c2 {
        (c2, axis2 as usize)
    } else {
        return Err(MoveError::StaleSite);
    };
    Ok(d.smooth_with_arcs(c, [(axis, axis + 1), (axis + 2, axis + 3)]))
}

/// Lists the (II)-sites for the unordered pair `{a, b}`, in canonical order.
fn two_sites_for_pair(d: &Diagram, a: usize, b: usize) -> Vec<ReducibleSite> {
    let (lo, hi) = (a.min(b), a.max(b));
    find_two_reducible(d)
        .into_iter()
        .filter(|s| matches!(s, ReducibleSite::Two { c1, c2, .. } if *c1 == lo && *c2 == hi))
        .collect()
}

/// Resolves a recorded move against the current diagram. For (II)-moves the
/// c1/c2 order picks the site when a crossing pair carries two patterns.
pub fn replay_move(d: &Diagram, mv: &Move) -> Result<Diagram, MoveError> {
    match mv {
        Move::I { c } => {
            let site = find_one_reducible(d)
                .into_iter()
                .find(|s| matches!(s, ReducibleSite::One { c: c2, .. } if c2 == c))
                .ok_or(MoveError::StaleSite)?;
            apply_move_i(d, &site)
        }
        Move::II { c1, c2, smoothed } => {
            let sites = two_sites_for_pair(d, *c1, *c2);
            // Ascending order selects the first site, descending the second.
            let which = if c1 <= c2 { 0 } else { 1 };
            let site = sites.get(which).ok_or(MoveError::StaleSite)?;
            apply_move_ii(d, site, *smoothed)
        }
    }
}

/// Encodes a (site, smoothed) choice as a replayable move.
fn record_move(d: &Diagram, site: &ReducibleSite, smoothed: Option<usize>) -> Move {
    match site {
        ReducibleSite::One { c, .. } => Move::I { c: *c },
        ReducibleSite::Two { c1, c2, .. } => {
            let sites = two_sites_for_pair(d, *c1, *c2);
            let idx = sites
                .iter()
                .position(|s| s == site)
                .expect("site from this diagram");
            let smoothed = smoothed.expect("(II)-moves pick a crossing");
            if idx == 0 {
                Move::II {
                    c1: *c1,
                    c2: *c2,
                    smoothed,
                }
            } else {
                Move::II {
                    c1: *c2,
                    c2: *c1,
                    smoothed,
                }
            }
        }
    }
}

/// Complete backtracking search for a reduction to crossingless components,
/// memoized on canonical codes with reflection disabled.
pub fn decide_b_reducible(d: &Diagram, budget: usize) -> Reducibility {
    let mut dead: HashSet<Vec<u8>> = HashSet::new();
    let mut exhausted = false;
    let initial = canonical_code(d, false);

    fn search(
        d: &Diagram,
        dead: &mut HashSet<Vec<u8>>,
        exhausted: &mut bool,
        budget: usize,
    ) -> Option<Vec<Move>> {
        if d.n_crossings() == 0 {
            return Some(Vec::new());
        }
        let key = canonical_code(d, false);
        if dead.contains(&key) {
            return None;
        }
        if dead.len() >= budget {
            *exhausted = true;
            return None;
        }
        for site in find_sites(d) {
            match &site {
                ReducibleSite::One { .. } => {
                    let next = apply_move_i(d, &site).expect("site is current");
                    if let Some(mut moves) = search(&next, dead, exhausted, budget) {
                        moves.insert(0, record_move(d, &site, None));
                        return Some(moves);
                    }
                }
                ReducibleSite::Two { c1, c2, .. } => {
                    for smoothed in [*c1, *c2] {
                        let next = apply_move_ii(d, &site, smoothed).expect("site is current");
                        if let Some(mut moves) = search(&next, dead, exhausted, budget) {
                            moves.insert(0, record_move(d, &site, Some(smoothed)));
                            return Some(moves);
                        }
                    }
                }
            }
        }
        dead.insert(key);
        None
    }

    match search(d, &mut dead, &mut exhausted, budget) {
        Some(moves) => {
            let mut end = d.clone();
            for mv in &moves {
                end = replay_move(&end, mv).expect("recorded moves replay");
            }
            debug_assert_eq!(end.n_crossings(), 0);
            Reducibility::Found(Certificate {
                initial: crate::diagram::code_hex(&initial),
                r#final: crate::diagram::code_hex(&canonical_code(&end, false)),
                moves,
            })
        }
        None if exhausted => Reducibility::BudgetExhausted,
        None => Reducibility::NotReducible,
    }
}

/// Replays a certificate. `Ok(true)` iff the initial code matches, every
/// move applies, and the end state is crossingless with the recorded code.
pub fn verify_certificate(d: &Diagram, cert: &Certificate) -> Result<bool, ReplayError> {
    let initial = crate::diagram::code_hex(&canonical_code(d, false));
    if initial != cert.initial {
        return Err(ReplayError {
            step: 0,
            reason: "initial code mismatch".into(),
        });
    }
    let mut cur = d.clone();
    for (i, mv) in cert.moves.iter().enumerate() {
        cur = replay_move(&cur, mv).map_err(|e| ReplayError {
            step: i + 1,
            reason: format!("move does not apply: {e}"),
        })?;
    }
    if cur.n_crossings() != 0 {
        return Ok(false);
    }
    Ok(crate::diagram::code_hex(&canonical_code(&cur, false)) == cert.r#final)
}
