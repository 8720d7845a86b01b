//! From a linear realization to the induced alternating diagram.
//!
//! The base line closes through infinity into a circle. An infinity arc
//! changes nothing and is erased. A zero arc cuts the circle at its two
//! endpoints and rejoins the four ends along the arc without a crossing
//! (west of the left endpoint to east of the right one, and the two inner
//! ends together). A one arc rejoins them through a single crossing whose
//! strands connect west to west and east to east. Because arcs on opposite
//! sides of the line are disjoint, these tangles never interact away from
//! the circle, and the result is a spherical map; under-strands are then
//! assigned by the checkerboard rule, the unique alternating choice up to a
//! global mirror.

use super::{LinearRealization, MontesinosError};
use crate::awtree::{Sign, Weight};
use crate::diagram::{alternating_marks, Diagram};

/// Stub ids: west and east end of the axis at each retained endpoint
/// position.
fn west(p: usize) -> usize {
    2 * p
}
fn east(p: usize) -> usize {
    2 * p + 1
}

pub fn m_induced_diagram(r: &LinearRealization) -> Result<Diagram, MontesinosError> {
    // Retained endpoint positions: infinity arcs are erased.
    let positions: Vec<usize> = r
        .word()
        .iter()
        .enumerate()
        .filter(|(_, &arc)| r.weight(arc) != Weight::Infinity)
        .map(|(i, _)| i)
        .collect();
    let m = positions.len();
    if m == 0 {
        return Ok(Diagram::crossingless(1));
    }
    // Dense rank of each retained position.
    let rank_of = |pos: usize| positions.binary_search(&pos).expect("retained");

    // Crossings: weight-one arcs ordered by left endpoint.
    let mut one_arcs: Vec<usize> = (0..r.n_arcs())
        .filter(|&a| r.weight(a) == Weight::One)
        .collect();
    one_arcs.sort_by_key(|&a| r.span(a).0);

    // dart_at[stub] is the crossing dart attached there, if any.
    let mut dart_at: Vec<Option<usize>> = vec![None; 2 * m];
    // splice[stub] is the partner stub of a zero-arc reconnection.
    let mut splice: Vec<Option<usize>> = vec![None; 2 * m];

    for (c, &arc) in one_arcs.iter().enumerate() {
        let (l, r_pos) = r.span(arc);
        let (l, rr) = (rank_of(l), rank_of(r_pos));
        // Counterclockwise slots. Above the line: lW, lE, rW, rE.
        // Below (mirror through the line): lW, rE, rW, lE.
        let slots: [usize; 4] = match r.sign(arc) {
            Sign::Plus => [west(l), east(l), west(rr), east(rr)],
            Sign::Minus => [west(l), east(rr), west(rr), east(l)],
        };
        for (s, &stub) in slots.iter().enumerate() {
            dart_at[stub] = Some(Diagram::dart(c, s));
        }
    }
    for arc in 0..r.n_arcs() {
        if r.weight(arc) != Weight::Zero {
            continue;
        }
        let (l, r_pos) = r.span(arc);
        let (l, rr) = (rank_of(l), rank_of(r_pos));
        splice[west(l)] = Some(east(rr));
        splice[east(rr)] = Some(west(l));
        splice[east(l)] = Some(west(rr));
        splice[west(rr)] = Some(east(l));
    }

    // Axis edges join east(p) to west(p + 1) cyclically.
    let axis_partner = |stub: usize| -> usize {
        let p = stub / 2;
        if stub % 2 == 1 {
            west((p + 1) % m)
        } else {
            east((p + m - 1) % m)
        }
    };

    // Trace each crossing dart through axis edges and splices.
    let mut pairing = vec![usize::MAX; 4 * one_arcs.len()];
    let mut visited = vec![false; 2 * m];
    for stub0 in 0..2 * m {
        let Some(d0) = dart_at[stub0] else { continue };
        if visited[stub0] {
            continue;
        }
        visited[stub0] = true;
        let mut cur = axis_partner(stub0);
        loop {
            if let Some(d1) = dart_at[cur] {
                visited[cur] = true;
                pairing[d0] = d1;
                pairing[d1] = d0;
                break;
            }
            visited[cur] = true;
            let jump = splice[cur].expect("stub is a crossing leg or a splice end");
            visited[jump] = true;
            cur = axis_partner(jump);
        }
    }
    // Unvisited stubs sit on closed splice/axis cycles: free loops.
    let mut free_loops = 0usize;
    for stub0 in 0..2 * m {
        if visited[stub0] {
            continue;
        }
        let mut cur = stub0;
        loop {
            visited[cur] = true;
            let jump = splice[cur].expect("cycle stubs belong to zero arcs");
            visited[jump] = true;
            cur = axis_partner(jump);
            if cur == stub0 {
                break;
            }
        }
        free_loops += 1;
    }

    if one_arcs.is_empty() {
        return Ok(Diagram::crossingless(free_loops));
    }
    debug_assert!(pairing.iter().all(|&d| d != usize::MAX));
    // Soundness of the embedding before decorating.
    let probe = Diagram::from_parts(pairing.clone(), vec![0; one_arcs.len()], free_loops);
    if !probe.is_spherical() {
        return Err(MontesinosError::NonSphericalInduced);
    }
    let out = alternating_marks(pairing, free_loops);
    if !out.is_alternating() {
        return Err(MontesinosError::AlternationUnsatisfiable);
    }
    Ok(out)
}
