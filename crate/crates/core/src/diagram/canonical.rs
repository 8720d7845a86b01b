//! Canonical byte codes for decorated maps.
//!
//! Two diagrams get equal codes exactly when they are isomorphic as
//! decorated combinatorial maps on the sphere (orientation-preserving, or
//! also mirrored when reflection is allowed). The code is the lexicographic
//! minimum over all starting darts and enabled orientations of a
//! breadth-first relabeling.

use super::{Dart, Diagram};

/// Encodes one component (given by its sorted crossing list) starting from
/// `start` with traversal orientation `orient` (+1 or -1).
fn encode_from(d: &Diagram, crossings: &[usize], start: Dart, orient: i32) -> Vec<u8> {
    let n = crossings.len();
    debug_assert!(n <= u8::MAX as usize);
    let mut index: std::collections::HashMap<usize, u8> = std::collections::HashMap::new();
    let mut ref_slot: Vec<u8> = Vec::with_capacity(n);
    let mut order: Vec<usize> = Vec::with_capacity(n);

    let c0 = Diagram::crossing_of(start);
    index.insert(c0, 0);
    ref_slot.push(Diagram::slot_of(start) as u8);
    order.push(c0);

    let mut out = Vec::with_capacity(8 * n + n);
    let mut i = 0;
    while i < order.len() {
        let c = order[i];
        let r = ref_slot[i] as i32;
        for t in 0..4 {
            let s = (r + orient * t).rem_euclid(4) as usize;
            let e = d.pairing(Diagram::dart(c, s));
            let (c2, s2) = (Diagram::crossing_of(e), Diagram::slot_of(e) as i32);
            let idx2 = *index.entry(c2).or_insert_with(|| {
                ref_slot.push(s2 as u8);
                order.push(c2);
                (order.len() - 1) as u8
            });
            let rel = ((s2 - ref_slot[idx2 as usize] as i32) * orient).rem_euclid(4) as u8;
            out.push(idx2);
            out.push(rel);
        }
        i += 1;
    }
    debug_assert_eq!(order.len(), n);
    for (i, &c) in order.iter().enumerate() {
        let bit = (d.under_axis(c) as i32 - ref_slot[i] as i32).rem_euclid(2) as u8;
        out.push(bit);
    }
    out
}

fn component_code(d: &Diagram, crossings: &[usize], allow_reflection: bool) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    let orients: &[i32] = if allow_reflection { &[1, -1] } else { &[1] };
    for &orient in orients {
        for &c in crossings {
            for s in 0..4 {
                let code = encode_from(d, crossings, Diagram::dart(c, s), orient);
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    best.unwrap()
}

/// Canonical code of a diagram: equal codes iff isomorphic decorated maps,
/// up to reflection when `allow_reflection` is set.
pub fn canonical_code(d: &Diagram, allow_reflection: bool) -> Vec<u8> {
    let comps = d.crossing_components();
    let mut codes: Vec<Vec<u8>> = comps
        .iter()
        .map(|members| component_code(d, members, allow_reflection))
        .collect();
    codes.sort();
    let mut out = Vec::new();
    out.extend_from_slice(&(d.free_loops() as u32).to_le_bytes());
    out.extend_from_slice(&(codes.len() as u32).to_le_bytes());
    for code in codes {
        out.extend_from_slice(&(code.len() as u32).to_le_bytes());
        out.extend_from_slice(&code);
    }
    out
}

/// Lowercase-hex rendering of a canonical code.
pub fn code_hex(code: &[u8]) -> String {
    let mut s = String::with_capacity(code.len() * 2);
    for b in code {
        s.push_str(&format!("{b:02x}"));
    }
    s
}
