//! Link diagrams as decorated combinatorial maps.
//!
//! A diagram is a 4-valent map on a disjoint union of spheres: every crossing
//! carries four half-edge slots in counterclockwise cyclic order, an
//! involution pairs the slots into edges, and one of the two opposite slot
//! pairs at each crossing is marked as the under-strand. Crossingless circle
//! components are kept as a bare counter since they carry no map data.

mod canonical;
mod goeritz;
pub mod library;
mod parse;

pub use canonical::{canonical_code, code_hex};
pub use goeritz::{goeritz_matrix, int_determinant, link_determinant, GoeritzData};
pub use parse::{parse_diagram, parse_diagram_json, ParseError};

use std::collections::BTreeMap;
use thiserror::Error;

/// Index of a half-edge slot: `4 * crossing + slot`.
pub type Dart = usize;

/// Smoothing choices at a crossing, fixed project-wide.
///
/// With the under-strand on slots `{u, u+2}`, choice `A` reconnects by arcs
/// pairing slots `{u, u+1}` and `{u+2, u+3}` (the channel joins the two
/// corners swept counterclockwise from the outgoing over-strand slots);
/// choice `B` is the complementary reconnection.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
pub enum Smoothing {
    A,
    B,
}

impl Smoothing {
    pub fn flip(self) -> Smoothing {
        match self {
            Smoothing::A => Smoothing::B,
            Smoothing::B => Smoothing::A,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("no crossing with id {0}")]
    NoSuchCrossing(usize),
    #[error("operation requires a connected diagram")]
    NotConnected,
    #[error("operation requires at least one crossing")]
    Crossingless,
    #[error("face of degree {0} violates the all-faces-at-least-triangles precondition")]
    PreconditionFaceTooSmall(usize),
    #[error("operation requires an alternating diagram")]
    NotAlternating,
}

/// An alternating-capable link diagram: a decorated 4-valent map plus a
/// count of crossingless circle components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    /// Involution on darts; `pairing[d]` is the other end of `d`'s edge.
    pairing: Vec<Dart>,
    /// Per crossing: 0 if slots {0,2} carry the under-strand, 1 for {1,3}.
    under_axis: Vec<u8>,
    /// Crossingless circle components.
    free_loops: usize,
}

impl std::fmt::Debug for Diagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Diagram")
            .field("crossings", &self.n_crossings())
            .field("pairing", &self.pairing)
            .field("under_axis", &self.under_axis)
            .field("free_loops", &self.free_loops)
            .finish()
    }
}

/// Per-degree face counts, per connected component and aggregated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCensus {
    pub per_component: Vec<BTreeMap<usize, usize>>,
    pub total: BTreeMap<usize, usize>,
}

/// Report produced by [`Diagram::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub connected: bool,
    pub alternating: bool,
    pub components: usize,
}

/// Face structure of the map: orbit index per dart plus the orbits themselves.
#[derive(Clone, Debug)]
pub struct Faces {
    pub face_of: Vec<usize>,
    pub orbits: Vec<Vec<Dart>>,
}

impl Diagram {
    /// Builds a diagram from raw map data. The pairing must be a fixed-point
    /// free involution on `4 * under_axis.len()` darts.
    pub fn from_parts(pairing: Vec<Dart>, under_axis: Vec<u8>, free_loops: usize) -> Diagram {
        assert_eq!(pairing.len(), under_axis.len() * 4);
        for (d, &e) in pairing.iter().enumerate() {
            assert!(
                e < pairing.len() && e != d && pairing[e] == d,
                "pairing is not an involution"
            );
        }
        assert!(under_axis.iter().all(|&a| a < 2));
        Diagram {
            pairing,
            under_axis,
            free_loops,
        }
    }

    /// A diagram with no crossings and `loops` circle components.
    pub fn crossingless(loops: usize) -> Diagram {
        Diagram {
            pairing: Vec::new(),
            under_axis: Vec::new(),
            free_loops: loops,
        }
    }

    pub fn n_crossings(&self) -> usize {
        self.under_axis.len()
    }

    pub fn n_darts(&self) -> usize {
        self.pairing.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn set_free_loops(&mut self, loops: usize) {
        self.free_loops = loops;
    }

    pub fn pairing(&self, d: Dart) -> Dart {
        self.pairing[d]
    }

    pub fn under_axis(&self, c: usize) -> u8 {
        self.under_axis[c]
    }

    pub fn dart(c: usize, slot: usize) -> Dart {
        4 * c + (slot & 3)
    }

    pub fn crossing_of(d: Dart) -> usize {
        d / 4
    }

    pub fn slot_of(d: Dart) -> usize {
        d & 3
    }

    /// Next dart counterclockwise around the same crossing.
    pub fn rot(d: Dart) -> Dart {
        (d & !3) | ((d + 1) & 3)
    }

    /// Dart on the opposite slot of the same crossing.
    pub fn opposite(d: Dart) -> Dart {
        (d & !3) | ((d + 2) & 3)
    }

    /// Successor along the face orbit: cross the edge, then rotate once.
    pub fn face_next(&self, d: Dart) -> Dart {
        Self::rot(self.pairing[d])
    }

    /// Successor along a strand: cross the edge, then pass straight through.
    pub fn strand_next(&self, d: Dart) -> Dart {
        Self::opposite(self.pairing[d])
    }

    /// True if the strand arriving at dart `d` passes under at that crossing.
    pub fn arrives_under(&self, d: Dart) -> bool {
        (Self::slot_of(d) & 1) as u8 == self.under_axis[Self::crossing_of(d)]
    }

    /// Face orbits of the rotation system.
    pub fn faces(&self) -> Faces {
        let n = self.n_darts();
        let mut face_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for d0 in 0..n {
            if face_of[d0] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = Vec::new();
            let mut d = d0;
            loop {
                face_of[d] = id;
                orbit.push(d);
                d = self.face_next(d);
                if d == d0 {
                    break;
                }
            }
            orbits.push(orbit);
        }
        Faces { face_of, orbits }
    }

    /// The face at corner `k` of crossing `c` (the corner between slots `k`
    /// and `k+1`), given a precomputed face table.
    pub fn face_at_corner(faces: &Faces, c: usize, k: usize) -> usize {
        faces.face_of[Self::dart(c, k + 1)]
    }

    /// Connected components of the crossing graph, as crossing id lists.
    pub fn crossing_components(&self) -> Vec<Vec<usize>> {
        let n = self.n_crossings();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for c0 in 0..n {
            if comp[c0] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![c0];
            let mut members = Vec::new();
            comp[c0] = id;
            while let Some(c) = stack.pop() {
                members.push(c);
                for s in 0..4 {
                    let c2 = Self::crossing_of(self.pairing[Self::dart(c, s)]);
                    if comp[c2] == usize::MAX {
                        comp[c2] = id;
                        stack.push(c2);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Total number of components: crossing components plus free loops.
    pub fn components(&self) -> usize {
        self.crossing_components().len() + self.free_loops
    }

    /// True for every component of the underlying map: V - E + F = 2.
    pub fn is_spherical(&self) -> bool {
        let comps = self.crossing_components();
        if comps.is_empty() {
            return true;
        }
        let faces = self.faces();
        // Assign each face orbit to the component of its first dart.
        let mut crossing_comp = vec![usize::MAX; self.n_crossings()];
        for (id, members) in comps.iter().enumerate() {
            for &c in members {
                crossing_comp[c] = id;
            }
        }
        let mut face_count = vec![0usize; comps.len()];
        for orbit in &faces.orbits {
            face_count[crossing_comp[Self::crossing_of(orbit[0])]] += 1;
        }
        comps.iter().enumerate().all(|(id, members)| {
            let v = members.len() as i64;
            let e = 2 * v;
            let f = face_count[id] as i64;
            v - e + f == 2
        })
    }

    /// Connectivity, alternation and component count in one report.
    pub fn validate(&self) -> ValidationReport {
        let comps = self.crossing_components().len();
        let components = comps + self.free_loops;
        let connected = components == 1;
        ValidationReport {
            connected,
            alternating: self.is_alternating(),
            components,
        }
    }

    /// True if every strand alternates over/under at successive crossings.
    /// Crossingless diagrams are vacuously alternating.
    pub fn is_alternating(&self) -> bool {
        let n = self.n_darts();
        let mut seen = vec![false; n];
        for d0 in 0..n {
            if seen[d0] {
                continue;
            }
            // Walk the strand orbit of outgoing darts starting at d0.
            let mut d = d0;
            let mut prev_under = None;
            loop {
                seen[d] = true;
                let arrive = self.pairing[d];
                let under = self.arrives_under(arrive);
                if let Some(p) = prev_under {
                    if p == under {
                        return false;
                    }
                }
                prev_under = Some(under);
                d = self.strand_next(d);
                if d == d0 {
                    break;
                }
            }
            // Closing the loop must alternate as well: orbit length even and
            // first passage differs from last. The walk above only checked
            // consecutive passages; compare last with first.
            let first = self.arrives_under(self.pairing[d0]);
            if prev_under == Some(first) {
                return false;
            }
        }
        true
    }

    /// Face census keyed by face degree, per component and aggregated.
    pub fn face_census(&self) -> FaceCensus {
        let comps = self.crossing_components();
        let mut crossing_comp = vec![usize::MAX; self.n_crossings()];
        for (id, members) in comps.iter().enumerate() {
            for &c in members {
                crossing_comp[c] = id;
            }
        }
        let faces = self.faces();
        let mut per_component = vec![BTreeMap::new(); comps.len()];
        let mut total = BTreeMap::new();
        for orbit in &faces.orbits {
            let k = orbit.len();
            let comp = crossing_comp[Self::crossing_of(orbit[0])];
            *per_component[comp].entry(k).or_insert(0) += 1;
            *total.entry(k).or_insert(0) += 1;
        }
        FaceCensus {
            per_component,
            total,
        }
    }

    /// `n3 - 8 - sum_{k>=5} (k-4) n_k`; zero for every connected alternating
    /// diagram whose faces are all at least triangles.
    pub fn euler_identity_residual(&self) -> Result<i64, DiagramError> {
        if self.components() != 1 || self.n_crossings() == 0 {
            return Err(DiagramError::NotConnected);
        }
        if !self.is_alternating() {
            return Err(DiagramError::NotAlternating);
        }
        let census = self.face_census();
        if let Some((&k, _)) = census.total.iter().next() {
            if k <= 2 {
                return Err(DiagramError::PreconditionFaceTooSmall(k));
            }
        }
        let n3 = *census.total.get(&3).unwrap_or(&0) as i64;
        let tail: i64 = census
            .total
            .iter()
            .filter(|(&k, _)| k >= 5)
            .map(|(&k, &n)| (k as i64 - 4) * n as i64)
            .sum();
        Ok(n3 - 8 - tail)
    }

    /// The mirror image: slot order reversed at every crossing. The under
    /// axis is self-paired under slot reversal, so the decoration is kept.
    pub fn mirror(&self) -> Diagram {
        let n = self.n_crossings();
        let flip =
            |d: Dart| -> Dart { Self::dart(Self::crossing_of(d), (4 - Self::slot_of(d)) & 3) };
        let mut pairing = vec![0; 4 * n];
        for d in 0..4 * n {
            pairing[flip(d)] = flip(self.pairing[d]);
        }
        Diagram {
            pairing,
            under_axis: self.under_axis.clone(),
            free_loops: self.free_loops,
        }
    }

    /// Removes crossing `c` and reconnects the strands.
    ///
    /// Strands closed off by the reconnection become free loops. Remaining
    /// crossings are renumbered order-preservingly.
    pub fn smooth(&self, c: usize, choice: Smoothing) -> Result<Diagram, DiagramError> {
        if c >= self.n_crossings() {
            return Err(DiagramError::NoSuchCrossing(c));
        }
        let u = self.under_axis[c] as usize;
        let arcs: [(usize, usize); 2] = match choice {
            Smoothing::A => [(u, u + 1), (u + 2, u + 3)],
            Smoothing::B => [(u + 1, u + 2), (u + 3, u)],
        };
        Ok(self.smooth_with_arcs(c, arcs))
    }

    /// Removes crossing `c`, reconnecting with explicit arcs given as slot
    /// pairs. Used by the reduction moves, which pick the arcs from the face
    /// pattern rather than from the under-strand.
    pub(crate) fn smooth_with_arcs(&self, c: usize, arcs: [(usize, usize); 2]) -> Diagram {
        let mut partner = [0usize; 4];
        for &(a, b) in &arcs {
            partner[a & 3] = b & 3;
            partner[b & 3] = a & 3;
        }
        let is_local = |d: Dart| Self::crossing_of(d) == c;
        let mut consumed = [false; 4];
        let mut new_edges: Vec<(Dart, Dart)> = Vec::new();
        let mut new_loops = 0usize;
        for s0 in 0..4 {
            if consumed[s0] || is_local(self.pairing[Self::dart(c, s0)]) {
                continue;
            }
            // Path from an external end through the smoothing arcs.
            let a = self.pairing[Self::dart(c, s0)];
            consumed[s0] = true;
            let mut t = partner[s0];
            consumed[t] = true;
            let mut b = self.pairing[Self::dart(c, t)];
            while is_local(b) {
                let sb = Self::slot_of(b);
                consumed[sb] = true;
                t = partner[sb];
                consumed[t] = true;
                b = self.pairing[Self::dart(c, t)];
            }
            new_edges.push((a, b));
        }
        // Leftover slots sit on cycles entirely local to the crossing.
        for s0 in 0..4 {
            if consumed[s0] {
                continue;
            }
            let mut s = s0;
            loop {
                consumed[s] = true;
                let t = partner[s];
                consumed[t] = true;
                let b = self.pairing[Self::dart(c, t)];
                debug_assert!(is_local(b));
                s = Self::slot_of(b);
                if s == s0 {
                    break;
                }
            }
            new_loops += 1;
        }

        // Renumber crossings, dropping c.
        let remap_c = |c2: usize| if c2 > c { c2 - 1 } else { c2 };
        let remap =
            |d: Dart| -> Dart { Self::dart(remap_c(Self::crossing_of(d)), Self::slot_of(d)) };
        let n2 = self.n_crossings() - 1;
        let mut pairing = vec![usize::MAX; 4 * n2];
        for d in 0..self.n_darts() {
            if Self::crossing_of(d) == c || is_local(self.pairing[d]) {
                continue;
            }
            pairing[remap(d)] = remap(self.pairing[d]);
        }
        for &(a, b) in &new_edges {
            pairing[remap(a)] = remap(b);
            pairing[remap(b)] = remap(a);
        }
        let mut under_axis = self.under_axis.clone();
        under_axis.remove(c);
        debug_assert!(pairing.iter().all(|&d| d != usize::MAX));
        Diagram {
            pairing,
            under_axis,
            free_loops: self.free_loops + new_loops,
        }
    }

    /// Splits into connected sub-diagrams with at least one crossing each
    /// (crossings renumbered order-preservingly), plus the free-loop count.
    pub fn split_components(&self) -> (Vec<Diagram>, usize) {
        let comps = self.crossing_components();
        let mut out = Vec::with_capacity(comps.len());
        for members in &comps {
            let mut index = std::collections::HashMap::new();
            for (i, &c) in members.iter().enumerate() {
                index.insert(c, i);
            }
            let mut pairing = vec![0; 4 * members.len()];
            let mut under_axis = Vec::with_capacity(members.len());
            for (i, &c) in members.iter().enumerate() {
                under_axis.push(self.under_axis[c]);
                for s in 0..4 {
                    let e = self.pairing[Self::dart(c, s)];
                    pairing[Self::dart(i, s)] =
                        Self::dart(index[&Self::crossing_of(e)], Self::slot_of(e));
                }
            }
            out.push(Diagram {
                pairing,
                under_axis,
                free_loops: 0,
            });
        }
        (out, self.free_loops)
    }

    /// Serializes to the JSON mirror `{"crossings":[[a,b,c,d],...],"free_loops":n}`
    /// with freshly assigned edge labels.
    pub fn to_json(&self) -> String {
        let mut label = vec![0usize; self.n_darts()];
        let mut next = 1usize;
        for d in 0..self.n_darts() {
            if label[d] == 0 {
                label[d] = next;
                label[self.pairing[d]] = next;
                next += 1;
            }
        }
        let crossings: Vec<[usize; 4]> = (0..self.n_crossings())
            .map(|c| {
                // Slot 0 of the record is an under slot by the PD convention.
                let base = self.under_axis[c] as usize;
                [
                    label[Self::dart(c, base)],
                    label[Self::dart(c, base + 1)],
                    label[Self::dart(c, base + 2)],
                    label[Self::dart(c, base + 3)],
                ]
            })
            .collect();
        serde_json::json!({ "crossings": crossings, "free_loops": self.free_loops }).to_string()
    }

    /// Serializes to PD text (`X(a,b,c,d)` records and `O` tokens).
    pub fn to_pd(&self) -> String {
        let mut label = vec![0usize; self.n_darts()];
        let mut next = 1usize;
        for d in 0..self.n_darts() {
            if label[d] == 0 {
                label[d] = next;
                label[self.pairing[d]] = next;
                next += 1;
            }
        }
        let mut parts: Vec<String> = (0..self.n_crossings())
            .map(|c| {
                let base = self.under_axis[c] as usize;
                format!(
                    "X({},{},{},{})",
                    label[Self::dart(c, base)],
                    label[Self::dart(c, base + 1)],
                    label[Self::dart(c, base + 2)],
                    label[Self::dart(c, base + 3)]
                )
            })
            .collect();
        parts.extend(std::iter::repeat_n("O".to_string(), self.free_loops));
        parts.join(" ")
    }
}

/// Two-colors the faces so that adjacent faces differ; entry `i` is true if
/// face `i` is white. The white class is anchored at the lowest crossing:
/// its corners not swept by rotating the over-strand counterclockwise are
/// white. Requires a diagram with at least one crossing whose components are
/// spherical; the dual of such a map is always bipartite.
pub fn checkerboard_coloring(d: &Diagram, faces: &Faces) -> Vec<bool> {
    let nf = faces.orbits.len();
    let mut color = vec![None; nf];
    // Seed every crossing component; anchor at its lowest crossing.
    let comps = d.crossing_components();
    for members in &comps {
        let c0 = members[0];
        // Swept corners have parity under_axis + 1; white is the other pair.
        let white_parity = d.under_axis(c0) as usize;
        let f = Diagram::face_at_corner(faces, c0, white_parity);
        if color[f].is_none() {
            color[f] = Some(true);
            // BFS over face adjacency across edges.
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(f);
            while let Some(g) = queue.pop_front() {
                let cg = color[g].unwrap();
                for &dart in &faces.orbits[g] {
                    let h = faces.face_of[d.pairing(dart)];
                    match color[h] {
                        None => {
                            color[h] = Some(!cg);
                            queue.push_back(h);
                        }
                        Some(ch) => debug_assert_ne!(cg, ch, "map dual is not bipartite"),
                    }
                }
            }
        }
    }
    color.into_iter().map(|c| c.unwrap_or(false)).collect()
}

/// Chooses under-strand marks from the checkerboard coloring so the diagram
/// alternates: at every crossing the white corners become the pair not swept
/// by rotating the over-strand counterclockwise. Any 4-valent spherical map
/// admits exactly two such assignments (mirror images); this picks the one
/// anchored at each component's lowest crossing.
pub fn alternating_marks(pairing: Vec<Dart>, free_loops: usize) -> Diagram {
    let n = pairing.len() / 4;
    // Temporary decoration; faces do not depend on it.
    let mut d = Diagram::from_parts(pairing, vec![0; n], free_loops);
    let faces = d.faces();
    let color = checkerboard_coloring(&d, &faces);
    let mut under = vec![0u8; n];
    for (c, u) in under.iter_mut().enumerate() {
        let f0 = Diagram::face_at_corner(&faces, c, 0);
        let f1 = Diagram::face_at_corner(&faces, c, 1);
        let f2 = Diagram::face_at_corner(&faces, c, 2);
        let f3 = Diagram::face_at_corner(&faces, c, 3);
        debug_assert_eq!(color[f0], color[f2]);
        debug_assert_eq!(color[f1], color[f3]);
        debug_assert_ne!(color[f0], color[f1]);
        // White corner parity equals the under axis.
        *u = if color[f0] { 0 } else { 1 };
    }
    d.under_axis = under;
    d
}

#[cfg(test)]
mod tests;
