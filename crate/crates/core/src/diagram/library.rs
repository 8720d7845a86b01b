//! Constructors for the standard diagrams used across the test corpora.

use super::{alternating_marks, Dart, Diagram};

/// Closed two-strand twist region with `n` crossings: the alternating
/// (2,n) torus link diagram. `n = 2` is the Hopf diagram, `n = 3` the
/// trefoil.
pub fn torus_two_strand(n: usize) -> Diagram {
    assert!(n >= 1);
    // Slots per crossing, counterclockwise: 0 = SW, 1 = SE, 2 = NE, 3 = NW.
    // Crossing i+1 sits above i; the closure joins top of the stack to the
    // bottom around the outside.
    let mut pairing = vec![0 as Dart; 4 * n];
    let mut join = |a: Dart, b: Dart| {
        pairing[a] = b;
        pairing[b] = a;
    };
    for i in 0..n {
        let up = (i + 1) % n;
        join(Diagram::dart(i, 2), Diagram::dart(up, 1)); // NE -> SE above
        join(Diagram::dart(i, 3), Diagram::dart(up, 0)); // NW -> SW above
    }
    alternating_marks(pairing, 0)
}

/// The `n`-antiprism map with alternating decoration: outer and inner
/// `n`-gons joined by a belt of `2n` triangles. `n = 3` is the standard
/// Borromean rings diagram, `n = 4` the standard diagram of the knot 8_18.
pub fn antiprism(n: usize) -> Diagram {
    assert!(n >= 3);
    // Crossings 0..n are the outer polygon, n..2n the inner one.
    // Outer vertex i slots (counterclockwise, outward normal pointing away
    // from the center): 0 = next outer, 1 = inner i+1, 2 = inner i,
    // 3 = previous outer.
    // Inner vertex i slots: 0 = inner i+1, 1 = outer i, 2 = outer i-1,
    // 3 = inner i-1.
    let outer = |i: usize| i % n;
    let inner = |i: usize| n + i % n;
    let mut pairing = vec![0 as Dart; 8 * n];
    let mut join = |a: Dart, b: Dart| {
        pairing[a] = b;
        pairing[b] = a;
    };
    // Inner vertex i sits between outer vertices i-1 and i. Counterclockwise
    // slot order, outer vertex i: next outer, inner i+1, inner i, previous
    // outer; inner vertex i: outer i, inner i+1, inner i-1, outer i-1.
    for i in 0..n {
        join(Diagram::dart(outer(i), 0), Diagram::dart(outer(i + 1), 3));
        join(Diagram::dart(inner(i), 1), Diagram::dart(inner(i + 1), 2));
        join(Diagram::dart(outer(i), 2), Diagram::dart(inner(i), 0));
        join(Diagram::dart(outer(i), 1), Diagram::dart(inner(i + 1), 3));
    }
    alternating_marks(pairing, 0)
}

/// The fixed six-crossing Borromean rings diagram.
pub fn borromean() -> Diagram {
    antiprism(3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{canonical_code, link_determinant, parse_diagram};

    /// Number of circles of the underlying link: strand orbits / 2.
    fn link_components(d: &Diagram) -> usize {
        let mut seen = vec![false; d.n_darts()];
        let mut orbits = 0;
        for d0 in 0..d.n_darts() {
            if seen[d0] {
                continue;
            }
            orbits += 1;
            let mut x = d0;
            loop {
                seen[x] = true;
                x = d.strand_next(x);
                if x == d0 {
                    break;
                }
            }
        }
        orbits / 2
    }

    #[test]
    fn torus_diagrams() {
        for n in 2..=7 {
            let d = torus_two_strand(n);
            assert!(d.is_spherical(), "n={n}");
            assert!(d.is_alternating(), "n={n}");
            assert_eq!(d.components(), 1, "n={n}");
            assert_eq!(link_components(&d), if n % 2 == 0 { 2 } else { 1 }, "n={n}");
            assert_eq!(link_determinant(&d), n as u64, "n={n}");
            let census: Vec<(usize, usize)> = d.face_census().total.into_iter().collect();
            if n == 2 {
                assert_eq!(census, vec![(2, 4)]);
            } else {
                assert_eq!(census, vec![(2, n), (n, 2)]);
            }
        }
    }

    #[test]
    fn torus_three_is_trefoil() {
        let t = torus_two_strand(3);
        let reference = parse_diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(canonical_code(&t, true), canonical_code(&reference, true));
    }

    #[test]
    fn antiprism_three_is_borromean() {
        let a = borromean();
        let reference = parse_diagram(
            "X(4,9,1,12) X(8,1,5,2) X(9,6,10,5) X(6,4,7,3) X(11,7,12,8) X(2,10,3,11)",
        )
        .unwrap();
        assert_eq!(canonical_code(&a, true), canonical_code(&reference, true));
        assert_eq!(link_determinant(&a), 16);
    }

    #[test]
    fn antiprism_four_is_eight_eighteen() {
        let d = antiprism(4);
        assert!(d.is_spherical());
        assert!(d.is_alternating());
        assert_eq!(d.components(), 1);
        assert_eq!(link_components(&d), 1);
        let census: Vec<(usize, usize)> = d.face_census().total.into_iter().collect();
        assert_eq!(census, vec![(3, 8), (4, 2)]);
        assert_eq!(d.euler_identity_residual(), Ok(0));
        assert_eq!(link_determinant(&d), 45);
    }
}
