use super::*;
use std::collections::BTreeMap;

pub(crate) const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
pub(crate) const HOPF: &str = "X(2,4,1,3) X(3,1,4,2)";
pub(crate) const CURL: &str = "X(1,1,2,2)";
pub(crate) const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
pub(crate) const BORROMEAN: &str =
    "X(4,9,1,12) X(8,1,5,2) X(9,6,10,5) X(6,4,7,3) X(11,7,12,8) X(2,10,3,11)";

fn census(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    pairs.iter().copied().collect()
}

#[test]
fn parse_trefoil_counts() {
    let d = parse_diagram(TREFOIL).unwrap();
    assert_eq!(d.n_crossings(), 3);
    assert_eq!(d.n_darts(), 12);
    assert_eq!(d.free_loops(), 0);
    assert_eq!(d.faces().orbits.len(), 5);
    assert!(d.is_spherical());
}

#[test]
fn parse_free_loop() {
    let d = parse_diagram("O").unwrap();
    assert_eq!(d.n_crossings(), 0);
    assert_eq!(d.free_loops(), 1);
    assert_eq!(d.components(), 1);
}

#[test]
fn parse_label_used_once() {
    match parse_diagram("X(1,2,3,4)") {
        Err(ParseError::EdgeLabelNotUsedTwice(_, 1)) => {}
        other => panic!("expected EdgeLabelNotUsedTwice, got {other:?}"),
    }
}

#[test]
fn parse_rejects_toroidal_map() {
    assert_eq!(
        parse_diagram("X(1,2,1,2)"),
        Err(ParseError::NonSphericalEmbedding)
    );
}

#[test]
fn parse_malformed() {
    assert!(matches!(
        parse_diagram("X(1,2,3"),
        Err(ParseError::MalformedRecord(_))
    ));
    assert!(matches!(
        parse_diagram("Y(1,2,3,4)"),
        Err(ParseError::MalformedRecord(_))
    ));
}

#[test]
fn json_mirror_round_trip() {
    let d = parse_diagram(TREFOIL).unwrap();
    let d2 = parse_diagram_json(&d.to_json()).unwrap();
    assert_eq!(canonical_code(&d, false), canonical_code(&d2, false));
    let d3 = parse_diagram(&d.to_pd()).unwrap();
    assert_eq!(canonical_code(&d, false), canonical_code(&d3, false));
}

#[test]
fn validate_trefoil() {
    let d = parse_diagram(TREFOIL).unwrap();
    let r = d.validate();
    assert!(r.connected);
    assert!(r.alternating);
    assert_eq!(r.components, 1);
}

#[test]
fn validate_flipped_crossing_not_alternating() {
    let mut d = parse_diagram(TREFOIL).unwrap();
    d.under_axis[0] = 1;
    assert!(!d.validate().alternating);
}

#[test]
fn validate_two_trefoils() {
    let two = format!("{TREFOIL} X(7,10,8,11) X(9,12,10,7) X(11,8,12,9)");
    let d = parse_diagram(&two).unwrap();
    let r = d.validate();
    assert!(!r.connected);
    assert_eq!(r.components, 2);
    assert!(r.alternating);
}

#[test]
fn face_census_values() {
    assert_eq!(
        parse_diagram(TREFOIL).unwrap().face_census().total,
        census(&[(2, 3), (3, 2)])
    );
    assert_eq!(
        parse_diagram(BORROMEAN).unwrap().face_census().total,
        census(&[(3, 8)])
    );
    assert_eq!(
        parse_diagram(HOPF).unwrap().face_census().total,
        census(&[(2, 4)])
    );
    assert_eq!(
        parse_diagram(CURL).unwrap().face_census().total,
        census(&[(1, 2), (2, 1)])
    );
}

#[test]
fn borromean_shape() {
    let d = parse_diagram(BORROMEAN).unwrap();
    let r = d.validate();
    assert!(r.connected && r.alternating);
    // Three circles, each passing four crossings.
    let mut seen = vec![false; d.n_darts()];
    let mut strand_orbits = 0;
    for d0 in 0..d.n_darts() {
        if seen[d0] {
            continue;
        }
        strand_orbits += 1;
        let mut x = d0;
        loop {
            seen[x] = true;
            x = d.strand_next(x);
            if x == d0 {
                break;
            }
        }
    }
    assert_eq!(strand_orbits / 2, 3);
}

#[test]
fn euler_identity_examples() {
    assert_eq!(
        parse_diagram(BORROMEAN).unwrap().euler_identity_residual(),
        Ok(0)
    );
    assert_eq!(
        parse_diagram(TREFOIL).unwrap().euler_identity_residual(),
        Err(DiagramError::PreconditionFaceTooSmall(2))
    );
}

#[test]
fn census_identities_hold() {
    for pd in [TREFOIL, HOPF, CURL, FIGURE_EIGHT, BORROMEAN] {
        let d = parse_diagram(pd).unwrap();
        let census = d.face_census();
        let f: usize = census.total.values().sum();
        let corners: usize = census.total.iter().map(|(k, n)| k * n).sum();
        assert_eq!(f, d.faces().orbits.len());
        assert_eq!(corners, 4 * d.n_crossings());
    }
}

#[test]
fn smooth_hopf_both_choices() {
    let d = parse_diagram(HOPF).unwrap();
    let a = d.smooth(0, Smoothing::A).unwrap();
    let b = d.smooth(0, Smoothing::B).unwrap();
    for r in [&a, &b] {
        assert_eq!(r.n_crossings(), 1);
        assert!(r.is_spherical());
        assert!(r.is_alternating());
    }
    assert_ne!(canonical_code(&a, false), canonical_code(&b, false));
    // The two choices are mirror images of each other here.
    assert_eq!(canonical_code(&a, true), canonical_code(&b, true));
}

#[test]
fn smooth_trefoil() {
    let d = parse_diagram(TREFOIL).unwrap();
    let s = d.smooth(1, Smoothing::A).unwrap();
    assert_eq!(s.n_crossings(), 2);
    assert_eq!(s.components(), 1);
    assert!(s.is_alternating());
}

#[test]
fn smooth_preserves_alternation_and_count() {
    for pd in [TREFOIL, HOPF, CURL, FIGURE_EIGHT, BORROMEAN] {
        let d = parse_diagram(pd).unwrap();
        for c in 0..d.n_crossings() {
            for choice in [Smoothing::A, Smoothing::B] {
                let s = d.smooth(c, choice).unwrap();
                assert_eq!(s.n_crossings(), d.n_crossings() - 1);
                assert!(s.is_spherical());
                assert!(s.is_alternating(), "smoothing {c} {choice:?} of {pd}");
            }
        }
    }
}

#[test]
fn smooth_curl_choices() {
    let d = parse_diagram(CURL).unwrap();
    // One reconnection keeps a single circle, the other pinches off two.
    let a = d.smooth(0, Smoothing::A).unwrap();
    let b = d.smooth(0, Smoothing::B).unwrap();
    let mut loops: Vec<usize> = vec![a.free_loops(), b.free_loops()];
    loops.sort_unstable();
    assert_eq!(loops, vec![1, 2]);
}

#[test]
fn canonical_code_relabeling_invariance() {
    let d = parse_diagram(TREFOIL).unwrap();
    let relabeled = parse_diagram("X(10,40,20,50) X(30,60,40,10) X(50,20,60,30)").unwrap();
    let permuted = parse_diagram("X(3,6,4,1) X(5,2,6,3) X(1,4,2,5)").unwrap();
    assert_eq!(canonical_code(&d, false), canonical_code(&relabeled, false));
    assert_eq!(canonical_code(&d, false), canonical_code(&permuted, false));
}

#[test]
fn canonical_code_mirror() {
    let d = parse_diagram(TREFOIL).unwrap();
    let m = d.mirror();
    assert!(m.is_alternating());
    assert_ne!(canonical_code(&d, false), canonical_code(&m, false));
    assert_eq!(canonical_code(&d, true), canonical_code(&m, true));
}

#[test]
fn canonical_code_distinguishes() {
    let t = parse_diagram(TREFOIL).unwrap();
    let h = parse_diagram(HOPF).unwrap();
    assert_ne!(canonical_code(&t, true), canonical_code(&h, true));
}

#[test]
fn canonical_code_random_rotations() {
    // Slot-rotation relabelings of the same map must collide.
    let d = parse_diagram(BORROMEAN).unwrap();
    let base = canonical_code(&d, false);
    for rot in 0..4usize {
        let mut pairing = vec![0; d.n_darts()];
        let shift = |x: Dart| -> Dart {
            Diagram::dart(Diagram::crossing_of(x), (Diagram::slot_of(x) + rot) & 3)
        };
        for x in 0..d.n_darts() {
            pairing[shift(x)] = shift(d.pairing(x));
        }
        let under_axis = d.under_axis.iter().map(|&u| (u + rot as u8) & 1).collect();
        let r = Diagram::from_parts(pairing, under_axis, 0);
        assert!(r.is_alternating());
        assert_eq!(canonical_code(&r, false), base);
    }
}

#[test]
fn goeritz_hopf() {
    let d = parse_diagram(HOPF).unwrap();
    let g = goeritz_matrix(&d).unwrap();
    assert_eq!(g.matrix.len(), 1);
    assert_eq!(g.matrix[0][0].abs(), 2);
}

#[test]
fn goeritz_trefoil_and_borromean() {
    let t = parse_diagram(TREFOIL).unwrap();
    assert_eq!(
        int_determinant(&goeritz_matrix(&t).unwrap().matrix).abs(),
        3
    );
    let b = parse_diagram(BORROMEAN).unwrap();
    let g = goeritz_matrix(&b).unwrap();
    assert_eq!(g.matrix.len(), 3);
    assert_eq!(int_determinant(&g.matrix).abs(), 16);
}

#[test]
fn goeritz_errors() {
    assert_eq!(
        goeritz_matrix(&Diagram::crossingless(1)).unwrap_err(),
        DiagramError::Crossingless
    );
    let two = format!("{TREFOIL} O");
    assert_eq!(
        goeritz_matrix(&parse_diagram(&two).unwrap()).unwrap_err(),
        DiagramError::NotConnected
    );
}

#[test]
fn determinant_values() {
    assert_eq!(link_determinant(&parse_diagram("O").unwrap()), 1);
    assert_eq!(link_determinant(&parse_diagram(TREFOIL).unwrap()), 3);
    assert_eq!(link_determinant(&parse_diagram(HOPF).unwrap()), 2);
    assert_eq!(link_determinant(&parse_diagram(FIGURE_EIGHT).unwrap()), 5);
    assert_eq!(link_determinant(&parse_diagram(BORROMEAN).unwrap()), 16);
    assert_eq!(link_determinant(&parse_diagram(CURL).unwrap()), 1);
    // Split diagrams have determinant zero.
    let split = format!("{TREFOIL} O");
    assert_eq!(link_determinant(&parse_diagram(&split).unwrap()), 0);
}

#[test]
fn split_components_round_trip() {
    let two = format!("{TREFOIL} {HOPF} O");
    let two = two.replacen("X(2,4,1,3) X(3,1,4,2)", "X(20,40,10,30) X(30,10,40,20)", 1);
    let d = parse_diagram(&two).unwrap();
    let (parts, loops) = d.split_components();
    assert_eq!(parts.len(), 2);
    assert_eq!(loops, 1);
    let mut codes: Vec<_> = parts.iter().map(|p| canonical_code(p, false)).collect();
    codes.sort();
    let mut expected = vec![
        canonical_code(&parse_diagram(TREFOIL).unwrap(), false),
        canonical_code(&parse_diagram(HOPF).unwrap(), false),
    ];
    expected.sort();
    assert_eq!(codes, expected);
}

#[test]
fn alternating_marks_reconstruction() {
    // Strip the decoration from an alternating diagram; the checkerboard
    // rule must restore an alternating assignment.
    for pd in [TREFOIL, HOPF, FIGURE_EIGHT, BORROMEAN, CURL] {
        let d = parse_diagram(pd).unwrap();
        let rebuilt = alternating_marks(d.pairing.clone(), d.free_loops());
        assert!(rebuilt.is_alternating(), "{pd}");
        assert_eq!(
            canonical_code(&rebuilt, true),
            canonical_code(&d, true),
            "{pd}: checkerboard assignment should agree up to reflection"
        );
    }
}
