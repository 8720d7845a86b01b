use super::*;
use crate::awtree::{build_matrix, determinant, enumerate_trees, AWTree, Sign, Weight};
use crate::diagram::{canonical_code, link_determinant, parse_diagram};
use crate::reduce::DEFAULT_BUDGET;

fn tree(spec: &str) -> AWTree {
    AWTree::parse(spec).unwrap()
}

#[test]
fn realize_single_vertex() {
    let r = realize_tree(&tree("v0 + 0"));
    assert_eq!(r.word(), &[0, 0]);
    assert!(r.is_realization_of(&tree("v0 + 0")));
}

#[test]
fn realize_path_two_interleaves() {
    let t = tree("v0 + 1\nv1 - 1\ne 0 1");
    let r = realize_tree(&t);
    assert_eq!(r.word(), &[0, 1, 0, 1]);
    assert!(r.is_realization_of(&t));
}

#[test]
fn realize_star() {
    let t = tree("v0 + 1\nv1 - 1\nv2 - 1\nv3 - 1\ne 0 1\ne 0 2\ne 0 3");
    let r = realize_tree(&t);
    assert!(r.is_realization_of(&t));
    // Center arc interleaved by three pairwise non-interleaving leaves.
    assert!(r.interleaves(0, 1) && r.interleaves(0, 2) && r.interleaves(0, 3));
    assert!(!r.interleaves(1, 2) && !r.interleaves(1, 3) && !r.interleaves(2, 3));
}

#[test]
fn realize_every_enumerated_tree() {
    for t in enumerate_trees(6).unwrap() {
        let r = realize_tree(&t);
        assert!(r.is_realization_of(&t), "{}", t.to_text());
    }
}

#[test]
fn realization_text_shape() {
    let r = realize_tree(&tree("v0 + 1\nv1 - 1\ne 0 1"));
    let text = r.to_text();
    assert!(text.starts_with("A B A B\n"));
    assert!(text.contains("A + 1 v0"));
    assert!(text.contains("B - 1 v1"));
}

#[test]
fn induce_single_zero_arc_splits_axis() {
    let d = induced_diagram_of_tree(&tree("v0 + 0")).unwrap();
    assert_eq!(d.n_crossings(), 0);
    assert_eq!(d.free_loops(), 2);
    assert_eq!(link_determinant(&d), 0);
}

#[test]
fn induce_single_one_arc_is_a_curl() {
    for spec in ["v0 + 1", "v0 - 1"] {
        let d = induced_diagram_of_tree(&tree(spec)).unwrap();
        assert_eq!(d.n_crossings(), 1);
        assert_eq!(d.components(), 1);
        assert!(d.is_alternating());
        assert_eq!(link_determinant(&d), 1);
    }
}

#[test]
fn induce_single_infinity_arc_is_the_bare_axis() {
    let d = induced_diagram_of_tree(&tree("v0 + inf")).unwrap();
    assert_eq!(d.n_crossings(), 0);
    assert_eq!(d.free_loops(), 1);
    assert_eq!(link_determinant(&d), 1);
}

#[test]
fn induce_path_two_is_hopf() {
    let d = induced_diagram_of_tree(&tree("v0 + 1\nv1 - 1\ne 0 1")).unwrap();
    assert_eq!(d.n_crossings(), 2);
    assert_eq!(d.components(), 1);
    assert!(d.is_alternating());
    assert_eq!(link_determinant(&d), 2);
    let hopf = parse_diagram("X(2,4,1,3) X(3,1,4,2)").unwrap();
    assert_eq!(canonical_code(&d, true), canonical_code(&hopf, true));
}

#[test]
fn induce_path_three_matches_determinant() {
    let t = tree("v0 + 1\nv1 - 1\nv2 + 1\ne 0 1\ne 1 2");
    let d = induced_diagram_of_tree(&t).unwrap();
    assert_eq!(d.n_crossings(), 3);
    assert!(d.is_alternating());
    assert_eq!(link_determinant(&d), 3);
    assert_eq!(determinant(&build_matrix(&t, None)).unsigned_abs(), 3);
}

#[test]
fn induce_crossing_budget_is_weight_one_count() {
    for t in enumerate_trees(5).unwrap() {
        let ones = (0..t.n_vertices())
            .filter(|&v| t.weight(v) == Weight::One)
            .count();
        let d = induced_diagram_of_tree(&t).unwrap();
        assert_eq!(d.n_crossings(), ones, "{}", t.to_text());
    }
}

#[test]
fn determinant_conservation_on_enumeration() {
    for t in enumerate_trees(5).unwrap() {
        let d = induced_diagram_of_tree(&t).unwrap();
        let td = determinant(&build_matrix(&t, None)).unsigned_abs();
        assert_eq!(link_determinant(&d), td, "{}", t.to_text());
    }
}

#[test]
fn reverse_base_case_unknot() {
    let d = parse_diagram("O").unwrap();
    let cert = match crate::reduce::decide_b_reducible(&d, DEFAULT_BUDGET) {
        crate::reduce::Reducibility::Found(c) => c,
        _ => unreachable!(),
    };
    let (t, r) = diagram_to_tree(&d, &cert).unwrap();
    assert_eq!(t.n_vertices(), 0);
    assert_eq!(r.n_arcs(), 0);
    assert_eq!(determinant(&build_matrix(&t, None)), 1);
}

#[test]
fn reverse_two_unknots() {
    let d = parse_diagram("O O").unwrap();
    let cert = match crate::reduce::decide_b_reducible(&d, DEFAULT_BUDGET) {
        crate::reduce::Reducibility::Found(c) => c,
        _ => unreachable!(),
    };
    let (t, _) = diagram_to_tree(&d, &cert).unwrap();
    assert_eq!(t.n_vertices(), 1);
    assert_eq!(t.weight(0), Weight::Zero);
    assert_eq!(determinant(&build_matrix(&t, None)), 0);
}

#[test]
fn reverse_trefoil() {
    let d = parse_diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
    let cert = match crate::reduce::decide_b_reducible(&d, DEFAULT_BUDGET) {
        crate::reduce::Reducibility::Found(c) => c,
        _ => unreachable!(),
    };
    let (t, r) = diagram_to_tree(&d, &cert).unwrap();
    assert_eq!(t.n_vertices(), 3);
    assert_eq!(determinant(&build_matrix(&t, None)).unsigned_abs(), 3);
    assert!(r.is_realization_of(&t));
}

#[test]
fn reverse_rejects_foreign_certificate() {
    let trefoil = parse_diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
    let cert = match crate::reduce::decide_b_reducible(&trefoil, DEFAULT_BUDGET) {
        crate::reduce::Reducibility::Found(c) => c,
        _ => unreachable!(),
    };
    let hopf = parse_diagram("X(2,4,1,3) X(3,1,4,2)").unwrap();
    assert!(matches!(
        diagram_to_tree(&hopf, &cert),
        Err(MontesinosError::CertificateInvalid(_))
    ));
}

#[test]
fn roundtrip_examples() {
    let r = roundtrip_verify(&tree("v0 + 1"), DEFAULT_BUDGET).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.tree_det, 1);

    let r = roundtrip_verify(
        &tree("v0 + 1\nv1 - 1\nv2 + 1\ne 0 1\ne 1 2"),
        DEFAULT_BUDGET,
    )
    .unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.tree_det, 3);
    assert_eq!(r.diagram_det, 3);
    assert_eq!(r.reverse_det, 3);
}

#[test]
fn roundtrip_every_tree_up_to_four() {
    for t in enumerate_trees(4).unwrap() {
        let report = roundtrip_verify(&t, DEFAULT_BUDGET).unwrap();
        assert!(
            report.passed(),
            "tree:\n{}\nreport: {report:?}",
            t.to_text()
        );
    }
}

#[test]
fn isolated_vertices_give_unknots_with_curls() {
    // Two isolated one-weight vertices: a circle with two curls.
    let t = AWTree::new(vec![Sign::Plus, Sign::Plus], vec![Weight::One; 2], vec![]).unwrap();
    let d = induced_diagram_of_tree(&t).unwrap();
    assert_eq!(d.n_crossings(), 2);
    assert_eq!(d.components(), 1);
    assert_eq!(link_determinant(&d), 1);
    // Path through an infinity middle vertex: same picture.
    let via_inf = tree("v0 + 1\nv1 - inf\nv2 + 1\ne 0 1\ne 1 2");
    let d2 = induced_diagram_of_tree(&via_inf).unwrap();
    assert_eq!(d2.n_crossings(), 2);
    assert_eq!(link_determinant(&d2), 1);
}
