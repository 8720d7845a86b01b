//! Cross-module integration checks: the Goeritz determinant against the
//! state-sum oracle over a diagram pool closed under smoothing, and
//! canonical-code completeness under randomized re-encodings.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use redlink::diagram::{
    canonical_code, library, link_determinant, parse_diagram, Diagram, Smoothing,
};
use redlink_oracle::determinant_by_state_sum;

fn pool() -> Vec<Diagram> {
    let mut out = vec![
        parse_diagram("O").unwrap(),
        parse_diagram("X(1,1,2,2)").unwrap(),
        parse_diagram("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap(),
        library::borromean(),
        library::antiprism(4),
    ];
    for n in 2..=7 {
        out.push(library::torus_two_strand(n));
    }
    out
}

#[test]
fn determinants_agree_on_pool_and_smoothings() {
    let mut checked = 0usize;
    for d in pool() {
        assert_eq!(link_determinant(&d), determinant_by_state_sum(&d));
        checked += 1;
        for c in 0..d.n_crossings() {
            for choice in [Smoothing::A, Smoothing::B] {
                let s = d.smooth(c, choice).unwrap();
                assert_eq!(
                    link_determinant(&s),
                    determinant_by_state_sum(&s),
                    "smoothing {c} {choice:?}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 80);
}

#[test]
fn determinants_agree_under_random_multi_smoothing() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for seed_diagram in [
        library::antiprism(4),
        library::borromean(),
        library::torus_two_strand(7),
    ] {
        for _ in 0..40 {
            let mut d = seed_diagram.clone();
            while d.n_crossings() > 0 && rng.gen_bool(0.7) {
                let c = rng.gen_range(0..d.n_crossings());
                let choice = if rng.gen_bool(0.5) {
                    Smoothing::A
                } else {
                    Smoothing::B
                };
                d = d.smooth(c, choice).unwrap();
            }
            assert_eq!(link_determinant(&d), determinant_by_state_sum(&d));
        }
    }
}

#[test]
fn canonical_code_is_complete_on_the_pool() {
    // Distinct pool members never collide; random re-encodings always do.
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let pool = pool();
    for (i, a) in pool.iter().enumerate() {
        for b in pool.iter().skip(i + 1) {
            assert_ne!(canonical_code(a, true), canonical_code(b, true));
        }
    }
    for d in &pool {
        let base = canonical_code(d, false);
        for _ in 0..10 {
            let relabeled = shuffle_representation(d, &mut rng);
            assert_eq!(canonical_code(&relabeled, false), base);
            assert_eq!(
                canonical_code(&relabeled.mirror(), true),
                canonical_code(d, true)
            );
        }
    }
}

/// Re-encodes the same decorated map: random crossing permutation plus a
/// random slot rotation at each crossing.
fn shuffle_representation(d: &Diagram, rng: &mut ChaCha8Rng) -> Diagram {
    let n = d.n_crossings();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let rots: Vec<usize> = (0..n).map(|_| rng.gen_range(0..4)).collect();
    let map = |dart: usize| -> usize {
        let (c, s) = (Diagram::crossing_of(dart), Diagram::slot_of(dart));
        Diagram::dart(perm[c], (s + rots[c]) & 3)
    };
    let mut pairing = vec![0; d.n_darts()];
    for dart in 0..d.n_darts() {
        pairing[map(dart)] = map(d.pairing(dart));
    }
    let mut under = vec![0u8; n];
    for c in 0..n {
        under[perm[c]] = ((d.under_axis(c) as usize + rots[c]) & 1) as u8;
    }
    Diagram::from_parts(pairing, under, d.free_loops())
}

#[test]
fn reduction_results_are_mirror_invariant() {
    use redlink::reduce::{decide_b_reducible, Reducibility, DEFAULT_BUDGET};
    for d in pool() {
        let a = matches!(
            decide_b_reducible(&d, DEFAULT_BUDGET),
            Reducibility::Found(_)
        );
        let b = matches!(
            decide_b_reducible(&d.mirror(), DEFAULT_BUDGET),
            Reducibility::Found(_)
        );
        assert_eq!(a, b);
        assert_eq!(link_determinant(&d), link_determinant(&d.mirror()));
    }
}
