//! Property tests: the structural invariants that should hold for any seed.
//!
//! Domain objects are drawn through the crate's own deterministic sampler,
//! with proptest supplying the seeds; shrinking then walks toward the
//! smallest failing seed and sample index.

use proptest::prelude::*;

use schubert::coords::{z_to_zeta, zeta_to_z};
use schubert::resolution::{act, include, phi, tuple_coset_equal_bs, tuple_coset_equal_d};
use schubert::{
    coset_equal_gb, coset_equal_kt, iwasawa_factor, Sampler, Subgroup, Tolerances, Word,
};

fn tol() -> Tolerances {
    Tolerances::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn iwasawa_contract_holds(seed in any::<u64>(), n in 2usize..=6) {
        let tol = tol();
        let mut s = Sampler::new(seed);
        let g = s.special(n);
        let f = iwasawa_factor(&g, &tol).unwrap();
        prop_assert!(f.k.unitary_defect() <= tol.unitary);
        prop_assert!(f.a.is_member(Subgroup::A, &tol));
        prop_assert!(f.n.is_member(Subgroup::N, &tol));
        let recon = f.reconstruct();
        prop_assert!(recon.max_abs_diff(&g) <= tol.recon * g.norm_fro());
    }

    #[test]
    fn gb_coset_equality_is_an_equivalence(seed in any::<u64>()) {
        let tol = tol();
        let mut s = Sampler::new(seed);
        let g = s.special(3);
        // three representatives of one coset
        let g1 = &g * &s.borel(3);
        let g2 = &g * &s.borel(3);
        let g3 = &g * &s.borel(3);
        prop_assert!(coset_equal_gb(&g1, &g1, &tol).unwrap());
        prop_assert!(coset_equal_gb(&g1, &g2, &tol).unwrap());
        prop_assert!(coset_equal_gb(&g2, &g1, &tol).unwrap());
        prop_assert!(coset_equal_gb(&g2, &g3, &tol).unwrap());
        prop_assert!(coset_equal_gb(&g1, &g3, &tol).unwrap());
        // and k(g) stays in the coset of g
        let k = schubert::k_map(&g, &tol).unwrap();
        prop_assert!(coset_equal_gb(&g, &k, &tol).unwrap());
    }

    #[test]
    fn kt_coset_equality_is_an_equivalence(seed in any::<u64>()) {
        let tol = tol();
        let mut s = Sampler::new(seed);
        let k = s.unitary(3);
        let k1 = &k * &s.torus(3);
        let k2 = &k * &s.torus(3);
        prop_assert!(coset_equal_kt(&k1, &k1, &tol).unwrap());
        prop_assert!(coset_equal_kt(&k1, &k2, &tol).unwrap());
        prop_assert!(coset_equal_kt(&k2, &k1, &tol).unwrap());
        // k(g·b) ~ k(g) for b in the Borel subgroup
        let g = s.special(3);
        let b = s.borel(3);
        let lhs = schubert::k_map(&(&g * &b), &tol).unwrap();
        let rhs = schubert::k_map(&g, &tol).unwrap();
        prop_assert!(coset_equal_kt(&lhs, &rhs, &tol).unwrap());
    }

    #[test]
    fn theorem_holds_on_random_words(seed in any::<u64>(), n in 3usize..=5, len in 0usize..=5) {
        let tol = tol();
        let mut s = Sampler::new(seed);
        let word = s.word(n, len);
        // φ∘ι = id on compact tuples, exactly
        let k = s.compact_tuple(&word);
        let round = phi(&include(&k), &tol).unwrap();
        for (x, y) in round.slots().iter().zip(k.slots()) {
            prop_assert!(x.max_abs_diff(y) <= 1e-10);
        }
        // ι∘φ lands in the B^ℓ-orbit of the input
        let p = s.parabolic_tuple(&word);
        let back = include(&phi(&p, &tol).unwrap());
        prop_assert!(tuple_coset_equal_d(&back, &p, &tol).unwrap());
    }

    #[test]
    fn phi_descends_to_the_quotient(seed in any::<u64>()) {
        let tol = tol();
        let mut s = Sampler::new(seed);
        let word = Word::new(3, vec![1, 2, 1]).unwrap();
        let p = s.parabolic_tuple(&word);
        let b = s.borel_action(&word);
        let moved = phi(&act(&p, &b, &tol).unwrap(), &tol).unwrap();
        let fixed = phi(&p, &tol).unwrap();
        prop_assert!(tuple_coset_equal_bs(&moved, &fixed, &tol).unwrap());
    }

    #[test]
    fn coordinate_round_trip(seed in any::<u64>()) {
        let tol = tol();
        let mut s = Sampler::new(seed);
        let word = Word::new(3, vec![1, 2, 1]).unwrap();
        let zeta = s.chart_point(&word, 2.0);
        let z = zeta_to_z(&zeta, &tol).unwrap();
        let back = z_to_zeta(&z, &tol).unwrap();
        prop_assert!(back.max_abs_diff(&zeta) <= 1e-8);
    }

    #[test]
    fn words_survive_json(seed in any::<u64>(), n in 2usize..=6, len in 0usize..=8) {
        let mut s = Sampler::new(seed);
        let word = s.word(n, len);
        let js = serde_json::to_string(&word).unwrap();
        let back: Word = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(word, back);
    }
}
