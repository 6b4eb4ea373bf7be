//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line with the measured worst deviation against its pinned tolerance.
//!
//! Run with `cargo test -p schubert-cli --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use std::process::Command;
use std::time::Instant;

use num_complex::Complex64;

use schubert::coords::{
    big_product_m, chart_point_rel_dev, closed_form_len2, closed_form_sl3, lu_d_closed,
    lu_k_closed, u_from_zeta, z_to_zeta, zeta_to_z, ChartPoint,
};
use schubert::iwasawa::{d_map, iwasawa_factor, k_map};
use schubert::resolution::{
    act, include, phi, rho, rho_k, tuple_coset_equal_d, ActionKind, ActionTuple,
};
use schubert::verify::{self, Suite, VerifyConfig};
use schubert::weyl::{simple_refl_rep, unipotent_param};
use schubert::{coset_equal_kt, Sampler, SquareMatrix, Subgroup, Tolerances, Word};

const SEED: u64 = 42;

fn report(criterion: &str, max_dev: f64, tol: f64, extra: &str) {
    let verdict = if max_dev <= tol { "PASS" } else { "FAIL" };
    println!("[acceptance] {criterion}: {verdict} (max_dev={max_dev:.3e}, tol={tol:.1e}{extra})");
    assert!(
        max_dev <= tol,
        "{criterion}: max deviation {max_dev:.3e} exceeds {tol:.1e}"
    );
}

fn sl3_word() -> Word {
    Word::new(3, vec![1, 2, 1]).unwrap()
}

fn sl4_word() -> Word {
    Word::new(4, vec![1, 2, 3, 1, 2, 1]).unwrap()
}

#[test]
fn criterion_01_sl3_closed_form_reproduction() {
    let tol = Tolerances::default();
    let word = sl3_word();
    let mut s = Sampler::new(SEED);
    let start = Instant::now();
    let mut max_dev = 0.0_f64;
    for _ in 0..1000 {
        let zeta = s.chart_point(&word, 2.0);
        let numeric = zeta_to_z(&zeta, &tol).unwrap();
        let closed = closed_form_sl3(&zeta).unwrap();
        max_dev = max_dev.max(chart_point_rel_dev(&numeric, &closed));
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() <= 2.0,
        "1000 samples took {elapsed:?}, budget is 2 s"
    );
    report(
        "01 sl3-closed-form",
        max_dev,
        1e-9,
        &format!(", elapsed={elapsed:?}"),
    );
}

#[test]
fn criterion_02_length_two_formula_sl4() {
    let tol = Tolerances::default();
    let mut s = Sampler::new(SEED);
    let mut max_dev = 0.0_f64;
    let mut max_orth = 0.0_f64;
    for (i, j) in [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)] {
        let word = Word::new(4, vec![i, j]).unwrap();
        for _ in 0..500 {
            let zeta = s.chart_point(&word, 2.0);
            let numeric = zeta_to_z(&zeta, &tol).unwrap();
            let closed = closed_form_len2(&zeta).unwrap();
            max_dev = max_dev.max(numeric.max_abs_diff(&closed));
            if i.abs_diff(j) >= 2 {
                max_orth = max_orth.max(numeric.max_abs_diff(&zeta));
            }
        }
    }
    report("02 length-2-closed-form", max_dev, 1e-10, "");
    report("02 length-2-orthogonal-identity", max_orth, 1e-12, "");
}

#[test]
fn criterion_03_theorem_both_directions() {
    let tol = Tolerances::default();
    let mut max_identity = 0.0_f64;
    for word in [sl3_word(), sl4_word()] {
        let mut s = Sampler::new(SEED);
        for _ in 0..500 {
            let k = s.compact_tuple(&word);
            let round = phi(&include(&k), &tol).unwrap();
            let dev = round
                .slots()
                .iter()
                .zip(k.slots())
                .map(|(x, y)| x.max_abs_diff(y))
                .fold(0.0, f64::max);
            max_identity = max_identity.max(dev);

            let p = s.parabolic_tuple(&word);
            let back = include(&phi(&p, &tol).unwrap());
            assert!(
                tuple_coset_equal_d(&back, &p, &tol).unwrap(),
                "include(phi(p)) left the B^l-orbit of p"
            );
        }
    }
    report("03 phi-include-identity", max_identity, 1e-10, "");
    println!("[acceptance] 03 include-phi-coset: PASS (1000/1000 tuples in-orbit)");
}

#[test]
fn criterion_04_equivariance_forced_witness() {
    let tol = Tolerances::default();
    let mut max_dev = 0.0_f64;
    for word in [sl3_word(), sl4_word()] {
        let mut s = Sampler::new(SEED);
        for _ in 0..500 {
            let p = s.parabolic_tuple(&word);
            let b = s.borel_action(&word);
            let lhs = phi(&act(&p, &b, &tol).unwrap(), &tol).unwrap();
            let witness: Vec<SquareMatrix> = b
                .slots()
                .iter()
                .map(|bj| k_map(bj, &tol).unwrap())
                .collect();
            let t = ActionTuple::new_unchecked(word.clone(), ActionKind::Torus, witness);
            let rhs = act(&phi(&p, &tol).unwrap(), &t, &tol).unwrap();
            let dev = lhs
                .slots()
                .iter()
                .zip(rhs.slots())
                .map(|(x, y)| x.max_abs_diff(y))
                .fold(0.0, f64::max);
            max_dev = max_dev.max(dev);
        }
    }
    report("04 lemma32-equivariance", max_dev, 1e-9, "");
}

#[test]
fn criterion_05_diagram_commutativity() {
    let tol = Tolerances::default();
    for word in [sl3_word(), sl4_word()] {
        let mut s = Sampler::new(SEED);
        for _ in 0..500 {
            let p = s.parabolic_tuple(&word);
            let lhs = k_map(&rho(&p), &tol).unwrap();
            let rhs = rho_k(&phi(&p, &tol).unwrap());
            assert!(
                coset_equal_kt(&lhs, &rhs, &tol).unwrap(),
                "k(rho(p)) and rho_K(phi(p)) disagree in K/T"
            );
        }
    }
    println!("[acceptance] 05 diagram-commutativity: PASS (1000/1000 samples commute)");
}

#[test]
fn criterion_06_iwasawa_contract() {
    let tol = Tolerances::default();
    let mut s = Sampler::new(SEED);
    let mut max_unitary = 0.0_f64;
    let mut max_recon = 0.0_f64;
    let mut max_equiv = 0.0_f64;
    for n in 2..=6 {
        for _ in 0..200 {
            let g = s.special(n);
            let f = iwasawa_factor(&g, &tol).unwrap();
            max_unitary = max_unitary.max(f.k.unitary_defect());
            let recon = f.reconstruct();
            let mut diff = 0.0;
            for r in 0..n {
                for c in 0..n {
                    diff += (recon[(r, c)] - g[(r, c)]).norm_sqr();
                }
            }
            max_recon = max_recon.max(diff.sqrt() / g.norm_fro());
            assert!(
                f.d().is_member(Subgroup::D, &tol),
                "d-factor is not triangular with positive diagonal"
            );

            let dp = s.solvable(n);
            let t = s.torus(n);
            let scale = |m: &SquareMatrix| m.norm_fro().max(1.0);
            let lhs = d_map(&(&g * &dp), &tol).unwrap();
            let rhs = &f.d() * &dp;
            max_equiv = max_equiv.max(lhs.max_abs_diff(&rhs) / scale(&rhs));
            max_equiv = max_equiv.max(k_map(&(&g * &dp), &tol).unwrap().max_abs_diff(&f.k));
            let lhs = d_map(&(&g * &t), &tol).unwrap();
            let rhs = &(&t.adjoint() * &f.d()) * &t;
            max_equiv = max_equiv.max(lhs.max_abs_diff(&rhs) / scale(&rhs));
            let lhs = k_map(&(&g * &t), &tol).unwrap();
            max_equiv = max_equiv.max(lhs.max_abs_diff(&(&f.k * &t)));
        }
    }
    report("06 iwasawa-unitarity", max_unitary, 1e-10, "");
    report("06 iwasawa-reconstruction", max_recon, 1e-10, "");
    report("06 iwasawa-equivariance", max_equiv, 1e-9, "");
}

#[test]
fn criterion_07_lu_closed_forms() {
    let tol = Tolerances::default();
    let mut s = Sampler::new(SEED);
    let mut max_dev = 0.0_f64;
    let mut count = 0;
    'outer: loop {
        for n in 2..=4 {
            for i in 1..n {
                if count == 1000 {
                    break 'outer;
                }
                count += 1;
                let z = s.complex_disk(3.0);
                let g = &unipotent_param(i, z, n) * &simple_refl_rep(i, n);
                let f = iwasawa_factor(&g, &tol).unwrap();
                max_dev = max_dev.max(f.k.max_abs_diff(&lu_k_closed(i, z, n)));
                max_dev = max_dev.max(f.d().max_abs_diff(&lu_d_closed(i, z, n)));
            }
        }
    }
    report("07 lemma43-closed-forms", max_dev, 1e-10, "");
}

#[test]
fn criterion_08_basic_lemmas() {
    // all applicable root pairs in SL(3) and SL(4), 200 samples each,
    // through the lemmas44to46 verification suite
    let mut max_dev = 0.0_f64;
    for n in [3, 4] {
        let cfg = VerifyConfig {
            n,
            word: Word::new(n, vec![]).unwrap(),
            seed: SEED,
            samples: 200,
            tol: Tolerances::default(),
        };
        let rep = verify::run(Suite::Lemmas44To46, &cfg).unwrap();
        assert!(rep.pass, "lemma suite failed for n={n}:\n{}", rep.human());
        for check in &rep.checks {
            max_dev = max_dev.max(check.max_dev);
        }
    }
    report("08 lemmas-44-to-46", max_dev, 1e-10, "");
}

#[test]
fn criterion_09_round_trip_and_inverse_point() {
    let tol = Tolerances::default();
    let word = sl3_word();
    let mut s = Sampler::new(SEED);
    let mut max_dev = 0.0_f64;
    for _ in 0..500 {
        let zeta = s.chart_point(&word, 2.0);
        let back = z_to_zeta(&zeta_to_z(&zeta, &tol).unwrap(), &tol).unwrap();
        max_dev = max_dev.max(back.max_abs_diff(&zeta));
    }
    report("09 round-trip", max_dev, 1e-8, "");

    let s3 = 3f64.sqrt();
    let z = ChartPoint::new(
        word.clone(),
        vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0 / 2f64.sqrt(), 0.0),
            Complex64::new(2.0 / s3, 1.0 / s3),
        ],
    )
    .unwrap();
    let want = ChartPoint::new(word, vec![Complex64::new(1.0, 0.0); 3]).unwrap();
    let dev = z_to_zeta(&z, &tol).unwrap().max_abs_diff(&want);
    report("09 worked-inverse-point", dev, 1e-9, "");
}

#[test]
fn criterion_10_u_coordinates() {
    let tol = Tolerances::default();
    let word = sl3_word();
    let mut s = Sampler::new(SEED);
    let mut max_dev = 0.0_f64;
    for _ in 0..200 {
        let zeta = s.chart_point(&word, 2.0);
        let m = big_product_m(&zeta, &tol).unwrap();
        let u = u_from_zeta(&zeta).unwrap();
        max_dev = max_dev.max((m[(0, 1)] - u[0]).norm());
        max_dev = max_dev.max((m[(1, 2)] - u[1]).norm());
        max_dev = max_dev.max((m[(0, 2)] - u[2]).norm());
    }
    report("10 u-coordinates", max_dev, 1e-12, "");
}

#[test]
fn criterion_11_cli_determinism() {
    let mut identical = true;
    for suite in ["iwasawa", "theorem33", "sl3", "len2"] {
        let (args_n, args_word): (&str, &str) = match suite {
            "len2" => ("4", "1,2"),
            "iwasawa" => ("4", "1,2,1"),
            _ => ("3", "1,2,1"),
        };
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_schubert"))
                .args([
                    "verify",
                    suite,
                    "--n",
                    args_n,
                    "--word",
                    args_word,
                    "--seed",
                    "42",
                    "--samples",
                    "50",
                    "--output",
                    "json",
                ])
                .output()
                .expect("run schubert verify")
        };
        let first = run();
        let second = run();
        assert!(
            first.status.success(),
            "suite {suite} failed:\n{}",
            String::from_utf8_lossy(&first.stdout)
        );
        identical &= first.stdout == second.stdout;
        assert_eq!(
            first.stdout, second.stdout,
            "suite {suite} produced different bytes across runs"
        );
    }
    assert!(identical);
    println!("[acceptance] 11 cli-determinism: PASS (byte-identical reports across reruns)");
}
