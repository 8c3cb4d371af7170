use core::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unicrit_core::classes::{
    check_boundary_injective, check_brannan_form, check_noshiro_warschawski,
    check_positive_real_part, check_starlike,
};
use unicrit_core::poly::NormalizedPoly;
use unicrit_core::theorem::{
    canonical_polynomial, perturbation_profile, perturbation_threshold, perturbed_polynomial,
    proof_constants, proposition1_polynomial, proposition1_search, sample_disk, verify_equivalence,
    verify_proof_identity,
};
use unicrit_core::{Complex64, TrigPoly};

fn random_extremal(rng: &mut ChaCha8Rng, max_degree: usize, real_lead: bool) -> NormalizedPoly {
    let n = rng.random_range(2..=max_degree);
    let middle = sample_disk(rng, n - 2);
    let phase = if real_lead {
        0.0
    } else {
        rng.random_range(0.0..TAU)
    };
    NormalizedPoly::from_parts(&middle, Complex64::from_polar(1.0 / n as f64, phase)).unwrap()
}

#[test]
fn positive_real_part_forces_vanishing_middle() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut accepted = 0;
    for case in 0..100_000 {
        let n = rng.random_range(2..=8);
        let mut middle = sample_disk(&mut rng, n - 1);
        // a share of near-trivial cases so the implication is exercised
        if case % 10 == 0 {
            for c in &mut middle {
                *c *= 1e-12;
            }
        }
        let q = proposition1_polynomial(&middle);
        if check_positive_real_part(&q, 1e-10).verdict {
            accepted += 1;
            assert!(middle.iter().all(|c| c.norm() <= 1e-6), "case {case}");
        }
    }
    assert!(accepted >= 10_000);
}

#[test]
fn canonical_family_is_accepted_on_the_boundary() {
    for n in 2..=16 {
        let p = canonical_polynomial(n).unwrap();
        for report in [
            check_noshiro_warschawski(&p, 1e-9),
            check_starlike(&p, 1e-9),
        ] {
            assert!(report.verdict, "n = {n}");
            assert!(
                (-1e-10..=1e-8).contains(&report.min_value),
                "n = {n}: {}",
                report.min_value
            );
        }
        let eq = verify_equivalence(&p, 1e-9).unwrap();
        assert!(eq.all_true() && eq.consistent, "n = {n}");
    }
}

#[test]
fn canonical_starlike_boundary_closed_form() {
    for n in 2..=16 {
        let p = canonical_polynomial(n).unwrap();
        let boundary = check_starlike(&p, 1e-9).boundary;
        let w = (n + 1) as f64 / n as f64;
        let mut cos = vec![0.0; n - 1];
        cos[n - 2] = w;
        let expected = TrigPoly::new(w, cos, vec![]);
        assert!(boundary.max_coeff_diff(&expected) <= 1e-12, "n = {n}");
        // and pointwise against Re{z P' conj P} evaluated directly
        for m in 0..64 {
            let z = Complex64::from_polar(1.0, TAU * m as f64 / 64.0);
            let direct = (z * p.as_poly().derivative().eval(z) * p.as_poly().eval(z).conj()).re;
            assert!((boundary.eval(TAU * m as f64 / 64.0) - direct).abs() <= 1e-12);
        }
    }
}

#[test]
fn noshiro_warschawski_implies_brannan_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for case in 0..10_000 {
        let p = random_extremal(&mut rng, 8, false);
        if check_noshiro_warschawski(&p, 1e-9).verdict {
            assert!(check_brannan_form(&p, 1e-9), "case {case}");
        }
    }
}

#[test]
fn brannan_form_is_accepted_by_both_checkers() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in 2..=16 {
        let lambda = Complex64::from_polar(1.0, rng.random_range(0.0..TAU));
        let p = canonical_polynomial(n).unwrap().rotate(lambda).unwrap();
        assert!(check_brannan_form(&p, 1e-9));
        assert!(check_noshiro_warschawski(&p, 1e-9).verdict, "n = {n}");
        assert!(check_starlike(&p, 1e-9).verdict, "n = {n}");
    }
}

#[test]
fn proof_constants_closed_forms() {
    for n in 2..=64 {
        let c = proof_constants(n, &vec![Complex64::new(0.0, 0.0); n - 2]).unwrap();
        assert!(c.alpha_top.abs() <= 1e-14, "n = {n}");
        assert!(c.middle_weights().all(|w| w < 0.0), "n = {n}");
        // 1 - |C|^2 and 1/n - |C|^2 cancel exactly for the canonical middle
        assert!(c.alpha_zero.abs() <= 1e-14);
    }
}

#[test]
fn proof_identity_on_random_extremal_polynomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..1000 {
        let p = random_extremal(&mut rng, 12, true);
        let gap = verify_proof_identity(&p).unwrap();
        assert!(gap <= 1e-12, "case {case}: {gap:e}");
    }
}

#[test]
fn search_finds_no_counterexample() {
    for seed in 1..=32 {
        for n in 2..=8 {
            assert_eq!(
                proposition1_search(n, 10_000, seed).unwrap(),
                None,
                "seed {seed}, n {n}"
            );
        }
    }
}

#[test]
fn perturbations_are_rejected() {
    for n in 3..=8 {
        for k in 2..n {
            assert_eq!(
                perturbation_threshold(n, k, 1e-3, 1e-9).unwrap(),
                Some(1e-3),
                "n {n}, k {k}"
            );
            let rows = perturbation_profile(n, k, 1e-3, 1000, 1e-9).unwrap();
            assert!(rows[0].report.verdict);
            assert!(rows[1..].iter().all(|r| !r.report.verdict), "n {n}, k {k}");
        }
    }
}

#[test]
fn cubic_perturbation_minimum() {
    // 1 + 2 eps cos t + cos 2t on a dense grid
    for m in 1..=200 {
        let eps = m as f64 * 5e-3;
        let p = perturbed_polynomial(3, 2, eps).unwrap();
        let report = check_noshiro_warschawski(&p, 1e-9);
        let grid = (0..1 << 16)
            .map(|j| {
                let t = TAU * j as f64 / 65536.0;
                1.0 + 2.0 * eps * t.cos() + (2.0 * t).cos()
            })
            .fold(f64::INFINITY, f64::min);
        assert!((report.min_value - grid).abs() <= 1e-6, "eps {eps}");
        assert!(
            (report.min_value + eps * eps / 2.0).abs() <= 1e-6,
            "eps {eps}"
        );
    }
}

#[test]
fn boundary_injectivity_screen() {
    for n in 2..=12 {
        assert!(check_boundary_injective(
            &canonical_polynomial(n).unwrap(),
            1024
        ));
    }
    let fold = NormalizedPoly::from_parts(&[], Complex64::new(1.0, 0.0)).unwrap();
    assert!(!check_boundary_injective(&fold, 256));
}
