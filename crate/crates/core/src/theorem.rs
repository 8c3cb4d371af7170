//! Harness for the equivalence theorem on extremal polynomials.
//!
//! For `P(z) = z + a_2 z^2 + ... + a_n z^n` univalent with `|a_n| = 1/n` the
//! following are equivalent:
//!
//! * (a) `Re P' > 0` in the disk,
//! * (b) `a_2 = ... = a_{n-1} = 0`,
//! * (c) `P` is starlike.
//!
//! This module runs all three checkers on a polynomial, searches randomly
//! for counterexamples to the positivity lemma behind (a) ⇒ (b), and
//! evaluates the lag-`0` and lag-`(n-1)` coefficients of the trigonometric
//! identity behind (c) ⇒ (b) both in closed form and from the product.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{
    check_boundary_injective, check_brannan_form, check_noshiro_warschawski,
    check_positive_real_part, check_starlike, ClassReport,
};
use crate::error::{Error, Result};
use crate::poly::{ComplexPoly, NormalizedPoly};
use crate::roots::roots_of_minus_one;
use crate::trig::trig_product_real;

/// Middle coefficients above this modulus make a positive `Q` a
/// counterexample.
pub const COUNTEREXAMPLE_GATE: f64 = 1e-6;
/// Tolerance handed to [`check_positive_real_part`] by the search.
pub const SEARCH_TOL: f64 = 1e-10;
/// Minimum sample count of the univalence screen.
pub const SCREEN_SAMPLES: usize = 1024;

/// `z + z^n / n`
pub fn canonical_polynomial(n: usize) -> Result<NormalizedPoly> {
    if n < 2 {
        return Err(Error::InvalidDegree {
            degree: n,
            reason: "the canonical polynomial needs n >= 2",
        });
    }
    let middle = alloc::vec![Complex64::new(0.0, 0.0); n - 2];
    NormalizedPoly::from_parts(&middle, Complex64::new(1.0 / n as f64, 0.0))
}

/// Outcome of running the three checkers on one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    pub n: usize,
    /// Noshiro–Warschawski membership, item (a).
    pub verdict_a: ClassReport,
    /// Brannan normal form, item (b).
    pub verdict_b: bool,
    /// Starlikeness, item (c).
    pub verdict_c: ClassReport,
    pub univalence_screen: bool,
    pub consistent: bool,
}

impl EquivalenceReport {
    pub fn all_true(&self) -> bool {
        self.verdict_a.verdict && self.verdict_b && self.verdict_c.verdict
    }
}

/// Runs (a), (b), (c) and the univalence screen on an extremal polynomial.
///
/// With a passing screen the report is consistent when all three verdicts
/// agree. Without it only (a) ⇔ (b) and (b) ⇒ (c) are expected, since
/// (c) ⇒ (b) needs univalence.
pub fn verify_equivalence(p: &NormalizedPoly, tol: f64) -> Result<EquivalenceReport> {
    let n = p.degree();
    if p.extremal_defect() > tol {
        return Err(not_extremal(p));
    }
    let verdict_a = check_noshiro_warschawski(p, tol);
    let verdict_b = check_brannan_form(p, tol);
    let verdict_c = check_starlike(p, tol);
    let univalence_screen = check_boundary_injective(p, SCREEN_SAMPLES.max(16 * n));
    let (a, b, c) = (verdict_a.verdict, verdict_b, verdict_c.verdict);
    let consistent = if univalence_screen {
        a == b && b == c
    } else {
        a == b && (!b || c)
    };
    Ok(EquivalenceReport {
        n,
        verdict_a,
        verdict_b,
        verdict_c,
        univalence_screen,
        consistent,
    })
}

fn not_extremal(p: &NormalizedPoly) -> Error {
    Error::NotExtremal {
        modulus: p.leading().norm(),
        expected: 1.0 / p.degree() as f64,
    }
}

/// Complex numbers with modulus and phase each uniform, in the unit disk.
pub fn sample_disk<R: Rng>(rng: &mut R, count: usize) -> Vec<Complex64> {
    (0..count)
        .map(|_| {
            let modulus: f64 = rng.random();
            let phase = rng.random_range(0.0..TAU);
            Complex64::from_polar(modulus, phase)
        })
        .collect()
}

/// `1 + c_1 z + ... + c_{n-1} z^{n-1} + z^n`
pub fn proposition1_polynomial(middle: &[Complex64]) -> ComplexPoly {
    let mut coeffs = Vec::with_capacity(middle.len() + 2);
    coeffs.push(Complex64::new(1.0, 0.0));
    coeffs.extend_from_slice(middle);
    coeffs.push(Complex64::new(1.0, 0.0));
    ComplexPoly::new(coeffs)
}

/// A `Q = 1 + ... + z^n` with positive real part whose middle coefficients
/// are not all below [`COUNTEREXAMPLE_GATE`].
pub fn is_proposition1_counterexample(q: &ComplexPoly) -> bool {
    let n = q.degree().unwrap_or(0);
    if n < 2 {
        return false;
    }
    let big_middle = q.coeffs()[1..n]
        .iter()
        .any(|c| c.norm() > COUNTEREXAMPLE_GATE);
    big_middle
        && passes_minus_one_screen(q, SEARCH_TOL)
        && check_positive_real_part(q, SEARCH_TOL).verdict
}

/// `Re Q(omega_k) >= -tol` at every n-th root of `-1`.
///
/// Necessary for `Re Q >= 0` on the circle, and cheap: the middle terms
/// average to zero over the `omega_k`, so unless they all vanish some
/// `Re Q(omega_k)` is negative.
pub fn passes_minus_one_screen(q: &ComplexPoly, tol: f64) -> bool {
    let n = q.degree().unwrap_or(0);
    let Ok(unit) = roots_of_minus_one(n.max(1)) else {
        return false;
    };
    unit.omegas().iter().all(|&w| q.eval(w).re >= -tol)
}

/// Samples `trials` middle-coefficient vectors and returns the first
/// counterexample, if any. Deterministic in `seed`.
pub fn proposition1_search(n: usize, trials: usize, seed: u64) -> Result<Option<ComplexPoly>> {
    if n < 2 {
        return Err(Error::InvalidDegree {
            degree: n,
            reason: "the search needs n >= 2",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let middle = sample_disk(&mut rng, n - 1);
        let q = proposition1_polynomial(&middle);
        if is_proposition1_counterexample(&q) {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

/// The constants appearing in the expansion of
/// `Re{P' conj(R - |C|^2 P')}` for `R = P/z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProofConstants {
    pub n: usize,
    /// `|C|^2 = (n+1)/(2n)`
    pub c_squared: f64,
    /// Coefficient of `cos (n-1)t`: `1 + 1/n - 2|C|^2`.
    pub alpha_top: f64,
    /// Constant coefficient.
    pub alpha_zero: f64,
}

impl ProofConstants {
    /// `1 - k|C|^2` for `k = 2..n-1`.
    pub fn middle_weights(&self) -> impl Iterator<Item = f64> + '_ {
        (2..self.n).map(|k| 1.0 - k as f64 * self.c_squared)
    }
}

/// Closed forms with `middle = [a_2, .., a_{n-1}]`.
pub fn proof_constants(n: usize, middle: &[Complex64]) -> Result<ProofConstants> {
    if n < 2 {
        return Err(Error::InvalidDegree {
            degree: n,
            reason: "proof constants need n >= 2",
        });
    }
    if middle.len() != n - 2 {
        return Err(Error::CoefficientCount {
            expected: n - 2,
            got: middle.len(),
        });
    }
    let nf = n as f64;
    let c_squared = (nf + 1.0) / (2.0 * nf);
    let alpha_top = 1.0 + 1.0 / nf - 2.0 * c_squared;
    let weighted: f64 = middle
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let k = (i + 2) as f64;
            k * (1.0 - k * c_squared) * a.norm_sqr()
        })
        .sum();
    let alpha_zero = (1.0 - c_squared) + weighted + (1.0 / nf - c_squared);
    Ok(ProofConstants {
        n,
        c_squared,
        alpha_top,
        alpha_zero,
    })
}

/// Largest discrepancy between the closed forms of [`proof_constants`] and
/// the lag-`0` and `cos (n-1)t` coefficients of
/// `trig_product_real(P', R - |C|^2 P')`. Requires `a_n = 1/n`.
pub fn verify_proof_identity(p: &NormalizedPoly) -> Result<f64> {
    let n = p.degree();
    let expected_lead = Complex64::new(1.0 / n as f64, 0.0);
    if (p.leading() - expected_lead).norm() > crate::poly::EXTREMAL_TOL {
        return Err(not_extremal(p));
    }
    let constants = proof_constants(n, p.middle())?;
    let dp = p.as_poly().derivative();
    let rest = p
        .associated_r()
        .sub(&dp.scale(Complex64::new(constants.c_squared, 0.0)));
    let product = trig_product_real(&dp, &rest);
    let lag_zero = (product.a0() - constants.alpha_zero).abs();
    let lag_top = (product.alpha(n - 1) - constants.alpha_top).abs();
    Ok(lag_zero.max(lag_top))
}

/// `z + eps z^k + z^n / n`
pub fn perturbed_polynomial(n: usize, k: usize, eps: f64) -> Result<NormalizedPoly> {
    if n < 3 || k < 2 || k > n - 1 {
        return Err(Error::InvalidDegree {
            degree: n,
            reason: "perturbation needs 2 <= k <= n - 1",
        });
    }
    let mut middle = alloc::vec![Complex64::new(0.0, 0.0); n - 2];
    middle[k - 2] = Complex64::new(eps, 0.0);
    NormalizedPoly::from_parts(&middle, Complex64::new(1.0 / n as f64, 0.0))
}

/// One grid point of a perturbation scan.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationRow {
    pub eps: f64,
    pub report: ClassReport,
}

/// Noshiro–Warschawski reports for `eps = 0, step, .., steps * step`.
pub fn perturbation_profile(
    n: usize,
    k: usize,
    step: f64,
    steps: usize,
    tol: f64,
) -> Result<Vec<PerturbationRow>> {
    (0..=steps)
        .map(|m| {
            let eps = m as f64 * step;
            let p = perturbed_polynomial(n, k, eps)?;
            Ok(PerturbationRow {
                eps,
                report: check_noshiro_warschawski(&p, tol),
            })
        })
        .collect()
}

/// Smallest positive `eps` on the grid `step, 2 step, ..` up to `1` for
/// which `z + eps z^k + z^n/n` is rejected by the Noshiro–Warschawski
/// checker.
pub fn perturbation_threshold(n: usize, k: usize, step: f64, tol: f64) -> Result<Option<f64>> {
    if step.is_nan() || step <= 0.0 {
        return Err(Error::InvalidDegree {
            degree: n,
            reason: "grid step must be positive",
        });
    }
    let steps = libm::ceil(1.0 / step) as usize;
    for m in 1..=steps {
        let eps = m as f64 * step;
        let p = perturbed_polynomial(n, k, eps)?;
        if !check_noshiro_warschawski(&p, tol).verdict {
            return Ok(Some(eps));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::DEFAULT_TOL;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn canonical_examples() {
        let p2 = canonical_polynomial(2).unwrap();
        assert_eq!(
            p2.as_poly().coeffs(),
            &[c(0.0, 0.0), c(1.0, 0.0), c(0.5, 0.0)]
        );
        let p5 = canonical_polynomial(5).unwrap();
        assert_eq!(p5.leading(), c(0.2, 0.0));
        assert!(p5.middle().iter().all(|a| *a == c(0.0, 0.0)));
        assert!(p5.is_extremal());
        assert!(canonical_polynomial(1).is_err());
    }

    #[test]
    fn canonical_critical_points_are_roots_of_minus_one() {
        for n in 2..=10 {
            let cp =
                crate::roots::critical_points(canonical_polynomial(n).unwrap().as_poly()).unwrap();
            let expected = roots_of_minus_one(n - 1).unwrap();
            for w in expected.omegas() {
                assert!(cp.roots.iter().any(|r| (r - w).norm() < 1e-10));
            }
        }
    }

    #[test]
    fn equivalence_examples() {
        let r = verify_equivalence(&canonical_polynomial(6).unwrap(), DEFAULT_TOL).unwrap();
        assert!(r.all_true() && r.consistent && r.univalence_screen);

        let p = NormalizedPoly::from_parts(&[c(0.1, 0.0)], c(1.0 / 3.0, 0.0)).unwrap();
        let r = verify_equivalence(&p, DEFAULT_TOL).unwrap();
        assert!(!r.verdict_a.verdict && !r.verdict_b && !r.verdict_c.verdict);
        assert!(r.consistent);
        assert!((r.verdict_a.min_value + 0.005).abs() < 1e-12);

        let rotated = canonical_polynomial(4)
            .unwrap()
            .rotate(c(0.0, 1.0))
            .unwrap();
        let r = verify_equivalence(&rotated, DEFAULT_TOL).unwrap();
        assert!(r.all_true() && r.consistent);

        let q = NormalizedPoly::from_parts(&[c(0.1, 0.0)], c(0.3, 0.0)).unwrap();
        assert!(matches!(
            verify_equivalence(&q, DEFAULT_TOL),
            Err(Error::NotExtremal { .. })
        ));
    }

    #[test]
    fn search_examples() {
        assert_eq!(proposition1_search(4, 10_000, 42).unwrap(), None);
        assert_eq!(proposition1_search(2, 10_000, 1).unwrap(), None);
        assert!(proposition1_search(1, 10, 1).is_err());
        let a = proposition1_search(3, 5, 7).unwrap();
        let b = proposition1_search(3, 5, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn gate_semantics() {
        // passes positivity but the middle coefficient is below the gate
        let q = proposition1_polynomial(&[c(1e-12, 0.0), c(0.0, 0.0)]);
        assert!(check_positive_real_part(&q, SEARCH_TOL).verdict);
        assert!(!is_proposition1_counterexample(&q));
        let q = proposition1_polynomial(&[c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(!is_proposition1_counterexample(&q));
    }

    #[test]
    fn screen_is_necessary() {
        let q = proposition1_polynomial(&[c(0.5, 0.5)]);
        assert!(!passes_minus_one_screen(&q, SEARCH_TOL));
        assert!(!check_positive_real_part(&q, SEARCH_TOL).verdict);
        let canon = proposition1_polynomial(&[c(0.0, 0.0); 4]);
        assert!(passes_minus_one_screen(&canon, SEARCH_TOL));
    }

    #[test]
    fn proof_constants_examples() {
        let k3 = proof_constants(3, &[c(0.0, 0.0)]).unwrap();
        assert!((k3.c_squared - 2.0 / 3.0).abs() < 1e-15);
        assert!(k3.alpha_top.abs() < 1e-15);
        assert!(k3.alpha_zero.abs() < 1e-15);

        let k2 = proof_constants(2, &[]).unwrap();
        assert_eq!(k2.c_squared, 0.75);
        assert!(k2.alpha_top.abs() < 1e-15);

        let k5 = proof_constants(5, &[c(0.3, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!((k5.alpha_zero + 0.036).abs() < 1e-15);
        assert!(proof_constants(5, &[c(0.3, 0.0)]).is_err());
    }

    #[test]
    fn proof_identity_examples() {
        assert!(verify_proof_identity(&canonical_polynomial(3).unwrap()).unwrap() < 1e-14);
        let p = NormalizedPoly::from_parts(&[c(0.0, 0.0), c(0.2, 0.0), c(0.0, 0.0)], c(0.2, 0.0))
            .unwrap();
        assert!(verify_proof_identity(&p).unwrap() <= 1e-12);
        assert!(verify_proof_identity(&canonical_polynomial(12).unwrap()).unwrap() <= 1e-12);
        let rotated = canonical_polynomial(4)
            .unwrap()
            .rotate(c(0.0, 1.0))
            .unwrap();
        assert!(matches!(
            verify_proof_identity(&rotated),
            Err(Error::NotExtremal { .. })
        ));
    }

    #[test]
    fn perturbation_examples() {
        assert_eq!(
            perturbation_threshold(3, 2, 1e-3, DEFAULT_TOL).unwrap(),
            Some(1e-3)
        );
        assert_eq!(
            perturbation_threshold(5, 3, 1e-3, DEFAULT_TOL).unwrap(),
            Some(1e-3)
        );
        let rows = perturbation_profile(3, 2, 1e-3, 3, DEFAULT_TOL).unwrap();
        assert!(rows[0].report.verdict);
        for row in &rows[1..] {
            assert!(!row.report.verdict);
            assert!((row.report.min_value + row.eps * row.eps / 2.0).abs() < 1e-12);
        }
        assert!(perturbed_polynomial(3, 3, 0.1).is_err());
    }
}
