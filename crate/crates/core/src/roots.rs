//! Simultaneous root finding and the geometry of critical points.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math;
use crate::poly::ComplexPoly;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 200;

/// `2π (1 - 1/φ)`
const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;
const PHASE_OFFSET: f64 = 0.4;

/// Roots of a polynomial with their residuals `|P(root)|`.
///
/// Inside the closed unit disk each residual is at most
/// `1e-9 * (1 + max |c_k|)`; outside it the bound scales with
/// `sum |c_k| |root|^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// All roots of `poly` by Aberth–Ehrlich iteration.
///
/// A root is frozen once its correction drops below `tol` relative to its
/// modulus, or once `|P(z)|` is within the rounding-error bound of Horner's
/// rule at `z`. The second test lets clustered and multiple roots terminate.
/// Roots are returned sorted by argument in `[0, 2π)`, then by modulus.
pub fn find_roots(poly: &ComplexPoly, tol: f64, max_iter: usize) -> Result<RootSet> {
    let n = poly.degree().ok_or(Error::ZeroPolynomial)?;
    let coeffs = poly.coeffs();
    let lead = coeffs[n];
    let mut roots = match n {
        0 => Vec::new(),
        1 => alloc::vec![-coeffs[0] / lead],
        _ => aberth(poly, tol, max_iter)?,
    };
    roots.sort_by(|a, b| {
        math::wrap_angle(a.arg())
            .total_cmp(&math::wrap_angle(b.arg()))
            .then(a.norm().total_cmp(&b.norm()))
    });
    let residuals = roots.iter().map(|&r| poly.eval(r).norm()).collect();
    Ok(RootSet { roots, residuals })
}

fn initial_guesses(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].norm();
    let bound = (0..n)
        .map(|k| math::powf(coeffs[k].norm() / lead, 1.0 / (n - k) as f64))
        .fold(0.0, f64::max);
    let radius = 1.0 + bound;
    (0..n)
        .map(|j| Complex64::from_polar(radius, PHASE_OFFSET + GOLDEN_ANGLE * j as f64))
        .collect()
}

fn aberth(poly: &ComplexPoly, tol: f64, max_iter: usize) -> Result<Vec<Complex64>> {
    let coeffs = poly.coeffs();
    let n = coeffs.len() - 1;
    // Horner's rule has backward error below 2n u sum |c_k||z|^k
    let rounding = 4.0 * n as f64 * f64::EPSILON;
    let mut z = initial_guesses(coeffs);
    let mut done = alloc::vec![false; n];

    for _ in 0..max_iter {
        let mut all_done = true;
        for j in 0..n {
            if done[j] {
                continue;
            }
            let (p, dp) = poly.eval_with_derivative(z[j]);
            if p.norm() <= rounding * poly.abs_eval(z[j].norm()) {
                done[j] = true;
                continue;
            }
            let repulsion: Complex64 = (0..n)
                .filter(|&k| k != j)
                .map(|k| (z[j] - z[k]).inv())
                .sum();
            let denom = dp - p * repulsion;
            let step = if denom.norm() == 0.0 || !denom.is_finite() {
                // nudge off a stationary point
                Complex64::from_polar(tol.max(1e-8) * (1.0 + z[j].norm()), j as f64)
            } else {
                p / denom
            };
            z[j] -= step;
            if step.norm() <= tol * z[j].norm().max(f64::MIN_POSITIVE) {
                done[j] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            return Ok(z);
        }
    }
    if done.iter().all(|&d| d) {
        Ok(z)
    } else {
        Err(Error::DidNotConverge(max_iter))
    }
}

/// Roots of `P'`.
pub fn critical_points(poly: &ComplexPoly) -> Result<RootSet> {
    let degree = poly.degree().unwrap_or(0);
    if degree < 2 {
        return Err(Error::InvalidDegree {
            degree,
            reason: "critical points need degree >= 2",
        });
    }
    find_roots(&poly.derivative(), DEFAULT_TOL, DEFAULT_MAX_ITER)
}

/// Every root satisfies `||r| - 1| <= tol`.
pub fn all_on_unit_circle(roots: &RootSet, tol: f64) -> bool {
    roots.roots.iter().all(|r| (r.norm() - 1.0).abs() <= tol)
}

/// Smallest pairwise distance between roots, `None` for fewer than two.
pub fn min_separation(roots: &RootSet) -> Option<f64> {
    let r = &roots.roots;
    (0..r.len())
        .flat_map(|i| (i + 1..r.len()).map(move |j| (r[i] - r[j]).norm()))
        .reduce(f64::min)
}

/// No two roots are within `sep_tol` of each other.
pub fn all_simple(roots: &RootSet, sep_tol: f64) -> bool {
    min_separation(roots).is_none_or(|d| d > sep_tol)
}

/// The n-th roots of `-1`, `omega_k = e^{(2k+1)πi/n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitRoots {
    n: usize,
    omegas: Vec<Complex64>,
}

impl UnitRoots {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn omegas(&self) -> &[Complex64] {
        &self.omegas
    }

    /// `sum_k omega_k^j` for `0 <= j <= n`.
    ///
    /// The sum vanishes for `1 <= j <= n - 1`; it is `n` at `j = 0` and `-n`
    /// at `j = n`.
    pub fn power_sum(&self, j: usize) -> Result<Complex64> {
        if j > self.n {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: self.n,
            });
        }
        Ok(self.omegas.iter().map(|w| w.powu(j as u32)).sum())
    }
}

pub fn roots_of_minus_one(n: usize) -> Result<UnitRoots> {
    if n < 1 {
        return Err(Error::InvalidDegree {
            degree: n,
            reason: "roots of -1 need n >= 1",
        });
    }
    let omegas = (0..n)
        .map(|k| Complex64::from_polar(1.0, (2 * k + 1) as f64 * PI / n as f64))
        .collect();
    Ok(UnitRoots { n, omegas })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Each expected root has a found root within `tol`.
    fn matches(found: &[Complex64], expected: &[Complex64], tol: f64) -> bool {
        found.len() == expected.len()
            && expected
                .iter()
                .all(|e| found.iter().any(|f| (f - e).norm() <= tol))
    }

    #[test]
    fn quadratic_examples() {
        let r = find_roots(&ComplexPoly::from_real(&[1.0, 0.0, 1.0]), 1e-12, 200).unwrap();
        assert!(matches(&r.roots, &[c(0.0, 1.0), c(0.0, -1.0)], 1e-12));
        let r = find_roots(&ComplexPoly::from_real(&[1.0, -2.5, 1.0]), 1e-12, 200).unwrap();
        assert!(matches(&r.roots, &[c(0.5, 0.0), c(2.0, 0.0)], 1e-12));
    }

    #[test]
    fn quartic_roots_of_minus_one() {
        let r = find_roots(
            &ComplexPoly::from_real(&[1.0, 0.0, 0.0, 0.0, 1.0]),
            1e-12,
            200,
        )
        .unwrap();
        assert_eq!(r.len(), 4);
        assert!(all_on_unit_circle(&r, 1e-12));
        let omegas = roots_of_minus_one(4).unwrap();
        assert!(matches(&r.roots, omegas.omegas(), 1e-12));
    }

    #[test]
    fn errors() {
        assert_eq!(
            find_roots(&ComplexPoly::zero(), 1e-12, 200),
            Err(Error::ZeroPolynomial)
        );
        assert!(find_roots(&ComplexPoly::from_real(&[2.0]), 1e-12, 200)
            .unwrap()
            .is_empty());
        let hard = ComplexPoly::from_real(&[1.0, 0.3, -0.7, 0.0, 2.0, 0.1, 1.0]);
        assert_eq!(find_roots(&hard, 1e-12, 1), Err(Error::DidNotConverge(1)));
        assert!(critical_points(&ComplexPoly::from_real(&[0.0, 1.0])).is_err());
    }

    #[test]
    fn double_roots_terminate() {
        let p = ComplexPoly::from_roots(c(1.0, 0.0), &[c(0.0, 1.0), c(0.0, 1.0), c(0.5, 0.0)]);
        let r = find_roots(&p, 1e-12, 200).unwrap();
        assert_eq!(r.len(), 3);
        assert!(
            r.roots
                .iter()
                .filter(|z| (*z - c(0.0, 1.0)).norm() < 1e-6)
                .count()
                == 2
        );
    }

    #[test]
    fn critical_points_examples() {
        let r = critical_points(&ComplexPoly::from_real(&[0.0, 1.0, 0.5])).unwrap();
        assert!(matches(&r.roots, &[c(-1.0, 0.0)], 1e-14));
        let r = critical_points(&ComplexPoly::from_real(&[0.0, 1.0, 0.0, 1.0 / 3.0])).unwrap();
        assert!(matches(&r.roots, &[c(0.0, 1.0), c(0.0, -1.0)], 1e-12));
        let r = critical_points(&ComplexPoly::from_real(&[0.0, 1.0, 0.0, 0.0, 0.0, 0.2])).unwrap();
        let expected: Vec<_> = (0..4)
            .map(|k| Complex64::from_polar(1.0, (2 * k + 1) as f64 * PI / 4.0))
            .collect();
        assert!(matches(&r.roots, &expected, 1e-12));
    }

    #[test]
    fn unit_circle_and_simplicity() {
        let ii = RootSet {
            roots: vec![c(0.0, 1.0), c(0.0, -1.0)],
            residuals: vec![0.0, 0.0],
        };
        assert!(all_on_unit_circle(&ii, 1e-8));
        assert!(all_simple(&ii, 1e-6));
        let real = RootSet {
            roots: vec![c(0.5, 0.0), c(2.0, 0.0)],
            residuals: vec![0.0, 0.0],
        };
        assert!(!all_on_unit_circle(&real, 1e-8));
        let double = RootSet {
            roots: vec![c(1.0, 0.0), c(1.0 + 1e-9, 0.0)],
            residuals: vec![0.0, 0.0],
        };
        assert!(!all_simple(&double, 1e-6));

        let mut p = vec![c(0.0, 0.0); 13];
        p[1] = c(1.0, 0.0);
        p[12] = c(1.0 / 12.0, 0.0);
        let cp = critical_points(&ComplexPoly::new(p)).unwrap();
        assert!(all_on_unit_circle(&cp, 1e-8));

        let mut p = vec![c(0.0, 0.0); 9];
        p[1] = c(1.0, 0.0);
        p[8] = c(1.0 / 8.0, 0.0);
        let cp = critical_points(&ComplexPoly::new(p)).unwrap();
        assert!(all_simple(&cp, 1e-6));
        let sep = min_separation(&cp).unwrap();
        assert!((sep - 2.0 * (PI / 7.0).sin()).abs() < 1e-10);
    }

    #[test]
    fn roots_of_minus_one_examples() {
        assert!((roots_of_minus_one(1).unwrap().omegas()[0] - c(-1.0, 0.0)).norm() < 1e-15);
        let two = roots_of_minus_one(2).unwrap();
        assert!((two.omegas()[0] - c(0.0, 1.0)).norm() < 1e-15);
        assert!((two.omegas()[1] - c(0.0, -1.0)).norm() < 1e-15);
        let three = roots_of_minus_one(3).unwrap();
        let expect = [
            Complex64::from_polar(1.0, PI / 3.0),
            c(-1.0, 0.0),
            Complex64::from_polar(1.0, 5.0 * PI / 3.0),
        ];
        for (w, e) in three.omegas().iter().zip(&expect) {
            assert!((w - e).norm() < 1e-15);
        }
        assert!(roots_of_minus_one(0).is_err());
    }

    #[test]
    fn power_sum_examples() {
        let u = roots_of_minus_one(3).unwrap();
        assert!(u.power_sum(1).unwrap().norm() < 1e-15);
        assert!((u.power_sum(0).unwrap() - c(3.0, 0.0)).norm() < 1e-15);
        assert!((u.power_sum(3).unwrap() - c(-3.0, 0.0)).norm() < 1e-14);
        assert_eq!(
            u.power_sum(4),
            Err(Error::IndexOutOfRange { index: 4, max: 3 })
        );
        for w in u.omegas() {
            assert!((w.powu(3) + 1.0).norm() < 1e-12);
        }
    }
}
