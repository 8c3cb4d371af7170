//! Membership checkers for the classes of normalized polynomials.
//!
//! Each checker reduces membership to the sign of a trigonometric polynomial
//! on the circle plus a condition at a single interior point. Because the
//! real part of an analytic function is harmonic, a nonnegative boundary
//! minimum together with a positive value inside gives `Re > 0` on the whole
//! open disk.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use crate::fejer::{min_on_circle, PositivityCertificate};
use crate::math;
use crate::poly::{ComplexPoly, NormalizedPoly};
use crate::roots::{self, find_roots};
use crate::trig::{boundary_real_part, trig_product_real, TrigPoly};

pub const DEFAULT_TOL: f64 = 1e-9;

/// Zeros of `P(z)/z` with modulus up to `1 + INTERIOR_ROOT_TOL` count as
/// zeros in the closed disk. A zero on the circle is a pole of `zP'/P`
/// near which the real part is unbounded below.
pub const INTERIOR_ROOT_TOL: f64 = 1e-9;

pub mod detail {
    pub const BOUNDARY_NONNEGATIVE: &str = "boundary minimum >= -tol and positive at the center";
    pub const BOUNDARY_NEGATIVE: &str = "boundary minimum below -tol";
    pub const CENTER_NOT_POSITIVE: &str = "real part at the center is not positive";
    pub const ZERO_POLYNOMIAL: &str = "zero polynomial";
    pub const INTERIOR_ZERO: &str = "P has a zero in 0 < |z| <= 1";
    pub const ROOTS_FAILED: &str = "root finding for P(z)/z did not converge";
}

/// Verdict of a membership query with its numeric witness.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassReport {
    pub verdict: bool,
    pub min_value: f64,
    pub argmin_t: f64,
    pub detail: &'static str,
    pub certificate: Option<PositivityCertificate>,
    /// The boundary function whose minimum was taken.
    pub boundary: TrigPoly,
}

impl ClassReport {
    fn from_boundary(boundary: TrigPoly, tol: f64, center_ok: bool) -> Self {
        let cert = min_on_circle(&boundary);
        let (verdict, detail) = if !cert.is_nonnegative(tol) {
            (false, detail::BOUNDARY_NEGATIVE)
        } else if !center_ok {
            (false, detail::CENTER_NOT_POSITIVE)
        } else {
            (true, detail::BOUNDARY_NONNEGATIVE)
        };
        Self {
            verdict,
            min_value: cert.min_value,
            argmin_t: cert.argmin_t,
            detail,
            certificate: Some(cert),
            boundary,
        }
    }
}

/// `Re Q > 0` on the open unit disk.
pub fn check_positive_real_part(q: &ComplexPoly, tol: f64) -> ClassReport {
    if q.is_zero() {
        return ClassReport {
            verdict: false,
            min_value: 0.0,
            argmin_t: 0.0,
            detail: detail::ZERO_POLYNOMIAL,
            certificate: None,
            boundary: TrigPoly::default(),
        };
    }
    ClassReport::from_boundary(boundary_real_part(q), tol, q.coeff(0).re > 0.0)
}

/// `Re P' > 0` on the disk (the Noshiro–Warschawski class).
pub fn check_noshiro_warschawski(p: &NormalizedPoly, tol: f64) -> ClassReport {
    check_positive_real_part(&p.as_poly().derivative(), tol)
}

/// Starlikeness through `Re{z P'(z) conj(P(z))} >= 0` on the circle and
/// `P(z)/z != 0` on the closed disk.
///
/// Working with the product instead of `z P'/P` avoids dividing by `P` near
/// boundary zeros; `z P'/P` equals one at the origin.
pub fn check_starlike(p: &NormalizedPoly, tol: f64) -> ClassReport {
    let boundary = trig_product_real(&p.z_derivative(), p.as_poly());
    let mut report = ClassReport::from_boundary(boundary, tol, true);
    match find_roots(
        &p.associated_r(),
        roots::DEFAULT_TOL,
        roots::DEFAULT_MAX_ITER,
    ) {
        Ok(zeros) => {
            if zeros
                .roots
                .iter()
                .any(|r| r.norm() <= 1.0 + INTERIOR_ROOT_TOL)
            {
                report.verdict = false;
                report.detail = detail::INTERIOR_ZERO;
            }
        }
        Err(_) => {
            report.verdict = false;
            report.detail = detail::ROOTS_FAILED;
        }
    }
    report
}

/// `a_2 = ... = a_{n-1} = 0` and `|a_n| = 1/n`, both within `tol`.
pub fn check_brannan_form(p: &NormalizedPoly, tol: f64) -> bool {
    p.middle().iter().all(|a| a.norm() <= tol) && p.extremal_defect() <= tol
}

/// `(1 + z^{n-1}) / (1 + z^{n-1}/n)`, the value of `z P'/P` for `z + z^n/n`.
pub fn starlike_ratio_canonical(n: usize, z: Complex64) -> Complex64 {
    let w = z.powu((n - 1) as u32);
    (w + 1.0) / (w / n as f64 + 1.0)
}

/// Heuristic univalence screen: the sampled boundary curve `t -> P(e^{it})`
/// has no crossing between non-adjacent segments.
///
/// `samples` is raised to `8 * degree` when smaller. A simple curve does not
/// prove univalence and a detected crossing is subject to sampling error.
pub fn check_boundary_injective(p: &NormalizedPoly, samples: usize) -> bool {
    let samples = samples.max(8 * p.degree());
    let poly = p.as_poly();
    let points: Vec<(f64, f64)> = (0..samples)
        .map(|m| {
            let t = TAU * m as f64 / samples as f64;
            let w = poly.eval(Complex64::new(math::cos(t), math::sin(t)));
            (w.re, w.im)
        })
        .collect();
    let segment = |i: usize| (points[i], points[(i + 1) % samples]);
    let boxes: Vec<[f64; 4]> = (0..samples)
        .map(|i| {
            let (a, b) = segment(i);
            [a.0.min(b.0), a.0.max(b.0), a.1.min(b.1), a.1.max(b.1)]
        })
        .collect();
    for i in 0..samples {
        for j in i + 2..samples {
            if i == 0 && j == samples - 1 {
                continue;
            }
            let (bi, bj) = (&boxes[i], &boxes[j]);
            if bi[1] < bj[0] || bj[1] < bi[0] || bi[3] < bj[2] || bj[3] < bi[2] {
                continue;
            }
            let (a, b) = segment(i);
            let (c, d) = segment(j);
            if segments_cross(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Proper crossing; touching endpoints and collinear overlap do not count.
fn segments_cross(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> bool {
    let d1 = cross(a, b, c);
    let d2 = cross(a, b, d);
    let d3 = cross(c, d, a);
    let d4 = cross(c, d, b);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}
