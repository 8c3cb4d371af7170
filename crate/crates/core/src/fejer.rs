//! Minimization on the unit circle, nonnegativity certificates and
//! constructive Fejér–Riesz spectral factorization.
//!
//! A nonnegative trigonometric polynomial `T` of degree `n` is written as
//! `|Γ(e^{it})|^2` for a polynomial `Γ` of degree `n` by splitting the roots
//! of the self-reciprocal polynomial `z^n T` into the inside and outside of
//! the circle. Unit-circle roots of `T` appear with even multiplicity and
//! half of each cluster goes to `Γ`.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math;
use crate::poly::ComplexPoly;
use crate::roots::{self, find_roots};
use crate::trig::TrigPoly;

/// Uniform samples used by the initial scan in [`min_on_circle`].
pub const GRID_POINTS: usize = 4096;
/// Newton steps allowed when refining a grid minimum.
pub const MAX_NEWTON_STEPS: usize = 50;
/// Half-width of the band around `|z| = 1` treated as the unit circle when
/// splitting roots.
pub const UNIT_BAND: f64 = 1e-7;
/// Unit-circle roots closer than this belong to the same cluster.
pub const CLUSTER_GAP: f64 = 1e-5;
/// Slack used for the nonnegativity precondition of [`spectral_factorize`].
pub const NONNEGATIVE_TOL: f64 = 1e-10;

/// Roots of `T'` within this distance of the circle are treated as
/// stationary points; extra candidates only cost an evaluation.
const STATIONARY_BAND: f64 = 1e-3;
const GOLDEN_STEPS: usize = 200;
const REFINE_STEPS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinMethod {
    /// Grid refinement agreed with the roots of `T'` on the circle.
    CriticalPointEnumeration,
    /// Root enumeration failed; the result is the refined grid minimum.
    RefinedGrid,
}

/// Global minimum of a trigonometric polynomial on `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivityCertificate {
    pub min_value: f64,
    pub argmin_t: f64,
    pub method: MinMethod,
}

impl PositivityCertificate {
    pub fn is_nonnegative(&self, tol: f64) -> bool {
        self.min_value >= -tol
    }
}

/// Grid scan, Newton refinement of every discrete local minimum and a
/// cross-check against the unit-circle roots of the algebraic form of `T'`.
pub fn min_on_circle(trig: &TrigPoly) -> PositivityCertificate {
    let trig = trig.trimmed();
    let degree = trig.degree();
    if degree == 0 {
        return PositivityCertificate {
            min_value: trig.a0(),
            argmin_t: 0.0,
            method: MinMethod::CriticalPointEnumeration,
        };
    }

    let step = TAU / GRID_POINTS as f64;
    let values: Vec<f64> = (0..GRID_POINTS)
        .map(|m| trig.eval(m as f64 * step))
        .collect();
    let mut local: Vec<usize> = (0..GRID_POINTS)
        .filter(|&m| {
            let prev = values[(m + GRID_POINTS - 1) % GRID_POINTS];
            let next = values[(m + 1) % GRID_POINTS];
            values[m] <= prev && values[m] <= next
        })
        .collect();
    local.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    local.truncate(4 * degree + 4);

    let mut best = (f64::INFINITY, 0.0);
    let mut consider = |t: f64| {
        let t = math::wrap_angle(t);
        let v = trig.eval(t);
        if v < best.0 {
            best = (v, t);
        }
    };
    for &m in &local {
        let t0 = m as f64 * step;
        consider(t0);
        consider(refine(&trig, t0, step));
    }

    let method = match find_roots(
        &trig.derivative().algebraic(),
        roots::DEFAULT_TOL,
        roots::DEFAULT_MAX_ITER,
    ) {
        Ok(stationary) => {
            for r in stationary
                .roots
                .iter()
                .filter(|r| (r.norm() - 1.0).abs() <= STATIONARY_BAND)
            {
                let t = r.arg();
                consider(t);
                consider(polish(&trig, t));
            }
            MinMethod::CriticalPointEnumeration
        }
        Err(_) => MinMethod::RefinedGrid,
    };

    PositivityCertificate {
        min_value: best.0,
        argmin_t: best.1,
        method,
    }
}

/// Newton on `T'` inside `[t0 - h, t0 + h]`, golden-section search if Newton
/// leaves the bracket or meets negative curvature.
fn refine(trig: &TrigPoly, t0: f64, h: f64) -> f64 {
    let mut t = t0;
    for _ in 0..MAX_NEWTON_STEPS {
        let (_, d1, d2) = trig.eval_with_derivatives(t);
        if d2 <= 0.0 || !d2.is_finite() {
            return golden_section(trig, t0 - h, t0 + h);
        }
        let delta = d1 / d2;
        t -= delta;
        if (t - t0).abs() > h {
            return golden_section(trig, t0 - h, t0 + h);
        }
        if delta.abs() <= 1e-15 * (1.0 + t.abs()) {
            break;
        }
    }
    t
}

fn golden_section(trig: &TrigPoly, mut lo: f64, mut hi: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut a = hi - INV_PHI * (hi - lo);
    let mut b = lo + INV_PHI * (hi - lo);
    let (mut fa, mut fb) = (trig.eval(a), trig.eval(b));
    for _ in 0..GOLDEN_STEPS {
        if hi - lo <= 1e-15 {
            break;
        }
        if fa < fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - INV_PHI * (hi - lo);
            fa = trig.eval(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + INV_PHI * (hi - lo);
            fb = trig.eval(b);
        }
    }
    if fa < fb {
        a
    } else {
        b
    }
}

/// A few guarded Newton steps from a root-finder estimate.
fn polish(trig: &TrigPoly, t0: f64) -> f64 {
    let mut t = t0;
    let mut value = trig.eval(t);
    for _ in 0..3 {
        let (_, d1, d2) = trig.eval_with_derivatives(t);
        if d2 <= 0.0 {
            break;
        }
        let next = t - d1 / d2;
        let next_value = trig.eval(next);
        if next_value > value {
            break;
        }
        t = next;
        value = next_value;
    }
    t
}

/// `min T >= -tol` on the circle.
pub fn is_nonnegative(trig: &TrigPoly, tol: f64) -> bool {
    min_on_circle(trig).is_nonnegative(tol)
}

/// `Γ(z) = sum_j gammas[j] z^j` with `|Γ(e^{it})|^2 = T(t)`.
///
/// Normal form: every root of `Γ` lies in the closed unit disk and `γ0` is
/// real and nonnegative.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralFactor {
    pub gammas: Vec<Complex64>,
}

impl SpectralFactor {
    /// The factor with all roots reflected to `1/conj(r)`, i.e. no zeros in
    /// the open disk: `γ'_j = conj(γ_{n-j})`. Both factors have the same
    /// modulus on the circle.
    pub fn outer(&self) -> Self {
        Self {
            gammas: self.gammas.iter().rev().map(|g| g.conj()).collect(),
        }
    }

    pub fn as_poly(&self) -> ComplexPoly {
        ComplexPoly::new(self.gammas.clone())
    }

    pub fn degree(&self) -> usize {
        self.gammas.len().saturating_sub(1)
    }
}

/// `|Γ(e^{it})|^2`, with Laurent coefficients `c_k = sum_j γ_{j+k} conj(γ_j)`.
pub fn autocorrelate(factor: &SpectralFactor) -> TrigPoly {
    let g = &factor.gammas;
    let half: Vec<Complex64> = (0..g.len())
        .map(|k| {
            g.iter()
                .zip(g.iter().skip(k))
                .map(|(gj, gjk)| gjk * gj.conj())
                .sum()
        })
        .collect();
    TrigPoly::from_laurent(&half)
}

/// Minimum-phase Fejér–Riesz factor of a nonnegative trigonometric
/// polynomial.
///
/// Roots of the degree-`2n` algebraic form come in pairs `(r, 1/conj(r))`.
/// All roots with `|r| < 1 - UNIT_BAND` are taken; roots inside the band are
/// grouped into clusters, each cluster must have even size, and it
/// contributes half its size copies of its centroid projected onto the
/// circle. The scale is fixed by the top Laurent coefficient and rotated so
/// that `γ0 >= 0`.
pub fn spectral_factorize(trig: &TrigPoly) -> Result<SpectralFactor> {
    let trig = trig.trimmed();
    if trig.max_abs_coeff() == 0.0 {
        return Err(Error::ZeroTrig);
    }
    let cert = min_on_circle(&trig);
    if !cert.is_nonnegative(NONNEGATIVE_TOL) {
        return Err(Error::NotNonnegative {
            min_value: cert.min_value,
            argmin_t: cert.argmin_t,
        });
    }
    let n = trig.degree();
    if n == 0 {
        return Ok(SpectralFactor {
            gammas: alloc::vec![Complex64::new(math::sqrt(trig.a0()), 0.0)],
        });
    }

    let algebraic = trig.algebraic();
    let all = find_roots(&algebraic, roots::DEFAULT_TOL, roots::DEFAULT_MAX_ITER)?;
    let mut selected = Vec::with_capacity(n);
    let mut on_circle = Vec::new();
    let mut outside = 0;
    for &r in &all.roots {
        let m = r.norm();
        if m < 1.0 - UNIT_BAND {
            selected.push(r);
        } else if m > 1.0 + UNIT_BAND {
            outside += 1;
        } else {
            on_circle.push(r);
        }
    }
    if selected.len() != outside {
        return Err(Error::UnpairedRoots {
            inside: selected.len(),
            outside,
        });
    }
    let has_unit_roots = !on_circle.is_empty();
    for cluster in unit_clusters(on_circle) {
        if cluster.len() % 2 != 0 {
            return Err(Error::OddUnitClusterAfterTolerance {
                size: cluster.len(),
                angle: math::wrap_angle(cluster[0].arg()),
            });
        }
        let centroid: Complex64 = cluster.iter().sum::<Complex64>() / cluster.len() as f64;
        let center = refine_multiple_root(&algebraic, centroid, cluster.len());
        selected.extend(core::iter::repeat_n(
            center / center.norm(),
            cluster.len() / 2,
        ));
    }

    // c_n = γ_n conj(γ_0) = |s|^2 conj(prod(-r))
    let monic = ComplexPoly::from_roots(Complex64::new(1.0, 0.0), &selected);
    let top = trig.laurent()[n];
    let monic_constant = monic.coeff(0);
    let scale_sq = top.norm() / monic_constant.norm();
    let phase = if monic_constant.norm() > 0.0 {
        monic_constant.conj() / monic_constant.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    let s = phase * math::sqrt(scale_sq);
    let mut gammas: Vec<Complex64> = monic.coeffs().iter().map(|&c| c * s).collect();
    gammas[0] = Complex64::new(gammas[0].re.max(0.0), 0.0);
    let mut factor = SpectralFactor { gammas };
    if !has_unit_roots {
        factor = newton_refine(&trig, factor);
    }
    Ok(factor)
}

/// Newton steps on the autocorrelation equations `autocorrelate(Γ) = T`,
/// kept only while they shrink the coefficient residual.
///
/// The unknowns are `Re δ0` and `δ1..δn` (`Im δ0 = 0` fixes the phase). The
/// Jacobian is invertible when `Γ` has no roots on the unit circle.
fn newton_refine(trig: &TrigPoly, mut factor: SpectralFactor) -> SpectralFactor {
    let target = trig.laurent();
    let n = factor.degree();
    let dim = 2 * n + 1;
    let unknown = |col: usize| -> (usize, Complex64) {
        match col {
            0 => (0, Complex64::new(1.0, 0.0)),
            _ if col % 2 == 1 => (col.div_ceil(2), Complex64::new(1.0, 0.0)),
            _ => (col / 2, Complex64::new(0.0, 1.0)),
        }
    };
    let mut residual = autocorrelate(&factor).max_coeff_diff(trig);
    for _ in 0..REFINE_STEPS {
        if residual == 0.0 {
            break;
        }
        let g = &factor.gammas;
        let current = autocorrelate(&factor).laurent();
        let mut rhs = alloc::vec![0.0; dim];
        rhs[0] = target[0].re - current[0].re;
        for k in 1..=n {
            let d = target[k] - current[k];
            rhs[2 * k - 1] = d.re;
            rhs[2 * k] = d.im;
        }
        // column `col` is the derivative of the lags along one unknown
        let mut jac = alloc::vec![0.0; dim * dim];
        for col in 0..dim {
            let (j, e) = unknown(col);
            for k in 0..=n {
                let mut v = Complex64::new(0.0, 0.0);
                if j >= k {
                    v += e * g[j - k].conj();
                }
                if j + k <= n {
                    v += g[j + k] * e.conj();
                }
                if k == 0 {
                    jac[col] = v.re;
                } else {
                    jac[(2 * k - 1) * dim + col] = v.re;
                    jac[2 * k * dim + col] = v.im;
                }
            }
        }
        if !solve_dense(&mut jac, &mut rhs, dim) {
            break;
        }
        let mut next = factor.gammas.clone();
        for (col, &x) in rhs.iter().enumerate() {
            let (j, e) = unknown(col);
            next[j] += e * x;
        }
        let candidate = SpectralFactor { gammas: next };
        let r = autocorrelate(&candidate).max_coeff_diff(trig);
        if r.is_nan() || r >= residual || candidate.gammas[0].re < 0.0 {
            break;
        }
        factor = candidate;
        residual = r;
    }
    factor
}

/// Gaussian elimination with partial pivoting on a row-major `dim x dim`
/// system; the solution overwrites `rhs`.
fn solve_dense(a: &mut [f64], rhs: &mut [f64], dim: usize) -> bool {
    for col in 0..dim {
        let pivot = (col..dim)
            .max_by(|&x, &y| a[x * dim + col].abs().total_cmp(&a[y * dim + col].abs()))
            .unwrap_or(col);
        if a[pivot * dim + col] == 0.0 || !a[pivot * dim + col].is_finite() {
            return false;
        }
        if pivot != col {
            for k in 0..dim {
                a.swap(col * dim + k, pivot * dim + k);
            }
            rhs.swap(col, pivot);
        }
        let p = a[col * dim + col];
        for row in col + 1..dim {
            let factor = a[row * dim + col] / p;
            if factor == 0.0 {
                continue;
            }
            for k in col..dim {
                a[row * dim + k] -= factor * a[col * dim + k];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    for col in (0..dim).rev() {
        let tail: f64 = (col + 1..dim).map(|k| a[col * dim + k] * rhs[k]).sum();
        rhs[col] = (rhs[col] - tail) / a[col * dim + col];
    }
    rhs.iter().all(|x| x.is_finite())
}

/// A root of multiplicity `m` is a simple root of the `(m-1)`-th derivative;
/// Newton there recovers it to working precision from the cluster centroid.
fn refine_multiple_root(poly: &ComplexPoly, centroid: Complex64, multiplicity: usize) -> Complex64 {
    let mut deriv = poly.clone();
    for _ in 1..multiplicity {
        deriv = deriv.derivative();
    }
    let mut z = centroid;
    for _ in 0..MAX_NEWTON_STEPS {
        let (f, df) = deriv.eval_with_derivative(z);
        if df.norm() == 0.0 {
            break;
        }
        let step = f / df;
        z -= step;
        if step.norm() <= 1e-16 {
            break;
        }
    }
    if (z - centroid).norm() <= CLUSTER_GAP && z.is_finite() {
        z
    } else {
        centroid
    }
}

/// Groups roots near the unit circle by angular proximity, wrapping at 0.
fn unit_clusters(mut roots: Vec<Complex64>) -> Vec<Vec<Complex64>> {
    if roots.is_empty() {
        return Vec::new();
    }
    roots.sort_by(|a, b| math::wrap_angle(a.arg()).total_cmp(&math::wrap_angle(b.arg())));
    let len = roots.len();
    // start right after a gap so no cluster straddles the seam
    let start = (0..len)
        .find(|&i| (roots[i] - roots[(i + len - 1) % len]).norm() > CLUSTER_GAP)
        .unwrap_or(0);
    let mut clusters: Vec<Vec<Complex64>> = Vec::new();
    for offset in 0..len {
        let r = roots[(start + offset) % len];
        match clusters.last_mut() {
            Some(current) if (r - *current.last().unwrap()).norm() <= CLUSTER_GAP => {
                current.push(r)
            }
            _ => clusters.push(alloc::vec![r]),
        }
    }
    clusters
}
