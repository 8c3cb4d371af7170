//! Real trigonometric polynomials and restrictions of complex polynomials
//! to the unit circle.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::math;
use crate::poly::ComplexPoly;

/// `a0 + sum_{k=1}^n (cos[k-1] cos kt + sin[k-1] sin kt)`.
///
/// The Hermitian Laurent view is `c_0 = a0`, `c_k = (alpha_k - i beta_k)/2`
/// and `c_{-k} = conj(c_k)`, so that `T(t) = sum_k c_k e^{ikt}`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TrigPoly {
    a0: f64,
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl TrigPoly {
    /// Pads the shorter harmonic list with zeros.
    pub fn new(a0: f64, mut cos: Vec<f64>, mut sin: Vec<f64>) -> Self {
        let n = cos.len().max(sin.len());
        cos.resize(n, 0.0);
        sin.resize(n, 0.0);
        Self { a0, cos, sin }
    }

    pub fn constant(a0: f64) -> Self {
        Self::new(a0, Vec::new(), Vec::new())
    }

    /// Builds from the non-negative half `c_0..c_n` of a Hermitian Laurent
    /// sequence; the imaginary part of `c_0` is ignored.
    pub fn from_laurent(half: &[Complex64]) -> Self {
        let Some((c0, rest)) = half.split_first() else {
            return Self::default();
        };
        Self {
            a0: c0.re,
            cos: rest.iter().map(|c| 2.0 * c.re).collect(),
            sin: rest.iter().map(|c| -2.0 * c.im).collect(),
        }
    }

    /// `c_0..c_n` of the Hermitian Laurent view.
    pub fn laurent(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.cos.len() + 1);
        out.push(Complex64::new(self.a0, 0.0));
        out.extend(
            self.cos
                .iter()
                .zip(&self.sin)
                .map(|(&a, &b)| Complex64::new(a / 2.0, -b / 2.0)),
        );
        out
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    /// `alpha_1..alpha_n`
    pub fn cos_coeffs(&self) -> &[f64] {
        &self.cos
    }

    /// `beta_1..beta_n`
    pub fn sin_coeffs(&self) -> &[f64] {
        &self.sin
    }

    /// `alpha_k`, with `alpha_0 = a0`; zero past the degree.
    pub fn alpha(&self, k: usize) -> f64 {
        match k {
            0 => self.a0,
            _ => self.cos.get(k - 1).copied().unwrap_or(0.0),
        }
    }

    /// `beta_k`; zero for `k = 0` and past the degree.
    pub fn beta(&self, k: usize) -> f64 {
        match k {
            0 => 0.0,
            _ => self.sin.get(k - 1).copied().unwrap_or(0.0),
        }
    }

    /// Number of stored harmonics (trailing zeros included).
    pub fn len(&self) -> usize {
        self.cos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cos.is_empty() && self.a0 == 0.0
    }

    /// Highest harmonic with a nonzero coefficient.
    pub fn degree(&self) -> usize {
        (1..=self.cos.len())
            .rev()
            .find(|&k| self.cos[k - 1] != 0.0 || self.sin[k - 1] != 0.0)
            .unwrap_or(0)
    }

    /// Drops harmonics above [`Self::degree`].
    pub fn trimmed(&self) -> Self {
        let d = self.degree();
        Self {
            a0: self.a0,
            cos: self.cos[..d].to_vec(),
            sin: self.sin[..d].to_vec(),
        }
    }

    /// Largest coefficient magnitude over `a0`, `alpha`, `beta`.
    pub fn max_abs_coeff(&self) -> f64 {
        self.cos
            .iter()
            .chain(&self.sin)
            .fold(self.a0.abs(), |m, c| m.max(c.abs()))
    }

    /// Largest coefficient-wise difference, missing harmonics read as zero.
    pub fn max_coeff_diff(&self, other: &Self) -> f64 {
        let n = self.cos.len().max(other.cos.len());
        (1..=n).fold((self.a0 - other.a0).abs(), |m, k| {
            m.max((self.alpha(k) - other.alpha(k)).abs())
                .max((self.beta(k) - other.beta(k)).abs())
        })
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.eval_at(Complex64::new(math::cos(t), math::sin(t)))
    }

    /// Evaluation at `z = e^{it}` supplied by the caller.
    pub fn eval_at(&self, z: Complex64) -> f64 {
        // T = a0 + Re sum_k (alpha_k - i beta_k) z^k
        let mut acc = Complex64::new(0.0, 0.0);
        for (&a, &b) in self.cos.iter().zip(&self.sin).rev() {
            acc = (acc + Complex64::new(a, -b)) * z;
        }
        self.a0 + acc.re
    }

    /// `(T(t), T'(t), T''(t))`
    pub fn eval_with_derivatives(&self, t: f64) -> (f64, f64, f64) {
        let z = Complex64::new(math::cos(t), math::sin(t));
        let mut power = Complex64::new(1.0, 0.0);
        let (mut f, mut d1, mut d2) = (self.a0, 0.0, 0.0);
        for (k, (&a, &b)) in self.cos.iter().zip(&self.sin).enumerate() {
            power *= z;
            let k = (k + 1) as f64;
            let term = Complex64::new(a, -b) * power;
            f += term.re;
            // d/dt multiplies the k-th term by ik
            d1 -= k * term.im;
            d2 -= k * k * term.re;
        }
        (f, d1, d2)
    }

    /// `T'(t)` as a trigonometric polynomial.
    pub fn derivative(&self) -> Self {
        let mut cos = Vec::with_capacity(self.cos.len());
        let mut sin = Vec::with_capacity(self.sin.len());
        for (k, (&a, &b)) in self.cos.iter().zip(&self.sin).enumerate() {
            let k = (k + 1) as f64;
            cos.push(k * b);
            sin.push(-k * a);
        }
        Self { a0: 0.0, cos, sin }
    }

    /// `A(z) = z^n sum_{k=-n}^{n} c_k z^k` of degree `2n`, where `n` is the
    /// number of stored harmonics. On `|z| = 1`, `A(e^{it}) = e^{int} T(t)`.
    pub fn algebraic(&self) -> ComplexPoly {
        let half = self.laurent();
        let n = half.len() - 1;
        let mut coeffs = Vec::with_capacity(2 * n + 1);
        coeffs.extend(half[1..].iter().rev().map(|c| c.conj()));
        coeffs.extend_from_slice(&half);
        ComplexPoly::new(coeffs)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            a0: self.a0 * s,
            cos: self.cos.iter().map(|c| c * s).collect(),
            sin: self.sin.iter().map(|c| c * s).collect(),
        }
    }
}

/// `Re P(e^{it})` as a trigonometric polynomial of degree `deg P`.
pub fn boundary_real_part(poly: &ComplexPoly) -> TrigPoly {
    let Some((c0, rest)) = poly.coeffs().split_first() else {
        return TrigPoly::default();
    };
    TrigPoly {
        a0: c0.re,
        cos: rest.iter().map(|c| c.re).collect(),
        sin: rest.iter().map(|c| -c.im).collect(),
    }
}

/// `Re{A(e^{it}) conj(B(e^{it}))}` as a trigonometric polynomial.
///
/// The Laurent coefficient at lag `k` of `A conj(B)` is
/// `d_k = sum_j a_{j+k} conj(b_j)`; taking real parts symmetrizes it to
/// `(d_k + conj(d_{-k})) / 2`, and `conj(d_{-k}) = sum_j b_{j+k} conj(a_j)`.
pub fn trig_product_real(a: &ComplexPoly, b: &ComplexPoly) -> TrigPoly {
    let (a, b) = (a.coeffs(), b.coeffs());
    let n = a.len().max(b.len()).saturating_sub(1);
    let lag = |x: &[Complex64], y: &[Complex64], k: usize| -> Complex64 {
        y.iter()
            .zip(x.iter().skip(k))
            .map(|(yj, xjk)| xjk * yj.conj())
            .sum()
    };
    let half: Vec<Complex64> = (0..=n)
        .map(|k| (lag(a, b, k) + lag(b, a, k)) / 2.0)
        .collect();
    TrigPoly::from_laurent(&half)
}

/// Every coefficient has magnitude at most `tol`.
pub fn is_zero_trig(trig: &TrigPoly, tol: f64) -> bool {
    trig.max_abs_coeff() <= tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn boundary_real_part_examples() {
        let id = boundary_real_part(&ComplexPoly::from_real(&[0.0, 1.0]));
        assert_eq!(id, TrigPoly::new(0.0, vec![1.0], vec![0.0]));
        let imag = boundary_real_part(&ComplexPoly::new(vec![c(0.0, 1.0)]));
        assert!(is_zero_trig(&imag, 1e-300));
        let t = boundary_real_part(&ComplexPoly::from_real(&[1.0, 0.0, 1.0]));
        assert_eq!(t, TrigPoly::new(1.0, vec![0.0, 1.0], vec![0.0, 0.0]));
    }

    #[test]
    fn boundary_real_part_signs() {
        // Re(i e^{it}) = -sin t
        let t = boundary_real_part(&ComplexPoly::new(vec![c(0.0, 0.0), c(0.0, 1.0)]));
        assert_eq!(t.beta(1), -1.0);
        assert!((t.eval(PI / 2.0) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn trig_product_examples() {
        let z = ComplexPoly::from_real(&[0.0, 1.0]);
        let t = trig_product_real(&z, &z);
        assert!((t.a0() - 1.0).abs() < 1e-15);
        assert!(t.max_coeff_diff(&TrigPoly::constant(1.0)) < 1e-15);

        let zdp = ComplexPoly::from_real(&[0.0, 1.0, 0.0, 1.0]);
        let p = ComplexPoly::from_real(&[0.0, 1.0, 0.0, 1.0 / 3.0]);
        let t = trig_product_real(&zdp, &p);
        let expect = TrigPoly::new(4.0 / 3.0, vec![0.0, 4.0 / 3.0, 0.0], vec![]);
        assert!(t.max_coeff_diff(&expect) < 1e-15);

        let dp = ComplexPoly::from_real(&[1.0, 0.0, 1.0]);
        let r = ComplexPoly::from_real(&[1.0, 0.0, 1.0 / 3.0]);
        let t = trig_product_real(&dp, &r);
        assert!(t.max_coeff_diff(&expect) < 1e-15);
        // alpha_{n-1} = 1 + 1/n for n = 3
        assert!((t.alpha(2) - (1.0 + 1.0 / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn is_zero_trig_examples() {
        assert!(is_zero_trig(&TrigPoly::default(), 1e-12));
        assert!(is_zero_trig(
            &TrigPoly::new(0.0, vec![1e-15], vec![]),
            1e-12
        ));
        assert!(!is_zero_trig(&TrigPoly::new(1.0, vec![1.0], vec![]), 1e-12));
    }

    #[test]
    fn laurent_round_trip() {
        let t = TrigPoly::new(0.25, vec![1.0, -0.5, 0.125], vec![0.3, 0.0, -2.0]);
        let back = TrigPoly::from_laurent(&t.laurent());
        assert!(back.max_coeff_diff(&t) <= 1e-14);
        assert_eq!(t.laurent()[1], c(0.5, -0.15));
    }

    #[test]
    fn derivatives_match_trig_derivative() {
        let t = TrigPoly::new(0.25, vec![1.0, -0.5, 0.125], vec![0.3, 0.0, -2.0]);
        let d = t.derivative();
        let dd = d.derivative();
        for i in 0..32 {
            let s = i as f64 * 0.2;
            let (f, f1, f2) = t.eval_with_derivatives(s);
            assert!((f - t.eval(s)).abs() < 1e-13);
            assert!((f1 - d.eval(s)).abs() < 1e-13);
            assert!((f2 - dd.eval(s)).abs() < 1e-12);
        }
    }

    #[test]
    fn algebraic_form_on_circle() {
        let t = TrigPoly::new(0.25, vec![1.0, -0.5], vec![0.3, 0.7]);
        let a = t.algebraic();
        assert_eq!(a.degree(), Some(4));
        for i in 0..16 {
            let s = i as f64 * 0.4;
            let z = Complex64::from_polar(1.0, s);
            let lhs = a.eval(z);
            let rhs = z.powu(2) * t.eval(s);
            assert!((lhs - rhs).norm() < 1e-13);
        }
    }

    #[test]
    fn degree_and_trim() {
        let t = TrigPoly::new(1.0, vec![1.0, 0.0, 0.0], vec![0.0, 2.0, 0.0]);
        assert_eq!(t.degree(), 2);
        assert_eq!(t.trimmed().len(), 2);
        assert_eq!(TrigPoly::constant(3.0).degree(), 0);
    }
}
