//! Complex polynomials in ascending-degree coefficient order.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Coefficients whose modulus falls below this are stripped from the top.
pub const TRAILING_ZERO_TOL: f64 = 1e-14;

/// Tolerance used when deciding whether `|a_n| = 1/n`.
pub const EXTREMAL_TOL: f64 = 1e-12;

/// Rotation parameters must satisfy `||lambda| - 1| <= UNIMODULAR_TOL`.
pub const UNIMODULAR_TOL: f64 = 1e-12;

/// A complex polynomial `c0 + c1 z + ... + cn z^n`.
///
/// The coefficient list is always canonical: the top entry has modulus at
/// least [`TRAILING_ZERO_TOL`]. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| c.norm() < TRAILING_ZERO_TOL) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `z^n`
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); n + 1];
        coeffs[n] = Complex64::new(1.0, 0.0);
        Self { coeffs }
    }

    /// `lead * prod (z - r)`
    pub fn from_roots(lead: Complex64, roots: &[Complex64]) -> Self {
        let mut coeffs = Vec::with_capacity(roots.len() + 1);
        coeffs.push(lead);
        for &r in roots {
            coeffs.push(Complex64::new(0.0, 0.0));
            for k in (1..coeffs.len()).rev() {
                let lower = coeffs[k - 1];
                coeffs[k] = lower - r * coeffs[k];
            }
            coeffs[0] = -r * coeffs[0];
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Coefficient of `z^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    /// Largest coefficient modulus, zero for the zero polynomial.
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Value and first derivative in a single Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        self.coeffs
            .iter()
            .rev()
            .fold((zero, zero), |(p, dp), &c| (p * z + c, dp * z + p))
    }

    /// `sum |c_k| |z|^k`, the scale of the rounding error of [`Self::eval`].
    pub fn abs_eval(&self, modulus: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * modulus + c.norm())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// Multiplication by `z`.
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Exact division by `z`; fails unless `c0 = 0`.
    pub fn divide_by_z(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(Self::zero()),
            Some(c0) if *c0 != Complex64::new(0.0, 0.0) => Err(Error::NotVanishingAtOrigin {
                re: c0.re,
                im: c0.im,
            }),
            Some(_) => Ok(Self::new(self.coeffs[1..].to_vec())),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            alloc::vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }
}

/// A polynomial `z + a2 z^2 + ... + an z^n` with `n >= 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedPoly {
    inner: ComplexPoly,
}

impl NormalizedPoly {
    /// Requires `c0 = 0` and `c1 = 1` exactly and degree at least two.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        let inner = ComplexPoly::new(coeffs);
        if inner.coeff(0) != Complex64::new(0.0, 0.0) {
            return Err(Error::NotNormalized {
                reason: "constant coefficient must be 0",
            });
        }
        if inner.coeff(1) != Complex64::new(1.0, 0.0) {
            return Err(Error::NotNormalized {
                reason: "linear coefficient must be 1",
            });
        }
        let degree = inner.degree().unwrap_or(0);
        if degree < 2 {
            return Err(Error::InvalidDegree {
                degree,
                reason: "normalized polynomials need degree >= 2",
            });
        }
        Ok(Self { inner })
    }

    /// `z + sum_{k=2}^{n-1} a_k z^k + lead z^n` from `middle = [a_2, .., a_{n-1}]`.
    pub fn from_parts(middle: &[Complex64], lead: Complex64) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(middle.len() + 3);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.push(Complex64::new(1.0, 0.0));
        coeffs.extend_from_slice(middle);
        coeffs.push(lead);
        Self::new(coeffs)
    }

    pub fn try_from_poly(poly: &ComplexPoly) -> Result<Self> {
        Self::new(poly.coeffs().to_vec())
    }

    pub fn as_poly(&self) -> &ComplexPoly {
        &self.inner
    }

    pub fn into_poly(self) -> ComplexPoly {
        self.inner
    }

    pub fn degree(&self) -> usize {
        self.inner.coeffs.len() - 1
    }

    /// `a_k`, zero outside `0..=n`.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.inner.coeff(k)
    }

    pub fn leading(&self) -> Complex64 {
        self.inner.coeffs[self.degree()]
    }

    /// `[a_2, .., a_{n-1}]`
    pub fn middle(&self) -> &[Complex64] {
        &self.inner.coeffs[2..self.degree()]
    }

    /// `|a_n| = 1/n` within [`EXTREMAL_TOL`].
    pub fn is_extremal(&self) -> bool {
        self.extremal_defect() <= EXTREMAL_TOL
    }

    /// `||a_n| - 1/n|`
    pub fn extremal_defect(&self) -> f64 {
        (self.leading().norm() - 1.0 / self.degree() as f64).abs()
    }

    /// `conj(lambda) P(lambda z)`: coefficient `k` becomes `lambda^(k-1) a_k`.
    pub fn rotate(&self, lambda: Complex64) -> Result<Self> {
        let modulus = lambda.norm();
        if (modulus - 1.0).abs() > UNIMODULAR_TOL {
            return Err(Error::NonUnimodularRotation { modulus });
        }
        let mut coeffs = self.inner.coeffs.clone();
        let mut power = Complex64::new(1.0, 0.0);
        for c in coeffs.iter_mut().skip(2) {
            power *= lambda;
            *c *= power;
        }
        Ok(Self {
            inner: ComplexPoly { coeffs },
        })
    }

    /// The rotation that makes the leading coefficient real and positive.
    pub fn rotate_to_positive_leading(&self) -> Self {
        let n = self.degree();
        let lead = self.leading();
        // lambda^(n-1) lead > 0 with lambda = e^{i phi}
        let phi = -lead.arg() / (n - 1) as f64;
        let mut rotated = self
            .rotate(Complex64::from_polar(1.0, phi))
            .expect("unit-modulus rotation");
        let top = rotated.inner.coeffs[n];
        rotated.inner.coeffs[n] = Complex64::new(top.norm(), 0.0);
        rotated
    }

    /// `R(z) = P(z) / z`, so that `R(0) = 1`.
    pub fn associated_r(&self) -> ComplexPoly {
        self.inner
            .divide_by_z()
            .expect("normalized polynomials vanish at the origin")
    }

    /// `z P'(z)`
    pub fn z_derivative(&self) -> ComplexPoly {
        self.inner.derivative().shift_up()
    }
}
