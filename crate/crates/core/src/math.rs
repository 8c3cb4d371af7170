//! Thin wrappers over `libm` so the rest of the crate reads like std code.

use core::f64::consts::TAU;

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

/// Reduces an angle into `[0, 2π)`.
#[inline]
pub(crate) fn wrap_angle(t: f64) -> f64 {
    let r = t - TAU * libm::floor(t / TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}
