//! Polynomials with all critical points on the unit circle.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! * [`poly`] and [`trig`]: complex polynomials, normalized polynomials and
//!   real trigonometric polynomials, with the maps that restrict the former
//!   to the unit circle.
//! * [`roots`]: simultaneous (Aberth–Ehrlich) root finding, critical points
//!   and the n-th roots of `-1`.
//! * [`fejer`]: global minimization on the circle and constructive
//!   Fejér–Riesz spectral factorization.
//! * [`classes`]: membership checkers for positive real part,
//!   Noshiro–Warschawski and starlike polynomials.
//! * [`theorem`]: the harness that checks the equivalence of those classes
//!   for extremal polynomials, plus randomized searches.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classes;
pub mod error;
pub mod fejer;
mod math;
pub mod poly;
pub mod roots;
pub mod theorem;
pub mod trig;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use poly::{ComplexPoly, NormalizedPoly};
pub use trig::TrigPoly;
