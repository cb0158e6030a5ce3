//! Hurwitz stability of square complex matrix polynomials.
//!
//! A monic `F(z) = I z^n + A_1 z^{n-1} + ... + A_n` is split into its even and
//! odd parts, from which the library builds matricial Markov parameters,
//! their block-Hankel matrices and Stieltjes continued fractions. When the
//! relevant truncation of Markov parameters is Hermitian these give exact
//! stability tests and zero counts; every verdict can be compared with the
//! eigenvalues of a block-companion linearization in [`oracle`].
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

#[cfg(test)]
extern crate self as hurwitz_core;


mod eigen;
mod error;

pub mod bezout;
pub mod criteria;
pub mod gcd;
pub mod hermitian;
pub mod markov;
pub mod matrix;
pub mod minors;
pub mod oracle;
pub mod poly;
pub mod stieltjes;

pub use error::{Error, Result};
pub use matrix::CMatrix;
pub use poly::{EvenOddPair, MatrixPolynomial, Parity};

/// Complex scalar used throughout: a pair of 64-bit floats.
pub type Complex = num_complex::Complex64;

/// Default relative tolerance for linear-algebra decisions.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Default relative half-width of the imaginary-axis band used by the oracle.
pub const DEFAULT_AXIS_TOL: f64 = 1e-8;

/// Tolerances shared by the decision procedures.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Hermitian tests, inertia and positive definiteness.
    pub linalg: f64,
    /// Relative band around the imaginary axis for eigenvalue classification.
    pub axis: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            linalg: DEFAULT_TOL,
            axis: DEFAULT_AXIS_TOL,
        }
    }
}

#[inline]
pub(crate) fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}
