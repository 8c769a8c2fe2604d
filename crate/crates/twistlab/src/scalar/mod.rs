//! Exact scalar rings used throughout the crate.
//!
//! All linear algebra is generic over [`Scalar`], a commutative ring with
//! exact equality. Two implementations are provided:
//!
//! * [`FieldElem`] — the number field Q(i, sqrt2), in which every
//!   representation matrix of this crate lives;
//! * [`PolyParam`] — polynomials in the deformation parameter `h` with
//!   `FieldElem` coefficients, used when the one-parameter family of a
//!   twist is needed (classical-limit extraction).
//!
//! Residuals are never "small": an identity either holds exactly
//! (residual zero) or fails with an exact nonzero witness.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

mod field;
mod poly;

pub use field::FieldElem;
pub use poly::PolyParam;

/// Commutative ring with exact equality, as required by the matrix layer.
///
/// `Zero`/`One` come from `num-traits` and carry the `Add`/`Mul` bounds.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Add<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// The exact rational `num/den` embedded into the ring.
    fn rational(num: i64, den: i64) -> Self;

    /// Embed a coefficient of the base number field.
    fn from_field(c: FieldElem) -> Self;

    /// Multiplicative inverse, if this element is a unit of the ring.
    fn try_inv(&self) -> Option<Self>;

    /// Exact magnitude proxy used for residual reports: the sum of the
    /// absolute values of all rational coordinates. Zero iff the element
    /// is zero; no floating point involved.
    fn coeff_norm(&self) -> BigRational;

    fn from_int(n: i64) -> Self {
        Self::rational(n, 1)
    }
}
