//! The number field Q(i, sqrt2).
//!
//! Elements are stored on the fixed Q-basis `{1, i, sqrt2, i*sqrt2}` with
//! arbitrary-precision rational coordinates, so arithmetic is closed and
//! exact under `i^2 = -1`, `(sqrt2)^2 = 2`, `(i*sqrt2)^2 = -2`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Scalar;

/// An element `a + b*i + c*sqrt2 + d*i*sqrt2` of Q(i, sqrt2).
///
/// `BigRational` keeps each coordinate in lowest terms with a positive
/// denominator, so the representation is canonical by construction and
/// equality is plain coordinate equality.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

fn rat(num: i64, den: i64) -> BigRational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl FieldElem {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        FieldElem { a, b, c, d }
    }

    /// The rational `num/den` as a field element.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        FieldElem::new(rat(num, den), BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn from_rational(q: BigRational) -> Self {
        FieldElem::new(q, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        FieldElem::new(BigRational::zero(), BigRational::one(), BigRational::zero(), BigRational::zero())
    }

    /// `sqrt2`.
    pub fn sqrt2() -> Self {
        FieldElem::new(BigRational::zero(), BigRational::zero(), BigRational::one(), BigRational::zero())
    }

    /// `i*sqrt2`.
    pub fn i_sqrt2() -> Self {
        FieldElem::new(BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::one())
    }

    /// Basis coordinates `(a, b, c, d)` along `{1, i, sqrt2, i*sqrt2}`.
    pub fn coords(&self) -> (&BigRational, &BigRational, &BigRational, &BigRational) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    /// The rational part, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.b.is_zero() && self.c.is_zero() && self.d.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Galois conjugation `i -> -i`.
    pub fn conj_i(&self) -> Self {
        FieldElem::new(self.a.clone(), -self.b.clone(), self.c.clone(), -self.d.clone())
    }

    /// Galois conjugation `sqrt2 -> -sqrt2`.
    pub fn conj_sqrt2(&self) -> Self {
        FieldElem::new(self.a.clone(), self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    /// Exact inverse. `None` for zero.
    ///
    /// Multiplying by the two Galois conjugates pushes the element down to
    /// Q: `x * conj_i(x)` lies in Q(sqrt2), and a further `conj_sqrt2`
    /// factor lands in Q, where division is trivial.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let t = self.clone() * self.conj_i(); // in Q(sqrt2)
        let norm = t.clone() * t.conj_sqrt2(); // in Q
        let n = norm.as_rational().expect("norm must be rational").clone();
        debug_assert!(!n.is_zero());
        let scale = FieldElem::from_rational(n.recip());
        Some(self.conj_i() * t.conj_sqrt2() * scale)
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        FieldElem::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c, self.d + rhs.d)
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        FieldElem::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c, self.d - rhs.d)
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        &self * &rhs
    }
}

// Reference multiplication is the hot path of every matrix product.
impl Mul<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        let two = BigRational::from(BigInt::from(2));
        FieldElem::new(
            a1 * a2 - b1 * b2 + &two * (c1 * c2 - d1 * d2),
            a1 * b2 + b1 * a2 + &two * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 - (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )
    }
}

impl Div for FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: FieldElem) -> FieldElem {
        self * rhs.inv().expect("division by zero in Q(i, sqrt2)")
    }
}

impl Zero for FieldElem {
    fn zero() -> Self {
        FieldElem::new(BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl One for FieldElem {
    fn one() -> Self {
        FieldElem::from_ratio(1, 1)
    }
}

impl Scalar for FieldElem {
    fn rational(num: i64, den: i64) -> Self {
        FieldElem::from_ratio(num, den)
    }

    fn from_field(c: FieldElem) -> Self {
        c
    }

    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }

    fn coeff_norm(&self) -> BigRational {
        self.a.abs() + self.b.abs() + self.c.abs() + self.d.abs()
    }
}

/// Canonical rendering: `a/b + c/d i + e/f r2 + g/h i r2` with every
/// coordinate written as an explicit fraction. This is the exact format
/// used by the dump files, so it is deliberately rigid.
impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} + {}/{} i + {}/{} r2 + {}/{} i r2",
            self.a.numer(),
            self.a.denom(),
            self.b.numer(),
            self.b.denom(),
            self.c.numer(),
            self.c.denom(),
            self.d.numer(),
            self.d.denom()
        )
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
