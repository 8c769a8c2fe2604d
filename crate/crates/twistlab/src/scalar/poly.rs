//! Polynomials in the deformation parameter `h` over Q(i, sqrt2).
//!
//! Coefficients are stored in ascending powers of `h` with no trailing
//! zeros, so the zero polynomial is the empty coefficient vector and
//! equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{FieldElem, Scalar};

/// A polynomial `c0 + c1 h + c2 h^2 + ...` with `FieldElem` coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyParam {
    coeffs: Vec<FieldElem>,
}

impl PolyParam {
    fn normalized(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyParam { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<FieldElem>) -> Self {
        Self::normalized(coeffs)
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::normalized(vec![c])
    }

    /// The parameter `h` itself.
    pub fn h() -> Self {
        PolyParam {
            coeffs: vec![FieldElem::zero(), FieldElem::one()],
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `h^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> FieldElem {
        self.coeffs.get(k).cloned().unwrap_or_else(FieldElem::zero)
    }

    /// Evaluate at a point of the coefficient field (Horner).
    pub fn eval(&self, h0: &FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * h0.clone() + c.clone();
        }
        acc
    }
}

impl From<FieldElem> for PolyParam {
    fn from(c: FieldElem) -> Self {
        PolyParam::constant(c)
    }
}

impl Add for PolyParam {
    type Output = PolyParam;
    fn add(self, rhs: PolyParam) -> PolyParam {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        PolyParam::normalized(out)
    }
}

impl Sub for PolyParam {
    type Output = PolyParam;
    fn sub(self, rhs: PolyParam) -> PolyParam {
        self + (-rhs)
    }
}

impl Neg for PolyParam {
    type Output = PolyParam;
    fn neg(self) -> PolyParam {
        PolyParam {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for PolyParam {
    type Output = PolyParam;
    fn mul(self, rhs: PolyParam) -> PolyParam {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return PolyParam::zero();
        }
        let mut out = vec![FieldElem::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                out[i + j] = out[i + j].clone() + t;
            }
        }
        PolyParam::normalized(out)
    }
}

impl Zero for PolyParam {
    fn zero() -> Self {
        PolyParam { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for PolyParam {
    fn one() -> Self {
        PolyParam::constant(FieldElem::one())
    }
}

impl Scalar for PolyParam {
    fn rational(num: i64, den: i64) -> Self {
        PolyParam::constant(FieldElem::from_ratio(num, den))
    }

    fn from_field(c: FieldElem) -> Self {
        PolyParam::constant(c)
    }

    /// Units of the polynomial ring are the nonzero constants.
    fn try_inv(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => self.coeffs[0].inv().map(PolyParam::constant),
            _ => None,
        }
    }

    fn coeff_norm(&self) -> BigRational {
        self.coeffs
            .iter()
            .map(|c| c.coeff_norm())
            .fold(BigRational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for PolyParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "({})", FieldElem::zero());
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({}) h", c)?,
                _ => write!(f, "({}) h^{}", c, k)?,
            }
        }
        Ok(())
    }
}
