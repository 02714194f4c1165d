//! The rational function field Q(q).
//!
//! Elements are reduced fractions of univariate rational-coefficient
//! polynomials in the quantum parameter `q`, with a monic denominator.
//! This is the coefficient field for "generic q" computations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::field::{CoeffField, Field, QScalar};
use crate::algebra::rational::Rational;
use crate::algebra::unipoly::{gcd, UniPoly};
use crate::error::{Error, Result};

/// Reduced fraction in Q(q): `gcd(num, den) = 1`, `den` monic, zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: UniPoly<Rational>,
    den: UniPoly<Rational>,
}

impl RatFn {
    /// Build and normalize `num/den`; fails when `den == 0`.
    pub fn new(num: UniPoly<Rational>, den: UniPoly<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFn {
                num,
                den: UniPoly::one(),
            });
        }
        let g = gcd(&num, &den)?;
        let (num, r) = num.divrem(&g)?;
        debug_assert!(r.is_zero());
        let (den, r) = den.divrem(&g)?;
        debug_assert!(r.is_zero());
        // Make the denominator monic, folding the scale into the numerator.
        let lc = den.leading().expect("nonzero denominator").clone();
        let lc_inv = lc.inv()?;
        Ok(RatFn {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn from_poly(num: UniPoly<Rational>) -> Self {
        RatFn {
            num,
            den: UniPoly::one(),
        }
    }

    /// The generator `q`.
    pub fn q() -> Self {
        RatFn::from_poly(UniPoly::monomial(Rational::one(), 1))
    }

    pub fn numerator(&self) -> &UniPoly<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly<Rational> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Substitute a rational value for `q`; fails if it cancels the denominator.
    pub fn eval_q(&self, value: &Rational) -> Result<Rational> {
        let den = self.den.eval(value);
        self.num.eval(value).div(&den)
    }
}

impl Field for RatFn {
    fn zero() -> Self {
        RatFn::from_poly(UniPoly::zero())
    }

    fn one() -> Self {
        RatFn::from_poly(UniPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RatFn::new(num, den).expect("denominator product is nonzero")
    }

    fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.num);
        let den = self.den.mul(&rhs.den);
        RatFn::new(num, den).expect("denominator product is nonzero")
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFn::new(self.den.clone(), self.num.clone())
    }

    fn from_rational(r: &Rational) -> Self {
        RatFn::from_poly(UniPoly::constant(r.clone()))
    }

    fn q_degrees(&self) -> Option<Vec<i64>> {
        if self.is_zero() {
            return Some(Vec::new());
        }
        // Graded exactly when the denominator is a single power of q.
        if !self.den.is_monomial() {
            return None;
        }
        let shift = self.den.degree().unwrap() as i64;
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(d, _)| d as i64 - shift)
                .collect(),
        )
    }
}

impl QScalar for RatFn {
    fn q_scalar(cf: &CoeffField) -> Result<Self> {
        match cf {
            CoeffField::Generic => Ok(RatFn::q()),
            CoeffField::Specialized(_) => Err(Error::CoeffFieldMismatch),
        }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.to_string_var("q");
        if self.is_polynomial() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", self.den.to_string_var("q"))
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        Field::add(self, rhs)
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        Field::sub(self, rhs)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        Field::mul(self, rhs)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        Field::neg(self)
    }
}
