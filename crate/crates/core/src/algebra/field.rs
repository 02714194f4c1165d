//! Field abstraction used by all polynomial and matrix code.
//!
//! Two concrete coefficient fields matter here: the rationals (with the
//! quantum parameter specialized to a nonzero value) and the rational
//! function field in the quantum parameter `q`. Everything downstream is
//! generic over [`Field`] so both run through identical code paths.

use std::fmt;

use crate::algebra::rational::Rational;
use crate::error::{Error, Result};

/// Exact field arithmetic. All operations are total except inversion,
/// which fails on zero rather than panicking.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse; `Err(DivisionByZero)` on zero.
    fn inv(&self) -> Result<Self>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Embed a rational constant.
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n))
    }

    /// Exponents of `q` appearing in this scalar, for weighted-degree
    /// bookkeeping. Plain rationals sit in degree 0; a rational function is
    /// graded only when its denominator is a single power of `q` (the list
    /// holds numerator-term degrees minus that power). `None` means the
    /// scalar has no finite q-degree decomposition.
    fn q_degrees(&self) -> Option<Vec<i64>>;
}

/// Description of the coefficient field a model is built over: either the
/// rationals with `q` fixed to a nonzero value, or the rational function
/// field with `q` symbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffField {
    /// Rationals, `q` specialized to the given nonzero value.
    Specialized(Rational),
    /// Rational functions in `q`.
    Generic,
}

impl CoeffField {
    /// The conventional specialization `q = -1`.
    pub fn default_specialized() -> Self {
        CoeffField::Specialized(Rational::from_integer(-1))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            CoeffField::Specialized(q) if q.is_zero() => Err(Error::ZeroQuantumParameter),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for CoeffField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffField::Specialized(q) => write!(f, "Q with q = {q}"),
            CoeffField::Generic => write!(f, "Q(q)"),
        }
    }
}

/// Fields that can play the role of the quantum parameter's home: they know
/// how to produce the scalar `q` itself from a [`CoeffField`] description.
pub trait QScalar: Field {
    /// The scalar representing `q`. Fails when the description and the
    /// concrete field type disagree (e.g. a symbolic `q` cannot live in Q).
    fn q_scalar(cf: &CoeffField) -> Result<Self>;
}
