//! Dense univariate polynomials over an exact field.
//!
//! Coefficients are stored lowest degree first with no trailing zeros; the
//! zero polynomial is the empty list. Euclidean division, monic gcd and the
//! squarefree part (characteristic zero, via gcd with the derivative) are
//! the workhorses: they normalize rational functions in `q` and drive the
//! distinct-root counts used as an independent oracle elsewhere.

use std::fmt;

use crate::algebra::field::Field;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        if c.is_zero() {
            UniPoly::zero()
        } else {
            UniPoly { coeffs: vec![c] }
        }
    }

    /// `c * x^deg`.
    pub fn monomial(c: F, deg: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![F::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    /// From low-to-high coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, F::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> F {
        self.coeffs.get(deg).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, F::is_one)
    }

    /// True when exactly one coefficient is nonzero.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(F::neg).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division: `self = q * rhs + r` with `deg r < deg rhs`.
    pub fn divrem(&self, rhs: &Self) -> Result<(Self, Self)> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = rhs.degree().unwrap();
        let lc_inv = rhs.leading().unwrap().inv()?;
        let mut rem = self.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let factor = rem.leading().unwrap().mul(&lc_inv);
            let shift = rd - d;
            quot[shift] = quot[shift].add(&factor);
            // rem -= factor * x^shift * rhs
            for (i, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let idx = i + shift;
                rem.coeffs[idx] = rem.coeffs[idx].sub(&factor.mul(b));
            }
            rem.trim();
        }
        Ok((UniPoly::from_coeffs(quot), rem))
    }

    /// Derivative (characteristic zero).
    pub fn derivative(&self) -> Self {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&F::from_i64(i as i64)))
            .collect();
        UniPoly::from_coeffs(out)
    }

    /// Scale to leading coefficient 1; `Err(ZeroPolynomial)` on zero.
    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lc.inv()?))
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Substitute `x -> -x`.
    pub fn compose_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    /// Render with the given variable name, highest degree first.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let body = match deg {
                0 => mag,
                1 if mag == "1" => var.to_string(),
                1 => format!("{mag}*{var}"),
                _ if mag == "1" => format!("{var}^{deg}"),
                _ => format!("{mag}*{var}^{deg}"),
            };
            out.push_str(&body);
        }
        out
    }
}

/// Monic greatest common divisor via the Euclidean algorithm.
/// At least one argument must be nonzero.
pub fn gcd<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> Result<UniPoly<F>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        // Monic normalization keeps coefficient growth in check.
        y = y.monic()?;
        let (_, r) = x.divrem(&y)?;
        x = y;
        y = r;
    }
    x.monic()
}

/// Product of the distinct irreducible factors: `f / gcd(f, f')`, monic.
/// Valid in characteristic zero. Its degree is the number of distinct roots
/// of `f` in an algebraic closure.
pub fn squarefree_part<F: Field>(f: &UniPoly<F>) -> Result<UniPoly<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Ok(UniPoly::one());
    }
    let g = gcd(f, &f.derivative())?;
    let (q, r) = f.divrem(&g)?;
    debug_assert!(r.is_zero(), "gcd must divide f exactly");
    let _ = r;
    q.monic()
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
