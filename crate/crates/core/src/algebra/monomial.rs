//! Exponent vectors and monomial orders.
//!
//! Orders: lexicographic, graded reverse lexicographic (the default),
//! weighted grevlex with strictly positive weights, and block elimination
//! orders (front block beats back block; each block carries its own order).

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Exponent vector of a monomial; one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars])
    }

    /// The monomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Exponent(e)
    }

    pub fn from_vec(e: Vec<u32>) -> Self {
        Exponent(e)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when this is a positive power of the single variable `i`.
    pub fn is_pure_power_of(&self, i: usize) -> bool {
        self.0[i] > 0 && self.0.iter().enumerate().all(|(j, &e)| j == i || e == 0)
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise sum (monomial product).
    pub fn mul(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference (monomial quotient); caller must know `other` divides `self`.
    pub fn div(&self, other: &Exponent) -> Exponent {
        debug_assert!(other.divides(self));
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Weighted degree under integer weights (weights may be negative).
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }
}

/// Total order on monomials compatible with multiplication.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Grevlex graded by strictly positive weights instead of total degree.
    WeightedGrevlex(Vec<i64>),
    /// Elimination order: the first `front_len` variables dominate; ties in
    /// the front block fall through to the back block.
    Block {
        front_len: usize,
        front: Box<MonomialOrder>,
        back: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Elimination order with a lex front block and grevlex back block.
    pub fn elimination(front_len: usize) -> Self {
        MonomialOrder::Block {
            front_len,
            front: Box::new(MonomialOrder::Lex),
            back: Box::new(MonomialOrder::Grevlex),
        }
    }

    /// Check the order is usable on a ring with `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        match self {
            MonomialOrder::Lex | MonomialOrder::Grevlex => Ok(()),
            MonomialOrder::WeightedGrevlex(w) => {
                if w.len() != nvars {
                    return Err(Error::InvalidOrder(format!(
                        "{} weights for {} variables",
                        w.len(),
                        nvars
                    )));
                }
                if w.iter().any(|&wi| wi <= 0) {
                    return Err(Error::InvalidOrder(
                        "weighted grevlex needs strictly positive weights".into(),
                    ));
                }
                Ok(())
            }
            MonomialOrder::Block {
                front_len,
                front,
                back,
            } => {
                if *front_len == 0 || *front_len >= nvars {
                    return Err(Error::InvalidOrder(format!(
                        "block split {front_len} does not partition {nvars} variables"
                    )));
                }
                front.validate(*front_len)?;
                back.validate(nvars - front_len)
            }
        }
    }

    /// Compare two exponent vectors of equal length.
    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        self.cmp_slices(a.as_slice(), b.as_slice())
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| grevlex_tie(a, b))
            }
            MonomialOrder::WeightedGrevlex(w) => {
                let da: i64 = a.iter().zip(w).map(|(&e, &wi)| e as i64 * wi).sum();
                let db: i64 = b.iter().zip(w).map(|(&e, &wi)| e as i64 * wi).sum();
                da.cmp(&db).then_with(|| grevlex_tie(a, b))
            }
            MonomialOrder::Block {
                front_len,
                front,
                back,
            } => front
                .cmp_slices(&a[..*front_len], &b[..*front_len])
                .then_with(|| back.cmp_slices(&a[*front_len..], &b[*front_len..])),
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::WeightedGrevlex(w) => format!("wgrevlex{w:?}"),
            MonomialOrder::Block { front_len, .. } => format!("block[{front_len}]"),
        }
    }
}

/// Grevlex tie-break on equal degrees: the monomial with the smaller
/// exponent at the last differing variable is the larger one.
fn grevlex_tie(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::Grevlex
    }
}
