//! Groebner-basis machinery: Buchberger's algorithm, normal forms, standard
//! monomials, and the ideal operations built on them (colon ideals by
//! tag-variable elimination, saturation at the origin, local dimension).

mod buchberger;
mod division;
mod ops;

pub use buchberger::{buchberger, ReducedGB, StandardMonomials};
pub use division::{divide, exact_div, reduce};
pub use ops::{ideal_quotient, local_dim_at_origin, saturate_at_origin};

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::algebra::field::Field;
use crate::algebra::monomial::MonomialOrder;
use crate::algebra::multipoly::{MultiPoly, PolyRing};
use crate::error::{Error, Result};

/// An ideal presented by explicit nonzero generators, with a write-once
/// cache of reduced Groebner bases keyed by monomial order.
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing>,
    gens: Vec<MultiPoly<F>>,
    cache: Mutex<BTreeMap<MonomialOrder, Arc<ReducedGB<F>>>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: Arc<PolyRing>, gens: Vec<MultiPoly<F>>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGeneratorList);
        }
        for g in &gens {
            if g.ring() != &ring {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
        }
        Ok(Ideal {
            ring,
            gens,
            cache: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly<F>] {
        &self.gens
    }

    /// The reduced Groebner basis under `order`, computed once per order and
    /// shared afterwards. Concurrent first calls compute identical bases;
    /// the first finisher's value is kept.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<ReducedGB<F>>> {
        if let Some(hit) = self.cache.lock().unwrap().get(order) {
            return Ok(hit.clone());
        }
        let gb = Arc::new(buchberger(&self.gens, order)?);
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(order.clone()).or_insert(gb).clone())
    }

    /// Vector-space dimension of the quotient ring, `None` when infinite.
    pub fn quotient_dimension(&self, order: &MonomialOrder) -> Result<Option<usize>> {
        Ok(self.groebner_basis(order)?.quotient_dimension())
    }

    /// Membership test via normal form.
    pub fn contains(&self, f: &MultiPoly<F>, order: &MonomialOrder) -> Result<bool> {
        self.groebner_basis(order)?.contains(f)
    }

    /// Two ideals are equal exactly when their reduced bases coincide.
    pub fn same_ideal(&self, other: &Ideal<F>, order: &MonomialOrder) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner_basis(order)?.basis() == other.groebner_basis(order)?.basis())
    }
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal{:?}", self.gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::Rational;

    #[test]
    fn cache_returns_shared_basis() {
        let r = PolyRing::new(vec!["x", "y"]);
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let ideal = Ideal::new(r, vec![x.pow(2), y.clone()]).unwrap();
        let a = ideal.groebner_basis(&MonomialOrder::Grevlex).unwrap();
        let b = ideal.groebner_basis(&MonomialOrder::Grevlex).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        let lex = ideal.groebner_basis(&MonomialOrder::Lex).unwrap();
        assert!(!Arc::ptr_eq(&a, &lex));
        assert_eq!(a.quotient_dimension(), lex.quotient_dimension());
    }

    #[test]
    fn concurrent_fills_agree() {
        let r = PolyRing::new(vec!["x", "y"]);
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let one = MultiPoly::one(&r);
        let ideal = Arc::new(
            Ideal::new(
                r,
                vec![&x.pow(3) - &y, &(&y.pow(2) + &x) - &one],
            )
            .unwrap(),
        );
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let ideal = ideal.clone();
                std::thread::spawn(move || {
                    ideal
                        .groebner_basis(&MonomialOrder::Grevlex)
                        .unwrap()
                        .basis()
                        .to_vec()
                })
            })
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for w in results.windows(2) {
            assert_eq!(w[0], w[1]);
        }
    }

    #[test]
    fn constructor_validates() {
        let r = PolyRing::new(vec!["x"]);
        assert!(matches!(
            Ideal::<Rational>::new(r.clone(), vec![]),
            Err(Error::EmptyGeneratorList)
        ));
        assert!(matches!(
            Ideal::new(r.clone(), vec![MultiPoly::<Rational>::zero(&r)]),
            Err(Error::ZeroGenerator)
        ));
    }
}
