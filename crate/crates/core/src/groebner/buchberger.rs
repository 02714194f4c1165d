//! Buchberger's algorithm with the normal selection strategy and the
//! coprime-leading-term and chain criteria, followed by reduction to the
//! unique reduced Groebner basis.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::algebra::field::Field;
use crate::algebra::monomial::{Exponent, MonomialOrder};
use crate::algebra::multipoly::{MultiPoly, PolyRing};
use crate::error::{Error, Result};
use crate::groebner::division::reduce;

/// A reduced Groebner basis: monic elements, no leading term divides
/// another, every element fully reduced against the rest. For a fixed order
/// this is a canonical presentation of the ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedGB<F: Field> {
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    basis: Vec<MultiPoly<F>>,
    leading: Vec<Exponent>,
}

impl<F: Field> ReducedGB<F> {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[MultiPoly<F>] {
        &self.basis
    }

    pub fn leading_exponents(&self) -> &[Exponent] {
        &self.leading
    }

    /// Does the basis generate the unit ideal?
    pub fn is_unit_ideal(&self) -> bool {
        self.leading.iter().any(Exponent::is_constant)
    }

    /// Canonical remainder of `f` modulo the ideal.
    pub fn normal_form(&self, f: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let refs: Vec<&MultiPoly<F>> = self.basis.iter().collect();
        reduce(f, &refs, &self.order)
    }

    pub fn contains(&self, f: &MultiPoly<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Monomials outside the leading-term ideal, or the finite-ness verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StandardMonomials {
    /// Sorted ascending under the basis order; empty for the unit ideal.
    Finite(Vec<Exponent>),
    /// Some variable has no pure power among the leading terms, so the
    /// quotient is infinite-dimensional.
    NotZeroDimensional,
}

impl StandardMonomials {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            StandardMonomials::Finite(b) => Some(b.len()),
            StandardMonomials::NotZeroDimensional => None,
        }
    }
}

impl<F: Field> ReducedGB<F> {
    /// Monomial basis of the quotient algebra, when finite. A quotient is
    /// finite-dimensional exactly when every variable appears as a pure
    /// power among the leading terms.
    pub fn standard_monomials(&self) -> StandardMonomials {
        let nvars = self.ring.nvars();
        if self.is_unit_ideal() {
            return StandardMonomials::Finite(Vec::new());
        }
        // bound per variable from pure-power leading terms
        let mut bounds = vec![None; nvars];
        for lt in &self.leading {
            for v in 0..nvars {
                if lt.is_pure_power_of(v) {
                    let d = lt.get(v);
                    bounds[v] = Some(bounds[v].map_or(d, |b: u32| b.min(d)));
                }
            }
        }
        let Some(bounds) = bounds.into_iter().collect::<Option<Vec<u32>>>() else {
            return StandardMonomials::NotZeroDimensional;
        };
        // walk the finite box under the bounds, keeping undivisible monomials
        let mut out = Vec::new();
        let mut current = vec![0u32; nvars];
        'odometer: loop {
            let e = Exponent::from_vec(current.clone());
            if !self.leading.iter().any(|lt| lt.divides(&e)) {
                out.push(e);
            }
            for v in 0..nvars {
                current[v] += 1;
                if current[v] < bounds[v] {
                    continue 'odometer;
                }
                current[v] = 0;
            }
            break;
        }
        out.sort_unstable_by(|a, b| self.order.cmp(a, b));
        StandardMonomials::Finite(out)
    }

    /// Dimension of the quotient as a vector space, `None` if infinite.
    pub fn quotient_dimension(&self) -> Option<usize> {
        self.standard_monomials().dimension()
    }
}

/// Run Buchberger's algorithm on the generators and return the reduced
/// Groebner basis. Deterministic for a fixed generator sequence and order.
pub fn buchberger<F: Field>(
    gens: &[MultiPoly<F>],
    order: &MonomialOrder,
) -> Result<ReducedGB<F>> {
    if gens.is_empty() {
        return Err(Error::EmptyGeneratorList);
    }
    let ring = gens[0].ring().clone();
    order.validate(ring.nvars())?;
    let mut basis: Vec<MultiPoly<F>> = Vec::new();
    for g in gens {
        if g.ring() != &ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        basis.push(g.monic(order)?);
    }
    let mut leading: Vec<Exponent> = basis
        .iter()
        .map(|g| g.leading_term(order).unwrap().0.clone())
        .collect();

    // Pair queue keyed by lcm total degree (normal strategy), then indices.
    let mut queue: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    // Pairs with a known standard representation: reduced to zero, or
    // skipped by the coprimality criterion. The chain criterion only leans
    // on these, never on its own skips, so it stays sound.
    let mut resolved: HashSet<(usize, usize)> = HashSet::new();
    let enqueue = |queue: &mut BTreeSet<(u64, usize, usize)>,
                       leading: &[Exponent],
                       i: usize,
                       j: usize| {
        let lcm = leading[i].lcm(&leading[j]);
        queue.insert((lcm.total_degree(), i, j));
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            enqueue(&mut queue, &leading, i, j);
        }
    }

    while let Some(&entry) = queue.iter().next() {
        queue.remove(&entry);
        let (_, i, j) = entry;
        let lcm = leading[i].lcm(&leading[j]);

        // coprime leading terms: the S-polynomial reduces to zero
        if lcm == leading[i].mul(&leading[j]) {
            resolved.insert((i, j));
            continue;
        }
        // chain criterion against already-resolved pairs
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leading[k].divides(&lcm)
                && resolved.contains(&(i.min(k), i.max(k)))
                && resolved.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        // S-polynomial (basis is monic, so leading coefficients are 1)
        let spoly = basis[i]
            .mul_term(&lcm.div(&leading[i]), &F::one())
            .checked_sub(&basis[j].mul_term(&lcm.div(&leading[j]), &F::one()))?;
        let refs: Vec<&MultiPoly<F>> = basis.iter().collect();
        let rem = reduce(&spoly, &refs, order)?;
        resolved.insert((i, j));
        if rem.is_zero() {
            continue;
        }
        let rem = rem.monic(order)?;
        let new_lt = rem.leading_term(order).unwrap().0.clone();
        basis.push(rem);
        leading.push(new_lt);
        let new_idx = basis.len() - 1;
        for k in 0..new_idx {
            enqueue(&mut queue, &leading, k, new_idx);
        }
    }

    Ok(reduce_basis(ring, order.clone(), basis, leading))
}

/// Minimalize (drop elements whose leading term is divisible by another's)
/// and fully interreduce, producing the canonical reduced basis.
fn reduce_basis<F: Field>(
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    basis: Vec<MultiPoly<F>>,
    leading: Vec<Exponent>,
) -> ReducedGB<F> {
    // sort by leading term ascending so smaller elements are kept first
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by(|&a, &b| order.cmp(&leading[a], &leading[b]));

    let mut kept: Vec<usize> = Vec::new();
    for &i in &idx {
        if !kept.iter().any(|&k| leading[k].divides(&leading[i])) {
            kept.push(i);
        }
    }

    let minimal: Vec<MultiPoly<F>> = kept.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced: Vec<MultiPoly<F>> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&MultiPoly<F>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g)
            .collect();
        let r = if others.is_empty() {
            minimal[i].clone()
        } else {
            reduce(&minimal[i], &others, &order).expect("same ring")
        };
        reduced.push(r.monic(&order).expect("leading term survives reduction"));
    }

    let mut pairs: Vec<(Exponent, MultiPoly<F>)> = reduced
        .into_iter()
        .map(|g| (g.leading_term(&order).unwrap().0.clone(), g))
        .collect();
    pairs.sort_by(|a, b| order.cmp(&a.0, &b.0));
    let (leading, basis) = pairs.into_iter().unzip();
    ReducedGB {
        ring,
        order,
        basis,
        leading,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::Rational;

    fn xy_ring() -> Arc<PolyRing> {
        PolyRing::new(vec!["x", "y"])
    }

    #[test]
    fn basis_of_monomial_generators() {
        let r = xy_ring();
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let gb = buchberger(&[x.clone(), y.clone()], &MonomialOrder::Grevlex).unwrap();
        // ascending order: y precedes x under grevlex with x > y
        assert_eq!(gb.basis(), &[y, x]);
        assert_eq!(gb.quotient_dimension(), Some(1));
    }

    #[test]
    fn substitution_ideal_reduces() {
        // (x^2 - y, y) has reduced basis {y, x^2}
        let r = xy_ring();
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let gb = buchberger(&[&x.pow(2) - &y, y.clone()], &MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb.basis(), &[y.clone(), x.pow(2)]);
        // x^2 reduces to zero, x does not
        assert!(gb.contains(&x.pow(2)).unwrap());
        assert!(!gb.contains(&x).unwrap());
    }

    #[test]
    fn normal_form_examples() {
        let r = xy_ring();
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let gb = buchberger(&[&x.pow(2) - &y], &MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb.normal_form(&x.pow(2)).unwrap(), y);
        assert_eq!(gb.normal_form(&x.pow(4)).unwrap(), y.pow(2));
        assert!(gb.normal_form(&(&x.pow(2) - &y)).unwrap().is_zero());
    }

    #[test]
    fn standard_monomial_box() {
        let r = xy_ring();
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let gb = buchberger(&[x.pow(2), y.pow(2)], &MonomialOrder::Grevlex).unwrap();
        match gb.standard_monomials() {
            StandardMonomials::Finite(b) => {
                let names: Vec<Vec<u32>> = b.iter().map(|e| e.as_slice().to_vec()).collect();
                // ascending grevlex: 1 < y < x < xy
                assert_eq!(names, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
            }
            StandardMonomials::NotZeroDimensional => panic!("expected finite quotient"),
        }

        // a single generator in two variables leaves an infinite quotient
        let gb = buchberger(&[x.clone()], &MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb.standard_monomials(), StandardMonomials::NotZeroDimensional);
    }

    #[test]
    fn unit_ideal_detected() {
        let r = xy_ring();
        let one = MultiPoly::<Rational>::one(&r);
        let x = MultiPoly::<Rational>::var(&r, 0);
        let gb = buchberger(&[&x + &one, x.clone()], &MonomialOrder::Grevlex).unwrap();
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.quotient_dimension(), Some(0));
    }

    #[test]
    fn rejects_bad_input() {
        let r = xy_ring();
        let x = MultiPoly::<Rational>::var(&r, 0);
        assert_eq!(
            buchberger::<Rational>(&[], &MonomialOrder::Grevlex),
            Err(Error::EmptyGeneratorList)
        );
        assert_eq!(
            buchberger(&[MultiPoly::<Rational>::zero(&r)], &MonomialOrder::Grevlex),
            Err(Error::ZeroGenerator)
        );
        let other = PolyRing::new(vec!["a", "b"]);
        assert_eq!(
            buchberger(
                &[x, MultiPoly::<Rational>::var(&other, 0)],
                &MonomialOrder::Grevlex
            ),
            Err(Error::RingMismatch)
        );
    }

    /// Cross-check against a brute-force criterion: every S-polynomial of
    /// the output reduces to zero against the output.
    #[test]
    fn all_spairs_of_result_reduce_to_zero() {
        let r = xy_ring();
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let one = MultiPoly::one(&r);
        // intersection of a parabola and a circle-like curve
        let gens = [
            &x.pow(2) - &y,
            &(&x.pow(2) + &y.pow(2)) - &one,
        ];
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let gb = buchberger(&gens, &order).unwrap();
            let basis = gb.basis();
            for i in 0..basis.len() {
                for j in (i + 1)..basis.len() {
                    let (ei, _) = basis[i].leading_term(&order).unwrap();
                    let (ej, _) = basis[j].leading_term(&order).unwrap();
                    let lcm = ei.lcm(ej);
                    let s = basis[i]
                        .mul_term(&lcm.div(ei), &Rational::one())
                        .checked_sub(&basis[j].mul_term(&lcm.div(ej), &Rational::one()))
                        .unwrap();
                    assert!(gb.normal_form(&s).unwrap().is_zero());
                }
            }
        }
    }
}
