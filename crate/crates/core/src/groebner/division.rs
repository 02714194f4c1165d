//! Multivariate division with remainder.

use crate::algebra::field::Field;
use crate::algebra::monomial::{Exponent, MonomialOrder};
use crate::algebra::multipoly::MultiPoly;
use crate::error::{Error, Result};

/// Divide `f` by the ordered list `divisors`: returns `(quotients, remainder)`
/// with `f = sum_i q_i * divisors[i] + r` and no remainder term divisible by
/// any divisor's leading term. Deterministic: the first divisor whose leading
/// term divides the working leading term wins.
pub fn divide<F: Field>(
    f: &MultiPoly<F>,
    divisors: &[&MultiPoly<F>],
    order: &MonomialOrder,
) -> Result<(Vec<MultiPoly<F>>, MultiPoly<F>)> {
    let ring = f.ring();
    for d in divisors {
        if d.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    let div_lts: Vec<(Exponent, F)> = divisors
        .iter()
        .map(|d| {
            let (e, c) = d.leading_term(order).expect("nonzero divisor");
            (e.clone(), c.clone())
        })
        .collect();

    let mut quotients = vec![MultiPoly::zero(ring); divisors.len()];
    let mut remainder_terms: Vec<(Exponent, F)> = Vec::new();
    let mut work = f.clone();

    while let Some((lt_e, lt_c)) = work.leading_term(order).map(|(e, c)| (e.clone(), c.clone())) {
        match div_lts.iter().position(|(de, _)| de.divides(&lt_e)) {
            Some(i) => {
                let factor_e = lt_e.div(&div_lts[i].0);
                let factor_c = lt_c.div(&div_lts[i].1)?;
                let t = MultiPoly::term(ring, factor_c.clone(), factor_e.clone());
                quotients[i] = quotients[i].checked_add(&t)?;
                work = work.checked_sub(&divisors[i].mul_term(&factor_e, &factor_c))?;
            }
            None => {
                remainder_terms.push((lt_e.clone(), lt_c.clone()));
                work = work.checked_sub(&MultiPoly::term(ring, lt_c, lt_e))?;
            }
        }
    }
    Ok((quotients, MultiPoly::from_terms(ring, remainder_terms)))
}

/// Remainder of `f` on division by `divisors`.
pub fn reduce<F: Field>(
    f: &MultiPoly<F>,
    divisors: &[&MultiPoly<F>],
    order: &MonomialOrder,
) -> Result<MultiPoly<F>> {
    Ok(divide(f, divisors, order)?.1)
}

/// Exact quotient `f / g`; fails if `g` does not divide `f`.
pub fn exact_div<F: Field>(
    f: &MultiPoly<F>,
    g: &MultiPoly<F>,
    order: &MonomialOrder,
) -> Result<MultiPoly<F>> {
    let (mut qs, r) = divide(f, &[g], order)?;
    if !r.is_zero() {
        return Err(Error::DimensionMismatch(
            "exact division left a remainder".into(),
        ));
    }
    Ok(qs.pop().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::multipoly::PolyRing;
    use crate::algebra::rational::Rational;
    use std::sync::Arc;

    fn setup() -> (
        Arc<PolyRing>,
        MultiPoly<Rational>,
        MultiPoly<Rational>,
    ) {
        let r = PolyRing::new(vec!["x", "y"]);
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        (r, x, y)
    }

    #[test]
    fn division_identity_holds() {
        let (_, x, y) = setup();
        let f = &(&x.pow(2) * &y) + &(&x * &y.pow(2)); // x^2 y + x y^2
        let g1 = &x * &y; // xy
        let g2 = &y.pow(2) - &MultiPoly::one(f.ring()); // y^2 - 1
        let order = MonomialOrder::Grevlex;
        let (qs, r) = divide(&f, &[&g1, &g2], &order).unwrap();
        let mut recon = r.clone();
        for (q, g) in qs.iter().zip([&g1, &g2]) {
            recon = &recon + &(q * g);
        }
        assert_eq!(recon, f);
        // no remainder term divisible by xy or y^2
        for (e, _) in r.terms() {
            assert!(!g1.leading_term(&order).unwrap().0.divides(e));
            assert!(!g2.leading_term(&order).unwrap().0.divides(e));
        }
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = setup();
        let f = &x.pow(2) - &y.pow(2);
        let g = &x + &y;
        let q = exact_div(&f, &g, &MonomialOrder::Grevlex).unwrap();
        assert_eq!(q, &x - &y);
        assert!(exact_div(&f, &(&x + &MultiPoly::one(f.ring())), &MonomialOrder::Grevlex).is_err());
    }
}
