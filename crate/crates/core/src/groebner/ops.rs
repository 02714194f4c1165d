//! Ideal operations built on Groebner bases: colon ideals, saturation of a
//! zero-dimensional ideal at the origin, and the local dimension (length of
//! the component supported at the origin).

use std::sync::Arc;

use crate::algebra::field::Field;
use crate::algebra::matrix::RowSpace;
use crate::algebra::monomial::{Exponent, MonomialOrder};
use crate::algebra::multipoly::{MultiPoly, PolyRing};
use crate::error::{Error, Result};
use crate::groebner::division::exact_div;
use crate::groebner::Ideal;
use crate::zerodim::QuotientAlgebra;

/// A variable name unused by `ring`, for the tag variable in colon
/// computations.
fn fresh_tag_name(ring: &PolyRing) -> String {
    let mut name = String::from("@elim");
    while ring.var_names().iter().any(|v| v == &name) {
        name.push('_');
    }
    name
}

/// Reinterprets `f` in `target`, whose variables are `f`'s preceded by one
/// extra tag variable.
fn lift<F: Field>(f: &MultiPoly<F>, target: &Arc<PolyRing>) -> MultiPoly<F> {
    let terms = f
        .terms()
        .iter()
        .map(|(e, c)| {
            let mut exps = vec![0u32];
            exps.extend_from_slice(e.as_slice());
            (Exponent::from_vec(exps), c.clone())
        })
        .collect();
    MultiPoly::from_terms(target, terms)
}

/// Drops the leading tag variable (which must not occur in `f`).
fn project<F: Field>(f: &MultiPoly<F>, target: &Arc<PolyRing>) -> MultiPoly<F> {
    let terms = f
        .terms()
        .iter()
        .map(|(e, c)| {
            debug_assert_eq!(e.get(0), 0);
            (Exponent::from_vec(e.as_slice()[1..].to_vec()), c.clone())
        })
        .collect();
    MultiPoly::from_terms(target, terms)
}

/// The colon ideal `(I : f) = { g : f * g in I }`, computed by eliminating a
/// tag variable `u` from `{ u*g_i } + { (1 - u)*f }` and dividing the
/// `u`-free part of the basis by `f`.
pub fn ideal_quotient<F: Field>(ideal: &Ideal<F>, f: &MultiPoly<F>) -> Result<Ideal<F>> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::ZeroDivisorPolynomial);
    }
    let ring = ideal.ring().clone();
    let mut ext_vars = vec![fresh_tag_name(&ring)];
    ext_vars.extend(ring.var_names().iter().cloned());
    let ext = PolyRing::new(ext_vars);

    let u = MultiPoly::<F>::var(&ext, 0);
    let one = MultiPoly::one(&ext);
    let mut gens: Vec<MultiPoly<F>> = ideal
        .generators()
        .iter()
        .map(|g| &u * &lift(g, &ext))
        .collect();
    gens.push(&(&one - &u) * &lift(f, &ext));

    let ext_ideal = Ideal::new(ext, gens)?;
    let gb = ext_ideal.groebner_basis(&MonomialOrder::elimination(1))?;

    let order = MonomialOrder::Grevlex;
    let mut quotient_gens = Vec::new();
    for g in gb.basis() {
        if g.terms().iter().all(|(e, _)| e.get(0) == 0) {
            let h = project(g, &ring);
            quotient_gens.push(exact_div(&h, f, &order)?);
        }
    }
    if quotient_gens.is_empty() {
        quotient_gens.push(MultiPoly::one(&ring));
    }
    Ideal::new(ring, quotient_gens)
}

/// Common kernel of all coordinate multiplication maps on the quotient
/// algebra, i.e. the image of `(I : m)/I` where `m` is the maximal ideal at
/// the origin. Returned as polynomials; empty exactly when `(I : m) = I`.
fn socle_lifts<F: Field>(qa: &QuotientAlgebra<F>) -> Result<Vec<MultiPoly<F>>> {
    let dim = qa.dim();
    if dim == 0 {
        return Ok(Vec::new());
    }
    let nvars = qa.ring().nvars();
    let mut stacked = qa.var_matrix(0)?.as_ref().clone();
    for v in 1..nvars {
        stacked = stacked.vstack(qa.var_matrix(v)?.as_ref())?;
    }
    let kernel = stacked.nullspace();
    kernel.iter().map(|coords| qa.poly_from_coords(coords)).collect()
}

/// Removes the component of a zero-dimensional ideal supported at the
/// origin by iterating `I <- (I : m)` until it stabilises, where `m` is the
/// ideal of the origin.
pub fn saturate_at_origin<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>> {
    let order = MonomialOrder::Grevlex;
    let mut current = ideal.clone();
    loop {
        let gb = current.groebner_basis(&order)?;
        if gb.is_unit_ideal() {
            return Ok(current);
        }
        let qa = QuotientAlgebra::from_gb(gb.clone())?;
        let lifts = socle_lifts(&qa)?;
        if lifts.is_empty() {
            return Ok(current);
        }
        let mut gens = qa.gb().basis().to_vec();
        gens.extend(lifts);
        current = Ideal::new(current.ring().clone(), gens)?;
    }
}

/// Multiplicity of the origin in a zero-dimensional scheme: the dimension of
/// the local ring at the origin, computed as the codimension of the stable
/// image of the maximal ideal's multiplication action on the quotient.
pub fn local_dim_at_origin<F: Field>(ideal: &Ideal<F>) -> Result<usize> {
    let qa = QuotientAlgebra::new(ideal, &MonomialOrder::Grevlex)?;
    let dim = qa.dim();
    if dim == 0 {
        return Ok(0);
    }
    let nvars = qa.ring().nvars();
    let mats: Vec<_> = (0..nvars)
        .map(|v| qa.var_matrix(v))
        .collect::<Result<Vec<_>>>()?;

    // W_0 = A; W_{k+1} = sum_v x_v * W_k; the chain stabilises and the local
    // dimension at the origin is codim of the limit.
    let mut current: Vec<Vec<F>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { F::one() } else { F::zero() })
                .collect()
        })
        .collect();
    let mut prev_dim = dim;
    loop {
        let mut next = RowSpace::new(dim);
        for w in &current {
            for m in &mats {
                next.insert(m.mul_vec(w)?);
            }
        }
        let next_dim = next.dim();
        if next_dim == prev_dim {
            return Ok(dim - next_dim);
        }
        current = next.basis().to_vec();
        prev_dim = next_dim;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::Rational;

    fn xy_ring() -> Arc<PolyRing> {
        PolyRing::new(vec!["x", "y"])
    }

    fn ideal(ring: &Arc<PolyRing>, gens: Vec<MultiPoly<Rational>>) -> Ideal<Rational> {
        Ideal::new(ring.clone(), gens).unwrap()
    }

    #[test]
    fn colon_of_principal_ideal() {
        // (x^2 y) : x = (x y).
        let r = xy_ring();
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let i = ideal(&r, vec![&x.pow(2) * &y]);
        let q = ideal_quotient(&i, &x).unwrap();
        let expected = ideal(&r, vec![&x * &y]);
        assert!(q.same_ideal(&expected, &MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn colon_splits_monomial_ideal() {
        // (x^2, x y) : x = (x, y).
        let r = xy_ring();
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let i = ideal(&r, vec![x.pow(2), &x * &y]);
        let q = ideal_quotient(&i, &x).unwrap();
        let expected = ideal(&r, vec![x.clone(), y.clone()]);
        assert!(q.same_ideal(&expected, &MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn colon_by_unit_and_by_member() {
        let r = xy_ring();
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let i = ideal(&r, vec![x.pow(2), y.clone()]);
        // Dividing by a member gives the unit ideal.
        let q = ideal_quotient(&i, &y).unwrap();
        assert!(q
            .groebner_basis(&MonomialOrder::Grevlex)
            .unwrap()
            .is_unit_ideal());
        // Dividing by a unit changes nothing.
        let q = ideal_quotient(&i, &MultiPoly::constant(&r, Rational::from_integer(3))).unwrap();
        assert!(q.same_ideal(&i, &MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn tag_name_avoids_collision() {
        let r = PolyRing::new(vec!["@elim", "x"]);
        assert_eq!(fresh_tag_name(&r), "@elim_");
    }

    #[test]
    fn saturation_strips_embedded_origin() {
        // x^2 (x - 1) vanishes doubly at 0 and simply at 1; saturating at the
        // origin leaves exactly (x - 1).
        let r = PolyRing::new(vec!["x"]);
        let x = MultiPoly::<Rational>::var(&r, 0);
        let one = MultiPoly::one(&r);
        let i = ideal(&r, vec![&x.pow(2) * &(&x - &one)]);
        let sat = saturate_at_origin(&i).unwrap();
        let expected = ideal(&r, vec![&x - &one]);
        assert!(sat.same_ideal(&expected, &MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn saturation_fixes_ideal_missing_origin() {
        let r = PolyRing::new(vec!["x"]);
        let x = MultiPoly::<Rational>::var(&r, 0);
        let one = MultiPoly::one(&r);
        let i = ideal(&r, vec![&x - &one]);
        let sat = saturate_at_origin(&i).unwrap();
        assert!(sat.same_ideal(&i, &MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn saturation_of_origin_only_scheme_is_unit() {
        let r = xy_ring();
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let i = ideal(&r, vec![x.pow(2), &x * &y, y.pow(3)]);
        let sat = saturate_at_origin(&i).unwrap();
        assert!(sat
            .groebner_basis(&MonomialOrder::Grevlex)
            .unwrap()
            .is_unit_ideal());
    }

    #[test]
    fn local_dimension_counts_multiplicity_at_origin() {
        let r = PolyRing::new(vec!["x"]);
        let x = MultiPoly::<Rational>::var(&r, 0);
        let one = MultiPoly::one(&r);
        // Double point at the origin.
        assert_eq!(local_dim_at_origin(&ideal(&r, vec![x.pow(2)])).unwrap(), 2);
        // Simple point away from the origin.
        assert_eq!(
            local_dim_at_origin(&ideal(&r, vec![&x - &one])).unwrap(),
            0
        );
        // Double at the origin next to a simple point: still 2.
        assert_eq!(
            local_dim_at_origin(&ideal(&r, vec![&x.pow(2) * &(&x - &one)])).unwrap(),
            2
        );
    }

    #[test]
    fn local_plus_saturated_is_total() {
        let r = xy_ring();
        let x = MultiPoly::<Rational>::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let one = MultiPoly::one(&r);
        // V(x^2, y) at origin (length 2) plus V(x - 1, y - 1) (length 1):
        // the two loci are disjoint, so the intersection ideal is the
        // product (x^2, y) * (x - 1, y - 1).
        let i = ideal(
            &r,
            vec![
                &x.pow(2) * &(&x - &one),
                &x.pow(2) * &(&y - &one),
                &y * &(&x - &one),
                &y * &(&y - &one),
            ],
        );
        let order = MonomialOrder::Grevlex;
        let total = i.quotient_dimension(&order).unwrap().unwrap();
        let local = local_dim_at_origin(&i).unwrap();
        let sat = saturate_at_origin(&i).unwrap();
        let away = sat.quotient_dimension(&order).unwrap().unwrap();
        assert_eq!(local + away, total);
        assert_eq!(local, 2);
        assert_eq!(away, 1);
    }
}
