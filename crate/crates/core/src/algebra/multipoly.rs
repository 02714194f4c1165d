//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! A polynomial stores only nonzero terms, kept sorted (descending, grevlex)
//! so equal polynomials compare equal structurely. Order-sensitive
//! operations (leading terms under lex, elimination orders, ...) take the
//! order as an explicit argument.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::algebra::field::Field;
use crate::algebra::monomial::{Exponent, MonomialOrder};
use crate::error::{Error, Result};

/// A polynomial ring: a named list of variables. Coefficient fields are
/// carried by the polynomial's type parameter, so the same ring description
/// serves both specialized and generic-q computations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing {
    vars: Vec<String>,
}

impl PolyRing {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Arc<Self> {
        Arc::new(PolyRing {
            vars: vars.into_iter().map(Into::into).collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

fn canonical_cmp(a: &Exponent, b: &Exponent) -> Ordering {
    MonomialOrder::Grevlex.cmp(a, b)
}

/// Sparse multivariate polynomial. Invariants: every stored coefficient is
/// nonzero, every exponent vector has one entry per ring variable, and terms
/// are sorted descending under grevlex.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<F: Field> {
    ring: Arc<PolyRing>,
    terms: Vec<(Exponent, F)>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MultiPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: F) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(ring);
        }
        MultiPoly {
            ring: ring.clone(),
            terms: vec![(Exponent::zero(ring.nvars()), c)],
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        MultiPoly::constant(ring, F::one())
    }

    /// The variable `x_i`.
    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        MultiPoly {
            ring: ring.clone(),
            terms: vec![(Exponent::var(ring.nvars(), i), F::one())],
        }
    }

    /// `c * x^e` for a single monomial.
    pub fn term(ring: &Arc<PolyRing>, c: F, e: Exponent) -> Self {
        assert_eq!(e.len(), ring.nvars(), "exponent arity mismatch");
        if c.is_zero() {
            return MultiPoly::zero(ring);
        }
        MultiPoly {
            ring: ring.clone(),
            terms: vec![(e, c)],
        }
    }

    /// Normalizing constructor: merges duplicate monomials, drops zeros, sorts.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Exponent, F)>) -> Self {
        for (e, _) in &terms {
            assert_eq!(e.len(), ring.nvars(), "exponent arity mismatch");
        }
        let mut p = MultiPoly {
            ring: ring.clone(),
            terms,
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        self.terms.sort_unstable_by(|a, b| canonical_cmp(&a.0, &b.0));
        let mut merged: Vec<(Exponent, F)> = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms.drain(..) {
            match merged.last_mut() {
                Some((le, lc)) if *le == e => *lc = lc.add(&c),
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        merged.reverse();
        self.terms = merged;
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Exponent, F)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(e, _)| e.is_constant())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(e, _)| e.total_degree()).max()
    }

    pub fn coeff_of(&self, e: &Exponent) -> F {
        self.terms
            .iter()
            .find(|(te, _)| te == e)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(F::zero)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_ring(rhs)?;
        // Merge two descending-sorted term lists.
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            match canonical_cmp(&self.terms[i].0, &rhs.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(rhs.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&rhs.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// Multiply by a single monomial `c * x^e`.
    pub fn mul_term(&self, e: &Exponent, c: &F) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(te, tc)| (te.mul(e), tc.mul(c)))
                .collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_ring(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(MultiPoly::zero(&self.ring));
        }
        let mut acc: HashMap<Exponent, F> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.mul(eb);
                let prod = ca.mul(cb);
                match acc.get_mut(&e) {
                    Some(c) => *c = c.add(&prod),
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        let mut terms: Vec<(Exponent, F)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| canonical_cmp(&b.0, &a.0));
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Leading term under the given order.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Exponent, &F)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(e, c)| (e, c))
    }

    /// Scale so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Result<Self> {
        let (_, lc) = self.leading_term(order).ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lc.inv()?))
    }

    /// Terms sorted descending under an arbitrary order (for division loops).
    pub fn terms_sorted(&self, order: &MonomialOrder) -> Vec<(Exponent, F)> {
        let mut ts = self.terms.clone();
        ts.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        ts
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.get(var) > 0)
            .map(|(e, c)| {
                let k = e.get(var);
                let mut v = e.as_slice().to_vec();
                v[var] = k - 1;
                (Exponent::from_vec(v), c.mul(&F::from_i64(k as i64)))
            })
            .collect();
        MultiPoly::from_terms(&self.ring, terms)
    }

    pub fn eval(&self, point: &[F]) -> Result<F> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.as_slice().iter().enumerate() {
                for _ in 0..exp {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Apply a coefficient map (e.g. a field automorphism); zeros are pruned.
    pub fn map_coeffs<G: Field>(&self, target_ring: &Arc<PolyRing>, f: impl Fn(&F) -> G) -> Result<MultiPoly<G>> {
        if target_ring.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(MultiPoly::from_terms(target_ring, terms))
    }

    /// Substitute `x_i -> images[i]`; all images must share one target ring.
    pub fn substitute(&self, images: &[Self]) -> Result<Self> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => self.ring.clone(), // constant-only polynomial in a 0-variable ring
        };
        for im in images {
            if im.ring != target {
                return Err(Error::RingMismatch);
            }
        }
        // Incremental power tables per variable.
        let mut powers: Vec<Vec<MultiPoly<F>>> =
            images.iter().map(|_| vec![MultiPoly::one(&target)]).collect();
        let power = |v: usize, k: u32, powers: &mut Vec<Vec<MultiPoly<F>>>| -> MultiPoly<F> {
            while powers[v].len() <= k as usize {
                let next = powers[v]
                    .last()
                    .unwrap()
                    .checked_mul(&images[v])
                    .expect("same ring");
                powers[v].push(next);
            }
            powers[v][k as usize].clone()
        };
        let mut acc = MultiPoly::zero(&target);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (v, &exp) in e.as_slice().iter().enumerate() {
                if exp > 0 {
                    t = t.checked_mul(&power(v, exp, &mut powers))?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Collect the coefficient of `x_var^power` as a polynomial in the ring
    /// without `x_var` (which must be `target`'s variable list).
    pub fn extract_var_power(
        &self,
        var: usize,
        power: u32,
        target: &Arc<PolyRing>,
    ) -> Result<MultiPoly<F>> {
        if target.nvars() + 1 != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.get(var) == power)
            .map(|(e, c)| {
                let mut v = e.as_slice().to_vec();
                v.remove(var);
                (Exponent::from_vec(v), c.clone())
            })
            .collect();
        Ok(MultiPoly::from_terms(target, terms))
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                // a bare leading minus only counts as a sign for simple scalars
                Some(rest) if !needs_parens(rest) => ("-", rest.to_string()),
                _ => ("+", cs),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if sign == "-" { "-" } else { "+" })?;
            }
            let mag = if needs_parens(&mag) {
                format!("({mag})")
            } else {
                mag
            };
            let mut factors: Vec<String> = Vec::new();
            if !(mag == "1" && !e.is_constant()) {
                factors.push(mag);
            }
            for (i, &exp) in e.as_slice().iter().enumerate() {
                match exp {
                    0 => {}
                    1 => factors.push(self.ring.var_name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.var_name(i), exp)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

fn needs_parens(s: &str) -> bool {
    s.contains(" + ") || s.contains(" - ") || s.contains('/')
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> Add for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: &MultiPoly<F>) -> MultiPoly<F> {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl<F: Field> Sub for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: &MultiPoly<F>) -> MultiPoly<F> {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl<F: Field> Mul for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: &MultiPoly<F>) -> MultiPoly<F> {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl<F: Field> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        MultiPoly::neg(self)
    }
}

/// Weighted grading data: one weight per ring variable plus the weight of
/// the quantum parameter living in the coefficients. Variable weights may be
/// negative (deformation parameters), unlike monomial-order weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradingSpec {
    pub var_weights: Vec<i64>,
    pub q_weight: i64,
}

/// Outcome of a weighted-degree computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WeightedDegree {
    Homogeneous(i64),
    /// The set of distinct term degrees present.
    Inhomogeneous(std::collections::BTreeSet<i64>),
}

impl GradingSpec {
    pub fn new(var_weights: Vec<i64>, q_weight: i64) -> Self {
        GradingSpec {
            var_weights,
            q_weight,
        }
    }

    /// Weighted degree of every term, including the q-degree carried by the
    /// coefficients. Coefficients without a finite q-decomposition (which
    /// never arise from graded inputs) make the polynomial inhomogeneous.
    pub fn weighted_degree<F: Field>(&self, p: &MultiPoly<F>) -> Result<WeightedDegree> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.ring().nvars() != self.var_weights.len() {
            return Err(Error::RingMismatch);
        }
        let mut degrees = std::collections::BTreeSet::new();
        let mut ungraded_coeff = false;
        for (e, c) in p.terms() {
            let base = e.weighted_degree(&self.var_weights);
            match c.q_degrees() {
                Some(qds) => {
                    for qd in qds {
                        degrees.insert(base + self.q_weight * qd);
                    }
                }
                None => ungraded_coeff = true,
            }
        }
        if !ungraded_coeff && degrees.len() == 1 {
            Ok(WeightedDegree::Homogeneous(*degrees.iter().next().unwrap()))
        } else {
            Ok(WeightedDegree::Inhomogeneous(degrees))
        }
    }

    pub fn is_homogeneous<F: Field>(&self, p: &MultiPoly<F>) -> Result<bool> {
        Ok(matches!(self.weighted_degree(p)?, WeightedDegree::Homogeneous(_)))
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion along
/// the first available row, memoized on the set of unused columns. Intended
/// for the small banded matrices of the determinantal relations (size <= 8).
pub fn det_poly_matrix<F: Field>(m: &[Vec<MultiPoly<F>>]) -> Result<MultiPoly<F>> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    if n == 0 {
        return Err(Error::NotSquare { rows: 0, cols: 0 });
    }
    assert!(n <= 32, "cofactor expansion is for small matrices");
    let ring = m[0][0].ring().clone();
    for row in m {
        for entry in row {
            if *entry.ring() != ring {
                return Err(Error::RingMismatch);
            }
        }
    }
    let full_mask: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut memo: HashMap<u32, MultiPoly<F>> = HashMap::new();
    return Ok(minor(m, full_mask, &ring, &mut memo));

    /// Determinant of the submatrix on rows `n - popcount(mask) ..` and the
    /// columns in `mask`.
    fn minor<F: Field>(
        m: &[Vec<MultiPoly<F>>],
        mask: u32,
        ring: &Arc<PolyRing>,
        memo: &mut HashMap<u32, MultiPoly<F>>,
    ) -> MultiPoly<F> {
        if mask == 0 {
            return MultiPoly::one(ring);
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let row = m.len() - mask.count_ones() as usize;
        let mut acc = MultiPoly::zero(ring);
        let mut sign_pos = true;
        for col in 0..m.len() {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero() {
                let sub = minor(m, mask & !(1 << col), ring, memo);
                let contrib = entry.checked_mul(&sub).expect("same ring");
                acc = if sign_pos {
                    acc.checked_add(&contrib).expect("same ring")
                } else {
                    acc.checked_sub(&contrib).expect("same ring")
                };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(mask, acc.clone());
        acc
    }
}
