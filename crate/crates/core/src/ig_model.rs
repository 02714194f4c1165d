//! Presentations of the cohomology rings of the symplectic (isotropic)
//! Grassmannian IG(2, 2n): the classical ring, its small quantum deformation,
//! and the first-order big-quantum deformation, in two coordinate systems
//! (special Schubert classes `s_i`, and Chern-root style generators
//! `a_1, a_2, b_i`), together with the numerical invariants the rest of the
//! crate verifies about them.

use std::sync::Arc;

use crate::algebra::field::{CoeffField, Field, QScalar};
use crate::algebra::multipoly::{det_poly_matrix, GradingSpec, MultiPoly, PolyRing};
use crate::algebra::rational::Rational;
use crate::algebra::unipoly::{gcd, squarefree_part, UniPoly};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// The five ring presentations the crate can build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Classical cohomology on the special Schubert generators.
    SigmaClassical,
    /// Small quantum cohomology on the special Schubert generators.
    SigmaQuantum,
    /// Classical cohomology on the Chern-root generators.
    AbClassical,
    /// Small quantum cohomology on the Chern-root generators.
    AbQuantum,
    /// First-order big-quantum deformation: the Schubert presentation with
    /// one deformation variable `t` of weight -1.
    DeformedFirstOrder,
}

impl Variant {
    pub fn all() -> [Variant; 5] {
        [
            Variant::SigmaClassical,
            Variant::SigmaQuantum,
            Variant::AbClassical,
            Variant::AbQuantum,
            Variant::DeformedFirstOrder,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::SigmaClassical => "sigma-classical",
            Variant::SigmaQuantum => "sigma-quantum",
            Variant::AbClassical => "ab-classical",
            Variant::AbQuantum => "ab-quantum",
            Variant::DeformedFirstOrder => "sigma-deformed",
        }
    }

    /// Does the variant carry quantum terms (and hence a `q` scalar)?
    pub fn is_quantum(self) -> bool {
        !matches!(self, Variant::SigmaClassical | Variant::AbClassical)
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A presented ring: ambient polynomial ring, grading, and relation list.
#[derive(Debug, Clone)]
pub struct Presentation<F: Field> {
    pub variant: Variant,
    pub n: usize,
    ring: Arc<PolyRing>,
    grading: GradingSpec,
    relations: Vec<MultiPoly<F>>,
}

impl<F: Field> Presentation<F> {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn grading(&self) -> &GradingSpec {
        &self.grading
    }

    pub fn relations(&self) -> &[MultiPoly<F>] {
        &self.relations
    }

    pub fn ideal(&self) -> Result<Ideal<F>> {
        Ideal::new(self.ring.clone(), self.relations.clone())
    }

    /// Are all relations homogeneous for the presentation's grading (with
    /// `q` carrying its own weight)?
    pub fn homogeneous(&self) -> Result<bool> {
        for rel in &self.relations {
            if !self.grading.is_homogeneous(rel)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::UnsupportedN { n, min: 2 });
    }
    Ok(())
}

/// Ambient ring of the Schubert presentations: `s1 .. s{2n-2}`.
pub fn sigma_ring(n: usize) -> Arc<PolyRing> {
    PolyRing::new((1..=2 * n - 2).map(|i| format!("s{i}")).collect::<Vec<_>>())
}

fn deformed_ring(n: usize) -> Arc<PolyRing> {
    let mut vars: Vec<String> = (1..=2 * n - 2).map(|i| format!("s{i}")).collect();
    vars.push("t".to_string());
    PolyRing::new(vars)
}

/// Ambient ring of the Chern-root presentations: `a1, a2, b1 .. b{n-2}`.
pub fn ab_ring(n: usize) -> Arc<PolyRing> {
    let mut vars = vec!["a1".to_string(), "a2".to_string()];
    vars.extend((1..=n - 2).map(|i| format!("b{i}")));
    PolyRing::new(vars)
}

/// The class `s_k` as an element of `ring`: 1 for `k = 0`, the variable for
/// `1 <= k <= count`, zero otherwise.
fn sigma_class<F: Field>(ring: &Arc<PolyRing>, count: usize, k: i64) -> MultiPoly<F> {
    if k == 0 {
        MultiPoly::one(ring)
    } else if k >= 1 && k <= count as i64 {
        MultiPoly::var(ring, (k - 1) as usize)
    } else {
        MultiPoly::zero(ring)
    }
}

/// Determinant of the `r x r` band matrix with `(i, j)` entry `s_{1+j-i}`.
/// Its linear part is `(-1)^{r+1} s_r`.
fn determinantal_relation<F: Field>(
    ring: &Arc<PolyRing>,
    count: usize,
    r: usize,
) -> Result<MultiPoly<F>> {
    let m: Vec<Vec<MultiPoly<F>>> = (1..=r)
        .map(|i| {
            (1..=r)
                .map(|j| sigma_class(ring, count, 1 + j as i64 - i as i64))
                .collect()
        })
        .collect();
    det_poly_matrix(&m)
}

/// `s_c^2 + 2 * sum_{i=1}^{m} (-1)^i s_{c+i} s_{c-i}`, the quadratic
/// relations tied to the two top cohomological degrees.
fn square_relation<F: Field>(
    ring: &Arc<PolyRing>,
    count: usize,
    center: usize,
    m: usize,
) -> Result<MultiPoly<F>> {
    let c = center as i64;
    let mut acc = sigma_class::<F>(ring, count, c).pow(2);
    for i in 1..=m as i64 {
        let prod = sigma_class::<F>(ring, count, c + i).checked_mul(&sigma_class(
            ring,
            count,
            c - i,
        ))?;
        let coeff = F::from_i64(if i % 2 == 0 { 2 } else { -2 });
        acc = acc.checked_add(&prod.scale(&coeff))?;
    }
    Ok(acc)
}

/// `(-1)^{n+1}` as a field scalar.
fn parity_sign<F: Field>(n: usize) -> F {
    F::from_i64(if n % 2 == 0 { -1 } else { 1 })
}

/// Relation list of the Schubert presentations. `quantum_q` carries the `q`
/// scalar for the quantum corrections; `deformation` additionally appends
/// the first-order term in the final ring variable `t`.
fn sigma_relations<F: Field>(
    n: usize,
    ring: &Arc<PolyRing>,
    quantum_q: Option<&F>,
    deformation: bool,
) -> Result<Vec<MultiPoly<F>>> {
    let count = 2 * n - 2;
    let mut rels = Vec::new();
    for r in 3..=2 * n - 2 {
        rels.push(determinantal_relation(ring, count, r)?);
    }

    let mut low = square_relation(ring, count, n - 1, n - 1)?;
    if deformation {
        let q = quantum_q.expect("the deformation is quantum");
        let t = MultiPoly::var(ring, ring.nvars() - 1);
        low = low.checked_add(&t.scale(&parity_sign::<F>(n).mul(q)))?;
    }
    rels.push(low);

    let mut high = square_relation(ring, count, n, n - 2)?;
    if let Some(q) = quantum_q {
        let s1 = sigma_class::<F>(ring, count, 1);
        high = high.checked_add(&s1.scale(&parity_sign::<F>(n).mul(q)))?;
    }
    rels.push(high);
    Ok(rels)
}

/// The generating series `1 + a1 x + a2 x^2` (tangent-bundle side) and
/// `1 + b1 x^2 + ... + b_{n-2} x^{2n-4}` (quotient side) in a ring with `x`
/// prepended to the `ab` variables.
fn generating_series<F: Field>(
    n: usize,
    ext: &Arc<PolyRing>,
    negate_x: bool,
) -> (MultiPoly<F>, MultiPoly<F>) {
    let x = MultiPoly::<F>::var(ext, 0);
    let a1 = MultiPoly::var(ext, 1);
    let a2 = MultiPoly::var(ext, 2);
    let sign = if negate_x { F::from_i64(-1) } else { F::one() };
    let p = MultiPoly::one(ext)
        .checked_add(&(&a1 * &x).scale(&sign))
        .and_then(|p| p.checked_add(&(&a2 * &x.pow(2))))
        .expect("same ring");
    let mut q_series = MultiPoly::one(ext);
    for i in 1..=n - 2 {
        let b = MultiPoly::var(ext, 2 + i);
        q_series = q_series
            .checked_add(&(&b * &x.pow(2 * i as u32)))
            .expect("same ring");
    }
    (p, q_series)
}

/// Relation list of the Chern-root presentations: the coefficients of
/// `x^{2k}`, `k = 1..n`, in `P(x) P(-x) Q(x) - 1 - q a1 x^{2n}` (the last
/// term only in the quantum case).
fn ab_relations<F: Field>(
    n: usize,
    ring: &Arc<PolyRing>,
    quantum_q: Option<&F>,
) -> Result<Vec<MultiPoly<F>>> {
    let mut ext_vars = vec!["x".to_string()];
    ext_vars.extend(ring.var_names().iter().cloned());
    let ext = PolyRing::new(ext_vars);

    let (p_pos, q_series) = generating_series::<F>(n, &ext, false);
    let (p_neg, _) = generating_series::<F>(n, &ext, true);
    let mut series = p_pos
        .checked_mul(&p_neg)?
        .checked_mul(&q_series)?
        .checked_sub(&MultiPoly::one(&ext))?;
    if let Some(q) = quantum_q {
        let x = MultiPoly::<F>::var(&ext, 0);
        let a1 = MultiPoly::var(&ext, 1);
        series = series.checked_sub(&(&a1 * &x.pow(2 * n as u32)).scale(q))?;
    }

    (1..=n)
        .map(|k| series.extract_var_power(0, 2 * k as u32, ring))
        .collect()
}

/// The Schubert classes `s_1 .. s_{2n-2}` written in the Chern-root ring:
/// `s_k` is the coefficient of `x^k` in `P(-x) Q(x)`.
pub fn sigma_to_ab_images<F: Field>(n: usize) -> Result<Vec<MultiPoly<F>>> {
    check_n(n)?;
    let ring = ab_ring(n);
    let mut ext_vars = vec!["x".to_string()];
    ext_vars.extend(ring.var_names().iter().cloned());
    let ext = PolyRing::new(ext_vars);
    let (p_neg, q_series) = generating_series::<F>(n, &ext, true);
    let series = p_neg.checked_mul(&q_series)?;
    (1..=2 * n - 2)
        .map(|k| series.extract_var_power(0, k as u32, &ring))
        .collect()
}

/// Builds a presentation over any coefficient field that can realize the
/// quantum parameter described by `coeff`.
pub fn build_presentation<F: QScalar>(
    n: usize,
    variant: Variant,
    coeff: &CoeffField,
) -> Result<Presentation<F>> {
    check_n(n)?;
    let q_weight = (2 * n - 1) as i64;
    let q = if variant.is_quantum() {
        Some(F::q_scalar(coeff)?)
    } else {
        None
    };
    let (ring, grading, relations) = match variant {
        Variant::SigmaClassical | Variant::SigmaQuantum => {
            let ring = sigma_ring(n);
            let weights = (1..=2 * n - 2).map(|i| i as i64).collect();
            let rels = sigma_relations(n, &ring, q.as_ref(), false)?;
            (ring, GradingSpec::new(weights, q_weight), rels)
        }
        Variant::DeformedFirstOrder => {
            let ring = deformed_ring(n);
            let mut weights: Vec<i64> = (1..=2 * n - 2).map(|i| i as i64).collect();
            weights.push(-1);
            let rels = sigma_relations(n, &ring, q.as_ref(), true)?;
            (ring, GradingSpec::new(weights, q_weight), rels)
        }
        Variant::AbClassical | Variant::AbQuantum => {
            let ring = ab_ring(n);
            let mut weights = vec![1, 2];
            weights.extend((1..=n - 2).map(|i| 2 * i as i64));
            let rels = ab_relations(n, &ring, q.as_ref())?;
            (ring, GradingSpec::new(weights, q_weight), rels)
        }
    };
    Ok(Presentation {
        variant,
        n,
        ring,
        grading,
        relations,
    })
}

/// Substitutes a constant for the last ring variable, rewriting `polys` in
/// the ring spanned by the remaining variables.
pub fn specialize_last_var<F: Field>(
    polys: &[MultiPoly<F>],
    value: &F,
) -> Result<Vec<MultiPoly<F>>> {
    let ring = match polys.first() {
        Some(p) => p.ring().clone(),
        None => return Err(Error::EmptyGeneratorList),
    };
    let nvars = ring.nvars();
    let target = PolyRing::new(ring.var_names()[..nvars - 1].to_vec());
    let mut images: Vec<MultiPoly<F>> = (0..nvars - 1)
        .map(|i| MultiPoly::var(&target, i))
        .collect();
    images.push(MultiPoly::constant(&target, value.clone()));
    polys.iter().map(|p| p.substitute(&images)).collect()
}

/// Closed-form invariants of the IG(2, 2n) quantum cohomology ring that the
/// computational claims are checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedCounts {
    /// Vector-space dimension of the quantum quotient ring: `2n(n-1)`.
    pub quotient_dim: usize,
    /// Reduced points of the spectrum away from the origin: `(2n-1)(n-1)`.
    pub reduced_points: usize,
    /// Length of the fat component at the origin: `n-1`.
    pub origin_length: usize,
    /// Rank of the deformed system's Jacobian at the origin: `2n-2`.
    pub deformed_jacobian_rank: usize,
    /// Dimension of the nilradical of the quantum quotient: `n-2`.
    pub radical_dim: usize,
}

impl ExpectedCounts {
    /// Rank of the trace form on the full quotient.
    pub fn trace_rank(&self) -> usize {
        self.quotient_dim - self.radical_dim
    }
}

pub fn expected_counts(n: usize) -> Result<ExpectedCounts> {
    check_n(n)?;
    Ok(ExpectedCounts {
        quotient_dim: 2 * n * (n - 1),
        reduced_points: (2 * n - 1) * (n - 1),
        origin_length: n - 1,
        deformed_jacobian_rank: 2 * n - 2,
        radical_dim: n - 2,
    })
}

/// Solution counting for the quantum system at `q = -1` reduced to a single
/// variable `z`: solutions away from the degenerate locus come in ordered
/// pairs, so the point count is half the ordered count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolutionCount {
    /// Degree of the squarefree part of the eliminant.
    pub squarefree_degree: usize,
    /// Degree of its common factor with the degenerate locus.
    pub excluded_degree: usize,
    /// Distinct nondegenerate ordered solutions.
    pub ordered_count: usize,
    /// Distinct points (unordered solutions).
    pub point_count: usize,
}

/// Counts the solutions of the one-variable eliminant
/// `(z^{2n} - z)^{2n} = z^{2n}` that avoid the degenerate locus
/// `z (z^{2n-1} - 2) = 0`.
pub fn z_count(n: usize) -> Result<SolutionCount> {
    check_n(n)?;
    let d = 2 * n;
    let z = UniPoly::monomial(Rational::one(), 1);
    let z_d = UniPoly::monomial(Rational::one(), d);
    let f = z_d.sub(&z).pow(d as u32).sub(&z_d);
    let sf = squarefree_part(&f)?;
    let excluded = z_d.sub(&z.scale(&Rational::from_integer(2)));
    let common = gcd(&sf, &excluded)?;
    let squarefree_degree = sf.degree().expect("nonzero");
    let excluded_degree = common.degree().expect("nonzero");
    let ordered_count = squarefree_degree - excluded_degree;
    debug_assert_eq!(ordered_count % 2, 0);
    Ok(SolutionCount {
        squarefree_degree,
        excluded_degree,
        ordered_count,
        point_count: ordered_count / 2,
    })
}

/// Outcome of checking that the Schubert-to-Chern-root change of variables
/// maps one quantum presentation into the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompatReport {
    /// Do the classical relation sets correspond under the substitution?
    pub classical_ok: bool,
    /// Does exactly one sign convention for `q` make the quantum relation
    /// sets correspond?
    pub well_defined: bool,
    /// That sign: `q -> twist * q` identifies the conventions.
    pub quantum_twist: Option<i64>,
}

/// Substitute the Schubert classes into each Schubert relation and test
/// membership in the Chern-root ideal, for both signs of `q`.
pub fn presentation_compat<F: QScalar>(n: usize, coeff: &CoeffField) -> Result<CompatReport> {
    check_n(n)?;
    let order = crate::algebra::monomial::MonomialOrder::Grevlex;
    let images = sigma_to_ab_images::<F>(n)?;

    let classical_ab = build_presentation::<F>(n, Variant::AbClassical, coeff)?.ideal()?;
    let classical_ok = sigma_relations::<F>(n, &sigma_ring(n), None, false)?
        .iter()
        .map(|rel| rel.substitute(&images))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .try_fold(true, |acc, s| {
            Ok::<_, Error>(acc && classical_ab.contains(s, &order)?)
        })?;

    let quantum_ab = build_presentation::<F>(n, Variant::AbQuantum, coeff)?.ideal()?;
    let q = F::q_scalar(coeff)?;
    let mut works = Vec::new();
    for twist in [1i64, -1] {
        let qs = if twist == 1 { q.clone() } else { q.neg() };
        let mut all_in = true;
        for rel in sigma_relations::<F>(n, &sigma_ring(n), Some(&qs), false)? {
            if !quantum_ab.contains(&rel.substitute(&images)?, &order)? {
                all_in = false;
                break;
            }
        }
        if all_in {
            works.push(twist);
        }
    }
    Ok(CompatReport {
        classical_ok,
        well_defined: works.len() == 1,
        quantum_twist: (works.len() == 1).then(|| works[0]),
    })
}
