//! Linear algebra on zero-dimensional quotient rings: multiplication
//! matrices on the monomial basis, the trace bilinear form and its radical,
//! tangent-space dimensions, and classification of local ring structure.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::field::Field;
use crate::algebra::matrix::DenseMatrix;
use crate::algebra::monomial::{Exponent, MonomialOrder};
use crate::algebra::multipoly::{MultiPoly, PolyRing};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, ReducedGB, StandardMonomials};

/// A finite-dimensional quotient `K[x]/I` carried by its standard-monomial
/// basis, with lazily cached multiplication matrices for each variable.
pub struct QuotientAlgebra<F: Field> {
    gb: Arc<ReducedGB<F>>,
    basis: Vec<Exponent>,
    index: HashMap<Exponent, usize>,
    var_mats: Vec<OnceLock<Arc<DenseMatrix<F>>>>,
}

impl<F: Field> QuotientAlgebra<F> {
    /// Builds the quotient in the given order; errors unless the quotient is
    /// finite-dimensional.
    pub fn new(ideal: &Ideal<F>, order: &MonomialOrder) -> Result<Self> {
        Self::from_gb(ideal.groebner_basis(order)?)
    }

    /// Same, starting from an already-computed reduced basis.
    pub fn from_gb(gb: Arc<ReducedGB<F>>) -> Result<Self> {
        let basis = match gb.standard_monomials() {
            StandardMonomials::Finite(b) => b,
            StandardMonomials::NotZeroDimensional => return Err(Error::NotZeroDimensional),
        };
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let nvars = gb.ring().nvars();
        Ok(QuotientAlgebra {
            gb,
            basis,
            index,
            var_mats: (0..nvars).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.gb.ring()
    }

    pub fn gb(&self) -> &Arc<ReducedGB<F>> {
        &self.gb
    }

    /// Standard monomials, ascending in the basis order.
    pub fn basis(&self) -> &[Exponent] {
        &self.basis
    }

    /// Coordinates of `f`'s residue class on the monomial basis.
    pub fn coords(&self, f: &MultiPoly<F>) -> Result<Vec<F>> {
        let nf = self.gb.normal_form(f)?;
        let mut coords = vec![F::zero(); self.basis.len()];
        for (e, c) in nf.terms() {
            let i = self
                .index
                .get(e)
                .copied()
                .expect("normal form supported on standard monomials");
            coords[i] = c.clone();
        }
        Ok(coords)
    }

    /// The polynomial with the given basis coordinates.
    pub fn poly_from_coords(&self, coords: &[F]) -> Result<MultiPoly<F>> {
        if coords.len() != self.basis.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a basis of size {}",
                coords.len(),
                self.basis.len()
            )));
        }
        let terms = self
            .basis
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Ok(MultiPoly::from_terms(self.ring(), terms))
    }

    /// Matrix of multiplication by `f` on the quotient; column `j` holds the
    /// coordinates of `f * b_j`.
    pub fn mult_matrix(&self, f: &MultiPoly<F>) -> Result<DenseMatrix<F>> {
        if f.ring() != self.ring() {
            return Err(Error::RingMismatch);
        }
        let dim = self.dim();
        let mut m = DenseMatrix::zero(dim, dim);
        for (j, e) in self.basis.iter().enumerate() {
            let b = MultiPoly::from_terms(self.ring(), vec![(e.clone(), F::one())]);
            let col = self.coords(&f.checked_mul(&b)?)?;
            for (i, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j, v);
                }
            }
        }
        Ok(m)
    }

    /// Cached multiplication matrix of the variable `v`.
    pub fn var_matrix(&self, v: usize) -> Result<Arc<DenseMatrix<F>>> {
        let lock = self
            .var_mats
            .get(v)
            .ok_or(Error::IndexOutOfRange {
                index: v,
                limit: self.var_mats.len(),
            })?;
        if let Some(m) = lock.get() {
            return Ok(m.clone());
        }
        let m = Arc::new(self.mult_matrix(&MultiPoly::var(self.ring(), v))?);
        let _ = lock.set(m);
        Ok(lock.get().expect("just set").clone())
    }

    /// Multiplication matrices of all basis monomials, built by factoring
    /// each monomial as (variable) * (smaller basis monomial).
    pub fn basis_mult_matrices(&self) -> Result<Vec<Arc<DenseMatrix<F>>>> {
        let dim = self.dim();
        let mut mats: Vec<Option<Arc<DenseMatrix<F>>>> = vec![None; dim];
        for (i, e) in self.basis.iter().enumerate() {
            if e.is_constant() {
                mats[i] = Some(Arc::new(DenseMatrix::identity(dim)));
                continue;
            }
            let v = (0..e.len()).find(|&v| e.get(v) > 0).expect("nonconstant");
            let rest = e.div(&Exponent::var(e.len(), v));
            let j = *self
                .index
                .get(&rest)
                .expect("divisors of standard monomials are standard");
            let prev = mats[j].as_ref().expect("basis is ordered by divisibility");
            mats[i] = Some(Arc::new(self.var_matrix(v)?.mul(prev)?));
        }
        Ok(mats.into_iter().map(|m| m.expect("filled")).collect())
    }

    /// Gram matrix of the trace form `(f, g) -> trace(M_{fg})` on the
    /// monomial basis, with its rank and the dimension of the radical. The
    /// radical of the trace form is the nilradical, so the quotient is
    /// semisimple exactly when the form is nondegenerate.
    pub fn trace_form(&self) -> Result<SemisimplicityReport<F>> {
        let mats = self.basis_mult_matrices()?;
        let tau: Vec<F> = mats
            .iter()
            .map(|m| m.trace())
            .collect::<Result<Vec<F>>>()?;
        let rows = mats
            .iter()
            .map(|m| m.transpose().mul_vec(&tau))
            .collect::<Result<Vec<Vec<F>>>>()?;
        let gram = DenseMatrix::from_rows(rows)?;
        let rank = gram.rank();
        let dim = self.dim();
        Ok(SemisimplicityReport {
            rank,
            radical_dim: dim - rank,
            semisimple: rank == dim,
            gram,
        })
    }
}

/// Outcome of a trace-form computation on a finite quotient algebra.
#[derive(Debug, Clone)]
pub struct SemisimplicityReport<F: Field> {
    pub gram: DenseMatrix<F>,
    pub rank: usize,
    pub radical_dim: usize,
    pub semisimple: bool,
}

/// Jacobian matrix of `gens` evaluated at `point` (rows are generators,
/// columns are variables).
pub fn jacobian_at<F: Field>(gens: &[MultiPoly<F>], point: &[F]) -> Result<DenseMatrix<F>> {
    if gens.is_empty() {
        return Err(Error::EmptyGeneratorList);
    }
    let nvars = gens[0].ring().nvars();
    let rows = gens
        .iter()
        .map(|g| {
            (0..nvars)
                .map(|v| g.partial_derivative(v).eval(point))
                .collect::<Result<Vec<F>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    DenseMatrix::from_rows(rows)
}

/// Dimension of the Zariski tangent space of `V(I)` at a point of the
/// variety; errors with the index of the first generator that fails to
/// vanish if the point is not on the variety.
pub fn tangent_dim_at<F: Field>(ideal: &Ideal<F>, point: &[F]) -> Result<usize> {
    for (index, g) in ideal.generators().iter().enumerate() {
        if !g.eval(point)?.is_zero() {
            return Err(Error::PointNotOnVariety { index });
        }
    }
    let jac = jacobian_at(ideal.generators(), point)?;
    Ok(ideal.ring().nvars() - jac.rank())
}

/// Isomorphism type of the local ring at a point of a zero-dimensional
/// scheme, as far as length and embedding dimension determine it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalStructure {
    /// Length at most one: a reduced point, or nothing at all.
    ReducedPoint,
    /// Length `d >= 2` with a one-dimensional tangent space, i.e. the local
    /// ring is `K[z]/(z^d)`.
    CurvilinearFatPoint(usize),
    /// Fat but not curvilinear.
    Other,
}

impl fmt::Display for LocalStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalStructure::ReducedPoint => write!(f, "reduced point"),
            LocalStructure::CurvilinearFatPoint(d) => {
                write!(f, "curvilinear fat point of length {d}")
            }
            LocalStructure::Other => write!(f, "non-curvilinear fat point"),
        }
    }
}

/// Classifies a local ring from its length and tangent-space dimension. A
/// positive length with a zero-dimensional tangent space is geometrically
/// impossible and reported as inconsistent input.
pub fn classify_local(local_dim: usize, tangent_dim: usize) -> Result<LocalStructure> {
    if local_dim <= 1 {
        return Ok(LocalStructure::ReducedPoint);
    }
    if tangent_dim == 0 {
        return Err(Error::InconsistentInput { local_dim });
    }
    if tangent_dim == 1 {
        return Ok(LocalStructure::CurvilinearFatPoint(local_dim));
    }
    Ok(LocalStructure::Other)
}

/// Local data of a zero-dimensional scheme at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalReport {
    pub local_dim: usize,
    pub tangent_dim: usize,
    pub structure: LocalStructure,
}

/// Length, tangent dimension, and structure of the component at the origin.
/// The origin must lie on the variety unless the local length is zero.
pub fn local_report_at_origin<F: Field>(ideal: &Ideal<F>) -> Result<LocalReport> {
    let local_dim = crate::groebner::local_dim_at_origin(ideal)?;
    let origin = vec![F::zero(); ideal.ring().nvars()];
    let tangent_dim = if local_dim == 0 {
        0
    } else {
        tangent_dim_at(ideal, &origin)?
    };
    Ok(LocalReport {
        local_dim,
        tangent_dim,
        structure: classify_local(local_dim, tangent_dim)?,
    })
}
