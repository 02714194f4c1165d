//! Exact arithmetic foundations: rationals, univariate polynomials, the
//! rational function field in `q`, sparse multivariate polynomials with
//! pluggable monomial orders, weighted gradings, and dense linear algebra.

pub mod field;
pub mod matrix;
pub mod monomial;
pub mod multipoly;
pub mod ratfunc;
pub mod rational;
pub mod unipoly;

pub use field::{CoeffField, Field, QScalar};
pub use matrix::{DenseMatrix, RowSpace};
pub use monomial::{Exponent, MonomialOrder};
pub use multipoly::{det_poly_matrix, GradingSpec, MultiPoly, PolyRing, WeightedDegree};
pub use ratfunc::RatFn;
pub use rational::Rational;
pub use unipoly::{gcd as unipoly_gcd, squarefree_part, UniPoly};
