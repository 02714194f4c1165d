//! Exact computer algebra for the quantum cohomology of the symplectic
//! isotropic Grassmannians IG(2,2n).
//!
//! The crate builds the classical, small-quantum and first-order deformed
//! presentations of these rings, analyzes them with exact Groebner-basis and
//! linear-algebra machinery (dimensions, local structure at the origin,
//! trace forms, Jacobians), counts solutions through an independent
//! univariate root oracle, and verifies a four-point intersection count by
//! seeded exact linear algebra. Everything is arbitrary-precision rational
//! arithmetic: no floats, no approximation.

pub mod algebra;
pub mod error;
pub mod groebner;
pub mod gw_check;
pub mod ig_model;
pub mod zerodim;

pub use error::{Error, Result};
