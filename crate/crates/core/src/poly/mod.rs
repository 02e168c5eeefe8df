//! Univariate polynomials and homogeneous plane-curve forms.

mod form;
mod univariate;

pub use form::{AffinePoly, Exponents, Exponents2, HomForm};
pub use univariate::UniPoly;
