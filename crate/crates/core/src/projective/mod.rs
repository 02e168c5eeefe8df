//! Points, lines and conics in the projective plane over a tower field, and
//! exact intersection multiplicities along lines and conics.

mod conic;
mod intersect;
mod point;

pub use conic::{conic_monomials, Conic, ConicParametrization, CONIC_MONOMIALS};
pub(crate) use intersect::residual_along;
pub use intersect::{
    conic_parametrize, conic_residual_point, hom_eval, intersection_multiplicity_on_conic, line_residual_point,
    line_residual_point_on, tangent_line,
};
pub use point::{Line, ProjPoint, PERMUTATIONS};
