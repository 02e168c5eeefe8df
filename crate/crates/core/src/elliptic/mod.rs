//! The Weierstrass model `y^2 = x^3 - 432` of the Fermat cubic, its group
//! law, division polynomials and torsion subgroups.

mod curve;
mod division;
mod torsion;

pub use curve::{from_weierstrass, to_weierstrass, ECPoint, WeierstrassCurve};
pub use division::{division_poly, division_polys, DivisionPoly, MAX_DIVISION_INDEX};
pub use torsion::torsion_subgroup;
