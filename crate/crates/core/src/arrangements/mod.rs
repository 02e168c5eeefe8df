//! Tangent lines and osculating conics at sextactic and type-9 points, and
//! the intersection points of those conics off the cubic.

mod census;
mod conics;
mod tangents;

pub use census::{shadow_census, shadow_census_from, CensusPoint, ConicArrangement, LocalIntersections, ShadowCensus};
pub use conics::{admissible_pairs, conic_catalog, contact_conditions, find_conic, ConicCatalog, OsculatingConic};
pub use tangents::{tangent_analysis, TangentEntry, TangentReport};
