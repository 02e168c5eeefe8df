//! The flex, sextactic and type-9 point catalogs, enumerated through the
//! group law, plus published fixtures and the degree-24 form check.

mod build;
pub mod fixtures;
mod quartic24;

pub use build::{
    catalog, flex_catalog, sextactic_catalog, type9_catalog, type9_generators, PointCatalog, PointKind, Provenance,
};
pub use quartic24::{type9_form, type9_form_factors, verify_type9_form, FormReport};
