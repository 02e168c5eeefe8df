//! Exact computation of the flexes, sextactic points and type-9 points of the
//! Fermat cubic `x^3 + y^3 + z^3 = 0`, and of the line and conic arrangements
//! they determine.

pub mod arrangements;
pub mod catalogs;
pub mod elliptic;
pub mod error;
pub mod field;
pub mod io;
pub mod poly;
pub mod projective;
pub mod verify;

pub use error::{Error, Result};
