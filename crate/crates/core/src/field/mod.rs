//! Exact arithmetic over `Q` and the tower fields `Q(eps, mu)` and `Q(alpha, beta)`.

mod element;
mod linalg;
pub mod modp;
mod tower;

pub use element::{FieldElement, Rational};
pub use linalg::ExactMatrix;
pub use tower::{Generator, TowerId, TowerSpec};

/// A primitive cube root of unity in `tower`, if the tower contains one.
pub fn cube_root_of_unity(tower: TowerId) -> Option<FieldElement> {
    match tower {
        TowerId::Q => None,
        TowerId::EpsMu => Some(FieldElement::generator(tower, 0)),
        TowerId::AlphaBeta => Some(FieldElement::generator(tower, 1).pow(3)),
    }
}
