use std::collections::HashSet;

use super::curve::{ECPoint, WeierstrassCurve};
use crate::error::{Error, Result};

/// The subgroup `{ i g1 + j g2 : 0 <= i, j < n }`, listed in generation order
/// (row-major in `(i, j)`) with duplicates dropped.
///
/// Fails with [`Error::IndependenceFailure`] when the generators span fewer
/// than `n^2` points.
pub fn torsion_subgroup(curve: &WeierstrassCurve, g1: &ECPoint, g2: &ECPoint, n: u32) -> Result<Vec<ECPoint>> {
    for g in [g1, g2] {
        if !curve.contains(g) {
            return Err(Error::contract(format!("{g:?} is not on the curve")));
        }
    }
    let mut seen = HashSet::new();
    let mut points = Vec::with_capacity((n * n) as usize);
    let mut row = ECPoint::Infinity;
    for _ in 0..n {
        let mut p = row.clone();
        for _ in 0..n {
            if seen.insert(p.clone()) {
                points.push(p.clone());
            }
            p = curve.add(&p, g2);
        }
        row = curve.add(&row, g1);
    }
    let expected = (n * n) as usize;
    if points.len() < expected {
        return Err(Error::IndependenceFailure { achieved: points.len(), expected });
    }
    Ok(points)
}
