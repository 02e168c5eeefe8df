use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, TowerId};
use crate::poly::HomForm;

/// Cross product of two coordinate vectors.
pub(crate) fn cross(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> [FieldElement; 3] {
    [&(&a[1] * &b[2]) - &(&a[2] * &b[1]), &(&a[2] * &b[0]) - &(&a[0] * &b[2]), &(&a[0] * &b[1]) - &(&a[1] * &b[0])]
}

pub(crate) fn dot(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> FieldElement {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

pub(crate) fn is_null(v: &[FieldElement; 3]) -> bool {
    v.iter().all(FieldElement::is_zero)
}

/// Divides a nonzero vector by its first nonzero entry.
pub(crate) fn normalize_vector<const N: usize>(v: [FieldElement; N]) -> Result<[FieldElement; N]> {
    let tower = v[0].tower();
    if let Some(e) = v.iter().find(|e| e.tower() != tower) {
        return Err(Error::TowerMismatch(tower, e.tower()));
    }
    let lead = v.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::Malformed("all-zero coordinates".into()))?;
    if v[lead].is_one() {
        return Ok(v);
    }
    let inv = v[lead].inv()?;
    Ok(v.map(|c| &c * &inv))
}

/// A point of the projective plane in canonical form: the first nonzero
/// coordinate is 1, so equal points have equal coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [FieldElement; 3],
}

impl ProjPoint {
    pub fn new(x: FieldElement, y: FieldElement, z: FieldElement) -> Result<Self> {
        Self::from_coords([x, y, z])
    }

    pub fn from_coords(coords: [FieldElement; 3]) -> Result<Self> {
        Ok(ProjPoint { coords: normalize_vector(coords)? })
    }

    pub fn from_ints(tower: TowerId, c: [i64; 3]) -> Result<Self> {
        Self::from_coords(c.map(|n| FieldElement::from_int(tower, n)))
    }

    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.coords
    }

    pub fn tower(&self) -> TowerId {
        self.coords[0].tower()
    }

    /// The point with coordinates `(c[perm[0]], c[perm[1]], c[perm[2]])`.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        Self::from_coords(perm.map(|i| self.coords[i].clone())).expect("permutation of a valid point")
    }

    pub fn lies_on(&self, f: &HomForm) -> bool {
        f.eval(&self.coords).is_zero()
    }

    pub fn zero_coordinates(&self) -> usize {
        self.coords.iter().filter(|c| c.is_zero()).count()
    }

    /// Points differ as projective points iff their coordinate vectors are not proportional.
    pub fn same_as(&self, coords: &[FieldElement; 3]) -> bool {
        is_null(&cross(&self.coords, coords))
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a.cmp(b)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All six coordinate permutations.
pub const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// A line `u x + v y + w z = 0`, normalized like a point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line {
    coeffs: [FieldElement; 3],
}

impl Line {
    pub fn new(u: FieldElement, v: FieldElement, w: FieldElement) -> Result<Self> {
        Ok(Line { coeffs: normalize_vector([u, v, w])? })
    }

    /// The line through two distinct points.
    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<Self> {
        let c = cross(p.coords(), q.coords());
        if is_null(&c) {
            return Err(Error::contract("a line needs two distinct points"));
        }
        let [u, v, w] = c;
        Self::new(u, v, w)
    }

    pub fn coeffs(&self) -> &[FieldElement; 3] {
        &self.coeffs
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        dot(&self.coeffs, p.coords()).is_zero()
    }

    pub fn to_form(&self) -> HomForm {
        HomForm::linear(&self.coeffs)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})x + ({})y + ({})z", self.coeffs[0], self.coeffs[1], self.coeffs[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_normalization() {
        let p = ProjPoint::from_ints(TowerId::Q, [0, 4, -8]).unwrap();
        let q = ProjPoint::from_ints(TowerId::Q, [0, -1, 2]).unwrap();
        assert_eq!(p, q);
        assert!(p.coords()[1].is_one());
        assert!(ProjPoint::from_ints(TowerId::Q, [0, 0, 0]).is_err());
    }

    #[test]
    fn line_through_points() {
        let p = ProjPoint::from_ints(TowerId::Q, [1, 0, 0]).unwrap();
        let q = ProjPoint::from_ints(TowerId::Q, [0, 1, 0]).unwrap();
        let l = Line::through(&p, &q).unwrap();
        assert!(l.contains(&p) && l.contains(&q));
        assert!(!l.contains(&ProjPoint::from_ints(TowerId::Q, [0, 0, 1]).unwrap()));
        assert!(Line::through(&p, &p).is_err());
    }

    #[test]
    fn permute_coordinates() {
        let p = ProjPoint::from_ints(TowerId::Q, [1, 2, 3]).unwrap();
        assert_eq!(p.permute([2, 1, 0]), ProjPoint::from_ints(TowerId::Q, [3, 2, 1]).unwrap());
    }
}
