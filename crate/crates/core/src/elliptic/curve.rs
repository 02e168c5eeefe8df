use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, TowerId};
use crate::poly::HomForm;
use crate::projective::ProjPoint;

/// A point of a Weierstrass curve: the point at infinity `O` or an affine point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ECPoint {
    Infinity,
    Affine { x: FieldElement, y: FieldElement },
}

impl ECPoint {
    pub fn affine(x: FieldElement, y: FieldElement) -> Self {
        ECPoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ECPoint::Infinity)
    }

    pub fn x(&self) -> Option<&FieldElement> {
        match self {
            ECPoint::Infinity => None,
            ECPoint::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&FieldElement> {
        match self {
            ECPoint::Infinity => None,
            ECPoint::Affine { y, .. } => Some(y),
        }
    }
}

impl fmt::Debug for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Infinity => write!(f, "O"),
            ECPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// The curve `y^2 = x^3 + A x + B` over a tower field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    a: FieldElement,
    b: FieldElement,
}

impl WeierstrassCurve {
    pub fn new(a: FieldElement, b: FieldElement) -> Result<Self> {
        if a.tower() != b.tower() {
            return Err(Error::TowerMismatch(a.tower(), b.tower()));
        }
        let curve = WeierstrassCurve { a, b };
        if curve.discriminant().is_zero() {
            return Err(Error::Malformed("singular Weierstrass curve".into()));
        }
        Ok(curve)
    }

    /// `y^2 = x^3 - 432`, the Weierstrass model of the Fermat cubic.
    pub fn fermat(tower: TowerId) -> Self {
        Self::new(FieldElement::zero(tower), FieldElement::from_int(tower, -432)).expect("nonsingular")
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn b(&self) -> &FieldElement {
        &self.b
    }

    pub fn tower(&self) -> TowerId {
        self.a.tower()
    }

    /// `-16 (4 A^3 + 27 B^2)`
    pub fn discriminant(&self) -> FieldElement {
        (&self.a.pow(3).scale_int(4) + &self.b.square().scale_int(27)).scale_int(-16)
    }

    /// Right-hand side `x^3 + A x + B`.
    pub fn rhs(&self, x: &FieldElement) -> FieldElement {
        &(&x.pow(3) + &(&self.a * x)) + &self.b
    }

    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine { x, y } => y.square() == self.rhs(x),
        }
    }

    pub fn neg(&self, p: &ECPoint) -> ECPoint {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine { x, y } => ECPoint::affine(x.clone(), -y),
        }
    }

    /// Chord-tangent addition with identity `O`.
    pub fn add(&self, p: &ECPoint, q: &ECPoint) -> ECPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (ECPoint::Infinity, _) => return q.clone(),
            (_, ECPoint::Infinity) => return p.clone(),
            (ECPoint::Affine { x: x1, y: y1 }, ECPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 != x2 {
            (y2 - y1).try_div(&(x2 - x1)).expect("distinct x")
        } else if y1 == y2 && !y1.is_zero() {
            let num = &x1.square().scale_int(3) + &self.a;
            num.try_div(&y1.scale_int(2)).expect("nonzero y")
        } else {
            // P = -Q: vertical chord (covers 2-torsion doubling)
            return ECPoint::Infinity;
        };
        let x3 = &(&slope.square() - x1) - x2;
        let y3 = &(&slope * &(x1 - &x3)) - y1;
        ECPoint::affine(x3, y3)
    }

    pub fn double(&self, p: &ECPoint) -> ECPoint {
        self.add(p, p)
    }

    /// `n P` by double-and-add; negative `n` multiplies `-P`.
    pub fn scalar_mul(&self, n: i64, p: &ECPoint) -> ECPoint {
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = ECPoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.double(&base);
            }
        }
        acc
    }

    /// The exact order of `p`, if it is at most `bound`.
    pub fn order(&self, p: &ECPoint, bound: u32) -> Option<u32> {
        let mut acc = p.clone();
        for n in 1..=bound {
            if acc.is_infinity() {
                return Some(n);
            }
            acc = self.add(&acc, p);
        }
        None
    }
}

/// Maps a point of the Fermat cubic to the Weierstrass model via
/// `x~ = -12 z / (x + y)`, `y~ = 36 (x - y) / (x + y)`. The flex
/// `[1 : -1 : 0]` goes to `O`.
pub fn to_weierstrass(p: &ProjPoint) -> Result<ECPoint> {
    if !p.lies_on(&HomForm::fermat(p.tower())) {
        return Err(Error::contract(format!("{p} is not on the Fermat cubic")));
    }
    let [x, y, z] = p.coords();
    let s = x + y;
    if s.is_zero() {
        return Ok(ECPoint::Infinity);
    }
    let inv = s.inv()?;
    Ok(ECPoint::affine(&z.scale_int(-12) * &inv, &(x - y).scale_int(36) * &inv))
}

/// Inverse of [`to_weierstrass`]: `(x~, y~) -> [36 + y~ : 36 - y~ : -6 x~]`.
pub fn from_weierstrass(q: &ECPoint, tower: TowerId) -> ProjPoint {
    match q {
        ECPoint::Infinity => ProjPoint::from_ints(tower, [1, -1, 0]).expect("nonzero"),
        ECPoint::Affine { x, y } => {
            let c36 = FieldElement::from_int(x.tower(), 36);
            ProjPoint::new(&c36 + y, &c36 - y, x.scale_int(-6)).expect("x + y = 72 is nonzero")
        }
    }
}
