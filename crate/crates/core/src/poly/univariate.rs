use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElement, TowerId};

/// Dense univariate polynomial over a tower field; `coeffs[k]` multiplies `t^k`.
///
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    tower: TowerId,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn zero(tower: TowerId) -> Self {
        UniPoly { tower, coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        let tower = c.tower();
        Self::from_coeffs(tower, vec![c])
    }

    /// `t`
    pub fn identity(tower: TowerId) -> Self {
        Self::from_coeffs(tower, vec![FieldElement::zero(tower), FieldElement::one(tower)])
    }

    /// `c0 + c1 t`
    pub fn linear(c0: FieldElement, c1: FieldElement) -> Self {
        let tower = c0.tower();
        Self::from_coeffs(tower, vec![c0, c1])
    }

    pub fn from_coeffs(tower: TowerId, mut coeffs: Vec<FieldElement>) -> Self {
        assert!(coeffs.iter().all(|c| c.tower() == tower), "coefficient from another tower");
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        UniPoly { tower, coeffs }
    }

    /// `prod (t - r_i)`
    pub fn from_roots(tower: TowerId, roots: &[FieldElement]) -> Self {
        roots
            .iter()
            .fold(Self::constant(FieldElement::one(tower)), |acc, r| &acc * &Self::linear(-r, FieldElement::one(tower)))
    }

    pub fn tower(&self) -> TowerId {
        self.tower
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| FieldElement::zero(self.tower))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(FieldElement::zero(self.tower), |acc, c| &(&acc * t) + c)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::from_coeffs(self.tower, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(FieldElement::one(self.tower)), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.scale_int(k as i64)).collect();
        Self::from_coeffs(self.tower, coeffs)
    }

    /// Divides by `(t - r)`, returning quotient and remainder `p(r)`.
    pub fn synthetic_division(&self, r: &FieldElement) -> (Self, FieldElement) {
        if self.coeffs.is_empty() {
            return (self.clone(), FieldElement::zero(self.tower));
        }
        let n = self.coeffs.len();
        let mut q = vec![FieldElement::zero(self.tower); n - 1];
        let mut carry = FieldElement::zero(self.tower);
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &(&carry * r);
            if k == 0 {
                return (Self::from_coeffs(self.tower, q), v);
            }
            q[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// The largest `k` such that `(t - r)^k` divides `self`.
    pub fn root_multiplicity(&self, r: &FieldElement) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if r.is_zero() {
            return Ok(self.coeffs.iter().take_while(|c| c.is_zero()).count());
        }
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, rem) = p.synthetic_division(r);
            if !rem.is_zero() {
                return Ok(k);
            }
            k += 1;
            p = q;
        }
    }

    /// Returns `q` with `self = (t - r)^k q`.
    pub fn deflate(&self, r: &FieldElement, k: usize) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut p = self.clone();
        for found in 0..k {
            let (q, rem) = p.synthetic_division(r);
            if !rem.is_zero() {
                return Err(Error::MultiplicityShortfall { needed: k, found });
            }
            p = q;
        }
        Ok(p)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&FieldElement, &FieldElement) -> FieldElement) -> Self {
        assert_eq!(self.tower, other.tower, "polynomials over different towers");
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = FieldElement::zero(self.tower);
        let coeffs =
            (0..n).map(|k| f(self.coeffs.get(k).unwrap_or(&zero), other.coeffs.get(k).unwrap_or(&zero))).collect();
        Self::from_coeffs(self.tower, coeffs)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { tower: self.tower, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        assert_eq!(self.tower, rhs.tower, "polynomials over different towers");
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.tower);
        }
        let mut out = vec![FieldElement::zero(self.tower); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        UniPoly::from_coeffs(self.tower, out)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| format!("({c})*t^{k}")).collect();
        f.write_str(&terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: TowerId = TowerId::Q;

    fn q(n: i64) -> FieldElement {
        FieldElement::from_int(Q, n)
    }

    #[test]
    fn psi3_shape_vanishes_at_twelve() {
        // 3x(x^3 - 1728) = 3x^4 - 5184x
        let p = UniPoly::from_coeffs(Q, vec![q(0), q(-5184), q(0), q(0), q(3)]);
        assert!(p.eval(&q(12)).is_zero());
        assert!(UniPoly::zero(Q).eval(&q(5)).is_zero());
    }

    #[test]
    fn multiplicity_of_constructed_root() {
        let p = UniPoly::from_roots(Q, &[q(1), q(1), q(1), q(-2)]);
        assert_eq!(p.root_multiplicity(&q(1)).unwrap(), 3);
        assert_eq!(p.root_multiplicity(&q(-2)).unwrap(), 1);
        assert_eq!(p.root_multiplicity(&q(5)).unwrap(), 0);
        assert_eq!(UniPoly::zero(Q).root_multiplicity(&q(1)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn deflate_leaves_cofactor() {
        let p = UniPoly::from_roots(Q, &[q(3), q(3), q(3), q(7)]);
        assert_eq!(p.deflate(&q(3), 3).unwrap(), UniPoly::from_roots(Q, &[q(7)]));
        assert_eq!(p.deflate(&q(7), 2), Err(Error::MultiplicityShortfall { needed: 2, found: 1 }));
    }

    #[test]
    fn synthetic_division_remainder_is_value() {
        let p = UniPoly::from_coeffs(Q, vec![q(1), q(2), q(3)]);
        let (quot, rem) = p.synthetic_division(&q(2));
        assert_eq!(rem, q(17));
        assert_eq!(&(&quot * &UniPoly::linear(q(-2), q(1))) + &UniPoly::constant(rem), p);
    }

    #[test]
    fn zero_root_counts_low_coefficients() {
        let p = UniPoly::from_coeffs(Q, vec![q(0), q(0), q(4), q(1)]);
        assert_eq!(p.root_multiplicity(&q(0)).unwrap(), 2);
        assert_eq!(p.deflate(&q(0), 2).unwrap(), UniPoly::linear(q(4), q(1)));
    }
}
