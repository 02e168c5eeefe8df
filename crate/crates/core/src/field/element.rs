use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::linalg::solve_integer_system;
use super::tower::TowerId;
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// An element of a tower field, stored as an integer coefficient vector over
/// the tower's monomial basis together with one positive common denominator.
///
/// The representation is canonical: `den > 0`, `gcd(den, num_0, ..., num_{D-1}) = 1`
/// and zero is stored with `den = 1`. Structural equality is therefore field
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    tower: TowerId,
    num: Vec<BigInt>,
    den: BigInt,
}

impl FieldElement {
    pub fn zero(tower: TowerId) -> Self {
        FieldElement { tower, num: vec![BigInt::zero(); tower.dim()], den: BigInt::one() }
    }

    pub fn one(tower: TowerId) -> Self {
        Self::from_int(tower, 1)
    }

    pub fn from_int(tower: TowerId, n: i64) -> Self {
        Self::from_bigint(tower, BigInt::from(n))
    }

    pub fn from_bigint(tower: TowerId, n: BigInt) -> Self {
        let mut e = Self::zero(tower);
        e.num[0] = n;
        e
    }

    pub fn from_rational(tower: TowerId, q: &Rational) -> Self {
        let mut e = Self::zero(tower);
        e.num[0] = q.numer().clone();
        e.den = q.denom().clone();
        e.normalize();
        e
    }

    pub fn from_ratio(tower: TowerId, n: i64, d: i64) -> Self {
        Self::from_rational(tower, &Rational::new(n.into(), d.into()))
    }

    /// The basis monomial with the given index.
    pub fn basis(tower: TowerId, index: usize) -> Self {
        let mut e = Self::zero(tower);
        e.num[index] = BigInt::one();
        e
    }

    /// The `k`-th generator of the tower (`alpha`, `beta`, `eps`, `mu`, ...).
    pub fn generator(tower: TowerId, k: usize) -> Self {
        let spec = tower.spec();
        let mut exps = vec![0; spec.generators().len()];
        exps[k] = 1;
        Self::basis(tower, spec.index_of(&exps))
    }

    /// Builds an element from rational coefficients over the monomial basis.
    pub fn from_coeffs(tower: TowerId, coeffs: &[Rational]) -> Result<Self> {
        if coeffs.len() != tower.dim() {
            return Err(Error::Malformed(format!(
                "tower {tower} has dimension {}, got {} coefficients",
                tower.dim(),
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut e = FieldElement { tower, num, den };
        e.normalize();
        Ok(e)
    }

    /// Builds `num / den` from raw integer parts, normalizing.
    pub(crate) fn from_parts(tower: TowerId, num: Vec<BigInt>, den: BigInt) -> Self {
        debug_assert_eq!(num.len(), tower.dim());
        assert!(!den.is_zero(), "zero denominator");
        let mut e = FieldElement { tower, num, den };
        e.normalize();
        e
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for n in &mut self.num {
                *n = -&*n;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if g.is_one() {
                return;
            }
            if !n.is_zero() {
                g = g.gcd(n);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for n in &mut self.num {
                *n /= &g;
            }
        }
    }

    pub fn tower(&self) -> TowerId {
        self.tower
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn coeff(&self, i: usize) -> Rational {
        Rational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.num.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Returns the value if the element lies in the base field `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.num[1..].iter().all(Zero::is_zero).then(|| self.coeff(0))
    }

    fn check_tower(&self, other: &Self) -> Result<()> {
        if self.tower == other.tower {
            Ok(())
        } else {
            Err(Error::TowerMismatch(self.tower, other.tower))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_tower(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_tower(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_tower(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self, negate: bool) -> Self {
        let combine = |a: &BigInt, b: &BigInt| if negate { a - b } else { a + b };
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| combine(a, b)).collect();
            return Self::from_parts(self.tower, num, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let fa = &other.den / &g;
        let fb = &self.den / &g;
        let num = self.num.iter().zip(&other.num).map(|(a, b)| combine(&(a * &fa), &(b * &fb))).collect();
        Self::from_parts(self.tower, num, &self.den * &fa)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let spec = self.tower.spec();
        let mut raw = vec![BigInt::zero(); spec.dim()];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                for &(k, c) in spec.product(i, j) {
                    match c {
                        1 => raw[k] += &p,
                        -1 => raw[k] -= &p,
                        _ => raw[k] += &p * c,
                    }
                }
            }
        }
        Self::from_parts(self.tower, raw, &self.den * &other.den)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let num = self.num.iter().map(|n| n * k).collect();
        Self::from_parts(self.tower, num, self.den.clone())
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        let num = self.num.iter().map(|n| n * q.numer()).collect();
        Self::from_parts(self.tower, num, &self.den * q.denom())
    }

    pub fn square(&self) -> Self {
        self.mul_unchecked(self)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.tower);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// The matrix of multiplication by `self` on the monomial basis, scaled
    /// by the denominator: column `j` holds the numerators of `self * basis_j`.
    fn multiplication_matrix(&self) -> Vec<Vec<BigInt>> {
        let spec = self.tower.spec();
        let d = spec.dim();
        let mut m = vec![vec![BigInt::zero(); d]; d];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..d {
                for &(k, c) in spec.product(i, j) {
                    m[k][j] += a * c;
                }
            }
        }
        m
    }

    /// Multiplicative inverse, obtained by solving the linear system of
    /// multiplication by `self` against the unit vector.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.tower.dim();
        let mut rhs = vec![BigInt::zero(); d];
        rhs[0] = self.den.clone();
        let (num, den) = solve_integer_system(self.multiplication_matrix(), rhs)
            .expect("multiplication by a nonzero field element is invertible");
        Ok(Self::from_parts(self.tower, num, den))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_tower(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    /// Lexicographic comparison of coefficient vectors as rationals. Used
    /// only for deterministic ordering, not as a field order.
    pub fn cmp_coeffs(&self, other: &Self) -> Ordering {
        self.tower.cmp(&other.tower).then_with(|| {
            for (a, b) in self.num.iter().zip(&other.num) {
                let ord = (a * &other.den).cmp(&(b * &self.den));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }

    /// Human-readable basis-coefficient form used in CSV output: `c0;c1;...`.
    pub fn to_coeff_string(&self) -> String {
        self.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_coeffs(other)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        *self = &*self - rhs;
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { tower: self.tower, num: self.num.iter().map(|n| -n).collect(), den: self.den.clone() }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let spec = self.tower.spec();
        let mut first = true;
        for (i, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let monomial: Vec<String> = spec
                .exponents(i)
                .iter()
                .zip(spec.generators())
                .filter(|(e, _)| **e > 0)
                .map(|(e, g)| if *e == 1 { g.name.to_string() } else { format!("{}^{e}", g.name) })
                .collect();
            let (neg, abs) = (c.is_negative(), c.abs());
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            if monomial.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&monomial.join("*"))?;
            } else {
                write!(f, "{abs}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.tower, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const AB: TowerId = TowerId::AlphaBeta;

    fn alpha() -> FieldElement {
        FieldElement::generator(AB, 0)
    }

    fn beta() -> FieldElement {
        FieldElement::generator(AB, 1)
    }

    #[test]
    fn beta_relation() {
        let b3 = beta().pow(3);
        let expected = -(b3.clone() + FieldElement::one(AB));
        assert_eq!(&b3 * &b3, expected);
        assert!(beta().pow(9).is_one());
    }

    #[test]
    fn alpha_cubed_is_three() {
        let a = alpha();
        let prod = &a * &a.square();
        assert_eq!(prod.as_rational(), Some(Rational::from_integer(3.into())));
    }

    #[test]
    fn inverse_of_beta_and_alpha() {
        let b = beta();
        assert_eq!(b.inv().unwrap(), -(b.pow(5) + b.pow(2)));
        let a = alpha();
        assert_eq!(a.inv().unwrap(), a.square().scale_rational(&Rational::new(1.into(), 3.into())));
        assert!(FieldElement::one(AB).inv().unwrap().is_one());
        assert_eq!(FieldElement::zero(AB).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn tower_mismatch_is_rejected() {
        let e = FieldElement::generator(TowerId::EpsMu, 0);
        assert_eq!(e.try_mul(&beta()), Err(Error::TowerMismatch(TowerId::EpsMu, AB)));
    }

    #[test]
    fn canonical_denominators() {
        let half = FieldElement::from_ratio(AB, 2, 4);
        assert_eq!(half.denominator(), &BigInt::from(2));
        let x = &half + &half;
        assert!(x.is_one());
        assert_eq!(x.denominator(), &BigInt::one());
        let neg = FieldElement::from_ratio(AB, 3, -6);
        assert_eq!(neg.coeff(0), Rational::new((-1).into(), 2.into()));
    }

    #[test]
    fn display() {
        let x = alpha().square() * beta().scale_int(3) - FieldElement::from_ratio(AB, 1, 2);
        assert_eq!(x.to_string(), "-1/2 + 3*α^2*β");
        assert_eq!(FieldElement::zero(AB).to_string(), "0");
    }
}
