use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::univariate::UniPoly;
use crate::error::{Error, Result};
use crate::field::{FieldElement, TowerId};

pub type Exponents = [u32; 3];

/// A homogeneous polynomial in `x, y, z` (a plane curve equation).
///
/// Sparse: only nonzero coefficients are stored and every exponent triple
/// sums to the degree.
#[derive(Clone, PartialEq, Eq)]
pub struct HomForm {
    tower: TowerId,
    degree: u32,
    terms: BTreeMap<Exponents, FieldElement>,
}

impl HomForm {
    pub fn zero(tower: TowerId, degree: u32) -> Self {
        HomForm { tower, degree, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        tower: TowerId,
        degree: u32,
        terms: impl IntoIterator<Item = (Exponents, FieldElement)>,
    ) -> Result<Self> {
        let mut f = Self::zero(tower, degree);
        for (exps, c) in terms {
            if exps.iter().sum::<u32>() != degree {
                return Err(Error::Malformed(format!("monomial {exps:?} in a form of degree {degree}")));
            }
            if c.tower() != tower {
                return Err(Error::TowerMismatch(tower, c.tower()));
            }
            f.add_term(exps, c);
        }
        Ok(f)
    }

    /// Builds a form from small integer coefficients.
    pub fn from_int_terms(tower: TowerId, degree: u32, terms: &[(Exponents, i64)]) -> Self {
        Self::from_terms(tower, degree, terms.iter().map(|&(e, c)| (e, FieldElement::from_int(tower, c))))
            .expect("well-formed integer form")
    }

    pub fn variable(tower: TowerId, i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::from_int_terms(tower, 1, &[(e, 1)])
    }

    /// `a x + b y + c z`
    pub fn linear(coeffs: &[FieldElement; 3]) -> Self {
        let tower = coeffs[0].tower();
        Self::from_terms(tower, 1, [[1, 0, 0], [0, 1, 0], [0, 0, 1]].into_iter().zip(coeffs.iter().cloned()))
            .expect("linear form")
    }

    /// The Fermat cubic `x^3 + y^3 + z^3`.
    pub fn fermat(tower: TowerId) -> Self {
        Self::from_int_terms(tower, 3, &[([3, 0, 0], 1), ([0, 3, 0], 1), ([0, 0, 3], 1)])
    }

    /// The Hessian of the Fermat cubic, up to a constant: `xyz`.
    pub fn fermat_hessian(tower: TowerId) -> Self {
        Self::from_int_terms(tower, 3, &[([1, 1, 1], 1)])
    }

    /// The second Hessian of the Fermat cubic: `(x^3 - y^3)(y^3 - z^3)(x^3 - z^3)`.
    pub fn fermat_second_hessian(tower: TowerId) -> Self {
        let diff = |a: Exponents, b: Exponents| Self::from_int_terms(tower, 3, &[(a, 1), (b, -1)]);
        let (x3, y3, z3) = ([3, 0, 0], [0, 3, 0], [0, 0, 3]);
        &(&diff(x3, y3) * &diff(y3, z3)) * &diff(x3, z3)
    }

    fn add_term(&mut self, exps: Exponents, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn tower(&self) -> TowerId {
        self.tower
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &Exponents) -> FieldElement {
        self.terms.get(exps).cloned().unwrap_or_else(|| FieldElement::zero(self.tower))
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let mut f = Self::zero(self.tower, self.degree);
        for (e, v) in &self.terms {
            f.add_term(*e, v * c);
        }
        f
    }

    pub fn pow(&self, e: u32) -> Self {
        let one = Self::from_int_terms(self.tower, 0, &[([0, 0, 0], 1)]);
        (0..e).fold(one, |acc, _| &acc * self)
    }

    /// Exact evaluation at a coordinate triple.
    pub fn eval(&self, p: &[FieldElement; 3]) -> FieldElement {
        let d = self.degree as usize;
        let powers: Vec<Vec<FieldElement>> = p
            .iter()
            .map(|c| {
                let mut pw = Vec::with_capacity(d + 1);
                pw.push(FieldElement::one(self.tower));
                for k in 1..=d {
                    let next = &pw[k - 1] * c;
                    pw.push(next);
                }
                pw
            })
            .collect();
        self.terms.iter().fold(FieldElement::zero(self.tower), |acc, (e, c)| {
            let m = &(&powers[0][e[0] as usize] * &powers[1][e[1] as usize]) * &powers[2][e[2] as usize];
            &acc + &(c * &m)
        })
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut f = Self::zero(self.tower, self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut ne = *e;
                ne[i] -= 1;
                f.add_term(ne, c.scale_int(e[i] as i64));
            }
        }
        f
    }

    pub fn gradient(&self) -> [HomForm; 3] {
        [self.derivative(0), self.derivative(1), self.derivative(2)]
    }

    /// The form `g(x_0, x_1, x_2) = f(x_{perm[0]}, x_{perm[1]}, x_{perm[2]})`.
    pub fn permute_variables(&self, perm: [usize; 3]) -> Self {
        let mut f = Self::zero(self.tower, self.degree);
        for (e, c) in &self.terms {
            let mut ne = [0; 3];
            for (i, &p) in perm.iter().enumerate() {
                ne[p] += e[i];
            }
            f.add_term(ne, c.clone());
        }
        f
    }

    /// Substitutes a univariate polynomial for each variable.
    pub fn compose(&self, subs: &[UniPoly; 3]) -> UniPoly {
        let d = self.degree;
        let powers: Vec<Vec<UniPoly>> = subs
            .iter()
            .map(|s| {
                let mut pw = vec![UniPoly::constant(FieldElement::one(self.tower))];
                for k in 1..=d as usize {
                    let next = &pw[k - 1] * s;
                    pw.push(next);
                }
                pw
            })
            .collect();
        self.terms.iter().fold(UniPoly::zero(self.tower), |acc, (e, c)| {
            let m = &(&powers[0][e[0] as usize] * &powers[1][e[1] as usize]) * &powers[2][e[2] as usize];
            &acc + &m.scale(c)
        })
    }

    /// Dehomogenizes at coordinate `chart` and translates `p` to the origin:
    /// the result is `f` evaluated at `p + (u, v)` inserted into the two
    /// remaining coordinates (in their original order), with `p[chart] = 1`.
    pub fn shifted_chart(&self, chart: usize, p: &[FieldElement; 3]) -> Result<AffinePoly> {
        if !p[chart].is_one() {
            return Err(Error::contract("chart coordinate must be normalized to 1"));
        }
        let others: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
        let shifted = |i: usize, var: Exponents2| {
            AffinePoly::from_terms(self.tower, [([0, 0], p[i].clone()), (var, FieldElement::one(self.tower))])
        };
        let u = shifted(others[0], [1, 0]);
        let v = shifted(others[1], [0, 1]);
        let mut out = AffinePoly::zero(self.tower);
        for (e, c) in &self.terms {
            let term = u.pow(e[others[0]]).mul(&v.pow(e[others[1]])).scale(c);
            out = out.add(&term);
        }
        Ok(out)
    }
}

impl Add for &HomForm {
    type Output = HomForm;
    fn add(self, rhs: &HomForm) -> HomForm {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        let mut f = self.clone();
        for (e, c) in &rhs.terms {
            f.add_term(*e, c.clone());
        }
        f
    }
}

impl Sub for &HomForm {
    type Output = HomForm;
    fn sub(self, rhs: &HomForm) -> HomForm {
        self + &(-rhs)
    }
}

impl Neg for &HomForm {
    type Output = HomForm;
    fn neg(self) -> HomForm {
        HomForm { tower: self.tower, degree: self.degree, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &HomForm {
    type Output = HomForm;
    fn mul(self, rhs: &HomForm) -> HomForm {
        let mut f = HomForm::zero(self.tower, self.degree + rhs.degree);
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                f.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], a * b);
            }
        }
        f
    }
}

impl fmt::Debug for HomForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> =
            self.terms.iter().map(|(e, c)| format!("({c})*x^{}*y^{}*z^{}", e[0], e[1], e[2])).collect();
        f.write_str(&terms.join(" + "))
    }
}

pub type Exponents2 = [u32; 2];

/// A polynomial in two affine variables `u, v` (not necessarily homogeneous).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffinePoly {
    tower: TowerId,
    terms: BTreeMap<Exponents2, FieldElement>,
}

impl AffinePoly {
    pub fn zero(tower: TowerId) -> Self {
        AffinePoly { tower, terms: BTreeMap::new() }
    }

    pub fn from_terms(tower: TowerId, terms: impl IntoIterator<Item = (Exponents2, FieldElement)>) -> Self {
        let mut p = Self::zero(tower);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents2, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(|| FieldElement::zero(c.tower()));
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coeff(&self, e: Exponents2) -> FieldElement {
        self.terms.get(&e).cloned().unwrap_or_else(|| FieldElement::zero(self.tower))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(*e, c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-FieldElement::one(self.tower)))
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::from_terms(self.tower, self.terms.iter().map(|(e, v)| (*e, v * c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero(self.tower);
        for (ea, a) in &self.terms {
            for (eb, b) in &other.terms {
                p.add_term([ea[0] + eb[0], ea[1] + eb[1]], a * b);
            }
        }
        p
    }

    /// Multiplies by the monomial `u^e[0] v^e[1]`.
    pub fn shift(&self, e: Exponents2) -> Self {
        Self::from_terms(self.tower, self.terms.iter().map(|(k, c)| ([k[0] + e[0], k[1] + e[1]], c.clone())))
    }

    pub fn pow(&self, e: u32) -> Self {
        let one = Self::from_terms(self.tower, [([0, 0], FieldElement::one(self.tower))]);
        (0..e).fold(one, |acc, _| acc.mul(self))
    }

    /// Exchanges the roles of `u` and `v`.
    pub fn swap_variables(&self) -> Self {
        Self::from_terms(self.tower, self.terms.iter().map(|(e, c)| ([e[1], e[0]], c.clone())))
    }
}
