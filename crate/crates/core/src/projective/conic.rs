use std::fmt;

use super::point::{cross, dot, is_null, normalize_vector, Line, ProjPoint};
use crate::error::{Error, Result};
use crate::field::{FieldElement, TowerId};
use crate::poly::{HomForm, UniPoly};

/// Exponents of the conic monomials in coefficient order `(a, b, c, d, e, f)`
/// of `a x^2 + b y^2 + c z^2 + d xy + e xz + f yz`.
pub const CONIC_MONOMIALS: [[u32; 3]; 6] = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0], [1, 0, 1], [0, 1, 1]];

/// A plane conic, normalized so its first nonzero coefficient is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Conic {
    coeffs: [FieldElement; 6],
}

impl Conic {
    pub fn new(coeffs: [FieldElement; 6]) -> Result<Self> {
        Ok(Conic { coeffs: normalize_vector(coeffs)? })
    }

    pub fn from_ints(tower: TowerId, c: [i64; 6]) -> Result<Self> {
        Self::new(c.map(|n| FieldElement::from_int(tower, n)))
    }

    pub fn coeffs(&self) -> &[FieldElement; 6] {
        &self.coeffs
    }

    pub fn tower(&self) -> TowerId {
        self.coeffs[0].tower()
    }

    pub fn to_form(&self) -> HomForm {
        HomForm::from_terms(self.tower(), 2, CONIC_MONOMIALS.into_iter().zip(self.coeffs.iter().cloned()))
            .expect("conic monomials are quadratic")
    }

    pub fn eval(&self, p: &[FieldElement; 3]) -> FieldElement {
        let monomials = conic_monomials(p);
        self.coeffs.iter().zip(&monomials).fold(FieldElement::zero(self.tower()), |acc, (c, m)| &acc + &(c * m))
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p.coords()).is_zero()
    }

    /// Gradient at `p`: `(2a x + d y + e z, d x + 2b y + f z, e x + f y + 2c z)`.
    pub fn gradient(&self, p: &[FieldElement; 3]) -> [FieldElement; 3] {
        let [a, b, c, d, e, f] = &self.coeffs;
        let [x, y, z] = p;
        [
            &(&(&a.scale_int(2) * x) + &(d * y)) + &(e * z),
            &(&(d * x) + &(&b.scale_int(2) * y)) + &(f * z),
            &(&(e * x) + &(f * y)) + &(&c.scale_int(2) * z),
        ]
    }

    /// The symmetric bilinear form with `polar(p, p) = 2 C(p)`.
    pub fn polar(&self, p: &[FieldElement; 3], r: &[FieldElement; 3]) -> FieldElement {
        dot(&self.gradient(p), r)
    }

    /// Determinant of the doubled symmetric matrix `[[2a, d, e], [d, 2b, f], [e, f, 2c]]`.
    pub fn determinant(&self) -> FieldElement {
        let [a, b, c, d, e, f] = &self.coeffs;
        let (a2, b2, c2) = (a.scale_int(2), b.scale_int(2), c.scale_int(2));
        let t1 = &a2 * &(&(&b2 * &c2) - &(f * f));
        let t2 = d * &(&(d * &c2) - &(f * e));
        let t3 = e * &(&(d * f) - &(&b2 * e));
        &(&t1 - &t2) + &t3
    }

    pub fn is_irreducible(&self) -> bool {
        !self.determinant().is_zero()
    }

    pub fn tangent_at(&self, p: &ProjPoint) -> Result<Line> {
        if !self.contains(p) {
            return Err(Error::contract("point is not on the conic"));
        }
        let [u, v, w] = self.gradient(p.coords());
        Line::new(u, v, w).map_err(|_| Error::ReducibleConic)
    }

    /// The conic with coordinates permuted like [`ProjPoint::permute`]: it
    /// contains `p.permute(perm)` whenever `self` contains `p`.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        let form = self.to_form();
        let mut inverse = [0; 3];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        let g = form.permute_variables(inverse);
        Self::new(CONIC_MONOMIALS.map(|m| g.coeff(&m))).expect("nonzero conic")
    }
}

/// The six conic monomials evaluated at `p`, in coefficient order.
pub fn conic_monomials(p: &[FieldElement; 3]) -> [FieldElement; 6] {
    let [x, y, z] = p;
    [x * x, y * y, z * z, x * y, x * z, y * z]
}

impl fmt::Debug for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x^2", "y^2", "z^2", "xy", "xz", "yz"];
        let terms: Vec<String> =
            self.coeffs.iter().zip(names).filter(|(c, _)| !c.is_zero()).map(|(c, n)| format!("({c}){n}")).collect();
        f.write_str(&terms.join(" + "))
    }
}

/// A degree-2 parametrization `t -> X(t)` of an irreducible conic, sending
/// `t = 0` to a chosen base point.
///
/// Built by sweeping the lines through the base point `P` over the pencil
/// spanned by a point `Q1` on the tangent at `P` and a coordinate point `Q2`
/// off that tangent: `X(t) = polar(P, R) R - C(R) P` with `R = Q1 + t Q2`.
#[derive(Clone, Debug)]
pub struct ConicParametrization {
    conic: Conic,
    base: ProjPoint,
    components: [UniPoly; 3],
    monomials: [UniPoly; 6],
}

impl ConicParametrization {
    pub fn new(conic: &Conic, base: &ProjPoint) -> Result<Self> {
        if conic.tower() != base.tower() {
            return Err(Error::TowerMismatch(conic.tower(), base.tower()));
        }
        if !conic.is_irreducible() {
            return Err(Error::ReducibleConic);
        }
        if !conic.contains(base) {
            return Err(Error::contract("base point is not on the conic"));
        }
        let tower = conic.tower();
        let p = base.coords();
        let tangent = conic.gradient(p);
        let unit = |k: usize| {
            let mut e = [FieldElement::zero(tower), FieldElement::zero(tower), FieldElement::zero(tower)];
            e[k] = FieldElement::one(tower);
            e
        };
        let k2 = (0..3).find(|&k| !tangent[k].is_zero()).expect("smooth conic has a nonzero gradient");
        let q2 = unit(k2);
        let q1 = (0..3)
            .map(|k| cross(&tangent, &unit(k)))
            .find(|v| !is_null(v) && !base.same_as(v))
            .expect("tangent line has a second point");
        let b = tangent[k2].clone();
        let c_q1 = conic.eval(&q1);
        let c_q2 = conic.eval(&q2);
        let polar12 = conic.polar(&q1, &q2);
        let components = [0, 1, 2].map(|i| {
            UniPoly::from_coeffs(
                tower,
                vec![-(&c_q1 * &p[i]), &(&b * &q1[i]) - &(&polar12 * &p[i]), &(&b * &q2[i]) - &(&c_q2 * &p[i])],
            )
        });
        let [x, y, z] = &components;
        let monomials = [x * x, y * y, z * z, x * y, x * z, y * z];
        Ok(ConicParametrization { conic: conic.clone(), base: base.clone(), components, monomials })
    }

    pub fn conic(&self) -> &Conic {
        &self.conic
    }

    pub fn base(&self) -> &ProjPoint {
        &self.base
    }

    pub fn components(&self) -> &[UniPoly; 3] {
        &self.components
    }

    /// The parameter value of the base point.
    pub fn base_parameter(&self) -> FieldElement {
        FieldElement::zero(self.conic.tower())
    }

    pub fn point_at(&self, t: &FieldElement) -> ProjPoint {
        ProjPoint::from_coords(self.components.clone().map(|c| c.eval(t)))
            .expect("a parametrization of a smooth conic has no base points")
    }

    /// The point reached as `t -> infinity`.
    pub fn point_at_infinity(&self) -> ProjPoint {
        ProjPoint::from_coords(self.components.clone().map(|c| c.coeff(2)))
            .expect("a parametrization of a smooth conic has no base points")
    }

    /// `f(X(t))`, a polynomial of degree at most `2 deg f`.
    pub fn restrict(&self, f: &HomForm) -> UniPoly {
        f.compose(&self.components)
    }

    /// `D(X(t))` for a conic `D`, using the cached quadratic monomials.
    pub fn restrict_conic(&self, d: &Conic) -> UniPoly {
        d.coeffs().iter().zip(&self.monomials).fold(UniPoly::zero(d.tower()), |acc, (c, m)| &acc + &m.scale(c))
    }
}
