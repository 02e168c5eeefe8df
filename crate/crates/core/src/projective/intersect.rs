use super::conic::{Conic, ConicParametrization};
use super::point::{cross, is_null, Line, ProjPoint};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{HomForm, UniPoly};

pub fn hom_eval(f: &HomForm, p: &ProjPoint) -> FieldElement {
    f.eval(p.coords())
}

fn require_on_fermat(p: &ProjPoint) -> Result<()> {
    if p.lies_on(&HomForm::fermat(p.tower())) {
        Ok(())
    } else {
        Err(Error::contract(format!("{p} is not on the Fermat cubic")))
    }
}

/// Tangent to the Fermat cubic at `p`: `a^2 x + b^2 y + c^2 z = 0`, which is
/// the gradient line `(3a^2, 3b^2, 3c^2)` up to scaling.
pub fn tangent_line(p: &ProjPoint) -> Result<Line> {
    require_on_fermat(p)?;
    let [a, b, c] = p.coords();
    Line::new(a.square(), b.square(), c.square())
}

/// Parametrizes `l` as `p + t q` with a second point `q` off the curve `f`,
/// so that `f` restricted to the line has full degree.
fn line_through_point(f: &HomForm, l: &Line, p: &ProjPoint) -> Result<[UniPoly; 3]> {
    let tower = p.tower();
    let units = [0, 1, 2].map(|k| {
        let mut e = [FieldElement::zero(tower), FieldElement::zero(tower), FieldElement::zero(tower)];
        e[k] = FieldElement::one(tower);
        cross(l.coeffs(), &e)
    });
    let points: Vec<&[FieldElement; 3]> = units.iter().filter(|v| !is_null(v)).collect();
    let candidates = points.iter().map(|v| (*v).clone()).chain((1..).flat_map(|j| {
        let (a, b) = (points[0], points[points.len() - 1]);
        let j = FieldElement::from_int(tower, j);
        [0, 1].map(|s| {
            let (u, w) = if s == 0 { (a, b) } else { (b, a) };
            [0, 1, 2].map(|i| &u[i] + &(&j * &w[i]))
        })
    }));
    // A line meets the curve in at most deg f points unless it is a component.
    let q = candidates
        .take(3 * (f.degree() as usize + 2))
        .find(|q| !is_null(q) && !p.same_as(q) && !f.eval(q).is_zero())
        .ok_or_else(|| Error::contract("line is contained in the curve"))?;
    Ok([0, 1, 2].map(|i| UniPoly::linear(p.coords()[i].clone(), q[i].clone())))
}

/// The residual intersection of the line `l` with the curve `f` after
/// removing contact of order `m` at `p`. Returns `None` when the contact at
/// `p` is total.
pub fn line_residual_point_on(f: &HomForm, l: &Line, p: &ProjPoint, m: usize) -> Result<Option<ProjPoint>> {
    if !l.contains(p) || !p.lies_on(f) {
        return Err(Error::contract("point must lie on both the line and the curve"));
    }
    let param = line_through_point(f, l, p)?;
    let restricted = f.compose(&param);
    let zero = FieldElement::zero(p.tower());
    let rest = restricted.deflate(&zero, m)?;
    match rest.degree() {
        Some(0) => Ok(None),
        Some(1) => {
            let t = (-rest.coeff(0)).try_div(&rest.coeff(1))?;
            Ok(Some(ProjPoint::from_coords(param.map(|c| c.eval(&t)))?))
        }
        _ => Err(Error::contract(format!("{} residual intersections remain", rest.degree().unwrap_or(0)))),
    }
}

/// Residual point of the line `l` on the Fermat cubic, after contact `m` at `p`.
pub fn line_residual_point(l: &Line, p: &ProjPoint, m: usize) -> Result<Option<ProjPoint>> {
    line_residual_point_on(&HomForm::fermat(p.tower()), l, p, m)
}

pub fn conic_parametrize(c: &Conic, p: &ProjPoint) -> Result<ConicParametrization> {
    ConicParametrization::new(c, p)
}

/// Local intersection multiplicity of `f` with the smooth conic `c` at `p`,
/// computed as the order of vanishing of `f` along a parametrization of `c`.
pub fn intersection_multiplicity_on_conic(f: &HomForm, c: &Conic, p: &ProjPoint) -> Result<usize> {
    let param = conic_parametrize(c, p)?;
    multiplicity_along(&param, f)
}

fn multiplicity_along(param: &ConicParametrization, f: &HomForm) -> Result<usize> {
    let restricted = param.restrict(f);
    if restricted.is_zero() {
        return Err(Error::InfiniteMultiplicity);
    }
    restricted.root_multiplicity(&param.base_parameter())
}

/// The fourth intersection point of two conics meeting with contact at
/// least 3 at `p`.
pub fn conic_residual_point(c1: &Conic, c2: &Conic, p: &ProjPoint) -> Result<ProjPoint> {
    if c1 == c2 {
        return Err(Error::contract("the two conics coincide"));
    }
    let param = conic_parametrize(c1, p)?;
    residual_along(&param, c2)
}

pub(crate) fn residual_along(param: &ConicParametrization, c2: &Conic) -> Result<ProjPoint> {
    let g = param.restrict_conic(c2);
    if g.is_zero() {
        return Err(Error::contract("the two conics coincide"));
    }
    let m = g.root_multiplicity(&param.base_parameter())?;
    if m < 3 {
        return Err(Error::MultiplicityShortfall { needed: 3, found: m });
    }
    // Four intersections in total; a degree drop means the residual sits at t = infinity.
    match (g.degree(), m) {
        (Some(4), 4) | (Some(3), 4..) => Err(Error::TotalContact),
        (Some(4), 3) => {
            let t = (-g.coeff(3)).try_div(&g.coeff(4))?;
            Ok(param.point_at(&t))
        }
        (Some(3), 3) => Ok(param.point_at_infinity()),
        (d, _) => Err(Error::contract(format!("unexpected restricted degree {d:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::TowerId;

    const EM: TowerId = TowerId::EpsMu;

    fn mu() -> FieldElement {
        FieldElement::generator(EM, 1)
    }

    #[test]
    fn tangent_at_flex_has_no_residual() {
        let p = ProjPoint::from_ints(EM, [1, -1, 0]).unwrap();
        let l = tangent_line(&p).unwrap();
        assert_eq!(l, Line::new(FieldElement::one(EM), FieldElement::one(EM), FieldElement::zero(EM)).unwrap());
        assert_eq!(line_residual_point(&l, &p, 3).unwrap(), None);
        assert!(matches!(line_residual_point(&l, &p, 4), Err(Error::MultiplicityShortfall { needed: 4, found: 3 })));
    }

    #[test]
    fn tangent_at_sextactic_point() {
        let one = FieldElement::one(EM);
        let p = ProjPoint::new(one.clone(), one.clone(), -mu()).unwrap();
        let l = tangent_line(&p).unwrap();
        assert_eq!(l, Line::new(one.clone(), one.clone(), mu().square()).unwrap());
        let r = line_residual_point(&l, &p, 2).unwrap().unwrap();
        assert!(r.lies_on(&HomForm::fermat(EM)));
        assert_eq!(r.zero_coordinates(), 1, "residual {r} should be a flex");
    }

    #[test]
    fn point_off_curve_is_rejected() {
        let p = ProjPoint::from_ints(EM, [1, 1, 1]).unwrap();
        assert!(matches!(tangent_line(&p), Err(Error::ContractViolation(_))));
    }

    #[test]
    fn multiplicities_of_lines_with_conic() {
        let q = TowerId::Q;
        let c = Conic::from_ints(q, [1, 1, -1, 0, 0, 0]).unwrap();
        let p = ProjPoint::from_ints(q, [3, 4, 5]).unwrap();
        let tangent = c.tangent_at(&p).unwrap();
        assert_eq!(intersection_multiplicity_on_conic(&tangent.to_form(), &c, &p).unwrap(), 2);
        let other = ProjPoint::from_ints(q, [1, 0, 1]).unwrap();
        let chord = Line::through(&p, &other).unwrap();
        assert_eq!(intersection_multiplicity_on_conic(&chord.to_form(), &c, &p).unwrap(), 1);
        assert_eq!(intersection_multiplicity_on_conic(&c.to_form(), &c, &p), Err(Error::InfiniteMultiplicity));
    }

    #[test]
    fn conic_residual_guards() {
        let q = TowerId::Q;
        let c = Conic::from_ints(q, [1, 1, -1, 0, 0, 0]).unwrap();
        let p = ProjPoint::from_ints(q, [3, 4, 5]).unwrap();
        assert!(matches!(conic_residual_point(&c, &c, &p), Err(Error::ContractViolation(_))));
        // c + (4x - 3y) z crosses c transversally at [3:4:5].
        let d = Conic::from_ints(q, [1, 1, -1, 0, 4, -3]).unwrap();
        assert!(d.contains(&p));
        assert!(matches!(conic_residual_point(&c, &d, &p), Err(Error::MultiplicityShortfall { needed: 3, .. })));
    }

    #[test]
    fn residual_of_osculating_pair() {
        // y z - x^2 and y z - x^2 + k y^2 meet at [0:0:1] with contact 4 (total),
        // while y z - x^2 + x y meets with contact 3.
        let q = TowerId::Q;
        let c1 = Conic::from_ints(q, [-1, 0, 0, 0, 0, 1]).unwrap();
        let p = ProjPoint::from_ints(q, [0, 0, 1]).unwrap();
        let c4 = Conic::from_ints(q, [-1, 1, 0, 0, 0, 1]).unwrap();
        assert_eq!(conic_residual_point(&c1, &c4, &p), Err(Error::TotalContact));
        let c3 = Conic::from_ints(q, [-1, 0, 0, 1, 0, 1]).unwrap();
        let r = conic_residual_point(&c1, &c3, &p).unwrap();
        assert!(c1.contains(&r) && c3.contains(&r) && r != p);
        assert_eq!(r, conic_residual_point(&c3, &c1, &p).unwrap());
    }
}
