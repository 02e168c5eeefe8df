use super::curve::{ECPoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::UniPoly;

pub const MAX_DIVISION_INDEX: i64 = 12;

/// The `n`-th division polynomial reduced to one variable.
///
/// For odd `n` the stored polynomial is `psi_n(x)` itself. For even `n`,
/// `psi_n = 2y * poly(x)` and only `poly` is stored, with `y^2` eliminated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionPoly {
    pub n: u32,
    pub poly: UniPoly,
    pub has_y_factor: bool,
}

impl DivisionPoly {
    /// Theoretical degree of the stored polynomial in `x`.
    pub fn expected_degree(n: u32) -> Option<usize> {
        match n {
            0 => None,
            n if n % 2 == 1 => Some(((n * n - 1) / 2) as usize),
            n => Some(((n * n - 4) / 2) as usize),
        }
    }

    /// Whether `psi_n` vanishes at the affine point `p`.
    pub fn vanishes_at(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => false,
            ECPoint::Affine { x, y } => (self.has_y_factor && y.is_zero()) || self.poly.eval(x).is_zero(),
        }
    }
}

/// Division polynomials `psi_0, ..., psi_n` of `curve`.
///
/// With `g_k` the stored part (`psi_k = g_k` for odd `k`, `psi_k = 2y g_k`
/// for even `k`) and `R = x^3 + A x + B`, the recursion becomes
///
/// ```text
/// g_{2k+1} = 16 R^2 g_{k+2} g_k^3 - g_{k-1} g_{k+1}^3      (k even)
/// g_{2k+1} = g_{k+2} g_k^3 - 16 R^2 g_{k-1} g_{k+1}^3      (k odd)
/// g_{2k}   = g_k (g_{k+2} g_{k-1}^2 - g_{k-2} g_{k+1}^2)
/// ```
pub fn division_polys(curve: &WeierstrassCurve, n: i64) -> Result<Vec<DivisionPoly>> {
    if !(0..=MAX_DIVISION_INDEX).contains(&n) {
        return Err(Error::IndexOutOfRange(n));
    }
    let tower = curve.tower();
    let c = |k: i64| FieldElement::from_int(tower, k);
    let (a, b) = (curve.a(), curve.b());
    let x = UniPoly::identity(tower);
    let poly = |coeffs: Vec<FieldElement>| UniPoly::from_coeffs(tower, coeffs);

    let mut g: Vec<UniPoly> = vec![
        UniPoly::zero(tower),
        UniPoly::constant(c(1)),
        UniPoly::constant(c(1)),
        // 3x^4 + 6Ax^2 + 12Bx - A^2
        poly(vec![-a.square(), b.scale_int(12), a.scale_int(6), c(0), c(3)]),
        // 2 (x^6 + 5Ax^4 + 20Bx^3 - 5A^2x^2 - 4ABx - 8B^2 - A^3)
        poly(vec![
            &(-&b.square().scale_int(8)) - &a.pow(3),
            (a * b).scale_int(-4),
            a.square().scale_int(-5),
            b.scale_int(20),
            a.scale_int(5),
            c(0),
            c(1),
        ])
        .scale(&c(2)),
    ];
    let r = &(&x.pow(3) + &x.scale(a)) + &UniPoly::constant(b.clone());
    let r2_16 = (&r * &r).scale(&c(16));
    for m in 5..=n.max(4) as usize {
        let k = m / 2;
        let next = if m % 2 == 1 {
            let lhs = &g[k + 2] * &g[k].pow(3);
            let rhs = &g[k - 1] * &g[k + 1].pow(3);
            if k % 2 == 0 {
                &(&r2_16 * &lhs) - &rhs
            } else {
                &lhs - &(&r2_16 * &rhs)
            }
        } else {
            let inner = &(&g[k + 2] * &g[k - 1].pow(2)) - &(&g[k - 2] * &g[k + 1].pow(2));
            &g[k] * &inner
        };
        g.push(next);
    }
    g.truncate(n as usize + 1);
    Ok(g.into_iter()
        .enumerate()
        .map(|(k, poly)| DivisionPoly { n: k as u32, poly, has_y_factor: k % 2 == 0 && k > 0 })
        .collect())
}

pub fn division_poly(curve: &WeierstrassCurve, n: i64) -> Result<DivisionPoly> {
    Ok(division_polys(curve, n)?.pop().expect("n + 1 polynomials"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::TowerId;

    #[test]
    fn psi3_for_fermat_model() {
        let e = WeierstrassCurve::fermat(TowerId::Q);
        let psi3 = division_poly(&e, 3).unwrap();
        let q = |n| FieldElement::from_int(TowerId::Q, n);
        assert_eq!(psi3.poly, UniPoly::from_coeffs(TowerId::Q, vec![q(0), q(-5184), q(0), q(0), q(3)]));
        assert!(psi3.poly.eval(&q(12)).is_zero());
    }

    #[test]
    fn degrees_match_theory() {
        let e = WeierstrassCurve::fermat(TowerId::Q);
        for d in division_polys(&e, 12).unwrap() {
            assert_eq!(d.poly.degree(), DivisionPoly::expected_degree(d.n), "psi_{}", d.n);
        }
        assert_eq!(division_poly(&e, 9).unwrap().poly.degree(), Some(40));
    }

    #[test]
    fn general_curve_psi4() {
        // y^2 = x^3 + 2x + 3: psi_4 / 2y = 2(x^6 + 10x^4 + 60x^3 - 20x^2 - 24x - 80)
        let q = |n| FieldElement::from_int(TowerId::Q, n);
        let e = WeierstrassCurve::new(q(2), q(3)).unwrap();
        let psi4 = division_poly(&e, 4).unwrap();
        let expected = UniPoly::from_coeffs(TowerId::Q, [-80, -24, -20, 60, 10, 0, 1].map(q).to_vec()).scale(&q(2));
        assert_eq!(psi4.poly, expected);
        assert!(psi4.has_y_factor);
    }

    #[test]
    fn index_bounds() {
        let e = WeierstrassCurve::fermat(TowerId::Q);
        assert_eq!(division_poly(&e, 13), Err(Error::IndexOutOfRange(13)));
        assert_eq!(division_poly(&e, -1), Err(Error::IndexOutOfRange(-1)));
        assert!(division_poly(&e, 0).unwrap().poly.is_zero());
        assert_eq!(division_poly(&e, 1).unwrap().poly.degree(), Some(0));
    }
}
