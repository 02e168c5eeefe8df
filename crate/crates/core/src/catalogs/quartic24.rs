use std::collections::BTreeMap;

use super::build::{PointCatalog, PointKind};
use crate::error::{Error, Result};
use crate::field::{FieldElement, TowerId};
use crate::poly::HomForm;

/// The degree-24 binary form cutting out the type-9 points together with `F`:
/// `x^24 + 4x^21y^3 - 17x^18y^6 - 65x^15y^9 - 89x^12y^12 - 65x^9y^15 - 17x^6y^18 + 4x^3y^21 + y^24`.
pub fn type9_form(tower: TowerId) -> HomForm {
    binary(tower, 24, &[1, 4, -17, -65, -89, -65, -17, 4, 1])
}

/// The three displayed factors of [`type9_form`], of degrees 9, 6 and 9.
pub fn type9_form_factors(tower: TowerId) -> [HomForm; 3] {
    [binary(tower, 9, &[1, -3, -6, -1]), binary(tower, 6, &[1, 1, 1]), binary(tower, 9, &[1, 6, 3, -1])]
}

/// `sum c_k x^{d - 3k} y^{3k}`
fn binary(tower: TowerId, degree: u32, coeffs: &[i64]) -> HomForm {
    let terms: Vec<([u32; 3], i64)> =
        coeffs.iter().enumerate().map(|(k, &c)| ([degree - 3 * k as u32, 3 * k as u32, 0], c)).collect();
    HomForm::from_int_terms(tower, degree, &terms)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    /// Points on which `Q(x,y)`, `Q(x,z)`, `Q(y,z)` vanish, respectively.
    pub vanishing: [usize; 3],
    pub factor_product_matches: bool,
    /// Multiplicity of each distinct ratio `x/y` among the points.
    pub ratio_multiplicities: Vec<usize>,
    pub splits_into_ratio_factors: bool,
}

impl FormReport {
    pub fn passed(&self) -> bool {
        self.vanishing == [72; 3]
            && self.factor_product_matches
            && self.ratio_multiplicities.len() == 24
            && self.ratio_multiplicities.iter().all(|&m| m == 3)
            && self.splits_into_ratio_factors
    }
}

/// Checks the degree-24 form against the type-9 catalog: vanishing in all
/// three coordinate pairs, the factorization, and the splitting into the
/// 24 linear forms `x - r y` over the ratios `r = x/y` of the points.
pub fn verify_type9_form(catalog: &PointCatalog) -> Result<FormReport> {
    if catalog.kind() != PointKind::Type9 {
        return Err(Error::contract("the degree-24 form belongs to the type-9 catalog"));
    }
    let tower = catalog.tower();
    let q = type9_form(tower);
    let variants = [q.clone(), q.permute_variables([0, 2, 1]), q.permute_variables([1, 2, 0])];
    let vanishing = variants.map(|g| catalog.points().iter().filter(|p| p.lies_on(&g)).count());

    let [f1, f2, f3] = type9_form_factors(tower);
    let factor_product_matches = &(&f1 * &f2) * &f3 == q;

    let mut ratios: BTreeMap<FieldElement, usize> = BTreeMap::new();
    for p in catalog.points() {
        let [x, y, _] = p.coords();
        *ratios.entry(x.try_div(y)?).or_default() += 1;
    }
    let one = FieldElement::one(tower);
    let product = ratios.keys().fold(HomForm::from_int_terms(tower, 0, &[([0, 0, 0], 1)]), |acc, r| {
        let factor = HomForm::linear(&[one.clone(), -r, FieldElement::zero(tower)]);
        &acc * &factor
    });
    // Both sides are monic in x^24, so proportionality is equality.
    let splits_into_ratio_factors = product == q;

    let report = FormReport {
        vanishing,
        factor_product_matches,
        ratio_multiplicities: ratios.into_values().collect(),
        splits_into_ratio_factors,
    };
    if !report.passed() {
        return Err(Error::Verification(format!("degree-24 form check failed: {report:?}")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_over_q() {
        let [a, b, c] = type9_form_factors(TowerId::Q);
        assert_eq!(&(&a * &b) * &c, type9_form(TowerId::Q));
    }
}
