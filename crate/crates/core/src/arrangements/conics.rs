use rayon::prelude::*;

use crate::catalogs::{PointCatalog, PointKind};
use crate::elliptic::WeierstrassCurve;
use crate::error::{Error, Result};
use crate::field::{modp, ExactMatrix, FieldElement};
use crate::poly::{AffinePoly, HomForm};
use crate::projective::{intersection_multiplicity_on_conic, Conic, ProjPoint, CONIC_MONOMIALS};

/// An irreducible conic meeting the cubic with multiplicity 3 at each of two points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OsculatingConic {
    pub conic: Conic,
    pub base_points: [ProjPoint; 2],
}

/// Unordered pairs `(i, j)`, `i < j`, of catalog points whose images on the
/// Weierstrass model sum to a 3-torsion point.
pub fn admissible_pairs(catalog: &PointCatalog) -> Result<Vec<(usize, usize)>> {
    let e = WeierstrassCurve::fermat(catalog.tower());
    let images = catalog.weierstrass_images()?;
    let n = images.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Ok(pairs.into_par_iter().filter(|&(i, j)| e.scalar_mul(3, &e.add(&images[i], &images[j])).is_infinity()).collect())
}

/// Three linear conditions on conic coefficients `(a, ..., f)` expressing
/// contact of order at least 3 with the cubic at `p`.
///
/// Dehomogenize at the first nonzero coordinate of `p` and move `p` to the
/// origin, with affine variables `u, v` for the two remaining coordinates in
/// order (swapped if `F` has no linear `v` term). Writing `F_v` for the
/// coefficient of `v` in `F`, the conditions are
///
/// 1. `C(0, 0) = 0`,
/// 2. `[u] C1 = 0` where `C1 = C - ([v] C / F_v) F`,
/// 3. `[u^2] C3 = 0` where `C2 = C1 - ([v^2] C1 / F_v) v F` and
///    `C3 = C2 - ([uv] C2 / F_v) u F`.
///
/// Each step is linear in `C`, so the rows are obtained by running it on the
/// six monomial conics.
pub fn contact_conditions(p: &ProjPoint) -> Result<[[FieldElement; 6]; 3]> {
    let tower = p.tower();
    let coords = p.coords();
    let chart = coords.iter().position(|c| !c.is_zero()).expect("projective point");
    let mut f = HomForm::fermat(tower).shifted_chart(chart, coords)?;
    if !f.coeff([0, 0]).is_zero() {
        return Err(Error::contract(format!("{p} is not on the cubic")));
    }
    let mut basis = CONIC_MONOMIALS
        .iter()
        .map(|m| HomForm::from_int_terms(tower, 2, &[(*m, 1)]).shifted_chart(chart, coords))
        .collect::<Result<Vec<AffinePoly>>>()?;
    if f.coeff([0, 1]).is_zero() {
        f = f.swap_variables();
        basis = basis.iter().map(AffinePoly::swap_variables).collect();
    }
    let fv_inv = f.coeff([0, 1]).inv().map_err(|_| Error::contract(format!("cubic is singular at {p}")))?;
    let (uf, vf) = (f.shift([1, 0]), f.shift([0, 1]));
    let mut rows: [[FieldElement; 6]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| FieldElement::zero(tower)));
    for (k, c) in basis.iter().enumerate() {
        let c1 = c.sub(&f.scale(&(&c.coeff([0, 1]) * &fv_inv)));
        let c2 = c1.sub(&vf.scale(&(&c1.coeff([0, 2]) * &fv_inv)));
        let c3 = c2.sub(&uf.scale(&(&c2.coeff([1, 1]) * &fv_inv)));
        rows[0][k] = c.coeff([0, 0]);
        rows[1][k] = c1.coeff([1, 0]);
        rows[2][k] = c3.coeff([2, 0]);
    }
    Ok(rows)
}

/// The conic through `p1` and `p2` with contact 3 at both, if one exists.
pub fn find_conic(p1: &ProjPoint, p2: &ProjPoint) -> Result<Option<OsculatingConic>> {
    let rows = [contact_conditions(p1)?, contact_conditions(p2)?];
    conic_from_conditions(p1, p2, &rows[0], &rows[1])
}

fn conic_from_conditions(
    p1: &ProjPoint,
    p2: &ProjPoint,
    r1: &[[FieldElement; 6]; 3],
    r2: &[[FieldElement; 6]; 3],
) -> Result<Option<OsculatingConic>> {
    if p1 == p2 {
        return Err(Error::contract("base points must be distinct"));
    }
    let rows: Vec<Vec<FieldElement>> = r1.iter().chain(r2).map(|r| r.to_vec()).collect();
    let system = ExactMatrix::from_rows(p1.tower(), rows)?;
    let mut kernel = system.nullspace();
    match kernel.len() {
        0 => return Ok(None),
        1 => {}
        d => return Err(Error::UnexpectedDegeneracy(d)),
    }
    let v = kernel.pop().expect("one kernel vector");
    let conic = Conic::new(v.try_into().expect("six coefficients"))?;
    if !conic.is_irreducible() {
        return Err(Error::Verification(format!("conic through {p1} and {p2} is reducible")));
    }
    let f = HomForm::fermat(p1.tower());
    for p in [p1, p2] {
        let m = intersection_multiplicity_on_conic(&f, &conic, p)?;
        if m != 3 {
            return Err(Error::Verification(format!("conic meets the cubic at {p} with multiplicity {m}")));
        }
    }
    Ok(Some(OsculatingConic { conic, base_points: [p1.clone(), p2.clone()] }))
}

/// Whether the 6x6 system certainly has full rank, judged modulo a prime.
fn certainly_full_rank(r1: &[[FieldElement; 6]; 3], r2: &[[FieldElement; 6]; 3]) -> bool {
    let rows: Option<Vec<Vec<u64>>> =
        r1.iter().chain(r2).map(|r| r.iter().map(modp::image).collect::<Option<Vec<u64>>>()).collect();
    rows.is_some_and(|m| modp::rank(m) == 6)
}

/// All osculating conics through pairs of points of one catalog, ordered by
/// base pair `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicCatalog {
    pub kind: PointKind,
    pub conics: Vec<OsculatingConic>,
    /// Catalog indices of the base points of each conic.
    pub pairs: Vec<(usize, usize)>,
    /// Number of catalog points.
    pub point_count: usize,
}

impl ConicCatalog {
    pub fn len(&self) -> usize {
        self.conics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conics.is_empty()
    }

    /// Indices of the conics based at point `i`.
    pub fn conics_through(&self, i: usize) -> Vec<usize> {
        self.pairs.iter().enumerate().filter(|(_, &(a, b))| a == i || b == i).map(|(k, _)| k).collect()
    }

    /// Number of conics based at each catalog point.
    pub fn incidence(&self) -> Vec<usize> {
        let mut counts = vec![0; self.point_count];
        for &(a, b) in &self.pairs {
            counts[a] += 1;
            counts[b] += 1;
        }
        counts
    }
}

/// Runs [`find_conic`] over every pair of `catalog`. Pairs whose condition
/// matrix has full rank modulo a prime are skipped, since full rank there
/// implies full rank over the field.
pub fn conic_catalog(catalog: &PointCatalog) -> Result<ConicCatalog> {
    let points = catalog.points();
    let conditions = points.par_iter().map(contact_conditions).collect::<Result<Vec<_>>>()?;
    let n = points.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let found = pairs
        .into_par_iter()
        .map(|(i, j)| {
            if certainly_full_rank(&conditions[i], &conditions[j]) {
                return Ok(None);
            }
            Ok(conic_from_conditions(&points[i], &points[j], &conditions[i], &conditions[j])?.map(|c| ((i, j), c)))
        })
        .collect::<Result<Vec<_>>>()?;
    let (pairs, conics): (Vec<_>, Vec<_>) = found.into_iter().flatten().unzip();
    let mut keys: Vec<&Conic> = conics.iter().map(|c: &OsculatingConic| &c.conic).collect();
    keys.sort();
    if keys.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Census("two base pairs share a conic".into()));
    }
    Ok(ConicCatalog { kind: catalog.kind(), conics, pairs, point_count: n })
}
