use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::conics::ConicCatalog;
use crate::catalogs::{PointCatalog, PointKind};
use crate::error::{Error, Result};
use crate::field::modp;
use crate::poly::HomForm;
use crate::projective::{residual_along, Conic, ConicParametrization, ProjPoint};

/// Fourth intersection points of the conics based at one catalog point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIntersections {
    pub base: usize,
    /// Residual points in canonical order with the number of the base
    /// point's conics through each.
    pub points: Vec<(ProjPoint, usize)>,
}

impl LocalIntersections {
    pub fn strata(&self) -> BTreeMap<usize, usize> {
        strata(self.points.iter().map(|(_, k)| *k))
    }
}

fn strata(counts: impl Iterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut s = BTreeMap::new();
    for k in counts {
        *s.entry(k).or_default() += 1;
    }
    s
}

/// Parametrizations of every conic from each of its two base points.
pub struct ConicArrangement<'a> {
    catalog: &'a PointCatalog,
    conics: &'a ConicCatalog,
    params: Vec<[ConicParametrization; 2]>,
}

impl<'a> ConicArrangement<'a> {
    pub fn new(catalog: &'a PointCatalog, conics: &'a ConicCatalog) -> Result<Self> {
        if catalog.kind() != conics.kind || catalog.len() != conics.point_count {
            return Err(Error::contract("conic catalog was built from a different point catalog"));
        }
        let params = conics
            .conics
            .par_iter()
            .map(|c| {
                Ok([
                    ConicParametrization::new(&c.conic, &c.base_points[0])?,
                    ConicParametrization::new(&c.conic, &c.base_points[1])?,
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ConicArrangement { catalog, conics, params })
    }

    fn param_at(&self, conic: usize, point: usize) -> &ConicParametrization {
        let (a, _) = self.conics.pairs[conic];
        &self.params[conic][usize::from(a != point)]
    }

    /// Residual points of every pair of conics based at catalog point `i`.
    pub fn local_intersections(&self, i: usize) -> Result<LocalIntersections> {
        let through = self.conics.conics_through(i);
        let f = HomForm::fermat(self.catalog.tower());
        let mut residuals: Vec<ProjPoint> = Vec::new();
        for (s, &k1) in through.iter().enumerate() {
            for &k2 in &through[s + 1..] {
                let r = residual_along(self.param_at(k1, i), &self.conics.conics[k2].conic)?;
                if r.lies_on(&f) {
                    return Err(Error::TheoremViolation(format!("residual {r} of two conics lies on the cubic")));
                }
                residuals.push(r);
            }
        }
        residuals.sort();
        residuals.dedup();
        let points = residuals
            .into_iter()
            .map(|r| {
                let k = through.iter().filter(|&&c| self.conics.conics[c].conic.contains(&r)).count();
                (r, k)
            })
            .collect();
        Ok(LocalIntersections { base: i, points })
    }

    pub fn all_local_intersections(&self) -> Result<Vec<LocalIntersections>> {
        (0..self.catalog.len()).into_par_iter().map(|i| self.local_intersections(i)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusPoint {
    pub point: ProjPoint,
    /// Number of conics of the whole catalog through the point.
    pub count: usize,
    /// Their indices in the conic catalog.
    pub conics: Vec<usize>,
    /// The largest number of conics through the point that share a base point.
    pub local_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowCensus {
    pub kind: PointKind,
    pub points: Vec<CensusPoint>,
    pub strata: BTreeMap<usize, usize>,
}

impl ShadowCensus {
    pub fn total(&self) -> usize {
        self.points.len()
    }

    /// Strata by [`CensusPoint::local_count`].
    pub fn local_strata(&self) -> BTreeMap<usize, usize> {
        strata(self.points.iter().map(|p| p.local_count))
    }

    /// Points through exactly `k` conics.
    pub fn with_count(&self, k: usize) -> impl Iterator<Item = &CensusPoint> {
        self.points.iter().filter(move |p| p.count == k)
    }

    /// How many of the points with count `k` lie on `x = 0`, `y = 0`, `z = 0`.
    pub fn coordinate_line_split(&self, k: usize) -> [usize; 3] {
        let mut split = [0; 3];
        for p in self.with_count(k) {
            for (i, c) in p.point.coords().iter().enumerate() {
                if c.is_zero() {
                    split[i] += 1;
                }
            }
        }
        split
    }

    pub fn index_of(&self, p: &ProjPoint) -> Option<usize> {
        self.points.binary_search_by(|c| c.point.cmp(p)).ok()
    }
}

/// Reduction of a conic and a point modulo the prime of [`modp`]; `None`
/// when some denominator vanishes there.
fn conic_image(c: &Conic) -> Option<[u64; 6]> {
    let v: Option<Vec<u64>> = c.coeffs().iter().map(modp::image).collect();
    v.map(|v| v.try_into().expect("six coefficients"))
}

fn monomial_image(p: &ProjPoint) -> Option<[u64; 6]> {
    let [x, y, z] = p.coords();
    let (x, y, z) = (modp::image(x)?, modp::image(y)?, modp::image(z)?);
    Some([modp::mul(x, x), modp::mul(y, y), modp::mul(z, z), modp::mul(x, y), modp::mul(x, z), modp::mul(y, z)])
}

/// Exact incidence, decided modulo a prime whenever the reduction is nonzero.
fn incident(c: &Conic, ci: Option<&[u64; 6]>, p: &ProjPoint, pi: Option<&[u64; 6]>) -> bool {
    if let (Some(ci), Some(pi)) = (ci, pi) {
        let value = ci.iter().zip(pi).fold(0, |acc, (&a, &b)| modp::add(acc, modp::mul(a, b)));
        if value != 0 {
            return false;
        }
    }
    c.contains(p)
}

/// Collects the residual points of all conic pairs sharing a base point and
/// counts, for each, the conics of the full catalog passing through it.
pub fn shadow_census(arrangement: &ConicArrangement<'_>) -> Result<ShadowCensus> {
    let locals = arrangement.all_local_intersections()?;
    shadow_census_from(arrangement, &locals)
}

pub fn shadow_census_from(arrangement: &ConicArrangement<'_>, locals: &[LocalIntersections]) -> Result<ShadowCensus> {
    let mut local_max: HashMap<&ProjPoint, usize> = HashMap::new();
    for local in locals {
        for (p, k) in &local.points {
            let e = local_max.entry(p).or_default();
            *e = (*e).max(*k);
        }
    }
    let mut points: Vec<(&ProjPoint, usize)> = local_max.into_iter().collect();
    points.sort();
    let conics = &arrangement.conics.conics;
    let conic_images: Vec<Option<[u64; 6]>> = conics.iter().map(|c| conic_image(&c.conic)).collect();
    let f = HomForm::fermat(arrangement.catalog.tower());
    let census_points = points
        .into_par_iter()
        .map(|(p, local_count)| {
            if p.lies_on(&f) {
                return Err(Error::Census(format!("{p} lies on the cubic")));
            }
            let pi = monomial_image(p);
            let through: Vec<usize> = conics
                .iter()
                .zip(&conic_images)
                .enumerate()
                .filter(|(_, (c, ci))| incident(&c.conic, ci.as_ref(), p, pi.as_ref()))
                .map(|(k, _)| k)
                .collect();
            Ok(CensusPoint { point: p.clone(), count: through.len(), conics: through, local_count })
        })
        .collect::<Result<Vec<_>>>()?;
    let strata = strata(census_points.iter().map(|p| p.count));
    Ok(ShadowCensus { kind: arrangement.catalog.kind(), points: census_points, strata })
}
