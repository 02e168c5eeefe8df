use std::collections::HashSet;
use std::fmt;

use super::fixtures::type9_seeds;
use crate::elliptic::{from_weierstrass, to_weierstrass, torsion_subgroup, ECPoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::field::{cube_root_of_unity, FieldElement, TowerId};
use crate::poly::HomForm;
use crate::projective::{ProjPoint, PERMUTATIONS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointKind {
    Flex,
    Sextactic,
    Type9,
}

impl PointKind {
    pub const ALL: [PointKind; 3] = [PointKind::Flex, PointKind::Sextactic, PointKind::Type9];

    pub fn as_str(self) -> &'static str {
        match self {
            PointKind::Flex => "flex",
            PointKind::Sextactic => "sextactic",
            PointKind::Type9 => "type9",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.as_str() == s)
    }

    /// Number of points of this kind on the Fermat cubic.
    pub fn expected_size(self) -> usize {
        match self {
            PointKind::Flex => 9,
            PointKind::Sextactic => 27,
            PointKind::Type9 => 72,
        }
    }

    /// The field the catalog coordinates live in.
    pub fn tower(self) -> TowerId {
        match self {
            PointKind::Flex | PointKind::Sextactic => TowerId::EpsMu,
            PointKind::Type9 => TowerId::AlphaBeta,
        }
    }

    /// The torsion level `n` with points of this kind in `E[n] \ E[3]` (or `E[3]` for flexes).
    pub fn torsion_level(self) -> i64 {
        match self {
            PointKind::Flex => 3,
            PointKind::Sextactic => 6,
            PointKind::Type9 => 9,
        }
    }
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    /// Group-law generators the catalog was enumerated from.
    pub generators: Vec<ECPoint>,
    /// Names of the checks the catalog passed.
    pub checks: Vec<String>,
}

/// A canonically sorted list of points of one kind on the Fermat cubic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCatalog {
    kind: PointKind,
    tower: TowerId,
    points: Vec<ProjPoint>,
    provenance: Provenance,
}

impl PointCatalog {
    /// Sorts and validates `points`, recording the checks in the provenance.
    pub fn new(kind: PointKind, points: Vec<ProjPoint>, generators: Vec<ECPoint>) -> Result<Self> {
        let tower = points.first().map(ProjPoint::tower).unwrap_or(kind.tower());
        let mut points = points;
        points.sort();
        points.dedup();
        let mut catalog = PointCatalog { kind, tower, points, provenance: Provenance { generators, checks: vec![] } };
        catalog.provenance.checks = catalog.validate()?;
        Ok(catalog)
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn tower(&self) -> TowerId {
        self.tower
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.index_of(p).is_some()
    }

    pub fn index_of(&self, p: &ProjPoint) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    /// Images of the points on the Weierstrass model, in catalog order.
    pub fn weierstrass_images(&self) -> Result<Vec<ECPoint>> {
        self.points.iter().map(to_weierstrass).collect()
    }

    /// Runs every structural check and returns their names, failing on the first violation.
    pub fn validate(&self) -> Result<Vec<String>> {
        let fail = |what: &str| Err(Error::Catalog(format!("{} catalog: {what}", self.kind)));
        let mut checks = Vec::new();
        if self.points.len() != self.kind.expected_size() {
            return fail(&format!("expected {} points, found {}", self.kind.expected_size(), self.points.len()));
        }
        checks.push("size".to_string());
        if self.points.iter().any(|p| p.tower() != self.tower) {
            return fail("mixed towers");
        }
        let f = HomForm::fermat(self.tower);
        if let Some(p) = self.points.iter().find(|p| !p.lies_on(&f)) {
            return fail(&format!("{p} is not on the cubic"));
        }
        checks.push("on_cubic".to_string());
        let set: HashSet<&ProjPoint> = self.points.iter().collect();
        for perm in PERMUTATIONS {
            if let Some(p) = self.points.iter().find(|p| !set.contains(&p.permute(perm))) {
                return fail(&format!("not closed under {perm:?}: {p}"));
            }
        }
        checks.push("permutation_closed".to_string());
        let hessian = HomForm::fermat_hessian(self.tower);
        let locus_ok = match self.kind {
            PointKind::Flex => self.points.iter().all(|p| p.lies_on(&hessian)),
            PointKind::Sextactic => {
                let h2 = HomForm::fermat_second_hessian(self.tower);
                self.points.iter().all(|p| p.lies_on(&h2) && p.zero_coordinates() == 0)
            }
            PointKind::Type9 => self.points.iter().all(|p| !p.lies_on(&hessian)),
        };
        if !locus_ok {
            return fail("covariant locus check failed");
        }
        checks.push(
            match self.kind {
                PointKind::Flex => "on_hessian",
                PointKind::Sextactic => "on_second_hessian",
                PointKind::Type9 => "off_hessian",
            }
            .to_string(),
        );
        let e = WeierstrassCurve::fermat(self.tower);
        let n = self.kind.torsion_level();
        for p in &self.points {
            let q = to_weierstrass(p)?;
            let in_e3 = e.scalar_mul(3, &q).is_infinity();
            let ok = e.scalar_mul(n, &q).is_infinity() && (self.kind == PointKind::Flex || !in_e3);
            if !ok {
                return fail(&format!("{p} does not have the expected torsion order"));
            }
        }
        checks.push("torsion_order".to_string());
        Ok(checks)
    }
}

/// The nine flexes `[1 : -w : 0]`, `[1 : 0 : -w]`, `[0 : 1 : -w]` for `w^3 = 1`.
pub fn flex_catalog(tower: TowerId) -> Result<PointCatalog> {
    let eps = cube_root_of_unity(tower).ok_or_else(|| Error::Catalog(format!("{tower} has no cube root of unity")))?;
    let (zero, one) = (FieldElement::zero(tower), FieldElement::one(tower));
    let mut points = Vec::new();
    for w in [one.clone(), eps.clone(), eps.square()] {
        let w = -w;
        points.push(ProjPoint::new(one.clone(), w.clone(), zero.clone())?);
        points.push(ProjPoint::new(one.clone(), zero.clone(), w.clone())?);
        points.push(ProjPoint::new(zero.clone(), one.clone(), w)?);
    }
    PointCatalog::new(PointKind::Flex, points, vec![])
}

/// Generators `(12, 36)` and `(12 w, 36)` of `E[3]`.
fn three_torsion_generators(tower: TowerId) -> Result<(ECPoint, ECPoint)> {
    let eps = cube_root_of_unity(tower).ok_or_else(|| Error::Catalog(format!("{tower} has no cube root of unity")))?;
    let c = |n| FieldElement::from_int(tower, n);
    Ok((ECPoint::affine(c(12), c(36)), ECPoint::affine(eps.scale_int(12), c(36))))
}

/// `E[6] \ E[3]`, built as `E[2] + E[3]` over `Q(eps, mu)`.
pub fn sextactic_catalog() -> Result<PointCatalog> {
    let tower = TowerId::EpsMu;
    let e = WeierstrassCurve::fermat(tower);
    let (g1, g2) = three_torsion_generators(tower)?;
    let e3 = torsion_subgroup(&e, &g1, &g2, 3)?;
    let eps = FieldElement::generator(tower, 0);
    let mu6 = FieldElement::generator(tower, 1).scale_int(6);
    let zero = FieldElement::zero(tower);
    let mut e2 = vec![ECPoint::Infinity];
    e2.extend([mu6.clone(), &mu6 * &eps, &mu6 * &eps.square()].map(|x| ECPoint::affine(x, zero.clone())));
    let mut e6 = HashSet::new();
    for t2 in &e2 {
        for t3 in &e3 {
            e6.insert(e.add(t2, t3));
        }
    }
    if e6.len() != 36 {
        return Err(Error::Catalog(format!("E[6] has {} points, expected 36", e6.len())));
    }
    let e3: HashSet<&ECPoint> = e3.iter().collect();
    let points = e6.iter().filter(|q| !e3.contains(q)).map(|q| from_weierstrass(q, tower)).collect();
    let generators = vec![g1, g2, e2[1].clone()];
    PointCatalog::new(PointKind::Sextactic, points, generators)
}

/// Two generators of `E[9]` over `Q(alpha, beta)` taken from the listed
/// seeds: `T1` with the first of `T4, ..., T12` independent of it.
pub fn type9_generators() -> Result<(ECPoint, ECPoint, Vec<ECPoint>)> {
    let tower = TowerId::AlphaBeta;
    let e = WeierstrassCurve::fermat(tower);
    let seeds = type9_seeds();
    let g1 = to_weierstrass(&seeds[0].1)?;
    let mut last = Error::IndependenceFailure { achieved: 0, expected: 81 };
    for (_, seed) in &seeds[3..] {
        let g2 = to_weierstrass(seed)?;
        match torsion_subgroup(&e, &g1, &g2, 9) {
            Ok(points) => return Ok((g1, g2, points)),
            Err(err @ Error::IndependenceFailure { .. }) => last = err,
            Err(err) => return Err(err),
        }
    }
    Err(last)
}

/// `E[9] \ E[3]` mapped back to the plane over `Q(alpha, beta)`.
pub fn type9_catalog() -> Result<PointCatalog> {
    let tower = TowerId::AlphaBeta;
    let e = WeierstrassCurve::fermat(tower);
    let (g1, g2, e9) = type9_generators()?;
    let points = e9.iter().filter(|q| !e.scalar_mul(3, q).is_infinity()).map(|q| from_weierstrass(q, tower)).collect();
    PointCatalog::new(PointKind::Type9, points, vec![g1, g2])
}

/// The catalog of `kind` in its default tower.
pub fn catalog(kind: PointKind) -> Result<PointCatalog> {
    match kind {
        PointKind::Flex => flex_catalog(TowerId::EpsMu),
        PointKind::Sextactic => sextactic_catalog(),
        PointKind::Type9 => type9_catalog(),
    }
}
