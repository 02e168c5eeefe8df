//! The full set of named checks behind `verify --all`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangements::{
    admissible_pairs, conic_catalog, shadow_census_from, tangent_analysis, ConicArrangement, ConicCatalog,
    LocalIntersections, ShadowCensus,
};
use crate::catalogs::{self, fixtures, PointCatalog, PointKind};
use crate::elliptic::{division_poly, from_weierstrass, to_weierstrass, torsion_subgroup, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::field::{FieldElement, Rational, TowerId};
use crate::io::CensusFile;
use crate::poly::HomForm;
use crate::projective::{ConicParametrization, ProjPoint, PERMUTATIONS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    /// Short description of the claim being checked.
    pub anchor: &'static str,
    pub passed: bool,
    pub expected: String,
    pub computed: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let a = self.checks.iter().map(|c| c.anchor.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {:w$}  {:a$}  expected: {}", c.name, c.anchor, c.expected)?;
            writeln!(f, "      {:w$}  {:a$}  computed: {}", "", "", c.computed)?;
        }
        Ok(())
    }
}

/// Everything the checks share, built once.
struct Data {
    flex: PointCatalog,
    flex_ab: PointCatalog,
    sextactic: PointCatalog,
    type9: PointCatalog,
    conics: [ConicCatalog; 2],
    locals: [Vec<LocalIntersections>; 2],
    census: [ShadowCensus; 2],
}

fn build() -> Result<Data> {
    let sextactic = catalogs::sextactic_catalog()?;
    let type9 = catalogs::type9_catalog()?;
    let conics = [conic_catalog(&sextactic)?, conic_catalog(&type9)?];
    let mut locals = Vec::new();
    let mut census = Vec::new();
    for (cat, con) in [&sextactic, &type9].into_iter().zip(&conics) {
        let arr = ConicArrangement::new(cat, con)?;
        let l = arr.all_local_intersections()?;
        census.push(shadow_census_from(&arr, &l)?);
        locals.push(l);
    }
    Ok(Data {
        flex: catalogs::flex_catalog(TowerId::EpsMu)?,
        flex_ab: catalogs::flex_catalog(TowerId::AlphaBeta)?,
        sextactic,
        type9,
        conics,
        locals: locals.try_into().expect("two kinds"),
        census: census.try_into().expect("two kinds"),
    })
}

fn check(
    name: &'static str,
    anchor: &'static str,
    expected: impl Into<String>,
    run: impl FnOnce() -> Result<(bool, String)>,
) -> Check {
    let (passed, computed) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
    Check { name, anchor, passed, expected: expected.into(), computed }
}

/// Runs every check. Construction failures turn into failed checks rather
/// than aborting the report.
pub fn verify_all() -> VerificationReport {
    let mut checks = vec![field_identity(), division_polynomials()];
    match build() {
        Ok(d) => checks.extend([
            catalog_sizes(&d),
            degree24_form(&d),
            tangent_theorems(&d),
            conic_counts(&d),
            per_point_residuals(&d),
            global_census(&d),
            property_suites(&d),
        ]),
        Err(e) => {
            for (name, anchor) in [
                ("catalog_sizes", "flex, sextactic and type-9 catalogs"),
                ("degree24_form", "degree-24 form through the type-9 points"),
                ("tangent_theorems", "tangent residuals"),
                ("conic_counts", "osculating conics"),
                ("per_point_residuals", "conic intersections per base point"),
                ("global_census", "shadow point census"),
                ("property_suites", "field, group and round-trip invariants"),
            ] {
                checks.push(Check {
                    name,
                    anchor,
                    passed: false,
                    expected: "construction".into(),
                    computed: format!("error: {e}"),
                });
            }
        }
    }
    VerificationReport { checks }
}

/// `gamma = alpha + beta` satisfies its degree-18 minimal polynomial.
pub fn gamma_identity_holds() -> bool {
    let t = TowerId::AlphaBeta;
    let gamma = &FieldElement::generator(t, 0) + &FieldElement::generator(t, 1);
    let g3 = gamma.pow(3);
    // gamma^18 - 15 gamma^15 + 177 gamma^12 - 578 gamma^9 + 6747 gamma^6 + 642 gamma^3 + 343
    let value = [1, -15, 177, -578, 6747, 642, 343]
        .iter()
        .fold(FieldElement::zero(t), |acc, &c| &(&acc * &g3) + &FieldElement::from_int(t, c));
    value.is_zero()
}

fn field_identity() -> Check {
    check("field_identity", "minimal polynomial of alpha + beta", "0", || {
        let ok = gamma_identity_holds();
        Ok((ok, if ok { "0".into() } else { "nonzero".into() }))
    })
}

fn division_polynomials() -> Check {
    check(
        "division_polynomials",
        "psi_9 degree and vanishing on type-9 points",
        "deg psi_9 = 40; psi_9 vanishes at 72/72; psi_3 at 0/72",
        || {
            let e = WeierstrassCurve::fermat(TowerId::AlphaBeta);
            let psi9 = division_poly(&e, 9)?;
            let psi3 = division_poly(&e, 3)?;
            let images = catalogs::type9_catalog()?.weierstrass_images()?;
            let v9 = images.iter().filter(|q| psi9.vanishes_at(q)).count();
            let v3 = images.iter().filter(|q| psi3.vanishes_at(q)).count();
            let deg = psi9.poly.degree().unwrap_or(0);
            Ok((
                deg == 40 && v9 == 72 && v3 == 0,
                format!("deg psi_9 = {deg}; psi_9 vanishes at {v9}/72; psi_3 at {v3}/72"),
            ))
        },
    )
}

fn catalog_sizes(d: &Data) -> Check {
    check(
        "catalog_sizes",
        "flex, sextactic and type-9 catalogs",
        "9/27/72 points on F; 12/12 seeds; permutation-closed",
        || {
            let sizes = [d.flex.len(), d.sextactic.len(), d.type9.len()];
            let f = [HomForm::fermat(TowerId::EpsMu), HomForm::fermat(TowerId::AlphaBeta)];
            let on_f = [&d.flex, &d.sextactic].iter().all(|c| c.points().iter().all(|p| p.lies_on(&f[0])))
                && d.type9.points().iter().all(|p| p.lies_on(&f[1]));
            let seeds = fixtures::type9_seeds().iter().filter(|(_, s)| d.type9.contains(s)).count();
            let closed = [&d.flex, &d.sextactic, &d.type9].iter().all(|c| permutation_closed(c.points()));
            Ok((
                sizes == [9, 27, 72] && on_f && seeds == 12 && closed,
                format!(
                    "{}/{}/{} points, on F: {on_f}; {seeds}/12 seeds; permutation-closed: {closed}",
                    sizes[0], sizes[1], sizes[2]
                ),
            ))
        },
    )
}

fn permutation_closed(points: &[ProjPoint]) -> bool {
    let set: HashSet<&ProjPoint> = points.iter().collect();
    PERMUTATIONS.iter().all(|&perm| points.iter().all(|p| set.contains(&p.permute(perm))))
}

fn degree24_form(d: &Data) -> Check {
    check(
        "degree24_form",
        "degree-24 form through the type-9 points",
        "vanishing 72/72/72; factor product; 24 ratios x 3; splits",
        || {
            let r = catalogs::verify_type9_form(&d.type9)?;
            let mult: BTreeMap<usize, usize> = r.ratio_multiplicities.iter().fold(BTreeMap::new(), |mut m, &k| {
                *m.entry(k).or_default() += 1;
                m
            });
            Ok((
                r.passed(),
                format!(
                    "vanishing {:?}; factor product: {}; ratio multiplicities {mult:?}; splits: {}",
                    r.vanishing, r.factor_product_matches, r.splits_into_ratio_factors
                ),
            ))
        },
    )
}

fn tangent_theorems(d: &Data) -> Check {
    check(
        "tangent_theorems",
        "tangent residuals",
        "27 flex residuals, 3 per flex; tangent map on type-9 of order 3 with 24 orbits",
        || {
            let s = tangent_analysis(&d.sextactic, &d.flex)?;
            let t = tangent_analysis(&d.type9, &d.flex_ab)?;
            let nu = t.residual_map();
            let order3 = (0..nu.len()).all(|i| nu[nu[nu[i]]] == i && nu[i] != i);
            let all_flex = s.entries.iter().all(|e| e.residual_kind == PointKind::Flex);
            let per_flex: HashSet<usize> = s.residual_incidence.iter().copied().collect();
            Ok((
                all_flex && per_flex == HashSet::from([3]) && order3 && t.orbits.len() == 24,
                format!(
                    "{} flex residuals, per-flex counts {per_flex:?}; nu^3 = id: {order3}; {} orbits",
                    s.entries.iter().filter(|e| e.residual_kind == PointKind::Flex).count(),
                    t.orbits.len()
                ),
            ))
        },
    )
}

/// Degree of `F` on the conic's parametrization and its orders at the two base points.
fn contact_profile(c: &crate::arrangements::OsculatingConic) -> Result<(Option<usize>, [usize; 2])> {
    let f = HomForm::fermat(c.conic.tower());
    let mut orders = [0; 2];
    let mut degree = None;
    for (k, p) in c.base_points.iter().enumerate() {
        let param = ConicParametrization::new(&c.conic, p)?;
        let r = param.restrict(&f);
        degree = r.degree();
        orders[k] = r.root_multiplicity(&param.base_parameter())?;
    }
    Ok((degree, orders))
}

fn conic_counts(d: &Data) -> Check {
    check(
        "conic_counts",
        "osculating conics",
        "108 (8 per point), 324 (9 per point); irreducible; contact 3+3; pairs = group-law prediction",
        || {
            let mut ok = true;
            let mut parts = Vec::new();
            for (cat, con, per) in [(&d.sextactic, &d.conics[0], 8), (&d.type9, &d.conics[1], 9)] {
                let incidence: HashSet<usize> = con.incidence().into_iter().collect();
                let irreducible = con.conics.iter().all(|c| c.conic.is_irreducible());
                let contact = con
                    .conics
                    .iter()
                    .map(contact_profile)
                    .collect::<Result<Vec<_>>>()?
                    .iter()
                    .all(|&(deg, m)| deg == Some(6) && m == [3, 3]);
                let predicted = admissible_pairs(cat)? == con.pairs;
                ok &= incidence == HashSet::from([per]) && irreducible && contact && predicted;
                parts.push(format!(
                    "{}: {} conics, per-point {incidence:?}, irreducible {irreducible}, contact 3+3 {contact}, matches prediction {predicted}",
                    cat.kind(),
                    con.len()
                ));
            }
            ok &= d.conics[0].len() == 108 && d.conics[1].len() == 324;
            Ok((ok, parts.join("; ")))
        },
    )
}

fn per_point_residuals(d: &Data) -> Check {
    check(
        "per_point_residuals",
        "conic intersections per base point",
        "sextactic {2: 22, 3: 2}; type9 {2: 27, 3: 3}; none on F",
        || {
            let expected = [BTreeMap::from([(2, 22), (3, 2)]), BTreeMap::from([(2, 27), (3, 3)])];
            let mut ok = true;
            let mut parts = Vec::new();
            for (k, name) in ["sextactic", "type9"].iter().enumerate() {
                let kinds: HashSet<BTreeMap<usize, usize>> = d.locals[k].iter().map(|l| l.strata()).collect();
                let tower = [TowerId::EpsMu, TowerId::AlphaBeta][k];
                let f = HomForm::fermat(tower);
                let off_f = d.locals[k].iter().all(|l| l.points.iter().all(|(p, _)| !p.lies_on(&f)));
                ok &= kinds.len() == 1 && kinds.contains(&expected[k]) && off_f;
                parts.push(format!("{name}: {kinds:?}, off F {off_f}"));
            }
            Ok((ok, parts.join("; ")))
        },
    )
}

fn global_census(d: &Data) -> Check {
    check(
        "global_census",
        "shadow point census",
        "540 {2: 486, 6: 36, 9: 18}, A1-A8, B1-B3, 6/6/6; 2016 {2: 1944, 9: 72}, C1-C12, 24/24/24",
        || {
            let [s, t] = &d.census;
            let count_of = |c: &ShadowCensus, p: &ProjPoint| c.index_of(p).map(|i| c.points[i].count);
            let a_ok = fixtures::sextactic_sixfold_listed().iter().filter(|(_, p)| count_of(s, p) == Some(6)).count();
            let b_ok = fixtures::sextactic_ninefold_listed().iter().filter(|(_, p)| count_of(s, p) == Some(9)).count();
            let c_ok = fixtures::type9_ninefold_listed().iter().filter(|(_, p)| count_of(t, p) == Some(9)).count();
            let sixfold: Vec<ProjPoint> = s.with_count(6).map(|p| p.point.clone()).collect();
            let closed = permutation_closed(&sixfold)
                && permutation_closed(&s.points.iter().map(|p| p.point.clone()).collect::<Vec<_>>())
                && permutation_closed(&t.points.iter().map(|p| p.point.clone()).collect::<Vec<_>>());
            let ok = s.total() == 540
                && s.strata == BTreeMap::from([(2, 486), (6, 36), (9, 18)])
                && t.total() == 2016
                && t.strata == BTreeMap::from([(2, 1944), (9, 72)])
                && a_ok == 8
                && b_ok == 3
                && c_ok == 12
                && s.coordinate_line_split(9) == [6, 6, 6]
                && t.coordinate_line_split(9) == [24, 24, 24]
                && closed;
            Ok((
                ok,
                format!(
                    "{} {:?}, A {a_ok}/8, B {b_ok}/3, {:?}; {} {:?}, C {c_ok}/12, {:?}; permutation-closed {closed}",
                    s.total(),
                    s.strata,
                    s.coordinate_line_split(9),
                    t.total(),
                    t.strata,
                    t.coordinate_line_split(9)
                ),
            ))
        },
    )
}

/// A random element with small rational coefficients.
pub fn random_element(rng: &mut impl Rng, tower: TowerId) -> FieldElement {
    let coeffs: Vec<Rational> =
        (0..tower.dim()).map(|_| Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into())).collect();
    FieldElement::from_coeffs(tower, &coeffs).expect("dimension matches")
}

/// Associativity, distributivity and inverses on `samples` random triples per tower.
pub fn field_axioms_hold(samples: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    TowerId::ALL.iter().all(|&t| {
        (0..samples).all(|_| {
            let [a, b, c] = [0; 3].map(|_| random_element(&mut rng, t));
            let assoc = &(&a * &b) * &c == &a * &(&b * &c);
            let distrib = &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
            let inverse = a.is_zero() || (&a * &a.inv().expect("nonzero")).is_one();
            let cancel = (&a + &(-&a)).is_zero();
            assoc && distrib && inverse && cancel
        })
    })
}

/// Commutativity, associativity and inverses on random triples from `E[9]`.
pub fn group_axioms_hold(triples: usize, seed: u64) -> Result<bool> {
    let e = WeierstrassCurve::fermat(TowerId::AlphaBeta);
    let (g1, g2, _) = catalogs::type9_generators()?;
    let pts = torsion_subgroup(&e, &g1, &g2, 9)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..triples {
        let [p, q, r] = [0; 3].map(|_| &pts[rng.gen_range(0..pts.len())]);
        let ok = e.add(p, q) == e.add(q, p)
            && e.add(&e.add(p, q), r) == e.add(p, &e.add(q, r))
            && e.add(p, &e.neg(p)).is_infinity()
            && e.contains(&e.add(p, q));
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The census of `catalog` serialized under a pool of `threads` workers.
pub fn census_json_with_threads(catalog: &PointCatalog, threads: usize) -> Result<String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Verification(format!("thread pool: {e}")))?;
    pool.install(|| {
        let conics = conic_catalog(catalog)?;
        let arr = ConicArrangement::new(catalog, &conics)?;
        let locals = arr.all_local_intersections()?;
        let census = shadow_census_from(&arr, &locals)?;
        serde_json::to_string(&CensusFile::from(&census)).map_err(|e| Error::Verification(e.to_string()))
    })
}

fn property_suites(d: &Data) -> Check {
    check(
        "property_suites",
        "field, group and round-trip invariants",
        "field axioms, group axioms on E[9], Weierstrass round-trips, thread-count determinism",
        || {
            let field = field_axioms_hold(200, 7);
            let group = group_axioms_hold(500, 11)?;
            let mut round_trip = true;
            for c in [&d.flex, &d.flex_ab, &d.sextactic, &d.type9] {
                for p in c.points() {
                    round_trip &= from_weierstrass(&to_weierstrass(p)?, c.tower()) == *p;
                }
            }
            let deterministic =
                census_json_with_threads(&d.sextactic, 1)? == census_json_with_threads(&d.sextactic, 4)?;
            Ok((
                field && group && round_trip && deterministic,
                format!(
                    "field {field}, group {group}, round-trip {round_trip}, threads 1 vs 4 identical {deterministic}"
                ),
            ))
        },
    )
}
