//! Acceptance suite. Every criterion is evaluated at exact equality against
//! oracles computed here, independently of the library's own report.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use fermat_cubic::arrangements::{
    conic_catalog, shadow_census_from, ConicArrangement, ConicCatalog, LocalIntersections, ShadowCensus,
};
use fermat_cubic::catalogs::{self, fixtures, PointCatalog};
use fermat_cubic::elliptic::{division_poly, from_weierstrass, to_weierstrass, ECPoint, WeierstrassCurve};
use fermat_cubic::field::{FieldElement, TowerId};
use fermat_cubic::poly::HomForm;
use fermat_cubic::projective::{ConicParametrization, ProjPoint, PERMUTATIONS};
use fermat_cubic::verify::{census_json_with_threads, field_axioms_hold, group_axioms_hold};
use rayon::prelude::*;

const AB: TowerId = TowerId::AlphaBeta;
const EM: TowerId = TowerId::EpsMu;

struct Data {
    flex: PointCatalog,
    flex_ab: PointCatalog,
    sextactic: PointCatalog,
    type9: PointCatalog,
    conics: [ConicCatalog; 2],
    locals: [Vec<LocalIntersections>; 2],
    census: [ShadowCensus; 2],
}

fn build() -> Data {
    let sextactic = catalogs::sextactic_catalog().unwrap();
    let type9 = catalogs::type9_catalog().unwrap();
    let conics = [conic_catalog(&sextactic).unwrap(), conic_catalog(&type9).unwrap()];
    let mut locals = Vec::new();
    let mut census = Vec::new();
    for (cat, con) in [&sextactic, &type9].into_iter().zip(&conics) {
        let arr = ConicArrangement::new(cat, con).unwrap();
        let l = arr.all_local_intersections().unwrap();
        census.push(shadow_census_from(&arr, &l).unwrap());
        locals.push(l);
    }
    Data {
        flex: catalogs::flex_catalog(EM).unwrap(),
        flex_ab: catalogs::flex_catalog(AB).unwrap(),
        sextactic,
        type9,
        conics,
        locals: locals.try_into().unwrap(),
        census: census.try_into().unwrap(),
    }
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn int(t: TowerId, n: i64) -> FieldElement {
    FieldElement::from_int(t, n)
}

fn cube_sum(p: &ProjPoint) -> FieldElement {
    let [x, y, z] = p.coords();
    &(&x.pow(3) + &y.pow(3)) + &z.pow(3)
}

fn closed(points: &[ProjPoint]) -> bool {
    let set: HashSet<&ProjPoint> = points.iter().collect();
    PERMUTATIONS.iter().all(|&perm| points.iter().all(|p| set.contains(&p.permute(perm))))
}

fn tally(it: impl IntoIterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for k in it {
        *m.entry(k).or_default() += 1;
    }
    m
}

fn field_identity() -> Result<String, String> {
    let gamma = &FieldElement::generator(AB, 0) + &FieldElement::generator(AB, 1);
    let terms = [(18, 1), (15, -15), (12, 177), (9, -578), (6, 6747), (3, 642), (0, 343)];
    let value = terms.iter().fold(FieldElement::zero(AB), |acc, &(e, c)| &acc + &gamma.pow(e).scale_int(c));
    ensure(value.is_zero(), format!("minimal polynomial evaluates to {value}"))?;
    Ok("gamma^18 - 15 gamma^15 + ... + 343 = 0".into())
}

fn division_polynomials(d: &Data) -> Result<String, String> {
    let e = WeierstrassCurve::fermat(AB);
    let psi9 = division_poly(&e, 9).map_err(|e| e.to_string())?;
    let psi3 = division_poly(&e, 3).map_err(|e| e.to_string())?;
    ensure(psi9.poly.degree() == Some(40), format!("deg psi_9 = {:?}", psi9.poly.degree()))?;
    let images: Vec<ECPoint> = d.type9.points().iter().map(|p| to_weierstrass(p).unwrap()).collect();
    for q in &images {
        ensure(e.scalar_mul(9, q).is_infinity() && !e.scalar_mul(3, q).is_infinity(), "type-9 point of wrong order")?;
        let x = q.x().ok_or("type-9 point at infinity")?;
        ensure(psi9.poly.eval(x).is_zero(), format!("psi_9 nonzero at {x}"))?;
        ensure(!psi3.poly.eval(x).is_zero(), format!("psi_3 vanishes at {x}"))?;
    }
    Ok(format!("deg psi_9 = 40; psi_9 vanishes at {}/72, psi_3 at 0/72", images.len()))
}

fn catalog_sizes(d: &Data) -> Result<String, String> {
    let sizes = [d.flex.len(), d.sextactic.len(), d.type9.len()];
    ensure(sizes == [9, 27, 72], format!("sizes {sizes:?}"))?;
    for c in [&d.flex, &d.flex_ab, &d.sextactic, &d.type9] {
        ensure(c.points().iter().all(|p| cube_sum(p).is_zero()), format!("{} point off F", c.kind()))?;
        ensure(closed(c.points()), format!("{} catalog not permutation-closed", c.kind()))?;
    }
    let w = FieldElement::generator(EM, 0);
    let mut flexes = Vec::new();
    for r in [int(EM, 1), w.clone(), w.square()] {
        let (o, z, r) = (int(EM, 1), int(EM, 0), -r);
        flexes.push(ProjPoint::new(o.clone(), r.clone(), z.clone()).unwrap());
        flexes.push(ProjPoint::new(o.clone(), z.clone(), r.clone()).unwrap());
        flexes.push(ProjPoint::new(z, o, r).unwrap());
    }
    ensure(flexes.iter().all(|p| d.flex.contains(p)), "flex list mismatch")?;
    let seeds = fixtures::type9_seeds();
    let missing: Vec<&str> = seeds.iter().filter(|(_, p)| !d.type9.contains(p)).map(|(n, _)| *n).collect();
    ensure(missing.is_empty(), format!("seeds missing: {missing:?}"))?;
    Ok("9/27/72 points on F, 12/12 seeds, permutation-closed".into())
}

fn degree24_form(d: &Data) -> Result<String, String> {
    let q = catalogs::type9_form(AB);
    let [f1, f2, f3] = catalogs::type9_form_factors(AB);
    ensure(&(&f1 * &f2) * &f3 == q, "Q differs from its factor product")?;
    let zero = int(AB, 0);
    for p in d.type9.points() {
        let [x, y, z] = p.coords();
        for (a, b) in [(x, y), (x, z), (y, z)] {
            ensure(q.eval(&[a.clone(), b.clone(), zero.clone()]).is_zero(), format!("Q nonzero at {p}"))?;
        }
    }
    let mut ratios: HashMap<FieldElement, usize> = HashMap::new();
    for p in d.type9.points() {
        let [x, y, _] = p.coords();
        *ratios.entry(x * &y.inv().map_err(|e| e.to_string())?).or_default() += 1;
    }
    ensure(ratios.len() == 24 && ratios.values().all(|&m| m == 3), format!("{} ratios", ratios.len()))?;
    let product = ratios
        .keys()
        .map(|r| HomForm::linear(&[int(AB, 1), -r, zero.clone()]))
        .fold(HomForm::linear(&[int(AB, 1), zero.clone(), zero.clone()]).pow(0), |acc, l| &acc * &l);
    ensure(product == q, "Q is not the product of the 24 ratio factors")?;
    Ok("Q vanishes on 72/72 in all three planes; 3-factor product; 24 linear factors x 3".into())
}

fn tangent_theorems(d: &Data) -> Result<String, String> {
    // The tangent at [a : b : c] is a^2 x + b^2 y + c^2 z = 0.
    let on_tangent = |p: &ProjPoint, q: &ProjPoint| {
        let (a, b) = (p.coords(), q.coords());
        (0..3).fold(FieldElement::zero(p.tower()), |acc, i| &acc + &(&a[i].square() * &b[i])).is_zero()
    };
    let mut per_flex = vec![0; 9];
    for p in d.sextactic.points() {
        let hits: Vec<usize> = (0..9).filter(|&i| on_tangent(p, &d.flex.points()[i])).collect();
        ensure(hits.len() == 1, format!("tangent at {p} meets {} flexes", hits.len()))?;
        per_flex[hits[0]] += 1;
    }
    ensure(per_flex.iter().all(|&k| k == 3), format!("per-flex counts {per_flex:?}"))?;
    ensure(
        d.type9.points().iter().all(|p| !d.flex_ab.points().iter().any(|f| on_tangent(p, f))),
        "type-9 tangent hits a flex",
    )?;
    let pts = d.type9.points();
    let mut nu = Vec::with_capacity(pts.len());
    for (i, p) in pts.iter().enumerate() {
        let hits: Vec<usize> = (0..pts.len()).filter(|&j| j != i && on_tangent(p, &pts[j])).collect();
        ensure(hits.len() == 1, format!("tangent at {p} meets {} other type-9 points", hits.len()))?;
        nu.push(hits[0]);
    }
    ensure((0..nu.len()).all(|i| nu[i] != i && nu[nu[nu[i]]] == i), "nu^3 != id")?;
    let orbits: HashSet<Vec<usize>> = (0..nu.len())
        .map(|i| {
            let mut o = vec![i, nu[i], nu[nu[i]]];
            o.sort();
            o
        })
        .collect();
    ensure(orbits.len() == 24, format!("{} orbits", orbits.len()))?;
    Ok("27 sextactic tangents end at flexes, 3 per flex; nu^3 = id with 24 orbits".into())
}

/// Pairs `i < j` with `P_i + P_j` in `E[3]`.
fn group_law_pairs(cat: &PointCatalog) -> Vec<(usize, usize)> {
    let e = WeierstrassCurve::fermat(cat.tower());
    let images: Vec<ECPoint> = cat.points().iter().map(|p| to_weierstrass(p).unwrap()).collect();
    let mut pairs = Vec::new();
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if e.scalar_mul(3, &e.add(&images[i], &images[j])).is_infinity() {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

fn conic_counts(d: &Data) -> Result<String, String> {
    for (cat, con, count, per) in [(&d.sextactic, &d.conics[0], 108, 8), (&d.type9, &d.conics[1], 324, 9)] {
        ensure(con.len() == count, format!("{}: {} conics", cat.kind(), con.len()))?;
        ensure(con.incidence().iter().all(|&k| k == per), format!("{}: incidence {:?}", cat.kind(), con.incidence()))?;
        ensure(con.pairs == group_law_pairs(cat), format!("{}: base pairs differ from group law", cat.kind()))?;
        let f = HomForm::fermat(cat.tower());
        for (c, &(i, j)) in con.conics.iter().zip(&con.pairs) {
            ensure(!c.conic.determinant().is_zero(), "reducible conic")?;
            for b in [i, j] {
                let p = &cat.points()[b];
                ensure(c.conic.contains(p), "conic misses its base point")?;
                let param = ConicParametrization::new(&c.conic, p).map_err(|e| e.to_string())?;
                let r = param.restrict(&f);
                let m = r.root_multiplicity(&param.base_parameter()).map_err(|e| e.to_string())?;
                ensure(r.degree() == Some(6) && m == 3, format!("contact {m} at {p}"))?;
            }
        }
    }
    Ok("108 (8 per point), 324 (9 per point); irreducible; I = 3 at both base points; pairs = group law".into())
}

fn per_point_residuals(d: &Data) -> Result<String, String> {
    let expected = [BTreeMap::from([(2, 22), (3, 2)]), BTreeMap::from([(2, 27), (3, 3)])];
    for k in 0..2 {
        let cat = [&d.sextactic, &d.type9][k];
        let con = &d.conics[k];
        ensure(d.locals[k].len() == cat.len(), "missing base points")?;
        for l in &d.locals[k] {
            let through = con.conics_through(l.base);
            let counts = l
                .points
                .iter()
                .map(|(p, _)| {
                    ensure(!cube_sum(p).is_zero(), format!("residual {p} on F"))?;
                    Ok(through.iter().filter(|&&c| con.conics[c].conic.contains(p)).count())
                })
                .collect::<Result<Vec<_>, String>>()?;
            let strata = tally(counts);
            ensure(strata == expected[k], format!("{}: base {} strata {strata:?}", cat.kind(), l.base))?;
            let pairs: usize = strata.iter().map(|(&m, &n)| n * m * (m - 1) / 2).sum();
            ensure(pairs == through.len() * (through.len() - 1) / 2, "conic pairs unaccounted for")?;
        }
    }
    Ok("sextactic 24 = 22 + 2, type-9 30 = 27 + 3 per base point; none on F".into())
}

fn global_census(d: &Data) -> Result<String, String> {
    let mut summary = Vec::new();
    for (k, total, strata, split) in [
        (0, 540, BTreeMap::from([(2, 486), (6, 36), (9, 18)]), [6, 6, 6]),
        (1, 2016, BTreeMap::from([(2, 1944), (9, 72)]), [24, 24, 24]),
    ] {
        let (census, con) = (&d.census[k], &d.conics[k]);
        let recount: Vec<usize> = census
            .points
            .par_iter()
            .map(|p| con.conics.iter().filter(|c| c.conic.contains(&p.point)).count())
            .collect();
        ensure(census.points.iter().zip(&recount).all(|(p, &c)| p.count == c), "census counts disagree with recount")?;
        ensure(census.total() == total, format!("total {}", census.total()))?;
        ensure(tally(recount.iter().copied()) == strata, format!("strata {:?}", tally(recount)))?;
        let points: Vec<ProjPoint> = census.points.iter().map(|p| p.point.clone()).collect();
        ensure(points.iter().all(|p| !cube_sum(p).is_zero()), "census point on F")?;
        ensure(closed(&points), "census not permutation-closed")?;
        let mut lines = [0; 3];
        for p in census.points.iter().filter(|p| p.count == 9) {
            for (i, c) in p.point.coords().iter().enumerate() {
                lines[i] += usize::from(c.is_zero());
            }
        }
        ensure(lines == split, format!("nine-fold split {lines:?}"))?;
        summary.push(format!("{total} {strata:?} {split:?}"));
    }
    let count_of = |c: &ShadowCensus, p: &ProjPoint| c.index_of(p).map(|i| c.points[i].count);
    for (list, k, want) in [
        (fixtures::sextactic_sixfold_listed(), 0, 6),
        (fixtures::sextactic_ninefold_listed(), 0, 9),
        (fixtures::type9_ninefold_listed(), 1, 9),
    ] {
        for (name, p) in list {
            ensure(count_of(&d.census[k], &p) == Some(want), format!("{name}: {:?}", count_of(&d.census[k], &p)))?;
        }
    }
    Ok(format!("{}; A1-A8, B1-B3, C1-C12 present", summary.join("; ")))
}

fn property_suites(d: &Data) -> Result<String, String> {
    ensure(field_axioms_hold(200, 2024), "field axioms")?;
    ensure(group_axioms_hold(500, 2025).map_err(|e| e.to_string())?, "group axioms on E[9]")?;
    for c in [&d.flex, &d.flex_ab, &d.sextactic, &d.type9] {
        for p in c.points() {
            let q = to_weierstrass(p).map_err(|e| e.to_string())?;
            ensure(from_weierstrass(&q, c.tower()) == *p, format!("round trip fails at {p}"))?;
        }
    }
    for cat in [&d.sextactic, &d.type9] {
        let one = census_json_with_threads(cat, 1).map_err(|e| e.to_string())?;
        let many = census_json_with_threads(cat, 8).map_err(|e| e.to_string())?;
        ensure(one == many, format!("{} census differs between 1 and 8 threads", cat.kind()))?;
    }
    Ok("field and group axioms, Weierstrass round trips, 1 vs 8 threads byte-identical".into())
}

fn run(name: &str, f: impl FnOnce() -> Result<String, String>) -> bool {
    let outcome = panic::catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panic".into())));
    match outcome {
        Ok(detail) => {
            println!("PASS  {name:<22} {detail}");
            true
        }
        Err(why) => {
            println!("FAIL  {name:<22} {why}");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut ok = run("1 field_identity", field_identity);
    let data = panic::catch_unwind(build);
    let Ok(d) = data else {
        println!("FAIL  construction of catalogs, conics and census");
        return ExitCode::FAILURE;
    };
    ok &= run("2 division_polynomials", || division_polynomials(&d));
    ok &= run("3 catalog_sizes", || catalog_sizes(&d));
    ok &= run("4 degree24_form", || degree24_form(&d));
    ok &= run("5 tangent_theorems", || tangent_theorems(&d));
    ok &= run("6 conic_counts", || conic_counts(&d));
    ok &= run("7 per_point_residuals", || per_point_residuals(&d));
    ok &= run("8 global_census", || global_census(&d));
    ok &= run("9 property_suites", || property_suites(&d));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
