use std::collections::BTreeMap;

use fermat_cubic::arrangements::{self, ConicArrangement, ShadowCensus};
use fermat_cubic::catalogs::{self, fixtures, PointCatalog, PointKind};
use fermat_cubic::field::TowerId;

fn census(cat: &PointCatalog, conic_count: usize) -> (ShadowCensus, Vec<BTreeMap<usize, usize>>) {
    let conics = arrangements::conic_catalog(cat).unwrap();
    assert_eq!(conics.len(), conic_count);
    assert_eq!(conics.pairs, arrangements::admissible_pairs(cat).unwrap());
    let arr = ConicArrangement::new(cat, &conics).unwrap();
    let locals = arr.all_local_intersections().unwrap();
    let strata = locals.iter().map(|l| l.strata()).collect();
    (arrangements::shadow_census_from(&arr, &locals).unwrap(), strata)
}

#[test]
fn sextactic_pipeline() {
    let cat = catalogs::catalog(PointKind::Sextactic).unwrap();
    let flexes = catalogs::catalog(PointKind::Flex).unwrap();
    let t = arrangements::tangent_analysis(&cat, &flexes).unwrap();
    assert_eq!(t.residual_incidence, vec![3; 9]);

    let (census, locals) = census(&cat, 108);
    assert!(locals.iter().all(|s| *s == BTreeMap::from([(2, 22), (3, 2)])));
    assert_eq!(census.total(), 540);
    assert_eq!(census.strata, BTreeMap::from([(2, 486), (6, 36), (9, 18)]));
    assert_eq!(census.local_strata(), BTreeMap::from([(2, 522), (3, 18)]));
    assert_eq!(census.coordinate_line_split(9), [6, 6, 6]);
    for (name, p) in fixtures::sextactic_sixfold_listed() {
        let i = census.index_of(&p).unwrap_or_else(|| panic!("{name} missing"));
        assert_eq!(census.points[i].count, 6, "{name}");
    }
    for (name, p) in fixtures::sextactic_ninefold_listed() {
        let i = census.index_of(&p).unwrap_or_else(|| panic!("{name} missing"));
        assert_eq!(census.points[i].count, 9, "{name}");
    }
}

#[test]
fn type9_pipeline() {
    let cat = catalogs::catalog(PointKind::Type9).unwrap();
    let flexes = catalogs::flex_catalog(TowerId::AlphaBeta).unwrap();
    let t = arrangements::tangent_analysis(&cat, &flexes).unwrap();
    assert_eq!(t.orbits.len(), 24);

    let (census, locals) = census(&cat, 324);
    assert!(locals.iter().all(|s| *s == BTreeMap::from([(2, 27), (3, 3)])));
    assert_eq!(census.total(), 2016);
    assert_eq!(census.strata, BTreeMap::from([(2, 1944), (9, 72)]));
    assert_eq!(census.local_strata(), BTreeMap::from([(2, 1944), (3, 72)]));
    assert_eq!(census.coordinate_line_split(9), [24, 24, 24]);
    for (name, p) in fixtures::type9_ninefold_listed() {
        let i = census.index_of(&p).unwrap_or_else(|| panic!("{name} missing"));
        assert_eq!(census.points[i].count, 9, "{name}");
    }
    assert_eq!(census.index_of(&fixtures::c5_as_printed()), None);
}
