use fermat_cubic::catalogs::{self, PointKind};
use fermat_cubic::elliptic::{from_weierstrass, to_weierstrass, WeierstrassCurve};
use fermat_cubic::field::{ExactMatrix, FieldElement, Rational, TowerId};
use fermat_cubic::io::{CatalogFile, CensusFile};
use fermat_cubic::poly::{HomForm, UniPoly};
use fermat_cubic::projective::{hom_eval, ProjPoint};
use proptest::prelude::*;

fn tower() -> impl Strategy<Value = TowerId> {
    prop::sample::select(TowerId::ALL.to_vec())
}

fn element_in(t: TowerId) -> impl Strategy<Value = FieldElement> {
    prop::collection::vec((-50i64..=50, 1i64..=7), t.dim()).prop_map(move |c| {
        let coeffs: Vec<Rational> = c.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect();
        FieldElement::from_coeffs(t, &coeffs).unwrap()
    })
}

fn triple() -> impl Strategy<Value = [FieldElement; 3]> {
    tower().prop_flat_map(|t| [element_in(t), element_in(t), element_in(t)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms([a, b, c] in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn inverses([a, _, _] in triple()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn nullspace_ignores_row_order(
        rows in tower().prop_flat_map(|t| prop::collection::vec(prop::collection::vec(element_in(t), 4), 1..4)),
        seed in any::<u64>(),
    ) {
        let t = rows[0][0].tower();
        let m = ExactMatrix::from_rows(t, rows.clone()).unwrap();
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.rotate_left((seed as usize) % rows.len());
        let p = m.permute_rows(&order);
        prop_assert_eq!(m.nullspace(), p.nullspace());
        for v in m.nullspace() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(FieldElement::is_zero));
        }
    }

    #[test]
    fn deflation_recovers_multiplicity(
        [r, s, _] in triple(),
        k in 1usize..4,
    ) {
        prop_assume!(r != s);
        let t = r.tower();
        let one = FieldElement::one(t);
        let factor = UniPoly::linear(-&r, one.clone());
        let rest = UniPoly::linear(-&s, one);
        let p = &factor.pow(k as u32) * &rest;
        prop_assert_eq!(p.root_multiplicity(&r).unwrap(), k);
        prop_assert_eq!(p.deflate(&r, k).unwrap(), rest);
    }

    #[test]
    fn hom_eval_scales_by_degree(
        coords in triple(),
        [lambda, _, _] in triple(),
    ) {
        let t = coords[0].tower();
        prop_assume!(lambda.tower() == t && !lambda.is_zero());
        prop_assume!(coords.iter().any(|c| !c.is_zero()));
        let f = HomForm::fermat(t);
        let scaled = [&coords[0] * &lambda, &coords[1] * &lambda, &coords[2] * &lambda];
        prop_assert_eq!(f.eval(&scaled), &f.eval(&coords) * &lambda.pow(3));
        let p = ProjPoint::from_coords(coords.clone()).unwrap();
        let q = ProjPoint::from_coords(scaled).unwrap();
        prop_assert_eq!(&p, &q);
        prop_assert_eq!(hom_eval(&f, &p).is_zero(), hom_eval(&f, &q).is_zero());
    }

    #[test]
    fn weierstrass_round_trip_on_multiples(i in 0i64..9, j in 0i64..9) {
        let e = WeierstrassCurve::fermat(TowerId::AlphaBeta);
        let (g1, g2, _) = catalogs::type9_generators().unwrap();
        let q = e.add(&e.scalar_mul(i, &g1), &e.scalar_mul(j, &g2));
        let p = from_weierstrass(&q, TowerId::AlphaBeta);
        prop_assert!(p.lies_on(&HomForm::fermat(TowerId::AlphaBeta)));
        prop_assert_eq!(to_weierstrass(&p).unwrap(), q);
    }

    #[test]
    fn element_json_round_trip([a, _, _] in triple()) {
        let s = serde_json::to_string(&a).unwrap();
        let b: FieldElement = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(serde_json::to_string(&b).unwrap(), s);
        prop_assert_eq!(b, a);
    }
}

#[test]
fn catalog_json_round_trips() {
    for kind in PointKind::ALL {
        let cat = catalogs::catalog(kind).unwrap();
        let s = serde_json::to_string(&CatalogFile::from(&cat)).unwrap();
        let file: CatalogFile = serde_json::from_str(&s).unwrap();
        assert_eq!(serde_json::to_string(&file).unwrap(), s);
        assert_eq!(file.into_catalog().unwrap(), cat);
    }
}

#[test]
fn census_json_round_trips() {
    let cat = catalogs::sextactic_catalog().unwrap();
    let s = fermat_cubic::verify::census_json_with_threads(&cat, 2).unwrap();
    let file: CensusFile = serde_json::from_str(&s).unwrap();
    assert_eq!(serde_json::to_string(&file).unwrap(), s);
}
