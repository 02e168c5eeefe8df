//! Published coordinates used as membership fixtures: the twelve type-9
//! seeds and the listed six-fold, nine-fold (sextactic) and nine-fold
//! (type-9) shadow points.

use crate::field::{FieldElement, TowerId};
use crate::projective::ProjPoint;

const AB: TowerId = TowerId::AlphaBeta;
const EM: TowerId = TowerId::EpsMu;

fn alpha() -> FieldElement {
    FieldElement::generator(AB, 0)
}

/// `sum c_k beta^k`
fn pb(coeffs: &[i64]) -> FieldElement {
    let beta = FieldElement::generator(AB, 1);
    coeffs.iter().rev().fold(FieldElement::zero(AB), |acc, &c| &(&acc * &beta) + &FieldElement::from_int(AB, c))
}

fn prod(factors: &[FieldElement]) -> FieldElement {
    factors.iter().fold(FieldElement::one(AB), |acc, f| &acc * f)
}

fn point(c: [FieldElement; 3]) -> ProjPoint {
    ProjPoint::from_coords(c).expect("fixture coordinates are nonzero")
}

/// The twelve listed type-9 points `T1, ..., T12`. `T10`'s last coordinate
/// is read as `alpha^2 (beta - 1)(beta^3 + beta^2 + 1)`.
pub fn type9_seeds() -> Vec<(&'static str, ProjPoint)> {
    let a = alpha();
    let a2 = a.square();
    let b = pb(&[0, 1]);
    let b2 = pb(&[0, 0, 1]);
    let one = FieldElement::one(AB);
    let three = FieldElement::from_int(AB, 3);
    let bb1 = pb(&[1, 1, 1]); // beta^2 + beta + 1
    let bm1 = pb(&[-1, 1]); // beta - 1
    let ab = &a * &b;
    vec![
        ("T1", point([one.clone(), b.clone(), b2.clone()])),
        ("T2", point([one.clone(), b2.clone(), pb(&[0, 0, 0, 0, 1])])),
        ("T3", point([one, b.clone(), pb(&[0, 0, 0, 0, 0, 1])])),
        (
            "T4",
            point([
                three.clone(),
                prod(&[ab.clone(), pb(&[1, -1, 0, 2, 1])]),
                -prod(&[a2.clone(), bb1.clone(), pb(&[1, -1, 0, 1])]),
            ]),
        ),
        (
            "T5",
            point([
                three.clone(),
                -prod(&[ab.clone(), pb(&[2, 1, 0, 1, 2])]),
                prod(&[a2.clone(), pb(&[1, 1]), bm1.square()]),
            ]),
        ),
        (
            "T6",
            point([
                three.clone(),
                prod(&[ab.clone(), pb(&[-2, -1, 0, -1, 1])]),
                -prod(&[a2.clone(), b2.clone(), bb1.clone()]),
            ]),
        ),
        (
            "T7",
            point([
                three.clone(),
                prod(&[ab.clone(), bm1.clone(), pb(&[2, 0, 0, 1])]),
                -prod(&[a2.clone(), b.clone(), bb1.clone(), pb(&[1, -1, 1])]),
            ]),
        ),
        (
            "T8",
            point([
                three.clone(),
                prod(&[a2.clone(), bm1.clone(), pb(&[1, 1]), pb(&[1, 1, 0, 1])]),
                prod(&[ab.clone(), pb(&[-2, -1, 0, -1, 1])]),
            ]),
        ),
        (
            "T9",
            point([
                three.clone(),
                prod(&[ab.clone(), bm1.square(), bb1.clone()]),
                -prod(&[a2.clone(), b.clone(), bb1.clone(), pb(&[1, -1, 1])]),
            ]),
        ),
        (
            "T10",
            point([
                three.clone(),
                prod(&[ab.clone(), bm1.square(), bb1.clone()]),
                prod(&[a2.clone(), bm1.clone(), pb(&[1, 0, 1, 1])]),
            ]),
        ),
        (
            "T11",
            point([three.clone(), prod(&[ab.clone(), pb(&[1, 2, 0, 2, 1])]), -prod(&[a2.clone(), b2, bb1.clone()])]),
        ),
        ("T12", point([three, -prod(&[a2, bb1, pb(&[1, -1, 0, 1])]), -prod(&[ab, pb(&[2, 1, 0, 1, 2])])])),
    ]
}

/// The eight listed points where six sextactic conics meet.
pub fn sextactic_sixfold_listed() -> Vec<(&'static str, ProjPoint)> {
    let eps = FieldElement::generator(EM, 0);
    let mu2 = FieldElement::generator(EM, 1).square();
    let one = FieldElement::one(EM);
    let zero = FieldElement::zero(EM);
    let names = [["A1", "A2", "A3", "A4"], ["A5", "A6", "A7", "A8"]];
    let mut out = Vec::new();
    for (row, y) in names.iter().zip([one.clone(), eps.clone()]) {
        let zs = [zero.clone(), -&mu2, -&(&eps * &mu2), -&(&eps.square() * &mu2)];
        for (name, z) in row.iter().zip(zs) {
            out.push((*name, point([one.clone(), y.clone(), z])));
        }
    }
    out
}

/// The three listed points where nine sextactic conics meet.
pub fn sextactic_ninefold_listed() -> Vec<(&'static str, ProjPoint)> {
    let eps = FieldElement::generator(EM, 0);
    let mu = FieldElement::generator(EM, 1);
    let (zero, one) = (FieldElement::zero(EM), FieldElement::one(EM));
    [("B1", -&mu), ("B2", -&(&eps * &mu)), ("B3", -&(&eps.square() * &mu))]
        .into_iter()
        .map(|(n, z)| (n, point([zero.clone(), one.clone(), z])))
        .collect()
}

/// The twelve listed points where nine type-9 conics meet. `C5`'s last
/// coordinate is read as `-alpha^2 (beta^2 + beta + 1)(beta^3 - beta + 1)`;
/// see [`c5_as_printed`].
pub fn type9_ninefold_listed() -> Vec<(&'static str, ProjPoint)> {
    let a = alpha();
    let a2 = a.square();
    let ab = &a * &pb(&[0, 1]);
    let bb1 = pb(&[1, 1, 1]);
    let bm1 = pb(&[-1, 1]);
    let zero = FieldElement::zero(AB);
    let one = FieldElement::one(AB);
    let three = FieldElement::from_int(AB, 3);
    let unit = |z: FieldElement| point([zero.clone(), one.clone(), z]);
    let triple = |z: FieldElement| point([zero.clone(), three.clone(), z]);
    vec![
        ("C1", unit(pb(&[0, 1]))),
        ("C2", unit(pb(&[0, 0, 1]))),
        ("C3", unit(pb(&[0, 0, 0, 0, 1]))),
        ("C4", triple(prod(&[ab.clone(), bm1.clone(), pb(&[2, 0, 0, 1])]))),
        ("C5", triple(-prod(&[a2.clone(), bb1.clone(), pb(&[1, -1, 0, 1])]))),
        ("C6", triple(prod(&[ab.clone(), pb(&[1, -1, 0, 2, 1])]))),
        ("C7", triple(prod(&[ab.clone(), bm1.square(), bb1.clone()]))),
        ("C8", triple(prod(&[ab.clone(), pb(&[1, 2, 0, 2, 1])]))),
        ("C9", triple(-prod(&[ab.clone(), pb(&[2, 1, 0, 1, 2])]))),
        ("C10", triple(-prod(&[a2.clone(), pb(&[0, 0, 1]), bb1.clone()]))),
        ("C11", triple(prod(&[ab, pb(&[-2, -1, 0, -1, 1])]))),
        ("C12", triple(-prod(&[a2, pb(&[0, 1]), bb1, pb(&[1, -1, 1])]))),
    ]
}

/// `C5` with the first power of `alpha` as printed. It lies on none of the
/// type-9 conics.
pub fn c5_as_printed() -> ProjPoint {
    let z = -prod(&[alpha(), pb(&[1, 1, 1]), pb(&[1, -1, 0, 1])]);
    point([FieldElement::zero(AB), FieldElement::from_int(AB, 3), z])
}
