//! Reduction of tower elements modulo a prime that splits both towers.
//!
//! The prime `p` satisfies `p = 1 (mod 9)` with 2 and 3 both cubes mod `p`, so
//! each tower admits a ring homomorphism from its `p`-integral elements onto
//! `F_p`. A nonzero image proves the exact element is nonzero; a zero image
//! proves nothing and must be confirmed exactly. Callers only ever use this to
//! skip work that an exact computation would otherwise do.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::element::FieldElement;
use super::tower::TowerId;

pub const MODULUS: u64 = 2_305_843_009_213_692_799;

// Roots in F_p: alpha^3 = 3, beta a primitive 9th root of unity, mu^3 = 2.
const ALPHA: u64 = 1_431_996_680_119_551_709;
const BETA: u64 = 1_081_163_254_718_352_216;
const MU: u64 = 559_501_668_074_925_938;

pub fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

pub fn add(a: u64, b: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % MODULUS as u128) as u64
}

pub fn sub(a: u64, b: u64) -> u64 {
    add(a, MODULUS - b)
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> Option<u64> {
    (a != 0).then(|| pow(a, MODULUS - 2))
}

fn generator_images(tower: TowerId) -> Vec<u64> {
    match tower {
        TowerId::Q => vec![],
        TowerId::EpsMu => vec![pow(BETA, 3), MU],
        TowerId::AlphaBeta => vec![ALPHA, BETA],
    }
}

fn basis_images(tower: TowerId) -> &'static [u64] {
    static IMAGES: OnceLock<[Vec<u64>; 3]> = OnceLock::new();
    let all = IMAGES.get_or_init(|| {
        TowerId::ALL.map(|t| {
            let spec = t.spec();
            let gens = generator_images(t);
            (0..spec.dim())
                .map(|i| spec.exponents(i).iter().zip(&gens).fold(1, |acc, (&e, &g)| mul(acc, pow(g, e as u64))))
                .collect()
        })
    });
    &all[TowerId::ALL.iter().position(|&t| t == tower).unwrap()]
}

fn reduce(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(MODULUS)).to_u64().expect("residue fits in u64")
}

/// The image of `x` in `F_p`, or `None` if its denominator is divisible by `p`.
pub fn image(x: &FieldElement) -> Option<u64> {
    let d = inv(reduce(x.denominator()))?;
    let basis = basis_images(x.tower());
    let s = x
        .numerators()
        .iter()
        .zip(basis)
        .filter(|(n, _)| !n.is_zero())
        .fold(0, |acc, (n, &b)| add(acc, mul(reduce(n), b)));
    Some(mul(s, d))
}

/// `true` only if `x` is certainly nonzero.
pub fn certainly_nonzero(x: &FieldElement) -> bool {
    image(x).is_some_and(|v| v != 0)
}

/// Rank of a matrix over `F_p`. A full rank here implies full rank over the tower.
pub fn rank(mut m: Vec<Vec<u64>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv_p = inv(m[r][c]).unwrap();
        let pivot: Vec<u64> = m[r].iter().map(|&v| mul(v, inv_p)).collect();
        for row in m.iter_mut().skip(r + 1) {
            let f = row[c];
            if f != 0 {
                for (x, &pv) in row.iter_mut().zip(&pivot) {
                    *x = sub(*x, mul(f, pv));
                }
            }
        }
        m[r] = pivot;
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_satisfy_tower_relations() {
        assert_eq!(pow(ALPHA, 3), 3);
        assert_eq!(pow(MU, 3), 2);
        assert_eq!(add(add(pow(BETA, 6), pow(BETA, 3)), 1), 0);
        assert_ne!(pow(BETA, 3), 1);
    }

    #[test]
    fn image_is_multiplicative() {
        for t in TowerId::ALL {
            let d = t.dim();
            let a = FieldElement::from_parts(t, (0..d as i64).map(|i| BigInt::from(i * i - 3)).collect(), 7.into());
            let b = FieldElement::from_parts(t, (0..d as i64).map(|i| BigInt::from(5 - 2 * i)).collect(), 4.into());
            assert_eq!(image(&(&a * &b)), Some(mul(image(&a).unwrap(), image(&b).unwrap())));
            assert_eq!(image(&(&a + &b)), Some(add(image(&a).unwrap(), image(&b).unwrap())));
        }
    }

    #[test]
    fn rank_mod_p() {
        assert_eq!(rank(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(vec![vec![0, 1], vec![1, 0]]), 2);
    }
}
