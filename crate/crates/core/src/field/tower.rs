use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Identifier of one of the fixed tower extensions of the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TowerId {
    /// The rationals themselves.
    Q,
    /// `Q(eps, mu)` with `eps^2 = -eps - 1` and `mu^3 = 2`.
    EpsMu,
    /// `Q(alpha, beta)` with `alpha^3 = 3` and `beta^6 = -beta^3 - 1`.
    AlphaBeta,
}

impl TowerId {
    pub const ALL: [TowerId; 3] = [TowerId::Q, TowerId::EpsMu, TowerId::AlphaBeta];

    pub fn as_str(self) -> &'static str {
        match self {
            TowerId::Q => "Q",
            TowerId::EpsMu => "Q_eps_mu",
            TowerId::AlphaBeta => "Q_alpha_beta",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        TowerId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown tower id {s:?}")))
    }

    pub fn spec(self) -> &'static TowerSpec {
        static SPECS: OnceLock<[TowerSpec; 3]> = OnceLock::new();
        let specs = SPECS.get_or_init(|| {
            [
                TowerSpec::new(TowerId::Q, vec![]),
                TowerSpec::new(
                    TowerId::EpsMu,
                    vec![
                        Generator::new("ε", 2, vec![(vec![0, 0], -1), (vec![1, 0], -1)]),
                        Generator::new("μ", 3, vec![(vec![0, 0], 2)]),
                    ],
                ),
                TowerSpec::new(
                    TowerId::AlphaBeta,
                    vec![
                        Generator::new("α", 3, vec![(vec![0, 0], 3)]),
                        Generator::new("β", 6, vec![(vec![0, 0], -1), (vec![0, 3], -1)]),
                    ],
                ),
            ]
        });
        match self {
            TowerId::Q => &specs[0],
            TowerId::EpsMu => &specs[1],
            TowerId::AlphaBeta => &specs[2],
        }
    }

    pub fn dim(self) -> usize {
        self.spec().dim()
    }
}

impl fmt::Display for TowerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One generator of a tower: `name^degree = rule`, where the rule is a list of
/// `(exponents over all generators, integer coefficient)` terms.
#[derive(Clone, Debug)]
pub struct Generator {
    pub name: &'static str,
    pub degree: usize,
    pub rule: Vec<(Vec<usize>, i64)>,
}

impl Generator {
    pub fn new(name: &'static str, degree: usize, rule: Vec<(Vec<usize>, i64)>) -> Self {
        Generator { name, degree, rule }
    }
}

/// A tower `Q[g_0, ..., g_{n-1}] / (reduction rules)` with monomial basis
/// `prod g_i^{e_i}`, `0 <= e_i < degree_i`.
///
/// Basis index is mixed-radix with the first generator most significant, so
/// for `Q(alpha, beta)` the index of `alpha^i beta^j` is `6 i + j`.
#[derive(Debug)]
pub struct TowerSpec {
    id: TowerId,
    generators: Vec<Generator>,
    dim: usize,
    strides: Vec<usize>,
    /// `mul_table[i * dim + j]` is the sparse product `basis_i * basis_j`.
    mul_table: Vec<Vec<(usize, i64)>>,
}

impl TowerSpec {
    fn new(id: TowerId, generators: Vec<Generator>) -> Self {
        for (i, g) in generators.iter().enumerate() {
            assert!(g.degree >= 1, "generator {} has degree 0", g.name);
            for (exps, _) in &g.rule {
                assert_eq!(exps.len(), generators.len());
                assert!(exps[i] < g.degree, "rule for {} is not reduced", g.name);
                assert!(exps[i + 1..].iter().all(|&e| e == 0), "rule for {} uses later generators", g.name);
            }
        }
        let dim = generators.iter().map(|g| g.degree).product();
        let mut strides = vec![1; generators.len()];
        for i in (0..generators.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * generators[i + 1].degree;
        }
        let mut spec = TowerSpec { id, generators, dim, strides, mul_table: Vec::new() };
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let (ei, ej) = (spec.exponents(i), spec.exponents(j));
                let raw: Vec<usize> = ei.iter().zip(&ej).map(|(a, b)| a + b).collect();
                let mut acc = BTreeMap::new();
                spec.reduce_monomial(raw, 1, &mut acc);
                table.push(acc.into_iter().filter(|&(_, c)| c != 0).collect());
            }
        }
        spec.mul_table = table;
        spec
    }

    fn reduce_monomial(&self, exps: Vec<usize>, coeff: i64, acc: &mut BTreeMap<usize, i64>) {
        match (0..exps.len()).rev().find(|&i| exps[i] >= self.generators[i].degree) {
            None => *acc.entry(self.index_of(&exps)).or_insert(0) += coeff,
            Some(i) => {
                let g = &self.generators[i];
                for (rule_exps, c) in &g.rule {
                    let mut next = exps.clone();
                    next[i] -= g.degree;
                    for (n, r) in next.iter_mut().zip(rule_exps) {
                        *n += r;
                    }
                    let c = coeff.checked_mul(*c).expect("reduction coefficient overflow");
                    self.reduce_monomial(next, c, acc);
                }
            }
        }
    }

    pub fn id(&self) -> TowerId {
        self.id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn exponents(&self, index: usize) -> Vec<usize> {
        self.generators.iter().zip(&self.strides).map(|(g, s)| (index / s) % g.degree).collect()
    }

    pub fn index_of(&self, exps: &[usize]) -> usize {
        exps.iter().zip(&self.strides).map(|(e, s)| e * s).sum()
    }

    pub(crate) fn product(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.mul_table[i * self.dim + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(TowerId::Q.dim(), 1);
        assert_eq!(TowerId::EpsMu.dim(), 6);
        assert_eq!(TowerId::AlphaBeta.dim(), 18);
    }

    #[test]
    fn beta_cubed_squared() {
        let s = TowerId::AlphaBeta.spec();
        let b3 = s.index_of(&[0, 3]);
        assert_eq!(s.product(b3, b3), &[(0, -1), (b3, -1)]);
        let a1 = s.index_of(&[1, 0]);
        let a2 = s.index_of(&[2, 0]);
        assert_eq!(s.product(a1, a2), &[(0, 3)]);
    }

    #[test]
    fn parse_roundtrip() {
        for t in TowerId::ALL {
            assert_eq!(TowerId::parse(t.as_str()).unwrap(), t);
        }
        assert!(TowerId::parse("Q_gamma").is_err());
    }
}
