//! JSON schemas for field elements, geometric objects, catalogs and reports.
//!
//! Integers are written as decimal strings so no precision is lost. Report
//! files are described by plain `*File` structs, which are the schema.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arrangements::{ConicCatalog, ShadowCensus, TangentReport};
use crate::catalogs::{PointCatalog, PointKind};
use crate::elliptic::ECPoint;
use crate::error::{Error, Result};
use crate::field::{FieldElement, Rational, TowerId};
use crate::poly::HomForm;
use crate::projective::{Conic, Line, ProjPoint};

#[derive(Serialize, Deserialize)]
struct FieldElementWire {
    tower: String,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs = self.coeffs().iter().map(|c| [c.numer().to_string(), c.denom().to_string()]).collect();
        FieldElementWire { tower: self.tower().as_str().to_string(), coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = FieldElementWire::deserialize(d)?;
        let tower = TowerId::parse(&wire.tower).map_err(D::Error::custom)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|[n, d]| {
                let n: BigInt = n.parse().map_err(|_| format!("bad integer {n:?}"))?;
                let d: BigInt = d.parse().map_err(|_| format!("bad integer {d:?}"))?;
                if d.is_zero() {
                    return Err("zero denominator".to_string());
                }
                Ok(Rational::new(n, d))
            })
            .collect::<Result<Vec<_>, String>>()
            .map_err(D::Error::custom)?;
        FieldElement::from_coeffs(tower, &coeffs).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct ProjPointWire {
    coords: [FieldElement; 3],
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ProjPointWire { coords: self.coords().clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        ProjPoint::from_coords(ProjPointWire::deserialize(d)?.coords).map_err(D::Error::custom)
    }
}

impl Serialize for Conic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Conic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Conic::new(<[FieldElement; 6]>::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for Line {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Line {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [u, v, w] = <[FieldElement; 3]>::deserialize(d)?;
        Line::new(u, v, w).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ECPointWire {
    Infinity { inf: bool },
    Affine { x: FieldElement, y: FieldElement },
}

impl Serialize for ECPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ECPoint::Infinity => ECPointWire::Infinity { inf: true },
            ECPoint::Affine { x, y } => ECPointWire::Affine { x: x.clone(), y: y.clone() },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ECPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match ECPointWire::deserialize(d)? {
            ECPointWire::Infinity { inf: true } => Ok(ECPoint::Infinity),
            ECPointWire::Infinity { inf: false } => Err(D::Error::custom("\"inf\" must be true")),
            ECPointWire::Affine { x, y } => Ok(ECPoint::affine(x, y)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    exps: [u32; 3],
    coeff: FieldElement,
}

impl Serialize for HomForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermWire> = self.terms().map(|(e, c)| TermWire { exps: *e, coeff: c.clone() }).collect();
        terms.serialize(s)
    }
}

/// Reads a form from its term list. The degree is taken from the first term,
/// so the zero form cannot be represented and is rejected.
impl<'de> Deserialize<'de> for HomForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermWire>::deserialize(d)?;
        let first = terms.first().ok_or_else(|| D::Error::custom("empty term list"))?;
        let (tower, degree) = (first.coeff.tower(), first.exps.iter().sum());
        HomForm::from_terms(tower, degree, terms.into_iter().map(|t| (t.exps, t.coeff))).map_err(D::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceFile {
    pub generators: Vec<ECPoint>,
    pub checks: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub kind: String,
    pub field: String,
    pub points: Vec<ProjPoint>,
    pub provenance: ProvenanceFile,
}

impl From<&PointCatalog> for CatalogFile {
    fn from(c: &PointCatalog) -> Self {
        let p = c.provenance();
        CatalogFile {
            kind: c.kind().as_str().to_string(),
            field: c.tower().as_str().to_string(),
            points: c.points().to_vec(),
            provenance: ProvenanceFile { generators: p.generators.clone(), checks: p.checks.clone() },
        }
    }
}

impl CatalogFile {
    /// Rebuilds the catalog, re-running every structural check.
    pub fn into_catalog(self) -> Result<PointCatalog> {
        let kind =
            PointKind::parse(&self.kind).ok_or_else(|| Error::Malformed(format!("unknown kind {:?}", self.kind)))?;
        let tower = TowerId::parse(&self.field)?;
        if self.points.iter().any(|p| p.tower() != tower) {
            return Err(Error::Malformed("point outside the declared field".into()));
        }
        let catalog = PointCatalog::new(kind, self.points, self.provenance.generators)?;
        if catalog.provenance().checks != self.provenance.checks {
            return Err(Error::Catalog("recorded checks differ from the revalidated ones".into()));
        }
        Ok(catalog)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentEntryFile {
    pub base: ProjPoint,
    pub line: Line,
    pub residual: ProjPoint,
    pub residual_kind: String,
    pub residual_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentFile {
    pub kind: String,
    pub entries: Vec<TangentEntryFile>,
    pub residual_incidence: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub orbits: Vec<[usize; 3]>,
}

impl From<&TangentReport> for TangentFile {
    fn from(r: &TangentReport) -> Self {
        TangentFile {
            kind: r.kind.as_str().to_string(),
            entries: r
                .entries
                .iter()
                .map(|e| TangentEntryFile {
                    base: e.base.clone(),
                    line: e.line.clone(),
                    residual: e.residual.clone(),
                    residual_kind: e.residual_kind.as_str().to_string(),
                    residual_index: e.residual_index,
                })
                .collect(),
            residual_incidence: r.residual_incidence.clone(),
            orbits: r.orbits.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicEntryFile {
    pub conic: Conic,
    pub base_points: [ProjPoint; 2],
    pub base_indices: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicFile {
    pub kind: String,
    pub total: usize,
    pub conics: Vec<ConicEntryFile>,
    /// Number of conics based at each catalog point.
    pub incidence: Vec<usize>,
}

impl From<&ConicCatalog> for ConicFile {
    fn from(c: &ConicCatalog) -> Self {
        ConicFile {
            kind: c.kind.as_str().to_string(),
            total: c.len(),
            conics: c
                .conics
                .iter()
                .zip(&c.pairs)
                .map(|(o, &(i, j))| ConicEntryFile {
                    conic: o.conic.clone(),
                    base_points: o.base_points.clone(),
                    base_indices: [i, j],
                })
                .collect(),
            incidence: c.incidence(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusPointFile {
    pub point: ProjPoint,
    pub count: usize,
    pub conics: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusFile {
    pub kind: String,
    pub total: usize,
    pub strata: BTreeMap<String, usize>,
    /// Strata when only conics sharing a base point are counted; present
    /// only when they differ from `strata`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub local_strata: Option<BTreeMap<String, usize>>,
    pub points: Vec<CensusPointFile>,
}

fn string_keys(m: &BTreeMap<usize, usize>) -> BTreeMap<String, usize> {
    m.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

impl From<&ShadowCensus> for CensusFile {
    fn from(c: &ShadowCensus) -> Self {
        let local = c.local_strata();
        CensusFile {
            kind: c.kind.as_str().to_string(),
            total: c.total(),
            strata: string_keys(&c.strata),
            local_strata: (local != c.strata).then(|| string_keys(&local)),
            points: c
                .points
                .iter()
                .map(|p| CensusPointFile { point: p.point.clone(), count: p.count, conics: p.conics.clone() })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_element_schema() {
        let e = FieldElement::from_ratio(TowerId::EpsMu, -1, 3);
        let json = serde_json::to_string(&e).unwrap();
        assert!(json.starts_with(r#"{"tower":"Q_eps_mu","coeffs":[["-1","3"],["0","1"]"#), "{json}");
        assert_eq!(serde_json::from_str::<FieldElement>(&json).unwrap(), e);
    }

    #[test]
    fn big_integers_survive() {
        let big = FieldElement::from_int(TowerId::Q, 3).pow(200);
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<FieldElement>(&json).unwrap(), big);
    }

    #[test]
    fn malformed_elements_are_rejected() {
        for bad in [
            r#"{"tower":"Q","coeffs":[["1","0"]]}"#,
            r#"{"tower":"Q","coeffs":[["1","1"],["1","1"]]}"#,
            r#"{"tower":"Q_gamma","coeffs":[["1","1"]]}"#,
            r#"{"tower":"Q","coeffs":[["x","1"]]}"#,
        ] {
            assert!(serde_json::from_str::<FieldElement>(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn ec_point_schema() {
        let json = serde_json::to_string(&ECPoint::Infinity).unwrap();
        assert_eq!(json, r#"{"inf":true}"#);
        assert_eq!(serde_json::from_str::<ECPoint>(&json).unwrap(), ECPoint::Infinity);
        assert!(serde_json::from_str::<ECPoint>(r#"{"inf":false}"#).is_err());
        let p = ECPoint::affine(FieldElement::from_int(TowerId::Q, 12), FieldElement::from_int(TowerId::Q, 36));
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.starts_with(r#"{"x":"#));
        assert_eq!(serde_json::from_str::<ECPoint>(&json).unwrap(), p);
    }

    #[test]
    fn form_schema() {
        let f = HomForm::fermat_second_hessian(TowerId::Q);
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.starts_with(r#"[{"exps":["#));
        assert_eq!(serde_json::from_str::<HomForm>(&json).unwrap(), f);
    }

    #[test]
    fn conic_is_a_six_entry_list() {
        let c = Conic::from_ints(TowerId::Q, [1, 1, -1, 0, 0, 0]).unwrap();
        let v: serde_json::Value = serde_json::to_value(&c).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 6);
        assert_eq!(serde_json::from_value::<Conic>(v).unwrap(), c);
    }
}
