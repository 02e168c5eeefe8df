use crate::catalogs::{PointCatalog, PointKind};
use crate::error::{Error, Result};
use crate::projective::{line_residual_point, tangent_line, Line, ProjPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentEntry {
    pub base: ProjPoint,
    pub line: Line,
    pub residual: ProjPoint,
    pub residual_kind: PointKind,
    /// Index of the residual in the catalog of `residual_kind`.
    pub residual_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentReport {
    pub kind: PointKind,
    pub entries: Vec<TangentEntry>,
    /// For each point of the residual catalog, how many tangents end there.
    pub residual_incidence: Vec<usize>,
    /// Cycles of the tangent map on type-9 points, as catalog indices.
    pub orbits: Vec<[usize; 3]>,
}

impl TangentReport {
    /// The tangent map `base index -> residual index`.
    pub fn residual_map(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.residual_index).collect()
    }
}

/// Tangent lines at every point of `catalog` and their third intersection
/// with the cubic.
///
/// Sextactic tangents must end at a flex of `flexes`; type-9 tangents must
/// end at another type-9 point, and the resulting map must split into
/// 3-cycles.
pub fn tangent_analysis(catalog: &PointCatalog, flexes: &PointCatalog) -> Result<TangentReport> {
    let target = match catalog.kind() {
        PointKind::Sextactic => flexes,
        PointKind::Type9 => catalog,
        PointKind::Flex => return Err(Error::contract("tangents at flexes have no residual point")),
    };
    if flexes.kind() != PointKind::Flex || flexes.tower() != catalog.tower() {
        return Err(Error::contract("flex catalog must share the tower of the analysed catalog"));
    }
    let mut entries = Vec::with_capacity(catalog.len());
    for p in catalog.points() {
        let line = tangent_line(p)?;
        let residual = line_residual_point(&line, p, 2)?
            .ok_or_else(|| Error::TheoremViolation(format!("tangent at {p} has contact 3")))?;
        let residual_index = target.index_of(&residual).ok_or_else(|| {
            Error::TheoremViolation(format!("tangent residual {residual} of {p} is not a {} point", target.kind()))
        })?;
        entries.push(TangentEntry { base: p.clone(), line, residual, residual_kind: target.kind(), residual_index });
    }
    let mut residual_incidence = vec![0; target.len()];
    for e in &entries {
        residual_incidence[e.residual_index] += 1;
    }
    let mut report = TangentReport { kind: catalog.kind(), entries, residual_incidence, orbits: vec![] };
    match catalog.kind() {
        PointKind::Sextactic => {
            if report.residual_incidence.iter().any(|&k| k != 3) {
                return Err(Error::TheoremViolation(format!(
                    "flexes receive {:?} tangents, expected 3 each",
                    report.residual_incidence
                )));
            }
        }
        _ => report.orbits = three_cycles(&report.residual_map())?,
    }
    Ok(report)
}

/// Splits a self-map into 3-cycles, each listed from its smallest index.
fn three_cycles(map: &[usize]) -> Result<Vec<[usize; 3]>> {
    let mut seen = vec![false; map.len()];
    let mut orbits = Vec::new();
    for start in 0..map.len() {
        if seen[start] {
            continue;
        }
        let (a, b) = (map[start], map[map[start]]);
        if map[b] != start || a == start || b == start {
            return Err(Error::TheoremViolation(format!("point {start} does not lie on a 3-cycle of the tangent map")));
        }
        for i in [start, a, b] {
            seen[i] = true;
        }
        orbits.push([start, a, b]);
    }
    Ok(orbits)
}
