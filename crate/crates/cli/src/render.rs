//! JSON, CSV and plain-text renderings of each artifact. JSON is canonical;
//! CSV flattens field elements to `c0;c1;...` coefficient strings.

use std::fmt::Write as _;

use fermat_cubic::arrangements::{ConicCatalog, ShadowCensus, TangentReport};
use fermat_cubic::catalogs::PointCatalog;
use fermat_cubic::field::FieldElement;
use fermat_cubic::io::{CatalogFile, CensusFile, ConicFile, TangentFile};
use fermat_cubic::projective::ProjPoint;
use fermat_cubic::verify::VerificationReport;
use serde::Serialize;

use crate::{CliError, Format};

fn failure(e: impl std::fmt::Display) -> CliError {
    CliError::Verification(format!("rendering output: {e}"))
}

fn json(value: &impl Serialize) -> Result<Vec<u8>, CliError> {
    let mut bytes = serde_json::to_vec(value).map_err(failure)?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(failure)?;
    for row in rows {
        w.write_record(&row).map_err(failure)?;
    }
    w.into_inner().map_err(failure)
}

fn flat(coords: &[FieldElement]) -> Vec<String> {
    coords.iter().map(FieldElement::to_coeff_string).collect()
}

fn joined(indices: &[usize]) -> String {
    indices.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn point_row(i: usize, p: &ProjPoint) -> Vec<String> {
    let mut row = vec![i.to_string()];
    row.extend(flat(p.coords()));
    row
}

pub fn catalog(c: &PointCatalog, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => json(&CatalogFile::from(c)),
        Format::Csv => csv(&["index", "x", "y", "z"], c.points().iter().enumerate().map(|(i, p)| point_row(i, p))),
        Format::Text => {
            let mut s = format!("{} catalog over {}: {} points\n", c.kind(), c.tower(), c.len());
            for (i, p) in c.points().iter().enumerate() {
                let _ = writeln!(s, "{i:>4}  {p}");
            }
            Ok(s.into_bytes())
        }
    }
}

pub fn tangents(r: &TangentReport, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => json(&TangentFile::from(r)),
        Format::Csv => csv(
            &["index", "x", "y", "z", "u", "v", "w", "residual_kind", "residual_index"],
            r.entries.iter().enumerate().map(|(i, e)| {
                let mut row = point_row(i, &e.base);
                row.extend(flat(e.line.coeffs()));
                row.extend([e.residual_kind.to_string(), e.residual_index.to_string()]);
                row
            }),
        ),
        Format::Text => {
            let mut s = format!("tangents at {} points\n", r.kind);
            for (i, e) in r.entries.iter().enumerate() {
                let _ = writeln!(s, "{i:>4}  {} -> {} {} {}", e.base, e.residual_kind, e.residual_index, e.residual);
            }
            for o in &r.orbits {
                let _ = writeln!(s, "orbit {o:?}");
            }
            Ok(s.into_bytes())
        }
    }
}

pub fn conics(c: &ConicCatalog, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => json(&ConicFile::from(c)),
        Format::Csv => csv(
            &["index", "i", "j", "x2", "y2", "z2", "xy", "xz", "yz"],
            c.conics.iter().zip(&c.pairs).enumerate().map(|(k, (o, (i, j)))| {
                let mut row = vec![k.to_string(), i.to_string(), j.to_string()];
                row.extend(flat(o.conic.coeffs()));
                row
            }),
        ),
        Format::Text => {
            let mut s = format!("{} osculating conics at {} points\n", c.len(), c.kind);
            for (k, (o, (i, j))) in c.conics.iter().zip(&c.pairs).enumerate() {
                let coeffs: Vec<String> = o.conic.coeffs().iter().map(|x| x.to_string()).collect();
                let _ = writeln!(s, "{k:>4}  ({i}, {j})  [{}]", coeffs.join(", "));
            }
            Ok(s.into_bytes())
        }
    }
}

pub fn census(c: &ShadowCensus, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => json(&CensusFile::from(c)),
        Format::Csv => csv(
            &["index", "x", "y", "z", "count", "conics"],
            c.points.iter().enumerate().map(|(i, p)| {
                let mut row = point_row(i, &p.point);
                row.extend([p.count.to_string(), joined(&p.conics)]);
                row
            }),
        ),
        Format::Text => {
            let mut s = format!("{} points on at least two {} conics\nstrata {:?}\n", c.total(), c.kind, c.strata);
            let local = c.local_strata();
            if local != c.strata {
                let _ = writeln!(s, "strata among conics sharing a base point {local:?}");
            }
            for (i, p) in c.points.iter().enumerate() {
                let _ = writeln!(s, "{i:>5}  {}  {}", p.count, p.point);
            }
            Ok(s.into_bytes())
        }
    }
}

#[derive(Serialize)]
struct CheckRow<'a> {
    name: &'a str,
    anchor: &'a str,
    passed: bool,
    expected: &'a str,
    computed: &'a str,
}

pub fn report(r: &VerificationReport, format: Format) -> Result<String, CliError> {
    let rows = r.checks.iter().map(|c| CheckRow {
        name: c.name,
        anchor: c.anchor,
        passed: c.passed,
        expected: &c.expected,
        computed: &c.computed,
    });
    let bytes = match format {
        Format::Text => return Ok(r.to_string()),
        Format::Json => json(&rows.collect::<Vec<_>>())?,
        Format::Csv => csv(
            &["name", "anchor", "status", "expected", "computed"],
            rows.map(|c| {
                let status = if c.passed { "PASS" } else { "FAIL" };
                vec![c.name.into(), c.anchor.into(), status.into(), c.expected.into(), c.computed.into()]
            }),
        )?,
    };
    String::from_utf8(bytes).map_err(failure)
}
