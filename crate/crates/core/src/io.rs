//! The `.mfcc` text format and JSON/CSV table output.
//!
//! ```text
//! mfcc version=1 params=<n> field=<p>
//! cell <id> dim=<d> grade=<g1,...,gn> bd=<id>:<coeff>[,<id>:<coeff>...]
//! simplex <v1> <v2> ... <vk> grade=<g1,...,gn>
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. A file uses either
//! cell lines or simplex lines, never both.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::complex::{CellComplex, CellId, CellSpec};
use crate::field::PrimeField;
use crate::filtration::{FiltrationError, Grade, MultiFiltration};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: cell and simplex records cannot be mixed")]
    MixedModes { line: usize },
    #[error("validation failed: {0}")]
    ValidationFailed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellRecord {
    pub id: CellId,
    pub dim: usize,
    pub grade: Grade,
    pub boundary: Vec<(CellId, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexRecord {
    pub vertices: Vec<CellId>,
    pub grade: Grade,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Records {
    Cells(Vec<CellRecord>),
    Simplices(Vec<SimplexRecord>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MfccDocument {
    pub params: usize,
    pub field: u32,
    pub records: Records,
}

fn syntax(line: usize, message: impl Into<String>) -> IoError {
    IoError::Syntax { line, message: message.into() }
}

fn key_value<'a>(line: usize, token: &'a str, key: &str) -> Result<&'a str, IoError> {
    token
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| syntax(line, format!("expected {key}=..., found '{token}'")))
}

fn number<T: std::str::FromStr>(line: usize, s: &str, what: &str) -> Result<T, IoError> {
    s.parse().map_err(|_| syntax(line, format!("invalid {what} '{s}'")))
}

fn grade(line: usize, s: &str, n: usize) -> Result<Grade, IoError> {
    let g: Grade = s.parse().map_err(|_| syntax(line, format!("invalid grade '{s}'")))?;
    if g.n() != n {
        return Err(syntax(line, format!("grade '{s}' has {} coordinates, expected {n}", g.n())));
    }
    Ok(g)
}

pub fn parse_document(text: &str) -> Result<MfccDocument, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 4 || tokens[0] != "mfcc" {
        return Err(syntax(hline, "header must be 'mfcc version=1 params=<n> field=<p>'"));
    }
    if key_value(hline, tokens[1], "version")? != "1" {
        return Err(syntax(hline, "unsupported version"));
    }
    let params: usize = number(hline, key_value(hline, tokens[2], "params")?, "parameter count")?;
    if params == 0 {
        return Err(syntax(hline, "params must be at least 1"));
    }
    let field: u32 = number(hline, key_value(hline, tokens[3], "field")?, "field")?;
    PrimeField::new(u64::from(field)).map_err(|e| syntax(hline, e.to_string()))?;

    let mut cells = Vec::new();
    let mut simplices = Vec::new();
    for (ln, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens[0] {
            "cell" => {
                if !simplices.is_empty() {
                    return Err(IoError::MixedModes { line: ln });
                }
                if tokens.len() < 4 || tokens.len() > 5 {
                    return Err(syntax(ln, "expected 'cell <id> dim=<d> grade=<g> [bd=...]'"));
                }
                let id: CellId = number(ln, tokens[1], "cell id")?;
                let dim: usize = number(ln, key_value(ln, tokens[2], "dim")?, "dimension")?;
                let g = grade(ln, key_value(ln, tokens[3], "grade")?, params)?;
                let mut boundary = Vec::new();
                if let Some(bd) = tokens.get(4) {
                    let list = key_value(ln, bd, "bd")?;
                    for entry in list.split(',').filter(|e| !e.is_empty()) {
                        let (face, coeff) = entry
                            .split_once(':')
                            .ok_or_else(|| syntax(ln, format!("expected <id>:<coeff>, found '{entry}'")))?;
                        boundary.push((number(ln, face, "face id")?, number(ln, coeff, "coefficient")?));
                    }
                }
                cells.push(CellRecord { id, dim, grade: g, boundary });
            }
            "simplex" => {
                if !cells.is_empty() {
                    return Err(IoError::MixedModes { line: ln });
                }
                let (last, vertices) = tokens[1..]
                    .split_last()
                    .ok_or_else(|| syntax(ln, "expected 'simplex <v...> grade=<g>'"))?;
                if vertices.is_empty() {
                    return Err(syntax(ln, "simplex without vertices"));
                }
                let g = grade(ln, key_value(ln, last, "grade")?, params)?;
                let vertices = vertices
                    .iter()
                    .map(|v| number(ln, v, "vertex id"))
                    .collect::<Result<Vec<CellId>, _>>()?;
                simplices.push(SimplexRecord { vertices, grade: g });
            }
            other => return Err(syntax(ln, format!("unknown record '{other}'"))),
        }
    }
    let records = if simplices.is_empty() { Records::Cells(cells) } else { Records::Simplices(simplices) };
    Ok(MfccDocument { params, field, records })
}

pub fn write_document(doc: &MfccDocument) -> String {
    let mut out = format!("mfcc version=1 params={} field={}\n", doc.params, doc.field);
    match &doc.records {
        Records::Cells(cells) => {
            for c in cells {
                let _ = write!(out, "cell {} dim={} grade={}", c.id, c.dim, c.grade);
                if !c.boundary.is_empty() {
                    let bd: Vec<String> = c.boundary.iter().map(|(f, k)| format!("{f}:{k}")).collect();
                    let _ = write!(out, " bd={}", bd.join(","));
                }
                out.push('\n');
            }
        }
        Records::Simplices(simplices) => {
            for s in simplices {
                let vs: Vec<String> = s.vertices.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "simplex {} grade={}", vs.join(" "), s.grade);
            }
        }
    }
    out
}

/// Cell-mode document of a filtration, cells in `(dim, id)` order.
pub fn document_of(filt: &MultiFiltration) -> MfccDocument {
    let c = filt.complex();
    let f = c.field();
    let cells = (0..c.len())
        .map(|pos| CellRecord {
            id: c.cell(pos).id,
            dim: c.cell(pos).dim,
            grade: filt.grade_at(pos).clone(),
            boundary: c.faces(pos).iter().map(|&(fp, k)| (c.cell(fp).id, f.signed(k))).collect(),
        })
        .collect();
    MfccDocument { params: filt.n(), field: f.characteristic(), records: Records::Cells(cells) }
}

pub fn write_mfcc(filt: &MultiFiltration) -> String {
    write_document(&document_of(filt))
}

/// Simplex-mode document of a filtration whose complex is simplicial with
/// the standard alternating incidences, listing every simplex.
pub fn simplicial_document(filt: &MultiFiltration) -> Option<MfccDocument> {
    let c = filt.complex();
    let f = c.field();
    let mut vertices: Vec<Vec<CellId>> = Vec::with_capacity(c.len());
    for pos in 0..c.len() {
        let cell = c.cell(pos);
        let faces = c.faces(pos);
        let vs = if cell.dim == 0 {
            vec![cell.id]
        } else {
            let mut vs: Vec<CellId> = faces.iter().flat_map(|&(fp, _)| vertices[fp].iter().copied()).collect();
            vs.sort_unstable();
            vs.dedup();
            if faces.len() != cell.dim + 1 || vs.len() != cell.dim + 1 {
                return None;
            }
            for &(fp, k) in faces {
                let missing = vs.iter().position(|v| !vertices[fp].contains(v))?;
                if k != f.sign(missing) {
                    return None;
                }
            }
            vs
        };
        vertices.push(vs);
    }
    let simplices = vertices
        .into_iter()
        .enumerate()
        .map(|(pos, vertices)| SimplexRecord { vertices, grade: filt.grade_at(pos).clone() })
        .collect();
    Some(MfccDocument { params: filt.n(), field: f.characteristic(), records: Records::Simplices(simplices) })
}

/// Simplex mode when the complex is simplicial, cell mode otherwise.
pub fn write_portable(filt: &MultiFiltration) -> String {
    write_document(&simplicial_document(filt).unwrap_or_else(|| document_of(filt)))
}

/// Builds and validates the filtration of a document. `field` overrides the
/// characteristic declared in the header.
pub fn to_filtration(
    doc: &MfccDocument,
    field: Option<PrimeField>,
) -> Result<(MultiFiltration, Vec<Vec<CellId>>), IoError> {
    let field = match field {
        Some(f) => f,
        None => PrimeField::new(u64::from(doc.field)).map_err(|e| IoError::ValidationFailed(e.to_string()))?,
    };
    let invalid = |e: FiltrationError| IoError::ValidationFailed(e.to_string());
    let (filt, added) = match &doc.records {
        Records::Cells(cells) => {
            let specs = cells
                .iter()
                .map(|c| CellSpec { id: c.id, dim: c.dim, boundary: c.boundary.clone() })
                .collect();
            let complex =
                CellComplex::new(field, specs).map_err(|e| IoError::ValidationFailed(e.to_string()))?;
            let entrance: HashMap<CellId, Grade> = cells.iter().map(|c| (c.id, c.grade.clone())).collect();
            (MultiFiltration::new(complex, doc.params, &entrance).map_err(invalid)?, Vec::new())
        }
        Records::Simplices(simplices) => {
            let list: Vec<(Vec<CellId>, Grade)> =
                simplices.iter().map(|s| (s.vertices.clone(), s.grade.clone())).collect();
            MultiFiltration::from_graded_simplices(field, doc.params, &list).map_err(invalid)?
        }
    };
    let report = filt.complex().validate();
    if !report.is_ok() {
        return Err(IoError::ValidationFailed(format!(
            "incidence degree violations {:?}, boundary-squared violations {:?}",
            report.degree_violations, report.square_violations
        )));
    }
    let report = filt.validate_filtration();
    if !report.is_ok() {
        return Err(IoError::ValidationFailed(format!(
            "negative entrance grades at cells {:?}, non-monotone face pairs {:?}",
            report.unbounded, report.non_monotone
        )));
    }
    Ok((filt, added))
}

pub fn parse(text: &str, field: Option<PrimeField>) -> Result<MultiFiltration, IoError> {
    to_filtration(&parse_document(text)?, field).map(|(f, _)| f)
}

#[derive(Debug, Clone, Serialize)]
pub struct TableEntry {
    pub grade: String,
    pub q: usize,
    pub p: Option<usize>,
    pub value: usize,
}

/// Rows of a table keyed by grade and degree (and Koszul index for Betti
/// tables) as sorted-key JSON.
pub fn table_json(kind: &str, n: usize, field: u32, rows: &[TableEntry]) -> String {
    let value = serde_json::json!({
        "kind": kind,
        "params": n,
        "field": field,
        "rows": rows,
    });
    serde_json::to_string_pretty(&value).expect("value serializes")
}

/// CSV with one column per grade coordinate.
pub fn table_csv(n: usize, rows: &[TableEntry]) -> String {
    let with_p = rows.iter().any(|r| r.p.is_some());
    let mut header: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    if with_p {
        header.push("p".into());
    }
    header.push("q".into());
    header.push("value".into());
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        let mut cols: Vec<String> = vec![r.grade.clone()];
        if let Some(p) = r.p {
            cols.push(p.to_string());
        }
        cols.push(r.q.to_string());
        cols.push(r.value.to_string());
        out.push_str(&cols.join(","));
        out.push('\n');
    }
    out
}
