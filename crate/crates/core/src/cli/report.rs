//! The structured report and its aligned-table text rendering.
//!
//! Text output is rendered from the serialized JSON value, so the two forms
//! cannot disagree on a number.

use num_rational::BigRational;
use serde::Serialize;
use serde_json::Value;

use crate::audit::{self, AuditReport, CheckResult, EqualityWitness};
use crate::classify::ClassificationReport;
use crate::complex::SimplicialComplex;
use crate::face_ring::GradedBettiTable;
use crate::field::FieldSpec;

pub const SCHEMA_VERSION: u32 = 1;

/// JSON Schema for every document the CLI emits with `--json`.
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub command: String,
    pub input: InputInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vectors: Option<Vectors>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub homology: Vec<HomologyView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graded_betti: Option<GradedBettiView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<AuditView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub facering: Option<Value>,
    pub skipped: Vec<SkipNote>,
}

impl ReportDocument {
    pub fn new(command: &str, source: &str, complex: &SimplicialComplex) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input: InputInfo {
                source: source.to_string(),
                n: complex.n(),
                dim: complex.dim(),
                facets: complex.facets().len(),
                labels: complex.labels().iter().map(ToString::to_string).collect(),
            },
            classification: None,
            vectors: None,
            homology: Vec::new(),
            graded_betti: None,
            audit: None,
            facering: None,
            skipped: Vec::new(),
        }
    }

    pub fn skip(&mut self, item: &str, reason: impl ToString) {
        self.skipped.push(SkipNote { item: item.to_string(), reason: reason.to_string() });
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report documents serialize")
    }
}

#[derive(Debug, Serialize)]
pub struct InputInfo {
    pub source: String,
    pub n: usize,
    pub dim: Option<isize>,
    pub facets: usize,
    pub labels: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct SkipNote {
    pub item: String,
    pub reason: String,
}

/// Classification with faces written in user labels.
#[derive(Debug, Serialize)]
pub struct ClassificationView {
    pub field: FieldSpec,
    pub pure: bool,
    pub connected: bool,
    pub pseudomanifold: bool,
    pub normal_pseudomanifold: Option<bool>,
    pub semi_eulerian: Option<bool>,
    pub eulerian: Option<bool>,
    pub homology_manifold: Option<bool>,
    pub manifold_with_boundary: Option<bool>,
    pub homology_sphere: Option<bool>,
    pub homology_ball: Option<bool>,
    pub orientable: Option<bool>,
    pub boundary_facets: Option<usize>,
    pub balanced: bool,
    /// Color of each vertex, in the order of `input.labels`.
    pub coloring: Option<Vec<usize>>,
    pub flag: Option<bool>,
    pub missing_faces: Option<Vec<Vec<String>>>,
    pub neighborliness: usize,
    pub r_stackedness: Option<usize>,
    pub skipped: Vec<String>,
}

impl ClassificationView {
    pub fn new(c: &ClassificationReport, complex: &SimplicialComplex) -> Self {
        let labelled = |f: &crate::complex::Face| f.vertices().map(|v| complex.label(v).to_string()).collect();
        ClassificationView {
            field: c.field,
            pure: c.pure,
            connected: c.connected,
            pseudomanifold: c.pseudomanifold,
            normal_pseudomanifold: c.normal_pseudomanifold,
            semi_eulerian: c.semi_eulerian,
            eulerian: c.eulerian,
            homology_manifold: c.homology_manifold,
            manifold_with_boundary: c.manifold_with_boundary,
            homology_sphere: c.homology_sphere,
            homology_ball: c.homology_ball,
            orientable: c.orientable,
            boundary_facets: c.boundary.as_ref().filter(|b| !b.is_empty_complex()).map(|b| b.facets().len()),
            balanced: c.balanced.is_some(),
            coloring: c.balanced.as_ref().map(|col| col.0.clone()),
            flag: c.flag,
            missing_faces: c.missing_faces.as_ref().map(|m| m.iter().map(labelled).collect()),
            neighborliness: c.neighborliness,
            r_stackedness: c.r_stackedness,
            skipped: c.skipped.clone(),
        }
    }
}

/// Rationals are written `"p/q"`.
#[derive(Debug, Serialize)]
pub struct Vectors {
    pub field: FieldSpec,
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    pub g: Vec<i64>,
    pub h1: Vec<i64>,
    pub h2: Vec<i64>,
    pub gamma: Option<Vec<i64>>,
    pub gtilde: Vec<i64>,
    pub sigma: Option<Vec<String>>,
    pub mu: Option<Vec<String>>,
    pub short_h: Option<Vec<i64>>,
}

pub fn ratios(v: &[BigRational]) -> Vec<String> {
    v.iter().map(audit::ratio_string).collect()
}

#[derive(Debug, Serialize)]
pub struct HomologyView {
    pub field: FieldSpec,
    /// `β_{-1}, β_0, …`
    pub betti: Vec<u64>,
    pub reduced_euler: i64,
}

#[derive(Debug, Serialize)]
pub struct GradedBettiView {
    pub field: FieldSpec,
    pub entries: Vec<BettiEntry>,
    /// σ recovered from the table.
    pub sigma: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub value: u64,
}

impl GradedBettiView {
    pub fn new(field: FieldSpec, table: &GradedBettiTable, sigma_len: usize) -> Self {
        GradedBettiView {
            field,
            entries: table.entries.iter().map(|(&(i, j), &value)| BettiEntry { i, j, value }).collect(),
            sigma: ratios(&table.sigma(sigma_len)),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AuditView {
    pub fields: Vec<FieldSpec>,
    pub seed: u64,
    pub exit_code: i32,
    pub theorem_failures: usize,
    pub conjecture_failures: usize,
    pub resource_skips: usize,
    pub checks: Vec<CheckResult>,
    pub equality_witnesses: Vec<EqualityWitness>,
}

impl AuditView {
    pub fn new(report: &AuditReport, strict: bool) -> Self {
        AuditView {
            fields: report.fields.clone(),
            seed: report.seed,
            exit_code: report.exit_code(strict),
            theorem_failures: report.theorem_failures().count(),
            conjecture_failures: report.conjecture_failures().count(),
            resource_skips: report.resource_skips().count(),
            checks: report.checks.clone(),
            equality_witnesses: audit::equality_witnesses(report),
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(" "),
        Value::Number(n) => n.to_string(),
        Value::Object(_) => v.to_string(),
    }
}

/// Left-aligned columns separated by two spaces.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::from("  ");
        for (c, cell) in r.iter().enumerate() {
            line.push_str(cell);
            if c + 1 < r.len() {
                line.push_str(&" ".repeat(widths[c] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn object_rows(obj: &Value, skip: &[&str]) -> Vec<Vec<String>> {
    obj.as_object()
        .map(|m| m.iter().filter(|(k, _)| !skip.contains(&k.as_str())).map(|(k, v)| vec![k.clone(), scalar(v)]).collect())
        .unwrap_or_default()
}

fn betti_table(gb: &Value) -> String {
    let mut rows = vec![vec!["i".into(), "j".into(), "value".into()]];
    for e in gb["entries"].as_array().into_iter().flatten() {
        rows.push(vec![scalar(&e["i"]), scalar(&e["j"]), scalar(&e["value"])]);
    }
    rows.push(vec!["sigma".into(), scalar(&gb["sigma"])]);
    table(&rows)
}

pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    let input = &doc["input"];
    out.push_str(&format!(
        "{}: {}  n={}  dim={}  facets={}\n",
        scalar(&doc["command"]),
        scalar(&input["source"]),
        scalar(&input["n"]),
        scalar(&input["dim"]),
        scalar(&input["facets"])
    ));
    if let Some(c) = doc.get("classification") {
        out.push_str(&format!("\nclassification over {}\n", scalar(&c["field"])));
        out.push_str(&table(&object_rows(c, &["field", "missing_faces", "skipped"])));
        if let Some(m) = c["missing_faces"].as_array() {
            let faces: Vec<String> = m.iter().map(|f| format!("{{{}}}", scalar(f).replace(' ', ","))).collect();
            out.push_str(&table(&[vec!["missing_faces".into(), faces.join(" ")]]));
        }
    }
    if let Some(v) = doc.get("vectors") {
        out.push_str(&format!("\nvectors over {}\n", scalar(&v["field"])));
        out.push_str(&table(&object_rows(v, &["field"])));
    }
    if let Some(hs) = doc.get("homology").and_then(Value::as_array) {
        out.push_str("\nhomology\n");
        let mut rows = vec![vec!["field".into(), "betti (from -1)".into(), "reduced_euler".into()]];
        rows.extend(hs.iter().map(|h| vec![scalar(&h["field"]), scalar(&h["betti"]), scalar(&h["reduced_euler"])]));
        out.push_str(&table(&rows));
    }
    if let Some(gb) = doc.get("graded_betti") {
        out.push_str(&format!("\ngraded betti over {}\n", scalar(&gb["field"])));
        out.push_str(&betti_table(gb));
    }
    if let Some(f) = doc.get("facering") {
        out.push_str(&format!("\nface ring: {}\n", scalar(&f["kind"])));
        out.push_str(&table(&object_rows(f, &["kind", "weak", "strong", "entries", "sigma"])));
        if f.get("entries").is_some() {
            out.push_str(&betti_table(f));
        }
        for key in ["weak", "strong"] {
            if let Some(maps) = f.get(key).and_then(Value::as_array) {
                let mut rows =
                    vec![vec![format!("{key} map"), "power".into(), "source".into(), "target".into(), "rank".into()]];
                for m in maps {
                    rows.push(vec![
                        format!("degree {}", scalar(&m["from_degree"])),
                        scalar(&m["power"]),
                        scalar(&m["source"]),
                        scalar(&m["target"]),
                        scalar(&m["rank"]),
                    ]);
                }
                out.push_str(&table(&rows));
            }
        }
    }
    if let Some(a) = doc.get("audit") {
        out.push_str(&format!(
            "\naudit over {}  seed={}  theorem failures={}  conjecture failures={}  resource skips={}  exit={}\n",
            scalar(&a["fields"]),
            scalar(&a["seed"]),
            scalar(&a["theorem_failures"]),
            scalar(&a["conjecture_failures"]),
            scalar(&a["resource_skips"]),
            scalar(&a["exit_code"])
        ));
        let mut rows = vec![["check", "field", "status", "verdict", "slack", "detail"].map(String::from).to_vec()];
        for c in a["checks"].as_array().into_iter().flatten() {
            let mut detail = Vec::new();
            for key in ["reason", "note"] {
                if let Some(s) = c[key].as_str() {
                    detail.push(s.to_string());
                }
            }
            if let Some(w) = c["witnesses"].as_array().filter(|w| !w.is_empty()) {
                detail.push(format!("at {}", w.iter().map(scalar).collect::<Vec<_>>().join(", ")));
            }
            rows.push(vec![
                scalar(&c["id"]),
                scalar(&c["field"]),
                scalar(&c["status"]),
                scalar(&c["verdict"]),
                scalar(&c["slack"]),
                detail.join("; "),
            ]);
        }
        out.push_str(&table(&rows));
        if let Some(ws) = a["equality_witnesses"].as_array().filter(|w| !w.is_empty()) {
            out.push_str("\nequality\n");
            let rows: Vec<Vec<String>> = ws
                .iter()
                .map(|w| {
                    let confirmed = match &w["confirmed"] {
                        Value::Bool(true) => "confirmed",
                        Value::Bool(false) => "NOT confirmed",
                        _ => "unverified",
                    };
                    vec![scalar(&w["id"]), scalar(&w["field"]), scalar(&w["annotation"]), confirmed.into()]
                })
                .collect();
            out.push_str(&table(&rows));
        }
    }
    if let Some(s) = doc["skipped"].as_array().filter(|s| !s.is_empty()) {
        out.push_str("\nskipped\n");
        let rows: Vec<Vec<String>> = s.iter().map(|n| vec![scalar(&n["item"]), scalar(&n["reason"])]).collect();
        out.push_str(&table(&rows));
    }
    out
}
