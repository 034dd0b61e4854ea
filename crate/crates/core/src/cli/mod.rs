//! The `facenum` command line.
//!
//! Exit codes: 0 success, 2 theorem failure in an audit, 3 resource skip
//! under `--strict`, 64 usage, 65 unreadable or unsuitable data, 66 missing
//! input, 73 output not writable.

pub mod file;
pub mod report;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::audit::{self, AuditOptions};
use crate::classify::{self, ClassifyOptions, DEFAULT_FACE_CAP};
use crate::complex::SimplicialComplex;
use crate::constructions::{self, ConstructionSpec, Family, Provenance};
use crate::error::Error;
use crate::face_ring::{self, DEFAULT_HOCHSTER_CAP};
use crate::field::FieldSpec;
use crate::invariants::{self, DEFAULT_MU_CAP};

use report::{AuditView, ClassificationView, GradedBettiView, HomologyView, ReportDocument, Vectors};

pub const EXIT_OK: i32 = 0;
pub const EXIT_THEOREM_FAILURE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_CANT_CREATE: i32 = 73;

/// Comment prefix that records how a file was generated.
const CONSTRUCTION_TAG: &str = "construction:";
const BOUNDARY_TAG: &str = "boundary of construction:";

#[derive(Parser, Debug)]
#[command(name = "facenum", version, about = "Face numbers, homology and face-ring probes of simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a facet file for one of the built-in families.
    Construct(ConstructArgs),
    /// Classification, face vectors, homology and graded Betti numbers.
    Invariants(InvariantsArgs),
    /// Run every applicable inequality check.
    Audit(AuditArgs),
    /// Probe the Stanley-Reisner ring.
    Facering(FaceringArgs),
    /// Print the JSON Schema of `--json` output.
    Schema,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// Family tag, e.g. cyclic, stacked, klee-novik, bnd-klee-novik.
    family: String,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Operand of a barycentric subdivision, as `family key=value ...`.
    #[arg(long)]
    base: Option<String>,
    /// Summand of a connected sum; repeat for each.
    #[arg(long = "part")]
    parts: Vec<String>,
    /// Write the boundary complex instead.
    #[arg(long)]
    boundary: bool,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Caps {
    /// Largest vertex count whose 2^n induced subcomplexes are enumerated.
    #[arg(long, env = "FACENUM_MU_CAP", default_value_t = DEFAULT_MU_CAP)]
    mu_cap: usize,
    /// Face count above which link-based classification is skipped.
    #[arg(long, default_value_t = DEFAULT_FACE_CAP)]
    face_cap: usize,
}

#[derive(Args, Debug)]
struct InvariantsArgs {
    /// Facet file, or `-` for stdin.
    file: PathBuf,
    /// q, 2, 3, p:<prime> or GF(<prime>).
    #[arg(long, env = "FACENUM_FIELD", default_value = "q", value_parser = parse_field)]
    field: FieldSpec,
    #[command(flatten)]
    caps: Caps,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct AuditArgs {
    file: PathBuf,
    /// Comma-separated coefficient fields.
    #[arg(long, value_delimiter = ',', default_value = "q", value_parser = parse_field)]
    fields: Vec<FieldSpec>,
    /// Treat skipped-for-resources checks as an error (exit 3).
    #[arg(long)]
    strict: bool,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[command(flatten)]
    caps: Caps,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RingQuery {
    /// Hilbert function of an Artinian reduction.
    Hilbert,
    /// Ranks of the weak and strong Lefschetz maps.
    Wlp,
    /// Socle dimensions of an Artinian reduction.
    Socle,
    /// Graded Betti numbers by Hochster's formula.
    Betti,
}

#[derive(Args, Debug)]
struct FaceringArgs {
    query: RingQuery,
    file: PathBuf,
    #[arg(long, env = "FACENUM_FIELD", default_value = "p:32003", value_parser = parse_field)]
    field: FieldSpec,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Vertex cap for the Hochster enumeration.
    #[arg(long, default_value_t = DEFAULT_HOCHSTER_CAP)]
    cap: usize,
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    json: bool,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure that ends the command with a specific exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl ToString) -> Self {
        Failure { code, message: message.to_string() }
    }
}

fn data_error(e: Error) -> Failure {
    Failure::new(EXIT_DATA, e)
}

pub fn run() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one invocation with explicit streams and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Construct(a) => construct(a, out, err),
        Command::Invariants(a) => invariants_cmd(a, out),
        Command::Audit(a) => audit_cmd(a, out),
        Command::Facering(a) => facering_cmd(a, out),
        Command::Schema => write_out(out, report::REPORT_SCHEMA).map(|_| EXIT_OK),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "facenum: {}", f.message);
            f.code
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::new(EXIT_CANT_CREATE, format!("writing output: {e}")))
}

fn emit(doc: &ReportDocument, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let value = doc.to_json();
    let text = if json {
        let mut s = serde_json::to_string_pretty(&value).expect("JSON values print");
        s.push('\n');
        s
    } else {
        report::render_text(&value)
    };
    write_out(out, &text)
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::new(EXIT_NO_INPUT, format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| {
        let code = if e.kind() == io::ErrorKind::InvalidData { EXIT_DATA } else { EXIT_NO_INPUT };
        Failure::new(code, format!("{}: {e}", path.display()))
    })
}

fn load(path: &Path) -> Result<(String, SimplicialComplex), Failure> {
    let text = read_input(path)?;
    let complex = file::parse_complex(&text).map_err(|e| Failure::new(EXIT_DATA, format!("{}: {e}", path.display())))?;
    if complex.is_void() {
        return Err(Failure::new(EXIT_DATA, format!("{}: the file lists no faces", path.display())));
    }
    Ok((text, complex))
}

fn spec_from_args(a: &ConstructArgs) -> crate::Result<ConstructionSpec> {
    let family: Family = a.family.parse()?;
    let mut spec = ConstructionSpec::new(family);
    spec.d = a.d;
    spec.n = a.n;
    spec.k = a.k;
    spec.r = a.r;
    spec.m = a.m;
    spec.seed = a.seed;
    if let Some(b) = &a.base {
        spec = spec.base(b.parse()?);
    }
    spec.parts = a.parts.iter().map(|p| p.parse()).collect::<crate::Result<_>>()?;
    Ok(spec)
}

fn construct(a: ConstructArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let usage = |e: Error| Failure::new(EXIT_USAGE, e);
    let spec = spec_from_args(&a).map_err(usage)?;
    let built = constructions::build(&spec).map_err(usage)?;
    let (complex, header) = if a.boundary {
        let b = classify::boundary_complex(&built.complex, FieldSpec::Rationals).map_err(usage)?;
        (b, format!("{BOUNDARY_TAG} {spec}"))
    } else {
        (built.complex, format!("{CONSTRUCTION_TAG} {spec}"))
    };
    let text = file::write_complex(&complex, &[header]);
    let f = complex.f_vector();
    let summary = format!(
        "{spec}{}: n={} dim={} facets={} f=({})\n",
        if a.boundary { " (boundary)" } else { "" },
        complex.n(),
        complex.dim().unwrap_or(-1),
        complex.facets().len(),
        f.entries().iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    );
    match &a.out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::new(EXIT_CANT_CREATE, format!("{}: {e}", path.display())))?;
            write_out(out, &summary)?;
        }
        None => {
            write_out(out, &text)?;
            let _ = err.write_all(summary.as_bytes());
        }
    }
    Ok(EXIT_OK)
}

/// Provenance from a `construction:` comment, trusted only if rebuilding the
/// named construction reproduces the file's facets.
fn recover_provenance(text: &str, complex: &SimplicialComplex) -> Option<Provenance> {
    let spec: ConstructionSpec = text
        .lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .find_map(|c| c.trim().strip_prefix(CONSTRUCTION_TAG))?
        .parse()
        .ok()?;
    let built = constructions::build(&spec).ok()?;
    (file::write_complex(&built.complex, &[]) == file::write_complex(complex, &[])).then_some(built.provenance)
}

fn invariants_cmd(a: InvariantsArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (_, complex) = load(&a.file)?;
    let field = a.field;
    let mut doc = ReportDocument::new("invariants", &a.file.display().to_string(), &complex);

    let options = ClassifyOptions { face_cap: a.caps.face_cap };
    let class = classify::classify_with(&complex, field, &options).map_err(data_error)?;
    doc.classification = Some(ClassificationView::new(&class, &complex));

    let corrected = invariants::corrected_h(&complex, field).map_err(data_error)?;
    let gamma = match invariants::gamma_vector(&corrected.h) {
        Ok(g) => Some(g),
        Err(e) => {
            doc.skip("gamma", e);
            None
        }
    };
    let short_h = match invariants::short_h(&complex) {
        Ok(v) => Some(v),
        Err(e) => {
            doc.skip("short_h", e);
            None
        }
    };
    let (sigma, mu) = match invariants::mu_vector(&complex, field, a.caps.mu_cap) {
        Ok(ms) => {
            if ms.sigma.is_none() {
                doc.skip("sigma", format!("{} vertices exceed the cap {}", complex.n(), a.caps.mu_cap));
            }
            (ms.sigma.map(|s| report::ratios(&s)), Some(report::ratios(&ms.mu)))
        }
        Err(e) => {
            doc.skip("sigma", &e);
            doc.skip("mu", e);
            (None, None)
        }
    };
    doc.vectors = Some(Vectors {
        field,
        f: complex.f_vector().entries().to_vec(),
        g: invariants::g_from_h(&corrected.h),
        h: corrected.h,
        h1: corrected.h_prime,
        h2: corrected.h_double_prime,
        gamma,
        gtilde: corrected.tilde_g,
        sigma,
        mu,
        short_h,
    });
    doc.homology.push(HomologyView {
        field,
        betti: class.betti.entries().to_vec(),
        reduced_euler: class.betti.alternating_sum(),
    });
    match face_ring::graded_betti_hochster(&complex, field, a.caps.mu_cap) {
        Ok(t) => doc.graded_betti = Some(GradedBettiView::new(field, &t, complex.d() + 1)),
        Err(e) => doc.skip("graded_betti", e),
    }
    emit(&doc, a.json, out)?;
    Ok(EXIT_OK)
}

fn audit_cmd(a: AuditArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (text, complex) = load(&a.file)?;
    let opts = AuditOptions {
        fields: a.fields,
        mu_cap: a.caps.mu_cap,
        face_cap: a.caps.face_cap,
        seed: a.seed,
        provenance: recover_provenance(&text, &complex),
    };
    let report = audit::run_audit(&complex, &opts).map_err(data_error)?;
    let mut doc = ReportDocument::new("audit", &a.file.display().to_string(), &complex);
    doc.classification = Some(ClassificationView::new(report.classification(), &complex));
    for c in &report.classifications {
        doc.homology.push(HomologyView {
            field: c.field,
            betti: c.betti.entries().to_vec(),
            reduced_euler: c.betti.alternating_sum(),
        });
    }
    let view = AuditView::new(&report, a.strict);
    let code = view.exit_code;
    doc.audit = Some(view);
    emit(&doc, a.json, out)?;
    Ok(code)
}

fn facering_cmd(a: FaceringArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (_, complex) = load(&a.file)?;
    let field = a.field;
    let mut doc = ReportDocument::new("facering", &a.file.display().to_string(), &complex);
    let kind = format!("{:?}", a.query).to_lowercase();
    let outcome = facering_value(&complex, a.query, field, a.seed, a.cap);
    let code = match outcome {
        Ok(mut v) => {
            v["kind"] = kind.clone().into();
            v["field"] = field.to_string().into();
            doc.facering = Some(v);
            EXIT_OK
        }
        Err(e @ Error::Resource(_)) => {
            doc.skip(&kind, e);
            if a.strict {
                EXIT_RESOURCE
            } else {
                EXIT_OK
            }
        }
        Err(e) => return Err(data_error(e)),
    };
    emit(&doc, a.json, out)?;
    Ok(code)
}

fn facering_value(
    complex: &SimplicialComplex,
    query: RingQuery,
    field: FieldSpec,
    seed: u64,
    cap: usize,
) -> crate::Result<serde_json::Value> {
    use serde_json::json;
    let d = complex.d();
    Ok(match query {
        RingQuery::Hilbert => {
            let system = face_ring::random_lsop(complex, field, seed)?;
            let hilbert = face_ring::hilbert_artinian(complex, &system, d)?;
            json!({ "seed": seed, "attempts": system.attempts, "hilbert": hilbert, "h": invariants::h_vector(complex)? })
        }
        RingQuery::Socle => {
            let system = face_ring::random_lsop(complex, field, seed)?;
            let socle = face_ring::socle_dims(complex, &system)?;
            json!({ "seed": seed, "attempts": system.attempts, "socle": socle })
        }
        RingQuery::Wlp => {
            let probe = face_ring::lefschetz_probe(complex, field, seed)?;
            json!({
                "seed": probe.seed,
                "weak_holds": probe.weak_holds(),
                "strong_holds": probe.strong_holds(),
                "weak": probe.weak,
                "strong": probe.strong,
            })
        }
        RingQuery::Betti => {
            let table = face_ring::graded_betti_hochster(complex, field, cap)?;
            serde_json::to_value(GradedBettiView::new(field, &table, d + 1)).expect("views serialize")
        }
    })
}
