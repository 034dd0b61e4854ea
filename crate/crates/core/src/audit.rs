//! Theorem and conjecture checks, each gated by the hypotheses it needs.
//!
//! Field-dependent checks run once per requested field; the rest run once,
//! against the classification over the first field. A check whose
//! hypotheses fail is reported as skipped with the reason.

use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::classify::{self, ClassificationReport, ClassifyOptions, DEFAULT_FACE_CAP};
use crate::complex::SimplicialComplex;
use crate::constructions::{self, Family, Provenance};
use crate::error::{Error, Result};
use crate::face_ring::{self, is_f_vector, is_m_sequence};
use crate::field::FieldSpec;
use crate::homology;
use crate::invariants::{self, binomial, CorrectedHVectors, DEFAULT_MU_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Theorem,
    Conjecture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Skipped,
}

/// A registered check.
#[derive(Clone, Copy, Debug)]
pub struct CheckInfo {
    pub id: &'static str,
    pub status: Status,
    /// Run once per field rather than once overall.
    pub per_field: bool,
    pub statement: &'static str,
}

const fn info(id: &'static str, status: Status, per_field: bool, statement: &'static str) -> CheckInfo {
    CheckInfo { id, status, per_field, statement }
}

use Status::{Conjecture, Theorem};

/// Every check, in the order reports list them.
pub const REGISTRY: &[CheckInfo] = &[
    info("dehn-sommerville", Theorem, false, "h_{d-j} - h_j = (-1)^j C(d,j) (χ̃ - (-1)^{d-1}) on semi-Eulerian complexes"),
    info("dehn-sommerville-boundary", Theorem, true, "h_{d-i} - h_i = C(d,i) (-1)^{d-i-1} χ̃ - g_i(∂Δ) on manifolds with boundary"),
    info("lbt", Theorem, false, "h_2 ≥ h_1 on connected normal pseudomanifolds, d ≥ 3"),
    info("ubt", Theorem, false, "h_j ≤ h_j(C_d(n)) for j ≤ d/2 and f_i ≤ f_i(C_d(n)) on orientable manifolds, even dimension gated by Betti numbers"),
    info("h2-nonnegative", Theorem, true, "h″_j ≥ 0 on homology manifolds"),
    info("h2-symmetric", Theorem, true, "h″_j = h″_{d-j} on orientable closed manifolds"),
    info("kuhnel", Theorem, true, "(-1)^k C(2k+1,k)(χ̃ - 1) ≤ C(n-k-2,k+1) in dimension 2k, equality iff (k+1)-neighborly"),
    info("murai-middle-betti", Theorem, true, "C(2k+1,k) β_k ≤ C(n-k-2,k+1) when d = 2k+1"),
    info("g2-betti", Theorem, true, "g_2 ≥ C(d+1,2)(β_1 - β_0) on normal pseudomanifolds, d-1 ≥ 3"),
    info("g2-mu", Theorem, true, "g_2 ≥ C(d+1,2)(μ_1 - μ_0 + 1) on normal pseudomanifolds, d-1 ≥ 3"),
    info("mu-betti", Theorem, true, "μ_j ≥ β_j (+1 at j = 0) and the alternating Morse-type sums"),
    info("h2-unimodal", Theorem, true, "h″ rises to ⌊d/2⌋ and g″ is an M-sequence when vertex links have the WLP"),
    info("tilde-g", Theorem, true, "g̃_r ≥ 0 and (g̃_r) is an M-sequence when all vertex links have the WLP"),
    info("h2-stacked", Theorem, true, "h″_r = 0 iff (r-1)-stacked, manifolds with boundary"),
    info("bagchi-mu", Theorem, true, "g_r = C(d+1,r)[(-1)^r + ∑ (-1)^{r-j} μ_{j-1}] on locally (r-1)-stacked manifolds"),
    info("lbt-boundary", Theorem, true, "h_2 ≥ f_0° + C(d,2) β_1(∂Δ) + d β_0(∂Δ) on connected manifolds with boundary"),
    info("billera-lee", Conjecture, false, "difference vectors (h_i - h_{d+k-i}) of a ball are M-sequences"),
    info("balanced-lbt", Theorem, false, "2 h_2 ≥ (d-1) h_1 on balanced connected normal pseudomanifolds, d ≥ 3"),
    info("balanced-h2-f-vector", Theorem, true, "h″ of a balanced manifold is an f-vector"),
    info("balanced-glbc", Conjecture, false, "h_j / C(d,j) nondecreasing up to ⌊d/2⌋ on balanced spheres"),
    info("gal", Conjecture, false, "γ_i ≥ 0 on flag homology spheres"),
    info("flag-upper-bound", Conjecture, false, "f, h, g, γ bounded by the join of k cycles J_k(n), flag manifolds with d = 2k ≥ 4"),
    info("g-theorem", Theorem, false, "h symmetric, unimodal to ⌊d/2⌋, g an M-sequence on polytopal spheres"),
    info("klee-balanced-pi1", Theorem, false, "h_2 ≥ C(d,2) m(Δ) on balanced manifolds, m the number of π_1 generators"),
];

pub fn check_info(id: &str) -> Option<&'static CheckInfo> {
    REGISTRY.iter().find(|c| c.id == id)
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub field: Option<FieldSpec>,
    pub status: Status,
    pub applicable: bool,
    pub reason: Option<String>,
    pub verdict: Verdict,
    #[serde(serialize_with = "serialize_ratio")]
    pub slack: Option<BigRational>,
    pub witnesses: Vec<String>,
    pub note: Option<String>,
    /// Skipped because a resource cap was hit rather than by a hypothesis.
    pub resource_skip: bool,
}

fn serialize_ratio<S: Serializer>(v: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(q) => s.collect_str(&ratio_string(q)),
        None => s.serialize_none(),
    }
}

/// `"p/q"` in lowest terms, or `"p"` for integers.
pub fn ratio_string(q: &BigRational) -> String {
    q.to_string()
}

#[derive(Clone, Debug)]
pub struct AuditOptions {
    pub fields: Vec<FieldSpec>,
    pub mu_cap: usize,
    pub face_cap: usize,
    pub seed: u64,
    /// Facts known because the complex came from a construction.
    pub provenance: Option<Provenance>,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            fields: vec![FieldSpec::Rationals],
            mu_cap: DEFAULT_MU_CAP,
            face_cap: DEFAULT_FACE_CAP,
            seed: 1,
            provenance: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub fields: Vec<FieldSpec>,
    /// One classification per field, in the order of `fields`.
    pub classifications: Vec<ClassificationReport>,
    pub checks: Vec<CheckResult>,
    pub provenance: Option<Provenance>,
    pub seed: u64,
}

impl AuditReport {
    pub fn classification(&self) -> &ClassificationReport {
        &self.classifications[0]
    }

    pub fn check(&self, id: &str, field: Option<FieldSpec>) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id && (field.is_none() || c.field.is_none() || c.field == field))
    }

    pub fn theorem_failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Theorem && c.verdict == Verdict::Fails)
    }

    pub fn conjecture_failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Conjecture && c.verdict == Verdict::Fails)
    }

    pub fn resource_skips(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.resource_skip)
    }

    /// 2 on a theorem failure, else 3 when `strict` and a cap forced a skip, else 0.
    pub fn exit_code(&self, strict: bool) -> i32 {
        if self.theorem_failures().next().is_some() {
            2
        } else if strict && self.resource_skips().next().is_some() {
            3
        } else {
            0
        }
    }
}

struct Skip {
    reason: String,
    resource: bool,
}

type Gate<T = ()> = std::result::Result<T, Skip>;

fn skip<T>(reason: impl Into<String>) -> Gate<T> {
    Err(Skip { reason: reason.into(), resource: false })
}

fn require(cond: bool, reason: impl Into<String>) -> Gate {
    if cond {
        Ok(())
    } else {
        skip(reason)
    }
}

/// A classification flag that may be undecided because link tests were capped.
fn known(v: Option<bool>, what: &str, c: &ClassificationReport) -> Gate<bool> {
    match v {
        Some(b) => Ok(b),
        None if !c.skipped.is_empty() => {
            Err(Skip { reason: format!("{what} undecided: {}", c.skipped.join("; ")), resource: true })
        }
        None => Ok(false),
    }
}

fn from_error(e: &Error) -> Skip {
    Skip { reason: e.to_string(), resource: matches!(e, Error::Resource(_)) }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

#[derive(Default)]
struct Outcome {
    holds: bool,
    slack: Option<BigRational>,
    witnesses: Vec<String>,
    note: Option<String>,
    status: Option<Status>,
}

impl Outcome {
    /// Holds iff every margin is nonnegative; slack is the least margin and
    /// the witnesses are the labels attaining it.
    fn margins(items: Vec<(String, BigRational)>) -> Outcome {
        let min = items.iter().map(|(_, m)| m).min().cloned();
        let witnesses = match &min {
            Some(m) => items.iter().filter(|(_, x)| x == m).map(|(l, _)| l.clone()).collect(),
            None => Vec::new(),
        };
        Outcome { holds: min.as_ref().is_none_or(|m| !m.is_negative()), slack: min, witnesses, ..Outcome::default() }
    }

    fn single(label: &str, margin: i64) -> Outcome {
        Outcome::margins(vec![(label.to_string(), q(margin))])
    }

    fn residual(r: &[i64]) -> Outcome {
        let witnesses: Vec<String> =
            r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, x)| format!("j={j}: {x}")).collect();
        Outcome { holds: witnesses.is_empty(), witnesses, ..Outcome::default() }
    }

    fn note(mut self, note: impl Into<String>) -> Outcome {
        self.note = Some(note.into());
        self
    }
}

fn m_seq(v: &[i64]) -> bool {
    is_m_sequence(v).unwrap_or(false)
}

struct LinkProbe {
    failures: usize,
    total: usize,
}

struct FieldCtx {
    field: FieldSpec,
    class: ClassificationReport,
    vectors: CorrectedHVectors,
    mu: std::result::Result<Vec<BigRational>, Error>,
    links: OnceLock<std::result::Result<LinkProbe, Error>>,
}

struct Ctx<'a> {
    complex: &'a SimplicialComplex,
    opts: &'a AuditOptions,
    d: usize,
    n: usize,
    h: Vec<i64>,
    chi: i64,
    fields: Vec<FieldCtx>,
    gf2: OnceLock<Result<ClassificationReport>>,
}

impl Ctx<'_> {
    fn provenance(&self) -> Provenance {
        self.opts.provenance.clone().unwrap_or_default()
    }

    /// WLP probes of every vertex link over the field of `fc`.
    fn link_probe<'b>(&self, fc: &'b FieldCtx) -> Gate<&'b LinkProbe> {
        let r = fc.links.get_or_init(|| {
            let results: Vec<Result<bool>> = (0..self.n)
                .into_par_iter()
                .map(|v| {
                    let lk = self.complex.vertex_link(v)?;
                    let seed = self.opts.seed.wrapping_add(1000 * v as u64);
                    Ok(face_ring::lefschetz_probe(&lk, fc.field, seed)?.weak_holds())
                })
                .collect();
            let mut failures = 0;
            for r in results {
                if !r? {
                    failures += 1;
                }
            }
            Ok(LinkProbe { failures, total: self.n })
        });
        r.as_ref().map_err(from_error)
    }
}

fn closed_orientable(fc: &FieldCtx) -> Gate {
    let c = &fc.class;
    require(known(c.homology_manifold, "manifold test", c)?, format!("not a closed {}-homology manifold", fc.field))?;
    require(c.orientable == Some(true), format!("not orientable over {}", fc.field))
}

fn h_cyclic(d: usize, n: usize, j: usize) -> i64 {
    let j = j.min(d - j) as i64;
    binomial(n as i64 - d as i64 + j - 1, j)
}

fn run_check(info: &CheckInfo, cx: &Ctx, fc: &FieldCtx) -> Gate<Outcome> {
    let c = &fc.class;
    let (d, n, h) = (cx.d, cx.n, &cx.h);
    match info.id {
        "dehn-sommerville" => {
            require(known(c.semi_eulerian, "Euler test of links", c)?, "not semi-Eulerian")?;
            Ok(Outcome::residual(&invariants::ds_residual_from(h, cx.chi)))
        }
        "dehn-sommerville-boundary" => {
            require(known(c.manifold_with_boundary, "manifold test", c)?, "not a manifold with nonempty boundary")?;
            let boundary = c.boundary.as_ref().expect("manifolds with boundary carry it");
            let hb = invariants::h_vector(boundary).map_err(|e| from_error(&e))?;
            Ok(Outcome::residual(&invariants::ds_boundary_residual_from(h, cx.chi, &hb)))
        }
        "lbt" => {
            require(d >= 3, format!("d = {d} < 3"))?;
            require(c.connected, "disconnected")?;
            require(known(c.normal_pseudomanifold, "normality test", c)?, "not a normal pseudomanifold")?;
            Ok(Outcome::single("h_2 - h_1", h[2] - h[1]))
        }
        "ubt" => ubt(cx),
        "h2-nonnegative" => {
            require(c.is_any_manifold(), format!("not a {}-homology manifold", fc.field))?;
            let hpp = &fc.vectors.h_double_prime;
            Ok(Outcome::margins(hpp.iter().enumerate().map(|(j, &x)| (format!("j={j}"), q(x))).collect()))
        }
        "h2-symmetric" => {
            closed_orientable(fc)?;
            let hpp = &fc.vectors.h_double_prime;
            let range = if c.connected { 0..=d } else { 1..=d - 1 };
            let bad: Vec<String> = range.filter(|&j| hpp[j] != hpp[d - j]).map(|j| format!("j={j}")).collect();
            let note = (!c.connected).then_some("disconnected: only 0 < j < d compared");
            let o = Outcome { holds: bad.is_empty(), witnesses: bad, ..Outcome::default() };
            Ok(match note {
                Some(t) => o.note(t),
                None => o,
            })
        }
        "kuhnel" => {
            require(d % 2 == 1, "dimension is odd")?;
            closed_orientable(fc)?;
            let k = (d as i64 - 1) / 2;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let lhs = sign * binomial(2 * k + 1, k) * (cx.chi - 1);
            let rhs = binomial(n as i64 - k - 2, k + 1);
            let neighborly = c.neighborliness as i64 > k;
            let mut o = Outcome::single("bound", rhs - lhs);
            if (lhs == rhs) != neighborly {
                o.holds = false;
                o.witnesses.push(format!("equality is {} but (k+1)-neighborliness is {neighborly}", lhs == rhs));
            }
            Ok(o.note(format!("{lhs} ≤ {rhs}")))
        }
        "murai-middle-betti" => {
            require(d % 2 == 1 && d >= 3, "needs d = 2k+1 with k ≥ 1")?;
            require(known(c.homology_manifold, "manifold test", c)?, format!("not a closed {}-homology manifold", fc.field))?;
            let k = (d as i64 - 1) / 2;
            let lhs = binomial(2 * k + 1, k) * c.betti.get(k as isize) as i64;
            let rhs = binomial(n as i64 - k - 2, k + 1);
            Ok(Outcome::single("bound", rhs - lhs).note(format!("{lhs} ≤ {rhs}")))
        }
        "g2-betti" | "g2-mu" => {
            require(d >= 4, format!("d−1 = {} < 3", d as i64 - 1))?;
            require(known(c.normal_pseudomanifold, "normality test", c)?, "not a normal pseudomanifold")?;
            let g2 = q(h[2] - h[1]);
            let coeff = q(binomial(d as i64 + 1, 2));
            let rhs = if info.id == "g2-betti" {
                &coeff * q(c.betti.get(1) as i64 - c.betti.get(0) as i64)
            } else {
                let mu = fc.mu.as_ref().map_err(from_error)?;
                &coeff * (&mu[1] - &mu[0] + q(1))
            };
            Ok(Outcome::margins(vec![("g_2 - bound".into(), g2 - rhs)]))
        }
        "mu-betti" => {
            require(d >= 1, "the empty complex has no μ-numbers")?;
            let mu = fc.mu.as_ref().map_err(from_error)?;
            let beta = |j: usize| q(c.betti.get(j as isize) as i64);
            let mut items = Vec::new();
            let mut alt = BigRational::zero();
            for j in 0..d {
                let extra = if j == 0 { q(1) } else { q(0) };
                items.push((format!("μ_{j} - β_{j}"), &mu[j] - beta(j) - extra));
                alt = &mu[j] - beta(j) - alt;
                let sign = if j % 2 == 0 { q(1) } else { q(-1) };
                items.push((format!("alternating j={j}"), &alt - sign));
            }
            Ok(Outcome::margins(items))
        }
        "h2-unimodal" => {
            require(c.connected, "disconnected")?;
            closed_orientable(fc)?;
            let probe = cx.link_probe(fc)?;
            require(
                probe.failures <= d + 1,
                format!("hypothesis not certified: {} of {} vertex links fail the WLP probe", probe.failures, probe.total),
            )?;
            let gpp = &fc.vectors.g_double_prime;
            let mut o = Outcome::margins(gpp.iter().enumerate().skip(1).map(|(j, &x)| (format!("g″_{j}"), q(x))).collect());
            if !m_seq(gpp) {
                o.holds = false;
                o.witnesses.push("g″ is not an M-sequence".into());
            }
            Ok(o.note(format!(
                "certified-modulo-probe: {} of {} vertex links pass",
                probe.total - probe.failures,
                probe.total
            )))
        }
        "tilde-g" => {
            closed_orientable(fc)?;
            let probe = cx.link_probe(fc)?;
            require(
                probe.failures == 0,
                format!("hypothesis not certified: {} of {} vertex links fail the WLP probe", probe.failures, probe.total),
            )?;
            let tg = &fc.vectors.tilde_g;
            let mut o = Outcome::margins(tg.iter().enumerate().map(|(r, &x)| (format!("g̃_{r}"), q(x))).collect());
            if !m_seq(tg) {
                o.holds = false;
                o.witnesses.push("g̃ is not an M-sequence".into());
            }
            Ok(o.note("certified-modulo-probe: every vertex link passes"))
        }
        "h2-stacked" => {
            require(known(c.manifold_with_boundary, "manifold test", c)?, "not a manifold with nonempty boundary")?;
            let s = c.r_stackedness.expect("computed for manifolds with boundary");
            let hpp = &fc.vectors.h_double_prime;
            let bad: Vec<String> = (1..=d)
                .filter(|&r| (hpp[r] == 0) != (r > s))
                .map(|r| format!("r={r}: h″_r = {}, {s}-stacked", hpp[r]))
                .collect();
            Ok(Outcome { holds: bad.is_empty(), witnesses: bad, ..Outcome::default() }
                .note(format!("r-stackedness {s}")))
        }
        "bagchi-mu" => {
            require(known(c.homology_manifold, "manifold test", c)?, format!("not a closed {}-homology manifold", fc.field))?;
            let Some(s) = cx.provenance().locally_stacked else {
                return skip("local stackedness is only known for constructed inputs");
            };
            let rs: Vec<usize> = ((s + 1).max(1)..=d / 2).collect();
            require(!rs.is_empty(), format!("no r with {} ≤ r ≤ ⌊d/2⌋", s + 1))?;
            let mu = fc.mu.as_ref().map_err(from_error)?;
            let g = invariants::g_from_h(h);
            let mut bad = Vec::new();
            for &r in &rs {
                let sign = |e: usize| if e.is_multiple_of(2) { q(1) } else { q(-1) };
                let sum: BigRational = (1..=r).map(|j| sign(r - j) * &mu[j - 1]).sum();
                let rhs = q(binomial(d as i64 + 1, r as i64)) * (sign(r) + sum);
                if q(g[r]) != rhs {
                    bad.push(format!("r={r}: g_r = {} ≠ {}", g[r], ratio_string(&rhs)));
                }
            }
            Ok(Outcome { holds: bad.is_empty(), witnesses: bad, ..Outcome::default() }
                .note(format!("locally {s}-stacked by construction; r in {:?}", rs)))
        }
        "lbt-boundary" => {
            require(d >= 4, format!("d = {d} < 4"))?;
            require(c.connected, "disconnected")?;
            require(known(c.manifold_with_boundary, "manifold test", c)?, "not a manifold with nonempty boundary")?;
            require(d >= 5 || fc.field.characteristic() == 2, "d = 4 needs characteristic 2")?;
            let boundary = c.boundary.as_ref().expect("manifolds with boundary carry it");
            let bb = homology::reduced_betti(boundary, fc.field).map_err(|e| from_error(&e))?;
            let (c1, c0) = if d == 4 { (3, 4) } else { (binomial(d as i64, 2), d as i64) };
            let interior = (n - boundary.n()) as i64;
            let rhs = interior + c1 * bb.get(1) as i64 + c0 * bb.get(0) as i64;
            Ok(Outcome::single("h_2 - bound", h[2] - rhs))
        }
        "billera-lee" => {
            require(known(c.homology_ball, "ball test", c)?, "not a homology ball")?;
            let hh = |i: usize| h.get(i).copied().unwrap_or(0);
            let bad: Vec<String> = (0..=d + 1)
                .filter(|&k| {
                    let m = (d + k).saturating_sub(1) / 2;
                    let v: Vec<i64> = (0..=m).map(|i| hh(i) - hh(d + k - i)).collect();
                    !m_seq(&v)
                })
                .map(|k| format!("k={k}"))
                .collect();
            Ok(Outcome { holds: bad.is_empty(), witnesses: bad, ..Outcome::default() })
        }
        "balanced-lbt" => {
            require(d >= 3, format!("d = {d} < 3"))?;
            require(c.balanced.is_some(), "not balanced")?;
            require(c.connected, "disconnected")?;
            require(known(c.normal_pseudomanifold, "normality test", c)?, "not a normal pseudomanifold")?;
            Ok(Outcome::single("2h_2 - (d-1)h_1", 2 * h[2] - (d as i64 - 1) * h[1]))
        }
        "balanced-h2-f-vector" => {
            require(c.balanced.is_some(), "not balanced")?;
            require(c.is_any_manifold(), format!("not a {}-homology manifold", fc.field))?;
            let hpp = &fc.vectors.h_double_prime;
            let holds = is_f_vector(hpp).unwrap_or(false);
            Ok(Outcome { holds, ..Outcome::default() })
        }
        "balanced-glbc" => {
            require(c.balanced.is_some(), "not balanced")?;
            require(known(c.homology_sphere, "sphere test", c)?, "not a homology sphere")?;
            let ratio = |j: usize| BigRational::new(h[j].into(), binomial(d as i64, j as i64).into());
            let items = (1..=d / 2).map(|j| (format!("j={j}"), ratio(j) - ratio(j - 1))).collect();
            let mut o = Outcome::margins(items);
            if cx.provenance().polytopal {
                o.status = Some(Theorem);
            }
            Ok(o)
        }
        "gal" => {
            require(known(c.flag, "flag test", c)?, "not flag")?;
            require(known(c.homology_sphere, "sphere test", c)?, "not a homology sphere")?;
            let gamma = invariants::gamma_vector(h).map_err(|e| from_error(&e))?;
            Ok(Outcome::margins(gamma.iter().enumerate().map(|(i, &x)| (format!("γ_{i}"), q(x))).collect()))
        }
        "flag-upper-bound" => flag_upper_bound(cx, c),
        "g-theorem" => {
            require(known(c.homology_sphere, "sphere test", c)?, "not a homology sphere")?;
            let g = invariants::g_from_h(h);
            let mut o = Outcome::margins(g.iter().enumerate().skip(1).map(|(j, &x)| (format!("g_{j}"), q(x))).collect());
            let asym: Vec<String> = (0..=d).filter(|&j| h[j] != h[d - j]).map(|j| format!("h_{j} ≠ h_{}", d - j)).collect();
            if !asym.is_empty() || !m_seq(&g) {
                o.holds = false;
                o.witnesses.extend(asym);
                if !m_seq(&g) {
                    o.witnesses.push("g is not an M-sequence".into());
                }
            }
            o.status = Some(if cx.provenance().polytopal { Theorem } else { Conjecture });
            Ok(o)
        }
        "klee-balanced-pi1" => skip("fundamental-group generators are not computed"),
        other => unreachable!("unregistered check {other}"),
    }
}

/// Compares `h_j` for `j ≤ ⌊d/2⌋` and every `f_i` with the cyclic polytope.
/// Above the middle, Dehn–Sommerville pushes `h_j` of an even-dimensional
/// manifold with `χ̃ < 1` past the cyclic value, so only the lower half is
/// compared. The slack is the summed f-margin, zero exactly when the
/// f-vectors agree.
fn ubt(cx: &Ctx) -> Gate<Outcome> {
    let (d, n) = (cx.d, cx.n);
    require(d >= 1 && n > d, "needs n > d")?;
    let mut candidates = vec![FieldSpec::gf2()];
    candidates.extend(cx.fields.iter().map(|f| f.field).filter(|f| *f != FieldSpec::gf2()));
    let mut reasons = Vec::new();
    let mut gate_field = None;
    for field in candidates {
        let class = match cx.fields.iter().find(|f| f.field == field) {
            Some(fc) => &fc.class,
            None => match cx.gf2.get_or_init(|| {
                classify::classify_with(cx.complex, field, &ClassifyOptions { face_cap: cx.opts.face_cap })
            }) {
                Ok(c) => c,
                Err(e) => return Err(from_error(e)),
            },
        };
        if !known(class.homology_manifold, "manifold test", class)? || class.orientable != Some(true) {
            reasons.push(format!("not an orientable closed {field}-homology manifold"));
            continue;
        }
        if (d - 1) % 2 == 1 {
            gate_field = Some((field, "odd dimension".to_string()));
            break;
        }
        let k = (d as isize - 1) / 2;
        let b = |i: isize| class.betti.get(i) as i64;
        let rhs = 2 * b(k - 1) + 2 * (0..=k - 3).map(b).sum::<i64>();
        if b(k) <= rhs {
            gate_field = Some((field, format!("β_{k} = {} ≤ {rhs}", b(k))));
            break;
        }
        reasons.push(format!("over {field}: β_{k} = {} > {rhs}", b(k)));
    }
    let Some((field, why)) = gate_field else {
        return skip(reasons.join("; "));
    };
    let cyclic = constructions::cyclic_boundary(d, n).map_err(|e| from_error(&e))?;
    let (f, fc) = (cx.complex.f_vector(), cyclic.f_vector());
    let mut failing: Vec<String> = (0..=d / 2)
        .filter(|&j| cx.h[j] > h_cyclic(d, n, j))
        .map(|j| format!("h_{j}: {} > {}", cx.h[j], h_cyclic(d, n, j)))
        .collect();
    let f_margins: Vec<i64> = (0..d as isize).map(|i| fc.get(i) as i64 - f.get(i) as i64).collect();
    failing.extend(f_margins.iter().enumerate().filter(|(_, &m)| m < 0).map(|(i, m)| format!("f_{i}: {m}")));
    let slack = if failing.is_empty() { f_margins.iter().sum() } else { *f_margins.iter().min().unwrap() };
    Ok(Outcome {
        holds: failing.is_empty(),
        slack: Some(q(slack)),
        witnesses: failing,
        note: Some(format!("gate over {field}: {why}")),
        status: None,
    })
}

fn flag_upper_bound(cx: &Ctx, c: &ClassificationReport) -> Gate<Outcome> {
    let (d, n) = (cx.d, cx.n);
    require(d % 2 == 0 && d >= 4, "needs d = 2k ≥ 4")?;
    require(known(c.flag, "flag test", c)?, "not flag")?;
    require(known(c.homology_manifold, "manifold test", c)?, "not a closed homology manifold")?;
    let k = d / 2;
    require(n >= 3 * k, format!("J_{k}(n) needs n ≥ {}", 3 * k))?;
    let j = constructions::join_of_cycles(k, n).map_err(|e| from_error(&e))?;
    let hj = invariants::h_vector(&j).map_err(|e| from_error(&e))?;
    let (f, fj) = (cx.complex.f_vector(), j.f_vector());
    let mut items: Vec<(String, BigRational)> = Vec::new();
    for i in 1..d as isize {
        items.push((format!("f_{i}"), q(fj.get(i) as i64 - f.get(i) as i64)));
    }
    for i in 2..=d - 2 {
        items.push((format!("h_{i}"), q(hj[i] - cx.h[i])));
    }
    let (g, gj) = (invariants::g_from_h(&cx.h), invariants::g_from_h(&hj));
    for i in 2..=k {
        items.push((format!("g_{i}"), q(gj[i] - g[i])));
    }
    if let (Ok(gamma), Ok(gamma_j)) = (invariants::gamma_vector(&cx.h), invariants::gamma_vector(&hj)) {
        for i in 2..=k {
            items.push((format!("γ_{i}"), q(gamma_j[i] - gamma[i])));
        }
    }
    Ok(Outcome::margins(items).note(format!("compared with J_{k}({n})")))
}

fn build_field(complex: &SimplicialComplex, field: FieldSpec, opts: &AuditOptions) -> Result<FieldCtx> {
    let class = classify::classify_with(complex, field, &ClassifyOptions { face_cap: opts.face_cap })?;
    let vectors = invariants::corrected_h(complex, field)?;
    let mu = invariants::mu_numbers(complex, field, opts.mu_cap).map(|(mu, _)| mu);
    Ok(FieldCtx { field, class, vectors, mu, links: OnceLock::new() })
}

/// Runs every registered check.
pub fn run_audit(complex: &SimplicialComplex, opts: &AuditOptions) -> Result<AuditReport> {
    complex.require_nonvoid("the audit")?;
    let mut fields: Vec<FieldSpec> = Vec::new();
    for f in &opts.fields {
        if !fields.contains(f) {
            fields.push(*f);
        }
    }
    if fields.is_empty() {
        fields.push(FieldSpec::Rationals);
    }
    let ctxs: Vec<FieldCtx> = fields.iter().map(|&f| build_field(complex, f, opts)).collect::<Result<_>>()?;
    let cx = Ctx {
        complex,
        opts,
        d: complex.d(),
        n: complex.n(),
        h: invariants::h_vector(complex)?,
        chi: homology::euler_characteristic(complex)?,
        fields: ctxs,
        gf2: OnceLock::new(),
    };
    let jobs: Vec<(&CheckInfo, Option<usize>)> = REGISTRY
        .iter()
        .flat_map(|info| {
            let idx: Vec<Option<usize>> =
                if info.per_field { (0..cx.fields.len()).map(Some).collect() } else { vec![None] };
            idx.into_iter().map(move |i| (info, i))
        })
        .collect();
    let checks = jobs
        .into_par_iter()
        .map(|(info, i)| {
            let fc = &cx.fields[i.unwrap_or(0)];
            let field = i.map(|_| fc.field);
            match run_check(info, &cx, fc) {
                Ok(o) => {
                    let status = o.status.unwrap_or(info.status);
                    let failed_theorem = status == Theorem && !o.holds;
                    CheckResult {
                        id: info.id,
                        field,
                        status,
                        applicable: true,
                        reason: None,
                        verdict: if o.holds { Verdict::Holds } else { Verdict::Fails },
                        slack: o.slack,
                        witnesses: o.witnesses,
                        note: if failed_theorem {
                            Some(format!("probable implementation bug{}", o.note.map(|n| format!("; {n}")).unwrap_or_default()))
                        } else {
                            o.note
                        },
                        resource_skip: false,
                    }
                }
                Err(s) => CheckResult {
                    id: info.id,
                    field,
                    status: info.status,
                    applicable: false,
                    reason: Some(s.reason),
                    verdict: Verdict::Skipped,
                    slack: None,
                    witnesses: Vec::new(),
                    note: None,
                    resource_skip: s.resource,
                },
            }
        })
        .collect();
    let classifications = cx.fields.into_iter().map(|f| f.class).collect();
    Ok(AuditReport { fields, classifications, checks, provenance: opts.provenance.clone(), seed: opts.seed })
}

/// A zero-slack inequality together with what equality is known to mean.
#[derive(Clone, Debug, Serialize)]
pub struct EqualityWitness {
    pub id: &'static str,
    pub field: Option<FieldSpec>,
    pub annotation: String,
    /// Whether the characterization was confirmed; `None` when not computable.
    pub confirmed: Option<bool>,
}

pub fn equality_witnesses(report: &AuditReport) -> Vec<EqualityWitness> {
    let class = report.classification();
    let d = class.dim + 1;
    let family = report.provenance.as_ref().and_then(|p| p.family);
    report
        .checks
        .iter()
        .filter(|c| c.verdict == Verdict::Holds && c.slack.as_ref().is_some_and(Zero::is_zero))
        .map(|c| {
            let (annotation, confirmed) = match c.id {
                "lbt" if d >= 4 => (
                    "stacked: equality characterizes boundaries of stacked polytopes".to_string(),
                    (family == Some(Family::Stacked)).then_some(true),
                ),
                "lbt" => ("d = 3: every 2-sphere attains equality".to_string(), None),
                "ubt" => {
                    let s = d as usize / 2;
                    (format!("f = f(C_d(n)): {s}-neighborly"), Some(class.neighborliness >= s))
                }
                "kuhnel" => {
                    let k = (d as usize - 1) / 2;
                    (format!("{}-neighborly", k + 1), Some(class.neighborliness > k))
                }
                "g2-betti" | "g2-mu" => ("stacked manifold (not verified for closed complexes)".to_string(), None),
                "balanced-lbt" if d >= 4 => (
                    "stacked cross-polytopal sphere".to_string(),
                    matches!(family, Some(Family::StackedCrossPolytopal | Family::CrossPolytope)).then_some(true),
                ),
                "balanced-lbt" => ("d = 3: every balanced 2-sphere attains equality".to_string(), None),
                "tilde-g" => ("g̃_r = 0: (r-1)-stacked for r < d/2; open at r = d/2".to_string(), None),
                _ => ("zero slack".to_string(), None),
            };
            EqualityWitness { id: c.id, field: c.field, annotation, confirmed }
        })
        .collect()
}
