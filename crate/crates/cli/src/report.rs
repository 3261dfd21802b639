//! Report structures, their JSON form and the aligned text rendering.

use std::fmt::Write as _;

use serde::Serialize;

use cmw_core::generate::{FailureRecord, StatementTally};
use cmw_core::invariants::{Certainty, CertifiedValue};
use cmw_core::{BettiEntry, PdResult, TheoremVerdict};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: String,
    /// SHA-256 of the script text.
    pub input: String,
    pub results: Vec<CommandReport>,
    /// Milliseconds per command, only when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Vec<u64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
    Inconsistent,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommandReport {
    pub index: usize,
    pub command: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Outcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PdView {
    Exact(usize),
    GreaterThan(usize),
}

impl From<PdResult> for PdView {
    fn from(p: PdResult) -> Self {
        match p {
            PdResult::Exact(v) => PdView::Exact(v),
            PdResult::GreaterThan(b) => PdView::GreaterThan(b),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CertifiedView<T> {
    pub value: T,
    pub certainty: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}

impl<T> From<CertifiedValue<T>> for CertifiedView<T> {
    fn from(c: CertifiedValue<T>) -> Self {
        let (certainty, bound) = match c.certainty {
            Certainty::Proved => ("proved", None),
            Certainty::CertifiedUpToBound(b) => ("certified-up-to-bound", Some(b)),
            Certainty::Unknown => ("unknown", None),
        };
        CertifiedView { value: c.value, certainty, bound }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SerreEntry {
    pub k: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsView {
    pub module: String,
    pub ring: String,
    pub depth: i64,
    pub dim: i64,
    pub pd: PdView,
    pub cmd: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grade_vs: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub imp_vs: Option<i64>,
    pub cohen_macaulay: bool,
    pub maximal_cm: bool,
    pub perfect: CertifiedView<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_perfect: Option<CertifiedView<bool>>,
    pub serre: Vec<SerreEntry>,
    pub gdim: CertifiedView<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertView {
    pub from: i64,
    pub values: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FunctorView {
    pub index: usize,
    pub vanishes: bool,
    pub generator_degrees: Vec<i64>,
    pub presentation: String,
    pub hilbert: HilbertView,
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalView {
    pub ring: String,
    pub generator_degrees: Vec<i64>,
    pub presentation: String,
    pub betti: Vec<BettiEntry>,
    pub maximal_cm: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TallyView {
    pub id: String,
    #[serde(flatten)]
    pub tally: StatementTally,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignView {
    pub seed: u64,
    pub count: usize,
    pub vars: usize,
    pub degree: u32,
    pub style: String,
    pub bound: usize,
    pub checks: usize,
    pub applicable: usize,
    pub consistent: usize,
    pub inapplicable: usize,
    pub per_statement: Vec<TallyView>,
    pub failures: Vec<FailureRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome {
    Invariants(InvariantsView),
    Ext(FunctorView),
    Tor(FunctorView),
    Grade { grade: i64 },
    Serre { k: usize, holds: bool },
    Gdim { gdim: CertifiedView<i64>, zero: CertifiedView<bool> },
    Canonical(CanonicalView),
    Check(TheoremVerdict),
    Campaign(CampaignView),
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, r) in self.results.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            let _ = write!(out, "[{}] {}", r.index, r.command);
            if let Some(t) = self.timings_ms.as_ref().and_then(|t| t.get(k)) {
                let _ = write!(out, "  ({t} ms)");
            }
            out.push('\n');
            match (&r.result, &r.error) {
                (_, Some(e)) => {
                    let _ = writeln!(out, "  error: {e}");
                }
                (Some(o), None) => render(&mut out, o),
                (None, None) => {}
            }
        }
        out
    }
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn pd_text(p: PdView) -> String {
    match p {
        PdView::Exact(v) => v.to_string(),
        PdView::GreaterThan(b) => format!(">{b}"),
    }
}

fn cert_text<T: std::fmt::Display>(c: &CertifiedView<T>) -> String {
    match c.bound {
        Some(b) => format!("{} ({} {b})", c.value, c.certainty),
        None => format!("{} ({})", c.value, c.certainty),
    }
}

/// Left-aligned columns separated by two spaces, indented by two.
fn table(out: &mut String, rows: &[Vec<String>]) {
    let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    for r in rows {
        let mut line = String::from("  ");
        for (c, cell) in r.iter().enumerate() {
            line.push_str(cell);
            if c + 1 < r.len() {
                line.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

fn kv(pairs: Vec<(&str, String)>) -> Vec<Vec<String>> {
    pairs.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect()
}

fn functor_rows(f: &FunctorView) -> Vec<Vec<String>> {
    let hv: Vec<String> = f.hilbert.values.iter().map(|v| v.to_string()).collect();
    kv(vec![
        ("vanishes", yes(f.vanishes)),
        ("generator degrees", format!("{:?}", f.generator_degrees)),
        ("presentation", f.presentation.clone()),
        ("hilbert", format!("from degree {}: {}", f.hilbert.from, hv.join(" "))),
    ])
}

fn render(out: &mut String, o: &Outcome) {
    match o {
        Outcome::Invariants(v) => {
            let mut rows = vec![
                ("module", v.module.clone()),
                ("ring", v.ring.clone()),
                ("depth", v.depth.to_string()),
                ("dim", v.dim.to_string()),
                ("pd", pd_text(v.pd)),
                ("cmd", v.cmd.to_string()),
            ];
            if let Some(g) = v.grade_vs {
                rows.push(("grade vs N", g.to_string()));
            }
            if let Some(i) = v.imp_vs {
                rows.push(("imp vs N", i.to_string()));
            }
            rows.push(("Cohen-Macaulay", yes(v.cohen_macaulay)));
            rows.push(("maximal CM", yes(v.maximal_cm)));
            rows.push(("perfect", cert_text(&v.perfect)));
            if let Some(p) = &v.n_perfect {
                rows.push(("N-perfect", cert_text(p)));
            }
            let serre: Vec<String> = v.serre.iter().map(|s| format!("S{}={}", s.k, yes(s.holds))).collect();
            rows.push(("serre", serre.join(" ")));
            rows.push(("gdim", cert_text(&v.gdim)));
            table(out, &kv(rows));
        }
        Outcome::Ext(f) | Outcome::Tor(f) => table(out, &functor_rows(f)),
        Outcome::Grade { grade } => table(out, &kv(vec![("grade", grade.to_string())])),
        Outcome::Serre { k, holds } => table(out, &kv(vec![("k", k.to_string()), ("holds", yes(*holds))])),
        Outcome::Gdim { gdim, zero } => {
            table(out, &kv(vec![("gdim", cert_text(gdim)), ("gdim = 0", cert_text(zero))]));
        }
        Outcome::Canonical(c) => {
            let betti: Vec<String> = c.betti.iter().map(|b| format!("b{},{}={}", b.i, b.degree, b.rank)).collect();
            table(
                out,
                &kv(vec![
                    ("ring", c.ring.clone()),
                    ("generator degrees", format!("{:?}", c.generator_degrees)),
                    ("presentation", c.presentation.clone()),
                    ("betti over S", betti.join(" ")),
                    ("maximal CM", yes(c.maximal_cm)),
                ]),
            );
        }
        Outcome::Check(v) => {
            let mut rows = vec![vec!["hypothesis".to_string(), "status".into(), "witness".into()]];
            for h in &v.hypotheses {
                rows.push(vec![h.name.clone(), h.status.keyword().into(), h.witness.clone()]);
            }
            rows.push(vec!["conclusion".into(), v.conclusion.keyword().into(), v.conclusion_witness.clone()]);
            table(out, &rows);
            table(out, &kv(vec![("applicable", yes(v.applicable)), ("consistent", yes(v.consistent))]));
        }
        Outcome::Campaign(c) => {
            let mut head = vec![
                ("params", format!("seed={} count={} vars={} degree={} style={} bound={}", c.seed, c.count, c.vars, c.degree, c.style, c.bound)),
                ("checks", c.checks.to_string()),
                ("applicable", c.applicable.to_string()),
                ("consistent", c.consistent.to_string()),
                ("inapplicable", c.inapplicable.to_string()),
                ("failures", c.failures.len().to_string()),
            ];
            if let Some(t) = c.wall_time_ms {
                head.push(("wall time", format!("{t} ms")));
            }
            table(out, &kv(head));
            let mut rows = vec![vec![
                "statement".to_string(),
                "checks".into(),
                "applicable".into(),
                "consistent".into(),
                "inapplicable".into(),
            ]];
            for t in &c.per_statement {
                rows.push(vec![
                    t.id.clone(),
                    t.tally.checks.to_string(),
                    t.tally.applicable.to_string(),
                    t.tally.consistent.to_string(),
                    t.tally.inapplicable.to_string(),
                ]);
            }
            table(out, &rows);
            for f in &c.failures {
                let _ = writeln!(out, "  failure: {}", serde_json::to_string(f).expect("serializable"));
            }
        }
    }
}
