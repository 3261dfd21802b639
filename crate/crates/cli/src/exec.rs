//! Runs a compiled program command by command and collects the report.

use std::time::Instant;

use sha2::{Digest, Sha256};

use cmw_core::generate::{campaign, GeneratorParams};
use cmw_core::homalg::{ext_module, tor_module, DerivedFunctorResult};
use cmw_core::invariants::{self, canonical_module, default_bound, gdim, gdim_zero, grade_mn, satisfies_serre};
use cmw_core::resolve::betti_table;
use cmw_core::theorems::check;
use cmw_core::{CheckParams, PresentedModule, RingTag};

use crate::compile::{Action, Program};
use crate::report::{
    CampaignView, CanonicalView, CommandReport, FunctorView, HilbertView, InvariantsView, Outcome, Report,
    SerreEntry, Status, TallyView, SCHEMA,
};

pub const TOOL: &str = concat!("cmw ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Overrides every truncation bound.
    pub bound: Option<usize>,
    /// Stop at the first command that errors or is inconsistent.
    pub fail_fast: bool,
    /// Campaign seed when the script gives none.
    pub seed: Option<u64>,
    pub timings: bool,
}

pub fn fingerprint(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn functor_view(r: DerivedFunctorResult) -> FunctorView {
    let v = r.value;
    let window = v.hilbert_window();
    FunctorView {
        index: r.index,
        vanishes: r.vanishes,
        generator_degrees: v.generator_degrees().to_vec(),
        presentation: v.describe(),
        hilbert: HilbertView { from: *window.start(), values: v.hilbert_function(window) },
    }
}

fn bound_for(m: &PresentedModule, opts: &Options) -> usize {
    opts.bound.unwrap_or_else(|| default_bound(m.ring()))
}

fn run(action: &Action, opts: &Options, timed: bool) -> cmw_core::Result<Outcome> {
    Ok(match action {
        Action::Invariants { m, vs } => {
            let bound = bound_for(m, opts);
            let ks: Vec<usize> = (1..=m.ring().nvars()).collect();
            let r = invariants::invariant_report(m, vs.as_ref(), &ks, bound)?;
            Outcome::Invariants(InvariantsView {
                module: m.describe(),
                ring: m.ring().describe(),
                depth: r.depth,
                dim: r.dim,
                pd: r.pd.into(),
                cmd: r.cmd,
                grade_vs: r.grade_vs,
                imp_vs: r.imp_vs,
                cohen_macaulay: r.flags.is_cm,
                maximal_cm: r.flags.is_maximal_cm,
                perfect: r.flags.is_perfect.into(),
                n_perfect: r.flags.is_n_perfect.map(Into::into),
                serre: r.flags.serre.iter().map(|&(k, holds)| SerreEntry { k, holds }).collect(),
                gdim: r.gdim.into(),
            })
        }
        Action::Ext { i, m, n } => Outcome::Ext(functor_view(ext_module(*i, m, n, bound_for(m, opts))?)),
        Action::Tor { i, m, n } => Outcome::Tor(functor_view(tor_module(*i, m, n, bound_for(m, opts))?)),
        Action::Grade { m, n } => Outcome::Grade { grade: grade_mn(m, n)? },
        Action::Serre { m, k } => Outcome::Serre { k: *k, holds: satisfies_serre(m, *k)? },
        Action::Gdim { m } => {
            let bound = bound_for(m, opts);
            Outcome::Gdim { gdim: gdim(m, bound)?.into(), zero: gdim_zero(m, bound)?.into() }
        }
        Action::Canonical { ring } => {
            let k = canonical_module(ring)?;
            let bound = opts.bound.unwrap_or_else(|| default_bound(ring));
            Outcome::Canonical(CanonicalView {
                ring: ring.describe(),
                generator_degrees: k.generator_degrees().to_vec(),
                presentation: k.describe(),
                betti: betti_table(&k, RingTag::Ambient, bound)?.entry_list(),
                maximal_cm: invariants::is_maximal_cm(&k)?,
            })
        }
        Action::Check { id, m, n, param_n } => {
            let bound = bound_for(m, opts);
            Outcome::Check(check(*id, m, n.as_ref(), CheckParams { n: *param_n, bound })?)
        }
        Action::Campaign { ids, options, style } => {
            let d = GeneratorParams::default();
            let params = GeneratorParams {
                seed: options.seed.or(opts.seed).unwrap_or(d.seed),
                variables: options.vars.unwrap_or(d.variables),
                style: *style,
                max_degree: options.degree.unwrap_or(d.max_degree),
                ..d
            };
            let count = options.count.unwrap_or(20);
            let bound = opts.bound.unwrap_or(2 * params.variables + 4);
            let s = campaign(ids, &params, count, bound)?;
            Outcome::Campaign(CampaignView {
                seed: params.seed,
                count,
                vars: params.variables,
                degree: params.max_degree,
                style: params.style.to_string(),
                bound,
                checks: s.checks,
                applicable: s.applicable,
                consistent: s.consistent,
                inapplicable: s.inapplicable,
                per_statement: s
                    .per_statement
                    .into_iter()
                    .map(|(id, tally)| TallyView { id: id.to_string(), tally })
                    .collect(),
                failures: s.failures,
                wall_time_ms: timed.then_some(s.wall_time_ms),
            })
        }
    })
}

fn status_of(o: &Outcome) -> Status {
    match o {
        Outcome::Check(v) if !v.consistent => Status::Inconsistent,
        Outcome::Campaign(c) if c.failures.iter().any(|f| f.error.is_none()) => Status::Inconsistent,
        Outcome::Campaign(c) if !c.failures.is_empty() => Status::Error,
        _ => Status::Ok,
    }
}

pub fn execute(program: &Program, text: &str, opts: &Options) -> Report {
    let mut results = Vec::new();
    let mut timings = Vec::new();
    for step in &program.steps {
        let start = Instant::now();
        let outcome = run(&step.action, opts, opts.timings);
        timings.push(start.elapsed().as_millis() as u64);
        let rep = match outcome {
            Ok(o) => CommandReport {
                index: step.index,
                command: step.text.clone(),
                status: status_of(&o),
                result: Some(o),
                error: None,
            },
            Err(e) => CommandReport {
                index: step.index,
                command: step.text.clone(),
                status: Status::Error,
                result: None,
                error: Some(e.to_string()),
            },
        };
        let stop = opts.fail_fast && rep.status != Status::Ok;
        results.push(rep);
        if stop {
            break;
        }
    }
    Report {
        schema: SCHEMA,
        tool: TOOL.to_string(),
        input: fingerprint(text),
        results,
        timings_ms: opts.timings.then_some(timings),
    }
}

/// 4 when any verdict is inconsistent, else 3 when any command failed.
pub fn exit_code(report: &Report) -> i32 {
    if report.results.iter().any(|r| r.status == Status::Inconsistent) {
        4
    } else if report.results.iter().any(|r| r.status == Status::Error) {
        3
    } else {
        0
    }
}
