//! Acceptance suite. Prints one PASS/FAIL line per criterion, then fails
//! if any criterion failed. Limits are wall-clock and pinned below.

use std::io::Write as _;
use std::path::Path;
use std::process::{Command, Stdio};
use std::sync::Arc;
use std::time::{Duration, Instant};

use cmw_core::generate::{campaign, random_instance, GeneratorParams, IdealStyle};
use cmw_core::homalg::{ext_module, tor_hilbert, tor_module, tor_vanishes};
use cmw_core::invariants::{
    canonical_module, cmd, depth, depth_via_ext, gdim, gdim_zero, grade, grade_mn, grade_oracle, imperfection,
    is_cohen_macaulay, is_maximal_cm, projective_dim, satisfies_serre, Certainty,
};
use cmw_core::localize::serre_by_localization;
use cmw_core::resolve::betti_table;
use cmw_core::theorems::check;
use cmw_core::{
    CheckParams, Error, PdResult, PolyRingDesc, PresentedModule, QuotientRing, RingTag, StatementId, Status,
};

type Outcome = Result<String, String>;
type Criterion = (usize, &'static str, u64, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn k<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

struct Rings {
    s: Arc<QuotientRing>,
    hyper: Arc<QuotientRing>,
    semigroup: Arc<QuotientRing>,
}

fn rings() -> Rings {
    let d = PolyRingDesc::rational(&["x", "y"]);
    let (x, y) = (d.var(0), d.var(1));
    let s = QuotientRing::polynomial(d.clone());
    let hyper = QuotientRing::new(d.clone(), &[d.mul(&x, &y)]).unwrap();
    let w = PolyRingDesc::with_weights(
        cmw_core::CoefficientField::Rationals,
        vec!["x".into(), "y".into(), "z".into()],
        cmw_core::MonomialOrder::GradedReverseLex,
        vec![3, 4, 5],
    )
    .unwrap();
    let (a, b, c) = (w.var(0), w.var(1), w.var(2));
    let semigroup = QuotientRing::new(
        w.clone(),
        &[
            w.sub(&w.mul(&a, &c), &w.mul(&b, &b)),
            w.sub(&w.pow(&a, 3), &w.mul(&b, &c)),
            w.sub(&w.mul(&w.mul(&a, &a), &b), &w.mul(&c, &c)),
        ],
    )
    .unwrap();
    Rings { s, hyper, semigroup }
}

/// `R / (generators built from the ring's variables)`.
fn cyclic(r: &Arc<QuotientRing>, f: impl Fn(&PolyRingDesc) -> Vec<cmw_core::Polynomial>) -> PresentedModule {
    PresentedModule::cyclic(r.clone(), &f(r.ambient())).unwrap()
}

/// `a ≅ b` up to a shift, for minimally presented cyclic-sized modules:
/// same number of generators and equal Hilbert functions from the lowest
/// generator degree on.
fn same_up_to_shift(a: &PresentedModule, b: &PresentedModule) -> bool {
    let lo = |m: &PresentedModule| m.generator_degrees().iter().copied().min().unwrap_or(0);
    let (la, lb) = (lo(a), lo(b));
    a.num_generators() == b.num_generators() && a.hilbert_function(la..=la + 10) == b.hilbert_function(lb..=lb + 10)
}

fn campaign_params() -> GeneratorParams {
    GeneratorParams { seed: 2024, variables: 3, style: IdealStyle::Monomial, max_degree: 3, ..Default::default() }
}

const INSTANCES: usize = 200;
const CAMPAIGN_BOUND: usize = 10;

fn c1_worked_examples() -> Outcome {
    let Rings { s, hyper, semigroup } = rings();
    let m = cyclic(&s, |d| vec![d.pow(&d.var(0), 2), d.mul(&d.var(0), &d.var(1))]);
    let sx = cyclic(&s, |d| vec![d.var(0)]);
    let sy = cyclic(&s, |d| vec![d.var(1)]);
    let kf = PresentedModule::residue_field(s.clone());
    let sm = PresentedModule::ring_module(s.clone());

    eq("depth coker[x^2, xy]", k(depth(&m))?, 0)?;
    eq("dim coker[x^2, xy]", m.dim(), 1)?;
    eq("pd coker[x^2, xy]", k(projective_dim(&m, 8))?, PdResult::Exact(2))?;
    eq("cmd coker[x^2, xy]", k(cmd(&m))?, 1)?;
    eq("grade coker[x^2, xy]", k(grade(&m))?, 1)?;
    eq("imp(coker[x^2, xy], S)", k(imperfection(&m, &sm))?, 1)?;
    eq("CM coker[x^2, xy]", k(is_cohen_macaulay(&m))?, false)?;
    eq("Betti coker[x^2, xy]", k(betti_table(&m, RingTag::Ambient, usize::MAX))?.totals(), vec![1, 2, 1])?;
    eq("depth S/(x)", k(depth(&sx))?, 1)?;
    eq("grade(S/(x), S)", k(grade_mn(&sx, &sm))?, 1)?;
    eq("grade(k, S)", k(grade_mn(&kf, &sm))?, 2)?;

    let e1 = k(ext_module(1, &sx, &sm, 8))?;
    ensure!(same_up_to_shift(&e1.value, &sx), "Ext^1(S/(x), S) is not S/(x) up to shift");
    for i in 0..2 {
        ensure!(k(ext_module(i, &kf, &sm, 8))?.vanishes, "Ext^{i}(k, S) nonzero");
    }
    ensure!(same_up_to_shift(&k(ext_module(2, &kf, &sm, 8))?.value, &kf), "Ext^2(k, S) is not k");
    ensure!(k(tor_module(1, &sx, &sy, 8))?.vanishes, "Tor_1(S/(x), S/(y)) nonzero");
    let t = k(tor_module(1, &sx, &sx, 8))?.value;
    eq("Tor_1(S/(x), S/(x)) generator degrees", t.generator_degrees().to_vec(), vec![1])?;
    ensure!(same_up_to_shift(&t, &sx), "Tor_1(S/(x), S/(x)) is not S/(x)(-1)");

    let hx = cyclic(&hyper, |d| vec![d.var(0)]);
    eq("pd_R coker[x] at bound 8", k(projective_dim(&hx, 8))?, PdResult::GreaterThan(8))?;
    eq("CM coker[x] over R", k(is_cohen_macaulay(&hx))?, true)?;
    eq("MCM coker[x] over R", k(is_maximal_cm(&hx))?, true)?;
    let kh = k(canonical_module(&hyper))?;
    let rh = PresentedModule::ring_module(hyper.clone());
    eq(
        "Betti of K vs R over S",
        k(betti_table(&kh, RingTag::Ambient, usize::MAX))?.totals(),
        k(betti_table(&rh, RingTag::Ambient, usize::MAX))?.totals(),
    )?;
    eq("generators of K for <3,4,5>", k(canonical_module(&semigroup))?.num_generators(), 2)?;
    Ok("depth/dim/pd/grade/imp/cmd, Betti 1,2,1, Ext/Tor shapes, K of R and of <3,4,5>".into())
}

fn c2_dual_routes() -> Outcome {
    let p = campaign_params();
    let mut checks = 0usize;
    let mut mismatches = Vec::new();
    for index in 0..INSTANCES {
        let inst = k(random_instance(&p, index))?;
        let (m, n) = (&inst.m, &inst.n);
        checks += 1;
        if k(grade_mn(m, n))? != k(grade_oracle(m, n))? {
            mismatches.push(format!("#{index} grade"));
        }
        for (tag, x) in [("M", m), ("N", n)] {
            checks += 1;
            if k(depth(x))? != k(depth_via_ext(x))? {
                mismatches.push(format!("#{index} depth {tag}"));
            }
        }
        for i in 0..=4 {
            checks += 1;
            let a = k(tor_hilbert(i, m, n, CAMPAIGN_BOUND, 0..=10))?;
            let b = k(tor_hilbert(i, n, m, CAMPAIGN_BOUND, 0..=10))?;
            if a != b {
                mismatches.push(format!("#{index} Tor_{i}"));
            }
        }
    }
    ensure!(mismatches.is_empty(), "{} mismatches: {:?}", mismatches.len(), mismatches);
    Ok(format!("{INSTANCES} instances, {checks} comparisons, 0 mismatches"))
}

fn run_campaign(ids: &[StatementId], min_applicable: usize) -> Outcome {
    let s = k(campaign(ids, &campaign_params(), INSTANCES, CAMPAIGN_BOUND))?;
    ensure!(s.failures.is_empty(), "{} failures, first: {:?}", s.failures.len(), s.failures.first());
    let mut parts = Vec::new();
    for (id, t) in &s.per_statement {
        ensure!(t.consistent == t.applicable, "{id}: {} of {} applicable consistent", t.consistent, t.applicable);
        ensure!(t.applicable >= min_applicable, "{id}: only {} applicable (need {min_applicable})", t.applicable);
        parts.push(format!("{id} {}/{}", t.consistent, t.applicable));
    }
    Ok(format!("consistent/applicable: {}", parts.join(", ")))
}

fn c3_inequalities() -> Outcome {
    use StatementId::*;
    run_campaign(&[Prop12a, Prop12b, Prop14a, Prop14b, T3], 1)
}

fn c4_equalities() -> Outcome {
    use StatementId::*;
    run_campaign(&[T2, Cor15, Cor16, Thm18, Thm21, Cor22, Thm23, Thm24], 30)
}

fn verdict_ok(id: StatementId, m: &PresentedModule, n: Option<&PresentedModule>, bound: usize) -> Result<(), String> {
    let v = k(check(id, m, n, CheckParams { n: None, bound }))?;
    ensure!(v.applicable, "{id} not applicable: {:?}", v.hypotheses);
    ensure!(v.consistent && v.conclusion == Status::Holds, "{id}: {}", v.conclusion_witness);
    Ok(())
}

fn c5_gdim() -> Outcome {
    let r = rings().hyper;
    let x = cyclic(&r, |d| vec![d.var(0)]);
    let kf = PresentedModule::residue_field(r.clone());
    let z = k(gdim_zero(&x, 6))?;
    ensure!(z.value && z.certainty == Certainty::CertifiedUpToBound(6), "gdim_zero(coker[x], 6) = {z}");
    let g = k(gdim(&kf, 6))?;
    ensure!(g.value == 1 && g.is_established(), "gdim k = {g}");
    verdict_ok(StatementId::Lem110a, &kf, None, 6)?;
    verdict_ok(StatementId::Lem110b, &kf, None, 6)?;
    let rm = PresentedModule::ring_module(r.clone());
    let p1 = cyclic(&r, |d| vec![d.add(&d.var(0), &d.var(1))]);
    eq("pd R/(x+y)", k(projective_dim(&p1, 6))?, PdResult::Exact(1))?;
    for p in [&rm, &p1] {
        verdict_ok(StatementId::Lem110c, &x, Some(p), 6)?;
    }
    Ok(format!("gdim_zero(coker[x]) {z}, gdim k = {g}, lem1.10a/b/c hold"))
}

fn c6_canonical() -> Outcome {
    const BOUND: usize = 6;
    let Rings { hyper, semigroup, .. } = rings();
    let mut done = Vec::new();
    for (name, r) in [("xy", &hyper), ("<3,4,5>", &semigroup)] {
        let kk = k(canonical_module(r))?;
        let rm = PresentedModule::ring_module(r.clone());
        ensure!(k(is_maximal_cm(&kk))?, "K of {name} not MCM");
        ensure!(k(kk.support_contains(&rm))? && k(rm.support_contains(&kk))?, "K of {name} lacks full support");
        let mut ms = vec![("R", rm.clone()), ("k", PresentedModule::residue_field(r.clone()))];
        if Arc::ptr_eq(r, &hyper) {
            ms.push(("coker[x]", cyclic(r, |d| vec![d.var(0)])));
        }
        for (mname, m) in ms {
            let g = k(gdim(&m, BOUND))?;
            if !g.is_established() {
                done.push(format!("{name}:{mname} skipped (G-dim not certified)"));
                continue;
            }
            verdict_ok(StatementId::Thm111, &m, None, BOUND)?;
            let t = k(m.tensor(&kk))?;
            ensure!(
                k(is_cohen_macaulay(&t))? == k(is_cohen_macaulay(&m))?,
                "{name}:{mname} biconditional fails"
            );
            for i in 1..=BOUND {
                ensure!(k(tor_vanishes(i, &m, &kk, BOUND + 1))?, "{name}:{mname} Tor_{i}(M, K) nonzero");
            }
            eq(&format!("{name}:{mname} depth M⊗K"), k(depth(&t))?, k(depth(&kk))? - g.value)?;
            done.push(format!("{name}:{mname} ok"));
        }
    }
    Ok(done.join(", "))
}

fn c7_serre() -> Outcome {
    const WANT: usize = 50;
    let p = campaign_params();
    let (mut checked, mut skipped, mut index) = (0usize, 0usize, 0usize);
    let mut mismatches = Vec::new();
    while checked < WANT {
        ensure!(index < 10 * WANT, "only {checked} multigraded instances among {index}");
        let m = k(random_instance(&p, index))?.m;
        index += 1;
        match serre_by_localization(&m, 0) {
            Err(Error::NotMonomial) => {
                skipped += 1;
                continue;
            }
            r => {
                k(r)?;
            }
        }
        for kk in 0..=2 {
            if k(satisfies_serre(&m, kk))? != k(serre_by_localization(&m, kk))? {
                mismatches.push(format!("#{} S{kk}", index - 1));
            }
        }
        checked += 1;
    }
    ensure!(mismatches.is_empty(), "mismatches: {mismatches:?}");
    Ok(format!("{checked} instances x k in 0..=2, 0 mismatches ({skipped} non-multigraded skipped)"))
}

fn cmw(args: &[&str], cache: &Path, stdin: &str) -> std::process::Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cmw"))
        .args(args)
        .env("CMW_CACHE_DIR", cache)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn c8_cli() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus");
    let mut files: Vec<_> = k(std::fs::read_dir(&dir))?.filter_map(|e| e.ok().map(|e| e.path())).collect();
    files.retain(|p| p.extension().is_some_and(|e| e == "cmw"));
    files.sort();
    ensure!(files.len() >= 5, "corpus has {} scripts", files.len());
    let tmp = k(tempfile::tempdir())?;
    let cache = tmp.path().join("cache");
    for f in &files {
        let text = k(std::fs::read_to_string(f))?;
        let a = k(cmw_cli::parse_syntax(&text))?;
        let b = k(cmw_cli::parse_syntax(&a.to_string()))?;
        ensure!(a == b, "{} does not round trip", f.display());
        let cold = cmw(&["--json"], &cache, &text);
        let warm = cmw(&["--json"], &cache, &text);
        ensure!(cold.status.code() == Some(0), "{} exit {:?}", f.display(), cold.status.code());
        ensure!(cold.stdout == warm.stdout, "{} cold and warm reports differ", f.display());
    }
    let codes: Vec<Option<i32>> = [
        "ring S = poly(Q; x, y); module M = coker S [[x]]; invariants M;",
        "module M = coker T [[x]];",
        "ring S = poly(Q; x, y); module Z = coker S [[1]]; invariants Z;",
    ]
    .iter()
    .map(|s| cmw(&[], &cache, s).status.code())
    .collect();
    eq("exit codes", codes, vec![Some(0), Some(2), Some(3)])?;
    Ok(format!("{} corpus scripts round trip, cold = warm; exit codes 0, 2, 3", files.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        (1, "worked examples", 10, c1_worked_examples),
        (2, "dual-route oracles", 300, c2_dual_routes),
        (3, "inequality campaign", 300, c3_inequalities),
        (4, "equality campaign", 600, c4_equalities),
        (5, "G-dimension suite", 30, c5_gdim),
        (6, "canonical module suite", 60, c6_canonical),
        (7, "Serre by localization", 300, c7_serre),
        (8, "CLI contract", 30, c8_cli),
    ];
    // Straight to the stderr handle so the lines show without --nocapture.
    let mut err = std::io::stderr();
    let _ = writeln!(err);
    let mut failed = Vec::new();
    for (n, name, limit, f) in criteria {
        let start = Instant::now();
        let res = f();
        let took = start.elapsed();
        let res = match res {
            Ok(d) if took > Duration::from_secs(limit) => Err(format!("over time limit; {d}")),
            r => r,
        };
        let (tag, detail) = match &res {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        let _ = writeln!(err, "criterion {n} {tag} {name} [{} ms, limit {limit} s]: {detail}", took.as_millis());
        if res.is_err() {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
