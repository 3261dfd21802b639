//! Executable statements: each one checks its hypotheses on a concrete
//! instance and, when they all hold, evaluates its conclusion.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homalg::{ext_vanishes, tor_vanishes, tor_vanishes_positive, CertificateKind, VanishingCertificate};
use crate::invariants::{self, canonical_module, CertifiedValue};
use crate::localize;
use crate::module::PresentedModule;
use crate::resolve::{ring_depth, PdResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatementId {
    T1,
    T2,
    T3,
    Prop12a,
    Prop12b,
    Prop14a,
    Prop14b,
    Cor15,
    Cor16,
    Thm18,
    Lem110a,
    Lem110b,
    Lem110c,
    Thm111,
    Thm21,
    Cor22,
    Thm23,
    Thm24,
    Def11Equiv,
}

impl StatementId {
    pub const ALL: [StatementId; 19] = [
        StatementId::T1,
        StatementId::T2,
        StatementId::T3,
        StatementId::Prop12a,
        StatementId::Prop12b,
        StatementId::Prop14a,
        StatementId::Prop14b,
        StatementId::Cor15,
        StatementId::Cor16,
        StatementId::Thm18,
        StatementId::Lem110a,
        StatementId::Lem110b,
        StatementId::Lem110c,
        StatementId::Thm111,
        StatementId::Thm21,
        StatementId::Cor22,
        StatementId::Thm23,
        StatementId::Thm24,
        StatementId::Def11Equiv,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::T1 => "T1",
            StatementId::T2 => "T2",
            StatementId::T3 => "T3",
            StatementId::Prop12a => "prop1.2a",
            StatementId::Prop12b => "prop1.2b",
            StatementId::Prop14a => "prop1.4a",
            StatementId::Prop14b => "prop1.4b",
            StatementId::Cor15 => "cor1.5",
            StatementId::Cor16 => "cor1.6",
            StatementId::Thm18 => "thm1.8",
            StatementId::Lem110a => "lem1.10a",
            StatementId::Lem110b => "lem1.10b",
            StatementId::Lem110c => "lem1.10c",
            StatementId::Thm111 => "thm1.11",
            StatementId::Thm21 => "thm2.1",
            StatementId::Cor22 => "cor2.2",
            StatementId::Thm23 => "thm2.3",
            StatementId::Thm24 => "thm2.4",
            StatementId::Def11Equiv => "def1.1-equiv",
        }
    }

    /// Whether the statement takes a second module.
    pub fn needs_second(self) -> bool {
        !matches!(
            self,
            StatementId::T1
                | StatementId::Lem110a
                | StatementId::Lem110b
                | StatementId::Thm111
                | StatementId::Cor22
        )
    }

    /// Whether the statement takes the Serre parameter `n`.
    pub fn needs_n(self) -> bool {
        matches!(self, StatementId::Thm21 | StatementId::Cor22 | StatementId::Thm24)
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StatementId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownStatement(s.to_string()))
    }
}

impl Serialize for StatementId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for StatementId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    NotEstablished,
}

impl Status {
    fn of(b: bool) -> Status {
        if b {
            Status::Holds
        } else {
            Status::Fails
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::NotEstablished => "not-established",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub id: StatementId,
    pub hypotheses: Vec<Hypothesis>,
    pub applicable: bool,
    pub conclusion: Status,
    pub conclusion_witness: String,
    pub consistent: bool,
}

/// Extra inputs: the Serre parameter and the truncation bound over `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckParams {
    pub n: Option<usize>,
    pub bound: usize,
}

/// Lazily computed invariants of one instance, shared across hypotheses.
struct Ctx<'a> {
    m: PresentedModule,
    n: Option<&'a PresentedModule>,
    bound: usize,
    pd: OnceCell<PdResult>,
    depth_m: OnceCell<i64>,
    depth_n: OnceCell<i64>,
    dim_m: OnceCell<i64>,
    dim_n: OnceCell<i64>,
    grade: OnceCell<i64>,
    supp: OnceCell<bool>,
    tor: OnceCell<VanishingCertificate>,
    tensor: OnceCell<PresentedModule>,
    gdim: OnceCell<CertifiedValue<i64>>,
}

impl<'a> Ctx<'a> {
    fn n(&self) -> &'a PresentedModule {
        self.n.expect("checked by caller")
    }

    fn pd(&self) -> Result<PdResult> {
        get(&self.pd, || invariants::projective_dim(&self.m, self.bound))
    }
    fn depth_m(&self) -> Result<i64> {
        get(&self.depth_m, || invariants::depth(&self.m))
    }
    fn depth_n(&self) -> Result<i64> {
        get(&self.depth_n, || invariants::depth(self.n()))
    }
    fn dim_m(&self) -> Result<i64> {
        get(&self.dim_m, || invariants::dimension(&self.m))
    }
    fn dim_n(&self) -> Result<i64> {
        get(&self.dim_n, || invariants::dimension(self.n()))
    }
    fn grade(&self) -> Result<i64> {
        get(&self.grade, || invariants::grade_mn(&self.m, self.n()))
    }
    fn supp(&self) -> Result<bool> {
        get(&self.supp, || self.m.support_contains(self.n()))
    }
    fn tor(&self) -> Result<VanishingCertificate> {
        get(&self.tor, || tor_vanishes_positive(&self.m, self.n(), self.bound))
    }
    fn tensor(&self) -> Result<PresentedModule> {
        get(&self.tensor, || self.m.tensor(self.n()))
    }
    fn gdim(&self) -> Result<CertifiedValue<i64>> {
        get(&self.gdim, || invariants::gdim(&self.m, self.bound))
    }
    fn imp(&self) -> Result<i64> {
        Ok(self.depth_n()? - self.depth_m()? - self.grade()?)
    }
    fn cmd_m(&self) -> Result<i64> {
        Ok(self.dim_m()? - self.depth_m()?)
    }
    fn n_is_cm(&self) -> Result<bool> {
        Ok(self.dim_n()? == self.depth_n()?)
    }
}

fn get<T: Clone>(cell: &OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    if let Some(v) = cell.get() {
        return Ok(v.clone());
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v).clone())
}

struct Builder {
    hyps: Vec<Hypothesis>,
}

impl Builder {
    fn hyp(&mut self, name: &str, status: Status, witness: String) {
        self.hyps.push(Hypothesis { name: name.to_string(), status, witness });
    }

    fn applicable(&self) -> bool {
        self.hyps.iter().all(|h| h.status == Status::Holds)
    }
}

/// `{}` for none, else `{1, 3}`.
fn indices(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn pd_hyp(b: &mut Builder, ctx: &Ctx) -> Result<Option<usize>> {
    let pd = ctx.pd()?;
    let status = if pd.exact().is_some() { Status::Holds } else { Status::NotEstablished };
    let witness = match pd {
        PdResult::Exact(v) => format!("pd M = {v}"),
        PdResult::GreaterThan(bd) => format!("pd M > {bd}"),
    };
    b.hyp("pd M finite", status, witness);
    Ok(pd.exact())
}

fn tor_hyp(b: &mut Builder, ctx: &Ctx) -> Result<()> {
    let c = ctx.tor()?;
    let status = match (c.vanishes, c.kind) {
        (true, CertificateKind::Complete) => Status::Holds,
        (true, CertificateKind::UpToBound(_)) => Status::NotEstablished,
        (false, _) => Status::Fails,
    };
    let witness = match c.witness {
        Some(i) => format!("Tor_{i}(M, N) != 0"),
        None => match c.kind {
            CertificateKind::Complete => "Tor_i(M, N) = 0 for all i > 0".to_string(),
            CertificateKind::UpToBound(k) => format!("Tor_i(M, N) = 0 for 0 < i <= {k}"),
        },
    };
    b.hyp("Tor_i(M, N) = 0 for i > 0", status, witness);
    Ok(())
}

fn supp_hyp(b: &mut Builder, ctx: &Ctx) -> Result<()> {
    let s = ctx.supp()?;
    b.hyp("Supp M ⊆ Supp N", Status::of(s), format!("{s}"));
    Ok(())
}

fn n_cm_hyp(b: &mut Builder, ctx: &Ctx) -> Result<()> {
    let (d, e) = (ctx.dim_n()?, ctx.depth_n()?);
    b.hyp("N Cohen–Macaulay", Status::of(d == e), format!("dim N = {d}, depth N = {e}"));
    Ok(())
}

fn gdim_hyp(b: &mut Builder, ctx: &Ctx) -> Result<CertifiedValue<i64>> {
    let g = ctx.gdim()?;
    let status = if g.is_established() { Status::Holds } else { Status::NotEstablished };
    b.hyp("G-dim M finite", status, format!("G-dim M = {g}"));
    Ok(g)
}

fn ring_cm(m: &PresentedModule) -> Result<bool> {
    invariants::is_cohen_macaulay(&PresentedModule::ring_module(m.ring().clone()))
}

/// Largest `k <= dim S` with `(S_k)`, used when no `n` is supplied.
pub fn strongest_serre(m: &PresentedModule) -> Result<usize> {
    let top = m.ring().nvars();
    let mut k = 0;
    while k < top && invariants::satisfies_serre(m, k + 1)? {
        k += 1;
    }
    Ok(k)
}

/// Runs one statement on one instance.
pub fn check(
    id: StatementId,
    m: &PresentedModule,
    n: Option<&PresentedModule>,
    params: CheckParams,
) -> Result<TheoremVerdict> {
    if id.needs_second() && n.is_none() {
        return Err(Error::MissingArgument { id: id.to_string(), what: "a second module".into() });
    }
    if id.needs_n() && params.n.is_none() {
        return Err(Error::MissingArgument { id: id.to_string(), what: "the parameter n".into() });
    }
    if let Some(n) = n {
        m.ring().check_same(n.ring())?;
        n.nonzero()?;
    }
    let ctx = Ctx {
        m: m.nonzero()?,
        n,
        bound: params.bound,
        pd: OnceCell::new(),
        depth_m: OnceCell::new(),
        depth_n: OnceCell::new(),
        dim_m: OnceCell::new(),
        dim_n: OnceCell::new(),
        grade: OnceCell::new(),
        supp: OnceCell::new(),
        tor: OnceCell::new(),
        tensor: OnceCell::new(),
        gdim: OnceCell::new(),
    };
    let mut b = Builder { hyps: Vec::new() };
    let (applicable, conclusion, witness) = run(id, &ctx, &mut b, params)?;
    let conclusion = if applicable { conclusion } else { Status::NotEstablished };
    Ok(TheoremVerdict {
        id,
        applicable,
        consistent: !applicable || conclusion == Status::Holds,
        hypotheses: b.hyps,
        conclusion,
        conclusion_witness: witness,
    })
}

/// Evaluates hypotheses into `b`; the conclusion is computed only when they hold.
fn run(id: StatementId, ctx: &Ctx, b: &mut Builder, params: CheckParams) -> Result<(bool, Status, String)> {
    use StatementId::*;
    let skip = |b: &Builder| (b.applicable(), Status::NotEstablished, String::new());
    match id {
        T1 => {
            let r = ring_cm(&ctx.m)?;
            b.hyp("R Cohen–Macaulay", Status::of(r), format!("{r}"));
            let pd = pd_hyp(b, ctx)?;
            if !b.applicable() {
                return Ok(skip(b));
            }
            let pd = pd.expect("applicable") as i64;
            let g = invariants::grade(&ctx.m)?;
            let cm = ctx.cmd_m()? == 0;
            Ok((true, Status::of(cm == (g == pd)), format!("M CM = {cm}, grade M = {g}, pd M = {pd}")))
        }
        T2 => {
            let pd = pd_hyp(b, ctx)?;
            if pd.is_some() {
                tor_hyp(b, ctx)?;
            }
            if !b.applicable() {
                return Ok(skip(b));
            }
            let pd = pd.expect("applicable") as i64;
            let dt = invariants::depth(&ctx.tensor()?)?;
            let dn = ctx.depth_n()?;
            Ok((true, Status::of(dt == dn - pd), format!("depth M⊗N = {dt}, depth N = {dn}, pd M = {pd}")))
        }
        T3 => {
            let pd = pd_hyp(b, ctx)?;
            if !b.applicable() {
                return Ok(skip(b));
            }
            let pd = pd.expect("applicable") as i64;
            let dn = ctx.dim_n()?;
            let dt = ctx.tensor()?.dim();
            Ok((true, Status::of(dn <= pd + dt), format!("dim N = {dn}, pd M = {pd}, dim M⊗N = {dt}")))
        }
        Prop12a => {
            let (dn, dm, g) = (ctx.depth_n()?, ctx.dim_m()?, ctx.grade()?);
            Ok((true, Status::of(dn - dm <= g), format!("depth N = {dn}, dim M = {dm}, grade(M, N) = {g}")))
        }
        Prop12b => {
            supp_hyp(b, ctx)?;
            if !b.applicable() {
                return Ok(skip(b));
            }
            let (dn, dm, g) = (ctx.dim_n()?, ctx.dim_m()?, ctx.grade()?);
            Ok((true, Status::of(g <= dn - dm), format!("grade(M, N) = {g}, dim N = {dn}, dim M = {dm}")))
        }
        Prop14a => {
            let (imp, cmd) = (ctx.imp()?, ctx.cmd_m()?);
            Ok((true, Status::of(imp <= cmd), format!("imp(M, N) = {imp}, cmd M = {cmd}")))
        }
        Prop14b => {
            supp_hyp(b, ctx)?;
            if !b.applicable() {
                return Ok(skip(b));
            }
            let (imp, cmd) = (ctx.imp()?, ctx.cmd_m()?);
            let cmd_n = ctx.dim_n()? - ctx.depth_n()?;
            Ok((
                true,
                Status::of(cmd <= imp + cmd_n),
                format!("cmd M = {cmd}, imp(M, N) = {imp}, cmd N = {cmd_n}"),
            ))
        }
        Cor15 => {
            n_cm_hyp(b, ctx)?;
            supp_hyp(b, ctx)?;
            if !b.applicable() {
                return Ok(skip(b));
            }
            let (imp, cmd) = (ctx.imp()?, ctx.cmd_m()?);
            Ok((true, Status::of(cmd == imp), format!("cmd M = {cmd}, imp(M, N) = {imp}")))
        }
        Cor16 => {
            n_cm_hyp(b, ctx)?;
            let (dn, dr) = (ctx.depth_n()?, ring_depth(ctx.m.ring()));
            b.hyp("depth N = depth R", Status::of(dn == dr), format!("depth N = {dn}, depth R = {dr}"));
            let pd = pd_hyp(b, ctx)?;
            supp_hyp(b, ctx)?;
            if !b.applicable() {
                return Ok(skip(b));
            }
            let pd = pd.expect("applicable");
            let mut nonzero = Vec::new();
            for i in 0..pd {
                if !ext_vanishes(i, &ctx.m, ctx.n(), usize::MAX)? {
                    nonzero.push(i);
                }
            }
            let cm = ctx.cmd_m()? == 0;
            Ok((
                true,
                Status::of(cm == nonzero.is_empty()),
                format!("M CM = {cm}, pd M = {pd}, Ext^i(M, N) nonzero below pd for i in {}", indices(&nonzero)),
            ))
        }
        Thm18 => {
            n_cm_hyp(b, ctx)?;
            let pd = pd_hyp(b, ctx)?;
            if pd.is_some() {
                tor_hyp(b, ctx)?;
            }
            if !b.applicable() {
                return Ok(skip(b));
            }
            let pd = pd.expect("applicable") as i64;
            let t = ctx.tensor()?;
            let t_cm = invariants::is_cohen_macaulay(&t)?;
            let g = ctx.grade()?;
            let gt = invariants::grade_mn(&t, ctx.n())?;
            let ok = t_cm == (pd == g) && gt == g;
            Ok((
                true,
                Status::of(ok),
                format!("M⊗N CM = {t_cm}, pd M = {pd}, grade(M, N) = {g}, grade(M⊗N, N) = {gt}"),
            ))
        }
        Lem110a => {
            let g = gdim_hyp(b, ctx)?;
            if !b.applicable() {
                return Ok(skip(b));
            }
            let (dm, dr) = (ctx.depth_m()?, ring_depth(ctx.m.ring()));
            Ok((
                true,
                Status::of(g.value + dm == dr),
                format!("G-dim M = {}, depth M = {dm}, depth R = {dr}", g.value),
            ))
        }
        Lem110b => {
            let g = gdim_hyp(b, ctx)?;
            if !b.applicable() {
                return Ok(skip(b));
            }
            let top = match ctx.pd()? {
                PdResult::Exact(p) => p,
                PdResult::GreaterThan(_) => ctx.bound,
            };
            let r = PresentedModule::ring_module(ctx.m.ring().clone());
            let mut sup = None;
            for t in 0..=top {
                if !ext_vanishes(t, &ctx.m, &r, ctx.bound.max(top) + 1)? {
                    sup = Some(t as i64);
                }
            }
            Ok((
                true,
                Status::of(sup == Some(g.value)),
                format!("G-dim M = {}, sup Ext^t(M, R) != 0 at t = {sup:?} (t <= {top})", g.value),
            ))
        }
        Lem110c => {
            let g = gdim_hyp(b, ctx)?;
            let p = ctx.n();
            let pdp = invariants::projective_dim(p, ctx.bound)?;
            let status = if pdp.exact().is_some() { Status::Holds } else { Status::NotEstablished };
            b.hyp("pd P finite", status, format!("pd P = {pdp}"));
            if !b.applicable() {
                return Ok(skip(b));
            }
            let pdp = pdp.exact().expect("applicable");
            let start = (g.value + 1).max(1) as usize;
            let mut nonzero = Vec::new();
            for i in start..=pdp {
                // Tor_i(M, P) = Tor_i(P, M) via the finite resolution of P.
                if !tor_vanishes(i, p, &ctx.m, usize::MAX)? {
                    nonzero.push(i);
                }
            }
            Ok((
                true,
                Status::of(nonzero.is_empty()),
                format!("G-dim M = {}, pd P = {pdp}, Tor_i(M, P) nonzero for i in {}", g.value, indices(&nonzero)),
            ))
        }
        Thm111 => {
            let r = ring_cm(&ctx.m)?;
            b.hyp("R Cohen–Macaulay", Status::of(r), format!("{r}"));
            if !r {
                return Ok(skip(b));
            }
            let g = gdim_hyp(b, ctx)?;
            if !b.applicable() {
                return Ok(skip(b));
            }
            let k = canonical_module(ctx.m.ring())?;
            let t = ctx.m.tensor(&k)?;
            let t_cm = invariants::is_cohen_macaulay(&t)?;
            let m_cm = ctx.cmd_m()? == 0;
            let mut tor_nonzero = Vec::new();
            for i in 1..=ctx.bound {
                if !tor_vanishes(i, &ctx.m, &k, ctx.bound + 1)? {
                    tor_nonzero.push(i);
                }
            }
            let (dt, dk) = (invariants::depth(&t)?, invariants::depth(&k)?);
            let ok = t_cm == m_cm && tor_nonzero.is_empty() && dt == dk - g.value;
            Ok((
                true,
                Status::of(ok),
                format!(
                    "M⊗K CM = {t_cm}, M CM = {m_cm}, Tor_i(M, K) nonzero for 0 < i <= {} at {}, \
                     depth M⊗K = {dt}, depth K = {dk}, G-dim M = {}",
                    ctx.bound,
                    indices(&tor_nonzero),
                    g.value
                ),
            ))
        }
        Thm21 => {
            let n = params.n.expect("checked");
            let sn = invariants::satisfies_serre(ctx.n(), n)?;
            b.hyp("N satisfies (S_n)", Status::of(sn), format!("n = {n}"));
            let pd = pd_hyp(b, ctx)?;
            if let Some(t) = pd {
                let g = ctx.grade()?;
                b.hyp("M N-perfect", Status::of(t as i64 == g), format!("pd M = {t}, grade(M, N) = {g}"));
                b.hyp("pd M <= n", Status::of(t <= n), format!("t = {t}, n = {n}"));
                tor_hyp(b, ctx)?;
            }
            if !b.applicable() {
                return Ok(skip(b));
            }
            let t = pd.expect("applicable");
            let s = invariants::satisfies_serre(&ctx.tensor()?, n - t)?;
            Ok((true, Status::of(s), format!("M⊗N satisfies (S_{}) = {s}", n - t)))
        }
        Cor22 => {
            let n = params.n.expect("checked");
            let r = PresentedModule::ring_module(ctx.m.ring().clone());
            let sr = invariants::satisfies_serre(&r, n)?;
            b.hyp("R satisfies (S_n)", Status::of(sr), format!("n = {n}"));
            let pd = pd_hyp(b, ctx)?;
            if let Some(t) = pd {
                let g = invariants::grade(&ctx.m)?;
                b.hyp("M perfect", Status::of(t as i64 == g), format!("pd M = {t}, grade M = {g}"));
                b.hyp("pd M <= n", Status::of(t <= n), format!("t = {t}, n = {n}"));
            }
            if !b.applicable() {
                return Ok(skip(b));
            }
            let t = pd.expect("applicable");
            let s = invariants::satisfies_serre(&ctx.m, n - t)?;
            Ok((true, Status::of(s), format!("M satisfies (S_{}) = {s}", n - t)))
        }
        Thm23 => {
            let pd = pd_hyp(b, ctx)?;
            if pd.is_some() {
                tor_hyp(b, ctx)?;
            }
            if !b.applicable() {
                return Ok(skip(b));
            }
            let t_cm = invariants::is_cohen_macaulay(&ctx.tensor()?)?;
            let n_cm = ctx.n_is_cm()?;
            Ok((true, Status::of(!t_cm || n_cm), format!("M⊗N CM = {t_cm}, N CM = {n_cm}")))
        }
        Thm24 => {
            let n = params.n.expect("checked");
            let pd = pd_hyp(b, ctx)?;
            if pd.is_some() {
                tor_hyp(b, ctx)?;
            }
            if !b.applicable() {
                return Ok(skip(b));
            }
            let ts = invariants::satisfies_serre(&ctx.tensor()?, n)?;
            let ns = invariants::satisfies_serre(ctx.n(), n)?;
            Ok((
                true,
                Status::of(!ts || ns),
                format!("M⊗N satisfies (S_{n}) = {ts}, N satisfies (S_{n}) = {ns}"),
            ))
        }
        Def11Equiv => {
            let mono = localize::is_monomial_ring(ctx.m.ring())
                && localize::multidegrees(&ctx.m).is_some()
                && localize::multidegrees(ctx.n()).is_some();
            b.hyp("monomial instance", Status::of(mono), format!("{mono}"));
            if !b.applicable() {
                return Ok(skip(b));
            }
            let g = ctx.grade()?;
            let l = localize::grade_by_localization(&ctx.m, ctx.n())?;
            Ok((
                true,
                Status::of(g == l),
                format!("grade(M, N) = {g}, min depth N_p over Supp M = {l}"),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{PolyRingDesc, Polynomial};
    use crate::ring::QuotientRing;
    use std::sync::Arc;

    fn qxy() -> (Arc<QuotientRing>, Polynomial, Polynomial) {
        let d = PolyRingDesc::rational(&["x", "y"]);
        let (x, y) = (d.var(0), d.var(1));
        (QuotientRing::polynomial(d), x, y)
    }

    const P: CheckParams = CheckParams { n: None, bound: 8 };

    #[test]
    fn ids_round_trip() {
        for id in StatementId::ALL {
            assert_eq!(id.as_str().parse::<StatementId>().unwrap(), id);
        }
        assert!(matches!("thm9.9".parse::<StatementId>(), Err(Error::UnknownStatement(_))));
    }

    #[test]
    fn thm18_on_coordinate_lines() {
        let (r, x, y) = qxy();
        let m = PresentedModule::cyclic(r.clone(), &[x]).unwrap();
        let n = PresentedModule::cyclic(r.clone(), &[y]).unwrap();
        let v = check(StatementId::Thm18, &m, Some(&n), P).unwrap();
        assert!(v.applicable);
        assert_eq!(v.conclusion, Status::Holds);
        assert!(v.consistent);
    }

    #[test]
    fn thm23_and_t3_examples() {
        let (r, x, _) = qxy();
        let m = PresentedModule::cyclic(r.clone(), &[x]).unwrap();
        let s = PresentedModule::ring_module(r.clone());
        let v = check(StatementId::Thm23, &m, Some(&s), P).unwrap();
        assert!(v.applicable && v.consistent);
        let k = PresentedModule::residue_field(r.clone());
        let v = check(StatementId::T3, &k, Some(&s), P).unwrap();
        assert!(v.applicable && v.consistent);
        assert_eq!(v.conclusion_witness, "dim N = 2, pd M = 2, dim M⊗N = 0");
    }

    #[test]
    fn thm111_on_hypersurface() {
        let d = PolyRingDesc::rational(&["x", "y"]);
        let (x, y) = (d.var(0), d.var(1));
        let r = QuotientRing::new(d.clone(), &[d.mul(&x, &y)]).unwrap();
        let m = PresentedModule::cyclic(r.clone(), &[x]).unwrap();
        let v = check(StatementId::Thm111, &m, None, CheckParams { n: None, bound: 6 }).unwrap();
        assert!(v.applicable, "{v:?}");
        assert!(v.consistent, "{v:?}");
    }

    #[test]
    fn missing_arguments_rejected() {
        let (r, x, _) = qxy();
        let m = PresentedModule::cyclic(r, &[x]).unwrap();
        assert!(matches!(check(StatementId::Prop12a, &m, None, P), Err(Error::MissingArgument { .. })));
        assert!(matches!(check(StatementId::Cor22, &m, None, P), Err(Error::MissingArgument { .. })));
    }

    #[test]
    fn inapplicable_when_pd_unknown() {
        let d = PolyRingDesc::rational(&["x", "y"]);
        let (x, y) = (d.var(0), d.var(1));
        let r = QuotientRing::new(d.clone(), &[d.mul(&x, &y)]).unwrap();
        let m = PresentedModule::cyclic(r.clone(), &[x]).unwrap();
        let n = PresentedModule::cyclic(r.clone(), &[y]).unwrap();
        let v = check(StatementId::T2, &m, Some(&n), P).unwrap();
        assert!(!v.applicable);
        assert_eq!(v.hypotheses[0].status, Status::NotEstablished);
        assert!(v.consistent);
    }
}
