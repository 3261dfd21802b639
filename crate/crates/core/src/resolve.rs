//! Minimal graded free resolutions, Betti tables and projective dimension.
//!
//! Resolutions are built one syzygy step at a time and cached per
//! (module fingerprint, ring tag); a longer request extends the cached prefix.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{kernel, minimal_columns, Matrix};
use crate::module::PresentedModule;
use crate::poly::{Exp, Polynomial};
use crate::ring::QuotientRing;

/// Which ring a resolution is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingTag {
    /// The ambient polynomial ring `S`.
    Ambient,
    /// The quotient `R = S/I` the module is defined over.
    Quotient,
}

impl RingTag {
    pub fn keyword(self) -> &'static str {
        match self {
            RingTag::Ambient => "ambient",
            RingTag::Quotient => "quotient",
        }
    }
}

/// `F_L -> ... -> F_1 -> F_0`, with `∂_i : F_i -> F_{i-1}`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub over: RingTag,
    ring: Arc<QuotientRing>,
    free: Vec<Vec<i64>>,
    differentials: Vec<Matrix>,
    minimal: bool,
    complete: bool,
}

/// Graded Betti numbers `β_{i,j}`: rank of `F_i` in internal degree `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), usize>,
}

/// One nonzero `β_{i,j}`, as serialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub degree: i64,
    pub rank: usize,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entry_list())
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<BettiEntry>::deserialize(d)?;
        Ok(BettiTable { entries: v.into_iter().map(|e| ((e.i, e.degree), e.rank)).collect() })
    }
}

impl BettiTable {
    /// Nonzero entries in `(i, degree)` order.
    pub fn entry_list(&self) -> Vec<BettiEntry> {
        self.entries.iter().map(|(&(i, degree), &rank)| BettiEntry { i, degree, rank }).collect()
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| v).sum()
    }

    /// Total ranks `β_0, β_1, ...` up to the last nonzero one.
    pub fn totals(&self) -> Vec<usize> {
        let top = self.entries.keys().map(|(i, _)| *i).max();
        match top {
            None => Vec::new(),
            Some(t) => (0..=t).map(|i| self.total(i)).collect(),
        }
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay-style table: row `j - i`, column `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "total: 0");
        }
        let cols = self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0) + 1;
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self.entries.keys().map(|(i, j)| j - *i as i64).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        write!(f, "{:>7}", "total:")?;
        for i in 0..cols {
            write!(f, " {:>4}", self.total(i))?;
        }
        writeln!(f)?;
        for r in rows {
            write!(f, "{:>6}:", r)?;
            for i in 0..cols {
                match self.entries.get(&(i, r + i as i64)) {
                    Some(v) => write!(f, " {:>4}", v)?,
                    None => write!(f, " {:>4}", ".")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Projective dimension, exact or bounded below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum PdResult {
    Exact(usize),
    GreaterThan(usize),
}

impl PdResult {
    pub fn exact(self) -> Option<usize> {
        match self {
            PdResult::Exact(v) => Some(v),
            PdResult::GreaterThan(_) => None,
        }
    }
}

impl fmt::Display for PdResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PdResult::Exact(v) => write!(f, "{v}"),
            PdResult::GreaterThan(b) => write!(f, ">{b}"),
        }
    }
}

impl FreeResolution {
    /// Builds a resolution from explicit differentials `∂_1..∂_L`.
    /// `complete` asserts that `F_{L+1} = 0`.
    pub fn from_differentials(
        over: RingTag,
        ring: Arc<QuotientRing>,
        f0: Vec<i64>,
        differentials: Vec<Matrix>,
        complete: bool,
    ) -> Result<Self> {
        let mut free = vec![f0];
        for (i, d) in differentials.iter().enumerate() {
            if d.row_degrees != free[i] {
                return Err(Error::Internal(format!("differential {} has mismatched source", i + 1)));
            }
            free.push(d.col_degrees.clone());
        }
        let mut r = FreeResolution { over, ring, free, differentials, minimal: false, complete };
        r.minimal = r.check_minimal();
        Ok(r)
    }

    fn check_minimal(&self) -> bool {
        self.differentials.iter().all(|d| d.columns.iter().flatten().all(|p| !p.is_unit()))
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    /// Number of computed differentials.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Whether the resolution is known to stop after `F_L`.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// `None` when complete, otherwise the last computed index.
    pub fn truncated_at(&self) -> Option<usize> {
        if self.complete {
            None
        } else {
            Some(self.length())
        }
    }

    /// Degrees of the basis of `F_i`.
    pub fn free_degrees(&self, i: usize) -> Result<Vec<i64>> {
        if i < self.free.len() {
            Ok(self.free[i].clone())
        } else if self.complete {
            Ok(Vec::new())
        } else {
            Err(Error::BeyondBound { index: i, bound: self.length() })
        }
    }

    pub fn rank(&self, i: usize) -> Result<usize> {
        Ok(self.free_degrees(i)?.len())
    }

    /// `∂_i : F_i -> F_{i-1}` for `i >= 1`.
    pub fn differential(&self, i: usize) -> Result<Matrix> {
        assert!(i >= 1, "differentials start at 1");
        if i <= self.length() {
            return Ok(self.differentials[i - 1].clone());
        }
        Ok(Matrix::zero(self.free_degrees(i - 1)?, self.free_degrees(i)?))
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    /// Largest `i` with `F_i ≠ 0` among the computed modules.
    pub fn top_nonzero(&self) -> usize {
        (0..self.free.len()).rev().find(|&i| !self.free[i].is_empty()).unwrap_or(0)
    }

    pub fn betti(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, degs) in self.free.iter().enumerate() {
            for &d in degs {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    /// `∂_i ∘ ∂_{i+1} = 0` modulo the defining ideal, for every computed pair.
    pub fn composes_to_zero(&self) -> bool {
        self.differentials
            .windows(2)
            .all(|w| Matrix::composes_to_zero(&self.ring, &w[0], &w[1]))
    }

    /// Exactness at each interior `F_i`: `im ∂_{i+1} = ker ∂_i` by mutual
    /// Gröbner membership.
    pub fn is_exact(&self) -> bool {
        for i in 1..=self.length() {
            let d = &self.differentials[i - 1];
            let next = match self.differential(i + 1) {
                Ok(m) => m,
                Err(_) => break,
            };
            let ker = match kernel(&self.ring, d) {
                Ok(k) => k,
                Err(_) => return false,
            };
            if !crate::matrix::image_contains(&self.ring, &next, &ker)
                || !crate::matrix::image_contains(&self.ring, &ker, &next)
            {
                return false;
            }
        }
        true
    }

    /// Computes `extra` more syzygy steps (fewer if the resolution stops).
    fn extended(&self, extra: usize) -> Result<FreeResolution> {
        let mut r = self.clone();
        r.finish_if_zero();
        for _ in 0..extra {
            if r.complete {
                break;
            }
            let last = r.differentials.last().expect("at least the presentation");
            let k = kernel(&r.ring, last)?;
            let next = minimal_columns(&r.ring, &k);
            r.free.push(next.col_degrees.clone());
            r.differentials.push(next);
            r.finish_if_zero();
        }
        Ok(r)
    }

    /// Marks the resolution complete once the newest free module is zero,
    /// dropping that trailing zero step (but always keeping `∂_1`).
    fn finish_if_zero(&mut self) {
        if self.free.last().is_some_and(|f| f.is_empty()) {
            self.complete = true;
            if self.differentials.len() > 1 {
                self.differentials.pop();
                self.free.pop();
            }
        }
    }
}

/// Total map `(fingerprint, tag) -> resolution`, keeping the longest computed.
type CacheMap = HashMap<(String, RingTag), Arc<FreeResolution>>;

fn cache() -> &'static RwLock<CacheMap> {
    static CACHE: OnceLock<RwLock<CacheMap>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Persistent byte storage for resolutions, keyed by content hash.
pub trait ResolutionStore: Send + Sync {
    fn load(&self, key: &str) -> Option<Vec<u8>>;
    fn store(&self, key: &str, bytes: &[u8]);
}

fn store_slot() -> &'static RwLock<Option<Arc<dyn ResolutionStore>>> {
    static STORE: OnceLock<RwLock<Option<Arc<dyn ResolutionStore>>>> = OnceLock::new();
    STORE.get_or_init(|| RwLock::new(None))
}

/// Installs (or removes) the persistent store consulted on cache misses.
pub fn set_resolution_store(store: Option<Arc<dyn ResolutionStore>>) {
    *store_slot().write().expect("store lock") = store;
}

/// Drops every in-memory resolution.
pub fn clear_resolution_cache() {
    cache().write().expect("cache lock").clear();
}

static HITS: AtomicU64 = AtomicU64::new(0);
static MISSES: AtomicU64 = AtomicU64::new(0);
static STORE_HITS: AtomicU64 = AtomicU64::new(0);

/// Counters `(memory hits, misses, store hits)` since process start.
pub fn cache_stats() -> (u64, u64, u64) {
    (HITS.load(Ordering::Relaxed), MISSES.load(Ordering::Relaxed), STORE_HITS.load(Ordering::Relaxed))
}

const STORE_VERSION: u32 = 1;

/// A polynomial as `(exponent, coefficient text)` pairs.
type StoredPoly = Vec<(Vec<u16>, String)>;

#[derive(Serialize, Deserialize)]
struct StoredMatrix {
    rows: Vec<i64>,
    cols: Vec<i64>,
    /// Column-major entries; each a list of (exponent, coefficient text).
    entries: Vec<Vec<StoredPoly>>,
}

#[derive(Serialize, Deserialize)]
struct StoredResolution {
    version: u32,
    ring: String,
    f0: Vec<i64>,
    differentials: Vec<StoredMatrix>,
    complete: bool,
}

fn encode(res: &FreeResolution) -> Vec<u8> {
    let fld = &res.ring.ambient().field;
    let differentials = res
        .differentials
        .iter()
        .map(|m| StoredMatrix {
            rows: m.row_degrees.clone(),
            cols: m.col_degrees.clone(),
            entries: m
                .columns
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|p| p.terms().iter().map(|(e, v)| (e.to_vec(), fld.format(v))).collect())
                        .collect()
                })
                .collect(),
        })
        .collect();
    let s = StoredResolution {
        version: STORE_VERSION,
        ring: res.ring.fingerprint().to_string(),
        f0: res.free[0].clone(),
        differentials,
        complete: res.complete,
    };
    serde_json::to_vec(&s).expect("serializable")
}

fn decode(bytes: &[u8], over: RingTag, ring: &Arc<QuotientRing>) -> Option<FreeResolution> {
    let s: StoredResolution = serde_json::from_slice(bytes).ok()?;
    if s.version != STORE_VERSION || s.ring != ring.fingerprint() {
        return None;
    }
    let desc = ring.ambient();
    let mut ds = Vec::with_capacity(s.differentials.len());
    for m in s.differentials {
        let mut columns = Vec::with_capacity(m.entries.len());
        for c in m.entries {
            let mut col = Vec::with_capacity(c.len());
            for p in c {
                let mut terms = Vec::with_capacity(p.len());
                for (e, v) in p {
                    if e.len() != desc.nvars() {
                        return None;
                    }
                    terms.push((Exp::from_vec(e), desc.field.parse(&v)?));
                }
                col.push(Polynomial { terms });
            }
            columns.push(col);
        }
        ds.push(Matrix::new(desc, m.rows, m.cols, columns).ok()?);
    }
    FreeResolution::from_differentials(over, ring.clone(), s.f0, ds, s.complete).ok()
}

fn store_key(fp: &str, tag: RingTag) -> String {
    format!("{fp}-{}", tag.keyword())
}

/// The module a resolution over `tag` starts from, minimally presented.
fn base_module(m: &PresentedModule, tag: RingTag) -> PresentedModule {
    match tag {
        RingTag::Quotient => m.minimal_presentation(),
        RingTag::Ambient => m.over_ambient().minimal_presentation(),
    }
}

/// Minimal free resolution of `M` over `tag`, computed through index `bound`
/// (or to its end, if shorter). Over the ambient ring pass `usize::MAX` for the
/// full finite resolution.
pub fn free_resolution(m: &PresentedModule, tag: RingTag, bound: usize) -> Result<Arc<FreeResolution>> {
    let base = base_module(m, tag);
    let fp = base.fingerprint();
    let key = (fp.clone(), tag);
    let enough = |r: &FreeResolution| r.complete || r.length() >= bound.max(1);
    let cached = cache().read().expect("cache lock").get(&key).cloned();
    if let Some(r) = &cached {
        if enough(r) {
            HITS.fetch_add(1, Ordering::Relaxed);
            return Ok(prefix_view(r.clone(), bound));
        }
    }
    let store = store_slot().read().expect("store lock").clone();
    let skey = store_key(&fp, tag);
    let mut start = cached.map(|r| (*r).clone());
    if let Some(st) = &store {
        if let Some(r) = st.load(&skey).and_then(|b| decode(&b, tag, base.ring())) {
            if start.as_ref().is_none_or(|s| r.length() > s.length()) {
                start = Some(r);
            }
        }
    }
    let start = match start {
        Some(r) => r,
        None => {
            let a = base.matrix().clone();
            FreeResolution {
                over: tag,
                ring: base.ring().clone(),
                free: vec![a.row_degrees.clone(), a.col_degrees.clone()],
                differentials: vec![a],
                minimal: true,
                complete: false,
            }
        }
    };
    let res = if enough(&start) {
        STORE_HITS.fetch_add(1, Ordering::Relaxed);
        start
    } else {
        MISSES.fetch_add(1, Ordering::Relaxed);
        let need = bound.saturating_sub(start.length()).max(1);
        let r = start.extended(need)?;
        if let Some(st) = &store {
            st.store(&skey, &encode(&r));
        }
        r
    };
    let res = Arc::new(res);
    {
        let mut w = cache().write().expect("cache lock");
        let slot = w.entry(key).or_insert_with(|| res.clone());
        if res.complete || res.length() > slot.length() {
            *slot = res.clone();
        }
    }
    Ok(prefix_view(res, bound))
}

/// What a fresh computation through `bound` would have produced, so that
/// results never depend on how much a cached resolution happens to hold.
fn prefix_view(res: Arc<FreeResolution>, bound: usize) -> Arc<FreeResolution> {
    let steps = bound.max(1);
    if (res.complete && res.top_nonzero() < steps) || (!res.complete && res.length() == steps) {
        return res;
    }
    let mut r = (*res).clone();
    if r.complete && r.length() < steps {
        return res;
    }
    r.complete = false;
    r.differentials.truncate(steps);
    r.free.truncate(steps + 1);
    Arc::new(r)
}

/// Cancels unit entries until every differential has entries in the
/// irrelevant ideal. Homology is unchanged.
pub fn minimalize(res: &FreeResolution) -> (FreeResolution, BettiTable) {
    let ring = res.ring.clone();
    let desc = ring.ambient().clone();
    let fld = desc.field;
    let mut ds: Vec<Matrix> = res.differentials.iter().map(|d| d.reduce_mod(&ring)).collect();
    let mut f0 = res.free[0].clone();
    'outer: loop {
        for i in 0..ds.len() {
            let Some((p, q)) = find_unit(&ds[i]) else { continue };
            let d = &ds[i];
            let u_inv = fld.inv(&d.columns[q][p].terms()[0].1).expect("unit");
            let rows: Vec<usize> = (0..d.nrows()).filter(|&r| r != p).collect();
            let cols: Vec<usize> = (0..d.ncols()).filter(|&c| c != q).collect();
            // Schur complement: a_rs - a_rq * a_ps / u.
            let mut columns = Vec::with_capacity(cols.len());
            for &s in &cols {
                let f = desc.scale(&d.columns[s][p], &u_inv);
                let col: Vec<Polynomial> = rows
                    .iter()
                    .map(|&r| {
                        let t = desc.mul(&f, &d.columns[q][r]);
                        ring.reduce(&desc.sub(&d.columns[s][r], &t))
                    })
                    .collect();
                columns.push(col);
            }
            let new = Matrix {
                row_degrees: rows.iter().map(|&r| d.row_degrees[r]).collect(),
                col_degrees: cols.iter().map(|&c| d.col_degrees[c]).collect(),
                columns,
            };
            ds[i] = new;
            if i + 1 < ds.len() {
                let keep: Vec<usize> = (0..ds[i + 1].nrows()).filter(|&r| r != q).collect();
                ds[i + 1] = ds[i + 1].select_rows(&keep);
            }
            if i > 0 {
                let keep: Vec<usize> = (0..ds[i - 1].ncols()).filter(|&c| c != p).collect();
                ds[i - 1] = ds[i - 1].select_columns(&keep);
            } else {
                f0.remove(p);
            }
            continue 'outer;
        }
        break;
    }
    let mut out = FreeResolution::from_differentials(res.over, ring, f0, ds, res.complete)
        .expect("cancellation keeps shapes aligned");
    if out.complete {
        while out.differentials.len() > 1 && out.differentials.last().is_some_and(|d| d.ncols() == 0) {
            out.differentials.pop();
            out.free.pop();
        }
    }
    let betti = out.betti();
    (out, betti)
}

fn find_unit(m: &Matrix) -> Option<(usize, usize)> {
    for (j, col) in m.columns.iter().enumerate() {
        for (i, p) in col.iter().enumerate() {
            if p.is_unit() {
                return Some((i, j));
            }
        }
    }
    None
}

/// `depth R`, via Auslander–Buchsbaum over the ambient ring.
pub fn ring_depth(ring: &Arc<QuotientRing>) -> i64 {
    *ring.depth.get_or_init(|| {
        if ring.is_zero_ring() {
            return -1;
        }
        let r = PresentedModule::ring_module(ring.clone());
        let res = free_resolution(&r, RingTag::Ambient, usize::MAX).expect("ambient resolution");
        ring.nvars() as i64 - res.top_nonzero() as i64
    })
}

/// Projective dimension of `M` over `tag`.
///
/// Over `R`, a finite projective dimension is at most `depth R`
/// (Auslander–Buchsbaum), so the search stops once `F_{depth R + 1} ≠ 0`.
pub fn projective_dimension(m: &PresentedModule, tag: RingTag, bound: usize) -> Result<PdResult> {
    m.nonzero()?;
    if tag == RingTag::Ambient || m.ring().is_polynomial_ring() {
        let res = free_resolution(m, tag, usize::MAX)?;
        return Ok(PdResult::Exact(res.top_nonzero()));
    }
    let depth_r = ring_depth(m.ring()).max(0) as usize;
    let steps = bound.saturating_add(1).min(depth_r + 1);
    let res = free_resolution(m, RingTag::Quotient, steps)?;
    if res.is_complete() {
        return Ok(PdResult::Exact(res.top_nonzero()));
    }
    Ok(PdResult::GreaterThan(bound))
}

/// Betti table of the minimal resolution over `tag` through index `bound`.
pub fn betti_table(m: &PresentedModule, tag: RingTag, bound: usize) -> Result<BettiTable> {
    Ok(free_resolution(m, tag, bound)?.betti())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRingDesc;

    fn qxy() -> (Arc<QuotientRing>, Polynomial, Polynomial) {
        let d = PolyRingDesc::rational(&["x", "y"]);
        let (x, y) = (d.var(0), d.var(1));
        (QuotientRing::polynomial(d), x, y)
    }

    #[test]
    fn koszul_resolution_of_residue_field() {
        let (r, _, _) = qxy();
        let k = PresentedModule::residue_field(r.clone());
        let res = free_resolution(&k, RingTag::Ambient, usize::MAX).unwrap();
        assert!(res.is_complete());
        assert_eq!(res.betti().totals(), vec![1, 2, 1]);
        assert!(res.composes_to_zero());
        assert!(res.is_exact());
        assert_eq!(projective_dimension(&k, RingTag::Ambient, 0).unwrap(), PdResult::Exact(2));
    }

    #[test]
    fn free_module_has_length_zero() {
        let (r, _, _) = qxy();
        let s = PresentedModule::ring_module(r);
        let res = free_resolution(&s, RingTag::Ambient, usize::MAX).unwrap();
        assert_eq!(res.top_nonzero(), 0);
        assert_eq!(res.betti().totals(), vec![1]);
        assert_eq!(projective_dimension(&s, RingTag::Quotient, 4).unwrap(), PdResult::Exact(0));
    }

    #[test]
    fn hypersurface_resolution_is_periodic() {
        let d = PolyRingDesc::rational(&["x", "y"]);
        let (x, y) = (d.var(0), d.var(1));
        let r = QuotientRing::new(d.clone(), &[d.mul(&x, &y)]).unwrap();
        let m = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap();
        let res = free_resolution(&m, RingTag::Quotient, 6).unwrap();
        assert!(!res.is_complete());
        assert!(res.length() >= 6);
        for i in 1..=6 {
            let di = res.differential(i).unwrap();
            assert_eq!((di.nrows(), di.ncols()), (1, 1));
            let want = if i % 2 == 1 { &x } else { &y };
            assert_eq!(&di.columns[0][0], want, "step {i}");
        }
        assert!(res.composes_to_zero());
        assert!(res.is_exact());
        assert_eq!(projective_dimension(&m, RingTag::Quotient, 8).unwrap(), PdResult::GreaterThan(8));
    }

    #[test]
    fn pd_of_x2_xy() {
        let (r, x, y) = qxy();
        let d = r.ambient().clone();
        let m = PresentedModule::cyclic(r, &[d.mul(&x, &x), d.mul(&x, &y)]).unwrap();
        assert_eq!(projective_dimension(&m, RingTag::Ambient, 0).unwrap(), PdResult::Exact(2));
        let res = free_resolution(&m, RingTag::Ambient, usize::MAX).unwrap();
        assert_eq!(res.betti().totals(), vec![1, 2, 1]);
    }

    #[test]
    fn minimalize_cancels_identity_block() {
        let (r, _, _) = qxy();
        let k = PresentedModule::residue_field(r.clone());
        let res = free_resolution(&k, RingTag::Ambient, usize::MAX).unwrap();
        let (same, betti) = minimalize(&res);
        assert_eq!(betti.totals(), vec![1, 2, 1]);
        assert_eq!(same.differentials(), res.differentials());
        // Pad F_1 and F_2 with a trivial summand S(-5) --1--> S(-5).
        let d = r.ambient().clone();
        let mut d1 = res.differential(1).unwrap();
        d1.col_degrees.push(5);
        d1.columns.push(vec![d.zero()]);
        let mut d2 = res.differential(2).unwrap();
        d2.row_degrees.push(5);
        for c in &mut d2.columns {
            c.push(d.zero());
        }
        d2.col_degrees.push(5);
        d2.columns.push(vec![d.zero(), d.zero(), d.one()]);
        let padded =
            FreeResolution::from_differentials(RingTag::Ambient, r.clone(), vec![0], vec![d1, d2], true).unwrap();
        assert!(!padded.is_minimal());
        let (m, betti) = minimalize(&padded);
        assert!(m.is_minimal());
        assert_eq!(betti.totals(), vec![1, 2, 1]);
    }

    #[test]
    fn betti_display() {
        let (r, _, _) = qxy();
        let k = PresentedModule::residue_field(r);
        let t = betti_table(&k, RingTag::Ambient, usize::MAX).unwrap().to_string();
        assert_eq!(t, " total:    1    2    1\n     0:    1    2    1\n");
        let b = betti_table(&PresentedModule::residue_field(QuotientRing::polynomial(PolyRingDesc::rational(&["x", "y"]))), RingTag::Ambient, usize::MAX).unwrap();
        let json = serde_json::to_string(&b).unwrap();
        assert!(json.starts_with(r#"[{"i":0,"degree":0,"rank":1}"#), "{json}");
        assert_eq!(serde_json::from_str::<BettiTable>(&json).unwrap(), b);
    }

    #[test]
    fn results_ignore_longer_cached_resolutions() {
        let d = PolyRingDesc::rational(&["x", "y"]);
        let (x, y) = (d.var(0), d.var(1));
        let r = QuotientRing::new(d.clone(), &[d.mul(&x, &y)]).unwrap();
        let m = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap();
        let long = free_resolution(&m, RingTag::Quotient, 9).unwrap();
        assert_eq!(long.length(), 9);
        let short = free_resolution(&m, RingTag::Quotient, 3).unwrap();
        assert_eq!((short.length(), short.is_complete()), (3, false));
        assert_eq!(short.differentials(), &long.differentials()[..3]);
        // pd equal to the bound is still exact.
        let l = PresentedModule::cyclic(r.clone(), &[d.add(&x, &y)]).unwrap();
        assert_eq!(projective_dimension(&l, RingTag::Quotient, 1).unwrap(), PdResult::Exact(1));
        assert_eq!(projective_dimension(&l, RingTag::Quotient, 0).unwrap(), PdResult::GreaterThan(0));
    }
}
