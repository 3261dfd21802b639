//! Seeded random instances and property campaigns over the statement registry.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::CoefficientField;
use crate::module::PresentedModule;
use crate::poly::{Exp, MonomialOrder, PolyRingDesc, Polynomial};
use crate::ring::QuotientRing;
use crate::theorems::{check, strongest_serre, CheckParams, StatementId, TheoremVerdict};

const VAR_NAMES: [&str; 4] = ["x", "y", "z", "w"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealStyle {
    Monomial,
    Binomial,
    Zero,
}

impl FromStr for IdealStyle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monomial" => Ok(IdealStyle::Monomial),
            "binomial" => Ok(IdealStyle::Binomial),
            "zero" => Ok(IdealStyle::Zero),
            _ => Err(Error::InvalidRing(format!("unknown ideal style `{s}`"))),
        }
    }
}

impl fmt::Display for IdealStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealStyle::Monomial => "monomial",
            IdealStyle::Binomial => "binomial",
            IdealStyle::Zero => "zero",
        })
    }
}

/// Everything a random instance depends on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorParams {
    pub seed: u64,
    pub variables: usize,
    pub style: IdealStyle,
    pub max_degree: u32,
    /// Cap on the number of generators of a module.
    pub max_generators: usize,
    /// Cap on the number of relations per generator.
    pub max_relations: usize,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        GeneratorParams {
            seed: 0,
            variables: 3,
            style: IdealStyle::Monomial,
            max_degree: 3,
            max_generators: 2,
            max_relations: 3,
        }
    }
}

impl GeneratorParams {
    pub fn validate(&self) -> Result<()> {
        if !(1..=4).contains(&self.variables) {
            return Err(Error::InvalidRing(format!("variables must lie in 1..=4, got {}", self.variables)));
        }
        if !(1..=4).contains(&self.max_degree) {
            return Err(Error::InvalidRing(format!("max degree must lie in 1..=4, got {}", self.max_degree)));
        }
        if self.max_generators == 0 {
            return Err(Error::InvalidRing("a module needs at least one generator".into()));
        }
        Ok(())
    }

    fn with_seed(&self, seed: u64) -> GeneratorParams {
        GeneratorParams { seed, ..*self }
    }
}

/// SplitMix64 step, used to derive independent sub-seeds.
pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, stream))
}

fn random_exp(rng: &mut ChaCha8Rng, nvars: usize, vars: &[usize], degree: u32) -> Exp {
    let mut e: Exp = std::iter::repeat_n(0, nvars).collect();
    for _ in 0..degree {
        e[*vars.choose(rng).expect("nonempty variable set")] += 1;
    }
    e
}

fn random_generator(
    rng: &mut ChaCha8Rng,
    desc: &PolyRingDesc,
    vars: &[usize],
    degree: u32,
    style: IdealStyle,
) -> Polynomial {
    let one = desc.field.one();
    let a = random_exp(rng, desc.nvars(), vars, degree);
    if style == IdealStyle::Binomial && rng.gen_bool(0.5) {
        let b = random_exp(rng, desc.nvars(), vars, degree);
        if a != b {
            return desc.sub(&desc.monomial(a, one.clone()), &desc.monomial(b, one));
        }
    }
    desc.monomial(a, one)
}

fn desc_for(params: &GeneratorParams) -> Arc<PolyRingDesc> {
    PolyRingDesc::new(
        CoefficientField::Rationals,
        VAR_NAMES[..params.variables].iter().map(|s| s.to_string()).collect(),
        MonomialOrder::GradedReverseLex,
    )
    .expect("fixed variable names")
}

/// The ring determined by `params`: half the seeds give the polynomial
/// ring, the rest a quotient by one or two forms of degree at least 2.
pub fn random_ring(params: &GeneratorParams) -> Result<Arc<QuotientRing>> {
    params.validate()?;
    let desc = desc_for(params);
    let mut rng = rng_for(params.seed, 0);
    if params.style == IdealStyle::Zero || params.max_degree < 2 || rng.gen_bool(0.5) {
        return Ok(QuotientRing::polynomial(desc));
    }
    let all: Vec<usize> = (0..params.variables).collect();
    let count = rng.gen_range(1..=2);
    let gens: Vec<Polynomial> = (0..count)
        .map(|_| {
            let d = rng.gen_range(2..=params.max_degree);
            random_generator(&mut rng, &desc, &all, d, params.style)
        })
        .filter(|g| !g.is_zero())
        .collect();
    QuotientRing::new(desc, &gens)
}

/// A random nonzero module over `ring` whose relations only involve `vars`.
pub fn random_module_over(
    ring: &Arc<QuotientRing>,
    params: &GeneratorParams,
    vars: &[usize],
) -> Result<PresentedModule> {
    params.validate()?;
    let desc = ring.ambient().clone();
    let mut rng = rng_for(params.seed, 1);
    for _ in 0..64 {
        let summands = rng.gen_range(1..=params.max_generators);
        let mut acc: Option<PresentedModule> = None;
        let mut shifts = Vec::new();
        for _ in 0..summands {
            let count = rng.gen_range(0..=params.max_relations);
            let gens: Vec<Polynomial> = (0..count)
                .map(|_| {
                    let d = rng.gen_range(1..=params.max_degree);
                    random_generator(&mut rng, &desc, vars, d, params.style)
                })
                .filter(|g| !g.is_zero())
                .collect();
            let shift = rng.gen_range(0..=1i64);
            shifts.push(shift);
            let c = PresentedModule::cyclic(ring.clone(), &gens)?.shift(shift);
            acc = Some(match acc {
                None => c,
                Some(a) => a.direct_sum(&c)?,
            });
        }
        let mut m = acc.expect("at least one summand");
        // Occasionally glue two summands with a mixed relation.
        if summands >= 2 && rng.gen_bool(0.25) {
            let d1 = rng.gen_range(1..=params.max_degree) as i64;
            let d2 = d1 + shifts[0] - shifts[1];
            if d2 >= 1 {
                let mut mat = m.matrix().clone();
                let mut col = vec![desc.zero(); mat.nrows()];
                col[0] = random_generator(&mut rng, &desc, vars, d1 as u32, IdealStyle::Monomial);
                col[1] = random_generator(&mut rng, &desc, vars, d2 as u32, IdealStyle::Monomial);
                mat.columns.push(col);
                mat.col_degrees.push(shifts[0] + d1);
                m = PresentedModule::new(ring.clone(), mat)?;
            }
        }
        if let Ok(m) = m.nonzero() {
            return Ok(m);
        }
    }
    Err(Error::Internal("generator failed to produce a nonzero module".into()))
}

/// A random nonzero module over [`random_ring`] of the same params.
pub fn random_module(params: &GeneratorParams) -> Result<PresentedModule> {
    let ring = random_ring(params)?;
    let all: Vec<usize> = (0..params.variables).collect();
    random_module_over(&ring, params, &all)
}

/// One campaign instance: a ring and two modules over it.
#[derive(Clone, Debug)]
pub struct Instance {
    pub index: usize,
    pub seed: u64,
    pub ring: Arc<QuotientRing>,
    pub m: PresentedModule,
    pub n: PresentedModule,
}

/// Instance `index` of the campaign seeded by `params.seed`. `M` and `N`
/// come from independent sub-seeds. Half the time their relations use
/// disjoint variable sets, and sometimes `N = R`, so that Tor-vanishing
/// hypotheses are met often enough.
pub fn random_instance(params: &GeneratorParams, index: usize) -> Result<Instance> {
    let seed = derive_seed(params.seed, index as u64 + 1);
    let ring = random_ring(&params.with_seed(derive_seed(seed, 10)))?;
    let mut rng = rng_for(seed, 11);
    let mut all: Vec<usize> = (0..params.variables).collect();
    let (vm, vn) = if params.variables >= 2 && rng.gen_bool(0.5) {
        all.shuffle(&mut rng);
        let cut = rng.gen_range(1..params.variables);
        (all[..cut].to_vec(), all[cut..].to_vec())
    } else {
        (all.clone(), all)
    };
    let m = random_module_over(&ring, &params.with_seed(derive_seed(seed, 12)), &vm)?;
    let n = if rng.gen_bool(0.2) {
        PresentedModule::ring_module(ring.clone())
    } else {
        random_module_over(&ring, &params.with_seed(derive_seed(seed, 13)), &vn)?
    };
    Ok(Instance { index, seed, ring, m, n })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementTally {
    pub checks: usize,
    pub applicable: usize,
    pub consistent: usize,
    pub inapplicable: usize,
}

/// An inconsistent verdict or a kernel error, with what is needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub id: StatementId,
    pub index: usize,
    pub seed: u64,
    pub ring: String,
    pub m: String,
    pub n: String,
    pub param_n: Option<usize>,
    pub verdict: Option<TheoremVerdict>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub params: GeneratorParams,
    pub count: usize,
    pub checks: usize,
    pub applicable: usize,
    pub consistent: usize,
    pub inapplicable: usize,
    pub per_statement: BTreeMap<StatementId, StatementTally>,
    pub failures: Vec<FailureRecord>,
    pub wall_time_ms: u64,
}

/// The Serre parameter a campaign uses: the strongest `n` for which the
/// statement's `(S_n)` antecedent holds on this instance.
fn campaign_n(id: StatementId, inst: &Instance) -> Result<Option<usize>> {
    Ok(match id {
        StatementId::Thm21 => Some(strongest_serre(&inst.n)?),
        StatementId::Cor22 => Some(strongest_serre(&PresentedModule::ring_module(inst.ring.clone()))?),
        StatementId::Thm24 => Some(strongest_serre(&inst.m.tensor(&inst.n)?)?),
        _ => None,
    })
}

/// Runs every listed statement on `count` instances.
pub fn campaign(ids: &[StatementId], params: &GeneratorParams, count: usize, bound: usize) -> Result<CampaignSummary> {
    params.validate()?;
    let start = Instant::now();
    let mut per_statement: BTreeMap<StatementId, StatementTally> = ids.iter().map(|&id| (id, Default::default())).collect();
    let mut failures = Vec::new();
    for index in 0..count {
        let inst = random_instance(params, index)?;
        for &id in ids {
            let tally = per_statement.get_mut(&id).expect("seeded above");
            tally.checks += 1;
            let outcome = campaign_n(id, &inst).and_then(|n| {
                let v = check(id, &inst.m, Some(&inst.n), CheckParams { n, bound })?;
                Ok((n, v))
            });
            let record = |param_n, verdict, error| FailureRecord {
                id,
                index,
                seed: inst.seed,
                ring: inst.ring.describe(),
                m: inst.m.describe(),
                n: inst.n.describe(),
                param_n,
                verdict,
                error,
            };
            match outcome {
                Ok((n, v)) => {
                    if v.applicable {
                        tally.applicable += 1;
                        if v.consistent {
                            tally.consistent += 1;
                        }
                    } else {
                        tally.inapplicable += 1;
                    }
                    if !v.consistent {
                        failures.push(record(n, Some(v), None));
                    }
                }
                Err(e) => {
                    tally.inapplicable += 1;
                    failures.push(record(None, None, Some(e.to_string())));
                }
            }
        }
    }
    failures.sort_by_key(|a| (a.id, a.index));
    let sum = |f: fn(&StatementTally) -> usize| per_statement.values().map(f).sum();
    Ok(CampaignSummary {
        params: *params,
        count,
        checks: sum(|t| t.checks),
        applicable: sum(|t| t.applicable),
        consistent: sum(|t| t.consistent),
        inapplicable: sum(|t| t.inapplicable),
        per_statement,
        failures,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}
