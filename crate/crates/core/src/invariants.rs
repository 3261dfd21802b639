//! Homological invariants of graded modules: depth, dimension, grade,
//! imperfection, Cohen–Macaulay defect, perfection, Serre conditions,
//! Gorenstein dimension and canonical modules.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homalg::{ext_module, ext_vanishes};
use crate::ideal::{krull_dimension, radical_membership, HomogeneousIdeal};
use crate::matrix::{image_contains, kernel, Matrix};
use crate::module::PresentedModule;
use crate::poly::Polynomial;
use crate::resolve::{projective_dimension, ring_depth, PdResult, RingTag};
use crate::ring::QuotientRing;

/// How firmly a computed value is established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "bound", rename_all = "kebab-case")]
pub enum Certainty {
    /// Settled by a terminating computation.
    Proved,
    /// Every check up to the bound passed.
    CertifiedUpToBound(usize),
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedValue<T> {
    pub value: T,
    pub certainty: Certainty,
}

impl<T> CertifiedValue<T> {
    pub fn proved(value: T) -> Self {
        CertifiedValue { value, certainty: Certainty::Proved }
    }

    pub fn is_established(&self) -> bool {
        self.certainty != Certainty::Unknown
    }
}

impl<T: fmt::Display> fmt::Display for CertifiedValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.certainty {
            Certainty::Proved => write!(f, "{} (proved)", self.value),
            Certainty::CertifiedUpToBound(b) => write!(f, "{} (certified to {b})", self.value),
            Certainty::Unknown => write!(f, "{} (unknown)", self.value),
        }
    }
}

/// Truncation bound used over `R` when none is given: `2 dim S + 4`.
pub fn default_bound(ring: &QuotientRing) -> usize {
    2 * ring.nvars() + 4
}

/// Krull dimension of `M`.
pub fn dimension(m: &PresentedModule) -> Result<i64> {
    Ok(m.nonzero()?.dim())
}

/// `depth M = dim S - pd_S M`.
pub fn depth(m: &PresentedModule) -> Result<i64> {
    let m = m.nonzero()?;
    let pd = projective_dimension(&m, RingTag::Ambient, usize::MAX)?
        .exact()
        .expect("finite over the polynomial ring");
    Ok(m.ring().nvars() as i64 - pd as i64)
}

/// `depth M` as the least `i` with `Ext^i_R(k, M) ≠ 0`.
pub fn depth_via_ext(m: &PresentedModule) -> Result<i64> {
    let m = m.nonzero()?;
    let k = PresentedModule::residue_field(m.ring().clone());
    let n = m.ring().nvars();
    for i in 0..=n {
        if !ext_vanishes(i, &k, &m, n + 1)? {
            return Ok(i as i64);
        }
    }
    Err(Error::Internal("no nonvanishing Ext(k, M) up to dim S".into()))
}

pub fn projective_dim(m: &PresentedModule, bound: usize) -> Result<PdResult> {
    projective_dimension(m, RingTag::Quotient, bound)
}

/// `grade(M, N) = inf { i | Ext^i_R(M, N) ≠ 0 }`.
pub fn grade_mn(m: &PresentedModule, n: &PresentedModule) -> Result<i64> {
    m.ring().check_same(n.ring())?;
    let m = m.nonzero()?;
    let n = n.nonzero()?;
    let d = m.ring().dim().max(0) as usize;
    for i in 0..=d {
        if !ext_vanishes(i, &m, &n, d + 1)? {
            return Ok(i as i64);
        }
    }
    Err(Error::Internal(format!("Ext^i(M, N) vanished for every i <= dim R = {d}")))
}

/// `grade M = grade(M, R)`.
pub fn grade(m: &PresentedModule) -> Result<i64> {
    grade_mn(m, &PresentedModule::ring_module(m.ring().clone()))
}

/// `(U :_F J)` for a submodule `U = im u` of `F` and generators of `J`.
fn submodule_colon(ring: &Arc<QuotientRing>, u: &Matrix, gens: &[Polynomial]) -> Result<Matrix> {
    let desc = ring.ambient();
    let s = u.nrows();
    let t = gens.len();
    // ker of [ g_1 Id ; ... ; g_t Id | diag(U, ..., U) ], first s coordinates.
    let mut cols = Vec::new();
    let mut col_degrees = Vec::new();
    for g in 0..s {
        let mut v = vec![Polynomial::default(); s * t];
        for (j, f) in gens.iter().enumerate() {
            v[j * s + g] = f.clone();
        }
        cols.push(v);
        col_degrees.push(u.row_degrees[g]);
    }
    // Block j of the target is F(deg g_j), so that multiplication by g_j has degree 0.
    let degs: Vec<i64> = gens.iter().map(|f| desc.homogeneous_degree(f).expect("homogeneous")).collect();
    let mut row_degrees_shifted = Vec::with_capacity(s * t);
    for &dj in &degs {
        row_degrees_shifted.extend(u.row_degrees.iter().map(|r| r - dj));
    }
    for j in 0..t {
        for (c, col) in u.columns.iter().enumerate() {
            let mut v = vec![Polynomial::default(); s * t];
            for g in 0..s {
                v[j * s + g] = col[g].clone();
            }
            cols.push(v);
            col_degrees.push(u.col_degrees[c] - degs[j]);
        }
    }
    let big = Matrix { row_degrees: row_degrees_shifted, col_degrees, columns: cols };
    let k = kernel(ring, &big)?;
    let columns: Vec<Vec<Polynomial>> = k.columns.iter().map(|c| c[..s].to_vec()).collect();
    Ok(Matrix { row_degrees: u.row_degrees.clone(), col_degrees: k.col_degrees.clone(), columns })
}

fn colon_is_trivial(ring: &Arc<QuotientRing>, u: &Matrix, gens: &[Polynomial]) -> Result<bool> {
    let q = submodule_colon(ring, u, gens)?;
    Ok(image_contains(ring, u, &q))
}

/// `grade(M, N)` as the length of a maximal `N`-regular sequence in `ann M`,
/// built greedily.
pub fn grade_oracle(m: &PresentedModule, n: &PresentedModule) -> Result<i64> {
    m.ring().check_same(n.ring())?;
    let n = n.nonzero()?;
    let ann = m.annihilator()?;
    let ring = n.ring().clone();
    let desc = ring.ambient().clone();
    let gens: Vec<Polynomial> = ann.generators.iter().map(|g| ring.reduce(g)).filter(|g| !g.is_zero()).collect();
    let mut u = n.matrix().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut length = 0;
    loop {
        if gens.is_empty() || !colon_is_trivial(&ring, &u, &gens)? {
            return Ok(length);
        }
        let degs: Vec<i64> = gens.iter().map(|g| desc.homogeneous_degree(g).expect("homogeneous")).collect();
        let mut found = None;
        for g in &gens {
            if colon_is_trivial(&ring, &u, std::slice::from_ref(g))? {
                found = Some(g.clone());
                break;
            }
        }
        if found.is_none() {
            let top = degs.iter().copied().fold(1, lcm);
            let powers: Vec<Polynomial> =
                gens.iter().zip(&degs).map(|(g, &d)| ring.reduce(&desc.pow(g, (top / d) as u32))).collect();
            for _ in 0..64 {
                let mut f = desc.zero();
                for p in &powers {
                    let c = desc.field.from_i64(rng.gen_range(-50..=50));
                    f = desc.add(&f, &desc.scale(p, &c));
                }
                let f = ring.reduce(&f);
                if !f.is_zero() && colon_is_trivial(&ring, &u, std::slice::from_ref(&f))? {
                    found = Some(f);
                    break;
                }
            }
        }
        let f = found.ok_or_else(|| Error::Internal("no regular element found in ann M".into()))?;
        let fd = desc.homogeneous_degree(&f).expect("homogeneous");
        for (g, &d) in n.matrix().row_degrees.iter().enumerate() {
            let mut col = vec![desc.zero(); u.nrows()];
            col[g] = f.clone();
            u.columns.push(col);
            u.col_degrees.push(d + fd);
        }
        length += 1;
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// `imp(M, N) = depth N - depth M - grade(M, N)`.
pub fn imperfection(m: &PresentedModule, n: &PresentedModule) -> Result<i64> {
    Ok(depth(n)? - depth(m)? - grade_mn(m, n)?)
}

/// `cmd M = dim M - depth M`.
pub fn cmd(m: &PresentedModule) -> Result<i64> {
    Ok(dimension(m)? - depth(m)?)
}

pub fn is_cohen_macaulay(m: &PresentedModule) -> Result<bool> {
    Ok(cmd(m)? == 0)
}

pub fn is_maximal_cm(m: &PresentedModule) -> Result<bool> {
    Ok(is_cohen_macaulay(m)? && depth(m)? == m.ring().dim())
}

/// `pd M = grade M`; unknown when `pd` is not finite within `bound`.
pub fn is_perfect(m: &PresentedModule, bound: usize) -> Result<CertifiedValue<bool>> {
    is_n_perfect(m, &PresentedModule::ring_module(m.ring().clone()), bound)
}

/// `pd M = grade(M, N)`; unknown when `pd` is not finite within `bound`.
pub fn is_n_perfect(m: &PresentedModule, n: &PresentedModule, bound: usize) -> Result<CertifiedValue<bool>> {
    let g = grade_mn(m, n)?;
    Ok(match projective_dim(m, bound)? {
        PdResult::Exact(p) => CertifiedValue::proved(p as i64 == g),
        PdResult::GreaterThan(_) => CertifiedValue { value: false, certainty: Certainty::Unknown },
    })
}

/// The modules `Ext^i_S(M, S)` for `0 <= i <= dim S` with their annihilators
/// (`None` for vanishing ones).
fn ambient_duals(m: &PresentedModule) -> Result<Vec<Option<HomogeneousIdeal>>> {
    let ms = m.over_ambient();
    let s = PresentedModule::ring_module(ms.ring().clone());
    let n = ms.ring().nvars();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let e = ext_module(i, &ms, &s, usize::MAX)?;
        out.push(if e.vanishes { None } else { Some(e.value.annihilator()?) });
    }
    Ok(out)
}

/// Serre's condition `(S_k)`.
///
/// With `E^i = Ext^i_S(M, S)`, local duality gives `depth M_p = ht p - max{i : p ∈ Supp E^i}`
/// and `dim M_p = ht p - min{i : p ∈ Supp E^i}`. So `(S_k)` fails exactly at a
/// prime lying in `Supp E^i ∩ Supp E^j` (`j < i`) of height `< i + k`.
pub fn satisfies_serre(m: &PresentedModule, k: usize) -> Result<bool> {
    let m = m.nonzero()?;
    let n = m.ring().nvars() as i64;
    let duals = ambient_duals(&m)?;
    for (i, ei) in duals.iter().enumerate() {
        let Some(ai) = ei else { continue };
        for ej in duals[..i].iter().flatten() {
            let codim = n - krull_dimension(&ai.sum(ej));
            if codim < (i + k) as i64 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Totally reflexive test: `Ext^i(M, R) = 0 = Ext^i(M*, R)` for `1 <= i <= bound`
/// and `M -> M**` an isomorphism.
pub fn gdim_zero(m: &PresentedModule, bound: usize) -> Result<CertifiedValue<bool>> {
    let m = m.nonzero()?;
    let ring = m.ring().clone();
    if m.matrix().ncols() == 0 {
        return Ok(CertifiedValue::proved(true));
    }
    let r = PresentedModule::ring_module(ring.clone());
    let fails = CertifiedValue::proved(false);
    for i in 1..=bound {
        if !ext_vanishes(i, &m, &r, bound + 1)? {
            return Ok(fails);
        }
    }
    let a = m.matrix();
    // M* = ker(A^T) = im C, presented by D = ker C.
    let c = kernel(&ring, &a.transpose())?;
    let d = kernel(&ring, &c)?;
    let dual = PresentedModule::new(ring.clone(), d.clone())?;
    if !dual.is_zero() {
        for i in 1..=bound {
            if !ext_vanishes(i, &dual, &r, bound + 1)? {
                return Ok(fails);
            }
        }
    }
    // M -> M** is induced by C^T : F_0 -> G*, landing in ker(D^T).
    let ct = c.transpose();
    let injective = image_contains(&ring, a, &kernel(&ring, &ct)?);
    let surjective = image_contains(&ring, &ct, &kernel(&ring, &d.transpose())?);
    if !(injective && surjective) {
        return Ok(fails);
    }
    Ok(CertifiedValue { value: true, certainty: Certainty::CertifiedUpToBound(bound) })
}

/// Gorenstein dimension. Exact when `pd_R M` is finite; otherwise the largest
/// `t <= bound` with `Ext^t(M, R) ≠ 0`, certified when it equals
/// `depth R - depth M`.
pub fn gdim(m: &PresentedModule, bound: usize) -> Result<CertifiedValue<i64>> {
    let m = m.nonzero()?;
    if let PdResult::Exact(p) = projective_dim(&m, bound)? {
        return Ok(CertifiedValue::proved(p as i64));
    }
    let ring = m.ring().clone();
    let depth_r = ring_depth(&ring);
    let expected = depth_r - depth(&m)?;
    let r = PresentedModule::ring_module(ring);
    let mut sup = 0i64;
    for t in 1..=bound {
        if !ext_vanishes(t, &m, &r, bound + 1)? {
            sup = t as i64;
            if sup > depth_r {
                // A finite G-dimension is at most depth R.
                return Ok(CertifiedValue { value: sup, certainty: Certainty::Unknown });
            }
        }
    }
    let certainty = if sup == expected { Certainty::CertifiedUpToBound(bound) } else { Certainty::Unknown };
    Ok(CertifiedValue { value: sup, certainty })
}

/// `K_R = Ext^{n-d}_S(R, S)` for Cohen–Macaulay `R`, shifted so that its least
/// generator degree is 0.
pub fn canonical_module(ring: &Arc<QuotientRing>) -> Result<PresentedModule> {
    let r = PresentedModule::ring_module(ring.clone());
    if ring.is_zero_ring() {
        return Err(Error::ZeroModule);
    }
    if !is_cohen_macaulay(&r)? {
        return Err(Error::NotCohenMacaulay);
    }
    let n = ring.nvars();
    let c = n - ring.dim() as usize;
    let rs = r.over_ambient();
    let s = PresentedModule::ring_module(rs.ring().clone());
    let e = ext_module(c, &rs, &s, usize::MAX)?.value;
    let k = e.change_ring(ring.clone())?.minimal_presentation();
    let low = k.generator_degrees().iter().copied().min().ok_or(Error::Internal("empty canonical module".into()))?;
    let k = k.shift(-low);
    let ann = k.annihilator()?;
    let zero = HomogeneousIdeal::new(ring.ambient().clone(), ring.defining().to_vec())?;
    for g in &ann.generators {
        if !radical_membership(g, &zero)? {
            return Err(Error::Internal("canonical module without full support".into()));
        }
    }
    if !is_maximal_cm(&k)? {
        return Err(Error::Internal("canonical module is not maximal Cohen–Macaulay".into()));
    }
    Ok(k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub is_cm: bool,
    pub is_perfect: CertifiedValue<bool>,
    pub is_n_perfect: Option<CertifiedValue<bool>>,
    pub is_maximal_cm: bool,
    /// `(k, M satisfies S_k)` for each requested `k`.
    pub serre: Vec<(usize, bool)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub depth: i64,
    pub dim: i64,
    pub pd: PdResult,
    pub cmd: i64,
    pub grade_vs: Option<i64>,
    pub imp_vs: Option<i64>,
    pub flags: Flags,
    pub gdim: CertifiedValue<i64>,
}

/// Every invariant of `M`, and those relative to `N` when given.
pub fn invariant_report(
    m: &PresentedModule,
    n: Option<&PresentedModule>,
    serre_ks: &[usize],
    bound: usize,
) -> Result<InvariantReport> {
    let m = m.nonzero()?;
    let depth_m = depth(&m)?;
    let dim_m = m.dim();
    let pd = projective_dim(&m, bound)?;
    let (grade_vs, imp_vs, is_n_perfect) = match n {
        Some(n) => {
            let g = grade_mn(&m, n)?;
            (Some(g), Some(depth(n)? - depth_m - g), Some(is_n_perfect(&m, n, bound)?))
        }
        None => (None, None, None),
    };
    let serre = serre_ks.iter().map(|&k| Ok((k, satisfies_serre(&m, k)?))).collect::<Result<Vec<_>>>()?;
    let is_cm = dim_m == depth_m;
    let flags = Flags {
        is_cm,
        is_perfect: is_perfect(&m, bound)?,
        is_n_perfect,
        is_maximal_cm: is_cm && depth_m == m.ring().dim(),
        serre,
    };
    Ok(InvariantReport {
        depth: depth_m,
        dim: dim_m,
        pd,
        cmd: dim_m - depth_m,
        grade_vs,
        imp_vs,
        flags,
        gdim: gdim(&m, bound)?,
    })
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

    fn hyper() -> (Arc<QuotientRing>, Polynomial, Polynomial) {
        let d = PolyRingDesc::rational(&["x", "y"]);
        let (x, y) = (d.var(0), d.var(1));
        (QuotientRing::new(d.clone(), &[d.mul(&x, &y)]).unwrap(), x, y)
    }

    #[test]
    fn depth_dim_examples() {
        let (r, x, y) = qxy();
        let d = r.ambient().clone();
        let s = PresentedModule::ring_module(r.clone());
        let cx = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap();
        let bad = PresentedModule::cyclic(r.clone(), &[d.mul(&x, &x), d.mul(&x, &y)]).unwrap();
        assert_eq!((dimension(&s).unwrap(), depth(&s).unwrap()), (2, 2));
        assert_eq!((dimension(&cx).unwrap(), depth(&cx).unwrap()), (1, 1));
        assert_eq!((dimension(&bad).unwrap(), depth(&bad).unwrap()), (1, 0));
        for m in [&s, &cx, &bad] {
            assert_eq!(depth_via_ext(m).unwrap(), depth(m).unwrap());
        }
        assert_eq!(cmd(&bad).unwrap(), 1);
        assert!(!is_cohen_macaulay(&bad).unwrap());
        assert!(is_maximal_cm(&s).unwrap());
        assert_eq!(cmd(&PresentedModule::residue_field(r.clone())).unwrap(), 0);
    }

    #[test]
    fn grade_examples() {
        let (r, x, y) = qxy();
        let d = r.ambient().clone();
        let s = PresentedModule::ring_module(r.clone());
        let cx = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap();
        let k = PresentedModule::residue_field(r.clone());
        let bad = PresentedModule::cyclic(r.clone(), &[d.mul(&x, &x), d.mul(&x, &y)]).unwrap();
        assert_eq!(grade_mn(&cx, &s).unwrap(), 1);
        assert_eq!(grade_mn(&k, &s).unwrap(), 2);
        assert_eq!(grade_oracle(&cx, &s).unwrap(), 1);
        assert_eq!(grade_oracle(&k, &s).unwrap(), 2);
        for m in [&s, &cx, &k, &bad] {
            assert_eq!(grade_mn(m, m).unwrap(), 0);
            assert_eq!(grade_oracle(m, m).unwrap(), 0);
        }
        assert_eq!(imperfection(&bad, &s).unwrap(), 1);
        assert_eq!(imperfection(&cx, &cx).unwrap(), 0);
    }

    #[test]
    fn perfection_examples() {
        let (r, x, y) = qxy();
        let d = r.ambient().clone();
        let k = PresentedModule::residue_field(r.clone());
        let bad = PresentedModule::cyclic(r.clone(), &[d.mul(&x, &x), d.mul(&x, &y)]).unwrap();
        assert_eq!(is_perfect(&k, 8).unwrap(), CertifiedValue::proved(true));
        assert_eq!(is_perfect(&bad, 8).unwrap(), CertifiedValue::proved(false));
        let cx = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap();
        let cy = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&y)).unwrap();
        assert_eq!(is_n_perfect(&cx, &cy, 8).unwrap(), CertifiedValue::proved(true));
    }

    #[test]
    fn hypersurface_module_is_maximal_cm() {
        let (r, x, _) = hyper();
        let cx = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap();
        assert!(is_cohen_macaulay(&cx).unwrap());
        assert!(is_maximal_cm(&cx).unwrap());
        assert_eq!(depth_via_ext(&cx).unwrap(), 1);
    }

    #[test]
    fn serre_examples() {
        let (r, x, y) = qxy();
        let d = r.ambient().clone();
        let s = PresentedModule::ring_module(r.clone());
        let bad = PresentedModule::cyclic(r.clone(), &[d.mul(&x, &x), d.mul(&x, &y)]).unwrap();
        for k in 0..4 {
            assert!(satisfies_serre(&s, k).unwrap());
        }
        assert!(satisfies_serre(&bad, 0).unwrap());
        assert!(!satisfies_serre(&bad, 1).unwrap());
        let k = PresentedModule::residue_field(r.clone());
        assert!(satisfies_serre(&k, 3).unwrap());
    }

    #[test]
    fn serre_on_mixed_dimension_sum() {
        // S/(x) ⊕ S/(y,z): (S_1) holds at every prime, (S_2) fails at (x, y, z).
        let d = PolyRingDesc::rational(&["x", "y", "z"]);
        let r = QuotientRing::polynomial(d.clone());
        let a = PresentedModule::cyclic(r.clone(), &[d.var(0)]).unwrap();
        let b = PresentedModule::cyclic(r.clone(), &[d.var(1), d.var(2)]).unwrap();
        let m = a.direct_sum(&b).unwrap();
        assert!(satisfies_serre(&m, 1).unwrap());
        assert!(!satisfies_serre(&m, 2).unwrap());
    }

    #[test]
    fn gdim_examples() {
        let (r, x, _) = hyper();
        let rm = PresentedModule::ring_module(r.clone());
        assert_eq!(gdim_zero(&rm, 6).unwrap(), CertifiedValue::proved(true));
        assert_eq!(gdim(&rm, 6).unwrap(), CertifiedValue::proved(0));
        let cx = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap();
        let z = gdim_zero(&cx, 6).unwrap();
        assert_eq!(z, CertifiedValue { value: true, certainty: Certainty::CertifiedUpToBound(6) });
        let k = PresentedModule::residue_field(r.clone());
        let g = gdim(&k, 6).unwrap();
        assert_eq!(g, CertifiedValue { value: 1, certainty: Certainty::CertifiedUpToBound(6) });
        let (s, x, y) = qxy();
        let d = s.ambient().clone();
        let bad = PresentedModule::cyclic(s.clone(), &[d.mul(&x, &x), d.mul(&x, &y)]).unwrap();
        assert_eq!(gdim_zero(&bad, 4).unwrap(), CertifiedValue::proved(false));
        assert_eq!(gdim(&bad, 4).unwrap(), CertifiedValue::proved(2));
    }

    #[test]
    fn canonical_modules() {
        let (s, _, _) = qxy();
        let k = canonical_module(&s).unwrap();
        assert_eq!(k.generator_degrees(), &[0]);
        assert_eq!(k.matrix().ncols(), 0);
        let (r, _, _) = hyper();
        let k = canonical_module(&r).unwrap();
        let rm = PresentedModule::ring_module(r.clone());
        assert_eq!(k.num_generators(), 1);
        assert_eq!(k.hilbert_function(0..=6), rm.hilbert_function(0..=6));
        let d = PolyRingDesc::with_weights(
            crate::field::CoefficientField::Rationals,
            vec!["x".into(), "y".into(), "z".into()],
            crate::poly::MonomialOrder::GradedReverseLex,
            vec![3, 4, 5],
        )
        .unwrap();
        let (x, y, z) = (d.var(0), d.var(1), d.var(2));
        let gens = [
            d.sub(&d.mul(&x, &z), &d.mul(&y, &y)),
            d.sub(&d.pow(&x, 3), &d.mul(&y, &z)),
            d.sub(&d.mul(&d.mul(&x, &x), &y), &d.mul(&z, &z)),
        ];
        let r = QuotientRing::new(d.clone(), &gens).unwrap();
        let k = canonical_module(&r).unwrap();
        assert_eq!(k.num_generators(), 2);
    }

    #[test]
    fn non_cm_ring_rejected() {
        let d = PolyRingDesc::rational(&["x", "y"]);
        let (x, y) = (d.var(0), d.var(1));
        let r = QuotientRing::new(d.clone(), &[d.mul(&x, &x), d.mul(&x, &y)]).unwrap();
        assert_eq!(canonical_module(&r).unwrap_err(), Error::NotCohenMacaulay);
    }
}
