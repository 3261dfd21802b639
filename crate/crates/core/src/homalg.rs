//! Ext and Tor over `R`, as presented modules or via cheap vanishing tests.
//!
//! Both are homology of a complex of free modules modulo relations:
//! `Hom(F_i, G_0) / Hom(F_i, im B)` and `F_i ⊗ G_0 / F_i ⊗ im B` for a
//! resolution `F` of `M` and a presentation `B : G_1 -> G_0` of `N`.

use std::ops::RangeInclusive;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{image_contains, kernel, Matrix};
use crate::module::{leading_by_component, standard_count, PresentedModule};
use crate::poly::Polynomial;
use crate::resolve::{free_resolution, projective_dimension, FreeResolution, PdResult, RingTag};
use crate::ring::QuotientRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Functor {
    Ext,
    Tor,
}

#[derive(Clone, Debug)]
pub struct DerivedFunctorResult {
    pub functor: Functor,
    pub index: usize,
    pub value: PresentedModule,
    pub vanishes: bool,
}

/// How far a vanishing claim has been checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "bound", rename_all = "kebab-case")]
pub enum CertificateKind {
    /// Settled: every relevant index was examined, or a witness was found.
    Complete,
    /// Only indices up to the bound were examined.
    UpToBound(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingCertificate {
    pub vanishes: bool,
    pub kind: CertificateKind,
    /// Least index with a nonzero module, when one was found.
    pub witness: Option<usize>,
}

/// One homology position: `(K + Rel) / (Bd + Rel)` inside a free module.
struct Homology {
    ring: Arc<QuotientRing>,
    cycles: Matrix,
    boundaries: Matrix,
    relations: Matrix,
}

impl Homology {
    fn vanishes(&self) -> bool {
        if self.cycles.ncols() == 0 {
            return true;
        }
        let b = self.boundaries.hconcat(&self.relations);
        image_contains(&self.ring, &b, &self.cycles)
    }

    fn module(&self) -> Result<PresentedModule> {
        if self.cycles.ncols() == 0 {
            return Ok(PresentedModule::free(self.ring.clone(), Vec::new()));
        }
        let b = self.boundaries.hconcat(&self.relations);
        // (K + B) / B, with B ⊆ K + Rel.
        PresentedModule::subquotient(&self.ring, &self.cycles, &b)
    }

    fn hilbert(&self, degrees: RangeInclusive<i64>) -> Vec<i64> {
        let shifts = &self.relations.row_degrees;
        let rank = shifts.len();
        let b = self.boundaries.hconcat(&self.relations);
        let kb = self.cycles.hconcat(&self.relations);
        let eb = crate::matrix::submodule_engine(&self.ring, &b);
        let ek = crate::matrix::submodule_engine(&self.ring, &kb);
        let lb = leading_by_component(&eb, rank);
        let lk = leading_by_component(&ek, rank);
        let desc = self.ring.ambient();
        degrees
            .map(|t| standard_count(desc, &lb, shifts, t) - standard_count(desc, &lk, shifts, t))
            .collect()
    }
}

/// First `n` coordinates of generators of `ker [D | Rel]`.
fn cycles_mod(ring: &Arc<QuotientRing>, d: &Matrix, rel: &Matrix) -> Result<Matrix> {
    let n = d.ncols();
    if n == 0 {
        return Ok(Matrix::zero(d.col_degrees.clone(), Vec::new()));
    }
    if d.nrows() == 0 {
        return Ok(Matrix::identity(ring.ambient(), d.col_degrees.clone()));
    }
    let syz = kernel(ring, &d.hconcat(rel))?;
    let mut cols = Vec::new();
    let mut degs = Vec::new();
    for (j, c) in syz.columns.iter().enumerate() {
        let head: Vec<Polynomial> = c[..n].to_vec();
        if head.iter().all(|p| p.is_zero()) {
            continue;
        }
        cols.push(head);
        degs.push(syz.col_degrees[j]);
    }
    Ok(Matrix { row_degrees: d.col_degrees.clone(), col_degrees: degs, columns: cols })
}

fn presentation(n: &PresentedModule) -> Matrix {
    n.minimal_presentation().matrix().clone()
}

/// Basis degrees of `Hom(F_i, G_0)`, index `c * s + g`.
fn hom_degrees(fi: &[i64], g0: &[i64]) -> Vec<i64> {
    fi.iter().flat_map(|&c| g0.iter().map(move |&g| g - c)).collect()
}

/// `Hom(F_i, B)` as columns in `Hom(F_i, G_0)`.
fn hom_relations(fi: &[i64], b: &Matrix) -> Matrix {
    let s = b.nrows();
    let rank = fi.len() * s;
    let mut cols = Vec::new();
    let mut degs = Vec::new();
    for (c, &dc) in fi.iter().enumerate() {
        for (l, col) in b.columns.iter().enumerate() {
            let mut v = vec![Polynomial::default(); rank];
            for g in 0..s {
                v[c * s + g] = col[g].clone();
            }
            cols.push(v);
            degs.push(b.col_degrees[l] - dc);
        }
    }
    Matrix { row_degrees: hom_degrees(fi, &b.row_degrees), col_degrees: degs, columns: cols }
}

/// `Hom(∂_{i+1}, G_0) : Hom(F_i, G_0) -> Hom(F_{i+1}, G_0)`.
fn hom_map(d_next: &Matrix, g0: &[i64]) -> Matrix {
    let s = g0.len();
    let (fi, fj) = (&d_next.row_degrees, &d_next.col_degrees);
    let rank_out = fj.len() * s;
    let mut cols = Vec::with_capacity(fi.len() * s);
    for c in 0..fi.len() {
        for g in 0..s {
            let mut v = vec![Polynomial::default(); rank_out];
            for (cp, dcol) in d_next.columns.iter().enumerate() {
                v[cp * s + g] = dcol[c].clone();
            }
            cols.push(v);
        }
    }
    Matrix { row_degrees: hom_degrees(fj, g0), col_degrees: hom_degrees(fi, g0), columns: cols }
}

/// Basis degrees of `F_i ⊗ G_0`, index `c * s + g`.
fn tensor_degrees(fi: &[i64], g0: &[i64]) -> Vec<i64> {
    fi.iter().flat_map(|&c| g0.iter().map(move |&g| g + c)).collect()
}

fn tensor_relations(fi: &[i64], b: &Matrix) -> Matrix {
    let s = b.nrows();
    let rank = fi.len() * s;
    let mut cols = Vec::new();
    let mut degs = Vec::new();
    for (c, &dc) in fi.iter().enumerate() {
        for (l, col) in b.columns.iter().enumerate() {
            let mut v = vec![Polynomial::default(); rank];
            for g in 0..s {
                v[c * s + g] = col[g].clone();
            }
            cols.push(v);
            degs.push(b.col_degrees[l] + dc);
        }
    }
    Matrix { row_degrees: tensor_degrees(fi, &b.row_degrees), col_degrees: degs, columns: cols }
}

/// `∂_i ⊗ G_0 : F_i ⊗ G_0 -> F_{i-1} ⊗ G_0`.
fn tensor_map(d: &Matrix, g0: &[i64]) -> Matrix {
    let s = g0.len();
    let (fi, fp) = (&d.col_degrees, &d.row_degrees);
    let rank_out = fp.len() * s;
    let mut cols = Vec::with_capacity(fi.len() * s);
    for dcol in &d.columns {
        for g in 0..s {
            let mut v = vec![Polynomial::default(); rank_out];
            for (cpp, p) in dcol.iter().enumerate() {
                v[cpp * s + g] = p.clone();
            }
            cols.push(v);
        }
    }
    Matrix { row_degrees: tensor_degrees(fp, g0), col_degrees: tensor_degrees(fi, g0), columns: cols }
}

fn resolution_through(m: &PresentedModule, need: usize, bound: usize, index: usize) -> Result<Arc<FreeResolution>> {
    let res = free_resolution(m, RingTag::Quotient, need.min(bound.max(1)))?;
    if !res.is_complete() && res.length() < need {
        return Err(Error::BeyondBound { index, bound });
    }
    Ok(res)
}

fn ext_homology(i: usize, m: &PresentedModule, n: &PresentedModule, bound: usize) -> Result<Homology> {
    m.ring().check_same(n.ring())?;
    let ring = m.ring().clone();
    let res = resolution_through(m, i + 1, bound, i)?;
    let b = presentation(n);
    let g0 = b.row_degrees.clone();
    let fi = res.free_degrees(i)?;
    let fnext = res.free_degrees(i + 1)?;
    let d_i = hom_map(&res.differential(i + 1)?, &g0);
    let rel_next = hom_relations(&fnext, &b);
    let cycles = cycles_mod(&ring, &d_i, &rel_next)?;
    let boundaries = if i == 0 {
        Matrix::zero(hom_degrees(&fi, &g0), Vec::new())
    } else {
        hom_map(&res.differential(i)?, &g0)
    };
    let relations = hom_relations(&fi, &b);
    Ok(Homology { ring, cycles, boundaries, relations })
}

fn tor_homology(i: usize, m: &PresentedModule, n: &PresentedModule, bound: usize) -> Result<Homology> {
    m.ring().check_same(n.ring())?;
    let ring = m.ring().clone();
    let res = resolution_through(m, i + 1, bound, i)?;
    let b = presentation(n);
    let g0 = b.row_degrees.clone();
    let fi = res.free_degrees(i)?;
    let cycles = if i == 0 {
        Matrix::identity(ring.ambient(), tensor_degrees(&fi, &g0))
    } else {
        let d = tensor_map(&res.differential(i)?, &g0);
        let rel_prev = tensor_relations(&res.free_degrees(i - 1)?, &b);
        cycles_mod(&ring, &d, &rel_prev)?
    };
    let boundaries = tensor_map(&res.differential(i + 1)?, &g0);
    let relations = tensor_relations(&fi, &b);
    Ok(Homology { ring, cycles, boundaries, relations })
}

/// `Ext^i_R(M, N)`. Errors with `BeyondBound` when `i + 1` resolution steps
/// exceed `bound` and the resolution has not stopped.
pub fn ext_module(i: usize, m: &PresentedModule, n: &PresentedModule, bound: usize) -> Result<DerivedFunctorResult> {
    let h = ext_homology(i, m, n, bound)?;
    let value = h.module()?;
    let vanishes = value.num_generators() == 0;
    Ok(DerivedFunctorResult { functor: Functor::Ext, index: i, value, vanishes })
}

/// `Tor_i^R(M, N)`, bounded as for [`ext_module`].
pub fn tor_module(i: usize, m: &PresentedModule, n: &PresentedModule, bound: usize) -> Result<DerivedFunctorResult> {
    let h = tor_homology(i, m, n, bound)?;
    let value = h.module()?;
    let vanishes = value.num_generators() == 0;
    Ok(DerivedFunctorResult { functor: Functor::Tor, index: i, value, vanishes })
}

/// `Ext^i_R(M, N) = 0`, without building a presentation.
pub fn ext_vanishes(i: usize, m: &PresentedModule, n: &PresentedModule, bound: usize) -> Result<bool> {
    Ok(ext_homology(i, m, n, bound)?.vanishes())
}

pub fn tor_vanishes(i: usize, m: &PresentedModule, n: &PresentedModule, bound: usize) -> Result<bool> {
    Ok(tor_homology(i, m, n, bound)?.vanishes())
}

/// Hilbert function of `Ext^i_R(M, N)` over `degrees`.
pub fn ext_hilbert(
    i: usize,
    m: &PresentedModule,
    n: &PresentedModule,
    bound: usize,
    degrees: RangeInclusive<i64>,
) -> Result<Vec<i64>> {
    Ok(ext_homology(i, m, n, bound)?.hilbert(degrees))
}

/// Hilbert function of `Tor_i^R(M, N)` over `degrees`.
pub fn tor_hilbert(
    i: usize,
    m: &PresentedModule,
    n: &PresentedModule,
    bound: usize,
    degrees: RangeInclusive<i64>,
) -> Result<Vec<i64>> {
    Ok(tor_homology(i, m, n, bound)?.hilbert(degrees))
}

/// `Tor_i(M, N) = 0` for all `i > 0`. Complete when `pd_R M` is finite
/// within `bound` (then indices `1..=pd` suffice) or a witness is found.
pub fn tor_vanishes_positive(m: &PresentedModule, n: &PresentedModule, bound: usize) -> Result<VanishingCertificate> {
    let pd = projective_dimension(m, RingTag::Quotient, bound)?;
    let (top, kind) = match pd {
        PdResult::Exact(p) => (p, CertificateKind::Complete),
        PdResult::GreaterThan(b) => (b, CertificateKind::UpToBound(b)),
    };
    for i in 1..=top {
        let extra = if kind == CertificateKind::Complete { usize::MAX } else { bound + 1 };
        if !tor_vanishes(i, m, n, extra)? {
            return Ok(VanishingCertificate { vanishes: false, kind: CertificateKind::Complete, witness: Some(i) });
        }
    }
    Ok(VanishingCertificate { vanishes: true, kind, witness: None })
}
