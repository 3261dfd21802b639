//! Localization at monomial primes for multigraded modules over monomial
//! rings, by setting the variables outside the prime to 1.
//!
//! For a `Z^n`-graded module, depth and dimension at an arbitrary prime are
//! determined by the largest monomial prime inside it, so the finitely many
//! monomial primes decide Serre conditions and support-wise depth minima.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::invariants::depth;
use crate::matrix::Matrix;
use crate::module::PresentedModule;
use crate::poly::PolyRingDesc;
use crate::ring::QuotientRing;

/// `Z^n` degrees of generators and relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiDegrees {
    pub rows: Vec<Vec<i64>>,
    pub cols: Vec<Vec<i64>>,
}

/// Depth and dimension of `M_p` at the monomial prime generated by `vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData {
    pub vars: Vec<usize>,
    pub depth: i64,
    pub dim: i64,
}

/// Whether the defining ideal is generated by monomials.
pub fn is_monomial_ring(ring: &QuotientRing) -> bool {
    ring.defining().iter().all(|g| g.is_monomial())
}

/// A multigrading making every entry homogeneous, if one exists and all
/// entries are monomials.
pub fn multidegrees(m: &PresentedModule) -> Option<MultiDegrees> {
    let a = m.matrix();
    let n = m.ring().nvars();
    let (r, c) = (a.nrows(), a.ncols());
    let mut deg: Vec<Option<Vec<i64>>> = vec![None; r + c];
    let mut adj: Vec<Vec<(usize, Vec<i64>, bool)>> = vec![Vec::new(); r + c];
    for (j, col) in a.columns.iter().enumerate() {
        for (i, p) in col.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !p.is_monomial() {
                return None;
            }
            let e: Vec<i64> = p.terms()[0].0.iter().map(|&x| x as i64).collect();
            adj[i].push((r + j, e.clone(), true));
            adj[r + j].push((i, e, false));
        }
    }
    for start in 0..r + c {
        if deg[start].is_some() {
            continue;
        }
        deg[start] = Some(vec![0; n]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let du = deg[u].clone().expect("assigned");
            for (v, e, forward) in &adj[u] {
                let want: Vec<i64> =
                    du.iter().zip(e).map(|(a, b)| if *forward { a + b } else { a - b }).collect();
                match &deg[*v] {
                    Some(d) if *d != want => return None,
                    Some(_) => {}
                    None => {
                        deg[*v] = Some(want);
                        stack.push(*v);
                    }
                }
            }
        }
    }
    let mut all: Vec<Vec<i64>> = deg.into_iter().map(|d| d.expect("assigned")).collect();
    let cols = all.split_off(r);
    Some(MultiDegrees { rows: all, cols })
}

fn check(m: &PresentedModule) -> Result<MultiDegrees> {
    if !is_monomial_ring(m.ring()) {
        return Err(Error::NotMonomial);
    }
    multidegrees(m).ok_or(Error::NotMonomial)
}

/// `M` with the variables outside `vars` set to 1, over `k[vars] / I|`.
/// Returns `None` when the prime is not in the support.
pub fn localize_at(m: &PresentedModule, vars: &[usize]) -> Result<Option<PresentedModule>> {
    let md = check(m)?;
    substitute(m, &md, vars)
}

fn substitute(m: &PresentedModule, md: &MultiDegrees, vars: &[usize]) -> Result<Option<PresentedModule>> {
    let desc = m.ring().ambient();
    let sub = PolyRingDesc::with_weights(
        desc.field,
        vars.iter().map(|&i| desc.variables[i].clone()).collect(),
        desc.order,
        vars.iter().map(|&i| desc.weights[i]).collect(),
    )?;
    let gens: Vec<_> = m.ring().defining().iter().map(|g| desc.restrict_to(g, vars, &sub)).collect();
    let ring = QuotientRing::new(sub.clone(), &gens)?;
    if ring.is_zero_ring() {
        // p does not contain the defining ideal.
        return Ok(None);
    }
    let wdeg = |d: &Vec<i64>| vars.iter().map(|&i| d[i] * desc.weights[i] as i64).sum::<i64>();
    let a = m.matrix();
    let columns = a
        .columns
        .iter()
        .map(|col| col.iter().map(|p| desc.restrict_to(p, vars, &sub)).collect())
        .collect();
    let mat = Matrix::new(&sub, md.rows.iter().map(wdeg).collect(), md.cols.iter().map(wdeg).collect(), columns)?;
    let lm = PresentedModule::new(Arc::clone(&ring), mat)?.minimal_presentation();
    Ok(if lm.num_generators() == 0 { None } else { Some(lm) })
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1u32 << n)).map(move |mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
}

/// Depth and dimension of `M_p` for every monomial prime `p` in `Supp M`.
pub fn local_data(m: &PresentedModule) -> Result<Vec<LocalData>> {
    let md = check(m)?;
    let mut out = Vec::new();
    for vars in subsets(m.ring().nvars()) {
        if let Some(lm) = substitute(m, &md, &vars)? {
            out.push(LocalData { depth: depth(&lm)?, dim: lm.dim(), vars });
        }
    }
    Ok(out)
}

/// `(S_k)` decided prime by prime.
pub fn serre_by_localization(m: &PresentedModule, k: usize) -> Result<bool> {
    m.nonzero()?;
    Ok(local_data(m)?.iter().all(|d| d.depth >= (k as i64).min(d.dim)))
}

/// `min { depth N_p | p ∈ Supp M }` over monomial primes.
pub fn grade_by_localization(m: &PresentedModule, n: &PresentedModule) -> Result<i64> {
    m.ring().check_same(n.ring())?;
    m.nonzero()?;
    n.nonzero()?;
    let mdm = check(m)?;
    let mdn = check(n)?;
    let mut best: Option<i64> = None;
    for vars in subsets(m.ring().nvars()) {
        if substitute(m, &mdm, &vars)?.is_none() {
            continue;
        }
        if let Some(ln) = substitute(n, &mdn, &vars)? {
            let d = depth(&ln)?;
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    best.ok_or_else(|| Error::Internal("supports do not meet".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{grade_mn, satisfies_serre};

    #[test]
    fn local_data_of_x2_xy() {
        let d = PolyRingDesc::rational(&["x", "y"]);
        let (x, y) = (d.var(0), d.var(1));
        let r = QuotientRing::polynomial(d.clone());
        let m = PresentedModule::cyclic(r.clone(), &[d.mul(&x, &x), d.mul(&x, &y)]).unwrap();
        let data = local_data(&m).unwrap();
        // Supp = V(x): primes (x) and (x, y).
        let primes: Vec<Vec<usize>> = data.iter().map(|l| l.vars.clone()).collect();
        assert_eq!(primes, vec![vec![0], vec![0, 1]]);
        assert_eq!((data[0].depth, data[0].dim), (0, 0));
        assert_eq!((data[1].depth, data[1].dim), (0, 1));
        assert!(!serre_by_localization(&m, 1).unwrap());
        assert!(serre_by_localization(&m, 0).unwrap());
    }

    #[test]
    fn agrees_with_ext_routes() {
        let d = PolyRingDesc::rational(&["x", "y", "z"]);
        let r = QuotientRing::polynomial(d.clone());
        let a = PresentedModule::cyclic(r.clone(), &[d.var(0)]).unwrap();
        let b = PresentedModule::cyclic(r.clone(), &[d.var(1), d.var(2)]).unwrap();
        let m = a.direct_sum(&b).unwrap();
        for k in 0..3 {
            assert_eq!(serre_by_localization(&m, k).unwrap(), satisfies_serre(&m, k).unwrap());
        }
        let s = PresentedModule::ring_module(r.clone());
        assert_eq!(grade_by_localization(&m, &s).unwrap(), grade_mn(&m, &s).unwrap());
        assert_eq!(grade_by_localization(&b, &a).unwrap(), grade_mn(&b, &a).unwrap());
    }

    #[test]
    fn primes_missing_the_defining_ideal_are_skipped() {
        let d = PolyRingDesc::rational(&["x", "y", "z"]);
        let z = d.var(2);
        let r = QuotientRing::new(d.clone(), &[d.mul(&z, &z)]).unwrap();
        let m = PresentedModule::cyclic(r.clone(), &[d.var(0)]).unwrap();
        assert!(localize_at(&m, &[0]).unwrap().is_none());
        let s = PresentedModule::ring_module(r);
        assert_eq!(grade_by_localization(&m, &s).unwrap(), 1);
        assert_eq!(grade_mn(&m, &s).unwrap(), 1);
    }

    #[test]
    fn rejects_non_monomial_data() {
        let d = PolyRingDesc::rational(&["x", "y"]);
        let r = QuotientRing::polynomial(d.clone());
        let m = PresentedModule::cyclic(r, &[d.add(&d.var(0), &d.var(1))]).unwrap();
        assert_eq!(local_data(&m).unwrap_err(), Error::NotMonomial);
    }
}
