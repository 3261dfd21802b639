//! Homogeneous polynomial matrices between graded free modules, and their
//! kernels (syzygies).
//!
//! A matrix maps `⊕_j S(-col_degrees[j]) -> ⊕_i S(-row_degrees[i])`; entry
//! `(i, j)` is homogeneous of degree `col_degrees[j] - row_degrees[i]`.
//! Columns are stored as vectors of entries.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gb::{GbEngine, ModuleOrder, Term, Vector};
use crate::poly::{PolyRingDesc, Polynomial};
use crate::ring::QuotientRing;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub row_degrees: Vec<i64>,
    pub col_degrees: Vec<i64>,
    pub columns: Vec<Vec<Polynomial>>,
}

impl Matrix {
    /// Validates shapes and entry degrees.
    pub fn new(
        ring: &PolyRingDesc,
        row_degrees: Vec<i64>,
        col_degrees: Vec<i64>,
        columns: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if columns.len() != col_degrees.len() {
            return Err(Error::Internal("column count does not match column degrees".into()));
        }
        for (j, col) in columns.iter().enumerate() {
            if col.len() != row_degrees.len() {
                return Err(Error::Internal("ragged matrix column".into()));
            }
            for (i, p) in col.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                match ring.homogeneous_degree(p) {
                    Some(d) if d == col_degrees[j] - row_degrees[i] => {}
                    _ => return Err(Error::DegreeInconsistent { row: i, col: j }),
                }
            }
        }
        Ok(Matrix { row_degrees, col_degrees, columns })
    }

    /// Builds from row lists, inferring column degrees from nonzero entries.
    /// A zero column gets the largest row degree.
    pub fn from_rows(
        ring: &PolyRingDesc,
        rows: Vec<Vec<Polynomial>>,
        row_degrees: Vec<i64>,
    ) -> Result<Self> {
        if rows.len() != row_degrees.len() {
            return Err(Error::Internal("row count does not match row degrees".into()));
        }
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Internal("ragged matrix rows".into()));
        }
        let mut col_degrees = Vec::with_capacity(ncols);
        let mut columns = Vec::with_capacity(ncols);
        for j in 0..ncols {
            let mut deg = None;
            for (i, row) in rows.iter().enumerate() {
                let p = &row[j];
                if p.is_zero() {
                    continue;
                }
                let d = ring
                    .homogeneous_degree(p)
                    .ok_or(Error::DegreeInconsistent { row: i, col: j })?
                    + row_degrees[i];
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return Err(Error::DegreeInconsistent { row: i, col: j }),
                    _ => {}
                }
            }
            col_degrees.push(deg.unwrap_or_else(|| row_degrees.iter().copied().max().unwrap_or(0)));
            columns.push(rows.iter().map(|r| r[j].clone()).collect());
        }
        Ok(Matrix { row_degrees, col_degrees, columns })
    }

    pub fn zero(row_degrees: Vec<i64>, col_degrees: Vec<i64>) -> Self {
        let columns = col_degrees
            .iter()
            .map(|_| vec![Polynomial::default(); row_degrees.len()])
            .collect();
        Matrix { row_degrees, col_degrees, columns }
    }

    pub fn identity(ring: &PolyRingDesc, degrees: Vec<i64>) -> Self {
        let n = degrees.len();
        let columns = (0..n)
            .map(|j| (0..n).map(|i| if i == j { ring.one() } else { ring.zero() }).collect())
            .collect();
        Matrix { row_degrees: degrees.clone(), col_degrees: degrees, columns }
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.columns[j][i]
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.nrows()).map(|i| self.columns.iter().map(|c| c[i].clone()).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|p| p.is_zero()))
    }

    pub fn transpose(&self) -> Matrix {
        let columns = (0..self.nrows())
            .map(|i| self.columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        Matrix {
            row_degrees: self.col_degrees.iter().map(|d| -d).collect(),
            col_degrees: self.row_degrees.iter().map(|d| -d).collect(),
            columns,
        }
    }

    pub fn mul(&self, ring: &PolyRingDesc, other: &Matrix) -> Matrix {
        let columns = other
            .columns
            .iter()
            .map(|oc| {
                (0..self.nrows())
                    .map(|i| {
                        let mut acc = ring.zero();
                        for (k, b) in oc.iter().enumerate() {
                            if !b.is_zero() && !self.columns[k][i].is_zero() {
                                acc = ring.add(&acc, &ring.mul(&self.columns[k][i], b));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Matrix {
            row_degrees: self.row_degrees.clone(),
            col_degrees: other.col_degrees.clone(),
            columns,
        }
    }

    /// Side-by-side concatenation; row degrees must agree.
    pub fn hconcat(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.row_degrees, other.row_degrees);
        let mut m = self.clone();
        m.col_degrees.extend_from_slice(&other.col_degrees);
        m.columns.extend(other.columns.iter().cloned());
        m
    }

    /// Keeps the listed rows (in order).
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix {
            row_degrees: rows.iter().map(|&i| self.row_degrees[i]).collect(),
            col_degrees: self.col_degrees.clone(),
            columns: self.columns.iter().map(|c| rows.iter().map(|&i| c[i].clone()).collect()).collect(),
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix {
            row_degrees: self.row_degrees.clone(),
            col_degrees: cols.iter().map(|&j| self.col_degrees[j]).collect(),
            columns: cols.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }

    pub fn shift(&self, d: i64) -> Matrix {
        Matrix {
            row_degrees: self.row_degrees.iter().map(|x| x + d).collect(),
            col_degrees: self.col_degrees.iter().map(|x| x + d).collect(),
            columns: self.columns.clone(),
        }
    }

    /// Reduces every entry modulo the defining ideal of `ring`.
    pub fn reduce_mod(&self, ring: &QuotientRing) -> Matrix {
        if ring.is_polynomial_ring() {
            return self.clone();
        }
        Matrix {
            row_degrees: self.row_degrees.clone(),
            col_degrees: self.col_degrees.clone(),
            columns: self.columns.iter().map(|c| c.iter().map(|p| ring.reduce(p)).collect()).collect(),
        }
    }

    pub fn column_vector(&self, ord: &ModuleOrder, j: usize) -> Vector {
        ord.from_entries(&self.columns[j], 0)
    }

    /// `A * B == 0` modulo the defining ideal.
    pub fn composes_to_zero(ring: &QuotientRing, a: &Matrix, b: &Matrix) -> bool {
        a.mul(ring.ambient(), b).reduce_mod(ring).is_zero()
    }
}

/// The vectors `g * e_i` for every generator `g` of the defining ideal and every
/// component `i` in `offset..offset + shifts.len()`.
pub(crate) fn ideal_multiples(ring: &QuotientRing, ord: &ModuleOrder, offset: usize, rank: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..rank {
        for g in ring.defining() {
            let terms = g
                .terms()
                .iter()
                .map(|(e, c)| Term { exp: e.clone(), comp: (offset + i) as u32, coeff: c.clone() })
                .collect();
            out.push(ord.vector(terms));
        }
    }
    out
}

/// Generators of `ker(A)` over the polynomial ring: columns `v` with `A v = 0`.
pub fn syzygies(ring: &Arc<PolyRingDesc>, a: &Matrix) -> Result<Matrix> {
    let q = QuotientRing::polynomial(ring.clone());
    kernel(&q, a)
}

/// Generators of the kernel of `A : R^cols -> R^rows` over `R = S/I`.
///
/// Computed by an elimination Gröbner basis of the columns of `[A; Id]`
/// together with `I * e_i` in the top block; elements whose leading term falls
/// in the bottom block are the syzygies. The result is a Gröbner basis of the
/// kernel, not a minimal generating set.
pub fn kernel(ring: &QuotientRing, a: &Matrix) -> Result<Matrix> {
    let desc = ring.ambient();
    let (r, c) = (a.nrows(), a.ncols());
    let mut shifts = a.row_degrees.clone();
    shifts.extend_from_slice(&a.col_degrees);
    let ord = ModuleOrder::with_block(desc.clone(), shifts, r);
    let mut eng = GbEngine::new(ord.clone());
    let one = desc.field.one();
    for j in 0..c {
        let mut v = ord.from_entries(&a.columns[j], 0).terms;
        v.push(Term { exp: desc.zero_exp(), comp: (r + j) as u32, coeff: one.clone() });
        eng.add(ord.vector(v));
    }
    for v in ideal_multiples(ring, &ord, 0, r) {
        eng.add(v);
    }
    eng.complete();
    let mut cols = Vec::new();
    let mut degs = Vec::new();
    let mut basis = eng.basis();
    basis.sort_by(|x, y| {
        let (tx, ty) = (&x.terms[0], &y.terms[0]);
        ord.cmp(&tx.exp, tx.comp, &ty.exp, ty.comp)
    });
    for v in basis {
        let lead = v.lead().expect("nonzero");
        if (lead.comp as usize) < r {
            continue;
        }
        let entries: Vec<Polynomial> =
            ord.entries(&v, r, c).into_iter().map(|p| ring.reduce(&p)).collect();
        if entries.iter().all(|p| p.is_zero()) {
            continue;
        }
        degs.push(ord.degree(&v).expect("homogeneous"));
        cols.push(entries);
    }
    Ok(Matrix { row_degrees: a.col_degrees.clone(), col_degrees: degs, columns: cols })
}

/// A minimal homogeneous generating set, chosen among the columns of `m`, of
/// the submodule `im(m) + I * F` modulo `I * F`. Columns are scanned by
/// increasing degree; a column is kept when it is not in the span of those
/// kept before it.
pub fn minimal_columns(ring: &QuotientRing, m: &Matrix) -> Matrix {
    let ord = ModuleOrder::new(ring.ambient().clone(), m.row_degrees.clone());
    let mut eng = GbEngine::new(ord.clone());
    for v in ideal_multiples(ring, &ord, 0, m.nrows()) {
        eng.add(v);
    }
    let mut idx: Vec<usize> = (0..m.ncols()).collect();
    idx.sort_by_key(|&j| (m.col_degrees[j], j));
    let mut keep = Vec::new();
    for j in idx {
        let v = m.column_vector(&ord, j);
        if v.is_zero() {
            continue;
        }
        eng.complete_through(Some(m.col_degrees[j]));
        if !eng.reduce(&v).is_zero() {
            keep.push(j);
            eng.add(v);
        }
    }
    m.select_columns(&keep)
}

/// Gröbner engine for the submodule `im(m) + I * F` of the target of `m`,
/// graded term-over-position.
pub fn submodule_engine(ring: &QuotientRing, m: &Matrix) -> GbEngine {
    let ord = ModuleOrder::new(ring.ambient().clone(), m.row_degrees.clone());
    let mut eng = GbEngine::new(ord.clone());
    for j in 0..m.ncols() {
        eng.add(m.column_vector(&ord, j));
    }
    for v in ideal_multiples(ring, &ord, 0, m.nrows()) {
        eng.add(v);
    }
    eng.complete();
    eng
}

/// Whether every column of `sub` lies in `im(big) + I * F`.
pub fn image_contains(ring: &QuotientRing, big: &Matrix, sub: &Matrix) -> bool {
    let eng = submodule_engine(ring, big);
    (0..sub.ncols()).all(|j| eng.reduce(&sub.column_vector(eng.order(), j)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_syzygy_of_x_y() {
        let r = PolyRingDesc::rational(&["x", "y"]);
        let a = Matrix::from_rows(&r, vec![vec![r.var(0), r.var(1)]], vec![0]).unwrap();
        let k = syzygies(&r, &a).unwrap();
        assert_eq!(k.ncols(), 1);
        assert_eq!(k.col_degrees, vec![2]);
        let col = &k.columns[0];
        // (-y, x) up to sign
        assert_eq!(r.add(&r.mul(&col[0], &r.var(0)), &r.mul(&col[1], &r.var(1))), r.zero());
        assert!(col[0].is_monomial() && col[1].is_monomial());
    }

    #[test]
    fn identity_has_no_syzygies() {
        let r = PolyRingDesc::rational(&["x", "y"]);
        let id = Matrix::identity(&r, vec![0, 1]);
        assert_eq!(syzygies(&r, &id).unwrap().ncols(), 0);
    }

    #[test]
    fn degree_inconsistency_rejected() {
        let r = PolyRingDesc::rational(&["x", "y"]);
        let x2 = r.mul(&r.var(0), &r.var(0));
        let bad = Matrix::from_rows(&r, vec![vec![r.var(0)], vec![x2]], vec![0, 0]);
        assert_eq!(bad, Err(Error::DegreeInconsistent { row: 1, col: 0 }));
    }
}
