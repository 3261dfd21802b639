//! Finitely generated graded modules over `R = S/I`, given as cokernels of
//! homogeneous matrices.

use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gb::GbEngine;
use crate::ideal::{intersect, krull_dimension, radical_membership, HomogeneousIdeal};
use crate::matrix::{kernel, minimal_columns, submodule_engine, Matrix};
use crate::poly::{exp_divides, Exp, PolyRingDesc, Polynomial};
use crate::ring::QuotientRing;

/// `coker(A)` for a homogeneous `A : ⊕ R(-c_j) -> ⊕ R(-r_i)`.
///
/// Rows are generators (degrees `r_i`), columns are relations.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    ring: Arc<QuotientRing>,
    matrix: Matrix,
    minimal: bool,
}

/// How the supports of two modules sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SupportRelation {
    /// `Supp M ⊆ Supp N`.
    pub contained: bool,
    /// `Supp M ∩ Supp N` is just the irrelevant ideal.
    pub disjoint_up_to_irrelevant: bool,
}

impl PresentedModule {
    /// Validates degrees and reduces entries modulo the defining ideal.
    pub fn new(ring: Arc<QuotientRing>, matrix: Matrix) -> Result<Self> {
        let m = Matrix::new(ring.ambient(), matrix.row_degrees, matrix.col_degrees, matrix.columns)?;
        if m.columns.iter().flatten().any(|p| p.terms().iter().any(|(e, _)| e.len() != ring.nvars())) {
            return Err(Error::RingMismatch);
        }
        let matrix = m.reduce_mod(&ring);
        Ok(PresentedModule { ring, matrix, minimal: false })
    }

    pub(crate) fn from_parts(ring: Arc<QuotientRing>, matrix: Matrix, minimal: bool) -> Self {
        PresentedModule { ring, matrix, minimal }
    }

    /// The free module `⊕ R(-d)`.
    pub fn free(ring: Arc<QuotientRing>, degrees: Vec<i64>) -> Self {
        let matrix = Matrix::zero(degrees, Vec::new());
        PresentedModule { ring, matrix, minimal: true }
    }

    /// `R` itself.
    pub fn ring_module(ring: Arc<QuotientRing>) -> Self {
        Self::free(ring, vec![0])
    }

    /// `R / (gens)`, generated in degree 0.
    pub fn cyclic(ring: Arc<QuotientRing>, gens: &[Polynomial]) -> Result<Self> {
        let m = Matrix::from_rows(ring.ambient(), vec![gens.to_vec()], vec![0])?;
        Self::new(ring, m)
    }

    /// The residue field `R / m`.
    pub fn residue_field(ring: Arc<QuotientRing>) -> Self {
        let vars: Vec<Polynomial> = (0..ring.nvars()).map(|i| ring.ambient().var(i)).collect();
        Self::cyclic(ring, &vars).expect("variables are homogeneous")
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn generator_degrees(&self) -> &[i64] {
        &self.matrix.row_degrees
    }

    pub fn num_generators(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// `M = 0`, i.e. the presentation matrix is surjective.
    pub fn is_zero(&self) -> bool {
        self.minimal_presentation().num_generators() == 0
    }

    /// Errors with `ZeroModule` when `M = 0`.
    pub fn nonzero(&self) -> Result<PresentedModule> {
        let m = self.minimal_presentation();
        if m.num_generators() == 0 {
            Err(Error::ZeroModule)
        } else {
            Ok(m)
        }
    }

    /// An isomorphic presentation with no unit entries and a minimal set of relations.
    pub fn minimal_presentation(&self) -> PresentedModule {
        if self.minimal {
            return self.clone();
        }
        let desc = self.ring.ambient().clone();
        let fld = &desc.field;
        let mut m = self.matrix.reduce_mod(&self.ring);
        while let Some((p, q)) = find_unit(&m) {
            let u = m.columns[q][p].terms()[0].1.clone();
            let pivot = m.columns[q].clone();
            for j in 0..m.ncols() {
                if j == q || m.columns[j][p].is_zero() {
                    continue;
                }
                // column_j -= (a_pj / u) * column_q
                let f = desc.scale(&m.columns[j][p], &fld.inv(&u).expect("unit pivot"));
                for (i, pv) in pivot.iter().enumerate() {
                    if pv.is_zero() {
                        continue;
                    }
                    let t = desc.mul(&f, pv);
                    m.columns[j][i] = self.ring.reduce(&desc.sub(&m.columns[j][i], &t));
                }
            }
            let rows: Vec<usize> = (0..m.nrows()).filter(|&i| i != p).collect();
            let cols: Vec<usize> = (0..m.ncols()).filter(|&j| j != q).collect();
            m = m.select_rows(&rows).select_columns(&cols);
        }
        let m = minimal_columns(&self.ring, &m);
        PresentedModule { ring: self.ring.clone(), matrix: m, minimal: true }
    }

    /// Presentation of the same module over the ambient polynomial ring:
    /// `[A | I e_1 | ... | I e_r]`.
    pub fn over_ambient(&self) -> PresentedModule {
        let s = self.ring.polynomial_ring();
        if self.ring.is_polynomial_ring() {
            return self.clone();
        }
        let desc = self.ring.ambient();
        let mut m = self.matrix.clone();
        for (i, &d) in self.matrix.row_degrees.iter().enumerate() {
            for g in self.ring.defining() {
                let mut col = vec![desc.zero(); m.nrows()];
                col[i] = g.clone();
                m.col_degrees.push(d + desc.homogeneous_degree(g).expect("homogeneous"));
                m.columns.push(col);
            }
        }
        PresentedModule { ring: s, matrix: m, minimal: false }
    }

    /// The same module viewed over `ring`, which must share the ambient ring
    /// and whose defining ideal must annihilate `M`.
    pub fn change_ring(&self, ring: Arc<QuotientRing>) -> Result<PresentedModule> {
        if *ring.ambient() != *self.ring.ambient() {
            return Err(Error::RingMismatch);
        }
        let over_s = self.over_ambient();
        let eng = submodule_engine(over_s.ring(), &over_s.matrix);
        let ord = eng.order().clone();
        for (i, _) in over_s.matrix.row_degrees.iter().enumerate() {
            for g in ring.defining() {
                let mut col = vec![ring.ambient().zero(); over_s.matrix.nrows()];
                col[i] = g.clone();
                if !eng.reduce(&ord.from_entries(&col, 0)).is_zero() {
                    return Err(Error::RingMismatch);
                }
            }
        }
        PresentedModule::new(ring, over_s.matrix)
    }

    /// `M(d)`: adds `d` to every row and column degree.
    pub fn shift(&self, d: i64) -> PresentedModule {
        PresentedModule { ring: self.ring.clone(), matrix: self.matrix.shift(d), minimal: self.minimal }
    }

    pub fn direct_sum(&self, other: &PresentedModule) -> Result<PresentedModule> {
        self.ring.check_same(&other.ring)?;
        let (a, b) = (&self.matrix, &other.matrix);
        let zero = self.ring.ambient().zero();
        let mut row_degrees = a.row_degrees.clone();
        row_degrees.extend_from_slice(&b.row_degrees);
        let mut col_degrees = a.col_degrees.clone();
        col_degrees.extend_from_slice(&b.col_degrees);
        let mut columns = Vec::with_capacity(a.ncols() + b.ncols());
        for c in &a.columns {
            let mut col = c.clone();
            col.resize(a.nrows() + b.nrows(), zero.clone());
            columns.push(col);
        }
        for c in &b.columns {
            let mut col = vec![zero.clone(); a.nrows()];
            col.extend(c.iter().cloned());
            columns.push(col);
        }
        let minimal = self.minimal && other.minimal;
        Ok(PresentedModule {
            ring: self.ring.clone(),
            matrix: Matrix { row_degrees, col_degrees, columns },
            minimal,
        })
    }

    /// `M ⊗_R N`, minimally presented. Generator `(i, k)` sits at index `i * s + k`.
    pub fn tensor(&self, other: &PresentedModule) -> Result<PresentedModule> {
        self.ring.check_same(&other.ring)?;
        let (a, b) = (&self.matrix, &other.matrix);
        let (r, s) = (a.nrows(), b.nrows());
        let zero = self.ring.ambient().zero();
        let mut row_degrees = Vec::with_capacity(r * s);
        for &da in &a.row_degrees {
            for &db in &b.row_degrees {
                row_degrees.push(da + db);
            }
        }
        let mut col_degrees = Vec::new();
        let mut columns = Vec::new();
        for (j, col) in a.columns.iter().enumerate() {
            for k in 0..s {
                let mut v = vec![zero.clone(); r * s];
                for i in 0..r {
                    v[i * s + k] = col[i].clone();
                }
                col_degrees.push(a.col_degrees[j] + b.row_degrees[k]);
                columns.push(v);
            }
        }
        for i in 0..r {
            for (l, col) in b.columns.iter().enumerate() {
                let mut v = vec![zero.clone(); r * s];
                for k in 0..s {
                    v[i * s + k] = col[k].clone();
                }
                col_degrees.push(a.row_degrees[i] + b.col_degrees[l]);
                columns.push(v);
            }
        }
        let m = PresentedModule {
            ring: self.ring.clone(),
            matrix: Matrix { row_degrees, col_degrees, columns },
            minimal: false,
        };
        Ok(m.minimal_presentation())
    }

    /// `ann M` as an ideal of the ambient ring containing the defining ideal.
    pub fn annihilator(&self) -> Result<HomogeneousIdeal> {
        let m = self.nonzero()?;
        let desc = self.ring.ambient().clone();
        let a = &m.matrix;
        let mut acc: Option<HomogeneousIdeal> = None;
        for i in 0..a.nrows() {
            // (im A : e_i) is the first coordinate of ker [e_i | A] over R.
            let mut e = vec![desc.zero(); a.nrows()];
            e[i] = desc.one();
            let mut cols = vec![e];
            cols.extend(a.columns.iter().cloned());
            let mut cdeg = vec![a.row_degrees[i]];
            cdeg.extend_from_slice(&a.col_degrees);
            let big = Matrix { row_degrees: a.row_degrees.clone(), col_degrees: cdeg, columns: cols };
            let k = kernel(&self.ring, &big)?;
            let mut gens: Vec<Polynomial> =
                k.columns.iter().map(|c| c[0].clone()).filter(|p| !p.is_zero()).collect();
            gens.extend(self.ring.defining().iter().cloned());
            let q = HomogeneousIdeal::new(desc.clone(), gens)?;
            acc = Some(match acc {
                None => q,
                Some(prev) => intersect(&prev, &q)?,
            });
        }
        let ann = acc.expect("nonzero module has a generator");
        HomogeneousIdeal::new(desc, ann.groebner().elements)
    }

    /// `Supp M ⊆ Supp N`, i.e. `ann N ⊆ √(ann M)`.
    pub fn support_contains(&self, other: &PresentedModule) -> Result<bool> {
        Ok(self.support_relation(other)?.contained)
    }

    pub fn support_relation(&self, other: &PresentedModule) -> Result<SupportRelation> {
        self.ring.check_same(&other.ring)?;
        let am = self.annihilator()?;
        let an = other.annihilator()?;
        let mut contained = true;
        for g in &an.generators {
            if !radical_membership(g, &am)? {
                contained = false;
                break;
            }
        }
        let disjoint_up_to_irrelevant = krull_dimension(&am.sum(&an)) <= 0;
        Ok(SupportRelation { contained, disjoint_up_to_irrelevant })
    }

    /// Krull dimension of `M` (`-1` for the zero module), read off the initial
    /// module: the largest dimension of `S / in(U)_i` over components `i`.
    pub fn dim(&self) -> i64 {
        let m = self.minimal_presentation();
        if m.num_generators() == 0 {
            return -1;
        }
        let eng = submodule_engine(&m.ring, &m.matrix);
        let n = m.ring.nvars();
        let lms = eng.leading_monomials();
        (0..m.num_generators())
            .map(|i| {
                let lts: Vec<Exp> =
                    lms.iter().filter(|(_, c)| *c as usize == i).map(|(e, _)| e.clone()).collect();
                crate::ideal::monomial_dimension(n, &lts)
            })
            .max()
            .unwrap_or(-1)
    }

    /// `dim_k M_t` for `t` in `degrees`.
    pub fn hilbert_function(&self, degrees: std::ops::RangeInclusive<i64>) -> Vec<i64> {
        let eng = submodule_engine(&self.ring, &self.matrix);
        let lts = leading_by_component(&eng, self.num_generators());
        degrees
            .map(|t| standard_count(self.ring.ambient(), &lts, &self.matrix.row_degrees, t))
            .collect()
    }

    /// Default Hilbert comparison window: `0..=max(10, 2 * max generator degree)`.
    pub fn hilbert_window(&self) -> std::ops::RangeInclusive<i64> {
        let top = self.matrix.row_degrees.iter().copied().max().unwrap_or(0);
        0..=10.max(2 * top)
    }

    /// The submodule `(im K + im Rel) / im Rel` of `F / im Rel`, minimally presented.
    pub fn subquotient(ring: &Arc<QuotientRing>, k: &Matrix, rel: &Matrix) -> Result<PresentedModule> {
        let both = k.hconcat(rel);
        let syz = kernel(ring, &both)?;
        let nk = k.ncols();
        let columns: Vec<Vec<Polynomial>> = syz.columns.iter().map(|c| c[..nk].to_vec()).collect();
        let m = Matrix { row_degrees: k.col_degrees.clone(), col_degrees: syz.col_degrees.clone(), columns };
        Ok(PresentedModule::from_parts(ring.clone(), m.reduce_mod(ring), false).minimal_presentation())
    }

    /// Content hash of the ring and the minimal presentation.
    pub fn fingerprint(&self) -> String {
        let m = self.minimal_presentation();
        let desc = self.ring.ambient();
        let mut h = Sha256::new();
        h.update(self.ring.fingerprint());
        h.update(format!("|{:?}|{:?}|", m.matrix.row_degrees, m.matrix.col_degrees));
        for col in &m.matrix.columns {
            for p in col {
                h.update(desc.format(p));
                h.update(",");
            }
            h.update(";");
        }
        hex::encode(h.finalize())
    }

    /// Human-readable presentation.
    pub fn describe(&self) -> String {
        let desc = self.ring.ambient();
        let rows: Vec<String> = self
            .matrix
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|p| desc.format(p)).collect::<Vec<_>>().join(", ")))
            .collect();
        format!("coker [{}] degrees {:?}", rows.join(", "), self.matrix.row_degrees)
    }
}

/// First unit (nonzero constant) entry in column-major order.
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

pub(crate) fn leading_by_component(eng: &GbEngine, rank: usize) -> Vec<Vec<Exp>> {
    let mut out = vec![Vec::new(); rank];
    for (e, c) in eng.leading_monomials() {
        out[c as usize].push(e);
    }
    out
}

/// Number of monomials `x^a e_i` of degree `t` outside the monomial submodule
/// generated by `lts` (per component), where `e_i` has degree `shifts[i]`.
pub(crate) fn standard_count(desc: &PolyRingDesc, lts: &[Vec<Exp>], shifts: &[i64], t: i64) -> i64 {
    let mut total = 0;
    for (i, &s) in shifts.iter().enumerate() {
        let d = t - s;
        if d < 0 {
            continue;
        }
        let mut exp = desc.zero_exp();
        count_rec(desc, &lts[i], 0, d, &mut exp, &mut total);
    }
    total
}

fn count_rec(desc: &PolyRingDesc, lts: &[Exp], var: usize, left: i64, exp: &mut Exp, total: &mut i64) {
    let n = desc.nvars();
    if var == n {
        if left == 0 && !lts.iter().any(|l| exp_divides(l, exp)) {
            *total += 1;
        }
        return;
    }
    let w = desc.weights[var] as i64;
    let mut a = 0;
    while a * w <= left {
        exp[var] = a as u16;
        count_rec(desc, lts, var + 1, left - a * w, exp, total);
        a += 1;
    }
    exp[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Arc<QuotientRing>, Polynomial, Polynomial) {
        let d = PolyRingDesc::rational(&["x", "y"]);
        let (x, y) = (d.var(0), d.var(1));
        (QuotientRing::polynomial(d), x, y)
    }

    fn ideal_eq(a: &HomogeneousIdeal, gens: Vec<Polynomial>) -> bool {
        a.same_ideal(&HomogeneousIdeal::new(a.ring.clone(), gens).unwrap())
    }

    #[test]
    fn minimal_presentation_examples() {
        let (r, x, y) = setup();
        let d = r.ambient().clone();
        let unit = PresentedModule::cyclic(r.clone(), &[d.one()]).unwrap();
        assert!(unit.is_zero());
        let cx = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap();
        let mp = cx.minimal_presentation();
        assert_eq!(mp.matrix().columns, vec![vec![x.clone()]]);
        let m = Matrix::from_rows(&d, vec![vec![x.clone(), d.one()], vec![d.zero(), y.clone()]], vec![1, 0])
            .unwrap();
        let m = PresentedModule::new(r.clone(), m).unwrap();
        let mp = m.minimal_presentation();
        assert_eq!(mp.num_generators(), 1);
        assert_eq!(mp.matrix().ncols(), 1);
        let xy = PresentedModule::cyclic(r.clone(), &[d.mul(&x, &y)]).unwrap();
        assert_eq!(mp.hilbert_function(0..=5), xy.hilbert_function(0..=5));
        assert_eq!(m.hilbert_function(0..=5), xy.hilbert_function(0..=5));
    }

    #[test]
    fn annihilator_examples() {
        let (r, x, y) = setup();
        let d = r.ambient().clone();
        assert!(PresentedModule::ring_module(r.clone()).annihilator().unwrap().generators.is_empty());
        let cx = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap();
        assert!(ideal_eq(&cx.annihilator().unwrap(), vec![x.clone()]));
        let cy = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&y)).unwrap();
        let s = cx.direct_sum(&cy).unwrap();
        assert!(ideal_eq(&s.annihilator().unwrap(), vec![d.mul(&x, &y)]));
        let zero = PresentedModule::cyclic(r.clone(), &[d.one()]).unwrap();
        assert_eq!(zero.annihilator().unwrap_err(), Error::ZeroModule);
    }

    #[test]
    fn support_examples() {
        let (r, x, _) = setup();
        let rm = PresentedModule::ring_module(r.clone());
        let cx = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap();
        assert!(cx.support_contains(&cx).unwrap());
        assert!(cx.support_contains(&rm).unwrap());
        assert!(!rm.support_contains(&cx).unwrap());
    }

    #[test]
    fn tensor_examples() {
        let (r, x, y) = setup();
        let rm = PresentedModule::ring_module(r.clone());
        let cx = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap();
        let cy = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&y)).unwrap();
        let t = cx.tensor(&cy).unwrap();
        assert_eq!(t.hilbert_function(0..=4), vec![1, 0, 0, 0, 0]);
        assert_eq!(t.matrix().ncols(), 2);
        let t = cx.tensor(&cx).unwrap();
        assert_eq!(t.matrix().columns, vec![vec![x.clone()]]);
        let t = rm.tensor(&cy).unwrap();
        assert_eq!(t.matrix().columns, vec![vec![y.clone()]]);
    }

    #[test]
    fn sums_and_shifts() {
        let (r, x, y) = setup();
        let cx = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap();
        let zero = PresentedModule::free(r.clone(), vec![]);
        assert_eq!(cx.direct_sum(&zero).unwrap().matrix(), cx.matrix());
        assert_eq!(cx.shift(0).matrix(), cx.matrix());
        let cy = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&y)).unwrap();
        let s = cx.direct_sum(&cy).unwrap();
        let d = r.ambient();
        assert_eq!(s.matrix().rows(), vec![vec![x.clone(), d.zero()], vec![d.zero(), y.clone()]]);
    }

    #[test]
    fn dimension_of_modules() {
        let (r, x, y) = setup();
        let d = r.ambient().clone();
        assert_eq!(PresentedModule::ring_module(r.clone()).dim(), 2);
        assert_eq!(PresentedModule::cyclic(r.clone(), std::slice::from_ref(&x)).unwrap().dim(), 1);
        assert_eq!(PresentedModule::residue_field(r.clone()).dim(), 0);
        let m = PresentedModule::cyclic(r.clone(), &[d.mul(&x, &x), d.mul(&x, &y)]).unwrap();
        assert_eq!(m.dim(), 1);
    }

    #[test]
    fn subquotient_of_ideal() {
        let (r, x, y) = setup();
        let d = r.ambient().clone();
        // (x, y) / (x^2) inside R: generated by x, y.
        let k = Matrix::from_rows(&d, vec![vec![x.clone(), y.clone()]], vec![0]).unwrap();
        let rel = Matrix::from_rows(&d, vec![vec![d.mul(&x, &x)]], vec![0]).unwrap();
        let sq = PresentedModule::subquotient(&r, &k, &rel).unwrap();
        assert_eq!(sq.num_generators(), 2);
        // dim_k of degree-t piece: (x,y)_t minus (x^2)_t = (t+1) - (t-1).
        assert_eq!(sq.hilbert_function(0..=4), vec![0, 2, 2, 2, 2]);
    }
}
