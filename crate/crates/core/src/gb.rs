//! Homogeneous Gröbner bases of submodules of graded free modules.
//!
//! Elements are sparse vectors of terms `c * x^e * e_comp`. The module order
//! compares, in turn: membership in the elimination block (components below
//! `block` are larger), total degree `deg(x^e) + shift[comp]`, the ring order
//! on `e`, and finally the component index (smaller index is larger). With
//! `block = 0` this is a graded term-over-position order.
//!
//! Pairs are processed degree by degree (normal strategy, ties broken by
//! least common multiple and then by creation order), with Gebauer–Möller
//! pruning. Because all input is homogeneous, the basis is complete through
//! degree `d` as soon as every pair and input of degree `<= d` is processed,
//! which is what [`GbEngine::complete_through`] exploits.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::field::{Coeff, CoefficientField};
use crate::poly::{
    exp_add, exp_coprime, exp_divides, exp_lcm, exp_sub, Exp, PolyRingDesc, Polynomial,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub exp: Exp,
    pub comp: u32,
    pub coeff: Coeff,
}

/// Element of a graded free module, terms sorted descending in a [`ModuleOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }
}

#[derive(Clone, Debug)]
pub struct ModuleOrder {
    pub ring: Arc<PolyRingDesc>,
    pub shifts: Vec<i64>,
    pub block: usize,
}

impl ModuleOrder {
    pub fn new(ring: Arc<PolyRingDesc>, shifts: Vec<i64>) -> Self {
        ModuleOrder { ring, shifts, block: 0 }
    }

    pub fn with_block(ring: Arc<PolyRingDesc>, shifts: Vec<i64>, block: usize) -> Self {
        ModuleOrder { ring, shifts, block }
    }

    pub fn field(&self) -> &CoefficientField {
        &self.ring.field
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn term_degree(&self, exp: &[u16], comp: u32) -> i64 {
        self.ring.exp_degree(exp) + self.shifts[comp as usize]
    }

    pub fn cmp(&self, ae: &[u16], ac: u32, be: &[u16], bc: u32) -> Ordering {
        if self.block > 0 {
            let (ta, tb) = ((ac as usize) < self.block, (bc as usize) < self.block);
            if ta != tb {
                return ta.cmp(&tb);
            }
        }
        self.term_degree(ae, ac)
            .cmp(&self.term_degree(be, bc))
            .then_with(|| self.ring.cmp_exp(ae, be))
            .then_with(|| bc.cmp(&ac))
    }

    pub fn sort(&self, terms: &mut [Term]) {
        terms.sort_by(|a, b| self.cmp(&b.exp, b.comp, &a.exp, a.comp));
    }

    /// Builds a vector from arbitrary terms (merging duplicates).
    pub fn vector(&self, mut terms: Vec<Term>) -> Vector {
        self.sort(&mut terms);
        let f = self.field();
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.comp == t.comp && l.exp == t.exp => {
                    l.coeff = f.add(&l.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !f.is_zero(&t.coeff));
        Vector { terms: out }
    }

    /// Vector whose `i`-th coordinate is `entries[i]`, placed at component `offset + i`.
    pub fn from_entries(&self, entries: &[Polynomial], offset: usize) -> Vector {
        let mut terms = Vec::new();
        for (i, p) in entries.iter().enumerate() {
            for (e, c) in p.terms() {
                terms.push(Term { exp: e.clone(), comp: (offset + i) as u32, coeff: c.clone() });
            }
        }
        self.sort(&mut terms);
        Vector { terms }
    }

    /// Coordinates `offset..offset + n` of `v` as polynomials.
    pub fn entries(&self, v: &Vector, offset: usize, n: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Exp, Coeff)>> = vec![Vec::new(); n];
        for t in &v.terms {
            let c = t.comp as usize;
            if c >= offset && c < offset + n {
                buckets[c - offset].push((t.exp.clone(), t.coeff.clone()));
            }
        }
        buckets.into_iter().map(|b| self.ring.from_terms(b)).collect()
    }

    /// Common degree of all terms, `None` for zero or inhomogeneous vectors.
    pub fn degree(&self, v: &Vector) -> Option<i64> {
        let t = v.terms.first()?;
        let d = self.term_degree(&t.exp, t.comp);
        v.terms.iter().all(|t| self.term_degree(&t.exp, t.comp) == d).then_some(d)
    }

    pub fn scale(&self, v: &Vector, c: &Coeff) -> Vector {
        let f = self.field();
        Vector {
            terms: v
                .terms
                .iter()
                .map(|t| Term { exp: t.exp.clone(), comp: t.comp, coeff: f.mul(&t.coeff, c) })
                .collect(),
        }
    }

    pub fn monic(&self, v: &Vector) -> Vector {
        match v.lead() {
            Some(t) if !self.field().is_one(&t.coeff) => {
                self.scale(v, &self.field().inv(&t.coeff).expect("nonzero"))
            }
            _ => v.clone(),
        }
    }

    /// `a + c * x^exp * b`.
    pub fn add_scaled(&self, a: &[Term], c: &Coeff, exp: &[u16], b: &[Term]) -> Vec<Term> {
        let f = self.field();
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut shifted: Option<Term> = None;
        let shift = |t: &Term| Term { exp: exp_add(&t.exp, exp), comp: t.comp, coeff: f.mul(&t.coeff, c) };
        loop {
            if shifted.is_none() && j < b.len() {
                shifted = Some(shift(&b[j]));
                j += 1;
            }
            match (i < a.len(), shifted.as_ref()) {
                (false, None) => break,
                (true, None) => {
                    out.extend_from_slice(&a[i..]);
                    break;
                }
                (false, Some(_)) => out.push(shifted.take().unwrap()),
                (true, Some(s)) => match self.cmp(&a[i].exp, a[i].comp, &s.exp, s.comp) {
                    Ordering::Greater => {
                        out.push(a[i].clone());
                        i += 1;
                    }
                    Ordering::Less => out.push(shifted.take().unwrap()),
                    Ordering::Equal => {
                        let s = shifted.take().unwrap();
                        let sum = f.add(&a[i].coeff, &s.coeff);
                        if !f.is_zero(&sum) {
                            out.push(Term { exp: s.exp, comp: s.comp, coeff: sum });
                        }
                        i += 1;
                    }
                },
            }
        }
        out
    }

    pub fn add(&self, a: &Vector, b: &Vector) -> Vector {
        let one = self.field().one();
        let zero = self.ring.zero_exp();
        Vector { terms: self.add_scaled(&a.terms, &one, &zero, &b.terms) }
    }

    pub fn sub(&self, a: &Vector, b: &Vector) -> Vector {
        let m1 = self.field().from_i64(-1);
        let zero = self.ring.zero_exp();
        Vector { terms: self.add_scaled(&a.terms, &m1, &zero, &b.terms) }
    }

    /// `p * v` for a polynomial `p`.
    pub fn mul_poly(&self, p: &Polynomial, v: &Vector) -> Vector {
        let mut acc: Vec<Term> = Vec::new();
        for (e, c) in p.terms() {
            acc = self.add_scaled(&acc, c, e, &v.terms);
        }
        Vector { terms: acc }
    }
}

fn support_mask(e: &[u16]) -> u64 {
    e.iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
}

struct Elem {
    v: Vector,
    lt: Exp,
    comp: u32,
    mask: u64,
    active: bool,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exp,
    comp: u32,
    deg: i64,
    seq: usize,
}

/// Incremental Buchberger engine for homogeneous submodules.
pub struct GbEngine {
    ord: ModuleOrder,
    elems: Vec<Elem>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    inputs: Vec<(i64, usize, Vector)>,
    seq: usize,
    product_criterion: bool,
}

impl GbEngine {
    pub fn new(ord: ModuleOrder) -> Self {
        let product_criterion = ord.rank() == 1 && ord.block == 0;
        GbEngine {
            ord,
            elems: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            inputs: Vec::new(),
            seq: 0,
            product_criterion,
        }
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.ord
    }

    /// Queues a homogeneous generator. Zero vectors are ignored.
    pub fn add(&mut self, v: Vector) {
        if let Some(d) = self.ord.degree(&v) {
            self.seq += 1;
            self.inputs.push((d, self.seq, v));
        } else {
            debug_assert!(v.is_zero(), "inhomogeneous vector fed to GbEngine");
        }
    }

    pub fn complete(&mut self) {
        self.complete_through(None)
    }

    /// Processes every pair and input of degree `<= limit` (all when `None`).
    pub fn complete_through(&mut self, limit: Option<i64>) {
        loop {
            let dp = self.pairs.iter().map(|p| p.deg).min();
            let di = self.inputs.iter().map(|x| x.0).min();
            let d = match (dp, di) {
                (None, None) => return,
                (Some(a), None) | (None, Some(a)) => a,
                (Some(a), Some(b)) => a.min(b),
            };
            if limit.is_some_and(|l| d > l) {
                return;
            }
            let mut batch: Vec<Pair> = Vec::new();
            self.pairs.retain(|p| {
                if p.deg == d {
                    batch.push(p.clone());
                    false
                } else {
                    true
                }
            });
            let ord = self.ord.clone();
            batch.sort_by(|a, b| {
                ord.cmp(&a.lcm, a.comp, &b.lcm, b.comp).then(a.seq.cmp(&b.seq))
            });
            for p in batch {
                let s = self.spoly(&p);
                let h = self.reduce(&s);
                if !h.is_zero() {
                    self.insert(h);
                }
            }
            let mut now: Vec<(i64, usize, Vector)> = Vec::new();
            self.inputs.retain(|x| {
                if x.0 == d {
                    now.push(x.clone());
                    false
                } else {
                    true
                }
            });
            now.sort_by_key(|x| x.1);
            for (_, _, v) in now {
                let h = self.reduce(&v);
                if !h.is_zero() {
                    self.insert(h);
                }
            }
        }
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
        let f = self.ord.field();
        let one = f.one();
        let m1 = f.from_i64(-1);
        let ta = self.ord.add_scaled(&[], &one, &exp_sub(&p.lcm, &a.lt), &a.v.terms);
        let terms = self.ord.add_scaled(&ta, &m1, &exp_sub(&p.lcm, &b.lt), &b.v.terms);
        Vector { terms }
    }

    fn find_divisor(&self, exp: &[u16], comp: u32) -> Option<usize> {
        let m = support_mask(exp);
        self.active.iter().copied().find(|&k| {
            let g = &self.elems[k];
            g.comp == comp && g.mask & !m == 0 && exp_divides(&g.lt, exp)
        })
    }

    /// Full normal form with respect to the current active elements.
    /// Exact membership requires completion through the degree of `v`.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let f = self.ord.field();
        let mut terms = v.terms.clone();
        let mut pos = 0;
        while pos < terms.len() {
            let t = &terms[pos];
            match self.find_divisor(&t.exp, t.comp) {
                Some(k) => {
                    let g = &self.elems[k];
                    let c = f.neg(&t.coeff);
                    let mult = exp_sub(&t.exp, &g.lt);
                    let tail = self.ord.add_scaled(&terms[pos..], &c, &mult, &g.v.terms);
                    terms.truncate(pos);
                    terms.extend(tail);
                }
                None => pos += 1,
            }
        }
        self.ord.monic(&Vector { terms })
    }

    /// Remainder without normalizing the leading coefficient.
    pub fn remainder(&self, v: &Vector) -> Vector {
        let f = self.ord.field();
        let mut terms = v.terms.clone();
        let mut pos = 0;
        while pos < terms.len() {
            let t = &terms[pos];
            match self.find_divisor(&t.exp, t.comp) {
                Some(k) => {
                    let g = &self.elems[k];
                    let c = f.neg(&t.coeff);
                    let mult = exp_sub(&t.exp, &g.lt);
                    let tail = self.ord.add_scaled(&terms[pos..], &c, &mult, &g.v.terms);
                    terms.truncate(pos);
                    terms.extend(tail);
                }
                None => pos += 1,
            }
        }
        Vector { terms }
    }

    fn insert(&mut self, h: Vector) {
        let lead = h.lead().expect("nonzero").clone();
        let k = self.elems.len();
        self.elems.push(Elem {
            lt: lead.exp.clone(),
            comp: lead.comp,
            mask: support_mask(&lead.exp),
            v: h,
            active: true,
        });
        let hlt = lead.exp;
        let comp = lead.comp;
        let ord = self.ord.clone();

        // Gebauer–Möller update.
        let mut cands: Vec<Pair> = self
            .active
            .iter()
            .filter(|&&g| self.elems[g].comp == comp)
            .map(|&g| {
                let lcm = exp_lcm(&hlt, &self.elems[g].lt);
                let deg = ord.term_degree(&lcm, comp);
                Pair { i: g, j: k, lcm, comp, deg, seq: 0 }
            })
            .collect();
        let coprime = |p: &Pair, elems: &[Elem]| exp_coprime(&hlt, &elems[p.i].lt);
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = cands.pop() {
            let dominated = cands.iter().chain(kept.iter()).any(|q| exp_divides(&q.lcm, &p.lcm));
            if (self.product_criterion && coprime(&p, &self.elems)) || !dominated {
                kept.push(p);
            }
        }
        if self.product_criterion {
            kept.retain(|p| !coprime(p, &self.elems));
        }
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if p.comp != comp || !exp_divides(&hlt, &p.lcm) {
                return true;
            }
            let l1 = exp_lcm(&elems[p.i].lt, &hlt);
            let l2 = exp_lcm(&elems[p.j].lt, &hlt);
            l1 == p.lcm || l2 == p.lcm
        });
        kept.sort_by_key(|a| a.i);
        for mut p in kept {
            self.seq += 1;
            p.seq = self.seq;
            self.pairs.push(p);
        }
        for &g in &self.active {
            let e = &self.elems[g];
            if e.comp == comp && exp_divides(&hlt, &e.lt) {
                self.elems[g].active = false;
            }
        }
        self.active.retain(|&g| self.elems[g].active);
        self.active.push(k);
    }

    /// Leading monomials (exponent, component) of the current minimal basis.
    pub fn leading_monomials(&self) -> Vec<(Exp, u32)> {
        self.active.iter().map(|&k| (self.elems[k].lt.clone(), self.elems[k].comp)).collect()
    }

    /// Reduced basis: monic, tails reduced, sorted by degree then descending lead.
    pub fn reduced_basis(&mut self) -> Vec<Vector> {
        self.complete();
        let mut out = Vec::with_capacity(self.active.len());
        for &k in &self.active {
            let e = &self.elems[k];
            let head = e.v.terms[0].clone();
            let mut terms = vec![head.clone()];
            let tail = Vector { terms: e.v.terms[1..].to_vec() };
            terms.extend(self.remainder(&tail).terms);
            out.push(self.ord.monic(&Vector { terms }));
        }
        let ord = &self.ord;
        out.sort_by(|a, b| {
            let (ta, tb) = (&a.terms[0], &b.terms[0]);
            ord.term_degree(&ta.exp, ta.comp)
                .cmp(&ord.term_degree(&tb.exp, tb.comp))
                .then_with(|| ord.cmp(&tb.exp, tb.comp, &ta.exp, ta.comp))
        });
        out
    }

    /// Current basis elements (not necessarily reduced), active ones only.
    pub fn basis(&self) -> Vec<Vector> {
        self.active.iter().map(|&k| self.elems[k].v.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_order_puts_top_components_first() {
        let r = PolyRingDesc::rational(&["x", "y"]);
        let ord = ModuleOrder::with_block(r.clone(), vec![0, 5], 1);
        let low: Exp = [0, 0].into_iter().collect();
        let high: Exp = [3, 0].into_iter().collect();
        assert_eq!(ord.cmp(&low, 0, &high, 1), Ordering::Greater);
    }

    #[test]
    fn add_scaled_cancels() {
        let r = PolyRingDesc::rational(&["x", "y"]);
        let ord = ModuleOrder::new(r.clone(), vec![0, 0]);
        let v = ord.from_entries(&[r.var(0), r.var(1)], 0);
        let m1 = r.field.from_i64(-1);
        let z = ord.add_scaled(&v.terms, &m1, &r.zero_exp(), &v.terms);
        assert!(z.is_empty());
    }
}
