//! Homogeneous ideals of a polynomial ring: Gröbner bases, normal forms,
//! Krull dimension, quotients, intersections and radical membership.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gb::{GbEngine, ModuleOrder};
use crate::matrix::{syzygies, Matrix};
use crate::poly::{exp_divides, exp_sub, Exp, PolyRingDesc, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousIdeal {
    pub ring: Arc<PolyRingDesc>,
    pub generators: Vec<Polynomial>,
}

impl HomogeneousIdeal {
    /// Zero generators are dropped; inhomogeneous ones are rejected.
    pub fn new(ring: Arc<PolyRingDesc>, generators: Vec<Polynomial>) -> Result<Self> {
        check_homogeneous(&ring, &generators)?;
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(HomogeneousIdeal { ring, generators })
    }

    pub fn unit(ring: Arc<PolyRingDesc>) -> Self {
        let one = ring.one();
        HomogeneousIdeal { ring, generators: vec![one] }
    }

    pub fn groebner(&self) -> GroebnerBasis {
        groebner_basis(&self.ring, &self.generators).expect("validated on construction")
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        reduce_poly(&self.ring, f, &self.groebner().elements).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().elements.iter().any(|g| g.is_unit())
    }

    /// Equality as ideals (equal reduced Gröbner bases).
    pub fn same_ideal(&self, other: &HomogeneousIdeal) -> bool {
        self.groebner().elements == other.groebner().elements
    }

    pub fn sum(&self, other: &HomogeneousIdeal) -> HomogeneousIdeal {
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        HomogeneousIdeal { ring: self.ring.clone(), generators }
    }

    pub fn format(&self) -> String {
        let g: Vec<String> = self.generators.iter().map(|p| self.ring.format(p)).collect();
        format!("({})", g.join(", "))
    }
}

/// Reduced Gröbner basis of an ideal, sorted by degree then descending leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub ring: Arc<PolyRingDesc>,
    pub elements: Vec<Polynomial>,
    pub reduced: bool,
}

fn check_homogeneous(ring: &PolyRingDesc, gens: &[Polynomial]) -> Result<()> {
    for (index, g) in gens.iter().enumerate() {
        if g.terms().iter().any(|(e, _)| e.len() != ring.nvars()) {
            return Err(Error::RingMismatch);
        }
        if !ring.is_homogeneous(g) {
            return Err(Error::Inhomogeneous { index });
        }
    }
    Ok(())
}

/// Reduced Gröbner basis in the ring's monomial order.
pub fn groebner_basis(ring: &Arc<PolyRingDesc>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    check_homogeneous(ring, gens)?;
    let ord = ModuleOrder::new(ring.clone(), vec![0]);
    let mut eng = GbEngine::new(ord.clone());
    for g in gens {
        eng.add(ord.from_entries(std::slice::from_ref(g), 0));
    }
    let elements = eng
        .reduced_basis()
        .into_iter()
        .map(|v| ord.entries(&v, 0, 1).pop().expect("one entry"))
        .collect();
    Ok(GroebnerBasis { ring: ring.clone(), elements, reduced: true })
}

/// Remainder of `f` on division by a monic Gröbner basis.
pub fn reduce_poly(ring: &PolyRingDesc, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let fld = &ring.field;
    let mut rem: Vec<(Exp, crate::field::Coeff)> = Vec::new();
    let mut p = f.clone();
    while let Some((e, c)) = p.leading().cloned() {
        match basis.iter().find(|g| exp_divides(&g.terms()[0].0, &e)) {
            Some(g) => {
                let (ge, gc) = &g.terms()[0];
                let q = fld.div(&c, gc).expect("nonzero leading coefficient");
                p = ring.sub(&p, &ring.mul_term(g, &exp_sub(&e, ge), &q));
            }
            None => {
                rem.push((e, c));
                p.terms.remove(0);
            }
        }
    }
    Polynomial { terms: rem }
}

/// Unique remainder of `f` modulo the ideal with basis `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if f.terms().iter().any(|(e, _)| e.len() != gb.ring.nvars()) {
        return Err(Error::RingMismatch);
    }
    Ok(reduce_poly(&gb.ring, f, &gb.elements))
}

/// Dimension of `S / (monomials)`: largest set of variables containing the
/// support of no generator. `-1` when a generator is constant.
pub fn monomial_dimension(nvars: usize, lts: &[Exp]) -> i64 {
    if lts.iter().any(|e| e.iter().all(|&a| a == 0)) {
        return -1;
    }
    let masks: Vec<u64> = lts
        .iter()
        .map(|e| e.iter().enumerate().filter(|(_, &a)| a > 0).fold(0, |m, (i, _)| m | 1 << i))
        .collect();
    let mut best = 0;
    for subset in 0u64..(1u64 << nvars) {
        let size = subset.count_ones() as i64;
        if size > best && masks.iter().all(|&m| m & !subset != 0) {
            best = size;
        }
    }
    best
}

/// Krull dimension of `S / I`; `-1` for the unit ideal.
pub fn krull_dimension(ideal: &HomogeneousIdeal) -> i64 {
    let gb = ideal.groebner();
    let lts: Vec<Exp> = gb.elements.iter().map(|g| g.terms()[0].0.clone()).collect();
    monomial_dimension(ideal.ring.nvars(), &lts)
}

fn first_coordinates(ring: &Arc<PolyRingDesc>, m: &Matrix) -> Result<HomogeneousIdeal> {
    let k = syzygies(ring, m)?;
    let gens: Vec<Polynomial> = k.columns.iter().map(|c| c[0].clone()).filter(|p| !p.is_zero()).collect();
    let gb = groebner_basis(ring, &gens)?;
    HomogeneousIdeal::new(ring.clone(), gb.elements)
}

/// `(I : f) = { g | g f ∈ I }`.
pub fn ideal_quotient(ideal: &HomogeneousIdeal, f: &Polynomial) -> Result<HomogeneousIdeal> {
    let ring = &ideal.ring;
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    check_homogeneous(ring, std::slice::from_ref(f))?;
    let mut row = vec![f.clone()];
    row.extend(ideal.generators.iter().cloned());
    let m = Matrix::from_rows(ring, vec![row], vec![0])?;
    first_coordinates(ring, &m)
}

/// `I ∩ J`, as the first coordinates of the kernel of `[[1, I, 0], [1, 0, J]]`.
pub fn intersect(a: &HomogeneousIdeal, b: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
    let ring = &a.ring;
    let (zero, one) = (ring.zero(), ring.one());
    let mut top = vec![one.clone()];
    let mut bottom = vec![one];
    for g in &a.generators {
        top.push(g.clone());
        bottom.push(zero.clone());
    }
    for g in &b.generators {
        top.push(zero.clone());
        bottom.push(g.clone());
    }
    let m = Matrix::from_rows(ring, vec![top, bottom], vec![0, 0])?;
    first_coordinates(ring, &m)
}

/// `(I : f^∞)`, by iterating ideal quotients until they stabilize.
pub fn saturation(ideal: &HomogeneousIdeal, f: &Polynomial) -> Result<HomogeneousIdeal> {
    let mut cur = HomogeneousIdeal::new(ideal.ring.clone(), ideal.groebner().elements)?;
    loop {
        let next = ideal_quotient(&cur, f)?;
        if next.same_ideal(&cur) {
            return Ok(next);
        }
        cur = next;
    }
}

/// `f ∈ √I`, decided by `(I : f^∞) = (1)`.
pub fn radical_membership(f: &Polynomial, ideal: &HomogeneousIdeal) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    Ok(saturation(ideal, f)?.is_unit())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qxy() -> Arc<PolyRingDesc> {
        PolyRingDesc::rational(&["x", "y"])
    }

    fn ideal(r: &Arc<PolyRingDesc>, g: Vec<Polynomial>) -> HomogeneousIdeal {
        HomogeneousIdeal::new(r.clone(), g).unwrap()
    }

    #[test]
    fn groebner_examples() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        let xy = r.mul(&x, &y);
        let y2 = r.mul(&y, &y);
        let x2 = r.mul(&x, &x);
        // Frozen from an independent CAS run: {x^2, x*y - y^2, y^3}.
        let gb = groebner_basis(&r, &[r.sub(&xy, &y2), x2.clone()]).unwrap();
        let printed: Vec<String> = gb.elements.iter().map(|g| r.format(g)).collect();
        assert_eq!(printed, vec!["x^2", "x*y - y^2", "y^3"]);
        assert_eq!(groebner_basis(&r, std::slice::from_ref(&x)).unwrap().elements, vec![x.clone()]);
        assert!(groebner_basis(&r, &[]).unwrap().elements.is_empty());
        let bad = groebner_basis(&r, &[x.clone(), r.add(&x, &x2)]);
        assert_eq!(bad, Err(Error::Inhomogeneous { index: 1 }));
    }

    #[test]
    fn normal_form_examples() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        let gx = groebner_basis(&r, std::slice::from_ref(&x)).unwrap();
        assert!(normal_form(&r.mul(&x, &x), &gx).unwrap().is_zero());
        assert_eq!(normal_form(&y, &gx).unwrap(), y);
        let xy = r.mul(&x, &y);
        let y2 = r.mul(&y, &y);
        let gb = groebner_basis(&r, &[r.mul(&x, &x), r.sub(&xy, &y2)]).unwrap();
        let nf = normal_form(&r.add(&xy, &y2), &gb).unwrap();
        assert_eq!(r.format(&nf), "2*y^2");
    }

    #[test]
    fn dimension_examples() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        assert_eq!(krull_dimension(&ideal(&r, vec![x.clone()])), 1);
        assert_eq!(krull_dimension(&ideal(&r, vec![])), 2);
        assert_eq!(krull_dimension(&ideal(&r, vec![r.mul(&x, &x), r.mul(&x, &y)])), 1);
        assert_eq!(krull_dimension(&HomogeneousIdeal::unit(r.clone())), -1);
    }

    #[test]
    fn radical_examples() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        let x2 = ideal(&r, vec![r.mul(&x, &x)]);
        assert!(radical_membership(&x, &x2).unwrap());
        assert!(!radical_membership(&y, &x2).unwrap());
        let sq = ideal(&r, vec![r.mul(&x, &x), r.mul(&y, &y)]);
        assert!(radical_membership(&r.add(&x, &y), &sq).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        let q = ideal_quotient(&ideal(&r, vec![r.mul(&x, &y)]), &x).unwrap();
        assert!(q.same_ideal(&ideal(&r, vec![y.clone()])));
        assert!(ideal_quotient(&ideal(&r, vec![x.clone()]), &x).unwrap().is_unit());
        let q = ideal_quotient(&ideal(&r, vec![r.mul(&x, &x), r.mul(&x, &y)]), &x).unwrap();
        assert!(q.same_ideal(&ideal(&r, vec![x.clone(), y.clone()])));
        assert_eq!(ideal_quotient(&ideal(&r, vec![x.clone()]), &r.zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn intersection_of_coordinate_lines() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        let i = intersect(&ideal(&r, vec![x.clone()]), &ideal(&r, vec![y.clone()])).unwrap();
        assert!(i.same_ideal(&ideal(&r, vec![r.mul(&x, &y)])));
    }
}
