//! Sparse multivariate polynomials over a [`CoefficientField`].
//!
//! A [`Polynomial`] only stores its terms; every operation takes the
//! [`PolyRingDesc`] that fixes the field, variable names, grading and
//! monomial order.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{Coeff, CoefficientField};

/// Exponent vector, one entry per variable.
pub type Exp = SmallVec<[u16; 8]>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    Lex,
    GradedLex,
    GradedReverseLex,
}

impl MonomialOrder {
    pub fn keyword(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GradedLex => "grlex",
            MonomialOrder::GradedReverseLex => "grevlex",
        }
    }
}

/// Ambient polynomial ring: field, ordered variables, monomial order and
/// positive integer variable weights (all 1 for the standard grading).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRingDesc {
    pub field: CoefficientField,
    pub variables: Vec<String>,
    pub order: MonomialOrder,
    pub weights: Vec<u32>,
}

impl PolyRingDesc {
    pub fn new(
        field: CoefficientField,
        variables: Vec<String>,
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let weights = vec![1; variables.len()];
        Self::with_weights(field, variables, order, weights)
    }

    pub fn with_weights(
        field: CoefficientField,
        variables: Vec<String>,
        order: MonomialOrder,
        weights: Vec<u32>,
    ) -> Result<Arc<Self>> {
        if let CoefficientField::Prime(p) = field {
            CoefficientField::prime(p as u64)?;
        }
        if weights.len() != variables.len() {
            return Err(Error::InvalidRing("one weight per variable required".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidRing("variable weights must be positive".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRingDesc { field, variables, order, weights }))
    }

    /// Standard-graded `Q[vars]` with grevlex; convenient in tests.
    pub fn rational(vars: &[&str]) -> Arc<Self> {
        Self::new(
            CoefficientField::Rationals,
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::GradedReverseLex,
        )
        .expect("valid variable list")
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn zero_exp(&self) -> Exp {
        SmallVec::from_elem(0, self.nvars())
    }

    pub fn exp_degree(&self, e: &[u16]) -> i64 {
        e.iter().zip(&self.weights).map(|(&a, &w)| a as i64 * w as i64).sum()
    }

    /// Monomial order comparison (`Greater` means `a` is the larger monomial).
    pub fn cmp_exp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self.order {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GradedLex => self
                .exp_degree(a)
                .cmp(&self.exp_degree(b))
                .then_with(|| a.cmp(b)),
            MonomialOrder::GradedReverseLex => {
                self.exp_degree(a).cmp(&self.exp_degree(b)).then_with(|| {
                    for i in (0..a.len()).rev() {
                        if a[i] != b[i] {
                            return b[i].cmp(&a[i]);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        if self.field.is_zero(&c) {
            return self.zero();
        }
        Polynomial { terms: vec![(self.zero_exp(), c)] }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        let mut e = self.zero_exp();
        e[i] = 1;
        Polynomial { terms: vec![(e, self.field.one())] }
    }

    pub fn monomial(&self, exp: Exp, c: Coeff) -> Polynomial {
        debug_assert_eq!(exp.len(), self.nvars());
        if self.field.is_zero(&c) {
            return self.zero();
        }
        Polynomial { terms: vec![(exp, c)] }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges, drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Exp, Coeff)>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp_exp(&b.0, &a.0));
        let mut out: Vec<(Exp, Coeff)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = self.field.add(lc, &c),
                _ => out.push((e, c)),
            }
            if let Some((_, lc)) = out.last() {
                if self.field.is_zero(lc) {
                    out.pop();
                }
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Polynomial { terms: out }
    }

    fn merge(&self, a: &Polynomial, b: &Polynomial, negate_b: bool) -> Polynomial {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() || j < b.terms.len() {
            let ord = if i == a.terms.len() {
                Ordering::Less
            } else if j == b.terms.len() {
                Ordering::Greater
            } else {
                self.cmp_exp(&a.terms[i].0, &b.terms[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (e, c) = &b.terms[j];
                    out.push((e.clone(), if negate_b { f.neg(c) } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b {
                        f.sub(&a.terms[i].1, &b.terms[j].1)
                    } else {
                        f.add(&a.terms[i].1, &b.terms[j].1)
                    };
                    if !f.is_zero(&c) {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.merge(a, b, false)
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.merge(a, b, true)
    }

    pub fn neg(&self, a: &Polynomial) -> Polynomial {
        Polynomial {
            terms: a.terms.iter().map(|(e, c)| (e.clone(), self.field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, a: &Polynomial, c: &Coeff) -> Polynomial {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Polynomial {
            terms: a.terms.iter().map(|(e, x)| (e.clone(), self.field.mul(x, c))).collect(),
        }
    }

    /// `c * x^exp * a`; order-preserving, so no re-sort is needed.
    pub fn mul_term(&self, a: &Polynomial, exp: &[u16], c: &Coeff) -> Polynomial {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(e, x)| (exp_add(e, exp), self.field.mul(x, c)))
                .collect(),
        }
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut acc = self.zero();
        for (e, c) in &b.terms {
            acc = self.add(&acc, &self.mul_term(a, e, c));
        }
        acc
    }

    pub fn pow(&self, a: &Polynomial, k: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self, a: &Polynomial) -> Option<i64> {
        let d = self.exp_degree(&a.terms.first()?.0);
        a.terms.iter().all(|(e, _)| self.exp_degree(e) == d).then_some(d)
    }

    pub fn is_homogeneous(&self, a: &Polynomial) -> bool {
        a.is_zero() || self.homogeneous_degree(a).is_some()
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self, a: &Polynomial) -> Polynomial {
        match a.terms.first() {
            Some((_, c)) => self.scale(a, &self.field.inv(c).expect("nonzero")),
            None => self.zero(),
        }
    }

    /// Substitutes `1` for every variable outside `keep`, returning a polynomial
    /// over `target` whose variables are the kept ones in order.
    pub fn restrict_to(&self, a: &Polynomial, keep: &[usize], target: &PolyRingDesc) -> Polynomial {
        let terms = a
            .terms
            .iter()
            .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect::<Exp>(), c.clone()))
            .collect();
        target.from_terms(terms)
    }

    pub fn format(&self, a: &Polynomial) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in a.terms.iter().enumerate() {
            let neg = self.field.is_negative(c);
            let abs = if neg { self.field.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.format_monomial(e);
            if mono.is_empty() {
                s.push_str(&self.field.format(&abs));
            } else if self.field.is_one(&abs) {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{}*{}", self.field.format(&abs), mono);
            }
        }
        s
    }

    pub fn format_monomial(&self, e: &[u16]) -> String {
        let mut parts = Vec::new();
        for (i, &a) in e.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(self.variables[i].clone()),
                _ => parts.push(format!("{}^{}", self.variables[i], a)),
            }
        }
        parts.join("*")
    }
}

pub fn exp_add(a: &[u16], b: &[u16]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn exp_divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn exp_sub(a: &[u16], b: &[u16]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn exp_lcm(a: &[u16], b: &[u16]) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn exp_coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Sparse polynomial: terms strictly descending in the ring's order, no zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    pub(crate) terms: Vec<(Exp, Coeff)>,
}

impl Polynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Exp, Coeff)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&(Exp, Coeff)> {
        self.terms.first()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&a| a == 0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u16]) -> Exp {
        v.iter().copied().collect()
    }

    #[test]
    fn grevlex_orders_by_degree_then_reverse() {
        let r = PolyRingDesc::rational(&["x", "y", "z"]);
        assert_eq!(r.cmp_exp(&e(&[1, 0, 0]), &e(&[0, 1, 0])), Ordering::Greater);
        // x*z < y^2 in grevlex
        assert_eq!(r.cmp_exp(&e(&[1, 0, 1]), &e(&[0, 2, 0])), Ordering::Less);
        assert_eq!(r.cmp_exp(&e(&[0, 0, 2]), &e(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn weighted_degree() {
        let r = PolyRingDesc::with_weights(
            CoefficientField::Rationals,
            vec!["x".into(), "y".into(), "z".into()],
            MonomialOrder::GradedReverseLex,
            vec![3, 4, 5],
        )
        .unwrap();
        let x = r.var(0);
        let yz = r.mul(&r.var(1), &r.var(2));
        let f = r.sub(&r.pow(&x, 3), &yz);
        assert_eq!(r.homogeneous_degree(&f), Some(9));
    }

    #[test]
    fn arithmetic_and_format() {
        let r = PolyRingDesc::rational(&["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let s = r.add(&x, &y);
        let cube = r.pow(&s, 3);
        assert_eq!(r.format(&cube), "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
        assert!(r.sub(&cube, &cube).is_zero());
        assert!(!r.is_homogeneous(&r.add(&x, &r.one())));
        assert_eq!(r.format(&r.neg(&r.sub(&x, &y))), "-x + y");
    }

    #[test]
    fn rejects_duplicate_variables() {
        let bad = PolyRingDesc::new(
            CoefficientField::Rationals,
            vec!["x".into(), "x".into()],
            MonomialOrder::Lex,
        );
        assert!(bad.is_err());
    }
}
