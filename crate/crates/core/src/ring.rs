//! Graded quotient rings `R = S / I` of a polynomial ring `S`.

use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ideal::{groebner_basis, monomial_dimension, reduce_poly};
use crate::poly::{PolyRingDesc, Polynomial};

/// `S / I`, with `I` stored as its reduced Gröbner basis.
#[derive(Debug)]
pub struct QuotientRing {
    ambient: Arc<PolyRingDesc>,
    defining: Vec<Polynomial>,
    fingerprint: String,
    dim: OnceLock<i64>,
    pub(crate) depth: OnceLock<i64>,
    polynomial_ring: OnceLock<Arc<QuotientRing>>,
}

impl QuotientRing {
    /// The polynomial ring itself (`I = 0`).
    pub fn polynomial(ambient: Arc<PolyRingDesc>) -> Arc<Self> {
        Arc::new(Self::build(ambient, Vec::new()))
    }

    /// `S / (gens)`; generators must be homogeneous.
    pub fn new(ambient: Arc<PolyRingDesc>, gens: &[Polynomial]) -> Result<Arc<Self>> {
        let gb = groebner_basis(&ambient, gens)?;
        Ok(Arc::new(Self::build(ambient, gb.elements)))
    }

    fn build(ambient: Arc<PolyRingDesc>, defining: Vec<Polynomial>) -> Self {
        let mut h = Sha256::new();
        h.update(format!(
            "{}|{}|{}|{:?}|",
            ambient.field,
            ambient.variables.join(","),
            ambient.order.keyword(),
            ambient.weights
        ));
        for g in &defining {
            h.update(ambient.format(g));
            h.update(";");
        }
        QuotientRing {
            ambient,
            defining,
            fingerprint: hex::encode(h.finalize()),
            dim: OnceLock::new(),
            depth: OnceLock::new(),
            polynomial_ring: OnceLock::new(),
        }
    }

    pub fn ambient(&self) -> &Arc<PolyRingDesc> {
        &self.ambient
    }

    /// Reduced Gröbner basis of the defining ideal.
    pub fn defining(&self) -> &[Polynomial] {
        &self.defining
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.defining.is_empty()
    }

    /// `I = (1)`.
    pub fn is_zero_ring(&self) -> bool {
        self.defining.iter().any(|g| g.is_unit())
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn same_ring(&self, other: &QuotientRing) -> bool {
        std::ptr::eq(self, other) || self.fingerprint == other.fingerprint
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    /// Normal form modulo the defining ideal.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        if self.defining.is_empty() {
            return f.clone();
        }
        reduce_poly(&self.ambient, f, &self.defining)
    }

    /// Krull dimension of `R` (`-1` for the zero ring).
    pub fn dim(&self) -> i64 {
        *self.dim.get_or_init(|| {
            let lts: Vec<_> = self.defining.iter().map(|g| g.terms()[0].0.clone()).collect();
            monomial_dimension(self.nvars(), &lts)
        })
    }

    /// The ambient polynomial ring as a ring object.
    pub fn polynomial_ring(self: &Arc<Self>) -> Arc<QuotientRing> {
        if self.is_polynomial_ring() {
            return self.clone();
        }
        self.polynomial_ring
            .get_or_init(|| QuotientRing::polynomial(self.ambient.clone()))
            .clone()
    }

    pub fn check_same(&self, other: &QuotientRing) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Human-readable description, e.g. `Q[x,y]/(x*y)`.
    pub fn describe(&self) -> String {
        let base = format!("{}[{}]", self.ambient.field, self.ambient.variables.join(","));
        if self.defining.is_empty() {
            return base;
        }
        let gens: Vec<String> = self.defining.iter().map(|g| self.ambient.format(g)).collect();
        format!("{base}/({})", gens.join(", "))
    }
}
