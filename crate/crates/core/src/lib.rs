//! Graded commutative algebra over fields: polynomial rings and their
//! quotients, finitely presented modules, free resolutions, Ext and Tor,
//! and homological invariants.

pub mod error;
pub mod field;
pub mod generate;
pub mod gb;
pub mod homalg;
pub mod ideal;
pub mod invariants;
pub mod localize;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod resolve;
pub mod theorems;
pub mod ring;

pub use error::{Error, Result};
pub use field::{Coeff, CoefficientField, Rat};
pub use homalg::{CertificateKind, DerivedFunctorResult, Functor, VanishingCertificate};
pub use ideal::{GroebnerBasis, HomogeneousIdeal};
pub use invariants::{Certainty, CertifiedValue, InvariantReport};
pub use matrix::Matrix;
pub use module::{PresentedModule, SupportRelation};
pub use poly::{MonomialOrder, PolyRingDesc, Polynomial};
pub use resolve::{BettiEntry, BettiTable, FreeResolution, PdResult, RingTag};
pub use ring::QuotientRing;
pub use theorems::{CheckParams, Hypothesis, StatementId, Status, TheoremVerdict};
pub use generate::{CampaignSummary, GeneratorParams, IdealStyle};
