//! Kleene algebra with weights and tests.
//!
//! Weighted regular programs are parsed against a three-sorted signature and
//! interpreted two ways: as semiring-valued relations over a finite transition
//! system ([`relational`]) and as unambiguous sets of weighted guarded strings
//! ([`guarded`]). [`psg`] builds the generic function algebra over a partial
//! semigroup, and [`equivalence`] compares programs, optionally under `e = 0`
//! hypotheses.

pub mod equivalence;
pub mod guarded;
mod kleene_laws;
pub mod psg;
pub mod relational;
pub mod report;
pub mod sampling;
pub mod semiring;
pub mod syntax;

pub use report::Report;
pub use semiring::{Boolean, Lukasiewicz, Semiring, SemiringKind, Tropical, Value};
