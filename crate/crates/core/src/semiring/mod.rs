//! Semirings: the abstraction, the Boolean, tropical and Łukasiewicz instances,
//! runtime selection by name, and the axiom suite.

mod dynamic;
mod instances;
mod laws;

use std::fmt;
use std::hash::Hash;

use rand::Rng;

pub use dynamic::{SemiringKind, SortError, UnknownSemiring, Value};
pub use instances::{Boolean, Lukasiewicz, SaturatingSub, Tropical};
pub use laws::check_semiring_axioms;

/// Static description of a semiring instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemiringSpec {
    pub name: &'static str,
    pub carrier: &'static str,
    pub idempotent: bool,
    pub complete: bool,
}

/// A weight literal that does not denote an element of the carrier.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid {semiring} literal `{literal}`: {reason}")]
pub struct LiteralError {
    pub semiring: &'static str,
    pub literal: String,
    pub reason: &'static str,
}

/// A semiring `(S, +, ·, 1, 0)` with exact equality on its carrier.
///
/// Every instance also carries a value generator so the law suites can sample
/// it reproducibly, and a literal parser used by model files.
pub trait Semiring: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const NAME: &'static str;
    const CARRIER: &'static str;
    const IDEMPOTENT: bool;
    const COMPLETE: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    /// Draws a value from the instance's sampling grid.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn parse_literal(text: &str) -> Result<Self, LiteralError>;

    fn spec() -> SemiringSpec {
        SemiringSpec {
            name: Self::NAME,
            carrier: Self::CARRIER,
            idempotent: Self::IDEMPOTENT,
            complete: Self::COMPLETE,
        }
    }

    /// `x ≼ y`, computed as `x + y = y`; only meaningful for idempotent instances.
    fn natural_le(&self, other: &Self) -> bool {
        self.add(other) == *other
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn big_sum<'a, I>(xs: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        xs.into_iter().fold(Self::zero(), |acc, x| acc.add(x))
    }
}

/// Free-function forms, convenient where method syntax reads badly.
pub fn add<S: Semiring>(x: &S, y: &S) -> S {
    x.add(y)
}

pub fn mul<S: Semiring>(x: &S, y: &S) -> S {
    x.mul(y)
}

pub fn natural_le<S: Semiring>(x: &S, y: &S) -> bool {
    x.natural_le(y)
}

pub fn big_sum<'a, S: Semiring>(xs: impl IntoIterator<Item = &'a S>) -> S {
    S::big_sum(xs)
}
