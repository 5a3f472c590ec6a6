use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{LiteralError, Semiring};

/// Two-element Boolean semiring: `or`, `and`, 1, 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Boolean(pub bool);

impl fmt::Display for Boolean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl Semiring for Boolean {
    const NAME: &'static str = "bool";
    const CARRIER: &'static str = "{0, 1}";
    const IDEMPOTENT: bool = true;
    const COMPLETE: bool = true;

    fn zero() -> Self {
        Boolean(false)
    }
    fn one() -> Self {
        Boolean(true)
    }
    fn add(&self, rhs: &Self) -> Self {
        Boolean(self.0 || rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Boolean(self.0 && rhs.0)
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Boolean(rng.gen())
    }
    fn parse_literal(text: &str) -> Result<Self, LiteralError> {
        match text {
            "0" => Ok(Boolean(false)),
            "1" => Ok(Boolean(true)),
            _ => Err(LiteralError {
                semiring: Self::NAME,
                literal: text.to_string(),
                reason: "expected 0 or 1",
            }),
        }
    }
}

/// Extended naturals `ℕ ∪ {∞}` under `(min, +, 0, ∞)`.
///
/// `Infinity` is its own constructor; finite sums that overflow `u64` panic
/// rather than alias it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tropical {
    Finite(u64),
    Infinity,
}

impl Tropical {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Tropical::Finite(n) => Some(*n),
            Tropical::Infinity => None,
        }
    }

    fn parse_nat_inf(name: &'static str, text: &str) -> Result<Self, LiteralError> {
        match text {
            "inf" | "∞" => Ok(Tropical::Infinity),
            _ => text.parse::<u64>().map(Tropical::Finite).map_err(|_| LiteralError {
                semiring: name,
                literal: text.to_string(),
                reason: "expected a natural number or `inf`",
            }),
        }
    }

    fn sample_grid<R: Rng + ?Sized>(rng: &mut R) -> Self {
        // ℕ ∩ [0, 100] ∪ {∞}; ∞ drawn one time in eight.
        if rng.gen_ratio(1, 8) {
            Tropical::Infinity
        } else {
            Tropical::Finite(rng.gen_range(0..=100))
        }
    }

    fn min(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Tropical::Infinity, x) | (x, Tropical::Infinity) => *x,
            (Tropical::Finite(a), Tropical::Finite(b)) => Tropical::Finite(*a.min(b)),
        }
    }
}

impl From<u64> for Tropical {
    fn from(n: u64) -> Self {
        Tropical::Finite(n)
    }
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tropical::Finite(n) => write!(f, "{n}"),
            Tropical::Infinity => f.write_str("inf"),
        }
    }
}

impl Semiring for Tropical {
    const NAME: &'static str = "tropical";
    const CARRIER: &'static str = "N ∪ {inf}";
    const IDEMPOTENT: bool = true;
    const COMPLETE: bool = true;

    fn zero() -> Self {
        Tropical::Infinity
    }
    fn one() -> Self {
        Tropical::Finite(0)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.min(rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Tropical::Finite(a), Tropical::Finite(b)) => {
                Tropical::Finite(a.checked_add(*b).expect("tropical weight overflow"))
            }
            _ => Tropical::Infinity,
        }
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::sample_grid(rng)
    }
    fn parse_literal(text: &str) -> Result<Self, LiteralError> {
        Self::parse_nat_inf(Self::NAME, text)
    }
}

/// Exact rationals in `[0, 1]` under `(max, ⊗, 1, 0)` with the Łukasiewicz
/// t-norm `x ⊗ y = max{0, x + y − 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lukasiewicz(BigRational);

impl Lukasiewicz {
    /// Returns `None` outside the unit interval.
    pub fn new(value: BigRational) -> Option<Self> {
        if value.is_negative() || value > BigRational::one() {
            None
        } else {
            Some(Lukasiewicz(value))
        }
    }

    /// `numer / denom`; panics if the value is not in `[0, 1]` or `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::new(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
            .expect("Łukasiewicz value outside [0, 1]")
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for Lukasiewicz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Semiring for Lukasiewicz {
    const NAME: &'static str = "lukasiewicz";
    const CARRIER: &'static str = "Q ∩ [0, 1]";
    const IDEMPOTENT: bool = true;
    const COMPLETE: bool = true;

    fn zero() -> Self {
        Lukasiewicz(BigRational::zero())
    }
    fn one() -> Self {
        Lukasiewicz(BigRational::one())
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.0 >= rhs.0 {
            self.clone()
        } else {
            rhs.clone()
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let t = &self.0 + &rhs.0 - BigRational::one();
        if t.is_positive() {
            Lukasiewicz(t)
        } else {
            Self::zero()
        }
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::ratio(rng.gen_range(0..=32), 32)
    }
    fn parse_literal(text: &str) -> Result<Self, LiteralError> {
        let err = |reason| LiteralError {
            semiring: Self::NAME,
            literal: text.to_string(),
            reason,
        };
        let (n, d) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err("expected `p/q` or an integer"))?;
        let d: BigInt = d.parse().map_err(|_| err("expected `p/q` or an integer"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        Self::new(BigRational::new(n, d)).ok_or_else(|| err("value outside [0, 1]"))
    }
}

/// Deliberately broken instance: `min` as addition and saturating subtraction
/// as multiplication. Used only to show that the law suites catch violations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SaturatingSub(pub Tropical);

impl fmt::Display for SaturatingSub {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Semiring for SaturatingSub {
    const NAME: &'static str = "mutant-saturating-sub";
    const CARRIER: &'static str = "N ∪ {inf}";
    const IDEMPOTENT: bool = true;
    const COMPLETE: bool = true;

    fn zero() -> Self {
        SaturatingSub(Tropical::Infinity)
    }
    fn one() -> Self {
        SaturatingSub(Tropical::Finite(0))
    }
    fn add(&self, rhs: &Self) -> Self {
        SaturatingSub(self.0.min(&rhs.0))
    }
    fn mul(&self, rhs: &Self) -> Self {
        use Tropical::*;
        SaturatingSub(match (self.0, rhs.0) {
            (Finite(a), Finite(b)) => Finite(a.saturating_sub(b)),
            (Infinity, Finite(_)) => Infinity,
            (_, Infinity) => Finite(0),
        })
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        SaturatingSub(Tropical::sample_grid(rng))
    }
    fn parse_literal(text: &str) -> Result<Self, LiteralError> {
        Tropical::parse_nat_inf(Self::NAME, text).map(SaturatingSub)
    }
}
