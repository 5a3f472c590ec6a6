use std::fmt;
use std::str::FromStr;

use super::{Boolean, LiteralError, Lukasiewicz, Semiring, SemiringSpec, Tropical};

/// The instances selectable by name from the CLI and model files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemiringKind {
    Bool,
    Tropical,
    Lukasiewicz,
}

impl SemiringKind {
    pub const ALL: [SemiringKind; 3] = [
        SemiringKind::Bool,
        SemiringKind::Tropical,
        SemiringKind::Lukasiewicz,
    ];

    pub fn name(self) -> &'static str {
        self.spec().name
    }

    pub fn spec(self) -> SemiringSpec {
        match self {
            SemiringKind::Bool => Boolean::spec(),
            SemiringKind::Tropical => Tropical::spec(),
            SemiringKind::Lukasiewicz => Lukasiewicz::spec(),
        }
    }

    pub fn zero(self) -> Value {
        match self {
            SemiringKind::Bool => Value::Bool(Boolean::zero()),
            SemiringKind::Tropical => Value::Tropical(Tropical::zero()),
            SemiringKind::Lukasiewicz => Value::Lukasiewicz(Lukasiewicz::zero()),
        }
    }

    pub fn one(self) -> Value {
        match self {
            SemiringKind::Bool => Value::Bool(Boolean::one()),
            SemiringKind::Tropical => Value::Tropical(Tropical::one()),
            SemiringKind::Lukasiewicz => Value::Lukasiewicz(Lukasiewicz::one()),
        }
    }

    pub fn parse_value(self, text: &str) -> Result<Value, LiteralError> {
        Ok(match self {
            SemiringKind::Bool => Value::Bool(Boolean::parse_literal(text)?),
            SemiringKind::Tropical => Value::Tropical(Tropical::parse_literal(text)?),
            SemiringKind::Lukasiewicz => Value::Lukasiewicz(Lukasiewicz::parse_literal(text)?),
        })
    }

    /// Sum of a finite multiset; the empty sum is this instance's zero.
    pub fn big_sum<'a>(self, xs: impl IntoIterator<Item = &'a Value>) -> Result<Value, SortError> {
        xs.into_iter().try_fold(self.zero(), |acc, x| acc.add(x))
    }
}

impl fmt::Display for SemiringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown semiring `{0}` (expected bool, tropical or lukasiewicz)")]
pub struct UnknownSemiring(pub String);

impl FromStr for SemiringKind {
    type Err = UnknownSemiring;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bool" => Ok(SemiringKind::Bool),
            "tropical" => Ok(SemiringKind::Tropical),
            "lukasiewicz" => Ok(SemiringKind::Lukasiewicz),
            _ => Err(UnknownSemiring(s.to_string())),
        }
    }
}

/// Operands drawn from two different instances.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("sort error: cannot combine a {left} value with a {right} value")]
pub struct SortError {
    pub left: SemiringKind,
    pub right: SemiringKind,
}

/// A semiring element tagged with its instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Bool(Boolean),
    Tropical(Tropical),
    Lukasiewicz(Lukasiewicz),
}

impl Value {
    pub fn kind(&self) -> SemiringKind {
        match self {
            Value::Bool(_) => SemiringKind::Bool,
            Value::Tropical(_) => SemiringKind::Tropical,
            Value::Lukasiewicz(_) => SemiringKind::Lukasiewicz,
        }
    }

    fn sort_error(&self, rhs: &Value) -> SortError {
        SortError {
            left: self.kind(),
            right: rhs.kind(),
        }
    }

    pub fn add(&self, rhs: &Value) -> Result<Value, SortError> {
        match (self, rhs) {
            (Value::Bool(a), Value::Bool(b)) => Ok(Value::Bool(a.add(b))),
            (Value::Tropical(a), Value::Tropical(b)) => Ok(Value::Tropical(a.add(b))),
            (Value::Lukasiewicz(a), Value::Lukasiewicz(b)) => Ok(Value::Lukasiewicz(a.add(b))),
            _ => Err(self.sort_error(rhs)),
        }
    }

    pub fn mul(&self, rhs: &Value) -> Result<Value, SortError> {
        match (self, rhs) {
            (Value::Bool(a), Value::Bool(b)) => Ok(Value::Bool(a.mul(b))),
            (Value::Tropical(a), Value::Tropical(b)) => Ok(Value::Tropical(a.mul(b))),
            (Value::Lukasiewicz(a), Value::Lukasiewicz(b)) => Ok(Value::Lukasiewicz(a.mul(b))),
            _ => Err(self.sort_error(rhs)),
        }
    }

    pub fn natural_le(&self, rhs: &Value) -> Result<bool, SortError> {
        Ok(self.add(rhs)? == *rhs)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(v) => v.fmt(f),
            Value::Tropical(v) => v.fmt(f),
            Value::Lukasiewicz(v) => v.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_operands_are_sort_errors() {
        let a = Value::Tropical(Tropical::Finite(3));
        let b = Value::Lukasiewicz(Lukasiewicz::ratio(1, 2));
        assert_eq!(
            a.add(&b),
            Err(SortError {
                left: SemiringKind::Tropical,
                right: SemiringKind::Lukasiewicz
            })
        );
        assert!(a.mul(&b).is_err());
        assert!(a.natural_le(&b).is_err());
    }

    #[test]
    fn names_round_trip() {
        for kind in SemiringKind::ALL {
            assert_eq!(kind.name().parse::<SemiringKind>().unwrap(), kind);
        }
        assert!("counting".parse::<SemiringKind>().is_err());
    }

    #[test]
    fn dynamic_sums() {
        let k = SemiringKind::Tropical;
        assert_eq!(k.big_sum([]).unwrap(), k.zero());
        let xs = ["5", "2", "9"].map(|s| k.parse_value(s).unwrap());
        assert_eq!(k.big_sum(&xs).unwrap(), Value::Tropical(Tropical::Finite(2)));
        let l = SemiringKind::Lukasiewicz;
        let quarter = l.parse_value("1/4").unwrap();
        let three = l.parse_value("3/4").unwrap();
        assert_eq!(quarter.add(&three).unwrap(), three);
        assert!(!three.natural_le(&quarter).unwrap());
    }
}
