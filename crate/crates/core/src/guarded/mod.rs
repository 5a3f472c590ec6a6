//! Unambiguous weighted guarded languages over a finite alphabet.

mod interpret;
mod language;
mod string;
mod tau;

pub use interpret::{canonical_valuation, extract_weight, gt_interpret, theta, Valuation, ValuationError};
pub use language::Language;
pub use string::{
    coalesce, Atom, GuardedAlphabet, GuardedString, TooManyBooleans, WeightedGuardedString, MAX_BOOLEANS,
};
pub use tau::check_tau_iso;
