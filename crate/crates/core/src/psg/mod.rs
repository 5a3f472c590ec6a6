//! Partial semigroups with identity and the function algebras they induce.

mod algebra;
mod semigroup;

pub use algebra::{check_function_algebra_laws, FunctionElement, NotATest, SpAlgebra};
pub use semigroup::{check_psg_axioms, ClosureError, PartialSemigroup, TableError};
