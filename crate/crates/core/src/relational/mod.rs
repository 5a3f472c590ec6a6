//! Semiring-valued transition systems and the lifted matrix algebra `S(X)`.

mod interpret;
mod laws;
mod model_file;
mod relation;
mod system;

pub use interpret::{interpret, EvalError};
pub use laws::check_lifted_laws;
pub use model_file::{parse_model_file, AnyModel, ModelError};
pub use relation::{RelError, Relation, StarDivergence};
pub use system::{SignatureMismatch, SystemError, TransitionSystem};
