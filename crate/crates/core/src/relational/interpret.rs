use super::relation::{Relation, StarDivergence};
use super::system::TransitionSystem;
use crate::semiring::Semiring;
use crate::syntax::{BoolExpr, Program, Sort};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Star(#[from] StarDivergence),
    #[error("{sort} `{name}` is not labeled in the model")]
    Unlabeled { name: String, sort: Sort },
}

fn holds<S: Semiring>(b: &BoolExpr, m: &TransitionSystem<S>, state: usize) -> Result<bool, EvalError> {
    Ok(match b {
        BoolExpr::Var(v) => m
            .boolean_label(v)
            .ok_or_else(|| EvalError::Unlabeled {
                name: v.clone(),
                sort: Sort::Boolean,
            })?
            .contains(&state),
        BoolExpr::Zero => false,
        BoolExpr::One => true,
        BoolExpr::And(a, c) => holds(a, m, state)? && holds(c, m, state)?,
        BoolExpr::Or(a, c) => holds(a, m, state)? || holds(c, m, state)?,
        BoolExpr::Not(a) => !holds(a, m, state)?,
    })
}

/// Interprets `p` in `m` homomorphically. `cap` bounds every star's partial
/// sums; `None` uses `|X| + 1`.
pub fn interpret<S: Semiring>(
    p: &Program,
    m: &TransitionSystem<S>,
    cap: Option<usize>,
) -> Result<Relation<S>, EvalError> {
    let n = m.len();
    Ok(match p {
        Program::Atomic(a) => {
            let pairs = m.program_label(a).ok_or_else(|| EvalError::Unlabeled {
                name: a.clone(),
                sort: Sort::Program,
            })?;
            Relation::from_pairs(n, pairs.iter().copied())
        }
        Program::Test(b) => {
            let marks = (0..n)
                .map(|s| holds(b, m, s))
                .collect::<Result<Vec<_>, _>>()?;
            Relation::test(&marks)
        }
        Program::Weight(f) => {
            let mut missing = None;
            f.visit_vars(&mut |_, v| {
                if missing.is_none() && m.weight_label(v).is_none() {
                    missing = Some(v.to_string());
                }
            });
            if let Some(name) = missing {
                return Err(EvalError::Unlabeled {
                    name,
                    sort: Sort::Weighting,
                });
            }
            let w = f.eval(&|v: &str| m.weight_label(v).cloned().unwrap_or_else(S::zero));
            Relation::weight(n, &w)
        }
        Program::Plus(a, b) => interpret(a, m, cap)?.add(&interpret(b, m, cap)?),
        Program::Seq(a, b) => interpret(a, m, cap)?.mul(&interpret(b, m, cap)?),
        Program::Star(a) => {
            let r = interpret(a, m, cap)?;
            let cap = cap.unwrap_or_else(|| r.default_cap());
            r.star(cap)?
        }
    })
}
