//! While-program constructs expressed with the regular-program operators.

use super::{BoolExpr, Program};

/// `skip := 1`
pub fn skip() -> Program {
    Program::one()
}

/// `abort := 0`
pub fn abort() -> Program {
    Program::zero()
}

/// `p ; q := p·q`
pub fn seq(p: Program, q: Program) -> Program {
    p.then(q)
}

/// `if b then p else q := b·p + ¬b·q`
pub fn if_then_else(b: BoolExpr, p: Program, q: Program) -> Program {
    Program::test(b.clone())
        .then(p)
        .plus(Program::test(b.not()).then(q))
}

/// `while b do p := (b·p)*·¬b`
pub fn while_do(b: BoolExpr, p: Program) -> Program {
    Program::test(b.clone())
        .then(p)
        .star()
        .then(Program::test(b.not()))
}

/// `p^0 = 1`, `p^(k+1) = p·p^k`.
pub fn power(p: &Program, k: usize) -> Program {
    match k {
        0 => Program::one(),
        1 => p.clone(),
        _ => p.clone().then(power(p, k - 1)),
    }
}

/// `1 + p + p² + … + pⁿ`, a star-free program with `n + 1` summands.
pub fn bounded_plus(p: &Program, n: usize) -> Program {
    (1..=n)
        .rev()
        .map(|k| power(p, k))
        .reduce(|acc, term| term.plus(acc))
        .map_or_else(Program::one, |rest| Program::one().plus(rest))
}
