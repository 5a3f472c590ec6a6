use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::Hypothesis;
use crate::guarded::{canonical_valuation, gt_interpret, theta, Atom, GuardedAlphabet, GuardedString, Valuation};
use crate::relational::{interpret, Relation, TransitionSystem};
use crate::semiring::{Semiring, Tropical};
use crate::syntax::{power, ski, BoolExpr, Program};

/// States `s0 … sn`; `sub1` steps down, `end` jumps to `s0`, `neq0` holds
/// above `s0`, `one = 1` and `skis = y`.
pub fn ski_chain_model(n: usize, y: u64) -> TransitionSystem<Tropical> {
    TransitionSystem::new((0..=n).map(|i| format!("s{i}")))
        .and_then(|m| m.with_program("sub1", (1..=n).map(|i| (i, i - 1))))
        .and_then(|m| m.with_program("end", (0..=n).map(|i| (i, 0))))
        .and_then(|m| m.with_boolean("neq0", 1..=n))
        .and_then(|m| m.with_weight("one", Tropical::Finite(1)))
        .and_then(|m| m.with_weight("skis", Tropical::Finite(y)))
        .expect("well-formed chain")
        .named(format!("chain(n={n}, y={y})"))
}

/// `sub1ⁿ {neq0} = 0` and `end {neq0} = 0`.
pub fn ski_hypotheses(n: usize) -> Vec<Hypothesis> {
    let neq0 = Program::test(BoolExpr::var("neq0"));
    [
        power(&Program::atomic("sub1"), n).then(neq0.clone()),
        Program::atomic("end").then(neq0),
    ]
    .into_iter()
    .map(|lhs| Hypothesis::new(lhs, Program::zero()).expect("weighting-free"))
    .collect()
}

/// The canonical valuation with `one = 1` and `skis = y`.
pub fn ski_valuation(y: u64) -> Valuation {
    let weights = BTreeMap::from([("one".to_string(), 1), ("skis".to_string(), y)]);
    canonical_valuation(&ski::signature(), &weights).expect("ski weights are complete")
}

fn state_atom<S: Semiring>(m: &TransitionSystem<S>, al: &GuardedAlphabet, q: usize) -> Atom {
    let bits = al
        .booleans()
        .iter()
        .enumerate()
        .filter(|(_, b)| m.boolean_label(b).is_some_and(|set| set.contains(&q)))
        .fold(0, |acc, (i, _)| acc | 1 << i);
    Atom(bits)
}

/// Whether some run of `m` from `start` to `finish` reads `s`: each state
/// shows the matching atom and each step follows the named program.
pub fn realizable<S: Semiring>(s: &GuardedString, al: &GuardedAlphabet, m: &TransitionSystem<S>, start: usize, finish: usize) -> bool {
    if state_atom(m, al, start) != s.first() {
        return false;
    }
    let mut current = BTreeSet::from([start]);
    for (p, atom) in s.actions().iter().zip(&s.atoms()[1..]) {
        let Some(steps) = m.program_label(&al.programs()[*p]) else {
            return false;
        };
        current = steps
            .iter()
            .filter(|(a, b)| current.contains(a) && state_atom(m, al, *b) == *atom)
            .map(|&(_, b)| b)
            .collect();
    }
    current.contains(&finish)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkiReport {
    pub n: usize,
    pub y: u64,
    pub bound: usize,
    /// `θ` of the star-free program from `{neq0}` and from `{!neq0}`, at `{!neq0}`.
    pub theta_from_neq0: Option<u64>,
    pub theta_from_not_neq0: Option<u64>,
    /// Least weight of a trace of the star-free program that the chain can
    /// perform from `sn` to `s0`.
    pub realizable_min: Option<u64>,
    pub hypotheses_hold: bool,
    /// Entry `(sn, s0)` of the loop program over the chain.
    pub relational: Tropical,
}

impl SkiReport {
    pub fn expected(&self) -> u64 {
        (self.n as u64).min(self.y)
    }
}

impl fmt::Display for SkiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = |x: Option<u64>| x.map_or("unreachable".to_string(), |v| v.to_string());
        writeln!(f, "ski rental, n = {}, y = {} (bound {})", self.n, self.y, self.bound)?;
        writeln!(f, "  min(n, y)                         {}", self.expected())?;
        writeln!(f, "  θ from {{neq0}}, at {{!neq0}}         {}", w(self.theta_from_neq0))?;
        writeln!(f, "  θ from {{!neq0}}, at {{!neq0}}        {}", w(self.theta_from_not_neq0))?;
        writeln!(f, "  least trace realisable in chain    {}", w(self.realizable_min))?;
        writeln!(
            f,
            "  hypotheses hold in chain          {}",
            if self.hypotheses_hold { "yes" } else { "no" }
        )?;
        write!(f, "  loop over chain, entry (s{}, s0)   {}", self.n, self.relational)
    }
}

/// Interprets the star-free ski program for trip length `n` under the
/// canonical valuation with `skis = y` and extracts the optimal weights; also
/// evaluates the loop over the counter chain.
pub fn ski_case_study(n: usize, y: u64) -> SkiReport {
    let bound = 2 * n + 4;
    let v = ski_valuation(y);
    let al = v.alphabet().clone();
    let (pos, neg) = (Atom(1), Atom(0));
    let x = gt_interpret(&ski::star_free(n), &v, bound).expect("complete valuation");
    let theta_at = |from: Atom| theta(&x, &BTreeSet::from([from])).get(&neg).copied();

    let chain = ski_chain_model(n, y);
    let hypotheses_hold = ski_hypotheses(n).iter().all(|h| {
        interpret(h.lhs(), &chain, None).expect("chain labels every variable") == Relation::zero(n + 1)
    });
    let realizable_min = x
        .iter()
        .filter(|(s, _)| realizable(s, &al, &chain, n, 0))
        .map(|(_, w)| w)
        .min();
    let relational = *interpret(&ski::loop_program(), &chain, None)
        .expect("chain loop stabilises")
        .get(n, 0);
    SkiReport {
        n,
        y,
        bound,
        theta_from_neq0: theta_at(pos),
        theta_from_not_neq0: theta_at(neg),
        realizable_min,
        hypotheses_hold,
        relational,
    }
}
