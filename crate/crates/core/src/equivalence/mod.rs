//! Bounded and hypothesis-conditioned equivalence of weighted programs.

mod ski;

use std::fmt;

use crate::guarded::{gt_interpret, GuardedAlphabet, GuardedString, Language, Valuation, ValuationError};
use crate::relational::{interpret, EvalError, Relation, TransitionSystem};
use crate::sampling::suite_rng;
use crate::semiring::Semiring;
use crate::syntax::{BoolExpr, Program};

pub use ski::{realizable, ski_case_study, ski_chain_model, ski_hypotheses, ski_valuation, SkiReport};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HypothesisError {
    #[error("hypothesis right-hand side must be 0, found `{0}`")]
    NonzeroRhs(String),
    #[error("hypothesis left-hand side `{0}` mentions a weighting")]
    Weighted(String),
}

/// An equation `e = 0` with `e` free of weightings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypothesis {
    lhs: Program,
}

impl Hypothesis {
    pub fn new(lhs: Program, rhs: Program) -> Result<Self, HypothesisError> {
        if rhs != Program::Test(BoolExpr::Zero) {
            return Err(HypothesisError::NonzeroRhs(rhs.to_string()));
        }
        if !lhs.is_weighting_free() {
            return Err(HypothesisError::Weighted(lhs.to_string()));
        }
        Ok(Hypothesis { lhs })
    }

    pub fn lhs(&self) -> &Program {
        &self.lhs
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.lhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    BoundedLanguage,
    ModelFamily,
}

/// Where two programs were seen to differ, with both weights rendered
/// (`inf` for a missing trace or an infinite entry).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    Trace {
        string: GuardedString,
        rendered: String,
        left: Option<u64>,
        right: Option<u64>,
    },
    Entry {
        model: String,
        from: String,
        to: String,
        left: String,
        right: String,
    },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = |x: &Option<u64>| x.map_or("inf".to_string(), |n| n.to_string());
        match self {
            Counterexample::Trace {
                rendered, left, right, ..
            } => write!(f, "trace {rendered}: left weight {}, right weight {}", w(left), w(right)),
            Counterexample::Entry {
                model,
                from,
                to,
                left,
                right,
            } => write!(f, "model {model}, entry ({from}, {to}): left {left}, right {right}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivVerdict {
    pub equal: bool,
    pub counterexample: Option<Counterexample>,
    pub method: Method,
    /// Program-symbol bound for language comparisons.
    pub bound: Option<usize>,
    pub notes: Vec<String>,
}

impl fmt::Display for EquivVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scope = match (self.method, self.bound) {
            (Method::BoundedLanguage, Some(k)) => format!("bound={k}"),
            (Method::BoundedLanguage, None) => "unbounded".to_string(),
            (Method::ModelFamily, _) => "models".to_string(),
        };
        if self.equal {
            write!(f, "EQUAL({scope})")?;
        } else {
            write!(f, "NOT-EQUAL({scope})")?;
            if let Some(c) = &self.counterexample {
                write!(f, "\n  {c}")?;
            }
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EquivError {
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("hypothesis `{hypothesis}` does not hold in model {model}")]
    HypothesisViolated { model: String, hypothesis: String },
}

/// Compares two weight maps; the counterexample is the least string (by
/// length, then lexicographically) on which they differ.
pub fn compare_languages(
    left: &Language,
    right: &Language,
    alphabet: &GuardedAlphabet,
    bound: Option<usize>,
) -> EquivVerdict {
    let first_miss = |a: &Language, b: &Language| {
        a.iter()
            .find(|(s, w)| b.get(s) != Some(*w))
            .map(|(s, _)| s.clone())
    };
    let diff = match (first_miss(left, right), first_miss(right, left)) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    EquivVerdict {
        equal: diff.is_none(),
        counterexample: diff.map(|s| Counterexample::Trace {
            rendered: alphabet.render(&s),
            left: left.get(&s),
            right: right.get(&s),
            string: s,
        }),
        method: Method::BoundedLanguage,
        bound,
        notes: Vec::new(),
    }
}

/// Compares the interpretations of `p` and `q` on all strings with at most
/// `bound` program symbols.
pub fn bounded_equiv(p: &Program, q: &Program, v: &Valuation, bound: usize) -> Result<EquivVerdict, ValuationError> {
    let left = gt_interpret(p, v, bound)?;
    let right = gt_interpret(q, v, bound)?;
    Ok(compare_languages(&left, &right, v.alphabet(), Some(bound)))
}

/// Deletes every string that has a factor in one of `forbidden`.
pub fn filter_factors(lang: &Language, forbidden: &[Language]) -> Language {
    let factors: Vec<&GuardedString> = forbidden.iter().flat_map(|l| l.iter().map(|(s, _)| s)).collect();
    let mut out = lang.clone();
    out.retain(|s, _| !factors.iter().any(|f| s.contains_factor(f)));
    out
}

/// Samples `S` and checks `s ≤ 1`, i.e. `s + 1 = 1`, on every sample.
pub fn one_is_top<S: Semiring>(samples: usize, seed: u64) -> bool {
    let mut rng = suite_rng(seed);
    (0..samples).all(|_| S::sample(&mut rng).natural_le(&S::one()))
}

/// Bounded equivalence after eliminating the `e = 0` hypotheses: strings
/// containing a factor from some `e`'s language are removed on both sides.
pub fn equiv_under_zero_hypotheses(
    p: &Program,
    q: &Program,
    hyps: &[Hypothesis],
    v: &Valuation,
    bound: usize,
) -> Result<EquivVerdict, ValuationError> {
    let forbidden = hyps
        .iter()
        .map(|h| gt_interpret(&h.lhs, v, bound))
        .collect::<Result<Vec<_>, _>>()?;
    let left = filter_factors(&gt_interpret(p, v, bound)?, &forbidden);
    let right = filter_factors(&gt_interpret(q, v, bound)?, &forbidden);
    let mut verdict = compare_languages(&left, &right, v.alphabet(), Some(bound));
    for h in hyps {
        verdict.notes.push(format!("assumed {h}"));
    }
    if !hyps.is_empty() {
        let top = one_is_top::<crate::semiring::Tropical>(256, 0);
        verdict.notes.push(format!(
            "1 is the top weight: {}",
            if top { "yes (sampled)" } else { "no" }
        ));
    }
    Ok(verdict)
}

/// Entrywise comparison of `p` and `q` in every model, after checking that
/// each hypothesis evaluates to the zero relation there.
pub fn model_equiv<S: Semiring>(
    p: &Program,
    q: &Program,
    hyps: &[Hypothesis],
    models: &[TransitionSystem<S>],
    cap: Option<usize>,
) -> Result<EquivVerdict, EquivError> {
    for m in models {
        for h in hyps {
            if interpret(&h.lhs, m, cap)? != Relation::zero(m.len()) {
                return Err(EquivError::HypothesisViolated {
                    model: m.name().to_string(),
                    hypothesis: h.to_string(),
                });
            }
        }
    }
    let mut verdict = EquivVerdict {
        equal: true,
        counterexample: None,
        method: Method::ModelFamily,
        bound: None,
        notes: vec![format!("{} model(s)", models.len())],
    };
    for m in models {
        let (left, right) = (interpret(p, m, cap)?, interpret(q, m, cap)?);
        let diff = left
            .entries()
            .zip(right.entries())
            .find(|((_, _, a), (_, _, b))| a != b);
        if let Some(((i, j, a), (_, _, b))) = diff {
            verdict.equal = false;
            verdict.counterexample = Some(Counterexample::Entry {
                model: m.name().to_string(),
                from: m.states()[i].clone(),
                to: m.states()[j].clone(),
                left: a.to_string(),
                right: b.to_string(),
            });
            break;
        }
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::guarded::canonical_valuation;
    use crate::syntax::{parse, ski as progs};
    use crate::Tropical;
    use std::collections::BTreeMap;

    fn v() -> Valuation {
        let w = BTreeMap::from([("one".to_string(), 1), ("skis".to_string(), 3)]);
        canonical_valuation(&progs::signature(), &w).unwrap()
    }

    #[test]
    fn hypotheses_are_validated() {
        let sig = progs::signature();
        let p = |s: &str| parse(s, &sig).unwrap();
        assert!(Hypothesis::new(p("end {neq0}"), p("0")).is_ok());
        assert!(matches!(
            Hypothesis::new(p("end {neq0}"), p("1")),
            Err(HypothesisError::NonzeroRhs(_))
        ));
        assert!(matches!(
            Hypothesis::new(p("end @one"), p("0")),
            Err(HypothesisError::Weighted(_))
        ));
    }

    #[test]
    fn trivial_equivalences() {
        let v = v();
        let p = progs::loop_program();
        let verdict = bounded_equiv(&p, &p.clone().plus(Program::zero()), &v, 6).unwrap();
        assert!(verdict.equal);
        assert_eq!(verdict.to_string(), "EQUAL(bound=6)");
        let no_hyps = equiv_under_zero_hypotheses(&p, &progs::denested(), &[], &v, 6).unwrap();
        assert_eq!(no_hyps, bounded_equiv(&p, &progs::denested(), &v, 6).unwrap());
    }

    #[test]
    fn star_free_form_differs_without_hypotheses() {
        let v = v();
        let verdict = bounded_equiv(&progs::denested(), &progs::star_free(2), &v, 8).unwrap();
        assert!(!verdict.equal);
        let Some(Counterexample::Trace { string, left, right, .. }) = &verdict.counterexample else {
            panic!("{verdict}");
        };
        assert!(left.is_some() && right.is_none(), "{verdict}");
        assert!(string.len() > 2);
        let al = v.alphabet();
        let (pos, neg) = (crate::guarded::Atom(1), crate::guarded::Atom(0));
        let named = GuardedString::new(vec![pos, pos, pos, neg], vec![0, 0, 0]).unwrap();
        assert_eq!(
            al.render_weighted(&named, 3),
            "{neq0} sub1 {neq0} sub1 {neq0} sub1 {!neq0} (3)"
        );
        let l6 = gt_interpret(&progs::denested(), &v, 8).unwrap();
        let l8 = gt_interpret(&progs::star_free(2), &v, 8).unwrap();
        assert_eq!(l6.get(&named), Some(3));
        assert_eq!(l8.get(&named), None);
    }

    #[test]
    fn factor_filter_removes_end_then_neq0() {
        let v = v();
        let sig = progs::signature();
        let h = Hypothesis::new(parse("end {neq0}", &sig).unwrap(), Program::zero()).unwrap();
        let lang = gt_interpret(&parse("sub1 end {neq0} + sub1 end {!neq0}", &sig).unwrap(), &v, 4).unwrap();
        let forbidden = [gt_interpret(h.lhs(), &v, 4).unwrap()];
        let kept = filter_factors(&lang, &forbidden);
        assert!(kept.iter().all(|(s, _)| s.last() == crate::guarded::Atom(0)));
        assert_eq!(kept.len() * 2, lang.len());
        assert_eq!(filter_factors(&kept, &forbidden), kept);
    }

    #[test]
    fn tropical_one_is_top() {
        assert!(one_is_top::<Tropical>(500, 1));
        assert!(one_is_top::<crate::Lukasiewicz>(500, 1));
    }
}
