use std::collections::{BTreeMap, BTreeSet};

use super::language::Language;
use super::string::{Atom, GuardedAlphabet, GuardedString};
use crate::semiring::{Semiring, Tropical};
use crate::syntax::{BoolExpr, Program, Signature, Sort};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ValuationError {
    #[error("{sort} `{name}` has no value")]
    Unvalued { name: String, sort: Sort },
    #[error("{0}")]
    Alphabet(#[from] super::string::TooManyBooleans),
}

/// A valuation into guarded languages: program variables to languages,
/// Boolean variables to atom sets, weighting variables to tropical weights
/// (lifted to `{A ↦ w | A ∈ 1_A}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation {
    alphabet: GuardedAlphabet,
    programs: BTreeMap<String, Language>,
    booleans: BTreeMap<String, BTreeSet<Atom>>,
    weights: BTreeMap<String, Tropical>,
}

impl Valuation {
    pub fn new(alphabet: GuardedAlphabet) -> Self {
        Valuation {
            alphabet,
            programs: BTreeMap::new(),
            booleans: BTreeMap::new(),
            weights: BTreeMap::new(),
        }
    }

    pub fn alphabet(&self) -> &GuardedAlphabet {
        &self.alphabet
    }

    pub fn set_program(&mut self, name: impl Into<String>, lang: Language) {
        self.programs.insert(name.into(), lang);
    }

    pub fn set_boolean(&mut self, name: impl Into<String>, atoms: BTreeSet<Atom>) {
        self.booleans.insert(name.into(), atoms);
    }

    pub fn set_weight(&mut self, name: impl Into<String>, w: Tropical) {
        self.weights.insert(name.into(), w);
    }

    pub fn program(&self, name: &str) -> Option<&Language> {
        self.programs.get(name)
    }

    pub fn boolean(&self, name: &str) -> Option<&BTreeSet<Atom>> {
        self.booleans.get(name)
    }

    pub fn weight(&self, name: &str) -> Option<&Tropical> {
        self.weights.get(name)
    }

    fn atoms_of(&self, b: &BoolExpr) -> Result<BTreeSet<Atom>, ValuationError> {
        let all = || self.alphabet.atoms().collect::<BTreeSet<_>>();
        Ok(match b {
            BoolExpr::Var(v) => self
                .booleans
                .get(v)
                .cloned()
                .ok_or_else(|| ValuationError::Unvalued {
                    name: v.clone(),
                    sort: Sort::Boolean,
                })?,
            BoolExpr::Zero => BTreeSet::new(),
            BoolExpr::One => all(),
            BoolExpr::And(a, c) => &self.atoms_of(a)? & &self.atoms_of(c)?,
            BoolExpr::Or(a, c) => &self.atoms_of(a)? | &self.atoms_of(c)?,
            BoolExpr::Not(a) => &all() - &self.atoms_of(a)?,
        })
    }
}

/// The canonical valuation: `p ↦ {A p B}`, `b ↦ {A | b positive in A}`,
/// and each weighting variable to the constant language of its weight.
pub fn canonical_valuation(
    sig: &Signature,
    weights: &BTreeMap<String, u64>,
) -> Result<Valuation, ValuationError> {
    let alphabet = GuardedAlphabet::from_signature(sig)?;
    let mut v = Valuation::new(alphabet.clone());
    for (i, p) in alphabet.programs().iter().enumerate() {
        let steps = alphabet.atoms().flat_map(|a| {
            alphabet
                .atoms()
                .map(move |b| (GuardedString::step(a, i, b), 0))
        });
        v.set_program(p.clone(), steps.collect());
    }
    for (i, b) in alphabet.booleans().iter().enumerate() {
        v.set_boolean(b.clone(), alphabet.atoms().filter(|a| a.holds(i)).collect());
    }
    for f in sig.weightings() {
        let w = weights.get(f).ok_or_else(|| ValuationError::Unvalued {
            name: f.clone(),
            sort: Sort::Weighting,
        })?;
        v.set_weight(f.clone(), Tropical::Finite(*w));
    }
    Ok(v)
}

/// Interprets `p` homomorphically. The result is exact on every string
/// with at most `bound` program symbols and contains no longer strings.
pub fn gt_interpret(p: &Program, v: &Valuation, bound: usize) -> Result<Language, ValuationError> {
    let al = &v.alphabet;
    Ok(match p {
        Program::Atomic(a) => v
            .programs
            .get(a)
            .ok_or_else(|| ValuationError::Unvalued {
                name: a.clone(),
                sort: Sort::Program,
            })?
            .truncate(bound),
        Program::Test(b) => Language::atoms(v.atoms_of(b)?.into_iter().map(|a| (a, 0))),
        Program::Weight(f) => {
            let mut missing = None;
            f.visit_vars(&mut |_, name| {
                if missing.is_none() && !v.weights.contains_key(name) {
                    missing = Some(name.to_string());
                }
            });
            if let Some(name) = missing {
                return Err(ValuationError::Unvalued {
                    name,
                    sort: Sort::Weighting,
                });
            }
            match f.eval(&|name: &str| v.weights[name]) {
                Tropical::Finite(w) => Language::constant(al, w),
                Tropical::Infinity => Language::empty(),
            }
        }
        Program::Plus(a, b) => gt_interpret(a, v, bound)?.union(&gt_interpret(b, v, bound)?),
        Program::Seq(a, b) => {
            gt_interpret(a, v, bound)?.product_bounded(&gt_interpret(b, v, bound)?, Some(bound))
        }
        Program::Star(a) => gt_interpret(a, v, bound)?.star(al, bound),
    })
}

/// `θ_G(Y)`: for each final atom, the least weight of a string in `g`
/// that starts in `from`.
pub fn theta(g: &Language, from: &BTreeSet<Atom>) -> BTreeMap<Atom, u64> {
    let mut out: BTreeMap<Atom, u64> = BTreeMap::new();
    for (s, w) in g.iter() {
        if from.contains(&s.first()) {
            out.entry(s.last())
                .and_modify(|old| *old = (*old).min(w))
                .or_insert(w);
        }
    }
    out
}

/// The weight of a constant atom language, with ∞ for the empty one; `None`
/// for languages outside the weights.
pub fn extract_weight(lang: &Language, alphabet: &GuardedAlphabet) -> Option<Tropical> {
    if !lang.is_weight(alphabet) {
        return None;
    }
    Some(
        lang.iter()
            .next()
            .map_or(Tropical::zero(), |(_, w)| Tropical::Finite(w)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse, ski};

    const POS: Atom = Atom(1);
    const NEG: Atom = Atom(0);

    fn ski_valuation(y: u64) -> Valuation {
        let weights = BTreeMap::from([("one".to_string(), 1), ("skis".to_string(), y)]);
        canonical_valuation(&ski::signature(), &weights).unwrap()
    }

    #[test]
    fn canonical_values() {
        let v = ski_valuation(7);
        let al = v.alphabet().clone();
        assert_eq!(v.weight("one"), Some(&Tropical::Finite(1)));
        assert_eq!(v.boolean("neq0"), Some(&BTreeSet::from([POS])));
        let sub1 = v.program("sub1").unwrap();
        assert_eq!(sub1.len(), 4);
        assert!(sub1.is_crisp());
        let one = gt_interpret(&parse("@one", &ski::signature()).unwrap(), &v, 3).unwrap();
        assert_eq!(one, Language::constant(&al, 1));
    }

    #[test]
    fn interpretation_basics() {
        let v = ski_valuation(7);
        let sig = ski::signature();
        let al = v.alphabet().clone();
        assert_eq!(gt_interpret(&Program::one(), &v, 4).unwrap(), Language::unit(&al));
        let p = parse("({neq0} sub1 @one)* end", &sig).unwrap();
        let lp = gt_interpret(&p, &v, 4).unwrap();
        assert_eq!(gt_interpret(&p.clone().plus(p.clone()), &v, 4).unwrap(), lp);
        assert!(lp.max_len() <= 4);
    }

    #[test]
    fn star_free_ski_contains_the_listed_traces() {
        let v = ski_valuation(5);
        let al = v.alphabet().clone();
        let x = gt_interpret(&ski::star_free(3), &v, 10).unwrap();
        let render: BTreeSet<String> = x.iter().map(|(s, w)| al.render_weighted(s, w)).collect();
        for line in [
            "{!neq0} (0)",
            "{neq0} sub1 {!neq0} (1)",
            "{neq0} sub1 {neq0} end {!neq0} (5)",
            "{neq0} sub1 {!neq0} end {!neq0} (5)",
            "{neq0} sub1 {neq0} sub1 {neq0} end {!neq0} (6)",
            "{neq0} sub1 {neq0} sub1 {neq0} sub1 {!neq0} (3)",
        ] {
            assert!(render.contains(line), "missing {line}");
        }
    }

    #[test]
    fn theta_on_ski() {
        let v = ski_valuation(5);
        let x = gt_interpret(&ski::star_free(3), &v, 10).unwrap();
        assert_eq!(theta(&x, &BTreeSet::from([NEG])), BTreeMap::from([(NEG, 0)]));
        // atoms do not record the counter, so one step may already reach {!neq0}
        assert_eq!(theta(&x, &BTreeSet::from([POS])), BTreeMap::from([(NEG, 1)]));
        let x0 = gt_interpret(&ski::star_free(0), &v, 10).unwrap();
        assert_eq!(theta(&x0, &BTreeSet::from([POS])), BTreeMap::from([(NEG, 5)]));
        assert!(theta(&Language::empty(), &BTreeSet::from([NEG, POS])).is_empty());
    }

    #[test]
    fn unvalued_variables_are_reported() {
        let sig = ski::signature();
        let err = canonical_valuation(&sig, &BTreeMap::new()).unwrap_err();
        assert!(matches!(err, ValuationError::Unvalued { sort: Sort::Weighting, .. }));
    }
}
