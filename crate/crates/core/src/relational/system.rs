use std::collections::{BTreeMap, BTreeSet};

use crate::semiring::Semiring;
use crate::syntax::{Signature, Sort};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SystemError {
    #[error("a transition system needs at least one state")]
    NoStates,
    #[error("state `{0}` is listed twice")]
    DuplicateState(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("state index {0} is out of range")]
    StateOutOfRange(usize),
    #[error("`{0}` is labeled twice")]
    DuplicateLabel(String),
    #[error("`{0}` is not a valid identifier")]
    InvalidName(String),
}

/// A program variable the model does not label at the required sort.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("signature mismatch: {sort} `{name}` is not labeled by model `{model}`")]
pub struct SignatureMismatch {
    pub model: String,
    pub name: String,
    pub sort: Sort,
}

/// `(X, L)`: a finite state set with labels for atomic programs (sets of
/// pairs), Boolean variables (sets of states) and weightings (semiring values).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionSystem<S> {
    name: String,
    states: Vec<String>,
    programs: BTreeMap<String, BTreeSet<(usize, usize)>>,
    booleans: BTreeMap<String, BTreeSet<usize>>,
    weights: BTreeMap<String, S>,
}

impl<S: Semiring> TransitionSystem<S> {
    pub fn new<I>(states: I) -> Result<Self, SystemError>
    where
        I: IntoIterator,
        I::Item: Into<String>,
    {
        let states: Vec<String> = states.into_iter().map(Into::into).collect();
        if states.is_empty() {
            return Err(SystemError::NoStates);
        }
        let mut seen = BTreeSet::new();
        for s in &states {
            if !seen.insert(s) {
                return Err(SystemError::DuplicateState(s.clone()));
            }
        }
        Ok(TransitionSystem {
            name: "model".into(),
            states,
            programs: BTreeMap::new(),
            booleans: BTreeMap::new(),
            weights: BTreeMap::new(),
        })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    fn check_new_label(&self, name: &str) -> Result<(), SystemError> {
        if !crate::syntax::is_identifier(name) {
            return Err(SystemError::InvalidName(name.to_string()));
        }
        if self.programs.contains_key(name)
            || self.booleans.contains_key(name)
            || self.weights.contains_key(name)
        {
            return Err(SystemError::DuplicateLabel(name.to_string()));
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<usize, SystemError> {
        if i < self.states.len() {
            Ok(i)
        } else {
            Err(SystemError::StateOutOfRange(i))
        }
    }

    pub fn with_program(
        mut self,
        name: impl Into<String>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, SystemError> {
        let name = name.into();
        self.check_new_label(&name)?;
        let pairs = pairs
            .into_iter()
            .map(|(a, b)| Ok((self.check_index(a)?, self.check_index(b)?)))
            .collect::<Result<_, SystemError>>()?;
        self.programs.insert(name, pairs);
        Ok(self)
    }

    pub fn with_boolean(
        mut self,
        name: impl Into<String>,
        holds_at: impl IntoIterator<Item = usize>,
    ) -> Result<Self, SystemError> {
        let name = name.into();
        self.check_new_label(&name)?;
        let states = holds_at
            .into_iter()
            .map(|i| self.check_index(i))
            .collect::<Result<_, SystemError>>()?;
        self.booleans.insert(name, states);
        Ok(self)
    }

    pub fn with_weight(mut self, name: impl Into<String>, value: S) -> Result<Self, SystemError> {
        let name = name.into();
        self.check_new_label(&name)?;
        self.weights.insert(name, value);
        Ok(self)
    }

    pub fn program_label(&self, name: &str) -> Option<&BTreeSet<(usize, usize)>> {
        self.programs.get(name)
    }

    pub fn boolean_label(&self, name: &str) -> Option<&BTreeSet<usize>> {
        self.booleans.get(name)
    }

    pub fn weight_label(&self, name: &str) -> Option<&S> {
        self.weights.get(name)
    }

    /// The signature the labels define (names in lexicographic order).
    pub fn signature(&self) -> Signature {
        Signature::new(
            self.programs.keys().cloned(),
            self.booleans.keys().cloned(),
            self.weights.keys().cloned(),
        )
        .expect("labels are checked to be disjoint identifiers")
    }

    /// Checks that every variable of `sig` is labeled at its sort.
    pub fn covers(&self, sig: &Signature) -> Result<(), SignatureMismatch> {
        let missing = |name: &String, sort| SignatureMismatch {
            model: self.name.clone(),
            name: name.clone(),
            sort,
        };
        if let Some(p) = sig.programs().iter().find(|p| !self.programs.contains_key(*p)) {
            return Err(missing(p, Sort::Program));
        }
        if let Some(b) = sig.booleans().iter().find(|b| !self.booleans.contains_key(*b)) {
            return Err(missing(b, Sort::Boolean));
        }
        if let Some(f) = sig.weightings().iter().find(|f| !self.weights.contains_key(*f)) {
            return Err(missing(f, Sort::Weighting));
        }
        Ok(())
    }
}
