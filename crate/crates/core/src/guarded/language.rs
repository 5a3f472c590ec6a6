use std::collections::{BTreeMap, BTreeSet};

use super::string::{Atom, GuardedAlphabet, GuardedString, WeightedGuardedString};

/// An unambiguous set of weighted guarded strings, stored as a weight map.
/// A string that is absent has weight ∞.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Language {
    weights: BTreeMap<GuardedString, u64>,
}

impl Language {
    pub fn empty() -> Self {
        Language::default()
    }

    /// `1_A`: every atom with weight 0.
    pub fn unit(alphabet: &GuardedAlphabet) -> Self {
        Self::atoms(alphabet.atoms().map(|a| (a, 0)))
    }

    pub fn atoms(entries: impl IntoIterator<Item = (Atom, u64)>) -> Self {
        entries
            .into_iter()
            .map(|(a, w)| (GuardedString::atom(a), w))
            .collect()
    }

    /// `{A ↦ w | A ∈ 1_A}`, the image of `w` among the weights.
    pub fn constant(alphabet: &GuardedAlphabet, w: u64) -> Self {
        Self::atoms(alphabet.atoms().map(|a| (a, w)))
    }

    pub fn get(&self, s: &GuardedString) -> Option<u64> {
        self.weights.get(s).copied()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GuardedString, u64)> {
        self.weights.iter().map(|(s, &w)| (s, w))
    }

    pub fn weighted_strings(&self) -> impl Iterator<Item = WeightedGuardedString> + '_ {
        self.iter().map(|(s, w)| WeightedGuardedString::new(s.clone(), w))
    }

    /// Adds `s(w)`, keeping the smaller weight if `s` is already present.
    /// Returns whether the language changed.
    pub fn insert(&mut self, s: GuardedString, w: u64) -> bool {
        match self.weights.get_mut(&s) {
            Some(old) if *old <= w => false,
            Some(old) => {
                *old = w;
                true
            }
            None => {
                self.weights.insert(s, w);
                true
            }
        }
    }

    /// Unambiguous union `⋓`: pointwise minimum.
    pub fn union(&self, other: &Language) -> Language {
        let (mut out, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (s, w) in small.iter() {
            out.insert(s.clone(), w);
        }
        out
    }

    /// `(X ⋄ Y)^⋓`, dropping results with more than `bound` program symbols.
    pub fn product_bounded(&self, other: &Language, bound: Option<usize>) -> Language {
        let mut by_first: BTreeMap<Atom, Vec<(&GuardedString, u64)>> = BTreeMap::new();
        for (s, w) in other.iter() {
            by_first.entry(s.first()).or_default().push((s, w));
        }
        let mut out = Language::empty();
        for (x, wx) in self.iter() {
            let Some(ys) = by_first.get(&x.last()) else {
                continue;
            };
            for &(y, wy) in ys {
                if bound.is_some_and(|k| x.len() + y.len() > k) {
                    continue;
                }
                let s = x.coalesce(y).expect("matching atoms");
                out.insert(s, wx.checked_add(wy).expect("weight overflow"));
            }
        }
        out
    }

    pub fn product(&self, other: &Language) -> Language {
        self.product_bounded(other, None)
    }

    /// `⋓_{n ≥ 0} Xⁿ` over strings with at most `bound` program symbols.
    /// Iterates on newly improved entries only, until nothing improves.
    pub fn star(&self, alphabet: &GuardedAlphabet, bound: usize) -> Language {
        let mut acc = Language::unit(alphabet);
        let mut delta = acc.clone();
        while !delta.is_empty() {
            let next = delta.product_bounded(self, Some(bound));
            delta = Language::empty();
            for (s, w) in next.iter() {
                if acc.insert(s.clone(), w) {
                    delta.weights.insert(s.clone(), w);
                }
            }
        }
        acc
    }

    /// Complement on `1_A`; `None` unless this is a crisp set of atoms.
    pub fn complement(&self, alphabet: &GuardedAlphabet) -> Option<Language> {
        self.is_test().then(|| {
            Self::atoms(
                alphabet
                    .atoms()
                    .filter(|&a| !self.weights.contains_key(&GuardedString::atom(a)))
                    .map(|a| (a, 0)),
            )
        })
    }

    /// Entries with at most `bound` program symbols.
    pub fn truncate(&self, bound: usize) -> Language {
        self.iter()
            .filter(|(s, _)| s.len() <= bound)
            .map(|(s, w)| (s.clone(), w))
            .collect()
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&GuardedString, u64) -> bool) {
        self.weights.retain(|s, w| keep(s, *w));
    }

    pub fn max_len(&self) -> usize {
        self.weights.keys().map(GuardedString::len).max().unwrap_or(0)
    }

    pub fn is_crisp(&self) -> bool {
        self.weights.values().all(|&w| w == 0)
    }

    pub fn is_uniform(&self) -> bool {
        let mut ws = self.weights.values();
        ws.next().is_none_or(|first| ws.all(|w| w == first))
    }

    pub fn is_atomic(&self) -> bool {
        self.weights.keys().all(GuardedString::is_atom)
    }

    /// Every atom of `alphabet` carries some weight.
    pub fn is_universal(&self, alphabet: &GuardedAlphabet) -> bool {
        alphabet
            .atoms()
            .all(|a| self.weights.contains_key(&GuardedString::atom(a)))
    }

    /// A crisp set of atoms.
    pub fn is_test(&self) -> bool {
        self.is_atomic() && self.is_crisp()
    }

    /// A uniform set of atoms that is universal or empty.
    pub fn is_weight(&self, alphabet: &GuardedAlphabet) -> bool {
        self.is_atomic() && self.is_uniform() && (self.is_empty() || self.is_universal(alphabet))
    }

    /// The underlying guarded strings.
    pub fn support(&self) -> BTreeSet<GuardedString> {
        self.weights.keys().cloned().collect()
    }

    pub fn render(&self, alphabet: &GuardedAlphabet) -> String {
        let lines: Vec<String> = self
            .iter()
            .map(|(s, w)| alphabet.render_weighted(s, w))
            .collect();
        lines.join("\n")
    }
}

impl FromIterator<(GuardedString, u64)> for Language {
    /// Collects with `⋓`, so repeated strings keep their smallest weight.
    fn from_iter<T: IntoIterator<Item = (GuardedString, u64)>>(iter: T) -> Self {
        let mut out = Language::empty();
        for (s, w) in iter {
            out.insert(s, w);
        }
        out
    }
}

impl FromIterator<WeightedGuardedString> for Language {
    fn from_iter<T: IntoIterator<Item = WeightedGuardedString>>(iter: T) -> Self {
        iter.into_iter().map(|x| (x.base, x.weight)).collect()
    }
}
