use std::cmp::Ordering;

use crate::syntax::{parse_bool_expr, BoolExpr, ParseError, Signature};

/// Most Boolean variables an alphabet may carry; atoms are bitmasks.
pub const MAX_BOOLEANS: usize = 16;

/// A complete sign assignment; bit `i` set means the `i`-th Boolean variable
/// is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(pub u32);

impl Atom {
    pub fn holds(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at most {MAX_BOOLEANS} Boolean variables are supported, got {0}")]
pub struct TooManyBooleans(pub usize);

/// Ordered Boolean variables and program symbols over which guarded strings
/// are formed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GuardedAlphabet {
    booleans: Vec<String>,
    programs: Vec<String>,
}

impl GuardedAlphabet {
    pub fn new<B, P>(booleans: B, programs: P) -> Result<Self, TooManyBooleans>
    where
        B: IntoIterator,
        B::Item: Into<String>,
        P: IntoIterator,
        P::Item: Into<String>,
    {
        let booleans: Vec<String> = booleans.into_iter().map(Into::into).collect();
        if booleans.len() > MAX_BOOLEANS {
            return Err(TooManyBooleans(booleans.len()));
        }
        Ok(GuardedAlphabet {
            booleans,
            programs: programs.into_iter().map(Into::into).collect(),
        })
    }

    pub fn from_signature(sig: &Signature) -> Result<Self, TooManyBooleans> {
        Self::new(sig.booleans().iter().cloned(), sig.programs().iter().cloned())
    }

    pub fn booleans(&self) -> &[String] {
        &self.booleans
    }

    pub fn programs(&self) -> &[String] {
        &self.programs
    }

    pub fn atom_count(&self) -> usize {
        1 << self.booleans.len()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + Clone {
        (0..self.atom_count() as u32).map(Atom)
    }

    pub fn program_index(&self, name: &str) -> Option<usize> {
        self.programs.iter().position(|p| p == name)
    }

    /// Evaluates `b` at `atom`, reading each variable off the atom's signs.
    /// Variables outside the alphabet are false.
    pub fn satisfies(&self, atom: Atom, b: &BoolExpr) -> bool {
        b.eval(&|v: &str| {
            self.booleans
                .iter()
                .position(|x| x == v)
                .is_some_and(|i| atom.holds(i))
        })
    }

    pub fn atoms_satisfying(&self, b: &BoolExpr) -> Vec<Atom> {
        self.atoms().filter(|&a| self.satisfies(a, b)).collect()
    }

    /// Atoms selected by a spec: a Boolean expression, optionally in braces,
    /// or the rendered form `{b1 !b2}` where juxtaposed literals are conjoined.
    pub fn parse_atom_spec(&self, text: &str) -> Result<Vec<Atom>, ParseError> {
        let sig = Signature::new(self.programs.iter().cloned(), self.booleans.iter().cloned(), Vec::<String>::new())
            .expect("alphabet names are distinct identifiers");
        let inner = text.trim();
        let inner = inner
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(inner);
        let words: Vec<&str> = inner.split_whitespace().collect();
        let literal = |w: &&str| {
            let name = w.trim_start_matches('!');
            !name.is_empty() && name.chars().all(|c| c.is_alphanumeric() || c == '_')
        };
        let b = if words.len() > 1 && words.iter().all(literal) {
            parse_bool_expr(&words.join(" & "), &sig)?
        } else {
            parse_bool_expr(inner, &sig)?
        };
        Ok(self.atoms_satisfying(&b))
    }

    /// Every guarded string with at most `max_len` program symbols, in
    /// string order.
    pub fn strings_up_to(&self, max_len: usize) -> Vec<GuardedString> {
        let mut out: Vec<GuardedString> = self.atoms().map(GuardedString::atom).collect();
        let mut frontier = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for s in &frontier {
                for p in 0..self.programs.len() {
                    for b in self.atoms() {
                        let mut t = s.clone();
                        t.push(p, b);
                        next.push(t);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort();
        out
    }

    pub fn render_atom(&self, atom: Atom) -> String {
        let signs: Vec<String> = self
            .booleans
            .iter()
            .enumerate()
            .map(|(i, b)| if atom.holds(i) { b.clone() } else { format!("!{b}") })
            .collect();
        format!("{{{}}}", signs.join(" "))
    }

    pub fn render(&self, s: &GuardedString) -> String {
        let mut out = self.render_atom(s.atoms[0]);
        for (p, a) in s.actions.iter().zip(&s.atoms[1..]) {
            let name = self.programs.get(*p).map_or("?", String::as_str);
            out.push(' ');
            out.push_str(name);
            out.push(' ');
            out.push_str(&self.render_atom(*a));
        }
        out
    }

    /// `{neq0} sub1 {!neq0} (1)`
    pub fn render_weighted(&self, s: &GuardedString, weight: u64) -> String {
        format!("{} ({weight})", self.render(s))
    }
}

/// `A₀ p₁ A₁ … p_k A_k` with program symbols stored as alphabet indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GuardedString {
    atoms: Vec<Atom>,
    actions: Vec<usize>,
}

impl GuardedString {
    pub fn atom(a: Atom) -> Self {
        GuardedString {
            atoms: vec![a],
            actions: Vec::new(),
        }
    }

    /// Builds `atoms[0] actions[0] atoms[1] …`; `None` unless there is exactly
    /// one more atom than actions.
    pub fn new(atoms: Vec<Atom>, actions: Vec<usize>) -> Option<Self> {
        (atoms.len() == actions.len() + 1).then_some(GuardedString { atoms, actions })
    }

    pub fn step(from: Atom, program: usize, to: Atom) -> Self {
        GuardedString {
            atoms: vec![from, to],
            actions: vec![program],
        }
    }

    pub fn push(&mut self, program: usize, atom: Atom) {
        self.actions.push(program);
        self.atoms.push(atom);
    }

    /// Number of program symbols.
    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_atom(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn actions(&self) -> &[usize] {
        &self.actions
    }

    pub fn first(&self) -> Atom {
        self.atoms[0]
    }

    pub fn last(&self) -> Atom {
        *self.atoms.last().expect("guarded strings are nonempty")
    }

    /// Coalesced product: defined iff the last atom here is the first atom
    /// of `other`.
    pub fn coalesce(&self, other: &GuardedString) -> Option<GuardedString> {
        if self.last() != other.first() {
            return None;
        }
        let mut atoms = self.atoms.clone();
        atoms.extend_from_slice(&other.atoms[1..]);
        let mut actions = self.actions.clone();
        actions.extend_from_slice(&other.actions);
        Some(GuardedString { atoms, actions })
    }

    /// The unique `(t, u)` with `t ⋄ u = self` and `t` of length `at`.
    pub fn split_at(&self, at: usize) -> (GuardedString, GuardedString) {
        assert!(at <= self.len());
        let t = GuardedString {
            atoms: self.atoms[..=at].to_vec(),
            actions: self.actions[..at].to_vec(),
        };
        let u = GuardedString {
            atoms: self.atoms[at..].to_vec(),
            actions: self.actions[at..].to_vec(),
        };
        (t, u)
    }

    /// Whether `factor` occurs in `self` aligned on atoms, i.e. `self = x ⋄
    /// factor ⋄ y` for some guarded strings `x`, `y`.
    pub fn contains_factor(&self, factor: &GuardedString) -> bool {
        let k = factor.len();
        k <= self.len()
            && (0..=self.len() - k).any(|i| {
                self.atoms[i..=i + k] == factor.atoms[..] && self.actions[i..i + k] == factor.actions[..]
            })
    }
}

impl Ord for GuardedString {
    /// Shorter strings first, then lexicographic over `A₀ p₁ A₁ …`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.atoms[0].cmp(&other.atoms[0]))
            .then_with(|| {
                let lhs = self.actions.iter().zip(&self.atoms[1..]);
                let rhs = other.actions.iter().zip(&other.atoms[1..]);
                lhs.cmp(rhs)
            })
    }
}

impl PartialOrd for GuardedString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `s(m)`: a guarded string carrying `m` copies of the weight symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedGuardedString {
    pub base: GuardedString,
    pub weight: u64,
}

impl WeightedGuardedString {
    pub fn new(base: GuardedString, weight: u64) -> Self {
        WeightedGuardedString { base, weight }
    }
}

/// `xA(n) ⋄ Ay(m) = xAy(n + m)`; `None` when the shared atoms differ.
pub fn coalesce(x: &WeightedGuardedString, y: &WeightedGuardedString) -> Option<WeightedGuardedString> {
    let base = x.base.coalesce(&y.base)?;
    let weight = x.weight.checked_add(y.weight).expect("weight overflow");
    Some(WeightedGuardedString { base, weight })
}
