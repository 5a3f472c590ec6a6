use std::collections::HashMap;
use std::fmt::Display;
use std::hash::Hash;

use crate::guarded::{GuardedAlphabet, GuardedString};
use crate::report::Report;

/// A defined product landed outside the finite carrier.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{left} ⋄ {right} = {result} is outside the carrier")]
pub struct ClosureError {
    pub left: String,
    pub right: String,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("the carrier is empty")]
    Empty,
    #[error("product table has {found} entries, expected {expected}")]
    Shape { expected: usize, found: usize },
    #[error("product refers to element {0}, outside the carrier")]
    OutOfRange(usize),
}

/// A finite partial semigroup with identity `(G, D, ⋄, I)`. Elements are
/// indices into the carrier; `D` is the set of pairs with a product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSemigroup {
    name: String,
    labels: Vec<String>,
    product: Vec<Option<usize>>,
    identities: Vec<bool>,
}

impl PartialSemigroup {
    /// Tabulates `op` over `elements`. Products that leave the carrier are
    /// an error; `None` from `op` means the pair is outside `D`.
    pub fn from_carrier<T, F, I>(
        name: impl Into<String>,
        elements: Vec<T>,
        is_identity: I,
        op: F,
    ) -> Result<Self, ClosureError>
    where
        T: Clone + Eq + Hash + Display,
        F: Fn(&T, &T) -> Option<T>,
        I: Fn(&T) -> bool,
    {
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut product = Vec::with_capacity(elements.len() * elements.len());
        for x in &elements {
            for y in &elements {
                let entry = match op(x, y) {
                    None => None,
                    Some(z) => Some(*index.get(&z).ok_or_else(|| ClosureError {
                        left: x.to_string(),
                        right: y.to_string(),
                        result: z.to_string(),
                    })?),
                };
                product.push(entry);
            }
        }
        Ok(PartialSemigroup {
            name: name.into(),
            labels: elements.iter().map(ToString::to_string).collect(),
            product,
            identities: elements.iter().map(is_identity).collect(),
        })
    }

    /// Builds from a row-major product table, without checking any axiom.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        product: Vec<Option<usize>>,
        identities: Vec<bool>,
    ) -> Result<Self, TableError> {
        let n = labels.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        if product.len() != n * n || identities.len() != n {
            return Err(TableError::Shape {
                expected: n * n,
                found: product.len(),
            });
        }
        if let Some(bad) = product.iter().flatten().find(|&&z| z >= n) {
            return Err(TableError::OutOfRange(*bad));
        }
        Ok(PartialSemigroup {
            name: name.into(),
            labels,
            product,
            identities,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn product(&self, x: usize, y: usize) -> Option<usize> {
        self.product[x * self.len() + y]
    }

    pub fn defined(&self, x: usize, y: usize) -> bool {
        self.product(x, y).is_some()
    }

    pub fn is_identity(&self, x: usize) -> bool {
        self.identities[x]
    }

    pub fn identities(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&x| self.identities[x])
    }

    /// The least identity in carrier order.
    pub fn least_identity(&self) -> Option<usize> {
        self.identities().next()
    }

    /// All `(y, z, y ⋄ z)` with `(y, z) ∈ D`.
    pub fn defined_pairs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.len();
        self.product
            .iter()
            .enumerate()
            .filter_map(move |(k, z)| z.map(|z| (k / n, k % n, z)))
    }

    /// `Cart_X` over `X = {0, …, n−1}`: `(x, y) ⋄ (y, z) = (x, z)`.
    pub fn cart(n: usize) -> Self {
        assert!(n >= 1, "X must be nonempty");
        let pairs: Vec<CartPair> = (0..n).flat_map(|a| (0..n).map(move |b| CartPair(a, b))).collect();
        Self::from_carrier(
            format!("Cart(|X| = {n})"),
            pairs,
            |p| p.0 == p.1,
            |x, y| (x.1 == y.0).then_some(CartPair(x.0, y.1)),
        )
        .expect("Cart is closed")
    }

    /// Guarded strings with at most `max_len` program symbols under the
    /// coalesced product; pairs whose product would be longer are outside `D`.
    pub fn gu(alphabet: &GuardedAlphabet, max_len: usize) -> Self {
        let strings: Vec<Rendered> = alphabet
            .strings_up_to(max_len)
            .into_iter()
            .map(|s| Rendered::new(alphabet, s))
            .collect();
        Self::from_carrier(
            format!(
                "Gu({} Boolean, {} program, length ≤ {max_len})",
                alphabet.booleans().len(),
                alphabet.programs().len()
            ),
            strings,
            |s| s.string.is_atom(),
            |x, y| {
                let s = x.string.coalesce(&y.string)?;
                (s.len() <= max_len).then(|| Rendered::new(alphabet, s))
            },
        )
        .expect("bounded coalescing stays in the carrier")
    }

    /// Strings over a `letters`-letter alphabet of length at most `max_len`
    /// under concatenation, with `D` restricted to stay within the bound.
    pub fn str_bounded(letters: usize, max_len: usize) -> Self {
        Self::str_with(letters, max_len, true).expect("bounded concatenation stays in the carrier")
    }

    /// The same fragment with `D` universal, as on the infinite monoid. Fails
    /// as soon as a concatenation exceeds the bound.
    pub fn str_universal(letters: usize, max_len: usize) -> Result<Self, ClosureError> {
        Self::str_with(letters, max_len, false)
    }

    fn str_with(letters: usize, max_len: usize, bounded: bool) -> Result<Self, ClosureError> {
        assert!((1..=26).contains(&letters));
        let mut words = vec![Word(String::new())];
        let mut frontier = words.clone();
        for _ in 0..max_len {
            let next: Vec<Word> = frontier
                .iter()
                .flat_map(|w| (0..letters).map(move |c| Word(format!("{}{}", w.0, (b'a' + c as u8) as char))))
                .collect();
            words.extend(next.iter().cloned());
            frontier = next;
        }
        Self::from_carrier(
            format!("Str({letters} letters, length ≤ {max_len})"),
            words,
            |w| w.0.is_empty(),
            |x, y| {
                let w = Word(format!("{}{}", x.0, y.0));
                (!bounded || w.0.len() <= max_len).then_some(w)
            },
        )
    }

    /// A fragment that satisfies the one-directional associativity condition
    /// but not the biconditional: `a ⋄ (b ⋄ b)` is defined while `a ⋄ b` is
    /// not. `e` is the only identity.
    pub fn one_sided_associative() -> Self {
        let labels = ["e", "a", "b", "c"].map(String::from).to_vec();
        let (e, a, b, c) = (0, 1, 2, 3);
        let mut product = vec![None; 16];
        for x in 0..4 {
            product[e * 4 + x] = Some(x);
            product[x * 4 + e] = Some(x);
        }
        product[b * 4 + b] = Some(c);
        product[a * 4 + c] = Some(c);
        Self::from_table("one-sided associative", labels, product, vec![true, false, false, false])
            .expect("well-shaped table")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct CartPair(usize, usize);

impl Display for CartPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Word(String);

impl Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Rendered {
    string: GuardedString,
    text: String,
}

impl Rendered {
    fn new(alphabet: &GuardedAlphabet, string: GuardedString) -> Self {
        let text = alphabet.render(&string);
        Rendered { string, text }
    }
}

impl Display for Rendered {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.text)
    }
}

/// Exhaustively checks the six defining conditions and the two derived
/// facts about identities.
pub fn check_psg_axioms(p: &PartialSemigroup) -> Report {
    let n = p.len();
    let mut report = Report::new(format!("partial semigroup axioms: {} (|G| = {n})", p.name()));
    let l = |x: usize| p.label(x);
    let triples = n * n * n;
    let triple = |k: usize| (k / (n * n), k / n % n, k % n);

    report.record("carrier is nonempty", 1, (n == 0).then(|| "G = ∅".to_string()));
    report.run("(xy)z is defined iff x(yz) is defined", triples, |k| {
        let (x, y, z) = triple(k);
        let left = p.product(x, y).is_some_and(|xy| p.defined(xy, z));
        let right = p.product(y, z).is_some_and(|yz| p.defined(x, yz));
        (left != right).then(|| {
            format!(
                "x = {}, y = {}, z = {}: (xy)z {}, x(yz) {}",
                l(x),
                l(y),
                l(z),
                if left { "defined" } else { "undefined" },
                if right { "defined" } else { "undefined" }
            )
        })
    });
    report.run("(xy)z = x(yz) when defined", triples, |k| {
        let (x, y, z) = triple(k);
        let left = p.product(x, y).and_then(|xy| p.product(xy, z))?;
        let right = p.product(y, z).and_then(|yz| p.product(x, yz))?;
        (left != right).then(|| format!("x = {}, y = {}, z = {}: {} vs {}", l(x), l(y), l(z), l(left), l(right)))
    });
    report.run("every element has a right identity", n, |x| {
        (!(0..n).any(|y| p.is_identity(y) && p.defined(x, y))).then(|| format!("x = {}", l(x)))
    });
    report.run("every element has a left identity", n, |x| {
        (!(0..n).any(|y| p.is_identity(y) && p.defined(y, x))).then(|| format!("x = {}", l(x)))
    });
    report.run("right identities act trivially", n * n, |k| {
        let (x, y) = (k / n, k % n);
        match p.product(x, y) {
            Some(xy) if p.is_identity(y) && xy != x => Some(format!("{} ⋄ {} = {}", l(x), l(y), l(xy))),
            _ => None,
        }
    });
    report.run("left identities act trivially", n * n, |k| {
        let (y, x) = (k / n, k % n);
        match p.product(y, x) {
            Some(yx) if p.is_identity(y) && yx != x => Some(format!("{} ⋄ {} = {}", l(y), l(x), l(yx))),
            _ => None,
        }
    });
    report.run("identities are idempotent", n, |x| {
        (p.is_identity(x) && p.product(x, x) != Some(x)).then(|| format!("x = {}", l(x)))
    });
    report.run("defined products of identities are identities", n * n, |k| {
        let (x, y) = (k / n, k % n);
        let xy = p.product(x, y)?;
        (p.is_identity(x) && p.is_identity(y) && !p.is_identity(xy))
            .then(|| format!("{} ⋄ {} = {}", l(x), l(y), l(xy)))
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_partial_semigroups() {
        let al = GuardedAlphabet::new(["b"], ["p"]).unwrap();
        for p in [
            PartialSemigroup::cart(3),
            PartialSemigroup::gu(&al, 2),
            PartialSemigroup::str_bounded(1, 3),
            PartialSemigroup::str_bounded(2, 2),
        ] {
            let report = check_psg_axioms(&p);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn instance_shapes() {
        let cart = PartialSemigroup::cart(3);
        let idx = |s: &str| cart.labels().iter().position(|l| l == s).unwrap();
        assert_eq!(cart.product(idx("(0,1)"), idx("(1,2)")), Some(idx("(0,2)")));
        assert_eq!(cart.product(idx("(0,1)"), idx("(0,2)")), None);
        assert_eq!(cart.identities().count(), 3);

        let al = GuardedAlphabet::new(["b"], ["p"]).unwrap();
        let gu = PartialSemigroup::gu(&al, 2);
        let ids: Vec<&str> = gu.identities().map(|x| gu.label(x)).collect();
        assert_eq!(ids, ["{!b}", "{b}"]);

        let s = PartialSemigroup::str_bounded(1, 3);
        let ids: Vec<&str> = s.identities().map(|x| s.label(x)).collect();
        assert_eq!(ids, ["ε"]);
    }

    #[test]
    fn universal_domain_leaves_the_fragment() {
        let err = PartialSemigroup::str_universal(1, 3).unwrap_err();
        assert_eq!(err.result.len(), 4);
        assert!(PartialSemigroup::str_universal(1, 0).is_ok());
    }

    #[test]
    fn one_sided_fragment_fails_only_the_biconditional() {
        let p = PartialSemigroup::one_sided_associative();
        let report = check_psg_axioms(&p);
        let failed: Vec<&str> = report.failures().map(|l| l.law.as_str()).collect();
        assert_eq!(failed, ["(xy)z is defined iff x(yz) is defined"]);
        // the one-directional condition does hold
        let n = p.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if let Some(xy) = p.product(x, y) {
                        if p.defined(xy, z) {
                            assert!(p.product(y, z).is_some_and(|yz| p.defined(x, yz)));
                        }
                    }
                }
            }
        }
    }
}
