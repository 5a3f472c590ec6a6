use std::collections::HashMap;

use rand::Rng;

use super::language::Language;
use super::string::{GuardedAlphabet, GuardedString};
use crate::report::Report;
use crate::sampling::{suite_rng, SuiteRng};
use crate::semiring::{Semiring, Tropical};

/// A function from guarded strings of length at most `bound` to ℕ∞,
/// stored densely in string order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct FunctionTable {
    values: Vec<Tropical>,
}

/// The finite string universe shared by all tables of one check.
struct Universe {
    alphabet: GuardedAlphabet,
    bound: usize,
    strings: Vec<GuardedString>,
    index: HashMap<GuardedString, usize>,
}

impl Universe {
    fn new(alphabet: GuardedAlphabet, bound: usize) -> Self {
        let strings = alphabet.strings_up_to(bound);
        let index = strings.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Universe {
            alphabet,
            bound,
            strings,
            index,
        }
    }

    fn table(&self, f: impl Fn(&GuardedString) -> Tropical) -> FunctionTable {
        FunctionTable {
            values: self.strings.iter().map(f).collect(),
        }
    }

    fn one(&self) -> FunctionTable {
        self.table(|s| if s.is_atom() { Tropical::one() } else { Tropical::zero() })
    }

    fn zero(&self) -> FunctionTable {
        self.table(|_| Tropical::zero())
    }

    fn at(&self, f: &FunctionTable, s: &GuardedString) -> Tropical {
        f.values[self.index[s]]
    }

    fn add(&self, f: &FunctionTable, g: &FunctionTable) -> FunctionTable {
        FunctionTable {
            values: f.values.iter().zip(&g.values).map(|(a, b)| a.add(b)).collect(),
        }
    }

    /// `(f·g)(s) = min {f(t) + g(u) | s = t ⋄ u}`, enumerating the splittings of `s`.
    fn mul(&self, f: &FunctionTable, g: &FunctionTable) -> FunctionTable {
        self.table(|s| {
            (0..=s.len())
                .map(|at| {
                    let (t, u) = s.split_at(at);
                    self.at(f, &t).mul(&self.at(g, &u))
                })
                .fold(Tropical::zero(), |acc, x| acc.add(&x))
        })
    }

    /// `min_n fⁿ`. Atom factors never lower a weight, so powers beyond the
    /// string length contribute nothing new.
    fn star(&self, f: &FunctionTable) -> FunctionTable {
        let mut power = self.one();
        let mut acc = power.clone();
        for _ in 0..=self.bound {
            power = self.mul(&power, f);
            acc = self.add(&acc, &power);
        }
        acc
    }

    fn is_test(&self, f: &FunctionTable) -> bool {
        self.strings.iter().zip(&f.values).all(|(s, v)| {
            *v == Tropical::zero() || (*v == Tropical::one() && s.is_atom())
        })
    }

    fn is_weight(&self, f: &FunctionTable) -> bool {
        let mut on_atoms = self
            .strings
            .iter()
            .zip(&f.values)
            .filter(|(s, _)| s.is_atom())
            .map(|(_, v)| v);
        let first = on_atoms.next().copied();
        on_atoms.all(|v| Some(*v) == first)
            && self
                .strings
                .iter()
                .zip(&f.values)
                .all(|(s, v)| s.is_atom() || *v == Tropical::zero())
    }

    fn neg(&self, f: &FunctionTable) -> FunctionTable {
        self.table(|s| {
            if s.is_atom() && self.at(f, s) == Tropical::zero() {
                Tropical::one()
            } else {
                Tropical::zero()
            }
        })
    }

    /// `τ(λ) = {s(n) | λ(s) = n ≠ ∞}`
    fn tau(&self, f: &FunctionTable) -> Language {
        self.strings
            .iter()
            .zip(&f.values)
            .filter_map(|(s, v)| v.finite().map(|n| (s.clone(), n)))
            .collect()
    }

    fn tau_inverse(&self, lang: &Language) -> FunctionTable {
        self.table(|s| lang.get(s).map_or(Tropical::Infinity, Tropical::Finite))
    }

    fn sample_value(rng: &mut SuiteRng) -> Tropical {
        Tropical::Finite(rng.gen_range(0..=4))
    }

    /// Sparse random function; about a third of the strings get a weight.
    fn sample(&self, rng: &mut SuiteRng) -> FunctionTable {
        FunctionTable {
            values: (0..self.strings.len())
                .map(|_| {
                    if rng.gen_ratio(1, 3) {
                        Self::sample_value(rng)
                    } else {
                        Tropical::Infinity
                    }
                })
                .collect(),
        }
    }

    fn sample_test(&self, rng: &mut SuiteRng) -> FunctionTable {
        let marks: Vec<bool> = (0..self.strings.len()).map(|_| rng.gen()).collect();
        self.table(|s| {
            if s.is_atom() && marks[self.index[s]] {
                Tropical::one()
            } else {
                Tropical::zero()
            }
        })
    }

    /// Tests, weights, atom-supported functions and unrestricted ones in
    /// rotation, so membership checks see both outcomes.
    fn sample_mixed(&self, rng: &mut SuiteRng, i: usize) -> FunctionTable {
        match i % 4 {
            0 => self.sample(rng),
            1 => self.sample_test(rng),
            2 => {
                let w = if rng.gen_ratio(1, 5) {
                    Tropical::Infinity
                } else {
                    Self::sample_value(rng)
                };
                self.table(|s| if s.is_atom() { w } else { Tropical::zero() })
            }
            _ => {
                let vals: Vec<Tropical> = (0..self.strings.len())
                    .map(|_| {
                        if rng.gen() {
                            Self::sample_value(rng)
                        } else {
                            Tropical::Infinity
                        }
                    })
                    .collect();
                self.table(|s| if s.is_atom() { vals[self.index[s]] } else { Tropical::zero() })
            }
        }
    }
}

fn mismatch(al: &GuardedAlphabet, what: &str, lhs: &Language, rhs: &Language) -> String {
    let show = |l: &Language| {
        let items: Vec<String> = l.iter().map(|(s, w)| al.render_weighted(s, w)).collect();
        format!("[{}]", items.join(", "))
    };
    format!("{what}: {} vs {}", show(lhs), show(rhs))
}

/// Checks that `τ` maps the function algebra on guarded strings (up to
/// `bound` program symbols) onto the unambiguous-language algebra: it is a
/// bijection, matches tests and weights, and commutes with `1`, `0`, `·`,
/// `+`, `*` and complement.
pub fn check_tau_iso(alphabet: &GuardedAlphabet, bound: usize, samples: usize, seed: u64) -> Report {
    let u = Universe::new(alphabet.clone(), bound);
    let al = &u.alphabet;
    let mut rng = suite_rng(seed);
    let mut report = Report::new(format!(
        "guarded-language isomorphism: {} Boolean, {} program, length ≤ {bound} (seed {seed})",
        al.booleans().len(),
        al.programs().len()
    ));
    let pairs: Vec<(FunctionTable, FunctionTable)> = (0..samples)
        .map(|_| (u.sample(&mut rng), u.sample(&mut rng)))
        .collect();
    let mixed: Vec<FunctionTable> = (0..samples).map(|i| u.sample_mixed(&mut rng, i)).collect();
    let mixed_tests: Vec<FunctionTable> = (0..samples).map(|_| u.sample_test(&mut rng)).collect();

    report.run("τ is a bijection", samples, |i| {
        let f = &pairs[i].0;
        let l = u.tau(f);
        (u.tau_inverse(&l) != *f).then(|| mismatch(al, "round trip", &l, &u.tau(&u.tau_inverse(&l))))
    });
    report.run("λ is a test iff τ(λ) is a crisp set of atoms", samples, |i| {
        let f = &mixed[i];
        let l = u.tau(f);
        (u.is_test(f) != l.is_test()).then(|| {
            format!(
                "function test: {}, language test: {}, τ(λ) = {}",
                u.is_test(f),
                l.is_test(),
                l.render(al).replace('\n', ", ")
            )
        })
    });
    report.run("λ is a weight iff τ(λ) is a uniform universal set of atoms or empty", samples, |i| {
        let f = &mixed[i];
        let l = u.tau(f);
        (u.is_weight(f) != l.is_weight(al)).then(|| {
            format!(
                "function weight: {}, language weight: {}, τ(λ) = {}",
                u.is_weight(f),
                l.is_weight(al),
                l.render(al).replace('\n', ", ")
            )
        })
    });
    report.run("τ(1) = 1_A and τ(0) = ∅", 1, |_| {
        let one = u.tau(&u.one());
        if one != Language::unit(al) {
            return Some(mismatch(al, "unit", &one, &Language::unit(al)));
        }
        let zero = u.tau(&u.zero());
        (!zero.is_empty()).then(|| mismatch(al, "zero", &zero, &Language::empty()))
    });
    report.run("τ(λ·λ′) = τ(λ)·τ(λ′)", samples, |i| {
        let (f, g) = &pairs[i];
        let lhs = u.tau(&u.mul(f, g));
        let rhs = u.tau(f).product_bounded(&u.tau(g), Some(bound));
        (lhs != rhs).then(|| mismatch(al, "product", &lhs, &rhs))
    });
    report.run("τ(λ+λ′) = τ(λ) ⋓ τ(λ′)", samples, |i| {
        let (f, g) = &pairs[i];
        let lhs = u.tau(&u.add(f, g));
        let rhs = u.tau(f).union(&u.tau(g));
        (lhs != rhs).then(|| mismatch(al, "union", &lhs, &rhs))
    });
    report.run("τ(λ*) = τ(λ)*", samples, |i| {
        let f = &pairs[i].0;
        let lhs = u.tau(&u.star(f));
        let rhs = u.tau(f).star(al, bound);
        (lhs != rhs).then(|| mismatch(al, "star", &lhs, &rhs))
    });
    report.run("τ(λ̄) is the complement of τ(λ) on tests", samples, |i| {
        let f = &mixed_tests[i];
        let lhs = u.tau(&u.neg(f));
        match u.tau(f).complement(al) {
            Some(rhs) => (lhs != rhs).then(|| mismatch(al, "complement", &lhs, &rhs)),
            None => Some("τ of a test is not a test".to_string()),
        }
    });
    report
}
