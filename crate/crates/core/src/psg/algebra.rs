use std::marker::PhantomData;

use rand::Rng;

use super::semigroup::{check_psg_axioms, PartialSemigroup};
use crate::kleene_laws::{check_kleene_laws, Algebra};
use crate::relational::StarDivergence;
use crate::report::Report;
use crate::sampling::{suite_rng, SuiteRng};
use crate::semiring::Semiring;

/// A total function `G → S`, stored densely in carrier order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FunctionElement<S> {
    values: Vec<S>,
}

impl<S: Semiring> FunctionElement<S> {
    pub fn from_values(values: Vec<S>) -> Self {
        FunctionElement { values }
    }

    pub fn at(&self, x: usize) -> &S {
        &self.values[x]
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("complement is only defined on tests")]
pub struct NotATest;

/// The algebra `S^P` of functions from a partial semigroup to a complete
/// idempotent semiring.
#[derive(Clone, Debug)]
pub struct SpAlgebra<'p, S> {
    p: &'p PartialSemigroup,
    pairs: Vec<(usize, usize, usize)>,
    _semiring: PhantomData<S>,
}

impl<'p, S: Semiring> SpAlgebra<'p, S> {
    pub fn new(p: &'p PartialSemigroup) -> Self {
        SpAlgebra {
            p,
            pairs: p.defined_pairs().collect(),
            _semiring: PhantomData,
        }
    }

    pub fn semigroup(&self) -> &PartialSemigroup {
        self.p
    }

    pub fn tabulate(&self, f: impl FnMut(usize) -> S) -> FunctionElement<S> {
        FunctionElement {
            values: (0..self.p.len()).map(f).collect(),
        }
    }

    /// `1^S` on identities, `0^S` elsewhere.
    pub fn one(&self) -> FunctionElement<S> {
        self.tabulate(|x| if self.p.is_identity(x) { S::one() } else { S::zero() })
    }

    pub fn zero(&self) -> FunctionElement<S> {
        self.tabulate(|_| S::zero())
    }

    pub fn add(&self, f: &FunctionElement<S>, g: &FunctionElement<S>) -> FunctionElement<S> {
        self.tabulate(|x| f.values[x].add(&g.values[x]))
    }

    /// `(f·g)(x) = Σ {f(y)·g(z) | (y, z) ∈ D, y ⋄ z = x}`
    pub fn mul(&self, f: &FunctionElement<S>, g: &FunctionElement<S>) -> FunctionElement<S> {
        let mut out = self.zero();
        for &(y, z, x) in &self.pairs {
            let term = f.values[y].mul(&g.values[z]);
            out.values[x] = out.values[x].add(&term);
        }
        out
    }

    pub fn default_cap(&self) -> usize {
        self.p.len() + 1
    }

    /// Stabilised partial sums `1 + f + … + fᵏ`, with the number of steps.
    pub fn star_with_index(
        &self,
        f: &FunctionElement<S>,
        cap: usize,
    ) -> Result<(FunctionElement<S>, usize), StarDivergence> {
        let one = self.one();
        let mut acc = one.clone();
        for k in 0..cap {
            let next = self.add(&one, &self.mul(&acc, f));
            if next == acc {
                return Ok((acc, k));
            }
            acc = next;
        }
        Err(StarDivergence { cap })
    }

    pub fn star(&self, f: &FunctionElement<S>, cap: usize) -> Result<FunctionElement<S>, StarDivergence> {
        self.star_with_index(f, cap).map(|(s, _)| s)
    }

    /// Two-valued and supported on identities.
    pub fn is_test(&self, f: &FunctionElement<S>) -> bool {
        (0..self.p.len()).all(|x| f.values[x].is_zero() || (f.values[x].is_one() && self.p.is_identity(x)))
    }

    /// Zero off the identities and constant on them.
    pub fn is_weight(&self, f: &FunctionElement<S>) -> bool {
        let mut on_ids = self.p.identities().map(|x| &f.values[x]);
        let first = on_ids.next();
        on_ids.all(|v| Some(v) == first)
            && (0..self.p.len()).all(|x| self.p.is_identity(x) || f.values[x].is_zero())
    }

    /// `f̄(x) = 1` iff `f(x) ≠ 1`, restricted to identities.
    pub fn neg(&self, f: &FunctionElement<S>) -> Result<FunctionElement<S>, NotATest> {
        if !self.is_test(f) {
            return Err(NotATest);
        }
        Ok(self.tabulate(|x| {
            if self.p.is_identity(x) && !f.values[x].is_one() {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    /// The weight whose value on every identity is `s`.
    pub fn weight(&self, s: &S) -> FunctionElement<S> {
        self.tabulate(|x| if self.p.is_identity(x) { s.clone() } else { S::zero() })
    }

    /// `φ(f) = f(i)` at the least identity `i`.
    pub fn phi(&self, f: &FunctionElement<S>) -> S {
        let i = self.p.least_identity().expect("partial semigroups have an identity");
        f.values[i].clone()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> FunctionElement<S> {
        self.tabulate(|_| S::sample(rng))
    }

    pub fn sample_test<R: Rng + ?Sized>(&self, rng: &mut R) -> FunctionElement<S> {
        self.tabulate(|x| {
            if self.p.is_identity(x) && rng.gen() {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    pub fn render(&self, f: &FunctionElement<S>) -> String {
        let entries: Vec<String> = (0..self.p.len())
            .filter(|&x| !f.values[x].is_zero())
            .map(|x| format!("{} ↦ {}", self.p.label(x), f.values[x]))
            .collect();
        format!("{{{}}}", entries.join(", "))
    }
}

struct Laws<'a, 'p, S>(&'a SpAlgebra<'p, S>);

impl<S: Semiring> Algebra for Laws<'_, '_, S> {
    type Elem = FunctionElement<S>;

    fn one(&self) -> Self::Elem {
        self.0.one()
    }

    fn zero(&self) -> Self::Elem {
        self.0.zero()
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.0.add(x, y)
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.0.mul(x, y)
    }

    fn star_with_index(&self, x: &Self::Elem) -> Result<(Self::Elem, usize), String> {
        self.0
            .star_with_index(x, self.0.default_cap())
            .map_err(|e| e.to_string())
    }

    fn neg(&self, x: &Self::Elem) -> Option<Self::Elem> {
        self.0.neg(x).ok()
    }

    fn is_test(&self, x: &Self::Elem) -> bool {
        self.0.is_test(x)
    }

    fn sample(&self, rng: &mut SuiteRng) -> Self::Elem {
        self.0.sample(rng)
    }

    fn sample_test(&self, rng: &mut SuiteRng) -> Self::Elem {
        self.0.sample_test(rng)
    }

    fn show(&self, x: &Self::Elem) -> String {
        self.0.render(x)
    }
}

/// Property-checks `S^P`: the partial semigroup axioms exhaustively, then
/// the Kleene algebra with tests laws, closure of the weights, the
/// constant-product identity on identities, and `φ` as an isomorphism onto
/// `S`, each on `samples` random elements.
pub fn check_function_algebra_laws<S: Semiring>(p: &PartialSemigroup, samples: usize, seed: u64) -> Report {
    let mut report = Report::new(format!(
        "function algebra: {}^P over {} (seed {seed})",
        S::NAME,
        p.name()
    ));
    report.absorb("P: ", check_psg_axioms(p));
    let alg = SpAlgebra::<S>::new(p);
    let mut rng = suite_rng(seed);
    check_kleene_laws(&Laws(&alg), samples, &mut rng, &mut report);

    let weights: Vec<(S, S)> = (0..samples)
        .map(|_| (S::sample(&mut rng), S::sample(&mut rng)))
        .collect();
    let ids: Vec<usize> = p.identities().collect();
    report.run("1 and 0 are weights", 1, |_| {
        (!alg.is_weight(&alg.one()) || !alg.is_weight(&alg.zero())).then(|| "1 or 0 outside W".to_string())
    });
    report.run("weights are closed under add and mul", samples, |i| {
        let (u, v) = &weights[i];
        let (f, g) = (alg.weight(u), alg.weight(v));
        let prod = alg.mul(&f, &g);
        if !alg.is_weight(&alg.add(&f, &g)) || !alg.is_weight(&prod) {
            return Some(format!("u = {u}, v = {v}"));
        }
        (0..p.len())
            .find(|&x| !p.is_identity(x) && !prod.at(x).is_zero())
            .map(|x| format!("product nonzero off the identities at {}: u = {u}, v = {v}", p.label(x)))
    });
    report.run("(f·g)(x) = f(x)·g(x) for weights and identities x", samples, |i| {
        let (u, v) = &weights[i];
        let (f, g) = (alg.weight(u), alg.weight(v));
        let prod = alg.mul(&f, &g);
        ids.iter()
            .find(|&&x| *prod.at(x) != f.at(x).mul(g.at(x)))
            .map(|&x| format!("at {}: u = {u}, v = {v}", p.label(x)))
    });
    report.run("φ preserves 1, 0, add and mul", samples, |i| {
        let (u, v) = &weights[i];
        let (f, g) = (alg.weight(u), alg.weight(v));
        if alg.phi(&alg.one()) != S::one() || alg.phi(&alg.zero()) != S::zero() {
            return Some("constants".to_string());
        }
        if alg.phi(&alg.add(&f, &g)) != u.add(v) {
            return Some(format!("add: u = {u}, v = {v}"));
        }
        (alg.phi(&alg.mul(&f, &g)) != u.mul(v)).then(|| format!("mul: u = {u}, v = {v}"))
    });
    report.run("φ is a bijection from the weights onto S", samples, |i| {
        let (u, v) = &weights[i];
        let (f, g) = (alg.weight(u), alg.weight(v));
        if alg.phi(&f) != *u {
            return Some(format!("not onto: u = {u}"));
        }
        ((alg.phi(&f) == alg.phi(&g)) != (f == g)).then(|| format!("not injective: u = {u}, v = {v}"))
    });
    report
}
