use rand::Rng;

use super::relation::Relation;
use crate::kleene_laws::{check_kleene_laws, Algebra};
use crate::report::Report;
use crate::sampling::{suite_rng, SuiteRng};
use crate::semiring::Semiring;

fn show<S: Semiring>(r: &Relation<S>) -> String {
    let rows: Vec<String> = (0..r.size())
        .map(|i| {
            let row: Vec<String> = (0..r.size()).map(|j| r.get(i, j).to_string()).collect();
            format!("[{}]", row.join(" "))
        })
        .collect();
    format!("[{}]", rows.join(" "))
}

struct Lifted<S> {
    n: usize,
    _semiring: std::marker::PhantomData<S>,
}

impl<S: Semiring> Algebra for Lifted<S> {
    type Elem = Relation<S>;

    fn one(&self) -> Relation<S> {
        Relation::one(self.n)
    }

    fn zero(&self) -> Relation<S> {
        Relation::zero(self.n)
    }

    fn add(&self, x: &Relation<S>, y: &Relation<S>) -> Relation<S> {
        x.add(y)
    }

    fn mul(&self, x: &Relation<S>, y: &Relation<S>) -> Relation<S> {
        x.mul(y)
    }

    fn star_with_index(&self, x: &Relation<S>) -> Result<(Relation<S>, usize), String> {
        x.star_with_index(self.n + 1).map_err(|e| e.to_string())
    }

    fn neg(&self, x: &Relation<S>) -> Option<Relation<S>> {
        x.neg().ok()
    }

    fn is_test(&self, x: &Relation<S>) -> bool {
        x.is_test()
    }

    fn sample(&self, rng: &mut SuiteRng) -> Relation<S> {
        Relation::from_fn(self.n, |_, _| S::sample(rng))
    }

    fn sample_test(&self, rng: &mut SuiteRng) -> Relation<S> {
        let marks: Vec<bool> = (0..self.n).map(|_| rng.gen()).collect();
        Relation::test(&marks)
    }

    fn show(&self, x: &Relation<S>) -> String {
        show(x)
    }
}

/// Property-checks the lifted algebra `S(X)` with `|X| = size`: semiring
/// laws, Kleene star laws, sampled *-continuity, Boolean-algebra laws on
/// tests, and the weight subalgebra's isomorphism with `S`.
pub fn check_lifted_laws<S: Semiring>(size: usize, samples: usize, seed: u64) -> Report {
    assert!(size >= 1, "X must be nonempty");
    let mut rng = suite_rng(seed);
    let mut report = Report::new(format!(
        "lifted laws: {}(X), |X| = {size} (seed {seed})",
        S::NAME
    ));
    let n = size;
    let alg = Lifted::<S> {
        n,
        _semiring: std::marker::PhantomData,
    };
    check_kleene_laws(&alg, samples, &mut rng, &mut report);
    let one = Relation::<S>::one(n);
    let zero = Relation::<S>::zero(n);

    let weights: Vec<(S, S)> = (0..samples)
        .map(|_| (S::sample(&mut rng), S::sample(&mut rng)))
        .collect();
    report.run("weights are closed under add and mul", samples, |i| {
        let (u, v) = &weights[i];
        let (wu, wv) = (Relation::weight(n, u), Relation::weight(n, v));
        (!(wu.add(&wv).is_weight() && wu.mul(&wv).is_weight()))
            .then(|| format!("u = {u}, v = {v}"))
    });
    report.run("diagonal extraction is a semiring isomorphism onto S", samples, |i| {
        let (u, v) = &weights[i];
        let (wu, wv) = (Relation::weight(n, u), Relation::weight(n, v));
        for d in 0..n {
            let at = |r: &Relation<S>| r.get(d, d).clone();
            if at(&wu) != *u {
                return Some(format!("extraction at {d} is not onto: u = {u}"));
            }
            if at(&wu.add(&wv)) != u.add(v) || at(&wu.mul(&wv)) != u.mul(v) {
                return Some(format!("not a homomorphism at {d}: u = {u}, v = {v}"));
            }
            if at(&one) != S::one() || at(&zero) != S::zero() {
                return Some(format!("constants not preserved at {d}"));
            }
            if (at(&wu) == at(&wv)) != (wu == wv) {
                return Some(format!("not injective at {d}: u = {u}, v = {v}"));
            }
        }
        None
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{Boolean, Lukasiewicz, SaturatingSub, Tropical};

    #[test]
    fn sound_instances_pass() {
        for report in [
            check_lifted_laws::<Tropical>(3, 500, 7),
            check_lifted_laws::<Lukasiewicz>(3, 500, 7),
            check_lifted_laws::<Boolean>(2, 300, 7),
        ] {
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn mutant_fails() {
        let report = check_lifted_laws::<SaturatingSub>(2, 200, 7);
        assert!(!report.passed(), "{report}");
    }
}
