use rand::Rng;

use super::Semiring;
use crate::report::Report;
use crate::sampling::suite_rng;

fn show<S: Semiring>(names: &[&str], vals: &[&S]) -> String {
    names
        .iter()
        .zip(vals)
        .map(|(n, v)| format!("{n} = {v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn eq_or_witness<S: Semiring>(lhs: S, rhs: S, ctx: impl FnOnce() -> String) -> Option<String> {
    (lhs != rhs).then(|| format!("{}: {} ≠ {}", ctx(), lhs, rhs))
}

/// Checks the semiring axioms, idempotency, complete distributivity over
/// finite families and the natural-order laws on `samples` random instances.
pub fn check_semiring_axioms<S: Semiring>(samples: usize, seed: u64) -> Report {
    let mut rng = suite_rng(seed);
    let mut report = Report::new(format!("semiring axioms: {} (seed {seed})", S::NAME));
    let triples: Vec<(S, S, S)> = (0..samples)
        .map(|_| (S::sample(&mut rng), S::sample(&mut rng), S::sample(&mut rng)))
        .collect();
    let families: Vec<(S, Vec<S>)> = (0..samples)
        .map(|_| {
            let len = rng.gen_range(0..=6);
            (S::sample(&mut rng), (0..len).map(|_| S::sample(&mut rng)).collect())
        })
        .collect();
    let xyz = ["x", "y", "z"];

    report.run("add is associative", samples, |i| {
        let (x, y, z) = &triples[i];
        eq_or_witness(x.add(y).add(z), x.add(&y.add(z)), || show(&xyz, &[x, y, z]))
    });
    report.run("add is commutative", samples, |i| {
        let (x, y, _) = &triples[i];
        eq_or_witness(x.add(y), y.add(x), || show(&xyz[..2], &[x, y]))
    });
    report.run("0 is neutral for add", samples, |i| {
        let x = &triples[i].0;
        eq_or_witness(x.add(&S::zero()), x.clone(), || show(&["x"], &[x]))
    });
    report.run("add is idempotent", samples, |i| {
        let x = &triples[i].0;
        eq_or_witness(x.add(x), x.clone(), || show(&["x"], &[x]))
    });
    report.run("mul is associative", samples, |i| {
        let (x, y, z) = &triples[i];
        eq_or_witness(x.mul(y).mul(z), x.mul(&y.mul(z)), || show(&xyz, &[x, y, z]))
    });
    report.run("1 is neutral for mul", samples, |i| {
        let x = &triples[i].0;
        eq_or_witness(x.mul(&S::one()), x.clone(), || format!("x·1, x = {x}"))
            .or_else(|| eq_or_witness(S::one().mul(x), x.clone(), || format!("1·x, x = {x}")))
    });
    report.run("mul distributes over add (left)", samples, |i| {
        let (x, y, z) = &triples[i];
        eq_or_witness(x.mul(&y.add(z)), x.mul(y).add(&x.mul(z)), || {
            show(&xyz, &[x, y, z])
        })
    });
    report.run("mul distributes over add (right)", samples, |i| {
        let (x, y, z) = &triples[i];
        eq_or_witness(x.add(y).mul(z), x.mul(z).add(&y.mul(z)), || {
            show(&xyz, &[x, y, z])
        })
    });
    report.run("0 annihilates", samples, |i| {
        let x = &triples[i].0;
        eq_or_witness(x.mul(&S::zero()), S::zero(), || format!("x·0, x = {x}"))
            .or_else(|| eq_or_witness(S::zero().mul(x), S::zero(), || format!("0·x, x = {x}")))
    });
    report.run("complete distributivity (left)", samples, |i| {
        let (x, xs) = &families[i];
        let lhs = S::big_sum(&xs.iter().map(|xi| x.mul(xi)).collect::<Vec<_>>());
        eq_or_witness(lhs, x.mul(&S::big_sum(xs)), || family(x, xs))
    });
    report.run("complete distributivity (right)", samples, |i| {
        let (x, xs) = &families[i];
        let lhs = S::big_sum(&xs.iter().map(|xi| xi.mul(x)).collect::<Vec<_>>());
        eq_or_witness(lhs, S::big_sum(xs).mul(x), || family(x, xs))
    });
    report.run("natural order is a partial order", samples, |i| {
        let (x, y, z) = &triples[i];
        if !x.natural_le(x) {
            return Some(format!("not reflexive at {x}"));
        }
        if x.natural_le(y) && y.natural_le(x) && x != y {
            return Some(format!("not antisymmetric: {}", show(&xyz[..2], &[x, y])));
        }
        if x.natural_le(y) && y.natural_le(z) && !x.natural_le(z) {
            return Some(format!("not transitive: {}", show(&xyz, &[x, y, z])));
        }
        None
    });
    report.run("add is the join of the natural order", samples, |i| {
        let (x, y, z) = &triples[i];
        let j = x.add(y);
        if !x.natural_le(&j) || !y.natural_le(&j) {
            return Some(format!("x + y is not an upper bound: {}", show(&xyz[..2], &[x, y])));
        }
        if x.natural_le(z) && y.natural_le(z) && !j.natural_le(z) {
            return Some(format!("x + y is not least: {}", show(&xyz, &[x, y, z])));
        }
        None
    });
    report
}

fn family<S: Semiring>(x: &S, xs: &[S]) -> String {
    let items: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("x = {x}, family = [{}]", items.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{Boolean, Lukasiewicz, SaturatingSub, Tropical};

    #[test]
    fn sound_instances_pass() {
        for report in [
            check_semiring_axioms::<Tropical>(1000, 42),
            check_semiring_axioms::<Lukasiewicz>(1000, 42),
            check_semiring_axioms::<Boolean>(1000, 42),
        ] {
            assert!(report.passed(), "{report}");
            assert_eq!(report.min_trials(), 1000);
        }
    }

    #[test]
    fn mutant_fails_with_witness() {
        let report = check_semiring_axioms::<SaturatingSub>(1000, 42);
        assert!(!report.passed());
        let dist = report.find("mul distributes over add (left)").unwrap();
        assert!(dist.witness.is_some(), "{report}");
    }

    #[test]
    fn same_seed_same_report() {
        assert_eq!(
            check_semiring_axioms::<SaturatingSub>(200, 3),
            check_semiring_axioms::<SaturatingSub>(200, 3)
        );
    }
}
