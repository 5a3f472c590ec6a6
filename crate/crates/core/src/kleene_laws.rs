//! Law checks shared by every concrete Kleene algebra with tests in the
//! crate: the idempotent-semiring laws, unfolding and induction for star,
//! sampled *-continuity, and the Boolean algebra of tests.

use crate::report::Report;
use crate::sampling::SuiteRng;

pub(crate) trait Algebra {
    type Elem: Clone + PartialEq;

    fn one(&self) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// The star and the number of partial sums needed before it stabilised.
    fn star_with_index(&self, x: &Self::Elem) -> Result<(Self::Elem, usize), String>;
    fn neg(&self, x: &Self::Elem) -> Option<Self::Elem>;
    fn is_test(&self, x: &Self::Elem) -> bool;
    fn sample(&self, rng: &mut SuiteRng) -> Self::Elem;
    fn sample_test(&self, rng: &mut SuiteRng) -> Self::Elem;
    fn show(&self, x: &Self::Elem) -> String;

    fn le(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.add(x, y) == *y
    }
}

fn show_all<A: Algebra>(alg: &A, named: &[(&str, &A::Elem)]) -> String {
    named
        .iter()
        .map(|(n, x)| format!("{n} = {}", alg.show(x)))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Records every shared law on `samples` random instances drawn from `rng`.
pub(crate) fn check_kleene_laws<A: Algebra>(alg: &A, samples: usize, rng: &mut SuiteRng, report: &mut Report) {
    let one = alg.one();
    let zero = alg.zero();
    let triples: Vec<[A::Elem; 3]> = (0..samples)
        .map(|_| std::array::from_fn(|_| alg.sample(rng)))
        .collect();
    let w3 = |x: &A::Elem, y: &A::Elem, z: &A::Elem| show_all(alg, &[("x", x), ("y", y), ("z", z)]);
    let w1 = |x: &A::Elem| show_all(alg, &[("x", x)]);

    report.run("add is associative", samples, |i| {
        let [x, y, z] = &triples[i];
        (alg.add(&alg.add(x, y), z) != alg.add(x, &alg.add(y, z))).then(|| w3(x, y, z))
    });
    report.run("add is commutative", samples, |i| {
        let [x, y, z] = &triples[i];
        (alg.add(x, y) != alg.add(y, x)).then(|| w3(x, y, z))
    });
    report.run("add is idempotent with neutral 0", samples, |i| {
        let x = &triples[i][0];
        (alg.add(x, x) != *x || alg.add(x, &zero) != *x).then(|| w1(x))
    });
    report.run("mul is associative", samples, |i| {
        let [x, y, z] = &triples[i];
        (alg.mul(&alg.mul(x, y), z) != alg.mul(x, &alg.mul(y, z))).then(|| w3(x, y, z))
    });
    report.run("1 is neutral for mul", samples, |i| {
        let x = &triples[i][0];
        (alg.mul(x, &one) != *x || alg.mul(&one, x) != *x).then(|| w1(x))
    });
    report.run("mul distributes over add", samples, |i| {
        let [x, y, z] = &triples[i];
        if alg.mul(x, &alg.add(y, z)) != alg.add(&alg.mul(x, y), &alg.mul(x, z)) {
            return Some(format!("left: {}", w3(x, y, z)));
        }
        (alg.mul(&alg.add(x, y), z) != alg.add(&alg.mul(x, z), &alg.mul(y, z)))
            .then(|| format!("right: {}", w3(x, y, z)))
    });
    report.run("0 annihilates", samples, |i| {
        let x = &triples[i][0];
        (alg.mul(x, &zero) != zero || alg.mul(&zero, x) != zero).then(|| w1(x))
    });

    let star = |x: &A::Elem| alg.star_with_index(x).map_err(|e| format!("{e}: {}", w1(x)));
    report.run("1 + x·x* ≤ x* and 1 + x*·x ≤ x*", samples, |i| {
        let x = &triples[i][0];
        let s = match star(x) {
            Ok((s, _)) => s,
            Err(e) => return Some(e),
        };
        if !alg.le(&alg.add(&one, &alg.mul(x, &s)), &s) {
            return Some(format!("left unfolding: {}", w1(x)));
        }
        (!alg.le(&alg.add(&one, &alg.mul(&s, x)), &s)).then(|| format!("right unfolding: {}", w1(x)))
    });
    report.run("x* = 1 + x·x*", samples, |i| {
        let x = &triples[i][0];
        match star(x) {
            Ok((s, _)) => (alg.add(&one, &alg.mul(x, &s)) != s).then(|| w1(x)),
            Err(e) => Some(e),
        }
    });
    report.run("y + x·z ≤ z implies x*·y ≤ z", samples, |i| {
        let [x, y, w] = &triples[i];
        let s = match star(x) {
            Ok((s, _)) => s,
            Err(e) => return Some(e),
        };
        // a random candidate, then one that meets the premise by construction
        for z in [w.clone(), alg.mul(&s, &alg.add(y, w))] {
            if alg.le(&alg.add(y, &alg.mul(x, &z)), &z) && !alg.le(&alg.mul(&s, y), &z) {
                return Some(w3(x, y, &z));
            }
        }
        None
    });
    report.run("y + z·x ≤ z implies y·x* ≤ z", samples, |i| {
        let [x, y, w] = &triples[i];
        let s = match star(x) {
            Ok((s, _)) => s,
            Err(e) => return Some(e),
        };
        for z in [w.clone(), alg.mul(&alg.add(y, w), &s)] {
            if alg.le(&alg.add(y, &alg.mul(&z, x)), &z) && !alg.le(&alg.mul(y, &s), &z) {
                return Some(w3(x, y, &z));
            }
        }
        None
    });
    report.run("*-continuity: x·y*·z = Σ_{n≤K} x·yⁿ·z", samples, |i| {
        let [x, y, z] = &triples[i];
        let (s, k) = match alg.star_with_index(y) {
            Ok(r) => r,
            Err(e) => return Some(format!("{e}: {}", show_all(alg, &[("y", y)]))),
        };
        let lhs = alg.mul(&alg.mul(x, &s), z);
        let mut power = one.clone();
        let mut rhs = zero.clone();
        // one power past K as well, to confirm the sum has settled
        for _ in 0..=k + 1 {
            rhs = alg.add(&rhs, &alg.mul(&alg.mul(x, &power), z));
            power = alg.mul(&power, y);
        }
        (lhs != rhs).then(|| format!("K = {k}, {}", w3(x, y, z)))
    });

    let tests: Vec<[A::Elem; 3]> = (0..samples)
        .map(|_| std::array::from_fn(|_| alg.sample_test(rng)))
        .collect();
    let t2 = |b: &A::Elem, c: &A::Elem| show_all(alg, &[("b", b), ("c", c)]);
    report.run("tests are closed under add, mul and complement", samples, |i| {
        let [b, c, _] = &tests[i];
        let closed = alg.is_test(b)
            && alg.is_test(&alg.add(b, c))
            && alg.is_test(&alg.mul(b, c))
            && alg.neg(b).is_some_and(|n| alg.is_test(&n));
        (!closed).then(|| t2(b, c))
    });
    report.run("on tests mul is meet and add is join", samples, |i| {
        let [b, c, d] = &tests[i];
        if alg.mul(b, c) != alg.mul(c, b) {
            return Some(format!("commutativity: {}", t2(b, c)));
        }
        if alg.mul(b, b) != *b {
            return Some(format!("idempotency: {}", t2(b, c)));
        }
        if alg.add(b, &alg.mul(b, c)) != *b {
            return Some(format!("absorption: {}", t2(b, c)));
        }
        (alg.add(b, &alg.mul(c, d)) != alg.mul(&alg.add(b, c), &alg.add(b, d)))
            .then(|| format!("distributivity: {}", show_all(alg, &[("b", b), ("c", c), ("d", d)])))
    });
    report.run("complement is Boolean negation on tests", samples, |i| {
        let [b, c, _] = &tests[i];
        let (Some(nb), Some(nc)) = (alg.neg(b), alg.neg(c)) else {
            return Some(format!("complement undefined: {}", t2(b, c)));
        };
        if alg.add(b, &nb) != one || alg.mul(b, &nb) != zero {
            return Some(format!("excluded middle: {}", t2(b, c)));
        }
        if alg.neg(&nb).as_ref() != Some(b) {
            return Some(format!("involution: {}", t2(b, c)));
        }
        (alg.neg(&alg.add(b, c)) != Some(alg.mul(&nb, &nc))).then(|| format!("De Morgan: {}", t2(b, c)))
    });
}
