mod common;

use std::collections::BTreeMap;

use kawt::equivalence::{
    bounded_equiv, equiv_under_zero_hypotheses, filter_factors, model_equiv, ski_case_study, ski_chain_model,
    ski_hypotheses, ski_valuation, Counterexample, EquivError, Hypothesis,
};
use kawt::guarded::{canonical_valuation, gt_interpret};
use kawt::relational::TransitionSystem;
use kawt::syntax::{parse, ski, Program, Signature};
use kawt::{Boolean, Tropical};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn conditioned_equivalence_of_the_ski_forms() {
    for y in [1, 3, 7] {
        let v = ski_valuation(y);
        for n in 0..=4 {
            let bound = 2 * n + 4;
            let verdict = equiv_under_zero_hypotheses(&ski::denested(), &ski::star_free(n), &ski_hypotheses(n), &v, bound).unwrap();
            assert!(verdict.equal, "n = {n}, y = {y}: {verdict}");
            let plain = bounded_equiv(&ski::denested(), &ski::star_free(n), &v, bound).unwrap();
            assert!(!plain.equal, "n = {n}: {plain}");
        }
    }
}

#[test]
fn loop_and_star_free_form_agree_on_chains() {
    for (n, y) in [(3, 2), (2, 5), (0, 1), (4, 4)] {
        let chain = ski_chain_model(n, y);
        let verdict = model_equiv(&ski::loop_program(), &ski::star_free(n), &ski_hypotheses(n), &[chain], None).unwrap();
        assert!(verdict.equal, "{verdict}");
    }
}

#[test]
fn violated_hypothesis_is_a_precondition_error() {
    // in the 3-chain, two decrements from s3 still leave neq0 true
    let err = model_equiv(&ski::loop_program(), &ski::star_free(2), &ski_hypotheses(2), &[ski_chain_model(3, 2)], None).unwrap_err();
    assert!(matches!(err, EquivError::HypothesisViolated { .. }), "{err}");
}

fn random_boolean_model(rng: &mut ChaCha8Rng, i: usize) -> TransitionSystem<Boolean> {
    let pairs: Vec<(usize, usize)> = (0..3)
        .flat_map(|a| (0..3).map(move |b| (a, b)))
        .filter(|_| rng.gen())
        .collect();
    let marked: Vec<usize> = (0..3).filter(|_| rng.gen()).collect();
    TransitionSystem::new(["x", "y", "z"])
        .unwrap()
        .with_program("p", pairs)
        .unwrap()
        .with_program("q", [(0, 1), (1, 2)])
        .unwrap()
        .with_boolean("b", marked)
        .unwrap()
        .named(format!("random{i}"))
}

#[test]
fn model_family_verdicts() {
    let sig = Signature::new(["p", "q"], ["b"], Vec::<String>::new()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let models: Vec<_> = (0..10).map(|i| random_boolean_model(&mut rng, i)).collect();
    let p = parse("({b} p)* q + p", &sig).unwrap();
    let verdict = model_equiv(&p, &p.clone().then(Program::one()), &[], &models, None).unwrap();
    assert!(verdict.equal);
    let dropped = parse("({b} p)* q", &sig).unwrap();
    let verdict = model_equiv(&p, &dropped, &[], &models, None).unwrap();
    assert!(!verdict.equal);
    assert!(matches!(verdict.counterexample, Some(Counterexample::Entry { .. })), "{verdict}");
}

#[test]
fn refutations_persist_at_larger_bounds() {
    let v = ski_valuation(4);
    let first = bounded_equiv(&ski::denested(), &ski::star_free(1), &v, 3).unwrap();
    assert!(!first.equal);
    for k in 4..9 {
        let later = bounded_equiv(&ski::denested(), &ski::star_free(1), &v, k).unwrap();
        assert!(!later.equal);
        assert_eq!(later.counterexample, first.counterexample);
    }
}

#[test]
fn hypothesis_filter_commutes_with_union() {
    let v = ski_valuation(2);
    let forbidden: Vec<_> = ski_hypotheses(2)
        .iter()
        .map(|h| gt_interpret(h.lhs(), &v, 6).unwrap())
        .collect();
    let a = gt_interpret(&ski::denested(), &v, 6).unwrap();
    let b = gt_interpret(&ski::star_free(3), &v, 6).unwrap();
    assert_eq!(
        filter_factors(&a.union(&b), &forbidden),
        filter_factors(&a, &forbidden).union(&filter_factors(&b, &forbidden))
    );
}

#[test]
fn ski_grid_against_run_enumeration() {
    for n in 0..=8 {
        for y in 0..=8 {
            let r = ski_case_study(n, y);
            let runs = common::ski_runs_min(n as u64, y);
            assert_eq!(runs, r.expected());
            assert_eq!(r.relational, Tropical::Finite(runs), "{r}");
            assert_eq!(r.realizable_min, Some(runs), "{r}");
            assert_eq!(r.theta_from_not_neq0, Some(0), "{r}");
            // the guarded reading has no counter: see the θ note in the README
            let literal = if n == 0 { y } else { y.min(1) };
            assert_eq!(r.theta_from_neq0, Some(literal), "{r}");
        }
    }
}

#[test]
fn bounded_equivalence_agrees_with_classical_kat_on_small_programs() {
    let sig = Signature::new(["p"], ["b"], Vec::<String>::new()).unwrap();
    let v = canonical_valuation(&sig, &BTreeMap::new()).unwrap();
    let programs = common::programs_up_to(&["p"], &["b"], 4);
    let bound = 3;
    let ours: Vec<_> = programs.iter().map(|p| gt_interpret(p, &v, bound).unwrap()).collect();
    let theirs: Vec<_> = programs
        .iter()
        .map(|p| common::classical_traces(p, &["b"], &["p"], bound))
        .collect();
    for i in 0..programs.len() {
        for j in i..programs.len() {
            assert_eq!(ours[i] == ours[j], theirs[i] == theirs[j], "{} vs {}", programs[i], programs[j]);
        }
    }
    let verdict = bounded_equiv(&programs[0], &programs[0].clone().plus(Program::zero()), &v, bound).unwrap();
    assert!(verdict.equal);
}

#[test]
fn malformed_hypotheses_are_rejected() {
    let sig = ski::signature();
    assert!(Hypothesis::new(parse("sub1 @one", &sig).unwrap(), Program::zero()).is_err());
    assert!(Hypothesis::new(parse("sub1", &sig).unwrap(), parse("end", &sig).unwrap()).is_err());
}
