mod common;

use std::collections::BTreeMap;

use kawt::guarded::{
    canonical_valuation, extract_weight, gt_interpret, Atom, GuardedAlphabet, GuardedString, Language,
};
use kawt::syntax::Signature;
use kawt::{Semiring, Tropical};
use proptest::prelude::*;

fn alphabet() -> GuardedAlphabet {
    GuardedAlphabet::new(["b"], ["p", "q"]).unwrap()
}

fn language(max_len: usize) -> impl Strategy<Value = Language> {
    let strings = alphabet().strings_up_to(max_len);
    prop::collection::vec((prop::sample::select(strings), 0u64..6), 0..8)
        .prop_map(|entries| entries.into_iter().collect())
}

const BOUND: usize = 4;

proptest! {
    #[test]
    fn product_is_associative(x in language(2), y in language(2), z in language(2)) {
        let lhs = x.product_bounded(&y, Some(BOUND)).product_bounded(&z, Some(BOUND));
        let rhs = x.product_bounded(&y.product_bounded(&z, Some(BOUND)), Some(BOUND));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_distributes_over_union(x in language(2), y in language(2), z in language(2)) {
        prop_assert_eq!(x.product(&y.union(&z)), x.product(&y).union(&x.product(&z)));
        prop_assert_eq!(y.union(&z).product(&x), y.product(&x).union(&z.product(&x)));
    }

    #[test]
    fn union_is_a_semilattice(x in language(2), y in language(2), z in language(2)) {
        prop_assert_eq!(x.union(&x), x.clone());
        prop_assert_eq!(x.union(&y), y.union(&x));
        prop_assert_eq!(x.union(&y).union(&z), x.union(&y.union(&z)));
        prop_assert_eq!(x.union(&Language::empty()), x);
    }

    #[test]
    fn star_unfolds(x in language(2)) {
        let al = alphabet();
        let s = x.star(&al, BOUND);
        let unfolded = Language::unit(&al).union(&x.product_bounded(&s, Some(BOUND)));
        prop_assert_eq!(unfolded, s);
    }

    #[test]
    fn truncation_is_sound(x in language(2), y in language(1), k in 0usize..4) {
        let al = alphabet();
        let big = 6;
        prop_assert_eq!(x.star(&al, big).truncate(k), x.star(&al, k));
        prop_assert_eq!(x.product_bounded(&y, Some(big)).truncate(k), x.product_bounded(&y, Some(k)));
    }

    #[test]
    fn constant_languages_mirror_the_tropical_semiring(u in 0u64..50, v in 0u64..50) {
        let al = alphabet();
        let (lu, lv) = (Language::constant(&al, u), Language::constant(&al, v));
        let w = |l: &Language| extract_weight(l, &al).expect("weight");
        prop_assert_eq!(w(&lu.product(&lv)), Tropical::Finite(u).mul(&Tropical::Finite(v)));
        prop_assert_eq!(w(&lu.union(&lv)), Tropical::Finite(u).add(&Tropical::Finite(v)));
        prop_assert!(lu.product(&lv).is_weight(&al));
        prop_assert_eq!(w(&Language::empty()), Tropical::zero());
        prop_assert_eq!(w(&Language::unit(&al)), Tropical::one());
    }
}

fn to_trace(s: &GuardedString) -> common::Trace {
    let mut t = vec![s.first().0];
    for (p, Atom(a)) in s.actions().iter().zip(&s.atoms()[1..]) {
        t.push(*p as u32);
        t.push(*a);
    }
    t
}

#[test]
fn crisp_interpretation_matches_classical_guarded_strings() {
    let sig = Signature::new(["p"], ["b"], Vec::<String>::new()).unwrap();
    let v = canonical_valuation(&sig, &BTreeMap::new()).unwrap();
    let programs = common::programs_up_to(&["p"], &["b"], 6);
    assert!(programs.len() > 1000);
    for bound in [0, 1, 3] {
        for p in &programs {
            let lang = gt_interpret(p, &v, bound).unwrap();
            assert!(lang.is_crisp(), "{p}");
            let ours: std::collections::BTreeSet<_> = lang.iter().map(|(s, _)| to_trace(s)).collect();
            let oracle = common::classical_traces(p, &["b"], &["p"], bound);
            assert_eq!(ours, oracle, "{p} at bound {bound}");
        }
    }
}

#[test]
fn interpretation_is_truncation_sound() {
    let sig = kawt::syntax::ski::signature();
    let weights = BTreeMap::from([("one".to_string(), 1), ("skis".to_string(), 3)]);
    let v = canonical_valuation(&sig, &weights).unwrap();
    for p in [kawt::syntax::ski::loop_program(), kawt::syntax::ski::denested(), kawt::syntax::ski::star_free(2)] {
        let wide = gt_interpret(&p, &v, 7).unwrap();
        for k in 0..7 {
            assert_eq!(wide.truncate(k), gt_interpret(&p, &v, k).unwrap(), "{p} at {k}");
        }
    }
}
