mod common;

use std::collections::{BTreeMap, BTreeSet};

use kawt::relational::{interpret, Relation, TransitionSystem};
use kawt::{Boolean, Tropical};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_two_state_systems() -> Vec<common::Kripke> {
    let pairs: Vec<(usize, usize)> = (0..2).flat_map(|a| (0..2).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for rel_mask in 0..16u32 {
        for bool_mask in 0..4u32 {
            let rel: BTreeSet<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| rel_mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let marked: BTreeSet<_> = (0..2).filter(|s| bool_mask >> s & 1 == 1).collect();
            out.push(common::Kripke {
                states: 2,
                programs: BTreeMap::from([("p".to_string(), rel)]),
                booleans: BTreeMap::from([("b".to_string(), marked)]),
            });
        }
    }
    out
}

fn to_system(k: &common::Kripke) -> TransitionSystem<Boolean> {
    TransitionSystem::new((0..k.states).map(|i| format!("s{i}")))
        .unwrap()
        .with_program("p", k.programs["p"].iter().copied())
        .unwrap()
        .with_boolean("b", k.booleans["b"].iter().copied())
        .unwrap()
}

#[test]
fn boolean_interpretation_matches_classical_relations() {
    let programs = common::programs_up_to(&["p"], &["b"], 6);
    for k in all_two_state_systems() {
        let m = to_system(&k);
        for p in &programs {
            let ours = interpret(p, &m, None).unwrap();
            let expected = common::classical_relation(p, &k);
            let ours: BTreeSet<_> = ours
                .entries()
                .filter(|(_, _, v)| v.0)
                .map(|(i, j, _)| (i, j))
                .collect();
            assert_eq!(ours, expected, "{p} on {k:?}");
        }
    }
}

#[test]
fn boolean_star_is_reflexive_transitive_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let pairs: BTreeSet<(usize, usize)> = (0..4)
            .flat_map(|a| (0..4).map(move |b| (a, b)))
            .filter(|_| rng.gen_ratio(1, 4))
            .collect();
        let r = Relation::<Boolean>::from_pairs(4, pairs.iter().copied());
        let closure = common::reflexive_transitive_closure(4, &pairs);
        let star = r.star(r.default_cap()).unwrap();
        assert_eq!(star, Relation::from_pairs(4, closure.iter().copied()));
    }
}

#[test]
fn tropical_star_is_all_pairs_cheapest_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let w: Vec<Vec<Option<u64>>> = (0..4)
            .map(|_| (0..4).map(|_| rng.gen_bool(0.5).then(|| rng.gen_range(0..20))).collect())
            .collect();
        let r = Relation::from_fn(4, |i, j| w[i][j].map_or(Tropical::Infinity, Tropical::Finite));
        let d = common::min_plus_closure(&w);
        let star = r.star(r.default_cap()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(star.get(i, j).finite(), d[i][j]);
            }
        }
    }
}
