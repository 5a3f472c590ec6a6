//! Replays the checked-in fuzz corpus through the fuzz targets' invariants.

use std::fs;
use std::path::PathBuf;

#[path = "../../../fuzz/checks.rs"]
mod checks;

fn replay(target: &str, check: fn(&str)) {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut seen = 0;
    for entry in fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let bytes = fs::read(&path).unwrap();
        if let Ok(text) = std::str::from_utf8(&bytes) {
            check(text);
        }
        seen += 1;
    }
    assert!(seen > 0, "no seeds in {}", dir.display());
}

#[test]
fn program_file_seeds() {
    replay("program_file", checks::program_file);
}

#[test]
fn program_seeds() {
    replay("program", checks::program);
}

#[test]
fn model_file_seeds() {
    replay("model_file", checks::model_file);
}

#[test]
fn equations_file_seeds() {
    replay("equations_file", checks::equations_file);
}

#[test]
fn bool_expr_seeds() {
    replay("bool_expr", checks::bool_expr);
}

mod random_inputs {
    use super::checks;
    use proptest::prelude::*;

    const TOKENS: &[&str] = &[
        "sub1", "end", "neq0", "one", "skis", "a", "b", "p", "@", "{", "}", "(", ")", "!", "&", "|", "+", ";", "*",
        "^", "2", "0", "1", "=", " ", "\n", "---", "program", "bool", "weight", "states", "semiring", "tropical",
        "prog", ":", ",", "s0", "s1", "inf", "3/4", "#",
    ];

    fn text() -> impl Strategy<Value = String> {
        prop::collection::vec(prop::sample::select(TOKENS), 0..40).prop_map(|ts| ts.join(""))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn token_soup(s in text()) {
            checks::program_file(&s);
            checks::program(&s);
            checks::model_file(&s);
            checks::equations_file(&s);
            checks::bool_expr(&s);
        }

        #[test]
        fn arbitrary_strings(s in ".{0,60}") {
            checks::program_file(&s);
            checks::program(&s);
            checks::model_file(&s);
            checks::equations_file(&s);
            checks::bool_expr(&s);
        }
    }
}
