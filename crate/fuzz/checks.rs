//! Invariants checked on every fuzz input; shared with the corpus replay test.

#![allow(dead_code)]

use kawt::equivalence::{ski_chain_model, ski_valuation, Hypothesis};
use kawt::guarded::{gt_interpret, GuardedAlphabet};
use kawt::relational::{interpret, parse_model_file, AnyModel, EvalError};
use kawt::syntax::{parse, parse_bool_expr, parse_equations_file, parse_program_file, ski, Signature};

pub fn program_file(text: &str) {
    if let Ok(file) = parse_program_file(text) {
        assert!(file.signature.check(&file.program).is_ok());
        let printed = file.program.to_string();
        let again = parse(&printed, &file.signature).expect("printed programs parse");
        assert_eq!(again, file.program, "{printed}");
    }
}

pub fn program(text: &str) {
    let sig = ski::signature();
    let Ok(p) = parse(text, &sig) else {
        return;
    };
    assert_eq!(parse(&p.to_string(), &sig).as_ref(), Ok(&p));
    if p.size() > 2_000 {
        return;
    }
    let lang = gt_interpret(&p, &ski_valuation(3), 2).expect("canonical valuation covers the signature");
    assert!(lang.max_len() <= 2);
    match interpret(&p, &ski_chain_model(2, 3), None) {
        Ok(r) => assert_eq!(r.size(), 3),
        Err(EvalError::Star(_)) => {}
        Err(e) => panic!("{e}"),
    }
}

pub fn model_file(text: &str) {
    if let Ok(model) = parse_model_file(text) {
        assert!(!model.states().is_empty());
        let covered = match &model {
            AnyModel::Bool(m) => m.covers(&m.signature()),
            AnyModel::Tropical(m) => m.covers(&m.signature()),
            AnyModel::Lukasiewicz(m) => m.covers(&m.signature()),
        };
        assert!(covered.is_ok());
    }
}

pub fn equations_file(text: &str) {
    if let Ok(file) = parse_equations_file(text, &ski::signature()) {
        assert!(!file.equations.is_empty());
        for (lhs, rhs) in file.equations {
            let _ = Hypothesis::new(lhs, rhs);
        }
    }
}

pub fn bool_expr(text: &str) {
    let sig = Signature::new(["p"], ["a", "b", "c"], ["w"]).unwrap();
    if let Ok(b) = parse_bool_expr(text, &sig) {
        assert_eq!(parse_bool_expr(&b.to_string(), &sig).as_ref(), Ok(&b));
    }
    let al = GuardedAlphabet::from_signature(&sig).unwrap();
    if let Ok(atoms) = al.parse_atom_spec(text) {
        assert!(atoms.windows(2).all(|w| w[0] < w[1]));
        assert!(atoms.len() <= al.atom_count());
    }
}
