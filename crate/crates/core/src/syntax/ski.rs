//! The ski-rental program and its two rewritings, over a fixed signature.

use super::{bounded_plus, BoolExpr, Program, Signature, Weighting};

/// `program sub1 end / bool neq0 / weight one skis`
pub fn signature() -> Signature {
    Signature::new(["sub1", "end"], ["neq0"], ["one", "skis"]).expect("static signature")
}

fn neq0() -> Program {
    Program::test(BoolExpr::var("neq0"))
}

fn not_neq0() -> Program {
    Program::test(BoolExpr::var("neq0").not())
}

fn sub1() -> Program {
    Program::atomic("sub1")
}

fn end() -> Program {
    Program::atomic("end")
}

fn one() -> Program {
    Program::weight(Weighting::var("one"))
}

fn skis() -> Program {
    Program::weight(Weighting::var("skis"))
}

/// `{neq0} sub1 @one`
fn rent_step() -> Program {
    neq0().then(sub1().then(one()))
}

/// `{neq0} sub1 @skis end`
fn buy_step() -> Program {
    neq0().then(sub1().then(skis().then(end())))
}

/// `({neq0} sub1 (@one + @skis end))* {!neq0}`
pub fn loop_program() -> Program {
    neq0()
        .then(sub1().then(one().plus(skis().then(end()))))
        .star()
        .then(not_neq0())
}

/// `({neq0} sub1 @one)* ({neq0} sub1 @skis end ({neq0} sub1 @one)*)* {!neq0}`
pub fn denested() -> Program {
    let inner = neq0().then(sub1().then(skis().then(end().then(rent_step().star()))));
    rent_step()
        .star()
        .then(inner.star().then(not_neq0()))
}

/// `({neq0} sub1 @one)^{+n} (1 + {neq0} sub1 @skis end) {!neq0}`
pub fn star_free(n: usize) -> Program {
    bounded_plus(&rent_step(), n).then(Program::one().plus(buy_step()).then(not_neq0()))
}

/// The loop, its denested form, and the star-free form for trip length `n`.
pub fn build_ski_programs(n: usize) -> (Program, Program, Program) {
    (loop_program(), denested(), star_free(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    #[test]
    fn built_programs_match_source_text() {
        let sig = signature();
        let (p1, p6, p8) = build_ski_programs(2);
        assert_eq!(p1, parse("({neq0} sub1 (@one + @skis end))* {!neq0}", &sig).unwrap());
        assert_eq!(
            p6,
            parse(
                "({neq0} sub1 @one)* ({neq0} sub1 @skis end ({neq0} sub1 @one)*)* {!neq0}",
                &sig
            )
            .unwrap()
        );
        let g = "({neq0} sub1 @one)";
        let src = format!("(1 + {g} + {g} {g}) (1 + {{neq0}} sub1 @skis end) {{!neq0}}");
        assert_eq!(p8, parse(&src, &sig).unwrap());
        for p in [&p1, &p6, &p8] {
            assert!(sig.check(p).is_ok());
        }
    }

    #[test]
    fn star_free_for_zero() {
        let expected = Program::one().then(Program::one().plus(buy_step()).then(not_neq0()));
        assert_eq!(star_free(0), expected);
        assert_eq!(build_ski_programs(0).0, loop_program());
    }
}
