//! Printing in the concrete grammar; `parse` inverts it exactly.

use std::fmt::{self, Display, Formatter};

use super::{BoolExpr, Program, Weighting};

fn bool_level(b: &BoolExpr) -> u8 {
    match b {
        BoolExpr::Or(..) => 0,
        BoolExpr::And(..) => 1,
        BoolExpr::Not(_) => 2,
        _ => 3,
    }
}

fn fmt_bool(b: &BoolExpr, min: u8, f: &mut Formatter<'_>) -> fmt::Result {
    if bool_level(b) < min {
        f.write_str("(")?;
        fmt_bool(b, 0, f)?;
        return f.write_str(")");
    }
    match b {
        BoolExpr::Var(v) => f.write_str(v),
        BoolExpr::Zero => f.write_str("0"),
        BoolExpr::One => f.write_str("1"),
        BoolExpr::Or(a, c) => {
            fmt_bool(a, 1, f)?;
            f.write_str(" | ")?;
            fmt_bool(c, 0, f)
        }
        BoolExpr::And(a, c) => {
            fmt_bool(a, 2, f)?;
            f.write_str(" & ")?;
            fmt_bool(c, 1, f)
        }
        BoolExpr::Not(a) => {
            f.write_str("!")?;
            fmt_bool(a, 2, f)
        }
    }
}

fn weighting_level(w: &Weighting) -> u8 {
    match w {
        Weighting::Add(..) => 0,
        Weighting::Mul(..) => 1,
        _ => 2,
    }
}

fn fmt_weighting(w: &Weighting, min: u8, f: &mut Formatter<'_>) -> fmt::Result {
    if weighting_level(w) < min {
        f.write_str("(")?;
        fmt_weighting(w, 0, f)?;
        return f.write_str(")");
    }
    match w {
        Weighting::Var(v) => write!(f, "@{v}"),
        Weighting::Zero => f.write_str("0"),
        Weighting::One => f.write_str("1"),
        Weighting::Add(a, b) => {
            fmt_weighting(a, 1, f)?;
            f.write_str(" + ")?;
            fmt_weighting(b, 0, f)
        }
        Weighting::Mul(a, b) => {
            fmt_weighting(a, 2, f)?;
            f.write_str(" ")?;
            fmt_weighting(b, 1, f)
        }
    }
}

fn program_level(p: &Program) -> u8 {
    match p {
        Program::Plus(..) => 0,
        Program::Seq(..) => 1,
        Program::Star(_) => 2,
        _ => 3,
    }
}

fn fmt_program(p: &Program, min: u8, f: &mut Formatter<'_>) -> fmt::Result {
    if program_level(p) < min {
        f.write_str("(")?;
        fmt_program(p, 0, f)?;
        return f.write_str(")");
    }
    match p {
        Program::Atomic(a) => f.write_str(a),
        Program::Test(BoolExpr::Zero) => f.write_str("0"),
        Program::Test(BoolExpr::One) => f.write_str("1"),
        Program::Test(b) => write!(f, "{{{b}}}"),
        Program::Weight(Weighting::Var(v)) => write!(f, "@{v}"),
        Program::Weight(w) => write!(f, "@({w})"),
        Program::Plus(a, b) => {
            fmt_program(a, 1, f)?;
            f.write_str(" + ")?;
            fmt_program(b, 0, f)
        }
        Program::Seq(a, b) => {
            fmt_program(a, 2, f)?;
            f.write_str(" ")?;
            fmt_program(b, 1, f)
        }
        Program::Star(a) => {
            fmt_program(a, 2, f)?;
            f.write_str("*")
        }
    }
}

impl Display for BoolExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        fmt_bool(self, 0, f)
    }
}

impl Display for Weighting {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        fmt_weighting(self, 0, f)
    }
}

impl Display for Program {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        fmt_program(self, 0, f)
    }
}
