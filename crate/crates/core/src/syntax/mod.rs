//! Three-sorted syntax of weighted regular programs: signatures, abstract
//! syntax, the concrete grammar and its printer, and while-program sugar.

mod desugar;
mod file;
mod parser;
mod print;
pub mod ski;

use std::collections::BTreeSet;

pub use desugar::{abort, bounded_plus, if_then_else, power, seq, skip, while_do};
pub use file::{parse_equations_file, parse_program_file, EquationsFile, ProgramFile};
pub use parser::{parse, parse_bool_expr, parse_equation, ParseError, ParseErrorKind};

/// The sort a declared identifier belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sort {
    Program,
    Boolean,
    Weighting,
}

impl std::fmt::Display for Sort {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sort::Program => "atomic program",
            Sort::Boolean => "Boolean",
            Sort::Weighting => "weighting",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SignatureError {
    #[error("`{0}` is not a valid identifier")]
    InvalidIdentifier(String),
    #[error("`{name}` is declared both as {first} and as {second}")]
    Overlap { name: String, first: Sort, second: Sort },
    #[error("`{0}` is declared twice")]
    Duplicate(String),
}

/// Disjoint, ordered sets of atomic program, Boolean and weighting variables.
///
/// The order of the Boolean variables fixes the order of atom components.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Signature {
    programs: Vec<String>,
    booleans: Vec<String>,
    weightings: Vec<String>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Signature {
    pub fn new<P, B, F>(programs: P, booleans: B, weightings: F) -> Result<Self, SignatureError>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        B: IntoIterator,
        B::Item: Into<String>,
        F: IntoIterator,
        F::Item: Into<String>,
    {
        let mut sig = Signature::default();
        for name in programs {
            sig.declare(Sort::Program, name.into())?;
        }
        for name in booleans {
            sig.declare(Sort::Boolean, name.into())?;
        }
        for name in weightings {
            sig.declare(Sort::Weighting, name.into())?;
        }
        Ok(sig)
    }

    pub fn declare(&mut self, sort: Sort, name: String) -> Result<(), SignatureError> {
        if !is_identifier(&name) {
            return Err(SignatureError::InvalidIdentifier(name));
        }
        match self.sort_of(&name) {
            Some(s) if s == sort => return Err(SignatureError::Duplicate(name)),
            Some(first) => {
                return Err(SignatureError::Overlap {
                    name,
                    first,
                    second: sort,
                })
            }
            None => {}
        }
        match sort {
            Sort::Program => self.programs.push(name),
            Sort::Boolean => self.booleans.push(name),
            Sort::Weighting => self.weightings.push(name),
        }
        Ok(())
    }

    pub fn programs(&self) -> &[String] {
        &self.programs
    }

    pub fn booleans(&self) -> &[String] {
        &self.booleans
    }

    pub fn weightings(&self) -> &[String] {
        &self.weightings
    }

    pub fn sort_of(&self, name: &str) -> Option<Sort> {
        if self.programs.iter().any(|p| p == name) {
            Some(Sort::Program)
        } else if self.booleans.iter().any(|b| b == name) {
            Some(Sort::Boolean)
        } else if self.weightings.iter().any(|f| f == name) {
            Some(Sort::Weighting)
        } else {
            None
        }
    }

    pub fn program_index(&self, name: &str) -> Option<usize> {
        self.programs.iter().position(|p| p == name)
    }

    pub fn boolean_index(&self, name: &str) -> Option<usize> {
        self.booleans.iter().position(|b| b == name)
    }

    pub fn weighting_index(&self, name: &str) -> Option<usize> {
        self.weightings.iter().position(|f| f == name)
    }

    /// Checks that every variable in `p` is declared with the sort it is used at.
    pub fn check(&self, p: &Program) -> Result<(), SortCheckError> {
        let mut result = Ok(());
        p.visit_vars(&mut |sort, name| {
            if result.is_err() {
                return;
            }
            match self.sort_of(name) {
                None => result = Err(SortCheckError::Undeclared(name.to_string())),
                Some(actual) if actual != sort => {
                    result = Err(SortCheckError::Clash {
                        name: name.to_string(),
                        declared: actual,
                        used: sort,
                    })
                }
                Some(_) => {}
            }
        });
        result
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SortCheckError {
    #[error("undeclared identifier `{0}`")]
    Undeclared(String),
    #[error("sort error: `{name}` is declared as {declared} but used as {used}")]
    Clash { name: String, declared: Sort, used: Sort },
}

/// Boolean expressions: `b | 0 | 1 | b·c | b + c | ¬b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoolExpr {
    Var(String),
    Zero,
    One,
    And(Box<BoolExpr>, Box<BoolExpr>),
    Or(Box<BoolExpr>, Box<BoolExpr>),
    Not(Box<BoolExpr>),
}

impl BoolExpr {
    pub fn var(name: impl Into<String>) -> Self {
        BoolExpr::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        BoolExpr::Not(Box::new(self))
    }

    pub fn and(self, rhs: BoolExpr) -> Self {
        BoolExpr::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: BoolExpr) -> Self {
        BoolExpr::Or(Box::new(self), Box::new(rhs))
    }

    /// Evaluates under an assignment of truth values to variables.
    pub fn eval(&self, env: &impl Fn(&str) -> bool) -> bool {
        match self {
            BoolExpr::Var(v) => env(v),
            BoolExpr::Zero => false,
            BoolExpr::One => true,
            BoolExpr::And(a, b) => a.eval(env) && b.eval(env),
            BoolExpr::Or(a, b) => a.eval(env) || b.eval(env),
            BoolExpr::Not(a) => !a.eval(env),
        }
    }

    fn size(&self) -> usize {
        match self {
            BoolExpr::Var(_) | BoolExpr::Zero | BoolExpr::One => 1,
            BoolExpr::And(a, b) | BoolExpr::Or(a, b) => 1 + a.size() + b.size(),
            BoolExpr::Not(a) => 1 + a.size(),
        }
    }

    pub(crate) fn visit_vars(&self, f: &mut impl FnMut(Sort, &str)) {
        match self {
            BoolExpr::Var(v) => f(Sort::Boolean, v),
            BoolExpr::Zero | BoolExpr::One => {}
            BoolExpr::And(a, b) | BoolExpr::Or(a, b) => {
                a.visit_vars(f);
                b.visit_vars(f);
            }
            BoolExpr::Not(a) => a.visit_vars(f),
        }
    }
}

/// Weightings: `f | 0 | 1 | f·g | f + g`. There is no negation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Weighting {
    Var(String),
    Zero,
    One,
    Mul(Box<Weighting>, Box<Weighting>),
    Add(Box<Weighting>, Box<Weighting>),
}

impl Weighting {
    pub fn var(name: impl Into<String>) -> Self {
        Weighting::Var(name.into())
    }

    pub fn mul(self, rhs: Weighting) -> Self {
        Weighting::Mul(Box::new(self), Box::new(rhs))
    }

    pub fn add(self, rhs: Weighting) -> Self {
        Weighting::Add(Box::new(self), Box::new(rhs))
    }

    /// Evaluates in a semiring given the values of the weighting variables.
    pub fn eval<S: crate::Semiring>(&self, env: &impl Fn(&str) -> S) -> S {
        match self {
            Weighting::Var(v) => env(v),
            Weighting::Zero => S::zero(),
            Weighting::One => S::one(),
            Weighting::Mul(a, b) => a.eval(env).mul(&b.eval(env)),
            Weighting::Add(a, b) => a.eval(env).add(&b.eval(env)),
        }
    }

    fn size(&self) -> usize {
        match self {
            Weighting::Var(_) | Weighting::Zero | Weighting::One => 1,
            Weighting::Mul(a, b) | Weighting::Add(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub(crate) fn visit_vars(&self, f: &mut impl FnMut(Sort, &str)) {
        match self {
            Weighting::Var(v) => f(Sort::Weighting, v),
            Weighting::Zero | Weighting::One => {}
            Weighting::Mul(a, b) | Weighting::Add(a, b) => {
                a.visit_vars(f);
                b.visit_vars(f);
            }
        }
    }
}

/// Programs: `p | b | f | p + q | p·q | p*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Program {
    Atomic(String),
    Test(BoolExpr),
    Weight(Weighting),
    Plus(Box<Program>, Box<Program>),
    Seq(Box<Program>, Box<Program>),
    Star(Box<Program>),
}

impl Program {
    pub fn atomic(name: impl Into<String>) -> Self {
        Program::Atomic(name.into())
    }

    pub fn test(b: BoolExpr) -> Self {
        Program::Test(b)
    }

    pub fn weight(f: Weighting) -> Self {
        Program::Weight(f)
    }

    pub fn one() -> Self {
        Program::Test(BoolExpr::One)
    }

    pub fn zero() -> Self {
        Program::Test(BoolExpr::Zero)
    }

    pub fn plus(self, rhs: Program) -> Self {
        Program::Plus(Box::new(self), Box::new(rhs))
    }

    pub fn then(self, rhs: Program) -> Self {
        Program::Seq(Box::new(self), Box::new(rhs))
    }

    pub fn star(self) -> Self {
        Program::Star(Box::new(self))
    }

    /// Number of AST nodes across all three sorts.
    pub fn size(&self) -> usize {
        match self {
            Program::Atomic(_) => 1,
            Program::Test(b) => b.size(),
            Program::Weight(f) => f.size(),
            Program::Plus(a, b) | Program::Seq(a, b) => 1 + a.size() + b.size(),
            Program::Star(a) => 1 + a.size(),
        }
    }

    pub fn contains_star(&self) -> bool {
        match self {
            Program::Star(_) => true,
            Program::Plus(a, b) | Program::Seq(a, b) => a.contains_star() || b.contains_star(),
            _ => false,
        }
    }

    pub fn is_weighting_free(&self) -> bool {
        match self {
            Program::Weight(_) => false,
            Program::Plus(a, b) | Program::Seq(a, b) => {
                a.is_weighting_free() && b.is_weighting_free()
            }
            Program::Star(a) => a.is_weighting_free(),
            _ => true,
        }
    }

    /// Longest number of atomic program steps in any trace, or `None` when a
    /// star makes traces unbounded.
    pub fn max_trace_len(&self) -> Option<usize> {
        match self {
            Program::Atomic(_) => Some(1),
            Program::Test(_) | Program::Weight(_) => Some(0),
            Program::Plus(a, b) => Some(a.max_trace_len()?.max(b.max_trace_len()?)),
            Program::Seq(a, b) => Some(a.max_trace_len()? + b.max_trace_len()?),
            Program::Star(_) => None,
        }
    }

    /// Atomic program, Boolean and weighting variables, each with its sort.
    pub fn variables(&self) -> BTreeSet<(String, &'static str)> {
        let mut out = BTreeSet::new();
        self.visit_vars(&mut |sort, name| {
            let tag = match sort {
                Sort::Program => "program",
                Sort::Boolean => "bool",
                Sort::Weighting => "weight",
            };
            out.insert((name.to_string(), tag));
        });
        out
    }

    pub(crate) fn visit_vars(&self, f: &mut impl FnMut(Sort, &str)) {
        match self {
            Program::Atomic(p) => f(Sort::Program, p),
            Program::Test(b) => b.visit_vars(f),
            Program::Weight(w) => w.visit_vars(f),
            Program::Plus(a, b) | Program::Seq(a, b) => {
                a.visit_vars(f);
                b.visit_vars(f);
            }
            Program::Star(a) => a.visit_vars(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_rejects_overlap_and_duplicates() {
        assert!(matches!(
            Signature::new(["a"], ["a"], Vec::<String>::new()),
            Err(SignatureError::Overlap { .. })
        ));
        assert!(matches!(
            Signature::new(["a", "a"], Vec::<String>::new(), Vec::<String>::new()),
            Err(SignatureError::Duplicate(_))
        ));
        assert!(matches!(
            Signature::new(["1x"], Vec::<String>::new(), Vec::<String>::new()),
            Err(SignatureError::InvalidIdentifier(_))
        ));
    }

    #[test]
    fn sort_check_reports_clashes() {
        let sig = ski::signature();
        let bad = Program::atomic("neq0");
        assert!(matches!(sig.check(&bad), Err(SortCheckError::Clash { .. })));
        let undeclared = Program::weight(Weighting::var("bogus"));
        assert_eq!(
            sig.check(&undeclared),
            Err(SortCheckError::Undeclared("bogus".into()))
        );
        assert!(sig.check(&ski::loop_program()).is_ok());
    }

    #[test]
    fn trace_length() {
        let (_, _, star_free) = ski::build_ski_programs(3);
        assert_eq!(star_free.max_trace_len(), Some(5));
        assert_eq!(ski::loop_program().max_trace_len(), None);
    }
}
