//! Recursive-descent parser for the concrete program grammar.
//!
//! ```text
//! program  := seq ('+' program)?
//! seq      := postfix (';'? seq)?
//! postfix  := primary ('*' | '^' NUM)*
//! primary  := IDENT | '@' IDENT | '@' '(' weighting ')' | '{' bool '}'
//!           | '0' | '1' | '(' program ')'
//! bool     := conj ('|' bool)?
//! conj     := neg ('&' conj)?
//! neg      := '!' neg | IDENT | '0' | '1' | '(' bool ')'
//! weighting:= wprod ('+' weighting)?
//! wprod    := watom (';'? wprod)?
//! watom    := '@' IDENT | '0' | '1' | '(' weighting ')'
//! ```
//!
//! Binary operators associate to the right. `p^n` abbreviates `n` copies of `p`.

use std::fmt;

use super::{desugar, BoolExpr, Program, Signature, Sort, Weighting};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    Undeclared(String),
    Sort(String),
}

/// A parse failure with a 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
}

impl ParseError {
    pub fn is_sort_error(&self) -> bool {
        matches!(self.kind, ParseErrorKind::Sort(_))
    }

    pub fn is_syntax_error(&self) -> bool {
        matches!(self.kind, ParseErrorKind::Syntax(_))
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error: {m}"),
            ParseErrorKind::Undeclared(n) => write!(f, "undeclared identifier `{n}`"),
            ParseErrorKind::Sort(m) => write!(f, "sort error: {m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    At,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Plus,
    Semi,
    Star,
    Caret,
    Bang,
    Amp,
    Pipe,
    Eq,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::End => f.write_str("end of input"),
            other => {
                let s = match other {
                    Tok::At => "@",
                    Tok::LBrace => "{",
                    Tok::RBrace => "}",
                    Tok::LParen => "(",
                    Tok::RParen => ")",
                    Tok::Plus => "+",
                    Tok::Semi => ";",
                    Tok::Star => "*",
                    Tok::Caret => "^",
                    Tok::Bang => "!",
                    Tok::Amp => "&",
                    Tok::Pipe => "|",
                    Tok::Eq => "=",
                    _ => unreachable!(),
                };
                write!(f, "`{s}`")
            }
        }
    }
}

struct Lexed {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str, first_line: usize) -> Result<Vec<Lexed>, ParseError> {
    let mut out = Vec::new();
    let mut line = first_line;
    let mut column = 1;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c == '#' {
            while matches!(chars.peek(), Some(&c) if c != '\n') {
                chars.next();
            }
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            Tok::Ident(s)
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            let n = s.parse().map_err(|_| ParseError {
                kind: ParseErrorKind::Syntax(format!("number `{s}` is too large")),
                line: l,
                column: col,
            })?;
            Tok::Num(n)
        } else {
            chars.next();
            column += 1;
            match c {
                '@' => Tok::At,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '+' => Tok::Plus,
                ';' => Tok::Semi,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '!' => Tok::Bang,
                '&' => Tok::Amp,
                '|' => Tok::Pipe,
                '=' => Tok::Eq,
                other => {
                    return Err(ParseError {
                        kind: ParseErrorKind::Syntax(format!("unexpected character `{other}`")),
                        line: l,
                        column: col,
                    })
                }
            }
        };
        out.push(Lexed {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Lexed {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

/// Largest exponent accepted by `p^n`.
const MAX_POWER: u64 = 256;
/// Node limit for the expansion of `p^n`.
const MAX_EXPANDED_SIZE: usize = 100_000;
/// Nesting limit; keeps hostile input from exhausting the stack.
const MAX_DEPTH: usize = 200;

struct Parser<'a> {
    toks: Vec<Lexed>,
    pos: usize,
    sig: &'a Signature,
    depth: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn new(src: &str, sig: &'a Signature, first_line: usize) -> PResult<Self> {
        Ok(Parser {
            toks: lex(src, first_line)?,
            pos: 0,
            sig,
            depth: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, kind: ParseErrorKind) -> ParseError {
        let at = &self.toks[self.pos];
        ParseError {
            kind,
            line: at.line,
            column: at.column,
        }
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(self.error_here(ParseErrorKind::Syntax(msg.into())))
    }

    fn sort<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(self.error_here(ParseErrorKind::Sort(msg.into())))
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.syntax(format!("expected {tok}, found {}", self.peek()))
        }
    }

    fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return self.syntax("expression nested too deeply");
        }
        Ok(())
    }

    fn leave(&mut self) {
        self.depth -= 1;
    }

    fn finish(&mut self) -> PResult<()> {
        match self.peek() {
            Tok::End => Ok(()),
            t => self.syntax(format!("unexpected {t}")),
        }
    }

    // ---- programs ----

    fn program(&mut self) -> PResult<Program> {
        self.enter()?;
        let lhs = self.seq()?;
        let out = if *self.peek() == Tok::Plus {
            self.bump();
            lhs.plus(self.program()?)
        } else {
            lhs
        };
        self.leave();
        Ok(out)
    }

    fn starts_primary(&self) -> bool {
        matches!(
            self.peek(),
            Tok::Ident(_) | Tok::At | Tok::LBrace | Tok::LParen | Tok::Num(_) | Tok::Bang
        )
    }

    fn seq(&mut self) -> PResult<Program> {
        self.enter()?;
        let lhs = self.postfix()?;
        let out = if *self.peek() == Tok::Semi {
            self.bump();
            lhs.then(self.seq()?)
        } else if self.starts_primary() {
            lhs.then(self.seq()?)
        } else {
            lhs
        };
        self.leave();
        Ok(out)
    }

    fn postfix(&mut self) -> PResult<Program> {
        let mut p = self.primary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    p = p.star();
                }
                Tok::Caret => {
                    self.bump();
                    match self.peek().clone() {
                        Tok::Num(n) if n <= MAX_POWER => {
                            if p.size().saturating_mul(n as usize) > MAX_EXPANDED_SIZE {
                                return self.syntax("power expands to an oversized program");
                            }
                            self.bump();
                            p = desugar::power(&p, n as usize);
                        }
                        Tok::Num(_) => return self.syntax(format!("exponent exceeds {MAX_POWER}")),
                        t => return self.syntax(format!("expected an exponent after `^`, found {t}")),
                    }
                }
                _ => return Ok(p),
            }
        }
    }

    fn primary(&mut self) -> PResult<Program> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                match self.sig.sort_of(&name) {
                    Some(Sort::Program) => {}
                    Some(Sort::Boolean) => {
                        return self.sort(format!(
                            "Boolean variable `{name}` must be written as a test `{{{name}}}`"
                        ))
                    }
                    Some(Sort::Weighting) => {
                        return self.sort(format!(
                            "weighting variable `{name}` must be written `@{name}`"
                        ))
                    }
                    None => return Err(self.error_here(ParseErrorKind::Undeclared(name))),
                }
                self.bump();
                Ok(Program::Atomic(name))
            }
            Tok::At => {
                self.bump();
                if *self.peek() == Tok::LParen {
                    self.bump();
                    let w = self.weighting()?;
                    self.expect(Tok::RParen)?;
                    Ok(Program::Weight(w))
                } else {
                    Ok(Program::Weight(self.weighting_var()?))
                }
            }
            Tok::LBrace => {
                self.bump();
                let b = self.bool_expr()?;
                self.expect(Tok::RBrace)?;
                Ok(Program::Test(b))
            }
            Tok::Num(n) => {
                self.bump();
                match n {
                    0 => Ok(Program::zero()),
                    1 => Ok(Program::one()),
                    _ => self.syntax(format!("only the constants 0 and 1 are allowed, found `{n}`")),
                }
            }
            Tok::LParen => {
                self.bump();
                let p = self.program()?;
                self.expect(Tok::RParen)?;
                Ok(p)
            }
            Tok::Bang => self.sort("negation `!` applies only to Boolean expressions inside a test `{...}`"),
            Tok::End => self.syntax("expected a program, found end of input"),
            t => self.syntax(format!("expected a program, found {t}")),
        }
    }

    // ---- weightings ----

    /// Parses `IDENT` after an `@` and checks it is a declared weighting.
    fn weighting_var(&mut self) -> PResult<Weighting> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                match self.sig.sort_of(&name) {
                    Some(Sort::Weighting) => {}
                    Some(s) => {
                        return self.sort(format!("`@{name}` refers to {s} `{name}`, not a weighting"))
                    }
                    None => return Err(self.error_here(ParseErrorKind::Undeclared(name))),
                }
                self.bump();
                Ok(Weighting::Var(name))
            }
            t => self.syntax(format!("expected a weighting name after `@`, found {t}")),
        }
    }

    fn weighting(&mut self) -> PResult<Weighting> {
        self.enter()?;
        let lhs = self.wprod()?;
        let out = if *self.peek() == Tok::Plus {
            self.bump();
            lhs.add(self.weighting()?)
        } else {
            lhs
        };
        self.leave();
        Ok(out)
    }

    fn wprod(&mut self) -> PResult<Weighting> {
        self.enter()?;
        let lhs = self.watom()?;
        let out = match self.peek() {
            Tok::Semi => {
                self.bump();
                lhs.mul(self.wprod()?)
            }
            Tok::At | Tok::Num(_) | Tok::LParen | Tok::Ident(_) | Tok::LBrace | Tok::Bang => {
                lhs.mul(self.wprod()?)
            }
            Tok::Star => return self.sort("weightings have no star"),
            _ => lhs,
        };
        self.leave();
        Ok(out)
    }

    fn watom(&mut self) -> PResult<Weighting> {
        match self.peek().clone() {
            Tok::At => {
                self.bump();
                self.weighting_var()
            }
            Tok::Num(0) => {
                self.bump();
                Ok(Weighting::Zero)
            }
            Tok::Num(1) => {
                self.bump();
                Ok(Weighting::One)
            }
            Tok::Num(n) => self.syntax(format!("only the constants 0 and 1 are allowed, found `{n}`")),
            Tok::LParen => {
                self.bump();
                let w = self.weighting()?;
                self.expect(Tok::RParen)?;
                Ok(w)
            }
            Tok::Ident(name) => match self.sig.sort_of(&name) {
                Some(Sort::Weighting) => {
                    self.sort(format!("weighting variable `{name}` must be written `@{name}`"))
                }
                Some(s) => self.sort(format!("{s} `{name}` cannot occur inside a weighting")),
                None => Err(self.error_here(ParseErrorKind::Undeclared(name))),
            },
            Tok::LBrace => self.sort("tests cannot occur inside a weighting"),
            Tok::Bang => self.sort("weightings have no negation"),
            t => self.syntax(format!("expected a weighting, found {t}")),
        }
    }

    // ---- Boolean expressions ----

    fn bool_expr(&mut self) -> PResult<BoolExpr> {
        self.enter()?;
        let lhs = self.conj()?;
        let out = if *self.peek() == Tok::Pipe {
            self.bump();
            lhs.or(self.bool_expr()?)
        } else {
            lhs
        };
        self.leave();
        Ok(out)
    }

    fn conj(&mut self) -> PResult<BoolExpr> {
        self.enter()?;
        let lhs = self.neg()?;
        let out = if *self.peek() == Tok::Amp {
            self.bump();
            lhs.and(self.conj()?)
        } else {
            lhs
        };
        self.leave();
        Ok(out)
    }

    fn neg(&mut self) -> PResult<BoolExpr> {
        match self.peek().clone() {
            Tok::Bang => {
                self.bump();
                self.enter()?;
                let b = self.neg()?;
                self.leave();
                Ok(b.not())
            }
            Tok::Ident(name) => {
                match self.sig.sort_of(&name) {
                    Some(Sort::Boolean) => {}
                    Some(s) => {
                        return self.sort(format!("{s} `{name}` used where a Boolean is expected"))
                    }
                    None => return Err(self.error_here(ParseErrorKind::Undeclared(name))),
                }
                self.bump();
                Ok(BoolExpr::Var(name))
            }
            Tok::Num(0) => {
                self.bump();
                Ok(BoolExpr::Zero)
            }
            Tok::Num(1) => {
                self.bump();
                Ok(BoolExpr::One)
            }
            Tok::Num(n) => self.syntax(format!("only the constants 0 and 1 are allowed, found `{n}`")),
            Tok::LParen => {
                self.bump();
                let b = self.bool_expr()?;
                self.expect(Tok::RParen)?;
                Ok(b)
            }
            Tok::At => self.sort("a weighting cannot occur inside a Boolean expression"),
            t => self.syntax(format!("expected a Boolean expression, found {t}")),
        }
    }
}

/// Parses a program, resolving identifiers against `sig`.
pub fn parse(source: &str, sig: &Signature) -> Result<Program, ParseError> {
    parse_at(source, sig, 1)
}

pub(crate) fn parse_at(source: &str, sig: &Signature, first_line: usize) -> Result<Program, ParseError> {
    let mut p = Parser::new(source, sig, first_line)?;
    let prog = p.program()?;
    p.finish()?;
    Ok(prog)
}

/// Parses a bare Boolean expression, with or without surrounding braces.
pub fn parse_bool_expr(source: &str, sig: &Signature) -> Result<BoolExpr, ParseError> {
    let mut p = Parser::new(source, sig, 1)?;
    let b = if *p.peek() == Tok::LBrace {
        p.bump();
        let b = p.bool_expr()?;
        p.expect(Tok::RBrace)?;
        b
    } else {
        p.bool_expr()?
    };
    p.finish()?;
    Ok(b)
}

/// Parses `lhs = rhs`.
pub fn parse_equation(source: &str, sig: &Signature) -> Result<(Program, Program), ParseError> {
    parse_equation_at(source, sig, 1)
}

pub(crate) fn parse_equation_at(
    source: &str,
    sig: &Signature,
    first_line: usize,
) -> Result<(Program, Program), ParseError> {
    let mut p = Parser::new(source, sig, first_line)?;
    let lhs = p.program()?;
    p.expect(Tok::Eq)?;
    let rhs = p.program()?;
    p.finish()?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::ski;

    fn sig() -> Signature {
        ski::signature()
    }

    #[test]
    fn test_then_action() {
        let p = parse("{neq0} ; sub1", &sig()).unwrap();
        assert_eq!(
            p,
            Program::test(BoolExpr::var("neq0")).then(Program::atomic("sub1"))
        );
        assert_eq!(parse("{neq0} sub1", &sig()).unwrap(), p);
    }

    #[test]
    fn ski_loop_parses_to_eq1() {
        let p = parse("({neq0} sub1 (@one + @skis end))* {!neq0}", &sig()).unwrap();
        assert_eq!(p, ski::loop_program());
    }

    #[test]
    fn precedence() {
        let s = sig();
        let p = parse("sub1 end* + end", &s).unwrap();
        let expected = Program::atomic("sub1")
            .then(Program::atomic("end").star())
            .plus(Program::atomic("end"));
        assert_eq!(p, expected);
        let b = parse_bool_expr("!neq0 & neq0 | 0", &s).unwrap();
        assert_eq!(
            b,
            BoolExpr::var("neq0").not().and(BoolExpr::var("neq0")).or(BoolExpr::Zero)
        );
    }

    #[test]
    fn constants_in_every_sort() {
        let s = sig();
        assert_eq!(parse("1", &s).unwrap(), Program::one());
        assert_eq!(parse("{0}", &s).unwrap(), Program::zero());
        assert_eq!(
            parse("@(@one 1 + 0)", &s).unwrap(),
            Program::weight(Weighting::var("one").mul(Weighting::One).add(Weighting::Zero))
        );
    }

    #[test]
    fn powers_expand() {
        let s = sig();
        assert_eq!(parse("sub1^0", &s).unwrap(), Program::one());
        assert_eq!(
            parse("sub1^3", &s).unwrap(),
            parse("sub1 sub1 sub1", &s).unwrap()
        );
        assert!(parse("sub1^", &s).unwrap_err().is_syntax_error());
        assert!(parse("sub1^256^256^256", &s).unwrap_err().is_syntax_error());
    }

    #[test]
    fn negated_weighting_is_a_sort_error() {
        let e = parse("!@one", &sig()).unwrap_err();
        assert!(e.is_sort_error(), "{e}");
        assert!(parse("{!@one}", &sig()).unwrap_err().is_sort_error());
        assert!(parse("@(!@one)", &sig()).unwrap_err().is_sort_error());
    }

    #[test]
    fn sort_clashes() {
        let s = sig();
        for src in ["neq0", "one", "{sub1}", "@sub1", "@(@one*)", "@({neq0})", "{@one}"] {
            let e = parse(src, &s).unwrap_err();
            assert!(e.is_sort_error(), "{src}: {e}");
        }
    }

    #[test]
    fn undeclared_identifier_with_position() {
        let e = parse("sub1\n  {neq0} jump", &sig()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Undeclared("jump".into()));
        assert_eq!((e.line, e.column), (2, 10));
    }

    #[test]
    fn syntax_errors() {
        let s = sig();
        for src in ["", "(sub1", "sub1 +", "{neq0", "2", "sub1 )", "*", "sub1 $"] {
            let e = parse(src, &s).unwrap_err();
            assert!(e.is_syntax_error(), "{src}: {e}");
        }
    }

    #[test]
    fn deep_nesting_is_rejected_not_overflowed() {
        let src = format!("{}sub1{}", "(".repeat(5000), ")".repeat(5000));
        assert!(parse(&src, &sig()).unwrap_err().is_syntax_error());
        let src = format!("{{{}neq0}}", "!".repeat(5000));
        assert!(parse(&src, &sig()).is_err());
    }

    #[test]
    fn equations() {
        let (l, r) = parse_equation("sub1^2 {neq0} = 0", &sig()).unwrap();
        assert_eq!(r, Program::zero());
        assert_eq!(l, parse("(sub1 sub1) {neq0}", &sig()).unwrap());
        assert!(parse_equation("sub1", &sig()).is_err());
    }
}
