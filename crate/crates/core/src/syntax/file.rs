//! Program files: a signature header, a `---` separator, then the body.
//!
//! ```text
//! program sub1 end
//! bool    neq0
//! weight  one skis
//! ---
//! ({neq0} sub1 (@one + @skis end))* {!neq0}
//! ```

use super::parser::{parse_at, parse_equation_at, ParseError, ParseErrorKind};
use super::{Program, Signature, Sort};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProgramFile {
    pub signature: Signature,
    pub program: Program,
}

/// Equations `lhs = rhs`, one per line, with an optional signature header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationsFile {
    pub signature: Option<Signature>,
    pub equations: Vec<(Program, Program)>,
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { kind, line, column }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(l, _)| l)
}

fn is_separator(line: &str) -> bool {
    strip_comment(line).trim() == "---"
}

fn parse_header(lines: &[&str]) -> Result<Signature, ParseError> {
    let mut sig = Signature::default();
    for (i, raw) in lines.iter().enumerate() {
        let line = strip_comment(raw);
        let mut words = line.split_whitespace();
        let Some(keyword) = words.next() else {
            continue;
        };
        let sort = match keyword {
            "program" => Sort::Program,
            "bool" => Sort::Boolean,
            "weight" => Sort::Weighting,
            other => {
                let column = raw.find(other).unwrap_or(0) + 1;
                return Err(err(
                    i + 1,
                    column,
                    ParseErrorKind::Syntax(format!(
                        "unknown declaration `{other}` (expected program, bool or weight)"
                    )),
                ));
            }
        };
        for name in words {
            let column = raw.find(name).unwrap_or(0) + 1;
            sig.declare(sort, name.to_string()).map_err(|e| {
                let kind = match e {
                    super::SignatureError::InvalidIdentifier(_) => {
                        ParseErrorKind::Syntax(e.to_string())
                    }
                    _ => ParseErrorKind::Sort(e.to_string()),
                };
                err(i + 1, column, kind)
            })?;
        }
    }
    Ok(sig)
}

/// Parses a whole program file.
pub fn parse_program_file(text: &str) -> Result<ProgramFile, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let Some(sep) = lines.iter().position(|l| is_separator(l)) else {
        return Err(err(
            lines.len().max(1),
            1,
            ParseErrorKind::Syntax("missing `---` line between header and program".into()),
        ));
    };
    let signature = parse_header(&lines[..sep])?;
    let body = lines[sep + 1..].join("\n");
    let program = parse_at(&body, &signature, sep + 2)?;
    Ok(ProgramFile { signature, program })
}

/// Parses an equations file. Without a `---` line the whole file is the body
/// and identifiers resolve against `fallback`.
pub fn parse_equations_file(text: &str, fallback: &Signature) -> Result<EquationsFile, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let (signature, body_start) = match lines.iter().position(|l| is_separator(l)) {
        Some(sep) => (Some(parse_header(&lines[..sep])?), sep + 1),
        None => (None, 0),
    };
    let sig = signature.as_ref().unwrap_or(fallback);
    let mut equations = Vec::new();
    for (i, line) in lines.iter().enumerate().skip(body_start) {
        if strip_comment(line).trim().is_empty() {
            continue;
        }
        equations.push(parse_equation_at(line, sig, i + 1)?);
    }
    if equations.is_empty() {
        return Err(err(
            lines.len().max(1),
            1,
            ParseErrorKind::Syntax("no equations found".into()),
        ));
    }
    Ok(EquationsFile {
        signature,
        equations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::ski;

    const SKI: &str = "program sub1 end\nbool    neq0\nweight  one skis\n---\n({neq0} sub1 (@one + @skis end))* {!neq0}\n";

    #[test]
    fn ski_file() {
        let f = parse_program_file(SKI).unwrap();
        assert_eq!(f.signature, ski::signature());
        assert_eq!(f.program, ski::loop_program());
    }

    #[test]
    fn body_positions_are_file_positions() {
        let text = "program a\n---\na\n  a !\n";
        let e = parse_program_file(text).unwrap_err();
        assert_eq!((e.line, e.column), (4, 5));
        assert!(e.is_sort_error());
    }

    #[test]
    fn header_errors() {
        let e = parse_program_file("program a\nbool a\n---\na").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.is_sort_error());
        assert!(parse_program_file("prog a\n---\na").unwrap_err().is_syntax_error());
        assert!(parse_program_file("program a\na").unwrap_err().is_syntax_error());
    }

    #[test]
    fn empty_body_is_a_syntax_error() {
        let e = parse_program_file("program a\n---\n\n# nothing\n").unwrap_err();
        assert!(e.is_syntax_error());
    }

    #[test]
    fn comments_are_ignored() {
        let f = parse_program_file("# ski\nprogram a # atomic\n---\na* # loop\n").unwrap();
        assert_eq!(f.program, Program::atomic("a").star());
    }

    #[test]
    fn equations_with_and_without_header() {
        let sig = ski::signature();
        let f = parse_equations_file("sub1^2 {neq0} = 0\n\nend {neq0} = 0\n", &sig).unwrap();
        assert!(f.signature.is_none());
        assert_eq!(f.equations.len(), 2);
        let g = parse_equations_file("program end\nbool neq0\n---\nend {neq0} = 0\n", &sig).unwrap();
        assert_eq!(g.signature.unwrap().programs(), ["end".to_string()]);
        assert!(parse_equations_file("", &sig).is_err());
        let e = parse_equations_file("end {neq0} = 0\nend = \n", &sig).unwrap_err();
        assert_eq!(e.line, 2);
    }
}
