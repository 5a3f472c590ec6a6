//! Line-oriented model files.
//!
//! ```text
//! semiring tropical
//! states   s0 s1 s2
//! prog sub1 : s2 s1 , s1 s0
//! bool neq0 : s1 s2
//! weight one  = 1
//! weight skis = 5
//! ```

use super::system::{SystemError, TransitionSystem};
use crate::semiring::{Boolean, Lukasiewicz, Semiring, SemiringKind, Tropical};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ModelError {
    pub line: usize,
    pub message: String,
}

/// A parsed model over whichever semiring its header names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyModel {
    Bool(TransitionSystem<Boolean>),
    Tropical(TransitionSystem<Tropical>),
    Lukasiewicz(TransitionSystem<Lukasiewicz>),
}

impl AnyModel {
    pub fn kind(&self) -> SemiringKind {
        match self {
            AnyModel::Bool(_) => SemiringKind::Bool,
            AnyModel::Tropical(_) => SemiringKind::Tropical,
            AnyModel::Lukasiewicz(_) => SemiringKind::Lukasiewicz,
        }
    }

    pub fn states(&self) -> &[String] {
        match self {
            AnyModel::Bool(m) => m.states(),
            AnyModel::Tropical(m) => m.states(),
            AnyModel::Lukasiewicz(m) => m.states(),
        }
    }

    pub fn named(self, name: impl Into<String>) -> Self {
        match self {
            AnyModel::Bool(m) => AnyModel::Bool(m.named(name)),
            AnyModel::Tropical(m) => AnyModel::Tropical(m.named(name)),
            AnyModel::Lukasiewicz(m) => AnyModel::Lukasiewicz(m.named(name)),
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> ModelError {
    ModelError {
        line,
        message: message.into(),
    }
}

fn sys_err(line: usize) -> impl Fn(SystemError) -> ModelError {
    move |e| err(line, e.to_string())
}

/// Splits `name : rest` or `name = rest`.
fn split_label(line: usize, rest: &str, sep: char) -> Result<(&str, &str), ModelError> {
    let (name, body) = rest
        .split_once(sep)
        .ok_or_else(|| err(line, format!("expected `<name> {sep} ...`")))?;
    let name = name.trim();
    if name.is_empty() || name.split_whitespace().count() != 1 {
        return Err(err(line, "expected exactly one name before the separator"));
    }
    Ok((name, body.trim()))
}

fn parse_system<S: Semiring>(lines: &[(usize, &str)], states: (usize, Vec<String>)) -> Result<TransitionSystem<S>, ModelError> {
    let (states_line, states) = states;
    let mut m = TransitionSystem::<S>::new(states).map_err(sys_err(states_line))?;
    let index = |m: &TransitionSystem<S>, line: usize, name: &str| {
        m.state_index(name)
            .ok_or_else(|| err(line, SystemError::UnknownState(name.to_string()).to_string()))
    };
    for &(line, text) in lines {
        let (keyword, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        match keyword {
            "prog" => {
                let (name, body) = split_label(line, rest, ':')?;
                let mut pairs = Vec::new();
                if !body.is_empty() {
                    for pair in body.split(',') {
                        let ends: Vec<&str> = pair.split_whitespace().collect();
                        let [from, to] = ends[..] else {
                            return Err(err(line, format!("expected a state pair, found `{}`", pair.trim())));
                        };
                        pairs.push((index(&m, line, from)?, index(&m, line, to)?));
                    }
                }
                m = m.with_program(name, pairs).map_err(sys_err(line))?;
            }
            "bool" => {
                let (name, body) = split_label(line, rest, ':')?;
                let states = body
                    .split_whitespace()
                    .map(|s| index(&m, line, s))
                    .collect::<Result<Vec<_>, _>>()?;
                m = m.with_boolean(name, states).map_err(sys_err(line))?;
            }
            "weight" => {
                let (name, body) = split_label(line, rest, '=')?;
                let value = S::parse_literal(body).map_err(|e| err(line, e.to_string()))?;
                m = m.with_weight(name, value).map_err(sys_err(line))?;
            }
            other => {
                return Err(err(
                    line,
                    format!("unknown keyword `{other}` (expected prog, bool or weight)"),
                ))
            }
        }
    }
    Ok(m)
}

/// Parses a model file.
pub fn parse_model_file(text: &str) -> Result<AnyModel, ModelError> {
    let mut kind: Option<SemiringKind> = None;
    let mut states: Option<(usize, Vec<String>)> = None;
    let mut labels = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let text = raw.split_once('#').map_or(raw, |(l, _)| l).trim();
        if text.is_empty() {
            continue;
        }
        let (keyword, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        match keyword {
            "semiring" => {
                if kind.is_some() {
                    return Err(err(line, "semiring declared twice"));
                }
                kind = Some(rest.trim().parse().map_err(|e: crate::semiring::UnknownSemiring| err(line, e.to_string()))?);
            }
            "states" => {
                if states.is_some() {
                    return Err(err(line, "states declared twice"));
                }
                states = Some((line, rest.split_whitespace().map(String::from).collect()));
            }
            _ => {
                if kind.is_none() || states.is_none() {
                    return Err(err(line, "`semiring` and `states` must come before any label"));
                }
                labels.push((line, text));
            }
        }
    }
    let kind = kind.ok_or_else(|| err(1, "missing `semiring` line"))?;
    let states = states.ok_or_else(|| err(1, "missing `states` line"))?;
    Ok(match kind {
        SemiringKind::Bool => AnyModel::Bool(parse_system(&labels, states)?),
        SemiringKind::Tropical => AnyModel::Tropical(parse_system(&labels, states)?),
        SemiringKind::Lukasiewicz => AnyModel::Lukasiewicz(parse_system(&labels, states)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SKI: &str = "semiring tropical\nstates   s0 s1 s2\nprog sub1 : s2 s1 , s1 s0\nprog end : s0 s0, s1 s0, s2 s0\nbool neq0 : s1 s2\nweight one  = 1\nweight skis = 5\n";

    #[test]
    fn ski_model() {
        let AnyModel::Tropical(m) = parse_model_file(SKI).unwrap() else {
            panic!("expected a tropical model");
        };
        assert_eq!(m.states().len(), 3);
        assert_eq!(m.program_label("sub1").unwrap().len(), 2);
        assert!(m.program_label("sub1").unwrap().contains(&(2, 1)));
        assert_eq!(m.boolean_label("neq0").unwrap().len(), 2);
        assert_eq!(m.weight_label("skis"), Some(&Tropical::Finite(5)));
    }

    #[test]
    fn other_semirings_and_empty_labels() {
        let text = "semiring lukasiewicz\nstates a b\nprog p :\nbool b :\nweight f = 3/4\n";
        let AnyModel::Lukasiewicz(m) = parse_model_file(text).unwrap() else {
            panic!();
        };
        assert!(m.program_label("p").unwrap().is_empty());
        assert_eq!(m.weight_label("f"), Some(&Lukasiewicz::ratio(3, 4)));
        let text = "semiring bool\nstates a\nweight f = 1\n";
        assert_eq!(parse_model_file(text).unwrap().kind(), SemiringKind::Bool);
    }

    #[test]
    fn errors_carry_lines() {
        let cases = [
            ("states a\n", 1),
            ("semiring tropical\n", 1),
            ("semiring counting\nstates a\n", 1),
            ("semiring tropical\nstates a\nprog p : a b\n", 3),
            ("semiring tropical\nstates a\nprog p : a\n", 3),
            ("semiring tropical\nstates a\nweight f = -2\n", 3),
            ("semiring tropical\nstates a\nweight f 2\n", 3),
            ("semiring tropical\nstates a\nbool b : a\nbool b : a\n", 4),
            ("semiring tropical\nstates\n", 2),
            ("prog p : a a\nsemiring tropical\nstates a\n", 1),
            ("semiring tropical\nstates a\nfrob x\n", 3),
        ];
        for (text, line) in cases {
            let e = parse_model_file(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
    }
}
