//! Law-checking reports shared by every property suite in the crate.

use std::fmt;

/// Outcome of checking one law over a number of sampled instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawOutcome {
    pub law: String,
    pub trials: usize,
    /// First violating instance, rendered for humans. `None` means the law held.
    pub witness: Option<String>,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// A titled list of law outcomes. Violations are report content, not errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub laws: Vec<LawOutcome>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            laws: Vec::new(),
        }
    }

    pub fn record(&mut self, law: impl Into<String>, trials: usize, witness: Option<String>) {
        self.laws.push(LawOutcome {
            law: law.into(),
            trials,
            witness,
        });
    }

    /// Runs `check` for `trials` iterations, stopping at the first witness.
    pub fn run<F>(&mut self, law: impl Into<String>, trials: usize, mut check: F)
    where
        F: FnMut(usize) -> Option<String>,
    {
        let mut done = 0;
        let mut witness = None;
        for i in 0..trials {
            done += 1;
            if let Some(w) = check(i) {
                witness = Some(w);
                break;
            }
        }
        self.record(law, done, witness);
    }

    /// Appends the laws of `other`, prefixing each with `prefix`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut law in other.laws {
            law.law = format!("{prefix}{}", law.law);
            self.laws.push(law);
        }
    }

    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawOutcome> {
        self.laws.iter().filter(|l| !l.passed())
    }

    pub fn find(&self, law: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.law == law)
    }

    /// Minimum number of trials run by any law.
    pub fn min_trials(&self) -> usize {
        self.laws.iter().map(|l| l.trials).min().unwrap_or(0)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for law in &self.laws {
            match &law.witness {
                None => writeln!(f, "PASS  {} ({} trials)", law.law, law.trials)?,
                Some(w) => writeln!(f, "FAIL  {} (trial {}): {}", law.law, law.trials, w)?,
            }
        }
        let failed = self.failures().count();
        write!(
            f,
            "-- {} laws, {} passed, {} failed",
            self.laws.len(),
            self.laws.len() - failed,
            failed
        )
    }
}
