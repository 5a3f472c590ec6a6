use std::fmt::Write as _;

use crate::semiring::Semiring;

/// Star partial sums failed to stabilize within the iteration cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("star did not stabilize within {cap} iterations")]
pub struct StarDivergence {
    pub cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RelError {
    #[error("dimension mismatch: {left}×{left} vs {right}×{right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("argument is not a test (a sub-identity 0/1 relation)")]
    NotATest,
    #[error(transparent)]
    Star(#[from] StarDivergence),
}

/// A total map `X × X → S`, stored densely in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation<S> {
    n: usize,
    entries: Vec<S>,
}

impl<S: Semiring> Relation<S> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Relation { n, entries }
    }

    /// Builds from a row-major list of rows; panics if it is not square.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "relation must be square");
        Relation {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| S::zero())
    }

    /// The identity relation: 1 on the diagonal, 0 elsewhere.
    pub fn one(n: usize) -> Self {
        Self::diagonal(n, |_| S::one())
    }

    pub fn diagonal(n: usize, mut f: impl FnMut(usize) -> S) -> Self {
        Self::from_fn(n, |i, j| if i == j { f(i) } else { S::zero() })
    }

    /// The 0/1 relation containing exactly `pairs`.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::zero(n);
        for (i, j) in pairs {
            r.set(i, j, S::one());
        }
        r
    }

    /// The test holding exactly at the marked states.
    pub fn test(marks: &[bool]) -> Self {
        Self::diagonal(marks.len(), |i| if marks[i] { S::one() } else { S::zero() })
    }

    /// The weight relation with `w` on every diagonal entry.
    pub fn weight(n: usize, w: &S) -> Self {
        Self::diagonal(n, |_| w.clone())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / n, k % n, v))
    }

    fn same_size(&self, other: &Self) -> Result<(), RelError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(RelError::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RelError> {
        self.same_size(other)?;
        Ok(Relation {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    /// `(λ·λ')(s, t) = Σ_u λ(s, u)·λ'(u, t)`
    pub fn checked_mul(&self, other: &Self) -> Result<Self, RelError> {
        self.same_size(other)?;
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            (0..n).fold(S::zero(), |acc, u| {
                acc.add(&self.get(i, u).mul(other.get(u, j)))
            })
        }))
    }

    /// Panics on a dimension mismatch; see [`Relation::checked_add`].
    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("relation sizes differ")
    }

    /// Panics on a dimension mismatch; see [`Relation::checked_mul`].
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("relation sizes differ")
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| acc.mul(self))
    }

    /// Sub-identity and two-valued.
    pub fn is_test(&self) -> bool {
        self.entries().all(|(i, j, v)| {
            if i == j {
                v.is_zero() || v.is_one()
            } else {
                v.is_zero()
            }
        })
    }

    /// Diagonal-constant and 0 off the diagonal.
    pub fn is_weight(&self) -> bool {
        let d = self.get(0, 0);
        self.entries()
            .all(|(i, j, v)| if i == j { v == d } else { v.is_zero() })
    }

    /// Complement of a test on the diagonal.
    pub fn neg(&self) -> Result<Self, RelError> {
        if !self.is_test() {
            return Err(RelError::NotATest);
        }
        Ok(Self::diagonal(self.n, |i| {
            if self.get(i, i).is_zero() {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    /// Pointwise natural order.
    pub fn le(&self, other: &Self) -> bool {
        self.n == other.n
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.natural_le(b))
    }

    /// Default iteration cap for [`Relation::star`]: `|X| + 1`.
    pub fn default_cap(&self) -> usize {
        self.n + 1
    }

    /// `Σ_{n≥0} λⁿ`, computed as the partial sums `S_{k+1} = 1 + S_k·λ` up to the
    /// first `k` with `S_{k+1} = S_k`.
    pub fn star(&self, cap: usize) -> Result<Self, StarDivergence> {
        self.star_with_index(cap).map(|(s, _)| s)
    }

    /// Like [`Relation::star`], also returning the stabilization index `K`
    /// with `λ* = Σ_{n≤K} λⁿ`.
    pub fn star_with_index(&self, cap: usize) -> Result<(Self, usize), StarDivergence> {
        let one = Self::one(self.n);
        let mut sum = one.clone();
        for k in 0..cap {
            let next = one.add(&sum.mul(self));
            if next == sum {
                return Ok((sum, k));
            }
            sum = next;
        }
        Err(StarDivergence { cap })
    }

    /// Aligned text table with the given state names.
    pub fn render(&self, states: &[String]) -> String {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells
            .iter()
            .map(|c| c.chars().count())
            .chain(states.iter().map(|s| s.chars().count()))
            .max()
            .unwrap_or(1);
        let label = states.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        let mut out = String::new();
        let _ = write!(out, "{:label$}", "");
        for s in states {
            let _ = write!(out, "  {s:>width$}");
        }
        out.push('\n');
        for (i, s) in states.iter().enumerate() {
            let _ = write!(out, "{s:label$}");
            for c in &cells[i * self.n..(i + 1) * self.n] {
                let _ = write!(out, "  {c:>width$}");
            }
            out.push('\n');
        }
        out
    }
}
