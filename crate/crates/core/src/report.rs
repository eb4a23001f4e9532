//! Verdicts of the exhaustive identity checkers.

use std::fmt;

use crate::linalg::{mixed_tuples, tuples, Vector};

/// One failing instance of an identity: the basis indices it was evaluated
/// at (0-based; module indices follow algebra indices where applicable)
/// and the two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub identity: String,
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Total number of failing instances, including any dropped by `capped`.
    pub failures: usize,
    pub counterexamples: Vec<Witness>,
    pub notes: Vec<String>,
}

pub const DEFAULT_MAX_WITNESSES: usize = 16;

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), passed: true, failures: 0, counterexamples: Vec::new(), notes: Vec::new() }
    }

    pub fn fail(&mut self, identity: &str, indices: Vec<usize>, lhs: Vector, rhs: Vector) {
        self.passed = false;
        self.failures += 1;
        self.counterexamples.push(Witness { identity: identity.to_string(), indices, lhs, rhs });
    }

    /// Records a failure that has no vector-valued sides (e.g. a shape or
    /// invertibility condition).
    pub fn fail_condition(&mut self, identity: &str) {
        self.fail(identity, Vec::new(), Vector::zeros(0), Vector::zeros(0));
    }

    /// Compares `lhs` and `rhs` and records a witness when they differ.
    pub fn expect_eq(&mut self, identity: &str, indices: &[usize], lhs: Vector, rhs: Vector) {
        if lhs != rhs {
            self.fail(identity, indices.to_vec(), lhs, rhs);
        }
    }

    /// Runs `sides` on every index tuple of the given arity over `0..dim`.
    pub fn over_tuples(&mut self, identity: &str, dim: usize, arity: usize, mut sides: impl FnMut(&[usize]) -> (Vector, Vector)) {
        for t in tuples(dim, arity) {
            let (l, r) = sides(&t);
            self.expect_eq(identity, &t, l, r);
        }
    }

    /// Like [`over_tuples`](Self::over_tuples) with a separate range per slot.
    pub fn over_mixed(&mut self, identity: &str, dims: &[usize], mut sides: impl FnMut(&[usize]) -> (Vector, Vector)) {
        for t in mixed_tuples(dims) {
            let (l, r) = sides(&t);
            self.expect_eq(identity, &t, l, r);
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Folds a sub-report into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.passed &= other.passed;
        self.failures += other.failures;
        self.counterexamples.extend(other.counterexamples);
        self.notes.extend(other.notes);
    }

    pub fn with(mut self, other: CheckReport) -> Self {
        self.absorb(other);
        self
    }

    /// Keeps only the first `cap` witnesses; `failures` still counts all.
    pub fn capped(mut self, cap: usize) -> Self {
        self.counterexamples.truncate(cap);
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {} ({} failing instances)", self.name, if self.passed { "pass" } else { "FAIL" }, self.failures)?;
        for w in &self.counterexamples {
            let idx: Vec<String> = w.indices.iter().map(|i| (i + 1).to_string()).collect();
            writeln!(f, "  {} at ({}): {} != {}", w.identity, idx.join(","), w.lhs, w.rhs)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
