use std::fmt;
use std::time::{Duration, Instant};

use crate::series::{Comparison, QSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Equal,
    Mismatch {
        exponent: usize,
        lhs: Rational,
        rhs: Rational,
    },
    /// A side could not be built or compared at all.
    Failed(String),
}

/// Result of comparing the two sides of one identity up to an order.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub id: String,
    pub order: usize,
    pub status: Status,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn is_equal(&self) -> bool {
        self.status == Status::Equal
    }

    /// Compares `lhs` and `rhs` through `order`.
    pub fn compare(id: impl Into<String>, lhs: &QSeries, rhs: &QSeries, order: usize, started: Instant) -> Self {
        let status = match lhs.equal_up_to(rhs, order) {
            Ok(Comparison::Equal) => Status::Equal,
            Ok(Comparison::Mismatch { exponent, left, right }) => Status::Mismatch {
                exponent,
                lhs: left,
                rhs: right,
            },
            Err(e) => Status::Failed(e.to_string()),
        };
        VerificationReport {
            id: id.into(),
            order,
            status,
            elapsed: started.elapsed(),
        }
    }

    /// Builds both sides with `build` and compares them, timing the whole run.
    pub fn run<E, F>(id: impl Into<String>, order: usize, build: F) -> Self
    where
        E: fmt::Display,
        F: FnOnce() -> Result<(QSeries, QSeries), E>,
    {
        let started = Instant::now();
        let id = id.into();
        match build() {
            Ok((lhs, rhs)) => Self::compare(id, &lhs, &rhs, order, started),
            Err(e) => Self::failed(id, order, e, started),
        }
    }

    pub fn failed(id: impl Into<String>, order: usize, err: impl fmt::Display, started: Instant) -> Self {
        VerificationReport {
            id: id.into(),
            order,
            status: Status::Failed(err.to_string()),
            elapsed: started.elapsed(),
        }
    }

    /// Folds several reports into one: equal iff all are, otherwise the first
    /// offender's status with its id prefixed.
    pub fn combine(id: impl Into<String>, order: usize, parts: &[VerificationReport]) -> Self {
        let elapsed = parts.iter().map(|r| r.elapsed).sum();
        let id = id.into();
        match parts.iter().find(|r| !r.is_equal()) {
            None => VerificationReport {
                id,
                order,
                status: Status::Equal,
                elapsed,
            },
            Some(bad) => VerificationReport {
                id: format!("{id} [{}]", bad.id),
                order: bad.order,
                status: bad.status.clone(),
                elapsed,
            },
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms = self.elapsed.as_secs_f64() * 1e3;
        match &self.status {
            Status::Equal => write!(f, "{}: equal up to q^{} ({ms:.1} ms)", self.id, self.order),
            Status::Mismatch { exponent, lhs, rhs } => write!(
                f,
                "{}: MISMATCH at q^{exponent}: lhs {lhs} vs rhs {rhs} ({ms:.1} ms)",
                self.id
            ),
            Status::Failed(msg) => write!(f, "{}: FAILED: {msg}", self.id),
        }
    }
}
