//! Certified checks of the zero-related claims for `N_{n,m}`.
//!
//! Every verdict is reached by exact evaluation or by comparing disjoint
//! rational root enclosures. Loops that refine enclosures stop after
//! [`REFINEMENT_LIMIT`] bisections per polynomial and then report
//! [`Verdict::Undecided`] rather than guessing.

mod bounds;
mod checks;
mod compare;
mod report;
mod zeros;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exactcore::{ExactError, Rational};
use crate::narayana::{FamilyIndex, NarayanaError};

pub use bounds::{induction_step, theorem31_bounds, verify_bounds, BoundPair, BoundsWitness, InductionStep};
pub use checks::{
    proposition_containment, root_census, verify_interlacing, verify_monotonicity, verify_proposition,
    verify_sign_lemma, MonotonicityReport,
};
pub use compare::{separate, Separation};
pub use report::{sign_samples, zero_report, ZeroReport};
pub use zeros::{certified_positive_zero, negative_zero_set};

/// Bisection rounds allowed per polynomial in any separation loop.
pub const REFINEMENT_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Family(#[from] NarayanaError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("{idx}: expected exactly one positive zero, Sturm count gives {count}")]
    PositiveRootCount { idx: FamilyIndex, count: usize },
    #[error("{idx}: expected {expected} negative zeros, Sturm count gives {count}")]
    NegativeRootCount { idx: FamilyIndex, expected: usize, count: usize },
    #[error("sample point {0} is not positive")]
    NonPositiveSample(Rational),
    #[error("{idx}: bound denominator {denominator} is not positive")]
    BoundDenominator { idx: FamilyIndex, denominator: Rational },
}

impl TheoremError {
    /// True when the error contradicts a mathematical claim rather than
    /// signalling bad input.
    pub fn is_finding(&self) -> bool {
        match self {
            TheoremError::Family(NarayanaError::Regime { .. }) => false,
            TheoremError::Family(NarayanaError::NarayanaIndex(_)) => false,
            TheoremError::NonPositiveSample(_) => false,
            TheoremError::Exact(ExactError::NotSquarefree { .. }) => true,
            TheoremError::Exact(ExactError::MultipleRoots { .. }) => true,
            TheoremError::Exact(ExactError::SameSign { .. }) => true,
            TheoremError::Exact(_) => false,
            _ => true,
        }
    }
}

/// Outcome of one check. The string carries the witness: evaluated values
/// or the certifying intervals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass(String),
    Fail(String),
    Undecided(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass(_) => "pass",
            Verdict::Fail(_) => "fail",
            Verdict::Undecided(_) => "undecided",
        }
    }

    pub fn detail(&self) -> &str {
        match self {
            Verdict::Pass(s) | Verdict::Fail(s) | Verdict::Undecided(s) => s,
        }
    }

    /// Fail dominates Undecided, which dominates Pass. Details are joined.
    pub fn combine<I: IntoIterator<Item = Verdict>>(parts: I) -> Verdict {
        let parts: Vec<Verdict> = parts.into_iter().collect();
        let pick = |want: fn(&Verdict) -> bool| -> Vec<&str> {
            parts.iter().filter(|v| want(v)).map(Verdict::detail).collect()
        };
        let fails = pick(|v| matches!(v, Verdict::Fail(_)));
        if !fails.is_empty() {
            return Verdict::Fail(fails.join("; "));
        }
        let undecided = pick(|v| matches!(v, Verdict::Undecided(_)));
        if !undecided.is_empty() {
            return Verdict::Undecided(undecided.join("; "));
        }
        Verdict::Pass(pick(|_| true).join("; "))
    }

    /// Maps findings to `Fail`, leaving input errors as errors.
    pub fn from_result(r: Result<Verdict, TheoremError>) -> Result<Verdict, TheoremError> {
        match r {
            Err(e) if e.is_finding() => Ok(Verdict::Fail(e.to_string())),
            other => other,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.label(), self.detail())
    }
}

/// Registry of named checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Recurrence,
    Bounds,
    Signs,
    Monotonic,
    Interlace,
    Proposition,
    Census,
    Chu,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Recurrence,
        Check::Bounds,
        Check::Signs,
        Check::Monotonic,
        Check::Interlace,
        Check::Proposition,
        Check::Census,
        Check::Chu,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Recurrence => "recurrence",
            Check::Bounds => "bounds",
            Check::Signs => "signs",
            Check::Monotonic => "monotonic",
            Check::Interlace => "interlace",
            Check::Proposition => "proposition",
            Check::Census => "census",
            Check::Chu => "chu",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL.into_iter().find(|c| c.as_str() == s.trim()).ok_or_else(|| format!("unknown check '{s}'"))
    }
}
