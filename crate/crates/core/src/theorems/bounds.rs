use std::fmt;

use num_traits::{Signed, Zero};

use super::{TheoremError, Verdict};
use crate::exactcore::{int, Rational, Sign};
use crate::narayana::{gn_poly, recurrence_coeffs, FamilyIndex};

/// Rational bracket around the positive zero of `N_{n,m}`, `n >= m+3`:
///
/// `2(n+1) / ((m+1-n)((m+2)^2-(n+1)^2-1)) < r <= 2 / ((m-n)(m+1-n))`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPair {
    pub lower: Rational,
    pub upper: Rational,
    pub idx: FamilyIndex,
}

impl fmt::Display for BoundPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

pub fn theorem31_bounds(idx: FamilyIndex) -> Result<BoundPair, TheoremError> {
    idx.require(3, "n >= m+3")?;
    let (n, m) = (i64::from(idx.n), i64::from(idx.m));
    let lower_den = int(m + 1 - n) * int((m + 2) * (m + 2) - (n + 1) * (n + 1) - 1);
    let upper_den = int(m - n) * int(m + 1 - n);
    for den in [&lower_den, &upper_den] {
        if !den.is_positive() {
            return Err(TheoremError::BoundDenominator { idx, denominator: den.clone() });
        }
    }
    Ok(BoundPair { lower: int(2 * (n + 1)) / lower_den, upper: int(2) / upper_den, idx })
}

/// Exact values of `N_{n,m}` at both ends of its bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsWitness {
    pub bounds: BoundPair,
    pub value_at_lower: Rational,
    pub value_at_upper: Rational,
}

impl BoundsWitness {
    /// `N(lower) > 0`, and `N(upper) = 0` when `m = 0`, `N(upper) < 0`
    /// otherwise.
    pub fn passed(&self) -> bool {
        let upper_ok =
            if self.bounds.idx.m == 0 { self.value_at_upper.is_zero() } else { self.value_at_upper.is_negative() };
        self.value_at_lower.is_positive() && upper_ok
    }

    pub fn verdict(&self) -> Verdict {
        let detail = format!(
            "N({}) = {} [{}], N({}) = {} [{}]",
            self.bounds.lower,
            self.value_at_lower,
            Sign::of(&self.value_at_lower),
            self.bounds.upper,
            self.value_at_upper,
            Sign::of(&self.value_at_upper),
        );
        if self.passed() {
            Verdict::Pass(detail)
        } else {
            Verdict::Fail(detail)
        }
    }
}

pub fn verify_bounds(idx: FamilyIndex) -> Result<BoundsWitness, TheoremError> {
    let bounds = theorem31_bounds(idx)?;
    let p = gn_poly(idx);
    Ok(BoundsWitness { value_at_lower: p.eval(&bounds.lower), value_at_upper: p.eval(&bounds.upper), bounds })
}

/// Quantities in the inductive step from `m` to `m+1` at a fixed
/// `n >= m+4`: the bracket `x1 < r_{n,m+1} < x2` of `N_{n,m+1}` and every
/// recurrence term evaluated there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionStep {
    pub idx: FamilyIndex,
    pub x1: Rational,
    pub x2: Rational,
    pub a_x1: Rational,
    pub b_x1: Rational,
    pub c_x1: Rational,
    pub a_x2: Rational,
    pub b_x2: Rational,
    pub c_x2: Rational,
    /// `N_{n,m}(x1)`
    pub current_x1: Rational,
    /// `N_{n-1,m}(x1)`
    pub previous_x1: Rational,
    /// `N_{n,m}(x2)`
    pub current_x2: Rational,
    /// `N_{n,m+1}(x1)`
    pub next_x1: Rational,
    /// `N_{n,m+1}(x2)`
    pub next_x2: Rational,
    /// lower bound of `N_{n-1,m}`
    pub previous_lower: Rational,
}

pub fn induction_step(idx: FamilyIndex) -> Result<InductionStep, TheoremError> {
    idx.require(4, "n >= m+4")?;
    let next = theorem31_bounds(FamilyIndex::new(idx.n, idx.m + 1))?;
    let previous = theorem31_bounds(FamilyIndex::new(idx.n - 1, idx.m))?;
    let rc = recurrence_coeffs(idx)?;
    let current = gn_poly(idx);
    let prev_poly = gn_poly(FamilyIndex::new(idx.n - 1, idx.m));
    let next_poly = gn_poly(FamilyIndex::new(idx.n, idx.m + 1));
    let (x1, x2) = (next.lower, next.upper);
    Ok(InductionStep {
        idx,
        a_x1: rc.a.eval(&x1),
        b_x1: rc.b.eval(&x1),
        c_x1: rc.c.eval(&x1),
        a_x2: rc.a.eval(&x2),
        b_x2: rc.b.eval(&x2),
        c_x2: rc.c.eval(&x2),
        current_x1: current.eval(&x1),
        previous_x1: prev_poly.eval(&x1),
        current_x2: current.eval(&x2),
        next_x1: next_poly.eval(&x1),
        next_x2: next_poly.eval(&x2),
        previous_lower: previous.lower,
        x1,
        x2,
    })
}

impl InductionStep {
    /// Case 1 of the lower-bound argument applies when `N_{n,m}(x1) <= 0`.
    pub fn is_case_one(&self) -> bool {
        !self.current_x1.is_positive()
    }

    /// Every sign the inductive argument relies on, checked exactly.
    pub fn verdict(&self) -> Verdict {
        let one = int(1);
        let mut failed = Vec::new();
        let mut require = |ok: bool, what: &str| {
            if !ok {
                failed.push(what.to_string());
            }
        };
        require(self.x1.is_positive() && self.x1 < self.x2, "0 < x1 < x2");
        require(self.x1 < one, "x1 < 1");
        require(self.c_x1.is_positive(), "c(x1) > 0");
        require(self.a_x1.is_negative(), "a(x1) < 0");
        require(self.b_x1.is_positive(), "b(x1) > 0");
        require(self.x1 < self.previous_lower, "x1 below lower bound of N_{n-1,m}");
        require(self.previous_x1.is_positive(), "N_{n-1,m}(x1) > 0");
        if !self.is_case_one() {
            require(self.previous_x1 > self.current_x1, "N_{n-1,m}(x1) > N_{n,m}(x1)");
            require((&self.a_x1 + &self.b_x1).is_positive(), "a(x1) + b(x1) > 0");
        }
        require(self.next_x1.is_positive(), "N_{n,m+1}(x1) > 0");
        require(self.b_x2.is_zero(), "b(x2) = 0");
        require(self.a_x2.is_positive(), "a(x2) > 0");
        require(self.c_x2.is_positive(), "c(x2) > 0");
        require(self.current_x2.is_negative(), "N_{n,m}(x2) < 0");
        require(self.next_x2.is_negative(), "N_{n,m+1}(x2) < 0");
        let case = if self.is_case_one() { 1 } else { 2 };
        if failed.is_empty() {
            Verdict::Pass(format!("case {case}, x1 = {}, x2 = {}", self.x1, self.x2))
        } else {
            Verdict::Fail(format!("case {case}: violated {}", failed.join(", ")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    fn idx(n: u32, m: u32) -> FamilyIndex {
        FamilyIndex::new(n, m)
    }

    #[test]
    fn bracket_examples() {
        let b = theorem31_bounds(idx(3, 0)).unwrap();
        assert_eq!((b.lower, b.upper), (rat(4, 13), rat(1, 3)));
        let b = theorem31_bounds(idx(5, 1)).unwrap();
        assert_eq!((b.lower, b.upper), (rat(1, 7), rat(1, 6)));
        for n in 3..40i64 {
            let b = theorem31_bounds(idx(n as u32, 0)).unwrap();
            assert_eq!(b.upper, rat(2, n * (n - 1)));
        }
        assert!(theorem31_bounds(idx(4, 2)).is_err());
    }

    #[test]
    fn m_one_upper_value() {
        for n in 4..40i64 {
            let w = verify_bounds(idx(n as u32, 1)).unwrap();
            assert_eq!(w.bounds.upper, rat(2, (n - 1) * (n - 2)));
            assert_eq!(w.value_at_upper, rat(-2 * (n - 3), 3 * (n - 1) * (n - 2)));
            assert!(w.passed());
        }
    }

    #[test]
    fn m_zero_upper_is_root() {
        for n in 3..30 {
            let w = verify_bounds(idx(n, 0)).unwrap();
            assert!(w.value_at_upper.is_zero());
            assert!(w.passed());
        }
    }

    #[test]
    fn step_quantities_at_5_1() {
        let s = induction_step(idx(5, 1)).unwrap();
        assert_eq!(s.x1, rat(2, 7));
        assert_eq!(s.current_x1, rat(-61, 49));
        assert!(s.is_case_one());
        assert!(s.verdict().is_pass(), "{}", s.verdict());
        let s = induction_step(idx(50, 1)).unwrap();
        assert_eq!(s.current_x1, rat(48074, 410346049));
        assert!(!s.is_case_one());
        assert!(s.verdict().is_pass(), "{}", s.verdict());
    }
}
