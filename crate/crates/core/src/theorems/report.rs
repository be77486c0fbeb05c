use std::collections::BTreeMap;

use super::bounds::{theorem31_bounds, verify_bounds, BoundPair};
use super::checks::{proposition_containment, root_census, verify_interlacing, verify_sign_lemma};
use super::zeros::{certified_positive_zero, negative_zero_set};
use super::{Check, TheoremError, Verdict};
use crate::exactcore::{int, rat, Rational, RootInterval};
use crate::narayana::{chu_vandermonde_check, FamilyIndex, Regime};

/// Everything known about the zeros of one member `N_{n,m}`, `n >= m+2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroReport {
    pub idx: FamilyIndex,
    /// Absent on the `n = m+2` diagonal, where no bracket is defined.
    pub bracket: Option<BoundPair>,
    pub positive_zero: RootInterval,
    pub negative_zeros: Vec<RootInterval>,
    pub checks: BTreeMap<Check, Verdict>,
}

impl ZeroReport {
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(Verdict::is_pass)
    }
}

/// Sample abscissae for the sign pattern: a fixed spread plus the bracket
/// endpoints when one exists.
pub fn sign_samples(bracket: Option<&BoundPair>) -> Vec<Rational> {
    let mut samples = vec![rat(1, 1000), rat(1, 10), rat(1, 3), rat(1, 2), int(1), int(2), int(100)];
    if let Some(b) = bracket {
        samples.push(b.lower.clone());
        samples.push(b.upper.clone());
    }
    samples.sort();
    samples.dedup();
    samples
}

pub fn zero_report(idx: FamilyIndex, bits: u32) -> Result<ZeroReport, TheoremError> {
    idx.require(2, "n >= m+2")?;
    let bracket = if idx.at_least(3) { Some(theorem31_bounds(idx)?) } else { None };
    let positive_zero = certified_positive_zero(idx, bits)?;
    let negative_zeros = negative_zero_set(idx, bits)?;

    let mut checks = BTreeMap::new();
    checks.insert(Check::Census, Verdict::from_result(root_census(idx))?);
    checks.insert(Check::Signs, Verdict::from_result(verify_sign_lemma(idx, &sign_samples(bracket.as_ref()), bits))?);
    checks.insert(Check::Interlace, Verdict::from_result(verify_interlacing(idx, bits))?);
    if bracket.is_some() {
        checks.insert(Check::Bounds, verify_bounds(idx)?.verdict());
        checks.insert(Check::Proposition, proposition_containment(idx, &positive_zero));
    }
    if idx.regime() == Regime::ChuVandermonde {
        let v = if chu_vandermonde_check(idx.m) {
            Verdict::Pass("N(1) = 0".into())
        } else {
            Verdict::Fail("N(1) != 0".into())
        };
        checks.insert(Check::Chu, v);
    }
    Ok(ZeroReport { idx, bracket, positive_zero, negative_zeros, checks })
}
