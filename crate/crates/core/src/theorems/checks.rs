use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::bounds::theorem31_bounds;
use super::compare::separate;
use super::zeros::{certified_positive_zero, negative_zero_set, positive_zero_of};
use super::{TheoremError, Verdict, REFINEMENT_LIMIT};
use crate::exactcore::{
    count_real_roots, descartes_positive_count, int, rat, sturm_chain, Bound, Rational, RootInterval, Sign,
};
use crate::narayana::{gn_poly, FamilyIndex};

/// Checks that `N(x) > 0` for sampled `x` below the positive zero,
/// `N(x) < 0` above it and `N(x) = 0` only at an exact zero. Samples that
/// fall inside the enclosure trigger further bisection.
pub fn verify_sign_lemma(idx: FamilyIndex, samples: &[Rational], bits: u32) -> Result<Verdict, TheoremError> {
    idx.require(2, "n >= m+2")?;
    if let Some(bad) = samples.iter().find(|x| !x.is_positive()) {
        return Err(TheoremError::NonPositiveSample(bad.clone()));
    }
    let p = gn_poly(idx);
    let mut zero = positive_zero_of(idx, &p, bits)?;
    let mut verdicts = Vec::with_capacity(samples.len());
    for x in samples {
        let mut rounds = 0;
        while !zero.is_exact() && zero.locate(x) == Ordering::Equal && rounds < REFINEMENT_LIMIT {
            zero = zero.bisect(&p);
            rounds += 1;
        }
        let expected = match &zero.exact {
            Some(r) if x == r => Sign::Zero,
            Some(r) if x < r => Sign::Positive,
            Some(_) => Sign::Negative,
            None if zero.locate(x) == Ordering::Less => Sign::Positive,
            None if zero.locate(x) == Ordering::Greater => Sign::Negative,
            None => {
                verdicts.push(Verdict::Undecided(format!("x = {x} not separated from {zero}")));
                continue;
            }
        };
        let actual = p.sign_at(x);
        let detail = format!("sign N({x}) = {actual}, zero in {zero}");
        verdicts.push(if actual == expected {
            Verdict::Pass(detail)
        } else {
            Verdict::Fail(format!("{detail}, expected {expected}"))
        });
    }
    Ok(Verdict::combine(verdicts))
}

/// The three orderings of positive zeros at `(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityReport {
    pub idx: FamilyIndex,
    /// `r_{n+1,m} < r_{n,m}`
    pub along_n: Verdict,
    /// `r_{n+1,m+1} < r_{n,m}`
    pub diagonal: Verdict,
    /// `r_{n,m} < r_{n,m+1}`, only for `n >= m+4`
    pub along_m: Option<Verdict>,
}

impl MonotonicityReport {
    pub fn verdict(&self) -> Verdict {
        let mut parts = vec![self.along_n.clone(), self.diagonal.clone()];
        parts.extend(self.along_m.clone());
        Verdict::combine(parts)
    }
}

fn ordered(label: &str, smaller: FamilyIndex, larger: FamilyIndex, bits: u32) -> Result<Verdict, TheoremError> {
    let (p, q) = (gn_poly(smaller), gn_poly(larger));
    let a = positive_zero_of(smaller, &p, bits)?;
    let b = positive_zero_of(larger, &q, bits)?;
    let s = separate(&p, &a, &q, &b);
    let detail = format!("{label}: {}", s.describe());
    Ok(match s.first_below() {
        Some(true) => Verdict::Pass(detail),
        Some(false) => Verdict::Fail(detail),
        None => Verdict::Undecided(detail),
    })
}

pub fn verify_monotonicity(m: u32, n: u32, bits: u32) -> Result<MonotonicityReport, TheoremError> {
    let idx = FamilyIndex::new(n, m);
    idx.require(3, "n >= m+3")?;
    let along_n = ordered("r(n+1,m) < r(n,m)", FamilyIndex::new(n + 1, m), idx, bits)?;
    let diagonal = ordered("r(n+1,m+1) < r(n,m)", FamilyIndex::new(n + 1, m + 1), idx, bits)?;
    let along_m =
        if idx.at_least(4) { Some(ordered("r(n,m) < r(n,m+1)", idx, FamilyIndex::new(n, m + 1), bits)?) } else { None };
    Ok(MonotonicityReport { idx, along_n, diagonal, along_m })
}

/// Squarefree, degree `m+1`, one positive and `m` negative zeros.
pub fn root_census(idx: FamilyIndex) -> Result<Verdict, TheoremError> {
    idx.require(2, "n >= m+2")?;
    let p = gn_poly(idx);
    let chain = sturm_chain(&p)?;
    if !chain.is_squarefree() {
        return Ok(Verdict::Fail(format!("gcd(N, N') = {}", chain.last().monic())));
    }
    let zero = Bound::Finite(int(0));
    let positive = count_real_roots(&p, &zero, &Bound::PosInfinity)?;
    let negative = count_real_roots(&p, &Bound::NegInfinity, &zero)?;
    let total = count_real_roots(&p, &Bound::NegInfinity, &Bound::PosInfinity)?;
    let degree = p.degree().unwrap_or(0);
    let m = idx.m as usize;
    let detail = format!(
        "degree {degree}, positive {positive}, negative {negative}, total {total}, descartes {}",
        descartes_positive_count(&p)
    );
    let ok = degree == m + 1 && positive == 1 && negative == m && total == m + 1 && !p.eval(&int(0)).is_zero();
    Ok(if ok { Verdict::Pass(detail) } else { Verdict::Fail(detail) })
}

/// Strict interlacing `u_1 < v_1 < u_2 < ... < v_m < u_{m+1}` of the
/// negative zeros `v` of `N_{n,m}` and `u` of `N_{n+1,m+1}`.
pub fn verify_interlacing(idx: FamilyIndex, bits: u32) -> Result<Verdict, TheoremError> {
    idx.require(2, "n >= m+2")?;
    let outer_idx = FamilyIndex::new(idx.n + 1, idx.m + 1);
    let (p_inner, p_outer) = (gn_poly(idx), gn_poly(outer_idx));
    let inner = negative_zero_set(idx, bits)?;
    let mut outer = negative_zero_set(outer_idx, bits)?;
    let mut verdicts = Vec::new();
    for (i, v) in inner.iter().enumerate() {
        let mut v = v.clone();
        for (j, inner_first) in [(i, false), (i + 1, true)] {
            let s = if inner_first {
                separate(&p_inner, &v, &p_outer, &outer[j])
            } else {
                separate(&p_outer, &outer[j], &p_inner, &v)
            };
            let (a, b) = s.intervals();
            let (refined_outer, refined_inner) = if inner_first { (b, a) } else { (a, b) };
            let pair = format!("u{} vs v{}: {}", j + 1, i + 1, s.describe());
            outer[j] = refined_outer.clone();
            v = refined_inner.clone();
            verdicts.push(match s.first_below() {
                Some(true) => Verdict::Pass(pair),
                Some(false) => Verdict::Fail(pair),
                None => Verdict::Undecided(pair),
            });
        }
    }
    if verdicts.is_empty() {
        verdicts.push(Verdict::Pass(format!("{} has {} negative zero, nothing to interlace", outer_idx, outer.len())));
    }
    Ok(Verdict::combine(verdicts))
}

/// `0 < r <= 1/3`, with `r = 1/3` only at `(3, 0)`. Refines until the
/// enclosure falls below 1/3 when it still touches it.
pub fn proposition_containment(idx: FamilyIndex, zero: &RootInterval) -> Verdict {
    let third = rat(1, 3);
    let p = gn_poly(idx);
    let mut z = zero.clone();
    let mut rounds = 0;
    while !z.is_exact() && z.locate(&third) == Ordering::Equal && z.lo != third && rounds < REFINEMENT_LIMIT {
        z = z.bisect(&p);
        rounds += 1;
    }
    let detail = format!("zero in {z}");
    let equality_case = idx.n == 3 && idx.m == 0;
    // a non-exact enclosure holds its root strictly above `lo`
    let positive = if z.is_exact() { z.lo.is_positive() } else { !z.lo.is_negative() };
    if !positive {
        return Verdict::Fail(format!("{detail} not certified positive"));
    }
    match &z.exact {
        Some(r) if *r == third && equality_case => Verdict::Pass(detail),
        Some(r) if *r == third => Verdict::Fail(format!("{detail}: equality outside (3, 0)")),
        Some(r) if *r < third => Verdict::Pass(detail),
        Some(_) => Verdict::Fail(format!("{detail} exceeds 1/3")),
        None if z.hi < third => Verdict::Pass(detail),
        None if z.lo >= third => Verdict::Fail(format!("{detail} exceeds 1/3")),
        None => Verdict::Undecided(format!("{detail} still touches 1/3")),
    }
}

/// For `m+3 <= n <= n_max`: every positive zero lies in `(0, 1/3]`, the
/// upper bounds strictly decrease in `n`, and, if `epsilon` is given, the
/// last upper bound is below it.
pub fn verify_proposition(m: u32, n_max: u32, epsilon: Option<&Rational>, bits: u32) -> Result<Verdict, TheoremError> {
    FamilyIndex::new(n_max, m).require(3, "n_max >= m+3")?;
    let mut verdicts = Vec::new();
    let mut prev_upper: Option<Rational> = None;
    for n in m + 3..=n_max {
        let idx = FamilyIndex::new(n, m);
        let zero = certified_positive_zero(idx, bits)?;
        let v = match proposition_containment(idx, &zero) {
            Verdict::Pass(_) => None,
            other => Some(other),
        };
        verdicts.extend(v.map(|v| prefix(idx, v)));
        let upper = theorem31_bounds(idx)?.upper;
        if let Some(prev) = &prev_upper {
            if upper >= *prev {
                verdicts.push(Verdict::Fail(format!("{idx}: upper bound {upper} not below {prev}")));
            }
        }
        prev_upper = Some(upper);
    }
    let last = prev_upper.expect("range is nonempty");
    if let Some(eps) = epsilon {
        if last >= *eps {
            verdicts.push(Verdict::Fail(format!("upper bound {last} at n = {n_max} not below {eps}")));
        }
    }
    if verdicts.is_empty() {
        verdicts.push(Verdict::Pass(format!(
            "m = {m}, n = {}..={n_max}: zeros in (0, 1/3], upper bounds decreasing to {last}",
            m + 3
        )));
    }
    Ok(Verdict::combine(verdicts))
}

fn prefix(idx: FamilyIndex, v: Verdict) -> Verdict {
    match v {
        Verdict::Pass(s) => Verdict::Pass(format!("{idx}: {s}")),
        Verdict::Fail(s) => Verdict::Fail(format!("{idx}: {s}")),
        Verdict::Undecided(s) => Verdict::Undecided(format!("{idx}: {s}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(n: u32, m: u32) -> FamilyIndex {
        FamilyIndex::new(n, m)
    }

    #[test]
    fn sign_lemma_examples() {
        let p = gn_poly(idx(5, 1));
        assert_eq!(p.eval(&rat(1, 10)), rat(2, 5));
        assert_eq!(p.eval(&int(1)), int(-14));
        assert!(verify_sign_lemma(idx(5, 1), &[rat(1, 10), int(1)], 16).unwrap().is_pass());
        for n in 3..15i64 {
            let root = rat(2, n * (n - 1));
            let v = verify_sign_lemma(idx(n as u32, 0), &[root.clone(), &root / int(2), &root * int(2)], 16).unwrap();
            assert!(v.is_pass(), "{v}");
            assert!(v.detail().contains("= 0"));
        }
        assert!(matches!(verify_sign_lemma(idx(5, 1), &[int(0)], 16), Err(TheoremError::NonPositiveSample(_))));
    }

    #[test]
    fn sample_inside_enclosure_gets_refined() {
        let z = certified_positive_zero(idx(5, 1), 2).unwrap();
        let v = verify_sign_lemma(idx(5, 1), &[z.midpoint(), z.lo.clone(), z.hi.clone()], 2).unwrap();
        assert!(v.is_pass(), "{v}");
    }

    #[test]
    fn monotonicity_small_cases() {
        let r = verify_monotonicity(0, 3, 64).unwrap();
        assert!(r.along_n.is_pass() && r.diagonal.is_pass() && r.along_m.is_none());
        let r = verify_monotonicity(0, 5, 64).unwrap();
        assert!(r.verdict().is_pass(), "{}", r.verdict());
        assert!(verify_monotonicity(1, 3, 64).is_err());
    }

    #[test]
    fn census_and_interlacing() {
        for (n, m) in [(5, 1), (6, 2), (2, 0), (9, 4)] {
            assert!(root_census(idx(n, m)).unwrap().is_pass());
            let v = verify_interlacing(idx(n, m), 32).unwrap();
            assert!(v.is_pass(), "{v}");
        }
    }

    #[test]
    fn proposition_cases() {
        let z = certified_positive_zero(idx(3, 0), 64).unwrap();
        assert_eq!(z.exact, Some(rat(1, 3)));
        assert!(proposition_containment(idx(3, 0), &z).is_pass());
        // the same enclosure attributed to another member violates the equality clause
        assert!(matches!(proposition_containment(idx(4, 1), &z), Verdict::Fail(_)));
        // (4, 1) has bracket upper 1/3, strictly above its zero
        let z = certified_positive_zero(idx(4, 1), 1).unwrap();
        assert!(proposition_containment(idx(4, 1), &z).is_pass());
        assert!(verify_proposition(2, 100, Some(&rat(1, 1000)), 32).unwrap().is_pass());
        assert!(matches!(verify_proposition(2, 40, Some(&rat(1, 1000)), 32).unwrap(), Verdict::Fail(_)));
        assert!(verify_proposition(2, 4, None, 32).is_err());
    }
}
