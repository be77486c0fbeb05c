use num_traits::Zero;

use super::bounds::theorem31_bounds;
use super::TheoremError;
use crate::exactcore::{
    cauchy_bound, count_real_roots, int, isolate_real_roots, isolate_unique_root, Bound, Poly, RootInterval, Sign,
};
use crate::narayana::{gn_poly, FamilyIndex, Regime};

/// Certified enclosure of the unique positive zero of `N_{n,m}`, `n >= m+2`.
///
/// The positive root count is confirmed by a Sturm count first. For
/// `n = m+2` the zero is exactly 1; for `n >= m+3` bisection starts from
/// the rational bracket when its endpoint signs straddle the root, and
/// from `[0, Cauchy bound]` otherwise.
pub fn certified_positive_zero(idx: FamilyIndex, bits: u32) -> Result<RootInterval, TheoremError> {
    idx.require(2, "n >= m+2")?;
    let p = gn_poly(idx);
    positive_zero_of(idx, &p, bits)
}

pub(crate) fn positive_zero_of(idx: FamilyIndex, p: &Poly, bits: u32) -> Result<RootInterval, TheoremError> {
    let zero = int(0);
    let count = count_real_roots(p, &Bound::Finite(zero.clone()), &Bound::PosInfinity)?;
    if count != 1 {
        return Err(TheoremError::PositiveRootCount { idx, count });
    }
    let one = int(1);
    if idx.regime() == Regime::ChuVandermonde && p.eval(&one).is_zero() {
        return Ok(RootInterval::exact(one));
    }
    if idx.at_least(3) {
        let bracket = theorem31_bounds(idx)?;
        let (s_lo, s_hi) = (p.sign_at(&bracket.lower), p.sign_at(&bracket.upper));
        if s_lo == Sign::Positive && s_hi != Sign::Positive {
            return Ok(isolate_unique_root(p, &bracket.lower, &bracket.upper, bits)?);
        }
    }
    let outer = cauchy_bound(p)?;
    Ok(isolate_unique_root(p, &zero, &outer, bits)?)
}

/// The `m` negative zeros of `N_{n,m}`, `n >= m+2`, isolated inside
/// `(-L, 0)` with `L` the Cauchy bound, sorted ascending.
pub fn negative_zero_set(idx: FamilyIndex, bits: u32) -> Result<Vec<RootInterval>, TheoremError> {
    idx.require(2, "n >= m+2")?;
    let p = gn_poly(idx);
    let bound = cauchy_bound(&p)?;
    // N(0) = 1, so 0 is never a root
    let roots = isolate_real_roots(&p, &-bound, &int(0), bits)?;
    let expected = idx.m as usize;
    if roots.len() != expected {
        return Err(TheoremError::NegativeRootCount { idx, expected, count: roots.len() });
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{rat, Rational};

    fn idx(n: u32, m: u32) -> FamilyIndex {
        FamilyIndex::new(n, m)
    }

    // (20 x + 5)^2 compared against 65 brackets (+-sqrt(65) - 5) / 20
    fn sq(x: &Rational) -> Rational {
        let t = x * int(20) + int(5);
        &t * &t
    }

    #[test]
    fn chu_vandermonde_diagonal_exact() {
        for m in 0..=12 {
            let z = certified_positive_zero(idx(m + 2, m), 64).unwrap();
            assert_eq!(z.exact, Some(int(1)));
        }
    }

    #[test]
    fn m_zero_exact() {
        for n in 3..30i64 {
            let z = certified_positive_zero(idx(n as u32, 0), 64).unwrap();
            assert_eq!(z.exact, Some(rat(2, n * (n - 1))));
        }
    }

    #[test]
    fn five_one_positive_and_negative() {
        let z = certified_positive_zero(idx(5, 1), 20).unwrap();
        assert!(z.lo >= rat(1, 7) && z.hi <= rat(1, 6));
        assert!(z.width() <= rat(1, 42) / int(1 << 20));
        assert!(sq(&z.lo) < int(65) && int(65) < sq(&z.hi));

        let neg = negative_zero_set(idx(5, 1), 20).unwrap();
        assert_eq!(neg.len(), 1);
        // root (-5 - sqrt(65)) / 20: 20x + 5 = -sqrt(65)
        assert!(sq(&neg[0].lo) > int(65) && int(65) > sq(&neg[0].hi));
    }

    #[test]
    fn negative_sets() {
        assert!(negative_zero_set(idx(7, 0), 16).unwrap().is_empty());
        let two = negative_zero_set(idx(6, 2), 16).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two[0].strictly_below(&two[1]) && two[1].hi < int(0));
        assert!(negative_zero_set(idx(3, 2), 16).is_err());
    }
}
