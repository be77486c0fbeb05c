use std::fmt;

use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use std::cmp::Ordering;

use super::rational::{cmp, int, midpoint, Rational, Sign};
use super::sturm::{sturm_chain, Bound, SturmChain};
use super::ExactError;

/// Certified enclosure of a single real root.
///
/// Either `exact` holds the root (and `lo == hi == exact`), or the target
/// polynomial takes strictly opposite nonzero signs at `lo` and `hi` and
/// has exactly one root in between.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: Option<Rational>,
}

impl RootInterval {
    pub fn exact(root: Rational) -> Self {
        RootInterval { lo: root.clone(), hi: root.clone(), exact: Some(root) }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn midpoint(&self) -> Rational {
        midpoint(&self.lo, &self.hi)
    }

    /// Closed-interval disjointness: every point of `self` lies strictly
    /// below every point of `other`.
    pub fn strictly_below(&self, other: &RootInterval) -> bool {
        cmp(&self.hi, &other.lo) == Ordering::Less
    }

    /// Position of `x` relative to the closed enclosure.
    pub fn locate(&self, x: &Rational) -> Ordering {
        if cmp(x, &self.lo) == Ordering::Less {
            Ordering::Less
        } else if cmp(x, &self.hi) == Ordering::Greater {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }

    /// Re-evaluates `p` at the endpoints and confirms the enclosure.
    pub fn certifies(&self, p: &Poly) -> bool {
        match &self.exact {
            Some(r) => self.lo == *r && self.hi == *r && p.sign_at(r) == Sign::Zero,
            None => {
                let (a, b) = (p.sign_at(&self.lo), p.sign_at(&self.hi));
                self.lo < self.hi && a != Sign::Zero && b != Sign::Zero && a != b
            }
        }
    }

    /// One exact bisection step. Exact intervals are returned unchanged.
    pub fn bisect(&self, p: &Poly) -> RootInterval {
        if self.is_exact() {
            return self.clone();
        }
        let mid = self.midpoint();
        let s_mid = p.sign_at(&mid);
        if s_mid == Sign::Zero {
            return RootInterval::exact(mid);
        }
        if s_mid == p.sign_at(&self.lo) {
            RootInterval { lo: mid, hi: self.hi.clone(), exact: None }
        } else {
            RootInterval { lo: self.lo.clone(), hi: mid, exact: None }
        }
    }

    /// Bisects until the width is at most `target` or the root is hit.
    pub fn refine_to_width(&self, p: &Poly, target: &Rational) -> RootInterval {
        let mut cur = self.clone();
        while !cur.is_exact() && cmp(&cur.width(), target) == Ordering::Greater {
            cur = cur.bisect(p);
        }
        cur
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(r) => write!(f, "{{{r}}}"),
            None => write!(f, "({}, {})", self.lo, self.hi),
        }
    }
}

fn pow2(bits: u32) -> Rational {
    Rational::from_integer(num_bigint::BigInt::one() << bits)
}

/// Isolates the single root of `p` in `[lo, hi]` to width at most
/// `(hi - lo) * 2^-bits`, or exactly if bisection lands on it. Linear
/// polynomials are solved directly.
pub fn isolate_unique_root(p: &Poly, lo: &Rational, hi: &Rational, bits: u32) -> Result<RootInterval, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if lo > hi {
        return Err(ExactError::EmptyInterval { lo: lo.to_string(), hi: hi.to_string() });
    }
    let (s_lo, s_hi) = (p.sign_at(lo), p.sign_at(hi));
    if s_lo == Sign::Zero {
        return Ok(RootInterval::exact(lo.clone()));
    }
    if s_hi == Sign::Zero {
        return Ok(RootInterval::exact(hi.clone()));
    }
    if s_lo == s_hi {
        return Err(ExactError::SameSign { lo: lo.to_string(), hi: hi.to_string() });
    }
    if p.degree() == Some(1) {
        // opposite signs at the ends put the only root inside
        return Ok(RootInterval::exact(-p.coeff(0) / p.coeff(1)));
    }
    let chain = sturm_chain(p)?;
    let count = chain.count_between(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
    if count != 1 {
        return Err(ExactError::MultipleRoots { lo: lo.to_string(), hi: hi.to_string(), count });
    }
    let start = RootInterval { lo: lo.clone(), hi: hi.clone(), exact: None };
    let target = start.width() / pow2(bits);
    Ok(start.refine_to_width(p, &target))
}

/// `1 + max |c_k / c_lead|`; every real root lies strictly inside
/// `(-bound, bound)`.
pub fn cauchy_bound(p: &Poly) -> Result<Rational, ExactError> {
    let lead = p.leading().ok_or(ExactError::ZeroPolynomial)?.abs();
    let d = p.coeffs().len() - 1;
    let max = p.coeffs()[..d].iter().map(|c| c.abs() / &lead).max().unwrap_or_else(Rational::zero);
    Ok(Rational::one() + max)
}

fn finite(x: &Rational) -> Bound {
    Bound::Finite(x.clone())
}

/// Isolates every root of a squarefree `p` inside the open interval
/// `(lo, hi)` by Sturm-guided bisection; `p(lo)` and `p(hi)` must be
/// nonzero. Intervals come back sorted and pairwise disjoint as closed
/// intervals.
pub fn isolate_real_roots(p: &Poly, lo: &Rational, hi: &Rational, bits: u32) -> Result<Vec<RootInterval>, ExactError> {
    let chain = sturm_chain(p)?;
    if !chain.is_squarefree() {
        return Err(ExactError::NotSquarefree { gcd: chain.last().monic() });
    }
    if lo >= hi {
        return Err(ExactError::EmptyInterval { lo: lo.to_string(), hi: hi.to_string() });
    }
    for end in [lo, hi] {
        if p.sign_at(end) == Sign::Zero {
            return Err(ExactError::RootAtEndpoint(end.clone()));
        }
    }
    let mut out = Vec::new();
    let count = chain.count_between(&finite(lo), &finite(hi));
    split(p, &chain, lo.clone(), hi.clone(), count, bits, &mut out)?;
    out.sort_by(|a, b| cmp(&a.lo, &b.lo));
    // neighbours may share a split point as a closed endpoint; that point
    // is not a root, so bisecting both pulls them apart
    for i in 1..out.len() {
        while !out[i - 1].strictly_below(&out[i]) {
            out[i - 1] = out[i - 1].bisect(p);
            out[i] = out[i].bisect(p);
        }
    }
    Ok(out)
}

fn split(
    p: &Poly,
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    count: usize,
    bits: u32,
    out: &mut Vec<RootInterval>,
) -> Result<(), ExactError> {
    match count {
        0 => return Ok(()),
        1 => {
            out.push(isolate_unique_root(p, &lo, &hi, bits)?);
            return Ok(());
        }
        _ => {}
    }
    let mid = midpoint(&lo, &hi);
    if p.sign_at(&mid) != Sign::Zero {
        let left = chain.count_between(&finite(&lo), &finite(&mid));
        let right = chain.count_between(&finite(&mid), &finite(&hi));
        split(p, chain, lo, mid.clone(), left, bits, out)?;
        return split(p, chain, mid, hi, right, bits, out);
    }
    // mid is a root: carve out a root-free-endpoint neighbourhood holding
    // only it, then recurse on both sides.
    out.push(RootInterval::exact(mid.clone()));
    let mut delta = (&hi - &lo) / int(4);
    loop {
        let (a, b) = (&mid - &delta, &mid + &delta);
        if p.sign_at(&a) != Sign::Zero
            && p.sign_at(&b) != Sign::Zero
            && chain.count_between(&finite(&a), &finite(&b)) == 1
        {
            let left = chain.count_between(&finite(&lo), &finite(&a));
            let right = chain.count_between(&finite(&b), &finite(&hi));
            split(p, chain, lo, a, left, bits, out)?;
            return split(p, chain, b, hi, right, bits, out);
        }
        delta /= int(2);
    }
}

/// All real roots of a squarefree `p`, sorted.
pub fn isolate_all_real_roots(p: &Poly, bits: u32) -> Result<Vec<RootInterval>, ExactError> {
    if p.degree().ok_or(ExactError::ZeroPolynomial)? == 0 {
        return Ok(Vec::new());
    }
    let bound = cauchy_bound(p)?;
    isolate_real_roots(p, &-bound.clone(), &bound, bits)
}
