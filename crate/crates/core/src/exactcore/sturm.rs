use std::fmt;

use super::poly::Poly;
use super::rational::{Rational, Sign};
use super::ExactError;

/// Endpoint of a counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl Bound {
    fn rank(&self) -> u8 {
        match self {
            Bound::NegInfinity => 0,
            Bound::Finite(_) => 1,
            Bound::PosInfinity => 2,
        }
    }

    fn below(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => self.rank() < other.rank(),
        }
    }
}

impl From<Rational> for Bound {
    fn from(x: Rational) -> Self {
        Bound::Finite(x)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInfinity => f.write_str("-inf"),
            Bound::Finite(x) => write!(f, "{x}"),
            Bound::PosInfinity => f.write_str("+inf"),
        }
    }
}

/// Sturm sequence `p, p', -rem(p, p'), ...` ending at a nonzero constant
/// or at `gcd(p, p')` (up to scale).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<Poly>,
}

impl SturmChain {
    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Last element, proportional to `gcd(p, p')`.
    pub fn last(&self) -> &Poly {
        self.polys.last().expect("chain holds at least p")
    }

    pub fn is_squarefree(&self) -> bool {
        self.last().degree() == Some(0)
    }

    fn signs_at(&self, at: &Bound) -> impl Iterator<Item = Sign> + '_ {
        let at = at.clone();
        self.polys.iter().map(move |p| match &at {
            Bound::NegInfinity => p.sign_at_neg_infinity(),
            Bound::PosInfinity => p.sign_at_pos_infinity(),
            Bound::Finite(x) => p.sign_at(x),
        })
    }

    /// Sign variations of the chain at `at`, zeros skipped.
    pub fn variations_at(&self, at: &Bound) -> usize {
        let mut count = 0;
        let mut prev: Option<Sign> = None;
        for s in self.signs_at(at).filter(|s| *s != Sign::Zero) {
            if prev.is_some_and(|p| p != s) {
                count += 1;
            }
            prev = Some(s);
        }
        count
    }

    /// Distinct roots in `(lo, hi]`; `lo` must not be a root.
    pub fn count_between(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }
}

pub fn sturm_chain(p: &Poly) -> Result<SturmChain, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut polys = vec![p.clone()];
    let dp = p.derivative();
    if dp.is_zero() {
        return Ok(SturmChain { polys });
    }
    polys.push(dp);
    loop {
        let n = polys.len();
        let next = -polys[n - 2].rem(&polys[n - 1])?;
        if next.is_zero() {
            break;
        }
        polys.push(next);
    }
    Ok(SturmChain { polys })
}

/// Number of distinct real roots of a squarefree `p` in `(lo, hi)`.
///
/// Finite endpoints must not be roots; infinite endpoints use the
/// leading-term sign of each chain element.
pub fn count_real_roots(p: &Poly, lo: &Bound, hi: &Bound) -> Result<usize, ExactError> {
    let chain = sturm_chain(p)?;
    if !chain.is_squarefree() {
        return Err(ExactError::NotSquarefree { gcd: chain.last().monic() });
    }
    if !lo.below(hi) {
        return Err(ExactError::EmptyInterval { lo: lo.to_string(), hi: hi.to_string() });
    }
    for end in [lo, hi] {
        if let Bound::Finite(x) = end {
            if p.sign_at(x) == Sign::Zero {
                return Err(ExactError::RootAtEndpoint(x.clone()));
            }
        }
    }
    Ok(chain.count_between(lo, hi))
}

/// Descartes sign-variation count; an upper bound on positive roots with
/// the same parity.
pub fn descartes_positive_count(p: &Poly) -> usize {
    p.sign_variations()
}
