//! The generalized Narayana family
//!
//! `N_{n,m}(x) = sum_{k=0}^{n} (C(n,k)C(m,k) - C(n,k+1)C(m,k-1)) x^k`
//!
//! together with the classical reductions at `n = m+1`, the difference
//! `N_{n-1,m} - N_{n,m}` in closed form, and the three-term recurrence
//!
//! `c_{n,m}(x) N_{n,m+1}(x) = a_{n,m}(x) N_{n,m}(x) + b_{n,m}(x) N_{n-1,m}(x)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exactcore::{binomial, int, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NarayanaError {
    #[error("{idx} is outside the required regime {required}")]
    Regime { idx: FamilyIndex, required: &'static str },
    #[error("Narayana number N(n, k) needs n >= 1, got n = {0}")]
    NarayanaIndex(i64),
    #[error("recurrence numerator for {idx} is not divisible by c: remainder {remainder}")]
    NonzeroRemainder { idx: FamilyIndex, remainder: Poly },
    #[error("auxiliary constants for {idx} fail the cross-check: {detail}")]
    AuxiliaryMismatch { idx: FamilyIndex, detail: String },
}

/// Selects the member `N_{n,m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyIndex {
    pub n: u32,
    pub m: u32,
}

/// Where `(n, m)` sits relative to the diagonal `n = m+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `n <= m`
    Lower,
    /// `n = m+1`, the classical Narayana polynomials
    Classical,
    /// `n = m+2`, positive zero exactly at 1
    ChuVandermonde,
    /// `n >= m+3`, where the zero bounds apply
    BoundedZero,
}

impl FamilyIndex {
    pub fn new(n: u32, m: u32) -> Self {
        FamilyIndex { n, m }
    }

    pub fn regime(&self) -> Regime {
        let (n, m) = (u64::from(self.n), u64::from(self.m));
        if n <= m {
            Regime::Lower
        } else if n == m + 1 {
            Regime::Classical
        } else if n == m + 2 {
            Regime::ChuVandermonde
        } else {
            Regime::BoundedZero
        }
    }

    /// `n >= m + offset`
    pub fn at_least(&self, offset: u32) -> bool {
        u64::from(self.n) >= u64::from(self.m) + u64::from(offset)
    }

    pub(crate) fn require(&self, offset: u32, required: &'static str) -> Result<(), NarayanaError> {
        if self.at_least(offset) {
            Ok(())
        } else {
            Err(NarayanaError::Regime { idx: *self, required })
        }
    }
}

impl fmt::Display for FamilyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={})", self.n, self.m)
    }
}

fn binom(n: u32, k: i64) -> BigInt {
    binomial(i64::from(n), k).expect("upper index is unsigned")
}

/// `C(n,k)C(m,k) - C(n,k+1)C(m,k-1)`
pub fn gn_coefficient(idx: FamilyIndex, k: u32) -> Rational {
    let k = i64::from(k);
    let v = binom(idx.n, k) * binom(idx.m, k) - binom(idx.n, k + 1) * binom(idx.m, k - 1);
    Rational::from_integer(v)
}

/// `N_{n,m}(x)`, summed over `k = 0..=n` and normalized.
pub fn gn_poly(idx: FamilyIndex) -> Poly {
    Poly::new((0..=idx.n).map(|k| gn_coefficient(idx, k)).collect())
}

/// Classical Narayana number `C(n,k) C(n,k+1) / n`.
pub fn narayana_number(n: i64, k: i64) -> Result<Rational, NarayanaError> {
    if n < 1 {
        return Err(NarayanaError::NarayanaIndex(n));
    }
    let num = binomial(n, k).expect("n >= 1") * binomial(n, k + 1).expect("n >= 1");
    Ok(Rational::new(num, BigInt::from(n)))
}

/// `C(2n, n) / (n+1)`
pub fn catalan(n: u32) -> Rational {
    let n = i64::from(n);
    Rational::new(binomial(2 * n, n).expect("nonnegative"), BigInt::from(n + 1))
}

/// `N_{n-1,m} - N_{n,m}` from its closed form
/// `sum_k C(n,k) C(m,k-1) (n-m-1)/n x^k`, for `n >= m+2`.
pub fn diff_poly(idx: FamilyIndex) -> Result<Poly, NarayanaError> {
    idx.require(2, "n >= m+2")?;
    let (n, m) = (i64::from(idx.n), i64::from(idx.m));
    let factor = Rational::new(BigInt::from(n - m - 1), BigInt::from(n));
    let coeffs = (0..=m + 1).map(|k| Rational::from_integer(binom(idx.n, k) * binom(idx.m, k - 1)) * &factor).collect();
    Ok(Poly::new(coeffs))
}

/// Coefficient polynomials of the recurrence in `m` and the auxiliary
/// constants of the coefficient comparison:
///
/// - `a = A x - 2n`, `A = (m+2-n)(m^2-n^2+4m+3)`
/// - `b = n((m+2-n)(m+1-n)x - 2)(x - 1) = B x^2 - C x + 2n`, `B = n(m+2-n)(m+1-n)`, `C = B + 2n`
/// - `c = (m+3)(m+2-n)(m+1-n) x`
/// - `D = (m+1-n)(m^2-mn+5m-n+6)`, with `A = C + D`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCoeffs {
    pub idx: FamilyIndex,
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub aux_a: Rational,
    pub aux_b: Rational,
    pub aux_c: Rational,
    pub aux_d: Rational,
}

impl RecurrenceCoeffs {
    /// `gamma` in `c = gamma * x`.
    pub fn c_slope(&self) -> Rational {
        self.c.coeff(1)
    }
}

pub fn recurrence_coeffs(idx: FamilyIndex) -> Result<RecurrenceCoeffs, NarayanaError> {
    if idx.n == 0 {
        return Err(NarayanaError::Regime { idx, required: "n >= 1" });
    }
    let (n, m) = (i64::from(idx.n), i64::from(idx.m));
    let (n_r, m_r) = (int(n), int(m));
    let p2 = int(m + 2 - n);
    let p1 = int(m + 1 - n);

    let aux_a = &p2 * (&m_r * &m_r - &n_r * &n_r + int(4) * &m_r + int(3));
    let aux_b = &n_r * &p2 * &p1;
    let aux_c = &aux_b + int(2) * &n_r;
    let aux_d = &p1 * (&m_r * &m_r - &m_r * &n_r + int(5) * &m_r - &n_r + int(6));

    let a = Poly::new(vec![int(-2 * n), aux_a.clone()]);
    let b = Poly::new(vec![int(-2), &p2 * &p1]) * Poly::from_ints(&[-1, 1]);
    let b = b.scale(&n_r);
    let c = Poly::monomial(int(m + 3) * &p2 * &p1, 1);

    let mismatch = |detail: String| NarayanaError::AuxiliaryMismatch { idx, detail };
    if aux_a != &aux_c + &aux_d {
        return Err(mismatch(format!("A = {aux_a}, C + D = {}", &aux_c + &aux_d)));
    }
    let b_expanded = Poly::new(vec![int(2 * n), -aux_c.clone(), aux_b.clone()]);
    if b != b_expanded {
        return Err(mismatch(format!("b = {b}, B x^2 - C x + 2n = {b_expanded}")));
    }

    Ok(RecurrenceCoeffs { idx, a, b, c, aux_a, aux_b, aux_c, aux_d })
}

/// `c N_{n,m+1} - a N_{n,m} - b N_{n-1,m}`; zero exactly when the
/// recurrence holds at `idx`.
pub fn recurrence_residual(idx: FamilyIndex) -> Result<Poly, NarayanaError> {
    let rc = recurrence_coeffs(idx)?;
    let (n, m) = (idx.n, idx.m);
    let lhs = &rc.c * &gn_poly(FamilyIndex::new(n, m + 1));
    let rhs = &(&rc.a * &gn_poly(idx)) + &(&rc.b * &gn_poly(FamilyIndex::new(n - 1, m)));
    Ok(&lhs - &rhs)
}

/// True iff the three-term recurrence is an exact polynomial identity at `idx`.
pub fn verify_recurrence(idx: FamilyIndex) -> Result<bool, NarayanaError> {
    recurrence_residual(idx).map(|r| r.is_zero())
}

/// `N_{n,m+1}` obtained from `N_{n,m}` and `N_{n-1,m}` through the
/// normalized recurrence, dividing exactly by `c = gamma x`.
pub fn apply_recurrence(idx: FamilyIndex) -> Result<Poly, NarayanaError> {
    if idx.n == 0 || matches!(idx.regime(), Regime::Classical | Regime::ChuVandermonde) {
        return Err(NarayanaError::Regime { idx, required: "n >= 1, n != m+1, n != m+2" });
    }
    let rc = recurrence_coeffs(idx)?;
    let numerator = &(&rc.a * &gn_poly(idx)) + &(&rc.b * &gn_poly(FamilyIndex::new(idx.n - 1, idx.m)));
    let (q, r) = numerator.div_rem(&rc.c).expect("c is nonzero away from n = m+1, m+2");
    if !r.is_zero() {
        return Err(NarayanaError::NonzeroRemainder { idx, remainder: r });
    }
    Ok(q)
}

/// `N_{m+2,m}(1) = 0`
pub fn chu_vandermonde_check(m: u32) -> bool {
    gn_poly(FamilyIndex::new(m + 2, m)).eval(&int(1)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    fn idx(n: u32, m: u32) -> FamilyIndex {
        FamilyIndex::new(n, m)
    }

    #[test]
    fn coefficient_examples() {
        for (n, m) in [(0, 0), (4, 7), (9, 2)] {
            assert_eq!(gn_coefficient(idx(n, m), 0), int(1));
        }
        assert_eq!(gn_coefficient(idx(5, 2), 1), int(0));
        // leading term -C(n, m+2) x^{m+1} when n >= m+2
        assert_eq!(gn_coefficient(idx(7, 2), 3), int(-35));
        assert_eq!(gn_coefficient(idx(4, 2), 3), int(-1));
    }

    #[test]
    fn small_members() {
        assert_eq!(gn_poly(idx(3, 2)), Poly::from_ints(&[1, 3, 1]));
        assert_eq!(gn_poly(idx(5, 1)), Poly::from_ints(&[1, -5, -10]));
        assert_eq!(gn_poly(idx(5, 2)), Poly::from_ints(&[1, 0, -10, -5]));
        assert_eq!(gn_poly(idx(2, 0)), Poly::from_ints(&[1, -1]));
        assert_eq!(gn_poly(idx(0, 0)), Poly::from_ints(&[1]));
    }

    #[test]
    fn m_zero_and_one_closed_forms() {
        for n in 0..30i64 {
            let n0 = Poly::from_ints(&[1, -(n * (n - 1) / 2)]);
            assert_eq!(gn_poly(idx(n as u32, 0)), n0, "N_{{{n},0}}");
        }
        for n in 3..30i64 {
            let c3 = n * (n - 1) * (n - 2) / 6;
            let n1 = Poly::new(vec![int(1), rat(-n * (n - 3), 2), int(-c3)]);
            assert_eq!(gn_poly(idx(n as u32, 1)), n1, "N_{{{n},1}}");
        }
    }

    #[test]
    fn narayana_and_catalan() {
        assert_eq!(narayana_number(3, 1).unwrap(), int(3));
        assert_eq!(narayana_number(6, 0).unwrap(), int(1));
        assert_eq!(narayana_number(4, -1).unwrap(), int(0));
        assert_eq!(narayana_number(4, 4).unwrap(), int(0));
        assert_eq!(narayana_number(0, 0), Err(NarayanaError::NarayanaIndex(0)));
        assert_eq!(catalan(0), int(1));
        assert_eq!(catalan(3), int(5));
        assert_eq!(catalan(5), int(42));
    }

    #[test]
    fn difference_examples() {
        assert_eq!(diff_poly(idx(5, 1)).unwrap(), Poly::from_ints(&[0, 3, 6]));
        for n in 2..20 {
            assert_eq!(diff_poly(idx(n, 0)).unwrap(), Poly::from_ints(&[0, i64::from(n) - 1]));
        }
        assert_eq!(diff_poly(idx(9, 3)).unwrap().coeff(0), int(0));
        assert!(matches!(diff_poly(idx(4, 3)), Err(NarayanaError::Regime { .. })));
    }

    #[test]
    fn recurrence_coefficients_at_5_1() {
        let rc = recurrence_coeffs(idx(5, 1)).unwrap();
        assert_eq!(rc.a, Poly::from_ints(&[-10, 34]));
        assert_eq!(rc.b, Poly::from_ints(&[10, -40, 30]));
        assert_eq!(rc.c, Poly::from_ints(&[0, 24]));
        assert_eq!(&rc.aux_a - &rc.aux_c - &rc.aux_d, int(0));
        assert!(recurrence_coeffs(idx(0, 3)).is_err());
    }

    #[test]
    fn c_vanishes_on_first_two_diagonals() {
        for m in 0..10 {
            assert!(recurrence_coeffs(idx(m + 1, m)).unwrap().c.is_zero());
            assert!(recurrence_coeffs(idx(m + 2, m)).unwrap().c.is_zero());
        }
    }

    #[test]
    fn recurrence_at_5_1() {
        let rc = recurrence_coeffs(idx(5, 1)).unwrap();
        let lhs = &rc.c * &gn_poly(idx(5, 2));
        assert_eq!(lhs, Poly::from_ints(&[0, 24, 0, -240, -120]));
        assert!(verify_recurrence(idx(5, 1)).unwrap());
        for m in 0..8 {
            assert!(verify_recurrence(idx(m + 1, m)).unwrap());
        }
    }

    #[test]
    fn apply_recurrence_examples() {
        assert_eq!(apply_recurrence(idx(5, 1)).unwrap(), Poly::from_ints(&[1, 0, -10, -5]));
        assert_eq!(apply_recurrence(idx(6, 1)).unwrap(), gn_poly(idx(6, 2)));
        assert!(apply_recurrence(idx(2, 1)).is_err());
        assert!(apply_recurrence(idx(3, 1)).is_err());
        assert!(apply_recurrence(idx(0, 1)).is_err());
        // n <= m: c = (m+3)(m+2-n)(m+1-n) x is still nonzero
        assert_eq!(apply_recurrence(idx(2, 4)).unwrap(), gn_poly(idx(2, 5)));
    }

    #[test]
    fn numerator_has_no_constant_term() {
        for (n, m) in [(5, 1), (7, 2), (2, 6), (12, 4)] {
            let rc = recurrence_coeffs(idx(n, m)).unwrap();
            assert_eq!(rc.a.coeff(0), int(-2 * i64::from(n)));
            assert_eq!(rc.b.coeff(0), int(2 * i64::from(n)));
            let num = &(&rc.a * &gn_poly(idx(n, m))) + &(&rc.b * &gn_poly(idx(n - 1, m)));
            assert_eq!(num.coeff(0), int(0));
        }
    }

    #[test]
    fn chu_vandermonde() {
        assert_eq!(gn_poly(idx(3, 1)), Poly::from_ints(&[1, 0, -1]));
        for m in 0..=30 {
            assert!(chu_vandermonde_check(m), "m = {m}");
        }
    }

    #[test]
    fn regimes() {
        assert_eq!(idx(3, 3).regime(), Regime::Lower);
        assert_eq!(idx(4, 3).regime(), Regime::Classical);
        assert_eq!(idx(5, 3).regime(), Regime::ChuVandermonde);
        assert_eq!(idx(6, 3).regime(), Regime::BoundedZero);
    }
}
