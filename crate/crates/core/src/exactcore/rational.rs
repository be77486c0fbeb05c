use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational; `num-rational` keeps it reduced with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `(a + b) / 2`, reduced.
///
/// Bisection endpoints have denominators `q * 2^k` with a small odd part
/// `q`. Stripping the shared twos first and running Euclid on what is left
/// keeps this linear in the size of `k`, where the generic binary gcd used
/// by `Ratio::new` is quadratic.
pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    let num = a.numer() * b.denom() + b.numer() * a.denom();
    let den = (a.denom() * b.denom()) << 1usize;
    if num.is_zero() {
        return Rational::zero();
    }
    // gcd(2^f r, 2^e q) = 2^min(e, f) gcd(r, q) for odd r, q
    let (f, e) = (num.trailing_zeros().unwrap_or(0), den.trailing_zeros().unwrap_or(0));
    let odd = euclid(num.magnitude() >> f, den.magnitude() >> e);
    let g = BigInt::from(odd) << f.min(e);
    Rational::new_raw(num / &g, den / g)
}

/// Ordering by cross-multiplication; denominators are positive.
pub fn cmp(a: &Rational, b: &Rational) -> Ordering {
    (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
}

fn euclid(mut a: BigUint, mut b: BigUint) -> BigUint {
    if a < b {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: &Rational) -> Sign {
        if value.is_zero() {
            Sign::Zero
        } else if value.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_on_construction() {
        let r = rat(6, -4);
        assert_eq!(*r.numer(), BigInt::from(-3));
        assert_eq!(*r.denom(), BigInt::from(2));
        let z = rat(0, -7);
        assert_eq!(*z.denom(), BigInt::from(1));
    }

    #[test]
    fn midpoint_is_reduced_average() {
        let cases = [(rat(1, 7), rat(1, 6)), (rat(-3, 4), rat(5, 12)), (int(0), int(0)), (rat(-1, 2), rat(1, 2))];
        for (a, b) in cases {
            let m = midpoint(&a, &b);
            assert_eq!(m, (&a + &b) / int(2));
            let reduced = Rational::new(m.numer().clone(), m.denom().clone());
            assert_eq!((m.numer(), m.denom()), (reduced.numer(), reduced.denom()));
        }
        let big = Rational::new(BigInt::from(3), BigInt::from(7) << 3000usize);
        let m = midpoint(&big, &(&big * int(3)));
        assert_eq!(m, &big * int(2));
    }

    #[test]
    fn cmp_agrees_with_ord() {
        let xs = [rat(-7, 3), rat(-1, 2), int(0), rat(1, 3), rat(2, 6), rat(5, 4), int(9)];
        for a in &xs {
            for b in &xs {
                assert_eq!(cmp(a, b), a.cmp(b), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn sign_of() {
        assert_eq!(Sign::of(&rat(-1, 3)), Sign::Negative);
        assert_eq!(Sign::of(&int(0)), Sign::Zero);
        assert_eq!(Sign::of(&rat(2, 9)).as_i8(), 1);
    }
}
