use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{int, Rational, Sign};
use super::ExactError;

/// Dense univariate polynomial over the rationals, ascending powers.
///
/// The coefficient vector never carries a trailing zero; the zero
/// polynomial is the empty vector and has no degree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(a/b)` from the integer `sum c_k a^k b^(d-k)`, with the
    /// coefficients scaled to integers; avoids gcd work on large `a`, `b`.
    pub fn sign_at(&self, x: &Rational) -> Sign {
        let Some(d) = self.degree() else {
            return Sign::Zero;
        };
        let den_lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&den_lcm / c.denom())).collect();
        let (a, b) = (x.numer(), x.denom());
        let mut acc = ints[d].clone();
        let mut b_pow = b.clone();
        for c in ints[..d].iter().rev() {
            acc = acc * a + c * &b_pow;
            b_pow *= b;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => Sign::Negative,
            num_bigint::Sign::NoSign => Sign::Zero,
            num_bigint::Sign::Plus => Sign::Positive,
        }
    }

    /// Sign of `p(x)` as `x -> +inf`.
    pub fn sign_at_pos_infinity(&self) -> Sign {
        self.leading().map_or(Sign::Zero, Sign::of)
    }

    /// Sign of `p(x)` as `x -> -inf`.
    pub fn sign_at_neg_infinity(&self) -> Sign {
        match self.degree() {
            None => Sign::Zero,
            Some(d) if d % 2 == 0 => self.sign_at_pos_infinity(),
            Some(_) => self.sign_at_pos_infinity().flip(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * int(k as i64)).collect())
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), ExactError> {
        let d = divisor.degree().ok_or(ExactError::DivisionByZero)?;
        let lead = &divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d {
            let top = rem.len() - 1;
            let factor = &rem[top] / lead;
            let shift = top - d;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, ExactError> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `gcd(p, p')` is constant. The zero polynomial is not squarefree.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Sign changes in the sequence of nonzero coefficients.
    pub fn sign_variations(&self) -> usize {
        let signs: Vec<bool> = self.coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

/// Ascending-power rendering: `1 - 5*x - 10*x^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*x")?,
                _ => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl Poly {
    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }
}
