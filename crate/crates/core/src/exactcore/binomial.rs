use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ExactError;

/// `C(n, k)`, zero when `k` is outside `0..=n`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt, ExactError> {
    if n < 0 {
        return Err(ExactError::NegativeBinomial(n));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i+1) after the division
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Ok(acc)
}
