//! Closed-form evaluators for the explicit degree and count formulas:
//! symmetric Kalman degrees, matrix Kalman degrees (general and square
//! case), eigenvector counts, and generic singular-tuple counts.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::kalman;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

fn require(cond: bool, msg: &str) -> Result<(), ParamError> {
    if cond {
        Ok(())
    } else {
        Err(ParamError::OutOfRange(msg.to_string()))
    }
}

/// Binomial coefficient with out-of-range arguments defined as zero,
/// matching the implicit bounds of the degree double sum.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Degree of the Kalman variety of symmetric tensors of order `k` on `K^n`
/// with an eigenvector in a `d`-dimensional subspace:
/// `sum_{i=0}^{d-1} C(n-d+i, i) (k-1)^i`.
pub fn symmetric_degree_closed(d: u32, n: u32, k: u32) -> Result<BigInt, ParamError> {
    require(d >= 1 && d <= n, "need 1 <= d <= n")?;
    require(k >= 2, "need k >= 2")?;
    let mut acc = BigInt::zero();
    let km1 = BigInt::from(k - 1);
    let mut pow = BigInt::one();
    for i in 0..d {
        acc += binomial((n - d + i) as i64, i as i64) * &pow;
        pow *= &km1;
    }
    Ok(acc)
}

/// Degree of the Kalman variety of n x m matrices with a singular pair
/// whose first component lies in a `d`-dimensional subspace:
/// `sum_{j=0}^{d-1} sum_{t=d-j-1}^{min(n-j-1, m-1)} C(n-j-1, t) C(t, d-1-j)`.
pub fn matrix_degree_closed(d: u32, n: u32, m: u32) -> Result<BigInt, ParamError> {
    require(d >= 1 && d <= n, "need 1 <= d <= n")?;
    require(m >= 1, "need m >= 1")?;
    let (d, n, m) = (d as i64, n as i64, m as i64);
    let mut acc = BigInt::zero();
    for j in 0..d {
        let hi = (n - j - 1).min(m - 1);
        let mut t = d - j - 1;
        while t <= hi {
            acc += binomial(n - j - 1, t) * binomial(t, d - 1 - j);
            t += 1;
        }
    }
    Ok(acc)
}

/// Square-case simplification, valid for n <= m: `2^{n-d} C(n, d-1)`.
pub fn matrix_degree_square(d: u32, n: u32) -> Result<BigInt, ParamError> {
    require(d >= 1 && d <= n, "need 1 <= d <= n")?;
    Ok((BigInt::one() << (n - d)) * binomial(n as i64, d as i64 - 1))
}

/// Number of eigenvectors of a generic symmetric tensor:
/// `((k-1)^n - 1) / (k-2)`, which degenerates to `n` at k = 2.
pub fn eigenvector_count(n: u32, k: u32) -> Result<BigInt, ParamError> {
    require(n >= 1, "need n >= 1")?;
    require(k >= 2, "need k >= 2")?;
    if k == 2 {
        return Ok(BigInt::from(n));
    }
    let num = BigInt::from(k - 1).pow(n) - BigInt::one();
    let den = BigInt::from(k - 2);
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "eigenvector count division must be exact");
    Ok(q)
}

/// Generic number of singular k-tuples of a tensor of shape `dims`,
/// obtained as the Kalman degree at full first subspace (d = n_1).
pub fn singular_tuple_count(dims: &[u32]) -> Result<BigInt, ParamError> {
    require(!dims.is_empty() && dims.iter().all(|&n| n >= 1), "dims must be nonempty, each >= 1")?;
    let report = kalman::general_degree_homogeneous(dims[0], dims)
        .map_err(|e| ParamError::OutOfRange(e.to_string()))?;
    Ok(report.degree)
}
