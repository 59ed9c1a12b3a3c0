//! JSON input formats for matrices, vectors and tensors.
//!
//! Matrices are arrays of arrays. An entry is either an integer, a string
//! `"p/q"`, or a two-element `[re, im]` array of such values for Gaussian
//! rationals. Dense tensors are `{"dims": [...], "entries": [...]}` with a
//! flat row-major entry list; symmetric tensors are
//! `{"n": ..., "k": ..., "coefficients": {"i1,i2,...,ik": coeff}}` with
//! 1-based indices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::Value;
use thiserror::Error;

use crate::exactlin::{ExactMatrix, ExactVector, Scalar};
use crate::pairs::{DenseTensor, SymmetricTensor};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid input: {0}")]
    Format(String),
}

fn bad(msg: impl Into<String>) -> IoError {
    IoError::Format(msg.into())
}

/// Parse a rational from `"p/q"`, `"p"`, or an integer literal.
pub fn parse_rational(s: &str) -> Result<BigRational, IoError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| bad(format!("bad numerator in `{}`", s)))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| bad(format!("bad denominator in `{}`", s)))?;
    if den.is_zero() {
        return Err(bad(format!("zero denominator in `{}`", s)));
    }
    Ok(BigRational::new(num, den))
}

fn rational_from_value(v: &Value) -> Result<BigRational, IoError> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| bad(format!("number {} is not an exact integer", n)))?;
            Ok(BigRational::from_integer(BigInt::from(i)))
        }
        Value::String(s) => parse_rational(s),
        other => Err(bad(format!("expected rational, got {}", other))),
    }
}

/// Parse a scalar: integer, `"p/q"`, or `[re, im]`.
pub fn scalar_from_value(v: &Value) -> Result<Scalar, IoError> {
    match v {
        Value::Array(parts) => {
            if parts.len() != 2 {
                return Err(bad("complex entry must be a two-element [re, im] array"));
            }
            let re = rational_from_value(&parts[0])?;
            let im = rational_from_value(&parts[1])?;
            Ok(Scalar::gaussian(re, im))
        }
        other => Ok(Scalar::rational(rational_from_value(other)?)),
    }
}

/// Parse a matrix from its JSON array-of-arrays text form.
pub fn parse_matrix(text: &str) -> Result<ExactMatrix, IoError> {
    let value: Value = serde_json::from_str(text)?;
    let rows = value
        .as_array()
        .ok_or_else(|| bad("matrix must be an array of rows"))?;
    if rows.is_empty() {
        return Err(bad("matrix must have at least one row"));
    }
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let entries = row
            .as_array()
            .ok_or_else(|| bad("each matrix row must be an array"))?;
        let mut r = Vec::with_capacity(entries.len());
        for e in entries {
            r.push(scalar_from_value(e)?);
        }
        out.push(r);
    }
    ExactMatrix::from_rows(out).map_err(|e| bad(e.to_string()))
}

/// Parse a vector from a comma-separated list of rationals, e.g. `"0,1/2,-3"`.
pub fn parse_vector(text: &str) -> Result<ExactVector, IoError> {
    let entries: Result<Vec<Scalar>, IoError> = text
        .split(',')
        .map(|s| parse_rational(s).map(Scalar::rational))
        .collect();
    let entries = entries?;
    if entries.is_empty() {
        return Err(bad("vector must be nonempty"));
    }
    Ok(ExactVector(entries))
}

/// Parse a dense tensor: `{"dims": [n1,...,nk], "entries": [flat row-major]}`.
pub fn parse_dense_tensor(text: &str) -> Result<DenseTensor, IoError> {
    let value: Value = serde_json::from_str(text)?;
    let dims = value
        .get("dims")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("tensor needs a `dims` array"))?
        .iter()
        .map(|d| {
            d.as_u64()
                .filter(|&n| n >= 1)
                .map(|n| n as usize)
                .ok_or_else(|| bad("each dimension must be a positive integer"))
        })
        .collect::<Result<Vec<usize>, IoError>>()?;
    let entries = value
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("tensor needs an `entries` array"))?
        .iter()
        .map(scalar_from_value)
        .collect::<Result<Vec<Scalar>, IoError>>()?;
    DenseTensor::new(dims, entries).map_err(|e| bad(e.to_string()))
}

/// Parse a symmetric tensor: monomial-coefficient map with 1-based,
/// comma-separated index keys, e.g. `{"n":2,"k":3,"coefficients":{"1,1,2":"3/2"}}`.
pub fn parse_symmetric_tensor(text: &str) -> Result<SymmetricTensor, IoError> {
    let value: Value = serde_json::from_str(text)?;
    let n = value
        .get("n")
        .and_then(Value::as_u64)
        .filter(|&n| n >= 1)
        .ok_or_else(|| bad("symmetric tensor needs a positive `n`"))? as usize;
    let k = value
        .get("k")
        .and_then(Value::as_u64)
        .filter(|&k| k >= 1)
        .ok_or_else(|| bad("symmetric tensor needs a positive `k`"))? as u32;
    let coeffs = value
        .get("coefficients")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("symmetric tensor needs a `coefficients` object"))?;
    let mut terms = Vec::with_capacity(coeffs.len());
    for (key, val) in coeffs {
        let indices = key
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&i| i >= 1 && i <= n)
                    .map(|i| i - 1)
                    .ok_or_else(|| bad(format!("bad index in monomial key `{}`", key)))
            })
            .collect::<Result<Vec<usize>, IoError>>()?;
        terms.push((indices, scalar_from_value(val)?));
    }
    SymmetricTensor::new(n, k, terms).map_err(|e| bad(e.to_string()))
}
