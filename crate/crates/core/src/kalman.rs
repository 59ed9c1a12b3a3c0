//! Kalman-variety degrees by coefficient extraction in truncated Chow
//! rings, via two independent routes:
//!
//! * the homogeneous route, multiplying the geometric-sum factors
//!   `sum_j (v~_i + h)^{n_i-1-j} v_i^j` (pure polynomial arithmetic,
//!   no division), and
//! * the Chern-series route, multiplying the series
//!   `(1 + v~_i + h)^{n_i} / (1 + v~_i - v_i + h)` and reading the same
//!   coefficient.
//!
//! Their agreement on every instance is a meaningful cross-check, and the
//! stabilization scan verifies that the degree stops depending on the last
//! dimension beyond the boundary format.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::degrees::ParamError;
use crate::ring::{Monomial, RingSpec, TruncatedPolynomial};

/// Which computation produced a degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    ClosedForm,
    ChernSeries,
    HomogeneousSum,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::ClosedForm => write!(f, "closed_form"),
            Route::ChernSeries => write!(f, "chern_series"),
            Route::HomogeneousSum => write!(f, "homogeneous_sum"),
        }
    }
}

/// The parameters of one Kalman-degree problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KalmanInstance {
    /// Symmetric tensors in Sym^k(K^n), eigenvector in a d-dim subspace.
    Symmetric { d: u32, n: u32, k: u32 },
    /// General tensors of shape dims, first singular vector in a d-dim subspace.
    General { d: u32, dims: Vec<u32> },
}

impl fmt::Display for KalmanInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KalmanInstance::Symmetric { d, n, k } => {
                write!(f, "symmetric(d={}, n={}, k={})", d, n, k)
            }
            KalmanInstance::General { d, dims } => {
                let dims: Vec<String> = dims.iter().map(|n| n.to_string()).collect();
                write!(f, "general(d={}, dims=({}))", d, dims.join(","))
            }
        }
    }
}

/// Result record for one degree computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub instance: KalmanInstance,
    pub degree: BigInt,
    pub route: Route,
    /// Display form of the extracted monomial.
    pub target: String,
}

fn require(cond: bool, msg: &str) -> Result<(), ParamError> {
    if cond {
        Ok(())
    } else {
        Err(ParamError::OutOfRange(msg.to_string()))
    }
}

fn check_symmetric(d: u32, n: u32, k: u32) -> Result<(), ParamError> {
    require(d >= 1 && d <= n, "need 1 <= d <= n")?;
    require(k >= 2, "need k >= 2")
}

fn check_general(d: u32, dims: &[u32]) -> Result<(), ParamError> {
    require(!dims.is_empty(), "dims must be nonempty")?;
    require(dims.iter().all(|&n| n >= 1), "each dimension must be >= 1")?;
    require(d >= 1 && d <= dims[0], "need 1 <= d <= n_1")
}

/// Caps for the extraction ring of a general instance. Only the single
/// monomial h^{n_1-d} v_1^{d-1} prod v_i^{n_i-1} is read, so every cap sits
/// one above its target exponent; higher powers can never divide down to
/// the target and are dropped during arithmetic.
fn general_ring(d: u32, dims: &[u32]) -> Arc<RingSpec> {
    let mut v_caps: Vec<u32> = dims.to_vec();
    v_caps[0] = d;
    RingSpec::chow(dims[0] - d + 1, &v_caps).expect("caps >= 1")
}

fn general_target(ring: &RingSpec, d: u32, dims: &[u32]) -> Monomial {
    let mut exps = vec![dims[0] - d, d - 1];
    exps.extend(dims[1..].iter().map(|&n| n - 1));
    Monomial::new(ring, exps).expect("target below caps")
}

/// `v~_i + c` for the i-th factor: the sum of all the other projective
/// hyperplane classes, plus `h`, plus the constant `c` (0 or 1).
fn vtilde_plus_h(
    ring: &Arc<RingSpec>,
    k: usize,
    i: usize,
    constant: i64,
) -> TruncatedPolynomial {
    let mut acc = TruncatedPolynomial::constant(ring, constant);
    acc = acc
        .add(&TruncatedPolynomial::var(ring, "h").expect("h present"))
        .expect("same ring");
    for j in 0..k {
        if j != i {
            let vj = TruncatedPolynomial::var(ring, &format!("v{}", j + 1)).expect("var present");
            acc = acc.add(&vj).expect("same ring");
        }
    }
    acc
}

/// Symmetric degree by Chern-series extraction: coefficient of
/// h^{n-d} v^{d-1} in `(1 + (k-1)v + h)^n / (1 + (k-2)v + h)`.
pub fn symmetric_degree_chern(d: u32, n: u32, k: u32) -> Result<DegreeReport, ParamError> {
    check_symmetric(d, n, k)?;
    let ring = RingSpec::chow(n - d + 1, &[d]).expect("caps >= 1");
    let h = TruncatedPolynomial::var(&ring, "h").expect("h present");
    let v = TruncatedPolynomial::var(&ring, "v1").expect("v1 present");
    let one = TruncatedPolynomial::one(&ring);

    let numer = one
        .add(&v.scale(&BigInt::from(k - 1)))
        .and_then(|p| p.add(&h))
        .expect("same ring")
        .pow(n);
    let denom = one
        .add(&v.scale(&BigInt::from(k - 2)))
        .and_then(|p| p.add(&h))
        .expect("same ring");
    let series = numer
        .mul(&denom.inverse().expect("constant term 1"))
        .expect("same ring");

    let target = Monomial::new(&ring, vec![n - d, d - 1]).expect("target below caps");
    let degree = series.coefficient(&target).expect("valid monomial");
    Ok(DegreeReport {
        instance: KalmanInstance::Symmetric { d, n, k },
        degree,
        route: Route::ChernSeries,
        target: format!("h^{}*v^{}", n - d, d - 1),
    })
}

fn target_display(d: u32, dims: &[u32]) -> String {
    let mut s = format!("h^{}*v1^{}", dims[0] - d, d - 1);
    for (i, &n) in dims.iter().enumerate().skip(1) {
        s.push_str(&format!("*v{}^{}", i + 1, n - 1));
    }
    s
}

/// General degree by the homogeneous route: multiply the exact polynomial
/// quotients `((v~_i+h)^{n_i} - v_i^{n_i}) / ((v~_i+h) - v_i)` computed as
/// geometric sums, then extract the target coefficient.
pub fn general_degree_homogeneous(d: u32, dims: &[u32]) -> Result<DegreeReport, ParamError> {
    check_general(d, dims)?;
    let k = dims.len();
    let ring = general_ring(d, dims);
    let mut product = TruncatedPolynomial::one(&ring);
    for (i, &ni) in dims.iter().enumerate() {
        let a = vtilde_plus_h(&ring, k, i, 0);
        let b = TruncatedPolynomial::var(&ring, &format!("v{}", i + 1)).expect("var present");
        let factor = TruncatedPolynomial::geom_sum(&a, &b, ni).expect("same ring");
        product = product.mul(&factor).expect("same ring");
    }
    let target = general_target(&ring, d, dims);
    let degree = product.coefficient(&target).expect("valid monomial");
    Ok(DegreeReport {
        instance: KalmanInstance::General {
            d,
            dims: dims.to_vec(),
        },
        degree,
        route: Route::HomogeneousSum,
        target: target_display(d, dims),
    })
}

/// General degree by the Chern-series route: multiply
/// `(1 + v~_i + h)^{n_i} * (1 + v~_i - v_i + h)^{-1}` and extract the same
/// coefficient.
pub fn general_degree_chern(d: u32, dims: &[u32]) -> Result<DegreeReport, ParamError> {
    check_general(d, dims)?;
    let k = dims.len();
    let ring = general_ring(d, dims);
    let mut product = TruncatedPolynomial::one(&ring);
    for (i, &ni) in dims.iter().enumerate() {
        let numer = vtilde_plus_h(&ring, k, i, 1).pow(ni);
        let vi = TruncatedPolynomial::var(&ring, &format!("v{}", i + 1)).expect("var present");
        let denom = vtilde_plus_h(&ring, k, i, 1).sub(&vi).expect("same ring");
        let inv = denom.inverse().expect("constant term 1 for valid instances");
        product = product
            .mul(&numer)
            .and_then(|p| p.mul(&inv))
            .expect("same ring");
    }
    let target = general_target(&ring, d, dims);
    let degree = product.coefficient(&target).expect("valid monomial");
    Ok(DegreeReport {
        instance: KalmanInstance::General {
            d,
            dims: dims.to_vec(),
        },
        degree,
        route: Route::ChernSeries,
        target: target_display(d, dims),
    })
}

/// One row of a stabilization scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationRow {
    pub m: u32,
    pub degree: BigInt,
}

/// Result of scanning the last dimension over a range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationReport {
    pub d: u32,
    pub dims_prefix: Vec<u32>,
    /// Boundary format: n_k = 1 + sum (n_i - 1) over the prefix.
    pub boundary: u32,
    pub rows: Vec<StabilizationRow>,
    /// True when every scanned degree with m >= boundary agrees.
    pub stabilized: bool,
}

/// Compute the general degree for each candidate last dimension and check
/// that the values at and beyond the boundary format coincide.
pub fn stabilization_check(
    d: u32,
    dims_prefix: &[u32],
    m_range: &[u32],
) -> Result<StabilizationReport, ParamError> {
    require(!dims_prefix.is_empty(), "prefix must be nonempty")?;
    require(
        dims_prefix.iter().all(|&n| n >= 1),
        "each dimension must be >= 1",
    )?;
    require(!m_range.is_empty(), "m range must be nonempty")?;
    let boundary = 1 + dims_prefix.iter().map(|&n| n - 1).sum::<u32>();
    let mut rows = Vec::with_capacity(m_range.len());
    for &m in m_range {
        let mut dims = dims_prefix.to_vec();
        dims.push(m);
        let report = general_degree_homogeneous(d, &dims)?;
        rows.push(StabilizationRow {
            m,
            degree: report.degree,
        });
    }
    let beyond: Vec<&StabilizationRow> = rows.iter().filter(|r| r.m >= boundary).collect();
    let stabilized = beyond.windows(2).all(|w| w[0].degree == w[1].degree);
    Ok(StabilizationReport {
        d,
        dims_prefix: dims_prefix.to_vec(),
        boundary,
        rows,
        stabilized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degrees;

    #[test]
    fn symmetric_chern_hand_values() {
        // hand expansion of (1+2v+h)^2 * (1 - v - h + ...): coeff of h is 1
        assert_eq!(
            symmetric_degree_chern(1, 2, 3).unwrap().degree,
            BigInt::from(1)
        );
        // coefficient of v is 4 - 1 = 3, the eigenvector count of (2,3)
        assert_eq!(
            symmetric_degree_chern(2, 2, 3).unwrap().degree,
            BigInt::from(3)
        );
        assert_eq!(
            symmetric_degree_chern(2, 2, 3).unwrap().degree,
            degrees::eigenvector_count(2, 3).unwrap()
        );
        // hockey stick at k=2
        assert_eq!(
            symmetric_degree_chern(2, 3, 2).unwrap().degree,
            BigInt::from(3)
        );
    }

    #[test]
    fn symmetric_routes_agree() {
        for n in 1..=7u32 {
            for d in 1..=n {
                for k in 2..=5u32 {
                    assert_eq!(
                        symmetric_degree_chern(d, n, k).unwrap().degree,
                        degrees::symmetric_degree_closed(d, n, k).unwrap(),
                        "d={} n={} k={}",
                        d,
                        n,
                        k
                    );
                }
            }
        }
    }

    #[test]
    fn general_homogeneous_table_values() {
        assert_eq!(
            general_degree_homogeneous(1, &[2, 2]).unwrap().degree,
            BigInt::from(2)
        );
        assert_eq!(
            general_degree_homogeneous(2, &[2, 2, 2]).unwrap().degree,
            BigInt::from(6)
        );
        assert_eq!(
            general_degree_homogeneous(2, &[4, 3]).unwrap().degree,
            BigInt::from(13)
        );
    }

    #[test]
    fn general_chern_table_values() {
        assert_eq!(
            general_degree_chern(1, &[2, 2]).unwrap().degree,
            BigInt::from(2)
        );
        assert_eq!(
            general_degree_chern(1, &[3, 3]).unwrap().degree,
            BigInt::from(4)
        );
        assert_eq!(
            general_degree_chern(3, &[4, 2]).unwrap().degree,
            BigInt::from(4)
        );
    }

    #[test]
    fn general_routes_agree_small() {
        for n1 in 1..=4u32 {
            for n2 in 1..=4u32 {
                for n3 in 1..=3u32 {
                    for d in 1..=n1 {
                        let dims = [n1, n2, n3];
                        assert_eq!(
                            general_degree_homogeneous(d, &dims).unwrap().degree,
                            general_degree_chern(d, &dims).unwrap().degree,
                            "d={} dims={:?}",
                            d,
                            dims
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn matrix_specialization_k2() {
        for n in 1..=6u32 {
            for m in 1..=6u32 {
                for d in 1..=n {
                    assert_eq!(
                        general_degree_homogeneous(d, &[n, m]).unwrap().degree,
                        degrees::matrix_degree_closed(d, n, m).unwrap(),
                        "d={} n={} m={}",
                        d,
                        n,
                        m
                    );
                }
            }
        }
    }

    #[test]
    fn single_factor_edge_case() {
        // k = 1: the formula is well-defined; target is h^{n-d} v^{d-1} in
        // sum_j h^{n-1-j} v^j, giving coefficient 1 for every valid d.
        for n in 1..=5u32 {
            for d in 1..=n {
                assert_eq!(
                    general_degree_homogeneous(d, &[n]).unwrap().degree,
                    BigInt::from(1)
                );
                assert_eq!(
                    general_degree_chern(d, &[n]).unwrap().degree,
                    BigInt::from(1)
                );
            }
        }
    }

    #[test]
    fn factor_order_independence() {
        // permuting the trailing factors leaves the degree unchanged
        let a = general_degree_homogeneous(2, &[3, 2, 4]).unwrap().degree;
        let b = general_degree_homogeneous(2, &[3, 4, 2]).unwrap().degree;
        assert_eq!(a, b);
    }

    #[test]
    fn stabilization_examples() {
        let r = stabilization_check(1, &[2, 2], &[3, 4, 5, 6, 7]).unwrap();
        assert_eq!(r.boundary, 3);
        assert!(r.stabilized);

        let r = stabilization_check(2, &[3], &[3, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(r.boundary, 3);
        assert!(r.stabilized);
        assert!(r.rows.iter().all(|row| row.degree == BigInt::from(6)));

        // below the boundary the degree can differ: (1,3,2) -> 3, (1,3,3) -> 4
        let r = stabilization_check(1, &[3], &[2, 3]).unwrap();
        assert_eq!(r.boundary, 3);
        assert_eq!(r.rows[0].degree, BigInt::from(3));
        assert_eq!(r.rows[1].degree, BigInt::from(4));
    }

    #[test]
    fn parameter_validation() {
        assert!(general_degree_homogeneous(0, &[2, 2]).is_err());
        assert!(general_degree_homogeneous(3, &[2, 2]).is_err());
        assert!(general_degree_homogeneous(1, &[]).is_err());
        assert!(general_degree_chern(1, &[2, 0]).is_err());
        assert!(symmetric_degree_chern(1, 2, 1).is_err());
        assert!(stabilization_check(1, &[], &[2]).is_err());
    }
}
