//! Exact predicates and decision procedures for eigenvectors, singular
//! tuples and matrix singular pairs: certification of pairs, the
//! eigenvector lemma in both directions, and the d = 1 membership
//! procedures (direct case analysis and the annihilator/rank form).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactlin::{in_span, ExactMatrix, ExactVector, LinError, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("pair fails exact certification: {0}")]
    CertificationFailed(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// Symmetric tensor of order `k` on `K^n`, stored as a monomial map:
/// each key is a sorted tuple of `k` variable indices (0-based), and the
/// value is the coefficient of the corresponding monomial of f_T.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricTensor {
    n: usize,
    k: u32,
    coefficients: BTreeMap<Vec<usize>, Scalar>,
}

impl SymmetricTensor {
    pub fn new(
        n: usize,
        k: u32,
        coefficients: Vec<(Vec<usize>, Scalar)>,
    ) -> Result<Self, PairError> {
        let mut map = BTreeMap::new();
        for (mut key, c) in coefficients {
            if key.len() != k as usize {
                return Err(PairError::DimensionMismatch(format!(
                    "monomial {:?} must have total degree {}",
                    key, k
                )));
            }
            if key.iter().any(|&i| i >= n) {
                return Err(PairError::DimensionMismatch(format!(
                    "monomial {:?} has an index out of 0..{}",
                    key, n
                )));
            }
            key.sort_unstable();
            if !c.is_zero() {
                map.insert(key, c);
            }
        }
        Ok(SymmetricTensor {
            n,
            k,
            coefficients: map,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.k
    }

    /// Exact gradient of f_T at `v`.
    pub fn gradient(&self, v: &ExactVector) -> Result<ExactVector, PairError> {
        if v.len() != self.n {
            return Err(PairError::DimensionMismatch(format!(
                "vector length {} vs tensor dimension {}",
                v.len(),
                self.n
            )));
        }
        let mut grad = ExactVector::zeros(self.n);
        for (key, c) in &self.coefficients {
            let mut i = 0;
            while i < key.len() {
                let var = key[i];
                let mult = key[i..].iter().take_while(|&&j| j == var).count();
                // d/dx_var of the monomial: multiplicity * product of the rest
                let mut rest = Scalar::from_int(mult as i64);
                for (pos, &j) in key.iter().enumerate() {
                    if pos == i {
                        continue; // drop one occurrence of var
                    }
                    rest = rest.mul(&v.0[j]);
                }
                grad.0[var] = grad.0[var].add(&c.mul(&rest));
                i += mult;
            }
        }
        Ok(grad)
    }
}

/// Decide whether `v` is an eigenvector of the symmetric tensor `f`,
/// returning the eigenvalue lambda with `grad f(v) = k * lambda * v`.
pub fn is_eigenvector(
    f: &SymmetricTensor,
    v: &ExactVector,
) -> Result<Option<Scalar>, PairError> {
    if v.is_zero() {
        return Err(PairError::ZeroVector);
    }
    let grad = f.gradient(v)?;
    match in_span(&grad, std::slice::from_ref(v))? {
        Some(coeffs) => {
            let mu = coeffs.into_iter().next().unwrap_or_else(Scalar::zero);
            let lambda = mu.div(&Scalar::from_int(f.k as i64))?;
            Ok(Some(lambda))
        }
        None => Ok(None),
    }
}

/// Dense tensor with entries indexed by k-tuples, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseTensor {
    dims: Vec<usize>,
    entries: Vec<Scalar>,
}

impl DenseTensor {
    pub fn new(dims: Vec<usize>, entries: Vec<Scalar>) -> Result<Self, PairError> {
        let size: usize = dims.iter().product();
        if dims.is_empty() || entries.len() != size {
            return Err(PairError::DimensionMismatch(format!(
                "expected {} entries for dims {:?}, got {}",
                size,
                dims,
                entries.len()
            )));
        }
        Ok(DenseTensor { dims, entries })
    }

    pub fn from_matrix(a: &ExactMatrix) -> Self {
        let mut entries = Vec::with_capacity(a.nrows() * a.ncols());
        for i in 0..a.nrows() {
            for j in 0..a.ncols() {
                entries.push(a.get(i, j).clone());
            }
        }
        DenseTensor {
            dims: vec![a.nrows(), a.ncols()],
            entries,
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Contract against every vector except the one in slot `slot`,
    /// producing a vector of length `dims[slot]`.
    pub fn contract_all_but(
        &self,
        slot: usize,
        tuple: &[ExactVector],
    ) -> Result<ExactVector, PairError> {
        if tuple.len() != self.dims.len() {
            return Err(PairError::DimensionMismatch(format!(
                "tuple has {} vectors, tensor has {} slots",
                tuple.len(),
                self.dims.len()
            )));
        }
        for (i, v) in tuple.iter().enumerate() {
            if v.len() != self.dims[i] {
                return Err(PairError::DimensionMismatch(format!(
                    "vector {} has length {}, slot needs {}",
                    i,
                    v.len(),
                    self.dims[i]
                )));
            }
        }
        let mut out = ExactVector::zeros(self.dims[slot]);
        let mut index = vec![0usize; self.dims.len()];
        for (flat, entry) in self.entries.iter().enumerate() {
            // decode row-major flat index
            let mut rem = flat;
            for (axis, &n) in self.dims.iter().enumerate().rev() {
                index[axis] = rem % n;
                rem /= n;
            }
            if entry.is_zero() {
                continue;
            }
            let mut factor = entry.clone();
            for (axis, v) in tuple.iter().enumerate() {
                if axis != slot {
                    factor = factor.mul(&v.0[index[axis]]);
                }
            }
            out.0[index[slot]] = out.0[index[slot]].add(&factor);
        }
        Ok(out)
    }
}

/// Decide whether `tuple` is a singular k-tuple for `t`, returning the
/// list of lambdas on success.
pub fn is_singular_tuple(
    t: &DenseTensor,
    tuple: &[ExactVector],
) -> Result<Option<Vec<Scalar>>, PairError> {
    if tuple.iter().any(ExactVector::is_zero) {
        return Err(PairError::ZeroVector);
    }
    let mut lambdas = Vec::with_capacity(tuple.len());
    for slot in 0..tuple.len() {
        let contraction = t.contract_all_but(slot, tuple)?;
        match in_span(&contraction, std::slice::from_ref(&tuple[slot]))? {
            Some(coeffs) => {
                lambdas.push(coeffs.into_iter().next().unwrap_or_else(Scalar::zero))
            }
            None => return Ok(None),
        }
    }
    Ok(Some(lambdas))
}

/// A certified witness for a matrix singular pair: `Aw = lambda1 v` and
/// `A^t v = lambda2 w`, checked exactly on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPair {
    pub v: ExactVector,
    pub w: ExactVector,
    pub lambda1: Scalar,
    pub lambda2: Scalar,
}

impl SingularPair {
    pub fn new(
        a: &ExactMatrix,
        v: ExactVector,
        w: ExactVector,
        lambda1: Scalar,
        lambda2: Scalar,
    ) -> Result<Self, PairError> {
        if v.is_zero() || w.is_zero() {
            return Err(PairError::ZeroVector);
        }
        let aw = a.matvec(&w)?;
        if aw != v.scale(&lambda1) {
            return Err(PairError::CertificationFailed(
                "A w != lambda1 v".to_string(),
            ));
        }
        let atv = a.transpose().matvec(&v)?;
        if atv != w.scale(&lambda2) {
            return Err(PairError::CertificationFailed(
                "A^t v != lambda2 w".to_string(),
            ));
        }
        Ok(SingularPair {
            v,
            w,
            lambda1,
            lambda2,
        })
    }
}

/// Forward direction of the eigenvector lemma: a certified pair gives
/// `A A^t v = mu v` with `mu = lambda1 * lambda2`. Returns mu.
pub fn lemma_eig_forward(a: &ExactMatrix, pair: &SingularPair) -> Result<Scalar, PairError> {
    // re-certify: the pair must belong to this matrix
    SingularPair::new(
        a,
        pair.v.clone(),
        pair.w.clone(),
        pair.lambda1.clone(),
        pair.lambda2.clone(),
    )?;
    let mu = pair.lambda1.mul(&pair.lambda2);
    let aat_v = a.matvec(&a.transpose().matvec(&pair.v)?)?;
    if aat_v != pair.v.scale(&mu) {
        return Err(PairError::CertificationFailed(
            "A A^t v != lambda1 lambda2 v".to_string(),
        ));
    }
    Ok(mu)
}

/// Converse direction, for n <= m: from an exact eigenpair `A A^t v = mu v`
/// build a certified singular pair. The witness is left unnormalized
/// (lambda2 = 1) so everything stays inside the ground field.
pub fn lemma_eig_converse(
    a: &ExactMatrix,
    v: &ExactVector,
    mu: &Scalar,
) -> Result<SingularPair, PairError> {
    if a.nrows() > a.ncols() {
        return Err(PairError::PreconditionViolated(format!(
            "need n <= m, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    if v.is_zero() {
        return Err(PairError::ZeroVector);
    }
    let w = a.transpose().matvec(v)?;
    let aat_v = a.matvec(&w)?;
    if aat_v != v.scale(mu) {
        return Err(PairError::PreconditionViolated(
            "A A^t v != mu v".to_string(),
        ));
    }
    if !w.is_zero() {
        return SingularPair::new(a, v.clone(), w, mu.clone(), Scalar::one());
    }
    // A^t v = 0 with n <= m forces a rank deficiency, so ker A is nonzero
    let kernel = a.kernel_basis();
    let w = kernel
        .into_iter()
        .next()
        .ok_or_else(|| PairError::CertificationFailed("kernel unexpectedly empty".to_string()))?;
    SingularPair::new(a, v.clone(), w, Scalar::zero(), Scalar::zero())
}

/// Decide whether `A` has a singular pair `(v, w)` with `v` on the line
/// spanned by `v0`, by direct case analysis; returns a certified witness.
pub fn decide_pair_in_line(
    a: &ExactMatrix,
    v0: &ExactVector,
) -> Result<Option<SingularPair>, PairError> {
    if v0.is_zero() {
        return Err(PairError::ZeroVector);
    }
    let w = a.transpose().matvec(v0)?;
    if !w.is_zero() {
        // lambda2 != 0 forces w parallel to A^t v0; pair exists iff
        // A A^t v0 stays on the line
        let aat_v0 = a.matvec(&w)?;
        return match in_span(&aat_v0, std::slice::from_ref(v0))? {
            Some(coeffs) => {
                let mu = coeffs.into_iter().next().unwrap_or_else(Scalar::zero);
                Ok(Some(SingularPair::new(
                    a,
                    v0.clone(),
                    w,
                    mu,
                    Scalar::one(),
                )?))
            }
            None => Ok(None),
        };
    }
    // A^t v0 = 0: either Aw = 0 with w != 0, or v0 is in the column span
    if let Some(kv) = a.kernel_basis().into_iter().next() {
        return Ok(Some(SingularPair::new(
            a,
            v0.clone(),
            kv,
            Scalar::zero(),
            Scalar::zero(),
        )?));
    }
    let cols: Vec<ExactVector> = (0..a.ncols()).map(|j| a.col(j)).collect();
    match in_span(v0, &cols)? {
        Some(coeffs) => {
            let w = ExactVector(coeffs); // A w = v0, nonzero since v0 != 0
            Ok(Some(SingularPair::new(
                a,
                v0.clone(),
                w,
                Scalar::one(),
                Scalar::zero(),
            )?))
        }
        None => Ok(None),
    }
}

/// Build an (n-1) x n matrix whose kernel is exactly the line spanned by
/// `v0`: its rows are a basis of the annihilator of `v0`.
pub fn annihilator_matrix(v0: &ExactVector) -> Result<ExactMatrix, PairError> {
    if v0.is_zero() {
        return Err(PairError::ZeroVector);
    }
    let n = v0.len();
    let row = ExactMatrix::from_rows(vec![v0.0.clone()])?;
    let basis = row.kernel_basis(); // n-1 vectors r with r . v0 = 0
    let mut c = ExactMatrix::zeros(basis.len(), n);
    for (i, b) in basis.iter().enumerate() {
        for j in 0..n {
            c.set(i, j, b.0[j].clone());
        }
    }
    Ok(c)
}

/// The d = 1 membership test in annihilator/rank form, with a caller-chosen
/// valid `C` (any matrix with kernel exactly the line of `v0`):
/// `C (A A^t) v0 = 0` and `rk(C A) <= m - 1`.
pub fn decide_pair_in_line_proposition_with(
    a: &ExactMatrix,
    v0: &ExactVector,
    c: &ExactMatrix,
) -> Result<bool, PairError> {
    if v0.is_zero() {
        return Err(PairError::ZeroVector);
    }
    let aat_v0 = a.matvec(&a.transpose().matvec(v0)?)?;
    let first = c.matvec(&aat_v0)?.is_zero();
    let ca = c.matmul(a)?;
    let second = ca.rank() + 1 <= a.ncols();
    Ok(first && second)
}

/// The d = 1 membership test in annihilator/rank form with the canonical
/// annihilator matrix for `C`.
pub fn decide_pair_in_line_proposition(
    a: &ExactMatrix,
    v0: &ExactVector,
) -> Result<bool, PairError> {
    let c = annihilator_matrix(v0)?;
    decide_pair_in_line_proposition_with(a, v0, &c)
}

/// Outcome of the equal-lambda decision over the Gaussian rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqualLambdaDecision {
    /// No pair with lambda1 = lambda2 exists over any field extension.
    No,
    /// A pair exists with an exact witness in Q(i).
    Yes { witness: SingularPair },
    /// A pair exists over the algebraic closure (mu != 0), but the
    /// rescaling t with t^2 = 1/mu has no square root in Q(i).
    YesOverClosure { mu: Scalar },
}

impl EqualLambdaDecision {
    pub fn exists_over_closure(&self) -> bool {
        !matches!(self, EqualLambdaDecision::No)
    }
}

/// Decide existence of a singular pair with v on the line of `v0` and the
/// additional requirement lambda1 = lambda2 (after rescaling of w).
pub fn decide_equal_lambda_pair_in_line(
    a: &ExactMatrix,
    v0: &ExactVector,
) -> Result<EqualLambdaDecision, PairError> {
    if v0.is_zero() {
        return Err(PairError::ZeroVector);
    }
    let w0 = a.transpose().matvec(v0)?;
    if w0.is_zero() {
        // both lambdas zero; works iff A has nonzero kernel
        return match a.kernel_basis().into_iter().next() {
            Some(kv) => Ok(EqualLambdaDecision::Yes {
                witness: SingularPair::new(a, v0.clone(), kv, Scalar::zero(), Scalar::zero())?,
            }),
            None => Ok(EqualLambdaDecision::No),
        };
    }
    let aat_v0 = a.matvec(&w0)?;
    let mu = match in_span(&aat_v0, std::slice::from_ref(v0))? {
        Some(coeffs) => coeffs.into_iter().next().unwrap_or_else(Scalar::zero),
        None => return Ok(EqualLambdaDecision::No),
    };
    if mu.is_zero() {
        // rescaling w by t gives lambdas (t mu, 1/t); they can never agree
        return Ok(EqualLambdaDecision::No);
    }
    // lambdas agree iff t^2 = 1/mu
    match mu.inv()?.sqrt() {
        Some(t) => {
            let lambda = t.mul(&mu); // = 1/t
            let witness = SingularPair::new(a, v0.clone(), w0.scale(&t), lambda.clone(), lambda)?;
            Ok(EqualLambdaDecision::Yes { witness })
        }
        None => Ok(EqualLambdaDecision::YesOverClosure { mu }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> ExactVector {
        ExactVector::unit(n, i)
    }

    #[test]
    fn eigenvector_monomial_power() {
        // f = x1^3 on K^2: grad f(e1) = 3 e1
        let f = SymmetricTensor::new(2, 3, vec![(vec![0, 0, 0], Scalar::one())]).unwrap();
        let lambda = is_eigenvector(&f, &e(2, 0)).unwrap().unwrap();
        assert_eq!(lambda, Scalar::one());
        assert_eq!(f.gradient(&e(2, 0)).unwrap(), ExactVector::from_ints(&[3, 0]));
    }

    #[test]
    fn eigenvector_swap_symmetric() {
        // f = x1 x2 on K^2, v = (1,1): grad = (1,1)
        let f = SymmetricTensor::new(2, 2, vec![(vec![0, 1], Scalar::one())]).unwrap();
        let v = ExactVector::from_ints(&[1, 1]);
        let lambda = is_eigenvector(&f, &v).unwrap().unwrap();
        assert_eq!(lambda, Scalar::from_frac(1, 2));
    }

    #[test]
    fn eigenvector_rejected() {
        // f = x1^2 + 2 x2^2: grad(1,1) = (2,4), not proportional to (1,1)
        let f = SymmetricTensor::new(
            2,
            2,
            vec![
                (vec![0, 0], Scalar::one()),
                (vec![1, 1], Scalar::from_int(2)),
            ],
        )
        .unwrap();
        let v = ExactVector::from_ints(&[1, 1]);
        assert_eq!(is_eigenvector(&f, &v).unwrap(), None);
        assert_eq!(is_eigenvector(&f, &ExactVector::zeros(2)), Err(PairError::ZeroVector));
    }

    #[test]
    fn singular_tuple_matrix_diag() {
        let t = DenseTensor::from_matrix(&ExactMatrix::from_ints(&[&[2, 0], &[0, 3]]));
        let yes = is_singular_tuple(&t, &[e(2, 0), e(2, 0)]).unwrap();
        assert_eq!(yes, Some(vec![Scalar::from_int(2), Scalar::from_int(2)]));
        let no = is_singular_tuple(&t, &[e(2, 0), e(2, 1)]).unwrap();
        assert_eq!(no, None);
    }

    #[test]
    fn singular_tuple_order_three() {
        // e1 (x) e1 (x) e1
        let mut entries = vec![Scalar::zero(); 8];
        entries[0] = Scalar::one();
        let t = DenseTensor::new(vec![2, 2, 2], entries).unwrap();
        let yes = is_singular_tuple(&t, &[e(2, 0), e(2, 0), e(2, 0)]).unwrap();
        assert_eq!(yes, Some(vec![Scalar::one(); 3]));
    }

    #[test]
    fn pair_certification() {
        let a = ExactMatrix::from_ints(&[&[1, 0], &[0, 2]]);
        let pair = SingularPair::new(
            &a,
            e(2, 1),
            e(2, 1),
            Scalar::from_int(2),
            Scalar::from_int(2),
        )
        .unwrap();
        assert_eq!(lemma_eig_forward(&a, &pair).unwrap(), Scalar::from_int(4));
        // bogus lambdas rejected
        assert!(SingularPair::new(&a, e(2, 1), e(2, 1), Scalar::one(), Scalar::one()).is_err());
    }

    #[test]
    fn forward_zero_matrix() {
        let a = ExactMatrix::zeros(2, 3);
        let pair = SingularPair::new(
            &a,
            ExactVector::from_ints(&[1, -2]),
            ExactVector::from_ints(&[0, 1, 1]),
            Scalar::zero(),
            Scalar::zero(),
        )
        .unwrap();
        assert_eq!(lemma_eig_forward(&a, &pair).unwrap(), Scalar::zero());
    }

    #[test]
    fn converse_rectangular_diagonal() {
        let a = ExactMatrix::from_ints(&[&[1, 0, 0], &[0, 2, 0]]);
        let pair = lemma_eig_converse(&a, &e(2, 1), &Scalar::from_int(4)).unwrap();
        assert_eq!(pair.w, ExactVector::from_ints(&[0, 2, 0]));
        assert_eq!(pair.lambda1, Scalar::from_int(4));
        assert_eq!(pair.lambda2, Scalar::one());
        // hand-checked variant from the same matrix
        let pair2 = SingularPair::new(
            &a,
            ExactVector::from_ints(&[0, 1]),
            ExactVector::from_ints(&[0, 1, 0]),
            Scalar::from_int(2),
            Scalar::from_int(2),
        )
        .unwrap();
        assert_eq!(lemma_eig_forward(&a, &pair2).unwrap(), Scalar::from_int(4));
    }

    #[test]
    fn converse_zero_matrix_uses_kernel() {
        let a = ExactMatrix::zeros(2, 3);
        let pair = lemma_eig_converse(&a, &e(2, 0), &Scalar::zero()).unwrap();
        assert_eq!(pair.lambda1, Scalar::zero());
        assert_eq!(pair.lambda2, Scalar::zero());
        assert!(a.matvec(&pair.w).unwrap().is_zero());
    }

    #[test]
    fn converse_preconditions() {
        let a = ExactMatrix::from_ints(&[&[1], &[0]]); // n > m
        assert!(matches!(
            lemma_eig_converse(&a, &e(2, 0), &Scalar::one()),
            Err(PairError::PreconditionViolated(_))
        ));
        let b = ExactMatrix::from_ints(&[&[1, 0], &[0, 2]]);
        assert!(matches!(
            lemma_eig_converse(&b, &ExactVector::from_ints(&[1, 1]), &Scalar::one()),
            Err(PairError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn decide_line_necass_fixture() {
        // A = [[1],[0]], L = <(0,1)>: no singular pair
        let a = ExactMatrix::from_ints(&[&[1], &[0]]);
        let v0 = ExactVector::from_ints(&[0, 1]);
        assert_eq!(decide_pair_in_line(&a, &v0).unwrap(), None);
        assert!(!decide_pair_in_line_proposition(&a, &v0).unwrap());
    }

    #[test]
    fn decide_line_lambdaequal_fixture() {
        // A = [[1, i], [1, i]], L = <(1,0)>
        let i = Scalar::i();
        let a = ExactMatrix::from_rows(vec![
            vec![Scalar::one(), i.clone()],
            vec![Scalar::one(), i.clone()],
        ])
        .unwrap();
        let v0 = e(2, 0);
        // unrestricted: a pair exists (A A^t = 0)
        let pair = decide_pair_in_line(&a, &v0).unwrap().unwrap();
        assert_eq!(pair.lambda1, Scalar::zero());
        // check the hand-derived witness certifies too: w = (-i, 1), lambda2 = i
        let w = ExactVector(vec![i.neg(), Scalar::one()]);
        SingularPair::new(&a, v0.clone(), w, Scalar::zero(), i.clone()).unwrap();
        // equal-lambda: impossible (mu = 0 with A^t v0 != 0)
        assert_eq!(
            decide_equal_lambda_pair_in_line(&a, &v0).unwrap(),
            EqualLambdaDecision::No
        );
        // proposition form agrees with the unrestricted decision
        assert!(decide_pair_in_line_proposition(&a, &v0).unwrap());
    }

    #[test]
    fn decide_line_diagonal() {
        let a = ExactMatrix::from_ints(&[&[1, 0], &[0, 0]]);
        let v0 = e(2, 0);
        let pair = decide_pair_in_line(&a, &v0).unwrap().unwrap();
        assert_eq!(pair.lambda1, Scalar::one());
        assert!(decide_pair_in_line_proposition(&a, &v0).unwrap());
    }

    #[test]
    fn proposition_hand_evaluation() {
        // A = [[1],[0]], v0 = (0,1): C = [1 0], first condition holds but
        // CA = [1] has full rank m
        let a = ExactMatrix::from_ints(&[&[1], &[0]]);
        let v0 = ExactVector::from_ints(&[0, 1]);
        let c = annihilator_matrix(&v0).unwrap();
        assert_eq!(c.nrows(), 1);
        assert!(c.matvec(&v0).unwrap().is_zero());
        let aat_v0 = a.matvec(&a.transpose().matvec(&v0).unwrap()).unwrap();
        assert!(c.matvec(&aat_v0).unwrap().is_zero());
        assert_eq!(c.matmul(&a).unwrap().rank(), 1);
        assert!(!decide_pair_in_line_proposition(&a, &v0).unwrap());
    }

    #[test]
    fn equal_lambda_diagonal_exact_witness() {
        let a = ExactMatrix::from_ints(&[&[2, 0], &[0, 3]]);
        let v0 = e(2, 0);
        match decide_equal_lambda_pair_in_line(&a, &v0).unwrap() {
            EqualLambdaDecision::Yes { witness } => {
                assert_eq!(witness.lambda1, witness.lambda2);
                assert_eq!(witness.lambda1, Scalar::from_int(2));
            }
            other => panic!("expected exact witness, got {:?}", other),
        }
    }

    #[test]
    fn equal_lambda_zero_matrix() {
        let a = ExactMatrix::zeros(2, 2);
        match decide_equal_lambda_pair_in_line(&a, &e(2, 0)).unwrap() {
            EqualLambdaDecision::Yes { witness } => {
                assert_eq!(witness.lambda1, Scalar::zero());
                assert_eq!(witness.lambda2, Scalar::zero());
            }
            other => panic!("expected zero-lambda witness, got {:?}", other),
        }
    }

    #[test]
    fn equal_lambda_square_root_obstruction() {
        // A = diag(1, 2) restricted to... mu = 2 at v0 = e2: 1/2 has no
        // rational square root, so the answer is qualified
        let a = ExactMatrix::from_ints(&[&[1, 0], &[0, 2]]);
        // A^t e2 = (0,2), A A^t e2 = (0,4)... mu = 4, sqrt works; use a
        // matrix with mu = 2 instead: A = [[1,1],[0,1]]? A^t v0=(1,1),
        // A A^t v0 = (2,1) not in span. Use rank-one [[1,1]] as 1x2.
        let b = ExactMatrix::from_ints(&[&[1, 1]]);
        let v0 = e(1, 0);
        match decide_equal_lambda_pair_in_line(&b, &v0).unwrap() {
            EqualLambdaDecision::YesOverClosure { mu } => {
                assert_eq!(mu, Scalar::from_int(2));
            }
            other => panic!("expected closure-only answer, got {:?}", other),
        }
        let _ = a;
    }

    #[test]
    fn annihilator_of_dim_one_vector_is_empty() {
        let v0 = ExactVector::from_ints(&[3]);
        let c = annihilator_matrix(&v0).unwrap();
        assert_eq!(c.nrows(), 0);
        // n = 1: every matrix passes the first condition; the rank condition
        // is 0 <= m-1, so the decision is always true, matching the direct one
        let a = ExactMatrix::from_ints(&[&[5, 7]]);
        assert!(decide_pair_in_line_proposition(&a, &v0).unwrap());
        assert!(decide_pair_in_line(&a, &v0).unwrap().is_some());
    }
}
