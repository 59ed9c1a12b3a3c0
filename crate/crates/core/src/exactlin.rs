//! Exact linear algebra over the rationals and the Gaussian rationals
//! (complex numbers with rational real and imaginary parts): RREF, rank,
//! kernel bases and span membership, all with exact arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("matrix rows must have equal length")]
    RaggedRows,
}

/// Exact field scalar: a rational, or a Gaussian rational `re + im*i`.
/// Gaussian values with zero imaginary part normalize to `Rational`, so
/// equality is plain structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Gaussian { re: BigRational, im: BigRational },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::gaussian(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rational(r: BigRational) -> Self {
        Scalar::Rational(r)
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        if im.is_zero() {
            Scalar::Rational(re)
        } else {
            Scalar::Gaussian { re, im }
        }
    }

    pub fn parts(&self) -> (BigRational, BigRational) {
        match self {
            Scalar::Rational(r) => (r.clone(), BigRational::zero()),
            Scalar::Gaussian { re, im } => (re.clone(), im.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Gaussian { .. } => false, // im != 0 by normalization
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => {
                let (ar, ai) = self.parts();
                let (br, bi) = other.parts();
                Scalar::gaussian(ar + br, ai + bi)
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Gaussian { re, im } => Scalar::Gaussian {
                re: -re,
                im: -im,
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => {
                let (ar, ai) = self.parts();
                let (br, bi) = other.parts();
                Scalar::gaussian(&ar * &br - &ai * &bi, &ar * &bi + &ai * &br)
            }
        }
    }

    pub fn inv(&self) -> Result<Scalar, LinError> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    Err(LinError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(a.recip()))
                }
            }
            Scalar::Gaussian { re, im } => {
                let norm = re * re + im * im; // nonzero since im != 0
                Ok(Scalar::gaussian(re / &norm, -(im / &norm)))
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, LinError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Exact square root in Q(i), when one exists.
    pub fn sqrt(&self) -> Option<Scalar> {
        let (a, b) = self.parts();
        if b.is_zero() {
            if a.is_zero() {
                return Some(Scalar::zero());
            }
            return if a.is_positive() {
                rational_sqrt(&a).map(Scalar::Rational)
            } else {
                rational_sqrt(&(-&a)).map(|s| Scalar::gaussian(BigRational::zero(), s))
            };
        }
        // z = a + bi, |z| = r: sqrt = x + yi with x^2 = (a+r)/2, y = b/(2x)
        let norm = &a * &a + &b * &b;
        let r = rational_sqrt(&norm)?;
        let two = BigRational::from_integer(BigInt::from(2));
        let x = rational_sqrt(&((&a + &r) / &two))?;
        if x.is_zero() {
            return None; // b != 0 forces x != 0
        }
        let y = &b / &(&two * &x);
        let cand = Scalar::gaussian(x, y);
        if cand.mul(&cand) == *self {
            Some(cand)
        } else {
            None
        }
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", r),
            Scalar::Gaussian { re, im } => {
                if re.is_zero() {
                    write!(f, "{}i", im)
                } else if im.is_negative() {
                    write!(f, "{}-{}i", re, -im)
                } else {
                    write!(f, "{}+{}i", re, im)
                }
            }
        }
    }
}

/// Vector of exact scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactVector(pub Vec<Scalar>);

impl ExactVector {
    pub fn zeros(n: usize) -> Self {
        ExactVector(vec![Scalar::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_ints(v: &[i64]) -> Self {
        ExactVector(v.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        ExactVector(self.0.iter().map(|x| x.mul(c)).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinError> {
        if self.len() != other.len() {
            return Err(LinError::DimensionMismatch(format!(
                "vector lengths {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(ExactVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.add(b))
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinError> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }
}

/// Rectangular matrix of exact scalars, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinError> {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(LinError::RaggedRows);
        }
        Ok(ExactMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> ExactVector {
        ExactVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> ExactVector {
        ExactVector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn matvec(&self, v: &ExactVector) -> Result<ExactVector, LinError> {
        if v.len() != self.cols {
            return Err(LinError::DimensionMismatch(format!(
                "matrix is {}x{}, vector has length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = Scalar::zero();
            for j in 0..self.cols {
                acc = acc.add(&self.get(i, j).mul(&v.0[j]));
            }
            out.push(acc);
        }
        Ok(ExactVector(out))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, LinError> {
        if self.cols != other.rows {
            return Err(LinError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Scalar::zero();
                for t in 0..self.cols {
                    acc = acc.add(&self.get(i, t).mul(other.get(t, j)));
                }
                m.set(i, j, acc);
            }
        }
        Ok(m)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Reduced row echelon form with exact arithmetic. Pivot rule: first
    /// nonzero entry in column order, scanning rows top to bottom.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let pivot_row = (r..m.rows).find(|&i| !m.get(i, c).is_zero());
            let Some(p) = pivot_row else { continue };
            // swap rows p and r
            if p != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            // normalize pivot to 1
            let inv = m.get(r, c).inv().expect("pivot nonzero");
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            // eliminate everywhere else
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j).sub(&factor.mul(m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{w : Aw = 0}`; empty iff kernel is 0.
    pub fn kernel_basis(&self) -> Vec<ExactVector> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<usize> = pivots.clone();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = ExactVector::zeros(self.cols);
            v.0[free] = Scalar::one();
            for (row, &pc) in pivot_set.iter().enumerate() {
                v.0[pc] = r.get(row, free).neg();
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Decide whether `v` lies in the span of `basis`; on success return the
/// expressing coefficients (free coordinates set to zero).
pub fn in_span(v: &ExactVector, basis: &[ExactVector]) -> Result<Option<Vec<Scalar>>, LinError> {
    if basis.is_empty() {
        return Ok(if v.is_zero() { Some(Vec::new()) } else { None });
    }
    let n = v.len();
    if basis.iter().any(|b| b.len() != n) {
        return Err(LinError::DimensionMismatch(
            "basis vectors must match target length".into(),
        ));
    }
    // solve [b1 ... bk | v] by RREF of the augmented matrix
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row: Vec<Scalar> = basis.iter().map(|b| b.0[i].clone()).collect();
        row.push(v.0[i].clone());
        rows.push(row);
    }
    let aug = ExactMatrix::from_rows(rows)?;
    let (r, pivots) = aug.rref();
    let k = basis.len();
    if pivots.contains(&k) {
        return Ok(None); // inconsistent
    }
    let mut coeffs = vec![Scalar::zero(); k];
    for (row, &pc) in pivots.iter().enumerate() {
        coeffs[pc] = r.get(row, k).clone();
    }
    Ok(Some(coeffs))
}
