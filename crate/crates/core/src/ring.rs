//! Exact arithmetic in truncated multivariate polynomial rings
//! `Z[h, v1, ..., vk] / (h^H, v1^c1, ..., vk^ck)` with arbitrary-precision
//! integer coefficients.
//!
//! Elements are kept in canonical form: a sparse map from exponent vectors
//! to nonzero coefficients, with any monomial reaching a variable's cap
//! discarded on the spot. Intersection numbers on products of projective
//! spaces are read off as single coefficients of elements of these rings.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("variable cap must be at least 1")]
    ZeroCap,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("monomial has {got} exponents, ring has {want} variables")]
    MonomialLength { got: usize, want: usize },
    #[error("exponent {exp} of `{var}` is at or above its cap {cap}")]
    ExponentAboveCap { var: String, exp: u32, cap: u32 },
    #[error("constant term must be 1 or -1 for series inversion")]
    NonUnitConstantTerm,
}

/// The ambient truncated ring: an ordered list of variables together with
/// the power at which each one vanishes (`cap n` means `x^n = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    vars: Vec<String>,
    caps: Vec<u32>,
}

impl RingSpec {
    pub fn new<S: Into<String>>(vars: Vec<(S, u32)>) -> Result<Arc<Self>, RingError> {
        let mut names = Vec::with_capacity(vars.len());
        let mut caps = Vec::with_capacity(vars.len());
        for (name, cap) in vars {
            let name = name.into();
            if cap == 0 {
                return Err(RingError::ZeroCap);
            }
            if names.contains(&name) {
                return Err(RingError::DuplicateVariable(name));
            }
            names.push(name);
            caps.push(cap);
        }
        Ok(Arc::new(RingSpec { vars: names, caps }))
    }

    /// Chow-ring layout: `h` first with cap `h_cap` (so `h^h_cap = 0`),
    /// then `v1..vk` with caps `v_caps`.
    pub fn chow(h_cap: u32, v_caps: &[u32]) -> Result<Arc<Self>, RingError> {
        let mut vars: Vec<(String, u32)> = vec![("h".to_string(), h_cap)];
        for (i, &c) in v_caps.iter().enumerate() {
            vars.push((format!("v{}", i + 1), c));
        }
        Self::new(vars)
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn var_index(&self, name: &str) -> Result<usize, RingError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| RingError::UnknownVariable(name.to_string()))
    }
}

/// An exponent vector, one entry per ring variable. Ordered graded-lex so
/// that serialized polynomials are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(ring: &RingSpec, exps: Vec<u32>) -> Result<Self, RingError> {
        if exps.len() != ring.num_vars() {
            return Err(RingError::MonomialLength {
                got: exps.len(),
                want: ring.num_vars(),
            });
        }
        for (i, &e) in exps.iter().enumerate() {
            if e >= ring.caps[i] {
                return Err(RingError::ExponentAboveCap {
                    var: ring.vars[i].clone(),
                    exp: e,
                    cap: ring.caps[i],
                });
            }
        }
        Ok(Monomial(exps))
    }

    /// Build from `(name, exponent)` pairs; unnamed variables get exponent 0.
    pub fn from_pairs(ring: &RingSpec, pairs: &[(&str, u32)]) -> Result<Self, RingError> {
        let mut exps = vec![0u32; ring.num_vars()];
        for &(name, e) in pairs {
            exps[ring.var_index(name)?] = e;
        }
        Monomial::new(ring, exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of monomials; `None` when some exponent reaches its cap
    /// (the product is zero in the ring).
    fn mul(&self, other: &Monomial, caps: &[u32]) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.0.len());
        for i in 0..self.0.len() {
            let e = self.0[i] + other.0[i];
            if e >= caps[i] {
                return None;
            }
            exps.push(e);
        }
        Some(Monomial(exps))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of a truncated ring: sparse term map in canonical form
/// (no zero coefficients, no over-cap monomials, empty map = 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    ring: Arc<RingSpec>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncatedPolynomial {
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        TruncatedPolynomial {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<RingSpec>, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(ring);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; ring.num_vars()]), c);
        }
        p
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        Self::constant(ring, 1)
    }

    /// The variable `name` as a polynomial. Zero if the cap is 1.
    pub fn var(ring: &Arc<RingSpec>, name: &str) -> Result<Self, RingError> {
        let i = ring.var_index(name)?;
        let mut p = Self::zero(ring);
        if ring.caps[i] > 1 {
            let mut exps = vec![0u32; ring.num_vars()];
            exps[i] = 1;
            p.terms.insert(Monomial(exps), BigInt::one());
        }
        Ok(p)
    }

    pub fn from_terms(
        ring: &Arc<RingSpec>,
        terms: Vec<(Monomial, BigInt)>,
    ) -> Result<Self, RingError> {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            // revalidate against this ring
            let m = Monomial::new(ring, m.0)?;
            if !c.is_zero() {
                let entry = p.terms.entry(m).or_insert_with(BigInt::zero);
                *entry += c;
                if entry.is_zero() {
                    // re-fetch key: remove zero entries lazily below
                }
            }
        }
        p.terms.retain(|_, c| !c.is_zero());
        Ok(p)
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .iter()
            .find(|(m, _)| m.is_constant())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coefficient(&self, m: &Monomial) -> Result<BigInt, RingError> {
        // validate against our ring
        Monomial::new(&self.ring, m.0.clone())?;
        Ok(self.terms.get(m).cloned().unwrap_or_else(BigInt::zero))
    }

    fn check_same_ring(&self, other: &Self) -> Result<(), RingError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(TruncatedPolynomial {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        TruncatedPolynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RingError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        TruncatedPolynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Distributive product; over-cap monomials vanish.
    pub fn mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same_ring(other)?;
        let caps = self.ring.caps();
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        // iterate the smaller operand on the outside
        let (a, b) = if self.terms.len() <= other.terms.len() {
            (&self.terms, &other.terms)
        } else {
            (&other.terms, &self.terms)
        };
        for (ma, ca) in a {
            for (mb, cb) in b {
                if let Some(m) = ma.mul(mb, caps) {
                    let entry = terms.entry(m).or_insert_with(BigInt::zero);
                    *entry += ca * cb;
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(TruncatedPolynomial {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    /// Binary powering; `e = 0` gives 1.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// Multiplicative inverse as a truncated power series. Requires the
    /// constant term to be 1 or -1; all denominators arising in the Chern
    /// polynomial computations have constant term 1.
    pub fn inverse(&self) -> Result<Self, RingError> {
        let c0 = self.constant_term();
        let unit = if c0 == BigInt::one() {
            BigInt::one()
        } else if c0 == -BigInt::one() {
            -BigInt::one()
        } else {
            return Err(RingError::NonUnitConstantTerm);
        };
        // self = unit * (1 + q) with q nilpotent; invert by the geometric
        // series, stopping once q^t hits zero.
        let q = self.scale(&unit).sub(&Self::one(&self.ring))?;
        let mut acc = Self::one(&self.ring);
        let mut power = Self::one(&self.ring);
        let mut sign = BigInt::one();
        loop {
            power = power.mul(&q)?;
            if power.is_zero() {
                break;
            }
            sign = -sign;
            acc = acc.add(&power.scale(&sign))?;
        }
        Ok(acc.scale(&unit))
    }

    /// The homogeneous geometric sum `sum_{j=0}^{n-1} a^{n-1-j} b^j`,
    /// i.e. the exact polynomial quotient `(a^n - b^n) / (a - b)`.
    pub fn geom_sum(a: &Self, b: &Self, n: u32) -> Result<Self, RingError> {
        a.check_same_ring(b)?;
        assert!(n >= 1, "geom_sum needs n >= 1");
        // Horner: s_{t+1} = s_t * a + b^{t+1}
        let mut s = Self::one(&a.ring);
        let mut b_pow = Self::one(&a.ring);
        for _ in 1..n {
            b_pow = b_pow.mul(b)?;
            s = s.mul(a)?.add(&b_pow)?;
        }
        Ok(s)
    }

    /// Project into `target` ring by dropping terms that exceed its caps.
    /// Variables must match by name and order; caps may only shrink.
    pub fn project(&self, target: &Arc<RingSpec>) -> Result<Self, RingError> {
        if target.vars != self.ring.vars {
            return Err(RingError::RingMismatch);
        }
        let mut p = Self::zero(target);
        for (m, c) in &self.terms {
            if m.0.iter().zip(target.caps()).all(|(&e, &cap)| e < cap) {
                p.terms.insert(Monomial(m.0.clone()), c.clone());
            }
        }
        Ok(p)
    }
}

impl fmt::Display for TruncatedPolynomial {
    /// Stable text form: terms in graded-lex order, `coeff * h^a v1^b ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut parts: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.ring.vars[i].clone()),
                    _ => parts.push(format!("{}^{}", self.ring.vars[i], e)),
                }
            }
            if parts.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", parts.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, parts.join("*"))?;
            }
        }
        Ok(())
    }
}
