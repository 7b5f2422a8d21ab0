//! Truncated power series in `t` over the quotient algebra and the linear
//! equation `(x − y·t)·f(t) = z^2`.
//!
//! Comparing coefficients gives `x·f_0 = z^2` and `x·f_k = y·f_{k−1}`, whose
//! solution by repeated division by `x` is `f_k = k!·w_k`. Since `‖w_k‖ = 1`
//! exactly, `‖f_k‖^{1/k} = (k!)^{1/k}` is unbounded and the series has radius
//! of convergence zero.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;
use thiserror::Error;

use crate::ideal::IdealError;
use crate::poly::{Monomial, Polynomial, Variable};
use crate::quotient::RElement;
use crate::rational::{factorial, pow, Rational};

pub const DEFAULT_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("coefficient {0} is not divisible by x")]
    NotDivisible(usize),
    #[error("no exact norm is available for coefficient {0}")]
    NoExactNorm(usize),
    #[error("divergence bound must be positive")]
    NonPositiveBound,
}

/// `f_0 + f_1 t + … + f_K t^K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeriesR {
    coeffs: Vec<RElement>,
}

impl TruncatedSeriesR {
    pub fn new(coeffs: Vec<RElement>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one coefficient");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![RElement::zero(); order + 1] }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &RElement {
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, c: RElement) {
        self.coeffs[k] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RElement::is_zero)
    }

    /// Least `k` with `f_k ≠ 0`.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

/// Solves `(x − y·t)·f = z^2` through order `t^order`.
pub fn solve_flat_counterexample(order: usize) -> Result<TruncatedSeriesR, SeriesError> {
    let z2 = RElement::project(&Polynomial::from(Monomial::var_pow(Variable::Z, 2)))?;
    let y = RElement::var(Variable::Y);
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(z2.divide_by_x()?.ok_or(SeriesError::NotDivisible(0))?);
    for k in 1..=order {
        let rhs = y.mul(&coeffs[k - 1])?;
        coeffs.push(rhs.divide_by_x()?.ok_or(SeriesError::NotDivisible(k))?);
    }
    Ok(TruncatedSeriesR { coeffs })
}

/// Coefficients of `(x − y·t)·f − z^2` modulo `t^{K+1}`.
pub fn residual(f: &TruncatedSeriesR) -> Result<TruncatedSeriesR, SeriesError> {
    let x = Polynomial::var(Variable::X);
    let y = Polynomial::var(Variable::Y);
    let z2 = Polynomial::from(Monomial::var_pow(Variable::Z, 2));
    let mut out = Vec::with_capacity(f.coeffs.len());
    for k in 0..f.coeffs.len() {
        let mut c = &x * f.coeffs[k].normal_form();
        if k == 0 {
            c = &c - &z2;
        } else {
            c = &c - &(&y * f.coeffs[k - 1].normal_form());
        }
        out.push(RElement::project(&c)?);
    }
    Ok(TruncatedSeriesR { coeffs: out })
}

/// `k!·w_k` as a quotient element.
pub fn expected_coefficient(k: usize) -> RElement {
    let c = Rational::from_integer(factorial(k as u64));
    let w = Polynomial::term(c, Monomial::var(Variable::W(k as u32)));
    RElement::project(&w).expect("w_k is already standard")
}

pub fn has_factorial_coefficients(f: &TruncatedSeriesR) -> bool {
    f.coeffs.iter().enumerate().all(|(k, c)| *c == expected_coefficient(k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormRow {
    pub k: usize,
    /// Exact quotient norm `‖f_k‖`.
    pub norm: String,
    /// Whether `‖f_k‖ ≥ bound^k`.
    pub reached: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivergenceCertificate {
    pub bound: String,
    pub truncation_order: usize,
    /// Least `k ≥ 1` with `‖f_k‖^{1/k} ≥ bound`, if one exists within the truncation.
    pub least_k: Option<usize>,
    pub table: Vec<NormRow>,
}

/// Finds the least `k ≥ 1` with `‖f_k‖ ≥ bound^k`, compared exactly.
///
/// Needs the exact norms of `c·w_k` coefficients, so `f` should come from
/// [`solve_flat_counterexample`].
pub fn divergence_certificate(
    f: &TruncatedSeriesR,
    bound: &Rational,
) -> Result<DivergenceCertificate, SeriesError> {
    if !bound.is_positive() {
        return Err(SeriesError::NonPositiveBound);
    }
    let mut table = Vec::with_capacity(f.coeffs.len());
    let mut least_k = None;
    for (k, c) in f.coeffs.iter().enumerate() {
        let norm = c.exact_norm().ok_or(SeriesError::NoExactNorm(k))?;
        let reached = k >= 1 && norm >= pow(bound, k as u64);
        if reached && least_k.is_none() {
            least_k = Some(k);
        }
        table.push(NormRow { k, norm: norm.to_string(), reached });
    }
    Ok(DivergenceCertificate {
        bound: bound.to_string(),
        truncation_order: f.truncation_order(),
        least_k,
        table,
    })
}

/// Least `k ≥ 1` with `k! ≥ bound^k`, by direct integer search up to `limit`.
pub fn least_factorial_exceeding(bound: &BigInt, limit: usize) -> Option<usize> {
    let mut fact = BigInt::one();
    let mut power = BigInt::one();
    for k in 1..=limit {
        fact *= BigInt::from(k);
        power *= bound;
        if fact >= power {
            return Some(k);
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesRow {
    pub k: usize,
    pub coeff: String,
    pub norm: String,
}

pub fn rows(f: &TruncatedSeriesR) -> Vec<SeriesRow> {
    f.coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| SeriesRow {
            k,
            coeff: c.to_string(),
            norm: c.exact_norm().unwrap_or_else(|| c.norm_upper_bound().clone()).to_string(),
        })
        .collect()
}
