//! The disc algebra `B_ρ` in one variable `x`, with the weighted norm
//! `‖Σ a_α x^α‖_ρ = Σ |a_α| ρ^α`, and the approximate solutions of
//! `x·y1² − (x + t)·y2² = 0` built from the truncations of `√(1+t)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, Variable};
use crate::rational::{factorial, int, pow, Rational};

pub const MAX_REMARK_K: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArtinError {
    #[error("k-max {0} exceeds {MAX_REMARK_K}; 2^(k!) is too large to print")]
    KTooLarge(u32),
    #[error("rho must be positive")]
    NonPositiveRho,
    #[error("unknown example {0}; expected 1 or 2")]
    UnknownExample(u8),
}

/// A polynomial in `x` viewed inside `B_ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BRhoElement {
    coeffs: BTreeMap<u32, Rational>,
    rho: Rational,
}

impl BRhoElement {
    pub fn zero(rho: &Rational) -> Self {
        Self { coeffs: BTreeMap::new(), rho: rho.clone() }
    }

    pub fn constant(c: Rational, rho: &Rational) -> Self {
        Self::monomial(c, 0, rho)
    }

    /// `c·x^e`.
    pub fn monomial(c: Rational, e: u32, rho: &Rational) -> Self {
        let mut out = Self::zero(rho);
        if !c.is_zero() {
            out.coeffs.insert(e, c);
        }
        out
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u32, Rational)>>(coeffs: I, rho: &Rational) -> Self {
        let mut out = Self::zero(rho);
        for (e, c) in coeffs {
            out.add_term(e, &c);
        }
        out
    }

    fn add_term(&mut self, e: u32, c: &Rational) {
        let entry = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn rho(&self) -> &Rational {
        &self.rho
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: u32) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Σ |a_α| ρ^α`.
    pub fn norm(&self) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, (&e, c)| acc + c.abs() * pow(&self.rho, e as u64))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|(&e, a)| (e, a * c)), &self.rho)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.rho);
        for (&e, a) in &self.coeffs {
            for (&f, b) in &other.coeffs {
                out.add_term(e + f, &(a * b));
            }
        }
        out
    }

    /// Same element as a polynomial in the variable `x`.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(
            self.coeffs.iter().map(|(&e, c)| (c.clone(), Monomial::var_pow(Variable::X, e))),
        )
    }
}

pub fn brho_norm(f: &BRhoElement) -> Rational {
    f.norm()
}

impl fmt::Display for BRhoElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// `Σ_n c_n(x) t^n`, truncated; index `n` is the power of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BRhoSeries {
    coeffs: Vec<BRhoElement>,
    rho: Rational,
}

impl BRhoSeries {
    pub fn new(coeffs: Vec<BRhoElement>, rho: &Rational) -> Self {
        debug_assert!(coeffs.iter().all(|c| &c.rho == rho));
        Self { coeffs, rho: rho.clone() }
    }

    pub fn constant(c: BRhoElement) -> Self {
        let rho = c.rho.clone();
        Self { coeffs: vec![c], rho }
    }

    /// The series `t`.
    pub fn t(rho: &Rational) -> Self {
        Self::new(vec![BRhoElement::zero(rho), BRhoElement::constant(int(1), rho)], rho)
    }

    pub fn coeffs(&self) -> &[BRhoElement] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> BRhoElement {
        self.coeffs.get(n).cloned().unwrap_or_else(|| BRhoElement::zero(&self.rho))
    }

    /// Least power of `t` with a nonzero coefficient; `None` for the zero series.
    pub fn t_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect(), &self.rho)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect(), &self.rho)
    }

    /// Exact product; the length is the sum of the lengths minus one, so no
    /// term is dropped.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut out = vec![BRhoElement::zero(&self.rho); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out, &self.rho)
    }
}

/// `a_1, …, a_c` with `(1 + Σ a_n t^n)^2 ≡ 1 + t mod t^{c+1}`.
///
/// Matching the `t^n` coefficient of the square gives
/// `2·a_n + Σ_{i=1}^{n-1} a_i a_{n-i} = [n = 1]`.
pub fn sqrt_coeffs(c: usize) -> Vec<Rational> {
    let mut a: Vec<Rational> = Vec::with_capacity(c + 1);
    a.push(int(1));
    for n in 1..=c {
        let rhs = if n == 1 { int(1) } else { int(0) };
        let cross = (1..n).fold(Rational::zero(), |acc, i| acc + &a[i] * &a[n - i]);
        a.push((rhs - cross) / int(2));
    }
    a.remove(0);
    a
}

/// `(y1, y2)` with `y2 = x^c` and `y1 = x^c + Σ_{n=1}^{c} a_n x^{c-n} t^n`.
pub fn approx_solution_ex1(c: u32, rho: &Rational) -> (BRhoSeries, BRhoSeries) {
    let a = sqrt_coeffs(c as usize);
    let mut y1 = vec![BRhoElement::monomial(int(1), c, rho)];
    for n in 1..=c {
        y1.push(BRhoElement::monomial(a[n as usize - 1].clone(), c - n, rho));
    }
    let y2 = BRhoSeries::constant(BRhoElement::monomial(int(1), c, rho));
    (BRhoSeries::new(y1, rho), y2)
}

/// Same as [`approx_solution_ex1`] plus `y3 = t`.
pub fn approx_solution_ex2(c: u32, rho: &Rational) -> (BRhoSeries, BRhoSeries, BRhoSeries) {
    let (y1, y2) = approx_solution_ex1(c, rho);
    (y1, y2, BRhoSeries::t(rho))
}

/// `x·y1² − (x + s)·y2²`; `s = t` for the first example, `s = y3` for the second.
fn quadratic_form(y1: &BRhoSeries, y2: &BRhoSeries, s: &BRhoSeries, rho: &Rational) -> BRhoSeries {
    let x = BRhoSeries::constant(BRhoElement::monomial(int(1), 1, rho));
    let lhs = x.mul(&y1.mul(y1));
    let rhs = x.add(s).mul(&y2.mul(y2));
    lhs.sub(&rhs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualOrder {
    /// `None` when the residual vanishes identically.
    pub order: Option<usize>,
    pub leading: BRhoElement,
    pub residual: BRhoSeries,
}

fn residual_order(series: BRhoSeries) -> ResidualOrder {
    let order = series.t_order();
    let leading = order.map(|n| series.coeff(n)).unwrap_or_else(|| BRhoElement::zero(&series.rho));
    ResidualOrder { order, leading, residual: series }
}

/// `F(x, t, y1, y2) = x·y1² − (x + t)·y2²` at the approximate solution.
pub fn residual_order_ex1(c: u32) -> ResidualOrder {
    let rho = int(1);
    let (y1, y2) = approx_solution_ex1(c, &rho);
    residual_order(quadratic_form(&y1, &y2, &BRhoSeries::t(&rho), &rho))
}

/// `G(x, y1, y2, y3) = x·y1² − (x + y3)·y2²` at the approximate solution with `y3 = t`.
pub fn residual_order_ex2(c: u32) -> ResidualOrder {
    let rho = int(1);
    let (y1, y2, y3) = approx_solution_ex2(c, &rho);
    residual_order(quadratic_form(&y1, &y2, &y3, &rho))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualReport {
    pub c: u32,
    /// `-1` encodes an identically zero residual (infinite order).
    pub order: i64,
    pub bound: u32,
    pub pass: bool,
    pub leading: String,
}

/// Guaranteed order: `c + 1` for the first example, `c` for the second.
pub fn order_bound(example: u8, c: u32) -> Result<u32, ArtinError> {
    match example {
        1 => Ok(c + 1),
        2 => Ok(c),
        e => Err(ArtinError::UnknownExample(e)),
    }
}

pub fn residual_reports(example: u8, c_max: u32) -> Result<Vec<ResidualReport>, ArtinError> {
    order_bound(example, 0)?;
    Ok((0..=c_max)
        .into_par_iter()
        .map(|c| {
            let r = if example == 1 { residual_order_ex1(c) } else { residual_order_ex2(c) };
            let bound = order_bound(example, c).expect("example checked above");
            let pass = r.order.is_none_or(|o| o as u64 >= bound as u64);
            ResidualReport {
                c,
                order: r.order.map_or(-1, |o| o as i64),
                bound,
                pass,
                leading: r.leading.to_string(),
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthRow {
    pub k: u32,
    pub exponent: String,
    pub norm: String,
}

/// `‖x^{k!}‖_2 = 2^{k!}` for `k = 0..=k_max`.
pub fn remark_growth(k_max: u32) -> Result<Vec<(u32, BigInt)>, ArtinError> {
    if k_max > MAX_REMARK_K {
        return Err(ArtinError::KTooLarge(k_max));
    }
    let rho = int(2);
    Ok((0..=k_max)
        .map(|k| {
            let e = factorial(k as u64);
            let e = u32::try_from(&e).expect("k! fits in u32 for k <= 6");
            let n = brho_norm(&BRhoElement::monomial(int(1), e, &rho));
            debug_assert!(n.is_integer());
            (k, n.to_integer())
        })
        .collect())
}

pub fn growth_rows(k_max: u32) -> Result<Vec<GrowthRow>, ArtinError> {
    Ok(remark_growth(k_max)?
        .into_iter()
        .map(|(k, n)| GrowthRow { k, exponent: factorial(k as u64).to_string(), norm: n.to_string() })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn x_poly(coeffs: &[(u32, Rational)], rho: &Rational) -> BRhoElement {
        BRhoElement::from_coeffs(coeffs.iter().cloned(), rho)
    }

    #[test]
    fn norm_examples() {
        assert_eq!(brho_norm(&BRhoElement::monomial(int(1), 2, &int(2))), int(4));
        assert_eq!(brho_norm(&BRhoElement::zero(&rat(7, 3))), int(0));
        let f = x_poly(&[(1, int(3)), (3, int(-1))], &rat(1, 2));
        assert_eq!(brho_norm(&f), rat(13, 8));
    }

    #[test]
    fn sqrt_examples() {
        assert!(sqrt_coeffs(0).is_empty());
        assert_eq!(sqrt_coeffs(3), vec![rat(1, 2), rat(-1, 8), rat(1, 16)]);
    }

    #[test]
    fn sqrt_matches_binomial_series() {
        // a_n = binom(1/2, n) computed from the product formula
        let a = sqrt_coeffs(12);
        let mut b = int(1);
        for n in 1..=12i64 {
            b = b * (rat(1, 2) - int(n - 1)) / int(n);
            assert_eq!(a[n as usize - 1], b);
        }
    }

    #[test]
    fn approx_solution_examples() {
        let rho = int(1);
        let (y1, y2) = approx_solution_ex1(0, &rho);
        assert_eq!(y1.coeffs(), &[BRhoElement::constant(int(1), &rho)]);
        assert_eq!(y2.coeffs(), &[BRhoElement::constant(int(1), &rho)]);

        let (y1, y2) = approx_solution_ex1(2, &rho);
        assert_eq!(y1.coeff(0), BRhoElement::monomial(int(1), 2, &rho));
        assert_eq!(y1.coeff(1), BRhoElement::monomial(rat(1, 2), 1, &rho));
        assert_eq!(y1.coeff(2), BRhoElement::constant(rat(-1, 8), &rho));
        assert_eq!(y2.coeffs(), &[BRhoElement::monomial(int(1), 2, &rho)]);
    }

    #[test]
    fn residual_examples() {
        let r0 = residual_order_ex1(0);
        assert_eq!(r0.order, Some(1));
        assert_eq!(r0.leading, BRhoElement::constant(int(-1), &int(1)));
        let r1 = residual_order_ex1(1);
        assert_eq!(r1.order, Some(2));
        assert_eq!(r1.leading, BRhoElement::monomial(rat(1, 4), 1, &int(1)));
        assert_eq!(r1.leading.to_string(), "(1/4)*x");

        let g0 = residual_order_ex2(0);
        assert_eq!(g0.order, Some(1));
        assert_eq!(g0.leading.to_string(), "-1");
        assert!(residual_order_ex2(1).order.unwrap() >= 1);
    }

    #[test]
    fn reports_respect_bounds() {
        for ex in [1, 2] {
            let reps = residual_reports(ex, 8).unwrap();
            assert_eq!(reps.len(), 9);
            assert!(reps.iter().all(|r| r.pass));
        }
        assert_eq!(residual_reports(3, 2), Err(ArtinError::UnknownExample(3)));
    }

    #[test]
    fn remark_examples() {
        let g = remark_growth(4).unwrap();
        assert_eq!(g[0], (0, BigInt::from(2)));
        assert_eq!(g[2], (2, BigInt::from(4)));
        assert_eq!(g[4], (4, BigInt::from(16_777_216)));
        assert_eq!(remark_growth(7), Err(ArtinError::KTooLarge(7)));
        assert_eq!(remark_growth(6).unwrap()[6].1, BigInt::from(2).pow(720));
    }
}
