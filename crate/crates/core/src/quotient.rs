//! Classes of the quotient algebra, represented by their normal forms.
//!
//! The ℓ¹ norm of the normal form bounds the quotient norm from above. For
//! an element `c·w_k` the bound is exact: no element of the ideal has a
//! nonzero coefficient on a bare `w_k`, since every generator lies in
//! `(x, y, z)`.
//!
//! Multiplication by `x` on standard monomials falls into three classes:
//!
//! * monomials containing `x` (only `w0` may accompany it) stay standard;
//! * `z^ε y^l W` with `l ≥ 1` maps to a scalar times `z^ε y^{l+1} W'`, where
//!   `W'` is the unique standard `w` part of the same degree and index sum
//!   one lower;
//! * `y`-free, `x`-free `z^ε W` with some `w_i`, `i ≥ 1`, maps to a scalar
//!   times `z^ε y W'`, again determined only by the degree and index sum of `W`.
//!
//! The last class is not injective: `x·(2·w0·w2 − w1^2) = w1·F_1 − w0·F_2`,
//! so `x` is a zero divisor modulo `I`. [`RElement::divide_by_x`] therefore
//! returns the preimage whose `y`-free part uses the canonical balanced
//! monomial `w_i^{d-r} w_{i+1}^r`.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::ideal::{is_standard, normal_form, IdealError, Reducer};
use crate::poly::{Monomial, Polynomial, Variable};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RElement {
    normal_form: Polynomial,
    norm_upper_bound: Rational,
}

/// Wire form: normal-form polynomial text plus the norm bound as `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RElementRecord {
    pub normal_form: String,
    pub norm_bound: String,
}

impl RElement {
    pub fn project(p: &Polynomial) -> Result<RElement, IdealError> {
        Self::project_with(p, &Reducer::default())
    }

    pub fn project_with(p: &Polynomial, reducer: &Reducer) -> Result<RElement, IdealError> {
        let (nf, _) = reducer.normal_form(p)?;
        Ok(Self::from_standard(nf))
    }

    fn from_standard(nf: Polynomial) -> RElement {
        debug_assert!(is_standard(&nf));
        let norm_upper_bound = nf.l1_norm();
        RElement { normal_form: nf, norm_upper_bound }
    }

    pub fn zero() -> RElement {
        Self::from_standard(Polynomial::zero())
    }

    pub fn var(v: Variable) -> RElement {
        RElement::project(&Polynomial::var(v)).expect("a single variable reduces in at most zero steps")
    }

    pub fn normal_form(&self) -> &Polynomial {
        &self.normal_form
    }

    pub fn norm_upper_bound(&self) -> &Rational {
        &self.norm_upper_bound
    }

    pub fn is_zero(&self) -> bool {
        self.normal_form.is_zero()
    }

    /// The exact quotient norm, when it is known: `|c|` for `c·w_k`, and 0 for 0.
    pub fn exact_norm(&self) -> Option<Rational> {
        match self.normal_form.terms() {
            [] => Some(Rational::zero()),
            [t] if t.monomial.x_exp() == 0
                && t.monomial.y_exp() == 0
                && t.monomial.z_exp() == 0
                && t.monomial.w_exponents().len() == 1
                && t.monomial.w_exponents()[0].1 == 1 =>
            {
                Some(t.coeff.abs())
            }
            _ => None,
        }
    }

    pub fn add(&self, other: &RElement) -> RElement {
        // sum of standard polynomials is standard
        Self::from_standard(&self.normal_form + &other.normal_form)
    }

    pub fn mul(&self, other: &RElement) -> Result<RElement, IdealError> {
        Self::project(&(&self.normal_form * &other.normal_form))
    }

    pub fn scale(&self, c: &Rational) -> RElement {
        Self::from_standard(self.normal_form.scale(c))
    }

    /// An `h` with `x·h = self` in the quotient, or `None` when `self` is not
    /// a multiple of `x`. Among the possible `h`, the one whose `x`-free,
    /// `y`-free part is built from balanced `w` monomials is returned.
    pub fn divide_by_x(&self) -> Result<Option<RElement>, IdealError> {
        let mut preimage = Vec::with_capacity(self.normal_form.len());
        for t in self.normal_form.terms() {
            let Some(pre) = pull_back_monomial(&t.monomial) else {
                return Ok(None);
            };
            let image = x_image(&pre)?;
            let [it] = image.terms() else {
                return Ok(None);
            };
            if it.monomial != t.monomial {
                return Ok(None);
            }
            preimage.push((&t.coeff / &it.coeff, pre));
        }
        let h = Polynomial::from_terms(preimage);
        Ok(Some(Self::from_standard(h)))
    }

    pub fn to_record(&self) -> RElementRecord {
        RElementRecord {
            normal_form: self.normal_form.to_string(),
            norm_bound: self.norm_upper_bound.to_string(),
        }
    }
}

/// Normal form of `x·m`.
pub fn x_image(m: &Monomial) -> Result<Polynomial, IdealError> {
    let xm = m.mul(&Monomial::var(Variable::X));
    Ok(normal_form(&Polynomial::from(xm))?.0)
}

/// `w_i^{d-r} w_{i+1}^r` with `i = s / d`, `r = s mod d`: the unique `w`
/// monomial of degree `d` and index sum `s` whose indices span at most 1.
pub fn balanced_w(degree: u64, index_sum: u64) -> Monomial {
    assert!(degree > 0, "balanced_w needs positive degree");
    let i = (index_sum / degree) as u32;
    let r = (index_sum % degree) as u32;
    let d = degree as u32;
    Monomial::new(0, 0, 0, &[(i, d - r), (i + 1, r)])
}

/// Candidate standard monomial `h` with `x·h ≡ c·m` for the standard `m`.
fn pull_back_monomial(m: &Monomial) -> Option<Monomial> {
    if m.x_exp() >= 1 {
        let mut h = m.clone();
        h.set_exponent(Variable::X, m.x_exp() - 1);
        return Some(h);
    }
    let d = m.w_degree();
    if m.y_exp() == 0 || d == 0 {
        return None;
    }
    let w = balanced_w(d, m.w_index_sum() + 1);
    let mut h = Monomial::new(0, m.y_exp() - 1, m.z_exp(), &[]);
    h = h.mul(&w);
    Some(h)
}

/// Equality in the quotient.
pub fn equal_mod_i(p: &Polynomial, q: &Polynomial) -> Result<bool, IdealError> {
    Ok(normal_form(p)?.0 == normal_form(q)?.0)
}

impl Add for &RElement {
    type Output = RElement;
    fn add(self, rhs: &RElement) -> RElement {
        RElement::add(self, rhs)
    }
}

impl Neg for &RElement {
    type Output = RElement;
    fn neg(self) -> RElement {
        RElement::from_standard(-&self.normal_form)
    }
}

impl Mul for &RElement {
    type Output = RElement;
    /// Panics only if the reducer's step ceiling is hit.
    fn mul(self, rhs: &RElement) -> RElement {
        RElement::mul(self, rhs).expect("reduction within the default step ceiling")
    }
}

impl fmt::Display for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.normal_form)
    }
}
