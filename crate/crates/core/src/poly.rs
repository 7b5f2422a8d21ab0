//! Sparse polynomials over ℚ in the variables `x, y, z, w0, w1, …`.
//!
//! Monomials are ordered by total degree first, then lexicographically on
//! `(z, x, y, w_n, …, w_0)`, i.e. with variable precedence
//! `z > x > y > w_l > w_k` whenever `l > k`. Polynomials keep their terms
//! strictly decreasing in that order, so the leading term is always `terms[0]`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variable {
    X,
    Y,
    Z,
    W(u32),
}

/// A monomial `x^a y^b z^c ∏ w_i^{α_i}` with finitely many `w_i`.
///
/// The `w` part is stored as `(index, exponent)` pairs sorted by increasing
/// index, never holding a zero exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    x: u32,
    y: u32,
    z: u32,
    w: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Variable) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Variable, exp: u32) -> Self {
        let mut m = Self::one();
        m.set_exponent(v, exp);
        m
    }

    /// Builds `x^x y^y z^z ∏ w_i^{e}` from an arbitrary list of `(i, e)` pairs.
    /// Repeated indices accumulate.
    pub fn new(x: u32, y: u32, z: u32, w: &[(u32, u32)]) -> Self {
        let mut m = Self { x, y, z, w: Vec::new() };
        for &(i, e) in w {
            let cur = m.exponent(Variable::W(i));
            m.set_exponent(Variable::W(i), cur + e);
        }
        m
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        match v {
            Variable::X => self.x,
            Variable::Y => self.y,
            Variable::Z => self.z,
            Variable::W(i) => match self.w.binary_search_by_key(&i, |&(j, _)| j) {
                Ok(pos) => self.w[pos].1,
                Err(_) => 0,
            },
        }
    }

    pub fn set_exponent(&mut self, v: Variable, exp: u32) {
        match v {
            Variable::X => self.x = exp,
            Variable::Y => self.y = exp,
            Variable::Z => self.z = exp,
            Variable::W(i) => match self.w.binary_search_by_key(&i, |&(j, _)| j) {
                Ok(pos) if exp == 0 => {
                    self.w.remove(pos);
                }
                Ok(pos) => self.w[pos].1 = exp,
                Err(_) if exp == 0 => {}
                Err(pos) => self.w.insert(pos, (i, exp)),
            },
        }
    }

    pub fn x_exp(&self) -> u32 {
        self.x
    }

    pub fn y_exp(&self) -> u32 {
        self.y
    }

    pub fn z_exp(&self) -> u32 {
        self.z
    }

    /// `(index, exponent)` pairs of the `w` variables, increasing index.
    pub fn w_exponents(&self) -> &[(u32, u32)] {
        &self.w
    }

    pub fn total_degree(&self) -> u64 {
        self.x as u64 + self.y as u64 + self.z as u64 + self.w_degree()
    }

    pub fn w_degree(&self) -> u64 {
        self.w.iter().map(|&(_, e)| e as u64).sum()
    }

    /// `Σ i·α_i` over the `w` part.
    pub fn w_index_sum(&self) -> u64 {
        self.w.iter().map(|&(i, e)| i as u64 * e as u64).sum()
    }

    pub fn max_w_index(&self) -> Option<u32> {
        self.w.last().map(|&(i, _)| i)
    }

    pub fn min_w_index(&self) -> Option<u32> {
        self.w.first().map(|&(i, _)| i)
    }

    pub fn is_one(&self) -> bool {
        self.x == 0 && self.y == 0 && self.z == 0 && self.w.is_empty()
    }

    /// Every variable with a positive exponent, in display order `x, y, z, w0, w1, …`.
    pub fn support(&self) -> impl Iterator<Item = (Variable, u32)> + '_ {
        [(Variable::X, self.x), (Variable::Y, self.y), (Variable::Z, self.z)]
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .chain(self.w.iter().map(|&(i, e)| (Variable::W(i), e)))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut w = Vec::with_capacity(self.w.len() + other.w.len());
        let (mut a, mut b) = (self.w.iter().peekable(), other.w.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                    Ordering::Less => {
                        w.push((i, e));
                        a.next();
                    }
                    Ordering::Greater => {
                        w.push((j, f));
                        b.next();
                    }
                    Ordering::Equal => {
                        w.push((i, e + f));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    w.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    w.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { x: self.x + other.x, y: self.y + other.y, z: self.z + other.z, w }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.x <= other.x
            && self.y <= other.y
            && self.z <= other.z
            && self.w.iter().all(|&(i, e)| other.exponent(Variable::W(i)) >= e)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut q = Monomial {
            x: other.x - self.x,
            y: other.y - self.y,
            z: other.z - self.z,
            w: other.w.clone(),
        };
        for &(i, e) in &self.w {
            let cur = q.exponent(Variable::W(i));
            q.set_exponent(Variable::W(i), cur - e);
        }
        Some(q)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial {
            x: self.x.max(other.x),
            y: self.y.max(other.y),
            z: self.z.max(other.z),
            w: self.w.clone(),
        };
        for &(i, e) in &other.w {
            let cur = m.exponent(Variable::W(i));
            m.set_exponent(Variable::W(i), cur.max(e));
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (self.x == 0 || other.x == 0)
            && (self.y == 0 || other.y == 0)
            && (self.z == 0 || other.z == 0)
            && self.w.iter().all(|&(i, _)| other.exponent(Variable::W(i)) == 0)
    }
}

/// The monomial order: degree, then lex on `(z, x, y, w_n, …, w_0)`.
pub fn compare(a: &Monomial, b: &Monomial) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then(a.z.cmp(&b.z))
        .then(a.x.cmp(&b.x))
        .then(a.y.cmp(&b.y))
        .then_with(|| compare_w_desc(&a.w, &b.w))
}

// Scan from the largest index present in either monomial downward; absent
// indices count as exponent 0.
fn compare_w_desc(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let (mut ia, mut ib) = (a.iter().rev().peekable(), b.iter().rev().peekable());
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                Ordering::Greater => return Ordering::Greater,
                Ordering::Less => return Ordering::Less,
                Ordering::Equal => match e.cmp(&f) {
                    Ordering::Equal => {
                        ia.next();
                        ib.next();
                    }
                    ord => return ord,
                },
            },
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

/// A polynomial with terms strictly decreasing in the monomial order and no
/// zero coefficients. The empty term list is the zero polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(coeff: Rational, monomial: Monomial) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Self { terms: vec![Term { coeff, monomial }] }
    }

    pub fn var(v: Variable) -> Self {
        Self::term(Rational::from_integer(1.into()), Monomial::var(v))
    }

    /// Collects arbitrary `(coefficient, monomial)` pairs into canonical form.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (c, m) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(acc)
    }

    pub(crate) fn from_map(map: BTreeMap<Monomial, Rational>) -> Self {
        let terms = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coeff)| Term { coeff, monomial })
            .collect();
        Self { terms }
    }

    pub(crate) fn into_map(self) -> BTreeMap<Monomial, Rational> {
        self.terms.into_iter().map(|t| (t.monomial, t.coeff)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|t| compare(m, &t.monomial))
            .map(|pos| self.terms[pos].coeff.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, monomial: t.monomial.clone() })
            .collect();
        Polynomial { terms }
    }

    /// `c · m · self`.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        // Multiplication by a monomial is order-preserving.
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, monomial: t.monomial.mul(m) })
            .collect();
        Polynomial { terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: t.coeff.clone(), monomial: t.monomial.mul(m) })
            .collect();
        Polynomial { terms }
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, t| acc + t.coeff.abs())
    }

    pub fn max_w_index(&self) -> Option<u32> {
        self.terms.iter().filter_map(|t| t.monomial.max_w_index()).max()
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        let fix = |c: &Rational| if negate_other { -c } else { c.clone() };
        loop {
            match (a.peek(), b.peek()) {
                (Some(s), Some(o)) => match compare(&s.monomial, &o.monomial) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let o = b.next().unwrap();
                        out.push(Term { coeff: fix(&o.coeff), monomial: o.monomial.clone() });
                    }
                    Ordering::Equal => {
                        let (s, o) = (a.next().unwrap(), b.next().unwrap());
                        let c = &s.coeff + fix(&o.coeff);
                        if !c.is_zero() {
                            out.push(Term { coeff: c, monomial: s.monomial.clone() });
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let o = b.next().unwrap();
                    out.push(Term { coeff: fix(&o.coeff), monomial: o.monomial.clone() });
                }
                (None, None) => break,
            }
        }
        Polynomial { terms: out }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for s in &self.terms {
            for o in &rhs.terms {
                *acc.entry(s.monomial.mul(&o.monomial)).or_insert_with(Rational::zero) +=
                    &s.coeff * &o.coeff;
            }
        }
        Polynomial::from_map(acc)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: -&t.coeff, monomial: t.monomial.clone() })
            .collect();
        Polynomial { terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::term(Rational::from_integer(1.into()), m)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::X => f.write_str("x"),
            Variable::Y => f.write_str("y"),
            Variable::Z => f.write_str("z"),
            Variable::W(i) => write!(f, "w{i}"),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (n, (v, e)) in self.support().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "({}/{})", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let c = t.coeff.abs();
            let unit = c == Rational::from_integer(1.into());
            if t.monomial.is_one() {
                write_coeff(f, &c)?;
            } else if unit {
                write!(f, "{}", t.monomial)?;
            } else {
                write_coeff(f, &c)?;
                write!(f, "*{}", t.monomial)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn w(i: u32) -> Variable {
        Variable::W(i)
    }

    fn mono(x: u32, y: u32, z: u32, ws: &[(u32, u32)]) -> Monomial {
        Monomial::new(x, y, z, ws)
    }

    #[test]
    fn order_examples() {
        // z^2 vs x*w0: same degree, z wins
        assert_eq!(compare(&mono(0, 0, 2, &[]), &mono(1, 0, 0, &[(0, 1)])), Ordering::Greater);
        // x*w1 vs y*w0: x wins
        assert_eq!(compare(&mono(1, 0, 0, &[(1, 1)]), &mono(0, 1, 0, &[(0, 1)])), Ordering::Greater);
        // y*w0*w2 vs y*w1^2: w2 exponent 1 vs 0
        assert_eq!(
            compare(&mono(0, 1, 0, &[(0, 1), (2, 1)]), &mono(0, 1, 0, &[(1, 2)])),
            Ordering::Greater
        );
        // degree beats everything
        assert_eq!(compare(&mono(0, 0, 0, &[(0, 3)]), &mono(0, 0, 2, &[])), Ordering::Greater);
        assert_eq!(compare(&mono(0, 0, 0, &[(9, 1)]), &mono(0, 0, 0, &[(3, 1)])), Ordering::Greater);
    }

    #[test]
    fn exponent_bookkeeping() {
        let mut m = Monomial::var(w(3));
        m.set_exponent(w(1), 2);
        m.set_exponent(w(3), 0);
        assert_eq!(m.w_exponents(), &[(1, 2)]);
        assert_eq!(m.exponent(w(3)), 0);
        let q = Monomial::var(w(1)).quotient_of(&m).unwrap();
        assert_eq!(q, Monomial::var(w(1)));
        assert!(Monomial::var(w(2)).quotient_of(&m).is_none());
        assert_eq!(mono(1, 0, 0, &[(2, 1)]).lcm(&mono(0, 1, 0, &[(2, 2)])), mono(1, 1, 0, &[(2, 2)]));
    }

    #[test]
    fn ring_examples() {
        let xw0 = Polynomial::from(mono(1, 0, 0, &[(0, 1)]));
        let z2 = Polynomial::from(mono(0, 0, 2, &[]));
        assert!((&xw0 + &(-&xw0)).is_zero());

        let f0 = &xw0 - &z2;
        let y = Polynomial::var(Variable::Y);
        let expected = &Polynomial::from(mono(1, 1, 0, &[(0, 1)])) - &Polynomial::from(mono(0, 1, 2, &[]));
        assert_eq!(&f0 * &y, expected);

        let z = Polynomial::var(Variable::Z);
        assert_eq!(&z * &z, z2);
        assert_eq!(f0.scale(&int(0)), Polynomial::zero());
    }

    #[test]
    fn l1_examples() {
        let xw0 = Polynomial::from(mono(1, 0, 0, &[(0, 1)]));
        let z2 = Polynomial::from(mono(0, 0, 2, &[]));
        assert_eq!((&xw0 - &z2).l1_norm(), int(2));
        assert_eq!(Polynomial::zero().l1_norm(), int(0));
        let p = Polynomial::from_terms([
            (rat(1, 2), mono(0, 1, 0, &[(1, 2)])),
            (rat(-1, 3), mono(0, 0, 1, &[])),
        ]);
        assert_eq!(p.l1_norm(), rat(5, 6));
    }

    #[test]
    fn terms_are_canonical() {
        let p = Polynomial::from_terms([
            (int(1), mono(0, 0, 0, &[(0, 1)])),
            (int(2), mono(0, 0, 2, &[])),
            (int(-1), mono(0, 0, 0, &[(0, 1)])),
            (int(3), mono(1, 0, 0, &[])),
        ]);
        assert_eq!(p.len(), 2);
        assert_eq!(p.leading_term().unwrap().monomial, mono(0, 0, 2, &[]));
        assert_eq!(p.coefficient(&mono(1, 0, 0, &[])), int(3));
        assert_eq!(p.coefficient(&mono(0, 0, 0, &[(0, 1)])), int(0));
    }
}
