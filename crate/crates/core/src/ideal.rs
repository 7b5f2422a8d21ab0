//! The binomial ideal `I = (F_0, F_1, …)` with
//!
//! ```text
//! F_0     = x*w0 - z^2
//! F_{k+1} = y*w_k - (k+1)*x*w_{k+1}
//! G_{k,l} = (l+1)*y*w_k*w_{l+1} - (k+1)*y*w_l*w_{k+1}      (k < l)
//! ```
//!
//! `{F_j, G_{k,l}}` is a Gröbner basis for the degree-then-`(z,x,y,w_n..w_0)`
//! order, with initial ideal `(z^2, x*w_{k+1}, y*w_k*w_{l+1})`. Every generator
//! is a binomial, so a reduction step always trades one term for one term.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, Term, Variable};
use crate::rational::{self, int, Rational};

pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("G({0},{1}) requires k < l")]
    InvalidGenerator(u32, u32),
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("reduction exceeded {0} steps")]
    StepLimit(u64),
    #[error("malformed generator id {0:?}; expected F<j> or G<k>,<l>")]
    BadId(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorId {
    F(u32),
    G(u32, u32),
}

impl GeneratorId {
    pub fn validate(self) -> Result<Self, IdealError> {
        match self {
            GeneratorId::G(k, l) if k >= l => Err(IdealError::InvalidGenerator(k, l)),
            id => Ok(id),
        }
    }

    /// The monomial of the leading term.
    pub fn leading_monomial(self) -> Monomial {
        match self {
            GeneratorId::F(0) => Monomial::var_pow(Variable::Z, 2),
            GeneratorId::F(j) => Monomial::new(1, 0, 0, &[(j, 1)]),
            GeneratorId::G(k, l) => Monomial::new(0, 1, 0, &[(k, 1), (l + 1, 1)]),
        }
    }

    /// Ratio `|c'| / |c|` when a term `c*m` is rewritten by this generator
    /// into `c'*m'`: 1 for `F_0`, `1/(k+1)` for `F_{k+1}`, `(k+1)/(l+1)` for `G_{k,l}`.
    pub fn step_ratio(self) -> Rational {
        match self {
            GeneratorId::F(0) => int(1),
            GeneratorId::F(j) => rational::rat(1, j as i64),
            GeneratorId::G(k, l) => rational::rat(k as i64 + 1, l as i64 + 1),
        }
    }

    /// Largest `w` index occurring in the generator.
    pub fn max_w_index(self) -> u32 {
        match self {
            GeneratorId::F(j) => j,
            GeneratorId::G(_, l) => l + 1,
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorId::F(j) => write!(f, "F{j}"),
            GeneratorId::G(k, l) => write!(f, "G{k},{l}"),
        }
    }
}

impl FromStr for GeneratorId {
    type Err = IdealError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || IdealError::BadId(s.to_string());
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('F') {
            return rest.parse().map(GeneratorId::F).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix('G') {
            let (k, l) = rest.split_once(',').ok_or_else(bad)?;
            let k = k.trim().parse().map_err(|_| bad())?;
            let l = l.trim().parse().map_err(|_| bad())?;
            return GeneratorId::G(k, l).validate();
        }
        Err(bad())
    }
}

pub fn generator(id: GeneratorId) -> Result<Polynomial, IdealError> {
    let id = id.validate()?;
    let p = match id {
        GeneratorId::F(0) => Polynomial::from_terms([
            (int(1), Monomial::new(1, 0, 0, &[(0, 1)])),
            (int(-1), Monomial::var_pow(Variable::Z, 2)),
        ]),
        GeneratorId::F(j) => Polynomial::from_terms([
            (int(1), Monomial::new(0, 1, 0, &[(j - 1, 1)])),
            (-int(j as i64), Monomial::new(1, 0, 0, &[(j, 1)])),
        ]),
        GeneratorId::G(k, l) => Polynomial::from_terms([
            (int(l as i64 + 1), Monomial::new(0, 1, 0, &[(k, 1), (l + 1, 1)])),
            (-int(k as i64 + 1), Monomial::new(0, 1, 0, &[(l, 1), (k + 1, 1)])),
        ]),
    };
    Ok(p)
}

/// Every generator whose `w` indices are all `≤ max_index`.
pub fn generators_up_to(max_index: u32) -> Vec<GeneratorId> {
    let mut ids: Vec<GeneratorId> = (0..=max_index).map(GeneratorId::F).collect();
    for l in 0..max_index {
        for k in 0..l {
            ids.push(GeneratorId::G(k, l));
        }
    }
    ids
}

pub fn leading_term(p: &Polynomial) -> Result<Term, IdealError> {
    p.leading_term().cloned().ok_or(IdealError::ZeroPolynomial)
}

fn s_pair(p: &Polynomial, q: &Polynomial, reduce_content: bool) -> Result<Polynomial, IdealError> {
    let lp = leading_term(p)?;
    let lq = leading_term(q)?;
    let lcm = lp.monomial.lcm(&lq.monomial);
    let mp = lp.monomial.quotient_of(&lcm).expect("lcm is a multiple");
    let mq = lq.monomial.quotient_of(&lcm).expect("lcm is a multiple");
    let g = if reduce_content { rational::gcd(&lp.coeff, &lq.coeff) } else { Rational::one() };
    let a = q.mul_term(&(&lp.coeff / &g), &mq);
    let b = p.mul_term(&(&lq.coeff / &g), &mp);
    Ok(&a - &b)
}

/// Fraction-free S-polynomial
/// `(lc(p)/g)·(L/lm(q))·q − (lc(q)/g)·(L/lm(p))·p`, with `L` the lcm of the
/// leading monomials and `g` the positive gcd of the leading coefficients.
pub fn s_polynomial(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, IdealError> {
    s_pair(p, q, true)
}

/// [`s_polynomial`] without dividing out `g`.
pub fn cross_s_polynomial(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, IdealError> {
    s_pair(p, q, false)
}

/// True iff `m` is divisible by none of `z^2`, `x*w_{k+1}`, `y*w_k*w_{l+1}` (k < l).
pub fn is_standard_monomial(m: &Monomial) -> bool {
    if m.z_exp() >= 2 {
        return false;
    }
    if m.x_exp() >= 1 && m.max_w_index().is_some_and(|i| i >= 1) {
        return false;
    }
    if m.y_exp() >= 1 {
        if let (Some(lo), Some(hi)) = (m.min_w_index(), m.max_w_index()) {
            if hi - lo >= 2 {
                return false;
            }
        }
    }
    true
}

pub fn is_standard(p: &Polynomial) -> bool {
    p.terms().iter().all(|t| is_standard_monomial(&t.monomial))
}

/// All generators whose leading monomial divides `m`.
pub fn reducers_of(m: &Monomial) -> Vec<GeneratorId> {
    let mut out = Vec::new();
    if m.z_exp() >= 2 {
        out.push(GeneratorId::F(0));
    }
    let ws = m.w_exponents();
    if m.x_exp() >= 1 {
        out.extend(ws.iter().filter(|&&(j, _)| j >= 1).map(|&(j, _)| GeneratorId::F(j)));
    }
    if m.y_exp() >= 1 {
        for (n, &(a, _)) in ws.iter().enumerate() {
            for &(b, _) in &ws[n + 1..] {
                if b >= a + 2 {
                    out.push(GeneratorId::G(a, b - 1));
                }
            }
        }
    }
    out
}

/// Reducer with the largest leading monomial; leading monomials of distinct
/// generators never coincide, so no further tie-break is needed.
fn preferred_reducer(m: &Monomial) -> Option<GeneratorId> {
    reducers_of(m).into_iter().max_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()))
}

/// One rewriting step: `p ← p − factor · multiplier · generator`, which
/// eliminates the term `reduced`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub generator: GeneratorId,
    pub multiplier: Monomial,
    pub factor: Rational,
    pub reduced: Term,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub result: Polynomial,
}

impl ReductionTrace {
    /// Re-applies every step to `input`; equals `result` for a genuine trace.
    pub fn replay(&self, input: &Polynomial) -> Polynomial {
        self.steps.iter().fold(input.clone(), |acc, s| {
            let g = generator(s.generator).expect("trace holds valid ids");
            &acc - &g.mul_term(&s.factor, &s.multiplier)
        })
    }

    /// `Σ factor·multiplier·generator`, i.e. `input − result`, as an explicit
    /// combination of generators.
    pub fn ideal_combination(&self) -> Polynomial {
        self.steps.iter().fold(Polynomial::zero(), |acc, s| {
            let g = generator(s.generator).expect("trace holds valid ids");
            &acc + &g.mul_term(&s.factor, &s.multiplier)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Reduce the largest reducible monomial by the reducer with the largest
    /// leading monomial.
    Leading,
    /// Pick a reducible term and a reducer uniformly at random.
    Random { seed: u64 },
}

#[derive(Clone, Copy, Debug)]
pub struct Reducer {
    pub strategy: Strategy,
    pub max_steps: u64,
}

impl Default for Reducer {
    fn default() -> Self {
        Self { strategy: Strategy::Leading, max_steps: DEFAULT_MAX_STEPS }
    }
}

impl Reducer {
    pub fn with_strategy(strategy: Strategy) -> Self {
        Self { strategy, ..Self::default() }
    }

    pub fn with_max_steps(mut self, max_steps: u64) -> Self {
        self.max_steps = max_steps;
        self
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<(Polynomial, ReductionTrace), IdealError> {
        let mut work: BTreeMap<Monomial, Rational> = p.clone().into_map();
        let mut steps = Vec::new();
        let mut rng = match self.strategy {
            Strategy::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
            Strategy::Leading => None,
        };
        loop {
            let pick = match rng.as_mut() {
                None => work
                    .keys()
                    .rev()
                    .find_map(|m| preferred_reducer(m).map(|g| (m.clone(), g))),
                Some(rng) => {
                    let reducible: Vec<&Monomial> =
                        work.keys().filter(|m| !is_standard_monomial(m)).collect();
                    if reducible.is_empty() {
                        None
                    } else {
                        let m = reducible[rng.gen_range(0..reducible.len())].clone();
                        let g = *reducers_of(&m).choose(rng).expect("non-standard has a reducer");
                        Some((m, g))
                    }
                }
            };
            let Some((m, id)) = pick else { break };
            if steps.len() as u64 >= self.max_steps {
                return Err(IdealError::StepLimit(self.max_steps));
            }
            let c = work.remove(&m).expect("picked from map");
            let g = generator(id)?;
            let lt = g.leading_term().expect("generators are nonzero");
            let multiplier = lt.monomial.quotient_of(&m).expect("reducer divides");
            let factor = &c / &lt.coeff;
            for t in &g.terms()[1..] {
                let mm = t.monomial.mul(&multiplier);
                let entry = work.entry(mm.clone()).or_insert_with(Rational::zero);
                *entry -= &factor * &t.coeff;
                if entry.is_zero() {
                    work.remove(&mm);
                }
            }
            steps.push(ReductionStep {
                generator: id,
                multiplier,
                factor,
                reduced: Term { coeff: c, monomial: m },
            });
        }
        let result = Polynomial::from_map(work);
        Ok((result.clone(), ReductionTrace { steps, result }))
    }
}

/// Normal form with the default (leading) strategy and step ceiling.
pub fn normal_form(p: &Polynomial) -> Result<(Polynomial, ReductionTrace), IdealError> {
    Reducer::default().normal_form(p)
}

/// Multivariate division of `p` by a single divisor: `p = q·d + r` where no
/// term of `r` is divisible by the leading monomial of `d`.
pub fn divide(p: &Polynomial, d: &Polynomial) -> Result<(Polynomial, Polynomial), IdealError> {
    let lt = leading_term(d)?;
    let mut work = p.clone().into_map();
    let mut quotient = Vec::new();
    let mut remainder = Vec::new();
    while let Some((m, c)) = work.pop_last() {
        match lt.monomial.quotient_of(&m) {
            Some(q) => {
                let f = &c / &lt.coeff;
                for t in &d.terms()[1..] {
                    let mm = t.monomial.mul(&q);
                    let e = work.entry(mm.clone()).or_insert_with(Rational::zero);
                    *e -= &f * &t.coeff;
                    if e.is_zero() {
                        work.remove(&mm);
                    }
                }
                quotient.push((f, q));
            }
            None => remainder.push((c, m)),
        }
    }
    Ok((Polynomial::from_terms(quotient), Polynomial::from_terms(remainder)))
}

/// `|c'| ≤ |c|` holds for every step of the trace.
pub fn steps_are_contracting(trace: &ReductionTrace) -> bool {
    let one = Rational::one();
    trace.steps.iter().all(|s| {
        let ratio = s.generator.step_ratio();
        ratio.is_positive() && ratio <= one
    })
}
