//! Seeded random polynomials for property checks and the acceptance suite.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ideal::{normal_form, IdealError};
use crate::poly::{Monomial, Polynomial, Variable};
use crate::rational::{rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusParams {
    pub max_degree: u32,
    pub max_w_index: u32,
    pub max_terms: usize,
    /// Numerators are drawn from `[-max_numerator, max_numerator]`.
    pub max_numerator: i64,
    pub max_denominator: i64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        Self { max_degree: 6, max_w_index: 10, max_terms: 8, max_numerator: 9, max_denominator: 4 }
    }
}

/// A monomial of total degree `≤ max_degree`, exponents spread over a random
/// choice among `x, y, z, w_0..w_{max_w_index}`.
pub fn random_monomial<R: Rng>(rng: &mut R, params: &CorpusParams) -> Monomial {
    let degree = rng.gen_range(0..=params.max_degree);
    let mut m = Monomial::one();
    for _ in 0..degree {
        let v = match rng.gen_range(0..4) {
            0 => Monomial::var(Variable::X),
            1 => Monomial::var(Variable::Y),
            2 => Monomial::var(Variable::Z),
            _ => Monomial::var(Variable::W(rng.gen_range(0..=params.max_w_index))),
        };
        m = m.mul(&v);
    }
    m
}

pub fn random_coefficient<R: Rng>(rng: &mut R, params: &CorpusParams) -> Rational {
    rat(
        rng.gen_range(-params.max_numerator..=params.max_numerator),
        rng.gen_range(1..=params.max_denominator),
    )
}

/// Up to `max_terms` terms on distinct monomials, so every coefficient keeps
/// its small denominator. Zero coefficients are dropped; the result may be 0.
pub fn random_polynomial<R: Rng>(rng: &mut R, params: &CorpusParams) -> Polynomial {
    let n = rng.gen_range(1..=params.max_terms);
    let mut terms = BTreeMap::new();
    for _ in 0..n {
        let m = random_monomial(rng, params);
        let c = random_coefficient(rng, params);
        terms.entry(m).or_insert(c);
    }
    Polynomial::from_terms(terms.into_iter().map(|(m, c)| (c, m)))
}

/// `count` polynomials drawn from a fixed seed.
pub fn corpus(seed: u64, count: usize, params: &CorpusParams) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_polynomial(&mut rng, params)).collect()
}

/// `count` nonzero polynomials already in normal form.
pub fn standard_corpus(seed: u64, count: usize, params: &CorpusParams) -> Result<Vec<Polynomial>, IdealError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (nf, _) = normal_form(&random_polynomial(&mut rng, params))?;
        if !nf.is_zero() {
            out.push(nf);
        }
    }
    Ok(out)
}
