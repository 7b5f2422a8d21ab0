//! Exact computations in the quotient of `ℚ[x, y, z, w0, w1, …]` by the
//! binomial ideal generated by `x*w0 - z^2` and `y*w_k - (k+1)*x*w_{k+1}`,
//! together with the power-series and disc-algebra checks built on it.

pub mod artin;
pub mod certificate;
pub mod corpus;
pub mod ideal;
pub mod parse;
pub mod poly;
pub mod quotient;
pub mod rational;
pub mod series;

pub use ideal::{GeneratorId, IdealError, Reducer, ReductionTrace, Strategy};
pub use parse::{parse_polynomial, ParseError};
pub use poly::{compare, Monomial, Polynomial, Term, Variable};
pub use quotient::RElement;
pub use rational::Rational;
