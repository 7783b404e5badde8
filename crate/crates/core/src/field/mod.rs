//! Exact scalar fields: [`Rational`] and the rational function field
//! [`RatFun`] = Q(t).
//!
//! Everything downstream is generic over [`Scalar`], so a series can be
//! summed over Q for a plain check or over Q(t) when a parameter is
//! perturbed and a limit is wanted.

mod poly;
mod ratfun;
mod rational;

use std::fmt;

pub use poly::Polynomial;
pub use ratfun::{Pole, RatFun, DEFAULT_DEGREE_BOUND};
pub use rational::Rational;

use crate::expr::Expr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("invalid number `{0}`")]
    InvalidNumber(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("unexpected character `{0}` at offset {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token `{0}`")]
    UnexpectedToken(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("expression is not affine: {0}")]
    NotAffine(String),
    #[error("exponent must be a small nonnegative integer")]
    BadExponent,
    #[error("{0}")]
    Field(#[from] FieldError),
    #[error("malformed series: {0}")]
    Series(String),
}

/// An exact field the series machinery can compute in.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: Rational) -> Self;
    fn is_zero(&self) -> bool;
    /// The value when it is a constant of Q.
    fn as_rational(&self) -> Option<Rational>;
    fn try_add(&self, other: &Self) -> Result<Self, FieldError>;
    fn try_sub(&self, other: &Self) -> Result<Self, FieldError>;
    fn try_mul(&self, other: &Self) -> Result<Self, FieldError>;
    fn try_div(&self, other: &Self) -> Result<Self, FieldError>;
    fn neg(&self) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from(v))
    }

    /// `Some(m)` when the value is the constant `-m`, `m >= 0`.
    fn as_nonpositive_integer(&self) -> Option<u64> {
        self.as_rational()?.as_nonpositive_integer()
    }

    fn try_add_int(&self, v: i64) -> Result<Self, FieldError> {
        self.try_add(&Self::from_int(v))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self + other)
    }
    fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self - other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self * other)
    }
    fn try_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_div(other)
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Scalar for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn from_rational(r: Rational) -> Self {
        RatFun::constant(r)
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn as_rational(&self) -> Option<Rational> {
        self.as_constant()
    }
    fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_add(other)
    }
    fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_sub(other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_mul(other)
    }
    fn try_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_div(other)
    }
    fn neg(&self) -> Self {
        RatFun::neg(self)
    }
}

/// Parses the textual scalar syntax: integers, `p/q`, and rational
/// expressions in `t` built from `+ - * / ^` and parentheses, for example
/// `3/2 + t - 5*t^2`.
pub fn parse_scalar(s: &str) -> Result<RatFun, ParseError> {
    Expr::parse(s)?.to_ratfun()
}

/// Like [`parse_scalar`] but rejects anything that depends on `t`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    parse_scalar(s)?.as_constant().ok_or_else(|| ParseError::UnexpectedToken("t".into()))
}
