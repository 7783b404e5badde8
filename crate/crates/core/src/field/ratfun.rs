//! The field Q(t) of univariate rational functions.

use std::fmt;

use super::{FieldError, Polynomial, Rational};

/// Largest numerator or denominator degree any arithmetic result may reach.
pub const DEFAULT_DEGREE_BOUND: usize = 512;

/// A quotient `num / den` kept in canonical form: coprime parts and a monic
/// denominator, so structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Polynomial,
    den: Polynomial,
}

/// Limit at `t = 0` diverges with the given pole order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("pole of order {order} at t = 0")]
pub struct Pole {
    pub order: usize,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        RatFun::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFun { num: Polynomial::constant(c), den: Polynomial::one() }
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        RatFun { num: Polynomial::t(), den: Polynomial::one() }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RatFun { num: p, den: Polynomial::one() }
    }

    /// Builds and normalizes `num / den`.
    pub fn from_parts(num: Polynomial, den: Polynomial) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(RatFun { num, den }.normalize())
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Constant value when the function does not depend on `t`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_constant() {
            let d = self.den.as_constant()?;
            self.num.as_constant()?.checked_div(&d).ok()
        } else {
            None
        }
    }

    /// Canonical representative: common factors cancelled, monic denominator.
    pub fn normalize(self) -> RatFun {
        let RatFun { num, den } = self;
        if num.is_zero() {
            return RatFun::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            return RatFun { num, den };
        }
        let inv = lc.recip().expect("nonzero leading coefficient");
        RatFun { num: num.scale(&inv), den: den.scale(&inv) }
    }

    /// `num(0) / den(0)` after cancellation, i.e. the limit as `t -> 0`.
    pub fn limit_at_zero(&self) -> Result<Rational, Pole> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            // canonical form guarantees num(0) != 0 here
            let order = self.den.valuation().expect("nonzero denominator");
            return Err(Pole { order });
        }
        Ok(self.num.coeff(0).checked_div(&d0).expect("nonzero"))
    }

    /// `f(λ t)`
    pub fn rescale_variable(&self, lambda: &Rational) -> Result<RatFun, FieldError> {
        RatFun::from_parts(self.num.rescale_variable(lambda), self.den.rescale_variable(lambda))
    }

    fn bounded(self) -> Result<RatFun, FieldError> {
        let degree = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        if degree > DEFAULT_DEGREE_BOUND {
            return Err(FieldError::DegreeBound { degree, bound: DEFAULT_DEGREE_BOUND });
        }
        Ok(self)
    }

    pub fn checked_add(&self, other: &RatFun) -> Result<RatFun, FieldError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let f = if self.den == other.den {
            RatFun { num: &self.num + &other.num, den: self.den.clone() }
        } else {
            RatFun { num: &(&self.num * &other.den) + &(&other.num * &self.den), den: &self.den * &other.den }
        };
        f.normalize().bounded()
    }

    pub fn checked_sub(&self, other: &RatFun) -> Result<RatFun, FieldError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &RatFun) -> Result<RatFun, FieldError> {
        if self.is_zero() || other.is_zero() {
            return Ok(RatFun::zero());
        }
        // cross-cancel first so the products stay small
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let div = |p: &Polynomial, g: &Polynomial| {
            if g.is_constant() {
                p.clone()
            } else {
                p.div_rem(g).0
            }
        };
        let num = &div(&self.num, &g1) * &div(&other.num, &g2);
        let den = &div(&self.den, &g2) * &div(&other.den, &g1);
        let lc = den.leading().expect("nonzero").clone();
        let f = if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.recip().expect("nonzero");
            RatFun { num: num.scale(&inv), den: den.scale(&inv) }
        };
        f.bounded()
    }

    pub fn recip(&self) -> Result<RatFun, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(RatFun { num: self.den.clone(), den: self.num.clone() }.normalize())
    }

    pub fn checked_div(&self, other: &RatFun) -> Result<RatFun, FieldError> {
        self.checked_mul(&other.recip()?)
    }

    pub fn neg(&self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl From<Rational> for RatFun {
    fn from(c: Rational) -> Self {
        RatFun::constant(c)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            // monic constant denominator is 1
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}
