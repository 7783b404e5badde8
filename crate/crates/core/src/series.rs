//! Pochhammer symbols and exact summation of terminating generalized
//! hypergeometric series.
//!
//! A [`SeriesSpec`] holds the numerator parameters, denominator parameters
//! and argument of `pFq(a_1..a_p; b_1..b_q; z)`, whose `k`-th term is
//! `Π(a_i)_k / (k! Π(b_j)_k) · z^k`. Only finite sums are ever formed.
//!
//! Pole policy: `(b)_k` first vanishes at `k = 1 - b` when `b` is a
//! nonpositive integer, and the numerator `(a)_k` first vanishes at
//! `k = 1 - a`. A denominator zero reached within the summation range is an
//! error unless a numerator zero with a strictly smaller index has already
//! annihilated every term from that point on; those terms are taken as 0.

use std::fmt;
use std::str::FromStr;

use crate::expr::Expr;
use crate::field::{FieldError, ParseError, RatFun, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series does not terminate: no numerator parameter is a nonpositive integer")]
    NonTerminating,
    #[error("denominator Pochhammer vanishes at term {0}")]
    PoleAtTerm(u64),
    #[error("vanishing Pochhammer symbol: {0}")]
    ZeroPochhammer(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("reversal needs a nonzero argument")]
    ZeroArgument,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Rising factorial `x (x+1) ... (x+k-1)`; `1` when `k = 0`.
pub fn pochhammer<S: Scalar>(x: &S, k: u64) -> Result<S, FieldError> {
    let mut acc = S::one();
    let mut factor = x.clone();
    for _ in 0..k {
        if factor.is_zero() {
            return Ok(S::zero());
        }
        acc = acc.try_mul(&factor)?;
        factor = factor.try_add_int(1)?;
    }
    Ok(acc)
}

/// `(a)_{n-k}` computed as `(-1)^k (a)_n / (1-a-n)_k`.
pub fn pochhammer_reverse_index<S: Scalar>(a: &S, n: u64, k: u64) -> Result<S, SeriesError> {
    assert!(k <= n, "k must lie in 0..=n");
    let reflected = S::one().try_sub(a)?.try_add_int(-(n as i64))?;
    let den = pochhammer(&reflected, k)?;
    if den.is_zero() {
        return Err(SeriesError::ZeroDenominator);
    }
    let mut v = pochhammer(a, n)?.try_div(&den)?;
    if k % 2 == 1 {
        v = v.neg();
    }
    Ok(v)
}

/// First `k` with `(x)_k = 0`, if any.
fn vanishing_index<S: Scalar>(x: &S) -> Option<u64> {
    x.as_nonpositive_integer().map(|m| m + 1)
}

/// `(x)_len != 0`.
pub fn pochhammer_nonvanishing<S: Scalar>(x: &S, len: u64) -> bool {
    vanishing_index(x).is_none_or(|k| k > len)
}

/// Index `N` of the last term of a terminating series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TermIndex(pub u64);

#[derive(Clone, PartialEq)]
pub struct SeriesSpec<S> {
    pub numerators: Vec<S>,
    pub denominators: Vec<S>,
    pub argument: S,
}

impl<S: Scalar> SeriesSpec<S> {
    pub fn new(numerators: Vec<S>, denominators: Vec<S>, argument: S) -> Self {
        SeriesSpec { numerators, denominators, argument }
    }

    /// Smallest `m` such that `-m` is a numerator parameter.
    pub fn termination_index(&self) -> Result<TermIndex, SeriesError> {
        self.numerators
            .iter()
            .filter_map(Scalar::as_nonpositive_integer)
            .min()
            .map(TermIndex)
            .ok_or(SeriesError::NonTerminating)
    }

    pub fn eval_terminating(&self) -> Result<S, SeriesError> {
        let TermIndex(n) = self.termination_index()?;
        self.sum_through(n)
    }

    /// Sum of the terms `0..=n`.
    pub fn partial_sum(&self, n: u64) -> Result<S, SeriesError> {
        self.sum_through(n)
    }

    fn sum_through(&self, upto: u64) -> Result<S, SeriesError> {
        let num_zero = self.numerators.iter().filter_map(vanishing_index).min();
        let den_zero = self.denominators.iter().filter_map(vanishing_index).min();
        if let Some(d) = den_zero {
            let annihilated = num_zero.is_some_and(|z| z < d);
            if d <= upto && !annihilated {
                return Err(SeriesError::PoleAtTerm(d));
            }
        }
        let last = match num_zero {
            Some(z) => upto.min(z - 1),
            None => upto,
        };

        let mut term = S::one();
        let mut sum = S::one();
        for k in 0..last {
            let mut num = self.argument.clone();
            for a in &self.numerators {
                num = num.try_mul(&a.try_add_int(k as i64)?)?;
            }
            let mut den = S::from_int(k as i64 + 1);
            for b in &self.denominators {
                den = den.try_mul(&b.try_add_int(k as i64)?)?;
            }
            term = term.try_mul(&num)?.try_div(&den)?;
            sum = sum.try_add(&term)?;
        }
        Ok(sum)
    }

    /// Summation reversal. Returns `(prefactor, reversed)` with
    /// `prefactor * reversed.eval_terminating() == self.eval_terminating()`.
    ///
    /// For `{-n} ∪ {a_i}` over `{b_j}` at `x` the reversed series has
    /// numerators `{-n} ∪ {1-b_j-n}`, denominators `{1-a_i-n}`, argument
    /// `(-1)^(p+q)/x`, and the prefactor is `Π(a_i)_n (-x)^n / Π(b_j)_n`.
    pub fn reverse(&self) -> Result<(S, SeriesSpec<S>), SeriesError> {
        let TermIndex(n) = self.termination_index()?;
        if self.argument.is_zero() {
            return Err(SeriesError::ZeroArgument);
        }
        let minus_n = S::from_int(-(n as i64));
        let pos = self.numerators.iter().position(|a| *a == minus_n).expect("termination index comes from a numerator");
        let rest: Vec<S> =
            self.numerators.iter().enumerate().filter(|&(i, _)| i != pos).map(|(_, a)| a.clone()).collect();

        let mut prefactor = S::one();
        for a in &rest {
            let p = pochhammer(a, n)?;
            if p.is_zero() {
                return Err(SeriesError::ZeroPochhammer(format!("({a})_{n}")));
            }
            prefactor = prefactor.try_mul(&p)?;
        }
        for b in &self.denominators {
            let p = pochhammer(b, n)?;
            if p.is_zero() {
                return Err(SeriesError::ZeroPochhammer(format!("({b})_{n}")));
            }
            prefactor = prefactor.try_div(&p)?;
        }
        let neg_x = self.argument.neg();
        for _ in 0..n {
            prefactor = prefactor.try_mul(&neg_x)?;
        }

        let reflect = |x: &S| -> Result<S, FieldError> { S::one().try_sub(x)?.try_add(&minus_n) };
        let mut numerators = vec![minus_n.clone()];
        for b in &self.denominators {
            numerators.push(reflect(b)?);
        }
        let denominators = rest.iter().map(reflect).collect::<Result<Vec<_>, _>>()?;
        let mut argument = S::one().try_div(&self.argument)?;
        if (rest.len() + self.denominators.len()) % 2 == 1 {
            argument = argument.neg();
        }
        Ok((prefactor, SeriesSpec { numerators, denominators, argument }))
    }
}

/// Right side of the Chu–Vandermonde sum: `(b-a)_n / (b)_n`, the value of
/// `2F1(-n, a; b; 1)`.
pub fn chu_vandermonde_rhs<S: Scalar>(n: u64, a: &S, b: &S) -> Result<S, SeriesError> {
    let den = pochhammer(b, n)?;
    if den.is_zero() {
        return Err(SeriesError::ZeroPochhammer(format!("({b})_{n}")));
    }
    Ok(pochhammer(&b.try_sub(a)?, n)?.try_div(&den)?)
}

impl<S: Scalar> fmt::Display for SeriesSpec<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[S]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        write!(
            f,
            "{}F{}({}; {}; {})",
            self.numerators.len(),
            self.denominators.len(),
            join(&self.numerators),
            join(&self.denominators),
            self.argument
        )
    }
}

impl<S: Scalar> fmt::Debug for SeriesSpec<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `pFq(n1,...,np; d1,...,dq; z)` with scalars in the exact-field
/// syntax. The declared `p` and `q` must match the parameter counts.
impl FromStr for SeriesSpec<RatFun> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| ParseError::Series(msg.to_string());
        let s = s.trim();
        let open = s.find('(').ok_or_else(|| bad("missing `(`"))?;
        let body = s[open + 1..].strip_suffix(')').ok_or_else(|| bad("missing closing `)`"))?;
        let (p, q) = s[..open].trim().split_once(['F', 'f']).ok_or_else(|| bad("expected `pFq(`"))?;
        let p: usize = p.trim().parse().map_err(|_| bad("bad p"))?;
        let q: usize = q.trim().parse().map_err(|_| bad("bad q"))?;
        let parts: Vec<&str> = body.split(';').collect();
        if parts.len() != 3 {
            return Err(bad("expected `numerators; denominators; argument`"));
        }
        let list = |part: &str| -> Result<Vec<RatFun>, ParseError> {
            if part.trim().is_empty() {
                return Ok(Vec::new());
            }
            part.split(',').map(|x| Expr::parse(x)?.to_ratfun()).collect()
        };
        let numerators = list(parts[0])?;
        let denominators = list(parts[1])?;
        if numerators.len() != p || denominators.len() != q {
            return Err(bad("parameter counts do not match pFq"));
        }
        let argument = Expr::parse(parts[2])?.to_ratfun()?;
        Ok(SeriesSpec { numerators, denominators, argument })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn z(v: i64) -> Rational {
        Rational::from(v)
    }

    fn spec(num: &[Rational], den: &[Rational], arg: Rational) -> SeriesSpec<Rational> {
        SeriesSpec::new(num.to_vec(), den.to_vec(), arg)
    }

    /// Independent oracle: the raw product definition, term by term.
    fn naive_term(s: &SeriesSpec<Rational>, k: u64) -> Rational {
        let mut num = s.argument.pow(k as i32).unwrap();
        for a in &s.numerators {
            num = num * pochhammer(a, k).unwrap();
        }
        let mut den = pochhammer(&z(1), k).unwrap();
        for b in &s.denominators {
            den = den * pochhammer(b, k).unwrap();
        }
        num.checked_div(&den).unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&r(1, 2), 3).unwrap(), r(1, 2) * r(3, 2) * r(5, 2));
        assert_eq!(pochhammer(&r(1, 2), 3).unwrap(), r(15, 8));
        assert_eq!(pochhammer(&r(-7, 3), 0).unwrap(), z(1));
        assert_eq!(pochhammer(&z(-3), 5).unwrap(), z(0));
    }

    #[test]
    fn reverse_index_examples() {
        assert_eq!(pochhammer_reverse_index(&z(2), 3, 0).unwrap(), z(24));
        assert_eq!(pochhammer_reverse_index(&r(1, 2), 2, 1).unwrap(), r(1, 2));
        assert_eq!(pochhammer_reverse_index(&z(1), 2, 2).unwrap(), z(1));
        // 1 - a - n = 0 for a = -1, n = 2
        assert_eq!(pochhammer_reverse_index(&z(-1), 2, 1), Err(SeriesError::ZeroDenominator));
    }

    #[test]
    fn termination_index_examples() {
        let t = |num: &[Rational]| spec(num, &[], z(1)).termination_index();
        assert_eq!(t(&[z(-3), r(1, 2)]), Ok(TermIndex(3)));
        assert_eq!(t(&[z(-5), z(-2)]), Ok(TermIndex(2)));
        assert_eq!(t(&[r(1, 2), z(3)]), Err(SeriesError::NonTerminating));
    }

    #[test]
    fn eval_examples() {
        let s = spec(&[z(-1), r(1, 2), z(1), z(1)], &[z(1), z(1), z(1)], z(4));
        assert_eq!(s.eval_terminating().unwrap(), z(-1));
        let s = spec(&[z(0), r(3, 7)], &[z(-4)], z(9));
        assert_eq!(s.eval_terminating().unwrap(), z(1));
        let s = spec(&[z(-2), r(1, 2)], &[z(3)], z(1));
        let direct = naive_term(&s, 0) + naive_term(&s, 1) + naive_term(&s, 2);
        assert_eq!(direct, r(35, 48));
        assert_eq!(s.eval_terminating().unwrap(), r(35, 48));
    }

    #[test]
    fn pole_detection() {
        let s = spec(&[z(-3)], &[z(-1)], z(1));
        assert_eq!(s.eval_terminating(), Err(SeriesError::PoleAtTerm(2)));
        // pole lies beyond the last term
        let s = spec(&[z(-1)], &[z(-2)], z(1));
        assert_eq!(s.eval_terminating().unwrap(), z(1) + r(-1, -2));
    }

    #[test]
    fn annihilated_pole_is_zero() {
        // numerator -1 kills every term from k = 2 on; (-2)_k vanishes from k = 3
        let s = spec(&[z(-1)], &[z(-2)], z(1));
        assert_eq!(s.partial_sum(6).unwrap(), s.eval_terminating().unwrap());
        // a tie is not an annihilation
        let s = spec(&[z(-2), r(1, 2)], &[z(-2)], z(1));
        assert_eq!(s.partial_sum(3), Err(SeriesError::PoleAtTerm(3)));
    }

    #[test]
    fn partial_sum_examples() {
        assert_eq!(spec(&[z(1), z(1)], &[z(1)], z(4)).partial_sum(1).unwrap(), z(5));
        assert_eq!(spec(&[r(3, 5)], &[r(2, 7)], z(11)).partial_sum(0).unwrap(), z(1));
        let s = spec(&[r(1, 2), z(1), z(1)], &[z(1), z(1)], z(4));
        assert_eq!(s.partial_sum(2).unwrap(), z(9));
    }

    #[test]
    fn reverse_examples() {
        let s = spec(&[z(-1), z(1)], &[z(2)], z(4));
        let (pre, rev) = s.reverse().unwrap();
        assert_eq!(pre, z(-2));
        assert_eq!(rev, spec(&[z(-1), z(-2)], &[z(-1)], r(1, 4)));
        assert_eq!(s.eval_terminating().unwrap(), z(-1));
        assert_eq!(rev.eval_terminating().unwrap(), r(1, 2));

        let s = spec(&[z(0), r(2, 3)], &[r(5, 7)], z(3));
        let (pre, rev) = s.reverse().unwrap();
        assert_eq!(pre, z(1));
        assert_eq!(rev.numerators[0], z(0));
        assert_eq!(rev.eval_terminating().unwrap(), z(1));
    }

    #[test]
    fn reverse_errors() {
        let s = spec(&[z(-2), z(1)], &[z(2)], z(0));
        assert_eq!(s.reverse().unwrap_err(), SeriesError::ZeroArgument);
        let s = spec(&[z(-2), z(1)], &[z(-1)], z(1));
        assert!(matches!(s.reverse(), Err(SeriesError::ZeroPochhammer(_))));
        let s = spec(&[r(1, 2)], &[z(2)], z(1));
        assert_eq!(s.reverse().unwrap_err(), SeriesError::NonTerminating);
    }

    #[test]
    fn chu_vandermonde_examples() {
        assert_eq!(chu_vandermonde_rhs(2, &r(1, 2), &z(3)).unwrap(), r(35, 48));
        assert_eq!(chu_vandermonde_rhs(0, &r(9, 2), &r(-1, 3)).unwrap(), z(1));
        assert_eq!(chu_vandermonde_rhs(1, &z(1), &z(2)).unwrap(), r(1, 2));
        assert!(chu_vandermonde_rhs(3, &z(1), &z(-1)).is_err());
    }

    #[test]
    fn ratio_accumulation_matches_naive_terms() {
        let s = spec(&[z(-6), r(1, 3), r(-5, 2)], &[r(7, 5), r(2, 3)], r(-4, 3));
        let naive = (0..=6).map(|k| naive_term(&s, k)).fold(z(0), |a, b| a + b);
        assert_eq!(s.eval_terminating().unwrap(), naive);
    }

    #[test]
    fn parse_series() {
        let s: SeriesSpec<RatFun> = "4F3(-1,1/2,1,1; 1,1,1; 4)".parse().unwrap();
        assert_eq!(s.eval_terminating().unwrap(), RatFun::constant(z(-1)));
        let s: SeriesSpec<RatFun> = "2F1(-2, 1/2; t; 4)".parse().unwrap();
        assert_eq!(s.to_string(), "2F1(-2, 1/2; t; 4)");
        assert!("2F1(-2; t; 4)".parse::<SeriesSpec<RatFun>>().is_err());
        assert!("0F0(;;1)".parse::<SeriesSpec<RatFun>>().is_ok());
        assert!("2F1(-2, 1/2, 4)".parse::<SeriesSpec<RatFun>>().is_err());
    }
}
