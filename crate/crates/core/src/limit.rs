//! Identities over Q(t) and limits at degenerate parameter values.
//!
//! One parameter is replaced by `target + λ t`, both sides are evaluated as
//! exact rational functions, and limits are read off after cancellation.

use crate::catalog::{eval_named, lookup, named_guards, CatalogError, GuardViolation, NamedFunction, Verdict};
use crate::field::{Pole, RatFun, Rational, Scalar};
use crate::group::Family;
use crate::series::{pochhammer, pochhammer_nonvanishing, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LimitError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("guard vanishes identically in t: {0}")]
    IdenticallyUndefined(String),
    #[error("guard failure: {0}")]
    GuardFailure(String),
    #[error("routes disagree: {} vs {}", .0.lhs, .0.rhs)]
    RouteMismatch(Box<Routes>),
    #[error("perturbation direction must be nonzero")]
    ZeroDirection,
    #[error("parameter index {index} out of range for {len} parameters")]
    BadIndex { index: usize, len: usize },
}

impl From<SeriesError> for LimitError {
    fn from(e: SeriesError) -> Self {
        LimitError::Catalog(CatalogError::Series(e))
    }
}

/// A sample in which at most one parameter is `target + λ t`.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbedSample {
    n: u64,
    base: Vec<Rational>,
    perturbed: Option<(usize, Rational)>,
}

impl PerturbedSample {
    /// `params[index]` becomes `params[index] + t`.
    pub fn new(n: u64, params: Vec<Rational>, index: usize) -> Result<Self, LimitError> {
        PerturbedSample::with_direction(n, params, index, Rational::one())
    }

    /// `params[index]` becomes `params[index] + direction * t`.
    pub fn with_direction(
        n: u64,
        params: Vec<Rational>,
        index: usize,
        direction: Rational,
    ) -> Result<Self, LimitError> {
        if index >= params.len() {
            return Err(LimitError::BadIndex { index, len: params.len() });
        }
        if direction.is_zero() {
            return Err(LimitError::ZeroDirection);
        }
        Ok(PerturbedSample { n, base: params, perturbed: Some((index, direction)) })
    }

    /// No parameter depends on `t`.
    pub fn unperturbed(n: u64, params: Vec<Rational>) -> Self {
        PerturbedSample { n, base: params, perturbed: None }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// The degenerate sample at `t = 0`.
    pub fn at_zero(&self) -> &[Rational] {
        &self.base
    }

    pub fn params(&self) -> Vec<RatFun> {
        self.base
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let c = RatFun::constant(v.clone());
                match &self.perturbed {
                    Some((j, dir)) if *j == i => {
                        let shift = RatFun::t().checked_mul(&RatFun::constant(dir.clone())).expect("degree 1");
                        c.checked_add(&shift).expect("degree 1")
                    }
                    _ => c,
                }
            })
            .collect()
    }
}

/// Finite limit or a pole at `t = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitValue {
    Finite(Rational),
    Pole { order: usize },
}

impl LimitValue {
    pub fn of(f: &RatFun) -> LimitValue {
        match f.limit_at_zero() {
            Ok(v) => LimitValue::Finite(v),
            Err(Pole { order }) => LimitValue::Pole { order },
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            LimitValue::Finite(v) => Some(v),
            LimitValue::Pole { .. } => None,
        }
    }
}

impl std::fmt::Display for LimitValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LimitValue::Finite(v) => write!(f, "{v}"),
            LimitValue::Pole { order } => write!(f, "pole({order})"),
        }
    }
}

/// Checks an identity as an equality in Q(t).
pub fn check_identity_perturbed(id: &str, s: &PerturbedSample) -> Result<Verdict<RatFun>, LimitError> {
    let entry = lookup(id)?;
    let params = s.params();
    if let Err(GuardViolation(g)) = entry.guards(s.n, &params)? {
        return Err(LimitError::IdenticallyUndefined(g));
    }
    let (lhs, rhs) = entry.eval_sides(s.n, &params)?;
    Ok(Verdict::compare(lhs, rhs))
}

/// `ceil(n / 2)`.
pub fn ceil_half(n: u64) -> u64 {
    n.div_ceil(2)
}

/// Limits of both sides of one entry at a perturbed sample.
fn side_limits(id: &str, s: &PerturbedSample) -> Result<(LimitValue, LimitValue), LimitError> {
    let entry = lookup(id)?;
    let params = s.params();
    if let Err(GuardViolation(g)) = entry.guards(s.n, &params)? {
        return Err(LimitError::GuardFailure(g));
    }
    let (lhs, rhs) = entry.eval_sides(s.n, &params)?;
    Ok((LimitValue::of(&lhs), LimitValue::of(&rhs)))
}

/// Limit as `c -> target` computed through the series itself and through
/// its transformed right side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Routes {
    pub lhs: LimitValue,
    pub rhs: LimitValue,
}

impl Routes {
    pub fn agree(&self) -> bool {
        self.lhs == self.rhs
    }

    fn value(self) -> Result<LimitValue, LimitError> {
        if self.agree() {
            Ok(self.lhs)
        } else {
            Err(LimitError::RouteMismatch(Box::new(self)))
        }
    }
}

fn gamma_target(base: i64, n: u64, gamma: i64) -> Rational {
    Rational::from(base + gamma + ceil_half(n) as i64)
}

/// Both routes for `lim 2F1(-n, 1/2; c; 4)` as `c -> 1 + γ + ceil(n/2)`,
/// with `c = target + direction * t`.
pub fn omega_chu_routes(n: u64, gamma: i64, direction: Rational) -> Result<Routes, LimitError> {
    let s = PerturbedSample::with_direction(n, vec![gamma_target(1, n, gamma)], 0, direction)?;
    let (lhs, rhs) = side_limits("1e4R2", &s)?;
    Ok(Routes { lhs, rhs })
}

pub fn omega_chu(n: u64, gamma: i64) -> Result<LimitValue, LimitError> {
    omega_chu_routes(n, gamma, Rational::one())?.value()
}

/// Both routes for `lim 3F2(-n, a/2, (a+1)/2; a, c; 4)` as
/// `c -> γ + a + ceil(n/2)`.
pub fn omega_chen_chu_routes(n: u64, gamma: i64, a: &Rational, direction: Rational) -> Result<Routes, LimitError> {
    let target = &gamma_target(0, n, gamma) + a;
    let s = PerturbedSample::with_direction(n, vec![a.clone(), target], 1, direction)?;
    let (lhs, rhs) = side_limits("3F2-C", &s)?;
    Ok(Routes { lhs, rhs })
}

pub fn omega_chen_chu(n: u64, gamma: i64, a: &Rational) -> Result<LimitValue, LimitError> {
    omega_chen_chu_routes(n, gamma, a, Rational::one())?.value()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// `2n` or `2n+1`.
    pub fn length(self, n: u64) -> u64 {
        match self {
            Parity::Even => 2 * n,
            Parity::Odd => 2 * n + 1,
        }
    }

    pub fn entry_id(self) -> &'static str {
        match self {
            Parity::Even => "P5.2-even",
            Parity::Odd => "P5.2-odd",
        }
    }
}

/// The two stated `3F2` relations evaluated directly, next to the limit
/// `b -> a - c - N` of both sides of the fifth `R` invariance, each
/// normalized by `(1-a)_N (b)_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerateReflection {
    pub direct: Verdict<Rational>,
    pub limit_lhs: LimitValue,
    pub limit_rhs: LimitValue,
}

impl DegenerateReflection {
    /// Direct check holds and matches both limits.
    pub fn consistent(&self) -> bool {
        match &self.direct {
            Verdict::Holds { lhs, rhs } => self.limit_lhs.finite() == Some(lhs) && self.limit_rhs.finite() == Some(rhs),
            _ => false,
        }
    }
}

pub fn prop52_limit_check(
    n: u64,
    a: &Rational,
    c: &Rational,
    parity: Parity,
) -> Result<DegenerateReflection, LimitError> {
    let entry = lookup(parity.entry_id())?;
    let direct_params = [a.clone(), c.clone()];
    if let Err(GuardViolation(g)) = entry.guards(n, &direct_params)? {
        return Err(LimitError::GuardFailure(g));
    }
    let direct = entry.check(n, &direct_params)?;

    let big_n = parity.length(n);
    let b_target = &(a - c) - &Rational::from(big_n);
    // at a vanishing normalizer the limit degenerates to a different ratio
    if !pochhammer_nonvanishing(&b_target, big_n) {
        return Err(LimitError::GuardFailure(format!("(a-c-{big_n})_{big_n} = 0 at the limit point")));
    }
    let s = PerturbedSample::new(big_n, vec![a.clone(), b_target, c.clone()], 1)?;
    let params = s.params();
    let reflect = &Family::R.invariances()[4].1;
    let mapped = reflect.apply(&params, big_n).map_err(SeriesError::from)?;
    let norm = pochhammer(&RatFun::one().try_sub(&params[0]).map_err(SeriesError::from)?, big_n)
        .and_then(|p| p.try_mul(&pochhammer(&params[1], big_n)?))
        .map_err(SeriesError::from)?;
    if norm.is_zero() {
        return Err(LimitError::IdenticallyUndefined("(1-a)_N (b)_N".into()));
    }
    for (side, v) in [("R", &params), ("R after the reflection", &mapped)] {
        if let Err(GuardViolation(g)) = named_guards(NamedFunction::R, big_n, v) {
            return Err(LimitError::GuardFailure(format!("{side}: {g}")));
        }
    }
    let lhs: RatFun = eval_named(NamedFunction::R, big_n, &params)?;
    let rhs: RatFun = eval_named(NamedFunction::R, big_n, &mapped)?;
    let lhs = lhs.try_div(&norm).map_err(SeriesError::from)?;
    let rhs = rhs.try_div(&norm).map_err(SeriesError::from)?;
    Ok(DegenerateReflection { direct, limit_lhs: LimitValue::of(&lhs), limit_rhs: LimitValue::of(&rhs) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn omega_chu_examples() {
        for g in -2..=2 {
            assert_eq!(omega_chu(0, g), Ok(LimitValue::Finite(r(1, 1))));
        }
        assert_eq!(omega_chu(1, 0), Ok(LimitValue::Finite(r(0, 1))));
        assert_eq!(omega_chu(2, -1), Ok(LimitValue::Finite(r(3, 1))));
    }

    #[test]
    fn chen_chu_reduces_to_chu_at_a_one() {
        assert_eq!(omega_chen_chu(1, 1, &r(1, 1)), omega_chu(1, 1));
        assert_eq!(omega_chen_chu(0, -2, &r(3, 7)), Ok(LimitValue::Finite(r(1, 1))));
        assert!(omega_chen_chu(2, -1, &r(1, 2)).is_ok());
    }

    #[test]
    fn chen_chu_guard() {
        // (a)_n vanishes at a = -1, n = 3
        assert!(matches!(omega_chen_chu(3, 0, &r(-1, 1)), Err(LimitError::GuardFailure(_))));
    }

    #[test]
    fn perturbed_identity() {
        let s = PerturbedSample::new(1, vec![r(0, 1)], 0).unwrap();
        assert!(check_identity_perturbed("1e4R2", &s).unwrap().is_holds());
        let s = PerturbedSample::new(1, vec![r(1, 2), r(1, 3), r(1, 1)], 2).unwrap();
        assert!(check_identity_perturbed("P3.3", &s).unwrap().is_holds());
    }

    #[test]
    fn identically_undefined() {
        // 3F2-A with a = -1 fixed: (a)_n in the prefactor is constant zero at n = 2
        let s = PerturbedSample::new(2, vec![r(-1, 1), r(1, 3)], 1).unwrap();
        assert!(matches!(check_identity_perturbed("3F2-A", &s), Err(LimitError::IdenticallyUndefined(_))));
    }

    #[test]
    fn reflection_limits() {
        let v = prop52_limit_check(2, &r(1, 3), &r(2, 7), Parity::Even).unwrap();
        assert!(v.consistent(), "{v:?}");
        let v = prop52_limit_check(1, &r(1, 3), &r(2, 7), Parity::Odd).unwrap();
        assert!(v.consistent(), "{v:?}");
    }
}
