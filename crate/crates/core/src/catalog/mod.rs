//! The identity catalog: every relation as a pair of exactly evaluable
//! sides, addressed by a stable string id.
//!
//! Admissibility guards are derived from the recipes themselves: each
//! Pochhammer symbol in a prefactor and each series denominator over its
//! nominal length must be nonvanishing. A sample that violates a guard is
//! skipped, never counted as a failure.

mod entries;
mod named;
mod recipe;

use std::sync::OnceLock;

use crate::field::{Rational, Scalar};
use crate::series::{pochhammer, pochhammer_nonvanishing, SeriesError, SeriesSpec};

pub use named::NamedFunction;
pub use recipe::GuardViolation;

use recipe::Side;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("`{id}` takes {expected} parameters, got {got}")]
    Arity { id: String, expected: usize, got: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Skipped => "skipped",
        }
    }
}

/// Outcome of one exact two-sided comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<T> {
    Holds { lhs: T, rhs: T },
    Fails { lhs: T, rhs: T },
    Skipped { reason: String },
}

impl<T: PartialEq> Verdict<T> {
    pub fn compare(lhs: T, rhs: T) -> Self {
        if lhs == rhs {
            Verdict::Holds { lhs, rhs }
        } else {
            Verdict::Fails { lhs, rhs }
        }
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Verdict::Skipped { reason: reason.into() }
    }

    pub fn status(&self) -> Status {
        match self {
            Verdict::Holds { .. } => Status::Holds,
            Verdict::Fails { .. } => Status::Fails,
            Verdict::Skipped { .. } => Status::Skipped,
        }
    }

    pub fn is_holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }

    pub fn values(&self) -> Option<(&T, &T)> {
        match self {
            Verdict::Holds { lhs, rhs } | Verdict::Fails { lhs, rhs } => Some((lhs, rhs)),
            Verdict::Skipped { .. } => None,
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) enum EntryKind {
    Relation { lhs: Box<Side>, rhs: Box<Side> },
    Prop31 { p: usize, q: usize },
}

#[derive(Debug, Clone)]
pub struct IdentityEntry {
    pub(crate) id: String,
    pub(crate) params: Vec<&'static str>,
    pub(crate) kind: EntryKind,
    pub(crate) perturbed: Option<usize>,
}

impl IdentityEntry {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn params(&self) -> &[&'static str] {
        &self.params
    }

    pub fn arity(&self) -> usize {
        self.params.len()
    }

    /// For limit-tagged entries, the parameter the suite perturbs by `t`.
    pub fn perturbed_param(&self) -> Option<usize> {
        self.perturbed
    }

    /// The relation as a formula over its parameter names.
    pub fn formula(&self) -> String {
        match &self.kind {
            EntryKind::Relation { lhs, rhs } => {
                format!("{} = {}", lhs.render(&self.params), rhs.render(&self.params))
            }
            EntryKind::Prop31 { p, q } => {
                let a: Vec<&str> = self.params[2..2 + p].to_vec();
                let b: Vec<&str> = self.params[2 + p..2 + p + q].to_vec();
                let ext = |v: &[&str], suffix: &str| v.iter().map(|s| format!(", {s}{suffix}")).collect::<String>();
                format!(
                    "{}F{}(-n, a/2, (1+a)/2{}; a, 1+a-c, c{}; x) = sum_m (-n)_m{} (x/4)^m / [m! (1+a-c)_m{}] * {}F{}(m-n{}; c{}; x/4)",
                    p + 3,
                    q + 3,
                    ext(&a, ""),
                    ext(&b, ""),
                    a.iter().map(|s| format!(" ({s})_m")).collect::<String>(),
                    b.iter().map(|s| format!(" ({s})_m")).collect::<String>(),
                    p + 1,
                    q + 1,
                    ext(&a, "+m"),
                    ext(&b, "+m"),
                )
            }
        }
    }

    /// Nonvanishing conditions, rendered.
    pub fn guard_description(&self) -> String {
        match &self.kind {
            EntryKind::Relation { .. } => {
                "prefactor Pochhammer symbols and series denominators nonvanishing over their lengths".into()
            }
            EntryKind::Prop31 { q, .. } => {
                let mut g = vec!["(a)_n".to_string(), "(1+a-c)_n".into(), "(c)_n".into()];
                g.extend(
                    self.params[self.params.len() - 1 - q..self.params.len() - 1].iter().map(|b| format!("({b})_n")),
                );
                format!("{} nonzero", g.join(", "))
            }
        }
    }

    fn check_arity(&self, got: usize) -> Result<(), CatalogError> {
        if got != self.arity() {
            return Err(CatalogError::Arity { id: self.id.clone(), expected: self.arity(), got });
        }
        Ok(())
    }

    /// `Ok(())` when the sample is admissible.
    pub fn guards<S: Scalar>(&self, n: u64, params: &[S]) -> Result<Result<(), GuardViolation>, CatalogError> {
        self.check_arity(params.len())?;
        Ok(match &self.kind {
            EntryKind::Relation { lhs, rhs } => {
                lhs.guard(params, n, &self.params).and_then(|()| rhs.guard(params, n, &self.params))
            }
            EntryKind::Prop31 { p, q } => {
                let (a, c, _, b, _) = split_prop31(params, *p, *q);
                prop31_guards(n, a, c, b)
            }
        })
    }

    /// Both sides, without consulting guards.
    pub fn eval_sides<S: Scalar>(&self, n: u64, params: &[S]) -> Result<(S, S), CatalogError> {
        self.check_arity(params.len())?;
        match &self.kind {
            EntryKind::Relation { lhs, rhs } => {
                Ok((lhs.eval(params, n, &self.params)?, rhs.eval(params, n, &self.params)?))
            }
            EntryKind::Prop31 { p, q } => {
                let (a, c, extra_num, extra_den, x) = split_prop31(params, *p, *q);
                Ok(prop31_sides(n, a, c, extra_num, extra_den, x)?)
            }
        }
    }

    /// Guards, then both sides. An evaluation error at an admissible sample
    /// is reported as a skip carrying the error.
    pub fn check<S: Scalar>(&self, n: u64, params: &[S]) -> Result<Verdict<S>, CatalogError> {
        if let Err(GuardViolation(g)) = self.guards(n, params)? {
            return Ok(Verdict::skipped(format!("guard: {g}")));
        }
        match self.eval_sides(n, params) {
            Ok((lhs, rhs)) => Ok(Verdict::compare(lhs, rhs)),
            Err(CatalogError::Series(e)) => Ok(Verdict::skipped(format!("pole: {e}"))),
            Err(e) => Err(e),
        }
    }
}

pub fn catalog() -> &'static [IdentityEntry] {
    static CATALOG: OnceLock<Vec<IdentityEntry>> = OnceLock::new();
    CATALOG.get_or_init(entries::build)
}

pub fn lookup(id: &str) -> Result<&'static IdentityEntry, CatalogError> {
    catalog().iter().find(|e| e.id == id).ok_or_else(|| CatalogError::UnknownId(id.to_string()))
}

pub fn check_identity<S: Scalar>(id: &str, n: u64, params: &[S]) -> Result<Verdict<S>, CatalogError> {
    lookup(id)?.check(n, params)
}

/// Value of a named function; the arity must match.
pub fn eval_named<S: Scalar>(f: NamedFunction, n: u64, params: &[S]) -> Result<S, CatalogError> {
    if params.len() != f.arity() {
        return Err(CatalogError::Arity { id: f.name().into(), expected: f.arity(), got: params.len() });
    }
    Ok(f.eval(n, params)?)
}

/// Admissibility of a named function at a sample.
pub fn named_guards<S: Scalar>(f: NamedFunction, n: u64, params: &[S]) -> Result<(), GuardViolation> {
    named::guard_named(f, n, params)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogListing {
    pub id: String,
    pub formula: String,
    pub arity: usize,
    pub guards: String,
}

pub fn list_catalog() -> Vec<CatalogListing> {
    catalog()
        .iter()
        .map(|e| CatalogListing {
            id: e.id.clone(),
            formula: e.formula(),
            arity: e.arity(),
            guards: e.guard_description(),
        })
        .collect()
}

type Prop31Split<'a, S> = (&'a S, &'a S, &'a [S], &'a [S], &'a S);

fn split_prop31<S>(params: &[S], p: usize, q: usize) -> Prop31Split<'_, S> {
    (&params[0], &params[1], &params[2..2 + p], &params[2 + p..2 + p + q], &params[2 + p + q])
}

fn prop31_guards<S: Scalar>(n: u64, a: &S, c: &S, extra_den: &[S]) -> Result<(), GuardViolation> {
    let one_a_c = S::one().try_add(a).and_then(|v| v.try_sub(c)).map_err(|e| GuardViolation(e.to_string()))?;
    for (name, v) in [("a", a), ("1+a-c", &one_a_c), ("c", c)] {
        if !pochhammer_nonvanishing(v, n) {
            return Err(GuardViolation(format!("({name})_{n} = 0")));
        }
    }
    for (j, b) in extra_den.iter().enumerate() {
        if !pochhammer_nonvanishing(b, n) {
            return Err(GuardViolation(format!("(b{})_{n} = 0", j + 1)));
        }
    }
    Ok(())
}

fn prop31_sides<S: Scalar>(
    n: u64,
    a: &S,
    c: &S,
    extra_num: &[S],
    extra_den: &[S],
    x: &S,
) -> Result<(S, S), SeriesError> {
    let minus_n = S::from_int(-(n as i64));
    let half = S::from_rational(Rational::new(1, 2));
    let a_half = a.try_mul(&half)?;
    let a1_half = a.try_add_int(1)?.try_mul(&half)?;
    let one_a_c = S::one().try_add(a)?.try_sub(c)?;

    let mut num = vec![minus_n.clone(), a_half, a1_half];
    num.extend_from_slice(extra_num);
    let mut den = vec![a.clone(), one_a_c.clone(), c.clone()];
    den.extend_from_slice(extra_den);
    let lhs = SeriesSpec::new(num, den, x.clone()).eval_terminating()?;

    let x4 = x.try_mul(&S::from_rational(Rational::new(1, 4)))?;
    let mut rhs = S::zero();
    for m in 0..=n {
        let mut coeff = pochhammer(&minus_n, m)?;
        if coeff.is_zero() {
            continue;
        }
        for ai in extra_num {
            coeff = coeff.try_mul(&pochhammer(ai, m)?)?;
        }
        let mut d = pochhammer(&S::one(), m)?.try_mul(&pochhammer(&one_a_c, m)?)?;
        for bj in extra_den {
            d = d.try_mul(&pochhammer(bj, m)?)?;
        }
        if d.is_zero() {
            return Err(SeriesError::ZeroPochhammer(format!("outer denominator at m = {m}")));
        }
        for _ in 0..m {
            coeff = coeff.try_mul(&x4)?;
        }
        coeff = coeff.try_div(&d)?;
        if coeff.is_zero() {
            continue;
        }
        let shift = |v: &S| v.try_add_int(m as i64);
        let mut inner_num = vec![minus_n.try_add_int(m as i64)?];
        for ai in extra_num {
            inner_num.push(shift(ai)?);
        }
        let mut inner_den = vec![c.clone()];
        for bj in extra_den {
            inner_den.push(shift(bj)?);
        }
        let inner = SeriesSpec::new(inner_num, inner_den, x4.clone()).eval_terminating()?;
        rhs = rhs.try_add(&coeff.try_mul(&inner)?)?;
    }
    Ok((lhs, rhs))
}

/// The general expansion with `p = extra_num.len()` extra numerator and
/// `q = extra_den.len()` extra denominator parameters.
#[allow(clippy::too_many_arguments)]
pub fn expand_prop31<S: Scalar>(
    p: usize,
    q: usize,
    a: &S,
    c: &S,
    extra_num: &[S],
    extra_den: &[S],
    x: &S,
    n: u64,
) -> Result<Verdict<S>, CatalogError> {
    if extra_num.len() != p || extra_den.len() != q {
        return Err(CatalogError::Arity {
            id: format!("P3.1({p},{q})"),
            expected: p + q,
            got: extra_num.len() + extra_den.len(),
        });
    }
    if let Err(GuardViolation(g)) = prop31_guards(n, a, c, extra_den) {
        return Ok(Verdict::skipped(format!("guard: {g}")));
    }
    match prop31_sides(n, a, c, extra_num, extra_den, x) {
        Ok((lhs, rhs)) => Ok(Verdict::compare(lhs, rhs)),
        Err(e) => Ok(Verdict::skipped(format!("pole: {e}"))),
    }
}
