//! Declarative building blocks for catalog sides: Pochhammer prefactors,
//! series templates over affine parameters, and named-function calls.

use crate::affine::{AffineExpr, AffineMap};
use crate::field::{Rational, Scalar};
use crate::series::{pochhammer, pochhammer_nonvanishing, SeriesError, SeriesSpec};

use super::named::{guard_named, NamedFunction};

/// A length depending on the sample size `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Count {
    /// `mul * n + add`
    Lin { mul: u64, add: u64 },
    /// `floor(n / 2)`
    HalfFloor,
}

impl Count {
    pub(crate) const N: Count = Count::Lin { mul: 1, add: 0 };
    pub(crate) const TWO_N: Count = Count::Lin { mul: 2, add: 0 };
    pub(crate) const TWO_N_1: Count = Count::Lin { mul: 2, add: 1 };

    pub(crate) fn at(self, n: u64) -> u64 {
        match self {
            Count::Lin { mul, add } => mul * n + add,
            Count::HalfFloor => n / 2,
        }
    }

    fn render(self) -> String {
        match self {
            Count::Lin { mul: 1, add: 0 } => "n".into(),
            Count::Lin { mul, add: 0 } => format!("{mul}n"),
            Count::Lin { mul: 0, add } => add.to_string(),
            Count::Lin { mul: 1, add } => format!("n+{add}"),
            Count::Lin { mul, add } => format!("{mul}n+{add}"),
            Count::HalfFloor => "floor(n/2)".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) enum Factor {
    /// `(expr)_count`
    Poch(AffineExpr, Count),
    Linear(AffineExpr),
    Factorial(Count),
    /// `(-1)^n`
    SignN,
}

/// Failed admissibility condition, described for the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardViolation(pub String);

impl Factor {
    fn eval<S: Scalar>(&self, params: &[S], n: u64) -> Result<S, SeriesError> {
        Ok(match self {
            Factor::Poch(e, c) => pochhammer(&e.eval(params, n)?, c.at(n))?,
            Factor::Linear(e) => e.eval(params, n)?,
            Factor::Factorial(c) => pochhammer(&S::one(), c.at(n))?,
            Factor::SignN => S::from_int(if n % 2 == 0 { 1 } else { -1 }),
        })
    }

    fn guard<S: Scalar>(&self, params: &[S], n: u64, vars: &[&str]) -> Result<(), GuardViolation> {
        let bad = || GuardViolation(format!("{} = 0", self.render(vars)));
        match self {
            Factor::Poch(e, c) => {
                let v = e.eval(params, n).map_err(|_| bad())?;
                if !pochhammer_nonvanishing(&v, c.at(n)) {
                    return Err(bad());
                }
            }
            Factor::Linear(e) => {
                if e.eval(params, n).map_err(|_| bad())?.is_zero() {
                    return Err(bad());
                }
            }
            Factor::Factorial(_) | Factor::SignN => {}
        }
        Ok(())
    }

    fn render(&self, vars: &[&str]) -> String {
        match self {
            Factor::Poch(e, c) => format!("({})_{}", strip_parens(&e.display_with(vars)), c.render()),
            Factor::Linear(e) => format!("({})", strip_parens(&e.display_with(vars))),
            Factor::Factorial(Count::Lin { mul: 1, add: 0 }) => "n!".into(),
            Factor::Factorial(c) => format!("({})!", c.render()),
            Factor::SignN => "(-1)^n".into(),
        }
    }
}

fn strip_parens(s: &str) -> &str {
    s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).filter(|r| !r.contains(')')).unwrap_or(s)
}

#[derive(Debug, Clone, Default)]
pub(crate) struct Prefactor {
    pub(crate) num: Vec<Factor>,
    pub(crate) den: Vec<Factor>,
}

impl Prefactor {
    fn eval<S: Scalar>(&self, params: &[S], n: u64, vars: &[&str]) -> Result<S, SeriesError> {
        let mut acc = S::one();
        for f in &self.num {
            acc = acc.try_mul(&f.eval(params, n)?)?;
        }
        for f in &self.den {
            let v = f.eval(params, n)?;
            if v.is_zero() {
                return Err(SeriesError::ZeroPochhammer(f.render(vars)));
            }
            acc = acc.try_div(&v)?;
        }
        Ok(acc)
    }

    fn guard<S: Scalar>(&self, params: &[S], n: u64, vars: &[&str]) -> Result<(), GuardViolation> {
        self.num.iter().chain(&self.den).try_for_each(|f| f.guard(params, n, vars))
    }

    fn render(&self, vars: &[&str]) -> String {
        let join = |fs: &[Factor]| fs.iter().map(|f| f.render(vars)).collect::<Vec<_>>().join(" ");
        match (self.num.is_empty(), self.den.is_empty()) {
            (true, true) => String::new(),
            (false, true) => join(&self.num),
            (true, false) => format!("1/[{}]", join(&self.den)),
            (false, false) => format!("{}/[{}]", join(&self.num), join(&self.den)),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Summation {
    /// Summed to its natural end; the count is the nominal length used for
    /// the denominator guards.
    Terminating(Count),
    /// Truncated after the given number of terms past the constant one.
    Partial(Count),
}

#[derive(Debug, Clone)]
pub(crate) struct SeriesTemplate {
    pub(crate) numerators: Vec<AffineExpr>,
    pub(crate) denominators: Vec<AffineExpr>,
    pub(crate) argument: Rational,
    pub(crate) summation: Summation,
}

impl SeriesTemplate {
    fn length(&self) -> Count {
        match self.summation {
            Summation::Terminating(c) | Summation::Partial(c) => c,
        }
    }

    fn instantiate<S: Scalar>(&self, params: &[S], n: u64) -> Result<SeriesSpec<S>, SeriesError> {
        let eval =
            |es: &[AffineExpr]| -> Result<Vec<S>, SeriesError> { es.iter().map(|e| Ok(e.eval(params, n)?)).collect() };
        Ok(SeriesSpec::new(eval(&self.numerators)?, eval(&self.denominators)?, S::from_rational(self.argument.clone())))
    }

    fn eval<S: Scalar>(&self, params: &[S], n: u64) -> Result<S, SeriesError> {
        let spec = self.instantiate(params, n)?;
        match self.summation {
            Summation::Terminating(_) => spec.eval_terminating(),
            Summation::Partial(c) => spec.partial_sum(c.at(n)),
        }
    }

    fn guard<S: Scalar>(&self, params: &[S], n: u64, vars: &[&str]) -> Result<(), GuardViolation> {
        let len = self.length();
        for d in &self.denominators {
            let v = d.eval(params, n).map_err(|e| GuardViolation(e.to_string()))?;
            if !pochhammer_nonvanishing(&v, len.at(n)) {
                return Err(GuardViolation(format!("({})_{} = 0", strip_parens(&d.display_with(vars)), len.render())));
            }
        }
        Ok(())
    }

    fn render(&self, vars: &[&str]) -> String {
        let list = |es: &[AffineExpr]| es.iter().map(|e| e.display_with(vars)).collect::<Vec<_>>().join(", ");
        let body = format!(
            "{}F{}({}; {}; {})",
            self.numerators.len(),
            self.denominators.len(),
            list(&self.numerators),
            list(&self.denominators),
            self.argument
        );
        match self.summation {
            Summation::Terminating(_) => body,
            Summation::Partial(c) => format!("[{body}]_{}", c.render()),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Term {
    pub(crate) prefactor: Prefactor,
    pub(crate) series: Option<SeriesTemplate>,
}

impl Term {
    pub(crate) fn eval<S: Scalar>(&self, params: &[S], n: u64, vars: &[&str]) -> Result<S, SeriesError> {
        let pre = self.prefactor.eval(params, n, vars)?;
        match &self.series {
            Some(s) => Ok(pre.try_mul(&s.eval(params, n)?)?),
            None => Ok(pre),
        }
    }

    pub(crate) fn guard<S: Scalar>(&self, params: &[S], n: u64, vars: &[&str]) -> Result<(), GuardViolation> {
        self.prefactor.guard(params, n, vars)?;
        match &self.series {
            Some(s) => s.guard(params, n, vars),
            None => Ok(()),
        }
    }

    pub(crate) fn render(&self, vars: &[&str]) -> String {
        let pre = self.prefactor.render(vars);
        match (&self.series, pre.is_empty()) {
            (Some(s), true) => s.render(vars),
            (Some(s), false) => format!("{pre} * {}", s.render(vars)),
            (None, true) => "1".into(),
            (None, false) => pre,
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) enum Side {
    Term(Term),
    Named(NamedFunction, AffineMap),
}

impl Side {
    pub(crate) fn eval<S: Scalar>(&self, params: &[S], n: u64, vars: &[&str]) -> Result<S, SeriesError> {
        match self {
            Side::Term(t) => t.eval(params, n, vars),
            Side::Named(f, map) => f.eval(n, &map.apply(params, n)?),
        }
    }

    pub(crate) fn guard<S: Scalar>(&self, params: &[S], n: u64, vars: &[&str]) -> Result<(), GuardViolation> {
        match self {
            Side::Term(t) => t.guard(params, n, vars),
            Side::Named(f, map) => {
                let inner = map.apply(params, n).map_err(|e| GuardViolation(e.to_string()))?;
                guard_named(*f, n, &inner)
                    .map_err(|g| GuardViolation(format!("{} at {}: {}", f.name(), map.display_with(vars), g.0)))
            }
        }
    }

    pub(crate) fn render(&self, vars: &[&str]) -> String {
        match self {
            Side::Term(t) => t.render(vars),
            Side::Named(f, map) => format!("{}_n{}", f.name(), map.display_with(vars)),
        }
    }
}

/// Shorthand constructors over a fixed variable list; entries are static
/// data, so a malformed expression is a programming error.
pub(crate) struct Builder {
    pub(crate) vars: &'static [&'static str],
}

impl Builder {
    pub(crate) fn e(&self, s: &str) -> AffineExpr {
        AffineExpr::parse(s, self.vars).unwrap_or_else(|err| panic!("bad form `{s}`: {err}"))
    }

    pub(crate) fn map(&self, outs: &[&str]) -> AffineMap {
        AffineMap::parse(self.vars, outs).unwrap_or_else(|err| panic!("bad map {outs:?}: {err}"))
    }

    pub(crate) fn poch(&self, s: &str, c: Count) -> Factor {
        Factor::Poch(self.e(s), c)
    }

    pub(crate) fn lin(&self, s: &str) -> Factor {
        Factor::Linear(self.e(s))
    }

    pub(crate) fn series(&self, num: &[&str], den: &[&str], arg: Rational, summation: Summation) -> SeriesTemplate {
        SeriesTemplate {
            numerators: num.iter().map(|s| self.e(s)).collect(),
            denominators: den.iter().map(|s| self.e(s)).collect(),
            argument: arg,
            summation,
        }
    }

    pub(crate) fn term(&self, num: Vec<Factor>, den: Vec<Factor>, series: Option<SeriesTemplate>) -> Side {
        Side::Term(Term { prefactor: Prefactor { num, den }, series })
    }

    pub(crate) fn named(&self, f: NamedFunction, outs: &[&str]) -> Side {
        Side::Named(f, self.map(outs))
    }
}
