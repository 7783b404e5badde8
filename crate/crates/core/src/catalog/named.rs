//! The normalized hypergeometric functions the catalog is phrased in.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::affine::AffineMap;
use crate::field::{Rational, Scalar};
use crate::group::Family;
use crate::series::SeriesError;

use super::recipe::{Builder, Count, GuardViolation, Side, Summation, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedFunction {
    T,
    U,
    Ttilde,
    Utilde,
    Q,
    W,
    R,
    V,
    Rtilde,
    Vtilde,
    M,
    L,
}

impl NamedFunction {
    pub const ALL: [NamedFunction; 12] = [
        NamedFunction::T,
        NamedFunction::U,
        NamedFunction::Ttilde,
        NamedFunction::Utilde,
        NamedFunction::Q,
        NamedFunction::W,
        NamedFunction::R,
        NamedFunction::V,
        NamedFunction::Rtilde,
        NamedFunction::Vtilde,
        NamedFunction::M,
        NamedFunction::L,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedFunction::T => "T",
            NamedFunction::U => "U",
            NamedFunction::Ttilde => "Ttilde",
            NamedFunction::Utilde => "Utilde",
            NamedFunction::Q => "Q",
            NamedFunction::W => "W",
            NamedFunction::R => "R",
            NamedFunction::V => "V",
            NamedFunction::Rtilde => "Rtilde",
            NamedFunction::Vtilde => "Vtilde",
            NamedFunction::M => "M",
            NamedFunction::L => "L",
        }
    }

    pub fn params(self) -> &'static [&'static str] {
        match self {
            NamedFunction::T | NamedFunction::R => &["a", "b", "c"],
            NamedFunction::Ttilde | NamedFunction::Rtilde | NamedFunction::Q | NamedFunction::M => &["a", "c"],
            NamedFunction::U | NamedFunction::Utilde | NamedFunction::V | NamedFunction::Vtilde => &["x", "y", "z"],
            NamedFunction::W | NamedFunction::L => &["x", "y"],
        }
    }

    pub fn arity(self) -> usize {
        self.params().len()
    }

    /// The family whose base function this is, or whose base function this
    /// one reparameterizes.
    pub fn family(self) -> Family {
        match self {
            NamedFunction::T | NamedFunction::U => Family::T,
            NamedFunction::Ttilde | NamedFunction::Utilde => Family::Ttilde,
            NamedFunction::R | NamedFunction::V => Family::R,
            NamedFunction::Rtilde | NamedFunction::Vtilde => Family::Rtilde,
            NamedFunction::Q | NamedFunction::W => Family::Q,
            NamedFunction::M | NamedFunction::L => Family::M,
        }
    }

    /// Definition rendered as a formula.
    pub fn definition(self) -> String {
        let vars = self.params();
        let lhs = format!("{}_n({})", self.name(), vars.join(", "));
        match def(self) {
            Def::Base(t) => format!("{lhs} = {}", t.render(vars)),
            Def::Reparam(g, map) => format!("{lhs} = {}_n{}", g.name(), map.display_with(vars)),
        }
    }

    /// Value at `params`; the arity must match.
    pub(crate) fn eval<S: Scalar>(self, n: u64, params: &[S]) -> Result<S, SeriesError> {
        assert_eq!(params.len(), self.arity(), "arity mismatch for {}", self.name());
        match def(self) {
            Def::Base(t) => t.eval(params, n, self.params()),
            Def::Reparam(g, map) => g.eval(n, &map.apply(params, n)?),
        }
    }
}

impl fmt::Display for NamedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedFunction {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedFunction::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown function `{s}`"))
    }
}

/// Admissibility of `f` at `params`: every Pochhammer symbol that appears
/// as a denominator of its series is nonvanishing over the series length.
pub(crate) fn guard_named<S: Scalar>(f: NamedFunction, n: u64, params: &[S]) -> Result<(), GuardViolation> {
    match def(f) {
        Def::Base(t) => t.guard(params, n, f.params()),
        Def::Reparam(g, map) => {
            let inner = map.apply(params, n).map_err(|e| GuardViolation(e.to_string()))?;
            guard_named(*g, n, &inner)
        }
    }
}

enum Def {
    Base(Term),
    Reparam(NamedFunction, AffineMap),
}

fn def(f: NamedFunction) -> &'static Def {
    static DEFS: OnceLock<Vec<Def>> = OnceLock::new();
    let defs = DEFS.get_or_init(|| NamedFunction::ALL.into_iter().map(build).collect());
    let i = NamedFunction::ALL.iter().position(|g| *g == f).expect("listed");
    &defs[i]
}

fn base(b: &Builder, pre: [&str; 2], num: &[&str], den: &[&str], arg: Rational) -> Def {
    let side = b.term(
        vec![b.poch(pre[0], Count::N), b.poch(pre[1], Count::N)],
        vec![],
        Some(b.series(num, den, arg, Summation::Terminating(Count::N))),
    );
    match side {
        Side::Term(t) => Def::Base(t),
        Side::Named(..) => unreachable!(),
    }
}

fn build(f: NamedFunction) -> Def {
    let four = Rational::from(4i64);
    let quarter = Rational::new(1, 4);
    let b = Builder { vars: f.params() };
    match f {
        NamedFunction::T => base(&b, ["1+a-c", "c"], &["-n", "a/2", "(a+1)/2", "b"], &["a", "1+a-c", "c"], four),
        NamedFunction::Ttilde => base(&b, ["1+a-c", "c"], &["-n", "a/2", "(a+1)/2"], &["1+a-c", "c"], four),
        NamedFunction::Q => base(&b, ["1+a-c", "c"], &["-n", "a/2", "(a+1)/2"], &["a", "c"], four),
        NamedFunction::R => base(&b, ["1-a", "b"], &["-n", "a", "a-c-n", "c"], &["(a-n)/2", "(1+a-n)/2", "b"], quarter),
        NamedFunction::Rtilde => base(&b, ["1-a", "a"], &["-n", "a-c-n", "c"], &["(a-n)/2", "(1+a-n)/2"], quarter),
        NamedFunction::M => base(&b, ["1-a", "1+c-a"], &["-n", "a", "c"], &["(a-n)/2", "(1+a-n)/2"], quarter),
        NamedFunction::U
        | NamedFunction::Utilde
        | NamedFunction::V
        | NamedFunction::Vtilde
        | NamedFunction::W
        | NamedFunction::L => {
            let fam = f.family();
            Def::Reparam(fam.base(), fam.reparameterization())
        }
    }
}
