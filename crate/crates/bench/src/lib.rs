//! Fixtures shared by the benchmarks.

use hgf_core::field::{RatFun, Rational};
use hgf_core::series::SeriesSpec;

/// `3F2(-n, 1/3, 2/5; 4/7, -5/2; 4)`.
pub fn terminating_3f2(n: u64) -> SeriesSpec<Rational> {
    SeriesSpec::new(
        vec![Rational::from(-(n as i64)), Rational::new(1, 3), Rational::new(2, 5)],
        vec![Rational::new(4, 7), Rational::new(-5, 2)],
        Rational::from(4i64),
    )
}

/// The same series with its second denominator at `-5/2 + t`.
pub fn perturbed_3f2(n: u64) -> SeriesSpec<RatFun> {
    let s = terminating_3f2(n);
    let mut den: Vec<RatFun> = s.denominators.into_iter().map(RatFun::constant).collect();
    den[1] = den[1].checked_add(&RatFun::t()).expect("degree 1");
    SeriesSpec::new(s.numerators.into_iter().map(RatFun::constant).collect(), den, RatFun::constant(s.argument))
}

/// A fixed admissible parameter tuple of the given arity.
pub fn params(arity: usize) -> Vec<Rational> {
    [(1, 3), (2, 7), (-3, 5), (5, 2), (4, 7), (-1, 3)].iter().take(arity).map(|&(p, q)| Rational::new(p, q)).collect()
}
