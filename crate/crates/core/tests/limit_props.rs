use hgf_core::catalog::{catalog, check_identity, Verdict};
use hgf_core::field::{RatFun, Rational};
use hgf_core::limit::{
    ceil_half, check_identity_perturbed, omega_chen_chu_routes, omega_chu, omega_chu_routes, prop52_limit_check,
    LimitError, LimitValue, Parity, PerturbedSample,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, prop::sample::select(vec![1i64, 2, 3, 5, 7])).prop_map(|(p, q)| Rational::new(p, q))
}

/// `2F1(-n, 1/2; c; 4)` at a concrete `c` by direct summation, `None` at a
/// pole.
fn chu_direct(n: u64, c: i64) -> Option<BigRational> {
    let mut total = BigRational::zero();
    let mut term = BigRational::one();
    for k in 0..=n as i64 {
        total += &term;
        if k == n as i64 {
            break;
        }
        let den = BigRational::from_integer(BigInt::from((c + k) * (k + 1)));
        if den.is_zero() {
            return None;
        }
        let num = BigRational::from_integer(BigInt::from(k - n as i64))
            * (BigRational::new(BigInt::from(1), BigInt::from(2)) + BigRational::from_integer(BigInt::from(k)))
            * BigRational::from_integer(BigInt::from(4));
        term = term * num / den;
    }
    Some(total)
}

#[test]
fn omega_chu_matches_direct_sum_when_regular() {
    for n in 0..=6u64 {
        for gamma in -2..=2i64 {
            let target = 1 + gamma + ceil_half(n) as i64;
            // with no nonpositive integer denominator in range the limit is the value
            if target > 0 {
                let want = chu_direct(n, target).unwrap();
                let got = omega_chu(n, gamma).unwrap();
                let got = got.finite().unwrap();
                assert_eq!(BigRational::new(got.numer().clone(), got.denom().clone()), want, "n={n} γ={gamma}");
            }
        }
    }
}

#[test]
fn omega_routes_agree_on_the_grid() {
    for n in 0..=6u64 {
        for gamma in -2..=2i64 {
            let r = omega_chu_routes(n, gamma, Rational::one()).unwrap();
            assert_eq!(r.lhs, r.rhs, "n={n} γ={gamma}");
        }
    }
}

#[test]
fn ceil_half_values() {
    assert_eq!((0..6).map(ceil_half).collect::<Vec<_>>(), vec![0, 1, 1, 2, 2, 3]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unperturbed_matches_plain_check(n in 0u64..=6, pool in prop::collection::vec(rational(), 6)) {
        for e in catalog() {
            let params = pool[..e.arity()].to_vec();
            let plain = check_identity(e.id(), n, &params).unwrap();
            let s = PerturbedSample::unperturbed(n, params);
            match (plain, check_identity_perturbed(e.id(), &s)) {
                (Verdict::Holds { lhs, rhs }, Ok(Verdict::Holds { lhs: l2, rhs: r2 })) => {
                    prop_assert_eq!(RatFun::constant(lhs), l2);
                    prop_assert_eq!(RatFun::constant(rhs), r2);
                }
                (Verdict::Skipped { .. }, Err(_)) => {}
                (p, q) => prop_assert!(false, "{}: {:?} vs {:?}", e.id(), p, q),
            }
        }
    }

    #[test]
    fn chen_chu_routes_agree(n in 0u64..=6, gamma in -2i64..=2, a in rational()) {
        match omega_chen_chu_routes(n, gamma, &a, Rational::one()) {
            Ok(r) => prop_assert_eq!(r.lhs, r.rhs),
            Err(LimitError::GuardFailure(_)) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn limits_ignore_direction(n in 0u64..=6, gamma in -2i64..=2, a in rational()) {
        let dirs = [Rational::one(), Rational::from(-1i64), Rational::from(2i64)];
        let chu: Vec<_> = dirs.iter().map(|d| omega_chu_routes(n, gamma, d.clone()).unwrap()).collect();
        prop_assert!(chu.windows(2).all(|w| w[0] == w[1]));
        let cc: Vec<_> = dirs.iter().map(|d| omega_chen_chu_routes(n, gamma, &a, d.clone()).ok()).collect();
        prop_assert!(cc.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn reflection_limit_matches_direct(n in 0u64..=4, a in rational(), c in rational(), odd in any::<bool>()) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        match prop52_limit_check(n, &a, &c, parity) {
            Ok(v) => prop_assert!(v.consistent(), "{:?}", v),
            Err(LimitError::GuardFailure(_)) | Err(LimitError::IdenticallyUndefined(_)) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn perturbed_identities_hold_over_qt(n in 0u64..=4, pool in prop::collection::vec(rational(), 3)) {
        for id in ["P3.3", "3F2-C", "1e4R2", "P5.1"] {
            let e = hgf_core::catalog::lookup(id).unwrap();
            let params = pool[..e.arity()].to_vec();
            let idx = e.arity() - 1;
            let s = PerturbedSample::new(n, params, idx).unwrap();
            match check_identity_perturbed(id, &s) {
                Ok(v) => prop_assert!(v.is_holds(), "{}: {:?}", id, v),
                Err(LimitError::IdenticallyUndefined(_)) => {}
                Err(e) => prop_assert!(false, "{}: {}", id, e),
            }
        }
    }
}

#[test]
fn sample_at_zero() {
    let s = PerturbedSample::new(2, vec![Rational::new(1, 2), Rational::from(3i64)], 1).unwrap();
    let lifted = s.params();
    assert_eq!(lifted[1].limit_at_zero(), Ok(Rational::from(3i64)));
    assert_eq!(s.at_zero(), &[Rational::new(1, 2), Rational::from(3i64)]);
    assert!(PerturbedSample::new(1, vec![], 0).is_err());
    assert!(PerturbedSample::with_direction(1, vec![Rational::one()], 0, Rational::zero()).is_err());
}

#[test]
fn limit_value_display() {
    assert_eq!(LimitValue::Finite(Rational::new(-3, 2)).to_string(), "-3/2");
    assert_eq!(LimitValue::Pole { order: 2 }.to_string(), "pole(2)");
}
