use hgf_core::affine::AffineMap;
use hgf_core::group::{
    certify, classify_group, compose, element_orders, generate_group, generate_group_with, verify_reparameterization,
    Convention, Family, GroupLabel,
};
use proptest::prelude::*;

#[test]
fn order_six_families() {
    for fam in [Family::T, Family::Ttilde, Family::R, Family::Rtilde] {
        let g = generate_group(&fam.generators()).unwrap();
        assert_eq!(g.len(), 6, "{fam}");
        assert!(!g.is_abelian());
        let mut orders = element_orders(&g);
        orders.sort();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3], "{fam}");
        assert_eq!(classify_group(&g), Ok(GroupLabel::S3));
        assert!(g.is_latin_square());
        // the generated set is exactly the listed invariances
        for (id, m) in fam.invariances() {
            assert!(g.index_of(&m).is_some(), "{id} missing from the generated {fam} group");
        }
    }
}

#[test]
fn listed_orders() {
    let expected = vec![1, 2, 2, 3, 3, 2];
    for fam in [Family::T, Family::Ttilde, Family::R, Family::Rtilde] {
        assert_eq!(element_orders(&fam.group().unwrap()), expected, "{fam}");
    }
}

#[test]
fn order_two_families() {
    for fam in [Family::Q, Family::M] {
        let g = fam.group().unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(classify_group(&g), Ok(GroupLabel::S2));
    }
}

#[test]
fn conjugation_is_exact_for_every_permutation() {
    for fam in Family::ALL {
        for (i, (label, _)) in fam.permutations().iter().enumerate() {
            let v = verify_reparameterization(fam, i).unwrap();
            assert!(v.is_holds(), "{fam} {label}: {v:?}");
        }
    }
}

#[test]
fn named_examples() {
    // (y z) on U against the second T invariance
    let perms = Family::T.permutations();
    assert_eq!(perms[1].0, "xzy");
    assert!(verify_reparameterization(Family::T, 1).unwrap().is_holds());
    // swap on L against the M inversion
    assert_eq!(Family::M.permutations()[1].0, "yx");
    assert!(verify_reparameterization(Family::M, 1).unwrap().is_holds());
    // a permutation paired with the wrong invariance is caught
    let rho = Family::T.reparameterization();
    let sigma = &perms[1].1;
    let wrong = &Family::T.invariances()[2].1;
    assert_ne!(compose(&rho, sigma).unwrap(), compose(wrong, &rho).unwrap());
}

#[test]
fn certificates() {
    let c = certify(Family::T).unwrap();
    assert_eq!(c.orders, vec![1, 2, 2, 3, 3, 2]);
    assert_eq!(c.label, GroupLabel::S3);
    assert!(c.latin_square);
    assert!(c.reparameterization.iter().all(|&b| b));
    assert_eq!(c.elements[2], "(c-b-n, c-a-n, c)");
    assert_eq!(certify(Family::Q).unwrap().label, GroupLabel::S2);
}

#[test]
fn conventions_give_the_same_set() {
    for fam in Family::ALL {
        let r = generate_group_with(&fam.generators(), Convention::RightFirst).unwrap();
        let l = generate_group_with(&fam.generators(), Convention::LeftFirst).unwrap();
        let mut a: Vec<String> = r.elements().iter().map(|m| format!("{m:?}")).collect();
        let mut b: Vec<String> = l.elements().iter().map(|m| format!("{m:?}")).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{fam}");
        let l = l.reordered(r.elements()).unwrap();
        for i in 0..r.len() {
            for j in 0..r.len() {
                assert_eq!(r.table()[i][j], l.table()[j][i]);
            }
        }
    }
}

fn element(fam: Family) -> impl Strategy<Value = AffineMap> {
    let maps: Vec<AffineMap> = fam.invariances().into_iter().map(|(_, m)| m).collect();
    prop::sample::select(maps)
}

proptest! {
    #[test]
    fn composition_is_associative(f in element(Family::R), g in element(Family::R), h in element(Family::R)) {
        let left = compose(&compose(&f, &g).unwrap(), &h).unwrap();
        let right = compose(&f, &compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_neutral(f in element(Family::Ttilde)) {
        let id = AffineMap::identity(2);
        prop_assert_eq!(compose(&id, &f).unwrap(), f.clone());
        prop_assert_eq!(compose(&f, &id).unwrap(), f);
    }
}
