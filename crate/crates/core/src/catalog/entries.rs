//! Catalog data. Each entry is a pair of sides over a named parameter list.

use crate::field::Rational;
use crate::group::Family;

use super::recipe::{Builder, Count, Factor, Side, Summation};
use super::{EntryKind, IdentityEntry};

const ABC: &[&str] = &["a", "b", "c"];
const AB: &[&str] = &["a", "b"];
const AC: &[&str] = &["a", "c"];
const C: &[&str] = &["c"];

/// `(p, q)` shapes of the general expansion that are catalogued.
pub(crate) const PROP31_SHAPES: [(usize, usize); 4] = [(0, 0), (1, 0), (1, 1), (2, 1)];

fn relation(id: impl Into<String>, params: &'static [&'static str], lhs: Side, rhs: Side) -> IdentityEntry {
    IdentityEntry {
        id: id.into(),
        params: params.to_vec(),
        kind: EntryKind::Relation { lhs: Box::new(lhs), rhs: Box::new(rhs) },
        perturbed: None,
    }
}

fn invariances(out: &mut Vec<IdentityEntry>, fam: Family) {
    let f = fam.base();
    let b = Builder { vars: f.params() };
    for (id, map) in fam.invariances() {
        let id = match id {
            "Q-id" | "M-id" => continue,
            other => other,
        };
        out.push(relation(id, f.params(), b.named(f, f.params()), Side::Named(f, map)));
    }
}

fn symmetries(out: &mut Vec<IdentityEntry>, fam: Family, prefix: &str) {
    let f = fam.symmetric();
    let b = Builder { vars: f.params() };
    for (label, sigma) in fam.permutations() {
        let id = match label {
            "xy" => continue,
            "yx" => format!("{prefix}-swap"),
            l => format!("{prefix}-sym({l})"),
        };
        out.push(relation(id, f.params(), b.named(f, f.params()), Side::Named(f, sigma)));
    }
}

fn prop31(p: usize, q: usize) -> IdentityEntry {
    IdentityEntry {
        id: format!("P3.1({p},{q})"),
        params: prop31_params(p, q),
        kind: EntryKind::Prop31 { p, q },
        perturbed: None,
    }
}

pub(crate) fn prop31_params(p: usize, q: usize) -> Vec<&'static str> {
    const A: [&str; 4] = ["a1", "a2", "a3", "a4"];
    const B: [&str; 4] = ["b1", "b2", "b3", "b4"];
    let mut v = vec!["a", "c"];
    v.extend(&A[..p]);
    v.extend(&B[..q]);
    v.push("x");
    v
}

pub(crate) fn build() -> Vec<IdentityEntry> {
    use Count::HalfFloor;
    const N: Count = Count::N;
    const TWO_N: Count = Count::TWO_N;
    const TWO_N_1: Count = Count::TWO_N_1;
    use Summation::{Partial, Terminating};
    let four = || Rational::from(4i64);
    let quarter = || Rational::new(1, 4);
    let abc = Builder { vars: ABC };
    let ab = Builder { vars: AB };
    let ac = Builder { vars: AC };
    let c1 = Builder { vars: C };
    let mut out = Vec::new();

    for (p, q) in PROP31_SHAPES {
        out.push(prop31(p, q));
    }

    let t_series = abc.series(&["-n", "a/2", "(a+1)/2", "b"], &["a", "1+a-c", "c"], four(), Terminating(N));
    out.push(relation(
        "P3.2",
        ABC,
        abc.term(vec![], vec![], Some(t_series.clone())),
        abc.term(
            vec![abc.poch("c-b", N)],
            vec![abc.poch("c", N)],
            Some(abc.series(
                &["-n", "1-c-n", "b", "1+b-c"],
                &["1+a-c", "(1+b-c-n)/2", "(2+b-c-n)/2"],
                quarter(),
                Terminating(N),
            )),
        ),
    ));
    out.push(relation(
        "P3.3",
        ABC,
        abc.term(vec![], vec![], Some(t_series)),
        abc.term(
            vec![Factor::SignN, abc.poch("b", N)],
            vec![abc.poch("1+a-c", N)],
            Some(abc.series(
                &["-n", "(c-b-n)/2", "(1+c-b-n)/2", "c-a-n"],
                &["c-b-n", "1-b-n", "c"],
                four(),
                Terminating(N),
            )),
        ),
    ));
    invariances(&mut out, Family::T);
    symmetries(&mut out, Family::T, "U");

    out.push(relation(
        "3F2-A",
        AC,
        ac.term(vec![], vec![], Some(ac.series(&["-n", "a/2", "(a+1)/2"], &["1+a-c", "c"], four(), Terminating(N)))),
        ac.term(
            vec![Factor::SignN, ac.poch("a", N)],
            vec![ac.poch("1+a-c", N)],
            Some(ac.series(&["-n", "(c-a-n)/2", "(1+c-a-n)/2"], &["1-a-n", "c"], four(), Terminating(N))),
        ),
    ));
    invariances(&mut out, Family::Ttilde);
    symmetries(&mut out, Family::Ttilde, "Ut");

    let q_series = ac.series(&["-n", "a/2", "(a+1)/2"], &["a", "c"], four(), Terminating(N));
    out.push(relation(
        "3F2-B",
        AC,
        ac.term(vec![], vec![], Some(q_series.clone())),
        ac.term(
            vec![Factor::SignN],
            vec![],
            Some(ac.series(&["-n", "(2c-a-n-1)/2", "(2c-a-n)/2"], &["2c-a-n-1", "c"], four(), Terminating(N))),
        ),
    ));
    invariances(&mut out, Family::Q);
    symmetries(&mut out, Family::Q, "W");
    out.push(relation(
        "3F2-C",
        AC,
        ac.term(vec![], vec![], Some(q_series)),
        ac.term(
            vec![Factor::SignN, ac.poch("1+a-c", N)],
            vec![ac.poch("c", N)],
            Some(ac.series(&["-n/2", "(1-n)/2", "1-c-n"], &["c-a-n", "1+a-c"], four(), Partial(HalfFloor))),
        ),
    ));
    let mut r2 = relation(
        "1e4R2",
        C,
        c1.term(vec![], vec![], Some(c1.series(&["-n", "1/2"], &["c"], four(), Terminating(N)))),
        c1.term(
            vec![Factor::SignN, c1.poch("2-c", N)],
            vec![c1.poch("c", N)],
            Some(c1.series(&["-n/2", "(1-n)/2", "1-c-n"], &["c-n-1", "2-c"], four(), Partial(HalfFloor))),
        ),
    );
    r2.perturbed = Some(0);
    out.push(r2);

    let ps_ab = ab.series(&["-n", "(1+a-b)/2", "(2+a-b)/2", "1"], &["1+a-b", "1-b-n", "1+a+n"], four(), Terminating(N));
    out.push(relation(
        "PS-A",
        AB,
        ab.term(vec![], vec![], Some(ab.series(&["a/2", "(a+1)/2", "b"], &["a", "1+a+n"], four(), Partial(N)))),
        ab.term(vec![ab.poch("b", N)], vec![Factor::Factorial(N)], Some(ps_ab.clone())),
    ));
    out.push(relation(
        "PS-B",
        AB,
        ab.term(
            vec![],
            vec![],
            Some(ab.series(&["-b/2-n", "(1-b)/2-n", "-a-2n"], &["-b-2n", "1-b-n"], four(), Partial(N))),
        ),
        ab.term(vec![Factor::SignN, ab.poch("1+a", TWO_N)], vec![Factor::Factorial(N), ab.poch("1+a", N)], Some(ps_ab)),
    ));

    out.push(relation(
        "P5.1",
        ABC,
        abc.term(
            vec![],
            vec![],
            Some(abc.series(&["-n", "a", "a-c-n", "c"], &["(a-n)/2", "(1+a-n)/2", "b"], quarter(), Terminating(N))),
        ),
        abc.term(
            vec![abc.poch("1+c-a", N), abc.poch("b-c", N)],
            vec![abc.poch("1-a", N), abc.poch("b", N)],
            Some(abc.series(
                &["-n", "1+c-b", "1-b-n", "c"],
                &["(1+c-b-n)/2", "(2+c-b-n)/2", "1+c-a"],
                quarter(),
                Terminating(N),
            )),
        ),
    ));
    invariances(&mut out, Family::R);
    symmetries(&mut out, Family::R, "V");

    out.push(relation(
        "3F2-D",
        AC,
        ac.term(
            vec![],
            vec![],
            Some(ac.series(&["-n", "a-c-n", "c"], &["(a-n)/2", "(1+a-n)/2"], quarter(), Terminating(N))),
        ),
        ac.term(
            vec![ac.poch("1+c-a", N), ac.poch("a-c", N)],
            vec![ac.poch("1-a", N), ac.poch("a", N)],
            Some(ac.series(&["-n", "1-a-n", "c"], &["(1+c-a-n)/2", "(2+c-a-n)/2"], quarter(), Terminating(N))),
        ),
    ));
    invariances(&mut out, Family::Rtilde);
    symmetries(&mut out, Family::Rtilde, "Vt");

    out.push(relation(
        "3F2-E",
        AC,
        ac.term(
            vec![],
            vec![],
            Some(ac.series(&["-n", "a", "c"], &["(a-n)/2", "(1+a-n)/2"], quarter(), Terminating(N))),
        ),
        ac.term(
            vec![ac.poch("1+2c-a", N)],
            vec![ac.poch("1-a", N)],
            Some(ac.series(&["-n", "1+2c-a+n", "c"], &["(1+2c-a)/2", "(2+2c-a)/2"], quarter(), Terminating(N))),
        ),
    ));
    invariances(&mut out, Family::M);
    symmetries(&mut out, Family::M, "L");

    out.push(relation(
        "P5.2-even",
        AC,
        ac.term(
            vec![],
            vec![],
            Some(ac.series(&["-2n", "a", "c"], &["a/2-n", "(a+1)/2-n"], quarter(), Terminating(TWO_N))),
        ),
        ac.term(
            vec![Factor::SignN, Factor::Factorial(TWO_N), ac.poch("c", N)],
            vec![Factor::Factorial(N), ac.poch("1-a", TWO_N)],
            Some(ac.series(&["-n", "1+c-a+n", "a-c-n"], &["1/2", "1-c-n"], quarter(), Terminating(N))),
        ),
    ));
    out.push(relation(
        "P5.2-odd",
        AC,
        ac.term(
            vec![],
            vec![],
            Some(ac.series(&["-2n-1", "a", "c"], &["(a-1)/2-n", "a/2-n"], quarter(), Terminating(TWO_N_1))),
        ),
        ac.term(
            vec![Factor::SignN, ac.lin("1+c-a+n"), Factor::Factorial(TWO_N_1), ac.poch("c", N)],
            vec![Factor::Factorial(N), ac.poch("1-a", TWO_N_1)],
            Some(ac.series(&["-n", "2+c-a+n", "a-c-n"], &["3/2", "1-c-n"], quarter(), Terminating(N))),
        ),
    ));
    out.push(relation(
        "PS-C",
        AC,
        ac.term(
            vec![],
            vec![],
            Some(ac.series(&["a", "a-c-n", "c"], &["(a-n)/2", "(1+a-n)/2"], quarter(), Partial(N))),
        ),
        ac.term(
            vec![ac.poch("1+c-a", N), ac.poch("1+c", N)],
            vec![Factor::Factorial(N), ac.poch("1-a", N)],
            Some(ac.series(&["-n", "1+c+n", "c", "1"], &["(1+c)/2", "(2+c)/2", "1+c-a"], quarter(), Terminating(N))),
        ),
    ));
    out
}
