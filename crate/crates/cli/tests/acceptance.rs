//! Acceptance gate: one PASS/FAIL line per criterion. All comparisons are
//! exact. Time limits are wall-clock and pinned below.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hgf_cli::{parse_ids, run_suite, Lcg, SuiteConfig};
use hgf_core::catalog::{catalog, expand_prop31, Verdict};
use hgf_core::field::Rational;
use hgf_core::group::{classify_group, element_orders, verify_reparameterization, Family, GroupLabel};
use hgf_core::limit::{omega_chen_chu_routes, omega_chu_routes, prop52_limit_check, LimitError, Parity};
use hgf_core::series::{pochhammer_nonvanishing, SeriesSpec, TermIndex};

const LIMIT_CHU_VANDERMONDE: Duration = Duration::from_secs(1);
const LIMIT_REVERSAL: Duration = Duration::from_secs(2);
const LIMIT_EXPANSION: Duration = Duration::from_secs(5);
const LIMIT_CATALOG: Duration = Duration::from_secs(60);
const LIMIT_LIMITS: Duration = Duration::from_secs(30);

/// Zero tolerance: every comparison below is equality in Q or Q(t).
const TOLERANCE: i64 = 0;

const SEED: u64 = 20_241_019;
/// Draws allowed per required admissible sample.
const DRAW_BUDGET: usize = 100;

fn rational(g: &mut Lcg) -> Rational {
    let p = g.range_i64(-12, 12);
    let q = [1, 2, 3, 5, 7][g.below(5) as usize];
    Rational::new(p, q)
}

/// `(x)_k` as a plain product, independent of the series code.
fn rising(x: &Rational, k: u64) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| &acc * &(x + &Rational::from(i as i64)))
}

type Outcome = Result<String, String>;

/// Number, name, check, and wall-clock limit.
type Criterion = (u32, &'static str, fn() -> Outcome, Option<Duration>);

fn chu_vandermonde() -> Outcome {
    let mut g = Lcg::new(SEED ^ 1);
    let mut checked = 0;
    for _ in 0..500 * DRAW_BUDGET {
        if checked == 500 {
            break;
        }
        let n = g.range_i64(0, 10) as u64;
        let (a, b) = (rational(&mut g), rational(&mut g));
        if rising(&b, n).is_zero() {
            continue;
        }
        let s = SeriesSpec::new(vec![Rational::from(-(n as i64)), a.clone()], vec![b.clone()], Rational::one());
        let got = s.eval_terminating().map_err(|e| format!("n={n} a={a} b={b}: {e}"))?;
        let want = rising(&(&b - &a), n).checked_div(&rising(&b, n)).unwrap();
        if got != want {
            return Err(format!("n={n} a={a} b={b}: {got} != {want}"));
        }
        checked += 1;
    }
    if checked < 500 {
        return Err(format!("only {checked} admissible tuples"));
    }
    Ok("500 tuples".into())
}

fn reversible(s: &SeriesSpec<Rational>, n: u64) -> bool {
    s.numerators[1..].iter().all(|a| pochhammer_nonvanishing(a, n))
        && s.denominators.iter().all(|b| pochhammer_nonvanishing(b, n))
}

fn reversal() -> Outcome {
    let mut g = Lcg::new(SEED ^ 2);
    let mut checked = 0;
    for _ in 0..500 * DRAW_BUDGET {
        if checked == 500 {
            break;
        }
        let n = g.range_i64(0, 6) as u64;
        let p = g.below(3) as usize;
        let q = g.below(4) as usize;
        let mut num = vec![Rational::from(-(n as i64))];
        num.extend((0..p).map(|_| rational(&mut g)));
        let den: Vec<Rational> = (0..q).map(|_| rational(&mut g)).collect();
        let z = rational(&mut g);
        if z.is_zero() {
            continue;
        }
        let s = SeriesSpec::new(num, den, z);
        if s.termination_index() != Ok(TermIndex(n)) || !reversible(&s, n) {
            continue;
        }
        let original = s.eval_terminating().map_err(|e| format!("{s}: {e}"))?;
        let (pre, rev) = s.reverse().map_err(|e| format!("{s}: {e}"))?;
        let once = &pre * &rev.eval_terminating().map_err(|e| format!("{rev}: {e}"))?;
        if once != original {
            return Err(format!("{s}: reversed {once} != {original}"));
        }
        let (pre2, rev2) = rev.reverse().map_err(|e| format!("{rev}: {e}"))?;
        let twice = &(&pre * &pre2) * &rev2.eval_terminating().map_err(|e| format!("{rev2}: {e}"))?;
        if twice != original {
            return Err(format!("{s}: reversed twice {twice} != {original}"));
        }
        checked += 1;
    }
    if checked < 500 {
        return Err(format!("only {checked} reversible specs"));
    }
    Ok("500 specs".into())
}

fn expansion() -> Outcome {
    let mut g = Lcg::new(SEED ^ 3);
    let xs = [Rational::from(4i64), Rational::one(), Rational::from(-2i64), Rational::new(1, 3)];
    for (p, q) in [(0, 0), (1, 0), (1, 1), (2, 1)] {
        for x in &xs {
            let mut holds = 0;
            for _ in 0..50 * DRAW_BUDGET {
                if holds == 50 {
                    break;
                }
                let n = g.range_i64(0, 6) as u64;
                let (a, c) = (rational(&mut g), rational(&mut g));
                let num: Vec<Rational> = (0..p).map(|_| rational(&mut g)).collect();
                let den: Vec<Rational> = (0..q).map(|_| rational(&mut g)).collect();
                match expand_prop31(p, q, &a, &c, &num, &den, x, n).map_err(|e| e.to_string())? {
                    Verdict::Holds { .. } => holds += 1,
                    Verdict::Skipped { .. } => {}
                    Verdict::Fails { lhs, rhs } => {
                        return Err(format!("({p},{q}) x={x} n={n} a={a} c={c}: {lhs} != {rhs}"))
                    }
                }
            }
            if holds < 50 {
                return Err(format!("({p},{q}) x={x}: only {holds} admissible samples"));
            }
        }
    }
    Ok("16 cells x 50 samples".into())
}

const REQUIRED_IDS: &[&str] = &[
    "P3.2",
    "P3.3",
    "TI1",
    "TI2",
    "TI3",
    "TI4",
    "TI5",
    "TI6",
    "3F2-A",
    "TtI1",
    "TtI2",
    "TtI3",
    "TtI4",
    "TtI5",
    "TtI6",
    "3F2-B",
    "Q-inv",
    "W-swap",
    "3F2-C",
    "PS-A",
    "PS-B",
    "P5.1",
    "RI1",
    "RI2",
    "RI3",
    "RI4",
    "RI5",
    "RI6",
    "3F2-D",
    "RtI1",
    "RtI2",
    "RtI3",
    "RtI4",
    "RtI5",
    "RtI6",
    "3F2-E",
    "M-inv",
    "L-swap",
    "P5.2-even",
    "P5.2-odd",
    "PS-C",
];
const SYMMETRIC_PREFIXES: &[&str] = &["U-sym", "Ut-sym", "V-sym", "Vt-sym"];

fn full_catalog() -> Outcome {
    let ids: Vec<&str> = catalog().iter().map(|e| e.id()).collect();
    for id in REQUIRED_IDS {
        if !ids.contains(id) {
            return Err(format!("catalog lacks {id}"));
        }
    }
    for prefix in SYMMETRIC_PREFIXES {
        let k = ids.iter().filter(|id| id.starts_with(&format!("{prefix}("))).count();
        if k != 6 {
            return Err(format!("{prefix}: {k} permutations"));
        }
    }
    let config = SuiteConfig { seed: SEED, ..SuiteConfig::default() };
    let report = run_suite(&config).map_err(|e| e.to_string())?;
    if let Some(c) = &report.first_counterexample {
        return Err(format!("{} fails at n={} ({}): {} != {}", c.id, c.n, c.params.join(", "), c.lhs, c.rhs));
    }
    if let Some(c) = report.identities.iter().find(|c| c.holds + c.skipped != 200) {
        return Err(format!("{}: {} samples", c.id, c.holds + c.skipped));
    }
    let skipped = report.skipped_fraction();
    if skipped >= 0.2 {
        return Err(format!("skipped fraction {skipped:.3}"));
    }
    Ok(format!(
        "{} ids x 200, {} holds, 0 fails, {} skipped",
        report.identities.len(),
        report.totals.holds,
        report.totals.skipped
    ))
}

fn groups() -> Outcome {
    for fam in [Family::T, Family::Ttilde, Family::R, Family::Rtilde] {
        let g = fam.group().map_err(|e| format!("{fam}: {e}"))?;
        let mut orders = element_orders(&g);
        orders.sort();
        if g.len() != 6 || orders != [1, 2, 2, 2, 3, 3] {
            return Err(format!("{fam}: order {} with element orders {orders:?}", g.len()));
        }
        if classify_group(&g) != Ok(GroupLabel::S3) {
            return Err(format!("{fam}: not S3"));
        }
        // the closure of the generators is exactly the six listed maps
        let listed: Vec<_> = fam.invariances().into_iter().map(|(_, m)| m).collect();
        if g.elements() != listed.as_slice() {
            return Err(format!("{fam}: generated set differs from the listed invariances"));
        }
    }
    for fam in [Family::Q, Family::M] {
        let g = fam.group().map_err(|e| format!("{fam}: {e}"))?;
        if g.len() != 2 || classify_group(&g) != Ok(GroupLabel::S2) {
            return Err(format!("{fam}: not S2"));
        }
    }
    let mut checks = 0;
    for fam in Family::ALL {
        for (i, (label, _)) in fam.permutations().iter().enumerate() {
            let v = verify_reparameterization(fam, i).map_err(|e| format!("{fam}: {e}"))?;
            if !v.is_holds() {
                return Err(format!("{fam} {label}: {v:?}"));
            }
            checks += 1;
        }
    }
    Ok(format!("6 families, {checks} conjugations"))
}

fn partial_sums() -> Outcome {
    let config = SuiteConfig { ids: parse_ids("PS-A,PS-B,PS-C").unwrap(), seed: SEED ^ 6, ..SuiteConfig::default() };
    let report = run_suite(&config).map_err(|e| e.to_string())?;
    for c in &report.identities {
        if c.holds != 200 {
            return Err(format!("{}: {} holds, {} fails, {} skipped", c.id, c.holds, c.fails, c.skipped));
        }
    }
    Ok("3 ids x 200 holds".into())
}

fn limits() -> Outcome {
    let mut grid = 0;
    for n in 0..=6u64 {
        for gamma in -2..=2i64 {
            let r = omega_chu_routes(n, gamma, Rational::one()).map_err(|e| format!("n={n} γ={gamma}: {e}"))?;
            if !r.agree() {
                return Err(format!("n={n} γ={gamma}: {} vs {}", r.lhs, r.rhs));
            }
            grid += 1;
        }
    }
    let mut g = Lcg::new(SEED ^ 7);
    let mut sampled = 0;
    for _ in 0..50 * DRAW_BUDGET {
        if sampled == 50 {
            break;
        }
        let a = rational(&mut g);
        let mut admissible = true;
        for n in 0..=6u64 {
            for gamma in -2..=2i64 {
                match omega_chen_chu_routes(n, gamma, &a, Rational::one()) {
                    Ok(r) if r.agree() => {}
                    Ok(r) => return Err(format!("a={a} n={n} γ={gamma}: {} vs {}", r.lhs, r.rhs)),
                    Err(LimitError::GuardFailure(_)) => admissible = false,
                    Err(e) => return Err(format!("a={a} n={n} γ={gamma}: {e}")),
                }
            }
        }
        sampled += usize::from(admissible);
    }
    if sampled < 50 {
        return Err(format!("only {sampled} admissible a"));
    }
    for parity in [Parity::Even, Parity::Odd] {
        let mut agreed = 0;
        for _ in 0..50 * DRAW_BUDGET {
            if agreed == 50 {
                break;
            }
            let n = g.range_i64(0, 4) as u64;
            let (a, c) = (rational(&mut g), rational(&mut g));
            match prop52_limit_check(n, &a, &c, parity) {
                Ok(v) if v.consistent() => agreed += 1,
                Ok(v) => return Err(format!("{parity:?} n={n} a={a} c={c}: {v:?}")),
                Err(LimitError::GuardFailure(_)) | Err(LimitError::IdenticallyUndefined(_)) => {}
                Err(e) => return Err(format!("{parity:?} n={n} a={a} c={c}: {e}")),
            }
        }
        if agreed < 50 {
            return Err(format!("{parity:?}: only {agreed} admissible samples"));
        }
    }
    Ok(format!("{grid} grid cells, 50 a, 2 x 50 reflections"))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    for (k, jobs) in ["2", "4"].iter().enumerate() {
        let path = dir.path().join(format!("r{k}.json"));
        let out = Command::new(env!("CARGO_BIN_EXE_hgf"))
            .args(["verify", "--ids", "all", "--samples", "25", "--seed", "7", "--jobs", jobs, "--json"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        if out.status.code() != Some(0) {
            return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
        }
        reports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    if reports[0] != reports[1] {
        return Err("reports differ".into());
    }
    Ok(format!("{} identical bytes", reports[0].len()))
}

fn main() -> ExitCode {
    assert_eq!(TOLERANCE, 0);
    let criteria: [Criterion; 8] = [
        (1, "Chu-Vandermonde", chu_vandermonde, Some(LIMIT_CHU_VANDERMONDE)),
        (2, "summation reversal", reversal, Some(LIMIT_REVERSAL)),
        (3, "expansion P3.1", expansion, Some(LIMIT_EXPANSION)),
        (4, "full catalog fuzz", full_catalog, Some(LIMIT_CATALOG)),
        (5, "group certificates", groups, None),
        (6, "partial sums", partial_sums, None),
        (7, "limits", limits, Some(LIMIT_LIMITS)),
        (8, "report determinism", determinism, None),
    ];
    let mut failed = 0;
    for (k, name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match (outcome, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        match verdict {
            Ok(detail) => println!("criterion {k} ({name}): PASS in {elapsed:.2?} [{detail}]"),
            Err(why) => {
                failed += 1;
                println!("criterion {k} ({name}): FAIL in {elapsed:.2?}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
