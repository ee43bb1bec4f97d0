//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use isocert::assumption::{a_closed_form, a_values_direct};
use isocert::cli::{run, RunDocument};
use isocert::curvature::{ingest, CorollaryType};
use isocert::polycore::{parse_expression, Mono, Poly, Rat, VarCtx};
use isocert::symfun::{esym, psum};
use isocert::verify::clifford::{clifford_check, clifford_rational};
use isocert::verify::rigidity::quadratic_form;
use isocert::verify::{
    identity_ids, sample_configuration, sample_route_agreement, verify_case_positivity, verify_identities, verify_identity,
    verify_rigidity_case, CatalogMode, ClaimStatus, Configuration, Method, SampleSpec,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn identity_ok(id: &str) -> Result<(), String> {
    let r = verify_identity(id).map_err(|e| e.to_string())?;
    ensure(r.is_verified(), || format!("{id}: {:?} {}", r.status, r.detail.clone().unwrap_or_default()))
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let reports = verify_identities(&[], CatalogMode::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    for r in &reports {
        ensure(r.is_verified(), || format!("{} is {:?}", r.identity_id, r.status))?;
    }
    let ids = identity_ids();
    for must in ["VEC1", "POL6_FAC", "DEGEN_221", "RIGIDITY_CASE1", "RIGIDITY_CASE2"] {
        ensure(ids.iter().any(|i| i == must), || format!("{must} missing from the catalog"))?;
    }
    for r in 1..=5 {
        ensure(ids.contains(&format!("LBRIDGE({r})")), || format!("LBRIDGE({r}) missing"))?;
    }
    let max_terms = reports.iter().map(|r| r.max_intermediate_terms).max().unwrap_or(0);
    ensure(max_terms <= 100_000, || format!("intermediate polynomial of {max_terms} terms"))?;
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:.1?}"))?;
    Ok(format!("{} identities verified_zero in {elapsed:.1?}, max {max_terms} terms", reports.len()))
}

fn counterexample() -> Outcome {
    let t = ingest("-6,-5,1,3,7", true).map_err(|e| e.to_string())?;
    let direct = a_values_direct(&t).map_err(|e| e.to_string())?.values;
    let closed = a_closed_form(&t).map_err(|e| e.to_string())?.values;
    for (name, v) in [("direct", &direct), ("closed", &closed)] {
        let signs: Vec<i32> = v.iter().map(Rat::signum).collect();
        ensure(signs == [1, 1, 1, 1, -1], || format!("{name} route signs {signs:?}"))?;
    }
    Ok(format!("A(1..4) > 0, A(5) = {} < 0 by both routes", direct[4]))
}

fn route_agreement() -> Outcome {
    let rep = sample_route_agreement(1000, 42).map_err(|e| e.to_string())?;
    ensure(rep.passed() && rep.checked == 1000, || format!("{} disagreements, witness {:?}", rep.disagreements, rep.witness))?;
    identity_ok("AL")?;
    identity_ok("ROUTES")?;
    Ok("1000 random tuples agree; AL and ROUTES verified_zero".into())
}

fn pattern_221() -> Outcome {
    identity_ok("DEGEN_221")?;
    let rep = sample_configuration(&SampleSpec::new(Configuration::Pattern221, 1000, 42)).map_err(|e| e.to_string())?;
    ensure(rep.passed() && rep.accepted == 1000, || format!("{} violations", rep.violation_count))?;
    ensure(rep.a_min.iter().chain(&rep.a_max).all(Rat::is_zero), || "nonzero A(r)".into())?;
    Ok("DEGEN_221 verified_zero; A(r) = 0 on 1000 samples".into())
}

fn corollary_positivity() -> Outcome {
    for id in ["G_BOUNDARY", "POL3_BOUNDARY", "CASE3_DISC", "POL5_BOUNDARY", "POL6_FAC"] {
        identity_ok(id)?;
    }
    for n in 1..=4 {
        let cfg = Configuration::Corollary(CorollaryType::from_number(n).expect("type"));
        let rep = sample_configuration(&SampleSpec::new(cfg, 10_000, 42)).map_err(|e| e.to_string())?;
        ensure(rep.passed() && rep.accepted == 10_000, || format!("type {n}: {} violations {:?}", rep.violation_count, rep.violations.first()))?;
    }
    let mut claims = 0;
    for case in 1..=4 {
        for p in verify_case_positivity(case).map_err(|e| e.to_string())? {
            ensure(p.status == ClaimStatus::Certified, || format!("{} is {:?}", p.claim_id, p.status))?;
            ensure(p.method != Method::Sampling, || format!("{} rests on sampling", p.claim_id))?;
            if let Some(s) = p.steps.iter().find(|s| !s.passed) {
                return Err(format!("{}: step {} failed", p.claim_id, s.subject));
            }
            claims += 1;
        }
    }
    Ok(format!("40000 samples positive; {claims} claims certified with every step passing"))
}

fn degenerate_top() -> Outcome {
    identity_ok("DEGEN_TOP")?;
    let rep = sample_configuration(&SampleSpec::new(Configuration::DegenerateTop, 1000, 42)).map_err(|e| e.to_string())?;
    ensure(rep.passed() && rep.accepted == 1000, || format!("{} violations", rep.violation_count))?;
    ensure(rep.a_max[2].is_negative(), || format!("max A(3) = {}", rep.a_max[2]))?;
    Ok(format!("A(3) <= {} on 1000 samples; perfect square recovered", rep.a_max[2]))
}

fn rigidity() -> Outcome {
    for case in 1..=2 {
        let r = verify_rigidity_case(case).map_err(|e| e.to_string())?;
        ensure(r.is_verified(), || format!("case {case}: {:?}", r.status))?;
    }
    let coeffs = |case: u8| {
        let mut v: Vec<Rat> = quadratic_form(case).terms().iter().map(|(_, c)| c.clone()).collect();
        v.sort();
        v.dedup();
        v
    };
    let want1: Vec<Rat> = ["5/4", "5/2", "5", "25/4", "10"].iter().map(|s| s.parse().unwrap()).collect();
    let want2: Vec<Rat> = ["35/3", "70/3", "25"].iter().map(|s| s.parse().unwrap()).collect();
    ensure(coeffs(1) == want1, || format!("case 1 coefficients {:?}", coeffs(1)))?;
    ensure(coeffs(2) == want2, || format!("case 2 coefficients {:?}", coeffs(2)))?;
    Ok("both combinations cancel the fourth-order terms and match the displayed forms".into())
}

fn clifford() -> Outcome {
    let t = clifford_rational();
    ensure(esym(1, &t).is_zero() && psum(2, &t) == Rat::int(5), || "rational tuple".into())?;
    for k in 1..=4 {
        let c = clifford_check(k).ok_or("missing product")?;
        ensure(c.holds, || format!("k = {k}: sigma1 = {}, S = {}", c.sigma1, c.s))?;
    }
    Ok("sigma1 = 0 and S = 5 for (-1/2 x4, 2) and all (k, 5-k)".into())
}

fn err<T: std::fmt::Debug>(name: &str, e: proptest::test_runner::TestError<T>) -> String {
    format!("{name}: {e:?}")
}

fn engine_properties() -> Outcome {
    let ctx = VarCtx::of(&["x", "y", "z"]);
    let rat = (-30i64..=30, 1i64..=9).prop_map(|(n, d)| Rat::frac(n, d));
    let c2 = ctx.clone();
    let poly = prop::collection::vec((rat.clone(), 0u32..=3, 0u32..=3, 0u32..=3), 0..=5)
        .prop_map(move |ts| Poly::from_terms(&c2, ts.into_iter().map(|(k, a, b, e)| (Mono::from_exps(&[a, b, e]), k))));
    let point = prop::collection::vec(rat, 3);
    let cases = 128;
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });

    runner
        .run(&(poly.clone(), poly.clone(), poly.clone()), |(a, b, c)| {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            Ok(())
        })
        .map_err(|e| err("ring laws", e))?;
    let c3 = ctx.clone();
    runner
        .run(&poly, |a| {
            prop_assert_eq!(parse_expression(&a.to_string(), &c3).unwrap(), a);
            Ok(())
        })
        .map_err(|e| err("parse round trip", e))?;
    runner
        .run(&(poly.clone(), point), |(a, p)| {
            let exact = a.differentiate("x", 1).unwrap().eval(&p).unwrap();
            let at = |s: Rat| {
                let mut q = p.clone();
                q[0] = &q[0] + &s;
                a.eval(&q).unwrap()
            };
            let errs: Vec<Rat> = (8..=10u32)
                .map(|k| {
                    let h = Rat::one() / Rat::int(2).pow(k);
                    ((at(h.clone()) - at(-h.clone())) / (Rat::int(2) * &h) - &exact).abs()
                })
                .collect();
            // Cubic in x, so the central-difference error is exactly c h^2.
            prop_assert_eq!(&errs[0], &(&errs[1] * &Rat::int(4)));
            prop_assert_eq!(&errs[1], &(&errs[2] * &Rat::int(4)));
            Ok(())
        })
        .map_err(|e| err("finite differences", e))?;
    runner
        .run(&(poly.clone(), poly), |(a, b)| {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
            Ok(())
        })
        .map_err(|e| err("exact division", e))?;
    Ok(format!("ring laws, parse round trip, O(h^2) differences, exact division: {cases} cases each"))
}

fn determinism() -> Outcome {
    let args = ["isocert", "--format", "structured", "verify", "all", "--seed", "42"];
    let first = run(args);
    let second = run(args);
    ensure(first.code == 0, || format!("exit {}: {}", first.code, first.stderr))?;
    let a = RunDocument::from_json(&first.stdout).map_err(|e| e.to_string())?;
    let b = RunDocument::from_json(&second.stdout).map_err(|e| e.to_string())?;
    let (da, db) = (a.report.deterministic_json(), b.report.deterministic_json());
    ensure(da == db, || "deterministic sections differ".into())?;
    ensure(a.to_json() == first.stdout, || "document does not round-trip".into())?;
    Ok(format!("{} records, {} bytes, identical", a.report.records.len(), da.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("identity suite", identity_suite),
        ("counterexample signs", counterexample),
        ("route agreement", route_agreement),
        ("(2,2,1) vanishing", pattern_221),
        ("corollary positivity", corollary_positivity),
        ("degenerate top", degenerate_top),
        ("rigidity reductions", rigidity),
        ("clifford tuples", clifford),
        ("engine properties", engine_properties),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS {name}: {msg} ({secs:.1} s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {msg} ({secs:.1} s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
