//! Positivity of `A(r)` and `sigma_3` on the four tied and ordered configurations.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::assumption::a_direct_unchecked;
use crate::polycore::{certify, Cone, Poly, PolyError, Rat};
use crate::symfun::{esym, lambda_ctx, lambda_vars_trace_free};

use super::exprs::{self, abcd, abcd_ctx, l, x, x_ctx};
use super::identities::{at_d_eq_c, case_tuple, pol3_edge, PAIR_FORM_TABLE};
use super::{identity_holds, VerifyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BoundaryFactorization,
    DerivativeChain,
    ConeCertificate,
    Sampling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Certified,
    SampledConsistent,
    Failed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// A catalog identity.
    Identity,
    /// A cone certificate of strict positivity.
    Certificate,
    /// Another claim of the same case.
    Dependency,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub kind: StepKind,
    pub subject: String,
    pub region: Option<String>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub claim_id: String,
    pub case: u8,
    pub statement: String,
    pub method: Method,
    pub status: ClaimStatus,
    pub steps: Vec<Step>,
    pub samples: usize,
    pub counterexample: Option<[Rat; 5]>,
}

/// Every claim id, sorted.
pub const CLAIM_IDS: [&str; 25] = [
    "C1_A1", "C1_A2", "C1_A3", "C1_A4", "C1_A5", "C1_SIGMA3",
    "C2_A1", "C2_A2", "C2_A3", "C2_A4", "C2_A5", "C2_SIGMA3_MIXED", "C2_SIGMA3_NEG",
    "C3_A1", "C3_A2", "C3_A3", "C3_A4", "C3_A5", "C3_SIGMA3",
    "C4_A1", "C4_A2", "C4_A3", "C4_A4", "C4_A5", "C4_SIGMA3",
];

/// Case number encoded in a claim id.
pub fn claim_case(id: &str) -> Option<u8> {
    CLAIM_IDS.contains(&id).then(|| id.as_bytes()[1] - b'0')
}

/// Samples drawn per claim for the cross-check.
pub const CROSS_CHECK_SAMPLES: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    A(usize),
    Sigma3,
}

impl Target {
    fn label(self) -> String {
        match self {
            Target::A(r) => format!("A({r})"),
            Target::Sigma3 => "sigma3".into(),
        }
    }

    fn eval(self, t: &[Rat; 5]) -> Rat {
        match self {
            Target::A(r) => a_direct_unchecked(t)[r - 1].clone(),
            Target::Sigma3 => esym(3, t),
        }
    }
}

type Filter = fn(&[Rat; 5]) -> bool;

fn everywhere(_: &[Rat; 5]) -> bool {
    true
}

fn l4_negative(t: &[Rat; 5]) -> bool {
    t[3].is_negative()
}

fn l3_negative_l4_positive(t: &[Rat; 5]) -> bool {
    t[2].is_negative() && t[3].is_positive()
}

struct Claim {
    id: &'static str,
    target: Target,
    method: Method,
    region: &'static str,
    filter: Filter,
    steps: Vec<Step>,
}

fn identity(id: &str) -> Step {
    let passed = identity_holds(id);
    Step {
        kind: StepKind::Identity,
        subject: id.to_string(),
        region: None,
        passed,
        detail: if passed { "verified_zero".into() } else { "not verified".into() },
    }
}

fn cert(subject: impl Into<String>, p: &Poly, cone: &Cone) -> Step {
    let (passed, detail) = match certify(p, cone) {
        Ok(r) => (r.is_certified(), r.to_string()),
        Err(e) => (false, e.to_string()),
    };
    Step { kind: StepKind::Certificate, subject: subject.into(), region: Some(cone.render(p.ctx())), passed, detail }
}

/// Strict sign of a linear factor: certifies `f > 0` or `-f > 0`.
fn nonzero(f: &str, cone: &Cone) -> Step {
    let p = l(f);
    let pos = cert(format!("{f} > 0"), &p, cone);
    if pos.passed {
        return pos;
    }
    cert(format!("-({f}) > 0"), &-&p, cone)
}

fn dependency(id: &str, status: Option<ClaimStatus>) -> Step {
    let passed = status == Some(ClaimStatus::Certified);
    Step {
        kind: StepKind::Dependency,
        subject: id.to_string(),
        region: None,
        passed,
        detail: format!("{status:?}"),
    }
}

fn chain(text: &str) -> Cone {
    Cone::chain(&lambda_ctx(), text).expect("built-in chain")
}

/// The open configuration region in the free curvatures of each case.
fn case_cone(case: u8) -> Cone {
    match case {
        1 => chain("0 > l4 > l2 > l1"),
        2 => Cone::rays(&lambda_ctx(), &["l2", "l3", "l4"], &[&[-1, -1, -1], &[-2, -2, 3], &[-3, 2, 2]]).expect("rays"),
        3 => chain("0 > l4 > l3 > l1"),
        _ => chain("0 > l4 > l3 > l2 > l1"),
    }
}

fn case_pattern(case: u8) -> &'static str {
    match case {
        1 => "l1<l2<l3=l4<0<l5",
        2 => "l1=l2<l3<l4<l5",
        3 => "l1<l2=l3<l4<0<l5",
        _ => "l1<l2<l3<l4<0<l5",
    }
}

fn substituted(case: u8, target: Target) -> Poly {
    let t = case_tuple(case);
    match target {
        Target::A(r) => a_direct_unchecked(&t)[r - 1].clone(),
        Target::Sigma3 => esym(3, &t),
    }
}

fn direct(case: u8, id: &'static str, target: Target) -> Claim {
    let p = substituted(case, target);
    let step = cert(format!("{} > 0", target.label()), &p, &case_cone(case));
    Claim { id, target, method: Method::ConeCertificate, region: case_pattern(case), filter: everywhere, steps: vec![step] }
}

fn pair_form(case: u8, id: &'static str, r: usize) -> Claim {
    let pf = PAIR_FORM_TABLE.iter().find(|p| p.case == case && p.r == r).expect("tabulated pair form");
    let cone = case_cone(case);
    let mut steps = vec![identity("PAIR_FORMS"), cert(format!("-{} > 0", pf.sign_var), &-&l(pf.sign_var), &cone)];
    steps.extend(pf.factors.iter().map(|f| nonzero(f, &cone)));
    Claim {
        id,
        target: Target::A(r),
        method: Method::BoundaryFactorization,
        region: case_pattern(case),
        filter: everywhere,
        steps,
    }
}

fn case1() -> Vec<Claim> {
    let cone = case_cone(1);
    let xc = x_ctx();
    let above = Cone::chain(&xc, "x1 > x2 > 1").expect("chain");
    let diag = Cone::chain(&xc, "x2 > 1").expect("chain");
    let a3 = vec![
        identity("CASE1_A3"),
        identity("G_BOUNDARY"),
        cert("-l4 > 0", &l("-l4"), &cone),
        cert("pol1 > 0", &l(exprs::POL1), &cone),
        nonzero("l1-l2", &cone),
        cert("d2g/dx1^2 > 0", &x(exprs::D2G), &above),
        cert("x2 - 1 > 0", &x("x2-1"), &diag),
        cert("dg/dx1(x2,x2) cubic > 0", &x(exprs::DG_DIAG_CUBIC), &diag),
        cert("g(x2,x2) cubic > 0", &x(exprs::G_DIAG_CUBIC), &diag),
    ];
    let mut a5 = vec![identity("CASE1_A5"), cert("-l4 > 0", &l("-l4"), &cone), cert("pol1 > 0", &l(exprs::POL1), &cone)];
    a5.extend(["l1-l2", "l1-l4", "l2-l4"].iter().map(|f| nonzero(f, &cone)));
    vec![
        pair_form(1, "C1_A1", 1),
        pair_form(1, "C1_A2", 2),
        Claim { id: "C1_A3", target: Target::A(3), method: Method::DerivativeChain, region: case_pattern(1), filter: everywhere, steps: a3 },
        Claim { id: "C1_A5", target: Target::A(5), method: Method::BoundaryFactorization, region: case_pattern(1), filter: everywhere, steps: a5 },
        direct(1, "C1_SIGMA3", Target::Sigma3),
    ]
}

fn case2() -> Result<Vec<Claim>, PolyError> {
    let ctx = lambda_ctx();
    let rays3 = Cone::rays(&ctx, &["l3", "l4", "l5"], &[&[1, 1, 1], &[-1, -1, 4], &[-2, 3, 3]])?;
    let rays2 = Cone::rays(&ctx, &["l4", "l5"], &[&[-1, 4], &[1, 1]])?;
    let pol3 = l(exprs::POL3);
    let mut a1 = vec![identity("CASE2_A12"), identity("POL3_BOUNDARY"), cert("d3 pol3/dl3^3 > 0", &pol3.differentiate("l3", 3)?, &rays3)];
    for k in (0..3).rev() {
        let edge = pol3_edge(&pol3.differentiate("l3", k)?)?;
        a1.push(cert(format!("d{k} pol3/dl3^{k} at l3 = -(l4+l5)/3 > 0"), &edge, &rays2));
    }
    let lower = chain("0 > l3 > l2");
    let mixed = vec![
        identity("SIGMA3_CASE2"),
        cert("-(2*l2+l3) > 0", &l("-(2*l2+l3)"), &lower),
        cert("-disc > 0", &-&l(exprs::SIGMA3_CASE2_DISC), &lower),
    ];
    let neg = cert("sigma3 > 0", &substituted(2, Target::Sigma3), &chain("0 > l4 > l3 > l2"));
    Ok(vec![
        Claim { id: "C2_A1", target: Target::A(1), method: Method::DerivativeChain, region: case_pattern(2), filter: everywhere, steps: a1 },
        pair_form(2, "C2_A3", 3),
        pair_form(2, "C2_A4", 4),
        pair_form(2, "C2_A5", 5),
        Claim {
            id: "C2_SIGMA3_NEG",
            target: Target::Sigma3,
            method: Method::ConeCertificate,
            region: "l1=l2<l3<l4<0<l5",
            filter: l4_negative,
            steps: vec![neg],
        },
        Claim {
            id: "C2_SIGMA3_MIXED",
            target: Target::Sigma3,
            method: Method::BoundaryFactorization,
            region: "l1=l2<l3<0<l4<l5",
            filter: l3_negative_l4_positive,
            steps: mixed,
        },
    ])
}

fn case3() -> Result<Vec<Claim>, PolyError> {
    let cone = case_cone(3);
    let ac = abcd_ctx();
    let unit = Cone::interval(&ac, "b", Rat::zero(), Rat::one())?;
    let a2 = vec![
        identity("CASE3_A2"),
        identity("CASE3_DISC"),
        cert("-l3 > 0", &l("-l3"), &cone),
        nonzero("l1-l4", &cone),
        cert("pol > 0", &l(exprs::POL), &cone),
        cert("a^4 coefficient > 0", &abcd(exprs::GAB_A4), &unit),
        cert("a^3 coefficient > 0", &abcd(exprs::GAB_A3), &unit),
        cert("a^2 coefficient > 0", &abcd(exprs::GAB_A2), &unit),
        cert("-disc/(b^2 (b-5)^2) > 0", &abcd(exprs::DISC3_QUARTIC), &unit),
    ];
    Ok(vec![
        pair_form(3, "C3_A1", 1),
        Claim { id: "C3_A2", target: Target::A(2), method: Method::BoundaryFactorization, region: case_pattern(3), filter: everywhere, steps: a2 },
        pair_form(3, "C3_A4", 4),
        pair_form(3, "C3_A5", 5),
        direct(3, "C3_SIGMA3", Target::Sigma3),
    ])
}

fn case4() -> Result<Vec<Claim>, PolyError> {
    let cone = case_cone(4);
    let ac = abcd_ctx();
    let four = Cone::chain(&ac, "d > c > b > a > 0")?;
    let three = Cone::chain(&ac, "c > b > a > 0")?;
    let p5 = abcd(exprs::P5);
    let fac = exprs::pol6_factor(-1);
    let mut a4 = vec![
        identity("CASE4_A4"),
        identity("CASE4_SPLIT"),
        identity("POL5_BOUNDARY"),
        identity("POL6_FAC"),
        cert("d7 pol5/dd^7 > 0", &p5.differentiate("d", 7)?, &four),
    ];
    for k in (0..7).rev() {
        a4.push(cert(format!("d{k} pol5/dd^{k} at d = c > 0"), &at_d_eq_c(&p5.differentiate("d", k)?)?, &three));
    }
    a4.push(cert("b > 0", &abcd("b"), &four));
    a4.push(cert("cofactor > 0", &exprs::pol6_factor(1), &four));
    a4.push(cert("d2 fac/dd^2 > 0", &fac.differentiate("d", 2)?, &four));
    a4.push(cert("d1 fac/dd at d = c > 0", &at_d_eq_c(&fac.differentiate("d", 1)?)?, &three));
    a4.push(cert("fac at d = c > 0", &at_d_eq_c(&fac)?, &three));
    a4.push(cert("l4 - 3*l3 > 0", &l("l4-3*l3"), &cone));
    a4.push(cert("-l1 > 0", &l("-l1"), &cone));
    a4.push(nonzero("l1-l3", &cone));
    a4.push(nonzero("l1-l2", &cone));
    let mut out: Vec<Claim> = [1, 2, 3, 5].iter().map(|&r| direct(4, ["", "C4_A1", "C4_A2", "C4_A3", "", "C4_A5"][r], Target::A(r))).collect();
    out.push(Claim { id: "C4_A4", target: Target::A(4), method: Method::DerivativeChain, region: case_pattern(4), filter: everywhere, steps: a4 });
    out.push(direct(4, "C4_SIGMA3", Target::Sigma3));
    Ok(out)
}

/// Claims obtained from another by a tie of equal curvatures: `(id, target, identity, base claim)`.
const TIES: &[(u8, &str, usize, &str, &str)] = &[
    (1, "C1_A4", 4, "TIE_SYMMETRY", "C1_A3"),
    (2, "C2_A2", 2, "CASE2_A12", "C2_A1"),
    (3, "C3_A3", 3, "TIE_SYMMETRY", "C3_A2"),
];

fn seed_of(id: &str) -> u64 {
    id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Seeded points of the case region that pass `filter`, as full curvature tuples.
fn region_samples(case: u8, filter: Filter, count: usize, seed: u64) -> Vec<[Rat; 5]> {
    let cone = case_cone(case);
    let tuple = case_tuple(case);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count * 100 {
        if out.len() == count {
            break;
        }
        let point: Vec<Rat> = cone.sample(5, &mut rng).into_iter().map(|v| v.unwrap_or_else(Rat::zero)).collect();
        let t: [Rat; 5] = std::array::from_fn(|i| tuple[i].eval(&point).expect("point in the curvature context"));
        if filter(&t) {
            out.push(t);
        }
    }
    out
}

fn finish(case: u8, c: Claim) -> PositivityReport {
    let symbolic = c.steps.iter().all(|s| s.passed);
    let samples = region_samples(case, c.filter, CROSS_CHECK_SAMPLES, seed_of(c.id));
    let counterexample = samples.iter().find(|t| !c.target.eval(t).is_positive()).cloned();
    let status = match (&counterexample, symbolic) {
        (Some(_), _) => ClaimStatus::Failed,
        (None, true) => ClaimStatus::Certified,
        (None, false) => ClaimStatus::Failed,
    };
    PositivityReport {
        claim_id: c.id.to_string(),
        case,
        statement: format!("{} > 0 on {}", c.target.label(), c.region),
        method: c.method,
        status,
        steps: c.steps,
        samples: samples.len(),
        counterexample,
    }
}

/// Every claim of one configuration case, sorted by claim id.
pub fn verify_case_positivity(case: u8) -> Result<Vec<PositivityReport>, VerifyError> {
    let bad = |e: PolyError| VerifyError::InvalidSpec(e.to_string());
    let claims = match case {
        1 => case1(),
        2 => case2().map_err(bad)?,
        3 => case3().map_err(bad)?,
        4 => case4().map_err(bad)?,
        _ => return Err(VerifyError::UnknownCase(case)),
    };
    let mut out: Vec<PositivityReport> = claims.into_par_iter().map(|c| finish(case, c)).collect();
    for &(tcase, id, r, ident, base) in TIES.iter().filter(|t| t.0 == case) {
        let base_report = out.iter().find(|p| p.claim_id == base).expect("base claim precedes its tie");
        let claim = Claim {
            id,
            target: Target::A(r),
            method: base_report.method,
            region: case_pattern(tcase),
            filter: everywhere,
            steps: vec![identity(ident), dependency(base, Some(base_report.status))],
        };
        out.push(finish(case, claim));
    }
    out.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(out)
}

/// `A(r)` after the case substitution, for the examples and the report.
pub fn case_a_value(case: u8, r: usize) -> Poly {
    if case == 4 {
        return a_direct_unchecked(&lambda_vars_trace_free())[r - 1].clone();
    }
    substituted(case, Target::A(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case1_all_certified() {
        let reps = verify_case_positivity(1).unwrap();
        assert_eq!(reps.len(), 6);
        for r in &reps {
            assert_eq!(r.status, ClaimStatus::Certified, "{}: {:?}", r.claim_id, r.steps);
            assert_eq!(r.samples, CROSS_CHECK_SAMPLES);
        }
        let ids: Vec<&str> = reps.iter().map(|r| r.claim_id.as_str()).collect();
        let listed: Vec<&str> = CLAIM_IDS.iter().copied().filter(|id| claim_case(id) == Some(1)).collect();
        assert_eq!(ids, listed);
    }

    #[test]
    fn unknown_case() {
        assert_eq!(verify_case_positivity(5), Err(VerifyError::UnknownCase(5)));
    }

    #[test]
    fn failed_step_fails_claim() {
        let bad = cert("l1 > 0", &l("l1"), &case_cone(4));
        assert!(!bad.passed);
        let claim = Claim { id: "T", target: Target::A(5), method: Method::ConeCertificate, region: "", filter: everywhere, steps: vec![bad] };
        let rep = finish(4, claim);
        assert_eq!(rep.status, ClaimStatus::Failed);
        assert!(rep.counterexample.is_none());
    }

    #[test]
    fn filters_restrict_samples() {
        let pts = region_samples(2, l3_negative_l4_positive, 50, 7);
        assert_eq!(pts.len(), 50);
        assert!(pts.iter().all(|t| t[0] == t[1] && t[1] < t[2] && t[2] < t[3] && t[3] < t[4]));
        assert!(pts.iter().all(|t| t.iter().cloned().sum::<Rat>().is_zero()));
    }
}
