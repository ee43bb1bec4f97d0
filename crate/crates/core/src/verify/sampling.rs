//! Seeded exact sampling of curvature configurations.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::assumption::{a_closed_generic, a_direct_unchecked};
use crate::curvature::CorollaryType;
use crate::polycore::Rat;
use crate::symfun::esym;

use super::VerifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rel {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Operand {
    /// 0-based curvature index.
    Var(usize),
    Const(Rat),
}

/// One custom inequality such as `l3>0` or `l1<l2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub left: Operand,
    pub rel: Rel,
    pub right: Operand,
}

fn operand(text: &str) -> Result<Operand, VerifyError> {
    let t = text.trim();
    if let Some(i) = t.strip_prefix('l').and_then(|d| d.parse::<usize>().ok()) {
        if (1..=5).contains(&i) {
            return Ok(Operand::Var(i - 1));
        }
    }
    t.parse::<Rat>().map(Operand::Const).map_err(|_| VerifyError::InvalidSpec(format!("bad operand `{t}`")))
}

impl FromStr for Constraint {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Constraint, VerifyError> {
        for (sym, rel) in [("<=", Rel::Le), (">=", Rel::Ge), ("<", Rel::Lt), (">", Rel::Gt), ("=", Rel::Eq)] {
            if let Some((a, b)) = s.split_once(sym) {
                return Ok(Constraint { left: operand(a)?, rel, right: operand(b)? });
            }
        }
        Err(VerifyError::InvalidSpec(format!("no relation in `{s}`")))
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |o: &Operand| match o {
            Operand::Var(i) => format!("l{}", i + 1),
            Operand::Const(c) => c.to_string(),
        };
        let rel = match self.rel {
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Gt => ">",
            Rel::Ge => ">=",
            Rel::Eq => "=",
        };
        write!(f, "{}{}{}", side(&self.left), rel, side(&self.right))
    }
}

impl Constraint {
    pub fn holds(&self, t: &[Rat; 5]) -> bool {
        let v = |o: &Operand| match o {
            Operand::Var(i) => t[*i].clone(),
            Operand::Const(c) => c.clone(),
        };
        let (a, b) = (v(&self.left), v(&self.right));
        match self.rel {
            Rel::Lt => a < b,
            Rel::Le => a <= b,
            Rel::Gt => a > b,
            Rel::Ge => a >= b,
            Rel::Eq => a == b,
        }
    }
}

/// Parses a comma-separated list such as `l3>0,l4>0`.
pub fn parse_constraints(text: &str) -> Result<Vec<Constraint>, VerifyError> {
    text.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Configuration {
    Corollary(CorollaryType),
    /// Multiplicities `(2,2,1)`: values `x, y` doubled and `-2x-2y`.
    Pattern221,
    /// `l4 = l5 > 0` above three distinct values.
    DegenerateTop,
    /// Ascending tuples satisfying every constraint.
    Custom(Vec<Constraint>),
}

impl Configuration {
    pub fn label(&self) -> String {
        match self {
            Configuration::Corollary(t) => format!("type{}", t.number()),
            Configuration::Pattern221 => "pattern221".into(),
            Configuration::DegenerateTop => "degenerate-top".into(),
            Configuration::Custom(cs) => {
                let parts: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                format!("custom[{}]", parts.join(","))
            }
        }
    }

    fn free_params(&self) -> usize {
        match self {
            Configuration::Corollary(CorollaryType::Type4) | Configuration::Custom(_) => 4,
            Configuration::Pattern221 => 2,
            _ => 3,
        }
    }

    /// Builds a tuple from sorted free parameters, or `None` if it does not conform.
    fn build(&self, p: &[Rat]) -> Option<[Rat; 5]> {
        let neg = |xs: &[&Rat]| -> Rat { -xs.iter().map(|x| (*x).clone()).sum::<Rat>() };
        let t: [Rat; 5] = match self {
            Configuration::Corollary(CorollaryType::Type1) => {
                [p[0].clone(), p[1].clone(), p[2].clone(), p[2].clone(), neg(&[&p[0], &p[1], &p[2], &p[2]])]
            }
            Configuration::Corollary(CorollaryType::Type2) => {
                [p[0].clone(), p[0].clone(), p[1].clone(), p[2].clone(), neg(&[&p[0], &p[0], &p[1], &p[2]])]
            }
            Configuration::Corollary(CorollaryType::Type3) => {
                [p[0].clone(), p[1].clone(), p[1].clone(), p[2].clone(), neg(&[&p[0], &p[1], &p[1], &p[2]])]
            }
            Configuration::Corollary(CorollaryType::Type4) | Configuration::Custom(_) => {
                [p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone(), neg(&[&p[0], &p[1], &p[2], &p[3]])]
            }
            Configuration::Pattern221 => {
                let z = neg(&[&p[0], &p[0], &p[1], &p[1]]);
                if z == p[0] || z == p[1] || p[0] == p[1] {
                    return None;
                }
                let mut v = [p[0].clone(), p[0].clone(), p[1].clone(), p[1].clone(), z];
                v.sort();
                v
            }
            Configuration::DegenerateTop => {
                let top = p[2].abs();
                let l3 = neg(&[&p[0], &p[1], &top, &top]);
                [p[0].clone(), p[1].clone(), l3, top.clone(), top]
            }
        };
        let ok = match self {
            Configuration::Corollary(c) => c.holds(&t),
            Configuration::Pattern221 => true,
            Configuration::DegenerateTop => t[0] < t[1] && t[1] < t[2] && t[2] < t[3] && t[4].is_positive(),
            Configuration::Custom(cs) => (0..4).all(|i| t[i] <= t[i + 1]) && cs.iter().all(|c| c.holds(&t)),
        };
        ok.then_some(t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub configuration: Configuration,
    pub count: usize,
    pub seed: u64,
    /// Free parameters are `k/256` with `|k| <= magnitude`.
    pub magnitude: i64,
}

impl SampleSpec {
    pub fn new(configuration: Configuration, count: usize, seed: u64) -> SampleSpec {
        SampleSpec { configuration, count, seed, magnitude: 4096 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub tuple: [Rat; 5],
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleReport {
    pub configuration: String,
    pub seed: u64,
    pub requested: usize,
    pub accepted: usize,
    pub attempts: usize,
    /// What every sample must satisfy.
    pub assertion: String,
    pub a_min: [Rat; 5],
    pub a_max: [Rat; 5],
    pub sigma3_min: Rat,
    pub sigma3_max: Rat,
    pub sigma3_negative: usize,
    /// Type 2 samples with `l3 >= 0`, where `sigma3` is not asserted.
    pub unasserted_sigma3_samples: usize,
    pub scale_checked: usize,
    pub scale_failures: usize,
    pub violation_count: usize,
    /// The first few violations.
    pub violations: Vec<Violation>,
    /// The appended fixed point and its `A` values for custom specs.
    pub fixed_point: Option<([Rat; 5], [Rat; 5])>,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0 && self.scale_failures == 0
    }
}

/// The five-distinct tuple whose `A(5)` is negative.
pub fn fixed_counterexample() -> [Rat; 5] {
    [-6, -5, 1, 3, 7].map(Rat::int)
}

const KEPT_VIOLATIONS: usize = 10;

fn assertion(cfg: &Configuration) -> &'static str {
    match cfg {
        Configuration::Corollary(CorollaryType::Type2) => "A(r) > 0 for all r; sigma3 >= 0 unless l3 >= 0",
        Configuration::Corollary(_) => "A(r) > 0 for all r; sigma3 >= 0",
        Configuration::Pattern221 => "A(r) = 0 for all r",
        Configuration::DegenerateTop => "A(3) < 0",
        Configuration::Custom(_) => "none on samples; A(5) < 0 at the fixed point",
    }
}

fn check(cfg: &Configuration, t: &[Rat; 5], a: &[Rat; 5], s3: &Rat) -> Option<String> {
    match cfg {
        Configuration::Corollary(c) => {
            if let Some(r) = a.iter().position(|v| !v.is_positive()) {
                return Some(format!("A({}) = {} is not positive", r + 1, a[r]));
            }
            let exempt = *c == CorollaryType::Type2 && !t[2].is_negative();
            (s3.is_negative() && !exempt).then(|| format!("sigma3 = {s3} is negative"))
        }
        Configuration::Pattern221 => {
            a.iter().position(|v| !v.is_zero()).map(|r| format!("A({}) = {} is not zero", r + 1, a[r]))
        }
        Configuration::DegenerateTop => (!a[2].is_negative()).then(|| format!("A(3) = {} is not negative", a[2])),
        Configuration::Custom(_) => None,
    }
}

/// Draws `spec.count` conforming tuples and evaluates `sigma3` and every `A(r)` exactly.
pub fn sample_configuration(spec: &SampleSpec) -> Result<SampleReport, VerifyError> {
    if spec.count == 0 {
        return Err(VerifyError::InvalidSpec("count must be at least 1".into()));
    }
    if spec.magnitude < 1 {
        return Err(VerifyError::InvalidSpec("magnitude must be at least 1".into()));
    }
    let cfg = &spec.configuration;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let budget = (spec.count * 200).max(100_000);
    let mut tuples = Vec::with_capacity(spec.count);
    let mut attempts = 0;
    while tuples.len() < spec.count && attempts < budget {
        attempts += 1;
        let mut p: Vec<Rat> = (0..cfg.free_params())
            .map(|_| Rat::frac(rng.gen_range(-spec.magnitude..=spec.magnitude), 256))
            .collect();
        if !matches!(cfg, Configuration::Pattern221 | Configuration::DegenerateTop) {
            p.sort();
        }
        if let Some(t) = cfg.build(&p) {
            tuples.push(t);
        }
    }
    if tuples.is_empty() {
        return Err(VerifyError::InfeasibleSpec(format!("no conforming tuple in {attempts} attempts for {}", cfg.label())));
    }
    let evals: Vec<([Rat; 5], Rat, bool)> = tuples
        .par_iter()
        .enumerate()
        .map(|(i, t)| {
            let a = a_direct_unchecked(t);
            let scale_ok = i >= 100 || {
                let doubled = t.clone().map(|x| x * Rat::int(2));
                a_direct_unchecked(&doubled).iter().zip(&a).all(|(d, v)| d == &(v * &Rat::int(2048)))
            };
            (a, esym(3, t), scale_ok)
        })
        .collect();
    let mut a_min = evals[0].0.clone();
    let mut a_max = evals[0].0.clone();
    let mut sigma3_min = evals[0].1.clone();
    let mut sigma3_max = evals[0].1.clone();
    let mut sigma3_negative = 0;
    let mut unasserted = 0;
    let mut violations = Vec::new();
    let mut violation_count = 0;
    for (t, (a, s3, _)) in tuples.iter().zip(&evals) {
        for r in 0..5 {
            if a[r] < a_min[r] {
                a_min[r] = a[r].clone();
            }
            if a[r] > a_max[r] {
                a_max[r] = a[r].clone();
            }
        }
        if s3 < &sigma3_min {
            sigma3_min = s3.clone();
        }
        if s3 > &sigma3_max {
            sigma3_max = s3.clone();
        }
        if s3.is_negative() {
            sigma3_negative += 1;
        }
        if *cfg == Configuration::Corollary(CorollaryType::Type2) && !t[2].is_negative() {
            unasserted += 1;
        }
        if let Some(reason) = check(cfg, t, a, s3) {
            violation_count += 1;
            if violations.len() < KEPT_VIOLATIONS {
                violations.push(Violation { tuple: t.clone(), reason });
            }
        }
    }
    let fixed_point = match cfg {
        Configuration::Custom(_) => {
            let t = fixed_counterexample();
            let a = a_direct_unchecked(&t);
            if !a[4].is_negative() {
                violation_count += 1;
                violations.push(Violation { tuple: t.clone(), reason: format!("A(5) = {} is not negative", a[4]) });
            }
            Some((t, a))
        }
        _ => None,
    };
    Ok(SampleReport {
        configuration: cfg.label(),
        seed: spec.seed,
        requested: spec.count,
        accepted: tuples.len(),
        attempts,
        assertion: assertion(cfg).to_string(),
        a_min,
        a_max,
        sigma3_min,
        sigma3_max,
        sigma3_negative,
        unasserted_sigma3_samples: unasserted,
        scale_checked: evals.len().min(100),
        scale_failures: evals.iter().filter(|e| !e.2).count(),
        violation_count,
        violations,
        fixed_point,
    })
}

/// Direct and closed-form `A(r)` on random trace-free tuples, in drawing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteAgreementReport {
    pub seed: u64,
    pub checked: usize,
    pub disagreements: usize,
    /// First disagreeing tuple, if any.
    pub witness: Option<[Rat; 5]>,
}

impl RouteAgreementReport {
    pub fn passed(&self) -> bool {
        self.disagreements == 0
    }
}

pub fn sample_route_agreement(count: usize, seed: u64) -> Result<RouteAgreementReport, VerifyError> {
    if count == 0 {
        return Err(VerifyError::InvalidSpec("count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples: Vec<[Rat; 5]> = (0..count)
        .map(|_| {
            let p: Vec<Rat> = (0..4).map(|_| Rat::frac(rng.gen_range(-4096..=4096), rng.gen_range(1..=64))).collect();
            let last = -p.iter().cloned().sum::<Rat>();
            [p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone(), last]
        })
        .collect();
    let bad: Vec<usize> = tuples
        .par_iter()
        .enumerate()
        .filter(|(_, t)| a_closed_generic(t).map(|c| c != a_direct_unchecked(t)).unwrap_or(true))
        .map(|(i, _)| i)
        .collect();
    Ok(RouteAgreementReport {
        seed,
        checked: count,
        disagreements: bad.len(),
        witness: bad.first().map(|&i| tuples[i].clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constraints_parse_and_render() {
        let cs = parse_constraints("l3>0, l4>=1/2,l1<l2").unwrap();
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[1].to_string(), "l4>=1/2");
        assert!(parse_constraints("l6>0").is_err());
        assert!(parse_constraints("l3 0").is_err());
    }

    #[test]
    fn corollary_types_conform() {
        for n in 1..=4 {
            let cfg = Configuration::Corollary(CorollaryType::from_number(n).unwrap());
            let rep = sample_configuration(&SampleSpec::new(cfg, 200, 3)).unwrap();
            assert_eq!(rep.accepted, 200);
            assert!(rep.passed(), "type {n}: {:?}", rep.violations);
            assert_eq!(rep.scale_checked, 100);
        }
    }

    #[test]
    fn degenerate_patterns() {
        let rep = sample_configuration(&SampleSpec::new(Configuration::Pattern221, 100, 1)).unwrap();
        assert!(rep.passed());
        assert!(rep.a_min.iter().chain(&rep.a_max).all(Rat::is_zero));
        let rep = sample_configuration(&SampleSpec::new(Configuration::DegenerateTop, 100, 1)).unwrap();
        assert!(rep.passed());
        assert!(rep.a_max[2].is_negative());
    }

    #[test]
    fn custom_and_infeasible() {
        let cfg = Configuration::Custom(parse_constraints("l3>0,l4>0").unwrap());
        let rep = sample_configuration(&SampleSpec::new(cfg, 50, 9)).unwrap();
        assert!(rep.passed());
        assert!(rep.fixed_point.unwrap().1[4].is_negative());
        let cfg = Configuration::Custom(parse_constraints("l1>0").unwrap());
        let err = sample_configuration(&SampleSpec::new(cfg, 5, 9)).unwrap_err();
        assert!(matches!(err, VerifyError::InfeasibleSpec(_)));
        let cfg = Configuration::Pattern221;
        assert!(matches!(sample_configuration(&SampleSpec::new(cfg, 0, 9)), Err(VerifyError::InvalidSpec(_))));
    }

    #[test]
    fn deterministic() {
        let spec = SampleSpec::new(Configuration::Corollary(CorollaryType::Type4), 50, 42);
        assert_eq!(sample_configuration(&spec).unwrap(), sample_configuration(&spec).unwrap());
    }

    #[test]
    fn routes_agree_on_random_tuples() {
        let rep = sample_route_agreement(200, 5).unwrap();
        assert!(rep.passed(), "{:?}", rep.witness);
        assert_eq!(rep.checked, 200);
        assert!(sample_route_agreement(0, 5).is_err());
    }
}
