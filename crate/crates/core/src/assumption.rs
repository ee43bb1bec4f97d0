//! The hypothesis quantities `A(r)`, `L(r)` and `u_i`.

use serde::{Deserialize, Serialize};

use crate::curvature::{CurvatureTuple, TripleInvariants};
use crate::polycore::{product_of, sum_of, Rat, Scalar};
use crate::symfun::esym;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AssumptionError {
    #[error("curvatures do not sum to zero")]
    MinimalityViolated,
    #[error("tuple has a repeated curvature")]
    DegenerateTuple,
    #[error("probe direction must sum to zero")]
    DirectionNotTraceFree,
    #[error("probe base must have exactly one repeated pair")]
    BadProbeBase,
    #[error("probe direction does not separate the repeated pair")]
    DirectionDoesNotSeparate,
    #[error("probe step {0} does not give five distinct curvatures")]
    ProbeCollision(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Direct,
    Closed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AValues {
    pub values: [Rat; 5],
    pub route: Route,
}

fn check_minimal<T: Scalar>(xs: &[T; 5]) -> Result<(), AssumptionError> {
    if sum_of(&xs[0], xs.iter().cloned()).is_zero_value() {
        Ok(())
    } else {
        Err(AssumptionError::MinimalityViolated)
    }
}

/// Sum over the four triples of `I_r = {1..5} \ {r}`.
pub fn a_direct_generic<T: Scalar>(xs: &[T; 5]) -> Result<[T; 5], AssumptionError> {
    check_minimal(xs)?;
    Ok(a_direct_unchecked(xs))
}

/// `A(r)` from the triple sum without checking `sigma1 = 0`.
pub fn a_direct_unchecked<T: Scalar>(xs: &[T; 5]) -> [T; 5] {
    let sigma2 = esym(2, xs);
    let sigma3 = esym(3, xs);
    std::array::from_fn(|r| {
        let idx: Vec<usize> = (0..5).filter(|&i| i != r).collect();
        let mut acc = xs[0].zero_like();
        for a in 0..4 {
            for b in a + 1..4 {
                for c in b + 1..4 {
                    let t = TripleInvariants::of(&xs[idx[a]], &xs[idx[b]], &xs[idx[c]]);
                    let q = t.s1.squared().plus(&t.s2.scaled(&Rat::int(2))).minus(&sigma2);
                    let p = t.s1.times(&t.s2).scaled(&Rat::int(2)).minus(&t.s3.scaled(&Rat::int(3))).plus(&sigma3.scaled(&Rat::int(2)));
                    acc = acc.plus(&t.s.times(&q).times(&p));
                }
            }
        }
        acc
    })
}

/// `-(l4 v4^2 q4^2 + l3 v3^2 q3^2 + l2 v2^2 q2^2 + l1 v1^2 q1^2)` over four curvatures whose fifth is their negated sum.
pub fn closed_a5<T: Scalar>(l: &[T; 4]) -> T {
    let like = &l[0];
    let terms = (0..4).map(|k| {
        let o: Vec<T> = (0..4).filter(|&i| i != k).map(|i| l[i].clone()).collect();
        let v = o[0].minus(&o[1]).times(&o[0].minus(&o[2])).times(&o[1].minus(&o[2]));
        let sq = sum_of(like, o.iter().map(|x| x.squared()));
        let mixed = sum_of(like, o.iter().map(|x| x.times(&l[k])));
        let q = l[k].squared().plus(&sq.scaled(&Rat::int(2))).plus(&mixed).plus(&esym(2, &o).scaled(&Rat::int(5)));
        l[k].times(&v.squared()).times(&q.squared())
    });
    sum_of(like, terms).negated()
}

/// `A(r)` by the index-swap rule: the closed form applied to the four curvatures other than `l_r`.
pub fn a_closed_generic<T: Scalar>(xs: &[T; 5]) -> Result<[T; 5], AssumptionError> {
    check_minimal(xs)?;
    Ok(std::array::from_fn(|r| {
        let o: Vec<T> = (0..5).filter(|&i| i != r).map(|i| xs[i].clone()).collect();
        closed_a5(&[o[0].clone(), o[1].clone(), o[2].clone(), o[3].clone()])
    }))
}

pub fn a_values_direct(t: &CurvatureTuple) -> Result<AValues, AssumptionError> {
    Ok(AValues { values: a_direct_generic(t.lambdas())?, route: Route::Direct })
}

pub fn a_closed_form(t: &CurvatureTuple) -> Result<AValues, AssumptionError> {
    Ok(AValues { values: a_closed_generic(t.lambdas())?, route: Route::Closed })
}

/// `prod_{i<j} (l_i - l_j)^2`.
pub fn vandermonde_sq<T: Scalar>(xs: &[T]) -> T {
    let mut acc = xs[0].one_like();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            acc = acc.times(&xs[i].minus(&xs[j]).squared());
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LUValues {
    pub l: [Rat; 5],
    pub u: [Rat; 5],
    /// `L(r) * prod (l_i - l_j)^2 == A(r)` for every `r`.
    pub bridge_holds: bool,
}

/// `prod_{k != p} (l_k - l_p)`.
fn pi(xs: &[Rat; 5], p: usize) -> Rat {
    product_of(&xs[0], (0..5).filter(|&k| k != p).map(|k| &xs[k] - &xs[p]))
}

/// The coefficient of `h_r^2` in the cleared bracket, before the `(n-2)!/n^2` factor.
pub fn l_value(xs: &[Rat; 5], r: usize) -> Rat {
    let pis: Vec<Rat> = (0..5).map(|p| pi(xs, p)).collect();
    let mut total = Rat::zero();
    for p in (0..5).filter(|&p| p != r) {
        let d = &xs[r] - &xs[p];
        total += Rat::one() / (&d * &pis[p] * &pis[p]);
        total += Rat::one() / (&d * &pis[p] * &pis[r]);
    }
    for p in (0..5).filter(|&p| p != r) {
        for q in (0..5).filter(|&q| q != r && q != p) {
            let den = (&xs[r] - &xs[p]) * (&xs[r] - &xs[q]) * &pis[p] * &pis[q];
            total += &xs[r] / &den;
        }
    }
    total
}

/// `u_i = -6/5 sum_{k != i} (l_k + l_i) / ((l_k - l_i)^2 prod_{j != k, i} (l_j - l_i))`.
pub fn u_value(xs: &[Rat; 5], i: usize) -> Rat {
    let mut total = Rat::zero();
    for k in (0..5).filter(|&k| k != i) {
        let d = &xs[k] - &xs[i];
        let rest: Rat = (0..5).filter(|&j| j != k && j != i).map(|j| &xs[j] - &xs[i]).product();
        total += (&xs[k] + &xs[i]) / (&d * &d * rest);
    }
    Rat::frac(-6, 5) * total
}

fn distinct(xs: &[Rat; 5]) -> bool {
    (0..5).all(|i| (i + 1..5).all(|j| xs[i] != xs[j]))
}

pub fn l_u_values(t: &CurvatureTuple) -> Result<LUValues, AssumptionError> {
    let xs = t.lambdas();
    if !distinct(xs) {
        return Err(AssumptionError::DegenerateTuple);
    }
    let l: [Rat; 5] = std::array::from_fn(|r| l_value(xs, r));
    let u: [Rat; 5] = std::array::from_fn(|i| u_value(xs, i));
    let v = vandermonde_sq(xs);
    let a = a_direct_unchecked(xs);
    let bridge_holds = (0..5).all(|r| &l[r] * &v == a[r]);
    Ok(LUValues { l, u, bridge_holds })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Bounded,
    DivergesPlus,
    DivergesMinus,
    Inconclusive,
}

/// Thresholds of the heuristic divergence test.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbeThresholds {
    pub growth: Rat,
    pub window: usize,
    pub variation_factor: Rat,
}

impl Default for ProbeThresholds {
    fn default() -> Self {
        ProbeThresholds { growth: Rat::frac(3, 2), window: 5, variation_factor: Rat::int(1000) }
    }
}

/// Samples of `u_i` along `base + eps * direction`. Verdicts are heuristic.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitProbeReport {
    pub target: String,
    pub base: [Rat; 5],
    pub direction: [Rat; 5],
    pub eps: Vec<Rat>,
    /// `u[j][i]` is `u_(i+1)` at `eps[j]`.
    pub u: Vec<[Rat; 5]>,
    pub verdicts: [Verdict; 5],
    pub sup: [Rat; 5],
    pub inf: [Rat; 5],
}

fn verdict(seq: &[Rat], th: &ProbeThresholds) -> Verdict {
    let n = seq.len();
    if n > th.window {
        let tail = &seq[n - th.window - 1..];
        let sign = tail[tail.len() - 1].signum();
        let growing = sign != 0
            && tail.iter().all(|x| x.signum() == sign)
            && tail.windows(2).all(|w| w[1].abs() >= &th.growth * &w[0].abs());
        if growing {
            return if sign > 0 { Verdict::DivergesPlus } else { Verdict::DivergesMinus };
        }
    }
    let variation: Rat = seq.windows(2).map(|w| (&w[1] - &w[0]).abs()).sum();
    if variation <= &th.variation_factor * &(seq[0].abs() + Rat::one()) {
        Verdict::Bounded
    } else {
        Verdict::Inconclusive
    }
}

/// Evaluates `u_i` at `base + 2^-j direction` for `j = 1..=steps`.
pub fn limit_probe(target: &str, base: &[Rat; 5], direction: &[Rat; 5], steps: u32, th: &ProbeThresholds) -> Result<LimitProbeReport, AssumptionError> {
    if !direction.iter().cloned().sum::<Rat>().is_zero() {
        return Err(AssumptionError::DirectionNotTraceFree);
    }
    let mut pairs = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            if base[i] == base[j] {
                pairs.push((i, j));
            }
        }
    }
    if pairs.len() != 1 {
        return Err(AssumptionError::BadProbeBase);
    }
    let (i, j) = pairs[0];
    if direction[i] == direction[j] {
        return Err(AssumptionError::DirectionDoesNotSeparate);
    }
    let mut eps = Vec::new();
    let mut u = Vec::new();
    for k in 1..=steps {
        let e = Rat::one() / Rat::int(2).pow(k);
        let point: [Rat; 5] = std::array::from_fn(|m| &base[m] + &(&e * &direction[m]));
        if !distinct(&point) {
            return Err(AssumptionError::ProbeCollision(e.to_string()));
        }
        u.push(std::array::from_fn(|m| u_value(&point, m)));
        eps.push(e);
    }
    let verdicts = std::array::from_fn(|m| {
        let seq: Vec<Rat> = u.iter().map(|row: &[Rat; 5]| row[m].clone()).collect();
        verdict(&seq, th)
    });
    let sup = std::array::from_fn(|m| u.iter().map(|row| row[m].clone()).max().unwrap_or_else(Rat::zero));
    let inf = std::array::from_fn(|m| u.iter().map(|row| row[m].clone()).min().unwrap_or_else(Rat::zero));
    Ok(LimitProbeReport {
        target: target.to_string(),
        base: base.clone(),
        direction: direction.clone(),
        eps,
        u,
        verdicts,
        sup,
        inf,
    })
}

/// Named probe targets: a degenerate base and a separating direction.
pub fn probe_target(name: &str) -> Option<([Rat; 5], [Rat; 5])> {
    let v = |a: [i64; 5]| a.map(Rat::int);
    match name {
        "bottom-pair" => Some((v([-4, -3, -3, 1, 9]), v([0, -1, 1, 0, 0]))),
        "top-pair" => Some((v([-3, -3, 1, 2, 3]), v([-1, 1, 0, 0, 0]))),
        "top-pair-upper" => Some((v([-4, -3, -2, -2, 11]), v([0, 0, -1, 1, 0]))),
        _ => None,
    }
}

pub const PROBE_TARGETS: [&str; 3] = ["bottom-pair", "top-pair", "top-pair-upper"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::make_tuple;

    fn tuple(v: [i64; 5]) -> CurvatureTuple {
        make_tuple(v.map(Rat::int), true).unwrap()
    }

    #[test]
    fn counterexample_signs_both_routes() {
        let t = tuple([-6, -5, 1, 3, 7]);
        let d = a_values_direct(&t).unwrap();
        let c = a_closed_form(&t).unwrap();
        assert_eq!(d.values, c.values);
        let signs: Vec<i32> = d.values.iter().map(Rat::signum).collect();
        assert_eq!(signs, vec![1, 1, 1, 1, -1]);
    }

    #[test]
    fn zero_and_221() {
        for v in [[0; 5], [-2, -2, 1, 1, 2]] {
            let t = tuple(v);
            assert!(a_values_direct(&t).unwrap().values.iter().all(Rat::is_zero));
            assert!(a_closed_form(&t).unwrap().values.iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn l_u_bridge() {
        let t = tuple([-6, -5, 1, 3, 7]);
        let lu = l_u_values(&t).unwrap();
        assert!(lu.bridge_holds);
        assert!(lu.l[4].is_negative() && lu.l[..4].iter().all(Rat::is_positive));
        assert_eq!(l_u_values(&tuple([-2, -2, 1, 1, 2])), Err(AssumptionError::DegenerateTuple));
    }

    #[test]
    fn probe_errors() {
        let th = ProbeThresholds::default();
        let (b, _) = probe_target("bottom-pair").unwrap();
        let same = [0, 1, 1, -1, -1].map(Rat::int);
        assert_eq!(limit_probe("x", &b, &same, 8, &th).unwrap_err(), AssumptionError::DirectionDoesNotSeparate);
        let bad = [0, 1, 0, 0, 0].map(Rat::int);
        assert_eq!(limit_probe("x", &b, &bad, 8, &th).unwrap_err(), AssumptionError::DirectionNotTraceFree);
    }
}
