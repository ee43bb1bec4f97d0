//! Positivity certificates by linear reparametrization of an open region.
//!
//! Each region is written as the image of positive parameters `w_i > 0`.
//! If the pulled-back polynomial has only nonnegative coefficients and is
//! nonzero, the original polynomial is positive on the open region.

use std::fmt;

use rand::Rng;

use super::{Mono, Poly, PolyError, Rat, VarCtx};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `... > v1 > v0 > bound`
    Above,
    /// `bound > v0 > v1 > ...`
    Below,
}

/// Strict ordered chain anchored at a rational bound. `vars[0]` is the variable adjacent to the bound.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain {
    pub vars: Vec<usize>,
    pub bound: Rat,
    pub side: Side,
}

impl Chain {
    /// Parses `d > c > b > a > 0`, `x1 > x2 > 1`, or `0 > l4 > l2 > l1`.
    pub fn parse(ctx: &VarCtx, text: &str) -> Result<Chain, PolyError> {
        let parts: Vec<&str> = text.split('>').map(str::trim).collect();
        if parts.len() < 2 {
            return Err(PolyError::BadCone(format!("chain needs at least one link: {text}")));
        }
        let numeric = |s: &str| s.parse::<Rat>().ok();
        let (bound, names, side) = match (numeric(parts[0]), numeric(parts[parts.len() - 1])) {
            (None, Some(b)) => {
                let names: Vec<&str> = parts[..parts.len() - 1].iter().rev().copied().collect();
                (b, names, Side::Above)
            }
            (Some(b), None) => (b, parts[1..].to_vec(), Side::Below),
            _ => return Err(PolyError::BadCone(format!("exactly one end of the chain must be a number: {text}"))),
        };
        let mut vars = Vec::with_capacity(names.len());
        for n in names {
            let i = ctx.require(n)?;
            if vars.contains(&i) {
                return Err(PolyError::BadCone(format!("variable {n} repeated in chain")));
            }
            vars.push(i);
        }
        Ok(Chain { vars, bound, side })
    }

    pub fn render(&self, ctx: &VarCtx) -> String {
        let names: Vec<&str> = self.vars.iter().map(|&i| ctx.name(i)).collect();
        match self.side {
            Side::Above => {
                let mut s: Vec<String> = names.iter().rev().map(|n| n.to_string()).collect();
                s.push(self.bound.to_string());
                s.join(" > ")
            }
            Side::Below => {
                let mut s = vec![self.bound.to_string()];
                s.extend(names.iter().map(|n| n.to_string()));
                s.join(" > ")
            }
        }
    }
}

/// An open region parametrized by positive reals.
#[derive(Clone, Debug, PartialEq)]
pub enum Cone {
    Chain(Chain),
    /// `x = sum_i w_i * rays[i]` restricted to `vars`.
    Rays { vars: Vec<usize>, rays: Vec<Vec<Rat>> },
    /// `lo < x < hi`, via `x = (lo + hi*t)/(1 + t)`.
    Interval { var: usize, lo: Rat, hi: Rat },
    /// Independent constraints on disjoint variable sets.
    Product(Vec<Cone>),
}

impl Cone {
    pub fn chain(ctx: &VarCtx, text: &str) -> Result<Cone, PolyError> {
        Chain::parse(ctx, text).map(Cone::Chain)
    }

    pub fn rays(ctx: &VarCtx, vars: &[&str], rays: &[&[i64]]) -> Result<Cone, PolyError> {
        let vars = vars.iter().map(|v| ctx.require(v)).collect::<Result<Vec<_>, _>>()?;
        if rays.is_empty() || rays.iter().any(|r| r.len() != vars.len()) {
            return Err(PolyError::BadCone("ray dimension does not match the variable list".into()));
        }
        let rays = rays.iter().map(|r| r.iter().map(|&x| Rat::int(x)).collect()).collect();
        Ok(Cone::Rays { vars, rays })
    }

    pub fn interval(ctx: &VarCtx, var: &str, lo: Rat, hi: Rat) -> Result<Cone, PolyError> {
        if lo >= hi {
            return Err(PolyError::BadCone("empty interval".into()));
        }
        Ok(Cone::Interval { var: ctx.require(var)?, lo, hi })
    }

    fn covered(&self, out: &mut Vec<usize>) {
        match self {
            Cone::Chain(c) => out.extend(&c.vars),
            Cone::Rays { vars, .. } => out.extend(vars),
            Cone::Interval { var, .. } => out.push(*var),
            Cone::Product(parts) => parts.iter().for_each(|p| p.covered(out)),
        }
    }

    fn param_count(&self) -> usize {
        match self {
            Cone::Chain(c) => c.vars.len(),
            Cone::Rays { rays, .. } => rays.len(),
            Cone::Interval { .. } => 1,
            Cone::Product(parts) => parts.iter().map(Cone::param_count).sum(),
        }
    }

    pub fn render(&self, ctx: &VarCtx) -> String {
        match self {
            Cone::Chain(c) => c.render(ctx),
            Cone::Rays { vars, rays } => {
                let names: Vec<&str> = vars.iter().map(|&i| ctx.name(i)).collect();
                let rs: Vec<String> = rays
                    .iter()
                    .map(|r| format!("({})", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                    .collect();
                format!("({}) in cone{{{}}}", names.join(","), rs.join(","))
            }
            Cone::Interval { var, lo, hi } => format!("{lo} < {} < {hi}", ctx.name(*var)),
            Cone::Product(parts) => parts.iter().map(|p| p.render(ctx)).collect::<Vec<_>>().join(", "),
        }
    }

    /// Assigns images to covered variables. Interval variables receive `lo + hi*t`, and the
    /// homogenizing factor `1 + t` is recorded in `homog`.
    fn images(&self, params: &VarCtx, next: &mut usize, images: &mut [Option<Poly>], homog: &mut Vec<(usize, Poly)>) {
        match self {
            Cone::Chain(c) => {
                let mut acc = Poly::constant(params, c.bound.clone());
                for &v in &c.vars {
                    let w = Poly::var_index(params, *next);
                    *next += 1;
                    acc = match c.side {
                        Side::Above => &acc + &w,
                        Side::Below => &acc - &w,
                    };
                    images[v] = Some(acc.clone());
                }
            }
            Cone::Rays { vars, rays } => {
                let first = *next;
                *next += rays.len();
                for (j, &v) in vars.iter().enumerate() {
                    let parts: Vec<Poly> =
                        rays.iter().enumerate().map(|(i, r)| Poly::var_index(params, first + i).scale(&r[j])).collect();
                    images[v] = Some(Poly::sum(params, &parts));
                }
            }
            Cone::Interval { var, lo, hi } => {
                let t = Poly::var_index(params, *next);
                *next += 1;
                images[*var] = Some(&Poly::constant(params, lo.clone()) + &t.scale(hi));
                homog.push((*var, &Poly::one(params) + &t));
            }
            Cone::Product(parts) => parts.iter().for_each(|p| p.images(params, next, images, homog)),
        }
    }

    /// Pulls `p` back to the parameter space (cleared of interval denominators).
    pub fn pull_back(&self, p: &Poly) -> Result<Poly, PolyError> {
        let ctx = p.ctx();
        let mut covered = Vec::new();
        self.covered(&mut covered);
        for v in p.vars_used() {
            if !covered.contains(&v) {
                return Err(PolyError::VariableOutsideChain(ctx.name(v).to_string()));
            }
        }
        let n = self.param_count();
        let names: Vec<String> = (0..n).map(|i| format!("w{i}")).collect();
        let params = VarCtx::new(&names)?;
        let mut images = vec![None; ctx.len()];
        let mut homog = Vec::new();
        let mut next = 0;
        self.images(&params, &mut next, &mut images, &mut homog);
        if homog.is_empty() {
            return p.compose(&params, &images);
        }
        // Homogenize each interval variable x of degree d: x^k -> x^k * s^(d-k), then s -> 1 + t.
        let mut ext_names: Vec<String> = ctx.names().to_vec();
        for k in 0..homog.len() {
            ext_names.push(format!("_hom{k}"));
        }
        let ext = VarCtx::new(&ext_names)?;
        let degs: Vec<u32> = homog.iter().map(|(v, _)| p.degree_in(*v)).collect();
        let terms = p.terms().iter().map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            for (k, (v, _)) in homog.iter().enumerate() {
                exps.push(degs[k] - m.exp(*v));
            }
            (Mono::from_exps(&exps), c.clone())
        });
        let hp = Poly::from_terms(&ext, terms);
        images.extend(homog.into_iter().map(|(_, s)| Some(s)));
        hp.compose(&params, &images)
    }

    /// Draws a point of the open region; parameters are `k/256` with `1 <= k <= 4096`.
    pub fn sample<R: Rng>(&self, nvars: usize, rng: &mut R) -> Vec<Option<Rat>> {
        let n = self.param_count();
        let w: Vec<Rat> = (0..n).map(|_| Rat::frac(rng.gen_range(1..=4096), 256)).collect();
        let mut point = vec![None; nvars];
        let mut next = 0;
        self.sample_into(&w, &mut next, &mut point);
        point
    }

    fn sample_into(&self, w: &[Rat], next: &mut usize, point: &mut [Option<Rat>]) {
        match self {
            Cone::Chain(c) => {
                let mut acc = c.bound.clone();
                for &v in &c.vars {
                    match c.side {
                        Side::Above => acc += &w[*next],
                        Side::Below => acc -= &w[*next],
                    }
                    *next += 1;
                    point[v] = Some(acc.clone());
                }
            }
            Cone::Rays { vars, rays } => {
                for (j, &v) in vars.iter().enumerate() {
                    point[v] = Some(rays.iter().enumerate().map(|(i, r)| &w[*next + i] * &r[j]).sum());
                }
                *next += rays.len();
            }
            Cone::Interval { var, lo, hi } => {
                let t = &w[*next];
                *next += 1;
                point[*var] = Some(&(lo + &(hi * t)) / &(Rat::one() + t));
            }
            Cone::Product(parts) => parts.iter().for_each(|p| p.sample_into(w, next, point)),
        }
    }
}

/// Outcome of a positivity certificate attempt.
#[derive(Clone, Debug, PartialEq)]
pub enum CertificateResult {
    /// Every pulled-back coefficient is nonnegative and at least one is positive.
    Certified { rewritten_terms: usize },
    /// Nothing is implied; lists the negative pulled-back terms.
    Inconclusive { negative: Vec<(String, Rat)>, rewritten_terms: usize },
}

impl CertificateResult {
    pub fn is_certified(&self) -> bool {
        matches!(self, CertificateResult::Certified { .. })
    }
}

impl fmt::Display for CertificateResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateResult::Certified { rewritten_terms } => write!(f, "certified ({rewritten_terms} terms)"),
            CertificateResult::Inconclusive { negative, rewritten_terms } => {
                write!(f, "inconclusive ({} of {rewritten_terms} terms negative)", negative.len())
            }
        }
    }
}

/// Attempts to prove `p > 0` on the open region described by `cone`.
pub fn certify(p: &Poly, cone: &Cone) -> Result<CertificateResult, PolyError> {
    let q = cone.pull_back(p)?;
    let negative: Vec<(String, Rat)> = q
        .terms()
        .iter()
        .filter(|(_, c)| c.is_negative())
        .map(|(m, c)| (Poly::monomial(q.ctx(), m.clone(), Rat::one()).to_string(), c.clone()))
        .collect();
    if negative.is_empty() && !q.is_zero() {
        Ok(CertificateResult::Certified { rewritten_terms: q.len() })
    } else {
        Ok(CertificateResult::Inconclusive { negative, rewritten_terms: q.len() })
    }
}

/// Telescoping-chain certificate: `p > 0` on the open chain region.
pub fn cone_positivity_certificate(p: &Poly, chain: &Chain) -> Result<CertificateResult, PolyError> {
    certify(p, &Cone::Chain(chain.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_expression;

    #[test]
    fn chain_examples() {
        let ctx = VarCtx::of(&["a", "b"]);
        let chain = Chain::parse(&ctx, "b > a > 0").unwrap();
        let sum = parse_expression("a + b", &ctx).unwrap();
        assert!(cone_positivity_certificate(&sum, &chain).unwrap().is_certified());
        let diff = parse_expression("a - b", &ctx).unwrap();
        match cone_positivity_certificate(&diff, &chain).unwrap() {
            CertificateResult::Inconclusive { negative, .. } => {
                assert_eq!(negative, vec![("w1".to_string(), Rat::int(-1))]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn chain_parse_and_render() {
        let ctx = VarCtx::of(&["l1", "l2", "l4"]);
        let c = Chain::parse(&ctx, "0 > l4 > l2 > l1").unwrap();
        assert_eq!(c.side, Side::Below);
        assert_eq!(c.vars, vec![2, 1, 0]);
        assert_eq!(c.render(&ctx), "0 > l4 > l2 > l1");
        let c = Chain::parse(&ctx, "l1 > l2 > 1").unwrap();
        assert_eq!(c.render(&ctx), "l1 > l2 > 1");
        assert!(Chain::parse(&ctx, "l1 > l2").is_err());
        assert!(Chain::parse(&ctx, "0 > l1 > 1").is_err());
        assert!(Chain::parse(&ctx, "l3 > 0").is_err());
    }

    #[test]
    fn outside_variable_is_an_error() {
        let ctx = VarCtx::of(&["a", "b"]);
        let chain = Chain::parse(&ctx, "a > 0").unwrap();
        let p = parse_expression("a*b", &ctx).unwrap();
        assert!(matches!(cone_positivity_certificate(&p, &chain), Err(PolyError::VariableOutsideChain(_))));
    }

    #[test]
    fn interval_certificate() {
        let ctx = VarCtx::of(&["b"]);
        let cone = Cone::interval(&ctx, "b", Rat::zero(), Rat::one()).unwrap();
        assert!(certify(&parse_expression("2 - b", &ctx).unwrap(), &cone).unwrap().is_certified());
        assert!(!certify(&parse_expression("b - 1/2", &ctx).unwrap(), &cone).unwrap().is_certified());
    }

    #[test]
    fn ray_certificate() {
        let ctx = VarCtx::of(&["x", "y"]);
        let cone = Cone::rays(&ctx, &["x", "y"], &[&[1, 1], &[-1, 2]]).unwrap();
        assert!(certify(&parse_expression("y", &ctx).unwrap(), &cone).unwrap().is_certified());
        assert!(!certify(&parse_expression("x", &ctx).unwrap(), &cone).unwrap().is_certified());
    }

    #[test]
    fn zero_is_not_certified() {
        let ctx = VarCtx::of(&["a"]);
        let chain = Chain::parse(&ctx, "a > 0").unwrap();
        assert!(!cone_positivity_certificate(&Poly::zero(&ctx), &chain).unwrap().is_certified());
    }
}
