use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use super::{Mono, PolyError, Rat, VarCtx};

/// Sparse polynomial over the rationals. Terms are kept in strictly decreasing
/// graded-lex order with no zero coefficients, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug)]
pub struct Poly {
    ctx: VarCtx,
    terms: Vec<(Mono, Rat)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        self.ctx == other.ctx && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ctx: &VarCtx) -> Poly {
        Poly { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn constant(ctx: &VarCtx, c: Rat) -> Poly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(Mono::one(ctx.len()), c)] };
        Poly { ctx: ctx.clone(), terms }
    }

    pub fn int(ctx: &VarCtx, n: i64) -> Poly {
        Poly::constant(ctx, Rat::int(n))
    }

    pub fn one(ctx: &VarCtx) -> Poly {
        Poly::int(ctx, 1)
    }

    pub fn var_index(ctx: &VarCtx, i: usize) -> Poly {
        assert!(i < ctx.len(), "variable index out of range");
        Poly { ctx: ctx.clone(), terms: vec![(Mono::var(ctx.len(), i, 1), Rat::one())] }
    }

    pub fn var(ctx: &VarCtx, name: &str) -> Result<Poly, PolyError> {
        Ok(Poly::var_index(ctx, ctx.require(name)?))
    }

    /// All variables of `ctx`, in order.
    pub fn vars(ctx: &VarCtx) -> Vec<Poly> {
        (0..ctx.len()).map(|i| Poly::var_index(ctx, i)).collect()
    }

    pub fn monomial(ctx: &VarCtx, m: Mono, c: Rat) -> Poly {
        assert_eq!(m.arity(), ctx.len(), "monomial arity");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly { ctx: ctx.clone(), terms }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Rat)>>(ctx: &VarCtx, terms: I) -> Poly {
        let mut acc: HashMap<Mono, Rat> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.arity(), ctx.len(), "monomial arity");
            *acc.entry(m).or_default() += c;
        }
        Poly::from_map(ctx, acc)
    }

    fn from_map(ctx: &VarCtx, acc: HashMap<Mono, Rat>) -> Poly {
        let mut terms: Vec<(Mono, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { ctx: ctx.clone(), terms }
    }

    pub fn ctx(&self) -> &VarCtx {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Mono, Rat)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Rat)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Rat {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rat::zero(),
        }
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u64 {
        self.terms.first().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d)
    }

    pub fn leading(&self) -> Option<&(Mono, Rat)> {
        self.terms.first()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.ctx.len()).filter(|&i| self.uses_var(i)).collect()
    }

    fn check_ctx(&self, other: &Poly) -> Result<(), PolyError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ctx(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ctx(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })));
        Poly { ctx: self.ctx.clone(), terms: out }
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ctx));
        }
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let (single, many) = if self.terms.len() == 1 { (self, other) } else { (other, self) };
            let (sm, sc) = &single.terms[0];
            let mut terms = Vec::with_capacity(many.terms.len());
            for (m, c) in &many.terms {
                terms.push((m.mul(sm)?, c * sc));
            }
            return Ok(Poly { ctx: self.ctx.clone(), terms });
        }
        let mut acc: HashMap<Mono, Rat> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)?).or_default() += c1 * c2;
            }
        }
        Ok(Poly::from_map(&self.ctx, acc))
    }

    pub fn checked_pow(&self, k: u32) -> Result<Poly, PolyError> {
        let mut result = Poly::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Panics on exponent overflow; see [`Poly::checked_pow`].
    pub fn pow(&self, k: u32) -> Poly {
        self.checked_pow(k).expect("exponent overflow")
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    /// Product of a list of polynomials over `ctx`.
    pub fn product<'a, I: IntoIterator<Item = &'a Poly>>(ctx: &VarCtx, items: I) -> Poly {
        items.into_iter().fold(Poly::one(ctx), |acc, p| &acc * p)
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a Poly>>(ctx: &VarCtx, items: I) -> Poly {
        let mut acc: HashMap<Mono, Rat> = HashMap::new();
        for p in items {
            assert!(p.ctx == *ctx, "context mismatch");
            for (m, c) in &p.terms {
                *acc.entry(m.clone()).or_default() += c;
            }
        }
        Poly::from_map(ctx, acc)
    }

    /// Simultaneous substitution within the same context.
    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Result<Poly, PolyError> {
        self.substitute_into(&self.ctx.clone(), bindings)
    }

    /// Simultaneous substitution into `target`; unbound variables are carried over by name.
    pub fn substitute_into(&self, target: &VarCtx, bindings: &[(&str, Poly)]) -> Result<Poly, PolyError> {
        let mut images: Vec<Option<Poly>> = vec![None; self.ctx.len()];
        for (name, img) in bindings {
            let i = self.ctx.require(name)?;
            if img.ctx != *target {
                return Err(PolyError::ContextMismatch);
            }
            images[i] = Some(img.clone());
        }
        for (i, slot) in images.iter_mut().enumerate() {
            if slot.is_none() && self.uses_var(i) {
                let name = self.ctx.name(i);
                let j = target.index_of(name).ok_or_else(|| PolyError::UnboundVariable(name.to_string()))?;
                *slot = Some(Poly::var_index(target, j));
            }
        }
        self.compose(target, &images)
    }

    /// Replaces variable `i` by `images[i]` (all living in `target`).
    pub fn compose(&self, target: &VarCtx, images: &[Option<Poly>]) -> Result<Poly, PolyError> {
        let mut cache: HashMap<(usize, u32), Poly> = HashMap::new();
        let mut acc: HashMap<Mono, Rat> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images[i].as_ref().ok_or_else(|| PolyError::UnboundVariable(self.ctx.name(i).to_string()))?;
                let pw = match cache.get(&(i, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = img.checked_pow(e)?;
                        cache.insert((i, e), p.clone());
                        p
                    }
                };
                term = term.checked_mul(&pw)?;
            }
            for (tm, tc) in term.terms {
                *acc.entry(tm).or_default() += tc;
            }
        }
        Ok(Poly::from_map(target, acc))
    }

    /// Re-expresses the polynomial in `target`, mapping variables by name.
    pub fn embed(&self, target: &VarCtx) -> Result<Poly, PolyError> {
        let mut map = Vec::with_capacity(self.ctx.len());
        for i in 0..self.ctx.len() {
            map.push(if self.uses_var(i) { Some(target.require(self.ctx.name(i))?) } else { None });
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut out = Mono::one(target.len());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    out.set(map[i].expect("used variable is mapped"), e);
                }
            }
            (out, c.clone())
        });
        Ok(Poly::from_terms(target, terms))
    }

    /// Evaluates at a full point (one value per context variable).
    pub fn eval(&self, point: &[Rat]) -> Result<Rat, PolyError> {
        if point.len() != self.ctx.len() {
            let missing = self.ctx.names().get(point.len()).cloned().unwrap_or_default();
            return Err(PolyError::UnboundVariable(missing));
        }
        let mut powers: Vec<Vec<Rat>> = point.iter().map(|x| vec![Rat::one(), x.clone()]).collect();
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().expect("nonempty") * &point[i];
                    pw.push(next);
                }
                t *= &pw[e as usize];
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluates with named bindings; only variables that occur must be bound.
    pub fn eval_named(&self, bindings: &[(&str, Rat)]) -> Result<Rat, PolyError> {
        let mut point = vec![None; self.ctx.len()];
        for (name, v) in bindings {
            point[self.ctx.require(name)?] = Some(v.clone());
        }
        let mut full = Vec::with_capacity(point.len());
        for (i, v) in point.into_iter().enumerate() {
            match v {
                Some(v) => full.push(v),
                None if self.uses_var(i) => return Err(PolyError::UnboundVariable(self.ctx.name(i).to_string())),
                None => full.push(Rat::zero()),
            }
        }
        self.eval(&full)
    }

    /// `order`-th formal partial derivative in variable `i`.
    pub fn diff_index(&self, i: usize, order: u32) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e < order {
                continue;
            }
            let mut factor = Rat::one();
            for k in 0..order {
                factor *= &Rat::int((e - k) as i64);
            }
            let mut nm = m.clone();
            nm.set(i, e - order);
            terms.push((nm, c * &factor));
        }
        Poly::from_terms(&self.ctx, terms)
    }

    pub fn differentiate(&self, var: &str, order: u32) -> Result<Poly, PolyError> {
        Ok(self.diff_index(self.ctx.require(var)?, order))
    }

    /// Exact quotient `self / den`; fails with `NotDivisible` when the remainder is nonzero.
    pub fn exact_div(&self, den: &Poly) -> Result<Poly, PolyError> {
        self.check_ctx(den)?;
        let (lm, lc) = den.leading().cloned().ok_or(PolyError::DivisionByZero)?;
        let mut rem: BTreeMap<Mono, Rat> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Mono, Rat)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let Some(qm) = lm.quotient_of(&m) else {
                return Err(PolyError::NotDivisible { remainder_terms: rem.len() + 1 });
            };
            let qc = &c / &lc;
            for (dm, dc) in &den.terms[1..] {
                let key = qm.mul(dm)?;
                let delta = &qc * dc;
                let drop = {
                    let slot = rem.entry(key.clone()).or_default();
                    *slot -= &delta;
                    slot.is_zero()
                };
                if drop {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        Ok(Poly { ctx: self.ctx.clone(), terms: quot })
    }

    /// Square root with positive leading coefficient, if `self` is the square of a polynomial.
    pub fn sqrt_exact(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let (m0, c0) = self.leading()?;
        if !m0.all_even() {
            return None;
        }
        let lead_m = m0.halve();
        let lead_c = c0.sqrt_exact()?;
        let two_lead = &lead_c + &lead_c;
        let mut root = Poly::monomial(&self.ctx, lead_m.clone(), lead_c);
        loop {
            let rem = self - &root.pow(2);
            let Some((rm, rc)) = rem.leading() else {
                return Some(root);
            };
            let qm = lead_m.quotient_of(rm)?;
            let smallest = &root.terms.last().expect("nonempty root").0;
            if qm >= *smallest {
                return None;
            }
            root.terms.push((qm, rc / &two_lead));
        }
    }

    /// Coefficients with respect to variable `i`: entry `k` multiplies `x_i^k`.
    pub fn coefficients_in(&self, i: usize) -> Vec<Poly> {
        let d = self.degree_in(i) as usize;
        let mut parts: Vec<Vec<(Mono, Rat)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            nm.set(i, 0);
            parts[m.exp(i) as usize].push((nm, c.clone()));
        }
        parts.into_iter().map(|t| Poly::from_terms(&self.ctx, t)).collect()
    }

    /// Largest absolute coefficient bit size; a growth indicator for reports.
    pub fn max_coeff_bits(&self) -> u64 {
        self.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    /// Panics on context mismatch; see [`Poly::checked_add`].
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("context mismatch")
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("context mismatch")
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("context mismatch or exponent overflow")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Add<&Poly> for Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        &self + rhs
    }
}

impl Sub<&Poly> for Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        &self - rhs
    }
}

impl Mul<&Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        &self * rhs
    }
}

impl Mul<&Rat> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Rat) -> Poly {
        self.scale(rhs)
    }
}

impl Mul<Rat> for Poly {
    type Output = Poly;
    fn mul(self, rhs: Rat) -> Poly {
        self.scale(&rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> VarCtx {
        VarCtx::of(&["x", "y"])
    }

    #[test]
    fn difference_of_squares() {
        let c = ctx();
        let (x, y) = (Poly::var(&c, "x").unwrap(), Poly::var(&c, "y").unwrap());
        let p = &(&x - &y) * &(&x + &y);
        assert_eq!(p, &x.pow(2) - &y.pow(2));
    }

    #[test]
    fn exact_division_and_failure() {
        let c = ctx();
        let (x, y) = (Poly::var(&c, "x").unwrap(), Poly::var(&c, "y").unwrap());
        let num = &x.pow(2) - &y.pow(2);
        assert_eq!(num.exact_div(&(&x - &y)).unwrap(), &x + &y);
        assert!(matches!((&num + &x).exact_div(&(&x - &y)), Err(PolyError::NotDivisible { .. })));
        assert!(matches!(num.exact_div(&Poly::zero(&c)), Err(PolyError::DivisionByZero)));
    }

    #[test]
    fn square_root() {
        let c = ctx();
        let (x, y) = (Poly::var(&c, "x").unwrap(), Poly::var(&c, "y").unwrap());
        let r = &(&x.scale(&Rat::int(2)) - &y) + &Poly::int(&c, 3);
        assert_eq!(r.pow(2).sqrt_exact().unwrap(), r);
        assert_eq!((&r.pow(2) + &y).sqrt_exact(), None);
        assert_eq!((&x.pow(2) + &y.pow(2)).sqrt_exact(), None);
    }

    #[test]
    fn derivative_reorders() {
        let c = ctx();
        let (x, y) = (Poly::var(&c, "x").unwrap(), Poly::var(&c, "y").unwrap());
        let p = &(&x * &y.pow(3)) + &x.pow(3);
        assert_eq!(p.diff_index(0, 1), &y.pow(3) + &x.pow(2).scale(&Rat::int(3)));
        assert_eq!(x.pow(3).diff_index(0, 2), x.scale(&Rat::int(6)));
        assert!(Poly::int(&c, 5).diff_index(0, 1).is_zero());
    }

    #[test]
    fn substitution_into_other_context() {
        let c = ctx();
        let t = VarCtx::of(&["u"]);
        let p = &Poly::var(&c, "x").unwrap() * &Poly::var(&c, "y").unwrap();
        let u = Poly::var(&t, "u").unwrap();
        let q = p.substitute_into(&t, &[("x", u.clone()), ("y", &u + &Poly::one(&t))]).unwrap();
        assert_eq!(q, &u.pow(2) + &u);
        assert!(matches!(p.substitute_into(&t, &[("x", u.clone())]), Err(PolyError::UnboundVariable(_))));
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = Poly::var(&ctx(), "x").unwrap();
        let b = Poly::var(&VarCtx::of(&["x"]), "x").unwrap();
        assert_eq!(a.checked_add(&b), Err(PolyError::ContextMismatch));
        assert_eq!(a.checked_mul(&b), Err(PolyError::ContextMismatch));
    }

    #[test]
    fn coefficients_in_variable() {
        let c = ctx();
        let (x, y) = (Poly::var(&c, "x").unwrap(), Poly::var(&c, "y").unwrap());
        let p = &(&x.pow(2) * &y) + &(&y + &Poly::int(&c, 2));
        let parts = p.coefficients_in(0);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[2], y);
        assert!(parts[1].is_zero());
        assert_eq!(parts[0], &y + &Poly::int(&c, 2));
    }
}
