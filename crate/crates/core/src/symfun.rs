//! Symmetric functions of the principal curvatures.

use std::sync::OnceLock;

use crate::polycore::{sum_of, Poly, Rat, Scalar, VarCtx};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("index {0} is outside 1..=5")]
    OutOfRange(usize),
}

/// The shared context `l1, ..., l5`.
pub fn lambda_ctx() -> VarCtx {
    static CTX: OnceLock<VarCtx> = OnceLock::new();
    CTX.get_or_init(|| VarCtx::of(&["l1", "l2", "l3", "l4", "l5"])).clone()
}

/// `[l1, l2, l3, l4, l5]` as polynomials.
pub fn lambda_vars() -> [Poly; 5] {
    let ctx = lambda_ctx();
    std::array::from_fn(|i| Poly::var_index(&ctx, i))
}

/// `[l1, l2, l3, l4, -(l1+l2+l3+l4)]`.
pub fn lambda_vars_trace_free() -> [Poly; 5] {
    let [l1, l2, l3, l4, _] = lambda_vars();
    let l5 = -(&(&(&l1 + &l2) + &l3) + &l4);
    [l1, l2, l3, l4, l5]
}

/// `e_k(xs)`; `e_0 = 1`, and `e_k = 0` for `k > xs.len()`.
pub fn esym<T: Scalar>(k: usize, xs: &[T]) -> T {
    let like = &xs[0];
    let mut e = vec![like.zero_like(); k + 1];
    e[0] = like.one_like();
    for x in xs {
        for j in (1..=k).rev() {
            e[j] = e[j].plus(&e[j - 1].times(x));
        }
    }
    e.swap_remove(k)
}

/// `p_k(xs) = sum x^k`.
pub fn psum<T: Scalar>(k: u32, xs: &[T]) -> T {
    sum_of(&xs[0], xs.iter().map(|x| x.power(k)))
}

/// `sigma_k(l1..l5)` as a polynomial in [`lambda_ctx`].
pub fn elementary_symmetric(k: usize) -> Result<Poly, SymError> {
    if !(1..=5).contains(&k) {
        return Err(SymError::OutOfRange(k));
    }
    Ok(esym(k, &lambda_vars()))
}

pub fn power_sum(k: usize) -> Result<Poly, SymError> {
    if !(1..=5).contains(&k) {
        return Err(SymError::OutOfRange(k));
    }
    Ok(psum(k as u32, &lambda_vars()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NewtonDirection {
    PowerToSigma,
    SigmaToPower,
}

/// Newton's identities for five variables.
///
/// `p_k - s1 p_(k-1) + ... + (-1)^(k-1) s_(k-1) p_1 + (-1)^k k s_k = 0`.
pub fn newton_convert(direction: NewtonDirection, input: &[Rat; 5]) -> [Rat; 5] {
    let mut s = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    let mut p = s.clone();
    for k in 1..=5usize {
        let mut acc = Rat::zero();
        for i in 1..k {
            let term = &s[i - 1] * &p[k - i - 1];
            if i % 2 == 1 {
                acc -= &term;
            } else {
                acc += &term;
            }
        }
        let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
        match direction {
            NewtonDirection::PowerToSigma => {
                p[k - 1] = input[k - 1].clone();
                s[k - 1] = -(&p[k - 1] + &acc) / (sign * Rat::int(k as i64));
            }
            NewtonDirection::SigmaToPower => {
                s[k - 1] = input[k - 1].clone();
                p[k - 1] = -(&acc + &(sign * Rat::int(k as i64) * &s[k - 1]));
            }
        }
    }
    match direction {
        NewtonDirection::PowerToSigma => s,
        NewtonDirection::SigmaToPower => p,
    }
}

/// Newton residual `p_k - s1 p_(k-1) + ... + (-1)^k k s_k` for `k` in 1..=5.
pub fn newton_residual<T: Scalar>(k: usize, xs: &[T]) -> T {
    let mut acc = psum(k as u32, xs);
    for i in 1..k {
        let term = esym(i, xs).times(&psum((k - i) as u32, xs));
        acc = if i % 2 == 1 { acc.minus(&term) } else { acc.plus(&term) };
    }
    let last = esym(k, xs).scaled(&Rat::int(k as i64));
    if k.is_multiple_of(2) {
        acc.plus(&last)
    } else {
        acc.minus(&last)
    }
}

/// Substitutes `l5 -> -(l1+l2+l3+l4)`.
pub fn trace_zero_eliminate(p: &Poly) -> Poly {
    let [.., l5] = lambda_vars_trace_free();
    p.substitute(&[("l5", l5)]).expect("polynomial over the curvature context")
}

/// `h/5 - S f3 / 6`, equal to `sigma_5` for trace-free tuples.
pub fn sigma5_relation(s: &Rat, f3: &Rat, h: &Rat) -> Rat {
    h / &Rat::int(5) - &(s * f3) / &Rat::int(6)
}

/// `r`-th normalized mean curvature `sigma_r / C(n, r)`.
pub fn mean_curvature<T: Scalar>(r: usize, xs: &[T]) -> T {
    let n = xs.len() as i64;
    let mut binom = 1i64;
    for i in 0..r as i64 {
        binom = binom * (n - i) / (i + 1);
    }
    esym(r, xs).scaled(&Rat::frac(1, binom))
}

/// Elementary symmetric and power sums of one tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct SymBasis<T> {
    pub sigma: [T; 5],
    pub power: [T; 5],
}

impl<T: Scalar> SymBasis<T> {
    pub fn of(xs: &[T; 5]) -> SymBasis<T> {
        SymBasis {
            sigma: std::array::from_fn(|k| esym(k + 1, xs)),
            power: std::array::from_fn(|k| psum(k as u32 + 1, xs)),
        }
    }

    pub fn s(&self) -> &T {
        &self.power[1]
    }

    pub fn f3(&self) -> &T {
        &self.power[2]
    }

    pub fn f4(&self) -> &T {
        &self.power[3]
    }

    pub fn h(&self) -> &T {
        &self.power[4]
    }
}

/// `F(x) = x^5 - s1 x^4 + s2 x^3 - s3 x^2 + s4 x - s5` and `F0 = F + s5`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    /// Coefficients of `F` from `x^0` up to `x^5`.
    pub f: [Rat; 6],
    pub f0: [Rat; 6],
    /// `C_h = -S f3 / 6`.
    pub c_h: Rat,
}

impl CharPoly {
    pub fn from_roots(xs: &[Rat; 5]) -> CharPoly {
        let b = SymBasis::of(xs);
        let [s1, s2, s3, s4, s5] = b.sigma.clone();
        let f = [-s5.clone(), s4, -s3, s2, -s1, Rat::one()];
        let mut f0 = f.clone();
        f0[0] = Rat::zero();
        let c_h = -(b.s() * b.f3()) / Rat::int(6);
        CharPoly { f, f0, c_h }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.f.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// `F0(x) - h/5 - C_h`, which equals `F(x)` for trace-free roots.
    pub fn eval_via_h(&self, x: &Rat, h: &Rat) -> Rat {
        let f0 = self.f0.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c);
        f0 - h / &Rat::int(5) - &self.c_h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    #[test]
    fn term_counts() {
        assert_eq!(elementary_symmetric(1).unwrap().len(), 5);
        assert_eq!(elementary_symmetric(3).unwrap().len(), 10);
        assert_eq!(elementary_symmetric(5).unwrap().len(), 1);
        assert!(elementary_symmetric(3).unwrap().terms().iter().all(|(_, c)| c.is_one()));
        assert_eq!(elementary_symmetric(6), Err(SymError::OutOfRange(6)));
        assert_eq!(power_sum(0), Err(SymError::OutOfRange(0)));
    }

    #[test]
    fn newton_symbolic() {
        for k in 1..=5 {
            assert!(newton_residual(k, &lambda_vars()).is_zero(), "k = {k}");
        }
        let p2 = power_sum(2).unwrap();
        let s1 = elementary_symmetric(1).unwrap();
        let s2 = elementary_symmetric(2).unwrap();
        assert!((&(&p2 - &(&s1 * &s1)) + &s2.scale(&r(2))).is_zero());
    }

    #[test]
    fn newton_roots_one_minus_one() {
        let p = [r(0), r(2), r(0), r(2), r(0)];
        let s = newton_convert(NewtonDirection::PowerToSigma, &p);
        assert_eq!(s, [r(0), r(-1), r(0), r(0), r(0)]);
        assert_eq!(newton_convert(NewtonDirection::SigmaToPower, &s), p);
        let zero = [r(0), r(0), r(0), r(0), r(0)];
        assert_eq!(newton_convert(NewtonDirection::PowerToSigma, &zero), zero);
    }

    #[test]
    fn trace_elimination() {
        assert!(trace_zero_eliminate(&elementary_symmetric(1).unwrap()).is_zero());
        let l5 = lambda_vars()[4].clone();
        let got = trace_zero_eliminate(&(&l5 * &l5));
        let [l1, l2, l3, l4, _] = lambda_vars();
        let s = &(&(&l1 + &l2) + &l3) + &l4;
        assert_eq!(got, &s * &s);
    }

    #[test]
    fn sigma5_two_ways() {
        let xs = [r(-6), r(-5), r(1), r(3), r(7)];
        let b = SymBasis::of(&xs);
        assert_eq!(sigma5_relation(b.s(), b.f3(), b.h()), b.sigma[4]);
        let zero = [r(0), r(0), r(0), r(0), r(0)];
        let z = SymBasis::of(&zero);
        assert_eq!(sigma5_relation(z.s(), z.f3(), z.h()), r(0));
    }

    #[test]
    fn char_poly_identity() {
        let xs = [r(-6), r(-5), r(1), r(3), r(7)];
        let cp = CharPoly::from_roots(&xs);
        let h = SymBasis::of(&xs).h().clone();
        for x in -3..4 {
            assert_eq!(cp.eval(&r(x)), cp.eval_via_h(&r(x), &h));
        }
        assert_eq!(cp.eval(&r(7)), r(0));
    }
}
