//! The identity catalog.

#![allow(clippy::needless_range_loop)]

use crate::assumption::{a_closed_generic, a_direct_unchecked, closed_a5, vandermonde_sq};
use crate::curvature::{AuxQuantities, TripleInvariants};
use crate::polycore::{product_of, sum_of, Poly, PolyError, Rat};
use crate::symfun::{esym, lambda_ctx, lambda_vars, lambda_vars_trace_free};

use super::exprs::{self, abcd, l, pol6_factor, to_abcd, x, x_ctx};
use super::{CatalogMode, Check, IdentityFn};

pub(super) const TABLE: &[(&str, IdentityFn)] = &[
    ("VEC1", vec1),
    ("VEC2", vec2),
    ("EQP4", eqp4),
    ("EQQ4", eqq4),
    ("EQC1", eqc1),
    ("LNEW1", lnew1),
    ("LNEW2", lnew2),
    ("TSQU", tsqu),
    ("TMIX", tmix),
    ("TCON", tcon),
    ("EQL", eql),
    ("AL", al),
    ("ROUTES", routes),
    ("UI_FORM", ui_form),
    ("DEGEN_221", degen_221),
    ("DEGEN_TOP", degen_top),
    ("CASE1_A5", case1_a5),
    ("CASE1_A3", case1_a3),
    ("CASE2_A12", case2_a12),
    ("CASE3_A2", case3_a2),
    ("CASE4_A4", case4_a4),
    ("CASE4_SPLIT", case4_split),
    ("PAIR_FORMS", pair_forms),
    ("TIE_SYMMETRY", tie_symmetry),
    ("G_BOUNDARY", g_boundary),
    ("POL3_BOUNDARY", pol3_boundary),
    ("CASE3_DISC", case3_disc),
    ("SIGMA3_CASE2", sigma3_case2),
    ("POL5_BOUNDARY", pol5_boundary),
    ("POL6_FAC", pol6_fac),
];

fn aux() -> AuxQuantities<Poly> {
    let [l1, l2, l3, l4, _] = lambda_vars();
    AuxQuantities::of(&[l1, l2, l3, l4])
}

fn l4vars() -> [Poly; 4] {
    let [l1, l2, l3, l4, _] = lambda_vars();
    [l1, l2, l3, l4]
}

fn int(n: i64) -> Rat {
    Rat::int(n)
}

/// `prod_{i<j in idx} (l_i - l_j)^2` over 1-based indices of `l1..l4`.
fn p3(idx: &[usize]) -> Poly {
    let l = l4vars();
    let mut acc = Poly::one(&lambda_ctx());
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            acc = &acc * &(&l[i - 1] - &l[j - 1]).pow(2);
        }
    }
    acc
}

fn vec1(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a = aux();
    let vq: Vec<Poly> = (0..4).map(|k| &a.v_k[k] * &a.q[k]).collect();
    c.zero("v4q4-v3q3+v2q2-v1q1", &(&(&(&vq[3] - &vq[2]) + &vq[1]) - &vq[0]));
    Ok(())
}

fn vec2(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a = aux();
    let l = l4vars();
    let t: Vec<Poly> = (0..4).map(|k| &(&l[k] * &a.v_k[k]) * &a.q[k]).collect();
    let lhs = &(&(&t[2] - &t[3]) - &t[1]) + &t[0];
    c.equal("-l4v4q4+l3v3q3-l2v2q2+l1v1q1 = 3v", &lhs, &a.v.scale(&int(3)));
    Ok(())
}

/// Other three of `l1..l4` and their symmetric functions.
fn triple_without(k: usize) -> TripleInvariants<Poly> {
    let l = l4vars();
    let o: Vec<&Poly> = (0..4).filter(|&i| i != k).map(|i| &l[i]).collect();
    TripleInvariants::of(o[0], o[1], o[2])
}

fn eqp4(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a = aux();
    let s3 = esym(3, &lambda_vars_trace_free());
    for k in 0..4 {
        let t = triple_without(k);
        let rhs = &(&(&t.s1 * &t.s2).scale(&int(2)) - &t.s3.scale(&int(3))) + &s3.scale(&int(2));
        c.equal(format!("p{}", k + 1), &a.p[k], &rhs);
    }
    Ok(())
}

fn eqq4(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a = aux();
    let tf = lambda_vars_trace_free();
    let s2 = esym(2, &tf);
    let l = l4vars();
    for k in 0..4 {
        let t = triple_without(k);
        let rhs = &(&t.s1.pow(2) + &t.s2.scale(&int(2))) - &s2;
        c.equal(format!("q{} via sigma2", k + 1), &a.q[k], &rhs);
        let alt = &(&t.s1.pow(2).scale(&int(2)) + &t.s2) - &(&l[k] * &tf[4]);
        c.equal(format!("q{} via l5", k + 1), &a.q[k], &alt);
    }
    Ok(())
}

fn eqc1(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let tf = lambda_vars_trace_free();
    let s2 = esym(2, &tf);
    for k in 0..4 {
        let t = triple_without(k);
        let rhs = &(&(&tf[k] * &tf[4]) - &t.s1.pow(2)) + &t.s2;
        c.equal(format!("sigma2 via l{}", k + 1), &s2, &rhs);
    }
    Ok(())
}

/// `P3(others) (q_k^2 + sign prod_{i in others}(l_i - l_k)(m lambda - 2 l_k))`.
fn lnew_rhs(a: &AuxQuantities<Poly>, k: usize, sign: i64, m: i64) -> Poly {
    let l = l4vars();
    let others: Vec<usize> = (1..=4).filter(|&i| i != k).collect();
    let prod = Poly::product(&lambda_ctx(), &others.iter().map(|&i| &l[i - 1] - &l[k - 1]).collect::<Vec<_>>());
    let lin = &a.lambda_bar.scale(&int(m)) - &l[k - 1].scale(&int(2));
    let inner = &a.q[k - 1].pow(2) + &(&prod * &lin).scale(&int(sign));
    &p3(&others) * &inner
}

fn lnew1(c: &mut Check, _: usize, mode: CatalogMode) -> Result<(), PolyError> {
    let a = aux();
    let lhs = &(&a.bkl(3, 4).clone() - a.bkl(2, 4)) + a.bkl(1, 4);
    let m = if mode.negative_control { 4 } else { 3 };
    c.equal("b34-b24+b14", &lhs, &lnew_rhs(&a, 4, -1, m));
    Ok(())
}

fn lnew2(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a = aux();
    let lhs3 = &(a.bkl(3, 4) + a.bkl(2, 3)) - a.bkl(1, 3);
    c.equal("b34+b23-b13", &lhs3, &lnew_rhs(&a, 3, -1, 3));
    let lhs2 = &(a.bkl(2, 3) + a.bkl(1, 2)) - a.bkl(2, 4);
    c.equal("b23+b12-b24", &lhs2, &lnew_rhs(&a, 2, -1, 3));
    let lhs1 = &(a.bkl(1, 2) - a.bkl(1, 3)) + a.bkl(1, 4);
    c.equal("b12-b13+b14", &lhs1, &lnew_rhs(&a, 1, -1, 3));
    Ok(())
}

fn pair_rest(k: usize) -> (usize, usize) {
    let r: Vec<usize> = (1..=3).filter(|&i| i != k).collect();
    (r[0], r[1])
}

fn tsqu(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let l = l4vars();
    let ctx = lambda_ctx();
    let mut sum = Poly::zero(&ctx);
    for k in 1..=3 {
        let (m, n) = pair_rest(k);
        let mut prod = &l[m - 1] - &l[n - 1];
        for i in 1..=4 {
            for j in i + 1..=4 {
                if (i, j) != (k, 4) {
                    prod = &prod * &(&l[i - 1] - &l[j - 1]);
                }
            }
        }
        sum = if k % 2 == 1 { &sum + &prod } else { &sum - &prod };
    }
    c.equal("T_squ", &sum, &p3(&[1, 2, 3]));
    Ok(())
}

fn v4() -> Poly {
    aux().v
}

fn tmix(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let l = l4vars();
    let mut inner = Poly::zero(&lambda_ctx());
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        let k = 6 - i - j;
        let term = &(&l[i - 1] - &l[j - 1]) * &(&(&l[i - 1] + &l[j - 1]).scale(&int(2)) + &l[k - 1]);
        inner = if (i + j + 1) % 2 == 0 { &inner + &term } else { &inner - &term };
    }
    c.zero("T_mix", &(&v4() * &inner).scale(&int(-2)));
    Ok(())
}

fn tcon(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let l = l4vars();
    let a = aux();
    let mut inner = Poly::zero(&lambda_ctx());
    for (k, ll) in [(1, 2), (1, 3), (2, 3)] {
        let m = 6 - k - ll;
        let sq = (&(&l[k - 1] + &l[ll - 1]).scale(&int(2)) + &l[m - 1]).pow(2);
        let term = &(&(&l[k - 1] - &l[ll - 1]) * &(&l[m - 1] - &l[3])) * &sq;
        inner = if (k + ll + 1) % 2 == 0 { &inner + &term } else { &inner - &term };
    }
    let lhs = &v4() * &inner;
    let prod = Poly::product(&lambda_ctx(), &(0..3).map(|i| &l[i] - &l[3]).collect::<Vec<_>>());
    let lin = &a.lambda_bar.scale(&int(3)) - &l[3].scale(&int(2));
    let rhs = -&(&(&p3(&[1, 2, 3]) * &prod) * &lin);
    c.equal("T_con", &lhs, &rhs);
    Ok(())
}

fn v2_without(k: usize) -> Poly {
    let others: Vec<usize> = (1..=4).filter(|&i| i != k + 1).collect();
    p3(&others)
}

fn eql(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a = aux();
    let l = l4vars();
    let cal = a.calligraphic_a();
    let ctx = lambda_ctx();
    let rhs = Poly::sum(&ctx, &(0..4).map(|k| &(&v2_without(k) * &a.p[k]) * &a.q[k]).collect::<Vec<_>>());
    c.equal("calA = sum V_k p_k q_k", &cal, &rhs);
    let signed_b = Poly::sum(
        &ctx,
        &crate::curvature::PAIRS
            .iter()
            .map(|&(k, ll)| if (k + ll + 1) % 2 == 0 { a.bkl(k, ll).clone() } else { -a.bkl(k, ll) })
            .collect::<Vec<_>>(),
    );
    let tail = Poly::sum(
        &ctx,
        &(0..4)
            .map(|k| {
                let prod = Poly::product(&ctx, &(0..4).filter(|&i| i != k).map(|i| &a.lambda_bar + &l[i]).collect::<Vec<_>>());
                &(&a.q[k] * &v2_without(k)) * &prod
            })
            .collect::<Vec<_>>(),
    );
    let b_form = &(&a.lambda_bar.scale(&int(2)) * &signed_b) - &tail;
    c.equal("calA via b^(kl)", &cal, &b_form);
    let mid = Poly::sum(
        &ctx,
        &(0..4)
            .map(|k| {
                let prod = Poly::product(&ctx, &(0..4).filter(|&i| i != k).map(|i| &a.lambda_bar + &l[i]).collect::<Vec<_>>());
                let inner = &(&a.lambda_bar * &a.q[k].pow(2)) - &(&prod * &a.q[k]);
                &v2_without(k) * &inner
            })
            .collect::<Vec<_>>(),
    );
    c.equal("calA = sum V_k (lambda q_k^2 - prod q_k)", &cal, &mid);
    let xi_sum = Poly::sum(&ctx, &(0..4).map(|k| &a.xi[k] - &a.q[k]).collect::<Vec<_>>());
    c.zero("xi_k = q_k", &xi_sum);
    Ok(())
}

fn al(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a = aux();
    let direct = a_direct_unchecked(&lambda_vars_trace_free());
    c.equal("A(5) = calA", &direct[4], &a.calligraphic_a());
    c.equal("A(5) closed form", &direct[4], &closed_a5(&l4vars()));
    let l = l4vars();
    let expanded = Poly::sum(
        &lambda_ctx(),
        &(0..4).map(|k| &(&a.v_k[k].pow(2) * &a.p[k]) * &a.q[k]).collect::<Vec<_>>(),
    );
    c.equal("A(5) = sum v_k^2 p_k q_k", &direct[4], &expanded);
    for k in 0..4 {
        let t = if k % 2 == 1 { a.t[k].clone() } else { -&a.t[k] };
        let rhs = -&(&t + &(&l[k] * &a.q[k]));
        c.equal(format!("p{} = -(t + l q)", k + 1), &a.p[k], &rhs);
    }
    Ok(())
}

fn routes(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let tf = lambda_vars_trace_free();
    let direct = a_direct_unchecked(&tf);
    let closed = a_closed_generic(&tf).expect("trace-free by construction");
    for r in 0..5 {
        c.equal(format!("A({})", r + 1), &direct[r], &closed[r]);
    }
    Ok(())
}

/// The `L(r)` bracket times `prod (l_i - l_j)^2 prod_{p != r} (l_r - l_p)`, one exact division per term.
pub(super) fn lbridge(c: &mut Check, r: usize, _: CatalogMode) -> Result<(), PolyError> {
    let xs = lambda_vars_trace_free();
    let ctx = lambda_ctx();
    let r = r - 1;
    let w = product_of(&xs[0], (0..5).filter(|&p| p != r).map(|p| &xs[r] - &xs[p]));
    let v = &vandermonde_sq(&xs) * &w;
    let pi = |p: usize| product_of(&xs[0], (0..5).filter(|&k| k != p).map(|k| &xs[k] - &xs[p]));
    let pis: Vec<Poly> = (0..5).map(pi).collect();
    let mut total = Poly::zero(&ctx);
    let mut cleared = |num: &Poly, den: &Poly, c: &mut Check| -> Result<(), PolyError> {
        let q = v.exact_div(den)?;
        c.observe(&q);
        total = &total + &(num * &q);
        Ok(())
    };
    let one = Poly::one(&ctx);
    for p in (0..5).filter(|&p| p != r) {
        let d = &xs[r] - &xs[p];
        cleared(&one, &(&(&d * &pis[p]) * &pis[p]), c)?;
        cleared(&one, &(&(&d * &pis[p]) * &pis[r]), c)?;
    }
    for p in (0..5).filter(|&p| p != r) {
        for q in (0..5).filter(|&q| q != r && q != p) {
            let den = &(&(&(&xs[r] - &xs[p]) * &(&xs[r] - &xs[q])) * &pis[p]) * &pis[q];
            cleared(&xs[r], &den, c)?;
        }
    }
    let a = a_direct_unchecked(&xs);
    c.equal(format!("L({}) * V = A({})", r + 1, r + 1), &total, &(&a[r] * &w));
    Ok(())
}

/// `u_i` cleared by `prod_{k != i} (l_k - l_i)^2` is invariant under swapping two of the other indices.
fn ui_form(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let xs = lambda_vars();
    let names = ["l1", "l2", "l3", "l4", "l5"];
    for i in 0..5 {
        let others: Vec<usize> = (0..5).filter(|&k| k != i).collect();
        let d = product_of(&xs[0], others.iter().map(|&k| (&xs[k] - &xs[i]).pow(2)));
        let mut num = Poly::zero(&lambda_ctx());
        for &k in &others {
            let den = &(&xs[k] - &xs[i]).pow(2)
                * &product_of(&xs[0], others.iter().filter(|&&j| j != k).map(|&j| &xs[j] - &xs[i]));
            num = &num + &(&(&xs[k] + &xs[i]) * &d.exact_div(&den)?);
        }
        c.observe(&num);
        for (a, &j) in others.iter().enumerate() {
            for &k in &others[a + 1..] {
                let swapped = num.substitute(&[(names[j], xs[k].clone()), (names[k], xs[j].clone())])?;
                c.equal(format!("u{} swap l{} l{}", i + 1, j + 1, k + 1), &num, &swapped);
            }
        }
    }
    Ok(())
}

fn degen_221(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let [l1, _, l3, _, l5] = lambda_vars();
    let arrangements = [
        ("l2=l1, l4=l3", [l1.clone(), l1.clone(), l3.clone(), l3.clone(), -&(&l1 + &l3).scale(&int(2))]),
        ("l2=l1, l4=l5", [l1.clone(), l1.clone(), -&(&l1 + &l5).scale(&int(2)), l5.clone(), l5.clone()]),
        ("l3=l2, l5=l4", {
            let [_, l2, _, l4, _] = lambda_vars();
            [-&(&l2 + &l4).scale(&int(2)), l2.clone(), l2, l4.clone(), l4]
        }),
    ];
    for (label, xs) in arrangements {
        let a = a_direct_unchecked(&xs);
        for (r, v) in a.iter().enumerate() {
            c.zero(format!("{label}: A({})", r + 1), v);
        }
    }
    Ok(())
}

/// `A(3)` with `l4 = l5` and `l3 = -l1-l2-2l5`, divided by `-2 l5 ((l1-l2)(l1-l5)(l2-l5))^2`, is a square.
pub fn degen_top_square() -> Result<(Poly, Option<Poly>), PolyError> {
    let [l1, l2, _, _, l5] = lambda_vars();
    let l3 = -&(&(&l1 + &l2) + &l5.scale(&int(2)));
    let xs = [l1.clone(), l2.clone(), l3, l5.clone(), l5.clone()];
    let a3 = a_direct_unchecked(&xs)[2].clone();
    let den = &(&(&(&l1 - &l2) * &(&l1 - &l5)) * &(&l2 - &l5)).pow(2) * &l5.scale(&int(-2));
    let quot = a3.exact_div(&den)?;
    let root = quot.sqrt_exact();
    Ok((a3, root))
}

fn degen_top(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let (a3, root) = degen_top_square()?;
    let Some(p) = root else {
        return Err(PolyError::NotDivisible { remainder_terms: 1 });
    };
    let [l1, l2, _, _, l5] = lambda_vars();
    let sq = (&(&(&l1 - &l2) * &(&l1 - &l5)) * &(&l2 - &l5)).pow(2);
    c.observe(&a3);
    c.zero("A(3) + 2 l5 prod^2 pol^2", &(&a3 + &(&(&sq * &p.pow(2)) * &l5.scale(&int(2)))));
    c.equal("pol is quadratic", &Poly::constant(&lambda_ctx(), int(p.degree() as i64)), &Poly::int(&lambda_ctx(), 2));
    Ok(())
}

/// `[l1, l2, l4, l4, -l1-l2-2l4]`.
pub fn case1_tuple() -> [Poly; 5] {
    let [l1, l2, _, l4, _] = lambda_vars();
    let l5 = -&(&(&l1 + &l2) + &l4.scale(&int(2)));
    [l1, l2, l4.clone(), l4, l5]
}

/// `[l2, l2, l3, l4, -2l2-l3-l4]`.
pub fn case2_tuple() -> [Poly; 5] {
    let [_, l2, l3, l4, _] = lambda_vars();
    let l5 = -&(&(&l2.scale(&int(2)) + &l3) + &l4);
    [l2.clone(), l2, l3, l4, l5]
}

/// `[l1, l3, l3, l4, -l1-2l3-l4]`.
pub fn case3_tuple() -> [Poly; 5] {
    let [l1, _, l3, l4, _] = lambda_vars();
    let l5 = -&(&(&l1 + &l3.scale(&int(2))) + &l4);
    [l1, l3.clone(), l3, l4, l5]
}

fn case1_a5(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a = a_direct_unchecked(&case1_tuple());
    let rhs = l(&format!("-2*l4*((l1-l2)*(l1-l4)*(l2-l4))^2*({})^2", exprs::POL1));
    c.equal("A(5)", &a[4], &rhs);
    Ok(())
}

fn case1_a3(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a = a_direct_unchecked(&case1_tuple());
    let rhs = l(&format!("-(l1-l2)^2*({})^2*({})", exprs::POL1, exprs::POL2));
    c.equal("A(3)", &a[2], &rhs);
    Ok(())
}

fn case2_a12(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let [_, _, l3, l4, l5] = lambda_vars();
    let half = (&(&l3 + &l4) + &l5).scale(&Rat::frac(-1, 2));
    let a = a_direct_unchecked(&[half.clone(), half, l3, l4, l5]);
    let rhs = l(&format!("((l3-l4)*(l3-l5)*(l4-l5))^2*({})", exprs::POL3));
    c.equal("32 A(1)", &a[0].scale(&int(32)), &rhs);
    c.equal("32 A(2)", &a[1].scale(&int(32)), &rhs);
    Ok(())
}

fn case3_a2(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a = a_direct_unchecked(&case3_tuple());
    let rhs = l(&format!("-(l1-l4)^2*({})^2*({})", exprs::POL, exprs::POL4));
    c.equal("A(2)", &a[1], &rhs);
    Ok(())
}

fn rho_term(a: &AuxQuantities<Poly>, k: usize) -> Poly {
    let l = l4vars();
    let (m, n) = pair_rest(k + 1);
    let (lm, ln) = (&l[m - 1], &l[n - 1]);
    let lam = &a.lambda_bar;
    let t = &(&(lm - ln).pow(2) * &(lm + lam).pow(2)) * &(ln + lam).pow(2);
    &(&l[k] * &a.rho[k].pow(2)) * &t
}

fn case4_a4(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a = aux();
    let a4 = a_direct_unchecked(&lambda_vars_trace_free())[3].clone();
    let first = &(&a.lambda_bar * &p3(&[1, 2, 3])) * &a.q[3].pow(2);
    let rest = sum_of(&first, (0..3).map(|k| rho_term(&a, k)));
    c.equal("A(4)", &a4, &(&first - &rest));
    Ok(())
}

/// `pol5` and `pol6` in `l1..l4`.
pub fn pol5_pol6() -> (Poly, Poly) {
    let a = aux();
    let [l1, l2, l3, _] = l4vars();
    let lam = &a.lambda_bar;
    let q4sq = a.q[3].pow(2);
    let neg5 = (&(&(&l2 * &(lam + &l3).pow(2)) * &(lam + &l1).pow(2)) * &a.rho[1].pow(2)).scale(&int(-1));
    let pol5 = &neg5 + &(&(&(&(&l1 + &l2) * &(&l1 - &l2).pow(2)) * &(&l2 - &l3).pow(2)) * &q4sq);
    let neg6 = (&(&(&l3 * &(lam + &l2).pow(2)) * &(lam + &l1).pow(2)) * &a.rho[2].pow(2)).scale(&int(-1));
    let pol6 = &neg6 + &(&(&(&l3 * &(&l1 - &l3).pow(2)) * &(&l2 - &l3).pow(2)) * &q4sq).scale(&int(4));
    (pol5, pol6)
}

/// `(l4 - 3 l3) P3 q4^2 - l1 rho1^2 (l2-l3)^2 (l2+lambda)^2 (l3+lambda)^2`.
pub fn case4_remainder() -> Poly {
    let a = aux();
    let [_, _, l3, l4] = l4vars();
    let first = &(&(&l4 - &l3.scale(&int(3))) * &p3(&[1, 2, 3])) * &a.q[3].pow(2);
    &first - &rho_term(&a, 0)
}

fn case4_split(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a4 = a_direct_unchecked(&lambda_vars_trace_free())[3].clone();
    let (pol5, pol6) = pol5_pol6();
    let [l1, l2, l3, _] = l4vars();
    let rhs = &(&(&(&l1 - &l3).pow(2) * &pol5) + &(&(&l1 - &l2).pow(2) * &pol6)) + &case4_remainder();
    c.equal("A(4) split", &a4, &rhs);
    c.equal("pol5 in a,b,c,d", &to_abcd(&pol5), &abcd(exprs::P5));
    c.equal("pol6 in a,b,c,d", &to_abcd(&pol6), &exprs::p6());
    Ok(())
}

/// Tied-case pair forms: `A(r) = -2 t prod f_i^2` after the case substitution.
pub struct PairForm {
    pub case: u8,
    pub r: usize,
    pub sign_var: &'static str,
    pub factors: &'static [&'static str],
}

pub const PAIR_FORM_TABLE: &[PairForm] = &[
    PairForm { case: 1, r: 1, sign_var: "l4", factors: &["l1-l2", "l2-l4", "l1+l2+3*l4", "l1+2*l2+2*l4", "2*l1+l2+2*l4"] },
    PairForm { case: 1, r: 2, sign_var: "l4", factors: &["l1-l2", "l1-l4", "l1+l2+3*l4", "l1+2*l2+2*l4", "2*l1+l2+2*l4"] },
    PairForm { case: 1, r: 5, sign_var: "l4", factors: &["l1-l2", "l1-l4", "l2-l4", "l1+2*l2+2*l4", "2*l1+l2+2*l4"] },
    PairForm { case: 2, r: 3, sign_var: "l2", factors: &["l2-l4", "l3-l4", "2*l2+l3+2*l4", "2*l2+2*l3+l4", "3*l2+l3+l4"] },
    PairForm { case: 2, r: 4, sign_var: "l2", factors: &["l2-l3", "l3-l4", "2*l2+l3+2*l4", "2*l2+2*l3+l4", "3*l2+l3+l4"] },
    PairForm { case: 2, r: 5, sign_var: "l2", factors: &["l2-l3", "l2-l4", "l3-l4", "2*l2+l3+2*l4", "2*l2+2*l3+l4"] },
    PairForm { case: 3, r: 1, sign_var: "l3", factors: &["l1-l4", "l3-l4", "l1+2*l3+2*l4", "l1+3*l3+l4", "2*l1+2*l3+l4"] },
    PairForm { case: 3, r: 4, sign_var: "l3", factors: &["l1-l3", "l1-l4", "l1+2*l3+2*l4", "l1+3*l3+l4", "2*l1+2*l3+l4"] },
    PairForm { case: 3, r: 5, sign_var: "l3", factors: &["l1-l3", "l1-l4", "l3-l4", "l1+2*l3+2*l4", "2*l1+2*l3+l4"] },
];

pub fn case_tuple(case: u8) -> [Poly; 5] {
    match case {
        1 => case1_tuple(),
        2 => case2_tuple(),
        3 => case3_tuple(),
        _ => lambda_vars_trace_free(),
    }
}

fn pair_forms(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    for case in 1..=3u8 {
        let a = a_direct_unchecked(&case_tuple(case));
        for pf in PAIR_FORM_TABLE.iter().filter(|p| p.case == case) {
            let squares: Vec<String> = pf.factors.iter().map(|f| format!("({f})^2")).collect();
            let rhs = l(&format!("-2*{}*{}", pf.sign_var, squares.join("*")));
            c.equal(format!("case {case} A({})", pf.r), &a[pf.r - 1], &rhs);
        }
    }
    Ok(())
}

fn tie_symmetry(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let a1 = a_direct_unchecked(&case1_tuple());
    c.equal("case 1: A(4) = A(3)", &a1[3], &a1[2]);
    let a2 = a_direct_unchecked(&case2_tuple());
    c.equal("case 2: A(2) = A(1)", &a2[1], &a2[0]);
    let a3 = a_direct_unchecked(&case3_tuple());
    c.equal("case 3: A(3) = A(2)", &a3[2], &a3[1]);
    Ok(())
}

fn g_boundary(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let xc = x_ctx();
    let x1 = Poly::var(&xc, "x1")?;
    let x2 = Poly::var(&xc, "x2")?;
    let pol2 = l(exprs::POL2);
    let dehom = -&pol2.substitute_into(&xc, &[("l1", -&x1), ("l2", -&x2), ("l4", Poly::int(&xc, -1))])?;
    let g = x(exprs::G);
    c.equal("-pol2(-x1,-x2,-1) = g", &dehom, &g);
    let dg = g.differentiate("x1", 1)?;
    c.equal("dg/dx1", &dg, &x(exprs::DG));
    c.equal("d2g/dx1^2", &g.differentiate("x1", 2)?, &x(exprs::D2G));
    let diag = |p: &Poly| p.substitute(&[("x1", x2.clone())]);
    c.equal("g(x2,x2)", &diag(&g)?, &x(&format!("(x2-1)^2*({})", exprs::G_DIAG_CUBIC)));
    c.equal("dg/dx1(x2,x2)", &diag(&dg)?, &x(&format!("(x2-1)*({})", exprs::DG_DIAG_CUBIC)));
    Ok(())
}

/// `l3 -> -(l4+l5)/3`.
pub fn pol3_edge(p: &Poly) -> Result<Poly, PolyError> {
    p.substitute(&[("l3", l("-1/3*(l4+l5)"))])
}

fn pol3_boundary(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let pol3 = l(exprs::POL3);
    c.equal("d3 pol3", &pol3.differentiate("l3", 3)?, &l(exprs::D3POL3));
    c.equal("d3 lower bound", &l(exprs::D3POL3_LOWER), &l(exprs::D3POL3_LOWER_SOS));
    let d2 = pol3_edge(&pol3.differentiate("l3", 2)?)?;
    c.equal("d2 pol3 at edge", &d2, &l(exprs::D2POL3_EDGE));
    c.equal("d2 pol3 at edge, factored", &d2, &l(exprs::D2POL3_EDGE_FACTORED));
    let d1 = pol3_edge(&pol3.differentiate("l3", 1)?)?;
    c.equal("d1 pol3 at edge", &d1, &l(exprs::D1POL3_EDGE));
    c.equal("d1 pol3 at edge, factored", &d1, &l(exprs::D1POL3_EDGE_FACTORED));
    c.equal("pol3 at edge", &pol3_edge(&pol3)?, &l(exprs::POL3_EDGE));
    Ok(())
}

fn case3_disc(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let ac = exprs::abcd_ctx();
    let var = |n: &str| Poly::var(&ac, n).expect("abcd variable");
    let dehom = l(exprs::POL4).substitute_into(&ac, &[("l1", -&var("d")), ("l3", Poly::int(&ac, -1)), ("l4", -&var("c"))])?;
    let f = abcd(exprs::F);
    c.equal("pol4 = -f(c,d)", &dehom, &-&f);
    let one = Poly::one(&ac);
    let gab = f.substitute(&[("c", &one - &var("b")), ("d", &one + &var("a"))])?;
    c.equal("f(1-b,1+a) = g(a,b)", &gab, &abcd(exprs::GAB));
    let coeffs = gab.coefficients_in(0);
    let shown = [exprs::GAB_A0, exprs::GAB_A1, exprs::GAB_A2, exprs::GAB_A3, exprs::GAB_A4];
    for (k, s) in shown.iter().enumerate() {
        c.equal(format!("coefficient of a^{k}"), &coeffs[k], &abcd(s));
    }
    let disc = &coeffs[1].pow(2) - &(&coeffs[2] * &coeffs[0]).scale(&int(4));
    c.equal("discriminant", &disc, &abcd(exprs::DISC3));
    Ok(())
}

fn sigma3_case2(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let s3 = esym(3, &lambda_vars_trace_free());
    let l2 = lambda_vars()[1].clone();
    let sub = s3.substitute(&[("l1", l2)])?;
    c.equal("sigma3 with l1 = l2", &sub, &l(exprs::SIGMA3_CASE2));
    let co = sub.coefficients_in(3);
    let disc = &co[1].pow(2) - &(&co[2] * &co[0]).scale(&int(4));
    c.equal("discriminant in l4", &disc, &l(exprs::SIGMA3_CASE2_DISC));
    Ok(())
}

/// `d = c` in the `a,b,c,d` context.
pub fn at_d_eq_c(p: &Poly) -> Result<Poly, PolyError> {
    p.substitute(&[("d", abcd("c"))])
}

fn pol5_boundary(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let p5 = abcd(exprs::P5);
    c.equal("d7 pol5", &p5.differentiate("d", 7)?, &abcd(exprs::D7P5));
    c.equal("d6 pol5 at d=c", &at_d_eq_c(&p5.differentiate("d", 6)?)?, &abcd(exprs::D6P5_EDGE));
    c.equal("d1 pol5 at d=c", &at_d_eq_c(&p5.differentiate("d", 1)?)?, &abcd(exprs::D1P5_EDGE));
    c.equal("pol5 at d=c", &at_d_eq_c(&p5)?, &abcd(exprs::P5_EDGE));
    Ok(())
}

fn pol6_fac(c: &mut Check, _: usize, _: CatalogMode) -> Result<(), PolyError> {
    let p6 = exprs::p6();
    let fac = pol6_factor(-1);
    let cof = pol6_factor(1);
    let b = abcd("b");
    c.equal("pol6 = b fac cof", &p6, &(&(&b * &fac) * &cof));
    let over_b = p6.exact_div(&b)?;
    c.equal("(pol6 / b) / fac = cof", &over_b.exact_div(&fac)?, &cof);
    c.equal("d2 fac", &fac.differentiate("d", 2)?, &abcd(exprs::D2FAC));
    c.equal("d1 fac at d=c", &at_d_eq_c(&fac.differentiate("d", 1)?)?, &abcd(exprs::D1FAC_EDGE));
    c.equal("fac at d=c", &at_d_eq_c(&fac)?, &abcd(exprs::FAC_EDGE));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_identity, verify_identity_in, IdentityStatus};

    #[test]
    fn small_identities() {
        for id in ["VEC1", "VEC2", "EQP4", "EQQ4", "EQC1", "TSQU", "TMIX", "TCON", "SIGMA3_CASE2", "G_BOUNDARY"] {
            let r = verify_identity(id).unwrap();
            assert_eq!(r.status, IdentityStatus::VerifiedZero, "{id}: {:?}", r.detail);
        }
    }

    #[test]
    fn negative_control_detected() {
        let r = verify_identity_in("LNEW1", CatalogMode { negative_control: true }).unwrap();
        assert_eq!(r.status, IdentityStatus::ResidualNonzero);
        assert!(r.residual_term_count > 0);
        assert!(verify_identity("LNEW1").unwrap().is_verified());
    }
}
