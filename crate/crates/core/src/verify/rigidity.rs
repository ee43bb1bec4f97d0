//! Second-order reductions at points with exactly two distinct principal curvatures.

use std::sync::OnceLock;

use crate::polycore::{poly, sum_of, Poly, PolyError, Rat, VarCtx};

use super::{verify_identity, CatalogMode, Check, IdentityReport, VerifyError};

/// Sorted third-order indices `h_ij1` and the fourth-order `h_ii11`, then the curvature scale.
pub fn rigidity_ctx(case: u8) -> VarCtx {
    static C1: OnceLock<VarCtx> = OnceLock::new();
    static C2: OnceLock<VarCtx> = OnceLock::new();
    let build = |scale: &str| {
        let mut names: Vec<String> = Vec::new();
        for i in 1..=5 {
            for j in i..=5 {
                names.push(h3(1, i, j));
            }
        }
        for i in 1..=5 {
            names.push(format!("h{i}{i}11"));
        }
        names.push(scale.to_string());
        VarCtx::new(&names).expect("distinct names")
    };
    match case {
        1 => C1.get_or_init(|| build("z")).clone(),
        _ => C2.get_or_init(|| build("mu")).clone(),
    }
}

/// Name of the symmetric index `h_ijk`.
pub fn h3(i: usize, j: usize, k: usize) -> String {
    let mut v = [i, j, k];
    v.sort_unstable();
    format!("h{}{}{}", v[0], v[1], v[2])
}

/// Principal curvatures of the case, as polynomials in the scale variable.
pub fn case_curvatures(case: u8) -> [Poly; 5] {
    let ctx = rigidity_ctx(case);
    match case {
        1 => {
            let z = poly(&ctx, "z");
            let w = z.scale(&Rat::frac(-3, 2));
            [z.clone(), z.clone(), z, w.clone(), w]
        }
        _ => {
            let m = poly(&ctx, "mu");
            [m.clone(), m.clone(), m.clone(), m.clone(), m.scale(&Rat::int(-4))]
        }
    }
}

/// `sum lambda_i^e h_ii11 + e sum_{i,j} lambda_i^(e-1) h_ij1^2`, the `m = 1` second derivative of the power sum of degree `e + 1`.
pub fn second_derivative(case: u8, e: u32) -> Poly {
    let ctx = rigidity_ctx(case);
    let lam = case_curvatures(case);
    let v = |n: &str| Poly::var(&ctx, n).expect("rigidity variable");
    let fourth = sum_of(&lam[0], (1..=5).map(|i| &lam[i - 1].pow(e) * &v(&format!("h{i}{i}11"))));
    let mut third = Poly::zero(&ctx);
    for i in 1..=5 {
        for j in 1..=5 {
            third = &third + &(&lam[i - 1].pow(e - 1) * &v(&h3(i, j, 1)).pow(2));
        }
    }
    &fourth + &third.scale(&Rat::int(e as i64))
}

/// First-order and trace constraints: `h1111 = -(h2211+...+h5511)`; in Case 2 also `h155 = 0`.
fn reduce(case: u8, p: &Poly) -> Result<Poly, PolyError> {
    let ctx = rigidity_ctx(case);
    let mut b = vec![("h1111", poly(&ctx, "-(h2211+h3311+h4411+h5511)"))];
    if case == 2 {
        b.push(("h155", Poly::zero(&ctx)));
    }
    p.substitute(&b)
}

const CASE1_S: &str = "-5/2*z*(h4411+h5511)+h111^2+h122^2+h133^2+h144^2+h155^2+2*(h112^2+h113^2+h123^2+h145^2+h114^2+h115^2+h124^2+h125^2+h134^2+h135^2)";
const CASE1_F4: &str = "-35/8*z^3*(h4411+h5511)+3*z^2*(h111^2+h122^2+h133^2+2*(h112^2+h113^2+h123^2)+9/4*(h144^2+h155^2)+9/2*h145^2+13/4*(h114^2+h115^2+h124^2+h125^2+h134^2+h135^2))";
const CASE1_Q: &str = "5/4*(h111^2+h122^2+h133^2)+5*(h144^2+h155^2)+5/2*(h112^2+h113^2+h123^2)+10*h145^2+25/4*(h114^2+h115^2+h124^2+h125^2+h134^2+h135^2)";

const CASE2_F3: &str = "15*mu^2*h5511+2*mu*((h111^2+h122^2+h133^2+h144^2)+2*(h112^2+h113^2+h114^2+h123^2+h124^2+h134^2)-3*(h115^2+h125^2+h135^2+h145^2))";
const CASE2_F4: &str = "-65*mu^3*h5511+3*mu^2*((h111^2+h122^2+h133^2+h144^2)+2*(h112^2+h113^2+h114^2+h123^2+h124^2+h134^2)+17*(h115^2+h125^2+h135^2+h145^2))";
const CASE2_Q: &str = "35/3*(h111^2+h122^2+h133^2+h144^2)+70/3*(h112^2+h113^2+h114^2+h123^2+h124^2+h134^2)+25*(h115^2+h125^2+h135^2+h145^2)";

/// The positive definite form left after eliminating the fourth-order terms.
pub fn quadratic_form(case: u8) -> Poly {
    poly(&rigidity_ctx(case), if case == 1 { CASE1_Q } else { CASE2_Q })
}

pub(super) fn check_case(c: &mut Check, case: usize, _: CatalogMode) -> Result<(), PolyError> {
    let case = case as u8;
    let ctx = rigidity_ctx(case);
    let p = |t: &str| poly(&ctx, t);
    if case == 1 {
        let s = reduce(1, &second_derivative(1, 1))?;
        let f4 = reduce(1, &second_derivative(1, 3))?;
        c.equal("S", &s, &p(CASE1_S));
        c.equal("f4", &f4, &p(CASE1_F4));
        let comb = &f4 - &(&p("7/4*z^2") * &s);
        c.equal("f4 - 7/4 z^2 S", &comb, &(&p("z^2") * &quadratic_form(1)));
    } else {
        let f3 = reduce(2, &second_derivative(2, 2))?;
        let f4 = reduce(2, &second_derivative(2, 3))?;
        c.equal("f3", &f3, &p(CASE2_F3));
        c.equal("f4", &f4, &p(CASE2_F4));
        let comb = &(&p("13/3*mu") * &f3) + &f4;
        c.equal("13/3 mu f3 + f4", &comb, &(&p("mu^2") * &quadratic_form(2)));
    }
    Ok(())
}

pub fn verify_rigidity_case(case: u8) -> Result<IdentityReport, VerifyError> {
    match case {
        1 | 2 => verify_identity(&format!("RIGIDITY_CASE{case}")),
        _ => Err(VerifyError::UnknownCase(case)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms_are_positive_diagonal() {
        for case in 1..=2 {
            let q = quadratic_form(case);
            for (m, coeff) in q.terms() {
                assert!(coeff.is_positive());
                assert_eq!(m.degree(), 2);
                assert!(m.exps().iter().all(|&e| e == 0 || e == 2), "cross term in case {case}");
            }
        }
        assert_eq!(quadratic_form(1).len(), 15);
        assert_eq!(quadratic_form(2).len(), 14);
    }

    #[test]
    fn both_cases_reduce() {
        assert!(verify_rigidity_case(1).unwrap().is_verified());
        assert!(verify_rigidity_case(2).unwrap().is_verified());
        assert_eq!(verify_rigidity_case(3), Err(VerifyError::UnknownCase(3)));
    }
}
