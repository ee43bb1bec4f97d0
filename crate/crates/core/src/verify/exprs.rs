//! Displayed polynomials of the positivity arguments, as text in the parser grammar.

use std::sync::OnceLock;

use crate::polycore::{poly, Poly, VarCtx};
use crate::symfun::lambda_ctx;

pub const POL1: &str = "2*l1^2+5*l1*l2+6*l1*l4+2*l2^2+6*l2*l4+4*l4^2";
pub const POL2: &str = "l1^4*l2+l1^4*l4+2*l1^3*l2^2+6*l1^3*l2*l4+4*l1^3*l4^2+2*l1^2*l2^3+9*l1^2*l2^2*l4-5*l1^2*l2*l4^2-4*l1^2*l4^3+l1*l2^4+6*l1*l2^3*l4-5*l1*l2^2*l4^2-34*l1*l2*l4^3-16*l1*l4^4+l2^4*l4+4*l2^3*l4^2-4*l2^2*l4^3-16*l2*l4^4+47*l4^5";

pub const G: &str = "x1^4*x2+x1^4+2*x1^3*x2^2+6*x1^3*x2+4*x1^3+2*x1^2*x2^3+9*x1^2*x2^2-5*x1^2*x2-4*x1^2+x1*x2^4+6*x1*x2^3-5*x1*x2^2-34*x1*x2-16*x1+x2^4+4*x2^3-4*x2^2-16*x2+47";
pub const DG: &str = "4*x1^3*x2+4*x1^3+6*x1^2*x2^2+18*x1^2*x2+12*x1^2+4*x1*x2^3+18*x1*x2^2-10*x1*x2-8*x1+x2^4+6*x2^3-5*x2^2-34*x2-16";
pub const D2G: &str = "12*x1^2*x2+12*x1^2+12*x1*x2^2+36*x1*x2+24*x1+4*x2^3+18*x2^2-10*x2-8";
pub const G_DIAG_CUBIC: &str = "6*x2^3+35*x2^2+62*x2+47";
pub const DG_DIAG_CUBIC: &str = "15*x2^3+61*x2^2+58*x2+16";

pub const POL3: &str = "47*l3^5+267*l3^4*l4+267*l3^4*l5+582*l3^3*l4^2+1060*l3^3*l4*l5+582*l3^3*l5^2+582*l3^2*l4^3+1570*l3^2*l4^2*l5+1570*l3^2*l4*l5^2+582*l3^2*l5^3+267*l3*l4^4+1060*l3*l4^3*l5+1570*l3*l4^2*l5^2+1060*l3*l4*l5^3+267*l3*l5^4+47*l4^5+267*l4^4*l5+582*l4^3*l5^2+582*l4^2*l5^3+267*l4*l5^4+47*l5^5";
pub const D3POL3: &str = "2820*l3^2+6408*l3*(l4+l5)+3492*l4^2+6360*l4*l5+3492*l5^2";
pub const D3POL3_LOWER: &str = "2820*l3^2-2160*(l4+l5)^2+3492*l4^2+6360*l4*l5+3492*l5^2";
pub const D3POL3_LOWER_SOS: &str = "2820*l3^2+1020*(l4+l5)^2+312*l4^2+312*l5^2";
pub const D2POL3_EDGE: &str = "8672/27*l4^3+7376/9*l4^2*l5+7376/9*l4*l5^2+8672/27*l5^3";
pub const D2POL3_EDGE_FACTORED: &str = "(l4+l5)*(8672/27*l4^2+13456/27*l4*l5+8672/27*l5^2)";
pub const D1POL3_EDGE: &str = "2944/81*l4^4+17824/81*l4^3*l5+9488/27*l4^2*l5^2+17824/81*l4*l5^3+2944/81*l5^4";
pub const D1POL3_EDGE_FACTORED: &str = "16/81*(l4+4*l5)*(4*l4+l5)*(46*l4^2+83*l4*l5+46*l5^2)";
pub const POL3_EDGE: &str = "64/243*(l4+l5)*(4*l4^2+17*l4*l5+4*l5^2)^2";

pub const POL: &str = "2*l1^2+6*l1*l3+5*l1*l4+4*l3^2+6*l3*l4+2*l4^2";
pub const POL4: &str = "l1^4*l3+l1^4*l4+4*l1^3*l3^2+6*l1^3*l3*l4+2*l1^3*l4^2-4*l1^2*l3^3-5*l1^2*l3^2*l4+9*l1^2*l3*l4^2+2*l1^2*l4^3-16*l1*l3^4-34*l1*l3^3*l4-5*l1*l3^2*l4^2+6*l1*l3*l4^3+l1*l4^4+47*l3^5-16*l3^4*l4-4*l3^3*l4^2+4*l3^2*l4^3+l3*l4^4";
pub const F: &str = "c^4*d+c^4+2*c^3*d^2+6*c^3*d+4*c^3+2*c^2*d^3+9*c^2*d^2-5*c^2*d-4*c^2+c*d^4+6*c*d^3-5*c*d^2-34*c*d-16*c+d^4+4*d^3-4*d^2-16*d+47";
pub const GAB: &str = "(2-b)*a^4+(2*b^2-14*b+20)*a^3+(-2*b^3+21*b^2-55*b+50)*a^2+(b^4-14*b^3+55*b^2-50*b)*a+2*b^4-20*b^3+50*b^2";
pub const GAB_A4: &str = "2-b";
pub const GAB_A3: &str = "2*b^2-14*b+20";
pub const GAB_A2: &str = "-2*b^3+21*b^2-55*b+50";
pub const GAB_A1: &str = "b^4-14*b^3+55*b^2-50*b";
pub const GAB_A0: &str = "2*b^4-20*b^3+50*b^2";
pub const DISC3: &str = "-b^2*(b-5)^2*(-b^4+2*b^3+67*b^2-260*b+300)";
pub const DISC3_QUARTIC: &str = "-b^4+2*b^3+67*b^2-260*b+300";

pub const SIGMA3_CASE2: &str = "-(2*l2+l3)*l4^2-(4*l2^2+4*l2*l3+l3^2)*l4-2*l2*l3^2-4*l2^2*l3-2*l2^3";
pub const SIGMA3_CASE2_DISC: &str = "-8*l2^3*l3-8*l2^2*l3^2+l3^4";

pub const P5: &str = "c*(a+b+c+2*d)^2*(a+2*b+c+d)^2*(-2*a^2+a*b-3*a*c+a*d+b^2+b*c+b*d-2*c^2+c*d+d^2)^2-(c+d)*(b-c)^2*(c-d)^2*(a^2+a*b+a*c+a*d+2*b^2+5*b*c+5*b*d+2*c^2+5*c*d+2*d^2)^2";
pub const P6_1: &str = "-2*a^2-3*a*b+a*c+a*d-2*b^2+b*c+b*d+c^2+c*d+d^2";
pub const P6_2: &str = "a^2+a*b+a*c+a*d+2*b^2+5*b*c+5*b*d+2*c^2+5*c*d+2*d^2";
pub const D7P5: &str = "20160*(5*a*c+9*b*c+8*c*d-b^2+4*c^2)";
pub const D6P5_EDGE: &str = "2880*(25/4*a^2*c-a*b^2+65/2*a*b*c+97/2*a*c^2-5*b^3+81/4*b^2*c+193/2*b*c^2+233/4*c^3)";
pub const D1P5_EDGE: &str = "c*(a-b)^2*(2*a+b+2*c)^2*(2*a+4*b+4*c)*(a+b+3*c)^2-2*c*(a-b)*(a+2*b+2*c)^2*(2*a+b+2*c)*(a+b+3*c)^3+c*(a-b)^2*(a+2*b+2*c)^2*(2*a+b+2*c)^2*(4*a+4*b+12*c)";
pub const P5_EDGE: &str = "c*(a-b)^2*(a+2*b+2*c)^2*(2*a+b+2*c)^2*(a+b+3*c)^2";
pub const D2FAC: &str = "12*b^2+34*b*c+54*b*d+8*a*b-2*c^2+18*c*d+22*a*c+24*d^2+30*a*d";
pub const D1FAC_EDGE: &str = "-5*a^3-10*a^2*b-5*a^2*c-12*a*b^2+9*a*b*c+48*a*c^2-11*b^3+15*b^2*c+78*b*c^2+18*c^3";
pub const FAC_EDGE: &str = "(-2*a^4-7*a^3*b+9*a*c^3)+(-20*a^2*b*c+9*a*b*c^2+11*b*c^3)+(-6*b^4+b*c^3+4*b^2*c^2+b*c^3)+(-10*a^3*c+10*a*c^3)+(-12*a^2*b^2+a*c^3+11*b^2*c^2)+(-9*a*b^3+9*b*c^3)+(-5*a^2*c^2+4*b*c^3+a*c^3)+(-24*a*b^2*c+13*b*c^3+11*a*c^3)+(-22*b^3*c+9*c^4+13*b*c^3)";

pub fn x_ctx() -> VarCtx {
    static CTX: OnceLock<VarCtx> = OnceLock::new();
    CTX.get_or_init(|| VarCtx::of(&["x1", "x2"])).clone()
}

pub fn abcd_ctx() -> VarCtx {
    static CTX: OnceLock<VarCtx> = OnceLock::new();
    CTX.get_or_init(|| VarCtx::of(&["a", "b", "c", "d"])).clone()
}

pub fn l(text: &str) -> Poly {
    poly(&lambda_ctx(), text)
}

pub fn x(text: &str) -> Poly {
    poly(&x_ctx(), text)
}

pub fn abcd(text: &str) -> Poly {
    poly(&abcd_ctx(), text)
}

/// `(a+b+c+2d)(a+b+2c+d) P1 -+ 2(b-c)(b-d) P2`; `sign = -1` gives the factor, `+1` the cofactor.
pub fn pol6_factor(sign: i64) -> Poly {
    let s = if sign < 0 { "-" } else { "+" };
    abcd(&format!("(a+b+c+2*d)*(a+b+2*c+d)*({P6_1}){s}2*(b-c)*(b-d)*({P6_2})"))
}

pub fn p6() -> Poly {
    abcd(&format!("b*(a+b+c+2*d)^2*(a+b+2*c+d)^2*({P6_1})^2-4*b*(b-c)^2*(b-d)^2*({P6_2})^2"))
}

/// `l1 = -d, l2 = -c, l3 = -b, l4 = -a`.
pub fn to_abcd(p: &Poly) -> Poly {
    let ctx = abcd_ctx();
    let neg = |n: &str| -&Poly::var(&ctx, n).expect("abcd variable");
    p.substitute_into(&ctx, &[("l1", neg("d")), ("l2", neg("c")), ("l3", neg("b")), ("l4", neg("a"))])
        .expect("polynomial in l1..l4")
}
