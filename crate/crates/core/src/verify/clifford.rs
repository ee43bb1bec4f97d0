//! Principal curvatures of the Clifford products `S^k x S^(5-k)`.

use serde::{Deserialize, Serialize};

use crate::polycore::{Poly, Rat, VarCtx};
use crate::symfun::{esym, psum};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordReport {
    /// Dimension of the first factor.
    pub k: usize,
    /// The two curvature values as text, e.g. `x` and `-1/4*x` with `x^2 = 4`.
    pub curvatures: [String; 2],
    /// `x^2` in the quotient ring.
    pub x_squared: Rat,
    pub sigma1: String,
    pub s: String,
    pub holds: bool,
}

/// Reduces a polynomial in `x` modulo `x^2 - c`.
fn reduce(p: &Poly, c: &Rat) -> Poly {
    let ctx = p.ctx().clone();
    let x = Poly::var_index(&ctx, 0);
    p.terms().iter().fold(Poly::zero(&ctx), |acc, (m, coeff)| {
        let e = m.exp(0);
        let mut t = Poly::constant(&ctx, coeff * &c.pow(e / 2));
        if e % 2 == 1 {
            t = &t * &x;
        }
        &acc + &t
    })
}

/// `k` curvatures `x` and `5-k` curvatures `-k/(5-k) x`, with `x^2 = (5-k)/k`.
pub fn clifford_check(k: usize) -> Option<CliffordReport> {
    if !(1..=4).contains(&k) {
        return None;
    }
    let ctx = VarCtx::of(&["x"]);
    let x = Poly::var_index(&ctx, 0);
    let c = Rat::frac(5 - k as i64, k as i64);
    let other = x.scale(&Rat::frac(-(k as i64), 5 - k as i64));
    let lam: Vec<Poly> = (0..5).map(|i| if i < k { x.clone() } else { other.clone() }).collect();
    let sigma1 = reduce(&esym(1, &lam), &c);
    let s = reduce(&psum(2, &lam), &c);
    let holds = sigma1.is_zero() && s == Poly::int(&ctx, 5);
    Some(CliffordReport {
        k,
        curvatures: [x.to_string(), other.to_string()],
        x_squared: c,
        sigma1: sigma1.to_string(),
        s: s.to_string(),
        holds,
    })
}

/// The rational Clifford tuple `(-1/2, -1/2, -1/2, -1/2, 2)`.
pub fn clifford_rational() -> [Rat; 5] {
    let h = Rat::frac(-1, 2);
    [h.clone(), h.clone(), h.clone(), h, Rat::int(2)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_products() {
        for k in 1..=4 {
            let r = clifford_check(k).unwrap();
            assert!(r.holds, "{r:?}");
            assert_eq!(r.s, "5");
        }
        assert!(clifford_check(0).is_none());
        assert!(clifford_check(5).is_none());
    }

    #[test]
    fn rational_tuple() {
        let t = clifford_rational();
        assert!(esym(1, &t).is_zero());
        assert_eq!(psum(2, &t), Rat::int(5));
    }
}
