use isocert::assumption::{a_closed_generic, a_direct_unchecked};
use isocert::curvature::{classify, make_tuple};
use isocert::polycore::{certify, parse_expression, Cone, Mono, Poly, Rat, VarCtx};
use isocert::symfun::{newton_convert, NewtonDirection, SymBasis};
use proptest::prelude::*;

fn ctx() -> VarCtx {
    VarCtx::of(&["x", "y", "z"])
}

fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rat::frac(n, d))
}

fn poly_with(max_exp: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((rat(), 0..=max_exp, 0..=max_exp, 0..=max_exp), 0..=max_terms).prop_map(|terms| {
        let c = ctx();
        Poly::from_terms(&c, terms.into_iter().map(|(k, a, b, e)| (Mono::from_exps(&[a, b, e]), k)))
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    poly_with(3, 6)
}

fn point() -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec((-16i64..=16, 1i64..=8).prop_map(|(n, d)| Rat::frac(n, d)), 3)
}

fn tuple5() -> impl Strategy<Value = [Rat; 5]> {
    prop::collection::vec(-30i64..=30, 4).prop_map(|v| {
        let last = -v.iter().sum::<i64>();
        [v[0], v[1], v[2], v[3], last].map(Rat::int)
    })
}

/// Elementary symmetric functions by summing over subsets.
fn subset_esym(xs: &[Rat; 5]) -> [Rat; 5] {
    let mut e: [Rat; 5] = std::array::from_fn(|_| Rat::zero());
    for mask in 1u32..32 {
        let k = mask.count_ones() as usize;
        let prod: Rat = (0..5).filter(|i| mask & (1 << i) != 0).map(|i| xs[i].clone()).product();
        e[k - 1] += prod;
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        let zero = Poly::zero(&ctx());
        let one = Poly::one(&ctx());
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), p in point()) {
        let (va, vb) = (a.eval(&p).unwrap(), b.eval(&p).unwrap());
        prop_assert_eq!((&a * &b).eval(&p).unwrap(), &va * &vb);
        prop_assert_eq!((&a - &b).eval(&p).unwrap(), &va - &vb);
    }

    #[test]
    fn parse_round_trip(a in poly()) {
        let text = a.to_string();
        let back = parse_expression(&text, &ctx()).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn rat_text_round_trip(r in rat()) {
        prop_assert_eq!(r.to_string().parse::<Rat>().unwrap(), r.clone());
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rat>(&json).unwrap(), r);
    }

    #[test]
    fn derivative_matches_central_difference(a in poly_with(4, 6), p in point()) {
        let da = a.differentiate("x", 1).unwrap();
        let exact = da.eval(&p).unwrap();
        // Third-derivative bound on the box of radius R around the origin: sum |c| a^3 R^deg.
        let radius = p.iter().map(Rat::abs).max().unwrap() + Rat::one();
        let bound: Rat = a
            .terms()
            .iter()
            .map(|(m, c)| {
                let e = m.exp(0) as i64;
                c.abs() * Rat::int(e * e * e) * radius.pow(m.degree() as u32)
            })
            .sum();
        for k in 6..=12u32 {
            let h = Rat::one() / Rat::int(2).pow(k);
            let shifted = |s: &Rat| {
                let mut q = p.clone();
                q[0] = &q[0] + s;
                a.eval(&q).unwrap()
            };
            let fd = (shifted(&h) - shifted(&-h.clone())) / (Rat::int(2) * &h);
            let err = (&fd - &exact).abs();
            prop_assert!(err <= &bound * &h * &h, "error {} exceeds O(h^2) bound at h = {}", err, h);
        }
    }

    #[test]
    fn exact_div_inverts_multiplication(a in poly(), b in poly_with(2, 4)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a.clone());
        if !b.is_constant() {
            let shifted = &(&a * &b) + &Poly::one(&ctx());
            prop_assert!(shifted.exact_div(&b).is_err());
        }
    }

    #[test]
    fn cone_certificates_are_sound(
        coeffs in prop::collection::vec(0i64..=5, 10),
        flip in 0usize..12,
        pts in prop::collection::vec((1i64..=40, 1i64..=40, 1i64..=40), 8),
    ) {
        // A nonnegative combination in the gap variables, possibly spoiled by one negative coefficient.
        let c = ctx();
        let gaps = parse_expression("x", &c).unwrap();
        let gy = parse_expression("y - x", &c).unwrap();
        let gz = parse_expression("z - y", &c).unwrap();
        let basis = [
            Poly::one(&c), gaps.clone(), gy.clone(), gz.clone(),
            &gaps * &gy, &gy * &gz, &gaps * &gz, gaps.pow(2), gy.pow(2), gz.pow(3),
        ];
        let mut p = Poly::zero(&c);
        for (i, (b, k)) in basis.iter().zip(&coeffs).enumerate() {
            let k = if i == flip { -(*k) - 1 } else { *k };
            p = &p + &b.scale(&Rat::int(k));
        }
        let cone = Cone::chain(&c, "z > y > x > 0").unwrap();
        if certify(&p, &cone).unwrap().is_certified() {
            for (a, b, d) in pts {
                let (x, y, z) = (Rat::frac(a, 8), Rat::frac(a, 8) + Rat::frac(b, 8), Rat::frac(a, 8) + Rat::frac(b, 8) + Rat::frac(d, 8));
                prop_assert!(p.eval(&[x, y, z]).unwrap().is_positive());
            }
        }
    }

    #[test]
    fn newton_identities(t in tuple5()) {
        let b = SymBasis::of(&t);
        prop_assert_eq!(b.sigma.clone(), subset_esym(&t));
        prop_assert_eq!(newton_convert(NewtonDirection::PowerToSigma, &b.power), b.sigma.clone());
        prop_assert_eq!(newton_convert(NewtonDirection::SigmaToPower, &b.sigma), b.power);
    }

    #[test]
    fn classification_ignores_input_order(t in tuple5(), perm in Just([0usize, 1, 2, 3, 4]).prop_shuffle()) {
        let shuffled: [Rat; 5] = std::array::from_fn(|i| t[perm[i]].clone());
        let a = make_tuple(t, true).unwrap();
        let b = make_tuple(shuffled, true).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(classify(&a), classify(&b));
        prop_assert!(!a.sym().sigma[2].is_negative());
    }

    #[test]
    fn routes_agree(t in tuple5()) {
        prop_assert_eq!(a_closed_generic(&t).unwrap(), a_direct_unchecked(&t));
    }
}
