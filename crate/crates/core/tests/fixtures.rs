use isocert::assumption::{a_closed_form, a_values_direct, l_u_values, limit_probe, probe_target, AssumptionError, ProbeThresholds, Verdict};
use isocert::curvature::{classify, ingest, make_tuple, triple_invariants, CorollaryType, CurvatureError};
use isocert::polycore::Rat;

/// `A(r)` over the integers straight from the triple-sum definition.
fn oracle_a(l: [i128; 5]) -> [i128; 5] {
    let mut sigma2 = 0;
    let mut sigma3 = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            sigma2 += l[i] * l[j];
            for k in j + 1..5 {
                sigma3 += l[i] * l[j] * l[k];
            }
        }
    }
    std::array::from_fn(|r| {
        let idx: Vec<usize> = (0..5).filter(|&i| i != r).collect();
        let mut total = 0;
        for a in 0..4 {
            for b in a + 1..4 {
                for c in b + 1..4 {
                    let (x, y, z) = (l[idx[a]], l[idx[b]], l[idx[c]]);
                    let (s1, s2, s3) = (x + y + z, x * y + x * z + y * z, x * y * z);
                    let s = ((x - y) * (x - z) * (y - z)).pow(2);
                    total += s * (s1 * s1 + 2 * s2 - sigma2) * (2 * s1 * s2 - 3 * s3 + 2 * sigma3);
                }
            }
        }
        total
    })
}

fn tuple(v: [i64; 5]) -> isocert::curvature::CurvatureTuple {
    make_tuple(v.map(Rat::int), true).unwrap()
}

fn rats(v: [i128; 5]) -> [Rat; 5] {
    v.map(|x| Rat::int(x as i64))
}

#[test]
fn counterexample_values() {
    let expected = [520680960, 471860640, 120424320, 1049760, -200918880];
    assert_eq!(oracle_a([-6, -5, 1, 3, 7]), expected);
    let t = tuple([-6, -5, 1, 3, 7]);
    assert_eq!(a_values_direct(&t).unwrap().values, rats(expected));
    assert_eq!(a_closed_form(&t).unwrap().values, rats(expected));
    let lu = l_u_values(&t).unwrap();
    assert!(lu.bridge_holds);
    assert!(lu.l[..4].iter().all(Rat::is_positive));
    assert!(lu.l[4].is_negative());
}

#[test]
fn type4_values() {
    let expected = [294593760, 288627840, 289469160, 294848640, 4584600];
    assert_eq!(oracle_a([-4, -3, -2, -1, 10]), expected);
    let t = tuple([-4, -3, -2, -1, 10]);
    assert_eq!(classify(&t).corollary_type, Some(CorollaryType::Type4));
    assert_eq!(a_values_direct(&t).unwrap().values, rats(expected));
    assert_eq!(a_closed_form(&t).unwrap().values, rats(expected));
    let lu = l_u_values(&t).unwrap();
    assert!(lu.bridge_holds);
    assert!(lu.l.iter().all(Rat::is_positive));
}

#[test]
fn oracle_agrees_on_a_grid() {
    for a in -5..=0i64 {
        for b in -3..=2 {
            for c in 0..=3 {
                for d in 1..=4 {
                    let v = [a, b, c, d, -(a + b + c + d)];
                    let direct = isocert::assumption::a_direct_unchecked(&v.map(Rat::int));
                    assert_eq!(direct, rats(oracle_a(v.map(i128::from))), "{v:?}");
                }
            }
        }
    }
}

#[test]
fn degenerate_tuples_vanish() {
    for v in [[-2, -2, 1, 1, 2], [0, 0, 0, 0, 0], [-3, -3, 1, 1, 4]] {
        let t = tuple(v);
        assert!(a_values_direct(&t).unwrap().values.iter().all(Rat::is_zero), "{v:?}");
        assert!(a_closed_form(&t).unwrap().values.iter().all(Rat::is_zero), "{v:?}");
        assert_eq!(l_u_values(&t), Err(AssumptionError::DegenerateTuple));
    }
    assert!(classify(&tuple([-2, -2, 1, 1, 2])).excluded_by_hypothesis());
}

#[test]
fn triple_invariants_at_counterexample() {
    let t = triple_invariants(&[-6, -5, 1, 3, 7].map(Rat::int), 1, 2, 3).unwrap();
    assert_eq!([t.s1, t.s2, t.s3, t.s], [-10, 19, 30, 1764].map(Rat::int));
    let t = triple_invariants(&[1, 2, 3, 0, 0].map(Rat::int), 1, 2, 3).unwrap();
    assert_eq!(t.s3, Rat::int(6));
    let t = triple_invariants(&[2, 2, 3, 0, 0].map(Rat::int), 1, 2, 3).unwrap();
    assert!(t.s.is_zero());
    assert!(triple_invariants(&[0, 0, 0, 0, 0].map(Rat::int), 2, 1, 3).is_err());
}

#[test]
fn ingestion() {
    let t = ingest("-6,-5,1,3,7", true).unwrap();
    let c = classify(&t);
    assert_eq!(c.distinct, 5);
    assert_eq!(c.corollary_type, None);
    assert!(matches!(ingest("1,2,3,4,5", true), Err(CurvatureError::MinimalityViolated(_))));
    assert!(matches!(ingest("1,2,3", true), Err(CurvatureError::WrongArity(3))));
    let repaired = ingest("-0.5,-0.5,-0.5,-0.5,2.0000000001", true).unwrap();
    assert!(repaired.is_minimal());
    assert!(ingest("-0.5,-0.5,-0.5,-0.5,2.001", true).is_err());
    let flipped = ingest("1,2,3,4,-10", true).unwrap();
    assert!(flipped.was_flipped());
    assert_eq!(flipped.lambdas(), tuple([-4, -3, -2, -1, 10]).lambdas());
}

#[test]
fn probes() {
    let th = ProbeThresholds::default();
    let (base, dir) = probe_target("bottom-pair").unwrap();
    let rep = limit_probe("bottom-pair", &base, &dir, 24, &th).unwrap();
    use Verdict::*;
    assert_eq!(rep.verdicts, [Bounded, DivergesMinus, DivergesMinus, Bounded, Bounded]);
    let (base, dir) = probe_target("top-pair").unwrap();
    let rep = limit_probe("top-pair", &base, &dir, 12, &th).unwrap();
    assert_eq!(rep.verdicts[0], DivergesPlus);
    assert_eq!(rep.verdicts[1], DivergesPlus);
    let same = [1, 1, 0, 0, -2].map(Rat::int);
    assert_eq!(limit_probe("x", &base, &same, 8, &th).unwrap_err(), AssumptionError::DirectionDoesNotSeparate);
    let off = [1, -1, 0, 0, 1].map(Rat::int);
    assert_eq!(limit_probe("x", &base, &off, 8, &th).unwrap_err(), AssumptionError::DirectionNotTraceFree);
}
