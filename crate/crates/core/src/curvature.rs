//! Principal-curvature tuples, their classification and derived quantities.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polycore::{product_of, sum_of, Rat, Scalar};
use crate::symfun::{esym, SymBasis};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurvatureError {
    #[error("cannot parse tuple: {0}")]
    Parse(String),
    #[error("expected 5 curvatures, got {0}")]
    WrongArity(usize),
    #[error("curvatures do not sum to zero (sigma1 = {0})")]
    MinimalityViolated(Rat),
    #[error("triple indices must satisfy 1 <= i < j < k <= 5, got ({0}, {1}, {2})")]
    BadIndices(usize, usize, usize),
}

/// Five principal curvatures, sorted ascending, with the orientation fixed so that `sigma3 >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureTuple {
    lambdas: [Rat; 5],
    minimal: bool,
    flipped: bool,
}

fn sorted(mut v: [Rat; 5]) -> [Rat; 5] {
    v.sort();
    v
}

impl CurvatureTuple {
    pub fn lambdas(&self) -> &[Rat; 5] {
        &self.lambdas
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// True when the input had `sigma3 < 0` and was negated.
    pub fn was_flipped(&self) -> bool {
        self.flipped
    }

    pub fn sym(&self) -> SymBasis<Rat> {
        SymBasis::of(&self.lambdas)
    }

    /// The same curvatures with the opposite unit normal.
    pub fn opposite(&self) -> [Rat; 5] {
        sorted(self.lambdas.clone().map(|x| -x))
    }

    pub fn is_distinct(&self) -> bool {
        self.lambdas.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for CurvatureTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lambdas.iter().map(Rat::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Sorts, optionally checks `sigma1 = 0`, and negates when `sigma3 < 0`.
pub fn make_tuple(values: [Rat; 5], require_minimal: bool) -> Result<CurvatureTuple, CurvatureError> {
    let s1: Rat = values.iter().cloned().sum();
    if require_minimal && !s1.is_zero() {
        return Err(CurvatureError::MinimalityViolated(s1));
    }
    let mut lambdas = sorted(values);
    let flipped = esym(3, &lambdas).is_negative();
    if flipped {
        lambdas = sorted(lambdas.map(|x| -x));
    }
    Ok(CurvatureTuple { lambdas, minimal: s1.is_zero(), flipped })
}

/// Splits `"-6,-5,1,3,7"` into exact rationals; the flag reports whether any entry was decimal.
pub fn parse_tuple(text: &str) -> Result<(Vec<Rat>, bool), CurvatureError> {
    let mut out = Vec::new();
    let mut decimal = false;
    for part in text.split(',') {
        let (r, d) = Rat::parse_decimal_or_fraction(part).map_err(|e| CurvatureError::Parse(e.to_string()))?;
        decimal |= d;
        out.push(r);
    }
    Ok((out, decimal))
}

/// Parses a tuple. Decimal input whose sum is within `1e-9` of zero is shifted by its mean.
pub fn ingest(text: &str, require_minimal: bool) -> Result<CurvatureTuple, CurvatureError> {
    let (mut vals, decimal) = parse_tuple(text)?;
    if vals.len() != 5 {
        return Err(CurvatureError::WrongArity(vals.len()));
    }
    let s1: Rat = vals.iter().cloned().sum();
    if decimal && !s1.is_zero() && s1.abs() <= Rat::frac(1, 1_000_000_000) {
        let mean = &s1 / &Rat::int(5);
        for v in &mut vals {
            *v -= &mean;
        }
    }
    let arr: [Rat; 5] = vals.try_into().expect("length checked");
    make_tuple(arr, require_minimal)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CorollaryType {
    Type1,
    Type2,
    Type3,
    Type4,
}

impl CorollaryType {
    pub fn number(self) -> u8 {
        match self {
            CorollaryType::Type1 => 1,
            CorollaryType::Type2 => 2,
            CorollaryType::Type3 => 3,
            CorollaryType::Type4 => 4,
        }
    }

    pub fn from_number(n: u8) -> Option<CorollaryType> {
        match n {
            1 => Some(CorollaryType::Type1),
            2 => Some(CorollaryType::Type2),
            3 => Some(CorollaryType::Type3),
            4 => Some(CorollaryType::Type4),
            _ => None,
        }
    }

    /// The defining inequalities, e.g. `l1<l2<l3=l4<0<l5`.
    pub fn pattern(self) -> &'static str {
        match self {
            CorollaryType::Type1 => "l1<l2<l3=l4<0<l5",
            CorollaryType::Type2 => "l1=l2<l3<l4<l5",
            CorollaryType::Type3 => "l1<l2=l3<l4<0<l5",
            CorollaryType::Type4 => "l1<l2<l3<l4<0<l5",
        }
    }

    pub fn holds(self, l: &[Rat; 5]) -> bool {
        let z = Rat::zero();
        match self {
            CorollaryType::Type1 => l[0] < l[1] && l[1] < l[2] && l[2] == l[3] && l[3] < z && z < l[4],
            CorollaryType::Type2 => l[0] == l[1] && l[1] < l[2] && l[2] < l[3] && l[3] < l[4],
            CorollaryType::Type3 => l[0] < l[1] && l[1] == l[2] && l[2] < l[3] && l[3] < z && z < l[4],
            CorollaryType::Type4 => l[0] < l[1] && l[1] < l[2] && l[2] < l[3] && l[3] < z && z < l[4],
        }
    }
}

/// Multiplicity and sign data of a tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigClass {
    /// Multiplicities of the distinct values in ascending order of value.
    pub multiplicities: Vec<usize>,
    /// The same multiplicities sorted descending, e.g. `[2, 2, 1]`.
    pub partition: Vec<usize>,
    pub distinct: usize,
    /// Sign of each distinct value, ascending.
    pub signs: Vec<i32>,
    pub corollary_type: Option<CorollaryType>,
    pub is_221: bool,
    /// `l4 = l5` with `l1 < l2 < l3` distinct.
    pub is_paired_top: bool,
}

impl ConfigClass {
    /// Multiplicities (2,2,1), the one pattern with three distinct values that the hypothesis rules out.
    pub fn excluded_by_hypothesis(&self) -> bool {
        self.is_221
    }
}

pub fn classify(t: &CurvatureTuple) -> ConfigClass {
    let l = &t.lambdas;
    let mut values: Vec<&Rat> = Vec::new();
    let mut multiplicities = Vec::new();
    for x in l {
        if values.last() == Some(&x) {
            *multiplicities.last_mut().expect("nonempty") += 1;
        } else {
            values.push(x);
            multiplicities.push(1);
        }
    }
    let mut partition = multiplicities.clone();
    partition.sort_by(|a, b| b.cmp(a));
    let corollary_type = [CorollaryType::Type1, CorollaryType::Type2, CorollaryType::Type3, CorollaryType::Type4]
        .into_iter()
        .find(|c| c.holds(l));
    ConfigClass {
        distinct: values.len(),
        signs: values.iter().map(|v| v.signum()).collect(),
        is_221: partition == [2, 2, 1],
        is_paired_top: l[3] == l[4] && l[0] < l[1] && l[1] < l[2] && l[2] < l[3],
        multiplicities,
        partition,
        corollary_type,
    }
}

/// `s1, s2, s3` of a triple and its squared discriminant `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleInvariants<T> {
    pub s1: T,
    pub s2: T,
    pub s3: T,
    pub s: T,
}

impl<T: Scalar> TripleInvariants<T> {
    pub fn of(a: &T, b: &T, c: &T) -> TripleInvariants<T> {
        let s1 = a.plus(b).plus(c);
        let s2 = a.times(b).plus(&a.times(c)).plus(&b.times(c));
        let s3 = a.times(b).times(c);
        let s = a.minus(b).times(&a.minus(c)).times(&b.minus(c)).squared();
        TripleInvariants { s1, s2, s3, s }
    }
}

/// Triple `(i, j, k)` with `1 <= i < j < k <= 5`.
pub fn triple_invariants<T: Scalar>(xs: &[T; 5], i: usize, j: usize, k: usize) -> Result<TripleInvariants<T>, CurvatureError> {
    if !(1 <= i && i < j && j < k && k <= 5) {
        return Err(CurvatureError::BadIndices(i, j, k));
    }
    Ok(TripleInvariants::of(&xs[i - 1], &xs[j - 1], &xs[k - 1]))
}

/// The index pairs `k < l` of `1..=4` in the order used by `a_kl` and `b_kl`.
pub const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

fn pair_slot(k: usize, l: usize) -> usize {
    PAIRS.iter().position(|&p| p == (k, l)).expect("pair of 1..=4 with k < l")
}

/// Auxiliary quantities built from `l1..l4` with `l5 = -(l1+l2+l3+l4)`. Indices are 1-based in names, 0-based in arrays.
#[derive(Clone, Debug, PartialEq)]
pub struct AuxQuantities<T> {
    pub lambda_bar: T,
    pub q: [T; 4],
    pub p: [T; 4],
    pub v_k: [T; 4],
    pub v: T,
    pub t: [T; 4],
    pub xi: [T; 4],
    pub a_k: [T; 4],
    pub a_kl: [T; 6],
    pub b_kl: [T; 6],
    pub rho: [T; 3],
}

fn others(k: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| i != k).collect()
}

fn diff_product<T: Scalar>(l: &[T], idx: &[usize], square: bool) -> T {
    let like = &l[0];
    let mut acc = like.one_like();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            let d = l[i].minus(&l[j]);
            acc = acc.times(&if square { d.squared() } else { d });
        }
    }
    acc
}

impl<T: Scalar> AuxQuantities<T> {
    pub fn of(l: &[T; 4]) -> AuxQuantities<T> {
        let like = &l[0];
        let lam = sum_of(like, l.iter().cloned());
        let l5 = lam.negated();
        let all5: Vec<T> = l.iter().cloned().chain([l5.clone()]).collect();
        let q = std::array::from_fn(|k| {
            let o = others(k, 4);
            let sq = sum_of(like, o.iter().map(|&i| l[i].squared()));
            let mixed = sum_of(like, o.iter().map(|&i| l[i].times(&l[k])));
            let ov: Vec<T> = o.iter().map(|&i| l[i].clone()).collect();
            l[k].squared().plus(&sq.scaled(&Rat::int(2))).plus(&mixed).plus(&esym(2, &ov).scaled(&Rat::int(5)))
        });
        let p = std::array::from_fn(|k| {
            let prod = product_of(like, others(k, 4).into_iter().map(|i| l[i].clone()));
            lam.times(&l[k]).times(&lam.minus(&l[k])).scaled(&Rat::int(-2)).minus(&prod)
        });
        let v_k = std::array::from_fn(|k| diff_product(l, &others(k, 4), false));
        let v = diff_product(l, &[0, 1, 2, 3], false);
        let t = std::array::from_fn(|k| {
            let prod = product_of(like, others(k, 4).into_iter().map(|i| l[i].minus(&l[k])));
            if (k + 1) % 2 == 0 {
                prod
            } else {
                prod.negated()
            }
        });
        let xi: [T; 4] = std::array::from_fn(|k| {
            let ov: Vec<T> = others(k, 4).into_iter().map(|i| l[i].clone()).collect();
            let osum = sum_of(like, ov.iter().cloned());
            esym(2, &ov)
                .plus(&l[k].times(&l5))
                .minus(&l[k].plus(&l5).times(&osum))
                .plus(&l[k].squared())
                .plus(&l5.squared())
        });
        let a_k = std::array::from_fn(|k| {
            let o = others(k, 4);
            let sq = diff_product(l, &o, true);
            let lin = product_of(like, o.iter().map(|&i| l[i].minus(&l5)));
            sq.times(&lin).times(&xi[k]).negated()
        });
        let a_kl = std::array::from_fn(|s| {
            let (k, l_) = PAIRS[s];
            let (k0, l0) = (k - 1, l_ - 1);
            let mn: Vec<usize> = (0..4).filter(|&i| i != k0 && i != l0).collect();
            let (m, n) = (mn[0], mn[1]);
            let mut prod = like.one_like();
            for i in 0..5 {
                for j in i + 1..5 {
                    if (i, j) == (k0, l0) || (i, j) == (k0, 4) || (i, j) == (l0, 4) {
                        continue;
                    }
                    prod = prod.times(&all5[i].minus(&all5[j]));
                }
            }
            let tail = all5[m].minus(&all5[n]).times(&all5[m].minus(&l5)).times(&all5[n].minus(&l5));
            let val = prod.times(&tail);
            if (k + l_ + 1) % 2 == 0 {
                val
            } else {
                val.negated()
            }
        });
        let b_kl = std::array::from_fn(|s| {
            let (k, l_) = PAIRS[s];
            let (k0, l0) = (k - 1, l_ - 1);
            let mn: Vec<usize> = (0..4).filter(|&i| i != k0 && i != l0).collect();
            let (m, n) = (mn[0], mn[1]);
            let mut prod = like.one_like();
            for i in 0..4 {
                for j in i + 1..4 {
                    if (i, j) != (k0, l0) {
                        prod = prod.times(&l[i].minus(&l[j]));
                    }
                }
            }
            prod.times(&l[m].minus(&l[n]))
                .times(&l[m].plus(&lam).squared())
                .times(&l[n].plus(&lam).squared())
        });
        let first3: Vec<T> = l[..3].to_vec();
        let e2_3 = esym(2, &first3);
        let rho = std::array::from_fn(|k| {
            let part = sum_of(like, others(k, 3).into_iter().map(|i| l[i].squared().plus(&l[i].times(&l[3]))));
            part.plus(&e2_3)
                .minus(&l[k].squared().plus(&l[3].squared()).scaled(&Rat::int(2)))
                .minus(&l[k].times(&l[3]).scaled(&Rat::int(3)))
        });
        AuxQuantities { lambda_bar: lam, q, p, v_k, v, t, xi, a_k, a_kl, b_kl, rho }
    }

    /// `a^(kl)` for `1 <= k < l <= 4`.
    pub fn akl(&self, k: usize, l: usize) -> &T {
        &self.a_kl[pair_slot(k, l)]
    }

    /// `b^(kl)` for `1 <= k < l <= 4`.
    pub fn bkl(&self, k: usize, l: usize) -> &T {
        &self.b_kl[pair_slot(k, l)]
    }

    /// `-2 l5 sum a^(kl) + sum a_k` with `l5 = -lambda_bar`.
    pub fn calligraphic_a(&self) -> T {
        let like = &self.lambda_bar;
        let s_kl = sum_of(like, self.a_kl.iter().cloned());
        let s_k = sum_of(like, self.a_k.iter().cloned());
        self.lambda_bar.scaled(&Rat::int(2)).times(&s_kl).plus(&s_k)
    }
}

/// The four curvatures `l1..l4` of a minimal tuple.
pub fn aux_quantities(t: &CurvatureTuple) -> Result<AuxQuantities<Rat>, CurvatureError> {
    if !t.minimal {
        return Err(CurvatureError::MinimalityViolated(t.lambdas.iter().cloned().sum()));
    }
    let l = &t.lambdas;
    Ok(AuxQuantities::of(&[l[0].clone(), l[1].clone(), l[2].clone(), l[3].clone()]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(v: [i64; 5]) -> CurvatureTuple {
        make_tuple(v.map(Rat::int), true).unwrap()
    }

    #[test]
    fn sorting_and_orientation() {
        let t = tuple([7, 3, 1, -5, -6]);
        let s3 = esym(3, &[-6, -5, 1, 3, 7].map(Rat::int));
        if s3.is_negative() {
            assert!(t.was_flipped());
            assert_eq!(t.lambdas(), &[-7, -3, -1, 5, 6].map(Rat::int));
        } else {
            assert_eq!(t.lambdas(), &[-6, -5, 1, 3, 7].map(Rat::int));
        }
        assert!(!esym(3, t.lambdas()).is_negative());
        assert_eq!(tuple([0; 5]).lambdas(), &[0; 5].map(Rat::int));
    }

    #[test]
    fn minimality_checked() {
        let err = make_tuple([1, 2, 3, 4, 5].map(Rat::int), true).unwrap_err();
        assert_eq!(err, CurvatureError::MinimalityViolated(Rat::int(15)));
        assert!(!make_tuple([1, 2, 3, 4, 5].map(Rat::int), false).unwrap().is_minimal());
    }

    #[test]
    fn decimal_repair() {
        let t = ingest("-0.5,-0.5,-0.5,-0.5,2.0000000001", true).unwrap();
        assert!(t.is_minimal());
        assert!(ingest("-0.5,-0.5,-0.5,-0.5,2.1", true).is_err());
        assert!(ingest("1/2,-1/2,0,0,1e-12", true).unwrap().is_minimal());
        assert!(ingest("1/2,-1/2,0,0,1/1000000000000", true).is_err());
        assert_eq!(ingest("1,2,3", true), Err(CurvatureError::WrongArity(3)));
    }

    #[test]
    fn clifford_tuple() {
        let t = ingest("-1/2,-1/2,-1/2,-1/2,2", true).unwrap();
        assert_eq!(t.sym().s(), &Rat::int(5));
    }

    #[test]
    fn classification_examples() {
        let c = classify(&tuple([-2, -2, 1, 1, 2]));
        assert_eq!((c.distinct, c.partition.clone(), c.is_221, c.corollary_type), (3, vec![2, 2, 1], true, None));
        let c = classify(&tuple([-6, -5, 1, 3, 7]));
        assert_eq!((c.distinct, c.corollary_type), (5, None));
        let c = classify(&tuple([-4, -3, -2, -1, 10]));
        assert_eq!((c.distinct, c.corollary_type), (5, Some(CorollaryType::Type4)));
    }

    #[test]
    fn triple_example() {
        let xs = [-6, -5, 1, 3, 7].map(Rat::int);
        let t = triple_invariants(&xs, 1, 2, 3).unwrap();
        assert_eq!([t.s1, t.s2, t.s3, t.s], [-10, 19, 30, 1764].map(Rat::int));
        assert!(triple_invariants(&xs, 2, 2, 3).is_err());
        let rep = [1, 1, 2, 0, -4].map(Rat::int);
        assert!(triple_invariants(&rep, 1, 2, 3).unwrap().s.is_zero());
    }
}
