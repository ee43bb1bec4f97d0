use std::cmp::Ordering;

use smallvec::SmallVec;

use super::PolyError;

/// Exponent vector with arity equal to its context length.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(SmallVec<[u32; 8]>);

impl Mono {
    pub fn one(n: usize) -> Mono {
        Mono(SmallVec::from_elem(0, n))
    }

    pub fn var(n: usize, i: usize, e: u32) -> Mono {
        let mut m = Mono::one(n);
        m.0[i] = e;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Mono {
        Mono(SmallVec::from_slice(exps))
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Result<Mono, PolyError> {
        let mut out = self.0.clone();
        for (a, &b) in out.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(b).ok_or(PolyError::ExponentOverflow)?;
        }
        Ok(Mono(out))
    }

    pub fn pow(&self, k: u32) -> Result<Mono, PolyError> {
        let mut out = self.0.clone();
        for a in out.iter_mut() {
            *a = a.checked_mul(k).ok_or(PolyError::ExponentOverflow)?;
        }
        Ok(Mono(out))
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if exact.
    pub fn quotient_of(&self, other: &Mono) -> Option<Mono> {
        if !self.divides(other) {
            return None;
        }
        Some(Mono(self.0.iter().zip(other.0.iter()).map(|(a, b)| b - a).collect()))
    }

    pub(crate) fn set(&mut self, i: usize, e: u32) {
        self.0[i] = e;
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|e| e % 2 == 0)
    }

    pub fn halve(&self) -> Mono {
        Mono(self.0.iter().map(|e| e / 2).collect())
    }
}

impl Ord for Mono {
    /// Graded lexicographic: total degree first, then the earlier variable with the larger exponent wins.
    fn cmp(&self, other: &Mono) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Mono) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x2 = Mono::from_exps(&[2, 0]);
        let xy = Mono::from_exps(&[1, 1]);
        let y2 = Mono::from_exps(&[0, 2]);
        let x = Mono::from_exps(&[1, 0]);
        assert!(x2 > xy && xy > y2 && y2 > x);
    }

    #[test]
    fn overflow_is_detected() {
        let m = Mono::from_exps(&[u32::MAX]);
        assert!(matches!(m.mul(&Mono::from_exps(&[1])), Err(PolyError::ExponentOverflow)));
        assert!(matches!(m.pow(2), Err(PolyError::ExponentOverflow)));
    }

    #[test]
    fn quotient() {
        let a = Mono::from_exps(&[1, 2]);
        let b = Mono::from_exps(&[3, 2]);
        assert_eq!(a.quotient_of(&b), Some(Mono::from_exps(&[2, 0])));
        assert_eq!(b.quotient_of(&a), None);
    }
}
