use super::{Poly, Rat};

/// Commutative ring elements that the curvature formulas are written over.
///
/// Implemented for [`Rat`] (numeric tuples) and [`Poly`] (symbolic tuples);
/// symbolic operands must share one context.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn constant_like(&self, c: Rat) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Rat) -> Self;
    fn is_zero_value(&self) -> bool;

    fn one_like(&self) -> Self {
        self.constant_like(Rat::one())
    }

    fn int_like(&self, n: i64) -> Self {
        self.constant_like(Rat::int(n))
    }

    fn squared(&self) -> Self {
        self.times(self)
    }

    fn power(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }
}

impl Scalar for Rat {
    fn zero_like(&self) -> Rat {
        Rat::zero()
    }
    fn constant_like(&self, c: Rat) -> Rat {
        c
    }
    fn plus(&self, o: &Rat) -> Rat {
        self + o
    }
    fn minus(&self, o: &Rat) -> Rat {
        self - o
    }
    fn times(&self, o: &Rat) -> Rat {
        self * o
    }
    fn negated(&self) -> Rat {
        -self
    }
    fn scaled(&self, c: &Rat) -> Rat {
        self * c
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn power(&self, e: u32) -> Rat {
        self.pow(e)
    }
}

impl Scalar for Poly {
    fn zero_like(&self) -> Poly {
        Poly::zero(self.ctx())
    }
    fn constant_like(&self, c: Rat) -> Poly {
        Poly::constant(self.ctx(), c)
    }
    fn plus(&self, o: &Poly) -> Poly {
        self + o
    }
    fn minus(&self, o: &Poly) -> Poly {
        self - o
    }
    fn times(&self, o: &Poly) -> Poly {
        self * o
    }
    fn negated(&self) -> Poly {
        -self
    }
    fn scaled(&self, c: &Rat) -> Poly {
        self.scale(c)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn power(&self, e: u32) -> Poly {
        self.pow(e)
    }
}

/// Sum of a nonempty-context list; `like` supplies the zero.
pub fn sum_of<T: Scalar>(like: &T, items: impl IntoIterator<Item = T>) -> T {
    items.into_iter().fold(like.zero_like(), |a, b| a.plus(&b))
}

pub fn product_of<T: Scalar>(like: &T, items: impl IntoIterator<Item = T>) -> T {
    items.into_iter().fold(like.one_like(), |a, b| a.times(&b))
}
