use super::{Poly, PolyError, Rat, VarCtx};

/// Quotient of two polynomials with a nonzero denominator. No cancellation is attempted.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if num.ctx() != den.ctx() {
            return Err(PolyError::ContextMismatch);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let one = Poly::one(p.ctx());
        RatFunc { num: p, den: one }
    }

    pub fn ctx(&self) -> &VarCtx {
        self.num.ctx()
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn add(&self, other: &RatFunc) -> Result<RatFunc, PolyError> {
        if self.den == other.den {
            return RatFunc::new(self.num.checked_add(&other.num)?, self.den.clone());
        }
        let num = self.num.checked_mul(&other.den)?.checked_add(&other.num.checked_mul(&self.den)?)?;
        RatFunc::new(num, self.den.checked_mul(&other.den)?)
    }

    pub fn mul(&self, other: &RatFunc) -> Result<RatFunc, PolyError> {
        RatFunc::new(self.num.checked_mul(&other.num)?, self.den.checked_mul(&other.den)?)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<RatFunc, PolyError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Errors with `DivisionByZero` when the denominator vanishes at the point.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat, PolyError> {
        let d = self.den.eval(point)?;
        let n = self.num.eval(point)?;
        n.checked_div(&d).ok_or(PolyError::DivisionByZero)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `self == other` as rational functions, by cross multiplication.
    pub fn equals(&self, other: &RatFunc) -> Result<bool, PolyError> {
        Ok(self.num.checked_mul(&other.den)? == other.num.checked_mul(&self.den)?)
    }
}
