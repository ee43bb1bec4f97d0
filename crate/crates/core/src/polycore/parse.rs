//! Expression front-end.
//!
//! ```text
//! expr   := sign? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := rational | ident | '(' expr ')'
//! ```
//!
//! A leading sign is accepted so that printed output always re-parses.

use std::fmt::{self, Write};

use num_bigint::BigInt;

use super::{Poly, PolyError, Rat, VarCtx};

pub fn parse_expression(text: &str, ctx: &VarCtx) -> Result<Poly, PolyError> {
    let mut p = Parser { src: text, pos: 0, ctx };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ctx: &'a VarCtx,
}

impl Parser<'_> {
    fn syntax(&self, message: &str) -> PolyError {
        PolyError::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.checked_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, PolyError> {
        let base = self.base()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        if self.peek() == Some('-') {
            return Err(PolyError::NegativeExponent { offset: self.pos });
        }
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.syntax("expected a nonnegative integer exponent"));
        }
        let e: u32 = digits.parse().map_err(|_| PolyError::ExponentOverflow)?;
        base.checked_pow(e)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn base(&mut self) -> Result<Poly, PolyError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.syntax("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits().to_string();
                let mut value = Rat::from_bigint(n.parse::<BigInt>().expect("digits"));
                if self.peek() == Some('.') {
                    self.pos += 1;
                    let frac = self.digits().to_string();
                    value = format!("{n}.{frac}").parse().map_err(|_| self.syntax("bad decimal"))?;
                }
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let d = self.digits().to_string();
                    if d.is_empty() {
                        return Err(self.syntax("expected denominator"));
                    }
                    let d = Rat::from_bigint(d.parse::<BigInt>().expect("digits"));
                    value = value.checked_div(&d).ok_or(PolyError::Syntax {
                        offset: start,
                        message: "zero denominator".into(),
                    })?;
                }
                Ok(Poly::constant(self.ctx, value))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
                    self.pos += self.peek().map(char::len_utf8).unwrap_or(1);
                }
                let name = &self.src[start..self.pos];
                Poly::var(self.ctx, name)
            }
            Some(_) => Err(self.syntax("expected a number, variable or '('")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}

/// Canonical text: graded-lex order, explicit `*`, `^` only for exponents of at least 2.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_char('0');
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_char('-')?;
            } else if k > 0 {
                f.write_char('+')?;
            }
            let a = c.abs();
            let mut first = true;
            if !a.is_one() || m.is_one() {
                write!(f, "{a}")?;
                first = false;
            }
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_char('*')?;
                }
                first = false;
                f.write_str(self.ctx().name(i))?;
                if e >= 2 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> VarCtx {
        VarCtx::of(&["l1", "l2", "l4"])
    }

    #[test]
    fn zero_and_binomial() {
        let c = ctx();
        assert!(parse_expression("0", &c).unwrap().is_zero());
        let p = parse_expression("(l1-l2)^2", &c).unwrap();
        assert_eq!(p.to_string(), "l1^2-2*l1*l2+l2^2");
    }

    #[test]
    fn rational_literals() {
        let c = ctx();
        let p = parse_expression("1/2*l1 - 3/4 + 0.25*l2", &c).unwrap();
        assert_eq!(p.to_string(), "1/2*l1+1/4*l2-3/4");
    }

    #[test]
    fn errors_carry_offsets() {
        let c = ctx();
        assert_eq!(
            parse_expression("l1 + * l2", &c),
            Err(PolyError::Syntax { offset: 5, message: "expected a number, variable or '('".into() })
        );
        assert_eq!(parse_expression("l1^-2", &c), Err(PolyError::NegativeExponent { offset: 3 }));
        assert_eq!(parse_expression("l3", &c), Err(PolyError::UnknownVariable("l3".into())));
        assert!(matches!(parse_expression("(l1", &c), Err(PolyError::Syntax { offset: 3, .. })));
        assert!(matches!(parse_expression("l1 l2", &c), Err(PolyError::Syntax { offset: 3, .. })));
    }

    #[test]
    fn leading_sign_round_trip() {
        let c = ctx();
        let p = parse_expression("-l1*l2 + 3", &c).unwrap();
        assert_eq!(p.to_string(), "-l1*l2+3");
        assert_eq!(parse_expression(&p.to_string(), &c).unwrap(), p);
    }

    #[test]
    fn unicode_identifiers() {
        let c = VarCtx::of(&["ζ", "h_111"]);
        let p = parse_expression("ζ^2*h_111", &c).unwrap();
        assert_eq!(p.to_string(), "ζ^2*h_111");
    }
}
