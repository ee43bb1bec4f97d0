//! Exact sparse multivariate polynomials over the rationals.

mod cone;
mod ctx;
mod mono;
mod parse;
mod poly;
mod rat;
mod ratfunc;
mod scalar;

pub use cone::{certify, cone_positivity_certificate, CertificateResult, Chain, Cone, Side};
pub use ctx::VarCtx;
pub use mono::Mono;
pub use parse::parse_expression;
pub use poly::Poly;
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use scalar::{product_of, sum_of, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative exponent at byte {offset}")]
    NegativeExponent { offset: usize },
    #[error("polynomials live in different variable contexts")]
    ContextMismatch,
    #[error("variable `{0}` is unbound")]
    UnboundVariable(String),
    #[error("not divisible: remainder has at least {remainder_terms} terms")]
    NotDivisible { remainder_terms: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid number `{0}`")]
    BadNumber(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    BadVariableName(String),
    #[error("variable `{0}` is not constrained by the region")]
    VariableOutsideChain(String),
    #[error("invalid region: {0}")]
    BadCone(String),
}

/// Convenience: parse with a context that is known to contain every name used.
pub fn poly(ctx: &VarCtx, text: &str) -> Poly {
    parse_expression(text, ctx).unwrap_or_else(|e| panic!("bad built-in expression `{text}`: {e}"))
}
