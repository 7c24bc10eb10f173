//! Exact rational, two-variable polynomial and truncated-series arithmetic.

mod bipoly;
mod linalg;
mod rational;
mod ring;
mod series;

pub use bipoly::{BiPoly, Monomial, ParsePolyError};
pub use linalg::{solve, RationalMatrix};
pub use rational::{int, rat, Rational};
pub use ring::{determinant, CommRing};
pub use series::{expand_product_of_powers, PowerFactor, TSeries};

/// Binary operation selector for [`bipoly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn bipoly_arith(f: &BiPoly, g: &BiPoly, op: ArithOp) -> BiPoly {
    match op {
        ArithOp::Add => f + g,
        ArithOp::Sub => f - g,
        ArithOp::Mul => f * g,
    }
}

/// Replaces every monomial `uᵃvᵇ` by `u^{am} v^{bm}`.
pub fn substitute_powers(f: &BiPoly, m: u32) -> crate::Result<BiPoly> {
    if m == 0 {
        return Err(crate::Error::ZeroArgument("power substitution exponent"));
    }
    Ok(f.substitute_powers(m))
}

pub fn series_exp(s: &TSeries) -> crate::Result<TSeries> {
    s.exp()
}

pub fn series_log(s: &TSeries) -> crate::Result<TSeries> {
    s.log()
}
