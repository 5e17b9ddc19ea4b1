//! Exact arithmetic: big rationals, sparse polynomials in `{r, y, z, θ}`,
//! and canonical rational functions in `r`.

mod multipoly;
mod rat;
mod ratfun;
mod unipoly;

pub use multipoly::{poly_ops, MultiPoly, PolyOp, Var};
pub use rat::Rat;
pub use ratfun::RatFun;
pub use unipoly::UniPoly;

use crate::error::Result;

/// Canonical form of `num/den`; see [`RatFun::new`].
pub fn ratfun_make(num: &UniPoly, den: &UniPoly) -> Result<RatFun> {
    RatFun::new(num.clone(), den.clone())
}

/// Monic gcd of two univariate polynomials in `r`.
pub fn poly_gcd_uni(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    UniPoly::gcd(a, b)
}
