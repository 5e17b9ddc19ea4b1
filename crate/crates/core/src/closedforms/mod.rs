//! Explicit polynomial families for two-row leaves, and the identities they
//! satisfy.
//!
//! All families are returned as [`MultiPoly`] in `r` together with `y`, or
//! with `z` and `θ` for [`m_poly`]. The argument of [`psi`] is carried in the
//! `y` slot.

mod suites;

pub use suites::{identity_suite, phi_second_plus_one_residual, Caps, MAX_CAP, SUITES};

use crate::algebra::{MultiPoly, Rat, Var};
use crate::error::{Error, Result};
use crate::partitions::TwoRowData;

/// Parameters of the two-row leaf formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafFormulaInput {
    pub u: usize,
    pub d: usize,
    pub m: usize,
    pub y: MultiPoly,
}

impl LeafFormulaInput {
    pub fn new(u: usize, d: usize, m: usize, y: MultiPoly) -> Self {
        Self { u, d, m, y }
    }

    /// `y = g + l·r`
    pub fn numeric(u: usize, d: usize, m: usize, g: i64, l: i64) -> Self {
        Self::new(u, d, m, MultiPoly::linear_r(g, l))
    }

    /// `m = 0` with `y` left as an indeterminate.
    pub fn symbolic(u: usize, d: usize) -> Self {
        Self::new(u, d, 0, MultiPoly::var(Var::Y))
    }
}

impl From<&TwoRowData> for LeafFormulaInput {
    fn from(t: &TwoRowData) -> Self {
        Self::new(t.u, t.d, t.m, t.y.clone())
    }
}

pub(crate) fn int(k: i64) -> MultiPoly {
    MultiPoly::constant(k)
}

pub(crate) fn r() -> MultiPoly {
    MultiPoly::var(Var::R)
}

pub(crate) fn y() -> MultiPoly {
    MultiPoly::var(Var::Y)
}

pub(crate) fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// `L(u,d;m,y) = Σ_ℓ C(d′,ℓ) Π_{i<ℓ}(m+i+1−r)(i+r) Π_{j=ℓ+1}^{d′}(y+d′+r−j)(y+u+r+j)`
/// with `d′ = d − m`.
pub fn closed_leaf(input: &LeafFormulaInput) -> Result<MultiPoly> {
    let LeafFormulaInput { u, d, m, ref y } = *input;
    if m > d {
        return Err(Error::InvalidOverlap { u, d, m });
    }
    let dp = d - m;
    let (m, u, dpi) = (m as i64, u as i64, dp as i64);
    let left = |i: i64| &(&int(m + i + 1) - &r()) * &(&int(i) + &r());
    let right = |j: i64| &(&(y + &r()) + &int(dpi - j)) * &(&(y + &r()) + &int(u + j));
    let sum = (0..=dp)
        .map(|l| {
            let a: MultiPoly = (0..l as i64).map(left).product();
            let b: MultiPoly = (l as i64 + 1..=dpi).map(right).product();
            (&a * &b).scale(&Rat::from(binomial(dp, l)))
        })
        .sum();
    Ok(sum)
}

/// Gap-case leaf with symbolic `y`.
pub fn q_poly(u: usize, d: usize) -> MultiPoly {
    closed_leaf(&LeafFormulaInput::symbolic(u, d)).expect("m = 0")
}

/// Overlap-case leaf, `1 ≤ m ≤ min(u, d)`.
pub fn p_poly(u: usize, d: usize, m: usize) -> Result<MultiPoly> {
    if m == 0 || m > u.min(d) {
        return Err(Error::InvalidOverlap { u, d, m });
    }
    closed_leaf(&LeafFormulaInput::new(u, d, m, MultiPoly::zero()))
}

/// `ρ_i² = (i + 1/2)²`
fn rho_sq(i: i64) -> Rat {
    let h = Rat::new(2 * i + 1, 2).expect("nonzero denominator");
    &h * &h
}

/// `θ + (z + ρ_k)²`
pub(crate) fn theta_shift(k: i64) -> MultiPoly {
    let rho = MultiPoly::constant(Rat::new(2 * k + 1, 2).expect("nonzero denominator"));
    let zr = &MultiPoly::var(Var::Z) + &rho;
    &MultiPoly::var(Var::Theta) + &(&zr * &zr)
}

/// `M^u_d(z;θ) = Σ_k C(d,k) Π_{i<k}(θ+ρ_i²) Π_{i=k+1}^d (z−i)(z+i+u−d)`
pub fn m_poly(u: usize, d: usize) -> MultiPoly {
    let (ui, di) = (u as i64, d as i64);
    let z = MultiPoly::var(Var::Z);
    let theta = MultiPoly::var(Var::Theta);
    (0..=d)
        .map(|k| {
            let a: MultiPoly = (0..k as i64).map(|i| &theta + &MultiPoly::constant(rho_sq(i))).product();
            let b: MultiPoly =
                (k as i64 + 1..=di).map(|i| &(&z - &int(i)) * &(&z + &int(i + ui - di))).product();
            (&a * &b).scale(&Rat::from(binomial(d, k)))
        })
        .sum()
}

/// The substitution `z ↦ y + d + r`, `θ ↦ −(r − 1/2)²` taking `M^u_d` to `Q^u_d`.
pub fn gap_substitution(d: usize) -> std::collections::BTreeMap<Var, MultiPoly> {
    let half = MultiPoly::constant(Rat::new(1, 2).expect("nonzero denominator"));
    let rm = &r() - &half;
    std::collections::BTreeMap::from([
        (Var::Z, &(&y() + &int(d as i64)) + &r()),
        (Var::Theta, -&(&rm * &rm)),
    ])
}

/// `φ_k(y) = Π_{i=1}^k (y+i)(y+i−1+2r)`
pub fn phi(k: usize) -> MultiPoly {
    (1..=k as i64)
        .map(|i| &(&y() + &int(i)) * &(&(&y() + &int(i - 1)) + &r().scale(&Rat::from(2))))
        .product()
}

/// `ψ_k(x) = Π_{i=1}^k (x+i)(i−1+2r)`, with `x` written as `y`.
pub fn psi(k: usize) -> MultiPoly {
    (1..=k as i64).map(|i| &(&y() + &int(i)) * &(&int(i - 1) + &r().scale(&Rat::from(2)))).product()
}

/// `ψ_k(x)` at an integer argument.
pub fn psi_at(k: usize, x: i64) -> MultiPoly {
    psi(k).subst_one(Var::Y, &int(x))
}

/// `N^u_d(m) = Σ_k C(d,k) Π_{i<k}(m+i+1−r)(i+r) Π_{j=k+1}^d (d−j+r)(u+j+r)`
pub fn n_poly(u: usize, d: usize, m: usize) -> MultiPoly {
    let (ui, di, mi) = (u as i64, d as i64, m as i64);
    (0..=d)
        .map(|k| {
            let a: MultiPoly =
                (0..k as i64).map(|i| &(&int(mi + i + 1) - &r()) * &(&int(i) + &r())).product();
            let b: MultiPoly =
                (k as i64 + 1..=di).map(|j| &(&int(di - j) + &r()) * &(&int(ui + j) + &r())).product();
            (&a * &b).scale(&Rat::from(binomial(d, k)))
        })
        .sum()
}

/// `L(u,d;m,y)` next to its divisor `Π_{i=1}^{d−m}(y+m+i)(y+i−1+2r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeL {
    pub leaf: MultiPoly,
    pub divisor: MultiPoly,
    /// `leaf / divisor` when the division is exact.
    pub quotient: Option<MultiPoly>,
}

pub(crate) fn tilde_divisor(k: usize, m: usize, y: &MultiPoly) -> MultiPoly {
    let mi = m as i64;
    (1..=k as i64)
        .map(|i| &(y + &int(mi + i)) * &(&(y + &int(i - 1)) + &r().scale(&Rat::from(2))))
        .product()
}

pub fn tilde_l(input: &LeafFormulaInput) -> Result<TildeL> {
    let LeafFormulaInput { u, d, m, ref y } = *input;
    if u < m || d < m {
        return Err(Error::InvalidOverlap { u, d, m });
    }
    let leaf = closed_leaf(input)?;
    let divisor = tilde_divisor(d - m, m, y);
    let quotient = leaf.exact_div(&divisor).ok();
    Ok(TildeL { leaf, divisor, quotient })
}

/// `L(u,d)·D_u − L(d,u)·D_d`, which vanishes exactly when
/// `L̃(u,d) = L̃(d,u)`.
pub fn tilde_symmetry_residual(u: usize, d: usize, m: usize, y: &MultiPoly) -> Result<MultiPoly> {
    let a = tilde_l(&LeafFormulaInput::new(u, d, m, y.clone()))?;
    let b = tilde_l(&LeafFormulaInput::new(d, u, m, y.clone()))?;
    Ok(&(&a.leaf * &b.divisor) - &(&b.leaf * &a.divisor))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn upoly(c: &[i64]) -> MultiPoly {
        MultiPoly::from_unipoly(&crate::algebra::UniPoly::from_ints(c))
    }

    #[test]
    fn worked_pair_values() {
        assert_eq!(closed_leaf(&LeafFormulaInput::numeric(3, 2, 0, 1, 1)).unwrap(), upoly(&[60, 238, 275, 90, 9]));
        assert_eq!(closed_leaf(&LeafFormulaInput::numeric(3, 2, 1, 0, 0)).unwrap(), upoly(&[0, 6]));
        assert_eq!(p_poly(3, 2, 1).unwrap(), upoly(&[0, 6]));
        let q = q_poly(3, 2).subst_one(Var::Y, &MultiPoly::linear_r(1, 1));
        assert_eq!(q, upoly(&[60, 238, 275, 90, 9]));
    }

    #[test]
    fn degenerate_cases() {
        for u in 0..4 {
            assert_eq!(closed_leaf(&LeafFormulaInput::numeric(u, 2, 2, 0, 0)).unwrap(), MultiPoly::one());
            assert_eq!(q_poly(u, 0), MultiPoly::one());
            assert_eq!(m_poly(u, 0), MultiPoly::one());
        }
        assert_eq!(m_poly(0, 0), MultiPoly::one());
        for d in 0..4 {
            assert_eq!(q_poly(0, d), phi(d));
        }
        assert_eq!(p_poly(2, 1, 1).unwrap(), MultiPoly::one());
        assert!(matches!(closed_leaf(&LeafFormulaInput::numeric(1, 1, 2, 0, 0)), Err(Error::InvalidOverlap { .. })));
        assert!(matches!(p_poly(1, 3, 2), Err(Error::InvalidOverlap { .. })));
        assert!(matches!(p_poly(3, 3, 0), Err(Error::InvalidOverlap { .. })));
    }

    #[test]
    fn small_products() {
        assert_eq!(phi(0), MultiPoly::one());
        assert_eq!(psi(0), MultiPoly::one());
        // (y+1)(y+2r) = y^2 + 2ry + y + 2r
        let two_r = r().scale(&Rat::from(2));
        let expected = &(&(&(&y() * &y()) + &(&two_r * &y())) + &y()) + &two_r;
        assert_eq!(phi(1), expected);
        assert_eq!(psi(1), &two_r * &(&y() + &int(1)));
    }

    #[test]
    fn substitution_example() {
        // θ + ρ_0² ↦ (1 − r)r
        let t = &MultiPoly::var(Var::Theta) + &MultiPoly::constant(rho_sq(0));
        assert_eq!(t.subst(&gap_substitution(0)), upoly(&[0, 1, -1]));
        let z1 = &MultiPoly::var(Var::Z) - &int(1);
        assert_eq!(z1.subst(&gap_substitution(2)), &(&y() + &r()) + &int(1));
        assert_eq!(m_poly(3, 2).subst(&gap_substitution(2)), q_poly(3, 2));
    }

    #[test]
    fn tilde_examples() {
        assert!(tilde_symmetry_residual(3, 3, 0, &y()).unwrap().is_zero());
        assert!(tilde_symmetry_residual(3, 2, 0, &y()).unwrap().is_zero());
        assert!(tilde_symmetry_residual(3, 2, 1, &MultiPoly::zero()).unwrap().is_zero());
        assert!(matches!(tilde_l(&LeafFormulaInput::numeric(1, 3, 2, 0, 0)), Err(Error::InvalidOverlap { .. })));
    }
}
