//! The stem `K^λ_μ`, the leaf `L_{λ/μ} = b^λ_μ / K^λ_μ`, and the two leaf
//! recurrences.

use crate::algebra::{RatFun, UniPoly};
use crate::binomials::BinomialContext;
use crate::error::{Error, Result};
use crate::partitions::{
    covers_between, ensure_contains, induced_decomposition, skew_cells, Cell, CoverDirection, DecompLabels, Label,
    Partition,
};

/// Binomial coefficient split as stem times leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StemLeaf {
    pub stem: RatFun,
    pub leaf: RatFun,
}

/// Numerator and denominator accumulated separately, reduced once.
#[derive(Clone)]
struct Fraction {
    num: UniPoly,
    den: UniPoly,
}

impl Fraction {
    fn one() -> Self {
        Self { num: UniPoly::one(), den: UniPoly::one() }
    }

    fn mul(&mut self, num: &UniPoly, den: &UniPoly) {
        self.num = &self.num * num;
        self.den = &self.den * den;
    }

    fn mul_ratfun(&mut self, q: &RatFun) {
        self.mul(q.num(), q.den());
    }

    fn finish(self) -> RatFun {
        RatFun::new(self.num, self.den).expect("hook products are nonzero")
    }
}

/// `Π_C c_λ/c_μ · Π_R c'_λ/c'_μ / Π_J c_μ c'_μ`
pub fn stem(lam: &Partition, mu: &Partition) -> Result<RatFun> {
    let labels = induced_decomposition(lam, mu)?;
    let mut k = Fraction::one();
    for (s, l) in labels.iter() {
        match l {
            Label::C => k.mul(&lam.lower_hook(s), &mu.lower_hook(s)),
            Label::R => k.mul(&lam.upper_hook(s), &mu.upper_hook(s)),
            Label::J => k.mul(&UniPoly::one(), &(&mu.lower_hook(s) * &mu.upper_hook(s))),
            _ => {}
        }
    }
    Ok(k.finish())
}

pub fn stem_leaf(lam: &Partition, mu: &Partition, ctx: &mut BinomialContext) -> Result<StemLeaf> {
    let k = stem(lam, mu)?;
    let b = ctx.binomial(lam, mu);
    let leaf = b.checked_div(&k)?;
    if !leaf.is_polynomial() && skew_cells(lam, mu)?.rows().len() <= 2 {
        return Err(Error::InternalInconsistency(format!(
            "leaf of the two-row skew {lam}/{mu} is not a polynomial: {leaf}"
        )));
    }
    Ok(StemLeaf { stem: k, leaf })
}

pub fn leaf(lam: &Partition, mu: &Partition, ctx: &mut BinomialContext) -> Result<RatFun> {
    Ok(stem_leaf(lam, mu, ctx)?.leaf)
}

/// `h^big_small(s)`, with C and R taken from the decomposition of `big` by
/// `small`.
fn h_factor(big: &Partition, small: &Partition, labels: &DecompLabels, s: Cell, acc: &mut Fraction) {
    match labels.label(s) {
        Some(Label::C) => acc.mul(&big.lower_hook(s), &small.lower_hook(s)),
        Some(Label::R) => acc.mul(&big.upper_hook(s), &small.upper_hook(s)),
        _ => {}
    }
}

/// `ℓ^big_small(s)`, with C and R as for [`h_factor`].
fn ell_factor(big: &Partition, small: &Partition, labels: &DecompLabels, s: Cell, acc: &mut Fraction) {
    let one = UniPoly::one();
    match labels.label(s) {
        Some(Label::C) => acc.mul(&(&big.lower_hook(s) * &small.upper_hook(s)), &one),
        Some(Label::R) => acc.mul(&(&big.upper_hook(s) * &small.lower_hook(s)), &one),
        _ => {}
    }
}

fn nonempty(lam: &Partition, mu: &Partition) -> Result<DecompLabels> {
    ensure_contains(lam, mu)?;
    if lam == mu {
        return Err(Error::EmptySkew);
    }
    induced_decomposition(lam, mu)
}

fn s_plus(labels: &DecompLabels) -> Vec<Cell> {
    labels.iter().filter(|&(_, l)| matches!(l, Label::S | Label::J)).map(|(c, _)| c).collect()
}

/// `n·L_{λ/μ} − Σ_κ L_{κ/μ} Π_{s∈S₊} h^λ_κ(s) ℓ^κ_μ(s)`, summed over
/// `μ ⊆ κ ⊂: λ`.
pub fn leaf_recurrence_residual(lam: &Partition, mu: &Partition, ctx: &mut BinomialContext) -> Result<RatFun> {
    let labels = nonempty(lam, mu)?;
    let splus = s_plus(&labels);
    let n = (lam.size() - mu.size()) as i64;
    let mut rhs = RatFun::zero();
    for kappa in covers_between(mu, lam, CoverDirection::RemoveFromLam)? {
        let top = induced_decomposition(lam, &kappa)?;
        let bottom = induced_decomposition(&kappa, mu)?;
        let mut t = Fraction::one();
        t.mul_ratfun(&leaf(&kappa, mu, ctx)?);
        for &s in &splus {
            h_factor(lam, &kappa, &top, s, &mut t);
            ell_factor(&kappa, mu, &bottom, s, &mut t);
        }
        rhs = &rhs + &t.finish();
    }
    let lhs = leaf(lam, mu, ctx)?.scale(&n.into());
    Ok(&lhs - &rhs)
}

fn dual_residual(lam: &Partition, mu: &Partition, ctx: &mut BinomialContext, per_term_weight: bool) -> Result<RatFun> {
    let labels = nonempty(lam, mu)?;
    let splus = s_plus(&labels);
    let jset: Vec<Cell> = labels.cells(Label::J).collect();
    let n = (lam.size() - mu.size()) as i64;
    let mut rhs = RatFun::zero();
    for nu in covers_between(mu, lam, CoverDirection::AddToMu)? {
        let bottom = induced_decomposition(&nu, mu)?;
        let top = induced_decomposition(lam, &nu)?;
        let mut t = Fraction::one();
        t.mul_ratfun(&leaf(lam, &nu, ctx)?);
        for &s in &splus {
            h_factor(&nu, mu, &bottom, s, &mut t);
            ell_factor(lam, &nu, &top, s, &mut t);
        }
        for &s in &jset {
            t.mul(&(&mu.lower_hook(s) * &mu.upper_hook(s)), &(&nu.lower_hook(s) * &nu.upper_hook(s)));
        }
        if per_term_weight {
            let x = crate::binomials::added_box(&nu, mu)?;
            if top.label(x) == Some(Label::N) {
                t.mul(&UniPoly::r(), &UniPoly::one());
            }
        }
        rhs = &rhs + &t.finish();
    }
    let lhs = &leaf(lam, mu, ctx)?.scale(&n.into()) * &RatFun::from_poly(UniPoly::r());
    Ok(&lhs - &rhs)
}

/// Residual of the dual recurrence obtained by splitting off the first step
/// `μ ⊂: ν` of each chain:
///
/// `n·r·L_{λ/μ} − Σ_ν w_ν L_{λ/ν} Π_{S₊} h^ν_μ ℓ^λ_ν Π_{J} c_μc'_μ/(c_νc'_ν)`
///
/// where `w_ν = r` when the box `ν/μ` is labeled N in the decomposition of
/// `λ` by `ν`, and `w_ν = 1` otherwise.
pub fn dual_recurrence_residual(lam: &Partition, mu: &Partition, ctx: &mut BinomialContext) -> Result<RatFun> {
    dual_residual(lam, mu, ctx, true)
}

/// The same residual with `w_ν = 1` for every `ν`. This form does not vanish
/// in general; see [`dual_recurrence_residual`].
pub fn uniform_r_dual_residual(lam: &Partition, mu: &Partition, ctx: &mut BinomialContext) -> Result<RatFun> {
    dual_residual(lam, mu, ctx, false)
}
