//! Jack binomial coefficients `b^λ_μ` from adjacent coefficients.

use std::collections::HashMap;

use crate::algebra::{RatFun, UniPoly};
use crate::error::{Error, Result};
use crate::partitions::{covers_between, Cell, CoverDirection, Partition};

/// Default largest `|λ| − |μ|` accepted by [`binomial_chain_sum`].
pub const CHAIN_CAP: usize = 7;

/// Memo for [`binomial`]. Entries never change once written.
#[derive(Default)]
pub struct BinomialContext {
    memo: HashMap<(Partition, Partition), RatFun>,
    adjacent: HashMap<(Partition, Partition), RatFun>,
}

impl BinomialContext {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn adjacent_coeff(&mut self, lam: &Partition, kappa: &Partition) -> Result<RatFun> {
        let key = (lam.clone(), kappa.clone());
        if let Some(a) = self.adjacent.get(&key) {
            return Ok(a.clone());
        }
        let a = adjacent_coeff(lam, kappa)?;
        self.adjacent.insert(key, a.clone());
        Ok(a)
    }

    /// `(|λ|−|μ|)·b^λ_μ = Σ_{κ⊂:λ} a^λ_κ·b^κ_μ`, with `b^λ_λ = 1` and
    /// `b^λ_μ = 0` unless `μ ⊆ λ`.
    pub fn binomial(&mut self, lam: &Partition, mu: &Partition) -> RatFun {
        if lam == mu {
            return RatFun::one();
        }
        if !lam.contains(mu) {
            return RatFun::zero();
        }
        let key = (lam.clone(), mu.clone());
        if let Some(b) = self.memo.get(&key) {
            return b.clone();
        }
        let kappas = covers_between(mu, lam, CoverDirection::RemoveFromLam).expect("mu is contained in lam");
        let mut sum = RatFun::zero();
        for kappa in &kappas {
            let a = self.adjacent_coeff(lam, kappa).expect("kappa is adjacent to lam");
            let b = self.binomial(kappa, mu);
            sum = &sum + &(&a * &b);
        }
        let n = (lam.size() - mu.size()) as i64;
        let b = sum.scale(&crate::algebra::Rat::new(1, n).expect("n > 0"));
        self.memo.insert(key, b.clone());
        b
    }
}

/// The box of `lam` outside `kappa` when `kappa ⊂: lam`.
pub(crate) fn added_box(lam: &Partition, kappa: &Partition) -> Result<Cell> {
    let not_adjacent = || Error::NotAdjacent { lam: lam.to_string(), kappa: kappa.to_string() };
    if !lam.contains(kappa) || lam.size() != kappa.size() + 1 {
        return Err(not_adjacent());
    }
    let row = (1..=lam.len()).find(|&i| lam.row_len(i) != kappa.row_len(i)).ok_or_else(not_adjacent)?;
    Ok(Cell::new(row, lam.row_len(row)))
}

/// Kaneko's coefficient `a^λ_κ = Π_C c_λ/c_κ · Π_R c'_λ/c'_κ`, where C and R
/// are the boxes of `κ` in the column and row of the added box.
pub fn adjacent_coeff(lam: &Partition, kappa: &Partition) -> Result<RatFun> {
    let x = added_box(lam, kappa)?;
    let mut num = UniPoly::one();
    let mut den = UniPoly::one();
    for i in 1..x.row {
        let s = Cell::new(i, x.col);
        num = &num * &lam.lower_hook(s);
        den = &den * &kappa.lower_hook(s);
    }
    for j in 1..x.col {
        let s = Cell::new(x.row, j);
        num = &num * &lam.upper_hook(s);
        den = &den * &kappa.upper_hook(s);
    }
    RatFun::new(num, den)
}

/// `b^λ_μ` with a fresh memo.
pub fn binomial(lam: &Partition, mu: &Partition) -> RatFun {
    BinomialContext::new().binomial(lam, mu)
}

/// `b^λ_μ = (1/n!)·Σ_T a_T` over all saturated chains from `μ` to `λ`.
pub fn binomial_chain_sum(lam: &Partition, mu: &Partition) -> Result<RatFun> {
    binomial_chain_sum_capped(lam, mu, CHAIN_CAP)
}

pub fn binomial_chain_sum_capped(lam: &Partition, mu: &Partition, cap: usize) -> Result<RatFun> {
    if !lam.contains(mu) {
        return Ok(RatFun::zero());
    }
    let n = lam.size() - mu.size();
    if n > cap {
        return Err(Error::ScaleLimit(format!("chain sum over {n} boxes exceeds the cap of {cap}")));
    }
    let mut total = RatFun::zero();
    let mut ctx = BinomialContext::new();
    walk_chains(lam, mu, RatFun::one(), &mut ctx, &mut total)?;
    let factorial: i64 = (1..=n as i64).product();
    Ok(total.scale(&crate::algebra::Rat::new(1, factorial)?))
}

fn walk_chains(top: &Partition, mu: &Partition, acc: RatFun, ctx: &mut BinomialContext, total: &mut RatFun) -> Result<()> {
    if top == mu {
        *total = &*total + &acc;
        return Ok(());
    }
    for kappa in covers_between(mu, top, CoverDirection::RemoveFromLam)? {
        let a = ctx.adjacent_coeff(top, &kappa)?;
        walk_chains(&kappa, mu, &acc * &a, ctx, total)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(UniPoly::from_ints(num), UniPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn adjacent_examples() {
        assert_eq!(adjacent_coeff(&p("1"), &p("")).unwrap(), RatFun::one());
        assert_eq!(adjacent_coeff(&p("2"), &p("1")).unwrap(), RatFun::from_int(2));
        assert_eq!(adjacent_coeff(&p("2,1"), &p("1,1")).unwrap(), rf(&[2, 1], &[1, 1]));
        // C = {(1,1)}: c_λ = 2r, c_κ = r
        assert_eq!(adjacent_coeff(&p("1,1"), &p("1")).unwrap(), RatFun::from_int(2));
        assert!(matches!(adjacent_coeff(&p("2,1"), &p("")), Err(Error::NotAdjacent { .. })));
        assert!(matches!(adjacent_coeff(&p("2"), &p("1,1")), Err(Error::NotAdjacent { .. })));
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(binomial(&p("3,1"), &p("3,1")), RatFun::one());
        assert_eq!(binomial(&p("2"), &p("1")), RatFun::from_int(2));
        assert!(binomial(&p("2"), &p("1,1")).is_zero());
        assert_eq!(binomial(&p("2"), &p("1")).eval(&Rat::one()).unwrap(), Rat::from(2));
    }

    #[test]
    fn chain_sum_examples() {
        assert_eq!(binomial_chain_sum(&p("2"), &p("")).unwrap(), RatFun::one());
        assert_eq!(binomial_chain_sum(&p("1,1"), &p("")).unwrap(), RatFun::one());
        assert_eq!(binomial_chain_sum(&p("2,1"), &p("2,1")).unwrap(), RatFun::one());
        assert!(binomial_chain_sum(&p("2"), &p("1,1")).unwrap().is_zero());
        assert!(matches!(binomial_chain_sum(&p("8"), &p("")), Err(Error::ScaleLimit(_))));
    }
}
