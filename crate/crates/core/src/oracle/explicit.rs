//! Polynomials written out in `x_1..x_M`, and the Laplace–Beltrami operator
//! acting on them.

use std::collections::BTreeMap;

use crate::algebra::{Rat, RatFun, UniPoly};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Coefficient ring for [`ExplicitPoly`].
pub trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul_int(&self, k: i64) -> Self;
}

impl Coeff for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_int(&self, k: i64) -> Self {
        self * &Rat::from(k)
    }
}

impl Coeff for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_int(&self, k: i64) -> Self {
        self.scale(&Rat::from(k))
    }
}

/// A polynomial in `x_1..x_M` as a map from exponent vectors to coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ExplicitPoly<C> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> ExplicitPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: C) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> ExplicitPoly<D> {
        let mut out = ExplicitPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// `Σ_i x_i² ∂²f/∂x_i²`
    pub fn apply_second_order(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k: i64 = e.iter().map(|&a| a as i64 * (a as i64 - 1)).sum();
            out.add_term(e.clone(), c.mul_int(k));
        }
        out
    }

    /// `x_i² ∂f/∂x_i`
    fn x2_partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] += 1;
            out.add_term(e2, c.mul_int(e[i] as i64));
        }
        out
    }

    /// Exact quotient by `x_i − x_j`.
    pub fn div_difference(&self, i: usize, j: usize) -> Result<Self> {
        // Group by the exponents outside slots i and j; each group is a
        // polynomial in x_i whose coefficients are polynomials in x_j.
        let mut groups: BTreeMap<Vec<u32>, BTreeMap<u32, BTreeMap<u32, C>>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[i] = 0;
            rest[j] = 0;
            groups.entry(rest).or_default().entry(e[i]).or_default().insert(e[j], c.clone());
        }
        let mut out = Self::zero(self.nvars);
        for (rest, by_xi) in groups {
            let top = *by_xi.keys().next_back().expect("nonempty group");
            // synthetic division: q_{k-1} = c_k + x_j·q_k
            let mut q: BTreeMap<u32, C> = BTreeMap::new();
            for k in (0..=top).rev() {
                let mut acc: BTreeMap<u32, C> = by_xi.get(&k).cloned().unwrap_or_default();
                for (ej, c) in q.iter() {
                    let slot = acc.entry(ej + 1).or_insert_with(C::zero);
                    *slot = slot.add(c);
                }
                acc.retain(|_, c| !c.is_zero());
                if k == 0 {
                    if !acc.is_empty() {
                        return Err(Error::InexactDivision);
                    }
                } else {
                    for (ej, c) in &acc {
                        let mut e = rest.clone();
                        e[i] = k - 1;
                        e[j] = *ej;
                        out.add_term(e, c.clone());
                    }
                }
                q = acc;
            }
        }
        Ok(out)
    }

    /// `Σ_{i≠j} x_i²/(x_i − x_j) ∂f/∂x_i`, taken pairwise as
    /// `(x_i²∂_i f − x_j²∂_j f)/(x_i − x_j)`.
    pub fn apply_first_order(&self) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        let parts: Vec<Self> = (0..self.nvars).map(|i| self.x2_partial(i)).collect();
        for i in 0..self.nvars {
            for j in i + 1..self.nvars {
                out = out.add(&parts[i].sub(&parts[j]).div_difference(i, j)?);
            }
        }
        Ok(out)
    }
}

impl ExplicitPoly<RatFun> {
    /// `D(α)f = (α/2)Σ x_i²∂_i²f + Σ_{i≠j} x_i²/(x_i−x_j)∂_i f` with `α = 1/r`.
    pub fn apply_laplace_beltrami(&self) -> Result<Self> {
        let half_alpha = RatFun::new(UniPoly::one(), UniPoly::linear(0, 2))?;
        let a = self.apply_second_order().map(|c| c * &half_alpha);
        Ok(a.add(&self.apply_first_order()?))
    }
}

/// Distinct rearrangements of `v`, in increasing lexicographic order.
pub(crate) fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

pub(crate) fn padded(mu: &Partition, nvars: usize) -> Result<Vec<u32>> {
    if mu.len() > nvars {
        return Err(Error::TooManyParts { parts: mu.len(), vars: nvars });
    }
    let mut v: Vec<u32> = mu.parts().iter().map(|&p| p as u32).collect();
    v.resize(nvars, 0);
    Ok(v)
}

/// The monomial symmetric polynomial `m_μ(x_1..x_M)`.
pub fn monomial_expand(mu: &Partition, nvars: usize) -> Result<ExplicitPoly<Rat>> {
    let mut out = ExplicitPoly::zero(nvars);
    for e in distinct_permutations(&padded(mu, nvars)?) {
        out.add_term(e, Rat::one());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn monomials() {
        let m = monomial_expand(&p("1"), 2).unwrap();
        assert_eq!(m.terms().keys().cloned().collect::<Vec<_>>(), vec![vec![0, 1], vec![1, 0]]);
        let m = monomial_expand(&p("2,1"), 2).unwrap();
        assert_eq!(m.terms().keys().cloned().collect::<Vec<_>>(), vec![vec![1, 2], vec![2, 1]]);
        let m = monomial_expand(&p("1,1"), 3).unwrap();
        assert_eq!(m.terms().len(), 3);
        assert!(m.terms().values().all(Rat::is_one));
        assert!(matches!(monomial_expand(&p("1,1,1"), 2), Err(Error::TooManyParts { parts: 3, vars: 2 })));
    }

    #[test]
    fn divided_difference() {
        // x1^3 - x2^3 = (x1 - x2)(x1^2 + x1 x2 + x2^2)
        let mut f = ExplicitPoly::<Rat>::zero(2);
        f.add_term(vec![3, 0], Rat::one());
        f.add_term(vec![0, 3], Rat::from(-1));
        let q = f.div_difference(0, 1).unwrap();
        assert_eq!(q, monomial_expand(&p("2"), 2).unwrap().add(&monomial_expand(&p("1,1"), 2).unwrap()));
        let mut g = ExplicitPoly::<Rat>::zero(2);
        g.add_term(vec![1, 0], Rat::one());
        assert!(matches!(g.div_difference(0, 1), Err(Error::InexactDivision)));
    }

    #[test]
    fn first_order_on_m2() {
        // pair term: (2x1^3 - 2x2^3)/(x1 - x2) = 2 m_2 + 2 m_11
        let b = monomial_expand(&p("2"), 2).unwrap().apply_first_order().unwrap();
        assert_eq!(b.coeff(&[2, 0]), Rat::from(2));
        assert_eq!(b.coeff(&[1, 1]), Rat::from(2));
        assert_eq!(b.terms().len(), 3);
    }
}
