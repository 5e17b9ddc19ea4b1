//! Jack polynomials built directly as Laplace–Beltrami eigenfunctions, and
//! binomial coefficients read off from the expansion of `P_λ(1+x)`.
//!
//! Everything here works on explicit expansions in `M` variables and is
//! meant for small sizes only.

mod explicit;

pub use explicit::{monomial_expand, Coeff, ExplicitPoly};

use std::collections::{BTreeMap, HashMap};

use explicit::{distinct_permutations, padded};

use crate::algebra::{Rat, RatFun, UniPoly};
use crate::error::{Error, Result};
use crate::partitions::{partitions_with_max_len, Partition};

/// Largest `|λ|` and `M` the oracle accepts.
pub const MAX_SIZE: usize = 10;
pub const MAX_VARS: usize = 10;

/// A symmetric polynomial in `M` variables in the monomial basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SymPoly {
    nvars: usize,
    coeffs: BTreeMap<Partition, RatFun>,
}

impl SymPoly {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, RatFun> {
        &self.coeffs
    }

    /// Coefficient of `m_μ`.
    pub fn coeff(&self, mu: &Partition) -> RatFun {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn to_explicit(&self) -> Result<ExplicitPoly<RatFun>> {
        let mut out = ExplicitPoly::zero(self.nvars);
        for (mu, c) in &self.coeffs {
            for e in distinct_permutations(&padded(mu, self.nvars)?) {
                out.add_term(e, c.clone());
            }
        }
        Ok(out)
    }

    /// Value at `x_1 = … = x_M = 1`.
    pub fn eval_ones(&self) -> RatFun {
        self.coeffs
            .iter()
            .map(|(mu, c)| c.scale(&Rat::from(rearrangements(mu, self.nvars))))
            .sum()
    }
}

/// Number of distinct rearrangements of `μ` padded with zeros to length `M`.
pub fn rearrangements(mu: &Partition, nvars: usize) -> usize {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in mu.parts() {
        *mult.entry(p).or_default() += 1;
    }
    *mult.entry(0).or_default() += nvars.saturating_sub(mu.len());
    // multinomial coefficient, built up one block at a time
    let mut total = 0usize;
    let mut out = 1u128;
    for &k in mult.values() {
        for i in 1..=k {
            total += 1;
            out = out * total as u128 / i as u128;
        }
    }
    out as usize
}

/// Memo tables for one sequence of oracle calls. Not shared between threads.
#[derive(Default)]
pub struct JackOracle {
    action: HashMap<(Partition, usize), BTreeMap<Partition, RatFun>>,
    jacks: HashMap<(Partition, usize), SymPoly>,
}

fn check_scale(lam: &Partition, nvars: usize) -> Result<()> {
    if lam.size() > MAX_SIZE || nvars > MAX_VARS {
        return Err(Error::ScaleLimit(format!(
            "oracle supports |lambda| <= {MAX_SIZE} and M <= {MAX_VARS}, got |lambda| = {} and M = {nvars}",
            lam.size()
        )));
    }
    if lam.len() > nvars {
        return Err(Error::TooManyParts { parts: lam.len(), vars: nvars });
    }
    Ok(())
}

impl JackOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// `D(α)m_μ` in the monomial basis.
    pub fn operator_on_monomial(&mut self, mu: &Partition, nvars: usize) -> Result<&BTreeMap<Partition, RatFun>> {
        let key = (mu.clone(), nvars);
        if !self.action.contains_key(&key) {
            let m = monomial_expand(mu, nvars)?;
            let a = m.apply_second_order();
            let b = m.apply_first_order()?;
            let mut row = BTreeMap::new();
            for nu in partitions_with_max_len(mu.size(), nvars) {
                let e = padded(&nu, nvars)?;
                let (ca, cb) = (a.coeff(&e), b.coeff(&e));
                if ca.is_zero() && cb.is_zero() {
                    continue;
                }
                // ca/(2r) + cb
                let num = UniPoly::from_coeffs(vec![ca, &cb * &Rat::from(2)]);
                row.insert(nu, RatFun::new(num, UniPoly::linear(0, 2))?);
            }
            self.action.insert(key.clone(), row);
        }
        Ok(&self.action[&key])
    }

    /// Diagonal entry of `D(α)` at `m_μ`; for `μ = λ` this is the eigenvalue
    /// of `P_λ`.
    pub fn eigenvalue(&mut self, lam: &Partition, nvars: usize) -> Result<RatFun> {
        check_scale(lam, nvars)?;
        Ok(self.operator_on_monomial(lam, nvars)?.get(lam).cloned().unwrap_or_default())
    }

    pub fn jack_polynomial(&mut self, lam: &Partition, nvars: usize) -> Result<SymPoly> {
        check_scale(lam, nvars)?;
        let key = (lam.clone(), nvars);
        if let Some(p) = self.jacks.get(&key) {
            return Ok(p.clone());
        }
        let e = self.eigenvalue(lam, nvars)?;
        let lower: Vec<Partition> = partitions_with_max_len(lam.size(), nvars)
            .into_iter()
            .filter(|nu| nu != lam && lam.dominates(nu))
            .collect();
        let mut coeffs = BTreeMap::from([(lam.clone(), RatFun::one())]);
        // Decreasing lex order refines dominance, so every m_μ feeding into
        // m_ν has already been solved for.
        for nu in lower {
            let mut rhs = RatFun::zero();
            for (mu, v) in &coeffs {
                if let Some(c) = self.operator_on_monomial(mu, nvars)?.get(&nu) {
                    rhs = &rhs + &(v * c);
                }
            }
            let diag = self.operator_on_monomial(&nu, nvars)?.get(&nu).cloned().unwrap_or_default();
            let gap = &e - &diag;
            if gap.is_zero() {
                return Err(Error::DegenerateEigenvalue { lam: lam.to_string(), mu: nu.to_string() });
            }
            if !rhs.is_zero() {
                coeffs.insert(nu, &rhs / &gap);
            }
        }
        let p = SymPoly { nvars, coeffs };
        self.jacks.insert(key, p.clone());
        Ok(p)
    }

    /// `P_λ(1, …, 1)` with `M` ones.
    pub fn jack_eval_ones(&mut self, lam: &Partition, nvars: usize) -> Result<RatFun> {
        Ok(self.jack_polynomial(lam, nvars)?.eval_ones())
    }

    /// `b^λ_μ` from `P_λ(1+x)/P_λ(1) = Σ_ν b^λ_ν P_ν(x)/P_ν(1)`.
    pub fn binomial_oracle(&mut self, lam: &Partition, mu: &Partition, nvars: usize) -> Result<RatFun> {
        check_scale(lam, nvars)?;
        if mu.len() > nvars {
            return Err(Error::TooManyParts { parts: mu.len(), vars: nvars });
        }
        if mu.size() > lam.size() {
            return Ok(RatFun::zero());
        }
        let p_lam = self.jack_polynomial(lam, nvars)?;
        let degree = mu.size();

        // f_ν = [x^ν] P_λ(1+x) for |ν| = |μ|
        let targets: Vec<Partition> = partitions_with_max_len(degree, nvars).into_iter().filter(|nu| nu >= mu).collect();
        let target_exps: Vec<Vec<u32>> = targets.iter().map(|nu| padded(nu, nvars)).collect::<Result<_>>()?;
        let mut shifted: Vec<RatFun> = vec![RatFun::zero(); targets.len()];
        for (kappa, v) in p_lam.coeffs() {
            let perms = distinct_permutations(&padded(kappa, nvars)?);
            for (slot, nu) in shifted.iter_mut().zip(&target_exps) {
                let count: u128 = perms
                    .iter()
                    .map(|a| a.iter().zip(nu).map(|(&ai, &ni)| binom(ai, ni)).product::<u128>())
                    .sum();
                if count > 0 {
                    *slot = &*slot + &v.scale(&Rat::from_int(count));
                }
            }
        }

        // peel off P_ν in decreasing lex order: c_ν = f_ν − Σ_ρ c_ρ [m_ν]P_ρ
        let mut solved: Vec<(Partition, RatFun)> = Vec::new();
        for (nu, f) in targets.iter().zip(shifted) {
            let mut c = f;
            for (rho, c_rho) in &solved {
                let p_rho = self.jack_polynomial(rho, nvars)?;
                let k = p_rho.coeff(nu);
                if !k.is_zero() {
                    c = &c - &(c_rho * &k);
                }
            }
            solved.push((nu.clone(), c));
        }
        let c_mu = solved.pop().map(|(_, c)| c).unwrap_or_default();
        if c_mu.is_zero() {
            return Ok(c_mu);
        }
        let ones_mu = self.jack_eval_ones(mu, nvars)?;
        let ones_lam = p_lam.eval_ones();
        Ok(&(&c_mu * &ones_mu) / &ones_lam)
    }
}

fn binom(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn jack_polynomial(lam: &Partition, nvars: usize) -> Result<SymPoly> {
    JackOracle::new().jack_polynomial(lam, nvars)
}

pub fn jack_eval_ones(lam: &Partition, nvars: usize) -> Result<RatFun> {
    JackOracle::new().jack_eval_ones(lam, nvars)
}

pub fn binomial_oracle(lam: &Partition, mu: &Partition, nvars: usize) -> Result<RatFun> {
    JackOracle::new().binomial_oracle(lam, mu, nvars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(UniPoly::from_ints(num), UniPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn two_variable_p2() {
        // by hand: D m_2 = (1/r + 2) m_2 + 2 m_11, D m_11 = m_11
        let p2 = jack_polynomial(&p("2"), 2).unwrap();
        assert_eq!(p2.coeff(&p("2")), RatFun::one());
        assert_eq!(p2.coeff(&p("1,1")), rf(&[0, 2], &[1, 1]));
        assert_eq!(p2.coeff(&p("1,1")).eval(&Rat::one()).unwrap(), Rat::one());
        assert_eq!(jack_eval_ones(&p("2"), 2).unwrap(), rf(&[2, 4], &[1, 1]));
    }

    #[test]
    fn small_examples() {
        let p11 = jack_polynomial(&p("1,1"), 4).unwrap();
        assert_eq!(p11.support().collect::<Vec<_>>(), vec![&p("1,1")]);
        let p21 = jack_polynomial(&p("2,1"), 3).unwrap();
        assert_eq!(p21.support().cloned().collect::<Vec<_>>(), vec![p("1,1,1"), p("2,1")]);
        assert_eq!(jack_eval_ones(&p("1"), 3).unwrap(), RatFun::from_int(3));
        assert_eq!(jack_eval_ones(&p("1,1"), 3).unwrap(), RatFun::from_int(3));
    }

    #[test]
    fn oracle_binomials() {
        assert_eq!(binomial_oracle(&p("2,1"), &p("2,1"), 3).unwrap(), RatFun::one());
        assert_eq!(binomial_oracle(&p("1"), &p(""), 2).unwrap(), RatFun::one());
        assert_eq!(binomial_oracle(&p("2"), &p("1"), 2).unwrap(), RatFun::from_int(2));
        assert!(binomial_oracle(&p("2"), &p("1,1"), 2).unwrap().is_zero());
    }

    #[test]
    fn limits() {
        assert!(matches!(jack_polynomial(&p("11"), 2), Err(Error::ScaleLimit(_))));
        assert!(matches!(jack_polynomial(&p("1"), 11), Err(Error::ScaleLimit(_))));
        assert!(matches!(jack_polynomial(&p("1,1,1"), 2), Err(Error::TooManyParts { .. })));
        assert!(matches!(binomial_oracle(&p("2"), &p("1,1,1"), 2), Err(Error::TooManyParts { .. })));
    }

    #[test]
    fn rearrangement_counts() {
        assert_eq!(rearrangements(&p("1"), 3), 3);
        assert_eq!(rearrangements(&p("2,1"), 3), 6);
        assert_eq!(rearrangements(&p(""), 5), 1);
        assert_eq!(rearrangements(&p("1,1"), 10), 45);
    }
}
