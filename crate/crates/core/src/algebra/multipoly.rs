use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Rat, UniPoly};
use crate::error::{Error, Result};

/// The indeterminates a [`MultiPoly`] may use, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    R,
    Y,
    Z,
    Theta,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::R, Var::Y, Var::Z, Var::Theta];

    pub fn name(self) -> &'static str {
        match self {
            Var::R => "r",
            Var::Y => "y",
            Var::Z => "z",
            Var::Theta => "theta",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r" => Ok(Var::R),
            "y" => Ok(Var::Y),
            "z" => Ok(Var::Z),
            "theta" | "θ" => Ok(Var::Theta),
            other => Err(Error::Parse(format!("unknown variable '{other}'"))),
        }
    }
}

/// Sparse polynomial over Q in a subset of `{r, y, z, θ}`.
///
/// Exponent vectors are dense over `vars`, which is sorted and duplicate
/// free. Zero coefficients are never stored. Equality ignores the declared
/// variable list: two polynomials are equal when their terms agree after
/// lifting both to the union of their variables.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct MultiPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    ExactDiv,
}

/// Apply a ring operation after lifting both operands to a common variable set.
pub fn poly_ops(op: PolyOp, a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    match op {
        PolyOp::Add => Ok(a + b),
        PolyOp::Sub => Ok(a - b),
        PolyOp::Mul => Ok(a * b),
        PolyOp::ExactDiv => a.exact_div(b),
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: impl Into<Rat>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self { vars: Vec::new(), terms }
    }

    pub fn var(v: Var) -> Self {
        Self { vars: vec![v], terms: BTreeMap::from([(vec![1], Rat::one())]) }
    }

    /// Build from `(exponents, coefficient)` pairs over `vars`; repeated
    /// exponents are summed.
    pub fn from_terms(vars: &[Var], terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Result<Self> {
        let sorted: BTreeSet<Var> = vars.iter().copied().collect();
        if sorted.len() != vars.len() {
            return Err(Error::Parse("duplicate variable".into()));
        }
        let order: Vec<usize> = sorted.iter().map(|v| vars.iter().position(|w| w == v).unwrap()).collect();
        let mut out = BTreeMap::new();
        for (exp, c) in terms {
            if exp.len() != vars.len() {
                return Err(Error::Parse(format!(
                    "exponent vector of length {} for {} variables",
                    exp.len(),
                    vars.len()
                )));
            }
            let exp: Vec<u32> = order.iter().map(|&i| exp[i]).collect();
            add_term(&mut out, exp, c);
        }
        Ok(Self { vars: sorted.into_iter().collect(), terms: out })
    }

    /// `a + b·r` with integer `a`, `b`.
    pub fn linear_r(a: i64, b: i64) -> Self {
        &Self::constant(a) + &(&Self::constant(b) * &Self::var(Var::R))
    }

    pub fn from_unipoly(p: &UniPoly) -> Self {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (vec![i as u32], c.clone()));
        Self { vars: vec![Var::R], terms: terms.collect() }
    }

    /// Univariate view, if no variable other than `r` occurs.
    pub fn to_unipoly(&self) -> Option<UniPoly> {
        let ri = self.vars.iter().position(|&v| v == Var::R);
        let mut coeffs: Vec<Rat> = Vec::new();
        for (exp, c) in &self.terms {
            for (i, e) in exp.iter().enumerate() {
                if *e > 0 && Some(i) != ri {
                    return None;
                }
            }
            let deg = ri.map_or(0, |i| exp[i] as usize);
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, Rat::zero());
            }
            coeffs[deg] += c;
        }
        Some(UniPoly::from_coeffs(coeffs))
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Variables that actually occur with a positive exponent.
    pub fn used_vars(&self) -> Vec<Var> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| *v)
            .collect()
    }

    /// Coefficient of the monomial with the given exponents over `vars()`.
    pub fn coeff(&self, exp: &[u32]) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Re-express over a superset of the current variables.
    pub fn lift(&self, vars: &[Var]) -> Self {
        if vars == self.vars.as_slice() {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("lift target must contain every variable"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(exp, c)| {
                let mut e = vec![0u32; vars.len()];
                for (i, &k) in map.iter().enumerate() {
                    e[k] = exp[i];
                }
                (e, c.clone())
            })
            .collect();
        Self { vars: vars.to_vec(), terms }
    }

    /// Drop variables that do not occur.
    pub fn trimmed(&self) -> Self {
        let used = self.used_vars();
        let keep: Vec<usize> = used.iter().map(|v| self.vars.iter().position(|w| w == v).unwrap()).collect();
        let terms = self.terms.iter().map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c.clone())).collect();
        Self { vars: used, terms }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        Self { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect() }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one().lift(&self.vars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Exact quotient `q` with `q·divisor = self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let vars = union_vars(&self.vars, &divisor.vars);
        let mut rem = self.lift(&vars).terms;
        let divisor = divisor.lift(&vars);
        // Lex order on the dense exponents is a monomial order, so the
        // largest key is the leading term.
        let (dexp, dcoef) = divisor.terms.iter().next_back().expect("nonzero divisor");
        let dinv = dcoef.recip()?;
        let mut quot = BTreeMap::new();
        while let Some((exp, c)) = rem.iter().next_back() {
            if exp.iter().zip(dexp).any(|(a, b)| a < b) {
                return Err(Error::InexactDivision);
            }
            let qexp: Vec<u32> = exp.iter().zip(dexp).map(|(a, b)| a - b).collect();
            let qc = c * &dinv;
            for (e, dc) in &divisor.terms {
                let prod: Vec<u32> = e.iter().zip(&qexp).map(|(a, b)| a + b).collect();
                add_term(&mut rem, prod, -(&qc * dc));
            }
            quot.insert(qexp, qc);
        }
        Ok(Self { vars, terms: quot })
    }

    /// Replace each bound variable by its image; unbound variables pass
    /// through and bindings for absent variables are ignored.
    pub fn subst(&self, bindings: &BTreeMap<Var, MultiPoly>) -> Self {
        let active: Vec<(usize, &MultiPoly)> = self
            .vars
            .iter()
            .enumerate()
            .filter_map(|(i, v)| bindings.get(v).map(|p| (i, p)))
            .collect();
        if active.is_empty() {
            return self.clone();
        }
        let kept: Vec<Var> =
            self.vars.iter().enumerate().filter(|(i, _)| active.iter().all(|(j, _)| j != i)).map(|(_, v)| *v).collect();
        let mut vars = kept.clone();
        for (_, p) in &active {
            vars = union_vars(&vars, &p.vars);
        }
        let kept_idx: Vec<(usize, usize)> = kept
            .iter()
            .map(|v| (self.vars.iter().position(|w| w == v).unwrap(), vars.iter().position(|w| w == v).unwrap()))
            .collect();
        let mut powers: Vec<Vec<MultiPoly>> = active.iter().map(|(_, p)| vec![Self::one().lift(&vars), p.lift(&vars)]).collect();
        let mut out = Self { vars: vars.clone(), terms: BTreeMap::new() };
        for (exp, c) in &self.terms {
            let mut mono = vec![0u32; vars.len()];
            for &(from, to) in &kept_idx {
                mono[to] = exp[from];
            }
            let mut term = Self { vars: vars.clone(), terms: BTreeMap::from([(mono, c.clone())]) };
            for (k, (i, _)) in active.iter().enumerate() {
                let e = exp[*i] as usize;
                while powers[k].len() <= e {
                    let next = &powers[k][powers[k].len() - 1] * &powers[k][1];
                    powers[k].push(next);
                }
                term = &term * &powers[k][e];
            }
            out = &out + &term;
        }
        out
    }

    /// Convenience wrapper for a single binding.
    pub fn subst_one(&self, v: Var, image: &MultiPoly) -> Self {
        self.subst(&BTreeMap::from([(v, image.clone())]))
    }

    /// Evaluate at a rational point; every occurring variable must be bound.
    pub fn eval(&self, point: &BTreeMap<Var, Rat>) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (exp, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = point.get(&self.vars[i]).ok_or(Error::UnboundVariable(self.vars[i]))?;
                t *= &x.pow(e);
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Terms in graded lexicographic order (by total degree, then by the
    /// exponent vector), ascending.
    pub fn graded_terms(&self) -> Vec<(&Vec<u32>, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| a.0.cmp(b.0))
        });
        v
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let vars = union_vars(&self.vars, &other.vars);
        let mut terms = self.lift(&vars).terms;
        for (e, c) in other.lift(&vars).terms {
            add_term(&mut terms, e, if negate { -c } else { c });
        }
        Self { vars, terms }
    }
}

fn add_term(terms: &mut BTreeMap<Vec<u32>, Rat>, exp: Vec<u32>, c: Rat) {
    if c.is_zero() {
        return;
    }
    match terms.entry(exp) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += &c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

fn union_vars(a: &[Var], b: &[Var]) -> Vec<Var> {
    if a == b {
        return a.to_vec();
    }
    let set: BTreeSet<Var> = a.iter().chain(b).copied().collect();
    set.into_iter().collect()
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let vars = union_vars(&self.vars, &other.vars);
        self.lift(&vars).terms == other.lift(&vars).terms
    }
}

impl Eq for MultiPoly {}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, false)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, true)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let vars = union_vars(&self.vars, &rhs.vars);
        let a = self.lift(&vars);
        let b = rhs.lift(&vars);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_term(&mut terms, e, ca * cb);
            }
        }
        MultiPoly { vars, terms }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::one(), |acc, x| &acc * &x)
    }
}

impl From<&UniPoly> for MultiPoly {
    fn from(p: &UniPoly) -> Self {
        Self::from_unipoly(p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (exp, c)) in self.graded_terms().into_iter().enumerate() {
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, &e)| if e == 1 { self.vars[i].to_string() } else { format!("{}^{e}", self.vars[i]) })
                .collect();
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[derive(Clone, Serialize, Deserialize)]
pub(crate) struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Clone, Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coef: String,
}

impl From<MultiPoly> for PolyJson {
    fn from(p: MultiPoly) -> Self {
        let terms = p
            .graded_terms()
            .into_iter()
            .map(|(e, c)| TermJson { exp: e.clone(), coef: c.to_string() })
            .collect();
        PolyJson { vars: p.vars.iter().map(|v| v.name().to_string()).collect(), terms }
    }
}

impl TryFrom<PolyJson> for MultiPoly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self> {
        let vars = j.vars.iter().map(|s| s.parse()).collect::<Result<Vec<Var>>>()?;
        let terms = j
            .terms
            .into_iter()
            .map(|t| Ok((t.exp, t.coef.parse::<Rat>()?)))
            .collect::<Result<Vec<_>>>()?;
        MultiPoly::from_terms(&vars, terms)
    }
}

impl fmt::Display for PolyJson {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}
