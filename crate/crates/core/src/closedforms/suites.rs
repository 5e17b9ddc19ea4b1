use rayon::prelude::*;

use super::{
    closed_leaf, gap_substitution, int, m_poly, n_poly, p_poly, phi, psi_at, q_poly, r, theta_shift, tilde_l,
    tilde_symmetry_residual, y, LeafFormulaInput,
};
use crate::algebra::{MultiPoly, Rat, Var};
use crate::error::{Error, Result};
use crate::report::{CheckEntry, SuiteReport};

/// Every suite name accepted by [`identity_suite`], `all` excluded.
pub const SUITES: [&str; 14] = [
    "Q-recurrence",
    "Q-dual",
    "M-recurrence",
    "M-lemma",
    "substitution",
    "P-recurrence",
    "P-dual",
    "phi-identities",
    "psi-identities",
    "symQ",
    "symP",
    "tilde-sym",
    "corollary",
    "N-relabel",
];

/// Largest `u_max`/`d_max` the suites accept.
pub const MAX_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub u_max: usize,
    pub d_max: usize,
    pub m_max: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { u_max: 8, d_max: 8, m_max: 8 }
    }
}

impl Caps {
    pub fn new(u_max: usize, d_max: usize) -> Self {
        Self { u_max, d_max, m_max: u_max.min(d_max) }
    }
}

fn entry(identity: &str, params: String, residual: MultiPoly) -> CheckEntry {
    CheckEntry::from_poly(identity, params, residual)
}

fn k(n: usize) -> MultiPoly {
    int(n as i64)
}

fn two_r() -> MultiPoly {
    r().scale(&Rat::from(2))
}

fn shift_y(p: &MultiPoly, by: i64) -> MultiPoly {
    p.subst_one(Var::Y, &(&y() + &int(by)))
}

/// `L(u,d;m,0)`, including the `m = 0` boundary.
fn lz(u: usize, d: usize, m: usize) -> MultiPoly {
    closed_leaf(&LeafFormulaInput::new(u, d, m, MultiPoly::zero())).expect("m <= d")
}

fn ud_pairs(caps: Caps) -> Vec<(usize, usize)> {
    (0..=caps.u_max).flat_map(|u| (0..=caps.d_max).map(move |d| (u, d))).filter(|&(u, d)| u + d > 0).collect()
}

fn udm_triples(caps: Caps) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for u in 1..=caps.u_max {
        for d in 1..=caps.d_max {
            for m in 1..=u.min(d).min(caps.m_max) {
                out.push((u, d, m));
            }
        }
    }
    out
}

fn q_recurrence(u: usize, d: usize) -> MultiPoly {
    let lhs = &(&k(u + d) * &(&(&y() + &k(u)) + &r())) * &q_poly(u, d);
    let mut rhs = MultiPoly::zero();
    if u > 0 {
        rhs = &rhs + &(&(&k(u) * &(&(&y() + &k(u + d)) + &r())) * &q_poly(u - 1, d));
    }
    if d > 0 {
        let c = &(&(&k(d) * &(&y() + &r())) * &(&y() + &k(u + 1))) * &(&(&y() + &k(u)) + &two_r());
        rhs = &rhs + &(&c * &shift_y(&q_poly(u, d - 1), 1));
    }
    &lhs - &rhs
}

fn q_dual(u: usize, d: usize) -> MultiPoly {
    let lhs = &(&k(u + d) * &(&(&y() + &k(d)) + &r())) * &q_poly(u, d);
    let mut rhs = MultiPoly::zero();
    if u > 0 {
        rhs = &rhs + &(&(&k(u) * &(&y() + &r())) * &shift_y(&q_poly(u - 1, d), 1));
    }
    if d > 0 {
        let c = &(&(&k(d) * &(&(&y() + &k(u + d)) + &r())) * &(&(&y() + &int(d as i64 - 1)) + &two_r()))
            * &(&y() + &k(d));
        rhs = &rhs + &(&c * &q_poly(u, d - 1));
    }
    &lhs - &rhs
}

fn m_recurrence(u: usize, d: usize) -> MultiPoly {
    let z = MultiPoly::var(Var::Z);
    let (ui, di) = (u as i64, d as i64);
    let lhs = &(&k(u + d) * &(&z + &int(ui - di))) * &m_poly(u, d);
    let mut rhs = MultiPoly::zero();
    if u > 0 {
        rhs = &rhs + &(&(&k(u) * &(&z + &k(u))) * &m_poly(u - 1, d));
    }
    if d > 0 {
        let c = &(&k(d) * &(&z - &k(d))) * &theta_shift(ui - di);
        rhs = &rhs + &(&c * &m_poly(u, d - 1));
    }
    &lhs - &rhs
}

fn m_lemma(u: usize, d: usize) -> MultiPoly {
    let z = MultiPoly::var(Var::Z);
    let mut rhs = &theta_shift(u as i64 - d as i64) * &m_poly(u, d - 1);
    if u > 0 {
        rhs = &rhs - &(&(&k(u) * &(&z + &k(u))) * &m_poly(u - 1, d - 1));
    }
    &m_poly(u, d) - &rhs
}

fn substitution(u: usize, d: usize) -> MultiPoly {
    &q_poly(u, d) - &m_poly(u, d).subst(&gap_substitution(d))
}

fn p_recurrence(u: usize, d: usize, m: usize) -> MultiPoly {
    let p = p_poly(u, d, m).expect("1 <= m <= min(u, d)");
    let b0 = &k(u + d) * &(&k(u - m) + &r());
    let b1 = &k(u - m) * &(&k(u + d - m) + &r());
    let b2 = &k(d) * &(&k(u - m) + &two_r());
    let mut rhs = &b2 * &lz(u, d - 1, m - 1);
    if u > m {
        rhs = &rhs + &(&b1 * &lz(u - 1, d, m));
    }
    &(&b0 * &p) - &rhs
}

fn p_dual(u: usize, d: usize, m: usize) -> MultiPoly {
    let p = p_poly(u, d, m).expect("1 <= m <= min(u, d)");
    let b0 = &k(u + d) * &(&k(d - m) + &r());
    let mut rhs = lz(u - 1, d, m - 1);
    if d > m {
        let b2 = &(&(&k(d) * &k(d - m)) * &(&k(u + d - m) + &r())) * &(&int(d as i64 - m as i64 - 1) + &two_r());
        rhs = &rhs + &(&b2 * &lz(u, d - 1, m));
    }
    &(&b0 * &p) - &rhs
}

/// The three φ identities at index `d ≥ 1`.
fn phi_identities(d: usize) -> [MultiPoly; 3] {
    let di = d as i64;
    let a = &phi(d) - &(&(&(&y() + &int(1)) * &(&y() + &two_r())) * &shift_y(&phi(d - 1), 1));
    let b = &phi(d) - &(&(&(&y() + &int(di)) * &(&(&y() + &int(di - 1)) + &two_r())) * &phi(d - 1));
    let c = &(&(&shift_y(&phi(d), 1) * &(&y() + &int(1))) * &(&y() + &two_r()))
        - &(&(&(&y() + &int(di + 1)) * &(&(&y() + &int(di)) + &two_r())) * &phi(d));
    [a, b, c]
}

/// `φ_d(y) − (y+d)(y+d+1+2r)φ_{d−1}(y)`: the second φ identity with `+1` in
/// place of `−1`. Not an identity for any `d ≥ 1`.
pub fn phi_second_plus_one_residual(d: usize) -> MultiPoly {
    let di = d as i64;
    &phi(d) - &(&(&(&y() + &int(di)) * &(&(&y() + &int(di + 1)) + &two_r())) * &phi(d - 1))
}

fn sym_q(u: usize, d: usize) -> MultiPoly {
    &(&q_poly(u, d) * &phi(u)) - &(&q_poly(d, u) * &phi(d))
}

fn sym_p(u: usize, d: usize, m: usize) -> MultiPoly {
    let mi = m as i64;
    &(&p_poly(u, d, m).unwrap() * &psi_at(u - m, mi)) - &(&p_poly(d, u, m).unwrap() * &psi_at(d - m, mi))
}

fn run_pairs(name: &str, pairs: Vec<(usize, usize)>, f: impl Fn(usize, usize) -> MultiPoly + Sync) -> SuiteReport {
    let entries = pairs.into_par_iter().map(|(u, d)| entry(name, format!("u={u} d={d}"), f(u, d))).collect();
    SuiteReport::new(entries)
}

fn run_triples(
    name: &str,
    triples: Vec<(usize, usize, usize)>,
    f: impl Fn(usize, usize, usize) -> MultiPoly + Sync,
) -> SuiteReport {
    let entries =
        triples.into_par_iter().map(|(u, d, m)| entry(name, format!("u={u} d={d} m={m}"), f(u, d, m))).collect();
    SuiteReport::new(entries)
}

/// Run one named suite (or `all`) over the parameter box given by `caps`.
pub fn identity_suite(name: &str, caps: Caps) -> Result<SuiteReport> {
    if caps.u_max > MAX_CAP || caps.d_max > MAX_CAP {
        return Err(Error::ScaleLimit(format!("identity suites accept u_max, d_max <= {MAX_CAP}")));
    }
    let pairs = ud_pairs(caps);
    let triples = udm_triples(caps);
    let report = match name {
        "all" => {
            let mut all = SuiteReport::default();
            for s in SUITES {
                all.extend(identity_suite(s, caps)?);
            }
            all
        }
        "Q-recurrence" => run_pairs(name, pairs, q_recurrence),
        "Q-dual" => run_pairs(name, pairs, q_dual),
        "M-recurrence" => run_pairs(name, pairs, m_recurrence),
        "M-lemma" => run_pairs(name, pairs.into_iter().filter(|&(_, d)| d > 0).collect(), m_lemma),
        "substitution" => run_pairs(name, pairs, substitution),
        "P-recurrence" => {
            let mut rep = run_triples(name, triples, p_recurrence);
            // initial condition P^u_d(0) = Q^u_d(0)
            for (u, d) in ud_pairs(caps) {
                let res = &lz(u, d, 0) - &q_poly(u, d).subst_one(Var::Y, &MultiPoly::zero());
                rep.entries.push(entry(name, format!("u={u} d={d} m=0"), res));
            }
            rep
        }
        "P-dual" => run_triples(name, triples, p_dual),
        "phi-identities" => {
            let entries = (1..=caps.d_max.max(caps.u_max))
                .into_par_iter()
                .flat_map_iter(|d| {
                    phi_identities(d)
                        .into_iter()
                        .enumerate()
                        .map(move |(i, res)| entry("phi-identities", format!("#{} d={d}", i + 1), res))
                })
                .collect();
            SuiteReport::new(entries)
        }
        "psi-identities" => psi_report(caps),
        "symQ" => run_pairs(name, pairs, sym_q),
        "symP" => run_triples(name, triples, sym_p),
        "tilde-sym" => tilde_report(caps)?,
        "corollary" => {
            let t: Vec<(usize, usize)> = (1..=caps.m_max.min(caps.u_max))
                .flat_map(|m| (m..=caps.d_max).map(move |d| (m, d)))
                .collect();
            let entries = t
                .into_par_iter()
                .map(|(m, d)| {
                    let res = &p_poly(m, d, m).unwrap() - &psi_at(d - m, m as i64);
                    entry("corollary", format!("m={m} d={d}"), res)
                })
                .collect();
            SuiteReport::new(entries)
        }
        "N-relabel" => run_triples(name, triples, |u, d, m| &p_poly(u, d, m).unwrap() - &n_poly(u, d - m, m)),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(report)
}

fn psi_report(caps: Caps) -> SuiteReport {
    let mut tasks = Vec::new();
    for m in 1..=caps.m_max.min(caps.u_max.max(caps.d_max)) {
        for n in m..=caps.u_max.max(caps.d_max) {
            tasks.push((m, n));
        }
    }
    let entries = tasks
        .into_par_iter()
        .flat_map_iter(|(m, n)| {
            let mi = m as i64;
            let ni = n as i64;
            let mut out = Vec::new();
            // m·ψ_{d−m}(m) = d·ψ_{d−m}(m−1)
            let a = &(&k(m) * &psi_at(n - m, mi)) - &(&k(n) * &psi_at(n - m, mi - 1));
            out.push(entry("psi-identities", format!("#1 m={m} d={n}"), a));
            // ψ_{u−m+1}(m−1) = m(u−m+2r)·ψ_{u−m}(m)
            let b = &psi_at(n - m + 1, mi - 1) - &(&(&k(m) * &(&k(n - m) + &two_r())) * &psi_at(n - m, mi));
            out.push(entry("psi-identities", format!("#2 m={m} u={n}"), b));
            // ψ_{u−m}(m) = u(u−m−1+2r)·ψ_{u−m−1}(m)
            if n > m {
                let c = &psi_at(n - m, mi)
                    - &(&(&k(n) * &(&int(ni - mi - 1) + &two_r())) * &psi_at(n - m - 1, mi));
                out.push(entry("psi-identities", format!("#3 m={m} u={n}"), c));
            }
            out
        })
        .collect();
    SuiteReport::new(entries)
}

fn tilde_report(caps: Caps) -> Result<SuiteReport> {
    let mut tasks: Vec<(usize, usize, usize)> =
        (0..=caps.u_max).flat_map(|u| (0..=caps.d_max).map(move |d| (u, d, 0))).collect();
    tasks.extend(udm_triples(caps));
    let results: Vec<Result<(CheckEntry, bool)>> = tasks
        .into_par_iter()
        .map(|(u, d, m)| {
            let yv = if m == 0 { y() } else { MultiPoly::zero() };
            let res = tilde_symmetry_residual(u, d, m, &yv)?;
            let divisible = tilde_l(&LeafFormulaInput::new(u, d, m, yv))?.quotient.is_some();
            let params = if m == 0 { format!("u={u} d={d} y") } else { format!("u={u} d={d} m={m}") };
            Ok((entry("tilde-sym", params, res), divisible))
        })
        .collect();
    let mut entries = Vec::new();
    let mut divisible = 0;
    for r in results {
        let (e, div) = r?;
        divisible += usize::from(div);
        entries.push(e);
    }
    let total = entries.len();
    let note = format!("tilde-L: divisor divides the leaf exactly in {divisible} of {total} cases");
    Ok(SuiteReport { entries, notes: vec![note] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_small() {
        let caps = Caps::new(4, 4);
        for s in SUITES {
            let rep = identity_suite(s, caps).unwrap();
            assert!(!rep.entries.is_empty(), "{s}");
            assert!(rep.all_pass(), "{s}:\n{rep}");
        }
    }

    #[test]
    fn boundary_case() {
        let rep = identity_suite("P-recurrence", Caps::new(1, 1)).unwrap();
        assert!(rep.entries.iter().any(|e| e.params == "u=1 d=1 m=1" && e.pass));
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(identity_suite("nope", Caps::new(1, 1)), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn plus_one_variant_of_second_phi_identity_fails() {
        for d in 1..=5 {
            assert!(!phi_second_plus_one_residual(d).is_zero(), "d={d}");
        }
    }
}
