//! Structural checks that tie the recursion, the chain sum, the Jack oracle,
//! the stem/leaf split and the closed forms together.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{MultiPoly, RatFun, Var};
use crate::binomials::{binomial_chain_sum, BinomialContext};
use crate::closedforms::{closed_leaf, identity_suite, p_poly, q_poly, Caps, LeafFormulaInput, SUITES};
use crate::error::{Error, Result};
use crate::oracle::JackOracle;
use crate::partitions::{partitions_of, skew_cells, sub_partitions, two_row_data, Partition, SkewShape, TwoRowShape};
use crate::report::{CheckEntry, SuiteReport};
use crate::stemleaf::{dual_recurrence_residual, leaf, leaf_recurrence_residual};

/// Suites implemented here; the identity suites live in `closedforms`.
pub const STRUCTURAL_SUITES: [&str; 4] = ["oracle", "main-theorem", "skew-invariance", "recurrences"];

/// Bounds for [`run_suite`]. `None` picks each suite's default.
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    pub u_max: Option<usize>,
    pub d_max: Option<usize>,
    pub m_max: Option<usize>,
    pub n_max: Option<usize>,
}

/// Every `(λ, μ)` with `μ ⊆ λ` and `|λ| ≤ n_max`, `λ` by size then in
/// decreasing lex order.
pub fn containment_pairs(n_max: usize) -> Vec<(Partition, Partition)> {
    (0..=n_max)
        .flat_map(partitions_of)
        .flat_map(|lam| sub_partitions(&lam).into_iter().map(move |mu| (lam.clone(), mu)))
        .collect()
}

fn pair_params(lam: &Partition, mu: &Partition) -> String {
    format!("({lam})/({mu})")
}

/// Recursion, chain sum and oracle agree on every `μ ⊆ λ` with `|λ| ≤ n_max`.
pub fn oracle_triangle(n_max: usize, nvars: usize) -> Result<SuiteReport> {
    let lams: Vec<Partition> = (1..=n_max).flat_map(partitions_of).collect();
    let per_lam: Vec<Result<Vec<CheckEntry>>> = lams
        .par_iter()
        .map(|lam| {
            let mut oracle = JackOracle::new();
            let mut ctx = BinomialContext::new();
            let mut out = Vec::new();
            for mu in sub_partitions(lam) {
                let rec = ctx.binomial(lam, &mu);
                let chain = binomial_chain_sum(lam, &mu)?;
                let orc = oracle.binomial_oracle(lam, &mu, nvars)?;
                let pass = rec == chain && chain == orc;
                out.push(CheckEntry::outcome("oracle-triangle", pair_params(lam, &mu), pass, || {
                    format!("recursion {rec}, chain sum {chain}, oracle {orc}")
                }));
            }
            Ok(out)
        })
        .collect();
    collect_entries(per_lam)
}

/// `binomial_oracle(λ, μ, M)` is the same for `M = ℓ(λ)` and `M = ℓ(λ) + 2`,
/// over all `μ` with `|μ| ≤ |λ|` and `ℓ(μ) ≤ ℓ(λ)`.
pub fn oracle_stability(n_max: usize) -> Result<SuiteReport> {
    let lams: Vec<Partition> = (1..=n_max).flat_map(partitions_of).collect();
    let per_lam: Vec<Result<Vec<CheckEntry>>> = lams
        .par_iter()
        .map(|lam| {
            let mut oracle = JackOracle::new();
            let len = lam.len();
            let mut out = Vec::new();
            for mu in (0..=lam.size()).flat_map(partitions_of).filter(|mu| mu.len() <= len) {
                let a = oracle.binomial_oracle(lam, &mu, len)?;
                let b = oracle.binomial_oracle(lam, &mu, len + 2)?;
                let zero_ok = lam.contains(&mu) || a.is_zero();
                out.push(CheckEntry::outcome(
                    "oracle-stability",
                    format!("{} M={len},{}", pair_params(lam, &mu), len + 2),
                    a == b && zero_ok,
                    || format!("M={len}: {a}; M={}: {b}", len + 2),
                ));
            }
            Ok(out)
        })
        .collect();
    collect_entries(per_lam)
}

fn collect_entries(parts: Vec<Result<Vec<CheckEntry>>>) -> Result<SuiteReport> {
    let mut entries = Vec::new();
    for p in parts {
        entries.extend(p?);
    }
    Ok(SuiteReport::new(entries))
}

fn leaf_as_poly(q: &RatFun) -> Option<MultiPoly> {
    q.as_polynomial().map(MultiPoly::from_unipoly)
}

/// The closed form matches the computed leaf on every two-row shape in its
/// minimal container. Gap shapes are also checked against `Q` with `y`
/// substituted and overlap shapes against `P`.
pub fn main_theorem(u_max: usize, d_max: usize, col_gap_max: usize, row_gap_max: usize) -> Result<SuiteReport> {
    let shapes = TwoRowShape::enumerate(u_max, d_max, col_gap_max, row_gap_max);
    let per_shape: Vec<Result<Vec<CheckEntry>>> = shapes
        .par_iter()
        .map(|&shape| {
            let (lam, mu) = shape.minimal_container();
            let params = format!("{shape:?} at {}", pair_params(&lam, &mu));
            let data = two_row_data(&lam, &mu)?;
            let mut ctx = BinomialContext::new();
            let computed = match leaf(&lam, &mu, &mut ctx) {
                Ok(l) => l,
                Err(Error::InternalInconsistency(msg)) => {
                    return Ok(vec![CheckEntry::outcome("main-theorem", params, false, || msg)]);
                }
                Err(e) => return Err(e),
            };
            let formula = closed_leaf(&LeafFormulaInput::from(&data))?;
            let computed_poly = leaf_as_poly(&computed);
            let mut out = vec![CheckEntry::outcome(
                "main-theorem",
                params.clone(),
                computed_poly.as_ref() == Some(&formula) && data == shape.expected_data(),
                || format!("leaf {computed}, formula {formula}, data {data:?}"),
            )];
            match shape {
                TwoRowShape::Gap { u, d, .. } => {
                    let q = q_poly(u, d).subst_one(Var::Y, &data.y);
                    out.push(CheckEntry::outcome("gap-case", params, computed_poly.as_ref() == Some(&q), || {
                        format!("leaf {computed}, Q {q}")
                    }));
                }
                TwoRowShape::Overlap { u, d, m } => {
                    let p = p_poly(u, d, m)?;
                    out.push(CheckEntry::outcome("overlap-case", params, computed_poly.as_ref() == Some(&p), || {
                        format!("leaf {computed}, P {p}")
                    }));
                }
                TwoRowShape::SingleRow { .. } => {}
            }
            Ok(out)
        })
        .collect();
    collect_entries(per_shape)
}

/// `(λ, μ, L_{λ/μ})`
pub type Realization = (Partition, Partition, RatFun);

/// Leaves of every realization `(λ, μ)`, `|λ| ≤ lam_max`, of each skew box
/// set with `1 ≤ |λ/μ| ≤ skew_max`.
pub fn realizations(skew_max: usize, lam_max: usize) -> Result<BTreeMap<SkewShape, Vec<Realization>>> {
    let lams: Vec<Partition> = (1..=lam_max).flat_map(partitions_of).collect();
    let per_lam: Vec<Result<Vec<(SkewShape, Realization)>>> = lams
        .par_iter()
        .map(|lam| {
            let mut ctx = BinomialContext::new();
            let mut out = Vec::new();
            for mu in sub_partitions(lam) {
                let n = lam.size() - mu.size();
                if n == 0 || n > skew_max {
                    continue;
                }
                let shape = skew_cells(lam, &mu)?;
                let l = leaf(lam, &mu, &mut ctx)?;
                out.push((shape, (lam.clone(), mu, l)));
            }
            Ok(out)
        })
        .collect();
    let mut groups: BTreeMap<SkewShape, Vec<Realization>> = BTreeMap::new();
    for part in per_lam {
        for (shape, real) in part? {
            groups.entry(shape).or_default().push(real);
        }
    }
    Ok(groups)
}

/// Equal absolute skew box sets give equal leaves.
pub fn skew_invariance(skew_max: usize, lam_max: usize) -> Result<SuiteReport> {
    let groups = realizations(skew_max, lam_max)?;
    let mut entries = Vec::new();
    for (shape, reals) in &groups {
        if reals.len() < 2 {
            continue;
        }
        let first = &reals[0].2;
        let pass = reals.iter().all(|(_, _, l)| l == first);
        let (lam, mu, _) = &reals[0];
        entries.push(CheckEntry::outcome(
            "skew-invariance",
            format!("{} cells, {} realizations, e.g. {}", shape.len(), reals.len(), pair_params(lam, mu)),
            pass,
            || {
                reals
                    .iter()
                    .map(|(l, m, q)| format!("{}: {q}", pair_params(l, m)))
                    .collect::<Vec<_>>()
                    .join("; ")
            },
        ));
    }
    let mut rep = SuiteReport::new(entries);
    let t = translation_summary(&groups);
    rep.notes.push(t.to_string());
    Ok(rep)
}

/// How leaves behave when a skew box set is translated.
#[derive(Clone, Debug, Default, Serialize)]
pub struct TranslationReport {
    /// Skew shapes up to translation.
    pub classes: usize,
    /// Classes occurring at two or more absolute positions.
    pub translated_classes: usize,
    /// Classes whose leaf is not the same at every position, with the number
    /// of distinct leaves and the number of skew rows.
    pub varying: Vec<(String, usize, usize)>,
}

impl std::fmt::Display for TranslationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let two_row = self.varying.iter().filter(|v| v.2 <= 2).count();
        write!(
            f,
            "translation: {} shape classes, {} seen at several positions, {} with position-dependent leaves ({} of them with at most two rows)",
            self.classes,
            self.translated_classes,
            self.varying.len(),
            two_row
        )
    }
}

fn translation_summary(groups: &BTreeMap<SkewShape, Vec<Realization>>) -> TranslationReport {
    let mut classes: BTreeMap<SkewShape, Vec<(&SkewShape, &RatFun)>> = BTreeMap::new();
    for (shape, reals) in groups {
        for (_, _, l) in reals {
            classes.entry(shape.normalized()).or_default().push((shape, l));
        }
    }
    let mut rep = TranslationReport { classes: classes.len(), ..Default::default() };
    for (norm, members) in &classes {
        let positions: std::collections::BTreeSet<&SkewShape> = members.iter().map(|(s, _)| *s).collect();
        if positions.len() < 2 {
            continue;
        }
        rep.translated_classes += 1;
        let mut distinct: Vec<&RatFun> = Vec::new();
        for (_, l) in members {
            if !distinct.contains(l) {
                distinct.push(l);
            }
        }
        if distinct.len() > 1 {
            let cells: Vec<String> = norm.cells().iter().map(|c| c.to_string()).collect();
            rep.varying.push((cells.join(""), distinct.len(), norm.rows().len()));
        }
    }
    rep
}

/// Do leaves depend only on the skew shape up to translation? Gathered as
/// data over the same range as [`skew_invariance`].
pub fn skew_translation_report(skew_max: usize, lam_max: usize) -> Result<TranslationReport> {
    Ok(translation_summary(&realizations(skew_max, lam_max)?))
}

/// Both leaf recurrences on every `μ ⊊ λ` with `|λ| ≤ n_max`.
pub fn recurrences(n_max: usize) -> Result<SuiteReport> {
    let lams: Vec<Partition> = (1..=n_max).flat_map(partitions_of).collect();
    let per_lam: Vec<Result<Vec<CheckEntry>>> = lams
        .par_iter()
        .map(|lam| {
            let mut ctx = BinomialContext::new();
            let mut out = Vec::new();
            for mu in sub_partitions(lam).into_iter().filter(|mu| mu != lam) {
                let fwd = leaf_recurrence_residual(lam, &mu, &mut ctx)?;
                out.push(CheckEntry::from_ratfun("leaf-recurrence", pair_params(lam, &mu), fwd));
                let dual = dual_recurrence_residual(lam, &mu, &mut ctx)?;
                out.push(CheckEntry::from_ratfun("dual-recurrence", pair_params(lam, &mu), dual));
            }
            Ok(out)
        })
        .collect();
    collect_entries(per_lam)
}

/// Run a structural suite, an identity suite, or `all` of both.
pub fn run_suite(name: &str, opts: VerifyOptions) -> Result<SuiteReport> {
    let caps = |default: usize| {
        let u = opts.u_max.unwrap_or(default);
        let d = opts.d_max.unwrap_or(default);
        Caps { u_max: u, d_max: d, m_max: opts.m_max.unwrap_or(u.min(d)) }
    };
    match name {
        "oracle" => {
            let n = opts.n_max.unwrap_or(6);
            let mut rep = oracle_triangle(n, n.max(1))?;
            rep.extend(oracle_stability(n.min(5))?);
            Ok(rep)
        }
        "main-theorem" => {
            let c = caps(5);
            main_theorem(c.u_max, c.d_max, 3, 2)
        }
        "skew-invariance" => {
            let n = opts.n_max.unwrap_or(9);
            skew_invariance(6.min(n), n)
        }
        "recurrences" => recurrences(opts.n_max.unwrap_or(7)),
        "all" => {
            let mut rep = identity_suite("all", caps(6))?;
            for s in STRUCTURAL_SUITES {
                rep.extend(run_suite(s, opts)?);
            }
            Ok(rep)
        }
        s if SUITES.contains(&s) => identity_suite(s, caps(6)),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        assert!(oracle_triangle(3, 3).unwrap().all_pass());
        assert!(oracle_stability(3).unwrap().all_pass());
        assert!(main_theorem(2, 2, 1, 1).unwrap().all_pass());
        assert!(skew_invariance(3, 5).unwrap().all_pass());
        assert!(recurrences(4).unwrap().all_pass());
    }

    #[test]
    fn pair_counts() {
        // subpartitions of the partitions of 0, 1, 2: 1 + 2 + (3 + 3)
        assert_eq!(containment_pairs(2).len(), 9);
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("bogus", VerifyOptions::default()), Err(Error::UnknownSuite(_))));
    }
}
