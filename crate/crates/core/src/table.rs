//! Stem and leaf of every pair `μ ⊊ λ` up to a size bound, as CSV or JSON.

use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{MultiPoly, RatFun};
use crate::binomials::BinomialContext;
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, skew_cells, sub_partitions, two_row_data, Partition};
use crate::stemleaf::stem_leaf;

/// Largest `|λ|` accepted by [`table_rows`].
pub const TABLE_CAP: usize = 15;

pub const COLUMNS: [&str; 10] = ["lambda", "mu", "u", "d", "m", "y", "K", "L", "L_is_polynomial", "L_coefficients_nonnegative"];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ShapeFilter {
    #[default]
    All,
    /// Skew diagrams in at most two rows.
    TwoRow,
    /// Two-row with no shared column, single rows included.
    Gap,
    /// Two-row with at least one shared column.
    Overlap,
    /// Three or more skew rows.
    MultiRow,
}

impl FromStr for ShapeFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Self::All,
            "two-row" => Self::TwoRow,
            "gap" => Self::Gap,
            "overlap" => Self::Overlap,
            "multi-row" => Self::MultiRow,
            _ => return Err(Error::Parse(format!("unknown shape filter {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TableFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub lambda: Partition,
    pub mu: Partition,
    /// `(u, d, m, y)`; `None` past two skew rows.
    pub u: Option<usize>,
    pub d: Option<usize>,
    pub m: Option<usize>,
    pub y: Option<MultiPoly>,
    #[serde(rename = "K")]
    pub stem: RatFun,
    #[serde(rename = "L")]
    pub leaf: RatFun,
    #[serde(rename = "L_is_polynomial")]
    pub leaf_is_polynomial: bool,
    #[serde(rename = "L_coefficients_nonnegative")]
    pub leaf_nonnegative: bool,
}

impl TableRow {
    pub fn is_two_row(&self) -> bool {
        self.u.is_some()
    }

    fn matches(&self, filter: ShapeFilter) -> bool {
        match filter {
            ShapeFilter::All => true,
            ShapeFilter::TwoRow => self.is_two_row(),
            ShapeFilter::Gap => self.m == Some(0),
            ShapeFilter::Overlap => self.m.is_some_and(|m| m > 0),
            ShapeFilter::MultiRow => !self.is_two_row(),
        }
    }

    fn record(&self) -> Vec<String> {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        let y = self.y.as_ref().map(|y| y.to_string()).unwrap_or_default();
        vec![
            self.lambda.to_string(),
            self.mu.to_string(),
            opt(self.u),
            opt(self.d),
            opt(self.m),
            y,
            self.stem.to_string(),
            self.leaf.to_string(),
            self.leaf_is_polynomial.to_string(),
            self.leaf_nonnegative.to_string(),
        ]
    }
}

fn row(lam: &Partition, mu: &Partition, ctx: &mut BinomialContext) -> Result<TableRow> {
    let sl = stem_leaf(lam, mu, ctx)?;
    let two_row = skew_cells(lam, mu)?.rows().len() <= 2;
    let data = if two_row { Some(two_row_data(lam, mu)?) } else { None };
    let poly = sl.leaf.as_polynomial();
    Ok(TableRow {
        lambda: lam.clone(),
        mu: mu.clone(),
        u: data.as_ref().map(|t| t.u),
        d: data.as_ref().map(|t| t.d),
        m: data.as_ref().map(|t| t.m),
        y: data.map(|t| t.y),
        leaf_is_polynomial: poly.is_some(),
        leaf_nonnegative: poly.is_some_and(|p| p.coeffs().iter().all(|c| !c.is_negative())),
        stem: sl.stem,
        leaf: sl.leaf,
    })
}

/// Rows for every `μ ⊊ λ` with `1 ≤ |λ| ≤ n_max` passing `filter`, `λ` by
/// size then in decreasing lex order, `μ` in the order of `sub_partitions`.
pub fn table_rows(n_max: usize, filter: ShapeFilter) -> Result<Vec<TableRow>> {
    if n_max > TABLE_CAP {
        return Err(Error::ScaleLimit(format!("table needs |λ| ≤ {TABLE_CAP}, got {n_max}")));
    }
    let lams: Vec<Partition> = (1..=n_max).flat_map(partitions_of).collect();
    let per_lam: Vec<Result<Vec<TableRow>>> = lams
        .par_iter()
        .map_init(BinomialContext::new, |ctx, lam| {
            let mut out = Vec::new();
            for mu in sub_partitions(lam).into_iter().filter(|mu| mu != lam) {
                let r = row(lam, &mu, ctx)?;
                if r.matches(filter) {
                    out.push(r);
                }
            }
            Ok(out)
        })
        .collect();
    let mut rows = Vec::new();
    for p in per_lam {
        rows.extend(p?);
    }
    Ok(rows)
}

pub fn write_table<W: Write>(rows: &[TableRow], format: TableFormat, out: W) -> Result<()> {
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(COLUMNS).map_err(csv_err)?;
            for r in rows {
                w.write_record(r.record()).map_err(csv_err)?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows).map_err(|e| Error::Io(e.into()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.into())
}

/// Compute the table and write it to `path`.
pub fn table(n_max: usize, filter: ShapeFilter, format: TableFormat, path: &Path) -> Result<usize> {
    let rows = table_rows(n_max, filter)?;
    let file = std::fs::File::create(path)?;
    write_table(&rows, format, std::io::BufWriter::new(file))?;
    Ok(rows.len())
}

/// Two-row leaves that are not polynomials with nonnegative coefficients.
#[derive(Clone, Debug, Default, Serialize)]
pub struct PositivityReport {
    pub two_row_rows: usize,
    pub counterexamples: Vec<(Partition, Partition, RatFun)>,
}

impl std::fmt::Display for PositivityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} two-row leaves scanned, {} counterexamples", self.two_row_rows, self.counterexamples.len())?;
        for (l, m, q) in &self.counterexamples {
            write!(f, "\n  ({l})/({m}): {q}")?;
        }
        Ok(())
    }
}

pub fn positivity_scan(rows: &[TableRow]) -> PositivityReport {
    let mut rep = PositivityReport::default();
    for r in rows.iter().filter(|r| r.is_two_row()) {
        rep.two_row_rows += 1;
        if !(r.leaf_is_polynomial && r.leaf_nonnegative) {
            rep.counterexamples.push((r.lambda.clone(), r.mu.clone(), r.leaf.clone()));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_box_row() {
        let rows = table_rows(4, ShapeFilter::All).unwrap();
        let r = rows.iter().find(|r| r.lambda.to_string() == "2" && r.mu.to_string() == "1").unwrap();
        assert_eq!(r.stem, RatFun::from_int(2));
        assert!(r.leaf.is_one());
        assert_eq!(r.record()[..5], ["2", "1", "1", "0", "0"]);
    }

    #[test]
    fn empty_table_has_header() {
        let mut buf = Vec::new();
        write_table(&table_rows(0, ShapeFilter::All).unwrap(), TableFormat::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), COLUMNS.join(",") + "\n");
    }

    #[test]
    fn filters_partition_rows() {
        let all = table_rows(5, ShapeFilter::All).unwrap().len();
        let gap = table_rows(5, ShapeFilter::Gap).unwrap().len();
        let over = table_rows(5, ShapeFilter::Overlap).unwrap().len();
        let multi = table_rows(5, ShapeFilter::MultiRow).unwrap().len();
        assert_eq!(gap + over + multi, all);
        assert_eq!(table_rows(5, ShapeFilter::TwoRow).unwrap().len(), gap + over);
    }

    #[test]
    fn cap() {
        assert!(matches!(table_rows(TABLE_CAP + 1, ShapeFilter::All), Err(Error::ScaleLimit(_))));
    }
}
