//! Partitions, Young diagrams and the box statistics used by the stem.
//!
//! Boxes are 1-based: row 1 is the top row, column 1 the leftmost column.

mod decomposition;
mod skew;

pub use decomposition::{critical_data, induced_decomposition, render_decomposition, CriticalData, DecompLabels, Label};
pub use skew::{skew_cells, two_row_data, SkewShape, TwoRowData, TwoRowShape};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{MultiPoly, UniPoly};
use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts. The empty partition is
/// the zero partition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box `(row, col)` of a Young diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Arm, leg and the two r-hooks of a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hooks {
    pub arm: usize,
    pub leg: usize,
    /// `arm + r·leg + r`
    pub lower: MultiPoly,
    /// `arm + r·leg + 1`
    pub upper: MultiPoly,
}

/// Which family of adjacent partitions [`covers_between`] lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverDirection {
    /// `κ ⊂: λ` with `μ ⊆ κ`.
    RemoveFromLam,
    /// `μ ⊂: ν` with `ν ⊆ λ`.
    AddToMu,
}

impl Partition {
    /// Trailing zeros are dropped; any increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `row` (1-based); zero beyond the last row.
    pub fn row_len(&self, row: usize) -> usize {
        row.checked_sub(1).and_then(|i| self.parts.get(i)).copied().unwrap_or(0)
    }

    /// Height of column `col` (1-based), i.e. the conjugate part.
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        Self { parts: (1..=width).map(|c| self.col_len(c)).collect() }
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// All boxes, row by row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// `μ ⊆ λ` in the containment order.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// Dominance order `other ≤ self` at equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 1..=n {
            a += self.row_len(i);
            b += other.row_len(i);
            if b > a {
                return false;
            }
        }
        true
    }

    pub fn arm(&self, cell: Cell) -> usize {
        self.row_len(cell.row) - cell.col
    }

    pub fn leg(&self, cell: Cell) -> usize {
        self.col_len(cell.col) - cell.row
    }

    /// Lower r-hook `arm + r·leg + r` as a polynomial in `r`.
    pub fn lower_hook(&self, cell: Cell) -> UniPoly {
        debug_assert!(self.contains_cell(cell));
        UniPoly::linear(self.arm(cell), self.leg(cell) + 1)
    }

    /// Upper r-hook `arm + r·leg + 1` as a polynomial in `r`.
    pub fn upper_hook(&self, cell: Cell) -> UniPoly {
        debug_assert!(self.contains_cell(cell));
        UniPoly::linear(self.arm(cell) + 1, self.leg(cell))
    }

    pub fn hooks(&self, cell: Cell) -> Result<Hooks> {
        if !self.contains_cell(cell) {
            return Err(Error::BoxOutOfDiagram { row: cell.row, col: cell.col, partition: self.to_string() });
        }
        Ok(Hooks {
            arm: self.arm(cell),
            leg: self.leg(cell),
            lower: MultiPoly::from_unipoly(&self.lower_hook(cell)),
            upper: MultiPoly::from_unipoly(&self.upper_hook(cell)),
        })
    }

    /// The partition with one box added at the end of `row`, if that is a
    /// partition.
    pub fn add_box(&self, row: usize) -> Option<Self> {
        if row == 0 || row > self.len() + 1 || (row > 1 && self.row_len(row - 1) == self.row_len(row)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Self { parts })
    }

    /// The partition with the last box of `row` removed, if that box is a
    /// corner.
    pub fn remove_box(&self, row: usize) -> Option<Self> {
        let len = self.row_len(row);
        if len == 0 || self.row_len(row + 1) == len {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Some(Self { parts })
    }

    /// For parts already known to be weakly decreasing; zeros are dropped.
    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        parts.retain(|&p| p > 0);
        Self { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let parts = text
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("'{t}' is not a nonnegative integer"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// Parse the comma-separated textual form, e.g. `7,3,3,1`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    text.parse()
}

pub fn contains(lam: &Partition, mu: &Partition) -> bool {
    lam.contains(mu)
}

pub fn box_hooks(lam: &Partition, b: Cell) -> Result<Hooks> {
    lam.hooks(b)
}

pub(crate) fn ensure_contains(lam: &Partition, mu: &Partition) -> Result<()> {
    if lam.contains(mu) {
        Ok(())
    } else {
        Err(Error::NotContained { lam: lam.to_string(), mu: mu.to_string() })
    }
}

/// Partitions one box away from `lam` (resp. `mu`) inside the interval
/// `[mu, lam]`, ordered by the row of the moved box.
pub fn covers_between(mu: &Partition, lam: &Partition, direction: CoverDirection) -> Result<Vec<Partition>> {
    ensure_contains(lam, mu)?;
    let rows = 1..=lam.len();
    let out = match direction {
        CoverDirection::RemoveFromLam => rows
            .filter(|&i| lam.row_len(i) > mu.row_len(i))
            .filter_map(|i| lam.remove_box(i))
            .collect(),
        CoverDirection::AddToMu => rows
            .filter(|&i| mu.row_len(i) < lam.row_len(i))
            .filter_map(|i| mu.add_box(i))
            .collect(),
    };
    Ok(out)
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with at most `max_len` parts, decreasing lexicographic.
pub fn partitions_with_max_len(n: usize, max_len: usize) -> Vec<Partition> {
    partitions_bounded(n, n, max_len)
}

/// All partitions of size at most `n`, by size then decreasing lex order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

fn partitions_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, max_part, max_len, &mut cur, &mut out);
    out
}

fn fill(n: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(n)).rev() {
        cur.push(p);
        fill(n - p, p, max_len, cur, out);
        cur.pop();
    }
}

/// Every `μ ⊆ λ`, including the empty partition and `λ` itself.
pub fn sub_partitions(lam: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    sub_fill(lam, 0, usize::MAX, &mut cur, &mut out);
    out
}

fn sub_fill(lam: &Partition, i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i == lam.len() {
        let mut parts = cur.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.push(Partition { parts });
        return;
    }
    for p in (0..=lam.parts[i].min(cap)).rev() {
        cur.push(p);
        sub_fill(lam, i + 1, p, cur, out);
        cur.pop();
    }
}
