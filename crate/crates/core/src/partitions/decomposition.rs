use std::fmt;

use super::{ensure_contains, Cell, Partition};
use crate::algebra::MultiPoly;
use crate::error::Result;

/// Label of a box of `λ` in the decomposition induced by `μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// In the skew diagram `λ/μ`.
    S,
    /// In `μ`; only its row meets the skew diagram.
    R,
    /// In `μ`; only its column meets the skew diagram.
    C,
    /// In `μ`; both its row and its column meet the skew diagram.
    J,
    /// In `μ`; neither.
    N,
}

impl Label {
    pub const ALL: [Label; 5] = [Label::S, Label::R, Label::C, Label::J, Label::N];

    pub fn as_char(self) -> char {
        match self {
            Label::S => 'S',
            Label::R => 'R',
            Label::C => 'C',
            Label::J => 'J',
            Label::N => 'N',
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Every box of `λ` with its label, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompLabels {
    lam: Partition,
    mu: Partition,
    rows: Vec<Vec<Label>>,
}

impl DecompLabels {
    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Labels of row `i + 1`, left to right.
    pub fn rows(&self) -> &[Vec<Label>] {
        &self.rows
    }

    pub fn label(&self, cell: Cell) -> Option<Label> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, Label)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &l)| (Cell::new(i + 1, j + 1), l)))
    }

    pub fn cells(&self, label: Label) -> impl Iterator<Item = Cell> + '_ {
        self.iter().filter(move |&(_, l)| l == label).map(|(c, _)| c)
    }

    pub fn count(&self, label: Label) -> usize {
        self.cells(label).count()
    }

    /// The row labels as strings, e.g. `["NCCNCCCN", "RJJRSSS", ...]`.
    pub fn row_strings(&self) -> Vec<String> {
        self.rows.iter().map(|row| row.iter().map(|l| l.as_char()).collect()).collect()
    }

    /// Rightmost `J` box, the topmost one among those in the rightmost column.
    pub fn critical_box(&self) -> Option<Cell> {
        self.cells(Label::J).min_by_key(|c| (std::cmp::Reverse(c.col), c.row))
    }
}

/// Label every box of `lam` relative to `mu`.
pub fn induced_decomposition(lam: &Partition, mu: &Partition) -> Result<DecompLabels> {
    ensure_contains(lam, mu)?;
    let rows = (1..=lam.len())
        .map(|i| {
            let row_gained = mu.row_len(i) < lam.row_len(i);
            (1..=lam.row_len(i))
                .map(|j| {
                    if !mu.contains_cell(Cell::new(i, j)) {
                        return Label::S;
                    }
                    let col_gained = mu.col_len(j) < lam.col_len(j);
                    match (row_gained, col_gained) {
                        (true, true) => Label::J,
                        (true, false) => Label::R,
                        (false, true) => Label::C,
                        (false, false) => Label::N,
                    }
                })
                .collect()
        })
        .collect();
    Ok(DecompLabels { lam: lam.clone(), mu: mu.clone(), rows })
}

/// The critical box and critical hook of `λ/μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalData {
    pub xstar: Option<Cell>,
    /// `arm_μ(x*) + r·leg_μ(x*)` for a two-row horizontal strip, else 0.
    pub y: MultiPoly,
}

pub fn critical_data(lam: &Partition, mu: &Partition) -> Result<CriticalData> {
    let labels = induced_decomposition(lam, mu)?;
    let xstar = labels.critical_box();
    let skew = super::skew_cells(lam, mu)?;
    let rows = skew.rows();
    let strip = rows.len() == 2 && {
        let mut it = rows.values();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        a.iter().all(|c| !b.contains(c))
    };
    let y = match xstar {
        Some(x) if strip => MultiPoly::linear_r(mu.arm(x) as i64, mu.leg(x) as i64),
        _ => MultiPoly::zero(),
    };
    Ok(CriticalData { xstar, y })
}

/// One line per row of `lam`. With `mark_critical`, the critical box is
/// drawn as `*`.
pub fn render_decomposition(lam: &Partition, mu: &Partition, mark_critical: bool) -> Result<String> {
    let labels = induced_decomposition(lam, mu)?;
    let star = if mark_critical { labels.critical_box() } else { None };
    let mut out = String::new();
    for (i, row) in labels.rows.iter().enumerate() {
        for (j, l) in row.iter().enumerate() {
            if star == Some(Cell::new(i + 1, j + 1)) {
                out.push('*');
            } else {
                out.push(l.as_char());
            }
        }
        out.push('\n');
    }
    Ok(out)
}
