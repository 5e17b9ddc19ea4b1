use std::collections::{BTreeMap, BTreeSet};

use super::{critical_data, ensure_contains, Cell, Partition};
use crate::algebra::MultiPoly;
use crate::error::{Error, Result};

/// A finite set of boxes, typically a skew diagram `λ/μ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    cells: BTreeSet<Cell>,
}

impl SkewShape {
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Self {
        Self { cells: cells.into_iter().collect() }
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Occupied columns of each occupied row.
    pub fn rows(&self) -> BTreeMap<usize, BTreeSet<usize>> {
        let mut out: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for c in &self.cells {
            out.entry(c.row).or_default().insert(c.col);
        }
        out
    }

    /// The translate whose topmost box is in row 1 and leftmost box in
    /// column 1.
    pub fn normalized(&self) -> Self {
        let (Some(r0), Some(c0)) = (self.cells.iter().map(|c| c.row).min(), self.cells.iter().map(|c| c.col).min())
        else {
            return Self::default();
        };
        Self::from_cells(self.cells.iter().map(|c| Cell::new(c.row - r0 + 1, c.col - c0 + 1)))
    }
}

pub fn skew_cells(lam: &Partition, mu: &Partition) -> Result<SkewShape> {
    ensure_contains(lam, mu)?;
    Ok(SkewShape::from_cells(lam.cells().filter(|&c| !mu.contains_cell(c))))
}

/// The 4-tuple `(u, d, m, y)` attached to a skew shape with at most two rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRowData {
    pub u: usize,
    pub d: usize,
    pub m: usize,
    pub y: MultiPoly,
}

impl TwoRowData {
    /// `(g, l)` with `y = g + l·r`.
    pub fn y_parts(&self) -> (i64, i64) {
        let y = self.y.to_unipoly().unwrap_or_default();
        (y.coeff(0).to_i64().unwrap_or(0), y.coeff(1).to_i64().unwrap_or(0))
    }
}

pub fn two_row_data(lam: &Partition, mu: &Partition) -> Result<TwoRowData> {
    let skew = skew_cells(lam, mu)?;
    let rows = skew.rows();
    let mut it = rows.values();
    let (u, d, m) = match (it.next(), it.next(), it.next()) {
        (None, _, _) => (0, 0, 0),
        (Some(a), None, _) => (a.len(), 0, 0),
        (Some(a), Some(b), None) => (a.len(), b.len(), a.intersection(b).count()),
        _ => return Err(Error::NotTwoRow { rows: rows.len() }),
    };
    let y = if d > 0 && m == 0 { critical_data(lam, mu)?.y } else { MultiPoly::zero() };
    Ok(TwoRowData { u, d, m, y })
}

/// Geometry of a two-row skew shape, independent of any container.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoRowShape {
    SingleRow { u: usize },
    /// Two rows sharing no column. `col_gap` columns separate the end of the
    /// lower row from the start of the upper one and `row_gap` rows lie
    /// strictly between them.
    Gap { u: usize, d: usize, col_gap: usize, row_gap: usize },
    /// Two consecutive rows sharing `m` columns.
    Overlap { u: usize, d: usize, m: usize },
}

impl TwoRowShape {
    /// The smallest `(λ, μ)` realizing the shape.
    pub fn minimal_container(self) -> (Partition, Partition) {
        let p = Partition::from_parts_unchecked;
        match self {
            TwoRowShape::SingleRow { u } => (p(vec![u]), Partition::empty()),
            TwoRowShape::Gap { u, d, col_gap: g, row_gap: h } => {
                let mut lam = vec![d + g + u];
                lam.extend(std::iter::repeat_n(d, h + 1));
                let mut mu = vec![d + g];
                mu.extend(std::iter::repeat_n(d, h));
                (p(lam), p(mu))
            }
            TwoRowShape::Overlap { u, d, m } => (p(vec![d - m + u, d]), p(vec![d - m])),
        }
    }

    /// The data `two_row_data` must return on any realization.
    pub fn expected_data(self) -> TwoRowData {
        match self {
            TwoRowShape::SingleRow { u } => TwoRowData { u, d: 0, m: 0, y: MultiPoly::zero() },
            TwoRowShape::Gap { u, d, col_gap, row_gap } => {
                TwoRowData { u, d, m: 0, y: MultiPoly::linear_r(col_gap as i64, row_gap as i64) }
            }
            TwoRowShape::Overlap { u, d, m } => TwoRowData { u, d, m, y: MultiPoly::zero() },
        }
    }

    /// All shapes with `1 ≤ u ≤ u_max`, `d ≤ d_max`, `m ≤ min(u, d)`, and gap
    /// geometry bounded by `col_gap_max`, `row_gap_max`.
    pub fn enumerate(u_max: usize, d_max: usize, col_gap_max: usize, row_gap_max: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for u in 1..=u_max {
            out.push(TwoRowShape::SingleRow { u });
            for d in 1..=d_max {
                for col_gap in 0..=col_gap_max {
                    for row_gap in 0..=row_gap_max {
                        out.push(TwoRowShape::Gap { u, d, col_gap, row_gap });
                    }
                }
                for m in 1..=u.min(d) {
                    out.push(TwoRowShape::Overlap { u, d, m });
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_pairs() {
        let t = two_row_data(&p("7,3,3,1"), &p("4,3,1,1")).unwrap();
        assert_eq!((t.u, t.d, t.m), (3, 2, 0));
        assert_eq!(t.y, MultiPoly::linear_r(1, 1));
        let t = two_row_data(&p("6,5,3,1"), &p("6,2,1,1")).unwrap();
        assert_eq!((t.u, t.d, t.m), (3, 2, 1));
        assert!(t.y.is_zero());
        let t = two_row_data(&p("3"), &p("1")).unwrap();
        assert_eq!((t.u, t.d, t.m), (2, 0, 0));
        assert!(t.y.is_zero());
    }

    #[test]
    fn errors() {
        assert!(matches!(two_row_data(&p("1,1,1"), &p("")), Err(Error::NotTwoRow { rows: 3 })));
        assert!(matches!(two_row_data(&p("1"), &p("2")), Err(Error::NotContained { .. })));
        let t = two_row_data(&p("2,1"), &p("2,1")).unwrap();
        assert_eq!((t.u, t.d, t.m), (0, 0, 0));
    }

    #[test]
    fn containers_realize_their_shapes() {
        for shape in TwoRowShape::enumerate(4, 4, 3, 2) {
            let (lam, mu) = shape.minimal_container();
            let got = two_row_data(&lam, &mu).unwrap();
            assert_eq!(got, shape.expected_data(), "{shape:?} in {lam:?}/{mu:?}");
            if let TwoRowShape::Overlap { .. } = shape {
                let rows: Vec<usize> = skew_cells(&lam, &mu).unwrap().rows().into_keys().collect();
                assert_eq!(rows[1], rows[0] + 1);
            }
        }
    }

    #[test]
    fn normalization() {
        let a = skew_cells(&p("3,1"), &p("1,1")).unwrap();
        assert_eq!(a.normalized(), SkewShape::from_cells([Cell::new(1, 1), Cell::new(1, 2)]));
    }
}
