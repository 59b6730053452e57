use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::composition::{Composition, Partition};
use crate::error::{QsymError, Result};
use crate::posets::{leq, OrderTag};

/// A cell `(row, column)`, both 1-indexed, rows counted from the top.
pub type Cell = (usize, usize);

/// `α⫽β`: the inner shape `β` sits in the bottom-left corner of `α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewReverseShape {
    outer: Composition,
    inner: Composition,
}

impl SkewReverseShape {
    /// Requires `β ≤_C α`.
    pub fn new(outer: Composition, inner: Composition) -> Result<Self> {
        let shape = Self::unchecked(outer, inner)?;
        if !leq(OrderTag::C, &shape.inner, &shape.outer)? {
            return Err(QsymError::InvalidInput(format!(
                "{} is not below {} in the reverse composition order",
                shape.inner, shape.outer
            )));
        }
        Ok(shape)
    }

    /// Only requires that `β` fits inside `α` bottom-left aligned.
    pub fn unchecked(outer: Composition, inner: Composition) -> Result<Self> {
        if inner.len() > outer.len() {
            return Err(QsymError::InvalidInput(format!(
                "inner shape {inner} has more rows than {outer}"
            )));
        }
        let offset = outer.len() - inner.len();
        for (r, &b) in inner.parts().iter().enumerate() {
            if b > outer.parts()[offset + r] {
                return Err(QsymError::InvalidInput(format!(
                    "inner shape {inner} does not fit inside {outer}"
                )));
            }
        }
        Ok(SkewReverseShape { outer, inner })
    }

    pub fn straight(outer: Composition) -> Self {
        SkewReverseShape {
            outer,
            inner: Composition::empty(),
        }
    }

    pub fn outer(&self) -> &Composition {
        &self.outer
    }

    pub fn inner(&self) -> &Composition {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Length of row `i` of the outer shape, 0 outside.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 || i > self.outer.len() {
            0
        } else {
            self.outer.parts()[i - 1] as usize
        }
    }

    /// Number of inner cells in row `i`.
    pub fn inner_len(&self, i: usize) -> usize {
        let offset = self.outer.len() - self.inner.len();
        if i <= offset || i > self.outer.len() {
            0
        } else {
            self.inner.parts()[i - offset - 1] as usize
        }
    }

    pub fn in_outer(&self, (i, j): Cell) -> bool {
        j >= 1 && j <= self.row_len(i)
    }

    pub fn is_inner(&self, (i, j): Cell) -> bool {
        j >= 1 && j <= self.inner_len(i)
    }

    pub fn is_skew(&self, cell: Cell) -> bool {
        self.in_outer(cell) && !self.is_inner(cell)
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Skew cells, row by row.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.rows())
            .flat_map(|i| (self.inner_len(i) + 1..=self.row_len(i)).map(move |j| (i, j)))
            .collect()
    }

    /// Skew cells, column by column, top to bottom within a column.
    pub fn cells_column_major(&self) -> Vec<Cell> {
        let width = self.outer.parts().iter().copied().max().unwrap_or(0) as usize;
        let mut out = Vec::with_capacity(self.size());
        for j in 1..=width {
            for i in 1..=self.rows() {
                if self.is_skew((i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// At most one skew cell per row.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.rows()).all(|i| self.row_len(i) - self.inner_len(i) <= 1)
    }

    /// At most one skew cell per column.
    pub fn is_horizontal_strip(&self) -> bool {
        columns_distinct(&self.cells())
    }
}

/// `λ/μ` with `μ` in the top-left corner.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewPartitionShape {
    outer: Partition,
    inner: Partition,
}

impl SkewPartitionShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.contained_in(&outer) {
            return Err(QsymError::InvalidInput(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewPartitionShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn cells(&self) -> Vec<Cell> {
        (0..self.outer.len())
            .flat_map(|r| {
                let lo = self.inner.part(r) as usize;
                let hi = self.outer.part(r) as usize;
                (lo + 1..=hi).map(move |j| (r + 1, j))
            })
            .collect()
    }

    pub fn is_horizontal_strip(&self) -> bool {
        columns_distinct(&self.cells())
    }

    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.len()).all(|r| self.outer.part(r) - self.inner.part(r) <= 1)
    }

    /// `S(δ)`: the columns a horizontal strip occupies.
    pub fn strip_columns(&self) -> Result<BTreeSet<u32>> {
        if !self.is_horizontal_strip() {
            return Err(QsymError::InvalidInput(format!(
                "{}/{} is not a horizontal strip",
                self.outer, self.inner
            )));
        }
        Ok(self.cells().into_iter().map(|(_, j)| j as u32).collect())
    }

    /// `M(ε)`: the columns of a vertical strip with multiplicity, weakly increasing.
    pub fn strip_column_multiset(&self) -> Result<Vec<u32>> {
        if !self.is_vertical_strip() {
            return Err(QsymError::InvalidInput(format!(
                "{}/{} is not a vertical strip",
                self.outer, self.inner
            )));
        }
        let mut cols: Vec<u32> = self.cells().into_iter().map(|(_, j)| j as u32).collect();
        cols.sort_unstable();
        Ok(cols)
    }
}

fn columns_distinct(cells: &[Cell]) -> bool {
    let mut seen = BTreeSet::new();
    cells.iter().all(|&(_, j)| seen.insert(j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::from_parts(parts)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn reverse_shape_cells() {
        let s = SkewReverseShape::new(c(&[3, 4, 2, 3]), c(&[1, 2])).unwrap();
        assert_eq!(s.size(), 9);
        assert_eq!(
            s.cells(),
            vec![
                (1, 1),
                (1, 2),
                (1, 3),
                (2, 1),
                (2, 2),
                (2, 3),
                (2, 4),
                (3, 2),
                (4, 3)
            ]
        );
        assert!(s.is_inner((3, 1)) && s.is_inner((4, 2)) && !s.is_inner((4, 3)));
        assert_eq!(s.cells_column_major()[..3], [(1, 1), (2, 1), (1, 2)]);
        assert!(SkewReverseShape::new(c(&[1, 1]), c(&[2])).is_err());
        assert!(SkewReverseShape::new(c(&[2, 1]), c(&[1, 1])).is_ok());
    }

    #[test]
    fn strips() {
        let h = SkewPartitionShape::new(p(&[5, 4, 2, 2]), p(&[4, 2, 2])).unwrap();
        assert!(h.is_horizontal_strip());
        assert_eq!(h.strip_columns().unwrap(), BTreeSet::from([1, 2, 3, 4, 5]));

        let v = SkewReverseShape::new(c(&[1, 2, 4, 2]), c(&[1, 3, 1])).unwrap();
        assert!(v.is_vertical_strip());
        assert!(!v.is_horizontal_strip());

        let not_h = SkewPartitionShape::new(p(&[2, 2]), p(&[1])).unwrap();
        assert!(!not_h.is_horizontal_strip());
        assert!(not_h.strip_columns().is_err());

        let single = SkewPartitionShape::new(p(&[3, 1]), p(&[2, 1])).unwrap();
        assert_eq!(single.strip_columns().unwrap(), BTreeSet::from([3]));

        let stack = SkewPartitionShape::new(p(&[2, 1, 1, 1]), p(&[2])).unwrap();
        assert_eq!(stack.strip_column_multiset().unwrap(), vec![1, 1, 1]);
        assert!(SkewPartitionShape::new(p(&[2]), p(&[3])).is_err());
    }
}
