use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::shape::{Cell, SkewReverseShape};
use crate::algebra::{scalar, BasisTag, QSymVector};
use crate::composition::Composition;
use crate::error::{QsymError, Result};

/// A filling of a skew reverse composition shape.
///
/// `rows[i]` lists the entries of the skew cells of row `i + 1`, left to
/// right; inner cells are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ssrct {
    shape: SkewReverseShape,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct SsrctRepr {
    outer: Composition,
    inner: Composition,
    rows: Vec<Vec<u32>>,
}

impl Serialize for Ssrct {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SsrctRepr {
            outer: self.shape.outer().clone(),
            inner: self.shape.inner().clone(),
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Ssrct {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SsrctRepr::deserialize(d)?;
        let shape = SkewReverseShape::unchecked(repr.outer, repr.inner)
            .map_err(serde::de::Error::custom)?;
        Ssrct::new(shape, repr.rows).map_err(serde::de::Error::custom)
    }
}

impl Ssrct {
    /// A filling that covers the shape exactly. Validity is not checked.
    pub fn new(shape: SkewReverseShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        check_domain(&shape, &rows)?;
        Ok(Ssrct { shape, rows })
    }

    pub fn shape(&self) -> &SkewReverseShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at a skew cell.
    pub fn get(&self, (i, j): Cell) -> Option<u32> {
        let skip = self.shape.inner_len(i);
        if j <= skip {
            return None;
        }
        self.rows.get(i - 1)?.get(j - skip - 1).copied()
    }

    pub fn is_valid(&self) -> bool {
        let get = |cell: Cell| self.get(cell);
        self.shape
            .cells_column_major()
            .into_iter()
            .all(|cell| placement_ok(&self.shape, &get, cell, self.get(cell).unwrap()))
    }

    /// `(c_1, …, c_max)`: how often each value occurs.
    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; max];
        for &v in self.rows.iter().flatten() {
            counts[v as usize - 1] += 1;
        }
        counts
    }
}

fn check_domain(shape: &SkewReverseShape, rows: &[Vec<u32>]) -> Result<()> {
    if rows.len() != shape.rows() {
        return Err(QsymError::InvalidInput(format!(
            "filling has {} rows, shape has {}",
            rows.len(),
            shape.rows()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        let want = shape.row_len(i + 1) - shape.inner_len(i + 1);
        if row.len() != want {
            return Err(QsymError::InvalidInput(format!(
                "row {} of the filling has {} entries, the shape has {want} skew cells",
                i + 1,
                row.len()
            )));
        }
        if row.contains(&0) {
            return Err(QsymError::InvalidInput("entries must be positive".into()));
        }
    }
    Ok(())
}

/// Validity of a filling of `shape`; rejects fillings whose cells differ from
/// the shape's skew cells.
pub fn is_valid_ssrct(shape: &SkewReverseShape, rows: &[Vec<u32>]) -> Result<bool> {
    Ok(Ssrct::new(shape.clone(), rows.to_vec())?.is_valid())
}

/// Value of a cell in the outer shape: `None` outside it, `u32::MAX` on inner
/// cells.
fn value<G>(shape: &SkewReverseShape, get: &G, cell: Cell) -> Option<u32>
where
    G: Fn(Cell) -> Option<u32>,
{
    if !shape.in_outer(cell) {
        None
    } else if shape.is_inner(cell) {
        Some(u32::MAX)
    } else {
        get(cell)
    }
}

/// All conditions that involve `cell = (j, c)` and only cells that precede it
/// in column-major order. Checking this at every cell checks the whole filling.
fn placement_ok<G>(shape: &SkewReverseShape, get: &G, (j, c): Cell, v: u32) -> bool
where
    G: Fn(Cell) -> Option<u32>,
{
    // rows weakly decrease
    if c > 1 {
        if let Some(left) = value(shape, get, (j, c - 1)) {
            if left < v {
                return false;
            }
        }
    }
    if c == 1 {
        // first column strictly increases downward
        for i in (1..j).rev() {
            if shape.is_skew((i, 1)) {
                if get((i, 1)).unwrap() >= v {
                    return false;
                }
                break;
            }
        }
        return true;
    }
    // triple rule with (j, k+1) = (j, c)
    let k = c - 1;
    for i in 1..j {
        let Some(tik) = value(shape, get, (i, k)) else {
            continue;
        };
        if tik >= v {
            match value(shape, get, (i, c)) {
                Some(above) if above > v => {}
                _ => return false,
            }
        }
    }
    true
}

/// Every valid filling of `shape` with entries in `1..=max_entry`, in
/// column-major lexicographic order.
pub fn enumerate_ssrct(shape: &SkewReverseShape, max_entry: u32) -> Vec<Ssrct> {
    let mut out = Vec::new();
    for_each_ssrct(shape, max_entry, |t| out.push(t.clone()));
    out
}

struct Search<'a, F> {
    shape: &'a SkewReverseShape,
    order: Vec<Cell>,
    max_entry: u32,
    grid: Vec<Vec<u32>>,
    visit: F,
}

impl<F: FnMut(&Ssrct)> Search<'_, F> {
    fn get(&self, (i, j): Cell) -> Option<u32> {
        let skip = self.shape.inner_len(i);
        match self.grid.get(i - 1)?.get(j.checked_sub(skip + 1)?) {
            Some(0) | None => None,
            Some(&v) => Some(v),
        }
    }

    fn run(&mut self, pos: usize) {
        if pos == self.order.len() {
            let t = Ssrct {
                shape: self.shape.clone(),
                rows: self.grid.clone(),
            };
            (self.visit)(&t);
            return;
        }
        let (i, j) = self.order[pos];
        let skip = self.shape.inner_len(i);
        for v in 1..=self.max_entry {
            let ok = placement_ok(self.shape, &|cell| self.get(cell), (i, j), v);
            if ok {
                self.grid[i - 1][j - skip - 1] = v;
                self.run(pos + 1);
                self.grid[i - 1][j - skip - 1] = 0;
            }
        }
    }
}

/// Streaming form of [`enumerate_ssrct`].
pub fn for_each_ssrct<F: FnMut(&Ssrct)>(shape: &SkewReverseShape, max_entry: u32, visit: F) {
    let grid = (1..=shape.rows())
        .map(|i| vec![0; shape.row_len(i) - shape.inner_len(i)])
        .collect();
    let mut search = Search {
        shape,
        order: shape.cells_column_major(),
        max_entry,
        grid,
        visit,
    };
    search.run(0);
}

type SchurCache = RwLock<HashMap<Composition, Arc<QSymVector>>>;

fn schur_cache() -> &'static SchurCache {
    static CACHE: OnceLock<SchurCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `S_α` in the monomial basis: the coefficient of `M_γ` counts the tableaux
/// of shape `α` with content exactly `γ`.
pub fn schur_to_m(alpha: &Composition) -> Arc<QSymVector> {
    if let Some(hit) = schur_cache().read().unwrap().get(alpha) {
        return hit.clone();
    }
    let n = alpha.weight() as u32;
    let mut counts: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for_each_ssrct(&SkewReverseShape::straight(alpha.clone()), n.max(1), |t| {
        let content = t.content();
        if !content.contains(&0) {
            *counts.entry(content).or_insert(0) += 1;
        }
    });
    if alpha.is_empty() {
        counts = BTreeMap::from([(Vec::new(), 1)]);
    }
    let v = Arc::new(QSymVector::from_terms(
        BasisTag::M,
        counts
            .into_iter()
            .map(|(c, k)| (Composition::new(c).expect("packed content"), scalar(k))),
    ));
    schur_cache()
        .write()
        .unwrap()
        .entry(alpha.clone())
        .or_insert_with(|| v.clone());
    v
}
