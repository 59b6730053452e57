//! Exact dense linear algebra over the rationals.

use num::{One, Zero};

use crate::algebra::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<Scalar>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix {
            n,
            data: vec![Scalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        RationalMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Gauss-Jordan elimination; the pivot is the first nonzero entry at or
    /// below the diagonal. `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a: Vec<Vec<Scalar>> = self.rows().map(<[Scalar]>::to_vec).collect();
        let mut inv: Vec<Vec<Scalar>> = Self::identity(n).rows().map(<[Scalar]>::to_vec).collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, p);
            inv.swap(col, p);
            let pivot = a[col][col].clone();
            if !pivot.is_one() {
                let recip = pivot.recip();
                for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                    if !x.is_zero() {
                        *x *= &recip;
                    }
                }
            }
            let a_nz: Vec<(usize, Scalar)> = nonzeros(&a[col]);
            let inv_nz: Vec<(usize, Scalar)> = nonzeros(&inv[col]);
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for (j, v) in &a_nz {
                    a[r][*j] -= &factor * v;
                }
                for (j, v) in &inv_nz {
                    inv[r][*j] -= &factor * v;
                }
            }
        }
        Some(Self::from_rows(inv))
    }

    /// Determinant by fraction-tracking elimination.
    pub fn determinant(&self) -> Scalar {
        let n = self.n;
        let mut a: Vec<Vec<Scalar>> = self.rows().map(<[Scalar]>::to_vec).collect();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                a.swap(col, p);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            let pivot_row = nonzeros(&a[col]);
            for row in a.iter_mut().skip(col + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] / &pivot;
                for (j, v) in &pivot_row {
                    row[*j] -= &factor * v;
                }
            }
        }
        det
    }
}

fn nonzeros(row: &[Scalar]) -> Vec<(usize, Scalar)> {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(j, v)| (j, v.clone()))
        .collect()
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.n + j]
    }
}
