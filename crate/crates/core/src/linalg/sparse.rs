use std::collections::BTreeMap;

use num_traits::Zero;

use super::dense::{echelon, integer_row, RationalMatrix};
use super::scalar::Scalar;

/// Sparse vector as sorted `(index, value)` pairs with no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Accumulates `(index, value)` contributions into a `SparseVec`.
pub fn collect_sparse(terms: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVec {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (i, v) in terms {
        if v.is_zero() {
            continue;
        }
        *acc.entry(i).or_insert_with(Scalar::zero) += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Column-compressed matrix; column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            columns: vec![Vec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            nrows: n,
            ncols: n,
            columns: (0..n).map(|i| vec![(i, Scalar::from_integer(1.into()))]).collect(),
        }
    }

    pub fn from_columns(nrows: usize, columns: Vec<SparseVec>) -> Self {
        let columns: Vec<SparseVec> = columns.into_iter().map(collect_sparse).collect();
        debug_assert!(columns.iter().flatten().all(|(i, _)| *i < nrows));
        SparseMatrix {
            nrows,
            ncols: columns.len(),
            columns,
        }
    }

    pub fn from_dense(m: &RationalMatrix) -> Self {
        let columns = (0..m.ncols())
            .map(|j| {
                (0..m.nrows())
                    .filter(|&i| !m.get(i, j).is_zero())
                    .map(|i| (i, m.get(i, j).clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            nrows: m.nrows(),
            ncols: m.ncols(),
            columns,
        }
    }

    pub fn to_dense(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.nrows, self.ncols);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.columns[j]
            .binary_search_by_key(&i, |(r, _)| *r)
            .map(|k| self.columns[j][k].1.clone())
            .unwrap_or_else(|_| Scalar::zero())
    }

    /// Sets entry `(i, j)`; zero removes it.
    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        let col = &mut self.columns[j];
        match col.binary_search_by_key(&i, |(r, _)| *r) {
            Ok(k) if value.is_zero() => {
                col.remove(k);
            }
            Ok(k) => col[k].1 = value,
            Err(_) if value.is_zero() => {}
            Err(k) => col.insert(k, (i, value)),
        }
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseVec {
        collect_sparse(
            v.iter()
                .flat_map(|(j, c)| self.columns[*j].iter().map(move |(i, a)| (*i, a * c))),
        )
    }

    pub fn apply_dense(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.nrows];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, a) in &self.columns[j] {
                out[*i] += a * c;
            }
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in product");
        SparseMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            columns: other.columns.iter().map(|col| self.apply(col)).collect(),
        }
    }

    /// `self + factor · other`.
    pub fn add_scaled(&self, other: &SparseMatrix, factor: &Scalar) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| {
                    collect_sparse(
                        a.iter()
                            .cloned()
                            .chain(b.iter().map(|(i, v)| (*i, v * factor))),
                    )
                })
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Scalar) -> SparseMatrix {
        SparseMatrix::zeros(self.nrows, self.ncols).add_scaled(self, factor)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut columns: Vec<SparseVec> = vec![Vec::new(); self.nrows];
        for (i, j, v) in self.entries() {
            columns[i].push((j, v.clone()));
        }
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            columns,
        }
    }

    /// Submatrix on the given row and column index lists (in that order).
    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> SparseMatrix {
        let mut position = vec![usize::MAX; self.nrows];
        for (k, &r) in rows.iter().enumerate() {
            position[r] = k;
        }
        let columns = cols
            .iter()
            .map(|&j| {
                self.columns[j]
                    .iter()
                    .filter(|(i, _)| position[*i] != usize::MAX)
                    .map(|(i, v)| (position[*i], v.clone()))
                    .collect::<SparseVec>()
            })
            .map(|mut c| {
                c.sort_by_key(|(i, _)| *i);
                c
            })
            .collect();
        SparseMatrix {
            nrows: rows.len(),
            ncols: cols.len(),
            columns,
        }
    }

    /// Exact rank. The matrix is split into connected blocks of its
    /// row/column incidence graph and each block is eliminated densely.
    pub fn rank(&self) -> usize {
        let n = self.nrows + self.ncols;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, j, _) in self.entries() {
            let a = find(&mut parent, i);
            let b = find(&mut parent, self.nrows + j);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut blocks: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for i in 0..self.nrows {
            let root = find(&mut parent, i);
            blocks.entry(root).or_default().0.push(i);
        }
        for j in 0..self.ncols {
            let root = find(&mut parent, self.nrows + j);
            blocks.entry(root).or_default().1.push(j);
        }
        blocks
            .values()
            .filter(|(rows, cols)| !rows.is_empty() && !cols.is_empty())
            .map(|(rows, cols)| {
                let block = self.restrict(rows, cols).to_dense();
                let int_rows = block.rows_iter().map(integer_row).collect();
                echelon(int_rows, cols.len(), false).pivots.len()
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    #[test]
    fn product_matches_dense() {
        let a = RationalMatrix::from_i64(&[&[1, 0, 2], &[0, 3, 0]]);
        let b = RationalMatrix::from_i64(&[&[1, 1], &[0, 2], &[4, 0]]);
        let sa = SparseMatrix::from_dense(&a);
        let sb = SparseMatrix::from_dense(&b);
        assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
        assert_eq!(sa.transpose().to_dense(), a.transpose());
    }

    #[test]
    fn blockwise_rank() {
        let a = RationalMatrix::from_i64(&[
            &[1, 2, 0, 0],
            &[2, 4, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 0],
        ]);
        assert_eq!(SparseMatrix::from_dense(&a).rank(), 2);
        assert_eq!(SparseMatrix::identity(5).rank(), 5);
    }

    #[test]
    fn set_and_get() {
        let mut m = SparseMatrix::zeros(3, 3);
        m.set(2, 1, int(5));
        m.set(0, 1, int(1));
        assert_eq!(m.get(2, 1), int(5));
        m.set(2, 1, int(0));
        assert_eq!(m.nnz(), 1);
    }
}
