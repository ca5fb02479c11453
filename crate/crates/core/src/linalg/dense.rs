use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{abs_numer_key, scalar_string, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds from explicit rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        RationalMatrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| super::scalar::int(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        self.rows_iter().map(|row| dot(row, v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        kernel_basis(self)
    }

    /// Inverse via exact Gauss–Jordan; `None` when singular or not square.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n)
                .filter(|&r| !a.get(r, c).is_zero())
                .min_by(|&x, &y| abs_numer_key(a.get(x, c)).cmp(&abs_numer_key(a.get(y, c))))?;
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            let pivot = a.get(c, c).clone();
            for j in 0..n {
                let v = a.get(c, j) / &pivot;
                a.set(c, j, v);
                let w = inv.get(c, j) / &pivot;
                inv.set(c, j, w);
            }
            for r in 0..n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                for j in 0..n {
                    let v = a.get(r, j) - &f * a.get(c, j);
                    a.set(r, j, v);
                    let w = inv.get(r, j) - &f * inv.get(c, j);
                    inv.set(r, j, w);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.rows_iter() {
            let cells: Vec<String> = row.iter().map(scalar_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Integer row echelon form. `rows[k]` has its pivot in column `pivots[k]`.
pub(crate) struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

/// Clears denominators and removes the content of a rational row.
pub(crate) fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|x| {
            if x.is_zero() {
                BigInt::zero()
            } else {
                x.numer() * (&lcm / x.denom())
            }
        })
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x /= &g;
            }
        }
    }
}

/// Fraction-free elimination over ℤ. Pivot in each column is the entry of
/// smallest magnitude, ties going to the lowest row index; rows are kept
/// primitive after every update. With `full`, entries above pivots are
/// cleared as well.
pub(crate) fn echelon(mut rows: Vec<Vec<BigInt>>, ncols: usize, full: bool) -> Echelon {
    let n = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == n {
            break;
        }
        let pick = (r..n)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&x, &y| rows[x][c].abs().cmp(&rows[y][c].abs()));
        let Some(p) = pick else { continue };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().unwrap();
        let targets = if full {
            head.iter_mut().chain(tail.iter_mut()).collect::<Vec<_>>()
        } else {
            tail.iter_mut().collect::<Vec<_>>()
        };
        for row in targets {
            if row[c].is_zero() {
                continue;
            }
            let g = pivot_row[c].gcd(&row[c]);
            let mp = &pivot_row[c] / &g;
            let mr = &row[c] / &g;
            for j in c..ncols {
                if pivot_row[j].is_zero() {
                    if !row[j].is_zero() {
                        row[j] *= &mp;
                    }
                } else {
                    row[j] = &row[j] * &mp - &pivot_row[j] * &mr;
                }
            }
            if full {
                for j in 0..c {
                    if !row[j].is_zero() {
                        row[j] *= &mp;
                    }
                }
            }
            make_primitive(row);
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

fn echelon_of(rows: impl Iterator<Item = Vec<BigInt>>, ncols: usize, full: bool) -> Echelon {
    let rows: Vec<Vec<BigInt>> = rows.filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    echelon(rows, ncols, full)
}

/// Exact rank over ℚ.
pub fn rank(a: &RationalMatrix) -> usize {
    echelon_of(a.rows_iter().map(integer_row), a.ncols(), false)
        .pivots
        .len()
}

/// Pivot columns of the row echelon form, i.e. the lexicographically first
/// maximal set of linearly independent columns.
pub fn pivot_columns(a: &RationalMatrix) -> Vec<usize> {
    echelon_of(a.rows_iter().map(integer_row), a.ncols(), false).pivots
}

/// Rank of the span of a list of vectors of equal length.
pub fn span_rank(vectors: &[Vec<Scalar>]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    echelon_of(vectors.iter().map(|v| integer_row(v)), first.len(), false)
        .pivots
        .len()
}

/// Basis of `{v : A v = 0}`. One vector per free column, scaled to a
/// primitive integer vector.
pub fn kernel_basis(a: &RationalMatrix) -> Vec<Vec<Scalar>> {
    kernel_from_rows(a.rows_iter().map(integer_row), a.ncols())
}

pub(crate) fn kernel_from_rows(rows: impl Iterator<Item = Vec<BigInt>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let ech = echelon_of(rows, ncols, true);
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        // Common denominator is the lcm of the pivots touching column f.
        let mut scale = BigInt::one();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            if !row[f].is_zero() {
                scale = scale.lcm(&row[p].abs());
            }
        }
        let mut v = vec![BigInt::zero(); ncols];
        v[f] = scale.clone();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            if !row[f].is_zero() {
                v[p] = -(&row[f] * &scale) / &row[p];
            }
        }
        make_primitive(&mut v);
        basis.push(v.into_iter().map(BigRational::from_integer).collect());
    }
    basis
}

/// `dim span(kernel_sub) − dim span(image)`, after checking that every image
/// vector lies in the span of `kernel_sub`.
pub fn quotient_dim(ambient_dim: usize, image: &[Vec<Scalar>], kernel_sub: &[Vec<Scalar>]) -> Result<usize> {
    for v in image.iter().chain(kernel_sub) {
        assert_eq!(v.len(), ambient_dim, "vector length differs from ambient dimension");
    }
    let kernel_rank = span_rank(kernel_sub);
    let mut stacked: Vec<Vec<Scalar>> = kernel_sub.to_vec();
    for (idx, v) in image.iter().enumerate() {
        stacked.push(v.clone());
        if span_rank(&stacked) != kernel_rank {
            return Err(Error::ImageNotContained(idx));
        }
        stacked.pop();
    }
    Ok(kernel_rank - span_rank(image))
}

/// Coordinates with respect to a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct SpanCoordinates {
    basis: Vec<Vec<Scalar>>,
    rows: Vec<usize>,
    solve: RationalMatrix,
}

impl SpanCoordinates {
    /// `None` if the family is linearly dependent.
    pub fn new(basis: Vec<Vec<Scalar>>) -> Option<Self> {
        let k = basis.len();
        if k == 0 {
            return Some(SpanCoordinates {
                basis,
                rows: Vec::new(),
                solve: RationalMatrix::zeros(0, 0),
            });
        }
        let n = basis[0].len();
        let ech = echelon(basis.iter().map(|b| integer_row(b)).collect(), n, false);
        if ech.pivots.len() != k {
            return None;
        }
        let rows = ech.pivots;
        // restricted[i][j] = basis_j[rows_i]; coordinates c solve restricted · c = v[rows].
        let restricted = RationalMatrix::from_rows(
            k,
            rows.iter()
                .map(|&r| basis.iter().map(|b| b[r].clone()).collect())
                .collect(),
        );
        let solve = restricted.inverse()?;
        Some(SpanCoordinates { basis, rows, solve })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Coordinates of `v`, or `NotInSpan`.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if self.basis.is_empty() {
            return if v.iter().all(Zero::is_zero) {
                Ok(Vec::new())
            } else {
                Err(Error::NotInSpan)
            };
        }
        let restricted: Vec<Scalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let coords = self.solve.mul_vec(&restricted);
        for (i, x) in v.iter().enumerate() {
            let mut recon = Scalar::zero();
            for (c, b) in coords.iter().zip(&self.basis) {
                if !c.is_zero() && !b[i].is_zero() {
                    recon += c * &b[i];
                }
            }
            if &recon != x {
                return Err(Error::NotInSpan);
            }
        }
        Ok(coords)
    }
}

/// Growing span used to pick independent vectors one at a time.
#[derive(Clone, Debug, Default)]
pub struct IncrementalSpan {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl IncrementalSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` if it is independent of what is already there; reports whether it was added.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = w[p].clone();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x /= &lead;
            }
        }
        self.rows.push((p, w));
        true
    }
}
