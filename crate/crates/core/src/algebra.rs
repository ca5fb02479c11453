//! Lie superalgebras given by structure constants, gl(m|n), its even part
//! and the detecting subalgebra.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{collect_sparse, int, kernel_basis, one, sign, Parity, RationalMatrix, Scalar, SparseVec};
use crate::roots::Weight;

/// Finite-dimensional Lie superalgebra with `[e_a, e_b] = Σ_d c_{ab}^d e_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperalgebra {
    name: String,
    basis: Vec<(String, Parity)>,
    brackets: Vec<Vec<SparseVec>>,
    weights: Option<Vec<Weight>>,
    degrees: Option<Vec<i32>>,
    shape: Option<(usize, usize)>,
}

impl LieSuperalgebra {
    /// Checks super-antisymmetry, parity compatibility and the super Jacobi
    /// identity on every basis triple.
    pub fn new(name: impl Into<String>, basis: Vec<(String, Parity)>, brackets: Vec<Vec<SparseVec>>) -> Result<Self> {
        let dim = basis.len();
        if brackets.len() != dim || brackets.iter().any(|row| row.len() != dim) {
            return Err(Error::BadStructureConstants("shape of the bracket table".into()));
        }
        let brackets: Vec<Vec<SparseVec>> = brackets
            .into_iter()
            .map(|row| row.into_iter().map(collect_sparse).collect())
            .collect();
        let algebra = LieSuperalgebra {
            name: name.into(),
            basis,
            brackets,
            weights: None,
            degrees: None,
            shape: None,
        };
        algebra.check_axioms()?;
        Ok(algebra)
    }

    fn check_axioms(&self) -> Result<()> {
        let dim = self.dim();
        for a in 0..dim {
            for b in 0..dim {
                let pa = self.parity(a);
                let pb = self.parity(b);
                if self.brackets[a][b].iter().any(|(d, _)| self.parity(*d) != pa + pb) {
                    return Err(Error::BadStructureConstants(format!(
                        "parity rule at ({}, {})",
                        self.label(a),
                        self.label(b)
                    )));
                }
                let swapped: SparseVec = self.brackets[b][a]
                    .iter()
                    .map(|(d, c)| (*d, -sign(pa.koszul(pb)) * c))
                    .collect();
                if self.brackets[a][b] != swapped {
                    return Err(Error::BadStructureConstants(format!(
                        "super-antisymmetry at ({}, {})",
                        self.label(a),
                        self.label(b)
                    )));
                }
            }
        }
        for a in 0..dim {
            for b in 0..dim {
                let ab = &self.brackets[a][b];
                let s = sign(self.parity(a).koszul(self.parity(b)));
                for c in 0..dim {
                    let lhs = self.bracket(&unit(a), &self.brackets[b][c]);
                    let rhs = collect_sparse(
                        self.bracket(ab, &unit(c))
                            .into_iter()
                            .chain(self.bracket(&unit(b), &self.brackets[a][c]).into_iter().map(|(d, v)| (d, &s * v))),
                    );
                    if lhs != rhs {
                        return Err(Error::BadStructureConstants(format!(
                            "super Jacobi identity at ({}, {}, {})",
                            self.label(a),
                            self.label(b),
                            self.label(c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_weights(mut self, weights: Vec<Weight>) -> Self {
        assert_eq!(weights.len(), self.dim());
        self.weights = Some(weights);
        self
    }

    pub fn with_degrees(mut self, degrees: Vec<i32>) -> Self {
        assert_eq!(degrees.len(), self.dim());
        self.degrees = Some(degrees);
        self
    }

    pub fn with_shape(mut self, m: usize, n: usize) -> Self {
        self.shape = Some((m, n));
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn parity(&self, a: usize) -> Parity {
        self.basis[a].1
    }

    pub fn label(&self, a: usize) -> &str {
        &self.basis[a].0
    }

    pub fn basis(&self) -> &[(String, Parity)] {
        &self.basis
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&a| self.parity(a).is_odd()).collect()
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&a| !self.parity(a).is_odd()).collect()
    }

    /// `[e_a, e_b]` in the basis.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &SparseVec {
        &self.brackets[a][b]
    }

    /// Bilinear extension of the bracket to arbitrary elements.
    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        collect_sparse(x.iter().flat_map(|(a, ca)| {
            y.iter().flat_map(move |(b, cb)| {
                let coeff = ca * cb;
                self.brackets[*a][*b].iter().map(move |(d, v)| (*d, v * &coeff))
            })
        }))
    }

    pub fn weight(&self, a: usize) -> Option<&Weight> {
        self.weights.as_ref().map(|w| &w[a])
    }

    /// ℤ-degree (−1, 0 or 1) when the algebra carries a consistent grading.
    pub fn degree(&self, a: usize) -> Option<i32> {
        self.degrees.as_ref().map(|d| d[a])
    }

    /// `(m, n)` for gl(m|n) and its even part.
    pub fn shape(&self) -> Option<(usize, usize)> {
        self.shape
    }

    /// The subalgebra spanned by a set of basis vectors; the span must be
    /// closed under the bracket.
    pub fn subalgebra(&self, name: impl Into<String>, indices: &[usize]) -> Result<LieSuperalgebra> {
        let mut position = vec![usize::MAX; self.dim()];
        for (k, &a) in indices.iter().enumerate() {
            position[a] = k;
        }
        let mut brackets = Vec::with_capacity(indices.len());
        for &a in indices {
            let mut row = Vec::with_capacity(indices.len());
            for &b in indices {
                let mut entry = SparseVec::new();
                for (d, v) in &self.brackets[a][b] {
                    if position[*d] == usize::MAX {
                        return Err(Error::BadStructureConstants(format!(
                            "closure: [{}, {}] leaves the span",
                            self.label(a),
                            self.label(b)
                        )));
                    }
                    entry.push((position[*d], v.clone()));
                }
                row.push(entry);
            }
            brackets.push(row);
        }
        let mut sub = LieSuperalgebra::new(name, indices.iter().map(|&a| self.basis[a].clone()).collect(), brackets)?;
        sub.weights = self.weights.as_ref().map(|w| indices.iter().map(|&a| w[a].clone()).collect());
        sub.degrees = self.degrees.as_ref().map(|d| indices.iter().map(|&a| d[a]).collect());
        sub.shape = self.shape;
        Ok(sub)
    }
}

impl fmt::Display for LieSuperalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// The element `e_a` as a sparse vector.
pub fn unit(a: usize) -> SparseVec {
    vec![(a, one())]
}

/// Index of `E_ij` (0-based) in the gl(m|n) basis.
pub fn gl_index(m: usize, n: usize, i: usize, j: usize) -> usize {
    i * (m + n) + j
}

/// `(i, j)` with `e_a = E_ij`.
pub fn gl_pair(m: usize, n: usize, a: usize) -> (usize, usize) {
    (a / (m + n), a % (m + n))
}

fn index_parity(m: usize, i: usize) -> bool {
    i >= m
}

/// ℤ-degree of `E_ij`: +1 on g₁ (upper right block), −1 on g₋₁, 0 otherwise.
pub fn gl_degree(m: usize, i: usize, j: usize) -> i32 {
    match (i < m, j < m) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}

fn build_gl(m: usize, n: usize) -> Result<LieSuperalgebra> {
    let size = m + n;
    let dim = size * size;
    let parity = |i: usize, j: usize| index_parity(m, i) != index_parity(m, j);
    let mut basis = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    let mut degrees = Vec::with_capacity(dim);
    for i in 0..size {
        for j in 0..size {
            basis.push((format!("E{},{}", i + 1, j + 1), Parity::from_bit(parity(i, j))));
            weights.push(&Weight::epsilon(m, n, i) - &Weight::epsilon(m, n, j));
            degrees.push(gl_degree(m, i, j));
        }
    }
    let mut brackets = vec![vec![SparseVec::new(); dim]; dim];
    for (a, row) in brackets.iter_mut().enumerate() {
        let (i, j) = gl_pair(m, n, a);
        for (b, entry) in row.iter_mut().enumerate() {
            let (k, l) = gl_pair(m, n, b);
            let mut terms = Vec::new();
            if j == k {
                terms.push((gl_index(m, n, i, l), int(1)));
            }
            if l == i {
                terms.push((gl_index(m, n, k, j), -sign(parity(i, j) && parity(k, l))));
            }
            *entry = collect_sparse(terms);
        }
    }
    Ok(LieSuperalgebra::new(format!("gl({m}|{n})"), basis, brackets)?
        .with_weights(weights)
        .with_degrees(degrees)
        .with_shape(m, n))
}

type Cache = Mutex<HashMap<(usize, usize), Arc<LieSuperalgebra>>>;

fn cached(cache: &'static OnceLock<Cache>, key: (usize, usize), build: impl FnOnce() -> LieSuperalgebra) -> Arc<LieSuperalgebra> {
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = map.lock().expect("algebra cache").get(&key) {
        return Arc::clone(found);
    }
    let built = Arc::new(build());
    map.lock().expect("algebra cache").entry(key).or_insert(built).clone()
}

/// gl(m|n) with basis `E_ij` ordered row-major; the structure constants are
/// those of the supercommutator `[A, B] = AB − (−1)^{|A||B|} BA`. The result
/// is verified once and then shared.
pub fn gl_superalgebra(m: usize, n: usize) -> Arc<LieSuperalgebra> {
    assert!(m >= 1 && n >= 1, "gl(m|n) needs m, n >= 1");
    static CACHE: OnceLock<Cache> = OnceLock::new();
    cached(&CACHE, (m, n), || build_gl(m, n).expect("gl(m|n) satisfies the axioms"))
}

/// Indices of the gl(m|n) basis elements spanning g₀ = gl(m) ⊕ gl(n), in
/// increasing order.
pub fn even_part_indices(m: usize, n: usize) -> Vec<usize> {
    let size = m + n;
    (0..size * size)
        .filter(|&a| {
            let (i, j) = gl_pair(m, n, a);
            gl_degree(m, i, j) == 0
        })
        .collect()
}

/// g₀ = gl(m) ⊕ gl(n) as a Lie superalgebra; basis element `k` is
/// `even_part_indices(m, n)[k]` of gl(m|n).
pub fn even_part(m: usize, n: usize) -> Arc<LieSuperalgebra> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    cached(&CACHE, (m, n), || {
        gl_superalgebra(m, n)
            .subalgebra(format!("gl({m}|{n})_0"), &even_part_indices(m, n))
            .expect("g0 is a subalgebra")
    })
}

/// Supertranspose of a basis element: `st(E_ab) = (−1)^{|b|(|a|+|b|)} E_ba`.
pub fn supertranspose(m: usize, n: usize, a: usize) -> (usize, Scalar) {
    let (i, j) = gl_pair(m, n, a);
    let pi = index_parity(m, i);
    let pj = index_parity(m, j);
    (gl_index(m, n, j, i), sign(pj && (pi != pj)))
}

/// 𝔢 ⊆ gl(m|n): odd part spanned by `x_t = E_{m+1−t, m+t} + E_{m+t, m+1−t}`
/// (1-based), even part the stabilizer of 𝔢₁ in g₀.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetectingSubalgebra {
    m: usize,
    n: usize,
    odd: Vec<SparseVec>,
    squares: Vec<SparseVec>,
    even: Vec<SparseVec>,
}

impl DetectingSubalgebra {
    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn rank(&self) -> usize {
        self.odd.len()
    }

    /// `x_t` for `t = 1..r` (index `t − 1`).
    pub fn odd_basis(&self) -> &[SparseVec] {
        &self.odd
    }

    /// `x_t² = ½[x_t, x_t] = E_pp + E_qq`.
    pub fn squares(&self) -> &[SparseVec] {
        &self.squares
    }

    /// Basis of 𝔢₀ = Stab_{g₀}(𝔢₁).
    pub fn even_basis(&self) -> &[SparseVec] {
        &self.even
    }

    /// `(p, q)` (0-based) with `x_t = E_pq + E_qp`.
    pub fn pair(&self, t: usize) -> (usize, usize) {
        (self.m - t, self.m + t - 1)
    }
}

pub fn detecting_subalgebra(m: usize, n: usize) -> DetectingSubalgebra {
    let g = gl_superalgebra(m, n);
    let r = m.min(n);
    let mut odd = Vec::with_capacity(r);
    let mut squares = Vec::with_capacity(r);
    for t in 1..=r {
        let (p, q) = (m - t, m + t - 1);
        odd.push(collect_sparse([(gl_index(m, n, p, q), one()), (gl_index(m, n, q, p), one())]));
        squares.push(collect_sparse([(gl_index(m, n, p, p), one()), (gl_index(m, n, q, q), one())]));
    }
    for s in 0..r {
        for t in 0..r {
            let br = g.bracket(&odd[s], &odd[t]);
            let expected: SparseVec = if s == t {
                squares[t].iter().map(|(d, v)| (*d, v * int(2))).collect()
            } else {
                Vec::new()
            };
            assert_eq!(br, expected, "detecting generators x{} and x{}", s + 1, t + 1);
        }
    }
    let even = stabilizer(&g, &even_part_indices(m, n), &odd);
    DetectingSubalgebra { m, n, odd, squares, even }
}

/// `{h ∈ span(candidates) : [h, x] ∈ span(xs) for every x ∈ xs}`.
fn stabilizer(g: &LieSuperalgebra, candidates: &[usize], xs: &[SparseVec]) -> Vec<SparseVec> {
    let dim = g.dim();
    let k = candidates.len();
    let r = xs.len();
    // Unknowns: coefficients c_a of h, then d_{ts} with [h, x_t] = Σ_s d_{ts} x_s.
    let unknowns = k + r * r;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (t, x) in xs.iter().enumerate() {
        let mut block = vec![vec![Scalar::zero(); unknowns]; dim];
        for (col, &a) in candidates.iter().enumerate() {
            for (d, v) in g.bracket(&unit(a), x) {
                block[d][col] += v;
            }
        }
        for (s, xs_s) in xs.iter().enumerate() {
            for (d, v) in xs_s {
                block[*d][k + t * r + s] -= v;
            }
        }
        rows.extend(block.into_iter().filter(|row| row.iter().any(|v| !v.is_zero())));
    }
    let system = RationalMatrix::from_rows(unknowns, rows);
    let mut span = crate::linalg::IncrementalSpan::new();
    let mut basis = Vec::new();
    for v in kernel_basis(&system) {
        let h: Vec<Scalar> = v[..k].to_vec();
        if span.insert(&h) {
            basis.push(collect_sparse(candidates.iter().zip(h).map(|(&a, c)| (a, c))));
        }
    }
    basis
}
