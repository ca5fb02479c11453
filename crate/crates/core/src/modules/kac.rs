//! Kac modules K(λ) = U(g) ⊗_{U(g₀ ⊕ g₁)} L₀(λ) with basis `y_S ⊗ v`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{even_part_indices, gl_degree, gl_index, gl_pair, gl_superalgebra, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::linalg::{collect_sparse, sign, Parity, Scalar, SparseMatrix, SuperVectorSpace};
use crate::roots::Weight;

use super::{l0_module_with, L0Module, L0Options, SuperModuleRep};

/// K(λ) with the data needed to build its contravariant form.
///
/// The odd negative root vectors `y_s = E_{j,i}` (`i ≤ m < j`) are ordered
/// row-major by `(j, i)`. A subset `S` is a bitmask and `y_S` is the product
/// in increasing order of `s`. Basis vectors are ordered by `|S|`, then by
/// mask, then by the L₀(λ) index.
#[derive(Clone, Debug)]
pub struct KacModule {
    pub lambda: Weight,
    pub l0: L0Module,
    pub rep: SuperModuleRep,
    odd_negative: Vec<usize>,
    masks: Vec<u32>,
    mask_position: HashMap<u32, usize>,
}

pub fn kac_module(lambda: &Weight) -> Result<KacModule> {
    kac_module_with(lambda, L0Options::default())
}

pub fn kac_module_with(lambda: &Weight, options: L0Options) -> Result<KacModule> {
    let l0 = l0_module_with(lambda, options)?;
    let (m, n) = lambda.shape();
    if m * n > 31 {
        return Err(Error::TooLarge(format!("Kac module of gl({m}|{n}) has 2^{} monomials", m * n)));
    }
    let g = gl_superalgebra(m, n);
    let odd_negative: Vec<usize> = (m..m + n)
        .flat_map(|j| (0..m).map(move |i| gl_index(m, n, j, i)))
        .collect();
    let mut masks: Vec<u32> = (0..1u32 << (m * n)).collect();
    masks.sort_by_key(|s| (s.count_ones(), *s));
    let mask_position = masks.iter().enumerate().map(|(p, &s)| (s, p)).collect();
    let builder = Builder {
        g: &g,
        m,
        n,
        l0: &l0,
        odd_negative: &odd_negative,
        g0_position: {
            let mut pos = vec![usize::MAX; g.dim()];
            for (k, a) in even_part_indices(m, n).into_iter().enumerate() {
                pos[a] = k;
            }
            pos
        },
    };

    let d0 = l0.dim();
    let dim = masks.len() * d0;
    let index = |mask: u32, v: usize, pos: &HashMap<u32, usize>| pos[&mask] * d0 + v;
    let mut basis = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    for &mask in &masks {
        let mut shift = Weight::zero(m, n);
        let mut word = String::new();
        for s in 0..m * n {
            if mask & (1 << s) != 0 {
                shift = &shift + g.weight(odd_negative[s]).expect("gl carries weights");
                word.push_str(&format!("y{}", s + 1));
            }
        }
        for v in 0..d0 {
            let label = if word.is_empty() { format!("v{v}") } else { format!("{word}·v{v}") };
            basis.push((label, Parity::from_bit(mask.count_ones() % 2 == 1)));
            weights.push(l0.rep.weight(v) + &shift);
        }
    }

    let actions = (0..g.dim())
        .map(|a| {
            let columns = masks
                .iter()
                .flat_map(|&mask| (0..d0).map(move |v| (mask, v)))
                .map(|(mask, v)| {
                    collect_sparse(
                        builder
                            .act(a, mask, v)
                            .into_iter()
                            .map(|(mask2, v2, c)| (index(mask2, v2, &mask_position), c)),
                    )
                })
                .collect();
            SparseMatrix::from_columns(dim, columns)
        })
        .collect();
    let rep = SuperModuleRep::new(Arc::clone(&g), SuperVectorSpace::new(basis), weights, actions)?;
    Ok(KacModule {
        lambda: lambda.clone(),
        l0,
        rep,
        odd_negative,
        masks,
        mask_position,
    })
}

impl KacModule {
    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    /// gl(m|n) indices of `y_1, …, y_{mn}`.
    pub fn odd_negative(&self) -> &[usize] {
        &self.odd_negative
    }

    /// `(S, v)` of a basis index.
    pub fn decompose(&self, index: usize) -> (u32, usize) {
        let d0 = self.l0.dim();
        (self.masks[index / d0], index % d0)
    }

    /// Basis index of `y_S ⊗ v`.
    pub fn index(&self, mask: u32, v: usize) -> usize {
        self.mask_position[&mask] * self.l0.dim() + v
    }
}

struct Builder<'a> {
    g: &'a LieSuperalgebra,
    m: usize,
    n: usize,
    l0: &'a L0Module,
    odd_negative: &'a [usize],
    g0_position: Vec<usize>,
}

type Terms = Vec<(u32, usize, Scalar)>;

impl Builder<'_> {
    fn slot(&self, a: usize) -> usize {
        self.odd_negative.iter().position(|&y| y == a).expect("odd negative root vector")
    }

    /// `y_s · (y_T ⊗ v)` as `(T ∪ {s}, sign)`, or `None` if `s ∈ T`.
    fn left_multiply(s: usize, mask: u32) -> Option<(u32, Scalar)> {
        if mask & (1 << s) != 0 {
            return None;
        }
        let below = (mask & ((1u32 << s) - 1)).count_ones();
        Some((mask | (1 << s), sign(below % 2 == 1)))
    }

    /// `e_a · (y_S ⊗ v)` by moving `e_a` to the right through `y_S`.
    fn act(&self, a: usize, mask: u32, v: usize) -> Terms {
        let (i, j) = gl_pair(self.m, self.n, a);
        let degree = gl_degree(self.m, i, j);
        if degree == -1 {
            return Self::left_multiply(self.slot(a), mask)
                .map(|(mask2, s)| vec![(mask2, v, s)])
                .unwrap_or_default();
        }
        if mask == 0 {
            return match degree {
                0 => self
                    .l0
                    .rep
                    .action(self.g0_position[a])
                    .column(v)
                    .iter()
                    .map(|(v2, c)| (0, *v2, c.clone()))
                    .collect(),
                _ => Vec::new(),
            };
        }
        // a · (y₁ · rest) = [a, y₁] · rest + (−1)^{|a|} y₁ · (a · rest)
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << first);
        let mut terms = Terms::new();
        for (b, c) in self.g.bracket_basis(a, self.odd_negative[first]) {
            terms.extend(self.act(*b, rest, v).into_iter().map(|(m2, v2, c2)| (m2, v2, c * c2)));
        }
        let s = sign(self.g.parity(a).is_odd());
        for (m2, v2, c2) in self.act(a, rest, v) {
            if let Some((m3, s2)) = Self::left_multiply(first, m2) {
                terms.push((m3, v2, &s * s2 * c2));
            }
        }
        terms.retain(|(_, _, c)| !c.is_zero());
        terms
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::one;
    use crate::modules::{verify_rep, weights_consistent};
    use crate::roots::dim_l0;

    fn w(text: &str) -> Weight {
        Weight::parse(text).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(kac_module(&w("0|0")).unwrap().dim(), 2);
        assert_eq!(kac_module(&w("1,0|0")).unwrap().dim(), 8);
        assert_eq!(kac_module(&w("0,0|0,0")).unwrap().dim(), 16);
    }

    #[test]
    fn kac_modules_are_representations() {
        for text in ["0|0", "1|0", "2|-1", "0,0|0", "1,0|0", "1,-1|2", "0,0|0,0", "1,0|0,-1"] {
            let lambda = w(text);
            let k = kac_module(&lambda).unwrap();
            let (m, n) = lambda.shape();
            assert_eq!(k.dim(), (1 << (m * n)) * dim_l0(&lambda).unwrap());
            let report = verify_rep(&k.rep);
            assert!(report.ok, "{text}: {:?}", report.failures);
            assert!(weights_consistent(&k.rep), "{text}");
            assert_eq!(k.rep.superdimension(), 0, "{text}");
        }
    }

    #[test]
    fn gl11_action_by_hand() {
        // K(0) for gl(1|1): basis v, y·v with y = E21; E12 · y·v = (E11 + E22) v = 0.
        let k = kac_module(&w("0|0")).unwrap();
        let y = gl_index(1, 1, 1, 0);
        let x = gl_index(1, 1, 0, 1);
        assert_eq!(k.rep.action(y).get(1, 0), one());
        assert!(k.rep.action(x).is_zero());
        let k1 = kac_module(&w("1|0")).unwrap();
        assert_eq!(k1.rep.action(x).get(0, 1), one());
    }
}
