//! Simple gl(m) ⊕ gl(n)-modules L₀(λ), cut out of tensor powers of the
//! natural representations.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};

use crate::algebra::{even_part, even_part_indices, gl_pair};
use crate::error::{Error, Result};
use crate::linalg::{int, kernel_basis, IncrementalSpan, Parity, RationalMatrix, Scalar, SpanCoordinates, SparseMatrix, SparseVec, SuperVectorSpace};
use crate::roots::{require_dominant, Weight};

use super::SuperModuleRep;

/// Largest tensor power dimension `k^d` a single factor may use.
pub const DEFAULT_BUDGET: usize = 20000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct L0Options {
    pub budget: usize,
    /// Additional determinant twist: each factor is built inside a tensor
    /// power that is `extra_shift · k` larger than necessary. Different
    /// shifts give different invariant inner products on the same module.
    pub extra_shift: usize,
}

impl Default for L0Options {
    fn default() -> Self {
        L0Options {
            budget: DEFAULT_BUDGET,
            extra_shift: 0,
        }
    }
}

/// L₀(λ) as a g₀-module together with a g₀-contravariant inner product
/// (`⟨E_ab u, w⟩ = ⟨u, E_ba w⟩`). Basis vector 0 is a highest weight vector
/// with `⟨v₀, v₀⟩ = 1`.
#[derive(Clone, Debug)]
pub struct L0Module {
    pub lambda: Weight,
    pub rep: SuperModuleRep,
    pub gram: RationalMatrix,
}

pub fn l0_module(lambda: &Weight) -> Result<L0Module> {
    l0_module_with(lambda, L0Options::default())
}

pub fn l0_module_with(lambda: &Weight, options: L0Options) -> Result<L0Module> {
    require_dominant(lambda)?;
    let (m, n) = lambda.shape();
    let ints = lambda.to_ints().expect("dominant weights are integral");
    let left = Factor::build(&ints[..m], options)?;
    let right = Factor::build(&ints[m..], options)?;

    let (d1, d2) = (left.dim(), right.dim());
    let dim = d1 * d2;
    let mut basis = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    let mut gram = RationalMatrix::zeros(dim, dim);
    for a in 0..d1 {
        for b in 0..d2 {
            basis.push((format!("v{}", a * d2 + b), Parity::Even));
            let coords: Vec<i64> = left.weights[a].iter().chain(&right.weights[b]).copied().collect();
            weights.push(Weight::from_ints(m, n, &coords));
        }
    }
    for a in 0..d1 {
        for a2 in 0..d1 {
            let Some(ga) = left.gram.get(&(a, a2)) else {
                continue;
            };
            for b in 0..d2 {
                for b2 in 0..d2 {
                    if let Some(gb) = right.gram.get(&(b, b2)) {
                        gram.set(a * d2 + b, a2 * d2 + b2, ga * gb);
                    }
                }
            }
        }
    }

    let actions = even_part_indices(m, n)
        .into_iter()
        .map(|idx| {
            let (i, j) = gl_pair(m, n, idx);
            let columns: Vec<SparseVec> = if i < m {
                let op = &left.ops[i * m + j];
                (0..d1)
                    .flat_map(|a| (0..d2).map(move |b| (a, b)))
                    .map(|(a, b)| op.column(a).iter().map(|(a2, c)| (a2 * d2 + b, c.clone())).collect())
                    .collect()
            } else {
                let op = &right.ops[(i - m) * n + (j - m)];
                (0..d1)
                    .flat_map(|a| (0..d2).map(move |b| (a, b)))
                    .map(|(a, b)| op.column(b).iter().map(|(b2, c)| (a * d2 + b2, c.clone())).collect())
                    .collect()
            };
            SparseMatrix::from_columns(dim, columns)
        })
        .collect();

    let rep = SuperModuleRep::new(even_part(m, n), SuperVectorSpace::new(basis), weights, actions)?;
    Ok(L0Module {
        lambda: lambda.clone(),
        rep,
        gram,
    })
}

impl L0Module {
    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn algebra(&self) -> &Arc<crate::algebra::LieSuperalgebra> {
        self.rep.algebra()
    }
}

/// Simple gl(k)-module of highest weight μ: weights, `E_ab` matrices (index
/// `a·k + b`) and the restricted tensor inner product.
struct Factor {
    weights: Vec<Vec<i64>>,
    ops: Vec<SparseMatrix>,
    gram: HashMap<(usize, usize), Scalar>,
}

impl Factor {
    fn build(mu: &[i64], options: L0Options) -> Result<Factor> {
        let k = mu.len();
        let shift = mu[k - 1] - options.extra_shift as i64;
        let partition: Vec<usize> = mu.iter().map(|&x| (x - shift) as usize).collect();
        let d: usize = partition.iter().sum();
        let needed = (k as u128).pow(d as u32);
        if needed > options.budget as u128 {
            return Err(Error::ConstructionOverflow {
                needed: needed.to_usize().unwrap_or(usize::MAX),
                budget: options.budget,
            });
        }
        let tensor = TensorPower::new(k, d);
        let mut factor = tensor.highest_weight_module(&partition)?;
        for a in 0..k {
            let diag = &mut factor.ops[a * k + a];
            for j in 0..diag.ncols() {
                let current = diag.get(j, j);
                diag.set(j, j, current + int(shift));
            }
        }
        for w in &mut factor.weights {
            for x in w.iter_mut() {
                *x += shift;
            }
        }
        Ok(factor)
    }

    fn dim(&self) -> usize {
        self.weights.len()
    }
}

/// `V^{⊗d}` for the natural gl(k)-module `V`, split into weight spaces.
/// A word `w ∈ {0..k−1}^d` is the basis tensor `e_{w₁} ⊗ … ⊗ e_{w_d}`.
struct TensorPower {
    k: usize,
    d: usize,
    /// Words of each weight (content vector), in lexicographic order.
    spaces: BTreeMap<Vec<usize>, Vec<Vec<usize>>>,
    position: HashMap<Vec<usize>, usize>,
}

impl TensorPower {
    fn new(k: usize, d: usize) -> Self {
        let mut spaces: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
        let mut word = vec![0usize; d];
        loop {
            spaces.entry(content(&word, k)).or_default().push(word.clone());
            let Some(t) = (0..d).rev().find(|&t| word[t] + 1 < k) else {
                break;
            };
            word[t] += 1;
            for x in &mut word[t + 1..] {
                *x = 0;
            }
        }
        let mut position = HashMap::new();
        for words in spaces.values() {
            for (p, w) in words.iter().enumerate() {
                position.insert(w.clone(), p);
            }
        }
        TensorPower { k, d, spaces, position }
    }

    /// `E_ab` applied to a vector of weight `content` (dense over that weight space).
    fn apply(&self, a: usize, b: usize, content: &[usize], v: &[Scalar]) -> Option<(Vec<usize>, Vec<Scalar>)> {
        if content[b] == 0 {
            return None;
        }
        let mut target = content.to_vec();
        target[b] -= 1;
        target[a] += 1;
        if a == b {
            return Some((target, v.iter().map(|x| x * int(content[a] as i64)).collect()));
        }
        let words = &self.spaces[content];
        let mut out = vec![Scalar::zero(); self.spaces[&target].len()];
        for (p, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = &words[p];
            for t in 0..self.d {
                if w[t] == b {
                    let mut w2 = w.clone();
                    w2[t] = a;
                    out[self.position[&w2]] += c;
                }
            }
        }
        Some((target, out))
    }

    fn highest_weight_module(&self, partition: &[usize]) -> Result<Factor> {
        let k = self.k;
        let top = partition.to_vec();
        let top_dim = self.spaces[&top].len();
        // Highest weight vectors: kernel of the simple raising operators on the top weight space.
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for a in 0..k.saturating_sub(1) {
            let mut block: Vec<Vec<Scalar>> = Vec::new();
            for p in 0..top_dim {
                let mut unit = vec![Scalar::zero(); top_dim];
                unit[p] = int(1);
                if let Some((_, image)) = self.apply(a, a + 1, &top, &unit) {
                    block.resize(image.len(), vec![Scalar::zero(); top_dim]);
                    for (i, x) in image.into_iter().enumerate() {
                        block[i][p] = x;
                    }
                }
            }
            rows.extend(block);
        }
        let highest = if rows.is_empty() {
            let mut v = vec![Scalar::zero(); top_dim];
            v[0] = int(1);
            v
        } else {
            kernel_basis(&RationalMatrix::from_rows(top_dim, rows))
                .into_iter()
                .next()
                .ok_or_else(|| Error::NotARepresentation("no highest weight vector in the tensor power".into()))?
        };

        // Breadth-first search along lowering operators.
        let mut spans: BTreeMap<Vec<usize>, (IncrementalSpan, Vec<usize>)> = BTreeMap::new();
        let mut vectors: Vec<(Vec<usize>, Vec<Scalar>)> = Vec::new();
        let mut queue = VecDeque::new();
        let mut start = IncrementalSpan::new();
        start.insert(&highest);
        spans.insert(top.clone(), (start, vec![0]));
        vectors.push((top.clone(), highest));
        queue.push_back(0);
        while let Some(idx) = queue.pop_front() {
            for a in 0..k.saturating_sub(1) {
                let (content, v) = &vectors[idx];
                let Some((target, image)) = self.apply(a + 1, a, content, v) else {
                    continue;
                };
                if image.iter().all(Zero::is_zero) {
                    continue;
                }
                let entry = spans.entry(target.clone()).or_insert_with(|| (IncrementalSpan::new(), Vec::new()));
                if entry.0.insert(&image) {
                    entry.1.push(vectors.len());
                    queue.push_back(vectors.len());
                    vectors.push((target, image));
                }
            }
        }

        let coords: BTreeMap<&Vec<usize>, SpanCoordinates> = spans
            .iter()
            .map(|(w, (_, members))| {
                let basis = members.iter().map(|&i| vectors[i].1.clone()).collect();
                (w, SpanCoordinates::new(basis).expect("span members are independent"))
            })
            .collect();
        let global = |w: &Vec<usize>, p: usize| spans[w].1[p];

        let dim = vectors.len();
        let mut ops = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                let columns = vectors
                    .iter()
                    .map(|(content, v)| -> Result<SparseVec> {
                        let Some((target, image)) = self.apply(a, b, content, v) else {
                            return Ok(Vec::new());
                        };
                        if image.iter().all(Zero::is_zero) {
                            return Ok(Vec::new());
                        }
                        let span = coords.get(&target).ok_or(Error::NotInSpan)?;
                        let c = span.coordinates(&image)?;
                        Ok(c.into_iter()
                            .enumerate()
                            .filter(|(_, x)| !x.is_zero())
                            .map(|(p, x)| (global(&target, p), x))
                            .collect())
                    })
                    .collect::<Result<Vec<_>>>()?;
                ops.push(SparseMatrix::from_columns(dim, columns));
            }
        }

        let mut gram = HashMap::new();
        for (_, members) in spans.values() {
            for &i in members {
                for &j in members {
                    let value: Scalar = vectors[i].1.iter().zip(&vectors[j].1).map(|(x, y)| x * y).sum();
                    if !value.is_zero() {
                        gram.insert((i, j), value);
                    }
                }
            }
        }
        let norm = gram[&(0, 0)].clone();
        for value in gram.values_mut() {
            *value /= &norm;
        }
        Ok(Factor {
            weights: vectors.iter().map(|(w, _)| w.iter().map(|&x| x as i64).collect()).collect(),
            ops,
            gram,
        })
    }
}

fn content(word: &[usize], k: usize) -> Vec<usize> {
    let mut c = vec![0; k];
    for &x in word {
        c[x] += 1;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::verify_rep;
    use crate::roots::dim_l0;

    fn w(text: &str) -> Weight {
        Weight::parse(text).unwrap()
    }

    #[test]
    fn small_examples() {
        let triv = l0_module(&w("0,0|0")).unwrap();
        assert_eq!(triv.dim(), 1);
        let nat = l0_module(&w("1,0|0")).unwrap();
        assert_eq!(nat.dim(), 2);
        assert_eq!(nat.rep.weights(), &[w("1,0|0"), w("0,1|0")]);
        assert_eq!(l0_module(&w("1,1|0,0")).unwrap().dim(), 1);
        let sym = l0_module(&w("2,0|0")).unwrap();
        assert_eq!(sym.dim(), 3);
        assert!(verify_rep(&sym.rep).ok);
    }

    #[test]
    fn dimensions_match_weyl() {
        for text in ["2,-1|1,-2", "1,0|3,1", "-2,-2|0,-1", "3,1,0|0", "2,1,-1|1"] {
            let lambda = w(text);
            let l0 = l0_module(&lambda).unwrap();
            assert_eq!(l0.dim(), dim_l0(&lambda).unwrap(), "{text}");
            assert_eq!(l0.rep.weight(0), &lambda);
            assert!(verify_rep(&l0.rep).ok, "{text}");
            assert!(crate::modules::weights_consistent(&l0.rep));
        }
    }

    #[test]
    fn gram_is_contravariant() {
        let l0 = l0_module(&w("2,0|1,-1")).unwrap();
        let g = l0.algebra().clone();
        let gram = &l0.gram;
        assert_eq!(gram.get(0, 0), &int(1));
        let (m, n) = (2, 2);
        for (k, &idx) in even_part_indices(m, n).iter().enumerate() {
            let (i, j) = gl_pair(m, n, idx);
            let t = even_part_indices(m, n)
                .iter()
                .position(|&x| x == crate::algebra::gl_index(m, n, j, i))
                .unwrap();
            let lhs = l0.rep.action(k).to_dense().transpose().mul(gram);
            let rhs = gram.mul(&l0.rep.action(t).to_dense());
            assert_eq!(lhs, rhs, "{}", g.label(k));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let options = L0Options {
            budget: 10,
            extra_shift: 0,
        };
        assert!(matches!(
            l0_module_with(&w("4,0|0"), options),
            Err(Error::ConstructionOverflow { needed: 16, budget: 10 })
        ));
        assert!(matches!(l0_module(&w("0,1|0")), Err(Error::NotDominant(_))));
    }
}
