//! Contravariant form on K(λ) and the simple quotient L(λ) = K(λ)/rad.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{gl_index, supertranspose};
use crate::error::{Error, Result};
use crate::linalg::{collect_sparse, pivot_columns, rank, sign, RationalMatrix, Scalar, SparseMatrix, SparseVec, SuperVectorSpace};
use crate::roots::Weight;

use super::{kac_module, KacModule, SuperModuleRep};

/// The form split into weight blocks; `indices` lists the K(λ) basis
/// vectors of the block in increasing order.
struct FormBlocks {
    blocks: BTreeMap<Weight, (Vec<usize>, RationalMatrix)>,
    dim: usize,
}

impl FormBlocks {
    fn to_sparse(&self) -> SparseMatrix {
        let mut columns: Vec<SparseVec> = vec![Vec::new(); self.dim];
        for (indices, block) in self.blocks.values() {
            for (q, &j) in indices.iter().enumerate() {
                columns[j] = indices
                    .iter()
                    .enumerate()
                    .filter(|(p, _)| !block.get(*p, q).is_zero())
                    .map(|(p, &i)| (i, block.get(p, q).clone()))
                    .collect();
            }
        }
        SparseMatrix::from_columns(self.dim, columns)
    }
}

/// Gram matrix of the contravariant form on K(λ) in its PBW basis.
///
/// The form is normalized by the inner product of L₀(λ) on the top layer,
/// satisfies `⟨a·u, u'⟩ = (−1)^{|a||u|}⟨u, st(a)·u'⟩` for the supertranspose
/// `st`, and is block diagonal by weight. Both properties and symmetry are
/// verified; a failure is reported as `FormInconsistent`.
pub fn contravariant_form(kac: &KacModule) -> Result<RationalMatrix> {
    Ok(form_blocks(kac)?.to_sparse().to_dense())
}

fn form_blocks(kac: &KacModule) -> Result<FormBlocks> {
    let (m, n) = kac.lambda.shape();
    let rep = &kac.rep;
    let mut by_weight: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for i in 0..rep.dim() {
        by_weight.entry(rep.weight(i).clone()).or_default().push(i);
    }
    // st(y_s) = E_ij for y_s = E_ji.
    let raise: Vec<usize> = kac
        .odd_negative()
        .iter()
        .map(|&y| supertranspose(m, n, y))
        .map(|(x, s)| {
            debug_assert!(s == Scalar::from_integer(1.into()));
            x
        })
        .collect();

    let mut blocks = BTreeMap::new();
    for (weight, indices) in by_weight {
        let size = indices.len();
        let mut block = RationalMatrix::zeros(size, size);
        for (q, &col) in indices.iter().enumerate() {
            // Z_S u' for each S occurring in the block, then pair with v on the top layer.
            let mut cache: BTreeMap<u32, SparseVec> = BTreeMap::new();
            for (p, &row) in indices.iter().enumerate() {
                let (mask, v) = kac.decompose(row);
                let top = cache.entry(mask).or_insert_with(|| {
                    let mut w: SparseVec = vec![(col, Scalar::from_integer(1.into()))];
                    for s in 0..m * n {
                        if mask & (1 << s) != 0 {
                            w = rep.action(raise[s]).apply(&w);
                        }
                    }
                    w
                });
                let l = mask.count_ones() as usize;
                let mut value = Scalar::zero();
                for (i, c) in top.iter() {
                    let (mask2, v2) = kac.decompose(*i);
                    if mask2 == 0 {
                        value += kac.l0.gram.get(v, v2) * c;
                    }
                }
                if !value.is_zero() {
                    block.set(p, q, sign((l * l.saturating_sub(1) / 2) % 2 == 1) * value);
                }
            }
        }
        blocks.insert(weight, (indices, block));
    }
    let form = FormBlocks { blocks, dim: rep.dim() };
    verify_form(kac, &form)?;
    Ok(form)
}

fn verify_form(kac: &KacModule, form: &FormBlocks) -> Result<()> {
    let (m, n) = kac.lambda.shape();
    let rep = &kac.rep;
    let g = rep.algebra();
    let gram = form.to_sparse();
    if gram != gram.transpose() {
        return Err(Error::FormInconsistent("the form is not symmetric".into()));
    }
    let top = kac.index(0, 0);
    if gram.get(top, top) != Scalar::from_integer(1.into()) {
        return Err(Error::FormInconsistent("highest weight vector is not normalized".into()));
    }
    for a in 0..g.dim() {
        let odd = g.parity(a).is_odd();
        let (b, s) = supertranspose(m, n, a);
        let lhs = rep.action(a).transpose().mul(&gram);
        let rhs_unsigned = gram.mul(rep.action(b)).scale(&s);
        let columns: Vec<SparseVec> = (0..rhs_unsigned.ncols())
            .map(|j| {
                collect_sparse(
                    rhs_unsigned
                        .column(j)
                        .iter()
                        .map(|(i, c)| (*i, sign(odd && rep.parity(*i).is_odd()) * c)),
                )
            })
            .collect();
        let rhs = SparseMatrix::from_columns(rep.dim(), columns);
        if lhs != rhs {
            return Err(Error::FormInconsistent(format!("adjointness fails for {}", g.label(a))));
        }
    }
    Ok(())
}

/// L(λ) as the quotient of K(λ) by the radical of its contravariant form.
#[derive(Clone, Debug)]
pub struct SimpleModule {
    pub lambda: Weight,
    pub rep: SuperModuleRep,
    /// K(λ) basis vectors whose classes form the basis of L(λ).
    pub kac_basis: Vec<usize>,
    pub kac_dim: usize,
}

impl SimpleModule {
    pub fn dim(&self) -> usize {
        self.rep.dim()
    }
}

pub fn simple_module(lambda: &Weight) -> Result<SimpleModule> {
    simple_module_from(&kac_module(lambda)?)
}

/// Quotient of a Kac module by the radical of its form. In each weight block
/// a maximal independent set `J` of columns of the Gram block `G` is kept;
/// `G[J,J]` is invertible, and a vector `x` of the block has coordinates
/// `G[J,J]⁻¹ G[J,:] x` in the quotient.
pub fn simple_module_from(kac: &KacModule) -> Result<SimpleModule> {
    let form = form_blocks(kac)?;
    let rep = &kac.rep;

    struct Projection {
        keep: Vec<usize>,
        local: Vec<usize>,
        matrix: RationalMatrix,
    }
    let mut kept: Vec<usize> = Vec::new();
    let mut projections: BTreeMap<&Weight, Projection> = BTreeMap::new();
    for (weight, (indices, block)) in &form.blocks {
        let keep = pivot_columns(block);
        let square = RationalMatrix::from_rows(
            keep.len(),
            keep.iter().map(|&p| keep.iter().map(|&q| block.get(p, q).clone()).collect()).collect(),
        );
        let inverse = square
            .inverse()
            .ok_or_else(|| Error::FormInconsistent(format!("principal block at weight {weight} is singular")))?;
        let rows = RationalMatrix::from_rows(indices.len(), keep.iter().map(|&p| block.row(p).to_vec()).collect());
        let matrix = inverse.mul(&rows);
        let mut local = vec![usize::MAX; form.dim];
        for (p, &i) in indices.iter().enumerate() {
            local[i] = p;
        }
        kept.extend(keep.iter().map(|&p| indices[p]));
        projections.insert(
            weight,
            Projection {
                keep: keep.iter().map(|&p| indices[p]).collect(),
                local,
                matrix,
            },
        );
    }
    kept.sort_unstable();
    let mut position = vec![usize::MAX; form.dim];
    for (k, &i) in kept.iter().enumerate() {
        position[i] = k;
    }

    let g = rep.algebra();
    let actions = (0..g.dim())
        .map(|a| {
            let columns = kept
                .iter()
                .map(|&j| {
                    let image = rep.action(a).column(j);
                    let Some((first, _)) = image.first() else {
                        return Vec::new();
                    };
                    let proj = &projections[rep.weight(*first)];
                    let mut out = Vec::new();
                    for (r, target) in proj.keep.iter().enumerate() {
                        let mut value = Scalar::zero();
                        for (i, c) in image {
                            let coeff = proj.matrix.get(r, proj.local[*i]);
                            if !coeff.is_zero() {
                                value += coeff * c;
                            }
                        }
                        if !value.is_zero() {
                            out.push((position[*target], value));
                        }
                    }
                    out
                })
                .collect();
            SparseMatrix::from_columns(kept.len(), columns)
        })
        .collect();
    let space = SuperVectorSpace::new(kept.iter().map(|&i| (rep.label(i).to_string(), rep.parity(i))).collect());
    let weights = kept.iter().map(|&i| rep.weight(i).clone()).collect();
    Ok(SimpleModule {
        lambda: kac.lambda.clone(),
        rep: SuperModuleRep::new(Arc::clone(g), space, weights, actions)?,
        kac_basis: kept,
        kac_dim: form.dim,
    })
}

/// Highest-weight sanity check for a gl(m|n)-module claimed to be L(λ): the
/// λ-weight space is a line and no vector of any other weight is killed by
/// every raising operator `E_ij` (`i < j`).
pub fn simplicity_check(module: &SuperModuleRep, lambda: &Weight) -> bool {
    let (m, n) = lambda.shape();
    let size = m + n;
    let raising: Vec<usize> = (0..size)
        .flat_map(|i| (i + 1..size).map(move |j| gl_index(m, n, i, j)))
        .collect();
    let mut by_weight: BTreeMap<&Weight, Vec<usize>> = BTreeMap::new();
    for i in 0..module.dim() {
        by_weight.entry(module.weight(i)).or_default().push(i);
    }
    if by_weight.get(lambda).map(Vec::len) != Some(1) {
        return false;
    }
    let all_rows: Vec<usize> = (0..module.dim()).collect();
    by_weight.iter().filter(|(w, _)| **w != lambda).all(|(_, cols)| {
        let stacked: Vec<Vec<Scalar>> = raising
            .iter()
            .flat_map(|&e| {
                let block = module.action(e).restrict(&all_rows, cols).to_dense();
                block.rows_iter().map(<[Scalar]>::to_vec).collect::<Vec<_>>()
            })
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .collect();
        !stacked.is_empty() && rank(&RationalMatrix::from_rows(cols.len(), stacked)) == cols.len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use crate::modules::{kac_module_with, verify_rep, L0Options};

    fn w(text: &str) -> Weight {
        Weight::parse(text).unwrap()
    }

    #[test]
    fn gl11_form_values() {
        let k0 = kac_module(&w("0|0")).unwrap();
        let g0 = contravariant_form(&k0).unwrap();
        assert_eq!(g0.get(0, 0), &int(1));
        assert_eq!(g0.get(1, 1), &int(0));
        let k1 = kac_module(&w("1|0")).unwrap();
        let g1 = contravariant_form(&k1).unwrap();
        assert_eq!(g1.get(1, 1), &int(1));
    }

    #[test]
    fn simple_dimensions() {
        assert_eq!(simple_module(&w("0|0")).unwrap().dim(), 1);
        assert_eq!(simple_module(&w("1|0")).unwrap().dim(), 2);
        assert_eq!(simple_module(&w("0,0|0,0")).unwrap().dim(), 1);
        // gl(2|1): L(0) is trivial, L(1,0|0) is the natural module (dim 3).
        assert_eq!(simple_module(&w("0,0|0")).unwrap().dim(), 1);
        assert_eq!(simple_module(&w("1,0|0")).unwrap().dim(), 3);
    }

    #[test]
    fn simples_are_simple_representations() {
        for text in ["0|0", "1|0", "2|-1", "0,0|0", "1,0|0", "1,1|-2", "0,0|0,0", "1,0|0,-1", "1,0|0,-2"] {
            let lambda = w(text);
            let l = simple_module(&lambda).unwrap();
            assert!(verify_rep(&l.rep).ok, "{text}");
            assert!(simplicity_check(&l.rep, &lambda), "{text}");
        }
    }

    #[test]
    fn kac_module_of_atypical_weight_is_not_simple() {
        let k = kac_module(&w("0|0")).unwrap();
        assert!(!simplicity_check(&k.rep, &w("0|0")));
    }

    #[test]
    fn radical_does_not_depend_on_the_inner_product() {
        for text in ["1,0|0", "2,0|1", "1,-1|0", "0,0|0"] {
            let lambda = w(text);
            let plain = simple_module(&lambda).unwrap();
            let shifted_kac = kac_module_with(
                &lambda,
                L0Options {
                    extra_shift: 1,
                    ..L0Options::default()
                },
            )
            .unwrap();
            let shifted = simple_module_from(&shifted_kac).unwrap();
            assert_eq!(plain.dim(), shifted.dim(), "{text}");
            let mut a = plain.rep.weights().to_vec();
            let mut b = shifted.rep.weights().to_vec();
            a.sort();
            b.sort();
            assert_eq!(a, b, "{text}");
        }
    }
}
