//! Explicit supermodules: action matrices on a parity-graded, weight-labelled basis.


mod form;
mod kac;
mod l0;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::LieSuperalgebra;
use crate::error::{Error, Result};
use crate::linalg::{scalar_string, sign, Parity, SparseMatrix, SparseVec, SuperVectorSpace};
use crate::roots::Weight;


pub use form::{contravariant_form, simple_module, simple_module_from, simplicity_check, SimpleModule};
pub use kac::{kac_module, kac_module_with, KacModule};
pub use l0::{l0_module, l0_module_with, L0Module, L0Options, DEFAULT_BUDGET};

/// A representation of a Lie superalgebra. Column `j` of `action(a)` is
/// `e_a · v_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperModuleRep {
    algebra: Arc<LieSuperalgebra>,
    space: SuperVectorSpace,
    weights: Vec<Weight>,
    actions: Vec<SparseMatrix>,
}

impl SuperModuleRep {
    /// Assembles a module; only shapes are checked here, see [`verify_rep`].
    pub fn new(
        algebra: Arc<LieSuperalgebra>,
        space: SuperVectorSpace,
        weights: Vec<Weight>,
        actions: Vec<SparseMatrix>,
    ) -> Result<Self> {
        let dim = space.dim();
        if weights.len() != dim {
            return Err(Error::NotARepresentation(format!("{} weights for dimension {dim}", weights.len())));
        }
        if actions.len() != algebra.dim() {
            return Err(Error::NotARepresentation(format!(
                "{} action matrices for an algebra of dimension {}",
                actions.len(),
                algebra.dim()
            )));
        }
        if actions.iter().any(|a| a.nrows() != dim || a.ncols() != dim) {
            return Err(Error::NotARepresentation("action matrix of the wrong size".into()));
        }
        Ok(SuperModuleRep {
            algebra,
            space,
            weights,
            actions,
        })
    }

    /// The one-dimensional even module with zero action.
    pub fn trivial(algebra: Arc<LieSuperalgebra>) -> Self {
        let (m, n) = algebra.shape().expect("trivial module needs a gl shape");
        let actions = vec![SparseMatrix::zeros(1, 1); algebra.dim()];
        SuperModuleRep {
            algebra,
            space: SuperVectorSpace::new(vec![("1".into(), Parity::Even)]),
            weights: vec![Weight::zero(m, n)],
            actions,
        }
    }

    pub fn algebra(&self) -> &Arc<LieSuperalgebra> {
        &self.algebra
    }

    pub fn space(&self) -> &SuperVectorSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn label(&self, i: usize) -> &str {
        self.space.label(i)
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }

    pub fn action(&self, a: usize) -> &SparseMatrix {
        &self.actions[a]
    }

    pub fn actions(&self) -> &[SparseMatrix] {
        &self.actions
    }

    /// `dim M₀ − dim M₁`.
    pub fn superdimension(&self) -> i64 {
        self.space.superdimension()
    }

    /// Action matrix of an arbitrary element `Σ c_a e_a`.
    pub fn act_element(&self, x: &SparseVec) -> SparseMatrix {
        x.iter().fold(SparseMatrix::zeros(self.dim(), self.dim()), |acc, (a, c)| {
            acc.add_scaled(&self.actions[*a], c)
        })
    }

    /// Replaces one action matrix; meant for building deliberately broken
    /// modules in tests.
    pub fn with_action(mut self, a: usize, matrix: SparseMatrix) -> Self {
        assert_eq!((matrix.nrows(), matrix.ncols()), (self.dim(), self.dim()));
        self.actions[a] = matrix;
        self
    }

    fn same_algebra(&self, other: &SuperModuleRep) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }
}

impl fmt::Debug for SuperModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SuperModuleRep")
            .field("algebra", &self.algebra.name())
            .field("dim", &self.dim())
            .field("superdimension", &self.superdimension())
            .finish()
    }
}

/// Outcome of [`verify_rep`], with one line per failing check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepReport {
    pub ok: bool,
    pub failures: Vec<String>,
}

/// Checks parity compatibility of every action matrix and
/// `ρ([a,b]) = ρ(a)ρ(b) − (−1)^{|a||b|}ρ(b)ρ(a)` for every basis pair. Pairs
/// with `a > b` follow from `(b, a)` by super-antisymmetry of the bracket,
/// which the algebra verified when it was built.
pub fn verify_rep(module: &SuperModuleRep) -> RepReport {
    let g = &module.algebra;
    let mut failures = Vec::new();
    for a in 0..g.dim() {
        let pa = g.parity(a);
        if let Some((i, j, _)) = module.actions[a]
            .entries()
            .find(|(i, j, _)| module.parity(*i) != module.parity(*j) + pa)
        {
            failures.push(format!("parity: {} maps basis {} to basis {}", g.label(a), j, i));
        }
    }
    for a in 0..g.dim() {
        for b in a..g.dim() {
            let s = sign(g.parity(a).koszul(g.parity(b)));
            let ab = module.actions[a].mul(&module.actions[b]);
            let ba = module.actions[b].mul(&module.actions[a]);
            let commutator = ab.add_scaled(&ba, &-s);
            let bracket = module.act_element(g.bracket_basis(a, b));
            if commutator != bracket {
                failures.push(format!("bracket: ({}, {})", g.label(a), g.label(b)));
            }
        }
    }
    RepReport {
        ok: failures.is_empty(),
        failures,
    }
}

/// Every action entry moves weights by the weight of the algebra element.
pub fn weights_consistent(module: &SuperModuleRep) -> bool {
    let g = &module.algebra;
    (0..g.dim()).all(|a| match g.weight(a) {
        None => true,
        Some(wa) => module.actions[a]
            .entries()
            .all(|(i, j, _)| module.weights[i] == &module.weights[j] + wa),
    })
}

/// `a(u⊗w) = au⊗w + (−1)^{|a||u|} u⊗aw`; basis `u_i ⊗ w_k` at index `i·dim N + k`.
pub fn tensor(left: &SuperModuleRep, right: &SuperModuleRep) -> Result<SuperModuleRep> {
    left.same_algebra(right)?;
    let (dl, dr) = (left.dim(), right.dim());
    let mut basis = Vec::with_capacity(dl * dr);
    let mut weights = Vec::with_capacity(dl * dr);
    for i in 0..dl {
        for k in 0..dr {
            basis.push((format!("{}⊗{}", left.label(i), right.label(k)), left.parity(i) + right.parity(k)));
            weights.push(left.weight(i) + right.weight(k));
        }
    }
    let g = &left.algebra;
    let actions = (0..g.dim())
        .map(|a| {
            let pa = g.parity(a);
            let columns = (0..dl)
                .flat_map(|i| (0..dr).map(move |k| (i, k)))
                .map(|(i, k)| {
                    let s = sign(pa.koszul(left.parity(i)));
                    left.actions[a]
                        .column(i)
                        .iter()
                        .map(|(i2, c)| (i2 * dr + k, c.clone()))
                        .chain(right.actions[a].column(k).iter().map(|(k2, c)| (i * dr + k2, &s * c)))
                        .collect()
                })
                .collect();
            SparseMatrix::from_columns(dl * dr, columns)
        })
        .collect();
    SuperModuleRep::new(Arc::clone(g), SuperVectorSpace::new(basis), weights, actions)
}

/// Dual with `(a·f)(u) = −(−1)^{|a||f|} f(a·u)`; basis is the dual basis.
pub fn dual(module: &SuperModuleRep) -> SuperModuleRep {
    let g = &module.algebra;
    let basis = module
        .space
        .basis()
        .iter()
        .map(|(label, p)| (format!("{label}*"), *p))
        .collect();
    let weights = module.weights.iter().map(|w| -w).collect();
    let actions = module
        .actions
        .iter()
        .enumerate()
        .map(|(a, action)| {
            let pa = g.parity(a);
            let mut out = SparseMatrix::zeros(module.dim(), module.dim());
            for (j, i, c) in action.entries() {
                // (A*)_{ij} = −(−1)^{|a||j|} A_{ji}
                out.set(i, j, -sign(pa.koszul(module.parity(j))) * c);
            }
            out
        })
        .collect();
    SuperModuleRep {
        algebra: Arc::clone(g),
        space: SuperVectorSpace::new(basis),
        weights,
        actions,
    }
}

/// Π M: parities flipped and `a` acting by `(−1)^{|a|} ρ(a)`.
pub fn parity_shift(module: &SuperModuleRep) -> SuperModuleRep {
    let g = &module.algebra;
    let basis = module
        .space
        .basis()
        .iter()
        .map(|(label, p)| (format!("Π{label}"), p.flip()))
        .collect();
    let actions = module
        .actions
        .iter()
        .enumerate()
        .map(|(a, action)| {
            if g.parity(a).is_odd() {
                action.scale(&sign(true))
            } else {
                action.clone()
            }
        })
        .collect();
    SuperModuleRep {
        algebra: Arc::clone(g),
        space: SuperVectorSpace::new(basis),
        weights: module.weights.clone(),
        actions,
    }
}

/// `M ⊕ N` with the basis of `M` first.
pub fn direct_sum(left: &SuperModuleRep, right: &SuperModuleRep) -> Result<SuperModuleRep> {
    left.same_algebra(right)?;
    let dl = left.dim();
    let basis = left.space.basis().iter().chain(right.space.basis()).cloned().collect();
    let weights = left.weights.iter().chain(&right.weights).cloned().collect();
    let actions = left
        .actions
        .iter()
        .zip(&right.actions)
        .map(|(x, y)| {
            let columns = (0..dl)
                .map(|j| x.column(j).clone())
                .chain((0..y.ncols()).map(|j| y.column(j).iter().map(|(i, c)| (i + dl, c.clone())).collect()))
                .collect();
            SparseMatrix::from_columns(dl + right.dim(), columns)
        })
        .collect();
    SuperModuleRep::new(Arc::clone(&left.algebra), SuperVectorSpace::new(basis), weights, actions)
}

pub fn superdimension(module: &SuperModuleRep) -> i64 {
    module.superdimension()
}

/// Machine-readable dump: basis, parities, weights and dense action
/// matrices with `p/q` entries.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleDump {
    pub algebra: String,
    pub dim: usize,
    pub superdimension: i64,
    pub basis: Vec<DumpBasisVector>,
    pub actions: Vec<DumpAction>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DumpBasisVector {
    pub label: String,
    pub parity: Parity,
    pub weight: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DumpAction {
    pub element: String,
    pub matrix: Vec<Vec<String>>,
}

pub fn dump(module: &SuperModuleRep) -> ModuleDump {
    let g = &module.algebra;
    ModuleDump {
        algebra: g.name().to_string(),
        dim: module.dim(),
        superdimension: module.superdimension(),
        basis: (0..module.dim())
            .map(|i| DumpBasisVector {
                label: module.label(i).to_string(),
                parity: module.parity(i),
                weight: module.weight(i).to_string(),
            })
            .collect(),
        actions: (0..g.dim())
            .map(|a| {
                let dense = module.actions[a].to_dense();
                DumpAction {
                    element: g.label(a).to_string(),
                    matrix: dense.rows_iter().map(|row| row.iter().map(scalar_string).collect()).collect(),
                }
            })
            .collect(),
    }
}

/// Number of nonzero entries over all action matrices.
pub fn action_nnz(module: &SuperModuleRep) -> usize {
    module.actions.iter().map(SparseMatrix::nnz).sum()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gl_superalgebra;
    use crate::linalg::int;

    #[test]
    fn trivial_module_is_a_rep() {
        let g = gl_superalgebra(1, 1);
        let triv = SuperModuleRep::trivial(g);
        assert!(verify_rep(&triv).ok);
        let d = dual(&triv);
        assert_eq!(d.actions(), triv.actions());
        assert_eq!(d.weights(), triv.weights());
        assert_eq!(d.superdimension(), 1);
        assert_eq!(superdimension(&parity_shift(&triv)), -1);
    }

    #[test]
    fn perturbed_action_is_rejected() {
        let g = gl_superalgebra(1, 1);
        let triv = SuperModuleRep::trivial(g);
        let mut bad = SparseMatrix::zeros(1, 1);
        bad.set(0, 0, int(1));
        let broken = triv.with_action(0, bad);
        let report = verify_rep(&broken);
        assert!(!report.ok);
        assert!(!report.failures.is_empty());
    }
}
