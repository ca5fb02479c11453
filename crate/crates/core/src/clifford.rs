//! Blocks of Clifford superalgebras attached to a character χ of `c₀ = [c₁, c₁]`,
//! and the 2-divisibility laws for dimensions of modules with small support.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{gl_index, LieSuperalgebra};
use crate::atypicality::{atypicality, defect};
use crate::error::{Error, Result};
use crate::linalg::{dot, rank, RationalMatrix, Scalar, SpanCoordinates, SparseVec};
use crate::modules::{simple_module, SuperModuleRep};
use crate::roots::Weight;
use crate::support::{empirical_support, DEFAULT_SAMPLES, DEFAULT_SEED};

/// The symmetric form `(x, y) = χ([x, y])` on `c₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddFormData {
    pub dim_c1: usize,
    pub gram: RationalMatrix,
    /// Radical dimension.
    pub z: usize,
    pub n: usize,
    pub n_tilde: usize,
}

impl OddFormData {
    pub fn from_gram(gram: RationalMatrix) -> Result<Self> {
        if gram.nrows() != gram.ncols() || !gram.is_symmetric() {
            return Err(Error::AssumptionViolated("Gram matrix is not symmetric".into()));
        }
        let dim_c1 = gram.nrows();
        let n = rank(&gram);
        Ok(OddFormData {
            dim_c1,
            gram,
            z: dim_c1 - n,
            n,
            n_tilde: n.div_ceil(2),
        })
    }

    /// Diagonal form with `n` nonzero entries and `z` zero entries.
    pub fn diagonal(n: usize, z: usize) -> Self {
        let mut gram = RationalMatrix::zeros(n + z, n + z);
        for i in 0..n {
            gram.set(i, i, Scalar::one());
        }
        OddFormData::from_gram(gram).expect("diagonal matrices are symmetric")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SimpleType {
    M,
    Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockClassification {
    pub simple_dim: u64,
    pub simple_type: SimpleType,
    pub projective_dim: u64,
    /// Whether the simple module has superdimension zero.
    pub superdim_zero: bool,
}

pub fn classify_block(form: &OddFormData) -> BlockClassification {
    let simple_type = if form.n.is_multiple_of(2) { SimpleType::M } else { SimpleType::Q };
    let exponent = form.dim_c1 - form.n_tilde + usize::from(simple_type == SimpleType::Q);
    BlockClassification {
        simple_dim: 1 << form.n_tilde,
        simple_type,
        projective_dim: 1 << exponent,
        superdim_zero: form.n > 0,
    }
}

/// The subalgebra `c = c₀ ⊕ c₁` generated by odd elements, with a fixed
/// basis of `c₀` taken from the independent brackets `[x_i, x_j]`, `i ≤ j`.
#[derive(Clone, Debug)]
pub struct CliffordSubalgebra {
    pub odd: Vec<SparseVec>,
    pub even_basis: Vec<SparseVec>,
    /// `[x_i, x_j]` in coordinates of `even_basis`.
    brackets: Vec<Vec<Vec<Scalar>>>,
}

fn dense(v: &SparseVec, dim: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); dim];
    for (i, c) in v {
        out[*i] += c;
    }
    out
}

fn describe(g: &LieSuperalgebra, v: &SparseVec) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter()
        .map(|(i, c)| format!("{c}·{}", g.label(*i)))
        .collect::<Vec<_>>()
        .join(" + ")
}

impl CliffordSubalgebra {
    /// Verifies that `c₀ = [c₁, c₁]` is abelian and `[c₀, c₁] = 0`.
    pub fn new(g: &LieSuperalgebra, odd: &[SparseVec]) -> Result<Self> {
        for x in odd {
            if x.iter().any(|(a, _)| !g.parity(*a).is_odd()) {
                return Err(Error::AssumptionViolated(format!("{} is not odd", describe(g, x))));
            }
        }
        let k = odd.len();
        let mut raw = vec![vec![Vec::new(); k]; k];
        let mut even_basis = Vec::new();
        let mut dense_basis: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..k {
            for j in i..k {
                let b = g.bracket(&odd[i], &odd[j]);
                let d = dense(&b, g.dim());
                let mut trial = dense_basis.clone();
                trial.push(d.clone());
                if SpanCoordinates::new(trial).is_some() {
                    dense_basis.push(d);
                    even_basis.push(b.clone());
                }
                raw[i][j] = b.clone();
                raw[j][i] = b;
            }
        }
        for (a, c) in even_basis.iter().enumerate() {
            for c2 in &even_basis[a..] {
                let b = g.bracket(c, c2);
                if !b.is_empty() {
                    return Err(Error::AssumptionViolated(format!(
                        "[{}, {}] = {} ≠ 0",
                        describe(g, c),
                        describe(g, c2),
                        describe(g, &b)
                    )));
                }
            }
            for x in odd {
                let b = g.bracket(c, x);
                if !b.is_empty() {
                    return Err(Error::AssumptionViolated(format!(
                        "[{}, {}] = {} ≠ 0",
                        describe(g, c),
                        describe(g, x),
                        describe(g, &b)
                    )));
                }
            }
        }
        let coords = SpanCoordinates::new(dense_basis).expect("independent by construction");
        let brackets = raw
            .iter()
            .map(|row| row.iter().map(|b| coords.coordinates(&dense(b, g.dim()))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(CliffordSubalgebra {
            odd: odd.to_vec(),
            even_basis,
            brackets,
        })
    }

    pub fn dim_c0(&self) -> usize {
        self.even_basis.len()
    }

    /// Gram matrix of `(x_i, x_j) = χ([x_i, x_j])`, with χ given by its values
    /// on `even_basis`.
    pub fn form(&self, chi: &[Scalar]) -> Result<OddFormData> {
        if chi.len() != self.dim_c0() {
            return Err(Error::AssumptionViolated(format!(
                "χ has {} values but c₀ has dimension {}",
                chi.len(),
                self.dim_c0()
            )));
        }
        let k = self.odd.len();
        let rows = (0..k).map(|i| (0..k).map(|j| dot(&self.brackets[i][j], chi)).collect()).collect();
        OddFormData::from_gram(RationalMatrix::from_rows(k, rows))
    }

    /// Values on `even_basis` of the character of `c₀` given by evaluating a
    /// gl(m|n) weight on diagonal matrices.
    pub fn character_from_weight(&self, lambda: &Weight) -> Result<Vec<Scalar>> {
        let (m, n) = lambda.shape();
        self.even_basis
            .iter()
            .map(|c| {
                let mut value = Scalar::zero();
                for (a, coeff) in c {
                    let i = (0..m + n).find(|&i| gl_index(m, n, i, i) == *a).ok_or_else(|| {
                        Error::Unsupported("c₀ is not contained in the diagonal Cartan subalgebra".into())
                    })?;
                    value += coeff * lambda.coord(i);
                }
                Ok(value)
            })
            .collect()
    }
}

/// `(x, y) = χ([x, y])` on the span of `xs`, with χ given on the `c₀` basis
/// chosen by [`CliffordSubalgebra::new`].
pub fn form_from_subalgebra(g: &LieSuperalgebra, xs: &[SparseVec], chi: &[Scalar]) -> Result<OddFormData> {
    CliffordSubalgebra::new(g, xs)?.form(chi)
}

/// As [`form_from_subalgebra`] with χ the restriction of a weight.
pub fn form_from_weight(g: &LieSuperalgebra, xs: &[SparseVec], lambda: &Weight) -> Result<OddFormData> {
    let c = CliffordSubalgebra::new(g, xs)?;
    let chi = c.character_from_weight(lambda)?;
    c.form(&chi)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub dim: usize,
    pub superdimension: i64,
    pub support_dim: usize,
    pub ambient_support_dim: usize,
    pub codimension: usize,
    /// `2^{⌊d/2⌋}`.
    pub divisor: u64,
    pub divides: bool,
    pub superdimension_ok: bool,
    pub pass: bool,
}

pub fn divisibility_check(
    dim: usize,
    superdimension: i64,
    support_dim: usize,
    ambient_support_dim: usize,
) -> Result<DivisibilityReport> {
    if support_dim > ambient_support_dim {
        return Err(Error::BadCodimension {
            support: support_dim,
            ambient: ambient_support_dim,
        });
    }
    let d = ambient_support_dim - support_dim;
    let divisor = 1u64 << (d / 2);
    let divides = (dim as u64).is_multiple_of(divisor);
    let superdimension_ok = d == 0 || superdimension == 0;
    Ok(DivisibilityReport {
        dim,
        superdimension,
        support_dim,
        ambient_support_dim,
        codimension: d,
        divisor,
        divides,
        superdimension_ok,
        pass: divides && superdimension_ok,
    })
}

/// Divisibility with the support dimension read off the empirical support
/// over the detecting subalgebra.
pub fn module_divisibility(module: &SuperModuleRep, samples_per_subset: usize, seed: u64) -> Result<DivisibilityReport> {
    let support = empirical_support(module, samples_per_subset, seed)?;
    divisibility_check(module.dim(), module.superdimension(), support.dim(), support.support.r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleDivisibility {
    pub lambda: String,
    pub defect: usize,
    pub atypicality: usize,
    pub report: DivisibilityReport,
}

/// Divisibility for L(λ) with codimension `defect − atypicality`.
pub fn simple_divisibility(lambda: &Weight) -> Result<SimpleDivisibility> {
    let (m, n) = lambda.shape();
    let a = atypicality(lambda).value;
    let r = defect(m, n);
    let simple = simple_module(lambda)?;
    Ok(SimpleDivisibility {
        lambda: lambda.to_string(),
        defect: r,
        atypicality: a,
        report: divisibility_check(simple.dim(), simple.rep.superdimension(), a, r)?,
    })
}

/// Default-sampled variant of [`module_divisibility`].
pub fn module_divisibility_default(module: &SuperModuleRep) -> Result<DivisibilityReport> {
    module_divisibility(module, DEFAULT_SAMPLES, DEFAULT_SEED)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{detecting_subalgebra, gl_superalgebra};
    use crate::linalg::int;

    fn w(text: &str) -> Weight {
        Weight::parse(text).unwrap()
    }

    #[test]
    fn classification_examples() {
        let c = classify_block(&OddFormData::diagonal(0, 3));
        assert_eq!((c.simple_dim, c.simple_type, c.projective_dim), (1, SimpleType::M, 8));
        let form = OddFormData::from_gram(RationalMatrix::from_i64(&[&[2]])).unwrap();
        assert_eq!((form.z, form.n, form.n_tilde), (0, 1, 1));
        let c = classify_block(&form);
        assert_eq!((c.simple_dim, c.simple_type, c.projective_dim), (2, SimpleType::Q, 2));
        let c = classify_block(&OddFormData::diagonal(2, 0));
        assert_eq!((c.simple_dim, c.simple_type, c.projective_dim), (2, SimpleType::M, 2));
    }

    #[test]
    fn asymmetric_gram_rejected() {
        let gram = RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(matches!(OddFormData::from_gram(gram), Err(Error::AssumptionViolated(_))));
    }

    #[test]
    fn forms_from_detecting_generators() {
        let g = gl_superalgebra(1, 1);
        let e = detecting_subalgebra(1, 1);
        let xs = e.odd_basis().to_vec();
        let form = form_from_weight(&g, &xs, &w("0|0")).unwrap();
        assert_eq!((form.z, form.n), (1, 0));
        let form = form_from_weight(&g, &xs, &w("1|0")).unwrap();
        assert_eq!(form.gram, RationalMatrix::from_i64(&[&[2]]));
        assert_eq!(form.n, 1);

        let g = gl_superalgebra(2, 2);
        let e = detecting_subalgebra(2, 2);
        let form = form_from_weight(&g, e.odd_basis(), &w("0,0|0,0")).unwrap();
        assert_eq!((form.z, form.n), (2, 0));
        let c = CliffordSubalgebra::new(&g, e.odd_basis()).unwrap();
        assert_eq!(c.dim_c0(), 2);
        assert!(form_from_subalgebra(&g, e.odd_basis(), &[int(1)]).is_err());
    }

    #[test]
    fn non_abelian_subalgebra_rejected() {
        let g = gl_superalgebra(1, 1);
        let xs = vec![vec![(gl_index(1, 1, 0, 1), int(1))], vec![(gl_index(1, 1, 1, 0), int(1))]];
        // c₀ = span(E11 + E22) is central.
        assert!(CliffordSubalgebra::new(&g, &xs).is_ok());
        // c₀ contains [E13, E32] = E12 and [E13, E31] = E11 + E33, which do not commute.
        let g = gl_superalgebra(2, 1);
        let xs = vec![
            vec![(gl_index(2, 1, 0, 2), int(1))],
            vec![(gl_index(2, 1, 2, 1), int(1))],
            vec![(gl_index(2, 1, 2, 0), int(1))],
        ];
        assert!(matches!(CliffordSubalgebra::new(&g, &xs), Err(Error::AssumptionViolated(_))));
    }

    #[test]
    fn divisibility_examples() {
        assert!(divisibility_check(2, 0, 0, 1).unwrap().pass);
        assert!(divisibility_check(16, 0, 0, 2).unwrap().pass);
        let r = divisibility_check(3, 3, 0, 2).unwrap();
        assert!(!r.divides && !r.superdimension_ok && !r.pass);
        assert_eq!(
            divisibility_check(1, 1, 3, 2),
            Err(Error::BadCodimension { support: 3, ambient: 2 })
        );
    }

    #[test]
    fn simple_divisibility_examples() {
        let s = simple_divisibility(&w("1|0")).unwrap();
        assert_eq!((s.defect, s.atypicality, s.report.dim), (1, 0, 2));
        assert!(s.report.pass);
        let s = simple_divisibility(&w("0|0")).unwrap();
        assert!(s.report.pass && s.report.codimension == 0);
        let s = simple_divisibility(&w("0,0|0,0")).unwrap();
        assert_eq!(s.report.superdimension, 1);
        assert!(s.report.pass);
    }
}
