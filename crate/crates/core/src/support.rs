//! Rank-variety tests over the detecting subalgebra and empirical support
//! varieties by coordinate-subspace sampling.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{detecting_subalgebra, DetectingSubalgebra};
use crate::atypicality::{theoretical_support, CoordinateSubset, SupportDescription};
use crate::error::{Error, Result};
use crate::linalg::{frac, scalar_string, Scalar, SparseMatrix};
use crate::modules::{simple_module, SuperModuleRep};
use crate::roots::Weight;

pub const DEFAULT_SEED: u64 = 0xD15EA5E;
pub const DEFAULT_SAMPLES: usize = 3;

/// `x = Σ a_t x_t ∈ 𝔢₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddPoint {
    pub coords: Vec<Scalar>,
}

impl OddPoint {
    pub fn new(coords: Vec<Scalar>) -> Self {
        OddPoint { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        OddPoint::new(coords.iter().map(|&c| Scalar::from_integer(c.into())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Coordinates that are nonzero.
    pub fn support(&self) -> CoordinateSubset {
        CoordinateSubset::from_indices(
            &(1..=self.coords.len()).filter(|&t| !self.coords[t - 1].is_zero()).collect::<Vec<_>>(),
        )
    }

    pub fn scale(&self, c: &Scalar) -> OddPoint {
        OddPoint::new(self.coords.iter().map(|a| a * c).collect())
    }
}

impl Serialize for OddPoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coords.iter().map(scalar_string))
    }
}

fn detecting_for(module: &SuperModuleRep) -> Result<DetectingSubalgebra> {
    let (m, n) = module
        .algebra()
        .shape()
        .filter(|_| module.algebra().degree(0).is_some())
        .ok_or_else(|| Error::Unsupported(format!("{} is not a gl(m|n)", module.algebra().name())))?;
    if module.algebra().dim() != (m + n) * (m + n) {
        return Err(Error::Unsupported(format!("{} is not a gl(m|n)", module.algebra().name())));
    }
    Ok(detecting_subalgebra(m, n))
}

/// Whether `M` is projective over the one-generator subalgebra ⟨x⟩.
///
/// With `X = ρ(x)` and `C = X² = Σ a_t² ρ(x_t²)`, which is diagonal in a
/// weight basis, `M` splits into the kernel `M₀` of `C` and a part where
/// `X` is invertible. The module is projective iff
/// `rank(X|M₀) = dim M₀ / 2`.
pub fn is_projective_at(module: &SuperModuleRep, point: &OddPoint) -> Result<bool> {
    let e = detecting_for(module)?;
    projective_with(module, &e, point)
}

fn projective_with(module: &SuperModuleRep, e: &DetectingSubalgebra, point: &OddPoint) -> Result<bool> {
    if point.coords.len() != e.rank() {
        return Err(Error::Parse(format!("point has {} coordinates, expected {}", point.coords.len(), e.rank())));
    }
    if point.is_zero() {
        return Err(Error::ZeroPoint);
    }
    let dim = module.dim();
    let mut x = SparseMatrix::zeros(dim, dim);
    for (a, xt) in point.coords.iter().zip(e.odd_basis()) {
        if !a.is_zero() {
            x = x.add_scaled(&module.act_element(xt), a);
        }
    }
    let c = x.mul(&x);
    if c.entries().any(|(i, j, _)| i != j) {
        return Err(Error::NotARepresentation("x² is not diagonal on the module basis".into()));
    }
    let kernel: Vec<usize> = (0..dim).filter(|&i| c.get(i, i).is_zero()).collect();
    if kernel.len() % 2 == 1 {
        return Ok(false);
    }
    Ok(x.restrict(&kernel, &kernel).rank() * 2 == kernel.len())
}

/// Outcome of sampling every coordinate subspace of 𝔢₁.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmpiricalSupport {
    #[serde(flatten)]
    pub support: SupportDescription,
    pub points: Vec<PointVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointVerdict {
    pub point: OddPoint,
    pub projective: bool,
}

impl EmpiricalSupport {
    pub fn dim(&self) -> usize {
        self.support.dim
    }
}

/// Pseudo-random points with support exactly `subset`: nonzero coordinates
/// are `±p/q` with `1 ≤ p ≤ 9`, `1 ≤ q ≤ 4`.
pub fn sample_points(r: usize, samples_per_subset: usize, seed: u64) -> Vec<(CoordinateSubset, Vec<OddPoint>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    CoordinateSubset::all(r)
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(|subset| {
            let points = (0..samples_per_subset)
                .map(|_| {
                    OddPoint::new(
                        (1..=r)
                            .map(|t| {
                                if subset.contains(t) {
                                    let p: i64 = rng.gen_range(1..=9);
                                    let q: i64 = rng.gen_range(1..=4);
                                    let s = if rng.gen_bool(0.5) { -1 } else { 1 };
                                    frac(s * p, q)
                                } else {
                                    Scalar::zero()
                                }
                            })
                            .collect(),
                    )
                })
                .collect();
            (subset, points)
        })
        .collect()
}

/// A subset is reported when some sampled point with exactly that support
/// is not projective. The origin is always part of the variety.
pub fn empirical_support(module: &SuperModuleRep, samples_per_subset: usize, seed: u64) -> Result<EmpiricalSupport> {
    let e = detecting_for(module)?;
    let r = e.rank();
    let mut subsets = BTreeSet::from([CoordinateSubset(0)]);
    let mut points = Vec::new();
    for (subset, sample) in sample_points(r, samples_per_subset.max(1), seed) {
        let mut hit = false;
        for point in sample {
            let projective = projective_with(module, &e, &point)?;
            hit |= !projective;
            points.push(PointVerdict { point, projective });
        }
        if hit {
            subsets.insert(subset);
        }
    }
    let dim = subsets.iter().map(CoordinateSubset::size).max().unwrap_or(0);
    Ok(EmpiricalSupport {
        support: SupportDescription { r, subsets, dim },
        points,
    })
}

/// `atyp(M) := dim V_{(𝔢,𝔢₀)}(M)`, read off the empirical support.
pub fn atyp_module(module: &SuperModuleRep) -> Result<usize> {
    Ok(empirical_support(module, DEFAULT_SAMPLES, DEFAULT_SEED)?.dim())
}

/// Empirical support of `L(λ)` next to the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportComparison {
    pub lambda: String,
    pub theoretical: SupportDescription,
    pub empirical: SupportDescription,
    pub matches: bool,
    /// Predicted subsets that the sampler did not find.
    pub missing: Vec<Vec<usize>>,
    /// Subsets the sampler found beyond the prediction.
    pub unexpected: Vec<Vec<usize>>,
}

pub fn compare_to_theorem(lambda: &Weight) -> Result<SupportComparison> {
    compare_to_theorem_with(lambda, DEFAULT_SAMPLES, DEFAULT_SEED)
}

pub fn compare_to_theorem_with(lambda: &Weight, samples_per_subset: usize, seed: u64) -> Result<SupportComparison> {
    let theoretical = theoretical_support(lambda)?.support;
    let simple = simple_module(lambda)?;
    let empirical = empirical_support(&simple.rep, samples_per_subset, seed)?.support;
    let expected: BTreeSet<CoordinateSubset> = theoretical.nonempty().into_iter().collect();
    let found: BTreeSet<CoordinateSubset> = empirical.nonempty().into_iter().collect();
    let list = |set: BTreeSet<&CoordinateSubset>| -> Vec<Vec<usize>> {
        let mut v: Vec<&CoordinateSubset> = set.into_iter().collect();
        v.sort_by_key(|s| (s.size(), s.indices()));
        v.into_iter().map(CoordinateSubset::indices).collect()
    };
    let missing = list(expected.difference(&found).collect());
    let unexpected = list(found.difference(&expected).collect());
    Ok(SupportComparison {
        lambda: lambda.to_string(),
        matches: missing.is_empty() && unexpected.is_empty() && theoretical.dim == empirical.dim,
        theoretical,
        empirical,
        missing,
        unexpected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gl_superalgebra;
    use crate::modules::kac_module;

    fn w(text: &str) -> Weight {
        Weight::parse(text).unwrap()
    }

    #[test]
    fn gl11_point_tests() {
        let triv = SuperModuleRep::trivial(gl_superalgebra(1, 1));
        let one = OddPoint::from_ints(&[1]);
        assert!(!is_projective_at(&triv, &one).unwrap());
        assert!(is_projective_at(&kac_module(&w("0|0")).unwrap().rep, &one).unwrap());
        assert!(is_projective_at(&kac_module(&w("1|0")).unwrap().rep, &one).unwrap());
        assert_eq!(is_projective_at(&triv, &OddPoint::from_ints(&[0])), Err(Error::ZeroPoint));
    }

    #[test]
    fn empirical_examples() {
        let k0 = kac_module(&w("0|0")).unwrap();
        let s = empirical_support(&k0.rep, 3, DEFAULT_SEED).unwrap();
        assert!(s.support.nonempty().is_empty());
        assert_eq!(s.dim(), 0);
        let triv22 = SuperModuleRep::trivial(gl_superalgebra(2, 2));
        let s = empirical_support(&triv22, 3, DEFAULT_SEED).unwrap();
        assert_eq!(s.support.nonempty().len(), 3);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.points.len(), 9);
        let triv11 = SuperModuleRep::trivial(gl_superalgebra(1, 1));
        assert_eq!(atyp_module(&triv11).unwrap(), 1);
        assert_eq!(atyp_module(&k0.rep).unwrap(), 0);
    }

    #[test]
    fn sampled_points_have_exact_support() {
        for (subset, points) in sample_points(3, 4, 7) {
            assert_eq!(points.len(), 4);
            assert!(points.iter().all(|p| p.support() == subset));
        }
        assert_eq!(sample_points(2, 3, DEFAULT_SEED), sample_points(2, 3, DEFAULT_SEED));
    }

    #[test]
    fn theorem_comparisons() {
        for text in ["0|0", "1|0", "2|1", "0,0|0,0"] {
            let report = compare_to_theorem(&w(text)).unwrap();
            assert!(report.matches, "{text}: {report:?}");
        }
    }
}
