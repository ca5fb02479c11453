//! Defect of gl(m|n) and atypicality of weights.
//!
//! For `α = εᵢ − εⱼ` with `i ≤ m < j` one has `(α, λ+ρ) = (λ+ρ)ᵢ + (λ+ρ)ⱼ`,
//! and two distinct such roots are orthogonal exactly when they share
//! neither index. Atypicality is therefore the size of the multiset
//! intersection of the even-block entries of λ+ρ with the negated odd-block
//! entries. [`atypicality_oracle`] re-derives the same number by an
//! exhaustive search that uses only the bilinear form.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{bilinear_form, require_dominant, rho, Root, Weight};

/// `def(gl(m|n)) = min(m, n)`.
pub fn defect(m: usize, n: usize) -> usize {
    m.min(n)
}

/// Atypicality together with a set of roots realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtypicalityCertificate {
    pub value: usize,
    pub witness: Vec<Root>,
}

impl AtypicalityCertificate {
    /// Checks the witness against λ with the bilinear form.
    pub fn validate(&self, lambda: &Weight) -> bool {
        let (m, n) = lambda.shape();
        let shifted = lambda + &rho(m, n);
        let ortho = |a: &Weight, b: &Weight| bilinear_form(a, b).is_ok_and(|v| v.is_zero());
        let ws: Vec<Weight> = self.witness.iter().map(Root::to_weight).collect();
        self.witness.len() == self.value
            && self.witness.iter().all(Root::is_odd)
            && ws.iter().all(|w| ortho(w, w) && ortho(w, &shifted))
            && ws
                .iter()
                .enumerate()
                .all(|(a, wa)| ws[a + 1..].iter().all(|wb| ortho(wa, wb)))
    }
}

/// Multiset intersection of `{(λ+ρ)ᵢ}_{i≤m}` and `{−(λ+ρ)ⱼ}_{j>m}`; the
/// witness pairs the smallest free `i` with the smallest free matching `j`.
pub fn atypicality(lambda: &Weight) -> AtypicalityCertificate {
    let (m, n) = lambda.shape();
    let shifted = lambda + &rho(m, n);
    let mut used = vec![false; n];
    let mut witness = Vec::new();
    for i in 0..m {
        let target = -shifted.coord(i);
        if let Some(k) = (0..n).find(|&k| !used[k] && shifted.coord(m + k) == &target) {
            used[k] = true;
            witness.push(Root::new(m, n, i, m + k));
        }
    }
    AtypicalityCertificate {
        value: witness.len(),
        witness,
    }
}

/// Largest set of pairwise orthogonal odd positive roots orthogonal to λ+ρ,
/// found by backtracking. Roots are taken up to sign (α and −α are never
/// both counted).
pub fn atypicality_oracle(lambda: &Weight) -> Result<usize> {
    let (m, n) = lambda.shape();
    if m * n > 20 {
        return Err(Error::TooLarge(format!("oracle enumeration needs mn <= 20, got {}", m * n)));
    }
    let shifted = lambda + &rho(m, n);
    let zero_form = |a: &Weight, b: &Weight| bilinear_form(a, b).is_ok_and(|v| v.is_zero());
    let candidates: Vec<Weight> = (0..m)
        .flat_map(|i| (m..m + n).map(move |j| Root::new(m, n, i, j)))
        .map(|r| r.to_weight())
        .filter(|w| zero_form(w, w) && zero_form(w, &shifted))
        .collect();
    let k = candidates.len();
    let mut compatible = vec![vec![false; k]; k];
    for a in 0..k {
        for b in 0..k {
            compatible[a][b] = a != b && zero_form(&candidates[a], &candidates[b]);
        }
    }
    fn search(start: usize, chosen: &mut Vec<usize>, compatible: &[Vec<bool>], best: &mut usize) {
        *best = (*best).max(chosen.len());
        for c in start..compatible.len() {
            if chosen.iter().all(|&x| compatible[x][c]) {
                chosen.push(c);
                search(c + 1, chosen, compatible, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    search(0, &mut Vec::new(), &compatible, &mut best);
    Ok(best)
}

/// Subset of `{1, …, r}` stored as a bitmask (bit `t−1` for index `t`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordinateSubset(pub u32);

impl CoordinateSubset {
    pub fn from_indices(indices: &[usize]) -> Self {
        CoordinateSubset(indices.iter().fold(0, |acc, &t| acc | (1 << (t - 1))))
    }

    pub fn size(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, t: usize) -> bool {
        self.0 & (1 << (t - 1)) != 0
    }

    /// 1-based indices in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        (1..=32).filter(|&t| self.contains(t)).collect()
    }

    pub fn is_subset_of(&self, other: &CoordinateSubset) -> bool {
        self.0 & !other.0 == 0
    }

    /// All subsets of `{1..r}`, ordered by size then lexicographically.
    pub fn all(r: usize) -> Vec<CoordinateSubset> {
        let mut all: Vec<CoordinateSubset> = (0..1u32 << r).map(CoordinateSubset).collect();
        all.sort_by_key(|s| (s.size(), s.indices()));
        all
    }

    /// Image under the permutation `t ↦ perm[t−1]` (1-based targets).
    pub fn permute(&self, perm: &[usize]) -> CoordinateSubset {
        CoordinateSubset::from_indices(&self.indices().iter().map(|&t| perm[t - 1]).collect::<Vec<_>>())
    }
}

/// A conical variety in 𝔢₁ = span(x₁..x_r) given as a union of coordinate
/// subspaces. The origin (empty subset) is always a member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportDescription {
    pub r: usize,
    #[serde(serialize_with = "serialize_nonempty")]
    pub subsets: BTreeSet<CoordinateSubset>,
    pub dim: usize,
}

fn serialize_nonempty<S: serde::Serializer>(
    subsets: &BTreeSet<CoordinateSubset>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut ordered: Vec<&CoordinateSubset> = subsets.iter().filter(|s| !s.is_empty()).collect();
    ordered.sort_by_key(|s| (s.size(), s.indices()));
    serializer.collect_seq(ordered.into_iter().map(CoordinateSubset::indices))
}

impl SupportDescription {
    /// Every subset of `{1..r}` with at most `k` elements.
    pub fn all_of_size_at_most(r: usize, k: usize) -> Self {
        SupportDescription {
            r,
            subsets: CoordinateSubset::all(r).into_iter().filter(|s| s.size() <= k).collect(),
            dim: k.min(r),
        }
    }

    /// Subsets other than the origin, ordered by size then lexicographically.
    pub fn nonempty(&self) -> Vec<CoordinateSubset> {
        let mut v: Vec<CoordinateSubset> = self.subsets.iter().filter(|s| !s.is_empty()).copied().collect();
        v.sort_by_key(|s| (s.size(), s.indices()));
        v
    }

    /// Stable under every permutation of the coordinates.
    pub fn is_symmetric(&self) -> bool {
        permutations(self.r).iter().all(|perm| {
            self.subsets.iter().all(|s| self.subsets.contains(&s.permute(perm)))
        })
    }

    pub fn is_downward_closed(&self) -> bool {
        self.subsets.iter().all(|s| {
            CoordinateSubset::all(self.r)
                .iter()
                .filter(|t| t.is_subset_of(s))
                .all(|t| self.subsets.contains(t))
        })
    }
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(r - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, r);
            out.push(q);
        }
    }
    out
}

/// Closed-form support variety of `L(λ)` over the detecting subalgebra:
/// all coordinate subspaces of dimension at most `atyp(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoreticalSupport {
    #[serde(flatten)]
    pub support: SupportDescription,
    /// Dimension of the support variety over the full algebra (it is affine k-space).
    pub g_variety_dim: usize,
}

pub fn theoretical_support(lambda: &Weight) -> Result<TheoreticalSupport> {
    require_dominant(lambda)?;
    let (m, n) = lambda.shape();
    let k = atypicality(lambda).value;
    Ok(TheoreticalSupport {
        support: SupportDescription::all_of_size_at_most(defect(m, n), k),
        g_variety_dim: k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Weight {
        Weight::parse(text).unwrap()
    }

    #[test]
    fn defect_examples() {
        assert_eq!(defect(2, 3), 2);
        assert_eq!(defect(1, 1), 1);
        assert_eq!(defect(4, 4), 4);
    }

    #[test]
    fn atypicality_examples() {
        for (text, expected) in [("0|0", 1), ("0,0|0", 1), ("0,0|0,0", 2), ("1|0", 0)] {
            let cert = atypicality(&w(text));
            assert_eq!(cert.value, expected, "{text}");
            assert!(cert.validate(&w(text)));
            assert_eq!(atypicality_oracle(&w(text)).unwrap(), expected, "{text}");
        }
        assert_eq!(atypicality_oracle(&w("5,3|1,0")).unwrap(), 0);
        assert_eq!(atypicality(&w("5,3|1,0")).value, 0);
    }

    #[test]
    fn witness_is_greedy() {
        let cert = atypicality(&w("0,0|0,0"));
        // λ+ρ = (−1/2, −3/2 | 3/2, 1/2): ε₁ pairs with ε₄, ε₂ with ε₃.
        assert_eq!(cert.witness, vec![Root::new(2, 2, 0, 3), Root::new(2, 2, 1, 2)]);
    }

    #[test]
    fn oracle_refuses_large_input() {
        let lambda = Weight::zero(5, 5);
        assert!(matches!(atypicality_oracle(&lambda), Err(Error::TooLarge(_))));
    }

    #[test]
    fn theoretical_support_examples() {
        let full = theoretical_support(&w("0,0|0,0")).unwrap();
        assert_eq!(full.support.subsets.len(), 4);
        assert_eq!(full.support.dim, 2);
        let typical = theoretical_support(&w("1|0")).unwrap();
        assert_eq!(typical.support.subsets.iter().copied().collect::<Vec<_>>(), vec![CoordinateSubset(0)]);
        assert_eq!(typical.support.dim, 0);
        let lambda = w("1,0|0,-2");
        assert_eq!(atypicality_oracle(&lambda).unwrap(), 1);
        let one = theoretical_support(&lambda).unwrap();
        assert_eq!(one.support.nonempty(), vec![CoordinateSubset(1), CoordinateSubset(2)]);
        assert!(one.support.subsets.contains(&CoordinateSubset(0)));
        assert_eq!(one.support.dim, 1);
        assert!(one.support.is_symmetric() && one.support.is_downward_closed());
    }

    #[test]
    fn support_json_omits_origin() {
        let s = SupportDescription::all_of_size_at_most(2, 2);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"r":2,"subsets":[[1],[2],[1,2]],"dim":2}"#
        );
    }
}
