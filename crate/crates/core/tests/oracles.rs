//! Cross-checks against independent brute-force computations.

use std::collections::BTreeSet;

use supvar::algebra::gl_superalgebra;
use supvar::atypicality::atypicality;
use supvar::cohomology::{cohomology_dims, hilbert_series};
use supvar::linalg::int;
use supvar::modules::{contravariant_form, kac_module, l0_module, simple_module, verify_rep, SuperModuleRep};
use supvar::roots::{dim_l0, dominant_weights, Weight};

/// Semistandard tableaux of shape `parts` with entries in `1..=k`, counted by
/// filling cells row by row.
fn count_ssyt(parts: &[usize], k: usize) -> usize {
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid = vec![vec![0usize; parts.first().copied().unwrap_or(0)]; parts.len()];
    fn fill(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, k: usize) -> usize {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=k {
            grid[r][c] = v;
            total += fill(idx + 1, cells, grid, k);
        }
        total
    }
    fill(0, &cells, &mut grid, k)
}

/// Dimension of the gl(k)-module with highest weight `block` via tableaux,
/// after shifting to a partition.
fn gl_dim(block: &[i64]) -> usize {
    let Some(&min) = block.iter().min() else { return 1 };
    let parts: Vec<usize> = block.iter().map(|&x| (x - min) as usize).filter(|&p| p > 0).collect();
    count_ssyt(&parts, block.len())
}

#[test]
fn weyl_dimension_matches_tableaux() {
    for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
        for lambda in dominant_weights(m, n, -2, 2) {
            let ints = lambda.to_ints().unwrap();
            let expected = gl_dim(&ints[..m]) * gl_dim(&ints[m..]);
            assert_eq!(dim_l0(&lambda).unwrap(), expected, "{lambda}");
        }
    }
}

#[test]
fn constructed_l0_matches_weyl_dimension() {
    for (m, n) in [(2, 1), (2, 2), (3, 1)] {
        for lambda in dominant_weights(m, n, -1, 2) {
            let l0 = l0_module(&lambda).unwrap();
            assert_eq!(l0.dim(), dim_l0(&lambda).unwrap(), "{lambda}");
            assert!(verify_rep(&l0.rep).ok, "{lambda}");
            assert!(l0.gram.is_symmetric());
        }
    }
}

/// Coefficients of `Π 1/(1 − t^{2i})` by enumerating exponent vectors.
fn brute_force_hilbert(r: usize, p_max: usize) -> Vec<usize> {
    let mut counts = vec![0; p_max + 1];
    let mut exps = vec![0usize; r];
    loop {
        let degree: usize = exps.iter().enumerate().map(|(i, e)| 2 * (i + 1) * e).sum();
        if degree <= p_max {
            counts[degree] += 1;
        }
        let mut i = 0;
        loop {
            if i == r {
                return counts;
            }
            exps[i] += 1;
            if exps.iter().enumerate().map(|(j, e)| 2 * (j + 1) * e).sum::<usize>() <= p_max {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn trivial_module_cohomology_matches_hilbert_series() {
    for r in 0..=3 {
        assert_eq!(hilbert_series(r, 9), brute_force_hilbert(r, 9));
    }
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let g = gl_superalgebra(m, n);
        let dims = cohomology_dims(&g, &SuperModuleRep::trivial(g.clone()), 6).unwrap();
        assert_eq!(dims, brute_force_hilbert(m.min(n), 6), "gl({m}|{n})");
    }
}

/// On gl(1|1), `⟨y v, y v⟩ = ⟨v, E12 E21 v⟩ = λ₁ + λ₂`.
#[test]
fn gl11_form_is_diagonal() {
    for lambda in dominant_weights(1, 1, -3, 3) {
        let kac = kac_module(&lambda).unwrap();
        let form = contravariant_form(&kac).unwrap();
        let ints = lambda.to_ints().unwrap();
        assert_eq!(*form.get(0, 0), int(1));
        assert_eq!(*form.get(1, 1), int(ints[0] + ints[1]));
        assert_eq!(*form.get(0, 1), int(0));
    }
}

/// A Kac module is simple exactly when the weight is typical.
#[test]
fn typical_weights_have_simple_kac_modules() {
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        for lambda in dominant_weights(m, n, -2, 2) {
            let kac_dim = (1usize << (m * n)) * dim_l0(&lambda).unwrap();
            let simple = simple_module(&lambda).unwrap();
            let typical = atypicality(&lambda).value == 0;
            assert_eq!(simple.dim() == kac_dim, typical, "{lambda}");
        }
    }
}

#[test]
fn kac_weights_are_shifts_of_l0_weights() {
    let lambda = Weight::parse("1,0|0").unwrap();
    let kac = kac_module(&lambda).unwrap();
    let l0 = l0_module(&lambda).unwrap();
    let g = gl_superalgebra(2, 1);
    let negative: Vec<Weight> = [(2, 0), (2, 1)]
        .iter()
        .map(|&(i, j)| g.weight(supvar::algebra::gl_index(2, 1, i, j)).unwrap().clone())
        .collect();
    let mut expected = BTreeSet::new();
    for mask in 0..4u32 {
        let mut shift = Weight::zero(2, 1);
        for (s, y) in negative.iter().enumerate() {
            if mask & (1 << s) != 0 {
                shift = &shift + y;
            }
        }
        for v in l0.rep.weights() {
            expected.insert(v + &shift);
        }
    }
    let actual: BTreeSet<Weight> = kac.rep.weights().iter().cloned().collect();
    assert_eq!(actual, expected);
}
