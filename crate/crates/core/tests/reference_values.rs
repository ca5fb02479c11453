//! Values stated explicitly in the literature on gl(m|n) support varieties.

use supvar::algebra::{detecting_subalgebra, gl_index, gl_superalgebra};
use supvar::atypicality::{defect, theoretical_support};
use supvar::clifford::{classify_block, simple_divisibility, OddFormData, SimpleType};
use supvar::cohomology::{cohomology_dims, ext_dims};
use supvar::linalg::{int, RationalMatrix};
use supvar::modules::{kac_module, simple_module, SuperModuleRep};
use supvar::roots::{bilinear_form, Weight};
use supvar::support::{atyp_module, empirical_support, DEFAULT_SEED};

fn w(text: &str) -> Weight {
    Weight::parse(text).unwrap()
}

/// `E_{ij} + E_{ji}` with 1-based indices.
fn symmetric_pair(m: usize, n: usize, i: usize, j: usize) -> Vec<usize> {
    let mut v = vec![gl_index(m, n, i - 1, j - 1), gl_index(m, n, j - 1, i - 1)];
    v.sort();
    v
}

#[test]
fn bilinear_form_on_basis() {
    let e = |i| Weight::epsilon(2, 1, i);
    assert_eq!(bilinear_form(&e(0), &e(0)).unwrap(), int(1));
    assert_eq!(bilinear_form(&e(2), &e(2)).unwrap(), int(-1));
}

#[test]
fn defect_is_min() {
    assert_eq!(defect(2, 3), 2);
    assert_eq!(defect(1, 1), 1);
    assert_eq!(defect(4, 4), 4);
}

#[test]
fn detecting_generators() {
    for (m, n, expected) in [
        (1, 1, vec![(1, 2)]),
        (2, 2, vec![(2, 3), (1, 4)]),
        (2, 1, vec![(2, 3)]),
    ] {
        let e = detecting_subalgebra(m, n);
        assert_eq!(e.rank(), expected.len());
        for (x, (i, j)) in e.odd_basis().iter().zip(expected) {
            let mut support: Vec<usize> = x.iter().map(|(a, _)| *a).collect();
            support.sort();
            assert_eq!(support, symmetric_pair(m, n, i, j));
            assert!(x.iter().all(|(_, c)| *c == int(1)));
        }
    }
}

#[test]
fn supports_of_simples_and_kac_modules() {
    let full = theoretical_support(&w("0,0|0,0")).unwrap();
    assert_eq!(full.support.nonempty().len(), 3);
    assert_eq!(full.support.dim, 2);
    let typical = theoretical_support(&w("1|0")).unwrap();
    assert!(typical.support.nonempty().is_empty());

    let k0 = kac_module(&w("0|0")).unwrap();
    let s = empirical_support(&k0.rep, 3, DEFAULT_SEED).unwrap();
    assert!(s.support.nonempty().is_empty());
    assert_eq!(atyp_module(&k0.rep).unwrap(), 0);
    let l0 = simple_module(&w("0,0|0,0")).unwrap();
    assert_eq!(atyp_module(&l0.rep).unwrap(), 2);
}

#[test]
fn cohomology_of_gl11() {
    let g = gl_superalgebra(1, 1);
    let triv = SuperModuleRep::trivial(g.clone());
    assert_eq!(cohomology_dims(&g, &triv, 4).unwrap(), vec![1, 0, 1, 0, 1]);
    assert_eq!(ext_dims(&triv, &triv, 4).unwrap().dims, vec![1, 0, 1, 0, 1]);
}

#[test]
fn clifford_blocks() {
    let q = classify_block(&OddFormData::from_gram(RationalMatrix::from_i64(&[&[2]])).unwrap());
    assert_eq!((q.simple_dim, q.simple_type, q.projective_dim), (2, SimpleType::Q, 2));
    let m = classify_block(&OddFormData::from_gram(RationalMatrix::identity(2)).unwrap());
    assert_eq!((m.simple_dim, m.simple_type, m.projective_dim), (2, SimpleType::M, 2));
}

#[test]
fn nonzero_superdimension_needs_full_atypicality() {
    let s = simple_divisibility(&w("0,0|0,0")).unwrap();
    assert_eq!((s.defect, s.atypicality, s.report.superdimension), (2, 2, 1));
    assert!(s.report.pass);
}
