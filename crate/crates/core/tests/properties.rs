//! Property tests for the algebraic invariants.

use proptest::prelude::*;

use supvar::algebra::gl_superalgebra;
use supvar::atypicality::{atypicality, defect};
use supvar::clifford::{classify_block, divisibility_check, OddFormData, SimpleType};
use supvar::linalg::{frac, int, kernel_basis, rank, RationalMatrix, Scalar};
use supvar::modules::{direct_sum, dual, kac_module, simple_module, tensor, verify_rep, SuperModuleRep};
use supvar::roots::{bilinear_form, Weight};
use supvar::support::{is_projective_at, OddPoint};
use supvar::Error;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec((-3i64..=3, 1i64..=3), rows * cols).prop_map(move |entries| {
        let data: Vec<Vec<Scalar>> = entries
            .chunks(cols)
            .map(|row| row.iter().map(|&(p, q)| frac(p, q)).collect())
            .collect();
        RationalMatrix::from_rows(cols, data)
    })
}

fn shaped_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))
}

fn symmetric(dim: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-2i64..=2, dim * dim).prop_map(move |v| {
        let mut m = RationalMatrix::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                m.set(i, j, int(v[i * dim + j]));
                m.set(j, i, int(v[i * dim + j]));
            }
        }
        m
    })
}

fn weight(m: usize, n: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-4i64..=4, m + n).prop_map(move |v| Weight::from_ints(m, n, &v))
}

fn dominant(m: usize, n: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-2i64..=2, m + n).prop_map(move |mut v| {
        v[..m].sort_by(|a, b| b.cmp(a));
        v[m..].sort_by(|a, b| b.cmp(a));
        Weight::from_ints(m, n, &v)
    })
}

fn point(r: usize) -> impl Strategy<Value = OddPoint> {
    prop::collection::vec((-4i64..=4, 1i64..=3), r)
        .prop_filter("nonzero", |v| v.iter().any(|(p, _)| *p != 0))
        .prop_map(|v| OddPoint::new(v.into_iter().map(|(p, q)| frac(p, q)).collect()))
}

fn small_modules() -> Vec<SuperModuleRep> {
    let mut out = vec![SuperModuleRep::trivial(gl_superalgebra(2, 1))];
    for text in ["0,0|0", "1,0|0", "1,1|-1", "0,-1|1"] {
        let lambda = Weight::parse(text).unwrap();
        out.push(kac_module(&lambda).unwrap().rep);
        out.push(simple_module(&lambda).unwrap().rep);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(a in shaped_matrix()) {
        let kernel = kernel_basis(&a);
        prop_assert_eq!(rank(&a) + kernel.len(), a.ncols());
        for v in &kernel {
            prop_assert!(a.mul_vec(v).iter().all(|x| *x == int(0)));
        }
        prop_assert_eq!(rank(&a), rank(&a.transpose()));
    }

    #[test]
    fn bilinear_form_is_symmetric(x in weight(2, 2), y in weight(2, 2)) {
        prop_assert_eq!(bilinear_form(&x, &y).unwrap(), bilinear_form(&y, &x).unwrap());
    }

    #[test]
    fn atypicality_bounded_and_shift_invariant(lambda in dominant(2, 2), c in -3i64..=3) {
        let a = atypicality(&lambda).value;
        prop_assert!(a <= defect(2, 2));
        let shift = Weight::from_ints(2, 2, &[c, c, -c, -c]);
        prop_assert_eq!(atypicality(&(&lambda + &shift)).value, a);
    }

    #[test]
    fn projectivity_is_scaling_invariant(x in point(1), p in 1i64..=5, q in 1i64..=5, neg in any::<bool>(), idx in 0usize..9) {
        let modules = small_modules();
        let module = &modules[idx % modules.len()];
        let c = frac(if neg { -p } else { p }, q);
        prop_assert_eq!(is_projective_at(module, &x).unwrap(), is_projective_at(module, &x.scale(&c)).unwrap());
    }

    #[test]
    fn direct_sums_and_tensors(x in point(1), i in 0usize..9, j in 0usize..9) {
        let modules = small_modules();
        let (a, b) = (&modules[i % modules.len()], &modules[j % modules.len()]);
        let pa = is_projective_at(a, &x).unwrap();
        let pb = is_projective_at(b, &x).unwrap();
        let sum = direct_sum(a, b).unwrap();
        prop_assert_eq!(is_projective_at(&sum, &x).unwrap(), pa && pb);
        let product = tensor(a, b).unwrap();
        if pa || pb {
            prop_assert!(is_projective_at(&product, &x).unwrap());
        }
        prop_assert_eq!(is_projective_at(&dual(a), &x).unwrap(), pa);
    }

    #[test]
    fn clifford_alternation(gram in (1usize..=5).prop_flat_map(symmetric)) {
        let dim = gram.nrows();
        let form = OddFormData::from_gram(gram).unwrap();
        prop_assert_eq!(form.z + form.n, dim);
        let c = classify_block(&form);
        prop_assert_eq!(c.simple_type == SimpleType::M, form.n.is_multiple_of(2));
        prop_assert_eq!(c.simple_dim, 1u64 << form.n.div_ceil(2));
        prop_assert_eq!((1u64 << dim) % c.projective_dim, 0);
        prop_assert!(c.projective_dim >= c.simple_dim);
    }

    #[test]
    fn divisibility_codimension(dim in 1usize..200, sdim in -5i64..5, support in 0usize..4, ambient in 0usize..4) {
        match divisibility_check(dim, sdim, support, ambient) {
            Ok(r) => {
                prop_assert!(support <= ambient);
                prop_assert_eq!(r.codimension, ambient - support);
                prop_assert_eq!(r.divides, dim % (1 << ((ambient - support) / 2)) == 0);
            }
            Err(e) => {
                prop_assert!(support > ambient);
                prop_assert_eq!(e, Error::BadCodimension { support, ambient });
            }
        }
    }

    #[test]
    fn kac_modules_are_representations(lambda in dominant(2, 1)) {
        let k = kac_module(&lambda).unwrap();
        prop_assert!(verify_rep(&k.rep).ok);
        prop_assert_eq!(k.rep.superdimension(), 0);
    }

    #[test]
    fn weight_text_roundtrip(lambda in weight(2, 3)) {
        prop_assert_eq!(Weight::parse(&lambda.to_string()).unwrap(), lambda);
    }
}
