mod common;

use common::{matrix, sized_matrix};
use homalg::abgrp::{canonical_form, homology_at, iso_test, ChainComplex, FgAbGroup};
use homalg::cli::verify::random_unimodular;
use homalg::exactla::{kernel_basis, rank, smith_diagonal, IntMatrix};
use homalg::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `C_2 -> C_1 -> C_0` with `d1·d2 = 0`: `d1` is built from the left kernel of `d2`.
fn complex(d2: &IntMatrix, r: &IntMatrix) -> ChainComplex {
    let left = kernel_basis(&d2.transpose());
    let r = IntMatrix::from_fn(r.rows(), left.cols(), |i, j| {
        if j < r.cols() {
            r[(i, j)].clone()
        } else {
            BigInt::zero()
        }
    });
    let d1 = &r * &left.transpose();
    ChainComplex::new(
        0,
        vec![d1.rows(), d2.rows(), d2.cols()],
        vec![d1, d2.clone()],
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn canonical_form_ignores_basis_changes(a in matrix(5, 5, 20), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_unimodular(&mut rng, a.rows());
        let v = random_unimodular(&mut rng, a.cols());
        let b = &(&u * &a) * &v;
        prop_assert_eq!(canonical_form(&b), canonical_form(&a));
        prop_assert!(iso_test(&canonical_form(&b), &canonical_form(&a)));
    }

    #[test]
    fn canonical_form_shape(a in matrix(6, 6, 30)) {
        let g = canonical_form(&a);
        prop_assert_eq!(g.free_rank(), a.rows() - rank(&a));
        let nonunit: Vec<BigInt> = smith_diagonal(&a).into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
        prop_assert_eq!(g.invariant_factors(), &nonunit[..]);
        for w in g.invariant_factors().windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn euler_characteristic(d2 in matrix(5, 5, 6), r in sized_matrix(4, 5, 6)) {
        let c = complex(&d2, &r);
        let h = c.all_homology().unwrap();
        let alt: i64 = h.iter().enumerate().map(|(i, g)| if i % 2 == 0 { g.free_rank() as i64 } else { -(g.free_rank() as i64) }).sum();
        prop_assert_eq!(alt, c.euler_characteristic());
    }

    #[test]
    fn direct_sum_is_canonical(a in matrix(4, 4, 12), b in matrix(4, 4, 12)) {
        let (ga, gb) = (canonical_form(&a), canonical_form(&b));
        let block = IntMatrix::from_fn(a.rows() + b.rows(), a.cols() + b.cols(), |i, j| {
            match (i < a.rows(), j < a.cols()) {
                (true, true) => a[(i, j)].clone(),
                (false, false) => b[(i - a.rows(), j - a.cols())].clone(),
                _ => BigInt::zero(),
            }
        });
        prop_assert_eq!(ga.direct_sum(&gb), canonical_form(&block));
    }
}

#[test]
fn homology_examples() {
    // Z --2--> Z --0--> Z: H_1 = Z/2
    let d_in = IntMatrix::from_rows(&[vec![2]]);
    let d_out = IntMatrix::from_rows(&[vec![0]]);
    assert_eq!(homology_at(&d_in, &d_out).unwrap(), FgAbGroup::cyclic(2));
    // empty maps are allowed on either side
    assert_eq!(
        homology_at(&IntMatrix::zeros(3, 0), &IntMatrix::zeros(0, 3)).unwrap(),
        FgAbGroup::free(3)
    );
    assert!(matches!(
        homology_at(
            &IntMatrix::from_rows(&[vec![1]]),
            &IntMatrix::from_rows(&[vec![1]])
        ),
        Err(Error::ComplexValidity(_))
    ));
    assert!(homology_at(&IntMatrix::zeros(2, 1), &IntMatrix::zeros(1, 3)).is_err());
}

#[test]
fn rejects_invalid_complexes() {
    let one = IntMatrix::from_rows(&[vec![1]]);
    assert!(ChainComplex::new(0, vec![1, 1, 1], vec![one.clone(), one.clone()]).is_err());
    assert!(ChainComplex::new(0, vec![1, 2], vec![one]).is_err());
}
