#![allow(dead_code)]

use homalg::exactla::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

pub fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(move |(r, c)| sized_matrix(r, c, bound))
}

pub fn sized_matrix(r: usize, c: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
        IntMatrix::from_vec(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
    })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all `k×k` minors, by enumerating them.
pub fn minor_gcd(a: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in subsets(a.rows(), k) {
        for cols in subsets(a.cols(), k) {
            g = g.gcd(&a.submatrix(&rows, &cols).det().unwrap());
        }
    }
    g
}

/// Whether two matrices have the same column lattice.
pub fn same_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    homalg::exactla::solve(a, b).unwrap().is_some()
        && homalg::exactla::solve(b, a).unwrap().is_some()
}
