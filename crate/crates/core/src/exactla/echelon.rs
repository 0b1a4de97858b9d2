use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{div_floor, IntMatrix};
use crate::error::{input, Result};

/// Column-style Hermite reduction `a · v = e`.
///
/// `e` is lower echelon: column `k < rank` has a positive pivot at row `pivot_rows[k]`,
/// zeros above it, and the entries of that row left of the pivot lie in `[0, pivot)`.
/// Columns `rank..` of `e` are zero, so the matching columns of `v` span the kernel.
pub(crate) struct ColumnEchelon {
    pub e: IntMatrix,
    pub v: Option<IntMatrix>,
    pub pivot_rows: Vec<usize>,
}

impl ColumnEchelon {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }
}

/// `y / x` rounded to a nearest integer.
fn div_round(y: &BigInt, x: &BigInt) -> BigInt {
    let (q, r) = y.div_mod_floor(x);
    if (&r + &r).abs() > x.abs() {
        q + 1
    } else {
        q
    }
}

/// Reduces `a` to lower echelon form by column operations.
///
/// Each row is cleared Euclid-style: the column holding the smallest nonzero entry
/// becomes the pivot and the others are reduced by it with rounded quotients, which
/// keeps the transform `v` small. With `reduce`, entries left of each pivot are then
/// brought into `[0, pivot)` (Hermite form); kernels and solving do not need that.
pub(crate) fn column_echelon(a: &IntMatrix, track: bool, reduce: bool) -> ColumnEchelon {
    let (m, n) = a.shape();
    let mut e = a.clone();
    let mut v = track.then(|| IntMatrix::identity(n));
    let mut pivot_rows = Vec::new();
    let mut k = 0;

    for i in 0..m {
        if k == n {
            break;
        }
        loop {
            let best = (k..n)
                .filter(|&j| !e[(i, j)].is_zero())
                .min_by(|&x, &y| e[(i, x)].abs().cmp(&e[(i, y)].abs()));
            let Some(best) = best else { break };
            if best != k {
                e.swap_cols(k, best);
                if let Some(v) = v.as_mut() {
                    v.swap_cols(k, best);
                }
            }
            let x = e[(i, k)].clone();
            let mut cleared = true;
            for j in k + 1..n {
                if e[(i, j)].is_zero() {
                    continue;
                }
                let q = div_round(&e[(i, j)], &x);
                e.col_submul(j, k, &q);
                if let Some(v) = v.as_mut() {
                    v.col_submul(j, k, &q);
                }
                cleared &= e[(i, j)].is_zero();
            }
            if cleared {
                break;
            }
        }
        if e[(i, k)].is_zero() {
            continue;
        }
        if e[(i, k)].is_negative() {
            e.negate_col(k);
            if let Some(v) = v.as_mut() {
                v.negate_col(k);
            }
        }
        if reduce {
            let p = e[(i, k)].clone();
            for c in 0..k {
                let q = div_floor(&e[(i, c)], &p);
                if !q.is_zero() {
                    e.col_submul(c, k, &q);
                    if let Some(v) = v.as_mut() {
                        v.col_submul(c, k, &q);
                    }
                }
            }
        }
        pivot_rows.push(i);
        k += 1;
    }
    ColumnEchelon { e, v, pivot_rows }
}

/// Column-style Hermite normal form of the lattice spanned by the columns of `a`.
///
/// Zero columns are dropped, so the result is `rows × rank(a)`.
pub fn hnf(a: &IntMatrix) -> IntMatrix {
    let ech = column_echelon(a, false, true);
    let keep: Vec<usize> = (0..ech.rank()).collect();
    ech.e.select_columns(&keep)
}

pub fn rank(a: &IntMatrix) -> usize {
    column_echelon(a, false, false).rank()
}

/// Integer basis of `{x : a·x = 0}`, returned as the columns of a matrix in Hermite form.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let ech = column_echelon(a, true, false);
    let free: Vec<usize> = (ech.rank()..a.cols()).collect();
    let v = ech.v.expect("tracked");
    hnf(&v.select_columns(&free))
}

/// An integer solution of `a·x = b`, or `None` when none exists.
pub fn solve(a: &IntMatrix, b: &IntMatrix) -> Result<Option<IntMatrix>> {
    if a.rows() != b.rows() {
        return input(format!(
            "solve: a has {} rows but b has {}",
            a.rows(),
            b.rows()
        ));
    }
    let ech = column_echelon(a, true, false);
    let v = ech.v.expect("tracked");
    let n = a.cols();
    let mut y = IntMatrix::zeros(n, b.cols());
    let mut pivot_of_row = vec![None; a.rows()];
    for (k, &r) in ech.pivot_rows.iter().enumerate() {
        pivot_of_row[r] = Some(k);
    }

    for col in 0..b.cols() {
        let mut res = b.column(col);
        for (i, pivot) in pivot_of_row.iter().enumerate() {
            match pivot {
                Some(k) => {
                    let p = &ech.e[(i, *k)];
                    let (q, rem) = res[i].div_rem(p);
                    if !rem.is_zero() {
                        return Ok(None);
                    }
                    if !q.is_zero() {
                        for (r, x) in res.iter_mut().enumerate().skip(i) {
                            let c = &ech.e[(r, *k)];
                            if !c.is_zero() {
                                *x -= c * &q;
                            }
                        }
                    }
                    y[(*k, col)] = q;
                }
                None => {
                    if !res[i].is_zero() {
                        return Ok(None);
                    }
                }
            }
        }
    }
    Ok(Some(&v * &y))
}

#[allow(dead_code)]
pub(crate) fn is_lower_echelon(e: &IntMatrix) -> bool {
    let mut last: Option<usize> = None;
    for j in 0..e.cols() {
        let first = (0..e.rows()).find(|&i| !e[(i, j)].is_zero());
        match (first, last) {
            (None, _) => {}
            (Some(f), Some(l)) if f <= l => return false,
            (Some(f), _) => {
                if !e[(f, j)].is_positive() {
                    return false;
                }
                last = Some(f);
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&IntMatrix::identity(2)).shape(), (2, 0));
        assert_eq!(
            kernel_basis(&IntMatrix::from_rows(&[vec![2, -2]])),
            IntMatrix::from_rows(&[vec![1], vec![1]])
        );
        assert_eq!(
            kernel_basis(&IntMatrix::zeros(1, 1)),
            IntMatrix::from_rows(&[vec![1]])
        );
    }

    #[test]
    fn kernel_is_saturated() {
        // ker [[2, 4]] is spanned by (-2, 1); (−1, 1/2) is not integral.
        let k = kernel_basis(&IntMatrix::from_rows(&[vec![2, 4]]));
        assert_eq!(k.shape(), (2, 1));
        assert_eq!(
            k.column(0).iter().map(|x| x.abs()).collect::<Vec<_>>(),
            vec![BigInt::from(2), BigInt::from(1)]
        );
    }

    #[test]
    fn solve_examples() {
        let two = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(
            solve(&two, &IntMatrix::from_rows(&[vec![4]])).unwrap(),
            Some(IntMatrix::from_rows(&[vec![2]]))
        );
        assert_eq!(
            solve(&two, &IntMatrix::from_rows(&[vec![3]])).unwrap(),
            None
        );
        let b = IntMatrix::from_rows(&[vec![5, -7, 0], vec![1, 2, 3]]);
        assert_eq!(solve(&IntMatrix::identity(2), &b).unwrap(), Some(b));
        assert!(solve(&two, &IntMatrix::zeros(2, 1)).is_err());
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(hnf(&IntMatrix::identity(3)), IntMatrix::identity(3));
        assert_eq!(hnf(&IntMatrix::zeros(2, 3)).shape(), (2, 0));
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let h = hnf(&a);
        assert_eq!(h, IntMatrix::from_rows(&[vec![2, 0], vec![2, 4]]));
        // same lattice: each basis solves in terms of the other
        assert!(solve(&h, &a).unwrap().is_some());
        assert!(solve(&a, &h).unwrap().is_some());
    }
}
