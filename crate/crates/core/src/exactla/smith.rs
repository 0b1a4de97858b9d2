use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{div_floor, IntMatrix};

/// `u · a · v = d` with `u`, `v` unimodular and `d` diagonal in divisibility-chain form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries `d_1, ..., d_min(rows, cols)`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form with both transforms.
pub fn snf(a: &IntMatrix) -> SmithDecomposition {
    let (d, u, v) = reduce(a, true);
    SmithDecomposition {
        u: u.expect("tracked"),
        d,
        v: v.expect("tracked"),
    }
}

/// Diagonal of the Smith normal form, without accumulating transforms.
pub fn smith_diagonal(a: &IntMatrix) -> Vec<BigInt> {
    let (d, _, _) = reduce(a, false);
    (0..d.rows().min(d.cols()))
        .map(|i| d[(i, i)].clone())
        .collect()
}

fn smallest_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, b)| ax < *b) {
                let unit = ax == BigInt::from(1);
                best = Some(((i, j), ax));
                if unit {
                    return best.map(|(p, _)| p);
                }
            }
        }
    }
    best.map(|(p, _)| p)
}

fn reduce(a: &IntMatrix, track: bool) -> (IntMatrix, Option<IntMatrix>, Option<IntMatrix>) {
    let (m, n) = a.shape();
    let mut d = a.clone();
    let mut u = track.then(|| IntMatrix::identity(m));
    let mut v = track.then(|| IntMatrix::identity(n));

    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        d.swap_cols(t, pj);
        if let Some(u) = u.as_mut() {
            u.swap_rows(t, pi);
        }
        if let Some(v) = v.as_mut() {
            v.swap_cols(t, pj);
        }

        loop {
            let p = d[(t, t)].clone();
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = div_floor(&d[(i, t)], &p);
                d.row_submul(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.row_submul(i, t, &q);
                }
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = div_floor(&d[(t, j)], &p);
                d.col_submul(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.col_submul(j, t, &q);
                }
            }

            // Remainders are strictly smaller than the pivot; promote the smallest.
            let row_rem = (t + 1..m)
                .filter(|&i| !d[(i, t)].is_zero())
                .min_by_key(|&i| d[(i, t)].abs());
            let col_rem = (t + 1..n)
                .filter(|&j| !d[(t, j)].is_zero())
                .min_by_key(|&j| d[(t, j)].abs());
            match (row_rem, col_rem) {
                (Some(i), c) if c.is_none_or(|j| d[(i, t)].abs() <= d[(t, j)].abs()) => {
                    d.swap_rows(t, i);
                    if let Some(u) = u.as_mut() {
                        u.swap_rows(t, i);
                    }
                    continue;
                }
                (_, Some(j)) => {
                    d.swap_cols(t, j);
                    if let Some(v) = v.as_mut() {
                        v.swap_cols(t, j);
                    }
                    continue;
                }
                _ => {}
            }

            // Pivot must divide the whole trailing block.
            let offender = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !d[(i, j)].is_zero() && !d[(i, j)].is_multiple_of(&p))
            });
            match offender {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    d.row_submul(t, i, &minus_one);
                    if let Some(u) = u.as_mut() {
                        u.row_submul(t, i, &minus_one);
                    }
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
    }
    (d, u, v)
}
