//! Tensor, symmetric, exterior and divided powers of free abelian groups.
//!
//! Every power of `Z^r` has a canonical basis indexed by tuples over `{0, ..., r-1}`:
//!
//! | kind     | index tuple             | element                     |
//! |----------|-------------------------|-----------------------------|
//! | `Tensor` | any word                | `e_{t1} ⊗ ... ⊗ e_{tn}`     |
//! | `Sym`    | weakly increasing       | monomial `e_{t1} ... e_{tn}`|
//! | `Ext`    | strictly increasing     | `e_{t1} ∧ ... ∧ e_{tn}`     |
//! | `Div`    | weakly increasing       | `Π_i γ_{a_i}(e_i)`, `a_i` = multiplicity of `i` |
//!
//! Bases are enumerated in lexicographic order of the tuples. With two generators
//! `x = e_0`, `y = e_1` and `n = 2`:
//!
//! * `Tensor`: `x⊗x, x⊗y, y⊗x, y⊗y`
//! * `Sym`: `x², xy, y²`
//! * `Ext`: `x∧y`
//! * `Div`: `γ₂(x), γ₁(x)γ₁(y), γ₂(y)`
//!
//! Induced maps are matrices in these bases, so `induced_map(f, m)[(i, j)]` is the
//! coefficient of basis element `i` of the target in the image of basis element `j`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{input, Error, Result};
use crate::exactla::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Functor {
    Tensor,
    Sym,
    Ext,
    Div,
}

impl Functor {
    pub const ALL: [Functor; 4] = [Functor::Tensor, Functor::Sym, Functor::Ext, Functor::Div];

    pub fn name(self) -> &'static str {
        match self {
            Functor::Tensor => "tensor",
            Functor::Sym => "sym",
            Functor::Ext => "ext",
            Functor::Div => "div",
        }
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Functor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tensor" => Ok(Functor::Tensor),
            "sym" => Ok(Functor::Sym),
            "ext" => Ok(Functor::Ext),
            "div" => Ok(Functor::Div),
            other => input(format!("unknown functor '{other}'")),
        }
    }
}

/// A functor together with its degree `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FunctorKind {
    kind: Functor,
    degree: usize,
}

impl FunctorKind {
    pub fn new(kind: Functor, degree: usize) -> Result<Self> {
        if degree == 0 {
            return input("functor degree must be at least 1");
        }
        Ok(FunctorKind { kind, degree })
    }

    pub fn kind(&self) -> Functor {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// Index tuple of a basis element; see the module documentation for the conventions.
pub type BasisIndex = Vec<usize>;

static BINOMIALS: RwLock<Vec<Vec<BigInt>>> = RwLock::new(Vec::new());

/// `C(n, k)`, from a shared Pascal table grown on demand.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    {
        let table = BINOMIALS.read().expect("binomial table poisoned");
        if let Some(row) = table.get(n) {
            return row[k].clone();
        }
    }
    let mut table = BINOMIALS.write().expect("binomial table poisoned");
    while table.len() <= n {
        let next = match table.last() {
            None => vec![BigInt::one()],
            Some(prev) => {
                let mut row = Vec::with_capacity(prev.len() + 1);
                row.push(BigInt::one());
                for w in prev.windows(2) {
                    row.push(&w[0] + &w[1]);
                }
                row.push(BigInt::one());
                row
            }
        };
        table.push(next);
    }
    table[n][k].clone()
}

fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Rank of `T^n(Z^r)`; degree 0 gives rank 1 for every kind.
pub fn dim_of(kind: Functor, n: usize, r: usize) -> usize {
    match kind {
        Functor::Tensor => r.pow(n as u32),
        Functor::Sym | Functor::Div => {
            if r == 0 {
                usize::from(n == 0)
            } else {
                binomial_usize(r + n - 1, n)
            }
        }
        Functor::Ext => binomial_usize(r, n),
    }
}

pub fn dim(f: FunctorKind, r: usize) -> usize {
    dim_of(f.kind, f.degree, r)
}

/// Lexicographically enumerated basis of `T^n(Z^r)` with reverse lookup.
#[derive(Clone, Debug)]
pub struct Basis {
    tuples: Vec<BasisIndex>,
    position: HashMap<BasisIndex, usize>,
}

impl Basis {
    pub fn new(kind: Functor, n: usize, r: usize) -> Self {
        let mut tuples = Vec::new();
        let mut cur = Vec::with_capacity(n);
        enumerate(kind, n, r, 0, &mut cur, &mut tuples);
        let position = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Basis { tuples, position }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[BasisIndex] {
        &self.tuples
    }

    pub fn position(&self, t: &[usize]) -> Option<usize> {
        self.position.get(t).copied()
    }
}

fn enumerate(
    kind: Functor,
    n: usize,
    r: usize,
    start: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<BasisIndex>,
) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    let lo = if kind == Functor::Tensor { 0 } else { start };
    for i in lo..r {
        cur.push(i);
        let next = if kind == Functor::Ext { i + 1 } else { i };
        enumerate(kind, n, r, next, cur, out);
        cur.pop();
    }
}

pub fn exponents(t: &[usize], r: usize) -> Vec<usize> {
    let mut e = vec![0; r];
    for &i in t {
        e[i] += 1;
    }
    e
}

pub fn tuple_from_exponents(e: &[usize]) -> BasisIndex {
    e.iter()
        .enumerate()
        .flat_map(|(i, &k)| std::iter::repeat_n(i, k))
        .collect()
}

pub fn induced_map(f: FunctorKind, m: &IntMatrix) -> IntMatrix {
    induced_map_of(f.kind, f.degree, m)
}

/// Matrix of `T^n(m)` for `m: Z^cols -> Z^rows`; degree 0 gives `[[1]]`.
pub fn induced_map_of(kind: Functor, n: usize, m: &IntMatrix) -> IntMatrix {
    match kind {
        Functor::Tensor => (0..n).fold(IntMatrix::identity(1), |acc, _| acc.kron(m)),
        Functor::Ext => exterior_map(n, m),
        Functor::Sym => symmetric_map(n, m),
        Functor::Div => divided_map(n, m),
    }
}

fn exterior_map(n: usize, m: &IntMatrix) -> IntMatrix {
    let src = Basis::new(Functor::Ext, n, m.cols());
    let dst = Basis::new(Functor::Ext, n, m.rows());
    IntMatrix::from_fn(dst.len(), src.len(), |i, j| {
        m.submatrix(&dst.tuples[i], &src.tuples[j])
            .det()
            .expect("square minor")
    })
}

fn symmetric_map(n: usize, m: &IntMatrix) -> IntMatrix {
    let src = Basis::new(Functor::Sym, n, m.cols());
    let dst = Basis::new(Functor::Sym, n, m.rows());
    let mut out = IntMatrix::zeros(dst.len(), src.len());
    for (j, t) in src.tuples.iter().enumerate() {
        let mut poly: BTreeMap<BasisIndex, BigInt> = BTreeMap::new();
        poly.insert(Vec::new(), BigInt::one());
        for &k in t {
            let mut next: BTreeMap<BasisIndex, BigInt> = BTreeMap::new();
            for (mono, c) in &poly {
                for i in 0..m.rows() {
                    let a = &m[(i, k)];
                    if a.is_zero() {
                        continue;
                    }
                    *next.entry(insert_sorted(mono, i)).or_default() += c * a;
                }
            }
            poly = next;
        }
        for (mono, c) in poly {
            out[(dst.position(&mono).expect("monomial in basis"), j)] = c;
        }
    }
    out
}

type DividedPoly = BTreeMap<Vec<usize>, BigInt>;

/// `γ_a(Σ_i c_i f_i) = Σ_{b_1+...+b_r = a} Π_i c_i^{b_i} γ_{b_i}(f_i)`, keyed by exponent vector.
fn divided_power_of_linear(a: usize, coeffs: &[BigInt]) -> DividedPoly {
    fn go(
        i: usize,
        left: usize,
        coeffs: &[BigInt],
        exps: &mut Vec<usize>,
        c: BigInt,
        out: &mut DividedPoly,
    ) {
        if i == coeffs.len() {
            if left == 0 {
                *out.entry(exps.clone()).or_default() += c;
            }
            return;
        }
        let max = if coeffs[i].is_zero() { 0 } else { left };
        let mut power = BigInt::one();
        for b in 0..=max {
            exps.push(b);
            go(i + 1, left - b, coeffs, exps, &c * &power, out);
            exps.pop();
            power *= &coeffs[i];
        }
    }
    let mut out = DividedPoly::new();
    go(0, a, coeffs, &mut Vec::new(), BigInt::one(), &mut out);
    out
}

/// Product in the divided power algebra: `γ_a(x)γ_b(x) = C(a+b, a) γ_{a+b}(x)`.
fn divided_product(p: &DividedPoly, q: &DividedPoly) -> DividedPoly {
    let mut out = DividedPoly::new();
    for (u, c) in p {
        for (w, d) in q {
            let mut coeff = c * d;
            let exps: Vec<usize> = u
                .iter()
                .zip(w)
                .map(|(&x, &y)| {
                    if x > 0 && y > 0 {
                        coeff *= binomial(x + y, x);
                    }
                    x + y
                })
                .collect();
            *out.entry(exps).or_default() += coeff;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn divided_map(n: usize, m: &IntMatrix) -> IntMatrix {
    let src = Basis::new(Functor::Div, n, m.cols());
    let dst = Basis::new(Functor::Div, n, m.rows());
    let mut out = IntMatrix::zeros(dst.len(), src.len());
    for (j, t) in src.tuples.iter().enumerate() {
        let mut acc = DividedPoly::new();
        acc.insert(vec![0; m.rows()], BigInt::one());
        for (k, &a) in exponents(t, m.cols()).iter().enumerate() {
            if a > 0 {
                acc = divided_product(&acc, &divided_power_of_linear(a, &m.column(k)));
            }
        }
        for (exps, c) in acc {
            let pos = dst
                .position(&tuple_from_exponents(&exps))
                .expect("divided monomial in basis");
            out[(pos, j)] = c;
        }
    }
    out
}

fn insert_sorted(t: &[usize], i: usize) -> BasisIndex {
    let pos = t.partition_point(|&x| x <= i);
    let mut out = Vec::with_capacity(t.len() + 1);
    out.extend_from_slice(&t[..pos]);
    out.push(i);
    out.extend_from_slice(&t[pos..]);
    out
}

/// Sparse form of [`sym_mult`]: `(monomial, coefficient)` terms of `v · m`.
pub(crate) fn sym_mult_terms(v: &[BigInt], m: &[usize]) -> Vec<(BasisIndex, BigInt)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (insert_sorted(m, i), c.clone()))
        .collect()
}

/// Sparse form of [`ext_mult`]: `(wedge, coefficient)` terms of `v ∧ m`.
pub(crate) fn ext_mult_terms(v: &[BigInt], m: &[usize]) -> Vec<(BasisIndex, BigInt)> {
    v.iter()
        .enumerate()
        .filter(|(i, c)| !c.is_zero() && !m.contains(i))
        .map(|(i, c)| {
            let pos = m.partition_point(|&x| x < i);
            let c = if pos % 2 == 0 { c.clone() } else { -c };
            (insert_sorted(m, i), c)
        })
        .collect()
}

fn dense(terms: Vec<(BasisIndex, BigInt)>, basis: &Basis) -> Vec<BigInt> {
    let mut col = vec![BigInt::zero(); basis.len()];
    for (t, c) in terms {
        col[basis.position(&t).expect("term in basis")] += c;
    }
    col
}

/// Multiplies the monomial `m ∈ S^k(Z^r)` by the vector `v ∈ Z^r`; returns a column
/// over the basis of `S^{k+1}(Z^r)`.
pub fn sym_mult(v: &[BigInt], m: &[usize]) -> Vec<BigInt> {
    let basis = Basis::new(Functor::Sym, m.len() + 1, v.len());
    dense(sym_mult_terms(v, m), &basis)
}

/// `v ∧ m` for `m ∈ Λ^k(Z^r)`, as a column over the basis of `Λ^{k+1}(Z^r)`.
pub fn ext_mult(v: &[BigInt], m: &[usize]) -> Vec<BigInt> {
    let basis = Basis::new(Functor::Ext, m.len() + 1, v.len());
    dense(ext_mult_terms(v, m), &basis)
}

/// Lowers the exponent of generator `j` in the divided monomial `m` by one.
///
/// This is the `Γ^{p-1} ⊗ Γ^1` component of the divided-power comultiplication, which
/// sends `γ_a(e_j)` to `γ_{a-1}(e_j) ⊗ e_j` with coefficient exactly 1.
pub fn div_contract(m: &[usize], j: usize) -> Option<BasisIndex> {
    let pos = m.iter().position(|&x| x == j)?;
    let mut out = m.to_vec();
    out.remove(pos);
    Some(out)
}

/// Diagonal matrix of multinomial coefficients `n! / (a_1! ... a_r!)` on the monomial
/// basis of degree `n`; the matrix of the map `Γ^n -> S^n`.
pub fn norm_matrix(n: usize, r: usize) -> IntMatrix {
    let basis = Basis::new(Functor::Sym, n, r);
    let diag: Vec<BigInt> = basis
        .tuples
        .iter()
        .map(|t| {
            let mut left = n;
            exponents(t, r).iter().fold(BigInt::one(), |acc, &a| {
                let c = binomial(left, a);
                left -= a;
                acc * c
            })
        })
        .collect();
    IntMatrix::diagonal(basis.len(), basis.len(), &diag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn kind(k: Functor, n: usize) -> FunctorKind {
        FunctorKind::new(k, n).unwrap()
    }

    #[test]
    fn dims() {
        assert_eq!(dim(kind(Functor::Ext, 2), 2), 1);
        assert_eq!(dim(kind(Functor::Sym, 2), 2), 3);
        assert_eq!(dim(kind(Functor::Ext, 3), 2), 0);
        assert_eq!(dim(kind(Functor::Tensor, 3), 2), 8);
        assert_eq!(dim(kind(Functor::Div, 3), 0), 0);
        assert_eq!(dim_of(Functor::Sym, 0, 0), 1);
        for k in Functor::ALL {
            for n in 0..4 {
                for r in 0..4 {
                    assert_eq!(Basis::new(k, n, r).len(), dim_of(k, n, r), "{k} {n} {r}");
                }
            }
        }
        assert!(FunctorKind::new(Functor::Sym, 0).is_err());
    }

    #[test]
    fn basis_order() {
        let b = Basis::new(Functor::Sym, 2, 2);
        assert_eq!(b.tuples(), &[vec![0, 0], vec![0, 1], vec![1, 1]]);
        let b = Basis::new(Functor::Tensor, 2, 2);
        assert_eq!(
            b.tuples(),
            &[vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        let b = Basis::new(Functor::Ext, 2, 3);
        assert_eq!(b.tuples(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn induced_examples() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(
            induced_map(kind(Functor::Ext, 2), &m),
            IntMatrix::from_rows(&[vec![-2]])
        );

        // x -> x, y -> x + y
        let u = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(
            induced_map(kind(Functor::Sym, 2), &u),
            IntMatrix::from_rows(&[vec![1, 1, 1], vec![0, 1, 2], vec![0, 0, 1]])
        );
        assert_eq!(
            induced_map(kind(Functor::Div, 2), &u),
            IntMatrix::from_rows(&[vec![1, 2, 1], vec![0, 1, 1], vec![0, 0, 1]])
        );
        let c = IntMatrix::from_rows(&[vec![7]]);
        assert_eq!(
            induced_map(kind(Functor::Div, 2), &c),
            IntMatrix::from_rows(&[vec![49]])
        );
        assert_eq!(
            induced_map(kind(Functor::Div, 3), &c),
            IntMatrix::from_rows(&[vec![343]])
        );
    }

    #[test]
    fn divided_square_of_sum() {
        // γ₂(x + y) = γ₂(x) + γ₁(x)γ₁(y) + γ₂(y); γ₁(x)² = 2γ₂(x)
        let p = divided_power_of_linear(2, &big(&[1, 1]));
        assert_eq!(p.len(), 3);
        assert!(p.values().all(|c| c.is_one()));
        let x = divided_power_of_linear(1, &big(&[1, 0]));
        let sq = divided_product(&x, &x);
        assert_eq!(sq.get(&vec![2, 0]), Some(&BigInt::from(2)));
    }

    #[test]
    fn sym_mult_examples() {
        assert_eq!(sym_mult(&big(&[1, 0]), &[0]), big(&[1, 0, 0]));
        assert_eq!(sym_mult(&big(&[2, 1]), &[1]), big(&[0, 2, 1]));
        assert_eq!(sym_mult(&big(&[0, 0]), &[1]), big(&[0, 0, 0]));
    }

    #[test]
    fn ext_mult_examples() {
        assert_eq!(ext_mult(&big(&[1, 0]), &[1]), big(&[1]));
        assert_eq!(ext_mult(&big(&[0, 1]), &[0]), big(&[-1]));
        assert_eq!(ext_mult(&big(&[1, 0]), &[0, 1]), Vec::<BigInt>::new());
        assert_eq!(ext_mult(&big(&[1, 0, 0]), &[0, 1]), big(&[0]));
    }

    #[test]
    fn div_contract_examples() {
        assert_eq!(div_contract(&[0, 0], 0), Some(vec![0]));
        assert_eq!(div_contract(&[0, 1], 1), Some(vec![0]));
        assert_eq!(div_contract(&[0, 0], 1), None);
    }

    #[test]
    fn norm_matrix_entries() {
        let n = norm_matrix(2, 2);
        assert_eq!(n, IntMatrix::diagonal(3, 3, &big(&[1, 2, 1])));
        let n = norm_matrix(3, 2);
        assert_eq!(n, IntMatrix::diagonal(4, 4, &big(&[1, 3, 3, 1])));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
