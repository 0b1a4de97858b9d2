//! Finitely generated abelian groups and chain complexes of free abelian groups.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{input, Error, Result};
use crate::exactla::{kernel_basis, smith_diagonal, solve, IntMatrix};

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `2 <= d_1 | d_2 | ... | d_k`.
///
/// The representation is canonical: two values are isomorphic iff they are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FgAbGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_cyclic_orders(0, &[BigInt::from(order)])
    }

    /// `Z^free_rank ⊕ Z/o_1 ⊕ ...` for arbitrary positive orders, canonicalized.
    /// An order of zero contributes a free summand.
    pub fn from_cyclic_orders(free_rank: usize, orders: &[BigInt]) -> Self {
        let n = orders.len();
        let mut presentation = IntMatrix::zeros(free_rank + n, n);
        for (j, o) in orders.iter().enumerate() {
            presentation[(free_rank + j, j)] = o.clone();
        }
        canonical_form(&presentation)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    /// Group order, or `None` when the group is infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion_order())
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let orders: Vec<BigInt> = self
            .invariant_factors
            .iter()
            .chain(&other.invariant_factors)
            .cloned()
            .collect();
        Self::from_cyclic_orders(self.free_rank + other.free_rank, &orders)
    }
}

impl fmt::Display for FgAbGroup {
    /// `Z^r + Z/d1 + Z/d2 ...`, or `0` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The cokernel `Z^r / colspan(presentation)` in canonical form.
pub fn canonical_form(presentation: &IntMatrix) -> FgAbGroup {
    let diag = smith_diagonal(presentation);
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    FgAbGroup {
        free_rank: presentation.rows() - rank,
        invariant_factors: diag
            .into_iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .collect(),
    }
}

pub fn iso_test(a: &FgAbGroup, b: &FgAbGroup) -> bool {
    a == b
}

/// `ker(d_out) / im(d_in)` for `C_{i+1} --d_in--> C_i --d_out--> C_{i-1}`.
pub fn homology_at(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<FgAbGroup> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::ComplexValidity(format!(
            "d_out is {}x{} but d_in is {}x{}",
            d_out.rows(),
            d_out.cols(),
            d_in.rows(),
            d_in.cols()
        )));
    }
    if !(d_out * d_in).is_zero() {
        return Err(Error::ComplexValidity(
            "consecutive differentials do not compose to zero".into(),
        ));
    }
    let k = kernel_basis(d_out);
    let x = solve(&k, d_in)?
        .ok_or_else(|| Error::ComplexValidity("image is not contained in the kernel".into()))?;
    Ok(canonical_form(&x))
}

/// Bounded complex of free abelian groups in homological indexing.
///
/// `differentials[p]` is the matrix of `C_{bottom+p+1} -> C_{bottom+p}`, and `ranks[p]`
/// is the rank of `C_{bottom+p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    bottom_degree: i64,
    ranks: Vec<usize>,
    differentials: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Validates shapes and `d∘d = 0`.
    pub fn new(
        bottom_degree: i64,
        ranks: Vec<usize>,
        differentials: Vec<IntMatrix>,
    ) -> Result<Self> {
        let c = Self::new_unchecked(bottom_degree, ranks, differentials)?;
        c.validate()?;
        Ok(c)
    }

    /// Checks shapes only; `d∘d = 0` is left to [`ChainComplex::validate`].
    pub fn new_unchecked(
        bottom_degree: i64,
        ranks: Vec<usize>,
        differentials: Vec<IntMatrix>,
    ) -> Result<Self> {
        if ranks.is_empty() {
            return input("a chain complex needs at least one chain group");
        }
        if differentials.len() + 1 != ranks.len() {
            return Err(Error::ComplexValidity(format!(
                "{} chain groups need {} differentials, got {}",
                ranks.len(),
                ranks.len() - 1,
                differentials.len()
            )));
        }
        for (p, d) in differentials.iter().enumerate() {
            if d.shape() != (ranks[p], ranks[p + 1]) {
                return Err(Error::ComplexValidity(format!(
                    "differential out of degree {} has shape {:?}, expected {:?}",
                    bottom_degree + p as i64 + 1,
                    d.shape(),
                    (ranks[p], ranks[p + 1])
                )));
            }
        }
        Ok(ChainComplex {
            bottom_degree,
            ranks,
            differentials,
        })
    }

    pub fn validate(&self) -> Result<()> {
        for p in 1..self.differentials.len() {
            if !(&self.differentials[p - 1] * &self.differentials[p]).is_zero() {
                return Err(Error::ComplexValidity(format!(
                    "d∘d != 0 at degree {}",
                    self.bottom_degree + p as i64
                )));
            }
        }
        Ok(())
    }

    pub fn bottom_degree(&self) -> i64 {
        self.bottom_degree
    }

    pub fn top_degree(&self) -> i64 {
        self.bottom_degree + self.ranks.len() as i64 - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank_at(&self, degree: i64) -> usize {
        if degree < self.bottom_degree || degree > self.top_degree() {
            0
        } else {
            self.ranks[(degree - self.bottom_degree) as usize]
        }
    }

    pub fn differentials(&self) -> &[IntMatrix] {
        &self.differentials
    }

    /// Matrix of `d: C_degree -> C_{degree-1}`, with empty matrices past either end.
    pub fn differential_from(&self, degree: i64) -> IntMatrix {
        let src = self.rank_at(degree);
        let dst = self.rank_at(degree - 1);
        if degree > self.bottom_degree && degree <= self.top_degree() {
            self.differentials[(degree - self.bottom_degree - 1) as usize].clone()
        } else {
            IntMatrix::zeros(dst, src)
        }
    }

    pub fn homology(&self, degree: i64) -> Result<FgAbGroup> {
        if degree < self.bottom_degree || degree > self.top_degree() {
            return input(format!(
                "degree {degree} outside [{}, {}]",
                self.bottom_degree,
                self.top_degree()
            ));
        }
        homology_at(
            &self.differential_from(degree + 1),
            &self.differential_from(degree),
        )
    }

    /// Homology in every degree from bottom to top.
    pub fn all_homology(&self) -> Result<Vec<FgAbGroup>> {
        (self.bottom_degree..=self.top_degree())
            .map(|d| self.homology(d))
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(p, &r)| {
                let sign = if (self.bottom_degree + p as i64).rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                };
                sign * r as i64
            })
            .sum()
    }
}

pub fn homology(c: &ChainComplex, degree: i64) -> Result<FgAbGroup> {
    c.homology(degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn canonical_form_examples() {
        let g = canonical_form(&m(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(g.free_rank(), 0);
        assert_eq!(g.invariant_factors(), &[BigInt::from(6)]);
        assert_eq!(canonical_form(&IntMatrix::zeros(2, 0)), FgAbGroup::free(2));
        assert_eq!(canonical_form(&m(&[vec![1]])), FgAbGroup::trivial());
    }

    #[test]
    fn homology_at_examples() {
        assert_eq!(
            homology_at(&m(&[vec![2]]), &IntMatrix::zeros(0, 1)).unwrap(),
            FgAbGroup::cyclic(2)
        );
        assert_eq!(
            homology_at(&IntMatrix::zeros(1, 0), &m(&[vec![0]])).unwrap(),
            FgAbGroup::free(1)
        );
        assert_eq!(
            homology_at(&m(&[vec![1], vec![-1]]), &m(&[vec![1, 1]])).unwrap(),
            FgAbGroup::trivial()
        );
    }

    #[test]
    fn homology_at_rejects_invalid() {
        assert!(matches!(
            homology_at(&m(&[vec![1]]), &m(&[vec![1]])),
            Err(Error::ComplexValidity(_))
        ));
        assert!(matches!(
            homology_at(&m(&[vec![1]]), &m(&[vec![1, 1]])),
            Err(Error::ComplexValidity(_))
        ));
    }

    #[test]
    fn two_term_complexes() {
        let c = ChainComplex::new(0, vec![1, 1], vec![m(&[vec![5]])]).unwrap();
        assert_eq!(c.homology(0).unwrap(), FgAbGroup::cyclic(5));
        assert_eq!(c.homology(1).unwrap(), FgAbGroup::trivial());
        assert!(c.homology(2).is_err());
        assert!(c.homology(-1).is_err());

        let z = ChainComplex::new(0, vec![1, 1], vec![m(&[vec![0]])]).unwrap();
        assert_eq!(z.all_homology().unwrap(), vec![FgAbGroup::free(1); 2]);
    }

    #[test]
    fn rejects_nonzero_square() {
        let r = ChainComplex::new(0, vec![1, 1, 1], vec![m(&[vec![1]]), m(&[vec![1]])]);
        assert!(matches!(r, Err(Error::ComplexValidity(_))));
    }

    #[test]
    fn iso_test_examples() {
        let six = canonical_form(&m(&[vec![2, 0], vec![0, 3]]));
        assert!(iso_test(&six, &FgAbGroup::cyclic(6)));
        assert!(!iso_test(&FgAbGroup::free(1), &FgAbGroup::cyclic(2)));
        let a = FgAbGroup::free(1).direct_sum(&FgAbGroup::cyclic(2));
        assert!(iso_test(&a, &a.clone()));
    }

    #[test]
    fn display() {
        assert_eq!(
            FgAbGroup::free(1)
                .direct_sum(&FgAbGroup::cyclic(2))
                .to_string(),
            "Z + Z/2"
        );
        assert_eq!(FgAbGroup::trivial().to_string(), "0");
        assert_eq!(
            FgAbGroup::cyclic(2)
                .direct_sum(&FgAbGroup::cyclic(4))
                .to_string(),
            "Z/2 + Z/4"
        );
        assert_eq!(FgAbGroup::free(3).to_string(), "Z^3");
    }
}
