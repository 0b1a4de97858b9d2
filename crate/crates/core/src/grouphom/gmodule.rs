use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::table::FiniteGroupTable;
use crate::abgrp::{canonical_form, FgAbGroup};
use crate::error::{input, Result};
use crate::exactla::IntMatrix;

/// A left G-module whose underlying abelian group is free of finite rank.
///
/// `action(g)` is the matrix of `x ↦ g·x` in the chosen basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModuleFree {
    group: Arc<FiniteGroupTable>,
    rank: usize,
    action: Vec<IntMatrix>,
}

impl GModuleFree {
    /// Checks shapes, `action(e) = 1` and `action(g)·action(h) = action(gh)`.
    pub fn new(group: Arc<FiniteGroupTable>, rank: usize, action: Vec<IntMatrix>) -> Result<Self> {
        if action.len() != group.order() {
            return input("one action matrix per group element is required");
        }
        if action.iter().any(|m| m.shape() != (rank, rank)) {
            return input(format!("action matrices must be {rank}x{rank}"));
        }
        if action[0] != IntMatrix::identity(rank) {
            return input("identity element does not act trivially");
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                if &action[g] * &action[h] != action[group.mul(g, h)] {
                    return input(format!("action is not multiplicative at ({g}, {h})"));
                }
            }
        }
        Ok(GModuleFree {
            group,
            rank,
            action,
        })
    }

    pub(crate) fn new_unchecked(
        group: Arc<FiniteGroupTable>,
        rank: usize,
        action: Vec<IntMatrix>,
    ) -> Self {
        GModuleFree {
            group,
            rank,
            action,
        }
    }

    /// `Z^rank` with every element acting as the identity.
    pub fn trivial(group: Arc<FiniteGroupTable>, rank: usize) -> Self {
        let action = vec![IntMatrix::identity(rank); group.order()];
        Self::new_unchecked(group, rank, action)
    }

    pub fn group(&self) -> &Arc<FiniteGroupTable> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn action(&self, g: usize) -> &IntMatrix {
        &self.action[g]
    }

    pub fn actions(&self) -> &[IntMatrix] {
        &self.action
    }
}

/// `Z[G]` with basis the group elements and `g` acting by left multiplication.
pub fn group_ring(g: &Arc<FiniteGroupTable>) -> GModuleFree {
    let n = g.order();
    let action = (0..n)
        .map(|a| {
            let mut m = IntMatrix::zeros(n, n);
            for h in 0..n {
                m[(g.mul(a, h), h)] = BigInt::one();
            }
            m
        })
        .collect();
    GModuleFree::new_unchecked(g.clone(), n, action)
}

/// `Δ(G)` with basis `{h - 1 : h ≠ e}` (basis index `h - 1`), using
/// `g·(h - 1) = (gh - 1) - (g - 1)`.
pub fn augmentation_ideal(g: &Arc<FiniteGroupTable>) -> GModuleFree {
    let n = g.order();
    let action = (0..n)
        .map(|a| {
            let mut m = IntMatrix::zeros(n - 1, n - 1);
            for h in 1..n {
                let gh = g.mul(a, h);
                if gh != 0 {
                    m[(gh - 1, h - 1)] += 1;
                }
                if a != 0 {
                    m[(a - 1, h - 1)] -= 1;
                }
            }
            m
        })
        .collect();
    GModuleFree::new_unchecked(g.clone(), n - 1, action)
}

/// `a ⊗ b` with the diagonal action; basis `a_i ⊗ b_j` at index `i * b.rank + j`.
pub fn tensor_gmodule(a: &GModuleFree, b: &GModuleFree) -> Result<GModuleFree> {
    if a.group != b.group {
        return input("tensor product of modules over different groups");
    }
    let action = a
        .action
        .iter()
        .zip(&b.action)
        .map(|(x, y)| x.kron(y))
        .collect();
    Ok(GModuleFree::new_unchecked(
        a.group.clone(),
        a.rank * b.rank,
        action,
    ))
}

/// `m^{⊗k}`; `k = 0` gives the trivial module `Z`.
pub fn tensor_power(m: &GModuleFree, k: usize) -> GModuleFree {
    (0..k).fold(GModuleFree::trivial(m.group.clone(), 1), |acc, _| {
        tensor_gmodule(&acc, m).expect("same group")
    })
}

/// `H_0(G, M) = M / <g·x - x>`.
pub fn coinvariants(m: &GModuleFree) -> FgAbGroup {
    let id = IntMatrix::identity(m.rank);
    let relations = m
        .action
        .iter()
        .skip(1)
        .fold(IntMatrix::zeros(m.rank, 0), |acc, a| {
            acc.hstack(&a.checked_sub(&id).expect("square"))
                .expect("same rows")
        });
    canonical_form(&relations)
}
