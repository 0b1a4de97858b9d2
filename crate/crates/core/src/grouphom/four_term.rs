use num_integer::Integer;

use super::gmodule::{coinvariants, tensor_gmodule, tensor_power, GModuleFree};
use super::homology::{h1_free, homology_bar, homology_cyclic};
use super::magnus::magnus_sequence;
use super::presentation::FpGroupPresentation;
use crate::abgrp::FgAbGroup;
use crate::error::{input, Result};

/// The four terms of
/// `0 -> H_2n(G,M) -> H_0(G, R_ab^⊗n ⊗ M) -> H_1(F, R_ab^⊗(n-1) ⊗ M) -> H_2n-1(G,M) -> 0`
/// and the numerical conditions its exactness forces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourTermReport {
    pub n: usize,
    pub a: FgAbGroup,
    pub b: FgAbGroup,
    pub c: FgAbGroup,
    pub d: FgAbGroup,
    /// `rank A - rank B + rank C - rank D`.
    pub rank_alternating_sum: i64,
    /// `|A|·|C| = |B|·|D|`, or `None` when some term is infinite.
    pub order_product_holds: Option<bool>,
    /// `A ↪ B` forces `rank A <= rank B` and `|tors A|` dividing `|tors B|`.
    pub left_injective_holds: bool,
}

impl FourTermReport {
    pub fn passes(&self) -> bool {
        self.rank_alternating_sum == 0
            && self.order_product_holds != Some(false)
            && self.left_injective_holds
    }
}

/// `H_i(G, M)`, periodic resolution for cyclic groups and bar complex otherwise.
pub fn group_homology(coeff: &GModuleFree, i: usize, budget: usize) -> Result<FgAbGroup> {
    let g = coeff.group();
    if g.cyclic_generator().is_some() {
        homology_cyclic(g.order(), coeff, i)
    } else {
        homology_bar(g, coeff, i, budget)
    }
}

pub fn four_term_report(
    pres: &FpGroupPresentation,
    coeff: &GModuleFree,
    n: usize,
    budget: usize,
) -> Result<FourTermReport> {
    if n == 0 {
        return input("the 4-term sequence needs n >= 1");
    }
    if coeff.group() != pres.target() {
        return input("coefficient module is over a different group");
    }
    let relation = magnus_sequence(pres).relation_module;
    let a = group_homology(coeff, 2 * n, budget)?;
    let d = group_homology(coeff, 2 * n - 1, budget)?;
    let b = coinvariants(&tensor_gmodule(&tensor_power(&relation, n), coeff)?);
    let c = h1_free(
        pres,
        &tensor_gmodule(&tensor_power(&relation, n - 1), coeff)?,
    )?;

    let rank = |g: &FgAbGroup| g.free_rank() as i64;
    let rank_alternating_sum = rank(&a) - rank(&b) + rank(&c) - rank(&d);
    let order_product_holds = match (a.order(), b.order(), c.order(), d.order()) {
        (Some(oa), Some(ob), Some(oc), Some(od)) => Some(oa * oc == ob * od),
        _ => None,
    };
    let left_injective_holds =
        a.free_rank() <= b.free_rank() && b.torsion_order().is_multiple_of(&a.torsion_order());
    Ok(FourTermReport {
        n,
        a,
        b,
        c,
        d,
        rank_alternating_sum,
        order_product_holds,
        left_injective_holds,
    })
}
