use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gmodule::GModuleFree;
use super::presentation::FpGroupPresentation;
use super::table::FiniteGroupTable;
use crate::abgrp::{canonical_form, homology_at, FgAbGroup};
use crate::error::{input, Error, Result};
use crate::exactla::{kernel_basis, IntMatrix};

/// Default cap on the number of entries of a single bar differential.
pub const DEFAULT_BAR_BUDGET: usize = 1_000_000;

/// `H_1(F, N)` for the free group `F` on the presentation's generators, acting on `N`
/// through `π`: the kernel of `N^S -> N`, `(n_s) ↦ Σ_s (π(s) - 1)·n_s`.
pub fn h1_free(pres: &FpGroupPresentation, n: &GModuleFree) -> Result<FgAbGroup> {
    if n.group() != pres.target() {
        return input("coefficient module is over a different group");
    }
    let id = IntMatrix::identity(n.rank());
    let mut map = IntMatrix::zeros(n.rank(), 0);
    for &g in pres.assignment() {
        map = map.hstack(&n.action(g).checked_sub(&id)?)?;
    }
    Ok(FgAbGroup::free(kernel_basis(&map).cols()))
}

/// Homology of a cyclic group from its periodic resolution.
///
/// With `t` a generator and `N = Σ_j t^j`, the complex is
/// `M <-(t-1)- M <-N- M <-(t-1)- M <-N- ...`, so `H_0 = M / (t-1)M`,
/// `H_odd = ker(t-1) / im N` and `H_even = ker N / im(t-1)`.
pub fn homology_cyclic(m: usize, coeff: &GModuleFree, i: usize) -> Result<FgAbGroup> {
    let g = coeff.group();
    if g.order() != m {
        return input(format!("group has order {}, expected {m}", g.order()));
    }
    let t = g
        .cyclic_generator()
        .ok_or_else(|| Error::Input("coefficient group is not cyclic".into()))?;
    let id = IntMatrix::identity(coeff.rank());
    let t_minus_1 = coeff.action(t).checked_sub(&id)?;
    let mut norm = IntMatrix::zeros(coeff.rank(), coeff.rank());
    let mut power = 0;
    for _ in 0..m {
        norm = add(&norm, coeff.action(power));
        power = g.mul(power, t);
    }
    if i == 0 {
        return Ok(canonical_form(&t_minus_1));
    }
    if i % 2 == 1 {
        homology_at(&norm, &t_minus_1)
    } else {
        homology_at(&t_minus_1, &norm)
    }
}

fn add(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    IntMatrix::from_fn(a.rows(), a.cols(), |i, j| &a[(i, j)] + &b[(i, j)])
}

/// Normalized bar chains: tuples of non-identity elements in lexicographic order.
fn bar_tuples(g: &FiniteGroupTable, k: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..n).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn tuple_index(t: &[usize], n: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * (n - 1) + (x - 1))
}

/// `d: C_k -> C_{k-1}` of the normalized bar complex `C_k = M ⊗ Z[(G \ e)^k]`,
/// basis `[g_1|...|g_k] ⊗ m_j` at index `tuple * rank + j`:
///
/// `d(m[g_1|...|g_k]) = (g_1⁻¹ m)[g_2|...] + Σ_i (-1)^i m[...|g_i g_{i+1}|...] + (-1)^k m[g_1|...|g_{k-1}]`,
/// dropping tuples that contain the identity.
fn bar_differential(coeff: &GModuleFree, k: usize) -> IntMatrix {
    let g = coeff.group();
    let n = g.order();
    let r = coeff.rank();
    let src = bar_tuples(g, k);
    let rows = (n - 1).pow(k as u32 - 1) * r;
    let mut d = IntMatrix::zeros(rows, src.len() * r);
    let one = BigInt::one();
    for (ti, t) in src.iter().enumerate() {
        let first = coeff.action(g.inv(t[0]));
        let tail = tuple_index(&t[1..], n);
        for a in 0..r {
            for b in 0..r {
                let x = &first[(a, b)];
                if !x.is_zero() {
                    d[(tail * r + a, ti * r + b)] += x;
                }
            }
        }
        for i in 0..k - 1 {
            let prod = g.mul(t[i], t[i + 1]);
            if prod == 0 {
                continue;
            }
            let mut face = t[..i].to_vec();
            face.push(prod);
            face.extend_from_slice(&t[i + 2..]);
            let fi = tuple_index(&face, n);
            for j in 0..r {
                if i % 2 == 0 {
                    d[(fi * r + j, ti * r + j)] -= &one;
                } else {
                    d[(fi * r + j, ti * r + j)] += &one;
                }
            }
        }
        let last = tuple_index(&t[..k - 1], n);
        for j in 0..r {
            if k.is_multiple_of(2) {
                d[(last * r + j, ti * r + j)] += &one;
            } else {
                d[(last * r + j, ti * r + j)] -= &one;
            }
        }
    }
    d
}

/// `H_i(G, M)` from the normalized bar complex.
///
/// Fails with [`Error::Resource`] when the differential out of degree `i + 1` would
/// have more than `budget` entries.
pub fn homology_bar(
    g: &FiniteGroupTable,
    coeff: &GModuleFree,
    i: usize,
    budget: usize,
) -> Result<FgAbGroup> {
    if coeff.group().as_ref() != g {
        return input("coefficient module is over a different group");
    }
    let r = coeff.rank();
    let chains = |k: usize| {
        (g.order() - 1)
            .checked_pow(k as u32)
            .and_then(|c| c.checked_mul(r))
    };
    let size = chains(i)
        .zip(chains(i + 1))
        .and_then(|(a, b)| a.checked_mul(b));
    match size {
        Some(s) if s <= budget => {}
        _ => {
            return Err(Error::Resource(format!(
                "bar differential into degree {i} exceeds {budget} entries"
            )))
        }
    }
    let d_in = bar_differential(coeff, i + 1);
    let d_out = if i == 0 {
        IntMatrix::zeros(0, r)
    } else {
        bar_differential(coeff, i)
    };
    homology_at(&d_in, &d_out)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::grouphom::{augmentation_ideal, coinvariants, group_ring};

    fn cyc(m: usize) -> Arc<FiniteGroupTable> {
        Arc::new(FiniteGroupTable::cyclic(m))
    }

    fn pattern(m: u64) -> Vec<FgAbGroup> {
        vec![
            FgAbGroup::free(1),
            FgAbGroup::cyclic(m),
            FgAbGroup::trivial(),
            FgAbGroup::cyclic(m),
            FgAbGroup::trivial(),
        ]
    }

    #[test]
    fn cyclic_trivial_coefficients() {
        for m in [2usize, 3] {
            let z = GModuleFree::trivial(cyc(m), 1);
            let h: Vec<_> = (0..5).map(|i| homology_cyclic(m, &z, i).unwrap()).collect();
            assert_eq!(h, pattern(m as u64));
        }
    }

    #[test]
    fn h0_is_coinvariants() {
        let g = cyc(4);
        for m in [
            augmentation_ideal(&g),
            group_ring(&g),
            GModuleFree::trivial(g.clone(), 2),
        ] {
            let c = coinvariants(&m);
            assert_eq!(homology_cyclic(4, &m, 0).unwrap(), c);
            assert_eq!(homology_bar(&g, &m, 0, DEFAULT_BAR_BUDGET).unwrap(), c);
        }
    }

    #[test]
    fn bar_matches_periodic() {
        for m in [2usize, 3, 4] {
            let z = GModuleFree::trivial(cyc(m), 1);
            for i in 0..5 {
                assert_eq!(
                    homology_bar(&cyc(m), &z, i, DEFAULT_BAR_BUDGET).unwrap(),
                    homology_cyclic(m, &z, i).unwrap(),
                    "m={m} i={i}"
                );
            }
        }
    }

    #[test]
    fn bar_differentials_square_to_zero() {
        let g = Arc::new(FiniteGroupTable::cyclic(2).product(&FiniteGroupTable::cyclic(3)));
        let m = augmentation_ideal(&g);
        for k in 2..4 {
            assert!((&bar_differential(&m, k - 1) * &bar_differential(&m, k)).is_zero());
        }
    }

    #[test]
    fn klein_four_h1() {
        let v4 = Arc::new(FiniteGroupTable::cyclic(2).product(&FiniteGroupTable::cyclic(2)));
        let z = GModuleFree::trivial(v4.clone(), 1);
        let h1 = homology_bar(&v4, &z, 1, DEFAULT_BAR_BUDGET).unwrap();
        assert_eq!(h1, FgAbGroup::cyclic(2).direct_sum(&FgAbGroup::cyclic(2)));
    }

    #[test]
    fn budget_and_cyclicity_errors() {
        let z = GModuleFree::trivial(cyc(4), 1);
        assert!(matches!(
            homology_bar(&cyc(4), &z, 4, 100),
            Err(Error::Resource(_))
        ));
        let v4 = Arc::new(FiniteGroupTable::cyclic(2).product(&FiniteGroupTable::cyclic(2)));
        let zv = GModuleFree::trivial(v4, 1);
        assert!(matches!(homology_cyclic(4, &zv, 1), Err(Error::Input(_))));
        assert!(homology_cyclic(3, &z, 1).is_err());
    }

    #[test]
    fn h1_free_examples() {
        let g = cyc(2);
        let p = FpGroupPresentation::from_strings(&["a"], &["aa"], g.clone(), vec![1]).unwrap();
        assert_eq!(
            h1_free(&p, &GModuleFree::trivial(g.clone(), 1)).unwrap(),
            FgAbGroup::free(1)
        );
        assert_eq!(h1_free(&p, &group_ring(&g)).unwrap(), FgAbGroup::free(1));
        let q = FpGroupPresentation::from_strings(
            &["a", "b", "c"],
            &["aa", "bA", "cA"],
            g.clone(),
            vec![1, 1, 1],
        )
        .unwrap();
        assert_eq!(
            h1_free(&q, &GModuleFree::trivial(g, 1)).unwrap(),
            FgAbGroup::free(3)
        );
    }
}
