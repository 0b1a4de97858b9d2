use num_bigint::BigInt;
use num_traits::Zero;

use super::gmodule::GModuleFree;
use super::presentation::{FpGroupPresentation, Letter};
use crate::exactla::{kernel_basis, solve, IntMatrix};

/// Fox derivative `∂w/∂s`, pushed forward to `Z[G]`: a coefficient per group element.
///
/// Uses `∂(uv)/∂s = ∂u/∂s + π(u)·∂v/∂s`, `∂s/∂s = 1`, `∂t/∂s = 0` and
/// `∂(s⁻¹)/∂s = -π(s)⁻¹`.
pub fn fox_derivative(w: &[Letter], s: usize, pres: &FpGroupPresentation) -> Vec<BigInt> {
    let g = pres.target();
    let mut out = vec![BigInt::zero(); g.order()];
    let mut prefix = 0;
    for &l in w {
        let img = pres.letter_image(l);
        if l.generator == s {
            if l.inverse {
                out[g.mul(prefix, img)] -= 1;
            } else {
                out[prefix] += 1;
            }
        }
        prefix = g.mul(prefix, img);
    }
    out
}

/// The Fox derivatives of a relator stacked as a vector of `Z[G]^S`, coordinate
/// `s * |G| + g` (the column layout of [`MagnusSequence::sigma`]).
pub fn fox_vector(w: &[Letter], pres: &FpGroupPresentation) -> Vec<BigInt> {
    (0..pres.generator_count())
        .flat_map(|s| fox_derivative(w, s, pres))
        .collect()
}

/// `0 -> R_ab -> Z[G] ⊗ Δ(F) -> Δ(G) -> 0` in coordinates.
#[derive(Clone, Debug)]
pub struct MagnusSequence {
    /// `(|G| - 1) × (|G|·|S|)`; column `s * |G| + g` is `g(π(s) - 1)` in the basis
    /// `{h - 1 : h ≠ e}` of `Δ(G)`.
    pub sigma: IntMatrix,
    /// `ker σ` with the action inherited from left multiplication on `Z[G]^S`.
    pub relation_module: GModuleFree,
    /// Basis of `ker σ` as columns in `Z[G]^S`.
    pub inclusion: IntMatrix,
}

/// Left multiplication by `a` on `Z[G]^S`, block by block.
fn free_module_action(pres: &FpGroupPresentation, a: usize) -> IntMatrix {
    let g = pres.target();
    let n = g.order();
    let k = pres.generator_count();
    let mut m = IntMatrix::zeros(n * k, n * k);
    for s in 0..k {
        for h in 0..n {
            m[(s * n + g.mul(a, h), s * n + h)] = BigInt::from(1);
        }
    }
    m
}

pub fn magnus_sequence(pres: &FpGroupPresentation) -> MagnusSequence {
    let g = pres.target();
    let n = g.order();
    let k = pres.generator_count();
    let mut sigma = IntMatrix::zeros(n - 1, n * k);
    for s in 0..k {
        let ps = pres.assignment()[s];
        for h in 0..n {
            let col = s * n + h;
            let hp = g.mul(h, ps);
            if hp != 0 {
                sigma[(hp - 1, col)] += 1;
            }
            if h != 0 {
                sigma[(h - 1, col)] -= 1;
            }
        }
    }
    let inclusion = kernel_basis(&sigma);
    let action = (0..n)
        .map(|a| {
            let moved = &free_module_action(pres, a) * &inclusion;
            solve(&inclusion, &moved)
                .expect("shapes agree")
                .expect("ker σ is G-stable")
        })
        .collect();
    let relation_module = GModuleFree::new_unchecked(g.clone(), inclusion.cols(), action);
    MagnusSequence {
        sigma,
        relation_module,
        inclusion,
    }
}

/// `Σ_s (∂r/∂s)(π(s) - 1)` in `Z[G]`; zero for every relator.
pub fn fox_identity_residual(r: &[Letter], pres: &FpGroupPresentation) -> Vec<BigInt> {
    let g = pres.target();
    let mut out = vec![BigInt::zero(); g.order()];
    for s in 0..pres.generator_count() {
        let ps = pres.assignment()[s];
        for (h, c) in fox_derivative(r, s, pres).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out[g.mul(h, ps)] += c;
            out[h] -= c;
        }
    }
    out
}
