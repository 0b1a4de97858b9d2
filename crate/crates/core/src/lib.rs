//! Exact computational homological algebra.
//!
//! * [`exactla`]: arbitrary-precision integer matrices, Smith and Hermite normal forms,
//!   kernels and integer linear solving.
//! * [`abgrp`]: finitely generated abelian groups in invariant-factor form, chain
//!   complexes of free abelian groups and their homology.
//! * [`powerfun`]: tensor, symmetric, exterior and divided powers of free abelian groups
//!   and their induced maps.
//! * [`koszul`]: Koszul-type complexes of a presentation `H -> F -> A` and the derived
//!   functors `L_i T(A)` they compute.
//! * [`grouphom`]: group rings, Fox calculus, the Magnus embedding, relation modules,
//!   homology of small finite groups and the 4-term sequence checks.
//! * [`cli`]: the command-line surface and verification suites.

pub mod abgrp;
pub mod cli;
pub mod error;
pub mod exactla;
pub mod grouphom;
pub mod koszul;
pub mod powerfun;

pub use error::{Error, Result};
