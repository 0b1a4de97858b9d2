//! Homology of small finite groups given by explicit tables and presentations.
//!
//! A group `G` is a validated multiplication table; a presentation `<S | R>` comes
//! with an assignment `S -> G` that must kill every relator and generate `G`. Every
//! coefficient module is free as an abelian group (`Z`, `Z[G]`, `Δ(G)`, `R_ab` and
//! tensor products of these), so torsion only appears in homology.

mod four_term;
mod gmodule;
mod homology;
mod magnus;
mod presentation;
mod table;

pub use four_term::{four_term_report, group_homology, FourTermReport};
pub use gmodule::{
    augmentation_ideal, coinvariants, group_ring, tensor_gmodule, tensor_power, GModuleFree,
};
pub use homology::{h1_free, homology_bar, homology_cyclic, DEFAULT_BAR_BUDGET};
pub use magnus::{
    fox_derivative, fox_identity_residual, fox_vector, magnus_sequence, MagnusSequence,
};
pub use presentation::{parse_word, FpGroupPresentation, Letter, Word};
pub use table::FiniteGroupTable;
