//! Exact invariants of braids: crossing matrices, the Artin action on the
//! free group, the Magnus expansion to degree two, the extended first
//! Johnson homomorphism and the cord invariant of simple braids.
//!
//! All arithmetic is on `i64` and checked; overflow panics.

pub mod artin;
pub mod braid;
pub mod crossing;
pub mod error;
pub mod free_group;
pub mod group;
pub mod hurwitz;
pub mod johnson;
pub mod magnus;
pub mod matrix_sets;
pub mod permutation;
pub mod sample;
pub mod search;
pub mod simple;
pub mod verify;

pub use artin::{apply_artin, artin_abelianized};
pub use braid::{BraidWord, Letter, Sign};
pub use crossing::{crossing_matrix, diving_info, lift_crossing, CrossingLift, CrossingMatrix, HVector};
pub use error::{Error, Result};
pub use free_group::{FreeWord, Syllable};
pub use group::GroupElement;
pub use hurwitz::{apply_moves, hurwitz_move, HurwitzMove};
pub use johnson::{delta, lift_delta, lift_tau, tau1, tau1_by_words, JohnsonLift, WedgeMap};
pub use magnus::{magnus, Tensor2, TruncatedExpansion};
pub use matrix_sets::{
    decompose, is_in_image_c, is_perm_braid_matrix, permutation_braid, realize_crossing_matrix,
    satisfies_ppb_conditions,
};
pub use permutation::Permutation;
pub use search::{search_positive_pure_realizations, SearchLimit};
pub use simple::{
    check_diving_formulas, construct_from_invariant, v_invariant, CordClass, FormulaReport, SimpleBraid,
};
