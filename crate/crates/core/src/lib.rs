//! Exact plethystic Murnaghan-Nakayama expansions.
//!
//! `(p_n ∘ h_k) s_μ` is computed three independent ways: as determinants of
//! small 0/1 matrices ([`plethysm::pnhk_times_schur`]), by straightening
//! compositions ([`plethysm::straightening_expansion`]), and through
//! symmetric-group characters in the power-sum basis ([`symfunc`]). On top
//! of that sit the Schur expansions of `p_μ ∘ h_m` and `h_n ∘ h_m` and the
//! expansion of `p_n ∘ e_k` in elementary symmetric functions.
//!
//! All arithmetic is exact.

pub mod error;
pub mod expansion;
pub mod matrix;
pub mod partition;
pub mod plethysm;
pub mod strip;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use expansion::{EPolynomial, Expansion, PBasisExpansion, SignedSchurExpansion};
pub use matrix::IntMatrix;
pub use partition::{Composition, Partition, SkewShape};
pub use plethysm::{
    a_coefficients, b_coefficients, classical_mn, pnhk_times_schur, straighten, waring, StraightenResult,
};
pub use strip::{classify, StripChain, StripClassification, StripKind};
