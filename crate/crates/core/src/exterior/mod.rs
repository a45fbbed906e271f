//! Exterior algebra over `R^N` with exact coefficients.
//!
//! Sign conventions, in one place:
//! - `ι_v α = α(v, ·, ..., ·)`, so `ι_{v_i} e^I = (-1)^{#{j ∈ I : j < i}} e^{I \ i}`.
//! - The Hodge star uses the orientation `e^1 ∧ ... ∧ e^N`.
//! - Endomorphisms store `A_i^j` with `A(v_i) = Σ_j A_i^j v_j`.

pub mod basis;
pub mod form;
pub mod json;
pub mod vvf;

pub use basis::{binomial, FormBasis, Monomial};
pub use form::KForm;
pub use vvf::{Endomorphism, VectorValuedForm};
