//! Free linear combinations of phrases over exact rational scalars.
//!
//! This module owns the basis vocabulary (letters, words, phrases and their
//! canonical order), linear combinations with rational coefficients, and the
//! exact linear algebra (kernels, ranks, row spaces) that the rest of the
//! crate reduces its questions to.

mod basis;
mod element;
mod matrix;
mod scalar;

pub use basis::{basis_phrases, compositions, Letter, Phrase, Word};
pub use element::{coords, Element, Tensor2};
pub use matrix::{kernel_basis, Matrix, RowSpace};
pub use scalar::{binomial, factorial, inv_factorial, multinomial, rat, rat_int, Rational};
