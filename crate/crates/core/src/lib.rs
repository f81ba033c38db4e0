//! Exact symbolic computations in the bitensorial Hopf algebra of a
//! finite-dimensional vector space.
//!
//! Fix an alphabet `x1, .., xd`. A *word* is a nonempty tensor product of
//! letters; a *phrase* is a (possibly empty) product of words. Phrases form
//! the linear basis of a pointed Hopf algebra: the product concatenates
//! phrases, the coproduct deconcatenates each word in all ways, and the unit
//! is the empty phrase. All coefficients are arbitrary-precision rationals;
//! nothing here ever rounds.
//!
//! Module map:
//! * [`freelin`] — scalars, the phrase basis, free linear combinations, and
//!   exact kernel/rank computations;
//! * [`hopfcore`] — product, coproduct, counit, antipodes, the cut operator
//!   and its exponential, convolution, induced morphisms;
//! * [`primitives`] — symmetrization, the primitive-element series, graded
//!   primitive bases and Lie spans;
//! * [`pairing`] — the combinatorial duality pairing, Gram matrices and
//!   radicals, and the associated counting polynomials.

pub mod error;
pub mod freelin;
pub mod hopfcore;
pub mod pairing;
pub mod primitives;

pub use error::Error;
pub use freelin::{Element, Letter, Matrix, Phrase, Rational, Tensor2, Word};
