//! Error type shared by all modules.

use std::fmt;

use crate::freelin::Phrase;

/// Everything that can go wrong when the caller hands us inconsistent data.
///
/// Violations of documented *invariants* (a zero coefficient stored in a
/// term map, a non-symmetric tensor where a symmetric one is required, ..)
/// are bugs and panic instead; `Error` is reserved for conditions a caller
/// can trigger with well-formed but mismatched inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live over alphabets of different sizes.
    AlphabetMismatch { left: u32, right: u32 },
    /// An operation defined only on linear combinations of single words was
    /// handed an element whose support contains a phrase of two or more
    /// words.
    NotWordSupported(Phrase),
    /// A phrase of the input element does not occur in the supplied basis.
    UnknownBasisPhrase(Phrase),
    /// The empty phrase has no composition type.
    EmptyPhrase,
    /// Two cell diagrams with different cell counts admit no bijection.
    CardinalMismatch { left: usize, right: usize },
    /// An index lies outside the documented range of a table.
    IndexOutOfRange { index: usize, bound: usize },
    /// An element that is guaranteed primitive by construction failed the
    /// primitivity test; this signals a bug in the library, never bad data.
    PrimitivityViolation,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AlphabetMismatch { left, right } => {
                write!(f, "alphabet mismatch: {left} letters vs {right} letters")
            }
            Error::NotWordSupported(p) => {
                write!(f, "element is not word-supported: contains {p}")
            }
            Error::UnknownBasisPhrase(p) => {
                write!(f, "phrase {p} does not occur in the given basis")
            }
            Error::EmptyPhrase => write!(f, "the empty phrase has no composition type"),
            Error::CardinalMismatch { left, right } => {
                write!(f, "cell counts differ: {left} vs {right}")
            }
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range (bound {bound})")
            }
            Error::PrimitivityViolation => {
                write!(f, "internal error: constructed element is not primitive")
            }
        }
    }
}

impl std::error::Error for Error {}
