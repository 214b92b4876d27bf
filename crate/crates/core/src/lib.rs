//! Decomposition of sequences into generalized palindromes with bounded gaps
//! and bounded errors.
//!
//! A *generalized palindrome* is a string `x` with `x = f(x^R)` for an
//! involution `f` on the alphabet: `f = id` gives ordinary palindromes, the
//! DNA complement gives complemented palindromes (hairpins). This crate
//! computes
//!
//! * all maximal generalized palindromes, and all maximal generalized
//!   δ-palindromes under the Hamming or the edit distance ([`maxpal`]),
//! * a compact arithmetic-progression representation of the palindromic
//!   suffixes of every prefix ([`triples`]),
//! * decompositions of a sequence into generalized palindromes of length at
//!   least `m` with at most `g` gaps, minimizing the total gap length
//!   ([`decompose`]),
//!
//! backed by constant-time longest-common-extension queries ([`lce`]) and
//! cross-checked by brute-force references ([`oracle`]).
//!
//! Positions are 1-based everywhere, matching the usual stringology
//! conventions; a factor is written `S[i..j]` with `1 <= i <= j <= n`.

pub mod alphabet;
pub mod decompose;
pub mod lce;
pub mod maxpal;
pub mod oracle;
pub mod triples;

pub use alphabet::{Involution, Sequence};
pub use decompose::{
    factorize_with_gaps, maximal_delta_decompose, min_gap_decompose, Decomposition, Factor,
    FactorSet, Segment, SegmentKind,
};
pub use lce::LceEngine;
pub use maxpal::{
    border_reduce, extend, maximal_edit, maximal_exact, maximal_hamming, Center, MaxPalTable,
    Metric, PalExtent,
};
pub use triples::{Triple, TripleSet, INFINITE_DELTA};

/// Errors reported by fallible operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A custom letter mapping is not self-inverse.
    #[error("mapping is not an involution at letter {}", display_byte(*.0))]
    NotInvolutive(u8),
    /// A letter of the input has no image under the involution.
    #[error("letter {} is outside the involution's alphabet", display_byte(*.0))]
    LetterOutsideAlphabet(u8),
    /// The operation requires a non-empty sequence.
    #[error("sequence is empty")]
    EmptySequence,
    /// A parameter is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// A factor does not lie inside `[1..n]`.
    #[error("factor [{start}..{end}] out of range for sequence of length {n}")]
    FactorOutOfRange { start: usize, end: usize, n: usize },
    /// A decomposition failed re-validation against its invariants.
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
}

fn display_byte(b: u8) -> String {
    if b.is_ascii_graphic() {
        format!("'{}'", b as char)
    } else {
        format!("0x{b:02x}")
    }
}
