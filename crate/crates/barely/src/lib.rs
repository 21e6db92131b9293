//! Words that barely avoid repetitions.
//!
//! A *square* is a nonempty word of the form `XX`, an *overlap* is `xYxYx`
//! with `x` a single letter and `Y` possibly empty, and a *cube* is `XXX`.
//! A word is square-free / overlap-free / cube-free if none of its factors
//! has that shape. This crate is about words that sit right at the boundary
//! of those properties:
//!
//! * **extremal**: free, but inserting any letter anywhere breaks freeness;
//! * **irreducible**: free, length at least 3, and deleting any interior
//!   letter breaks freeness;
//! * **delicate**: free, but changing any single letter breaks freeness
//!   (and more generally *k*-delicate for up to `k` simultaneous changes).
//!
//! The crate provides repetition detectors ([`detect`]), checkers for the
//! boundary properties ([`props`]), morphisms and freeness-preservation
//! tests ([`morphism`]), prefixes of the Thue–Morse word and its ternary
//! relative ([`streams`]), a pruned exhaustive enumerator ([`enumerate`]),
//! and explicit constructions producing a witness for every length where
//! one exists ([`construct`]).
//!
//! ```
//! use barely::{Alphabet, RepetitionKind, Word};
//!
//! let w = Word::from_text("010010", Alphabet::BINARY).unwrap();
//! assert!(barely::detect::is_free(&w, RepetitionKind::Overlap));
//! assert!(barely::props::is_irreducible(&w, RepetitionKind::Overlap).holds);
//! ```

pub mod construct;
pub mod detect;
pub mod enumerate;
pub mod morphism;
pub mod props;
pub mod streams;
pub mod word;

pub use detect::{Occurrence, RepetitionKind};
pub use props::{PropertyKind, PropertyReport};
pub use word::{Alphabet, Letter, SymmetryOp, Word, WordError};
