//! Letters, alphabets, finite words, and the symmetries that preserve
//! repetition structure.
//!
//! Words are immutable values over a fixed-size alphabet whose letters are
//! `0, 1, ..., size-1`. The editing operations (`factor`, `delete_at`,
//! `replace_at`, `insert_at`) return fresh words, which keeps the property
//! checkers trivially correct when they enumerate thousands of one-edit
//! variants. Text form is one ASCII digit per letter, no separators.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("index {index} out of range for word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("letter {letter} outside alphabet of size {size}")]
    LetterOutsideAlphabet { letter: u8, size: usize },
    #[error("alphabet mismatch: size {left} vs size {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("invalid character {ch:?} in word text")]
    InvalidCharacter { ch: char },
    #[error("alphabet size {size} not supported (need 1..=9 for digit text form)")]
    BadAlphabetSize { size: usize },
    #[error("permutation {0:?} is not a bijection on the alphabet")]
    BadPermutation(Vec<u8>),
}

/// A single letter, stored as its 0-based index in the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub const fn new(value: u8) -> Letter {
        Letter(value)
    }

    pub const fn value(self) -> u8 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An alphabet `{0, 1, ..., size-1}`. Almost everything here runs over
/// [`Alphabet::BINARY`] or [`Alphabet::TERNARY`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet {
    size: u8,
}

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet { size: 2 };
    pub const TERNARY: Alphabet = Alphabet { size: 3 };

    /// Alphabets are capped at 9 letters so that the digit text form stays
    /// one character per letter.
    pub fn new(size: usize) -> Result<Alphabet, WordError> {
        if (1..=9).contains(&size) {
            Ok(Alphabet { size: size as u8 })
        } else {
            Err(WordError::BadAlphabetSize { size })
        }
    }

    pub fn size(self) -> usize {
        self.size as usize
    }

    pub fn contains(self, letter: Letter) -> bool {
        letter.0 < self.size
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.size).map(Letter)
    }
}

/// A finite word over a fixed alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet: Alphabet) -> Result<Word, WordError> {
        for &l in &letters {
            if !alphabet.contains(l) {
                return Err(WordError::LetterOutsideAlphabet {
                    letter: l.0,
                    size: alphabet.size(),
                });
            }
        }
        Ok(Word { letters, alphabet })
    }

    pub fn empty(alphabet: Alphabet) -> Word {
        Word { letters: Vec::new(), alphabet }
    }

    /// Parse the digit text form, e.g. `"0120"` over the ternary alphabet.
    pub fn from_text(text: &str, alphabet: Alphabet) -> Result<Word, WordError> {
        let mut letters = Vec::with_capacity(text.len());
        for ch in text.chars() {
            let digit = ch.to_digit(10).ok_or(WordError::InvalidCharacter { ch })?;
            letters.push(Letter(digit as u8));
        }
        Word::new(letters, alphabet)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn get(&self, index: usize) -> Option<Letter> {
        self.letters.get(index).copied()
    }

    /// The factor of `len` letters starting at `start`.
    pub fn factor(&self, start: usize, len: usize) -> Result<Word, WordError> {
        let end = start.checked_add(len).filter(|&e| e <= self.len());
        match end {
            Some(end) => Ok(Word {
                letters: self.letters[start..end].to_vec(),
                alphabet: self.alphabet,
            }),
            None => Err(WordError::IndexOutOfRange { index: start + len, len: self.len() }),
        }
    }

    pub fn delete_at(&self, index: usize) -> Result<Word, WordError> {
        if index >= self.len() {
            return Err(WordError::IndexOutOfRange { index, len: self.len() });
        }
        let mut letters = self.letters.clone();
        letters.remove(index);
        Ok(Word { letters, alphabet: self.alphabet })
    }

    pub fn replace_at(&self, index: usize, letter: Letter) -> Result<Word, WordError> {
        if index >= self.len() {
            return Err(WordError::IndexOutOfRange { index, len: self.len() });
        }
        if !self.alphabet.contains(letter) {
            return Err(WordError::LetterOutsideAlphabet {
                letter: letter.0,
                size: self.alphabet.size(),
            });
        }
        let mut letters = self.letters.clone();
        letters[index] = letter;
        Ok(Word { letters, alphabet: self.alphabet })
    }

    /// Insert `letter` so that it ends up at position `index`; `index` may
    /// equal the length (append).
    pub fn insert_at(&self, index: usize, letter: Letter) -> Result<Word, WordError> {
        if index > self.len() {
            return Err(WordError::IndexOutOfRange { index, len: self.len() });
        }
        if !self.alphabet.contains(letter) {
            return Err(WordError::LetterOutsideAlphabet {
                letter: letter.0,
                size: self.alphabet.size(),
            });
        }
        let mut letters = self.letters.clone();
        letters.insert(index, letter);
        Ok(Word { letters, alphabet: self.alphabet })
    }

    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.alphabet != other.alphabet {
            return Err(WordError::AlphabetMismatch {
                left: self.alphabet.size(),
                right: other.alphabet.size(),
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { letters, alphabet: self.alphabet })
    }

    pub fn apply_symmetry(&self, op: &SymmetryOp) -> Result<Word, WordError> {
        if op.alphabet != self.alphabet {
            return Err(WordError::AlphabetMismatch {
                left: self.alphabet.size(),
                right: op.alphabet.size(),
            });
        }
        let mut letters: Vec<Letter> = self
            .letters
            .iter()
            .map(|&l| op.permutation[l.0 as usize])
            .collect();
        if op.reversed {
            letters.reverse();
        }
        Ok(Word { letters, alphabet: self.alphabet })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A letter permutation optionally composed with reversal. These operations
/// map squares to squares, overlaps to overlaps, and cubes to cubes, so
/// every notion in this crate is invariant under them — which the searches
/// exploit and the tests re-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryOp {
    alphabet: Alphabet,
    permutation: Vec<Letter>,
    reversed: bool,
}

impl SymmetryOp {
    /// `permutation[i]` is the image of letter `i`; must be a bijection.
    pub fn new(alphabet: Alphabet, permutation: Vec<u8>, reversed: bool) -> Result<SymmetryOp, WordError> {
        let n = alphabet.size();
        let mut seen = vec![false; n];
        if permutation.len() != n {
            return Err(WordError::BadPermutation(permutation));
        }
        for &p in &permutation {
            if (p as usize) >= n || seen[p as usize] {
                return Err(WordError::BadPermutation(permutation));
            }
            seen[p as usize] = true;
        }
        Ok(SymmetryOp {
            alphabet,
            permutation: permutation.into_iter().map(Letter).collect(),
            reversed,
        })
    }

    pub fn identity(alphabet: Alphabet) -> SymmetryOp {
        SymmetryOp {
            alphabet,
            permutation: alphabet.letters().collect(),
            reversed: false,
        }
    }

    pub fn reversal(alphabet: Alphabet) -> SymmetryOp {
        SymmetryOp { reversed: true, ..SymmetryOp::identity(alphabet) }
    }

    /// All `size! * 2` symmetries of the given alphabet.
    pub fn all(alphabet: Alphabet) -> Vec<SymmetryOp> {
        let n = alphabet.size();
        let mut ops = Vec::new();
        for perm in (0..n as u8).permutations(n) {
            for reversed in [false, true] {
                ops.push(SymmetryOp::new(alphabet, perm.clone(), reversed).unwrap());
            }
        }
        ops
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn reversed(&self) -> bool {
        self.reversed
    }
}
