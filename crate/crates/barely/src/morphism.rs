//! Morphisms between free monoids, and decision procedures for whether a
//! morphism preserves square-freeness or cube-freeness.
//!
//! Both decision procedures are finite tests: a ternary morphism preserves
//! square-freeness iff the images of all square-free words of length 5 are
//! square-free, and a binary morphism preserves cube-freeness iff the images
//! of all cube-free words of length 7 are cube-free.

use thiserror::Error;

use crate::detect::{self, Occurrence, RepetitionKind};
use crate::enumerate;
use crate::word::{Alphabet, Letter, Word, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("image of letter {letter} is empty")]
    EmptyImage { letter: u8 },
    #[error("expected {expected} images, got {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("image alphabet size {found} does not match codomain size {expected}")]
    CodomainMismatch { expected: usize, found: usize },
    #[error("morphism has domain size {found}, need size {expected}")]
    DomainMismatch { expected: usize, found: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A monoid morphism given by nonempty letter images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    domain: Alphabet,
    codomain: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(domain: Alphabet, codomain: Alphabet, images: Vec<Word>) -> Result<Morphism, MorphismError> {
        if images.len() != domain.size() {
            return Err(MorphismError::ImageCount { expected: domain.size(), found: images.len() });
        }
        for (letter, image) in images.iter().enumerate() {
            if image.is_empty() {
                return Err(MorphismError::EmptyImage { letter: letter as u8 });
            }
            if image.alphabet() != codomain {
                return Err(MorphismError::CodomainMismatch {
                    expected: codomain.size(),
                    found: image.alphabet().size(),
                });
            }
        }
        Ok(Morphism { domain, codomain, images })
    }

    fn from_texts(domain: Alphabet, codomain: Alphabet, texts: &[&str]) -> Morphism {
        let images = texts.iter().map(|t| Word::from_text(t, codomain).unwrap()).collect();
        Morphism::new(domain, codomain, images).unwrap()
    }

    pub fn domain(&self) -> Alphabet {
        self.domain
    }

    pub fn codomain(&self) -> Alphabet {
        self.codomain
    }

    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter.value() as usize]
    }

    /// Apply letterwise; `w` must be over the domain alphabet.
    pub fn apply(&self, w: &Word) -> Result<Word, MorphismError> {
        if w.alphabet() != self.domain {
            return Err(MorphismError::DomainMismatch {
                expected: self.domain.size(),
                found: w.alphabet().size(),
            });
        }
        let total: usize = w.letters().iter().map(|&l| self.image(l).len()).sum();
        let mut letters = Vec::with_capacity(total);
        for &l in w.letters() {
            letters.extend_from_slice(self.image(l).letters());
        }
        Ok(Word::new(letters, self.codomain)?)
    }

    /// Parse the text form: one `letter -> image` line per domain letter,
    /// whitespace-tolerant, blank lines ignored. The domain letters must be
    /// exactly `0..n`; the codomain is the smallest alphabet containing
    /// every image letter.
    pub fn parse(text: &str) -> Result<Morphism, MorphismError> {
        let mut pairs: Vec<(u8, String, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| MorphismError::Parse {
                line: lineno,
                reason: "expected `letter -> image`".into(),
            })?;
            let lhs = lhs.trim();
            let letter: u8 = match (lhs.len(), lhs.parse()) {
                (1, Ok(d)) if d <= 9 => d,
                _ => {
                    return Err(MorphismError::Parse {
                        line: lineno,
                        reason: format!("bad domain letter {lhs:?}"),
                    })
                }
            };
            if pairs.iter().any(|&(l, _, _)| l == letter) {
                return Err(MorphismError::Parse {
                    line: lineno,
                    reason: format!("duplicate image for letter {letter}"),
                });
            }
            let image = rhs.trim();
            if image.is_empty() {
                return Err(MorphismError::Parse { line: lineno, reason: "empty image".into() });
            }
            pairs.push((letter, image.to_string(), lineno));
        }
        if pairs.is_empty() {
            return Err(MorphismError::Parse { line: 1, reason: "no images".into() });
        }
        let domain = Alphabet::new(pairs.len()).map_err(MorphismError::Word)?;
        let mut texts = vec![None; pairs.len()];
        for (letter, image, lineno) in &pairs {
            let slot = texts.get_mut(*letter as usize).ok_or_else(|| MorphismError::Parse {
                line: *lineno,
                reason: format!("domain letters must be 0..{}, got {letter}", pairs.len()),
            })?;
            *slot = Some(image.clone());
        }
        let max_letter = texts
            .iter()
            .flatten()
            .flat_map(|t| t.chars())
            .filter_map(|c| c.to_digit(10))
            .max()
            .unwrap_or(0);
        let codomain = Alphabet::new(max_letter as usize + 1).map_err(MorphismError::Word)?;
        let images: Result<Vec<Word>, WordError> = texts
            .iter()
            .map(|t| Word::from_text(t.as_ref().unwrap(), codomain))
            .collect();
        Morphism::new(domain, codomain, images?)
    }

    /// Inverse of [`Morphism::parse`].
    pub fn file_format(&self) -> String {
        let mut out = String::new();
        for letter in self.domain.letters() {
            out.push_str(&format!("{letter} -> {}\n", self.image(letter)));
        }
        out
    }
}

/// The morphisms the constructions are built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinMorphism {
    /// Thue–Morse doubling: 0 -> 01, 1 -> 10.
    Mu,
    /// The non-uniform ternary morphism whose fixed point is the
    /// square-free word counting zero-runs of Thue–Morse.
    Tau,
    /// First of the cube-freeness-preserving pair behind the irreducible
    /// cube-free words at large lengths.
    IrrCube1,
    /// Letterwise reversal of [`BuiltinMorphism::IrrCube1`].
    IrrCube2,
    /// Uniform square-freeness-preserving backbone of the delicate
    /// square-free words.
    DelSquare,
    /// Uniform cube-freeness-preserving backbone of the delicate cube-free
    /// words.
    DelCube,
}

impl BuiltinMorphism {
    pub const ALL: [BuiltinMorphism; 6] = [
        BuiltinMorphism::Mu,
        BuiltinMorphism::Tau,
        BuiltinMorphism::IrrCube1,
        BuiltinMorphism::IrrCube2,
        BuiltinMorphism::DelSquare,
        BuiltinMorphism::DelCube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinMorphism::Mu => "mu",
            BuiltinMorphism::Tau => "tau",
            BuiltinMorphism::IrrCube1 => "irr-cube-1",
            BuiltinMorphism::IrrCube2 => "irr-cube-2",
            BuiltinMorphism::DelSquare => "del-square",
            BuiltinMorphism::DelCube => "del-cube",
        }
    }
}

/// Fetch a built-in morphism.
pub fn builtin(which: BuiltinMorphism) -> Morphism {
    let b = Alphabet::BINARY;
    let t = Alphabet::TERNARY;
    match which {
        BuiltinMorphism::Mu => Morphism::from_texts(b, b, &["01", "10"]),
        BuiltinMorphism::Tau => Morphism::from_texts(t, t, &["012", "02", "1"]),
        BuiltinMorphism::IrrCube1 => Morphism::from_texts(
            b,
            b,
            &["01100100101101001011010010", "0110101100110101100101001100101001"],
        ),
        BuiltinMorphism::IrrCube2 => Morphism::from_texts(
            b,
            b,
            &["01001011010010110100100110", "1001010011001010011010110011010110"],
        ),
        BuiltinMorphism::DelSquare => {
            Morphism::from_texts(t, t, &["01202120102", "01210201021", "01210212021"])
        }
        BuiltinMorphism::DelCube => {
            Morphism::from_texts(b, b, &["0110101100101100101001", "1001010011010011010110"])
        }
    }
}

/// Outcome of a preservation test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preservation {
    Preserves,
    /// A free input word whose image is not free, with the offending
    /// occurrence in the image.
    Violates { input: Word, image: Word, occurrence: Occurrence },
}

impl Preservation {
    pub fn preserves(&self) -> bool {
        matches!(self, Preservation::Preserves)
    }
}

fn preservation_test(
    m: &Morphism,
    kind: RepetitionKind,
    domain: Alphabet,
    test_len: usize,
) -> Result<Preservation, MorphismError> {
    if m.domain() != domain {
        return Err(MorphismError::DomainMismatch {
            expected: domain.size(),
            found: m.domain().size(),
        });
    }
    let mut found = Preservation::Preserves;
    enumerate::enumerate_free(domain, kind, test_len, |w| {
        if found.preserves() {
            let image = m.apply(w).expect("input is over the domain");
            if let Some(occurrence) = detect::find_repetition(&image, kind) {
                found = Preservation::Violates { input: w.clone(), image, occurrence };
            }
        }
    });
    Ok(found)
}

/// Does the ternary morphism `m` map square-free words to square-free words?
/// Decided by checking the images of all square-free words of length 5.
pub fn preserves_squarefree(m: &Morphism) -> Result<Preservation, MorphismError> {
    preservation_test(m, RepetitionKind::Square, Alphabet::TERNARY, 5)
}

/// Does the binary morphism `m` map cube-free words to cube-free words?
/// Decided by checking the images of all cube-free words of length 7.
pub fn preserves_cubefree(m: &Morphism) -> Result<Preservation, MorphismError> {
    preservation_test(m, RepetitionKind::Cube, Alphabet::BINARY, 7)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::{self, PropertyKind};
    use crate::word::SymmetryOp;
    use proptest::prelude::*;

    fn b(text: &str) -> Word {
        Word::from_text(text, Alphabet::BINARY).unwrap()
    }

    #[test]
    fn apply_examples() {
        let mu = builtin(BuiltinMorphism::Mu);
        assert_eq!(mu.apply(&b("0")).unwrap().to_string(), "01");
        assert_eq!(mu.apply(&b("001")).unwrap().to_string(), "010110");
        assert_eq!(mu.apply(&Word::empty(Alphabet::BINARY)).unwrap(), Word::empty(Alphabet::BINARY));
        let tau = builtin(BuiltinMorphism::Tau);
        assert_eq!(
            tau.apply(&Word::from_text("012", Alphabet::TERNARY).unwrap()).unwrap().to_string(),
            "012021"
        );
        assert!(matches!(
            tau.apply(&b("01")),
            Err(MorphismError::DomainMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn builtin_shapes() {
        let phi1 = builtin(BuiltinMorphism::IrrCube1);
        assert_eq!(phi1.image(Letter::new(0)).len(), 26);
        assert_eq!(
            phi1.image(Letter::new(1)).to_string(),
            "0110101100110101100101001100101001"
        );
        // The twin morphism reverses each image.
        let phi2 = builtin(BuiltinMorphism::IrrCube2);
        let rev = SymmetryOp::reversal(Alphabet::BINARY);
        for l in Alphabet::BINARY.letters() {
            assert_eq!(phi1.image(l).apply_symmetry(&rev).unwrap(), *phi2.image(l));
        }
        assert_eq!(
            builtin(BuiltinMorphism::DelCube).image(Letter::new(0)).to_string(),
            "0110101100101100101001"
        );
        for which in [BuiltinMorphism::DelSquare, BuiltinMorphism::DelCube] {
            let m = builtin(which);
            let lens: Vec<usize> = m.domain().letters().map(|l| m.image(l).len()).collect();
            assert!(lens.windows(2).all(|w| w[0] == w[1]), "{which:?} is uniform");
        }
    }

    #[test]
    fn construction_validation() {
        let empty = Word::empty(Alphabet::BINARY);
        assert!(matches!(
            Morphism::new(Alphabet::BINARY, Alphabet::BINARY, vec![b("01"), empty]),
            Err(MorphismError::EmptyImage { letter: 1 })
        ));
        assert!(matches!(
            Morphism::new(Alphabet::TERNARY, Alphabet::BINARY, vec![b("01"), b("10")]),
            Err(MorphismError::ImageCount { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn preservation_decisions() {
        assert!(preserves_squarefree(&builtin(BuiltinMorphism::DelSquare)).unwrap().preserves());
        assert!(preserves_cubefree(&builtin(BuiltinMorphism::IrrCube1)).unwrap().preserves());
        assert!(preserves_cubefree(&builtin(BuiltinMorphism::IrrCube2)).unwrap().preserves());
        assert!(preserves_cubefree(&builtin(BuiltinMorphism::DelCube)).unwrap().preserves());

        // tau maps the square-free 010 to 01202012, which contains 2020.
        match preserves_squarefree(&builtin(BuiltinMorphism::Tau)).unwrap() {
            Preservation::Violates { input, image, occurrence } => {
                assert!(detect::is_free(&input, RepetitionKind::Square));
                assert!(occurrence.validate(&image));
            }
            Preservation::Preserves => panic!("tau does not preserve square-freeness"),
        }

        let doubler = Morphism::from_texts(Alphabet::BINARY, Alphabet::BINARY, &["00", "1"]);
        match preserves_cubefree(&doubler).unwrap() {
            Preservation::Violates { input, image, occurrence } => {
                assert!(detect::is_free(&input, RepetitionKind::Cube));
                assert!(occurrence.validate(&image));
            }
            Preservation::Preserves => panic!("doubling 0 does not preserve cube-freeness"),
        }

        // Wrong domain alphabet is a usage error, not a verdict.
        assert!(preserves_squarefree(&builtin(BuiltinMorphism::Mu)).is_err());
        assert!(preserves_cubefree(&builtin(BuiltinMorphism::Tau)).is_err());
    }

    #[test]
    fn mu_preserves_overlap_freeness_small() {
        let mu = builtin(BuiltinMorphism::Mu);
        for n in 0..=10 {
            let mut words = Vec::new();
            let count = enumerate::enumerate_free(Alphabet::BINARY, RepetitionKind::Overlap, n, |w| {
                words.push(w.clone())
            });
            assert_eq!(count as usize, words.len());
            for w in words {
                assert!(
                    detect::is_free(&mu.apply(&w).unwrap(), RepetitionKind::Overlap),
                    "mu({w})"
                );
            }
        }
    }

    #[test]
    fn seed_words_for_constructions() {
        let phi1 = builtin(BuiltinMorphism::IrrCube1);
        let image = phi1.apply(&b("01")).unwrap();
        assert!(props::check(&image, RepetitionKind::Cube, PropertyKind::Irreducible).holds);
        let del = builtin(BuiltinMorphism::DelCube);
        for l in Alphabet::BINARY.letters() {
            assert!(props::check(del.image(l), RepetitionKind::Cube, PropertyKind::Delicate).holds);
        }
    }

    #[test]
    fn parse_and_format() {
        let m = Morphism::parse("0 -> 01202120102\n1->01210201021\n\n  2  ->\t01210212021\n").unwrap();
        assert_eq!(m, builtin(BuiltinMorphism::DelSquare));
        for which in BuiltinMorphism::ALL {
            let m = builtin(which);
            assert_eq!(Morphism::parse(&m.file_format()).unwrap(), m);
        }
        assert!(matches!(Morphism::parse("0 -> 01\n0 -> 10"), Err(MorphismError::Parse { line: 2, .. })));
        assert!(matches!(Morphism::parse("0 -> 01\n2 -> 10"), Err(MorphismError::Parse { .. })));
        assert!(matches!(Morphism::parse("0 ->"), Err(MorphismError::Parse { line: 1, .. })));
        assert!(matches!(Morphism::parse("0 = 01"), Err(MorphismError::Parse { line: 1, .. })));
        assert!(matches!(Morphism::parse("0 -> 0x1"), Err(MorphismError::Word(_))));
        assert!(matches!(Morphism::parse(""), Err(MorphismError::Parse { .. })));
    }

    proptest! {
        #[test]
        fn apply_is_a_homomorphism(u in prop::collection::vec(0u8..2, 0..12), v in prop::collection::vec(0u8..2, 0..12)) {
            let u = Word::new(u.into_iter().map(Letter::new).collect(), Alphabet::BINARY).unwrap();
            let v = Word::new(v.into_iter().map(Letter::new).collect(), Alphabet::BINARY).unwrap();
            for which in [BuiltinMorphism::Mu, BuiltinMorphism::IrrCube1, BuiltinMorphism::DelCube] {
                let m = builtin(which);
                let lhs = m.apply(&u.concat(&v).unwrap()).unwrap();
                let rhs = m.apply(&u).unwrap().concat(&m.apply(&v).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
