//! Finite prefixes of the Thue–Morse word t and the ternary Thue–Morse
//! word v, plus the finite evidence checks the constructions lean on:
//! square-free prefixes, prepended streams staying free, and factors pinned
//! to residue classes of positions.
//!
//! Only finite prefixes are exposed; every downstream use is a finite
//! computation, so there is no lazy stream type. Prefixes are computed by
//! iterating the defining morphism, which handles the non-uniform `tau`
//! without any closed-form bookkeeping.

use std::str::FromStr;

use crate::detect::{self, RepetitionKind};
use crate::morphism::{self, BuiltinMorphism};
use crate::word::{Alphabet, Letter, Word, WordError};

/// The two fixed points the library knows how to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InfiniteWordId {
    /// mu^omega(0) = 0110100110010110...
    ThueMorse,
    /// tau^omega(0) = 012021012102...
    TernaryThueMorse,
}

impl InfiniteWordId {
    pub fn alphabet(self) -> Alphabet {
        match self {
            InfiniteWordId::ThueMorse => Alphabet::BINARY,
            InfiniteWordId::TernaryThueMorse => Alphabet::TERNARY,
        }
    }

    pub fn defining_morphism(self) -> morphism::Morphism {
        match self {
            InfiniteWordId::ThueMorse => morphism::builtin(BuiltinMorphism::Mu),
            InfiniteWordId::TernaryThueMorse => morphism::builtin(BuiltinMorphism::Tau),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            InfiniteWordId::ThueMorse => "thue-morse",
            InfiniteWordId::TernaryThueMorse => "ternary-thue-morse",
        }
    }
}

impl std::fmt::Display for InfiniteWordId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InfiniteWordId {
    type Err = String;

    fn from_str(s: &str) -> Result<InfiniteWordId, String> {
        match s {
            "thue-morse" | "t" => Ok(InfiniteWordId::ThueMorse),
            "ternary-thue-morse" | "v" => Ok(InfiniteWordId::TernaryThueMorse),
            other => Err(format!("unknown infinite word {other:?} (expected thue-morse or ternary-thue-morse)")),
        }
    }
}

/// A window into a fixed point: skip `drop` letters, keep the next `take`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefixSpec {
    pub word: InfiniteWordId,
    pub drop: usize,
    pub take: usize,
}

/// Expand the fixed point until it has `needed` letters. Each round strictly
/// grows the buffer: both morphisms have a growing image of 0, and the
/// prefix always contains a 0.
fn stream_letters(word: InfiniteWordId, needed: usize) -> Vec<Letter> {
    let m = word.defining_morphism();
    let mut buf = vec![Letter::new(0)];
    while buf.len() < needed {
        let mut next = Vec::with_capacity(buf.len() * 3);
        for &l in &buf {
            next.extend_from_slice(m.image(l).letters());
        }
        buf = next;
    }
    buf.truncate(needed);
    buf
}

/// Letters `drop..drop+take` of the fixed point.
pub fn prefix(spec: &PrefixSpec) -> Word {
    let mut letters = stream_letters(spec.word, spec.drop + spec.take);
    letters.drain(..spec.drop);
    Word::new(letters, spec.word.alphabet()).expect("fixed-point letters are in range")
}

/// True iff no prefix of the Thue–Morse word with length ≤ `limit` is a
/// square. Expected true for every limit; this is the finite shadow of
/// Shur's lemma.
pub fn no_square_prefix(limit: usize) -> bool {
    let t = stream_letters(InfiniteWordId::ThueMorse, limit);
    (1..=t.len() / 2).all(|p| t[..p] != t[p..2 * p])
}

/// The first `limit` letters of v computed from Berstel's characterization:
/// the i-th letter of v is the number of 0s between the i-th and (i+1)-th
/// 1s of the Thue–Morse word.
pub fn berstel_v(limit: usize) -> Word {
    // t is cube-free, so runs of 0s have length ≤ 2 and limit+1 ones fit
    // comfortably in 3·limit + O(1) letters.
    let t = stream_letters(InfiniteWordId::ThueMorse, 3 * limit + 16);
    let ones: Vec<usize> = t
        .iter()
        .enumerate()
        .filter_map(|(i, l)| (l.value() == 1).then_some(i))
        .collect();
    assert!(ones.len() > limit, "prefix bound too small for {limit} gap letters");
    let letters = ones
        .windows(2)
        .take(limit)
        .map(|pair| Letter::new((pair[1] - pair[0] - 1) as u8))
        .collect();
    Word::new(letters, Alphabet::TERNARY).expect("gaps in a cube-free word are at most 2")
}

/// Is `prefix_word` followed by the first `limit` letters of the stream
/// still `kind`-free? Finite evidence for the prepended-stream lemmas.
pub fn prepend_check(
    prefix_word: &Word,
    word: InfiniteWordId,
    kind: RepetitionKind,
    limit: usize,
) -> Result<bool, WordError> {
    let tail = prefix(&PrefixSpec { word, drop: 0, take: limit });
    let joined = prefix_word.concat(&tail)?;
    Ok(detect::is_free(&joined, kind))
}

/// Start positions of every occurrence of `needle` in `host`, ascending.
/// The empty needle occurs at every position.
pub fn occurrences(host: &Word, needle: &Word) -> Vec<usize> {
    let h = host.letters();
    let n = needle.letters();
    if n.is_empty() {
        return (0..=h.len()).collect();
    }
    if n.len() > h.len() {
        return Vec::new();
    }
    h.windows(n.len())
        .enumerate()
        .filter_map(|(i, window)| (window == n).then_some(i))
        .collect()
}

/// True iff every occurrence of `needle` in the first `limit` letters of
/// `host` starts at a position whose residue mod `modulus` is allowed.
/// Vacuously true when there are no occurrences.
pub fn factor_position_check(
    host: &Word,
    needle: &Word,
    allowed_residues: &[usize],
    modulus: usize,
    limit: usize,
) -> bool {
    assert!(modulus >= 1, "modulus must be positive");
    let scan = host.len().min(limit);
    let scanned = host.factor(0, scan).expect("scan length is clamped to the host");
    occurrences(&scanned, needle)
        .into_iter()
        .all(|start| allowed_residues.contains(&(start % modulus)))
}
