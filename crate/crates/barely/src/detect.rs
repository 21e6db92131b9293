//! Repetition detectors: squares, overlaps, and cubes.
//!
//! An occurrence is identified by its kind, start index, and period. For a
//! square `XX` the period is `|X|` (span `2p`), for a cube `XXX` it is `|X|`
//! (span `3p`), and for an overlap `xYxYx` it is `|xY|` (span `2p + 1`).
//! In every case the factor `u` at the occurrence satisfies
//! `u[j] == u[j + p]` for `j` in `0..span - p`, which is what the scanners
//! check.

use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepetitionKind {
    Square,
    Overlap,
    Cube,
}

impl RepetitionKind {
    pub const ALL: [RepetitionKind; 3] = [
        RepetitionKind::Square,
        RepetitionKind::Overlap,
        RepetitionKind::Cube,
    ];

    /// Total length of an occurrence with the given period.
    pub fn span(self, period: usize) -> usize {
        match self {
            RepetitionKind::Square => 2 * period,
            RepetitionKind::Overlap => 2 * period + 1,
            RepetitionKind::Cube => 3 * period,
        }
    }

    /// Number of positions `j` with `u[j] == u[j + period]` required.
    fn match_len(self, period: usize) -> usize {
        self.span(period) - period
    }

    pub fn name(self) -> &'static str {
        match self {
            RepetitionKind::Square => "square",
            RepetitionKind::Overlap => "overlap",
            RepetitionKind::Cube => "cube",
        }
    }
}

impl std::fmt::Display for RepetitionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RepetitionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "square" => Ok(RepetitionKind::Square),
            "overlap" => Ok(RepetitionKind::Overlap),
            "cube" => Ok(RepetitionKind::Cube),
            other => Err(format!("unknown repetition kind {other:?}")),
        }
    }
}

/// A located repetition inside some word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence {
    pub kind: RepetitionKind,
    pub start: usize,
    pub period: usize,
}

impl Occurrence {
    pub fn span(&self) -> usize {
        self.kind.span(self.period)
    }

    /// One past the last index covered.
    pub fn end(&self) -> usize {
        self.start + self.span()
    }

    /// Re-check the occurrence letter by letter against `w`.
    pub fn validate(&self, w: &Word) -> bool {
        self.period >= 1 && validate_at(w.letters(), self.kind, self.start, self.period)
    }
}

fn validate_at(letters: &[Letter], kind: RepetitionKind, start: usize, period: usize) -> bool {
    let span = kind.span(period);
    if start + span > letters.len() {
        return false;
    }
    (0..kind.match_len(period)).all(|j| letters[start + j] == letters[start + j + period])
}

/// First repetition of the given kind, scanning by increasing start and then
/// increasing period, or `None` if the word is free.
pub fn find_repetition(w: &Word, kind: RepetitionKind) -> Option<Occurrence> {
    find_repetition_in(w.letters(), kind)
}

pub(crate) fn find_repetition_in(letters: &[Letter], kind: RepetitionKind) -> Option<Occurrence> {
    let n = letters.len();
    for start in 0..n {
        let mut period = 1;
        while start + kind.span(period) <= n {
            if validate_at(letters, kind, start, period) {
                return Some(Occurrence { kind, start, period });
            }
            period += 1;
        }
    }
    None
}

/// Whether `w` contains no repetition of the given kind.
pub fn is_free(w: &Word, kind: RepetitionKind) -> bool {
    find_repetition_in(w.letters(), kind).is_none()
}

/// A repetition whose span ends exactly at the last position of `w`, if any
/// (smallest period first). This is what makes depth-first search over free
/// words sound: a word is free iff no prefix of it has a suffix repetition,
/// so appending one letter only requires checking the new last position.
pub fn suffix_repetition(w: &Word, kind: RepetitionKind) -> Option<Occurrence> {
    suffix_repetition_in(w.letters(), kind)
}

pub(crate) fn suffix_repetition_in(letters: &[Letter], kind: RepetitionKind) -> Option<Occurrence> {
    let n = letters.len();
    let mut period = 1;
    while kind.span(period) <= n {
        let start = n - kind.span(period);
        // Compare newest letters first; in search the last letter is the one
        // that changed, so mismatches show up immediately.
        let m = kind.match_len(period);
        if (0..m).all(|j| letters[n - 1 - j] == letters[n - 1 - j - period]) {
            return Some(Occurrence { kind, start, period });
        }
        period += 1;
    }
    None
}

/// First repetition whose span contains every index in `lo..=hi`, scanning by
/// increasing period and then increasing start. The property checkers use
/// this after an edit: any repetition created by the edit must cover an
/// edited position, so the scan can stay local.
pub(crate) fn repetition_covering(
    letters: &[Letter],
    kind: RepetitionKind,
    lo: usize,
    hi: usize,
) -> Option<Occurrence> {
    let n = letters.len();
    debug_assert!(lo <= hi && hi < n);
    let mut period = 1;
    loop {
        let span = kind.span(period);
        if span > n {
            return None;
        }
        if span >= hi - lo + 1 {
            let min_start = (hi + 1).saturating_sub(span);
            let max_start = lo.min(n - span);
            for start in min_start..=max_start {
                if validate_at(letters, kind, start, period) {
                    return Some(Occurrence { kind, start, period });
                }
            }
        }
        period += 1;
    }
}

/// Definition-literal freeness check: examine every factor and test whether
/// it *is* a square / overlap / cube. Quartic and meant for cross-checking
/// the scanners on small words, nothing else.
pub fn oracle_is_free(w: &Word, kind: RepetitionKind) -> bool {
    let letters = w.letters();
    let n = letters.len();
    for start in 0..n {
        for len in 1..=n - start {
            let factor = &letters[start..start + len];
            let hit = match kind {
                RepetitionKind::Square => is_square_word(factor),
                RepetitionKind::Overlap => is_overlap_word(factor),
                RepetitionKind::Cube => is_cube_word(factor),
            };
            if hit {
                return false;
            }
        }
    }
    true
}

fn is_square_word(u: &[Letter]) -> bool {
    let n = u.len();
    n >= 2 && n % 2 == 0 && u[..n / 2] == u[n / 2..]
}

fn is_overlap_word(u: &[Letter]) -> bool {
    // xYxYx with x a letter: odd length 2p + 1, u[i] == u[i + p] for i <= p.
    let n = u.len();
    if n < 3 || n % 2 == 0 {
        return false;
    }
    let p = (n - 1) / 2;
    (0..=p).all(|i| u[i] == u[i + p])
}

fn is_cube_word(u: &[Letter]) -> bool {
    let n = u.len();
    n >= 3 && n % 3 == 0 && u[..n / 3] == u[n / 3..2 * n / 3] && u[n / 3..2 * n / 3] == u[2 * n / 3..]
}
