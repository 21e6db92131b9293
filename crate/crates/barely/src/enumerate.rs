//! Exhaustive search over free words, organized by length.
//!
//! The search grows words letter by letter and prunes any extension whose
//! suffix completes a repetition; since every factor-closed freeness notion
//! fails first at some suffix, the surviving tree contains exactly the free
//! words. Classification walks that tree once, applies a property checker at
//! every depth in range, and reports counts and sample witnesses per length.
//!
//! For parallelism the tree is split at a fixed depth: the prefixes at that
//! depth are enumerated sequentially, their subtrees are processed by a
//! worker pool, and the results are merged in prefix order — so counts and
//! witnesses are identical whatever the worker count, and a single-threaded
//! run produces the same bytes.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use crate::detect::{self, RepetitionKind};
use crate::props::{self, PropertyKind};
use crate::word::{Alphabet, Letter, Word};

/// What to search for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub alphabet: Alphabet,
    pub kind: RepetitionKind,
    pub property: PropertyKind,
    pub min_len: usize,
    pub max_len: usize,
    /// Fix the first letter and multiply counts by the alphabet size. Sound
    /// because freeness and all the properties are invariant under letter
    /// permutations, which act transitively on the first letter.
    pub symmetry_reduction: bool,
    /// Sample witnesses kept per length.
    pub witness_limit: usize,
}

impl SearchSpec {
    /// One-line fingerprint used as the cache header.
    pub fn fingerprint(&self) -> String {
        format!(
            "alphabet={} kind={} property={} min={} max={} symmetry={} witness-limit={}",
            self.alphabet.size(),
            self.kind,
            self.property,
            self.min_len,
            self.max_len,
            if self.symmetry_reduction { 1 } else { 0 },
            self.witness_limit,
        )
    }
}

/// Per-length outcome of a classification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthClassification {
    pub spec: SearchSpec,
    /// Number of free words with the property, for every length in range.
    /// With symmetry reduction on, these are already scaled back up.
    pub counts: BTreeMap<usize, u64>,
    /// Lexicographically first witnesses per length, up to the limit. With
    /// symmetry reduction on these are the first-letter-0 representatives.
    pub witnesses: BTreeMap<usize, Vec<Word>>,
}

impl LengthClassification {
    /// The lengths admitting at least one word with the property.
    pub fn admitted(&self) -> BTreeSet<usize> {
        self.counts.iter().filter(|&(_, &c)| c > 0).map(|(&n, _)| n).collect()
    }
}

/// Visit every kind-free word of length `n` in lexicographic order; returns
/// how many there are.
pub fn enumerate_free(
    alphabet: Alphabet,
    kind: RepetitionKind,
    n: usize,
    mut visitor: impl FnMut(&Word),
) -> u64 {
    fn rec(
        buf: &mut Vec<Letter>,
        alphabet: Alphabet,
        kind: RepetitionKind,
        n: usize,
        count: &mut u64,
        visitor: &mut impl FnMut(&Word),
    ) {
        if buf.len() == n {
            *count += 1;
            visitor(&Word::new(buf.clone(), alphabet).unwrap());
            return;
        }
        for letter in alphabet.letters() {
            buf.push(letter);
            if detect::suffix_repetition_in(buf, kind).is_none() {
                rec(buf, alphabet, kind, n, count, visitor);
            }
            buf.pop();
        }
    }

    let mut count = 0;
    rec(&mut Vec::with_capacity(n), alphabet, kind, n, &mut count, &mut visitor);
    count
}

/// Sequentially walk the free-word tree from `buf` down to `max_len`,
/// tallying property holders at every depth in `count_from..`.
struct Walker<'a> {
    spec: &'a SearchSpec,
    factor: u64,
    counts: Vec<u64>,
    witnesses: Vec<Vec<Word>>,
    scratch: Vec<Letter>,
}

impl<'a> Walker<'a> {
    fn new(spec: &'a SearchSpec) -> Walker<'a> {
        let factor = if spec.symmetry_reduction { spec.alphabet.size() as u64 } else { 1 };
        Walker {
            spec,
            factor,
            counts: vec![0; spec.max_len + 1],
            witnesses: vec![Vec::new(); spec.max_len + 1],
            scratch: Vec::new(),
        }
    }

    fn record(&mut self, buf: &[Letter]) {
        let n = buf.len();
        if n < self.spec.min_len {
            return;
        }
        if props::holds_on_free(buf, self.spec.alphabet, self.spec.kind, self.spec.property, &mut self.scratch)
        {
            self.counts[n] += self.factor;
            if self.witnesses[n].len() < self.spec.witness_limit {
                self.witnesses[n].push(Word::new(buf.to_vec(), self.spec.alphabet).unwrap());
            }
        }
    }

    /// Depth-first walk from the current buffer down to `to_depth`; calls
    /// `record` on every node strictly deeper than the buffer's start depth.
    fn descend(&mut self, buf: &mut Vec<Letter>, to_depth: usize) {
        if buf.len() == to_depth {
            return;
        }
        let first_only = self.spec.symmetry_reduction && buf.is_empty();
        for letter in self.spec.alphabet.letters() {
            if first_only && letter != Letter::new(0) {
                break;
            }
            buf.push(letter);
            if detect::suffix_repetition_in(buf, self.spec.kind).is_none() {
                self.record(buf);
                self.descend(buf, to_depth);
            }
            buf.pop();
        }
    }

    /// Like `descend`, but also collect the free words at `frontier_depth`.
    fn descend_collecting(
        &mut self,
        buf: &mut Vec<Letter>,
        frontier_depth: usize,
        frontier: &mut Vec<Vec<Letter>>,
    ) {
        if buf.len() == frontier_depth {
            frontier.push(buf.clone());
            return;
        }
        let first_only = self.spec.symmetry_reduction && buf.is_empty();
        for letter in self.spec.alphabet.letters() {
            if first_only && letter != Letter::new(0) {
                break;
            }
            buf.push(letter);
            if detect::suffix_repetition_in(buf, self.spec.kind).is_none() {
                self.record(buf);
                self.descend_collecting(buf, frontier_depth, frontier);
            }
            buf.pop();
        }
    }
}

/// Split depth for the parallel phase: prefixes of this length form the work
/// items.
const DEFAULT_SPLIT_DEPTH: usize = 12;

/// Count and sample the free words with the property at every length in the
/// spec's range.
pub fn classify(spec: &SearchSpec) -> LengthClassification {
    classify_with(spec, DEFAULT_SPLIT_DEPTH)
}

/// [`classify`] with an explicit split depth (the result does not depend on
/// it; it only shapes the work items).
pub fn classify_with(spec: &SearchSpec, split_depth: usize) -> LengthClassification {
    assert!(spec.min_len <= spec.max_len, "empty length range");
    let boundary = split_depth.min(spec.max_len);

    // The empty word satisfies none of the properties, so depth 0 never
    // counts; the walk starts contributing at depth 1.
    // The head walk records every node it pushes, frontier nodes included;
    // the workers below only record nodes strictly deeper than the boundary.
    let mut head = Walker::new(spec);
    let mut frontier = Vec::new();
    let mut buf = Vec::with_capacity(spec.max_len);
    head.descend_collecting(&mut buf, boundary, &mut frontier);

    let mut counts = head.counts;
    let mut witnesses = head.witnesses;
    if boundary < spec.max_len {
        let parts: Vec<(Vec<u64>, Vec<Vec<Word>>)> = frontier
            .par_iter()
            .map(|prefix| {
                let mut worker = Walker::new(spec);
                let mut buf = prefix.clone();
                buf.reserve(spec.max_len - buf.len());
                worker.descend(&mut buf, spec.max_len);
                (worker.counts, worker.witnesses)
            })
            .collect();
        // Prefixes were generated in lexicographic order and same-length
        // words from distinct prefixes compare like their prefixes, so an
        // in-order merge keeps witness lists lexicographically first.
        for (part_counts, part_witnesses) in parts {
            for n in 0..=spec.max_len {
                counts[n] += part_counts[n];
                for w in &part_witnesses[n] {
                    if witnesses[n].len() < spec.witness_limit {
                        witnesses[n].push(w.clone());
                    }
                }
            }
        }
    }

    LengthClassification {
        spec: spec.clone(),
        counts: (spec.min_len..=spec.max_len).map(|n| (n, counts[n])).collect(),
        witnesses: (spec.min_len..=spec.max_len)
            .map(|n| (n, std::mem::take(&mut witnesses[n])))
            .collect(),
    }
}

/// All k-delicate kind-free words of length at most `max_len` (up to `limit`
/// of them in search order), sorted by length and then lexicographically.
pub fn search_k_delicate(
    alphabet: Alphabet,
    kind: RepetitionKind,
    k: usize,
    max_len: usize,
    limit: Option<usize>,
) -> Vec<Word> {
    fn rec(
        buf: &mut Vec<Letter>,
        alphabet: Alphabet,
        kind: RepetitionKind,
        k: usize,
        max_len: usize,
        limit: usize,
        scratch: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        if out.len() >= limit || buf.len() == max_len {
            return;
        }
        for letter in alphabet.letters() {
            buf.push(letter);
            if detect::suffix_repetition_in(buf, kind).is_none() {
                if props::holds_on_free(buf, alphabet, kind, PropertyKind::KDelicate(k), scratch) {
                    out.push(Word::new(buf.clone(), alphabet).unwrap());
                }
                rec(buf, alphabet, kind, k, max_len, limit, scratch, out);
            }
            buf.pop();
            if out.len() >= limit {
                return;
            }
        }
    }

    let mut out = Vec::new();
    let mut scratch = Vec::new();
    rec(
        &mut Vec::with_capacity(max_len),
        alphabet,
        kind,
        k,
        max_len,
        limit.unwrap_or(usize::MAX),
        &mut scratch,
        &mut out,
    );
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed cache line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("stale cache: {reason}")]
    Stale { reason: String },
    #[error("cache witness {word:?} at length {n} fails re-validation")]
    InvalidWitness { n: usize, word: String },
}

const CACHE_MAGIC: &str = "barely-classification";

/// Write a classification to a line-oriented text file: a fingerprint header,
/// then one `n count witness...` record per length.
pub fn save_classification(c: &LengthClassification, path: &Path) -> Result<(), CacheError> {
    let mut out = String::new();
    out.push_str(&format!(
        "{CACHE_MAGIC} code={} {}\n",
        env!("CARGO_PKG_VERSION"),
        c.spec.fingerprint()
    ));
    for (n, count) in &c.counts {
        out.push_str(&format!("{n} {count}"));
        for w in &c.witnesses[n] {
            out.push_str(&format!(" {w}"));
        }
        out.push('\n');
    }
    let mut file = std::fs::File::create(path)?;
    file.write_all(out.as_bytes())?;
    Ok(())
}

/// Read a classification back, refusing files whose fingerprint or code
/// version differs from `expected` and re-validating every stored witness
/// against the checkers.
pub fn load_classification(path: &Path, expected: &SearchSpec) -> Result<LengthClassification, CacheError> {
    let file = BufReader::new(std::fs::File::open(path)?);
    let mut lines = file.lines().enumerate();

    let (_, header) = lines
        .next()
        .ok_or_else(|| CacheError::Malformed { line: 1, reason: "empty file".into() })?;
    let header = header?;
    let expected_header = format!(
        "{CACHE_MAGIC} code={} {}",
        env!("CARGO_PKG_VERSION"),
        expected.fingerprint()
    );
    if header != expected_header {
        return Err(CacheError::Stale {
            reason: format!("header {header:?} does not match {expected_header:?}"),
        });
    }

    let mut counts = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut scratch = Vec::new();
    for (idx, line) in lines {
        let line = line?;
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let n: usize = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| CacheError::Malformed { line: lineno, reason: "bad length field".into() })?;
        let count: u64 = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| CacheError::Malformed { line: lineno, reason: "bad count field".into() })?;
        if n < expected.min_len || n > expected.max_len || counts.contains_key(&n) {
            return Err(CacheError::Malformed {
                line: lineno,
                reason: format!("unexpected length {n}"),
            });
        }
        let mut ws = Vec::new();
        for field in fields {
            let word = Word::from_text(field, expected.alphabet).map_err(|e| CacheError::Malformed {
                line: lineno,
                reason: e.to_string(),
            })?;
            let valid = word.len() == n
                && detect::is_free(&word, expected.kind)
                && props::holds_on_free(
                    word.letters(),
                    expected.alphabet,
                    expected.kind,
                    expected.property,
                    &mut scratch,
                );
            if !valid {
                return Err(CacheError::InvalidWitness { n, word: field.to_string() });
            }
            ws.push(word);
        }
        if ws.len() as u64 > count {
            return Err(CacheError::Malformed {
                line: lineno,
                reason: format!("more witnesses than counted words at length {n}"),
            });
        }
        counts.insert(n, count);
        witnesses.insert(n, ws);
    }
    for n in expected.min_len..=expected.max_len {
        if !counts.contains_key(&n) {
            return Err(CacheError::Malformed { line: 0, reason: format!("missing length {n}") });
        }
    }
    Ok(LengthClassification { spec: expected.clone(), counts, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::oracle_is_free;

    fn all_words(alphabet: Alphabet, n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty(alphabet)];
        for _ in 0..n {
            out = out
                .iter()
                .flat_map(|w| alphabet.letters().map(move |l| w.insert_at(w.len(), l).unwrap()))
                .collect();
        }
        out
    }

    #[test]
    fn enumerate_counts_match_filtering() {
        for (alphabet, max) in [(Alphabet::BINARY, 10), (Alphabet::TERNARY, 7)] {
            for kind in RepetitionKind::ALL {
                for n in 0..=max {
                    let expected = all_words(alphabet, n)
                        .into_iter()
                        .filter(|w| oracle_is_free(w, kind))
                        .count() as u64;
                    assert_eq!(enumerate_free(alphabet, kind, n, |_| {}), expected, "{kind} {n}");
                }
            }
        }
    }

    #[test]
    fn enumerate_known_counts() {
        assert_eq!(enumerate_free(Alphabet::TERNARY, RepetitionKind::Square, 5, |_| {}), 30);
        assert_eq!(enumerate_free(Alphabet::BINARY, RepetitionKind::Cube, 3, |_| {}), 6);
        assert_eq!(enumerate_free(Alphabet::BINARY, RepetitionKind::Square, 4, |_| {}), 0);
        assert_eq!(enumerate_free(Alphabet::BINARY, RepetitionKind::Overlap, 0, |_| {}), 1);
    }

    #[test]
    fn enumerate_visits_lexicographically() {
        let mut seen = Vec::new();
        enumerate_free(Alphabet::BINARY, RepetitionKind::Cube, 5, |w| seen.push(w.clone()));
        let expected: Vec<Word> = all_words(Alphabet::BINARY, 5)
            .into_iter()
            .filter(|w| oracle_is_free(w, RepetitionKind::Cube))
            .collect();
        assert_eq!(seen, expected);
    }

    fn spec(
        alphabet: Alphabet,
        kind: RepetitionKind,
        property: PropertyKind,
        max_len: usize,
    ) -> SearchSpec {
        SearchSpec {
            alphabet,
            kind,
            property,
            min_len: 1,
            max_len,
            symmetry_reduction: true,
            witness_limit: 2,
        }
    }

    #[test]
    fn classify_small_irreducible_overlap() {
        let c = classify(&spec(Alphabet::BINARY, RepetitionKind::Overlap, PropertyKind::Irreducible, 13));
        assert_eq!(c.admitted(), BTreeSet::from([6, 8, 9, 10, 12, 13]));
        assert_eq!(c.witnesses[&6][0].to_string(), "010010");
    }

    #[test]
    fn classify_small_delicate_square() {
        let c = classify(&spec(Alphabet::TERNARY, RepetitionKind::Square, PropertyKind::Delicate, 10));
        assert_eq!(c.admitted(), BTreeSet::from([5, 7, 8, 9, 10]));
    }

    #[test]
    fn classify_independent_of_split_depth_and_reduction() {
        let reduced = spec(Alphabet::BINARY, RepetitionKind::Overlap, PropertyKind::Delicate, 11);
        let base = classify_with(&reduced, 0);
        for depth in [1, 3, 7, 64] {
            let other = classify_with(&reduced, depth);
            assert_eq!(base.counts, other.counts);
            assert_eq!(base.witnesses, other.witnesses);
        }
        let full = SearchSpec { symmetry_reduction: false, ..reduced.clone() };
        let unreduced = classify(&full);
        assert_eq!(base.counts, unreduced.counts);
        // With a limit of one, the single witness is the lexicographic
        // minimum either way.
        let one = SearchSpec { witness_limit: 1, ..reduced.clone() };
        let one_full = SearchSpec { witness_limit: 1, symmetry_reduction: false, ..reduced };
        assert_eq!(classify(&one).witnesses, classify(&one_full).witnesses);
    }

    #[test]
    fn classify_counts_match_unpruned_filtering() {
        let s = spec(Alphabet::TERNARY, RepetitionKind::Square, PropertyKind::Irreducible, 7);
        let c = classify(&s);
        for n in 1..=7 {
            let expected = all_words(Alphabet::TERNARY, n)
                .into_iter()
                .filter(|w| {
                    oracle_is_free(w, RepetitionKind::Square)
                        && props::check(w, RepetitionKind::Square, PropertyKind::Irreducible).holds
                })
                .count() as u64;
            assert_eq!(c.counts[&n], expected, "length {n}");
        }
    }

    #[test]
    fn search_k_delicate_examples() {
        let hits = search_k_delicate(Alphabet::BINARY, RepetitionKind::Overlap, 1, 9, None);
        assert!(hits.iter().any(|w| w.to_string() == "001011001"));
        for w in &hits {
            assert!(props::is_k_delicate(w, RepetitionKind::Overlap, 1).holds);
        }
        let hits = search_k_delicate(Alphabet::TERNARY, RepetitionKind::Square, 1, 5, None);
        assert!(!hits.is_empty());
        assert!(hits.iter().all(|w| w.len() == 5));
        let limited = search_k_delicate(Alphabet::BINARY, RepetitionKind::Overlap, 1, 9, Some(2));
        assert_eq!(limited.len(), 2);
    }

    #[test]
    fn cache_roundtrip_and_validation() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.cache");
        let s = spec(Alphabet::BINARY, RepetitionKind::Overlap, PropertyKind::Irreducible, 10);
        let c = classify(&s);
        save_classification(&c, &path).unwrap();
        let loaded = load_classification(&path, &s).unwrap();
        assert_eq!(loaded, c);

        // A different spec is stale.
        let other = SearchSpec { max_len: 11, ..s.clone() };
        assert!(matches!(load_classification(&path, &other), Err(CacheError::Stale { .. })));

        // A tampered witness fails re-validation.
        let text = std::fs::read_to_string(&path).unwrap();
        let tampered = text.replace("010010", "010110");
        std::fs::write(&path, &tampered).unwrap();
        assert!(matches!(
            load_classification(&path, &s),
            Err(CacheError::InvalidWitness { n: 6, .. })
        ));

        // A missing record is malformed.
        let truncated: Vec<&str> = text.lines().take(text.lines().count() - 1).collect();
        std::fs::write(&path, truncated.join("\n")).unwrap();
        assert!(matches!(load_classification(&path, &s), Err(CacheError::Malformed { .. })));
    }
}
