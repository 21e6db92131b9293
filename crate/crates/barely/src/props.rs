//! Checkers for the boundary properties: extremal, irreducible, delicate,
//! and k-delicate words.
//!
//! Every property quantifies over a family of one-shot edits (insertions,
//! interior deletions, or letter changes) and requires each edit to create a
//! repetition. The checkers exploit locality: an edit can only create a
//! repetition whose span covers an edited position, so each edit costs a
//! bounded scan around that position instead of a full rescan. The
//! boolean-only path reuses one scratch buffer; the report path materializes
//! a witness per edit.

use itertools::Itertools;
use thiserror::Error;

use crate::detect::{self, Occurrence, RepetitionKind};
use crate::word::{Alphabet, Letter, Word, WordError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PropertyKind {
    /// Free, and inserting any letter at any position breaks freeness.
    Extremal,
    /// Free, length at least 3, and deleting any interior letter breaks
    /// freeness.
    Irreducible,
    /// Free, nonempty, and changing any letter to any other letter breaks
    /// freeness.
    Delicate,
    /// Free, nonempty, and changing the letters on any nonempty set of at
    /// most k positions (each to a different letter) breaks freeness.
    KDelicate(usize),
}

impl std::fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PropertyKind::Extremal => f.write_str("extremal"),
            PropertyKind::Irreducible => f.write_str("irreducible"),
            PropertyKind::Delicate => f.write_str("delicate"),
            PropertyKind::KDelicate(k) => write!(f, "k-delicate:{k}"),
        }
    }
}

impl std::str::FromStr for PropertyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "extremal" => Ok(PropertyKind::Extremal),
            "irreducible" => Ok(PropertyKind::Irreducible),
            "delicate" => Ok(PropertyKind::Delicate),
            _ => match s.strip_prefix("k-delicate:").and_then(|k| k.parse().ok()) {
                Some(k) => Ok(PropertyKind::KDelicate(k)),
                None => Err(format!("unknown property {s:?}")),
            },
        }
    }
}

/// One edit of the subject word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mutation {
    Delete { index: usize },
    /// Simultaneous letter changes; positions are distinct and ascending.
    Replace { changes: Vec<(usize, Letter)> },
    Insert { index: usize, letter: Letter },
}

impl Mutation {
    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        match self {
            Mutation::Delete { index } => w.delete_at(*index),
            Mutation::Replace { changes } => {
                let mut out = w.clone();
                for &(i, l) in changes {
                    out = out.replace_at(i, l)?;
                }
                Ok(out)
            }
            Mutation::Insert { index, letter } => w.insert_at(*index, *letter),
        }
    }
}

impl std::fmt::Display for Mutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mutation::Delete { index } => write!(f, "delete:{index}"),
            Mutation::Replace { changes } => {
                f.write_str("replace:")?;
                for (n, (i, l)) in changes.iter().enumerate() {
                    if n > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{i}={l}")?;
                }
                Ok(())
            }
            Mutation::Insert { index, letter } => write!(f, "insert:{index}={letter}"),
        }
    }
}

/// An edit together with a repetition it creates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationWitness {
    pub mutation: Mutation,
    pub created: Occurrence,
}

/// Outcome of a property check. When the property holds, `witnesses` has one
/// entry per quantified edit, in position-major and then letter-minor order
/// (for `is_extremal_fast`, only the edits the shortcut actually tests).
/// When it fails because some edit keeps the word free, that edit is in
/// `counterexample`; when the subject itself is not free or too short, both
/// lists are empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub subject: Word,
    pub kind: RepetitionKind,
    pub property: PropertyKind,
    pub holds: bool,
    pub witnesses: Vec<MutationWitness>,
    pub counterexample: Option<Mutation>,
}

impl PropertyReport {
    /// Re-check the report from scratch: each witness mutation must produce
    /// a word on which the recorded occurrence validates, and a
    /// counterexample mutation must produce a free word.
    pub fn verify(&self) -> bool {
        for witness in &self.witnesses {
            match witness.mutation.apply(&self.subject) {
                Ok(mutated) => {
                    if !witness.created.validate(&mutated) {
                        return false;
                    }
                }
                Err(_) => return false,
            }
        }
        match &self.counterexample {
            Some(mutation) => {
                !self.holds
                    && match mutation.apply(&self.subject) {
                        Ok(mutated) => detect::is_free(&mutated, self.kind),
                        Err(_) => false,
                    }
            }
            None => true,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalFastError {
    #[error("fast extremality check requires a binary word")]
    NotBinary,
    #[error("fast extremality check requires an overlap-free word")]
    NotOverlapFree,
}

/// Splitting a binary overlap-free word anywhere with at least this many
/// letters on both sides guarantees that every one-letter insertion at the
/// split creates an overlap, so the fast check only probes positions closer
/// than this to either end.
const EXTEND_EDGE: usize = 5;

fn fail(w: &Word, kind: RepetitionKind, property: PropertyKind) -> PropertyReport {
    PropertyReport {
        subject: w.clone(),
        kind,
        property,
        holds: false,
        witnesses: Vec::new(),
        counterexample: None,
    }
}

fn run_check(
    w: &Word,
    kind: RepetitionKind,
    property: PropertyKind,
    mutations: impl IntoIterator<Item = Mutation>,
) -> PropertyReport {
    let mut witnesses = Vec::new();
    for mutation in mutations {
        let mutated = mutation.apply(w).expect("mutation fits the subject");
        let letters = mutated.letters();
        let created = match &mutation {
            Mutation::Delete { index } => detect::repetition_covering(letters, kind, index - 1, *index),
            Mutation::Replace { changes } => changes
                .iter()
                .find_map(|&(i, _)| detect::repetition_covering(letters, kind, i, i)),
            Mutation::Insert { index, .. } => detect::repetition_covering(letters, kind, *index, *index),
        };
        match created {
            Some(created) => witnesses.push(MutationWitness { mutation, created }),
            None => {
                return PropertyReport {
                    subject: w.clone(),
                    kind,
                    property,
                    holds: false,
                    witnesses: Vec::new(),
                    counterexample: Some(mutation),
                }
            }
        }
    }
    PropertyReport { subject: w.clone(), kind, property, holds: true, witnesses, counterexample: None }
}

fn replace_mutations(w: &Word, max_changes: usize) -> Vec<Mutation> {
    let n = w.len();
    let alphabet = w.alphabet();
    let mut out = Vec::new();
    for size in 1..=max_changes.min(n) {
        for positions in (0..n).combinations(size) {
            let choices: Vec<Vec<(usize, Letter)>> = positions
                .iter()
                .map(|&i| {
                    alphabet
                        .letters()
                        .filter(|&l| l != w.letters()[i])
                        .map(|l| (i, l))
                        .collect()
                })
                .collect();
            for changes in choices.into_iter().multi_cartesian_product() {
                out.push(Mutation::Replace { changes });
            }
        }
    }
    out
}

/// Is `w` free with every interior deletion breaking freeness? Words shorter
/// than 3 letters are never irreducible.
pub fn is_irreducible(w: &Word, kind: RepetitionKind) -> PropertyReport {
    if w.len() < 3 || !detect::is_free(w, kind) {
        return fail(w, kind, PropertyKind::Irreducible);
    }
    run_check(
        w,
        kind,
        PropertyKind::Irreducible,
        (1..w.len() - 1).map(|index| Mutation::Delete { index }),
    )
}

/// Is `w` free with every single-letter change breaking freeness? The
/// quantifier is universal over both the position and the replacement
/// letter.
pub fn is_delicate(w: &Word, kind: RepetitionKind) -> PropertyReport {
    if w.is_empty() || !detect::is_free(w, kind) {
        return fail(w, kind, PropertyKind::Delicate);
    }
    run_check(w, kind, PropertyKind::Delicate, replace_mutations(w, 1))
}

/// Is `w` free with every change of up to `k` letters breaking freeness?
pub fn is_k_delicate(w: &Word, kind: RepetitionKind, k: usize) -> PropertyReport {
    if w.is_empty() || !detect::is_free(w, kind) {
        return fail(w, kind, PropertyKind::KDelicate(k));
    }
    run_check(w, kind, PropertyKind::KDelicate(k), replace_mutations(w, k))
}

/// Is `w` free with every one-letter insertion breaking freeness?
pub fn is_extremal(w: &Word, kind: RepetitionKind) -> PropertyReport {
    if !detect::is_free(w, kind) {
        return fail(w, kind, PropertyKind::Extremal);
    }
    let alphabet = w.alphabet();
    run_check(
        w,
        kind,
        PropertyKind::Extremal,
        (0..=w.len())
            .flat_map(|index| alphabet.letters().map(move |letter| Mutation::Insert { index, letter })),
    )
}

/// Extremality for binary overlap-free words, probing only insertions near
/// the two ends; insertions with five or more letters on both sides always
/// create an overlap, so the verdict matches [`is_extremal`] while testing
/// O(1) positions. Witnesses are recorded for the probed insertions only.
pub fn is_extremal_fast(w: &Word) -> Result<PropertyReport, ExtremalFastError> {
    if w.alphabet() != Alphabet::BINARY {
        return Err(ExtremalFastError::NotBinary);
    }
    if !detect::is_free(w, RepetitionKind::Overlap) {
        return Err(ExtremalFastError::NotOverlapFree);
    }
    let n = w.len();
    let alphabet = w.alphabet();
    Ok(run_check(
        w,
        RepetitionKind::Overlap,
        PropertyKind::Extremal,
        (0..=n)
            .filter(|&i| i < EXTEND_EDGE || n - i < EXTEND_EDGE)
            .flat_map(|index| alphabet.letters().map(move |letter| Mutation::Insert { index, letter })),
    ))
}

/// Dispatch on a [`PropertyKind`].
pub fn check(w: &Word, kind: RepetitionKind, property: PropertyKind) -> PropertyReport {
    match property {
        PropertyKind::Extremal => is_extremal(w, kind),
        PropertyKind::Irreducible => is_irreducible(w, kind),
        PropertyKind::Delicate => is_delicate(w, kind),
        PropertyKind::KDelicate(k) => is_k_delicate(w, kind, k),
    }
}

/// Boolean-only check, skipping witness bookkeeping.
pub fn holds(w: &Word, kind: RepetitionKind, property: PropertyKind) -> bool {
    detect::is_free(w, kind)
        && holds_on_free(w.letters(), w.alphabet(), kind, property, &mut Vec::new())
}

/// Fast path for the enumerator: `letters` is already known to be free.
pub(crate) fn holds_on_free(
    letters: &[Letter],
    alphabet: Alphabet,
    kind: RepetitionKind,
    property: PropertyKind,
    scratch: &mut Vec<Letter>,
) -> bool {
    match property {
        PropertyKind::Extremal => extremal_on_free(letters, alphabet, kind, scratch),
        PropertyKind::Irreducible => irreducible_on_free(letters, kind, scratch),
        PropertyKind::Delicate => single_changes_all_break(letters, alphabet, kind, scratch),
        PropertyKind::KDelicate(k) => k_delicate_on_free(letters, alphabet, kind, k, scratch),
    }
}

fn irreducible_on_free(letters: &[Letter], kind: RepetitionKind, scratch: &mut Vec<Letter>) -> bool {
    let n = letters.len();
    if n < 3 {
        return false;
    }
    for i in 1..n - 1 {
        scratch.clear();
        scratch.extend_from_slice(&letters[..i]);
        scratch.extend_from_slice(&letters[i + 1..]);
        if detect::repetition_covering(scratch, kind, i - 1, i).is_none() {
            return false;
        }
    }
    true
}

fn single_changes_all_break(
    letters: &[Letter],
    alphabet: Alphabet,
    kind: RepetitionKind,
    scratch: &mut Vec<Letter>,
) -> bool {
    let n = letters.len();
    if n == 0 {
        return false;
    }
    scratch.clear();
    scratch.extend_from_slice(letters);
    for i in 0..n {
        let original = letters[i];
        for letter in alphabet.letters() {
            if letter == original {
                continue;
            }
            scratch[i] = letter;
            let created = detect::repetition_covering(scratch, kind, i, i).is_some();
            if !created {
                scratch[i] = original;
                return false;
            }
        }
        scratch[i] = original;
    }
    true
}

fn k_delicate_on_free(
    letters: &[Letter],
    alphabet: Alphabet,
    kind: RepetitionKind,
    k: usize,
    scratch: &mut Vec<Letter>,
) -> bool {
    let n = letters.len();
    if n == 0 {
        return false;
    }
    // Single changes are both the most common failure and the cheapest, so
    // settle them before touching larger sets.
    if k >= 1 && !single_changes_all_break(letters, alphabet, kind, scratch) {
        return false;
    }
    scratch.clear();
    scratch.extend_from_slice(letters);
    for size in 2..=k.min(n) {
        for positions in (0..n).combinations(size) {
            let choices: Vec<Vec<Letter>> = positions
                .iter()
                .map(|&i| alphabet.letters().filter(|&l| l != letters[i]).collect())
                .collect();
            for assignment in choices.into_iter().multi_cartesian_product() {
                for (&i, &l) in positions.iter().zip(&assignment) {
                    scratch[i] = l;
                }
                let created = positions
                    .iter()
                    .any(|&i| detect::repetition_covering(scratch, kind, i, i).is_some());
                for &i in &positions {
                    scratch[i] = letters[i];
                }
                if !created {
                    return false;
                }
            }
        }
    }
    true
}

fn extremal_on_free(
    letters: &[Letter],
    alphabet: Alphabet,
    kind: RepetitionKind,
    scratch: &mut Vec<Letter>,
) -> bool {
    let n = letters.len();
    for i in 0..=n {
        scratch.clear();
        scratch.extend_from_slice(&letters[..i]);
        scratch.push(Letter::new(0));
        scratch.extend_from_slice(&letters[i..]);
        for letter in alphabet.letters() {
            scratch[i] = letter;
            if detect::repetition_covering(scratch, kind, i, i).is_none() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::oracle_is_free;
    use proptest::prelude::*;

    fn b(text: &str) -> Word {
        Word::from_text(text, Alphabet::BINARY).unwrap()
    }

    fn t(text: &str) -> Word {
        Word::from_text(text, Alphabet::TERNARY).unwrap()
    }

    /// All kind-free words of length `n`, by unpruned filtering.
    fn free_words(alphabet: Alphabet, kind: RepetitionKind, n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty(alphabet)];
        for _ in 0..n {
            out = out
                .iter()
                .flat_map(|w| alphabet.letters().map(move |l| w.insert_at(w.len(), l).unwrap()))
                .filter(|w| detect::suffix_repetition(w, kind).is_none())
                .collect();
        }
        out
    }

    /// Definition-literal property check via the quartic freeness oracle.
    fn oracle_holds(w: &Word, kind: RepetitionKind, property: PropertyKind) -> bool {
        if !oracle_is_free(w, kind) {
            return false;
        }
        let all_break = |mutations: Vec<Mutation>| {
            mutations.iter().all(|m| !oracle_is_free(&m.apply(w).unwrap(), kind))
        };
        match property {
            PropertyKind::Irreducible => {
                w.len() >= 3
                    && all_break((1..w.len() - 1).map(|index| Mutation::Delete { index }).collect())
            }
            PropertyKind::Delicate => !w.is_empty() && all_break(replace_mutations(w, 1)),
            PropertyKind::KDelicate(k) => !w.is_empty() && all_break(replace_mutations(w, k)),
            PropertyKind::Extremal => all_break(
                (0..=w.len())
                    .flat_map(|index| {
                        w.alphabet().letters().map(move |letter| Mutation::Insert { index, letter })
                    })
                    .collect(),
            ),
        }
    }

    #[test]
    fn irreducible_examples() {
        let r = is_irreducible(&t("010"), RepetitionKind::Square);
        assert!(r.holds);
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.verify());
        assert!(is_irreducible(&b("010010"), RepetitionKind::Overlap).holds);
        assert!(is_irreducible(&b("01101001"), RepetitionKind::Overlap).holds);
        assert!(is_irreducible(&b("0100101101"), RepetitionKind::Cube).holds);
        // 012: deleting the 1 gives 02, which is still square-free.
        let r = is_irreducible(&t("012"), RepetitionKind::Square);
        assert!(!r.holds);
        assert_eq!(r.counterexample, Some(Mutation::Delete { index: 1 }));
        assert!(r.verify());
        // Too short, or not free.
        assert!(!is_irreducible(&t("01"), RepetitionKind::Square).holds);
        assert!(!is_irreducible(&b("0101"), RepetitionKind::Square).holds);
    }

    #[test]
    fn delicate_examples() {
        assert!(is_delicate(&b("001011001"), RepetitionKind::Overlap).holds);
        assert!(is_delicate(&t("12021"), RepetitionKind::Square).holds);
        assert!(is_delicate(&b("00101001101001101011"), RepetitionKind::Cube).holds);
        let r = is_delicate(&b("0"), RepetitionKind::Square);
        assert!(!r.holds);
        assert_eq!(
            r.counterexample,
            Some(Mutation::Replace { changes: vec![(0, Letter::new(1))] })
        );
        assert!(!is_delicate(&Word::empty(Alphabet::BINARY), RepetitionKind::Square).holds);
        let r = is_delicate(&t("12021"), RepetitionKind::Square);
        // 5 positions, 2 alternative letters each.
        assert_eq!(r.witnesses.len(), 10);
        assert!(r.verify());
    }

    #[test]
    fn extremal_examples() {
        let w0 = b("01100110100110010110011010011001");
        let r = is_extremal(&w0, RepetitionKind::Overlap);
        assert!(r.holds);
        assert_eq!(r.witnesses.len(), (w0.len() + 1) * 2);
        assert!(r.verify());
        assert!(!is_extremal(&Word::empty(Alphabet::BINARY), RepetitionKind::Overlap).holds);
        assert!(!is_extremal(&b("01101001"), RepetitionKind::Overlap).holds);
    }

    #[test]
    fn extremal_fast_examples() {
        let w0 = b("01100110100110010110011010011001");
        assert!(is_extremal_fast(&w0).unwrap().holds);
        let r = is_extremal_fast(&b("01101001")).unwrap();
        assert!(!r.holds);
        assert!(r.verify());
        assert_eq!(is_extremal_fast(&t("012")).unwrap_err(), ExtremalFastError::NotBinary);
        assert_eq!(is_extremal_fast(&b("0110110")).unwrap_err(), ExtremalFastError::NotOverlapFree);
    }

    #[test]
    fn extremal_fast_matches_full_exhaustively() {
        for n in 0..=16 {
            for w in free_words(Alphabet::BINARY, RepetitionKind::Overlap, n) {
                assert_eq!(
                    is_extremal_fast(&w).unwrap().holds,
                    is_extremal(&w, RepetitionKind::Overlap).holds,
                    "{w}"
                );
            }
        }
    }

    #[test]
    fn checkers_match_oracle_small() {
        let props = [
            PropertyKind::Extremal,
            PropertyKind::Irreducible,
            PropertyKind::Delicate,
            PropertyKind::KDelicate(2),
        ];
        for n in 0..=9 {
            for w in free_words(Alphabet::BINARY, RepetitionKind::Overlap, n) {
                for property in props {
                    assert_eq!(
                        holds(&w, RepetitionKind::Overlap, property),
                        oracle_holds(&w, RepetitionKind::Overlap, property),
                        "{w} {property}"
                    );
                    assert_eq!(
                        check(&w, RepetitionKind::Overlap, property).holds,
                        oracle_holds(&w, RepetitionKind::Overlap, property),
                        "{w} {property}"
                    );
                }
            }
        }
        for n in 0..=6 {
            for w in free_words(Alphabet::TERNARY, RepetitionKind::Square, n) {
                for property in props {
                    assert_eq!(
                        holds(&w, RepetitionKind::Square, property),
                        oracle_holds(&w, RepetitionKind::Square, property),
                        "{w} {property}"
                    );
                }
            }
        }
    }

    #[test]
    fn k_delicate_example_and_relations() {
        let w = b("001011001");
        let one = is_k_delicate(&w, RepetitionKind::Overlap, 1);
        assert_eq!(one.holds, is_delicate(&w, RepetitionKind::Overlap).holds);
        let two = is_k_delicate(&w, RepetitionKind::Overlap, 2);
        assert_eq!(two.holds, oracle_holds(&w, RepetitionKind::Overlap, PropertyKind::KDelicate(2)));
        assert!(two.verify());
        // Growing k only strengthens the property.
        for n in 1..=8 {
            for w in free_words(Alphabet::BINARY, RepetitionKind::Overlap, n) {
                if holds(&w, RepetitionKind::Overlap, PropertyKind::KDelicate(2)) {
                    assert!(holds(&w, RepetitionKind::Overlap, PropertyKind::Delicate), "{w}");
                }
            }
        }
    }

    #[test]
    fn reports_enumerate_edits_in_order() {
        let r = is_delicate(&t("010"), RepetitionKind::Square);
        assert!(!r.holds); // changing position 0 to 2 gives 210, square-free
        let r = is_irreducible(&b("0100101101"), RepetitionKind::Cube);
        let deletions: Vec<_> = r
            .witnesses
            .iter()
            .map(|w| match w.mutation {
                Mutation::Delete { index } => index,
                _ => panic!("unexpected mutation"),
            })
            .collect();
        assert_eq!(deletions, (1..=8).collect::<Vec<_>>());
        let r = is_delicate(&t("12021"), RepetitionKind::Square);
        let changes: Vec<_> = r
            .witnesses
            .iter()
            .map(|w| match &w.mutation {
                Mutation::Replace { changes } => changes[0],
                _ => panic!("unexpected mutation"),
            })
            .collect();
        assert_eq!(changes[0], (0, Letter::new(0)));
        assert_eq!(changes[1], (0, Letter::new(2)));
        assert_eq!(changes[2], (1, Letter::new(0)));
    }

    #[test]
    fn properties_invariant_under_symmetry_small() {
        use crate::word::SymmetryOp;
        let props = [PropertyKind::Extremal, PropertyKind::Irreducible, PropertyKind::Delicate];
        for n in 0..=9 {
            for w in free_words(Alphabet::BINARY, RepetitionKind::Overlap, n) {
                for property in props {
                    let verdict = holds(&w, RepetitionKind::Overlap, property);
                    for op in SymmetryOp::all(Alphabet::BINARY) {
                        let image = w.apply_symmetry(&op).unwrap();
                        assert_eq!(verdict, holds(&image, RepetitionKind::Overlap, property), "{w} {property}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn fast_and_report_paths_agree(letters in prop::collection::vec(0u8..3, 0..12)) {
            let word = Word::new(letters.into_iter().map(Letter::new).collect(), Alphabet::TERNARY).unwrap();
            for kind in RepetitionKind::ALL {
                for property in [PropertyKind::Extremal, PropertyKind::Irreducible, PropertyKind::Delicate, PropertyKind::KDelicate(2)] {
                    let report = check(&word, kind, property);
                    prop_assert_eq!(report.holds, holds(&word, kind, property));
                    prop_assert!(report.verify());
                }
            }
        }
    }
}
