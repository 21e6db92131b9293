//! Command-line front end for the `barely` library.
//!
//! Every command prints line-oriented `key=value` records on stdout and
//! follows one exit-code contract: 0 when the answer is positive (property
//! holds, verification passes, morphism preserves), 1 when it is negative,
//! 2 on usage, parse, or I/O errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use barely::construct::{self, ConstructError, Theorem};
use barely::detect;
use barely::enumerate::{self, CacheError, LengthClassification, SearchSpec};
use barely::morphism::{self, Morphism, Preservation};
use barely::props;
use barely::streams::{self, InfiniteWordId, PrefixSpec};
use barely::{Alphabet, Occurrence, PropertyKind, RepetitionKind, Word};

/// Exact searches, checks, and constructions for barely-free words.
#[derive(Parser)]
#[command(name = "barely", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one word for a barely-free property.
    Check(CheckArgs),
    /// Count and sample property words at every length up to a bound.
    Classify(ClassifyArgs),
    /// Build a word of a given length from one of the construction families.
    Construct(ConstructArgs),
    /// Cross-check construction families against exhaustive search.
    Verify(VerifyArgs),
    /// Decide whether a morphism file preserves freeness.
    MorphismTest(MorphismTestArgs),
    /// Print a prefix of one of the built-in infinite words.
    Prefix(PrefixArgs),
    /// List k-delicate free words up to a length bound.
    SearchKDelicate(SearchKDelicateArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Word to check, as a digit string.
    #[arg(long)]
    word: String,
    /// Repetition to avoid: square, overlap, or cube.
    #[arg(long)]
    kind: RepetitionKind,
    /// Property to check: extremal, irreducible, delicate, or k-delicate:<k>.
    #[arg(long)]
    property: PropertyKind,
    /// Alphabet size the word is read over.
    #[arg(long, default_value_t = 2)]
    alphabet: usize,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Repetition to avoid.
    #[arg(long)]
    kind: RepetitionKind,
    /// Property to classify by.
    #[arg(long)]
    property: PropertyKind,
    /// Alphabet size.
    #[arg(long, default_value_t = 2)]
    alphabet: usize,
    /// Largest length to search.
    #[arg(long)]
    max_len: usize,
    /// Smallest length to report.
    #[arg(long, default_value_t = 1)]
    min_len: usize,
    /// Witnesses kept per length.
    #[arg(long, default_value_t = 3)]
    witnesses: usize,
    /// Worker threads for the search; the output does not depend on this.
    #[arg(long)]
    jobs: Option<usize>,
    /// Cache file; defaults to a fingerprint-named file under $BARELY_CACHE_DIR
    /// when that variable is set.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    /// Construction family: irr-overlap, irr-cube, del-square, del-overlap,
    /// del-cube, or eid.
    #[arg(long)]
    theorem: Theorem,
    /// Target length.
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Construction family to check, or "all".
    #[arg(long)]
    theorem: String,
    /// Top length for the construction and exclusion sweeps (per-family
    /// default otherwise).
    #[arg(long)]
    max_len: Option<usize>,
    /// Doubling levels for the eid family.
    #[arg(long)]
    levels: Option<usize>,
    /// Cap the del-cube sweep at 36 letters.
    #[arg(long)]
    quick: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum PreservedKind {
    Square,
    Cube,
}

#[derive(Args)]
struct MorphismTestArgs {
    /// Morphism file: one `letter -> image` line per domain letter.
    #[arg(long)]
    file: PathBuf,
    /// Which freeness the morphism should preserve.
    #[arg(long, value_enum)]
    kind: PreservedKind,
}

#[derive(Args)]
struct PrefixArgs {
    /// Infinite word: thue-morse (t) or ternary-thue-morse (v).
    #[arg(long)]
    word: InfiniteWordId,
    /// Letters to skip before taking.
    #[arg(long, default_value_t = 0)]
    drop: usize,
    /// Letters to print.
    #[arg(long)]
    take: usize,
}

#[derive(Args)]
struct SearchKDelicateArgs {
    /// Repetition to avoid.
    #[arg(long)]
    kind: RepetitionKind,
    /// Alphabet size.
    #[arg(long, default_value_t = 2)]
    alphabet: usize,
    /// Mutation budget.
    #[arg(long)]
    k: usize,
    /// Largest length to search.
    #[arg(long)]
    max_len: usize,
    /// Stop after this many finds.
    #[arg(long)]
    limit: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check(args) => run_check(args),
        Command::Classify(args) => run_classify(args),
        Command::Construct(args) => run_construct(args),
        Command::Verify(args) => run_verify(args),
        Command::MorphismTest(args) => run_morphism_test(args),
        Command::Prefix(args) => run_prefix(args),
        Command::SearchKDelicate(args) => run_search_k_delicate(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn parse_alphabet(size: usize) -> Result<Alphabet> {
    Alphabet::new(size).map_err(Into::into)
}

fn fmt_occurrence(occ: &Occurrence) -> String {
    format!("{}@{}+{}", occ.kind, occ.start, occ.period)
}

fn run_check(args: CheckArgs) -> Result<ExitCode> {
    let alphabet = parse_alphabet(args.alphabet)?;
    let word = Word::from_text(&args.word, alphabet)?;
    let report = props::check(&word, args.kind, args.property);
    println!(
        "check word={} n={} alphabet={} kind={} property={} free={} holds={}",
        word,
        word.len(),
        alphabet.size(),
        report.kind,
        report.property,
        detect::is_free(&word, args.kind),
        report.holds,
    );
    if report.holds {
        for witness in &report.witnesses {
            println!(
                "witness mutation={} creates={}",
                witness.mutation,
                fmt_occurrence(&witness.created)
            );
        }
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(mutation) = &report.counterexample {
        println!("counterexample mutation={} result={}", mutation, mutation.apply(&word)?);
    } else if let Some(occ) = detect::find_repetition(&word, args.kind) {
        println!("not-free occurrence={}", fmt_occurrence(&occ));
    } else {
        println!("note=word too short for the property");
    }
    Ok(ExitCode::FAILURE)
}

/// Cache file for a search under `$BARELY_CACHE_DIR`, unless a path was given.
fn cache_path(flag: Option<PathBuf>, spec: &SearchSpec) -> Option<PathBuf> {
    flag.or_else(|| {
        std::env::var_os("BARELY_CACHE_DIR").map(|dir| {
            PathBuf::from(dir).join(format!("{}.cache", spec.fingerprint().replace(' ', "_")))
        })
    })
}

fn classify_cached(spec: &SearchSpec, cache: Option<PathBuf>) -> Result<LengthClassification> {
    let Some(path) = cache_path(cache, spec) else {
        return Ok(enumerate::classify(spec));
    };
    if path.exists() {
        match enumerate::load_classification(&path, spec) {
            Ok(c) => {
                println!("cache file={} status=hit", path.display());
                return Ok(c);
            }
            // A stale cache belongs to another search; recompute over it.
            Err(CacheError::Stale { .. }) => {}
            Err(err) => {
                return Err(anyhow::Error::new(err)
                    .context(format!("cache file {} is corrupt; delete it to recompute", path.display())));
            }
        }
    }
    let classification = enumerate::classify(spec);
    enumerate::save_classification(&classification, &path)
        .with_context(|| format!("writing cache file {}", path.display()))?;
    println!("cache file={} status=written", path.display());
    Ok(classification)
}

fn run_classify(args: ClassifyArgs) -> Result<ExitCode> {
    if args.max_len < 1 {
        bail!("--max-len must be at least 1");
    }
    if args.min_len < 1 || args.min_len > args.max_len {
        bail!("--min-len must lie between 1 and --max-len");
    }
    if let Some(jobs) = args.jobs {
        if jobs < 1 {
            bail!("--jobs must be at least 1");
        }
        // First initialization wins; a later failure just keeps the pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let spec = SearchSpec {
        alphabet: parse_alphabet(args.alphabet)?,
        kind: args.kind,
        property: args.property,
        min_len: args.min_len,
        max_len: args.max_len,
        symmetry_reduction: true,
        witness_limit: args.witnesses,
    };
    println!("classify {}", spec.fingerprint());
    let classification = classify_cached(&spec, args.cache)?;
    for (n, count) in &classification.counts {
        let mut line = format!("length n={n} count={count}");
        let witnesses = &classification.witnesses[n];
        if !witnesses.is_empty() {
            line.push_str(" witnesses=");
            line.push_str(&witnesses.iter().map(Word::to_string).collect::<Vec<_>>().join(","));
        }
        println!("{line}");
    }
    let admitted: Vec<String> = classification.admitted().iter().map(|n| n.to_string()).collect();
    println!("admitted lengths={}", admitted.join(","));
    Ok(ExitCode::SUCCESS)
}

fn run_construct(args: ConstructArgs) -> Result<ExitCode> {
    match construct::construct(args.theorem, args.n) {
        Ok(recipe) => {
            println!(
                "construct theorem={} n={} word={} branch={}",
                recipe.theorem, recipe.n, recipe.word, recipe.branch
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(ConstructError::NotAdmissible { .. }) => {
            println!("construct theorem={} n={} error=not-admissible", args.theorem, args.n);
            Ok(ExitCode::FAILURE)
        }
        Err(err) => Err(err.into()),
    }
}

fn default_verify_bound(theorem: Theorem, quick: bool) -> usize {
    match theorem {
        Theorem::IrreducibleOverlap => 32,
        Theorem::IrreducibleCube => 30,
        Theorem::DelicateSquare => 24,
        Theorem::DelicateOverlap => 32,
        Theorem::DelicateCube => {
            if quick {
                36
            } else {
                40
            }
        }
        Theorem::Eid => 3,
    }
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode> {
    let theorems: Vec<Theorem> = if args.theorem == "all" {
        Theorem::ALL.to_vec()
    } else {
        vec![args.theorem.parse().map_err(|err: String| anyhow::anyhow!(err))?]
    };
    let mut all_pass = true;
    for theorem in theorems {
        let bound = if theorem == Theorem::Eid {
            args.levels.unwrap_or_else(|| default_verify_bound(theorem, args.quick))
        } else {
            args.max_len.unwrap_or_else(|| default_verify_bound(theorem, args.quick))
        };
        let report = construct::verify_theorem(theorem, bound);
        for detail in &report.discrepancies {
            println!("discrepancy theorem={theorem} detail={detail}");
        }
        let bound_key = if theorem == Theorem::Eid { "levels" } else { "max-len" };
        println!(
            "verify theorem={} {}={} constructions={} exclusions={} discrepancies={} status={}",
            theorem,
            bound_key,
            report.max_len,
            report.constructions_checked,
            report.exclusions_checked,
            report.discrepancies.len(),
            if report.passed() { "pass" } else { "fail" },
        );
        all_pass &= report.passed();
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn run_morphism_test(args: MorphismTestArgs) -> Result<ExitCode> {
    let text = std::fs::read_to_string(&args.file)
        .with_context(|| format!("reading {}", args.file.display()))?;
    let m = Morphism::parse(&text)?;
    let (kind_name, outcome) = match args.kind {
        PreservedKind::Square => ("square", morphism::preserves_squarefree(&m)?),
        PreservedKind::Cube => ("cube", morphism::preserves_cubefree(&m)?),
    };
    println!(
        "morphism-test file={} kind={} domain={} codomain={} preserves={}",
        args.file.display(),
        kind_name,
        m.domain().size(),
        m.codomain().size(),
        outcome.preserves(),
    );
    match outcome {
        Preservation::Preserves => Ok(ExitCode::SUCCESS),
        Preservation::Violates { input, image, occurrence } => {
            println!(
                "violation input={} image={} occurrence={}",
                input,
                image,
                fmt_occurrence(&occurrence)
            );
            Ok(ExitCode::FAILURE)
        }
    }
}

fn run_prefix(args: PrefixArgs) -> Result<ExitCode> {
    let word = streams::prefix(&PrefixSpec { word: args.word, drop: args.drop, take: args.take });
    println!("{word}");
    Ok(ExitCode::SUCCESS)
}

fn run_search_k_delicate(args: SearchKDelicateArgs) -> Result<ExitCode> {
    if args.max_len < 1 {
        bail!("--max-len must be at least 1");
    }
    let alphabet = parse_alphabet(args.alphabet)?;
    let found = enumerate::search_k_delicate(alphabet, args.kind, args.k, args.max_len, args.limit);
    for word in &found {
        println!("found n={} word={}", word.len(), word);
    }
    println!(
        "search-k-delicate alphabet={} kind={} k={} max-len={} count={}",
        alphabet.size(),
        args.kind,
        args.k,
        args.max_len,
        found.len(),
    );
    Ok(ExitCode::SUCCESS)
}
