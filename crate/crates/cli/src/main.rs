//! `msd`: tagset, normalization, tokenization and corpus tools.
//!
//! Exit status is 0 on success, 1 when the input is well-formed but fails a
//! domain check (invalid tag, corpus diagnostics), and 2 on usage or I/O
//! errors.

mod config;

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use msd_core::corpus::{self, load_lexicon};
use msd_core::orthography::normalize;
use msd_core::tagset::{
    count_msds, describe_msd, encode_msd, enumerate_msds, parse_msd, validate_msd, FeatureStructure,
};

use config::{CliConfig, Resources};

#[derive(Parser)]
#[command(
    name = "msd",
    version,
    about = "Positional MSD tagsets, Persian e-text normalization and annotated corpora"
)]
struct Cli {
    #[command(flatten)]
    resources: ResourceArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ResourceArgs {
    /// Tagset: `persian` (default), `hub`, or a definition file
    #[arg(long, global = true)]
    tagset: Option<String>,
    /// Constraint file, or `none`
    #[arg(long, global = true)]
    constraints: Option<String>,
    /// Character map file
    #[arg(long, global = true)]
    charmap: Option<PathBuf>,
    /// Affix list file
    #[arg(long, global = true)]
    affixes: Option<PathBuf>,
    /// Tokenizer configuration file
    #[arg(long = "tokenizer-cfg", global = true)]
    tokenizer_cfg: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Work with MSD tags
    #[command(subcommand)]
    Tag(TagCommand),
    /// Normalize Persian e-text
    Normalize {
        /// Input file, `-` or nothing for standard input
        input: Option<PathBuf>,
        /// Print an edit summary to standard error
        #[arg(long)]
        report: bool,
    },
    /// List tokens, one per line
    Tokenize {
        input: Option<PathBuf>,
        /// Separate sentences with a blank line
        #[arg(long)]
        sentences: bool,
        /// Show kind and codepoint offsets
        #[arg(long)]
        offsets: bool,
    },
    /// Work with vertical-format corpora
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand)]
enum TagCommand {
    /// Decode a tag into attribute/value lines
    Parse { tag: String },
    /// Build the canonical tag from a category and Attr=value pairs
    Encode {
        category: String,
        features: Vec<String>,
    },
    /// Human-readable description of a tag
    Describe { tag: String },
    /// Check that a tag parses and breaks no constraint
    Validate { tag: String },
    /// List every meaningful tag of a category
    Enumerate { category: String },
    /// Count meaningful tags per category
    Count,
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Token, paragraph, sentence, lemma, type and MSD counts
    Stats { input: Option<PathBuf> },
    /// Report tokens whose MSD is not meaningful
    Validate { input: Option<PathBuf> },
    /// Normalize, tokenize and look up raw text, writing a vertical corpus
    Annotate {
        input: Option<PathBuf>,
        /// Lexicon file (form, lemma, MSD per line)
        #[arg(long)]
        lexicon: PathBuf,
        /// Document id (defaults to the input file stem)
        #[arg(long = "doc-id")]
        doc_id: Option<String>,
    },
}

/// An error with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

/// Normal output plus the exit status to finish with.
struct Output {
    stdout: String,
    stderr: String,
    code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

fn read_input(input: Option<&Path>) -> Result<String, Failure> {
    match input {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => {
            let bytes = std::fs::read(p)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", p.display())))?;
            String::from_utf8(bytes)
                .map_err(|_| Failure::usage(format!("{} is not valid UTF-8", p.display())))
        }
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut bytes = Vec::new();
    io::stdin()
        .read_to_end(&mut bytes)
        .map_err(|e| Failure::usage(format!("cannot read standard input: {e}")))?;
    String::from_utf8(bytes).map_err(|_| Failure::usage("standard input is not valid UTF-8"))
}

fn run_tag(cmd: TagCommand, res: &Resources) -> Result<Output, Failure> {
    let spec = &res.spec;
    let mut out = String::new();
    match cmd {
        TagCommand::Parse { tag } => {
            let fs = parse_msd(&tag, spec).map_err(|e| Failure::domain(e.to_string()))?;
            let category = spec.category(&fs.category).expect("parsed category exists");
            writeln!(out, "PoS\t{}", category.name).unwrap();
            for attr in &category.attributes {
                if let Some(value) = fs.get(&attr.name) {
                    writeln!(out, "{}\t{}", attr.name, value).unwrap();
                }
            }
        }
        TagCommand::Encode { category, features } => {
            let mut fs = FeatureStructure::new(category);
            for pair in &features {
                let (attr, value) = pair
                    .split_once('=')
                    .ok_or_else(|| Failure::usage(format!("expected Attr=value, got {pair:?}")))?;
                fs = fs.with(attr, value);
            }
            let msd = encode_msd(&fs, spec).map_err(|e| Failure::domain(e.to_string()))?;
            writeln!(out, "{msd}").unwrap();
        }
        TagCommand::Describe { tag } => {
            let text = describe_msd(&tag, spec).map_err(|e| Failure::domain(e.to_string()))?;
            writeln!(out, "{text}").unwrap();
        }
        TagCommand::Validate { tag } => {
            let report = validate_msd(&tag, spec, &res.constraints);
            if report.meaningful {
                writeln!(out, "{tag}\tmeaningful").unwrap();
                if !report.is_canonical() {
                    writeln!(out, "canonical\t{}", report.canonical.expect("parsed")).unwrap();
                }
                return Ok(Output::ok(out));
            }
            let mut err = String::new();
            match &report.parse {
                Err(e) => writeln!(err, "{tag}\tinvalid\t{e}").unwrap(),
                Ok(_) => {
                    for rule in &report.violations {
                        writeln!(err, "{tag}\tviolates\t{rule}").unwrap();
                    }
                }
            }
            return Ok(Output {
                stdout: String::new(),
                stderr: err,
                code: 1,
            });
        }
        TagCommand::Enumerate { category } => {
            let tags = enumerate_msds(&category, spec, &res.constraints)
                .map_err(|e| Failure::domain(e.to_string()))?;
            for t in tags {
                writeln!(out, "{t}").unwrap();
            }
        }
        TagCommand::Count => {
            let counts = count_msds(spec, &res.constraints);
            for (category, n) in &counts.per_category {
                writeln!(out, "{category}\t{n}").unwrap();
            }
            writeln!(out, "Total\t{}", counts.total).unwrap();
        }
    }
    Ok(Output::ok(out))
}

fn run_corpus(cmd: CorpusCommand, res: &Resources) -> Result<Output, Failure> {
    match cmd {
        CorpusCommand::Stats { input } => {
            let text = read_input(input.as_deref())?;
            let corpus =
                corpus::read_vertical(&text).map_err(|e| Failure::domain(e.to_string()))?;
            Ok(Output::ok(corpus::compute_stats(&corpus).to_string()))
        }
        CorpusCommand::Validate { input } => {
            let text = read_input(input.as_deref())?;
            let corpus =
                corpus::read_vertical(&text).map_err(|e| Failure::domain(e.to_string()))?;
            let diag = corpus::validate_corpus(&corpus, &res.spec, &res.constraints);
            let mut out = String::new();
            for d in &diag.diagnostics {
                writeln!(out, "{d}").unwrap();
            }
            writeln!(out, "Diagnostics\t{}", diag.diagnostics.len()).unwrap();
            writeln!(out, "ObservedMSDs\t{}", diag.observed.len()).unwrap();
            Ok(Output {
                stdout: out,
                stderr: String::new(),
                code: if diag.is_clean() { 0 } else { 1 },
            })
        }
        CorpusCommand::Annotate {
            input,
            lexicon,
            doc_id,
        } => {
            let lex_text = std::fs::read_to_string(&lexicon)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", lexicon.display())))?;
            let lex = load_lexicon(&lex_text, Some(&res.spec))
                .map_err(|e| Failure::domain(format!("{}: {e}", lexicon.display())))?;
            let text = read_input(input.as_deref())?;
            let doc_id = doc_id.unwrap_or_else(|| {
                input
                    .as_deref()
                    .filter(|p| *p != Path::new("-"))
                    .and_then(|p| p.file_stem())
                    .and_then(|s| s.to_str())
                    .unwrap_or("stdin")
                    .to_string()
            });
            let pipeline = corpus::TextPipeline {
                charmap: res.charmap.clone(),
                affixes: res.affixes.clone(),
                tokenizer: res.tokenizer.clone(),
            };
            let corpus = corpus::annotate_text(&doc_id, &text, &pipeline, &lex);
            Ok(Output::ok(corpus::write_vertical(&corpus)))
        }
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let config = CliConfig {
        tagset: cli.resources.tagset,
        constraints: cli.resources.constraints,
        charmap: cli.resources.charmap,
        affixes: cli.resources.affixes,
        tokenizer_cfg: cli.resources.tokenizer_cfg,
    };
    let res = config
        .load()
        .map_err(|e| Failure::usage(format!("{e:#}")))?;

    match cli.command {
        Command::Tag(cmd) => run_tag(cmd, &res),
        Command::Normalize { input, report } => {
            let text = read_input(input.as_deref())?;
            let (normalized, edits) = normalize(&text, &res.charmap, &res.affixes);
            let mut err = String::new();
            if report {
                writeln!(err, "char_substitutions\t{}", edits.char_substitutions).unwrap();
                writeln!(err, "zwnj_insertions\t{}", edits.zwnj_insertions).unwrap();
                for span in &edits.spans {
                    writeln!(err, "{}\t{}\t{}", span.offset, span.length, span.rule).unwrap();
                }
            }
            Ok(Output {
                stdout: normalized,
                stderr: err,
                code: 0,
            })
        }
        Command::Tokenize {
            input,
            sentences,
            offsets,
        } => {
            let text = read_input(input.as_deref())?;
            let tokens = res.tokenizer.tokenize(&text);
            let spans = if sentences {
                res.tokenizer.split_sentences(&tokens)
            } else {
                vec![msd_core::tokenizer::SentenceSpan {
                    tokens: 0..tokens.len(),
                }]
            };
            let mut out = String::new();
            for (i, span) in spans.into_iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                for t in &tokens[span.tokens] {
                    if offsets {
                        writeln!(
                            out,
                            "{}\t{}\t{}\t{}",
                            t.surface,
                            t.kind.as_str(),
                            t.start,
                            t.end
                        )
                        .unwrap();
                    } else {
                        writeln!(out, "{}", t.surface).unwrap();
                    }
                }
            }
            Ok(Output::ok(out))
        }
        Command::Corpus(cmd) => run_corpus(cmd, &res),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (stdout, stderr, code) = match run(cli) {
        Ok(out) => (out.stdout, out.stderr, out.code),
        Err(f) => (String::new(), format!("msd: {}\n", f.message), f.code),
    };
    let _ = io::stdout().lock().write_all(stdout.as_bytes());
    let _ = io::stderr().lock().write_all(stderr.as_bytes());
    ExitCode::from(code)
}
