use std::collections::BTreeSet;
use std::fmt;

use super::Corpus;
use crate::tagset::{validate_msd, ConstraintRule, TagsetSpec, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CorpusStats {
    pub tokens: usize,
    pub paragraphs: usize,
    pub sentences: usize,
    /// Distinct known lemmas.
    pub lemmas: usize,
    /// Distinct word-forms.
    pub types: usize,
    /// Distinct known MSDs.
    pub distinct_msds: usize,
}

impl fmt::Display for CorpusStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Tokens\t{}", self.tokens)?;
        writeln!(f, "Paragraphs\t{}", self.paragraphs)?;
        writeln!(f, "Sentences\t{}", self.sentences)?;
        writeln!(f, "Lemmas\t{}", self.lemmas)?;
        writeln!(f, "Types\t{}", self.types)?;
        writeln!(f, "DistinctMSDs\t{}", self.distinct_msds)
    }
}

pub fn compute_stats(corpus: &Corpus) -> CorpusStats {
    let mut forms = BTreeSet::new();
    let mut lemmas = BTreeSet::new();
    let mut msds = BTreeSet::new();
    let mut tokens = 0;
    for token in corpus.tokens() {
        tokens += 1;
        forms.insert(token.form.as_str());
        if let Some(l) = &token.lemma {
            lemmas.insert(l.as_str());
        }
        if let Some(m) = &token.msd {
            msds.insert(m.as_str());
        }
    }
    CorpusStats {
        tokens,
        paragraphs: corpus.documents.iter().map(|d| d.paragraphs.len()).sum(),
        sentences: corpus.sentences().count(),
        lemmas: lemmas.len(),
        types: forms.len(),
        distinct_msds: msds.len(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    /// The tag does not parse or breaks a constraint.
    Invalid(ValidationReport),
    /// The tag is meaningful but spelled with trailing dashes.
    NonCanonical { canonical: String },
}

/// One offending token. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub document: String,
    pub paragraph: usize,
    pub sentence: usize,
    pub token: usize,
    pub form: String,
    pub msd: String,
    pub problem: Problem,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\tp{}\ts{}\tt{}\t{}\t{}\t",
            self.document,
            self.paragraph + 1,
            self.sentence + 1,
            self.token + 1,
            self.form,
            self.msd
        )?;
        match &self.problem {
            Problem::Invalid(report) => match &report.parse {
                Err(e) => write!(f, "{e}"),
                Ok(_) => {
                    let rules: Vec<String> =
                        report.violations.iter().map(|r| r.to_string()).collect();
                    write!(f, "violates {}", rules.join("; "))
                }
            },
            Problem::NonCanonical { canonical } => write!(f, "non-canonical, expected {canonical}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CorpusDiagnostics {
    pub diagnostics: Vec<Diagnostic>,
    /// Every distinct MSD in the corpus, valid or not.
    pub observed: BTreeSet<String>,
}

impl CorpusDiagnostics {
    pub fn is_clean(&self) -> bool {
        self.diagnostics.is_empty()
    }
}

/// Checks every known MSD in the corpus. Tokens without an MSD are skipped.
pub fn validate_corpus(
    corpus: &Corpus,
    spec: &TagsetSpec,
    constraints: &[ConstraintRule],
) -> CorpusDiagnostics {
    let mut out = CorpusDiagnostics::default();
    for doc in &corpus.documents {
        for (p, para) in doc.paragraphs.iter().enumerate() {
            for (s, sent) in para.sentences.iter().enumerate() {
                for (t, token) in sent.tokens.iter().enumerate() {
                    let Some(msd) = &token.msd else { continue };
                    out.observed.insert(msd.clone());
                    let report = validate_msd(msd, spec, constraints);
                    let problem = if !report.meaningful {
                        Problem::Invalid(report)
                    } else if !report.is_canonical() {
                        Problem::NonCanonical {
                            canonical: report
                                .canonical
                                .expect("meaningful tags have a canonical form")
                                .into_string(),
                        }
                    } else {
                        continue;
                    };
                    out.diagnostics.push(Diagnostic {
                        document: doc.id.clone(),
                        paragraph: p,
                        sentence: s,
                        token: t,
                        form: token.form.clone(),
                        msd: msd.clone(),
                        problem,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{read_vertical, AnnotatedToken, Document, Paragraph, Sentence};
    use crate::data;

    fn corpus_of(tokens: Vec<AnnotatedToken>) -> Corpus {
        Corpus {
            documents: vec![Document {
                id: "d".into(),
                paragraphs: vec![Paragraph {
                    sentences: vec![Sentence { tokens }],
                }],
            }],
        }
    }

    #[test]
    fn empty_corpus_is_all_zero() {
        assert_eq!(compute_stats(&Corpus::default()), CorpusStats::default());
    }

    #[test]
    fn ten_tokens_two_repeated() {
        // forms a..h once, "x" twice: 10 tokens, 9 types
        let forms = ["a", "b", "x", "c", "d", "x", "e", "f", "g", "h"];
        let tokens = forms.iter().map(|f| AnnotatedToken::new(*f)).collect();
        let stats = compute_stats(&corpus_of(tokens));
        assert_eq!(stats.tokens, 10);
        assert_eq!(stats.types, 9);
        assert_eq!(stats.sentences, 1);
        assert_eq!(stats.paragraphs, 1);
        assert_eq!(stats.lemmas, 0);
        assert_eq!(stats.distinct_msds, 0);
    }

    #[test]
    fn shared_msd() {
        let tokens = ["a", "b", "c"]
            .iter()
            .map(|f| AnnotatedToken::new(*f).with_lemma(*f).with_msd("Nc"))
            .collect();
        let stats = compute_stats(&corpus_of(tokens));
        assert_eq!(stats.distinct_msds, 1);
        assert_eq!(stats.lemmas, 3);
    }

    #[test]
    fn display_lines() {
        let text = compute_stats(&Corpus::default()).to_string();
        assert_eq!(
            text,
            "Tokens\t0\nParagraphs\t0\nSentences\t0\nLemmas\t0\nTypes\t0\nDistinctMSDs\t0\n"
        );
    }

    #[test]
    fn clean_corpus() {
        let spec = data::persian_tagset();
        let rules = data::persian_constraints(&spec);
        let corpus = read_vertical(
            "<doc id=\"d\">\n<p>\n<s>\nکتاب\tکتاب\tNc-s-n\nرا\tرا\tSps\nدید\tدیدن\n.\t.\n</s>\n<s>\nکتاب\tکتاب\tNc-s-n\n</s>\n</p>\n</doc>\n",
        )
        .unwrap();
        let diag = validate_corpus(&corpus, &spec, &rules);
        assert!(diag.is_clean(), "{:?}", diag.diagnostics);
        assert_eq!(diag.observed.len(), 2);
    }

    #[test]
    fn planted_fault_is_located() {
        let spec = data::persian_tagset();
        let rules = data::persian_constraints(&spec);
        let corpus = read_vertical(
            "<doc id=\"a\">\n<p>\n<s>\nx\tx\tNc-s-n\n</s>\n</p>\n</doc>\n\
             <doc id=\"b\">\n<p>\n<s>\nx\tx\tNc-s-n\n</s>\n</p>\n<p>\n<s>\ny\ty\tI\n</s>\n<s>\nx\tx\tNc-s-n\nz\tz\tNz\n</s>\n</p>\n</doc>\n",
        )
        .unwrap();
        let diag = validate_corpus(&corpus, &spec, &rules);
        assert_eq!(diag.diagnostics.len(), 1);
        let d = &diag.diagnostics[0];
        assert_eq!(
            (d.document.as_str(), d.paragraph, d.sentence, d.token),
            ("b", 1, 1, 1)
        );
        assert!(d.to_string().contains("unknown value code 'z'"));
        assert_eq!(diag.observed.len(), 3);
    }

    #[test]
    fn constraint_violation_and_non_canonical() {
        let spec = data::persian_tagset();
        let rules = data::persian_constraints(&spec);
        let corpus = corpus_of(vec![
            AnnotatedToken::new("x").with_msd("Np-p-n"),
            AnnotatedToken::new("y").with_msd("Nc-s-n-"),
        ]);
        let diag = validate_corpus(&corpus, &spec, &rules);
        assert_eq!(diag.diagnostics.len(), 2);
        assert!(diag.diagnostics[0]
            .to_string()
            .contains("violates FORBID Noun Type=proper & Number=plural"));
        assert_eq!(
            diag.diagnostics[1].problem,
            Problem::NonCanonical {
                canonical: "Nc-s-n".into()
            }
        );
    }

    #[test]
    fn empty_corpus_has_no_diagnostics() {
        let spec = data::persian_tagset();
        let diag = validate_corpus(&Corpus::default(), &spec, &[]);
        assert!(diag.is_clean());
        assert!(diag.observed.is_empty());
    }
}
