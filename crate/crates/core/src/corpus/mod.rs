//! MSD-annotated corpora and word-form lexicons.

mod annotate;
mod lexicon;
mod stats;
mod vertical;

pub use annotate::{annotate, annotate_text, Annotation, TextPipeline};
pub use lexicon::{load_lexicon, Lexicon, LexiconEntry, LexiconError, SAME_AS_FORM};
pub use stats::{
    compute_stats, validate_corpus, CorpusDiagnostics, CorpusStats, Diagnostic, Problem,
};
pub use vertical::{read_vertical, read_vertical_from, write_vertical, CorpusError};

/// A word occurrence with its lemma and MSD, either of which may be unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedToken {
    pub form: String,
    pub lemma: Option<String>,
    pub msd: Option<String>,
}

impl AnnotatedToken {
    pub fn new(form: impl Into<String>) -> Self {
        AnnotatedToken {
            form: form.into(),
            lemma: None,
            msd: None,
        }
    }

    pub fn with_lemma(mut self, lemma: impl Into<String>) -> Self {
        self.lemma = Some(lemma.into());
        self
    }

    pub fn with_msd(mut self, msd: impl Into<String>) -> Self {
        self.msd = Some(msd.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Sentence {
    pub tokens: Vec<AnnotatedToken>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Paragraph {
    pub sentences: Vec<Sentence>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub paragraphs: Vec<Paragraph>,
}

impl Document {
    pub fn new(id: impl Into<String>) -> Self {
        Document {
            id: id.into(),
            paragraphs: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Corpus {
    pub documents: Vec<Document>,
}

impl Corpus {
    pub fn sentences(&self) -> impl Iterator<Item = &Sentence> {
        self.documents
            .iter()
            .flat_map(|d| &d.paragraphs)
            .flat_map(|p| &p.sentences)
    }

    pub fn tokens(&self) -> impl Iterator<Item = &AnnotatedToken> {
        self.sentences().flat_map(|s| &s.tokens)
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }
}
