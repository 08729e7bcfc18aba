use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::tagset::{parse_msd, MsdError, TagsetSpec};

/// Lemma column value meaning "same as the word-form".
pub const SAME_AS_FORM: &str = "=";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexiconEntry {
    pub form: String,
    /// As written in the file, possibly [`SAME_AS_FORM`].
    pub lemma: String,
    pub msd: String,
}

impl LexiconEntry {
    pub fn new(form: impl Into<String>, lemma: impl Into<String>, msd: impl Into<String>) -> Self {
        LexiconEntry {
            form: form.into(),
            lemma: lemma.into(),
            msd: msd.into(),
        }
    }

    /// The lemma with the `=` sentinel expanded.
    pub fn effective_lemma(&self) -> &str {
        if self.lemma == SAME_AS_FORM {
            &self.form
        } else {
            &self.lemma
        }
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("line {line}: expected 3 tab-separated columns, found {found}")]
    ColumnCount { line: usize, found: usize },
    #[error("line {line}: empty column")]
    EmptyColumn { line: usize },
    #[error("line {line}: bad MSD '{msd}': {source}")]
    BadMsd {
        line: usize,
        msd: String,
        source: MsdError,
    },
}

/// Word-form/lemma/MSD triples in file order, indexed by form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: Vec<LexiconEntry>,
    by_form: HashMap<String, Vec<usize>>,
    seen: HashSet<LexiconEntry>,
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an entry unless the same triple is already present.
    pub fn insert(&mut self, entry: LexiconEntry) -> bool {
        if self.seen.contains(&entry) {
            return false;
        }
        self.seen.insert(entry.clone());
        self.by_form
            .entry(entry.form.clone())
            .or_default()
            .push(self.entries.len());
        self.entries.push(entry);
        true
    }

    /// All entries for `form`, in file order.
    pub fn lookup(&self, form: &str) -> Vec<&LexiconEntry> {
        self.by_form
            .get(form)
            .map(|idx| idx.iter().map(|&i| &self.entries[i]).collect())
            .unwrap_or_default()
    }

    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Serializes in load order, keeping `=` lemmas as written.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!("{}\t{}\t{}\n", e.form, e.lemma, e.msd));
        }
        out
    }
}

impl FromIterator<LexiconEntry> for Lexicon {
    fn from_iter<I: IntoIterator<Item = LexiconEntry>>(iter: I) -> Self {
        let mut lexicon = Lexicon::new();
        for entry in iter {
            lexicon.insert(entry);
        }
        lexicon
    }
}

/// Reads `form<TAB>lemma<TAB>msd` lines. With a tagset, every MSD must parse.
pub fn load_lexicon(text: &str, spec: Option<&TagsetSpec>) -> Result<Lexicon, LexiconError> {
    let mut lexicon = Lexicon::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        let [form, lemma, msd] = fields[..] else {
            return Err(LexiconError::ColumnCount {
                line,
                found: fields.len(),
            });
        };
        if form.is_empty() || lemma.is_empty() || msd.is_empty() {
            return Err(LexiconError::EmptyColumn { line });
        }
        if let Some(spec) = spec {
            parse_msd(msd, spec).map_err(|source| LexiconError::BadMsd {
                line,
                msd: msd.to_string(),
                source,
            })?;
        }
        lexicon.insert(LexiconEntry::new(form, lemma, msd));
    }
    Ok(lexicon)
}
