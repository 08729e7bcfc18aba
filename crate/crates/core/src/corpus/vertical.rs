//! The vertical interchange format.
//!
//! ```text
//! <doc id="d1">
//! <p>
//! <s>
//! form<TAB>lemma<TAB>msd
//! </s>
//! </p>
//! </doc>
//! ```
//!
//! Markup lines stand alone. Token lines carry one to three tab-separated
//! columns; a missing or empty lemma/msd column means unknown.

use std::collections::HashSet;
use std::io::{self, BufRead};

use thiserror::Error;

use super::{AnnotatedToken, Corpus, Document, Paragraph, Sentence};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: {message}")]
    Markup { line: usize, message: String },
    #[error("line {line}: token line outside a sentence")]
    TokenOutsideSentence { line: usize },
    #[error("line {line}: empty sentence")]
    EmptySentence { line: usize },
    #[error("line {line}: duplicate document id '{id}'")]
    DuplicateId { line: usize, id: String },
    #[error("line {line}: bad token line: {message}")]
    BadToken { line: usize, message: String },
    #[error("line {line}: unexpected end of input, '{open}' is not closed")]
    Unclosed { line: usize, open: &'static str },
    #[error(transparent)]
    Io(#[from] io::Error),
}

enum Markup<'a> {
    OpenDoc(&'a str),
    CloseDoc,
    OpenP,
    CloseP,
    OpenS,
    CloseS,
}

fn markup(line: &str) -> Option<Markup<'_>> {
    Some(match line {
        "</doc>" => Markup::CloseDoc,
        "<p>" => Markup::OpenP,
        "</p>" => Markup::CloseP,
        "<s>" => Markup::OpenS,
        "</s>" => Markup::CloseS,
        _ => Markup::OpenDoc(
            line.strip_prefix("<doc id=\"")?
                .strip_suffix("\">")
                .filter(|id| !id.is_empty() && !id.contains('"'))?,
        ),
    })
}

#[derive(Default)]
struct Builder {
    corpus: Corpus,
    ids: HashSet<String>,
    doc: Option<Document>,
    para: Option<Paragraph>,
    sent: Option<Sentence>,
    /// Line of the innermost open element, for end-of-input errors.
    open_line: usize,
}

impl Builder {
    fn line(&mut self, line: usize, text: &str) -> Result<(), CorpusError> {
        let err = |message: &str| CorpusError::Markup {
            line,
            message: message.to_string(),
        };
        if text.is_empty() {
            return Ok(());
        }
        match markup(text) {
            Some(Markup::OpenDoc(id)) => {
                if self.doc.is_some() {
                    return Err(err("<doc> inside an open <doc>"));
                }
                if !self.ids.insert(id.to_string()) {
                    return Err(CorpusError::DuplicateId {
                        line,
                        id: id.to_string(),
                    });
                }
                self.doc = Some(Document::new(id));
            }
            Some(Markup::OpenP) => {
                if self.doc.is_none() || self.para.is_some() {
                    return Err(err("<p> must be directly inside <doc>"));
                }
                self.para = Some(Paragraph::default());
            }
            Some(Markup::OpenS) => {
                if self.para.is_none() || self.sent.is_some() {
                    return Err(err("<s> must be directly inside <p>"));
                }
                self.sent = Some(Sentence::default());
            }
            Some(Markup::CloseS) => {
                let sent = self
                    .sent
                    .take()
                    .ok_or_else(|| err("</s> without open <s>"))?;
                if sent.tokens.is_empty() {
                    return Err(CorpusError::EmptySentence { line });
                }
                self.para
                    .as_mut()
                    .expect("open <s> implies open <p>")
                    .sentences
                    .push(sent);
            }
            Some(Markup::CloseP) => {
                if self.sent.is_some() {
                    return Err(err("</p> while <s> is open"));
                }
                let para = self
                    .para
                    .take()
                    .ok_or_else(|| err("</p> without open <p>"))?;
                self.doc
                    .as_mut()
                    .expect("open <p> implies open <doc>")
                    .paragraphs
                    .push(para);
            }
            Some(Markup::CloseDoc) => {
                if self.para.is_some() {
                    return Err(err("</doc> while <p> is open"));
                }
                let doc = self
                    .doc
                    .take()
                    .ok_or_else(|| err("</doc> without open <doc>"))?;
                self.corpus.documents.push(doc);
            }
            None if text.starts_with('<')
                && text.ends_with('>')
                && !text.contains('\t')
                && text.len() > 2 =>
            {
                return Err(err(&format!("unrecognized markup {text:?}")));
            }
            None => {
                let sent = self
                    .sent
                    .as_mut()
                    .ok_or(CorpusError::TokenOutsideSentence { line })?;
                sent.tokens.push(parse_token(line, text)?);
                return Ok(());
            }
        }
        self.open_line = line;
        Ok(())
    }

    fn finish(self, last_line: usize) -> Result<Corpus, CorpusError> {
        let open = if self.sent.is_some() {
            Some("<s>")
        } else if self.para.is_some() {
            Some("<p>")
        } else if self.doc.is_some() {
            Some("<doc>")
        } else {
            None
        };
        match open {
            Some(open) => Err(CorpusError::Unclosed {
                line: last_line.max(self.open_line),
                open,
            }),
            None => Ok(self.corpus),
        }
    }
}

fn parse_token(line: usize, text: &str) -> Result<AnnotatedToken, CorpusError> {
    let fields: Vec<&str> = text.split('\t').collect();
    if fields.len() > 3 {
        return Err(CorpusError::BadToken {
            line,
            message: format!("expected at most 3 columns, found {}", fields.len()),
        });
    }
    if fields[0].is_empty() {
        return Err(CorpusError::BadToken {
            line,
            message: "empty form".into(),
        });
    }
    let column = |i: usize| {
        fields
            .get(i)
            .filter(|s| !s.is_empty())
            .map(|s| s.to_string())
    };
    Ok(AnnotatedToken {
        form: fields[0].to_string(),
        lemma: column(1),
        msd: column(2),
    })
}

/// Parses a whole vertical file held in memory.
pub fn read_vertical(text: &str) -> Result<Corpus, CorpusError> {
    let mut builder = Builder::default();
    let mut last = 0;
    for (idx, line) in text.lines().enumerate() {
        last = idx + 1;
        builder.line(last, line)?;
    }
    builder.finish(last)
}

/// Streams a vertical file line by line.
pub fn read_vertical_from<R: BufRead>(reader: R) -> Result<Corpus, CorpusError> {
    let mut builder = Builder::default();
    let mut last = 0;
    for (idx, line) in reader.lines().enumerate() {
        last = idx + 1;
        builder.line(last, line?.trim_end_matches('\r'))?;
    }
    builder.finish(last)
}

fn push_token(out: &mut String, token: &AnnotatedToken) {
    out.push_str(&token.form);
    match (&token.lemma, &token.msd) {
        (lemma, Some(msd)) => {
            out.push('\t');
            out.push_str(lemma.as_deref().unwrap_or(""));
            out.push('\t');
            out.push_str(msd);
        }
        (Some(lemma), None) => {
            out.push('\t');
            out.push_str(lemma);
        }
        (None, None) => {}
    }
    out.push('\n');
}

/// Serializes a corpus; the output reads back to an equal corpus.
pub fn write_vertical(corpus: &Corpus) -> String {
    let mut out = String::new();
    for doc in &corpus.documents {
        out.push_str(&format!("<doc id=\"{}\">\n", doc.id));
        for para in &doc.paragraphs {
            out.push_str("<p>\n");
            for sent in &para.sentences {
                out.push_str("<s>\n");
                for token in &sent.tokens {
                    push_token(&mut out, token);
                }
                out.push_str("</s>\n");
            }
            out.push_str("</p>\n");
        }
        out.push_str("</doc>\n");
    }
    out
}
