//! Tokenization and sentence splitting for normalized Persian e-text.
//!
//! ZWNJ is word-internal: no token boundary is ever placed next to it.
//! Offsets count Unicode codepoints.

use std::collections::BTreeSet;
use std::ops::Range;
use std::sync::OnceLock;

use thiserror::Error;

use crate::orthography::{parse_codepoint, ZWNJ};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Number,
    Punctuation,
}

impl TokenKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TokenKind::Word => "word",
            TokenKind::Number => "number",
            TokenKind::Punctuation => "punct",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    /// Codepoint offset of the first character.
    pub start: usize,
    /// Codepoint offset one past the last character.
    pub end: usize,
    pub kind: TokenKind,
}

/// A run of tokens forming one sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentenceSpan {
    pub tokens: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TokenizerConfigError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown section '{section}'")]
    UnknownSection { line: usize, section: String },
}

/// Character classes used by the tokenizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizerConfig {
    pub terminators: BTreeSet<char>,
    pub punctuation: BTreeSet<char>,
}

impl Default for TokenizerConfig {
    fn default() -> Self {
        crate::data::tokenizer_config()
    }
}

impl TokenizerConfig {
    /// Reads `[terminators]` and `[punctuation]` sections, one codepoint per
    /// line given literally or as `U+XXXX`. Terminators are added to the
    /// punctuation set.
    pub fn parse(text: &str) -> Result<Self, TokenizerConfigError> {
        #[derive(Clone, Copy)]
        enum Section {
            Terminators,
            Punctuation,
        }
        let mut terminators = BTreeSet::new();
        let mut punctuation = BTreeSet::new();
        let mut section = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            if let Some(name) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                section = Some(match name {
                    "terminators" => Section::Terminators,
                    "punctuation" => Section::Punctuation,
                    other => {
                        return Err(TokenizerConfigError::UnknownSection {
                            line,
                            section: other.to_string(),
                        })
                    }
                });
                continue;
            }
            let mut chars = text.chars();
            let c = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => parse_codepoint(text).ok_or_else(|| TokenizerConfigError::Syntax {
                    line,
                    message: format!("expected a single character or U+XXXX, got {text:?}"),
                })?,
            };
            if c.is_whitespace() || c == ZWNJ {
                return Err(TokenizerConfigError::Syntax {
                    line,
                    message: "whitespace and ZWNJ cannot be punctuation".into(),
                });
            }
            match section {
                Some(Section::Terminators) => {
                    terminators.insert(c);
                }
                Some(Section::Punctuation) => {
                    punctuation.insert(c);
                }
                None => {
                    return Err(TokenizerConfigError::Syntax {
                        line,
                        message: "entry outside of a section".into(),
                    })
                }
            }
        }
        punctuation.extend(terminators.iter().copied());
        Ok(TokenizerConfig {
            terminators,
            punctuation,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Space,
    Joiner,
    Punct,
    Digit,
    Letter,
}

#[derive(Debug, Clone, Default)]
pub struct Tokenizer {
    config: TokenizerConfig,
}

impl Tokenizer {
    pub fn new(config: TokenizerConfig) -> Self {
        Tokenizer { config }
    }

    pub fn config(&self) -> &TokenizerConfig {
        &self.config
    }

    fn class(&self, c: char) -> Class {
        if c == ZWNJ {
            Class::Joiner
        } else if c.is_whitespace() {
            Class::Space
        } else if self.config.punctuation.contains(&c) {
            Class::Punct
        } else if c.is_numeric() {
            Class::Digit
        } else {
            Class::Letter
        }
    }

    /// Splits whitespace-free runs at punctuation and at digit/letter
    /// changes, except where either neighbour is ZWNJ.
    pub fn tokenize(&self, text: &str) -> Vec<Token> {
        let chars: Vec<char> = text.chars().collect();
        let classes: Vec<Class> = chars.iter().map(|&c| self.class(c)).collect();
        let mut tokens = Vec::new();

        let mut push = |start: usize, end: usize| {
            let slice = &classes[start..end];
            let kind = if slice == [Class::Punct] {
                TokenKind::Punctuation
            } else if slice.iter().all(|&c| c == Class::Digit) {
                TokenKind::Number
            } else {
                TokenKind::Word
            };
            tokens.push(Token {
                surface: chars[start..end].iter().collect(),
                start,
                end,
                kind,
            });
        };

        let mut start = None;
        for i in 0..chars.len() {
            if classes[i] == Class::Space {
                if let Some(s) = start.take() {
                    push(s, i);
                }
                continue;
            }
            match start {
                None => start = Some(i),
                Some(s) => {
                    let (a, b) = (classes[i - 1], classes[i]);
                    let glued = a == Class::Joiner || b == Class::Joiner;
                    let split = !glued && (a == Class::Punct || b == Class::Punct || a != b);
                    if split {
                        push(s, i);
                        start = Some(i);
                    }
                }
            }
        }
        if let Some(s) = start {
            push(s, chars.len());
        }
        tokens
    }

    fn is_terminator(&self, token: &Token) -> bool {
        token.kind == TokenKind::Punctuation
            && token
                .surface
                .chars()
                .next()
                .is_some_and(|c| self.config.terminators.contains(&c))
    }

    /// A sentence ends after a run of terminator tokens; leftover tokens
    /// form a final sentence.
    pub fn split_sentences(&self, tokens: &[Token]) -> Vec<SentenceSpan> {
        let mut spans = Vec::new();
        let mut start = 0;
        for i in 0..tokens.len() {
            let ends_here = self.is_terminator(&tokens[i])
                && !tokens
                    .get(i + 1)
                    .is_some_and(|next| self.is_terminator(next));
            if ends_here {
                spans.push(SentenceSpan {
                    tokens: start..i + 1,
                });
                start = i + 1;
            }
        }
        if start < tokens.len() {
            spans.push(SentenceSpan {
                tokens: start..tokens.len(),
            });
        }
        spans
    }
}

fn default_tokenizer() -> &'static Tokenizer {
    static DEFAULT: OnceLock<Tokenizer> = OnceLock::new();
    DEFAULT.get_or_init(Tokenizer::default)
}

/// Tokenizes with the shipped character classes.
pub fn tokenize(text: &str) -> Vec<Token> {
    default_tokenizer().tokenize(text)
}

/// Splits sentences with the shipped terminator set.
pub fn split_sentences(tokens: &[Token]) -> Vec<SentenceSpan> {
    default_tokenizer().split_sentences(tokens)
}
