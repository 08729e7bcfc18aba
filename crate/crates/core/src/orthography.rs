//! Persian e-text normalization.
//!
//! Normalization runs in two steps. Codepoints are first unified through a
//! [`CharMapTable`] (Arabic yeh and kaf to their Persian forms, digit
//! unification). Then every single space that separates a known affix from
//! its host word is rewritten to ZERO WIDTH NON-JOINER, the e-text spelling
//! of the printed semi-space.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

pub const ZWNJ: char = '\u{200C}';

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrthographyError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate source codepoint U+{source_cp:04X}")]
    DuplicateSource { line: usize, source_cp: u32 },
    #[error("U+{0:04X} is both a source and a target, mapping would not be idempotent")]
    SourceIsTarget(u32),
    #[error("U+{0:04X} cannot be remapped")]
    ReservedSource(u32),
    #[error("line {line}: invalid affix: {message}")]
    InvalidAffix { line: usize, message: String },
}

/// Parses `U+XXXX` (also accepts lowercase `u+`).
pub(crate) fn parse_codepoint(token: &str) -> Option<char> {
    let hex = token
        .strip_prefix("U+")
        .or_else(|| token.strip_prefix("u+"))?;
    if hex.is_empty() || hex.len() > 6 {
        return None;
    }
    u32::from_str_radix(hex, 16).ok().and_then(char::from_u32)
}

/// Source codepoint to replacement sequence.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CharMapTable {
    entries: BTreeMap<char, Vec<char>>,
}

impl CharMapTable {
    /// Builds a table, rejecting mappings that would not be idempotent.
    pub fn new(entries: BTreeMap<char, Vec<char>>) -> Result<Self, OrthographyError> {
        for &source in entries.keys() {
            if source == ' ' || source == ZWNJ {
                return Err(OrthographyError::ReservedSource(source as u32));
            }
        }
        for target in entries.values().flatten() {
            if entries.contains_key(target) {
                return Err(OrthographyError::SourceIsTarget(*target as u32));
            }
        }
        Ok(CharMapTable { entries })
    }

    /// Reads `U+XXXX -> U+XXXX[ U+XXXX...]` lines; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self, OrthographyError> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let syntax = |message: &str| OrthographyError::Syntax {
                line,
                message: message.to_string(),
            };
            let (lhs, rhs) = text
                .split_once("->")
                .ok_or_else(|| syntax("expected 'U+XXXX -> U+XXXX'"))?;
            let source =
                parse_codepoint(lhs.trim()).ok_or_else(|| syntax("bad source codepoint"))?;
            let targets = rhs
                .split_whitespace()
                .map(|t| parse_codepoint(t).ok_or_else(|| syntax("bad target codepoint")))
                .collect::<Result<Vec<_>, _>>()?;
            if targets.is_empty() {
                return Err(syntax("missing target codepoint"));
            }
            if entries.insert(source, targets).is_some() {
                return Err(OrthographyError::DuplicateSource {
                    line,
                    source_cp: source as u32,
                });
            }
        }
        Self::new(entries)
    }

    pub fn get(&self, c: char) -> Option<&[char]> {
        self.entries.get(&c).map(Vec::as_slice)
    }

    pub fn sources(&self) -> impl Iterator<Item = char> + '_ {
        self.entries.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Prefixes and suffixes written with a semi-space.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AffixLexicon {
    prefixes: BTreeSet<String>,
    suffixes: BTreeSet<String>,
}

fn check_affix(affix: &str) -> Result<(), &'static str> {
    if affix.is_empty() {
        Err("empty affix")
    } else if affix.chars().any(|c| c.is_whitespace() || c == ZWNJ) {
        Err("affix contains whitespace or ZWNJ")
    } else {
        Ok(())
    }
}

impl AffixLexicon {
    pub fn new<P, S>(prefixes: P, suffixes: S) -> Result<Self, OrthographyError>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        S: IntoIterator,
        S::Item: Into<String>,
    {
        let prefixes: BTreeSet<String> = prefixes.into_iter().map(Into::into).collect();
        let suffixes: BTreeSet<String> = suffixes.into_iter().map(Into::into).collect();
        for affix in prefixes.iter().chain(&suffixes) {
            check_affix(affix).map_err(|m| OrthographyError::InvalidAffix {
                line: 0,
                message: format!("{m}: {affix:?}"),
            })?;
        }
        Ok(AffixLexicon { prefixes, suffixes })
    }

    /// Reads `P:<prefix>` and `S:<suffix>` lines.
    pub fn parse(text: &str) -> Result<Self, OrthographyError> {
        let mut lexicon = AffixLexicon::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let (set, affix) = if let Some(p) = text.strip_prefix("P:") {
                (&mut lexicon.prefixes, p)
            } else if let Some(s) = text.strip_prefix("S:") {
                (&mut lexicon.suffixes, s)
            } else {
                return Err(OrthographyError::Syntax {
                    line,
                    message: "expected 'P:<prefix>' or 'S:<suffix>'".into(),
                });
            };
            check_affix(affix).map_err(|m| OrthographyError::InvalidAffix {
                line,
                message: m.to_string(),
            })?;
            set.insert(affix.to_string());
        }
        Ok(lexicon)
    }

    pub fn prefixes(&self) -> impl Iterator<Item = &str> {
        self.prefixes.iter().map(String::as_str)
    }

    pub fn suffixes(&self) -> impl Iterator<Item = &str> {
        self.suffixes.iter().map(String::as_str)
    }

    pub fn is_prefix(&self, s: &str) -> bool {
        self.prefixes.contains(s)
    }

    pub fn is_suffix(&self, s: &str) -> bool {
        self.suffixes.contains(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EditRule {
    /// A codepoint replaced through the char map.
    CharMap { source: char },
    /// Space after a prefix.
    ZwnjPrefix,
    /// Space before a suffix.
    ZwnjSuffix,
}

impl fmt::Display for EditRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EditRule::CharMap { source } => write!(f, "charmap:U+{:04X}", *source as u32),
            EditRule::ZwnjPrefix => f.write_str("zwnj:prefix"),
            EditRule::ZwnjSuffix => f.write_str("zwnj:suffix"),
        }
    }
}

/// One edit; `offset` and `length` count codepoints of the output text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EditSpan {
    pub offset: usize,
    pub length: usize,
    pub rule: EditRule,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NormalizationReport {
    pub char_substitutions: usize,
    pub zwnj_insertions: usize,
    /// Sorted by offset.
    pub spans: Vec<EditSpan>,
}

impl NormalizationReport {
    fn from_spans(mut spans: Vec<EditSpan>) -> Self {
        spans.sort_by_key(|s| s.offset);
        let char_substitutions = spans
            .iter()
            .filter(|s| matches!(s.rule, EditRule::CharMap { .. }))
            .count();
        NormalizationReport {
            char_substitutions,
            zwnj_insertions: spans.len() - char_substitutions,
            spans,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }
}

fn map_with_spans(text: &str, table: &CharMapTable) -> (Vec<char>, Vec<EditSpan>) {
    let mut out = Vec::with_capacity(text.len());
    let mut spans = Vec::new();
    for c in text.chars() {
        match table.get(c) {
            Some(target) => {
                spans.push(EditSpan {
                    offset: out.len(),
                    length: target.len(),
                    rule: EditRule::CharMap { source: c },
                });
                out.extend_from_slice(target);
            }
            None => out.push(c),
        }
    }
    (out, spans)
}

/// Replaces every mapped codepoint by its target sequence.
pub fn map_characters(text: &str, table: &CharMapTable) -> String {
    map_with_spans(text, table).0.into_iter().collect()
}

/// Decides, for the whole text at once, which spaces become ZWNJ.
///
/// Words are maximal runs of letters, so punctuation, digits and ZWNJ all
/// end a word. Turning a space into ZWNJ never moves a word boundary.
fn zwnj_edits(chars: &[char], affixes: &AffixLexicon) -> Vec<EditSpan> {
    let mut edits = Vec::new();
    let is_letter = |c: &char| c.is_alphabetic();
    let mut word = String::new();

    for i in 1..chars.len().saturating_sub(1) {
        if chars[i] != ' ' || !is_letter(&chars[i - 1]) || !is_letter(&chars[i + 1]) {
            continue;
        }
        let start = chars[..i]
            .iter()
            .rposition(|c| !is_letter(c))
            .map_or(0, |p| p + 1);
        let end = chars[i + 1..]
            .iter()
            .position(|c| !is_letter(c))
            .map_or(chars.len(), |p| i + 1 + p);

        word.clear();
        word.extend(&chars[start..i]);
        let rule = if affixes.is_prefix(&word) {
            Some(EditRule::ZwnjPrefix)
        } else {
            word.clear();
            word.extend(&chars[i + 1..end]);
            affixes.is_suffix(&word).then_some(EditRule::ZwnjSuffix)
        };
        if let Some(rule) = rule {
            edits.push(EditSpan {
                offset: i,
                length: 1,
                rule,
            });
        }
    }
    edits
}

/// Rewrites single spaces next to known affixes as ZWNJ.
///
/// A space between two letters qualifies when the word before it is a
/// prefix or the word after it is a suffix.
pub fn apply_zwnj_rules(text: &str, affixes: &AffixLexicon) -> String {
    let mut chars: Vec<char> = text.chars().collect();
    for edit in zwnj_edits(&chars, affixes) {
        chars[edit.offset] = ZWNJ;
    }
    chars.into_iter().collect()
}

/// Character mapping followed by ZWNJ rules, with every edit recorded.
pub fn normalize(
    text: &str,
    table: &CharMapTable,
    affixes: &AffixLexicon,
) -> (String, NormalizationReport) {
    let (mut chars, mut spans) = map_with_spans(text, table);
    let zwnj = zwnj_edits(&chars, affixes);
    for edit in &zwnj {
        chars[edit.offset] = ZWNJ;
    }
    spans.extend(zwnj);
    (
        chars.into_iter().collect(),
        NormalizationReport::from_spans(spans),
    )
}

pub fn is_normalized(text: &str, table: &CharMapTable, affixes: &AffixLexicon) -> bool {
    let chars: Vec<char> = text.chars().collect();
    chars.iter().all(|&c| table.get(c).is_none()) && zwnj_edits(&chars, affixes).is_empty()
}
