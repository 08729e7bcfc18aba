//! Positional tagset grammars and MSD strings.
//!
//! A [`TagsetSpec`] lists the categories of a language. Each category has a
//! one-character code and a set of attributes, and each attribute owns a
//! column (1-based, counted after the category code) and a list of coded
//! values. An MSD string such as `Nc-sgn` is the category code followed by
//! one value code per column, with `-` where an attribute is unspecified.

mod codec;
mod constraint;
mod enumerate;

use std::fmt;

use thiserror::Error;

pub use codec::{describe_msd, encode_msd, parse_msd, FeatureStructure, Msd, MsdError};
pub use constraint::{load_constraints, ConstraintError, ConstraintRule, Matcher};
pub use enumerate::{
    count_msds, enumerate_msds, validate_msd, MsdCounts, UnknownCategory, ValidationReport,
};

/// The placeholder for an unspecified attribute.
pub const DASH: char = '-';

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueSpec {
    pub name: String,
    pub code: char,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttributeSpec {
    pub name: String,
    /// Column after the category code, starting at 1.
    pub position: usize,
    pub values: Vec<ValueSpec>,
}

impl AttributeSpec {
    pub fn value_by_code(&self, code: char) -> Option<&ValueSpec> {
        self.values.iter().find(|v| v.code == code)
    }

    pub fn value_by_name(&self, name: &str) -> Option<&ValueSpec> {
        self.values.iter().find(|v| v.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategorySpec {
    pub name: String,
    pub code: char,
    /// Sorted by position.
    pub attributes: Vec<AttributeSpec>,
}

impl CategorySpec {
    /// Highest attribute column, or 0 for categories without attributes.
    pub fn max_position(&self) -> usize {
        self.attributes
            .iter()
            .map(|a| a.position)
            .max()
            .unwrap_or(0)
    }

    pub fn attribute(&self, name: &str) -> Option<&AttributeSpec> {
        self.attributes.iter().find(|a| a.name == name)
    }

    pub fn attribute_at(&self, position: usize) -> Option<&AttributeSpec> {
        self.attributes.iter().find(|a| a.position == position)
    }

    pub(crate) fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TagsetSpec {
    pub name: String,
    pub categories: Vec<CategorySpec>,
}

impl TagsetSpec {
    /// A tagset with no categories. Definition files always declare at
    /// least one, so this only exists for programmatic construction.
    pub fn empty(name: impl Into<String>) -> Self {
        TagsetSpec {
            name: name.into(),
            categories: Vec::new(),
        }
    }

    pub fn category(&self, name: &str) -> Option<&CategorySpec> {
        self.categories.iter().find(|c| c.name == name)
    }

    pub fn category_by_code(&self, code: char) -> Option<&CategorySpec> {
        self.categories.iter().find(|c| c.code == code)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TagsetError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown directive '{directive}'")]
    UnknownDirective { line: usize, directive: String },
    #[error("line {line}: duplicate category {what} '{value}'")]
    DuplicateCategory {
        line: usize,
        what: &'static str,
        value: String,
    },
    #[error("line {line}: duplicate position {position} in category '{category}'")]
    DuplicatePosition {
        line: usize,
        category: String,
        position: usize,
    },
    #[error("line {line}: duplicate attribute '{attribute}' in category '{category}'")]
    DuplicateAttribute {
        line: usize,
        category: String,
        attribute: String,
    },
    #[error("line {line}: duplicate value {what} '{value}' in attribute '{attribute}'")]
    DuplicateValue {
        line: usize,
        attribute: String,
        what: &'static str,
        value: String,
    },
    #[error("line {line}: attribute '{attribute}' has no values")]
    EmptyAttribute { line: usize, attribute: String },
    #[error("tagset defines no categories")]
    NoCategories,
}

fn single_char(token: &str) -> Option<char> {
    let mut chars = token.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}

fn is_identifier(token: &str) -> bool {
    !token.is_empty()
        && token
            .chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '.')
}

/// Builder state while reading a definition file.
struct Loader {
    categories: Vec<CategorySpec>,
    /// Line on which the current attribute was declared.
    attr_line: usize,
}

impl Loader {
    fn finish_attribute(&mut self) -> Result<(), TagsetError> {
        if let Some(attr) = self.categories.last().and_then(|c| c.attributes.last()) {
            if attr.values.is_empty() {
                return Err(TagsetError::EmptyAttribute {
                    line: self.attr_line,
                    attribute: attr.name.clone(),
                });
            }
        }
        Ok(())
    }
}

/// Reads a tagset definition.
///
/// The format is line based: `#` starts a comment line, `CATEGORY <Name> <code>`
/// opens a category, `ATTR <position> <Name>` adds an attribute to it and
/// `VAL <name> <code>` adds a value to the latest attribute.
pub fn load_tagset(name: &str, definition: &str) -> Result<TagsetSpec, TagsetError> {
    let mut loader = Loader {
        categories: Vec::new(),
        attr_line: 0,
    };

    for (idx, raw) in definition.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = text.split_whitespace().collect();
        let syntax = |message: &str| TagsetError::Syntax {
            line,
            message: message.to_string(),
        };

        match fields[0] {
            "CATEGORY" => {
                let [_, cat_name, code] = fields[..] else {
                    return Err(syntax("expected 'CATEGORY <Name> <code>'"));
                };
                if !is_identifier(cat_name) {
                    return Err(syntax("category name must be an identifier"));
                }
                let code = single_char(code)
                    .filter(|&c| c != DASH)
                    .ok_or_else(|| syntax("category code must be one character other than '-'"))?;
                loader.finish_attribute()?;
                if loader.categories.iter().any(|c| c.name == cat_name) {
                    return Err(TagsetError::DuplicateCategory {
                        line,
                        what: "name",
                        value: cat_name.to_string(),
                    });
                }
                if loader.categories.iter().any(|c| c.code == code) {
                    return Err(TagsetError::DuplicateCategory {
                        line,
                        what: "code",
                        value: code.to_string(),
                    });
                }
                loader.categories.push(CategorySpec {
                    name: cat_name.to_string(),
                    code,
                    attributes: Vec::new(),
                });
            }
            "ATTR" => {
                let [_, position, attr_name] = fields[..] else {
                    return Err(syntax("expected 'ATTR <position> <Name>'"));
                };
                let position: usize = position
                    .parse()
                    .ok()
                    .filter(|&p| p >= 1)
                    .ok_or_else(|| syntax("attribute position must be an integer >= 1"))?;
                if !is_identifier(attr_name) {
                    return Err(syntax("attribute name must be an identifier"));
                }
                loader.finish_attribute()?;
                let category = loader
                    .categories
                    .last_mut()
                    .ok_or_else(|| syntax("ATTR before any CATEGORY"))?;
                if category.attribute_at(position).is_some() {
                    return Err(TagsetError::DuplicatePosition {
                        line,
                        category: category.name.clone(),
                        position,
                    });
                }
                if category.attribute(attr_name).is_some() {
                    return Err(TagsetError::DuplicateAttribute {
                        line,
                        category: category.name.clone(),
                        attribute: attr_name.to_string(),
                    });
                }
                category.attributes.push(AttributeSpec {
                    name: attr_name.to_string(),
                    position,
                    values: Vec::new(),
                });
                loader.attr_line = line;
            }
            "VAL" => {
                let [_, value_name, code] = fields[..] else {
                    return Err(syntax("expected 'VAL <name> <code>'"));
                };
                if !is_identifier(value_name) {
                    return Err(syntax("value name must be an identifier"));
                }
                let code = single_char(code)
                    .filter(|&c| c != DASH)
                    .ok_or_else(|| syntax("value code must be one character other than '-'"))?;
                let attr = loader
                    .categories
                    .last_mut()
                    .and_then(|c| c.attributes.last_mut())
                    .ok_or_else(|| syntax("VAL before any ATTR"))?;
                let duplicate = if attr.value_by_name(value_name).is_some() {
                    Some(("name", value_name.to_string()))
                } else if attr.value_by_code(code).is_some() {
                    Some(("code", code.to_string()))
                } else {
                    None
                };
                if let Some((what, value)) = duplicate {
                    return Err(TagsetError::DuplicateValue {
                        line,
                        attribute: attr.name.clone(),
                        what,
                        value,
                    });
                }
                attr.values.push(ValueSpec {
                    name: value_name.to_string(),
                    code,
                });
            }
            other => {
                return Err(TagsetError::UnknownDirective {
                    line,
                    directive: other.to_string(),
                })
            }
        }
    }
    loader.finish_attribute()?;

    if loader.categories.is_empty() {
        return Err(TagsetError::NoCategories);
    }
    for category in &mut loader.categories {
        category.attributes.sort_by_key(|a| a.position);
    }
    Ok(TagsetSpec {
        name: name.to_string(),
        categories: loader.categories,
    })
}

impl fmt::Display for TagsetSpec {
    /// Writes the spec back in definition-file syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, category) in self.categories.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            writeln!(f, "CATEGORY {} {}", category.name, category.code)?;
            for attr in &category.attributes {
                writeln!(f, "ATTR {} {}", attr.position, attr.name)?;
                for value in &attr.values {
                    writeln!(f, "VAL {} {}", value.name, value.code)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    #[test]
    fn persian_categories_match_the_pos_table() {
        let spec = data::persian_tagset();
        let got: Vec<(&str, char)> = spec
            .categories
            .iter()
            .map(|c| (c.name.as_str(), c.code))
            .collect();
        assert_eq!(
            got,
            vec![
                ("Noun", 'N'),
                ("Verb", 'V'),
                ("Adjective", 'A'),
                ("Pronoun", 'P'),
                ("Determiner", 'D'),
                ("Adverb", 'R'),
                ("Adposition", 'S'),
                ("Conjunction", 'C'),
                ("Numeral", 'M'),
                ("Interjection", 'I'),
                ("Abbreviation", 'Y'),
            ]
        );
    }

    #[test]
    fn persian_attribute_layout() {
        let spec = data::persian_tagset();
        let layout = |cat: &str| -> Vec<(usize, String, String)> {
            spec.category(cat)
                .unwrap()
                .attributes
                .iter()
                .map(|a| {
                    let codes: String = a.values.iter().map(|v| v.code).collect();
                    (a.position, a.name.clone(), codes)
                })
                .collect()
        };
        let row = |p: usize, n: &str, c: &str| (p, n.to_string(), c.to_string());

        assert_eq!(
            layout("Noun"),
            vec![
                row(1, "Type", "cp"),
                row(3, "Number", "sp"),
                row(4, "Case", "gv"),
                row(5, "Definiteness", "ny"),
            ]
        );
        assert_eq!(
            layout("Verb"),
            vec![
                row(1, "Type", "maocl"),
                row(2, "VForm", "ismp"),
                row(3, "Tense", "ps"),
                row(4, "Person", "123"),
                row(5, "Number", "sp"),
                row(8, "Negative", "ny"),
                row(10, "Clitic", "ny"),
                row(14, "Aspect", "p"),
                row(15, "Courtesy", "ny"),
                row(16, "Transitive", "ny"),
            ]
        );
        assert_eq!(
            layout("Adjective"),
            vec![
                row(1, "Type", "f"),
                row(2, "Degree", "pcs"),
                row(5, "Case", "g"),
                row(6, "Definiteness", "ny"),
            ]
        );
        assert_eq!(
            layout("Pronoun"),
            vec![
                row(1, "Type", "pdiqxy"),
                row(2, "Person", "123"),
                row(4, "Number", "sp"),
                row(5, "Case", "ga"),
                row(8, "Clitic", "ny"),
            ]
        );
        assert_eq!(
            layout("Determiner"),
            vec![row(1, "Type", "diqeax"), row(4, "Number", "sp")]
        );
        assert_eq!(
            layout("Adverb"),
            vec![row(2, "Degree", "pc"), row(7, "Case", "g")]
        );
        assert_eq!(
            layout("Adposition"),
            vec![row(1, "Type", "pt"), row(2, "Formation", "sc")]
        );
        assert_eq!(
            layout("Conjunction"),
            vec![row(1, "Type", "cs"), row(2, "Formation", "sc")]
        );
        assert_eq!(
            layout("Numeral"),
            vec![
                row(1, "Type", "cofr"),
                row(4, "Case", "g"),
                row(6, "Definiteness", "ny"),
            ]
        );
        assert!(layout("Interjection").is_empty());
        assert!(layout("Abbreviation").is_empty());

        let det = spec.category("Determiner").unwrap();
        let exceptional = det.attributes[0].value_by_code('x').unwrap();
        assert_eq!(exceptional.name, "exceptional");
    }

    #[test]
    fn attributeless_category_has_max_position_zero() {
        let spec = load_tagset("x", "CATEGORY X X\n").unwrap();
        assert_eq!(spec.categories.len(), 1);
        assert_eq!(spec.categories[0].max_position(), 0);
    }

    #[test]
    fn duplicate_position_is_rejected() {
        let text = "CATEGORY X X\nATTR 1 A\nVAL a a\nATTR 1 B\nVAL b b\n";
        let err = load_tagset("x", text).unwrap_err();
        assert_eq!(
            err,
            TagsetError::DuplicatePosition {
                line: 4,
                category: "X".into(),
                position: 1
            }
        );
        assert!(err.to_string().contains("duplicate position"));
    }

    #[test]
    fn load_errors_carry_line_numbers() {
        let err = load_tagset("x", "# c\nCATEGORY X\n").unwrap_err();
        assert!(matches!(err, TagsetError::Syntax { line: 2, .. }));

        let err = load_tagset("x", "CATEGORY X X\nFEATURE 1 A\n").unwrap_err();
        assert_eq!(
            err,
            TagsetError::UnknownDirective {
                line: 2,
                directive: "FEATURE".into()
            }
        );

        let err = load_tagset("x", "CATEGORY X X\nCATEGORY Y X\n").unwrap_err();
        assert!(matches!(
            err,
            TagsetError::DuplicateCategory {
                line: 2,
                what: "code",
                ..
            }
        ));

        let err = load_tagset("x", "CATEGORY X X\nATTR 1 A\nVAL a a\nVAL b a\n").unwrap_err();
        assert!(matches!(
            err,
            TagsetError::DuplicateValue {
                line: 4,
                what: "code",
                ..
            }
        ));

        let err = load_tagset("x", "CATEGORY X X\nATTR 1 A\nVAL a -\n").unwrap_err();
        assert!(matches!(err, TagsetError::Syntax { line: 3, .. }));

        let err = load_tagset("x", "CATEGORY X X\nATTR 1 A\nATTR 2 B\nVAL b b\n").unwrap_err();
        assert!(matches!(err, TagsetError::EmptyAttribute { line: 2, .. }));

        let err = load_tagset("x", "VAL a a\n").unwrap_err();
        assert!(matches!(err, TagsetError::Syntax { line: 1, .. }));

        assert_eq!(
            load_tagset("x", "# nothing\n"),
            Err(TagsetError::NoCategories)
        );
    }

    #[test]
    fn display_round_trips() {
        let spec = data::persian_tagset();
        let again = load_tagset(&spec.name, &spec.to_string()).unwrap();
        assert_eq!(spec, again);
    }
}
