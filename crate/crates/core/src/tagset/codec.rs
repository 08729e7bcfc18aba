use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::{TagsetSpec, DASH};

/// A canonical MSD string: category code, value codes at their columns,
/// `-` in gaps, trailing dashes trimmed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Msd(pub(crate) String);

impl Msd {
    /// Parses `tag` and re-encodes it, giving the canonical spelling.
    pub fn canonical(tag: &str, spec: &TagsetSpec) -> Result<Msd, MsdError> {
        encode_msd(&parse_msd(tag, spec)?, spec)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for Msd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Msd {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// A decoded tag. Attributes missing from `features` are unspecified.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FeatureStructure {
    pub category: String,
    pub features: BTreeMap<String, String>,
}

impl FeatureStructure {
    pub fn new(category: impl Into<String>) -> Self {
        FeatureStructure {
            category: category.into(),
            features: BTreeMap::new(),
        }
    }

    pub fn with(mut self, attribute: impl Into<String>, value: impl Into<String>) -> Self {
        self.features.insert(attribute.into(), value.into());
        self
    }

    pub fn get(&self, attribute: &str) -> Option<&str> {
        self.features.get(attribute).map(String::as_str)
    }
}

/// Positions are character indices into the tag; the category code is at 0.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MsdError {
    #[error("empty tag")]
    Empty,
    #[error("unknown category code '{code}' at position 0")]
    UnknownCategoryCode { code: char },
    #[error("unknown value code '{code}' at position {position} ({attribute})")]
    UnknownValueCode {
        code: char,
        position: usize,
        attribute: String,
    },
    #[error("non-dash character '{code}' at undeclared position {position}")]
    UndeclaredPosition { code: char, position: usize },
    #[error("unknown category '{0}'")]
    UnknownCategory(String),
    #[error("unknown attribute '{attribute}' for category '{category}'")]
    UnknownAttribute { category: String, attribute: String },
    #[error("unknown value '{value}' for attribute '{attribute}'")]
    UnknownValue { attribute: String, value: String },
}

impl MsdError {
    /// Character index the error refers to, when it comes from decoding.
    pub fn position(&self) -> Option<usize> {
        match self {
            MsdError::Empty | MsdError::UnknownCategoryCode { .. } => Some(0),
            MsdError::UnknownValueCode { position, .. }
            | MsdError::UndeclaredPosition { position, .. } => Some(*position),
            _ => None,
        }
    }
}

/// Decodes a positional tag. Trailing dashes and short tags are both
/// accepted; columns past the end of the string are unspecified.
pub fn parse_msd(tag: &str, spec: &TagsetSpec) -> Result<FeatureStructure, MsdError> {
    let mut chars = tag.chars();
    let code = chars.next().ok_or(MsdError::Empty)?;
    let category = spec
        .category_by_code(code)
        .ok_or(MsdError::UnknownCategoryCode { code })?;

    let mut fs = FeatureStructure::new(&category.name);
    for (i, c) in chars.enumerate() {
        let position = i + 1;
        match category.attribute_at(position) {
            _ if c == DASH => {}
            Some(attr) => {
                let value = attr
                    .value_by_code(c)
                    .ok_or_else(|| MsdError::UnknownValueCode {
                        code: c,
                        position,
                        attribute: attr.name.clone(),
                    })?;
                fs.features.insert(attr.name.clone(), value.name.clone());
            }
            None => return Err(MsdError::UndeclaredPosition { code: c, position }),
        }
    }
    Ok(fs)
}

/// Encodes a feature structure as its canonical tag.
pub fn encode_msd(fs: &FeatureStructure, spec: &TagsetSpec) -> Result<Msd, MsdError> {
    let category = spec
        .category(&fs.category)
        .ok_or_else(|| MsdError::UnknownCategory(fs.category.clone()))?;

    let mut columns = vec![DASH; category.max_position()];
    for (attribute, value) in &fs.features {
        let attr = category
            .attribute(attribute)
            .ok_or_else(|| MsdError::UnknownAttribute {
                category: category.name.clone(),
                attribute: attribute.clone(),
            })?;
        let spec_value = attr
            .value_by_name(value)
            .ok_or_else(|| MsdError::UnknownValue {
                attribute: attribute.clone(),
                value: value.clone(),
            })?;
        columns[attr.position - 1] = spec_value.code;
    }
    while columns.last() == Some(&DASH) {
        columns.pop();
    }

    let mut text = String::with_capacity(1 + columns.len());
    text.push(category.code);
    text.extend(columns);
    Ok(Msd(text))
}

/// `PoS: <Category>, <Attr>: <value>, ...` in column order.
pub fn describe_msd(tag: &str, spec: &TagsetSpec) -> Result<String, MsdError> {
    let fs = parse_msd(tag, spec)?;
    // parse_msd only yields categories that exist
    let category = spec.category(&fs.category).expect("parsed category exists");
    let mut out = format!("PoS: {}", category.name);
    for attr in &category.attributes {
        if let Some(value) = fs.get(&attr.name) {
            out.push_str(&format!(", {}: {}", attr.name, value));
        }
    }
    Ok(out)
}
