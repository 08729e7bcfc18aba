use std::fmt;

use thiserror::Error;

use super::{FeatureStructure, TagsetSpec};

/// What an attribute must look like for a condition to hold.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Matcher {
    Value(String),
    /// `-`
    Unspecified,
    /// `*`
    AnySpecified,
}

impl Matcher {
    pub fn matches(&self, value: Option<&str>) -> bool {
        match (self, value) {
            (Matcher::Value(want), Some(got)) => want == got,
            (Matcher::Unspecified, None) | (Matcher::AnySpecified, Some(_)) => true,
            _ => false,
        }
    }
}

impl fmt::Display for Matcher {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Matcher::Value(v) => f.write_str(v),
            Matcher::Unspecified => f.write_str("-"),
            Matcher::AnySpecified => f.write_str("*"),
        }
    }
}

/// A forbidden combination: a tag of `category` is rejected when every
/// condition matches.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstraintRule {
    pub category: String,
    pub conditions: Vec<(String, Matcher)>,
}

impl ConstraintRule {
    pub fn is_violated_by(&self, fs: &FeatureStructure) -> bool {
        fs.category == self.category
            && self
                .conditions
                .iter()
                .all(|(attr, m)| m.matches(fs.get(attr)))
    }
}

impl fmt::Display for ConstraintRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FORBID {}", self.category)?;
        for (i, (attr, m)) in self.conditions.iter().enumerate() {
            let sep = if i == 0 { " " } else { " & " };
            write!(f, "{sep}{attr}={m}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown directive '{directive}'")]
    UnknownDirective { line: usize, directive: String },
    #[error("line {line}: unknown category '{category}'")]
    UnknownCategory { line: usize, category: String },
    #[error("line {line}: unknown attribute '{attribute}' for category '{category}'")]
    UnknownAttribute {
        line: usize,
        category: String,
        attribute: String,
    },
    #[error("line {line}: unknown value '{value}' for attribute '{attribute}'")]
    UnknownValue {
        line: usize,
        attribute: String,
        value: String,
    },
}

/// Reads `FORBID <Category> <Attr>=<value|-|*>( & <Attr>=<value|-|*>)*`
/// lines, checking every name against `spec`.
pub fn load_constraints(
    text: &str,
    spec: &TagsetSpec,
) -> Result<Vec<ConstraintRule>, ConstraintError> {
    let mut rules = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let syntax = |message: &str| ConstraintError::Syntax {
            line,
            message: message.to_string(),
        };

        let (directive, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        if directive != "FORBID" {
            return Err(ConstraintError::UnknownDirective {
                line,
                directive: directive.to_string(),
            });
        }
        let rest = rest.trim_start();
        let (cat_name, conds) = rest
            .split_once(char::is_whitespace)
            .ok_or_else(|| syntax("expected 'FORBID <Category> <Attr>=<value>'"))?;
        let category = spec
            .category(cat_name)
            .ok_or_else(|| ConstraintError::UnknownCategory {
                line,
                category: cat_name.to_string(),
            })?;

        let mut conditions = Vec::new();
        for cond in conds.split('&') {
            let (attr_name, value) = cond
                .trim()
                .split_once('=')
                .ok_or_else(|| syntax("condition must look like <Attr>=<value|-|*>"))?;
            let (attr_name, value) = (attr_name.trim(), value.trim());
            if attr_name.is_empty() || value.is_empty() {
                return Err(syntax("condition must look like <Attr>=<value|-|*>"));
            }
            let attr =
                category
                    .attribute(attr_name)
                    .ok_or_else(|| ConstraintError::UnknownAttribute {
                        line,
                        category: category.name.clone(),
                        attribute: attr_name.to_string(),
                    })?;
            let matcher = match value {
                "-" => Matcher::Unspecified,
                "*" => Matcher::AnySpecified,
                name => {
                    if attr.value_by_name(name).is_none() {
                        return Err(ConstraintError::UnknownValue {
                            line,
                            attribute: attr.name.clone(),
                            value: name.to_string(),
                        });
                    }
                    Matcher::Value(name.to_string())
                }
            };
            conditions.push((attr_name.to_string(), matcher));
        }
        rules.push(ConstraintRule {
            category: category.name.clone(),
            conditions,
        });
    }
    Ok(rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    #[test]
    fn parses_all_matcher_kinds() {
        let spec = data::persian_tagset();
        let rules = load_constraints(
            "# comment\n\nFORBID Noun Type=- & Case=*\nFORBID   Verb  Aspect=progressive\n",
            &spec,
        )
        .unwrap();
        assert_eq!(rules.len(), 2);
        assert_eq!(
            rules[0].conditions,
            vec![
                ("Type".to_string(), Matcher::Unspecified),
                ("Case".to_string(), Matcher::AnySpecified)
            ]
        );
        assert_eq!(rules[1].to_string(), "FORBID Verb Aspect=progressive");
        assert_eq!(rules[0].to_string(), "FORBID Noun Type=- & Case=*");
    }

    #[test]
    fn matching() {
        let rule = ConstraintRule {
            category: "Noun".into(),
            conditions: vec![
                ("Type".into(), Matcher::Value("proper".into())),
                ("Number".into(), Matcher::AnySpecified),
            ],
        };
        let fs = FeatureStructure::new("Noun").with("Type", "proper");
        assert!(!rule.is_violated_by(&fs));
        assert!(rule.is_violated_by(&fs.clone().with("Number", "plural")));
        let other = FeatureStructure::new("Verb")
            .with("Type", "proper")
            .with("Number", "plural");
        assert!(!rule.is_violated_by(&other));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let spec = data::persian_tagset();
        let cases = [
            ("ALLOW Noun Type=-", 1),
            ("\nFORBID Gerund Type=-", 2),
            ("FORBID Noun Gender=-", 1),
            ("FORBID Noun Type=abstract", 1),
            ("FORBID Noun Type", 1),
            ("FORBID Noun", 1),
            ("#x\n#y\nFORBID Noun Type=- &", 3),
        ];
        for (text, line) in cases {
            let err = load_constraints(text, &spec).unwrap_err();
            assert!(
                err.to_string().starts_with(&format!("line {line}:")),
                "{text:?}: {err}"
            );
        }
    }

    #[test]
    fn shipped_file_loads() {
        let spec = data::persian_tagset();
        let rules = load_constraints(data::PERSIAN_CONSTRAINTS, &spec).unwrap();
        assert_eq!(rules.len(), 88);
    }
}
