use thiserror::Error;

use super::{
    encode_msd, parse_msd, CategorySpec, ConstraintRule, FeatureStructure, Matcher, Msd, MsdError,
    TagsetSpec, DASH,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown category '{0}'")]
pub struct UnknownCategory(pub String);

/// Outcome of checking one tag against a tagset and its constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub tag: String,
    pub parse: Result<FeatureStructure, MsdError>,
    pub violations: Vec<ConstraintRule>,
    /// Parses and breaks no rule.
    pub meaningful: bool,
    /// Canonical spelling, when the tag parses.
    pub canonical: Option<Msd>,
}

impl ValidationReport {
    /// Whether the tag was already written in canonical form.
    pub fn is_canonical(&self) -> bool {
        self.canonical
            .as_ref()
            .is_some_and(|c| c.as_str() == self.tag)
    }
}

pub fn validate_msd(
    tag: &str,
    spec: &TagsetSpec,
    constraints: &[ConstraintRule],
) -> ValidationReport {
    let parse = parse_msd(tag, spec);
    let (violations, canonical) = match &parse {
        Ok(fs) => (
            constraints
                .iter()
                .filter(|r| r.is_violated_by(fs))
                .cloned()
                .collect(),
            encode_msd(fs, spec).ok(),
        ),
        Err(_) => (Vec::new(), None),
    };
    let meaningful = parse.is_ok() && violations.is_empty();
    ValidationReport {
        tag: tag.to_string(),
        parse,
        violations,
        meaningful,
        canonical,
    }
}

enum Slot {
    Value(usize),
    Unspecified,
    AnySpecified,
}

/// A rule rewritten over attribute indices of one category.
struct CompiledRule {
    conditions: Vec<(usize, Slot)>,
    /// Index of the last attribute the rule looks at.
    last: usize,
}

impl CompiledRule {
    fn matches(&self, state: &[Option<usize>]) -> bool {
        self.conditions
            .iter()
            .all(|(idx, slot)| match (slot, state[*idx]) {
                (Slot::Value(want), Some(got)) => *want == got,
                (Slot::Unspecified, None) | (Slot::AnySpecified, Some(_)) => true,
                _ => false,
            })
    }
}

fn compile(category: &CategorySpec, constraints: &[ConstraintRule]) -> Vec<CompiledRule> {
    constraints
        .iter()
        .filter(|r| r.category == category.name)
        .filter_map(|r| {
            let mut conditions = Vec::with_capacity(r.conditions.len());
            for (attr_name, matcher) in &r.conditions {
                // A rule naming an attribute this category lacks can never match.
                let idx = category.attribute_index(attr_name)?;
                let slot = match matcher {
                    Matcher::Value(v) => Slot::Value(
                        category.attributes[idx]
                            .values
                            .iter()
                            .position(|val| &val.name == v)?,
                    ),
                    Matcher::Unspecified => Slot::Unspecified,
                    Matcher::AnySpecified => Slot::AnySpecified,
                };
                conditions.push((idx, slot));
            }
            let last = conditions.iter().map(|(i, _)| *i).max()?;
            Some(CompiledRule { conditions, last })
        })
        .collect()
}

/// Depth-first walk over the attribute product, pruning as soon as every
/// attribute a rule mentions has been fixed.
fn walk(
    category: &CategorySpec,
    constraints: &[ConstraintRule],
    visit: &mut dyn FnMut(&[Option<usize>]),
) {
    let rules = compile(category, constraints);
    let n = category.attributes.len();
    let mut by_depth: Vec<Vec<&CompiledRule>> = (0..n).map(|_| Vec::new()).collect();
    for rule in &rules {
        by_depth[rule.last].push(rule);
    }

    fn step(
        depth: usize,
        category: &CategorySpec,
        by_depth: &[Vec<&CompiledRule>],
        state: &mut Vec<Option<usize>>,
        visit: &mut dyn FnMut(&[Option<usize>]),
    ) {
        if depth == state.len() {
            visit(state);
            return;
        }
        let choices =
            std::iter::once(None).chain((0..category.attributes[depth].values.len()).map(Some));
        for choice in choices {
            state[depth] = choice;
            if by_depth[depth].iter().any(|r| r.matches(state)) {
                continue;
            }
            step(depth + 1, category, by_depth, state, visit);
        }
        state[depth] = None;
    }

    let mut state = vec![None; n];
    step(0, category, &by_depth, &mut state, visit);
}

fn render(category: &CategorySpec, state: &[Option<usize>]) -> String {
    let mut columns = vec![DASH; category.max_position()];
    for (attr, choice) in category.attributes.iter().zip(state) {
        if let Some(v) = choice {
            columns[attr.position - 1] = attr.values[*v].code;
        }
    }
    while columns.last() == Some(&DASH) {
        columns.pop();
    }
    std::iter::once(category.code).chain(columns).collect()
}

/// All meaningful canonical tags of a category, sorted bytewise.
pub fn enumerate_msds(
    category: &str,
    spec: &TagsetSpec,
    constraints: &[ConstraintRule],
) -> Result<Vec<Msd>, UnknownCategory> {
    let cat = spec
        .category(category)
        .ok_or_else(|| UnknownCategory(category.to_string()))?;
    let mut tags = Vec::new();
    walk(cat, constraints, &mut |state| tags.push(render(cat, state)));
    tags.sort();
    Ok(tags.into_iter().map(Msd).collect())
}

/// Meaningful tag counts per category, in tagset order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MsdCounts {
    pub per_category: Vec<(String, usize)>,
    pub total: usize,
}

impl MsdCounts {
    pub fn get(&self, category: &str) -> Option<usize> {
        self.per_category
            .iter()
            .find(|(name, _)| name == category)
            .map(|(_, n)| *n)
    }
}

pub fn count_msds(spec: &TagsetSpec, constraints: &[ConstraintRule]) -> MsdCounts {
    let per_category: Vec<(String, usize)> = spec
        .categories
        .iter()
        .map(|cat| {
            let mut n = 0;
            walk(cat, constraints, &mut |_| n += 1);
            (cat.name.clone(), n)
        })
        .collect();
    let total = per_category.iter().map(|(_, n)| n).sum();
    MsdCounts {
        per_category,
        total,
    }
}
