//! The Persian resources shipped in the repository's `data/` directory,
//! embedded at compile time.

use crate::orthography::{AffixLexicon, CharMapTable};
use crate::tagset::{load_constraints, load_tagset, ConstraintRule, TagsetSpec};
use crate::tokenizer::TokenizerConfig;

pub const PERSIAN_TAGSET: &str = include_str!("../../../data/persian.tagset");
pub const PERSIAN_CONSTRAINTS: &str = include_str!("../../../data/persian.constraints");
pub const HUB_TAGSET: &str = include_str!("../../../data/hub.tagset");
pub const CHARMAP: &str = include_str!("../../../data/charmap.txt");
pub const AFFIXES: &str = include_str!("../../../data/affixes.txt");
pub const TOKENIZER_CFG: &str = include_str!("../../../data/tokenizer.cfg");

pub fn persian_tagset() -> TagsetSpec {
    load_tagset("persian", PERSIAN_TAGSET).expect("shipped Persian tagset is valid")
}

pub fn persian_constraints(spec: &TagsetSpec) -> Vec<ConstraintRule> {
    load_constraints(PERSIAN_CONSTRAINTS, spec).expect("shipped Persian constraints are valid")
}

/// A small fragment of the hub-language noun specification.
pub fn hub_tagset() -> TagsetSpec {
    load_tagset("hub", HUB_TAGSET).expect("shipped hub tagset is valid")
}

pub fn charmap() -> CharMapTable {
    CharMapTable::parse(CHARMAP).expect("shipped charmap is valid")
}

pub fn affixes() -> AffixLexicon {
    AffixLexicon::parse(AFFIXES).expect("shipped affix list is valid")
}

pub fn tokenizer_config() -> TokenizerConfig {
    TokenizerConfig::parse(TOKENIZER_CFG).expect("shipped tokenizer config is valid")
}
