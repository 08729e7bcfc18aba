use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use msd_core::data;
use msd_core::orthography::{AffixLexicon, CharMapTable};
use msd_core::tagset::{load_constraints, load_tagset, ConstraintRule, TagsetSpec};
use msd_core::tokenizer::{Tokenizer, TokenizerConfig};

/// Where each resource comes from. `None` means the shipped default.
#[derive(Debug, Clone, Default)]
pub struct CliConfig {
    /// `persian`, `hub`, or a definition file.
    pub tagset: Option<String>,
    /// A constraint file or `none`.
    pub constraints: Option<String>,
    pub charmap: Option<PathBuf>,
    pub affixes: Option<PathBuf>,
    pub tokenizer_cfg: Option<PathBuf>,
}

/// Every resource parsed and ready.
pub struct Resources {
    pub spec: TagsetSpec,
    pub constraints: Vec<ConstraintRule>,
    pub charmap: CharMapTable,
    pub affixes: AffixLexicon,
    pub tokenizer: Tokenizer,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

impl CliConfig {
    pub fn load(&self) -> Result<Resources> {
        let (spec, persian) = match self.tagset.as_deref() {
            None | Some("persian") => (data::persian_tagset(), true),
            Some("hub") => (data::hub_tagset(), false),
            Some(path) => {
                let path = Path::new(path);
                let name = path
                    .file_stem()
                    .and_then(|s| s.to_str())
                    .unwrap_or("tagset");
                let spec = load_tagset(name, &read(path)?)
                    .with_context(|| format!("invalid tagset {}", path.display()))?;
                (spec, false)
            }
        };

        // The shipped constraints only make sense for the shipped Persian tagset.
        let constraints = match self.constraints.as_deref() {
            None if persian => data::persian_constraints(&spec),
            None | Some("none") => Vec::new(),
            Some(path) => {
                let path = Path::new(path);
                load_constraints(&read(path)?, &spec)
                    .with_context(|| format!("invalid constraints {}", path.display()))?
            }
        };

        let charmap = match &self.charmap {
            None => data::charmap(),
            Some(p) => CharMapTable::parse(&read(p)?)
                .with_context(|| format!("invalid charmap {}", p.display()))?,
        };
        let affixes = match &self.affixes {
            None => data::affixes(),
            Some(p) => AffixLexicon::parse(&read(p)?)
                .with_context(|| format!("invalid affix list {}", p.display()))?,
        };
        let tokenizer = match &self.tokenizer_cfg {
            None => Tokenizer::default(),
            Some(p) => Tokenizer::new(
                TokenizerConfig::parse(&read(p)?)
                    .with_context(|| format!("invalid tokenizer config {}", p.display()))?,
            ),
        };

        Ok(Resources {
            spec,
            constraints,
            charmap,
            affixes,
            tokenizer,
        })
    }
}
