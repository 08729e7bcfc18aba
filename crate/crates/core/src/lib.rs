//! Positional morphosyntactic descriptors (MSDs) in the MULTEXT-East style,
//! with the Persian tagset, a Persian e-text normalizer, a ZWNJ-aware
//! tokenizer and MSD-annotated corpora and lexicons.
//!
//! ```
//! use msd_core::{data, tagset};
//!
//! let spec = data::persian_tagset();
//! let text = tagset::describe_msd("Nc-sgn", &spec).unwrap();
//! assert_eq!(text, "PoS: Noun, Type: common, Number: singular, Case: genitive, Definiteness: no");
//! ```

pub mod corpus;
pub mod data;
pub mod orthography;
pub mod tagset;
pub mod tokenizer;
