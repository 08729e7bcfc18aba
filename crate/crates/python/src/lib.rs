use std::collections::BTreeMap;

use msd_core::corpus::{self, Corpus, Lexicon, TextPipeline};
use msd_core::orthography::{self, AffixLexicon, CharMapTable};
use msd_core::tagset::{self, ConstraintRule, FeatureStructure, TagsetSpec};
use msd_core::{data, tokenizer};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A tagset together with the constraints used for validation.
#[pyclass(module = "persian_msd")]
struct Tagset {
    spec: TagsetSpec,
    constraints: Vec<ConstraintRule>,
}

#[pymethods]
impl Tagset {
    /// Parses a definition and, optionally, constraint rules.
    #[new]
    #[pyo3(signature = (name, definition, constraints=None))]
    fn new(name: &str, definition: &str, constraints: Option<&str>) -> PyResult<Self> {
        let spec = tagset::load_tagset(name, definition).map_err(value_error)?;
        let constraints = match constraints {
            Some(text) => tagset::load_constraints(text, &spec).map_err(value_error)?,
            None => Vec::new(),
        };
        Ok(Tagset { spec, constraints })
    }

    #[staticmethod]
    fn persian() -> Self {
        let spec = data::persian_tagset();
        let constraints = data::persian_constraints(&spec);
        Tagset { spec, constraints }
    }

    #[staticmethod]
    fn hub() -> Self {
        Tagset {
            spec: data::hub_tagset(),
            constraints: Vec::new(),
        }
    }

    #[getter]
    fn name(&self) -> &str {
        &self.spec.name
    }

    fn categories(&self) -> Vec<String> {
        self.spec
            .categories
            .iter()
            .map(|c| c.name.clone())
            .collect()
    }

    /// Returns `(category, {attribute: value})`.
    fn parse(&self, tag: &str) -> PyResult<(String, BTreeMap<String, String>)> {
        let fs = tagset::parse_msd(tag, &self.spec).map_err(value_error)?;
        Ok((fs.category, fs.features))
    }

    #[pyo3(signature = (category, features=BTreeMap::new()))]
    fn encode(&self, category: &str, features: BTreeMap<String, String>) -> PyResult<String> {
        let fs = FeatureStructure {
            category: category.to_string(),
            features,
        };
        Ok(tagset::encode_msd(&fs, &self.spec)
            .map_err(value_error)?
            .into_string())
    }

    fn describe(&self, tag: &str) -> PyResult<String> {
        tagset::describe_msd(tag, &self.spec).map_err(value_error)
    }

    /// Returns a list of problems. Empty means the tag is meaningful.
    fn validate(&self, tag: &str) -> Vec<String> {
        let report = tagset::validate_msd(tag, &self.spec, &self.constraints);
        match &report.parse {
            Err(e) => vec![e.to_string()],
            Ok(_) => report.violations.iter().map(|r| r.to_string()).collect(),
        }
    }

    fn is_meaningful(&self, tag: &str) -> bool {
        tagset::validate_msd(tag, &self.spec, &self.constraints).meaningful
    }

    fn enumerate(&self, category: &str) -> PyResult<Vec<String>> {
        let tags =
            tagset::enumerate_msds(category, &self.spec, &self.constraints).map_err(value_error)?;
        Ok(tags.into_iter().map(|t| t.into_string()).collect())
    }

    /// Meaningful tag count per category.
    fn count(&self) -> BTreeMap<String, usize> {
        tagset::count_msds(&self.spec, &self.constraints)
            .per_category
            .into_iter()
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Tagset({:?}, categories={}, constraints={})",
            self.spec.name,
            self.spec.categories.len(),
            self.constraints.len()
        )
    }
}

#[pyclass(module = "persian_msd")]
struct Normalizer {
    charmap: CharMapTable,
    affixes: AffixLexicon,
}

#[pymethods]
impl Normalizer {
    /// Both arguments take file contents. Omitted ones use the shipped data.
    #[new]
    #[pyo3(signature = (charmap=None, affixes=None))]
    fn new(charmap: Option<&str>, affixes: Option<&str>) -> PyResult<Self> {
        Ok(Normalizer {
            charmap: match charmap {
                Some(t) => CharMapTable::parse(t).map_err(value_error)?,
                None => data::charmap(),
            },
            affixes: match affixes {
                Some(t) => AffixLexicon::parse(t).map_err(value_error)?,
                None => data::affixes(),
            },
        })
    }

    /// Returns the text and a list of `(offset, length, rule)` edits.
    fn normalize(&self, text: &str) -> (String, Vec<(usize, usize, String)>) {
        let (out, report) = orthography::normalize(text, &self.charmap, &self.affixes);
        let spans = report
            .spans
            .iter()
            .map(|s| (s.offset, s.length, s.rule.to_string()))
            .collect();
        (out, spans)
    }

    fn is_normalized(&self, text: &str) -> bool {
        orthography::is_normalized(text, &self.charmap, &self.affixes)
    }
}

#[pyfunction]
fn normalize(text: &str) -> String {
    orthography::normalize(text, &data::charmap(), &data::affixes()).0
}

/// `(surface, kind, start, end)` per token, offsets in codepoints.
#[pyfunction]
fn tokenize(text: &str) -> Vec<(String, &'static str, usize, usize)> {
    tokenizer::tokenize(text)
        .into_iter()
        .map(|t| {
            let kind = t.kind.as_str();
            (t.surface, kind, t.start, t.end)
        })
        .collect()
}

/// Token surfaces grouped by sentence.
#[pyfunction]
fn split_sentences(text: &str) -> Vec<Vec<String>> {
    let tokens = tokenizer::tokenize(text);
    tokenizer::split_sentences(&tokens)
        .into_iter()
        .map(|s| tokens[s.tokens].iter().map(|t| t.surface.clone()).collect())
        .collect()
}

#[pyclass(name = "Lexicon", module = "persian_msd")]
struct PyLexicon(Lexicon);

#[pymethods]
impl PyLexicon {
    /// Tab-separated `form lemma msd` lines. Tags are checked when a tagset is given.
    #[new]
    #[pyo3(signature = (text, tagset=None))]
    fn new(text: &str, tagset: Option<PyRef<'_, Tagset>>) -> PyResult<Self> {
        let spec = tagset.as_ref().map(|t| &t.spec);
        Ok(PyLexicon(
            corpus::load_lexicon(text, spec).map_err(value_error)?,
        ))
    }

    /// `(lemma, msd)` pairs for a form, lemma already resolved.
    fn lookup(&self, form: &str) -> Vec<(String, String)> {
        self.0
            .lookup(form)
            .into_iter()
            .map(|e| (e.effective_lemma().to_string(), e.msd.clone()))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }
}

#[pyclass(name = "Corpus", module = "persian_msd")]
struct PyCorpus(Corpus);

#[pymethods]
impl PyCorpus {
    #[staticmethod]
    fn from_vertical(text: &str) -> PyResult<Self> {
        Ok(PyCorpus(corpus::read_vertical(text).map_err(value_error)?))
    }

    /// Normalizes, tokenizes and annotates raw text with the shipped resources.
    #[staticmethod]
    fn annotate(doc_id: &str, text: &str, lexicon: PyRef<'_, PyLexicon>) -> Self {
        PyCorpus(corpus::annotate_text(
            doc_id,
            text,
            &TextPipeline::persian(),
            &lexicon.0,
        ))
    }

    fn to_vertical(&self) -> String {
        corpus::write_vertical(&self.0)
    }

    /// `(form, lemma, msd)` for every token in reading order.
    fn tokens(&self) -> Vec<(String, Option<String>, Option<String>)> {
        self.0
            .tokens()
            .map(|t| (t.form.clone(), t.lemma.clone(), t.msd.clone()))
            .collect()
    }

    fn stats(&self) -> BTreeMap<&'static str, usize> {
        let s = corpus::compute_stats(&self.0);
        BTreeMap::from([
            ("tokens", s.tokens),
            ("paragraphs", s.paragraphs),
            ("sentences", s.sentences),
            ("lemmas", s.lemmas),
            ("types", s.types),
            ("distinct_msds", s.distinct_msds),
        ])
    }

    /// One line per offending token.
    fn validate(&self, tagset: PyRef<'_, Tagset>) -> Vec<String> {
        corpus::validate_corpus(&self.0, &tagset.spec, &tagset.constraints)
            .diagnostics
            .iter()
            .map(|d| d.to_string())
            .collect()
    }

    fn __len__(&self) -> usize {
        self.0.tokens().count()
    }
}

#[pymodule]
fn persian_msd(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Tagset>()?;
    m.add_class::<Normalizer>()?;
    m.add_class::<PyLexicon>()?;
    m.add_class::<PyCorpus>()?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(tokenize, m)?)?;
    m.add_function(wrap_pyfunction!(split_sentences, m)?)?;
    m.add("ZWNJ", orthography::ZWNJ.to_string())?;
    Ok(())
}
