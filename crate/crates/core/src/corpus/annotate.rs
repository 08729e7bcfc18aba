use super::{AnnotatedToken, Corpus, Document, Lexicon, LexiconEntry, Paragraph, Sentence};
use crate::orthography::{normalize, AffixLexicon, CharMapTable};
use crate::tokenizer::{Token, Tokenizer};

/// A token with its lexicon ambiguity class. Lemma and MSD are filled in
/// only when the class has exactly one member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annotation {
    pub token: AnnotatedToken,
    pub candidates: Vec<LexiconEntry>,
}

impl Annotation {
    pub fn is_ambiguous(&self) -> bool {
        self.candidates.len() > 1
    }
}

pub fn annotate(tokens: &[Token], lexicon: &Lexicon) -> Vec<Annotation> {
    tokens
        .iter()
        .map(|t| {
            let candidates: Vec<LexiconEntry> =
                lexicon.lookup(&t.surface).into_iter().cloned().collect();
            let mut token = AnnotatedToken::new(&t.surface);
            if let [only] = &candidates[..] {
                token.lemma = Some(only.effective_lemma().to_string());
                token.msd = Some(only.msd.clone());
            }
            Annotation { token, candidates }
        })
        .collect()
}

/// Normalization, tokenization and sentence splitting bundled for raw text.
#[derive(Debug, Clone, Default)]
pub struct TextPipeline {
    pub charmap: CharMapTable,
    pub affixes: AffixLexicon,
    pub tokenizer: Tokenizer,
}

impl TextPipeline {
    /// The shipped Persian resources.
    pub fn persian() -> Self {
        TextPipeline {
            charmap: crate::data::charmap(),
            affixes: crate::data::affixes(),
            tokenizer: Tokenizer::default(),
        }
    }
}

/// Turns raw text into a one-document corpus. All sentences go into a
/// single paragraph since raw text carries no paragraph markup.
pub fn annotate_text(
    doc_id: &str,
    text: &str,
    pipeline: &TextPipeline,
    lexicon: &Lexicon,
) -> Corpus {
    let (normalized, _) = normalize(text, &pipeline.charmap, &pipeline.affixes);
    let tokens = pipeline.tokenizer.tokenize(&normalized);
    let annotations = annotate(&tokens, lexicon);

    let sentences: Vec<Sentence> = pipeline
        .tokenizer
        .split_sentences(&tokens)
        .into_iter()
        .map(|span| Sentence {
            tokens: annotations[span.tokens]
                .iter()
                .map(|a| a.token.clone())
                .collect(),
        })
        .collect();

    let mut doc = Document::new(doc_id);
    if !sentences.is_empty() {
        doc.paragraphs.push(Paragraph { sentences });
    }
    Corpus {
        documents: vec![doc],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::load_lexicon;
    use crate::tokenizer::tokenize;

    fn lexicon() -> Lexicon {
        load_lexicon(
            "رفتند\tرفتن\tVmis3p\nشیر\tشیر\tNc-s\nشیر\t=\tAfp\n.\t.\tY\n",
            None,
        )
        .unwrap()
    }

    #[test]
    fn unique_entry_is_applied() {
        let out = annotate(&tokenize("رفتند"), &lexicon());
        assert_eq!(
            out[0].token,
            AnnotatedToken::new("رفتند")
                .with_lemma("رفتن")
                .with_msd("Vmis3p")
        );
        assert_eq!(out[0].candidates.len(), 1);
    }

    #[test]
    fn homograph_stays_unknown_with_candidates() {
        let out = annotate(&tokenize("شیر"), &lexicon());
        assert_eq!(out[0].token, AnnotatedToken::new("شیر"));
        assert!(out[0].is_ambiguous());
        assert_eq!(out[0].candidates.len(), 2);
    }

    #[test]
    fn unknown_form() {
        let out = annotate(&tokenize("ناشناخته ،"), &lexicon());
        assert_eq!(out.len(), 2);
        for a in &out {
            assert!(a.candidates.is_empty());
            assert_eq!(a.token.lemma, None);
            assert_eq!(a.token.msd, None);
        }
    }

    #[test]
    fn punctuation_covered_by_lexicon() {
        let out = annotate(&tokenize("رفتند."), &lexicon());
        assert_eq!(out[1].token.msd.as_deref(), Some("Y"));
    }

    #[test]
    fn never_invents_annotations() {
        let lex = lexicon();
        for a in annotate(&tokenize("شیر رفتند . شیر؟ x"), &lex) {
            if let Some(msd) = &a.token.msd {
                assert!(lex.entries().iter().any(|e| &e.msd == msd));
            }
            if let Some(lemma) = &a.token.lemma {
                assert!(lex.entries().iter().any(|e| e.effective_lemma() == lemma));
            }
        }
    }

    #[test]
    fn raw_text_to_corpus() {
        let corpus = annotate_text(
            "t",
            "شير رفتند. رفتند",
            &TextPipeline::persian(),
            &lexicon(),
        );
        let doc = &corpus.documents[0];
        assert_eq!(doc.id, "t");
        assert_eq!(doc.paragraphs.len(), 1);
        let sents = &doc.paragraphs[0].sentences;
        assert_eq!(sents.len(), 2);
        // Arabic yeh was normalized before lookup
        assert_eq!(sents[0].tokens[0].form, "شیر");
        assert_eq!(sents[0].tokens[2].msd.as_deref(), Some("Y"));

        let empty = annotate_text("e", "  ", &TextPipeline::persian(), &lexicon());
        assert!(empty.documents[0].paragraphs.is_empty());
    }
}
