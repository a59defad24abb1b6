//! Labeled document collections, vocabularies, sparse term-frequency vectors,
//! and deterministic train/test splits.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::CoreError;

/// Dense term identifier in `[0, |V|)`, assigned by [`Vocabulary::build`].
pub type TermId = u32;
/// Dense category identifier in `[0, |C|)`.
pub type CategoryId = u32;

/// One labeled document after text processing: lowercase tokens with
/// stopwords removed. The token list may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub label: CategoryId,
    pub tokens: Vec<String>,
}

/// A single-label document collection with a fixed category registry.
///
/// Document order is whatever order they were added in; loaders are expected
/// to add documents deterministically.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    categories: Vec<String>,
    docs: Vec<Document>,
    empty_docs: u32,
}

impl Corpus {
    /// Creates an empty corpus with the given category registry. Category ids
    /// are the indices into `categories`.
    pub fn new(categories: Vec<String>) -> Self {
        Self { categories, docs: Vec::new(), empty_docs: 0 }
    }

    /// Adds a document. Errors if its label is not a registered category;
    /// documents that are empty after processing are kept and counted.
    pub fn push(&mut self, doc: Document) -> Result<(), CoreError> {
        if doc.label as usize >= self.categories.len() {
            return Err(CoreError::UnknownCategory {
                label: doc.label,
                num_categories: self.categories.len() as u32,
            });
        }
        if doc.tokens.is_empty() {
            self.empty_docs += 1;
        }
        self.docs.push(doc);
        Ok(())
    }

    pub fn categories(&self) -> &[String] {
        &self.categories
    }

    pub fn category_id(&self, name: &str) -> Option<CategoryId> {
        self.categories.iter().position(|c| c == name).map(|i| i as CategoryId)
    }

    pub fn num_categories(&self) -> u32 {
        self.categories.len() as u32
    }

    pub fn docs(&self) -> &[Document] {
        &self.docs
    }

    pub fn len(&self) -> usize {
        self.docs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.docs.is_empty()
    }

    /// Number of documents whose token list was empty when added.
    pub fn empty_docs(&self) -> u32 {
        self.empty_docs
    }
}

/// Bijective term <-> id mapping built from the training split only.
///
/// Ids are dense in `[0, |V|)` and assigned in lexicographic term order, so
/// the same training tokens always produce the same vocabulary.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vocabulary {
    term_to_id: BTreeMap<String, TermId>,
    id_to_term: Vec<String>,
}

impl Vocabulary {
    /// Builds the vocabulary from training documents. Terms occurring fewer
    /// than `min_global_count` times corpus-wide (raw occurrences, not
    /// document frequency) are dropped.
    pub fn build<'a, I>(train_docs: I, min_global_count: u32) -> Self
    where
        I: IntoIterator<Item = &'a Document>,
    {
        let mut counts: BTreeMap<&str, u64> = BTreeMap::new();
        for doc in train_docs {
            for token in &doc.tokens {
                *counts.entry(token.as_str()).or_insert(0) += 1;
            }
        }
        let mut vocab = Vocabulary::default();
        for (term, count) in counts {
            if count >= u64::from(min_global_count.max(1)) {
                let id = vocab.id_to_term.len() as TermId;
                vocab.term_to_id.insert(term.to_string(), id);
                vocab.id_to_term.push(term.to_string());
            }
        }
        vocab
    }

    /// Rebuilds a vocabulary from terms already in id order (e.g. a stats
    /// sidecar file). The caller guarantees the order matches the original.
    pub fn from_ordered_terms(terms: Vec<String>) -> Self {
        let term_to_id = terms
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i as TermId))
            .collect();
        Self { term_to_id, id_to_term: terms }
    }

    pub fn id(&self, term: &str) -> Option<TermId> {
        self.term_to_id.get(term).copied()
    }

    pub fn term(&self, id: TermId) -> Option<&str> {
        self.id_to_term.get(id as usize).map(String::as_str)
    }

    pub fn terms(&self) -> &[String] {
        &self.id_to_term
    }

    pub fn len(&self) -> usize {
        self.id_to_term.len()
    }

    pub fn is_empty(&self) -> bool {
        self.id_to_term.is_empty()
    }
}

/// Global counts of the training split.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CorpusStats {
    pub num_train_docs: u32,
    pub vocab_size: u32,
    /// Training document count per category id.
    pub docs_per_category: Vec<u32>,
}

impl CorpusStats {
    pub fn from_training(
        labels: &[CategoryId],
        num_categories: u32,
        vocab_size: u32,
    ) -> Result<Self, CoreError> {
        let mut docs_per_category = alloc::vec![0u32; num_categories as usize];
        for &label in labels {
            if label >= num_categories {
                return Err(CoreError::UnknownCategory { label, num_categories });
            }
            docs_per_category[label as usize] += 1;
        }
        Ok(Self { num_train_docs: labels.len() as u32, vocab_size, docs_per_category })
    }

    pub fn num_categories(&self) -> u32 {
        self.docs_per_category.len() as u32
    }
}

/// Sparse vector of one document: `(term id, value)` pairs with strictly
/// increasing term ids and no zero entries. While it holds raw counts,
/// `max_tf` is the largest count in the document.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SparseVector {
    entries: Vec<(TermId, f64)>,
    max_tf: f64,
}

impl SparseVector {
    /// Builds from entries that are already sorted by strictly increasing
    /// term id; zero-valued entries are dropped.
    pub fn from_sorted(entries: Vec<(TermId, f64)>, max_tf: f64) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        let entries: Vec<_> = entries.into_iter().filter(|&(_, v)| v != 0.0).collect();
        Self { entries, max_tf }
    }

    pub fn empty() -> Self {
        Self { entries: Vec::new(), max_tf: 0.0 }
    }

    pub fn entries(&self) -> &[(TermId, f64)] {
        &self.entries
    }

    pub fn max_tf(&self) -> f64 {
        self.max_tf
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Counts term occurrences of `doc` against a vocabulary built from the
/// training split. Out-of-vocabulary terms are dropped silently.
pub fn vectorize(doc: &Document, vocab: &Vocabulary) -> SparseVector {
    let mut counts: BTreeMap<TermId, f64> = BTreeMap::new();
    for token in &doc.tokens {
        if let Some(id) = vocab.id(token) {
            *counts.entry(id).or_insert(0.0) += 1.0;
        }
    }
    let max_tf = counts.values().fold(0.0, |m: f64, &v| m.max(v));
    SparseVector {
        entries: counts.into_iter().collect(),
        max_tf,
    }
}

/// Document indices of a train/test partition, each sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitIndices {
    pub train: Vec<usize>,
    pub test: Vec<usize>,
}

/// Draws `floor(fraction * n_c)` test documents from every category with a
/// seeded Fisher-Yates permutation (ChaCha8). The same corpus, fraction, and
/// seed always produce the same split. Every category must have at least two
/// documents.
pub fn stratified_split(
    corpus: &Corpus,
    fraction: f64,
    seed: u64,
) -> Result<SplitIndices, CoreError> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(CoreError::InvalidFraction(fraction));
    }
    let num_categories = corpus.num_categories() as usize;
    let mut by_category: Vec<Vec<usize>> = alloc::vec![Vec::new(); num_categories];
    for (idx, doc) in corpus.docs().iter().enumerate() {
        by_category[doc.label as usize].push(idx);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut train = Vec::new();
    let mut test = Vec::new();
    for (cat, mut indices) in by_category.into_iter().enumerate() {
        if indices.len() < 2 {
            return Err(CoreError::CategoryTooSmall {
                category: corpus.categories()[cat].clone(),
                docs: indices.len(),
            });
        }
        indices.shuffle(&mut rng);
        let test_count = (fraction * indices.len() as f64) as usize;
        test.extend_from_slice(&indices[..test_count]);
        train.extend_from_slice(&indices[test_count..]);
    }
    train.sort_unstable();
    test.sort_unstable();
    Ok(SplitIndices { train, test })
}
