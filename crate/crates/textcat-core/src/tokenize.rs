//! Tokenization: lowercase alphabetic runs with stopword removal.
//!
//! A token is a maximal run of alphabetic characters; punctuation and digit
//! runs never produce tokens. All tokens are lowercased before stopword
//! matching. Stemming is not applied.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

/// A set of stopwords, stored lowercase and matched against whole tokens.
#[derive(Debug, Clone, Default)]
pub struct StopwordSet {
    words: BTreeSet<String>,
}

impl StopwordSet {
    /// The empty set: no tokens are removed.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a set from terms, lowercasing each entry. Empty entries are
    /// ignored.
    pub fn from_terms<I, S>(terms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let words = terms
            .into_iter()
            .filter(|t| !t.as_ref().is_empty())
            .map(|t| t.as_ref().to_lowercase())
            .collect();
        Self { words }
    }

    pub fn contains(&self, term: &str) -> bool {
        self.words.contains(term)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Splits `raw_text` into maximal alphabetic runs, lowercases them, and drops
/// stopwords. The output may be empty.
///
/// Corpus-wide minimum-occurrence filtering is not applied here; it happens
/// when the vocabulary is built (see [`crate::corpus::Vocabulary::build`]),
/// because it needs global counts.
pub fn tokenize(raw_text: &str, stopwords: &StopwordSet) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for ch in raw_text.chars() {
        if ch.is_alphabetic() {
            for lc in ch.to_lowercase() {
                current.push(lc);
            }
        } else if !current.is_empty() {
            flush(&mut tokens, &mut current, stopwords);
        }
    }
    if !current.is_empty() {
        flush(&mut tokens, &mut current, stopwords);
    }
    tokens
}

fn flush(tokens: &mut Vec<String>, current: &mut String, stopwords: &StopwordSet) {
    let token = core::mem::take(current);
    if !stopwords.contains(&token) {
        tokens.push(token);
    }
}
