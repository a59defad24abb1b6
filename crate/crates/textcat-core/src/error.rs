//! Error type shared by the core operations.

use alloc::string::String;
use core::fmt;

/// Errors reported by corpus construction, statistics, weighting,
/// classification, and evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// Corpus contains no documents.
    EmptyCorpus,
    /// A document label does not refer to a registered category.
    UnknownCategory { label: u32, num_categories: u32 },
    /// Stratified split fraction must lie strictly between 0 and 1.
    InvalidFraction(f64),
    /// Stratified split needs at least two documents in every category.
    CategoryTooSmall { category: String, docs: usize },
    /// A vector refers to a term id outside the vocabulary.
    TermOutOfRange { term: u32, vocab_size: u32 },
    /// Category frequency of zero contradicts the term-statistics invariant.
    ZeroCategoryFrequency { term: u32 },
    /// A supervised scheme was used without a positive-category binding.
    MissingPositiveCategory { scheme: &'static str },
    /// Classifier training received no vectors.
    EmptyTrainingSet,
    /// Centroid training found a category with no training vectors.
    EmptyCategory { category: u32 },
    /// SVM training requires both classes to be present.
    SingleClassTraining,
    /// kNN requires k >= 1.
    InvalidNeighborCount,
    /// SVM penalty parameter must be positive.
    InvalidPenalty(f64),
    /// Evaluation received no prediction records.
    EmptyRecords,
    /// McNemar's test requires both runs to cover the same documents.
    DocumentMismatch(String),
    /// Statistics tables have inconsistent shapes or violate an invariant.
    InconsistentStats(String),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::EmptyCorpus => write!(f, "no documents"),
            CoreError::UnknownCategory { label, num_categories } => {
                write!(f, "label {label} out of range (corpus has {num_categories} categories)")
            }
            CoreError::InvalidFraction(frac) => {
                write!(f, "split fraction {frac} not in (0, 1)")
            }
            CoreError::CategoryTooSmall { category, docs } => {
                write!(f, "category \"{category}\" has {docs} document(s); stratified split needs at least 2")
            }
            CoreError::TermOutOfRange { term, vocab_size } => {
                write!(f, "term id {term} out of range for vocabulary of size {vocab_size}")
            }
            CoreError::ZeroCategoryFrequency { term } => {
                write!(f, "term id {term} has category frequency 0")
            }
            CoreError::MissingPositiveCategory { scheme } => {
                write!(f, "scheme \"{scheme}\" is supervised and needs a positive-category binding")
            }
            CoreError::EmptyTrainingSet => write!(f, "empty training set"),
            CoreError::EmptyCategory { category } => {
                write!(f, "category id {category} has no training vectors")
            }
            CoreError::SingleClassTraining => {
                write!(f, "SVM training requires both positive and negative examples")
            }
            CoreError::InvalidNeighborCount => write!(f, "kNN requires k >= 1"),
            CoreError::InvalidPenalty(c) => write!(f, "SVM penalty C = {c} must be positive"),
            CoreError::EmptyRecords => write!(f, "no prediction records to score"),
            CoreError::DocumentMismatch(msg) => write!(f, "prediction records mismatch: {msg}"),
            CoreError::InconsistentStats(msg) => write!(f, "inconsistent statistics: {msg}"),
        }
    }
}

impl core::error::Error for CoreError {}
