//! Core algorithms for text categorization with term weighting schemes.
//!
//! This crate holds the pure, IO-free half of the toolkit:
//!
//! - [`tokenize`]: text to lowercase alphabetic tokens, stopword removal
//! - [`corpus`]: documents, vocabularies, sparse term-frequency vectors,
//!   deterministic stratified splits
//! - [`stats`]: per-term document/category frequencies and the binary-task
//!   contingency table
//! - [`weighting`]: the eleven weighting schemes (tf, idf, tf.idf, tf.icf,
//!   tf.rf, prob-based, tf.logOR, tf.chi2, tf.gr, tf.ig, icf-based) with L2
//!   normalization
//! - [`classify`]: cosine kNN, centroid, and linear SVM classifiers
//! - [`eval`]: precision/recall/F1, macro/micro averaging, McNemar's test
//!
//! Everything here is deterministic: seeded randomness goes through ChaCha8,
//! float math goes through `libm`, and map iteration orders are fixed. The
//! crate is `no_std` (with `alloc`); file formats, configuration, and the CLI
//! live in the companion `textcat` crate.
#![no_std]

extern crate alloc;

pub mod classify;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod stats;
pub mod tokenize;
pub mod weighting;

pub use error::CoreError;
