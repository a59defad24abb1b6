//! Per-term training statistics (df, cf, per-category df) and the a/b/c/d
//! contingency table of a binary task.
//!
//! Everything is computed from the training split only and by document
//! presence: a term "occurs" in a document iff its raw tf >= 1.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::corpus::{CategoryId, CorpusStats, SparseVector, TermId};
use crate::error::CoreError;

/// Per-term document frequency, category frequency, and per-category
/// document frequency over the training split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermStats {
    num_categories: u32,
    df: Vec<u32>,
    cf: Vec<u32>,
    /// Row-major `|V| x |C|`: documents of category `c` containing term `t`.
    per_category_df: Vec<u32>,
}

impl TermStats {
    /// Assembles a table from raw columns, checking the invariants:
    /// `df = sum of per-category df`, `cf = number of nonzero per-category
    /// entries`, and `1 <= cf` for every term that occurs at all.
    pub fn from_parts(
        num_categories: u32,
        df: Vec<u32>,
        cf: Vec<u32>,
        per_category_df: Vec<u32>,
    ) -> Result<Self, CoreError> {
        let vocab_size = df.len();
        if cf.len() != vocab_size || per_category_df.len() != vocab_size * num_categories as usize {
            return Err(CoreError::InconsistentStats(format!(
                "shape mismatch: |V|={} cf={} per_category={} |C|={}",
                vocab_size,
                cf.len(),
                per_category_df.len(),
                num_categories
            )));
        }
        for term in 0..vocab_size {
            let row = &per_category_df[term * num_categories as usize..][..num_categories as usize];
            let sum: u32 = row.iter().sum();
            let nonzero = row.iter().filter(|&&n| n > 0).count() as u32;
            if sum != df[term] || nonzero != cf[term] {
                return Err(CoreError::InconsistentStats(format!(
                    "term {term}: df={} cf={} but per-category sum={sum} nonzero={nonzero}",
                    df[term], cf[term]
                )));
            }
        }
        Ok(Self { num_categories, df, cf, per_category_df })
    }

    pub fn vocab_size(&self) -> u32 {
        self.df.len() as u32
    }

    pub fn num_categories(&self) -> u32 {
        self.num_categories
    }

    /// `#Tr(t)`: training documents containing the term.
    pub fn df(&self, term: TermId) -> u32 {
        self.df[term as usize]
    }

    /// Categories with at least one training document containing the term.
    pub fn cf(&self, term: TermId) -> u32 {
        self.cf[term as usize]
    }

    pub fn per_category_df(&self, term: TermId, category: CategoryId) -> u32 {
        self.per_category_df[term as usize * self.num_categories as usize + category as usize]
    }

    pub fn df_column(&self) -> &[u32] {
        &self.df
    }

    pub fn cf_column(&self) -> &[u32] {
        &self.cf
    }

    pub fn per_category_row(&self, term: TermId) -> &[u32] {
        &self.per_category_df[term as usize * self.num_categories as usize..][..self.num_categories as usize]
    }
}

/// One pass over the training vectors: presence counts per term and per
/// (term, category). Labels must be valid category ids and term ids must lie
/// inside the vocabulary recorded in `stats`.
pub fn build_term_stats(
    vectors: &[SparseVector],
    labels: &[CategoryId],
    stats: &CorpusStats,
) -> Result<TermStats, CoreError> {
    let vocab_size = stats.vocab_size as usize;
    let num_categories = stats.num_categories();
    let mut per_category_df = vec![0u32; vocab_size * num_categories as usize];
    for (vector, &label) in vectors.iter().zip(labels) {
        if label >= num_categories {
            return Err(CoreError::UnknownCategory { label, num_categories });
        }
        for &(term, tf) in vector.entries() {
            if term as usize >= vocab_size {
                return Err(CoreError::TermOutOfRange { term, vocab_size: vocab_size as u32 });
            }
            debug_assert!(tf > 0.0);
            per_category_df[term as usize * num_categories as usize + label as usize] += 1;
        }
    }
    let mut df = vec![0u32; vocab_size];
    let mut cf = vec![0u32; vocab_size];
    for term in 0..vocab_size {
        let row = &per_category_df[term * num_categories as usize..][..num_categories as usize];
        df[term] = row.iter().sum();
        cf[term] = row.iter().filter(|&&n| n > 0).count() as u32;
    }
    Ok(TermStats { num_categories, df, cf, per_category_df })
}

/// The four cells of the binary-task contingency table for one
/// (term, positive category) pair:
///
/// - `a`: positive-category documents containing the term
/// - `b`: positive-category documents not containing the term
/// - `c`: negative documents containing the term
/// - `d`: negative documents not containing the term
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ContingencyTable {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl ContingencyTable {
    pub fn total(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }
}

/// Derives the contingency table for `term` with `positive` as the positive
/// category; all remaining categories form the negative category. Zeros are
/// permitted in any cell.
pub fn contingency(
    term: TermId,
    positive: CategoryId,
    term_stats: &TermStats,
    corpus_stats: &CorpusStats,
) -> ContingencyTable {
    let a = term_stats.per_category_df(term, positive);
    let df = term_stats.df(term);
    let c = df - a;
    let positive_docs = corpus_stats.docs_per_category[positive as usize];
    let b = positive_docs - a;
    let d = corpus_stats.num_train_docs - a - b - c;
    ContingencyTable { a, b, c, d }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{vectorize, Document, Vocabulary};
    use alloc::string::ToString;

    fn toy() -> (Vec<SparseVector>, Vec<CategoryId>, CorpusStats, Vocabulary) {
        // 3 categories, term "shared" in cat0 and cat1, "only0" in cat0.
        let raw: &[(&str, CategoryId, &[&str])] = &[
            ("d0", 0, &["shared", "only0", "only0"]),
            ("d1", 0, &["shared"]),
            ("d2", 1, &["shared", "other"]),
            ("d3", 2, &["other"]),
        ];
        let docs: Vec<Document> = raw
            .iter()
            .map(|(id, label, tokens)| Document {
                id: id.to_string(),
                label: *label,
                tokens: tokens.iter().map(|t| t.to_string()).collect(),
            })
            .collect();
        let vocab = Vocabulary::build(docs.iter(), 1);
        let vectors: Vec<SparseVector> = docs.iter().map(|d| vectorize(d, &vocab)).collect();
        let labels: Vec<CategoryId> = docs.iter().map(|d| d.label).collect();
        let stats = CorpusStats::from_training(&labels, 3, vocab.len() as u32).unwrap();
        (vectors, labels, stats, vocab)
    }

    #[test]
    fn df_and_cf_count_presence_not_magnitude() {
        let (vectors, labels, stats, vocab) = toy();
        let ts = build_term_stats(&vectors, &labels, &stats).unwrap();
        let shared = vocab.id("shared").unwrap();
        let only0 = vocab.id("only0").unwrap();
        assert_eq!(ts.df(shared), 3);
        assert_eq!(ts.cf(shared), 2);
        // "only0" occurs twice in one document: df counts documents.
        assert_eq!(ts.df(only0), 1);
        assert_eq!(ts.cf(only0), 1);
    }

    #[test]
    fn term_in_every_category_saturates_cf() {
        let (mut vectors, mut labels, _, vocab) = toy();
        let other = vocab.id("other").unwrap();
        vectors.push(SparseVector::from_sorted(alloc::vec![(other, 1.0)], 1.0));
        labels.push(0);
        let stats = CorpusStats::from_training(&labels, 3, vocab.len() as u32).unwrap();
        let ts = build_term_stats(&vectors, &labels, &stats).unwrap();
        assert_eq!(ts.cf(other), 3);
    }

    #[test]
    fn rejects_term_outside_vocabulary() {
        let (mut vectors, labels, stats, vocab) = toy();
        vectors[0] = SparseVector::from_sorted(alloc::vec![(vocab.len() as u32 + 5, 1.0)], 1.0);
        let err = build_term_stats(&vectors, &labels, &stats).unwrap_err();
        assert!(matches!(err, CoreError::TermOutOfRange { .. }));
    }

    #[test]
    fn contingency_cells_from_stats() {
        // df=15 overall, 10 in the positive category of 30 docs, |Tr|=100.
        let ts = TermStats {
            num_categories: 2,
            df: alloc::vec![15],
            cf: alloc::vec![2],
            per_category_df: alloc::vec![10, 5],
        };
        let cs = CorpusStats {
            num_train_docs: 100,
            vocab_size: 1,
            docs_per_category: alloc::vec![30, 70],
        };
        let t = contingency(0, 0, &ts, &cs);
        assert_eq!(t, ContingencyTable { a: 10, b: 20, c: 5, d: 65 });
        assert_eq!(t.total(), 100);
    }

    #[test]
    fn contingency_term_absent_from_positive() {
        let ts = TermStats {
            num_categories: 2,
            df: alloc::vec![4],
            cf: alloc::vec![1],
            per_category_df: alloc::vec![0, 4],
        };
        let cs = CorpusStats {
            num_train_docs: 10,
            vocab_size: 1,
            docs_per_category: alloc::vec![3, 7],
        };
        let t = contingency(0, 0, &ts, &cs);
        assert_eq!(t, ContingencyTable { a: 0, b: 3, c: 4, d: 3 });
    }

    #[test]
    fn per_term_a_sums_to_df_across_positive_choices() {
        let (vectors, labels, stats, _) = toy();
        let ts = build_term_stats(&vectors, &labels, &stats).unwrap();
        for term in 0..ts.vocab_size() {
            let total_a: u32 = (0..stats.num_categories())
                .map(|cat| contingency(term, cat, &ts, &stats).a)
                .sum();
            assert_eq!(total_a, ts.df(term));
            for cat in 0..stats.num_categories() {
                assert_eq!(contingency(term, cat, &ts, &stats).total(), stats.num_train_docs);
            }
        }
    }

    #[test]
    fn from_parts_validates_invariants() {
        assert!(TermStats::from_parts(2, alloc::vec![2], alloc::vec![1], alloc::vec![1, 1]).is_err());
        assert!(TermStats::from_parts(2, alloc::vec![2], alloc::vec![2], alloc::vec![1, 1]).is_ok());
        assert!(TermStats::from_parts(2, alloc::vec![3], alloc::vec![2], alloc::vec![1, 1]).is_err());
    }
}
