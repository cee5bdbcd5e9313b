//! Validated domain types shared by every computation path.
//!
//! All indices are zero-based internally. File formats and error messages
//! that face users speak in 1-based line numbers; conversion happens at the
//! parsing boundary.

use crate::error::{Error, Result};

/// An ordered set of unique, non-empty category identifiers.
///
/// The position of a name in the set is the category index used by
/// [`AnnotationCounts`] and [`ProposedLabels`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategorySet {
    names: Vec<String>,
}

impl CategorySet {
    /// Build a category set, rejecting empty lists, empty names and
    /// duplicates.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::NoCategories);
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyCategoryName);
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateCategory(name.clone()));
            }
        }
        Ok(Self { names })
    }

    /// Number of categories `m`.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Index of `name`, if present.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Name at `index`. Panics if out of range.
    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    /// All names in index order.
    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// The n×m grid of per-item, per-category annotation tallies.
///
/// Entry `(i, j)` is the number of annotators that placed item `i` in
/// category `j`. Every row sums to the same annotator count `N`, with
/// `N >= 2` so that annotator pairs exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotationCounts {
    counts: Vec<u32>, // row-major n×m
    items: usize,
    categories: usize,
    annotators: u32,
}

impl AnnotationCounts {
    /// Build from a flat row-major grid with `categories` columns.
    ///
    /// The annotator count is inferred from the first row sum and every
    /// other row must match it.
    pub fn new(counts: Vec<u32>, categories: usize) -> Result<Self> {
        if categories == 0 {
            return Err(Error::NoCategories);
        }
        if counts.is_empty() {
            return Err(Error::EmptyDataset);
        }
        if counts.len() % categories != 0 {
            return Err(Error::DimensionMismatch {
                what: "grid entries per row",
                left: counts.len(),
                right: categories,
            });
        }
        let items = counts.len() / categories;
        let row_sum =
            |i: usize| -> u32 { counts[i * categories..(i + 1) * categories].iter().sum() };
        let annotators = row_sum(0);
        for i in 1..items {
            let found = row_sum(i);
            if found != annotators {
                return Err(Error::InconsistentAnnotatorCount {
                    item: i,
                    expected: annotators,
                    found,
                });
            }
        }
        if annotators < 2 {
            return Err(Error::InsufficientAnnotators { found: annotators });
        }
        Ok(Self {
            counts,
            items,
            categories,
            annotators,
        })
    }

    /// Build from nested rows.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyDataset);
        }
        let categories = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != categories {
                return Err(Error::DimensionMismatch {
                    what: "categories in row",
                    left: row.len(),
                    right: categories,
                });
            }
            let _ = i;
        }
        let mut counts = Vec::with_capacity(rows.len() * categories);
        for row in rows {
            counts.extend_from_slice(row);
        }
        Self::new(counts, categories)
    }

    /// Number of items `n`.
    pub fn items(&self) -> usize {
        self.items
    }

    /// Number of categories `m`.
    pub fn categories(&self) -> usize {
        self.categories
    }

    /// Annotators per item `N`.
    pub fn annotators(&self) -> u32 {
        self.annotators
    }

    /// Tally for item `i`, category `j`.
    pub fn count(&self, item: usize, category: usize) -> u32 {
        self.counts[item * self.categories + category]
    }

    /// Row `i` as a slice of length `m`.
    pub fn row(&self, item: usize) -> &[u32] {
        &self.counts[item * self.categories..(item + 1) * self.categories]
    }

    /// The whole grid, row-major.
    pub fn entries(&self) -> &[u32] {
        &self.counts
    }
}

/// The proposed label for each item, as a category index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProposedLabels {
    labels: Vec<usize>,
    categories: usize,
}

impl ProposedLabels {
    /// Build from per-item category indices, each within `0..categories`.
    pub fn new(labels: Vec<usize>, categories: usize) -> Result<Self> {
        if categories == 0 {
            return Err(Error::NoCategories);
        }
        if labels.is_empty() {
            return Err(Error::EmptyDataset);
        }
        for (item, &index) in labels.iter().enumerate() {
            if index >= categories {
                return Err(Error::CategoryOutOfRange {
                    item,
                    index,
                    categories,
                });
            }
        }
        Ok(Self { labels, categories })
    }

    /// Number of labeled items `n`.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of categories the labels were validated against.
    pub fn categories(&self) -> usize {
        self.categories
    }

    /// Label index of item `i`.
    pub fn label(&self, item: usize) -> usize {
        self.labels[item]
    }

    /// All label indices in item order.
    pub fn indices(&self) -> &[usize] {
        &self.labels
    }
}

/// Check that counts and labels describe the same dataset shape.
pub(crate) fn ensure_paired(counts: &AnnotationCounts, labels: &ProposedLabels) -> Result<()> {
    if counts.items() != labels.len() {
        return Err(Error::DimensionMismatch {
            what: "items",
            left: counts.items(),
            right: labels.len(),
        });
    }
    if counts.categories() != labels.categories() {
        return Err(Error::DimensionMismatch {
            what: "categories",
            left: counts.categories(),
            right: labels.categories(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn category_set_rejects_duplicates_and_empty_names() {
        assert_eq!(
            CategorySet::new(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateCategory("a".into())
        );
        assert_eq!(
            CategorySet::new(["a", ""]).unwrap_err(),
            Error::EmptyCategoryName
        );
        assert_eq!(
            CategorySet::new(Vec::<String>::new()).unwrap_err(),
            Error::NoCategories
        );
    }

    #[test]
    fn category_set_maps_names_to_indices() {
        let cats = CategorySet::new(["neg", "pos"]).unwrap();
        assert_eq!(cats.len(), 2);
        assert_eq!(cats.index_of("pos"), Some(1));
        assert_eq!(cats.index_of("missing"), None);
        assert_eq!(cats.name(0), "neg");
    }

    #[test]
    fn counts_infer_constant_annotator_count() {
        let counts = AnnotationCounts::from_rows(&[vec![3, 0], vec![1, 2]]).unwrap();
        assert_eq!(counts.items(), 2);
        assert_eq!(counts.categories(), 2);
        assert_eq!(counts.annotators(), 3);
        assert_eq!(counts.count(1, 1), 2);
        assert_eq!(counts.row(0), &[3, 0]);
    }

    #[test]
    fn counts_reject_inconsistent_row_sums() {
        let err = AnnotationCounts::from_rows(&[vec![2, 0], vec![1, 2]]).unwrap_err();
        assert_eq!(
            err,
            Error::InconsistentAnnotatorCount {
                item: 1,
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn counts_reject_fewer_than_two_annotators() {
        assert_eq!(
            AnnotationCounts::from_rows(&[vec![1, 0]]).unwrap_err(),
            Error::InsufficientAnnotators { found: 1 }
        );
        assert_eq!(
            AnnotationCounts::from_rows(&[vec![0, 0]]).unwrap_err(),
            Error::InsufficientAnnotators { found: 0 }
        );
    }

    #[test]
    fn counts_reject_empty_dataset() {
        assert_eq!(
            AnnotationCounts::new(Vec::new(), 2).unwrap_err(),
            Error::EmptyDataset
        );
        assert_eq!(
            AnnotationCounts::from_rows(&[]).unwrap_err(),
            Error::EmptyDataset
        );
    }

    #[test]
    fn labels_validate_range() {
        let labels = ProposedLabels::new(vec![0, 1, 0], 2).unwrap();
        assert_eq!(labels.len(), 3);
        assert_eq!(labels.label(1), 1);

        let err = ProposedLabels::new(vec![0, 2], 2).unwrap_err();
        assert_eq!(
            err,
            Error::CategoryOutOfRange {
                item: 1,
                index: 2,
                categories: 2
            }
        );
    }

    #[test]
    fn pairing_checks_both_dimensions() {
        let counts = AnnotationCounts::from_rows(&[vec![3, 0], vec![1, 2]]).unwrap();
        let short = ProposedLabels::new(vec![0], 2).unwrap();
        assert!(matches!(
            ensure_paired(&counts, &short),
            Err(Error::DimensionMismatch { what: "items", .. })
        ));
        let wrong_m = ProposedLabels::new(vec![0, 1], 3).unwrap();
        assert!(matches!(
            ensure_paired(&counts, &wrong_m),
            Err(Error::DimensionMismatch {
                what: "categories",
                ..
            })
        ));
    }
}
