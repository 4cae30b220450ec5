//! Structured results for identity checks.
//!
//! Every identity verification in the crate compares two series coefficient
//! by coefficient and reports the offending words instead of returning a
//! bare boolean, so failures carry enough context to debug.

use crate::series::{Rational, Series, Word};

/// One coefficient on which two series disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientMismatch {
    pub word: Word,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Outcome of comparing two series for exact equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    /// Number of words on which either side has a non-zero coefficient.
    /// Words outside this set agree trivially (both zero), so the
    /// comparison is complete up to the truncation degree.
    pub words_checked: usize,
    pub mismatches: Vec<CoefficientMismatch>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Merges several sub-checks into one report.
    pub fn combine(reports: impl IntoIterator<Item = IdentityReport>) -> IdentityReport {
        let mut total = IdentityReport {
            words_checked: 0,
            mismatches: Vec::new(),
        };
        for r in reports {
            total.words_checked += r.words_checked;
            total.mismatches.extend(r.mismatches);
        }
        total
    }
}

/// Compares two series with the same alphabet and degree, word by word.
pub fn compare_series(lhs: &Series, rhs: &Series) -> IdentityReport {
    assert_eq!(lhs.k(), rhs.k(), "compared series must share an alphabet");
    assert_eq!(
        lhs.degree(),
        rhs.degree(),
        "compared series must share a truncation degree"
    );
    let mut words: Vec<&Word> = lhs.iter().map(|(w, _)| w).collect();
    words.extend(rhs.iter().map(|(w, _)| w));
    words.sort();
    words.dedup();
    let mut mismatches = Vec::new();
    for w in &words {
        let a = lhs.coefficient(w).expect("word within range of lhs");
        let b = rhs.coefficient(w).expect("word within range of rhs");
        if a != b {
            mismatches.push(CoefficientMismatch {
                word: (*w).clone(),
                lhs: a,
                rhs: b,
            });
        }
    }
    IdentityReport {
        words_checked: words.len(),
        mismatches,
    }
}
