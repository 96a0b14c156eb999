use std::fmt;

use crate::color::{rep, CyclicColor};
use crate::colored::ColoredPartition;
use crate::error::{Error, Result};

/// A colored partition with one integer mark per row, `μ_i <= λ_i`.
///
/// Nonpositive marks only matter through their residue mod `n`, so marks
/// are stored in the range `-n < μ_i <= λ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedColoredPartition {
    base: ColoredPartition,
    marks: Vec<i64>,
}

/// One row of a marked colored partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Row {
    pub length: usize,
    pub color: usize,
    pub mark: i64,
}

impl MarkedColoredPartition {
    pub fn new(base: ColoredPartition, marks: Vec<i64>) -> Result<Self> {
        if marks.len() != base.len() {
            return Err(Error::Domain(format!(
                "{} marks given for {} rows",
                marks.len(),
                base.len()
            )));
        }
        let n = base.modulus() as i64;
        let mut out = Vec::with_capacity(marks.len());
        for (row, (&mark, &len)) in marks.iter().zip(base.lengths()).enumerate() {
            if mark > len as i64 {
                return Err(Error::InvalidMarking {
                    row: row + 1,
                    mark,
                    length: len,
                });
            }
            out.push(fold_nonpositive(mark, n));
        }
        Ok(Self { base, marks: out })
    }

    /// Builds from `(length, color, mark)` rows; lengths must be weakly decreasing.
    pub fn from_rows(modulus: usize, rows: &[(usize, i64, i64)]) -> Result<Self> {
        let base = ColoredPartition::from_rows(
            modulus,
            &rows.iter().map(|r| (r.0, r.1)).collect::<Vec<_>>(),
        )?;
        Self::new(base, rows.iter().map(|r| r.2).collect())
    }

    /// The zero marking of a colored partition.
    pub fn unmarked(base: ColoredPartition) -> Self {
        let marks = vec![0; base.len()];
        Self { base, marks }
    }

    pub fn empty(modulus: usize) -> Self {
        Self::unmarked(ColoredPartition::empty(modulus))
    }

    pub(crate) fn from_raw(base: ColoredPartition, marks: Vec<i64>) -> Self {
        let n = base.modulus() as i64;
        debug_assert_eq!(base.len(), marks.len());
        let marks = marks.into_iter().map(|m| fold_nonpositive(m, n)).collect();
        Self { base, marks }
    }

    pub fn base(&self) -> &ColoredPartition {
        &self.base
    }

    pub fn modulus(&self) -> usize {
        self.base.modulus()
    }

    pub fn lengths(&self) -> &[usize] {
        self.base.lengths()
    }

    pub fn colors(&self) -> &[usize] {
        self.base.colors()
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = Row> + '_ {
        self.base
            .lengths()
            .iter()
            .zip(self.base.colors())
            .zip(&self.marks)
            .map(|((&length, &color), &mark)| Row {
                length,
                color,
                mark,
            })
    }

    /// `ν_i = λ_i - μ_i` (0-based row).
    pub fn nu(&self, row: usize) -> i64 {
        self.base.lengths()[row] as i64 - self.marks[row]
    }

    pub fn nus(&self) -> Vec<i64> {
        (0..self.len()).map(|i| self.nu(i)).collect()
    }

    /// `ε_i + [ν_i]`, the color of the box just left of the mark in row `row`.
    pub fn row_class(&self, row: usize) -> usize {
        rep(self.base.colors()[row] as i64 + self.nu(row), self.modulus())
    }

    /// `|μ|` over positive marks.
    pub fn positive_mark_total(&self) -> i64 {
        self.marks.iter().filter(|&&m| m > 0).sum()
    }

    /// Rows sorted by (length desc, color asc, mark desc).
    pub fn canonical_form(&self) -> Self {
        let mut rows: Vec<Row> = self.rows().collect();
        rows.sort_by(|a, b| {
            b.length
                .cmp(&a.length)
                .then(a.color.cmp(&b.color))
                .then(b.mark.cmp(&a.mark))
        });
        self.with_rows(&rows)
    }

    pub fn row_equivalent(&self, other: &Self) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    pub(crate) fn with_rows(&self, rows: &[Row]) -> Self {
        Self {
            base: ColoredPartition::from_parts_unchecked(
                self.modulus(),
                rows.iter().map(|r| r.length).collect(),
                rows.iter().map(|r| r.color).collect(),
            ),
            marks: rows.iter().map(|r| r.mark).collect(),
        }
    }

    pub(crate) fn with_marks(&self, marks: Vec<i64>) -> Self {
        Self::from_raw(self.base.clone(), marks)
    }

    /// Evaluates every predicate of the marking definition with `k = n`.
    pub fn classify(&self) -> MarkingClassification {
        let k = self.modulus() as i64;
        let l = self.len();
        let nu = self.nus();
        let mu = &self.marks;

        let is_bipartition = mu.iter().all(|&m| m >= 0)
            && (1..l).all(|i| mu[i] <= mu[i - 1] && nu[i] <= nu[i - 1]);

        let lower_ok = mu.iter().all(|&m| -k < m);
        let pair_ok = |i: usize, j: usize| mu[j] < mu[i] + k && nu[j] < nu[i] + k;
        let is_k_bipartition = lower_ok && (0..l).all(|i| (i + 1..l).all(|j| pair_ok(i, j)));

        let classes: Vec<usize> = (0..l).map(|i| self.row_class(i)).collect();
        let single_class = classes.windows(2).all(|w| w[0] == w[1]);
        let is_colored_k_bipartition = is_k_bipartition && single_class;
        let is_generalized_k_bipartition = lower_ok
            && (0..l).all(|i| (i + 1..l).all(|j| classes[i] != classes[j] || pair_ok(i, j)));

        let positive: Vec<usize> = (0..l)
            .filter(|&i| mu[i] >= 1)
            .map(|i| classes[i])
            .collect();
        let class_color = if positive.is_empty() {
            match classes.first() {
                Some(&c) if single_class => Some(c),
                _ => None,
            }
        } else if positive.windows(2).all(|w| w[0] == w[1]) {
            Some(positive[0])
        } else {
            None
        };

        MarkingClassification {
            is_bipartition,
            is_k_bipartition,
            is_colored_k_bipartition,
            is_generalized_k_bipartition,
            class_color: class_color.map(|c| {
                CyclicColor::new(c as i64, self.modulus()).expect("modulus is positive")
            }),
        }
    }

    /// `true` iff this is a colored `n`-bipartition.
    pub fn is_colored_bipartition(&self) -> bool {
        self.classify().is_colored_k_bipartition
    }
}

/// Maps `m <= -n` to the representative of its residue class in `(-n, 0]`.
fn fold_nonpositive(mark: i64, n: i64) -> i64 {
    if mark > -n {
        mark
    } else {
        let r = mark.rem_euclid(n);
        if r == 0 {
            0
        } else {
            r - n
        }
    }
}

/// Row equivalence aware comparison helper.
pub fn canonical_form(mcp: &MarkedColoredPartition) -> MarkedColoredPartition {
    mcp.canonical_form()
}

pub fn classify_marking(mcp: &MarkedColoredPartition) -> MarkingClassification {
    mcp.classify()
}

/// Result of evaluating the marking predicates with `k = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarkingClassification {
    pub is_bipartition: bool,
    pub is_k_bipartition: bool,
    pub is_colored_k_bipartition: bool,
    pub is_generalized_k_bipartition: bool,
    /// Shared `ε_i + [ν_i]` of the positively marked rows. When no row is
    /// positively marked this is the common class of all rows, if any.
    pub class_color: Option<CyclicColor>,
}

impl fmt::Display for MarkedColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; mu=(", self.base)?;
        for (i, m) in self.marks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn six_row_marking() -> MarkedColoredPartition {
        MarkedColoredPartition::from_rows(
            3,
            &[(5, 2, 1), (5, 1, 3), (3, 1, 1), (3, 0, 0), (2, 0, -1), (1, 0, 1)],
        )
        .unwrap()
    }

    #[test]
    fn rejects_overlong_marks() {
        let err = MarkedColoredPartition::from_rows(2, &[(2, 0, 3)]).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidMarking {
                row: 1,
                mark: 3,
                length: 2
            }
        );
    }

    #[test]
    fn folds_deep_nonpositive_marks() {
        let m = MarkedColoredPartition::from_rows(3, &[(2, 0, -4), (1, 0, -3)]).unwrap();
        assert_eq!(m.marks(), &[-1, 0]);
        let one = MarkedColoredPartition::from_rows(1, &[(2, 0, -5)]).unwrap();
        assert_eq!(one.marks(), &[0]);
    }

    #[test]
    fn canonical_form_examples() {
        let a = MarkedColoredPartition::from_rows(2, &[(1, 1, 1), (1, 0, 1)]).unwrap();
        let c = a.canonical_form();
        assert_eq!(c.colors(), &[0, 1]);
        assert_eq!(c.marks(), &[1, 1]);
        assert_eq!(c.canonical_form(), c);

        let b = MarkedColoredPartition::from_rows(2, &[(2, 1, 0), (2, 0, 2)]).unwrap();
        let c = b.canonical_form();
        assert_eq!(c.colors(), &[0, 1]);
        assert_eq!(c.marks(), &[2, 0]);
    }

    #[test]
    fn six_row_marking_classification() {
        let c = six_row_marking().classify();
        assert!(c.is_colored_k_bipartition);
        assert!(c.is_k_bipartition);
        assert!(c.is_generalized_k_bipartition);
        assert!(!c.is_bipartition);
        assert_eq!(c.class_color.map(|c| c.rep()), Some(0));
    }

    #[test]
    fn zero_marking_is_bipartition() {
        let m = MarkedColoredPartition::from_rows(3, &[(4, 1, 0), (2, 2, 0), (1, 0, 0)]).unwrap();
        assert!(m.classify().is_bipartition);
        assert!(m.classify().is_k_bipartition);
    }

    #[test]
    fn non_generalized_example() {
        let m = MarkedColoredPartition::from_rows(2, &[(1, 0, 1), (1, 0, -1), (1, 1, 0), (1, 1, 0)])
            .unwrap();
        assert_eq!(m.nus(), vec![0, 2, 1, 1]);
        let c = m.classify();
        assert!(!c.is_generalized_k_bipartition);
        assert!(!c.is_colored_k_bipartition);
        assert_eq!(c.class_color.map(|c| c.rep()), Some(0));
    }

    #[test]
    fn mixed_positive_classes_have_no_class_color() {
        let m = MarkedColoredPartition::from_rows(2, &[(2, 0, 2), (1, 0, 1)]).unwrap();
        // classes: 0 + [0] = 0, 0 + [0] = 0
        assert!(m.classify().class_color.is_some());
        let m = MarkedColoredPartition::from_rows(2, &[(2, 0, 2), (1, 1, 1)]).unwrap();
        assert_eq!(m.classify().class_color, None);
        assert!(m.classify().is_generalized_k_bipartition);
    }
}
