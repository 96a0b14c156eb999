use std::fmt;

use crate::color::{ceil_div, rep, CyclicColor};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::signature::Signature;

/// A partition with one color in `Z/n` per nonzero row.
///
/// Rows are kept in the order given; any order with weakly decreasing
/// lengths is accepted. Rows of equal length may be permuted freely without
/// changing the class, see [`ColoredPartition::canonical`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPartition {
    modulus: usize,
    lengths: Vec<usize>,
    colors: Vec<usize>,
}

impl ColoredPartition {
    pub fn new(shape: Partition, colors: Vec<i64>, modulus: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Domain("color modulus must be positive".into()));
        }
        if colors.len() != shape.len() {
            return Err(Error::Domain(format!(
                "{} colors given for {} rows",
                colors.len(),
                shape.len()
            )));
        }
        Ok(Self {
            modulus,
            lengths: shape.parts().to_vec(),
            colors: colors.into_iter().map(|c| rep(c, modulus)).collect(),
        })
    }

    /// Builds from `(length, color)` rows; lengths must be weakly decreasing.
    pub fn from_rows(modulus: usize, rows: &[(usize, i64)]) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.0).collect())?;
        Self::new(shape, rows.iter().map(|r| r.1).collect(), modulus)
    }

    pub fn empty(modulus: usize) -> Self {
        Self {
            modulus: modulus.max(1),
            lengths: Vec::new(),
            colors: Vec::new(),
        }
    }

    pub(crate) fn from_parts_unchecked(
        modulus: usize,
        lengths: Vec<usize>,
        colors: Vec<usize>,
    ) -> Self {
        debug_assert!(lengths.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(lengths.iter().all(|&l| l > 0));
        Self {
            modulus,
            lengths,
            colors,
        }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.lengths.clone()).expect("stored shape is a partition")
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn size(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn color(&self, row: usize) -> CyclicColor {
        CyclicColor::new(self.colors[row] as i64, self.modulus).expect("modulus is positive")
    }

    /// Color of box `(i, j)`, both 1-based: `ε_i + [λ_i - j]`.
    pub fn box_color(&self, i: usize, j: usize) -> Result<CyclicColor> {
        if i == 0 || i > self.len() {
            return Err(Error::Index {
                what: "row",
                index: i,
                min: 1,
                max: self.len(),
            });
        }
        let len = self.lengths[i - 1];
        if j == 0 || j > len {
            return Err(Error::Index {
                what: "column",
                index: j,
                min: 1,
                max: len,
            });
        }
        Ok(self.color(i - 1) + (len - j) as i64)
    }

    /// Per-color box counts, closed form `Σ_i ceil((λ_i - rep(m - ε_i)) / n)`.
    pub fn signature(&self) -> Signature {
        let n = self.modulus;
        let counts = (0..n)
            .map(|m| {
                self.lengths
                    .iter()
                    .zip(&self.colors)
                    .map(|(&len, &eps)| {
                        let offset = rep(m as i64 - eps as i64, n) as i64;
                        ceil_div(len as i64 - offset, n as i64).max(0) as usize
                    })
                    .sum()
            })
            .collect();
        Signature::new(counts).expect("modulus is positive")
    }

    /// Per-color box counts by walking every box of the diagram.
    pub fn signature_by_boxes(&self) -> Signature {
        self.boxes_up_to_column(usize::MAX)
    }

    /// `s_k`: the signature of the first `k` columns.
    pub fn column_signature(&self, k: usize) -> Result<Signature> {
        if k == 0 {
            return Err(Error::Domain("column index must be positive".into()));
        }
        Ok(self.boxes_up_to_column(k))
    }

    fn boxes_up_to_column(&self, k: usize) -> Signature {
        let n = self.modulus;
        let mut sig = Signature::zero(n);
        for (&len, &eps) in self.lengths.iter().zip(&self.colors) {
            for j in 1..=len.min(k) {
                sig.bump(eps + (len - j) % n, 1);
            }
        }
        sig
    }

    /// Rows sorted by (length desc, color asc).
    pub fn canonical(&self) -> Self {
        let mut rows: Vec<(usize, usize)> = self
            .lengths
            .iter()
            .copied()
            .zip(self.colors.iter().copied())
            .collect();
        rows.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Self {
            modulus: self.modulus,
            lengths: rows.iter().map(|r| r.0).collect(),
            colors: rows.iter().map(|r| r.1).collect(),
        }
    }

    pub fn row_equivalent(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape())?;
        write!(f, "^(")?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
