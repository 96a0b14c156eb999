//! JSON documents read and written by the command line.

use colored_quiver::oracle::{
    format_rational, parse_rational, BlockNilpotent, ColoredSpace, ColoredVector, Matrix, Rational,
};
use colored_quiver::{CyclicColor, MarkedColoredPartition, Signature};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDocument {
    pub length: usize,
    pub color: i64,
    pub mark: i64,
}

/// A marked colored partition, optionally with a class color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelDocument {
    pub n: usize,
    pub rows: Vec<RowDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_color: Option<usize>,
}

impl LabelDocument {
    pub fn from_marking(mcp: &MarkedColoredPartition, class_color: Option<CyclicColor>) -> Self {
        Self {
            n: mcp.modulus(),
            rows: mcp
                .rows()
                .map(|r| RowDocument {
                    length: r.length,
                    color: r.color as i64,
                    mark: r.mark,
                })
                .collect(),
            class_color: class_color.map(CyclicColor::rep),
        }
    }

    pub fn to_marking(&self) -> colored_quiver::Result<MarkedColoredPartition> {
        let rows: Vec<_> = self.rows.iter().map(|r| (r.length, r.color, r.mark)).collect();
        MarkedColoredPartition::from_rows(self.n, &rows)
    }

    pub fn class(&self) -> colored_quiver::Result<Option<CyclicColor>> {
        self.class_color
            .map(|m| CyclicColor::new(m as i64, self.n))
            .transpose()
    }

    /// Rows sorted by (length desc, color asc, mark desc).
    pub fn canonical(&self) -> colored_quiver::Result<Self> {
        let class = self.class()?;
        Ok(Self::from_marking(&self.to_marking()?.canonical_form(), class))
    }
}

/// A matrix entry: an integer or a `"p/q"` string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn value(&self) -> Result<Rational, String> {
        match self {
            Entry::Int(v) => Ok(Rational::from_integer((*v).into())),
            Entry::Text(s) => parse_rational(s).ok_or_else(|| format!("bad matrix entry {s:?}")),
        }
    }

    fn from_value(r: &Rational) -> Self {
        let text = format_rational(r);
        text.parse().map(Entry::Int).unwrap_or(Entry::Text(text))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VectorDocument {
    pub color: i64,
    pub coords: Vec<Entry>,
}

/// A colored nilpotent map by blocks `V_i -> V_{i+1}`, and an optional
/// colored vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub n: usize,
    pub dims: Vec<usize>,
    pub blocks: Vec<Vec<Vec<Entry>>>,
    #[serde(default)]
    pub vector: Option<VectorDocument>,
}

impl MatrixDocument {
    pub fn from_pair(v: &ColoredVector<Rational>, x: &BlockNilpotent<Rational>) -> Self {
        let space = x.space();
        Self {
            n: space.modulus(),
            dims: space.dims().counts().to_vec(),
            blocks: x
                .blocks()
                .iter()
                .map(|b| {
                    (0..b.rows())
                        .map(|r| b.row(r).iter().map(Entry::from_value).collect())
                        .collect()
                })
                .collect(),
            vector: v.color().map(|c| VectorDocument {
                color: c.rep() as i64,
                coords: v.coords().iter().map(Entry::from_value).collect(),
            }),
        }
    }

    pub fn to_pair(&self) -> Result<(ColoredVector<Rational>, BlockNilpotent<Rational>), String> {
        let dims = Signature::new(self.dims.clone()).map_err(|e| e.to_string())?;
        if dims.modulus() != self.n {
            return Err(format!("expected {} dims, got {}", self.n, self.dims.len()));
        }
        let space = ColoredSpace::new(dims);
        let blocks = self
            .blocks
            .iter()
            .enumerate()
            .map(|(i, rows)| {
                let cols = self.dims[i];
                let values = rows
                    .iter()
                    .map(|row| row.iter().map(Entry::value).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                Matrix::from_rows(values, cols)
                    .ok_or_else(|| format!("block {i} rows must have {cols} entries"))
            })
            .collect::<Result<Vec<_>, String>>()?;
        let x = BlockNilpotent::new(space.clone(), blocks).map_err(|e| e.to_string())?;
        let v = match &self.vector {
            None => ColoredVector::zero(),
            Some(doc) => {
                let color = CyclicColor::new(doc.color, self.n).map_err(|e| e.to_string())?;
                let coords = doc
                    .coords
                    .iter()
                    .map(Entry::value)
                    .collect::<Result<Vec<_>, _>>()?;
                ColoredVector::new(&space, color, coords).map_err(|e| e.to_string())?
            }
        };
        Ok((v, x))
    }
}
