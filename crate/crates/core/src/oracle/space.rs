use rand::Rng;

use super::field::Field;
use super::matrix::Matrix;
use crate::color::CyclicColor;
use crate::error::{Error, Result};
use crate::signature::Signature;

/// A vector space graded by `Z/n`, with coordinates ordered by color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredSpace {
    dims: Signature,
    offsets: Vec<usize>,
}

impl ColoredSpace {
    pub fn new(dims: Signature) -> Self {
        let mut offsets = Vec::with_capacity(dims.modulus() + 1);
        let mut acc = 0;
        for &d in dims.counts() {
            offsets.push(acc);
            acc += d;
        }
        offsets.push(acc);
        Self { dims, offsets }
    }

    pub fn modulus(&self) -> usize {
        self.dims.modulus()
    }

    pub fn dims(&self) -> &Signature {
        &self.dims
    }

    pub fn dim(&self, color: usize) -> usize {
        self.dims.get(color)
    }

    pub fn total(&self) -> usize {
        self.dims.size()
    }

    /// First full coordinate belonging to `color`.
    pub fn offset(&self, color: usize) -> usize {
        self.offsets[color]
    }

    pub fn color_of(&self, index: usize) -> usize {
        (0..self.modulus())
            .find(|&c| index < self.offsets[c + 1])
            .expect("coordinate in range")
    }

    /// `dim K = Σ (dim V_i)^2`.
    pub fn group_dimension(&self) -> usize {
        self.dims.sum_of_squares()
    }

    fn next(&self, color: usize) -> usize {
        (color + 1) % self.modulus()
    }
}

/// A vector lying in a single graded piece, or zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ColoredVector<F> {
    color: Option<CyclicColor>,
    coords: Vec<F>,
}

impl<F: Field> ColoredVector<F> {
    pub fn zero() -> Self {
        Self {
            color: None,
            coords: Vec::new(),
        }
    }

    /// A vector of `V_color`; an all-zero coordinate list yields the zero vector.
    pub fn new(space: &ColoredSpace, color: CyclicColor, coords: Vec<F>) -> Result<Self> {
        if color.modulus() != space.modulus() {
            return Err(Error::Domain("vector color has the wrong modulus".into()));
        }
        if coords.len() != space.dim(color.rep()) {
            return Err(Error::Domain(format!(
                "vector of color {} needs {} coordinates, got {}",
                color,
                space.dim(color.rep()),
                coords.len()
            )));
        }
        if coords.iter().all(F::is_zero) {
            return Ok(Self::zero());
        }
        Ok(Self {
            color: Some(color),
            coords,
        })
    }

    /// Reads a full coordinate vector; fails unless it lies in one `V_i`.
    pub fn from_full(space: &ColoredSpace, full: &[F]) -> Result<Self> {
        let mut color = None;
        for (i, x) in full.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let c = space.color_of(i);
            match color {
                None => color = Some(c),
                Some(prev) if prev != c => {
                    return Err(Error::Domain("vector is not colored".into()));
                }
                _ => {}
            }
        }
        match color {
            None => Ok(Self::zero()),
            Some(c) => {
                let start = space.offset(c);
                Ok(Self {
                    color: Some(CyclicColor::new(c as i64, space.modulus())?),
                    coords: full[start..start + space.dim(c)].to_vec(),
                })
            }
        }
    }

    pub fn color(&self) -> Option<CyclicColor> {
        self.color
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.color.is_none()
    }

    pub fn to_full(&self, space: &ColoredSpace) -> Vec<F> {
        let mut full = vec![F::zero(); space.total()];
        if let Some(c) = self.color {
            let start = space.offset(c.rep());
            full[start..start + self.coords.len()].clone_from_slice(&self.coords);
        }
        full
    }
}

/// A colored nilpotent endomorphism, stored as its maps `V_i -> V_{i+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockNilpotent<F> {
    space: ColoredSpace,
    blocks: Vec<Matrix<F>>,
}

impl<F: Field> BlockNilpotent<F> {
    /// Block `i` is a `dims[i+1] x dims[i]` matrix. Fails on shape mismatch or
    /// if the assembled map is not nilpotent.
    pub fn new(space: ColoredSpace, blocks: Vec<Matrix<F>>) -> Result<Self> {
        let x = Self::unchecked(space, blocks)?;
        if !x.assemble().pow(x.space.total()).is_zero() {
            return Err(Error::NotNilpotent);
        }
        Ok(x)
    }

    /// Checks shapes only.
    pub fn unchecked(space: ColoredSpace, blocks: Vec<Matrix<F>>) -> Result<Self> {
        let n = space.modulus();
        if blocks.len() != n {
            return Err(Error::Domain(format!("expected {n} blocks, got {}", blocks.len())));
        }
        for (i, b) in blocks.iter().enumerate() {
            let want = (space.dim(space.next(i)), space.dim(i));
            if (b.rows(), b.cols()) != want {
                return Err(Error::Domain(format!(
                    "block {i} should be {}x{}, got {}x{}",
                    want.0,
                    want.1,
                    b.rows(),
                    b.cols()
                )));
            }
        }
        Ok(Self { space, blocks })
    }

    pub fn zero(space: ColoredSpace) -> Self {
        let blocks = (0..space.modulus())
            .map(|i| Matrix::zeros(space.dim(space.next(i)), space.dim(i)))
            .collect();
        Self { space, blocks }
    }

    pub fn space(&self) -> &ColoredSpace {
        &self.space
    }

    pub fn blocks(&self) -> &[Matrix<F>] {
        &self.blocks
    }

    pub fn is_nilpotent(&self) -> bool {
        self.assemble().pow(self.space.total()).is_zero()
    }

    /// The endomorphism of `V` in full coordinates.
    pub fn assemble(&self) -> Matrix<F> {
        let total = self.space.total();
        let mut m = Matrix::zeros(total, total);
        for (i, b) in self.blocks.iter().enumerate() {
            m.set_block(self.space.offset(self.space.next(i)), self.space.offset(i), b);
        }
        m
    }
}

/// An element of `K = Π GL(V_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement<F> {
    blocks: Vec<Matrix<F>>,
    inverses: Vec<Matrix<F>>,
}

impl<F: Field> GroupElement<F> {
    pub fn new(space: &ColoredSpace, blocks: Vec<Matrix<F>>) -> Result<Self> {
        if blocks.len() != space.modulus() {
            return Err(Error::Domain("one block per color is required".into()));
        }
        let mut inverses = Vec::with_capacity(blocks.len());
        for (i, b) in blocks.iter().enumerate() {
            if b.rows() != space.dim(i) || b.cols() != space.dim(i) {
                return Err(Error::Domain(format!("block {i} has the wrong size")));
            }
            inverses.push(
                b.inverse()
                    .ok_or_else(|| Error::Domain(format!("block {i} is singular")))?,
            );
        }
        Ok(Self { blocks, inverses })
    }

    /// A random element with small integer entries.
    pub fn random<R: Rng>(space: &ColoredSpace, rng: &mut R) -> Self {
        let blocks = (0..space.modulus())
            .map(|i| loop {
                let d = space.dim(i);
                let mut m = Matrix::zeros(d, d);
                for r in 0..d {
                    for c in 0..d {
                        m.set(r, c, F::from_i64(rng.gen_range(-3..=3)));
                    }
                }
                if m.inverse().is_some() {
                    break m;
                }
            })
            .collect();
        Self::new(space, blocks).expect("blocks are invertible")
    }

    pub fn act_on_vector(&self, space: &ColoredSpace, v: &ColoredVector<F>) -> ColoredVector<F> {
        match v.color() {
            None => ColoredVector::zero(),
            Some(c) => {
                let coords = self.blocks[c.rep()].mul_vec(v.coords());
                ColoredVector::new(space, c, coords).expect("shape preserved")
            }
        }
    }

    /// `k x k^{-1}`.
    pub fn conjugate(&self, x: &BlockNilpotent<F>) -> BlockNilpotent<F> {
        let n = x.space.modulus();
        let blocks = x
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| self.blocks[(i + 1) % n].mul(b).mul(&self.inverses[i]))
            .collect();
        BlockNilpotent {
            space: x.space.clone(),
            blocks,
        }
    }
}
