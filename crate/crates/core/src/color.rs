use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};

/// An element of `Z/n`, the set of colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicColor {
    residue: usize,
    modulus: usize,
}

impl CyclicColor {
    /// Reduces an arbitrary integer into `Z/n`.
    pub fn new(value: i64, modulus: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Domain("color modulus must be positive".into()));
        }
        Ok(Self {
            residue: rep(value, modulus),
            modulus,
        })
    }

    /// Smallest nonnegative representative.
    pub fn rep(self) -> usize {
        self.residue
    }

    pub fn modulus(self) -> usize {
        self.modulus
    }

    /// The color `self + [k]`.
    pub fn shift(self, k: i64) -> Self {
        Self {
            residue: rep(self.residue as i64 + k, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Add<i64> for CyclicColor {
    type Output = CyclicColor;

    fn add(self, rhs: i64) -> CyclicColor {
        self.shift(rhs)
    }
}

impl Sub<i64> for CyclicColor {
    type Output = CyclicColor;

    fn sub(self, rhs: i64) -> CyclicColor {
        self.shift(-rhs)
    }
}

impl Sub for CyclicColor {
    type Output = CyclicColor;

    fn sub(self, rhs: CyclicColor) -> CyclicColor {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.shift(-(rhs.residue as i64))
    }
}

impl fmt::Display for CyclicColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

/// `rep([value])` in `Z/modulus`.
pub fn rep(value: i64, modulus: usize) -> usize {
    value.rem_euclid(modulus as i64) as usize
}

/// `ceil(a / b)` for `b > 0`.
pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}
