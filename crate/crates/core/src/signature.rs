use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// A function `Z/n -> N`: per-color dimensions or per-color box counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    counts: Vec<usize>,
}

impl Signature {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::Domain("signature needs at least one color".into()));
        }
        Ok(Self { counts })
    }

    pub fn zero(modulus: usize) -> Self {
        Self {
            counts: vec![0; modulus.max(1)],
        }
    }

    pub fn modulus(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn get(&self, color: usize) -> usize {
        self.counts[color % self.counts.len()]
    }

    pub(crate) fn bump(&mut self, color: usize, by: usize) {
        let n = self.counts.len();
        self.counts[color % n] += by;
    }

    /// `|f|`.
    pub fn size(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Pointwise order `f <= g`.
    pub fn le(&self, other: &Signature) -> bool {
        self.counts.len() == other.counts.len()
            && self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }

    /// `sum_i f(i)^2`, the dimension of `K = prod GL(V_i)`.
    pub fn sum_of_squares(&self) -> usize {
        self.counts.iter().map(|c| c * c).sum()
    }

    /// Every signature of the given modulus and total size.
    pub fn all_of_size(modulus: usize, size: usize) -> Vec<Signature> {
        fn go(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Signature>) {
            if slots == 1 {
                cur.push(rest);
                out.push(Signature { counts: cur.clone() });
                cur.pop();
                return;
            }
            for c in 0..=rest {
                cur.push(c);
                go(rest - c, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, modulus.max(1), &mut Vec::new(), &mut out);
        out
    }
}

impl Add for &Signature {
    type Output = Signature;

    fn add(self, rhs: &Signature) -> Signature {
        assert_eq!(self.modulus(), rhs.modulus(), "signature modulus mismatch");
        Signature {
            counts: self
                .counts
                .iter()
                .zip(&rhs.counts)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_size() {
        let a = Signature::new(vec![1, 2]).unwrap();
        let b = Signature::new(vec![2, 2]).unwrap();
        assert!(a.le(&b));
        assert!(!b.le(&a));
        assert_eq!((&a + &b).counts(), &[3, 4]);
        assert_eq!(b.size(), 4);
        assert_eq!(b.sum_of_squares(), 8);
    }

    #[test]
    fn enumerate_by_size() {
        assert_eq!(Signature::all_of_size(3, 2).len(), 6);
        assert_eq!(Signature::all_of_size(1, 4).len(), 1);
        assert_eq!(Signature::all_of_size(2, 0), vec![Signature::zero(2)]);
    }
}
