use super::field::Field;
use super::jordan::{colored_jordan_basis, jordan_type, JordanBasisData};
use super::matrix::{rank_of, Matrix};
use super::space::{BlockNilpotent, ColoredVector};
use crate::catalog::stabilizer_dimension;
use crate::error::Result;

/// Dimensions of the commutant `E^x` and its color-preserving part `F^x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommutantDims {
    pub all: usize,
    pub colored: usize,
}

/// A basis of `{ y : yx = xy }`, restricted to block-diagonal `y` when
/// `colored` is set. Solved as a linear system in the entries of `y`.
pub fn commutant_basis<F: Field>(x: &BlockNilpotent<F>, colored: bool) -> Vec<Matrix<F>> {
    let space = x.space();
    let total = space.total();
    let m = x.assemble();
    let unknowns: Vec<(usize, usize)> = (0..total)
        .flat_map(|r| (0..total).map(move |c| (r, c)))
        .filter(|&(r, c)| !colored || space.color_of(r) == space.color_of(c))
        .collect();
    let mut slot = vec![None; total * total];
    for (k, &(r, c)) in unknowns.iter().enumerate() {
        slot[r * total + c] = Some(k);
    }

    // (yx - xy)[r][c] = Σ_t y[r][t] x[t][c] - Σ_t x[r][t] y[t][c]
    let mut equations = Vec::new();
    for r in 0..total {
        for c in 0..total {
            let mut row = vec![F::zero(); unknowns.len()];
            let mut any = false;
            for t in 0..total {
                let a = m.get(t, c);
                if !a.is_zero() {
                    if let Some(k) = slot[r * total + t] {
                        row[k] = row[k].add(a);
                        any = true;
                    }
                }
                let b = m.get(r, t);
                if !b.is_zero() {
                    if let Some(k) = slot[t * total + c] {
                        row[k] = row[k].sub(b);
                        any = true;
                    }
                }
            }
            if any {
                equations.push(row);
            }
        }
    }
    let solutions = if equations.is_empty() {
        (0..unknowns.len())
            .map(|k| {
                let mut v = vec![F::zero(); unknowns.len()];
                v[k] = F::one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(equations, unknowns.len())
            .expect("rows share a length")
            .nullspace()
    };
    solutions
        .into_iter()
        .map(|sol| {
            let mut y = Matrix::zeros(total, total);
            for (k, val) in sol.into_iter().enumerate() {
                let (r, c) = unknowns[k];
                y.set(r, c, val);
            }
            y
        })
        .collect()
}

/// Commutant dimensions by nullspace solve.
pub fn commutant_dims<F: Field>(x: &BlockNilpotent<F>) -> CommutantDims {
    CommutantDims {
        all: commutant_basis(x, false).len(),
        colored: commutant_basis(x, true).len(),
    }
}

/// Commutant dimensions from the Jordan type: `dim V + 2η(λ)` and
/// `Σ_k s_{λ_k}(ε_k)`.
pub fn commutant_dims_formula<F: Field>(x: &BlockNilpotent<F>) -> Result<CommutantDims> {
    let (cp, _) = jordan_type(x)?;
    Ok(CommutantDims {
        all: cp.size() + 2 * cp.shape().eta(),
        colored: stabilizer_dimension(&cp),
    })
}

/// The maps `y_{k,a,b}`: `v_{k,j} ↦ v_{a, b - λ_k + j}` (zero when the
/// index drops below 1), for `b ≤ min(λ_a, λ_k)`; with `colored` set only
/// those where `v_{a,b}` has color `ε_k`.
pub fn explicit_commutant_basis<F: Field>(basis: &JordanBasisData<F>, colored: bool) -> Vec<Matrix<F>> {
    let cp = basis.partition();
    let p = basis.basis_matrix();
    let p_inv = p.inverse().expect("a Jordan basis is invertible");
    let total = p.rows();
    let lengths = cp.lengths();
    let starts: Vec<usize> = lengths
        .iter()
        .scan(0, |acc, &l| {
            let s = *acc;
            *acc += l;
            Some(s)
        })
        .collect();
    let mut out = Vec::new();
    for k in 0..lengths.len() {
        for a in 0..lengths.len() {
            for b in 1..=lengths[a].min(lengths[k]) {
                if colored {
                    let target = cp.box_color(a + 1, b).expect("box in range");
                    if target != cp.color(k) {
                        continue;
                    }
                }
                let mut y = Matrix::zeros(total, total);
                for j in 1..=lengths[k] {
                    let shifted = b as i64 - lengths[k] as i64 + j as i64;
                    if shifted >= 1 {
                        y.set(starts[a] + shifted as usize - 1, starts[k] + j - 1, F::one());
                    }
                }
                out.push(p.mul(&y).mul(&p_inv));
            }
        }
    }
    out
}

/// `(dim E^x v, dim F^x v)` by applying commutant bases to `v`.
pub fn vector_span_dims<F: Field>(v: &ColoredVector<F>, x: &BlockNilpotent<F>) -> (usize, usize) {
    if v.is_zero() {
        return (0, 0);
    }
    let full = v.to_full(x.space());
    let total = x.space().total();
    let span = |colored| {
        let images: Vec<Vec<F>> = commutant_basis(x, colored)
            .iter()
            .map(|y| y.mul_vec(&full))
            .collect();
        rank_of(&images, total)
    };
    (span(false), span(true))
}

/// `dim K - dim F^x + dim F^x v`.
pub fn orbit_dimension_oracle<F: Field>(v: &ColoredVector<F>, x: &BlockNilpotent<F>) -> usize {
    let group = x.space().group_dimension();
    let stabilizer = commutant_basis(x, true).len();
    let orbit_of_vector = vector_span_dims(v, x).1;
    group - stabilizer + orbit_of_vector
}

/// Explicit bases from a computed Jordan basis of `x`.
pub fn explicit_commutant_dims<F: Field>(x: &BlockNilpotent<F>) -> Result<CommutantDims> {
    let basis = colored_jordan_basis(x)?;
    Ok(CommutantDims {
        all: explicit_commutant_basis(&basis, false).len(),
        colored: explicit_commutant_basis(&basis, true).len(),
    })
}
