use super::field::Field;
use super::matrix::{EchelonBasis, Matrix};
use super::space::{BlockNilpotent, ColoredSpace, ColoredVector};
use crate::calculus::{class_canonical, normalize, OrbitClass};
use crate::color::rep;
use crate::colored::ColoredPartition;
use crate::error::{Error, Result};
use crate::marking::MarkedColoredPartition;
use crate::signature::Signature;

/// A colored Jordan basis `v_{i,j}` of a colored nilpotent map, with its type.
///
/// `vectors[i][j - 1]` holds `v_{i+1, j}`.
#[derive(Debug, Clone, PartialEq)]
pub struct JordanBasisData<F> {
    space: ColoredSpace,
    ty: ColoredPartition,
    vectors: Vec<Vec<ColoredVector<F>>>,
}

impl<F: Field> JordanBasisData<F> {
    pub fn space(&self) -> &ColoredSpace {
        &self.space
    }

    pub fn partition(&self) -> &ColoredPartition {
        &self.ty
    }

    /// `v_{i,j}` with 1-based indices.
    pub fn vector(&self, i: usize, j: usize) -> &ColoredVector<F> {
        &self.vectors[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<ColoredVector<F>>] {
        &self.vectors
    }

    /// Basis vectors as columns, rows in order and `j` ascending within a row.
    pub fn basis_matrix(&self) -> Matrix<F> {
        let cols: Vec<Vec<F>> = self
            .vectors
            .iter()
            .flatten()
            .map(|v| v.to_full(&self.space))
            .collect();
        Matrix::from_columns(&cols, self.space.total())
    }

    /// Checks the chain relations, the box colors and that the vectors form a basis.
    pub fn verify(&self, x: &BlockNilpotent<F>) -> Result<()> {
        let n = self.space.modulus();
        if x.space() != &self.space {
            return Err(Error::Domain("basis and map live on different spaces".into()));
        }
        let m = x.assemble();
        for (i, row) in self.vectors.iter().enumerate() {
            if row.len() != self.ty.lengths()[i] {
                return Err(Error::Domain(format!("row {} has the wrong length", i + 1)));
            }
            for (j0, v) in row.iter().enumerate() {
                let j = j0 + 1;
                let want = self.ty.box_color(i + 1, j)?;
                if v.color() != Some(want) {
                    return Err(Error::Domain(format!(
                        "v_({},{}) should have color {want}",
                        i + 1,
                        j
                    )));
                }
                let image = m.mul_vec(&v.to_full(&self.space));
                let expected = if j == 1 {
                    vec![F::zero(); self.space.total()]
                } else {
                    row[j0 - 1].to_full(&self.space)
                };
                if image != expected {
                    return Err(Error::Domain(format!(
                        "x v_({},{}) is not the previous chain vector",
                        i + 1,
                        j
                    )));
                }
            }
        }
        if self.ty.signature() != *self.space.dims() || n != self.ty.modulus() {
            return Err(Error::Domain("type does not match the space".into()));
        }
        if self.basis_matrix().rank() != self.space.total() {
            return Err(Error::Domain("vectors are not independent".into()));
        }
        Ok(())
    }
}

fn unit<F: Field>(len: usize, at: usize) -> Vec<F> {
    let mut v = vec![F::zero(); len];
    v[at] = F::one();
    v
}

/// The standard representative of a marked colored partition: one coordinate
/// per box, `x` moves box `(i,j)` to `(i,j-1)`, and `v = Σ_{μ_i > 0} v_{i,μ_i}`.
pub fn build_representative<F: Field>(
    mcp: &MarkedColoredPartition,
) -> Result<(ColoredVector<F>, BlockNilpotent<F>, JordanBasisData<F>)> {
    let cp = mcp.base();
    let n = cp.modulus();
    let space = ColoredSpace::new(cp.signature());
    let mut filled = vec![0usize; n];
    let mut index = Vec::with_capacity(cp.len());
    for i in 1..=cp.len() {
        let mut row = Vec::with_capacity(cp.lengths()[i - 1]);
        for j in 1..=cp.lengths()[i - 1] {
            let c = cp.box_color(i, j)?.rep();
            row.push((c, space.offset(c) + filled[c]));
            filled[c] += 1;
        }
        index.push(row);
    }

    let total = space.total();
    let mut full = Matrix::zeros(total, total);
    for row in &index {
        for j in 1..row.len() {
            full.set(row[j - 1].1, row[j].1, F::one());
        }
    }
    let blocks = (0..n)
        .map(|c| {
            let next = (c + 1) % n;
            full.block(space.offset(next), space.offset(c), space.dim(next), space.dim(c))
        })
        .collect();
    let x = BlockNilpotent::unchecked(space.clone(), blocks)?;

    let vectors = index
        .iter()
        .map(|row| {
            row.iter()
                .map(|&(_, at)| ColoredVector::from_full(&space, &unit(total, at)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut v = vec![F::zero(); total];
    for (row, &mu) in index.iter().zip(mcp.marks()) {
        if mu > 0 {
            v[row[mu as usize - 1].1] = F::one();
        }
    }
    let v = ColoredVector::from_full(&space, &v)?;
    let basis = JordanBasisData {
        space,
        ty: cp.clone(),
        vectors,
    };
    Ok((v, x, basis))
}

/// Powers `x^0 .. x^top` where `x^top = 0`.
fn powers<F: Field>(x: &BlockNilpotent<F>) -> Result<Vec<Matrix<F>>> {
    let m = x.assemble();
    let total = x.space().total();
    let mut out = vec![Matrix::identity(total)];
    while !out.last().expect("nonempty").is_zero() {
        if out.len() > total {
            return Err(Error::NotNilpotent);
        }
        let next = out.last().expect("nonempty").mul(&m);
        out.push(next);
    }
    Ok(out)
}

/// Kernel of `p` restricted to `V_color`, in full coordinates.
fn kernel_in_color<F: Field>(space: &ColoredSpace, p: &Matrix<F>, color: usize) -> Vec<Vec<F>> {
    let d = space.dim(color);
    if d == 0 {
        return Vec::new();
    }
    let off = space.offset(color);
    let restricted = p.block(0, off, p.rows(), d);
    restricted
        .nullspace()
        .into_iter()
        .map(|k| {
            let mut full = vec![F::zero(); space.total()];
            full[off..off + d].clone_from_slice(&k);
            full
        })
        .collect()
}

/// Colored Jordan type of `x` and the kernel signatures `s_k = ξ(ker x^k)`
/// for `k = 1 ..` up to the longest row.
pub fn jordan_type<F: Field>(x: &BlockNilpotent<F>) -> Result<(ColoredPartition, Vec<Signature>)> {
    let space = x.space();
    let n = space.modulus();
    let pw = powers(x)?;
    let top = pw.len() - 1;
    let mut kernels = vec![Signature::zero(n)];
    for p in &pw[1..] {
        let counts = (0..n)
            .map(|c| {
                let d = space.dim(c);
                if d == 0 {
                    0
                } else {
                    d - p.block(0, space.offset(c), p.rows(), d).rank()
                }
            })
            .collect();
        kernels.push(Signature::new(counts)?);
    }
    // column[L][c]: boxes of color c in column L.
    let column = |l: usize, c: usize| -> i64 {
        if l == 0 || l > top {
            0
        } else {
            kernels[l].get(c) as i64 - kernels[l - 1].get(c) as i64
        }
    };
    let mut rows = Vec::new();
    for l in (1..=top).rev() {
        for c in 0..n {
            let prev = rep(c as i64 - 1, n);
            let count = column(l, c) - column(l + 1, prev);
            if count < 0 {
                return Err(Error::Domain("kernel signatures are inconsistent".into()));
            }
            rows.extend(std::iter::repeat_n((l, c as i64), count as usize));
        }
    }
    let cp = ColoredPartition::from_rows(n, &rows)?;
    Ok((cp, kernels.split_off(1)))
}

/// A colored Jordan basis for `x`, rows in canonical order.
///
/// Chain tops of length `k` and color `m` are chosen as a complement of
/// `(ker x^{k-1} ∩ V_m) + x(ker x^{k+1} ∩ V_{m-1})` inside `ker x^k ∩ V_m`.
pub fn colored_jordan_basis<F: Field>(x: &BlockNilpotent<F>) -> Result<JordanBasisData<F>> {
    let space = x.space().clone();
    let n = space.modulus();
    let total = space.total();
    let pw = powers(x)?;
    let top = pw.len() - 1;
    let m = &pw[1.min(top)];
    let kernel = |k: usize, c: usize| -> Vec<Vec<F>> {
        if k == 0 {
            Vec::new()
        } else {
            kernel_in_color(&space, &pw[k.min(top)], c)
        }
    };

    let mut rows: Vec<(usize, i64)> = Vec::new();
    let mut vectors = Vec::new();
    for k in (1..=top).rev() {
        for c in 0..n {
            let mut span = EchelonBasis::new();
            for v in kernel(k - 1, c) {
                span.insert(&v);
            }
            for v in kernel(k + 1, rep(c as i64 - 1, n)) {
                span.insert(&m.mul_vec(&v));
            }
            for candidate in kernel(k, c) {
                if !span.insert(&candidate) {
                    continue;
                }
                let mut chain = vec![candidate];
                for _ in 1..k {
                    let next = m.mul_vec(chain.last().expect("nonempty"));
                    chain.push(next);
                }
                chain.reverse();
                vectors.push(
                    chain
                        .iter()
                        .map(|v| ColoredVector::from_full(&space, v))
                        .collect::<Result<Vec<_>>>()?,
                );
                rows.push((k, c as i64));
            }
        }
    }
    debug_assert_eq!(vectors.iter().map(Vec::len).sum::<usize>(), total);
    Ok(JordanBasisData {
        ty: ColoredPartition::from_rows(n, &rows)?,
        space,
        vectors,
    })
}

/// Least `d` with `x^d v = 0`.
pub fn vector_degree<F: Field>(x: &BlockNilpotent<F>, v: &ColoredVector<F>) -> usize {
    let m = x.assemble();
    let mut w = v.to_full(x.space());
    let mut d = 0;
    while w.iter().any(|c| !c.is_zero()) {
        w = m.mul_vec(&w);
        d += 1;
    }
    d
}

/// Dimension of the smallest `x`-stable subspace containing `v`.
pub fn cyclic_span_dim<F: Field>(x: &BlockNilpotent<F>, v: &ColoredVector<F>) -> usize {
    let m = x.assemble();
    let mut span = EchelonBasis::new();
    let mut w = v.to_full(x.space());
    while span.insert(&w) {
        w = m.mul_vec(&w);
    }
    span.dim()
}

/// The orbit class of the pair `(v, x)`.
pub fn classify_pair<F: Field>(v: &ColoredVector<F>, x: &BlockNilpotent<F>) -> Result<OrbitClass> {
    let space = x.space();
    let Some(m) = v.color() else {
        let (cp, _) = jordan_type(x)?;
        return Ok(class_canonical(&MarkedColoredPartition::unmarked(cp)));
    };
    if m.modulus() != space.modulus() || v.coords().len() != space.dim(m.rep()) {
        return Err(Error::Domain("vector does not belong to the space of x".into()));
    }
    let basis = colored_jordan_basis(x)?;
    let inverse = basis
        .basis_matrix()
        .inverse()
        .expect("a Jordan basis is invertible");
    let coeffs = inverse.mul_vec(&v.to_full(space));
    let mut marks = Vec::with_capacity(basis.ty.len());
    let mut at = 0;
    for &len in basis.ty.lengths() {
        let row = &coeffs[at..at + len];
        marks.push(row.iter().rposition(|c| !c.is_zero()).map_or(0, |j| j as i64 + 1));
        at += len;
    }
    let mcp = MarkedColoredPartition::new(basis.ty.clone(), marks)?;
    Ok(class_canonical(&normalize(&mcp, m)?))
}

#[cfg(test)]
mod tests {
    use super::super::field::{Rational, F5};
    use super::super::space::GroupElement;
    use super::*;
    use crate::color::CyclicColor;
    use crate::catalog::enumerate_cqbs;
    use rand::{Rng, SeedableRng};

    fn eighteen_box_partition() -> ColoredPartition {
        ColoredPartition::new(
            crate::partition::Partition::new(vec![5, 4, 4, 2, 2, 1]).unwrap(),
            vec![0, 0, 2, 1, 0, 1],
            3,
        )
        .unwrap()
    }

    #[test]
    fn two_box_representative() {
        let mcp = MarkedColoredPartition::from_rows(2, &[(2, 0, 2)]).unwrap();
        let (v, x, basis) = build_representative::<Rational>(&mcp).unwrap();
        assert_eq!(x.space().dims().counts(), &[1, 1]);
        assert_eq!(x.blocks()[0].get(0, 0), &Rational::from_i64(1));
        assert!(x.blocks()[1].is_zero());
        assert_eq!(v.color().unwrap().rep(), 0);
        basis.verify(&x).unwrap();
    }

    #[test]
    fn unmarked_representative_has_zero_vector() {
        let (v, x, _) =
            build_representative::<Rational>(&MarkedColoredPartition::unmarked(eighteen_box_partition())).unwrap();
        assert!(v.is_zero());
        assert_eq!(x.space().total(), 18);
        assert_eq!(jordan_type(&x).unwrap().0, eighteen_box_partition().canonical());
    }

    #[test]
    fn zero_map_has_single_box_rows() {
        let space = ColoredSpace::new(Signature::new(vec![2, 1]).unwrap());
        let x = BlockNilpotent::<Rational>::zero(space);
        let (cp, s) = jordan_type(&x).unwrap();
        assert_eq!(cp.lengths(), &[1, 1, 1]);
        assert_eq!(cp.colors(), &[0, 0, 1]);
        assert_eq!(s, vec![Signature::new(vec![2, 1]).unwrap()]);
        colored_jordan_basis(&x).unwrap().verify(&x).unwrap();
    }

    #[test]
    fn conjugated_representatives_keep_their_type() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let (_, x, _) =
            build_representative::<Rational>(&MarkedColoredPartition::unmarked(eighteen_box_partition())).unwrap();
        let k = GroupElement::random(x.space(), &mut rng);
        let y = k.conjugate(&x);
        assert_eq!(jordan_type(&y).unwrap(), jordan_type(&x).unwrap());
        let basis = colored_jordan_basis(&y).unwrap();
        basis.verify(&y).unwrap();
        assert_eq!(basis.partition(), &eighteen_box_partition().canonical());
    }

    #[test]
    fn random_prime_field_maps_admit_bases() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        let space = ColoredSpace::new(Signature::new(vec![2, 2]).unwrap());
        let mut found = 0;
        while found < 20 {
            let blocks = (0..2)
                .map(|_| {
                    let mut m = Matrix::<F5>::zeros(2, 2);
                    for r in 0..2 {
                        for c in 0..2 {
                            m.set(r, c, F5::new(rng.gen_range(0..5)));
                        }
                    }
                    m
                })
                .collect();
            let Ok(x) = BlockNilpotent::new(space.clone(), blocks) else {
                continue;
            };
            let basis = colored_jordan_basis(&x).unwrap();
            basis.verify(&x).unwrap();
            assert_eq!(basis.partition(), &jordan_type(&x).unwrap().0);
            found += 1;
        }
    }

    #[test]
    fn classify_zero_map_example() {
        let space = ColoredSpace::new(Signature::new(vec![2, 2]).unwrap());
        let x = BlockNilpotent::<Rational>::zero(space.clone());
        let one = Rational::from_i64(1);
        let v = ColoredVector::new(&space, CyclicColor::new(0, 2).unwrap(), vec![one.clone(), one])
            .unwrap();
        let class = classify_pair(&v, &x).unwrap();
        assert_eq!(class.base().lengths(), &[1, 1, 1, 1]);
        assert_eq!(class.base().colors(), &[0, 0, 1, 1]);
        assert_eq!(class.marks(), &[1, 1, 0, 0]);

        let zero = classify_pair(&ColoredVector::zero(), &x).unwrap();
        assert!(zero.is_zero_vector());
    }

    #[test]
    fn classify_inverts_build_on_small_signatures() {
        for n in 1..=3 {
            for size in 0..=4 {
                for xi in Signature::all_of_size(n, size) {
                    for m in 0..n {
                        let m = CyclicColor::new(m as i64, n).unwrap();
                        for c in enumerate_cqbs(&xi, m).unwrap() {
                            let (v, x, _) = build_representative::<Rational>(&c).unwrap();
                            assert_eq!(classify_pair(&v, &x).unwrap(), class_canonical(&c), "{c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_span_matches_degree() {
        let mcp = MarkedColoredPartition::from_rows(3, &[(5, 2, 4), (3, 1, 1)]).unwrap();
        let (v, x, _) = build_representative::<Rational>(&mcp).unwrap();
        assert_eq!(vector_degree(&x, &v), 4);
        assert_eq!(cyclic_span_dim(&x, &v), 4);
    }
}
