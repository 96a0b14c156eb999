//! Marking calculus: minimal bipartitions, the `ρ_m` shifts, normalization to
//! colored `n`-bipartitions, minimal markings and the monoid structure on
//! marked colored partitions.

use std::fmt;

use crate::color::{rep, CyclicColor};
use crate::colored::ColoredPartition;
use crate::error::{Error, Result};
use crate::marking::{MarkedColoredPartition, Row};

/// `ρ̄`: the least bipartition marking that dominates `μ` pointwise.
///
/// `μ̃_i = max({μ_j : j >= i} ∪ {λ_i - λ_j + μ_j : j < i} ∪ {0})`.
pub fn minimal_bipartition(mcp: &MarkedColoredPartition) -> MarkedColoredPartition {
    let lam = mcp.lengths();
    let mu = mcp.marks();
    let l = mcp.len();
    let mut suffix_max = vec![0i64; l + 1];
    for i in (0..l).rev() {
        suffix_max[i] = suffix_max[i + 1].max(mu[i]);
    }
    let mut out = Vec::with_capacity(l);
    // max over j < i of (μ_j - λ_j), i.e. -min ν_j
    let mut best_prefix: Option<i64> = None;
    for i in 0..l {
        let mut v = suffix_max[i].max(0);
        if let Some(p) = best_prefix {
            v = v.max(lam[i] as i64 + p);
        }
        out.push(v);
        let here = mu[i] - lam[i] as i64;
        best_prefix = Some(best_prefix.map_or(here, |p| p.max(here)));
    }
    mcp.with_marks(out)
}

/// `ρ_m`: moves each mark left to the nearest position whose class is `m`.
pub fn rho_m(mcp: &MarkedColoredPartition, m: CyclicColor) -> MarkedColoredPartition {
    let n = mcp.modulus() as i64;
    let marks = mcp
        .rows()
        .map(|r| {
            // want ε + λ - k ≡ m, i.e. k ≡ ε + λ - m
            let target = r.color as i64 + r.length as i64 - m.rep() as i64;
            r.mark - (r.mark - target).rem_euclid(n)
        })
        .collect();
    mcp.with_marks(marks)
}

/// Alias of [`minimal_bipartition`].
pub fn rho_bar(mcp: &MarkedColoredPartition) -> MarkedColoredPartition {
    minimal_bipartition(mcp)
}

/// A single raise step used while normalizing: the mark of `row` moves `n`
/// positions to the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RaiseStep {
    pub row: usize,
}

/// Brings a marking whose positive rows all lie in class `m` to the unique
/// colored `n`-bipartition of class `m` in its fiber.
pub fn normalize(mcp: &MarkedColoredPartition, m: CyclicColor) -> Result<MarkedColoredPartition> {
    normalize_with(mcp, m, |_| 0)
}

/// As [`normalize`], with `choose` picking which available step to apply.
pub fn normalize_with<F>(
    mcp: &MarkedColoredPartition,
    m: CyclicColor,
    mut choose: F,
) -> Result<MarkedColoredPartition>
where
    F: FnMut(&[RaiseStep]) -> usize,
{
    let n = mcp.modulus() as i64;
    check_modulus(mcp, m)?;
    let lam: Vec<i64> = mcp.lengths().iter().map(|&l| l as i64).collect();
    let mut mu = force_class(mcp, m)?;

    loop {
        let steps = raise_steps(&lam, &mu, n);
        if steps.is_empty() {
            break;
        }
        let pick = choose(&steps).min(steps.len() - 1);
        let row = steps[pick].row;
        mu[row] += n;
        debug_assert!(mu[row] <= lam[row]);
    }
    Ok(mcp.with_marks(mu))
}

fn check_modulus(mcp: &MarkedColoredPartition, m: CyclicColor) -> Result<()> {
    if m.modulus() != mcp.modulus() {
        return Err(Error::Domain(format!(
            "class color modulus {} does not match marking modulus {}",
            m.modulus(),
            mcp.modulus()
        )));
    }
    Ok(())
}

/// Checks positive rows against `m` and places nonpositive rows in class `m`.
fn force_class(mcp: &MarkedColoredPartition, m: CyclicColor) -> Result<Vec<i64>> {
    let n = mcp.modulus() as i64;
    let mut mu = mcp.marks().to_vec();
    for (i, r) in mcp.rows().enumerate() {
        if r.mark >= 1 {
            let found = mcp.row_class(i);
            if found != m.rep() {
                return Err(Error::ClassMismatch {
                    row: i + 1,
                    found,
                    expected: m.rep(),
                });
            }
        } else {
            let target = r.color as i64 + r.length as i64 - m.rep() as i64;
            // unique value in (-n, 0] congruent to target
            mu[i] = -((-target).rem_euclid(n));
        }
    }
    Ok(mu)
}

fn raise_steps(lam: &[i64], mu: &[i64], n: i64) -> Vec<RaiseStep> {
    let l = lam.len();
    let mut steps = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            let (nu_i, nu_j) = (lam[i] - mu[i], lam[j] - mu[j]);
            if mu[i] + n <= mu[j] {
                steps.push(RaiseStep { row: i });
            } else if nu_i + n <= nu_j {
                steps.push(RaiseStep { row: j });
            }
        }
    }
    steps
}

/// A class of colored `n`-bipartitions modulo row order and the values of
/// nonpositive marks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitClass {
    base: ColoredPartition,
    marks: Vec<usize>,
    zero_vector: bool,
}

impl OrbitClass {
    pub fn base(&self) -> &ColoredPartition {
        &self.base
    }

    pub fn modulus(&self) -> usize {
        self.base.modulus()
    }

    /// Marks clipped at zero; `0` encodes "mark <= 0".
    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    pub fn is_zero_vector(&self) -> bool {
        self.zero_vector
    }

    /// Class color shared by the positively marked rows.
    pub fn class_color(&self) -> Option<CyclicColor> {
        let n = self.modulus();
        self.base
            .lengths()
            .iter()
            .zip(self.base.colors())
            .zip(&self.marks)
            .find(|(_, &m)| m > 0)
            .map(|((&len, &eps), &mark)| {
                CyclicColor::new(eps as i64 + len as i64 - mark as i64, n)
                    .expect("modulus is positive")
            })
    }

    /// The colored `n`-bipartition of class `m` representing this class.
    ///
    /// For a nonzero class `m` is forced and any other value is rejected.
    pub fn representative(&self, m: CyclicColor) -> Result<MarkedColoredPartition> {
        let mcp = MarkedColoredPartition::from_raw(
            self.base.clone(),
            self.marks.iter().map(|&m| m as i64).collect(),
        );
        normalize(&mcp, m)
    }

    /// Representative in the forced class, or class `0` for the zero vector.
    pub fn default_representative(&self) -> MarkedColoredPartition {
        let m = self
            .class_color()
            .unwrap_or_else(|| CyclicColor::new(0, self.modulus()).expect("modulus is positive"));
        self.representative(m)
            .expect("positive rows of an orbit class share one class color")
    }

    /// `Σ_i ceil(μ_i / n)` over positive marks: `dim F^x v`.
    pub fn vector_dimension(&self) -> usize {
        let n = self.modulus();
        self.marks.iter().map(|&m| m.div_ceil(n)).sum()
    }
}

impl fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; mu+=(", self.base)?;
        for (i, m) in self.marks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

/// Clips nonpositive marks to zero and sorts rows canonically.
pub fn class_canonical(mcp: &MarkedColoredPartition) -> OrbitClass {
    let clipped = mcp.with_marks(mcp.marks().iter().map(|&m| m.max(0)).collect());
    let canon = clipped.canonical_form();
    let marks: Vec<usize> = canon.marks().iter().map(|&m| m as usize).collect();
    let zero_vector = marks.iter().all(|&m| m == 0);
    OrbitClass {
        base: canon.base().clone(),
        marks,
        zero_vector,
    }
}

/// One reduction step of [`minimal_marking`]: the mark of `row` drops by `n`
/// (floored at zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowerStep {
    pub row: usize,
}

/// Smallest nonnegative marking in the fiber of `mcp`.
pub fn minimal_marking(mcp: &MarkedColoredPartition) -> Result<MarkedColoredPartition> {
    minimal_marking_with(mcp, |_| 0)
}

/// As [`minimal_marking`], with `choose` picking which reduction to apply.
pub fn minimal_marking_with<F>(
    mcp: &MarkedColoredPartition,
    mut choose: F,
) -> Result<MarkedColoredPartition>
where
    F: FnMut(&[LowerStep]) -> usize,
{
    if let Some(i) = mcp.marks().iter().position(|&m| m < 0) {
        return Err(Error::Domain(format!(
            "minimal marking needs nonnegative marks, row {} has {}",
            i + 1,
            mcp.marks()[i]
        )));
    }
    let n = mcp.modulus() as i64;
    let mut cur = mcp.canonical_form();
    loop {
        let steps = lower_steps(&cur);
        if steps.is_empty() {
            return Ok(cur);
        }
        let pick = choose(&steps).min(steps.len() - 1);
        let row = steps[pick].row;
        let mut marks = cur.marks().to_vec();
        marks[row] = (marks[row] - n).max(0);
        cur = cur.with_marks(marks).canonical_form();
    }
}

fn lower_steps(mcp: &MarkedColoredPartition) -> Vec<LowerStep> {
    let mu = mcp.marks();
    let l = mcp.len();
    let mut steps = Vec::new();
    for i in 0..l {
        if mu[i] < 1 {
            continue;
        }
        for j in i + 1..l {
            if mu[j] < 1 || mcp.row_class(i) != mcp.row_class(j) {
                continue;
            }
            if mu[i] <= mu[j] {
                steps.push(LowerStep { row: i });
            }
            if mcp.nu(i) <= mcp.nu(j) {
                steps.push(LowerStep { row: j });
            }
        }
    }
    steps
}

/// Whether `μ >= 0` satisfies the strict pair inequalities that characterize
/// minimal markings.
pub fn is_minimal_marking(mcp: &MarkedColoredPartition) -> bool {
    mcp.marks().iter().all(|&m| m >= 0) && lower_steps(mcp).is_empty()
}

/// Removes the rows with the given 1-based indices, keeping the rest in order.
pub fn delete_rows(mcp: &MarkedColoredPartition, rows: &[usize]) -> Result<MarkedColoredPartition> {
    let l = mcp.len();
    let mut drop = vec![false; l];
    for &r in rows {
        if r == 0 || r > l {
            return Err(Error::Index {
                what: "row",
                index: r,
                min: 1,
                max: l,
            });
        }
        drop[r - 1] = true;
    }
    let kept: Vec<Row> = mcp
        .rows()
        .zip(&drop)
        .filter(|(_, &d)| !d)
        .map(|(r, _)| r)
        .collect();
    Ok(mcp.with_rows(&kept))
}

/// Interlaces the rows of two marked colored partitions (canonical output).
pub fn union(
    a: &MarkedColoredPartition,
    b: &MarkedColoredPartition,
) -> Result<MarkedColoredPartition> {
    if a.modulus() != b.modulus() {
        return Err(Error::Domain(format!(
            "cannot union markings with moduli {} and {}",
            a.modulus(),
            b.modulus()
        )));
    }
    let mut rows: Vec<Row> = a.rows().chain(b.rows()).collect();
    rows.sort_by_key(|r| std::cmp::Reverse(r.length));
    Ok(a.with_rows(&rows).canonical_form())
}

/// Split of a minimal marking into its positively marked rows and the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicDecomposition {
    pub characteristic: MarkedColoredPartition,
    pub plain: ColoredPartition,
}

impl CharacteristicDecomposition {
    /// Union of the two parts.
    pub fn recombine(&self) -> MarkedColoredPartition {
        union(
            &self.characteristic,
            &MarkedColoredPartition::unmarked(self.plain.clone()),
        )
        .expect("parts share a modulus")
    }
}

pub fn characteristic_decomposition(
    mcp: &MarkedColoredPartition,
) -> Result<CharacteristicDecomposition> {
    if !is_minimal_marking(mcp) {
        return Err(Error::Precondition(
            "characteristic decomposition needs a minimal marking".into(),
        ));
    }
    let (marked, plain): (Vec<Row>, Vec<Row>) = mcp.rows().partition(|r| r.mark > 0);
    let plain = mcp.with_rows(&plain);
    Ok(CharacteristicDecomposition {
        characteristic: mcp.with_rows(&marked),
        plain: plain.base().clone(),
    })
}

/// `φ_k`: merges colors congruent mod `k`, leaving marks alone.
pub fn reduce_colors(mcp: &MarkedColoredPartition, k: usize) -> Result<MarkedColoredPartition> {
    let n = mcp.modulus();
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::Domain(format!("{k} does not divide {n}")));
    }
    let base = ColoredPartition::from_parts_unchecked(
        k,
        mcp.lengths().to_vec(),
        mcp.colors().iter().map(|&c| rep(c as i64, k)).collect(),
    );
    Ok(MarkedColoredPartition::from_raw(base, mcp.marks().to_vec()))
}
