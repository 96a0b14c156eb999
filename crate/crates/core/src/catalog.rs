//! Enumeration of orbit labels for a fixed signature, and orbit dimensions
//! from the closed formulas.

use std::collections::BTreeSet;

use crate::calculus::{class_canonical, OrbitClass};
use crate::color::{ceil_div, rep, CyclicColor};
use crate::colored::ColoredPartition;
use crate::error::{Error, Result};
use crate::marking::MarkedColoredPartition;
use crate::signature::Signature;

/// Label of a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrbitLabel {
    Nilpotent(ColoredPartition),
    Enhanced(OrbitClass),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub label: OrbitLabel,
    pub class_color: Option<CyclicColor>,
    pub dim: usize,
    pub ambient: Signature,
}

fn row_signature(len: usize, color: usize, n: usize) -> impl Iterator<Item = usize> {
    (0..n).map(move |m| {
        let offset = rep(m as i64 - color as i64, n) as i64;
        ceil_div(len as i64 - offset, n as i64).max(0) as usize
    })
}

/// Every colored partition of signature `xi`, one per row-equivalence class,
/// in canonical row order.
pub fn enumerate_colored_partitions(xi: &Signature) -> Vec<ColoredPartition> {
    let n = xi.modulus();
    let mut out = Vec::new();
    let mut rows: Vec<(usize, usize)> = Vec::new();
    let mut rest = xi.counts().to_vec();
    let top = xi.size();
    grow_rows(n, &mut rest, top, 0, &mut rows, &mut out);
    out.sort();
    out
}

fn grow_rows(
    n: usize,
    rest: &mut Vec<usize>,
    max_len: usize,
    min_color: usize,
    rows: &mut Vec<(usize, usize)>,
    out: &mut Vec<ColoredPartition>,
) {
    if rest.iter().all(|&r| r == 0) {
        out.push(ColoredPartition::from_parts_unchecked(
            n,
            rows.iter().map(|r| r.0).collect(),
            rows.iter().map(|r| r.1).collect(),
        ));
        return;
    }
    let remaining: usize = rest.iter().sum();
    for len in (1..=max_len.min(remaining)).rev() {
        let first_color = if len == max_len { min_color } else { 0 };
        for color in first_color..n {
            let need: Vec<usize> = row_signature(len, color, n).collect();
            if need.iter().zip(rest.iter()).any(|(a, b)| a > b) {
                continue;
            }
            for (r, a) in rest.iter_mut().zip(&need) {
                *r -= a;
            }
            rows.push((len, color));
            grow_rows(n, rest, len, color, rows, out);
            rows.pop();
            for (r, a) in rest.iter_mut().zip(&need) {
                *r += a;
            }
        }
    }
}

/// Every colored `n`-bipartition of signature `xi` with `ε + [λ - μ] = m`,
/// one per row-equivalence class, in canonical row order.
pub fn enumerate_cqbs(xi: &Signature, m: CyclicColor) -> Result<Vec<MarkedColoredPartition>> {
    let n = xi.modulus();
    if m.modulus() != n {
        return Err(Error::Domain(format!(
            "class color modulus {} does not match signature modulus {n}",
            m.modulus()
        )));
    }
    let mut out = Vec::new();
    for cp in enumerate_colored_partitions(xi) {
        let candidates: Vec<Vec<i64>> = cp
            .lengths()
            .iter()
            .zip(cp.colors())
            .map(|(&len, &eps)| {
                let target = (eps + len) as i64 - m.rep() as i64;
                let mut mark = len as i64 - (len as i64 - target).rem_euclid(n as i64);
                let mut marks = Vec::new();
                while mark > -(n as i64) {
                    marks.push(mark);
                    mark -= n as i64;
                }
                marks
            })
            .collect();
        let mut marks = Vec::with_capacity(cp.len());
        choose_marks(&cp, &candidates, &mut marks, &mut out);
    }
    Ok(out)
}

fn choose_marks(
    cp: &ColoredPartition,
    candidates: &[Vec<i64>],
    marks: &mut Vec<i64>,
    out: &mut Vec<MarkedColoredPartition>,
) {
    let i = marks.len();
    if i == cp.len() {
        out.push(MarkedColoredPartition::from_raw(cp.clone(), marks.clone()));
        return;
    }
    let n = cp.modulus() as i64;
    let lam = cp.lengths();
    for &mu in &candidates[i] {
        // identical rows carry weakly decreasing marks in canonical order
        if i > 0 && lam[i] == lam[i - 1] && cp.colors()[i] == cp.colors()[i - 1] && mu > marks[i - 1]
        {
            continue;
        }
        let nu = lam[i] as i64 - mu;
        let fits = (0..i).all(|p| {
            let nu_p = lam[p] as i64 - marks[p];
            mu < marks[p] + n && nu < nu_p + n
        });
        if fits {
            marks.push(mu);
            choose_marks(cp, candidates, marks, out);
            marks.pop();
        }
    }
}

/// Every tilde class of colored `n`-bipartitions of signature `xi`: the union
/// over all class colors, with the `n` zero-vector markings of each shape
/// merged into one class.
pub fn enumerate_orbit_classes(xi: &Signature) -> Vec<OrbitRecord> {
    let n = xi.modulus();
    let mut classes = BTreeSet::new();
    for m in 0..n {
        let m = CyclicColor::new(m as i64, n).expect("modulus is positive");
        for cqb in enumerate_cqbs(xi, m).expect("moduli agree") {
            classes.insert(class_canonical(&cqb));
        }
    }
    classes
        .into_iter()
        .map(|class| OrbitRecord {
            class_color: class.class_color(),
            dim: dim_orbit_class(&class),
            ambient: xi.clone(),
            label: OrbitLabel::Enhanced(class),
        })
        .collect()
}

/// Records for [`enumerate_colored_partitions`].
pub fn nilpotent_catalog(xi: &Signature) -> Vec<OrbitRecord> {
    enumerate_colored_partitions(xi)
        .into_iter()
        .map(|cp| OrbitRecord {
            class_color: None,
            dim: dim_nilpotent_orbit(&cp),
            ambient: xi.clone(),
            label: OrbitLabel::Nilpotent(cp),
        })
        .collect()
}

/// Records for [`enumerate_cqbs`], labelled by tilde class.
pub fn enhanced_catalog(xi: &Signature, m: CyclicColor) -> Result<Vec<OrbitRecord>> {
    Ok(enumerate_cqbs(xi, m)?
        .into_iter()
        .map(|cqb| {
            let class = class_canonical(&cqb);
            OrbitRecord {
                class_color: Some(m),
                dim: dim_orbit_class(&class),
                ambient: xi.clone(),
                label: OrbitLabel::Enhanced(class),
            }
        })
        .collect())
}

/// `dim O_{λ,ε} = Σ_i (dim V_i)^2 - Σ_k s_{λ_k}(ε_k)`, ambient dims taken
/// from the signature of the label.
pub fn dim_nilpotent_orbit(cp: &ColoredPartition) -> usize {
    let ambient = cp.signature().sum_of_squares();
    ambient - stabilizer_dimension(cp)
}

/// `Σ_k s_{λ_k}(ε_k)`, the dimension of the color-preserving commutant.
pub fn stabilizer_dimension(cp: &ColoredPartition) -> usize {
    cp.lengths()
        .iter()
        .zip(cp.colors())
        .map(|(&len, &eps)| {
            cp.column_signature(len)
                .expect("row lengths are positive")
                .get(eps)
        })
        .sum()
}

/// `dim O_{λ,ε,μ} = dim O_{λ,ε} + Σ_i ceil(μ_i / n)` for a colored
/// `n`-bipartition.
pub fn dim_enhanced_orbit(cqb: &MarkedColoredPartition) -> Result<usize> {
    if !cqb.classify().is_colored_k_bipartition {
        return Err(Error::Precondition(
            "dimension formula needs a colored n-bipartition".into(),
        ));
    }
    let n = cqb.modulus() as i64;
    let extra: i64 = cqb.marks().iter().map(|&m| ceil_div(m, n).max(0)).sum();
    Ok(dim_nilpotent_orbit(cqb.base()) + extra as usize)
}

pub fn dim_orbit_class(class: &OrbitClass) -> usize {
    dim_nilpotent_orbit(class.base()) + class.vector_dimension()
}
