use std::collections::HashMap;

use super::field::{FiniteField, F2, F3, F5, F7};
use super::jordan::classify_pair;
use super::matrix::Matrix;
use super::space::{BlockNilpotent, ColoredSpace, ColoredVector};
use crate::calculus::OrbitClass;
use crate::error::{Error, Result};
use crate::signature::Signature;

/// Default cap on `|K| * #(v, x)` for a census.
pub const DEFAULT_BUDGET: u128 = 50_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_VAR: &str = "COLORED_QUIVER_BUDGET";

pub fn budget_from_env() -> u128 {
    std::env::var(BUDGET_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// One `K`-orbit found by the census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusOrbit {
    pub label: OrbitClass,
    pub size: usize,
    /// Lexicographically least member: full coordinates of `v` followed by
    /// the entries of each block of `x`, as field element indices.
    pub representative: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub field_order: usize,
    pub group_order: u128,
    pub pairs: usize,
    pub orbits: Vec<CensusOrbit>,
}

impl Census {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Orbit labels, sorted.
    pub fn labels(&self) -> Vec<OrbitClass> {
        let mut out: Vec<_> = self.orbits.iter().map(|o| o.label.clone()).collect();
        out.sort();
        out
    }
}

/// Census over `F_q` for `q ∈ {2, 3, 5, 7}`.
pub fn brute_force_orbits(xi: &Signature, q: u32, budget: u128) -> Result<Census> {
    match q {
        2 => brute_force_orbits_over::<F2>(xi, budget),
        3 => brute_force_orbits_over::<F3>(xi, budget),
        5 => brute_force_orbits_over::<F5>(xi, budget),
        7 => brute_force_orbits_over::<F7>(xi, budget),
        _ => Err(Error::Domain(format!("unsupported field order {q}; use 2, 3, 5 or 7"))),
    }
}

fn gl_order(d: usize, q: u128) -> u128 {
    let qd = q.saturating_pow(d as u32);
    (0..d).fold(1u128, |acc, i| acc.saturating_mul(qd - q.pow(i as u32)))
}

/// Every matrix of the given shape over `F`.
fn all_matrices<F: FiniteField>(rows: usize, cols: usize) -> Vec<Matrix<F>> {
    let elems = F::elements();
    let cells = rows * cols;
    let mut out = Vec::new();
    let mut digits = vec![0usize; cells];
    loop {
        let mut m = Matrix::zeros(rows, cols);
        for (k, &d) in digits.iter().enumerate() {
            m.set(k / cols.max(1), k % cols.max(1), elems[d]);
        }
        out.push(m);
        let Some(pos) = digits.iter().position(|&d| d + 1 < F::ORDER) else {
            break;
        };
        digits[pos] += 1;
        digits[..pos].iter_mut().for_each(|d| *d = 0);
    }
    out
}

fn all_vectors<F: FiniteField>(len: usize) -> Vec<Vec<F>> {
    all_matrices::<F>(len, 1)
        .into_iter()
        .map(|m| m.column(0))
        .collect()
}

/// All pairs `(v, x)`, `v` colored and `x` nilpotent, split into `K`-orbits by
/// applying every element of `K` explicitly.
pub fn brute_force_orbits_over<F: FiniteField>(xi: &Signature, budget: u128) -> Result<Census> {
    let n = xi.modulus();
    let q = F::ORDER as u128;
    let space = ColoredSpace::new(xi.clone());
    let dims: Vec<usize> = xi.counts().to_vec();

    let group_order = dims.iter().fold(1u128, |acc, &d| acc.saturating_mul(gl_order(d, q)));
    let block_cells: usize = (0..n).map(|i| dims[i] * dims[(i + 1) % n]).sum();
    let maps = q.saturating_pow(block_cells as u32);
    let vectors = 1 + dims
        .iter()
        .map(|&d| q.saturating_pow(d as u32) - 1)
        .sum::<u128>();
    let required = group_order.saturating_mul(maps).saturating_mul(vectors);
    if required > budget {
        return Err(Error::Budget {
            required,
            limit: budget,
        });
    }

    let groups: Vec<Vec<(Matrix<F>, Matrix<F>)>> = dims
        .iter()
        .map(|&d| {
            all_matrices::<F>(d, d)
                .into_iter()
                .filter_map(|m| m.inverse().map(|inv| (m, inv)))
                .collect()
        })
        .collect();

    let block_choices: Vec<Vec<Matrix<F>>> = (0..n)
        .map(|i| all_matrices::<F>(dims[(i + 1) % n], dims[i]))
        .collect();
    let mut nilpotent = Vec::new();
    for_each_choice(&block_choices.iter().map(Vec::len).collect::<Vec<_>>(), |pick| {
        let blocks = pick.iter().enumerate().map(|(i, &k)| block_choices[i][k].clone()).collect();
        let x = BlockNilpotent::unchecked(space.clone(), blocks).expect("shapes match");
        if x.is_nilpotent() {
            nilpotent.push(x);
        }
    });

    let mut colored_vectors = vec![ColoredVector::zero()];
    for (c, &d) in dims.iter().enumerate() {
        let color = crate::color::CyclicColor::new(c as i64, n)?;
        for coords in all_vectors::<F>(d) {
            let v = ColoredVector::new(&space, color, coords)?;
            if !v.is_zero() {
                colored_vectors.push(v);
            }
        }
    }

    let encode = |v: &ColoredVector<F>, x: &BlockNilpotent<F>| -> Vec<u32> {
        let mut key: Vec<u32> = v.to_full(&space).iter().map(|e| e.index() as u32).collect();
        for b in x.blocks() {
            key.extend(b.entries().iter().map(|e| e.index() as u32));
        }
        key
    };

    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    for x in &nilpotent {
        for v in &colored_vectors {
            index.insert(encode(v, x), pairs.len());
            pairs.push((v.clone(), x.clone()));
        }
    }

    let group_sizes: Vec<usize> = groups.iter().map(Vec::len).collect();
    let mut visited = vec![false; pairs.len()];
    let mut orbits = Vec::new();
    for start in 0..pairs.len() {
        if visited[start] {
            continue;
        }
        let (v, x) = &pairs[start];
        let mut members = Vec::new();
        for_each_choice(&group_sizes, |pick| {
            let image_v = match v.color() {
                None => ColoredVector::zero(),
                Some(c) => {
                    let (k, _) = &groups[c.rep()][pick[c.rep()]];
                    ColoredVector::new(&space, c, k.mul_vec(v.coords())).expect("shape preserved")
                }
            };
            let blocks = x
                .blocks()
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let next = (i + 1) % n;
                    groups[next][pick[next]].0.mul(b).mul(&groups[i][pick[i]].1)
                })
                .collect();
            let image_x = BlockNilpotent::unchecked(space.clone(), blocks).expect("shapes match");
            let at = index[&encode(&image_v, &image_x)];
            if !visited[at] {
                visited[at] = true;
                members.push(at);
            }
        });
        let representative = members
            .iter()
            .map(|&i| encode(&pairs[i].0, &pairs[i].1))
            .min()
            .expect("orbit contains its start");
        orbits.push(CensusOrbit {
            label: classify_pair(v, x)?,
            size: members.len(),
            representative,
        });
    }
    orbits.sort_by(|a, b| a.representative.cmp(&b.representative));

    Ok(Census {
        field_order: F::ORDER,
        group_order,
        pairs: pairs.len(),
        orbits,
    })
}

/// Calls `f` on every tuple in `Π 0..sizes[i]`.
fn for_each_choice(sizes: &[usize], mut f: impl FnMut(&[usize])) {
    if sizes.contains(&0) {
        return;
    }
    let mut pick = vec![0usize; sizes.len()];
    loop {
        f(&pick);
        let Some(pos) = (0..sizes.len()).find(|&i| pick[i] + 1 < sizes[i]) else {
            return;
        };
        pick[pos] += 1;
        pick[..pos].iter_mut().for_each(|p| *p = 0);
    }
}
