//! Acceptance suite: one PASS/FAIL line per criterion. Exact integer
//! comparisons throughout; wall-clock limits are listed next to each check.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use colored_quiver::oracle::{
    brute_force_orbits, build_representative, classify_pair, commutant_dims,
    commutant_dims_formula, explicit_commutant_dims, orbit_dimension_oracle, Rational,
    DEFAULT_BUDGET,
};
use colored_quiver::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(id: u32, name: &str, limit: Option<Duration>, check: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    let result = match (result, limit) {
        (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:?}, limit {l:?}")),
        (r, _) => r,
    };
    match &result {
        Ok(detail) => println!("PASS [{id:>2}] {name}: {detail} ({elapsed:.2?})"),
        Err(why) => println!("FAIL [{id:>2}] {name}: {why} ({elapsed:.2?})"),
    }
    result.is_ok()
}

fn six_row_marking() -> MarkedColoredPartition {
    MarkedColoredPartition::from_rows(
        3,
        &[(5, 2, 1), (5, 1, 3), (3, 1, 1), (3, 0, 0), (2, 0, -1), (1, 0, 1)],
    )
    .unwrap()
}

/// Least-sum bipartition marking dominating `mcp`, by exhaustive search.
fn least_dominating_bipartition(mcp: &MarkedColoredPartition) -> Vec<i64> {
    let lam: Vec<i64> = mcp.lengths().iter().map(|&l| l as i64).collect();
    let low: Vec<i64> = mcp.marks().iter().map(|&m| m.max(0)).collect();
    let mut best: Option<Vec<i64>> = None;
    let mut cand = low.clone();
    loop {
        let ok = (1..cand.len())
            .all(|i| cand[i] <= cand[i - 1] && lam[i] - cand[i] <= lam[i - 1] - cand[i - 1]);
        if ok && best.as_ref().is_none_or(|b| cand.iter().sum::<i64>() < b.iter().sum()) {
            best = Some(cand.clone());
        }
        let Some(pos) = (0..cand.len()).find(|&i| cand[i] < lam[i]) else {
            break;
        };
        cand[pos] += 1;
        cand[..pos].copy_from_slice(&low[..pos]);
    }
    best.expect("the full marking is a bipartition")
}

fn classes(xi: &Signature) -> Vec<OrbitClass> {
    let mut out: Vec<OrbitClass> = enumerate_orbit_classes(xi)
        .into_iter()
        .filter_map(|r| match r.label {
            OrbitLabel::Enhanced(c) => Some(c),
            OrbitLabel::Nilpotent(_) => None,
        })
        .collect();
    out.sort();
    out
}

fn random_marking(rng: &mut ChaCha8Rng) -> (MarkedColoredPartition, CyclicColor) {
    let n = rng.gen_range(1..=4usize);
    let budget = rng.gen_range(0..=12usize);
    let mut rows = Vec::new();
    let mut used = 0;
    while used < budget {
        let len = rng.gen_range(1..=budget - used);
        let color = rng.gen_range(0..n) as i64;
        let mark = rng.gen_range(-(n as i64) + 1..=len as i64);
        rows.push((len, color, mark));
        used += len;
    }
    rows.sort_by_key(|r| std::cmp::Reverse(r.0));
    let m = CyclicColor::new(rng.gen_range(0..n) as i64, n).unwrap();
    let raw = MarkedColoredPartition::from_rows(n, &rows).unwrap();
    // positive rows must lie in class m
    (rho_m(&raw, m), m)
}

fn criterion_1() -> Outcome {
    let cp = ColoredPartition::from_rows(3, &[(5, 0), (4, 0), (4, 2), (2, 1), (2, 0), (1, 1)])
        .map_err(|e| e.to_string())?;
    let start = Instant::now();
    let closed = cp.signature();
    let boxes = cp.signature_by_boxes();
    let elapsed = start.elapsed();
    ensure(closed.counts() == [6, 7, 5], || format!("closed form gave {closed}"))?;
    ensure(boxes.counts() == [6, 7, 5], || format!("box count gave {boxes}"))?;
    ensure(elapsed < Duration::from_millis(1), || format!("signature took {elapsed:?}"))?;
    Ok(format!("{closed} by both routes"))
}

fn criterion_2() -> Outcome {
    let cp = ColoredPartition::from_rows(2, &[(5, 1), (5, 0), (3, 1), (2, 1), (2, 1), (1, 1)])
        .map_err(|e| e.to_string())?;
    let s = cp.signature();
    ensure(s.counts() == [8, 10] && cp.signature_by_boxes() == s, || format!("got {s}"))?;
    Ok(format!("{s}"))
}

fn criterion_3() -> Outcome {
    let mcp = six_row_marking();
    let c = mcp.classify();
    let zero = CyclicColor::new(0, 3).unwrap();
    ensure(c.is_colored_k_bipartition, || "not a colored 3-bipartition".into())?;
    ensure(c.class_color == Some(zero), || format!("class color {:?}", c.class_color))?;
    let tilde = minimal_bipartition(&mcp);
    ensure(tilde.marks() == [3, 3, 1, 1, 1, 1], || format!("got {:?}", tilde.marks()))?;
    let search = least_dominating_bipartition(&mcp);
    ensure(search == tilde.marks(), || format!("search found {search:?}"))?;
    let back = rho_m(&tilde, zero);
    ensure(back == mcp, || format!("round trip gave {back}"))?;
    Ok("class 0, minimal bipartition (3,3,1,1,1,1), round trip exact".into())
}

fn criterion_4() -> Outcome {
    let xi = Signature::new(vec![2, 2]).unwrap();
    let m = CyclicColor::new(0, 2).unwrap();
    let mut dims: Vec<usize> = enumerate_cqbs(&xi, m)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|c| dim_enhanced_orbit(c).map_err(|e| e.to_string()))
        .collect::<std::result::Result<_, _>>()?;
    dims.sort_unstable();
    let zeros = dims.iter().filter(|&&d| d == 0).count();
    let min_pos = dims.iter().copied().find(|&d| d > 0);
    let max = *dims.last().ok_or("no classes")?;
    let at_max = dims.iter().filter(|&&d| d == max).count();
    ensure(zeros == 1, || format!("{zeros} classes of dimension 0"))?;
    ensure(min_pos == Some(2), || format!("least positive dimension {min_pos:?}"))?;
    ensure(max == 8 && at_max >= 2, || format!("max {max} attained {at_max} times"))?;
    Ok(format!("{} classes, dims {dims:?}", dims.len()))
}

fn criterion_5() -> Outcome {
    let mut seen = Vec::new();
    for p in 1..=3usize {
        let xi = Signature::new(vec![p, p]).unwrap();
        let max = enumerate_colored_partitions(&xi)
            .iter()
            .map(dim_nilpotent_orbit)
            .max()
            .ok_or("no partitions")?;
        ensure(max == 2 * p * p - p, || format!("p={p}: max {max}"))?;
        seen.push(max);
    }
    Ok(format!("maxima {seen:?} for p = 1, 2, 3"))
}

fn criterion_6() -> Outcome {
    let cases = [(vec![1usize, 1], Some(9)), (vec![2, 1], None), (vec![1, 1, 1], None)];
    let mut report = Vec::new();
    for (dims, expected) in cases {
        let xi = Signature::new(dims.clone()).unwrap();
        let census = brute_force_orbits(&xi, 2, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let want = classes(&xi);
        ensure(census.orbit_count() == want.len(), || {
            format!("{xi}: {} orbits vs {} classes", census.orbit_count(), want.len())
        })?;
        if let Some(e) = expected {
            ensure(census.orbit_count() == e, || format!("{xi}: expected {e} orbits"))?;
        }
        ensure(census.labels() == want, || format!("{xi}: label multisets differ"))?;
        report.push(format!("{xi}:{}", census.orbit_count()));
    }
    Ok(format!("orbits = classes for {}", report.join(" ")))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        for size in 0..=5 {
            for xi in Signature::all_of_size(n, size) {
                for class in classes(&xi) {
                    let rep = class.default_representative();
                    let (v, x, _) =
                        build_representative::<Rational>(&rep).map_err(|e| e.to_string())?;
                    let formula = dim_orbit_class(&class);
                    let oracle = orbit_dimension_oracle(&v, &x);
                    ensure(formula == oracle, || {
                        format!("{class}: formula {formula}, oracle {oracle}")
                    })?;
                    let label = classify_pair(&v, &x).map_err(|e| e.to_string())?;
                    ensure(label == class, || format!("{class} classified as {label}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} classes agree"))
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        for size in 0..=6 {
            for xi in Signature::all_of_size(n, size) {
                for cp in enumerate_colored_partitions(&xi) {
                    let (_, x, _) =
                        build_representative::<Rational>(&MarkedColoredPartition::unmarked(cp.clone()))
                            .map_err(|e| e.to_string())?;
                    let solved = commutant_dims(&x);
                    let all = cp.size() + 2 * cp.shape().eta();
                    let colored = stabilizer_dimension(&cp);
                    ensure(solved.all == all && solved.colored == colored, || {
                        format!("{cp}: nullspace {solved:?}, formulas ({all}, {colored})")
                    })?;
                    let via_type = commutant_dims_formula(&x).map_err(|e| e.to_string())?;
                    let explicit = explicit_commutant_dims(&x).map_err(|e| e.to_string())?;
                    ensure(via_type == solved && explicit == solved, || {
                        format!("{cp}: recovered {via_type:?}, explicit {explicit:?}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} representatives agree"))
}

fn criterion_9() -> Outcome {
    let mut nilpotent = 0;
    for k in 0..=8usize {
        for shape in Partition::all(k) {
            let colors = vec![0; shape.len()];
            let cp = ColoredPartition::new(shape.clone(), colors, 1).map_err(|e| e.to_string())?;
            let dim = dim_nilpotent_orbit(&cp);
            let by_eta = k * k.saturating_sub(1) - 2 * shape.eta();
            let by_columns =
                k * k - shape.transpose().parts().iter().map(|c| c * c).sum::<usize>();
            ensure(dim == by_eta && dim == by_columns, || {
                format!("{shape}: {dim} vs {by_eta} vs {by_columns}")
            })?;
            nilpotent += 1;
        }
    }
    let mut enhanced = 0;
    let zero = CyclicColor::new(0, 1).unwrap();
    for k in 0..=5usize {
        let xi = Signature::new(vec![k]).unwrap();
        for c in enumerate_cqbs(&xi, zero).map_err(|e| e.to_string())? {
            ensure(c.classify().is_bipartition, || format!("{c} is not a bipartition"))?;
            let want = dim_nilpotent_orbit(c.base()) as i64 + c.positive_mark_total();
            let got = dim_enhanced_orbit(&c).map_err(|e| e.to_string())? as i64;
            ensure(got == want, || format!("{c}: {got} vs {want}"))?;
            enhanced += 1;
        }
    }
    Ok(format!("{nilpotent} partitions, {enhanced} bipartitions"))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..10_000 {
        let (mcp, m) = random_marking(&mut rng);
        let direct = normalize(&mcp, m).map_err(|e| e.to_string())?;
        let composed = rho_m(&rho_bar(&mcp), m);
        ensure(direct == composed, || {
            format!("trial {trial}: {mcp} normalizes to {direct}, composition gives {composed}")
        })?;
    }
    for trial in 0..1_000 {
        let (mcp, _) = random_marking(&mut rng);
        let rows: Vec<_> = mcp
            .rows()
            .map(|r| (r.length, r.color as i64, r.mark.max(0)))
            .collect();
        let mcp = MarkedColoredPartition::from_rows(mcp.modulus(), &rows).unwrap();
        let first = minimal_marking(&mcp).map_err(|e| e.to_string())?;
        let mut state: u64 = rng.gen();
        let other = minimal_marking_with(&mcp, |steps| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 33) as usize % steps.len()
        })
        .map_err(|e| e.to_string())?;
        let last = minimal_marking_with(&mcp, |steps| steps.len() - 1).map_err(|e| e.to_string())?;
        ensure(first.row_equivalent(&other) && first.row_equivalent(&last), || {
            format!("trial {trial}: {mcp} reduces to {first}, {other} and {last}")
        })?;
    }
    Ok("10000 normalizations, 1000 reduction orders".into())
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let results = [
        run(1, "signature of the 18-box colored partition", None, criterion_1),
        run(2, "signature of the signed partition", None, criterion_2),
        run(3, "colored 3-bipartition and its minimal bipartition", None, criterion_3),
        run(4, "enhanced orbit dimensions for (2,2)", Some(secs(1)), criterion_4),
        run(5, "dimension of the colored nilpotent cone for (p,p)", Some(secs(10)), criterion_5),
        run(6, "census over F_2 matches the orbit classes", Some(secs(60)), criterion_6),
        run(7, "orbit dimension formula vs stabilizer computation", Some(secs(120)), criterion_7),
        run(8, "commutant dimensions vs nullspace ranks", None, criterion_8),
        run(9, "single color reduction", None, criterion_9),
        run(10, "normalization and minimal marking coherence", None, criterion_10),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
