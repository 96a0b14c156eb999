#![allow(dead_code)]

use colored_quiver::{CyclicColor, MarkedColoredPartition};
use proptest::prelude::*;

/// Rows `(length, color, mark)` sorted by length, total size at most `max_size`.
pub fn rows(n: usize, max_rows: usize, max_size: usize) -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
    prop::collection::vec((1..=6usize, 0..n as i64, 0..1000i64), 0..=max_rows)
        .prop_map(move |raw| {
            let mut out = Vec::new();
            let mut size = 0;
            for (len, color, pick) in raw {
                if size + len > max_size {
                    continue;
                }
                size += len;
                // mark in (-n, len]
                let span = len as i64 + n as i64;
                out.push((len, color, pick % span - (n as i64 - 1)));
            }
            out.sort_by_key(|r| std::cmp::Reverse(r.0));
            out
        })
}

pub fn marking(max_n: usize, max_size: usize) -> impl Strategy<Value = MarkedColoredPartition> {
    (1..=max_n).prop_flat_map(move |n| {
        rows(n, 6, max_size)
            .prop_map(move |r| MarkedColoredPartition::from_rows(n, &r).expect("valid rows"))
    })
}

pub fn marking_with_color(
    max_n: usize,
    max_size: usize,
) -> impl Strategy<Value = (MarkedColoredPartition, CyclicColor)> {
    (1..=max_n).prop_flat_map(move |n| {
        (rows(n, 6, max_size), 0..n as i64).prop_map(move |(r, m)| {
            (
                MarkedColoredPartition::from_rows(n, &r).expect("valid rows"),
                CyclicColor::new(m, n).expect("positive modulus"),
            )
        })
    })
}

pub fn nonnegative(mcp: &MarkedColoredPartition) -> MarkedColoredPartition {
    let n = mcp.modulus();
    let rows: Vec<_> = mcp
        .rows()
        .map(|r| (r.length, r.color as i64, r.mark.max(0)))
        .collect();
    MarkedColoredPartition::from_rows(n, &rows).expect("valid rows")
}
