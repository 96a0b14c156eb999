//! Shared inputs for the benchmarks.

use colored_quiver::{ColoredPartition, MarkedColoredPartition};

pub fn eighteen_boxes() -> ColoredPartition {
    ColoredPartition::from_rows(3, &[(5, 0), (4, 0), (4, 2), (2, 1), (2, 0), (1, 1)])
        .expect("valid rows")
}

pub fn six_row_marking() -> MarkedColoredPartition {
    MarkedColoredPartition::from_rows(
        3,
        &[(5, 2, 1), (5, 1, 3), (3, 1, 1), (3, 0, 0), (2, 0, -1), (1, 0, 1)],
    )
    .expect("valid rows")
}
