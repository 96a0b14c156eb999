//! Orbit calculus for the enhanced colored nilpotent cone of a cyclic quiver.
//!
//! Orbits of `K = Π GL(V_i)` on colored nilpotent endomorphisms are labelled
//! by colored partitions; orbits on pairs `(v, x)` with `v` a colored vector
//! are labelled by colored `n`-bipartitions. The [`oracle`] module checks the
//! combinatorics against exact linear algebra and finite-field enumeration.

pub mod calculus;
pub mod catalog;
pub mod color;
pub mod colored;
pub mod error;
pub mod marking;
pub mod oracle;
pub mod partition;
pub mod signature;

pub use calculus::{
    characteristic_decomposition, class_canonical, delete_rows, is_minimal_marking,
    minimal_bipartition, minimal_marking, minimal_marking_with, normalize, normalize_with,
    reduce_colors, rho_bar, rho_m, union, CharacteristicDecomposition, LowerStep, OrbitClass,
    RaiseStep,
};
pub use catalog::{
    dim_enhanced_orbit, dim_nilpotent_orbit, dim_orbit_class, enhanced_catalog,
    enumerate_colored_partitions, enumerate_cqbs, enumerate_orbit_classes, nilpotent_catalog,
    stabilizer_dimension, OrbitLabel, OrbitRecord,
};
pub use color::CyclicColor;
pub use colored::ColoredPartition;
pub use error::{Error, Result};
pub use marking::{canonical_form, classify_marking, MarkedColoredPartition, MarkingClassification, Row};
pub use partition::{eta, Partition};
pub use signature::Signature;
