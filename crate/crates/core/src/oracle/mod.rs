//! Exact linear algebra over the rationals and small prime fields, used to
//! check the combinatorial labels against actual matrices.

pub mod census;
pub mod commutant;
pub mod field;
pub mod jordan;
pub mod matrix;
pub mod space;

pub use census::{brute_force_orbits, brute_force_orbits_over, budget_from_env, Census, CensusOrbit, DEFAULT_BUDGET};
pub use commutant::{
    commutant_basis, commutant_dims, commutant_dims_formula, explicit_commutant_basis,
    explicit_commutant_dims, orbit_dimension_oracle, vector_span_dims, CommutantDims,
};
pub use field::{format_rational, parse_rational, FiniteField, Field, Fp, Rational, F2, F3, F5, F7};
pub use jordan::{
    build_representative, classify_pair, colored_jordan_basis, cyclic_span_dim, jordan_type,
    vector_degree, JordanBasisData,
};
pub use matrix::{rank_of, EchelonBasis, Matrix};
pub use space::{BlockNilpotent, ColoredSpace, ColoredVector, GroupElement};
