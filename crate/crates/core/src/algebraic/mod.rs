//! Realizations by group endomorphisms: finite fields, the torsion-module
//! matrix construction and small finite groups.

pub mod construct;
pub mod field;
pub mod group;
pub mod matrix;

pub use construct::{
    construct_matrix, ell_algebraically_realizable, ell_sequence, torsion_fix_counts, two_adic_five,
    verify_matrix_pair, ConstructionParams, MatrixPair,
};
pub use field::{field_generator, PrimeField};
pub use group::{
    enumerate_endomorphisms, enumerate_endomorphisms_exhaustive, find_realizing_endomorphism, fix_counts,
    Endomorphism, FiniteGroup,
};
pub use matrix::IntMatrix;
