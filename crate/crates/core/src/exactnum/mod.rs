//! Exact scalar, polynomial and symmetric-matrix kernels.
//!
//! Everything here is exact rational arithmetic; nothing approximates a root.

mod intpoly;
mod matrix;
mod poly;
mod rational;

pub use intpoly::{
    gcd_degree, int_sign_variations_at_infinity, primitive_part, primitive_remainder_sequence,
    IntPoly,
};
pub use matrix::{
    characteristic_polynomial, hermite_matrix, newton_sums, rank_and_signature, solve_linear,
    SymMatrix,
};
pub use poly::{
    coefficient_variations, gcd, sign_variations_at_infinity, signed_remainder_sequence, UniPoly,
};
pub use rational::{
    bit, format_rational, parse_rational, rat, ratio, sign_of, ComplexRational, Rational,
};
