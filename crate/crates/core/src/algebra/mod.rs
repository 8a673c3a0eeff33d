//! Finite fields, Latin squares and flat matrices.

pub mod field;
pub mod flat;
pub mod latin;

pub use field::{is_prime, prime_power, FieldTable};
pub use flat::{
    flat_matrix_for, fourier_matrix, paley_hadamard, sylvester_hadamard, FlatKind, FlatMatrix, HadamardMode,
};
pub use latin::{mols_from_field, LatinSquare};
