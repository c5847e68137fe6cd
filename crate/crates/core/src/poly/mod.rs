//! Exact polynomial arithmetic on the `m x n` variable grid.

mod field;
pub mod groebner;
pub mod hilbert;
mod ideal;
mod monomial;
mod polynomial;

use thiserror::Error;

pub use field::{Field, FieldChoice, PrimeField, Rationals, DEFAULT_PRIME};
pub use ideal::{
    gbei_generators, ideal_equal, ideal_intersection, prime_generators, GroebnerBasis, Ideal,
    IdealListing,
};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use polynomial::{Poly, PolyRing, Term, VariableGrid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("characteristic {0} is not a prime below 2^31 (use 0 for the rationals)")]
    BadCharacteristic(u64),
    #[error("grid {m}x{n} is empty or exceeds the variable limit")]
    GridSize { m: usize, n: usize },
    #[error("rational coefficients grew to {bits} bits; rerun over a prime field")]
    CoefficientGrowth { bits: u64 },
    #[error("rings differ: {0}")]
    RingMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("need at least two rows, got {0}")]
    TooFewRows(usize),
}
