//! Exact linear algebra over GF(p) and ℚ.

mod field;
mod irreducible;
mod matrix;
mod spin;

pub use field::{FieldTag, Prime, Scalar};
pub use irreducible::{
    brute_force_irreducible_gfp, commutant_dim, is_irreducible, is_irreducible_with, spanned_algebra, Certificate,
    Irreducibility, NortonConfig, DEFAULT_BRUTE_FORCE_BOUND,
};
pub use matrix::{EchelonBasis, Matrix, Vector};
pub use spin::{spin, spin_many};
