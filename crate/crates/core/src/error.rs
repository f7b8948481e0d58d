//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Dilation `a` must be a unit modulo `d`.
    #[error("dilation a = {a} is not coprime to d = {d}")]
    NotCoprime { a: u64, d: u64 },

    /// Type-2 rulers forbid wrap-around; the dilation cap was exceeded.
    #[error("dilation a = {a} exceeds the cap {cap} (b_frac * d / k)")]
    DilationExceedsCap { a: u64, cap: f64 },

    /// The construction would place an element outside `[0, d)`.
    #[error("ruler element {element} wraps past the modulus {d}")]
    ElementOutOfRange { element: i64, d: u64 },

    /// Transform lengths must be powers of two.
    #[error("length {n} is not a power of two")]
    NotPowerOfTwo { n: usize },

    /// Generic parameter validation failure.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// The sparse FFT tried to read an index outside its planned domain.
    #[error("masked read at index {index} is missing (planner/ruler mismatch)")]
    MissingEntry { index: usize },

    /// A sample vector did not match the ruler it was drawn for.
    #[error("sample has {got} entries, ruler expects {expected}")]
    SampleShapeMismatch { expected: usize, got: usize },

    /// The restricted covariance factorization found real negative mass.
    #[error("covariance on the ruler is indefinite (min eigenvalue {min_eig:.3e})")]
    IndefiniteCovariance { min_eig: f64 },

    /// Not enough measurements/blocks for the requested operation.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// Frequency packing with the requested minimum gap is impossible.
    #[error("cannot pack {k} conjugate-closed frequencies with min gap {min_gap}")]
    InfeasiblePacking { k: usize, min_gap: f64 },

    /// The recovered spectrum is not conjugate symmetric enough for a real
    /// first column.
    #[error("spectrum asymmetry: imaginary residue {residue:.3e} of column norm")]
    AsymmetricSpectrum { residue: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
