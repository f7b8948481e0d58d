//! Estimation of nearly low-rank circulant covariance matrices from
//! compressed vector samples.
//!
//! The pipeline combines three ingredients:
//!
//! * **Random ultra-sparse rulers** ([`rulers`]): index sets of size
//!   `O(sqrt(k))` whose pairwise differences cover a randomly dilated and
//!   shifted set of `k + 1` distances, so the autocovariance can be measured
//!   at exactly the lags a sparse Fourier transform wants to read.
//! * **Frequency hashing** ([`hashing`]): the modular map
//!   `h(x) = a(x - b) mod d` and its time-domain companion permutation
//!   `g(x) = a(x - c) mod d`, which together spread clustered frequencies
//!   apart before recovery and are inverted exactly afterwards.
//! * **A hashing-based sparse FFT** ([`sfft`]): reads only prefixes of
//!   randomly permuted/modulated inputs, folds them into bins, locates
//!   dominant frequencies by multi-scale phase estimation and recovers a
//!   `k`-sparse spectrum.
//!
//! [`estimator`] wires these into the end-to-end covariance estimator:
//! average lagged products over ruler pairs, sparse-transform the masked
//! autocovariance, and return the circulant estimate `Toep(z)` by its first
//! column and spectrum. [`synth`] generates ground-truth low-rank circulant
//! models and Gaussian samples restricted to ruler coordinates, [`music`]
//! provides the subspace frequency-finding baseline, and [`experiments`]
//! runs seeded, reproducible sweeps over both.

pub mod error;
pub mod estimator;
pub mod experiments;
pub mod fft;
pub mod hashing;
pub mod music;
pub mod rulers;
pub mod sfft;
pub mod synth;

pub use error::{Error, Result};
