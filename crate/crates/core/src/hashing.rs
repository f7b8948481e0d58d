//! Frequency hashing and time-domain permutations.
//!
//! On-grid frequencies (integer indices modulo `d`) are hashed with
//! `h(x) = a(x - b) mod d` where `a` is a unit modulo `d`. In the time
//! domain the same hash is realized by permuting positions with
//! `g(x) = a(x - c) mod d` and modulating; a diagonal phase correction
//! `e^{2πi·a·c·f}` maps the recovered decomposition back. Frequencies are
//! kept as integer indices everywhere except the API edges so hashing
//! roundtrips are exact.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Modular inverse of `a` modulo `d`, if `gcd(a, d) = 1`.
pub fn mod_inverse(a: u64, d: u64) -> Option<u64> {
    // Extended Euclid on (a mod d, d).
    let (mut old_r, mut r) = ((a % d) as i128, d as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(d as i128) as u64)
}

/// The `(a, b, c, d)` tuple defining the frequency hash `h(x) = a(x-b) mod d`
/// and the time-domain permutation `g(x) = a(x-c) mod d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HashParams {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub a_inv: u64,
}

impl HashParams {
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParam("modulus d must be positive".into()));
        }
        let a_red = a % d;
        if gcd(a, d) != 1 {
            return Err(Error::NotCoprime { a, d });
        }
        // d = 1 degenerates to the zero ring; the inverse is 0 by convention.
        let a_inv = if d == 1 {
            0
        } else {
            mod_inverse(a_red, d).ok_or(Error::NotCoprime { a, d })?
        };
        Ok(Self {
            a: a_red,
            b: b % d,
            c: c % d,
            d,
            a_inv,
        })
    }

    /// Identity parameters: `a = 1`, `b = c = 0`.
    pub fn identity(d: u64) -> Result<Self> {
        Self::new(1, 0, 0, d)
    }

    /// Draw `(a, b, c)` for a power-of-two modulus: `a` uniform over odd
    /// integers in `[1, d)`, `b` and `c` uniform over `[0, d)`.
    pub fn random_pow2<R: rand::Rng + ?Sized>(d: u64, rng: &mut R) -> Result<Self> {
        if !d.is_power_of_two() {
            return Err(Error::NotPowerOfTwo { n: d as usize });
        }
        let a = if d == 1 {
            1
        } else {
            2 * rng.random_range(0..d / 2) + 1
        };
        let b = rng.random_range(0..d);
        let c = rng.random_range(0..d);
        Self::new(a, b, c, d)
    }

    /// Draw `(a, b, c)` for a general modulus; `a` uniform over units mod `d`
    /// via rejection sampling.
    pub fn random_general<R: rand::Rng + ?Sized>(d: u64, rng: &mut R) -> Result<Self> {
        let a = loop {
            let cand = rng.random_range(1..d.max(2));
            if gcd(cand, d) == 1 {
                break cand;
            }
        };
        let b = rng.random_range(0..d);
        let c = rng.random_range(0..d);
        Self::new(a, b, c, d)
    }
}

/// Time-domain permutation `g(x) = a(x - c) mod d`.
pub fn g_perm(x: u64, p: &HashParams) -> u64 {
    let d = p.d as i128;
    ((p.a as i128) * (x as i128 - p.c as i128)).rem_euclid(d) as u64
}

/// Inverse permutation: `g⁻¹(y) = a⁻¹ y + c mod d`.
pub fn g_perm_inverse(y: u64, p: &HashParams) -> u64 {
    let d = p.d as i128;
    ((p.a_inv as i128) * (y as i128) + p.c as i128).rem_euclid(d) as u64
}

/// Frequency hash `h(x) = a(x - b) mod d` on on-grid indices.
pub fn h_freq(x: u64, p: &HashParams) -> u64 {
    let d = p.d as i128;
    ((p.a as i128) * (x as i128 - p.b as i128)).rem_euclid(d) as u64
}

/// Inverse frequency hash: `h⁻¹(y) = a⁻¹ y + b mod d`.
pub fn h_freq_inverse(y: u64, p: &HashParams) -> u64 {
    let d = p.d as i128;
    ((p.a_inv as i128) * (y as i128) + p.b as i128).rem_euclid(d) as u64
}

/// Map a hashed on-grid decomposition back to the original one.
///
/// Frequencies are unhashed with `f_j = h⁻¹(f̃_j)/d` and each weight picks up
/// the diagonal phase `e^{2πi·a·c·f_j}` introduced by the time-domain
/// permutation.
pub fn unhash_decomposition(
    hashed_freqs: &[u64],
    hashed_weights: &[Complex64],
    p: &HashParams,
) -> Result<(Vec<f64>, Vec<Complex64>)> {
    if hashed_freqs.len() != hashed_weights.len() {
        return Err(Error::InvalidParam(
            "frequency and weight lists must have equal length".into(),
        ));
    }
    let mut freqs = Vec::with_capacity(hashed_freqs.len());
    let mut weights = Vec::with_capacity(hashed_weights.len());
    for (&hf, &hw) in hashed_freqs.iter().zip(hashed_weights) {
        if hf >= p.d {
            return Err(Error::InvalidParam(format!(
                "hashed frequency index {hf} out of range [0, {})",
                p.d
            )));
        }
        let idx = h_freq_inverse(hf, p);
        let f = idx as f64 / p.d as f64;
        let phase = 2.0 * PI * (p.a as f64) * (p.c as f64) * f;
        freqs.push(f);
        weights.push(hw * Complex64::from_polar(1.0, phase));
    }
    Ok((freqs, weights))
}

/// All `f ∈ [0, 1)` with `a·f ≡ f̃ (mod 1)`: the `a` preimages
/// `(f̃ + j)/a`, `j = 0..a`, in increasing order.
pub fn enumerate_preimages(f_tilde: f64, a: u64) -> Vec<f64> {
    assert!(a >= 1, "dilation must be positive");
    (0..a).map(|j| (f_tilde + j as f64) / a as f64).collect()
}

/// Vote tally over on-grid frequency candidates.
#[derive(Debug, Clone, Default)]
pub struct FrequencyCandidateTally {
    counts: BTreeMap<u64, u32>,
    rounds: u32,
}

/// Outcome of [`vote_candidates`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoteOutcome {
    /// Winning indices, highest count first; ties broken by lower index.
    pub indices: Vec<u64>,
    /// Set when fewer than `k` distinct indices were ever seen.
    pub insufficient_rounds: bool,
}

impl FrequencyCandidateTally {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record one round of candidates. Duplicates within a round count once,
    /// so no index can exceed the round count.
    pub fn add_round<I: IntoIterator<Item = u64>>(&mut self, candidates: I) {
        let unique: BTreeSet<u64> = candidates.into_iter().collect();
        for idx in unique {
            *self.counts.entry(idx).or_insert(0) += 1;
        }
        self.rounds += 1;
    }

    /// Merge another tally (e.g. accumulated by a parallel worker).
    pub fn merge(&mut self, other: &FrequencyCandidateTally) {
        for (&idx, &n) in &other.counts {
            *self.counts.entry(idx).or_insert(0) += n;
        }
        self.rounds += other.rounds;
    }

    pub fn rounds(&self) -> u32 {
        self.rounds
    }

    pub fn count(&self, idx: u64) -> u32 {
        self.counts.get(&idx).copied().unwrap_or(0)
    }

    /// The `k` indices with the highest counts. Ties break toward the lower
    /// index; if fewer than `k` indices were seen, all of them are returned
    /// and the insufficient flag is set.
    pub fn top_k(&self, k: usize) -> VoteOutcome {
        let mut ranked: Vec<(u64, u32)> = self.counts.iter().map(|(&i, &n)| (i, n)).collect();
        ranked.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
        let insufficient = ranked.len() < k;
        VoteOutcome {
            indices: ranked.into_iter().take(k).map(|(i, _)| i).collect(),
            insufficient_rounds: insufficient,
        }
    }
}

/// Tally a stream of candidate sets and return the top-`k` indices.
pub fn vote_candidates<I, S>(candidate_sets: I, k: usize) -> VoteOutcome
where
    I: IntoIterator<Item = S>,
    S: IntoIterator<Item = u64>,
{
    let mut tally = FrequencyCandidateTally::new();
    for set in candidate_sets {
        tally.add_round(set);
    }
    tally.top_k(k)
}
