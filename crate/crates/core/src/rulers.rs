//! Sparse ruler constructions.
//!
//! A ruler is a set of integer positions whose pairwise differences cover a
//! required set of distances, so the autocovariance at all those lags can be
//! measured while reading only the ruler positions of each sample. Three
//! constructions live here:
//!
//! * [`classic_ruler`]: two-block ruler whose coarray covers `{0, …, d-1}`.
//! * [`ultra_sparse_ruler_type1`]: the randomly dilated/shifted two-block
//!   ruler covering `{a(s - c) mod d : s ≤ k}` cyclically with
//!   `≤ 2⌈√k⌉ + 1` elements. Elements of the pre-reduction set may be
//!   negative or exceed `d`; only residues matter, so they are reduced
//!   mod `d` immediately and deduplicated.
//! * [`ultra_sparse_ruler_type2`]: a true (non-cyclic) ruler for
//!   `{0, a, 2a, …, ka}` under the no-wrap cap `a ≤ b_frac·d/k`.
//!
//! [`union_ruler_for_sft`] unions one Type-1 ruler per sparse-FFT block so
//! that every position any block reads is measured.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hashing::{gcd, HashParams};
use crate::sfft::{plan_blocks, SftConfig};

/// Sorted set of distinct positions in `[0, d)` together with its modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ruler {
    elements: Vec<u64>,
    modulus: u64,
    block_tag: Option<usize>,
}

impl Ruler {
    pub fn new<I: IntoIterator<Item = u64>>(elements: I, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParam("modulus must be positive".into()));
        }
        let set: BTreeSet<u64> = elements.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidParam("ruler must have at least one element".into()));
        }
        if let Some(&max) = set.iter().next_back() {
            if max >= modulus {
                return Err(Error::ElementOutOfRange {
                    element: max as i64,
                    d: modulus,
                });
            }
        }
        Ok(Self {
            elements: set.into_iter().collect(),
            modulus,
            block_tag: None,
        })
    }

    pub fn with_block_tag(mut self, tag: usize) -> Self {
        self.block_tag = Some(tag);
        self
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn block_tag(&self) -> Option<usize> {
        self.block_tag
    }

    /// Union of several rulers over the same modulus.
    pub fn union<'a, I: IntoIterator<Item = &'a Ruler>>(rulers: I, modulus: u64) -> Result<Self> {
        let mut all = BTreeSet::new();
        for r in rulers {
            if r.modulus != modulus {
                return Err(Error::InvalidParam(format!(
                    "cannot union rulers with moduli {} and {modulus}",
                    r.modulus
                )));
            }
            all.extend(r.elements.iter().copied());
        }
        Ruler::new(all, modulus)
    }
}

/// Parameters for the random ultra-sparse constructions.
#[derive(Debug, Clone, Copy)]
pub struct RulerParams {
    /// Ambient dimension / modulus.
    pub d: u64,
    /// Target distance count (`1 ≤ k ≤ d`).
    pub k: u64,
    /// Dilation, coprime to `d`.
    pub a: u64,
    /// Shift (Type-1 only).
    pub c: u64,
    /// Type-2 dilation cap fraction in `(0, 1]`: requires `a ≤ b_frac·d/k`.
    pub b_frac: f64,
}

impl RulerParams {
    pub fn new(d: u64, k: u64, a: u64, c: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParam("d must be positive".into()));
        }
        if k == 0 || k > d {
            return Err(Error::InvalidParam(format!("k = {k} must satisfy 1 <= k <= d = {d}")));
        }
        if gcd(a, d) != 1 {
            return Err(Error::NotCoprime { a, d });
        }
        Ok(Self { d, k, a, c: c % d, b_frac: 1.0 })
    }

    pub fn with_b_frac(mut self, b_frac: f64) -> Result<Self> {
        if !(b_frac > 0.0 && b_frac <= 1.0) {
            return Err(Error::InvalidParam(format!(
                "b_frac = {b_frac} must lie in (0, 1]"
            )));
        }
        self.b_frac = b_frac;
        Ok(self)
    }
}

/// Ceiling of the integer square root.
fn isqrt_ceil(k: u64) -> u64 {
    if k == 0 {
        return 0;
    }
    let mut r = (k as f64).sqrt().round() as u64;
    while r.saturating_mul(r) < k {
        r += 1;
    }
    while r > 1 && (r - 1) * (r - 1) >= k {
        r -= 1;
    }
    r
}

/// Two-block element set `{0, a, …, ⌈√k⌉a} ∪ {ja⌈√k⌉ - ac : j = 1..⌈√k⌉}`
/// reduced mod `d`.
fn two_block_elements(d: u64, k: u64, a: u64, c: u64) -> BTreeSet<u64> {
    let s = isqrt_ceil(k) as i128;
    let (a, c, di) = (a as i128, c as i128, d as i128);
    let mut q = BTreeSet::new();
    for i in 0..=s {
        q.insert((a * i).rem_euclid(di) as u64);
    }
    for j in 1..=s {
        q.insert((j * a * s - a * c).rem_euclid(di) as u64);
    }
    q
}

/// Classic sparse ruler: the two-block shape with `a = 1`, `c = 0`,
/// `k = d - 1`, whose cyclic coarray covers every distance in `{0, …, d-1}`
/// with at most `2⌈√(d-1)⌉ + 1` elements.
pub fn classic_ruler(d: u64) -> Result<Ruler> {
    if d == 0 {
        return Err(Error::InvalidParam("d must be positive".into()));
    }
    Ruler::new(two_block_elements(d, d - 1, 1, 0), d)
}

/// Type-1 random ultra-sparse ruler (cyclic).
///
/// Covers `g(s) = a(s - c) mod d` for every `s ∈ {0, …, k}` in the cyclic
/// sense: some pair realizes either `g(s)` or `d - g(s)` as a plain
/// difference.
pub fn ultra_sparse_ruler_type1(params: &RulerParams) -> Result<Ruler> {
    Ruler::new(two_block_elements(params.d, params.k, params.a, params.c), params.d)
}

/// Type-2 random ultra-sparse ruler (true, non-cyclic).
///
/// A ruler for `{0, a, 2a, …, ka}` with all elements below `d`; the shift is
/// ignored and the dilation must obey `a ≤ b_frac·d/k` so nothing wraps.
pub fn ultra_sparse_ruler_type2(params: &RulerParams) -> Result<Ruler> {
    let cap = params.b_frac * params.d as f64 / params.k as f64;
    if params.a as f64 > cap {
        return Err(Error::DilationExceedsCap { a: params.a, cap });
    }
    // Base ruler for {0, …, k} confined to [0, k]: first block {0..s},
    // stride block {2s, …, ms}, plus the endpoint k. Scaling by `a` then
    // yields a ruler for {0, a, …, ka} with maximum element ka.
    let k = params.k;
    let s = isqrt_ceil(k);
    let m = k / s.max(1);
    let mut base = BTreeSet::new();
    for i in 0..=s.min(k) {
        base.insert(i);
    }
    for j in 2..=m {
        base.insert(j * s);
    }
    base.insert(k);
    let max_elem = k * params.a;
    if max_elem >= params.d {
        return Err(Error::ElementOutOfRange {
            element: max_elem as i64,
            d: params.d,
        });
    }
    Ruler::new(base.into_iter().map(|e| e * params.a), params.d)
}

/// Difference coarray of a ruler.
///
/// Non-cyclic: all plain differences `r_i - r_j` with `r_i ≥ r_j`.
/// Cyclic: all differences reduced mod `d`; the result is closed under
/// `s ↔ d - s` because both orders of each pair are included.
pub fn difference_coarray(r: &Ruler, cyclic: bool) -> BTreeSet<u64> {
    let d = r.modulus as i128;
    let mut out = BTreeSet::new();
    for &ri in &r.elements {
        for &rj in &r.elements {
            if cyclic {
                out.insert((ri as i128 - rj as i128).rem_euclid(d) as u64);
            } else if ri >= rj {
                out.insert(ri - rj);
            }
        }
    }
    out
}

/// Exhaustive check of the cyclic-ruler property: for every `s ∈ {0, …, k}`,
/// either `g(s) = a(s-c) mod d` or `d - g(s)` occurs as a plain difference of
/// ruler elements. This is the test oracle for the Type-1 construction.
pub fn verify_cyclic_ruler(r: &Ruler, k: u64, a: u64, c: u64) -> bool {
    let d = r.modulus as i128;
    let mut plain = BTreeSet::new();
    for &ri in &r.elements {
        for &rj in &r.elements {
            if ri >= rj {
                plain.insert(ri - rj);
            }
        }
    }
    for s in 0..=k {
        let g = ((a as i128) * (s as i128 - c as i128)).rem_euclid(d) as u64;
        let covered = plain.contains(&g) || (g != 0 && plain.contains(&(r.modulus - g)));
        if !covered {
            return false;
        }
    }
    true
}

/// Per-block descriptor produced by [`union_ruler_for_sft`].
#[derive(Debug, Clone)]
pub struct BlockRuler {
    pub params: HashParams,
    pub ruler: Ruler,
}

/// Build the union ruler backing one sparse-FFT invocation.
///
/// Plans the FFT's blocks for `(d, k, delta)` with fresh `(a odd, b, c)` per
/// block drawn from `rng`, covers each block's permuted prefix with a Type-1
/// ruler of at most `2⌈√(L-1)⌉ + 1` elements, and returns the union plus the
/// per-block descriptors.
pub fn union_ruler_for_sft<R: rand::Rng + ?Sized>(
    d: u64,
    k: usize,
    delta: f64,
    rng: &mut R,
) -> Result<(Ruler, Vec<BlockRuler>)> {
    let cfg = SftConfig::for_dims(d as usize, k, delta, 0)?;
    let blocks = plan_blocks(d as usize, &cfg, rng)?;
    let mut descriptors = Vec::with_capacity(blocks.len());
    for (tag, block) in blocks.iter().enumerate() {
        let ruler = ruler_for_block(d, &block.params, block.positions.len())?.with_block_tag(tag);
        descriptors.push(BlockRuler {
            params: block.params,
            ruler,
        });
    }
    let union = Ruler::union(descriptors.iter().map(|b| &b.ruler), d)?;
    Ok((union, descriptors))
}

/// Type-1 ruler covering one block's permuted prefix of length `block_len`,
/// i.e. the positions `{a(j - c) mod d : j < block_len}`.
pub fn ruler_for_block(d: u64, params: &HashParams, block_len: usize) -> Result<Ruler> {
    if block_len == 0 {
        return Err(Error::InvalidParam("block length must be positive".into()));
    }
    let rp = RulerParams::new(d, (block_len as u64 - 1).max(1), params.a, params.c)?;
    if block_len == 1 {
        // Single position a(0 - c): one pair suffices.
        return Ruler::new(two_block_elements(d, 0, params.a, params.c), d);
    }
    ultra_sparse_ruler_type1(&rp)
}
