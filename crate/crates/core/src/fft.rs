//! Unitary radix-2 FFT.
//!
//! Convention used throughout the crate: the forward transform is
//! `x̂_f = d^{-1/2} · Σ_t x_t e^{-2πi f t / d}` and the inverse restores
//! `x_t = d^{-1/2} · Σ_f x̂_f e^{+2πi f t / d}`, so both directions are
//! unitary and Parseval's identity `‖x‖₂ = ‖x̂‖₂` holds exactly (up to
//! rounding). Lengths must be powers of two.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Precomputed transform plan for one power-of-two length.
///
/// Reusable and cheap to apply; the hot accumulation loops in the estimator
/// keep one plan alive across hundreds of thousands of samples.
#[derive(Debug, Clone)]
pub struct Fft {
    n: usize,
    // e^{-2 pi i k / n} for k in [0, n/2)
    twiddles: Vec<Complex64>,
}

impl Fft {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || !n.is_power_of_two() {
            return Err(Error::NotPowerOfTwo { n });
        }
        let twiddles = (0..n / 2)
            .map(|k| Complex64::from_polar(1.0, -2.0 * PI * k as f64 / n as f64))
            .collect();
        Ok(Self { n, twiddles })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn transform(&self, buf: &mut [Complex64], conjugate: bool) {
        let n = self.n;
        assert_eq!(buf.len(), n, "buffer length must match the plan");

        // Bit-reversal permutation.
        let mut j = 0usize;
        for i in 1..n {
            let mut bit = n >> 1;
            while j & bit != 0 {
                j ^= bit;
                bit >>= 1;
            }
            j |= bit;
            if i < j {
                buf.swap(i, j);
            }
        }

        let mut len = 2;
        while len <= n {
            let half = len / 2;
            let stride = n / len;
            for start in (0..n).step_by(len) {
                for k in 0..half {
                    let mut w = self.twiddles[k * stride];
                    if conjugate {
                        w = w.conj();
                    }
                    let u = buf[start + k];
                    let v = buf[start + k + half] * w;
                    buf[start + k] = u + v;
                    buf[start + k + half] = u - v;
                }
            }
            len <<= 1;
        }

        let scale = 1.0 / (n as f64).sqrt();
        for x in buf.iter_mut() {
            *x *= scale;
        }
    }

    /// In-place forward transform (negative exponent, `1/sqrt(n)` scale).
    pub fn forward(&self, buf: &mut [Complex64]) {
        self.transform(buf, false);
    }

    /// In-place inverse transform (positive exponent, `1/sqrt(n)` scale).
    pub fn inverse(&self, buf: &mut [Complex64]) {
        self.transform(buf, true);
    }
}

/// Forward unitary DFT of a complex vector.
pub fn dense_fft(x: &[Complex64]) -> Result<Vec<Complex64>> {
    let plan = Fft::new(x.len())?;
    let mut buf = x.to_vec();
    plan.forward(&mut buf);
    Ok(buf)
}

/// Inverse unitary DFT of a complex vector.
pub fn dense_ifft(x: &[Complex64]) -> Result<Vec<Complex64>> {
    let plan = Fft::new(x.len())?;
    let mut buf = x.to_vec();
    plan.inverse(&mut buf);
    Ok(buf)
}

/// Forward unitary DFT of a real vector.
pub fn dense_fft_real(x: &[f64]) -> Result<Vec<Complex64>> {
    let plan = Fft::new(x.len())?;
    let mut buf: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    plan.forward(&mut buf);
    Ok(buf)
}

/// ℓ2 norm of a complex slice.
pub fn l2_norm(x: &[Complex64]) -> f64 {
    x.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
}

/// ℓ2 norm of a real slice.
pub fn l2_norm_real(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent quadratic-time DFT used as the oracle for the fast path.
    fn dft_quadratic(x: &[Complex64]) -> Vec<Complex64> {
        let n = x.len();
        let scale = 1.0 / (n as f64).sqrt();
        (0..n)
            .map(|f| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (t, &v) in x.iter().enumerate() {
                    let angle = -2.0 * PI * (f * t % n) as f64 / n as f64;
                    acc += v * Complex64::from_polar(1.0, angle);
                }
                acc * scale
            })
            .collect()
    }

    fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn impulse_transforms_to_flat_spectrum() {
        let d = 16;
        let mut x = vec![Complex64::new(0.0, 0.0); d];
        x[0] = Complex64::new(1.0, 0.0);
        let spec = dense_fft(&x).unwrap();
        let expect = 1.0 / (d as f64).sqrt();
        for v in &spec {
            assert!((v.re - expect).abs() < 1e-12 && v.im.abs() < 1e-12);
        }
    }

    #[test]
    fn constant_transforms_to_scaled_impulse() {
        let d = 32;
        let x = vec![Complex64::new(1.0, 0.0); d];
        let spec = dense_fft(&x).unwrap();
        assert!((spec[0].re - (d as f64).sqrt()).abs() < 1e-12);
        for v in &spec[1..] {
            assert!(v.norm() < 1e-12);
        }
    }

    #[test]
    fn matches_quadratic_dft() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for d in [16usize, 64, 256] {
            let x: Vec<Complex64> = (0..d)
                .map(|_| {
                    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
                })
                .collect();
            let fast = dense_fft(&x).unwrap();
            let slow = dft_quadratic(&x);
            assert!(
                max_abs_diff(&fast, &slow) < 1e-10,
                "fast/slow mismatch at d = {d}"
            );
        }
    }

    #[test]
    fn rejects_non_power_of_two() {
        let x = vec![Complex64::new(0.0, 0.0); 12];
        assert!(matches!(
            dense_fft(&x),
            Err(Error::NotPowerOfTwo { n: 12 })
        ));
        assert!(Fft::new(0).is_err());
    }

    #[test]
    fn length_one_is_identity() {
        let x = vec![Complex64::new(3.5, -1.0)];
        let spec = dense_fft(&x).unwrap();
        assert_eq!(spec[0], x[0]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn roundtrip_and_parseval(
            seed in 0u64..1 << 48,
            log_d in 1u32..11,
        ) {
            use rand::prelude::*;
            let d = 1usize << log_d;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let x: Vec<Complex64> = (0..d)
                .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect();
            let spec = dense_fft(&x).unwrap();
            let back = dense_ifft(&spec).unwrap();
            prop_assert!(max_abs_diff(&x, &back) < 1e-12);
            prop_assert!((l2_norm(&x) - l2_norm(&spec)).abs() < 1e-12 * (1.0 + l2_norm(&x)));
        }
    }
}
