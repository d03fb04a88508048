//! Apostol–Bernoulli polynomials B_n(v; λ) from the generating function
//! t·e^{vt}/(λe^t − 1) = Σ_n B_n(v; λ) tⁿ/n!.
//!
//! They give the Lerch transcendent at non-positive integer order in closed
//! form: Φ(λ, −n, v) = −B_{n+1}(v; λ)/(n+1) for λ ≠ 1.

use num_complex::Complex64;

use crate::{Error, Result};

const MAX_ORDER: usize = 64;

/// Classical Bernoulli numbers B_0..B_24 (odd ones above B_1 vanish).
pub(crate) const BERNOULLI_NUMBERS: [f64; 25] = [
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
    0.0,
    854513.0 / 138.0,
    0.0,
    -236364091.0 / 2730.0,
];

/// B_n(v; λ). For λ = 1 this is the classical Bernoulli polynomial B_n(v).
///
/// Triangular recurrence from the generating function: writing the
/// coefficient identity of tⁿ/n! gives, for λ ≠ 1,
/// B_n = (n v^{n−1} − λ Σ_{k<n} C(n,k) B_k) / (λ − 1), with B_0 = 0.
pub fn apostol_bernoulli(n: usize, v: Complex64, lambda: Complex64) -> Result<Complex64> {
    if n > MAX_ORDER {
        return Err(Error::Overflow(format!(
            "Apostol-Bernoulli order {n} > {MAX_ORDER}"
        )));
    }
    if (lambda - Complex64::new(1.0, 0.0)).norm() < 1e-14 {
        return Ok(bernoulli_polynomial(n, v));
    }
    let b = apostol_row(n, v, lambda);
    let out = b[n];
    if out.re.is_finite() && out.im.is_finite() {
        Ok(out)
    } else {
        Err(Error::NonFinite(format!("B_{n}(v; lambda)")))
    }
}

/// All of B_0..B_n(v; λ) in one pass; used when a closed form needs two
/// adjacent orders.
pub(crate) fn apostol_row(n: usize, v: Complex64, lambda: Complex64) -> Vec<Complex64> {
    let lm1 = lambda - 1.0;
    let mut b = vec![Complex64::new(0.0, 0.0); n + 1];
    // v powers v^0..v^{n-1}
    let mut vpow = Complex64::new(1.0, 0.0);
    let mut binom = vec![0.0f64; n + 1];
    for m in 1..=n {
        // binomials C(m, k) built row by row, in place
        binom[0] = 1.0;
        for k in (1..=m).rev() {
            binom[k] = binom[k] + binom[k - 1];
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..m {
            acc += binom[k] * b[k];
        }
        b[m] = (m as f64 * vpow - lambda * acc) / lm1;
        vpow *= v;
    }
    b
}

/// Classical Bernoulli polynomial B_n(v) = Σ_k C(n,k) B_k v^{n−k}.
pub fn bernoulli_polynomial(n: usize, v: Complex64) -> Complex64 {
    assert!(n <= MAX_ORDER);
    if n < BERNOULLI_NUMBERS.len() {
        // Horner-style accumulation over descending powers of v.
        let mut acc = Complex64::new(0.0, 0.0);
        let mut binom = 1.0f64;
        // term k: C(n,k) B_k v^{n-k}; iterate k ascending, powers descending.
        let mut vpows = vec![Complex64::new(1.0, 0.0); n + 1];
        for j in 1..=n {
            vpows[j] = vpows[j - 1] * v;
        }
        for k in 0..=n {
            let bk = BERNOULLI_NUMBERS[k];
            if bk != 0.0 {
                acc += binom * bk * vpows[n - k];
            }
            binom = binom * (n - k) as f64 / (k + 1) as f64;
        }
        acc
    } else {
        // Above B_24 fall back to the λ→1 limit via the recurrence for the
        // classical polynomials: B_n(v) = Σ C(n,k) B_k v^{n-k} needs B_k
        // numbers beyond the table; build them with the standard recurrence.
        let nums = bernoulli_numbers(n);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut binom = 1.0f64;
        let mut vpows = vec![Complex64::new(1.0, 0.0); n + 1];
        for j in 1..=n {
            vpows[j] = vpows[j - 1] * v;
        }
        for k in 0..=n {
            if nums[k] != 0.0 {
                acc += binom * nums[k] * vpows[n - k];
            }
            binom = binom * (n - k) as f64 / (k + 1) as f64;
        }
        acc
    }
}

fn bernoulli_numbers(n: usize) -> Vec<f64> {
    // Σ_{k=0}^{m} C(m+1,k) B_k = 0 for m ≥ 1.
    let mut b = vec![0.0f64; n + 1];
    b[0] = 1.0;
    for m in 1..=n {
        let mut acc = 0.0;
        let mut binom = 1.0f64; // C(m+1, 0)
        for k in 0..m {
            acc += binom * b[k];
            binom = binom * (m + 1 - k) as f64 / (k + 1) as f64;
        }
        b[m] = -acc / (m as f64 + 1.0);
    }
    b
}
