//! Iterated Aitken Δ² acceleration for conditionally convergent unit-circle
//! series. Works on a window of trailing partial sums; convergence is
//! declared once three successive transform diagonals agree.

use num_complex::Complex64;

pub struct Accelerated {
    pub value: Complex64,
    pub est_error: f64,
    pub converged: bool,
}

/// Accelerate the sequence of partial sums in `window`. Returns the value of
/// the deepest Δ² diagonal and the spread of its last three entries.
pub fn iterated_aitken(window: &[Complex64]) -> Accelerated {
    let mut cur = window.to_vec();
    let mut diag: Vec<Complex64> = vec![*window.last().unwrap()];
    while cur.len() >= 3 {
        let mut next = Vec::with_capacity(cur.len() - 2);
        for i in 0..cur.len() - 2 {
            let d1 = cur[i + 1] - cur[i];
            let d2 = cur[i + 2] - cur[i + 1] - d1;
            if d2.norm() == 0.0 {
                next.push(cur[i + 2]);
            } else {
                let step = cur[i + 2] - cur[i + 1];
                next.push(cur[i + 2] - step * step / d2);
            }
        }
        diag.push(*next.last().unwrap());
        cur = next;
    }
    let k = diag.len();
    let value = diag[k - 1];
    let (est, converged) = if k >= 3 {
        let a = (diag[k - 1] - diag[k - 2]).norm();
        let b = (diag[k - 2] - diag[k - 3]).norm();
        let scale = value.norm().max(1e-300);
        (a.max(b), a <= 1e-13 * scale && b <= 1e-13 * scale)
    } else {
        ((diag[k - 1] - diag[0]).norm(), false)
    };
    Accelerated {
        value,
        est_error: est,
        converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_harmonic() {
        // Σ (−1)^{n+1}/n = log 2; plain partial sums converge like 1/n.
        let mut sums = Vec::new();
        let mut acc = Complex64::new(0.0, 0.0);
        for n in 1..=30 {
            acc += Complex64::new((-1.0f64).powi(n + 1) / n as f64, 0.0);
            sums.push(acc);
        }
        let a = iterated_aitken(&sums);
        assert!((a.value.re - std::f64::consts::LN_2).abs() < 1e-14);
        assert!(a.converged);
    }

    #[test]
    fn oscillating_complex_series() {
        // Σ z^n/(n+1) = −log(1−z)/z at z = e^{i 2π/3}.
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let mut sums = Vec::new();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut zp = Complex64::new(1.0, 0.0);
        for n in 0..40 {
            acc += zp / (n as f64 + 1.0);
            zp *= z;
            sums.push(acc);
        }
        let want = -(Complex64::new(1.0, 0.0) - z).ln() / z;
        let a = iterated_aitken(&sums);
        assert!((a.value - want).norm() < 1e-13, "{} vs {}", a.value, want);
    }
}
