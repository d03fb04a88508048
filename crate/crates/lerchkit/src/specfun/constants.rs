//! Cached fundamental constants derived from the zeta engine.

use num_complex::Complex64;
use std::sync::OnceLock;

use super::hurwitz::hurwitz_zeta_sderiv;

/// Glaisher–Kinkelin constant A = exp(1/12 − ζ′(−1)) ≈ 1.2824271291.
/// Computed once from the order-derivative route and cached.
pub fn glaisher() -> f64 {
    static A: OnceLock<f64> = OnceLock::new();
    *A.get_or_init(|| {
        let zp = hurwitz_zeta_sderiv(Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0))
            .expect("zeta'(-1) is inside the supported regime");
        (1.0 / 12.0 - zp.value.re).exp()
    })
}

#[cfg(test)]
mod tests {
    use super::super::hurwitz::hurwitz_zeta;
    use super::*;

    #[test]
    fn eleven_digits_and_defining_relation() {
        let a = glaisher();
        assert!((a - 1.2824271291006226).abs() < 1e-9, "{a}");
        assert!(a > 1.0);
        // 1/12 − ζ′(−1) − log A = 0 by construction; re-derive ζ′(−1) from
        // two unrelated difference schemes as the independent check.
        let f = |s: f64| {
            hurwitz_zeta(Complex64::new(s, 0.0), Complex64::new(1.0, 0.0))
                .unwrap()
                .value
                .re
        };
        // Five-point stencil at h = 2e-3 (not the implementation's ladder).
        let h = 2e-3;
        let d5 = (f(-1.0 - 2.0 * h) - 8.0 * f(-1.0 - h) + 8.0 * f(-1.0 + h) - f(-1.0 + 2.0 * h))
            / (12.0 * h);
        // Plain central difference at a different step.
        let h2 = 7e-4;
        let d2 = (f(-1.0 + h2) - f(-1.0 - h2)) / (2.0 * h2);
        let a5 = (1.0 / 12.0 - d5).exp();
        let a2 = (1.0 / 12.0 - d2).exp();
        assert!((a - a5).abs() < 1e-9, "{a} vs five-point {a5}");
        assert!((a - a2).abs() < 1e-6, "{a} vs central {a2}");
        assert!((1.0 / 12.0 - (-0.16542114370045092921) - a.ln()).abs() < 1e-10);
    }
}
