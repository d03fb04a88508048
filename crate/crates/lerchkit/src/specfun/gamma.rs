//! Complex Gamma function, Lanczos approximation (g = 607/128, 15 terms)
//! with reflection for Re(z) < 1/2.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::complex::near_integer;
use crate::{Error, Result};

const LANCZOS_G: f64 = 607.0 / 128.0;

// Godfrey's coefficients for g = 607/128, as used by Boost and SciPy.
const LANCZOS_C: [f64; 15] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
];

/// Γ(s) for complex s. Poles at the non-positive integers are reported as
/// errors rather than infinities.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    if let Some(k) = near_integer(s, 1e-14) {
        if k <= 0 && (s.re - k as f64).abs() < 1e-14 && s.im == 0.0 {
            return Err(Error::Pole(format!("Gamma({k}) — non-positive integer")));
        }
    }
    Ok(gamma_unchecked(s))
}

fn gamma_unchecked(s: Complex64) -> Complex64 {
    if s.re < 0.5 {
        // Reflection: Γ(s) = π / (sin πs · Γ(1−s)).
        let sin_pis = (PI * s).sin();
        return PI / (sin_pis * gamma_unchecked(Complex64::new(1.0, 0.0) - s));
    }
    let x = s - 1.0;
    let mut acc = Complex64::new(LANCZOS_C[0], 0.0);
    for (i, &c) in LANCZOS_C.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    let sqrt_2pi = (2.0 * PI).sqrt();
    sqrt_2pi * (t.ln() * (x + 0.5)).exp() * (-t).exp() * acc
}
