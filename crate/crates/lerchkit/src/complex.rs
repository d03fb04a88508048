//! Principal-branch complex helpers and the `re[+im i]` literal syntax used
//! by the CLI and the report formats.

use num_complex::Complex64;

use crate::{Error, Result};

/// Principal power base^expo = exp(expo · Log base), Log the principal
/// branch with Im ∈ (−π, π].
///
/// 0^expo is 0 for Re(expo) > 0 and a domain error otherwise.
pub fn cpow_principal(base: Complex64, expo: Complex64) -> Result<Complex64> {
    if base == Complex64::new(0.0, 0.0) {
        if expo == Complex64::new(0.0, 0.0) {
            return Err(Error::Domain("0^0 is undefined".into()));
        }
        if expo.re > 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(Error::Domain(format!(
            "0^({}) with Re(expo) <= 0",
            fmt_complex(expo)
        )));
    }
    if expo == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    // Real exponent 1 short-circuits; everything else goes through exp/log.
    if expo == Complex64::new(1.0, 0.0) {
        return Ok(base);
    }
    let out = (expo * base.ln()).exp();
    if out.re.is_finite() && out.im.is_finite() {
        Ok(out)
    } else {
        Err(Error::NonFinite(format!(
            "({})^({})",
            fmt_complex(base),
            fmt_complex(expo)
        )))
    }
}

/// x^e for real x > 0 and complex e, the common integrand case. Same
/// principal convention as [`cpow_principal`] but avoids the error path.
#[inline]
pub fn rpow(x: f64, expo: Complex64) -> Complex64 {
    if expo.im == 0.0 {
        let r = x.powf(expo.re);
        Complex64::new(r, 0.0)
    } else {
        (expo * x.ln()).exp()
    }
}

/// Principal log of a positive real argument lifted to a complex value.
#[inline]
pub fn rlog(x: f64) -> Complex64 {
    Complex64::new(x.ln(), 0.0)
}

pub fn is_finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// True when z is within `tol` of a real integer.
pub fn near_integer(z: Complex64, tol: f64) -> Option<i64> {
    if z.im.abs() > tol {
        return None;
    }
    let r = z.re.round();
    if (z.re - r).abs() <= tol && r.abs() < 9.0e15 {
        Some(r as i64)
    } else {
        None
    }
}

/// Render a complex value the way the CLI parses it: `re`, `re+imi`,
/// `re-imi`, with shortest-roundtrip floats.
pub fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im >= 0.0 {
        format!("{}+{}i", z.re, z.im)
    } else {
        format!("{}{}i", z.re, z.im)
    }
}

/// Parse a complex literal: `1.5`, `1.5+2i`, `-3e-2-0.5i`, `2i`, `i`, `-i`,
/// or `pi`/`-pi` (handy for the catalog's shift parameter).
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Domain("empty complex literal".into()));
    }
    match t {
        "i" => return Ok(Complex64::new(0.0, 1.0)),
        "-i" => return Ok(Complex64::new(0.0, -1.0)),
        "pi" => return Ok(Complex64::new(std::f64::consts::PI, 0.0)),
        "-pi" => return Ok(Complex64::new(-std::f64::consts::PI, 0.0)),
        "pi/2" => return Ok(Complex64::new(std::f64::consts::FRAC_PI_2, 0.0)),
        _ => {}
    }
    if let Some(im) = t.strip_suffix('i') {
        // Either pure imaginary or re±im i. Split at the last +/- that is not
        // part of an exponent.
        let bytes = im.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                split = Some(k);
                break;
            }
        }
        if let Some(k) = split {
            let (re_s, im_s) = im.split_at(k);
            let re: f64 = re_s
                .parse()
                .map_err(|_| Error::Domain(format!("bad complex literal `{s}`")))?;
            let im_v: f64 = if im_s == "+" {
                1.0
            } else if im_s == "-" {
                -1.0
            } else {
                im_s.parse()
                    .map_err(|_| Error::Domain(format!("bad complex literal `{s}`")))?
            };
            return Ok(Complex64::new(re, im_v));
        }
        let im_v: f64 = im
            .parse()
            .map_err(|_| Error::Domain(format!("bad complex literal `{s}`")))?;
        return Ok(Complex64::new(0.0, im_v));
    }
    let re: f64 = t
        .parse()
        .map_err(|_| Error::Domain(format!("bad complex literal `{s}`")))?;
    Ok(Complex64::new(re, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn principal_sqrt_of_minus_one_is_i() {
        let got = cpow_principal(Complex64::new(-1.0, 0.0), Complex64::new(0.5, 0.0)).unwrap();
        assert!(close(got, Complex64::new(0.0, 1.0), 1e-15), "{got}");
    }

    #[test]
    fn zero_exponent_gives_one() {
        for z in [
            Complex64::new(2.0, -3.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, 1e-9),
        ] {
            let got = cpow_principal(z, Complex64::new(0.0, 0.0)).unwrap();
            assert_eq!(got, Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn minus_one_to_five_sixths() {
        // (−1)^{5/6} = e^{i 5π/6} = −√3/2 + i/2
        let got = cpow_principal(
            Complex64::new(-1.0, 0.0),
            Complex64::new(5.0 / 6.0, 0.0),
        )
        .unwrap();
        let want = Complex64::new(-(3.0f64.sqrt()) / 2.0, 0.5);
        assert!(close(got, want, 1e-15), "{got} vs {want}");
    }

    #[test]
    fn zero_base_domain_error() {
        assert!(cpow_principal(Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)).is_err());
        assert!(cpow_principal(Complex64::new(0.0, 0.0), Complex64::new(0.0, 2.0)).is_err());
        assert_eq!(
            cpow_principal(Complex64::new(0.0, 0.0), Complex64::new(2.0, 1.0)).unwrap(),
            Complex64::new(0.0, 0.0)
        );
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["1.5", "-2", "1.5+2i", "1.5-2i", "2i", "-0.25i", "i", "-i", "3e-2+1e-4i"] {
            let z = parse_complex(s).unwrap();
            let back = parse_complex(&fmt_complex(z)).unwrap();
            assert_eq!(z, back, "{s}");
        }
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("").is_err());
        assert_eq!(parse_complex("pi").unwrap().re, std::f64::consts::PI);
    }
}
