//! The named parameters of the integrand families.
//!
//! One struct houses every symbol any entry uses: n, m, l, k, a of the
//! master family; p, q of the four-power numerator; and alpha, the shift in
//! the a² + log²(x) denominators (renamed from the source's second "a" to
//! avoid colliding with the scale parameter).

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::complex::{fmt_complex, parse_complex};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParamSet {
    pub n: Complex64,
    pub m: Complex64,
    pub l: Complex64,
    pub k: Complex64,
    pub a: Complex64,
    pub p: Complex64,
    pub q: Complex64,
    pub alpha: Complex64,
}

impl Default for ParamSet {
    fn default() -> Self {
        ParamSet {
            n: Complex64::new(0.0, 0.0),
            m: Complex64::new(0.0, 0.0),
            l: Complex64::new(1.0, 0.0),
            k: Complex64::new(0.0, 0.0),
            a: Complex64::new(1.0, 0.0),
            p: Complex64::new(0.0, 0.0),
            q: Complex64::new(0.0, 0.0),
            alpha: Complex64::new(0.0, 0.0),
        }
    }
}

pub const PARAM_NAMES: [&str; 8] = ["n", "m", "l", "k", "a", "p", "q", "alpha"];

impl ParamSet {
    pub fn get(&self, name: &str) -> Result<Complex64> {
        Ok(match name {
            "n" => self.n,
            "m" => self.m,
            "l" => self.l,
            "k" => self.k,
            "a" => self.a,
            "p" => self.p,
            "q" => self.q,
            "alpha" | "α" => self.alpha,
            _ => return Err(Error::Domain(format!("unknown parameter `{name}`"))),
        })
    }

    pub fn set(&mut self, name: &str, value: Complex64) -> Result<()> {
        match name {
            "n" => self.n = value,
            "m" => self.m = value,
            "l" => self.l = value,
            "k" => self.k = value,
            "a" => self.a = value,
            "p" => self.p = value,
            "q" => self.q = value,
            "alpha" | "α" => self.alpha = value,
            _ => return Err(Error::Domain(format!("unknown parameter `{name}`"))),
        }
        Ok(())
    }

    /// Apply a `name=value` assignment with a complex literal value.
    pub fn assign(&mut self, spec: &str) -> Result<()> {
        let (name, value) = spec
            .split_once('=')
            .ok_or_else(|| Error::Domain(format!("expected name=value, got `{spec}`")))?;
        self.set(name.trim(), parse_complex(value)?)
    }

    /// Compact one-line rendering for reports: only parameters that differ
    /// from the neutral defaults.
    pub fn display(&self) -> String {
        let base = ParamSet::default();
        let mut parts = Vec::new();
        for name in PARAM_NAMES {
            let v = self.get(name).unwrap();
            if v != base.get(name).unwrap() {
                parts.push(format!("{name}={}", fmt_complex(v)));
            }
        }
        if parts.is_empty() {
            "(defaults)".into()
        } else {
            parts.join(" ")
        }
    }
}

impl Serialize for ParamSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct C {
            re: f64,
            im: f64,
        }
        let c = |z: Complex64| C { re: z.re, im: z.im };
        let mut st = s.serialize_struct("ParamSet", 8)?;
        st.serialize_field("n", &c(self.n))?;
        st.serialize_field("m", &c(self.m))?;
        st.serialize_field("l", &c(self.l))?;
        st.serialize_field("k", &c(self.k))?;
        st.serialize_field("a", &c(self.a))?;
        st.serialize_field("p", &c(self.p))?;
        st.serialize_field("q", &c(self.q))?;
        st.serialize_field("alpha", &c(self.alpha))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assign_and_display() {
        let mut p = ParamSet::default();
        p.assign("n=1").unwrap();
        p.assign("m=2.5-0.5i").unwrap();
        p.assign("alpha=pi").unwrap();
        assert_eq!(p.n, Complex64::new(1.0, 0.0));
        assert_eq!(p.m, Complex64::new(2.5, -0.5));
        assert!(p.display().contains("n=1"));
        assert!(p.assign("bogus=1").is_err());
        assert!(p.assign("n").is_err());
    }
}
