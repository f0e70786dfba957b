//! Exact roots of unity stored as rational exponents of pi·i.
//!
//! `PiExp { num, den }` denotes exp(pi·i·num/den). Values are normalized so
//! that `den > 0`, `gcd(num, den) = 1` and `0 <= num < 2·den`, making
//! equality of the represented complex numbers literal equality of the
//! struct. The serialized form is the string `piexp:num/den`.

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PiExp {
    num: i64,
    den: i64,
}

impl PiExp {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator in PiExp");
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        num = num.rem_euclid(2 * den);
        PiExp { num, den }
    }

    pub const ONE: PiExp = PiExp { num: 0, den: 1 };
    pub const MINUS_ONE: PiExp = PiExp { num: 1, den: 1 };

    /// exp(2·pi·i·p/q)
    pub fn from_tau(p: i64, q: i64) -> Self {
        PiExp::new(2 * p, q)
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    /// Multiplicative order as a root of unity.
    pub fn order(&self) -> i64 {
        if self.num == 0 {
            return 1;
        }
        // (num/den)·k ≡ 0 mod 2  =>  k = 2·den / gcd(num, 2·den)
        2 * self.den / self.num.gcd(&(2 * self.den))
    }

    pub fn pow(&self, e: i64) -> Self {
        let r = (self.num % (2 * self.den)) as i128 * e as i128;
        let m = 2 * self.den as i128;
        PiExp::new((r.rem_euclid(m)) as i64, self.den)
    }

    pub fn conj(&self) -> Self {
        PiExp::new(-self.num, self.den)
    }

    pub fn to_complex(&self) -> Complex64 {
        let theta = std::f64::consts::PI * self.num as f64 / self.den as f64;
        Complex64::new(theta.cos(), theta.sin())
    }

    /// Exponent in the cyclic encoding of mu_M: the integer v with
    /// exp(2·pi·i·v/M) equal to self. Requires 2·den | M.
    pub fn to_mu(&self, m: u64) -> crate::Result<u64> {
        let twod = 2 * self.den as u64;
        if m % twod != 0 {
            return Err(crate::Error::ConductorTooSmall {
                m,
                num: self.num,
                den: self.den,
            });
        }
        Ok((self.num as u64 * (m / twod)) % m)
    }

    /// Inverse of `to_mu`.
    pub fn from_mu(v: u64, m: u64) -> Self {
        PiExp::new(2 * (v % m) as i64, m as i64)
    }
}

impl Mul for PiExp {
    type Output = PiExp;
    fn mul(self, rhs: PiExp) -> PiExp {
        let den = (self.den / self.den.gcd(&rhs.den)) * rhs.den;
        let num = self.num * (den / self.den) + rhs.num * (den / rhs.den);
        PiExp::new(num, den)
    }
}

impl Add for PiExp {
    type Output = PiExp;
    fn add(self, rhs: PiExp) -> PiExp {
        self * rhs
    }
}

impl Sub for PiExp {
    type Output = PiExp;
    fn sub(self, rhs: PiExp) -> PiExp {
        self * rhs.conj()
    }
}

impl Neg for PiExp {
    type Output = PiExp;
    fn neg(self) -> PiExp {
        self.conj()
    }
}

impl fmt::Display for PiExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "piexp:{}/{}", self.num, self.den)
    }
}

impl std::str::FromStr for PiExp {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let body = s.strip_prefix("piexp:").ok_or("missing piexp: prefix")?;
        let (n, d) = body.split_once('/').ok_or("missing /")?;
        let num: i64 = n.parse().map_err(|e| format!("{e}"))?;
        let den: i64 = d.parse().map_err(|e| format!("{e}"))?;
        if den <= 0 {
            return Err("denominator must be positive".into());
        }
        Ok(PiExp::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(PiExp::new(-1, 1), PiExp::new(1, 1));
        assert_eq!(PiExp::new(5, 1), PiExp::new(1, 1));
        assert_eq!(PiExp::new(4, 8), PiExp::new(1, 2));
        assert_eq!(PiExp::new(0, 7), PiExp::ONE);
        assert_eq!(PiExp::MINUS_ONE.to_string(), "piexp:1/1");
    }

    #[test]
    fn arithmetic() {
        let i = PiExp::new(1, 2);
        assert_eq!(i * i, PiExp::MINUS_ONE);
        assert_eq!(i.pow(4), PiExp::ONE);
        assert_eq!(i.conj(), PiExp::new(3, 2));
        assert_eq!(i.order(), 4);
        assert_eq!(PiExp::new(1, 4).order(), 8);
        assert_eq!(PiExp::ONE.order(), 1);
        let z = PiExp::new(3, 8);
        assert_eq!(z - z, PiExp::ONE);
    }

    #[test]
    fn mu_round_trip() {
        let z = PiExp::new(3, 8);
        let v = z.to_mu(16).unwrap();
        assert_eq!(v, 3);
        assert_eq!(PiExp::from_mu(v, 16), z);
        assert!(z.to_mu(8).is_err());
    }

    #[test]
    fn complex_value() {
        let v = PiExp::new(1, 2).to_complex();
        assert!((v.re).abs() < 1e-15 && (v.im - 1.0).abs() < 1e-15);
    }

    #[test]
    fn parse_round_trip() {
        let z = PiExp::new(7, 12);
        let s = z.to_string();
        assert_eq!(s.parse::<PiExp>().unwrap(), z);
    }
}
