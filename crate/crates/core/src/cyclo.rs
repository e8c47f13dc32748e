//! Exact p-power roots of unity.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zp::{check_prime, checked_power, reduce};

/// `exp(2 pi i e / p^M)` in canonical form: either `e = 0, M = 0` or `p` does
/// not divide `e`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPhase", into = "RawPhase")]
pub struct Phase {
    p: u32,
    level: u32,
    num: u64,
}

#[derive(Serialize, Deserialize)]
struct RawPhase {
    p: u32,
    #[serde(rename = "M")]
    level: u32,
    e: i64,
}

impl TryFrom<RawPhase> for Phase {
    type Error = Error;
    fn try_from(r: RawPhase) -> Result<Self> {
        Phase::root(r.p, r.level, r.e)
    }
}

impl From<Phase> for RawPhase {
    fn from(a: Phase) -> Self {
        RawPhase {
            p: a.p,
            level: a.level,
            e: a.num as i64,
        }
    }
}

impl Phase {
    /// Builds `exp(2 pi i num / p^level)`, canonicalizing.
    pub fn root(p: u32, level: u32, num: i64) -> Result<Self> {
        check_prime(p)?;
        let modulus = checked_power(p, level)?;
        Ok(Self::canonical(p, level, reduce(num, modulus)))
    }

    fn canonical(p: u32, mut level: u32, mut num: u64) -> Self {
        if num == 0 {
            return Phase { p, level: 0, num: 0 };
        }
        while level > 0 && num.is_multiple_of(p as u64) {
            num /= p as u64;
            level -= 1;
        }
        Phase { p, level, num }
    }

    /// Internal constructor from an exponent already reduced mod `p^level`.
    pub(crate) fn from_exponent(p: u32, level: u32, num: u64) -> Self {
        Self::canonical(p, level, num)
    }

    pub fn one(p: u32) -> Self {
        Phase { p, level: 0, num: 0 }
    }

    /// `omega = exp(2 pi i / p)`.
    pub fn omega(p: u32) -> Self {
        Self::omega_pow(p, 1)
    }

    pub fn omega_pow(p: u32, c: i64) -> Self {
        Self::canonical(p, 1, reduce(c, p as u64))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Canonical level `M`.
    pub fn level(&self) -> u32 {
        self.level
    }

    /// Canonical numerator `e`.
    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    /// Numerator of this phase written over `p^level`, if `level` is at least
    /// the canonical level.
    pub fn exponent_at(&self, level: u32) -> Option<u64> {
        if level < self.level {
            return None;
        }
        Some(self.num * (self.p as u64).pow(level - self.level))
    }

    pub fn checked_mul(&self, other: &Phase) -> Result<Phase> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        let level = self.level.max(other.level);
        let modulus = (self.p as u64).pow(level);
        let a = self.exponent_at(level).unwrap();
        let b = other.exponent_at(level).unwrap();
        Ok(Self::canonical(self.p, level, (a + b) % modulus))
    }

    pub fn pow(&self, k: i64) -> Phase {
        if self.level == 0 {
            return *self;
        }
        let modulus = (self.p as u64).pow(self.level);
        let k = reduce(k, modulus) as u128;
        let num = (self.num as u128 * k % modulus as u128) as u64;
        Self::canonical(self.p, self.level, num)
    }

    pub fn inv(&self) -> Phase {
        self.pow(-1)
    }

    /// `Some(c)` when this phase equals `omega^c`.
    pub fn as_omega_power(&self) -> Option<u32> {
        match self.level {
            0 => Some(0),
            1 => Some(self.num as u32),
            _ => None,
        }
    }

    pub fn to_complex(&self) -> (f64, f64) {
        if self.level == 0 {
            return (1.0, 0.0);
        }
        let t = std::f64::consts::TAU * self.num as f64 / (self.p as f64).powi(self.level as i32);
        (t.cos(), t.sin())
    }
}

impl Mul for Phase {
    type Output = Phase;
    /// Panics on mismatched primes; see [`Phase::checked_mul`].
    fn mul(self, rhs: Phase) -> Phase {
        self.checked_mul(&rhs).expect("phase primes must agree")
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.level {
            0 => write!(f, "1"),
            1 if self.num == 1 => write!(f, "ω"),
            1 => write!(f, "ω^{}", self.num),
            l => write!(f, "exp(2πi·{}/{}^{})", self.num, self.p, l),
        }
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phase(p={}, M={}, e={})", self.p, self.level, self.num)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ph(p: u32, m: u32, e: i64) -> Phase {
        Phase::root(p, m, e).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(ph(3, 1, 1) * ph(3, 1, 2), Phase::one(3));
        assert_eq!(ph(3, 2, 1) * ph(3, 2, 2), ph(3, 1, 1));
        assert_eq!(ph(2, 2, 1) * ph(2, 2, 3), Phase::one(2));
        assert!(ph(2, 1, 1).checked_mul(&ph(3, 1, 1)).is_err());
    }

    #[test]
    fn powers() {
        assert!(Phase::omega(3).pow(3).is_one());
        assert_eq!(ph(3, 2, 1).pow(3), Phase::omega(3));
        assert_eq!(Phase::omega(5).pow(-1), ph(5, 1, 4));
    }

    #[test]
    fn omega_powers() {
        assert_eq!(Phase::one(3).as_omega_power(), Some(0));
        assert_eq!(ph(3, 1, 2).as_omega_power(), Some(2));
        assert_eq!(ph(3, 2, 1).as_omega_power(), None);
    }

    #[test]
    fn canonical_form() {
        let a = ph(3, 3, 9);
        assert_eq!((a.level(), a.num()), (1, 1));
        assert_eq!(ph(5, 2, 25), Phase::one(5));
        assert_eq!(ph(2, 2, -1), ph(2, 2, 3));
        assert!(Phase::root(4, 1, 1).is_err());
    }

    #[test]
    fn json_roundtrip_accepts_noncanonical() {
        let a: Phase = serde_json::from_str(r#"{"p":3,"M":2,"e":3}"#).unwrap();
        assert_eq!(a, Phase::omega(3));
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"p":3,"M":1,"e":1}"#);
    }

    #[test]
    fn complex_value() {
        let (re, im) = ph(2, 2, 1).to_complex();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
    }
}
