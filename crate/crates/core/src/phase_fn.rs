//! Phase functions `xi: Z_p -> U(1)` and their level decomposition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclo::Phase;
use crate::error::{Error, Result};
use crate::zp::{check_prime, interpolate, poly_eval, reduce};

/// Value table `values[q] = xi(q)` of a diagonal phase gate `S_xi`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPhaseFunction")]
pub struct PhaseFunction {
    p: u32,
    values: Vec<Phase>,
}

#[derive(Deserialize)]
struct RawPhaseFunction {
    p: u32,
    values: Vec<Phase>,
}

impl TryFrom<RawPhaseFunction> for PhaseFunction {
    type Error = Error;
    fn try_from(r: RawPhaseFunction) -> Result<Self> {
        let f = PhaseFunction::new(r.values)?;
        if f.p != r.p {
            return Err(Error::PrimeMismatch(r.p, f.p));
        }
        Ok(f)
    }
}

impl PhaseFunction {
    /// Builds from `p` values sharing the prime `p`.
    pub fn new(values: Vec<Phase>) -> Result<Self> {
        let p = values
            .first()
            .ok_or_else(|| Error::Shape("empty value table".into()))?
            .p();
        check_prime(p)?;
        if values.len() != p as usize {
            return Err(Error::Shape(format!(
                "value table has length {}, expected {p}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| v.p() != p) {
            return Err(Error::PrimeMismatch(p, v.p()));
        }
        Ok(PhaseFunction { p, values })
    }

    pub fn from_fn(p: u32, f: impl Fn(u32) -> Phase) -> Result<Self> {
        Self::new((0..p).map(f).collect())
    }

    pub fn constant(p: u32, c: Phase) -> Self {
        PhaseFunction {
            p,
            values: vec![c; p as usize],
        }
    }

    pub fn one(p: u32) -> Self {
        Self::constant(p, Phase::one(p))
    }

    /// `xi(q) = omega^{exps[q]}`.
    pub fn from_omega_exponents(p: u32, exps: &[i64]) -> Result<Self> {
        Self::new(exps.iter().map(|&c| Phase::omega_pow(p, c)).collect())
    }

    /// `xi(q) = omega^{f(q)}` for a polynomial `f` over Z_p.
    pub fn from_omega_poly(p: u32, coeffs: &[u32]) -> Result<Self> {
        Self::from_fn(p, |q| Phase::omega_pow(p, poly_eval(coeffs, q, p) as i64))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn values(&self) -> &[Phase] {
        &self.values
    }

    /// `xi(q)` for any integer `q`, read mod `p`.
    pub fn at(&self, q: i64) -> Phase {
        self.values[reduce(q, self.p as u64) as usize]
    }

    pub fn checked_mul(&self, other: &PhaseFunction) -> Result<PhaseFunction> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        Ok(PhaseFunction {
            p: self.p,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| *a * *b)
                .collect(),
        })
    }

    /// Pointwise product. Panics on mismatched primes.
    pub fn mul(&self, other: &PhaseFunction) -> PhaseFunction {
        self.checked_mul(other).expect("phase function primes must agree")
    }

    pub fn pow(&self, k: i64) -> PhaseFunction {
        PhaseFunction {
            p: self.p,
            values: self.values.iter().map(|v| v.pow(k)).collect(),
        }
    }

    pub fn inv(&self) -> PhaseFunction {
        self.pow(-1)
    }

    pub fn scale(&self, c: Phase) -> PhaseFunction {
        self.mul(&PhaseFunction::constant(self.p, c))
    }

    /// Shift action `(b . xi)(q) = xi(q - b)`.
    pub fn act(&self, b: i64) -> PhaseFunction {
        PhaseFunction {
            p: self.p,
            values: (0..self.p as i64).map(|q| self.at(q - b)).collect(),
        }
    }

    pub fn det(&self) -> Phase {
        self.values
            .iter()
            .fold(Phase::one(self.p), |acc, v| acc * *v)
    }

    /// Membership in the special torus (determinant one).
    pub fn is_special(&self) -> bool {
        self.det().is_one()
    }

    /// `Some(c)` if every value equals `c`.
    pub fn as_constant(&self) -> Option<Phase> {
        let c = self.values[0];
        self.values.iter().all(|v| *v == c).then_some(c)
    }

    /// Largest canonical level among the values, without the torus check.
    pub fn max_level(&self) -> u32 {
        self.values.iter().map(|v| v.level()).max().unwrap_or(0)
    }

    /// Smallest `m` with `xi^(p^m) = 1`; requires determinant one.
    pub fn level(&self) -> Result<u32> {
        if !self.is_special() {
            return Err(Error::NotSpecial(self.det().to_string()));
        }
        Ok(self.max_level())
    }

    /// Unique level coefficients `theta[j][a]` with
    /// `xi(q) = prod_j exp(2 pi i f_j(q) / p^j)`.
    ///
    /// Writing `xi(q) = exp(2 pi i y_q / p^m)` with `y_q` in `[0, p^m)`,
    /// `f_j(q)` is the base-p digit of `y_q` at weight `p^(m-j)`.
    pub fn decompose(&self, m: u32) -> Result<LevelCoefficients> {
        let p = self.p;
        let ys: Vec<u64> = self
            .values
            .iter()
            .map(|v| v.exponent_at(m).ok_or(Error::NotRootAtLevel { p, m }))
            .collect::<Result<_>>()?;
        let theta = (1..=m)
            .map(|j| {
                let w = (p as u64).pow(m - j);
                let digits: Vec<u32> = ys.iter().map(|y| ((y / w) % p as u64) as u32).collect();
                interpolate(&digits, p)
            })
            .collect();
        Ok(LevelCoefficients { p, m, theta })
    }
}

impl fmt::Debug for PhaseFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ξ[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for PhaseFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Coefficient matrix `theta[j-1][a]` of the level decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLevelCoefficients")]
pub struct LevelCoefficients {
    pub p: u32,
    pub m: u32,
    pub theta: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct RawLevelCoefficients {
    p: u32,
    m: u32,
    theta: Vec<Vec<u32>>,
}

impl TryFrom<RawLevelCoefficients> for LevelCoefficients {
    type Error = Error;
    fn try_from(r: RawLevelCoefficients) -> Result<Self> {
        LevelCoefficients::new(r.p, r.m, r.theta)
    }
}

impl LevelCoefficients {
    pub fn new(p: u32, m: u32, theta: Vec<Vec<u32>>) -> Result<Self> {
        check_prime(p)?;
        if theta.len() != m as usize || theta.iter().any(|row| row.len() != p as usize) {
            return Err(Error::Shape(format!("theta must be {m} x {p}")));
        }
        if theta.iter().flatten().any(|&t| t >= p) {
            return Err(Error::Invalid("theta entries must lie in [0, p)".into()));
        }
        Ok(LevelCoefficients { p, m, theta })
    }

    pub fn zero(p: u32, m: u32) -> Self {
        LevelCoefficients {
            p,
            m,
            theta: vec![vec![0; p as usize]; m as usize],
        }
    }

    /// `theta_{j,a}` with 1-based level `j`; zero beyond the stored levels.
    pub fn get(&self, j: u32, a: u32) -> u32 {
        if j == 0 || j > self.m {
            return 0;
        }
        self.theta[j as usize - 1][a as usize]
    }

    pub fn set(&mut self, j: u32, a: u32, v: u32) {
        self.theta[j as usize - 1][a as usize] = v % self.p;
    }

    /// `f_j(q)` in `[0, p)`.
    pub fn f(&self, j: u32, q: u32) -> u32 {
        poly_eval(&self.theta[j as usize - 1], q, self.p)
    }

    pub fn reconstruct(&self) -> PhaseFunction {
        let p = self.p;
        let values = (0..p)
            .map(|q| {
                let y: u64 = (1..=self.m)
                    .map(|j| self.f(j, q) as u64 * (p as u64).pow(self.m - j))
                    .sum();
                Phase::from_exponent(p, self.m, y)
            })
            .collect();
        PhaseFunction { p, values }
    }

    /// True when every level above the first is constant in `q`.
    pub fn higher_levels_constant(&self) -> bool {
        (2..=self.m).all(|j| (1..self.p).all(|a| self.get(j, a) == 0))
    }
}
