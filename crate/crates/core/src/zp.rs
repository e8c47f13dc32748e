//! Arithmetic in the prime field Z_p and polynomial interpolation over it.
//!
//! Polynomials are coefficient vectors of length `p` (degree at most `p - 1`),
//! evaluated with the convention `0^0 = 1`.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p as u64))
    }
}

/// Reduces a signed integer to `[0, m)`.
pub fn reduce(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    let mut b = (base % m) as u128;
    let m = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative inverse modulo a prime, `None` for zero.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// `p^k`, or an error on overflow.
pub fn checked_power(p: u32, k: u32) -> Result<u64> {
    (p as u64)
        .checked_pow(k)
        .filter(|v| *v < (1u64 << 62))
        .ok_or(Error::Overflow { p, level: k })
}

/// Evaluates `sum_a c[a] q^a` in Z_p.
pub fn poly_eval(coeffs: &[u32], q: u32, p: u32) -> u32 {
    let p = p as u64;
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = (acc * q as u64 + c as u64) % p;
    }
    acc as u32
}

/// Interpolates the unique polynomial of degree at most `p - 1` through
/// `(q, values[q])` for `q = 0..p`.
///
/// Uses the indicator `1 - (q - x)^(p-1)`, whose expansion collapses to
/// `c_a = [a = 0] sum_x v_x - sum_x v_x x^(p-1-a)` in Z_p.
pub fn interpolate(values: &[u32], p: u32) -> Vec<u32> {
    assert_eq!(values.len(), p as usize, "need one value per point of Z_p");
    let pm = p as u64;
    let mut coeffs = vec![0u32; p as usize];
    let total: u64 = values.iter().map(|&v| v as u64).sum::<u64>() % pm;
    for a in 0..p as usize {
        let mut s = 0u64;
        for (x, &v) in values.iter().enumerate() {
            let e = (p as usize - 1 - a) as u64;
            let xp = if e == 0 { 1 } else { pow_mod(x as u64, e, pm) };
            s = (s + v as u64 * xp) % pm;
        }
        let base = if a == 0 { total } else { 0 };
        coeffs[a] = ((base + pm - s) % pm) as u32;
    }
    coeffs
}

/// Multivariate polynomial over Z_p with individual degrees below `p`.
///
/// Coefficients are stored lexicographically in the exponent vector, first
/// variable most significant.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct MultiPoly {
    pub p: u32,
    pub n: usize,
    pub coeffs: Vec<u32>,
}

impl MultiPoly {
    /// Interpolates from a value table indexed like the coefficients.
    pub fn interpolate(p: u32, n: usize, table: &[u32]) -> Result<Self> {
        let size = (p as usize).pow(n as u32);
        if table.len() != size {
            return Err(Error::Shape(format!(
                "table has {} entries, expected {size}",
                table.len()
            )));
        }
        let mut coeffs = table.to_vec();
        let pu = p as usize;
        // Interpolate along one axis at a time.
        for axis in 0..n {
            let stride = pu.pow((n - 1 - axis) as u32);
            let mut line = vec![0u32; pu];
            for start in 0..size {
                if !(start / stride).is_multiple_of(pu) {
                    continue;
                }
                for (t, slot) in line.iter_mut().enumerate() {
                    *slot = coeffs[start + t * stride];
                }
                let c = interpolate(&line, p);
                for (t, v) in c.into_iter().enumerate() {
                    coeffs[start + t * stride] = v;
                }
            }
        }
        Ok(MultiPoly { p, n, coeffs })
    }

    pub fn exponents(&self, index: usize) -> Vec<u32> {
        let mut e = vec![0u32; self.n];
        let mut r = index;
        for k in (0..self.n).rev() {
            e[k] = (r % self.p as usize) as u32;
            r /= self.p as usize;
        }
        e
    }

    /// Nonzero terms as `(exponents, coefficient)`.
    pub fn terms(&self) -> Vec<(Vec<u32>, u32)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.exponents(i), c))
            .collect()
    }

    /// Largest total degree among nonzero terms, 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms()
            .iter()
            .map(|(e, _)| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, point: &[u32]) -> u32 {
        let p = self.p as u64;
        let mut acc = 0u64;
        for (e, c) in self.terms() {
            let mut t = c as u64;
            for (x, k) in point.iter().zip(&e) {
                t = t * pow_mod(*x as u64, *k as u64, p) % p;
            }
            acc = (acc + t) % p;
        }
        acc as u32
    }
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|(e, c)| {
                let mut s = String::new();
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            format!("i{}", i + 1)
                        } else {
                            format!("i{}^{k}", i + 1)
                        }
                    })
                    .collect();
                if *c != 1 || mono.is_empty() {
                    s.push_str(&c.to_string());
                }
                s.push_str(&mono.join("*"));
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7, 11] {
            assert_eq!(inv_mod(0, p), None);
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p).unwrap() % p, 1);
            }
        }
    }

    // Independent check: every table over Z_p is hit by exactly one
    // coefficient vector (brute force over all coefficient vectors).
    #[test]
    fn interpolation_matches_evaluation_exhaustively() {
        for p in [2u32, 3] {
            let n = (p as usize).pow(p);
            for idx in 0..n {
                let mut coeffs = vec![0u32; p as usize];
                let mut r = idx;
                for c in coeffs.iter_mut() {
                    *c = (r % p as usize) as u32;
                    r /= p as usize;
                }
                let table: Vec<u32> = (0..p).map(|q| poly_eval(&coeffs, q, p)).collect();
                assert_eq!(interpolate(&table, p), coeffs);
            }
        }
    }

    #[test]
    fn fermat_indicator() {
        // 1 + (p-1) q^(p-1) vanishes away from 0
        for p in [3u32, 5, 7] {
            let mut c = vec![0u32; p as usize];
            c[0] = 1;
            c[p as usize - 1] = p - 1;
            let vals: Vec<u32> = (0..p).map(|q| poly_eval(&c, q, p)).collect();
            assert_eq!(vals[0], 1);
            assert!(vals[1..].iter().all(|&v| v == 0));
        }
    }

    #[test]
    fn multivariate_or_gate() {
        let t = [0, 1, 1, 1];
        let m = MultiPoly::interpolate(2, 2, &t).unwrap();
        assert_eq!(m.total_degree(), 2);
        for (i, &v) in t.iter().enumerate() {
            assert_eq!(m.eval(&m.exponents(i)), v);
        }
        assert_eq!(m.to_string(), "i2 + i1 + i1*i2");
    }
}
