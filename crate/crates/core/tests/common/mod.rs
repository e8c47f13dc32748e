//! Independent oracles for integration tests: dense complex matrices built
//! straight from the definitions, and brute-force arithmetic over Z_p.
#![allow(dead_code)]

use std::f64::consts::TAU;

use lcsmbqc::projection::HWElement;
use lcsmbqc::{KElement, Phase, TensorElement};

/// Entry-wise tolerance for floating-point matrix comparisons.
pub const TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct C(pub f64, pub f64);

impl C {
    pub fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    pub fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
    pub fn close(self, o: C) -> bool {
        (self.0 - o.0).abs() < TOL && (self.1 - o.1).abs() < TOL
    }
    pub fn root(num: u64, den: u64) -> C {
        let t = TAU * num as f64 / den as f64;
        C(t.cos(), t.sin())
    }
}

pub const ZERO: C = C(0.0, 0.0);
pub const ONE: C = C(1.0, 0.0);

/// `exp(2 pi i e / p^M)` from the raw exponent.
pub fn phase(ph: &Phase) -> C {
    C::root(ph.num(), (ph.p() as u64).pow(ph.level()))
}

pub fn omega(p: u32, k: i64) -> C {
    C::root(k.rem_euclid(p as i64) as u64, p as u64)
}

#[derive(Clone, Debug)]
pub struct Mat {
    pub n: usize,
    pub d: Vec<C>,
}

impl Mat {
    pub fn zeros(n: usize) -> Mat {
        Mat { n, d: vec![ZERO; n * n] }
    }
    pub fn identity(n: usize) -> Mat {
        Mat::scalar(n, ONE)
    }
    pub fn scalar(n: usize, c: C) -> Mat {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            m.d[i * n + i] = c;
        }
        m
    }
    pub fn get(&self, r: usize, c: usize) -> C {
        self.d[r * self.n + c]
    }
    pub fn set(&mut self, r: usize, c: usize, v: C) {
        self.d[r * self.n + c] = v;
    }
    pub fn mul(&self, o: &Mat) -> Mat {
        let n = self.n;
        let mut m = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if b != ZERO {
                        m.d[i * n + j] = m.d[i * n + j].add(a.mul(b));
                    }
                }
            }
        }
        m
    }
    pub fn kron(&self, o: &Mat) -> Mat {
        let n = self.n * o.n;
        let mut m = Mat::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                let a = self.get(i, j);
                if a == ZERO {
                    continue;
                }
                for k in 0..o.n {
                    for l in 0..o.n {
                        m.set(i * o.n + k, j * o.n + l, a.mul(o.get(k, l)));
                    }
                }
            }
        }
        m
    }
    pub fn scale(&self, c: C) -> Mat {
        Mat { n: self.n, d: self.d.iter().map(|x| x.mul(c)).collect() }
    }
    pub fn pow(&self, k: u32) -> Mat {
        (0..k).fold(Mat::identity(self.n), |acc, _| acc.mul(self))
    }
    pub fn close(&self, o: &Mat) -> bool {
        self.n == o.n && self.d.iter().zip(&o.d).all(|(a, b)| a.close(*b))
    }
    /// `c` with `self = c * 1`.
    pub fn as_scalar(&self) -> Option<C> {
        let c = self.get(0, 0);
        self.close(&Mat::scalar(self.n, c)).then_some(c)
    }
    pub fn apply(&self, v: &[C]) -> Vec<C> {
        (0..self.n)
            .map(|i| (0..self.n).fold(ZERO, |acc, j| acc.add(self.get(i, j).mul(v[j]))))
            .collect()
    }
    /// Inverse of a unitary monomial matrix: conjugate transpose.
    pub fn dagger(&self) -> Mat {
        let mut m = Mat::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let C(re, im) = self.get(j, i);
                m.set(i, j, C(re, -im));
            }
        }
        m
    }
    pub fn commutator(&self, o: &Mat) -> Mat {
        self.mul(o).mul(&self.dagger()).mul(&o.dagger())
    }
}

/// `|q> -> xi(q+b) |q+b>`, read off the raw table.
pub fn site(g: &KElement) -> Mat {
    let p = g.p() as usize;
    let mut m = Mat::zeros(p);
    for q in 0..p {
        let r = (q + g.b() as usize) % p;
        m.set(r, q, phase(&g.xi().values()[r]));
    }
    m
}

pub fn tensor(e: &TensorElement) -> Mat {
    e.sites()
        .iter()
        .fold(Mat::identity(1), |acc, s| acc.kron(&site(s)))
        .scale(phase(&e.global()))
}

/// `Z = diag(omega^q)`, `X |q> = |q+1>`.
pub fn hw(h: &HWElement) -> Mat {
    let p = h.p as usize;
    let mut out = Mat::identity(1);
    for (&a, &b) in h.a.iter().zip(&h.b) {
        let mut m = Mat::zeros(p);
        for q in 0..p {
            let r = (q + b as usize) % p;
            m.set(r, q, omega(h.p, (a as usize * r) as i64));
        }
        out = out.kron(&m);
    }
    out.scale(phase(&h.phase))
}

/// Unnormalized GHZ vector on `n` qudits.
pub fn ghz(p: usize, n: usize) -> Vec<C> {
    let dim = p.pow(n as u32);
    let mut v = vec![ZERO; dim];
    let step: usize = (0..n).map(|k| p.pow(k as u32)).sum();
    for q in 0..p {
        v[q * step] = ONE;
    }
    v
}

/// `lambda` with `v' = lambda v`, if any.
pub fn eigenvalue(v: &[C], w: &[C]) -> Option<C> {
    let i = v.iter().position(|x| !x.close(ZERO))?;
    let C(a, b) = v[i];
    let n = a * a + b * b;
    let lam = w[i].mul(C(a / n, -b / n));
    v.iter().zip(w).all(|(x, y)| x.mul(lam).close(*y)).then_some(lam)
}

/// `k` with `c = omega^k`, if any.
pub fn omega_log(c: C, p: u32) -> Option<u32> {
    (0..p).find(|&k| c.close(omega(p, k as i64)))
}

/// All vectors of `Z_p^n`, first coordinate most significant.
pub fn all_vectors(p: u32, n: usize) -> Vec<Vec<u32>> {
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut idx| {
            let mut v = vec![0; n];
            for k in (0..n).rev() {
                v[k] = (idx % p as usize) as u32;
                idx /= p as usize;
            }
            v
        })
        .collect()
}

/// `Ax = b` over `Z_d` by direct evaluation.
pub fn satisfies(a: &[Vec<u32>], b: &[u32], d: u32, x: &[u32]) -> bool {
    a.iter().zip(b).all(|(row, &bi)| {
        row.iter().zip(x).map(|(r, xi)| (r * xi) as u64).sum::<u64>() % d as u64 == bi as u64
    })
}

/// HW product with `Z^a X^b Z^a' X^b' = omega^(-a' b) Z^(a+a') X^(b+b')`,
/// in exponent form `(phase exponent at level 2, a, b)` for odd `p`.
pub fn hw_mul(x: &HWElement, y: &HWElement) -> HWElement {
    let p = x.p;
    let cross: i64 = y.a.iter().zip(&x.b).map(|(a, b)| (*a * *b) as i64).sum();
    HWElement {
        p,
        phase: x.phase * y.phase * Phase::root(p, 1, -cross).unwrap(),
        a: x.a.iter().zip(&y.a).map(|(u, v)| (u + v) % p).collect(),
        b: x.b.iter().zip(&y.b).map(|(u, v)| (u + v) % p).collect(),
    }
}

/// Binomial coefficient mod p.
pub fn binom_mod(n: u32, k: u32, p: u32) -> u32 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k as u64 {
        num = num * (n as u64 - i) % p as u64;
        den = den * (i + 1) % p as u64;
    }
    let mut inv = 1u64;
    let mut base = den;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            inv = inv * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    (num * inv % p as u64) as u32
}

/// Total degree of the reduced polynomial of `f: Z_p^n -> Z_p`, via the
/// indicator expansion `[t = x] = 1 - (t - x)^(p-1)`.
pub fn total_degree(p: u32, n: usize, f: &[u32]) -> u32 {
    let pts = all_vectors(p, n);
    // g[x][a] = coefficient of t^a in [t = x]
    let g: Vec<Vec<u32>> = (0..p)
        .map(|x| {
            (0..p)
                .map(|a| {
                    let sign_pow = (p - 1 - a) % 2;
                    let xpow = (0..p - 1 - a).fold(1u64, |acc, _| acc * x as u64 % p as u64);
                    let mut term = binom_mod(p - 1, a, p) as u64 * xpow % p as u64;
                    if sign_pow == 1 {
                        term = (p as u64 - term) % p as u64;
                    }
                    let mut c = (p as u64 - term) % p as u64;
                    if a == 0 {
                        c = (c + 1) % p as u64;
                    }
                    c as u32
                })
                .collect()
        })
        .collect();
    let mut best = 0;
    for a in all_vectors(p, n) {
        let coeff = pts.iter().zip(f).fold(0u64, |acc, (x, &fx)| {
            let prod = x
                .iter()
                .zip(&a)
                .fold(fx as u64, |t, (&xi, &ai)| t * g[xi as usize][ai as usize] as u64 % p as u64);
            (acc + prod) % p as u64
        });
        if coeff != 0 {
            best = best.max(a.iter().sum());
        }
    }
    best
}
