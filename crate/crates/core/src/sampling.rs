//! Seeded random generation of elements, commuting pairs and solution families.
//!
//! Commuting pairs are built site by site from the four shapes a pair with
//! scalar commutator can take, so the generators reach every case rather
//! than relying on rejection sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclo::Phase;
use crate::error::{Error, Result};
use crate::kgroup::{KElement, Torus};
use crate::ktensor::TensorElement;
use crate::lcs::{GeneratorAssignment, Lcs};
use crate::phase_fn::PhaseFunction;
use crate::zp::inv_mod;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform determinant-one table with `p^m`-th root values.
pub fn random_special_diag(torus: Torus, rng: &mut Rng64) -> PhaseFunction {
    let p = torus.p;
    let modulus = (p as u64).pow(torus.m);
    let mut exps: Vec<u64> = (0..p - 1).map(|_| rng.gen_range(0..modulus)).collect();
    let s: u64 = exps.iter().sum::<u64>() % modulus;
    exps.push((modulus - s) % modulus);
    PhaseFunction::new(
        exps.into_iter()
            .map(|e| Phase::root(p, torus.m, e as i64).expect("valid"))
            .collect(),
    )
    .expect("valid table")
}

pub fn random_element(torus: Torus, rng: &mut Rng64) -> KElement {
    let b = rng.gen_range(0..torus.p) as i64;
    KElement::new(torus, random_special_diag(torus, rng), b).expect("valid element")
}

fn random_nonzero(p: u32, rng: &mut Rng64) -> u32 {
    rng.gen_range(1..p)
}

/// Diagonal `c * omega^g(q)` with `c^p = omega^r`; returns the site and `r`.
///
/// Such sites are torsion in a tensor once the global phase absorbs `r`.
pub fn random_torsion_diag(torus: Torus, rng: &mut Rng64) -> (KElement, u32) {
    let p = torus.p;
    let r = if torus.m >= 2 { rng.gen_range(0..p * p) } else { rng.gen_range(0..p) * p };
    let c = Phase::root(p, 2, r as i64).expect("valid");
    let mut g: Vec<i64> = (0..p - 1).map(|_| rng.gen_range(0..p) as i64).collect();
    let s: i64 = g.iter().sum::<i64>() + r as i64;
    g.push(-s);
    let xi = PhaseFunction::from_omega_exponents(p, &g).expect("valid").scale(c);
    (KElement::diagonal(torus, xi).expect("valid element"), r % p)
}

fn affine_diag(torus: Torus, slope: u32, offset: u32) -> KElement {
    let p = torus.p;
    let xi = PhaseFunction::from_fn(p, |q| Phase::omega_pow(p, (slope * q + offset) as i64))
        .expect("valid");
    KElement::diagonal(torus, xi).expect("affine tables have determinant one")
}

/// A single-site pair with scalar commutator `omega^c`, and the torsion
/// offsets `r` of each element (zero for shift sites).
#[derive(Debug, Clone)]
pub struct SitePair {
    pub m: KElement,
    pub n: KElement,
    pub c: u32,
    pub r_m: u32,
    pub r_n: u32,
}

/// Draws a scalar-commuting site pair, optionally with a prescribed `c`.
///
/// With `torsion_only` unset, diagonal pairs range over all of the torus.
pub fn random_site_pair(
    torus: Torus,
    forced_c: Option<u32>,
    torsion_only: bool,
    rng: &mut Rng64,
) -> SitePair {
    let p = torus.p;
    let pi = p as i64;
    let shape = match forced_c {
        Some(c) if c != 0 => rng.gen_range(1..4),
        _ => rng.gen_range(0..4),
    };
    match shape {
        0 => {
            let (m, r_m, n, r_n) = if torsion_only {
                let (m, r_m) = random_torsion_diag(torus, rng);
                let (n, r_n) = random_torsion_diag(torus, rng);
                (m, r_m, n, r_n)
            } else {
                let m = KElement::diagonal(torus, random_special_diag(torus, rng)).unwrap();
                let n = KElement::diagonal(torus, random_special_diag(torus, rng)).unwrap();
                (m, 0, n, 0)
            };
            SitePair { m, n, c: 0, r_m, r_n }
        }
        1 | 2 => {
            let b = random_nonzero(p, rng);
            let binv = inv_mod(b as u64, p as u64).unwrap() as i64;
            let shift = KElement::new(torus, random_special_diag(torus, rng), b as i64).unwrap();
            // [S X^b, D] = omega^(-slope b) and [D, S X^b] = omega^(slope b)
            let sign = if shape == 1 { -1 } else { 1 };
            let slope = match forced_c {
                Some(c) => (sign * c as i64 * binv).rem_euclid(pi) as u32,
                None => rng.gen_range(0..p),
            };
            let c = (sign * slope as i64 * b as i64).rem_euclid(pi) as u32;
            let d = affine_diag(torus, slope, rng.gen_range(0..p));
            if shape == 1 {
                SitePair { m: shift, n: d, c, r_m: 0, r_n: 0 }
            } else {
                SitePair { m: d, n: shift, c, r_m: 0, r_n: 0 }
            }
        }
        _ => {
            let b = random_nonzero(p, rng);
            let m = KElement::new(torus, random_special_diag(torus, rng), b as i64).unwrap();
            let y = random_nonzero(p, rng);
            let b2 = (b * y) % p;
            let b2inv = inv_mod(b2 as u64, p as u64).unwrap() as i64;
            // c = -c' b'
            let chi_slope = match forced_c {
                Some(c) => (-(c as i64) * b2inv).rem_euclid(pi) as u32,
                None => rng.gen_range(0..p),
            };
            let c = (-(chi_slope as i64) * b2 as i64).rem_euclid(pi) as u32;
            let chi = affine_diag(torus, chi_slope, 0);
            let a = rng.gen_range(0..p) as i64;
            let n = (&m * &chi).pow(y as i64).times_omega(-a);
            SitePair { m, n, c, r_m: 0, r_n: 0 }
        }
    }
}

/// Global phase making a tensor with the given site offsets torsion.
fn torsion_global(p: u32, r_sum: u32, rng: &mut Rng64) -> Phase {
    Phase::root(p, 2, -(r_sum as i64)).expect("valid") * Phase::omega_pow(p, rng.gen_range(0..p) as i64)
}

/// Two commuting p-torsion tensors on `n` sites.
pub fn random_commuting_torsion_pair(
    torus: Torus,
    n: usize,
    rng: &mut Rng64,
) -> (TensorElement, TensorElement) {
    let p = torus.p;
    let mut pairs: Vec<SitePair> = Vec::with_capacity(n);
    let mut total = 0u32;
    for k in 0..n {
        let forced = (k + 1 == n).then_some((p - total % p) % p);
        let sp = random_site_pair(torus, forced, true, rng);
        total = (total + sp.c) % p;
        pairs.push(sp);
    }
    let rm: u32 = pairs.iter().map(|s| s.r_m).sum::<u32>() % p;
    let rn: u32 = pairs.iter().map(|s| s.r_n).sum::<u32>() % p;
    let e = TensorElement::new(
        torsion_global(p, rm, rng),
        pairs.iter().map(|s| s.m.clone()).collect(),
    )
    .unwrap();
    let f = TensorElement::new(
        torsion_global(p, rn, rng),
        pairs.iter().map(|s| s.n.clone()).collect(),
    )
    .unwrap();
    (e, f)
}

/// Two tensors whose commutator is a scalar; returns the expected exponent.
pub fn random_scalar_commuting_pair(
    torus: Torus,
    n: usize,
    rng: &mut Rng64,
) -> (TensorElement, TensorElement, u32) {
    let p = torus.p;
    let pairs: Vec<SitePair> = (0..n).map(|_| random_site_pair(torus, None, false, rng)).collect();
    let c = pairs.iter().map(|s| s.c).sum::<u32>() % p;
    let e = TensorElement::from_sites(pairs.iter().map(|s| s.m.clone()).collect()).unwrap();
    let f = TensorElement::from_sites(pairs.iter().map(|s| s.n.clone()).collect()).unwrap();
    (e, f, c)
}

/// Mutually commuting p-torsion tensors.
///
/// Each site draws from one abelian class: diagonal elements (with
/// level-two constants balanced by the global phase), or powers of a fixed
/// `S_xi X` times scalars. A pair from [`random_commuting_torsion_pair`] can
/// be mixed in, giving sites that commute only up to cancelling scalars.
pub fn random_abelian_family(
    torus: Torus,
    n_sites: usize,
    k: usize,
    rng: &mut Rng64,
) -> Vec<TensorElement> {
    let p = torus.p;
    if rng.gen_bool(0.3) {
        let (e, f) = random_commuting_torsion_pair(torus, n_sites, rng);
        return (0..k)
            .map(|_| {
                let a = rng.gen_range(0..p) as i64;
                let b = rng.gen_range(0..p) as i64;
                e.pow(a).mul(&f.pow(b)).with_global(
                    e.pow(a).mul(&f.pow(b)).global() * Phase::omega_pow(p, rng.gen_range(0..p) as i64),
                )
            })
            .collect();
    }
    let classes: Vec<Option<KElement>> = (0..n_sites)
        .map(|_| {
            rng.gen_bool(0.5).then(|| {
                let b = random_nonzero(p, rng);
                KElement::new(torus, random_special_diag(torus, rng), b as i64).unwrap()
            })
        })
        .collect();
    (0..k)
        .map(|_| {
            let mut r_sum = 0;
            let sites = classes
                .iter()
                .map(|class| match class {
                    Some(g) => g.pow(rng.gen_range(0..p) as i64).times_omega(rng.gen_range(0..p) as i64),
                    None => {
                        let (d, r) = random_torsion_diag(torus, rng);
                        r_sum += r;
                        d
                    }
                })
                .collect();
            TensorElement::new(torsion_global(p, r_sum % p, rng), sites).unwrap()
        })
        .collect()
}

/// A quantum solution built from a commuting family.
///
/// Base generators `h_1..h_k` come from [`random_abelian_family`]; each
/// derived generator `g = omega^c prod h_j^(a_j)` adds the row
/// `(a, -1)` with right-hand side `-c`. One central scalar generator and a
/// combination of earlier rows are appended.
pub fn random_solution_instance(
    torus: Torus,
    n_sites: usize,
    rng: &mut Rng64,
) -> Result<(Lcs, GeneratorAssignment)> {
    let p = torus.p;
    if p == 2 {
        return Err(Error::EvenPrime("instances are generated for odd primes".into()));
    }
    let k = rng.gen_range(2..=3);
    let derived = rng.gen_range(1..=3);
    let mut gens = random_abelian_family(torus, n_sites, k, rng);
    let total = k + derived + 1;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut rhs: Vec<i64> = Vec::new();
    for t in 0..derived {
        let a: Vec<i64> = (0..k).map(|_| rng.gen_range(0..p) as i64).collect();
        let c = rng.gen_range(0..p) as i64;
        let g = a
            .iter()
            .zip(&gens)
            .fold(TensorElement::omega_scalar(torus, n_sites, c), |acc, (&e, h)| acc.mul(&h.pow(e)));
        let mut row = vec![0i64; total];
        row[..k].copy_from_slice(&a);
        row[k + t] = -1;
        rows.push(row);
        rhs.push(-c);
        gens.push(g);
    }
    let x = rng.gen_range(0..p) as i64;
    gens.push(TensorElement::omega_scalar(torus, n_sites, x));
    let mut row = vec![0i64; total];
    row[total - 1] = 1;
    rows.push(row);
    rhs.push(x);
    let w: Vec<i64> = (0..rows.len()).map(|_| rng.gen_range(0..p) as i64).collect();
    let combo: Vec<i64> = (0..total)
        .map(|j| rows.iter().zip(&w).map(|(r, c)| r[j] * c).sum())
        .collect();
    rhs.push(rhs.iter().zip(&w).map(|(b, c)| b * c).sum());
    rows.push(combo);
    Ok((Lcs::new(p, rows, rhs)?, GeneratorAssignment::new(gens)?))
}

/// A random consistent system and one of its solutions.
pub fn random_consistent_lcs(p: u32, rows: usize, cols: usize, rng: &mut Rng64) -> (Lcs, Vec<u32>) {
    let x: Vec<u32> = (0..cols).map(|_| rng.gen_range(0..p)).collect();
    let a: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..p) as i64).collect())
        .collect();
    let b = a
        .iter()
        .map(|r| r.iter().zip(&x).map(|(a, x)| a * *x as i64).sum())
        .collect();
    (Lcs::new(p, a, b).expect("valid"), x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn site_pairs_have_declared_commutator() {
        let mut r = rng(7);
        for p in [3u32, 5] {
            let torus = Torus::new(p, 2).unwrap();
            for _ in 0..500 {
                let forced = r.gen_bool(0.5).then(|| r.gen_range(0..p));
                let sp = random_site_pair(torus, forced, true, &mut r);
                assert_eq!(sp.m.scalar_commutant(&sp.n), Some(sp.c));
                if let Some(c) = forced {
                    assert_eq!(sp.c, c);
                }
            }
        }
    }

    #[test]
    fn commuting_pairs_are_torsion_and_commute() {
        let mut r = rng(11);
        for p in [3u32, 5] {
            let torus = Torus::new(p, 2).unwrap();
            for n in 1..=3 {
                for _ in 0..100 {
                    let (e, f) = random_commuting_torsion_pair(torus, n, &mut r);
                    assert!(e.is_p_torsion() && f.is_p_torsion());
                    assert!(e.commutes_with(&f));
                }
            }
        }
    }

    #[test]
    fn instances_are_quantum_solutions() {
        let mut r = rng(3);
        for p in [3u32, 5] {
            let torus = Torus::new(p, 2).unwrap();
            for _ in 0..30 {
                let (s, g) = random_solution_instance(torus, 2, &mut r).unwrap();
                let rep = crate::lcs::check_solution_conditions(&s, &g).unwrap();
                assert!(rep.is_quantum_solution(), "{:?}", rep.failures);
            }
        }
    }

    #[test]
    fn seeds_reproduce() {
        let torus = Torus::new(5, 2).unwrap();
        let a = random_commuting_torsion_pair(torus, 3, &mut rng(42));
        let b = random_commuting_torsion_pair(torus, 3, &mut rng(42));
        assert_eq!(a, b);
    }
}
