//! The projection `phi` onto the Heisenberg-Weyl group and the value map `nu`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclo::Phase;
use crate::error::{Error, Result};
use crate::kgroup::{KElement, Torus};
use crate::ktensor::TensorElement;
use crate::phase_fn::PhaseFunction;
use crate::zp::inv_mod;

/// `phase * (Z^a_1 X^b_1 ⊗ ... ⊗ Z^a_n X^b_n)` with `ZX = omega XZ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HWElement {
    pub p: u32,
    pub phase: Phase,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl HWElement {
    pub fn new(phase: Phase, a: Vec<u32>, b: Vec<u32>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::Shape("a and b differ in length".into()));
        }
        let p = phase.p();
        Ok(HWElement {
            p,
            phase,
            a: a.into_iter().map(|x| x % p).collect(),
            b: b.into_iter().map(|x| x % p).collect(),
        })
    }

    pub fn identity(p: u32, n: usize) -> Self {
        HWElement {
            p,
            phase: Phase::one(p),
            a: vec![0; n],
            b: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn is_identity(&self) -> bool {
        self.phase.is_one() && self.a.iter().chain(&self.b).all(|&x| x == 0)
    }

    fn check(&self, other: &HWElement) -> Result<()> {
        if self.p != other.p || self.n() != other.n() {
            return Err(Error::Shape("Heisenberg-Weyl elements differ in shape".into()));
        }
        Ok(())
    }

    /// `Z^a X^b Z^a' X^b' = omega^(-a' b) Z^(a+a') X^(b+b')` sitewise.
    pub fn checked_mul(&self, other: &HWElement) -> Result<HWElement> {
        self.check(other)?;
        let p = self.p;
        let cross: u64 = other
            .a
            .iter()
            .zip(&self.b)
            .map(|(x, y)| *x as u64 * *y as u64)
            .sum();
        Ok(HWElement {
            p,
            phase: self.phase * other.phase * Phase::omega_pow(p, -((cross % p as u64) as i64)),
            a: self.a.iter().zip(&other.a).map(|(x, y)| (x + y) % p).collect(),
            b: self.b.iter().zip(&other.b).map(|(x, y)| (x + y) % p).collect(),
        })
    }

    pub fn mul(&self, other: &HWElement) -> HWElement {
        self.checked_mul(other).expect("shapes must agree")
    }

    pub fn pow(&self, k: i64) -> HWElement {
        if k < 0 {
            return self.inv().pow(-k);
        }
        let mut acc = HWElement::identity(self.p, self.n());
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// `(c Z^a X^b)^-1 = c^-1 omega^(-a.b) Z^-a X^-b`.
    pub fn inv(&self) -> HWElement {
        let p = self.p;
        let ab: u64 = self.a.iter().zip(&self.b).map(|(x, y)| *x as u64 * *y as u64).sum();
        HWElement {
            p,
            phase: self.phase.inv() * Phase::omega_pow(p, -((ab % p as u64) as i64)),
            a: self.a.iter().map(|x| (p - x) % p).collect(),
            b: self.b.iter().map(|x| (p - x) % p).collect(),
        }
    }

    /// `c` with `h h' = omega^c h' h`, namely `a.b' - a'.b`.
    pub fn commutator_exponent(&self, other: &HWElement) -> Result<u32> {
        self.check(other)?;
        let p = self.p as u64;
        let dot = |x: &[u32], y: &[u32]| -> u64 {
            x.iter().zip(y).map(|(u, v)| *u as u64 * *v as u64 % p).sum::<u64>() % p
        };
        Ok(((dot(&self.a, &other.b) + p - dot(&other.a, &self.b)) % p) as u32)
    }

    /// As a tensor of `K` elements, for cross-checks against the group law.
    pub fn to_tensor(&self, torus: Torus) -> Result<TensorElement> {
        let p = self.p;
        let sites = self
            .a
            .iter()
            .zip(&self.b)
            .map(|(&a, &b)| {
                let xi = PhaseFunction::from_fn(p, |q| Phase::omega_pow(p, (a * q) as i64))?;
                if xi.is_special() {
                    KElement::new(torus, xi, b as i64)
                } else {
                    Err(Error::EvenPrime("Z has determinant -1 when p = 2".into()))
                }
            })
            .collect::<Result<_>>()?;
        TensorElement::new(self.phase, sites)
    }
}

impl fmt::Display for HWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.phase)?;
        for (a, b) in self.a.iter().zip(&self.b) {
            write!(f, " ⊗ Z^{a}X^{b}")?;
        }
        Ok(())
    }
}

/// How the diagonal map `R` treats the constant part of higher levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Keeps the exact constant `exp(2 pi i sum_{j>=2} theta_{j,0} / p^j)`.
    #[default]
    Proof,
    /// Uses `omega^(theta_{1,0} + theta_{2,0} + theta_{1,1} q)` as displayed.
    Displayed,
    /// Uses `P` for diagonal sites too.
    Naive,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proof" => Ok(Variant::Proof),
            "displayed" => Ok(Variant::Displayed),
            "naive" => Ok(Variant::Naive),
            _ => Err(Error::Invalid(format!("unknown variant {s}"))),
        }
    }
}

/// Image of one site: `phase * Z^a X^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalHW {
    pub phase: Phase,
    pub a: u32,
    pub b: u32,
}

impl LocalHW {
    fn to_hw(self) -> HWElement {
        HWElement {
            p: self.phase.p(),
            phase: self.phase,
            a: vec![self.a],
            b: vec![self.b],
        }
    }

    fn from_hw(h: &HWElement) -> Self {
        LocalHW {
            phase: h.phase,
            a: h.a[0],
            b: h.b[0],
        }
    }
}

/// `P(xi) = omega^(theta_{1,0} + theta_{1,1} q)`.
pub fn p_map(xi: &PhaseFunction, m: u32) -> Result<LocalHW> {
    let c = xi.decompose(m)?;
    Ok(LocalHW {
        phase: Phase::omega_pow(xi.p(), c.get(1, 0) as i64),
        a: c.get(1, 1),
        b: 0,
    })
}

/// `R(xi)` for a diagonal p-torsion site, per variant.
pub fn r_map(xi: &PhaseFunction, m: u32, variant: Variant) -> Result<LocalHW> {
    if variant == Variant::Naive {
        return p_map(xi, m);
    }
    let p = xi.p();
    let c = xi.decompose(m)?;
    if !c.higher_levels_constant() {
        return Err(Error::Precondition(
            "diagonal site has non-constant terms above level one".into(),
        ));
    }
    let base = Phase::omega_pow(p, c.get(1, 0) as i64);
    let extra = match variant {
        Variant::Proof => {
            let y: u64 = (2..=m).map(|j| c.get(j, 0) as u64 * (p as u64).pow(m - j)).sum();
            Phase::from_exponent(p, m, y)
        }
        Variant::Displayed => Phase::omega_pow(p, c.get(2, 0) as i64),
        Variant::Naive => unreachable!(),
    };
    Ok(LocalHW {
        phase: base * extra,
        a: c.get(1, 1),
        b: 0,
    })
}

/// `phi_1` on one p-torsion site, `p` odd.
pub fn phi_local(g: &KElement, variant: Variant) -> Result<LocalHW> {
    let p = g.p();
    if p == 2 {
        return Err(Error::EvenPrime("phi is defined for odd primes".into()));
    }
    if !g.is_p_torsion() {
        return Err(Error::NotTorsion);
    }
    phi_local_unchecked(g, variant)
}

/// Image of a site inside a p-torsion tensor.
///
/// Diagonal sites there need only be torsion up to a scalar, which the
/// tensor's global phase absorbs, so no torsion check is made.
pub fn phi_site(g: &KElement, variant: Variant) -> Result<LocalHW> {
    phi_local_unchecked(g, variant)
}

fn phi_local_unchecked(g: &KElement, variant: Variant) -> Result<LocalHW> {
    let m = g.torus().m;
    match g.b() {
        0 => r_map(g.xi(), m, variant),
        1 => Ok(LocalHW {
            b: 1,
            ..p_map(g.xi(), m)?
        }),
        b => {
            let p = g.p() as u64;
            let binv = inv_mod(b as u64, p).expect("b nonzero") as i64;
            let base = phi_local_unchecked(&g.pow(binv), variant)?;
            Ok(LocalHW::from_hw(&base.to_hw().pow(b as i64)))
        }
    }
}

/// `phi(E) = global * phi_1(M_1) ⊗ ... ⊗ phi_1(M_n)` on p-torsion tensors.
pub fn phi(e: &TensorElement, variant: Variant) -> Result<HWElement> {
    if e.p() == 2 {
        return Err(Error::EvenPrime("phi is defined for odd primes".into()));
    }
    if !e.is_p_torsion() {
        return Err(Error::NotTorsion);
    }
    let mut phase = e.global();
    let mut a = Vec::with_capacity(e.n());
    let mut b = Vec::with_capacity(e.n());
    for s in e.sites() {
        let l = phi_local_unchecked(s, variant)?;
        phase = phase * l.phase;
        a.push(l.a);
        b.push(l.b);
    }
    HWElement::new(phase, a, b)
}

/// `nu(omega^c Z^a X^b) = c + 2^-1 sum_i a_i b_i mod p`.
pub fn value_map_nu(h: &HWElement) -> Result<u32> {
    let p = h.p as u64;
    if p == 2 {
        return Err(Error::EvenPrime("nu is defined for odd primes".into()));
    }
    let c = h
        .phase
        .as_omega_power()
        .ok_or_else(|| Error::Precondition("global phase is not a power of omega".into()))?;
    let half = inv_mod(2, p).expect("p odd");
    let ab: u64 = h.a.iter().zip(&h.b).map(|(x, y)| *x as u64 * *y as u64 % p).sum::<u64>() % p;
    Ok(((c as u64 + half * ab) % p) as u32)
}

/// The qubit pair on which the analogue of `phi` fails to be multiplicative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenPrimeReport {
    pub m: KElement,
    pub n: KElement,
    pub m_squared_is_identity: bool,
    pub n_squared_is_identity: bool,
    pub commute: bool,
    pub product_is_minus_one: bool,
    pub phi_m: HWElement,
    pub phi_n: HWElement,
    pub phi_of_product: HWElement,
    pub product_of_phis: HWElement,
}

impl EvenPrimeReport {
    /// `phi(MN) != phi(M) phi(N)`.
    pub fn homomorphism_fails(&self) -> bool {
        self.phi_of_product != self.product_of_phis
    }

    /// Every claim of the example holds as stated.
    pub fn reproduces_example(&self) -> bool {
        let minus_one = HWElement {
            p: 2,
            phase: Phase::omega(2),
            a: vec![0],
            b: vec![0],
        };
        self.m_squared_is_identity
            && self.n_squared_is_identity
            && self.commute
            && self.product_is_minus_one
            && self.phi_of_product == minus_one
            && self.product_of_phis.is_identity()
    }
}

/// `M = S_xi1 X`, `xi1(q) = (-1)^(1+q) i` and `N = S_xi2 X`, `xi2(q) = (-1)^q i`.
pub fn even_prime_counterexample() -> Result<EvenPrimeReport> {
    let torus = Torus::new(2, 2)?;
    let i = Phase::root(2, 2, 1)?;
    let minus = Phase::omega(2);
    let m = KElement::new(torus, PhaseFunction::new(vec![minus * i, i])?, 1)?;
    let n = KElement::new(torus, PhaseFunction::new(vec![i, minus * i])?, 1)?;
    let mn = m.checked_mul(&n)?;
    let phi_m = phi_local_unchecked(&m, Variant::Naive)?.to_hw();
    let phi_n = phi_local_unchecked(&n, Variant::Naive)?.to_hw();
    let phi_of_product = phi_local_unchecked(&mn, Variant::Naive)?.to_hw();
    Ok(EvenPrimeReport {
        m_squared_is_identity: m.pow(2).is_identity(),
        n_squared_is_identity: n.pow(2).is_identity(),
        commute: m.commutes_with(&n),
        product_is_minus_one: mn == KElement::scalar(torus, minus)?,
        product_of_phis: phi_m.mul(&phi_n),
        phi_m,
        phi_n,
        phi_of_product,
        m,
        n,
    })
}
