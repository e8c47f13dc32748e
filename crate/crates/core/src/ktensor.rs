//! Tensor products `K^⊗n` with an explicit global phase, and symplectic vectors.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::cyclo::Phase;
use crate::error::{Error, Result};
use crate::kgroup::{KElement, Torus};
use crate::phase_fn::PhaseFunction;
use crate::zp::inv_mod;

/// `global * M_1 ⊗ ... ⊗ M_n`.
///
/// Two elements are equal when they induce the same operator: per-site
/// constant factors may move between a site and the global phase.
#[derive(Clone, Serialize)]
pub struct TensorElement {
    global: Phase,
    sites: Vec<KElement>,
}

#[derive(Deserialize)]
struct RawTensor {
    global: Option<Phase>,
    sites: Vec<KElement>,
}

impl<'de> Deserialize<'de> for TensorElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RawTensor::deserialize(d)?;
        let p = r
            .sites
            .first()
            .map(|s| s.p())
            .ok_or_else(|| serde::de::Error::custom("tensor needs at least one site"))?;
        TensorElement::new(r.global.unwrap_or(Phase::one(p)), r.sites)
            .map_err(serde::de::Error::custom)
    }
}

impl TensorElement {
    /// Builds a tensor; sites are lifted to the largest context among them.
    pub fn new(global: Phase, sites: Vec<KElement>) -> Result<Self> {
        let first = sites
            .first()
            .ok_or_else(|| Error::Shape("tensor needs at least one site".into()))?;
        let p = first.p();
        if global.p() != p {
            return Err(Error::PrimeMismatch(p, global.p()));
        }
        if let Some(s) = sites.iter().find(|s| s.p() != p) {
            return Err(Error::PrimeMismatch(p, s.p()));
        }
        let m = sites.iter().map(|s| s.torus().m).max().unwrap_or(1);
        let sites = sites
            .into_iter()
            .map(|s| if s.torus().m == m { Ok(s) } else { s.lift(m) })
            .collect::<Result<_>>()?;
        Ok(TensorElement { global, sites })
    }

    pub fn from_sites(sites: Vec<KElement>) -> Result<Self> {
        let p = sites.first().map(|s| s.p()).unwrap_or(2);
        Self::new(Phase::one(p), sites)
    }

    pub fn identity(torus: Torus, n: usize) -> Self {
        Self::scalar(torus, n, Phase::one(torus.p))
    }

    pub fn scalar(torus: Torus, n: usize, c: Phase) -> Self {
        TensorElement {
            global: c,
            sites: vec![KElement::identity(torus); n],
        }
    }

    /// `omega^c * 1`.
    pub fn omega_scalar(torus: Torus, n: usize, c: i64) -> Self {
        Self::scalar(torus, n, Phase::omega_pow(torus.p, c))
    }

    /// `g` on site `k`, identity elsewhere.
    pub fn local(g: KElement, k: usize, n: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::Shape(format!("site {k} out of range for n = {n}")));
        }
        let mut sites = vec![KElement::identity(g.torus()); n];
        sites[k] = g;
        Self::from_sites(sites)
    }

    pub fn global(&self) -> Phase {
        self.global
    }

    pub fn sites(&self) -> &[KElement] {
        &self.sites
    }

    pub fn n(&self) -> usize {
        self.sites.len()
    }

    pub fn p(&self) -> u32 {
        self.global.p()
    }

    pub fn torus(&self) -> Torus {
        self.sites[0].torus()
    }

    pub fn b_vector(&self) -> Vec<u32> {
        self.sites.iter().map(|s| s.b()).collect()
    }

    pub fn with_global(&self, global: Phase) -> Self {
        TensorElement {
            global,
            sites: self.sites.clone(),
        }
    }

    fn check_shape(&self, other: &TensorElement) -> Result<()> {
        if self.p() != other.p() {
            return Err(Error::PrimeMismatch(self.p(), other.p()));
        }
        if self.n() != other.n() {
            return Err(Error::Shape(format!("{} sites vs {}", self.n(), other.n())));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check_shape(other)?;
        Ok(TensorElement {
            global: self.global * other.global,
            sites: self
                .sites
                .iter()
                .zip(&other.sites)
                .map(|(a, b)| a.checked_mul(b))
                .collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        self.checked_mul(other).expect("tensor shapes must agree")
    }

    pub fn inv(&self) -> TensorElement {
        TensorElement {
            global: self.global.inv(),
            sites: self.sites.iter().map(|s| s.inv()).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> TensorElement {
        TensorElement {
            global: self.global.pow(n),
            sites: self.sites.iter().map(|s| s.pow(n)).collect(),
        }
    }

    /// `E E' E^-1 E'^-1`; the global phases cancel.
    pub fn checked_commutator(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check_shape(other)?;
        Ok(TensorElement {
            global: Phase::one(self.p()),
            sites: self
                .sites
                .iter()
                .zip(&other.sites)
                .map(|(a, b)| a.commutator(b))
                .collect(),
        })
    }

    pub fn commutator(&self, other: &TensorElement) -> TensorElement {
        self.checked_commutator(other).expect("tensor shapes must agree")
    }

    /// The operator as a scalar, when it is one.
    pub fn as_scalar(&self) -> Option<Phase> {
        self.sites.iter().try_fold(self.global, |acc, s| {
            if s.b() != 0 {
                return None;
            }
            Some(acc * s.xi().as_constant()?)
        })
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }

    /// Commutator as a phase, if scalar (possibly not an omega-power).
    pub fn commutator_scalar(&self, other: &TensorElement) -> Option<Phase> {
        self.commutator(other).as_scalar()
    }

    /// `c` with `[E, E'] = omega^c 1`.
    pub fn commutator_exponent(&self, other: &TensorElement) -> Option<u32> {
        self.commutator_scalar(other)?.as_omega_power()
    }

    pub fn commutes_with(&self, other: &TensorElement) -> bool {
        self.commutator(other).is_identity()
    }

    /// `E^p = 1`, computed directly.
    pub fn is_p_torsion(&self) -> bool {
        self.pow(self.p() as i64).is_identity()
    }

    /// Structural test: each diagonal site must be constant above level one,
    /// and the p-th powers of those constants together with `global^p`
    /// multiply to one (for `m = 2` this is `sum theta_{2,0} = 0 mod p`).
    pub fn is_p_torsion_structural(&self) -> Result<bool> {
        let p = self.p();
        let m = self.torus().m;
        let mut acc = self.global.pow(p as i64);
        for s in &self.sites {
            if s.b() != 0 {
                continue;
            }
            let c = s.xi().decompose(m)?;
            if !c.higher_levels_constant() {
                return Ok(false);
            }
            // The constant part of levels two and up.
            let y: u64 = (2..=m)
                .map(|j| c.get(j, 0) as u64 * (p as u64).pow(m - j))
                .sum();
            acc = acc * Phase::from_exponent(p, m, y).pow(p as i64);
        }
        Ok(acc.is_one())
    }

    /// Literal vector: `fbar_i = theta_{1,1}` of site `i`, `bbar_i = b_i`.
    pub fn symplectic_vector(&self) -> Result<SymplecticVector> {
        let m = self.torus().m;
        let fbar = self
            .sites
            .iter()
            .map(|s| Ok(s.xi().decompose(m)?.get(1, 1)))
            .collect::<Result<_>>()?;
        Ok(SymplecticVector {
            p: self.p(),
            fbar,
            bbar: self.b_vector(),
        })
    }

    /// Vector read after bringing each shift site to the form `(xi', 1)^b`:
    /// `fbar_i = b_i * theta_{1,1}(xi')` for `b_i != 0`.
    pub fn normalized_symplectic_vector(&self) -> Result<SymplecticVector> {
        let p = self.p();
        let m = self.torus().m;
        let fbar = self
            .sites
            .iter()
            .map(|s| {
                if s.b() == 0 {
                    return Ok(s.xi().decompose(m)?.get(1, 1));
                }
                let binv = inv_mod(s.b() as u64, p as u64).expect("nonzero") as i64;
                let base = s.pow(binv);
                Ok(s.b() * base.xi().decompose(m)?.get(1, 1) % p)
            })
            .collect::<Result<_>>()?;
        Ok(SymplecticVector {
            p,
            fbar,
            bbar: self.b_vector(),
        })
    }

    /// Key for the equality contract: each site divided by its value at 0,
    /// with those constants pushed into the global phase.
    fn normal_key(&self) -> (Phase, Vec<(u32, Vec<Phase>)>) {
        let mut global = self.global;
        let sites = self
            .sites
            .iter()
            .map(|s| {
                let c = s.xi().values()[0];
                global = global * c;
                let xi: PhaseFunction = s.xi().scale(c.inv());
                (s.b(), xi.values().to_vec())
            })
            .collect();
        (global, sites)
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.p() == other.p() && self.n() == other.n() && self.normal_key() == other.normal_key()
    }
}

impl Eq for TensorElement {}

impl Hash for TensorElement {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.normal_key().hash(h);
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.global)?;
        for s in &self.sites {
            write!(f, " ⊗ {s:?}")?;
        }
        Ok(())
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `v = (fbar, bbar)` in `Z_p^(2n)`; `fbar` plays the Z role.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymplecticVector {
    pub p: u32,
    pub fbar: Vec<u32>,
    pub bbar: Vec<u32>,
}

impl SymplecticVector {
    pub fn new(p: u32, fbar: Vec<u32>, bbar: Vec<u32>) -> Result<Self> {
        if fbar.len() != bbar.len() {
            return Err(Error::Shape("fbar and bbar differ in length".into()));
        }
        Ok(SymplecticVector {
            p,
            fbar: fbar.into_iter().map(|x| x % p).collect(),
            bbar: bbar.into_iter().map(|x| x % p).collect(),
        })
    }
}

/// `[v, v'] = fbar . bbar' - fbar' . bbar mod p`.
pub fn symplectic_form(v: &SymplecticVector, w: &SymplecticVector) -> Result<u32> {
    if v.p != w.p || v.fbar.len() != w.fbar.len() {
        return Err(Error::Shape("symplectic vectors differ in shape".into()));
    }
    let p = v.p as u64;
    let dot = |a: &[u32], b: &[u32]| -> u64 {
        a.iter().zip(b).map(|(x, y)| *x as u64 * *y as u64 % p).sum::<u64>() % p
    };
    Ok(((dot(&v.fbar, &w.bbar) + p - dot(&w.fbar, &v.bbar)) % p) as u32)
}

/// All pairwise forms vanish; by bilinearity the span is then isotropic.
pub fn is_isotropic(vs: &[SymplecticVector]) -> Result<bool> {
    for (i, v) in vs.iter().enumerate() {
        for w in &vs[i + 1..] {
            if symplectic_form(v, w)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: u32, m: u32) -> Torus {
        Torus::new(p, m).unwrap()
    }

    fn xs(torus: Torus, n: usize) -> TensorElement {
        TensorElement::from_sites(vec![KElement::shift(torus); n]).unwrap()
    }

    fn zs(torus: Torus, n: usize) -> TensorElement {
        TensorElement::from_sites(vec![KElement::clock(torus).unwrap(); n]).unwrap()
    }

    fn cube_root_site(e: i64) -> KElement {
        // constant cube root of omega^e, balanced to determinant one
        let torus = t(3, 2);
        let r = Phase::root(3, 2, e).unwrap();
        let xi = PhaseFunction::new(vec![r, r, r.pow(-2)]).unwrap();
        KElement::diagonal(torus, xi).unwrap()
    }

    #[test]
    fn commutator_examples() {
        let torus = t(3, 1);
        let e = xs(torus, 3);
        assert_eq!(e.commutator_exponent(&e), Some(0));
        assert_eq!(e.commutator_exponent(&zs(torus, 3)), Some(0));
        let x1 = TensorElement::local(KElement::shift(torus), 0, 2).unwrap();
        let z1 = TensorElement::local(KElement::clock(torus).unwrap(), 0, 2).unwrap();
        assert_eq!(x1.commutator_exponent(&z1), Some(2));
    }

    #[test]
    fn equality_moves_constants() {
        let torus = t(3, 1);
        let w = Phase::omega(3);
        let scaled = KElement::new(torus, PhaseFunction::constant(3, w).mul(&KElement::clock(torus).unwrap().xi().clone()), 0).unwrap();
        let a = TensorElement::new(Phase::one(3), vec![scaled]).unwrap();
        let b = TensorElement::new(w, vec![KElement::clock(torus).unwrap()]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, TensorElement::from_sites(vec![KElement::clock(torus).unwrap()]).unwrap());
    }

    #[test]
    fn torsion_examples() {
        assert!(xs(t(3, 1), 3).is_p_torsion());
        let pair = TensorElement::from_sites(vec![cube_root_site(1), cube_root_site(2)]).unwrap();
        assert!(pair.is_p_torsion());
        assert!(pair.is_p_torsion_structural().unwrap());
        let same = TensorElement::from_sites(vec![cube_root_site(1), cube_root_site(1)]).unwrap();
        assert!(!same.is_p_torsion());
        assert!(!same.is_p_torsion_structural().unwrap());
    }

    #[test]
    fn vectors_and_forms() {
        let torus = t(3, 1);
        let v = xs(torus, 2).symplectic_vector().unwrap();
        assert_eq!((v.fbar, v.bbar), (vec![0, 0], vec![1, 1]));
        let z1 = TensorElement::from_sites(vec![KElement::clock(torus).unwrap(), KElement::identity(torus)]).unwrap();
        let v = z1.symplectic_vector().unwrap();
        assert_eq!((v.fbar, v.bbar), (vec![1, 0], vec![0, 0]));

        let a = SymplecticVector::new(3, vec![1], vec![0]).unwrap();
        let b = SymplecticVector::new(3, vec![0], vec![1]).unwrap();
        assert_eq!(symplectic_form(&a, &a).unwrap(), 0);
        assert_eq!(symplectic_form(&a, &b).unwrap(), 1);
        assert!(is_isotropic(std::slice::from_ref(&a)).unwrap());
        assert!(!is_isotropic(&[a, b]).unwrap());

        let vx = xs(torus, 3).symplectic_vector().unwrap();
        let vz = zs(torus, 3).symplectic_vector().unwrap();
        assert_eq!(symplectic_form(&vx, &vz).unwrap(), 0);
    }

    #[test]
    fn json_roundtrip() {
        let e = xs(t(3, 1), 2).with_global(Phase::omega(3));
        let s = serde_json::to_string(&e).unwrap();
        let back: TensorElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
    }
}
