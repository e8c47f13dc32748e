//! The single-site group `K = Q ⋊ <X>` with `Q = T_(p^m)`.
//!
//! An element `(xi, b)` is the monomial operator `S_xi X^b`, acting as
//! `|q> -> xi(q + b) |q + b>`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::cyclo::Phase;
use crate::error::{Error, Result};
use crate::phase_fn::PhaseFunction;
use crate::zp::{check_prime, checked_power, inv_mod, reduce};

pub const DEFAULT_MAX_LEVEL: u32 = 4;
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// The context `Q = T_(p^m)`: determinant-one diagonal phases of order
/// dividing `p^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Torus {
    pub p: u32,
    pub m: u32,
}

impl Torus {
    pub fn new(p: u32, m: u32) -> Result<Self> {
        Self::with_max_level(p, m, DEFAULT_MAX_LEVEL)
    }

    pub fn with_max_level(p: u32, m: u32, max_level: u32) -> Result<Self> {
        check_prime(p)?;
        if m > max_level {
            return Err(Error::LevelTooHigh {
                level: m,
                max: max_level,
            });
        }
        checked_power(p, m * p)?;
        Ok(Torus { p, m })
    }

    /// `|T_(p^m)| = p^(m(p-1))`.
    pub fn diagonal_count(&self) -> u128 {
        (self.p as u128).pow(self.m * (self.p - 1))
    }

    /// `|K| = p^(m(p-1)+1)`.
    pub fn group_order(&self) -> u128 {
        self.diagonal_count() * self.p as u128
    }

    /// All determinant-one value tables with `p^m`-th root entries.
    pub fn diagonals(&self, budget: u64) -> Result<Vec<PhaseFunction>> {
        let needed = self.diagonal_count();
        if needed > budget as u128 {
            return Err(Error::Budget { needed, budget });
        }
        let p = self.p;
        let modulus = (p as u64).pow(self.m);
        let free = p as usize - 1;
        let mut out = Vec::with_capacity(needed as usize);
        let mut digits = vec![0u64; free];
        loop {
            let sum: u64 = digits.iter().sum();
            let mut values: Vec<Phase> = digits
                .iter()
                .map(|&e| Phase::from_exponent(p, self.m, e))
                .collect();
            values.push(Phase::from_exponent(p, self.m, (modulus - sum % modulus) % modulus));
            out.push(PhaseFunction::new(values)?);
            let mut k = 0;
            loop {
                if k == free {
                    return Ok(out);
                }
                digits[k] += 1;
                if digits[k] < modulus {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
        }
    }
}

/// `S_xi X^b` with `det S_xi = 1` and `S_xi` in `T_(p^m)`.
///
/// Equality and ordering compare the operator only, not the context level.
#[derive(Clone)]
pub struct KElement {
    torus: Torus,
    xi: PhaseFunction,
    b: u32,
}

impl PartialEq for KElement {
    fn eq(&self, other: &Self) -> bool {
        self.b == other.b && self.xi == other.xi
    }
}

impl Eq for KElement {}

impl std::hash::Hash for KElement {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.b.hash(h);
        self.xi.hash(h);
    }
}

impl PartialOrd for KElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for KElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.b, &self.xi).cmp(&(other.b, &other.xi))
    }
}

#[derive(Serialize, Deserialize)]
struct RawKElement {
    b: i64,
    xi: PhaseFunction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
}

impl Serialize for KElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawKElement {
            b: self.b as i64,
            xi: self.xi.clone(),
            m: Some(self.torus.m),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RawKElement::deserialize(d)?;
        let m = r.m.unwrap_or_else(|| r.xi.max_level().max(1));
        let torus = Torus::new(r.xi.p(), m).map_err(serde::de::Error::custom)?;
        KElement::new(torus, r.xi, r.b).map_err(serde::de::Error::custom)
    }
}

impl KElement {
    pub fn new(torus: Torus, xi: PhaseFunction, b: i64) -> Result<Self> {
        if xi.p() != torus.p {
            return Err(Error::PrimeMismatch(torus.p, xi.p()));
        }
        if !xi.is_special() {
            return Err(Error::NotSpecial(xi.det().to_string()));
        }
        let level = xi.max_level();
        if level > torus.m {
            return Err(Error::LevelTooHigh {
                level,
                max: torus.m,
            });
        }
        Ok(KElement {
            torus,
            xi,
            b: reduce(b, torus.p as u64) as u32,
        })
    }

    fn raw(torus: Torus, xi: PhaseFunction, b: u32) -> Self {
        KElement { torus, xi, b }
    }

    pub fn identity(torus: Torus) -> Self {
        Self::raw(torus, PhaseFunction::one(torus.p), 0)
    }

    /// The shift `X`.
    pub fn shift(torus: Torus) -> Self {
        Self::raw(torus, PhaseFunction::one(torus.p), 1)
    }

    pub fn diagonal(torus: Torus, xi: PhaseFunction) -> Result<Self> {
        Self::new(torus, xi, 0)
    }

    /// The scalar `c * 1`; needs `c^p = 1` for determinant one.
    pub fn scalar(torus: Torus, c: Phase) -> Result<Self> {
        Self::diagonal(torus, PhaseFunction::constant(torus.p, c))
    }

    /// The clock `Z = diag(omega^q)`. Its determinant is `-1` when `p = 2`.
    pub fn clock(torus: Torus) -> Result<Self> {
        let xi = PhaseFunction::from_fn(torus.p, |q| Phase::omega_pow(torus.p, q as i64))?;
        Self::diagonal(torus, xi)
    }

    pub fn torus(&self) -> Torus {
        self.torus
    }

    pub fn p(&self) -> u32 {
        self.torus.p
    }

    pub fn xi(&self) -> &PhaseFunction {
        &self.xi
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn is_identity(&self) -> bool {
        self.b == 0 && self.xi.values().iter().all(|v| v.is_one())
    }

    /// Moves the element into a larger context.
    pub fn lift(&self, m: u32) -> Result<Self> {
        Self::new(Torus::new(self.p(), m)?, self.xi.clone(), self.b as i64)
    }

    fn joint(&self, other: &KElement) -> Result<Torus> {
        if self.p() != other.p() {
            return Err(Error::PrimeMismatch(self.p(), other.p()));
        }
        Ok(Torus {
            p: self.p(),
            m: self.torus.m.max(other.torus.m),
        })
    }

    /// `(xi, b)(xi', b') = (xi * (b . xi'), b + b')`.
    pub fn checked_mul(&self, other: &KElement) -> Result<KElement> {
        let torus = self.joint(other)?;
        Ok(Self::raw(
            torus,
            self.xi.mul(&other.xi.act(self.b as i64)),
            (self.b + other.b) % self.p(),
        ))
    }

    /// `(xi, b)^-1 = ((-b) . xi^-1, -b)`.
    pub fn inv(&self) -> KElement {
        let p = self.p();
        Self::raw(self.torus, self.xi.inv().act(-(self.b as i64)), (p - self.b) % p)
    }

    /// Closed form `(xi, b)^n = (prod_{i<n} (ib) . xi, nb)`.
    pub fn pow(&self, n: i64) -> KElement {
        if n < 0 {
            return self.inv().pow(-n);
        }
        let p = self.p() as u64;
        // Every element has order dividing p^(m+1).
        let n = n as u64 % p.pow(self.torus.m + 1);
        let b = self.b as i64;
        let values = (0..p as i64)
            .map(|q| {
                (0..n as i64).fold(Phase::one(self.p()), |acc, i| acc * self.xi.at(q - i * b))
            })
            .collect();
        Self::raw(
            self.torus,
            PhaseFunction::new(values).expect("table shape preserved"),
            ((n % p) * self.b as u64 % p) as u32,
        )
    }

    /// `[M, N] = M N M^-1 N^-1 = (xi(q) xi'(q-b) xi^-1(q-b') xi'^-1(q), 0)`.
    pub fn commutator(&self, other: &KElement) -> KElement {
        let (b, b2) = (self.b as i64, other.b as i64);
        let values = (0..self.p() as i64)
            .map(|q| {
                self.xi.at(q) * other.xi.at(q - b) * self.xi.at(q - b2).inv() * other.xi.at(q).inv()
            })
            .collect();
        Self::raw(
            self.joint(other).expect("commutator needs a shared prime"),
            PhaseFunction::new(values).expect("table shape preserved"),
            0,
        )
    }

    pub fn commutes_with(&self, other: &KElement) -> bool {
        self.commutator(other).is_identity()
    }

    /// The commutator when it is a scalar, as a phase.
    pub fn commutator_scalar(&self, other: &KElement) -> Option<Phase> {
        self.commutator(other).xi.as_constant()
    }

    /// `c` with `[M, N] = omega^c 1`, if the commutator has that form.
    pub fn scalar_commutant(&self, other: &KElement) -> Option<u32> {
        self.commutator_scalar(other)?.as_omega_power()
    }

    /// `M^p = 1`, computed directly.
    pub fn is_p_torsion(&self) -> bool {
        self.pow(self.p() as i64).is_identity()
    }

    /// Structural test: `b != 0`, or `b = 0` with `S_xi` in `T_(p)`.
    pub fn is_p_torsion_structural(&self) -> bool {
        self.b != 0 || self.xi.max_level() <= 1
    }

    /// Multiplies the diagonal part by a scalar `omega^a`.
    pub fn times_omega(&self, a: i64) -> KElement {
        Self::raw(
            self.torus,
            self.xi.scale(Phase::omega_pow(self.p(), a)),
            self.b,
        )
    }

    /// Which case of the commuting-pair classification applies, with witnesses.
    pub fn classify_commuting_pair(&self, other: &KElement) -> Result<CommutingCase> {
        let p = self.p();
        let c = self.scalar_commutant(other).ok_or_else(|| {
            Error::Precondition("commutator is not of the form omega^c 1".into())
        })?;
        match (self.b, other.b) {
            (0, 0) => Ok(CommutingCase::BothDiagonal),
            (b, 0) => {
                let (slope, offset) = affine_witness(other.xi(), b, c, false)?;
                Ok(CommutingCase::ShiftWithDiagonal {
                    c,
                    slope,
                    offset,
                    central: c == 0,
                })
            }
            (0, b) => {
                let (slope, offset) = affine_witness(self.xi(), b, c, true)?;
                Ok(CommutingCase::DiagonalWithShift {
                    c,
                    slope,
                    offset,
                    central: c == 0,
                })
            }
            (b, b2) => {
                let y = (b2 as u64 * inv_mod(b as u64, p as u64).expect("b is nonzero") % p as u64)
                    as u32;
                for chi_slope in 0..p {
                    let chi =
                        PhaseFunction::from_fn(p, |q| Phase::omega_pow(p, (chi_slope * q) as i64))?;
                    let s_chi = Self::raw(self.torus, chi, 0);
                    let rhs = self.checked_mul(&s_chi)?.pow(y as i64);
                    for a in 0..p {
                        if other.times_omega(a as i64) == rhs {
                            return Ok(CommutingCase::BothShift {
                                c,
                                a,
                                y,
                                chi_slope,
                            });
                        }
                    }
                }
                Err(Error::Precondition(
                    "no witness (a, y, chi) found for a commuting pair".into(),
                ))
            }
        }
    }

    /// Smallest `k >= 1` with `M^k = 1`.
    pub fn order(&self) -> u64 {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.checked_mul(self).expect("same context");
            k += 1;
        }
        k
    }

    /// Dense matrix with `Some(phase)` at nonzero entries, row-major.
    pub fn to_matrix(&self) -> Vec<Vec<Option<Phase>>> {
        let p = self.p() as usize;
        let mut m = vec![vec![None; p]; p];
        for q in 0..p {
            let row = (q + self.b as usize) % p;
            m[row][q] = Some(self.xi.values()[row]);
        }
        m
    }
}

/// Finds `xi(q) = omega^(slope q + offset)` for the diagonal partner of a
/// shift element and checks it against the commutator exponent `c`.
fn affine_witness(xi: &PhaseFunction, b: u32, c: u32, diag_first: bool) -> Result<(u32, u32)> {
    let p = xi.p();
    let offset = xi.values()[0].as_omega_power();
    let one = xi.values()[1 % p as usize].as_omega_power();
    let (offset, one) = match (offset, one) {
        (Some(o), Some(v)) => (o, v),
        _ => return Err(Error::Precondition("diagonal partner is not in T_(p)".into())),
    };
    let slope = (one + p - offset) % p;
    let expected = PhaseFunction::from_fn(p, |q| {
        Phase::omega_pow(p, slope as i64 * q as i64 + offset as i64)
    })?;
    if &expected != xi {
        return Err(Error::Precondition("diagonal partner is not affine".into()));
    }
    // [S X^b, D] = omega^(-slope b); [D, S X^b] is its inverse.
    let sign: i64 = if diag_first { 1 } else { -1 };
    let predicted = reduce(sign * slope as i64 * b as i64, p as u64) as u32;
    if predicted != c {
        return Err(Error::Precondition("commutator exponent mismatch".into()));
    }
    Ok((slope, offset))
}

impl Mul for &KElement {
    type Output = KElement;
    /// Panics on mismatched primes; see [`KElement::checked_mul`].
    fn mul(self, rhs: &KElement) -> KElement {
        self.checked_mul(rhs).expect("elements must share a prime")
    }
}

impl fmt::Debug for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.xi, self.b)
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Cases for a pair with `[M, N] = omega^c 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum CommutingCase {
    /// Both diagonal, so `c = 0`.
    BothDiagonal,
    /// `b != 0, b' = 0`; `N = omega^(slope q + offset)` lies in `T_(p)`.
    ShiftWithDiagonal {
        c: u32,
        slope: u32,
        offset: u32,
        central: bool,
    },
    /// Mirror of the previous case.
    DiagonalWithShift {
        c: u32,
        slope: u32,
        offset: u32,
        central: bool,
    },
    /// `b, b' != 0`; `omega^a N = (M S_chi)^y` with `chi(q) = omega^(chi_slope q)`.
    BothShift { c: u32, a: u32, y: u32, chi_slope: u32 },
}

/// All elements of `K_{T_(p^m)}(p)`, diagonal tables outermost within each `b`.
pub fn enumerate(torus: Torus, budget: u64) -> Result<Vec<KElement>> {
    let needed = torus.group_order();
    if needed > budget as u128 {
        return Err(Error::Budget { needed, budget });
    }
    let diags = torus.diagonals(budget)?;
    let mut out = Vec::with_capacity(needed as usize);
    for b in 0..torus.p {
        for xi in &diags {
            out.push(KElement::raw(torus, xi.clone(), b));
        }
    }
    Ok(out)
}

/// Classification of one maximal p-torsion abelian subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubgroupKind {
    /// The diagonal subgroup `T_(p)`.
    TorusP,
    /// `<omega 1, S_xi X^b>` of order `p^2`.
    CenterAndShift { generator: KElement },
    Other,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AbelianSubgroup {
    pub order: usize,
    pub kind: SubgroupKind,
    #[serde(skip)]
    pub elements: Vec<KElement>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubgroupReport {
    pub torus: Torus,
    pub group_order: usize,
    pub torsion_count: usize,
    pub center_order: usize,
    pub subgroup_count: usize,
    pub torus_p_count: usize,
    pub center_and_shift_count: usize,
    pub other_count: usize,
    /// Every maximal commuting set was already closed under products.
    pub cliques_closed: bool,
    pub intersections_are_center: bool,
    pub subgroups: Vec<AbelianSubgroup>,
}

impl SubgroupReport {
    /// Each subgroup is one of the two classes and they meet in the center.
    pub fn classification_holds(&self) -> bool {
        self.other_count == 0 && self.cliques_closed && self.intersections_are_center
    }
}

type Bits = Vec<u64>;

fn bits_new(n: usize) -> Bits {
    vec![0; n.div_ceil(64)]
}
fn bit_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}
fn bits_and(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}
fn bits_andnot(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & !y).collect()
}
fn bits_empty(a: &Bits) -> bool {
    a.iter().all(|&x| x == 0)
}
fn bits_count(a: &Bits) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}
fn bits_iter(a: &Bits) -> impl Iterator<Item = usize> + '_ {
    a.iter().enumerate().flat_map(|(w, &x)| {
        (0..64).filter(move |i| x >> i & 1 == 1).map(move |i| w * 64 + i)
    })
}

/// Bron-Kerbosch with pivoting; collects maximal cliques as bitsets.
fn maximal_cliques(adj: &[Bits], n: usize) -> Vec<Bits> {
    fn go(adj: &[Bits], r: &Bits, mut pset: Bits, mut xset: Bits, out: &mut Vec<Bits>) {
        if bits_empty(&pset) && bits_empty(&xset) {
            out.push(r.clone());
            return;
        }
        let union: Bits = pset.iter().zip(&xset).map(|(a, b)| a | b).collect();
        let pivot = bits_iter(&union)
            .max_by_key(|&u| bits_count(&bits_and(&pset, &adj[u])))
            .expect("nonempty");
        let cand = bits_andnot(&pset, &adj[pivot]);
        for v in bits_iter(&cand).collect::<Vec<_>>() {
            let mut r2 = r.clone();
            bit_set(&mut r2, v);
            go(adj, &r2, bits_and(&pset, &adj[v]), bits_and(&xset, &adj[v]), out);
            pset[v / 64] &= !(1 << (v % 64));
            bit_set(&mut xset, v);
        }
    }
    let mut all = bits_new(n);
    for i in 0..n {
        bit_set(&mut all, i);
    }
    let mut out = Vec::new();
    go(adj, &bits_new(n), all, bits_new(n), &mut out);
    out
}

/// Subgroup generated by `gens`, by closing under right multiplication.
pub fn closure(gens: &[KElement], torus: Torus) -> Vec<KElement> {
    let mut seen: HashSet<KElement> = HashSet::new();
    let id = KElement::identity(torus);
    let mut frontier = vec![id.clone()];
    seen.insert(id);
    while let Some(g) = frontier.pop() {
        for h in gens {
            let gh = g.checked_mul(h).expect("same prime");
            if seen.insert(gh.clone()) {
                frontier.push(gh);
            }
        }
    }
    let mut v: Vec<KElement> = seen.into_iter().collect();
    v.sort();
    v
}

/// Enumerates the maximal p-torsion abelian subgroups and classifies them.
///
/// Maximal commuting sets of p-torsion elements are found as maximal cliques
/// of the commutation graph, closed under products, then deduplicated.
pub fn maximal_p_torsion_abelian(torus: Torus, budget: u64) -> Result<SubgroupReport> {
    let p = torus.p;
    let all = enumerate(torus, budget)?;
    let torsion: Vec<KElement> = all.iter().filter(|g| g.is_p_torsion()).cloned().collect();
    let n = torsion.len();
    let mut adj = vec![bits_new(n); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if torsion[i].commutes_with(&torsion[j]) {
                bit_set(&mut adj[i], j);
                bit_set(&mut adj[j], i);
            }
        }
    }
    let index: HashMap<&KElement, usize> = torsion.iter().enumerate().map(|(i, g)| (g, i)).collect();

    let diagonals = torus.diagonals(budget)?;
    let shift = KElement::shift(torus);
    let center: Vec<KElement> = all
        .iter()
        .filter(|g| {
            g.commutes_with(&shift)
                && diagonals
                    .iter()
                    .all(|d| g.commutes_with(&KElement::raw(torus, d.clone(), 0)))
        })
        .cloned()
        .collect();
    let center_set: HashSet<&KElement> = center.iter().collect();
    let torus_p: HashSet<KElement> = all
        .iter()
        .filter(|g| g.b == 0 && g.xi.max_level() <= 1)
        .cloned()
        .collect();

    let mut cliques_closed = true;
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut subgroups = Vec::new();
    for clique in maximal_cliques(&adj, n) {
        let elems: Vec<KElement> = bits_iter(&clique).map(|i| torsion[i].clone()).collect();
        let closed = closure(&elems, torus);
        let mut key = bits_new(n);
        for g in &closed {
            match index.get(g) {
                Some(&i) => bit_set(&mut key, i),
                None => cliques_closed = false,
            }
        }
        if key != clique {
            cliques_closed = false;
        }
        if !seen.insert(key) {
            continue;
        }
        let set: HashSet<&KElement> = closed.iter().collect();
        let kind = if closed.len() == torus_p.len() && closed.iter().all(|g| torus_p.contains(g)) {
            SubgroupKind::TorusP
        } else if closed.len() == (p * p) as usize && center.iter().all(|z| set.contains(z)) {
            let mut shifts: Vec<&KElement> = closed.iter().filter(|g| g.b != 0).collect();
            shifts.sort_by_key(|g| (g.b, (*g).clone()));
            shifts
                .into_iter()
                .find(|g| {
                    let mut gens = center.clone();
                    gens.push((*g).clone());
                    closure(&gens, torus).len() == closed.len()
                })
                .map(|g| SubgroupKind::CenterAndShift {
                    generator: g.clone(),
                })
                .unwrap_or(SubgroupKind::Other)
        } else {
            SubgroupKind::Other
        };
        subgroups.push(AbelianSubgroup {
            order: closed.len(),
            kind,
            elements: closed,
        });
    }
    subgroups.sort_by_key(|s| match &s.kind {
        SubgroupKind::TorusP => (0, None),
        SubgroupKind::CenterAndShift { generator } => (1, Some(generator.clone())),
        SubgroupKind::Other => (2, None),
    });

    let mut intersections_are_center = true;
    for i in 0..subgroups.len() {
        let a: HashSet<&KElement> = subgroups[i].elements.iter().collect();
        for s in &subgroups[i + 1..] {
            let inter: HashSet<&KElement> =
                s.elements.iter().filter(|g| a.contains(g)).collect();
            if inter != center_set {
                intersections_are_center = false;
            }
        }
    }
    let count = |f: fn(&SubgroupKind) -> bool| subgroups.iter().filter(|s| f(&s.kind)).count();
    Ok(SubgroupReport {
        torus,
        group_order: all.len(),
        torsion_count: n,
        center_order: center.len(),
        subgroup_count: subgroups.len(),
        torus_p_count: count(|k| matches!(k, SubgroupKind::TorusP)),
        center_and_shift_count: count(|k| matches!(k, SubgroupKind::CenterAndShift { .. })),
        other_count: count(|k| matches!(k, SubgroupKind::Other)),
        cliques_closed,
        intersections_are_center,
        subgroups,
    })
}

/// Dihedral presentation of `K_{T_(2^m)}(2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralReport {
    pub m: u32,
    pub rotation_order: u64,
    pub reflection_order: u64,
    pub conjugation_inverts: bool,
    pub generated_order: usize,
    pub group_order: usize,
}

impl DihedralReport {
    pub fn holds(&self) -> bool {
        let n = 1u64 << self.m;
        self.rotation_order == n
            && self.reflection_order == 2
            && self.conjugation_inverts
            && self.generated_order == 2 * n as usize
            && self.group_order == 2 * n as usize
    }
}

/// Checks `r = diag(e^(2 pi i/2^m), e^(-2 pi i/2^m))` and `s = X` satisfy
/// `r^(2^m) = s^2 = 1`, `srs = r^-1` and generate all of `K`.
pub fn dihedral_check(m: u32) -> Result<DihedralReport> {
    if m == 0 {
        return Err(Error::Invalid("m must be positive".into()));
    }
    let torus = Torus::new(2, m)?;
    let r = KElement::diagonal(
        torus,
        PhaseFunction::new(vec![Phase::root(2, m, 1)?, Phase::root(2, m, -1)?])?,
    )?;
    let s = KElement::shift(torus);
    Ok(DihedralReport {
        m,
        rotation_order: r.order(),
        reflection_order: s.order(),
        conjugation_inverts: (&(&s * &r) * &s) == r.inv(),
        generated_order: closure(&[r, s], torus).len(),
        group_order: torus.group_order() as usize,
    })
}
