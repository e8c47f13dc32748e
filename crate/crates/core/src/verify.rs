//! Batch property suites with machine-readable results.
//!
//! Every suite is deterministic for a given [`VerifyConfig`]; randomized
//! properties draw from a ChaCha stream seeded by `config.seed`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cyclo::Phase;
use crate::error::{Error, Result};
use crate::kgroup::{dihedral_check, enumerate, maximal_p_torsion_abelian, KElement, Torus};
use crate::ktensor::{symplectic_form, TensorElement};
use crate::lcs::{
    check_solution_conditions, mermin_square_assignment, mermin_square_lcs, reduce_to_classical,
    GeneratorAssignment,
};
use crate::phase_fn::{LevelCoefficients, PhaseFunction};
use crate::projection::{even_prime_counterexample, phi, phi_site, HWElement, LocalHW, Variant};
use crate::sampling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Lemma1,
    Torsion,
    CommutingPairs,
    Subgroups,
    Decomposition,
    Phi,
    Symplectic,
    Pipeline,
    EvenPrime,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Lemma1,
        Suite::Torsion,
        Suite::CommutingPairs,
        Suite::Subgroups,
        Suite::Decomposition,
        Suite::Phi,
        Suite::Symplectic,
        Suite::Pipeline,
        Suite::EvenPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Torsion => "torsion",
            Suite::CommutingPairs => "commuting-pairs",
            Suite::Subgroups => "subgroups",
            Suite::Decomposition => "decomposition",
            Suite::Phi => "phi",
            Suite::Symplectic => "symplectic",
            Suite::Pipeline => "pipeline",
            Suite::EvenPrime => "even-prime",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub p: u32,
    pub m: u32,
    pub n: usize,
    pub variant: Variant,
    pub budget: u64,
    pub seed: u64,
    /// Draws for randomized properties.
    pub samples: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            p: 3,
            m: 2,
            n: 2,
            variant: Variant::Proof,
            budget: crate::kgroup::DEFAULT_BUDGET,
            seed: 0,
            samples: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl PropertyResult {
    fn new(name: &str) -> Self {
        PropertyResult {
            name: name.into(),
            passed: true,
            checked: 0,
            failures: 0,
            counterexample: None,
            detail: String::new(),
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            self.passed = false;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub config: VerifyConfig,
    pub passed: bool,
    /// Sorted by property name.
    pub results: Vec<PropertyResult>,
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<VerifyReport> {
    let mut results = match suite {
        Suite::Lemma1 => lemma1(config)?,
        Suite::Torsion => torsion(config)?,
        Suite::CommutingPairs => commuting_pairs(config)?,
        Suite::Subgroups => subgroups(config)?,
        Suite::Decomposition => decomposition(config)?,
        Suite::Phi => phi_suite(config)?,
        Suite::Symplectic => symplectic(config)?,
        Suite::Pipeline => pipeline(config)?,
        Suite::EvenPrime => even_prime()?,
    };
    results.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(VerifyReport {
        suite,
        config: config.clone(),
        passed: results.iter().all(|r| r.passed),
        results,
    })
}

fn torus(config: &VerifyConfig) -> Result<Torus> {
    Torus::new(config.p, config.m)
}

fn odd(config: &VerifyConfig, what: &str) -> Result<()> {
    if config.p == 2 {
        return Err(Error::EvenPrime(format!("{what} needs an odd prime")));
    }
    Ok(())
}

/// Products of shifted tables, inverses and commutators against iteration.
fn lemma1(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let t = torus(config)?;
    let all = enumerate(t, config.budget)?;
    let id = KElement::identity(t);
    let top = t.p as i64 * (t.p as i64).pow(t.m);
    let mut power = PropertyResult::new("power-closed-form");
    let mut inverse = PropertyResult::new("inverse");
    for g in &all {
        let mut acc = id.clone();
        for k in 0..=top {
            power.check(g.pow(k) == acc, || format!("{g}^{k}"));
            acc = &acc * g;
        }
        let inv = g.inv();
        inverse.check((g * &inv).is_identity() && (&inv * g).is_identity(), || g.to_string());
    }
    let pairs = (all.len() as u64).pow(2);
    if pairs > config.budget {
        return Err(Error::Budget { needed: pairs as u128, budget: config.budget });
    }
    let mut comm = PropertyResult::new("commutator");
    for g in &all {
        let gi = g.inv();
        for h in &all {
            let direct = &(&(g * h) * &gi) * &h.inv();
            comm.check(g.commutator(h) == direct, || format!("[{g}, {h}]"));
        }
    }
    Ok(vec![power, inverse, comm])
}

fn global_phases(p: u32) -> Vec<Phase> {
    (0..p * p).map(|k| Phase::root(p, 2, k as i64).expect("valid")).collect()
}

/// Direct p-th powers against the structural characterizations.
fn torsion(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let t = torus(config)?;
    let all = enumerate(t, config.budget)?;
    let mut single = PropertyResult::new("single-site");
    for g in &all {
        single.check(g.is_p_torsion() == g.is_p_torsion_structural(), || g.to_string());
    }
    let mut out = vec![single];
    let globals = global_phases(t.p);
    for n in 1..=config.n.min(2) {
        let needed = (all.len() as u128).pow(n as u32) * globals.len() as u128;
        if needed > config.budget as u128 {
            return Err(Error::Budget { needed, budget: config.budget });
        }
        let mut r = PropertyResult::new(&format!("tensor-n{n}"));
        let tuples: Vec<Vec<KElement>> = if n == 1 {
            all.iter().map(|g| vec![g.clone()]).collect()
        } else {
            all.iter()
                .flat_map(|g| all.iter().map(move |h| vec![g.clone(), h.clone()]))
                .collect()
        };
        for sites in tuples {
            for &theta in &globals {
                let e = TensorElement::new(theta, sites.clone())?;
                r.check(e.is_p_torsion() == e.is_p_torsion_structural()?, || e.to_string());
            }
        }
        out.push(r);
    }
    Ok(out)
}

/// Every scalar-commuting pair falls into a case with a valid witness.
fn commuting_pairs(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let t = torus(config)?;
    let all = enumerate(t, config.budget)?;
    let mut cases = PropertyResult::new("case-witness");
    let mut tally: BTreeMap<&'static str, u64> = BTreeMap::new();
    for g in &all {
        for h in &all {
            if g.scalar_commutant(h).is_none() {
                continue;
            }
            let res = g.classify_commuting_pair(h);
            if let Ok(case) = &res {
                let key = match case {
                    crate::kgroup::CommutingCase::BothDiagonal => "both-diagonal",
                    crate::kgroup::CommutingCase::ShiftWithDiagonal { .. } => "shift-diagonal",
                    crate::kgroup::CommutingCase::DiagonalWithShift { .. } => "diagonal-shift",
                    crate::kgroup::CommutingCase::BothShift { .. } => "both-shift",
                };
                *tally.entry(key).or_default() += 1;
            }
            cases.check(res.is_ok(), || format!("{g} with {h}: {res:?}"));
        }
    }
    let cases = cases.with_detail(format!("{tally:?}"));
    let mut sampled = PropertyResult::new("sampled-tensor-commutator");
    let mut rng = sampling::rng(config.seed);
    for _ in 0..config.samples {
        let n = 1 + (sampled.checked as usize % config.n.max(1));
        let (e, f, c) = sampling::random_scalar_commuting_pair(t, n, &mut rng);
        sampled.check(e.commutator_exponent(&f) == Some(c), || format!("{e} with {f}"));
    }
    Ok(vec![cases, sampled])
}

fn subgroups(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let t = torus(config)?;
    let report = maximal_p_torsion_abelian(t, config.budget)?;
    let mut cls = PropertyResult::new("classification");
    cls.check(report.classification_holds(), || {
        serde_json::to_string(&report).unwrap_or_default()
    });
    let cls = cls.with_detail(format!(
        "{} maximal subgroups: {} torus, {} center-and-shift, {} other",
        report.subgroup_count, report.torus_p_count, report.center_and_shift_count, report.other_count
    ));
    let mut out = vec![cls];
    if t.p == 2 {
        let d = dihedral_check(t.m)?;
        let mut r = PropertyResult::new("dihedral-relations");
        r.check(d.holds(), || serde_json::to_string(&d).unwrap_or_default());
        out.push(r);
    }
    Ok(out)
}

/// Round trip and injectivity of the level decomposition.
fn decomposition(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let (p, m) = (config.p, config.m);
    let modulus = crate::zp::checked_power(p, m)?;
    let count = (modulus as u128).checked_pow(p).unwrap_or(u128::MAX);
    let mut round = PropertyResult::new("round-trip");
    let mut injective = PropertyResult::new("injective");
    let mut seen: HashSet<LevelCoefficients> = HashSet::new();
    let mut check = |xi: PhaseFunction, round: &mut PropertyResult| -> Result<()> {
        let c = xi.decompose(m)?;
        round.check(c.reconstruct() == xi, || xi.to_string());
        seen.insert(c);
        Ok(())
    };
    let exhaustive = count <= config.budget as u128;
    let mut tables = 0u64;
    if exhaustive {
        for idx in 0..count as u64 {
            let mut r = idx;
            let vals = (0..p)
                .map(|_| {
                    let e = r % modulus;
                    r /= modulus;
                    Phase::root(p, m, e as i64)
                })
                .collect::<Result<Vec<_>>>()?;
            check(PhaseFunction::new(vals)?, &mut round)?;
            tables += 1;
        }
    } else {
        let mut rng = sampling::rng(config.seed);
        let mut drawn = HashSet::new();
        for _ in 0..config.samples {
            use rand::Rng;
            let vals: Vec<u64> = (0..p).map(|_| rng.gen_range(0..modulus)).collect();
            if drawn.insert(vals.clone()) {
                let vals = vals
                    .into_iter()
                    .map(|e| Phase::root(p, m, e as i64))
                    .collect::<Result<Vec<_>>>()?;
                check(PhaseFunction::new(vals)?, &mut round)?;
                tables += 1;
            }
        }
    }
    let distinct = seen.len() as u64;
    injective.check(distinct == tables, || format!("{tables} tables, {distinct} coefficient sets"));
    let mode = if exhaustive { "exhaustive" } else { "sampled" };
    Ok(vec![round.with_detail(mode), injective.with_detail(format!("{distinct} distinct"))])
}

/// Local images of one ordered site pair `(g, h)`.
#[derive(Clone, Copy)]
struct SiteProduct {
    c: u32,
    /// `phi(gh) / (phi(g) phi(h))` as a scalar, if the `Z`/`X` parts agree.
    defect: Option<Phase>,
}

fn site_product(g: &KElement, h: &KElement, c: u32, variant: Variant) -> Result<SiteProduct> {
    let lg = phi_site(g, variant)?;
    let lh = phi_site(h, variant)?;
    let lgh = phi_site(&(g * h), variant)?;
    let prod = hw1(lg).mul(&hw1(lh));
    let defect = (prod.a[0] == lgh.a && prod.b[0] == lgh.b).then(|| lgh.phase * prod.phase.inv());
    Ok(SiteProduct { c, defect })
}

fn hw1(l: LocalHW) -> HWElement {
    HWElement { p: l.phase.p(), phase: l.phase, a: vec![l.a], b: vec![l.b] }
}

/// Sites allowed in a p-torsion tensor: shifts, or diagonals whose terms
/// above level one are constant.
fn tensor_site(g: &KElement) -> Result<bool> {
    Ok(g.b() != 0 || g.xi().decompose(g.torus().m)?.higher_levels_constant())
}

/// Exhaustive multiplicativity for `n <= 2`, aggregated by site.
///
/// A pair of tensors commutes iff the per-site commutator exponents sum to
/// zero, and `phi(EE') = phi(E) phi(E')` iff the per-site defects multiply
/// to one; global phases cancel on both sides. Grouping site pairs by
/// `(c, defect)` turns the pair-of-pairs loop into a check on classes while
/// counting every tensor pair.
pub fn phi_exhaustive(t: Torus, n: usize, variant: Variant, budget: u64) -> Result<PropertyResult> {
    if !(1..=2).contains(&n) {
        return Err(Error::Invalid("exhaustive phi check covers n = 1 and n = 2".into()));
    }
    let sites: Vec<KElement> = enumerate(t, budget)?
        .into_iter()
        .filter_map(|g| match tensor_site(&g) {
            Ok(true) => Some(Ok(g)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_>>()?;
    let mut r = PropertyResult::new(&format!("homomorphism-n{n}"));
    // c -> defect -> (count, example pair)
    let mut classes: BTreeMap<u32, BTreeMap<Option<Phase>, (u64, String)>> = BTreeMap::new();
    for g in &sites {
        for h in &sites {
            let Some(c) = g.scalar_commutant(h) else { continue };
            let sp = site_product(g, h, c, variant)?;
            let e = classes.entry(sp.c).or_default().entry(sp.defect).or_insert((0, String::new()));
            if e.0 == 0 {
                e.1 = format!("({g}, {h})");
            }
            e.0 += 1;
        }
    }
    let p = t.p;
    let one = Phase::one(p);
    if n == 1 {
        for (d, (count, ex)) in classes.get(&0).into_iter().flatten() {
            let ok = *d == Some(one);
            for _ in 0..*count {
                r.check(ok, || format!("{ex}: defect {d:?}"));
            }
        }
    } else {
        for (&c1, d1s) in &classes {
            let Some(d2s) = classes.get(&((p - c1) % p)) else { continue };
            for (d1, (n1, ex1)) in d1s {
                for (d2, (n2, ex2)) in d2s {
                    let ok = matches!((d1, d2), (Some(x), Some(y)) if (*x * *y).is_one());
                    let pairs = n1 * n2;
                    r.checked += pairs;
                    if !ok {
                        r.failures += pairs;
                        r.passed = false;
                        r.counterexample.get_or_insert_with(|| {
                            format!("sites {ex1} and {ex2}: defects {d1:?}, {d2:?}")
                        });
                    }
                }
            }
        }
    }
    Ok(r.with_detail(format!("{} tensor sites, variant {variant:?}", sites.len())))
}

/// `phi` on sampled commuting torsion pairs.
pub fn phi_sampled(t: Torus, n: usize, variant: Variant, samples: u64, seed: u64) -> Result<PropertyResult> {
    let mut rng = sampling::rng(seed);
    let mut r = PropertyResult::new(&format!("homomorphism-sampled-n{n}"));
    for _ in 0..samples {
        let (e, f) = sampling::random_commuting_torsion_pair(t, n, &mut rng);
        let lhs = phi(&e.mul(&f), variant)?;
        let rhs = phi(&e, variant)?.mul(&phi(&f, variant)?);
        r.check(lhs == rhs, || format!("E = {e}, E' = {f}"));
    }
    Ok(r)
}

fn phi_suite(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    odd(config, "phi")?;
    let t = torus(config)?;
    let mut out = Vec::new();
    let sites = t.group_order();
    for n in 1..=config.n.min(2) {
        if sites * sites <= config.budget as u128 {
            out.push(phi_exhaustive(t, n, config.variant, config.budget)?);
        } else {
            out.push(phi_sampled(t, n, config.variant, config.samples, config.seed)?);
        }
    }
    for n in 3..=config.n {
        out.push(phi_sampled(t, n, config.variant, config.samples, config.seed)?);
    }

    let mut rng = sampling::rng(config.seed ^ 0x9e37);
    let n = config.n.max(1);
    let mut torsion = PropertyResult::new("preserves-torsion");
    let mut comm = PropertyResult::new("preserves-commutator");
    for _ in 0..config.samples.min(2_000) {
        let (e, f, c) = sampling::random_scalar_commuting_pair(t, n, &mut rng);
        let (e, f) = (torsion_part(&e), torsion_part(&f));
        let (Some(e), Some(f)) = (e, f) else { continue };
        let (pe, pf) = (phi(&e, config.variant)?, phi(&f, config.variant)?);
        torsion.check(pe.pow(t.p as i64).is_identity(), || e.to_string());
        comm.check(pe.commutator_exponent(&pf)? == c, || format!("E = {e}, E' = {f}"));
    }
    let mut center = PropertyResult::new("preserves-center");
    for c in 0..t.p {
        let s = TensorElement::omega_scalar(t, n, c as i64);
        let img = phi(&s, config.variant)?;
        center.check(img == HWElement::new(Phase::omega_pow(t.p, c as i64), vec![0; n], vec![0; n])?, || {
            format!("omega^{c}")
        });
    }
    out.extend([torsion, comm, center]);
    Ok(out)
}

/// The tensor times a global phase making it p-torsion, if one exists.
fn torsion_part(e: &TensorElement) -> Option<TensorElement> {
    global_phases(e.p())
        .into_iter()
        .map(|g| e.with_global(g))
        .find(|x| x.is_p_torsion())
}

/// The commutator exponent against the symplectic form of both vectors.
fn symplectic(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let t = torus(config)?;
    let all = enumerate(t, config.budget)?;
    let mut lit = PropertyResult::new("literal-vector-n1");
    let mut norm = PropertyResult::new("normalized-vector-n1");
    let single: Vec<TensorElement> = all
        .iter()
        .map(|g| TensorElement::from_sites(vec![g.clone()]))
        .collect::<Result<_>>()?;
    let vectors = |e: &TensorElement| -> Result<_> {
        Ok((e.symplectic_vector()?, e.normalized_symplectic_vector()?))
    };
    let vecs = single.iter().map(vectors).collect::<Result<Vec<_>>>()?;
    for (i, e) in single.iter().enumerate() {
        for (j, f) in single.iter().enumerate() {
            let Some(c) = e.commutator_exponent(f) else { continue };
            let (lv, nv) = (&vecs[i], &vecs[j]);
            lit.check(symplectic_form(&lv.0, &nv.0)? == c, || format!("{e} with {f}"));
            norm.check(symplectic_form(&lv.1, &nv.1)? == c, || format!("{e} with {f}"));
        }
    }
    let mut out = vec![lit, norm];
    let mut rng = sampling::rng(config.seed);
    for n in 2..=config.n.max(2) {
        let mut lit = PropertyResult::new(&format!("literal-vector-n{n}"));
        let mut norm = PropertyResult::new(&format!("normalized-vector-n{n}"));
        for _ in 0..config.samples {
            let (e, f, c) = sampling::random_scalar_commuting_pair(t, n, &mut rng);
            let ok_l = symplectic_form(&e.symplectic_vector()?, &f.symplectic_vector()?)? == c;
            let ok_n = symplectic_form(&e.normalized_symplectic_vector()?, &f.normalized_symplectic_vector()?)? == c;
            lit.check(ok_l, || format!("{e} with {f}"));
            norm.check(ok_n, || format!("{e} with {f}"));
        }
        out.extend([lit, norm]);
    }
    Ok(out)
}

/// Quantum solutions reduce to classical ones; classical ones lift.
fn pipeline(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    odd(config, "the reduction")?;
    let t = Torus::new(config.p, config.m.max(2))?;
    let n = config.n.max(1);
    let mut rng = sampling::rng(config.seed);
    let mut reduce = PropertyResult::new("reduction-solves");
    let mut images = PropertyResult::new("images-are-solutions");
    let samples = config.samples.min(2_000);
    for _ in 0..samples {
        let (s, g) = sampling::random_solution_instance(t, n, &mut rng)?;
        let red = reduce_to_classical(&s, &g)?;
        reduce.check(red.classical_ok, || serde_json::to_string(&s).unwrap_or_default());
        images.check(red.image_report.is_quantum_solution(), || red.image_report.failures.join("; "));
    }
    let mut lift = PropertyResult::new("classical-lifts");
    for _ in 0..samples {
        use rand::Rng;
        let rows = rng.gen_range(1..5);
        let cols = rng.gen_range(1..6);
        let (s, x) = sampling::random_consistent_lcs(t.p, rows, cols, &mut rng);
        let g = GeneratorAssignment::scalar_lift(t, n, &x)?;
        let ok = check_solution_conditions(&s, &g)?.is_quantum_solution()
            && reduce_to_classical(&s, &g)?.x == x;
        lift.check(ok, || format!("{s:?} with {x:?}"));
    }
    Ok(vec![reduce, images, lift])
}

fn even_prime() -> Result<Vec<PropertyResult>> {
    let rep = even_prime_counterexample()?;
    let mut ex = PropertyResult::new("example-reproduces");
    ex.check(rep.reproduces_example() && rep.homomorphism_fails(), || {
        serde_json::to_string(&rep).unwrap_or_default()
    });
    let ex = ex.with_detail(format!("phi(MN) = {}, phi(M)phi(N) = {}", rep.phi_of_product, rep.product_of_phis));
    let s = mermin_square_lcs();
    let g = mermin_square_assignment();
    let mut refuse = PropertyResult::new("reduction-refuses-p2");
    refuse.check(matches!(reduce_to_classical(&s, &g), Err(Error::EvenPrime(_))), || {
        "reduction accepted a qubit assignment".into()
    });
    let mut square = PropertyResult::new("square-solution-stands");
    let rep = check_solution_conditions(&s, &g)?;
    square.check(rep.is_quantum_solution(), || rep.failures.join("; "));
    Ok(vec![ex, refuse, square])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(p: u32, m: u32) -> VerifyConfig {
        VerifyConfig { p, m, n: 2, samples: 200, ..Default::default() }
    }

    #[test]
    fn suites_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("lemma2".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::Lemma1, Suite::Decomposition, Suite::EvenPrime, Suite::Pipeline] {
            let rep = run_suite(s, &quick(3, 1)).unwrap();
            assert!(rep.passed, "{s}: {:?}", rep.results);
        }
    }

    #[test]
    fn results_are_sorted_and_reproducible() {
        let a = run_suite(Suite::Symplectic, &quick(3, 1)).unwrap();
        let b = run_suite(Suite::Symplectic, &quick(3, 1)).unwrap();
        assert_eq!(a, b);
        let names: Vec<_> = a.results.iter().map(|r| r.name.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn phi_rejects_two() {
        assert!(matches!(run_suite(Suite::Phi, &quick(2, 2)), Err(Error::EvenPrime(_))));
    }
}
