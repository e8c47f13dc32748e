//! Deterministic, non-adaptive measurement-based computation on GHZ states.
//!
//! Every operator is monomial, so a GHZ state `sum_q |q...q>` is tracked by
//! its `p` coefficients rather than as an amplitude vector.

use serde::{Deserialize, Serialize};

use crate::cyclo::Phase;
use crate::error::{Error, Result};
use crate::kgroup::{KElement, Torus};
use crate::ktensor::TensorElement;
use crate::phase_fn::PhaseFunction;
use crate::zp::{reduce, MultiPoly};

/// `l(i) = sum_j coeffs[j] i_j + constant` over Z_p.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineSetting {
    pub coeffs: Vec<i64>,
    #[serde(default)]
    pub constant: i64,
}

impl AffineSetting {
    pub fn new(coeffs: Vec<i64>, constant: i64) -> Self {
        AffineSetting { coeffs, constant }
    }

    /// Value in `[0, p)`.
    pub fn eval(&self, input: &[u32], p: u32) -> u32 {
        let s: i64 = self
            .coeffs
            .iter()
            .zip(input)
            .map(|(c, i)| c * *i as i64)
            .sum::<i64>()
            + self.constant;
        reduce(s, p as u64) as u32
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiteSpec {
    /// Base phase function; the site measures `(xi^l, 1)`.
    pub xi: PhaseFunction,
    pub setting: AffineSetting,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MbqcSpec {
    pub torus: Torus,
    pub n_inputs: usize,
    pub sites: Vec<SiteSpec>,
}

#[derive(Deserialize)]
struct RawSpec {
    torus: Torus,
    n_inputs: usize,
    sites: Vec<SiteSpec>,
}

impl<'de> Deserialize<'de> for MbqcSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RawSpec::deserialize(d)?;
        let torus = Torus::new(r.torus.p, r.torus.m).map_err(serde::de::Error::custom)?;
        MbqcSpec::new(torus, r.n_inputs, r.sites).map_err(serde::de::Error::custom)
    }
}

impl MbqcSpec {
    pub fn new(torus: Torus, n_inputs: usize, sites: Vec<SiteSpec>) -> Result<Self> {
        if sites.is_empty() {
            return Err(Error::Shape("a computation needs at least one site".into()));
        }
        for s in &sites {
            KElement::diagonal(torus, s.xi.clone())?;
            if s.setting.coeffs.len() != n_inputs {
                return Err(Error::Shape(format!(
                    "setting has {} coefficients, expected {n_inputs}",
                    s.setting.coeffs.len()
                )));
            }
        }
        Ok(MbqcSpec {
            torus,
            n_inputs,
            sites,
        })
    }

    pub fn p(&self) -> u32 {
        self.torus.p
    }

    /// All inputs of `Z_p^n` in lexicographic order, first digit most significant.
    pub fn inputs(&self) -> Vec<Vec<u32>> {
        inputs(self.p(), self.n_inputs)
    }

    pub fn settings(&self, input: &[u32]) -> Vec<u32> {
        self.sites
            .iter()
            .map(|s| s.setting.eval(input, self.p()))
            .collect()
    }

    /// `⊗_k (xi_k^(l_k(i)), 1)`.
    pub fn operator(&self, input: &[u32]) -> Result<TensorElement> {
        let sites = self
            .sites
            .iter()
            .zip(self.settings(input))
            .map(|(s, l)| measurement_op(self.torus, &s.xi, l as i64))
            .collect::<Result<_>>()?;
        TensorElement::from_sites(sites)
    }
}

pub fn inputs(p: u32, n: usize) -> Vec<Vec<u32>> {
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut idx| {
            let mut v = vec![0u32; n];
            for k in (0..n).rev() {
                v[k] = (idx % p as usize) as u32;
                idx /= p as usize;
            }
            v
        })
        .collect()
}

/// `M_xi(l) = (xi^l, 1)`, acting as `|q> -> xi(q+1)^l |q+1>`; `l` is reduced
/// to `[0, p)` first.
pub fn measurement_op(torus: Torus, xi: &PhaseFunction, l: i64) -> Result<KElement> {
    let l = reduce(l, torus.p as u64) as i64;
    KElement::new(torus, xi.pow(l), 1)
}

/// Base function of the star operators: `xi(q) = theta(1) omega^((q-1)^(p-1))`
/// with `theta(1) = exp(2 pi i / p^2)`.
pub fn star_base(p: u32) -> Result<PhaseFunction> {
    if p == 2 {
        return Err(Error::EvenPrime("the star construction needs p odd".into()));
    }
    let theta = Phase::root(p, 2, 1)?;
    PhaseFunction::from_fn(p, |q| {
        let s = (q + p - 1) % p;
        let e = if s == 0 { 0 } else { 1 };
        theta * Phase::omega_pow(p, e)
    })
}

/// `M(l)|q> = theta(l) omega^(l q^(p-1)) |q+1>` for `l` in `[0, p)`.
pub fn star_measurement_op(p: u32, l: i64) -> Result<KElement> {
    let torus = Torus::new(p, 2)?;
    measurement_op(torus, &star_base(p)?, l)
}

/// Image of the GHZ state under a monomial tensor: coefficients `c_q` and
/// shifts `B_k` with `E sum_q |q..q> = sum_q c_q |q+B_1, ..., q+B_N>`.
pub fn apply_to_ghz(e: &TensorElement) -> (Vec<Phase>, Vec<u32>) {
    let p = e.p() as i64;
    let coeffs = (0..p)
        .map(|q| {
            e.sites().iter().fold(e.global(), |acc, s| {
                acc * s.xi().at(q + s.b() as i64)
            })
        })
        .collect();
    (coeffs, e.b_vector())
}

/// The eigenvalue of `E` on the GHZ state, if it is an eigenstate.
pub fn ghz_evaluate(e: &TensorElement) -> Option<Phase> {
    let (coeffs, shifts) = apply_to_ghz(e);
    if shifts.iter().any(|&b| b != shifts[0]) {
        return None;
    }
    let c = coeffs[0];
    coeffs.iter().all(|v| *v == c).then_some(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRow {
    pub input: Vec<u32>,
    pub eigenvalue: Option<Phase>,
    /// `o(i)` when the eigenvalue exists and is a power of omega.
    pub output: Option<u32>,
    pub deterministic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputTable {
    pub p: u32,
    pub n_inputs: usize,
    pub rows: Vec<OutputRow>,
}

impl OutputTable {
    pub fn is_deterministic(&self) -> bool {
        self.rows.iter().all(|r| r.output.is_some())
    }

    /// Outputs in input order, or the first offending input.
    pub fn outputs(&self) -> Result<Vec<u32>> {
        self.rows
            .iter()
            .map(|r| r.output.ok_or_else(|| Error::NonDeterministic(r.input.clone())))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        let head: Vec<String> = (1..=self.n_inputs).map(|k| format!("i_{k}")).collect();
        s.push_str(&head.join(","));
        s.push_str(",o,deterministic\n");
        for r in &self.rows {
            let cells: Vec<String> = r.input.iter().map(|x| x.to_string()).collect();
            s.push_str(&cells.join(","));
            let o = r.output.map(|o| o.to_string()).unwrap_or_default();
            s.push_str(&format!(",{o},{}\n", r.output.is_some()));
        }
        s
    }
}

pub fn output_table(spec: &MbqcSpec) -> Result<OutputTable> {
    let rows = spec
        .inputs()
        .into_iter()
        .map(|input| {
            let e = spec.operator(&input)?;
            let eigenvalue = ghz_evaluate(&e);
            let output = eigenvalue.and_then(|l| l.as_omega_power());
            Ok(OutputRow {
                input,
                eigenvalue,
                output,
                deterministic: eigenvalue.is_some(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(OutputTable {
        p: spec.p(),
        n_inputs: spec.n_inputs,
        rows,
    })
}

pub fn interpolate_poly(t: &OutputTable) -> Result<MultiPoly> {
    MultiPoly::interpolate(t.p, t.n_inputs, &t.outputs()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub degree: u32,
    pub polynomial: String,
    /// Degree at least `p`.
    pub contextual: bool,
}

pub fn contextuality_witness(t: &OutputTable) -> Result<Witness> {
    let poly = interpolate_poly(t)?;
    let degree = poly.total_degree();
    Ok(Witness {
        degree,
        polynomial: poly.to_string(),
        contextual: degree >= t.p,
    })
}

/// Three sites, `l_1 = i_1`, `l_2 = i_2`, `l_3 = -i_1 - i_2`, star operators.
pub fn qudit_star_spec(p: u32) -> Result<MbqcSpec> {
    let xi = star_base(p)?;
    let site = |c: Vec<i64>| SiteSpec {
        xi: xi.clone(),
        setting: AffineSetting::new(c, 0),
    };
    MbqcSpec::new(
        Torus::new(p, 2)?,
        2,
        vec![site(vec![1, 0]), site(vec![0, 1]), site(vec![-1, -1])],
    )
}

/// Three qubits measuring `X` or `Y = S X`, `S = diag(-i, i)`, with
/// `l_3 = i_1 + i_2`.
pub fn qubit_star_spec() -> MbqcSpec {
    let i = Phase::root(2, 2, 1).expect("valid root");
    let s = PhaseFunction::new(vec![i.inv(), i]).expect("valid table");
    let site = |c: Vec<i64>| SiteSpec {
        xi: s.clone(),
        setting: AffineSetting::new(c, 0),
    };
    MbqcSpec::new(
        Torus::new(2, 2).expect("valid torus"),
        2,
        vec![site(vec![1, 0]), site(vec![0, 1]), site(vec![1, 1])],
    )
    .expect("valid spec")
}

/// `0` if `i_1 = i_2 = 0`, `1` if `i_1 + i_2 <= p`, else `2`.
pub fn qudit_star_closed_form(p: u32, i1: u32, i2: u32) -> u32 {
    match i1 + i2 {
        0 => 0,
        s if s <= p => 1,
        _ => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measurement_ops() {
        let torus = Torus::new(3, 1).unwrap();
        let z = PhaseFunction::from_omega_exponents(3, &[0, 1, 2]).unwrap();
        assert_eq!(measurement_op(torus, &z, 0).unwrap(), KElement::shift(torus));
        assert_eq!(
            measurement_op(torus, &z, 1).unwrap(),
            &KElement::clock(torus).unwrap() * &KElement::shift(torus)
        );
    }

    #[test]
    fn star_ops_are_torsion() {
        assert_eq!(star_measurement_op(3, 0).unwrap(), KElement::shift(Torus::new(3, 2).unwrap()));
        for p in [3u32, 5, 7] {
            for l in 0..p as i64 {
                assert!(star_measurement_op(p, l).unwrap().pow(p as i64).is_identity());
            }
        }
        assert!(star_measurement_op(2, 1).is_err());
    }

    #[test]
    fn star_operator_matches_definition() {
        // M(l)|q> = theta(l) omega^(l q^(p-1)) |q+1>
        let p = 5u32;
        let theta = Phase::root(p, 2, 1).unwrap();
        for l in 0..p as i64 {
            let m = star_measurement_op(p, l).unwrap();
            for q in 0..p as i64 {
                let fermat = if q == 0 { 0 } else { 1 };
                let amp = theta.pow(l) * Phase::omega_pow(p, l * fermat);
                assert_eq!(m.xi().at(q + 1), amp);
            }
        }
    }

    #[test]
    fn ghz_eigenvalues() {
        let torus = Torus::new(3, 1).unwrap();
        let xxx = TensorElement::from_sites(vec![KElement::shift(torus); 3]).unwrap();
        assert_eq!(ghz_evaluate(&xxx), Some(Phase::one(3)));
        let z = KElement::clock(torus).unwrap();
        let zii = TensorElement::local(z, 0, 3).unwrap();
        assert_eq!(ghz_evaluate(&zii), None);
    }

    #[test]
    fn qubit_star_is_or() {
        let t = output_table(&qubit_star_spec()).unwrap();
        assert_eq!(t.outputs().unwrap(), vec![0, 1, 1, 1]);
        let w = contextuality_witness(&t).unwrap();
        assert_eq!(w.degree, 2);
        assert!(w.contextual);
    }

    #[test]
    fn constant_settings() {
        let torus = Torus::new(3, 1).unwrap();
        let z = PhaseFunction::from_omega_exponents(3, &[0, 1, 2]).unwrap();
        let spec = MbqcSpec::new(
            torus,
            2,
            vec![
                SiteSpec { xi: z.clone(), setting: AffineSetting::new(vec![0, 0], 0) };
                3
            ],
        )
        .unwrap();
        let t = output_table(&spec).unwrap();
        assert!(t.outputs().unwrap().iter().all(|&o| o == 0));
        assert!(!contextuality_witness(&t).unwrap().contextual);
    }

    #[test]
    fn csv_layout() {
        let t = output_table(&qubit_star_spec()).unwrap();
        let csv = t.to_csv();
        assert!(csv.starts_with("i_1,i_2,o,deterministic\n0,0,0,true\n"));
    }
}
