//! Linear constraint systems `Ax = b mod d` and their solution checks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cyclo::Phase;
use crate::error::{Error, Result};
use crate::kgroup::{KElement, Torus};
use crate::ktensor::TensorElement;
use crate::mbqc::{apply_to_ghz, ghz_evaluate, output_table, qudit_star_spec, MbqcSpec, OutputTable};
use crate::phase_fn::PhaseFunction;
use crate::projection::{phi, value_map_nu, HWElement, Variant};
use crate::zp::{inv_mod, is_prime};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lcs {
    pub d: u32,
    #[serde(rename = "A")]
    pub a: Vec<Vec<u32>>,
    pub b: Vec<u32>,
}

#[derive(Deserialize)]
struct RawLcs {
    d: u32,
    #[serde(rename = "A")]
    a: Vec<Vec<i64>>,
    b: Vec<i64>,
}

impl<'de> Deserialize<'de> for Lcs {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RawLcs::deserialize(d)?;
        Lcs::new(r.d, r.a, r.b).map_err(serde::de::Error::custom)
    }
}

impl Lcs {
    /// Entries are reduced mod `d`; all rows must share a length.
    pub fn new(d: u32, a: Vec<Vec<i64>>, b: Vec<i64>) -> Result<Self> {
        if d < 2 {
            return Err(Error::Invalid("modulus must be at least 2".into()));
        }
        if a.len() != b.len() {
            return Err(Error::Shape(format!("{} rows but {} right-hand sides", a.len(), b.len())));
        }
        let n = a.first().map_or(0, |r| r.len());
        if a.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("rows differ in length".into()));
        }
        let md = |x: i64| x.rem_euclid(d as i64) as u32;
        Ok(Lcs {
            d,
            a: a.into_iter().map(|r| r.into_iter().map(md).collect()).collect(),
            b: b.into_iter().map(md).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.a.first().map_or(0, |r| r.len())
    }

    /// `Ax = b mod d`.
    pub fn check_classical(&self, x: &[u32]) -> Result<bool> {
        if x.len() != self.cols() {
            return Err(Error::Shape(format!("x has {} entries, expected {}", x.len(), self.cols())));
        }
        let d = self.d as u64;
        Ok(self.a.iter().zip(&self.b).all(|(row, &bi)| {
            row.iter().zip(x).map(|(a, x)| *a as u64 * *x as u64 % d).sum::<u64>() % d == bi as u64
        }))
    }

    /// Gaussian elimination over the field `Z_d`; `None` if inconsistent.
    pub fn solve_classical(&self) -> Result<Option<Vec<u32>>> {
        let d = self.d as u64;
        if !is_prime(d) {
            return Err(Error::NotPrime(d));
        }
        let n = self.cols();
        let mut rows: Vec<Vec<u64>> = self
            .a
            .iter()
            .zip(&self.b)
            .map(|(r, &b)| r.iter().map(|&x| x as u64).chain([b as u64]).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..n {
            let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = inv_mod(rows[r][col], d).expect("nonzero pivot");
            for v in rows[r].iter_mut() {
                *v = *v * inv % d;
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let f = rows[i][col];
                    for k in 0..=n {
                        rows[i][k] = (rows[i][k] + d * d - f * rows[r][k] % d) % d;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        if rows[r..].iter().any(|row| row[n] != 0) {
            return Ok(None);
        }
        let mut x = vec![0u32; n];
        for (i, &col) in pivots.iter().enumerate() {
            x[col] = rows[i][n] as u32;
        }
        Ok(Some(x))
    }

    /// Pairs `(j, k)`, `j < k`, sharing a row with nonzero entries.
    pub fn co_row_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = std::collections::BTreeSet::new();
        for row in &self.a {
            let nz: Vec<usize> = (0..row.len()).filter(|&k| row[k] != 0).collect();
            for (i, &j) in nz.iter().enumerate() {
                for &k in &nz[i + 1..] {
                    pairs.insert((j, k));
                }
            }
        }
        pairs.into_iter().collect()
    }
}

/// Tensor operators for the generators `g_1..g_n` and for `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorAssignment {
    pub generators: Vec<TensorElement>,
    pub j: TensorElement,
}

impl GeneratorAssignment {
    /// `J` defaults to `omega * 1`.
    pub fn new(generators: Vec<TensorElement>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::Shape("assignment needs at least one generator".into()))?;
        let j = TensorElement::omega_scalar(first.torus(), first.n(), 1);
        Self::with_j(generators, j)
    }

    pub fn with_j(generators: Vec<TensorElement>, j: TensorElement) -> Result<Self> {
        for g in &generators {
            if g.p() != j.p() || g.n() != j.n() {
                return Err(Error::Shape("generators differ in prime or site count".into()));
            }
        }
        Ok(GeneratorAssignment { generators, j })
    }

    /// Scalar lift `g_k = omega^(x_k) 1` of a classical solution.
    pub fn scalar_lift(torus: Torus, n_sites: usize, x: &[u32]) -> Result<Self> {
        Self::new(
            x.iter()
                .map(|&v| TensorElement::omega_scalar(torus, n_sites, v as i64))
                .collect(),
        )
    }

    pub fn p(&self) -> u32 {
        self.j.p()
    }
}

impl Serialize for GeneratorAssignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map: BTreeMap<String, &TensorElement> = BTreeMap::new();
        for (k, g) in self.generators.iter().enumerate() {
            map.insert((k + 1).to_string(), g);
        }
        map.insert("j".into(), &self.j);
        // numeric keys in numeric order
        let mut entries: Vec<(String, &TensorElement)> = map.into_iter().collect();
        entries.sort_by_key(|(k, _)| k.parse::<usize>().unwrap_or(usize::MAX));
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(entries.len()))?;
        for (k, v) in entries {
            m.serialize_entry(&k, v)?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for GeneratorAssignment {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let mut raw: BTreeMap<String, TensorElement> = BTreeMap::deserialize(d)?;
        let j = raw.remove("j");
        let mut indexed: Vec<(usize, TensorElement)> = raw
            .into_iter()
            .map(|(k, v)| {
                k.parse::<usize>()
                    .map(|i| (i, v))
                    .map_err(|_| D::Error::custom(format!("unexpected key {k}")))
            })
            .collect::<std::result::Result<_, _>>()?;
        indexed.sort_by_key(|(k, _)| *k);
        if indexed.iter().enumerate().any(|(i, (k, _))| *k != i + 1) {
            return Err(D::Error::custom("generator keys must be 1..n without gaps"));
        }
        let gens = indexed.into_iter().map(|(_, v)| v).collect();
        match j {
            Some(j) => GeneratorAssignment::with_j(gens, j),
            None => GeneratorAssignment::new(gens),
        }
        .map_err(D::Error::custom)
    }
}

/// Outcome of the three solution-group conditions.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SolutionReport {
    pub torsion: bool,
    pub commutativity: bool,
    pub constraints: bool,
    pub failures: Vec<String>,
}

impl SolutionReport {
    /// Torsion and constraints, commutativity not required.
    pub fn is_operator_solution(&self) -> bool {
        self.torsion && self.constraints
    }

    pub fn is_quantum_solution(&self) -> bool {
        self.torsion && self.commutativity && self.constraints
    }
}

fn check_dims(s: &Lcs, n: usize, p: u32) -> Result<()> {
    if s.cols() != n {
        return Err(Error::Shape(format!("{n} generators for {} columns", s.cols())));
    }
    if s.d != p {
        return Err(Error::Shape(format!("system is mod {} but operators are over p = {p}", s.d)));
    }
    Ok(())
}

/// Checks d-torsion, commutativity of `J` and co-row pairs, and
/// `prod_j g_j^(A_ij) = J^(b_i)` with the product in ascending `j`.
pub fn check_solution_conditions(s: &Lcs, g: &GeneratorAssignment) -> Result<SolutionReport> {
    check_dims(s, g.generators.len(), g.p())?;
    let mut r = SolutionReport {
        torsion: true,
        commutativity: true,
        constraints: true,
        failures: vec![],
    };
    for (k, x) in g.generators.iter().enumerate() {
        if !x.is_p_torsion() {
            r.torsion = false;
            r.failures.push(format!("g{} is not {}-torsion", k + 1, s.d));
        }
    }
    if !g.j.is_p_torsion() {
        r.torsion = false;
        r.failures.push("J is not torsion".into());
    }
    for (k, x) in g.generators.iter().enumerate() {
        if !g.j.commutes_with(x) {
            r.commutativity = false;
            r.failures.push(format!("J does not commute with g{}", k + 1));
        }
    }
    for (j, k) in s.co_row_pairs() {
        if !g.generators[j].commutes_with(&g.generators[k]) {
            r.commutativity = false;
            r.failures.push(format!("g{} and g{} do not commute", j + 1, k + 1));
        }
    }
    for (i, (row, &bi)) in s.a.iter().zip(&s.b).enumerate() {
        let lhs = row_product(&g.generators, row, g.j.torus(), g.j.n());
        if lhs != g.j.pow(bi as i64) {
            r.constraints = false;
            r.failures.push(format!("row {} fails", i + 1));
        }
    }
    Ok(r)
}

fn row_product(gens: &[TensorElement], row: &[u32], torus: Torus, n: usize) -> TensorElement {
    row.iter()
        .zip(gens)
        .fold(TensorElement::identity(torus, n), |acc, (&a, g)| acc.mul(&g.pow(a as i64)))
}

/// The same three conditions for Heisenberg-Weyl operators with `J = omega 1`.
pub fn check_hw_conditions(s: &Lcs, h: &[HWElement]) -> Result<SolutionReport> {
    let first = h.first().ok_or_else(|| Error::Shape("no generators".into()))?;
    check_dims(s, h.len(), first.p)?;
    let (p, n) = (first.p, first.n());
    let mut r = SolutionReport {
        torsion: true,
        commutativity: true,
        constraints: true,
        failures: vec![],
    };
    for (k, x) in h.iter().enumerate() {
        if !x.pow(p as i64).is_identity() {
            r.torsion = false;
            r.failures.push(format!("h{} is not torsion", k + 1));
        }
    }
    for (j, k) in s.co_row_pairs() {
        if h[j].commutator_exponent(&h[k])? != 0 {
            r.commutativity = false;
            r.failures.push(format!("h{} and h{} do not commute", j + 1, k + 1));
        }
    }
    for (i, (row, &bi)) in s.a.iter().zip(&s.b).enumerate() {
        let lhs = row
            .iter()
            .zip(h)
            .fold(HWElement::identity(p, n), |acc, (&a, x)| acc.mul(&x.pow(a as i64)));
        let rhs = HWElement {
            p,
            phase: Phase::omega_pow(p, bi as i64),
            a: vec![0; n],
            b: vec![0; n],
        };
        if lhs != rhs {
            r.constraints = false;
            r.failures.push(format!("row {} fails", i + 1));
        }
    }
    Ok(r)
}

/// `E E' psi = E' E psi` on the GHZ state, decided exactly.
pub fn commute_on_ghz(e: &TensorElement, f: &TensorElement) -> Result<bool> {
    let ef = e.checked_mul(f)?;
    let fe = f.checked_mul(e)?;
    Ok(apply_to_ghz(&ef) == apply_to_ghz(&fe))
}

/// One row per input in lexicographic order: `L_{i,k} = l_k(i)`, rhs `o(i)`.
pub fn lcs_from_mbqc(spec: &MbqcSpec, t: &OutputTable) -> Result<Lcs> {
    let o = t.outputs()?;
    let a = spec
        .inputs()
        .iter()
        .map(|i| spec.settings(i).into_iter().map(|x| x as i64).collect())
        .collect();
    Lcs::new(spec.p(), a, o.into_iter().map(|x| x as i64).collect())
}

/// Result of pushing a quantum solution through `nu . phi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub x: Vec<u32>,
    pub images: Vec<HWElement>,
    /// The images satisfy the three conditions in `H^⊗n(Z_p)`.
    pub image_report: SolutionReport,
    pub classical_ok: bool,
}

/// `x_k = nu(phi(g_k))` for a quantum solution over an odd prime.
pub fn reduce_to_classical(s: &Lcs, g: &GeneratorAssignment) -> Result<Reduction> {
    if g.p() == 2 || s.d == 2 {
        return Err(Error::EvenPrime("the reduction needs an odd prime".into()));
    }
    let report = check_solution_conditions(s, g)?;
    if !report.is_quantum_solution() {
        return Err(Error::Precondition(format!(
            "not a quantum solution: {}",
            report.failures.join("; ")
        )));
    }
    let images = g
        .generators
        .iter()
        .map(|x| phi(x, Variant::Proof))
        .collect::<Result<Vec<_>>>()?;
    let x = images.iter().map(value_map_nu).collect::<Result<Vec<_>>>()?;
    Ok(Reduction {
        classical_ok: s.check_classical(&x)?,
        image_report: check_hw_conditions(s, &images)?,
        images,
        x,
    })
}

/// The two-qubit square, its operator assignment and the star system.
#[derive(Debug, Clone)]
pub struct MerminFixtures {
    pub square: Lcs,
    pub square_assignment: GeneratorAssignment,
    pub star: Lcs,
}

/// Qubit Paulis at `p = 2` inside `K_{T_(4)}(2)`; `Z` appears only in
/// determinant-one pairs.
pub struct Paulis {
    pub torus: Torus,
    pub i: KElement,
    pub x: KElement,
    pub y: KElement,
    /// `diag(i, -i)` and `diag(-i, i)`, whose tensor product is `Z ⊗ Z`.
    pub zi: KElement,
    pub zmi: KElement,
}

impl Paulis {
    pub fn new() -> Self {
        let torus = Torus::new(2, 2).expect("valid torus");
        let i = Phase::root(2, 2, 1).expect("valid root");
        let s = PhaseFunction::new(vec![i.inv(), i]).expect("valid table");
        Paulis {
            torus,
            i: KElement::identity(torus),
            x: KElement::shift(torus),
            y: KElement::new(torus, s.clone(), 1).expect("valid element"),
            zi: KElement::diagonal(torus, s.inv()).expect("valid element"),
            zmi: KElement::diagonal(torus, s).expect("valid element"),
        }
    }

    fn pair(&self, a: &KElement, b: &KElement) -> TensorElement {
        TensorElement::from_sites(vec![a.clone(), b.clone()]).expect("valid tensor")
    }

    /// The nine square operators in grid order, rows top to bottom.
    pub fn square_grid(&self) -> [TensorElement; 9] {
        let (i, x, y) = (&self.i, &self.x, &self.y);
        [
            self.pair(x, i),
            self.pair(i, y),
            self.pair(x, y),
            self.pair(i, x),
            self.pair(y, i),
            self.pair(y, x),
            self.pair(x, x),
            self.pair(y, y),
            self.pair(&self.zi, &self.zmi),
        ]
    }
}

impl Default for Paulis {
    fn default() -> Self {
        Self::new()
    }
}

pub fn mermin_square_lcs() -> Lcs {
    let a = vec![
        vec![1, 1, 1, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 1, 1, 1, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 1, 1, 1],
        vec![1, 0, 0, 1, 0, 0, 1, 0, 0],
        vec![0, 1, 0, 0, 1, 0, 0, 1, 0],
        vec![0, 0, 1, 0, 0, 1, 0, 0, 1],
    ];
    Lcs::new(2, a, vec![0, 0, 0, 0, 0, 1]).expect("valid system")
}

/// Generators read down the columns of the grid, so that the first three
/// rows of `A` are its columns and the last three its rows.
pub fn mermin_square_assignment() -> GeneratorAssignment {
    let g = Paulis::new().square_grid();
    let order = [0, 3, 6, 1, 4, 7, 2, 5, 8];
    GeneratorAssignment::new(order.iter().map(|&k| g[k].clone()).collect()).expect("valid")
}

/// Generators read along the rows of the grid.
pub fn mermin_square_assignment_row_major() -> GeneratorAssignment {
    GeneratorAssignment::new(Paulis::new().square_grid().to_vec()).expect("valid")
}

/// The star system with right-hand side `(0, 0, 0, 1)` as written.
pub fn mermin_star_lcs() -> Lcs {
    let a = vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]];
    Lcs::new(2, a, vec![0, 0, 0, 1]).expect("valid system")
}

pub fn mermin_fixtures() -> MerminFixtures {
    MerminFixtures {
        square: mermin_square_lcs(),
        square_assignment: mermin_square_assignment(),
        star: mermin_star_lcs(),
    }
}

/// Per-input measurement operators of the qudit star and how far they get
/// towards a quantum solution.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StarFamilyReport {
    pub p: u32,
    pub table: OutputTable,
    pub lcs: Lcs,
    /// Every `E_i` satisfies `E_i^p = 1`.
    pub torsion: bool,
    /// `E_i psi = omega^(o(i)) psi` for every input.
    pub ghz_constraints: bool,
    /// `E_i = omega^(o(i)) 1` as operators, for every input.
    pub operator_constraints: bool,
    pub commute_on_ghz: bool,
    /// First pair of inputs whose operators do not commute exactly.
    pub noncommuting_pair: Option<(Vec<u32>, Vec<u32>)>,
    pub classical_solution: Option<Vec<u32>>,
}

impl StarFamilyReport {
    /// Operator-level solution on the state, but not a quantum solution.
    pub fn dichotomy_holds(&self) -> bool {
        self.torsion
            && self.ghz_constraints
            && self.commute_on_ghz
            && self.noncommuting_pair.is_some()
    }
}

pub fn qudit_star_family(p: u32) -> Result<StarFamilyReport> {
    let spec = qudit_star_spec(p)?;
    let table = output_table(&spec)?;
    let lcs = lcs_from_mbqc(&spec, &table)?;
    let inputs = spec.inputs();
    let ops = inputs
        .iter()
        .map(|i| spec.operator(i))
        .collect::<Result<Vec<_>>>()?;
    let outputs = table.outputs()?;
    let mut ghz_ok = true;
    let mut op_ok = true;
    for (e, &o) in ops.iter().zip(&outputs) {
        let w = Phase::omega_pow(p, o as i64);
        ghz_ok &= ghz_evaluate(e) == Some(w);
        op_ok &= e.as_scalar() == Some(w);
    }
    let mut on_ghz = true;
    let mut noncommuting = None;
    for (a, ea) in ops.iter().enumerate() {
        for (b, eb) in ops.iter().enumerate().skip(a + 1) {
            on_ghz &= commute_on_ghz(ea, eb)?;
            if noncommuting.is_none() && !ea.commutes_with(eb) {
                noncommuting = Some((inputs[a].clone(), inputs[b].clone()));
            }
        }
    }
    Ok(StarFamilyReport {
        p,
        torsion: ops.iter().all(|e| e.is_p_torsion()),
        ghz_constraints: ghz_ok,
        operator_constraints: op_ok,
        commute_on_ghz: on_ghz,
        noncommuting_pair: noncommuting,
        classical_solution: lcs.solve_classical()?,
        lcs,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mbqc::qubit_star_spec;

    #[test]
    fn solver_basics() {
        let s = Lcs::new(3, vec![vec![1, 0], vec![0, 1]], vec![2, 1]).unwrap();
        assert_eq!(s.solve_classical().unwrap(), Some(vec![2, 1]));
        assert!(!s.check_classical(&[0, 0]).unwrap());
        assert!(mermin_square_lcs().solve_classical().unwrap().is_none());
        assert!(mermin_star_lcs().solve_classical().unwrap().is_none());
        let composite = Lcs::new(4, vec![vec![1]], vec![1]).unwrap();
        assert!(composite.solve_classical().is_err());
        assert!(composite.check_classical(&[1]).unwrap());
    }

    #[test]
    fn square_quantum_solution() {
        let f = mermin_fixtures();
        let r = check_solution_conditions(&f.square, &f.square_assignment).unwrap();
        assert!(r.is_quantum_solution(), "{:?}", r.failures);
    }

    #[test]
    fn row_major_square_order_breaks_rows_three_and_six() {
        let r = check_solution_conditions(&mermin_square_lcs(), &mermin_square_assignment_row_major())
            .unwrap();
        assert!(r.torsion && r.commutativity);
        assert_eq!(r.failures, vec!["row 3 fails", "row 6 fails"]);
    }

    #[test]
    fn qubit_star_system() {
        let spec = qubit_star_spec();
        let t = output_table(&spec).unwrap();
        let s = lcs_from_mbqc(&spec, &t).unwrap();
        assert_eq!(s.a, mermin_star_lcs().a);
        assert_eq!(s.b, vec![0, 1, 1, 1]);
        assert!(s.solve_classical().unwrap().is_none());
    }

    #[test]
    fn scalar_lift_reduces_back() {
        let torus = Torus::new(3, 1).unwrap();
        let s = Lcs::new(3, vec![vec![1, 1, 0], vec![0, 1, 2]], vec![1, 2]).unwrap();
        let x = s.solve_classical().unwrap().unwrap();
        let g = GeneratorAssignment::scalar_lift(torus, 2, &x).unwrap();
        assert!(check_solution_conditions(&s, &g).unwrap().is_quantum_solution());
        let red = reduce_to_classical(&s, &g).unwrap();
        assert_eq!(red.x, x);
        assert!(red.classical_ok && red.image_report.is_quantum_solution());
    }

    #[test]
    fn reduction_refuses_qubits() {
        let f = mermin_fixtures();
        assert!(matches!(
            reduce_to_classical(&f.square, &f.square_assignment),
            Err(Error::EvenPrime(_))
        ));
    }

    #[test]
    fn ghz_commutation() {
        let torus = Torus::new(3, 1).unwrap();
        let x1 = TensorElement::local(KElement::shift(torus), 0, 2).unwrap();
        let z1 = TensorElement::local(KElement::clock(torus).unwrap(), 0, 2).unwrap();
        assert!(commute_on_ghz(&x1, &x1).unwrap());
        assert!(!commute_on_ghz(&x1, &z1).unwrap());
    }

    #[test]
    fn assignment_json() {
        let g = mermin_square_assignment();
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.starts_with("{\"1\":"));
        let back: GeneratorAssignment = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn lcs_json() {
        let s: Lcs = serde_json::from_str(r#"{"d":3,"A":[[1,-1]],"b":[4]}"#).unwrap();
        assert_eq!((s.a.clone(), s.b.clone()), (vec![vec![1, 2]], vec![1]));
        assert!(serde_json::from_str::<Lcs>(r#"{"d":3,"A":[[1],[1,2]],"b":[0,0]}"#).is_err());
    }
}
