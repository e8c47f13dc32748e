mod common;

use common::*;
use lcsmbqc::lcs::{lcs_from_mbqc, mermin_square_assignment};
use lcsmbqc::mbqc::{qudit_star_spec, MbqcSpec};
use lcsmbqc::sampling;
use lcsmbqc::{
    check_solution_conditions, output_table, reduce_to_classical, GeneratorAssignment, KElement,
    Lcs, Phase, PhaseFunction, TensorElement, Torus,
};
use rand::Rng;

#[test]
fn solver_agrees_with_enumeration() {
    let mut rng = sampling::rng(31);
    for _ in 0..400 {
        let p = [3u32, 5, 7][rng.gen_range(0..3)];
        let rows = rng.gen_range(1..5);
        let cols = rng.gen_range(1..4);
        let a: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-10..10)).collect())
            .collect();
        let b: Vec<i64> = (0..rows).map(|_| rng.gen_range(-10..10)).collect();
        let s = Lcs::new(p, a, b).unwrap();
        let any = all_vectors(p, cols).into_iter().any(|x| satisfies(&s.a, &s.b, p, &x));
        match s.solve_classical().unwrap() {
            Some(x) => assert!(satisfies(&s.a, &s.b, p, &x)),
            None => assert!(!any, "solver missed a solution of {s:?}"),
        }
    }
}

#[test]
fn shape_errors_are_rejected() {
    assert!(Lcs::new(3, vec![vec![1, 2], vec![1]], vec![0, 0]).is_err());
    assert!(Lcs::new(3, vec![vec![1]], vec![0, 0]).is_err());
    assert!(Lcs::new(1, vec![vec![1]], vec![0]).is_err());
}

#[test]
fn non_solutions_are_refused_by_the_reduction() {
    let t = Torus::new(3, 2).unwrap();
    let x = TensorElement::from_sites(vec![KElement::shift(t)]).unwrap();
    let z = TensorElement::from_sites(vec![KElement::clock(t).unwrap()]).unwrap();
    // X and Z share a row but do not commute.
    let s = Lcs::new(3, vec![vec![1, 1]], vec![0]).unwrap();
    let g = GeneratorAssignment::new(vec![x, z]).unwrap();
    let rep = check_solution_conditions(&s, &g).unwrap();
    assert!(rep.torsion && !rep.commutativity);
    assert!(reduce_to_classical(&s, &g).is_err());
}

#[test]
fn qutrit_star_system_from_its_table() {
    let spec = qudit_star_spec(3).unwrap();
    let table = output_table(&spec).unwrap();
    let s = lcs_from_mbqc(&spec, &table).unwrap();
    assert_eq!(s.d, 3);
    // Nonlinear output: no classical assignment fits every input row.
    let cols = s.cols();
    assert!(all_vectors(3, cols).iter().all(|x| !satisfies(&s.a, &s.b, 3, x)));
    assert!(s.solve_classical().unwrap().is_none());
}

#[test]
fn json_round_trips() {
    let t = Torus::new(5, 3).unwrap();
    let mut rng = sampling::rng(1);
    let g = sampling::random_element(t, &mut rng);
    let back: KElement = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
    assert_eq!(back, g);

    let e = TensorElement::new(
        Phase::root(5, 2, 7).unwrap(),
        (0..3).map(|_| sampling::random_element(t, &mut rng)).collect(),
    )
    .unwrap();
    let back: TensorElement = serde_json::from_str(&serde_json::to_string(&e).unwrap()).unwrap();
    assert_eq!(back, e);

    let a = mermin_square_assignment();
    let back: GeneratorAssignment = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
    assert_eq!(back, a);

    let spec = qudit_star_spec(5).unwrap();
    let back: MbqcSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
    assert_eq!(back, spec);

    let s = Lcs::new(3, vec![vec![1, 2, -1]], vec![4]).unwrap();
    let back: Lcs = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
    assert_eq!(back, s);
}

#[test]
fn invalid_json_is_rejected() {
    // Entries must be p-power roots of unity with determinant one.
    let xi = PhaseFunction::from_omega_exponents(3, &[1, 0, 0]).unwrap();
    let json = serde_json::json!({ "xi": xi, "b": 0, "m": 2 });
    assert!(serde_json::from_value::<KElement>(json).is_err());
    assert!(serde_json::from_str::<Lcs>(r#"{"d":3,"A":[[1,2],[1]],"b":[0,0]}"#).is_err());
}

#[test]
fn scalar_solutions_match_the_matrix_picture() {
    let t = Torus::new(3, 2).unwrap();
    let mut rng = sampling::rng(4);
    for _ in 0..50 {
        let (s, x) = sampling::random_consistent_lcs(3, 3, 3, &mut rng);
        let g = GeneratorAssignment::scalar_lift(t, 2, &x).unwrap();
        for (m, &v) in g.generators.iter().zip(&x) {
            assert!(tensor(m).close(&Mat::scalar(9, omega(3, v as i64))));
        }
        assert!(check_solution_conditions(&s, &g).unwrap().is_quantum_solution());
        assert_eq!(reduce_to_classical(&s, &g).unwrap().x, x);
    }
}
