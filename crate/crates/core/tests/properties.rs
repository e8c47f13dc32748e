//! Randomized invariants checked against the matrix oracle and against
//! exponent arithmetic done by hand.

mod common;

use common::*;
use lcsmbqc::projection::value_map_nu;
use lcsmbqc::sampling::{self, Rng64};
use lcsmbqc::{phi, KElement, Phase, PhaseFunction, TensorElement, Torus, Variant};
use proptest::prelude::*;
use rand::SeedableRng;

fn torus() -> impl Strategy<Value = Torus> {
    prop_oneof![Just((3u32, 2u32)), Just((5, 2)), Just((3, 3)), Just((7, 1))]
        .prop_map(|(p, m)| Torus::new(p, m).unwrap())
}

fn element() -> impl Strategy<Value = KElement> {
    (torus(), any::<u64>()).prop_map(|(t, seed)| {
        sampling::random_element(t, &mut Rng64::seed_from_u64(seed))
    })
}

fn triple() -> impl Strategy<Value = [KElement; 3]> {
    (torus(), any::<u64>()).prop_map(|(t, seed)| {
        let mut rng = Rng64::seed_from_u64(seed);
        [0; 3].map(|_| sampling::random_element(t, &mut rng))
    })
}

proptest! {
    #[test]
    fn phase_roots_multiply_like_fractions(p in prop_oneof![Just(3u32), Just(5), Just(7)], m in 1u32..4, a in -500i64..500, b in -500i64..500) {
        let x = Phase::root(p, m, a).unwrap();
        let y = Phase::root(p, m, b).unwrap();
        prop_assert_eq!(x * y, Phase::root(p, m, a + b).unwrap());
        prop_assert!(phase(&(x * y)).close(phase(&x).mul(phase(&y))));
        prop_assert!((x * x.inv()).is_one());
    }

    #[test]
    fn group_laws(g in triple()) {
        let [a, b, c] = g;
        let id = KElement::identity(a.torus());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &a.inv(), id.clone());
        prop_assert_eq!(&a * &id, a.clone());
        prop_assert!(site(&(&a * &b)).close(&site(&a).mul(&site(&b))));
    }

    #[test]
    fn commutator_is_scalar_iff_matrix_commutator_is(g in triple()) {
        let [a, b, _] = g;
        let lib = a.commutator_scalar(&b).map(|c| phase(&c));
        let oracle = site(&a).commutator(&site(&b)).as_scalar();
        prop_assert_eq!(lib.is_some(), oracle.is_some());
        if let (Some(x), Some(y)) = (lib, oracle) {
            prop_assert!(x.close(y));
        }
    }

    #[test]
    fn order_matches_matrix_order(g in element()) {
        let k = g.order();
        let m = site(&g);
        prop_assert!(m.pow(k as u32).close(&Mat::identity(m.n)));
        prop_assert!((1..k).all(|j| !m.pow(j as u32).close(&Mat::identity(m.n))));
    }

    #[test]
    fn shift_action_moves_arguments(t in torus(), seed in any::<u64>(), b in -20i64..20) {
        let xi = sampling::random_special_diag(t, &mut Rng64::seed_from_u64(seed));
        let moved = xi.act(b);
        for q in 0..t.p as i64 {
            prop_assert_eq!(moved.at(q), xi.at(q - b));
        }
        prop_assert_eq!(moved.det(), xi.det());
    }

    #[test]
    fn decomposition_round_trips(t in torus(), seed in any::<u64>()) {
        let xi = sampling::random_special_diag(t, &mut Rng64::seed_from_u64(seed));
        let c = xi.decompose(t.m).unwrap();
        prop_assert_eq!(c.reconstruct(), xi);
    }

    #[test]
    fn phi_respects_commuting_products(p in prop_oneof![Just(3u32), Just(5), Just(7)], n in 1usize..4, seed in any::<u64>()) {
        let t = Torus::new(p, 2).unwrap();
        let (e, f) = sampling::random_commuting_torsion_pair(t, n, &mut Rng64::seed_from_u64(seed));
        let lhs = phi(&e.mul(&f), Variant::Proof).unwrap();
        let rhs = hw_mul(&phi(&e, Variant::Proof).unwrap(), &phi(&f, Variant::Proof).unwrap());
        prop_assert_eq!(&lhs, &rhs);
        // nu is additive on commuting HW pairs
        let (x, y) = (phi(&e, Variant::Proof).unwrap(), phi(&f, Variant::Proof).unwrap());
        prop_assert_eq!(value_map_nu(&lhs).unwrap(), (value_map_nu(&x).unwrap() + value_map_nu(&y).unwrap()) % p);
    }

    #[test]
    fn phi_image_matrix_has_order_p(seed in any::<u64>(), n in 1usize..3) {
        let t = Torus::new(3, 2).unwrap();
        let (e, _) = sampling::random_commuting_torsion_pair(t, n, &mut Rng64::seed_from_u64(seed));
        let h = phi(&e, Variant::Proof).unwrap();
        prop_assert!(hw(&h).pow(3).close(&Mat::identity(hw(&h).n)));
        prop_assert!(tensor(&e).pow(3).close(&Mat::identity(tensor(&e).n)));
    }

    #[test]
    fn tensor_product_matches_kronecker(seed in any::<u64>(), n in 1usize..3) {
        let t = Torus::new(3, 2).unwrap();
        let mut rng = Rng64::seed_from_u64(seed);
        let mk = |rng: &mut Rng64| {
            let sites = (0..n).map(|_| sampling::random_element(t, rng)).collect();
            TensorElement::new(Phase::root(3, 2, 4).unwrap(), sites).unwrap()
        };
        let (e, f) = (mk(&mut rng), mk(&mut rng));
        prop_assert!(tensor(&e.mul(&f)).close(&tensor(&e).mul(&tensor(&f))));
        prop_assert!(tensor(&e.inv()).close(&tensor(&e).dagger()));
        prop_assert_eq!(e.commutes_with(&f), tensor(&e).commutator(&tensor(&f)).close(&Mat::identity(tensor(&e).n)));
    }
}

#[test]
fn omega_polynomials_are_special_only_with_a_root_correction() {
    // omega^(q^2) at p = 3 has det omega^(0+1+4) = omega^2.
    let quad = PhaseFunction::from_omega_poly(3, &[0, 0, 1]).unwrap();
    assert!(!quad.is_special());
    assert!(quad.scale(Phase::root(3, 2, 1).unwrap()).is_special());
}
