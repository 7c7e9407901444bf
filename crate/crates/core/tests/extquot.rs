//! Twisted extended quotients: conditions, structural errors and the
//! agreement of the direct and two-step constructions.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use springer_core::extquot::{
    build, plain_extended_quotient_size, plain_irreducible_count, trivial_quotient_compare, two_step_quotient,
    validate, GroupAction, TwistedQuotientData,
};
use springer_core::projrep::{twisted_irreps, Cocycle, FiniteGroup, DEFAULT_BOUND};
use springer_core::Error;

use common::*;

/// Klein four acting on two points: `a` fixes both, `b` swaps them.
fn klein_on_two() -> (GroupAction, usize, usize) {
    let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    let a = 1;
    let b = 2;
    assert_ne!(g.mul(a, b), 0);
    let stab = [0, a];
    let table: Vec<Vec<usize>> =
        (0..4).map(|h| if stab.contains(&h) { vec![0, 1] } else { vec![1, 0] }).collect();
    (GroupAction::new(g, &table).unwrap(), a, b)
}

#[test]
fn composition_violation_is_reported() {
    let (action, _, b) = klein_on_two();
    let mut data = TwistedQuotientData::trivial(&action);
    data.modulus = 2;
    // θ_{b,0} negates T_a while θ_{b,1} does not, so θ_{b,1}θ_{b,0} ≠ θ_{1,0}.
    data.theta[b][0].scale = vec![0, 1];
    let v = validate(&action, &data).unwrap();
    assert!(!v.is_empty());
    assert!(v.iter().all(|x| x.condition == 3), "{v:?}");
    assert!(v.iter().all(|x| x.orbit == 0));
    assert!(matches!(build(&action, &data), Err(Error::InvalidQuotientData(_))));
}

#[test]
fn outer_gluing_is_reported() {
    let g = FiniteGroup::cyclic(2);
    let action = GroupAction::trivial(g, 1);
    let mut data = TwistedQuotientData::trivial(&action);
    data.modulus = 2;
    // T_1 ↦ −T_1 is an automorphism of C[Z/2] but not an inner one.
    data.theta[1][0].scale = vec![0, 1];
    let v = validate(&action, &data).unwrap();
    assert!(v.iter().any(|x| x.condition == 2), "{v:?}");
}

#[test]
fn structural_errors() {
    let (action, a, b) = klein_on_two();
    let mut data = TwistedQuotientData::trivial(&action);
    data.cocycles[0] = vec![vec![0]];
    assert!(validate(&action, &data).is_err());
    let mut data = TwistedQuotientData::trivial(&action);
    // Gluing sends the stabilizer outside the target stabilizer.
    data.theta[b][0].map = vec![0, b];
    assert!(validate(&action, &data).is_err());
    let mut data = TwistedQuotientData::trivial(&action);
    data.theta.pop();
    assert!(validate(&action, &data).is_err());
    let g = action.group().clone();
    assert!(matches!(GroupAction::new(g.clone(), &vec![vec![0, 0]; 4]), Err(Error::InvalidAction(_))));
    let mut bad = action.rows();
    bad[a] = vec![1, 0];
    assert!(matches!(GroupAction::new(g, &bad), Err(Error::InvalidAction(_))));
    let data = TwistedQuotientData::trivial(&action);
    assert!(matches!(
        two_step_quotient(&action, &[vec![0], vec![0, 1]], &data),
        Err(Error::InvalidAction(_))
    ));
}

#[test]
fn klein_cocycle_on_a_fixed_point() {
    let klein = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    let action = GroupAction::trivial(klein.clone(), 1);
    let data = TwistedQuotientData::from_base_points(&action, 2, &[(0, bilinear_cocycle(2, 2))]).unwrap();
    let q = build(&action, &data).unwrap();
    assert_eq!(q.len(), 1);
    assert_eq!(q[0].dim, 2);
    let trivial = build(&action, &TwistedQuotientData::trivial(&action)).unwrap();
    assert_eq!(trivial.len(), 4);
}

#[test]
fn base_point_inputs_are_checked() {
    let (action, _, _) = klein_on_two();
    let z2 = Cocycle { modulus: 2, table: vec![vec![0, 1], vec![0, 0]] };
    assert!(matches!(
        TwistedQuotientData::from_base_points(&action, 2, &[(0, z2)]),
        Err(Error::InvalidCocycle(_))
    ));
    assert!(TwistedQuotientData::from_base_points(&action, 2, &[(5, Cocycle::trivial(2, 2))]).is_err());
    assert!(TwistedQuotientData::from_base_points(&action, 3, &[(0, Cocycle::trivial(2, 2))]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn trivial_data_gives_the_plain_quotient(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (action, _) = random_action(&mut rng, &small_groups(), 24);
        let q = build(&action, &TwistedQuotientData::trivial(&action)).unwrap();
        prop_assert_eq!(q.len(), plain_quotient_burnside(&action));
        prop_assert_eq!(q.len(), plain_extended_quotient_size(&action));
        prop_assert_eq!(q.len(), plain_irreducible_count(&action).unwrap());
        prop_assert!(trivial_quotient_compare(&action).unwrap());
    }

    #[test]
    fn synthesized_data_is_strict_and_two_step_agrees(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (action, blocks) = random_action(&mut rng, &small_groups(), 24);
        let data = random_data(&mut rng, &action);
        prop_assert!(validate(&action, &data).unwrap().is_empty());
        let direct = build(&action, &data).unwrap();
        let two = two_step_quotient(&action, &blocks, &data).unwrap();
        prop_assert_eq!(&direct, &two);
        // Σ over orbits of #Irr of the twisted stabilizer algebra.
        let mut expected = 0;
        for orbit in action.orbits() {
            let x = orbit[0];
            let (sub, _) = action.group().subgroup(&action.stabilizer(x)).unwrap();
            let k = Cocycle { modulus: data.modulus, table: data.cocycles[x].clone() };
            expected += twisted_irreps(&sub, &k, DEFAULT_BOUND).unwrap().count();
        }
        prop_assert_eq!(direct.len(), expected);
        // Members of distinct points are disjoint and cover every (x, ρ).
        let members: usize = direct.iter().map(|p| p.members.len()).sum();
        let mut all: Vec<(usize, usize)> = direct.iter().flat_map(|p| p.members.clone()).collect();
        all.sort();
        all.dedup();
        prop_assert_eq!(all.len(), members);
    }
}
