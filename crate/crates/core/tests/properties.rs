use num_bigint::BigInt;
use proptest::prelude::*;

use ringext::algebra::{catalog, enumerate_bimodules, BimoduleAction, FinAbGroup};
use ringext::ann::{check_ann_functor, compose, oplus, otimes, AnnFunctorData, AnnStructure, Morphism};
use ringext::cochain3::{delta2, CoboundaryPair, Family3};
use ringext::factor_sets::{
    are_equivalent, build_singular_extension, check_factor_set, extract_factor_set, h2_classes, shift, Normalization,
    OneCochain,
};
use ringext::io::{family_to_file, FamilyFile, Loader};
use ringext::obstruction::{are_cohomologous, is_three_cocycle};
use ringext::shukla::cocycle3_check;
use ringext::zlinalg::{hermite_form, kernel_basis, smith_form, solve, FormalSum, IntMatrix, ModLattice};
use ringext::Guards;

fn modules() -> Vec<BimoduleAction> {
    let r2 = catalog::zmod(2);
    let mut out = vec![
        BimoduleAction::regular(&catalog::zmod(3)).unwrap(),
        BimoduleAction::regular(&catalog::zmod(4)).unwrap(),
        BimoduleAction::regular(&catalog::product(&r2, &r2)).unwrap(),
        BimoduleAction::regular(&catalog::f2_dual()).unwrap(),
    ];
    out.extend(enumerate_bimodules(&catalog::f2_dual(), &FinAbGroup::cyclic(2), &Guards::default()).unwrap());
    out
}

fn pair_from_seed(m: &BimoduleAction, values: &[usize]) -> CoboundaryPair {
    let k = m.group().order();
    let mut c = CoboundaryPair::zero(m);
    for (slot, v) in CoboundaryPair::free_slots(m).into_iter().zip(values.iter().cycle()) {
        c.set(slot, v % k);
    }
    c
}

fn family_from_seed(m: &BimoduleAction, values: &[usize]) -> Family3 {
    let k = m.group().order();
    let mut t = Family3::zero(m);
    for (slot, v) in Family3::free_slots(m.ring().order()).iter().zip(values.iter().cycle()) {
        t.set(slot, v % k);
    }
    t
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coboundaries_satisfy_all_relations(which in 0usize..5, values in prop::collection::vec(0usize..8, 1..40)) {
        let m = &modules()[which];
        let k = delta2(&pair_from_seed(m, &values));
        prop_assert!(is_three_cocycle(&k).is_empty());
        prop_assert!(cocycle3_check(&k.negate_lambda()).is_empty());
    }

    #[test]
    fn delta2_is_additive(which in 0usize..5, a in prop::collection::vec(0usize..8, 1..30), b in prop::collection::vec(0usize..8, 1..30)) {
        let m = &modules()[which];
        let (c1, c2) = (pair_from_seed(m, &a), pair_from_seed(m, &b));
        prop_assert_eq!(delta2(&c1.add(&c2)), delta2(&c1).add(&delta2(&c2)));
    }

    #[test]
    fn shifted_families_are_recognized_as_cohomologous(which in 0usize..5, base in prop::collection::vec(0usize..8, 1..40), values in prop::collection::vec(0usize..8, 1..40)) {
        let m = &modules()[which];
        let k1 = family_from_seed(m, &base);
        let c = pair_from_seed(m, &values);
        let k2 = k1.add(&delta2(&c));
        let w = are_cohomologous(&k1, &k2, &Guards::default()).unwrap();
        prop_assert!(w.is_some());
        prop_assert_eq!(k1.add(&delta2(&w.unwrap())), k2);
    }

    #[test]
    fn functor_squares_commute_exactly_on_coboundary_shifts(which in 0usize..5, base in prop::collection::vec(0usize..8, 1..40), values in prop::collection::vec(0usize..8, 1..40), bump in 0usize..1000) {
        let m = &modules()[which];
        let s = AnnStructure::new(family_from_seed(m, &base));
        let c = pair_from_seed(m, &values);
        let s2 = AnnStructure::new(s.constraints.add(&delta2(&c)));
        let d = AnnFunctorData::from_pair(&c);
        prop_assert!(check_ann_functor(&d, &s, &s2).unwrap().is_empty());
        let mut wrong = s2.clone();
        let n = m.ring().order();
        let i = n * n * n - 1 - bump % (n * n);
        wrong.constraints.xi[i] = m.group().add(wrong.constraints.xi[i], 1);
        prop_assert!(!check_ann_functor(&d, &s, &wrong).unwrap().is_empty());
    }

    #[test]
    fn morphism_tensor_is_associative_and_distributive(which in 0usize..5, objs in prop::collection::vec(0usize..16, 3), labels in prop::collection::vec(0usize..16, 3)) {
        let m = &modules()[which];
        let (n, k) = (m.ring().order(), m.group().order());
        let f: Vec<Morphism> = (0..3).map(|i| Morphism { object: objs[i] % n, label: labels[i] % k }).collect();
        prop_assert_eq!(otimes(m, otimes(m, f[0], f[1]), f[2]), otimes(m, f[0], otimes(m, f[1], f[2])));
        prop_assert_eq!(otimes(m, oplus(m, f[0], f[1]), f[2]), oplus(m, otimes(m, f[0], f[2]), otimes(m, f[1], f[2])));
        prop_assert_eq!(otimes(m, f[0], oplus(m, f[1], f[2])), oplus(m, otimes(m, f[0], f[1]), otimes(m, f[0], f[2])));
        let g = Morphism { object: f[0].object, label: f[1].label };
        prop_assert_eq!(compose(m, f[0], g).unwrap(), compose(m, g, f[0]).unwrap());
    }

    #[test]
    fn family_files_round_trip(which in 0usize..5, values in prop::collection::vec(0usize..8, 1..40)) {
        let m = &modules()[which];
        let k = family_from_seed(m, &values);
        let json = serde_json::to_string(&family_to_file(&k, None)).unwrap();
        let back: FamilyFile = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(Loader { base: Default::default() }.family(&back).unwrap(), k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn factor_set_shifts_stay_valid_and_equivalent(which in 0usize..3, rep in 0usize..8, t in prop::collection::vec(0usize..4, 4)) {
        let z2 = catalog::zmod(2);
        let m = [
            BimoduleAction::regular(&z2).unwrap(),
            BimoduleAction::regular(&catalog::zmod(3)).unwrap(),
            BimoduleAction::regular(&catalog::product(&z2, &z2)).unwrap(),
        ][which].clone();
        let guards = Guards::default();
        let reps = h2_classes(&m, &guards).unwrap().representatives;
        let c = &reps[rep % reps.len()];
        let (n, k, one) = (m.ring().order(), m.group().order(), m.ring().one().unwrap());
        let tv: Vec<usize> = (0..n).map(|x| if x == 0 || x == one { 0 } else { t[x % 4] % k }).collect();
        let t = OneCochain::new(&m, tv, Normalization::Strict).unwrap();
        let shifted = shift(c, &t);
        prop_assert!(check_factor_set(&shifted).is_empty());
        prop_assert!(are_equivalent(c, &shifted, &guards).unwrap().is_some());
        let se = build_singular_extension(&shifted).unwrap();
        prop_assert_eq!(extract_factor_set(&se, &se.u, Normalization::Strict).unwrap(), shifted);
    }

    #[test]
    fn smith_and_hermite_transforms_are_exact(rows in 1usize..5, cols in 1usize..5, entries in prop::collection::vec(-9i64..10, 25)) {
        let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| entries[i * 5 + j]).collect()).collect();
        let m = IntMatrix::from_rows(&data);
        let s = smith_form(&m);
        prop_assert!(s.verify_product());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
        }
        let h = hermite_form(&m);
        prop_assert_eq!(h.u.mul(&m), h.d.clone());
        for v in kernel_basis(&m) {
            prop_assert!(m.mul_vec(&v.to_vec(cols)).iter().all(|x| *x == BigInt::from(0)));
        }
    }

    #[test]
    fn solve_recovers_a_preimage(rows in 1usize..5, cols in 1usize..5, entries in prop::collection::vec(-9i64..10, 25), x in prop::collection::vec(-5i64..6, 5)) {
        let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| entries[i * 5 + j]).collect()).collect();
        let m = IntMatrix::from_rows(&data);
        let x: Vec<BigInt> = x[..cols].iter().map(|&v| BigInt::from(v)).collect();
        let b = FormalSum::from_vec(&m.mul_vec(&x));
        let y = solve(&m, &b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y.to_vec(cols)), b.to_vec(rows));
    }

    #[test]
    fn lattice_express_reconstructs_members(e in prop::sample::select(vec![2u64, 4, 6, 8]), gens in prop::collection::vec(prop::collection::vec(0i64..8, 4), 1..4), coeffs in prop::collection::vec(0i64..8, 3)) {
        let mut lat = ModLattice::with_tags(4, e, gens.len());
        for (i, g) in gens.iter().enumerate() {
            let mut tag = vec![0; gens.len()];
            tag[i] = 1;
            lat.insert_tagged(g, &tag);
        }
        let v: Vec<i64> = (0..4)
            .map(|j| gens.iter().zip(&coeffs).map(|(g, c)| g[j] * c).sum::<i64>().rem_euclid(e as i64))
            .collect();
        prop_assert!(lat.contains(&v));
        let c = lat.express(&v).expect("member");
        let back: Vec<i64> = (0..4)
            .map(|j| gens.iter().zip(&c).map(|(g, c)| g[j] * c).sum::<i64>().rem_euclid(e as i64))
            .collect();
        prop_assert_eq!(back, v);
    }
}
