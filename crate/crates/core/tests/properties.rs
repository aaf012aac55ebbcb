//! Randomized laws over small ground sets. Each strategy draws a ground of
//! up to four points and builds topologies by generating from random
//! subbases, so the space of shapes is dense without being exhaustive.

use filtra_core::{
    check_theorem_stab2, check_theorem_stab3, is_filtration, is_kappa_baire, is_kappa_meager,
    is_weak_filtration, join_topologies, min_pi_basis_level, min_sigma_pibasis_level,
    slowest_filtration, GroundSet, Kappa, PointSet, SetFamily, Topology, Verdict,
};
use proptest::prelude::*;

fn ground_and_masks(extra: usize) -> impl Strategy<Value = (GroundSet, Vec<u64>)> {
    (0usize..=4).prop_flat_map(move |n| {
        let ground = GroundSet::new(n).unwrap();
        let full = ground.full_mask();
        proptest::collection::vec(0..=full, 0..3 + extra).prop_map(move |masks| (ground, masks))
    })
}

fn topology() -> impl Strategy<Value = Topology> {
    ground_and_masks(0).prop_map(|(ground, masks)| {
        let subbasis = SetFamily::from_masks(ground, masks).unwrap();
        Topology::generate(ground, &subbasis).unwrap()
    })
}

fn topology_and_mask() -> impl Strategy<Value = (Topology, u64)> {
    topology().prop_flat_map(|t| {
        let full = t.ground().full_mask();
        (Just(t), 0..=full)
    })
}

/// A comparable pair σ ⊆ τ: τ is generated by σ's opens plus extra sets.
fn comparable_pair() -> impl Strategy<Value = (Topology, Topology)> {
    ground_and_masks(0).prop_flat_map(|(ground, masks)| {
        let subbasis = SetFamily::from_masks(ground, masks).unwrap();
        let sigma = Topology::generate(ground, &subbasis).unwrap();
        let full = ground.full_mask();
        proptest::collection::vec(0..=full, 0..3).prop_map(move |extra| {
            let mut gens: Vec<u64> = sigma.open_masks().to_vec();
            gens.extend(extra);
            let fam = SetFamily::from_masks(ground, gens).unwrap();
            let tau = Topology::generate(ground, &fam).unwrap();
            (sigma.clone(), tau)
        })
    })
}

fn set(t: &Topology, mask: u64) -> PointSet {
    PointSet::from_bits(t.ground(), mask).unwrap()
}

proptest! {
    #[test]
    fn interior_is_the_largest_open_subset((t, mask) in topology_and_mask()) {
        let a = set(&t, mask);
        let int = t.interior(&a).unwrap();
        prop_assert!(int.is_subset_of(&a));
        prop_assert!(t.is_open(&int).unwrap());
        for u in t.opens() {
            if u.is_subset_of(&a) {
                prop_assert!(u.is_subset_of(&int));
            }
        }
    }

    #[test]
    fn closure_is_complement_dual_to_interior((t, mask) in topology_and_mask()) {
        let a = set(&t, mask);
        let cl = t.closure(&a).unwrap();
        prop_assert!(a.is_subset_of(&cl));
        prop_assert!(t.is_closed(&cl).unwrap());
        prop_assert_eq!(cl, t.interior(&a.complement()).unwrap().complement());
    }

    #[test]
    fn interior_and_closure_are_idempotent((t, mask) in topology_and_mask()) {
        let a = set(&t, mask);
        let int = t.interior(&a).unwrap();
        prop_assert_eq!(&t.interior(&int).unwrap(), &int);
        let cl = t.closure(&a).unwrap();
        prop_assert_eq!(&t.closure(&cl).unwrap(), &cl);
    }

    #[test]
    fn generated_topology_contains_its_subbasis((ground, masks) in ground_and_masks(2)) {
        let subbasis = SetFamily::from_masks(ground, masks).unwrap();
        let t = Topology::generate(ground, &subbasis).unwrap();
        for &m in subbasis.masks() {
            prop_assert!(t.contains_open_mask(m));
        }
        let regenerated = Topology::generate(ground, &t.open_family()).unwrap();
        prop_assert_eq!(regenerated, t);
    }

    #[test]
    fn join_is_an_upper_bound_and_commutes((a, b) in (topology(), topology())) {
        if a.ground() != b.ground() {
            prop_assert!(join_topologies(&[a, b]).is_err());
            return Ok(());
        }
        let ab = join_topologies(&[a.clone(), b.clone()]).unwrap();
        let ba = join_topologies(&[b.clone(), a.clone()]).unwrap();
        prop_assert_eq!(&ab, &ba);
        prop_assert!(a.is_subtopology_of(&ab));
        prop_assert!(b.is_subtopology_of(&ab));
        prop_assert_eq!(join_topologies(std::slice::from_ref(&a)).unwrap(), a);
    }

    #[test]
    fn semiregularization_is_an_idempotent_coarsening(t in topology()) {
        let sr = t.semiregularization();
        prop_assert!(sr.is_subtopology_of(&t));
        prop_assert!(sr.is_semiregular());
        prop_assert_eq!(&sr.semiregularization(), &sr);
        prop_assert_eq!(t.is_semiregular(), sr == t);
    }

    #[test]
    fn meager_sets_are_closed_downward_and_under_union((t, mask) in topology_and_mask()) {
        let kappa = Kappa::Omega;
        let a = set(&t, mask);
        if is_kappa_meager(&t, &a, kappa).unwrap() {
            let full = t.ground().full_mask();
            for sub in 0..=full {
                if sub & mask == sub {
                    prop_assert!(is_kappa_meager(&t, &set(&t, sub), kappa).unwrap());
                }
            }
            for other in 0..=full {
                let b = set(&t, other);
                if is_kappa_meager(&t, &b, kappa).unwrap() {
                    prop_assert!(is_kappa_meager(&t, &a.union(&b), kappa).unwrap());
                }
            }
        }
    }

    #[test]
    fn every_finite_topology_is_baire(t in topology()) {
        prop_assert!(is_kappa_baire(&t, Kappa::Omega).unwrap());
    }

    #[test]
    fn hierarchy_levels_over_a_topology_reach_a_basis_of_itself(t in topology()) {
        prop_assert!(min_pi_basis_level(&t, &t).unwrap().is_some());
        prop_assert!(min_sigma_pibasis_level(&t, &t).unwrap().is_some());
    }

    #[test]
    fn slowest_filtration_is_valid_and_padding_preserves_that((sigma, tau) in comparable_pair()) {
        let f = slowest_filtration(&sigma, &tau).unwrap();
        prop_assert_eq!(&f.stages()[0], &sigma);
        prop_assert!(is_filtration(&f));
        prop_assert!(is_weak_filtration(&f));
        let padded = f.pad_to(f.stages().len() + 2);
        prop_assert!(is_filtration(&padded));
        for (prev, next) in f.stages().iter().zip(f.stages().iter().skip(1)) {
            prop_assert!(prev.is_subtopology_of(next));
            prop_assert!(next.is_subtopology_of(&tau));
        }
    }

    #[test]
    fn stabilization_checks_never_fail_on_random_pairs((sigma, tau) in comparable_pair()) {
        let stab2 = check_theorem_stab2(&sigma, &tau).unwrap();
        prop_assert_ne!(stab2.verdict, Verdict::Fail);
        let stab3 = check_theorem_stab3(&sigma, &tau).unwrap();
        prop_assert_ne!(stab3.verdict, Verdict::Fail);
    }

    #[test]
    fn topology_json_roundtrips(t in topology()) {
        let json = serde_json::to_string(&t).unwrap();
        let back: Topology = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, t);
    }
}
