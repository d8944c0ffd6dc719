//! Exhaustive sweeps of the structural invariants over small `n`.

use std::collections::BTreeSet;

use dicyclic::automorphism::{
    are_isomorphic, enumerate_automorphisms_bruteforce, enumerate_rs_automorphisms, inner_from,
    isomorphy_classes,
};
use dicyclic::group::{cayley_table, center};
use dicyclic::oracle::{
    aut_conjugacy_classes, conjugator_search, pointwise_order, pointwise_power_is_identity,
};
use dicyclic::space::{coset_bijection_check, fixed_point_group, generalized_symmetric_space};
use dicyclic::{Automorphism, GroupMap, GroupParams, HolomorphElement, RsAutomorphism};

fn dc(n: i64) -> GroupParams {
    GroupParams::new(n).unwrap()
}

#[test]
fn cayley_tables_are_groups() {
    for n in 2..=8 {
        let table = cayley_table(dc(n));
        assert_eq!(table.order(), 4 * n as usize);
        assert!(table.is_latin_square());
        assert_eq!(table.associativity_counterexample(), None);
        assert!(!table.is_abelian());
        // rebuilding through the validating constructor succeeds
        let rows = (0..table.order()).map(|i| table.row(i).to_vec()).collect();
        assert!(dicyclic::GroupTable::new(table.labels().to_vec(), rows, 0).is_ok());
    }
}

#[test]
fn rotation_subgroup_is_normal_in_table() {
    let p = dc(3);
    let t = cayley_table(p);
    let rotations: BTreeSet<usize> = (0..6).collect();
    for g in 0..t.order() {
        for &k in &rotations {
            let conj = t.mul(t.mul(g, k), t.inverse(g));
            assert!(rotations.contains(&conj));
        }
    }
}

#[test]
fn center_is_commutant_up_to_twenty() {
    for n in 2..=20 {
        let p = dc(n);
        let t = cayley_table(p);
        let brute: BTreeSet<_> = (0..t.order())
            .filter(|&i| (0..t.order()).all(|j| t.mul(i, j) == t.mul(j, i)))
            .map(|i| p.element_at(i))
            .collect();
        assert_eq!(center(p), brute);
    }
}

#[test]
fn composition_coherence_exhaustive() {
    for n in 2..=8 {
        let p = dc(n);
        let all = enumerate_rs_automorphisms(p);
        let tables: Vec<_> = all.iter().map(RsAutomorphism::to_table).collect();
        for (phi, phi_t) in all.iter().zip(&tables) {
            for (psi, psi_t) in all.iter().zip(&tables) {
                let c = phi.compose(psi).unwrap();
                assert_eq!(c.to_table(), phi_t.compose(psi_t).unwrap(), "{phi} o {psi}");
            }
            assert!(phi.compose(&phi.invert()).unwrap().is_identity());
        }
    }
}

#[test]
fn order_criterion_matches_pointwise_powers() {
    for n in 2..=8 {
        for phi in enumerate_rs_automorphisms(dc(n)) {
            for k in 1..=2 * n {
                assert_eq!(
                    phi.order_divides(k).unwrap(),
                    pointwise_power_is_identity(&phi, k as u64),
                    "{phi} k={k}"
                );
            }
        }
    }
}

#[test]
fn involution_criterion_matches_exact_order() {
    for n in 2..=12 {
        for phi in enumerate_rs_automorphisms(dc(n)) {
            assert_eq!(phi.exact_order(), pointwise_order(&phi));
            assert_eq!(phi.is_involution(), phi.exact_order() == 2, "{phi}");
        }
    }
}

#[test]
fn exact_order_divides_aut_order() {
    for n in 3..=10 {
        let p = dc(n);
        let total = dicyclic::automorphism::aut_order(p);
        for phi in enumerate_rs_automorphisms(p) {
            assert_eq!(total % phi.exact_order(), 0);
        }
    }
}

#[test]
fn inner_criterion_matches_conjugator_search() {
    for n in 2..=10 {
        for phi in enumerate_rs_automorphisms(dc(n)) {
            let found = conjugator_search(&phi);
            assert_eq!(phi.is_inner(), found.is_some(), "{phi}");
            if let Some(g) = phi.inner_conjugator() {
                assert_eq!(inner_from(&g), phi);
            }
        }
    }
}

#[test]
fn isomorphy_matches_conjugacy() {
    for n in 3..=10 {
        let p = dc(n);
        let rs = enumerate_rs_automorphisms(p);
        let tables: Vec<_> = rs.iter().map(RsAutomorphism::to_table).collect();
        let conj: BTreeSet<Vec<RsAutomorphism>> = aut_conjugacy_classes(&tables)
            .unwrap()
            .into_iter()
            .map(|class| class.into_iter().map(|i| rs[i]).collect())
            .collect();
        let iso: BTreeSet<Vec<RsAutomorphism>> =
            isomorphy_classes(p).unwrap().into_iter().collect();
        assert_eq!(conj, iso, "n={n}");
    }
}

#[test]
fn isomorphy_is_an_equivalence_relation() {
    let p = dc(6);
    let all = enumerate_rs_automorphisms(p);
    let related = |a: &RsAutomorphism, b: &RsAutomorphism| are_isomorphic(a, b).unwrap().is_some();
    for a in &all {
        assert!(related(a, a));
        for b in &all {
            let ab = related(a, b);
            assert_eq!(ab, related(b, a));
            if let Some(w) = are_isomorphic(a, b).unwrap() {
                assert!(w.verify(a, b));
            }
            if ab {
                for c in all.iter().step_by(3) {
                    if related(b, c) {
                        assert!(related(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn parametrization_is_complete_for_n_above_two() {
    for n in 3..=8 {
        let p = dc(n);
        let brute: BTreeSet<_> = enumerate_automorphisms_bruteforce(p)
            .into_iter()
            .map(|t| t.images())
            .collect();
        let family: BTreeSet<_> = enumerate_rs_automorphisms(p)
            .iter()
            .map(|phi| phi.images())
            .collect();
        assert_eq!(brute, family);
    }
    assert_eq!(enumerate_automorphisms_bruteforce(dc(4)).len(), 32);
}

#[test]
fn holomorph_axioms() {
    let p = dc(4);
    let autos: Vec<_> = enumerate_rs_automorphisms(p)
        .into_iter()
        .step_by(5)
        .collect();
    let elems: Vec<_> = p.elements().step_by(3).collect();
    let pairs: Vec<_> = autos
        .iter()
        .flat_map(|phi| {
            elems
                .iter()
                .map(move |g| HolomorphElement::new(*phi, *g).unwrap())
        })
        .collect();
    for a in pairs.iter().step_by(4) {
        for b in pairs.iter().step_by(5) {
            for c in pairs.iter().step_by(7) {
                let left = a.compose(b).unwrap().compose(c).unwrap();
                let right = a.compose(&b.compose(c).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
        assert_eq!(
            a.compose(&a.inverse()).unwrap(),
            HolomorphElement::identity(p)
        );
    }
}

#[test]
fn coset_law_for_involutions() {
    for n in 2..=12 {
        let p = dc(n);
        for phi in enumerate_rs_automorphisms(p) {
            if !phi.is_involution() {
                continue;
            }
            let phi = Automorphism::Rs(phi);
            assert!(coset_bijection_check(&phi).unwrap(), "{phi}");
            let size = generalized_symmetric_space(&phi).len() * fixed_point_group(&phi).len();
            assert_eq!(size, p.order());
        }
    }
}

#[test]
fn fixed_point_groups_are_subgroups() {
    for n in 2..=10 {
        for phi in enumerate_rs_automorphisms(dc(n)) {
            let h = fixed_point_group(&Automorphism::Rs(phi));
            for a in &h {
                for b in &h {
                    assert!(h.contains(&(*a * b.inverse())));
                }
            }
            assert!(generalized_symmetric_space(&Automorphism::Rs(phi))
                .iter()
                .all(|q| q.is_rotation()));
        }
    }
}
