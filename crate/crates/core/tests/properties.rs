//! Randomized and exhaustive invariants of canonical forms, duality, swapping
//! and automorphism groups.

use std::sync::OnceLock;

use doppel_core::catalog::{build, Catalog};
use doppel_core::enumerate::{
    enumerate_associative, enumerate_doppels, interassociates_of, left_translations,
    semigroup_classes,
};
use doppel_core::iso::{
    apply_perm, apply_perm_doppel, automorphisms, canonical_doppel, canonical_semigroup,
    dual_doppel,
};
use doppel_core::props::interassociate_from_left_translation;
use doppel_core::{CayleyTable, DoppelTable, Exec, Permutation, SearchBudget};
use proptest::prelude::*;

fn associative(n: usize) -> &'static [CayleyTable] {
    static CACHE: OnceLock<Vec<Vec<CayleyTable>>> = OnceLock::new();
    &CACHE.get_or_init(|| {
        (0..=3)
            .map(|k| {
                if k == 0 {
                    Vec::new()
                } else {
                    enumerate_associative(k, &SearchBudget::default()).unwrap()
                }
            })
            .collect()
    })[n]
}

fn doppels(n: usize) -> &'static [DoppelTable] {
    static CACHE: OnceLock<Vec<Vec<DoppelTable>>> = OnceLock::new();
    &CACHE.get_or_init(|| {
        (0..=3)
            .map(|k| {
                if k == 0 {
                    Vec::new()
                } else {
                    enumerate_doppels(k, &SearchBudget::default(), Exec::Parallel).unwrap()
                }
            })
            .collect()
    })[n]
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn table_and_perm() -> impl Strategy<Value = (CayleyTable, Permutation)> {
    (1usize..=3).prop_flat_map(|n| {
        let len = associative(n).len();
        (0..len, permutation(n)).prop_map(move |(i, p)| (associative(n)[i].clone(), p))
    })
}

fn doppel_and_perm() -> impl Strategy<Value = (DoppelTable, Permutation)> {
    (1usize..=3).prop_flat_map(|n| {
        let len = doppels(n).len();
        (0..len, permutation(n)).prop_map(move |(i, p)| (doppels(n)[i].clone(), p))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_semigroup_is_orbit_invariant((t, p) in table_and_perm()) {
        let c = canonical_semigroup(&t);
        let moved = apply_perm(&t, &p).unwrap();
        prop_assert_eq!(&canonical_semigroup(&moved).canon, &c.canon);
        prop_assert_eq!(apply_perm(&t, &c.witness).unwrap(), c.canon);
    }

    #[test]
    fn canonical_doppel_is_orbit_invariant((d, p) in doppel_and_perm()) {
        let c = canonical_doppel(&d);
        let moved = apply_perm_doppel(&d, &p).unwrap();
        prop_assert_eq!(&canonical_doppel(&moved).canon, &c.canon);
        prop_assert_eq!(apply_perm_doppel(&d, &c.witness).unwrap(), c.canon);
    }

    #[test]
    fn automorphism_groups_are_conjugation_stable((d, p) in doppel_and_perm()) {
        let a = automorphisms(&d);
        let b = automorphisms(&apply_perm_doppel(&d, &p).unwrap());
        prop_assert_eq!(a.order(), b.order());
        prop_assert_eq!(a.label(), b.label());
        for g in a.elements() {
            let conj = p.compose(g).compose(&p.inverse());
            prop_assert!(b.contains(&conj));
        }
    }
}

#[test]
fn role_symmetry_of_the_axioms() {
    for n in 1..=3 {
        for d in doppels(n) {
            let s = d.swapped();
            assert!(doppels(n).contains(&s), "{d}");
            assert!(DoppelTable::new(s.left().clone(), s.right().clone()).is_ok());
        }
    }
}

#[test]
fn dual_and_swap_are_involutions() {
    for n in 1..=3 {
        for d in doppels(n) {
            assert_eq!(&d.dual().dual(), d);
            assert_eq!(&d.swapped().swapped(), d);
            assert_eq!(&dual_doppel(d), &d.dual());
            assert_eq!(d.dual().is_strong(), d.is_strong());
            assert_eq!(d.swapped().is_strong(), d.is_strong());
        }
    }
}

#[test]
fn left_translations_induce_interassociates() {
    let budget = SearchBudget::default();
    for class in semigroup_classes(3, &budget).unwrap() {
        let t = &class.canon;
        let int = interassociates_of(t, &budget).unwrap();
        for l in left_translations(t) {
            let b = interassociate_from_left_translation(t, &l).unwrap();
            assert!(int.contains(&b), "{t} {l:?}");
        }
    }
}

#[test]
fn automorphism_groups_are_closed() {
    for n in 1..=3 {
        for d in doppels(n) {
            let aut = automorphisms(d);
            let elems = aut.elements();
            assert!(elems.iter().any(Permutation::is_identity));
            assert_eq!(elems.len(), aut.order());
            for g in elems {
                assert!(aut.contains(&g.inverse()));
                assert_eq!(&apply_perm_doppel(d, g).unwrap(), d);
                for h in elems {
                    assert!(aut.contains(&g.compose(h)));
                }
            }
        }
    }
}

#[test]
fn catalog_entries_are_canonical() {
    for n in 1..=3 {
        for e in Catalog::for_order(n).entries() {
            assert_eq!(build(&e.name).unwrap(), e.table);
            assert_eq!(canonical_semigroup(&e.table).canon, e.canon);
        }
    }
}
