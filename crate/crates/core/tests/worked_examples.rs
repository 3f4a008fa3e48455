//! Small worked examples for each layer, from table predicates up to named
//! doppelsemigroups.

use doppel_core::catalog::{
    adjoin_zero, build, doppel_adjoin_zero, doppel_name, left_zero_tilde0, NameStyle,
};
use doppel_core::enumerate::{
    interassociates_of, left_translations, semigroup_classes, strong_interassociates_of,
};
use doppel_core::iso::{
    apply_perm, are_anti_isomorphic, are_isomorphic, automorphisms, canonical_doppel,
    canonical_semigroup, dual_doppel,
};
use doppel_core::props::{
    interassociate_from_left_translation, is_inflation, is_interassociative, is_left_translation,
    is_strong_pair, monogenic_params, structural_probe, variant, zero,
};
use doppel_core::{CayleyTable, DoppelTable, ModelName, Permutation, SearchBudget, SelfMap};

fn named(s: &str) -> CayleyTable {
    build(&s.parse::<ModelName>().unwrap()).unwrap()
}

fn z(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |x, y| (x + y) % n)
}

fn l2() -> CayleyTable {
    CayleyTable::from_fn(2, |x, y| x.min(y))
}

fn dop(l: &CayleyTable, r: &CayleyTable) -> DoppelTable {
    DoppelTable::new(l.clone(), r.clone()).unwrap()
}

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn ascii_name(d: &DoppelTable) -> String {
    doppel_name(d, &budget()).unwrap().render(NameStyle::Ascii)
}

#[test]
fn associativity_and_commutativity() {
    assert!(l2().is_associative());
    let bad = CayleyTable::new(2, vec![1, 0, 0, 0]).unwrap();
    assert!(!bad.is_associative());
    assert!(z(3).is_commutative());
    assert!(!named("LO{2}").is_commutative());
}

#[test]
fn interassociativity_and_strongness() {
    let o2 = CayleyTable::null(2, 0);
    assert!(is_interassociative(&o2, &l2()).unwrap());
    for t in semigroup_classes(3, &budget()).unwrap() {
        let t = t.canon;
        assert!(is_interassociative(&t, &t).unwrap());
        assert!(is_strong_pair(&t, &t).unwrap());
        if let Some(zz) = zero(&t) {
            assert!(is_strong_pair(&CayleyTable::null(3, zz), &t).unwrap());
        }
    }
    let a = left_zero_tilde0(2, &[true, false]);
    let b = left_zero_tilde0(2, &[false, true]);
    assert!(is_interassociative(&a, &b).unwrap());
    assert!(!is_strong_pair(&a, &b).unwrap());
}

#[test]
fn duals() {
    assert_eq!(named("LO{2}").dual(), named("RO{2}"));
    assert_eq!(z(3).dual(), z(3));
    let t = named("LOB{3}");
    assert_eq!(t.dual().dual(), t);
}

#[test]
fn structural_probes() {
    let l3 = named("L{3}");
    let p = structural_probe(&l3);
    assert_eq!(
        (p.zero, p.identity, p.is_semilattice),
        (Some(0), Some(2), true)
    );
    let p = structural_probe(&named("LO{3}"));
    assert_eq!((p.zero, p.identity), (None, None));
    assert_eq!(p.left_zeros, vec![0, 1, 2]);
    assert!(p.is_rectangular_band);
    let p = structural_probe(&named("O{3,1}"));
    assert!(p.zero.is_some());
    assert_eq!(
        p.idempotents.iter().filter(|&&e| Some(e) != p.zero).count(),
        1
    );
}

#[test]
fn monogenic_parameters() {
    let p = monogenic_params(&named("M{2,2}")).unwrap();
    assert_eq!((p.index, p.period), (2, 2));
    let p = monogenic_params(&named("M{3,1}")).unwrap();
    assert_eq!((p.index, p.period), (3, 1));
    assert_eq!(monogenic_params(&l2()), None);
}

#[test]
fn variants() {
    let m = named("C{2}+1");
    assert_eq!(variant(&m, 2).unwrap(), m);
    assert_eq!(
        variant(&z(3), 1).unwrap(),
        CayleyTable::from_fn(3, |x, y| (x + y + 1) % 3)
    );
    assert_eq!(variant(&l2(), 0).unwrap(), CayleyTable::null(2, 0));
}

#[test]
fn left_translations_and_their_interassociates() {
    let o2p0 = named("O{2}+0");
    assert!(is_left_translation(&o2p0, &SelfMap::identity(3)));
    let to_zero = SelfMap::constant(3, 2);
    assert!(is_left_translation(&o2p0, &to_zero));
    assert_eq!(
        interassociate_from_left_translation(&o2p0, &to_zero).unwrap(),
        CayleyTable::null(3, 2)
    );
    assert_eq!(
        interassociate_from_left_translation(&o2p0, &SelfMap::identity(3)).unwrap(),
        o2p0
    );
    // On the semilattice {0, z} (min with 0 absorbing) swapping is not one.
    assert!(!is_left_translation(
        &l2(),
        &SelfMap::new(2, vec![1, 0]).unwrap()
    ));
    assert_eq!(
        left_translations(&l2()),
        vec![SelfMap::constant(2, 0), SelfMap::identity(2)]
    );
    // In O_X^A on A ∪ {z} the translations are x ↦ x on B ⊆ A, z elsewhere.
    let oa = named("O{3,2}");
    let expected: Vec<SelfMap> = (0..4usize)
        .map(|mask| {
            SelfMap::new(
                3,
                (0..3)
                    .map(|x| if x < 2 && mask >> x & 1 == 1 { x } else { 2 })
                    .collect(),
            )
            .unwrap()
        })
        .collect();
    let mut got = left_translations(&oa);
    got.sort_by_key(|l| l.image().to_vec());
    let mut expected = expected;
    expected.sort_by_key(|l| l.image().to_vec());
    assert_eq!(got, expected);
    // In a monoid every left multiplication is a left translation, and it
    // induces the variant.
    for m in ["C{3}", "C{2}+1", "L{3}", "LO{2}+1"] {
        let t = named(m);
        let all = left_translations(&t);
        for a in t.elements() {
            let l = SelfMap::new(3, (0..3).map(|y| t.get(a, y)).collect()).unwrap();
            assert!(all.contains(&l), "{m}");
            assert_eq!(
                interassociate_from_left_translation(&t, &l).unwrap(),
                variant(&t, a).unwrap()
            );
        }
    }
}

#[test]
fn inflations() {
    let c2t = named("C{2}~1");
    assert!(is_inflation(
        &c2t,
        &[0, 1],
        &SelfMap::new(3, vec![0, 1, 0]).unwrap()
    ));
    let o2p0 = named("O{2}+0");
    assert!(is_inflation(
        &o2p0,
        &[1, 2],
        &SelfMap::new(3, vec![1, 1, 2]).unwrap()
    ));
    assert!(is_inflation(&z(3), &[0, 1, 2], &SelfMap::identity(3)));
}

#[test]
fn relabeling() {
    let p = Permutation::new(vec![1, 0]).unwrap();
    assert_eq!(apply_perm(&l2(), &Permutation::identity(2)).unwrap(), l2());
    assert_eq!(apply_perm(&named("LO{2}"), &p).unwrap(), named("LO{2}"));
    assert_ne!(apply_perm(&l2(), &p).unwrap(), l2());
    let one = CayleyTable::from_fn(1, |_, _| 0);
    assert_eq!(canonical_semigroup(&one).canon, one);
}

#[test]
fn canonical_doppels() {
    let t = named("LO{3}");
    let d = canonical_doppel(&dop(&t, &t)).canon;
    let ct = canonical_semigroup(&t).canon;
    assert_eq!(d, dop(&ct, &ct));

    let lo = named("LO{2}+0");
    let a = left_zero_tilde0(2, &[true, false]);
    let b = left_zero_tilde0(2, &[false, true]);
    assert_eq!(
        canonical_doppel(&dop(&lo, &a)).canon,
        canonical_doppel(&dop(&lo, &b)).canon
    );

    let c2 = z(2);
    assert_ne!(
        canonical_doppel(&dop(&c2, &variant(&c2, 1).unwrap())).canon,
        canonical_doppel(&dop(&c2, &c2)).canon
    );
}

#[test]
fn doppel_isomorphism() {
    let c3 = z(3);
    assert!(are_isomorphic(
        &dop(&c3, &variant(&c3, 1).unwrap()),
        &dop(&c3, &variant(&c3, 2).unwrap())
    ));
    let o31 = named("O{3,1}");
    let other = CayleyTable::from_fn(3, |x, y| if x == y && x == 1 { 1 } else { 2 });
    assert!(!are_isomorphic(&dop(&o31, &o31), &dop(&o31, &other)));
    assert_eq!(ascii_name(&dop(&o31, &other)), "O{3,1}><O{3,1}#2");
}

#[test]
fn automorphism_groups() {
    let aut = automorphisms(&named("LO{3}"));
    assert_eq!((aut.order(), aut.label().as_str()), (6, "S_3"));
    assert_eq!(automorphisms(&z(3)).label().as_str(), "C_2");
    let c3 = z(3);
    assert_eq!(
        automorphisms(&dop(&c3, &variant(&c3, 2).unwrap())).order(),
        1
    );
}

#[test]
fn dual_doppels() {
    let o3 = named("O{3}");
    let d = dop(&named("LO{2}+0"), &o3);
    let expected = dop(&named("RO{2}+0"), &o3);
    assert!(are_isomorphic(&dual_doppel(&d), &expected));
    let c = dop(&z(3), &variant(&z(3), 1).unwrap());
    assert!(are_isomorphic(&dual_doppel(&c), &c));
    assert_eq!(dual_doppel(&dual_doppel(&d)), d);
}

#[test]
fn anti_isomorphism() {
    assert!(are_anti_isomorphic(&named("LO{3}"), &named("RO{3}")));
    assert!(are_anti_isomorphic(&named("L{3}"), &named("L{3}")));
    assert!(!are_anti_isomorphic(
        &named("LOB{3}"),
        &named("LOarrow{2,3}")
    ));
}

#[test]
fn interassociate_sets() {
    assert_eq!(
        interassociates_of(&named("M{2,2}"), &budget())
            .unwrap()
            .len(),
        3
    );
    let lo3 = named("LO{3}");
    assert_eq!(
        interassociates_of(&lo3, &budget()).unwrap(),
        vec![lo3.clone()]
    );
    let mut got = interassociates_of(&named("LO{2}+0"), &budget()).unwrap();
    let mut expected: Vec<CayleyTable> =
        [[false, false], [true, false], [false, true], [true, true]]
            .iter()
            .map(|a| left_zero_tilde0(2, a))
            .collect();
    got.sort();
    expected.sort();
    assert_eq!(got, expected);
}

#[test]
fn strong_interassociate_sets() {
    let o2p0 = named("O{2}+0");
    assert_eq!(
        strong_interassociates_of(&o2p0, &budget()).unwrap(),
        interassociates_of(&o2p0, &budget()).unwrap()
    );
    let lo = named("LO{2}+1");
    let all = interassociates_of(&lo, &budget()).unwrap();
    let strong = strong_interassociates_of(&lo, &budget()).unwrap();
    assert_eq!((all.len(), strong.len()), (3, 1));
    assert_eq!(strong, vec![lo.clone()]);
    for t in semigroup_classes(3, &budget()).unwrap() {
        assert!(strong_interassociates_of(&t.canon, &budget())
            .unwrap()
            .contains(&t.canon));
    }
}

#[test]
fn adjoined_zero_doppels() {
    let o2 = CayleyTable::null(2, 0);
    let d = doppel_adjoin_zero(&dop(&l2(), &o2));
    assert_eq!(ascii_name(&d), "L{3}><O{2}+0");
    assert!(are_isomorphic(d.left(), &named("L{3}")));

    let c2 = z(2);
    let d = doppel_adjoin_zero(&dop(&c2, &variant(&c2, 1).unwrap()));
    assert_eq!(ascii_name(&d), "C{2}+0><C{2}+0#2");
    assert!(are_isomorphic(
        d.right(),
        &adjoin_zero(&variant(&c2, 1).unwrap())
    ));
}

#[test]
fn adjoining_zero_preserves_automorphisms() {
    for d in doppel_core::enumerate_doppels(2, &budget(), Default::default()).unwrap() {
        let a = automorphisms(&d);
        let b = automorphisms(&doppel_adjoin_zero(&d));
        assert_eq!((a.order(), a.label()), (b.order(), b.label()), "{d}");
    }
}

#[test]
fn doppel_names() {
    let lo3 = named("LO{3}");
    assert_eq!(ascii_name(&dop(&lo3, &lo3)), "LO{3}");
    let o3 = CayleyTable::null(3, 0);
    let l3 = CayleyTable::from_fn(3, |x, y| x.min(y));
    let d = dop(&o3, &l3);
    assert_eq!(ascii_name(&d), "O{3}><L{3}");
    assert_eq!(doppel_name(&d, &budget()).unwrap().to_string(), "O{3}⋈L{3}");
}
