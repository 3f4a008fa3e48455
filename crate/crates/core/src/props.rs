//! Axiom and structure predicates on Cayley tables, plus the derived
//! constructions (variants, translations) that stay on the same carrier.
//!
//! Every check here is an exhaustive loop over pairs or triples. Orders of
//! interest are at most six, so there is nothing to gain from anything
//! smarter.

use crate::error::{Error, Result};
use crate::table::{CayleyTable, Element, SelfMap};

pub fn is_associative(t: &CayleyTable) -> bool {
    let n = t.order();
    for x in 0..n {
        for y in 0..n {
            let xy = t.get(x, y);
            for z in 0..n {
                if t.get(xy, z) != t.get(x, t.get(y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_commutative(t: &CayleyTable) -> bool {
    let n = t.order();
    (0..n).all(|x| (x + 1..n).all(|y| t.get(x, y) == t.get(y, x)))
}

/// `(x ⊣ y) ⊢ z = x ⊣ (y ⊢ z)` with `⊣ = left`, `⊢ = right`.
pub(crate) fn satisfies_d1(left: &CayleyTable, right: &CayleyTable) -> bool {
    let n = left.order();
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| right.get(left.get(x, y), z) == left.get(x, right.get(y, z))))
    })
}

/// `(x ⊢ y) ⊣ z = x ⊢ (y ⊣ z)` with `⊣ = left`, `⊢ = right`.
pub(crate) fn satisfies_d2(left: &CayleyTable, right: &CayleyTable) -> bool {
    let n = left.order();
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| left.get(right.get(x, y), z) == right.get(x, left.get(y, z))))
    })
}

fn same_order(a: &CayleyTable, b: &CayleyTable) -> Result<()> {
    if a.order() == b.order() {
        Ok(())
    } else {
        Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        })
    }
}

/// Whether `b` is an interassociate of `a`: both mixed associativity
/// axioms hold with `⊣ = a` and `⊢ = b`.
///
/// Associativity of the components is not checked here; for a single
/// table, `is_interassociative(t, t)` reduces to associativity of `t`.
pub fn is_interassociative(a: &CayleyTable, b: &CayleyTable) -> Result<bool> {
    same_order(a, b)?;
    Ok(satisfies_d1(a, b) && satisfies_d2(a, b))
}

/// The strong axiom `x ⊣ (y ⊢ z) = x ⊢ (y ⊣ z)`.
pub fn is_strong_pair(a: &CayleyTable, b: &CayleyTable) -> Result<bool> {
    same_order(a, b)?;
    let n = a.order();
    Ok((0..n)
        .all(|x| (0..n).all(|y| (0..n).all(|z| a.get(x, b.get(y, z)) == b.get(x, a.get(y, z))))))
}

pub fn dual(t: &CayleyTable) -> CayleyTable {
    t.dual()
}

/// Definitional structure of a semigroup table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probe {
    pub zero: Option<Element>,
    pub identity: Option<Element>,
    pub left_zeros: Vec<Element>,
    pub right_zeros: Vec<Element>,
    pub idempotents: Vec<Element>,
    pub is_band: bool,
    pub is_semilattice: bool,
    pub is_rectangular_band: bool,
}

pub fn structural_probe(t: &CayleyTable) -> Probe {
    let n = t.order();
    let left_zeros: Vec<_> = t
        .elements()
        .filter(|&z| (0..n).all(|a| t.get(z, a) == z))
        .collect();
    let right_zeros: Vec<_> = t
        .elements()
        .filter(|&z| (0..n).all(|a| t.get(a, z) == z))
        .collect();
    let zeros: Vec<_> = left_zeros
        .iter()
        .copied()
        .filter(|z| right_zeros.contains(z))
        .collect();
    let identities: Vec<_> = t
        .elements()
        .filter(|&e| (0..n).all(|a| t.get(e, a) == a && t.get(a, e) == a))
        .collect();
    // A two-sided zero or identity is unique in any magma.
    assert!(zeros.len() <= 1, "table {t} has several zeros");
    assert!(identities.len() <= 1, "table {t} has several identities");

    let idempotents: Vec<_> = t.elements().filter(|&e| t.get(e, e) == e).collect();
    let is_band = idempotents.len() == n;
    let is_semilattice = is_band && is_commutative(t);
    let is_rectangular_band = is_band && (0..n).all(|x| (0..n).all(|y| t.get(t.get(x, y), x) == x));
    Probe {
        zero: zeros.first().copied(),
        identity: identities.first().copied(),
        left_zeros,
        right_zeros,
        idempotents,
        is_band,
        is_semilattice,
        is_rectangular_band,
    }
}

pub fn zero(t: &CayleyTable) -> Option<Element> {
    let n = t.order();
    t.elements()
        .find(|&z| (0..n).all(|a| t.get(z, a) == z && t.get(a, z) == z))
}

pub fn identity(t: &CayleyTable) -> Option<Element> {
    let n = t.order();
    t.elements()
        .find(|&e| (0..n).all(|a| t.get(e, a) == a && t.get(a, e) == a))
}

pub fn is_null(t: &CayleyTable) -> bool {
    let first = t.get(0, 0);
    t.entries().all(|e| e == first)
}

/// Index and period of a monogenic semigroup, with its least generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonogenicParams {
    pub index: usize,
    pub period: usize,
    pub generator: Element,
}

/// Finds the least element whose powers exhaust the carrier.
pub fn monogenic_params(t: &CayleyTable) -> Option<MonogenicParams> {
    let n = t.order();
    for g in t.elements() {
        // powers[k] = g^(k+1)
        let mut powers = vec![g];
        let mut seen_at = vec![usize::MAX; n];
        seen_at[g] = 0;
        loop {
            let next = t.get(*powers.last().unwrap(), g);
            if seen_at[next] != usize::MAX {
                if powers.len() == n {
                    let index = seen_at[next] + 1;
                    let period = powers.len() + 1 - index;
                    return Some(MonogenicParams {
                        index,
                        period,
                        generator: g,
                    });
                }
                break;
            }
            seen_at[next] = powers.len();
            powers.push(next);
        }
    }
    None
}

/// The sandwich operation `x ⊢ y = x ⊣ a ⊣ y`.
pub fn variant(t: &CayleyTable, a: Element) -> Result<CayleyTable> {
    t.check_element(a)?;
    Ok(CayleyTable::from_fn(t.order(), |x, y| {
        t.get(t.get(x, a), y)
    }))
}

/// `l(x ∘ y) = l(x) ∘ y` for all `x, y`.
pub fn is_left_translation(t: &CayleyTable, l: &SelfMap) -> bool {
    let n = t.order();
    l.order() == n && (0..n).all(|x| (0..n).all(|y| l.apply(t.get(x, y)) == t.get(l.apply(x), y)))
}

/// The interassociate `x ∘ₗ y = x ∘ l(y)` induced by a left translation.
pub fn interassociate_from_left_translation(t: &CayleyTable, l: &SelfMap) -> Result<CayleyTable> {
    if !is_left_translation(t, l) {
        return Err(Error::NotLeftTranslation);
    }
    Ok(CayleyTable::from_fn(t.order(), |x, y| t.get(x, l.apply(y))))
}

/// Whether `t` is an inflation of its subsemigroup `sub` with associated
/// map `r`: `r` is an idempotent retraction onto `sub` and
/// `r(a) r(b) = ab` everywhere.
pub fn is_inflation(t: &CayleyTable, sub: &[Element], r: &SelfMap) -> bool {
    let n = t.order();
    if r.order() != n || sub.is_empty() || sub.iter().any(|&s| s >= n) {
        return false;
    }
    let mut in_sub = vec![false; n];
    for &s in sub {
        in_sub[s] = true;
    }
    let image_in_sub = (0..n).all(|x| in_sub[r.apply(x)]);
    let fixes_sub = sub.iter().all(|&s| r.apply(s) == s);
    let idempotent = (0..n).all(|x| r.apply(r.apply(x)) == r.apply(x));
    image_in_sub
        && fixes_sub
        && idempotent
        && (0..n).all(|a| (0..n).all(|b| t.get(r.apply(a), r.apply(b)) == t.get(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn min_table(n: usize) -> CayleyTable {
        CayleyTable::from_fn(n, |x, y| x.min(y))
    }

    fn zn(n: usize) -> CayleyTable {
        CayleyTable::from_fn(n, |x, y| (x + y) % n)
    }

    /// Brute-force associativity over every table of order `n`, counted
    /// without reference to `is_associative`.
    fn count_associative_by_hand(n: usize) -> usize {
        let cells = n * n;
        let total = n.pow(cells as u32);
        let mut count = 0;
        let mut e = vec![0usize; cells];
        for code in 0..total {
            let mut c = code;
            for slot in e.iter_mut() {
                *slot = c % n;
                c /= n;
            }
            let ok = (0..n).all(|x| {
                (0..n).all(|y| (0..n).all(|z| e[e[x * n + y] * n + z] == e[x * n + e[y * n + z]]))
            });
            count += ok as usize;
        }
        count
    }

    #[test]
    fn associativity_examples() {
        assert!(is_associative(&min_table(2)));
        // 0*0 = 1, else 0: (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*0 = 1.
        let t = CayleyTable::new(2, vec![1, 0, 0, 0]).unwrap();
        assert!(!is_associative(&t));
        assert_eq!(count_associative_by_hand(2), 8);
    }

    #[test]
    fn commutativity_examples() {
        assert!(is_commutative(&zn(3)));
        assert!(!is_commutative(&CayleyTable::from_fn(2, |x, _| x)));
    }

    #[test]
    fn null_is_strong_interassociate_of_same_zero() {
        let o2 = CayleyTable::null(2, 0);
        let l2 = min_table(2);
        assert!(is_interassociative(&o2, &l2).unwrap());
        assert!(is_interassociative(&l2, &o2).unwrap());
        assert!(is_strong_pair(&o2, &l2).unwrap());
        assert!(is_interassociative(&l2, &l2).unwrap());
        assert!(is_strong_pair(&l2, &l2).unwrap());
        assert!(is_interassociative(&o2, &zn(3)).is_err());
    }

    #[test]
    fn probe_examples() {
        let p = structural_probe(&min_table(3));
        assert_eq!(p.zero, Some(0));
        assert_eq!(p.identity, Some(2));
        assert!(p.is_semilattice && p.is_band);
        assert!(!p.is_rectangular_band);

        let lo3 = CayleyTable::from_fn(3, |x, _| x);
        let p = structural_probe(&lo3);
        assert_eq!((p.zero, p.identity), (None, None));
        assert_eq!(p.left_zeros, vec![0, 1, 2]);
        assert!(p.right_zeros.is_empty());
        assert!(p.is_rectangular_band);

        let q = structural_probe(&lo3.dual());
        assert_eq!(q.right_zeros, p.left_zeros);
        assert_eq!(q.left_zeros, p.right_zeros);
    }

    #[test]
    fn monogenic_examples() {
        // L_2 has no single generator: powers of 0 stay at 0, powers of 1 stay at 1.
        assert_eq!(monogenic_params(&min_table(2)), None);
        let c3 = monogenic_params(&zn(3)).unwrap();
        assert_eq!((c3.index, c3.period, c3.generator), (1, 3, 1));
    }

    #[test]
    fn variant_examples() {
        let z3 = zn(3);
        assert_eq!(variant(&z3, 0).unwrap(), z3);
        let shifted = CayleyTable::from_fn(3, |x, y| (x + y + 1) % 3);
        assert_eq!(variant(&z3, 1).unwrap(), shifted);
        assert_eq!(variant(&min_table(2), 0).unwrap(), CayleyTable::null(2, 0));
        assert!(variant(&z3, 3).is_err());
    }

    #[test]
    fn left_translation_examples() {
        let l2 = min_table(2);
        assert!(is_left_translation(&l2, &SelfMap::identity(2)));
        assert!(is_left_translation(&l2, &SelfMap::constant(2, 0)));
        let swap = SelfMap::new(2, vec![1, 0]).unwrap();
        assert!(!is_left_translation(&l2, &swap));
        assert_eq!(
            interassociate_from_left_translation(&l2, &SelfMap::constant(2, 0)).unwrap(),
            CayleyTable::null(2, 0)
        );
        assert_eq!(
            interassociate_from_left_translation(&l2, &SelfMap::identity(2)).unwrap(),
            l2
        );
        assert_eq!(
            interassociate_from_left_translation(&l2, &swap),
            Err(Error::NotLeftTranslation)
        );
    }

    #[test]
    fn left_multiplication_gives_variant_on_monoid() {
        let z3 = zn(3);
        for a in 0..3 {
            let l = SelfMap::new(3, (0..3).map(|y| z3.get(a, y)).collect()).unwrap();
            assert_eq!(
                interassociate_from_left_translation(&z3, &l).unwrap(),
                variant(&z3, a).unwrap()
            );
        }
    }

    #[test]
    fn inflation_trivial_case() {
        let t = zn(3);
        assert!(is_inflation(&t, &[0, 1, 2], &SelfMap::identity(3)));
        assert!(!is_inflation(&t, &[0], &SelfMap::constant(3, 0)));
    }
}
