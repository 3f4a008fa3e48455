//! Relabeling of tables by permutations, canonical forms, isomorphism tests
//! and automorphism groups.
//!
//! The canonical form of a table is the lexicographically least entry
//! sequence over its whole permutation orbit, found by scanning all `n!`
//! relabelings. For a doppel the two components are relabeled by the same
//! permutation and compared as the concatenation `left ++ right`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{all_permutations, Permutation};
use crate::table::{CayleyTable, DoppelTable};

/// Relabels `t` by `p`: `result[p(i), p(j)] = p(t[i, j])`.
pub fn apply_perm(t: &CayleyTable, p: &Permutation) -> Result<CayleyTable> {
    if t.order() != p.order() {
        return Err(Error::OrderMismatch {
            left: t.order(),
            right: p.order(),
        });
    }
    let mut out = vec![0u8; t.order() * t.order()];
    relabel_into(t.bytes(), t.order(), p, &mut out);
    Ok(CayleyTable::from_bytes(t.order(), out))
}

pub fn apply_perm_doppel(d: &DoppelTable, p: &Permutation) -> Result<DoppelTable> {
    Ok(DoppelTable::new_unchecked(
        apply_perm(d.left(), p)?,
        apply_perm(d.right(), p)?,
    ))
}

fn relabel_into(src: &[u8], n: usize, p: &Permutation, out: &mut [u8]) {
    for i in 0..n {
        let pi = p.apply(i);
        for j in 0..n {
            out[pi * n + p.apply(j)] = p.apply(src[i * n + j] as usize) as u8;
        }
    }
}

/// An orbit representative together with a permutation carrying the input
/// onto it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm<T> {
    pub canon: T,
    pub witness: Permutation,
}

impl<T: fmt::Display> fmt::Display for CanonicalForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} perm={}", self.canon, self.witness)
    }
}

impl<T: fmt::Display> fmt::Debug for CanonicalForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({self})")
    }
}

/// Scans every relabeling of the concatenated byte tables and keeps the
/// least. Ties resolve to the first permutation in lexicographic order.
fn minimize(tables: &[&[u8]], n: usize) -> (Vec<Vec<u8>>, Permutation) {
    let perms = all_permutations(n);
    let cells = n * n;
    let mut best: Vec<u8> = tables.iter().flat_map(|t| t.iter().copied()).collect();
    let mut best_perm = perms[0].clone();
    let mut buf = vec![0u8; cells * tables.len()];
    for p in &perms[1..] {
        for (k, t) in tables.iter().enumerate() {
            relabel_into(t, n, p, &mut buf[k * cells..(k + 1) * cells]);
        }
        if buf < best {
            std::mem::swap(&mut best, &mut buf);
            best_perm = p.clone();
        }
    }
    let parts = best.chunks(cells).map(<[u8]>::to_vec).collect();
    (parts, best_perm)
}

pub fn canonical_semigroup(t: &CayleyTable) -> CanonicalForm<CayleyTable> {
    let n = t.order();
    let (mut parts, witness) = minimize(&[t.bytes()], n);
    CanonicalForm {
        canon: CayleyTable::from_bytes(n, parts.remove(0)),
        witness,
    }
}

pub fn canonical_doppel(d: &DoppelTable) -> CanonicalForm<DoppelTable> {
    let n = d.order();
    let (mut parts, witness) = minimize(&[d.left().bytes(), d.right().bytes()], n);
    let right = CayleyTable::from_bytes(n, parts.pop().unwrap());
    let left = CayleyTable::from_bytes(n, parts.pop().unwrap());
    CanonicalForm {
        canon: DoppelTable::new_unchecked(left, right),
        witness,
    }
}

/// Objects that permutations act on: single tables and doppels.
pub trait Relabel: Sized + Clone + Eq {
    fn order(&self) -> usize;
    fn relabel(&self, p: &Permutation) -> Self;
    fn canonical(&self) -> CanonicalForm<Self>;
}

impl Relabel for CayleyTable {
    fn order(&self) -> usize {
        CayleyTable::order(self)
    }
    fn relabel(&self, p: &Permutation) -> Self {
        apply_perm(self, p).expect("orders checked by caller")
    }
    fn canonical(&self) -> CanonicalForm<Self> {
        canonical_semigroup(self)
    }
}

impl Relabel for DoppelTable {
    fn order(&self) -> usize {
        DoppelTable::order(self)
    }
    fn relabel(&self, p: &Permutation) -> Self {
        apply_perm_doppel(self, p).expect("orders checked by caller")
    }
    fn canonical(&self) -> CanonicalForm<Self> {
        canonical_doppel(self)
    }
}

/// Equality of canonical forms; values of different orders are never
/// isomorphic.
pub fn are_isomorphic<T: Relabel>(a: &T, b: &T) -> bool {
    a.order() == b.order() && a.canonical().canon == b.canonical().canon
}

/// A permutation `p` with `relabel(a, p) = b`, if any.
pub fn find_isomorphism<T: Relabel>(a: &T, b: &T) -> Option<Permutation> {
    if a.order() != b.order() {
        return None;
    }
    all_permutations(a.order())
        .iter()
        .find(|p| a.relabel(p) == *b)
        .cloned()
}

/// Whether `b` is isomorphic to the dual of `a`.
pub fn are_anti_isomorphic(a: &CayleyTable, b: &CayleyTable) -> bool {
    are_isomorphic(&a.dual(), b)
}

pub fn dual_doppel(d: &DoppelTable) -> DoppelTable {
    d.dual()
}

/// Isomorphism type of a small group, identified from its order and the
/// multiset of its element orders. That pair separates all groups of order
/// at most 12; larger groups get a generic `order-k` label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupLabel(String);

impl GroupLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn from_element_orders(orders: &[usize]) -> Self {
        let order = orders.len();
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for &o in orders {
            *hist.entry(o).or_default() += 1;
        }
        let count = |k: usize| hist.get(&k).copied().unwrap_or(0);
        let cyclic = count(order) > 0;
        let name = match order {
            _ if cyclic => format!("C_{order}"),
            4 => "C_2×C_2".into(),
            6 => "S_3".into(),
            8 => match (count(4), count(2)) {
                (0, _) => "C_2×C_2×C_2".into(),
                (6, 1) => "Q_8".into(),
                (2, 5) => "D_4".into(),
                _ => "C_4×C_2".into(),
            },
            9 => "C_3×C_3".into(),
            10 => "D_5".into(),
            12 => match (count(2), count(3), count(4)) {
                (3, 8, 0) => "A_4".into(),
                (_, _, 6) => "Dic_3".into(),
                (7, _, _) => "D_6".into(),
                _ => "C_6×C_2".into(),
            },
            _ => format!("order-{order}"),
        };
        GroupLabel(name)
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The permutations fixing every component of a table or doppel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    elements: Vec<Permutation>,
    label: GroupLabel,
}

impl AutGroup {
    fn from_elements(elements: Vec<Permutation>) -> Self {
        let orders: Vec<usize> = elements.iter().map(Permutation::cycle_order).collect();
        let label = GroupLabel::from_element_orders(&orders);
        Self { elements, label }
    }

    /// Elements in lexicographic order; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn label(&self) -> &GroupLabel {
        &self.label
    }

    pub fn is_abelian(&self) -> bool {
        self.elements
            .iter()
            .all(|a| self.elements.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

impl fmt::Display for AutGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.label, self.order())
    }
}

pub fn automorphisms<T: Relabel>(x: &T) -> AutGroup {
    let elements = all_permutations(x.order())
        .iter()
        .filter(|p| x.relabel(p) == *x)
        .cloned()
        .collect();
    AutGroup::from_elements(elements)
}
