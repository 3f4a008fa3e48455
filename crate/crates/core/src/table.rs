//! Cayley tables and the objects built from them.
//!
//! Elements of a carrier of order `n` are the indices `0..n`. A table stores
//! `n * n` entries row-major, so `entries[i * n + j]` is the product `i * j`.
//! Tables are immutable once built.

use std::fmt;

use crate::error::{Error, Result};
use crate::props;

/// An element of a finite carrier, addressed by its index.
pub type Element = usize;

/// Largest order a table may have; entries are stored as bytes.
pub const MAX_ORDER: usize = 255;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<u8>,
}

impl CayleyTable {
    /// Builds a table from row-major entries, checking size and range.
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Unsupported(format!("table order {n}")));
        }
        if entries.len() != n * n {
            return Err(Error::OrderMismatch {
                left: n * n,
                right: entries.len(),
            });
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= n) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                order: n,
            });
        }
        Ok(Self {
            n,
            entries: entries.into_iter().map(|e| e as u8).collect(),
        })
    }

    /// Builds a table by evaluating `op` on every pair.
    ///
    /// Panics if `op` returns an element outside `0..n`.
    pub fn from_fn(n: usize, mut op: impl FnMut(Element, Element) -> Element) -> Self {
        assert!(n > 0 && n <= MAX_ORDER, "unsupported order {n}");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = op(i, j);
                assert!(v < n, "product {i}*{j} = {v} out of range for order {n}");
                entries.push(v as u8);
            }
        }
        Self { n, entries }
    }

    pub(crate) fn from_bytes(n: usize, entries: Vec<u8>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        debug_assert!(entries.iter().all(|&e| (e as usize) < n));
        Self { n, entries }
    }

    /// The null semigroup on `n` elements with all products equal to `zero`.
    pub fn null(n: usize, zero: Element) -> Self {
        Self::from_fn(n, |_, _| zero)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: Element, j: Element) -> Element {
        self.entries[i * self.n + j] as usize
    }

    /// Row-major entries.
    pub fn entries(&self) -> impl ExactSizeIterator<Item = Element> + '_ {
        self.entries.iter().map(|&e| e as usize)
    }

    pub(crate) fn bytes(&self) -> &[u8] {
        &self.entries
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.n
    }

    pub fn is_associative(&self) -> bool {
        props::is_associative(self)
    }

    pub fn is_commutative(&self) -> bool {
        props::is_commutative(self)
    }

    /// The table with every product reversed: `x *d y = y * x`.
    pub fn dual(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    pub(crate) fn check_element(&self, e: Element) -> Result<()> {
        if e < self.n {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: e,
                order: self.n,
            })
        }
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable({self})")
    }
}

/// An ordered pair of tables on one carrier satisfying both mixed
/// associativity axioms: `(x ⊣ y) ⊢ z = x ⊣ (y ⊢ z)` and
/// `(x ⊢ y) ⊣ z = x ⊢ (y ⊣ z)`, with both operations associative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoppelTable {
    left: CayleyTable,
    right: CayleyTable,
}

impl DoppelTable {
    pub fn new(left: CayleyTable, right: CayleyTable) -> Result<Self> {
        if left.order() != right.order() {
            return Err(Error::OrderMismatch {
                left: left.order(),
                right: right.order(),
            });
        }
        if !left.is_associative() {
            return Err(Error::NotDoppel("left operation is not associative"));
        }
        if !right.is_associative() {
            return Err(Error::NotDoppel("right operation is not associative"));
        }
        if !props::satisfies_d1(&left, &right) {
            return Err(Error::NotDoppel("axiom D1 fails"));
        }
        if !props::satisfies_d2(&left, &right) {
            return Err(Error::NotDoppel("axiom D2 fails"));
        }
        Ok(Self { left, right })
    }

    /// The trivial doppelsemigroup `(S, *, *)` of an associative table.
    pub fn trivial(t: CayleyTable) -> Result<Self> {
        if !t.is_associative() {
            return Err(Error::NotAssociative(t.order()));
        }
        Ok(Self {
            left: t.clone(),
            right: t,
        })
    }

    pub(crate) fn new_unchecked(left: CayleyTable, right: CayleyTable) -> Self {
        debug_assert_eq!(left.order(), right.order());
        Self { left, right }
    }

    pub fn order(&self) -> usize {
        self.left.order()
    }

    pub fn left(&self) -> &CayleyTable {
        &self.left
    }

    pub fn right(&self) -> &CayleyTable {
        &self.right
    }

    pub fn into_parts(self) -> (CayleyTable, CayleyTable) {
        (self.left, self.right)
    }

    pub fn is_trivial(&self) -> bool {
        self.left == self.right
    }

    pub fn is_commutative(&self) -> bool {
        self.left.is_commutative() && self.right.is_commutative()
    }

    pub fn is_strong(&self) -> bool {
        props::is_strong_pair(&self.left, &self.right).unwrap_or(false)
    }

    /// `(D, ⊢, ⊣)`: the same carrier with the two operations exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    /// `(D, ⊣ᵈ, ⊢ᵈ)`: both operations dualized.
    pub fn dual(&self) -> Self {
        Self {
            left: self.left.dual(),
            right: self.right.dual(),
        }
    }
}

impl fmt::Debug for DoppelTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DoppelTable({self})")
    }
}

/// A (not necessarily bijective) map from the carrier to itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SelfMap {
    image: Vec<Element>,
}

impl SelfMap {
    pub fn new(n: usize, image: Vec<Element>) -> Result<Self> {
        if image.len() != n {
            return Err(Error::OrderMismatch {
                left: n,
                right: image.len(),
            });
        }
        if let Some(&bad) = image.iter().find(|&&e| e >= n) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                order: n,
            });
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, value: Element) -> Self {
        assert!(value < n);
        Self {
            image: vec![value; n],
        }
    }

    pub fn order(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.image[x]
    }

    pub fn image(&self) -> &[Element] {
        &self.image
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &SelfMap) -> SelfMap {
        SelfMap {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }
}
