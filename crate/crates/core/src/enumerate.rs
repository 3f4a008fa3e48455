//! Exhaustive generation: associative tables, interassociates of a fixed
//! table, and doppelsemigroups, each up to equality or up to isomorphism.
//!
//! Interassociates (and associative tables of order four and up) are found
//! by filling the unknown table one cell at a time in row-major order. After
//! every assignment each triple whose lookups are all defined is checked
//! against associativity and, when a partner table is fixed, both mixed
//! axioms. Work is split across workers by the value of the first cell and
//! merged in ascending order, so results do not depend on the thread count.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::iso::{canonical_doppel, canonical_semigroup, CanonicalForm};
use crate::props::{is_associative, is_left_translation, is_strong_pair};
use crate::table::{CayleyTable, DoppelTable, SelfMap};

/// Limits on how much a search may do.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_order: usize,
    /// Cap on backtracking nodes (cell assignments tried) per search.
    pub node_limit: Option<u64>,
}

impl SearchBudget {
    pub const DEFAULT_MAX_ORDER: usize = 3;

    pub fn up_to(max_order: usize) -> Self {
        assert!(max_order >= 1, "max_order must be at least 1");
        Self {
            max_order,
            node_limit: None,
        }
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }

    pub fn check_order(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Unsupported("order 0".into()));
        }
        if n > self.max_order {
            return Err(Error::OrderBudgetExceeded {
                order: n,
                max_order: self.max_order,
            });
        }
        Ok(())
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::up_to(Self::DEFAULT_MAX_ORDER)
    }
}

const UNSET: u8 = u8::MAX;

struct Dfs<'a> {
    n: usize,
    partner: Option<&'a CayleyTable>,
    cells: Vec<u8>,
    nodes: &'a AtomicU64,
    limit: Option<u64>,
    out: Vec<CayleyTable>,
}

impl Dfs<'_> {
    #[inline]
    fn get(&self, i: usize, j: usize) -> Option<usize> {
        let v = self.cells[i * self.n + j];
        (v != UNSET).then_some(v as usize)
    }

    fn consistent(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    let yz = self.get(y, z);
                    if let (Some(xy), Some(yz)) = (xy, yz) {
                        if let (Some(l), Some(r)) = (self.get(xy, z), self.get(x, yz)) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                    let Some(a) = self.partner else { continue };
                    // (x ⊣ y) ⊢ z = x ⊣ (y ⊢ z)
                    if let (Some(l), Some(yz)) = (self.get(a.get(x, y), z), yz) {
                        if l != a.get(x, yz) {
                            return false;
                        }
                    }
                    // (x ⊢ y) ⊣ z = x ⊢ (y ⊣ z)
                    if let (Some(xy), Some(r)) = (xy, self.get(x, a.get(y, z))) {
                        if a.get(xy, z) != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn descend(&mut self, cell: usize) -> Result<()> {
        if cell == self.cells.len() {
            self.out
                .push(CayleyTable::from_bytes(self.n, self.cells.clone()));
            return Ok(());
        }
        for v in 0..self.n as u8 {
            let seen = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
            if let Some(limit) = self.limit {
                if seen > limit {
                    return Err(Error::NodeBudgetExceeded { limit });
                }
            }
            self.cells[cell] = v;
            if self.consistent() {
                self.descend(cell + 1)?;
            }
        }
        self.cells[cell] = UNSET;
        Ok(())
    }
}

/// All associative tables `b` of order `n`, interassociative with `partner`
/// when one is given, in ascending entry order.
fn backtrack(
    n: usize,
    partner: Option<&CayleyTable>,
    budget: &SearchBudget,
    exec: Exec,
) -> Result<Vec<CayleyTable>> {
    let nodes = AtomicU64::new(0);
    let roots: Vec<u8> = (0..n as u8).collect();
    let parts = exec.try_map(&roots, |&first| {
        let mut dfs = Dfs {
            n,
            partner,
            cells: vec![UNSET; n * n],
            nodes: &nodes,
            limit: budget.node_limit,
            out: Vec::new(),
        };
        dfs.cells[0] = first;
        if dfs.consistent() {
            dfs.descend(1)?;
        }
        Ok::<_, Error>(dfs.out)
    })?;
    let mut all: Vec<CayleyTable> = parts.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

/// Result of a plain generate-and-test scan over every table of an order.
#[derive(Clone, Debug)]
pub struct AssociativeScan {
    pub scanned: u64,
    pub tables: Vec<CayleyTable>,
}

/// Tests every one of the `n^(n²)` tables of order `n` for associativity.
/// Only practical for `n ≤ 3`.
pub fn scan_associative(n: usize, exec: Exec) -> Result<AssociativeScan> {
    if !(1..=3).contains(&n) {
        return Err(Error::Unsupported(format!("plain scan at order {n}")));
    }
    let cells = n * n;
    // The first cell is the most significant digit, so splitting on it and
    // counting upward within each part gives ascending entry order.
    let per_root = (n as u64).pow(cells as u32 - 1);
    let roots: Vec<u8> = (0..n as u8).collect();
    let parts = exec.map(&roots, |&first| {
        let mut found = Vec::new();
        let mut entries = vec![0u8; cells];
        entries[0] = first;
        for code in 0..per_root {
            let mut c = code;
            for slot in entries[1..].iter_mut().rev() {
                *slot = (c % n as u64) as u8;
                c /= n as u64;
            }
            let t = CayleyTable::from_bytes(n, entries.clone());
            if is_associative(&t) {
                found.push(t);
            }
        }
        found
    });
    Ok(AssociativeScan {
        scanned: per_root * n as u64,
        tables: parts.into_iter().flatten().collect(),
    })
}

pub fn enumerate_associative(n: usize, budget: &SearchBudget) -> Result<Vec<CayleyTable>> {
    enumerate_associative_with(n, budget, Exec::default())
}

/// Every associative table of order `n` exactly once, ascending.
pub fn enumerate_associative_with(
    n: usize,
    budget: &SearchBudget,
    exec: Exec,
) -> Result<Vec<CayleyTable>> {
    budget.check_order(n)?;
    if n <= 3 {
        Ok(scan_associative(n, exec)?.tables)
    } else {
        backtrack(n, None, budget, exec)
    }
}

/// Keeps the first canonical form seen for each canon, then sorts by canon.
fn dedup_canonical<T: Ord + Clone + std::hash::Hash>(
    forms: impl IntoIterator<Item = CanonicalForm<T>>,
) -> Vec<CanonicalForm<T>> {
    let mut seen = HashSet::new();
    let mut out: Vec<CanonicalForm<T>> = forms
        .into_iter()
        .filter(|f| seen.insert(f.canon.clone()))
        .collect();
    out.sort_by(|a, b| a.canon.cmp(&b.canon));
    out
}

pub fn semigroup_classes(
    n: usize,
    budget: &SearchBudget,
) -> Result<Vec<CanonicalForm<CayleyTable>>> {
    semigroup_classes_with(n, budget, Exec::default())
}

/// One canonical representative per isomorphism class of semigroups of
/// order `n`, sorted by canon.
pub fn semigroup_classes_with(
    n: usize,
    budget: &SearchBudget,
    exec: Exec,
) -> Result<Vec<CanonicalForm<CayleyTable>>> {
    let tables = enumerate_associative_with(n, budget, exec)?;
    Ok(dedup_canonical(exec.map(&tables, canonical_semigroup)))
}

pub fn interassociates_of(t: &CayleyTable, budget: &SearchBudget) -> Result<Vec<CayleyTable>> {
    interassociates_of_with(t, budget, Exec::default())
}

/// The exact set `Int(t)` of associative tables interassociative with `t`.
pub fn interassociates_of_with(
    t: &CayleyTable,
    budget: &SearchBudget,
    exec: Exec,
) -> Result<Vec<CayleyTable>> {
    budget.check_order(t.order())?;
    if !is_associative(t) {
        return Err(Error::NotAssociative(t.order()));
    }
    backtrack(t.order(), Some(t), budget, exec)
}

pub fn strong_interassociates_of(
    t: &CayleyTable,
    budget: &SearchBudget,
) -> Result<Vec<CayleyTable>> {
    Ok(interassociates_of(t, budget)?
        .into_iter()
        .filter(|b| is_strong_pair(t, b).expect("same order"))
        .collect())
}

/// Every doppelsemigroup of order `n` (not up to isomorphism), ordered by
/// left table then right table.
pub fn enumerate_doppels(n: usize, budget: &SearchBudget, exec: Exec) -> Result<Vec<DoppelTable>> {
    let tables = enumerate_associative_with(n, budget, exec)?;
    let parts = exec.try_map(&tables, |t| {
        let ints = interassociates_of_with(t, budget, Exec::Sequential)?;
        Ok::<_, Error>(
            ints.into_iter()
                .map(|b| DoppelTable::new_unchecked(t.clone(), b))
                .collect::<Vec<_>>(),
        )
    })?;
    Ok(parts.into_iter().flatten().collect())
}

pub fn doppel_classes(n: usize, budget: &SearchBudget) -> Result<Vec<CanonicalForm<DoppelTable>>> {
    doppel_classes_with(n, budget, Exec::default())
}

/// Canonical representatives of all doppelsemigroup classes of order `n`.
///
/// Every doppel is isomorphic to one whose left component is a canonical
/// semigroup representative, so it suffices to pair each representative
/// with each of its interassociates.
pub fn doppel_classes_with(
    n: usize,
    budget: &SearchBudget,
    exec: Exec,
) -> Result<Vec<CanonicalForm<DoppelTable>>> {
    let reps = semigroup_classes_with(n, budget, exec)?;
    let parts = exec.try_map(&reps, |rep| {
        let t = &rep.canon;
        let ints = interassociates_of_with(t, budget, Exec::Sequential)?;
        Ok::<_, Error>(
            ints.into_iter()
                .map(|b| canonical_doppel(&DoppelTable::new_unchecked(t.clone(), b)))
                .collect::<Vec<_>>(),
        )
    })?;
    Ok(dedup_canonical(parts.into_iter().flatten()))
}

/// All self-maps `l` with `l(xy) = l(x) y`, in lexicographic order of images.
pub fn left_translations(t: &CayleyTable) -> Vec<SelfMap> {
    let n = t.order();
    let mut image = vec![0usize; n];
    let mut out = Vec::new();
    // Odometer over all n^n maps, last position fastest.
    loop {
        let l = SelfMap::new(n, image.clone()).expect("in range");
        if is_left_translation(t, &l) {
            out.push(l);
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            image[k] += 1;
            if image[k] < n {
                break;
            }
            image[k] = 0;
        }
    }
}
