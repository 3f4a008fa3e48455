//! Named model semigroups and recognition of arbitrary tables by name.
//!
//! Element order conventions are fixed so that built tables are
//! reproducible byte for byte:
//!
//! * `C{n}` is addition modulo `n` (identity `0`).
//! * `O{n}` is the null semigroup with zero `n-1`.
//! * `O{n,m}` has zero `n-1` and idempotent set `A = {0..m-1}`.
//! * `L{n}` is `min` on `0..n`.
//! * `M{r,m}` stores `a^(i+1)` at index `i`.
//! * `LO~0{m,k}` lives on `X = {0..k-1}` plus the zero `k`, with `A = {0..m-1}`.
//! * `LOB{n}` and `LOarrow{n-1,n}` use the distinguished pair `a = 0`, `c = n-1`.
//! * `RO`-families are the duals of the matching `LO`-families.
//! * Decorations append their new element last: `+0` a zero, `+1` an
//!   identity, `~1` an element squaring to the identity of a monoid.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::enumerate::{doppel_classes, SearchBudget};
use crate::error::{Error, Result};
use crate::iso::canonical_doppel;
use crate::iso::canonical_semigroup;
use crate::props::identity;
use crate::table::{CayleyTable, DoppelTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Cyclic,
    /// `O{n}` is the null semigroup, `O{n,m}` the semigroup `O_n^m`.
    Null,
    Linear,
    LeftZero,
    RightZero,
    Monogenic,
    LeftZeroTilde0,
    RightZeroTilde0,
    LeftBand,
    RightBand,
    LeftArrow,
    RightArrow,
}

impl Family {
    const ALL: [Family; 12] = [
        Family::Cyclic,
        Family::Null,
        Family::Linear,
        Family::LeftZero,
        Family::RightZero,
        Family::Monogenic,
        Family::LeftZeroTilde0,
        Family::RightZeroTilde0,
        Family::LeftBand,
        Family::RightBand,
        Family::LeftArrow,
        Family::RightArrow,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Family::Cyclic => "C",
            Family::Null => "O",
            Family::Linear => "L",
            Family::LeftZero => "LO",
            Family::RightZero => "RO",
            Family::Monogenic => "M",
            Family::LeftZeroTilde0 => "LO~0",
            Family::RightZeroTilde0 => "RO~0",
            Family::LeftBand => "LOB",
            Family::RightBand => "ROB",
            Family::LeftArrow => "LOarrow",
            Family::RightArrow => "ROarrow",
        }
    }

    /// The family whose members are the duals of this one's.
    pub fn dual(self) -> Family {
        match self {
            Family::LeftZero => Family::RightZero,
            Family::RightZero => Family::LeftZero,
            Family::LeftZeroTilde0 => Family::RightZeroTilde0,
            Family::RightZeroTilde0 => Family::LeftZeroTilde0,
            Family::LeftBand => Family::RightBand,
            Family::RightBand => Family::LeftBand,
            Family::LeftArrow => Family::RightArrow,
            Family::RightArrow => Family::LeftArrow,
            other => other,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    AdjoinZero,
    AdjoinIdentity,
    AdjoinTilde1,
}

impl Decoration {
    pub fn token(self) -> &'static str {
        match self {
            Decoration::AdjoinZero => "+0",
            Decoration::AdjoinIdentity => "+1",
            Decoration::AdjoinTilde1 => "~1",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelName {
    pub family: Family,
    pub params: Vec<usize>,
    pub decorations: Vec<Decoration>,
}

impl ModelName {
    pub fn new(family: Family, params: &[usize]) -> Result<Self> {
        let name = Self {
            family,
            params: params.to_vec(),
            decorations: Vec::new(),
        };
        name.base_order()?;
        Ok(name)
    }

    pub fn decorated(mut self, d: Decoration) -> Self {
        self.decorations.push(d);
        self
    }

    fn base_order(&self) -> Result<usize> {
        let bad = || Error::InvalidModel(self.to_string());
        let p = &self.params;
        let n = match (self.family, p.as_slice()) {
            (Family::Cyclic | Family::Linear | Family::LeftZero | Family::RightZero, &[n])
                if n >= 1 =>
            {
                n
            }
            (Family::Null, &[n]) if n >= 1 => n,
            (Family::Null, &[n, m]) if n >= 1 && m < n => n,
            (Family::Monogenic, &[r, m]) if r >= 1 && m >= 1 => r + m - 1,
            (Family::LeftZeroTilde0 | Family::RightZeroTilde0, &[m, k]) if k >= 1 && m <= k => {
                k + 1
            }
            (Family::LeftBand | Family::RightBand, &[n]) if n >= 2 => n,
            (Family::LeftArrow | Family::RightArrow, &[k, n]) if n >= 2 && k + 1 == n => n,
            _ => return Err(bad()),
        };
        Ok(n)
    }

    /// Order of the built table.
    pub fn order(&self) -> usize {
        self.base_order().expect("validated at construction") + self.decorations.len()
    }

    /// The name of the dual construction, when the dual has a name of the
    /// same shape (decorations commute with dualizing).
    pub fn dual(&self) -> ModelName {
        ModelName {
            family: self.family.dual(),
            params: self.params.clone(),
            decorations: self.decorations.clone(),
        }
    }
}

impl fmt::Display for ModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.family.token())?;
        for (k, p) in self.params.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")?;
        for d in &self.decorations {
            f.write_str(d.token())?;
        }
        Ok(())
    }
}

impl FromStr for ModelName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidModel(s.to_string());
        let open = s.find('{').ok_or_else(bad)?;
        let close = s.find('}').ok_or_else(bad)?;
        if close < open {
            return Err(bad());
        }
        let family = Family::ALL
            .into_iter()
            .find(|f| f.token() == &s[..open])
            .ok_or_else(bad)?;
        let params = s[open + 1..close]
            .split(',')
            .map(|p| p.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let mut rest = &s[close + 1..];
        let mut decorations = Vec::new();
        while !rest.is_empty() {
            let d = [
                Decoration::AdjoinZero,
                Decoration::AdjoinIdentity,
                Decoration::AdjoinTilde1,
            ]
            .into_iter()
            .find(|d| rest.starts_with(d.token()))
            .ok_or_else(bad)?;
            decorations.push(d);
            rest = &rest[d.token().len()..];
        }
        let name = ModelName {
            family,
            params,
            decorations,
        };
        name.base_order()?;
        Ok(name)
    }
}

/// `S^{+0}`: a new absorbing element appended last.
pub fn adjoin_zero(t: &CayleyTable) -> CayleyTable {
    let n = t.order();
    CayleyTable::from_fn(n + 1, |x, y| if x == n || y == n { n } else { t.get(x, y) })
}

/// `S^{+1}`: a new identity appended last.
pub fn adjoin_identity(t: &CayleyTable) -> CayleyTable {
    let n = t.order();
    CayleyTable::from_fn(n + 1, |x, y| match (x == n, y == n) {
        (true, true) => n,
        (true, false) => y,
        (false, true) => x,
        (false, false) => t.get(x, y),
    })
}

/// `M^{~1}`: a new element acting as identity on `M` and squaring to the
/// identity `e` of the monoid `M`.
pub fn adjoin_tilde1(t: &CayleyTable) -> Result<CayleyTable> {
    let e = identity(t).ok_or(Error::NotMonoid)?;
    let n = t.order();
    Ok(CayleyTable::from_fn(n + 1, |x, y| match (x == n, y == n) {
        (true, true) => e,
        (true, false) => y,
        (false, true) => x,
        (false, false) => t.get(x, y),
    }))
}

/// `LO^{~0}_{A←X}` on `X = {0..k-1}` with zero `k`: `x * y = x` when
/// `y ∈ A`, else the zero.
pub fn left_zero_tilde0(k: usize, a: &[bool]) -> CayleyTable {
    assert_eq!(a.len(), k);
    CayleyTable::from_fn(k + 1, |x, y| if y < k && a[y] { x } else { k })
}

/// `O_X^A` on `0..n` with zero `z`: `x * x = x` for `x ∈ A`, every other
/// product is `z`.
pub fn null_with_idempotents(n: usize, z: usize, a: &[bool]) -> CayleyTable {
    CayleyTable::from_fn(n, |x, y| if x == y && a[x] { x } else { z })
}

/// `(X, ⊣_c^a)`: every `x ≠ c` is a left zero, `c * y = a` for `y ≠ c`,
/// `c * c = c`.
pub fn left_band(n: usize, a: usize, c: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |x, y| match (x == c, y == c) {
        (false, _) => x,
        (true, false) => a,
        (true, true) => c,
    })
}

/// `(X, ⊢_c^a)`: every `x ≠ c` is a left zero and `c * y = a`.
pub fn left_arrow(n: usize, a: usize, c: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |x, _| if x == c { a } else { x })
}

fn build_base(name: &ModelName) -> CayleyTable {
    let p = &name.params;
    match (name.family, p.as_slice()) {
        (Family::Cyclic, &[n]) => CayleyTable::from_fn(n, |x, y| (x + y) % n),
        (Family::Null, &[n]) => CayleyTable::null(n, n - 1),
        (Family::Null, &[n, m]) => {
            let a: Vec<bool> = (0..n).map(|x| x < m).collect();
            null_with_idempotents(n, n - 1, &a)
        }
        (Family::Linear, &[n]) => CayleyTable::from_fn(n, |x, y| x.min(y)),
        (Family::LeftZero, &[n]) => CayleyTable::from_fn(n, |x, _| x),
        (Family::RightZero, &[n]) => CayleyTable::from_fn(n, |_, y| y),
        (Family::Monogenic, &[r, m]) => {
            let top = r + m - 1;
            CayleyTable::from_fn(top, |x, y| {
                let mut k = x + y + 2;
                while k > top {
                    k -= m;
                }
                k - 1
            })
        }
        (Family::LeftZeroTilde0, &[m, k]) => {
            left_zero_tilde0(k, &(0..k).map(|y| y < m).collect::<Vec<_>>())
        }
        (Family::LeftBand, &[n]) => left_band(n, 0, n - 1),
        (Family::LeftArrow, &[_, n]) => left_arrow(n, 0, n - 1),
        (Family::RightZeroTilde0 | Family::RightBand | Family::RightArrow, _) => {
            let dual = ModelName {
                family: name.family.dual(),
                params: name.params.clone(),
                decorations: Vec::new(),
            };
            build_base(&dual).dual()
        }
        _ => unreachable!("name validated at construction"),
    }
}

/// The table of a named model.
pub fn build(name: &ModelName) -> Result<CayleyTable> {
    name.base_order()?;
    let mut t = build_base(name);
    for d in &name.decorations {
        t = match d {
            Decoration::AdjoinZero => adjoin_zero(&t),
            Decoration::AdjoinIdentity => adjoin_identity(&t),
            Decoration::AdjoinTilde1 => {
                adjoin_tilde1(&t).map_err(|_| Error::InvalidModel(name.to_string()))?
            }
        };
    }
    Ok(t)
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: ModelName,
    pub table: CayleyTable,
    pub canon: CayleyTable,
}

/// One preferred name per isomorphism class reachable by the named
/// constructions, for a single order.
#[derive(Debug)]
pub struct Catalog {
    order: usize,
    entries: Vec<CatalogEntry>,
    by_canon: HashMap<CayleyTable, usize>,
}

/// Largest order with a name catalog.
pub const CATALOG_MAX_ORDER: usize = 4;

static CATALOGS: [OnceLock<Catalog>; CATALOG_MAX_ORDER + 1] =
    [const { OnceLock::new() }; CATALOG_MAX_ORDER + 1];

impl Catalog {
    /// The catalog of order `n`, built on first use. Orders above
    /// [`CATALOG_MAX_ORDER`] have an empty catalog.
    pub fn for_order(n: usize) -> &'static Catalog {
        static EMPTY: OnceLock<Catalog> = OnceLock::new();
        if n == 0 || n > CATALOG_MAX_ORDER {
            return EMPTY.get_or_init(|| Catalog {
                order: 0,
                entries: Vec::new(),
                by_canon: HashMap::new(),
            });
        }
        CATALOGS[n].get_or_init(|| Catalog::generate(n))
    }

    /// Candidate names in priority order; the first name reaching a class
    /// becomes its name.
    fn candidates(n: usize) -> Vec<ModelName> {
        let mk = |f: Family, p: &[usize]| ModelName::new(f, p).ok();
        let mut out: Vec<ModelName> = Vec::new();
        out.extend(mk(Family::Cyclic, &[n]));
        out.extend(mk(Family::Null, &[n]));
        out.extend(mk(Family::Linear, &[n]));
        out.extend(mk(Family::LeftZero, &[n]));
        out.extend(mk(Family::RightZero, &[n]));
        for r in 1..=n {
            out.extend(mk(Family::Monogenic, &[r, n + 1 - r]));
        }
        for m in 1..n {
            out.extend(mk(Family::Null, &[n, m]));
        }
        if n >= 2 {
            let smaller = Catalog::for_order(n - 1);
            for d in [
                Decoration::AdjoinZero,
                Decoration::AdjoinIdentity,
                Decoration::AdjoinTilde1,
            ] {
                for e in &smaller.entries {
                    if d == Decoration::AdjoinTilde1 && identity(&e.table).is_none() {
                        continue;
                    }
                    out.push(e.name.clone().decorated(d));
                }
            }
            for m in 0..n {
                out.extend(mk(Family::LeftZeroTilde0, &[m, n - 1]));
                out.extend(mk(Family::RightZeroTilde0, &[m, n - 1]));
            }
        }
        out.extend(mk(Family::LeftBand, &[n]));
        out.extend(mk(Family::RightBand, &[n]));
        out.extend(mk(Family::LeftArrow, &[n.saturating_sub(1), n]));
        out.extend(mk(Family::RightArrow, &[n.saturating_sub(1), n]));
        out
    }

    fn generate(n: usize) -> Catalog {
        let mut entries = Vec::new();
        let mut by_canon = HashMap::new();
        for name in Self::candidates(n) {
            let table = build(&name).expect("candidate names are valid");
            debug_assert!(table.is_associative(), "{name} is not associative");
            let canon = canonical_semigroup(&table).canon;
            if by_canon.contains_key(&canon) {
                continue;
            }
            by_canon.insert(canon.clone(), entries.len());
            entries.push(CatalogEntry { name, table, canon });
        }
        Catalog {
            order: n,
            entries,
            by_canon,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn lookup_canon(&self, canon: &CayleyTable) -> Option<&CatalogEntry> {
        self.by_canon.get(canon).map(|&i| &self.entries[i])
    }
}

/// The catalog name of the class of `t`, if it has one.
pub fn recognize(t: &CayleyTable) -> Option<ModelName> {
    let catalog = Catalog::for_order(t.order());
    if catalog.entries.is_empty() {
        return None;
    }
    let canon = canonical_semigroup(t).canon;
    catalog.lookup_canon(&canon).map(|e| e.name.clone())
}

/// `(D, ⊣, ⊢)^{+0}`: both operations extended by the same new zero.
pub fn doppel_adjoin_zero(d: &DoppelTable) -> DoppelTable {
    DoppelTable::new(adjoin_zero(d.left()), adjoin_zero(d.right()))
        .expect("adjoining a zero preserves the doppel axioms")
}

/// How doppel names join their components.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NameStyle {
    #[default]
    Unicode,
    Ascii,
}

impl NameStyle {
    pub fn join(self) -> &'static str {
        match self {
            NameStyle::Unicode => "⋈",
            NameStyle::Ascii => "><",
        }
    }
}

/// Name of a doppel class: its component names, plus a disambiguating index
/// when several classes share both component names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoppelName {
    pub left: String,
    /// `None` for trivial doppels, whose name is just the component name.
    pub right: Option<String>,
    pub index: Option<usize>,
}

impl DoppelName {
    pub fn render(&self, style: NameStyle) -> String {
        match (&self.right, self.index) {
            (None, _) => self.left.clone(),
            (Some(r), None) => format!("{}{}{}", self.left, style.join(), r),
            (Some(r), Some(k)) => format!("{}{}{}#{}", self.left, style.join(), r, k),
        }
    }
}

impl fmt::Display for DoppelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(NameStyle::Unicode))
    }
}

/// Catalog name of a component, or its canonical encoding when unnamed.
pub fn component_name(t: &CayleyTable) -> String {
    recognize(t)
        .map(|m| m.to_string())
        .unwrap_or_else(|| canonical_semigroup(t).canon.to_string())
}

/// Names for a full list of canonical doppel classes of one order, in the
/// order given. Classes sharing both component names are numbered `#1, #2,
/// ...` in list order; a trivial class takes its number but renders bare.
pub fn assign_names(classes: &[DoppelTable]) -> Vec<DoppelName> {
    let pairs: Vec<(String, String)> = classes
        .iter()
        .map(|d| (component_name(d.left()), component_name(d.right())))
        .collect();
    let mut group_size: HashMap<&(String, String), usize> = HashMap::new();
    for p in &pairs {
        *group_size.entry(p).or_default() += 1;
    }
    let mut taken: HashMap<&(String, String), usize> = HashMap::new();
    classes
        .iter()
        .zip(&pairs)
        .map(|(d, p)| {
            let k = {
                let slot = taken.entry(p).or_default();
                *slot += 1;
                *slot
            };
            let trivial = d.is_trivial();
            DoppelName {
                left: p.0.clone(),
                right: (!trivial).then(|| p.1.clone()),
                index: (!trivial && group_size[p] > 1).then_some(k),
            }
        })
        .collect()
}

/// Names of every doppel class of one order, keyed by canonical doppel.
#[derive(Debug)]
pub struct DoppelNamer {
    names: HashMap<DoppelTable, DoppelName>,
}

impl DoppelNamer {
    pub fn from_classes(classes: &[DoppelTable]) -> Self {
        let names = assign_names(classes);
        Self {
            names: classes.iter().cloned().zip(names).collect(),
        }
    }

    pub fn for_order(n: usize, budget: &SearchBudget) -> Result<Self> {
        let classes: Vec<DoppelTable> = doppel_classes(n, budget)?
            .into_iter()
            .map(|c| c.canon)
            .collect();
        Ok(Self::from_classes(&classes))
    }

    pub fn name(&self, d: &DoppelTable) -> Option<&DoppelName> {
        self.names.get(&canonical_doppel(d).canon)
    }
}

const CACHED_NAMER_ORDER: usize = 3;

static NAMERS: [OnceLock<DoppelNamer>; CACHED_NAMER_ORDER + 1] =
    [const { OnceLock::new() }; CACHED_NAMER_ORDER + 1];

/// The name of a doppel's isomorphism class. Orders up to three use a
/// shared index; larger orders enumerate their classes within `budget`.
pub fn doppel_name(d: &DoppelTable, budget: &SearchBudget) -> Result<DoppelName> {
    let n = d.order();
    budget.check_order(n)?;
    let lookup = |namer: &DoppelNamer| {
        namer
            .name(d)
            .cloned()
            .expect("every doppel belongs to an enumerated class")
    };
    if n <= CACHED_NAMER_ORDER {
        let namer = match NAMERS[n].get() {
            Some(namer) => namer,
            None => {
                let built = DoppelNamer::for_order(n, &SearchBudget::up_to(n))?;
                NAMERS[n].get_or_init(|| built)
            }
        };
        Ok(lookup(namer))
    } else {
        Ok(lookup(&DoppelNamer::for_order(n, budget)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::{is_inflation, monogenic_params, structural_probe};
    use crate::table::SelfMap;

    fn name(s: &str) -> ModelName {
        s.parse().unwrap()
    }

    #[test]
    fn grammar_round_trips() {
        for s in [
            "C{3}",
            "O{3}",
            "O{3,1}",
            "M{2,2}",
            "LO~0{1,2}",
            "LO{2}+1",
            "C{2}~1",
            "LOarrow{2,3}",
            "C{2}+0+1",
            "RO~0{0,3}",
        ] {
            assert_eq!(name(s).to_string(), s);
        }
        for bad in [
            "X{3}",
            "C{}",
            "C{0}",
            "O{3,3}",
            "LOarrow{1,3}",
            "C{3}+2",
            "C3",
            "LOB{1}",
        ] {
            assert!(bad.parse::<ModelName>().is_err(), "{bad}");
        }
        assert_eq!(name("LO~0{1,2}").order(), 3);
        assert_eq!(name("C{2}~1").order(), 3);
        assert_eq!(name("M{3,1}").order(), 3);
    }

    #[test]
    fn build_examples() {
        assert_eq!(
            build(&name("L{3}")).unwrap(),
            CayleyTable::from_fn(3, |x, y| x.min(y))
        );
        let m22 = build(&name("M{2,2}")).unwrap();
        let p = monogenic_params(&m22).unwrap();
        assert_eq!((p.index, p.period), (2, 2));
        // a^4 = a^2: a^3 * a = a^2 (index 1).
        assert_eq!(m22.get(2, 0), 1);
        let m31 = build(&name("M{3,1}")).unwrap();
        let p = monogenic_params(&m31).unwrap();
        assert_eq!((p.index, p.period), (3, 1));

        let c2t = build(&name("C{2}~1")).unwrap();
        assert_eq!(c2t.get(2, 2), 0);
        assert!(is_inflation(
            &c2t,
            &[0, 1],
            &SelfMap::new(3, vec![0, 1, 0]).unwrap()
        ));
        assert!(build(&name("LO{2}~1")).is_err());
    }

    #[test]
    fn named_tables_are_associative() {
        for n in 1..=4 {
            for e in Catalog::for_order(n).entries() {
                assert!(e.table.is_associative(), "{}", e.name);
                assert_eq!(e.name.order(), n);
            }
        }
    }

    #[test]
    fn null_family_endpoints() {
        for n in 2..=4 {
            let top = build(&ModelName::new(Family::Null, &[n, n - 1]).unwrap()).unwrap();
            assert!(structural_probe(&top).is_semilattice);
            let bottom = build(&ModelName::new(Family::Null, &[n, 0]).unwrap()).unwrap();
            assert!(crate::props::is_null(&bottom));
            assert_eq!(
                bottom,
                build(&ModelName::new(Family::Null, &[n]).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn tilde0_full_subset_is_adjoined_zero() {
        for k in 1..=3 {
            let full = build(&ModelName::new(Family::LeftZeroTilde0, &[k, k]).unwrap()).unwrap();
            let plus0 = build(
                &ModelName::new(Family::LeftZero, &[k])
                    .unwrap()
                    .decorated(Decoration::AdjoinZero),
            )
            .unwrap();
            assert_eq!(full, plus0);
        }
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(Catalog::for_order(1).entries().len(), 1);
        assert_eq!(Catalog::for_order(2).entries().len(), 5);
        assert_eq!(Catalog::for_order(3).entries().len(), 24);
        assert!(Catalog::for_order(5).entries().is_empty());
    }

    #[test]
    fn order_two_names() {
        let names: Vec<String> = Catalog::for_order(2)
            .entries()
            .iter()
            .map(|e| e.name.to_string())
            .collect();
        assert_eq!(names, ["C{2}", "O{2}", "L{2}", "LO{2}", "RO{2}"]);
    }

    #[test]
    fn recognize_relabeled_cyclic_group() {
        let z3 = CayleyTable::from_fn(3, |x, y| (x + y) % 3);
        let relabeled =
            crate::iso::apply_perm(&z3, &crate::perm::Permutation::new(vec![2, 0, 1]).unwrap())
                .unwrap();
        assert_eq!(recognize(&relabeled), Some(name("C{3}")));
        let t = build(&name("LO~0{1,2}")).unwrap();
        assert_eq!(recognize(&t), Some(name("LO~0{1,2}")));
    }

    #[test]
    fn doppel_names_render_both_styles() {
        let n = DoppelName {
            left: "O{3,1}".into(),
            right: Some("O{3,1}".into()),
            index: Some(2),
        };
        assert_eq!(n.render(NameStyle::Ascii), "O{3,1}><O{3,1}#2");
        assert_eq!(n.to_string(), "O{3,1}⋈O{3,1}#2");
    }
}
