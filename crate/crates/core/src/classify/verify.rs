//! Machine checks of the classification and of the interassociate
//! characterizations. Each check compares an exhaustive computation against
//! an independently stated prediction and, on failure, reports the least
//! offending canonical table.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::{classify, reference, ClassificationReport};
use crate::catalog::{
    adjoin_identity, adjoin_tilde1, adjoin_zero, build, left_arrow, left_band, left_zero_tilde0,
    Decoration, Family, ModelName, NameStyle,
};
use crate::enumerate::{
    enumerate_associative, enumerate_doppels, interassociates_of, semigroup_classes, SearchBudget,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::iso::{automorphisms, canonical_doppel, canonical_semigroup};
use crate::props::{identity, is_interassociative, is_null, is_strong_pair, variant, zero};
use crate::table::{CayleyTable, DoppelTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail {
        reason: String,
        /// Least offending canonical table, when one exists.
        counterexample: Option<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub detail: String,
    pub outcome: Outcome,
}

impl Check {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            detail: detail.into(),
            outcome: Outcome::Pass,
        }
    }

    fn fail(
        name: impl Into<String>,
        detail: impl Into<String>,
        reason: impl Into<String>,
        counterexample: Option<String>,
    ) -> Self {
        Self {
            name: name.into(),
            detail: detail.into(),
            outcome: Outcome::Fail {
                reason: reason.into(),
                counterexample,
            },
        }
    }

    fn from_failures(
        name: String,
        detail: String,
        failures: Vec<(String, Option<String>)>,
    ) -> Self {
        if failures.is_empty() {
            return Self::pass(name, detail);
        }
        let reason = failures
            .iter()
            .map(|f| f.0.as_str())
            .collect::<Vec<_>>()
            .join("; ");
        let cex = failures.into_iter().filter_map(|f| f.1).min();
        Self::fail(name, detail, reason, cex)
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "PASS {}: {}", self.name, self.detail),
            Outcome::Fail {
                reason,
                counterexample,
            } => {
                write!(f, "FAIL {}: {} ({})", self.name, reason, self.detail)?;
                if let Some(c) = counterexample {
                    write!(f, " counterexample {c}")?;
                }
                Ok(())
            }
        }
    }
}

fn set(tables: impl IntoIterator<Item = CayleyTable>) -> BTreeSet<CayleyTable> {
    tables.into_iter().collect()
}

/// Compares a brute-force set against a predicted one; the counterexample
/// is the least table in the symmetric difference.
fn compare_sets(
    actual: &BTreeSet<CayleyTable>,
    predicted: &BTreeSet<CayleyTable>,
) -> Option<(String, Option<String>)> {
    if actual == predicted {
        return None;
    }
    let extra = actual.difference(predicted).count();
    let missing = predicted.difference(actual).count();
    let least = actual
        .symmetric_difference(predicted)
        .next()
        .map(ToString::to_string);
    Some((
        format!("{extra} unpredicted and {missing} missing interassociates"),
        least,
    ))
}

fn strong_failures(
    base: &CayleyTable,
    members: &BTreeSet<CayleyTable>,
) -> Result<Option<(String, Option<String>)>> {
    let mut weak = Vec::new();
    for m in members {
        if !is_strong_pair(base, m)? {
            weak.push(m);
        }
    }
    Ok(weak.first().map(|first| {
        (
            format!("{} interassociates are not strong", weak.len()),
            Some(first.to_string()),
        )
    }))
}

/// The five counts against the reference counts, plus the implication
/// non-strong ⟹ non-commutative.
pub fn theorem_check(report: &ClassificationReport) -> Check {
    let name = format!("counts(n={})", report.n);
    let c = report.counts;
    let got = [c.total, c.commutative, c.strong, c.trivial, c.dual_pairs];
    let detail = format!(
        "total={} commutative={} strong={} trivial={} dual_pairs={}",
        got[0], got[1], got[2], got[3], got[4]
    );
    let mut failures = Vec::new();
    if let Some(expected) = reference::counts(report.n) {
        let labels = ["total", "commutative", "strong", "trivial", "dual_pairs"];
        let known: BTreeSet<&str> = reference::rows(report.n).into_iter().map(|r| r.0).collect();
        let unlisted = report
            .records
            .iter()
            .filter(|r| !known.contains(r.name.render(NameStyle::Ascii).as_str()))
            .map(|r| r.canon.canon.to_string())
            .min();
        for ((label, e), g) in labels.iter().zip(expected).zip(got) {
            if e != g {
                failures.push((
                    format!("{label}: expected {e}, computed {g}"),
                    unlisted.clone(),
                ));
            }
        }
    }
    let bad: Vec<String> = report
        .records
        .iter()
        .filter(|r| !r.strong && r.commutative)
        .map(|r| r.canon.canon.to_string())
        .collect();
    if let Some(least) = bad.iter().min() {
        failures.push((
            format!("{} non-strong commutative classes", bad.len()),
            Some(least.clone()),
        ));
    }
    Check::from_failures(name, detail, failures)
}

pub fn verify_theorem(n: usize, budget: &SearchBudget) -> Result<Check> {
    Ok(theorem_check(&classify(n, budget)?))
}

/// Reference automorphism labels against the computed ones for every class
/// whose name appears in the reference tables.
pub fn aut_tables_check(report: &ClassificationReport) -> Result<Check> {
    let name = format!("aut-tables(n={})", report.n);
    let by_name: HashMap<String, &super::ClassRecord> = report
        .records
        .iter()
        .map(|r| (r.name.render(NameStyle::Ascii), r))
        .collect();
    if let Some(unnamed) = report.records.iter().find(|r| {
        r.name.left.starts_with("S:")
            || r.name.right.as_deref().is_some_and(|s| s.starts_with("S:"))
    }) {
        return Err(Error::Unsupported(format!(
            "class {} has an unnamed component",
            unnamed.canon.canon
        )));
    }
    let rows = reference::rows(report.n);
    let mut failures = Vec::new();
    let mut compared = 0;
    for (row, expected) in &rows {
        match by_name.get(*row) {
            None => failures.push((format!("{row}: no such class"), None)),
            Some(rec) => {
                compared += 1;
                if rec.aut_label.as_str() != *expected {
                    failures.push((
                        format!("{row}: expected {expected}, computed {}", rec.aut_label),
                        Some(rec.canon.canon.to_string()),
                    ));
                }
            }
        }
    }
    let detail = format!(
        "{compared} of {} reference rows matched to classes, {} classes unlisted",
        rows.len(),
        report.records.len() - compared
    );
    Ok(Check::from_failures(name, detail, failures))
}

pub fn verify_aut_tables(n: usize, budget: &SearchBudget) -> Result<Check> {
    if n > 3 {
        return Err(Error::Unsupported(format!(
            "no reference tables at order {n}"
        )));
    }
    aut_tables_check(&classify(n, budget)?)
}

fn named(family: Family, params: &[usize]) -> ModelName {
    ModelName::new(family, params).expect("valid parameters")
}

/// `Int(O_X^{+0})` is the null table on `X ∪ {0}` together with `b^{+0}`
/// for every semigroup `b` on `X` whose zero is the zero `z` of `O_X`.
pub fn verify_prop_int_null_plus0(n: usize, budget: &SearchBudget) -> Result<Check> {
    budget.check_order(n)?;
    if n < 2 {
        return Err(Error::Unsupported("O_X^{+0} needs order at least 2".into()));
    }
    let t = build(&named(Family::Null, &[n - 1]).decorated(Decoration::AdjoinZero))?;
    let z = n - 2;
    let actual = set(interassociates_of(&t, budget)?);
    let mut predicted = set([CayleyTable::null(n, n - 1)]);
    for b in enumerate_associative(n - 1, budget)? {
        if zero(&b) == Some(z) {
            predicted.insert(adjoin_zero(&b));
        }
    }
    let failures = compare_sets(&actual, &predicted)
        .into_iter()
        .chain(strong_failures(&t, &actual)?)
        .collect();
    Ok(Check::from_failures(
        format!("int-null-plus-zero(n={n})"),
        format!("{} interassociates", actual.len()),
        failures,
    ))
}

/// Whether `s` satisfies the three conditions characterizing
/// interassociates of `O_X^A` (zero `z`, `A = {0..m-1}`).
fn satisfies_oa_conditions(s: &CayleyTable, m: usize, z: usize) -> bool {
    let n = s.order();
    if zero(s) != Some(z) {
        return false;
    }
    let in_a = |x: usize| x < m;
    // 1) (A ∪ {z}, ⊢) is O^B for some B ⊆ A: off-diagonal products and
    //    non-idempotent squares are z.
    let cond1 = (0..m).all(|x| {
        (0..m).all(|y| {
            let v = s.get(x, y);
            if x == y {
                v == x || v == z
            } else {
                v == z
            }
        })
    });
    // 2) A ⊢ (X∖A) = (X∖A) ⊢ A = {z}.
    let cond2 = (0..n).all(|x| (0..n).all(|y| in_a(x) == in_a(y) || s.get(x, y) == z));
    // 3) X∖A is closed.
    let cond3 = (m..n).all(|x| (m..n).all(|y| !in_a(s.get(x, y))));
    cond1 && cond2 && cond3
}

/// `Int(O_X^A)` is exactly the set of semigroups meeting the three
/// conditions of [`satisfies_oa_conditions`]; all are strong.
pub fn verify_prop_int_oa(n: usize, m: usize, budget: &SearchBudget) -> Result<Check> {
    budget.check_order(n)?;
    if m >= n {
        return Err(Error::InvalidModel(format!("O{{{n},{m}}}")));
    }
    let t = build(&named(Family::Null, &[n, m]))?;
    let actual = set(interassociates_of(&t, budget)?);
    let predicted = set(enumerate_associative(n, budget)?
        .into_iter()
        .filter(|s| satisfies_oa_conditions(s, m, n - 1)));
    let failures = compare_sets(&actual, &predicted)
        .into_iter()
        .chain(strong_failures(&t, &actual)?)
        .collect();
    Ok(Check::from_failures(
        format!("int-null-idempotents(n={n},m={m})"),
        format!("{} interassociates", actual.len()),
        failures,
    ))
}

/// `Int(M^{~1}) = {M^{+1}} ∪ {variants of M^{~1} at a ∈ M}`; for
/// commutative `M` the members are pairwise strong.
pub fn verify_prop_tilde1(monoid: &CayleyTable, budget: &SearchBudget) -> Result<Check> {
    if identity(monoid).is_none() {
        return Err(Error::NotMonoid);
    }
    let t = adjoin_tilde1(monoid)?;
    budget.check_order(t.order())?;
    let actual = set(interassociates_of(&t, budget)?);
    let mut predicted = set([adjoin_identity(monoid)]);
    for a in monoid.elements() {
        predicted.insert(variant(&t, a)?);
    }
    let mut failures: Vec<_> = compare_sets(&actual, &predicted).into_iter().collect();
    if monoid.is_commutative() {
        let mut weak = Vec::new();
        for x in &actual {
            for y in &actual {
                if !is_interassociative(x, y)? || !is_strong_pair(x, y)? {
                    weak.push(x.clone().min(y.clone()));
                }
            }
        }
        if let Some(least) = weak.iter().min() {
            failures.push((
                format!("{} member pairs are not strong", weak.len()),
                Some(least.to_string()),
            ));
        }
    }
    let label = crate::catalog::recognize(monoid)
        .map(|m| m.to_string())
        .unwrap_or_else(|| monoid.to_string());
    Ok(Check::from_failures(
        format!("int-tilde-one({label})"),
        format!("{} interassociates", actual.len()),
        failures,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `Int(LO_X^{+0}) = {LO~0_{A←X} : A ⊆ X}`, pairwise interassociative, with
/// `LO~0_A` strong over `LO~0_B` iff `A = B` or either is empty. The right
/// side is the dual statement.
pub fn verify_prop_int_lo0(n: usize, side: Side, budget: &SearchBudget) -> Result<Check> {
    budget.check_order(n)?;
    if n < 2 {
        return Err(Error::Unsupported(
            "LO_X^{+0} needs order at least 2".into(),
        ));
    }
    let k = n - 1;
    let orient = |t: CayleyTable| match side {
        Side::Left => t,
        Side::Right => t.dual(),
    };
    let base = match side {
        Side::Left => Family::LeftZero,
        Side::Right => Family::RightZero,
    };
    let t = build(&named(base, &[k]).decorated(Decoration::AdjoinZero))?;
    let actual = set(interassociates_of(&t, budget)?);
    let subsets: Vec<Vec<bool>> = (0..1usize << k)
        .map(|mask| (0..k).map(|x| mask >> x & 1 == 1).collect())
        .collect();
    let members: Vec<CayleyTable> = subsets
        .iter()
        .map(|a| orient(left_zero_tilde0(k, a)))
        .collect();
    let predicted = set(members.iter().cloned());
    let mut failures: Vec<_> = compare_sets(&actual, &predicted).into_iter().collect();
    if predicted.len() != 1 << k {
        failures.push((
            format!("predicted set has {} members", predicted.len()),
            None,
        ));
    }
    let mut bad = Vec::new();
    for (a, ta) in subsets.iter().zip(&members) {
        for (b, tb) in subsets.iter().zip(&members) {
            let empty = |s: &[bool]| s.iter().all(|x| !x);
            let expect_strong = a == b || empty(a) || empty(b);
            if !is_interassociative(ta, tb)? || is_strong_pair(ta, tb)? != expect_strong {
                bad.push(ta.clone().min(tb.clone()));
            }
        }
    }
    if let Some(least) = bad.iter().min() {
        failures.push((
            format!("{} pairs violate the strongness criterion", bad.len()),
            Some(least.to_string()),
        ));
    }
    let label = match side {
        Side::Left => "left",
        Side::Right => "right",
    };
    Ok(Check::from_failures(
        format!("int-zero-plus-zero(n={n},{label})"),
        format!("{} interassociates", actual.len()),
        failures,
    ))
}

/// `Int(LOB_n)` is `{LOB_n, LO_{(n-1)←n}}` with the same distinguished pair;
/// both are strong.
pub fn verify_prop_lob(n: usize, budget: &SearchBudget) -> Result<Check> {
    budget.check_order(n)?;
    if n < 2 {
        return Err(Error::Unsupported("LOB needs order at least 2".into()));
    }
    let t = left_band(n, 0, n - 1);
    let actual = set(interassociates_of(&t, budget)?);
    let predicted = set([t.clone(), left_arrow(n, 0, n - 1)]);
    let failures = compare_sets(&actual, &predicted)
        .into_iter()
        .chain(strong_failures(&t, &actual)?)
        .collect();
    Ok(Check::from_failures(
        format!("int-band(n={n})"),
        format!("{} interassociates", actual.len()),
        failures,
    ))
}

/// Isomorphism and automorphism facts checked over every doppelsemigroup of
/// order `n`:
///
/// * null-left doppels are isomorphic iff their right components are;
/// * if every interassociate of `⊣` isomorphic to `⊢` equals `⊢`, the pair of
///   component classes determines the doppel class;
/// * `Aut(D, ⊣, ⊢) = Aut(D, ⊢)` when `⊣` is null or isomorphic to
///   `LO_X^{+0}` or `RO_X^{+0}`.
pub fn verify_props_2x(n: usize, budget: &SearchBudget) -> Result<Vec<Check>> {
    budget.check_order(n)?;
    if n > 3 {
        return Err(Error::Unsupported(format!(
            "exhaustive doppel checks are limited to order 3, got {n}"
        )));
    }
    let doppels = enumerate_doppels(n, budget, Exec::default())?;
    let canon_d: Vec<DoppelTable> = Exec::default().map(&doppels, |d| canonical_doppel(d).canon);
    let mut semi_canon: HashMap<CayleyTable, CayleyTable> = HashMap::new();
    for d in &doppels {
        for t in [d.left(), d.right()] {
            semi_canon
                .entry(t.clone())
                .or_insert_with(|| canonical_semigroup(t).canon);
        }
    }
    let sc = |t: &CayleyTable| &semi_canon[t];

    // Null left component.
    let mut null_pairs: HashMap<&DoppelTable, BTreeSet<&CayleyTable>> = HashMap::new();
    let mut right_to_doppel: HashMap<&CayleyTable, BTreeSet<&DoppelTable>> = HashMap::new();
    for (d, c) in doppels.iter().zip(&canon_d) {
        if is_null(d.left()) {
            null_pairs.entry(c).or_default().insert(sc(d.right()));
            right_to_doppel.entry(sc(d.right())).or_default().insert(c);
        }
    }
    let mut failures = Vec::new();
    for (c, rights) in &null_pairs {
        if rights.len() != 1 {
            failures.push((
                "a doppel class has two right classes".to_string(),
                Some(c.to_string()),
            ));
        }
    }
    for (r, ds) in &right_to_doppel {
        if ds.len() != 1 {
            failures.push((
                format!("right class {r} lies in {} doppel classes", ds.len()),
                ds.iter().next().map(|d| d.to_string()),
            ));
        }
    }
    let null_check = Check::from_failures(
        format!("null-left-isomorphism(n={n})"),
        format!("{} null-left classes", null_pairs.len()),
        failures,
    );

    // Uniqueness from component classes.
    let mut int_of: HashMap<&CayleyTable, Vec<&CayleyTable>> = HashMap::new();
    for d in &doppels {
        int_of.entry(d.left()).or_default().push(d.right());
    }
    let mut by_components: HashMap<(&CayleyTable, &CayleyTable), BTreeSet<&DoppelTable>> =
        HashMap::new();
    for (d, c) in doppels.iter().zip(&canon_d) {
        by_components
            .entry((sc(d.left()), sc(d.right())))
            .or_default()
            .insert(c);
    }
    let mut failures = Vec::new();
    let mut hypothesis_holds = 0;
    for (d, c) in doppels.iter().zip(&canon_d) {
        let rc = sc(d.right());
        let same_class = int_of[d.left()].iter().filter(|b| sc(b) == rc).count();
        if same_class != 1 {
            continue;
        }
        hypothesis_holds += 1;
        let classes = &by_components[&(sc(d.left()), rc)];
        if classes.len() != 1 {
            failures.push((
                format!("{} doppel classes share component classes", classes.len()),
                Some(c.to_string()),
            ));
        }
    }
    let unique_check = Check::from_failures(
        format!("component-uniqueness(n={n})"),
        format!(
            "hypothesis holds for {hypothesis_holds} of {} doppels",
            doppels.len()
        ),
        failures,
    );

    // Automorphism equalities.
    let lo = build(&named(Family::LeftZero, &[n.max(2) - 1]).decorated(Decoration::AdjoinZero))?;
    let lo_canon = canonical_semigroup(&lo).canon;
    let ro_canon = canonical_semigroup(&lo.dual()).canon;
    let mut null_failures = Vec::new();
    let mut lz_failures = Vec::new();
    let (mut null_count, mut lz_count) = (0, 0);
    for (d, c) in doppels.iter().zip(&canon_d) {
        let is_nul = is_null(d.left());
        let is_lz = n >= 2 && (*sc(d.left()) == lo_canon || *sc(d.left()) == ro_canon);
        if !is_nul && !is_lz {
            continue;
        }
        let equal = automorphisms(d).elements() == automorphisms(d.right()).elements();
        let entry = (
            "Aut(D) differs from Aut(D, ⊢)".to_string(),
            Some(c.to_string()),
        );
        if is_nul {
            null_count += 1;
            if !equal {
                null_failures.push(entry.clone());
            }
        }
        if is_lz {
            lz_count += 1;
            if !equal {
                lz_failures.push(entry);
            }
        }
    }
    let aut_null = Check::from_failures(
        format!("aut-null-left(n={n})"),
        format!("{null_count} doppels"),
        null_failures,
    );
    let aut_lz = Check::from_failures(
        format!("aut-zero-plus-zero-left(n={n})"),
        format!("{lz_count} doppels"),
        lz_failures,
    );
    Ok(vec![null_check, unique_check, aut_null, aut_lz])
}

/// Characterization checks at order `n`: every family that has members of
/// that order.
pub fn verify_interassociate_props(n: usize, budget: &SearchBudget) -> Result<Vec<Check>> {
    budget.check_order(n)?;
    let mut checks = Vec::new();
    if n >= 2 {
        checks.push(verify_prop_int_null_plus0(n, budget)?);
        for m in 0..n {
            checks.push(verify_prop_int_oa(n, m, budget)?);
        }
        for rep in semigroup_classes(n - 1, budget)? {
            if identity(&rep.canon).is_some() {
                let named = crate::catalog::recognize(&rep.canon)
                    .and_then(|m| build(&m).ok())
                    .unwrap_or(rep.canon);
                checks.push(verify_prop_tilde1(&named, budget)?);
            }
        }
        checks.push(verify_prop_int_lo0(n, Side::Left, budget)?);
        checks.push(verify_prop_int_lo0(n, Side::Right, budget)?);
        checks.push(verify_prop_lob(n, budget)?);
    }
    Ok(checks)
}

/// Every check up to `max_n`: classification counts, reference automorphism
/// labels and doppel-wide facts for orders up to three, and interassociate
/// characterizations for every order up to `max_n`.
pub fn verify_all(max_n: usize, budget: &SearchBudget) -> Result<Vec<Check>> {
    budget.check_order(max_n)?;
    let mut checks = Vec::new();
    for n in 1..=max_n.min(3) {
        let report = classify(n, budget)?;
        checks.push(theorem_check(&report));
        checks.push(aut_tables_check(&report)?);
        checks.extend(verify_props_2x(n, budget)?);
    }
    for n in 2..=max_n {
        checks.extend(verify_interassociate_props(n, budget)?);
    }
    Ok(checks)
}
