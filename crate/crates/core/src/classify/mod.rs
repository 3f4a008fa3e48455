//! Full classification of doppelsemigroups of a given order.

mod export;
pub mod reference;
pub mod verify;

use std::collections::HashMap;

pub use export::{to_csv, to_json, to_markdown, to_text};
pub use verify::{Check, Outcome};

use crate::catalog::{assign_names, DoppelName};
use crate::enumerate::{doppel_classes_with, SearchBudget};
use crate::error::Result;
use crate::exec::Exec;
use crate::iso::{automorphisms, canonical_doppel, CanonicalForm, GroupLabel};
use crate::table::DoppelTable;

/// One isomorphism class of doppelsemigroups.
#[derive(Clone, Debug)]
pub struct ClassRecord {
    pub id: usize,
    pub canon: CanonicalForm<DoppelTable>,
    pub name: DoppelName,
    pub commutative: bool,
    pub strong: bool,
    pub trivial: bool,
    pub aut_label: GroupLabel,
    pub aut_order: usize,
    /// Id of the class of the dual doppel; equal to `id` when self-dual.
    pub dual_id: usize,
    /// Id of the class of `(D, ⊢, ⊣)`.
    pub swap_id: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub total: usize,
    pub commutative: usize,
    pub strong: usize,
    pub trivial: usize,
    pub dual_pairs: usize,
}

impl Counts {
    pub fn from_records(records: &[ClassRecord]) -> Self {
        let count = |f: fn(&ClassRecord) -> bool| records.iter().filter(|r| f(r)).count();
        Counts {
            total: records.len(),
            commutative: count(|r| r.commutative),
            strong: count(|r| r.strong),
            trivial: count(|r| r.trivial),
            dual_pairs: count(|r| r.dual_id != r.id) / 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub n: usize,
    pub records: Vec<ClassRecord>,
    pub counts: Counts,
}

impl ClassificationReport {
    pub fn by_name(&self, name: &str) -> Option<&ClassRecord> {
        self.records.iter().find(|r| {
            r.name.render(crate::catalog::NameStyle::Ascii) == name || r.name.to_string() == name
        })
    }
}

pub fn classify(n: usize, budget: &SearchBudget) -> Result<ClassificationReport> {
    classify_with(n, budget, Exec::default())
}

/// Records are ordered by canonical form, so ids are stable across runs and
/// execution modes.
pub fn classify_with(n: usize, budget: &SearchBudget, exec: Exec) -> Result<ClassificationReport> {
    let classes = doppel_classes_with(n, budget, exec)?;
    let canons: Vec<DoppelTable> = classes.iter().map(|c| c.canon.clone()).collect();
    let names = assign_names(&canons);
    let index: HashMap<&DoppelTable, usize> =
        canons.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let id_of = |d: &DoppelTable| index[&canonical_doppel(d).canon];

    let derived = exec.map(&canons, |d| {
        let aut = automorphisms(d);
        (
            aut.label().clone(),
            aut.order(),
            id_of(&d.dual()),
            id_of(&d.swapped()),
        )
    });

    let records: Vec<ClassRecord> = classes
        .into_iter()
        .zip(names)
        .zip(derived)
        .enumerate()
        .map(
            |(id, ((canon, name), (aut_label, aut_order, dual_id, swap_id)))| {
                let d = &canon.canon;
                ClassRecord {
                    id,
                    commutative: d.is_commutative(),
                    strong: d.is_strong(),
                    trivial: d.is_trivial(),
                    canon,
                    name,
                    aut_label,
                    aut_order,
                    dual_id,
                    swap_id,
                }
            },
        )
        .collect();
    let counts = Counts::from_records(&records);
    Ok(ClassificationReport { n, records, counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_and_two_counts() {
        let r1 = classify(1, &SearchBudget::default()).unwrap();
        assert_eq!(
            r1.counts,
            Counts {
                total: 1,
                commutative: 1,
                strong: 1,
                trivial: 1,
                dual_pairs: 0
            }
        );
        let r2 = classify(2, &SearchBudget::default()).unwrap();
        assert_eq!(
            r2.counts,
            Counts {
                total: 8,
                commutative: 6,
                strong: 8,
                trivial: 5,
                dual_pairs: 1
            }
        );
    }

    #[test]
    fn pairings_are_involutions() {
        let r = classify(3, &SearchBudget::default()).unwrap();
        for rec in &r.records {
            assert_eq!(r.records[rec.dual_id].dual_id, rec.id);
            assert_eq!(r.records[rec.swap_id].swap_id, rec.id);
            assert_eq!(r.records[rec.swap_id].aut_label, rec.aut_label);
            assert_eq!(r.records[rec.dual_id].strong, rec.strong);
            assert_eq!(r.records[rec.swap_id].strong, rec.strong);
            if rec.commutative {
                assert_eq!(rec.dual_id, rec.id);
            }
            if rec.trivial {
                assert!(rec.strong);
                assert_eq!(rec.swap_id, rec.id);
            }
        }
        assert_eq!(Counts::from_records(&r.records), r.counts);
        assert_eq!(r.counts.total - r.counts.commutative, 2 * r.counts.dual_pairs);
    }

    #[test]
    fn modes_agree() {
        let budget = SearchBudget::default();
        let a = classify_with(3, &budget, Exec::Sequential).unwrap();
        let b = classify_with(3, &budget, Exec::Parallel).unwrap();
        assert_eq!(
            to_json(&a, Default::default()),
            to_json(&b, Default::default())
        );
    }

    #[test]
    fn budget_is_enforced() {
        assert!(classify(4, &SearchBudget::default()).is_err());
    }
}
