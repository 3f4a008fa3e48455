//! Enumeration and classification of small semigroups and doppelsemigroups.
//!
//! A doppelsemigroup is a set with two associative operations `⊣` and `⊢`
//! satisfying
//!
//! ```text
//! (x ⊣ y) ⊢ z = x ⊣ (y ⊢ z)
//! (x ⊢ y) ⊣ z = x ⊢ (y ⊣ z)
//! ```
//!
//! Tables are stored as Cayley tables over `0..n`. Isomorphism classes are
//! represented by the lexicographically least relabeling of the table.

pub mod catalog;
pub mod classify;
pub mod encoding;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod iso;
pub mod perm;
pub mod props;
pub mod table;

pub use catalog::{recognize, DoppelName, ModelName, NameStyle};
pub use classify::{classify, classify_with, ClassRecord, ClassificationReport, Counts};
pub use encoding::{parse, Encoded, ParseError};
pub use enumerate::{
    doppel_classes, enumerate_associative, enumerate_doppels, interassociates_of,
    semigroup_classes, SearchBudget,
};
pub use error::{Error, Result};
pub use exec::Exec;
pub use iso::{automorphisms, canonical_doppel, canonical_semigroup, AutGroup, CanonicalForm};
pub use perm::Permutation;
pub use table::{CayleyTable, DoppelTable, Element, SelfMap};
