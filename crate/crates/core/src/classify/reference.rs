//! Reference automorphism groups of the named doppelsemigroup classes of
//! orders two and three, keyed by ASCII doppel name.

/// Two-element doppelsemigroups.
pub const ORDER_2: &[(&str, &str)] = &[
    ("C{2}", "C_1"),
    ("O{2}", "C_1"),
    ("L{2}", "C_1"),
    ("C{2}><C{2}#2", "C_1"),
    ("O{2}><L{2}", "C_1"),
    ("L{2}><O{2}", "C_1"),
    ("LO{2}", "C_2"),
    ("RO{2}", "C_2"),
];

/// Trivial three-element doppelsemigroups, i.e. the semigroups of order three.
pub const TRIVIAL_3: &[(&str, &str)] = &[
    ("C{3}", "C_2"),
    ("O{3}", "C_2"),
    ("M{2,2}", "C_1"),
    ("C{2}+1", "C_1"),
    ("C{2}~1", "C_1"),
    ("M{3,1}", "C_1"),
    ("O{2}+1", "C_1"),
    ("O{2}+0", "C_1"),
    ("L{3}", "C_1"),
    ("C{2}+0", "C_1"),
    ("O{3,2}", "C_2"),
    ("O{3,1}", "C_1"),
    ("LO{3}", "S_3"),
    ("RO{3}", "S_3"),
    ("LO{2}+0", "C_2"),
    ("RO{2}+0", "C_2"),
    ("LO~0{1,2}", "C_1"),
    ("RO~0{1,2}", "C_1"),
    ("LO{2}+1", "C_2"),
    ("RO{2}+1", "C_2"),
    ("LOB{3}", "C_1"),
    ("ROB{3}", "C_1"),
    ("LOarrow{2,3}", "C_2"),
    ("ROarrow{2,3}", "C_2"),
];

/// Non-trivial commutative three-element doppelsemigroups (all strong).
pub const COMMUTATIVE_3: &[(&str, &str)] = &[
    ("C{3}><C{3}#2", "C_1"),
    ("O{3}><M{3,1}", "C_1"),
    ("O{3}><O{2}+1", "C_1"),
    ("O{3}><O{2}+0", "C_1"),
    ("O{3}><L{3}", "C_1"),
    ("O{3}><C{2}+0", "C_1"),
    ("O{3}><O{3,2}", "C_2"),
    ("O{3}><O{3,1}", "C_1"),
    ("M{2,2}><C{2}+1", "C_1"),
    ("M{2,2}><C{2}~1", "C_1"),
    ("C{2}+1><C{2}~1", "C_1"),
    ("C{2}+1><M{2,2}", "C_1"),
    ("C{2}~1><M{2,2}", "C_1"),
    ("C{2}~1><C{2}+1", "C_1"),
    ("M{3,1}><O{2}+1", "C_1"),
    ("M{3,1}><O{3}", "C_1"),
    ("O{2}+1><M{3,1}", "C_1"),
    ("O{2}+1><O{3}", "C_1"),
    ("O{2}+0><L{3}", "C_1"),
    ("O{2}+0><O{3}", "C_1"),
    ("L{3}><O{3}", "C_1"),
    ("L{3}><O{2}+0", "C_1"),
    ("C{2}+0><C{2}+0#2", "C_1"),
    ("C{2}+0><O{3}", "C_1"),
    ("O{3,2}><O{3,1}", "C_1"),
    ("O{3,2}><O{3}", "C_2"),
    ("O{3,1}><O{3,1}#2", "C_1"),
    ("O{3,1}><O{3,2}", "C_1"),
    ("O{3,1}><O{3}", "C_1"),
];

/// Non-trivial, non-commutative, strong three-element doppelsemigroups.
pub const STRONG_NONCOMMUTATIVE_3: &[(&str, &str)] = &[
    ("O{3}><LO{2}+0", "C_2"),
    ("O{3}><RO{2}+0", "C_2"),
    ("O{3}><LO~0{1,2}", "C_1"),
    ("O{3}><RO~0{1,2}", "C_1"),
    ("LO{2}+0><O{3}", "C_2"),
    ("RO{2}+0><O{3}", "C_2"),
    ("LO~0{1,2}><O{3}", "C_1"),
    ("RO~0{1,2}><O{3}", "C_1"),
    ("LOB{3}><LOarrow{2,3}", "C_1"),
    ("ROB{3}><ROarrow{2,3}", "C_1"),
    ("LOarrow{2,3}><LOB{3}", "C_1"),
    ("ROarrow{2,3}><ROB{3}", "C_1"),
];

/// Non-strong three-element doppelsemigroups.
pub const NON_STRONG_3: &[(&str, &str)] = &[
    ("LO{2}+0><LO~0{1,2}", "C_1"),
    ("RO{2}+0><RO~0{1,2}", "C_1"),
    ("LO~0{1,2}><LO{2}+0", "C_1"),
    ("RO~0{1,2}><RO{2}+0", "C_1"),
    ("LO~0{1,2}><LO~0{1,2}#2", "C_1"),
    ("RO~0{1,2}><RO~0{1,2}#2", "C_1"),
    ("LO{2}+1><LOarrow{2,3}", "C_2"),
    ("RO{2}+1><ROarrow{2,3}", "C_2"),
    ("LOarrow{2,3}><LO{2}+1", "C_2"),
    ("ROarrow{2,3}><RO{2}+1", "C_2"),
];

/// Expected counts `{total, commutative, strong, trivial, dual_pairs}` of
/// the published classification.
pub const COUNTS_3: [usize; 5] = [75, 41, 65, 24, 17];
pub const COUNTS_2: [usize; 5] = [8, 6, 8, 5, 1];
pub const COUNTS_1: [usize; 5] = [1, 1, 1, 1, 0];

/// All reference rows for order `n` (empty outside `1..=3`).
pub fn rows(n: usize) -> Vec<(&'static str, &'static str)> {
    match n {
        1 => vec![("C{1}", "C_1")],
        2 => ORDER_2.to_vec(),
        3 => [
            TRIVIAL_3,
            COMMUTATIVE_3,
            STRONG_NONCOMMUTATIVE_3,
            NON_STRONG_3,
        ]
        .concat(),
        _ => Vec::new(),
    }
}

pub fn counts(n: usize) -> Option<[usize; 5]> {
    match n {
        1 => Some(COUNTS_1),
        2 => Some(COUNTS_2),
        3 => Some(COUNTS_3),
        _ => None,
    }
}
