use std::fmt::Write as _;

use serde::Serialize;

use super::{ClassRecord, ClassificationReport};
use crate::catalog::NameStyle;

#[derive(Serialize)]
struct Row<'a> {
    id: usize,
    name: String,
    canon_left: String,
    canon_right: String,
    commutative: bool,
    strong: bool,
    trivial: bool,
    aut_label: &'a str,
    aut_order: usize,
    dual_id: usize,
    swap_id: usize,
}

impl<'a> Row<'a> {
    fn new(r: &'a ClassRecord, style: NameStyle) -> Self {
        Row {
            id: r.id,
            name: r.name.render(style),
            canon_left: r.canon.canon.left().to_string(),
            canon_right: r.canon.canon.right().to_string(),
            commutative: r.commutative,
            strong: r.strong,
            trivial: r.trivial,
            aut_label: r.aut_label.as_str(),
            aut_order: r.aut_order,
            dual_id: r.dual_id,
            swap_id: r.swap_id,
        }
    }
}

#[derive(Serialize)]
struct CountsOut {
    total: usize,
    commutative: usize,
    strong: usize,
    trivial: usize,
    dual_pairs: usize,
}

#[derive(Serialize)]
struct Report<'a> {
    n: usize,
    counts: CountsOut,
    records: Vec<Row<'a>>,
}

pub fn to_json(report: &ClassificationReport, style: NameStyle) -> String {
    let c = report.counts;
    let out = Report {
        n: report.n,
        counts: CountsOut {
            total: c.total,
            commutative: c.commutative,
            strong: c.strong,
            trivial: c.trivial,
            dual_pairs: c.dual_pairs,
        },
        records: report.records.iter().map(|r| Row::new(r, style)).collect(),
    };
    let mut s = serde_json::to_string_pretty(&out).expect("report serializes");
    s.push('\n');
    s
}

pub fn to_csv(report: &ClassificationReport, style: NameStyle) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &report.records {
        w.serialize(Row::new(r, style)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// Markdown tables grouped as trivial, commutative non-trivial, strong
/// non-commutative, and non-strong classes.
pub fn to_markdown(report: &ClassificationReport, style: NameStyle) -> String {
    let c = report.counts;
    let mut s = String::new();
    let _ = writeln!(s, "# Doppelsemigroups of order {}\n", report.n);
    let _ = writeln!(
        s,
        "{} classes: {} commutative, {} strong, {} trivial, {} dual pairs.\n",
        c.total, c.commutative, c.strong, c.trivial, c.dual_pairs
    );
    type Keep = fn(&ClassRecord) -> bool;
    let groups: [(&str, Keep); 4] = [
        ("Trivial", |r| r.trivial),
        ("Commutative non-trivial", |r| !r.trivial && r.commutative),
        ("Strong non-commutative", |r| {
            !r.trivial && !r.commutative && r.strong
        }),
        ("Non-strong", |r| !r.strong),
    ];
    for (title, keep) in groups {
        let rows: Vec<&ClassRecord> = report.records.iter().filter(|r| keep(r)).collect();
        if rows.is_empty() {
            continue;
        }
        let _ = writeln!(s, "## {title} ({})\n", rows.len());
        let _ = writeln!(s, "| id | D | Aut(D) | dual | swap | canonical form |");
        let _ = writeln!(s, "|---:|---|---|---:|---:|---|");
        for r in rows {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} | `{}` |",
                r.id,
                r.name.render(style),
                r.aut_label,
                r.dual_id,
                r.swap_id,
                r.canon.canon
            );
        }
        s.push('\n');
    }
    s
}

/// One line per class: id, name, flags, automorphism group, canonical form.
pub fn to_text(report: &ClassificationReport, style: NameStyle) -> String {
    let mut s = String::new();
    for r in &report.records {
        let flag = |b: bool, c: char| if b { c } else { '-' };
        let _ = writeln!(
            s,
            "{:>3} {}{}{} {:<4} {} {}",
            r.id,
            flag(r.commutative, 'c'),
            flag(r.strong, 's'),
            flag(r.trivial, 't'),
            r.aut_label.as_str(),
            r.name.render(style),
            r.canon.canon
        );
    }
    let c = report.counts;
    let _ = writeln!(
        s,
        "total={} commutative={} strong={} trivial={} dual_pairs={}",
        c.total, c.commutative, c.strong, c.trivial, c.dual_pairs
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::enumerate::SearchBudget;

    #[test]
    fn json_schema_and_csv_columns() {
        let r = classify(2, &SearchBudget::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_json(&r, NameStyle::Ascii)).unwrap();
        assert_eq!(v["n"], 2);
        assert_eq!(v["counts"]["total"], 8);
        assert_eq!(v["records"].as_array().unwrap().len(), 8);
        let rec = &v["records"][0];
        for key in [
            "id",
            "name",
            "canon_left",
            "canon_right",
            "commutative",
            "strong",
            "trivial",
            "aut_label",
            "aut_order",
            "dual_id",
            "swap_id",
        ] {
            assert!(rec.get(key).is_some(), "{key}");
        }
        let csv = to_csv(&r, NameStyle::Ascii);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "id,name,canon_left,canon_right,commutative,strong,trivial,aut_label,aut_order,dual_id,swap_id"
        );
        assert_eq!(lines.count(), 8);
    }

    #[test]
    fn markdown_groups_in_order() {
        let r = classify(2, &SearchBudget::default()).unwrap();
        let md = to_markdown(&r, NameStyle::Unicode);
        let t = md.find("## Trivial").unwrap();
        let c = md.find("## Commutative non-trivial").unwrap();
        assert!(t < c);
        assert!(!md.contains("## Non-strong"));
        assert!(md.contains("C{2}⋈C{2}#2"));
    }
}
