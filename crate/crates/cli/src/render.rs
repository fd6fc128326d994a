//! Text and JSON rendering of sets, tables and reports.

use serde_json::{json, Value};
use unsharp_core::{
    Counterexample, ElemSet, LawReport, MeetSemilattice, OperatorKind, OperatorTable,
};

/// A table cell: singletons are bare, and when every element name is a
/// single character the members are concatenated (`abc`); otherwise the
/// set is written with braces (`{a1,a2}`).
pub fn cell(s: &MeetSemilattice, a: &ElemSet) -> String {
    if let Some(x) = a.as_single() {
        return s.name(x).to_owned();
    }
    if s.names().iter().all(|n| n.chars().count() == 1) {
        a.iter().map(|i| s.name(i)).collect()
    } else {
        s.render(a)
    }
}

pub fn names(s: &MeetSemilattice, a: &ElemSet) -> Vec<String> {
    a.iter().map(|i| s.name(i).to_owned()).collect()
}

/// Rendered cells, row by row with the first argument selecting the row.
pub fn table_cells(s: &MeetSemilattice, t: &OperatorTable) -> Vec<Vec<String>> {
    match t.kind() {
        OperatorKind::Negation => (0..s.len()).map(|a| vec![cell(s, t.neg(a))]).collect(),
        OperatorKind::Implication => (0..s.len())
            .map(|a| t.row(a).iter().map(|v| cell(s, v)).collect())
            .collect(),
    }
}

fn pad(text: &str, width: usize) -> String {
    format!("{text:<width$}")
}

/// Grid layout: a header row of second arguments for implication, a rule,
/// then one row per first argument. Negation has no header.
pub fn table_text(s: &MeetSemilattice, t: &OperatorTable) -> String {
    let cells = table_cells(s, t);
    let label_w = s
        .names()
        .iter()
        .map(|n| n.chars().count())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    match t.kind() {
        OperatorKind::Negation => {
            for (a, row) in cells.iter().enumerate() {
                out.push_str(&format!("{} | {}\n", pad(s.name(a), label_w), row[0]));
            }
        }
        OperatorKind::Implication => {
            let label_w = label_w.max(2);
            let widths: Vec<usize> = (0..s.len())
                .map(|b| {
                    cells
                        .iter()
                        .map(|row| row[b].chars().count())
                        .chain([s.name(b).chars().count()])
                        .max()
                        .unwrap_or(1)
                })
                .collect();
            let join = |items: Vec<String>| items.join(" ").trim_end().to_owned();
            let header: Vec<String> = (0..s.len()).map(|b| pad(s.name(b), widths[b])).collect();
            out.push_str(&format!("{} | {}\n", pad("->", label_w), join(header)));
            let rule_w = widths.iter().sum::<usize>() + widths.len().saturating_sub(1);
            out.push_str(&format!(
                "{}-+-{}\n",
                "-".repeat(label_w),
                "-".repeat(rule_w)
            ));
            for (a, row) in cells.iter().enumerate() {
                let row: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| pad(c, w)).collect();
                out.push_str(&format!("{} | {}\n", pad(s.name(a), label_w), join(row)));
            }
        }
    }
    out
}

pub fn table_json(s: &MeetSemilattice, t: &OperatorTable) -> Value {
    let sets: Vec<Vec<Vec<String>>> = match t.kind() {
        OperatorKind::Negation => (0..s.len()).map(|a| vec![names(s, t.neg(a))]).collect(),
        OperatorKind::Implication => (0..s.len())
            .map(|a| t.row(a).iter().map(|v| names(s, v)).collect())
            .collect(),
    };
    json!({
        "structure": s.label(),
        "kind": t.kind().to_string(),
        "elements": s.names(),
        "cells": table_cells(s, t),
        "sets": sets,
    })
}

pub fn counterexample_json(s: &MeetSemilattice, ce: &Counterexample) -> Value {
    let binding: serde_json::Map<String, Value> = ce
        .binding
        .iter()
        .map(|(var, set)| {
            let v = match set.as_single() {
                Some(x) => json!(s.name(x)),
                None => json!(names(s, set)),
            };
            (var.clone(), v)
        })
        .collect();
    json!({
        "binding": binding,
        "lhs": names(s, &ce.lhs),
        "rhs": names(s, &ce.rhs),
        "relation": ce.relation,
    })
}

fn verdict_str(r: &LawReport) -> &'static str {
    match r.verdict {
        unsharp_core::Verdict::Holds => "holds",
        unsharp_core::Verdict::Fails => "fails",
        unsharp_core::Verdict::Skipped => "skipped",
    }
}

pub fn report_json(s: &MeetSemilattice, r: &LawReport) -> Value {
    json!({
        "subject": r.subject.to_string(),
        "verdict": verdict_str(r),
        "checked": r.checked,
        "counterexample": r.counterexample.as_ref().map(|c| counterexample_json(s, c)),
        "note": r.note,
    })
}

pub fn report_line(s: &MeetSemilattice, r: &LawReport) -> String {
    let mut line = format!("{:<8} {}", r.subject.to_string(), verdict_str(r));
    if r.verdict != unsharp_core::Verdict::Skipped {
        line.push_str(&format!(" ({} checked)", r.checked));
    }
    if let Some(ce) = &r.counterexample {
        line.push_str(&format!(": {}", ce.describe(s)));
    }
    if let Some(note) = &r.note {
        line.push_str(&format!(" [{note}]"));
    }
    line
}
