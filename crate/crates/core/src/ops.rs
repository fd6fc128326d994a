//! Unsharp negation `a⁰ = Max{x | a ∧ x = 0}` and unsharp implication
//! `a → b = Max{x | a ∧ x ≤ b}`, with their set-lifted forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::order::{ElemSet, MeetSemilattice};

/// Unsharp negation of a single element.
pub fn neg(s: &MeetSemilattice, a: usize) -> ElemSet {
    let zero = s.bottom();
    let annihilators: ElemSet = (0..s.len()).filter(|&x| s.meet(a, x) == zero).collect();
    s.max_elements(&annihilators)
}

/// `A⁰`: maximal `x` with `a ∧ x = 0` for every `a ∈ A`.
pub fn neg_set(s: &MeetSemilattice, a: &ElemSet) -> Result<ElemSet> {
    if a.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let zero = s.bottom();
    let annihilators: ElemSet = (0..s.len())
        .filter(|&x| a.iter().all(|y| s.meet(y, x) == zero))
        .collect();
    Ok(s.max_elements(&annihilators))
}

/// Unsharp implication of two elements.
pub fn imp(s: &MeetSemilattice, a: usize, b: usize) -> ElemSet {
    let admissible: ElemSet = (0..s.len()).filter(|&x| s.leq(s.meet(a, x), b)).collect();
    s.max_elements(&admissible)
}

/// `A → B`: maximal `x` with `A ∧ {x} ≤ B` in the all-pairs sense.
pub fn imp_set(s: &MeetSemilattice, a: &ElemSet, b: &ElemSet) -> Result<ElemSet> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let admissible: ElemSet = (0..s.len())
        .filter(|&x| a.iter().all(|y| b.iter().all(|z| s.leq(s.meet(y, x), z))))
        .collect();
    Ok(s.max_elements(&admissible))
}

/// `a⁰⁰`, i.e. the negation of the set `a⁰`.
pub fn double_neg(s: &MeetSemilattice, a: usize) -> ElemSet {
    neg_set(s, &neg(s, a)).expect("negation is never empty")
}

/// `a` is sharp when `a⁰⁰ = {a}`.
pub fn is_sharp(s: &MeetSemilattice, a: usize) -> bool {
    double_neg(s, a).as_single() == Some(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Negation,
    Implication,
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperatorKind::Negation => "negation",
            OperatorKind::Implication => "implication",
        })
    }
}

/// A materialized operator: one set per element (negation) or per ordered
/// pair (implication, row-major with the first argument as row).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorTable {
    kind: OperatorKind,
    size: usize,
    entries: Vec<ElemSet>,
}

impl OperatorTable {
    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    /// Carrier size the table was built for.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of inputs: `n` for negation, `n²` for implication.
    pub fn input_count(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[ElemSet] {
        &self.entries
    }

    /// Entry at a flat input index.
    pub fn entry(&self, input: usize) -> &ElemSet {
        &self.entries[input]
    }

    pub fn set_entry(&mut self, input: usize, value: ElemSet) {
        self.entries[input] = value;
    }

    /// The negation of `a`. Panics on an implication table.
    pub fn neg(&self, a: usize) -> &ElemSet {
        assert_eq!(self.kind, OperatorKind::Negation);
        &self.entries[a]
    }

    /// `a → b`. Panics on a negation table.
    pub fn imp(&self, a: usize, b: usize) -> &ElemSet {
        assert_eq!(self.kind, OperatorKind::Implication);
        &self.entries[a * self.size + b]
    }

    /// Splits a flat input index into its arguments.
    pub fn arguments(&self, input: usize) -> Vec<usize> {
        match self.kind {
            OperatorKind::Negation => vec![input],
            OperatorKind::Implication => vec![input / self.size, input % self.size],
        }
    }

    pub fn row(&self, a: usize) -> &[ElemSet] {
        match self.kind {
            OperatorKind::Negation => std::slice::from_ref(&self.entries[a]),
            OperatorKind::Implication => &self.entries[a * self.size..(a + 1) * self.size],
        }
    }
}

pub fn make_table(s: &MeetSemilattice, kind: OperatorKind) -> OperatorTable {
    let n = s.len();
    let entries = match kind {
        OperatorKind::Negation => (0..n).map(|a| neg(s, a)).collect(),
        OperatorKind::Implication => (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| imp(s, a, b))
            .collect(),
    };
    OperatorTable {
        kind,
        size: n,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> MeetSemilattice {
        MeetSemilattice::build(&["0", "a", "b", "c"], &[("0", "a"), ("0", "b"), ("0", "c")])
            .unwrap()
    }

    #[test]
    fn zero_negation_is_all_atoms() {
        let s = fig1();
        assert_eq!(neg(&s, 0), ElemSet::from_iter([1, 2, 3]));
    }

    #[test]
    fn empty_operands_are_rejected() {
        let s = fig1();
        assert_eq!(neg_set(&s, &ElemSet::empty()), Err(Error::EmptyOperand));
        assert_eq!(
            imp_set(&s, &ElemSet::empty(), &ElemSet::singleton(0)),
            Err(Error::EmptyOperand)
        );
        assert_eq!(
            imp_set(&s, &ElemSet::singleton(0), &ElemSet::empty()),
            Err(Error::EmptyOperand)
        );
    }

    #[test]
    fn bottom_is_sharp_in_fig1() {
        let s = fig1();
        assert!(is_sharp(&s, 0));
        assert!(is_sharp(&s, 1));
    }

    #[test]
    fn negation_is_implication_into_zero() {
        let s = fig1();
        for a in 0..s.len() {
            assert_eq!(neg(&s, a), imp(&s, a, s.bottom()));
        }
    }

    #[test]
    fn singleton_tables() {
        let s = MeetSemilattice::build::<&str>(&["0"], &[]).unwrap();
        let t = make_table(&s, OperatorKind::Negation);
        assert_eq!(t.entries(), &[ElemSet::singleton(0)]);
        let t = make_table(&s, OperatorKind::Implication);
        assert_eq!(t.input_count(), 1);
    }

    #[test]
    fn table_indexing() {
        let s = fig1();
        let t = make_table(&s, OperatorKind::Implication);
        assert_eq!(t.imp(2, 0), &ElemSet::from_iter([1, 3]));
        assert_eq!(t.arguments(2 * 4 + 3), vec![2, 3]);
        assert_eq!(t.row(2).len(), 4);
    }
}
