//! Filters, deductive systems, the relation `Θ(A)` and congruences of a
//! finite meet-semilattice.

use std::fmt;

use crate::error::{Error, Result};
use crate::laws::{Counterexample, LawReport, Subject, Violation};
use crate::ops::{imp, make_table, OperatorKind};
use crate::order::{ElemSet, MeetSemilattice};

/// Largest carrier for which subsets are scanned exhaustively.
pub const SUBSET_SCAN_LIMIT: usize = 15;
/// Largest carrier for which all partitions are enumerated.
pub const PARTITION_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubsetRole {
    Raw,
    Filter,
    DeductiveSystem,
}

/// A subset of the carrier with the strongest role it has been verified to
/// play.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CarrierSubset {
    members: ElemSet,
    role: SubsetRole,
}

impl CarrierSubset {
    pub fn raw(members: ElemSet) -> Self {
        CarrierSubset {
            members,
            role: SubsetRole::Raw,
        }
    }

    /// Tags `members` as a filter if it is one.
    pub fn filter(s: &MeetSemilattice, members: ElemSet) -> Option<Self> {
        is_filter(s, &members).then_some(CarrierSubset {
            members,
            role: SubsetRole::Filter,
        })
    }

    pub fn deductive_system(s: &MeetSemilattice, members: ElemSet) -> Option<Self> {
        is_deductive_system(s, &members).then_some(CarrierSubset {
            members,
            role: SubsetRole::DeductiveSystem,
        })
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn role(&self) -> SubsetRole {
        self.role
    }
}

/// Non-empty, closed under meets, closed upwards.
pub fn is_filter(s: &MeetSemilattice, f: &ElemSet) -> bool {
    !f.is_empty()
        && f.iter().all(|x| f.iter().all(|y| f.contains(s.meet(x, y))))
        && f.iter()
            .all(|x| (0..s.len()).all(|y| !s.leq(x, y) || f.contains(y)))
}

/// `(Max S) ∩ D ≠ ∅`, and `x ∈ D` with `(x → y) ∩ D ≠ ∅` forces `y ∈ D`.
pub fn is_deductive_system(s: &MeetSemilattice, d: &ElemSet) -> bool {
    deductive_with(s, d, |x, y| imp(s, x, y))
}

fn deductive_with<E: std::borrow::Borrow<ElemSet>>(
    s: &MeetSemilattice,
    d: &ElemSet,
    imp: impl Fn(usize, usize) -> E,
) -> bool {
    s.maximal().intersects(d)
        && d.iter()
            .all(|x| (0..s.len()).all(|y| d.contains(y) || !imp(x, y).borrow().intersects(d)))
}

/// A relation on the carrier, stored densely.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryRelation {
    size: usize,
    pairs: Vec<bool>,
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<(usize, usize)> = self.pairs().collect();
        f.debug_struct("BinaryRelation")
            .field("size", &self.size)
            .field("pairs", &pairs)
            .finish()
    }
}

impl BinaryRelation {
    pub fn empty(size: usize) -> Self {
        BinaryRelation {
            size,
            pairs: vec![false; size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |x, y| x == y)
    }

    pub fn total(size: usize) -> Self {
        Self::from_fn(size, |_, _| true)
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(size);
        for x in 0..size {
            for y in 0..size {
                r.pairs[x * size + y] = f(x, y);
            }
        }
        r
    }

    /// The equivalence whose classes are given by `block[x]`.
    pub fn from_blocks(block: &[usize]) -> Self {
        Self::from_fn(block.len(), |x, y| block[x] == block[y])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.pairs[x * self.size + y]
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.pairs[x * self.size + y] = true;
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.size;
        (0..n * n)
            .filter(move |&k| self.pairs[k])
            .map(move |k| (k / n, k % n))
    }

    pub fn is_subset(&self, other: &BinaryRelation) -> bool {
        self.pairs.iter().zip(&other.pairs).all(|(&a, &b)| !a || b)
    }

    pub fn is_equivalence(&self) -> bool {
        let n = self.size;
        (0..n).all(|x| self.contains(x, x))
            && self.pairs().all(|(x, y)| self.contains(y, x))
            && self
                .pairs()
                .all(|(x, y)| (0..n).all(|z| !self.contains(y, z) || self.contains(x, z)))
    }

    /// Equivalence classes in order of their least member.
    pub fn classes(&self) -> Result<Vec<ElemSet>> {
        if !self.is_equivalence() {
            return Err(Error::NotEquivalence);
        }
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for x in 0..self.size {
            if !seen[x] {
                let class: ElemSet = (0..self.size).filter(|&y| self.contains(x, y)).collect();
                for y in &class {
                    seen[y] = true;
                }
                out.push(class);
            }
        }
        Ok(out)
    }
}

/// `Θ(A)`: `x` and `y` are related when `x ∧ a = y ∧ a` for some `a ∈ A`.
pub fn theta(s: &MeetSemilattice, a: &ElemSet) -> Result<BinaryRelation> {
    if a.is_empty() {
        return Err(Error::EmptyOperand);
    }
    Ok(BinaryRelation::from_fn(s.len(), |x, y| {
        a.iter().any(|w| s.meet(x, w) == s.meet(y, w))
    }))
}

/// A meet-compatible equivalence.
pub fn is_congruence(s: &MeetSemilattice, r: &BinaryRelation) -> bool {
    r.size() == s.len()
        && r.is_equivalence()
        && r.pairs()
            .all(|(x, y)| (0..s.len()).all(|f| r.contains(s.meet(x, f), s.meet(y, f))))
}

/// The class of `x` under an equivalence.
pub fn class_of(r: &BinaryRelation, x: usize) -> Result<ElemSet> {
    if !r.is_equivalence() {
        return Err(Error::NotEquivalence);
    }
    Ok((0..r.size()).filter(|&y| r.contains(x, y)).collect())
}

/// `[x)`.
pub fn principal_filter(s: &MeetSemilattice, x: usize) -> ElemSet {
    s.poset().up_set(x)
}

/// All filters; in a finite meet-semilattice these are the principal ones,
/// listed by generator in declaration order.
pub fn enumerate_filters(s: &MeetSemilattice) -> Vec<CarrierSubset> {
    (0..s.len())
        .map(|x| CarrierSubset {
            members: principal_filter(s, x),
            role: SubsetRole::Filter,
        })
        .collect()
}

fn check_scan_size(s: &MeetSemilattice, limit: usize) -> Result<()> {
    if s.len() > limit {
        return Err(Error::TooLarge {
            size: s.len(),
            limit,
        });
    }
    Ok(())
}

/// Non-empty subsets in increasing bitmask order.
fn nonempty_subsets(n: usize) -> impl Iterator<Item = ElemSet> {
    (1u64..1 << n).map(move |m| ElemSet::from_mask(m, n))
}

/// Every subset satisfying the deductive-system conditions, by subset scan.
pub fn enumerate_deductive_systems(s: &MeetSemilattice) -> Result<Vec<CarrierSubset>> {
    check_scan_size(s, SUBSET_SCAN_LIMIT)?;
    let table = make_table(s, OperatorKind::Implication);
    Ok(nonempty_subsets(s.len())
        .filter(|d| deductive_with(s, d, |x, y| table.imp(x, y)))
        .map(|members| CarrierSubset {
            members,
            role: SubsetRole::DeductiveSystem,
        })
        .collect())
}

/// Restricted growth strings of length `n`, i.e. set partitions.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let next = if prefix.is_empty() { 0 } else { max + 1 };
        for b in 0..=next {
            prefix.push(b);
            go(prefix, max.max(b), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

/// All congruences, by filtering every partition of the carrier.
pub fn enumerate_congruences(s: &MeetSemilattice) -> Result<Vec<BinaryRelation>> {
    check_scan_size(s, PARTITION_LIMIT)?;
    Ok(partitions(s.len())
        .iter()
        .map(|blocks| BinaryRelation::from_blocks(blocks))
        .filter(|r| is_congruence(s, r))
        .collect())
}

fn subset_counterexample(
    d: &ElemSet,
    lhs: ElemSet,
    rhs: ElemSet,
    relation: &str,
) -> Counterexample {
    Counterexample {
        binding: vec![("D".into(), d.clone())],
        lhs,
        rhs,
        relation: relation.into(),
    }
}

/// On a bounded structure, checks for every non-empty subset `D` that being
/// a deductive system, being a filter, and `Θ(D)` being a congruence with
/// top class `D` all coincide.
pub fn check_th3(s: &MeetSemilattice) -> Result<LawReport> {
    let top = s
        .top()
        .ok_or_else(|| Error::RequiresBounded("the deductive-system equivalence".into()))?;
    check_scan_size(s, SUBSET_SCAN_LIMIT)?;
    let table = make_table(s, OperatorKind::Implication);
    let mut checked = 0;
    for d in nonempty_subsets(s.len()) {
        checked += 1;
        let dsys = deductive_with(s, &d, |x, y| table.imp(x, y));
        let filter = is_filter(s, &d);
        let th = theta(s, &d)?;
        let congruence = is_congruence(s, &th);
        let top_class = if congruence {
            class_of(&th, top)?
        } else {
            ElemSet::empty()
        };
        let third = congruence && top_class == d;
        if dsys != filter || filter != third {
            let note = format!(
                "deductive system: {dsys}, filter: {filter}, congruence with top class: {third}"
            );
            let ce = subset_counterexample(&d, d.clone(), top_class, "conditions disagree");
            return Ok(
                LawReport::new(Subject::DeductiveSystems, s, checked, Some(ce)).with_note(note),
            );
        }
    }
    Ok(LawReport::new(Subject::DeductiveSystems, s, checked, None)
        .with_note(format!("equivalence holds ({checked} subsets checked)")))
}

/// For every congruence `Φ`, the class of the top is a filter and
/// `Θ([1]Φ) ⊆ Φ`.
pub fn check_lemma1(s: &MeetSemilattice) -> Result<LawReport> {
    let top = s
        .top()
        .ok_or_else(|| Error::RequiresBounded("the top-class lemma".into()))?;
    let congruences = enumerate_congruences(s)?;
    let mut checked = 0;
    for phi in &congruences {
        checked += 1;
        let class = class_of(phi, top)?;
        if !is_filter(s, &class) {
            let ce = subset_counterexample(&class, class.clone(), class.clone(), "not a filter");
            return Ok(LawReport::new(Subject::TopClasses, s, checked, Some(ce)));
        }
        let th = theta(s, &class)?;
        let escaped = th.pairs().find(|&(x, y)| !phi.contains(x, y));
        if let Some((x, y)) = escaped {
            let ce = Counterexample::for_elements(
                &["x", "y"],
                &[x, y],
                Violation {
                    lhs: class.clone(),
                    rhs: class_of(phi, x)?,
                    relation: "related by theta but not by the congruence",
                },
            );
            return Ok(LawReport::new(Subject::TopClasses, s, checked, Some(ce)));
        }
    }
    Ok(LawReport::new(Subject::TopClasses, s, checked, None)
        .with_note(format!("{checked} congruences checked")))
}

/// For a filter `F`: `(a, b) ∈ Θ(F)` iff both `a → b` and `b → a` meet `F`.
pub fn check_proposition(s: &MeetSemilattice, f: &ElemSet) -> Result<LawReport> {
    if !is_filter(s, f) {
        return Err(Error::NotAFilter);
    }
    let th = theta(s, f)?;
    let table = make_table(s, OperatorKind::Implication);
    let mut checked = 0;
    for a in 0..s.len() {
        for b in 0..s.len() {
            checked += 1;
            let related = th.contains(a, b);
            let detected = table.imp(a, b).intersects(f) && table.imp(b, a).intersects(f);
            if related != detected {
                let ce = Counterexample::for_elements(
                    &["x", "y"],
                    &[a, b],
                    Violation {
                        lhs: table.imp(a, b).clone(),
                        rhs: table.imp(b, a).clone(),
                        relation: if related {
                            "related by theta, but an implication set misses F"
                        } else {
                            "both implication sets meet F, but not related by theta"
                        },
                    },
                );
                return Ok(LawReport::new(
                    Subject::FilterImplication,
                    s,
                    checked,
                    Some(ce),
                ));
            }
        }
    }
    Ok(LawReport::new(Subject::FilterImplication, s, checked, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> MeetSemilattice {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let covers: Vec<(String, String)> = (1..n)
            .map(|i| ((i - 1).to_string(), i.to_string()))
            .collect();
        MeetSemilattice::build(&names, &covers).unwrap()
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate().skip(1) {
            assert_eq!(partitions(n).len(), b, "n = {n}");
        }
    }

    #[test]
    fn two_chain_congruences() {
        let s = chain(2);
        let cons = enumerate_congruences(&s).unwrap();
        assert_eq!(cons.len(), 2);
        assert!(cons.contains(&BinaryRelation::identity(2)));
        assert!(cons.contains(&BinaryRelation::total(2)));
    }

    #[test]
    fn chain_filters() {
        for n in 1..6 {
            assert_eq!(enumerate_filters(&chain(n)).len(), n);
        }
    }

    #[test]
    fn empty_subset_is_not_a_filter() {
        assert!(!is_filter(&chain(3), &ElemSet::empty()));
        assert_eq!(
            theta(&chain(3), &ElemSet::empty()),
            Err(Error::EmptyOperand)
        );
    }

    #[test]
    fn theta_of_bottom_is_total() {
        let s = chain(4);
        assert_eq!(
            theta(&s, &ElemSet::singleton(0)).unwrap(),
            BinaryRelation::total(4)
        );
        assert_eq!(theta(&s, &s.carrier()).unwrap(), BinaryRelation::total(4));
    }

    #[test]
    fn classes_of_identity_and_total() {
        let id = BinaryRelation::identity(3);
        assert_eq!(class_of(&id, 1).unwrap(), ElemSet::singleton(1));
        assert_eq!(
            class_of(&BinaryRelation::total(3), 1).unwrap(),
            ElemSet::full(3)
        );
        let mut r = BinaryRelation::identity(3);
        r.insert(0, 1);
        assert_eq!(class_of(&r, 0), Err(Error::NotEquivalence));
        assert_eq!(r.classes(), Err(Error::NotEquivalence));
    }

    #[test]
    fn singleton_deductive_systems() {
        let s = chain(1);
        let d = enumerate_deductive_systems(&s).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].members(), &ElemSet::singleton(0));
    }

    #[test]
    fn size_limits() {
        let s = chain(9);
        assert!(matches!(
            enumerate_congruences(&s),
            Err(Error::TooLarge { .. })
        ));
        let s = chain(16);
        assert!(matches!(
            enumerate_deductive_systems(&s),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn two_chain_th3() {
        let r = check_th3(&chain(2)).unwrap();
        assert!(r.holds());
        assert_eq!(r.checked, 3);
    }

    #[test]
    fn proposition_requires_filter() {
        let s = chain(3);
        assert!(check_proposition(&s, &s.carrier()).unwrap().holds());
        assert_eq!(
            check_proposition(&s, &ElemSet::singleton(1)).unwrap_err(),
            Error::NotAFilter
        );
    }

    #[test]
    fn carrier_subset_roles() {
        let s = chain(3);
        assert!(CarrierSubset::filter(&s, ElemSet::singleton(1)).is_none());
        let f = CarrierSubset::filter(&s, ElemSet::from_iter([1, 2])).unwrap();
        assert_eq!(f.role(), SubsetRole::Filter);
        assert_eq!(CarrierSubset::raw(ElemSet::empty()).role(), SubsetRole::Raw);
    }
}
