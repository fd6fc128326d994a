//! Executable catalog of the laws satisfied by unsharp negation and
//! implication, plus equation checking and the characterization checks.
//!
//! Every check is exhaustive over element tuples. Laws stated with `≤₁` or
//! `≈₁` are evaluated with exactly those relations on the computed sets.

use std::borrow::Cow;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ops::{double_neg, imp_set, is_sharp, make_table, neg_set, OperatorKind, OperatorTable};
use crate::order::{ElemSet, MeetSemilattice};
use crate::term::{Equation, VARIABLES};

macro_rules! law_ids {
    ($($variant:ident => $id:literal, $arity:literal, $bounded:literal, $text:literal;)*) => {
        /// Identifier of a law in the closed catalog.
        #[allow(non_camel_case_types)]
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum LawId {
            $($variant,)*
        }

        impl LawId {
            pub const ALL: &'static [LawId] = &[$(LawId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(LawId::$variant => $id,)*
                }
            }

            /// Number of universally quantified element variables.
            pub fn arity(self) -> usize {
                match self {
                    $(LawId::$variant => $arity,)*
                }
            }

            /// Whether the law only makes sense when a top element exists.
            pub fn requires_bounded(self) -> bool {
                match self {
                    $(LawId::$variant => $bounded,)*
                }
            }

            pub fn statement(self) -> &'static str {
                match self {
                    $(LawId::$variant => $text,)*
                }
            }
        }
    };
}

law_ids! {
    T1_i => "T1.i", 1, false, "x' is an antichain";
    T1_ii => "T1.ii", 1, false, "x <=1 x''";
    T1_iii => "T1.iii", 2, false, "x <= y implies y' <=1 x'";
    T1_iv => "T1.iv", 0, false, "0' = Max S";
    T1_v => "T1.v", 1, false, "x & x' = 0";
    T1_vi => "T1.vi", 0, true, "0' = 1 and 1' = 0";
    T1_vii => "T1.vii", 1, false, "x & 0' ~=1 x";
    T1_viii => "T1.viii", 2, false, "x & (x & y)' ~=1 x & y'";
    P1 => "P1", 1, false, "x' is an antichain";
    P2 => "P2", 1, false, "x & 0' ~=1 x";
    P3 => "P3", 1, false, "x & x' = 0";
    P4 => "P4", 2, false, "x & (x & y)' ~=1 x & y'";
    T2_i => "T2.i", 2, false, "x -> y is an antichain";
    T2_ii => "T2.ii", 2, false, "x <= y implies x -> y = Max S";
    T2_iii => "T2.iii", 2, false, "y in Max S implies y in x -> y";
    T2_iv => "T2.iv", 2, false, "y <=1 x -> y";
    T2_v => "T2.v", 2, false, "x <=1 (x -> y) -> y";
    T2_vi => "T2.vi", 3, false, "x <= y implies z -> x <=1 z -> y and y -> z <=1 x -> z";
    T2_vii => "T2.vii", 2, false, "x & (x -> y) ~=1 x & y";
    T2_viii => "T2.viii", 3, false, "x -> (y & z) ~=1 (x -> y) & (x -> z)";
    T2_ix => "T2.ix", 2, false, "(x -> y) & y ~=1 y";
    T2_x => "T2.x", 1, true, "1 -> x = x";
    T2_xi => "T2.xi", 2, false, "x & (y -> y) ~=1 x";
    T2_xii => "T2.xii", 2, true, "x -> y = 1 iff x <= y";
    T2_xiii => "T2.xiii", 2, false, "y <=1 x -> (x & y)";
    R1 => "R1", 2, false, "x -> y is an antichain";
    R2 => "R2", 2, false, "x & (x -> y) ~=1 x & y";
    R3 => "R3", 2, false, "(x -> y) & y ~=1 y";
    R4 => "R4", 3, false, "x -> (y & z) ~=1 (x -> y) & (x -> z)";
    R5 => "R5", 2, false, "x & (y -> y) ~=1 x";
    R6 => "R6", 3, false, "y <= z implies x -> y <=1 x -> z";
    ADJ => "ADJ", 3, false, "x & y <= z iff x <=1 y -> z";
    DIV => "DIV", 2, false, "x & (x -> y) ~=1 x & y";
    MP => "MP", 2, false, "x & u <= y for every u in x -> y";
    NEGMEET => "NEGMEET", 2, false, "x' & y' <=1 (x & y)'";
}

impl LawId {
    pub const NEG_AXIOMS: [LawId; 4] = [LawId::P1, LawId::P2, LawId::P3, LawId::P4];
    pub const IMP_AXIOMS: [LawId; 6] = [
        LawId::R1,
        LawId::R2,
        LawId::R3,
        LawId::R4,
        LawId::R5,
        LawId::R6,
    ];
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LawId::ALL
            .iter()
            .copied()
            .find(|l| l.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                column: 1,
                message: format!("unknown law `{s}`"),
            })
    }
}

/// The operators a law is evaluated against. Canonical unless a perturbed
/// table has been swapped in.
#[derive(Clone, Debug)]
pub struct LawContext<'a> {
    s: &'a MeetSemilattice,
    neg: Cow<'a, OperatorTable>,
    imp: Cow<'a, OperatorTable>,
}

impl<'a> LawContext<'a> {
    pub fn canonical(s: &'a MeetSemilattice) -> Self {
        LawContext {
            s,
            neg: Cow::Owned(make_table(s, OperatorKind::Negation)),
            imp: Cow::Owned(make_table(s, OperatorKind::Implication)),
        }
    }

    pub fn structure(&self) -> &'a MeetSemilattice {
        self.s
    }

    pub fn negation(&self) -> &OperatorTable {
        &self.neg
    }

    pub fn implication(&self) -> &OperatorTable {
        &self.imp
    }

    /// Replaces the operator of matching kind.
    pub fn with_operator(&self, table: &'a OperatorTable) -> LawContext<'a> {
        let mut cx = self.clone();
        match table.kind() {
            OperatorKind::Negation => cx.neg = Cow::Borrowed(table),
            OperatorKind::Implication => cx.imp = Cow::Borrowed(table),
        }
        cx
    }
}

/// Two evaluated sides that fail the stated relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub lhs: ElemSet,
    pub rhs: ElemSet,
    pub relation: &'static str,
}

fn violation(lhs: ElemSet, rhs: ElemSet, relation: &'static str) -> Option<Violation> {
    Some(Violation { lhs, rhs, relation })
}

fn single(x: usize) -> ElemSet {
    ElemSet::singleton(x)
}

impl LawId {
    /// Evaluates the law at one binding of its variables, returning the
    /// violation if the law fails there.
    pub fn evaluate(self, cx: &LawContext<'_>, v: &[usize]) -> Option<Violation> {
        debug_assert_eq!(v.len(), self.arity());
        let s = cx.s;
        let neg = |a: usize| cx.neg.neg(a);
        let imp = |a: usize, b: usize| cx.imp.imp(a, b);
        let zero = s.bottom();
        let check = |ok: bool, lhs: ElemSet, rhs: ElemSet, rel: &'static str| {
            if ok {
                None
            } else {
                violation(lhs, rhs, rel)
            }
        };
        let approx = |lhs: ElemSet, rhs: ElemSet| check(s.approx1(&lhs, &rhs), lhs, rhs, "not ~=1");
        let below1 = |lhs: ElemSet, rhs: ElemSet| check(s.leq1(&lhs, &rhs), lhs, rhs, "not <=1");
        let antichain =
            |a: &ElemSet| check(s.is_antichain(a), a.clone(), a.clone(), "not an antichain");

        match self {
            LawId::T1_i | LawId::P1 => antichain(neg(v[0])),
            LawId::T1_ii => {
                let dn = neg_set(s, neg(v[0])).unwrap_or_default();
                below1(single(v[0]), dn)
            }
            LawId::T1_iii => {
                if !s.leq(v[0], v[1]) {
                    return None;
                }
                below1(neg(v[1]).clone(), neg(v[0]).clone())
            }
            LawId::T1_iv => {
                let lhs = neg(zero).clone();
                check(&lhs == s.maximal(), lhs, s.maximal().clone(), "!=")
            }
            LawId::T1_v | LawId::P3 => {
                let lhs = s.set_meet(&single(v[0]), neg(v[0]));
                check(lhs == single(zero), lhs, single(zero), "!=")
            }
            LawId::T1_vi => {
                let top = s.top()?;
                let lhs = neg(zero).clone();
                if lhs != single(top) {
                    return violation(lhs, single(top), "!=");
                }
                let lhs = neg(top).clone();
                check(lhs == single(zero), lhs, single(zero), "!=")
            }
            LawId::T1_vii | LawId::P2 => approx(s.set_meet(&single(v[0]), neg(zero)), single(v[0])),
            LawId::T1_viii | LawId::P4 => {
                let x = single(v[0]);
                approx(
                    s.set_meet(&x, neg(s.meet(v[0], v[1]))),
                    s.set_meet(&x, neg(v[1])),
                )
            }
            LawId::T2_i | LawId::R1 => antichain(imp(v[0], v[1])),
            LawId::T2_ii => {
                if !s.leq(v[0], v[1]) {
                    return None;
                }
                let lhs = imp(v[0], v[1]).clone();
                check(&lhs == s.maximal(), lhs, s.maximal().clone(), "!=")
            }
            LawId::T2_iii => {
                if !s.maximal().contains(v[1]) {
                    return None;
                }
                let rhs = imp(v[0], v[1]).clone();
                check(rhs.contains(v[1]), single(v[1]), rhs, "not in")
            }
            LawId::T2_iv => below1(single(v[1]), imp(v[0], v[1]).clone()),
            LawId::T2_v => {
                let rhs = imp_set(s, imp(v[0], v[1]), &single(v[1])).unwrap_or_default();
                below1(single(v[0]), rhs)
            }
            LawId::T2_vi => {
                let (a, b, c) = (v[0], v[1], v[2]);
                if !s.leq(a, b) {
                    return None;
                }
                below1(imp(c, a).clone(), imp(c, b).clone())
                    .or_else(|| below1(imp(b, c).clone(), imp(a, c).clone()))
            }
            LawId::T2_vii | LawId::R2 | LawId::DIV => approx(
                s.set_meet(&single(v[0]), imp(v[0], v[1])),
                single(s.meet(v[0], v[1])),
            ),
            LawId::T2_viii | LawId::R4 => approx(
                imp(v[0], s.meet(v[1], v[2])).clone(),
                s.set_meet(imp(v[0], v[1]), imp(v[0], v[2])),
            ),
            LawId::T2_ix | LawId::R3 => {
                approx(s.set_meet(imp(v[0], v[1]), &single(v[1])), single(v[1]))
            }
            LawId::T2_x => {
                let top = s.top()?;
                let lhs = imp(top, v[0]).clone();
                check(lhs == single(v[0]), lhs, single(v[0]), "!=")
            }
            LawId::T2_xi | LawId::R5 => {
                approx(s.set_meet(&single(v[0]), imp(v[1], v[1])), single(v[0]))
            }
            LawId::T2_xii => {
                let top = s.top()?;
                let lhs = imp(v[0], v[1]).clone();
                let is_top = lhs == single(top);
                check(
                    is_top == s.leq(v[0], v[1]),
                    lhs,
                    single(top),
                    if is_top {
                        "= (but x not <= y)"
                    } else {
                        "!= (but x <= y)"
                    },
                )
            }
            LawId::T2_xiii => below1(single(v[1]), imp(v[0], s.meet(v[0], v[1])).clone()),
            LawId::R6 => {
                let (x, y, z) = (v[0], v[1], v[2]);
                if !s.leq(y, z) {
                    return None;
                }
                below1(imp(x, y).clone(), imp(x, z).clone())
            }
            LawId::ADJ => {
                let lhs_holds = s.leq(s.meet(v[0], v[1]), v[2]);
                let rhs = imp(v[1], v[2]).clone();
                let rhs_holds = s.leq1(&single(v[0]), &rhs);
                check(
                    lhs_holds == rhs_holds,
                    single(s.meet(v[0], v[1])),
                    rhs,
                    if lhs_holds {
                        "x & y <= z but x not <=1 y -> z"
                    } else {
                        "x <=1 y -> z but x & y not <= z"
                    },
                )
            }
            LawId::MP => {
                let lhs = s.set_meet(&single(v[0]), imp(v[0], v[1]));
                let rhs = single(v[1]);
                check(s.set_leq(&lhs, &rhs), lhs, rhs, "not <=")
            }
            LawId::NEGMEET => below1(
                s.set_meet(neg(v[0]), neg(v[1])),
                neg(s.meet(v[0], v[1])).clone(),
            ),
        }
    }

    /// First binding, in lexicographic order, at which the law fails.
    pub fn first_violation(self, cx: &LawContext<'_>) -> (usize, Option<(Vec<usize>, Violation)>) {
        let n = cx.s.len();
        let mut checked = 0;
        for binding in tuples(n, self.arity()) {
            checked += 1;
            if let Some(v) = self.evaluate(cx, &binding) {
                return (checked, Some((binding, v)));
            }
        }
        (checked, None)
    }
}

/// All `k`-tuples over `0..n`, first coordinate outermost.
pub fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(k as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        t
    })
}

/// What a [`LawReport`] is about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subject {
    Law(LawId),
    Equation(String),
    NegCharacterization,
    ImpCharacterization,
    AllSharp,
    /// Deductive systems, filters and congruence top classes coincide.
    DeductiveSystems,
    /// Top classes of congruences are filters generating sub-congruences.
    TopClasses,
    /// Membership in `Θ(F)` is detected by implication sets meeting `F`.
    FilterImplication,
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Law(id) => write!(f, "{id}"),
            Subject::Equation(e) => f.write_str(e),
            Subject::NegCharacterization => f.write_str("negation-characterization"),
            Subject::ImpCharacterization => f.write_str("implication-characterization"),
            Subject::AllSharp => f.write_str("all-sharp"),
            Subject::DeductiveSystems => f.write_str("deductive-systems"),
            Subject::TopClasses => f.write_str("top-classes"),
            Subject::FilterImplication => f.write_str("filter-implication"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// Not applicable, e.g. a bounded-only law on an unbounded structure.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Variable name and the element (or subset) it is bound to.
    pub binding: Vec<(String, ElemSet)>,
    pub lhs: ElemSet,
    pub rhs: ElemSet,
    pub relation: String,
}

impl Counterexample {
    pub fn for_elements(vars: &[&str], elems: &[usize], v: Violation) -> Self {
        Counterexample {
            binding: vars
                .iter()
                .zip(elems)
                .map(|(name, &e)| (name.to_string(), ElemSet::singleton(e)))
                .collect(),
            lhs: v.lhs,
            rhs: v.rhs,
            relation: v.relation.to_owned(),
        }
    }

    /// Element bound to `var`, when it is bound to a single element.
    pub fn element(&self, var: &str) -> Option<usize> {
        self.binding
            .iter()
            .find(|(name, _)| name == var)
            .and_then(|(_, set)| set.as_single())
    }

    pub fn describe(&self, s: &MeetSemilattice) -> String {
        let binds: Vec<String> = self
            .binding
            .iter()
            .map(|(name, set)| match set.as_single() {
                Some(e) => format!("{name}={}", s.name(e)),
                None => format!("{name}={}", s.render(set)),
            })
            .collect();
        format!(
            "{}: lhs {} {} rhs {}",
            binds.join(", "),
            s.render(&self.lhs),
            self.relation,
            s.render(&self.rhs)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub subject: Subject,
    pub structure: String,
    pub verdict: Verdict,
    /// Number of bindings (or candidates) examined.
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
    pub note: Option<String>,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub(crate) fn new(
        subject: Subject,
        s: &MeetSemilattice,
        checked: usize,
        cx: Option<Counterexample>,
    ) -> Self {
        LawReport {
            subject,
            structure: s.label().to_owned(),
            verdict: if cx.is_some() {
                Verdict::Fails
            } else {
                Verdict::Holds
            },
            checked,
            counterexample: cx,
            note: None,
        }
    }

    fn skipped(subject: Subject, s: &MeetSemilattice, note: &str) -> Self {
        LawReport {
            subject,
            structure: s.label().to_owned(),
            verdict: Verdict::Skipped,
            checked: 0,
            counterexample: None,
            note: Some(note.to_owned()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

const LAW_VARS: [&str; 3] = ["x", "y", "z"];

fn report_for(law: LawId, cx: &LawContext<'_>) -> LawReport {
    let (checked, found) = law.first_violation(cx);
    let ce = found.map(|(b, v)| Counterexample::for_elements(&LAW_VARS[..b.len()], &b, v));
    LawReport::new(Subject::Law(law), cx.s, checked, ce)
}

pub fn check_law(s: &MeetSemilattice, law: LawId) -> Result<LawReport> {
    if law.requires_bounded() && !s.is_bounded() {
        return Err(Error::requires_bounded(law));
    }
    Ok(report_for(law, &LawContext::canonical(s)))
}

/// Every catalog law; bounded-only laws are reported as skipped on
/// unbounded structures.
pub fn check_all(s: &MeetSemilattice) -> Vec<LawReport> {
    let cx = LawContext::canonical(s);
    LawId::ALL
        .iter()
        .map(|&law| {
            if law.requires_bounded() && !s.is_bounded() {
                LawReport::skipped(Subject::Law(law), s, "requires a top element")
            } else {
                report_for(law, &cx)
            }
        })
        .collect()
}

/// Checks a candidate law over every instantiation of its variables.
pub fn check_equation(s: &MeetSemilattice, eq: &Equation) -> Result<LawReport> {
    let (checked, mut found) = scan_equation(s, eq, true)?;
    Ok(LawReport::new(
        Subject::Equation(eq.to_string()),
        s,
        checked,
        found.pop(),
    ))
}

/// Every failing binding of `eq`, in the order `check_equation` visits them.
pub fn equation_counterexamples(s: &MeetSemilattice, eq: &Equation) -> Result<Vec<Counterexample>> {
    Ok(scan_equation(s, eq, false)?.1)
}

fn scan_equation(
    s: &MeetSemilattice,
    eq: &Equation,
    first_only: bool,
) -> Result<(usize, Vec<Counterexample>)> {
    if eq.uses_one() && !s.is_bounded() {
        return Err(Error::RequiresBounded("constant 1".into()));
    }
    let vars = eq.variables();
    let names: Vec<String> = vars.iter().map(|&v| VARIABLES[v].to_string()).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let rel = match eq.relation {
        crate::term::Relation::Equal => "!=",
        crate::term::Relation::Leq1 => "not <=1",
        crate::term::Relation::Approx1 => "not ~=1",
    };
    let mut checked = 0;
    let mut found = Vec::new();
    for binding in tuples(s.len(), vars.len()) {
        checked += 1;
        let mut env = [0; 4];
        for (&v, &e) in vars.iter().zip(&binding) {
            env[v] = e;
        }
        let lhs = eq.lhs.eval(s, &env)?;
        let rhs = eq.rhs.eval(s, &env)?;
        if !eq.relation.holds(s, &lhs, &rhs) {
            found.push(Counterexample::for_elements(
                &name_refs,
                &binding,
                Violation {
                    lhs,
                    rhs,
                    relation: rel,
                },
            ));
            if first_only {
                break;
            }
        }
    }
    Ok((checked, found))
}

/// A canonical operator table with some entries replaced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbedOperator {
    base: OperatorTable,
    overrides: Vec<(usize, ElemSet)>,
    table: OperatorTable,
}

impl PerturbedOperator {
    /// `None` unless at least one override differs from the base entry.
    pub fn new(base: &OperatorTable, overrides: Vec<(usize, ElemSet)>) -> Option<Self> {
        if overrides.iter().all(|(i, v)| base.entry(*i) == v) {
            return None;
        }
        let mut table = base.clone();
        for (i, v) in &overrides {
            table.set_entry(*i, v.clone());
        }
        Some(PerturbedOperator {
            base: base.clone(),
            overrides,
            table,
        })
    }

    pub fn base(&self) -> &OperatorTable {
        &self.base
    }

    pub fn overrides(&self) -> &[(usize, ElemSet)] {
        &self.overrides
    }

    pub fn table(&self) -> &OperatorTable {
        &self.table
    }
}

fn axioms_for(kind: OperatorKind) -> &'static [LawId] {
    match kind {
        OperatorKind::Negation => &LawId::NEG_AXIOMS,
        OperatorKind::Implication => &LawId::IMP_AXIOMS,
    }
}

/// Axioms of the characterization that the perturbed operator violates.
pub fn violated_axioms(s: &MeetSemilattice, op: &PerturbedOperator) -> Vec<LawId> {
    let canonical = LawContext::canonical(s);
    let cx = canonical.with_operator(op.table());
    axioms_for(op.table().kind())
        .iter()
        .copied()
        .filter(|law| law.first_violation(&cx).1.is_some())
        .collect()
}

fn violates_any(cx: &LawContext<'_>, kind: OperatorKind) -> bool {
    axioms_for(kind)
        .iter()
        .any(|law| law.first_violation(cx).1.is_some())
}

fn random_antichain(s: &MeetSemilattice, rng: &mut ChaCha8Rng) -> ElemSet {
    loop {
        let pick: ElemSet = (0..s.len()).filter(|_| rng.gen_bool(0.5)).collect();
        if !pick.is_empty() {
            return s.max_elements(&pick);
        }
    }
}

/// Draws a single-entry perturbation of `base`, or `None` if the structure
/// admits no other antichain.
pub fn random_perturbation(
    s: &MeetSemilattice,
    base: &OperatorTable,
    rng: &mut ChaCha8Rng,
) -> Option<PerturbedOperator> {
    if s.len() < 2 {
        return None;
    }
    for _ in 0..256 {
        let input = rng.gen_range(0..base.input_count());
        let value = random_antichain(s, rng);
        if let Some(p) = PerturbedOperator::new(base, vec![(input, value)]) {
            return Some(p);
        }
    }
    None
}

fn verify_characterization(
    s: &MeetSemilattice,
    kind: OperatorKind,
    trials: usize,
    seed: u64,
) -> LawReport {
    let subject = match kind {
        OperatorKind::Negation => Subject::NegCharacterization,
        OperatorKind::Implication => Subject::ImpCharacterization,
    };
    let canonical = LawContext::canonical(s);
    for &law in axioms_for(kind) {
        if let (_, Some((b, v))) = law.first_violation(&canonical) {
            let ce = Counterexample::for_elements(&LAW_VARS[..b.len()], &b, v);
            return LawReport::new(subject, s, 0, Some(ce))
                .with_note(format!("canonical operator violates {law}"));
        }
    }
    let base = match kind {
        OperatorKind::Negation => canonical.negation().clone(),
        OperatorKind::Implication => canonical.implication().clone(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut run = 0;
    for _ in 0..trials {
        let Some(p) = random_perturbation(s, &base, &mut rng) else {
            break;
        };
        run += 1;
        let cx = canonical.with_operator(p.table());
        if !violates_any(&cx, kind) {
            let (input, value) = &p.overrides()[0];
            let args = base.arguments(*input);
            let ce = Counterexample {
                binding: LAW_VARS
                    .iter()
                    .zip(&args)
                    .map(|(n, &e)| (n.to_string(), ElemSet::singleton(e)))
                    .collect(),
                lhs: base.entry(*input).clone(),
                rhs: value.clone(),
                relation: "replaced by".into(),
            };
            return LawReport::new(subject, s, run, Some(ce))
                .with_note("FALSIFICATION: perturbed operator satisfies every axiom");
        }
    }
    LawReport::new(subject, s, run, None).with_note(format!(
        "canonical operator passes; {run} perturbations rejected"
    ))
}

/// Positive check of P1–P4 on the canonical negation plus `trials` seeded
/// single-entry perturbations, each of which must break some axiom.
pub fn verify_neg_characterization(s: &MeetSemilattice, trials: usize, seed: u64) -> LawReport {
    verify_characterization(s, OperatorKind::Negation, trials, seed)
}

/// As [`verify_neg_characterization`] with R1–R6 and the implication table.
pub fn verify_imp_characterization(s: &MeetSemilattice, trials: usize, seed: u64) -> LawReport {
    verify_characterization(s, OperatorKind::Implication, trials, seed)
}

/// Holds iff every element is sharp.
pub fn check_remark_products(s: &MeetSemilattice) -> LawReport {
    for a in 0..s.len() {
        if !is_sharp(s, a) {
            let ce = Counterexample::for_elements(
                &["x"],
                &[a],
                Violation {
                    lhs: double_neg(s, a),
                    rhs: ElemSet::singleton(a),
                    relation: "!=",
                },
            );
            return LawReport::new(Subject::AllSharp, s, a + 1, Some(ce));
        }
    }
    LawReport::new(Subject::AllSharp, s, s.len(), None)
}
