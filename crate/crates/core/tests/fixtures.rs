//! Worked values on the named fixtures.

use unsharp_core::generators::Fixture;
use unsharp_core::ops::{
    double_neg, imp, imp_set, is_sharp, make_table, neg, neg_set, OperatorKind,
};
use unsharp_core::{ElemSet, MeetSemilattice};

fn set(s: &MeetSemilattice, names: &str) -> ElemSet {
    let names: Vec<&str> = names.split_whitespace().collect();
    s.set_of(&names).unwrap()
}

fn el(s: &MeetSemilattice, name: &str) -> usize {
    s.index_of(name).unwrap()
}

#[test]
fn fig1_negations() {
    let s = Fixture::Fig1.build();
    assert_eq!(neg(&s, el(&s, "0")), set(&s, "a b c"));
    assert_eq!(neg(&s, el(&s, "a")), set(&s, "b c"));
    assert_eq!(neg_set(&s, &set(&s, "b c")).unwrap(), set(&s, "a"));
    assert_eq!(double_neg(&s, el(&s, "a")), set(&s, "a"));
    // a ∧ (a ∧ b)⁰ = a ∧ 0⁰ = {0, a} = a ∧ b⁰
    let a = set(&s, "a");
    let lhs = s.set_meet(&a, &neg(&s, s.meet(el(&s, "a"), el(&s, "b"))));
    let rhs = s.set_meet(&a, &neg(&s, el(&s, "b")));
    assert_eq!(lhs, set(&s, "0 a"));
    assert_eq!(rhs, set(&s, "0 a"));
}

#[test]
fn fig2_values() {
    let s = Fixture::Fig2.build();
    assert_eq!(s.bottom(), el(&s, "0"));
    assert_eq!(s.top(), Some(el(&s, "1")));
    assert_eq!(s.meet(el(&s, "e"), el(&s, "d")), el(&s, "0"));
    assert_eq!(neg(&s, el(&s, "a")), set(&s, "g h"));
    assert_eq!(neg_set(&s, &set(&s, "g h")).unwrap(), set(&s, "a"));
    assert_eq!(neg(&s, el(&s, "f")), set(&s, "b c"));
    assert_eq!(neg_set(&s, &set(&s, "b c")).unwrap(), set(&s, "f"));
    assert!(is_sharp(&s, el(&s, "a")));
    assert!(is_sharp(&s, el(&s, "f")));
    assert_eq!(neg(&s, el(&s, "e")), set(&s, "d"));
    assert_eq!(neg(&s, el(&s, "d")), set(&s, "e"));
    assert_eq!(s.set_meet(&set(&s, "g h"), &set(&s, "d")), set(&s, "d"));
    let a0_e0 = s.set_meet(&neg(&s, el(&s, "a")), &neg(&s, el(&s, "e")));
    let ae0 = neg(&s, s.meet(el(&s, "a"), el(&s, "e")));
    assert_eq!(a0_e0, set(&s, "d"));
    assert_eq!(ae0, set(&s, "g h"));
}

#[test]
fn fig2_is_modular_lattice() {
    let s = Fixture::Fig2.build();
    let n = s.len();
    // joins exist: least common upper bound
    let join = |x: usize, y: usize| {
        let ups: Vec<usize> = (0..n).filter(|&u| s.leq(x, u) && s.leq(y, u)).collect();
        *ups.iter()
            .find(|&&u| ups.iter().all(|&v| s.leq(u, v)))
            .unwrap()
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if s.leq(x, z) {
                    assert_eq!(join(x, s.meet(y, z)), s.meet(join(x, y), z));
                }
            }
        }
    }
    assert_eq!(join(el(&s, "e"), el(&s, "d")), el(&s, "1"));
}

#[test]
fn fig3_values() {
    let s = Fixture::Fig3.build();
    let a = el(&s, "a");
    assert_eq!(neg(&s, a), set(&s, "b c"));
    assert_eq!(double_neg(&s, a), set(&s, "f"));
    assert!(!is_sharp(&s, a));
    assert_eq!(neg(&s, el(&s, "f")), set(&s, "b c"));
    assert_eq!(neg_set(&s, &double_neg(&s, a)).unwrap(), set(&s, "b c"));
    assert_eq!(neg_set(&s, &set(&s, "c f")).unwrap(), set(&s, "b"));
    assert!(is_sharp(&s, el(&s, "b")));
    assert_eq!(neg(&s, el(&s, "e")), set(&s, "0"));

    let a0_b0 = s.set_meet(&neg(&s, a), &neg(&s, el(&s, "b")));
    assert_eq!(a0_b0, set(&s, "0 c"));
    assert_eq!(neg_set(&s, &a0_b0).unwrap(), set(&s, "b f"));
    assert_eq!(
        neg_set(&s, &neg_set(&s, &a0_b0).unwrap()).unwrap(),
        set(&s, "c")
    );

    let c0_f0 = s.set_meet(&neg(&s, el(&s, "c")), &neg(&s, el(&s, "f")));
    assert_eq!(c0_f0, set(&s, "0 b"));
    assert_eq!(neg_set(&s, &c0_f0).unwrap(), set(&s, "c f"));
    assert_eq!(
        neg_set(&s, &neg_set(&s, &c0_f0).unwrap()).unwrap(),
        set(&s, "b")
    );
    // the same set written as e⁰ ∧ f⁰ would be {0}, not {0, b}
    let e0_f0 = s.set_meet(&neg(&s, el(&s, "e")), &neg(&s, el(&s, "f")));
    assert_eq!(e0_f0, set(&s, "0"));
}

#[test]
fn fig3_set_implication() {
    let s = Fixture::Fig3.build();
    assert_eq!(
        imp_set(&s, &set(&s, "b c"), &set(&s, "0")).unwrap(),
        set(&s, "f")
    );
    assert_eq!(imp(&s, el(&s, "f"), el(&s, "d")), set(&s, "d g"));
    assert_eq!(s.max_elements(&set(&s, "0 a d f")), set(&s, "f"));
    assert!(!s.is_antichain(&set(&s, "a d")));
    assert_eq!(s.set_meet(&set(&s, "b c"), &set(&s, "c f")), set(&s, "0 c"));
}

#[test]
fn fig4_values() {
    let s = Fixture::Fig4.build();
    let (d, e, f) = (el(&s, "d"), el(&s, "e"), el(&s, "f"));
    assert_eq!(s.meet(d, e), el(&s, "c"));
    assert_eq!(s.top(), Some(el(&s, "1")));
    let d_e = imp(&s, d, e);
    assert_eq!(d_e, set(&s, "e f"));
    assert_eq!(imp_set(&s, &d_e, &set(&s, "e")).unwrap(), set(&s, "d e"));
    assert!(s.leq1(&set(&s, "e"), &set(&s, "d e")));
    assert_eq!(s.set_meet(&set(&s, "d"), &d_e), set(&s, "c"));
    assert_eq!(s.set_meet(&d_e, &set(&s, "e")), set(&s, "c e"));
    assert!(s.approx1(&set(&s, "c e"), &set(&s, "e")));
    assert!(s.leq1(&set(&s, "c e"), &set(&s, "e")));
    assert_eq!(imp(&s, d, s.meet(e, f)), set(&s, "e f"));
    let d_f = imp(&s, d, f);
    assert_eq!(s.set_meet(&d_e, &d_f), set(&s, "c e f"));
    assert!(s.approx1(&set(&s, "c e f"), &set(&s, "e f")));
    assert!(s.set_leq(&set(&s, "c"), &set(&s, "e f")));
}

#[test]
fn remark5_singleton_negation_is_not_a_complement() {
    let s = Fixture::Remark5.build();
    let (a, b) = (el(&s, "a"), el(&s, "b"));
    assert_eq!(neg(&s, a), set(&s, "b"));
    // the least upper bound of a and b is m, not the top
    let ups: Vec<usize> = (0..s.len())
        .filter(|&u| s.leq(a, u) && s.leq(b, u))
        .collect();
    assert_eq!(ups, vec![el(&s, "m"), el(&s, "1")]);
}

#[test]
fn bounded_extremes() {
    for fx in [
        Fixture::Fig2,
        Fixture::Fig3,
        Fixture::Fig4,
        Fixture::Remark5,
    ] {
        let s = fx.build();
        let top = s.top().unwrap();
        assert_eq!(neg(&s, top), ElemSet::singleton(s.bottom()));
        assert_eq!(neg(&s, s.bottom()), ElemSet::singleton(top));
        let t = make_table(&s, OperatorKind::Implication);
        for b in 0..s.len() {
            assert_eq!(t.imp(top, b), &ElemSet::singleton(b));
        }
    }
}

#[test]
fn implication_below_is_max() {
    for fx in Fixture::ALL {
        let s = fx.build();
        for a in 0..s.len() {
            for b in 0..s.len() {
                if s.leq(a, b) {
                    assert_eq!(&imp(&s, a, b), s.maximal());
                }
            }
        }
    }
}
