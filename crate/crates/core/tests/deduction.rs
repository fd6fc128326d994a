use unsharp_core::deduction::{
    check_lemma1, check_proposition, check_th3, class_of, enumerate_congruences,
    enumerate_deductive_systems, enumerate_filters, is_congruence, is_deductive_system, is_filter,
    principal_filter, theta,
};
use unsharp_core::generators::{enumerate_all, Fixture};
use unsharp_core::{BinaryRelation, ElemSet, Error, MeetSemilattice};

fn el(s: &MeetSemilattice, name: &str) -> usize {
    s.index_of(name).unwrap()
}

fn set(s: &MeetSemilattice, names: &str) -> ElemSet {
    let names: Vec<&str> = names.split_whitespace().collect();
    s.set_of(&names).unwrap()
}

fn members(list: Vec<unsharp_core::CarrierSubset>) -> Vec<ElemSet> {
    let mut v: Vec<ElemSet> = list.into_iter().map(|c| c.members().clone()).collect();
    v.sort();
    v
}

/// Deductive-system test written against the definition of `x → y` as the
/// maximal solutions of `x ∧ z ≤ y`.
fn oracle_dsys(s: &MeetSemilattice, d: &ElemSet) -> bool {
    let n = s.len();
    let maxes: Vec<usize> = (0..n)
        .filter(|&m| (0..n).all(|k| k == m || !s.leq(m, k)))
        .collect();
    if !maxes.iter().any(|&m| d.contains(m)) {
        return false;
    }
    d.iter().all(|x| {
        (0..n).all(|y| {
            let sols: Vec<usize> = (0..n).filter(|&z| s.leq(s.meet(x, z), y)).collect();
            let hits = sols
                .iter()
                .filter(|&&z| !sols.iter().any(|&w| w != z && s.leq(z, w)))
                .any(|&z| d.contains(z));
            !hits || d.contains(y)
        })
    })
}

#[test]
fn filters_and_deductive_systems_on_fixtures() {
    let s = Fixture::Fig4.build();
    assert!(is_filter(&s, &set(&s, "d 1")));
    assert!(is_deductive_system(&s, &set(&s, "e 1")));
    assert!(!is_deductive_system(&s, &set(&s, "a 1")));
    assert!(!is_filter(&s, &set(&s, "a 1")));

    let s = Fixture::Fig1.build();
    assert!(!is_filter(&s, &set(&s, "a b")));
    assert!(!is_deductive_system(&s, &set(&s, "a b")));
    // a → a = Max S contains a, and a → y for y ≠ a avoids a
    assert!(is_deductive_system(&s, &set(&s, "a")));
    assert!(oracle_dsys(&s, &set(&s, "a")));
}

#[test]
fn deductive_system_scan_matches_oracle() {
    let mut corpus: Vec<MeetSemilattice> = Fixture::ALL.iter().map(|f| f.build()).collect();
    for n in 1..=5 {
        corpus.extend(enumerate_all(n).unwrap());
    }
    for s in corpus {
        let n = s.len();
        let mut scanned: Vec<ElemSet> = (1u64..1 << n)
            .map(|m| ElemSet::from_mask(m, n))
            .filter(|d| oracle_dsys(&s, d))
            .collect();
        scanned.sort();
        assert_eq!(
            members(enumerate_deductive_systems(&s).unwrap()),
            scanned,
            "{}",
            s.label()
        );
    }
}

#[test]
fn filter_and_deductive_system_counts() {
    let s = Fixture::Fig1.build();
    assert_eq!(enumerate_filters(&s).len(), 4);
    // no top here, yet the two families still agree
    assert_eq!(
        members(enumerate_deductive_systems(&s).unwrap()),
        members(enumerate_filters(&s))
    );

    let s = Fixture::Fig4.build();
    assert_eq!(enumerate_filters(&s).len(), 8);
    assert_eq!(
        members(enumerate_deductive_systems(&s).unwrap()),
        members(enumerate_filters(&s))
    );
}

#[test]
fn theta_of_a_principal_filter() {
    let s = Fixture::Fig4.build();
    let th = theta(&s, &set(&s, "d 1")).unwrap();
    assert!(is_congruence(&s, &th));
    let mut classes = th.classes().unwrap();
    classes.sort();
    let mut expected = vec![
        set(&s, "0"),
        set(&s, "a"),
        set(&s, "b"),
        set(&s, "c e f"),
        set(&s, "d 1"),
    ];
    expected.sort();
    assert_eq!(classes, expected);
    assert_eq!(class_of(&th, el(&s, "1")).unwrap(), set(&s, "d 1"));
    assert_eq!(
        theta(&s, &ElemSet::empty()).unwrap_err(),
        Error::EmptyOperand
    );
}

#[test]
fn swapping_two_atoms_is_not_a_congruence() {
    let s = Fixture::Fig1.build();
    let (a, b) = (el(&s, "a"), el(&s, "b"));
    let mut r = BinaryRelation::identity(s.len());
    r.insert(a, b);
    r.insert(b, a);
    assert!(r.is_equivalence());
    // a ∧ a = a but b ∧ a = 0
    assert!(!is_congruence(&s, &r));
}

#[test]
fn congruences_include_theta_of_every_filter() {
    for fx in [Fixture::Fig1, Fixture::Fig4, Fixture::Remark5] {
        let s = fx.build();
        let cons = enumerate_congruences(&s).unwrap();
        assert!(cons.contains(&BinaryRelation::identity(s.len())));
        assert!(cons.contains(&BinaryRelation::total(s.len())));
        for f in enumerate_filters(&s) {
            let th = theta(&s, f.members()).unwrap();
            assert!(cons.contains(&th), "{}", fx.name());
        }
    }
}

#[test]
fn th3_on_bounded_fixtures() {
    let r = check_th3(&Fixture::Fig4.build()).unwrap();
    assert!(r.holds());
    assert_eq!(
        r.note.as_deref(),
        Some("equivalence holds (255 subsets checked)")
    );
    let r = check_th3(&Fixture::Fig2.build()).unwrap();
    assert!(r.holds());
    assert_eq!(r.checked, 1023);
    assert!(matches!(
        check_th3(&Fixture::Fig1.build()),
        Err(Error::RequiresBounded(_))
    ));
}

#[test]
fn th3_and_lemma1_on_enumerated_bounded_structures() {
    for n in 1..=6 {
        for s in enumerate_all(n).unwrap().filter(|s| s.is_bounded()) {
            assert!(check_th3(&s).unwrap().holds(), "{}", s.label());
            if n <= 5 {
                assert!(check_lemma1(&s).unwrap().holds(), "{}", s.label());
            }
        }
    }
}

#[test]
fn lemma1_on_fixtures() {
    for fx in [Fixture::Fig4, Fixture::Remark5] {
        let r = check_lemma1(&fx.build()).unwrap();
        assert!(r.holds(), "{}: {:?}", fx.name(), r);
    }
    assert!(matches!(
        check_lemma1(&Fixture::Fig3.build()),
        Err(Error::TooLarge { size: 9, limit: 8 })
    ));
}

#[test]
fn proposition_for_every_filter() {
    for fx in Fixture::ALL {
        let s = fx.build();
        for f in enumerate_filters(&s) {
            assert!(check_proposition(&s, f.members()).unwrap().holds());
        }
    }
    let s = Fixture::Fig4.build();
    assert!(check_proposition(&s, &set(&s, "d 1")).unwrap().holds());
    let s = Fixture::Fig1.build();
    assert!(check_proposition(&s, &set(&s, "a")).unwrap().holds());
    assert_eq!(
        check_proposition(&s, &set(&s, "a b")).unwrap_err(),
        Error::NotAFilter
    );
}

#[test]
fn principal_filters_and_meets() {
    for fx in Fixture::ALL {
        let s = fx.build();
        for x in 0..s.len() {
            for y in 0..s.len() {
                let m = principal_filter(&s, s.meet(x, y));
                let fx_ = principal_filter(&s, x);
                let fy = principal_filter(&s, y);
                assert!(fx_.is_subset(&m) && fy.is_subset(&m));
                // least principal filter containing both
                for z in 0..s.len() {
                    let fz = principal_filter(&s, z);
                    if fx_.is_subset(&fz) && fy.is_subset(&fz) {
                        assert!(m.is_subset(&fz));
                    }
                }
            }
        }
    }
}
