//! Reference data: E6 Cartan matrices, labeled E7/E8 quivers, good-mutation
//! table rows and opposite pairings, replayed against the computed classes.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::LazyLock;

use ctilt_core::classify::{
    member_data, permutation_match, resolve_labels, verify_opposite_pair, verify_table_row,
    LabelIndex, RowStatus,
};
use ctilt_core::fixtures::{self, OppositeRelation};
use ctilt_core::invariants::{associated_polynomial, normalize_text};
use ctilt_core::mutation_class::{dynkin_seed, enumerate, DynkinType, MutationClass};
use ctilt_core::tilting::{is_good_mutation, Algebra};

struct Setup {
    class: MutationClass,
    labels: LabelIndex,
}

fn setup(t: DynkinType) -> Setup {
    let class = enumerate(&dynkin_seed(t), 10_000, true).unwrap();
    let data = member_data(&class).unwrap();
    let labels = resolve_labels(t, &class, &data).unwrap();
    Setup { class, labels }
}

static E6: LazyLock<Setup> = LazyLock::new(|| setup(DynkinType::E6));
static E7: LazyLock<Setup> = LazyLock::new(|| setup(DynkinType::E7));
static E8: LazyLock<Setup> = LazyLock::new(|| setup(DynkinType::E8));

#[test]
fn e6_cartan_fixtures_are_reproduced() {
    let s = &*E6;
    assert!(s.labels.unmatched.is_empty(), "{:?}", s.labels.unmatched);
    let fixtures = fixtures::e6_cartans().unwrap();
    assert_eq!(fixtures.len(), 21);
    let mut orbits = BTreeSet::new();
    for f in &fixtures {
        let found = s.labels.get(&f.label).unwrap();
        for m in found {
            // the labeled quiver's computed Cartan matrix is the printed one
            assert_eq!(Algebra::new(&m.quiver).unwrap().cartan, f.cartan, "{}", f.label);
            orbits.insert(s.class.orbit_of(m.member));
        }
        let p = associated_polynomial(&f.cartan).unwrap().normalized();
        assert_eq!(normalize_text(&p), f.polynomial, "{}", f.label);
    }
    assert_eq!(orbits.len(), 21, "one representative per sink/source orbit");
}

#[test]
fn labeled_quivers_match_members() {
    let e7 = &*E7;
    assert!(e7.labels.unmatched.is_empty(), "{:?}", e7.labels.unmatched);
    assert_eq!(e7.labels.labels.len(), 112);
    let e8 = &*E8;
    // one of the two arrow lists printed under A257 is outside the class
    assert_eq!(e8.labels.unmatched, vec!["A257".to_string()]);
    assert_eq!(e8.labels.labels.len(), 290);
}

#[test]
fn e6_example_a7_at_vertex_3() {
    let s = &*E6;
    let row = &fixtures::good_mutation_rows(DynkinType::E6).unwrap()[0];
    assert_eq!((row.source.as_str(), row.vertex, row.target.as_str()), ("A7", 2, "A2"));
    let a7 = &s.labels.get("A7").unwrap()[0].quiver;
    let r = is_good_mutation(&Algebra::new(a7).unwrap(), 2).unwrap();
    assert!(r.verdict.is_good());
    assert_eq!(&r.endomorphism_cartan, row.endomorphism_cartan.as_ref().unwrap());
    let target = s.class.find(&r.mutated).unwrap().unwrap();
    let a2 = s.labels.get("A2").unwrap()[0].member;
    assert_eq!(s.class.orbit_of(target), s.class.orbit_of(a2));
}

fn check_example(s: &Setup, source: &str, k: usize, target: &str, perm: &str) {
    let q = &s.labels.get(source).unwrap()[0].quiver;
    let r = is_good_mutation(&Algebra::new(q).unwrap(), k).unwrap();
    assert!(r.verdict.is_good(), "{source} at {}: {:?}", k + 1, r.verdict);
    let t = &s.labels.get(target).unwrap()[0].quiver;
    let m = permutation_match(&r.mutated, t, perm).unwrap();
    assert!(m.is_match(), "{source} -> {target} via {perm}: {m:?}");
}

#[test]
fn e7_example_a5_at_vertex_4() {
    check_example(&E7, "A5", 3, "A3", "(457)");
}

#[test]
fn e8_example_a2_at_vertex_5() {
    check_example(&E8, "A2", 4, "A19", "(56)(78)");
}

fn statuses(s: &Setup, t: DynkinType) -> BTreeMap<String, (RowStatus, String)> {
    fixtures::good_mutation_rows(t)
        .unwrap()
        .iter()
        .map(|row| {
            let c = verify_table_row(&s.class, &s.labels, row).unwrap();
            (c.row, (c.status, c.detail))
        })
        .collect()
}

#[test]
fn e6_and_e7_table_rows_verify() {
    for (s, t, rows) in [(&*E6, DynkinType::E6, 10), (&*E7, DynkinType::E7, 56)] {
        let st = statuses(s, t);
        assert_eq!(st.len(), rows);
        for (row, (status, detail)) in &st {
            assert_eq!(*status, RowStatus::Verified, "{row}: {detail}");
        }
    }
}

/// The E8 rows that cannot be replayed as printed, kept as a regression
/// record of the reference errata: three misprinted relabelings, one
/// incoming-arrow list that no sink/source variant has, and one row needing
/// an unmarked sink/source adjustment. The acceptance suite reports them.
#[test]
fn e8_table_rows_fail_only_on_known_errata() {
    let s = &*E8;
    let rows = fixtures::good_mutation_rows(DynkinType::E8).unwrap();
    let mut failed = BTreeSet::new();
    let mut unverifiable = 0;
    for row in &rows {
        let c = verify_table_row(&s.class, &s.labels, row).unwrap();
        match c.status {
            RowStatus::Verified => {}
            RowStatus::Unverifiable => {
                // rows of the group whose arrow lists are missing
                assert_eq!(row.polynomial.as_deref(), Some("5(x^8+x^6+x^4+x^2+1)"), "{}", c.row);
                unverifiable += 1;
            }
            RowStatus::Failed => {
                failed.insert((row.source.clone(), row.opposite, row.vertex + 1, row.target.clone()));
            }
        }
    }
    let expected: BTreeSet<(String, bool, usize, String)> = [
        ("A7", true, 5, "A3"),
        ("A37", true, 6, "A21"),
        ("A68", false, 2, "A287"),
        ("A196", false, 2, "A80"),
        ("A141", false, 2, "A253"),
    ]
    .into_iter()
    .map(|(a, op, k, b)| (a.to_string(), op, k, b.to_string()))
    .collect();
    assert_eq!(failed, expected);
    assert_eq!(unverifiable, 53);
    assert_eq!(rows.len(), 201);
}

#[test]
fn opposite_pairings() {
    for (s, t) in [(&*E7, DynkinType::E7), (&*E8, DynkinType::E8)] {
        let mut inconsistent = Vec::new();
        let mut missing = Vec::new();
        for pair in fixtures::opposite_pairs(t).unwrap() {
            match verify_opposite_pair(&s.class, &s.labels, &pair).unwrap() {
                Some(true) => {}
                Some(false) => inconsistent.push((pair.label.clone(), pair.relation, pair.opposite_label.clone())),
                None => missing.push(pair.label.clone()),
            }
        }
        if t == DynkinType::E7 {
            assert!(inconsistent.is_empty() && missing.is_empty(), "{inconsistent:?} {missing:?}");
        } else {
            // A64^op is sink/source equivalent to A82, not isomorphic as listed
            assert_eq!(inconsistent, vec![("A64".to_string(), OppositeRelation::Equal, "A82".to_string())]);
        }
    }
}
