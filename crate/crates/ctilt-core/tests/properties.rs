//! Randomized properties of mutation, canonical forms, Cartan matrices and
//! the associated polynomial. Class members are drawn from the enumerated E6,
//! E7 and E8 classes; general quivers from random skew-symmetric matrices.

use std::sync::LazyLock;

use proptest::prelude::*;

use ctilt_core::invariants::{associated_polynomial, permute_matrix};
use ctilt_core::linalg::transpose;
use ctilt_core::mutation_class::{dynkin_seed, enumerate, DynkinType, MutationClass};
use ctilt_core::quiver::QuiverJson;
use ctilt_core::relations::synthesize;
use ctilt_core::tilting::Algebra;
use ctilt_core::{Permutation, Quiver};

static CLASSES: LazyLock<Vec<MutationClass>> = LazyLock::new(|| {
    [DynkinType::E6, DynkinType::E7, DynkinType::E8]
        .into_iter()
        .map(|t| enumerate(&dynkin_seed(t), 10_000, true).unwrap())
        .collect()
});

/// A member of one of the type-E classes.
fn member() -> impl Strategy<Value = Quiver> {
    (0usize..3, any::<prop::sample::Index>())
        .prop_map(|(t, i)| {
            let class = &CLASSES[t];
            class.members[i.index(class.len())].clone()
        })
}

fn member_with_permutation() -> impl Strategy<Value = (Quiver, Permutation)> {
    member().prop_flat_map(|q| {
        let n = q.n();
        (Just(q), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|(q, img)| (q, Permutation::from_images(img).unwrap()))
    })
}

/// A quiver given by a random skew-symmetric matrix, entries in -2..=2.
fn general_quiver() -> impl Strategy<Value = Quiver> {
    (2usize..=6).prop_flat_map(|n| {
        prop::collection::vec(-2i64..=2, n * (n - 1) / 2).prop_map(move |upper| {
            let mut b = vec![0i64; n * n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let x = it.next().unwrap();
                    b[i * n + j] = x;
                    b[j * n + i] = -x;
                }
            }
            Quiver::from_signed(n, &b).unwrap()
        })
    })
}

/// An acyclic quiver: arrows only go from smaller to larger labels, then the
/// labels are shuffled.
fn acyclic_quiver() -> impl Strategy<Value = Quiver> {
    (2usize..=7).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(bits, img)| {
                let mut arrows = Vec::new();
                let mut it = bits.into_iter();
                for i in 0..n {
                    for j in i + 1..n {
                        if it.next().unwrap() {
                            arrows.push((i, j));
                        }
                    }
                }
                let q = Quiver::from_arrows(n, &arrows).unwrap();
                q.relabel(&Permutation::from_images(img).unwrap())
            })
    })
}

fn count_paths(q: &Quiver, i: usize, j: usize) -> i64 {
    if i == j {
        return 1;
    }
    q.outgoing(i).into_iter().map(|w| count_paths(q, w, j)).sum()
}

fn polynomial(q: &Quiver) -> String {
    associated_polynomial(&Algebra::new(q).unwrap().cartan).unwrap().normalized()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mutation_is_an_involution(q in general_quiver(), k in 0usize..6) {
        let k = k % q.n();
        prop_assert_eq!(q.mutate(k).unwrap().mutate(k).unwrap(), q);
    }

    #[test]
    fn mutation_stays_in_the_class(q in member(), k in 0usize..8) {
        let k = k % q.n();
        let class = CLASSES.iter().find(|c| c.members[0].n() == q.n()).unwrap();
        prop_assert!(class.find(&q.mutate(k).unwrap()).unwrap().is_some());
    }

    #[test]
    fn canonical_key_ignores_labels((q, p) in member_with_permutation()) {
        prop_assert_eq!(q.relabel(&p).canonical_key().unwrap(), q.canonical_key().unwrap());
        let found = q.isomorphism_to(&q.relabel(&p)).unwrap().unwrap();
        prop_assert_eq!(q.relabel(&found), q.relabel(&p));
    }

    #[test]
    fn canonical_key_ignores_labels_of_general_quivers(q in general_quiver(), seed in any::<u64>()) {
        let n = q.n();
        let mut img: Vec<usize> = (0..n).collect();
        img.rotate_left((seed as usize) % n);
        if seed % 2 == 0 { img.swap(0, n - 1); }
        let p = Permutation::from_images(img).unwrap();
        prop_assert_eq!(q.relabel(&p).canonical_key().unwrap(), q.canonical_key().unwrap());
    }

    #[test]
    fn cartan_follows_relabeling((q, p) in member_with_permutation()) {
        let c = Algebra::new(&q).unwrap().cartan;
        let cp = Algebra::new(&q.relabel(&p)).unwrap().cartan;
        prop_assert_eq!(cp, permute_matrix(&c, &p));
    }

    #[test]
    fn cartan_of_opposite_is_transpose(q in member()) {
        let c = Algebra::new(&q).unwrap().cartan;
        let co = Algebra::new(&q.opposite()).unwrap().cartan;
        prop_assert_eq!(co, transpose(&c));
    }

    #[test]
    fn polynomial_is_invariant_under_opposite_and_reflection(q in member()) {
        let p = polynomial(&q);
        prop_assert_eq!(polynomial(&q.opposite()), p.clone());
        for k in 0..q.n() {
            if q.is_sink(k) || q.is_source(k) {
                prop_assert_eq!(polynomial(&q.reflect(k).unwrap()), p.clone());
            }
        }
    }

    #[test]
    fn acyclic_quivers_are_hereditary(q in acyclic_quiver()) {
        let rels = synthesize(&q).unwrap();
        prop_assert!(rels.is_empty());
        let c = Algebra::new(&q).unwrap().cartan;
        for i in 0..q.n() {
            for j in 0..q.n() {
                prop_assert_eq!(c[i][j], count_paths(&q, i, j));
            }
        }
    }

    #[test]
    fn tuple_and_json_round_trip(q in general_quiver()) {
        if q.is_simply_laced() && q.arrow_count() > 0 {
            prop_assert_eq!(Quiver::parse_tuples(&q.to_string(), Some(q.n())).unwrap(), q.clone());
        }
        let text = serde_json::to_string(&q.to_json()).unwrap();
        let back: QuiverJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(Quiver::from_json(&back).unwrap(), q);
    }

    #[test]
    fn permutation_cycle_notation_round_trips(img in Just((0..8).collect::<Vec<usize>>()).prop_shuffle()) {
        let p = Permutation::from_images(img).unwrap();
        prop_assert_eq!(Permutation::parse_cycles(&p.to_string(), 8).unwrap(), p.clone());
        prop_assert!(p.compose(&p.inverse()).is_identity());
    }
}
