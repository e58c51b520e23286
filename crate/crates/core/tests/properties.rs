//! Property tests for the invariants the engine relies on.

use std::sync::OnceLock;

use proptest::prelude::*;

use autsurf::cyclotomic::CyclotomicValue;
use autsurf::fuchsian::Signature;
use autsurf::genvec::{enumerate_vectors, orbit_classes_with, vector_satisfies, BraidDirection, GeneratingVector};
use autsurf::group::{automorphisms, FiniteGroup, GroupMorphism, GroupSpec};
use autsurf::reptheory::{dihedral_characters, find_root_of_unity, metacyclic4_characters};

struct Fixture {
    group: FiniteGroup,
    auts: Vec<GroupMorphism>,
    class_of: Vec<usize>,
    vectors: Vec<GeneratingVector>,
}

fn fixture(spec: &str, sig: &str) -> Fixture {
    let group = spec.parse::<GroupSpec>().unwrap().build().unwrap();
    let sig: Signature = sig.parse().unwrap();
    let class_of = group.class_map(&group.conjugacy_classes());
    Fixture {
        auts: automorphisms(&group).unwrap(),
        vectors: enumerate_vectors(&group, &sig).unwrap(),
        class_of,
        group,
    }
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        vec![
            fixture("dihedral:22", "0;2,2,2,2,2"),
            fixture("metacyclic:13,4,5", "0;2,2,4,4"),
            fixture("cyclic:6xcyclic:2", "0;2,6,6"),
        ]
    })
}

#[derive(Debug, Clone)]
enum Move {
    Braid(usize, bool),
    Aut(usize),
}

fn moves() -> impl Strategy<Value = Vec<Move>> {
    prop::collection::vec(
        prop_oneof![
            4 => (0usize..8, any::<bool>()).prop_map(|(i, f)| Move::Braid(i, f)),
            1 => any::<usize>().prop_map(Move::Aut),
        ],
        1..40,
    )
}

fn direction(forward: bool) -> BraidDirection {
    if forward {
        BraidDirection::Forward
    } else {
        BraidDirection::Backward
    }
}

fn class_multiset(f: &Fixture, v: &GeneratingVector) -> Vec<usize> {
    let mut c: Vec<usize> = v.elliptic.iter().map(|&x| f.class_of[x]).collect();
    c.sort_unstable();
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn braid_moves_invert(which in 0usize..3, pick in any::<usize>(), i in 0usize..8, forward in any::<bool>()) {
        let f = &fixtures()[which];
        let v = &f.vectors[pick % f.vectors.len()];
        let i = 1 + i % (v.signature.len() - 1);
        let w = v.braid_move(&f.group, i, direction(forward)).unwrap();
        prop_assert_eq!(&w.braid_move(&f.group, i, direction(!forward)).unwrap(), v);
    }

    #[test]
    fn moves_preserve_invariants(which in 0usize..3, pick in any::<usize>(), walk in moves()) {
        let f = &fixtures()[which];
        let start = &f.vectors[pick % f.vectors.len()];
        let mut v = start.clone();
        for m in walk {
            v = match m {
                Move::Braid(i, fw) => {
                    let i = 1 + i % (v.signature.len() - 1);
                    let w = v.braid_move(&f.group, i, direction(fw)).unwrap();
                    prop_assert_eq!(class_multiset(f, &w), class_multiset(f, &v));
                    w
                }
                Move::Aut(k) => v.apply_automorphism(&f.auts[k % f.auts.len()]),
            };
            prop_assert!(vector_satisfies(&f.group, &v));
            prop_assert!(f.group.generates(&v.elliptic));
            prop_assert_eq!(v.long_relation(&f.group), f.group.identity());
            prop_assert_eq!(v.action_genus(&f.group).unwrap(), start.action_genus(&f.group).unwrap());
        }
    }

    #[test]
    fn metacyclic_multiplication_is_associative(a in any::<usize>(), b in any::<usize>(), c in any::<usize>()) {
        let g = &fixtures()[1].group;
        let (a, b, c) = (a % g.order(), b % g.order(), c % g.order());
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
    }

    #[test]
    fn cyclotomic_ring_laws(
        n in prop::sample::select(vec![4u32, 5, 8, 12, 20, 44, 52]),
        a in prop::collection::vec(-5i64..=5, 0..12),
        b in prop::collection::vec(-5i64..=5, 0..12),
        c in prop::collection::vec(-5i64..=5, 0..12),
    ) {
        let (a, b, c) = (
            CyclotomicValue::from_poly(n, &a),
            CyclotomicValue::from_poly(n, &b),
            CyclotomicValue::from_poly(n, &c),
        );
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert!((&a - &a).is_zero());

        let (x, y) = a.to_complex();
        let (u, v) = b.to_complex();
        let (p, q) = (&a * &b).to_complex();
        prop_assert!((p - (x * u - y * v)).abs() < 1e-6);
        prop_assert!((q - (x * v + y * u)).abs() < 1e-6);
    }
}

#[test]
fn worker_count_does_not_change_orbits() {
    for (spec, sig) in [
        ("dihedral:22", "0;2,2,2,2,2"),
        ("dihedral:12", "0;2,2,2,2,2"),
        ("metacyclic:13,4,5", "0;2,2,4,4"),
        ("cyclic:6xcyclic:2", "0;2,6,6"),
    ] {
        let g = spec.parse::<GroupSpec>().unwrap().build().unwrap();
        let sig: Signature = sig.parse().unwrap();
        let base = orbit_classes_with(&g, &sig, 1).unwrap();
        for workers in [2, 3, 4, 8] {
            assert_eq!(orbit_classes_with(&g, &sig, workers).unwrap(), base, "{spec} with {workers} workers");
        }
    }
}

#[test]
fn character_tables_are_orthogonal() {
    for q in [3, 5, 7, 11, 13, 17, 19, 23] {
        dihedral_characters(q).unwrap().verify_orthogonality().unwrap();
    }
    for q in [5, 13, 17, 29, 37] {
        let u = find_root_of_unity(q, 4).unwrap();
        metacyclic4_characters(q, u).unwrap().verify_orthogonality().unwrap();
    }
}
