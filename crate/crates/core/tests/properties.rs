mod common;

use common::{all_perms, every_pattern_set, set};
use proptest::prelude::*;
use refperm::equivalence::orbit;
use refperm::perm::{contains, reduce, symmetry};
use refperm::{Oracle, Pattern, Permutation, Symmetry};

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

#[test]
fn inverse_and_reverse_complement_keep_fixed_points() {
    for n in 0..=7 {
        for p in all_perms(n) {
            for op in [Symmetry::Inverse, Symmetry::ReverseComplement] {
                assert_eq!(p.apply(op).fixed_points(), p.fixed_points(), "{p} {op}");
            }
        }
    }
}

#[test]
fn symmetries_commute_with_containment() {
    let patterns = Pattern::all();
    for n in 0..=6 {
        for p in all_perms(n) {
            for q in &patterns {
                for op in Symmetry::ALL {
                    assert_eq!(
                        contains(&p, q.as_perm()),
                        contains(&p.apply(op), &q.as_perm().apply(op)),
                        "{p} {q} {op}"
                    );
                }
            }
        }
    }
}

#[test]
fn tables_are_constant_on_orbits() {
    let oracle = Oracle::new();
    for t in every_pattern_set() {
        let reference = oracle.count_table(8, &t).unwrap();
        for u in orbit(&t).members {
            assert_eq!(
                oracle.count_table(8, &u).unwrap().rows,
                reference.rows,
                "{t} vs {u}"
            );
        }
    }
}

#[test]
fn monotone_pair_is_empty_from_five() {
    let oracle = Oracle::new();
    let t = set("123,321");
    for n in 5..=8 {
        assert_eq!(oracle.enumerate_avoiders(n, &t).unwrap().count(), 0);
    }
}

#[test]
fn oracle_matches_naive_filter() {
    let oracle = Oracle::new();
    for t in every_pattern_set() {
        for n in 0..=6 {
            let naive: Vec<Permutation> = all_perms(n)
                .into_iter()
                .filter(|p| t.iter().all(|q| !contains(p, q.as_perm())))
                .collect();
            let fast: Vec<Permutation> = oracle.enumerate_avoiders(n, &t).unwrap().collect();
            assert_eq!(fast, naive, "{t} n={n}");
        }
    }
}

proptest! {
    #[test]
    fn reduce_is_idempotent(v in proptest::collection::hash_set(0u32..1000, 0..12)) {
        let v: Vec<u32> = v.into_iter().collect();
        let once = reduce(&v).unwrap();
        prop_assert_eq!(once.len(), v.len());
        prop_assert_eq!(reduce(once.entries()).unwrap(), once);
    }

    #[test]
    fn symmetries_are_involutions(p in permutation(10)) {
        for op in Symmetry::ALL {
            prop_assert_eq!(symmetry(&symmetry(&p, op), op), p.clone());
        }
    }

    #[test]
    fn reverse_complement_is_composite(p in permutation(10)) {
        let rc = p.apply(Symmetry::Reverse).apply(Symmetry::Complement);
        prop_assert_eq!(p.apply(Symmetry::ReverseComplement), rc);
    }

    #[test]
    fn display_round_trips(p in permutation(14)) {
        let back: Permutation = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }
}
