mod common;

use common::set;
use num_bigint::BigInt;
use refperm::formulas::{fibonacci, recurrence_check, sum_identity, Recurrence};
use refperm::genfun::{gf_for_k, sum_over_k};
use refperm::{evaluate, EvalResult, FormulaId, Oracle};

#[test]
fn gf_coefficients_match_oracle() {
    let oracle = Oracle::new();
    let table = oracle.count_table(10, &set("231,321")).unwrap();
    for k in 0..=8 {
        let series = gf_for_k(k).series_coefficients(10).unwrap();
        for (n, c) in series.iter().enumerate() {
            assert_eq!(
                *c,
                BigInt::from(table.get(n as i64, k as i64)),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn gf_vanishes_below_k() {
    for k in 0..=8 {
        let series = gf_for_k(k).series_coefficients(12).unwrap();
        assert!(series[..k].iter().all(|c| *c == BigInt::from(0)));
        assert_eq!(series[k], BigInt::from(1));
    }
}

#[test]
fn summed_series_doubles() {
    let s = sum_over_k(10, 10).unwrap();
    assert_eq!(s[0], BigInt::from(1));
    for (n, c) in s.iter().enumerate().skip(1) {
        assert_eq!(*c, BigInt::from(1u64 << (n - 1)));
    }
}

#[test]
fn fixed_point_free_counts_are_fibonacci() {
    let oracle = Oracle::new();
    let t = set("231,321");
    for n in 2..=10 {
        let row = oracle.refined_count(n, &t).unwrap();
        assert_eq!(row[0], fibonacci(n as i64 - 2).unwrap());
    }
}

#[test]
fn totals_match_identities() {
    let oracle = Oracle::new();
    for t in ["132,321", "231,321"] {
        let t = set(t);
        for n in 1..=9 {
            let total: num_bigint::BigUint = oracle.refined_count(n, &t).unwrap().iter().sum();
            assert_eq!(total, sum_identity(&t, n as i64).unwrap(), "{t} n={n}");
        }
    }
}

#[test]
fn recurrences_hold() {
    let oracle = Oracle::new();
    for rec in Recurrence::ALL {
        let report = recurrence_check(&oracle, rec, 9).unwrap();
        assert!(report.holds(), "{rec}: {:?}", report.violations);
        assert!(report.cells_checked > 0);
    }
}

#[test]
fn formula_rows_sum_to_totals_where_verified() {
    let oracle = Oracle::new();
    for id in [
        FormulaId::Pair123_132,
        FormulaId::Pair231_312,
        FormulaId::Pair132_321,
    ] {
        for n in id.min_n().max(0) as usize..=9 {
            let row = oracle.refined_count(n, &id.patterns()).unwrap();
            for (k, c) in row.iter().enumerate() {
                assert_eq!(
                    evaluate(id, n as i64, k as i64),
                    EvalResult::Value(c.clone())
                );
            }
        }
    }
}
