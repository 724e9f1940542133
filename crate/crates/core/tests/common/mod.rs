#![allow(dead_code)]

use refperm::{PatternSet, Permutation};

/// Every permutation of size `n`, in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::new(prefix.clone()).unwrap());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u32 + 1);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn every_pattern_set() -> Vec<PatternSet> {
    (1..=6)
        .flat_map(|c| PatternSet::all_of_size(c).unwrap())
        .collect()
}

pub fn set(s: &str) -> PatternSet {
    s.parse().unwrap()
}
