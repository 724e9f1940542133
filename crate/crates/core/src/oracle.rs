//! Brute-force ground truth: exhaustive enumeration of `S_n(T)` and the
//! fixed-point histogram over it.
//!
//! Enumeration walks prefixes in lexicographic order and abandons a prefix as
//! soon as it contains a forbidden pattern. Every occurrence of a pattern has a
//! last entry, so checking only the triples that end at the newly appended
//! value is enough to keep the walk exhaustive.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::{same_order3, PatternSet, Permutation};

pub const DEFAULT_ORACLE_CAP: usize = 11;

/// Lexicographic stream of the permutations of size `n` avoiding a pattern set.
pub struct Avoiders {
    n: usize,
    patterns: Vec<[u32; 3]>,
    prefix: Vec<u32>,
    used: Vec<bool>,
    // next candidate value to try at each depth
    cursor: Vec<u32>,
    done: bool,
}

impl Avoiders {
    fn new(n: usize, patterns: &PatternSet) -> Self {
        Avoiders {
            n,
            patterns: patterns.triples(),
            prefix: Vec::with_capacity(n),
            used: vec![false; n + 1],
            cursor: vec![1; n + 1],
            done: false,
        }
    }

    fn extension_ok(&self, v: u32) -> bool {
        let p = &self.prefix;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if self.patterns.iter().any(|q| same_order3(p[i], p[j], v, q)) {
                    return false;
                }
            }
        }
        true
    }

    fn pop(&mut self) {
        if let Some(v) = self.prefix.pop() {
            self.used[v as usize] = false;
        }
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        loop {
            if self.done {
                return None;
            }
            let depth = self.prefix.len();
            if depth == self.n {
                let out = Permutation::from_entries_unchecked(self.prefix.clone());
                if depth == 0 {
                    self.done = true;
                } else {
                    self.pop();
                }
                return Some(out);
            }
            let start = self.cursor[depth];
            let found =
                (start..=self.n as u32).find(|&v| !self.used[v as usize] && self.extension_ok(v));
            match found {
                Some(v) => {
                    self.cursor[depth] = v + 1;
                    self.used[v as usize] = true;
                    self.prefix.push(v);
                    self.cursor[depth + 1] = 1;
                }
                None if depth == 0 => self.done = true,
                None => self.pop(),
            }
        }
    }
}

/// Exact counts `s_n^k(T)` for `n = 0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub patterns: PatternSet,
    pub rows: BTreeMap<usize, Vec<BigUint>>,
}

impl CountTable {
    /// `s_n^k`, taken as zero for `k < 0`, `k > n` or `n < 0`.
    pub fn get(&self, n: i64, k: i64) -> BigUint {
        if n < 0 || k < 0 || k > n {
            return BigUint::zero();
        }
        self.rows
            .get(&(n as usize))
            .and_then(|row| row.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        self.rows.get(&n).map(Vec::as_slice)
    }

    pub fn row_sum(&self, n: usize) -> BigUint {
        self.rows
            .get(&n)
            .map(|r| r.iter().sum())
            .unwrap_or_default()
    }

    pub fn n_max(&self) -> usize {
        self.rows.keys().next_back().copied().unwrap_or(0)
    }
}

type CacheKey = (PatternSet, usize);

/// Enumeration front end with a size cap and a thread-safe result cache.
pub struct Oracle {
    cap: usize,
    cache: RwLock<HashMap<CacheKey, Arc<Vec<BigUint>>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::with_cap(DEFAULT_ORACLE_CAP)
    }
}

impl Oracle {
    pub fn new() -> Self {
        Oracle::default()
    }

    pub fn with_cap(cap: usize) -> Self {
        Oracle {
            cap,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_cap(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::ResourceLimit {
                what: "oracle",
                requested: n,
                cap: self.cap,
            });
        }
        Ok(())
    }

    pub fn enumerate_avoiders(&self, n: usize, patterns: &PatternSet) -> Result<Avoiders> {
        self.check_cap(n)?;
        Ok(Avoiders::new(n, patterns))
    }

    /// Entry `k` is the number of avoiders of size `n` with exactly `k` fixed points.
    pub fn refined_count(&self, n: usize, patterns: &PatternSet) -> Result<Vec<BigUint>> {
        self.refined_count_shared(n, patterns)
            .map(|row| row.as_ref().clone())
    }

    pub(crate) fn refined_count_shared(
        &self,
        n: usize,
        patterns: &PatternSet,
    ) -> Result<Arc<Vec<BigUint>>> {
        self.check_cap(n)?;
        let key = (patterns.clone(), n);
        if let Some(row) = self.cache.read().expect("oracle cache poisoned").get(&key) {
            return Ok(Arc::clone(row));
        }
        let mut counts = vec![0u64; n + 1];
        for p in Avoiders::new(n, patterns) {
            counts[p.fixed_points()] += 1;
        }
        let row = Arc::new(counts.into_iter().map(BigUint::from).collect::<Vec<_>>());
        // Two threads may race to fill the same key; both computed the same row.
        let mut cache = self.cache.write().expect("oracle cache poisoned");
        Ok(Arc::clone(cache.entry(key).or_insert(row)))
    }

    pub fn count_table(&self, n_max: usize, patterns: &PatternSet) -> Result<CountTable> {
        self.check_cap(n_max)?;
        let mut rows = BTreeMap::new();
        for n in 0..=n_max {
            rows.insert(n, self.refined_count(n, patterns)?);
        }
        Ok(CountTable {
            patterns: patterns.clone(),
            rows,
        })
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.read().expect("oracle cache poisoned").len()
    }
}
