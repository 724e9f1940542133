//! Permutations in one-line notation, length-3 patterns, containment and
//! the classical symmetries.
//!
//! All values are stored 1-based, exactly as they are written: `[3,1,4,2]`
//! maps position 1 to 3, position 2 to 1 and so on.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `{1..n}` in one-line notation. `n = 0` is allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    entries: Vec<u32>,
}

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &v in &entries {
            let slot = (v as usize)
                .checked_sub(1)
                .filter(|&i| i < n)
                .ok_or_else(|| Error::InvalidInput(format!("{v} is not in 1..={n}")))?;
            if std::mem::replace(&mut seen[slot], true) {
                return Err(Error::InvalidInput(format!("{v} appears twice")));
            }
        }
        Ok(Permutation { entries })
    }

    /// Caller guarantees `entries` is a permutation of `1..=len`.
    pub(crate) fn from_entries_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation { entries }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n as u32).collect(),
        }
    }

    pub fn empty() -> Self {
        Permutation { entries: vec![] }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.entries
    }

    /// Number of positions `i` (1-based) with `p(i) = i`.
    pub fn fixed_points(&self) -> usize {
        fixed_point_count(self)
    }

    pub fn apply(&self, op: Symmetry) -> Permutation {
        symmetry(self, op)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(entries: Vec<u32>) -> Result<Self> {
        Permutation::new(entries)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.entries
    }
}

impl fmt::Display for Permutation {
    /// Compact digits for `n < 10`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("()");
        }
        if self.entries.len() < 10 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts compact digits (`"3142"`) or a comma list (`"3,1,4,2"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Permutation::empty());
        }
        let entries = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidInput(format!("bad entry `{t}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::InvalidInput(format!("bad digit `{c}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(entries)
    }
}

/// Rank sequence of distinct values: entry `i` becomes `|{x : seq[x] <= seq[i]}|`.
pub fn reduce<T: Ord>(seq: &[T]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
    if order.windows(2).any(|w| seq[w[0]] == seq[w[1]]) {
        return Err(Error::InvalidInput("reduce needs distinct entries".into()));
    }
    let mut entries = vec![0u32; seq.len()];
    for (rank, &i) in order.iter().enumerate() {
        entries[i] = rank as u32 + 1;
    }
    Ok(Permutation { entries })
}

/// True when three values appear in the same relative order as `q`.
#[inline]
pub(crate) fn same_order3(a: u32, b: u32, c: u32, q: &[u32; 3]) -> bool {
    (a < b) == (q[0] < q[1]) && (a < c) == (q[0] < q[2]) && (b < c) == (q[1] < q[2])
}

/// True iff some subsequence of `p` reduces to `q`.
pub fn contains(p: &Permutation, q: &Permutation) -> bool {
    let (p, q) = (p.entries(), q.entries());
    if q.len() > p.len() {
        return false;
    }
    if let &[q0, q1, q2] = q {
        let q = [q0, q1, q2];
        let n = p.len();
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    if same_order3(p[i], p[j], p[l], &q) {
                        return true;
                    }
                }
            }
        }
        return false;
    }
    contains_generic(p, q, &mut Vec::with_capacity(q.len()), 0)
}

// Extends a partial embedding of q's prefix one index at a time, pruning as
// soon as the chosen values stop being order-isomorphic to that prefix.
fn contains_generic(p: &[u32], q: &[u32], chosen: &mut Vec<u32>, from: usize) -> bool {
    let m = chosen.len();
    if m == q.len() {
        return true;
    }
    for i in from..=p.len() - (q.len() - m) {
        let v = p[i];
        if chosen
            .iter()
            .zip(&q[..m])
            .all(|(&c, &qc)| (c < v) == (qc < q[m]))
        {
            chosen.push(v);
            if contains_generic(p, q, chosen, i + 1) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn avoids_all(p: &Permutation, patterns: &PatternSet) -> bool {
    patterns.iter().all(|q| !contains(p, q.as_perm()))
}

pub fn fixed_point_count(p: &Permutation) -> usize {
    p.entries
        .iter()
        .enumerate()
        .filter(|&(i, &v)| v as usize == i + 1)
        .count()
}

/// Inverse, reverse, complement and reverse-complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symmetry {
    Inverse,
    Reverse,
    Complement,
    ReverseComplement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [
        Symmetry::Inverse,
        Symmetry::Reverse,
        Symmetry::Complement,
        Symmetry::ReverseComplement,
    ];

    /// Whether the map keeps the number of fixed points unchanged.
    pub fn preserves_fixed_points(self) -> bool {
        matches!(self, Symmetry::Inverse | Symmetry::ReverseComplement)
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::Inverse => "I",
            Symmetry::Reverse => "R",
            Symmetry::Complement => "C",
            Symmetry::ReverseComplement => "RC",
        })
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" => Ok(Symmetry::Inverse),
            "R" => Ok(Symmetry::Reverse),
            "C" => Ok(Symmetry::Complement),
            "RC" | "CR" => Ok(Symmetry::ReverseComplement),
            other => Err(Error::InvalidInput(format!("unknown symmetry `{other}`"))),
        }
    }
}

pub fn symmetry(p: &Permutation, op: Symmetry) -> Permutation {
    let n = p.len() as u32;
    let entries = match op {
        Symmetry::Inverse => {
            let mut inv = vec![0u32; p.len()];
            for (i, &v) in p.entries.iter().enumerate() {
                inv[v as usize - 1] = i as u32 + 1;
            }
            inv
        }
        Symmetry::Reverse => p.entries.iter().rev().copied().collect(),
        Symmetry::Complement => p.entries.iter().map(|&v| n + 1 - v).collect(),
        Symmetry::ReverseComplement => p.entries.iter().rev().map(|&v| n + 1 - v).collect(),
    };
    Permutation { entries }
}

/// A permutation of length exactly 3.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(p: Permutation) -> Result<Self> {
        if p.len() != 3 {
            return Err(Error::InvalidInput(format!(
                "patterns have length 3, got `{p}`"
            )));
        }
        Ok(Pattern(p))
    }

    pub fn as_perm(&self) -> &Permutation {
        &self.0
    }

    pub(crate) fn triple(&self) -> [u32; 3] {
        let e = self.0.entries();
        [e[0], e[1], e[2]]
    }

    pub fn apply(&self, op: Symmetry) -> Pattern {
        Pattern(symmetry(&self.0, op))
    }

    /// The six patterns of length 3 in lexicographic order.
    pub fn all() -> [Pattern; 6] {
        [
            [1, 2, 3],
            [1, 3, 2],
            [2, 1, 3],
            [2, 3, 1],
            [3, 1, 2],
            [3, 2, 1],
        ]
        .map(|e| Pattern(Permutation::from_entries_unchecked(e.to_vec())))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::new(s.parse()?)
    }
}

/// A non-empty set of distinct length-3 patterns, kept sorted so equal sets
/// compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PatternSet {
    patterns: Vec<Pattern>,
}

impl PatternSet {
    pub fn new(patterns: impl IntoIterator<Item = Pattern>) -> Result<Self> {
        let mut patterns: Vec<Pattern> = patterns.into_iter().collect();
        patterns.sort();
        patterns.dedup();
        if patterns.is_empty() {
            return Err(Error::InvalidInput("empty pattern set".into()));
        }
        Ok(PatternSet { patterns })
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Pattern> {
        self.patterns.iter()
    }

    pub fn contains_pattern(&self, q: &Pattern) -> bool {
        self.patterns.binary_search(q).is_ok()
    }

    pub(crate) fn triples(&self) -> Vec<[u32; 3]> {
        self.patterns.iter().map(Pattern::triple).collect()
    }

    pub fn apply(&self, op: Symmetry) -> PatternSet {
        let mut patterns: Vec<Pattern> = self.patterns.iter().map(|q| q.apply(op)).collect();
        patterns.sort();
        PatternSet { patterns }
    }

    /// Every pattern set of the given cardinality, in lexicographic order.
    pub fn all_of_size(cardinality: usize) -> Result<Vec<PatternSet>> {
        if !(1..=6).contains(&cardinality) {
            return Err(Error::InvalidInput(format!(
                "pattern-set cardinality must be in 1..=6, got {cardinality}"
            )));
        }
        let all = Pattern::all();
        let mut out = Vec::new();
        for mask in 0u32..64 {
            if mask.count_ones() as usize == cardinality {
                let members = (0..6)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| all[b].clone());
                out.push(PatternSet::new(members)?);
            }
        }
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, q) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// `"123,132"`, or `;`-separated when the patterns themselves are comma
    /// lists (`"1,2,3;1,3,2"`). A lone comma list such as `"1,3,2"` is read as
    /// a single pattern. Surrounding braces are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .trim();
        if s.is_empty() {
            return Err(Error::InvalidInput("empty pattern set".into()));
        }
        let pieces: Vec<&str> = if s.contains(';') {
            s.split(';').collect()
        } else if s.split(',').all(|t| t.trim().len() == 1) {
            vec![s]
        } else {
            s.split(',').collect()
        };
        let patterns = pieces
            .into_iter()
            .map(str::parse)
            .collect::<Result<Vec<Pattern>>>()?;
        let set = PatternSet::new(patterns)?;
        Ok(set)
    }
}

impl TryFrom<String> for PatternSet {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PatternSet> for String {
    fn from(t: PatternSet) -> String {
        t.to_string()
    }
}
