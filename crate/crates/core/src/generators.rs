//! Direct constructions of avoidance classes from their structural
//! descriptions, without filtering `S_n`.
//!
//! A handful of base classes have a construction of their own. Any other
//! class that is the image of a base class under one of the eight
//! symmetries of the square is produced by building the base class and
//! mapping every permutation through that symmetry; these maps send
//! `S_n(T)` onto `S_n(g(T))`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::perm::{PatternSet, Permutation, Symmetry};

pub const DEFAULT_GENERATOR_CAP: usize = 14;

/// One-parameter families `π(j)`; each lists its printed parameter range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OneParamForm {
    /// `{123,132,231}`: `n (n-1) .. (n-j+1) (n-j-1) .. 2 1 (n-j)`, `0 <= j <= n-1`.
    DescendingWithLift,
    /// `{123,231,312}`: `j (j-1) .. 1 n (n-1) .. (j+1)`, `1 <= j <= n`.
    TwoDescendingRuns,
    /// `{132,213,231}`: `n (n-1) .. (n-j+1) 1 2 .. (n-j)`, `1 <= j <= n`.
    DescendingHeadAscendingTail,
    /// `{132,213,321}`: `j (j+1) .. n 1 2 .. (j-1)`, `1 <= j <= n`.
    Rotation,
    /// `{132,231,312}`: `j (j-1) .. 1 (j+1) .. n`, `1 <= j <= n`.
    ReversedPrefix,
    /// `{132,231,321}`: `j 1 2 .. (j-1) (j+1) .. n`, `1 <= j <= n`.
    LiftedFirst,
}

impl OneParamForm {
    fn build(self, n: u32) -> Vec<Vec<u32>> {
        let desc = |hi: u32, lo: u32| (lo..=hi).rev();
        match self {
            OneParamForm::DescendingWithLift => (0..n)
                .map(|j| {
                    let mut p: Vec<u32> = desc(n, n - j + 1).collect();
                    p.extend(desc(n - j - 1, 1));
                    p.push(n - j);
                    p
                })
                .collect(),
            OneParamForm::TwoDescendingRuns => (1..=n)
                .map(|j| desc(j, 1).chain(desc(n, j + 1)).collect())
                .collect(),
            OneParamForm::DescendingHeadAscendingTail => (1..=n)
                .map(|j| desc(n, n - j + 1).chain(1..=n - j).collect())
                .collect(),
            OneParamForm::Rotation => (1..=n).map(|j| (j..=n).chain(1..j).collect()).collect(),
            OneParamForm::ReversedPrefix => (1..=n)
                .map(|j| desc(j, 1).chain(j + 1..=n).collect())
                .collect(),
            OneParamForm::LiftedFirst => (1..=n)
                .map(|j| std::iter::once(j).chain(1..j).chain(j + 1..=n).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// `{123,132}`: blocks of consecutive values, each written as a
    /// descending run followed by its maximum, blocks in decreasing order.
    BlockDesc,
    /// `{132,213}`: blocks of consecutive values in increasing order, blocks
    /// in decreasing order.
    BlockAsc,
    /// `{123,231}`: parameterized by the position of `n` and, when `n` comes
    /// first, by the lengths of the three descending runs.
    Wedge123_231,
    /// `{132,231}`: `n` is first or last.
    NFirstRecursive,
    /// `{231,312}`: an avoider followed by a descending run `n (n-1) .. j`.
    TailDescRecursive,
    /// `{231,321}`: an avoider followed by `n (n-j+1) (n-j+2) .. (n-1)`.
    HeadMaxRecursive,
    OneParam(OneParamForm),
    /// `{231,312,321}`: starts with `1` or with `2 1`.
    Prefix12Recursive,
}

impl FamilyKind {
    /// Every kind with its base class, in resolution priority order.
    pub fn bases() -> Vec<(FamilyKind, PatternSet)> {
        use FamilyKind::*;
        use OneParamForm::*;
        [
            (BlockDesc, "123,132"),
            (BlockAsc, "132,213"),
            (Wedge123_231, "123,231"),
            (NFirstRecursive, "132,231"),
            (TailDescRecursive, "231,312"),
            (HeadMaxRecursive, "231,321"),
            (OneParam(DescendingWithLift), "123,132,231"),
            (OneParam(TwoDescendingRuns), "123,231,312"),
            (OneParam(DescendingHeadAscendingTail), "132,213,231"),
            (OneParam(Rotation), "132,213,321"),
            (OneParam(ReversedPrefix), "132,231,312"),
            (OneParam(LiftedFirst), "132,231,321"),
            (Prefix12Recursive, "231,312,321"),
        ]
        .into_iter()
        .map(|(k, s)| (k, s.parse().expect("built-in pattern text is valid")))
        .collect()
    }

    pub fn name(self) -> &'static str {
        use OneParamForm::*;
        match self {
            FamilyKind::BlockDesc => "block-desc",
            FamilyKind::BlockAsc => "block-asc",
            FamilyKind::Wedge123_231 => "wedge-123-231",
            FamilyKind::NFirstRecursive => "n-first-recursive",
            FamilyKind::TailDescRecursive => "tail-desc-recursive",
            FamilyKind::HeadMaxRecursive => "head-max-recursive",
            FamilyKind::OneParam(DescendingWithLift) => "one-param:descending-with-lift",
            FamilyKind::OneParam(TwoDescendingRuns) => "one-param:two-descending-runs",
            FamilyKind::OneParam(DescendingHeadAscendingTail) => {
                "one-param:descending-head-ascending-tail"
            }
            FamilyKind::OneParam(Rotation) => "one-param:rotation",
            FamilyKind::OneParam(ReversedPrefix) => "one-param:reversed-prefix",
            FamilyKind::OneParam(LiftedFirst) => "one-param:lifted-first",
            FamilyKind::Prefix12Recursive => "prefix-12-recursive",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A symmetry of the square, applied as a sequence of basic maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Transform(&'static [Symmetry]);

impl Transform {
    pub const IDENTITY: Transform = Transform(&[]);

    pub const ALL: [Transform; 8] = {
        use Symmetry::*;
        [
            Transform(&[]),
            Transform(&[Reverse]),
            Transform(&[Complement]),
            Transform(&[ReverseComplement]),
            Transform(&[Inverse]),
            Transform(&[Inverse, Reverse]),
            Transform(&[Inverse, Complement]),
            Transform(&[Inverse, ReverseComplement]),
        ]
    };

    pub fn preserves_fixed_points(self) -> bool {
        self.0.iter().all(|op| op.preserves_fixed_points())
    }

    pub fn steps(self) -> &'static [Symmetry] {
        self.0
    }

    pub fn apply_perm(self, p: &Permutation) -> Permutation {
        self.0.iter().fold(p.clone(), |acc, &op| acc.apply(op))
    }

    pub fn apply_set(self, t: &PatternSet) -> PatternSet {
        self.0.iter().fold(t.clone(), |acc, &op| acc.apply(op))
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("id");
        }
        let names: Vec<String> = self.0.iter().map(Symmetry::to_string).collect();
        f.write_str(&names.join(" then "))
    }
}

/// How a pattern set is produced: build `base` with `kind`, then map by `transform`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralFamily {
    pub patterns: PatternSet,
    pub kind: FamilyKind,
    pub base: PatternSet,
    pub transform: Transform,
}

/// Exact base classes win. Otherwise a base whose orbit under the
/// fixed-point-preserving maps contains `patterns`, and only then one
/// reached through reverse or complement. Ties go to priority order.
pub fn family_for(patterns: &PatternSet) -> Result<StructuralFamily> {
    let bases = FamilyKind::bases();
    if let Some((kind, base)) = bases.iter().find(|(_, b)| b == patterns) {
        return Ok(StructuralFamily {
            patterns: patterns.clone(),
            kind: *kind,
            base: base.clone(),
            transform: Transform::IDENTITY,
        });
    }
    let (keeps, moves): (Vec<Transform>, Vec<Transform>) = Transform::ALL
        .into_iter()
        .partition(|g| g.preserves_fixed_points());
    for transforms in [keeps, moves] {
        for (kind, base) in &bases {
            for &g in &transforms {
                if g.apply_set(base) != *patterns {
                    continue;
                }
                return Ok(StructuralFamily {
                    patterns: patterns.clone(),
                    kind: *kind,
                    base: base.clone(),
                    transform: g,
                });
            }
        }
    }
    Err(Error::UnsupportedFamily(patterns.clone()))
}

pub fn is_supported(patterns: &PatternSet) -> bool {
    family_for(patterns).is_ok()
}

type Family = Arc<Vec<Permutation>>;

/// Structural generator with a size cap and a memo of base constructions.
pub struct Generators {
    cap: usize,
    memo: RwLock<HashMap<(FamilyKind, usize), Family>>,
}

impl Default for Generators {
    fn default() -> Self {
        Generators::with_cap(DEFAULT_GENERATOR_CAP)
    }
}

impl Generators {
    pub fn new() -> Self {
        Generators::default()
    }

    pub fn with_cap(cap: usize) -> Self {
        Generators {
            cap,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `S_n(T)` in lexicographic order, without duplicates.
    pub fn generate(&self, patterns: &PatternSet, n: usize) -> Result<Vec<Permutation>> {
        let family = family_for(patterns)?;
        if n > self.cap {
            return Err(Error::ResourceLimit {
                what: "generator",
                requested: n,
                cap: self.cap,
            });
        }
        let base = self.base(family.kind, n);
        if family.transform == Transform::IDENTITY {
            return Ok(base.as_ref().clone());
        }
        let mapped: BTreeSet<Permutation> = base
            .iter()
            .map(|p| family.transform.apply_perm(p))
            .collect();
        Ok(mapped.into_iter().collect())
    }

    /// Fixed-point histogram over [`Generators::generate`].
    pub fn generate_refined(&self, patterns: &PatternSet, n: usize) -> Result<Vec<BigUint>> {
        let mut counts = vec![0u64; n + 1];
        for p in self.generate(patterns, n)? {
            counts[p.fixed_points()] += 1;
        }
        Ok(counts.into_iter().map(BigUint::from).collect())
    }

    fn base(&self, kind: FamilyKind, n: usize) -> Family {
        if let Some(hit) = self
            .memo
            .read()
            .expect("generator memo poisoned")
            .get(&(kind, n))
        {
            return Arc::clone(hit);
        }
        let raw = if n == 0 {
            vec![vec![]]
        } else {
            self.construct(kind, n as u32)
        };
        let set: BTreeSet<Permutation> = raw
            .into_iter()
            .map(Permutation::from_entries_unchecked)
            .collect();
        let family = Arc::new(set.into_iter().collect::<Vec<_>>());
        let mut memo = self.memo.write().expect("generator memo poisoned");
        Arc::clone(memo.entry((kind, n)).or_insert(family))
    }

    fn smaller(&self, kind: FamilyKind, m: u32) -> Family {
        self.base(kind, m as usize)
    }

    fn construct(&self, kind: FamilyKind, n: u32) -> Vec<Vec<u32>> {
        match kind {
            FamilyKind::BlockDesc => blocks(n, |lo, hi, out| {
                out.extend((lo..hi).rev());
                out.push(hi);
            }),
            FamilyKind::BlockAsc => blocks(n, |lo, hi, out| out.extend(lo..=hi)),
            FamilyKind::Wedge123_231 => wedge(n),
            FamilyKind::NFirstRecursive => {
                let mut out: Vec<Vec<u32>> = self
                    .smaller(kind, n - 1)
                    .iter()
                    .map(|p| p.entries().iter().copied().chain([n]).collect())
                    .collect();
                if n >= 2 {
                    // each of 2..n-1 sits left of 1 (decreasing) or right of 1 (increasing)
                    let middle: Vec<u32> = (2..n).collect();
                    for mask in 0u64..1 << middle.len() {
                        let left = middle.iter().rev().filter(|&&v| mask >> (v - 2) & 1 == 1);
                        let right = middle.iter().filter(|&&v| mask >> (v - 2) & 1 == 0);
                        let mut p = vec![n];
                        p.extend(left);
                        p.push(1);
                        p.extend(right);
                        out.push(p);
                    }
                }
                out
            }
            FamilyKind::TailDescRecursive => (1..=n)
                .flat_map(|j| {
                    self.smaller(kind, j - 1)
                        .iter()
                        .map(|p| p.entries().iter().copied().chain((j..=n).rev()).collect())
                        .collect::<Vec<Vec<u32>>>()
                })
                .collect(),
            FamilyKind::HeadMaxRecursive => (1..=n)
                .flat_map(|j| {
                    let tail: Vec<u32> = std::iter::once(n).chain(n - j + 1..n).collect();
                    self.smaller(kind, n - j)
                        .iter()
                        .map(|p| {
                            p.entries()
                                .iter()
                                .copied()
                                .chain(tail.iter().copied())
                                .collect()
                        })
                        .collect::<Vec<Vec<u32>>>()
                })
                .collect(),
            FamilyKind::OneParam(form) => form.build(n),
            FamilyKind::Prefix12Recursive => {
                let mut out: Vec<Vec<u32>> = self
                    .smaller(kind, n - 1)
                    .iter()
                    .map(|p| {
                        std::iter::once(1)
                            .chain(p.entries().iter().map(|v| v + 1))
                            .collect()
                    })
                    .collect();
                if n >= 2 {
                    out.extend(self.smaller(kind, n - 2).iter().map(|p| {
                        [2, 1]
                            .into_iter()
                            .chain(p.entries().iter().map(|v| v + 2))
                            .collect()
                    }));
                }
                out
            }
        }
    }
}

/// Walks every composition of `n` into blocks of consecutive values, top
/// values first, writing each block with `write(lo, hi, out)`.
fn blocks(n: u32, write: impl Fn(u32, u32, &mut Vec<u32>)) -> Vec<Vec<u32>> {
    (0u64..1 << (n - 1))
        .map(|cuts| {
            let mut out = Vec::with_capacity(n as usize);
            let mut hi = n;
            // bit b set: a block boundary below value n - b
            for b in 0..n {
                let lo = n - b;
                if b == n - 1 || cuts >> b & 1 == 1 {
                    write(lo, hi, &mut out);
                    hi = lo - 1;
                }
            }
            out
        })
        .collect()
}

fn wedge(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    // n at position i >= 2: (i-1) .. 1 n (n-1) .. i
    for i in 2..=n {
        out.push((1..i).rev().chain((i..=n).rev()).collect());
    }
    // n first: n .. (n-x+1), y .. 1, (n-x) .. (y+1)
    for x in 1..=n.saturating_sub(2) {
        for y in 1..n - x {
            out.push(
                (n - x + 1..=n)
                    .rev()
                    .chain((1..=y).rev())
                    .chain((y + 1..=n - x).rev())
                    .collect(),
            );
        }
    }
    out.push((1..=n).rev().collect());
    out
}
