//! Orbits of pattern sets under the fixed-point-preserving symmetries, and
//! empirical Super-Wilf classes (identical refined tables up to some `n`).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::oracle::Oracle;
use crate::perm::{Pattern, PatternSet, Symmetry};

/// Maps generating the acting group. Plain reverse and complement are left
/// out since they do not keep fixed points.
pub const GENERATORS: [Symmetry; 2] = [Symmetry::Inverse, Symmetry::ReverseComplement];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitClass {
    pub representative: PatternSet,
    pub members: Vec<PatternSet>,
}

impl OrbitClass {
    fn from_members(members: BTreeSet<PatternSet>) -> Self {
        let members: Vec<PatternSet> = members.into_iter().collect();
        OrbitClass {
            representative: members[0].clone(),
            members,
        }
    }
}

/// Closure of `{patterns}` under [`GENERATORS`], computed to a fixpoint.
pub fn orbit(patterns: &PatternSet) -> OrbitClass {
    let mut seen = BTreeSet::from([patterns.clone()]);
    let mut frontier = vec![patterns.clone()];
    while let Some(t) = frontier.pop() {
        for op in GENERATORS {
            let image = t.apply(op);
            if seen.insert(image.clone()) {
                frontier.push(image);
            }
        }
    }
    OrbitClass::from_members(seen)
}

/// Partition of all pattern sets of one cardinality into orbits, ordered by
/// representative.
pub fn orbit_classes(cardinality: usize) -> Result<Vec<OrbitClass>> {
    let mut classes: Vec<OrbitClass> = Vec::new();
    let mut placed = BTreeSet::new();
    for t in PatternSet::all_of_size(cardinality)? {
        if placed.contains(&t) {
            continue;
        }
        let class = orbit(&t);
        placed.extend(class.members.iter().cloned());
        classes.push(class);
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(classes)
}

/// Case classes: the orbits, except that every set forbidding both `123`
/// and `321` is collected into one class. Such sets have no avoiders once
/// `n >= 5`, so they are handled together.
pub fn symmetry_classes(cardinality: usize) -> Result<Vec<OrbitClass>> {
    let inc: Pattern = "123".parse()?;
    let dec: Pattern = "321".parse()?;
    let mut merged = BTreeSet::new();
    let mut classes = Vec::new();
    for class in orbit_classes(cardinality)? {
        if class
            .members
            .iter()
            .all(|t| t.contains_pattern(&inc) && t.contains_pattern(&dec))
        {
            merged.extend(class.members);
        } else {
            classes.push(class);
        }
    }
    if !merged.is_empty() {
        classes.push(OrbitClass::from_members(merged));
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(classes)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperWilfClass {
    pub members: Vec<PatternSet>,
    pub n_max: usize,
}

/// Where two classes first differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub left: PatternSet,
    pub right: PatternSet,
    pub n: usize,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperWilfReport {
    /// Equality was only checked for `n <= n_max`.
    pub empirical: bool,
    pub n_max: usize,
    pub classes: Vec<SuperWilfClass>,
    pub divergences: Vec<Divergence>,
}

/// Groups candidates whose refined tables agree for every `n <= n_max`.
/// Classes keep the order in which their first member appears.
pub fn super_wilf_classes(
    oracle: &Oracle,
    candidates: &[PatternSet],
    n_max: usize,
) -> Result<SuperWilfReport> {
    let mut tables = Vec::with_capacity(candidates.len());
    for t in candidates {
        tables.push(oracle.count_table(n_max, t)?);
    }
    let mut groups: Vec<(usize, Vec<PatternSet>)> = Vec::new();
    for (i, t) in candidates.iter().enumerate() {
        match groups
            .iter_mut()
            .find(|(rep, _)| tables[*rep].rows == tables[i].rows)
        {
            Some((_, members)) => {
                if !members.contains(t) {
                    members.push(t.clone());
                }
            }
            None => groups.push((i, vec![t.clone()])),
        }
    }
    let mut divergences = Vec::new();
    for a in 0..groups.len() {
        for b in a + 1..groups.len() {
            let (ta, tb) = (&tables[groups[a].0], &tables[groups[b].0]);
            let first = (0..=n_max).find_map(|n| {
                (0..=n)
                    .find(|&k| ta.get(n as i64, k as i64) != tb.get(n as i64, k as i64))
                    .map(|k| (n, k))
            });
            if let Some((n, k)) = first {
                divergences.push(Divergence {
                    left: candidates[groups[a].0].clone(),
                    right: candidates[groups[b].0].clone(),
                    n,
                    k,
                });
            }
        }
    }
    Ok(SuperWilfReport {
        empirical: true,
        n_max,
        classes: groups
            .into_iter()
            .map(|(_, members)| SuperWilfClass { members, n_max })
            .collect(),
        divergences,
    })
}
