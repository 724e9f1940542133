//! Cross-checks every formula, generator, recurrence and generating function
//! against the brute-force oracle.
//!
//! The oracle is treated as ground truth. A mismatch is reported as data
//! (`discrepant` plus the first counterexample) and never patched over.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::equivalence::super_wilf_classes;
use crate::error::Result;
use crate::formulas::{
    evaluate, jacobsthal, recurrence_check, sum_identity, EvalResult, FormulaId, FormulaRecord,
    Recurrence, Status,
};
use crate::generators::{is_supported, Generators};
use crate::genfun::{gf_for_k, sum_over_k};
use crate::oracle::Oracle;
use crate::perm::{PatternSet, Permutation};

/// Default sweep size for quick runs.
pub const CI_N_MAX: usize = 8;
/// Sweep size for a full audit.
pub const RELEASE_N_MAX: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditKind {
    Formula,
    Generator,
    Recurrence,
    GeneratingFunction,
    Total,
    Identity,
    Bound,
    SuperWilf,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub k: usize,
    pub formula_value: String,
    pub oracle_value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// One compared cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditCell {
    pub n: usize,
    pub k: usize,
    pub formula_value: String,
    pub oracle_value: String,
    pub matches: bool,
}

/// Outcome of auditing one item. Only the stable fields are serialized so
/// that repeated runs produce identical JSON.
#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    /// Item name: a formula id, or `<kind>:<patterns>` for other checks.
    pub formula: String,
    pub kind: AuditKind,
    pub status: Status,
    pub n_max: usize,
    pub cells_checked: usize,
    pub cells_skipped: usize,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub cells: Vec<AuditCell>,
    #[serde(skip)]
    pub duration: Duration,
}

impl AuditReport {
    fn new(name: impl Into<String>, kind: AuditKind, n_max: usize) -> Self {
        AuditReport {
            formula: name.into(),
            kind,
            status: Status::Untested,
            n_max,
            cells_checked: 0,
            cells_skipped: 0,
            counterexample: None,
            cells: Vec::new(),
            duration: Duration::ZERO,
        }
    }

    fn record(
        &mut self,
        n: usize,
        k: usize,
        formula: String,
        oracle: String,
        detail: Option<String>,
    ) {
        let matches = formula == oracle;
        self.cells_checked += 1;
        if !matches && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                n,
                k,
                formula_value: formula.clone(),
                oracle_value: oracle.clone(),
                detail,
            });
        }
        self.cells.push(AuditCell {
            n,
            k,
            formula_value: formula,
            oracle_value: oracle,
            matches,
        });
    }

    fn finish(mut self, started: Instant) -> Self {
        self.status = if self.counterexample.is_some() {
            Status::Discrepant
        } else {
            Status::Verified
        };
        self.duration = started.elapsed();
        self
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

/// Compares `evaluate(id, n, k)` with the oracle over the formula's domain.
pub fn audit_formula(oracle: &Oracle, id: FormulaId, n_max: usize) -> Result<AuditReport> {
    let started = Instant::now();
    let mut report = AuditReport::new(id.name(), AuditKind::Formula, n_max);
    let patterns = id.patterns();
    for n in 0..=n_max {
        let row = oracle.refined_count(n, &patterns)?;
        for (k, actual) in row.iter().enumerate() {
            let value = evaluate(id, n as i64, k as i64);
            if !value.is_in_domain() {
                report.cells_skipped += 1;
                continue;
            }
            let detail = match &value {
                EvalResult::NonIntegral(_) => Some("not an integer".to_string()),
                EvalResult::Negative(_) => Some("negative".to_string()),
                _ => None,
            };
            report.record(n, k, value.to_string(), actual.to_string(), detail);
        }
    }
    Ok(report.finish(started))
}

/// Set equality between the structural generator and the oracle.
pub fn audit_generator(
    oracle: &Oracle,
    generators: &Generators,
    patterns: &PatternSet,
    n_max: usize,
) -> Result<AuditReport> {
    let started = Instant::now();
    let mut report = AuditReport::new(format!("generator:{patterns}"), AuditKind::Generator, n_max);
    for n in 0..=n_max {
        let built = generators.generate(patterns, n)?;
        let truth: Vec<Permutation> = oracle.enumerate_avoiders(n, patterns)?.collect();
        report.cells_checked += 1;
        if built == truth || report.counterexample.is_some() {
            continue;
        }
        let missing = truth.iter().find(|p| built.binary_search(p).is_err());
        let extra = built.iter().find(|p| truth.binary_search(p).is_err());
        let (witness, detail) = match (missing, extra) {
            (Some(p), _) => (p, format!("generator misses {p}")),
            (None, Some(p)) => (p, format!("generator produces non-member {p}")),
            (None, None) => unreachable!("sorted, deduplicated lists differ"),
        };
        let k = witness.fixed_points();
        let count = |list: &[Permutation]| list.iter().filter(|p| p.fixed_points() == k).count();
        report.counterexample = Some(Counterexample {
            n,
            k,
            formula_value: count(&built).to_string(),
            oracle_value: count(&truth).to_string(),
            detail: Some(detail),
        });
    }
    Ok(report.finish(started))
}

pub fn audit_recurrence(oracle: &Oracle, rec: Recurrence, n_max: usize) -> Result<AuditReport> {
    let started = Instant::now();
    let mut report = AuditReport::new(rec.name(), AuditKind::Recurrence, n_max);
    let checked = recurrence_check(oracle, rec, n_max)?;
    report.cells_checked = checked.cells_checked;
    if let Some(v) = checked.violations.first() {
        report.counterexample = Some(Counterexample {
            n: v.n as usize,
            k: v.k as usize,
            formula_value: v.predicted.to_string(),
            oracle_value: v.actual.to_string(),
            detail: None,
        });
    }
    Ok(report.finish(started))
}

/// Series coefficients of every `G_k` against the `{231,321}` oracle table.
pub fn audit_generating_function(oracle: &Oracle, n_max: usize) -> Result<AuditReport> {
    let started = Instant::now();
    let patterns: PatternSet = "231,321".parse()?;
    let mut report = AuditReport::new("gf:231,321", AuditKind::GeneratingFunction, n_max);
    let table = oracle.count_table(n_max, &patterns)?;
    for k in 0..=n_max {
        let series = gf_for_k(k).series_coefficients(n_max)?;
        for (n, c) in series.iter().enumerate().skip(k) {
            let actual = table.get(n as i64, k as i64);
            report.record(n, k, c.to_string(), actual.to_string(), None);
        }
    }
    Ok(report.finish(started))
}

/// The summed series against oracle totals and against `2^(n-1)`.
pub fn audit_generating_function_sum(oracle: &Oracle, n_max: usize) -> Result<AuditReport> {
    let started = Instant::now();
    let patterns: PatternSet = "231,321".parse()?;
    let mut report = AuditReport::new("gf-sum:231,321", AuditKind::GeneratingFunction, n_max);
    let summed = sum_over_k(n_max, n_max)?;
    for (n, c) in summed.iter().enumerate() {
        let closed = if n == 0 {
            BigInt::one()
        } else {
            BigInt::one() << (n - 1)
        };
        let total: BigUint = oracle.refined_count(n, &patterns)?.iter().sum();
        if *c != closed {
            report.record(
                n,
                0,
                c.to_string(),
                closed.to_string(),
                Some("closed form 2^(n-1)".into()),
            );
        }
        report.record(
            n,
            0,
            c.to_string(),
            total.to_string(),
            Some("oracle total".into()),
        );
    }
    Ok(report.finish(started))
}

/// Closed-form totals against oracle row sums.
pub fn audit_total(oracle: &Oracle, patterns: &PatternSet, n_max: usize) -> Result<AuditReport> {
    let started = Instant::now();
    let mut report = AuditReport::new(format!("total:{patterns}"), AuditKind::Total, n_max);
    for n in 1..=n_max {
        let expected = sum_identity(patterns, n as i64)?;
        let total: BigUint = oracle.refined_count(n, patterns)?.iter().sum();
        report.record(n, 0, expected.to_string(), total.to_string(), None);
    }
    Ok(report.finish(started))
}

/// Fixed-point-free `{132,231}`-avoiders of size `n` number `J_{n-2}`.
pub fn audit_jacobsthal(oracle: &Oracle, n_max: usize) -> Result<AuditReport> {
    let started = Instant::now();
    let patterns: PatternSet = "132,231".parse()?;
    let mut report = AuditReport::new("jacobsthal:132,231", AuditKind::Identity, n_max);
    for n in 2..=n_max {
        let j = jacobsthal(n as i64 - 2)?;
        let actual = oracle.refined_count(n, &patterns)?[0].clone();
        report.record(n, 0, j.to_string(), actual.to_string(), None);
    }
    Ok(report.finish(started))
}

/// Every refined count for every set of four or more patterns lies in `{0,1,2}`.
pub fn audit_large_set_bound(oracle: &Oracle, n_max: usize) -> Result<AuditReport> {
    let started = Instant::now();
    let mut report = AuditReport::new("bound:size>=4", AuditKind::Bound, n_max);
    let two = BigUint::from(2u8);
    for size in 4..=6 {
        for t in PatternSet::all_of_size(size)? {
            for n in 1..=n_max {
                for (k, c) in oracle.refined_count(n, &t)?.iter().enumerate() {
                    report.cells_checked += 1;
                    if *c > two && report.counterexample.is_none() {
                        report.counterexample = Some(Counterexample {
                            n,
                            k,
                            formula_value: "<=2".into(),
                            oracle_value: c.to_string(),
                            detail: Some(format!("{{{t}}}")),
                        });
                    }
                }
            }
        }
    }
    Ok(report.finish(started))
}

/// No permutation of size `n >= 5` avoids both `123` and `321`.
pub fn audit_monotone_emptiness(oracle: &Oracle, n_max: usize) -> Result<AuditReport> {
    let started = Instant::now();
    let patterns: PatternSet = "123,321".parse()?;
    let mut report = AuditReport::new("empty:123,321", AuditKind::Bound, n_max);
    for n in 5..=n_max {
        let total: BigUint = oracle.refined_count(n, &patterns)?.iter().sum();
        report.record(n, 0, "0".into(), total.to_string(), None);
    }
    Ok(report.finish(started))
}

/// The three Super-Wilf claims, each checked as "one class" on oracle tables.
pub fn super_wilf_claims() -> Vec<Vec<PatternSet>> {
    [
        vec!["321", "132", "213"],
        vec!["231", "312"],
        vec!["132,231", "132,312", "213,231", "213,312"],
    ]
    .into_iter()
    .map(|claim| {
        claim
            .into_iter()
            .map(|s| s.parse().expect("valid"))
            .collect()
    })
    .collect()
}

pub fn audit_super_wilf(oracle: &Oracle, n_max: usize) -> Result<AuditReport> {
    let started = Instant::now();
    let mut report = AuditReport::new("super-wilf:claims", AuditKind::SuperWilf, n_max);
    for claim in super_wilf_claims() {
        let classes = super_wilf_classes(oracle, &claim, n_max)?;
        report.cells_checked += 1;
        if let (Some(d), None) = (classes.divergences.first(), &report.counterexample) {
            let left = oracle.refined_count(d.n, &d.left)?[d.k].clone();
            let right = oracle.refined_count(d.n, &d.right)?[d.k].clone();
            report.counterexample = Some(Counterexample {
                n: d.n,
                k: d.k,
                formula_value: left.to_string(),
                oracle_value: right.to_string(),
                detail: Some(format!("{{{}}} vs {{{}}}", d.left, d.right)),
            });
        }
    }
    Ok(report.finish(started))
}

/// Every pattern set of size 2 or 3 with a structural generator.
pub fn generator_targets() -> Vec<PatternSet> {
    (2..=3)
        .flat_map(|c| PatternSet::all_of_size(c).expect("valid cardinality"))
        .filter(is_supported)
        .collect()
}

/// The full sweep, in a fixed order.
pub fn audit_all(
    oracle: &Oracle,
    generators: &Generators,
    n_max: usize,
) -> Result<Vec<AuditReport>> {
    let mut reports = Vec::new();
    for id in FormulaId::ALL {
        reports.push(audit_formula(oracle, id, n_max)?);
    }
    for t in generator_targets() {
        reports.push(audit_generator(oracle, generators, &t, n_max)?);
    }
    for rec in Recurrence::ALL {
        reports.push(audit_recurrence(oracle, rec, n_max)?);
    }
    reports.push(audit_generating_function(oracle, n_max)?);
    reports.push(audit_generating_function_sum(oracle, n_max)?);
    for t in ["132,321", "231,321"] {
        reports.push(audit_total(oracle, &t.parse()?, n_max)?);
    }
    reports.push(audit_jacobsthal(oracle, n_max)?);
    reports.push(audit_large_set_bound(oracle, n_max)?);
    reports.push(audit_monotone_emptiness(oracle, n_max)?);
    reports.push(audit_super_wilf(oracle, n_max)?);
    Ok(reports)
}

/// Copies audit verdicts into the formula registry. Formulas without a
/// report stay `Untested`.
pub fn apply_statuses(registry: &mut [FormulaRecord], reports: &[AuditReport]) {
    let by_name: BTreeMap<&str, Status> = reports
        .iter()
        .filter(|r| r.kind == AuditKind::Formula)
        .map(|r| (r.formula.as_str(), r.status))
        .collect();
    for record in registry {
        if let Some(&status) = by_name.get(record.id.name()) {
            record.status = status;
        }
    }
}

pub fn all_verified(reports: &[AuditReport]) -> bool {
    reports.iter().all(AuditReport::is_verified)
}

/// Markdown listing of every discrepant item, with the first counterexample
/// and, for formulas, the full mismatching row.
pub fn discrepancies_markdown(reports: &[AuditReport]) -> String {
    let mut out = String::new();
    let n_max = reports.iter().map(|r| r.n_max).max().unwrap_or(0);
    let _ = writeln!(out, "# Discrepancies\n");
    let _ = writeln!(
        out,
        "Generated by `refperm verify --all --n-max {n_max} --discrepancies DISCREPANCIES.md`.\n\
         Each entry is a closed form or construction that disagrees with exhaustive\n\
         enumeration. Enumeration is taken as ground truth; the closed forms are left unchanged.\n"
    );
    let discrepant: Vec<&AuditReport> = reports.iter().filter(|r| !r.is_verified()).collect();
    let _ = writeln!(
        out,
        "{} of {} audited items are discrepant.\n",
        discrepant.len(),
        reports.len()
    );
    for r in discrepant {
        let _ = writeln!(out, "## `{}`\n", r.formula);
        let _ = writeln!(out, "- kind: {}", kind_text(r.kind));
        let _ = writeln!(
            out,
            "- checked: {} cells, n <= {}",
            r.cells_checked, r.n_max
        );
        if let Some(c) = &r.counterexample {
            let _ = writeln!(
                out,
                "- first counterexample: n = {}, k = {}: claimed {}, enumeration {}",
                c.n, c.k, c.formula_value, c.oracle_value
            );
            if let Some(d) = &c.detail {
                let _ = writeln!(out, "- detail: {d}");
            }
        }
        if r.kind == AuditKind::Formula {
            let bad: Vec<&AuditCell> = r.cells.iter().filter(|c| !c.matches).collect();
            let _ = writeln!(out, "- mismatching cells: {}", bad.len());
            let _ = writeln!(
                out,
                "\n| n | k | claimed | enumeration |\n|---|---|---|---|"
            );
            for c in bad.iter().take(12) {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    c.n, c.k, c.formula_value, c.oracle_value
                );
            }
            if bad.len() > 12 {
                let _ = writeln!(out, "| ... | | | |");
            }
        }
        let _ = writeln!(out);
    }
    out
}

fn kind_text(kind: AuditKind) -> &'static str {
    match kind {
        AuditKind::Formula => "closed form",
        AuditKind::Generator => "structural generator",
        AuditKind::Recurrence => "recurrence",
        AuditKind::GeneratingFunction => "generating function",
        AuditKind::Total => "total count",
        AuditKind::Identity => "identity",
        AuditKind::Bound => "bound",
        AuditKind::SuperWilf => "super-wilf classes",
    }
}

pub fn reports_json(reports: &[AuditReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// Number of cells in a row of zeros, for callers that only need a check.
pub fn is_zero_row(row: &[BigUint]) -> bool {
    row.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_formula_audits() {
        let o = Oracle::new();
        let r = audit_formula(&o, FormulaId::Pair123_321, 8).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.cells_checked, (0..=8).map(|n| n + 1).sum::<usize>());
        let r = audit_formula(&o, FormulaId::Pair231_312, 9).unwrap();
        assert_eq!(r.status, Status::Verified);
    }

    #[test]
    fn discrepant_implies_counterexample() {
        let o = Oracle::new();
        let r = audit_formula(&o, FormulaId::Triple132_213_231, 9).unwrap();
        assert_eq!(r.status, Status::Discrepant);
        let c = r.counterexample.as_ref().unwrap();
        assert_ne!(c.formula_value, c.oracle_value);
        assert!(r.cells.iter().any(|cell| !cell.matches));
    }

    #[test]
    fn out_of_domain_cells_are_skipped() {
        let o = Oracle::new();
        let r = audit_formula(&o, FormulaId::Pair132_231, 5).unwrap();
        // n = 0, 1, 2 lie below the statement's range
        assert_eq!(r.cells_skipped, 1 + 2 + 3);
    }

    #[test]
    fn super_wilf_ranges() {
        let o = Oracle::new();
        for n_max in [0, 3, 8] {
            assert!(
                audit_super_wilf(&o, n_max).unwrap().is_verified(),
                "{n_max}"
            );
        }
    }

    #[test]
    fn json_is_stable() {
        let o = Oracle::new();
        let g = Generators::new();
        let a = reports_json(&audit_all(&o, &g, 6).unwrap());
        let b = reports_json(&audit_all(&Oracle::new(), &Generators::new(), 6).unwrap());
        assert_eq!(a, b);
        assert!(!a.contains("duration"));
    }

    #[test]
    fn registry_statuses() {
        let o = Oracle::new();
        let reports = vec![audit_formula(&o, FormulaId::Pair231_312, 6).unwrap()];
        let mut registry = crate::formulas::registry();
        apply_statuses(&mut registry, &reports);
        for rec in &registry {
            let expected = if rec.id == FormulaId::Pair231_312 {
                Status::Verified
            } else {
                Status::Untested
            };
            assert_eq!(rec.status, expected);
        }
    }
}
