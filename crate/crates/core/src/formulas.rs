//! Closed forms, piecewise tables and recurrences for `s_n^k(T)`, one
//! evaluator per pattern class, all in exact rational arithmetic.
//!
//! Each evaluator reproduces the printed statement as written, including
//! statements that later turn out to disagree with brute force; the audit
//! decides which ones hold.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfun;
use crate::oracle::{CountTable, Oracle};
use crate::perm::PatternSet;

type Q = BigRational;

/// Outcome of evaluating a printed formula at `(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalResult {
    Value(BigUint),
    /// `(n, k)` lies outside the range the statement covers.
    OutOfDomain,
    /// An exact division or a binomial argument failed to be integral.
    NonIntegral(BigRational),
    /// The expression reduced to a negative integer.
    Negative(BigInt),
}

impl EvalResult {
    pub fn value(&self) -> Option<&BigUint> {
        match self {
            EvalResult::Value(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_in_domain(&self) -> bool {
        !matches!(self, EvalResult::OutOfDomain)
    }
}

impl fmt::Display for EvalResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalResult::Value(v) => write!(f, "{v}"),
            EvalResult::OutOfDomain => f.write_str("out-of-domain"),
            EvalResult::NonIntegral(q) => write!(f, "{q}"),
            EvalResult::Negative(v) => write!(f, "{v}"),
        }
    }
}

/// Audit verdict attached to a formula, generator or check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Discrepant,
    Untested,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Discrepant => "discrepant",
            Status::Untested => "untested",
        })
    }
}

/// One enumerative result per avoidance class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaId {
    Pair123_321,
    Pair123_132,
    Pair123_231,
    Pair132_213,
    Pair132_231,
    Pair132_321,
    Pair213_231,
    Pair231_312,
    Pair231_321,
    Triple123_132_321,
    Triple123_213_321,
    Triple123_231_321,
    Triple123_312_321,
    Triple123_132_213,
    Triple123_132_231,
    Triple123_231_312,
    Triple132_213_231,
    Triple132_213_321,
    Triple132_231_312,
    Triple132_231_321,
    Triple231_312_321,
}

use FormulaId::*;

impl FormulaId {
    pub const ALL: [FormulaId; 21] = [
        Pair123_321,
        Pair123_132,
        Pair123_231,
        Pair132_213,
        Pair132_231,
        Pair132_321,
        Pair213_231,
        Pair231_312,
        Pair231_321,
        Triple123_132_321,
        Triple123_213_321,
        Triple123_231_321,
        Triple123_312_321,
        Triple123_132_213,
        Triple123_132_231,
        Triple123_231_312,
        Triple132_213_231,
        Triple132_213_321,
        Triple132_231_312,
        Triple132_231_321,
        Triple231_312_321,
    ];

    /// Stable identifier used by the CLI and JSON reports.
    pub fn name(self) -> &'static str {
        match self {
            Pair123_321 => "thm-123-321",
            Pair123_132 => "thm-123-132",
            Pair123_231 => "thm-123-231",
            Pair132_213 => "thm-213-132",
            Pair132_231 => "thm-132-231",
            Pair132_321 => "thm-132-321",
            Pair213_231 => "thm-213-231",
            Pair231_312 => "thm-231-312",
            Pair231_321 => "thm-231-321",
            Triple123_132_321 => "thm3-123-132-321",
            Triple123_213_321 => "thm3-123-213-321",
            Triple123_231_321 => "thm3-123-231-321",
            Triple123_312_321 => "thm3-123-312-321",
            Triple123_132_213 => "thm3-123-132-213",
            Triple123_132_231 => "thm3-123-132-231",
            Triple123_231_312 => "thm3-123-231-312",
            Triple132_213_231 => "thm3-132-213-231",
            Triple132_213_321 => "thm3-132-213-321",
            Triple132_231_312 => "thm3-132-231-312",
            Triple132_231_321 => "thm3-132-231-321",
            Triple231_312_321 => "thm3-231-312-321",
        }
    }

    fn pattern_text(self) -> &'static str {
        match self {
            Pair123_321 => "123,321",
            Pair123_132 => "123,132",
            Pair123_231 => "123,231",
            Pair132_213 => "132,213",
            Pair132_231 => "132,231",
            Pair132_321 => "132,321",
            Pair213_231 => "213,231",
            Pair231_312 => "231,312",
            Pair231_321 => "231,321",
            Triple123_132_321 => "123,132,321",
            Triple123_213_321 => "123,213,321",
            Triple123_231_321 => "123,231,321",
            Triple123_312_321 => "123,312,321",
            Triple123_132_213 => "123,132,213",
            Triple123_132_231 => "123,132,231",
            Triple123_231_312 => "123,231,312",
            Triple132_213_231 => "132,213,231",
            Triple132_213_321 => "132,213,321",
            Triple132_231_312 => "132,231,312",
            Triple132_231_321 => "132,231,321",
            Triple231_312_321 => "231,312,321",
        }
    }

    pub fn patterns(self) -> PatternSet {
        self.pattern_text()
            .parse()
            .expect("built-in pattern text is valid")
    }

    /// Smallest `n` the statement covers.
    pub fn min_n(self) -> i64 {
        match self {
            Pair123_321 | Pair231_321 => 0,
            Triple123_132_321 | Triple123_213_321 | Triple123_231_321 | Triple123_312_321 => 0,
            Pair132_213 | Pair132_321 | Pair231_312 => 1,
            Pair123_132 | Pair123_231 | Triple132_231_312 => 2,
            Pair132_231 | Pair213_231 => 3,
            Triple123_132_213 | Triple123_132_231 | Triple123_231_312 | Triple132_213_231
            | Triple132_213_321 | Triple132_231_321 | Triple231_312_321 => 3,
        }
    }

    pub fn for_patterns(patterns: &PatternSet) -> Option<FormulaId> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.patterns() == *patterns)
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFormula(s.to_string()))
    }
}

/// Registry entry: a formula plus the verdict of the last audit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaRecord {
    #[serde(serialize_with = "serialize_name")]
    pub id: FormulaId,
    pub patterns: PatternSet,
    pub min_n: i64,
    pub status: Status,
}

fn serialize_name<S: serde::Serializer>(
    id: &FormulaId,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(id.name())
}

/// Every implemented formula, all `Untested`.
pub fn registry() -> Vec<FormulaRecord> {
    FormulaId::ALL
        .into_iter()
        .map(|id| FormulaRecord {
            id,
            patterns: id.patterns(),
            min_n: id.min_n(),
            status: Status::Untested,
        })
        .collect()
}

// ---------------------------------------------------------------------------
// exact arithmetic helpers

enum Skip {
    OutOfDomain,
    NonIntegral(Q),
}

type Raw = std::result::Result<Q, Skip>;

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

fn frac(num: Q, den: i64) -> Q {
    num / q(den)
}

fn qi(v: &BigUint) -> Q {
    Q::from_integer(BigInt::from(v.clone()))
}

/// `base^exp` for any integer exponent.
fn pow_q(base: i64, exp: i64) -> Q {
    let p = num_traits::pow(BigInt::from(base), exp.unsigned_abs() as usize);
    if exp >= 0 {
        Q::from_integer(p)
    } else {
        Q::new(BigInt::one(), p)
    }
}

fn sign(exp: i64) -> Q {
    if exp.rem_euclid(2) == 0 {
        q(1)
    } else {
        q(-1)
    }
}

fn indicator(cond: bool) -> Q {
    q(cond as i64)
}

fn integral(x: &Q) -> std::result::Result<BigInt, Skip> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Skip::NonIntegral(x.clone()))
    }
}

/// `C(top, bottom)` with the combinatorial convention (zero unless
/// `0 <= bottom <= top`); both arguments must be integral.
fn binom(top: &Q, bottom: &Q) -> Raw {
    let top = integral(top)?;
    let bottom = integral(bottom)?;
    if bottom.is_negative() || top.is_negative() || bottom > top {
        return Ok(Q::zero());
    }
    let b = bottom.to_u64().expect("binomial argument fits");
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * (&top - i) / (i + 1);
    }
    Ok(Q::from_integer(acc))
}

fn binom_n(top: &Q, bottom: i64) -> Raw {
    binom(top, &q(bottom))
}

/// `F_0 = F_1 = 1`, `F_n = F_{n-1} + F_{n-2}`.
pub fn fibonacci(n: i64) -> Result<BigUint> {
    linear2(n, 1, 1, 1)
}

/// `J_0 = J_1 = 1`, `J_n = J_{n-1} + 2 J_{n-2}`, aligned so that the number
/// of fixed-point-free `{132,231}`-avoiders of size `n` is `J_{n-2}`.
pub fn jacobsthal(n: i64) -> Result<BigUint> {
    linear2(n, 1, 1, 2)
}

fn linear2(n: i64, a0: u64, a1: u64, c2: u64) -> Result<BigUint> {
    if n < 0 {
        return Err(Error::InvalidInput(format!("negative sequence index {n}")));
    }
    let (mut a, mut b) = (BigUint::from(a0), BigUint::from(a1));
    for _ in 0..n {
        let next = &b + &a * c2;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

fn fib_q(n: i64) -> Q {
    qi(&fibonacci(n).expect("nonnegative index"))
}

fn from_sequence(seq: &[i64], n: i64) -> Q {
    q(seq.get(n as usize).copied().unwrap_or(0))
}

// ---------------------------------------------------------------------------
// evaluation

/// Value of the printed formula for `id` at `(n, k)`.
///
/// `k` outside `0..=n` gives zero for any `n` in the domain, following the
/// convention that `s_n^j = 0` there.
pub fn evaluate(id: FormulaId, n: i64, k: i64) -> EvalResult {
    if n < id.min_n() {
        return EvalResult::OutOfDomain;
    }
    if k < 0 || k > n {
        return EvalResult::Value(BigUint::zero());
    }
    match raw(id, n, k) {
        Err(Skip::OutOfDomain) => EvalResult::OutOfDomain,
        Err(Skip::NonIntegral(x)) => EvalResult::NonIntegral(x),
        Ok(x) if !x.is_integer() => EvalResult::NonIntegral(x),
        Ok(x) => {
            let v = x.to_integer();
            match v.sign() {
                Sign::Minus => EvalResult::Negative(v),
                _ => EvalResult::Value(v.magnitude().clone()),
            }
        }
    }
}

fn raw(id: FormulaId, n: i64, k: i64) -> Raw {
    match id {
        Pair123_321 => Ok(match k {
            0 => from_sequence(&[1, 0, 1, 2, 4], n),
            1 => from_sequence(&[0, 1, 0, 2], n),
            2 => from_sequence(&[0, 0, 1], n),
            _ => q(0),
        }),
        Pair123_132 => desc_blocks(n, k),
        Pair123_231 => wedge(n, k),
        Pair132_213 => asc_blocks(n, k),
        Pair132_231 | Pair213_231 => jacobsthal_like(n, k),
        Pair132_321 => Ok(if k == n { q(1) } else { q(n - k - 1) }),
        Pair231_312 => {
            if (n + k) % 2 != 0 {
                return Ok(q(0));
            }
            let scale = pow_q(2, (n - k - 2) / 2);
            let c1 = binom(&q((n + k) / 2), &q((n - k) / 2))?;
            let c2 = binom(&q((n + k - 2) / 2), &q((n - k) / 2))?;
            Ok(scale * (c1 + c2))
        }
        Pair231_321 => {
            if k == 0 && n >= 2 {
                return Ok(fib_q(n - 2));
            }
            let series = genfun::gf_for_k(k as usize)
                .series_coefficients(n as usize)
                .expect("unit constant term");
            Ok(Q::from_integer(series[n as usize].clone()))
        }
        Triple123_132_321 | Triple123_213_321 | Triple123_231_321 | Triple123_312_321 => {
            let alpha_231_312 = matches!(id, Triple123_231_321 | Triple123_312_321);
            Ok(match k {
                0 if alpha_231_312 => from_sequence(&[1, 0, 1, 1, 1], n),
                0 => from_sequence(&[1, 0, 1, 2, 1], n),
                1 if alpha_231_312 => from_sequence(&[0, 1, 0, 2, 0], n),
                1 => from_sequence(&[0, 1, 0, 1, 0], n),
                2 => from_sequence(&[0, 0, 1, 0, 0], n),
                _ => q(0),
            })
        }
        Triple123_132_213 => {
            let even = n % 2 == 0;
            Ok(match k {
                2 if even => fib_q((n - 2) / 2).pow(2),
                1 if !even => fib_q((n - 1) / 2).pow(2),
                1 | 2 => q(0),
                0 if even => fib_q(n) - fib_q((n - 2) / 2).pow(2),
                0 => fib_q(n) - fib_q((n - 1) / 2).pow(2),
                _ => q(0),
            })
        }
        Triple123_132_231 => Ok(match k {
            0 => q(n / 2),
            1 => q(n / 2) + sign(n + 1),
            2 => frac(q(1) + sign(n), 2),
            _ => q(0),
        }),
        Triple123_231_312 => {
            let odd = indicator(n % 2 == 1);
            let even = indicator(n % 2 == 0);
            Ok(match k {
                0 | 2 => frac(q(n), 2) * (q(1) - odd),
                1 => q(n) * (q(1) - even),
                _ => q(0),
            })
        }
        Triple132_213_231 => {
            let even = n % 2 == 0;
            Ok(match k {
                0 => q(n / 2) + (frac(q(n), 2) + q(1)) * indicator(even),
                1 => q(n / 2) * indicator(!even),
                _ => indicator(n == k),
            })
        }
        Triple132_213_321 => Ok(match k {
            0 => q(n - 1),
            _ => indicator(n == k),
        }),
        Triple132_231_312 => Ok(match k {
            0 => frac(q(1) + sign(n), 2),
            _ if n == k => q(1),
            _ if k % 2 == 0 => q(1) + sign(n),
            _ => q(1) + sign(n + 1),
        }),
        Triple132_231_321 => Ok(if k == n - 1 { q(0) } else { q(1) }),
        Triple231_312_321 => {
            if (n + k) % 2 != 0 {
                return Ok(q(0));
            }
            binom_n(&q((n + k) / 2), k)
        }
    }
}

/// `{123,132}`: piecewise in the parity of `n`, with `n = 2h + i`.
fn desc_blocks(n: i64, k: i64) -> Raw {
    let (h, i) = (n / 2, n % 2);
    Ok(match (k, i) {
        (3.., _) => q(0),
        (2, 0) => frac(pow_q(4, h - 1) + q(2), 3),
        (2, _) => q(0),
        (1, 0) => frac(q(2) * (pow_q(4, h - 1) - q(1)), 3),
        (1, _) => frac(pow_q(4, h) + q(2), 3),
        (0, 0) => pow_q(4, h - 1),
        (0, _) => frac(q(2) * (pow_q(4, h) - q(1)), 3),
        _ => unreachable!("k is nonnegative"),
    })
}

/// `{132,213}`: only the fixed-point counts the statement lists are covered;
/// a single fixed point with `n >= 3` is out of domain.
fn asc_blocks(n: i64, k: i64) -> Raw {
    let (h, i) = (n / 2, n % 2);
    if k == n {
        return Ok(q(1));
    }
    if k == n - 1 {
        return Ok(q(0));
    }
    if k == 0 {
        if h < 1 {
            return Err(Skip::OutOfDomain);
        }
        return Ok(if i == 0 {
            frac(q(5) * pow_q(4, h - 1) - q(2), 3)
        } else {
            frac(q(2) * (pow_q(4, h) - q(1)), 3)
        });
    }
    let (half_k, k_odd) = (k / 2, k % 2 == 1);
    if half_k < 1 || half_k > h - 1 {
        return Err(Skip::OutOfDomain);
    }
    let hit = if k_odd { i == 1 } else { i == 0 };
    Ok(if hit { pow_q(4, h - half_k - 1) } else { q(0) })
}

/// `{132,231}` and `{213,231}`.
fn jacobsthal_like(n: i64, k: i64) -> Raw {
    Ok(if k == 0 {
        frac(pow_q(2, n - 1) + sign(n), 3)
    } else if k <= n - 2 {
        frac(q(2) * (pow_q(2, n - k) + sign(n - k + 1)), 3)
    } else if k == n - 1 {
        q(0)
    } else {
        q(1)
    })
}

/// `{123,231}`: six arms per `k`, selected by `n mod 6`.
fn wedge(n: i64, k: i64) -> Raw {
    match k {
        0 => {
            let total = binom_n(&q(n), 2)? + q(1);
            Ok(total - wedge(n, 1)? - wedge(n, 2)?)
        }
        1 => {
            let r = n.rem_euclid(6);
            let c2 = |shift: i64| -> Raw { Ok(q(6) * binom_n(&frac(q(n + shift), 6), 2)?) };
            let odd_head = frac(q((n - 3) * (n - 1)), 8);
            Ok(match r {
                0 => frac(q(n * (n - 6)), 12) + c2(6)?,
                1 => odd_head + frac(q((n - 7) * (n - 1)), 12) + c2(5)? + frac(q(n + 2), 3),
                2 => frac(q(n * (n - 2)), 12) + c2(4)?,
                3 => odd_head + frac(q((n - 5) * (n - 3)), 12) + c2(3)? + frac(q(2 * n + 3), 3),
                4 => frac(q((n - 12) * (n + 2)), 12) + c2(8)?,
                _ => odd_head + frac(q((n - 5) * (n - 3)), 12) + c2(1)? + q(n),
            })
        }
        2 => {
            let r = n.rem_euclid(6);
            Ok(match r {
                0 => frac(q(n * (n - 6)), 24) + frac(q(n), 2),
                1 | 5 => frac(q((n - 1) * (n + 1)), 24),
                2 | 4 => frac(q((n - 4) * (n - 2)), 24) + frac(q(n), 2),
                _ => frac(q((n - 3) * (n + 3)), 24),
            })
        }
        _ => Ok(q(0)),
    }
}

/// Closed-form totals `|S_n(T)|` for the two classes where the refined
/// results are summed back up.
pub fn sum_identity(patterns: &PatternSet, n: i64) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::OutOfDomain(format!(
            "n = {n} for the {{{patterns}}} total"
        )));
    }
    match patterns.to_string().as_str() {
        "132,321" => Ok(BigUint::from((n * (n - 1) / 2 + 1) as u64)),
        "231,321" => Ok(BigUint::one() << (n - 1) as usize),
        _ => Err(Error::OutOfDomain(format!(
            "no total formula for {{{patterns}}}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// recurrences

/// Linear recurrences from the constructive arguments, checked against data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Recurrence {
    /// `s_n^0 = s_{n-1}^0 + 2 s_{n-2}^0` for `{132,231}`.
    Pair132_231NoFixed,
    /// `s_n^k = 2 s_{n-2}^k + s_{n-1}^{k-1}` for `{231,312}`.
    Pair231_312,
    /// `s_n^k = s_{n-1}^{k-1} + s_{n-2}^k + s_{n-1}^k - s_{n-2}^{k-1}` for `{231,321}`.
    Pair231_321,
    /// `s_n^k = s_{n-1}^{k-1} + s_{n-2}^k` for `{231,312,321}`.
    Triple231_312_321,
}

impl Recurrence {
    pub const ALL: [Recurrence; 4] = [
        Recurrence::Pair132_231NoFixed,
        Recurrence::Pair231_312,
        Recurrence::Pair231_321,
        Recurrence::Triple231_312_321,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Recurrence::Pair132_231NoFixed => "rec-132-231-k0",
            Recurrence::Pair231_312 => "rec-231-312",
            Recurrence::Pair231_321 => "rec-231-321",
            Recurrence::Triple231_312_321 => "rec3-231-312-321",
        }
    }

    pub fn formula(self) -> FormulaId {
        match self {
            Recurrence::Pair132_231NoFixed => Pair132_231,
            Recurrence::Pair231_312 => Pair231_312,
            Recurrence::Pair231_321 => Pair231_321,
            Recurrence::Triple231_312_321 => Triple231_312_321,
        }
    }

    pub fn for_formula(id: FormulaId) -> Option<Recurrence> {
        Recurrence::ALL.into_iter().find(|r| r.formula() == id)
    }

    pub fn patterns(self) -> PatternSet {
        self.formula().patterns()
    }

    /// First `n` at which the identity holds: the point where every term it
    /// relates is past the base cases of the underlying decomposition.
    pub fn min_n(self) -> i64 {
        match self {
            Recurrence::Pair132_231NoFixed | Recurrence::Pair231_312 => 3,
            Recurrence::Pair231_321 => 2,
            Recurrence::Triple231_312_321 => 1,
        }
    }

    /// Right-hand side at `(n, k)`, or `None` where the recurrence says nothing.
    pub fn predict(self, table: &CountTable, n: i64, k: i64) -> Option<BigInt> {
        let s = |a: i64, b: i64| BigInt::from(table.get(a, b));
        match self {
            Recurrence::Pair132_231NoFixed => (k == 0).then(|| s(n - 1, 0) + 2 * s(n - 2, 0)),
            Recurrence::Pair231_312 => Some(2 * s(n - 2, k) + s(n - 1, k - 1)),
            Recurrence::Pair231_321 => {
                Some(s(n - 1, k - 1) + s(n - 2, k) + s(n - 1, k) - s(n - 2, k - 1))
            }
            Recurrence::Triple231_312_321 => Some(s(n - 1, k - 1) + s(n - 2, k)),
        }
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceViolation {
    pub n: i64,
    pub k: i64,
    pub actual: BigUint,
    pub predicted: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub recurrence: Recurrence,
    pub n_max: usize,
    pub cells_checked: usize,
    pub violations: Vec<RecurrenceViolation>,
}

impl RecurrenceReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `rec` on oracle data for every `(n, k)` with `min_n <= n <= n_max`.
pub fn recurrence_check(
    oracle: &Oracle,
    rec: Recurrence,
    n_max: usize,
) -> Result<RecurrenceReport> {
    let table = oracle.count_table(n_max, &rec.patterns())?;
    let mut report = RecurrenceReport {
        recurrence: rec,
        n_max,
        cells_checked: 0,
        violations: Vec::new(),
    };
    for n in rec.min_n()..=n_max as i64 {
        for k in 0..=n {
            let Some(predicted) = rec.predict(&table, n, k) else {
                continue;
            };
            report.cells_checked += 1;
            let actual = table.get(n, k);
            if BigInt::from(actual.clone()) != predicted {
                report.violations.push(RecurrenceViolation {
                    n,
                    k,
                    actual,
                    predicted,
                });
            }
        }
    }
    Ok(report)
}
