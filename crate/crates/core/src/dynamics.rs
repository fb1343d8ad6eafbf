//! Exact dynamics of the up-down maps `g_{p,I}` on `[0, 1]`.
//!
//! Branch `k` of `g_{p,I}` covers `[k/p, (k+1)/p)` and is `p·x - k` when `k`
//! is in the up-set `I`, `k + 1 - p·x` otherwise. The point `x = 1` takes the
//! closed extension of the last branch. With `I` the even residues this is the
//! continuous map `g_p`.
//!
//! All arithmetic is exact. The `n`-th iterate has exactly `p^n` fixed points,
//! `x_k = k/(p^n - 1)` on increasing branches and `(k+1)/(p^n + 1)` on
//! decreasing ones, and `g` permutes them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{self, checked_pow};
use crate::error::{Error, Result};

/// An arbitrary-precision fraction in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self(BigRational::new(numer.into(), denom)))
    }

    pub fn from_ratio(numer: u64, denom: u64) -> Self {
        Self::new(numer, denom).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    /// Nearest double.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    fn in_unit_interval(&self) -> bool {
        !self.0.is_negative() && self.0 <= BigRational::one()
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// The set `I ⊆ {0, ..., p-1}` of increasing branches.
///
/// The base is normally prime, but nothing here depends on that, so `p^n`
/// bases (for comparing `g_p^n` with `g_{p^n}`) are accepted too.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpSet {
    p: u64,
    member: Vec<bool>,
}

impl UpSet {
    pub fn new(p: u64, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidArgument(format!(
                "base {p} must be at least 2"
            )));
        }
        let mut member = vec![false; p as usize];
        for k in members {
            if k >= p {
                return Err(Error::InvalidArgument(format!(
                    "branch index {k} is not below the base {p}"
                )));
            }
            member[k as usize] = true;
        }
        Ok(Self { p, member })
    }

    /// Even residues: the continuous map `g_p`.
    pub fn evens(p: u64) -> Result<Self> {
        Self::new(p, (0..p).step_by(2))
    }

    /// Every branch decreasing.
    pub fn empty(p: u64) -> Result<Self> {
        Self::new(p, [])
    }

    /// Every branch increasing: the fractional part of `p·x`.
    pub fn full(p: u64) -> Result<Self> {
        Self::new(p, 0..p)
    }

    /// Each branch independently increasing with probability 1/2.
    pub fn random<R: rand::Rng + ?Sized>(p: u64, rng: &mut R) -> Result<Self> {
        let members: Vec<u64> = (0..p).filter(|_| rng.gen_bool(0.5)).collect();
        Self::new(p, members)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn contains(&self, k: u64) -> bool {
        self.member.get(k as usize).copied().unwrap_or(false)
    }

    pub fn members(&self) -> Vec<u64> {
        (0..self.p).filter(|&k| self.contains(k)).collect()
    }

    pub fn is_evens(&self) -> bool {
        (0..self.p).all(|k| self.contains(k) == (k % 2 == 0))
    }
}

/// A base-`p` digit sequence `(a_1 ... a_n)`, most significant first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitWord {
    p: u64,
    digits: Vec<u64>,
}

impl DigitWord {
    pub fn new(p: u64, digits: Vec<u64>) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidArgument(format!(
                "base {p} must be at least 2"
            )));
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= p) {
            return Err(Error::InvalidArgument(format!(
                "digit {d} is not below the base {p}"
            )));
        }
        Ok(Self { p, digits })
    }

    /// The `n`-digit representation of `k`.
    pub fn from_value(p: u64, n: u32, mut k: u64) -> Result<Self> {
        let bound = checked_pow(p, n);
        if bound.is_some_and(|b| k >= b) {
            return Err(Error::OutOfRange {
                index: k,
                bound: bound.unwrap_or(u64::MAX),
            });
        }
        let mut digits = vec![0u64; n as usize];
        for slot in digits.iter_mut().rev() {
            *slot = k % p;
            k /= p;
        }
        Self::new(p, digits)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// The integer `(a_1 ... a_n)_p`.
    pub fn value(&self) -> u64 {
        self.digits.iter().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn value_big(&self) -> BigUint {
        let p = BigUint::from(self.p);
        self.digits
            .iter()
            .fold(BigUint::zero(), |acc, &d| acc * &p + BigUint::from(d))
    }

    /// Digit-wise complement `p - 1 - a_i`.
    pub fn complement(&self) -> Self {
        Self {
            p: self.p,
            digits: self.digits.iter().map(|&d| self.p - 1 - d).collect(),
        }
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.p <= 10 { "" } else { ":" };
        let parts: Vec<String> = self.digits.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

/// A purely periodic base-`p` expansion `0.(period)(period)...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicExpansion {
    period: DigitWord,
}

impl PeriodicExpansion {
    pub fn new(period: DigitWord) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidArgument("empty period".into()));
        }
        Ok(Self { period })
    }

    pub fn p(&self) -> u64 {
        self.period.p
    }

    pub fn period(&self) -> &DigitWord {
        &self.period
    }

    /// `(period)_p / (p^L - 1)`.
    pub fn value(&self) -> ExactRational {
        let len = self.period.len();
        let denom = num_traits::pow(BigInt::from(self.period.p), len) - BigInt::one();
        ExactRational::new(BigInt::from(self.period.value_big()), denom)
            .expect("p^L - 1 is positive")
    }

    /// The shortest word whose repetition gives the same digit stream.
    pub fn minimal_period(&self) -> DigitWord {
        let d = &self.period.digits;
        let len = d.len();
        let shortest = (1..=len)
            .filter(|l| len.is_multiple_of(*l))
            .find(|&l| (0..len).all(|i| d[i] == d[i % l]))
            .unwrap_or(len);
        DigitWord {
            p: self.period.p,
            digits: d[..shortest].to_vec(),
        }
    }

    /// Equality of digit streams, ignoring how many repetitions are written.
    pub fn same_stream(&self, other: &Self) -> bool {
        self.minimal_period() == other.minimal_period()
    }
}

impl fmt::Display for PeriodicExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0.({})", self.period)
    }
}

fn check_unit(x: &ExactRational) -> Result<()> {
    if x.in_unit_interval() {
        Ok(())
    } else {
        Err(Error::Domain(x.to_string()))
    }
}

/// One application of `g_{p,I}`.
pub fn eval_g(up: &UpSet, x: &ExactRational) -> Result<ExactRational> {
    check_unit(x)?;
    let p = BigInt::from(up.p);
    let px = &x.0 * BigRational::from_integer(p.clone());
    let mut branch = px.floor().to_integer();
    if branch == p {
        branch -= 1;
    }
    let k = branch.to_u64().expect("branch index is below p");
    let kq = BigRational::from_integer(branch);
    let y = if up.contains(k) {
        px - kq
    } else {
        kq + BigRational::one() - px
    };
    Ok(ExactRational(y))
}

/// `n`-fold composition of `g_{p,I}`.
pub fn eval_g_iter(up: &UpSet, x: &ExactRational, n: u32) -> Result<ExactRational> {
    check_unit(x)?;
    let mut cur = x.clone();
    for _ in 0..n {
        cur = eval_g(up, &cur)?;
    }
    Ok(cur)
}

/// Membership table of `I_{p^n}`, the branches on which `g_{p,I}^n` increases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncreasingSet {
    p: u64,
    n: u32,
    member: Vec<bool>,
}

impl IncreasingSet {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn contains(&self, k: u64) -> bool {
        self.member.get(k as usize).copied().unwrap_or(false)
    }

    pub fn members(&self) -> Vec<u64> {
        (0..self.member.len() as u64)
            .filter(|&k| self.contains(k))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub(crate) fn size(p: u64, n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "iterate count must be positive".into(),
        ));
    }
    checked_pow(p, n)
        .filter(|&s| usize::try_from(s).is_ok())
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{n} is too large to enumerate")))
}

/// `I_{p^n}`, built level by level: a word `a_1 w` is increasing iff `w` is
/// (when `a_1 ∈ I`) or iff the complement of `w` is not (when `a_1 ∉ I`).
pub fn increasing_set(up: &UpSet, n: u32) -> Result<IncreasingSet> {
    let p = up.p;
    size(p, n)?;
    let mut member = up.member.clone();
    let mut block = p;
    for _ in 1..n {
        let mut next = Vec::with_capacity((block * p) as usize);
        for a in 0..p {
            if up.contains(a) {
                next.extend_from_slice(&member);
            } else {
                next.extend(member.iter().rev().map(|&b| !b));
            }
        }
        member = next;
        block *= p;
    }
    Ok(IncreasingSet { p, n, member })
}

/// Pointwise membership `k ∈ I_{p^n}` without materializing the set.
pub fn in_increasing_set(up: &UpSet, n: u32, k: u64) -> Result<bool> {
    let word = DigitWord::from_value(up.p, n, k)?;
    if n == 0 {
        return Err(Error::InvalidArgument(
            "iterate count must be positive".into(),
        ));
    }
    let mut flipped = false;
    let mut complemented = false;
    let last = word.digits.len() - 1;
    for (i, &raw) in word.digits.iter().enumerate() {
        let a = if complemented { up.p - 1 - raw } else { raw };
        if i == last {
            return Ok(up.contains(a) != flipped);
        }
        if !up.contains(a) {
            flipped = !flipped;
            complemented = !complemented;
        }
    }
    unreachable!("word has at least one digit")
}

fn fixed_point_value(p_n: u64, k: u64, increasing: bool) -> ExactRational {
    if increasing {
        ExactRational::from_ratio(k, p_n - 1)
    } else {
        ExactRational::from_ratio(k + 1, p_n + 1)
    }
}

/// The `k`-th fixed point of `g_{p,I}^n` in increasing order.
pub fn fixed_point(up: &UpSet, n: u32, k: u64) -> Result<ExactRational> {
    let p_n = checked_pow(up.p, n)
        .ok_or_else(|| Error::InvalidArgument(format!("{}^{n} does not fit in 64 bits", up.p)))?;
    let inc = in_increasing_set(up, n, k)?;
    Ok(fixed_point_value(p_n, k, inc))
}

/// All `p^n` fixed points of `g_{p,I}^n`, ascending.
pub fn fixed_points(up: &UpSet, n: u32) -> Result<Vec<ExactRational>> {
    let inc = increasing_set(up, n)?;
    Ok(fixed_points_from(&inc))
}

pub(crate) fn fixed_points_from(inc: &IncreasingSet) -> Vec<ExactRational> {
    let p_n = inc.member.len() as u64;
    (0..p_n)
        .map(|k| fixed_point_value(p_n, k, inc.contains(k)))
        .collect()
}

/// Index `j` of the fixed point equal to `x`, or `None` if `x` is not one.
pub fn fixed_point_index(points: &[ExactRational], x: &ExactRational) -> Option<u64> {
    let p_n = points.len() as u64;
    let scaled = (&x.0 * BigRational::from_integer(BigInt::from(p_n)))
        .floor()
        .to_integer();
    let j = scaled.to_u64()?.min(p_n.checked_sub(1)?);
    (points.get(j as usize)? == x).then_some(j)
}

/// Checks that every listed point is fixed by `g_{p,I}^n`.
pub fn check_fixed_points(up: &UpSet, n: u32, points: &[ExactRational]) -> Result<()> {
    for (k, x) in points.iter().enumerate() {
        if &eval_g_iter(up, x, n)? != x {
            return Err(Error::Consistency(format!(
                "x_{k} = {x} is not fixed by the {n}-th iterate"
            )));
        }
    }
    Ok(())
}

/// The base-`p` expansion of `x_k`: period `n` on increasing branches, `2n`
/// with the second half complemented otherwise.
pub fn expansion_of_fixed_point(up: &UpSet, n: u32, k: u64) -> Result<PeriodicExpansion> {
    let word = DigitWord::from_value(up.p, n, k)?;
    let mut digits = word.digits.clone();
    if !in_increasing_set(up, n, k)? {
        digits.extend(word.complement().digits);
    }
    PeriodicExpansion::new(DigitWord { p: up.p, digits })
}

/// `g_{p,I}` on digit streams: drop the leading digit and, when it is not in
/// `I`, complement the rest.
pub fn eval_g_digits(up: &UpSet, expansion: &PeriodicExpansion) -> Result<PeriodicExpansion> {
    if up.p != expansion.p() {
        return Err(Error::InvalidArgument(format!(
            "expansion in base {} applied to a base-{} map",
            expansion.p(),
            up.p
        )));
    }
    let d = &expansion.period.digits;
    let mut rotated: Vec<u64> = d[1..].iter().chain(&d[..1]).copied().collect();
    if !up.contains(d[0]) {
        for digit in &mut rotated {
            *digit = up.p - 1 - *digit;
        }
    }
    PeriodicExpansion::new(DigitWord {
        p: up.p,
        digits: rotated,
    })
}

/// Fixed points of `g^n` grouped into cycles under `g`.
///
/// Each cycle starts at its smallest index and cycles are sorted by that index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct OrbitPartition {
    cycles: Vec<Vec<u64>>,
}

impl OrbitPartition {
    pub fn cycles(&self) -> &[Vec<u64>] {
        &self.cycles
    }

    /// Cycle length -> number of cycles of that length.
    pub fn cycle_counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for c in &self.cycles {
            *out.entry(c.len()).or_insert(0) += 1;
        }
        out
    }

    /// Number of points whose exact period is `m`.
    pub fn points_of_order(&self, m: usize) -> usize {
        self.cycles
            .iter()
            .filter(|c| c.len() == m)
            .map(Vec::len)
            .sum()
    }

    pub(crate) fn from_successors(next: &[u64]) -> Self {
        let mut seen = vec![false; next.len()];
        let mut cycles = Vec::new();
        for start in 0..next.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur as u64);
                cur = next[cur] as usize;
            }
            cycles.push(cycle);
        }
        Self { cycles }
    }
}

/// `next[k] = j` where `g(x_k) = x_j`.
pub fn successor_indices(up: &UpSet, points: &[ExactRational]) -> Result<Vec<u64>> {
    points
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let y = eval_g(up, x)?;
            fixed_point_index(points, &y).ok_or_else(|| {
                Error::Consistency(format!("g(x_{k}) = {y} is not among the fixed points"))
            })
        })
        .collect()
}

/// `g_{p,I}(num/den)` as a numerator over the same denominator.
fn g_numerator(up: &UpSet, num: u128, den: u128) -> u128 {
    let p = u128::from(up.p);
    let px = p * num;
    let k = (px / den).min(p - 1);
    if up.contains(k as u64) {
        px - k * den
    } else {
        (k + 1) * den - px
    }
}

/// Successor table of the fixed points of `g_{p,I}^n` under `g_{p,I}`.
///
/// Same result as [`successor_indices`] on [`fixed_points`], computed with
/// exact integer arithmetic: `g` never changes the denominator of `x_k`.
pub fn successor_table(up: &UpSet, n: u32) -> Result<Vec<u64>> {
    let inc = increasing_set(up, n)?;
    let p_n = inc.member.len() as u128;
    let frac = |k: u128| {
        if inc.member[k as usize] {
            (k, p_n - 1)
        } else {
            (k + 1, p_n + 1)
        }
    };
    (0..p_n)
        .map(|k| {
            let (num, den) = frac(k);
            let y = g_numerator(up, num, den);
            let j = (p_n * y / den).min(p_n - 1);
            let (jn, jd) = frac(j);
            if y * jd == jn * den {
                Ok(j as u64)
            } else {
                Err(Error::Consistency(format!(
                    "g(x_{k}) = {y}/{den} is not among the fixed points"
                )))
            }
        })
        .collect()
}

/// The cycle decomposition of the fixed points of `g_{p,I}^n` under `g_{p,I}`.
pub fn orbit_partition(up: &UpSet, n: u32) -> Result<OrbitPartition> {
    let next = successor_table(up, n)?;
    let partition = OrbitPartition::from_successors(&next);
    if let Some(c) = partition
        .cycles
        .iter()
        .find(|c| !(n as usize).is_multiple_of(c.len()))
    {
        return Err(Error::Consistency(format!(
            "cycle through x_{} has length {} not dividing {n}",
            c[0],
            c.len()
        )));
    }
    Ok(partition)
}

/// Number of points of exact period `m`: Σ_{d|m} μ(m/d)·p^d.
pub fn periodic_count(p: u64, m: u64) -> Result<BigUint> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!(
            "base {p} must be at least 2"
        )));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("period must be positive".into()));
    }
    Ok(arith::mobius_power_sum(p, m))
}
