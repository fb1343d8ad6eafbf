//! Chebyshev polynomials of the first kind and the transport of the
//! fixed-point bijection through the conjugacy `h(x) = cos(πx)`, which
//! satisfies `T_p ∘ h = h ∘ g_p` on `[0, 1]`.
//!
//! Numerics are `f64` throughout. Evaluation always runs the value-domain
//! recurrence; the exact integer coefficients are only used for degree and
//! coefficient assertions and for the factorization comparison.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::checked_pow;
use crate::bijection::{build_bijection, BijectionTable, FrobeniusReport, FrobeniusViolation};
use crate::dynamics::{self, eval_g_iter, ExactRational, UpSet};
use crate::error::{Error, Result};
use crate::ffield::{FieldContext, FieldElement};

/// Absolute tolerance used to match a mapped point with a fixed point.
pub const MATCH_TOLERANCE: f64 = 1e-8;

/// Degrees above this use the doubling ladder instead of the linear recurrence.
const LADDER_THRESHOLD: u64 = 1 << 12;

/// `T_k` in the monomial basis, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebPoly {
    k: u64,
    coeffs: Vec<BigInt>,
}

impl ChebPoly {
    pub fn index(&self) -> u64 {
        self.k
    }

    /// Coefficients lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("T_k has k + 1 coefficients")
    }

    /// Horner evaluation on the monomial coefficients. Unstable at high degree;
    /// meant for cross-checks.
    pub fn eval_monomial(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

/// `T_0 = 1`, `T_1 = x`, `T_{k+1} = 2x·T_k - T_{k-1}`.
pub fn cheb_coeffs(k: u64) -> ChebPoly {
    let mut prev = vec![BigInt::one()];
    if k == 0 {
        return ChebPoly { k, coeffs: prev };
    }
    let mut cur = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..k {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c * 2;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    ChebPoly { k, coeffs: cur }
}

/// `T_k(x)` by the three-term recurrence.
pub fn cheb_eval(k: u64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, x);
    for _ in 1..k {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `T_k(x)` in `O(log k)` steps using `T_{2m} = 2T_m^2 - 1` and
/// `T_{2m+1} = 2T_m·T_{m+1} - x`.
pub fn cheb_eval_ladder(k: u64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    // (T_m, T_{m+1}) starting at m = 0
    let (mut lo, mut hi) = (1.0, x);
    for bit in (0..64 - k.leading_zeros()).rev() {
        if (k >> bit) & 1 == 1 {
            lo = 2.0 * lo * hi - x;
            hi = 2.0 * hi * hi - 1.0;
        } else {
            hi = 2.0 * lo * hi - x;
            lo = 2.0 * lo * lo - 1.0;
        }
    }
    lo
}

fn cheb_eval_any(k: u64, x: f64) -> f64 {
    if k > LADDER_THRESHOLD {
        cheb_eval_ladder(k, x)
    } else {
        cheb_eval(k, x)
    }
}

fn grid(lo: f64, hi: f64, samples: usize) -> impl Iterator<Item = f64> {
    let steps = samples.saturating_sub(1).max(1) as f64;
    (0..samples).map(move |i| lo + (hi - lo) * i as f64 / steps)
}

/// Largest `|T_m(T_n(x)) - T_{mn}(x)|` over equispaced samples of `[-1, 1]`.
pub fn compose_check(m: u64, n: u64, samples: usize) -> f64 {
    grid(-1.0, 1.0, samples)
        .map(|x| (cheb_eval(m, cheb_eval(n, x)) - cheb_eval(m * n, x)).abs())
        .fold(0.0, f64::max)
}

/// Largest `|T_p^n(cos πx) - cos(π·g_p^n(x))|` over equispaced rational
/// samples of `[0, 1]`, with `g_p^n` evaluated exactly.
pub fn conjugacy_check(p: u64, n: u32, samples: usize) -> Result<f64> {
    if samples == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    let up = UpSet::evens(p)?;
    let denom = samples.saturating_sub(1).max(1) as u64;
    let mut worst = 0.0f64;
    for i in 0..samples as u64 {
        let x = ExactRational::from_ratio(i, denom);
        let gx = eval_g_iter(&up, &x, n)?;
        let mut lhs = (std::f64::consts::PI * x.to_f64()).cos();
        for _ in 0..n {
            lhs = cheb_eval(p, lhs);
        }
        let rhs = (std::f64::consts::PI * gx.to_f64()).cos();
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// A fixed point `y_k = cos(π x_k)` of `T_{p^n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChebFixedPoint {
    pub k: u64,
    pub source: ExactRational,
    pub y: f64,
    /// `|T_{p^n}(y) - y|`.
    pub residual: f64,
}

/// The `p^n` fixed points of `T_{p^n}`, transported from those of `g_p^n`.
/// They come out strictly decreasing because `h` reverses order.
pub fn cheb_fixed_points(p: u64, n: u32) -> Result<Vec<ChebFixedPoint>> {
    let degree = checked_pow(p, n)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{n} does not fit in 64 bits")))?;
    let points = dynamics::fixed_points(&UpSet::evens(p)?, n)?;
    Ok(points
        .into_iter()
        .enumerate()
        .map(|(k, x)| {
            let y = (std::f64::consts::PI * x.to_f64()).cos();
            let residual = (cheb_eval_any(degree, y) - y).abs();
            ChebFixedPoint {
                k: k as u64,
                source: x,
                y,
                residual,
            }
        })
        .collect())
}

/// Largest coefficient gap between `T_{p^n}(x) - x` and
/// `2^{p^n - 1}·∏(x - y_k)`, relative to the largest exact coefficient.
pub fn factorization_check(p: u64, n: u32) -> Result<f64> {
    let degree = checked_pow(p, n).filter(|&d| d <= 64).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "factorization check is limited to p^n <= 64, got {p}^{n}"
        ))
    })?;
    let roots = cheb_fixed_points(p, n)?;
    let mut product = vec![1.0f64];
    for r in &roots {
        let mut next = vec![0.0; product.len() + 1];
        for (i, &c) in product.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r.y;
        }
        product = next;
    }
    let scale = 2f64.powi(degree as i32 - 1);
    let mut exact = cheb_coeffs(degree).coeffs.clone();
    exact[1] -= BigInt::one();
    let exact: Vec<f64> = exact
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    let norm = exact.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let gap = exact
        .iter()
        .zip(&product)
        .map(|(e, c)| (e - scale * c).abs())
        .fold(0.0f64, f64::max);
    Ok(gap / norm)
}

/// A conjugacy `h: [0, 1] -> [u, v]` with `f ∘ h = h ∘ g_p` for some up-down
/// map `f` on `[u, v]`.
pub trait Conjugacy {
    fn h(&self, x: f64) -> f64;
    fn f(&self, y: f64) -> f64;
}

/// `h(x) = cos(πx)` conjugating `g_p` to `T_p` on `[-1, 1]`.
#[derive(Clone, Copy, Debug)]
pub struct ChebyshevConjugacy {
    pub p: u64,
}

impl Conjugacy for ChebyshevConjugacy {
    fn h(&self, x: f64) -> f64 {
        (std::f64::consts::PI * x).cos()
    }

    fn f(&self, y: f64) -> f64 {
        cheb_eval(self.p, y)
    }
}

/// A user-supplied conjugacy given by samples `h(i / (len - 1))` on a uniform
/// grid, linearly interpolated, together with the target map.
pub struct SampledConjugacy<F> {
    samples: Vec<f64>,
    map: F,
}

impl<F: Fn(f64) -> f64> SampledConjugacy<F> {
    pub fn new(samples: Vec<f64>, map: F) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidArgument(
                "need at least two grid samples".into(),
            ));
        }
        let increasing = samples.windows(2).all(|w| w[0] < w[1]);
        let decreasing = samples.windows(2).all(|w| w[0] > w[1]);
        if !(increasing || decreasing) {
            return Err(Error::InvalidArgument(
                "sampled conjugacy must be strictly monotone".into(),
            ));
        }
        Ok(Self { samples, map })
    }
}

impl<F: Fn(f64) -> f64> Conjugacy for SampledConjugacy<F> {
    fn h(&self, x: f64) -> f64 {
        let last = self.samples.len() - 1;
        let t = x.clamp(0.0, 1.0) * last as f64;
        let i = (t.floor() as usize).min(last - 1);
        let frac = t - i as f64;
        self.samples[i] * (1.0 - frac) + self.samples[i + 1] * frac
    }

    fn f(&self, y: f64) -> f64 {
        (self.map)(y)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransportedRow {
    pub k: u64,
    pub y: f64,
    pub pi: u64,
    pub image: FieldElement,
}

/// `B_f = B_α ∘ h^{-1}` tabulated over the transported fixed points.
#[derive(Clone, Debug)]
pub struct TransportedTable {
    ctx: FieldContext,
    rows: Vec<TransportedRow>,
}

impl TransportedTable {
    pub fn rows(&self) -> &[TransportedRow] {
        &self.rows
    }

    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    /// Index of the unique fixed point within `tol` of `y`.
    pub fn nearest(&self, y: f64, tol: f64) -> Result<u64> {
        let mut hits = self.rows.iter().filter(|r| (r.y - y).abs() <= tol);
        match (hits.next(), hits.next()) {
            (Some(r), None) => Ok(r.k),
            (None, _) => Err(Error::Precision(format!(
                "no fixed point within {tol:e} of {y}"
            ))),
            (Some(a), Some(b)) => Err(Error::Precision(format!(
                "{y} is within {tol:e} of both y_{} and y_{}",
                a.k, b.k
            ))),
        }
    }
}

pub fn transport_bijection<C: Conjugacy>(table: &BijectionTable, conj: &C) -> TransportedTable {
    let rows = table
        .rows()
        .iter()
        .map(|r| TransportedRow {
            k: r.k,
            y: conj.h(r.x.to_f64()),
            pi: r.pi,
            image: r.image.clone(),
        })
        .collect();
    TransportedTable {
        ctx: table.ctx().clone(),
        rows,
    }
}

/// Checks `B_f(y)^p = B_f(f(y))`, locating `f(y)` among the fixed points by
/// nearest match within `tol`.
pub fn verify_transported_frobenius<C: Conjugacy>(
    table: &TransportedTable,
    conj: &C,
    tol: f64,
) -> Result<FrobeniusReport> {
    let mut violations = Vec::new();
    for row in &table.rows {
        let j = table.nearest(conj.f(row.y), tol)?;
        let expected = table.ctx.frobenius(&row.image);
        let found = &table.rows[j as usize].image;
        if &expected != found {
            violations.push(FrobeniusViolation {
                k: row.k,
                successor: j,
                expected,
                found: found.clone(),
            });
        }
    }
    Ok(FrobeniusReport {
        checked: table.rows.len(),
        violations,
    })
}

/// The bijection between the fixed points of `T_{p^n}` and `F_{p^n}`.
pub fn cheb_bijection(ctx: &FieldContext, n: u32) -> Result<TransportedTable> {
    if ctx.n() != n {
        return Err(Error::InvalidArgument(format!(
            "field has degree {} but n = {n} was requested",
            ctx.n()
        )));
    }
    let table = build_bijection(ctx, &UpSet::evens(ctx.p())?)?;
    Ok(transport_bijection(
        &table,
        &ChebyshevConjugacy { p: ctx.p() },
    ))
}
