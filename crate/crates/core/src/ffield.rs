//! Arithmetic over `F_p[x]` and `F_{p^n}`.
//!
//! Polynomials are coefficient vectors, lowest degree first, with residues in
//! `[0, p)`. A [`FieldContext`] fixes a monic irreducible modulus of degree `n`
//! and a primitive element `alpha`; [`FieldElement`]s are residue vectors of
//! length exactly `n` interpreted relative to that context.
//!
//! Coefficient arithmetic is done in `u64`, so the characteristic must stay
//! below `2^32`. Field orders `p^n` must fit in a `u64`.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith::{self, checked_pow, is_prime, prime_factors};
use crate::error::{Error, Result};

const MAX_CHARACTERISTIC: u64 = 1 << 32;

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if p >= MAX_CHARACTERISTIC {
        return Err(Error::InvalidArgument(format!(
            "characteristic {p} exceeds the supported bound 2^32"
        )));
    }
    Ok(())
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// A polynomial over the prime field `F_p`.
///
/// `coeffs[i]` is the coefficient of `x^i`; the zero polynomial has no
/// coefficients and nonzero polynomials never carry trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PolyFp {
    #[serde(skip)]
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyFp {
    /// Builds a polynomial from coefficients (lowest degree first), reducing
    /// each one modulo `p`.
    pub fn new(p: u64, coeffs: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_prime(p)?;
        Ok(Self::trimmed(
            p,
            coeffs.into_iter().map(|c| c % p).collect(),
        ))
    }

    fn trimmed(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::new(p, [])
    }

    pub fn one(p: u64) -> Result<Self> {
        Self::new(p, [1])
    }

    /// The monomial `x`.
    pub fn x(p: u64) -> Result<Self> {
        Self::new(p, [0, 1])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn lead(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.p, other.p, "polynomials over different prime fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        let p = self.p;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % p
            })
            .collect();
        Self::trimmed(p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_field(other);
        let p = self.p;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        Self::trimmed(p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::trimmed(self.p, Vec::new());
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::trimmed(p, out)
    }

    /// Quotient and remainder of Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_field(divisor);
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        let p = self.p;
        let inv_lead = inv_mod(divisor.lead(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = mul_mod(rem[top], inv_lead, p);
            if c != 0 {
                let shift = top - dd;
                quot[shift] = c;
                for (i, &m) in divisor.coeffs.iter().enumerate() {
                    let sub = mul_mod(c, m, p);
                    rem[shift + i] = (rem[shift + i] + p - sub) % p;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) && rem.len() > dd {
                rem.pop();
            }
        }
        Ok((Self::trimmed(p, quot), Self::trimmed(p, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        self.same_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    fn make_monic(self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self;
        }
        let p = self.p;
        let inv = inv_mod(self.lead(), p);
        Self::trimmed(p, self.coeffs.iter().map(|&c| mul_mod(c, inv, p)).collect())
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Result<Self> {
        let mut acc = Self::trimmed(self.p, vec![1]).rem(modulus)?;
        let base = self.rem(modulus)?;
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus)?;
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus)?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(&self.coeffs, "x"))
    }
}

/// Renders `c_{d} sym^d + ... + c_0` in the style `a^3 + 2a + 1`.
fn render_terms(coeffs: &[u64], sym: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let mono = match i {
                0 => String::new(),
                1 => sym.to_string(),
                _ => format!("{sym}^{i}"),
            };
            match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Rabin's irreducibility test: a monic `f` of degree `n` is irreducible iff
/// `x^{p^n} = x mod f` and `gcd(x^{p^{n/q}} - x, f) = 1` for every prime `q | n`.
pub fn is_irreducible(f: &PolyFp) -> Result<bool> {
    let n = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "irreducibility needs a non-constant polynomial, got {f}"
            )))
        }
    };
    if !f.is_monic() {
        return Err(Error::InvalidArgument(format!("{f} is not monic")));
    }
    let p = f.p;
    let x = PolyFp::trimmed(p, vec![0, 1]).rem(f)?;
    let p_big = BigUint::from(p);
    // frob[k] = x^{p^k} mod f
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(x.clone());
    for k in 0..n {
        let next = frob[k].pow_mod(&p_big, f)?;
        frob.push(next);
    }
    if frob[n] != x {
        return Ok(false);
    }
    for q in prime_factors(n as u64) {
        let h = frob[n / q as usize].sub(&x);
        if h.gcd(f).degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of monic irreducible polynomials of degree `m` over `F_p`, by
/// Möbius inversion of `Σ_{d|m} d·I_p(d) = p^m`.
pub fn count_irreducibles(p: u64, m: u64) -> Result<BigUint> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    Ok(arith::mobius_power_sum(p, m) / BigUint::from(m))
}

/// Checks `Σ_{d|n} d·I_p(d) = p^n` using [`count_irreducibles`].
pub fn divisor_sum_check(p: u64, n: u64) -> Result<bool> {
    let mut total = BigUint::from(0u32);
    for d in arith::divisors(n) {
        total += count_irreducibles(p, d)? * BigUint::from(d);
    }
    Ok(total == arith::big_pow(p, n))
}

/// An element of `F_{p^n}`: the coefficients of its representative of
/// degree `< n`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Human-readable form using `sym` for the basis generator, e.g.
    /// `a^3 + a + 1`.
    pub fn render(&self, sym: &str) -> String {
        render_terms(&self.coeffs, sym)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("a"))
    }
}

/// An immutable description of `F_{p^n}` together with a primitive element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldContext {
    p: u64,
    n: u32,
    order: u64,
    modulus: PolyFp,
    alpha: FieldElement,
    group_factors: Vec<u64>,
}

/// Constructs `F_{p^n}`.
///
/// With an explicit modulus, it must be monic, of degree `n` and irreducible;
/// `alpha` is then the image of `x` if that is primitive, otherwise the first
/// primitive element in lexicographic order. Without one, the modulus is the
/// lexicographically smallest monic irreducible (coefficients compared from
/// the constant term up) in which `x` is primitive, falling back to the
/// smallest irreducible plus an element search.
pub fn make_field(p: u64, n: u32, modulus: Option<PolyFp>) -> Result<FieldContext> {
    check_prime(p)?;
    if n == 0 {
        return Err(Error::InvalidArgument(
            "extension degree must be positive".into(),
        ));
    }
    let order = checked_pow(p, n)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{n} does not fit in 64 bits")))?;
    let group_factors = prime_factors(order - 1);
    let shell = |modulus: PolyFp| FieldContext {
        p,
        n,
        order,
        modulus,
        alpha: FieldElement {
            coeffs: vec![0; n as usize],
        },
        group_factors: group_factors.clone(),
    };

    if let Some(m) = modulus {
        if m.p != p {
            return Err(Error::InvalidModulus(format!(
                "modulus {m} is over F_{} but the field has characteristic {p}",
                m.p
            )));
        }
        if m.degree() != Some(n as usize) || !m.is_monic() {
            return Err(Error::InvalidModulus(format!(
                "modulus {m} must be monic of degree {n}"
            )));
        }
        if !is_irreducible(&m)? {
            return Err(Error::InvalidModulus(format!(
                "{m} is reducible over F_{p}"
            )));
        }
        let mut ctx = shell(m);
        ctx.alpha = ctx.find_primitive();
        return Ok(ctx);
    }

    let mut first_irreducible = None;
    for t in 0..order {
        let mut coeffs = lex_digits(p, n, t);
        coeffs.push(1);
        let candidate = PolyFp::trimmed(p, coeffs);
        if !is_irreducible(&candidate)? {
            continue;
        }
        let ctx = shell(candidate.clone());
        let x = ctx.x_element();
        if ctx.is_primitive(&x) {
            let mut ctx = ctx;
            ctx.alpha = x;
            return Ok(ctx);
        }
        first_irreducible.get_or_insert(candidate);
    }
    let m = first_irreducible
        .ok_or_else(|| Error::Consistency(format!("no irreducible of degree {n} over F_{p}")))?;
    let mut ctx = shell(m);
    ctx.alpha = ctx.find_primitive();
    Ok(ctx)
}

/// Coefficients `c_0..c_{n-1}` of the `t`-th vector in lexicographic order
/// with `c_0` most significant.
fn lex_digits(p: u64, n: u32, mut t: u64) -> Vec<u64> {
    let mut coeffs = vec![0u64; n as usize];
    for slot in coeffs.iter_mut().rev() {
        *slot = t % p;
        t /= p;
    }
    coeffs
}

impl FieldContext {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `p^n`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &PolyFp {
        &self.modulus
    }

    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    fn find_primitive(&self) -> FieldElement {
        let x = self.x_element();
        if self.is_primitive(&x) {
            return x;
        }
        (1..self.order)
            .map(|t| FieldElement {
                coeffs: lex_digits(self.p, self.n, t),
            })
            .find(|a| self.is_primitive(a))
            .expect("every finite field has a primitive element")
    }

    /// The class of `x` modulo the modulus.
    pub fn x_element(&self) -> FieldElement {
        let x = PolyFp::trimmed(self.p, vec![0, 1])
            .rem(&self.modulus)
            .expect("modulus is nonzero");
        self.pad(&x)
    }

    fn pad(&self, poly: &PolyFp) -> FieldElement {
        let mut coeffs = poly.coeffs.clone();
        coeffs.resize(self.n as usize, 0);
        FieldElement { coeffs }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.n as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        let mut coeffs = vec![0; self.n as usize];
        coeffs[0] = 1;
        FieldElement { coeffs }
    }

    /// Validates and wraps a coefficient vector of length `n`.
    pub fn element(&self, coeffs: Vec<u64>) -> Result<FieldElement> {
        let a = FieldElement { coeffs };
        self.validate(&a)?;
        Ok(a)
    }

    /// Reduces an arbitrary polynomial into the field.
    pub fn element_from_poly(&self, poly: &PolyFp) -> Result<FieldElement> {
        if poly.p != self.p {
            return Err(Error::InvalidArgument(format!(
                "polynomial over F_{} used in a field of characteristic {}",
                poly.p, self.p
            )));
        }
        Ok(self.pad(&poly.rem(&self.modulus)?))
    }

    pub fn validate(&self, a: &FieldElement) -> Result<()> {
        if a.coeffs.len() != self.n as usize || a.coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidArgument(format!(
                "{:?} is not an element of F_{}^{}",
                a.coeffs, self.p, self.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p;
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + y) % p)
                .collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p;
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + p - y) % p)
                .collect(),
        }
    }

    /// Product reduced modulo the field modulus. Inputs are assumed valid in
    /// this context; see [`FieldContext::try_mul`] for the checked variant.
    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let n = self.n as usize;
        let p = self.p;
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        let m = &self.modulus.coeffs;
        for top in (n..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            // x^top = -c * (m_0 + ... + m_{n-1} x^{n-1}) x^{top-n}
            for (i, &mi) in m.iter().take(n).enumerate() {
                let idx = top - n + i;
                prod[idx] = (prod[idx] + p - mul_mod(c, mi, p)) % p;
            }
            prod[top] = 0;
        }
        prod.truncate(n);
        FieldElement { coeffs: prod }
    }

    pub fn try_mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.mul(a, b))
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn pow_big(&self, a: &FieldElement, e: &BigUint) -> FieldElement {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// The Frobenius endomorphism `a -> a^p`.
    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        self.pow(a, self.p)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: &FieldElement) -> Result<u64> {
        self.validate(a)?;
        if a.is_zero() {
            return Err(Error::InvalidArgument(
                "zero has no multiplicative order".into(),
            ));
        }
        let one = self.one();
        let mut e = self.order - 1;
        for &q in &self.group_factors {
            while e.is_multiple_of(q) && self.pow(a, e / q) == one {
                e /= q;
            }
        }
        Ok(e)
    }

    /// True iff `a` generates the multiplicative group.
    pub fn is_primitive(&self, a: &FieldElement) -> bool {
        if a.is_zero() {
            return false;
        }
        let one = self.one();
        let group = self.order - 1;
        if self.pow(a, group) != one {
            return false;
        }
        self.group_factors
            .iter()
            .all(|&q| self.pow(a, group / q) != one)
    }

    /// `alpha^0, alpha^1, ..., alpha^{p^n - 2}`.
    pub fn powers_of_alpha(&self) -> Vec<FieldElement> {
        let len = (self.order - 1) as usize;
        let mut out = Vec::with_capacity(len);
        let mut cur = self.one();
        for _ in 0..len {
            let next = self.mul(&cur, &self.alpha);
            out.push(cur);
            cur = next;
        }
        out
    }

    /// All elements in lexicographic order (constant coefficient most significant).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(move |t| FieldElement {
            coeffs: lex_digits(self.p, self.n, t),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, c: &[u64]) -> PolyFp {
        PolyFp::new(p, c.iter().copied()).unwrap()
    }

    fn f16() -> FieldContext {
        make_field(2, 4, Some(poly(2, &[1, 1, 0, 0, 1]))).unwrap()
    }

    #[test]
    fn poly_normalizes_and_renders() {
        let f = poly(3, &[4, 0, 2, 0, 0]);
        assert_eq!(f.coeffs(), &[1, 0, 2]);
        assert_eq!(f.to_string(), "2x^2 + 1");
        assert_eq!(poly(2, &[1, 1, 0, 0, 1]).to_string(), "x^4 + x + 1");
        assert!(poly(5, &[]).is_zero());
        assert_eq!(poly(5, &[0, 0]).degree(), None);
        assert!(PolyFp::new(4, [1]).is_err());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = poly(5, &[3, 1, 4, 1, 2, 3]);
        let b = poly(5, &[2, 0, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().is_none_or(|d| d < 2));
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(a.div_rem(&PolyFp::zero(5).unwrap()).is_err());
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&poly(2, &[1, 1, 0, 0, 1])).unwrap());
        assert!(is_irreducible(&poly(2, &[0, 1])).unwrap());
        assert!(!is_irreducible(&poly(2, &[1, 0, 1])).unwrap());
        assert!(is_irreducible(&poly(3, &[1, 0, 2, 1])).unwrap());
        assert!(matches!(
            is_irreducible(&poly(2, &[1])),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            is_irreducible(&poly(3, &[1, 2])),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn irreducible_counts() {
        let c = |p, m| count_irreducibles(p, m).unwrap();
        assert_eq!(c(2, 1), BigUint::from(2u32));
        assert_eq!(c(2, 3), BigUint::from(2u32));
        assert_eq!(c(2, 4), BigUint::from(3u32));
        assert!(count_irreducibles(4, 2).is_err());
        assert!(count_irreducibles(2, 0).is_err());
        assert!(divisor_sum_check(2, 3).unwrap());
        assert!(divisor_sum_check(3, 1).unwrap());
        assert!(divisor_sum_check(2, 4).unwrap());
    }

    #[test]
    fn f16_arithmetic() {
        let ctx = f16();
        let a = ctx.alpha().clone();
        assert_eq!(a.coeffs(), &[0, 1, 0, 0]);
        assert_eq!(ctx.mul(&a, &a), ctx.pow(&a, 2));
        let a3 = ctx.pow(&a, 3);
        assert_eq!(ctx.mul(&a3, &a).to_string(), "a + 1");
        let e = ctx.element(vec![1, 1, 0, 1]).unwrap();
        assert_eq!(e.to_string(), "a^3 + a + 1");
        assert_eq!(ctx.mul(&e, &e).to_string(), "a^3 + 1");
        assert_eq!(ctx.frobenius(&ctx.pow(&a, 7)), ctx.pow(&a, 14));
        assert_eq!(ctx.pow(&a, 15), ctx.one());
        assert!(ctx.frobenius(&ctx.zero()).is_zero());
    }

    #[test]
    fn orders() {
        let ctx = f16();
        let a = ctx.alpha().clone();
        assert_eq!(ctx.element_order(&ctx.one()).unwrap(), 1);
        assert_eq!(ctx.element_order(&a).unwrap(), 15);
        assert_eq!(ctx.element_order(&ctx.pow(&a, 5)).unwrap(), 3);
        assert!(ctx.element_order(&ctx.zero()).is_err());
    }

    #[test]
    fn default_fields() {
        let f2 = make_field(2, 1, None).unwrap();
        assert_eq!(f2.alpha(), &f2.one());
        assert_eq!(f2.modulus().coeffs(), &[1, 1]);

        let f9 = make_field(3, 2, None).unwrap();
        assert_eq!(f9.element_order(f9.alpha()).unwrap(), 8);

        // smallest by (c0, c1, c2, c3) with x primitive
        let f16 = make_field(2, 4, None).unwrap();
        assert_eq!(f16.modulus().coeffs(), &[1, 0, 0, 1, 1]);

        let f27 = make_field(3, 3, None).unwrap();
        assert_eq!(f27.modulus().coeffs(), &[1, 0, 2, 1]);
        assert_eq!(f27.element_order(f27.alpha()).unwrap(), 26);
    }

    #[test]
    fn bad_moduli_rejected() {
        let reducible = poly(2, &[1, 0, 1]);
        assert!(matches!(
            make_field(2, 2, Some(reducible)),
            Err(Error::InvalidModulus(_))
        ));
        let wrong_degree = poly(2, &[1, 1, 1]);
        assert!(matches!(
            make_field(2, 3, Some(wrong_degree)),
            Err(Error::InvalidModulus(_))
        ));
        assert!(make_field(6, 2, None).is_err());
        assert!(make_field(2, 0, None).is_err());
    }

    #[test]
    fn user_modulus_where_x_is_not_primitive() {
        // x^4 + x^3 + x^2 + x + 1 is irreducible over F_2 but x has order 5
        let ctx = make_field(2, 4, Some(poly(2, &[1, 1, 1, 1, 1]))).unwrap();
        assert_eq!(ctx.element_order(&ctx.x_element()).unwrap(), 5);
        assert_eq!(ctx.element_order(ctx.alpha()).unwrap(), 15);
    }

    #[test]
    fn mismatched_elements_rejected() {
        let ctx = f16();
        let bad = FieldElement {
            coeffs: vec![1, 0, 1],
        };
        assert!(ctx.try_mul(&bad, ctx.alpha()).is_err());
        assert!(ctx.element(vec![2, 0, 0, 0]).is_err());
    }
}
