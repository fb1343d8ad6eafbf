//! The permutations `π_{p^n,I}` and the bijection `B_{α,I}` from the fixed
//! points of `g_{p,I}^n` onto `F_{p^n}`.
//!
//! `π` is defined recursively on the leading base-`p` digit: blocks whose
//! digit lies in `I` keep their order, the others are reversed. The bijection
//! sends `x_k` to `α^{π(k)}`, except that the row with `π(k) = 0` goes to the
//! field zero. With this assignment `B(x)^p = B(g(x))` on every fixed point.

use serde::Serialize;

use crate::arith::checked_pow;
use crate::dynamics::{
    self, fixed_points_from, in_increasing_set, increasing_set, DigitWord, ExactRational, UpSet,
};
use crate::error::{Error, Result};
use crate::ffield::{FieldContext, FieldElement};

fn size(p: u64, n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    checked_pow(p, n)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{n} does not fit in 64 bits")))
}

/// `π_{p^n,I}(k)` straight from the recursive definition.
pub fn pi_recursive(up: &UpSet, n: u32, k: u64) -> Result<u64> {
    let bound = size(up.p(), n)?;
    if k >= bound {
        return Err(Error::OutOfRange { index: k, bound });
    }
    Ok(pi_rec(up, n, bound, k))
}

fn pi_rec(up: &UpSet, n: u32, bound: u64, k: u64) -> u64 {
    if n == 1 {
        return k;
    }
    let block = bound / up.p();
    let a = k / block;
    let offset = k - a * block;
    let inner = if up.contains(a) {
        offset
    } else {
        block - offset - 1
    };
    a * block + pi_rec(up, n - 1, block, inner)
}

/// Digit form of `π_{p^n}` for the continuous map: `b_1 = a_1`, and `b_i` is
/// `a_i` or its complement according to the parity of `b_1 + ... + b_{i-1}`.
pub fn pi_digits(word: &DigitWord) -> DigitWord {
    let p = word.p();
    let mut parity = 0u64;
    let digits = word
        .digits()
        .iter()
        .map(|&a| {
            let b = if parity.is_multiple_of(2) {
                a
            } else {
                p - 1 - a
            };
            parity += b;
            b
        })
        .collect();
    DigitWord::new(p, digits).expect("complements stay below the base")
}

/// Binary digit form: `b_1 = a_1` and `b_i = 1` exactly when `a_{i-1} != a_i`.
pub fn pi_digits_binary(word: &DigitWord) -> Result<DigitWord> {
    if word.p() != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected a base-2 word, got base {}",
            word.p()
        )));
    }
    let a = word.digits();
    let digits = (0..a.len())
        .map(|i| if i == 0 { a[0] } else { a[i - 1] ^ a[i] })
        .collect();
    DigitWord::new(2, digits)
}

/// `π_{p^n,I}(p·b + d)` via the bottom-digit recursion
/// `p·π_{p^{n-1},I}(b) + (d if b ∈ I_{p^{n-1}} else p - d - 1)`.
pub fn pi_step(up: &UpSet, n: u32, b: u64, d: u64) -> Result<u64> {
    let p = up.p();
    if n < 2 {
        return Err(Error::InvalidArgument(
            "the bottom-digit recursion needs n >= 2".into(),
        ));
    }
    if d >= p {
        return Err(Error::OutOfRange { index: d, bound: p });
    }
    let head = pi_recursive(up, n - 1, b)?;
    let tail = if in_increasing_set(up, n - 1, b)? {
        d
    } else {
        p - d - 1
    };
    Ok(p * head + tail)
}

/// A materialized `π_{p^n,I}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiPermutation {
    up: UpSet,
    n: u32,
    table: Vec<u64>,
}

impl PiPermutation {
    pub fn build(up: &UpSet, n: u32) -> Result<Self> {
        let p = up.p();
        let total = size(p, n)?;
        usize::try_from(total).map_err(|_| {
            Error::InvalidArgument(format!("{p}^{n} entries cannot be materialized"))
        })?;
        let mut table: Vec<u64> = (0..p).collect();
        let mut block = p;
        for _ in 1..n {
            let mut next = Vec::with_capacity((block * p) as usize);
            for a in 0..p {
                let base = a * block;
                if up.contains(a) {
                    next.extend(table.iter().map(|&v| base + v));
                } else {
                    next.extend(table.iter().rev().map(|&v| base + v));
                }
            }
            table = next;
            block *= p;
        }
        Ok(Self {
            up: up.clone(),
            n,
            table,
        })
    }

    pub fn up(&self) -> &UpSet {
        &self.up
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn table(&self) -> &[u64] {
        &self.table
    }

    pub fn get(&self, k: u64) -> Option<u64> {
        self.table.get(k as usize).copied()
    }

    /// `table^{-1}`; panics only if the table is not a permutation.
    pub fn inverse(&self) -> Vec<u64> {
        let mut inv = vec![u64::MAX; self.table.len()];
        for (k, &v) in self.table.iter().enumerate() {
            inv[v as usize] = k as u64;
        }
        debug_assert!(inv.iter().all(|&v| v != u64::MAX));
        inv
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.table.len()];
        self.table.iter().all(|&v| {
            let slot = seen.get_mut(v as usize);
            match slot {
                Some(s) if !*s => {
                    *s = true;
                    true
                }
                _ => false,
            }
        })
    }
}

/// One row of the bijection: `(k, x_k, π(k), B(x_k))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionRow {
    pub k: u64,
    pub x: ExactRational,
    pub pi: u64,
    pub image: FieldElement,
}

/// The full bijection between the fixed points of `g_{p,I}^n` and `F_{p^n}`.
#[derive(Clone, Debug)]
pub struct BijectionTable {
    ctx: FieldContext,
    up: UpSet,
    rows: Vec<BijectionRow>,
    pi_inverse: Vec<u64>,
    zero_row: u64,
}

pub fn build_bijection(ctx: &FieldContext, up: &UpSet) -> Result<BijectionTable> {
    if ctx.p() != up.p() {
        return Err(Error::InvalidArgument(format!(
            "up-set over base {} paired with a field of characteristic {}",
            up.p(),
            ctx.p()
        )));
    }
    let n = ctx.n();
    let pi = PiPermutation::build(up, n)?;
    let inc = increasing_set(up, n)?;
    let points = fixed_points_from(&inc);
    let powers = ctx.powers_of_alpha();
    let group = ctx.order() - 1;
    let pi_inverse = pi.inverse();
    let zero_row = pi_inverse[0];
    let rows = points
        .into_iter()
        .zip(pi.table.iter().copied())
        .enumerate()
        .map(|(k, (x, e))| {
            let image = if e == 0 {
                ctx.zero()
            } else {
                powers[(e % group) as usize].clone()
            };
            BijectionRow {
                k: k as u64,
                x,
                pi: e,
                image,
            }
        })
        .collect();
    Ok(BijectionTable {
        ctx: ctx.clone(),
        up: up.clone(),
        rows,
        pi_inverse,
        zero_row,
    })
}

impl BijectionTable {
    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn up(&self) -> &UpSet {
        &self.up
    }

    pub fn rows(&self) -> &[BijectionRow] {
        &self.rows
    }

    pub fn points(&self) -> Vec<ExactRational> {
        self.rows.iter().map(|r| r.x.clone()).collect()
    }

    /// The index mapped to the field zero (the `k` with `π(k) = 0`).
    pub fn zero_row(&self) -> u64 {
        self.zero_row
    }

    /// `k` with `π(k) = e`.
    pub fn pi_inverse(&self, e: u64) -> Option<u64> {
        self.pi_inverse.get(e as usize).copied()
    }

    fn row(&self, k: u64) -> Result<&BijectionRow> {
        self.rows.get(k as usize).ok_or(Error::OutOfRange {
            index: k,
            bound: self.rows.len() as u64,
        })
    }
}

/// A row where `B(x_k)^p` differs from `B(g(x_k))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusViolation {
    pub k: u64,
    pub successor: u64,
    pub expected: FieldElement,
    pub found: FieldElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub checked: usize,
    pub violations: Vec<FrobeniusViolation>,
}

impl FrobeniusReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn passed_rows(&self) -> usize {
        self.checked - self.violations.len()
    }
}

/// Checks `B(x_k)^p = B(g(x_k))` on every row, locating `g(x_k)` exactly
/// among the fixed points.
pub fn verify_frobenius(table: &BijectionTable) -> Result<FrobeniusReport> {
    let points = table.points();
    let next = dynamics::successor_indices(&table.up, &points)?;
    let violations = table
        .rows
        .iter()
        .zip(&next)
        .filter_map(|(row, &j)| {
            let expected = table.ctx.frobenius(&row.image);
            let found = &table.rows[j as usize].image;
            (expected != *found).then(|| FrobeniusViolation {
                k: row.k,
                successor: j,
                expected,
                found: found.clone(),
            })
        })
        .collect();
    Ok(FrobeniusReport {
        checked: table.rows.len(),
        violations,
    })
}

/// The index `r` with `B(x_i)·B(x_j) = B(x_r)`: `π^{-1}` of `π(i) + π(j)`
/// reduced into `1..=p^n - 1`.
pub fn multiply_indices(table: &BijectionTable, i: u64, j: u64) -> Result<u64> {
    let group = table.ctx.order() - 1;
    let ei = table.row(i)?.pi;
    let ej = table.row(j)?.pi;
    if ei == 0 || ej == 0 {
        let zero = if ei == 0 { i } else { j };
        return Err(Error::InvalidArgument(format!(
            "x_{zero} maps to the field zero, which has no exponent"
        )));
    }
    let mut e = (ei + ej) % group;
    if e == 0 {
        e = group;
    }
    table
        .pi_inverse(e)
        .ok_or_else(|| Error::Consistency(format!("exponent {e} has no preimage under π")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{make_field, PolyFp};

    fn perm(up: &UpSet, n: u32) -> Vec<u64> {
        PiPermutation::build(up, n).unwrap().table().to_vec()
    }

    fn f16() -> FieldContext {
        make_field(2, 4, Some(PolyFp::new(2, [1, 1, 0, 0, 1]).unwrap())).unwrap()
    }

    #[test]
    fn recursive_examples() {
        let e2 = UpSet::evens(2).unwrap();
        let e3 = UpSet::evens(3).unwrap();
        assert_eq!(pi_recursive(&e2, 3, 4).unwrap(), 6);
        assert_eq!(pi_recursive(&e3, 3, 9).unwrap(), 17);
        assert_eq!(pi_recursive(&UpSet::empty(2).unwrap(), 2, 0).unwrap(), 1);
        assert!(matches!(
            pi_recursive(&e2, 3, 8),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn table_matches_recursion() {
        let up = UpSet::new(3, [2]).unwrap();
        assert_eq!(perm(&up, 2), vec![2, 1, 0, 5, 4, 3, 6, 7, 8]);
        let t = perm(&up, 3);
        for k in 0..27 {
            assert_eq!(t[k as usize], pi_recursive(&up, 3, k).unwrap());
        }
        assert_eq!(perm(&up, 1), vec![0, 1, 2]);
    }

    #[test]
    fn digit_forms() {
        let w = DigitWord::new(3, vec![1, 2]).unwrap();
        assert_eq!(pi_digits(&w).value(), 3);
        let w = DigitWord::from_value(2, 4, 5).unwrap();
        assert_eq!(pi_digits(&w).value(), 7);
        let w = DigitWord::new(2, vec![1, 0, 0]).unwrap();
        assert_eq!(pi_digits_binary(&w).unwrap().digits(), &[1, 1, 0]);
        let w = DigitWord::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(pi_digits_binary(&w).unwrap().digits(), &[1, 0, 0]);
        let z = DigitWord::new(2, vec![0; 5]).unwrap();
        assert_eq!(pi_digits_binary(&z).unwrap(), z);
        assert!(pi_digits_binary(&DigitWord::new(3, vec![1]).unwrap()).is_err());
        let single = DigitWord::new(7, vec![4]).unwrap();
        assert_eq!(pi_digits(&single), single);
    }

    #[test]
    fn bottom_digit_step() {
        let up = UpSet::new(3, [2]).unwrap();
        assert_eq!(pi_step(&up, 2, 2, 0).unwrap(), 6);
        let e2 = UpSet::evens(2).unwrap();
        assert_eq!(pi_step(&e2, 2, 1, 1).unwrap(), 2);
        for d in 0..3 {
            assert_eq!(pi_step(&UpSet::evens(3).unwrap(), 2, 0, d).unwrap(), d);
        }
        assert!(pi_step(&up, 1, 0, 0).is_err());
        assert!(pi_step(&up, 2, 0, 3).is_err());
    }

    #[test]
    fn f16_table_rows() {
        let ctx = f16();
        let table = build_bijection(&ctx, &UpSet::evens(2).unwrap()).unwrap();
        let r5 = &table.rows()[5];
        assert_eq!(r5.pi, 7);
        assert_eq!(r5.image.to_string(), "a^3 + a + 1");
        assert!((r5.x.to_f64() - 0.35294117647058826).abs() < 1e-15);
        let r0 = &table.rows()[0];
        assert_eq!((r0.pi, r0.image.is_zero()), (0, true));
        assert_eq!(table.zero_row(), 0);
        assert!(verify_frobenius(&table).unwrap().passed());
    }

    #[test]
    fn prime_field_rows_are_powers() {
        let ctx = make_field(5, 1, None).unwrap();
        let table = build_bijection(&ctx, &UpSet::new(5, [1, 3]).unwrap()).unwrap();
        for row in &table.rows()[1..] {
            assert_eq!(row.image, ctx.pow(ctx.alpha(), row.k));
        }
        assert!(verify_frobenius(&table).unwrap().passed());
    }

    #[test]
    fn zero_goes_to_the_row_with_exponent_zero() {
        let ctx = make_field(2, 2, None).unwrap();
        let table = build_bijection(&ctx, &UpSet::empty(2).unwrap()).unwrap();
        assert_eq!(table.zero_row(), 1);
        assert!(table.rows()[1].image.is_zero());
        assert!(verify_frobenius(&table).unwrap().passed());
    }

    #[test]
    fn index_products() {
        let ctx = f16();
        let table = build_bijection(&ctx, &UpSet::evens(2).unwrap()).unwrap();
        for j in 1..16 {
            assert_eq!(multiply_indices(&table, 10, j).unwrap(), j);
        }
        assert_eq!(multiply_indices(&table, 1, 1).unwrap(), 3);
        assert_eq!(multiply_indices(&table, 5, 10).unwrap(), 5);
        assert!(matches!(
            multiply_indices(&table, 0, 3),
            Err(Error::InvalidArgument(_))
        ));
        assert!(multiply_indices(&table, 16, 3).is_err());
    }

    #[test]
    fn mismatched_base_rejected() {
        let ctx = f16();
        assert!(build_bijection(&ctx, &UpSet::evens(3).unwrap()).is_err());
    }
}
