//! Library results checked against small independent implementations.

use num_bigint::BigUint;
use num_rational::BigRational;
use tentfield::arith::{checked_pow, is_prime};
use tentfield::dynamics::{
    eval_g_iter, fixed_points, in_increasing_set, increasing_set, orbit_partition, ExactRational,
    UpSet,
};
use tentfield::ffield::{count_irreducibles, is_irreducible, PolyFp};

/// Coefficients (lowest first) of the monic polynomial of degree `deg`
/// whose lower coefficients are the base-`p` digits of `idx`.
fn monic(p: u64, deg: usize, mut idx: u64) -> Vec<u64> {
    let mut c = Vec::with_capacity(deg + 1);
    for _ in 0..deg {
        c.push(idx % p);
        idx /= p;
    }
    c.push(1);
    c
}

/// Long division remainder of `f` by the monic `g`, coefficients mod `p`.
fn remainder(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        for (i, &gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - lead * gi % p) % p;
        }
        r.pop();
    }
    r
}

fn trial_division_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    (1..=deg / 2).all(|d| {
        (0..p.pow(d as u32)).all(|idx| remainder(f, &monic(p, d, idx), p).iter().any(|&c| c != 0))
    })
}

#[test]
fn irreducibility_matches_trial_division() {
    for p in [2u64, 3, 5] {
        for deg in 1..=6usize {
            for idx in 0..p.pow(deg as u32) {
                let c = monic(p, deg, idx);
                let f = PolyFp::new(p, c.iter().copied()).unwrap();
                assert_eq!(
                    is_irreducible(&f).unwrap(),
                    trial_division_irreducible(&c, p),
                    "p={p} f={f}"
                );
            }
        }
    }
}

/// Monic irreducibles of degree `m` by sieving out every product of two
/// monic factors of positive degree.
fn sieve_count(p: u64, m: u32) -> u64 {
    let total = p.pow(m) as usize;
    let mut reducible = vec![false; total];
    for d in 1..=m / 2 {
        for a in 0..p.pow(d) {
            let fa = monic(p, d as usize, a);
            for b in 0..p.pow(m - d) {
                let fb = monic(p, (m - d) as usize, b);
                let mut prod = vec![0u64; m as usize + 1];
                for (i, &x) in fa.iter().enumerate() {
                    for (j, &y) in fb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let idx = prod[..m as usize]
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &c| acc * p + c);
                reducible[idx as usize] = true;
            }
        }
    }
    reducible.iter().filter(|&&r| !r).count() as u64
}

#[test]
fn irreducible_counts_match_sieve() {
    for p in (2..=256u64).filter(|&p| is_prime(p)) {
        for m in 1..=16u32 {
            if checked_pow(p, m).is_none_or(|s| s > 1 << 16) {
                break;
            }
            assert_eq!(
                count_irreducibles(p, u64::from(m)).unwrap(),
                BigUint::from(sieve_count(p, m)),
                "p={p} m={m}"
            );
        }
    }
}

fn q(a: u64, b: u64) -> ExactRational {
    ExactRational::from_ratio(a, b)
}

fn families(p: u64) -> Vec<UpSet> {
    let mut out = vec![
        UpSet::evens(p).unwrap(),
        UpSet::empty(p).unwrap(),
        UpSet::full(p).unwrap(),
    ];
    if p > 2 {
        out.push(UpSet::new(p, [2]).unwrap());
        out.push(UpSet::new(p, [0, p - 1]).unwrap());
    } else {
        out.push(UpSet::new(2, [1]).unwrap());
    }
    out
}

#[test]
fn increasing_set_matches_slope_signs() {
    for p in [2u64, 3, 5, 7] {
        let mut n = 1;
        while let Some(size) = checked_pow(p, n).filter(|&s| s <= 3u64.pow(7)) {
            for up in families(p) {
                let inc = increasing_set(&up, n).unwrap();
                for k in 0..size {
                    let a = eval_g_iter(&up, &q(3 * k + 1, 3 * size), n).unwrap();
                    let b = eval_g_iter(&up, &q(3 * k + 2, 3 * size), n).unwrap();
                    let rising = b > a;
                    assert_eq!(
                        inc.contains(k),
                        rising,
                        "p={p} n={n} I={:?} k={k}",
                        up.members()
                    );
                    assert_eq!(in_increasing_set(&up, n, k).unwrap(), rising);
                }
            }
            n += 1;
        }
    }
}

#[test]
fn no_other_fixed_rationals() {
    // Every rational fixed point of g^n has denominator dividing p^n - 1 or
    // p^n + 1, so scanning those two grids is exhaustive.
    for p in [2u64, 3, 5, 7] {
        let mut n = 1;
        while let Some(size) = checked_pow(p, n).filter(|&s| s <= 256) {
            for up in families(p) {
                let points = fixed_points(&up, n).unwrap();
                let mut found = Vec::new();
                for den in [size - 1, size + 1] {
                    for num in 0..=den {
                        let x = q(num, den);
                        if eval_g_iter(&up, &x, n).unwrap() == x {
                            found.push(x);
                        }
                    }
                }
                found.sort();
                found.dedup();
                assert_eq!(found, points, "p={p} n={n} I={:?}", up.members());
            }
            n += 1;
        }
    }
}

#[test]
fn other_denominators_are_never_fixed() {
    for (p, n) in [(2u64, 3u32), (3, 2), (5, 2)] {
        let size = p.pow(n);
        for up in families(p) {
            for den in 2..60u64 {
                if (size - 1) % den == 0 || (size + 1) % den == 0 {
                    continue;
                }
                for num in 1..den {
                    let x = ExactRational::from(BigRational::new(num.into(), den.into()));
                    if x.denom() != &den.into() {
                        continue;
                    }
                    assert_ne!(eval_g_iter(&up, &x, n).unwrap(), x, "{x}");
                }
            }
        }
    }
}

#[test]
fn orbit_counts_match_brute_iteration() {
    for p in [2u64, 3, 5] {
        for n in 1..=4u32 {
            for up in families(p) {
                let points = fixed_points(&up, n).unwrap();
                let part = orbit_partition(&up, n).unwrap();
                for m in 1..=n {
                    let brute = points
                        .iter()
                        .filter(|x| {
                            eval_g_iter(&up, x, m).unwrap() == **x
                                && (1..m).all(|i| eval_g_iter(&up, x, i).unwrap() != **x)
                        })
                        .count();
                    assert_eq!(part.points_of_order(m as usize), brute, "p={p} n={n} m={m}");
                }
            }
        }
    }
}
