//! Eventual signs of polynomials and the thresholds past which they hold.

use std::cmp::Ordering;

use num_bigint::BigInt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::class::ResidueClass;
use super::poly::Polynomial;
use super::qp::QuasiPolynomial;

/// Largest number of class members inspected when tightening a threshold
/// below the root bound.
const SCAN_LIMIT: i64 = 100_000;

/// Sign of `p(t)` for all sufficiently large `t`.
pub fn eventual_sign(p: &Polynomial) -> Ordering {
    match p.lead() {
        None => Ordering::Equal,
        Some(c) if c.is_positive() => Ordering::Greater,
        Some(_) => Ordering::Less,
    }
}

/// An integer `B > 0` such that every real root of `p` has absolute value
/// below `B`. Uses the Fujiwara bound `2 max |a_{n-k}/a_n|^{1/k}`, with the
/// `k`-th roots rounded up exactly.
pub fn root_bound(p: &Polynomial) -> BigInt {
    let (_, c) = p.integer_multiple();
    let Some(n) = c.len().checked_sub(1) else {
        return BigInt::one();
    };
    let lead = c[n].abs();
    let mut worst = BigInt::zero();
    for k in 1..=n {
        let a = c[n - k].abs();
        if a.is_zero() {
            continue;
        }
        // smallest x with x^k * lead >= a
        let ratio = (&a + &lead - BigInt::one()) / &lead;
        let mut x = ratio.nth_root(k as u32);
        while x.pow(k as u32) * &lead < a {
            x += 1;
        }
        worst = worst.max(x);
    }
    BigInt::from(2) * worst + BigInt::one()
}

fn sign_at(int_coeffs: &[BigInt], t: i64) -> Ordering {
    let t = BigInt::from(t);
    let mut acc = BigInt::zero();
    for c in int_coeffs.iter().rev() {
        acc = acc * &t + c;
    }
    acc.sign_ordering()
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Smallest `T >= floor` such that `p(t)` has its eventual (nonzero) sign
/// for every `t >= T` in `class`. The zero polynomial returns `floor`.
pub fn sign_threshold(p: &Polynomial, class: ResidueClass, floor: i64) -> i64 {
    let target = eventual_sign(p);
    if target == Ordering::Equal {
        return floor;
    }
    let bound = root_bound(p).to_i64().unwrap_or(i64::MAX / 4);
    if bound <= floor {
        return floor;
    }
    let m = class.modulus as i64;
    if (bound - floor) / m > SCAN_LIMIT {
        return bound;
    }
    let (_, int_coeffs) = p.integer_multiple();
    let mut last_bad = None;
    let mut t = class.first_at_or_above(floor);
    while t < bound {
        if sign_at(&int_coeffs, t) != target {
            last_bad = Some(t);
        }
        t += m;
    }
    match last_bad {
        Some(t) => t + 1,
        None => floor,
    }
}

/// Threshold from which `f` is strictly positive, or `None` when some
/// component is not eventually positive.
pub fn positive_threshold(f: &QuasiPolynomial) -> Option<i64> {
    let period = f.period();
    let mut t0 = f.threshold();
    for (r, p) in f.components().iter().enumerate() {
        if !eventual_sign(p).is_gt() {
            return None;
        }
        t0 = t0.max(sign_threshold(p, ResidueClass::new(period, r as u64), f.threshold()));
    }
    Some(t0)
}
