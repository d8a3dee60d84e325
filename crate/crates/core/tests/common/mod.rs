#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use parafrob_core::oracle::{frobenius_int, IntGenerators, Semigroup};
use parafrob_core::QuasiPolynomial;

pub fn qp(coeffs: &[i64]) -> QuasiPolynomial {
    QuasiPolynomial::from_i64s(coeffs)
}

pub fn gens(list: &[&[i64]]) -> Vec<QuasiPolynomial> {
    list.iter().map(|c| qp(c)).collect()
}

/// Generators at `t`, or `None` when one of them is not positive.
pub fn gens_at(gens: &[QuasiPolynomial], t: i64) -> Option<IntGenerators> {
    let vals: Option<Vec<u64>> = gens
        .iter()
        .map(|g| g.eval_component(t).to_u64().filter(|&v| v > 0))
        .collect();
    IntGenerators::new(vals?)
}

pub fn oracle_at(gens: &[QuasiPolynomial], t: i64) -> Option<BigInt> {
    gens_at(gens, t).map(|g| BigInt::from(frobenius_int(&g)))
}

/// Values of `t` in `range` where the symbolic result disagrees with the
/// oracle; below-threshold values count as disagreements.
pub fn mismatches(
    gens: &[QuasiPolynomial],
    f: &QuasiPolynomial,
    ts: impl IntoIterator<Item = i64>,
) -> Vec<i64> {
    ts.into_iter()
        .filter(|&t| match (f.eval(t), oracle_at(gens, t)) {
            (Ok(v), Some(w)) => v != w,
            _ => true,
        })
        .collect()
}

/// `F(t)` is outside the semigroup, and `F(t) + k*gcd` is inside for
/// `k = 1..=extra`.
pub fn maximal_at(gens: &[QuasiPolynomial], f: &QuasiPolynomial, t: i64, extra: i128) -> bool {
    let (Some(g), Ok(v)) = (gens_at(gens, t), f.eval(t)) else {
        return false;
    };
    let Some(v) = v.to_i128() else { return false };
    let s = Semigroup::new(g);
    let d = s.gcd() as i128;
    v % d == 0 && !s.contains(v) && (1..=extra).all(|k| s.contains(v + k * d))
}
