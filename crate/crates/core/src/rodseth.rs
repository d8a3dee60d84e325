//! Frobenius numbers of at most three generators of any degree.
//!
//! Three generators go through Rødseth's algorithm: after removing common
//! factors, a negative-remainder division chain starting from `a1` and
//! `s0 = a3 / a2 mod a1` produces convergents `P_i`, and the answer is read
//! off at the unique index where `s_i / P_i` brackets `a3 / a2`. Every step is
//! carried out on the residue classes of `t`, splitting them further when a
//! division needs it.

use std::cmp::Ordering;

use num_integer::Integer;

use crate::eqp::{
    compare_on, divide_on, eventual_sign, ext_gcd, gcd_all, int_divmod, lcm_u64, positive_threshold,
    sign_threshold, DivMode, Polynomial, QuasiPolynomial, ResidueClass,
};
use crate::error::{Error, Result};

/// Default cap on the length of a division chain.
pub const DEFAULT_CHAIN_BUDGET: usize = 100_000;

/// The division chain of one residue class.
///
/// `s_seq` holds `s_{-1} = a1, s_0, ..., s_{m+1} = 0`, `q_seq` holds
/// `q_1, ..., q_{m+1}`, and `p_seq` holds `P_{-1} = 0, P_0 = 1, ..., P_{m+1}`,
/// so that `s_{i-1} = q_{i+1} s_i - s_{i+1}` and
/// `P_{i+1} = q_{i+1} P_i - P_{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RodsethState {
    pub s_seq: Vec<Polynomial>,
    pub q_seq: Vec<Polynomial>,
    pub p_seq: Vec<Polynomial>,
    /// From here on every chain inequality holds and the convergents `P_i`,
    /// `i >= 0`, are positive and strictly increasing.
    pub threshold: i64,
}

fn finish_state(
    class: ResidueClass,
    s_seq: Vec<Polynomial>,
    q_seq: Vec<Polynomial>,
    mut threshold: i64,
) -> Result<RodsethState> {
    let mut p_seq = vec![Polynomial::zero(), Polynomial::one()];
    for q in &q_seq {
        let n = p_seq.len();
        let next = &(q * &p_seq[n - 1]) - &p_seq[n - 2];
        let step = &next - &p_seq[n - 1];
        if !eventual_sign(&step).is_gt() {
            return Err(Error::Internal("convergents are not eventually increasing".into()));
        }
        threshold = threshold.max(sign_threshold(&step, class, threshold));
        p_seq.push(next);
    }
    Ok(RodsethState {
        s_seq,
        q_seq,
        p_seq,
        threshold,
    })
}

/// The chain for `a1` and `s0` on one class, split into subclasses where a
/// division requires it. `s0` must be eventually positive.
fn chain_on(
    a1: &Polynomial,
    s0: &Polynomial,
    class: ResidueClass,
    floor: i64,
    budget: usize,
) -> Result<Vec<(ResidueClass, RodsethState)>> {
    if !eventual_sign(s0).is_gt() {
        return Err(Error::NotEventuallyPositive { what: "s0" });
    }
    let gap = a1 - s0;
    if !eventual_sign(&gap).is_gt() {
        return Err(Error::Internal("s0 is not eventually below a1".into()));
    }
    let floor = sign_threshold(s0, class, sign_threshold(&gap, class, floor));
    let mut work = vec![(class, vec![a1.clone(), s0.clone()], Vec::<Polynomial>::new(), floor)];
    let mut out = Vec::new();
    while let Some((c, s_seq, q_seq, threshold)) = work.pop() {
        if q_seq.len() >= budget {
            return Err(Error::BudgetExceeded {
                what: "division chain",
                size: q_seq.len() as u128 + 1,
                limit: budget as u128,
            });
        }
        let n = s_seq.len();
        let (prev, cur) = (&s_seq[n - 2], &s_seq[n - 1]);
        for piece in divide_on(prev, cur, c, threshold, DivMode::Integer)? {
            let mut s_next = s_seq.clone();
            let mut q_next = q_seq.clone();
            let t0 = threshold.max(piece.threshold);
            if piece.remainder.is_zero() {
                q_next.push(piece.quotient);
                s_next.push(Polynomial::zero());
                out.push((piece.class, finish_state(piece.class, s_next, q_next, t0)?));
                continue;
            }
            let t0 = t0.max(sign_threshold(&piece.remainder, piece.class, t0));
            let s = cur - &piece.remainder;
            if s.degree() == cur.degree() && s.lead() == cur.lead() && cur.degree_or_zero() > 0 {
                return Err(Error::ChainDoesNotTerminate(format!(
                    "after {} steps on t ≡ {} (mod {}) the remainders repeat the form {} - k*({})",
                    q_seq.len() + 1,
                    piece.class.residue,
                    piece.class.modulus,
                    cur.display_with("t"),
                    piece.remainder.display_with("t"),
                )));
            }
            q_next.push(&piece.quotient + &Polynomial::one());
            s_next.push(s);
            work.push((piece.class, s_next, q_next, t0));
        }
    }
    Ok(out)
}

/// The negative-remainder chain of `a1` and `s0`, one state per residue
/// class of the final refinement.
pub fn negative_remainder_chain(
    a1: &QuasiPolynomial,
    s0: &QuasiPolynomial,
    budget: usize,
) -> Result<Vec<(ResidueClass, RodsethState)>> {
    let period = lcm_u64(a1.period(), s0.period());
    let floor = a1.threshold().max(s0.threshold());
    let mut out = Vec::new();
    for j in 0..period {
        let class = ResidueClass::new(period, j);
        out.extend(chain_on(a1.component(j), s0.component(j), class, floor, budget)?);
    }
    Ok(out)
}

/// The index `i` (returned as `i + 1`, so that `s_i = s_seq[k]` and
/// `P_i = p_seq[k]`) with `s_{i+1}/P_{i+1} <= a3/a2 < s_i/P_i`, and the
/// threshold from which both inequalities hold.
pub fn select_index(
    state: &RodsethState,
    a2: &Polynomial,
    a3: &Polynomial,
    class: ResidueClass,
) -> Result<(usize, i64)> {
    let floor = state.threshold;
    for k in 0..state.s_seq.len() - 1 {
        let lower = compare_on(
            &(&state.s_seq[k + 1] * a2),
            &(a3 * &state.p_seq[k + 1]),
            class,
            floor,
        );
        if lower.0 == Ordering::Greater {
            continue;
        }
        let upper = compare_on(&(a3 * &state.p_seq[k]), &(&state.s_seq[k] * a2), class, floor);
        if upper.0 == Ordering::Less {
            return Ok((k, lower.1.max(upper.1)));
        }
    }
    Err(Error::Internal("no convergent brackets a3/a2".into()))
}

/// `-a1 + a2 (s_i - 1) + a3 (P_{i+1} - 1) - min(a2 s_{i+1}, a3 P_i)`.
pub fn assemble_result(
    state: &RodsethState,
    k: usize,
    a: [&Polynomial; 3],
    class: ResidueClass,
    floor: i64,
) -> (Polynomial, i64) {
    let [a1, a2, a3] = a;
    let one = Polynomial::one();
    let x = a2 * &state.s_seq[k + 1];
    let y = a3 * &state.p_seq[k];
    let (rel, t0) = compare_on(&x, &y, class, floor);
    let min = if rel.is_le() { x } else { y };
    let base = &(&(a2 * &(&state.s_seq[k] - &one)) + &(a3 * &(&state.p_seq[k + 1] - &one))) - a1;
    (&base - &min, t0)
}

fn is_one(f: &QuasiPolynomial) -> bool {
    f.components().iter().all(|c| *c == Polynomial::one())
}

/// Frobenius number of two generators: `a1 a2 / gcd - a1 - a2`.
pub fn sylvester(a1: &QuasiPolynomial, a2: &QuasiPolynomial) -> Result<QuasiPolynomial> {
    let (d, _, _) = ext_gcd(a1, a2)?;
    let lcm = (a1 * a2).exact_div(&d)?;
    Ok((&(&lcm - a1) - a2).at_least(d.threshold()))
}

fn rodseth3(a: [&QuasiPolynomial; 3], budget: usize) -> Result<QuasiPolynomial> {
    let [a1, a2, a3] = a;
    let d = gcd_all([a1, a2, a3])?;
    if !is_one(&d) {
        let reduced = [a1.exact_div(&d)?, a2.exact_div(&d)?, a3.exact_div(&d)?];
        let inner = rodseth3([&reduced[0], &reduced[1], &reduced[2]], budget)?;
        return Ok((&d * &inner).at_least(d.threshold()));
    }
    let (e, _, q) = ext_gcd(a1, a2)?;
    if !is_one(&e) {
        let (b1, b2) = (a1.exact_div(&e)?, a2.exact_div(&e)?);
        let inner = rodseth3([&b1, &b2, a3], budget)?;
        let correction = a3 * &(&e - &QuasiPolynomial::one());
        return Ok((&(&e * &inner) + &correction).at_least(e.threshold()));
    }
    let (_, s0) = int_divmod(&(a3 * &q), a1)?;
    let floor = [a1, a2, a3, &s0]
        .iter()
        .map(|f| f.threshold())
        .max()
        .unwrap()
        .max(e.threshold());
    let period = [a1, a2, a3, &s0].iter().fold(1, |acc, f| lcm_u64(acc, f.period()));
    let mut pieces = Vec::new();
    let mut threshold = floor;
    for j in 0..period {
        let class = ResidueClass::new(period, j);
        let (c1, c2, c3) = (a1.component(j), a2.component(j), a3.component(j));
        let s0j = s0.component(j);
        if s0j.is_zero() {
            // a3 is a multiple of a1 here
            pieces.push((class, &(&(c1 * c2) - c1) - c2));
            continue;
        }
        for (sub, state) in chain_on(c1, s0j, class, floor, budget)? {
            let (k, t_sel) = select_index(&state, c2, c3, sub)?;
            let t_state = state.threshold.max(t_sel);
            let (value, t_min) = assemble_result(&state, k, [c1, c2, c3], sub, t_state);
            threshold = threshold.max(t_state).max(t_min);
            pieces.push((sub, value));
        }
    }
    QuasiPolynomial::from_pieces(&pieces, threshold)
}

/// Frobenius number of one, two or three eventually positive generators.
pub fn frobenius_upto3(gens: &[QuasiPolynomial], budget: usize) -> Result<QuasiPolynomial> {
    let mut floor = 0;
    for a in gens {
        floor = floor.max(positive_threshold(a).ok_or(Error::NotEventuallyPositive { what: "generator" })?);
    }
    let value = match gens {
        [] => return Err(Error::NoGenerators),
        [a1] => -a1,
        [a1, a2] => sylvester(a1, a2)?,
        [a1, a2, a3] => rodseth3([a1, a2, a3], budget)?,
        _ => return Err(Error::TooManyGenerators(gens.len())),
    };
    Ok(value.at_least(floor).normalize())
}

/// The same algorithm on fixed integers, kept independent of the symbolic
/// code for cross-checking. Entries must be positive.
pub fn frobenius_rodseth_int(a: [i128; 3]) -> i128 {
    let [a1, a2, a3] = a;
    let d = a1.gcd(&a2).gcd(&a3);
    if d > 1 {
        return d * frobenius_rodseth_int([a1 / d, a2 / d, a3 / d]);
    }
    let e = a1.gcd(&a2);
    if e > 1 {
        return e * frobenius_rodseth_int([a1 / e, a2 / e, a3]) + a3 * (e - 1);
    }
    let inv = a2.extended_gcd(&a1).x.rem_euclid(a1);
    let s0 = (a3 % a1 * inv).rem_euclid(a1);
    if s0 == 0 {
        return a1 * a2 - a1 - a2;
    }
    let (s, q) = integer_chain(a1, s0);
    let mut p = vec![0i128, 1];
    for qi in &q {
        let n = p.len();
        p.push(qi * p[n - 1] - p[n - 2]);
    }
    let mut full = vec![a1];
    full.extend(s);
    let k = (0..full.len() - 1)
        .find(|&k| full[k + 1] * a2 <= a3 * p[k + 1] && a3 * p[k] < full[k] * a2)
        .expect("the convergents bracket a3/a2");
    -a1 + a2 * (full[k] - 1) + a3 * (p[k + 1] - 1) - (a2 * full[k + 1]).min(a3 * p[k])
}

/// Integer negative-remainder chain: returns `(s_0, ..., s_{m+1})` and
/// `(q_1, ..., q_{m+1})` for `s_{-1} = a1`.
pub fn integer_chain(a1: i128, s0: i128) -> (Vec<i128>, Vec<i128>) {
    let mut s = vec![s0];
    let mut q = Vec::new();
    let mut prev = a1;
    while let Some(&cur) = s.last().filter(|&&c| c != 0) {
        let (k, r) = prev.div_mod_floor(&cur);
        if r == 0 {
            q.push(k);
            s.push(0);
        } else {
            q.push(k + 1);
            s.push(cur - r);
        }
        prev = cur;
    }
    (s, q)
}
