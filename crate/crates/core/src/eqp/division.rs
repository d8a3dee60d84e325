//! Division with remainder for eventual quasi-polynomials.
//!
//! Both algorithms work one residue class at a time and split a class
//! further whenever a quotient term would otherwise fail to be
//! integer-valued. Quotient terms are written as `c * ((t - J)/M)^e` for the
//! current class `t ≡ J (mod M)`, so that `c` must be an integer; when it is
//! not, the class is refined by the denominator of `c`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::class::{lcm_u64, ResidueClass};
use super::poly::{big, Polynomial};
use super::qp::QuasiPolynomial;
use super::sign::{eventual_sign, sign_threshold};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum DivMode {
    /// Remainder of lower degree than the divisor where that is possible
    /// with integer-valued quotients.
    Polynomial,
    /// Remainder with `0 <= r(t) < g(t)` eventually.
    Integer,
}

#[derive(Clone, Debug)]
pub(crate) struct DivPiece {
    pub class: ResidueClass,
    pub quotient: Polynomial,
    pub remainder: Polynomial,
    pub threshold: i64,
}

/// `((t - J) / M)` for the class `t ≡ J (mod M)`.
fn local_index(class: ResidueClass) -> Polynomial {
    let m = BigRational::from_integer(BigInt::from(class.modulus));
    Polynomial::new(vec![
        -BigRational::from_integer(BigInt::from(class.residue)) / &m,
        BigRational::one() / m,
    ])
}

fn to_u64(n: &BigInt, what: &'static str) -> Result<u64> {
    u64::try_from(n.clone()).map_err(|_| Error::BudgetExceeded {
        what,
        size: u128::MAX,
        limit: u64::MAX as u128,
    })
}

/// Largest residue modulus a split may produce.
pub(crate) const MAX_MODULUS: u64 = 1 << 16;

pub(crate) fn check_modulus(modulus: u128) -> Result<u64> {
    if modulus > MAX_MODULUS as u128 {
        return Err(Error::BudgetExceeded {
            what: "residue modulus",
            size: modulus,
            limit: MAX_MODULUS as u128,
        });
    }
    Ok(modulus as u64)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Smallest modulus `M` (a multiple of `class.modulus`) such that `p(t) mod c`
/// is constant on every subclass of `class` modulo `M`.
pub(crate) fn residue_modulus(p: &Polynomial, class: ResidueClass, c: &BigInt) -> Result<u64> {
    if p.is_constant() || c.is_one() {
        return Ok(class.modulus);
    }
    // D*p has integer coefficients, so shifting t by a multiple of D*c
    // preserves p(t) modulo c.
    let span = to_u64(&(p.denominator_lcm() * c), "residue period")?;
    let m = class.modulus;
    let full = check_modulus((m / m.gcd(&span)) as u128 * span as u128)? / m;
    let cq = BigRational::from_integer(c.clone());
    for k in divisors(full) {
        let step = BigInt::from(m * k);
        let diff = &p.shift(&step) - p;
        if diff.scale(&(BigRational::one() / &cq)).is_integer_valued_on(class) {
            return Ok(m * k);
        }
    }
    Ok(m * full)
}

/// Integer division by a positive constant `c` on `class`.
fn divide_by_constant(
    f: &Polynomial,
    c: &BigInt,
    class: ResidueClass,
    floor: i64,
) -> Result<Vec<DivPiece>> {
    let modulus = residue_modulus(f, class, c)?;
    let cq = BigRational::from_integer(c.clone());
    let mut out = Vec::new();
    for sub in class.refine_to(modulus) {
        let rep = BigInt::from(sub.residue);
        let value = f
            .eval_integer(&rep)
            .ok_or_else(|| Error::Internal("dividend is not integer-valued".into()))?;
        let k = value.mod_floor(c);
        let kq = Polynomial::from_int(k);
        let quotient = (f - &kq).scale(&(BigRational::one() / &cq));
        out.push(DivPiece {
            class: sub,
            quotient,
            remainder: kq,
            threshold: floor,
        });
    }
    Ok(out)
}

/// Divides `f` by `g` on `class`. `g` must be nonzero; for
/// [`DivMode::Integer`] its eventual sign must be positive, and for
/// [`DivMode::Polynomial`] its degree must be positive.
pub(crate) fn divide_on(
    f: &Polynomial,
    g: &Polynomial,
    class: ResidueClass,
    floor: i64,
    mode: DivMode,
) -> Result<Vec<DivPiece>> {
    let dg = g.degree().ok_or(Error::ConstantDivisor)?;
    if dg == 0 {
        match mode {
            DivMode::Polynomial => return Err(Error::ConstantDivisor),
            DivMode::Integer => {
                let c = g.coeff(0);
                if !c.is_positive() || !c.is_integer() {
                    return Err(Error::NotEventuallyPositive { what: "divisor" });
                }
                return divide_by_constant(f, &c.to_integer(), class, floor);
            }
        }
    }
    let g_lead = g.lead().unwrap().clone();
    let mut work = vec![(class, Polynomial::zero(), f.clone())];
    let mut out = Vec::new();
    while let Some((c, mut q, mut rem)) = work.pop() {
        // eliminate the leading term while the dividend has larger degree
        if let Some(dr) = rem.degree().filter(|&dr| dr > dg) {
            let e = dr - dg;
            let ratio = rem.lead().unwrap() / &g_lead;
            let coef = ratio * big(BigInt::from(c.modulus).pow(e as u32));
            if !coef.is_integer() {
                let k = to_u64(coef.denom(), "class refinement")?;
                check_modulus(c.modulus as u128 * k as u128)?;
                for sub in c.refine(k) {
                    work.push((sub, q.clone(), rem.clone()));
                }
                continue;
            }
            let term = local_index(c).pow(e).scale(&coef);
            rem = &rem - &(&term * g);
            q = &q + &term;
            work.push((c, q, rem));
            continue;
        }
        if rem.degree() == Some(dg) {
            let k = (rem.lead().unwrap() / &g_lead).floor();
            let kp = Polynomial::constant(k);
            rem = &rem - &(&kp * g);
            q = &q + &kp;
        }
        let threshold = match mode {
            DivMode::Polynomial => floor,
            DivMode::Integer => {
                if rem.degree().is_some_and(|d| d < dg) && eventual_sign(&rem).is_lt() {
                    rem = &rem + g;
                    q = &q - &Polynomial::one();
                }
                let mut t0 = sign_threshold(g, c, floor);
                t0 = t0.max(sign_threshold(&rem, c, floor));
                t0.max(sign_threshold(&(g - &rem), c, floor))
            }
        };
        out.push(DivPiece {
            class: c,
            quotient: q,
            remainder: rem,
            threshold,
        });
    }
    Ok(out)
}

fn assemble_division(
    pieces: Vec<DivPiece>,
) -> Result<(QuasiPolynomial, QuasiPolynomial)> {
    let threshold = pieces.iter().map(|p| p.threshold).max().unwrap_or(0);
    let qs: Vec<_> = pieces.iter().map(|p| (p.class, p.quotient.clone())).collect();
    let rs: Vec<_> = pieces.into_iter().map(|p| (p.class, p.remainder)).collect();
    Ok((
        QuasiPolynomial::from_pieces(&qs, threshold)?,
        QuasiPolynomial::from_pieces(&rs, threshold)?,
    ))
}

fn divide(
    f: &QuasiPolynomial,
    g: &QuasiPolynomial,
    mode: DivMode,
) -> Result<(QuasiPolynomial, QuasiPolynomial)> {
    let period = lcm_u64(f.period(), g.period());
    let floor = f.threshold().max(g.threshold());
    let mut pieces = Vec::new();
    for r in 0..period {
        let class = ResidueClass::new(period, r);
        pieces.extend(divide_on(f.component(r), g.component(r), class, floor, mode)?);
    }
    assemble_division(pieces)
}

/// Polynomial-style division `f = q*g + r` with integer-valued `q` and `r`.
///
/// Leading terms are eliminated exactly, splitting residue classes by the
/// leading coefficient of `g` as needed, so `deg(r) <= deg(g)`. The degree
/// drops strictly unless the leading coefficients at equal degree have a
/// non-integral ratio, which no residue splitting can repair; the quotient
/// then takes the floor of that ratio and `0 <= lc(r)/lc(g) < 1`.
///
/// Every component of `g` must have positive degree.
pub fn poly_divmod(
    f: &QuasiPolynomial,
    g: &QuasiPolynomial,
) -> Result<(QuasiPolynomial, QuasiPolynomial)> {
    if g.components().iter().any(|p| p.degree().unwrap_or(0) == 0) {
        return Err(Error::ConstantDivisor);
    }
    divide(f, g, DivMode::Polynomial)
}

/// Integer division `f = q*g + r` with `0 <= r(t) < g(t)` for every `t` at or
/// beyond the returned threshold. `g` must be eventually positive on every
/// residue class; constant divisors split the classes by the residue of `f`.
pub fn int_divmod(
    f: &QuasiPolynomial,
    g: &QuasiPolynomial,
) -> Result<(QuasiPolynomial, QuasiPolynomial)> {
    if g.components().iter().any(|p| !eventual_sign(p).is_gt()) {
        return Err(Error::NotEventuallyPositive { what: "divisor" });
    }
    divide(f, g, DivMode::Integer)
}
