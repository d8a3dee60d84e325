//! Extended gcd of eventual quasi-polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::class::{lcm_u64, ResidueClass};
use super::division::{divide_on, residue_modulus, DivMode};
use super::poly::Polynomial;
use super::qp::QuasiPolynomial;
use super::sign::{eventual_sign, sign_threshold};
use crate::error::{Error, Result};

/// Cap on Euclidean steps per residue class.
const STEP_LIMIT: usize = 10_000;

/// `(g, x, y)` with `x*a + y*b = g = gcd(a, b) >= 0`.
pub fn ext_gcd_int(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// A value together with its cofactors: `v = p*f + q*g`.
#[derive(Clone, Debug)]
struct Row {
    v: Polynomial,
    p: Polynomial,
    q: Polynomial,
}

impl Row {
    fn minus(&self, w: &Polynomial, other: &Row) -> Row {
        Row {
            v: &self.v - &(w * &other.v),
            p: &self.p - &(w * &other.p),
            q: &self.q - &(w * &other.q),
        }
    }

    fn neg(self) -> Row {
        Row {
            v: -self.v,
            p: -self.p,
            q: -self.q,
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct GcdPiece {
    pub class: ResidueClass,
    pub d: Polynomial,
    pub p: Polynomial,
    pub q: Polynomial,
    pub threshold: i64,
}

/// Extended gcd of `f` and `g` on `class`, split into subclasses as needed.
/// On each piece `d = p*f + q*g` identically and `d(t) = gcd(f(t), g(t))`
/// for every `t >= threshold` in the subclass.
pub(crate) fn ext_gcd_on(
    f: &Polynomial,
    g: &Polynomial,
    class: ResidueClass,
    floor: i64,
) -> Result<Vec<GcdPiece>> {
    let start = (
        class,
        Row {
            v: f.clone(),
            p: Polynomial::one(),
            q: Polynomial::zero(),
        },
        Row {
            v: g.clone(),
            p: Polynomial::zero(),
            q: Polynomial::one(),
        },
        0usize,
    );
    let mut work = vec![start];
    let mut out = Vec::new();
    while let Some((c, a, b, steps)) = work.pop() {
        if steps > STEP_LIMIT {
            return Err(Error::BudgetExceeded {
                what: "gcd steps",
                size: steps as u128,
                limit: STEP_LIMIT as u128,
            });
        }
        if b.v.is_zero() {
            let a = if eventual_sign(&a.v).is_lt() { a.neg() } else { a };
            let threshold = sign_threshold(&a.v, c, floor);
            out.push(GcdPiece {
                class: c,
                d: a.v,
                p: a.p,
                q: a.q,
                threshold,
            });
            continue;
        }
        if a.v.is_zero() {
            work.push((c, b, a, steps + 1));
            continue;
        }
        if let Some(cb) = b.v.as_constant() {
            let cb = cb.to_integer();
            let modulus = residue_modulus(&a.v, c, &cb.abs())?;
            let inv = Polynomial::constant(BigRational::one() / BigRational::from_integer(cb.clone()));
            for sub in c.refine_to(modulus) {
                let k = a
                    .v
                    .eval_integer(&BigInt::from(sub.residue))
                    .ok_or_else(|| Error::Internal("gcd operand is not integer-valued".into()))?
                    .mod_floor(&cb.abs());
                let w = &(&a.v - &Polynomial::from_int(k.clone())) * &inv;
                let (g0, x, y) = ext_gcd_int(&cb, &k);
                let coef_b = &Polynomial::from_int(x) - &(&Polynomial::from_int(y.clone()) * &w);
                let y = Polynomial::from_int(y);
                out.push(GcdPiece {
                    class: sub,
                    d: Polynomial::from_int(g0),
                    p: &(&y * &a.p) + &(&coef_b * &b.p),
                    q: &(&y * &a.q) + &(&coef_b * &b.q),
                    threshold: floor,
                });
            }
            continue;
        }
        if a.v.degree() < b.v.degree() {
            work.push((c, b, a, steps + 1));
            continue;
        }
        for piece in divide_on(&a.v, &b.v, c, floor, DivMode::Polynomial)? {
            let r = a.minus(&piece.quotient, &b);
            work.push((piece.class, b.clone(), r, steps + 1));
        }
    }
    Ok(out)
}

/// `(d, p, q)` with `d = p*f + q*g` and `d(t) = gcd(f(t), g(t))` for every
/// `t` at or beyond the threshold of `d`.
pub fn ext_gcd(
    f: &QuasiPolynomial,
    g: &QuasiPolynomial,
) -> Result<(QuasiPolynomial, QuasiPolynomial, QuasiPolynomial)> {
    let period = lcm_u64(f.period(), g.period());
    let floor = f.threshold().max(g.threshold());
    let mut pieces = Vec::new();
    for r in 0..period {
        let class = ResidueClass::new(period, r);
        pieces.extend(ext_gcd_on(f.component(r), g.component(r), class, floor)?);
    }
    let threshold = pieces.iter().map(|p| p.threshold).max().unwrap_or(floor);
    let part = |sel: fn(&GcdPiece) -> &Polynomial| -> Vec<(ResidueClass, Polynomial)> {
        pieces.iter().map(|p| (p.class, sel(p).clone())).collect()
    };
    Ok((
        QuasiPolynomial::from_pieces(&part(|p| &p.d), threshold)?.normalize(),
        QuasiPolynomial::from_pieces(&part(|p| &p.p), threshold)?,
        QuasiPolynomial::from_pieces(&part(|p| &p.q), threshold)?,
    ))
}

/// Gcd of a family of quasi-polynomials.
pub fn gcd_all<'a>(items: impl IntoIterator<Item = &'a QuasiPolynomial>) -> Result<QuasiPolynomial> {
    let mut acc = QuasiPolynomial::zero();
    for x in items {
        acc = ext_gcd(&acc, x)?.0;
    }
    Ok(acc)
}
