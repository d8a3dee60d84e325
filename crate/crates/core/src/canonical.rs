//! Canonical forms with respect to two coprime generators.
//!
//! For coprime `a, b` every integer `c` has a unique form `c = p*a + q*b`
//! with `0 <= p < b`, and `c` belongs to the semigroup generated by `a` and
//! `b` exactly when `q >= 0`.

use num_integer::Integer;

use crate::eqp::{
    eventual_sign, ext_gcd, int_divmod, positive_threshold, sign_threshold, QuasiPolynomial,
    ResidueClass,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub p: i128,
    pub q: i128,
}

/// The canonical form of `c` with respect to `(a, b)`.
pub fn canonical_form_int(a: i128, b: i128, c: i128) -> Result<CanonicalForm> {
    if a <= 0 || b <= 0 {
        return Err(Error::NotEventuallyPositive { what: "canonical form generator" });
    }
    let e = a.extended_gcd(&b);
    if e.gcd != 1 {
        return Err(Error::NotCoprime {
            what: "canonical form generators",
            residue: 0,
            modulus: 1,
        });
    }
    // e.x is the inverse of a modulo b
    let p = (c.rem_euclid(b) * e.x.rem_euclid(b)).rem_euclid(b);
    let q = (c - p * a) / b;
    Ok(CanonicalForm { p, q })
}

/// Membership threshold of a translate `h + <f, g>`: a canonical form `(p, q)`
/// with `q < 0` lies in the translate exactly when `p >= r` and `q >= s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdPair {
    pub r: QuasiPolynomial,
    pub s: QuasiPolynomial,
    pub threshold: i64,
}

/// A coprime pair `(f, g)` with a Bézout identity `1 = p*f + q*g`, shared by
/// every translate processed against it.
#[derive(Clone, Debug)]
pub struct CoprimePair {
    f: QuasiPolynomial,
    g: QuasiPolynomial,
    p: QuasiPolynomial,
    q: QuasiPolynomial,
    threshold: i64,
}

impl CoprimePair {
    pub fn new(f: &QuasiPolynomial, g: &QuasiPolynomial) -> Result<Self> {
        let tf = positive_threshold(f).ok_or(Error::NotEventuallyPositive { what: "first generator" })?;
        let tg = positive_threshold(g).ok_or(Error::NotEventuallyPositive { what: "second generator" })?;
        let (d, p, q) = ext_gcd(f, g)?;
        let period = d.period();
        for (r, c) in d.components().iter().enumerate() {
            if c.as_constant().is_none_or(|v| !v.is_integer() || v.to_integer() != 1.into()) {
                return Err(Error::NotCoprime {
                    what: "pair",
                    residue: r as u64,
                    modulus: period,
                });
            }
        }
        Ok(CoprimePair {
            f: f.clone(),
            g: g.clone(),
            p,
            q,
            threshold: d.threshold().max(tf).max(tg),
        })
    }

    pub fn first(&self) -> &QuasiPolynomial {
        &self.f
    }

    pub fn second(&self) -> &QuasiPolynomial {
        &self.g
    }

    /// The symbolic canonical form `h = r*f + s*g` with `0 <= r < g`. For
    /// nonzero `h` the threshold also covers `h > 0` and `f + s > 0`.
    pub fn threshold_pair(&self, h: &QuasiPolynomial) -> Result<ThresholdPair> {
        if h.is_zero() {
            return Ok(ThresholdPair {
                r: QuasiPolynomial::zero(),
                s: QuasiPolynomial::zero(),
                threshold: self.threshold.max(h.threshold()),
            });
        }
        let th = positive_threshold(h).ok_or(Error::NotEventuallyPositive { what: "translate" })?;
        let (k, r) = int_divmod(&(h * &self.p), &self.g)?;
        let s = &(h * &self.q) + &(&k * &self.f);
        let fs = &self.f + &s;
        let mut threshold = self.threshold.max(th).max(r.threshold()).max(s.threshold());
        let period = fs.period();
        for (j, c) in fs.components().iter().enumerate() {
            if !eventual_sign(c).is_gt() {
                return Err(Error::Internal("translate coefficient below -f".into()));
            }
            threshold = threshold.max(sign_threshold(c, ResidueClass::new(period, j as u64), threshold));
        }
        Ok(ThresholdPair {
            r: r.at_least(threshold),
            s: s.at_least(threshold),
            threshold,
        })
    }
}

/// Threshold pair of `h` against the coprime pair `(f, g)`.
pub fn threshold_pair(
    f: &QuasiPolynomial,
    g: &QuasiPolynomial,
    h: &QuasiPolynomial,
) -> Result<ThresholdPair> {
    CoprimePair::new(f, g)?.threshold_pair(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{IntGenerators, Semigroup};

    #[test]
    fn integer_forms() {
        assert_eq!(canonical_form_int(5, 7, 9).unwrap(), CanonicalForm { p: 6, q: -3 });
        assert_eq!(canonical_form_int(5, 7, 0).unwrap(), CanonicalForm { p: 0, q: 0 });
        assert_eq!(canonical_form_int(5, 7, 10).unwrap(), CanonicalForm { p: 2, q: 0 });
        assert!(matches!(canonical_form_int(4, 6, 3), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn odd_case_pair() {
        // a = 2s+1, c = 2s+3, b = 2s+2 = (s+2)a - s c
        let f = QuasiPolynomial::from_i64s(&[1, 2]);
        let g = QuasiPolynomial::from_i64s(&[3, 2]);
        let h = QuasiPolynomial::from_i64s(&[2, 2]);
        let tp = threshold_pair(&f, &g, &h).unwrap();
        assert!(tp.r.same_components(&QuasiPolynomial::from_i64s(&[2, 1])));
        assert!(tp.s.same_components(&QuasiPolynomial::from_i64s(&[0, -1])));
    }

    #[test]
    fn zero_translate() {
        let f = QuasiPolynomial::from_i64s(&[1, 2]);
        let g = QuasiPolynomial::from_i64s(&[3, 2]);
        let tp = threshold_pair(&f, &g, &QuasiPolynomial::zero()).unwrap();
        assert!(tp.r.is_zero() && tp.s.is_zero());
    }

    #[test]
    fn non_coprime_rejected() {
        let f = QuasiPolynomial::from_i64s(&[0, 1]);
        let g = QuasiPolynomial::from_i64s(&[2, 1]);
        assert!(matches!(CoprimePair::new(&f, &g), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn odd_class_translate_matches_membership() {
        // f = t, g = t + 2 on odd t, translate h = t + 1
        let f = QuasiPolynomial::from_i64s(&[0, 1]);
        let g = QuasiPolynomial::from_i64s(&[2, 1]);
        let h = QuasiPolynomial::from_i64s(&[1, 1]);
        let odd = ResidueClass::new(2, 1);
        let (fl, gl, hl) = (f.restrict_class(odd), g.restrict_class(odd), h.restrict_class(odd));
        let tp = threshold_pair(&fl, &gl, &hl).unwrap();
        for s in tp.threshold.max(2)..=20 {
            let t = 2 * s + 1;
            let (ft, gt, ht) = (t as i128, t as i128 + 2, t as i128 + 1);
            let (r, sv) = (tp.r.eval(s).unwrap(), tp.s.eval(s).unwrap());
            let (r, sv): (i128, i128) = (r.try_into().unwrap(), sv.try_into().unwrap());
            let pair = Semigroup::new(IntGenerators::new(vec![t as u64, t as u64 + 2]).unwrap());
            for p in 0..gt {
                for q in -3 * ft..0 {
                    let c = p * ft + q * gt;
                    assert_eq!(pair.contains(c - ht), p >= r && q >= sv, "t={t} p={p} q={q}");
                }
            }
        }
    }
}
