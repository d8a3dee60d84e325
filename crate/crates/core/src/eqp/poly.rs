//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::class::ResidueClass;

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn big(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// A polynomial with exact rational coefficients, lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and `coeffs().last()` is the leading
/// coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::constant(big(c))
    }

    /// The identity polynomial `t`.
    pub fn var() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    /// `alpha * t + beta`.
    pub fn linear(alpha: impl Into<BigInt>, beta: impl Into<BigInt>) -> Self {
        Self::new(vec![big(beta), big(alpha)])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as degree 0.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Constant value of a polynomial of degree at most 0.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval(&self, t: &BigInt) -> BigRational {
        self.eval_rational(&BigRational::from_integer(t.clone()))
    }

    /// Value at `t` when it is an integer.
    pub fn eval_integer(&self, t: &BigInt) -> Option<BigInt> {
        let v = self.eval(t);
        v.is_integer().then(|| v.to_integer())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `p(a*s + b)` as a polynomial in `s`.
    pub fn compose_affine(&self, a: &BigRational, b: &BigRational) -> Self {
        let inner = Polynomial::new(vec![b.clone(), a.clone()]);
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// `p(t + shift)`.
    pub fn shift(&self, shift: &BigInt) -> Self {
        self.compose_affine(&BigRational::one(), &BigRational::from_integer(shift.clone()))
    }

    /// Least common multiple of the coefficient denominators (1 for zero).
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients of `D * p` where `D` is [`Self::denominator_lcm`].
    pub fn integer_multiple(&self) -> (BigInt, Vec<BigInt>) {
        let d = self.denominator_lcm();
        let scaled = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(d.clone())).to_integer())
            .collect();
        (d, scaled)
    }

    /// True when `p(t)` is an integer for every integer `t` in `class`.
    ///
    /// Checks the forward differences of `s -> p(m*s + j)` at
    /// `s = 0..=deg`; the polynomial is integer-valued on the lattice iff
    /// all of them are integers.
    pub fn is_integer_valued_on(&self, class: ResidueClass) -> bool {
        let deg = self.degree_or_zero();
        let m = BigInt::from(class.modulus);
        let j = BigInt::from(class.residue);
        let mut row: Vec<BigRational> = (0..=deg)
            .map(|s| self.eval(&(&m * BigInt::from(s) + &j)))
            .collect();
        while !row.is_empty() {
            if !row[0].is_integer() {
                return false;
            }
            row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        true
    }

    /// Division with remainder in `Q[t]`.
    pub fn div_rem_rational(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dlead = divisor.lead().expect("division by the zero polynomial");
        let ddeg = divisor.degree_or_zero();
        let mut rem = self.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let c = rem.lead().unwrap() / dlead;
            let k = rdeg - ddeg;
            quot[k] = c.clone();
            rem = &rem - &(divisor * &Polynomial::monomial(c, k));
        }
        (Polynomial::new(quot), rem)
    }

    /// Exact quotient in `Q[t]`, if `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem_rational(divisor);
        r.is_zero().then_some(q)
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formats with a chosen variable name.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let numer = c.numer().abs();
            let denom = c.denom();
            let power = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, k),
            };
            if k == 0 {
                write!(f, "{numer}")?;
            } else if numer.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{numer}*{power}")?;
            }
            if !denom.is_one() {
                write!(f, "/{denom}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("t").fmt(f)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Polynomial::from_i64s(&[0, 0]).is_zero());
    }

    #[test]
    fn product_and_eval() {
        let t = Polynomial::var();
        let p = &t * &(&t + &Polynomial::from_int(2));
        assert_eq!(p, Polynomial::from_i64s(&[0, 2, 1]));
        assert_eq!(p.eval(&BigInt::from(3)), rat(15));
    }

    #[test]
    fn affine_composition() {
        // t(t+2)/2 at t = 2s is 2s^2 + 2s
        let p = Polynomial::new(vec![rat(0), rat(1), q(1, 2)]);
        let r = p.compose_affine(&rat(2), &rat(0));
        assert_eq!(r, Polynomial::from_i64s(&[0, 2, 2]));
    }

    #[test]
    fn integer_valuedness() {
        let half_square = Polynomial::new(vec![rat(0), rat(0), q(1, 2)]);
        assert!(half_square.is_integer_valued_on(ResidueClass::new(2, 0)));
        assert!(!half_square.is_integer_valued_on(ResidueClass::new(2, 1)));
        let tri = Polynomial::new(vec![rat(0), q(1, 2), q(1, 2)]);
        assert!(tri.is_integer_valued_on(ResidueClass::whole()));
    }

    #[test]
    fn rational_division() {
        let f = Polynomial::from_i64s(&[0, 0, 0, 1]);
        let g = Polynomial::from_i64s(&[1, 1]);
        let (qq, r) = f.div_rem_rational(&g);
        assert_eq!(qq, Polynomial::from_i64s(&[1, -1, 1]));
        assert_eq!(r, Polynomial::from_int(-1));
        assert_eq!(
            Polynomial::from_i64s(&[0, 2, 2]).exact_div(&Polynomial::from_i64s(&[1, 1])),
            Some(Polynomial::from_i64s(&[0, 2]))
        );
    }

    #[test]
    fn display_mirrors_case_formulas() {
        let p = Polynomial::new(vec![rat(-1), q(-1, 2), q(1, 2)]);
        assert_eq!(p.to_string(), "t^2/2 - t/2 - 1");
        assert_eq!(Polynomial::from_i64s(&[-2, 0, 1]).to_string(), "t^2 - 2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::new(vec![rat(0), q(3, 2)]).to_string(), "3*t/2");
    }
}
