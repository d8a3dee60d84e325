use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::class::{fill_table, lcm_u64, ResidueClass};
use super::poly::{big, Polynomial};
use crate::error::{Error, Result};

/// Largest period a quasi-polynomial assembled from pieces may have.
pub const MAX_PERIOD: u64 = 1 << 20;

/// An eventual quasi-polynomial: `f(t) = components[t mod period](t)` for
/// every `t >= threshold`.
///
/// Components are polynomials in `t` itself (not in the index of `t`
/// within its class), each integer-valued on its own residue class.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuasiPolynomial {
    period: u64,
    components: Vec<Polynomial>,
    threshold: i64,
}

impl QuasiPolynomial {
    /// Checked constructor: one component per residue, each integer-valued
    /// on its class.
    pub fn new(period: u64, components: Vec<Polynomial>, threshold: i64) -> Result<Self> {
        if period == 0 || components.len() as u64 != period {
            return Err(Error::MalformedComponents);
        }
        for (residue, p) in components.iter().enumerate() {
            if !p.is_integer_valued_on(ResidueClass::new(period, residue as u64)) {
                return Err(Error::NotIntegerValued {
                    residue: residue as u64,
                    period,
                });
            }
        }
        Ok(Self::from_parts(period, components, threshold))
    }

    pub(crate) fn from_parts(period: u64, components: Vec<Polynomial>, threshold: i64) -> Self {
        debug_assert_eq!(components.len() as u64, period);
        QuasiPolynomial {
            period,
            components,
            threshold: threshold.max(0),
        }
    }

    /// A single integer-valued polynomial, valid everywhere.
    pub fn from_polynomial(p: Polynomial) -> Result<Self> {
        Self::new(1, vec![p], 0)
    }

    /// Polynomial with integer coefficients, lowest degree first.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_parts(1, vec![Polynomial::from_i64s(coeffs)], 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_parts(1, vec![Polynomial::from_int(c)], 0)
    }

    pub fn zero() -> Self {
        Self::constant(0)
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The parameter `t`.
    pub fn var() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, residue: u64) -> &Polynomial {
        &self.components[(residue % self.period) as usize]
    }

    pub fn component_for(&self, t: i64) -> &Polynomial {
        &self.components[t.rem_euclid(self.period as i64) as usize]
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    /// Same function with the threshold raised to at least `t0`.
    pub fn at_least(mut self, t0: i64) -> Self {
        self.threshold = self.threshold.max(t0);
        self
    }

    /// Maximum component degree (0 for the zero function).
    pub fn degree(&self) -> usize {
        self.components
            .iter()
            .map(Polynomial::degree_or_zero)
            .max()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Value at `t >= threshold`.
    pub fn eval(&self, t: i64) -> Result<BigInt> {
        if t < self.threshold {
            return Err(Error::BelowThreshold {
                t,
                threshold: self.threshold,
            });
        }
        Ok(self.eval_component(t))
    }

    /// Value of the component selected by `t mod period`, ignoring the
    /// threshold.
    pub fn eval_component(&self, t: i64) -> BigInt {
        self.component_for(t)
            .eval_integer(&BigInt::from(t))
            .expect("components are integer-valued on their classes")
    }

    /// Same function described with a period that is a multiple of the
    /// current one.
    pub fn lift(&self, period: u64) -> Self {
        debug_assert_eq!(period % self.period, 0);
        if period == self.period {
            return self.clone();
        }
        let components = (0..period).map(|r| self.component(r).clone()).collect();
        Self::from_parts(period, components, self.threshold)
    }

    /// Smallest modulus (a multiple of the period) at which [`Self::restrict`]
    /// produces integer coefficients on every class.
    pub fn integral_modulus(&self) -> u64 {
        let den = self
            .components
            .iter()
            .fold(BigInt::one(), |acc, p| acc.lcm(&p.denominator_lcm()));
        let den: u64 = den.try_into().expect("coefficient denominators fit in u64");
        lcm_u64(self.period, den)
    }

    /// The polynomial `p(s) = f(m*s + j)` on the class `t ≡ j (mod m)`.
    ///
    /// `m` must be a multiple of the period. When it is also a multiple of
    /// [`Self::integral_modulus`] the result has integer coefficients.
    pub fn restrict(&self, j: u64, m: u64) -> Result<Polynomial> {
        if m == 0 || !m.is_multiple_of(self.period) {
            return Err(Error::PeriodMismatch {
                modulus: m,
                period: self.period,
            });
        }
        if j >= m {
            return Err(Error::MalformedComponents);
        }
        Ok(self
            .component(j)
            .compose_affine(&big(m), &big(j)))
    }

    /// The restriction to `class`, as an eventual quasi-polynomial in the
    /// local variable `s` with `t = modulus*s + residue`.
    pub fn restrict_class(&self, class: ResidueClass) -> Self {
        let m = class.modulus;
        let local_period = lcm_u64(self.period, m) / m;
        let a = big(m);
        let b = big(class.residue);
        let components = (0..local_period)
            .map(|i| {
                self.component(class.residue + m * i)
                    .compose_affine(&a, &b)
            })
            .collect();
        Self::from_parts(
            local_period,
            components,
            class.local_threshold(self.threshold),
        )
    }

    /// Inverse of [`Self::restrict_class`] over a partition: each branch holds
    /// a function of the local variable of its class.
    pub fn from_branches(branches: &[(ResidueClass, QuasiPolynomial)]) -> Result<Self> {
        let mut pieces = Vec::new();
        let mut threshold = 0;
        for (class, local) in branches {
            let m = class.modulus;
            let inv = BigRational::new(BigInt::one(), BigInt::from(m));
            let shift = -BigRational::new(BigInt::from(class.residue), BigInt::from(m));
            threshold = threshold.max(class.global_threshold(local.threshold));
            for (i, p) in local.components.iter().enumerate() {
                let sub = class.compose(ResidueClass::new(local.period, i as u64));
                pieces.push((sub, p.compose_affine(&inv, &shift)));
            }
        }
        Self::from_pieces(&pieces, threshold)
    }

    /// Assembles components given on a partition of the residues into
    /// classes of possibly different moduli.
    pub fn from_pieces(pieces: &[(ResidueClass, Polynomial)], threshold: i64) -> Result<Self> {
        let mut period: u128 = 1;
        for (c, _) in pieces {
            let m = c.modulus as u128;
            period = period / period.gcd(&m) * m;
            if period > MAX_PERIOD as u128 {
                return Err(Error::BudgetExceeded {
                    what: "period",
                    size: period,
                    limit: MAX_PERIOD as u128,
                });
            }
        }
        let (period, components) = fill_table(pieces)
            .ok_or_else(|| Error::Internal("pieces do not partition the residues".into()))?;
        Ok(Self::from_parts(period, components, threshold))
    }

    /// Merges residue classes with identical components, giving the smallest
    /// period dividing the current one for which the description is still
    /// exact.
    pub fn normalize(&self) -> Self {
        let n = self.period;
        let mut divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
        divisors.sort_unstable();
        for d in divisors {
            let periodic = (0..n).all(|r| self.components[r as usize] == self.components[(r % d) as usize]);
            if periodic {
                return Self::from_parts(d, self.components[..d as usize].to_vec(), self.threshold);
            }
        }
        unreachable!("the full period always works")
    }

    pub fn map_components(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        Self::from_parts(
            self.period,
            self.components.iter().map(f).collect(),
            self.threshold,
        )
    }

    pub(crate) fn zip_with(
        &self,
        other: &QuasiPolynomial,
        f: impl Fn(&Polynomial, &Polynomial) -> Polynomial,
    ) -> Self {
        let period = lcm_u64(self.period, other.period);
        let components = (0..period)
            .map(|r| f(self.component(r), other.component(r)))
            .collect();
        Self::from_parts(period, components, self.threshold.max(other.threshold))
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = big(c);
        self.map_components(|p| p.scale(&c))
    }

    /// Componentwise exact quotient in `Q[t]`; fails when some component of
    /// `divisor` does not divide the matching component of `self`.
    pub fn exact_div(&self, divisor: &QuasiPolynomial) -> Result<Self> {
        let period = lcm_u64(self.period, divisor.period);
        let mut components = Vec::with_capacity(period as usize);
        for r in 0..period {
            let q = self
                .component(r)
                .exact_div(divisor.component(r))
                .ok_or(Error::InexactDivision("componentwise quotient"))?;
            components.push(q);
        }
        let out = Self::from_parts(period, components, self.threshold.max(divisor.threshold));
        for (r, p) in out.components.iter().enumerate() {
            if !p.is_integer_valued_on(ResidueClass::new(period, r as u64)) {
                return Err(Error::InexactDivision("quotient is not integer-valued"));
            }
        }
        Ok(out)
    }

    /// Same values on every residue class, ignoring thresholds.
    pub fn same_components(&self, other: &QuasiPolynomial) -> bool {
        let period = lcm_u64(self.period, other.period);
        (0..period).all(|r| self.component(r) == other.component(r))
    }

    /// Formats with one line per residue class.
    pub fn display_cases(&self) -> String {
        let mut out = String::new();
        for (r, p) in self.components.iter().enumerate() {
            if self.period == 1 {
                out.push_str(&format!("{p}\n"));
            } else {
                out.push_str(&format!("{p}    if t ≡ {r} (mod {})\n", self.period));
            }
        }
        out.push_str(&format!("valid for t >= {}\n", self.threshold));
        out
    }
}

impl fmt::Debug for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuasiPolynomial(period {}, t >= {}: [", self.period, self.threshold)?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_cases())
    }
}

impl Add for &QuasiPolynomial {
    type Output = QuasiPolynomial;

    fn add(self, rhs: &QuasiPolynomial) -> QuasiPolynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &QuasiPolynomial {
    type Output = QuasiPolynomial;

    fn sub(self, rhs: &QuasiPolynomial) -> QuasiPolynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &QuasiPolynomial {
    type Output = QuasiPolynomial;

    fn mul(self, rhs: &QuasiPolynomial) -> QuasiPolynomial {
        self.zip_with(rhs, |a, b| a * b)
    }
}

impl Neg for &QuasiPolynomial {
    type Output = QuasiPolynomial;

    fn neg(self) -> QuasiPolynomial {
        self.map_components(|p| -p)
    }
}

impl Zero for QuasiPolynomial {
    fn zero() -> Self {
        QuasiPolynomial::zero()
    }

    fn is_zero(&self) -> bool {
        QuasiPolynomial::is_zero(self)
    }
}

impl Add for QuasiPolynomial {
    type Output = QuasiPolynomial;

    fn add(self, rhs: QuasiPolynomial) -> QuasiPolynomial {
        &self + &rhs
    }
}
