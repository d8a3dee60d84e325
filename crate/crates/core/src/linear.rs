//! Frobenius numbers of generators of degree at most one.
//!
//! On each residue class of `t` the generators become integer linear
//! functions `alpha*s + beta` of the local variable. After ordering them by
//! slope ratio, either all are proportional (the degenerate case, a direct
//! formula), or the semigroup splits as a finite union of translates of the
//! two-generator semigroup spanned by the first and last generator. The
//! Frobenius number is then the largest corner of the staircase left
//! uncovered by those translates.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use crate::canonical::CoprimePair;
use crate::eqp::{
    compare_on, eventual_max_of, ext_gcd_on, positive_threshold, residue_modulus, Polynomial,
    QuasiPolynomial, ResidueClass,
};
use crate::error::{Error, Result};
use crate::oracle::{frobenius_int, IntGenerators};

/// Default cap on the number of raw translates.
pub const DEFAULT_BUDGET: u128 = 200_000;

/// `alpha*s + beta` with `alpha >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearGenerator {
    pub alpha: BigInt,
    pub beta: BigInt,
}

impl LinearGenerator {
    pub fn new(alpha: impl Into<BigInt>, beta: impl Into<BigInt>) -> Self {
        LinearGenerator {
            alpha: alpha.into(),
            beta: beta.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::linear(self.alpha.clone(), self.beta.clone())
    }

    /// Reads an integer polynomial of degree at most one.
    pub fn from_polynomial(p: &Polynomial) -> Option<Self> {
        if p.degree_or_zero() > 1 || !p.has_integer_coeffs() {
            return None;
        }
        Some(Self::new(p.coeff(1).to_integer(), p.coeff(0).to_integer()))
    }

    fn add(&self, other: &Self) -> Self {
        Self::new(&self.alpha + &other.alpha, &self.beta + &other.beta)
    }

    /// `beta_i * alpha_j` against `beta_j * alpha_i`.
    fn ratio_cmp(&self, other: &Self) -> Ordering {
        (&self.beta * &other.alpha).cmp(&(&other.beta * &self.alpha))
    }
}

/// Sorts by the ratio `beta/alpha`, constants last; stable on ties.
pub fn order_generators(gens: &[LinearGenerator]) -> Vec<LinearGenerator> {
    let mut out = gens.to_vec();
    out.sort_by(|a, b| a.ratio_cmp(b));
    out
}

/// Generators `gamma_i * (alpha0*s + beta0)` sharing one primitive factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degenerate {
    pub alpha0: BigInt,
    pub beta0: BigInt,
    pub gammas: Vec<BigInt>,
}

pub fn detect_degenerate(gens: &[LinearGenerator]) -> Option<Degenerate> {
    let first = gens.first()?;
    if gens.iter().any(|g| g.ratio_cmp(first) != Ordering::Equal) {
        return None;
    }
    let gammas: Vec<BigInt> = gens.iter().map(|g| g.alpha.gcd(&g.beta)).collect();
    Some(Degenerate {
        alpha0: &first.alpha / &gammas[0],
        beta0: &first.beta / &gammas[0],
        gammas,
    })
}

pub fn solve_degenerate(deg: &Degenerate) -> Result<QuasiPolynomial> {
    let gammas = deg
        .gammas
        .iter()
        .map(|g| g.to_u64().filter(|&g| g > 0))
        .collect::<Option<Vec<u64>>>()
        .ok_or(Error::BudgetExceeded {
            what: "degenerate multiplier",
            size: u128::MAX,
            limit: u64::MAX as u128,
        })?;
    let f = frobenius_int(&IntGenerators::new(gammas).expect("multipliers are positive"));
    let base = Polynomial::linear(deg.alpha0.clone(), deg.beta0.clone());
    Ok(QuasiPolynomial::from_parts(1, vec![base.scale(&BigRational::from_integer(f.into()))], 0))
}

/// Coefficients `(p, q, r)` with `p*first + q*last = r*middle` identically,
/// `r = beta_n*alpha_1 - beta_1*alpha_n`.
pub fn exchange_coefficients(
    first: &LinearGenerator,
    middle: &LinearGenerator,
    last: &LinearGenerator,
) -> (BigInt, BigInt, BigInt) {
    let p = &last.beta * &middle.alpha - &middle.beta * &last.alpha;
    let q = &middle.beta * &first.alpha - &first.beta * &middle.alpha;
    let r = &last.beta * &first.alpha - &first.beta * &last.alpha;
    (p, q, r)
}

/// The translates `sum lambda_i a_i` over the middle generators with
/// `0 <= lambda_i < R_i`, where `R_i*a_i` is the least multiple of `a_i`
/// that the exchange identity writes in terms of the first and last
/// generator. Includes the zero translate; duplicates are merged.
pub fn build_h_set(gens: &[LinearGenerator], budget: u128) -> Result<Vec<LinearGenerator>> {
    let n = gens.len();
    if n <= 2 {
        return Ok(vec![LinearGenerator::zero()]);
    }
    let (first, last) = (&gens[0], &gens[n - 1]);
    let mut bounds = Vec::with_capacity(n - 2);
    let mut raw: u128 = 1;
    for middle in &gens[1..n - 1] {
        let (p, q, r) = exchange_coefficients(first, middle, last);
        if !r.is_positive() {
            return Err(Error::Internal("translate set of a degenerate generator list".into()));
        }
        let bound = &r / p.gcd(&q).gcd(&r);
        let b = bound.to_u128().unwrap_or(u128::MAX);
        raw = raw.saturating_mul(b);
        if raw > budget {
            return Err(Error::BudgetExceeded {
                what: "translate set",
                size: raw,
                limit: budget,
            });
        }
        bounds.push(b);
    }
    let mut set = BTreeSet::from([LinearGenerator::zero()]);
    for (middle, &bound) in gens[1..n - 1].iter().zip(&bounds) {
        let mut next = BTreeSet::new();
        for h in &set {
            let mut x = h.clone();
            for _ in 0..bound {
                next.insert(x.clone());
                x = x.add(middle);
            }
        }
        set = next;
    }
    Ok(set.into_iter().collect())
}

/// Largest integer outside the union of `h + <f, g>` over `h` in `hs`, for a
/// coprime pair `(f, g)`. `hs` must contain the zero function and otherwise
/// hold eventually positive functions.
pub fn solve_staircase(
    f: &QuasiPolynomial,
    g: &QuasiPolynomial,
    hs: &[QuasiPolynomial],
) -> Result<QuasiPolynomial> {
    let pair = CoprimePair::new(f, g)?;
    let mut pairs = vec![pair.threshold_pair(&QuasiPolynomial::zero())?];
    for h in hs.iter().filter(|h| !h.is_zero()) {
        pairs.push(pair.threshold_pair(h)?);
    }
    let period = pairs
        .iter()
        .fold(f.period().lcm(&g.period()), |acc, tp| acc.lcm(&tp.r.period()).lcm(&tp.s.period()));
    let floor = pairs.iter().map(|tp| tp.threshold).max().unwrap_or(0);
    let mut threshold = floor;
    let mut pieces = Vec::with_capacity(period as usize);
    for j in 0..period {
        let class = ResidueClass::new(period, j);
        let mut cands: Vec<(&Polynomial, &Polynomial)> = pairs
            .iter()
            .map(|tp| (tp.r.component(j), tp.s.component(j)))
            .collect();
        cands.sort_by(|a, b| {
            compare_on(a.0, b.0, class, floor)
                .0
                .then_with(|| compare_on(a.1, b.1, class, floor).0)
        });
        // keep the pairs not dominated by an earlier one
        let mut kept: Vec<(&Polynomial, &Polynomial)> = vec![cands[0]];
        for &(r, s) in &cands[1..] {
            let &(kr, ks) = kept.last().unwrap();
            let (rel_r, tr) = compare_on(kr, r, class, floor);
            let (rel_s, ts) = compare_on(s, ks, class, floor);
            threshold = threshold.max(tr).max(ts);
            debug_assert!(rel_r.is_le());
            if rel_s.is_lt() {
                kept.push((r, s));
            }
        }
        let (fj, gj) = (f.component(j), g.component(j));
        let one = Polynomial::one();
        let mut best: Option<Polynomial> = None;
        for (i, &(_, s)) in kept.iter().enumerate() {
            let r_next = kept.get(i + 1).map_or(gj, |k| k.0);
            let corner = &(&(r_next - &one) * fj) + &(&(s - &one) * gj);
            best = Some(match best {
                None => corner,
                Some(b) => {
                    let (rel, t0) = compare_on(&corner, &b, class, floor);
                    threshold = threshold.max(t0);
                    if rel.is_gt() {
                        corner
                    } else {
                        b
                    }
                }
            });
        }
        pieces.push((class, best.unwrap()));
    }
    QuasiPolynomial::from_pieces(&pieces, threshold)
}

fn to_qp(p: &Polynomial, threshold: i64) -> QuasiPolynomial {
    QuasiPolynomial::from_parts(1, vec![p.clone()], threshold)
}

fn substitute(p: &Polynomial, class: ResidueClass) -> Polynomial {
    p.compose_affine(
        &BigRational::from_integer(class.modulus.into()),
        &BigRational::from_integer(class.residue.into()),
    )
}

fn exact_scale_down(p: &Polynomial, d: &BigInt) -> Polynomial {
    p.scale(&BigRational::new(BigInt::one(), d.clone()))
}

/// Splits by the gcd of the first and last generator and assembles the
/// staircase on each class.
fn solve_decomposition(
    f: &Polynomial,
    g: &Polynomial,
    hs: &[Polynomial],
    floor: i64,
) -> Result<QuasiPolynomial> {
    let mut branches = Vec::new();
    for piece in ext_gcd_on(f, g, ResidueClass::whole(), floor)? {
        let d = piece
            .d
            .as_constant()
            .filter(|d| d.is_integer() && d.is_positive())
            .ok_or_else(|| Error::Internal("first and last generator share a linear factor".into()))?
            .to_integer();
        let class = piece.class;
        let local_floor = class.local_threshold(floor.max(piece.threshold));
        let fl = substitute(f, class);
        let gl = substitute(g, class);
        let hl: Vec<Polynomial> = hs.iter().map(|h| substitute(h, class)).collect();
        let value = if d.is_one() {
            let hq: Vec<_> = hl.iter().map(|h| to_qp(h, local_floor)).collect();
            solve_staircase(&to_qp(&fl, local_floor), &to_qp(&gl, local_floor), &hq)?
        } else {
            solve_by_residue(&fl, &gl, &hl, &d, local_floor)?
        };
        branches.push((class, value));
    }
    QuasiPolynomial::from_branches(&branches)
}

/// The case `gcd(f, g) = d > 1`: translates are grouped by their residue
/// modulo `d`, and each group is solved against `(f/d, g/d)`.
fn solve_by_residue(
    f: &Polynomial,
    g: &Polynomial,
    hs: &[Polynomial],
    d: &BigInt,
    floor: i64,
) -> Result<QuasiPolynomial> {
    let whole = ResidueClass::whole();
    let mut modulus = 1u64;
    for h in hs {
        modulus = modulus.lcm(&residue_modulus(h, whole, d)?);
    }
    let mut branches = Vec::new();
    for k in 0..modulus {
        let class = ResidueClass::new(modulus, k);
        let local_floor = class.local_threshold(floor);
        let fl = exact_scale_down(&substitute(f, class), d);
        let gl = exact_scale_down(&substitute(g, class), d);
        let mut groups: BTreeMap<BigInt, Vec<Polynomial>> = BTreeMap::new();
        for h in hs {
            let rho = h
                .eval_integer(&BigInt::from(k))
                .ok_or_else(|| Error::Internal("translate is not integer-valued".into()))?
                .mod_floor(d);
            let shifted = &substitute(h, class) - &Polynomial::from_int(rho.clone());
            groups.entry(rho).or_default().push(exact_scale_down(&shifted, d));
        }
        let mut threshold = local_floor;
        let mut candidates = Vec::with_capacity(groups.len());
        for (rho, group) in groups {
            let mut h0 = group[0].clone();
            for h in &group[1..] {
                let (rel, t0) = compare_on(h, &h0, whole, local_floor);
                threshold = threshold.max(t0);
                if rel.is_lt() {
                    h0 = h.clone();
                }
            }
            let translates: BTreeSet<Vec<BigRational>> =
                group.iter().map(|h| (h - &h0).coeffs().to_vec()).collect();
            let translates: Vec<_> = translates
                .into_iter()
                .map(|c| to_qp(&Polynomial::new(c), threshold))
                .collect();
            let inner = solve_staircase(&to_qp(&fl, threshold), &to_qp(&gl, threshold), &translates)?;
            let lifted = &(&inner + &to_qp(&h0, threshold)).scale(d.clone())
                + &QuasiPolynomial::constant(rho);
            candidates.push(lifted);
        }
        let best = eventual_max_of(&candidates)
            .ok_or_else(|| Error::Internal("no translates".into()))?
            .at_least(threshold);
        branches.push((class, best));
    }
    QuasiPolynomial::from_branches(&branches)
}

/// Result of the degree-one pipeline on one residue class.
struct ClassOutcome {
    value: QuasiPolynomial,
    degenerate: bool,
}

fn solve_class(gens: &[LinearGenerator], floor: i64, budget: u128) -> Result<ClassOutcome> {
    let ordered = order_generators(gens);
    if let Some(deg) = detect_degenerate(&ordered) {
        return Ok(ClassOutcome {
            value: solve_degenerate(&deg)?.at_least(floor),
            degenerate: true,
        });
    }
    let hs: Vec<Polynomial> = build_h_set(&ordered, budget)?
        .iter()
        .map(LinearGenerator::to_polynomial)
        .collect();
    let f = ordered[0].to_polynomial();
    let g = ordered[ordered.len() - 1].to_polynomial();
    Ok(ClassOutcome {
        value: solve_decomposition(&f, &g, &hs, floor)?,
        degenerate: false,
    })
}

/// Frobenius number together with whether every class was degenerate.
pub(crate) fn solve_linear(
    gens: &[QuasiPolynomial],
    budget: u128,
) -> Result<(QuasiPolynomial, bool)> {
    if gens.is_empty() {
        return Err(Error::NoGenerators);
    }
    let mut floor = 0;
    let mut modulus = 1u64;
    for a in gens {
        if a.degree() > 1 {
            return Err(Error::DegreeTooHigh {
                what: "generator",
                degree: a.degree(),
                max: 1,
            });
        }
        floor = floor.max(positive_threshold(a).ok_or(Error::NotEventuallyPositive { what: "generator" })?);
        modulus = modulus.lcm(&a.integral_modulus());
    }
    let outcomes: Vec<(ResidueClass, ClassOutcome)> = (0..modulus)
        .into_par_iter()
        .map(|j| {
            let class = ResidueClass::new(modulus, j);
            let local: Vec<LinearGenerator> = gens
                .iter()
                .map(|a| {
                    let p = a.restrict(j, modulus)?;
                    LinearGenerator::from_polynomial(&p)
                        .ok_or_else(|| Error::Internal("restricted generator is not integral".into()))
                })
                .collect::<Result<_>>()?;
            Ok((class, solve_class(&local, class.local_threshold(floor), budget)?))
        })
        .collect::<Result<_>>()?;
    let degenerate = outcomes.iter().all(|(_, o)| o.degenerate);
    let branches: Vec<_> = outcomes.into_iter().map(|(c, o)| (c, o.value)).collect();
    let value = QuasiPolynomial::from_branches(&branches)?.at_least(floor);
    Ok((value.normalize(), degenerate))
}

/// Frobenius number of eventually positive generators of degree at most one.
pub fn frobenius_linear(gens: &[QuasiPolynomial], budget: u128) -> Result<QuasiPolynomial> {
    solve_linear(gens, budget).map(|(f, _)| f)
}
