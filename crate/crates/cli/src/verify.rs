//! Sweeps comparing a symbolic answer with the integer oracle.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use parafrob_core::oracle::{frobenius_int, IntGenerators};
use parafrob_core::QuasiPolynomial;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub t: i64,
    pub symbolic: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub t_from: i64,
    pub t_to: i64,
    /// Values compared against the oracle.
    pub tested: usize,
    /// Values below the threshold or with a generator that is not positive.
    pub skipped: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Integer generators at `t`, if all of them are positive.
pub fn generators_at(gens: &[QuasiPolynomial], t: i64) -> Option<IntGenerators> {
    let values: Option<Vec<u64>> = gens
        .iter()
        .map(|g| g.eval_component(t).to_u64().filter(|&v| v > 0))
        .collect();
    IntGenerators::new(values?)
}

/// Compares `f(t)` with the oracle for every `t` in `t_from..=t_to` at or
/// above the threshold of `f` where all generators are positive.
pub fn verify(gens: &[QuasiPolynomial], f: &QuasiPolynomial, t_from: i64, t_to: i64) -> Verification {
    let outcomes: Vec<Option<Option<Mismatch>>> = (t_from..=t_to)
        .into_par_iter()
        .map(|t| {
            let g = generators_at(gens, t)?;
            let symbolic = f.eval(t).ok()?;
            let oracle = BigInt::from(frobenius_int(&g));
            Some((symbolic != oracle).then(|| Mismatch {
                t,
                symbolic: symbolic.to_string(),
                oracle: oracle.to_string(),
            }))
        })
        .collect();
    let tested = outcomes.iter().filter(|o| o.is_some()).count();
    Verification {
        t_from,
        t_to,
        tested,
        skipped: outcomes.len() - tested,
        mismatches: outcomes.into_iter().flatten().flatten().collect(),
    }
}
