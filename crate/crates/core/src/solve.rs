//! Chooses a solver for a generator list.

use std::fmt;

use crate::eqp::QuasiPolynomial;
use crate::error::{Error, Result};
use crate::linear::{self, DEFAULT_BUDGET};
use crate::rodseth;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Linear,
    Rodseth,
    Degenerate,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Linear => "linear",
            Method::Rodseth => "rodseth",
            Method::Degenerate => "degenerate",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Cap on the translate set and on division chain lengths.
    pub budget: u128,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub frobenius: QuasiPolynomial,
    pub method: Method,
}

/// Degree-one inputs of any length go to the linear solver, anything else
/// with at most three generators to Rødseth's algorithm.
pub fn solve(gens: &[QuasiPolynomial], opts: &SolveOptions) -> Result<Solution> {
    if gens.is_empty() {
        return Err(Error::NoGenerators);
    }
    if gens.iter().all(|g| g.degree() <= 1) {
        let (frobenius, degenerate) = linear::solve_linear(gens, opts.budget)?;
        let method = if degenerate { Method::Degenerate } else { Method::Linear };
        return Ok(Solution { frobenius, method });
    }
    if gens.len() > 3 {
        return Err(Error::TooManyGenerators(gens.len()));
    }
    let budget = usize::try_from(opts.budget).unwrap_or(usize::MAX);
    Ok(Solution {
        frobenius: rodseth::frobenius_upto3(gens, budget)?,
        method: Method::Rodseth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> QuasiPolynomial {
        QuasiPolynomial::from_i64s(c)
    }

    #[test]
    fn dispatch() {
        let opts = SolveOptions::default();
        assert_eq!(solve(&[qp(&[0, 1]), qp(&[1, 1])], &opts).unwrap().method, Method::Linear);
        assert_eq!(solve(&[qp(&[0, 2]), qp(&[0, 3])], &opts).unwrap().method, Method::Degenerate);
        assert_eq!(solve(&[qp(&[0, 0, 1]), qp(&[1, 1])], &opts).unwrap().method, Method::Rodseth);
        let four = [qp(&[0, 0, 1]), qp(&[1, 1]), qp(&[2, 1]), qp(&[3, 1])];
        assert_eq!(solve(&four, &opts), Err(Error::TooManyGenerators(4)));
        assert_eq!(solve(&[], &opts), Err(Error::NoGenerators));
    }

    #[test]
    fn single_generator() {
        let s = solve(&[qp(&[0, 1])], &SolveOptions::default()).unwrap();
        assert!(s.frobenius.same_components(&qp(&[0, -1])));
    }
}
