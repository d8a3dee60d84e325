use thiserror::Error;

/// Errors raised by the quasi-polynomial algebra and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("t = {t} is below the validity threshold {threshold}")]
    BelowThreshold { t: i64, threshold: i64 },

    #[error("modulus {modulus} is not a multiple of the period {period}")]
    PeriodMismatch { modulus: u64, period: u64 },

    #[error("component {residue} (mod {period}) is not integer-valued on its residue class")]
    NotIntegerValued { residue: u64, period: u64 },

    #[error("a quasi-polynomial needs a positive period and one component per residue")]
    MalformedComponents,

    #[error("polynomial division needs a divisor of positive degree on every residue class")]
    ConstantDivisor,

    #[error("{what} is not eventually positive")]
    NotEventuallyPositive { what: &'static str },

    #[error("{what} are not coprime on residue class {residue} (mod {modulus})")]
    NotCoprime {
        what: &'static str,
        residue: u64,
        modulus: u64,
    },

    #[error("gcd of two arguments that are both identically zero")]
    ZeroGcd,

    #[error("{what} has degree {degree}, at most {max} is supported here")]
    DegreeTooHigh {
        what: &'static str,
        degree: usize,
        max: usize,
    },

    #[error("{0} generators given, at most 3 are supported for generators of degree above 1")]
    TooManyGenerators(usize),

    #[error("no generators given")]
    NoGenerators,

    #[error("{what} exceeds the budget ({size} > {limit})")]
    BudgetExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("remainder chain cannot terminate symbolically: {0}")]
    ChainDoesNotTerminate(String),

    #[error("inexact division: {0}")]
    InexactDivision(&'static str),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
