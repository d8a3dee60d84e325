//! Frobenius numbers of numerical semigroups whose generators depend
//! polynomially on a parameter `t`.

pub mod canonical;
pub mod eqp;
pub mod error;
pub mod linear;
pub mod oracle;
pub mod rodseth;
pub mod solve;

pub use eqp::{Polynomial, QuasiPolynomial, ResidueClass};
pub use error::{Error, Result};
pub use solve::{solve, Method, Solution, SolveOptions};
