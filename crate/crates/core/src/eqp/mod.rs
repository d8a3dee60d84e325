//! Eventual quasi-polynomials and the arithmetic the solvers need.

mod class;
mod division;
mod gcd;
mod order;
mod poly;
mod qp;
mod sign;

pub use class::ResidueClass;
pub use division::{int_divmod, poly_divmod};
pub use gcd::{ext_gcd, ext_gcd_int, gcd_all};
pub use order::{compare_on, eventual_compare, eventual_max, eventual_max_of, eventual_min, EventualOrder};
pub use poly::Polynomial;
pub use qp::QuasiPolynomial;
pub use sign::{eventual_sign, positive_threshold, root_bound, sign_threshold};

pub(crate) use class::lcm_u64;
pub(crate) use division::{divide_on, residue_modulus, DivMode};
pub(crate) use gcd::ext_gcd_on;
