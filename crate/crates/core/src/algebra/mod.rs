//! Exact arithmetic kernel: Laurent polynomials in named parameters and
//! canonically normalized rational functions over the rationals.

mod gcd;
mod parse;
mod poly;
mod ratfun;

pub use parse::parse_ratfun;
pub use poly::{Exponents, LaurentPoly, Vars};
pub use ratfun::{ratfun_eval_limit, ratfun_normalize, RatFun};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for the integer `k` as a rational.
pub fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Shorthand for the fraction `a/b`.
pub fn frac(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}
