//! Jack polynomials at rational `alpha` as limits `t -> 1` of
//! `P_lambda(X; t^alpha, t)`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{ratfun_eval_limit, RatFun};
use crate::error::{Error, Result};
use crate::macdonald::{Macdonald, Specialization};
use crate::partitions::{staircase, Partition};
use crate::qdisc::qdisc_build;
use crate::symbasis::{Coords, MCoords};

/// `P^{(alpha)}_lambda` in monomial coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackP {
    pub lambda: Partition,
    pub n: usize,
    pub alpha: BigRational,
    pub coords: Coords<BigRational>,
}

/// Parses `u/v` or an integer.
pub fn parse_alpha(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let s = s.trim();
    let (u, v) = match s.split_once('/') {
        Some((u, v)) => (u.trim(), v.trim()),
        None => (s, "1"),
    };
    let u: BigInt = u.parse().map_err(|_| bad())?;
    let v: BigInt = v.parse().map_err(|_| bad())?;
    if v.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(u, v))
}

fn exponents_of(alpha: &BigRational) -> Result<(i64, i64)> {
    if alpha.is_zero() {
        return Err(Error::Domain("alpha must be nonzero".into()));
    }
    let u = alpha.numer().to_i64().filter(|u| u.abs() < 1 << 20);
    let v = alpha.denom().to_i64().filter(|v| *v < 1 << 20);
    match (u, v) {
        (Some(u), Some(v)) => Ok((u, v)),
        _ => Err(Error::Domain(format!("alpha = {alpha} is too large"))),
    }
}

fn limit_at_one(coords: &MCoords) -> Result<Coords<BigRational>> {
    let mut out = Coords::new(coords.n());
    for (mu, c) in coords.iter() {
        let v = ratfun_eval_limit(c, &[("s", BigRational::one())]).map_err(|e| match e {
            Error::Pole => Error::PoleAt(mu.clone()),
            e => e,
        })?;
        out.insert(mu, v)?;
    }
    Ok(out)
}

pub fn jack_p(lambda: &Partition, n: usize, alpha: &BigRational) -> Result<JackP> {
    jack_p_with(Macdonald::global(), lambda, n, alpha)
}

/// Solves with `q = s^u, t = s^v` and evaluates at `s = 1`. If that
/// specialization makes the eigenvalues collide, solves generically first.
pub fn jack_p_with(engine: &Macdonald, lambda: &Partition, n: usize, alpha: &BigRational) -> Result<JackP> {
    let (u, v) = exponents_of(alpha)?;
    let spec = Specialization::JackLimit { u, v };
    let coords = match engine.solve(lambda, n, &spec) {
        Ok(c) => (*c).clone(),
        Err(Error::DegenerateEigenvalue(_)) => {
            let generic = engine.solve(lambda, n, &Specialization::Generic)?;
            let mut out = MCoords::new(n);
            for (mu, c) in generic.iter() {
                let v = spec.apply(c).map_err(|e| match e {
                    Error::ZeroDenominator => Error::PoleAt(mu.clone()),
                    e => e,
                })?;
                out.insert(mu, v)?;
            }
            out
        }
        Err(e) => return Err(e),
    };
    Ok(JackP { lambda: lambda.padded(n)?, n, alpha: alpha.clone(), coords: limit_at_one(&coords)? })
}

/// `prod_cells (a alpha + l + 1) / ((a + 1) alpha + l)`.
pub fn jack_b(lambda: &Partition, alpha: &BigRational) -> Result<BigRational> {
    let conj = lambda.conjugate();
    let mut acc = BigRational::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let a = BigRational::from_integer(BigInt::from(row as usize - j - 1));
            let l = BigRational::from_integer(BigInt::from(conj.part(j) as usize - i - 1));
            let den = (&a + BigRational::one()) * alpha + &l;
            if den.is_zero() {
                return Err(Error::Pole);
            }
            acc = acc * (&a * alpha + l + BigRational::one()) / den;
        }
    }
    Ok(acc)
}

/// `Q^{(alpha)}_lambda = b^{(alpha)}_lambda P^{(alpha)}_lambda`.
pub fn jack_q(lambda: &Partition, n: usize, alpha: &BigRational) -> Result<Coords<BigRational>> {
    let b = jack_b(lambda, alpha)?;
    Ok(jack_p(lambda, n, alpha)?.coords.map(|c| c * &b))
}

/// `alpha_k = -2 / (2k - 1)`.
pub fn alpha_k(k: u32) -> BigRational {
    BigRational::new(BigInt::from(-2), BigInt::from(2 * k as i64 - 1))
}

/// `Disc_k(X, 1)` against `(-1)^{kn(n-1)/2} P^{(alpha_k)}_{2k rho}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerDiscReport {
    pub holds: bool,
    pub mismatches: Vec<Partition>,
    pub disc: Coords<BigRational>,
    pub jack: Coords<BigRational>,
}

pub fn verify_power_discriminant(n: usize, k: u32) -> Result<PowerDiscReport> {
    let disc = qdisc_build(n, k)?.m_at_p_equals_one()?;
    let rho = staircase(n, 2 * k)?;
    let sign = if (k as usize * n * (n - 1) / 2).is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    let jack = jack_p(&rho, n, &alpha_k(k))?.coords.map(|c| c * &sign);
    let keys: BTreeSet<Partition> = disc.support().union(&jack.support()).cloned().collect();
    let mismatches: Vec<Partition> = keys.into_iter().rev().filter(|l| disc.get(l) != jack.get(l)).collect();
    Ok(PowerDiscReport { holds: mismatches.is_empty(), mismatches, disc, jack })
}

/// Limit of the generic `b_lambda(s^u, s^v)` at `s = 1`; agrees with [`jack_b`].
pub fn jack_b_by_limit(lambda: &Partition, alpha: &BigRational) -> Result<BigRational> {
    let (u, v) = exponents_of(alpha)?;
    let b: RatFun = Specialization::JackLimit { u, v }
        .apply(&crate::macdonald::b_coefficient(lambda))
        .map_err(|e| if e == Error::ZeroDenominator { Error::Pole } else { e })?;
    ratfun_eval_limit(&b, &[("s", BigRational::one())])
}
