//! The polarized powers `Disc_k(X, p) = prod_{l=1..k} prod_{i != j} (p^{2l-1} x_i - x_j)`
//! and checks of their Macdonald and Schur expansions.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;

use crate::admissible::admissible_partitions;
use crate::algebra::{ratfun_eval_limit, LaurentPoly, RatFun};
use crate::error::{Error, Result};
use crate::macdonald::{r_product, Macdonald, Specialization};
use crate::partitions::{staircase, Partition};
use crate::symbasis::{collect_to_m, to_schur, Coords, MCoords, SchurCoords, XExponents, XPoly};

/// `Disc_k(X, p)` in the alphabet `x_1..x_n`, in three representations.
#[derive(Clone, Debug)]
pub struct QDiscriminant {
    pub n: usize,
    pub k: u32,
    pub poly: XPoly,
    pub m: MCoords,
    pub schur: SchurCoords,
}

fn p_power(e: i32) -> RatFun {
    RatFun::from_poly(LaurentPoly::monomial(BigRational::one(), &[("p", e)]))
}

fn check_nk(n: usize, k: u32) -> Result<()> {
    if n < 2 || k < 1 {
        return Err(Error::Domain(format!("need n >= 2 and k >= 1, got n = {n}, k = {k}")));
    }
    Ok(())
}

/// `(-p)^e`.
fn minus_p_power(e: u64) -> RatFun {
    let v = p_power(e as i32);
    if e.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Expanded product in `x`, without the basis conversions.
pub fn qdisc_poly(n: usize, k: u32) -> Result<XPoly> {
    check_nk(n, k)?;
    let mut out = XPoly::one(n);
    for l in 1..=k {
        let a = p_power(2 * l as i32 - 1);
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    let f = &XPoly::var(n, i, a.clone()) - &XPoly::var(n, j, RatFun::one());
                    out = &out * &f;
                }
            }
        }
    }
    Ok(out)
}

pub fn qdisc_build(n: usize, k: u32) -> Result<QDiscriminant> {
    let poly = qdisc_poly(n, k)?;
    let m = collect_to_m(&poly)?;
    let schur = to_schur(&m)?;
    Ok(QDiscriminant { n, k, poly, m, schur })
}

impl QDiscriminant {
    /// Monomial coordinates at `p = 1`, i.e. of the k-th power of the discriminant.
    pub fn m_at_p_equals_one(&self) -> Result<Coords<BigRational>> {
        self.m.try_map(|c| ratfun_eval_limit(c, &[("p", BigRational::one())]))
    }

    /// Coefficient of `x_1^{2k(n-1)} x_2^{2k(n-2)} ... x_n^0`.
    pub fn leading_coefficient(&self) -> RatFun {
        let rho = staircase(self.n, 2 * self.k).expect("n >= 1");
        let e: XExponents = rho.parts().iter().copied().collect();
        self.poly.coeff(&e)
    }
}

/// `beta = (-p)^{k^2 n(n-1)/2}`.
pub fn beta(n: usize, k: u32) -> RatFun {
    minus_p_power(k as u64 * k as u64 * (n * (n - 1) / 2) as u64)
}

/// Outcome of comparing `Disc_k` with `beta * P_{2k rho}(p^-2, p^{2k-1})`.
#[derive(Clone, Debug)]
pub struct StaircaseReport {
    pub n: usize,
    pub k: u32,
    pub holds: bool,
    /// Partitions whose coefficients disagree.
    pub mismatches: Vec<Partition>,
    pub lhs: MCoords,
    pub rhs: MCoords,
}

pub fn verify_staircase_theorem(n: usize, k: u32) -> Result<StaircaseReport> {
    verify_staircase_theorem_with(Macdonald::global(), n, k)
}

pub fn verify_staircase_theorem_with(engine: &Macdonald, n: usize, k: u32) -> Result<StaircaseReport> {
    let disc = qdisc_build(n, k)?;
    let rho = staircase(n, 2 * k)?;
    let p = engine.solve(&rho, n, &Specialization::Staircase { k })?;
    let rhs = p.scale(&beta(n, k));
    let keys: BTreeSet<Partition> = disc.m.support().union(&rhs.support()).cloned().collect();
    let mismatches: Vec<Partition> = keys.into_iter().rev().filter(|l| disc.m.get(l) != rhs.get(l)).collect();
    Ok(StaircaseReport { n, k, holds: mismatches.is_empty(), mismatches, lhs: disc.m, rhs })
}

/// Partitions with a nonzero coefficient in the Schur expansion.
pub fn qdisc_schur_support(n: usize, k: u32) -> Result<BTreeSet<Partition>> {
    Ok(qdisc_build(n, k)?.schur.support())
}

/// Schur support against the `(n, 2k)`-admissible partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportReport {
    pub holds: bool,
    pub support: BTreeSet<Partition>,
    pub admissible: BTreeSet<Partition>,
}

pub fn verify_admissible_support(n: usize, k: u32) -> Result<SupportReport> {
    let support = qdisc_schur_support(n, k)?;
    let admissible = admissible_partitions(n, 2 * k)?;
    Ok(SupportReport { holds: support == admissible, support, admissible })
}

/// `Disc_k(q x_1, x_2, ..) R(p^{2k-1} x_1; X - x_1) = Disc_k(X) R(p^{-2k-1} x_1; X - x_1)`
/// with `q = p^-2`.
pub fn shift_identity_holds(n: usize, k: u32) -> Result<bool> {
    let disc = qdisc_poly(n, k)?;
    let others: Vec<XPoly> = (2..=n).map(|j| XPoly::var(n, j, RatFun::one())).collect();
    let lhs_r = r_product(&XPoly::var(n, 1, p_power(2 * k as i32 - 1)), &others);
    let rhs_r = r_product(&XPoly::var(n, 1, p_power(-(2 * k as i32) - 1)), &others);
    let lhs = &disc.scale_variable(1, &p_power(-2)) * &lhs_r;
    let rhs = &disc * &rhs_r;
    Ok((&lhs - &rhs).is_zero())
}
