//! `(n, m)`-admissible partitions: the dominance interval below `m rho`,
//! the recursive construction, and the MacMahon Omega generating series.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::hankel::permutations_with_sign;
use crate::partitions::{decreasing_reorder, partitions_dominated_by, staircase, Partition};

fn check_nm(n: usize, m: u32) -> Result<()> {
    if n < 2 || m < 1 {
        return Err(Error::Domain(format!("need n >= 2 and m >= 1, got n = {n}, m = {m}")));
    }
    Ok(())
}

/// Partitions with at most `n` parts dominated by `m rho`.
pub fn admissible_partitions(n: usize, m: u32) -> Result<BTreeSet<Partition>> {
    check_nm(n, m)?;
    Ok(partitions_dominated_by(&staircase(n, m)?, n).into_iter().collect())
}

/// `A_{n,1} = {lambda <= rho}`, `A_{n,m} = {((lambda + sigma - 1))}`.
pub fn admissible_recursive(n: usize, m: u32) -> Result<BTreeSet<Partition>> {
    check_nm(n, m)?;
    let mut level: BTreeSet<Partition> = partitions_dominated_by(&staircase(n, 1)?, n).into_iter().collect();
    let perms = permutations_with_sign(n);
    for _ in 1..m {
        let mut next = BTreeSet::new();
        for lambda in &level {
            for (sigma, _) in &perms {
                let v: Vec<i64> = (0..n).map(|i| lambda.part(i) as i64 + sigma[i] as i64).collect();
                next.insert(decreasing_reorder(&v)?.padded(n)?);
            }
        }
        level = next;
    }
    Ok(level)
}

/// Laurent monomial in `z_1..z_{nz}` times a monomial in the markers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZMono {
    pub markers: Vec<u32>,
    pub z: Vec<i64>,
}

impl ZMono {
    pub fn new(markers: Vec<u32>, z: Vec<i64>) -> Self {
        ZMono { markers, z }
    }

    pub fn marker_degree(&self) -> u32 {
        self.markers.iter().sum()
    }
}

/// Truncated series in `z` (Laurent) and markers (non-negative).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMonomialSeries {
    pub marker_names: Vec<String>,
    pub nz: usize,
    pub bound: u32,
    terms: BTreeMap<ZMono, BigRational>,
}

impl ZMonomialSeries {
    pub fn terms(&self) -> &BTreeMap<ZMono, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// As a polynomial in the markers and `z1, z2, ...`.
    pub fn to_poly(&self) -> LaurentPoly {
        let znames: Vec<String> = (1..=self.nz).map(|i| format!("z{i}")).collect();
        let mut acc = LaurentPoly::zero();
        for (mono, c) in &self.terms {
            let mut powers: Vec<(&str, i32)> = Vec::new();
            for (name, &e) in self.marker_names.iter().zip(&mono.markers) {
                powers.push((name, e as i32));
            }
            for (name, &e) in znames.iter().zip(&mono.z) {
                powers.push((name, e as i32));
            }
            acc = acc + LaurentPoly::monomial(c.clone(), &powers);
        }
        acc
    }

    /// Sum of coefficients with the given marker exponents, at `z = 1`.
    pub fn coefficient_at_ones(&self, markers: &[u32]) -> BigRational {
        self.terms.iter().filter(|(m, _)| m.markers == markers).map(|(_, c)| c.clone()).sum()
    }
}

/// `Omega_z numerator * prod 1/(1 - factor)`, keeping every term whose
/// total marker degree is at most `bound`.
pub fn omega_truncated(
    marker_names: &[&str],
    nz: usize,
    factors: &[ZMono],
    numerator: &ZMono,
    bound: u32,
) -> Result<ZMonomialSeries> {
    let nm = marker_names.len();
    for f in factors.iter().chain(std::iter::once(numerator)) {
        if f.z.len() != nz || f.markers.len() != nm {
            return Err(Error::Domain("monomial shape does not match the series".into()));
        }
    }
    if factors.iter().any(|f| f.marker_degree() == 0) {
        return Err(Error::Divergent);
    }
    let mut terms: BTreeMap<ZMono, BigRational> = BTreeMap::new();
    if numerator.marker_degree() <= bound {
        terms.insert(numerator.clone(), BigRational::one());
    }
    for (idx, f) in factors.iter().enumerate() {
        let rest = &factors[idx + 1..];
        // largest increase of z_c per unit of marker degree among the rest
        let gain: Vec<Option<(i64, u32)>> = (0..nz)
            .map(|c| {
                rest.iter()
                    .filter(|g| g.z[c] > 0)
                    .map(|g| (g.z[c], g.marker_degree()))
                    .max_by(|a, b| (a.0 * b.1 as i64).cmp(&(b.0 * a.1 as i64)))
            })
            .collect();
        let reachable = |m: &ZMono| -> bool {
            let room = (bound - m.marker_degree()) as i64;
            (0..nz).all(|c| match gain[c] {
                _ if m.z[c] >= 0 => true,
                None => false,
                Some((e, d)) => m.z[c] * d as i64 + room * e >= 0,
            })
        };
        let step = f.marker_degree();
        let mut next: BTreeMap<ZMono, BigRational> = BTreeMap::new();
        for (m, c) in terms {
            let mut cur = m;
            loop {
                if reachable(&cur) {
                    *next.entry(cur.clone()).or_insert_with(BigRational::zero) += &c;
                }
                if cur.marker_degree() + step > bound {
                    break;
                }
                for (a, b) in cur.markers.iter_mut().zip(&f.markers) {
                    *a += b;
                }
                for (a, b) in cur.z.iter_mut().zip(&f.z) {
                    *a += b;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        terms = next;
    }
    terms.retain(|m, _| m.z.iter().all(|&e| e >= 0));
    Ok(ZMonomialSeries {
        marker_names: marker_names.iter().map(|s| s.to_string()).collect(),
        nz,
        bound,
        terms,
    })
}

/// Number of tau-steps from `m rho` to the bottom of its dominance class.
fn q_degree_bound(n: usize, m: u32) -> u32 {
    let rho = staircase(n, m).expect("n >= 2");
    let w = rho.weight() as u64;
    let mut prefix = 0u64;
    let mut total = 0u64;
    for i in 1..n {
        prefix += rho.part(i - 1) as u64;
        total += prefix - (i as u64 * w).div_ceil(n as u64);
    }
    total as u32
}

/// The q-factors `z_{i-1} z_{i+1} / z_i^2` with `z_0 = z_n = 1`.
fn tau_factors(n: usize) -> Vec<ZMono> {
    let nz = n - 1;
    (0..nz)
        .map(|i| {
            let mut z = vec![0i64; nz];
            z[i] = -2;
            if i > 0 {
                z[i - 1] = 1;
            }
            if i + 1 < nz {
                z[i + 1] = 1;
            }
            ZMono::new(vec![1, 0], z)
        })
        .collect()
}

/// The t^m slice of the admissible generating series, with `q` kept.
pub fn admissible_slice(n: usize, m: u32) -> Result<ZMonomialSeries> {
    if n < 2 {
        return Err(Error::Domain("need n >= 2".into()));
    }
    let numerator = ZMono::new(vec![0, m], vec![m as i64; n - 1]);
    let bound = m + if m == 0 { 0 } else { q_degree_bound(n, m) };
    omega_truncated(&["q", "t"], n - 1, &tau_factors(n), &numerator, bound)
}

/// Partitions read off the t^m slice; the weight is `m n(n-1)/2`.
pub fn admissible_by_omega(n: usize, m: u32) -> Result<BTreeSet<Partition>> {
    check_nm(n, m)?;
    let weight = m as i64 * (n * (n - 1) / 2) as i64;
    let mut out = BTreeSet::new();
    for mono in admissible_slice(n, m)?.terms().keys() {
        // weight = n v_n + sum_i i d_i
        let shifted: i64 = mono.z.iter().enumerate().map(|(i, d)| (i as i64 + 1) * d).sum();
        let last = (weight - shifted) / n as i64;
        let mut parts = vec![last; n];
        for j in (0..n - 1).rev() {
            parts[j] = parts[j + 1] + mono.z[j];
        }
        out.insert(decreasing_reorder(&parts)?);
    }
    Ok(out)
}

/// Coefficients of `t^0 .. t^bound` in `A_n(1, t; 1, .., 1)`.
pub fn admissible_series(n: usize, bound: u32) -> Result<Vec<u64>> {
    (0..=bound)
        .map(|m| {
            let slice = admissible_slice(n, m)?;
            let total: BigRational = slice.terms().values().cloned().sum();
            Ok(total.to_integer().try_into().expect("count fits"))
        })
        .collect()
}
