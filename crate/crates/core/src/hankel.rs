//! Cayley hyperdeterminants by brute force, and the coefficients of Hankel
//! hyperdeterminants read off the monomial expansion of powers of the
//! discriminant.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::partitions::{distinct_permutations_count, staircase, Partition};
use crate::qdisc::qdisc_build;

/// Default cap on the number of permutation tuples, `n!^m` for n = 3, m = 6.
pub const DEFAULT_BUDGET: u128 = 46_656;

/// All permutations of `0..n` in lexicographic order with their signs.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i8)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        out.push((perm.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
        let mut i = n;
        while i > 1 && perm[i - 2] >= perm[i - 1] {
            i -= 1;
        }
        if i <= 1 {
            return out;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i - 2] {
            j -= 1;
        }
        perm.swap(i - 2, j);
        perm[i - 1..].reverse();
    }
}

/// Scalars a tensor may hold.
pub trait TensorScalar: Clone + Zero + One + Add<Output = Self> + Mul<Output = Self> + Neg<Output = Self> + Send + Sync {
    fn scale(&self, r: &BigRational) -> Self;
}

impl TensorScalar for BigRational {
    fn scale(&self, r: &BigRational) -> Self {
        self * r
    }
}

/// Dense order-`m` tensor on an `n`-dimensional space.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<T> {
    order: usize,
    dim: usize,
    entries: Vec<T>,
}

impl<T: TensorScalar> Tensor<T> {
    /// Fills every entry from its index tuple.
    pub fn from_fn(order: usize, dim: usize, f: impl Fn(&[usize]) -> T) -> Self {
        let total = dim.pow(order as u32);
        let mut idx = vec![0usize; order];
        let mut entries = Vec::with_capacity(total);
        for flat in 0..total {
            let mut rest = flat;
            for k in (0..order).rev() {
                idx[k] = rest % dim;
                rest /= dim;
            }
            entries.push(f(&idx));
        }
        Tensor { order, dim, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, idx: &[usize]) -> &T {
        let flat = idx.iter().fold(0, |acc, &i| acc * self.dim + i);
        &self.entries[flat]
    }
}

/// Number of permutation tuples the brute force visits: `n!^m`.
pub fn hyperdet_cost(order: usize, dim: usize) -> u128 {
    let fact: u128 = (1..=dim as u128).product();
    fact.checked_pow(order as u32).unwrap_or(u128::MAX)
}

/// Cayley's hyperdeterminant `1/n! * sum sign(s_1...s_m) prod_i M[s_1(i)..s_m(i)]`.
pub fn hyperdet_bruteforce<T: TensorScalar>(m: &Tensor<T>, budget: u128) -> Result<T> {
    let cost = hyperdet_cost(m.order, m.dim);
    if cost > budget {
        return Err(Error::BudgetExceeded { cost, budget });
    }
    if m.order == 0 {
        return Ok(T::one());
    }
    let perms = permutations_with_sign(m.dim);
    let total = perms
        .par_iter()
        .map(|first| {
            let mut acc = T::zero();
            let rest = m.order - 1;
            let mut counters = vec![0usize; rest];
            let mut idx = vec![0usize; m.order];
            loop {
                let mut sign = first.1 as i32;
                for c in &counters {
                    sign *= perms[*c].1 as i32;
                }
                let mut prod = T::one();
                for i in 0..m.dim {
                    idx[0] = first.0[i];
                    for (k, c) in counters.iter().enumerate() {
                        idx[k + 1] = perms[*c].0[i];
                    }
                    prod = prod * m.get(&idx).clone();
                }
                acc = if sign > 0 { acc + prod } else { acc + (-prod) };
                // odometer over the remaining permutations
                let mut k = 0;
                loop {
                    if k == rest {
                        return acc;
                    }
                    counters[k] += 1;
                    if counters[k] < perms.len() {
                        break;
                    }
                    counters[k] = 0;
                    k += 1;
                }
            }
        })
        .reduce(T::zero, |a, b| a + b);
    let fact: BigInt = (1..=m.dim as u64).product::<u64>().into();
    Ok(total.scale(&BigRational::new(BigInt::one(), fact)))
}

/// Polynomial in opaque generators `f(0), f(1), ...`; a term is keyed by
/// the sorted multiset of arguments.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FPoly {
    terms: BTreeMap<SmallVec<[u32; 4]>, BigRational>,
}

impl FPoly {
    /// The generator `f(j)`.
    pub fn generator(j: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(SmallVec::from_slice(&[j]), BigRational::one());
        FPoly { terms }
    }

    pub fn terms(&self) -> &BTreeMap<SmallVec<[u32; 4]>, BigRational> {
        &self.terms
    }

    /// Evaluates with `f(j) = values[j]`.
    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        self.terms
            .iter()
            .map(|(args, c)| args.iter().fold(c.clone(), |acc, &j| acc * &values[j as usize]))
            .sum()
    }
}

impl Add for FPoly {
    type Output = FPoly;
    fn add(mut self, rhs: FPoly) -> FPoly {
        for (k, v) in rhs.terms {
            let e = self.terms.entry(k).or_insert_with(BigRational::zero);
            *e += v;
        }
        self.terms.retain(|_, v| !v.is_zero());
        self
    }
}

impl Mul for FPoly {
    type Output = FPoly;
    fn mul(self, rhs: FPoly) -> FPoly {
        let mut terms: BTreeMap<SmallVec<[u32; 4]>, BigRational> = BTreeMap::new();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                let mut k: SmallVec<[u32; 4]> = ka.iter().chain(kb.iter()).copied().collect();
                k.sort_unstable();
                *terms.entry(k).or_insert_with(BigRational::zero) += va * vb;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        FPoly { terms }
    }
}

impl Neg for FPoly {
    type Output = FPoly;
    fn neg(self) -> FPoly {
        FPoly { terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect() }
    }
}

impl Zero for FPoly {
    fn zero() -> Self {
        FPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for FPoly {
    fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(SmallVec::new(), BigRational::one());
        FPoly { terms }
    }
}

impl TensorScalar for FPoly {
    fn scale(&self, r: &BigRational) -> Self {
        let mut terms = self.terms.clone();
        for v in terms.values_mut() {
            *v *= r;
        }
        terms.retain(|_, v| !v.is_zero());
        FPoly { terms }
    }
}

/// The Hankel tensor `M[i_1..i_m] = f(i_1 + ... + i_m)` with symbolic `f`.
pub fn symbolic_hankel_tensor(order: usize, dim: usize) -> Tensor<FPoly> {
    Tensor::from_fn(order, dim, |idx| FPoly::generator(idx.iter().sum::<usize>() as u32))
}

/// `C_lambda(n, k)`: the coefficient of `prod_i f(lambda_i)` in the Hankel
/// hyperdeterminant of order `2k` on an `n`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelCoeffs {
    pub n: usize,
    pub k: u32,
    pub table: BTreeMap<Partition, BigRational>,
}

impl HankelCoeffs {
    /// Entries in descending order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.table.iter().rev()
    }

    pub fn get(&self, lambda: &Partition) -> BigRational {
        lambda
            .padded(self.n)
            .ok()
            .and_then(|l| self.table.get(&l).cloned())
            .unwrap_or_else(BigRational::zero)
    }

    /// `sum_lambda C_lambda prod_i f(lambda_i)` at the given values of `f`.
    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        self.table
            .iter()
            .map(|(lam, c)| lam.parts().iter().fold(c.clone(), |acc, &j| acc * &values[j as usize]))
            .sum()
    }
}

/// `C_lambda = (-1)^{kn(n-1)/2} * (#rearrangements(lambda) / n!) * [m_lambda] Disc_k(X, 1)`.
pub fn hankel_coefficients(n: usize, k: u32) -> Result<HankelCoeffs> {
    if n < 2 || k < 1 {
        return Err(Error::Domain("hankel coefficients need n >= 2 and k >= 1".into()));
    }
    let disc = qdisc_build(n, k)?;
    let at_one = disc.m_at_p_equals_one()?;
    let sign_exp = k as usize * n * (n - 1) / 2;
    let sign = if sign_exp.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    let fact: BigInt = (1..=n as u64).product::<u64>().into();
    let mut table = BTreeMap::new();
    for (lambda, c) in at_one.iter() {
        let perms = BigInt::from(distinct_permutations_count(lambda));
        let v = c * &sign * BigRational::new(perms, fact.clone());
        table.insert(lambda.clone(), v);
    }
    debug_assert!(table.keys().all(|l| crate::partitions::dominance_leq(l, &staircase(n, 2 * k).unwrap())));
    Ok(HankelCoeffs { n, k, table })
}

/// Expands the symbolic Hankel hyperdeterminant by brute force and collects
/// the coefficients by argument multiset.
pub fn hankel_coefficients_bruteforce(n: usize, k: u32, budget: u128) -> Result<HankelCoeffs> {
    let tensor = symbolic_hankel_tensor(2 * k as usize, n);
    let det = hyperdet_bruteforce(&tensor, budget)?;
    let mut table = BTreeMap::new();
    for (args, c) in det.terms() {
        let mut parts: Vec<u32> = args.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        table.insert(Partition::new(parts)?, c.clone());
    }
    Ok(HankelCoeffs { n, k, table })
}
