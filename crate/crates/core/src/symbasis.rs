//! Polynomials in the alphabet x_1..x_n, symmetric polynomials in monomial
//! and Schur coordinates, Kostka numbers and Littlewood–Richardson
//! coefficients.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use smallvec::SmallVec;

use crate::algebra::RatFun;
use crate::error::{Error, Result};
use crate::partitions::{dominance_leq, partitions_dominated_by, partitions_of, Partition};

/// Exponent vector in the alphabet variables.
pub type XExponents = SmallVec<[u32; 6]>;

/// Sparse polynomial in x_1..x_n with rational-function coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XPoly {
    n: usize,
    terms: BTreeMap<XExponents, RatFun>,
}

impl XPoly {
    pub fn zero(n: usize) -> Self {
        XPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: RatFun) -> Self {
        Self::monomial(n, XExponents::from_elem(0, n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, RatFun::one())
    }

    pub fn monomial(n: usize, e: XExponents, c: RatFun) -> Self {
        assert_eq!(e.len(), n);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        XPoly { n, terms }
    }

    /// `c * x_i` with `i` 1-based.
    pub fn var(n: usize, i: usize, c: RatFun) -> Self {
        let mut e = XExponents::from_elem(0, n);
        e[i - 1] = 1;
        Self::monomial(n, e, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (XExponents, RatFun)>>(n: usize, terms: I) -> Self {
        let mut out = XPoly::zero(n);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<XExponents, RatFun> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> RatFun {
        self.terms.get(e).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn add_term(&mut self, e: XExponents, c: RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return XPoly::zero(self.n);
        }
        XPoly { n: self.n, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn try_map_coeffs(&self, f: impl Fn(&RatFun) -> Result<RatFun>) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.insert(e.clone(), v);
            }
        }
        Ok(XPoly { n: self.n, terms })
    }

    /// Exchanges x_i and x_{i+1} (1-based `i`).
    pub fn swap(&self, i: usize) -> Self {
        XPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i - 1, i);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes `x_i -> c * x_i` (1-based `i`).
    pub fn scale_variable(&self, i: usize, c: &RatFun) -> Self {
        let mut powers: Vec<RatFun> = vec![RatFun::one()];
        let mut out = XPoly::zero(self.n);
        for (e, v) in &self.terms {
            let k = e[i - 1] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * c;
                powers.push(next);
            }
            out.add_term(e.clone(), v * &powers[k]);
        }
        out
    }

    /// Index (1-based) of the first adjacent transposition that changes `self`.
    pub fn asymmetry(&self) -> Option<usize> {
        for i in 1..self.n {
            for (e, c) in &self.terms {
                let mut s = e.clone();
                s.swap(i - 1, i);
                if self.terms.get(&s) != Some(c) {
                    return Some(i);
                }
            }
        }
        None
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.n, other.n, "alphabet sizes differ");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), if negate { -c } else { c.clone() });
        }
        out
    }

    fn product(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "alphabet sizes differ");
        let mut acc: HashMap<XExponents, RatFun> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: XExponents = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                match acc.entry(e) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        let s = o.get() + &c;
                        *o.get_mut() = s;
                    }
                }
            }
        }
        XPoly { n: self.n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        self.combine(rhs, false)
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self.combine(rhs, true)
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        self.product(rhs)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

/// Coefficients of a symmetric polynomial on a basis indexed by partitions.
///
/// Partitions are stored padded to length `n`; iteration in reverse key order
/// is the descending linear extension of dominance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coords<C> {
    n: usize,
    coeffs: BTreeMap<Partition, C>,
}

/// Monomial-basis coordinates.
pub type MCoords = Coords<RatFun>;

/// Schur-basis coordinates. Same layout as [`MCoords`], distinct meaning.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurCoords(pub Coords<RatFun>);

impl<C: Clone + Zero> Coords<C> {
    pub fn new(n: usize) -> Self {
        Coords { n, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, lambda: &Partition, c: C) -> Result<()> {
        let key = lambda.padded(self.n)?;
        if c.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, c);
        }
        Ok(())
    }

    pub fn get(&self, lambda: &Partition) -> C {
        lambda
            .padded(self.n)
            .ok()
            .and_then(|k| self.coeffs.get(&k).cloned())
            .unwrap_or_else(C::zero)
    }

    /// Entries in descending order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.coeffs.iter().rev()
    }

    pub fn support(&self) -> BTreeSet<Partition> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn try_map<D: Clone + Zero>(&self, f: impl Fn(&C) -> Result<D>) -> Result<Coords<D>> {
        let mut out = Coords::new(self.n);
        for (k, v) in &self.coeffs {
            let d = f(v)?;
            if !d.is_zero() {
                out.coeffs.insert(k.clone(), d);
            }
        }
        Ok(out)
    }

    pub fn map<D: Clone + Zero>(&self, f: impl Fn(&C) -> D) -> Coords<D> {
        self.try_map(|c| Ok(f(c))).expect("infallible")
    }
}

impl MCoords {
    pub fn scale(&self, c: &RatFun) -> Self {
        self.map(|v| v * c)
    }

    /// Expands back into the alphabet.
    pub fn to_xpoly(&self) -> Result<XPoly> {
        let mut out = XPoly::zero(self.n);
        for (lambda, c) in &self.coeffs {
            for (e, _) in expand_m(lambda, self.n)?.terms {
                out.add_term(e, c.clone());
            }
        }
        Ok(out)
    }
}

impl SchurCoords {
    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn support(&self) -> BTreeSet<Partition> {
        self.0.support()
    }

    pub fn get(&self, lambda: &Partition) -> RatFun {
        self.0.get(lambda)
    }
}

/// All distinct rearrangements of `v`, in lexicographic order.
pub(crate) fn distinct_rearrangements(v: &[u32]) -> Vec<XExponents> {
    let mut cur: XExponents = v.iter().copied().collect();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next_permutation
    loop {
        let n = cur.len();
        if n < 2 {
            return out;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// The monomial symmetric function `m_lambda` in `n` variables.
pub fn expand_m(lambda: &Partition, n: usize) -> Result<XPoly> {
    let padded = lambda.padded(n)?;
    Ok(XPoly::from_terms(
        n,
        distinct_rearrangements(padded.parts()).into_iter().map(|e| (e, RatFun::one())),
    ))
}

/// Reads off monomial coordinates of a symmetric polynomial.
pub fn collect_to_m(f: &XPoly) -> Result<MCoords> {
    if let Some(i) = f.asymmetry() {
        return Err(Error::NotSymmetric(i));
    }
    let mut out = MCoords::new(f.n);
    for (e, c) in &f.terms {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            out.coeffs.insert(Partition::from_sorted(e.to_vec()), c.clone());
        }
    }
    Ok(out)
}

/// Memo table of Kostka numbers keyed by (shape, content).
#[derive(Default)]
pub struct KostkaTable {
    memo: HashMap<(Vec<u32>, Vec<u32>), u128>,
}

impl KostkaTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of semistandard tableaux of shape `lambda` and content `mu`.
    pub fn kostka(&mut self, lambda: &Partition, mu: &Partition) -> u128 {
        if lambda.weight() != mu.weight() {
            return 0;
        }
        let shape = lambda.trimmed().parts().to_vec();
        let content: Vec<u32> = mu.parts().iter().copied().filter(|&x| x > 0).collect();
        self.count(shape, content)
    }

    /// Peels off the largest letter as a horizontal strip.
    fn count(&mut self, shape: Vec<u32>, content: Vec<u32>) -> u128 {
        if content.is_empty() {
            return u128::from(shape.is_empty());
        }
        let key = (shape, content);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (shape, content) = key;
        let strip = *content.last().unwrap();
        let rest = content[..content.len() - 1].to_vec();
        // a letter can only occupy the first `content.len()` rows
        let total = if shape.len() > content.len() {
            0
        } else {
            let mut inner = Vec::new();
            horizontal_strips(&shape, strip, 0, &mut Vec::new(), &mut inner);
            inner
                .into_iter()
                .map(|nu| self.count(nu, rest.clone()))
                .sum()
        };
        self.memo.insert((shape, content), total);
        total
    }
}

/// All `nu` with `shape / nu` a horizontal strip of `size` cells.
fn horizontal_strips(shape: &[u32], size: u32, row: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if row == shape.len() {
        if size == 0 {
            let mut nu = cur.clone();
            while nu.last() == Some(&0) {
                nu.pop();
            }
            out.push(nu);
        }
        return;
    }
    let below = shape.get(row + 1).copied().unwrap_or(0);
    let max_remove = (shape[row] - below).min(size);
    for r in 0..=max_remove {
        cur.push(shape[row] - r);
        horizontal_strips(shape, size - r, row + 1, cur, out);
        cur.pop();
    }
}

/// `S_lambda` in monomial coordinates via Kostka numbers.
pub fn schur_in_m(lambda: &Partition, n: usize) -> Result<MCoords> {
    schur_in_m_with(&mut KostkaTable::new(), lambda, n)
}

pub fn schur_in_m_with(table: &mut KostkaTable, lambda: &Partition, n: usize) -> Result<MCoords> {
    let top = lambda.padded(n)?;
    let mut out = MCoords::new(n);
    for mu in partitions_dominated_by(&top, n) {
        let k = table.kostka(&top, &mu);
        if k > 0 {
            out.coeffs.insert(mu, RatFun::from_int(k as i64));
        }
    }
    Ok(out)
}

/// Complete homogeneous symmetric polynomial `h_k` in `n` variables.
pub fn complete_homogeneous(k: i64, n: usize) -> XPoly {
    if k < 0 {
        return XPoly::zero(n);
    }
    let mut out = XPoly::zero(n);
    for lambda in partitions_of(k as u32, n) {
        for e in distinct_rearrangements(lambda.parts()) {
            out.add_term(e, RatFun::one());
        }
    }
    out
}

/// Jacobi–Trudi determinant `det(h_{lambda_i - i + j})` expanded in `n`
/// variables; an independent route to `S_lambda`.
pub fn jacobi_trudi(lambda: &Partition, n: usize) -> Result<XPoly> {
    let lam = lambda.trimmed();
    let l = lam.len();
    if lam.length() > n {
        return Err(Error::Domain(format!("{lambda} has more than {n} parts")));
    }
    if l == 0 {
        return Ok(XPoly::one(n));
    }
    let mut h: BTreeMap<i64, XPoly> = BTreeMap::new();
    let mut det = XPoly::zero(n);
    for (perm, sign) in crate::hankel::permutations_with_sign(l) {
        let mut term = XPoly::constant(n, RatFun::from_int(sign as i64));
        for (i, &j) in perm.iter().enumerate() {
            let idx = lam.part(i) as i64 - i as i64 + j as i64;
            let hk = h.entry(idx).or_insert_with(|| complete_homogeneous(idx, n));
            term = &term * hk;
            if term.is_zero() {
                break;
            }
        }
        det = &det + &term;
    }
    Ok(det)
}

/// Converts monomial coordinates to Schur coordinates by peeling off the
/// lexicographically largest remaining term (Kostka matrix is unitriangular).
pub fn to_schur(f: &MCoords) -> Result<SchurCoords> {
    let n = f.n;
    let mut table = KostkaTable::new();
    let mut rest = f.clone();
    let mut out = MCoords::new(n);
    while let Some((top, c)) = rest.coeffs.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        let s = schur_in_m_with(&mut table, &top, n)?;
        for (mu, k) in s.coeffs.iter() {
            let v = &rest.get(mu) - &(k * &c);
            rest.insert(mu, v)?;
        }
        debug_assert!(rest.get(&top).is_zero());
        out.coeffs.insert(top, c);
    }
    Ok(SchurCoords(out))
}

/// Inverse of [`to_schur`].
pub fn schur_to_m(s: &SchurCoords) -> Result<MCoords> {
    let n = s.n();
    let mut table = KostkaTable::new();
    let mut out = MCoords::new(n);
    for (lambda, c) in s.0.coeffs.iter() {
        for (mu, k) in schur_in_m_with(&mut table, lambda, n)?.coeffs {
            let v = &out.get(&mu) + &(&k * c);
            out.insert(&mu, v)?;
        }
    }
    Ok(out)
}

/// Littlewood–Richardson coefficient `c^lambda_{mu, nu}`: the number of
/// semistandard fillings of `lambda / mu` with content `nu` whose reverse
/// reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let lam = lambda.trimmed();
    let mu = mu.trimmed();
    let nu = nu.trimmed();
    if lam.weight() != mu.weight() + nu.weight() || !mu.contained_in(&lam) || !nu.contained_in(&lam) {
        return 0;
    }
    // cells in reading order: rows top to bottom, right to left
    let mut cells = Vec::new();
    for r in 0..lam.len() {
        for c in (mu.part(r)..lam.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = lam.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; lam.len()];
    let mut counts = vec![0u32; nu.len() + 1];
    let content: Vec<u32> = nu.parts().to_vec();
    let mut total = 0u64;
    lr_fill(&cells, 0, &mu, &content, &mut grid, &mut counts, &mut total);
    total
}

fn lr_fill(
    cells: &[(usize, usize)],
    idx: usize,
    mu: &Partition,
    content: &[u32],
    grid: &mut [Vec<u32>],
    counts: &mut [u32],
    total: &mut u64,
) {
    if idx == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[idx];
    // row weakly increasing: bounded above by the right neighbour (already filled)
    let right_ok = |v: u32, grid: &[Vec<u32>]| {
        c + 1 >= grid[r].len() || grid[r][c + 1] == 0 || v <= grid[r][c + 1]
    };
    let above_min = if r > 0 && (c as u32) >= mu.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
    for v in above_min..=content.len() as u32 {
        let i = v as usize;
        if counts[i] >= content[i - 1] || !right_ok(v, grid) {
            continue;
        }
        // lattice condition on the reading word so far
        if i > 1 && counts[i] + 1 > counts[i - 1] {
            continue;
        }
        grid[r][c] = v;
        counts[i] += 1;
        lr_fill(cells, idx + 1, mu, content, grid, counts, total);
        counts[i] -= 1;
        grid[r][c] = 0;
    }
}

/// Schur coordinates (as nonnegative integers) of `S_rho^m` in `n` variables,
/// built by repeated LR products with length truncation after each step.
pub fn schur_power_of_staircase(n: usize, m: u32) -> BTreeMap<Partition, u128> {
    let rho = crate::partitions::staircase(n, 1).expect("n >= 1");
    let mut current: BTreeMap<Partition, u128> = BTreeMap::new();
    current.insert(rho.clone(), 1);
    for _ in 1..m {
        let mut next: BTreeMap<Partition, u128> = BTreeMap::new();
        for (alpha, &ca) in &current {
            let weight = alpha.weight() + rho.weight();
            for lambda in partitions_of(weight, n) {
                if !alpha.contained_in(&lambda) || !rho.contained_in(&lambda) {
                    continue;
                }
                let c = lr_coefficient(&lambda, alpha, &rho) as u128;
                if c > 0 {
                    *next.entry(lambda).or_insert(0) += ca * c;
                }
            }
        }
        current = next;
    }
    current
}

/// Support of the Schur expansion of `S_rho(X)^m`, `X` of size `n`.
pub fn schur_product_support(n: usize, m: u32) -> BTreeSet<Partition> {
    schur_power_of_staircase(n, m).into_keys().collect()
}

/// True when the Kostka matrix on the weight class is unitriangular with
/// respect to dominance.
pub fn kostka_is_unitriangular(weight: u32, n: usize) -> bool {
    let mut table = KostkaTable::new();
    let class = partitions_of(weight, n);
    class.iter().all(|lambda| {
        class.iter().all(|mu| {
            let k = table.kostka(lambda, mu);
            if lambda == mu {
                k == 1
            } else {
                k == 0 || dominance_leq(mu, lambda)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfun;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn r(s: &str) -> RatFun {
        parse_ratfun(s).unwrap()
    }

    fn x(e: &[u32]) -> XExponents {
        e.iter().copied().collect()
    }

    #[test]
    fn expand_m_examples() {
        let m11 = expand_m(&p(&[1, 1]), 2).unwrap();
        assert_eq!(m11, XPoly::monomial(2, x(&[1, 1]), RatFun::one()));
        let m2 = expand_m(&p(&[2]), 2).unwrap();
        assert_eq!(m2.len(), 2);
        assert_eq!(m2.coeff(&[2, 0]), RatFun::one());
        assert_eq!(m2.coeff(&[0, 2]), RatFun::one());
        let m21 = expand_m(&p(&[2, 1]), 3).unwrap();
        assert_eq!(m21.len(), 6);
        assert!(m21.terms().values().all(|c| c.is_one()));
        assert!(expand_m(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn collect_examples() {
        let f = XPoly::from_terms(
            2,
            [(x(&[2, 0]), RatFun::one()), (x(&[0, 2]), RatFun::one()), (x(&[1, 1]), RatFun::from_int(3))],
        );
        let m = collect_to_m(&f).unwrap();
        assert_eq!(m.get(&p(&[2])), RatFun::one());
        assert_eq!(m.get(&p(&[1, 1])), RatFun::from_int(3));
        assert_eq!(m.len(), 2);
        assert!(collect_to_m(&XPoly::zero(2)).unwrap().is_empty());
        let bad = XPoly::monomial(2, x(&[2, 1]), RatFun::one());
        assert_eq!(collect_to_m(&bad), Err(Error::NotSymmetric(1)));
    }

    #[test]
    fn schur_examples() {
        let s2 = schur_in_m(&p(&[2]), 2).unwrap();
        assert_eq!(s2.get(&p(&[2])), RatFun::one());
        assert_eq!(s2.get(&p(&[1, 1])), RatFun::one());
        let s21 = schur_in_m(&p(&[2, 1]), 3).unwrap();
        assert_eq!(s21.get(&p(&[2, 1])), RatFun::one());
        assert_eq!(s21.get(&p(&[1, 1, 1])), RatFun::from_int(2));
        assert_eq!(s21.len(), 2);
        let s11 = schur_in_m(&p(&[1, 1]), 2).unwrap();
        assert_eq!(s11.len(), 1);
    }

    #[test]
    fn to_schur_examples() {
        let mut m2 = MCoords::new(2);
        m2.insert(&p(&[2]), RatFun::one()).unwrap();
        let s = to_schur(&m2).unwrap();
        assert_eq!(s.get(&p(&[2])), RatFun::one());
        assert_eq!(s.get(&p(&[1, 1])), RatFun::from_int(-1));

        let mut f = MCoords::new(2);
        f.insert(&p(&[2]), r("-p")).unwrap();
        f.insert(&p(&[1, 1]), r("1 + p^2")).unwrap();
        let s = to_schur(&f).unwrap();
        assert_eq!(s.get(&p(&[2])), r("-p"));
        assert_eq!(s.get(&p(&[1, 1])), r("1 + p + p^2"));
        assert_eq!(schur_to_m(&s).unwrap(), f);
    }

    #[test]
    fn schur_roundtrip_is_unit_vector() {
        let lam = p(&[3, 1, 1]);
        let s = to_schur(&schur_in_m(&lam, 3).unwrap()).unwrap();
        assert_eq!(s.support(), [lam.padded(3).unwrap()].into_iter().collect());
        assert!(s.get(&lam).is_one());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(lr_coefficient(&p(&[3, 1]), &p(&[2]), &p(&[1, 1])), 1);
        // s21 * s21 contains s321 twice
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
    }

    #[test]
    fn product_support_examples() {
        let set = |v: &[&[u32]]| v.iter().map(|x| p(x)).collect::<BTreeSet<_>>();
        assert_eq!(schur_product_support(2, 2), set(&[&[2, 0], &[1, 1]]));
        assert_eq!(
            schur_product_support(3, 2),
            set(&[&[4, 2, 0], &[4, 1, 1], &[3, 3, 0], &[3, 2, 1], &[2, 2, 2]])
        );
        assert_eq!(schur_product_support(2, 1), set(&[&[1, 0]]));
    }

    #[test]
    fn jacobi_trudi_small() {
        let jt = jacobi_trudi(&p(&[2, 1]), 3).unwrap();
        assert_eq!(collect_to_m(&jt).unwrap(), schur_in_m(&p(&[2, 1]), 3).unwrap());
    }

    #[test]
    fn kostka_unitriangular_small() {
        for w in 0..=7 {
            assert!(kostka_is_unitriangular(w, 4));
        }
    }
}
