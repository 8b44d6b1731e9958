//! Multivariate polynomial gcd over the integers.
//!
//! Polynomials here have non-negative exponents and integer coefficients;
//! terms are kept sorted in descending lexicographic order so the first
//! term is the lexicographic leading term. The main entry point is [`gcd`],
//! which strips monomial and integer content and then runs the heuristic
//! gcd (evaluation at a large integer, recursive gcd, ξ-adic
//! reconstruction, trial division). If the heuristic keeps failing we fall
//! back to a recursive primitive pseudo-remainder sequence.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Exponents;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZPoly {
    pub nvars: usize,
    /// Sorted by exponent, descending lexicographic.
    pub terms: Vec<(Exponents, BigInt)>,
}

impl ZPoly {
    pub fn zero(nvars: usize) -> Self {
        ZPoly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        ZPoly { nvars, terms: vec![(Exponents::from_elem(0, nvars), c)] }
    }

    pub fn from_map(nvars: usize, map: BTreeMap<Exponents, BigInt>) -> Self {
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        ZPoly { nvars, terms }
    }

    fn from_hash(nvars: usize, map: HashMap<Exponents, BigInt>) -> Self {
        let mut terms: Vec<(Exponents, BigInt)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        ZPoly { nvars, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0)
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms[0].1.is_one()
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn max_norm(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.abs()).max().unwrap_or_default()
    }

    pub fn degree_in(&self, v: usize) -> i32 {
        self.terms.iter().map(|(e, _)| e[v]).max().unwrap_or(-1)
    }

    pub fn min_exponents(&self) -> Exponents {
        let mut m = Exponents::from_elem(i32::MAX, self.nvars);
        for (e, _) in &self.terms {
            for i in 0..self.nvars {
                m[i] = m[i].min(e[i]);
            }
        }
        m
    }

    pub fn neg(&self) -> Self {
        ZPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        ZPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        ZPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c / k)).collect() }
    }

    /// Multiplies by x^shift; negative entries must not underflow.
    pub fn shift(&self, shift: &[i32]) -> Self {
        ZPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    fn merge(&self, other: &Self, sub: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if sub { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if sub { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if sub { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        ZPoly { nvars: self.nvars, terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        let mut map: HashMap<Exponents, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                *map.entry(e).or_default() += ca * cb;
            }
        }
        Self::from_hash(self.nvars, map)
    }

    pub fn mul_term(&self, e: &[i32], c: &BigInt) -> Self {
        ZPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(ea, ca)| (ea.iter().zip(e).map(|(x, y)| x + y).collect(), ca * c))
                .collect(),
        }
    }

    /// Exact division; `None` when `divisor` does not divide `self` in Z[x].
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero());
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if divisor.terms.len() == 1 {
            let (de, dc) = &divisor.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                let (quo, rem) = c.div_rem(dc);
                if !rem.is_zero() {
                    return None;
                }
                let ne: Exponents = e.iter().zip(de.iter()).map(|(a, b)| a - b).collect();
                if ne.iter().any(|&x| x < 0) {
                    return None;
                }
                terms.push((ne, quo));
            }
            return Some(ZPoly { nvars: self.nvars, terms });
        }
        // cheap degree screen
        for v in 0..self.nvars {
            if divisor.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let (de, dc) = &divisor.terms[0];
        let mut rem = self.clone();
        let mut quotient: Vec<(Exponents, BigInt)> = Vec::new();
        while !rem.is_zero() {
            let (re, rc) = &rem.terms[0];
            let ne: Exponents = re.iter().zip(de.iter()).map(|(a, b)| a - b).collect();
            if ne.iter().any(|&x| x < 0) {
                return None;
            }
            let (quo, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub(&divisor.mul_term(&ne, &quo));
            quotient.push((ne, quo));
        }
        Some(ZPoly { nvars: self.nvars, terms: quotient })
    }

    /// Substitutes `value` for variable `v`; the variable's exponent becomes 0.
    fn eval_var(&self, v: usize, value: &BigInt) -> Self {
        let deg = self.degree_in(v).max(0) as usize;
        let mut powers = Vec::with_capacity(deg + 1);
        powers.push(BigInt::one());
        for i in 1..=deg {
            let next = &powers[i - 1] * value;
            powers.push(next);
        }
        let mut map: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne[v] as usize;
            ne[v] = 0;
            *map.entry(ne).or_default() += c * &powers[k];
        }
        Self::from_map(self.nvars, map)
    }

    /// Coefficients with respect to variable `v`, keyed by degree.
    fn coefficients_in(&self, v: usize) -> BTreeMap<i32, ZPoly> {
        let mut groups: BTreeMap<i32, BTreeMap<Exponents, BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne[v];
            ne[v] = 0;
            groups.entry(k).or_default().insert(ne, c.clone());
        }
        groups.into_iter().map(|(k, m)| (k, ZPoly::from_map(self.nvars, m))).collect()
    }

    fn with_positive_lc(self) -> Self {
        if !self.is_zero() && self.lc().sign() == Sign::Minus {
            self.neg()
        } else {
            self
        }
    }

    fn uses_var(&self, v: usize) -> bool {
        self.terms.iter().any(|(e, _)| e[v] != 0)
    }
}

/// Greatest common divisor in Z[x_1..x_k], normalized to a positive
/// lexicographic leading coefficient. `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    gcd_upto(a, b, a.nvars)
}

/// gcd where only variables `0..active` can occur.
fn gcd_upto(a: &ZPoly, b: &ZPoly, active: usize) -> ZPoly {
    let nv = a.nvars;
    if a.is_zero() {
        return b.clone().with_positive_lc();
    }
    if b.is_zero() {
        return a.clone().with_positive_lc();
    }
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let mg: Exponents = ma.iter().zip(mb.iter()).map(|(x, y)| *x.min(y)).collect();
    let neg_ma: Exponents = ma.iter().map(|x| -x).collect();
    let neg_mb: Exponents = mb.iter().map(|x| -x).collect();
    let a1 = a.shift(&neg_ma);
    let b1 = b.shift(&neg_mb);
    let ca = a1.content();
    let cb = b1.content();
    let c = ca.gcd(&cb);
    let core = if a1.terms.len() == 1 || b1.terms.len() == 1 {
        // after removing the monomial part, a single term is a constant
        ZPoly::constant(nv, BigInt::one())
    } else {
        let a2 = a1.div_int(&ca).with_positive_lc();
        let b2 = b1.div_int(&cb).with_positive_lc();
        if a2 == b2 {
            a2
        } else {
            primitive_gcd(&a2, &b2, active)
        }
    };
    core.scale(&c).shift(&mg)
}

/// gcd of two primitive polynomials with no monomial factor.
fn primitive_gcd(a: &ZPoly, b: &ZPoly, active: usize) -> ZPoly {
    // variables occurring in only one argument cannot occur in the gcd;
    // the gcd then divides every coefficient with respect to such a variable.
    for v in 0..active {
        let (ua, ub) = (a.uses_var(v), b.uses_var(v));
        if ua != ub {
            let (with, without) = if ua { (a, b) } else { (b, a) };
            let mut g = without.clone();
            for coeff in with.coefficients_in(v).values() {
                g = gcd_upto(&g, coeff, active);
                if g.is_one() {
                    break;
                }
            }
            return g.with_positive_lc();
        }
    }
    if let Some(g) = heuristic_gcd(a, b, active) {
        return g;
    }
    prs_gcd(a, b, active)
}

const HEU_ATTEMPTS: usize = 6;
const HEU_MAX_BITS: u64 = 400_000;

fn heuristic_gcd(a: &ZPoly, b: &ZPoly, active: usize) -> Option<ZPoly> {
    let v = match (0..active).rev().find(|&v| a.uses_var(v) || b.uses_var(v)) {
        Some(v) => v,
        None => {
            return Some(ZPoly::constant(a.nvars, a.lc().gcd(b.lc())));
        }
    };
    let deg = a.degree_in(v).max(b.degree_in(v)) as u64 + 1;
    let norm = a.max_norm().min(b.max_norm());
    let mut xi: BigInt = norm * 2 + 29;
    for _ in 0..HEU_ATTEMPTS {
        if xi.bits() * deg > HEU_MAX_BITS {
            return None;
        }
        let ea = a.eval_var(v, &xi);
        let eb = b.eval_var(v, &xi);
        if !ea.is_zero() && !eb.is_zero() {
            let g = gcd_upto(&ea, &eb, v);
            let candidate = reconstruct(&g, v, &xi);
            if !candidate.is_zero() {
                let cont = candidate.content();
                let candidate = candidate.div_int(&cont).with_positive_lc();
                if a.exact_div(&candidate).is_some() && b.exact_div(&candidate).is_some() {
                    return Some(candidate);
                }
            }
        }
        xi = xi * BigInt::from(73794) / BigInt::from(27011);
    }
    None
}

/// Inverts evaluation at `xi` using balanced ξ-adic digits.
fn reconstruct(g: &ZPoly, v: usize, xi: &BigInt) -> ZPoly {
    let half: BigInt = xi / 2;
    let mut map: BTreeMap<Exponents, BigInt> = BTreeMap::new();
    for (e, c) in &g.terms {
        let mut rest = c.clone();
        let mut k = 0;
        while !rest.is_zero() {
            let mut digit = rest.mod_floor(xi);
            if digit > half {
                digit -= xi;
            }
            if !digit.is_zero() {
                let mut ne = e.clone();
                ne[v] = k;
                map.insert(ne, digit.clone());
            }
            rest = (rest - digit) / xi;
            k += 1;
        }
    }
    ZPoly::from_map(g.nvars, map)
}

/// Pseudo-remainder of `a` by `b` with respect to variable `v`.
fn pseudo_rem(a: &ZPoly, b: &ZPoly, v: usize) -> ZPoly {
    let db = b.degree_in(v);
    let coeffs_b = b.coefficients_in(v);
    let lc_b = coeffs_b[&db].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lc_r = r.coefficients_in(v).remove(&dr).unwrap();
        let mut shift = Exponents::from_elem(0, a.nvars);
        shift[v] = dr - db;
        r = r.mul(&lc_b).sub(&lc_r.shift(&shift).mul(b));
    }
    r
}

/// Content with respect to `v`: gcd of the coefficients in the other variables.
fn content_in(a: &ZPoly, v: usize, active: usize) -> ZPoly {
    let mut g = ZPoly::zero(a.nvars);
    for c in a.coefficients_in(v).values() {
        g = gcd_upto(&g, c, active);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Recursive primitive pseudo-remainder sequence. Slow but unconditional.
pub(crate) fn prs_gcd(a: &ZPoly, b: &ZPoly, active: usize) -> ZPoly {
    let v = match (0..active).find(|&v| a.uses_var(v) || b.uses_var(v)) {
        Some(v) => v,
        None => return ZPoly::constant(a.nvars, a.content().gcd(&b.content())),
    };
    let ca = content_in(a, v, active);
    let cb = content_in(b, v, active);
    let c = gcd_upto(&ca, &cb, active);
    let mut f = a.exact_div(&ca).expect("content divides");
    let mut g = b.exact_div(&cb).expect("content divides");
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() && g.degree_in(v) > 0 {
        let r = pseudo_rem(&f, &g, v);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            let cr = content_in(&r, v, active);
            r.exact_div(&cr).expect("content divides")
        };
    }
    let core = if g.is_zero() {
        f.with_positive_lc()
    } else {
        // a nonzero remainder of degree 0 in v: coprime in v
        ZPoly::constant(a.nvars, BigInt::one())
    };
    core.mul(&c).with_positive_lc()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Parses `[(coeff, [e0, e1, ...]), ...]` into a ZPoly.
    fn zp(nvars: usize, terms: &[(i64, &[i32])]) -> ZPoly {
        let mut map = BTreeMap::new();
        for (c, e) in terms {
            *map.entry(Exponents::from_slice(e)).or_insert_with(BigInt::zero) += BigInt::from(*c);
        }
        ZPoly::from_map(nvars, map)
    }

    #[test]
    fn univariate_gcd() {
        // (x+1)(x-2) and (x+1)(x+3)
        let a = zp(1, &[(1, &[2]), (-1, &[1]), (-2, &[0])]);
        let b = zp(1, &[(1, &[2]), (4, &[1]), (3, &[0])]);
        assert_eq!(gcd(&a, &b), zp(1, &[(1, &[1]), (1, &[0])]));
    }

    #[test]
    fn content_and_monomial_factors() {
        // 6x^2y and 4xy^3 -> 2xy
        let a = zp(2, &[(6, &[2, 1])]);
        let b = zp(2, &[(4, &[1, 3])]);
        assert_eq!(gcd(&a, &b), zp(2, &[(2, &[1, 1])]));
        // 2x(x+y) and 4x^2(x+y)^2 -> 2x(x+y)
        let xy = zp(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let a = xy.mul(&zp(2, &[(2, &[1, 0])]));
        let b = xy.mul(&xy).mul(&zp(2, &[(4, &[2, 0])]));
        assert_eq!(gcd(&a, &b), a);
    }

    #[test]
    fn bivariate_gcd_both_routes() {
        // (1 - q t)(1 + q) and (1 - q t)(1 - t^2)
        let f = zp(2, &[(1, &[0, 0]), (-1, &[1, 1])]);
        let a = f.mul(&zp(2, &[(1, &[0, 0]), (1, &[1, 0])]));
        let b = f.mul(&zp(2, &[(1, &[0, 0]), (-1, &[0, 2])]));
        let expect = f.clone().with_positive_lc();
        assert_eq!(gcd(&a, &b), expect);
        assert_eq!(prs_gcd(&a, &b, 2), expect);
    }

    #[test]
    fn coprime_inputs() {
        let a = zp(2, &[(1, &[1, 0]), (1, &[0, 1]), (1, &[0, 0])]);
        let b = zp(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        assert!(gcd(&a, &b).is_one());
        assert!(prs_gcd(&a, &b, 2).is_one());
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = zp(1, &[(1, &[2]), (-1, &[0])]);
        let b = zp(1, &[(1, &[1]), (-1, &[0])]);
        assert_eq!(a.exact_div(&b), Some(zp(1, &[(1, &[1]), (1, &[0])])));
        let c = zp(1, &[(1, &[1]), (2, &[0])]);
        assert_eq!(a.exact_div(&c), None);
        assert_eq!(a.exact_div(&zp(1, &[(2, &[0])])), None);
    }

    #[test]
    fn three_variable_gcd_matches_prs() {
        // (a + b + c)(a - 2c) and (a + b + c)(b^2 + c)
        let s = zp(3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0]), (1, &[0, 0, 1])]);
        let x = s.mul(&zp(3, &[(1, &[1, 0, 0]), (-2, &[0, 0, 1])]));
        let y = s.mul(&zp(3, &[(1, &[0, 2, 0]), (1, &[0, 0, 1])]));
        assert_eq!(gcd(&x, &y), s);
        assert_eq!(prs_gcd(&x, &y, 3), s);
    }
}
