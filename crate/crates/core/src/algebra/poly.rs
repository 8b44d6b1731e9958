use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a parameter monomial. Negative entries are allowed.
pub type Exponents = SmallVec<[i32; 4]>;

/// Ranking used for the fixed variable order: q, t, p, s, then any other
/// symbol alphabetically.
fn symbol_rank(name: &str) -> (u8, &str) {
    match name {
        "q" => (0, ""),
        "t" => (1, ""),
        "p" => (2, ""),
        "s" => (3, ""),
        other => (4, other),
    }
}

pub(crate) fn symbol_cmp(a: &str, b: &str) -> Ordering {
    symbol_rank(a).cmp(&symbol_rank(b))
}

/// Ordered list of parameter symbols shared by the terms of a polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        let mut v: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        v.sort_by(|a, b| symbol_cmp(a, b));
        v.dedup();
        Vars(v.into())
    }

    pub fn empty() -> Self {
        Vars(Arc::from(Vec::<String>::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn union(&self, other: &Vars) -> Vars {
        if self == other {
            return self.clone();
        }
        let mut all: Vec<&String> = self.0.iter().chain(other.0.iter()).collect();
        all.sort_by(|a, b| symbol_cmp(a, b));
        all.dedup();
        Vars::new(&all)
    }

    /// Position of each of our symbols inside `target`.
    fn embedding(&self, target: &Vars) -> Vec<usize> {
        self.0
            .iter()
            .map(|v| target.index_of(v).expect("target must contain every symbol"))
            .collect()
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Compares exponent vectors in graded-lexicographic order.
pub(crate) fn grlex_cmp(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&e| e as i64).sum();
    let db: i64 = b.iter().map(|&e| e as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Sparse Laurent polynomial with rational coefficients in named parameters.
///
/// The symbol list only ever holds symbols that occur with a nonzero
/// exponent in some term, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Exponents, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { vars: Vars::empty(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents::new(), c);
        }
        LaurentPoly { vars: Vars::empty(), terms }
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// The symbol `name` to the first power.
    pub fn var(name: &str) -> Self {
        Self::monomial(BigRational::one(), &[(name, 1)])
    }

    pub fn monomial(coeff: BigRational, powers: &[(&str, i32)]) -> Self {
        let names: Vec<&str> = powers.iter().map(|(n, _)| *n).collect();
        let vars = Vars::new(&names);
        let mut e: Exponents = SmallVec::from_elem(0, vars.len());
        for (name, pow) in powers {
            e[vars.index_of(name).unwrap()] += pow;
        }
        Self::from_terms(vars, std::iter::once((e, coeff)))
    }

    /// Builds a polynomial from raw terms; zero coefficients are dropped,
    /// repeated exponents summed and unused symbols removed.
    pub fn from_terms<I>(vars: Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigRational)>,
    {
        let mut map: BTreeMap<Exponents, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length must match symbol count");
            if c.is_zero() {
                continue;
            }
            match map.entry(e) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += c;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        LaurentPoly { vars, terms: map }.trimmed()
    }

    pub(crate) fn from_sorted_map(vars: Vars, terms: BTreeMap<Exponents, BigRational>) -> Self {
        LaurentPoly { vars, terms }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        let nv = self.vars.len();
        if nv == 0 {
            return self;
        }
        let used: Vec<bool> = (0..nv)
            .map(|i| self.terms.keys().any(|e| e[i] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let keep: Vec<usize> = (0..nv).filter(|&i| used[i]).collect();
        let names: Vec<&String> = keep.iter().map(|&i| &self.vars.0[i]).collect();
        let vars = Vars::new(&names);
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect::<Exponents>(), c))
            .collect();
        LaurentPoly { vars, terms }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
            && self.terms.len() == 1
            && self.terms.values().next().is_some_and(|c| c.is_one())
    }

    /// Returns the value if the polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.vars.is_empty() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Exponent vector re-expressed over a superset of our symbols.
    pub(crate) fn terms_over(&self, target: &Vars) -> Vec<(Exponents, &BigRational)> {
        if &self.vars == target {
            return self.terms.iter().map(|(e, c)| (e.clone(), c)).collect();
        }
        let emb = self.vars.embedding(target);
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut out: Exponents = SmallVec::from_elem(0, target.len());
                for (i, &pos) in emb.iter().enumerate() {
                    out[pos] = e[i];
                }
                (out, c)
            })
            .collect()
    }

    /// Leading term under graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Exponents, &BigRational)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    /// Componentwise minimum exponent over all terms (zero vector if empty).
    pub fn min_exponents(&self) -> Exponents {
        let mut m: Exponents = SmallVec::from_elem(0, self.vars.len());
        let mut first = true;
        for e in self.terms.keys() {
            for i in 0..e.len() {
                m[i] = if first { e[i] } else { m[i].min(e[i]) };
            }
            first = false;
        }
        m
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power, negative exponents allowed for monomials only.
    pub fn powi(&self, exp: i32) -> Result<Self> {
        if exp >= 0 {
            return Ok(self.pow(exp as u32));
        }
        Ok(self.monomial_inverse()?.pow(exp.unsigned_abs()))
    }

    fn monomial_inverse(&self) -> Result<Self> {
        if !self.is_monomial() {
            return Err(Error::NotInvertible);
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let inv: Exponents = e.iter().map(|x| -x).collect();
        Ok(Self::from_terms(self.vars.clone(), std::iter::once((inv, c.recip()))))
    }

    /// Evaluates at a rational point. A zero value under a negative exponent
    /// is reported as a pole.
    pub fn eval(&self, value_of: &dyn Fn(&str) -> Option<BigRational>) -> Result<BigRational> {
        let values: Vec<BigRational> = self
            .vars
            .names()
            .iter()
            .map(|name| value_of(name).ok_or_else(|| Error::Unassigned(name.clone())))
            .collect::<Result<_>>()?;
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in values.iter().zip(e.iter()) {
                if k < 0 && x.is_zero() {
                    return Err(Error::Pole);
                }
                term *= num_traits::pow::Pow::pow(x, k);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Ring homomorphism sending each listed symbol to the given polynomial;
    /// other symbols are left alone.
    pub fn substitute(&self, images: &[(&str, &LaurentPoly)]) -> Result<Self> {
        if images.iter().all(|(name, _)| self.vars.index_of(name).is_none()) {
            return Ok(self.clone());
        }
        let nv = self.vars.len();
        let image_of: Vec<Option<&LaurentPoly>> = self
            .vars
            .names()
            .iter()
            .map(|name| images.iter().find(|(n, _)| n == name).map(|(_, p)| *p))
            .collect();
        let mut power_cache: Vec<BTreeMap<i32, LaurentPoly>> = vec![BTreeMap::new(); nv];
        let mut acc = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut powers: Vec<(&str, i32)> = Vec::new();
            let mut factor = LaurentPoly::constant(c.clone());
            for i in 0..nv {
                match image_of[i] {
                    None => {
                        if e[i] != 0 {
                            powers.push((self.vars.0[i].as_str(), e[i]));
                        }
                    }
                    Some(img) => {
                        if e[i] != 0 {
                            if !power_cache[i].contains_key(&e[i]) {
                                let pw = img.powi(e[i])?;
                                power_cache[i].insert(e[i], pw);
                            }
                            factor = &factor * &power_cache[i][&e[i]];
                        }
                    }
                }
            }
            if !powers.is_empty() {
                factor = &factor * &LaurentPoly::monomial(BigRational::one(), &powers);
            }
            acc = &acc + &factor;
        }
        Ok(acc)
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        let vars = self.vars.union(&other.vars);
        let mut map: BTreeMap<Exponents, BigRational> = BTreeMap::new();
        for (e, c) in self.terms_over(&vars) {
            map.insert(e, c.clone());
        }
        for (e, c) in other.terms_over(&vars) {
            let c = if negate_other { -c.clone() } else { c.clone() };
            match map.entry(e) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += c;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        LaurentPoly::from_sorted_map(vars, map)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let vars = self.vars.union(&other.vars);
        let a = self.terms_over(&vars);
        let b = other.terms_over(&vars);
        let mut map: BTreeMap<Exponents, BigRational> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Exponents = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                let c = *ca * *cb;
                match map.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += c;
                    }
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly::from_sorted_map(vars, map)
    }

    /// Renders the terms in descending graded-lexicographic order with
    /// integer (or `a/b`) coefficients, e.g. `-p^2 - 1`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Exponents, &BigRational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| grlex_cmp(b.0, a.0));
        let mut out = String::new();
        for (idx, (e, c)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let mono: Vec<String> = self
                .vars
                .names()
                .iter()
                .zip(e.iter())
                .filter(|(_, &k)| k != 0)
                .map(|(name, &k)| if k == 1 { name.clone() } else { format!("{name}^{k}") })
                .collect();
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.render())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.combine(rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.combine(rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.product(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
