use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::{self, ZPoly};
use super::poly::{grlex_cmp, Exponents, LaurentPoly, Vars};
use crate::error::{Error, Result};

/// Quotient of two polynomials in canonical form.
///
/// Canonical means: numerator and denominator have integer coefficients and
/// non-negative exponents, share no common factor (monomials and integer
/// content included), and the denominator's graded-lexicographic leading
/// coefficient is positive. Equal fractions therefore have identical
/// representations and `==` is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

fn to_zpoly(p: &LaurentPoly, vars: &Vars) -> ZPoly {
    let mut terms: Vec<(Exponents, BigInt)> = p
        .terms_over(vars)
        .into_iter()
        .map(|(e, c)| {
            debug_assert!(c.is_integer());
            (e, c.numer().clone())
        })
        .collect();
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    ZPoly { nvars: vars.len(), terms }
}

fn from_zpoly(z: &ZPoly, vars: &Vars) -> LaurentPoly {
    let map: BTreeMap<Exponents, BigRational> = z
        .terms
        .iter()
        .map(|(e, c)| (e.clone(), BigRational::from_integer(c.clone())))
        .collect();
    LaurentPoly::from_sorted_map(vars.clone(), map)
}

/// grlex leading coefficient sign of an integer polynomial.
fn grlex_lc_negative(z: &ZPoly) -> bool {
    z.terms
        .iter()
        .max_by(|a, b| grlex_cmp(&a.0, &b.0))
        .is_some_and(|(_, c)| c.is_negative())
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFun { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(c.into()))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(LaurentPoly::var(name))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::new(p, LaurentPoly::one()).expect("denominator is one")
    }

    /// Builds the canonical form of `num / den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let vars = num.vars().union(den.vars());
        // clear rational coefficients
        let mut l = BigInt::one();
        for c in num.terms().values().chain(den.terms().values()) {
            l = l.lcm(c.denom());
        }
        let scale = BigRational::from_integer(l);
        let num = num.scale(&scale);
        let den = den.scale(&scale);
        // move monomial parts so both sides have non-negative exponents
        let mn = embed(&num.min_exponents(), num.vars(), &vars);
        let md = embed(&den.min_exponents(), den.vars(), &vars);
        let nz = to_zpoly(&num, &vars);
        let dz = to_zpoly(&den, &vars);
        let shift_n: Exponents = mn.iter().zip(md.iter()).map(|(a, b)| -(*a.min(b))).collect();
        let nz = nz.shift(&shift_n);
        let dz = dz.shift(&shift_n);
        Ok(Self::reduce(nz, dz, &vars))
    }

    /// Divides out the gcd and fixes the sign.
    fn reduce(nz: ZPoly, dz: ZPoly, vars: &Vars) -> Self {
        let g = gcd::gcd(&nz, &dz);
        let (nz, dz) = if g.is_one() {
            (nz, dz)
        } else {
            (nz.exact_div(&g).expect("gcd divides"), dz.exact_div(&g).expect("gcd divides"))
        };
        Self::finish(nz, dz, vars)
    }

    fn finish(nz: ZPoly, dz: ZPoly, vars: &Vars) -> Self {
        let (nz, dz) = if grlex_lc_negative(&dz) { (nz.neg(), dz.neg()) } else { (nz, dz) };
        RatFun { num: from_zpoly(&nz, vars), den: from_zpoly(&dz, vars) }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    fn common_vars(&self, other: &Self) -> Vars {
        self.num
            .vars()
            .union(self.den.vars())
            .union(&other.num.vars().union(other.den.vars()))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let vars = self.num.vars().union(self.den.vars());
        let nz = to_zpoly(&self.den, &vars);
        let dz = to_zpoly(&self.num, &vars);
        Ok(Self::finish(nz, dz, &vars))
    }

    pub fn pow(&self, exp: i32) -> Result<Self> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let mut result = RatFun::one();
        let mut b = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(result)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    fn sum(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        if self.den.is_one() && other.den.is_one() {
            let num = if negate { &self.num - &other.num } else { &self.num + &other.num };
            return RatFun { num, den: LaurentPoly::one() };
        }
        let vars = self.common_vars(other);
        let a = to_zpoly(&self.num, &vars);
        let b = to_zpoly(&self.den, &vars);
        let mut c = to_zpoly(&other.num, &vars);
        if negate {
            c = c.neg();
        }
        let d = to_zpoly(&other.den, &vars);
        if b == d {
            let n = a.add(&c);
            if n.is_zero() {
                return Self::zero();
            }
            return Self::reduce(n, b, &vars);
        }
        let g = gcd::gcd(&b, &d);
        let b1 = b.exact_div(&g).expect("gcd divides");
        let d1 = d.exact_div(&g).expect("gcd divides");
        let t = a.mul(&d1).add(&c.mul(&b1));
        if t.is_zero() {
            return Self::zero();
        }
        let h = gcd::gcd(&t, &g);
        let num = t.exact_div(&h).expect("gcd divides");
        let den = b1.mul(&d.exact_div(&h).expect("gcd divides"));
        Self::finish(num, den, &vars)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFun { num: &self.num * &other.num, den: LaurentPoly::one() };
        }
        let vars = self.common_vars(other);
        let a = to_zpoly(&self.num, &vars);
        let b = to_zpoly(&self.den, &vars);
        let c = to_zpoly(&other.num, &vars);
        let d = to_zpoly(&other.den, &vars);
        let g1 = gcd::gcd(&a, &d);
        let g2 = gcd::gcd(&c, &b);
        let (a, d) = if g1.is_one() { (a, d) } else { (a.exact_div(&g1).unwrap(), d.exact_div(&g1).unwrap()) };
        let (c, b) = if g2.is_one() { (c, b) } else { (c.exact_div(&g2).unwrap(), b.exact_div(&g2).unwrap()) };
        Self::finish(a.mul(&c), b.mul(&d), &vars)
    }

    /// Applies a ring homomorphism on the parameters to numerator and
    /// denominator and renormalizes.
    pub fn substitute(&self, images: &[(&str, &LaurentPoly)]) -> Result<Self> {
        let num = self.num.substitute(images)?;
        let den = self.den.substitute(images)?;
        RatFun::new(num, den)
    }

    /// Evaluates the canonical form at a rational point. Because common
    /// factors are already cancelled, a removable singularity evaluates to its
    /// limit; a vanishing denominator is a genuine pole.
    pub fn eval_limit(&self, value_of: &dyn Fn(&str) -> Option<BigRational>) -> Result<BigRational> {
        let d = self.den.eval(value_of)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(value_of)? / d)
    }

    /// Canonical rendering: `num` alone when the denominator is 1, otherwise
    /// `(num)/(den)`.
    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }
}

fn embed(e: &Exponents, from: &Vars, to: &Vars) -> Exponents {
    let mut out = Exponents::from_elem(0, to.len());
    for (i, name) in from.names().iter().enumerate() {
        out[to.index_of(name).unwrap()] = e[i];
    }
    out
}

/// `num/den` normalized; see [`RatFun::new`].
pub fn ratfun_normalize(num: LaurentPoly, den: LaurentPoly) -> Result<RatFun> {
    RatFun::new(num, den)
}

/// Evaluates `f` at the assigned rational values, cancelling removable
/// singularities first.
pub fn ratfun_eval_limit(f: &RatFun, assignments: &[(&str, BigRational)]) -> Result<BigRational> {
    f.eval_limit(&|name| assignments.iter().find(|(n, _)| *n == name).map(|(_, v)| v.clone()))
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({})", self.render())
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        self.sum(rhs, false)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self.sum(rhs, true)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        self.product(rhs)
    }
}

/// Panics on division by zero; use [`RatFun::checked_div`] otherwise.
impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}
