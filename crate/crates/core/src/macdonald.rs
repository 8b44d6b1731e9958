//! Macdonald polynomials in n variables as eigenvectors of the
//! Sekiguchi–Debiard operator `M_1`, built from divided differences.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::algebra::{LaurentPoly, RatFun};
use crate::error::{Error, Result};
use crate::partitions::{partitions_dominated_by, partitions_of, staircase, Partition};
use crate::symbasis::{collect_to_m, expand_m, MCoords, XExponents, XPoly};

/// `(f - f^{s_i}) / (x_i - x_{i+1})`, `i` 1-based.
pub fn divided_difference(f: &XPoly, i: usize) -> Result<XPoly> {
    let n = f.n();
    if i < 1 || i >= n {
        return Err(Error::Domain(format!("divided difference index {i} outside 1..{}", n.max(1) - 1)));
    }
    let (ia, ib) = (i - 1, i);
    let mut out = XPoly::zero(n);
    for (e, c) in f.terms() {
        let (a, b) = (e[ia], e[ib]);
        if a == b {
            continue;
        }
        let (hi, lo, coeff) = if a > b { (a, b, c.clone()) } else { (b, a, -c) };
        for j in 0..hi - lo {
            let mut g: XExponents = e.clone();
            g[ia] = hi - 1 - j;
            g[ib] = lo + j;
            out.add_term(g, coeff.clone());
        }
    }
    Ok(out)
}

/// `prod_{b in bs} (a - b)`.
pub fn r_product(a: &XPoly, bs: &[XPoly]) -> XPoly {
    bs.iter().fold(XPoly::one(a.n()), |acc, b| &acc * &(a - b))
}

/// `f(q x_1, x_2, ..., x_n) R(t x_1; X - x_1) ∂_1 ... ∂_{n-1}`.
pub fn sekiguchi_apply(f: &XPoly, n: usize) -> Result<XPoly> {
    if f.n() != n {
        return Err(Error::Domain(format!("polynomial has {} variables, expected {n}", f.n())));
    }
    let q = RatFun::var("q");
    let t = RatFun::var("t");
    let shifted = f.scale_variable(1, &q);
    let others: Vec<XPoly> = (2..=n).map(|j| XPoly::var(n, j, RatFun::one())).collect();
    let mut g = &shifted * &r_product(&XPoly::var(n, 1, t), &others);
    for i in 1..n {
        g = divided_difference(&g, i)?;
    }
    Ok(g)
}

/// `sum_i q^{v_i} t^{n-i}`.
pub fn eigenvalue(v: &[u32], n: usize) -> Result<RatFun> {
    if v.len() > n {
        return Err(Error::Domain(format!("vector of length {} in {n} variables", v.len())));
    }
    let mut acc = LaurentPoly::zero();
    for i in 0..n {
        let vi = v.get(i).copied().unwrap_or(0) as i32;
        acc = acc + LaurentPoly::monomial(BigRational::one(), &[("q", vi), ("t", (n - 1 - i) as i32)]);
    }
    Ok(RatFun::from_poly(acc))
}

/// How the parameters `(q, t)` are specialized before solving.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// Symbolic `q, t`.
    Generic,
    /// `q = p^-2, t = p^{2k-1}`.
    Staircase { k: u32 },
    /// `q = s^u, t = s^v`; the Jack limit is `s -> 1` with `alpha = u/v`.
    JackLimit { u: i64, v: i64 },
}

impl Specialization {
    /// Images of `q` and `t`, or `None` for the generic case.
    pub fn images(&self) -> Option<(LaurentPoly, LaurentPoly)> {
        let mono = |s: &str, e: i64| LaurentPoly::monomial(BigRational::one(), &[(s, e as i32)]);
        match *self {
            Specialization::Generic => None,
            Specialization::Staircase { k } => Some((mono("p", -2), mono("p", 2 * k as i64 - 1))),
            Specialization::JackLimit { u, v } => Some((mono("s", u), mono("s", v))),
        }
    }

    pub fn apply(&self, f: &RatFun) -> Result<RatFun> {
        match self.images() {
            None => Ok(f.clone()),
            Some((q, t)) => f.substitute(&[("q", &q), ("t", &t)]),
        }
    }

    /// Stable textual key, also accepted by `from_str`.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialization::Generic => write!(f, "qt"),
            Specialization::Staircase { k } => write!(f, "p:k={k}"),
            Specialization::JackLimit { u, v } => write!(f, "s:u={u},v={v}"),
        }
    }
}

impl FromStr for Specialization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad specialization `{s}`; expected qt, p:k=K or s:u=U,v=V"));
        let s = s.trim();
        if s == "qt" || s == "generic" {
            return Ok(Specialization::Generic);
        }
        if let Some(rest) = s.strip_prefix("p:k=") {
            let k: u32 = rest.parse().map_err(|_| bad())?;
            if k == 0 {
                return Err(bad());
            }
            return Ok(Specialization::Staircase { k });
        }
        if let Some(rest) = s.strip_prefix("s:u=") {
            let (u, v) = rest.split_once(",v=").ok_or_else(bad)?;
            let u: i64 = u.parse().map_err(|_| bad())?;
            let v: i64 = v.parse().map_err(|_| bad())?;
            if u == 0 || v <= 0 {
                return Err(bad());
            }
            return Ok(Specialization::JackLimit { u, v });
        }
        Err(bad())
    }
}

/// `P_lambda` over symbolic `(q, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacdonaldP {
    pub lambda: Partition,
    pub n: usize,
    pub coords: MCoords,
}

type SolvedKey = (Partition, usize, Specialization);

/// Memoizing solver. Columns of `M_1` are computed once over `(q, t)` and
/// shared by every specialization.
#[derive(Default)]
pub struct Macdonald {
    columns: Mutex<HashMap<(Partition, usize), Arc<MCoords>>>,
    solved: Mutex<HashMap<SolvedKey, Arc<MCoords>>>,
}

impl Macdonald {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide instance used by the free functions.
    pub fn global() -> &'static Macdonald {
        static GLOBAL: OnceLock<Macdonald> = OnceLock::new();
        GLOBAL.get_or_init(Macdonald::new)
    }

    /// Monomial coordinates of `m_mu M_1`.
    pub fn column(&self, mu: &Partition, n: usize) -> Result<Arc<MCoords>> {
        let key = (mu.padded(n)?, n);
        if let Some(c) = self.columns.lock().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let col = Arc::new(collect_to_m(&sekiguchi_apply(&expand_m(mu, n)?, n)?)?);
        self.columns.lock().unwrap().entry(key).or_insert(col.clone());
        Ok(col)
    }

    /// Coordinates of `P_lambda` under the given specialization.
    pub fn solve(&self, lambda: &Partition, n: usize, spec: &Specialization) -> Result<Arc<MCoords>> {
        if lambda.length() > n {
            return Err(Error::Domain(format!("{lambda} has more than {n} parts")));
        }
        let lambda = lambda.padded(n)?;
        let key = (lambda.clone(), n, spec.clone());
        if let Some(c) = self.solved.lock().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let support = partitions_dominated_by(&lambda, n);
        support
            .par_iter()
            .map(|mu| self.column(mu, n).map(|_| ()))
            .collect::<Result<Vec<()>>>()?;
        let columns: Vec<Arc<MCoords>> = support.iter().map(|mu| self.column(mu, n)).collect::<Result<_>>()?;
        let top = spec.apply(&eigenvalue(lambda.parts(), n)?)?;
        let mut u: Vec<RatFun> = Vec::with_capacity(support.len());
        let mut out = MCoords::new(n);
        for (idx, mu) in support.iter().enumerate() {
            if idx == 0 {
                u.push(RatFun::one());
                out.insert(mu, RatFun::one())?;
                continue;
            }
            let mut acc = RatFun::zero();
            for (nu_idx, col) in columns[..idx].iter().enumerate() {
                if u[nu_idx].is_zero() {
                    continue;
                }
                let entry = col.get(mu);
                if entry.is_zero() {
                    continue;
                }
                acc = &acc + &(&spec.apply(&entry)? * &u[nu_idx]);
            }
            let gap = &top - &spec.apply(&eigenvalue(mu.parts(), n)?)?;
            if gap.is_zero() {
                return Err(Error::DegenerateEigenvalue(mu.clone()));
            }
            let v = acc.checked_div(&gap)?;
            out.insert(mu, v.clone())?;
            u.push(v);
        }
        let out = Arc::new(out);
        self.solved.lock().unwrap().entry(key).or_insert(out.clone());
        Ok(out)
    }

    /// Seeds the solved table, e.g. from an on-disk cache.
    pub fn preload(&self, lambda: &Partition, n: usize, spec: &Specialization, coords: MCoords) -> Result<()> {
        let key = (lambda.padded(n)?, n, spec.clone());
        self.solved.lock().unwrap().insert(key, Arc::new(coords));
        Ok(())
    }

    /// Snapshot of every solved entry, sorted for deterministic output.
    pub fn solved_entries(&self) -> Vec<(Partition, usize, Specialization, Arc<MCoords>)> {
        let mut v: Vec<_> = self
            .solved
            .lock()
            .unwrap()
            .iter()
            .map(|((l, n, s), c)| (l.clone(), *n, s.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| (a.1, &a.0, a.2.key()).cmp(&(b.1, &b.0, b.2.key())));
        v
    }
}

pub fn macdonald_p(lambda: &Partition, n: usize) -> Result<MacdonaldP> {
    let coords = Macdonald::global().solve(lambda, n, &Specialization::Generic)?;
    Ok(MacdonaldP { lambda: lambda.padded(n)?, n, coords: (*coords).clone() })
}

pub fn macdonald_p_specialized(lambda: &Partition, n: usize, spec: &Specialization) -> Result<MCoords> {
    Ok((*Macdonald::global().solve(lambda, n, spec)?).clone())
}

/// `b_lambda = prod_cells (1 - q^a t^{l+1}) / (1 - q^{a+1} t^l)`.
pub fn b_coefficient(lambda: &Partition) -> RatFun {
    let conj = lambda.conjugate();
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    let one = LaurentPoly::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let a = (row as usize - j - 1) as i32;
            let l = (conj.part(j) as usize - i - 1) as i32;
            num = &num * &(&one - &LaurentPoly::monomial(BigRational::one(), &[("q", a), ("t", l + 1)]));
            den = &den * &(&one - &LaurentPoly::monomial(BigRational::one(), &[("q", a + 1), ("t", l)]));
        }
    }
    RatFun::new(num, den).expect("nonzero denominator")
}

/// `Q_lambda = b_lambda P_lambda`.
pub fn macdonald_q(lambda: &Partition, n: usize) -> Result<MCoords> {
    Ok(macdonald_p(lambda, n)?.coords.scale(&b_coefficient(lambda)))
}

/// Whether `2k rho` has a simple eigenvalue among partitions of its weight
/// once `q = p^-2, t = p^{2k-1}`.
pub fn eigenvalue_uniqueness_check(n: usize, k: u32) -> Result<bool> {
    let spec = Specialization::Staircase { k };
    let rho = staircase(n, 2 * k)?;
    let top = spec.apply(&eigenvalue(rho.parts(), n)?)?;
    for lambda in partitions_of(rho.weight(), n) {
        if lambda != rho && spec.apply(&eigenvalue(lambda.parts(), n)?)? == top {
            return Ok(false);
        }
    }
    Ok(true)
}
