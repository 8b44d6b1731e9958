//! Worked examples with their reference values, checked by `verify examples`.

use num_bigint::BigInt;
use num_rational::BigRational;

use staircase_core::admissible::{admissible_series, omega_truncated, ZMono};
use staircase_core::algebra::parse_ratfun;
use staircase_core::hankel::{hankel_coefficients, hankel_coefficients_bruteforce};
use staircase_core::jack::{jack_p, jack_q};
use staircase_core::macdonald::{macdonald_p, macdonald_q};
use staircase_core::qdisc::qdisc_build;
use staircase_core::{Partition, Result};

use crate::Check;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("literal partition")
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&a| q(a, 1)).collect()
}

pub const E_ORDER: [&[u32]; 5] = [&[4, 2], &[4, 1, 1], &[3, 3], &[3, 2, 1], &[2, 2, 2]];

pub const P840: [(&[u32], i64); 13] = [
    (&[8, 4], 1),
    (&[8, 3, 1], -4),
    (&[8, 2, 2], 6),
    (&[7, 5], -4),
    (&[7, 4, 1], 12),
    (&[7, 3, 2], -8),
    (&[6, 6], 6),
    (&[6, 5, 1], -8),
    (&[6, 4, 2], -22),
    (&[6, 3, 3], 48),
    (&[5, 5, 2], 48),
    (&[5, 4, 3], -36),
    (&[4, 4, 4], 90),
];

pub const HANKEL_3_2: [(&[u32], i64); 13] = [
    (&[8, 4], 1),
    (&[8, 3, 1], -4),
    (&[8, 2, 2], 3),
    (&[7, 5], -4),
    (&[7, 4, 1], 12),
    (&[7, 3, 2], -8),
    (&[6, 6], 3),
    (&[6, 5, 1], -8),
    (&[6, 4, 2], -22),
    (&[6, 3, 3], 24),
    (&[5, 5, 2], 24),
    (&[5, 4, 3], -36),
    (&[4, 4, 4], 15),
];

pub const Q42_M42: &str = "((1-t)/(1-q))^2*((1-t*q)/(1-q^2))^2*((1-t^2*q^2)/(1-t*q^3))*((1-t^2*q^3)/(1-t*q^4))";
pub const Q42_M411: &str = "((1-t)/(1-q))^3*((1-t*q)/(1-q^2))*((1-t^2*q^3)/(1-t*q^4))*((1-t^2*q^2)/(1-q^3*t))";

/// Taylor coefficients of `num / den`, lowest degree first; `den[0] = 1`.
pub fn taylor(num: &[i64], den: &[i64], len: usize) -> Vec<i64> {
    let mut out = vec![0i64; len];
    for i in 0..len {
        let mut v = num.get(i).copied().unwrap_or(0);
        for j in 1..=i.min(den.len() - 1) {
            v -= den[j] * out[i - j];
        }
        out[i] = v;
    }
    out
}

/// `(1 - t)^a (1 + t)^b` as a coefficient list.
pub fn binomial_den(a: usize, b: usize) -> Vec<i64> {
    let mul = |x: &[i64], y: &[i64]| {
        let mut out = vec![0; x.len() + y.len() - 1];
        for (i, u) in x.iter().enumerate() {
            for (j, v) in y.iter().enumerate() {
                out[i + j] += u * v;
            }
        }
        out
    };
    let mut acc = vec![1];
    for _ in 0..a {
        acc = mul(&acc, &[1, -1]);
    }
    for _ in 0..b {
        acc = mul(&acc, &[1, 1]);
    }
    acc
}

fn check(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> Check {
    match f() {
        Ok((passed, detail)) => Check { name: name.to_string(), n: None, k: None, passed, detail },
        Err(e) => Check { name: name.to_string(), n: None, k: None, passed: false, detail: format!("error: {e}") },
    }
}

fn table_detail(got: &[BigRational], want: &[BigRational]) -> (bool, String) {
    let render = |v: &[BigRational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    if got == want {
        (true, render(got))
    } else {
        (false, format!("got {}; expected {}", render(got), render(want)))
    }
}

pub fn run_examples() -> Vec<Check> {
    let mut out = Vec::new();

    out.push(check("macdonald-p2", || {
        let c = macdonald_p(&p(&[2]), 2)?.coords;
        let want = parse_ratfun("(1 + q)*(1 - t)/(1 - q*t)")?;
        let got = c.get(&p(&[1, 1]));
        Ok((c.get(&p(&[2])).is_one() && got == want, format!("m[1,1]: {}", got.render())))
    }));

    out.push(check("macdonald-q42", || {
        let c = macdonald_q(&p(&[4, 2]), 3)?;
        let ok = c.get(&p(&[4, 2])) == parse_ratfun(Q42_M42)? && c.get(&p(&[4, 1, 1])) == parse_ratfun(Q42_M411)?;
        Ok((ok, "m[4,2] and m[4,1,1] products".into()))
    }));

    out.push(check("jack-q42-alpha-minus-2", || {
        let c = jack_q(&p(&[4, 2]), 3, &q(-2, 1))?;
        let got: Vec<_> = E_ORDER.iter().map(|l| c.get(&p(l))).collect();
        Ok(table_detail(&got, &[q(1, 280), q(-1, 140), q(-1, 140), q(1, 140), q(-3, 140)]))
    }));

    out.push(check("disc-n3-at-one", || {
        let c = qdisc_build(3, 1)?.m_at_p_equals_one()?;
        let got: Vec<_> = E_ORDER.iter().map(|l| c.get(&p(l))).collect();
        Ok(table_detail(&got, &ints(&[-1, 2, 2, -2, 6])))
    }));

    out.push(check("jack-p840-alpha-minus-2/3", || {
        let c = jack_p(&p(&[8, 4]), 3, &q(-2, 3))?.coords;
        let got: Vec<_> = c.iter().map(|(_, v)| v.clone()).collect();
        let keys_ok = c.iter().map(|(l, _)| l.clone()).eq(P840.iter().map(|(l, _)| p(l).padded(3).unwrap()));
        let want: Vec<_> = P840.iter().map(|(_, v)| q(*v, 1)).collect();
        let (ok, d) = table_detail(&got, &want);
        Ok((ok && keys_ok, d))
    }));

    out.push(check("hankel-n3-k2", || {
        let c = hankel_coefficients(3, 2)?;
        let b = hankel_coefficients_bruteforce(3, 2, crate::DEFAULT_BUDGET)?;
        let got: Vec<_> = c.iter().map(|(_, v)| v.clone()).collect();
        let want: Vec<_> = HANKEL_3_2.iter().map(|(_, v)| q(*v, 1)).collect();
        let keys_ok = c.iter().map(|(l, _)| l.clone()).eq(HANKEL_3_2.iter().map(|(l, _)| p(l).padded(3).unwrap()));
        let (ok, d) = table_detail(&got, &want);
        Ok((ok && keys_ok && b == c, d))
    }));

    out.push(check("omega-two-factor", || {
        let f = [ZMono::new(vec![1], vec![1, -2]), ZMono::new(vec![1], vec![-2, 1])];
        let want = parse_ratfun("z1^3 + q*z1*z2 + q^3")?;
        let got = omega_truncated(&["q"], 2, &f, &ZMono::new(vec![0], vec![3, 0]), 3)?.to_poly();
        Ok((*want.num() == got, staircase_core::algebra::RatFun::from_poly(got).render()))
    }));

    out.push(check("admissible-series-n4", || {
        let got = admissible_series(4, 6)?;
        let want = taylor(&[1, 2, 7, 5, 1], &binomial_den(4, 2), 7);
        Ok((got.iter().map(|&x| x as i64).eq(want.iter().copied()), format!("{got:?}")))
    }));

    out.push(check("admissible-series-n5", || {
        let got = admissible_series(5, 6)?;
        let want = taylor(&[1, 7, 39, 68, 61, 21, 3], &binomial_den(5, 3), 7);
        Ok((got.iter().map(|&x| x as i64).eq(want.iter().copied()), format!("{got:?}")))
    }));

    out
}
