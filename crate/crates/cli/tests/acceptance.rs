//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use staircase_cli::run;
use staircase_core::admissible::{admissible_partitions, admissible_recursive, omega_truncated, ZMono};
use staircase_core::algebra::{parse_ratfun, LaurentPoly, RatFun};
use staircase_core::hankel::{hankel_coefficients, hankel_coefficients_bruteforce, DEFAULT_BUDGET};
use staircase_core::jack::{jack_p, jack_q};
use staircase_core::macdonald::{
    divided_difference, eigenvalue, eigenvalue_uniqueness_check, macdonald_p, macdonald_q, r_product, Macdonald,
};
use staircase_core::partitions::{decreasing_reorder, dominance_leq, partitions_of, staircase};
use staircase_core::qdisc::{qdisc_build, shift_identity_holds, verify_admissible_support};
use staircase_core::symbasis::{lr_coefficient, schur_in_m, XPoly};
use staircase_core::Partition;

type Outcome = Result<String, String>;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e_order() -> Vec<Partition> {
    [&[4u32, 2][..], &[4, 1, 1], &[3, 3], &[3, 2, 1], &[2, 2, 2]].iter().map(|v| p(v)).collect()
}

fn criterion_1() -> Outcome {
    let mut times = Vec::new();
    for (n, k) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (4, 2)] {
        let start = Instant::now();
        let (ns, ks) = (n.to_string(), k.to_string());
        let out = run(["staircase", "--max-weight", "24", "verify", "staircase", "-n", &ns, "-k", &ks]);
        ensure(out.code == 0, || format!("({n},{k}) exit {}: {}{}", out.code, out.stdout, out.stderr))?;
        ensure(out.stdout.starts_with("PASS"), || format!("({n},{k}): {}", out.stdout))?;
        times.push(format!("({n},{k}) {:.2}s", start.elapsed().as_secs_f64()));
    }
    Ok(times.join(", "))
}

fn criterion_2() -> Outcome {
    let c = macdonald_q(&p(&[4, 2]), 3).map_err(|e| e.to_string())?;
    let m42 = parse_ratfun(
        "(1-t)^2*(1-t*q)^2*(1-t^2*q^2)*(1-t^2*q^3) / ((1-q)^2*(1-q^2)^2*(1-t*q^3)*(1-t*q^4))",
    )
    .unwrap();
    let m411 =
        parse_ratfun("(1-t)^3*(1-t*q)*(1-t^2*q^3)*(1-t^2*q^2) / ((1-q)^3*(1-q^2)*(1-t*q^4)*(1-q^3*t))").unwrap();
    ensure(c.get(&p(&[4, 2])) == m42, || format!("m42: {}", c.get(&p(&[4, 2])).render()))?;
    ensure(c.get(&p(&[4, 1, 1])) == m411, || format!("m411: {}", c.get(&p(&[4, 1, 1])).render()))?;
    Ok("m42 and m411".into())
}

fn criterion_3() -> Outcome {
    let err = |e: staircase_core::Error| e.to_string();
    let qj = jack_q(&p(&[4, 2]), 3, &q(-2, 1)).map_err(err)?;
    let got: Vec<_> = e_order().iter().map(|l| qj.get(l)).collect();
    let want = vec![q(1, 280), q(-1, 140), q(-1, 140), q(1, 140), q(-3, 140)];
    ensure(got == want, || format!("Q42 at -2: {got:?}"))?;
    ensure(qj.len() == 5, || "Q42 has extra terms".into())?;

    let d = qdisc_build(3, 1).map_err(err)?.m_at_p_equals_one().map_err(err)?;
    let got: Vec<_> = e_order().iter().map(|l| d.get(l)).collect();
    let want: Vec<_> = [-1, 2, 2, -2, 6].iter().map(|&v| q(v, 1)).collect();
    ensure(got == want && d.len() == 5, || format!("Disc1 at one: {got:?}"))?;

    let j = jack_p(&p(&[8, 4]), 3, &q(-2, 3)).map_err(err)?;
    let want: Vec<(Partition, BigRational)> = [
        (&[8u32, 4, 0][..], 1),
        (&[8, 3, 1], -4),
        (&[8, 2, 2], 6),
        (&[7, 5, 0], -4),
        (&[7, 4, 1], 12),
        (&[7, 3, 2], -8),
        (&[6, 6, 0], 6),
        (&[6, 5, 1], -8),
        (&[6, 4, 2], -22),
        (&[6, 3, 3], 48),
        (&[5, 5, 2], 48),
        (&[5, 4, 3], -36),
        (&[4, 4, 4], 90),
    ]
    .iter()
    .map(|(l, c)| (p(l), q(*c, 1)))
    .collect();
    let got: Vec<(Partition, BigRational)> = j.coords.iter().map(|(l, c)| (l.clone(), c.clone())).collect();
    ensure(got == want, || format!("P840: {got:?}"))?;
    Ok("Q42 at -2, Disc1 at one, P840 at -2/3".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let want: Vec<(Partition, BigRational)> = [
        (&[8u32, 4, 0][..], 1),
        (&[8, 3, 1], -4),
        (&[8, 2, 2], 3),
        (&[7, 5, 0], -4),
        (&[7, 4, 1], 12),
        (&[7, 3, 2], -8),
        (&[6, 6, 0], 3),
        (&[6, 5, 1], -8),
        (&[6, 4, 2], -22),
        (&[6, 3, 3], 24),
        (&[5, 5, 2], 24),
        (&[5, 4, 3], -36),
        (&[4, 4, 4], 15),
    ]
    .iter()
    .map(|(l, c)| (p(l), q(*c, 1)))
    .collect();
    let c = hankel_coefficients(3, 2).map_err(|e| e.to_string())?;
    let got: Vec<_> = c.iter().map(|(l, v)| (l.clone(), v.clone())).collect();
    ensure(got == want, || format!("bridge: {got:?}"))?;
    let b = hankel_coefficients_bruteforce(3, 2, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(b == c, || "brute force disagrees".into())?;
    let out = run(["staircase", "hankel", "-n", "3", "-k", "2", "--oracle"]);
    ensure(out.code == 0, || format!("cli exit {}", out.code))?;
    Ok(format!("13 terms, brute force agrees, {:.2}s", start.elapsed().as_secs_f64()))
}

fn criterion_5() -> Outcome {
    let f = [ZMono::new(vec![1], vec![1, -2]), ZMono::new(vec![1], vec![-2, 1])];
    let want = parse_ratfun("z1^3 + q*z1*z2 + q^3").unwrap().num().clone();
    for bound in 3..=10 {
        let s = omega_truncated(&["q"], 2, &f, &ZMono::new(vec![0], vec![3, 0]), bound).map_err(|e| e.to_string())?;
        ensure(s.to_poly() == want, || format!("bound {bound}: {:?}", s.to_poly()))?;
    }
    Ok("bounds 3..10".into())
}

fn series(num: &[i64], den: &[i64], len: usize) -> Vec<i64> {
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

fn den(minus: usize, plus: usize) -> Vec<i64> {
    let mut acc = vec![1i64];
    for f in std::iter::repeat_n([1i64, -1], minus).chain(std::iter::repeat_n([1, 1], plus)) {
        let mut next = vec![0; acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i] += a * f[0];
            next[i + 1] += a * f[1];
        }
        acc = next;
    }
    acc
}

fn criterion_6() -> Outcome {
    let forms = [(4usize, vec![1, 2, 7, 5, 1], den(4, 2)), (5, vec![1, 7, 39, 68, 61, 21, 3], den(5, 3))];
    for (n, num, d) in forms {
        let want = series(&num, &d, 7);
        let mut got = vec![1i64];
        for m in 1..=6 {
            got.push(admissible_partitions(n, m).map_err(|e| e.to_string())?.len() as i64);
        }
        ensure(got == want, || format!("n = {n}: {got:?} vs {want:?}"))?;
        let cli = run(["staircase", "admissible", "-n", &n.to_string(), "--series", "--bound", "6", "--method", "omega"]);
        let line: Vec<String> = want.iter().map(|v| v.to_string()).collect();
        ensure(cli.stdout.trim() == line.join(" "), || format!("omega series n = {n}: {}", cli.stdout))?;
    }
    Ok("n = 4, 5 for m = 0..6".into())
}

fn criterion_7() -> Outcome {
    for (n, k) in [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)] {
        let r = verify_admissible_support(n, k).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("({n},{k})"))?;
    }
    Ok("(2,1) (2,2) (3,1) (3,2) (4,1)".into())
}

fn dominance_axioms() -> Result<(), String> {
    for w in 0..=12 {
        let class = partitions_of(w, w.max(1) as usize);
        for a in &class {
            ensure(dominance_leq(a, a), || format!("reflexivity at {a}"))?;
            for b in &class {
                let ab = dominance_leq(a, b);
                ensure(!(ab && dominance_leq(b, a)) || a == b, || format!("antisymmetry {a} {b}"))?;
                if ab {
                    for c in &class {
                        ensure(!dominance_leq(b, c) || dominance_leq(a, c), || format!("transitivity {a} {b} {c}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn triangularity() -> Result<(), String> {
    let engine = Macdonald::new();
    for n in 1..=4 {
        for w in 0..=10 {
            for mu in partitions_of(w, n) {
                let col = engine.column(&mu, n).map_err(|e| e.to_string())?;
                ensure(col.iter().all(|(nu, _)| dominance_leq(nu, &mu)), || format!("column {mu}"))?;
                ensure(col.get(&mu) == eigenvalue(mu.parts(), n).unwrap(), || format!("diagonal {mu}"))?;
            }
        }
    }
    Ok(())
}

fn q_equals_t() -> Result<(), String> {
    let tq = LaurentPoly::var("q");
    for n in 1..=4 {
        for w in 0..=8 {
            for l in partitions_of(w, n) {
                let pl = macdonald_p(&l, n).map_err(|e| e.to_string())?;
                let at = pl.coords.try_map(|c| c.substitute(&[("t", &tq)])).map_err(|e| e.to_string())?;
                ensure(at == schur_in_m(&l, n).unwrap(), || format!("{l}, n = {n}"))?;
            }
        }
    }
    Ok(())
}

fn inversion() -> Result<(), String> {
    let qi = LaurentPoly::monomial(BigRational::one(), &[("q", -1)]);
    let ti = LaurentPoly::monomial(BigRational::one(), &[("t", -1)]);
    for n in 1..=3 {
        for w in 0..=8 {
            for l in partitions_of(w, n) {
                let pl = macdonald_p(&l, n).map_err(|e| e.to_string())?;
                let inv = pl.coords.try_map(|c| c.substitute(&[("q", &qi), ("t", &ti)])).map_err(|e| e.to_string())?;
                ensure(inv == pl.coords, || format!("{l}, n = {n}"))?;
            }
        }
    }
    Ok(())
}

fn result_identity() -> Result<(), String> {
    for n in 1..=5 {
        let a = XPoly::var(n, 1, RatFun::var("a"));
        let bs: Vec<XPoly> = (2..=n).map(|j| XPoly::var(n, j, RatFun::var("b"))).collect();
        let mut g = r_product(&a, &bs);
        for i in 1..n {
            g = divided_difference(&g, i).map_err(|e| e.to_string())?;
        }
        let mut s = LaurentPoly::zero();
        for i in 0..n {
            s = s + LaurentPoly::monomial(BigRational::one(), &[("a", i as i32), ("b", (n - 1 - i) as i32)]);
        }
        ensure(g == XPoly::constant(n, RatFun::from_poly(s)), || format!("n = {n}"))?;
    }
    Ok(())
}

fn uniqueness() -> Result<(), String> {
    for n in 2..=5 {
        for k in 1..=3 {
            ensure(eigenvalue_uniqueness_check(n, k).map_err(|e| e.to_string())?, || format!("n = {n}, k = {k}"))?;
        }
    }
    Ok(())
}

fn lr_multiplicity_one() -> Result<(), String> {
    for w in 0..=8 {
        for lambda in partitions_of(w, w.max(1) as usize) {
            for wm in 0..=w {
                for mu in partitions_of(wm, lambda.len()) {
                    if !mu.contained_in(&lambda) {
                        continue;
                    }
                    let diff: Vec<i64> = (0..lambda.len()).map(|i| lambda.part(i) as i64 - mu.part(i) as i64).collect();
                    let nu = decreasing_reorder(&diff).unwrap();
                    ensure(lr_coefficient(&lambda, &mu, &nu) == 1, || format!("{lambda} / {mu}"))?;
                }
            }
        }
    }
    Ok(())
}

fn recursive_construction() -> Result<(), String> {
    for n in 2..=5 {
        for m in 1..=4 {
            let a = admissible_recursive(n, m).map_err(|e| e.to_string())?;
            ensure(a == admissible_partitions(n, m).unwrap(), || format!("n = {n}, m = {m}"))?;
        }
    }
    Ok(())
}

fn descent() -> Result<(), String> {
    for n in 2..=4 {
        let rho = staircase(n, 1).unwrap();
        for m in 2..=4 {
            let lower = admissible_partitions(n, m - 1).unwrap();
            for l in admissible_partitions(n, m).unwrap() {
                let diff: Vec<i64> = (0..n).map(|i| l.part(i) as i64 - rho.part(i) as i64).collect();
                ensure(diff.iter().all(|&d| d >= 0), || format!("{l} - rho"))?;
                let mu = decreasing_reorder(&diff).unwrap().padded(n).unwrap();
                ensure(lower.contains(&mu), || format!("{l} -> {mu}"))?;
            }
        }
    }
    Ok(())
}

fn shift_identity() -> Result<(), String> {
    for (n, k) in [(2, 1), (3, 1), (2, 2)] {
        ensure(shift_identity_holds(n, k).map_err(|e| e.to_string())?, || format!("({n},{k})"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let suites: [(&str, fn() -> Result<(), String>); 10] = [
        ("dominance order", dominance_axioms),
        ("triangularity", triangularity),
        ("q = t", q_equals_t),
        ("inversion", inversion),
        ("result identity", result_identity),
        ("eigenvalue uniqueness", uniqueness),
        ("LR multiplicity one", lr_multiplicity_one),
        ("recursive construction", recursive_construction),
        ("descent", descent),
        ("shift identity", shift_identity),
    ];
    for (name, f) in suites {
        f().map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} suites", suites.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("staircase identity", criterion_1),
        ("Q42 monomial coefficients", criterion_2),
        ("Jack and discriminant tables", criterion_3),
        ("Hankel hyperdeterminant", criterion_4),
        ("Omega example", criterion_5),
        ("admissible series", criterion_6),
        ("Schur support", criterion_7),
        ("property suites", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match r {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
