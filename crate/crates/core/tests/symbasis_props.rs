use std::collections::BTreeSet;

use proptest::prelude::*;
use staircase_core::admissible::admissible_partitions;
use staircase_core::algebra::RatFun;
use staircase_core::partitions::{decreasing_reorder, partitions_of, staircase};
use staircase_core::symbasis::{
    collect_to_m, expand_m, jacobi_trudi, kostka_is_unitriangular, lr_coefficient, schur_in_m, schur_product_support,
    schur_to_m, to_schur, KostkaTable,
};
use staircase_core::{Error, Partition};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn kostka_unitriangular() {
    for w in 0..=9 {
        assert!(kostka_is_unitriangular(w, w.max(1) as usize), "weight {w}");
    }
    let mut t = KostkaTable::new();
    assert_eq!(t.kostka(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
    assert_eq!(t.kostka(&p(&[3, 2]), &p(&[2, 2, 1])), 2);
}

#[test]
fn tableaux_agree_with_jacobi_trudi() {
    for n in 1..=4 {
        for w in 0..=10u32 {
            if n == 4 && w > 8 {
                continue;
            }
            for lambda in partitions_of(w, n) {
                let jt = collect_to_m(&jacobi_trudi(&lambda, n).unwrap()).unwrap();
                assert_eq!(jt, schur_in_m(&lambda, n).unwrap(), "{lambda} in {n} variables");
            }
        }
    }
}

#[test]
fn schur_round_trip() {
    for lambda in partitions_of(6, 3) {
        let m = schur_in_m(&lambda, 3).unwrap();
        let s = to_schur(&m).unwrap();
        assert_eq!(s.support(), [lambda.clone()].into_iter().collect::<BTreeSet<_>>());
        assert_eq!(schur_to_m(&s).unwrap(), m);
    }
}

#[test]
fn nonsymmetric_input_is_rejected() {
    let mut f = expand_m(&p(&[2, 1]), 3).unwrap();
    f.add_term([2u32, 1, 0].into_iter().collect(), RatFun::one());
    assert!(matches!(collect_to_m(&f), Err(Error::NotSymmetric(_))));
}

/// `c^lambda_{mu nu}` read off the Schur expansion of `s_mu s_nu`.
fn lr_by_product(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> RatFun {
    let a = schur_in_m(mu, n).unwrap().to_xpoly().unwrap();
    let b = schur_in_m(nu, n).unwrap().to_xpoly().unwrap();
    to_schur(&collect_to_m(&(&a * &b)).unwrap()).unwrap().get(lambda)
}

#[test]
fn lr_matches_products() {
    for (mu, nu) in [(p(&[2, 1]), p(&[2, 1])), (p(&[2]), p(&[1, 1])), (p(&[3, 1]), p(&[2]))] {
        let n = mu.length() + nu.length();
        for lambda in partitions_of(mu.weight() + nu.weight(), n) {
            let c = lr_coefficient(&lambda, &mu, &nu);
            assert_eq!(RatFun::from_int(c as i64), lr_by_product(&lambda, &mu, &nu, n), "{lambda} {mu} {nu}");
        }
    }
    assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
}

#[test]
fn row_sorted_skew_has_multiplicity_one() {
    let mut checked = 0;
    for w in 0..=8 {
        for lambda in partitions_of(w, w.max(1) as usize) {
            for wm in 0..=w {
                for mu in partitions_of(wm, lambda.len()) {
                    if !mu.contained_in(&lambda) {
                        continue;
                    }
                    let diff: Vec<i64> = (0..lambda.len()).map(|i| lambda.part(i) as i64 - mu.part(i) as i64).collect();
                    let nu = decreasing_reorder(&diff).unwrap();
                    assert_eq!(lr_coefficient(&lambda, &mu, &nu), 1, "{lambda} / {mu}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 500, "only {checked} pairs");
    assert_eq!(lr_coefficient(&p(&[3, 1]), &p(&[2]), &p(&[1, 1])), 1);
}

#[test]
fn staircase_power_support_is_admissible() {
    for n in 2..=4 {
        for m in 2..=4u32 {
            assert_eq!(schur_product_support(n, m), admissible_partitions(n, m).unwrap(), "n={n} m={m}");
        }
        // a single factor is just S_rho; the interval starts at m = 2
        let rho = staircase(n, 1).unwrap();
        assert_eq!(schur_product_support(n, 1), [rho].into_iter().collect());
    }
    assert_eq!(schur_product_support(2, 1), admissible_partitions(2, 1).unwrap());
    assert_ne!(schur_product_support(3, 1), admissible_partitions(3, 1).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lr_is_symmetric(a in 0usize..7, b in 0usize..7, c in 0usize..30) {
        let small: Vec<Partition> = (0..=3).flat_map(|w| partitions_of(w, 3)).map(|x| x.trimmed()).collect();
        let mu = &small[a % small.len()];
        let nu = &small[b % small.len()];
        let targets = partitions_of(mu.weight() + nu.weight(), 6);
        let lambda = &targets[c % targets.len()];
        prop_assert_eq!(lr_coefficient(lambda, mu, nu), lr_coefficient(lambda, nu, mu));
    }
}
