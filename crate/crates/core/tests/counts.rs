use std::collections::HashSet;

use ly_polyid::freealg::{canonical_labels, count_types, monomial_count, types_of_degree};
use ly_polyid::liftgen::{generate, lambda};
use ly_polyid::perm::all_perms;
use num_rational::Ratio;

#[test]
fn type_counts_through_degree_twelve() {
    let bt = [1, 1, 2, 5, 13, 38, 113, 354, 1128, 3688, 12229, 41161];
    let b = [1, 1, 1, 2, 3, 6, 11, 23, 46, 98, 207, 451];
    let t = [1, 0, 1, 0, 2, 0, 6, 0, 19, 0, 67, 0];
    let m = [0, 0, 0, 3, 8, 32, 96, 331, 1063, 3590, 11955, 40710];
    for n in 1..=12 {
        let got = count_types(n).unwrap();
        // The single leaf is counted as both binary and ternary.
        assert_eq!(got, (bt[n - 1], b[n - 1], t[n - 1], m[n - 1]), "degree {n}");
    }
}

#[test]
fn enumeration_agrees_with_counts() {
    for n in 1..=8 {
        assert_eq!(types_of_degree(n).unwrap().len() as u128, count_types(n).unwrap().0);
    }
}

/// Counts distinct canonical labelings directly.
fn brute_force_mu(n: usize) -> u128 {
    let perms = all_perms(n);
    types_of_degree(n)
        .unwrap()
        .types()
        .iter()
        .map(|t| {
            let seen: HashSet<Vec<u8>> = perms.iter().map(|p| canonical_labels(&t.tree, p.images()).0).collect();
            seen.len() as u128
        })
        .sum()
}

#[test]
fn monomial_counts_match_orbit_enumeration() {
    for n in 1..=7 {
        assert_eq!(monomial_count(n).unwrap(), brute_force_mu(n), "degree {n}");
    }
}

#[test]
fn monomial_counts_match_generating_function() {
    // F = x + F^2/2 + F^3/2 as exponential generating functions.
    let max = 10;
    let mut a = vec![Ratio::<i128>::from_integer(0); max + 1];
    a[1] = 1.into();
    for n in 2..=max {
        let mut s = Ratio::from_integer(0);
        for i in 1..n {
            s += a[i] * a[n - i] / 2;
        }
        for i in 1..n {
            for j in 1..n - i {
                s += a[i] * a[j] * a[n - i - j] / 2;
            }
        }
        a[n] = s;
    }
    for n in 1..=max {
        let fact: i128 = (1..=n as i128).product();
        let mu = a[n] * fact;
        assert_eq!(mu.to_integer() as u128, monomial_count(n).unwrap(), "degree {n}");
        assert!(mu.is_integer());
    }
}

#[test]
fn monomial_counts_in_degrees_five_to_eight() {
    let got: Vec<u128> = (5..=8).map(|n| monomial_count(n).unwrap()).collect();
    assert_eq!(got, [510, 7245, 126630, 2609145]);
}

#[test]
fn lambda_formula() {
    let expected = [(3, 1), (4, 6), (5, 36), (6, 252), (7, 2016), (8, 18144)];
    for (n, l) in expected {
        assert_eq!(lambda(n), l);
    }
    for n in 4..=20u128 {
        let fact: u128 = (1..=n + 1).product();
        assert_eq!(lambda(n as usize) * 20, fact);
    }
}

#[test]
fn lambda_recurrence() {
    // Degree 5 also holds the seed h, so the recurrence starts at degree 6.
    for n in 6..=20 {
        assert_eq!(lambda(n), n as u128 * (lambda(n - 1) + lambda(n - 2)), "degree {n}");
    }
    assert_eq!(lambda(5), 5 * (lambda(4) + lambda(3)) + 1);
}

#[test]
fn generated_constructions_match_lambda() {
    for n in 3..=7 {
        assert_eq!(generate(n).unwrap().construction_count() as u128, lambda(n), "degree {n}");
    }
}
