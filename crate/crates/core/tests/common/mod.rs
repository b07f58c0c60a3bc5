#![allow(dead_code)]

use keller_core::polyring::{rat, var_list, Monomial, PolyMap, Polynomial, Rational, Vars};
use proptest::prelude::*;

pub fn vars(n: usize) -> Vars {
    let names = ["x", "y", "z", "w"];
    var_list(&names[..n])
}

pub fn poly_from(vars: &Vars, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(vars, terms.iter().map(|(e, c)| (Monomial::from_exponents(e.clone()), rat(*c))))
}

pub fn terms(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), -5i64..=5), 0..=max_terms)
}

pub fn poly(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let v = vars(n);
    terms(n, max_deg, max_terms).prop_map(move |t| poly_from(&v, &t))
}

pub fn point(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-6i64..=6, 1i64..=4), n)
        .prop_map(|v| v.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect())
}

/// X_i + p_i(X_{i+1}, ..., X_n) with p_i of degree at most `deg` and no constant term.
pub fn triangular_map(n: usize, deg: u32) -> impl Strategy<Value = PolyMap> {
    let v = vars(n);
    prop::collection::vec(terms(n, deg, 3), n).prop_map(move |ts| {
        let comps = (0..n)
            .map(|i| {
                let filtered: Vec<(Vec<u32>, i64)> = ts[i]
                    .iter()
                    .filter_map(|(e, c)| {
                        let mut e = e.clone();
                        for k in e.iter_mut().take(i + 1) {
                            *k = 0;
                        }
                        (e.iter().sum::<u32>() >= 2).then_some((e, *c))
                    })
                    .collect();
                Polynomial::var_at(&v, i).try_add(&poly_from(&v, &filtered)).unwrap()
            })
            .collect();
        PolyMap::new(comps).unwrap()
    })
}
