#![allow(dead_code)]

use hochster_core::{Face, MonomialIdeal, MultiDegree, SimplicialComplex};
use proptest::prelude::*;

/// Ideals with `n ≤ max_n`, up to `max_gens` generators and exponents `≤ max_exp`.
pub fn ideal_strategy(
    max_n: usize,
    max_gens: usize,
    max_exp: u32,
) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::collection::vec(0..=max_exp, n), 0..=max_gens)
            .prop_filter_map("unit ideal", move |rows| {
                MonomialIdeal::from_exponents(n, &rows).ok()
            })
    })
}

pub fn squarefree_strategy(max_n: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    ideal_strategy(max_n, max_gens, 1)
}

/// Every `a` with `-depth ≤ a_j ≤ ρ_j`.
pub fn window(ideal: &MonomialIdeal, depth: i64) -> Vec<MultiDegree> {
    let rho = ideal.rho();
    let mut out = vec![Vec::new()];
    for &r in &rho {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-depth..=i64::from(r)).map(move |x| {
                    let mut v = p.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|v| MultiDegree::new(v).unwrap())
        .collect()
}

/// Random complex on `n` vertices from random facets.
pub fn complex_strategy(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        let top = 1u64 << n;
        proptest::collection::vec(0..top, 0..5).prop_map(move |facets| {
            SimplicialComplex::from_facets(n, facets.into_iter().map(Face::from_bits)).unwrap()
        })
    })
}
