#![allow(dead_code)]

use horn_enum::theory::{BinomialEquation, Head, HornClause, Monomial, VarSet};
use horn_enum::{CnfInstance, Lit};
use rand::Rng;

/// Model count by evaluating every assignment.
pub fn truth_table_count(cnf: &CnfInstance) -> u64 {
    let nv = cnf.num_vars();
    assert!(nv <= 20);
    (0..1u64 << nv)
        .filter(|a| {
            cnf.all_clauses().all(|c| {
                c.iter()
                    .any(|l| (a >> (l.var() - 1) & 1 == 1) == l.is_pos())
            })
        })
        .count() as u64
}

pub fn random_cnf(rng: &mut impl Rng, max_vars: u32, max_clauses: usize) -> CnfInstance {
    let nv = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(0..=max_clauses);
    let clauses = (0..m)
        .map(|_| {
            let len = rng.gen_range(1..=4);
            (0..len)
                .map(|_| {
                    let v = rng.gen_range(1..=nv);
                    if rng.gen_bool(0.5) {
                        Lit::pos(v)
                    } else {
                        Lit::neg(v)
                    }
                })
                .collect()
        })
        .collect();
    CnfInstance::new(nv, clauses).unwrap()
}

/// Incomparable unordered pairs, by checking coordinates one at a time.
pub fn incomparable_pairs_by_coordinates(n: usize) -> u64 {
    let mut ordered = 0u64;
    for r in 0..1u64 << n {
        for s in 0..1u64 << n {
            let r_below = (0..n).all(|i| (r >> i & 1) <= (s >> i & 1));
            let s_below = (0..n).all(|i| (s >> i & 1) <= (r >> i & 1));
            if !r_below && !s_below {
                ordered += 1;
            }
        }
    }
    ordered / 2
}

pub fn random_monomial(rng: &mut impl Rng, n: usize) -> Monomial {
    if rng.gen_ratio(1, 8) {
        Monomial::Zero
    } else {
        Monomial::Product((0..n).filter(|_| rng.gen_bool(0.4)).collect())
    }
}

pub fn random_equations(rng: &mut impl Rng, n: usize) -> Vec<BinomialEquation> {
    let k = rng.gen_range(0..=5);
    (0..k)
        .filter_map(|_| BinomialEquation::new(random_monomial(rng, n), random_monomial(rng, n)))
        .collect()
}

pub fn random_clauses(rng: &mut impl Rng, n: usize) -> Vec<HornClause> {
    let k = rng.gen_range(0..=5);
    (0..k)
        .filter_map(|_| {
            let body: VarSet = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            let head = if n == 0 || rng.gen_ratio(1, 5) {
                Head::False
            } else {
                Head::Var(rng.gen_range(0..n))
            };
            HornClause::new(body, head)
        })
        .collect()
}
