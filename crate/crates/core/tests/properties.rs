mod common;

use std::collections::BTreeSet;

use horn_enum::counter::{count_variant, CounterConfig, Method};
use horn_enum::families::{is_meet_closed, meet_closure, variant_member};
use horn_enum::theory::{self, Head, HornClause, VarSet};
use horn_enum::{encode, oracle, BitVector, VectorFamily, Variant};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn family_strategy(max_width: usize) -> impl Strategy<Value = VectorFamily> {
    (0..=max_width).prop_flat_map(|w| {
        prop::collection::vec(0..1u64 << w, 0..12)
            .prop_map(move |vs| VectorFamily::from_values(w, vs).unwrap())
    })
}

proptest! {
    #[test]
    fn closure_is_closed_and_extensive(f in family_strategy(5)) {
        let c = meet_closure(&f);
        prop_assert!(is_meet_closed(&c));
        prop_assert!(f.is_subset(&c));
        prop_assert_eq!(meet_closure(&c), c.clone());
        if is_meet_closed(&f) {
            prop_assert_eq!(c, f);
        }
    }

    #[test]
    fn closure_is_monotone(f in family_strategy(4), extra in prop::collection::vec(0..16u64, 0..4)) {
        let w = f.width();
        let g = VectorFamily::from_values(
            w,
            f.values().iter().copied().chain(extra.into_iter().map(|v| v & ((1 << w) - 1))),
        ).unwrap();
        prop_assert!(meet_closure(&f).is_subset(&meet_closure(&g)));
    }

    #[test]
    fn equation_text_round_trip(seed in any::<u64>(), n in 0usize..5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let eqs: BTreeSet<_> = common::random_equations(&mut rng, n).into_iter().collect();
        let text = theory::format_equations(&eqs);
        let back = theory::parse_equations(&text).unwrap();
        prop_assert_eq!(&back, &eqs);
        prop_assert_eq!(theory::format_equations(&back), text);
    }

    #[test]
    fn clause_text_round_trip(seed in any::<u64>(), n in 0usize..5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let cs: BTreeSet<_> = common::random_clauses(&mut rng, n).into_iter().collect();
        let back = theory::parse_clauses(&theory::format_clauses(&cs)).unwrap();
        prop_assert_eq!(back, cs);
    }

    #[test]
    fn model_sets_are_meet_closed(seed in any::<u64>(), n in 0usize..5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let eqs = common::random_equations(&mut rng, n);
        prop_assert!(is_meet_closed(&theory::models(&eqs, n).unwrap()));
        let cs = common::random_clauses(&mut rng, n);
        prop_assert!(is_meet_closed(&theory::models(&cs, n).unwrap()));
    }
}

/// Every Horn clause over `n` variables true on all members of `f`.
fn horn_envelope(f: &VectorFamily) -> Vec<HornClause> {
    let n = f.width();
    let mut out = vec![];
    for body_mask in 0..1u64 << n {
        let body: VarSet = (0..n).filter(|i| body_mask >> i & 1 == 1).collect();
        let heads = (0..n).map(Head::Var).chain([Head::False]);
        for head in heads {
            if let Some(c) = HornClause::new(body.clone(), head) {
                if f.iter().all(|v| theory::Constraint::holds(&c, &v).unwrap()) {
                    out.push(c);
                }
            }
        }
    }
    out
}

// A family is a Horn model set iff it is meet-closed. The envelope is the
// strongest Horn theory containing the family, so the family is a model
// set exactly when the envelope's models give it back.
#[test]
fn horn_sets_are_exactly_meet_closed_families() {
    for n in 0..=3 {
        for mask in 0..1u64 << (1 << n) {
            let f = VectorFamily::from_mask(n, mask);
            let is_model_set = theory::models(&horn_envelope(&f), n).unwrap() == f;
            assert_eq!(is_model_set, is_meet_closed(&f), "n = {n}, {f}");
        }
    }
}

#[test]
fn encoding_counts_match_brute_force() {
    let cfg = CounterConfig::sequential();
    for n in 0..=4 {
        for v in Variant::ALL {
            let dpll = count_variant(n, v, Method::Dpll, &cfg).unwrap().count;
            let brute = oracle::brute_count(n, v).unwrap();
            assert_eq!(dpll, BigUint::from(brute), "{v}({n})");
        }
    }
}

#[test]
fn variant_containment() {
    for n in 0..=4 {
        let sets: Vec<BTreeSet<Vec<u64>>> = Variant::ALL
            .iter()
            .map(|&v| {
                oracle::enumerate_families(n, v)
                    .unwrap()
                    .into_iter()
                    .map(|f| f.values().to_vec())
                    .collect()
            })
            .collect();
        let [h, h0, h1, h01] = [&sets[0], &sets[1], &sets[2], &sets[3]];
        assert!(h.is_subset(h0) && h.is_subset(h1));
        assert!(h0.is_subset(h01) && h1.is_subset(h01));
        assert_eq!(h.len() as u64, oracle::brute_count(n, Variant::H).unwrap());
        for f in oracle::enumerate_families(n, Variant::H01).unwrap() {
            assert!(variant_member(&f, Variant::H01));
        }
    }
}

#[test]
fn all_false_satisfies_closure_clauses() {
    for n in 1..=6 {
        let c = encode(n, Variant::H01).unwrap();
        assert!(c.all_clauses().all(|cl| cl.iter().any(|l| !l.is_pos())));
    }
}

#[test]
fn empty_vector_family() {
    let f = VectorFamily::new(0, [BitVector::zeros(0)]).unwrap();
    assert_eq!(f.len(), 1);
    assert!(variant_member(&f, Variant::H));
}
