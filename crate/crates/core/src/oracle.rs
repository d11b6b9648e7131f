//! Brute-force ground truth for `n <= 4`: every subset of `{0,1}^n` is
//! tested for meet-closure directly. Also counts families up to permutation
//! of the variables.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::families::VectorFamily;
use crate::{parallel, Error, Result, Variant};

/// Largest `n` for full enumeration (2^16 families).
pub const ORACLE_CAP: usize = 4;

/// Nonisomorphic Moore family counts (H1 up to permutation) for
/// `n = 0..=4`, as published. Compared at warning level only.
pub const PUBLISHED_NONISOMORPHIC_H1: [u64; 5] = [1, 2, 5, 19, 184];

fn check_cap(n: usize) -> Result<()> {
    if n > ORACLE_CAP {
        return Err(Error::cap(format!(
            "brute-force enumeration over n = {n} exceeds the cap of {ORACLE_CAP}"
        )));
    }
    Ok(())
}

/// Family encoded as a mask over the `2^n` vectors: bit `v` is set when the
/// vector of value `v` is a member.
fn mask_is_member(n: usize, mask: u64, variant: Variant) -> bool {
    let top = (1u64 << n) - 1;
    if variant.requires_top() && mask >> top & 1 == 0 {
        return false;
    }
    if variant.requires_bottom() && n > 0 && mask & 1 == 0 {
        return false;
    }
    let mut rest = mask;
    while rest != 0 {
        let r = rest.trailing_zeros() as u64;
        rest &= rest - 1;
        let mut others = rest;
        while others != 0 {
            let s = others.trailing_zeros() as u64;
            others &= others - 1;
            if mask >> (r & s) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

fn family_space(n: usize) -> u64 {
    1u64 << (1u64 << n)
}

pub fn brute_count(n: usize, variant: Variant) -> Result<u64> {
    brute_count_with(n, variant, 0)
}

/// [`brute_count`] on `threads` workers (0 = default, 1 = sequential).
pub fn brute_count_with(n: usize, variant: Variant, threads: usize) -> Result<u64> {
    check_cap(n)?;
    let par = threads != 1;
    Ok(parallel::with_threads(threads, || {
        parallel::sum_range(par, family_space(n), |mask| {
            mask_is_member(n, mask, variant) as u64
        })
    }))
}

/// The families counted by [`brute_count`], ordered by their mask.
pub fn enumerate_families(n: usize, variant: Variant) -> Result<Vec<VectorFamily>> {
    check_cap(n)?;
    Ok(member_masks(n, variant, true)
        .into_iter()
        .map(|m| VectorFamily::from_mask(n, m))
        .collect())
}

fn member_masks(n: usize, variant: Variant, par: bool) -> Vec<u64> {
    parallel::filter_map_range(par, family_space(n), |mask| {
        mask_is_member(n, mask, variant).then_some(mask)
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// For each permutation, the image of every vector value: variable `i`
/// moves to position `perm[i]`.
fn permutation_tables(n: usize) -> Vec<Vec<u64>> {
    let bit = |v: u64, i: usize| v >> (n - 1 - i) & 1;
    permutations(n)
        .into_iter()
        .map(|perm| {
            (0..1u64 << n)
                .map(|v| (0..n).fold(0, |acc, i| acc | bit(v, i) << (n - 1 - perm[i])))
                .collect()
        })
        .collect()
}

/// Lexicographically least sorted member list over all permutations.
fn canonical_members(mask: u64, tables: &[Vec<u64>]) -> Vec<u64> {
    let members: Vec<u64> = (0..64).filter(|v| mask >> v & 1 == 1).collect();
    let mut best: Option<Vec<u64>> = None;
    let mut image = Vec::with_capacity(members.len());
    for t in tables {
        image.clear();
        image.extend(members.iter().map(|&v| t[v as usize]));
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image.clone());
        }
    }
    best.unwrap_or_default()
}

/// An isomorphism class of families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    /// Canonical member list (lexicographically least image).
    pub representative: Vec<u64>,
    pub size: u64,
}

/// Orbits of the variant's families under permutations of the variables,
/// sorted by representative.
pub fn orbits(n: usize, variant: Variant) -> Result<Vec<Orbit>> {
    check_cap(n)?;
    let tables = permutation_tables(n);
    let masks = member_masks(n, variant, true);
    let forms = parallel::filter_map_range(true, masks.len() as u64, |i| {
        Some(canonical_members(masks[i as usize], &tables))
    });
    let mut tally: HashMap<Vec<u64>, u64> = HashMap::new();
    for f in forms {
        *tally.entry(f).or_default() += 1;
    }
    let mut out: Vec<Orbit> = tally
        .into_iter()
        .map(|(representative, size)| Orbit {
            representative,
            size,
        })
        .collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(out)
}

pub fn nonisomorphic_count(n: usize, variant: Variant) -> Result<u64> {
    Ok(orbits(n, variant)?.len() as u64)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{is_meet_closed, variant_member};

    #[test]
    fn brute_examples() {
        assert_eq!(brute_count(2, Variant::H).unwrap(), 4);
        assert_eq!(brute_count(3, Variant::H1).unwrap(), 61);
        assert_eq!(brute_count(0, Variant::H01).unwrap(), 2);
        assert_eq!(brute_count(0, Variant::H).unwrap(), 1);
        assert_eq!(brute_count(0, Variant::H0).unwrap(), 2);
        assert_eq!(brute_count(0, Variant::H1).unwrap(), 1);
        assert!(matches!(brute_count(5, Variant::H), Err(Error::Resource { .. })));
    }

    #[test]
    fn sequential_matches_parallel() {
        for v in Variant::ALL {
            assert_eq!(brute_count_with(4, v, 1).unwrap(), brute_count_with(4, v, 0).unwrap());
        }
    }

    #[test]
    fn mask_check_agrees_with_family_check() {
        for n in 0..=3 {
            for mask in 0..family_space(n) {
                let f = VectorFamily::from_mask(n, mask);
                for v in Variant::ALL {
                    assert_eq!(mask_is_member(n, mask, v), variant_member(&f, v));
                }
                assert_eq!(mask_is_member(n, mask, Variant::H01), is_meet_closed(&f));
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let fams = enumerate_families(1, Variant::H1).unwrap();
        let got: Vec<String> = fams.iter().map(|f| f.to_string()).collect();
        assert_eq!(got, ["{1}", "{0, 1}"]);
        let got: Vec<String> = enumerate_families(2, Variant::H)
            .unwrap()
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(got, ["{00, 11}", "{00, 01, 11}", "{00, 10, 11}", "{00, 01, 10, 11}"]);
        let fams = enumerate_families(0, Variant::H).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].len(), 1);
    }

    #[test]
    fn permutation_tables_n2() {
        let t = permutation_tables(2);
        assert_eq!(t.len(), 2);
        assert_eq!(t[0], [0, 1, 2, 3]);
        assert_eq!(t[1], [0, 2, 1, 3]);
    }

    #[test]
    fn orbit_examples() {
        for v in Variant::ALL {
            assert_eq!(nonisomorphic_count(1, v).unwrap(), brute_count(1, v).unwrap());
        }
        let o = orbits(2, Variant::H).unwrap();
        assert_eq!(o.len(), 3);
        assert_eq!(o.iter().map(|o| o.size).collect::<Vec<_>>(), [1, 2, 1]);
    }
}
