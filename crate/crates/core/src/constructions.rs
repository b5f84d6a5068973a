//! New relation pairs from old ones: intersections, duals, and the powerset
//! and divisibility generators.

use crate::biposet::{BiPoset, Diamond, GroundSet};
use crate::error::{Error, Result};
use crate::relation::Rel;

/// Largest powerset exponent accepted by [`powerset_biposet`].
pub const POWERSET_MAX_K: u32 = 12;

/// Component-wise intersection of one or more relation pairs.
pub fn intersect_many(ds: &[Diamond]) -> Result<Diamond> {
    let (first, rest) = ds.split_first().ok_or(Error::EmptyInput("intersection needs at least one structure"))?;
    let mut r1 = first.r1().clone();
    let mut r2 = first.r2().clone();
    for d in rest {
        if d.n() != first.n() {
            return Err(Error::DimensionMismatch { expected: first.n(), found: d.n() });
        }
        r1 = r1.intersection(d.r1())?;
        r2 = r2.intersection(d.r2())?;
    }
    Diamond::new(r1, r2)
}

/// The dual pair: each component transposed.
pub fn dual(d: &Diamond) -> Diamond {
    Diamond::new(d.r1().transpose(), d.r2().transpose()).expect("transpose keeps dimension")
}

/// Same ground set, dual relation pair. The result is unvalidated.
pub fn dual_biposet(bp: &BiPoset) -> BiPoset {
    BiPoset::new(bp.ground().clone(), dual(bp.diamond())).expect("dual keeps dimension")
}

/// `(⊆, ⊆)` on all subsets of `{0..k-1}`, ordered by bitmask and labelled
/// `s<mask>`.
pub fn powerset_biposet(k: u32) -> Result<BiPoset> {
    powerset_biposet_capped(k, POWERSET_MAX_K)
}

pub fn powerset_biposet_capped(k: u32, max_k: u32) -> Result<BiPoset> {
    if k > max_k {
        return Err(Error::ResourceLimit { what: "powerset exponent", requested: k as u64, limit: max_k as u64 });
    }
    let n = 1usize << k;
    let subset = Rel::from_fn(n, |a, b| a & !b == 0);
    let ground = GroundSet::new((0..n).map(|m| format!("s{m}")))?;
    BiPoset::new(ground, Diamond::new(subset.clone(), subset)?)
}

/// `(≤, |)` on the given positive integers, in the given order.
pub fn naturals_biposet(values: &[u64]) -> Result<BiPoset> {
    if let Some(&z) = values.iter().find(|&&v| v == 0) {
        return Err(Error::InvalidGroundSet(format!("{z} is not a positive integer")));
    }
    let ground = GroundSet::new(values.iter().map(u64::to_string))?;
    let n = values.len();
    let le = Rel::from_fn(n, |i, j| values[i] <= values[j]);
    let divides = Rel::from_fn(n, |i, j| values[j].is_multiple_of(values[i]));
    BiPoset::new(ground, Diamond::new(le, divides)?)
}

/// `(≤, |)` on `{1..k}`.
pub fn divisibility_biposet(k: u64) -> Result<BiPoset> {
    if k == 0 {
        return Err(Error::EmptyInput("divisibility structure needs k ≥ 1"));
    }
    naturals_biposet(&(1..=k).collect::<Vec<_>>())
}
