//! Reflexive candidate encoding and the catalog of valid structures.
//!
//! A candidate on `n` elements has its diagonal fixed. The `k = n(n-1)`
//! off-diagonal cells of `≼₁`, row-major and skipping the diagonal, occupy
//! the low `k` bits of the code; those of `≼₂` occupy the next `k` bits.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::axioms::axioms_hold;
use crate::biposet::Diamond;
use crate::error::{Error, Result};
use crate::relation::Rel;

pub const MAX_ENUM_N: usize = 4;

pub fn off_diagonal_cells(n: usize) -> usize {
    n * n.saturating_sub(1)
}

/// Number of reflexive candidates on `n` elements.
pub fn candidate_count(n: usize) -> u64 {
    1u64 << (2 * off_diagonal_cells(n))
}

fn decode_rel(n: usize, bits: u64) -> Rel {
    let mut rows = [0u64; MAX_ENUM_N];
    let mut t = 0;
    for (i, row) in rows[..n].iter_mut().enumerate() {
        *row |= 1 << i;
        for j in (0..n).filter(|&j| j != i) {
            if bits >> t & 1 == 1 {
                *row |= 1 << j;
            }
            t += 1;
        }
    }
    Rel::from_row_masks(n, &rows[..n])
}

/// Panics unless `1 ≤ n ≤ MAX_ENUM_N`.
pub fn decode(n: usize, code: u64) -> Diamond {
    assert!((1..=MAX_ENUM_N).contains(&n), "decode supports 1..={MAX_ENUM_N} elements");
    let k = off_diagonal_cells(n);
    let mask = (1u64 << k) - 1;
    Diamond::new(decode_rel(n, code & mask), decode_rel(n, code >> k & mask)).expect("same dimension")
}

/// Inverse of [`decode`]. Diagonal cells are ignored.
pub fn encode(d: &Diamond) -> u64 {
    let n = d.n();
    let k = off_diagonal_cells(n);
    let mut code = 0u64;
    for (shift, r) in [(0, d.r1()), (k, d.r2())] {
        let mut t = 0;
        for i in 0..n {
            let row = r.row_mask(i);
            for j in (0..n).filter(|&j| j != i) {
                code |= (row >> j & 1) << (shift + t);
                t += 1;
            }
        }
    }
    code
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if (1..=MAX_ENUM_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::Usage(format!("enumeration size must be in 1..={MAX_ENUM_N}, got {n}")))
    }
}

/// Codes of all valid structures on `n` elements, ascending.
pub fn catalog(n: usize) -> Result<&'static [u64]> {
    static CATALOGS: [OnceLock<Vec<u64>>; MAX_ENUM_N] = [const { OnceLock::new() }; MAX_ENUM_N];
    check_n(n)?;
    Ok(CATALOGS[n - 1].get_or_init(|| scan(n)))
}

/// Recomputes the catalog without the cache, on the current rayon pool.
pub fn scan_catalog(n: usize) -> Result<Vec<u64>> {
    check_n(n)?;
    Ok(scan(n))
}

fn scan(n: usize) -> Vec<u64> {
    (0..candidate_count(n)).into_par_iter().filter(|&code| axioms_hold(&decode(n, code))).collect()
}

/// Every valid structure on `n` elements in ascending code order.
pub fn enumerate_biposets(n: usize) -> Result<impl Iterator<Item = Diamond>> {
    let codes = catalog(n)?;
    Ok(codes.iter().map(move |&c| decode(n, c)))
}
