//! Maps between structures: isotone maps, isomorphisms, isomorphism search
//! and self-duality.
//!
//! A map is isotone when it carries every chain `a ≼₁ b ≼₂ c` of the source
//! to a chain `f(a) ≼₁ f(b) ≼₂ f(c)` of the target. An isomorphism is a
//! bijection for which the chain condition holds in both directions.

use crate::biposet::{BiPoset, Diamond};
use crate::constructions::dual_biposet;
use crate::error::{Error, Result};
use crate::verdict::Verdict;

/// A total function `0..src_n → 0..dst_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mapping {
    img: Vec<usize>,
    dst_n: usize,
}

impl Mapping {
    pub fn new(img: Vec<usize>, dst_n: usize) -> Result<Self> {
        if let Some(&bad) = img.iter().find(|&&t| t >= dst_n) {
            return Err(Error::InvalidMapping(format!("image {bad} out of range for {dst_n} target elements")));
        }
        Ok(Mapping { img, dst_n })
    }

    pub fn identity(n: usize) -> Self {
        Mapping { img: (0..n).collect(), dst_n: n }
    }

    pub fn constant(src_n: usize, dst_n: usize, value: usize) -> Result<Self> {
        Mapping::new(vec![value; src_n], dst_n)
    }

    #[inline]
    pub fn src_n(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn dst_n(&self) -> usize {
        self.dst_n
    }

    pub fn img(&self) -> &[usize] {
        &self.img
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    pub fn is_bijective(&self) -> bool {
        if self.src_n() != self.dst_n {
            return false;
        }
        let mut seen = vec![false; self.dst_n];
        self.img.iter().all(|&t| !std::mem::replace(&mut seen[t], true))
    }

    pub fn inverse(&self) -> Option<Mapping> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.dst_n];
        for (i, &t) in self.img.iter().enumerate() {
            inv[t] = i;
        }
        Some(Mapping { img: inv, dst_n: self.src_n() })
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Mapping) -> Result<Mapping> {
        if self.dst_n != next.src_n() {
            return Err(Error::DimensionMismatch { expected: self.dst_n, found: next.src_n() });
        }
        Ok(Mapping { img: self.img.iter().map(|&t| next.img[t]).collect(), dst_n: next.dst_n })
    }
}

/// Why a map is not an isomorphism. Triples are the least one (in index
/// order) on which the chain biconditional fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsoFailure {
    NotBijective,
    /// Chain in the source whose image is not a chain.
    LostChain(usize, usize, usize),
    /// Non-chain in the source whose image is a chain.
    GainedChain(usize, usize, usize),
}

fn check_dims(f: &Mapping, src_n: usize, dst_n: usize) -> Result<()> {
    if f.src_n() != src_n {
        return Err(Error::DimensionMismatch { expected: src_n, found: f.src_n() });
    }
    if f.dst_n() != dst_n {
        return Err(Error::DimensionMismatch { expected: dst_n, found: f.dst_n() });
    }
    Ok(())
}

pub(crate) fn isotone_violation(f: &Mapping, src: &Diamond, dst: &Diamond) -> Option<(usize, usize, usize)> {
    let m = |i: usize| f.img[i];
    for a in 0..src.n() {
        for b in src.r1().successors(a) {
            if !dst.r1().get(m(a), m(b)) {
                // every c with b ≼₂ c violates; take the least
                if let Some(c) = src.r2().successors(b).next() {
                    return Some((a, b, c));
                }
                continue;
            }
            if let Some(c) = src.r2().successors(b).find(|&c| !dst.r2().get(m(b), m(c))) {
                return Some((a, b, c));
            }
        }
    }
    None
}

/// Forward chain preservation, with the least violating triple on failure.
pub fn is_isotone(f: &Mapping, src: &Diamond, dst: &Diamond) -> Result<Verdict<(usize, usize, usize)>> {
    check_dims(f, src.n(), dst.n())?;
    Ok(isotone_violation(f, src, dst).into())
}

pub(crate) fn iso_violation(f: &Mapping, src: &Diamond, dst: &Diamond) -> Option<IsoFailure> {
    if !f.is_bijective() {
        return Some(IsoFailure::NotBijective);
    }
    let n = src.n();
    let m = |i: usize| f.img[i];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let here = src.chain_at(a, b, c);
                if here != dst.chain_at(m(a), m(b), m(c)) {
                    return Some(if here { IsoFailure::LostChain(a, b, c) } else { IsoFailure::GainedChain(a, b, c) });
                }
            }
        }
    }
    None
}

/// Bijectivity plus the chain biconditional.
pub fn is_isomorphism(f: &Mapping, src: &BiPoset, dst: &BiPoset) -> Result<Verdict<IsoFailure>> {
    check_dims(f, src.n(), dst.n())?;
    Ok(iso_violation(f, src.diamond(), dst.diamond()).into())
}

type Signature = (usize, usize, usize, usize);

fn signatures(d: &Diamond) -> Vec<Signature> {
    let t1 = d.r1().transpose();
    let t2 = d.r2().transpose();
    (0..d.n()).map(|i| (d.r1().out_degree(i), t1.out_degree(i), d.r2().out_degree(i), t2.out_degree(i))).collect()
}

struct Search<'a> {
    src: &'a Diamond,
    dst: &'a Diamond,
    src_sig: Vec<Signature>,
    dst_sig: Vec<Signature>,
    img: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// Checks every triple over the assigned prefix that involves `i`.
    fn consistent(&self, i: usize) -> bool {
        let m = &self.img;
        for a in 0..=i {
            for b in 0..=i {
                for c in 0..=i {
                    if a != i && b != i && c != i {
                        continue;
                    }
                    if self.src.chain_at(a, b, c) != self.dst.chain_at(m[a], m[b], m[c]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn extend(&mut self, i: usize) -> bool {
        let n = self.src.n();
        if i == n {
            return true;
        }
        for t in 0..n {
            if self.used[t] || self.src_sig[i] != self.dst_sig[t] {
                continue;
            }
            self.img.push(t);
            self.used[t] = true;
            if self.consistent(i) && self.extend(i + 1) {
                return true;
            }
            self.used[t] = false;
            self.img.pop();
        }
        false
    }
}

pub(crate) fn find_iso(src: &Diamond, dst: &Diamond) -> Option<Mapping> {
    if src.n() != dst.n() {
        return None;
    }
    let mut s = Search {
        src,
        dst,
        src_sig: signatures(src),
        dst_sig: signatures(dst),
        img: Vec::with_capacity(src.n()),
        used: vec![false; dst.n()],
    };
    let mut a = s.src_sig.clone();
    let mut b = s.dst_sig.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    s.extend(0).then(|| Mapping { img: s.img, dst_n: dst.n() })
}

/// Backtracking search for an isomorphism. The first bijection found in
/// lexicographic image order is returned, so the result is the least
/// isomorphism.
pub fn find_isomorphism(src: &BiPoset, dst: &BiPoset) -> Option<Mapping> {
    find_iso(src.diamond(), dst.diamond())
}

/// An isomorphism from the structure onto its dual, if there is one.
pub fn self_dual_witness(bp: &BiPoset) -> Option<Mapping> {
    find_isomorphism(bp, &dual_biposet(bp))
}

/// `A ↦ X − A` on the bitmask-ordered powerset of a `k`-element set.
pub fn powerset_complement(k: u32) -> Mapping {
    let n = 1usize << k;
    Mapping { img: (0..n).map(|m| (n - 1) ^ m).collect(), dst_n: n }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{divisibility_biposet, dual, powerset_biposet};
    use crate::relation::Rel;

    fn bp(r1: Rel, r2: Rel) -> BiPoset {
        BiPoset::with_standard_labels(Diamond::new(r1, r2).unwrap()).unwrap()
    }

    #[test]
    fn mapping_basics() {
        assert!(Mapping::new(vec![0, 2], 2).is_err());
        let f = Mapping::new(vec![1, 0, 2], 3).unwrap();
        assert!(f.is_bijective());
        assert_eq!(f.inverse().unwrap(), f);
        let g = Mapping::new(vec![0, 0, 1], 2).unwrap();
        assert!(!g.is_bijective() && g.inverse().is_none());
        assert_eq!(f.then(&g).unwrap().img(), &[0, 0, 1]);
        assert!(g.then(&f).is_err());
    }

    #[test]
    fn isotone_examples() {
        let d2 = divisibility_biposet(3).unwrap();
        let d = d2.diamond();
        assert!(is_isotone(&Mapping::identity(3), d, d).unwrap().holds());
        let constant = Mapping::constant(3, 3, 1).unwrap();
        assert!(is_isotone(&constant, d, d).unwrap().holds());
        let swap = Mapping::new(vec![2, 1, 0], 3).unwrap();
        // the least violating triple is (1,1,2) in labels: 1|2 but 3∤2
        assert_eq!(is_isotone(&swap, d, d).unwrap(), Verdict::Fails((0, 0, 1)));
        // (1,2,2) is also a violation: 1≤2 and 2|2, yet 3 ≰ 2
        assert!(d.chain_at(0, 1, 1) && !d.chain_at(2, 1, 1));
    }

    #[test]
    fn isotone_dimension_errors() {
        let d = divisibility_biposet(3).unwrap();
        let f = Mapping::identity(2);
        assert!(is_isotone(&f, d.diamond(), d.diamond()).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let d2 = divisibility_biposet(3).unwrap();
        assert!(is_isomorphism(&Mapping::identity(3), &d2, &d2).unwrap().holds());
        let squash = Mapping::new(vec![0, 0, 1], 3).unwrap();
        assert_eq!(is_isomorphism(&squash, &d2, &d2).unwrap(), Verdict::Fails(IsoFailure::NotBijective));
        let back = BiPoset::new(d2.ground().clone(), dual(&dual(d2.diamond()))).unwrap();
        assert!(is_isomorphism(&Mapping::identity(3), &d2, &back).unwrap().holds());
        for k in 0..=3 {
            let p = powerset_biposet(k).unwrap();
            let pd = dual_biposet(&p);
            assert!(is_isomorphism(&powerset_complement(k), &p, &pd).unwrap().holds());
        }
    }

    #[test]
    fn search_examples() {
        let d2 = divisibility_biposet(3).unwrap();
        assert_eq!(find_isomorphism(&d2, &d2), Some(Mapping::identity(3)));
        let a = bp(Rel::identity(2), Rel::identity(2));
        let b = bp(Rel::full(2), Rel::identity(2));
        assert_eq!(find_isomorphism(&a, &b), None);
        let p = powerset_biposet(2).unwrap();
        let f = find_isomorphism(&p, &dual_biposet(&p)).unwrap();
        assert!(is_isomorphism(&f, &p, &dual_biposet(&p)).unwrap().holds());
        // complement is an isomorphism, but composing it with the swap of
        // the singletons gives a lexicographically smaller one
        assert_eq!(f.img(), &[3, 1, 2, 0]);
    }

    #[test]
    fn self_duality() {
        for k in 0..=3 {
            assert!(self_dual_witness(&powerset_biposet(k).unwrap()).is_some());
        }
        let le = Rel::from_fn(2, |i, j| i <= j);
        let chain2 = bp(le.clone(), le);
        assert_eq!(self_dual_witness(&chain2).unwrap().img(), &[1, 0]);
        // a ≼ b, a ≼ c in both components: the dual has two minima and one
        // maximum, so no bijection carries one onto the other
        let vee = Rel::from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2)]).unwrap();
        assert_eq!(self_dual_witness(&bp(vee.clone(), vee)), None);
    }
}
