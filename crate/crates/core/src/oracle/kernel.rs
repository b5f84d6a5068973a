//! Bit-mask evaluation for the structure sizes the oracle sweeps.
//!
//! Every relation row fits in a byte, and a Galois test between `f` and `g`
//! reduces to comparing two packed signatures: row `a` of `f` is the
//! `⋄`-up-set of `f(a)` in `Q`, and row `a` of `g` is `{b : a ⋄ g(b)}`.
//! The two agree for every `a` exactly when the biconditional holds.

use crate::biposet::Diamond;

pub(crate) const KERNEL_MAX: usize = 8;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Small {
    pub n: usize,
    pub r1: [u8; KERNEL_MAX],
    pub r2: [u8; KERNEL_MAX],
    pub leq: [u8; KERNEL_MAX],
}

#[inline]
fn has(mask: u8, i: usize) -> bool {
    mask >> i & 1 == 1
}

fn bits(mut m: u8) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

impl Small {
    pub fn new(d: &Diamond) -> Self {
        let n = d.n();
        assert!(n <= KERNEL_MAX);
        let mut s = Small { n, r1: [0; KERNEL_MAX], r2: [0; KERNEL_MAX], leq: [0; KERNEL_MAX] };
        for i in 0..n {
            s.r1[i] = d.r1().row_mask(i) as u8;
            s.r2[i] = d.r2().row_mask(i) as u8;
            s.leq[i] = s.r1[i] & s.r2[i];
        }
        s
    }

    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        has(self.leq[a], b)
    }

    pub fn chain(&self, a: usize, b: usize, c: usize) -> bool {
        has(self.r1[a], b) && has(self.r2[b], c)
    }
}

/// Forward chain preservation.
pub(crate) fn isotone(img: &[usize], src: &Small, dst: &Small) -> bool {
    (0..src.n).all(|a| {
        bits(src.r1[a]).all(|b| {
            let first = has(dst.r1[img[a]], img[b]);
            bits(src.r2[b]).all(|c| first && has(dst.r2[img[b]], img[c]))
        })
    })
}

/// Bijectivity is assumed.
pub(crate) fn chain_biconditional(img: &[usize], src: &Small, dst: &Small) -> bool {
    let n = src.n;
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| src.chain(a, b, c) == dst.chain(img[a], img[b], img[c]))))
}

/// Hetero-mode Galois test, evaluated directly.
pub(crate) fn galois(f: &[usize], g: &[usize], p: &Small, q: &Small) -> bool {
    f.iter().enumerate().all(|(a, &fa)| g.iter().enumerate().all(|(b, &gb)| q.le(fa, b) == p.le(a, gb)))
}

#[derive(Debug, Clone)]
pub(crate) struct MapInfo {
    pub code: u32,
    pub img: [usize; KERNEL_MAX],
    pub sig: u64,
    pub isotone: bool,
}

impl MapInfo {
    pub fn img(&self, len: usize) -> &[usize] {
        &self.img[..len]
    }
}

fn all_maps(src_n: usize, dst_n: usize) -> impl Iterator<Item = (u32, [usize; KERNEL_MAX])> {
    let total = (dst_n as u32).pow(src_n as u32);
    (0..total).map(move |code| {
        let mut img = [0; KERNEL_MAX];
        let mut rest = code as usize;
        for slot in img[..src_n].iter_mut().rev() {
            *slot = rest % dst_n;
            rest /= dst_n;
        }
        (code, img)
    })
}

/// All maps `P → Q` (lower) and `Q → P` (upper) with signatures and
/// isotonicity, each list in ascending code order.
pub(crate) fn map_tables(p: &Small, q: &Small) -> (Vec<MapInfo>, Vec<MapInfo>) {
    let lower = all_maps(p.n, q.n)
        .map(|(code, img)| {
            let sig = (0..p.n).fold(0u64, |s, a| s | (q.leq[img[a]] as u64) << (8 * a));
            MapInfo { code, img, sig, isotone: isotone(&img[..p.n], p, q) }
        })
        .collect();
    let upper = all_maps(q.n, p.n)
        .map(|(code, img)| {
            let mut sig = 0u64;
            for a in 0..p.n {
                let row = (0..q.n).filter(|&b| p.le(a, img[b])).fold(0u64, |m, b| m | 1 << b);
                sig |= row << (8 * a);
            }
            MapInfo { code, img, sig, isotone: isotone(&img[..q.n], q, p) }
        })
        .collect();
    (lower, upper)
}

pub(crate) fn unit(f: &[usize], g: &[usize], p: &Small) -> bool {
    (0..p.n).all(|a| p.le(a, g[f[a]]))
}

pub(crate) fn counit(f: &[usize], g: &[usize], q: &Small) -> bool {
    (0..q.n).all(|b| q.le(f[g[b]], b))
}
