//! Direct-quantifier reference implementations. Nothing here uses the
//! library's bit packing or early exits; each definition is written out as
//! nested loops over plain boolean matrices.

#![allow(dead_code)]

use biposet::{BiPoset, Diamond, Rel};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Naive {
    pub n: usize,
    pub r1: Vec<Vec<bool>>,
    pub r2: Vec<Vec<bool>>,
}

impl Naive {
    pub fn from_diamond(d: &Diamond) -> Self {
        let n = d.n();
        let grab = |r: &Rel| (0..n).map(|i| (0..n).map(|j| r.get(i, j)).collect()).collect();
        Naive { n, r1: grab(d.r1()), r2: grab(d.r2()) }
    }

    pub fn to_diamond(&self) -> Diamond {
        let r1 = Rel::from_fn(self.n, |i, j| self.r1[i][j]);
        let r2 = Rel::from_fn(self.n, |i, j| self.r2[i][j]);
        Diamond::new(r1, r2).unwrap()
    }

    pub fn chain(&self, a: usize, b: usize, c: usize) -> bool {
        self.r1[a][b] && self.r2[b][c]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.r1[a][b] && self.r2[a][b]
    }

    /// Least `a` with a missing loop.
    pub fn reflexive_witness(&self) -> Option<usize> {
        let mut found = None;
        for a in 0..self.n {
            let ok = self.r1[a][a] && self.r2[a][a];
            if !ok && found.is_none() {
                found = Some(a);
            }
        }
        found
    }

    /// Least `(a, b, c)` with the anti-symmetry premise true and `a = b = c`
    /// false.
    pub fn antisymmetric_witness(&self) -> Option<(usize, usize, usize)> {
        let mut found = None;
        for a in 0..self.n {
            for b in 0..self.n {
                for c in 0..self.n {
                    let premise = self.chain(a, b, c) && self.chain(b, a, c) && self.chain(a, c, b);
                    let conclusion = a == b && b == c;
                    if premise && !conclusion && found.is_none() {
                        found = Some((a, b, c));
                    }
                }
            }
        }
        found
    }

    /// Least `(a, b, c, d, e)` with the transitivity premise true and the
    /// conclusion false, plus which conclusions failed (first, second).
    pub fn transitive_witness(&self) -> Option<([usize; 5], bool, bool)> {
        let n = self.n;
        let mut found = None;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        for e in 0..n {
                            let premise = self.chain(a, b, c) && self.chain(b, d, c) && self.r2[c][e];
                            let first = self.chain(a, d, c);
                            let second = self.chain(a, b, e);
                            if premise && !(first && second) && found.is_none() {
                                found = Some(([a, b, c, d, e], !first, !second));
                            }
                        }
                    }
                }
            }
        }
        found
    }

    pub fn valid(&self) -> bool {
        self.reflexive_witness().is_none()
            && self.antisymmetric_witness().is_none()
            && self.transitive_witness().is_none()
    }

    pub fn dual(&self) -> Naive {
        let t = |r: &Vec<Vec<bool>>| (0..self.n).map(|i| (0..self.n).map(|j| r[j][i]).collect()).collect();
        Naive { n: self.n, r1: t(&self.r1), r2: t(&self.r2) }
    }

    pub fn meet(&self, other: &Naive) -> Naive {
        let m = |x: &Vec<Vec<bool>>, y: &Vec<Vec<bool>>| {
            (0..self.n).map(|i| (0..self.n).map(|j| x[i][j] && y[i][j]).collect()).collect()
        };
        Naive { n: self.n, r1: m(&self.r1, &other.r1), r2: m(&self.r2, &other.r2) }
    }

    /// All elements `x` with `a ≼ x` for every `a` (greatest) or `x ≼ a`
    /// for every `a` (least), in one component.
    pub fn extremes(&self, second: bool, greatest: bool) -> Vec<usize> {
        let r = if second { &self.r2 } else { &self.r1 };
        let mut out = Vec::new();
        for x in 0..self.n {
            let mut all = true;
            for a in 0..self.n {
                let rel = if greatest { r[a][x] } else { r[x][a] };
                if !rel {
                    all = false;
                }
            }
            if all {
                out.push(x);
            }
        }
        out
    }

    fn sup(&self, x: usize, y: usize) -> Option<usize> {
        if x == y || self.leq(y, x) {
            Some(x)
        } else if self.leq(x, y) {
            Some(y)
        } else {
            None
        }
    }

    fn inf(&self, x: usize, y: usize) -> Option<usize> {
        if x == y || self.leq(x, y) {
            Some(x)
        } else if self.leq(y, x) {
            Some(y)
        } else {
            None
        }
    }

    /// Distinct values of the maximal greatest, minimal greatest, maximal
    /// least and minimal least rules over all candidate combinations.
    pub fn derived_values(&self) -> [Vec<usize>; 4] {
        let combine = |xs: &[usize], ys: &[usize], sup: bool| {
            let mut vals = Vec::new();
            for &x in xs {
                for &y in ys {
                    let v = if sup { self.sup(x, y) } else { self.inf(x, y) };
                    if let Some(v) = v {
                        if !vals.contains(&v) {
                            vals.push(v);
                        }
                    }
                }
            }
            vals.sort();
            vals
        };
        let (x, y) = (self.extremes(false, true), self.extremes(true, true));
        let (u, v) = (self.extremes(false, false), self.extremes(true, false));
        [combine(&x, &y, true), combine(&x, &y, false), combine(&u, &v, true), combine(&u, &v, false)]
    }
}

/// Every relation on `n` elements as a boolean matrix, indexed by bits in
/// row-major order.
pub fn relation_from_bits(n: usize, bits: u64) -> Vec<Vec<bool>> {
    (0..n).map(|i| (0..n).map(|j| bits >> (i * n + j) & 1 == 1).collect()).collect()
}

/// All `2^(2n²)` pairs of relations.
pub fn all_pairs(n: usize) -> impl Iterator<Item = Naive> {
    let cells = n * n;
    (0..1u64 << (2 * cells)).map(move |code| Naive {
        n,
        r1: relation_from_bits(n, code & ((1 << cells) - 1)),
        r2: relation_from_bits(n, code >> cells),
    })
}

/// All pairs with both diagonals set.
pub fn reflexive_pairs(n: usize) -> impl Iterator<Item = Naive> {
    all_pairs(n).filter(move |p| (0..n).all(|i| p.r1[i][i] && p.r2[i][i]))
}

pub fn naive_valid_structures(n: usize) -> Vec<Naive> {
    let mut v: Vec<Naive> = reflexive_pairs(n).filter(Naive::valid).collect();
    v.sort();
    v
}

/// Every map from `src_n` elements to `dst_n` elements.
pub fn all_maps(src_n: usize, dst_n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..src_n {
        let mut next = Vec::new();
        for prefix in &out {
            for t in 0..dst_n {
                let mut m = prefix.clone();
                m.push(t);
                next.push(m);
            }
        }
        out = next;
    }
    out
}

pub fn is_bijection(m: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    for &x in m {
        hit[x] = true;
    }
    m.len() == n && hit.iter().all(|&h| h)
}

pub fn naive_galois(f: &[usize], g: &[usize], p: &Naive, q: &Naive) -> bool {
    let mut ok = true;
    for a in 0..p.n {
        for b in 0..q.n {
            if q.leq(f[a], b) != p.leq(a, g[b]) {
                ok = false;
            }
        }
    }
    ok
}

pub fn naive_chain_iso(f: &[usize], p: &Naive, q: &Naive) -> bool {
    let mut ok = is_bijection(f, q.n) && p.n == q.n;
    for a in 0..p.n {
        for b in 0..p.n {
            for c in 0..p.n {
                if ok && p.chain(a, b, c) != q.chain(f[a], f[b], f[c]) {
                    ok = false;
                }
            }
        }
    }
    ok
}

pub fn labelled(d: Diamond) -> BiPoset {
    BiPoset::with_standard_labels(d).unwrap()
}
