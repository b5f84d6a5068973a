//! The claim registry and the sweep driver.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::axioms::{axioms_hold, check_axioms};
use crate::biposet::{BiPoset, Diamond};
use crate::constructions::{dual, dual_biposet, powerset_biposet};
use crate::error::{Error, Result};
use crate::extremal::report_for;
use crate::galois::decode_map;
use crate::morphisms::{iso_violation, powerset_complement, Mapping};

use super::enumerate::{candidate_count, catalog, check_n, decode};
use super::finding::{ClaimVerdict, Finding, ScaleStats, SweepMode, Witness};
use super::kernel::{self, chain_biconditional, map_tables, MapInfo, Small};

/// Budget used when the caller does not give one. Large enough for every
/// scale up to three elements except structure triples.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

pub const DEFAULT_SEED: u64 = 0x6269_706f_7365_7421;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    IntersectClosure,
    UniqueGmax,
    UniqueGmin,
    UniqueLmax,
    UniqueLmin,
    PowersetValid,
    IsoIffIsotone,
    DualityPrinciple,
    PowersetSelfDual,
    DoubleDual,
    GaloisCharFwd,
    GaloisCharBwd,
    GaloisCompose,
    AdjointUnique,
    GaloisAsymmetry,
}

impl ClaimId {
    pub const ALL: [ClaimId; 15] = [
        ClaimId::IntersectClosure,
        ClaimId::UniqueGmax,
        ClaimId::UniqueGmin,
        ClaimId::UniqueLmax,
        ClaimId::UniqueLmin,
        ClaimId::PowersetValid,
        ClaimId::IsoIffIsotone,
        ClaimId::DualityPrinciple,
        ClaimId::PowersetSelfDual,
        ClaimId::DoubleDual,
        ClaimId::GaloisCharFwd,
        ClaimId::GaloisCharBwd,
        ClaimId::GaloisCompose,
        ClaimId::AdjointUnique,
        ClaimId::GaloisAsymmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::IntersectClosure => "INTERSECT_CLOSURE",
            ClaimId::UniqueGmax => "UNIQUE_GMAX",
            ClaimId::UniqueGmin => "UNIQUE_GMIN",
            ClaimId::UniqueLmax => "UNIQUE_LMAX",
            ClaimId::UniqueLmin => "UNIQUE_LMIN",
            ClaimId::PowersetValid => "POWERSET_VALID",
            ClaimId::IsoIffIsotone => "ISO_IFF_ISOTONE",
            ClaimId::DualityPrinciple => "DUALITY_PRINCIPLE",
            ClaimId::PowersetSelfDual => "POWERSET_SELF_DUAL",
            ClaimId::DoubleDual => "DOUBLE_DUAL",
            ClaimId::GaloisCharFwd => "GALOIS_CHAR_FWD",
            ClaimId::GaloisCharBwd => "GALOIS_CHAR_BWD",
            ClaimId::GaloisCompose => "GALOIS_COMPOSE",
            ClaimId::AdjointUnique => "ADJOINT_UNIQUE",
            ClaimId::GaloisAsymmetry => "GALOIS_ASYMMETRY",
        }
    }

    /// Existential claims are confirmed by an example rather than refuted
    /// by a counterexample.
    pub fn is_existential(self) -> bool {
        self == ClaimId::GaloisAsymmetry
    }

    pub fn description(self) -> &'static str {
        match self {
            ClaimId::IntersectClosure => "the intersection of two valid structures on one set is valid",
            ClaimId::UniqueGmax => "the maximal greatest element is unique when it exists",
            ClaimId::UniqueGmin => "the minimal greatest element is unique when it exists",
            ClaimId::UniqueLmax => "the maximal least element is unique when it exists",
            ClaimId::UniqueLmin => "the minimal least element is unique when it exists",
            ClaimId::PowersetValid => "the powerset structure satisfies the axioms",
            ClaimId::IsoIffIsotone => "a bijection is an isomorphism iff it and its inverse are isotone",
            ClaimId::DualityPrinciple => "the dual of a valid structure is valid",
            ClaimId::PowersetSelfDual => "complement is an isomorphism from the powerset structure to its dual",
            ClaimId::DoubleDual => "the dual of the dual is the original structure",
            ClaimId::GaloisCharFwd => "a Galois connection has isotone maps, unit and counit",
            ClaimId::GaloisCharBwd => "isotone maps with unit and counit form a Galois connection",
            ClaimId::GaloisCompose => "Galois connections compose",
            ClaimId::AdjointUnique => "a map has at most one adjoint on each side",
            ClaimId::GaloisAsymmetry => "some Galois connection does not hold with its maps swapped",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        ClaimId::ALL.into_iter().find(|c| c.name() == norm).ok_or_else(|| Error::Usage(format!("unknown claim {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    /// Reflexive candidates on `n` elements.
    Single,
    /// The generator parameter `k = 0..=n_max`.
    Indexed,
    /// Ordered pairs of valid structures of equal size.
    SamePair,
    /// Ordered pairs of valid structures of any sizes.
    Pair,
    Triple,
}

fn shape(claim: ClaimId) -> Shape {
    use ClaimId::*;
    match claim {
        UniqueGmax | UniqueGmin | UniqueLmax | UniqueLmin | DualityPrinciple | DoubleDual => Shape::Single,
        PowersetValid | PowersetSelfDual => Shape::Indexed,
        IntersectClosure | IsoIffIsotone => Shape::SamePair,
        GaloisCharFwd | GaloisCharBwd | AdjointUnique | GaloisAsymmetry => Shape::Pair,
        GaloisCompose => Shape::Triple,
    }
}

/// Size combinations in sweep order: by largest size, then
/// lexicographically.
fn scales(shape: Shape, n_max: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = match shape {
        Shape::Single => (1..=n_max).map(|n| vec![n]).collect(),
        Shape::Indexed => (0..=n_max).map(|k| vec![k]).collect(),
        Shape::SamePair => (1..=n_max).map(|n| vec![n, n]).collect(),
        Shape::Pair => (1..=n_max).flat_map(|p| (1..=n_max).map(move |q| vec![p, q])).collect(),
        Shape::Triple => {
            (1..=n_max).flat_map(|p| (1..=n_max).flat_map(move |q| (1..=n_max).map(move |r| vec![p, q, r]))).collect()
        }
    };
    out.sort_by_key(|s| (s.iter().copied().max(), s.clone()));
    out
}

#[derive(Debug, Default, Clone)]
struct Tally {
    examined: u64,
    instances: u64,
    in_domain: u64,
    violations: u64,
    first: Option<(u64, Vec<u32>)>,
}

impl Tally {
    fn violation(&mut self, unit: u64, key: Vec<u32>) {
        self.violations += 1;
        let cand = (unit, key);
        if self.first.as_ref().is_none_or(|f| cand < *f) {
            self.first = Some(cand);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.examined += other.examined;
        self.instances += other.instances;
        self.in_domain += other.in_domain;
        self.violations += other.violations;
        if let Some((u, k)) = other.first {
            let cand = (u, k);
            if self.first.as_ref().is_none_or(|f| cand < *f) {
                self.first = Some(cand);
            }
        }
        self
    }
}

fn sweep(
    space: u64,
    budget: u64,
    rng_stream: u64,
    seed: u64,
    visit: impl Fn(u64, &mut Tally) + Sync,
) -> (SweepMode, Tally) {
    let fold = |mut t: Tally, unit: u64| {
        t.examined += 1;
        visit(unit, &mut t);
        t
    };
    if space <= budget {
        let t = (0..space).into_par_iter().fold(Tally::default, fold).reduce(Tally::default, Tally::merge);
        (SweepMode::Exhaustive, t)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(rng_stream);
        let picks = rand::seq::index::sample(&mut rng, space as usize, budget as usize).into_vec();
        let t = picks.into_par_iter().map(|u| u as u64).fold(Tally::default, fold).reduce(Tally::default, Tally::merge);
        (SweepMode::Sampled, t)
    }
}

/// Splits a unit index into one catalog position per size, first size most
/// significant, so ascending units are lexicographically ascending tuples.
fn tuple_codes(sizes: &[usize], mut unit: u64) -> Vec<u64> {
    let cats: Vec<&[u64]> = sizes.iter().map(|&n| catalog(n).expect("checked size")).collect();
    let mut idx = vec![0usize; sizes.len()];
    for (slot, cat) in idx.iter_mut().zip(&cats).rev() {
        *slot = (unit % cat.len() as u64) as usize;
        unit /= cat.len() as u64;
    }
    idx.iter().zip(&cats).map(|(&i, cat)| cat[i]).collect()
}

fn space_of(shape: Shape, sizes: &[usize]) -> Result<u64> {
    Ok(match shape {
        Shape::Single => candidate_count(sizes[0]),
        Shape::Indexed => 1,
        _ => {
            let mut total = 1u64;
            for &n in sizes {
                total = total.saturating_mul(catalog(n)?.len() as u64);
            }
            total
        }
    })
}

/// Verifies a claim at every scale up to `n_max`, exhaustively where the
/// scale fits the budget and by uniform sampling without replacement
/// otherwise. The result depends only on the arguments.
pub fn verify_claim(claim: ClaimId, n_max: usize, budget: Option<u64>, seed: u64) -> Result<Finding> {
    check_n(n_max)?;
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let shape = shape(claim);
    let mut stats = Vec::new();
    let mut first: Option<(Vec<usize>, u64, Vec<u32>)> = None;
    for (ordinal, sizes) in scales(shape, n_max).into_iter().enumerate() {
        let space = space_of(shape, &sizes)?;
        let (mode, tally) = sweep(space, budget, ordinal as u64, seed, |unit, t| visit(claim, &sizes, unit, t));
        if first.is_none() {
            if let Some((u, k)) = tally.first {
                first = Some((sizes.clone(), u, k));
            }
        }
        stats.push(ScaleStats {
            sizes,
            mode,
            space,
            examined: tally.examined,
            instances: tally.instances,
            in_domain: tally.in_domain,
            violations: tally.violations,
        });
    }
    let verdict = match (&first, claim.is_existential()) {
        (Some(_), true) => ClaimVerdict::Verified,
        (None, true) => ClaimVerdict::NotExhibited,
        (Some(_), false) => ClaimVerdict::Counterexample,
        (None, false) => ClaimVerdict::Verified,
    };
    let witness = first.map(|(sizes, unit, key)| build_witness(claim, &sizes, unit, &key));
    Ok(Finding {
        claim,
        n_max,
        budget,
        seed,
        verdict,
        instances_checked: stats.iter().map(|s| s.instances).sum(),
        scales: stats,
        witness,
    })
}

fn extremal_values(claim: ClaimId, d: Diamond) -> Vec<usize> {
    let bp = BiPoset::with_standard_labels(d).expect("standard labels");
    let r = report_for(&bp);
    match claim {
        ClaimId::UniqueGmax => r.g_max_values,
        ClaimId::UniqueGmin => r.g_min_values,
        ClaimId::UniqueLmax => r.l_max_values,
        _ => r.l_min_values,
    }
}

fn permutations(n: usize) -> impl Iterator<Item = (u32, Vec<usize>)> {
    (0..(n as u64).pow(n as u32)).filter_map(move |code| {
        let img = decode_map(code, n, n);
        let mut seen = 0u32;
        for &x in &img {
            seen |= 1 << x;
        }
        (seen.count_ones() as usize == n).then_some((code as u32, img))
    })
}

fn invert(img: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; img.len()];
    for (i, &x) in img.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

fn galois_pairs<'a>(lower: &'a [MapInfo], upper: &'a [MapInfo]) -> impl Iterator<Item = (&'a MapInfo, &'a MapInfo)> {
    lower.iter().flat_map(move |f| upper.iter().filter(move |g| g.sig == f.sig).map(move |g| (f, g)))
}

fn visit(claim: ClaimId, sizes: &[usize], unit: u64, t: &mut Tally) {
    use ClaimId::*;
    match shape(claim) {
        Shape::Single => {
            let n = sizes[0];
            let d = decode(n, unit);
            t.instances += 1;
            if !axioms_hold(&d) {
                return;
            }
            t.in_domain += 1;
            let ok = match claim {
                DualityPrinciple => axioms_hold(&dual(&d)),
                DoubleDual => {
                    let dd = dual(&dual(&d));
                    dd == d && iso_violation(&Mapping::identity(n), &d, &dd).is_none()
                }
                _ => extremal_values(claim, d).len() <= 1,
            };
            if !ok {
                t.violation(unit, Vec::new());
            }
        }
        Shape::Indexed => {
            let k = sizes[0] as u32;
            let p = powerset_biposet(k).expect("small k");
            t.instances += 1;
            t.in_domain += 1;
            let ok = match claim {
                PowersetValid => axioms_hold(p.diamond()),
                _ => iso_violation(&powerset_complement(k), p.diamond(), &dual(p.diamond())).is_none(),
            };
            if !ok {
                t.violation(unit, Vec::new());
            }
        }
        Shape::SamePair => {
            let n = sizes[0];
            let codes = tuple_codes(sizes, unit);
            let (p, q) = (decode(n, codes[0]), decode(n, codes[1]));
            match claim {
                IntersectClosure => {
                    t.instances += 1;
                    t.in_domain += 1;
                    let meet = Diamond::new(
                        p.r1().intersection(q.r1()).expect("same size"),
                        p.r2().intersection(q.r2()).expect("same size"),
                    )
                    .expect("same size");
                    if !axioms_hold(&meet) {
                        t.violation(unit, Vec::new());
                    }
                }
                _ => {
                    let (sp, sq) = (Small::new(&p), Small::new(&q));
                    for (code, img) in permutations(n) {
                        t.instances += 1;
                        t.in_domain += 1;
                        let iso = chain_biconditional(&img, &sp, &sq);
                        let both = kernel::isotone(&img, &sp, &sq) && kernel::isotone(&invert(&img), &sq, &sp);
                        if iso != both {
                            t.violation(unit, vec![code]);
                        }
                    }
                }
            }
        }
        Shape::Pair => {
            let codes = tuple_codes(sizes, unit);
            let (p, q) = (Small::new(&decode(sizes[0], codes[0])), Small::new(&decode(sizes[1], codes[1])));
            let (lower, upper) = map_tables(&p, &q);
            visit_pair(claim, unit, &p, &q, &lower, &upper, t);
        }
        Shape::Triple => {
            let codes = tuple_codes(sizes, unit);
            let s: Vec<Small> = sizes.iter().zip(&codes).map(|(&n, &c)| Small::new(&decode(n, c))).collect();
            let (l1, u1) = map_tables(&s[0], &s[1]);
            let (l2, u2) = map_tables(&s[1], &s[2]);
            let first: Vec<_> = galois_pairs(&l1, &u1).collect();
            let second: Vec<_> = galois_pairs(&l2, &u2).collect();
            let (np, nr) = (s[0].n, s[2].n);
            for &(f1, g1) in &first {
                for &(f2, g2) in &second {
                    t.instances += 1;
                    t.in_domain += 1;
                    let f: Vec<usize> = (0..np).map(|a| f2.img[f1.img[a]]).collect();
                    let g: Vec<usize> = (0..nr).map(|c| g1.img[g2.img[c]]).collect();
                    if !kernel::galois(&f, &g, &s[0], &s[2]) {
                        t.violation(unit, vec![f1.code, g1.code, f2.code, g2.code]);
                    }
                }
            }
        }
    }
}

fn visit_pair(claim: ClaimId, unit: u64, p: &Small, q: &Small, lower: &[MapInfo], upper: &[MapInfo], t: &mut Tally) {
    use ClaimId::*;
    let (pn, qn) = (p.n, q.n);
    match claim {
        GaloisCharFwd => {
            t.instances += (lower.len() * upper.len()) as u64;
            for (f, g) in galois_pairs(lower, upper) {
                t.in_domain += 1;
                let (fi, gi) = (f.img(pn), g.img(qn));
                if !(f.isotone && g.isotone && kernel::unit(fi, gi, p) && kernel::counit(fi, gi, q)) {
                    t.violation(unit, vec![f.code, g.code]);
                }
            }
        }
        GaloisCharBwd => {
            t.instances += (lower.len() * upper.len()) as u64;
            for f in lower.iter().filter(|f| f.isotone) {
                for g in upper.iter().filter(|g| g.isotone) {
                    let (fi, gi) = (f.img(pn), g.img(qn));
                    if kernel::unit(fi, gi, p) && kernel::counit(fi, gi, q) {
                        t.in_domain += 1;
                        if f.sig != g.sig {
                            t.violation(unit, vec![f.code, g.code]);
                        }
                    }
                }
            }
        }
        AdjointUnique => {
            t.instances += (lower.len() + upper.len()) as u64;
            for (side, maps, partners) in [(0u32, lower, upper), (1u32, upper, lower)] {
                for m in maps {
                    let mut hits = partners.iter().filter(|o| o.sig == m.sig);
                    if let Some(first) = hits.next() {
                        t.in_domain += 1;
                        if let Some(second) = hits.next() {
                            t.violation(unit, vec![side, m.code, first.code, second.code]);
                        }
                    }
                }
            }
        }
        GaloisAsymmetry => {
            t.instances += (lower.len() * upper.len()) as u64;
            for (f, g) in galois_pairs(lower, upper) {
                t.in_domain += 1;
                if !kernel::galois(g.img(qn), f.img(pn), q, p) {
                    t.violation(unit, vec![f.code, g.code]);
                }
            }
        }
        _ => unreachable!("not a pair claim"),
    }
}

fn labelled(d: Diamond) -> BiPoset {
    BiPoset::with_standard_labels(d).expect("standard labels")
}

fn map_from(code: u32, src_n: usize, dst_n: usize) -> Mapping {
    Mapping::new(decode_map(code as u64, src_n, dst_n), dst_n).expect("decoded images are in range")
}

fn names(bp: &BiPoset, xs: &[usize]) -> String {
    xs.iter().map(|&i| bp.ground().label(i)).collect::<Vec<_>>().join(", ")
}

fn build_witness(claim: ClaimId, sizes: &[usize], unit: u64, key: &[u32]) -> Witness {
    use ClaimId::*;
    let mut w = Witness::default();
    match shape(claim) {
        Shape::Single => {
            let n = sizes[0];
            let p = labelled(decode(n, unit));
            match claim {
                DualityPrinciple => {
                    let d = dual_biposet(&p);
                    w.note = format!(
                        "P satisfies the axioms but its dual does not: {}",
                        check_axioms(d.diamond()).describe(d.ground())
                    );
                    w.push_structure("P", p);
                    w.push_structure("dual", d);
                }
                DoubleDual => {
                    w.note = "the dual of the dual of P differs from P".into();
                    w.push_structure("P", p);
                }
                _ => {
                    let vals = extremal_values(claim, p.diamond().clone());
                    w.note = format!("the sup/inf rule yields several values: {}", names(&p, &vals));
                    w.push_structure("P", p);
                }
            }
        }
        Shape::Indexed => {
            let k = sizes[0] as u32;
            let p = powerset_biposet(k).expect("small k");
            if claim == PowersetValid {
                w.note = check_axioms(p.diamond()).describe(p.ground());
                w.push_structure("P", p);
            } else {
                w.note = "complement is not an isomorphism from P to its dual".into();
                let d = dual_biposet(&p);
                w.push_structure("P", p);
                w.push_structure("dual", d);
                w.push_map("complement", "P", "dual", powerset_complement(k));
            }
        }
        Shape::SamePair | Shape::Pair | Shape::Triple => {
            let codes = tuple_codes(sizes, unit);
            let names_ = ["P", "Q", "R"];
            let bps: Vec<BiPoset> = sizes.iter().zip(&codes).map(|(&n, &c)| labelled(decode(n, c))).collect();
            for (name, bp) in names_.iter().zip(&bps) {
                w.push_structure(name, bp.clone());
            }
            let (pn, qn) = (sizes[0], sizes[1]);
            match claim {
                IntersectClosure => {
                    let (p, q) = (bps[0].diamond(), bps[1].diamond());
                    let meet = labelled(
                        Diamond::new(
                            p.r1().intersection(q.r1()).expect("same size"),
                            p.r2().intersection(q.r2()).expect("same size"),
                        )
                        .expect("same size"),
                    );
                    w.note = format!(
                        "the intersection of P and Q fails the axioms: {}",
                        check_axioms(meet.diamond()).describe(meet.ground())
                    );
                    w.push_structure("meet", meet);
                }
                IsoIffIsotone => {
                    w.note = "f is an isomorphism exactly when f and its inverse are isotone fails here".into();
                    w.push_map("f", "P", "Q", map_from(key[0], pn, qn));
                }
                GaloisCharFwd => {
                    w.note = "(f, g) is a Galois connection but isotonicity, unit or counit fails".into();
                    w.push_map("f", "P", "Q", map_from(key[0], pn, qn));
                    w.push_map("g", "Q", "P", map_from(key[1], qn, pn));
                }
                GaloisCharBwd => {
                    w.note = "f and g are isotone with unit and counit, yet (f, g) is not a Galois connection".into();
                    w.push_map("f", "P", "Q", map_from(key[0], pn, qn));
                    w.push_map("g", "Q", "P", map_from(key[1], qn, pn));
                }
                AdjointUnique => {
                    if key[0] == 0 {
                        w.note = "f has two distinct right adjoints g1 and g2".into();
                        w.push_map("f", "P", "Q", map_from(key[1], pn, qn));
                        w.push_map("g1", "Q", "P", map_from(key[2], qn, pn));
                        w.push_map("g2", "Q", "P", map_from(key[3], qn, pn));
                    } else {
                        w.note = "g has two distinct left adjoints f1 and f2".into();
                        w.push_map("g", "Q", "P", map_from(key[1], qn, pn));
                        w.push_map("f1", "P", "Q", map_from(key[2], pn, qn));
                        w.push_map("f2", "P", "Q", map_from(key[3], pn, qn));
                    }
                }
                GaloisAsymmetry => {
                    w.note = "(f, g) is a Galois connection from P to Q, but (g, f) is not one from Q to P".into();
                    w.push_map("f", "P", "Q", map_from(key[0], pn, qn));
                    w.push_map("g", "Q", "P", map_from(key[1], qn, pn));
                }
                GaloisCompose => {
                    let rn = sizes[2];
                    w.note = "(f1, g1) and (f2, g2) are Galois connections but their composite is not".into();
                    w.push_map("f1", "P", "Q", map_from(key[0], pn, qn));
                    w.push_map("g1", "Q", "P", map_from(key[1], qn, pn));
                    w.push_map("f2", "Q", "R", map_from(key[2], qn, rn));
                    w.push_map("g2", "R", "Q", map_from(key[3], rn, qn));
                }
                _ => unreachable!("not a tuple claim"),
            }
        }
    }
    w
}
