//! Galois connections between structures.
//!
//! All comparisons go through `⋄`: `a ⋄ b` iff `a ≼₁ b` and `a ≼₂ b`. A pair
//! `(f, g)` with `f: P → Q` and `g: Q → P` is a Galois connection when
//! `f(a) ⋄ b ⟺ a ⋄ g(b)` for every `a ∈ P`, `b ∈ Q`. The antitone variant
//! uses `b ⋄ f(a)` on the left instead.

use rayon::prelude::*;

use crate::biposet::{BiPoset, Diamond};
use crate::error::{Error, Result};
use crate::morphisms::{isotone_violation, Mapping};
use crate::verdict::Verdict;

/// Largest candidate space [`find_adjoint`] will enumerate.
pub const ADJOINT_SEARCH_LIMIT: u64 = 1 << 26;

/// Lower map `f: P → Q` and upper map `g: Q → P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaloisPair {
    f: Mapping,
    g: Mapping,
}

impl GaloisPair {
    pub fn new(f: Mapping, g: Mapping) -> Result<Self> {
        if f.src_n() != g.dst_n() || f.dst_n() != g.src_n() {
            return Err(Error::InvalidMapping(format!(
                "maps {}→{} and {}→{} do not form a pair",
                f.src_n(),
                f.dst_n(),
                g.src_n(),
                g.dst_n()
            )));
        }
        Ok(GaloisPair { f, g })
    }

    pub fn f(&self) -> &Mapping {
        &self.f
    }

    pub fn g(&self) -> &Mapping {
        &self.g
    }

    /// The pair with roles exchanged, read as a candidate connection `Q → P`.
    pub fn swapped(&self) -> GaloisPair {
        GaloisPair { f: self.g.clone(), g: self.f.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum GaloisMode {
    #[default]
    Hetero,
    Monotone,
    Antitone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdjointSide {
    /// Search for upper maps `g` with `(f, g)` a connection.
    Right,
    /// Search for lower maps `g` with `(g, f)` a connection.
    Left,
}

fn pair_dims(pair: &GaloisPair, p: &BiPoset, q: &BiPoset) -> Result<()> {
    for (expected, found) in [(p.n(), pair.f.src_n()), (q.n(), pair.f.dst_n())] {
        if expected != found {
            return Err(Error::DimensionMismatch { expected, found });
        }
    }
    Ok(())
}

pub(crate) fn galois_violation(
    f: &[usize],
    g: &[usize],
    p: &Diamond,
    q: &Diamond,
    mode: GaloisMode,
) -> Option<(usize, usize)> {
    for (a, &fa) in f.iter().enumerate() {
        for (b, &gb) in g.iter().enumerate() {
            let left = match mode {
                GaloisMode::Hetero | GaloisMode::Monotone => q.leq_at(fa, b),
                GaloisMode::Antitone => q.leq_at(b, fa),
            };
            if left != p.leq_at(a, gb) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Checks the Galois biconditional; the witness is the least failing
/// `(a, b)`. The mode only selects the shape of the left-hand side.
pub fn is_galois(pair: &GaloisPair, p: &BiPoset, q: &BiPoset, mode: GaloisMode) -> Result<Verdict<(usize, usize)>> {
    pair_dims(pair, p, q)?;
    Ok(galois_violation(pair.f.img(), pair.g.img(), p.diamond(), q.diamond(), mode).into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdjointReport {
    pub f_isotone: bool,
    pub g_isotone: bool,
    /// `a ⋄ g(f(a))` for every `a ∈ P`.
    pub unit_holds: bool,
    /// `f(g(b)) ⋄ b` for every `b ∈ Q`.
    pub counit_holds: bool,
}

impl AdjointReport {
    pub fn all_hold(&self) -> bool {
        self.f_isotone && self.g_isotone && self.unit_holds && self.counit_holds
    }
}

/// Isotonicity of both maps together with the unit and counit inequalities.
pub fn check_adjoint_properties(pair: &GaloisPair, p: &BiPoset, q: &BiPoset) -> Result<AdjointReport> {
    pair_dims(pair, p, q)?;
    let (pd, qd) = (p.diamond(), q.diamond());
    let (f, g) = (pair.f.img(), pair.g.img());
    Ok(AdjointReport {
        f_isotone: isotone_violation(&pair.f, pd, qd).is_none(),
        g_isotone: isotone_violation(&pair.g, qd, pd).is_none(),
        unit_holds: (0..p.n()).all(|a| pd.leq_at(a, g[f[a]])),
        counit_holds: (0..q.n()).all(|b| qd.leq_at(f[g[b]], b)),
    })
}

/// Composes `P → Q` with `Q → R` into `P → R`: lower maps compose forwards,
/// upper maps backwards.
pub fn compose_galois(first: &GaloisPair, second: &GaloisPair) -> Result<GaloisPair> {
    GaloisPair::new(first.f.then(&second.f)?, second.g.then(&first.g)?)
}

/// Enumerates every candidate partner of `f` and returns, in lexicographic
/// image order, all that complete a Galois connection.
///
/// For [`AdjointSide::Right`], `f: P → Q` and candidates are upper maps
/// `Q → P`. For [`AdjointSide::Left`], `f: Q → P` is the upper map and
/// candidates are lower maps `P → Q`.
pub fn find_adjoint(f: &Mapping, p: &BiPoset, q: &BiPoset, side: AdjointSide) -> Result<Vec<Mapping>> {
    let (dom, cod) = match side {
        AdjointSide::Right => (p.n(), q.n()),
        AdjointSide::Left => (q.n(), p.n()),
    };
    for (expected, found) in [(dom, f.src_n()), (cod, f.dst_n())] {
        if expected != found {
            return Err(Error::DimensionMismatch { expected, found });
        }
    }
    // candidates map cod → dom
    let total =
        (dom as u64).checked_pow(cod as u32).filter(|&t| t <= ADJOINT_SEARCH_LIMIT).ok_or(Error::ResourceLimit {
            what: "adjoint candidate maps",
            requested: (dom as f64).powi(cod as i32) as u64,
            limit: ADJOINT_SEARCH_LIMIT,
        })?;
    let (pd, qd) = (p.diamond(), q.diamond());
    let found = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let cand = decode_map(code, cod, dom);
            let ok = match side {
                AdjointSide::Right => galois_violation(f.img(), &cand, pd, qd, GaloisMode::Hetero),
                AdjointSide::Left => galois_violation(&cand, f.img(), pd, qd, GaloisMode::Hetero),
            }
            .is_none();
            ok.then(|| Mapping::new(cand, dom).expect("decoded images are in range"))
        })
        .collect();
    Ok(found)
}

/// Mixed-radix decode with the first element as most significant digit, so
/// ascending codes are ascending images.
pub(crate) fn decode_map(mut code: u64, len: usize, radix: usize) -> Vec<usize> {
    let mut img = vec![0; len];
    for slot in img.iter_mut().rev() {
        *slot = (code % radix as u64) as usize;
        code /= radix as u64;
    }
    img
}

/// Generators for standard example connections.
pub mod examples {
    use num_rational::Ratio;

    use super::GaloisPair;
    use crate::biposet::{BiPoset, Diamond, GroundSet};
    use crate::error::{Error, Result};
    use crate::morphisms::Mapping;
    use crate::relation::Rel;

    /// `(ψ, ψ⁻¹)` for a bijection `ψ`.
    pub fn isomorphism_pair(psi: &Mapping) -> Result<GaloisPair> {
        let inv = psi.inverse().ok_or_else(|| Error::InvalidMapping("map is not a bijection".into()))?;
        GaloisPair::new(psi.clone(), inv)
    }

    /// The one-element structure `({0}, (=, =))`.
    pub fn singleton() -> BiPoset {
        BiPoset::new(
            GroundSet::new(["0"]).expect("valid label"),
            Diamond::new(Rel::identity(1), Rel::identity(1)).expect("same dimension"),
        )
        .expect("same dimension")
    }

    /// `f` sends all of `P` to the single point, `g` sends it to `target`.
    pub fn singleton_pair(p: &BiPoset, target: usize) -> Result<GaloisPair> {
        if target >= p.n() {
            return Err(Error::IndexOutOfRange { index: target, n: p.n() });
        }
        GaloisPair::new(Mapping::constant(p.n(), 1, 0)?, Mapping::constant(1, p.n(), target)?)
    }

    /// Integers `0..=max` inside the halves `{k/2 : 0 ≤ k ≤ 2·max}`, both
    /// under `(≤, ≤)`, with inclusion and integer part as the two maps.
    pub struct FloorExample {
        pub integers: BiPoset,
        pub rationals: BiPoset,
        /// Exact value of each element of `rationals`, in index order.
        pub values: Vec<Ratio<i64>>,
        pub pair: GaloisPair,
    }

    fn label(r: &Ratio<i64>) -> String {
        if r.is_integer() {
            r.to_integer().to_string()
        } else {
            format!("{}_{}", r.numer(), r.denom())
        }
    }

    fn total_order<T: Ord>(xs: &[T]) -> Diamond {
        let le = Rel::from_fn(xs.len(), |i, j| xs[i] <= xs[j]);
        Diamond::new(le.clone(), le).expect("same dimension")
    }

    pub fn floor_example(max: i64) -> Result<FloorExample> {
        if max < 0 {
            return Err(Error::Usage("floor example needs max ≥ 0".into()));
        }
        let ints: Vec<i64> = (0..=max).collect();
        let values: Vec<Ratio<i64>> = (0..=2 * max).map(|k| Ratio::new(k, 2)).collect();
        let integers = BiPoset::new(GroundSet::new(ints.iter().map(i64::to_string))?, total_order(&ints))?;
        let rationals = BiPoset::new(GroundSet::new(values.iter().map(label))?, total_order(&values))?;
        let position = |r: Ratio<i64>| values.iter().position(|v| *v == r).expect("integer is a half");
        let f = Mapping::new(ints.iter().map(|&i| position(Ratio::from_integer(i))).collect(), values.len())?;
        let g = Mapping::new(values.iter().map(|v| v.floor().to_integer() as usize).collect(), ints.len())?;
        Ok(FloorExample { integers, rationals, values, pair: GaloisPair::new(f, g)? })
    }
}
