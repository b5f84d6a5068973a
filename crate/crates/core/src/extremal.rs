//! Greatest and least elements of each component, and the maximal/minimal
//! greatest and least elements derived from them.
//!
//! The `≼₁`-greatest element `x` satisfies `a ≼₁ x` for every `a`, and the
//! `≼₂`-greatest `y` satisfies `b ≼₂ y` for every `b`. Then
//! `g_max = sup{x, y}` and `g_min = inf{x, y}`, with sup and inf taken under
//! the `⋄` comparison. The least side is symmetric with `u`, `v`, `l_max`
//! and `l_min`.
//!
//! A single component need not be anti-symmetric, so a component can have
//! several greatest elements. Those are all reported, and every derived
//! value is computed over every combination of them.

use std::collections::BTreeSet;

use crate::biposet::{BiPoset, Diamond};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Greatest,
    Least,
}

/// Result of a one-sided extreme search.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Extreme {
    Absent,
    Unique(usize),
    /// More than one element qualifies.
    Multiple(Vec<usize>),
}

impl Extreme {
    fn from_candidates(mut c: Vec<usize>) -> Self {
        match c.len() {
            0 => Extreme::Absent,
            1 => Extreme::Unique(c.pop().unwrap()),
            _ => Extreme::Multiple(c),
        }
    }

    pub fn candidates(&self) -> &[usize] {
        match self {
            Extreme::Absent => &[],
            Extreme::Unique(x) => std::slice::from_ref(x),
            Extreme::Multiple(xs) => xs,
        }
    }

    pub fn unique(&self) -> Option<usize> {
        match self {
            Extreme::Unique(x) => Some(*x),
            _ => None,
        }
    }

    pub fn is_present(&self) -> bool {
        !matches!(self, Extreme::Absent)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    /// `≼₁`-greatest.
    pub x: Extreme,
    /// `≼₂`-greatest.
    pub y: Extreme,
    /// `≼₁`-least.
    pub u: Extreme,
    /// `≼₂`-least.
    pub v: Extreme,
    pub g_max: Option<usize>,
    pub g_min: Option<usize>,
    pub l_max: Option<usize>,
    pub l_min: Option<usize>,
    /// Every distinct value the sup/inf rule produced, one list per derived
    /// element. A list longer than one is a uniqueness violation.
    pub g_max_values: Vec<usize>,
    pub g_min_values: Vec<usize>,
    pub l_max_values: Vec<usize>,
    pub l_min_values: Vec<usize>,
    pub bounded: bool,
    pub notes: Vec<String>,
}

pub(crate) fn sided(d: &Diamond, component: Component, direction: Direction) -> Extreme {
    let r = match component {
        Component::First => d.r1(),
        Component::Second => d.r2(),
    };
    let n = d.n();
    let qualifies = |g: usize| match direction {
        Direction::Greatest => (0..n).all(|a| r.get(a, g)),
        Direction::Least => (0..n).all(|a| r.get(g, a)),
    };
    Extreme::from_candidates((0..n).filter(|&g| qualifies(g)).collect())
}

/// The greatest or least element of one component. Requires a validated
/// structure.
pub fn sided_extreme(bp: &BiPoset, component: Component, direction: Direction) -> Result<Extreme> {
    bp.require_validated()?;
    Ok(sided(bp.diamond(), component, direction))
}

fn sup(d: &Diamond, x: usize, y: usize) -> Option<usize> {
    if x == y || d.leq_at(y, x) {
        Some(x)
    } else if d.leq_at(x, y) {
        Some(y)
    } else {
        None
    }
}

fn inf(d: &Diamond, x: usize, y: usize) -> Option<usize> {
    if x == y || d.leq_at(x, y) {
        Some(x)
    } else if d.leq_at(y, x) {
        Some(y)
    } else {
        None
    }
}

/// Distinct values of `op` over all candidate combinations, and whether
/// some combination was incomparable.
fn combine(
    d: &Diamond,
    a: &Extreme,
    b: &Extreme,
    op: fn(&Diamond, usize, usize) -> Option<usize>,
) -> (Vec<usize>, bool) {
    let mut values = BTreeSet::new();
    let mut incomparable = false;
    for &p in a.candidates() {
        for &q in b.candidates() {
            match op(d, p, q) {
                Some(v) => {
                    values.insert(v);
                }
                None => incomparable = true,
            }
        }
    }
    (values.into_iter().collect(), incomparable)
}

fn single(values: &[usize]) -> Option<usize> {
    match values {
        [v] => Some(*v),
        _ => None,
    }
}

/// Computes the full extremal report. Requires a validated structure.
pub fn extremal_report(bp: &BiPoset) -> Result<ExtremalReport> {
    bp.require_validated()?;
    Ok(report_for(bp))
}

pub(crate) fn report_for(bp: &BiPoset) -> ExtremalReport {
    let d = bp.diamond();
    let g = bp.ground();
    let names = |xs: &[usize]| xs.iter().map(|&i| g.label(i)).collect::<Vec<_>>().join(", ");

    let x = sided(d, Component::First, Direction::Greatest);
    let y = sided(d, Component::Second, Direction::Greatest);
    let u = sided(d, Component::First, Direction::Least);
    let v = sided(d, Component::Second, Direction::Least);

    let mut notes = Vec::new();
    for (name, e) in [("≼₁-greatest", &x), ("≼₂-greatest", &y), ("≼₁-least", &u), ("≼₂-least", &v)] {
        if let Extreme::Multiple(c) = e {
            notes.push(format!("uniqueness anomaly: several {name} elements: {}", names(c)));
        }
    }

    let (g_max_values, gi) = combine(d, &x, &y, sup);
    let (g_min_values, _) = combine(d, &x, &y, inf);
    let (l_max_values, li) = combine(d, &u, &v, sup);
    let (l_min_values, _) = combine(d, &u, &v, inf);
    if gi {
        notes.push(format!(
            "greatest elements {} and {} are ⋄-incomparable",
            names(x.candidates()),
            names(y.candidates())
        ));
    }
    if li {
        notes.push(format!(
            "least elements {} and {} are ⋄-incomparable",
            names(u.candidates()),
            names(v.candidates())
        ));
    }
    for (name, vals) in [
        ("maximal greatest", &g_max_values),
        ("minimal greatest", &g_min_values),
        ("maximal least", &l_max_values),
        ("minimal least", &l_min_values),
    ] {
        if vals.len() > 1 {
            notes.push(format!("{name} element is not unique: {}", names(vals)));
        }
    }

    let g_max = single(&g_max_values);
    let l_min = single(&l_min_values);
    ExtremalReport {
        g_min: single(&g_min_values),
        l_max: single(&l_max_values),
        bounded: g_max.is_some() && l_min.is_some(),
        g_max,
        l_min,
        x,
        y,
        u,
        v,
        g_max_values,
        g_min_values,
        l_max_values,
        l_min_values,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biposet::Diamond;
    use crate::constructions::{divisibility_biposet, naturals_biposet, powerset_biposet};
    use crate::error::Error;
    use crate::relation::Rel;

    fn valid(bp: BiPoset) -> BiPoset {
        bp.into_validated().unwrap()
    }

    #[test]
    fn divisors_of_six() {
        let bp = valid(naturals_biposet(&[1, 2, 3, 6]).unwrap());
        assert_eq!(sided_extreme(&bp, Component::First, Direction::Greatest).unwrap(), Extreme::Unique(3));
        assert_eq!(sided_extreme(&bp, Component::Second, Direction::Greatest).unwrap(), Extreme::Unique(3));
        let r = extremal_report(&bp).unwrap();
        assert_eq!((r.g_max, r.g_min), (Some(3), Some(3)));
        assert_eq!((r.u.unique(), r.v.unique()), (Some(0), Some(0)));
        assert_eq!((r.l_max, r.l_min), (Some(0), Some(0)));
        assert!(r.bounded);
        assert!(r.notes.is_empty());
    }

    #[test]
    fn one_to_three_is_unbounded() {
        let bp = valid(divisibility_biposet(3).unwrap());
        assert_eq!(sided_extreme(&bp, Component::Second, Direction::Greatest).unwrap(), Extreme::Absent);
        let r = extremal_report(&bp).unwrap();
        assert_eq!(r.x, Extreme::Unique(2));
        assert_eq!(r.y, Extreme::Absent);
        assert_eq!((r.g_max, r.g_min), (None, None));
        assert_eq!((r.l_max, r.l_min), (Some(0), Some(0)));
        assert!(!r.bounded);
    }

    #[test]
    fn singleton_everything_is_the_element() {
        let bp = valid(divisibility_biposet(1).unwrap());
        for c in [Component::First, Component::Second] {
            for dir in [Direction::Greatest, Direction::Least] {
                assert_eq!(sided_extreme(&bp, c, dir).unwrap(), Extreme::Unique(0));
            }
        }
    }

    #[test]
    fn powerset_of_two() {
        let bp = valid(powerset_biposet(2).unwrap());
        let r = extremal_report(&bp).unwrap();
        assert_eq!((r.x.unique(), r.y.unique()), (Some(3), Some(3)));
        assert_eq!((r.g_max, r.g_min, r.l_max, r.l_min), (Some(3), Some(3), Some(0), Some(0)));
        assert!(r.bounded);
    }

    #[test]
    fn unvalidated_is_rejected() {
        let bp = divisibility_biposet(3).unwrap();
        assert_eq!(sided_extreme(&bp, Component::First, Direction::Least), Err(Error::NotValidated));
        assert_eq!(extremal_report(&bp), Err(Error::NotValidated));
    }

    #[test]
    fn several_first_component_greatest_elements() {
        // (full, Δ) is valid; every element is ≼₁-greatest, none is ≼₂-greatest
        let d = Diamond::new(Rel::full(2), Rel::identity(2)).unwrap();
        let bp = valid(BiPoset::with_standard_labels(d).unwrap());
        let r = extremal_report(&bp).unwrap();
        assert_eq!(r.x, Extreme::Multiple(vec![0, 1]));
        assert_eq!(r.y, Extreme::Absent);
        assert_eq!(r.g_max, None);
        assert!(r.notes.iter().any(|n| n.contains("uniqueness anomaly")));
    }

    #[test]
    fn incomparable_greatest_pair_is_noted() {
        // x = c (≼₁-top), y = b (≼₂-top), and neither c ⋄ b nor b ⋄ c
        let r1 = Rel::from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 2), (1, 2)]).unwrap();
        let r2 = Rel::from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (2, 1)]).unwrap();
        let bp = valid(BiPoset::with_standard_labels(Diamond::new(r1, r2).unwrap()).unwrap());
        let r = extremal_report(&bp).unwrap();
        assert_eq!((r.x.unique(), r.y.unique()), (Some(2), Some(1)));
        assert_eq!(r.g_max, None);
        assert!(r.notes.iter().any(|n| n.contains("incomparable")));
    }
}
