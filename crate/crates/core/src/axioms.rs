//! Axiom checks for relation pairs, plus the classical single-relation
//! partial-order check used for comparison.
//!
//! Every check quantifies over the full ground set. Witnesses are the
//! lexicographically least violating tuple in index order. The decision
//! procedures work on packed rows; the least witness is only searched for
//! once a violation is known to exist.

use crate::biposet::{Diamond, GroundSet};
use crate::relation::{bits, intersects, Rel};
use crate::verdict::Verdict;

/// Which conclusion of the transitivity axiom a witness breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailedConclusion {
    /// `a ≼₁ d ≼₂ c` does not hold.
    First,
    /// `a ≼₁ b ≼₂ e` does not hold.
    Second,
    Both,
}

/// A 5-tuple `(a, b, c, d, e)` satisfying the transitivity premise whose
/// conclusion fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransitivityViolation {
    pub tuple: [usize; 5],
    pub failed: FailedConclusion,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AxiomVerdict {
    pub reflexive: Verdict<usize>,
    pub antisymmetric: Verdict<(usize, usize, usize)>,
    pub transitive: Verdict<TransitivityViolation>,
}

impl AxiomVerdict {
    pub fn passes(&self) -> bool {
        self.reflexive.holds() && self.antisymmetric.holds() && self.transitive.holds()
    }

    /// The first failing axiom and its witness, using the given labels.
    pub fn describe(&self, ground: &GroundSet) -> String {
        let l = |i: usize| ground.label(i);
        if let Some(&a) = self.reflexive.witness() {
            return format!("reflexivity fails at {}", l(a));
        }
        if let Some(&(a, b, c)) = self.antisymmetric.witness() {
            return format!("anti-symmetry fails at (a, b, c) = ({}, {}, {})", l(a), l(b), l(c));
        }
        if let Some(t) = self.transitive.witness() {
            let [a, b, c, d, e] = t.tuple;
            let which = match t.failed {
                FailedConclusion::First => "first conclusion",
                FailedConclusion::Second => "second conclusion",
                FailedConclusion::Both => "both conclusions",
            };
            return format!(
                "transitivity fails at (a, b, c, d, e) = ({}, {}, {}, {}, {}), {which}",
                l(a),
                l(b),
                l(c),
                l(d),
                l(e)
            );
        }
        "all axioms hold".into()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassicalVerdict {
    pub reflexive: Verdict<usize>,
    pub antisymmetric: Verdict<(usize, usize)>,
    pub transitive: Verdict<(usize, usize, usize)>,
}

impl ClassicalVerdict {
    pub fn passes(&self) -> bool {
        self.reflexive.holds() && self.antisymmetric.holds() && self.transitive.holds()
    }

    pub fn describe(&self, ground: &GroundSet) -> String {
        let l = |i: usize| ground.label(i);
        if let Some(&a) = self.reflexive.witness() {
            return format!("reflexivity fails at {}", l(a));
        }
        if let Some(&(a, b)) = self.antisymmetric.witness() {
            return format!("anti-symmetry fails at ({}, {})", l(a), l(b));
        }
        if let Some(&(a, b, c)) = self.transitive.witness() {
            return format!("transitivity fails at ({}, {}, {})", l(a), l(b), l(c));
        }
        "partial order".into()
    }
}

/// Row-packed view of a diamond with both transposes precomputed.
struct Packed<'a> {
    n: usize,
    r1: &'a Rel,
    r2: &'a Rel,
    t1: Rel,
    t2: Rel,
}

impl<'a> Packed<'a> {
    fn new(d: &'a Diamond) -> Self {
        Packed { n: d.n(), r1: d.r1(), r2: d.r2(), t1: d.r1().transpose(), t2: d.r2().transpose() }
    }

    fn reflexive(&self) -> Verdict<usize> {
        (0..self.n).find(|&a| !(self.r1.get(a, a) && self.r2.get(a, a))).into()
    }

    /// Premise `a≼₁b≼₂c ∧ b≼₁a≼₂c ∧ a≼₁c≼₂b`: for fixed `(a, b)` the
    /// admissible `c` are `row2[b] ∩ row2[a] ∩ row1[a] ∩ col2[b]`.
    fn antisymmetric(&self) -> Verdict<(usize, usize, usize)> {
        let wpr = self.r1.words_per_row();
        let mut scratch = vec![0u64; wpr];
        for a in 0..self.n {
            let mutual: Vec<u64> = self.r1.row(a).iter().zip(self.t1.row(a)).map(|(x, y)| x & y).collect();
            for b in bits(&mutual) {
                for (k, s) in scratch.iter_mut().enumerate() {
                    *s = self.r2.row(b)[k] & self.r2.row(a)[k] & self.r1.row(a)[k] & self.t2.row(b)[k];
                }
                if a == b {
                    scratch[a / 64] &= !(1 << (a % 64));
                }
                if let Some(c) = bits(&scratch).next() {
                    return Verdict::Fails((a, b, c));
                }
            }
        }
        Verdict::Holds
    }

    /// Decides transitivity without enumerating 5-tuples.
    ///
    /// First conclusion fails for some tuple iff there are `b ≼₁ d` with a
    /// common `≼₂` upper bound `c` that has some `≼₂` successor, and an `a`
    /// with `a ≼₁ b` but not `a ≼₁ d`.
    ///
    /// Second conclusion fails iff there is `b ≼₂ c` such that `b` has a
    /// `≼₁` predecessor, some `d` has `b ≼₁ d ≼₂ c`, and `c` has a `≼₂`
    /// successor `e` that `b` lacks.
    fn transitive_holds(&self) -> bool {
        let wpr = self.r1.words_per_row();
        let mut has_succ2 = vec![0u64; wpr];
        for c in 0..self.n {
            if self.r2.row(c).iter().any(|&w| w != 0) {
                has_succ2[c / 64] |= 1 << (c % 64);
            }
        }
        for b in 0..self.n {
            let pred_b = self.t1.row(b);
            for d in self.r1.successors(b) {
                let upper = (0..wpr).any(|k| self.r2.row(b)[k] & self.r2.row(d)[k] & has_succ2[k] != 0);
                if upper && pred_b.iter().zip(self.t1.row(d)).any(|(x, y)| x & !y != 0) {
                    return false;
                }
            }
            if pred_b.iter().all(|&w| w == 0) {
                continue;
            }
            for c in self.r2.successors(b) {
                if intersects(self.r1.row(b), self.t2.row(c))
                    && self.r2.row(c).iter().zip(self.r2.row(b)).any(|(x, y)| x & !y != 0)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Ordered search for the least violating 5-tuple.
    fn least_transitivity_violation(&self) -> Option<TransitivityViolation> {
        let wpr = self.r1.words_per_row();
        let mut missing = vec![0u64; wpr];
        for a in 0..self.n {
            for b in self.r1.successors(a) {
                for c in self.r2.successors(b) {
                    let row_c = self.r2.row(c);
                    let Some(e_min) = bits(row_c).next() else {
                        continue;
                    };
                    for (k, m) in missing.iter_mut().enumerate() {
                        *m = row_c[k] & !self.r2.row(b)[k];
                    }
                    let ds: Vec<u64> = self.r1.row(b).iter().zip(self.t2.row(c)).map(|(x, y)| x & y).collect();
                    for d in bits(&ds) {
                        if !self.r1.get(a, d) {
                            let failed =
                                if self.r2.get(b, e_min) { FailedConclusion::First } else { FailedConclusion::Both };
                            return Some(TransitivityViolation { tuple: [a, b, c, d, e_min], failed });
                        }
                        if let Some(e) = bits(&missing).next() {
                            return Some(TransitivityViolation {
                                tuple: [a, b, c, d, e],
                                failed: FailedConclusion::Second,
                            });
                        }
                    }
                }
            }
        }
        None
    }

    fn transitive(&self) -> Verdict<TransitivityViolation> {
        if self.transitive_holds() {
            Verdict::Holds
        } else {
            let w = self.least_transitivity_violation();
            debug_assert!(w.is_some(), "decision and witness search disagree");
            w.into()
        }
    }
}

/// Evaluates the three axioms of a partially ordered binary relation.
pub fn check_axioms(d: &Diamond) -> AxiomVerdict {
    let p = Packed::new(d);
    AxiomVerdict { reflexive: p.reflexive(), antisymmetric: p.antisymmetric(), transitive: p.transitive() }
}

/// Pass/fail only, short-circuiting on the first failing axiom.
pub fn axioms_hold(d: &Diamond) -> bool {
    let p = Packed::new(d);
    p.reflexive().holds() && p.antisymmetric().holds() && p.transitive_holds()
}

/// Classical reflexivity, anti-symmetry and transitivity of one relation.
pub fn check_classical_por(r: &Rel) -> ClassicalVerdict {
    let n = r.n();
    let t = r.transpose();
    let reflexive = (0..n).find(|&a| !r.get(a, a)).into();
    let antisymmetric = (0..n)
        .find_map(|a| {
            let mut mutual: Vec<u64> = r.row(a).iter().zip(t.row(a)).map(|(x, y)| x & y).collect();
            mutual[a / 64] &= !(1 << (a % 64));
            let first = bits(&mutual).next();
            first.map(|b| (a, b))
        })
        .into();
    let transitive = (0..n)
        .find_map(|a| {
            r.successors(a).find_map(|b| {
                let gap: Vec<u64> = r.row(b).iter().zip(r.row(a)).map(|(x, y)| x & !y).collect();
                let first = bits(&gap).next();
                first.map(|c| (a, b, c))
            })
        })
        .into();
    ClassicalVerdict { reflexive, antisymmetric, transitive }
}
