//! Ground sets, relation pairs and the two comparison predicates everything
//! else is built from.
//!
//! Elements are dense indices `0..n` in label order. Labels only matter at
//! the I/O boundary.

use std::collections::HashSet;

use crate::axioms::{check_axioms, AxiomVerdict};
use crate::error::{Error, Result};
use crate::relation::Rel;

/// Ordered, duplicate-free element labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

/// Labels are restricted to `[A-Za-z0-9_{}]+` so that they survive the
/// whitespace-separated text format unchanged.
pub fn is_valid_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '{' | '}'))
}

impl GroundSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidGroundSet("ground set must be non-empty".into()));
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !is_valid_label(l) {
                return Err(Error::InvalidGroundSet(format!("invalid element name {l:?}")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidGroundSet(format!("duplicate element {l}")));
            }
        }
        Ok(GroundSet { labels })
    }

    /// Default labels: `a, b, c, …` up to 26 elements, `e0, e1, …` beyond.
    pub fn standard(n: usize) -> Result<Self> {
        if n <= 26 {
            GroundSet::new((0..n).map(|i| char::from(b'a' + i as u8).to_string()))
        } else {
            GroundSet::new((0..n).map(|i| format!("e{i}")))
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A pair of relations `(≼₁, ≼₂)` on one ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diamond {
    r1: Rel,
    r2: Rel,
}

impl Diamond {
    pub fn new(r1: Rel, r2: Rel) -> Result<Self> {
        if r1.n() != r2.n() {
            return Err(Error::DimensionMismatch { expected: r1.n(), found: r2.n() });
        }
        Ok(Diamond { r1, r2 })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.r1.n()
    }

    #[inline]
    pub fn r1(&self) -> &Rel {
        &self.r1
    }

    #[inline]
    pub fn r2(&self) -> &Rel {
        &self.r2
    }

    pub fn into_parts(self) -> (Rel, Rel) {
        (self.r1, self.r2)
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.n() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, n: self.n() })
        }
    }

    /// The chain `a ≼₁ b ≼₂ c`, read as `(a, b) ∈ ≼₁` and `(b, c) ∈ ≼₂`.
    pub fn chain(&self, a: usize, b: usize, c: usize) -> Result<bool> {
        for i in [a, b, c] {
            self.check_index(i)?;
        }
        Ok(self.chain_at(a, b, c))
    }

    /// `a ⋄ b`: related in both components at once.
    pub fn diamond_leq(&self, a: usize, b: usize) -> Result<bool> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.leq_at(a, b))
    }

    #[inline]
    pub(crate) fn chain_at(&self, a: usize, b: usize, c: usize) -> bool {
        self.r1.get(a, b) && self.r2.get(b, c)
    }

    #[inline]
    pub(crate) fn leq_at(&self, a: usize, b: usize) -> bool {
        self.r1.get(a, b) && self.r2.get(a, b)
    }

    /// The `⋄` comparison materialised as a single relation.
    pub fn leq_relation(&self) -> Rel {
        self.r1.intersection(&self.r2).expect("components share dimension")
    }
}

/// A ground set with a relation pair, plus the axiom verdict once validated.
#[derive(Debug, Clone)]
pub struct BiPoset {
    ground: GroundSet,
    d: Diamond,
    certificate: Option<AxiomVerdict>,
}

impl PartialEq for BiPoset {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.d == other.d
    }
}

impl Eq for BiPoset {}

impl BiPoset {
    pub fn new(ground: GroundSet, d: Diamond) -> Result<Self> {
        if ground.n() != d.n() {
            return Err(Error::DimensionMismatch { expected: ground.n(), found: d.n() });
        }
        Ok(BiPoset { ground, d, certificate: None })
    }

    /// Wraps a relation pair with [`GroundSet::standard`] labels.
    pub fn with_standard_labels(d: Diamond) -> Result<Self> {
        BiPoset::new(GroundSet::standard(d.n())?, d)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn diamond(&self) -> &Diamond {
        &self.d
    }

    pub fn n(&self) -> usize {
        self.ground.n()
    }

    pub fn certificate(&self) -> Option<&AxiomVerdict> {
        self.certificate.as_ref()
    }

    /// Runs the axiom check and stores the verdict.
    pub fn validate(&mut self) -> &AxiomVerdict {
        self.certificate.get_or_insert_with(|| check_axioms(&self.d))
    }

    /// Validates and returns the structure, or [`Error::NotBiPoset`].
    pub fn into_validated(mut self) -> Result<Self> {
        if self.validate().passes() {
            Ok(self)
        } else {
            Err(Error::NotBiPoset)
        }
    }

    /// `true` only when a passing certificate is present.
    pub fn is_validated(&self) -> bool {
        self.certificate.as_ref().is_some_and(AxiomVerdict::passes)
    }

    pub(crate) fn require_validated(&self) -> Result<()> {
        match &self.certificate {
            Some(v) if v.passes() => Ok(()),
            Some(_) => Err(Error::NotBiPoset),
            None => Err(Error::NotValidated),
        }
    }
}
