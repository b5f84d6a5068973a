//! Findings and their replayable witnesses.
//!
//! A witness serializes as text sections:
//!
//! ```text
//! --- structure P
//! elements: a b
//! r1: a b
//! --- map f P Q
//! a -> x
//! --- note
//! free text
//! ```
//!
//! Structure bodies use the `.bpo` format and map bodies the `.map` format.
//! A map section names its source and target structures, which must appear
//! earlier in the document.

use std::fmt;

use crate::biposet::BiPoset;
use crate::error::{Error, Result};
use crate::io::format::{parse_mapping_lines, parse_structure_lines, serialize_mapping, serialize_structure};
use crate::morphisms::Mapping;

use super::claims::ClaimId;

#[derive(Debug, Clone, PartialEq)]
pub struct NamedStructure {
    pub name: String,
    pub structure: BiPoset,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedMap {
    pub name: String,
    pub src: String,
    pub dst: String,
    pub map: Mapping,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Witness {
    pub structures: Vec<NamedStructure>,
    pub maps: Vec<NamedMap>,
    pub note: String,
}

impl Witness {
    pub(crate) fn push_structure(&mut self, name: &str, structure: BiPoset) {
        self.structures.push(NamedStructure { name: name.to_string(), structure });
    }

    pub(crate) fn push_map(&mut self, name: &str, src: &str, dst: &str, map: Mapping) {
        self.maps.push(NamedMap { name: name.to_string(), src: src.to_string(), dst: dst.to_string(), map });
    }

    pub fn structure(&self, name: &str) -> Option<&BiPoset> {
        self.structures.iter().find(|s| s.name == name).map(|s| &s.structure)
    }

    pub fn map(&self, name: &str) -> Option<&Mapping> {
        self.maps.iter().find(|m| m.name == name).map(|m| &m.map)
    }

    pub(crate) fn require_structure(&self, name: &str) -> Result<&BiPoset> {
        self.structure(name).ok_or_else(|| Error::Usage(format!("witness lacks structure {name}")))
    }

    pub(crate) fn require_map(&self, name: &str) -> Result<&Mapping> {
        self.map(name).ok_or_else(|| Error::Usage(format!("witness lacks map {name}")))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.structures {
            out.push_str(&format!("--- structure {}\n", s.name));
            out.push_str(&serialize_structure(&s.structure));
        }
        for m in &self.maps {
            let (src, dst) = match (self.structure(&m.src), self.structure(&m.dst)) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            out.push_str(&format!("--- map {} {} {}\n", m.name, m.src, m.dst));
            out.push_str(&serialize_mapping(&m.map, src.ground(), dst.ground()));
        }
        if !self.note.is_empty() {
            out.push_str("--- note\n");
            out.push_str(&self.note);
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Witness> {
        enum Header {
            Structure(String),
            Map(String, String, String),
            Note,
        }
        let mut sections: Vec<(usize, Header, Vec<(usize, &str)>)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let no = i + 1;
            if let Some(rest) = raw.strip_prefix("--- ") {
                let words: Vec<&str> = rest.split_whitespace().collect();
                let header = match words[..] {
                    ["structure", name] => Header::Structure(name.to_string()),
                    ["map", name, src, dst] => Header::Map(name.to_string(), src.to_string(), dst.to_string()),
                    ["note"] => Header::Note,
                    _ => return Err(Error::Parse { line: no, message: format!("unknown section header {raw:?}") }),
                };
                sections.push((no, header, Vec::new()));
            } else if let Some(last) = sections.last_mut() {
                last.2.push((no, raw));
            } else if !raw.trim().is_empty() && !raw.trim_start().starts_with('#') {
                return Err(Error::Parse { line: no, message: "content before the first section header".into() });
            }
        }
        let content = |lines: &[(usize, &str)]| -> Vec<(usize, String)> {
            lines
                .iter()
                .map(|&(n, l)| (n, l.trim().to_string()))
                .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
                .collect()
        };
        let mut w = Witness::default();
        for (no, header, lines) in sections {
            match header {
                Header::Structure(name) => {
                    let owned = content(&lines);
                    let borrowed: Vec<(usize, &str)> = owned.iter().map(|(n, l)| (*n, l.as_str())).collect();
                    let lines = if borrowed.is_empty() { vec![(no, "")] } else { borrowed };
                    w.push_structure(&name, parse_structure_lines(&lines)?);
                }
                Header::Map(name, src, dst) => {
                    let unknown =
                        |s: &str| Error::Parse { line: no, message: format!("map refers to unknown structure {s}") };
                    let sg = w.structure(&src).ok_or_else(|| unknown(&src))?.ground().clone();
                    let dg = w.structure(&dst).ok_or_else(|| unknown(&dst))?.ground().clone();
                    let owned = content(&lines);
                    let borrowed: Vec<(usize, &str)> = owned.iter().map(|(n, l)| (*n, l.as_str())).collect();
                    let map = parse_mapping_lines(&borrowed, &sg, &dg)?;
                    w.push_map(&name, &src, &dst, map);
                }
                Header::Note => {
                    let body: Vec<&str> = lines.iter().map(|(_, l)| *l).collect();
                    w.note = body.join("\n").trim().to_string();
                }
            }
        }
        Ok(w)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimVerdict {
    /// No violation at any scale up to `n_max`.
    Verified,
    Counterexample,
    /// Existential claims only: no example found up to `n_max`.
    NotExhibited,
}

impl fmt::Display for ClaimVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimVerdict::Verified => "verified-at-scale",
            ClaimVerdict::Counterexample => "counterexample",
            ClaimVerdict::NotExhibited => "not-exhibited",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepMode {
    Exhaustive,
    Sampled,
}

/// Sweep statistics for one combination of structure sizes.
///
/// The sweep unit is a candidate structure for single-structure claims and
/// a tuple of valid structures for claims over several structures. Within a
/// unit every relevant instance (map, map pair, bijection) is evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaleStats {
    pub sizes: Vec<usize>,
    pub mode: SweepMode,
    /// Number of sweep units at this scale.
    pub space: u64,
    /// Units actually visited.
    pub examined: u64,
    pub instances: u64,
    /// Instances that satisfy the claim's hypothesis.
    pub in_domain: u64,
    pub violations: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Finding {
    pub claim: ClaimId,
    pub n_max: usize,
    pub budget: u64,
    pub seed: u64,
    pub verdict: ClaimVerdict,
    pub instances_checked: u64,
    pub scales: Vec<ScaleStats>,
    /// The minimal counterexample, or the minimal example for an
    /// existential claim.
    pub witness: Option<Witness>,
}

impl Finding {
    pub fn sampled(&self) -> bool {
        self.scales.iter().any(|s| s.mode == SweepMode::Sampled)
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# claim: {}", self.claim)?;
        writeln!(f, "# verdict: {}", self.verdict)?;
        writeln!(f, "# n_max: {}", self.n_max)?;
        writeln!(f, "# budget: {}", self.budget)?;
        writeln!(f, "# seed: {}", self.seed)?;
        writeln!(f, "# instances_checked: {}", self.instances_checked)?;
        for s in &self.scales {
            let sizes: Vec<String> = s.sizes.iter().map(ToString::to_string).collect();
            let mode = match s.mode {
                SweepMode::Exhaustive => "exhaustive",
                SweepMode::Sampled => "sampled",
            };
            writeln!(
                f,
                "# scale {}: {mode} {}/{} units, {} instances, {} in domain, {} violations",
                sizes.join("x"),
                s.examined,
                s.space,
                s.instances,
                s.in_domain,
                s.violations
            )?;
        }
        if let Some(w) = &self.witness {
            f.write_str(&w.to_text())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dual_biposet, powerset_biposet};
    use crate::morphisms::powerset_complement;

    #[test]
    fn witness_round_trip() {
        let p = powerset_biposet(2).unwrap();
        let mut w = Witness::default();
        w.push_structure("P", p.clone());
        w.push_structure("dual", dual_biposet(&p));
        w.push_map("f", "P", "dual", powerset_complement(2));
        w.note = "two lines\nof note".into();
        let text = w.to_text();
        assert!(text.starts_with("--- structure P\nelements: s0 s1 s2 s3\n"));
        let back = Witness::parse(&text).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn witness_errors() {
        assert!(matches!(Witness::parse("elements: a"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Witness::parse("--- bogus"), Err(Error::Parse { line: 1, .. })));
        let text = "--- structure P\nelements: a\n--- map f P Q\na -> a\n";
        assert!(matches!(Witness::parse(text), Err(Error::Parse { line: 3, .. })));
        let text = "--- structure P\nelements: a\nr1: a b\n";
        assert!(matches!(Witness::parse(text), Err(Error::Parse { line: 3, .. })));
    }
}
