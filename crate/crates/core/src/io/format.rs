//! Line-oriented text formats.
//!
//! Structure files (`.bpo`):
//!
//! ```text
//! # optional comments
//! elements: a b c
//! r1: a b
//! r2: b c
//! ```
//!
//! Mapping files (`.map`) hold one `src -> dst` line per source element.
//! Pair files hold two mapping sections introduced by `f:` and `g:` lines.

use std::fmt::Write;

use crate::biposet::{BiPoset, Diamond, GroundSet};
use crate::error::{Error, Result};
use crate::galois::GaloisPair;
use crate::morphisms::Mapping;
use crate::relation::Rel;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

pub(crate) fn parse_structure_lines(lines: &[(usize, &str)]) -> Result<BiPoset> {
    let Some(&(first_no, first)) = lines.first() else {
        return Err(parse_err(1, "missing `elements:` line"));
    };
    let names = first.strip_prefix("elements:").ok_or_else(|| parse_err(first_no, "expected `elements:` line"))?;
    let labels: Vec<&str> = names.split_whitespace().collect();
    let mut seen = std::collections::HashSet::new();
    for l in &labels {
        if !seen.insert(*l) {
            return Err(parse_err(first_no, format!("duplicate element {l}")));
        }
    }
    let ground = GroundSet::new(labels.iter().copied()).map_err(|e| parse_err(first_no, e.to_string()))?;
    let n = ground.n();
    let mut r1 = Rel::empty(n);
    let mut r2 = Rel::empty(n);
    for &(no, line) in &lines[1..] {
        let (key, rest) =
            line.split_once(':').ok_or_else(|| parse_err(no, format!("expected `r1:` or `r2:`, found {line:?}")))?;
        let target = match key.trim() {
            "r1" => &mut r1,
            "r2" => &mut r2,
            "elements" => return Err(parse_err(no, "elements declared twice")),
            other => return Err(parse_err(no, format!("unknown key {other:?}"))),
        };
        let parts: Vec<&str> = rest.split_whitespace().collect();
        let [x, y] = parts[..] else {
            return Err(parse_err(no, format!("expected two element names, found {}", parts.len())));
        };
        let lookup =
            |name: &str| ground.index_of(name).ok_or_else(|| parse_err(no, format!("undeclared element {name}")));
        target.insert(lookup(x)?, lookup(y)?);
    }
    BiPoset::new(ground, Diamond::new(r1, r2)?)
}

/// Parses a structure file. The result is not validated.
pub fn parse_structure(text: &str) -> Result<BiPoset> {
    parse_structure_lines(&content_lines(text))
}

/// Canonical text: elements in order, then `r1` and `r2` pairs row-major.
pub fn serialize_structure(bp: &BiPoset) -> String {
    let g = bp.ground();
    let mut out = format!("elements: {}\n", g.labels().join(" "));
    for (key, r) in [("r1", bp.diamond().r1()), ("r2", bp.diamond().r2())] {
        for (i, j) in r.pairs() {
            let _ = writeln!(out, "{key}: {} {}", g.label(i), g.label(j));
        }
    }
    out
}

pub(crate) fn parse_mapping_lines(lines: &[(usize, &str)], src: &GroundSet, dst: &GroundSet) -> Result<Mapping> {
    let mut img: Vec<Option<usize>> = vec![None; src.n()];
    for &(no, line) in lines {
        let (a, b) =
            line.split_once("->").ok_or_else(|| parse_err(no, format!("expected `src -> dst`, found {line:?}")))?;
        let (a, b) = (a.trim(), b.trim());
        let i = src.index_of(a).ok_or_else(|| parse_err(no, format!("undeclared source element {a}")))?;
        let t = dst.index_of(b).ok_or_else(|| parse_err(no, format!("undeclared target element {b}")))?;
        match img[i] {
            Some(prev) if prev != t => {
                return Err(parse_err(no, format!("element {a} mapped twice")));
            }
            _ => img[i] = Some(t),
        }
    }
    let last = lines.last().map_or(1, |l| l.0);
    let img = img
        .into_iter()
        .enumerate()
        .map(|(i, t)| t.ok_or_else(|| parse_err(last, format!("mapping is not total: no image for {}", src.label(i)))))
        .collect::<Result<Vec<_>>>()?;
    Mapping::new(img, dst.n())
}

/// Parses a mapping file against the source and target ground sets.
pub fn parse_mapping(text: &str, src: &GroundSet, dst: &GroundSet) -> Result<Mapping> {
    parse_mapping_lines(&content_lines(text), src, dst)
}

pub fn serialize_mapping(f: &Mapping, src: &GroundSet, dst: &GroundSet) -> String {
    let mut out = String::new();
    for (i, &t) in f.img().iter().enumerate() {
        let _ = writeln!(out, "{} -> {}", src.label(i), dst.label(t));
    }
    out
}

/// Parses an `f:` / `g:` pair file for a connection `P → Q`.
pub fn parse_pair(text: &str, p: &GroundSet, q: &GroundSet) -> Result<GaloisPair> {
    let lines = content_lines(text);
    let mut f_lines = Vec::new();
    let mut g_lines = Vec::new();
    let mut section: Option<&mut Vec<(usize, &str)>> = None;
    let (mut saw_f, mut saw_g) = (false, false);
    for &(no, line) in &lines {
        match line {
            "f:" => {
                saw_f = true;
                section = Some(&mut f_lines);
            }
            "g:" => {
                saw_g = true;
                section = Some(&mut g_lines);
            }
            _ => match section.as_mut() {
                Some(s) => s.push((no, line)),
                None => return Err(parse_err(no, "mapping line before `f:` or `g:` header")),
            },
        }
    }
    let end = lines.last().map_or(1, |l| l.0);
    if !saw_f || !saw_g {
        return Err(parse_err(end, "pair file needs both `f:` and `g:` sections"));
    }
    let f = parse_mapping_lines(&f_lines, p, q)?;
    let g = parse_mapping_lines(&g_lines, q, p)?;
    GaloisPair::new(f, g)
}

pub fn serialize_pair(pair: &GaloisPair, p: &GroundSet, q: &GroundSet) -> String {
    format!("f:\n{}g:\n{}", serialize_mapping(pair.f(), p, q), serialize_mapping(pair.g(), q, p))
}
