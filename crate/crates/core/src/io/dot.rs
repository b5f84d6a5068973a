//! Graphviz output.
//!
//! A component that is a classical partial order is drawn as its covering
//! relation, bottom-up. Any other component is drawn with all of its
//! non-loop pairs and a comment saying so.

use std::fmt::Write;

use crate::axioms::check_classical_por;
use crate::biposet::BiPoset;
use crate::relation::Rel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DotComponent {
    First,
    Second,
    Both,
}

/// Covering pairs of a classical partial order.
pub fn covering_relation(r: &Rel) -> Rel {
    let n = r.n();
    Rel::from_fn(n, |a, b| a != b && r.get(a, b) && !(0..n).any(|c| c != a && c != b && r.get(a, c) && r.get(c, b)))
}

fn edges(r: &Rel) -> (Vec<(usize, usize)>, bool) {
    if check_classical_por(r).passes() {
        (covering_relation(r).pairs().collect(), true)
    } else {
        (r.pairs().filter(|(a, b)| a != b).collect(), false)
    }
}

fn quote(s: &str) -> String {
    format!("\"{s}\"")
}

pub fn emit_dot(bp: &BiPoset, which: DotComponent) -> String {
    let g = bp.ground();
    let d = bp.diamond();
    let parts: Vec<(&str, &Rel, &str)> = match which {
        DotComponent::First => vec![("r1", d.r1(), "solid")],
        DotComponent::Second => vec![("r2", d.r2(), "solid")],
        DotComponent::Both => vec![("r1", d.r1(), "solid"), ("r2", d.r2(), "dashed")],
    };
    let mut out = String::from("digraph biposet {\n  rankdir=BT;\n");
    for l in g.labels() {
        let _ = writeln!(out, "  {};", quote(l));
    }
    for (name, r, style) in parts {
        let (es, reduced) = edges(r);
        if reduced {
            let _ = writeln!(out, "  // {name}: covering relation");
        } else {
            let _ = writeln!(out, "  // {name}: not a partial order, raw edges without reduction");
        }
        for (a, b) in es {
            let _ =
                writeln!(out, "  {} -> {} [style={style}, label=\"{name}\"];", quote(g.label(a)), quote(g.label(b)));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biposet::Diamond;
    use crate::constructions::divisibility_biposet;

    fn edge_lines(dot: &str) -> Vec<&str> {
        dot.lines().filter(|l| l.contains("->")).collect()
    }

    #[test]
    fn identity_has_no_edges() {
        let bp = BiPoset::with_standard_labels(Diamond::new(Rel::identity(2), Rel::identity(2)).unwrap()).unwrap();
        let dot = emit_dot(&bp, DotComponent::Both);
        assert!(edge_lines(&dot).is_empty());
        assert!(dot.contains("  \"a\";") && dot.contains("  \"b\";"));
    }

    #[test]
    fn divisibility_covering_edges() {
        let dot = emit_dot(&divisibility_biposet(3).unwrap(), DotComponent::First);
        assert_eq!(
            edge_lines(&dot),
            vec!["  \"1\" -> \"2\" [style=solid, label=\"r1\"];", "  \"2\" -> \"3\" [style=solid, label=\"r1\"];"]
        );
    }

    #[test]
    fn non_poset_component_is_raw() {
        let bp = BiPoset::with_standard_labels(Diamond::new(Rel::full(2), Rel::identity(2)).unwrap()).unwrap();
        let dot = emit_dot(&bp, DotComponent::First);
        assert!(dot.contains("not a partial order"));
        assert_eq!(edge_lines(&dot).len(), 2);
        assert!(dot.contains("\"a\" -> \"b\"") && dot.contains("\"b\" -> \"a\""));
    }

    #[test]
    fn both_overlays_styles() {
        let dot = emit_dot(&divisibility_biposet(4).unwrap(), DotComponent::Both);
        assert!(dot.contains("style=dashed, label=\"r2\""));
        // divisibility on 1..4 covers: 1|2, 1|3, 2|4
        assert_eq!(dot.matches("label=\"r2\"").count(), 3);
    }
}
