//! Graphviz rendering of Hasse diagrams.

use std::fmt::Write as _;

use crate::order::BoundedLattice;
use crate::ortho::UnaryTable;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram as a `digraph` drawn bottom-up. Cover edges point upward;
/// complement pairs, when given, are dashed edges without arrowheads that
/// do not affect ranking.
pub fn export_dot(l: &BoundedLattice, comp: Option<&UnaryTable>) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n");
    let _ = writeln!(out, "  {{ rank=min; {}; }}", quote(l.name(l.bottom())));
    for x in l.elements() {
        let _ = writeln!(out, "  {};", quote(l.name(x)));
    }
    for (lo, hi) in l.covers() {
        let _ = writeln!(out, "  {} -> {};", quote(l.name(lo)), quote(l.name(hi)));
    }
    if let Some(comp) = comp {
        for x in l.elements() {
            let y = comp.get(x);
            if x < y {
                let _ = writeln!(
                    out,
                    "  {} -> {} [dir=none, style=dashed, constraint=false];",
                    quote(l.name(x)),
                    quote(l.name(y))
                );
            }
        }
    }
    out.push_str("}\n");
    out
}
