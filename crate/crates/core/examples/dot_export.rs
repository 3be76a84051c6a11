//! Write the Hasse diagram of a structure file as Graphviz DOT.
//!
//!     cargo run --example dot_export -- crates/core/data/mo2.ortho | dot -Tsvg > mo2.svg

use oml_core::{derived_negation, export_dot, parse_structure, Structure};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => oml_core::serialize_structure(&oml_core::fixtures::mo2().into()),
    };
    let dot = match parse_structure(&text)? {
        Structure::Lattice(l) => export_dot(&l, None),
        Structure::Ortho(c) => export_dot(c.lattice(), Some(c.comp())),
        Structure::Groupoid(g) => export_dot(g.lattice(), Some(&derived_negation(&g))),
    };
    print!("{dot}");
    Ok(())
}
