//! List the orthomodular lattices up to a given size, one line per
//! isomorphism class.
//!
//!     cargo run --example enumerate_omls -- 8

use oml_core::{enumerate_ortho_structures, is_boolean, EnumerationConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_size = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(8);
    let cfg = EnumerationConfig::new(max_size).orthomodular(true);
    let omls = enumerate_ortho_structures(&cfg)?;

    for c in &omls {
        let l = c.lattice();
        let atoms = l.elements().filter(|&x| l.covers().iter().any(|&(b, a)| b == l.bottom() && a == x)).count();
        let kind = if is_boolean(c).boolean { "boolean" } else { "non-boolean" };
        println!("n={:<2} atoms={atoms} {kind}", l.len());
    }
    println!("{} classes up to {max_size} elements", omls.len());
    Ok(())
}
