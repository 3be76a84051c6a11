//! Relabel a lattice and show that its canonical certificate does not move.

use oml_core::fixtures::{mo2, o6};
use oml_core::{canonical_certificate, Structure, DEFAULT_PERMUTATION_BUDGET};

fn main() -> Result<(), oml_core::Error> {
    let Structure::Ortho(shuffled) = Structure::from(mo2()).permuted(&[5, 3, 1, 0, 2, 4]) else { unreachable!() };
    for (name, c) in [("MO2", mo2()), ("MO2 relabeled", shuffled), ("O6", o6())] {
        let cert = canonical_certificate(c.lattice(), Some(c.comp()), DEFAULT_PERMUTATION_BUDGET)?;
        println!("{name:<14} {:?}", c.lattice().names());
        println!("{:<14} {cert:?}", "");
    }
    Ok(())
}
