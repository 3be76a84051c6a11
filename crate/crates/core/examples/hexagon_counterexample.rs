//! The hexagon is an ortholattice but not orthomodular. Its Sasaki tables
//! still exist, they just stop being residuated.

use oml_core::fixtures::o6;
use oml_core::{check_orthomodularity, sasaki_groupoid, sasaki_tables, verify_lrg, Axiom, AxiomProfile};

fn main() {
    let hexagon = o6();

    let report = check_orthomodularity(&hexagon);
    println!("{report}\n");

    if let Err(e) = sasaki_groupoid(&hexagon) {
        println!("refused: {e}\n");
    }

    let forced = sasaki_tables(&hexagon);
    let report = verify_lrg(&forced, AxiomProfile::SASAKI_IMAGE);
    for axiom in [Axiom::LeftAdjointness, Axiom::Divisibility, Axiom::ProductAbsorption] {
        match report.witness(axiom) {
            Some(w) => println!("{:<18} fails at {w}", axiom.id()),
            None => println!("{:<18} holds", axiom.id()),
        }
    }
}
