//! Print the Sasaki product and implication tables of MO2.

use oml_core::fixtures::mo2;
use oml_core::{sasaki_groupoid, verify_lrg, AxiomProfile};

fn main() -> Result<(), oml_core::Error> {
    let g = sasaki_groupoid(&mo2())?;
    let l = g.lattice();
    let width = l.names().iter().map(String::len).max().unwrap_or(1);

    for (title, op) in [("x * y", 0), ("x -> y", 1)] {
        print!("{title:>8} |");
        for y in l.elements() {
            print!(" {:>width$}", l.name(y));
        }
        println!();
        for x in l.elements() {
            print!("{:>8} |", l.name(x));
            for y in l.elements() {
                let z = if op == 0 { g.odot(x, y) } else { g.imp(x, y) };
                print!(" {:>width$}", l.name(z));
            }
            println!();
        }
        println!();
    }

    println!("{}", verify_lrg(&g, AxiomProfile::SASAKI_IMAGE));
    Ok(())
}
