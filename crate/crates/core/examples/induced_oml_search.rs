//! Pair every small lattice with every unary map, build the Sasaki tables,
//! and keep the groupoids whose negation is an antitone involution and that
//! satisfy the core laws plus product absorption. Each survivor should
//! induce an orthomodular lattice.

use oml_core::correspondence::induced_candidate;
use oml_core::{
    enumerate_bounded_lattices, sasaki_tables, verify_lrg, verify_oml, AxiomProfile, EnumerationConfig, OrthoCandidate,
    UnaryTable,
};

fn unary_maps(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(n as u32)).map(move |mut code| {
        (0..n)
            .map(|_| {
                let d = code % n;
                code /= n;
                d
            })
            .collect()
    })
}

fn main() -> Result<(), oml_core::Error> {
    let negation = AxiomProfile::ANTITONY | AxiomProfile::DOUBLE_NEGATION;
    let hypotheses = AxiomProfile::CORE | AxiomProfile::PRODUCT_ABSORPTION;
    for l in enumerate_bounded_lattices(&EnumerationConfig::new(6))? {
        let mut kept = 0;
        for map in unary_maps(l.len()) {
            let g = sasaki_tables(&OrthoCandidate::new(l.clone(), UnaryTable::from_indices(&map))?);
            if !verify_lrg(&g, negation).overall() || !verify_lrg(&g, hypotheses).overall() {
                continue;
            }
            assert!(verify_oml(&induced_candidate(&g)).overall());
            kept += 1;
        }
        if kept > 0 {
            println!("n={} {:?}: {kept} groupoid(s), all induce OMLs", l.len(), l.names());
        }
    }
    Ok(())
}
