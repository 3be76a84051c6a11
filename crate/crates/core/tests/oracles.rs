mod common;

use common::{all_unary_maps, is_orthocomplement, lattice_class_count, Order};
use oml_core::{
    canonical_certificate, enumerate_bounded_lattices, enumerate_orthocomplements, fixtures, BoundedLattice,
    EnumerationConfig, DEFAULT_PERMUTATION_BUDGET,
};

fn order_of(l: &BoundedLattice) -> Order {
    let n = l.len();
    let leq = l.elements().flat_map(|x| l.elements().map(move |y| (x, y))).map(|(x, y)| l.leq(x, y)).collect();
    Order { n, leq }
}

fn brute_complements(l: &BoundedLattice, omod: bool) -> Vec<Vec<usize>> {
    let o = order_of(l);
    let mut out: Vec<_> = all_unary_maps(l.len()).filter(|c| is_orthocomplement(&o, c, omod)).collect();
    out.sort();
    out
}

fn library_complements(l: &BoundedLattice, omod: bool) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> =
        enumerate_orthocomplements(l, omod).iter().map(|u| u.as_slice().iter().map(|x| x.index()).collect()).collect();
    out.sort();
    out
}

#[test]
fn lattice_counts_match_labeled_oracle() {
    let all = enumerate_bounded_lattices(&EnumerationConfig::new(6)).unwrap();
    for n in 1..=6 {
        let ours = all.iter().filter(|l| l.len() == n).count();
        assert_eq!(ours, lattice_class_count(n), "n = {n}");
    }
}

#[test]
fn enumerated_lattices_are_pairwise_non_isomorphic() {
    let all = enumerate_bounded_lattices(&EnumerationConfig::new(6)).unwrap();
    let mut oracle_forms: Vec<_> = all.iter().map(|l| order_of(l).brute_canonical()).collect();
    oracle_forms.sort();
    oracle_forms.dedup();
    assert_eq!(oracle_forms.len(), all.len());
    let mut certs: Vec<_> =
        all.iter().map(|l| canonical_certificate(l, None, DEFAULT_PERMUTATION_BUDGET).unwrap()).collect();
    certs.sort();
    certs.dedup();
    assert_eq!(certs.len(), all.len());
}

#[test]
fn mo2_complements_match_brute_force() {
    let mo2 = fixtures::mo2();
    for omod in [false, true] {
        let brute = brute_complements(mo2.lattice(), omod);
        assert_eq!(brute.len(), 3);
        assert_eq!(library_complements(mo2.lattice(), omod), brute);
    }
}

#[test]
fn hexagon_complements_match_brute_force() {
    let o6 = fixtures::o6();
    assert_eq!(brute_complements(o6.lattice(), true), Vec::<Vec<usize>>::new());
    assert_eq!(library_complements(o6.lattice(), true), Vec::<Vec<usize>>::new());
    let brute = brute_complements(o6.lattice(), false);
    assert_eq!(brute, vec![vec![5, 4, 3, 2, 1, 0]]);
    assert_eq!(library_complements(o6.lattice(), false), brute);
}

#[test]
fn complements_of_every_small_lattice_match_brute_force() {
    for l in enumerate_bounded_lattices(&EnumerationConfig::new(6)).unwrap() {
        for omod in [false, true] {
            assert_eq!(library_complements(&l, omod), brute_complements(&l, omod), "{:?}", l.names());
        }
    }
}

#[test]
fn transitive_reduction_matches_covers() {
    for l in enumerate_bounded_lattices(&EnumerationConfig::new(7)).unwrap() {
        let covers: std::collections::BTreeSet<_> = l.covers().iter().map(|&(x, y)| (x.index(), y.index())).collect();
        assert_eq!(covers, order_of(&l).transitive_reduction());
    }
}
