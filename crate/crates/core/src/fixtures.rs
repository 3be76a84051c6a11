//! Small named structures used throughout tests and examples.

use crate::order::{BoundedLattice, ElementId};
use crate::ortho::{OrthoCandidate, UnaryTable};

/// MO2: bottom, four pairwise incomparable atoms `a a' b b'`, top.
pub fn mo2() -> OrthoCandidate {
    let names = ["0", "a", "a'", "b", "b'", "1"];
    let covers = [("0", "a"), ("0", "a'"), ("0", "b"), ("0", "b'"), ("a", "1"), ("a'", "1"), ("b", "1"), ("b'", "1")];
    let l = BoundedLattice::from_covers(&names, &covers).expect("MO2 is a lattice");
    OrthoCandidate::new(l, UnaryTable::from_indices(&[5, 2, 1, 4, 3, 0])).expect("total")
}

/// The hexagon O6: chains `0 < x < y < 1` and `0 < y' < x' < 1`, with
/// `x <-> x'` and `y <-> y'`.
pub fn o6() -> OrthoCandidate {
    let names = ["0", "x", "y", "y'", "x'", "1"];
    let covers = [("0", "x"), ("x", "y"), ("y", "1"), ("0", "y'"), ("y'", "x'"), ("x'", "1")];
    let l = BoundedLattice::from_covers(&names, &covers).expect("O6 is a lattice");
    OrthoCandidate::new(l, UnaryTable::from_indices(&[5, 4, 3, 2, 1, 0])).expect("total")
}

/// The `n`-element chain `0 < c1 < ... < 1`.
pub fn chain(n: usize) -> BoundedLattice {
    assert!(n >= 1);
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i + 1 == n => "1".to_string(),
            i => format!("c{i}"),
        })
        .collect();
    let covers: Vec<(String, String)> = names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
    BoundedLattice::from_covers(&names, &covers).expect("chains are lattices")
}

/// The Boolean algebra of subsets of `k` atoms with set complement.
///
/// Elements are named by their atoms (`a`, `ab`, ...), with `0` and `1` for
/// the empty and full set. `k = 0` gives the one-element lattice.
pub fn boolean(k: usize) -> OrthoCandidate {
    assert!(k <= 5);
    let n = 1usize << k;
    let full = n - 1;
    let name = |set: usize| -> String {
        if set == 0 {
            "0".into()
        } else if set == full {
            "1".into()
        } else {
            (0..k).filter(|i| set & (1 << i) != 0).map(|i| (b'a' + i as u8) as char).collect()
        }
    };
    // order subsets by size, then numerically, so bottom comes first
    let mut sets: Vec<usize> = (0..n).collect();
    sets.sort_by_key(|&s| (s.count_ones(), s));
    let names: Vec<String> = sets.iter().map(|&s| name(s)).collect();
    let mut covers = Vec::new();
    for &s in &sets {
        for i in 0..k {
            if s & (1 << i) == 0 {
                covers.push((name(s), name(s | (1 << i))));
            }
        }
    }
    let l = BoundedLattice::from_covers(&names, &covers).expect("power sets are lattices");
    let position = |set: usize| ElementId(sets.iter().position(|&t| t == set).unwrap());
    let comp = UnaryTable::new(sets.iter().map(|&s| position(full & !s)).collect(), n).expect("total");
    OrthoCandidate::new(l, comp).expect("total")
}
