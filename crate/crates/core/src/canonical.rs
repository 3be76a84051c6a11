//! Canonical certificates for isomorphism rejection.
//!
//! The certificate is the lexicographically smallest serialization of the
//! order matrix (plus an optional unary table) over every relabeling that
//! respects a cheap isomorphism-invariant vertex key. Bottom and top carry
//! unique keys, so they are always fixed. Because the key is invariant, the
//! minimum is taken over the same set of serializations for any two
//! isomorphic inputs, which makes the result exact.

use std::cmp::Ordering;

use crate::error::Error;
use crate::order::{BoundedLattice, ElementId};
use crate::ortho::UnaryTable;

/// `8!`: enough to canonicalize any lattice with at most ten elements.
pub const DEFAULT_PERMUTATION_BUDGET: u64 = 40_320;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCertificate {
    bytes: Vec<u8>,
}

impl CanonicalCertificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }
}

/// A certificate together with the relabeling that produced it.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub certificate: CanonicalCertificate,
    /// `permutation[old] = new` position.
    pub permutation: Vec<usize>,
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).fold(1u64, |acc, k| acc.saturating_mul(k))
}

pub fn canonical_certificate(
    l: &BoundedLattice,
    unary: Option<&UnaryTable>,
    budget: u64,
) -> Result<CanonicalCertificate, Error> {
    canonical_form(l, unary, budget).map(|f| f.certificate)
}

pub fn canonical_form(l: &BoundedLattice, unary: Option<&UnaryTable>, budget: u64) -> Result<CanonicalForm, Error> {
    let n = l.len();
    if let Some(u) = unary {
        assert_eq!(u.len(), n, "unary table must be total on the carrier");
    }
    let covers = l.covers();
    let keys: Vec<_> = l.elements().map(|x| vertex_key(l, &covers, x)).collect();
    let mut sorted = keys.clone();
    sorted.sort();

    // Size of each key class in position order.
    let mut required = 1u64;
    let mut run = 0;
    for i in 0..n {
        run += 1;
        if i + 1 == n || sorted[i + 1] != sorted[i] {
            required = required.saturating_mul(factorial(run));
            run = 0;
        }
    }
    if required > budget {
        return Err(Error::SizeLimitExceeded { required, budget });
    }

    let mut search = Search {
        l,
        unary,
        keys: &keys,
        slot_keys: &sorted,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        prefix: vec![n as u8, unary.is_some() as u8],
        best: None,
    };
    search.descend();
    let (bytes, order) = search.best.expect("at least one permutation");
    let mut permutation = vec![0; n];
    for (pos, &x) in order.iter().enumerate() {
        permutation[x] = pos;
    }
    Ok(CanonicalForm { certificate: CanonicalCertificate { bytes }, permutation })
}

type Key = (usize, usize, usize, usize);

/// `(down-set size, up-set size, lower covers, upper covers)`. Bottom has the
/// unique smallest down-set and top the unique largest.
fn vertex_key(l: &BoundedLattice, covers: &[(ElementId, ElementId)], x: ElementId) -> Key {
    let down = l.elements().filter(|&y| l.leq(y, x)).count();
    let up = l.elements().filter(|&y| l.leq(x, y)).count();
    let lower = covers.iter().filter(|&&(_, hi)| hi == x).count();
    let upper = covers.iter().filter(|&&(lo, _)| lo == x).count();
    (down, up, lower, upper)
}

struct Search<'a> {
    l: &'a BoundedLattice,
    unary: Option<&'a UnaryTable>,
    keys: &'a [Key],
    slot_keys: &'a [Key],
    /// `order[pos] = old element`
    order: Vec<usize>,
    used: Vec<bool>,
    prefix: Vec<u8>,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self) {
        let n = self.l.len();
        let pos = self.order.len();
        if pos == n {
            self.finish();
            return;
        }
        for x in 0..n {
            if self.used[x] || self.keys[x] != self.slot_keys[pos] {
                continue;
            }
            let mark = self.prefix.len();
            for &q in &self.order {
                self.prefix.push(self.l.leq(ElementId(q), ElementId(x)) as u8);
                self.prefix.push(self.l.leq(ElementId(x), ElementId(q)) as u8);
            }
            let worse = match &self.best {
                Some((best, _)) => self.prefix[..].cmp(&best[..self.prefix.len()]) == Ordering::Greater,
                None => false,
            };
            if !worse {
                self.used[x] = true;
                self.order.push(x);
                self.descend();
                self.order.pop();
                self.used[x] = false;
            }
            self.prefix.truncate(mark);
        }
    }

    fn finish(&mut self) {
        let mut bytes = self.prefix.clone();
        if let Some(u) = self.unary {
            let mut position = vec![0u8; self.order.len()];
            for (pos, &x) in self.order.iter().enumerate() {
                position[x] = pos as u8;
            }
            bytes.extend(self.order.iter().map(|&x| position[u.get(ElementId(x)).0]));
        }
        let better = match &self.best {
            None => true,
            Some((best, _)) => bytes < *best,
        };
        if better {
            self.best = Some((bytes, self.order.clone()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn relabeled_mo2_has_same_certificate() {
        let l = fixtures::mo2().lattice().clone();
        let c1 = canonical_certificate(&l, None, DEFAULT_PERMUTATION_BUDGET).unwrap();
        let relabeled = l.permuted(&[5, 3, 1, 4, 2, 0]);
        let c2 = canonical_certificate(&relabeled, None, DEFAULT_PERMUTATION_BUDGET).unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn mo2_and_hexagon_differ() {
        let mo2 = fixtures::mo2();
        let o6 = fixtures::o6();
        let c1 = canonical_certificate(mo2.lattice(), None, DEFAULT_PERMUTATION_BUDGET).unwrap();
        let c2 = canonical_certificate(o6.lattice(), None, DEFAULT_PERMUTATION_BUDGET).unwrap();
        assert_ne!(c1, c2);
    }

    #[test]
    fn two_chain_is_stable() {
        let l = fixtures::chain(2);
        let f = canonical_form(&l, None, 1).unwrap();
        assert_eq!(f.permutation, vec![0, 1]);
        assert_eq!(f.certificate, canonical_certificate(&l, None, 1).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let l = fixtures::mo2().lattice().clone();
        // four interchangeable atoms need 4! relabelings
        let err = canonical_certificate(&l, None, 23).unwrap_err();
        assert_eq!(err, Error::SizeLimitExceeded { required: 24, budget: 23 });
    }

    #[test]
    fn unary_table_separates_non_isomorphic_complementations() {
        let mo2 = fixtures::mo2();
        let l = mo2.lattice();
        let id = |s| l.find(s).unwrap();
        // pair a with b instead of a'; still isomorphic to the standard one
        let mut alt = mo2.comp().clone();
        alt.set(id("a"), id("b"));
        alt.set(id("b"), id("a"));
        alt.set(id("a'"), id("b'"));
        alt.set(id("b'"), id("a'"));
        let c1 = canonical_certificate(l, Some(mo2.comp()), DEFAULT_PERMUTATION_BUDGET).unwrap();
        let c2 = canonical_certificate(l, Some(&alt), DEFAULT_PERMUTATION_BUDGET).unwrap();
        assert_eq!(c1, c2);
        let identity = UnaryTable::identity(l.len());
        let c3 = canonical_certificate(l, Some(&identity), DEFAULT_PERMUTATION_BUDGET).unwrap();
        assert_ne!(c1, c3);
    }
}
