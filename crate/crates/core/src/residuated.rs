//! Lattices carrying a product `*` and an implication `->`, and the laws of
//! left residuated l-groupoids.
//!
//! Negation is always derived: `x' = x -> 0`. Every identity that mentions
//! `'` on a groupoid uses this derived negation.

use bitflags::bitflags;

use crate::error::Error;
use crate::order::{lattice_law, scan1, scan2, scan3, witness_of, BoundedLattice, ElementId, TRIVIAL_WARNING};
use crate::ortho::{ortho_law, UnaryTable};
use crate::report::{Axiom, VerificationReport, Witness};

/// A total `n x n` operation table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinOpTable {
    n: usize,
    cells: Vec<ElementId>,
}

impl BinOpTable {
    pub fn new(rows: Vec<Vec<ElementId>>, n: usize) -> Result<Self, Error> {
        if rows.len() != n {
            return Err(Error::TableNotTotal(format!("{} rows, expected {n}", rows.len())));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::TableNotTotal(format!("row {i} has {} entries, expected {n}", row.len())));
        }
        let cells: Vec<ElementId> = rows.into_iter().flatten().collect();
        if cells.iter().any(|x| x.0 >= n) {
            return Err(Error::TableNotTotal("entry outside the carrier".into()));
        }
        Ok(BinOpTable { n, cells })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(ElementId, ElementId) -> ElementId) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(f(ElementId(x), ElementId(y)));
            }
        }
        BinOpTable { n, cells }
    }

    #[inline]
    pub fn get(&self, x: ElementId, y: ElementId) -> ElementId {
        self.cells[x.0 * self.n + y.0]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn row(&self, x: ElementId) -> &[ElementId] {
        &self.cells[x.0 * self.n..(x.0 + 1) * self.n]
    }

    /// First cell in row-major order where the tables differ.
    pub fn first_difference(&self, other: &BinOpTable) -> Option<(ElementId, ElementId)> {
        assert_eq!(self.n, other.n);
        scan2(self.n, |x, y| self.get(x, y) != other.get(x, y)).map(|[x, y]| (x, y))
    }

    pub(crate) fn permuted(&self, perm: &[usize]) -> BinOpTable {
        let mut cells = vec![ElementId(0); self.cells.len()];
        for x in 0..self.n {
            for y in 0..self.n {
                cells[perm[x] * self.n + perm[y]] = ElementId(perm[self.get(ElementId(x), ElementId(y)).0]);
            }
        }
        BinOpTable { n: self.n, cells }
    }
}

/// A bounded lattice with product and implication tables. The groupoid laws
/// are checked by [`verify_lrg`], never assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrGroupoid {
    lattice: BoundedLattice,
    odot: BinOpTable,
    imp: BinOpTable,
}

impl LrGroupoid {
    pub fn new(lattice: BoundedLattice, odot: BinOpTable, imp: BinOpTable) -> Result<Self, Error> {
        let n = lattice.len();
        if odot.len() != n || imp.len() != n {
            return Err(Error::TableNotTotal("operation table does not match the carrier".into()));
        }
        Ok(LrGroupoid { lattice, odot, imp })
    }

    pub fn lattice(&self) -> &BoundedLattice {
        &self.lattice
    }

    pub fn odot_table(&self) -> &BinOpTable {
        &self.odot
    }

    pub fn imp_table(&self) -> &BinOpTable {
        &self.imp
    }

    #[inline]
    pub fn odot(&self, x: ElementId, y: ElementId) -> ElementId {
        self.odot.get(x, y)
    }

    #[inline]
    pub fn imp(&self, x: ElementId, y: ElementId) -> ElementId {
        self.imp.get(x, y)
    }

    /// `x -> 0`
    #[inline]
    pub fn neg(&self, x: ElementId) -> ElementId {
        self.imp.get(x, self.lattice.bottom())
    }

    pub(crate) fn permuted(&self, perm: &[usize]) -> LrGroupoid {
        LrGroupoid {
            lattice: self.lattice.permuted(perm),
            odot: self.odot.permuted(perm),
            imp: self.imp.permuted(perm),
        }
    }
}

/// The map `x -> (x -> 0)`.
pub fn derived_negation(g: &LrGroupoid) -> UnaryTable {
    UnaryTable::new(g.lattice.elements().map(|x| g.neg(x)).collect(), g.lattice.len()).expect("total")
}

bitflags! {
    /// Selects which groupoid laws a verification run checks.
    #[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
    pub struct AxiomProfile: u16 {
        const UNIT = 1 << 0;
        const LEFT_ADJOINTNESS = 1 << 1;
        const DIVISIBILITY = 1 << 2;
        const ANTITONY = 1 << 3;
        const DOUBLE_NEGATION = 1 << 4;
        /// `x * y = (x v y') ^ y`
        const SASAKI_PRODUCT = 1 << 5;
        /// `x -> y = (y ^ x) v x'`
        const SASAKI_IMPLICATION = 1 << 6;
        /// `x * (x v y) = x`
        const PRODUCT_ABSORPTION = 1 << 7;

        /// Unit laws and left adjointness: a left residuated l-groupoid.
        const CORE = Self::UNIT.bits() | Self::LEFT_ADJOINTNESS.bits();
        /// Everything the Sasaki groupoid of an orthomodular lattice satisfies.
        const SASAKI_IMAGE = Self::CORE.bits()
            | Self::DIVISIBILITY.bits()
            | Self::ANTITONY.bits()
            | Self::DOUBLE_NEGATION.bits()
            | Self::SASAKI_PRODUCT.bits()
            | Self::SASAKI_IMPLICATION.bits()
            | Self::PRODUCT_ABSORPTION.bits();
        /// What suffices to read an orthomodular lattice off a groupoid.
        const INDUCES_OML = Self::CORE.bits()
            | Self::ANTITONY.bits()
            | Self::DOUBLE_NEGATION.bits()
            | Self::SASAKI_PRODUCT.bits()
            | Self::PRODUCT_ABSORPTION.bits();
        /// Hypotheses for `A(L(A)) = A` without divisibility.
        const ROUND_TRIP = Self::INDUCES_OML.bits() | Self::SASAKI_IMPLICATION.bits();
        /// [`AxiomProfile::ROUND_TRIP`] plus divisibility.
        const ROUND_TRIP_DIVISIBLE = Self::ROUND_TRIP.bits() | Self::DIVISIBILITY.bits();
    }
}

impl AxiomProfile {
    /// Fixed report order of the individual flags.
    const ORDER: [(AxiomProfile, &'static [Axiom]); 8] = [
        (AxiomProfile::UNIT, &[Axiom::UnitRight, Axiom::UnitLeft]),
        (AxiomProfile::LEFT_ADJOINTNESS, &[Axiom::LeftAdjointness]),
        (AxiomProfile::DIVISIBILITY, &[Axiom::Divisibility]),
        (AxiomProfile::ANTITONY, &[Axiom::NegAntitony]),
        (AxiomProfile::DOUBLE_NEGATION, &[Axiom::DoubleNegation]),
        (AxiomProfile::SASAKI_PRODUCT, &[Axiom::SasakiProduct]),
        (AxiomProfile::SASAKI_IMPLICATION, &[Axiom::SasakiImplication]),
        (AxiomProfile::PRODUCT_ABSORPTION, &[Axiom::ProductAbsorption]),
    ];

    /// Rejects the empty profile.
    pub fn validated(self) -> Result<Self, Error> {
        if self.is_empty() {
            return Err(Error::InvalidConfig("axiom profile selects no checks".into()));
        }
        Ok(self)
    }

    pub fn axioms(self) -> Vec<Axiom> {
        Self::ORDER.iter().filter(|(flag, _)| self.contains(*flag)).flat_map(|(_, a)| a.iter().copied()).collect()
    }
}

/// Evaluates one law on `g`, returning the first violation in row-major order.
///
/// Ortho laws are evaluated on the lattice with the derived negation.
pub fn groupoid_law(g: &LrGroupoid, axiom: Axiom) -> Result<Option<Witness>, Error> {
    let l = &g.lattice;
    let n = l.len();
    let names = l.names();
    let (top, bottom) = (l.top(), l.bottom());
    let neg = |x| g.imp(x, bottom);
    let w = match axiom {
        Axiom::UnitRight => witness_of(names, ["x"], scan1(n, |x| g.odot(x, top) != x).map(|x| [x])),
        Axiom::UnitLeft => witness_of(names, ["x"], scan1(n, |x| g.odot(top, x) != x).map(|x| [x])),
        Axiom::LeftAdjointness => {
            witness_of(names, ["x", "y", "z"], scan3(n, |x, y, z| l.leq(g.odot(x, y), z) != l.leq(x, g.imp(y, z))))
        }
        Axiom::Divisibility => witness_of(names, ["x", "y"], scan2(n, |x, y| g.odot(g.imp(x, y), x) != l.meet(x, y))),
        Axiom::NegAntitony => witness_of(names, ["x", "y"], scan2(n, |x, y| l.leq(x, y) && !l.leq(neg(y), neg(x)))),
        Axiom::DoubleNegation => witness_of(names, ["x"], scan1(n, |x| neg(neg(x)) != x).map(|x| [x])),
        Axiom::SasakiProduct => {
            witness_of(names, ["x", "y"], scan2(n, |x, y| g.odot(x, y) != l.meet(l.join(x, neg(y)), y)))
        }
        Axiom::SasakiImplication => {
            witness_of(names, ["x", "y"], scan2(n, |x, y| g.imp(x, y) != l.join(l.meet(y, x), neg(x))))
        }
        Axiom::ProductAbsorption => witness_of(names, ["x", "y"], scan2(n, |x, y| g.odot(x, l.join(x, y)) != x)),
        other if other.is_ortho() => return ortho_law(l, &derived_negation(g), other),
        Axiom::RoundTripOrtho | Axiom::RoundTripGroupoid => {
            return Err(Error::AxiomNotApplicable { axiom, kind: "groupoid scan" })
        }
        other => return lattice_law(l, other),
    };
    Ok(w)
}

/// Checks every law selected by `profile`, each exhaustively.
pub fn verify_lrg(g: &LrGroupoid, profile: AxiomProfile) -> VerificationReport {
    let mut report = VerificationReport::new();
    if g.lattice.is_trivial() {
        report.warnings.push(TRIVIAL_WARNING.to_string());
    }
    for axiom in profile.axioms() {
        report.record(axiom, groupoid_law(g, axiom).expect("groupoid law"));
    }
    report
}

/// Unit laws and left adjointness over all `n^3` triples.
pub fn verify_lrg_core(g: &LrGroupoid) -> VerificationReport {
    verify_lrg(g, AxiomProfile::CORE)
}

/// The non-core laws selected by `profile`.
pub fn verify_lrg_extras(g: &LrGroupoid, profile: AxiomProfile) -> VerificationReport {
    verify_lrg(g, profile.difference(AxiomProfile::CORE))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::sasaki_tables;
    use crate::fixtures;

    fn boolean_two() -> LrGroupoid {
        let l = fixtures::chain(2);
        let odot = BinOpTable::from_fn(2, |x, y| l.meet(x, y));
        let imp = BinOpTable::from_fn(2, |x, y| if l.leq(x, y) { l.top() } else { y });
        LrGroupoid::new(l, odot, imp).unwrap()
    }

    #[test]
    fn classical_two_element_algebra_is_residuated() {
        let g = boolean_two();
        assert!(verify_lrg_core(&g).overall());
        assert!(verify_lrg(&g, AxiomProfile::SASAKI_IMAGE).overall());
    }

    #[test]
    fn mo2_negation_matches_complement() {
        let mo2 = fixtures::mo2();
        let g = sasaki_tables(&mo2);
        let neg = derived_negation(&g);
        assert_eq!(&neg, mo2.comp());
        let l = g.lattice();
        let id = |s| l.find(s).unwrap();
        assert_eq!(neg.get(id("a")), id("a'"));
        assert_eq!(neg.get(id("1")), id("0"));
        assert_eq!(neg.get(id("0")), id("1"));
    }

    #[test]
    fn mo2_divisibility_and_absorption_samples() {
        let g = sasaki_tables(&fixtures::mo2());
        let l = g.lattice();
        let id = |s| l.find(s).unwrap();
        assert_eq!(g.imp(id("a"), id("b")), id("a'"));
        assert_eq!(g.odot(id("a'"), id("a")), id("0"));
        assert_eq!(g.odot(id("a"), l.join(id("a"), id("b"))), id("a"));
        let r = verify_lrg_extras(&g, AxiomProfile::SASAKI_IMAGE);
        assert!(r.overall(), "{r}");
        assert!(!r.results.iter().any(|r| r.axiom == Axiom::LeftAdjointness));
    }

    #[test]
    fn hexagon_sasaki_tables_fail_adjointness_and_divisibility() {
        let g = sasaki_tables(&fixtures::o6());
        let r = verify_lrg(&g, AxiomProfile::SASAKI_IMAGE);
        assert!(r.passed(Axiom::UnitRight) && r.passed(Axiom::UnitLeft));
        let [x, y, z]: [ElementId; 3] = r.witness(Axiom::LeftAdjointness).unwrap().elements().try_into().unwrap();
        let l = g.lattice();
        assert_ne!(l.leq(g.odot(x, y), z), l.leq(x, g.imp(y, z)));
        let [a, b]: [ElementId; 2] = r.witness(Axiom::Divisibility).unwrap().elements().try_into().unwrap();
        assert_ne!(g.odot(g.imp(a, b), a), l.meet(a, b));
    }

    #[test]
    fn profile_rejects_empty() {
        assert!(AxiomProfile::empty().validated().is_err());
        assert_eq!(AxiomProfile::CORE.axioms(), [Axiom::UnitRight, Axiom::UnitLeft, Axiom::LeftAdjointness]);
        assert_eq!(AxiomProfile::SASAKI_IMAGE.axioms().len(), 9);
    }

    #[test]
    fn broken_table_is_not_total() {
        let rows = vec![vec![ElementId(0), ElementId(0)], vec![ElementId(1)]];
        assert!(matches!(BinOpTable::new(rows, 2), Err(Error::TableNotTotal(_))));
    }
}
