//! Lattices with a candidate complementation and their axiom checks.

use crate::error::Error;
use crate::order::{lattice_law, scan1, scan2, witness_of, BoundedLattice, ElementId, TRIVIAL_WARNING};
use crate::report::{Axiom, VerificationReport, Witness};

/// A total map on the carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnaryTable {
    map: Vec<ElementId>,
}

impl UnaryTable {
    /// Fails with `TableNotTotal` if an image lies outside `0..n`.
    pub fn new(map: Vec<ElementId>, n: usize) -> Result<Self, Error> {
        if map.len() != n {
            return Err(Error::TableNotTotal(format!("unary table has {} entries, expected {n}", map.len())));
        }
        if let Some(bad) = map.iter().find(|x| x.0 >= n) {
            return Err(Error::TableNotTotal(format!("image {} outside the carrier", bad.0)));
        }
        Ok(UnaryTable { map })
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        UnaryTable { map: indices.iter().copied().map(ElementId).collect() }
    }

    pub fn identity(n: usize) -> Self {
        UnaryTable { map: (0..n).map(ElementId).collect() }
    }

    #[inline]
    pub fn get(&self, x: ElementId) -> ElementId {
        self.map[x.0]
    }

    pub fn set(&mut self, x: ElementId, y: ElementId) {
        self.map[x.0] = y;
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.map
    }

    /// The table seen through a relabeling `perm[old] = new`.
    pub(crate) fn permuted(&self, perm: &[usize]) -> UnaryTable {
        let mut map = vec![ElementId(0); self.len()];
        for (x, &y) in self.map.iter().enumerate() {
            map[perm[x]] = ElementId(perm[y.0]);
        }
        UnaryTable { map }
    }
}

/// A bounded lattice with a unary operation `'`. Nothing is assumed about `'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoCandidate {
    lattice: BoundedLattice,
    comp: UnaryTable,
}

impl OrthoCandidate {
    pub fn new(lattice: BoundedLattice, comp: UnaryTable) -> Result<Self, Error> {
        if comp.len() != lattice.len() || comp.as_slice().iter().any(|x| x.0 >= lattice.len()) {
            return Err(Error::TableNotTotal("complement table does not match the carrier".into()));
        }
        Ok(OrthoCandidate { lattice, comp })
    }

    pub fn lattice(&self) -> &BoundedLattice {
        &self.lattice
    }

    pub fn comp(&self) -> &UnaryTable {
        &self.comp
    }

    #[inline]
    pub fn c(&self, x: ElementId) -> ElementId {
        self.comp.get(x)
    }

    pub fn into_parts(self) -> (BoundedLattice, UnaryTable) {
        (self.lattice, self.comp)
    }

    pub(crate) fn permuted(&self, perm: &[usize]) -> OrthoCandidate {
        OrthoCandidate { lattice: self.lattice.permuted(perm), comp: self.comp.permuted(perm) }
    }
}

/// Evaluates `axiom` on a lattice with a unary table, returning the first
/// violation in row-major order.
///
/// Lattice laws and distributivity are accepted too. The meta-laws
/// (`de-morgan-implied`, `v-vi-agree`) combine several scans.
pub fn ortho_law(l: &BoundedLattice, comp: &UnaryTable, axiom: Axiom) -> Result<Option<Witness>, Error> {
    let n = l.len();
    let names = l.names();
    let c = |x| comp.get(x);
    let w = match axiom {
        Axiom::Complement => witness_of(names, ["x"], scan1(n, |x| l.join(x, c(x)) != l.top()).map(|x| [x])),
        Axiom::MeetComplement => witness_of(names, ["x"], scan1(n, |x| l.meet(x, c(x)) != l.bottom()).map(|x| [x])),
        Axiom::Antitony => witness_of(names, ["x", "y"], scan2(n, |x, y| l.leq(x, y) && !l.leq(c(y), c(x)))),
        Axiom::Involution => witness_of(names, ["x"], scan1(n, |x| c(c(x)) != x).map(|x| [x])),
        Axiom::DeMorganJoin => witness_of(names, ["x", "y"], scan2(n, |x, y| c(l.join(x, y)) != l.meet(c(x), c(y)))),
        Axiom::DeMorganMeet => witness_of(names, ["x", "y"], scan2(n, |x, y| c(l.meet(x, y)) != l.join(c(x), c(y)))),
        Axiom::OrthomodularV => {
            witness_of(names, ["x", "y"], scan2(n, |x, y| l.leq(x, y) && y != l.join(x, l.meet(y, c(x)))))
        }
        Axiom::OrthomodularVi => {
            witness_of(names, ["x", "y"], scan2(n, |x, y| l.leq(x, y) && x != l.meet(y, l.join(x, c(y)))))
        }
        Axiom::DeMorganImplied => {
            let hypotheses =
                ortho_law(l, comp, Axiom::Antitony)?.is_none() && ortho_law(l, comp, Axiom::Involution)?.is_none();
            if hypotheses {
                ortho_law(l, comp, Axiom::DeMorganJoin)?.or(ortho_law(l, comp, Axiom::DeMorganMeet)?)
            } else {
                None
            }
        }
        Axiom::OrthomodularAgree => {
            let ortholattice = [Axiom::Complement, Axiom::Antitony, Axiom::Involution]
                .into_iter()
                .all(|a| ortho_law(l, comp, a).expect("ortho law").is_none());
            let v = ortho_law(l, comp, Axiom::OrthomodularV)?;
            let vi = ortho_law(l, comp, Axiom::OrthomodularVi)?;
            match (ortholattice, v, vi) {
                (true, Some(w), None) | (true, None, Some(w)) => Some(w),
                _ => None,
            }
        }
        other if !other.is_groupoid() => return lattice_law(l, other),
        other => return Err(Error::AxiomNotApplicable { axiom: other, kind: "ortho structure" }),
    };
    Ok(w)
}

fn law(c: &OrthoCandidate, axiom: Axiom) -> Option<Witness> {
    ortho_law(&c.lattice, &c.comp, axiom).expect("ortho law")
}

const ORTHOLATTICE_LAWS: [Axiom; 7] = [
    Axiom::Complement,
    Axiom::Antitony,
    Axiom::Involution,
    Axiom::MeetComplement,
    Axiom::DeMorganJoin,
    Axiom::DeMorganMeet,
    Axiom::DeMorganImplied,
];

/// Checks `x v x' = 1`, antitony, involution, `x ^ x' = 0` and both de Morgan
/// laws. The `de-morgan-implied` entry fails only if antitony and involution
/// hold while a de Morgan law does not.
pub fn verify_ortholattice(c: &OrthoCandidate) -> VerificationReport {
    let mut report = VerificationReport::new();
    if c.lattice.is_trivial() {
        report.warnings.push(TRIVIAL_WARNING.to_string());
    }
    for axiom in ORTHOLATTICE_LAWS {
        report.record(axiom, law(c, axiom));
    }
    report
}

/// Is `c` an ortholattice, i.e. do (ii)-(iv) hold?
pub fn is_ortholattice(c: &OrthoCandidate) -> bool {
    [Axiom::Complement, Axiom::Antitony, Axiom::Involution].into_iter().all(|a| law(c, a).is_none())
}

/// Checks the orthomodular law in both forms over comparable pairs.
///
/// The report is marked conditional when `c` is not an ortholattice, in
/// which case the two forms need not agree.
pub fn check_orthomodularity(c: &OrthoCandidate) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.conditional = !is_ortholattice(c);
    for axiom in [Axiom::OrthomodularV, Axiom::OrthomodularVi, Axiom::OrthomodularAgree] {
        report.record(axiom, law(c, axiom));
    }
    report
}

/// Full check: ortholattice laws followed by orthomodularity.
pub fn verify_oml(c: &OrthoCandidate) -> VerificationReport {
    let mut report = verify_ortholattice(c);
    report.merge(check_orthomodularity(c));
    report
}

pub fn is_orthomodular(c: &OrthoCandidate) -> bool {
    verify_oml(c).overall()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanCheck {
    pub boolean: bool,
    /// First failing law (distributivity, then complementation) and its witness.
    pub failure: Option<(Axiom, Witness)>,
}

/// Boolean iff the lattice is distributive and `'` is a complementation.
pub fn is_boolean(c: &OrthoCandidate) -> BooleanCheck {
    let failure = [Axiom::Distributivity, Axiom::Complement, Axiom::MeetComplement]
        .into_iter()
        .find_map(|a| law(c, a).map(|w| (a, w)));
    BooleanCheck { boolean: failure.is_none(), failure }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn mo2_is_an_ortholattice() {
        let r = verify_ortholattice(&fixtures::mo2());
        assert!(r.overall(), "{r}");
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn identity_on_boolean_square_fails_complement_at_an_atom() {
        let sq = fixtures::boolean(2);
        let c = OrthoCandidate::new(sq.lattice().clone(), UnaryTable::identity(4)).unwrap();
        let r = verify_ortholattice(&c);
        // row-major scan reports bottom first (0 v 0 = 0); every atom fails as well
        let w = r.witness(Axiom::Complement).expect("x v x = x");
        assert_eq!(w.names(), ["0"]);
        let l = c.lattice();
        for atom in ["a", "b"].map(|s| l.find(s).unwrap()) {
            assert_ne!(l.join(atom, c.c(atom)), l.top());
        }
        assert!(!r.passed(Axiom::Antitony));
    }

    #[test]
    fn hexagon_is_an_ortholattice_but_not_orthomodular() {
        let o6 = fixtures::o6();
        assert!(verify_ortholattice(&o6).overall());
        let r = check_orthomodularity(&o6);
        assert!(!r.conditional);
        let w = r.witness(Axiom::OrthomodularV).unwrap();
        assert_eq!(w.names(), ["x", "y"]);
        assert!(!r.passed(Axiom::OrthomodularVi));
        assert!(r.passed(Axiom::OrthomodularAgree));
    }

    #[test]
    fn mo2_and_boolean_square_are_orthomodular() {
        for c in [fixtures::mo2(), fixtures::boolean(2)] {
            let r = check_orthomodularity(&c);
            assert!(r.overall(), "{r}");
        }
    }

    #[test]
    fn mo2_is_not_boolean() {
        let check = is_boolean(&fixtures::mo2());
        assert!(!check.boolean);
        let (axiom, w) = check.failure.unwrap();
        assert_eq!(axiom, Axiom::Distributivity);
        // first failing triple in row-major scan: a v (a' ^ b) = a, (a v a') ^ (a v b) = 1
        assert_eq!(w.names(), ["a", "a'", "b"]);
    }

    #[test]
    fn boolean_algebras_are_boolean() {
        assert!(is_boolean(&fixtures::boolean(2)).boolean);
        assert!(is_boolean(&fixtures::boolean(1)).boolean);
        assert!(is_boolean(&fixtures::boolean(3)).boolean);
    }

    #[test]
    fn non_ortholattice_makes_orthomodularity_conditional() {
        let sq = fixtures::boolean(2);
        let c = OrthoCandidate::new(sq.lattice().clone(), UnaryTable::identity(4)).unwrap();
        assert!(check_orthomodularity(&c).conditional);
    }

    #[test]
    fn trivial_lattice_is_flagged() {
        let c = fixtures::boolean(0);
        let r = verify_oml(&c);
        assert!(r.overall());
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn results_survive_relabeling() {
        for c in [fixtures::mo2(), fixtures::o6()] {
            let p = c.permuted(&[0, 4, 2, 3, 1, 5]);
            let a: Vec<bool> = verify_oml(&c).results.iter().map(|r| r.passed()).collect();
            let b: Vec<bool> = verify_oml(&p).results.iter().map(|r| r.passed()).collect();
            assert_eq!(a, b);
        }
    }
}
