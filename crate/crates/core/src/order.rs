//! Finite posets and bounded lattices with dense join/meet tables.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Bound, Error};
use crate::report::{Axiom, VerificationReport, Witness};

/// Dense handle for a carrier element. Indices run `0..n`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(pub usize);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Characters that would clash with the structure file syntax.
const RESERVED: &[char] = &['#', '<', '=', ':', '"'];

pub(crate) fn validate_name(name: &str) -> Result<(), Error> {
    if name.is_empty() || name.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c)) {
        return Err(Error::InvalidName(name.to_string()));
    }
    Ok(())
}

/// A finite partial order with named elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Builds a poset from an explicit relation, checking the order axioms.
    pub fn new(names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self, Error> {
        let n = names.len();
        check_names(&names)?;
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::TableNotTotal(format!("order relation must be {n}x{n}")));
        }
        let flat: Vec<bool> = leq.into_iter().flatten().collect();
        let poset = FinitePoset { names, leq: flat };
        for x in 0..n {
            if !poset.leq_idx(x, x) {
                return Err(Error::NotAPartialOrder(format!("`{}` is not below itself", poset.names[x])));
            }
            for y in 0..n {
                if x != y && poset.leq_idx(x, y) && poset.leq_idx(y, x) {
                    return Err(Error::CycleDetected(poset.names[x].clone()));
                }
                for z in 0..n {
                    if poset.leq_idx(x, y) && poset.leq_idx(y, z) && !poset.leq_idx(x, z) {
                        return Err(Error::NotAPartialOrder(format!(
                            "`{}` <= `{}` <= `{}` but not `{}` <= `{}`",
                            poset.names[x], poset.names[y], poset.names[z], poset.names[x], poset.names[z]
                        )));
                    }
                }
            }
        }
        Ok(poset)
    }

    /// Reflexive-transitive closure of a cover list given by element names.
    pub fn from_covers<S: AsRef<str>>(names: &[S], covers: &[(S, S)]) -> Result<Self, Error> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        check_names(&names)?;
        let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownElement(s.to_string()));
        let n = names.len();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for (lo, hi) in covers {
            let (lo, hi) = (lookup(lo.as_ref())?, lookup(hi.as_ref())?);
            if lo == hi {
                return Err(Error::CycleDetected(names[lo].clone()));
            }
            leq[lo * n + hi] = true;
        }
        // Warshall closure
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in (x + 1)..n {
                if leq[x * n + y] && leq[y * n + x] {
                    return Err(Error::CycleDetected(names[x].clone()));
                }
            }
        }
        Ok(FinitePoset { names, leq })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.len()).map(ElementId)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x.0]
    }

    pub fn find(&self, name: &str) -> Option<ElementId> {
        self.names.iter().position(|s| s == name).map(ElementId)
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.leq_idx(x.0, y.0)
    }

    #[inline]
    fn leq_idx(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.names.len() + y]
    }

    /// Pairs `(x, y)` with `x < y` and nothing strictly in between, in row-major order.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                if x == y || !self.leq(x, y) {
                    continue;
                }
                let between = self.elements().any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Relabels element `i` to position `perm[i]`.
    pub(crate) fn permuted(&self, perm: &[usize]) -> FinitePoset {
        let n = self.len();
        let mut names = vec![String::new(); n];
        let mut leq = vec![false; n * n];
        for x in 0..n {
            names[perm[x]] = self.names[x].clone();
            for y in 0..n {
                leq[perm[x] * n + perm[y]] = self.leq_idx(x, y);
            }
        }
        FinitePoset { names, leq }
    }

    pub(crate) fn renamed(&self, names: Vec<String>) -> Result<FinitePoset, Error> {
        assert_eq!(names.len(), self.len());
        check_names(&names)?;
        Ok(FinitePoset { names, leq: self.leq.clone() })
    }
}

fn check_names(names: &[String]) -> Result<(), Error> {
    let mut seen = HashMap::new();
    for name in names {
        validate_name(name)?;
        if seen.insert(name.as_str(), ()).is_some() {
            return Err(Error::DuplicateName(name.clone()));
        }
    }
    Ok(())
}

/// A bounded lattice over a [`FinitePoset`] with precomputed operation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedLattice {
    poset: FinitePoset,
    join: Vec<ElementId>,
    meet: Vec<ElementId>,
    bottom: ElementId,
    top: ElementId,
}

impl BoundedLattice {
    /// Computes all joins and meets by exhaustive bound scans.
    ///
    /// Bottom and top are read off the order. The one-element lattice is
    /// accepted; see [`BoundedLattice::is_trivial`].
    pub fn from_poset(poset: FinitePoset) -> Result<Self, Error> {
        let n = poset.len();
        let bottom = poset.elements().find(|&b| poset.elements().all(|x| poset.leq(b, x)));
        let top = poset.elements().find(|&t| poset.elements().all(|x| poset.leq(x, t)));
        let (Some(bottom), Some(top)) = (bottom, top) else {
            return Err(Error::NotBounded);
        };
        let mut join = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        for x in poset.elements() {
            for y in poset.elements() {
                let not_a_lattice = |missing| Error::NotALattice {
                    x: poset.name(x).to_string(),
                    y: poset.name(y).to_string(),
                    missing,
                };
                let lub = poset
                    .elements()
                    .filter(|&u| poset.leq(x, u) && poset.leq(y, u))
                    .find(|&u| poset.elements().all(|v| !(poset.leq(x, v) && poset.leq(y, v)) || poset.leq(u, v)))
                    .ok_or_else(|| not_a_lattice(Bound::Join))?;
                let glb = poset
                    .elements()
                    .filter(|&l| poset.leq(l, x) && poset.leq(l, y))
                    .find(|&l| poset.elements().all(|v| !(poset.leq(v, x) && poset.leq(v, y)) || poset.leq(v, l)))
                    .ok_or_else(|| not_a_lattice(Bound::Meet))?;
                join.push(lub);
                meet.push(glb);
            }
        }
        Ok(BoundedLattice { poset, join, meet, bottom, top })
    }

    pub fn from_covers<S: AsRef<str>>(names: &[S], covers: &[(S, S)]) -> Result<Self, Error> {
        Self::from_poset(FinitePoset::from_covers(names, covers)?)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        self.poset.elements()
    }

    pub fn name(&self, x: ElementId) -> &str {
        self.poset.name(x)
    }

    pub fn names(&self) -> &[String] {
        self.poset.names()
    }

    pub fn find(&self, name: &str) -> Option<ElementId> {
        self.poset.find(name)
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.poset.leq(x, y)
    }

    #[inline]
    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        self.join[x.0 * self.len() + y.0]
    }

    #[inline]
    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        self.meet[x.0 * self.len() + y.0]
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    /// True for the one-element lattice, where `0 = 1`.
    pub fn is_trivial(&self) -> bool {
        self.bottom == self.top
    }

    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        self.poset.covers()
    }

    /// Relabels element `i` to position `perm[i]`; tables are rebuilt from the order.
    pub(crate) fn permuted(&self, perm: &[usize]) -> BoundedLattice {
        Self::from_poset(self.poset.permuted(perm)).expect("relabeling preserves lattice structure")
    }

    pub(crate) fn renamed(&self, names: Vec<String>) -> Result<BoundedLattice, Error> {
        Ok(BoundedLattice { poset: self.poset.renamed(names)?, ..self.clone() })
    }
}

/// First `x` in index order for which `violated(x)` holds.
pub(crate) fn scan1(n: usize, mut violated: impl FnMut(ElementId) -> bool) -> Option<ElementId> {
    (0..n).map(ElementId).find(|&x| violated(x))
}

/// First pair in row-major order for which `violated` holds.
pub(crate) fn scan2(n: usize, mut violated: impl FnMut(ElementId, ElementId) -> bool) -> Option<[ElementId; 2]> {
    for x in (0..n).map(ElementId) {
        for y in (0..n).map(ElementId) {
            if violated(x, y) {
                return Some([x, y]);
            }
        }
    }
    None
}

/// First triple in row-major order for which `violated` holds.
pub(crate) fn scan3(
    n: usize,
    mut violated: impl FnMut(ElementId, ElementId, ElementId) -> bool,
) -> Option<[ElementId; 3]> {
    for x in (0..n).map(ElementId) {
        for y in (0..n).map(ElementId) {
            for z in (0..n).map(ElementId) {
                if violated(x, y, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

pub(crate) fn witness_of<const K: usize>(
    names: &[String],
    vars: [&'static str; K],
    found: Option<[ElementId; K]>,
) -> Option<Witness> {
    found.map(|els| {
        let pairs: Vec<_> = vars.iter().copied().zip(els).collect();
        Witness::new(names, &pairs)
    })
}

/// Evaluates one of the plain lattice laws, returning the first violation.
pub fn lattice_law(l: &BoundedLattice, axiom: Axiom) -> Result<Option<Witness>, Error> {
    let n = l.len();
    let names = l.names();
    let w = match axiom {
        Axiom::LatticeOrder => witness_of(
            names,
            ["x", "y"],
            scan2(n, |x, y| l.leq(x, y) != (l.join(x, y) == y) || l.leq(x, y) != (l.meet(x, y) == x)),
        ),
        Axiom::LatticeCommutative => {
            witness_of(names, ["x", "y"], scan2(n, |x, y| l.join(x, y) != l.join(y, x) || l.meet(x, y) != l.meet(y, x)))
        }
        Axiom::LatticeAssociative => witness_of(
            names,
            ["x", "y", "z"],
            scan3(n, |x, y, z| {
                l.join(l.join(x, y), z) != l.join(x, l.join(y, z)) || l.meet(l.meet(x, y), z) != l.meet(x, l.meet(y, z))
            }),
        ),
        Axiom::LatticeIdempotent => {
            witness_of(names, ["x"], scan1(n, |x| l.join(x, x) != x || l.meet(x, x) != x).map(|x| [x]))
        }
        Axiom::LatticeAbsorption => {
            witness_of(names, ["x", "y"], scan2(n, |x, y| l.meet(x, l.join(x, y)) != x || l.join(x, l.meet(x, y)) != x))
        }
        Axiom::LatticeBounds => {
            witness_of(names, ["x"], scan1(n, |x| !l.leq(l.bottom(), x) || !l.leq(x, l.top())).map(|x| [x]))
        }
        Axiom::Distributivity => witness_of(
            names,
            ["x", "y", "z"],
            scan3(n, |x, y, z| l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), l.join(x, z))),
        ),
        other => return Err(Error::AxiomNotApplicable { axiom: other, kind: "lattice" }),
    };
    Ok(w)
}

const LATTICE_LAWS: [Axiom; 6] = [
    Axiom::LatticeOrder,
    Axiom::LatticeCommutative,
    Axiom::LatticeAssociative,
    Axiom::LatticeIdempotent,
    Axiom::LatticeAbsorption,
    Axiom::LatticeBounds,
];

/// Exhaustively re-checks the lattice laws on the precomputed tables.
pub fn verify_lattice(l: &BoundedLattice) -> VerificationReport {
    let mut report = VerificationReport::new();
    if l.is_trivial() {
        report.warnings.push(TRIVIAL_WARNING.to_string());
    }
    for axiom in LATTICE_LAWS {
        report.record(axiom, lattice_law(l, axiom).expect("lattice law"));
    }
    report
}

pub(crate) const TRIVIAL_WARNING: &str = "one-element lattice: bottom and top coincide";
