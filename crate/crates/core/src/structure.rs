use crate::order::BoundedLattice;
use crate::ortho::OrthoCandidate;
use crate::residuated::LrGroupoid;

/// Any of the three kinds of structure a file can describe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Lattice(BoundedLattice),
    Ortho(OrthoCandidate),
    Groupoid(LrGroupoid),
}

impl Structure {
    /// The `kind:` keyword of the file format.
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Lattice(_) => "lattice",
            Structure::Ortho(_) => "ortho",
            Structure::Groupoid(_) => "groupoid",
        }
    }

    pub fn lattice(&self) -> &BoundedLattice {
        match self {
            Structure::Lattice(l) => l,
            Structure::Ortho(c) => c.lattice(),
            Structure::Groupoid(g) => g.lattice(),
        }
    }

    /// Relabels element `i` to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Structure {
        match self {
            Structure::Lattice(l) => Structure::Lattice(l.permuted(perm)),
            Structure::Ortho(c) => Structure::Ortho(c.permuted(perm)),
            Structure::Groupoid(g) => Structure::Groupoid(g.permuted(perm)),
        }
    }
}

impl From<BoundedLattice> for Structure {
    fn from(l: BoundedLattice) -> Self {
        Structure::Lattice(l)
    }
}

impl From<OrthoCandidate> for Structure {
    fn from(c: OrthoCandidate) -> Self {
        Structure::Ortho(c)
    }
}

impl From<LrGroupoid> for Structure {
    fn from(g: LrGroupoid) -> Self {
        Structure::Groupoid(g)
    }
}
