use std::fmt;

use thiserror::Error;

use crate::report::{Axiom, Witness};

/// Which lattice bound was missing for a pair.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Join,
    Meet,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bound::Join => "least upper bound",
            Bound::Meet => "greatest lower bound",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("invalid element name `{0}`")]
    InvalidName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order relation has a cycle through `{0}`")]
    CycleDetected(String),
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("not a lattice: `{x}` and `{y}` have no {missing}")]
    NotALattice { x: String, y: String, missing: Bound },
    #[error("poset has no global minimum or maximum")]
    NotBounded,
    #[error("table is not total: {0}")]
    TableNotTotal(String),
    #[error("{required} permutations needed, budget is {budget}")]
    SizeLimitExceeded { required: u64, budget: u64 },
    #[error("not orthomodular: {axiom} fails at {witness}")]
    NotOrthomodular { axiom: Axiom, witness: Witness },
    #[error("hypothesis {axiom} violated at {witness}")]
    HypothesisViolated { axiom: Axiom, witness: Witness },
    #[error("constructed structure fails {axiom} at {witness}")]
    ConclusionViolated { axiom: Axiom, witness: Witness },
    #[error("unknown axiom id `{0}`")]
    UnknownAxiomId(String),
    #[error("axiom {axiom} does not apply to a {kind}")]
    AxiomNotApplicable { axiom: Axiom, kind: &'static str },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        match self {
            e @ (Error::Syntax { .. } | Error::AtLine { .. }) => e,
            e => Error::AtLine { line, source: Box::new(e) },
        }
    }

    /// Strips any line-position wrapper.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            e => e,
        }
    }
}
