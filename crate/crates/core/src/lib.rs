//! Finite orthomodular lattices and left residuated l-groupoids.
//!
//! Structures are small and stored as dense tables, so every law is checked
//! by an exhaustive scan that reports the first violating assignment. The
//! [`correspondence`] module turns an orthomodular lattice into a groupoid
//! via the Sasaki product and back via `x' = x -> 0`; [`search`] enumerates
//! small lattices and complementations to exercise both directions.

pub mod canonical;
pub mod correspondence;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod order;
pub mod ortho;
pub mod report;
pub mod residuated;
pub mod search;
pub mod structure;

pub use canonical::{canonical_certificate, CanonicalCertificate, DEFAULT_PERMUTATION_BUDGET};
pub use correspondence::{
    induced_oml, round_trip_check, round_trip_groupoid, round_trip_ortho, sasaki_groupoid, sasaki_tables,
};
pub use dot::export_dot;
pub use error::Error;
pub use format::{parse_structure, serialize_structure};
pub use order::{verify_lattice, BoundedLattice, ElementId, FinitePoset};
pub use ortho::{check_orthomodularity, is_boolean, verify_oml, verify_ortholattice, OrthoCandidate, UnaryTable};
pub use report::{Axiom, VerificationReport, Witness};
pub use residuated::{
    derived_negation, verify_lrg, verify_lrg_core, verify_lrg_extras, AxiomProfile, BinOpTable, LrGroupoid,
};
pub use search::{
    enumerate_bounded_lattices, enumerate_ortho_structures, enumerate_orthocomplements, find_counterexample,
    EnumerationConfig,
};
pub use structure::Structure;
