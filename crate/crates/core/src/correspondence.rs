//! Passing between orthomodular lattices and left residuated l-groupoids.
//!
//! `A(L)` equips a lattice with the Sasaki product `x * y = (x v y') ^ y` and
//! the implication `x -> y = (y ^ x) v x'`. `L(A)` keeps the lattice of a
//! groupoid and reads the complement off as `x -> 0`. Both constructions
//! keep the carrier and its indexing, so round trips compare tables cell by
//! cell.

use crate::error::Error;
use crate::order::ElementId;
use crate::ortho::{is_orthomodular, verify_oml, OrthoCandidate};
use crate::report::{Axiom, VerificationReport, Witness};
use crate::residuated::{derived_negation, verify_lrg, AxiomProfile, BinOpTable, LrGroupoid};
use crate::structure::Structure;

/// Sasaki product and implication tables for any lattice with a unary
/// table, without checking that the input is orthomodular. Useful for
/// pushing non-orthomodular inputs through the construction.
pub fn sasaki_tables(c: &OrthoCandidate) -> LrGroupoid {
    let l = c.lattice();
    let n = l.len();
    let odot = BinOpTable::from_fn(n, |x, y| l.meet(l.join(x, c.c(y)), y));
    let imp = BinOpTable::from_fn(n, |x, y| l.join(l.meet(y, x), c.c(x)));
    LrGroupoid::new(l.clone(), odot, imp).expect("tables match the carrier")
}

/// The Sasaki groupoid `A(L)` of an orthomodular lattice.
///
/// Fails with `NotOrthomodular` carrying the first failed law; use
/// [`sasaki_tables`] to skip the check.
pub fn sasaki_groupoid(c: &OrthoCandidate) -> Result<LrGroupoid, Error> {
    let report = verify_oml(c);
    if let Some(failure) = report.failures().next() {
        return Err(Error::NotOrthomodular {
            axiom: failure.axiom,
            witness: failure.witness.clone().unwrap_or_default(),
        });
    }
    Ok(sasaki_tables(c))
}

/// The lattice of `g` with `x' = x -> 0`, unchecked.
pub fn induced_candidate(g: &LrGroupoid) -> OrthoCandidate {
    OrthoCandidate::new(g.lattice().clone(), derived_negation(g)).expect("total")
}

/// `L(A)`: checks `profile` on `g`, builds the lattice with derived
/// negation, then confirms the result is orthomodular.
///
/// [`AxiomProfile::INDUCES_OML`] is the usual profile.
pub fn induced_oml(g: &LrGroupoid, profile: AxiomProfile) -> Result<OrthoCandidate, Error> {
    let hypotheses = verify_lrg(g, profile.validated()?);
    if let Some(failure) = hypotheses.failures().next() {
        return Err(Error::HypothesisViolated {
            axiom: failure.axiom,
            witness: failure.witness.clone().unwrap_or_default(),
        });
    }
    let c = induced_candidate(g);
    let conclusion = verify_oml(&c);
    if let Some(failure) = conclusion.failures().next() {
        return Err(Error::ConclusionViolated {
            axiom: failure.axiom,
            witness: failure.witness.clone().unwrap_or_default(),
        });
    }
    Ok(c)
}

fn compare_ortho(expected: &OrthoCandidate, actual: &OrthoCandidate) -> (Option<Witness>, Option<String>) {
    let l = expected.lattice();
    if expected.lattice().poset() != actual.lattice().poset() {
        return (Some(Witness::default()), Some("carrier or order changed".into()));
    }
    match l.elements().find(|&x| expected.c(x) != actual.c(x)) {
        None => (None, None),
        Some(x) => (
            Some(Witness::new(l.names(), &[("x", x)])),
            Some(format!("x' was {}, got {}", l.name(expected.c(x)), l.name(actual.c(x)))),
        ),
    }
}

fn compare_groupoid(expected: &LrGroupoid, actual: &LrGroupoid) -> (Option<Witness>, Option<String>) {
    let l = expected.lattice();
    if expected.lattice().poset() != actual.lattice().poset() {
        return (Some(Witness::default()), Some("carrier or order changed".into()));
    }
    let cell = |op: &str, x: ElementId, y: ElementId, was: ElementId, got: ElementId| {
        (
            Some(Witness::new(l.names(), &[("x", x), ("y", y)])),
            Some(format!("x {op} y was {}, got {}", l.name(was), l.name(got))),
        )
    };
    if let Some((x, y)) = expected.odot_table().first_difference(actual.odot_table()) {
        return cell("*", x, y, expected.odot(x, y), actual.odot(x, y));
    }
    if let Some((x, y)) = expected.imp_table().first_difference(actual.imp_table()) {
        return cell("->", x, y, expected.imp(x, y), actual.imp(x, y));
    }
    (None, None)
}

/// `L(A(L)) = L`, then `A(L(A)) = A` for `A = A(L)`.
///
/// Conditional unless `c` is orthomodular.
pub fn round_trip_ortho(c: &OrthoCandidate) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.conditional = !is_orthomodular(c);
    let a = sasaki_tables(c);
    let back = induced_candidate(&a);
    let (w, note) = compare_ortho(c, &back);
    report.record_with_note(Axiom::RoundTripOrtho, w, note);
    let again = sasaki_tables(&back);
    let (w, note) = compare_groupoid(&a, &again);
    report.record_with_note(Axiom::RoundTripGroupoid, w, note);
    report
}

/// `A(L(A)) = A`, then `L(A(L)) = L` for `L = L(A)`.
///
/// Conditional unless `g` satisfies [`AxiomProfile::ROUND_TRIP`].
pub fn round_trip_groupoid(g: &LrGroupoid) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.conditional = !verify_lrg(g, AxiomProfile::ROUND_TRIP).overall();
    let l = induced_candidate(g);
    let again = sasaki_tables(&l);
    let (w, note) = compare_groupoid(g, &again);
    report.record_with_note(Axiom::RoundTripGroupoid, w, note);
    let back = induced_candidate(&again);
    let (w, note) = compare_ortho(&l, &back);
    report.record_with_note(Axiom::RoundTripOrtho, w, note);
    report
}

/// Round trip in whichever direction applies to `s`.
pub fn round_trip_check(s: &Structure) -> Result<VerificationReport, Error> {
    match s {
        Structure::Ortho(c) => Ok(round_trip_ortho(c)),
        Structure::Groupoid(g) => Ok(round_trip_groupoid(g)),
        Structure::Lattice(_) => Err(Error::AxiomNotApplicable { axiom: Axiom::RoundTripOrtho, kind: "lattice" }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ortho::UnaryTable;

    #[test]
    fn boolean_two_gives_classical_tables() {
        let c = fixtures::boolean(1);
        let g = sasaki_groupoid(&c).unwrap();
        let l = c.lattice();
        let (z, o) = (l.bottom(), l.top());
        for x in l.elements() {
            for y in l.elements() {
                assert_eq!(g.odot(x, y), l.meet(x, y));
            }
            assert_eq!(g.imp(x, o), o);
        }
        assert_eq!(g.imp(z, z), o);
        assert_eq!(g.imp(o, z), z);
    }

    #[test]
    fn boolean_square_gives_classical_implication() {
        let c = fixtures::boolean(2);
        let g = sasaki_groupoid(&c).unwrap();
        let l = c.lattice();
        for x in l.elements() {
            for y in l.elements() {
                assert_eq!(g.odot(x, y), l.meet(x, y));
                assert_eq!(g.imp(x, y), l.join(c.c(x), y));
            }
        }
    }

    #[test]
    fn hexagon_is_rejected_unless_forced() {
        let err = sasaki_groupoid(&fixtures::o6()).unwrap_err();
        assert!(matches!(err, Error::NotOrthomodular { axiom: Axiom::OrthomodularV, .. }));
        let _ = sasaki_tables(&fixtures::o6());
    }

    #[test]
    fn induced_oml_recovers_mo2() {
        let mo2 = fixtures::mo2();
        let g = sasaki_groupoid(&mo2).unwrap();
        let back = induced_oml(&g, AxiomProfile::INDUCES_OML).unwrap();
        assert_eq!(back, mo2);
    }

    #[test]
    fn induced_oml_on_two_chain_swaps_bounds() {
        let c = fixtures::boolean(1);
        let g = sasaki_groupoid(&c).unwrap();
        let back = induced_oml(&g, AxiomProfile::INDUCES_OML).unwrap();
        assert_eq!(back.comp(), &UnaryTable::from_indices(&[1, 0]));
    }

    #[test]
    fn induced_oml_rejects_broken_double_negation() {
        let l = fixtures::chain(3);
        // x -> 0 = 1 for every x, so (x -> 0) -> 0 = 1 != 0
        let top = l.top();
        let odot = BinOpTable::from_fn(3, |x, y| l.meet(x, y));
        let imp = BinOpTable::from_fn(3, |_, _| top);
        let g = LrGroupoid::new(l, odot, imp).unwrap();
        let err = induced_oml(&g, AxiomProfile::DOUBLE_NEGATION).unwrap_err();
        assert!(matches!(err, Error::HypothesisViolated { axiom: Axiom::DoubleNegation, .. }));
    }

    #[test]
    fn round_trips_on_small_omls() {
        for c in [fixtures::mo2(), fixtures::boolean(1), fixtures::boolean(2), fixtures::boolean(3)] {
            let r = round_trip_ortho(&c);
            assert!(r.overall() && !r.conditional, "{r}");
            let r = round_trip_groupoid(&sasaki_tables(&c));
            assert!(r.overall() && !r.conditional, "{r}");
        }
    }

    #[test]
    fn tampered_groupoid_reports_first_cell() {
        let mo2 = fixtures::mo2();
        let g = sasaki_tables(&mo2);
        let l = g.lattice().clone();
        let (a, b) = (l.find("a").unwrap(), l.find("b").unwrap());
        let odot = BinOpTable::from_fn(6, |x, y| if (x, y) == (a, b) { l.top() } else { g.odot(x, y) });
        let tampered = LrGroupoid::new(l, odot, g.imp_table().clone()).unwrap();
        let r = round_trip_groupoid(&tampered);
        assert!(r.conditional);
        let w = r.witness(Axiom::RoundTripGroupoid).unwrap();
        assert_eq!(w.names(), ["a", "b"]);
    }
}
