//! Enumeration of small lattices and complementations, and witness lookup.

use std::collections::BTreeMap;

use crate::canonical::{canonical_form, factorial, CanonicalCertificate, DEFAULT_PERMUTATION_BUDGET};
use crate::correspondence::round_trip_check;
use crate::error::Error;
use crate::order::{lattice_law, BoundedLattice, ElementId, FinitePoset};
use crate::ortho::{ortho_law, OrthoCandidate, UnaryTable};
use crate::report::{Axiom, Witness};
use crate::residuated::groupoid_law;
use crate::structure::Structure;

/// Largest lattice size the generator accepts.
pub const MAX_ENUMERATION_SIZE: usize = 9;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_size: usize,
    pub require_orthomodular: bool,
    pub permutation_budget: u64,
}

impl EnumerationConfig {
    pub fn new(max_size: usize) -> Self {
        EnumerationConfig { max_size, require_orthomodular: false, permutation_budget: DEFAULT_PERMUTATION_BUDGET }
    }

    pub fn orthomodular(mut self, yes: bool) -> Self {
        self.require_orthomodular = yes;
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.max_size == 0 {
            return Err(Error::InvalidConfig("max size must be at least 1".into()));
        }
        if self.max_size > MAX_ENUMERATION_SIZE {
            return Err(Error::SizeLimitExceeded {
                required: factorial(self.max_size.saturating_sub(2)),
                budget: factorial(MAX_ENUMERATION_SIZE - 2),
            });
        }
        let required = factorial(self.max_size.saturating_sub(2));
        if self.permutation_budget < required {
            return Err(Error::SizeLimitExceeded { required, budget: self.permutation_budget });
        }
        Ok(())
    }
}

/// Standard names for a canonically ordered lattice: `0`, `a`, `b`, ..., `1`.
fn standard_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i + 1 == n => "1".to_string(),
            i => ((b'a' + (i - 1) as u8) as char).to_string(),
        })
        .collect()
}

fn canonical_lattice(l: &BoundedLattice, budget: u64) -> Result<(CanonicalCertificate, BoundedLattice), Error> {
    let form = canonical_form(l, None, budget)?;
    let relabeled = l.permuted(&form.permutation).renamed(standard_names(l.len()))?;
    Ok((form.certificate, relabeled))
}

/// All lattices obtained from `base` by adding one new coatom.
///
/// Removing a coatom from a finite lattice leaves a meet-closed subset that
/// still contains the top, hence a lattice; so every lattice of size `n + 1`
/// arises from one of size `n` this way.
fn coatom_extensions(base: &BoundedLattice) -> Vec<BoundedLattice> {
    let n = base.len();
    let top = base.top();
    let below_top: Vec<ElementId> = base.elements().filter(|&x| x != top).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << below_top.len()) {
        let down: Vec<ElementId> =
            below_top.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x).collect();
        if !down.contains(&base.bottom()) {
            continue;
        }
        let closed = down.iter().all(|&x| base.elements().all(|y| !base.leq(y, x) || down.contains(&y)));
        if !closed {
            continue;
        }
        let mut leq = vec![vec![false; n + 1]; n + 1];
        for x in base.elements() {
            for y in base.elements() {
                leq[x.0][y.0] = base.leq(x, y);
            }
        }
        for &x in &down {
            leq[x.0][n] = true;
        }
        leq[n][n] = true;
        leq[n][top.0] = true;
        let mut names = base.names().to_vec();
        names.push("new".to_string());
        let poset = FinitePoset::new(names, leq).expect("down-set extension is a partial order");
        if let Ok(l) = BoundedLattice::from_poset(poset) {
            out.push(l);
        }
    }
    out
}

/// One representative per isomorphism class of bounded lattice with
/// `1..=max_size` elements, ordered by size and then by certificate.
///
/// Representatives are relabeled into canonical order with names `0`, `a`,
/// `b`, ..., `1`.
pub fn enumerate_bounded_lattices(cfg: &EnumerationConfig) -> Result<Vec<BoundedLattice>, Error> {
    cfg.validate()?;
    let mut levels: Vec<Vec<BoundedLattice>> = vec![vec![BoundedLattice::from_covers::<&str>(&["0"], &[])?]];
    if cfg.max_size >= 2 {
        levels.push(vec![BoundedLattice::from_covers(&["0", "1"], &[("0", "1")])?]);
    }
    while levels.len() < cfg.max_size {
        let mut seen: BTreeMap<CanonicalCertificate, BoundedLattice> = BTreeMap::new();
        for base in levels.last().expect("nonempty") {
            for candidate in coatom_extensions(base) {
                let (cert, relabeled) = canonical_lattice(&candidate, cfg.permutation_budget)?;
                seen.entry(cert).or_insert(relabeled);
            }
        }
        levels.push(seen.into_values().collect());
    }
    Ok(levels.into_iter().flatten().collect())
}

/// Backtracking over involutions `x <-> y` with `allowed(x, y)`, keeping
/// only antitone ones. Results are sorted.
fn antitone_involutions(l: &BoundedLattice, allowed: impl Fn(ElementId, ElementId) -> bool) -> Vec<UnaryTable> {
    fn go(
        l: &BoundedLattice,
        allowed: &dyn Fn(ElementId, ElementId) -> bool,
        image: &mut Vec<Option<ElementId>>,
        out: &mut Vec<UnaryTable>,
    ) {
        let Some(x) = image.iter().position(Option::is_none).map(ElementId) else {
            out.push(UnaryTable::from_indices(&image.iter().map(|y| y.unwrap().0).collect::<Vec<_>>()));
            return;
        };
        for y in l.elements().skip(x.0) {
            if image[y.0].is_some() || !allowed(x, y) || !allowed(y, x) {
                continue;
            }
            image[x.0] = Some(y);
            image[y.0] = Some(x);
            let consistent = [x, y].iter().all(|&u| {
                l.elements().all(|v| match (image[u.0], image[v.0]) {
                    (Some(cu), Some(cv)) => (!l.leq(u, v) || l.leq(cv, cu)) && (!l.leq(v, u) || l.leq(cu, cv)),
                    _ => true,
                })
            });
            if consistent {
                go(l, allowed, image, out);
            }
            image[x.0] = None;
            image[y.0] = None;
        }
    }
    let mut out = Vec::new();
    go(l, &allowed, &mut vec![None; l.len()], &mut out);
    out.sort();
    out
}

/// Every antitone involution on `l`, complementing or not.
pub fn enumerate_antitone_involutions(l: &BoundedLattice) -> Vec<UnaryTable> {
    antitone_involutions(l, |_, _| true)
}

/// Every orthocomplementation of `l`, optionally only orthomodular ones.
///
/// Each `x'` is drawn from the lattice complements of `x`, so `0' = 1` and
/// `1' = 0` are forced before any pairing is tried.
pub fn enumerate_orthocomplements(l: &BoundedLattice, require_omod: bool) -> Vec<UnaryTable> {
    let complements = |x, y| l.join(x, y) == l.top() && l.meet(x, y) == l.bottom();
    antitone_involutions(l, complements)
        .into_iter()
        .filter(|u| !require_omod || ortho_law(l, u, Axiom::OrthomodularV).expect("ortho law").is_none())
        .collect()
}

/// One representative per isomorphism class of ortholattice (orthomodular
/// lattice when `cfg.require_orthomodular`) up to `cfg.max_size` elements.
pub fn enumerate_ortho_structures(cfg: &EnumerationConfig) -> Result<Vec<OrthoCandidate>, Error> {
    let mut out = Vec::new();
    for l in enumerate_bounded_lattices(cfg)? {
        let mut seen: BTreeMap<CanonicalCertificate, OrthoCandidate> = BTreeMap::new();
        for comp in enumerate_orthocomplements(&l, cfg.require_orthomodular) {
            let form = canonical_form(&l, Some(&comp), cfg.permutation_budget)?;
            let c = OrthoCandidate::new(l.clone(), comp)?;
            seen.entry(form.certificate).or_insert(c);
        }
        out.extend(seen.into_values());
    }
    Ok(out)
}

/// First witness of `axiom` failing on `s` in deterministic scan order, or
/// `None` when the axiom holds.
pub fn find_counterexample(s: &Structure, axiom: Axiom) -> Result<Option<Witness>, Error> {
    if matches!(axiom, Axiom::RoundTripOrtho | Axiom::RoundTripGroupoid) {
        let report = round_trip_check(s)?;
        return Ok(report.witness(axiom).cloned());
    }
    match s {
        Structure::Lattice(l) if axiom.is_ortho() || axiom.is_groupoid() => {
            Err(Error::AxiomNotApplicable { axiom, kind: "lattice" })
        }
        Structure::Lattice(l) => lattice_law(l, axiom),
        Structure::Ortho(_) if axiom.is_groupoid() => Err(Error::AxiomNotApplicable { axiom, kind: "ortho structure" }),
        Structure::Ortho(c) => ortho_law(c.lattice(), c.comp(), axiom),
        Structure::Groupoid(g) => groupoid_law(g, axiom),
    }
}

/// [`find_counterexample`] with the axiom given by id.
pub fn find_counterexample_by_id(s: &Structure, axiom_id: &str) -> Result<Option<Witness>, Error> {
    find_counterexample(s, axiom_id.parse()?)
}
