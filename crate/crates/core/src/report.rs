//! Axiom identifiers, witnesses and verification reports.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::order::ElementId;

macro_rules! axioms {
    ($($variant:ident => $id:literal, $formula:literal, [$($alias:literal),*];)*) => {
        /// Every law the checkers know about.
        #[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Axiom {
            $($variant,)*
        }

        impl Axiom {
            pub const ALL: &'static [Axiom] = &[$(Axiom::$variant,)*];

            /// Stable identifier used in reports and on the command line.
            pub fn id(self) -> &'static str {
                match self {
                    $(Axiom::$variant => $id,)*
                }
            }

            pub fn formula(self) -> &'static str {
                match self {
                    $(Axiom::$variant => $formula,)*
                }
            }
        }

        impl FromStr for Axiom {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self, Error> {
                match s {
                    $($id $(| $alias)* => Ok(Axiom::$variant),)*
                    _ => Err(Error::UnknownAxiomId(s.to_string())),
                }
            }
        }
    };
}

axioms! {
    LatticeOrder => "lattice-order", "x <= y iff x v y = y iff x ^ y = x", [];
    LatticeCommutative => "lattice-commutative", "x v y = y v x, x ^ y = y ^ x", [];
    LatticeAssociative => "lattice-associative", "(x v y) v z = x v (y v z), (x ^ y) ^ z = x ^ (y ^ z)", [];
    LatticeIdempotent => "lattice-idempotent", "x v x = x = x ^ x", [];
    LatticeAbsorption => "lattice-absorption", "x ^ (x v y) = x = x v (x ^ y)", [];
    LatticeBounds => "lattice-bounds", "0 <= x <= 1", [];
    Distributivity => "distributivity", "x v (y ^ z) = (x v y) ^ (x v z)", ["distributive"];
    Complement => "complement", "x v x' = 1", ["ii", "(ii)"];
    Antitony => "antitony", "x <= y implies y' <= x'", ["iii", "(iii)"];
    Involution => "involution", "(x')' = x", ["iv", "(iv)"];
    MeetComplement => "meet-complement", "x ^ x' = 0", [];
    DeMorganJoin => "de-morgan-join", "(x v y)' = x' ^ y'", [];
    DeMorganMeet => "de-morgan-meet", "(x ^ y)' = x' v y'", [];
    DeMorganImplied => "de-morgan-implied", "antitony and involution imply both de Morgan laws", [];
    OrthomodularV => "orthomodular-v", "x <= y implies y = x v (y ^ x')",
        ["v", "(v)", "orthomodularity", "orthomodularity-v", "orthomodularity-(v)"];
    OrthomodularVi => "orthomodular-vi", "x <= y implies x = y ^ (x v y')",
        ["vi", "(vi)", "orthomodularity-vi", "orthomodularity-(vi)"];
    OrthomodularAgree => "v-vi-agree", "for an ortholattice (v) holds iff (vi) holds", [];
    UnitRight => "unit-right", "x * 1 = x", [];
    UnitLeft => "unit-left", "1 * x = x", [];
    LeftAdjointness => "left-adjointness", "x * y <= z iff x <= y -> z", ["adjointness", "residuation"];
    Divisibility => "divisibility", "(x -> y) * x = x ^ y", [];
    NegAntitony => "neg-antitony", "x <= y implies (y -> 0) <= (x -> 0)", [];
    DoubleNegation => "double-negation", "((x -> 0) -> 0) = x", ["double-negation-law"];
    SasakiProduct => "sasaki-product", "x * y = (x v y') ^ y", ["eq1"];
    SasakiImplication => "sasaki-implication", "x -> y = (y ^ x) v x'", ["eq2"];
    ProductAbsorption => "product-absorption", "x * (x v y) = x", ["eq3"];
    RoundTripOrtho => "roundtrip-l", "L(A(L)) = L", [];
    RoundTripGroupoid => "roundtrip-a", "A(L(A)) = A", [];
}

impl Axiom {
    /// Axioms stated over a lattice with a complementation table.
    pub fn is_ortho(self) -> bool {
        use Axiom::*;
        matches!(
            self,
            Complement
                | Antitony
                | Involution
                | MeetComplement
                | DeMorganJoin
                | DeMorganMeet
                | DeMorganImplied
                | OrthomodularV
                | OrthomodularVi
                | OrthomodularAgree
        )
    }

    /// Axioms stated over a lattice with `*` and `->` tables.
    pub fn is_groupoid(self) -> bool {
        use Axiom::*;
        matches!(
            self,
            UnitRight
                | UnitLeft
                | LeftAdjointness
                | Divisibility
                | NegAntitony
                | DoubleNegation
                | SasakiProduct
                | SasakiImplication
                | ProductAbsorption
        )
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One variable of a witness assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binding {
    pub var: &'static str,
    pub element: ElementId,
    pub name: String,
}

/// A concrete assignment of elements to the variables of a failing law.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Witness {
    pub bindings: Vec<Binding>,
}

impl Witness {
    pub fn new<S: AsRef<str>>(names: &[S], vars: &[(&'static str, ElementId)]) -> Self {
        let bindings = vars
            .iter()
            .map(|&(var, element)| Binding { var, element, name: names[element.0].as_ref().to_string() })
            .collect();
        Witness { bindings }
    }

    pub fn elements(&self) -> Vec<ElementId> {
        self.bindings.iter().map(|b| b.element).collect()
    }

    /// Element names in variable order.
    pub fn names(&self) -> Vec<&str> {
        self.bindings.iter().map(|b| b.name.as_str()).collect()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bindings.is_empty() {
            return f.write_str("(no variables)");
        }
        for (i, b) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}={}", b.var, b.name)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub witness: Option<Witness>,
    /// Free-form detail, e.g. the differing table cell of a round trip.
    pub note: Option<String>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Per-axiom outcome of one verification run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub results: Vec<AxiomResult>,
    /// Set when the checked laws presuppose hypotheses that do not hold.
    pub conditional: bool,
    pub warnings: Vec<String>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, axiom: Axiom, witness: Option<Witness>) {
        self.results.push(AxiomResult { axiom, witness, note: None });
    }

    pub fn record_with_note(&mut self, axiom: Axiom, witness: Option<Witness>, note: Option<String>) {
        self.results.push(AxiomResult { axiom, witness, note });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.results.extend(other.results);
        self.conditional |= other.conditional;
        for w in other.warnings {
            if !self.warnings.contains(&w) {
                self.warnings.push(w);
            }
        }
    }

    /// True iff every recorded axiom passed.
    pub fn overall(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    /// Pass state of `axiom`; panics if it was not checked.
    pub fn passed(&self, axiom: Axiom) -> bool {
        self.get(axiom).unwrap_or_else(|| panic!("{axiom} not in report")).passed()
    }

    pub fn witness(&self, axiom: Axiom) -> Option<&Witness> {
        self.get(axiom).and_then(|r| r.witness.as_ref())
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        if self.conditional {
            writeln!(f, "note: hypotheses not met, results are conditional")?;
        }
        for r in &self.results {
            match &r.witness {
                None => write!(f, "PASS  {:<20} {}", r.axiom.id(), r.axiom.formula())?,
                Some(w) => write!(f, "FAIL  {:<20} {}  [{}]", r.axiom.id(), r.axiom.formula(), w)?,
            }
            if let Some(note) = &r.note {
                write!(f, "  ({note})")?;
            }
            writeln!(f)?;
        }
        write!(f, "overall: {}", if self.overall() { "PASS" } else { "FAIL" })
    }
}
