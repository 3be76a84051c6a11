//! Line-oriented structure files.
//!
//! ```text
//! kind: ortho                 # lattice | ortho | groupoid
//! elements: 0 a a' b b' 1
//! covers: 0<a 0<a' 0<b 0<b' a<1 a'<1 b<1 b'<1
//! comp: 0=1 a=a' a'=a b=b' b'=b 1=0
//! ```
//!
//! Groupoid files replace `comp:` with two indented tables, one row per left
//! operand, columns in `elements` order:
//!
//! ```text
//! odot:
//!   0: 0 0 0 0 0 0
//!   ...
//! imp:
//!   0: 1 1 1 1 1 1
//!   ...
//! ```
//!
//! `#` starts a comment and blank lines are ignored.

use std::fmt::Write as _;

use crate::error::Error;
use crate::order::{BoundedLattice, ElementId, FinitePoset};
use crate::ortho::{OrthoCandidate, UnaryTable};
use crate::residuated::{BinOpTable, LrGroupoid};
use crate::structure::Structure;

/// `(line, row name, row text)` for each indented table row.
type Rows<'a> = Vec<(usize, &'a str, &'a str)>;

#[derive(Default)]
struct Fields<'a> {
    kind: Option<(usize, &'a str)>,
    elements: Option<(usize, &'a str)>,
    covers: Option<(usize, &'a str)>,
    comp: Option<(usize, &'a str)>,
    odot: Option<(usize, Rows<'a>)>,
    imp: Option<(usize, Rows<'a>)>,
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, message: message.into() }
}

fn set_once<T>(slot: &mut Option<(usize, T)>, line: usize, key: &str, value: T) -> Result<(), Error> {
    if slot.is_some() {
        return Err(syntax(line, format!("duplicate `{key}:` line")));
    }
    *slot = Some((line, value));
    Ok(())
}

fn scan_fields(text: &str) -> Result<Fields<'_>, Error> {
    let mut f = Fields::default();
    // which table subsequent indented rows belong to
    let mut table: Option<&str> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indented = content.starts_with(' ') || content.starts_with('\t');
        let Some((key, value)) = content.split_once(':') else {
            return Err(syntax(line, "expected `key: value`"));
        };
        let (key, value) = (key.trim(), value.trim());
        if indented {
            let row = (line, key, value);
            match table {
                Some("odot") => f.odot.as_mut().expect("section open").1.push(row),
                Some("imp") => f.imp.as_mut().expect("section open").1.push(row),
                _ => return Err(syntax(line, "indented row outside an `odot:` or `imp:` table")),
            }
            continue;
        }
        table = None;
        match key {
            "kind" => set_once(&mut f.kind, line, key, value)?,
            "elements" => set_once(&mut f.elements, line, key, value)?,
            "covers" => set_once(&mut f.covers, line, key, value)?,
            "comp" => set_once(&mut f.comp, line, key, value)?,
            "odot" | "imp" => {
                if !value.is_empty() {
                    return Err(syntax(line, format!("`{key}:` rows go on the following indented lines")));
                }
                let slot = if key == "odot" { &mut f.odot } else { &mut f.imp };
                set_once(slot, line, key, Vec::new())?;
                table = Some(if key == "odot" { "odot" } else { "imp" });
            }
            other => return Err(syntax(line, format!("unknown key `{other}`"))),
        }
    }
    Ok(f)
}

fn parse_lattice(f: &Fields<'_>) -> Result<BoundedLattice, Error> {
    let (eline, elements) = f.elements.ok_or_else(|| syntax(0, "missing `elements:` line"))?;
    let names: Vec<&str> = elements.split_whitespace().collect();
    if names.is_empty() {
        return Err(syntax(eline, "no elements"));
    }
    let (cline, covers) = f.covers.unwrap_or((eline, ""));
    let mut pairs = Vec::new();
    for token in covers.split_whitespace() {
        let Some((lo, hi)) = token.split_once('<') else {
            return Err(syntax(cline, format!("cover `{token}` is not of the form `x<y`")));
        };
        pairs.push((lo, hi));
    }
    let poset = FinitePoset::from_covers(&names, &pairs).map_err(|e| {
        let line = if matches!(e, Error::DuplicateName(_) | Error::InvalidName(_)) { eline } else { cline };
        e.at_line(line)
    })?;
    BoundedLattice::from_poset(poset).map_err(|e| e.at_line(cline))
}

fn lookup(l: &BoundedLattice, name: &str, line: usize) -> Result<ElementId, Error> {
    l.find(name).ok_or_else(|| Error::UnknownElement(name.to_string()).at_line(line))
}

fn parse_comp(l: &BoundedLattice, line: usize, text: &str) -> Result<UnaryTable, Error> {
    let mut image: Vec<Option<ElementId>> = vec![None; l.len()];
    for token in text.split_whitespace() {
        let Some((x, y)) = token.split_once('=') else {
            return Err(syntax(line, format!("complement entry `{token}` is not of the form `x=y`")));
        };
        let (x, y) = (lookup(l, x, line)?, lookup(l, y, line)?);
        if image[x.0].replace(y).is_some() {
            return Err(syntax(line, format!("`{}` has two complements", l.name(x))));
        }
    }
    let map = image
        .iter()
        .enumerate()
        .map(|(i, y)| {
            y.ok_or_else(|| Error::TableNotTotal(format!("no complement for `{}`", l.name(ElementId(i)))).at_line(line))
        })
        .collect::<Result<Vec<_>, _>>()?;
    UnaryTable::new(map, l.len())
}

fn parse_table(l: &BoundedLattice, op: &str, section: &(usize, Vec<(usize, &str, &str)>)) -> Result<BinOpTable, Error> {
    let n = l.len();
    let (header, rows) = section;
    let mut table: Vec<Option<Vec<ElementId>>> = vec![None; n];
    for &(line, label, entries) in rows {
        let x = lookup(l, label, line)?;
        let row = entries.split_whitespace().map(|s| lookup(l, s, line)).collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(Error::TableNotTotal(format!("`{op}` row `{label}` has {} entries, expected {n}", row.len()))
                .at_line(line));
        }
        if table[x.0].replace(row).is_some() {
            return Err(syntax(line, format!("duplicate `{op}` row `{label}`")));
        }
    }
    let rows = table
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            r.ok_or_else(|| {
                Error::TableNotTotal(format!("`{op}` has no row for `{}`", l.name(ElementId(i)))).at_line(*header)
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    BinOpTable::new(rows, n)
}

fn reject<T>(slot: &Option<(usize, T)>, key: &str, kind: &str) -> Result<(), Error> {
    match slot {
        Some((line, _)) => Err(syntax(*line, format!("`{key}:` is not allowed in a {kind} file"))),
        None => Ok(()),
    }
}

/// Parses and fully validates a structure file.
pub fn parse_structure(text: &str) -> Result<Structure, Error> {
    let f = scan_fields(text)?;
    let (kline, kind) = f.kind.ok_or_else(|| syntax(1, "missing `kind:` line"))?;
    match kind {
        "lattice" => {
            reject(&f.comp, "comp", kind)?;
            reject(&f.odot, "odot", kind)?;
            reject(&f.imp, "imp", kind)?;
            Ok(Structure::Lattice(parse_lattice(&f)?))
        }
        "ortho" => {
            reject(&f.odot, "odot", kind)?;
            reject(&f.imp, "imp", kind)?;
            let l = parse_lattice(&f)?;
            let (line, text) = f.comp.ok_or_else(|| Error::TableNotTotal("missing `comp:` line".into()))?;
            let comp = parse_comp(&l, line, text)?;
            Ok(Structure::Ortho(OrthoCandidate::new(l, comp)?))
        }
        "groupoid" => {
            reject(&f.comp, "comp", kind)?;
            let l = parse_lattice(&f)?;
            let odot = f.odot.as_ref().ok_or_else(|| Error::TableNotTotal("missing `odot:` table".into()))?;
            let imp = f.imp.as_ref().ok_or_else(|| Error::TableNotTotal("missing `imp:` table".into()))?;
            let odot = parse_table(&l, "odot", odot)?;
            let imp = parse_table(&l, "imp", imp)?;
            Ok(Structure::Groupoid(LrGroupoid::new(l, odot, imp)?))
        }
        other => Err(syntax(kline, format!("unknown kind `{other}`"))),
    }
}

fn write_lattice(out: &mut String, kind: &str, l: &BoundedLattice) {
    let _ = writeln!(out, "kind: {kind}");
    let _ = writeln!(out, "elements: {}", l.names().join(" "));
    let covers: Vec<String> = l.covers().iter().map(|&(x, y)| format!("{}<{}", l.name(x), l.name(y))).collect();
    if covers.is_empty() {
        out.push_str("covers:\n");
    } else {
        let _ = writeln!(out, "covers: {}", covers.join(" "));
    }
}

fn write_table(out: &mut String, op: &str, l: &BoundedLattice, table: &BinOpTable) {
    let _ = writeln!(out, "{op}:");
    for x in l.elements() {
        let row: Vec<&str> = table.row(x).iter().map(|&y| l.name(y)).collect();
        let _ = writeln!(out, "  {}: {}", l.name(x), row.join(" "));
    }
}

/// Normalized file text: covers are the transitive reduction in row-major
/// order, every table is written in `elements` order.
pub fn serialize_structure(s: &Structure) -> String {
    let mut out = String::new();
    let l = s.lattice();
    write_lattice(&mut out, s.kind(), l);
    match s {
        Structure::Lattice(_) => {}
        Structure::Ortho(c) => {
            let pairs: Vec<String> = l.elements().map(|x| format!("{}={}", l.name(x), l.name(c.c(x)))).collect();
            let _ = writeln!(out, "comp: {}", pairs.join(" "));
        }
        Structure::Groupoid(g) => {
            write_table(&mut out, "odot", l, g.odot_table());
            write_table(&mut out, "imp", l, g.imp_table());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ortho::verify_oml;

    const MO2: &str = "\
kind: ortho            # the smallest non-Boolean OML
elements: 0 a a' b b' 1
covers: 0<a 0<a' 0<b 0<b' a<1 a'<1 b<1 b'<1

comp: 0=1 a=a' b=b' 1=0 a'=a b'=b
";

    #[test]
    fn parses_mo2() {
        let s = parse_structure(MO2).unwrap();
        let Structure::Ortho(c) = &s else { panic!("expected ortho") };
        assert_eq!(c, &fixtures::mo2());
        assert!(verify_oml(c).overall());
    }

    #[test]
    fn normalized_text_round_trips() {
        let s = parse_structure(MO2).unwrap();
        let text = serialize_structure(&s);
        assert_eq!(parse_structure(&text).unwrap(), s);
        assert_eq!(serialize_structure(&parse_structure(&text).unwrap()), text);
    }

    #[test]
    fn missing_row_is_not_total() {
        let text = "\
kind: groupoid
elements: 0 1
covers: 0<1
odot:
  0: 0 0
  1: 0 1
imp:
  0: 1 1
";
        let err = parse_structure(text).unwrap_err();
        assert!(matches!(err.root(), Error::TableNotTotal(_)), "{err}");
    }

    #[test]
    fn short_row_is_not_total() {
        let text = "kind: groupoid\nelements: 0 1\ncovers: 0<1\nodot:\n  0: 0\n  1: 0 1\nimp:\n  0: 1 1\n  1: 0 1\n";
        let err = parse_structure(text).unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 5, .. }));
        assert!(matches!(err.root(), Error::TableNotTotal(_)));
    }

    #[test]
    fn unknown_element_is_positioned() {
        let text = "kind: ortho\nelements: 0 1\ncovers: 0<1\ncomp: 0=1 1=z\n";
        let err = parse_structure(text).unwrap_err();
        assert_eq!(err, Error::AtLine { line: 4, source: Box::new(Error::UnknownElement("z".into())) });
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let err = parse_structure("kind: lattice\nelements 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }));
        let err = parse_structure("kind: lattice\nelements: 0 1\ncovers: 0-1\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }));
        let err = parse_structure("kind: poset\nelements: 0\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, .. }));
    }

    #[test]
    fn non_lattice_is_rejected() {
        let text = "kind: lattice\nelements: 0 a b c d 1\ncovers: 0<a 0<b a<c a<d b<c b<d c<1 d<1\n";
        let err = parse_structure(text).unwrap_err();
        assert!(matches!(err.root(), Error::NotALattice { .. }));
    }

    #[test]
    fn hexagon_file_fails_orthomodularity() {
        let text = serialize_structure(&fixtures::o6().into());
        let Structure::Ortho(c) = parse_structure(&text).unwrap() else { panic!() };
        let r = verify_oml(&c);
        assert!(!r.overall());
        assert!(!r.passed(crate::report::Axiom::OrthomodularV));
    }

    #[test]
    fn one_element_lattice_has_empty_covers() {
        let s: Structure = fixtures::chain(1).into();
        let text = serialize_structure(&s);
        assert_eq!(text, "kind: lattice\nelements: 0\ncovers:\n");
        assert_eq!(parse_structure(&text).unwrap(), s);
    }
}
