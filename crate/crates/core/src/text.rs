//! Line-oriented text formats.
//!
//! Every format is a sequence of `key: value` lines. Blank lines and lines
//! starting with `#` are ignored. Errors carry the 1-based line number.
//!
//! ```text
//! vertices: a b c        # complex
//! facet: a b
//! facet: c
//!
//! ring: x1:1 x2:1 z1:2   # ideal
//! field: p:32003
//! gen: x1^2*z1
//! poly: 3*x1*z1 - x2*z1
//!
//! cell: a 0              # cell complex
//! cell: e 1 a b
//! bdry: e (b +1) (a -1)
//! label: a x1*x2         # labeled complex, after a ring line
//!
//! member: C1 a b         # family, after a complex or cell complex
//! color: C1 2
//! ```

use std::collections::HashMap;

use crate::cellular::{CellComplex, LabeledComplex};
use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::monomial::{ColoredRing, Monomial, MonomialIdeal};
use crate::multigraded::{MultigradedIdeal, Polynomial};
use crate::simplicial::{bits, FamilyMember, SimplicialComplex, SubcomplexFamily};

struct Line<'a> {
    no: usize,
    key: &'a str,
    rest: &'a str,
}

fn lines(s: &str) -> Result<Vec<Line<'_>>> {
    let mut out = Vec::new();
    for (k, raw) in s.lines().enumerate() {
        let no = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (key, rest) = match body.split_once(':') {
            Some((key, rest)) if !key.contains(char::is_whitespace) => (key.trim(), rest.trim()),
            _ => (body, ""),
        };
        out.push(Line { no, key, rest });
    }
    Ok(out)
}

fn at<T>(no: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        e @ Error::Parse { .. } => e,
        e => Error::parse(no, e.to_string()),
    })
}

fn unknown(l: &Line<'_>) -> Error {
    Error::parse(l.no, format!("unexpected line {:?}", l.key))
}

fn words(s: &str) -> Vec<&str> {
    s.split_whitespace().collect()
}

fn parse_ring_line(l: &Line<'_>) -> Result<ColoredRing> {
    let mut names = Vec::new();
    let mut colors = Vec::new();
    for w in words(l.rest) {
        let (name, color) = w
            .split_once(':')
            .ok_or_else(|| Error::parse(l.no, format!("expected name:color, got {w:?}")))?;
        let c = color
            .parse()
            .map_err(|_| Error::parse(l.no, format!("bad color {color:?}")))?;
        names.push(name.to_string());
        colors.push(c);
    }
    at(l.no, ColoredRing::new(names, colors))
}

fn parse_field_line(l: &Line<'_>) -> Result<Field> {
    at(l.no, l.rest.parse())
}

/// Complex lines within a larger file; `None` when there are none.
fn complex_from_lines(ls: &[&Line<'_>]) -> Result<Option<SimplicialComplex>> {
    let Some(head) = ls.iter().find(|l| l.key == "vertices") else {
        if let Some(l) = ls.first() {
            return Err(Error::parse(l.no, "complex needs a vertices: line first"));
        }
        return Ok(None);
    };
    let vertices: Vec<String> = words(head.rest).into_iter().map(String::from).collect();
    let mut facets: Vec<Vec<String>> = Vec::new();
    let mut special = None;
    for l in ls {
        match l.key {
            "vertices" if l.no != head.no => {
                return Err(Error::parse(l.no, "repeated vertices: line"))
            }
            "vertices" => {}
            "facet" => {
                let f: Vec<String> = words(l.rest).into_iter().map(String::from).collect();
                if let Some(v) = f.iter().find(|v| !vertices.contains(v)) {
                    return Err(Error::parse(l.no, format!("unknown vertex {v:?}")));
                }
                facets.push(f);
            }
            "void" | "irrelevant" => special = Some((l.no, l.key)),
            _ => return Err(unknown(l)),
        }
    }
    let c = match special {
        Some((no, _)) if !facets.is_empty() => {
            return Err(Error::parse(
                no,
                "void/irrelevant cannot be combined with facets",
            ));
        }
        Some((_, "void")) => SimplicialComplex::void(vertices),
        Some(_) => SimplicialComplex::irrelevant(vertices),
        None if facets.is_empty() => {
            return Err(Error::parse(
                head.no,
                "no facets; write void or irrelevant explicitly",
            ));
        }
        None => at(head.no, SimplicialComplex::new(&vertices, &facets))?,
    };
    Ok(Some(c))
}

const COMPLEX_KEYS: [&str; 4] = ["vertices", "facet", "void", "irrelevant"];
const CELL_KEYS: [&str; 2] = ["cell", "bdry"];

pub fn parse_complex(s: &str) -> Result<SimplicialComplex> {
    let ls = lines(s)?;
    if let Some(l) = ls.iter().find(|l| !COMPLEX_KEYS.contains(&l.key)) {
        return Err(unknown(l));
    }
    let refs: Vec<&Line<'_>> = ls.iter().collect();
    complex_from_lines(&refs)?.ok_or_else(|| Error::parse(1, "empty complex file"))
}

pub fn complex_to_text(c: &SimplicialComplex) -> String {
    let mut s = format!("vertices: {}\n", c.vertices().join(" "));
    if c.is_void() {
        s.push_str("void\n");
    } else if c.is_irrelevant() {
        s.push_str("irrelevant\n");
    } else {
        for f in c.facet_labels() {
            s.push_str(&format!("facet: {}\n", f.join(" ")));
        }
    }
    s
}

fn ring_and_field(ls: &[Line<'_>]) -> Result<(ColoredRing, Field)> {
    let mut ring = None;
    let mut field = Field::Rationals;
    for l in ls {
        match l.key {
            "ring" if ring.is_some() => return Err(Error::parse(l.no, "repeated ring: line")),
            "ring" => ring = Some(parse_ring_line(l)?),
            "field" => field = parse_field_line(l)?,
            _ => {}
        }
    }
    let ring =
        ring.ok_or_else(|| Error::parse(ls.first().map_or(1, |l| l.no), "missing ring: line"))?;
    Ok((ring, field))
}

/// An ideal file, monomial or not. Defaults to `QQ` without a `field:` line.
pub fn parse_ideal(s: &str) -> Result<MultigradedIdeal> {
    parse_ideal_over(s, None)
}

/// As [`parse_ideal`], with `field` taking precedence over the file's.
pub fn parse_ideal_over(s: &str, field: Option<Field>) -> Result<MultigradedIdeal> {
    let ls = lines(s)?;
    let (ring, declared) = ring_and_field(&ls)?;
    let field = field.unwrap_or(declared);
    let mut gens = Vec::new();
    let mut last = 1;
    for l in &ls {
        match l.key {
            "ring" | "field" => {}
            "gen" | "poly" => {
                let p = at(l.no, Polynomial::parse(&ring, field, l.rest))?;
                if l.key == "gen" && !p.is_monomial() {
                    return Err(Error::parse(
                        l.no,
                        "gen: takes a single monomial; use poly:",
                    ));
                }
                gens.push(p);
                last = l.no;
            }
            _ => return Err(unknown(l)),
        }
    }
    at(last, MultigradedIdeal::new(ring, field, gens))
}

/// An ideal file whose generators are monomials.
pub fn parse_monomial_ideal(s: &str) -> Result<MonomialIdeal> {
    let ls = lines(s)?;
    let (ring, _) = ring_and_field(&ls)?;
    let mut gens = Vec::new();
    for l in &ls {
        match l.key {
            "ring" | "field" => {}
            "gen" => gens.push(at(l.no, ring.parse_monomial(l.rest))?),
            "poly" => return Err(Error::parse(l.no, "expected a monomial ideal")),
            _ => return Err(unknown(l)),
        }
    }
    MonomialIdeal::new(ring, gens)
}

fn cells_from_lines(ls: &[&Line<'_>]) -> Result<Option<CellComplex>> {
    if ls.is_empty() {
        return Ok(None);
    }
    let mut cells: Vec<(String, usize, Vec<String>)> = Vec::new();
    let mut bdry: Vec<(String, Vec<(String, i8)>)> = Vec::new();
    for l in ls {
        let w = words(l.rest);
        match l.key {
            "cell" => {
                let [id, dim, vs @ ..] = w.as_slice() else {
                    return Err(Error::parse(l.no, "expected cell: id dim vertices..."));
                };
                let dim = dim
                    .parse()
                    .map_err(|_| Error::parse(l.no, format!("bad dimension {dim:?}")))?;
                cells.push((
                    id.to_string(),
                    dim,
                    vs.iter().map(|v| v.to_string()).collect(),
                ));
            }
            "bdry" => {
                let (id, rest) = l
                    .rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| Error::parse(l.no, "expected bdry: id (facet sign)..."))?;
                let mut terms = Vec::new();
                for chunk in rest.split(')') {
                    let chunk = chunk.trim();
                    if chunk.is_empty() {
                        continue;
                    }
                    let inner = chunk.strip_prefix('(').ok_or_else(|| {
                        Error::parse(l.no, format!("expected (facet sign), got {chunk:?}"))
                    })?;
                    let [f, sign] = words(inner)[..] else {
                        return Err(Error::parse(
                            l.no,
                            format!("expected (facet sign), got {chunk:?}"),
                        ));
                    };
                    let sign = match sign {
                        "+1" | "1" | "+" => 1,
                        "-1" | "-" => -1,
                        _ => {
                            return Err(Error::parse(
                                l.no,
                                format!("sign must be +1 or -1, got {sign:?}"),
                            ))
                        }
                    };
                    terms.push((f.to_string(), sign));
                }
                bdry.push((id.to_string(), terms));
            }
            _ => return Err(unknown(l)),
        }
    }
    let first = ls[0].no;
    Ok(Some(at(first, CellComplex::new(&cells, &bdry))?))
}

pub fn parse_cell_complex(s: &str) -> Result<CellComplex> {
    let ls = lines(s)?;
    let refs: Vec<&Line<'_>> = ls.iter().collect();
    cells_from_lines(&refs)?.ok_or_else(|| Error::parse(1, "empty cell complex file"))
}

/// Either a simplicial or a cellular ambient complex, whichever the lines
/// describe.
fn ambient_cells(ls: &[Line<'_>]) -> Result<CellComplex> {
    let simp: Vec<&Line<'_>> = ls
        .iter()
        .filter(|l| COMPLEX_KEYS.contains(&l.key))
        .collect();
    let cell: Vec<&Line<'_>> = ls.iter().filter(|l| CELL_KEYS.contains(&l.key)).collect();
    match (simp.is_empty(), cell.is_empty()) {
        (false, false) => Err(Error::parse(cell[0].no, "mixes simplicial and cell lines")),
        (false, true) => Ok(CellComplex::from_simplicial(
            &complex_from_lines(&simp)?.expect("nonempty"),
        )),
        (true, false) => Ok(cells_from_lines(&cell)?.expect("nonempty")),
        (true, true) => Err(Error::parse(1, "missing ambient complex")),
    }
}

/// A labeled cell complex: a `ring:` line, a complex (simplicial or cellular)
/// and one `label:` line per vertex.
pub fn parse_labeled_complex(s: &str) -> Result<LabeledComplex> {
    let ls = lines(s)?;
    let (ring, _) = ring_and_field(&ls)?;
    let complex = ambient_cells(&ls)?;
    let mut labels: HashMap<&str, (usize, Monomial)> = HashMap::new();
    for l in &ls {
        match l.key {
            "ring" | "field" => {}
            k if COMPLEX_KEYS.contains(&k) || CELL_KEYS.contains(&k) => {}
            "label" => {
                let (v, m) = l
                    .rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| Error::parse(l.no, "expected label: vertex monomial"))?;
                let m = at(l.no, ring.parse_monomial(m.trim()))?;
                if labels.insert(v, (l.no, m)).is_some() {
                    return Err(Error::parse(l.no, format!("vertex {v:?} labeled twice")));
                }
            }
            _ => return Err(unknown(l)),
        }
    }
    let mut out = Vec::new();
    for v in complex.vertices() {
        let (_, m) = labels.remove(v.as_str()).ok_or_else(|| {
            Error::parse(
                ls.last().map_or(1, |l| l.no),
                format!("vertex {v:?} has no label"),
            )
        })?;
        out.push(m);
    }
    if let Some((v, (no, _))) = labels.into_iter().min_by_key(|(_, (no, _))| *no) {
        return Err(Error::parse(no, format!("label for unknown vertex {v:?}")));
    }
    LabeledComplex::new(complex, ring, out)
}

/// A family of induced subcomplexes over a simplicial or a cellular ambient.
#[derive(Debug, Clone)]
pub enum Family {
    Simplicial(SubcomplexFamily<SimplicialComplex>),
    Cellular(SubcomplexFamily<CellComplex>),
}

impl Family {
    /// The same family over the cellular ambient.
    pub fn into_cellular(self) -> Result<SubcomplexFamily<CellComplex>> {
        match self {
            Family::Cellular(f) => Ok(f),
            Family::Simplicial(f) => SubcomplexFamily::new(
                CellComplex::from_simplicial(f.ambient()),
                f.members().to_vec(),
            ),
        }
    }
}

fn members_from_lines(ls: &[Line<'_>], vertices: &[String]) -> Result<Vec<FamilyMember>> {
    let index: HashMap<&str, usize> = vertices
        .iter()
        .enumerate()
        .map(|(k, v)| (v.as_str(), k))
        .collect();
    let mut members: Vec<FamilyMember> = Vec::new();
    for l in ls {
        match l.key {
            "member" => {
                let w = words(l.rest);
                let Some((label, vs)) = w.split_first() else {
                    return Err(Error::parse(l.no, "expected member: label vertices..."));
                };
                let mut mask = 0;
                for v in vs {
                    let k = index
                        .get(v)
                        .ok_or_else(|| Error::parse(l.no, format!("unknown vertex {v:?}")))?;
                    mask |= 1u64 << k;
                }
                members.push(FamilyMember {
                    label: label.to_string(),
                    vertices: mask,
                    color: None,
                });
            }
            "color" => {
                let [label, c] = words(l.rest)[..] else {
                    return Err(Error::parse(l.no, "expected color: label color"));
                };
                let c = c
                    .parse()
                    .map_err(|_| Error::parse(l.no, format!("bad color {c:?}")))?;
                let m = members
                    .iter_mut()
                    .find(|m| m.label == label)
                    .ok_or_else(|| {
                        Error::parse(l.no, format!("color for undeclared member {label:?}"))
                    })?;
                m.color = Some(c);
            }
            k if COMPLEX_KEYS.contains(&k) || CELL_KEYS.contains(&k) => {}
            _ => return Err(unknown(l)),
        }
    }
    Ok(members)
}

pub fn parse_family(s: &str) -> Result<Family> {
    let ls = lines(s)?;
    let first_member = ls.iter().find(|l| l.key == "member").map_or(1, |l| l.no);
    if ls.iter().any(|l| CELL_KEYS.contains(&l.key)) {
        let ambient = ambient_cells(&ls)?;
        let members = members_from_lines(&ls, ambient.vertices())?;
        Ok(Family::Cellular(at(
            first_member,
            SubcomplexFamily::new(ambient, members),
        )?))
    } else {
        let simp: Vec<&Line<'_>> = ls
            .iter()
            .filter(|l| COMPLEX_KEYS.contains(&l.key))
            .collect();
        let ambient =
            complex_from_lines(&simp)?.ok_or_else(|| Error::parse(1, "missing ambient complex"))?;
        let members = members_from_lines(&ls, ambient.vertices())?;
        Ok(Family::Simplicial(at(
            first_member,
            SubcomplexFamily::new(ambient, members),
        )?))
    }
}

fn members_to_text(members: &[FamilyMember], vertices: &[String]) -> String {
    let mut s = String::new();
    for m in members {
        let vs: Vec<&str> = bits(m.vertices).map(|v| vertices[v].as_str()).collect();
        if vs.is_empty() {
            s.push_str(&format!("member: {}\n", m.label));
        } else {
            s.push_str(&format!("member: {} {}\n", m.label, vs.join(" ")));
        }
    }
    for m in members {
        if let Some(c) = m.color {
            s.push_str(&format!("color: {} {c}\n", m.label));
        }
    }
    s
}

pub fn family_to_text(f: &Family) -> String {
    match f {
        Family::Simplicial(f) => {
            complex_to_text(f.ambient()) + &members_to_text(f.members(), f.ambient().vertices())
        }
        Family::Cellular(f) => {
            f.ambient().to_text() + &members_to_text(f.members(), f.ambient().vertices())
        }
    }
}
