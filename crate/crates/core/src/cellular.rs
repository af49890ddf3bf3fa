//! Monomially labeled cell complexes and the free complexes they support.
//!
//! Cells carry explicit incidence signs. A labeling assigns a monomial to
//! each vertex; a face is labeled by the lcm of its vertices.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{betti_table_koszul, projective_dimension, FreeComplex, MonomialMatrix};
use crate::error::{Error, Result};
use crate::exactla::{Field, SparseMatrix};
use crate::monomial::{minimal_primes, ColoredRing, Monomial, MonomialIdeal, Multidegree};
use crate::multigraded::MultigradedIdeal;
use crate::simplicial::{
    bits, full_mask, Ambient, Face, FamilyMember, HomologyDims, SimplicialComplex,
    SubcomplexFamily, MAX_VERTICES,
};

/// Upper bound on lcm-lattice points enumerated by the resolution check.
pub const LATTICE_POINT_CAP: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cell {
    pub id: String,
    pub dim: usize,
    pub vertices: Face,
}

/// A regular cell complex given combinatorially: cells, their vertex sets and
/// signed facet incidences. `vertices` is the ground set; a vertex is present
/// when it has a 0-cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    vertices: Vec<String>,
    cells: Vec<Cell>,
    boundary: Vec<Vec<(usize, i8)>>,
}

impl CellComplex {
    /// Builds and validates a complex. `cells` are `(id, dim, vertex ids)`;
    /// a 0-cell may omit its vertex list. `boundary` lists signed facets by
    /// id; cells of dimension 0 have none.
    pub fn new<S: AsRef<str>>(
        cells: &[(S, usize, Vec<S>)],
        boundary: &[(S, Vec<(S, i8)>)],
    ) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut vpos: HashMap<&str, usize> = HashMap::new();
        for (id, dim, _) in cells {
            if *dim == 0 {
                if vpos.insert(id.as_ref(), vertices.len()).is_some() {
                    return Err(Error::InvalidComplex(format!(
                        "duplicate cell {:?}",
                        id.as_ref()
                    )));
                }
                vertices.push(id.as_ref().to_string());
            }
        }
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex set",
                size: vertices.len(),
                cap: MAX_VERTICES,
            });
        }
        let mut built = Vec::with_capacity(cells.len());
        let mut cpos: HashMap<&str, usize> = HashMap::new();
        for (k, (id, dim, vs)) in cells.iter().enumerate() {
            if cpos.insert(id.as_ref(), k).is_some() {
                return Err(Error::InvalidComplex(format!(
                    "duplicate cell {:?}",
                    id.as_ref()
                )));
            }
            let mut mask = 0;
            for v in vs {
                let i = vpos.get(v.as_ref()).ok_or_else(|| {
                    Error::InvalidComplex(format!(
                        "cell {:?} names unknown vertex {:?}",
                        id.as_ref(),
                        v.as_ref()
                    ))
                })?;
                mask |= 1u64 << i;
            }
            if *dim == 0 {
                let own = 1u64 << vpos[id.as_ref()];
                if mask != 0 && mask != own {
                    return Err(Error::InvalidComplex(format!(
                        "0-cell {:?} must be its own vertex",
                        id.as_ref()
                    )));
                }
                mask = own;
            }
            built.push(Cell {
                id: id.as_ref().to_string(),
                dim: *dim,
                vertices: mask,
            });
        }
        let mut bd = vec![Vec::new(); built.len()];
        for (id, facets) in boundary {
            let k = *cpos.get(id.as_ref()).ok_or_else(|| {
                Error::InvalidComplex(format!("boundary of unknown cell {:?}", id.as_ref()))
            })?;
            if !bd[k].is_empty() {
                return Err(Error::InvalidComplex(format!(
                    "boundary of {:?} given twice",
                    id.as_ref()
                )));
            }
            for (f, s) in facets {
                let j = *cpos.get(f.as_ref()).ok_or_else(|| {
                    Error::InvalidComplex(format!(
                        "unknown facet {:?} of {:?}",
                        f.as_ref(),
                        id.as_ref()
                    ))
                })?;
                bd[k].push((j, *s));
            }
        }
        CellComplex::from_parts(vertices, built, bd)
    }

    fn from_parts(
        vertices: Vec<String>,
        cells: Vec<Cell>,
        boundary: Vec<Vec<(usize, i8)>>,
    ) -> Result<Self> {
        let c = CellComplex {
            vertices,
            cells,
            boundary,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        for (k, cell) in self.cells.iter().enumerate() {
            let bd = &self.boundary[k];
            if cell.dim == 0 {
                if !bd.is_empty() || cell.vertices.count_ones() != 1 {
                    return Err(Error::InvalidComplex(format!(
                        "0-cell {:?} is malformed",
                        cell.id
                    )));
                }
                continue;
            }
            if bd.is_empty() {
                return Err(Error::InvalidComplex(format!(
                    "cell {:?} has no boundary",
                    cell.id
                )));
            }
            let mut union = 0;
            let mut seen = BTreeSet::new();
            for (j, s) in bd {
                let f = &self.cells[*j];
                if f.dim + 1 != cell.dim {
                    return Err(Error::InvalidComplex(format!(
                        "facet {:?} of {:?} has the wrong dimension",
                        f.id, cell.id
                    )));
                }
                if *s != 1 && *s != -1 {
                    return Err(Error::InvalidComplex(format!("sign {s} is not ±1")));
                }
                if !seen.insert(*j) {
                    return Err(Error::InvalidComplex(format!(
                        "facet {:?} repeated in {:?}",
                        f.id, cell.id
                    )));
                }
                union |= f.vertices;
            }
            if union != cell.vertices {
                return Err(Error::InvalidComplex(format!(
                    "vertex set of {:?} is not the union of its facets",
                    cell.id
                )));
            }
        }
        // ∂² = 0 with the augmentation sending every vertex to 1.
        for (k, cell) in self.cells.iter().enumerate() {
            let mut acc: BTreeMap<Option<usize>, i64> = BTreeMap::new();
            for (j, s) in &self.boundary[k] {
                if self.cells[*j].dim == 0 {
                    *acc.entry(None).or_insert(0) += i64::from(*s);
                } else {
                    for (i, t) in &self.boundary[*j] {
                        *acc.entry(Some(*i)).or_insert(0) += i64::from(*s) * i64::from(*t);
                    }
                }
            }
            if acc.values().any(|v| *v != 0) {
                return Err(Error::InvalidComplex(format!(
                    "boundary of {:?} does not square to zero",
                    cell.id
                )));
            }
        }
        Ok(())
    }

    /// Every nonempty face of `c` as a cell, signs from sorted vertex order.
    pub fn from_simplicial(c: &SimplicialComplex) -> CellComplex {
        let mut faces: Vec<Face> = c.faces().into_iter().filter(|f| *f != 0).collect();
        faces.sort_by_key(|f| (f.count_ones(), *f));
        let index: HashMap<Face, usize> = faces.iter().enumerate().map(|(k, f)| (*f, k)).collect();
        let cells = faces
            .iter()
            .map(|f| Cell {
                id: face_id(c.vertices(), *f),
                dim: f.count_ones() as usize - 1,
                vertices: *f,
            })
            .collect();
        let boundary = faces
            .iter()
            .map(|f| {
                if f.count_ones() == 1 {
                    return Vec::new();
                }
                bits(*f)
                    .enumerate()
                    .map(|(j, v)| (index[&(f & !(1 << v))], if j % 2 == 0 { 1 } else { -1 }))
                    .collect()
            })
            .collect();
        CellComplex::from_parts(c.vertices().to_vec(), cells, boundary)
            .expect("simplicial signs square to zero")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Signed facets of cell `k`, as cell indices.
    pub fn boundary(&self, k: usize) -> &[(usize, i8)] {
        &self.boundary[k]
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        self.cells.iter().map(|c| c.dim).max()
    }

    /// Cells whose vertex sets lie inside `mask`, same ground set.
    pub fn restrict(&self, mask: Face) -> CellComplex {
        self.keep(|c| c.vertices & !mask == 0)
    }

    fn keep(&self, pred: impl Fn(&Cell) -> bool) -> CellComplex {
        let kept: Vec<usize> = (0..self.cells.len())
            .filter(|k| pred(&self.cells[*k]))
            .collect();
        let remap: HashMap<usize, usize> = kept.iter().enumerate().map(|(n, o)| (*o, n)).collect();
        CellComplex {
            vertices: self.vertices.clone(),
            cells: kept.iter().map(|k| self.cells[*k].clone()).collect(),
            boundary: kept
                .iter()
                .map(|k| {
                    self.boundary[*k]
                        .iter()
                        .map(|(j, s)| (remap[j], *s))
                        .collect()
                })
                .collect(),
        }
    }

    /// Reduced homology of the augmented cellular chain complex. With no
    /// cells this is `H̃_{-1} = k`.
    pub fn reduced_homology(&self, field: Field) -> HomologyDims {
        let top = self.dim().map_or(0, |d| d + 1);
        // by_dim[s] holds cells of dimension s - 1; slot 0 is the empty cell.
        let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
        by_dim[0].push(usize::MAX);
        let mut pos = vec![0usize; self.cells.len()];
        for (k, c) in self.cells.iter().enumerate() {
            pos[k] = by_dim[c.dim + 1].len();
            by_dim[c.dim + 1].push(k);
        }
        let mut ranks = vec![0usize; top + 2];
        for s in 1..=top {
            let entries = by_dim[s].iter().enumerate().flat_map(|(col, k)| {
                let pos = &pos;
                let bd: Vec<(usize, i8)> = if s == 1 {
                    vec![(0, 1)]
                } else {
                    self.boundary[*k]
                        .iter()
                        .map(|(j, sg)| (pos[*j], *sg))
                        .collect()
                };
                bd.into_iter()
                    .map(move |(row, sg)| (row, col, field.from_i64(i64::from(sg))))
            });
            ranks[s] = SparseMatrix::new(
                by_dim[s - 1].len(),
                by_dim[s].len(),
                field,
                entries.collect::<Vec<_>>(),
            )
            .expect("cell incidences are distinct")
            .rank();
        }
        (0..=top)
            .map(|s| (s as i32 - 1, by_dim[s].len() - ranks[s] - ranks[s + 1]))
            .filter(|(_, h)| *h > 0)
            .collect()
    }

    pub fn is_acyclic(&self, field: Field) -> bool {
        self.reduced_homology(field).values().all(|d| *d == 0)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cells {
            let vs: Vec<&str> = bits(c.vertices)
                .map(|v| self.vertices[v].as_str())
                .collect();
            if c.dim == 0 {
                s.push_str(&format!("cell: {} 0\n", c.id));
            } else {
                s.push_str(&format!("cell: {} {} {}\n", c.id, c.dim, vs.join(" ")));
            }
        }
        for (k, c) in self.cells.iter().enumerate() {
            if self.boundary[k].is_empty() {
                continue;
            }
            let parts: Vec<String> = self.boundary[k]
                .iter()
                .map(|(j, sg)| {
                    format!(
                        "({} {})",
                        self.cells[*j].id,
                        if *sg > 0 { "+1" } else { "-1" }
                    )
                })
                .collect();
            s.push_str(&format!("bdry: {} {}\n", c.id, parts.join(" ")));
        }
        s
    }
}

fn face_id(vertices: &[String], f: Face) -> String {
    if f.count_ones() == 1 {
        return vertices[f.trailing_zeros() as usize].clone();
    }
    let vs: Vec<&str> = bits(f).map(|v| vertices[v].as_str()).collect();
    format!("{{{}}}", vs.join(","))
}

impl Ambient for CellComplex {
    fn vertex_labels(&self) -> Vec<String> {
        self.vertices.clone()
    }

    fn vertex_support(&self) -> Face {
        self.cells
            .iter()
            .filter(|c| c.dim == 0)
            .fold(0, |m, c| m | c.vertices)
    }

    fn induced_homology(&self, mask: Face, field: Field) -> Result<HomologyDims> {
        Ok(self.restrict(mask).reduced_homology(field))
    }

    fn union_homology(&self, masks: &[Face], field: Field) -> Result<HomologyDims> {
        if masks.is_empty() || self.is_empty() {
            return Err(Error::VoidComplex);
        }
        Ok(self
            .keep(|c| masks.iter().any(|m| c.vertices & !m == 0))
            .reduced_homology(field))
    }

    fn ambient_dim(&self) -> Option<i32> {
        self.dim().map(|d| d as i32)
    }

    fn ambient_homology(&self, field: Field) -> Result<HomologyDims> {
        Ok(self.reduced_homology(field))
    }
}

/// A cell complex with a monomial on every ground vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledComplex {
    complex: CellComplex,
    ring: ColoredRing,
    labels: Vec<Monomial>,
}

impl LabeledComplex {
    pub fn new(complex: CellComplex, ring: ColoredRing, labels: Vec<Monomial>) -> Result<Self> {
        if labels.len() != complex.vertices.len() {
            return Err(Error::InvalidComplex(format!(
                "{} labels for {} vertices",
                labels.len(),
                complex.vertices.len()
            )));
        }
        if labels.iter().any(|m| m.nvars() != ring.nvars()) {
            return Err(Error::InvalidComplex("label in the wrong ring".into()));
        }
        Ok(LabeledComplex {
            complex,
            ring,
            labels,
        })
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn ring(&self) -> &ColoredRing {
        &self.ring
    }

    pub fn labels(&self) -> &[Monomial] {
        &self.labels
    }

    /// lcm of the labels of the vertices in `mask`.
    pub fn label_of_mask(&self, mask: Face) -> Monomial {
        bits(mask).fold(Monomial::one(self.ring.nvars()), |acc, v| {
            acc.lcm(&self.labels[v])
        })
    }

    pub fn face_label(&self, cell: usize) -> Monomial {
        self.label_of_mask(self.complex.cells[cell].vertices)
    }

    /// Ideal generated by the labels of present vertices.
    pub fn label_ideal(&self) -> MonomialIdeal {
        let support = self.complex.vertex_support();
        let gens = bits(support).map(|v| self.labels[v].clone()).collect();
        MonomialIdeal::new(self.ring.clone(), gens).expect("labels live in the ring")
    }

    pub fn is_squarefree(&self) -> bool {
        self.labels.iter().all(Monomial::is_squarefree)
    }

    pub fn to_text(&self) -> String {
        let mut s = self.ring.to_text();
        s.push('\n');
        s.push_str(&self.complex.to_text());
        for (v, m) in self.complex.vertices.iter().zip(&self.labels) {
            s.push_str(&format!("label: {v} {}\n", self.ring.fmt_monomial(m)));
        }
        s
    }
}

fn member_variable(label: &str) -> String {
    format!("x{label}")
}

fn variable_member(name: &str) -> String {
    match name.strip_prefix('x') {
        Some(rest) if !rest.is_empty() => rest.to_string(),
        _ => name.to_string(),
    }
}

/// Vertex `v` gets `Π_{v ∉ C_i} x_i`, one variable per family index. Member
/// colors become variable colors; without colors the grading is fine.
pub fn labeling_from_family(f: &SubcomplexFamily<CellComplex>) -> Result<LabeledComplex> {
    let members = f.members();
    let names: Vec<String> = members.iter().map(|m| member_variable(&m.label)).collect();
    let ring = if members.iter().all(|m| m.color.is_some()) && !members.is_empty() {
        ColoredRing::new(
            names,
            members.iter().map(|m| m.color.expect("checked")).collect(),
        )?
    } else {
        ColoredRing::fine(&names)
    };
    let n = members.len();
    let labels = (0..f.ambient().vertices.len())
        .map(|v| {
            let missing = members
                .iter()
                .enumerate()
                .filter(|(_, m)| m.vertices >> v & 1 == 0)
                .fold(0u64, |acc, (i, _)| acc | 1 << i);
            Monomial::from_mask(n, missing)
        })
        .collect();
    LabeledComplex::new(f.ambient().clone(), ring, labels)
}

/// `C_i` is induced on the vertices whose label omits `x_i`. A ring colored
/// `1..=n` in variable order is the fine grading, so a family colored by
/// member position comes back uncolored.
pub fn family_from_labeling(l: &LabeledComplex) -> Result<SubcomplexFamily<CellComplex>> {
    if let Some(bad) = l.labels.iter().find(|m| !m.is_squarefree()) {
        return Err(Error::NotSquarefree(l.ring.fmt_monomial(bad)));
    }
    // Colors 1..=n in order are indistinguishable from the fine grading.
    let fine = l.ring.colors().iter().enumerate().all(|(i, c)| *c == i + 1);
    let members = (0..l.ring.nvars())
        .map(|i| FamilyMember {
            label: variable_member(l.ring.name(i)),
            vertices: (0..l.labels.len())
                .filter(|v| l.labels[*v].exps()[i] == 0)
                .fold(0u64, |acc, v| acc | 1 << v),
            color: (!fine).then(|| l.ring.color_of(i)),
        })
        .collect();
    SubcomplexFamily::new(l.complex.clone(), members)
}

/// Cells whose label divides `b`.
pub fn sub_below(l: &LabeledComplex, b: &Monomial) -> CellComplex {
    let mask = (0..l.labels.len())
        .filter(|v| l.labels[*v].divides(b))
        .fold(0u64, |acc, v| acc | 1 << v);
    l.complex.restrict(mask & full_mask(l.labels.len()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellularReport {
    pub resolution: bool,
    /// First `b` (canonical monomial order) whose `X_{≤b}` is neither empty nor
    /// acyclic.
    pub witness: Option<Monomial>,
    pub lattice_points: usize,
}

/// Distinct lcms of labels over nonempty sets of present vertices, plus 1.
pub fn label_lattice(l: &LabeledComplex) -> Result<BTreeSet<Monomial>> {
    let mut lattice: BTreeSet<Monomial> = BTreeSet::new();
    for v in bits(l.complex.vertex_support()) {
        let g = &l.labels[v];
        let joined: Vec<Monomial> = lattice.iter().map(|m| m.lcm(g)).collect();
        lattice.insert(g.clone());
        lattice.extend(joined);
        if lattice.len() > LATTICE_POINT_CAP {
            return Err(Error::TooLarge {
                what: "label lcm lattice",
                size: lattice.len(),
                cap: LATTICE_POINT_CAP,
            });
        }
    }
    lattice.insert(Monomial::one(l.ring.nvars()));
    Ok(lattice)
}

/// `X_{≤b}` is acyclic or empty for every `b`. Checking the label lattice
/// suffices: `X_{≤b}` equals `X_{≤b'}` for the largest lattice point `b'`
/// dividing `b`.
pub fn is_cellular_resolution(l: &LabeledComplex, field: Field) -> Result<CellularReport> {
    let lattice: Vec<Monomial> = label_lattice(l)?.into_iter().collect();
    let witness = lattice.par_iter().find_map_first(|b| {
        let sub = sub_below(l, b);
        (!sub.is_empty() && !sub.is_acyclic(field)).then(|| b.clone())
    });
    Ok(CellularReport {
        resolution: witness.is_none(),
        witness,
        lattice_points: lattice.len(),
    })
}

/// One basis element per cell in degree of its label, plus `F_0 = S` for
/// the empty cell; `∂F = Σ sign(G,F) (m_F / m_G) G`.
pub fn cellular_free_complex(l: &LabeledComplex, field: Field) -> Result<FreeComplex> {
    let r = l.ring.ncolors();
    let cells = &l.complex.cells;
    let top = l.complex.dim().map_or(0, |d| d + 1);
    let mut terms: Vec<Vec<(String, Multidegree)>> =
        vec![vec![("()".into(), Multidegree::zero(r))]];
    let mut pos = vec![0usize; cells.len()];
    let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    for (k, c) in cells.iter().enumerate() {
        pos[k] = by_dim[c.dim + 1].len();
        by_dim[c.dim + 1].push(k);
    }
    let labels: Vec<Monomial> = (0..cells.len()).map(|k| l.face_label(k)).collect();
    for cells_p in by_dim.iter().skip(1) {
        terms.push(
            cells_p
                .iter()
                .map(|k| (cells[*k].id.clone(), labels[*k].color_vector(&l.ring)))
                .collect(),
        );
    }
    let mut ds = Vec::new();
    for s in 1..=top {
        let mut entries = Vec::new();
        for (col, k) in by_dim[s].iter().enumerate() {
            if s == 1 {
                entries.push((0, col, field.one(), labels[*k].clone()));
                continue;
            }
            for (j, sg) in &l.complex.boundary[*k] {
                let quotient = labels[*k].div(&labels[*j]).expect("facet labels divide");
                entries.push((pos[*j], col, field.from_i64(i64::from(*sg)), quotient));
            }
        }
        ds.push(MonomialMatrix::new(
            terms[s - 1].len(),
            terms[s].len(),
            entries,
        )?);
    }
    FreeComplex::new(l.ring.clone(), field, terms, ds)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HellyReport {
    /// `d + 1`.
    pub bound: usize,
    /// Largest codimension of a minimal prime of the label ideal.
    pub max_prime_codim: usize,
    /// Smallest such codimension, i.e. `codim I`; 0 for the unit ideal.
    pub codim: usize,
    pub projective_dimension: usize,
    pub complex_dim: Option<usize>,
    pub holds: bool,
    /// `pd(S/I) ≤ dim X + 1`.
    pub length_consistent: bool,
    /// `codim I ≤ pd(S/I)`.
    pub codim_le_pd: bool,
}

/// For a labeled complex that is a cellular resolution, compares the minimal
/// prime codimensions of the label ideal with `d + 1`.
pub fn helly_bound_check(l: &LabeledComplex, d: usize, field: Field) -> Result<HellyReport> {
    let report = is_cellular_resolution(l, field)?;
    if let Some(b) = report.witness {
        return Err(Error::Invalid(format!(
            "not a cellular resolution: X_<={} is not acyclic",
            l.ring.fmt_monomial(&b)
        )));
    }
    let ideal = l.label_ideal();
    let primes = minimal_primes(&ideal)?;
    let sizes: Vec<usize> = primes.iter().map(|p| p.count_ones() as usize).collect();
    let max_prime_codim = sizes.iter().copied().max().unwrap_or(0);
    let codim = sizes.iter().copied().min().unwrap_or(0);
    let t = betti_table_koszul(&MultigradedIdeal::from_monomial(&ideal, field), None)?;
    let pd = projective_dimension(&t)?;
    let complex_dim = l.complex.dim();
    Ok(HellyReport {
        bound: d + 1,
        max_prime_codim,
        codim,
        projective_dimension: pd,
        complex_dim,
        holds: max_prime_codim <= d + 1,
        length_consistent: pd <= complex_dim.map_or(0, |x| x + 1),
        codim_le_pd: codim <= pd,
    })
}
