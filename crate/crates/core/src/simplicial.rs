//! Finite simplicial complexes on labeled vertex sets.
//!
//! Faces are bitmasks over the declared vertex list, so a complex supports at
//! most 64 vertices. Two degenerate complexes are kept apart: the *void*
//! complex has no faces at all, while the *irrelevant* complex `{∅}` has the
//! empty face only and therefore `H̃_{-1} = k`.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactla::{Field, SparseMatrix};

/// Faces are sets of vertex indices encoded as bits.
pub type Face = u64;

/// Largest ground set accepted by [`is_leray`], which enumerates all subsets.
pub const LERAY_VERTEX_CAP: usize = 24;

/// Largest ground set representable at all.
pub const MAX_VERTICES: usize = 64;

/// Reduced homology dimensions indexed by degree, starting at `-1`.
/// Nonzero reduced Betti numbers by degree; absent degrees vanish.
pub type HomologyDims = BTreeMap<i32, usize>;

pub(crate) fn bits(mask: Face) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

pub(crate) fn full_mask(n: usize) -> Face {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Keeps only inclusion-maximal sets, sorted and deduplicated.
pub(crate) fn maximal_sets(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut out: Vec<Face> = Vec::new();
    for s in sets {
        if !out.iter().any(|t| s & !t == 0) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

pub(crate) fn minimal_sets(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_by_key(|s| s.count_ones());
    sets.dedup();
    let mut out: Vec<Face> = Vec::new();
    for s in sets {
        if !out.iter().any(|t| t & !s == 0) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds a complex from facet bitmasks over `vertices`. Non-maximal
    /// entries are discarded; an empty facet list gives the void complex.
    pub fn from_masks(vertices: Vec<String>, facets: Vec<Face>) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex set",
                size: vertices.len(),
                cap: MAX_VERTICES,
            });
        }
        let distinct: HashSet<&String> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::InvalidComplex("duplicate vertex label".into()));
        }
        let all = full_mask(vertices.len());
        if let Some(f) = facets.iter().find(|f| **f & !all != 0) {
            return Err(Error::InvalidComplex(format!(
                "facet {f:#b} uses vertices outside the ground set"
            )));
        }
        Ok(SimplicialComplex {
            vertices,
            facets: maximal_sets(facets),
        })
    }

    /// Builds a complex from facets given by vertex labels.
    pub fn new<S: AsRef<str>>(vertices: &[S], facets: &[Vec<S>]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let index: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let mut m = 0u64;
            for v in f {
                let i = index.get(v.as_ref()).ok_or_else(|| {
                    Error::InvalidComplex(format!("unknown vertex {:?}", v.as_ref()))
                })?;
                m |= 1 << i;
            }
            masks.push(m);
        }
        Self::from_masks(vertices.clone(), masks)
    }

    pub fn void(vertices: Vec<String>) -> Self {
        SimplicialComplex {
            vertices,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(vertices: Vec<String>) -> Self {
        SimplicialComplex {
            vertices,
            facets: vec![0],
        }
    }

    /// The full simplex on all declared vertices.
    pub fn simplex(vertices: Vec<String>) -> Self {
        let m = full_mask(vertices.len());
        SimplicialComplex {
            vertices,
            facets: vec![m],
        }
    }

    /// Vertices labeled `1..=n`.
    pub fn numbered_vertices(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_labels(&self) -> Vec<Vec<&str>> {
        self.facets.iter().map(|f| self.labels_of(*f)).collect()
    }

    pub fn labels_of(&self, face: Face) -> Vec<&str> {
        bits(face).map(|i| self.vertices[i].as_str()).collect()
    }

    pub fn ground_mask(&self) -> Face {
        full_mask(self.vertices.len())
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        labels.iter().try_fold(0u64, |m, l| {
            self.vertex_index(l.as_ref())
                .map(|i| m | 1 << i)
                .ok_or_else(|| Error::InvalidComplex(format!("unknown vertex {:?}", l.as_ref())))
        })
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [0]
    }

    /// Dimension, `-1` for the irrelevant complex and `None` for void.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.count_ones() as i32 - 1).max()
    }

    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face & !f == 0)
    }

    /// Vertices that are faces, as a mask.
    pub fn vertex_support(&self) -> Face {
        self.facets.iter().fold(0, |m, f| m | f)
    }

    /// All faces, sorted by dimension and then by mask.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            let mut s = *f;
            loop {
                seen.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let mut v: Vec<Face> = seen.into_iter().collect();
        v.sort_by_key(|f| (f.count_ones(), *f));
        v
    }

    /// Inclusion-minimal subsets of the ground set that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![0];
        }
        let n = self.vertices.len();
        let mut out = HashSet::new();
        for g in self.faces() {
            for v in 0..n {
                let f = g | 1 << v;
                if f == g || self.contains_face(f) {
                    continue;
                }
                if bits(f).all(|u| self.contains_face(f & !(1 << u))) {
                    out.insert(f);
                }
            }
        }
        let mut v: Vec<Face> = out.into_iter().collect();
        v.sort_by_key(|f| (f.count_ones(), *f));
        v
    }

    /// Faces contained in `r`, keeping the original vertex indexing.
    pub(crate) fn restrict_mask(&self, r: Face) -> SimplicialComplex {
        let facets = if self.is_void() {
            Vec::new()
        } else {
            maximal_sets(self.facets.iter().map(|f| f & r).collect())
        };
        SimplicialComplex {
            vertices: self.vertices.clone(),
            facets,
        }
    }

    /// Same complex viewed on a larger or reordered ground set.
    pub fn relabel_onto(&self, vertices: Vec<String>) -> Result<SimplicialComplex> {
        let pos: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut map = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            map.push(*pos.get(v.as_str()).ok_or_else(|| {
                Error::InvalidComplex(format!("vertex {v:?} missing from new ground set"))
            })?);
        }
        let facets = self
            .facets
            .iter()
            .map(|f| bits(*f).fold(0u64, |m, i| m | 1 << map[i]))
            .collect();
        SimplicialComplex::from_masks(vertices, facets)
    }
}

/// Reduced simplicial chain complex: `boundaries[k]` maps faces of dimension
/// `k` to faces of dimension `k - 1`, for `k = 0..=dim`.
fn boundary_matrices(faces: &[Face], field: Field) -> (Vec<usize>, Vec<SparseMatrix>) {
    let top = faces.iter().map(|f| f.count_ones()).max().unwrap_or(0) as usize;
    // by_size[s] lists faces with s vertices.
    let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.count_ones() as usize].push(*f);
    }
    let index: Vec<HashMap<Face, usize>> = by_size
        .iter()
        .map(|v| v.iter().enumerate().map(|(i, f)| (*f, i)).collect())
        .collect();
    let sizes: Vec<usize> = by_size.iter().map(Vec::len).collect();
    let plus = field.one();
    let minus = field.from_i64(-1);
    let mut mats = Vec::with_capacity(top);
    for s in 1..=top {
        let entries = by_size[s].iter().enumerate().flat_map(|(col, f)| {
            let idx = &index[s - 1];
            let (plus, minus) = (&plus, &minus);
            bits(*f).enumerate().map(move |(j, v)| {
                let row = idx[&(f & !(1 << v))];
                (
                    row,
                    col,
                    if j % 2 == 0 {
                        plus.clone()
                    } else {
                        minus.clone()
                    },
                )
            })
        });
        mats.push(
            SparseMatrix::new(sizes[s - 1], sizes[s], field, entries)
                .expect("boundary entries are distinct"),
        );
    }
    (sizes, mats)
}

/// Reduced homology of the complex spanned by a face list (closed under
/// subsets and containing the empty face).
pub(crate) fn homology_of_faces(faces: &[Face], field: Field) -> HomologyDims {
    let (sizes, mats) = boundary_matrices(faces, field);
    let ranks: Vec<usize> = mats.iter().map(SparseMatrix::rank).collect();
    let mut out = BTreeMap::new();
    for (s, &n) in sizes.iter().enumerate() {
        let out_rank = if s == 0 { 0 } else { ranks[s - 1] };
        let in_rank = ranks.get(s).copied().unwrap_or(0);
        let h = n - out_rank - in_rank;
        if h > 0 {
            out.insert(s as i32 - 1, h);
        }
    }
    out
}

pub fn reduced_homology_dims(c: &SimplicialComplex, field: Field) -> Result<HomologyDims> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(homology_of_faces(&c.faces(), field))
}

/// True iff every reduced homology group vanishes, `H̃_{-1}` included.
/// Neither the void nor the irrelevant complex is acyclic.
pub fn is_acyclic(c: &SimplicialComplex, field: Field) -> bool {
    match reduced_homology_dims(c, field) {
        Ok(h) => h.values().all(|d| *d == 0),
        Err(_) => false,
    }
}

/// The induced subcomplex `Δ_R` on the vertex subset `r`, with ground set `r`.
pub fn restriction<S: AsRef<str>>(c: &SimplicialComplex, r: &[S]) -> Result<SimplicialComplex> {
    let mask = c.mask_of(r)?;
    let restricted = c.restrict_mask(mask);
    let kept: Vec<String> = bits(mask).map(|i| c.vertices[i].clone()).collect();
    restricted.compress_to(mask, kept)
}

impl SimplicialComplex {
    fn compress_to(&self, mask: Face, vertices: Vec<String>) -> Result<SimplicialComplex> {
        let order: Vec<usize> = bits(mask).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| {
                order
                    .iter()
                    .enumerate()
                    .filter(|(_, old)| f >> *old & 1 == 1)
                    .fold(0u64, |m, (new, _)| m | 1 << new)
            })
            .collect();
        SimplicialComplex::from_masks(vertices, facets)
    }
}

/// Outcome of a Leray test. `witness` holds the first failing restriction
/// (by size, then by mask) and the offending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LerayReport {
    pub leray: bool,
    pub witness: Option<(Vec<String>, i32)>,
}

/// Largest degree `i` with `H̃_i(Δ_R) ≠ 0` over all restrictions `R`, or
/// `None` when all homology above degree -1 vanishes everywhere. Returns the
/// restriction attaining it as well.
pub fn leray_number_witness(c: &SimplicialComplex, field: Field) -> Result<Option<(Face, i32)>> {
    check_leray_input(c)?;
    let faces = c.faces();
    let subsets = ordered_subsets(c.vertex_count());
    let per_subset: Vec<Option<(Face, i32)>> = subsets
        .par_iter()
        .map(|&r| {
            let sub: Vec<Face> = faces.iter().copied().filter(|f| f & !r == 0).collect();
            homology_of_faces(&sub, field)
                .into_iter()
                .filter(|(i, d)| *i >= 0 && *d > 0)
                .map(|(i, _)| (r, i))
                .max_by_key(|(_, i)| *i)
        })
        .collect();
    Ok(per_subset.into_iter().flatten().fold(
        None,
        |best: Option<(Face, i32)>, (r, i)| match best {
            Some((_, j)) if j >= i => best,
            _ => Some((r, i)),
        },
    ))
}

fn check_leray_input(c: &SimplicialComplex) -> Result<()> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    if c.vertex_count() > LERAY_VERTEX_CAP {
        return Err(Error::TooLarge {
            what: "ground set for Leray enumeration",
            size: c.vertex_count(),
            cap: LERAY_VERTEX_CAP,
        });
    }
    Ok(())
}

fn ordered_subsets(n: usize) -> Vec<Face> {
    let mut v: Vec<Face> = (0..=full_mask(n)).collect();
    v.sort_by_key(|m| (m.count_ones(), *m));
    v
}

/// Tests `H̃_i(Δ_R) = 0` for every `R ⊆ B` and every `i ≥ d`.
pub fn is_leray(c: &SimplicialComplex, d: usize, field: Field) -> Result<LerayReport> {
    check_leray_input(c)?;
    let faces = c.faces();
    let d = d as i32;
    let witness = ordered_subsets(c.vertex_count())
        .par_iter()
        .find_map_first(|&r| {
            let sub: Vec<Face> = faces.iter().copied().filter(|f| f & !r == 0).collect();
            homology_of_faces(&sub, field)
                .into_iter()
                .find(|(i, dim)| *i >= d && *dim > 0)
                .map(|(i, _)| (r, i))
        });
    Ok(match witness {
        None => LerayReport {
            leray: true,
            witness: None,
        },
        Some((r, i)) => LerayReport {
            leray: false,
            witness: Some((c.labels_of(r).into_iter().map(String::from).collect(), i)),
        },
    })
}

/// `{F ⊆ B : B \ F ∉ Δ}`, always relative to the declared ground set.
pub fn alexander_dual(c: &SimplicialComplex) -> SimplicialComplex {
    let all = c.ground_mask();
    let facets = c.minimal_nonfaces().into_iter().map(|f| all & !f).collect();
    SimplicialComplex::from_masks(c.vertices.clone(), facets).expect("same ground set")
}

/// Operations a family of induced subcomplexes needs from its ambient space.
pub trait Ambient {
    fn vertex_labels(&self) -> Vec<String>;

    /// Vertices that are actual 0-dimensional faces.
    fn vertex_support(&self) -> Face;

    /// Reduced homology of the subcomplex induced on `mask`.
    fn induced_homology(&self, mask: Face, field: Field) -> Result<HomologyDims>;

    /// Reduced homology of the union of the subcomplexes induced on `masks`.
    fn union_homology(&self, masks: &[Face], field: Field) -> Result<HomologyDims>;

    fn ambient_dim(&self) -> Option<i32>;

    fn ambient_homology(&self, field: Field) -> Result<HomologyDims>;
}

impl Ambient for SimplicialComplex {
    fn vertex_labels(&self) -> Vec<String> {
        self.vertices.clone()
    }

    fn vertex_support(&self) -> Face {
        SimplicialComplex::vertex_support(self)
    }

    fn induced_homology(&self, mask: Face, field: Field) -> Result<HomologyDims> {
        reduced_homology_dims(&self.restrict_mask(mask), field)
    }

    fn union_homology(&self, masks: &[Face], field: Field) -> Result<HomologyDims> {
        if masks.is_empty() || self.is_void() {
            return Err(Error::VoidComplex);
        }
        let facets = self
            .facets
            .iter()
            .flat_map(|f| masks.iter().map(move |m| f & m))
            .collect();
        let union = SimplicialComplex {
            vertices: self.vertices.clone(),
            facets: maximal_sets(facets),
        };
        reduced_homology_dims(&union, field)
    }

    fn ambient_dim(&self) -> Option<i32> {
        self.dim()
    }

    fn ambient_homology(&self, field: Field) -> Result<HomologyDims> {
        reduced_homology_dims(self, field)
    }
}

/// One member `C_i` of a family: the subcomplex induced on `vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyMember {
    pub label: String,
    pub vertices: Face,
    /// Color class `1..=r`, when the family is partitioned.
    pub color: Option<usize>,
}

/// A family `{C_i}` of induced subcomplexes of a common ambient complex.
/// Index labels are distinct even when two members induce the same subcomplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubcomplexFamily<A = SimplicialComplex> {
    ambient: A,
    members: Vec<FamilyMember>,
}

impl<A: Ambient> SubcomplexFamily<A> {
    pub fn new(ambient: A, members: Vec<FamilyMember>) -> Result<Self> {
        let ground = full_mask(ambient.vertex_labels().len());
        let mut seen = HashSet::new();
        for m in &members {
            if !seen.insert(m.label.as_str()) {
                return Err(Error::InvalidComplex(format!(
                    "duplicate family index {:?}",
                    m.label
                )));
            }
            if m.vertices & !ground != 0 {
                return Err(Error::InvalidComplex(format!(
                    "member {:?} uses vertices outside the ambient complex",
                    m.label
                )));
            }
            if m.color == Some(0) {
                return Err(Error::InvalidComplex("colors start at 1".into()));
            }
        }
        if members.len() > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "family",
                size: members.len(),
                cap: MAX_VERTICES,
            });
        }
        Ok(SubcomplexFamily { ambient, members })
    }

    pub fn ambient(&self) -> &A {
        &self.ambient
    }

    pub fn members(&self) -> &[FamilyMember] {
        &self.members
    }

    pub fn index_labels(&self) -> Vec<String> {
        self.members.iter().map(|m| m.label.clone()).collect()
    }

    /// Vertex set of `∩_{i ∈ A} C_i` for an index subset `a`.
    pub fn intersection(&self, a: Face) -> Face {
        bits(a).fold(full_mask(self.ambient.vertex_labels().len()), |m, i| {
            m & self.members[i].vertices
        })
    }

    /// Whether `∩_{i ∈ A} C_i` contains a vertex of the ambient complex.
    pub fn intersection_nonempty(&self, a: Face) -> bool {
        self.intersection(a) & self.ambient.vertex_support() != 0
    }

    /// Subfamily on the index subset `r`, in the original order.
    pub fn subfamily(&self, r: Face) -> SubcomplexFamily<A>
    where
        A: Clone,
    {
        SubcomplexFamily {
            ambient: self.ambient.clone(),
            members: bits(r).map(|i| self.members[i].clone()).collect(),
        }
    }

    /// Checks that every nonempty intersection `∩_{i ∈ A} C_i`, `A ⊆ B`
    /// (including `A = ∅`, the ambient itself), is acyclic. Returns the first
    /// index set violating this.
    pub fn intersections_acyclic_or_empty(&self, field: Field) -> Result<Option<Face>> {
        self.first_non_acyclic(field, true)
    }

    /// As [`Self::intersections_acyclic_or_empty`] over nonempty `A` only,
    /// which is the hypothesis of the nerve lemma.
    pub fn proper_intersections_acyclic(&self, field: Field) -> Result<Option<Face>> {
        self.first_non_acyclic(field, false)
    }

    fn first_non_acyclic(&self, field: Field, with_ambient: bool) -> Result<Option<Face>> {
        let n = self.members.len();
        if n > LERAY_VERTEX_CAP {
            return Err(Error::TooLarge {
                what: "family for intersection enumeration",
                size: n,
                cap: LERAY_VERTEX_CAP,
            });
        }
        for a in ordered_subsets(n) {
            if (a == 0 && !with_ambient) || !self.intersection_nonempty(a) {
                continue;
            }
            let h = self.ambient.induced_homology(self.intersection(a), field)?;
            if h.values().any(|d| *d > 0) {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }
}

/// Nerve of a family: `A` is a face iff some ambient vertex lies in every
/// `V_i`, `i ∈ A`.
pub fn nerve<A: Ambient>(f: &SubcomplexFamily<A>) -> SimplicialComplex {
    let support = f.ambient.vertex_support();
    let facets: Vec<Face> = bits(support)
        .map(|v| {
            f.members
                .iter()
                .enumerate()
                .filter(|(_, m)| m.vertices >> v & 1 == 1)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    SimplicialComplex::from_masks(f.index_labels(), facets).expect("indices are distinct")
}

/// Reduced homology of `∪_i C_i`.
pub fn union_homology_dims<A: Ambient>(
    f: &SubcomplexFamily<A>,
    field: Field,
) -> Result<HomologyDims> {
    let masks: Vec<Face> = f.members.iter().map(|m| m.vertices).collect();
    f.ambient.union_homology(&masks, field)
}
