//! Multigraded Betti numbers of `S/I`, computed from the Koszul complex on
//! the variables tensored with `S/I`, one multidegree at a time.
//!
//! Also here: the squarefree oracle through reduced homology of restrictions,
//! invariants read off a table, syzygy dimensions, explicit free complexes
//! and the Eliahou–Kervaire resolution of `𝔪^{d+1}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Field, Scalar, SparseMatrix};
use crate::monomial::{
    codim, complex_from_squarefree_ideal, lcm_lattice_degrees, monomials_of_degree, ColoredRing,
    Monomial, MonomialIdeal, Multidegree,
};
use crate::multigraded::{
    monomials_of_multidegree, ring_piece_dim, GradedPiece, MultigradedIdeal, PieceCache,
};
use crate::simplicial::{bits, full_mask, homology_of_faces, Face};

pub use crate::monomial::binomial;

/// Koszul strands use subsets of the variables as bitmasks.
pub const KOSZUL_VARIABLE_CAP: usize = 20;
/// Monomial ideals with at most this many generators scan only lcm-lattice
/// degrees; larger ones scan the lcm box.
pub const LATTICE_GENERATOR_CAP: usize = 16;

/// Which multidegrees a table covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScanDomain {
    /// Color vectors of the lcm lattice of a monomial ideal. Complete.
    Lattice,
    /// All degrees below the color vector of the lcm of all generators, with
    /// total at most the generator degree sum. Complete.
    LcmBox { bound: Multidegree, total: u32 },
    /// Squarefree degrees of a squarefree monomial ideal. Complete.
    Squarefree,
    /// Every degree of total at most `cap`. Complete only if nothing lives
    /// near the cap.
    Total { cap: u32 },
    /// Read off an explicit complex.
    Explicit,
}

/// `β_{i,a}(S/I)` for the scanned multidegrees; only nonzero entries stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    ncolors: usize,
    entries: BTreeMap<(usize, Multidegree), usize>,
    scan: ScanDomain,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    i: usize,
    degree: &'a [u32],
    beta: usize,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    schema: u32,
    scan: &'a ScanDomain,
    rows: Vec<JsonRow<'a>>,
}

impl BettiTable {
    pub fn new(ncolors: usize, scan: ScanDomain) -> Self {
        BettiTable {
            ncolors,
            entries: BTreeMap::new(),
            scan,
        }
    }

    pub fn ncolors(&self) -> usize {
        self.ncolors
    }

    pub fn scan(&self) -> &ScanDomain {
        &self.scan
    }

    pub fn get(&self, i: usize, a: &Multidegree) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// Adds to an entry; zero additions are ignored.
    pub fn add(&mut self, i: usize, a: Multidegree, beta: usize) {
        assert_eq!(a.len(), self.ncolors, "multidegree length");
        if beta > 0 {
            *self.entries.entry((i, a)).or_insert(0) += beta;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Multidegree, usize)> {
        self.entries.iter().map(|((i, a), b)| (*i, a, *b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ_a β_{i,a}`.
    pub fn total_betti(&self, i: usize) -> usize {
        self.entries()
            .filter(|(p, _, _)| *p == i)
            .map(|(_, _, b)| b)
            .sum()
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Errors if the scan stopped at a cap and something nonzero sits within
    /// distance 1 of it.
    pub fn ensure_complete(&self) -> Result<()> {
        if let ScanDomain::Total { cap } = self.scan {
            let edge = self
                .entries()
                .filter(|(i, a, _)| *i >= 1 && a.total() + 1 >= cap)
                .map(|(_, a, _)| a.total())
                .max();
            if let Some(degree) = edge {
                return Err(Error::InconclusiveAtCap { cap, degree });
            }
        }
        Ok(())
    }

    /// Sums entries over color vectors of equal total degree.
    pub fn coarse(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for (i, a, b) in self.entries() {
            *out.entry((i, a.total())).or_insert(0) += b;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows = self
            .entries()
            .map(|(i, a, beta)| JsonRow {
                i,
                degree: &a.0,
                beta,
            })
            .collect();
        serde_json::to_value(JsonTable {
            schema: 1,
            scan: &self.scan,
            rows,
        })
        .expect("table serializes")
    }

    /// Coarse diagram: column `i`, row `|a| - i`.
    pub fn diagram(&self) -> String {
        let coarse = self.coarse();
        let Some(top) = self.max_index() else {
            return "(zero module)\n".into();
        };
        let rows: BTreeSet<u32> = coarse.keys().map(|(i, t)| t - *i as u32).collect();
        let width = coarse
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(top.to_string().len());
        let label = rows
            .iter()
            .map(|r| r.to_string().len())
            .max()
            .unwrap_or(1)
            .max(5);
        let mut s = String::new();
        let _ = write!(s, "{:>label$} ", "");
        for i in 0..=top {
            let _ = write!(s, " {i:>width$}");
        }
        s.push('\n');
        let _ = write!(s, "{:>label$}:", "total");
        for i in 0..=top {
            let _ = write!(s, " {:>width$}", self.total_betti(i));
        }
        s.push('\n');
        for r in rows {
            let _ = write!(s, "{r:>label$}:");
            for i in 0..=top {
                match coarse.get(&(i, r + i as u32)) {
                    Some(b) => {
                        let _ = write!(s, " {b:>width$}");
                    }
                    None => {
                        let _ = write!(s, " {:>width$}", ".");
                    }
                }
            }
            s.push('\n');
        }
        s
    }
}

/// Koszul strands of one ideal, memoized per multidegree.
#[derive(Debug)]
pub struct Koszul<'a> {
    pieces: PieceCache<'a>,
    strands: Mutex<HashMap<Multidegree, Arc<Vec<usize>>>>,
}

impl<'a> Koszul<'a> {
    pub fn new(ideal: &'a MultigradedIdeal) -> Result<Self> {
        let n = ideal.ring().nvars();
        if n > KOSZUL_VARIABLE_CAP {
            return Err(Error::TooLarge {
                what: "variable count for Koszul strands",
                size: n,
                cap: KOSZUL_VARIABLE_CAP,
            });
        }
        Ok(Koszul {
            pieces: PieceCache::new(ideal),
            strands: Mutex::new(HashMap::new()),
        })
    }

    pub fn ideal(&self) -> &MultigradedIdeal {
        self.pieces.ideal()
    }

    pub fn piece(&self, a: &Multidegree) -> Arc<GradedPiece> {
        self.pieces.get(a)
    }

    /// `[β_{0,a}, …, β_{n,a}]`.
    pub fn strand(&self, a: &Multidegree) -> Arc<Vec<usize>> {
        if let Some(s) = self.strands.lock().expect("strand lock").get(a) {
            return Arc::clone(s);
        }
        let s = Arc::new(self.compute_strand(a));
        self.strands
            .lock()
            .expect("strand lock")
            .entry(a.clone())
            .or_insert(s)
            .clone()
    }

    pub fn betti(&self, i: usize, a: &Multidegree) -> usize {
        self.strand(a).get(i).copied().unwrap_or(0)
    }

    fn compute_strand(&self, a: &Multidegree) -> Vec<usize> {
        let ideal = self.pieces.ideal();
        let ring = ideal.ring();
        let field = ideal.field();
        let n = ring.nvars();
        // levels[s]: subsets F with |F| = s and deg F ≤ a, with their piece
        // (S/I)_{a - deg F} and offset into K_s(a).
        let mut levels: Vec<Vec<(Face, Arc<GradedPiece>)>> = vec![Vec::new(); n + 1];
        let mut dims = vec![0usize; n + 1];
        let mut by_mask: HashMap<Face, (Arc<GradedPiece>, usize)> = HashMap::new();
        for mask in 0..=full_mask(n) {
            let mut deg = Multidegree::zero(ring.ncolors());
            for v in bits(mask) {
                deg.0[ring.color_of(v) - 1] += 1;
            }
            let Some(rest) = a.checked_sub(&deg) else {
                continue;
            };
            let piece = self.pieces.get(&rest);
            if piece.quotient_dim() == 0 {
                continue;
            }
            let s = mask.count_ones() as usize;
            by_mask.insert(mask, (Arc::clone(&piece), dims[s]));
            dims[s] += piece.quotient_dim();
            levels[s].push((mask, piece));
        }
        let plus = field.one();
        let minus = field.from_i64(-1);
        let mut ranks = vec![0usize; n + 2];
        for s in 1..=n {
            if dims[s] == 0 || dims[s - 1] == 0 {
                continue;
            }
            let mut entries = Vec::new();
            for (mask, piece) in &levels[s] {
                let col0 = by_mask[mask].1;
                for (k, m) in piece.standard_monomials().into_iter().enumerate() {
                    for (pos, j) in bits(*mask).enumerate() {
                        let Some((target, row0)) = by_mask.get(&(mask & !(1 << j))) else {
                            continue;
                        };
                        let sign = if pos % 2 == 0 { &plus } else { &minus };
                        for (row, v) in target.quotient_coords(&m.mul_var(j), sign) {
                            entries.push((row0 + row, col0 + k, v));
                        }
                    }
                }
            }
            ranks[s] = SparseMatrix::new(dims[s - 1], dims[s], field, entries)
                .expect("Koszul entries are distinct")
                .rank();
        }
        (0..=n).map(|s| dims[s] - ranks[s] - ranks[s + 1]).collect()
    }

    /// `dim (Ω^l)_a` through the alternating sum over the minimal resolution.
    /// Only Betti numbers in degrees `b ≤ a` enter, so no cap is involved.
    pub fn syzygy_piece_dim(&self, l: usize, a: &Multidegree) -> Result<usize> {
        if l == 0 {
            return Err(Error::Invalid("syzygy index starts at 1".into()));
        }
        let ideal = self.pieces.ideal();
        let ring = ideal.ring();
        let below = Multidegree::all_below(a, a.total());
        let mut free = vec![0i64; l];
        for b in &below {
            let strand = self.strand(b);
            let ambient = ring_piece_dim(ring, &a.checked_sub(b).expect("b ≤ a")) as i64;
            for (p, f) in free.iter_mut().enumerate() {
                *f += strand.get(p).copied().unwrap_or(0) as i64 * ambient;
            }
        }
        Ok(alternating_syzygy(
            &free,
            self.pieces.get(a).quotient_dim(),
            l,
        ))
    }
}

fn alternating_syzygy(free: &[i64], quotient: usize, l: usize) -> usize {
    let mut total: i64 = 0;
    for (p, f) in free.iter().enumerate().take(l) {
        let sign = if (l - 1 - p) % 2 == 0 { 1 } else { -1 };
        total += sign * f;
    }
    total += if l % 2 == 0 { 1 } else { -1 } * quotient as i64;
    usize::try_from(total).expect("syzygy dimension is nonnegative")
}

/// Sum of the `n` largest generator degrees plus 2, `n` the number of
/// variables. For monomial ideals every Betti degree is the lcm of at most
/// `n` generators, so this clears the cap-edge check; for other ideals it is
/// only a default.
pub fn default_degree_cap(i: &MultigradedIdeal) -> u32 {
    let mut degs: Vec<u32> = i.generators().map(|(_, a)| a.total()).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    degs.iter().take(i.ring().nvars()).sum::<u32>() + 2
}

fn monomial_scan(mono: &MonomialIdeal) -> (Vec<Multidegree>, ScanDomain) {
    let ring = mono.ring();
    let r = ring.ncolors();
    if mono.is_unit() {
        return (Vec::new(), ScanDomain::Lattice);
    }
    if mono.generators().len() <= LATTICE_GENERATOR_CAP {
        let mut set: BTreeSet<Multidegree> = lcm_lattice_degrees(mono)
            .iter()
            .map(|m| m.color_vector(ring))
            .collect();
        set.insert(Multidegree::zero(r));
        return (set.into_iter().collect(), ScanDomain::Lattice);
    }
    let total: u32 = mono.generators().iter().map(Monomial::degree).sum();
    let bound = mono.lcm_degree();
    (
        Multidegree::all_below(&bound, total),
        ScanDomain::LcmBox { bound, total },
    )
}

/// Minimal Betti numbers of `S/I` over all multidegrees in the scan domain.
///
/// Monomial ideals scan their lcm lattice (or lcm box) and are complete. Other
/// ideals scan every degree of total at most `cap`, defaulting to
/// [`default_degree_cap`].
pub fn betti_table_koszul(i: &MultigradedIdeal, cap: Option<u32>) -> Result<BettiTable> {
    let r = i.ring().ncolors();
    let (mut degrees, mut scan) = match (i.as_monomial_ideal(), cap) {
        (Some(mono), _) => monomial_scan(&mono),
        (None, c) => {
            let cap = c.unwrap_or_else(|| default_degree_cap(i));
            (all_up_to(r, cap), ScanDomain::Total { cap })
        }
    };
    if let (Some(c), false) = (cap, matches!(scan, ScanDomain::Total { .. })) {
        if degrees.iter().any(|a| a.total() > c) {
            degrees.retain(|a| a.total() <= c);
            scan = ScanDomain::Total { cap: c };
        }
    }
    let k = Koszul::new(i)?;
    let strands: Vec<(Multidegree, Arc<Vec<usize>>)> = degrees
        .into_par_iter()
        .map(|a| {
            let s = k.strand(&a);
            (a, s)
        })
        .collect();
    let mut t = BettiTable::new(r, scan);
    for (a, s) in strands {
        for (p, b) in s.iter().enumerate() {
            t.add(p, a.clone(), *b);
        }
    }
    Ok(t)
}

fn all_up_to(r: usize, cap: u32) -> Vec<Multidegree> {
    (0..=cap)
        .flat_map(|t| Multidegree::all_of_total(r, t))
        .collect()
}

/// Squarefree Betti numbers from `β_{i,σ}(S/I_Δ) = dim H̃_{|σ|-i-1}(Δ_σ)`,
/// coarsened to color vectors.
pub fn betti_squarefree_hochster(i: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    if !i.is_squarefree() {
        return Err(Error::NotSquarefree(i.to_string()));
    }
    let ring = i.ring();
    let n = ring.nvars();
    if n > KOSZUL_VARIABLE_CAP {
        return Err(Error::TooLarge {
            what: "variable count for squarefree Betti numbers",
            size: n,
            cap: KOSZUL_VARIABLE_CAP,
        });
    }
    let mut t = BettiTable::new(ring.ncolors(), ScanDomain::Squarefree);
    let delta = complex_from_squarefree_ideal(i)?;
    if delta.is_void() {
        return Ok(t);
    }
    let faces = delta.faces();
    let found: Vec<(Face, HashMap<i32, usize>)> = (0..=full_mask(n))
        .into_par_iter()
        .map(|sigma| {
            let sub: Vec<Face> = faces.iter().copied().filter(|f| f & !sigma == 0).collect();
            let h = homology_of_faces(&sub, field);
            (sigma, h.into_iter().filter(|(_, d)| *d > 0).collect())
        })
        .collect();
    for (sigma, homology) in found {
        let size = sigma.count_ones() as i32;
        let deg = Monomial::from_mask(n, sigma).color_vector(ring);
        for (k, dim) in homology {
            let p = size - k - 1;
            if p >= 0 {
                t.add(p as usize, deg.clone(), dim);
            }
        }
    }
    Ok(t)
}

/// `reg(I) = max (|a| - p + 1)` over nonzero `β_{p,a}(S/I)` with `p ≥ 1`;
/// 0 when there is no such entry.
pub fn regularity(t: &BettiTable) -> Result<u32> {
    t.ensure_complete()?;
    Ok(t.entries()
        .filter(|(p, _, _)| *p >= 1)
        .map(|(p, a, _)| (a.total() + 1).saturating_sub(p as u32))
        .max()
        .unwrap_or(0))
}

/// Largest homological index with a nonzero entry.
pub fn projective_dimension(t: &BettiTable) -> Result<usize> {
    t.ensure_complete()?;
    Ok(t.max_index().unwrap_or(0))
}

/// `n - pd(S/I)`.
pub fn depth_via_ab(t: &BettiTable, n: usize) -> Result<usize> {
    let pd = projective_dimension(t)?;
    n.checked_sub(pd)
        .ok_or_else(|| Error::Invalid(format!("projective dimension {pd} exceeds {n} variables")))
}

/// Every nonzero `β_{p,a}` with `p ≥ 1` has `|a| = d + p`, where
/// `d_plus_1 = d + 1`.
pub fn has_linear_resolution(t: &BettiTable, d_plus_1: u32) -> bool {
    t.entries()
        .filter(|(p, _, _)| *p >= 1)
        .all(|(p, a, _)| a.total() + 1 == d_plus_1 + p as u32)
}

/// `pd(S/I) = codim I`.
pub fn is_cohen_macaulay(i: &MonomialIdeal, field: Field) -> Result<bool> {
    let c = codim(i)?;
    let t = betti_table_koszul(&MultigradedIdeal::from_monomial(i, field), None)?;
    Ok(projective_dimension(&t)? == c)
}

/// `dim (Ω^l)_a` for the minimal resolution of `S/I`; `Ω^1 = I`.
pub fn syzygy_piece_dim(i: &MultigradedIdeal, l: usize, a: &Multidegree) -> Result<usize> {
    Koszul::new(i)?.syzygy_piece_dim(l, a)
}

/// The same identity evaluated from a precomputed table, which must cover
/// every degree `b ≤ a`.
pub fn syzygy_piece_dim_from_table(
    t: &BettiTable,
    i: &MultigradedIdeal,
    l: usize,
    a: &Multidegree,
) -> Result<usize> {
    if l == 0 {
        return Err(Error::Invalid("syzygy index starts at 1".into()));
    }
    if let ScanDomain::Total { cap } = t.scan {
        if a.total() > cap {
            return Err(Error::IncompleteTable(format!(
                "degree {a} lies beyond the scanned cap {cap}"
            )));
        }
    }
    let ring = i.ring();
    let mut free = vec![0i64; l];
    for (p, b, beta) in t.entries() {
        if p < l {
            if let Some(rest) = a.checked_sub(b) {
                free[p] += beta as i64 * ring_piece_dim(ring, &rest) as i64;
            }
        }
    }
    Ok(alternating_syzygy(
        &free,
        GradedPiece::new(i, a).quotient_dim(),
        l,
    ))
}

/// A matrix whose entries are scalar multiples of monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), (Scalar, Monomial)>,
}

impl MonomialMatrix {
    pub fn new(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar, Monomial)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (r, c, s, m) in entries {
            if r >= rows || c >= cols {
                return Err(Error::InvalidFreeComplex(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            if s.is_zero() {
                continue;
            }
            if map.insert((r, c), (s, m)).is_some() {
                return Err(Error::InvalidFreeComplex(format!(
                    "duplicate entry at ({r}, {c})"
                )));
            }
        }
        Ok(MonomialMatrix {
            rows,
            cols,
            entries: map,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar, &Monomial)> {
        self.entries.iter().map(|((r, c), (s, m))| (*r, *c, s, m))
    }
}

/// `0 ← F_0 ← F_1 ← … ← F_n`, where `differentials[p]` maps `F_{p+1}` to
/// `F_p`. `F_0` must be `S` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeComplex {
    ring: ColoredRing,
    field: Field,
    terms: Vec<Vec<(String, Multidegree)>>,
    differentials: Vec<MonomialMatrix>,
}

/// Why a complex fails to resolve `S/I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    /// `∂_p ∘ ∂_{p+1} ≠ 0` on a basis element of `F_{p+1}`.
    NotAComplex,
    /// Homology in `F_p` at a positive position.
    NotExact,
    /// The image of `∂_0` differs from `I` in this degree.
    WrongImage,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionFailure {
    pub kind: FailureKind,
    pub position: usize,
    pub degree: Multidegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionCheck {
    pub degrees_checked: usize,
    pub failure: Option<ResolutionFailure>,
}

impl ResolutionCheck {
    pub fn is_resolution(&self) -> bool {
        self.failure.is_none()
    }
}

impl FreeComplex {
    pub fn new(
        ring: ColoredRing,
        field: Field,
        terms: Vec<Vec<(String, Multidegree)>>,
        differentials: Vec<MonomialMatrix>,
    ) -> Result<Self> {
        let r = ring.ncolors();
        match terms.first() {
            Some(t0) if t0.len() == 1 && t0[0].1 == Multidegree::zero(r) => {}
            _ => {
                return Err(Error::InvalidFreeComplex(
                    "F_0 must be a single generator of degree 0".into(),
                ))
            }
        }
        if differentials.len() + 1 != terms.len() {
            return Err(Error::InvalidFreeComplex(format!(
                "{} terms need {} differentials, got {}",
                terms.len(),
                terms.len() - 1,
                differentials.len()
            )));
        }
        for t in &terms {
            if t.iter().any(|(_, d)| d.len() != r) {
                return Err(Error::InvalidFreeComplex(
                    "basis degree of the wrong length".into(),
                ));
            }
        }
        for (p, d) in differentials.iter().enumerate() {
            let (tgt, src) = (&terms[p], &terms[p + 1]);
            if d.rows != tgt.len() || d.cols != src.len() {
                return Err(Error::InvalidFreeComplex(format!(
                    "differential {} is {}x{}, expected {}x{}",
                    p + 1,
                    d.rows,
                    d.cols,
                    tgt.len(),
                    src.len()
                )));
            }
            for (row, col, s, m) in d.entries() {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field, s.field()));
                }
                if m.nvars() != ring.nvars() {
                    return Err(Error::InvalidFreeComplex("entry in the wrong ring".into()));
                }
                if tgt[row].1.add(&m.color_vector(&ring)) != src[col].1 {
                    return Err(Error::InvalidFreeComplex(format!(
                        "entry ({row}, {col}) of differential {} is not homogeneous",
                        p + 1
                    )));
                }
            }
        }
        Ok(FreeComplex {
            ring,
            field,
            terms,
            differentials,
        })
    }

    pub fn ring(&self) -> &ColoredRing {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Index of the last term.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, p: usize) -> &[(String, Multidegree)] {
        &self.terms[p]
    }

    pub fn terms(&self) -> &[Vec<(String, Multidegree)>] {
        &self.terms
    }

    /// The map `F_p → F_{p-1}`, for `p ≥ 1`.
    pub fn differential(&self, p: usize) -> &MonomialMatrix {
        &self.differentials[p - 1]
    }

    pub fn into_parts(
        self,
    ) -> (
        ColoredRing,
        Field,
        Vec<Vec<(String, Multidegree)>>,
        Vec<MonomialMatrix>,
    ) {
        (self.ring, self.field, self.terms, self.differentials)
    }

    /// No entry is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.differentials
            .iter()
            .all(|d| d.entries().all(|(_, _, _, m)| !m.is_one()))
    }

    /// Graded ranks of the terms, as a table (`F_0` included).
    pub fn graded_ranks(&self) -> BettiTable {
        let mut t = BettiTable::new(self.ring.ncolors(), ScanDomain::Explicit);
        for (p, term) in self.terms.iter().enumerate() {
            for (_, d) in term {
                t.add(p, d.clone(), 1);
            }
        }
        t
    }

    /// First `(p, column)` with `∂_p ∘ ∂_{p+1} ≠ 0` on that column of `F_{p+1}`.
    pub fn d_squared_failure(&self) -> Option<(usize, usize)> {
        for p in 1..self.differentials.len() {
            let first = &self.differentials[p];
            let second = &self.differentials[p - 1];
            let mut by_col: BTreeMap<usize, BTreeMap<(usize, Monomial), Scalar>> = BTreeMap::new();
            for (mid, col, s, m) in first.entries() {
                for (row, mid2, t, n) in second.entries() {
                    if mid2 != mid {
                        continue;
                    }
                    let key = (row, m.mul(n));
                    let acc = by_col.entry(col).or_default();
                    let v = match acc.remove(&key) {
                        Some(prev) => &prev + &(s * t),
                        None => s * t,
                    };
                    if !v.is_zero() {
                        acc.insert(key, v);
                    }
                }
            }
            if let Some((col, _)) = by_col.iter().find(|(_, m)| !m.is_empty()) {
                return Some((p + 1, *col));
            }
        }
        None
    }

    /// Basis of `(F_p)_a`: pairs (basis index, monomial of the complementary
    /// degree).
    fn strip_basis(&self, p: usize, a: &Multidegree) -> Vec<(usize, Monomial)> {
        let mut out = Vec::new();
        for (k, (_, d)) in self.terms[p].iter().enumerate() {
            if let Some(rest) = a.checked_sub(d) {
                out.extend(
                    monomials_of_multidegree(&self.ring, &rest)
                        .into_iter()
                        .map(|m| (k, m)),
                );
            }
        }
        out
    }

    /// `∂_p` restricted to degree `a`, between strip bases.
    fn strip_matrix(
        &self,
        p: usize,
        src: &[(usize, Monomial)],
        tgt: &[(usize, Monomial)],
    ) -> SparseMatrix {
        let index: HashMap<&(usize, Monomial), usize> =
            tgt.iter().enumerate().map(|(k, e)| (e, k)).collect();
        let d = &self.differentials[p - 1];
        let mut by_col: HashMap<usize, Vec<(usize, &Scalar, &Monomial)>> = HashMap::new();
        for (row, col, s, m) in d.entries() {
            by_col.entry(col).or_default().push((row, s, m));
        }
        let entries = src.iter().enumerate().flat_map(|(j, (basis, u))| {
            let index = &index;
            by_col
                .get(basis)
                .into_iter()
                .flatten()
                .map(move |(row, s, m)| (index[&(*row, u.mul(m))], j, (*s).clone()))
        });
        SparseMatrix::new(
            tgt.len(),
            src.len(),
            self.field,
            entries.collect::<Vec<_>>(),
        )
        .expect("strip entries are distinct")
    }

    /// Strip complex in degree `a`: dimensions of `(F_p)_a` and ranks of
    /// `∂_p` for `p = 1..=length`, plus the image of `∂_1` inside `S_a`.
    fn strip(&self, a: &Multidegree) -> (Vec<usize>, Vec<usize>, SparseMatrix) {
        let bases: Vec<Vec<(usize, Monomial)>> = (0..self.terms.len())
            .map(|p| self.strip_basis(p, a))
            .collect();
        let mut ranks = vec![0usize; self.terms.len() + 1];
        let mut first = SparseMatrix::zeros(bases[0].len(), 0, self.field);
        for p in 1..self.terms.len() {
            let m = self.strip_matrix(p, &bases[p], &bases[p - 1]);
            ranks[p] = m.rank();
            if p == 1 {
                first = m;
            }
        }
        (bases.iter().map(Vec::len).collect(), ranks, first)
    }
}

/// Checks `∂² = 0` symbolically, then exactness of every degree-`a` strip with
/// `|a| ≤ cap` and that the image of `F_1 → S` is `I` in each such degree.
pub fn verify_free_complex_is_resolution(
    f: &FreeComplex,
    i: &MultigradedIdeal,
    cap: u32,
) -> Result<ResolutionCheck> {
    if f.ring != *i.ring() {
        return Err(Error::InvalidFreeComplex(
            "complex and ideal live in different rings".into(),
        ));
    }
    if f.field != i.field() {
        return Err(Error::FieldMismatch(i.field(), f.field));
    }
    if let Some((p, col)) = f.d_squared_failure() {
        return Ok(ResolutionCheck {
            degrees_checked: 0,
            failure: Some(ResolutionFailure {
                kind: FailureKind::NotAComplex,
                position: p,
                degree: f.terms[p][col].1.clone(),
            }),
        });
    }
    let degrees = all_up_to(f.ring.ncolors(), cap);
    let count = degrees.len();
    let failure = degrees.into_par_iter().find_map_first(|a| {
        let (dims, ranks, first) = f.strip(&a);
        let piece = GradedPiece::new(i, &a);
        let image_ok = ranks[1] == piece.ideal_dim()
            && (0..first.cols()).all(|c| {
                let col: Vec<(usize, Scalar)> = first
                    .entries()
                    .filter(|(_, cc, _)| *cc == c)
                    .map(|(r, _, v)| (r, v.clone()))
                    .collect();
                piece.quotient_coords_row(&col).is_empty()
            });
        if !image_ok {
            return Some(ResolutionFailure {
                kind: FailureKind::WrongImage,
                position: 0,
                degree: a,
            });
        }
        (1..dims.len())
            .find(|&p| dims[p] != ranks[p] + ranks[p + 1])
            .map(|p| ResolutionFailure {
                kind: FailureKind::NotExact,
                position: p,
                degree: a.clone(),
            })
    });
    Ok(ResolutionCheck {
        degrees_checked: count,
        failure,
    })
}

fn ek_label(ring: &ColoredRing, m: &Monomial, js: &[usize]) -> String {
    let js: Vec<String> = js.iter().map(|j| (j + 1).to_string()).collect();
    format!("({};{})", ring.fmt_monomial(m), js.join(","))
}

/// Subsets of `0..limit` of size `k`, ascending lexicographic.
fn subsets(limit: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for last in (k - 1)..limit {
        for mut s in subsets(last, k - 1) {
            s.push(last);
            out.push(s);
        }
    }
    out.sort();
    out
}

/// The Eliahou–Kervaire resolution of `𝔪^{d+1}` in `k[y_1, …, y_r]`.
///
/// `F_p` for `p ≥ 1` has basis `(m; j_1 < … < j_{p-1})` with `deg m = d+1`
/// and `j_{p-1} < max(m)`. Writing the monomial as `u = m y_k` with
/// `k = max(u)`,
/// `∂(u; J) = Σ_q (-1)^q y_{j_q} (u; J∖j_q) - Σ_q (-1)^q y_k (m y_{j_q}; J∖j_q)`,
/// where a second-sum term vanishes unless `(m y_{j_q}; J∖j_q)` is itself a
/// basis element.
pub fn eliahou_kervaire_complex(r: usize, d: u32, field: Field) -> Result<FreeComplex> {
    if r == 0 {
        return Err(Error::Invalid("need at least one variable".into()));
    }
    let ring = ColoredRing::standard(r);
    let gens = {
        let mut g = monomials_of_degree(r, d + 1);
        g.sort();
        g
    };
    let mut terms: Vec<Vec<(String, Multidegree)>> = vec![vec![("1".into(), Multidegree::zero(r))]];
    let mut keys: Vec<Vec<(Monomial, Vec<usize>)>> = vec![Vec::new()];
    for p in 1..=r {
        let mut basis = Vec::new();
        for m in &gens {
            let top = m.max_var().expect("positive degree");
            for js in subsets(top, p - 1) {
                basis.push((m.clone(), js));
            }
        }
        if basis.is_empty() {
            break;
        }
        terms.push(
            basis
                .iter()
                .map(|(m, js)| {
                    let deg = js.iter().fold(m.clone(), |acc, j| acc.mul_var(*j));
                    (ek_label(&ring, m, js), Multidegree(deg.exps().to_vec()))
                })
                .collect(),
        );
        keys.push(basis);
    }
    let one = field.one();
    let minus = field.from_i64(-1);
    let mut differentials = Vec::new();
    let d1 = MonomialMatrix::new(
        1,
        keys[1].len(),
        keys[1]
            .iter()
            .enumerate()
            .map(|(c, (m, _))| (0, c, one.clone(), m.clone())),
    )?;
    differentials.push(d1);
    for p in 2..keys.len() {
        let index: HashMap<&(Monomial, Vec<usize>), usize> = keys[p - 1]
            .iter()
            .enumerate()
            .map(|(k, e)| (e, k))
            .collect();
        let mut entries = Vec::new();
        for (col, (u, js)) in keys[p].iter().enumerate() {
            let k = u.max_var().expect("positive degree");
            let m = u.div(&Monomial::var(r, k)).expect("y_k divides u");
            for (q, &j) in js.iter().enumerate() {
                // (-1)^q with q counted from 1.
                let sign = if q % 2 == 0 { &minus } else { &one };
                let rest: Vec<usize> = js.iter().copied().filter(|x| *x != j).collect();
                let row = index[&(u.clone(), rest.clone())];
                entries.push((row, col, sign.clone(), Monomial::var(r, j)));
                let shifted = m.mul_var(j);
                if let Some(&row2) = index.get(&(shifted, rest)) {
                    entries.push((row2, col, -sign, Monomial::var(r, k)));
                }
            }
        }
        differentials.push(MonomialMatrix::new(
            keys[p - 1].len(),
            keys[p].len(),
            entries,
        )?);
    }
    FreeComplex::new(ring, field, terms, differentials)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::power_of_maximal_ideal;

    const Q: Field = Field::Rationals;

    fn md(v: &[u32]) -> Multidegree {
        Multidegree(v.to_vec())
    }

    fn ideal(ring: ColoredRing, gens: &[&str]) -> MultigradedIdeal {
        MultigradedIdeal::parse(ring, Q, gens).unwrap()
    }

    #[test]
    fn koszul_of_variables() {
        let t = betti_table_koszul(&ideal(ColoredRing::standard(3), &["y1", "y2", "y3"]), None)
            .unwrap();
        for (i, a, b) in t.entries() {
            assert_eq!(b, 1);
            assert!(a.0.iter().all(|x| *x <= 1));
            assert_eq!(a.total() as usize, i);
        }
        assert_eq!(t.total_betti(2), 3);
        assert_eq!(projective_dimension(&t).unwrap(), 3);
        assert_eq!(depth_via_ab(&t, 3).unwrap(), 0);
    }

    #[test]
    fn square_of_maximal_ideal() {
        let t = betti_table_koszul(
            &ideal(ColoredRing::standard(2), &["y1^2", "y1*y2", "y2^2"]),
            None,
        )
        .unwrap();
        let expect = [
            (0, md(&[0, 0])),
            (1, md(&[0, 2])),
            (1, md(&[1, 1])),
            (1, md(&[2, 0])),
            (2, md(&[1, 2])),
            (2, md(&[2, 1])),
        ];
        let got: Vec<(usize, Multidegree)> = t.entries().map(|(i, a, _)| (i, a.clone())).collect();
        assert_eq!(got, expect);
        assert!(t.entries().all(|(_, _, b)| b == 1));
        assert_eq!(regularity(&t).unwrap(), 2);
        assert!(has_linear_resolution(&t, 2));
    }

    #[test]
    fn complete_intersection_regularity() {
        let t = betti_table_koszul(
            &ideal(ColoredRing::standard(3), &["y1^3", "y2^4", "y3^5"]),
            None,
        )
        .unwrap();
        assert_eq!(t.get(3, &md(&[3, 4, 5])), 1);
        assert_eq!(regularity(&t).unwrap(), 10);
        assert!(!has_linear_resolution(&t, 3));
    }

    #[test]
    fn small_invariants() {
        let r1 = ColoredRing::standard(1);
        let t = betti_table_koszul(&ideal(r1, &["y1"]), None).unwrap();
        assert_eq!(regularity(&t).unwrap(), 1);
        assert_eq!(projective_dimension(&t).unwrap(), 1);
        let r3 = ColoredRing::numbered("x", 3);
        let t = betti_table_koszul(&ideal(r3.clone(), &["x1*x2", "x1*x3"]), None).unwrap();
        assert_eq!(projective_dimension(&t).unwrap(), 2);
        assert_eq!(depth_via_ab(&t, 3).unwrap(), 1);
        let t = betti_table_koszul(&ideal(r3.clone(), &["x1*x2", "x2*x3"]), None).unwrap();
        assert!(has_linear_resolution(&t, 2));
        let zero = MultigradedIdeal::new(r3, Q, vec![]).unwrap();
        let t = betti_table_koszul(&zero, None).unwrap();
        assert_eq!(t.total_betti(0), 1);
        assert_eq!(regularity(&t).unwrap(), 0);
    }

    #[test]
    fn cohen_macaulay_examples() {
        let r = ColoredRing::numbered("x", 3);
        let ci = MonomialIdeal::parse(r.clone(), &["x1", "x2"]).unwrap();
        assert!(is_cohen_macaulay(&ci, Q).unwrap());
        let bad = MonomialIdeal::parse(r.clone(), &["x1*x2", "x1*x3"]).unwrap();
        assert!(!is_cohen_macaulay(&bad, Q).unwrap());
        let tri = MonomialIdeal::parse(r, &["x1*x2*x3"]).unwrap();
        assert!(is_cohen_macaulay(&tri, Q).unwrap());
    }

    #[test]
    fn hochster_principal_and_simplex() {
        let r = ColoredRing::numbered("x", 3);
        let tri = MonomialIdeal::parse(r.clone(), &["x1*x2*x3"]).unwrap();
        let t = betti_squarefree_hochster(&tri, Q).unwrap();
        // The hollow triangle's circle sits in homological position 1.
        assert_eq!(t.get(1, &md(&[1, 1, 1])), 1);
        assert_eq!(t.get(0, &md(&[0, 0, 0])), 1);
        assert_eq!(t.entries().count(), 2);
        let zero = MonomialIdeal::zero(r.clone());
        let t = betti_squarefree_hochster(&zero, Q).unwrap();
        assert_eq!(t.entries().count(), 1);
        let sq = MonomialIdeal::parse(r, &["x1^2"]).unwrap();
        assert!(matches!(
            betti_squarefree_hochster(&sq, Q),
            Err(Error::NotSquarefree(_))
        ));
    }

    #[test]
    fn hochster_matches_koszul_on_pinned_instances() {
        let r = ColoredRing::numbered("x", 5);
        for gens in [
            vec!["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"],
            vec!["x1*x2*x3", "x3*x4*x5"],
            vec!["x1", "x2*x3", "x4*x5"],
            vec!["x1*x2", "x1*x3", "x1*x4", "x1*x5"],
            vec!["x1*x2*x3*x4*x5"],
        ] {
            let m = MonomialIdeal::parse(r.clone(), &gens).unwrap();
            let h = betti_squarefree_hochster(&m, Q).unwrap();
            let k = betti_table_koszul(&MultigradedIdeal::from_monomial(&m, Q), None).unwrap();
            let h: Vec<_> = h.entries().collect();
            let k: Vec<_> = k.entries().collect();
            assert_eq!(h, k, "{gens:?}");
        }
    }

    #[test]
    fn cap_edge_is_inconclusive() {
        let r = ColoredRing::new(vec!["a".into(), "b".into()], vec![1, 1]).unwrap();
        // Not monomial, so the scan is by total degree.
        let i = ideal(r, &["a - b"]);
        let t = betti_table_koszul(&i, Some(1)).unwrap();
        assert!(matches!(
            regularity(&t),
            Err(Error::InconclusiveAtCap { cap: 1, .. })
        ));
        let t = betti_table_koszul(&i, None).unwrap();
        assert_eq!(regularity(&t).unwrap(), 1);
    }

    #[test]
    fn colored_non_monomial_matches_monomial() {
        let ring =
            ColoredRing::new(vec!["x1".into(), "x2".into(), "z1".into()], vec![1, 1, 2]).unwrap();
        let mono = ideal(ring.clone(), &["x1*z1", "x2^2"]);
        // x1 ↦ x1 + x2, x2 ↦ x2 is a graded automorphism.
        let moved = ideal(ring, &["x1*z1 + x2*z1", "x2^2"]);
        let a = betti_table_koszul(&mono, Some(8)).unwrap();
        let b = betti_table_koszul(&moved, Some(8)).unwrap();
        let a: Vec<_> = a.entries().collect();
        let b: Vec<_> = b.entries().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn syzygy_dims() {
        let r = ColoredRing::standard(2);
        let i = ideal(r, &["y1^2", "y1*y2", "y2^2"]);
        // Ω^1 = I.
        for a in Multidegree::all_below(&md(&[3, 3]), 6) {
            assert_eq!(
                syzygy_piece_dim(&i, 1, &a).unwrap(),
                crate::multigraded::ideal_piece_dim(&i, &a)
            );
        }
        assert_eq!(syzygy_piece_dim(&i, 2, &md(&[2, 1])).unwrap(), 1);
        assert_eq!(syzygy_piece_dim(&i, 2, &md(&[1, 0])).unwrap(), 0);
        let t = betti_table_koszul(&i, None).unwrap();
        for a in Multidegree::all_below(&md(&[3, 3]), 6) {
            for l in 1..=2 {
                assert_eq!(
                    syzygy_piece_dim_from_table(&t, &i, l, &a).unwrap(),
                    syzygy_piece_dim(&i, l, &a).unwrap()
                );
            }
        }
    }

    #[test]
    fn ek_small_basis() {
        let f = eliahou_kervaire_complex(2, 1, Q).unwrap();
        let labels = |p: usize| f.term(p).iter().map(|(l, _)| l.clone()).collect::<Vec<_>>();
        assert_eq!(labels(1), ["(y1^2;)", "(y1*y2;)", "(y2^2;)"]);
        assert_eq!(labels(2), ["(y1*y2;1)", "(y2^2;1)"]);
        assert_eq!(f.length(), 2);
        assert!(f.is_minimal());
    }

    #[test]
    fn ek_resolves() {
        for r in 1..=3 {
            for d in 0..=2u32 {
                let f = eliahou_kervaire_complex(r, d, Q).unwrap();
                assert_eq!(f.d_squared_failure(), None, "r{r} d{d}");
                let m =
                    MultigradedIdeal::from_monomial(&power_of_maximal_ideal(f.ring(), d + 1), Q);
                let check = verify_free_complex_is_resolution(&f, &m, d + r as u32 + 1).unwrap();
                assert!(check.is_resolution(), "r{r} d{d}: {:?}", check.failure);
            }
        }
    }

    #[test]
    fn sign_flip_is_caught() {
        let f = eliahou_kervaire_complex(3, 1, Q).unwrap();
        let (ring, field, terms, mut ds) = f.into_parts();
        let d2 = &ds[1];
        let mut entries: Vec<_> = d2
            .entries()
            .map(|(r, c, s, m)| (r, c, s.clone(), m.clone()))
            .collect();
        entries[0].2 = -&entries[0].2;
        ds[1] = MonomialMatrix::new(d2.rows(), d2.cols(), entries).unwrap();
        let f = FreeComplex::new(ring, field, terms, ds).unwrap();
        let m = MultigradedIdeal::from_monomial(&power_of_maximal_ideal(f.ring(), 2), Q);
        let check = verify_free_complex_is_resolution(&f, &m, 5).unwrap();
        assert_eq!(check.failure.unwrap().kind, FailureKind::NotAComplex);
    }

    #[test]
    fn koszul_complex_resolves_variables() {
        let r = 3;
        let ring = ColoredRing::standard(r);
        let mut terms = Vec::new();
        let mut keys: Vec<Vec<Face>> = Vec::new();
        for s in 0..=r {
            let masks: Vec<Face> = (0..1u64 << r)
                .filter(|m| m.count_ones() as usize == s)
                .collect();
            terms.push(
                masks
                    .iter()
                    .map(|m| {
                        (
                            format!("e{m}"),
                            Monomial::from_mask(r, *m).color_vector(&ring),
                        )
                    })
                    .collect(),
            );
            keys.push(masks);
        }
        let mut ds = Vec::new();
        for s in 1..=r {
            let mut entries = Vec::new();
            for (c, m) in keys[s].iter().enumerate() {
                for (pos, j) in bits(*m).enumerate() {
                    let row = keys[s - 1]
                        .iter()
                        .position(|x| *x == m & !(1 << j))
                        .unwrap();
                    let sign = Q.from_i64(if pos % 2 == 0 { 1 } else { -1 });
                    entries.push((row, c, sign, Monomial::var(r, j)));
                }
            }
            ds.push(MonomialMatrix::new(keys[s - 1].len(), keys[s].len(), entries).unwrap());
        }
        let f = FreeComplex::new(ring.clone(), Q, terms, ds).unwrap();
        let i = ideal(ring, &["y1", "y2", "y3"]);
        assert!(verify_free_complex_is_resolution(&f, &i, 5)
            .unwrap()
            .is_resolution());
        let wrong = ideal(ColoredRing::standard(3), &["y1", "y2", "y3^2"]);
        let check = verify_free_complex_is_resolution(&f, &wrong, 5).unwrap();
        assert_eq!(check.failure.unwrap().kind, FailureKind::WrongImage);
    }

    #[test]
    fn inhomogeneous_entries_rejected() {
        let ring = ColoredRing::standard(1);
        let terms = vec![
            vec![("1".to_string(), md(&[0]))],
            vec![("g".to_string(), md(&[2]))],
        ];
        let d = MonomialMatrix::new(1, 1, [(0, 0, Q.one(), Monomial::var(1, 0))]).unwrap();
        assert!(matches!(
            FreeComplex::new(ring, Q, terms, vec![d]),
            Err(Error::InvalidFreeComplex(_))
        ));
    }

    #[test]
    fn diagram_and_json() {
        let t = betti_table_koszul(
            &ideal(ColoredRing::standard(2), &["y1^2", "y1*y2", "y2^2"]),
            None,
        )
        .unwrap();
        let d = t.diagram();
        assert!(d.contains("total: 1 3 2"), "{d}");
        let j = t.to_json();
        assert_eq!(j["schema"], 1);
        assert_eq!(j["rows"][1]["degree"], serde_json::json!([0, 2]));
    }
}
