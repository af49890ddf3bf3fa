//! `ℕ^r`-homogeneous ideals given by polynomial generators, and their graded
//! pieces as explicit vector spaces.
//!
//! A piece `I_a` is stored as the reduced row echelon form of a spanning set
//! inside `S_a`, written in the canonical monomial basis. The monomials on
//! non-pivot columns form the chosen basis of `(S/I)_a`; every quotient map
//! below is expressed in those bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactla::{Field, RowEchelon, Scalar, SparseMatrix, SparseRow};
use crate::monomial::{
    binomial, monomials_of_degree, ColoredRing, Monomial, MonomialIdeal, Multidegree,
};

/// A polynomial with nonzero coefficients in a fixed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn new(
        field: Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::InvalidIdeal(
                    "term in the wrong number of variables".into(),
                ));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            let sum = match acc.remove(&m) {
                Some(prev) => &prev + &c,
                None => c,
            };
            if !sum.is_zero() {
                acc.insert(m, sum);
            }
        }
        Ok(Polynomial {
            field,
            nvars,
            terms: acc,
        })
    }

    pub fn monomial(field: Field, m: Monomial) -> Self {
        let nvars = m.nvars();
        Polynomial {
            field,
            nvars,
            terms: BTreeMap::from([(m, field.one())]),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next()
    }

    /// The common multidegree of all terms, or `None` if the polynomial is
    /// zero or not homogeneous.
    pub fn multidegree(&self, ring: &ColoredRing) -> Option<Multidegree> {
        let mut it = self.terms.keys().map(|m| m.color_vector(ring));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .flat_map(|(a, c)| other.terms.iter().map(move |(b, d)| (a.mul(b), c * d)));
        Polynomial::new(self.field, self.nvars, terms.collect::<Vec<_>>())
            .expect("same field and arity")
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .chain(other.terms.iter())
            .map(|(m, c)| (m.clone(), c.clone()));
        Polynomial::new(self.field, self.nvars, terms.collect::<Vec<_>>())
            .expect("same field and arity")
    }

    /// Substitutes polynomial `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[Polynomial], target_nvars: usize) -> Polynomial {
        let one = Polynomial::monomial(self.field, Monomial::one(target_nvars));
        let mut out = Polynomial {
            field: self.field,
            nvars: target_nvars,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut t = one.clone();
            for (i, e) in m.exps().iter().enumerate() {
                for _ in 0..*e {
                    t = t.mul(&images[i]);
                }
            }
            let scaled = Polynomial::new(
                self.field,
                target_nvars,
                t.terms
                    .into_iter()
                    .map(|(k, v)| (k, &v * c))
                    .collect::<Vec<_>>(),
            )
            .expect("same field");
            out = out.add(&scaled);
        }
        out
    }

    /// Coordinates in a monomial basis, as a sparse row.
    fn to_row(&self, index: &HashMap<Monomial, usize>) -> SparseRow {
        let mut row: SparseRow = self
            .terms
            .iter()
            .map(|(m, c)| (index[m], c.clone()))
            .collect();
        row.sort_by_key(|(k, _)| *k);
        row
    }

    /// Parses `3*x1^2*z1 - 2*x1*x2*z1`; coefficients may be `a/b`.
    pub fn parse(ring: &ColoredRing, field: Field, s: &str) -> Result<Polynomial> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::InvalidIdeal("empty polynomial".into()));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                pieces.push((negative, std::mem::take(&mut cur)));
                negative = ch == '-';
            } else if (ch == '+' || ch == '-') && cur.is_empty() {
                if ch == '-' {
                    negative = !negative;
                }
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::InvalidIdeal(format!("dangling sign in {s:?}")));
        }
        pieces.push((negative, cur));
        let mut terms = Vec::new();
        for (neg, term) in pieces {
            let mut num = BigInt::from(if neg { -1 } else { 1 });
            let mut den = BigInt::from(1);
            let mut mono = Monomial::one(ring.nvars());
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(Error::InvalidIdeal(format!("empty factor in {term:?}")));
                }
                if factor.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                    let (n, d) = match factor.split_once('/') {
                        Some((n, d)) => (n, d),
                        None => (factor, "1"),
                    };
                    let n: BigInt = n
                        .parse()
                        .map_err(|_| Error::InvalidIdeal(format!("bad coefficient {factor:?}")))?;
                    let d: BigInt = d
                        .parse()
                        .map_err(|_| Error::InvalidIdeal(format!("bad coefficient {factor:?}")))?;
                    num *= n;
                    den *= d;
                } else {
                    mono = mono.mul(&ring.parse_monomial(factor)?);
                }
            }
            terms.push((mono, field.from_ratio(&num, &den)?));
        }
        Polynomial::new(field, ring.nvars(), terms)
    }

    pub fn display(&self, ring: &ColoredRing) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = ring.fmt_monomial(m);
            if abs.is_one() {
                out.push_str(&mono);
            } else if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

/// Monomials of color vector `a`, in canonical order. Their number is
/// `Π_i binom(a_i + |X_i| - 1, |X_i| - 1)`.
pub fn monomials_of_multidegree(ring: &ColoredRing, a: &Multidegree) -> Vec<Monomial> {
    let n = ring.nvars();
    let mut acc = vec![Monomial::one(n)];
    for c in 1..=ring.ncolors() {
        let class = ring.class(c);
        let local = monomials_of_degree(class.len(), a.0[c - 1]);
        let mut next = Vec::with_capacity(acc.len() * local.len());
        for m in &acc {
            for l in &local {
                let mut exps = m.exps().to_vec();
                for (k, v) in class.iter().enumerate() {
                    exps[*v] += l.exps()[k];
                }
                next.push(Monomial::new(exps));
            }
        }
        acc = next;
    }
    acc.sort();
    acc
}

/// `dim S_a`, without listing the monomials.
pub fn ring_piece_dim(ring: &ColoredRing, a: &Multidegree) -> usize {
    ring.class_sizes()
        .iter()
        .zip(&a.0)
        .map(|(&n, &d)| {
            if n == 0 {
                usize::from(d == 0)
            } else {
                binomial(u64::from(d) + n as u64 - 1, n as u64 - 1) as usize
            }
        })
        .product()
}

/// An `ℕ^r`-homogeneous ideal presented by polynomial generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigradedIdeal {
    ring: ColoredRing,
    field: Field,
    gens: Vec<(Polynomial, Multidegree)>,
}

impl MultigradedIdeal {
    pub fn new(ring: ColoredRing, field: Field, gens: Vec<Polynomial>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.field != field {
                return Err(Error::FieldMismatch(field, g.field));
            }
            if g.nvars != ring.nvars() {
                return Err(Error::InvalidIdeal("generator in the wrong ring".into()));
            }
            if g.is_zero() {
                return Err(Error::InvalidIdeal("zero generator".into()));
            }
            let deg = g
                .multidegree(&ring)
                .ok_or_else(|| Error::NotHomogeneous(g.display(&ring)))?;
            out.push((g, deg));
        }
        Ok(MultigradedIdeal {
            ring,
            field,
            gens: out,
        })
    }

    pub fn from_monomial(i: &MonomialIdeal, field: Field) -> Self {
        let gens = i
            .generators()
            .iter()
            .map(|m| Polynomial::monomial(field, m.clone()))
            .collect();
        MultigradedIdeal::new(i.ring().clone(), field, gens).expect("monomials are homogeneous")
    }

    pub fn parse<S: AsRef<str>>(ring: ColoredRing, field: Field, gens: &[S]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|g| Polynomial::parse(&ring, field, g.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        MultigradedIdeal::new(ring, field, polys)
    }

    pub fn ring(&self) -> &ColoredRing {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> impl Iterator<Item = (&Polynomial, &Multidegree)> {
        self.gens.iter().map(|(p, d)| (p, d))
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|(p, _)| p.is_monomial())
    }

    /// The monomial ideal with the same generators, when all are monomials.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if !self.is_monomial() {
            return None;
        }
        let gens = self
            .gens
            .iter()
            .map(|(p, _)| p.leading_monomial().expect("nonzero").clone())
            .collect();
        MonomialIdeal::new(self.ring.clone(), gens).ok()
    }

    /// Sum of the total degrees of the generators.
    pub fn generator_degree_sum(&self) -> u32 {
        self.gens.iter().map(|(_, d)| d.total()).sum()
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(|(_, d)| d.total()).max().unwrap_or(0)
    }

    /// Applies a color-preserving substitution `x_i ↦ images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<MultigradedIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|(p, _)| p.substitute(images, self.ring.nvars()))
            .collect();
        MultigradedIdeal::new(self.ring.clone(), self.field, gens)
    }

    pub fn to_text(&self) -> String {
        let mut s = self.ring.to_text();
        s.push('\n');
        if self.field != Field::Rationals {
            s.push_str(&format!("field: {}\n", self.field));
        }
        for (p, _) in &self.gens {
            if p.is_monomial() && p.terms.values().next().is_some_and(Scalar::is_one) {
                s.push_str(&format!("gen: {}\n", p.display(&self.ring)));
            } else {
                s.push_str(&format!("poly: {}\n", p.display(&self.ring)));
            }
        }
        s
    }
}

impl fmt::Display for MultigradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|(p, _)| p.display(&self.ring))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `I_a ⊆ S_a` in the monomial basis of `S_a`.
#[derive(Debug, Clone)]
pub struct GradedPiece {
    degree: Multidegree,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    span: RowEchelon,
    /// Basis positions of the standard monomials (non-pivot columns).
    standard: Vec<usize>,
    /// Inverse of `standard`, `usize::MAX` on pivot columns.
    standard_pos: Vec<usize>,
}

impl GradedPiece {
    pub fn new(ideal: &MultigradedIdeal, a: &Multidegree) -> GradedPiece {
        let basis = monomials_of_multidegree(&ideal.ring, a);
        let index: HashMap<Monomial, usize> = basis
            .iter()
            .enumerate()
            .map(|(k, m)| (m.clone(), k))
            .collect();
        let field = ideal.field;
        let rows: Vec<SparseRow> = if let Some(mono) = ideal.as_monomial_ideal() {
            basis
                .iter()
                .enumerate()
                .filter(|(_, m)| mono.contains(m))
                .map(|(k, _)| vec![(k, field.one())])
                .collect()
        } else {
            let mut rows = Vec::new();
            for (g, d) in &ideal.gens {
                if let Some(rest) = a.checked_sub(d) {
                    for m in monomials_of_multidegree(&ideal.ring, &rest) {
                        rows.push(g.mul_monomial(&m).to_row(&index));
                    }
                }
            }
            rows
        };
        let span = RowEchelon::from_rows(field, basis.len(), rows);
        let standard = span.free_columns();
        let mut standard_pos = vec![usize::MAX; basis.len()];
        for (k, c) in standard.iter().enumerate() {
            standard_pos[*c] = k;
        }
        GradedPiece {
            degree: a.clone(),
            basis,
            index,
            span,
            standard,
            standard_pos,
        }
    }

    pub fn degree(&self) -> &Multidegree {
        &self.degree
    }

    /// Canonical monomial basis of `S_a`.
    pub fn monomial_basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.len()
    }

    /// `dim I_a`.
    pub fn ideal_dim(&self) -> usize {
        self.span.rank()
    }

    /// `dim (S/I)_a`.
    pub fn quotient_dim(&self) -> usize {
        self.standard.len()
    }

    /// Monomials whose classes form the chosen basis of `(S/I)_a`.
    pub fn standard_monomials(&self) -> Vec<&Monomial> {
        self.standard.iter().map(|k| &self.basis[*k]).collect()
    }

    /// Columns spanning `I_a` (the reduced echelon rows, transposed).
    pub fn subspace(&self) -> SparseMatrix {
        let rows = self.span.reduced_rows();
        let entries = rows
            .iter()
            .enumerate()
            .flat_map(|(j, r)| r.iter().map(move |(i, v)| (*i, j, v.clone())));
        SparseMatrix::new(self.basis.len(), rows.len(), self.span.field(), entries)
            .expect("echelon rows are well formed")
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.span.contains(&p.to_row(&self.index))
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of `c·m` (for `m` of this degree) in the standard basis of
    /// `(S/I)_a`.
    pub fn quotient_coords(&self, m: &Monomial, c: &Scalar) -> SparseRow {
        let k = self.index[m];
        let nf = self.span.reduce(&[(k, c.clone())]);
        nf.into_iter()
            .map(|(col, v)| (self.standard_pos[col], v))
            .collect()
    }

    /// Coordinates of an arbitrary row over the monomial basis.
    pub fn quotient_coords_row(&self, row: &[(usize, Scalar)]) -> SparseRow {
        let mut out: SparseRow = self
            .span
            .reduce(row)
            .into_iter()
            .map(|(col, v)| (self.standard_pos[col], v))
            .collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }
}

/// Graded pieces of one ideal, computed on demand and shared across threads.
#[derive(Debug)]
pub struct PieceCache<'a> {
    ideal: &'a MultigradedIdeal,
    pieces: Mutex<HashMap<Multidegree, Arc<GradedPiece>>>,
}

impl<'a> PieceCache<'a> {
    pub fn new(ideal: &'a MultigradedIdeal) -> Self {
        PieceCache {
            ideal,
            pieces: Mutex::new(HashMap::new()),
        }
    }

    pub fn ideal(&self) -> &MultigradedIdeal {
        self.ideal
    }

    pub fn get(&self, a: &Multidegree) -> Arc<GradedPiece> {
        if let Some(p) = self.pieces.lock().expect("cache lock").get(a) {
            return Arc::clone(p);
        }
        let piece = Arc::new(GradedPiece::new(self.ideal, a));
        self.pieces
            .lock()
            .expect("cache lock")
            .entry(a.clone())
            .or_insert(piece)
            .clone()
    }

    /// Multiplication by variable `x`: `(S/I)_a → (S/I)_{a + deg x}`.
    pub fn mult_map(&self, a: &Multidegree, x: usize) -> SparseMatrix {
        let src = self.get(a);
        let dst = self.get(&a.add(&self.ideal.ring.var_degree(x)));
        let one = self.ideal.field.one();
        let entries = src.standard.iter().enumerate().flat_map(|(col, k)| {
            let m = src.basis[*k].mul_var(x);
            dst.quotient_coords(&m, &one)
                .into_iter()
                .map(move |(row, v)| (row, col, v))
        });
        SparseMatrix::new(
            dst.quotient_dim(),
            src.quotient_dim(),
            self.ideal.field,
            entries.collect::<Vec<_>>(),
        )
        .expect("normal forms are reduced")
    }
}

/// `dim_k I_a`.
pub fn ideal_piece_dim(i: &MultigradedIdeal, a: &Multidegree) -> usize {
    GradedPiece::new(i, a).ideal_dim()
}

/// Matrix of multiplication by variable `x` from `(S/I)_a` to
/// `(S/I)_{a + deg x}` in the standard-monomial bases.
pub fn quotient_mult_map(i: &MultigradedIdeal, a: &Multidegree, x: usize) -> SparseMatrix {
    PieceCache::new(i).mult_map(a, x)
}

/// `dim (S/I)_a = dim S_a - dim I_a`.
pub fn hilbert_function(i: &MultigradedIdeal, a: &Multidegree) -> usize {
    GradedPiece::new(i, a).quotient_dim()
}
