//! Colored polynomial rings, monomials and monomial ideals.
//!
//! The variables of a [`ColoredRing`] are partitioned into color classes
//! `X_1, …, X_r`; a variable of color `i` has multidegree `e_i ∈ ℕ^r`. Fine
//! (per-variable) grading is the special case of one variable per color.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplicial::{bits, full_mask, minimal_sets, Face, SimplicialComplex};

/// Cap on the number of variables for minimal-prime enumeration.
pub const PRIME_SEARCH_VARIABLE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredRing {
    names: Vec<String>,
    colors: Vec<usize>,
    r: usize,
}

impl ColoredRing {
    /// `colors[k]` is the color (in `1..=r`) of variable `names[k]`. Every
    /// color between 1 and the largest one used must occur.
    pub fn new(names: Vec<String>, colors: Vec<usize>) -> Result<Self> {
        if names.len() != colors.len() {
            return Err(Error::InvalidIdeal(
                "one color per variable required".into(),
            ));
        }
        if names.len() > 64 {
            return Err(Error::TooLarge {
                what: "variable set",
                size: names.len(),
                cap: 64,
            });
        }
        let distinct: HashSet<&String> = names.iter().collect();
        if distinct.len() != names.len() {
            return Err(Error::InvalidIdeal("duplicate variable name".into()));
        }
        if let Some(bad) = names
            .iter()
            .find(|n| n.is_empty() || !n.chars().all(|c| c.is_alphanumeric() || c == '_'))
        {
            return Err(Error::InvalidIdeal(format!("bad variable name {bad:?}")));
        }
        let r = colors.iter().copied().max().unwrap_or(0);
        if colors.contains(&0) {
            return Err(Error::InvalidIdeal("colors start at 1".into()));
        }
        for c in 1..=r {
            if !colors.contains(&c) {
                return Err(Error::InvalidIdeal(format!("color class {c} is empty")));
            }
        }
        Ok(ColoredRing { names, colors, r })
    }

    /// Every variable in its own color class.
    pub fn fine<S: AsRef<str>>(names: &[S]) -> Self {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let colors = (1..=names.len()).collect();
        ColoredRing::new(names, colors).expect("fine grading is valid")
    }

    /// `k[y_1, …, y_r]` with `y_i` of color `i`.
    pub fn standard(r: usize) -> Self {
        let names: Vec<String> = (1..=r).map(|i| format!("y{i}")).collect();
        ColoredRing::fine(&names)
    }

    /// `x1..xn`, one color per variable.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        ColoredRing::fine(&names)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn ncolors(&self) -> usize {
        self.r
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    /// Color of variable `var`, in `1..=r`.
    pub fn color_of(&self, var: usize) -> usize {
        self.colors[var]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Variables of color `c`, in declaration order.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.nvars()).filter(|v| self.colors[*v] == c).collect()
    }

    pub fn class_mask(&self, c: usize) -> Face {
        self.class(c).into_iter().fold(0, |m, v| m | 1 << v)
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        (1..=self.r).map(|c| self.class(c).len()).collect()
    }

    /// Multidegree of a single variable.
    pub fn var_degree(&self, var: usize) -> Multidegree {
        Multidegree::unit(self.r, self.colors[var] - 1)
    }

    /// Same variables with a new coloring.
    pub fn recolor(&self, colors: Vec<usize>) -> Result<ColoredRing> {
        ColoredRing::new(self.names.clone(), colors)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| {
                if *e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Parses `x1^2*z1`, `x1 * x2` or `1`.
    pub fn parse_monomial(&self, s: &str) -> Result<Monomial> {
        let mut exps = vec![0u32; self.nvars()];
        let t = s.trim();
        if t == "1" {
            return Ok(Monomial { exps });
        }
        for factor in t.split('*') {
            let f = factor.trim();
            let (name, e) = match f.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidIdeal(format!("bad exponent in {f:?}")))?,
                ),
                None => (f, 1),
            };
            let v = self
                .var_index(name)
                .ok_or_else(|| Error::InvalidIdeal(format!("unknown variable {name:?}")))?;
            exps[v] += e;
        }
        Ok(Monomial { exps })
    }

    /// `ring: x1:1 x2:1 z1:2`
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .names
            .iter()
            .zip(&self.colors)
            .map(|(n, c)| format!("{n}:{c}"))
            .collect();
        format!("ring: {}", parts.join(" "))
    }
}

/// A color vector in `ℕ^r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multidegree(pub Vec<u32>);

impl Multidegree {
    pub fn zero(r: usize) -> Self {
        Multidegree(vec![0; r])
    }

    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = vec![0; r];
        v[i] = 1;
        Multidegree(v)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero coordinates.
    pub fn support(&self) -> usize {
        self.0.iter().filter(|a| **a > 0).count()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Multidegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &Multidegree) -> Option<Multidegree> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Multidegree)
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn join(&self, other: &Multidegree) -> Multidegree {
        Multidegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Pure color `i` (0-based) means supported on coordinate `i` only.
    pub fn is_pure(&self, i: usize) -> bool {
        self.0[i] > 0 && self.support() == 1
    }

    /// All `a ∈ ℕ^r` with `|a| = total`, in descending lexicographic order.
    pub fn all_of_total(r: usize, total: u32) -> Vec<Multidegree> {
        fn rec(r: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Multidegree>) {
            if cur.len() + 1 == r {
                cur.push(left);
                out.push(Multidegree(cur.clone()));
                cur.pop();
                return;
            }
            for a in (0..=left).rev() {
                cur.push(a);
                rec(r, left - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if r == 0 {
            if total == 0 {
                out.push(Multidegree(vec![]));
            }
            return out;
        }
        rec(r, total, &mut Vec::with_capacity(r), &mut out);
        out
    }

    /// All `a ≤ bound` componentwise with `|a| ≤ cap`.
    pub fn all_below(bound: &Multidegree, cap: u32) -> Vec<Multidegree> {
        let mut out = vec![Multidegree(Vec::with_capacity(bound.len()))];
        for b in &bound.0 {
            let mut next = Vec::new();
            for prefix in &out {
                let used = prefix.total();
                for a in 0..=*b {
                    if used + a > cap {
                        break;
                    }
                    let mut v = prefix.0.clone();
                    v.push(a);
                    next.push(Multidegree(v));
                }
            }
            out = next;
        }
        out.sort_by(|x, y| x.total().cmp(&y.total()).then_with(|| y.0.cmp(&x.0)));
        out
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An exponent vector. Ordered descending-lexicographically, so sorting puts
/// `x1^2` before `x1*x2` before `x2^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.exps.cmp(&self.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// Squarefree monomial `x^F`.
    pub fn from_mask(n: usize, mask: Face) -> Self {
        Monomial {
            exps: (0..n).map(|i| (mask >> i & 1) as u32).collect(),
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| *e == 0)
    }

    pub fn support(&self) -> Face {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|e| *e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(|exps| Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn color_vector(&self, ring: &ColoredRing) -> Multidegree {
        let mut v = vec![0u32; ring.ncolors()];
        for (i, e) in self.exps.iter().enumerate() {
            v[ring.color_of(i) - 1] += e;
        }
        Multidegree(v)
    }

    /// Largest variable index dividing the monomial (0-based).
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|e| *e > 0)
    }
}

/// All monomials of total degree `d` in `n` variables, in canonical order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    Multidegree::all_of_total(n, d)
        .into_iter()
        .map(|m| Monomial::new(m.0))
        .collect()
}

/// A monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: ColoredRing,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| (g.degree(), g.clone()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

impl MonomialIdeal {
    /// The ideal generated by `gens`; redundant generators are removed.
    pub fn new(ring: ColoredRing, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != ring.nvars()) {
            return Err(Error::InvalidIdeal(format!(
                "monomial with {} exponents in a ring with {} variables",
                g.nvars(),
                ring.nvars()
            )));
        }
        Ok(MonomialIdeal {
            gens: minimalize(gens),
            ring,
        })
    }

    pub fn zero(ring: ColoredRing) -> Self {
        MonomialIdeal {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: ColoredRing) -> Self {
        let n = ring.nvars();
        MonomialIdeal {
            ring,
            gens: vec![Monomial::one(n)],
        }
    }

    /// Parses generator strings like `x1^2*z1`.
    pub fn parse<S: AsRef<str>>(ring: ColoredRing, gens: &[S]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| ring.parse_monomial(g.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ring, gens)
    }

    pub fn ring(&self) -> &ColoredRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.ring != other.ring {
            return Err(Error::InvalidIdeal("ideals live in different rings".into()));
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        MonomialIdeal::new(self.ring.clone(), gens)
    }

    pub fn with_ring(&self, ring: ColoredRing) -> Result<MonomialIdeal> {
        MonomialIdeal::new(ring, self.gens.clone())
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| self.ring.fmt_monomial(g))
            .collect()
    }

    /// Color vector of the lcm of all generators; every multigraded Betti
    /// number of `S/I` lives below it.
    pub fn lcm_degree(&self) -> Multidegree {
        self.gens
            .iter()
            .fold(Monomial::one(self.ring.nvars()), |acc, g| acc.lcm(g))
            .color_vector(&self.ring)
    }

    pub fn to_text(&self) -> String {
        let mut s = self.ring.to_text();
        s.push('\n');
        for g in &self.gens {
            s.push_str("gen: ");
            s.push_str(&self.ring.fmt_monomial(g));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

/// `I_Δ`, generated by `x^τ` for the minimal nonfaces `τ`. Vertex `k` of the
/// complex is identified with variable `k` of the ring.
pub fn stanley_reisner_ideal(c: &SimplicialComplex, ring: &ColoredRing) -> Result<MonomialIdeal> {
    if c.vertex_count() != ring.nvars() {
        return Err(Error::InvalidIdeal(format!(
            "complex has {} vertices but the ring has {} variables",
            c.vertex_count(),
            ring.nvars()
        )));
    }
    let n = ring.nvars();
    let gens = c
        .minimal_nonfaces()
        .into_iter()
        .map(|f| Monomial::from_mask(n, f))
        .collect();
    MonomialIdeal::new(ring.clone(), gens)
}

/// The complex whose Stanley–Reisner ideal is `i`; vertices are the variable
/// names.
pub fn complex_from_squarefree_ideal(i: &MonomialIdeal) -> Result<SimplicialComplex> {
    if let Some(g) = i.gens.iter().find(|g| !g.is_squarefree()) {
        return Err(Error::NotSquarefree(i.ring.fmt_monomial(g)));
    }
    let n = i.ring.nvars();
    let all = full_mask(n);
    let facets = if i.is_zero() {
        vec![all]
    } else {
        minimal_covers(i)?.into_iter().map(|p| all & !p).collect()
    };
    SimplicialComplex::from_masks(i.ring.names().to_vec(), facets)
}

/// All distinct lcms of nonempty generator subsets.
pub fn lcm_lattice_degrees(i: &MonomialIdeal) -> BTreeSet<Monomial> {
    let mut lattice: BTreeSet<Monomial> = BTreeSet::new();
    for g in &i.gens {
        let joined: Vec<Monomial> = lattice.iter().map(|l| l.lcm(g)).collect();
        lattice.insert(g.clone());
        lattice.extend(joined);
    }
    lattice
}

fn minimal_covers(i: &MonomialIdeal) -> Result<Vec<Face>> {
    if i.ring.nvars() > PRIME_SEARCH_VARIABLE_CAP {
        return Err(Error::TooLarge {
            what: "variable set for minimal-prime search",
            size: i.ring.nvars(),
            cap: PRIME_SEARCH_VARIABLE_CAP,
        });
    }
    let mut edges: Vec<Face> = i.gens.iter().map(Monomial::support).collect();
    if edges.contains(&0) {
        return Ok(Vec::new());
    }
    edges = minimal_sets(edges);
    let mut found: Vec<Face> = Vec::new();
    let mut seen: HashSet<Face> = HashSet::new();
    fn rec(edges: &[Face], chosen: Face, found: &mut Vec<Face>, seen: &mut HashSet<Face>) {
        if !seen.insert(chosen) || found.iter().any(|f| f & !chosen == 0) {
            return;
        }
        match edges.iter().find(|e| *e & chosen == 0) {
            None => found.push(chosen),
            Some(e) => {
                for v in bits(*e) {
                    rec(edges, chosen | 1 << v, found, seen);
                }
            }
        }
    }
    rec(&edges, 0, &mut found, &mut seen);
    let mut out = minimal_sets(found);
    out.sort_by_key(|p| (p.count_ones(), *p));
    Ok(out)
}

/// Minimal primes `⟨x_i : i ∈ A⟩`, returned as variable masks ordered by
/// size. Empty for the zero ideal and for the unit ideal.
pub fn minimal_primes(i: &MonomialIdeal) -> Result<Vec<Face>> {
    if i.is_zero() {
        return Ok(Vec::new());
    }
    minimal_covers(i)
}

/// Smallest minimal prime size.
pub fn codim(i: &MonomialIdeal) -> Result<usize> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if i.is_unit() {
        return Err(Error::InvalidIdeal(
            "the unit ideal has no minimal primes".into(),
        ));
    }
    Ok(minimal_primes(i)?
        .iter()
        .map(|p| p.count_ones() as usize)
        .min()
        .expect("proper nonzero ideal has a minimal prime"))
}

/// `I ⊆ ⟨x_i : i ∈ A⟩`.
pub fn contained_in_variable_prime(i: &MonomialIdeal, a: Face) -> bool {
    i.gens.iter().all(|g| g.support() & a != 0)
}

/// Generators of `⊕_{p ≥ k} I_p`, minimalized.
pub fn truncate(i: &MonomialIdeal, k: u32) -> MonomialIdeal {
    let n = i.ring.nvars();
    let mut gens = Vec::new();
    for g in &i.gens {
        let d = g.degree();
        if d >= k {
            gens.push(g.clone());
        } else {
            gens.extend(monomials_of_degree(n, k - d).into_iter().map(|m| m.mul(g)));
        }
    }
    MonomialIdeal::new(i.ring.clone(), gens).expect("same ring")
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// All monomials of total degree `k`.
pub fn power_of_maximal_ideal(ring: &ColoredRing, k: u32) -> MonomialIdeal {
    MonomialIdeal::new(ring.clone(), monomials_of_degree(ring.nvars(), k)).expect("same ring")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> ColoredRing {
        ColoredRing::numbered("x", n)
    }

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(ring(n), gens).unwrap()
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let masks = facets
            .iter()
            .map(|f| f.iter().fold(0u64, |m, v| m | 1 << (v - 1)))
            .collect();
        SimplicialComplex::from_masks(SimplicialComplex::numbered_vertices(n), masks).unwrap()
    }

    #[test]
    fn ring_validation() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(ColoredRing::new(names.clone(), vec![1, 3]).is_err());
        assert!(ColoredRing::new(names.clone(), vec![0, 1]).is_err());
        assert!(ColoredRing::new(names, vec![2, 1]).is_ok());
    }

    #[test]
    fn monomial_parsing_and_order() {
        let r =
            ColoredRing::new(vec!["x1".into(), "x2".into(), "z1".into()], vec![1, 1, 2]).unwrap();
        let m = r.parse_monomial("x1^2*z1").unwrap();
        assert_eq!(m.exps(), [2, 0, 1]);
        assert_eq!(m.color_vector(&r), Multidegree(vec![2, 1]));
        assert_eq!(r.fmt_monomial(&m), "x1^2*z1");
        let mut v = monomials_of_degree(2, 2);
        v.sort();
        let s: Vec<String> = v.iter().map(|m| ring(2).fmt_monomial(m)).collect();
        assert_eq!(s, ["x1^2", "x1*x2", "x2^2"]);
    }

    #[test]
    fn stanley_reisner_examples() {
        assert_eq!(
            stanley_reisner_ideal(&cx(3, &[&[1, 2], &[1, 3], &[2, 3]]), &ring(3)).unwrap(),
            ideal(3, &["x1*x2*x3"])
        );
        assert_eq!(
            stanley_reisner_ideal(&cx(4, &[&[1, 2], &[3, 4]]), &ring(4)).unwrap(),
            ideal(4, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"])
        );
        assert!(stanley_reisner_ideal(&cx(3, &[&[1, 2, 3]]), &ring(3))
            .unwrap()
            .is_zero());
        assert!(stanley_reisner_ideal(&cx(3, &[&[1, 2, 3]]), &ring(2)).is_err());
    }

    #[test]
    fn complex_from_ideal_examples() {
        let c = complex_from_squarefree_ideal(&ideal(3, &["x1*x2*x3"])).unwrap();
        assert_eq!(c.facets(), [0b011, 0b101, 0b110]);
        let c = complex_from_squarefree_ideal(&MonomialIdeal::zero(ring(3))).unwrap();
        assert_eq!(c.facets(), [0b111]);
        assert!(complex_from_squarefree_ideal(&ideal(2, &["x1^2"])).is_err());
        assert!(complex_from_squarefree_ideal(&MonomialIdeal::unit(ring(2)))
            .unwrap()
            .is_void());
    }

    #[test]
    fn lcm_lattice_examples() {
        let l: Vec<String> = lcm_lattice_degrees(&ideal(2, &["x1", "x2"]))
            .iter()
            .map(|m| ring(2).fmt_monomial(m))
            .collect();
        assert_eq!(l, ["x1*x2", "x1", "x2"]);
        assert_eq!(lcm_lattice_degrees(&ideal(3, &["x1*x2", "x2*x3"])).len(), 3);
        let m2 = power_of_maximal_ideal(&ring(2), 2);
        let l: BTreeSet<String> = lcm_lattice_degrees(&m2)
            .iter()
            .map(|m| ring(2).fmt_monomial(m))
            .collect();
        let want: BTreeSet<String> = ["x1^2", "x1*x2", "x2^2", "x1^2*x2", "x1*x2^2", "x1^2*x2^2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(l, want);
        assert!(lcm_lattice_degrees(&MonomialIdeal::zero(ring(2))).is_empty());
    }

    #[test]
    fn primes_and_codim() {
        let i = ideal(3, &["x1*x2", "x1*x3"]);
        assert_eq!(minimal_primes(&i).unwrap(), vec![0b001, 0b110]);
        assert_eq!(codim(&i).unwrap(), 1);
        assert_eq!(
            minimal_primes(&ideal(2, &["x1", "x2"])).unwrap(),
            vec![0b11]
        );
        assert_eq!(codim(&ideal(4, &["x1", "x2", "x3", "x4"])).unwrap(), 4);
        assert_eq!(
            minimal_primes(&ideal(3, &["x1*x2*x3"])).unwrap(),
            vec![0b001, 0b010, 0b100]
        );
        assert_eq!(codim(&MonomialIdeal::zero(ring(2))), Err(Error::ZeroIdeal));
        assert!(minimal_primes(&MonomialIdeal::zero(ring(2)))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn variable_prime_containment() {
        assert!(contained_in_variable_prime(&ideal(2, &["x1*x2"]), 0b01));
        assert!(!contained_in_variable_prime(&ideal(2, &["x1", "x2"]), 0b01));
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(
            truncate(&ideal(2, &["x1"]), 2),
            ideal(2, &["x1^2", "x1*x2"])
        );
        let m2 = power_of_maximal_ideal(&ring(3), 2);
        assert_eq!(truncate(&m2, 2), m2);
        for j in 1..4 {
            for k in 0..5 {
                assert_eq!(
                    truncate(&power_of_maximal_ideal(&ring(3), j), k),
                    power_of_maximal_ideal(&ring(3), j.max(k))
                );
            }
        }
    }

    #[test]
    fn maximal_ideal_powers() {
        assert_eq!(
            power_of_maximal_ideal(&ring(2), 2),
            ideal(2, &["x1^2", "x1*x2", "x2^2"])
        );
        assert_eq!(power_of_maximal_ideal(&ring(3), 2).generators().len(), 6);
        // binom(r + k - 1, r - 1)
        assert_eq!(power_of_maximal_ideal(&ring(4), 3).generators().len(), 20);
    }

    #[test]
    fn multidegree_enumeration() {
        assert_eq!(Multidegree::all_of_total(3, 2).len(), 6);
        let b = Multidegree(vec![1, 2]);
        let all = Multidegree::all_below(&b, 2);
        assert_eq!(all.len(), 5);
        assert!(all.iter().all(|a| a.le(&b) && a.total() <= 2));
    }
}
