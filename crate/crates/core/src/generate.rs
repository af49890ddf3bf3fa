//! Seeded random instances.
//!
//! Every generator takes an explicit RNG; [`rng`] builds the one used by the
//! command line and the test suites, so a seed pins the instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cellular::{CellComplex, LabeledComplex};
use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::monomial::{
    power_of_maximal_ideal, stanley_reisner_ideal, truncate, ColoredRing, Monomial, MonomialIdeal,
};
use crate::multigraded::{MultigradedIdeal, Polynomial};
use crate::simplicial::{
    bits, full_mask, is_leray, Ambient, Face, FamilyMember, SimplicialComplex, SubcomplexFamily,
};

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random complexes tried before falling back to a low-dimensional one.
const LERAY_ATTEMPTS: usize = 64;

fn random_subset(rng: &mut impl Rng, n: usize, size: usize) -> Face {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    idx[..size].iter().fold(0, |m, v| m | 1 << v)
}

/// Random nonempty complex on `n` vertices with up to `max_facets` facets of
/// size at most `max_size`.
pub fn random_complex(
    rng: &mut impl Rng,
    n: usize,
    max_facets: usize,
    max_size: usize,
) -> SimplicialComplex {
    let k = rng.gen_range(1..=max_facets.max(1));
    let top = max_size.clamp(1, n);
    let facets = (0..k)
        .map(|_| {
            let size = rng.gen_range(1..=top);
            random_subset(rng, n, size)
        })
        .collect();
    SimplicialComplex::from_masks(SimplicialComplex::numbered_vertices(n), facets)
        .expect("masks fit")
}

/// Random `d`-Leray complex on `n` vertices: random complexes are filtered
/// through the Leray test, falling back to one of dimension below `d` (a
/// single simplex when `d = 0`).
pub fn random_leray_complex(
    rng: &mut impl Rng,
    n: usize,
    d: usize,
    field: Field,
) -> Result<SimplicialComplex> {
    for _ in 0..LERAY_ATTEMPTS {
        let c = random_complex(rng, n, n + 2, n);
        if is_leray(&c, d, field)?.leray {
            return Ok(c);
        }
    }
    if d == 0 {
        return Ok(random_complex(rng, n, 1, n));
    }
    Ok(random_complex(rng, n, n + 2, d))
}

/// Coloring of `n` variables by `1..=r` using every color.
pub fn random_coloring(rng: &mut impl Rng, n: usize, r: usize) -> Result<Vec<usize>> {
    if r == 0 || r > n {
        return Err(Error::Invalid(format!(
            "cannot color {n} variables with all of {r} colors"
        )));
    }
    let mut colors: Vec<usize> = (1..=r)
        .chain((r..n).map(|_| rng.gen_range(1..=r)))
        .collect();
    colors.shuffle(rng);
    Ok(colors)
}

/// `I_Δ` of a random `d`-Leray complex on `n` vertices, colored by `r`
/// colors so that each color class contains a minimal nonface. `None` when
/// the complex has fewer than `r` disjoint minimal nonfaces.
pub fn leray_squarefree_ideal(
    rng: &mut impl Rng,
    n: usize,
    d: usize,
    r: usize,
    field: Field,
) -> Result<Option<(SimplicialComplex, MonomialIdeal)>> {
    let c = random_leray_complex(rng, n, d, field)?;
    let mut nonfaces = c.minimal_nonfaces();
    nonfaces.shuffle(rng);
    let mut chosen: Vec<Face> = Vec::new();
    for f in nonfaces {
        if chosen.len() < r && chosen.iter().all(|g| g & f == 0) {
            chosen.push(f);
        }
    }
    if chosen.len() < r {
        return Ok(None);
    }
    let mut colors = vec![0; n];
    for (k, f) in chosen.iter().enumerate() {
        for v in bits(*f) {
            colors[v] = k + 1;
        }
    }
    for c in colors.iter_mut().filter(|c| **c == 0) {
        *c = rng.gen_range(1..=r);
    }
    let ring = ColoredRing::new(variable_names("x", n), colors)?;
    let i = stanley_reisner_ideal(&c, &ring)?;
    Ok(Some((c, i)))
}

fn variable_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

/// Random monomial ideal in `n` finely graded variables with up to `ngens`
/// generators of degree `1..=max_degree`.
pub fn random_monomial_ideal(
    rng: &mut impl Rng,
    n: usize,
    ngens: usize,
    max_degree: u32,
) -> Result<MonomialIdeal> {
    let ring = ColoredRing::numbered("x", n);
    let k = rng.gen_range(1..=ngens.max(1));
    let gens = (0..k)
        .map(|_| {
            let deg = rng.gen_range(1..=max_degree.max(1));
            let mut e = vec![0u32; n];
            for _ in 0..deg {
                e[rng.gen_range(0..n)] += 1;
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(ring, gens)
}

/// Random squarefree monomial ideal in `n` finely graded variables.
pub fn random_squarefree_ideal(
    rng: &mut impl Rng,
    n: usize,
    ngens: usize,
) -> Result<MonomialIdeal> {
    let ring = ColoredRing::numbered("x", n);
    let k = rng.gen_range(1..=ngens.max(1));
    let gens = (0..k)
        .map(|_| {
            let size = rng.gen_range(1..=n);
            Monomial::from_mask(n, random_subset(rng, n, size))
        })
        .collect();
    MonomialIdeal::new(ring, gens)
}

/// `𝔪^{d+1}` in `k[y_1, …, y_r]`.
pub fn m_power(r: usize, d: u32) -> MonomialIdeal {
    power_of_maximal_ideal(&ColoredRing::standard(r), d + 1)
}

/// A colored ideal generated in degree `d + 1` with linear resolution and an
/// element of each pure color: the truncation of a `(d+1)`-regular
/// Stanley–Reisner ideal.
pub fn linear_colored_ideal(
    rng: &mut impl Rng,
    n: usize,
    d: usize,
    r: usize,
    field: Field,
) -> Result<Option<MonomialIdeal>> {
    Ok(leray_squarefree_ideal(rng, n, d, r, field)?.map(|(_, i)| truncate(&i, d as u32 + 1)))
}

/// Random colored monomial ideal on `n` variables and `r` colors containing a
/// pure power of some variable of every color.
pub fn random_colored_ideal(
    rng: &mut impl Rng,
    n: usize,
    r: usize,
    extra: usize,
    max_degree: u32,
) -> Result<MonomialIdeal> {
    let ring = ColoredRing::new(variable_names("x", n), random_coloring(rng, n, r)?)?;
    let mut gens = Vec::new();
    for c in 1..=r {
        let class = ring.class(c);
        let v = class[rng.gen_range(0..class.len())];
        let mut e = vec![0u32; n];
        e[v] = rng.gen_range(1..=max_degree.max(1));
        gens.push(Monomial::new(e));
    }
    for _ in 0..extra {
        let deg = rng.gen_range(1..=max_degree.max(1));
        let mut e = vec![0u32; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        gens.push(Monomial::new(e));
    }
    MonomialIdeal::new(ring, gens)
}

/// Image of `i` under a random unitriangular change of coordinates within
/// each color class, `x_v ↦ x_v + Σ c_w x_w` over later `w` of the same
/// color. The result has the same multigraded Betti numbers.
pub fn color_preserving_substitution(
    rng: &mut impl Rng,
    i: &MultigradedIdeal,
) -> Result<MultigradedIdeal> {
    let ring = i.ring();
    let field = i.field();
    let n = ring.nvars();
    let images: Vec<Polynomial> = (0..n)
        .map(|v| {
            let terms = (v..n)
                .filter(|w| ring.color_of(*w) == ring.color_of(v))
                .map(|w| {
                    let c = if w == v { 1 } else { rng.gen_range(-3..=3) };
                    (Monomial::var(n, w), field.from_i64(c))
                });
            Polynomial::new(field, n, terms)
        })
        .collect::<Result<_>>()?;
    i.substitute(&images)
}

/// `m` random members over the vertices of `ambient`; colored by `1..=r`
/// when `r > 0`.
pub fn random_family<A: Ambient>(
    rng: &mut impl Rng,
    ambient: A,
    m: usize,
    r: usize,
) -> Result<SubcomplexFamily<A>> {
    let n = ambient.vertex_labels().len();
    let colors = if r > 0 {
        Some(random_coloring(rng, m.max(r), r)?)
    } else {
        None
    };
    let members = (0..m)
        .map(|k| FamilyMember {
            label: format!("C{}", k + 1),
            vertices: rng.gen_range(0..=full_mask(n)),
            color: colors.as_ref().map(|c| c[k]),
        })
        .collect();
    SubcomplexFamily::new(ambient, members)
}

/// The full simplex on the generators of `i`, each vertex labeled by its
/// generator. Its cellular complex is the Taylor resolution.
pub fn taylor_labeling(i: &MonomialIdeal) -> Result<LabeledComplex> {
    let k = i.generators().len();
    if k == 0 {
        return Err(Error::ZeroIdeal);
    }
    let simplex = SimplicialComplex::simplex((1..=k).map(|j| format!("g{j}")).collect());
    LabeledComplex::new(
        CellComplex::from_simplicial(&simplex),
        i.ring().clone(),
        i.generators().to_vec(),
    )
}

/// Random complex on `k` vertices labeled by random monomials in `n`
/// finely graded variables of degree at most `max_degree`.
pub fn random_labeled_complex(
    rng: &mut impl Rng,
    k: usize,
    n: usize,
    max_degree: u32,
) -> Result<LabeledComplex> {
    let complex = random_complex(rng, k, k + 1, k);
    let ring = ColoredRing::numbered("x", n);
    let labels = (0..k)
        .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=max_degree)).collect()))
        .collect();
    LabeledComplex::new(CellComplex::from_simplicial(&complex), ring, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{betti_table_koszul, has_linear_resolution, regularity};

    const Q: Field = Field::Rationals;

    #[test]
    fn deterministic() {
        let a = random_leray_complex(&mut rng(1), 5, 1, Q).unwrap();
        let b = random_leray_complex(&mut rng(1), 5, 1, Q).unwrap();
        assert_eq!(a, b);
        assert!(is_leray(&a, 1, Q).unwrap().leray);
    }

    #[test]
    fn leray_ideal_is_regular_and_colored() {
        let mut found = 0;
        for seed in 0..20 {
            let Some((_, i)) = leray_squarefree_ideal(&mut rng(seed), 5, 1, 2, Q).unwrap() else {
                continue;
            };
            found += 1;
            let t = betti_table_koszul(&MultigradedIdeal::from_monomial(&i, Q), None).unwrap();
            assert!(regularity(&t).unwrap() <= 2);
            for c in 1..=2 {
                let mask = i.ring().class_mask(c);
                assert!(i.generators().iter().any(|g| g.support() & !mask == 0));
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn truncation_is_linear() {
        for seed in 0..10 {
            if let Some(j) = linear_colored_ideal(&mut rng(seed), 5, 1, 2, Q).unwrap() {
                let t = betti_table_koszul(&MultigradedIdeal::from_monomial(&j, Q), None).unwrap();
                assert!(has_linear_resolution(&t, 2), "{j}");
            }
        }
    }

    #[test]
    fn substitution_preserves_betti_numbers() {
        let i = random_colored_ideal(&mut rng(4), 4, 2, 2, 2).unwrap();
        let mi = MultigradedIdeal::from_monomial(&i, Q);
        let g = color_preserving_substitution(&mut rng(5), &mi).unwrap();
        let a = betti_table_koszul(&mi, None).unwrap();
        let b = betti_table_koszul(&g, None).unwrap();
        assert_eq!(
            a.entries().collect::<Vec<_>>(),
            b.entries().collect::<Vec<_>>()
        );
    }

    #[test]
    fn taylor_labels_are_generators() {
        let i = MonomialIdeal::parse(ColoredRing::numbered("x", 2), &["x1^2", "x1*x2"]).unwrap();
        let l = taylor_labeling(&i).unwrap();
        assert_eq!(l.label_ideal(), i);
        assert_eq!(m_power(3, 2).generators().len(), 10);
    }
}
