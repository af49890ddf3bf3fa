//! Checkers for the colorful Helly statements and their algebraic versions.
//!
//! Each checker verifies its hypotheses first and reports `Inconclusive`
//! when they fail or a degree cap is hit. `Fail` means the conclusion was
//! violated on an instance satisfying the hypotheses, which would indicate a
//! bug somewhere in the pipeline.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::betti::{betti_table_koszul, has_linear_resolution, regularity, BettiTable, Koszul};
use crate::error::{Error, Result};
use crate::exactla::{Field, Scalar};
use crate::monomial::{
    binomial, complex_from_squarefree_ideal, contained_in_variable_prime, monomials_of_degree,
    power_of_maximal_ideal, ColoredRing, Monomial, MonomialIdeal, Multidegree,
};
use crate::multigraded::{ideal_piece_dim, MultigradedIdeal};
use crate::simplicial::{alexander_dual, bits, is_leray, Face, SimplicialComplex};

/// Variable count above which the Leray hypothesis is not enumerated.
pub const HYPOTHESIS_VARIABLE_CAP: usize = 20;
/// Random specialization draws from `1..=LAMBDA_RANGE`.
pub const LAMBDA_RANGE: i64 = 65536;
pub const LAMBDA_RESAMPLES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    ColorfulMonomial,
    ColorfulPrimes,
    Idcol,
    SyzygyBound,
    RegularityComparison,
    LinearSpecialization,
    MaximalPowerUniqueness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `dim (Ω^l)_a` found against the required lower bound.
    Dimension {
        degree: Multidegree,
        l: usize,
        found: usize,
        required: u64,
    },
    Monomial {
        monomial: String,
    },
    Prime {
        variables: Vec<String>,
    },
    Regularity {
        ideal: u32,
        image: u32,
    },
    /// A hypothesis that was verified, with what verified it.
    Hypothesis {
        name: String,
        detail: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub theorem: TheoremId,
    pub digest: String,
    pub verdict: Verdict,
    pub certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    fn start(theorem: TheoremId, instance: &str) -> (Self, Instant) {
        let digest = format!("{:x}", Sha256::digest(instance.as_bytes()));
        (
            CheckReport {
                theorem,
                digest,
                verdict: Verdict::Pass,
                certificates: Vec::new(),
                reason: None,
                seed: None,
                elapsed_ms: 0,
            },
            Instant::now(),
        )
    }

    fn finish(mut self, t: Instant) -> Self {
        self.elapsed_ms = t.elapsed().as_millis() as u64;
        self
    }

    fn stop(mut self, t: Instant, verdict: Verdict, reason: impl Into<String>) -> Self {
        self.verdict = verdict;
        self.reason = Some(reason.into());
        self.finish(t)
    }

    fn hypothesis(&mut self, name: &str, detail: impl Into<String>) {
        self.certificates.push(Certificate::Hypothesis {
            name: name.into(),
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Runs `f`, turning a cap-boundary error into `Ok(Err(msg))`.
fn capped<T>(r: Result<T>) -> Result<std::result::Result<T, String>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e @ Error::InconclusiveAtCap { .. }) => Ok(Err(e.to_string())),
        Err(e) => Err(e),
    }
}

fn class_masks(ring: &ColoredRing) -> Vec<Face> {
    (1..=ring.ncolors()).map(|c| ring.class_mask(c)).collect()
}

/// All sets with exactly one variable from each color class.
fn transversals(ring: &ColoredRing) -> Vec<Face> {
    let mut out = vec![0u64];
    for c in 1..=ring.ncolors() {
        let class = ring.class(c);
        out = out
            .iter()
            .flat_map(|m| class.iter().map(move |v| m | 1 << v))
            .collect();
    }
    out
}

fn names(ring: &ColoredRing, mask: Face) -> Vec<String> {
    bits(mask).map(|v| ring.name(v).to_string()).collect()
}

/// Shared gating for the two squarefree checkers.
fn squarefree_gate(
    report: &mut CheckReport,
    i: &MonomialIdeal,
    d: usize,
) -> Result<Option<String>> {
    if !i.is_squarefree() {
        return Err(Error::NotSquarefree(i.to_string()));
    }
    let ring = i.ring();
    if ring.ncolors() != d + 1 {
        return Ok(Some(format!(
            "{} colors, but the statement needs d + 1 = {}",
            ring.ncolors(),
            d + 1
        )));
    }
    if ring.nvars() > HYPOTHESIS_VARIABLE_CAP {
        return Ok(Some(format!(
            "{} variables exceed the hypothesis enumeration cap {HYPOTHESIS_VARIABLE_CAP}",
            ring.nvars()
        )));
    }
    if i.is_zero() || i.is_unit() {
        return Ok(Some("zero or unit ideal".into()));
    }
    report.hypothesis("colors", format!("{} colors = d + 1", ring.ncolors()));
    Ok(None)
}

fn leray_gate(
    report: &mut CheckReport,
    c: &SimplicialComplex,
    d: usize,
    field: Field,
    what: &str,
) -> Result<Option<String>> {
    if c.is_void() {
        return Ok(Some(format!("{what} is void")));
    }
    let l = is_leray(c, d, field)?;
    if !l.leray {
        let (set, deg) = l.witness.expect("non-Leray carries a witness");
        return Ok(Some(format!(
            "{what} is not {d}-Leray: H~_{deg} of the restriction to {{{}}} is nonzero",
            set.join(",")
        )));
    }
    report.hypothesis("leray", format!("{what} is {d}-Leray"));
    Ok(None)
}

/// If the Stanley–Reisner complex of `i` is `d`-Leray and `i` has a monomial
/// of each pure color `1..=d+1`, then `i` has a squarefree monomial with one
/// variable of each color.
pub fn check_colorful_monomial(i: &MonomialIdeal, d: usize, field: Field) -> Result<CheckReport> {
    let (mut report, t) = CheckReport::start(
        TheoremId::ColorfulMonomial,
        &format!("{}d: {d}\n", i.to_text()),
    );
    if let Some(why) = squarefree_gate(&mut report, i, d)? {
        return Ok(report.stop(t, Verdict::Inconclusive, why));
    }
    let ring = i.ring();
    let delta = complex_from_squarefree_ideal(i)?;
    if let Some(why) = leray_gate(&mut report, &delta, d, field, "the complex of the ideal")? {
        return Ok(report.stop(t, Verdict::Inconclusive, why));
    }
    for (c, mask) in class_masks(ring).into_iter().enumerate() {
        match i.generators().iter().find(|g| g.support() & !mask == 0) {
            Some(g) => report.hypothesis(
                "pure color",
                format!("color {}: {}", c + 1, ring.fmt_monomial(g)),
            ),
            None => {
                return Ok(report.stop(
                    t,
                    Verdict::Inconclusive,
                    format!("no monomial of pure color {}", c + 1),
                ));
            }
        }
    }
    // A rainbow multiple exists iff some generator uses each color at most once.
    let masks = class_masks(ring);
    let found = i
        .generators()
        .iter()
        .find(|g| masks.iter().all(|m| (g.support() & m).count_ones() <= 1));
    match found {
        Some(g) => {
            let mut support = g.support();
            for m in &masks {
                if support & m == 0 {
                    support |= 1 << m.trailing_zeros();
                }
            }
            let mono = Monomial::from_mask(ring.nvars(), support);
            report.certificates.push(Certificate::Monomial {
                monomial: ring.fmt_monomial(&mono),
            });
            Ok(report.finish(t))
        }
        None => Ok(report.stop(
            t,
            Verdict::Fail,
            "no squarefree monomial with one variable of each color",
        )),
    }
}

/// If the Alexander dual of the complex of `i` (the nerve) is `d`-Leray and
/// `i` lies in every single-color variable prime, then `i` lies in a prime
/// generated by one variable of each color.
pub fn check_colorful_primes(i: &MonomialIdeal, d: usize, field: Field) -> Result<CheckReport> {
    let (mut report, t) = CheckReport::start(
        TheoremId::ColorfulPrimes,
        &format!("{}d: {d}\n", i.to_text()),
    );
    if let Some(why) = squarefree_gate(&mut report, i, d)? {
        return Ok(report.stop(t, Verdict::Inconclusive, why));
    }
    let ring = i.ring();
    let nerve = alexander_dual(&complex_from_squarefree_ideal(i)?);
    if let Some(why) = leray_gate(&mut report, &nerve, d, field, "the dual complex")? {
        return Ok(report.stop(t, Verdict::Inconclusive, why));
    }
    for (c, mask) in class_masks(ring).into_iter().enumerate() {
        if !contained_in_variable_prime(i, mask) {
            return Ok(report.stop(
                t,
                Verdict::Inconclusive,
                format!("ideal not contained in the prime of color {}", c + 1),
            ));
        }
        report.hypothesis(
            "color prime",
            format!("contained in <{}>", names(ring, mask).join(",")),
        );
    }
    match transversals(ring)
        .into_iter()
        .find(|m| contained_in_variable_prime(i, *m))
    {
        Some(m) => {
            report.certificates.push(Certificate::Prime {
                variables: names(ring, m),
            });
            Ok(report.finish(t))
        }
        None => Ok(report.stop(t, Verdict::Fail, "no rainbow prime contains the ideal")),
    }
}

/// Pure-color generators, one per color, or the first missing color.
fn pure_color_generators(i: &MultigradedIdeal) -> std::result::Result<Vec<Multidegree>, usize> {
    (0..i.ring().ncolors())
        .map(|c| {
            i.generators()
                .map(|(_, d)| d)
                .filter(|d| d.is_pure(c) && d.total() > 0)
                .min_by_key(|d| d.total())
                .cloned()
                .ok_or(c + 1)
        })
        .collect()
}

fn pure_color_gate(report: &mut CheckReport, i: &MultigradedIdeal) -> Option<String> {
    match pure_color_generators(i) {
        Ok(degs) => {
            for (c, a) in degs.iter().enumerate() {
                let dim = ideal_piece_dim(i, a);
                report.hypothesis("pure color", format!("color {}: dim I_{a} = {dim}", c + 1));
            }
            None
        }
        Err(c) => Some(format!("no element of pure color {c}")),
    }
}

fn regularity_of(
    i: &MultigradedIdeal,
    cap: Option<u32>,
) -> Result<std::result::Result<(BettiTable, u32), String>> {
    let t = betti_table_koszul(i, cap)?;
    Ok(capped(regularity(&t))?.map(|r| (t, r)))
}

fn instance_text(i: &MultigradedIdeal, d: usize) -> String {
    format!("{}d: {d}\n", i.to_text())
}

/// For a `(d+1)`-regular ideal with an element of each pure color, every
/// color vector of total `d + 1` occurs in `I`.
pub fn check_idcol(i: &MultigradedIdeal, d: usize, cap: Option<u32>) -> Result<CheckReport> {
    let (mut report, t) = CheckReport::start(TheoremId::Idcol, &instance_text(i, d));
    if let Some(why) = pure_color_gate(&mut report, i) {
        return Ok(report.stop(t, Verdict::Inconclusive, why));
    }
    let reg = match regularity_of(i, cap)? {
        Ok((_, r)) => r,
        Err(why) => return Ok(report.stop(t, Verdict::Inconclusive, why)),
    };
    if reg > d as u32 + 1 {
        return Ok(report.stop(
            t,
            Verdict::Inconclusive,
            format!("regularity {reg} exceeds d + 1 = {}", d + 1),
        ));
    }
    report.hypothesis("regularity", format!("reg I = {reg} <= {}", d + 1));
    let mut failed = None;
    for a in Multidegree::all_of_total(i.ring().ncolors(), d as u32 + 1) {
        let dim = ideal_piece_dim(i, &a);
        if dim == 0 && failed.is_none() {
            failed = Some(a.clone());
        }
        report.certificates.push(Certificate::Dimension {
            degree: a,
            l: 1,
            found: dim,
            required: 1,
        });
    }
    match failed {
        Some(a) => Ok(report.stop(t, Verdict::Fail, format!("I_{a} = 0"))),
        None => Ok(report.finish(t)),
    }
}

/// For an ideal generated in degree `d + 1` with linear resolution and an
/// element of each pure color: `dim (Ω^l)_a ≥ binom(s - 1, l - 1)` for all
/// `l = 1..=r` and `|a| = d + l`, where `s` is the support size of `a`.
pub fn check_syzygy_bound(i: &MultigradedIdeal, d: usize, cap: Option<u32>) -> Result<CheckReport> {
    let (mut report, t) = CheckReport::start(TheoremId::SyzygyBound, &instance_text(i, d));
    let d1 = d as u32 + 1;
    if i.is_zero() || i.generators().any(|(_, a)| a.total() != d1) {
        return Ok(report.stop(
            t,
            Verdict::Inconclusive,
            format!("not generated in degree {d1}"),
        ));
    }
    if let Some(why) = pure_color_gate(&mut report, i) {
        return Ok(report.stop(t, Verdict::Inconclusive, why));
    }
    let table = match regularity_of(i, cap)? {
        Ok((table, _)) => table,
        Err(why) => return Ok(report.stop(t, Verdict::Inconclusive, why)),
    };
    if !has_linear_resolution(&table, d1) {
        return Ok(report.stop(t, Verdict::Inconclusive, "resolution is not linear"));
    }
    report.hypothesis(
        "linear",
        format!("generated in degree {d1} with linear resolution"),
    );
    let k = Koszul::new(i)?;
    let r = i.ring().ncolors();
    let mut failed = None;
    for l in 1..=r {
        for a in Multidegree::all_of_total(r, d as u32 + l as u32) {
            let found = k.syzygy_piece_dim(l, &a)?;
            let required = binomial(a.support() as u64 - 1, l as u64 - 1);
            if (found as u64) < required && failed.is_none() {
                failed = Some((l, a.clone()));
            }
            report.certificates.push(Certificate::Dimension {
                degree: a,
                l,
                found,
                required,
            });
        }
    }
    match failed {
        Some((l, a)) => Ok(report.stop(
            t,
            Verdict::Fail,
            format!("dim (Omega^{l})_{a} below the bound"),
        )),
        None => Ok(report.finish(t)),
    }
}

/// The values `λ(x)` for the specialization `x ↦ λ(x) y_{color(x)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lambda {
    Explicit(Vec<Scalar>),
    Random { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    /// Ideal of `k[y_1, …, y_r]`.
    pub image: MonomialIdeal,
    pub lambda: Vec<Scalar>,
    /// Number of λ draws used; 1 for explicit λ.
    pub attempts: usize,
}

/// Coefficient of `y^a` in the image of a homogeneous generator.
fn image_coefficient(g: &crate::multigraded::Polynomial, lambda: &[Scalar]) -> Scalar {
    let field = g.field();
    let mut total = field.zero();
    for (m, c) in g.terms() {
        let mut term = c.clone();
        for (v, e) in m.exps().iter().enumerate() {
            for _ in 0..*e {
                term = &term * &lambda[v];
            }
        }
        total = &total + &term;
    }
    total
}

fn specialize_with(i: &MultigradedIdeal, lambda: &[Scalar]) -> (MonomialIdeal, bool) {
    let ring = ColoredRing::standard(i.ring().ncolors());
    let mut gens = Vec::new();
    let mut all_nonzero = true;
    for (g, a) in i.generators() {
        if image_coefficient(g, lambda).is_zero() {
            all_nonzero = false;
        } else {
            gens.push(Monomial::new(a.0.clone()));
        }
    }
    (
        MonomialIdeal::new(ring, gens).expect("image lives in T"),
        all_nonzero,
    )
}

/// `p_λ(I)`: generator `g` of color vector `a` maps to `c · y^a`, and
/// contributes `y^a` when `c ≠ 0`. Random λ is redrawn until no generator
/// vanishes.
pub fn specialize(i: &MultigradedIdeal, lambda: &Lambda) -> Result<Specialization> {
    let field = i.field();
    let n = i.ring().nvars();
    match lambda {
        Lambda::Explicit(values) => {
            if values.len() != n {
                return Err(Error::Invalid(format!(
                    "{} lambda values for {n} variables",
                    values.len()
                )));
            }
            if let Some(v) = values.iter().find(|v| v.field() != field) {
                return Err(Error::FieldMismatch(field, v.field()));
            }
            if values.iter().any(Scalar::is_zero) {
                return Err(Error::Invalid("lambda values must be nonzero".into()));
            }
            let (image, _) = specialize_with(i, values);
            Ok(Specialization {
                image,
                lambda: values.clone(),
                attempts: 1,
            })
        }
        Lambda::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            for attempt in 1..=LAMBDA_RESAMPLES {
                let values: Vec<Scalar> = (0..n)
                    .map(|_| field.from_i64(rng.gen_range(1..=LAMBDA_RANGE)))
                    .collect();
                if values.iter().any(Scalar::is_zero) {
                    continue;
                }
                let (image, ok) = specialize_with(i, &values);
                if ok {
                    return Ok(Specialization {
                        image,
                        lambda: values,
                        attempts: attempt,
                    });
                }
            }
            Err(Error::DegenerateSpecialization(LAMBDA_RESAMPLES))
        }
    }
}

/// Pure powers of every `y_c` in a monomial ideal of `T`, or the first
/// missing color.
fn has_pure_powers(j: &MonomialIdeal) -> std::result::Result<(), usize> {
    for c in 0..j.ring().nvars() {
        if !j.generators().iter().any(|g| g.support() == 1 << c) {
            return Err(c + 1);
        }
    }
    Ok(())
}

fn lambda_seed(lambda: &Lambda) -> Option<u64> {
    match lambda {
        Lambda::Random { seed } => Some(*seed),
        Lambda::Explicit(_) => None,
    }
}

/// For `J ⊇ p_λ(I)` with λ general enough that every pure color survives:
/// `reg J ≤ reg I`.
pub fn check_regularity_comparison(
    i: &MultigradedIdeal,
    j: &MonomialIdeal,
    lambda: &Lambda,
    cap: Option<u32>,
) -> Result<CheckReport> {
    let text = format!("{}target:\n{}", i.to_text(), j.to_text());
    let (mut report, t) = CheckReport::start(TheoremId::RegularityComparison, &text);
    report.seed = lambda_seed(lambda);
    if j.ring().nvars() != i.ring().ncolors() {
        return Err(Error::Invalid(format!(
            "target ring has {} variables, expected one per color ({})",
            j.ring().nvars(),
            i.ring().ncolors()
        )));
    }
    if let Some(why) = pure_color_gate(&mut report, i) {
        return Ok(report.stop(t, Verdict::Inconclusive, why));
    }
    let sp = specialize(i, lambda)?;
    if let Err(c) = has_pure_powers(&sp.image) {
        return Ok(report.stop(
            t,
            Verdict::Inconclusive,
            format!("pure color {c} vanishes under lambda"),
        ));
    }
    report.hypothesis(
        "general lambda",
        format!("image {} contains a pure power of each y", sp.image),
    );
    let image = sp.image.with_ring(j.ring().clone())?;
    if !image.is_subset_of(j) {
        return Ok(report.stop(
            t,
            Verdict::Inconclusive,
            "target does not contain the image",
        ));
    }
    report.hypothesis("containment", "target contains the image");
    let reg_i = match regularity_of(i, cap)? {
        Ok((_, r)) => r,
        Err(why) => return Ok(report.stop(t, Verdict::Inconclusive, why)),
    };
    let tj = betti_table_koszul(&MultigradedIdeal::from_monomial(j, i.field()), None)?;
    let reg_j = regularity(&tj)?;
    report.certificates.push(Certificate::Regularity {
        ideal: reg_i,
        image: reg_j,
    });
    if reg_j > reg_i {
        return Ok(report.stop(
            t,
            Verdict::Fail,
            format!("reg J = {reg_j} > reg I = {reg_i}"),
        ));
    }
    Ok(report.finish(t))
}

/// If `I` has linear resolution and an element of each pure color, so does
/// `p_λ(I)` for general λ.
pub fn check_linear_specialization(
    i: &MultigradedIdeal,
    lambda: &Lambda,
    cap: Option<u32>,
) -> Result<CheckReport> {
    let (mut report, t) = CheckReport::start(TheoremId::LinearSpecialization, &i.to_text());
    report.seed = lambda_seed(lambda);
    if let Some(why) = pure_color_gate(&mut report, i) {
        return Ok(report.stop(t, Verdict::Inconclusive, why));
    }
    let degree = i.max_generator_degree();
    if i.generators().any(|(_, a)| a.total() != degree) {
        return Ok(report.stop(t, Verdict::Inconclusive, "generators of mixed degree"));
    }
    let table = match regularity_of(i, cap)? {
        Ok((table, _)) => table,
        Err(why) => return Ok(report.stop(t, Verdict::Inconclusive, why)),
    };
    if !has_linear_resolution(&table, degree) {
        return Ok(report.stop(t, Verdict::Inconclusive, "resolution is not linear"));
    }
    report.hypothesis("linear", format!("linear resolution in degree {degree}"));
    let sp = specialize(i, lambda)?;
    if let Err(c) = has_pure_powers(&sp.image) {
        return Ok(report.stop(
            t,
            Verdict::Inconclusive,
            format!("pure color {c} vanishes under lambda"),
        ));
    }
    let tj = betti_table_koszul(&MultigradedIdeal::from_monomial(&sp.image, i.field()), None)?;
    let reg_j = regularity(&tj)?;
    report.certificates.push(Certificate::Regularity {
        ideal: degree,
        image: reg_j,
    });
    report.certificates.push(Certificate::Monomial {
        monomial: sp.image.to_string(),
    });
    if !has_linear_resolution(&tj, degree) {
        return Ok(report.stop(
            t,
            Verdict::Fail,
            format!("image {} is not {degree}-linear", sp.image),
        ));
    }
    Ok(report.finish(t))
}

/// Largest `(r, d)` swept exhaustively.
pub const UNIQUENESS_MAX_R: usize = 3;
pub const UNIQUENESS_MAX_D: u32 = 2;

/// Among monomial ideals of `k[y_1..y_r]` generated in degree `d + 1` and
/// containing every `y_i^{d+1}`, only `𝔪^{d+1}` has linear resolution.
pub fn check_mdplus1_uniqueness(r: usize, d: u32, field: Field) -> Result<CheckReport> {
    if r == 0 || r > UNIQUENESS_MAX_R || d > UNIQUENESS_MAX_D {
        return Err(Error::Invalid(format!(
            "exhaustive sweep supports 1 <= r <= {UNIQUENESS_MAX_R}, d <= {UNIQUENESS_MAX_D}"
        )));
    }
    let (mut report, t) = CheckReport::start(
        TheoremId::MaximalPowerUniqueness,
        &format!("r: {r}\nd: {d}\n"),
    );
    let ring = ColoredRing::standard(r);
    let all = monomials_of_degree(r, d + 1);
    let (pure, mixed): (Vec<Monomial>, Vec<Monomial>) =
        all.into_iter().partition(|m| m.support().count_ones() == 1);
    let full = power_of_maximal_ideal(&ring, d + 1);
    let mut linear = 0usize;
    for subset in 0u64..1 << mixed.len() {
        let gens: Vec<Monomial> = pure
            .iter()
            .cloned()
            .chain(bits(subset).map(|k| mixed[k].clone()))
            .collect();
        let j = MonomialIdeal::new(ring.clone(), gens)?;
        let table = betti_table_koszul(&MultigradedIdeal::from_monomial(&j, field), None)?;
        if has_linear_resolution(&table, d + 1) {
            linear += 1;
            if j != full {
                report.certificates.push(Certificate::Monomial {
                    monomial: j.to_string(),
                });
                return Ok(report.stop(
                    t,
                    Verdict::Fail,
                    format!("{j} is linear but not the full power"),
                ));
            }
        }
    }
    report.hypothesis(
        "sweep",
        format!(
            "{} candidates, {linear} with linear resolution",
            1u64 << mixed.len()
        ),
    );
    report.certificates.push(Certificate::Monomial {
        monomial: full.to_string(),
    });
    Ok(report.finish(t))
}
