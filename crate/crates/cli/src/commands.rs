use std::path::Path;

use helly_core::betti::{
    betti_squarefree_hochster, betti_table_koszul, eliahou_kervaire_complex,
    has_linear_resolution, projective_dimension, regularity, verify_free_complex_is_resolution,
};
use helly_core::cellular::{helly_bound_check, is_cellular_resolution};
use helly_core::generate::m_power;
use helly_core::monomial::{complex_from_squarefree_ideal, stanley_reisner_ideal};
use helly_core::simplicial::{is_leray, union_homology_dims, Ambient, HomologyDims};
use helly_core::text::{
    complex_to_text, parse_complex, parse_family, parse_ideal_over, parse_labeled_complex,
    parse_monomial_ideal, Family,
};
use helly_core::theorems::specialize as specialize_ideal;
use helly_core::{
    alexander_dual, nerve as nerve_of, reduced_homology_dims, BettiTable, ColoredRing, Face, MultigradedIdeal, SimplicialComplex, SubcomplexFamily,
};
use serde_json::{json, Value};

use crate::instances::{generate_text, Kind, Params};
use crate::output::{CliError, CliResult, Report, Status};
use crate::suite::{lambda_of, report_json, report_text, Job, Theorem};
use crate::{CheckCommand, Method, Options};

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: impl FnOnce(&str) -> helly_core::Result<T>) -> CliResult<T> {
    parse(&read(path)?).map_err(|e| CliError::in_file(path, e))
}

fn load_ideal(o: &Options, path: &Path) -> CliResult<MultigradedIdeal> {
    load(path, |s| parse_ideal_over(s, o.field))
}

fn members(mask: Face, labels: &[String]) -> Vec<String> {
    (0..labels.len())
        .filter(|v| mask >> v & 1 == 1)
        .map(|v| labels[v].clone())
        .collect()
}

fn homology_json(h: &HomologyDims) -> Value {
    h.iter()
        .map(|(i, d)| json!({ "degree": i, "dim": d }))
        .collect()
}

fn homology_text(h: &HomologyDims) -> String {
    if h.is_empty() {
        return "acyclic\n".into();
    }
    h.iter().map(|(i, d)| format!("H~_{i} = {d}\n")).collect()
}

fn facets_json(c: &SimplicialComplex) -> Value {
    json!(c.facet_labels())
}

pub fn homology(o: &Options, path: &Path) -> CliResult<Report> {
    let c = load(path, parse_complex)?;
    let h = reduced_homology_dims(&c, o.field())?;
    Ok(Report::new(homology_text(&h))
        .with("field", json!(o.field().to_string()))
        .with("homology", homology_json(&h))
        .with("acyclic", json!(h.is_empty())))
}

pub fn leray(o: &Options, path: &Path, d: usize) -> CliResult<Report> {
    let c = load(path, parse_complex)?;
    let l = is_leray(&c, d, o.field())?;
    let text = match &l.witness {
        None => format!("{d}-Leray\n"),
        Some((set, k)) => format!(
            "not {d}-Leray: H~_{k} of the restriction to {{{}}} is nonzero\n",
            set.join(",")
        ),
    };
    let witness = l
        .witness
        .as_ref()
        .map(|(set, k)| json!({ "restriction": set, "degree": k }));
    Ok(Report::new(text)
        .with("d", json!(d))
        .with("leray", json!(l.leray))
        .with("witness", json!(witness)))
}

fn nerve_report<A: Ambient>(o: &Options, f: &SubcomplexFamily<A>) -> CliResult<Report> {
    let field = o.field();
    let n = nerve_of(f);
    let union = union_homology_dims(f, field)?;
    let nerve_h = reduced_homology_dims(&n, field)?;
    let obstruction = f.proper_intersections_acyclic(field)?;
    let labels = f.index_labels();
    let agree = union == nerve_h;
    let mut text = complex_to_text(&n);
    text.push_str(&format!("# union: {}", homology_text(&union)));
    text.push_str(&format!("# nerve: {}", homology_text(&nerve_h)));
    match obstruction {
        None => text.push_str("# every nonempty intersection is acyclic\n"),
        Some(a) => text.push_str(&format!(
            "# intersection over {{{}}} is not acyclic\n",
            members(a, &labels).join(",")
        )),
    }
    // The nerve lemma applies when every nonempty intersection of members
    // is acyclic.
    let status = if obstruction.is_none() && !agree {
        Status::Fail
    } else {
        Status::Ok
    };
    Ok(Report::new(text)
        .with("nerve", facets_json(&n))
        .with("union_homology", homology_json(&union))
        .with("nerve_homology", homology_json(&nerve_h))
        .with("homology_agrees", json!(agree))
        .with(
            "non_acyclic_intersection",
            json!(obstruction.map(|a| members(a, &labels))),
        )
        .status(status))
}

pub fn nerve(o: &Options, path: &Path) -> CliResult<Report> {
    match load(path, parse_family)? {
        Family::Simplicial(f) => nerve_report(o, &f),
        Family::Cellular(f) => nerve_report(o, &f),
    }
}

pub fn dual(path: &Path) -> CliResult<Report> {
    let c = alexander_dual(&load(path, parse_complex)?);
    Ok(Report::new(complex_to_text(&c))
        .with("vertices", json!(c.vertices()))
        .with("facets", facets_json(&c))
        .with("complex", json!(complex_to_text(&c))))
}

/// Variable names for the vertices: the labels themselves when they are
/// usable names, `x1..xn` otherwise.
fn variable_names(c: &SimplicialComplex) -> Vec<String> {
    let usable = c.vertices().iter().all(|v| {
        v.chars().next().is_some_and(char::is_alphabetic)
            && v.chars().all(|ch| ch.is_alphanumeric() || ch == '_')
    });
    if usable {
        c.vertices().to_vec()
    } else {
        (1..=c.vertex_count()).map(|k| format!("x{k}")).collect()
    }
}

pub fn sr(
    complex: Option<&Path>,
    ideal: Option<&Path>,
    colors: Option<Vec<usize>>,
) -> CliResult<Report> {
    if let Some(path) = ideal {
        let i = load(path, parse_monomial_ideal)?;
        let c = complex_from_squarefree_ideal(&i)?;
        return Ok(Report::new(complex_to_text(&c))
            .with("vertices", json!(c.vertices()))
            .with("facets", facets_json(&c))
            .with("complex", json!(complex_to_text(&c))));
    }
    let path = complex.expect("clap requires one input");
    let c = load(path, parse_complex)?;
    let colors = colors.unwrap_or_else(|| vec![1; c.vertex_count()]);
    let ring = ColoredRing::new(variable_names(&c), colors)?;
    let i = stanley_reisner_ideal(&c, &ring)?;
    Ok(Report::new(i.to_text())
        .with("generators", json!(i.generator_strings()))
        .with("ideal", json!(i.to_text())))
}

fn table_text(t: &BettiTable) -> String {
    let mut s = t.diagram();
    for (i, a, b) in t.entries() {
        s.push_str(&format!("beta_{i},{a} = {b}\n"));
    }
    s
}

pub fn betti(o: &Options, path: &Path, method: Method) -> CliResult<Report> {
    let i = load_ideal(o, path)?;
    let t = match method {
        Method::Koszul => betti_table_koszul(&i, o.cap)?,
        Method::Hochster => {
            let m = i.as_monomial_ideal().ok_or_else(|| {
                CliError::Input(format!("{}: hochster needs a monomial ideal", path.display()))
            })?;
            betti_squarefree_hochster(&m, i.field())?
        }
    };
    let reg = regularity(&t)?;
    let pd = projective_dimension(&t)?;
    Ok(Report::new(table_text(&t))
        .with("field", json!(i.field().to_string()))
        .with("table", t.to_json())
        .with("regularity", json!(reg))
        .with("projective_dimension", json!(pd)))
}

pub fn regularity_cmd(o: &Options, path: &Path) -> CliResult<Report> {
    let i = load_ideal(o, path)?;
    let t = betti_table_koszul(&i, o.cap)?;
    let reg = regularity(&t)?;
    let top = i.max_generator_degree();
    let equigenerated = i.generators().all(|(_, a)| a.total() == top);
    let linear = equigenerated && has_linear_resolution(&t, top);
    Ok(Report::new(format!(
        "regularity {reg}\nlinear resolution: {}\n",
        if linear { "yes" } else { "no" }
    ))
    .with("regularity", json!(reg))
    .with("generator_degree", json!(top))
    .with("linear", json!(linear)))
}

pub fn ek(o: &Options, r: usize, d: u32, verify: bool) -> CliResult<Report> {
    let field = o.field();
    let f = eliahou_kervaire_complex(r, d, field)?;
    let ranks: Vec<usize> = f.terms().iter().map(Vec::len).collect();
    let mut text = ranks
        .iter()
        .enumerate()
        .map(|(p, k)| format!("F_{p}: rank {k}\n"))
        .collect::<String>();
    let report = Report::new(String::new())
        .with("r", json!(r))
        .with("d", json!(d))
        .with("ranks", json!(ranks));
    if !verify {
        return Ok(Report { text, ..report });
    }
    let cap = o.cap.unwrap_or(d + r as u32 + 1);
    let m = MultigradedIdeal::from_monomial(&m_power(r, d), field);
    let square = f.d_squared_failure();
    let check = verify_free_complex_is_resolution(&f, &m, cap)?;
    let t = betti_table_koszul(&m, Some(cap))?;
    let graded = f.graded_ranks();
    let betti_match = graded.entries().eq(t.entries());
    let mut parts = Vec::new();
    match square {
        None => parts.push("∂²=0".to_string()),
        Some((p, col)) => parts.push(format!("∂²≠0 at position {p}, column {col}")),
    }
    match &check.failure {
        None => parts.push("resolution verified".into()),
        Some(fl) => parts.push(format!(
            "not a resolution: {:?} at position {} in degree {}",
            fl.kind, fl.position, fl.degree
        )),
    }
    parts.push(if betti_match { "betti match" } else { "betti mismatch" }.into());
    text.push_str(&parts.join(", "));
    text.push('\n');
    let ok = square.is_none() && check.is_resolution() && betti_match;
    Ok(Report {
        text,
        ..report
            .with("d_squared_zero", json!(square.is_none()))
            .with("resolution", json!(check.is_resolution()))
            .with("failure", json!(check.failure))
            .with("degrees_checked", json!(check.degrees_checked))
            .with("betti_match", json!(betti_match))
            .with("cap", json!(cap))
            .status(if ok { Status::Ok } else { Status::Fail })
    })
}

pub fn cellular_check(o: &Options, path: &Path, helly_d: Option<usize>) -> CliResult<Report> {
    let field = o.field();
    let l = load(path, parse_labeled_complex)?;
    let c = is_cellular_resolution(&l, field)?;
    let witness = c.witness.as_ref().map(|b| l.ring().fmt_monomial(b));
    let mut text = match &witness {
        None => format!(
            "cellular resolution ({} lattice points checked)\n",
            c.lattice_points
        ),
        Some(b) => format!("not a cellular resolution: X_<={b} is neither empty nor acyclic\n"),
    };
    let mut report = Report::new(String::new())
        .with("resolution", json!(c.resolution))
        .with("witness", json!(witness))
        .with("lattice_points", json!(c.lattice_points));
    let mut ok = c.resolution;
    if let (Some(d), true) = (helly_d, c.resolution) {
        let h = helly_bound_check(&l, d, field)?;
        text.push_str(&format!(
            "codim {} <= pd {}; largest minimal prime codim {} against bound {}: {}\n",
            h.codim,
            h.projective_dimension,
            h.max_prime_codim,
            h.bound,
            if h.holds { "holds" } else { "violated" }
        ));
        ok &= h.holds && h.codim_le_pd;
        report = report.with("helly", json!(h));
    }
    report.text = text;
    Ok(report.status(if ok { Status::Ok } else { Status::Fail }))
}

pub fn specialize(o: &Options, path: &Path, lambda: Option<Vec<i64>>) -> CliResult<Report> {
    let i = load_ideal(o, path)?;
    let lam = lambda_of(&lambda, i.field(), o.seed);
    let s = specialize_ideal(&i, &lam)?;
    let values: Vec<String> = s.lambda.iter().map(ToString::to_string).collect();
    let text = format!(
        "# lambda {} ({} draw{})\n{}",
        values.join(" "),
        s.attempts,
        if s.attempts == 1 { "" } else { "s" },
        s.image.to_text()
    );
    Ok(Report::new(text)
        .with("lambda", json!(values))
        .with("attempts", json!(s.attempts))
        .with("generators", json!(s.image.generator_strings()))
        .with("image", json!(s.image.to_text())))
}

pub fn check(o: &Options, cmd: CheckCommand) -> CliResult<Report> {
    let job = |theorem, ideal: Option<&Path>, d, r, lambda| -> CliResult<Job> {
        Ok(Job {
            theorem,
            ideal: ideal.map(|p| load_ideal(o, p)).transpose()?,
            target: None,
            d,
            r,
            lambda,
            field: o.field(),
            cap: o.cap,
            seed: o.seed,
        })
    };
    let job = match cmd {
        CheckCommand::Suite { manifest } => return crate::suite::run(o, &manifest),
        CheckCommand::ColorfulMonomial { ideal, d } => {
            job(Theorem::ColorfulMonomial, Some(&ideal), Some(d), None, None)?
        }
        CheckCommand::ColorfulPrimes { ideal, d } => {
            job(Theorem::ColorfulPrimes, Some(&ideal), Some(d), None, None)?
        }
        CheckCommand::Idcol { ideal, d } => job(Theorem::Idcol, Some(&ideal), Some(d), None, None)?,
        CheckCommand::SyzygyBound { ideal, d } => {
            job(Theorem::SyzygyBound, Some(&ideal), Some(d), None, None)?
        }
        CheckCommand::RegularityComparison {
            ideal,
            target,
            lambda,
        } => {
            let mut j = job(Theorem::RegularityComparison, Some(&ideal), None, None, lambda)?;
            j.target = target
                .map(|p| load(&p, parse_monomial_ideal))
                .transpose()?;
            j
        }
        CheckCommand::LinearSpecialization { ideal, lambda } => {
            job(Theorem::LinearSpecialization, Some(&ideal), None, None, lambda)?
        }
        CheckCommand::Uniqueness { r, d } => {
            job(Theorem::Uniqueness, None, Some(d as usize), Some(r), None)?
        }
    };
    let r = job.run()?;
    Ok(Report::new(report_text(&r))
        .with("report", report_json(&r, o.timing))
        .status(r.verdict.into()))
}

pub fn generate(
    o: &Options,
    kind: Kind,
    params: &Params,
    ideal: Option<&Path>,
    out: Option<&Path>,
) -> CliResult<Report> {
    let i = ideal.map(|p| load(p, parse_monomial_ideal)).transpose()?;
    let text = generate_text(kind, params, o.seed, o.field(), i.as_ref())?;
    let report = Report::new(String::new())
        .with("kind", json!(kind.name()))
        .with("seed", json!(o.seed))
        .with("instance", json!(text));
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| {
                CliError::Compute(format!("cannot write {}: {e}", path.display()))
            })?;
            Ok(Report {
                text: format!("wrote {}\n", path.display()),
                ..report.with("path", json!(path.display().to_string()))
            })
        }
        None => Ok(Report { text, ..report }),
    }
}
