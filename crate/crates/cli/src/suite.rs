//! Theorem jobs, from the command line or from a TOML manifest.
//!
//! ```toml
//! [[case]]
//! theorem = "idcol"
//! instance = "ci345.ideal"     # relative to the manifest
//! d = 8
//!
//! [[case]]
//! theorem = "syzygy-bound"
//! generator = "truncated-colored"
//! seed = 4
//! n = 5
//! d = 1
//! r = 2
//! ```

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use helly_core::text::{parse_ideal_over, parse_monomial_ideal};
use helly_core::theorems::{
    check_colorful_monomial, check_colorful_primes, check_idcol, check_linear_specialization,
    check_mdplus1_uniqueness, check_regularity_comparison, check_syzygy_bound, specialize,
};
use helly_core::{CheckReport, Field, Lambda, MonomialIdeal, MultigradedIdeal};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::instances::{generate_text, Kind, Params};
use crate::output::{CliError, CliResult, Report, Status};
use crate::Options;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    ColorfulMonomial,
    ColorfulPrimes,
    Idcol,
    SyzygyBound,
    RegularityComparison,
    LinearSpecialization,
    Uniqueness,
}

/// One checker invocation with its inputs already parsed.
pub struct Job {
    pub theorem: Theorem,
    pub ideal: Option<MultigradedIdeal>,
    pub target: Option<MonomialIdeal>,
    pub d: Option<usize>,
    pub r: Option<usize>,
    pub lambda: Option<Vec<i64>>,
    pub field: Field,
    pub cap: Option<u32>,
    pub seed: u64,
}

fn need<T: Copy>(v: Option<T>, what: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Input(format!("missing parameter {what}")))
}

pub fn lambda_of(values: &Option<Vec<i64>>, field: Field, seed: u64) -> Lambda {
    match values {
        Some(v) => Lambda::Explicit(v.iter().map(|x| field.from_i64(*x)).collect()),
        None => Lambda::Random { seed },
    }
}

fn monomial(i: &MultigradedIdeal) -> CliResult<MonomialIdeal> {
    i.as_monomial_ideal()
        .ok_or_else(|| CliError::Input("this check needs a monomial ideal".into()))
}

impl Job {
    pub fn run(&self) -> CliResult<CheckReport> {
        if self.theorem == Theorem::Uniqueness {
            let d = need(self.d, "d")?;
            return Ok(check_mdplus1_uniqueness(need(self.r, "r")?, d as u32, self.field)?);
        }
        let i = self
            .ideal
            .as_ref()
            .ok_or_else(|| CliError::Input("missing ideal".into()))?;
        let lambda = lambda_of(&self.lambda, i.field(), self.seed);
        let report = match self.theorem {
            Theorem::ColorfulMonomial => {
                check_colorful_monomial(&monomial(i)?, need(self.d, "d")?, i.field())?
            }
            Theorem::ColorfulPrimes => {
                check_colorful_primes(&monomial(i)?, need(self.d, "d")?, i.field())?
            }
            Theorem::Idcol => check_idcol(i, need(self.d, "d")?, self.cap)?,
            Theorem::SyzygyBound => check_syzygy_bound(i, need(self.d, "d")?, self.cap)?,
            Theorem::RegularityComparison => {
                let j = match &self.target {
                    Some(j) => j.clone(),
                    None => specialize(i, &lambda)?.image,
                };
                check_regularity_comparison(i, &j, &lambda, self.cap)?
            }
            Theorem::LinearSpecialization => check_linear_specialization(i, &lambda, self.cap)?,
            Theorem::Uniqueness => unreachable!("handled above"),
        };
        Ok(report)
    }
}

/// The report as JSON; wall-clock time only when asked for.
pub fn report_json(r: &CheckReport, timing: bool) -> Value {
    let mut v = r.to_json();
    if !timing {
        if let Some(m) = v.as_object_mut() {
            m.remove("elapsed_ms");
        }
    }
    v
}

pub fn report_text(r: &CheckReport) -> String {
    let v = report_json(r, false);
    let mut s = format!("{}: {}\n", v["theorem"].as_str().unwrap_or(""), v["verdict"].as_str().unwrap_or(""));
    if let Some(why) = &r.reason {
        s.push_str(&format!("  reason: {why}\n"));
    }
    for c in v["certificates"].as_array().into_iter().flatten() {
        s.push_str(&format!("  {c}\n"));
    }
    s
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    #[serde(rename = "case", default)]
    cases: Vec<Case>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Case {
    theorem: String,
    instance: Option<PathBuf>,
    generator: Option<String>,
    target: Option<PathBuf>,
    seed: Option<u64>,
    field: Option<String>,
    cap: Option<u32>,
    lambda: Option<Vec<i64>>,
    d: Option<usize>,
    r: Option<usize>,
    n: Option<usize>,
    gens: Option<usize>,
    degree: Option<u32>,
    extra: Option<usize>,
    members: Option<usize>,
    vars: Option<usize>,
}

const IDEAL_KINDS: [Kind; 6] = [
    Kind::LeraySquarefree,
    Kind::TruncatedColored,
    Kind::Colored,
    Kind::Monomial,
    Kind::Squarefree,
    Kind::MPower,
];

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

impl Case {
    fn source(&self, seed: u64) -> String {
        match (&self.instance, &self.generator) {
            (Some(p), _) => p.display().to_string(),
            (None, Some(g)) => format!("{g} seed {seed}"),
            (None, None) => String::new(),
        }
    }

    fn job(&self, dir: &Path, o: &Options) -> CliResult<Job> {
        let theorem = Theorem::from_str(&self.theorem, false)
            .map_err(|_| CliError::Input(format!("unknown theorem {:?}", self.theorem)))?;
        let field = match &self.field {
            Some(f) => f.parse().map_err(|e: helly_core::Error| CliError::Input(e.to_string()))?,
            None => o.field(),
        };
        let seed = self.seed.unwrap_or(o.seed);
        let ideal = match (&self.instance, &self.generator) {
            (Some(_), Some(_)) => {
                return Err(CliError::Input("give instance or generator, not both".into()))
            }
            (Some(p), None) => {
                let path = dir.join(p);
                let text = read(&path)?;
                Some(parse_ideal_over(&text, Some(field)).map_err(|e| CliError::in_file(&path, e))?)
            }
            (None, Some(g)) => {
                let kind = Kind::parse(g)?;
                if !IDEAL_KINDS.contains(&kind) {
                    return Err(CliError::Input(format!("generator {g:?} does not produce an ideal")));
                }
                let params = Params {
                    n: self.n,
                    d: self.d,
                    r: self.r,
                    gens: self.gens,
                    degree: self.degree,
                    extra: self.extra,
                    members: self.members,
                    vars: self.vars,
                };
                let text = generate_text(kind, &params, seed, field, None)?;
                Some(parse_ideal_over(&text, Some(field))?)
            }
            (None, None) => None,
        };
        let target = match &self.target {
            Some(p) => {
                let path = dir.join(p);
                Some(parse_monomial_ideal(&read(&path)?).map_err(|e| CliError::in_file(&path, e))?)
            }
            None => None,
        };
        Ok(Job {
            theorem,
            ideal,
            target,
            d: self.d,
            r: self.r,
            lambda: self.lambda.clone(),
            field,
            cap: self.cap.or(o.cap),
            seed,
        })
    }
}

pub fn run(o: &Options, manifest: &Path) -> CliResult<Report> {
    let text = read(manifest)?;
    let m: Manifest = toml::from_str(&text).map_err(|e| {
        let at = e
            .span()
            .map(|s| format!(":{}", text[..s.start].lines().count().max(1)))
            .unwrap_or_default();
        CliError::Input(format!("{}{at}: {}", manifest.display(), e.message()))
    })?;
    let dir = manifest.parent().unwrap_or(Path::new("."));
    let jobs = m
        .cases
        .iter()
        .enumerate()
        .map(|(k, c)| {
            c.job(dir, o)
                .map_err(|e| CliError::Input(format!("case {}: {e}", k + 1)))
        })
        .collect::<CliResult<Vec<Job>>>()?;
    let results: Vec<CliResult<CheckReport>> = jobs.par_iter().map(Job::run).collect();
    let mut status = Status::Ok;
    let mut counts = [0usize; 3];
    let mut cases = Vec::new();
    let mut text = String::new();
    for (k, (case, result)) in m.cases.iter().zip(results).enumerate() {
        let seed = case.seed.unwrap_or(o.seed);
        let r = result.map_err(|e| match e {
            CliError::Input(msg) => CliError::Input(format!("case {}: {msg}", k + 1)),
            other => other,
        })?;
        let s = Status::from(r.verdict);
        status = status.worst(s);
        counts[s.code() as usize] += 1;
        text.push_str(&format!("case {} ({}) ", k + 1, case.source(seed)));
        text.push_str(&report_text(&r));
        cases.push(json!({
            "case": k + 1,
            "source": case.source(seed),
            "report": report_json(&r, o.timing),
        }));
    }
    text.push_str(&format!(
        "{} pass, {} fail, {} inconclusive\n",
        counts[0], counts[1], counts[2]
    ));
    Ok(Report::new(text)
        .with("cases", Value::Array(cases))
        .with(
            "summary",
            json!({ "pass": counts[0], "fail": counts[1], "inconclusive": counts[2] }),
        )
        .status(status))
}
