use clap::{Args, ValueEnum};
use helly_core::generate::{
    leray_squarefree_ideal, linear_colored_ideal, m_power, random_colored_ideal, random_complex,
    random_family, random_labeled_complex, random_leray_complex, random_monomial_ideal,
    random_squarefree_ideal, rng, taylor_labeling,
};
use helly_core::text::{complex_to_text, family_to_text, Family};
use helly_core::{Field, MonomialIdeal};

use crate::output::{CliError, CliResult};

/// Retries for generators that can come up empty on a draw.
const DRAWS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Colored squarefree ideal whose complex is d-Leray.
    LeraySquarefree,
    /// The same, truncated to degree d+1.
    TruncatedColored,
    /// Colored monomial ideal containing a pure power of every color.
    Colored,
    Monomial,
    Squarefree,
    /// (d+1)-st power of the maximal ideal of k[y1..yr].
    MPower,
    Complex,
    LerayComplex,
    /// Family of induced subcomplexes of a random complex.
    Family,
    LabeledComplex,
    /// Full simplex on the generators of --ideal, labeled by them.
    TaylorLabel,
}

#[derive(Args, Clone, Debug, Default)]
pub struct Params {
    /// Vertices or variables.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    /// Colors.
    #[arg(long)]
    pub r: Option<usize>,
    /// Largest number of generators.
    #[arg(long)]
    pub gens: Option<usize>,
    /// Largest generator degree.
    #[arg(long)]
    pub degree: Option<u32>,
    /// Extra random generators beyond the pure powers.
    #[arg(long)]
    pub extra: Option<usize>,
    /// Family members.
    #[arg(long)]
    pub members: Option<usize>,
    /// Variables of the labels in a labeled complex.
    #[arg(long)]
    pub vars: Option<usize>,
}

fn exhausted(kind: Kind) -> CliError {
    CliError::Compute(format!(
        "{} generator found no instance in {DRAWS} draws; change the seed or sizes",
        kind.name()
    ))
}

impl Kind {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    pub fn parse(s: &str) -> CliResult<Kind> {
        Kind::from_str(s, false).map_err(|_| CliError::Input(format!("unknown family {s:?}")))
    }
}

/// Instance text for `kind`, headed by a comment recording how to regenerate it.
pub fn generate_text(
    kind: Kind,
    p: &Params,
    seed: u64,
    field: Field,
    ideal: Option<&MonomialIdeal>,
) -> CliResult<String> {
    let n = p.n.unwrap_or(5);
    let d = p.d.unwrap_or(1);
    let r = p.r.unwrap_or(2);
    let gens = p.gens.unwrap_or(4);
    let degree = p.degree.unwrap_or(3);
    let extra = p.extra.unwrap_or(2);
    let members = p.members.unwrap_or(4);
    let vars = p.vars.unwrap_or(3);
    let mut g = rng(seed);
    let (used, body) = match kind {
        Kind::LeraySquarefree | Kind::TruncatedColored => {
            let mut found = None;
            for _ in 0..DRAWS {
                found = if kind == Kind::LeraySquarefree {
                    leray_squarefree_ideal(&mut g, n, d, r, field)?.map(|(_, i)| i)
                } else {
                    linear_colored_ideal(&mut g, n, d, r, field)?
                };
                if found.is_some() {
                    break;
                }
            }
            let i = found.ok_or_else(|| exhausted(kind))?;
            (format!("--n {n} --d {d} --r {r}"), i.to_text())
        }
        Kind::Colored => (
            format!("--n {n} --r {r} --extra {extra} --degree {degree}"),
            random_colored_ideal(&mut g, n, r, extra, degree)?.to_text(),
        ),
        Kind::Monomial => (
            format!("--n {n} --gens {gens} --degree {degree}"),
            random_monomial_ideal(&mut g, n, gens, degree)?.to_text(),
        ),
        Kind::Squarefree => (
            format!("--n {n} --gens {gens}"),
            random_squarefree_ideal(&mut g, n, gens)?.to_text(),
        ),
        Kind::MPower => (
            format!("--r {r} --d {d}"),
            m_power(r, d as u32).to_text(),
        ),
        Kind::Complex => (
            format!("--n {n}"),
            complex_to_text(&random_complex(&mut g, n, n + 2, n)),
        ),
        Kind::LerayComplex => (
            format!("--n {n} --d {d}"),
            complex_to_text(&random_leray_complex(&mut g, n, d, field)?),
        ),
        Kind::Family => {
            let ambient = random_complex(&mut g, n, n + 2, n);
            let f = random_family(&mut g, ambient, members, r)?;
            (
                format!("--n {n} --members {members} --r {r}"),
                family_to_text(&Family::Simplicial(f)),
            )
        }
        Kind::LabeledComplex => (
            format!("--n {n} --vars {vars} --degree {degree}"),
            random_labeled_complex(&mut g, n, vars, degree)?.to_text(),
        ),
        Kind::TaylorLabel => {
            let i = ideal
                .ok_or_else(|| CliError::Input("taylor-label needs --ideal".into()))?;
            (String::new(), taylor_labeling(i)?.to_text())
        }
    };
    let mut head = format!("# helly generate {} --seed {seed}", kind.name());
    if field != Field::Rationals {
        head.push_str(&format!(" --field {field}"));
    }
    if !used.is_empty() {
        head.push(' ');
        head.push_str(&used);
    }
    Ok(format!("{head}\n{body}"))
}
