//! `qrook` command-line front end.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qrook::presentations::{
    map_x_to_p, relations_a_algebra_variant, relations_affine, relations_ak_presentation, relations_bprime,
    relations_cyclotomic, relations_rook, semisimple_a, semisimple_cyclotomic, semisimple_rook, verify, QPoint,
    QuadraticVariant, Relation, VerifyReport,
};
use qrook::qfield::{RatFunc, Rational};
use qrook::rook::{enumerate_rook, generators_q1};
use qrook::seminormal::{build, cyclotomic_module};
use qrook::shapes::{
    bratteli, dimension, enumerate_standard_tableaux, index_set_a, index_set_h, BratteliFamily, ContentRule,
    MultiPartition, Shape,
};
use qrook::tensor::{
    centralizer_dimension, centralizer_dimension_at, predicted_centralizer_dimension, verify_phi_p, verify_phi_p_at,
    GradedBasis,
};

#[derive(Parser)]
#[command(
    name = "qrook",
    version,
    about = "Exact computations for q-rook monoid and cyclotomic Hecke algebras"
)]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard tableaux of a shape.
    Tableaux(ShapeArgs),
    /// Export a seminormal representation.
    Rep {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Cyclotomic parameters for `--multi`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        u: Vec<String>,
    },
    /// Check a relation suite on its faithful module family.
    Verify {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        u: Vec<String>,
        /// `symbolic` or an exact rational such as `1` or `3/2`.
        #[arg(long, default_value = "symbolic")]
        q: String,
        /// Read the quadratic relation of the two-parameter algebra as `T^2 = (q-q^-1)T + q`.
        #[arg(long)]
        quadratic_q: bool,
    },
    /// Export a Bratteli graph.
    Bratteli {
        #[arg(long, value_enum, ignore_case = true)]
        family: GraphFamily,
        #[arg(long)]
        levels: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Dimension table of the rook monoid algebras.
    Dims {
        #[arg(long)]
        rook: usize,
    },
    /// Check the action on tensor space `V^{⊗k}`.
    Schurweyl {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        u: Vec<String>,
        #[arg(long, default_value = "symbolic")]
        q: String,
    },
    /// Evaluate a semisimplicity criterion.
    Semisimple {
        #[arg(long, value_enum)]
        family: SemisimpleFamily,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        u: Vec<String>,
        #[arg(long, default_value = "symbolic")]
        q: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ShapeArgs {
    /// A partition, e.g. `[2,1]`.
    #[arg(long)]
    shape: Option<String>,
    /// A multipartition, e.g. `[[1],[1]]`.
    #[arg(long)]
    multi: Option<String>,
    /// A skew shape, e.g. `[2,1]/[1]`.
    #[arg(long)]
    skew: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Rook,
    Ak,
    Affine,
    Cyclotomic,
    #[value(name = "aAlg")]
    AAlg,
    Bprime,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFamily {
    /// Pairs of partitions.
    B,
    /// Pairs whose first component is a single row.
    A,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemisimpleFamily {
    Rook,
    A,
    Cyclotomic,
}

/// What a command produced and whether its checks held.
struct Output {
    text: String,
    pass: bool,
}

impl Output {
    fn json(v: &Value, pass: bool) -> Result<Self> {
        Ok(Output {
            text: serde_json::to_string_pretty(v)? + "\n",
            pass,
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command).and_then(|out| emit(cli.output.as_ref(), &out).map(|()| out.pass)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(path: Option<&PathBuf>, out: &Output) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, &out.text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{}", out.text);
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<Output> {
    match command {
        Command::Tableaux(s) => cmd_tableaux(&s),
        Command::Rep { shape, u } => cmd_rep(&shape, &u),
        Command::Verify {
            family,
            k,
            u,
            q,
            quadratic_q,
        } => cmd_verify(family, k, &u, &q, quadratic_q),
        Command::Bratteli { family, levels, format } => cmd_bratteli(family, levels, format),
        Command::Dims { rook } => cmd_dims(rook),
        Command::Schurweyl { n, m, k, u, q } => cmd_schurweyl(n, m, k, &u, &q),
        Command::Semisimple { family, k, u, q } => cmd_semisimple(family, k, &u, &q),
    }
}

fn parse_shape(s: &ShapeArgs) -> Result<Shape> {
    let (spec, want) = match (&s.shape, &s.multi, &s.skew) {
        (Some(x), None, None) => (x, "partition"),
        (None, Some(x), None) => (x, "multipartition"),
        (None, None, Some(x)) => (x, "skew shape"),
        _ => bail!("give exactly one of --shape, --multi, --skew"),
    };
    let shape = Shape::parse(spec).with_context(|| format!("parsing {want} {spec:?}"))?;
    let kind = match shape {
        Shape::Partition(_) => "partition",
        Shape::Multi(_) => "multipartition",
        Shape::Skew(_) => "skew shape",
    };
    if kind != want {
        bail!("{spec:?} is a {kind}, not a {want}");
    }
    Ok(shape)
}

fn parse_u(u: &[String]) -> Result<Vec<RatFunc>> {
    u.iter()
        .map(|s| {
            s.trim()
                .parse::<RatFunc>()
                .with_context(|| format!("parsing parameter {s:?}"))
        })
        .collect()
}

fn parse_q(q: &str) -> Result<QPoint> {
    if q == "symbolic" {
        return Ok(QPoint::Symbolic);
    }
    let q0: Rational = q
        .trim()
        .parse()
        .with_context(|| format!("q must be `symbolic` or a rational, got {q:?}"))?;
    if q0 == Rational::from_integer(0.into()) {
        bail!("q must be nonzero");
    }
    Ok(QPoint::At(q0))
}

fn cmd_tableaux(s: &ShapeArgs) -> Result<Output> {
    let shape = parse_shape(s)?;
    let fillings: Vec<_> = enumerate_standard_tableaux(&shape)
        .iter()
        .map(|t| t.filling())
        .collect();
    Output::json(&json!(fillings), true)
}

fn cmd_rep(s: &ShapeArgs, u: &[String]) -> Result<Output> {
    let shape = parse_shape(s)?;
    let rule = match &shape {
        Shape::Multi(lam) => {
            let u = parse_u(u)?;
            if u.len() != lam.r() {
                bail!("{} parameters given for {} components", u.len(), lam.r());
            }
            ContentRule::Cyclotomic(u)
        }
        _ if !u.is_empty() => bail!("--u only applies to --multi"),
        _ => ContentRule::Plain,
    };
    let rep = build(&shape, &rule)?;
    Output::json(&serde_json::to_value(&rep)?, true)
}

type Rels = Vec<Relation<RatFunc>>;

/// Modules and relations checked by `verify` for each family.
fn verify_family(
    family: Family,
    k: usize,
    u: &[RatFunc],
    quadratic_q: bool,
) -> Result<(Vec<MultiPartition>, Vec<RatFunc>, Rels, bool)> {
    let rook_u = vec![RatFunc::zero(), RatFunc::one()];
    let need_u = |n: Option<usize>| -> Result<()> {
        match n {
            _ if u.is_empty() => bail!("this family needs --u"),
            Some(n) if u.len() != n => bail!("this family needs exactly {n} parameters"),
            _ => Ok(()),
        }
    };
    let no_u = || -> Result<()> {
        if u.is_empty() {
            Ok(())
        } else {
            bail!("this family fixes u = (0, 1); drop --u")
        }
    };
    Ok(match family {
        Family::Rook => {
            no_u()?;
            (index_set_a(k), rook_u, relations_rook(k)?, true)
        }
        Family::Ak => {
            no_u()?;
            (index_set_a(k), rook_u, relations_ak_presentation(k)?, false)
        }
        Family::Bprime => {
            no_u()?;
            (index_set_a(k), rook_u, relations_bprime(k)?, true)
        }
        Family::Affine => {
            need_u(None)?;
            (index_set_h(k, u.len())?, u.to_vec(), relations_affine(k)?, false)
        }
        Family::Cyclotomic => {
            need_u(None)?;
            (index_set_h(k, u.len())?, u.to_vec(), relations_cyclotomic(k, u)?, false)
        }
        Family::AAlg => {
            need_u(Some(2))?;
            if u[1].is_zero() {
                bail!("the two-parameter algebra needs u2 != 0");
            }
            let variant = if quadratic_q {
                QuadraticVariant::Q
            } else {
                QuadraticVariant::One
            };
            let rels = relations_a_algebra_variant(k, &u[0], &u[1], variant)?;
            (index_set_a(k), u.to_vec(), rels, false)
        }
    })
}

fn cmd_verify(family: Family, k: usize, u: &[String], q: &str, quadratic_q: bool) -> Result<Output> {
    let at = parse_q(q)?;
    let u = parse_u(u)?;
    let (shapes, params, rels, with_p) = verify_family(family, k, &u, quadratic_q)?;
    let mut modules = Vec::new();
    let monoid = matches!((family, &at), (Family::Rook | Family::Bprime, QPoint::At(q0)) if q0 == &Rational::from_integer(1.into()));
    if monoid {
        let a = generators_q1(k)?;
        let report = verify(&a, &specialize_rels(&rels, &at)?)?;
        modules.push(module_report("q=1 monoid matrices".into(), report));
    } else {
        for lam in &shapes {
            let rep = cyclotomic_module(lam, &params).with_context(|| format!("building the module {lam}"))?;
            let mut a = rep.assignment().clone();
            if with_p {
                a = a.extend(&map_x_to_p(k))?;
            }
            let report = match &at {
                QPoint::Symbolic => verify(&a, &rels)?,
                QPoint::At(q0) => verify(&a.specialize(q0)?, &specialize_rels(&rels, &at)?)?,
            };
            modules.push(module_report(lam.to_string(), report));
        }
    }
    let pass = modules.iter().all(|m| m["pass"] == json!(true));
    let v = json!({
        "family": family_name(family),
        "k": k,
        "u": params.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "q": q,
        "pass": pass,
        "modules": modules,
    });
    Output::json(&v, pass)
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Rook => "rook",
        Family::Ak => "ak",
        Family::Affine => "affine",
        Family::Cyclotomic => "cyclotomic",
        Family::AAlg => "aAlg",
        Family::Bprime => "bprime",
    }
}

fn module_report(label: String, r: VerifyReport) -> Value {
    json!({ "module": label, "pass": r.pass, "relations": r.relations })
}

fn specialize_rels(rels: &[Relation<RatFunc>], at: &QPoint) -> Result<Vec<Relation<Rational>>> {
    let QPoint::At(q0) = at else {
        bail!("no point to specialize at")
    };
    Ok(rels
        .iter()
        .map(|r| r.try_map(|c| c.specialize(q0)))
        .collect::<qrook::Result<_>>()?)
}

fn cmd_bratteli(family: GraphFamily, levels: usize, format: Format) -> Result<Output> {
    let family = match family {
        GraphFamily::B => BratteliFamily::TypeB,
        GraphFamily::A => BratteliFamily::AQuotient,
    };
    let g = bratteli(levels, family);
    match format {
        Format::Dot => Ok(Output {
            text: g.to_dot(),
            pass: true,
        }),
        Format::Json => {
            let mut v = serde_json::to_value(&g)?;
            v["vertex_counts"] = json!(g.vertex_counts());
            v["edge_counts"] = json!(g.edge_counts());
            v["path_counts"] = json!(g.path_counts());
            Output::json(&v, true)
        }
    }
}

fn cmd_dims(max_k: usize) -> Result<Output> {
    let mut rows = Vec::new();
    let mut pass = true;
    for k in 1..=max_k {
        let monoid = enumerate_rook(k).len();
        let tableaux: usize = index_set_a(k)
            .into_iter()
            .map(|l| dimension(&Shape::Multi(l)).pow(2))
            .sum();
        pass &= monoid == tableaux;
        rows.push(json!({ "k": k, "rook_monoid": monoid, "sum_of_squares": tableaux }));
    }
    Output::json(&json!(rows), pass)
}

fn cmd_schurweyl(n: Option<usize>, m: Vec<usize>, k: usize, u: &[String], q: &str) -> Result<Output> {
    let basis = GradedBasis::new(m)?;
    if let Some(n) = n {
        if n != basis.n() {
            bail!(
                "--n {n} does not match the component dimensions summing to {}",
                basis.n()
            );
        }
    }
    let u = parse_u(u)?;
    let predicted = predicted_centralizer_dimension(k, &basis)?;
    let (report, centralizer) = match parse_q(q)? {
        QPoint::Symbolic => (verify_phi_p(k, &basis, &u)?, centralizer_dimension(k, &basis, &u)?),
        QPoint::At(q0) => (
            verify_phi_p_at(k, &basis, &u, &q0)?,
            centralizer_dimension_at(k, &basis, &u, &q0)?,
        ),
    };
    let pass = report.pass() && centralizer == predicted;
    let v = json!({
        "n": basis.n(),
        "m": basis.dims(),
        "k": k,
        "u": u.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "q": q,
        "pass": pass,
        "x1_equals_d1": report.x1_equals_d1,
        "centralizer_dimension": centralizer,
        "predicted_dimension": predicted,
        "report": report,
    });
    Output::json(&v, pass)
}

fn cmd_semisimple(family: SemisimpleFamily, k: usize, u: &[String], q: &str) -> Result<Output> {
    let at = parse_q(q)?;
    let u = parse_u(u)?;
    let answer = match family {
        SemisimpleFamily::Rook => semisimple_rook(k, &at)?,
        SemisimpleFamily::A => {
            let [u1, u2] = u.as_slice() else {
                bail!("--u needs two parameters")
            };
            semisimple_a(k, u1, u2, &at)?
        }
        SemisimpleFamily::Cyclotomic => {
            if u.is_empty() {
                bail!("--u is required");
            }
            semisimple_cyclotomic(k, &u, &at)?
        }
    };
    Output::json(&json!({ "k": k, "q": q, "semisimple": answer }), true)
}
