use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use clustermatch::matchenum::{cluster_expansion, matching_polynomial};
use clustermatch::mutation::{belt, belt_cap, belt_rows, noninitial_variables};
use clustermatch::rootsys::roots_of;
use clustermatch::tilegraphs::{enumerate_family, graph_for_root, realize, to_dot};
use clustermatch::verify::{run_checks, CheckKind, VerificationReport};
use clustermatch::{Error, Kind, RootVector, TypeSpec};

#[derive(Parser)]
#[command(
    name = "clustermatch",
    version,
    about = "Cluster variables by mutation and by perfect matchings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to a file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, short, global = true)]
    jobs: Option<usize>,
}

#[derive(Args, Clone)]
struct Target {
    /// Cartan type: A, B, C, D or G2.
    #[arg(long = "type", value_name = "TYPE")]
    kind: String,
    /// Rank (optional for G2).
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots in simple-root coordinates.
    Roots {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Rows of the bipartite belt.
    Belt {
        #[command(flatten)]
        target: Target,
        /// Generate exactly this many rows instead of stopping once every
        /// root has appeared.
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// All non-initial cluster variables keyed by denominator vector.
    Variables {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The graph family, optionally written as one DOT file per graph.
    Graphs {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        dot_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Expansion of one cluster variable from perfect matchings.
    Expand {
        #[command(flatten)]
        target: Target,
        /// Root coordinates, e.g. 1,0,1.
        #[arg(long)]
        root: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification checks.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Comma-separated: all, theorem, diamonds, algorithms, folding,
        /// condensation, excision, center-one.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Include wall-clock times (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Runtime(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Parse { .. } | Error::Index { .. } => {
                Failure::Usage(e.to_string())
            }
            Error::Bijection(ref m) if m.contains("not a positive root") => {
                Failure::Usage(e.to_string())
            }
            e => Failure::Runtime(e.to_string()),
        }
    }
}

const MAX_RANK: [(Kind, usize); 5] = [
    (Kind::A, 12),
    (Kind::B, 8),
    (Kind::C, 8),
    (Kind::D, 8),
    (Kind::G2, 2),
];

impl Target {
    fn spec(&self) -> Result<TypeSpec, Failure> {
        let kind: Kind = self.kind.parse()?;
        let rank = match (kind, self.rank) {
            (Kind::G2, None) => 2,
            (_, Some(r)) => r,
            (_, None) => {
                return Err(Failure::Usage(format!(
                    "--rank is required for type {kind}"
                )))
            }
        };
        let max = MAX_RANK
            .iter()
            .find(|(k, _)| *k == kind)
            .map(|(_, m)| *m)
            .unwrap();
        if rank > max {
            return Err(Failure::Usage(format!(
                "rank {rank} exceeds the supported maximum {max} for type {kind}"
            )));
        }
        Ok(TypeSpec::new(kind, rank)?)
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn header(spec: TypeSpec) -> Value {
    json!({ "type": spec.kind(), "rank": spec.rank() })
}

fn with_header(spec: TypeSpec, key: &str, value: impl Serialize) -> Value {
    let mut h = header(spec);
    h[key] = serde_json::to_value(value).expect("serializable");
    h
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Usage(
            "--format dot is only available for graphs".into(),
        ));
    }
    Ok(())
}

fn roots(target: &Target, format: Format) -> Result<String, Failure> {
    no_dot(format)?;
    let r = roots_of(target.spec()?)?;
    Ok(match format {
        Format::Json => to_json(&r),
        _ => r.iter().map(|a| format!("{a}\n")).collect(),
    })
}

fn belt_cmd(target: &Target, rows: Option<usize>, format: Format) -> Result<String, Failure> {
    no_dot(format)?;
    let spec = target.spec()?;
    let lattice = match rows {
        Some(r) => belt_rows(spec, r)?,
        None => belt(spec, belt_cap(spec))?,
    };
    Ok(match format {
        Format::Json => to_json(&lattice),
        _ => {
            let mut s = String::new();
            for (r, row) in lattice.rows.iter().enumerate() {
                let cells: Vec<String> = row
                    .iter()
                    .map(|e| {
                        format!(
                            "x{}^({}) = {}",
                            spec.label(e.col - 1),
                            e.sup,
                            e.poly.to_fraction_string()
                        )
                    })
                    .collect();
                s.push_str(&format!("row {r}: {}\n", cells.join("; ")));
            }
            s
        }
    })
}

fn variables(target: &Target, format: Format) -> Result<String, Failure> {
    no_dot(format)?;
    let spec = target.spec()?;
    let vars = noninitial_variables(spec)?;
    Ok(match format {
        Format::Json => {
            let list: Vec<Value> = vars
                .iter()
                .map(|(a, v)| json!({ "root": a, "variable": v, "fraction": v.to_fraction_string() }))
                .collect();
            to_json(&with_header(spec, "variables", list))
        }
        _ => vars
            .iter()
            .map(|(a, v)| format!("{a}  {}\n", v.to_fraction_string()))
            .collect(),
    })
}

fn dot_name(spec: TypeSpec, root: &RootVector) -> String {
    format!("{spec}_{}.dot", root.dashed())
}

fn graphs(target: &Target, dot_dir: Option<&PathBuf>, format: Format) -> Result<String, Failure> {
    let spec = target.spec()?;
    let family = enumerate_family(spec);
    let realized = family
        .par_iter()
        .map(|g| Ok((g, realize(g)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    if let Some(dir) = dot_dir {
        fs::create_dir_all(dir).map_err(|e| Failure::Runtime(format!("{}: {e}", dir.display())))?;
        for (g, m) in &realized {
            let path = dir.join(dot_name(spec, &g.root()));
            fs::write(&path, to_dot(m))
                .map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(match format {
        Format::Json => {
            let list: Vec<Value> = realized
                .iter()
                .map(|(g, m)| {
                    let mut v = serde_json::to_value(g).expect("serializable");
                    v["vertices"] = json!(m.num_vertices());
                    v["edges"] = json!(m.edges.len());
                    v
                })
                .collect();
            to_json(&with_header(spec, "graphs", list))
        }
        Format::Text => realized
            .iter()
            .map(|(g, m)| {
                format!(
                    "{}  {}  ({} vertices, {} edges)\n",
                    g.root(),
                    g.describe(),
                    m.num_vertices(),
                    m.edges.len()
                )
            })
            .collect(),
        Format::Dot => realized
            .iter()
            .map(|(g, m)| format!("// {spec} {}\n{}", g.root(), to_dot(m)))
            .collect(),
    })
}

fn expand(target: &Target, root: &str, format: Format) -> Result<String, Failure> {
    no_dot(format)?;
    let spec = target.spec()?;
    let alpha = RootVector::parse(root)?;
    if alpha.0.len() != spec.rank() {
        return Err(Failure::Usage(format!(
            "root {alpha} has {} coordinates, rank is {}",
            alpha.0.len(),
            spec.rank()
        )));
    }
    let x = cluster_expansion(spec, &alpha)?;
    Ok(match format {
        Format::Json => {
            let g = realize(&graph_for_root(spec, &alpha)?)?;
            let split = x.split()?;
            let mut v = header(spec);
            v["root"] = json!(alpha);
            v["matching_polynomial"] = json!(matching_polynomial(&g));
            v["expansion"] = json!(x);
            v["fraction"] = json!(x.to_fraction_string());
            v["numerator"] = json!(split.numerator);
            v["denominator"] = json!(split.denominator);
            to_json(&v)
        }
        _ => format!("{}\n", x.to_fraction_string()),
    })
}

fn parse_checks(s: &str) -> Result<Vec<CheckKind>, Failure> {
    let mut out = vec![];
    for part in s.split(',') {
        if part.trim().eq_ignore_ascii_case("all") {
            out.extend(CheckKind::ALL);
        } else {
            out.push(CheckKind::parse(part)?);
        }
    }
    Ok(out)
}

fn render_report(spec: TypeSpec, report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut v = header(spec);
            v["passed"] = json!(report.passed);
            v["checks"] = json!(report.checks);
            to_json(&v)
        }
        _ => {
            let mut s = String::new();
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                s.push_str(&format!("{status} {}: {}", c.name, c.detail));
                if let Some(ms) = c.elapsed_ms {
                    s.push_str(&format!(" [{ms} ms]"));
                }
                s.push('\n');
            }
            let failed = report.failures().count();
            if failed == 0 {
                s.push_str(&format!(
                    "{spec}: all {} checks passed\n",
                    report.checks.len()
                ));
            } else {
                s.push_str(&format!(
                    "{spec}: {failed} of {} checks failed\n",
                    report.checks.len()
                ));
            }
            s
        }
    }
}

fn verify(target: &Target, checks: &str, format: Format, timings: bool) -> Result<String, Failure> {
    no_dot(format)?;
    let spec = target.spec()?;
    let kinds = parse_checks(checks)?;
    let report = run_checks(spec, &kinds, timings);
    let text = render_report(spec, &report, format);
    if report.passed {
        Ok(text)
    } else {
        let failures: Vec<_> = report.failures().collect();
        let mut v = header(spec);
        v["failures"] = json!(failures);
        Err(Failure::Verification(format!("{text}\u{0}{}", to_json(&v))))
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Roots { target, format } => roots(target, *format),
        Command::Belt {
            target,
            rows,
            format,
        } => belt_cmd(target, *rows, *format),
        Command::Variables { target, format } => variables(target, *format),
        Command::Graphs {
            target,
            dot_dir,
            format,
        } => graphs(target, dot_dir.as_ref(), *format),
        Command::Expand {
            target,
            root,
            format,
        } => expand(target, root, *format),
        Command::Verify {
            target,
            checks,
            format,
            timings,
        } => verify(target, checks, *format, *timings),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let outcome = pool.install(|| run(&cli));
    let (text, code) = match outcome {
        Ok(text) => (text, 0),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
        Err(Failure::Verification(m)) => {
            let (report, failures) = m.split_once('\u{0}').unwrap_or((&m, ""));
            eprint!("{failures}");
            (report.to_string(), 1)
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
