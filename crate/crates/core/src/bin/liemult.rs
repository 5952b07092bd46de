use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use liemult::catalog::{self, Filter, Group};
use liemult::invariants::{report, InvariantReport};
use liemult::linalg::{format_rational, parse_rational};
use liemult::presentation::Presentation;
use liemult::verify::{self, Format, Scope};
use liemult::{Error, LieAlgebra, Result, Scalar};

#[derive(Parser)]
#[command(
    name = "liemult",
    version,
    about = "Schur multipliers of nilpotent Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Md,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Md => Format::Markdown,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Tables,
    Theorems,
    Capability,
    All,
}

#[derive(clap::Args)]
struct ParamArgs {
    /// Value of ε for ε-families, as p or p/q.
    #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
    eps: Option<String>,
    /// Value of λ for λ-families, as p or p/q.
    #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
    lambda: Option<String>,
}

impl ParamArgs {
    fn value(&self) -> Result<Option<Scalar>> {
        match (&self.eps, &self.lambda) {
            (Some(_), Some(_)) => Err(Error::Parse(
                "give at most one of --eps and --lambda".into(),
            )),
            (Some(p), None) | (None, Some(p)) => parse_rational(p).map(Some),
            (None, None) => Ok(None),
        }
    }
}

#[derive(clap::Args)]
struct OutArgs {
    #[arg(long, value_enum, default_value = "md")]
    format: FormatArg,
    /// Write to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries.
    List {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        derived: Option<usize>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        table: Option<u8>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Invariants of a catalog algebra or a presentation file.
    Info {
        target: String,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Invariants of the algebra in a presentation file.
    Compute {
        file: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Recompute the reference tables, classification lists and claims.
    Verify {
        #[arg(value_enum)]
        scope: ScopeArg,
        #[arg(long, default_value_t = 9)]
        dim_cap: usize,
        /// Only sweep this value of s.
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..=7))]
        s: Option<i64>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Print a catalog algebra as a presentation file.
    Export {
        name: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

fn load_target(target: &str, params: &ParamArgs) -> Result<LieAlgebra> {
    let p = params.value()?;
    let path = Path::new(target);
    if path.is_file() {
        return Presentation::read(path)?.load();
    }
    let parsed = catalog::normalize(target)?;
    if let (Ok(e), Some(v)) = (catalog::entry(target), p.as_ref().or(parsed.param.as_ref())) {
        if !e.is_parameterized() {
            return Err(Error::ParamOutOfDomain {
                name: e.name.into(),
                detail: format!("takes no parameter, got {}", format_rational(v)),
            });
        }
    }
    catalog::get(target, p.as_ref())
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render_info(r: &InvariantReport, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(r).expect("report serializes") + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            w.write_record(["quantity", "value"]).map_err(io)?;
            let s =
                r.s.map_or_else(|| "undefined".to_owned(), |s| s.to_string());
            let series = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(";");
            for (k, v) in [
                ("name", r.name.clone()),
                ("n", r.n.to_string()),
                ("dim_derived", r.dim_derived.to_string()),
                ("class", r.class.to_string()),
                ("dim_m", r.dim_m.to_string()),
                ("s", s),
                ("t", r.t.to_string()),
                ("capable", r.capable.to_string()),
                ("lower_central_dims", series(&r.lower_central_dims)),
                ("upper_central_dims", series(&r.upper_central_dims)),
            ] {
                w.write_record([k, v.as_str()]).map_err(io)?;
            }
            for b in &r.bound_checks {
                let v = format!("{} {} {}", b.lhs, if b.strict { "<" } else { "<=" }, b.rhs);
                w.write_record([b.id.as_str(), v.as_str()]).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv is utf-8"))
        }
        Format::Markdown => {
            let mut s = String::new();
            let _ = writeln!(s, "{}", r.name);
            let _ = writeln!(s, "  n = {}", r.n);
            let _ = writeln!(s, "  dim L² = {}", r.dim_derived);
            let _ = writeln!(s, "  class = {}", r.class);
            let _ = writeln!(
                s,
                "  lower central series dims = {:?}",
                r.lower_central_dims
            );
            let _ = writeln!(
                s,
                "  upper central series dims = {:?}",
                r.upper_central_dims
            );
            let _ = writeln!(s, "  dim 𝓜 = {}", r.dim_m);
            match r.s {
                Some(v) => {
                    let _ = writeln!(s, "  s = {v}");
                }
                None => {
                    let _ = writeln!(s, "  s: {}", Error::AbelianInput);
                }
            }
            let _ = writeln!(s, "  t = {}", r.t);
            let _ = writeln!(s, "  capable = {}", r.capable);
            for b in &r.bound_checks {
                let _ = writeln!(
                    s,
                    "  {}: {} {} {} ({}{})",
                    b.id,
                    b.lhs,
                    if b.strict { "<" } else { "<=" },
                    b.rhs,
                    if b.holds { "holds" } else { "FAILS" },
                    if b.tight { ", equality" } else { "" }
                );
            }
            Ok(s)
        }
    }
}

#[derive(serde::Serialize)]
struct ListRow {
    name: &'static str,
    group: Group,
    dim: usize,
    dim_derived: usize,
    parameter: &'static str,
    alias_of: Option<&'static str>,
}

fn render_list(rows: &[ListRow], format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(rows).expect("list serializes") + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            w.write_record([
                "name",
                "group",
                "dim",
                "dim_derived",
                "parameter",
                "alias_of",
            ])
            .map_err(io)?;
            for r in rows {
                w.write_record([
                    r.name,
                    r.group.id(),
                    &r.dim.to_string(),
                    &r.dim_derived.to_string(),
                    r.parameter,
                    r.alias_of.unwrap_or(""),
                ])
                .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv is utf-8"))
        }
        Format::Markdown => {
            let mut s = String::new();
            for r in rows {
                let _ = write!(
                    s,
                    "{:<16} {:<24} n={} dim L²={}",
                    r.name,
                    r.group.id(),
                    r.dim,
                    r.dim_derived
                );
                if !r.parameter.is_empty() {
                    let _ = write!(s, "  param {}", r.parameter);
                }
                if let Some(a) = r.alias_of {
                    let _ = write!(s, "  = {a}");
                }
                s.push('\n');
            }
            Ok(s)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::List {
            dim,
            derived,
            group,
            table,
            out,
        } => {
            let group = match group {
                Some(g) => Some(
                    Group::parse(&g)
                        .ok_or_else(|| Error::Parse(format!("unknown group \"{g}\"")))?,
                ),
                None => None,
            };
            let filter = Filter {
                dim,
                dim_derived: derived,
                group,
                table,
                ..Default::default()
            };
            let rows: Vec<ListRow> = catalog::all_entries(&filter)
                .into_iter()
                .map(|e| {
                    let l = e.build(None).expect("catalog entries build");
                    ListRow {
                        name: e.name,
                        group: e.group,
                        dim: l.dim(),
                        dim_derived: l.derived().dim(),
                        parameter: if e.is_parameterized() {
                            e.param.describe()
                        } else {
                            ""
                        },
                        alias_of: e.alias_of,
                    }
                })
                .collect();
            emit(&render_list(&rows, out.format.into())?, out.out.as_deref())?;
        }
        Command::Info {
            target,
            params,
            out,
        } => {
            let l = load_target(&target, &params)?;
            emit(
                &render_info(&report(&l), out.format.into())?,
                out.out.as_deref(),
            )?;
        }
        Command::Compute { file, out } => {
            let l = Presentation::read(&file)?.load()?;
            emit(
                &render_info(&report(&l), out.format.into())?,
                out.out.as_deref(),
            )?;
        }
        Command::Verify {
            scope,
            dim_cap,
            s,
            out,
        } => {
            let scope = match scope {
                ScopeArg::Tables => Scope::Tables,
                ScopeArg::Theorems => Scope::Theorems,
                ScopeArg::Capability => Scope::Capability,
                ScopeArg::All => Scope::All,
            };
            let r = verify::run(scope, dim_cap, s);
            emit(&verify::render(&r, out.format.into())?, out.out.as_deref())?;
            return Ok(if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Command::Export { name, params, out } => {
            let l = load_target(&name, &params)?;
            emit(
                &(Presentation::from_algebra(&l).to_json() + "\n"),
                out.as_deref(),
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.kind().to_string();
            eprintln!("error[usage]: {msg}");
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.tag());
            ExitCode::from(2)
        }
    }
}
