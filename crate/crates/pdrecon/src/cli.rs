//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed (or `iso` found no isomorphism),
//! 2 usage or input error, 3 a resource cap was hit.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use pdrecon_core::properties::{self, PropertyKind, SetFamily};
use pdrecon_core::recon::{self, ReconGraph, ReconLimits, TarBound};
use pdrecon_core::{iso, Graph};
use serde_json::json;

use crate::family::{self, SpecError};
use crate::io::{self as fmt, FormatError};
use crate::verify::{self, Status, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "pdrecon", version, about = "Power domination and its reconfiguration graphs")]
pub struct Cli {
    /// Maximum number of vertices of any reconfiguration graph.
    #[arg(long, env = "PDRECON_CAP", global = true, default_value_t = recon::DEFAULT_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Edgelist,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SetsMode {
    Minimal,
    Minimum,
    /// Minimal sets of the largest cardinality.
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Pd,
    Dom,
    Zf,
}

impl From<KindArg> for PropertyKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Pd => PropertyKind::PowerDomination,
            KindArg::Dom => PropertyKind::Domination,
            KindArg::Zf => PropertyKind::ZeroForcing,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReconArg {
    Tar,
    Tj,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a graph named by a family spec.
    Gen { family: String },
    /// Power domination number, or a family of power dominating sets.
    Pd(SetsArgs),
    /// Domination number, or a family of dominating sets.
    Dom(SetsArgs),
    /// Zero forcing number, or a family of zero forcing sets.
    Zf(SetsArgs),
    /// Token addition/removal graph (k-TAR with --k).
    Tar {
        graph: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        metrics: bool,
        #[arg(long)]
        thresholds: bool,
        #[arg(long, value_enum, default_value = "pd")]
        kind: KindArg,
    },
    /// Token jumping graph on the minimum sets.
    Tj {
        graph: String,
        #[arg(long)]
        metrics: bool,
        #[arg(long, value_enum, default_value = "pd")]
        kind: KindArg,
    },
    /// Test two graphs for isomorphism; exit 1 when they are not isomorphic.
    Iso { a: String, b: String },
    /// All graphs of order N (no isolated vertices) with the same TAR graph.
    Unique {
        graph: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "pd")]
        kind: KindArg,
    },
    /// Run the verification suite.
    Verify {
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Per-check budget in seconds.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
        /// List check ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Write a graph, or its reconfiguration graph, in the chosen --format.
    Export {
        graph: String,
        #[arg(long, value_enum)]
        recon: Option<ReconArg>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "pd")]
        kind: KindArg,
    },
}

#[derive(clap::Args, Debug)]
pub struct SetsArgs {
    pub graph: String,
    #[arg(long, value_enum)]
    pub sets: Option<SetsMode>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Engine(#[from] pdrecon_core::Error),
    #[error(transparent)]
    Verify(#[from] verify::VerifyError),
    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use pdrecon_core::Error as E;
        match self {
            CliError::Engine(
                E::ReconTooLarge { .. }
                | E::SearchTooLarge { .. }
                | E::TooLargeForCanonical { .. }
                | E::OrderTooLargeForEnumeration { .. }
                | E::OrderTooLargeForExhaustive { .. },
            ) => 3,
            CliError::Output(_) => 1,
            _ => 2,
        }
    }
}

/// Where command output goes, plus the exit code it implies.
struct Reply {
    text: String,
    code: i32,
}

impl Reply {
    fn ok(text: String) -> Self {
        Reply { text, code: 0 }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    if let Some(w) = cli.workers {
        // fails only if a pool already exists; the existing one is kept
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build_global();
    }
    let result = dispatch(&cli, stdin).and_then(|reply| {
        match &cli.output {
            Some(path) => std::fs::write(path, &reply.text).map_err(|source| CliError::File {
                path: path.display().to_string(),
                source,
            })?,
            None => stdout.write_all(reply.text.as_bytes())?,
        }
        Ok(reply.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn load_graph(arg: &str, stdin: &mut dyn Read) -> Result<Graph, CliError> {
    if arg == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text).map_err(|source| CliError::File {
            path: "<stdin>".into(),
            source,
        })?;
        return Ok(fmt::read_graph(&text)?);
    }
    if family::looks_like_spec(arg) {
        return Ok(family::parse_spec(arg)?);
    }
    let text = std::fs::read_to_string(arg).map_err(|source| CliError::File {
        path: arg.to_owned(),
        source,
    })?;
    Ok(fmt::read_graph(&text)?)
}

fn emit_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Dot => fmt::write_graph_dot(g),
        Format::Json => fmt::write_graph_json(g) + "\n",
        Format::Edgelist => fmt::write_edge_list(g),
        Format::Table => {
            let mut s = format!(
                "name: {}\norder: {}\nsize: {}\n",
                g.name().unwrap_or("-"),
                g.order(),
                g.size()
            );
            for (u, v) in g.edges() {
                s.push_str(&format!("{u} {v}\n"));
            }
            s
        }
    }
}

fn emit_recon(r: &ReconGraph, format: Format) -> String {
    match format {
        Format::Dot => fmt::write_recon_dot(r),
        Format::Json => fmt::write_recon_json(r) + "\n",
        Format::Edgelist => fmt::write_recon_edge_list(r),
        Format::Table => {
            let mut s = format!("order: {}\nsize: {}\n", r.verts().len(), r.edges().len());
            for (p, set) in r.verts().iter().enumerate() {
                s.push_str(&format!("{p} {set}\n"));
            }
            s
        }
    }
}

fn emit_family(f: &SetFamily, format: Format) -> String {
    match format {
        Format::Json => fmt::write_family_json(f) + "\n",
        _ => f.sets.iter().map(|s| format!("{s}\n")).collect(),
    }
}

fn metrics_text(m: &recon::ReconMetrics, format: Format) -> String {
    if format == Format::Json {
        return json!({
            "order": m.order,
            "size": m.size,
            "max_degree": m.max_degree,
            "min_degree": m.min_degree,
            "component_count": m.component_count,
            "diameter": m.diameter,
            "diameter_sampled": m.diameter_sampled,
            "bipartite": m.bipartite,
        })
        .to_string()
            + "\n";
    }
    let diameter = match m.diameter {
        Some(d) if m.diameter_sampled => format!(">= {d} (sampled)"),
        Some(d) => d.to_string(),
        None => "infinite (disconnected)".into(),
    };
    format!(
        "order: {}\nsize: {}\nmax_degree: {}\nmin_degree: {}\ncomponents: {}\ndiameter: {diameter}\nbipartite: {}\n",
        m.order, m.size, m.max_degree, m.min_degree, m.component_count, m.bipartite
    )
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Reply, CliError> {
    let limits = ReconLimits {
        cap: usize::try_from(cli.cap).unwrap_or(usize::MAX),
    };
    let format = cli.format;
    match &cli.command {
        Command::Gen { family } => {
            let g = family::parse_spec(family)?;
            Ok(Reply::ok(emit_graph(&g, format.unwrap_or(Format::Edgelist))))
        }
        Command::Pd(a) => sets_command(a, PropertyKind::PowerDomination, format, stdin),
        Command::Dom(a) => sets_command(a, PropertyKind::Domination, format, stdin),
        Command::Zf(a) => sets_command(a, PropertyKind::ZeroForcing, format, stdin),
        Command::Tar {
            graph,
            k,
            metrics,
            thresholds,
            kind,
        } => {
            let g = load_graph(graph, stdin)?;
            let kind = PropertyKind::from(*kind);
            let bound = k.map_or(TarBound::Full, TarBound::AtMost);
            let r = recon::build_tar(&g, kind, bound, &limits)?;
            let format = format.unwrap_or(Format::Table);
            let mut text = String::new();
            if *metrics {
                text += &metrics_text(&recon::recon_metrics(&r), format);
            }
            if *thresholds {
                let full = match bound {
                    TarBound::Full => r.clone(),
                    TarBound::AtMost(_) => recon::build_tar(&g, kind, TarBound::Full, &limits)?,
                };
                let th = recon::thresholds_from_tar(&full)?;
                text += &if format == Format::Json {
                    json!({"x_number": th.x_number, "under_x0": th.under_x0, "x0": th.x0}).to_string() + "\n"
                } else {
                    format!("x_number: {}\nunder_x0: {}\nx0: {}\n", th.x_number, th.under_x0, th.x0)
                };
            }
            if !*metrics && !*thresholds {
                text = emit_recon(&r, format);
            }
            Ok(Reply::ok(text))
        }
        Command::Tj { graph, metrics, kind } => {
            let g = load_graph(graph, stdin)?;
            let r = recon::build_tj(&g, (*kind).into(), &limits)?;
            let format = format.unwrap_or(Format::Table);
            Ok(Reply::ok(if *metrics {
                metrics_text(&recon::recon_metrics(&r), format)
            } else {
                emit_recon(&r, format)
            }))
        }
        Command::Iso { a, b } => {
            let g = load_graph(a, stdin)?;
            let h = load_graph(b, stdin)?;
            let m = iso::are_isomorphic(
                &pdrecon_core::SparseGraph::from(&g),
                &pdrecon_core::SparseGraph::from(&h),
            )?;
            let json_out = format == Some(Format::Json);
            Ok(match m {
                Some(map) => Reply::ok(if json_out {
                    json!({"isomorphic": true, "mapping": map}).to_string() + "\n"
                } else {
                    let pairs: Vec<String> = map.iter().enumerate().map(|(u, v)| format!("{u}->{v}")).collect();
                    format!("isomorphic\nmapping: {}\n", pairs.join(" "))
                }),
                None => Reply {
                    text: if json_out {
                        json!({"isomorphic": false}).to_string() + "\n"
                    } else {
                        "not isomorphic\n".into()
                    },
                    code: 1,
                },
            })
        }
        Command::Unique { graph, n, kind } => {
            let g = load_graph(graph, stdin)?;
            let kind = PropertyKind::from(*kind);
            let target = recon::build_tar(&g, kind, TarBound::Full, &limits)?;
            let found = iso::uniqueness_search(target.graph(), *n, kind, &limits)?;
            Ok(Reply::ok(match format.unwrap_or(Format::Table) {
                Format::Json => {
                    let list: Vec<_> = found.iter().map(fmt::GraphDto::from).collect();
                    serde_json::to_string(&list).map_err(FormatError::from)? + "\n"
                }
                f => {
                    let mut s = format!("{} graph(s) of order {n} with this TAR graph\n", found.len());
                    for h in &found {
                        s += &emit_graph(h, if f == Format::Table { Format::Edgelist } else { f });
                    }
                    s
                }
            }))
        }
        Command::Verify {
            only,
            budget,
            seed,
            list,
        } => {
            if *list {
                let ids: String = verify::catalog()
                    .iter()
                    .map(|c| format!("{}\t{}\n", c.id, c.description))
                    .collect();
                return Ok(Reply::ok(ids));
            }
            let cfg = SuiteConfig {
                budget: budget.map(Duration::from_secs),
                seed: *seed,
                limits,
            };
            let results = verify::run_suite(only.as_deref(), &cfg)?;
            let failed = results.iter().any(|r| r.status == Status::Fail);
            let text = match format {
                Some(Format::Json) => verify::to_json_lines(&results),
                _ => verify::to_table(&results),
            };
            Ok(Reply {
                text,
                code: i32::from(failed),
            })
        }
        Command::Export { graph, recon: which, k, kind } => {
            let g = load_graph(graph, stdin)?;
            let format = format.ok_or_else(|| CliError::Usage("export needs --format".into()))?;
            let kind = PropertyKind::from(*kind);
            Ok(Reply::ok(match which {
                None => {
                    if k.is_some() {
                        return Err(CliError::Usage("--k applies only with --recon tar".into()));
                    }
                    emit_graph(&g, format)
                }
                Some(ReconArg::Tar) => {
                    let bound = k.map_or(TarBound::Full, TarBound::AtMost);
                    emit_recon(&recon::build_tar(&g, kind, bound, &limits)?, format)
                }
                Some(ReconArg::Tj) => {
                    if k.is_some() {
                        return Err(CliError::Usage("--k applies only with --recon tar".into()));
                    }
                    emit_recon(&recon::build_tj(&g, kind, &limits)?, format)
                }
            }))
        }
    }
}

fn sets_command(
    a: &SetsArgs,
    kind: PropertyKind,
    format: Option<Format>,
    stdin: &mut dyn Read,
) -> Result<Reply, CliError> {
    let g = load_graph(&a.graph, stdin)?;
    let format = format.unwrap_or(Format::Table);
    let text = match a.sets {
        None => {
            let x = properties::x_number(&g, kind);
            let upper = properties::upper_x(&g, kind);
            if format == Format::Json {
                json!({"kind": kind.name(), "x_number": x, "upper": upper}).to_string() + "\n"
            } else {
                format!("{}: {x}\nupper: {upper}\n", kind.name())
            }
        }
        Some(SetsMode::Minimum) => emit_family(&properties::minimum_x_sets(&g, kind), format),
        Some(SetsMode::Minimal) => emit_family(&properties::minimal_x_sets(&g, kind), format),
        Some(SetsMode::Upper) => {
            let mut fam = properties::minimal_x_sets(&g, kind);
            let top = fam.max_cardinality();
            fam.sets.retain(|s| s.len() == top);
            emit_family(&fam, format)
        }
    };
    Ok(Reply::ok(text))
}
