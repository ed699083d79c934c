use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dynmce_core::{
    build_edge_stream, enumerate_maximal_cliques, enumerate_maximal_k_cliques, insert_edge, Edge,
    Graph, IndependenceMode, Method, Tracker, VertexId,
};

use crate::error::CliError;
use crate::formats;
use crate::report::{write_csv, StatsRow};
use crate::{clock, enumeration_diff, random_point_cloud, run_bench, run_stream, StreamOptions};

#[derive(Debug, Parser)]
#[command(
    name = "dynmce",
    version,
    about = "Maximal clique enumeration under edge insertion"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub shared: Shared,
}

#[derive(Debug, Args)]
pub struct Shared {
    /// Candidate generation method.
    #[arg(long, value_enum, default_value_t = MethodArg::Proposed, global = true)]
    pub method: MethodArg,
    /// Maintain maximal k-cliques instead of maximal cliques.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: Option<u32>,
    /// Schedule equal-weight stream entries into independent rounds.
    #[arg(long, value_enum, default_value_t = ParallelArg::Off, global = true)]
    pub parallel: ParallelArg,
    /// Seed for generated inputs.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Statistics CSV destination (stdout when omitted, stderr for `insert`).
    #[arg(long, global = true)]
    pub stats_out: Option<PathBuf>,
    /// Enumeration destination.
    #[arg(long, global = true)]
    pub enum_out: Option<PathBuf>,
    /// Report zero elapsed times so outputs are byte-reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Proposed,
    Existing,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Proposed => Method::Proposed,
            MethodArg::Existing => Method::Existing,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParallelArg {
    Off,
    Conservative,
    Aggressive,
    AggressiveOneSided,
}

impl ParallelArg {
    fn mode(self) -> Option<IndependenceMode> {
        match self {
            ParallelArg::Off => None,
            ParallelArg::Conservative => Some(IndependenceMode::Conservative),
            ParallelArg::Aggressive => Some(IndependenceMode::Aggressive),
            ParallelArg::AggressiveOneSided => Some(IndependenceMode::AggressiveOneSided),
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Edge list ("u v" or "u v weight" per line).
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Point cloud (one point per line); all pairs are used.
    #[arg(long)]
    pub points: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate the maximal cliques of an edge list from scratch.
    Bootstrap {
        #[arg(long)]
        edges: PathBuf,
    },
    /// Apply one edge insertion to a stored enumeration.
    Insert {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "enum")]
        enumeration: PathBuf,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Vec<u32>,
        /// Also write the updated edge list here.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Insert an ordered edge list, or a point cloud's distance filtration.
    Stream {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Compare proposed and existing generation over the same filtration.
    Bench {
        /// Point cloud file; a random cloud is generated when omitted.
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long, default_value_t = 30)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Recompute from scratch and diff against a stored enumeration.
    Verify {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long = "enum")]
        enumeration: PathBuf,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write_to(path: Option<&Path>, text: &[u8], fallback: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => fallback
            .write_all(text)
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn csv_bytes<R: serde::Serialize>(rows: &[R]) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    write_csv(&mut buf, rows)?;
    Ok(buf)
}

fn load_source(src: &GraphSource) -> Result<Graph, CliError> {
    if let Some(p) = &src.edges {
        let lines = formats::parse_edge_list(&read(p)?)?;
        return Ok(formats::graph_from_edge_list(&lines));
    }
    let p = src.points.as_ref().expect("clap enforces one source");
    let pc = formats::parse_point_cloud(&read(p)?)?;
    let n = u32::try_from(pc.len()).map_err(|_| CliError::parse(0, "too many points"))?;
    let mut g = Graph::with_vertices(n);
    for a in 0..n {
        for b in a + 1..n {
            g.add_edge(Edge::new(a, b)?);
        }
    }
    Ok(g)
}

fn oracle_text(g: &Graph, k: Option<usize>) -> Result<String, CliError> {
    let cliques = match k {
        None => enumerate_maximal_cliques(g),
        Some(k) => enumerate_maximal_k_cliques(g, k)?,
    };
    Ok(formats::write_enumeration(&cliques))
}

/// Runs one command, writing to the given stdout/stderr.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let shared = &cli.shared;
    let k = shared.k.map(|k| k as usize);
    let method = Method::from(shared.method);
    let timing = !shared.no_timing;
    let enum_out = shared.enum_out.as_deref();
    let stats_out = shared.stats_out.as_deref();

    match &cli.command {
        Command::Bootstrap { edges } => {
            let lines = formats::parse_edge_list(&read(edges)?)?;
            let g = formats::graph_from_edge_list(&lines);
            write_to(enum_out, oracle_text(&g, k)?.as_bytes(), stdout)
        }
        Command::Insert {
            graph,
            enumeration,
            edge,
            graph_out,
        } => {
            let lines = formats::parse_edge_list(&read(graph)?)?;
            let mut g = formats::graph_from_edge_list(&lines);
            let cliques = formats::parse_enumeration(&read(enumeration)?)?;
            let mut tracker = Tracker::from_cliques(k, cliques)?;
            // vertices named only in the enumeration are isolated
            for (_, c) in tracker.store().iter() {
                for &v in c.members() {
                    g.add_vertex(v);
                }
            }
            if let Err(v) = tracker.check_consistency(&g) {
                return Err(CliError::parse(
                    0,
                    format!("enumeration does not match graph: {v}"),
                ));
            }
            let e = Edge::new(VertexId(edge[0]), VertexId(edge[1]))?;
            let clock = if timing {
                clock::monotonic_ns
            } else {
                dynmce_core::no_clock
            };
            let report = insert_edge(&mut g, &mut tracker, e, method, None, clock)?;
            write_to(
                enum_out,
                tracker.store().canonical_text().as_bytes(),
                stdout,
            )?;
            write_to(
                stats_out,
                &csv_bytes(&[StatsRow::new(1, &report, None)])?,
                stderr,
            )?;
            if let Some(p) = graph_out {
                fs::write(p, formats::write_edge_list(&g)).map_err(|e| CliError::io(p, e))?;
            }
            Ok(())
        }
        Command::Stream { source } => {
            let stream = match (&source.edges, &source.points) {
                (Some(p), _) => {
                    formats::stream_from_edge_list(&formats::parse_edge_list(&read(p)?)?)?
                }
                (None, Some(p)) => build_edge_stream(&formats::parse_point_cloud(&read(p)?)?)?,
                (None, None) => unreachable!("clap enforces one source"),
            };
            let outcome = run_stream(
                &stream,
                StreamOptions {
                    method,
                    k,
                    parallel: shared.parallel.mode(),
                    timing,
                },
            )?;
            write_to(stats_out, &csv_bytes(&outcome.rows)?, stdout)?;
            if let Some(p) = enum_out {
                fs::write(p, outcome.tracker.store().canonical_text())
                    .map_err(|e| CliError::io(p, e))?;
            }
            Ok(())
        }
        Command::Bench { points, n, dim } => {
            let pc = match points {
                Some(p) => formats::parse_point_cloud(&read(p)?)?,
                None => random_point_cloud(*n, *dim, shared.seed)?,
            };
            let stream = build_edge_stream(&pc)?;
            let (rows, tracker) = run_bench(&stream, k, timing)?;
            write_to(stats_out, &csv_bytes(&rows)?, stdout)?;
            if let Some(p) = enum_out {
                fs::write(p, tracker.store().canonical_text()).map_err(|e| CliError::io(p, e))?;
            }
            Ok(())
        }
        Command::Verify {
            source,
            enumeration,
        } => {
            let g = load_source(source)?;
            let stored = formats::parse_enumeration(&read(enumeration)?)?;
            let actual = formats::write_enumeration(&stored);
            let expected = oracle_text(&g, k)?;
            if actual == expected {
                writeln!(stdout, "ok: {} cliques", stored.len())
                    .map_err(|e| CliError::io("<stdout>", e))?;
                return Ok(());
            }
            let diff = enumeration_diff(&expected, &actual);
            for line in diff.iter().take(20) {
                let _ = writeln!(stderr, "{line}");
            }
            Err(CliError::Mismatch(format!(
                "{} differing lines",
                diff.len()
            )))
        }
    }
}

/// Parses `args`, runs, and maps the outcome to a process exit code.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn main_process() -> std::process::ExitCode {
    let code = main_with(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    std::process::ExitCode::from(code)
}
