//! The `tgl` command line. Every command loads a graph, runs one library
//! operation and renders the result either as text or as one JSON document
//! that echoes the configuration next to the result.

use std::collections::HashMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use tgl_core::centrality::{
    temporal_degree, temporal_katz, temporal_pagerank, ClosenessOptions, DegreeMode, KatzParams, PageRankParams,
};
use tgl_core::correlation::kendall_tau_b;
use tgl_core::distance::TemporalDistances;
use tgl_core::metrics;
use tgl_core::repr::{IncidenceLists, TrsGraph, DEFAULT_LINE_GRAPH_BUDGET};
use tgl_core::stats::GraphStatistics;
use tgl_core::{DistanceType, NormalizeOptions, TimeInterval, VertexId};

use crate::error::{Error, Result};
use crate::format;
use crate::io::{self, LoadedGraph, WriteOptions};
use crate::parallel;

#[derive(Debug, Parser, Serialize)]
#[command(name = "tgl", version, about = "Temporal graph analysis")]
pub struct Cli {
    #[command(flatten)]
    #[serde(flatten)]
    pub common: Common,

    #[command(subcommand)]
    #[serde(flatten)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    /// Edge list with lines `u v t [lambda]`.
    #[arg(short, long, global = true)]
    pub input: Option<PathBuf>,

    /// Store every input edge in both directions.
    #[arg(long, global = true)]
    pub undirected: bool,

    /// First admissible departure time.
    #[arg(long, global = true)]
    pub start: Option<u64>,

    /// Last admissible arrival time.
    #[arg(long, global = true)]
    pub end: Option<u64>,

    /// Drop edges whose endpoints coincide.
    #[arg(long, global = true)]
    pub remove_self_loops: bool,

    /// Drop exact duplicate edges.
    #[arg(long, global = true)]
    pub dedup: bool,

    /// Shift timestamps so the earliest one is 0.
    #[arg(long, global = true)]
    pub shift_time_origin: bool,

    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    #[serde(skip)]
    pub format: OutputFormat,

    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    #[serde(skip)]
    pub output: Option<PathBuf>,

    /// Worker threads; 0 uses all available cores.
    #[arg(long, default_value_t = 0, global = true)]
    #[serde(skip)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    Stream,
    Ilists,
    Trs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    In,
    Out,
}

fn parse_distance(s: &str) -> std::result::Result<DistanceType, String> {
    s.parse().map_err(|_| {
        format!("unknown distance `{s}`; expected one of {}", DistanceType::ALL.map(|d| d.name()).join(", "))
    })
}

fn serialize_distance<S: serde::Serializer>(d: &DistanceType, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(d.name())
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DistanceArgs {
    /// earliest-arrival, latest-departure, fastest, min-transition-sum or min-hops.
    #[arg(short, long, value_parser = parse_distance)]
    #[serde(serialize_with = "serialize_distance")]
    pub distance: DistanceType,

    #[arg(long, value_enum, default_value_t = Representation::Ilists)]
    pub repr: Representation,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Summary counts of the graph.
    Stats,
    /// Optimal distances from one vertex (latest departure: towards it).
    Distances {
        #[arg(long)]
        source: String,
        #[command(flatten)]
        #[serde(flatten)]
        distance: DistanceArgs,
    },
    /// Largest pair distance over reachable pairs.
    Diameter {
        #[command(flatten)]
        #[serde(flatten)]
        distance: DistanceArgs,
    },
    /// Harmonic closeness of every vertex.
    Closeness {
        #[command(flatten)]
        #[serde(flatten)]
        distance: DistanceArgs,
        /// Contribution of a reachable vertex at distance zero.
        #[arg(long, default_value_t = 1.0)]
        cap: f64,
    },
    /// The k vertices of highest closeness.
    Topk {
        #[arg(short, long)]
        k: usize,
        #[arg(short, long, value_parser = parse_distance)]
        #[serde(serialize_with = "serialize_distance")]
        distance: DistanceType,
        #[arg(long, default_value_t = 1.0)]
        cap: f64,
    },
    /// Edge betweenness over minimum-hop walks.
    Betweenness {
        /// Largest line graph, in arcs, that may be built.
        #[arg(long, default_value_t = DEFAULT_LINE_GRAPH_BUDGET)]
        budget: usize,
    },
    /// In- or out-degree of every vertex.
    Degree {
        #[arg(long, value_enum, default_value_t = Direction::Out)]
        mode: Direction,
    },
    /// Temporal Katz centrality.
    Katz {
        #[arg(long, default_value_t = 0.5)]
        beta: f64,
    },
    /// Temporal PageRank.
    Pagerank {
        #[arg(long, default_value_t = 0.85)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
    },
    /// Burstiness of every vertex, or of one vertex pair.
    Burstiness {
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Option<Vec<String>>,
    },
    /// Temporal clustering coefficient.
    Clustering {
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Temporal efficiency.
    Efficiency {
        #[command(flatten)]
        #[serde(flatten)]
        distance: DistanceArgs,
        #[arg(long, default_value_t = 1.0)]
        cap: f64,
    },
    /// Local topological overlap of every vertex plus the global mean.
    Overlap,
    /// Rewrite the (cleaned, restricted) edge list.
    Convert {
        /// Drop the lambda column when every lambda is 1.
        #[arg(long)]
        omit_unit_lambda: bool,
    },
    /// Kendall tau-b between two `id score` files over the same ids.
    Kendall { first: PathBuf, second: PathBuf },
}

impl Cli {
    pub fn interval(&self) -> Result<TimeInterval> {
        let start = self.common.start.unwrap_or(0);
        Ok(match self.common.end {
            Some(end) => TimeInterval::new(start, end)?,
            None => TimeInterval::from_start(start),
        })
    }
}

/// Text and structured renderings of one result.
struct Outcome {
    text: String,
    json: Value,
}

/// Runs the parsed command and returns the bytes to emit.
pub fn execute(cli: &Cli) -> Result<String> {
    let interval = cli.interval()?;
    let outcome = if cli.common.threads == 0 {
        dispatch(cli, interval)?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.common.threads)
            .build()
            .map_err(|e| Error::Usage(format!("cannot start thread pool: {e}")))?;
        pool.install(|| dispatch(cli, interval))?
    };
    match cli.common.format {
        OutputFormat::Text => Ok(outcome.text),
        OutputFormat::Json => {
            let document = json!({ "config": cli, "result": outcome.json });
            Ok(serde_json::to_string_pretty(&document)? + "\n")
        }
    }
}

fn load(cli: &Cli) -> Result<LoadedGraph> {
    let path = cli.common.input.as_ref().ok_or_else(|| Error::Usage("--input is required".to_string()))?;
    let mut loaded = io::load_ordered_edge_list(path, !cli.common.undirected)?;
    let options = NormalizeOptions {
        remove_self_loops: cli.common.remove_self_loops,
        deduplicate: cli.common.dedup,
        shift_time_origin: cli.common.shift_time_origin,
    };
    if options.remove_self_loops || options.deduplicate || options.shift_time_origin {
        loaded.graph = loaded.graph.normalize(options);
    }
    Ok(loaded)
}

fn vertex(g: &LoadedGraph, label: &str) -> Result<VertexId> {
    g.id_of(label).ok_or_else(|| Error::Usage(format!("unknown vertex `{label}`")))
}

fn labelled<T: Serialize>(labels: &[String], values: &[T]) -> Value {
    Value::Array(labels.iter().zip(values).map(|(l, v)| json!({ "id": l, "value": v })).collect())
}

fn check_cap(cap: f64) -> Result<ClosenessOptions> {
    if cap.is_finite() && cap >= 0.0 {
        Ok(ClosenessOptions { zero_distance_cap: cap })
    } else {
        Err(Error::Usage("--cap must be finite and non-negative".to_string()))
    }
}

/// Runs `f` on the requested representation of `g`.
fn with_repr<T>(
    g: &LoadedGraph,
    repr: Representation,
    f: impl FnOnce(&(dyn TemporalDistances + Sync)) -> Result<T>,
) -> Result<T> {
    match repr {
        Representation::Stream => f(&g.graph),
        Representation::Ilists => f(&IncidenceLists::from(&g.graph)),
        Representation::Trs => f(&TrsGraph::from_stream(&g.graph)),
    }
}

fn dispatch(cli: &Cli, interval: TimeInterval) -> Result<Outcome> {
    if let Command::Kendall { first, second } = &cli.command {
        return kendall(first, second);
    }
    let g = load(cli)?;
    let labels = g.labels();
    Ok(match &cli.command {
        Command::Stats => {
            let stats = GraphStatistics::of(&g.graph);
            let json = Value::Object(stats.fields().iter().map(|(k, v)| (k.to_string(), json!(v))).collect());
            Outcome { text: format::statistics_text(&stats), json }
        }
        Command::Distances { source, distance: d } => {
            let s = vertex(&g, source)?;
            let values = with_repr(&g, d.repr, |r| Ok(r.distances(s, d.distance, interval).values))?;
            Outcome { text: format::distances_text(labels, &values), json: labelled(labels, &values) }
        }
        Command::Diameter { distance: d } => {
            let diameter = with_repr(&g, d.repr, |r| Ok(parallel::diameter(r, d.distance, interval)?))?;
            Outcome { text: format::scalar_text("diameter", diameter), json: json!({ "diameter": diameter }) }
        }
        Command::Closeness { distance: d, cap } => {
            let options = check_cap(*cap)?;
            let c = with_repr(&g, d.repr, |r| Ok(parallel::closeness(r, d.distance, interval, options)?))?;
            Outcome { text: format::scores_text(labels, &c.scores), json: labelled(labels, &c.scores) }
        }
        Command::Topk { k, distance, cap } => {
            let options = check_cap(*cap)?;
            let il = IncidenceLists::from(&g.graph);
            let top = parallel::topk_closeness(&il, *k, *distance, interval, options)?;
            let json = Value::Array(
                top.iter()
                    .enumerate()
                    .map(|(i, (v, s))| json!({ "rank": i + 1, "id": labels[*v], "score": s }))
                    .collect(),
            );
            Outcome { text: format::topk_text(labels, &top), json }
        }
        Command::Betweenness { budget } => {
            let b = parallel::edge_betweenness(&g.graph, interval, *budget)?;
            let json = Value::Array(
                g.graph
                    .edges()
                    .iter()
                    .zip(&b.scores)
                    .map(|(e, s)| json!({ "u": labels[e.u], "v": labels[e.v], "t": e.t, "lambda": e.lambda, "score": s }))
                    .collect(),
            );
            Outcome { text: format::edge_scores_text(&g.graph, labels, &b.scores), json }
        }
        Command::Degree { mode } => {
            let mode = match mode {
                Direction::In => DegreeMode::In,
                Direction::Out => DegreeMode::Out,
            };
            let restricted = g.graph.restrict_to_interval(interval);
            let d = temporal_degree(&restricted, mode);
            Outcome { text: format::scores_text(labels, &d.scores), json: labelled(labels, &d.scores) }
        }
        Command::Katz { beta } => {
            let k = temporal_katz(&g.graph, KatzParams { beta: *beta }, interval)?;
            Outcome { text: format::scores_text(labels, &k.scores), json: labelled(labels, &k.scores) }
        }
        Command::Pagerank { alpha, beta } => {
            let p = temporal_pagerank(&g.graph, PageRankParams { alpha: *alpha, beta: *beta }, interval)?;
            Outcome { text: format::scores_text(labels, &p.scores), json: labelled(labels, &p.scores) }
        }
        Command::Burstiness { edge: Some(pair) } => {
            let (u, v) = (vertex(&g, &pair[0])?, vertex(&g, &pair[1])?);
            let b = metrics::edge_burstiness(&g.graph, u, v, interval);
            Outcome { text: format::scalar_text("burstiness", b), json: json!({ "burstiness": b }) }
        }
        Command::Burstiness { edge: None } => {
            let b = parallel::per_vertex(g.graph.num_vertices(), |u| metrics::node_burstiness(&g.graph, u, interval));
            Outcome { text: format::optional_scores_text(labels, &b), json: labelled(labels, &b) }
        }
        Command::Clustering { vertex: Some(label) } => {
            let c = metrics::temporal_clustering_coefficient(&g.graph, vertex(&g, label)?, interval);
            Outcome { text: format::scalar_text("clustering", Some(c)), json: json!({ "clustering": c }) }
        }
        Command::Clustering { vertex: None } => {
            let c = parallel::per_vertex(g.graph.num_vertices(), |u| {
                metrics::temporal_clustering_coefficient(&g.graph, u, interval)
            });
            Outcome { text: format::scores_text(labels, &c), json: labelled(labels, &c) }
        }
        Command::Efficiency { distance: d, cap } => {
            let options = check_cap(*cap)?;
            let e = with_repr(&g, d.repr, |r| Ok(parallel::efficiency(r, d.distance, interval, options)?))?;
            Outcome { text: format::scalar_text("efficiency", e), json: json!({ "efficiency": e }) }
        }
        Command::Overlap => {
            let local = metrics::local_topological_overlaps(&g.graph, interval);
            let global = metrics::global_topological_overlap(&g.graph, interval);
            let mut text = format::scores_text(labels, &local);
            text.push_str(&format::scalar_text("global", Some(global)));
            Outcome { text, json: json!({ "local": labelled(labels, &local), "global": global }) }
        }
        Command::Convert { omit_unit_lambda } => {
            let restricted = g.graph.restrict_to_interval(interval);
            let mut buf = Vec::new();
            io::write_edges(&restricted, Some(labels), &mut buf, WriteOptions { omit_unit_lambda: *omit_unit_lambda })
                .map_err(|e| Error::io("<buffer>", e))?;
            let text = String::from_utf8(buf).expect("labels and numbers are UTF-8");
            let json = Value::Array(
                restricted
                    .edges()
                    .iter()
                    .map(|e| json!({ "u": labels[e.u], "v": labels[e.v], "t": e.t, "lambda": e.lambda }))
                    .collect(),
            );
            Outcome { text, json }
        }
        Command::Kendall { .. } => unreachable!("handled before loading"),
    })
}

fn kendall(first: &PathBuf, second: &PathBuf) -> Result<Outcome> {
    let read = |p: &PathBuf| -> Result<Vec<(String, f64)>> {
        let text = std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
        format::parse_scores(&text)
    };
    let a = read(first)?;
    let b: HashMap<String, f64> = read(second)?.into_iter().collect();
    if a.len() != b.len() {
        return Err(Error::Usage("score files cover different id sets".to_string()));
    }
    let mut xs = Vec::with_capacity(a.len());
    let mut ys = Vec::with_capacity(a.len());
    for (id, x) in &a {
        let y = b.get(id).ok_or_else(|| Error::Usage(format!("id `{id}` missing from {}", second.display())))?;
        xs.push(*x);
        ys.push(*y);
    }
    let tau = kendall_tau_b(&xs, &ys)?;
    Ok(Outcome { text: format::scalar_text("tau_b", tau), json: json!({ "tau_b": tau }) })
}

/// Parses `args`, runs the command and writes the result; returns the
/// process exit code (0 success, 1 runtime error, 2 usage error).
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = execute(&cli).and_then(|out| match &cli.common.output {
        Some(path) => std::fs::write(path, out).map_err(|e| Error::io(path, e)),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| Error::io("<stdout>", e))
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("tgl: {e}");
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}
