//! Plain-text temporal edge lists.
//!
//! One edge per line as whitespace-separated `u v t [λ]`. Vertex labels are
//! arbitrary tokens, `t` and `λ` are non-negative decimal integers and `λ`
//! defaults to 1. Lines starting with `#` and blank lines are skipped; LF and
//! CRLF line endings are accepted and LF is written.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use tgl_core::{OrderedEdgeList, TemporalEdge, Time, VertexId};

use crate::error::{Error, Result};

/// A graph together with the original label of every dense vertex id.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: OrderedEdgeList,
    labels: Vec<String>,
    ids: HashMap<String, VertexId>,
}

impl LoadedGraph {
    /// Wraps a graph whose vertices are labelled by their decimal ids.
    pub fn unlabelled(graph: OrderedEdgeList) -> Self {
        let labels: Vec<String> = (0..graph.num_vertices()).map(|v| v.to_string()).collect();
        let ids = labels.iter().cloned().zip(0..).collect();
        Self { graph, labels, ids }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn id_of(&self, label: &str) -> Option<VertexId> {
        self.ids.get(label).copied()
    }
}

/// Loads an edge list file. Labels are numbered in order of first
/// appearance; an undirected load stores both directions of every edge.
pub fn load_ordered_edge_list(path: impl AsRef<Path>, directed: bool) -> Result<LoadedGraph> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_edge_list(BufReader::with_capacity(1 << 20, file), directed).map_err(|e| match e {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    })
}

pub fn read_edge_list(mut reader: impl BufRead, directed: bool) -> Result<LoadedGraph> {
    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<String, VertexId> = HashMap::new();
    let mut edges = Vec::new();
    let mut line = String::new();
    let mut number = 0;
    loop {
        line.clear();
        let read = reader.read_line(&mut line).map_err(|e| Error::io("<input>", e))?;
        if read == 0 {
            break;
        }
        number += 1;
        let content = line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if !(3..=4).contains(&fields.len()) {
            return Err(parse_error(number, format!("expected `u v t [lambda]`, found {} fields", fields.len())));
        }
        let mut intern = |label: &str| match ids.get(label) {
            Some(&id) => id,
            None => {
                let id = labels.len();
                labels.push(label.to_string());
                ids.insert(label.to_string(), id);
                id
            }
        };
        let u = intern(fields[0]);
        let v = intern(fields[1]);
        let t = parse_time(fields[2], "timestamp", number)?;
        let lambda = match fields.get(3) {
            Some(field) => parse_time(field, "transition time", number)?,
            None => 1,
        };
        edges.push(TemporalEdge::new(u, v, t, lambda));
    }
    let n = labels.len();
    let graph = if directed { OrderedEdgeList::new(n, edges)? } else { OrderedEdgeList::new_undirected(n, edges)? };
    Ok(LoadedGraph { graph, labels, ids })
}

fn parse_time(field: &str, what: &str, line: usize) -> Result<Time> {
    if field.starts_with('-') {
        return Err(parse_error(line, format!("negative {what} `{field}`")));
    }
    field.parse().map_err(|_| parse_error(line, format!("{what} `{field}` is not a non-negative integer")))
}

fn parse_error(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}

/// Options for [`write_edge_list`].
#[derive(Debug, Clone, Copy, Default)]
pub struct WriteOptions {
    /// Drop the λ column when every edge has `λ = 1`.
    pub omit_unit_lambda: bool,
}

/// Writes the stored edges in stream order, using `labels` when given and
/// dense ids otherwise. Undirected graphs are written in their expanded form,
/// so reloading them as directed reproduces the same edges.
pub fn write_edge_list(
    g: &OrderedEdgeList,
    labels: Option<&[String]>,
    path: impl AsRef<Path>,
    options: WriteOptions,
) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    write_edges(g, labels, &mut out, options).and_then(|_| out.flush()).map_err(|e| Error::io(path, e))
}

pub fn write_edges(
    g: &OrderedEdgeList,
    labels: Option<&[String]>,
    out: &mut impl Write,
    options: WriteOptions,
) -> std::io::Result<()> {
    let omit = options.omit_unit_lambda && g.edges().iter().all(|e| e.lambda == 1);
    for e in g.edges() {
        match labels {
            Some(l) => write!(out, "{} {} {}", l[e.u], l[e.v], e.t)?,
            None => write!(out, "{} {} {}", e.u, e.v, e.t)?,
        }
        if omit {
            writeln!(out)?;
        } else {
            writeln!(out, " {}", e.lambda)?;
        }
    }
    Ok(())
}
