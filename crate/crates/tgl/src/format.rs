//! Text renderings shared by the CLI and library callers. Every line ends
//! with LF; reals use the shortest representation that round-trips.

use std::fmt::Write;

use tgl_core::stats::GraphStatistics;
use tgl_core::{OrderedEdgeList, Time};

/// `key: value` lines in the fixed field order.
pub fn statistics_text(stats: &GraphStatistics) -> String {
    let mut out = String::new();
    for (key, value) in stats.fields() {
        writeln!(out, "{key}: {value}").unwrap();
    }
    out
}

/// `label score` lines in id order.
pub fn scores_text(labels: &[String], scores: &[f64]) -> String {
    let mut out = String::new();
    for (label, score) in labels.iter().zip(scores) {
        writeln!(out, "{label} {score}").unwrap();
    }
    out
}

/// `label value` lines with `undefined` for missing values.
pub fn optional_scores_text(labels: &[String], scores: &[Option<f64>]) -> String {
    let mut out = String::new();
    for (label, score) in labels.iter().zip(scores) {
        match score {
            Some(s) => writeln!(out, "{label} {s}").unwrap(),
            None => writeln!(out, "{label} undefined").unwrap(),
        }
    }
    out
}

/// `label value` lines with `inf` for unreachable vertices.
pub fn distances_text(labels: &[String], values: &[Option<Time>]) -> String {
    let mut out = String::new();
    for (label, value) in labels.iter().zip(values) {
        match value {
            Some(d) => writeln!(out, "{label} {d}").unwrap(),
            None => writeln!(out, "{label} inf").unwrap(),
        }
    }
    out
}

/// `rank label score` lines, ranks starting at 1.
pub fn topk_text(labels: &[String], top: &[(usize, f64)]) -> String {
    let mut out = String::new();
    for (rank, (v, score)) in top.iter().enumerate() {
        writeln!(out, "{} {} {score}", rank + 1, labels[*v]).unwrap();
    }
    out
}

/// `u v t λ score` lines in stream order.
pub fn edge_scores_text(g: &OrderedEdgeList, labels: &[String], scores: &[f64]) -> String {
    let mut out = String::new();
    for (e, score) in g.edges().iter().zip(scores) {
        writeln!(out, "{} {} {} {} {score}", labels[e.u], labels[e.v], e.t, e.lambda).unwrap();
    }
    out
}

/// A single `key: value` line, `undefined` when missing.
pub fn scalar_text<T: std::fmt::Display>(key: &str, value: Option<T>) -> String {
    match value {
        Some(v) => format!("{key}: {v}\n"),
        None => format!("{key}: undefined\n"),
    }
}

/// Parses `id score` lines, skipping blank and `#` lines.
pub fn parse_scores(text: &str) -> Result<Vec<(String, f64)>, crate::Error> {
    let mut scores = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_error = |message: String| crate::Error::Parse { line: i + 1, message };
        let mut fields = line.split_whitespace();
        let (Some(id), Some(score), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_error("expected `id score`".to_string()));
        };
        let score: f64 = score.parse().map_err(|_| parse_error(format!("score `{score}` is not a number")))?;
        scores.push((id.to_string(), score));
    }
    Ok(scores)
}
