//! Graph, transcript, star partition and threshold table formats.

use std::fmt::Write as _;

use mbd_core::game::{GameConfig, Player};
use mbd_core::graph::{Graph, GraphError};
use mbd_core::star_partition::StarPartition;
use mbd_core::strategy::{MatchRecord, Turn};
use mbd_core::thresholds::{CellValue, CheckStatus, ThresholdTable, ThresholdValue};
use mbd_core::vset::{VertexSet, MAX_VERTICES};
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("graph6: {message} at byte {position}")]
    Graph6 { position: usize, message: String },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("json graph: {0}")]
    Json(String),
    #[error("transcript line {line}: {message}")]
    Transcript { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn g6_error<T>(position: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Graph6 { position, message: message.into() })
}

/// Parses a graph6 string, with or without the `>>graph6<<` header.
/// Trailing whitespace is ignored.
pub fn parse_graph6(s: &str) -> Result<Graph, FormatError> {
    const HEADER: &str = ">>graph6<<";
    let offset = if s.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = s[offset..].trim_end().as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return g6_error(offset + i, format!("byte {b:#04x} outside the printable range 63..=126"));
        }
    }
    let Some(&first) = bytes.first() else {
        return g6_error(offset, "empty input");
    };
    let (n, body_start) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return g6_error(offset + bytes.len(), "truncated vertex count");
        }
        if bytes[1] == 126 {
            return g6_error(offset + 1, "graphs with more than 258047 vertices are not supported");
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return g6_error(offset, format!("{n} vertices exceed the limit of {MAX_VERTICES}"));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != need {
        let position = offset + body_start + body.len().min(need);
        return g6_error(position, format!("expected {need} adjacency bytes for {n} vertices, found {}", body.len()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        let pad = need * 6 - pairs;
        if (last - 63) & ((1 << pad) - 1) != 0 {
            return g6_error(offset + body_start + need - 1, "nonzero padding bits");
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses an edge list: an optional `n <count>` line, then one `u v` pair
/// per line. `#` starts a comment. Without the header the order is one more
/// than the largest vertex.
pub fn parse_edge_list(s: &str) -> Result<Graph, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in s.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| FormatError::EdgeList { line, message };
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let fields: Vec<&str> = text.split_whitespace().collect();
        let num = |f: &str| f.parse::<usize>().map_err(|_| err(format!("`{f}` is not a vertex number")));
        match fields.as_slice() {
            ["n", count] if n.is_none() && edges.is_empty() => n = Some(num(count)?),
            [u, v] => edges.push((num(u)?, num(v)?)),
            _ => return Err(err(format!("expected `u v`, found `{text}`"))),
        }
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::from_edges(n, edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn parse_json_graph(s: &str) -> Result<Graph, FormatError> {
    let j: JsonGraph = serde_json::from_str(s).map_err(|e| FormatError::Json(e.to_string()))?;
    Ok(Graph::from_edges(j.n, j.edges)?)
}

pub fn to_json_graph(g: &Graph) -> String {
    serde_json::to_string(&JsonGraph { n: g.n(), edges: g.edges() }).expect("plain data")
}

/// Parses a graph in whichever format the text looks like: JSON if it starts
/// with `{`, an edge list if it contains whitespace between tokens, graph6
/// otherwise.
pub fn parse_graph_auto(s: &str) -> Result<Graph, FormatError> {
    let t = s.trim();
    if t.starts_with('{') {
        parse_json_graph(t)
    } else if t.lines().count() > 1 || t.contains(' ') || t.contains('\t') {
        parse_edge_list(t)
    } else {
        parse_graph6(t)
    }
}

fn set_string(s: VertexSet) -> String {
    format!("{s}")
}

fn parse_set(text: &str) -> Option<VertexSet> {
    let inner = text.trim().strip_prefix('{')?.strip_suffix('}')?;
    let mut s = VertexSet::EMPTY;
    for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().ok()?;
        if v >= MAX_VERTICES {
            return None;
        }
        s.insert(v);
    }
    Some(s)
}

/// Plain-text transcript: one `D {..}` or `S {..}` line per move and a final
/// `RESULT D|S` line.
pub fn transcript_text(record: &MatchRecord) -> String {
    let mut s = String::new();
    for t in &record.turns {
        let _ = writeln!(s, "{} {}", t.player, set_string(t.mv));
    }
    let _ = writeln!(s, "RESULT {}", record.winner);
    s
}

pub fn parse_transcript_text(s: &str) -> Result<MatchRecord, FormatError> {
    let mut turns = Vec::new();
    let mut winner = None;
    for (idx, raw) in s.lines().enumerate() {
        let line = idx + 1;
        let err = |message: &str| FormatError::Transcript { line, message: message.into() };
        let text = raw.trim();
        if text.is_empty() {
            continue;
        }
        if winner.is_some() {
            return Err(err("text after the RESULT line"));
        }
        let (head, rest) = text.split_once(' ').ok_or_else(|| err("expected `<player> <set>`"))?;
        let player = |h: &str| {
            let mut chars = h.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => Player::from_letter(c).filter(|_| c.is_ascii_uppercase()),
                _ => None,
            }
        };
        if head == "RESULT" {
            winner = Some(player(rest.trim()).ok_or_else(|| err("winner must be D or S"))?);
        } else {
            let p = player(head).ok_or_else(|| err("player must be D or S"))?;
            let mv = parse_set(rest).ok_or_else(|| err("malformed vertex set"))?;
            turns.push(Turn { player: p, mv });
        }
    }
    let winner =
        winner.ok_or(FormatError::Transcript { line: s.lines().count(), message: "missing RESULT line".into() })?;
    Ok(MatchRecord { turns, winner })
}

pub const TRANSCRIPT_SCHEMA: &str = "mbd.transcript/1";
pub const PARTITION_SCHEMA: &str = "mbd.star-partition/1";
pub const TABLE_SCHEMA: &str = "mbd.threshold-table/1";
pub const REPORT_SCHEMA: &str = "mbd.battery-report/1";

pub fn transcript_json(
    g: &Graph,
    cfg: &GameConfig,
    dstrat: &str,
    sstrat: &str,
    record: &MatchRecord,
) -> serde_json::Value {
    json!({
        "schema": TRANSCRIPT_SCHEMA,
        "graph": to_graph6(g),
        "a": cfg.a,
        "b": cfg.b,
        "starter": cfg.starter.to_string(),
        "dominator": dstrat,
        "staller": sstrat,
        "moves": record.turns.iter().map(|t| json!({
            "player": t.player.to_string(),
            "vertices": t.mv.iter().collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "winner": record.winner.to_string(),
    })
}

pub fn partition_json(g: &Graph, p: &StarPartition) -> serde_json::Value {
    let max_leaves = g.max_degree();
    json!({
        "schema": PARTITION_SCHEMA,
        "graph": to_graph6(g),
        "width": p.width(),
        "profile": p.profile(max_leaves),
        "stars": p.stars.iter().map(|s| json!({
            "center": s.center,
            "leaves": s.leaves.iter().collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn threshold_json(v: ThresholdValue) -> serde_json::Value {
    match v {
        ThresholdValue::Finite(x) => json!(x),
        ThresholdValue::Infinite => json!("inf"),
    }
}

pub fn table_json(g: &Graph, t: &ThresholdTable) -> serde_json::Value {
    json!({
        "schema": TABLE_SCHEMA,
        "graph": to_graph6(g),
        "max_index": t.max_index,
        "cells": t.cells.iter().map(|c| json!({
            "kind": c.kind.label(),
            "index": c.index,
            "value": match c.value {
                CellValue::Value(v) => threshold_json(v),
                CellValue::Undecided => json!("undecided"),
            },
        })).collect::<Vec<_>>(),
        "checks": t.checks.iter().map(|c| json!({
            "name": c.name,
            "status": match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "fail",
                CheckStatus::Skipped => "skipped",
            },
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbd_core::graph::{complete, path};

    #[test]
    fn graph6_known_strings() {
        // Five vertices with edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
        assert_eq!(to_graph6(&complete(4).unwrap()), "C~");
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), complete(4).unwrap());
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn graph6_diagnostics() {
        assert_eq!(
            parse_graph6("D Qc"),
            Err(FormatError::Graph6 { position: 1, message: "byte 0x20 outside the printable range 63..=126".into() })
        );
        assert!(matches!(parse_graph6("DQ"), Err(FormatError::Graph6 { position: 2, .. })));
        assert!(matches!(parse_graph6("BA"), Err(FormatError::Graph6 { position: 1, .. })));
        assert!(matches!(parse_graph6(""), Err(FormatError::Graph6 { position: 0, .. })));
    }

    #[test]
    fn large_orders_round_trip() {
        let g = path(64).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("# a path\nn 4\n0 1\n1 2 # middle\n2 3\n").unwrap();
        assert_eq!(g, path(4).unwrap());
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(matches!(parse_edge_list("0 x"), Err(FormatError::EdgeList { line: 1, .. })));
        assert!(parse_edge_list("0 0").is_err());
        assert_eq!(parse_graph_auto("0 1\n1 2").unwrap(), path(3).unwrap());
        assert_eq!(parse_json_graph(&to_json_graph(&g)).unwrap(), g);
    }

    #[test]
    fn transcripts_round_trip() {
        let record = MatchRecord {
            turns: vec![
                Turn { player: Player::Staller, mv: VertexSet::from([2]) },
                Turn { player: Player::Dominator, mv: VertexSet::from([1, 3]) },
            ],
            winner: Player::Dominator,
        };
        let text = transcript_text(&record);
        assert_eq!(text, "S {2}\nD {1,3}\nRESULT D\n");
        assert_eq!(parse_transcript_text(&text).unwrap(), record);
        assert!(parse_transcript_text("S {2}\n").is_err());
        assert!(parse_transcript_text("X {2}\nRESULT D").is_err());
    }
}
