//! DIMACS-style edge files: `p edge <n> <m>`, `e <u> <v>` with 1-based ids,
//! `c` comment lines.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt::Write;

pub fn parse(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    let mut declared_m = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |msg: &str| Error::Parse { line, msg: msg.to_string() };
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if g.is_some() {
                    return Err(err("duplicate problem line"));
                }
                if tok.next() != Some("edge") {
                    return Err(err("expected `p edge <n> <m>`"));
                }
                let n: usize = tok.next().and_then(|t| t.parse().ok()).ok_or_else(|| err("bad vertex count"))?;
                declared_m = tok.next().and_then(|t| t.parse().ok()).ok_or_else(|| err("bad edge count"))?;
                g = Some(Graph::with_vertices(0..n));
            }
            Some("e") => {
                let graph = g.as_mut().ok_or_else(|| err("edge before problem line"))?;
                let mut end = || -> Result<usize> {
                    let v: usize = tok.next().and_then(|t| t.parse().ok()).ok_or_else(|| err("bad vertex id"))?;
                    if v == 0 || !graph.contains(v - 1) {
                        return Err(err(&format!("vertex {v} out of range")));
                    }
                    Ok(v - 1)
                };
                let (u, v) = (end()?, end()?);
                graph.add_edge(u, v).map_err(|_| err("loop"))?;
            }
            Some(other) => return Err(err(&format!("unknown line type `{other}`"))),
        }
    }
    let g = g.ok_or(Error::Parse { line: 0, msg: "missing problem line".into() })?;
    if g.m() != declared_m {
        return Err(Error::Parse { line: 0, msg: format!("header declares {declared_m} edges, found {}", g.m()) });
    }
    Ok(g)
}

/// Writes `g` after compacting its ids to `1..=n`. Labels become comment
/// lines `c label <id> <text>`.
pub fn write(g: &Graph) -> String {
    let (h, _) = g.compacted();
    let mut out = String::new();
    for (v, l) in h.labels() {
        writeln!(out, "c label {} {}", v + 1, l).expect("string write");
    }
    writeln!(out, "p edge {} {}", h.n(), h.m()).expect("string write");
    for (u, v) in h.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("string write");
    }
    out
}

/// Reads labels written by [`write`] back onto a parsed graph.
pub fn parse_with_labels(text: &str) -> Result<Graph> {
    let mut g = parse(text)?;
    for line in text.lines() {
        let mut tok = line.splitn(4, ' ');
        if let (Some("c"), Some("label"), Some(id), Some(l)) = (tok.next(), tok.next(), tok.next(), tok.next()) {
            if let Ok(v) = id.parse::<usize>() {
                if v >= 1 && g.contains(v - 1) {
                    g.set_label(v - 1, l.trim_end());
                }
            }
        }
    }
    Ok(g)
}
