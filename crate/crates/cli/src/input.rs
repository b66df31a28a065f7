//! Reading graphs from files, stdin, inline graph6 or catalog ids.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use qint_core::catalog::{known_graph, KNOWN_IDS};
use qint_core::{decode_graph6, Graph};

/// Raw input text plus where it came from.
pub struct Source {
    pub name: String,
    pub text: String,
}

impl Source {
    pub fn read(path: &str) -> Result<Source> {
        let text = if path == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        } else {
            fs::read_to_string(Path::new(path)).with_context(|| format!("reading {path}"))?
        };
        Ok(Source { name: path.to_string(), text })
    }

    pub fn inline(text: &str) -> Source {
        Source { name: "<inline>".into(), text: text.to_string() }
    }
}

/// Graphs in a source: an edge list (first token is a number) holds one
/// graph, anything else is read as graph6 with one graph per line.
pub fn parse_graphs(src: &Source) -> Result<Vec<Graph>> {
    let first = src.text.trim_start().chars().next();
    if first.is_some_and(|c| c.is_ascii_digit()) {
        let g = Graph::parse_edge_list(&src.text).map_err(|e| anyhow!("{}: {e}", src.name))?;
        return Ok(vec![g]);
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for line in src.text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let body = line.trim_end_matches(['\n', '\r']);
        let (skip, body) = match body.strip_prefix(">>graph6<<") {
            Some(rest) => (10, rest),
            None => (0, body),
        };
        if body.is_empty() {
            continue;
        }
        let g = decode_graph6(body).map_err(|e| anyhow!("{}: graph6 parse error at byte {}: {e}", src.name, start + skip + e.offset()))?;
        out.push(g);
    }
    if out.is_empty() {
        return Err(anyhow!("{}: no graph found at byte {}", src.name, src.text.len()));
    }
    Ok(out)
}

/// A single graph from a catalog id (`G1`..`G8`), a file, or `-`.
pub fn single_graph(spec: &str) -> Result<(String, Graph)> {
    if KNOWN_IDS.contains(&spec) {
        return Ok((spec.to_string(), known_graph(spec)?.graph));
    }
    let src = Source::read(spec)?;
    let mut graphs = parse_graphs(&src)?;
    if graphs.len() != 1 {
        return Err(anyhow!("{}: expected one graph, found {}", src.name, graphs.len()));
    }
    Ok((spec.to_string(), graphs.remove(0)))
}
