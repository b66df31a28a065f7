//! Deterministic JSON reports.
//!
//! Objects are `serde_json` maps, which keep keys sorted, so the body of a
//! report depends only on the command and its input. Timing sits in its
//! own top-level field and is left out of the fingerprint.

use std::collections::BTreeMap;
use std::time::Duration;

use qint_core::catalog::known_graphs;
use qint_core::{canonical_code, encode_graph6, CanonicalCode, Graph, IntegerSpectrum, VertexColoring};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA: u32 = 1;

pub struct Report {
    pub command: Value,
    pub input: Value,
    pub results: Value,
    pub certificate: Option<Value>,
}

impl Report {
    pub fn new(command: Value, input: Value, results: Value) -> Self {
        Report { command, input, results, certificate: None }
    }

    pub fn with_certificate(mut self, c: Value) -> Self {
        self.certificate = Some(c);
        self
    }

    /// Hex SHA-256 of the command echo and the input description.
    pub fn fingerprint(&self) -> String {
        let body = json!({ "command": self.command, "input": self.input });
        hex::encode(Sha256::digest(body.to_string().as_bytes()))
    }

    pub fn to_json(&self, elapsed: Option<Duration>) -> Value {
        let mut v = json!({
            "schema": SCHEMA,
            "command": self.command,
            "fingerprint": self.fingerprint(),
            "results": self.results,
        });
        if let Some(c) = &self.certificate {
            v["certificate"] = c.clone();
        }
        if let Some(t) = elapsed {
            v["timing"] = json!({ "elapsed_ms": t.as_secs_f64() * 1e3 });
        }
        v
    }
}

fn uniform_code(g: &Graph) -> CanonicalCode {
    canonical_code(g, &VertexColoring::uniform(g.order()))
}

/// Catalog ids keyed by uncoloured canonical code.
pub struct CatalogIndex(BTreeMap<CanonicalCode, &'static str>);

impl CatalogIndex {
    pub fn new() -> Self {
        CatalogIndex(known_graphs().into_iter().map(|k| (uniform_code(&k.graph), k.id)).collect())
    }

    pub fn id_of(&self, g: &Graph) -> Option<&'static str> {
        self.0.get(&uniform_code(g)).copied()
    }
}

pub fn spectrum_json(s: &IntegerSpectrum) -> Value {
    json!(s.values())
}

/// A found graph with its spectrum and catalog id when it has one.
pub fn graph_entry(g: &Graph, s: &IntegerSpectrum, index: &CatalogIndex) -> Value {
    json!({
        "graph6": encode_graph6(g),
        "vertices": g.order(),
        "edges": g.size(),
        "spectrum": spectrum_json(s),
        "catalog_id": index.id_of(g),
    })
}

/// Floats rounded to nine decimals so diagnostic output is stable.
pub fn rounded(values: &[f64]) -> Value {
    json!(values.iter().map(|x| (x * 1e9).round() / 1e9).collect::<Vec<f64>>())
}
