//! The subcommands.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context};
use qint_core::catalog::{known_graph, known_graphs, scenario, SCENARIO_IDS};
use qint_core::enumerate::brute_force_enumerate_with_stats;
use qint_core::search::{run_search_many, PruningMode, SearchConfig, SearchNode, SearchOutcome};
use qint_core::spectral::signless_laplacian;
use qint_core::{canonical_code, encode_graph6, exact_q_spectrum, float_spectrum, CanonicalCode, DegreeConstraint, Graph, IntegerSpectrum, VertexColoring};
use serde_json::{json, Value};

use crate::input::{parse_graphs, single_graph, Source};
use crate::report::{graph_entry, rounded, spectrum_json, CatalogIndex, Report};
use crate::{Failure, Outcome};

type CmdResult = Result<Outcome, Failure>;

fn report(r: Report) -> CmdResult {
    Ok(Outcome::Report { report: r, cap_hit: false, failed: false })
}

pub fn verify(path: Option<&str>, g6: Option<&str>) -> CmdResult {
    let src = match (path, g6) {
        (_, Some(s)) => Source::inline(s),
        (Some(p), None) => Source::read(p).map_err(Failure::input)?,
        (None, None) => return Err(Failure::input(anyhow!("no input given"))),
    };
    let graphs = parse_graphs(&src).map_err(Failure::input)?;
    let index = CatalogIndex::new();
    let entries: Vec<Value> = graphs.iter().map(|g| verify_one(g, &index)).collect();
    let input = json!(graphs.iter().map(encode_graph6).collect::<Vec<_>>());
    report(Report::new(json!({ "name": "verify", "source": src.name }), input, json!({ "graphs": entries })))
}

fn verify_one(g: &Graph, index: &CatalogIndex) -> Value {
    let q = signless_laplacian(g);
    let exact = exact_q_spectrum(&q).expect("signless Laplacians are symmetric and small");
    let mut v = json!({
        "graph6": encode_graph6(g),
        "vertices": g.order(),
        "edges": g.size(),
        "connected": g.is_connected(),
        "bipartite": g.is_bipartite(),
        "max_degree": g.max_degree(),
        "max_edge_degree": g.max_edge_degree(),
        "q_integral": exact.is_some(),
        "spectrum": exact.as_ref().map(spectrum_json),
        "spectral_radius": exact.as_ref().and_then(|s| s.largest()),
        "catalog_id": index.id_of(g),
    });
    if exact.is_none() {
        let f = float_spectrum(&q, 1e-12).expect("signless Laplacians are symmetric");
        v["float_spectrum"] = rounded(&f);
    }
    v
}

fn mode_name(m: PruningMode) -> &'static str {
    match m {
        PruningMode::DeficientOne => "deficient-one",
        PruningMode::DeficientAny => "deficient-any",
        PruningMode::Off => "off",
    }
}

fn certificate(out: &SearchOutcome) -> Value {
    let levels: Vec<Value> =
        out.levels.iter().map(|l| json!({ "depth": l.depth, "nodes": l.nodes, "children": l.children, "deduped": l.deduped, "found": l.found })).collect();
    json!({
        "explored": out.explored,
        "deduped": out.deduped,
        "frontier_exhausted": out.frontier_exhausted,
        "cap_hit": out.cap_hit,
        "levels": levels,
    })
}

fn found_entries(out: &SearchOutcome, index: &CatalogIndex) -> Vec<Value> {
    out.found.iter().map(|(g, s)| graph_entry(g, s, index)).collect()
}

pub fn search(seed: &str, rho: Option<u32>, cfg: &SearchConfig, pins: &[(usize, u32)], edge_cap: Option<u32>) -> CmdResult {
    cfg.validate().map_err(Failure::input)?;
    let (seeds, rho, input) = if SCENARIO_IDS.contains(&seed) {
        if !pins.is_empty() || edge_cap.is_some() {
            return Err(Failure::input(anyhow!("--pin and --edge-cap apply to seed files, not scenarios")));
        }
        let sc = scenario(seed).map_err(Failure::input)?;
        if rho.is_some_and(|r| r != sc.rho) {
            return Err(Failure::input(anyhow!("scenario {seed} is defined for rho = {}", sc.rho)));
        }
        let input = json!({ "scenario": seed, "seeds": sc.seeds.iter().map(|s| encode_graph6(s.graph())).collect::<Vec<_>>() });
        (sc.seeds, sc.rho, input)
    } else {
        let rho = rho.unwrap_or(6);
        let (_, g) = single_graph(seed).map_err(Failure::input)?;
        let node = file_seed(g.clone(), rho, cfg, pins, edge_cap)?;
        let input = json!({ "seed": encode_graph6(&g), "pins": pins, "edge_cap": node.constraint().edge_degree_cap() });
        (vec![node], rho, input)
    };
    let out = run_search_many(seeds, rho, cfg).map_err(Failure::input)?;
    let index = CatalogIndex::new();
    let command = json!({
        "name": "search",
        "seed": seed,
        "rho": rho,
        "max_vertices": cfg.max_vertices,
        "pruning": mode_name(cfg.pruning_mode),
        "dedup": cfg.dedup,
        "margin": cfg.exact_escalation_margin,
    });
    let r = Report::new(command, input, json!({ "found": found_entries(&out, &index) })).with_certificate(certificate(&out));
    Ok(Outcome::Report { report: r, cap_hit: out.cap_hit, failed: false })
}

fn file_seed(g: Graph, rho: u32, cfg: &SearchConfig, pins: &[(usize, u32)], edge_cap: Option<u32>) -> Result<SearchNode, Failure> {
    if rho < 4 {
        return Err(Failure::input(anyhow!("rho must be at least 4")));
    }
    let mut cons = DegreeConstraint::defaults(&g, rho);
    let mut colors = vec![0u8; g.order()];
    for (i, &(v, k)) in pins.iter().enumerate() {
        if v >= g.order() {
            return Err(Failure::input(anyhow!("pinned vertex {v} is out of range for a graph on {} vertices", g.order())));
        }
        if k + 2 > rho {
            return Err(Failure::input(anyhow!("pinned degree {k} exceeds rho - 2 = {}", rho - 2)));
        }
        cons = cons.pin(v, k);
        colors[v] = u8::try_from(i + 1).map_err(|_| Failure::input(anyhow!("too many pinned vertices")))?;
    }
    if let Some(cap) = edge_cap {
        cons = cons.with_edge_degree_cap(cap);
    }
    SearchNode::seed(g, cons, VertexColoring::new(colors), cfg.gate_mode()).map_err(Failure::input)
}

pub fn classify(rho: u32, oracle_nmax: usize) -> CmdResult {
    if !(4..=6).contains(&rho) {
        return Err(Failure::input(anyhow!("classify supports rho in 4..=6, got {rho}")));
    }
    if oracle_nmax > qint_core::enumerate::MAX_ENUMERATE_ORDER {
        return Err(Failure::input(anyhow!("--oracle-nmax must be at most {}", qint_core::enumerate::MAX_ENUMERATE_ORDER)));
    }
    let index = CatalogIndex::new();
    let command = json!({ "name": "classify", "rho": rho, "oracle_nmax": oracle_nmax });
    if rho < 6 {
        if oracle_nmax == 0 {
            return Err(Failure::input(anyhow!("rho < 6 is classified by enumeration; --oracle-nmax must be positive")));
        }
        let (found, _) = brute_force_enumerate_with_stats(oracle_nmax, rho).map_err(Failure::input)?;
        let members: Vec<Value> = found
            .iter()
            .map(|(g, s)| {
                let mut e = graph_entry(g, s, &index);
                e["source"] = json!("enumeration");
                e
            })
            .collect();
        return report(Report::new(command, json!(null), json!({ "members": members })));
    }

    // radius 6: the lower-radius graphs, the cubic members of the known
    // radius-6 list, and whatever the edge-degree-5 search finds
    let mut members: Vec<(Graph, IntegerSpectrum, &str)> = Vec::new();
    for k in known_graphs() {
        let source = match k.id {
            "G1" | "G2" => "radius-below-6",
            "G3" | "G4" | "G5" | "G6" | "G7" => "cubic-integral-list",
            _ => continue,
        };
        members.push((k.graph, k.expected_spectrum, source));
    }
    let sc = scenario("seed-xy").map_err(Failure::other)?;
    let out = run_search_many(sc.seeds, sc.rho, &SearchConfig::default()).map_err(Failure::other)?;
    for (g, s) in &out.found {
        members.push((g.clone(), s.clone(), "edge-degree-5-search"));
    }
    members.sort_by_key(|(g, _, _)| (index.id_of(g).unwrap_or("~"), g.order()));
    let entries: Vec<Value> = members
        .iter()
        .map(|(g, s, src)| {
            let mut e = graph_entry(g, s, &index);
            e["source"] = json!(src);
            e
        })
        .collect();
    let mut results = json!({ "members": entries });
    let mut failed = false;
    if oracle_nmax > 0 {
        let keyed = |gs: &mut dyn Iterator<Item = &Graph>| -> BTreeMap<CanonicalCode, String> {
            gs.map(|g| (canonical_code(g, &VertexColoring::uniform(g.order())), encode_graph6(g))).collect()
        };
        let (oracle, _) = brute_force_enumerate_with_stats(oracle_nmax, 6).map_err(Failure::other)?;
        let seen = keyed(&mut oracle.iter().map(|(g, _)| g));
        let expected = keyed(&mut members.iter().map(|(g, _, _)| g).filter(|g| g.order() <= oracle_nmax));
        let missing: Vec<&String> = expected.iter().filter(|(c, _)| !seen.contains_key(c)).map(|(_, s)| s).collect();
        let unexpected: Vec<&String> = seen.iter().filter(|(c, _)| !expected.contains_key(c)).map(|(_, s)| s).collect();
        failed = !missing.is_empty() || !unexpected.is_empty();
        results["oracle"] = json!({ "nmax": oracle_nmax, "confirmed": !failed, "missing": missing, "unexpected": unexpected });
    }
    let r = Report::new(command, json!(null), results).with_certificate(certificate(&out));
    Ok(Outcome::Report { report: r, cap_hit: out.cap_hit, failed })
}

pub fn enumerate(nmax: usize, rho: u32) -> CmdResult {
    let (found, stats) = brute_force_enumerate_with_stats(nmax, rho).map_err(Failure::input)?;
    let index = CatalogIndex::new();
    let graphs: Vec<Value> = found.iter().map(|(g, s)| graph_entry(g, s, &index)).collect();
    let command = json!({ "name": "enumerate", "nmax": nmax, "rho": rho });
    report(Report::new(command, json!(null), json!({ "graphs": graphs, "connected_graphs_per_order": stats.graphs_per_order })))
}

pub fn export_dot(spec: &str) -> CmdResult {
    let (name, g) = single_graph(spec).map_err(Failure::input)?;
    let id = if known_graph(&name).is_ok() { name } else { "G".to_string() };
    Ok(Outcome::Text(g.to_dot(&id)))
}

pub fn export_catalog(dir: &Path) -> CmdResult {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display())).map_err(Failure::other)?;
    let graphs = known_graphs();
    let g6: String = graphs.iter().map(|k| encode_graph6(&k.graph) + "\n").collect();
    let entries: Vec<Value> = graphs
        .iter()
        .map(|k| {
            json!({
                "id": k.id,
                "description": k.description,
                "graph6": encode_graph6(&k.graph),
                "spectrum": spectrum_json(&k.expected_spectrum),
                "vertices": k.vertices,
                "edges": k.edges,
            })
        })
        .collect();
    let json_text = serde_json::to_string_pretty(&json!({ "schema": crate::report::SCHEMA, "graphs": entries })).expect("catalog serializes") + "\n";
    let g6_path = dir.join("catalog.g6");
    let json_path = dir.join("catalog.json");
    fs::write(&g6_path, &g6).with_context(|| format!("writing {}", g6_path.display())).map_err(Failure::other)?;
    fs::write(&json_path, &json_text).with_context(|| format!("writing {}", json_path.display())).map_err(Failure::other)?;
    let command = json!({ "name": "export-catalog" });
    report(Report::new(command, json!(null), json!({ "files": ["catalog.g6", "catalog.json"], "graphs": graphs.len() })))
}

pub fn scenarios() -> CmdResult {
    let list: Vec<Value> = SCENARIO_IDS
        .iter()
        .map(|id| {
            let sc = scenario(id).expect("registered ids resolve");
            json!({ "id": sc.id, "description": sc.description, "rho": sc.rho, "seeds": sc.seeds.len(), "expected": sc.expected })
        })
        .collect();
    report(Report::new(json!({ "name": "scenarios" }), json!(null), json!({ "scenarios": list })))
}
