use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{json, Value};

use super::{lattice_view, ComponentClass, TransitionGraph};

/// `{nodes: [{id, state}], edges: [{from, to, triangle}], components: [{id,
/// class, size, min?, max?}]}`.
pub fn graph_json(g: &TransitionGraph) -> Value {
    let nodes: Vec<Value> = g.states.iter().enumerate().map(|(id, s)| json!({ "id": id, "state": s })).collect();
    let edges: Vec<Value> =
        g.edges.iter().map(|e| json!({ "from": e.from, "to": e.to, "triangle": e.site })).collect();
    let components: Vec<Value> = g
        .components
        .iter()
        .map(|c| {
            let mut obj = json!({ "id": c.id, "class": c.class, "size": c.size() });
            if c.class == ComponentClass::Acyclic {
                if let [min] = c.local_minima[..] {
                    obj["min"] = json!(min);
                }
                if let [max] = c.local_maxima[..] {
                    obj["max"] = json!(max);
                }
            }
            obj
        })
        .collect();
    json!({ "nodes": nodes, "edges": edges, "components": components })
}

/// Graphviz digraph; within an acyclic component, states with the same
/// total move count from the minimum share a rank.
pub fn graph_dot(g: &TransitionGraph) -> String {
    let mut out = String::from("digraph transitions {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (id, s) in g.states.iter().enumerate() {
        let pairs: Vec<String> = s.pairs().iter().map(|(w, v)| format!("{w}:{v}")).collect();
        writeln!(out, "  s{id} [label=\"{id}\\n{}\"];", pairs.join(" ")).unwrap();
    }
    for c in &g.components {
        if c.class != ComponentClass::Acyclic {
            continue;
        }
        let Ok(lv) = lattice_view(g, c.id) else { continue };
        let mut levels: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (&s, phi) in &lv.phi {
            levels.entry(phi.total()).or_default().push(s);
        }
        for members in levels.values().filter(|m| m.len() > 1) {
            let names: Vec<String> = members.iter().map(|s| format!("s{s}")).collect();
            writeln!(out, "  {{ rank=same; {}; }}", names.join("; ")).unwrap();
        }
    }
    for e in &g.edges {
        writeln!(out, "  s{} -> s{} [label=\"{}\"];", e.from, e.to, e.site).unwrap();
    }
    out.push_str("}\n");
    out
}
