//! File formats: group files, graph/map JSON, and DOT.
//!
//! Group file: `{"degree": d, "generators": {"<name>": [img0, img1, ...]}}`
//! with permutations as 0-based image arrays and free-form names.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalog::CatalogEntry;
use crate::error::GroupError;
use crate::graph::MultiGraph;
use crate::maps::CombMap;
use crate::perm::Perm;
use crate::rotary::CycleSeq;

/// On-disk group file.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: BTreeMap<String, Vec<usize>>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn named_perms(&self) -> Result<BTreeMap<String, Perm>, GroupError> {
        self.generators
            .iter()
            .map(|(name, images)| {
                if images.len() != self.degree {
                    return Err(GroupError::DegreeMismatch);
                }
                Ok((name.clone(), Perm::from_images(images.clone())?))
            })
            .collect()
    }

    pub fn from_entry(entry: &CatalogEntry) -> Self {
        GroupFile {
            degree: entry.group.degree(),
            generators: entry
                .elements
                .iter()
                .map(|(name, p)| (name.clone(), p.images().collect()))
                .collect(),
        }
    }
}

pub fn graph_json(graph: &MultiGraph) -> Value {
    json!({
        "vertices": graph.vertex_labels(),
        "edges": graph
            .edges()
            .iter()
            .map(|e| json!({"id": e.label, "ends": [
                graph.vertex_label(e.ends[0]),
                graph.vertex_label(e.ends[1]),
            ]}))
            .collect::<Vec<_>>(),
    })
}

/// DOT rendering; parallel edges collapse to one line with a `multiplicity`
/// attribute.
pub fn graph_dot(graph: &MultiGraph, name: &str) -> String {
    let mut out = format!("graph \"{name}\" {{\n");
    for v in 0..graph.vertex_count() {
        out.push_str(&format!("  v{v} [label=\"{}\"];\n", graph.vertex_label(v)));
    }
    for (u, v, m) in crate::cosetgraph::parallel_classes(graph) {
        if m == 1 {
            out.push_str(&format!("  v{u} -- v{v};\n"));
        } else {
            out.push_str(&format!("  v{u} -- v{v} [multiplicity={m}];\n"));
        }
    }
    out.push_str("}\n");
    out
}

pub fn cycle_json(cycle: &CycleSeq, host: &MultiGraph) -> Value {
    json!({
        "edges": cycle
            .edge_ids
            .iter()
            .map(|&e| host.edge(e).label.clone())
            .collect::<Vec<_>>(),
        "vertices": cycle
            .vertex_trace
            .iter()
            .map(|&v| host.vertex_label(v).to_string())
            .collect::<Vec<_>>(),
    })
}

pub fn map_json(map: &CombMap) -> Result<Value, crate::error::MapError> {
    let graph = map.graph();
    let (chi, flags) = map.surface_check()?;
    let orientable = map.orientability()?;
    Ok(json!({
        "vertices": graph.vertex_labels(),
        "edges": graph
            .edges()
            .iter()
            .map(|e| json!({"id": e.label, "ends": [
                graph.vertex_label(e.ends[0]),
                graph.vertex_label(e.ends[1]),
            ]}))
            .collect::<Vec<_>>(),
        "faces": map
            .faces
            .iter()
            .map(|f| json!({
                "id": f.label,
                "boundary_edges": f
                    .boundary
                    .edge_ids
                    .iter()
                    .map(|&e| graph.edge(e).label.clone())
                    .collect::<Vec<_>>(),
                "boundary_vertices": f
                    .boundary
                    .vertex_trace
                    .iter()
                    .map(|&v| graph.vertex_label(v).to_string())
                    .collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>(),
        "chi": chi,
        "orientable": orientable,
        "flags": flags,
        "construction": map.meta.kind_name(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn group_file_round_trip_preserves_labels() {
        let entry = catalog::hypercube(3, 1).unwrap();
        let file = GroupFile::from_entry(&entry);
        let text = serde_json::to_string(&file).unwrap();
        let parsed = GroupFile::parse(&text).unwrap();
        let perms = parsed.named_perms().unwrap();
        for (name, p) in &entry.elements {
            assert_eq!(perms[name], *p, "element {name}");
        }
    }

    #[test]
    fn dot_collapses_parallel_edges() {
        let entry = catalog::core_example(3).unwrap();
        let cg = crate::cosetgraph::build_coset_graph(
            &entry.group,
            entry.subgroup("H").unwrap(),
            entry.subgroup("J").unwrap(),
        )
        .unwrap();
        let dot = graph_dot(&cg.graph, "c3x3");
        assert_eq!(dot.matches("multiplicity=3").count(), 3);
    }
}
