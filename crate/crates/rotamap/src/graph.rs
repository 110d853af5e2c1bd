//! Multigraphs with parallel edges, plus a brute-force isomorphism test.
//!
//! A graph is a triple (V, E, I) where every edge is incident with exactly two
//! distinct vertices; parallel edges between the same pair are allowed. Vertex
//! and edge labels are stable strings (canonical coset representatives in the
//! coset-graph constructions).

use std::collections::HashMap;

use crate::error::GraphError;

#[derive(Clone, Debug)]
pub struct Edge {
    pub label: String,
    pub ends: [usize; 2],
}

#[derive(Clone)]
pub struct MultiGraph {
    vertex_labels: Vec<String>,
    edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
}

impl std::fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MultiGraph({} vertices, {} edges)",
            self.vertex_labels.len(),
            self.edges.len()
        )
    }
}

impl MultiGraph {
    pub fn new(vertex_labels: Vec<String>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let n = vertex_labels.len();
        let mut incident = vec![Vec::new(); n];
        for (ei, e) in edges.iter().enumerate() {
            let [u, v] = e.ends;
            if u >= n || v >= n {
                return Err(GraphError::BadVertex);
            }
            if u == v {
                return Err(GraphError::LoopEdge);
            }
            incident[u].push(ei);
            incident[v].push(ei);
        }
        Ok(MultiGraph {
            vertex_labels,
            edges,
            incident,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertex_labels[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    /// E(α): the edges incident with vertex `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.edges[e].ends;
        if a == v {
            b
        } else {
            a
        }
    }

    /// Distinct neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.incident[v]
            .iter()
            .map(|&e| self.other_end(e, v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of parallel edges between `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.incident[u]
            .iter()
            .filter(|&&e| self.other_end(e, u) == v)
            .count()
    }

    /// (valency, edge-multiplicity) if the graph is regular with constant
    /// multiplicity.
    pub fn regularity(&self) -> Option<(usize, usize)> {
        if self.vertex_count() == 0 {
            return None;
        }
        let k = self.neighbors(0).len();
        let lambda = if k == 0 {
            return None;
        } else {
            self.multiplicity(0, self.neighbors(0)[0])
        };
        for v in 0..self.vertex_count() {
            let nb = self.neighbors(v);
            if nb.len() != k {
                return None;
            }
            for u in nb {
                if self.multiplicity(v, u) != lambda {
                    return None;
                }
            }
        }
        Some((k, lambda))
    }

    pub fn is_simple(&self) -> bool {
        (0..self.vertex_count()).all(|v| {
            self.neighbors(v)
                .into_iter()
                .all(|u| self.multiplicity(v, u) == 1)
        })
    }

    /// Connected components as vertex sets.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut comps = Vec::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Length of a shortest cycle in the underlying simple graph, counting a
    /// parallel class as girth 2; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        if (0..self.vertex_count()).any(|v| {
            self.neighbors(v)
                .iter()
                .any(|&u| self.multiplicity(v, u) > 1)
        }) {
            return Some(2);
        }
        let mut best: Option<usize> = None;
        for start in 0..self.vertex_count() {
            let mut dist = vec![usize::MAX; self.vertex_count()];
            let mut parent = vec![usize::MAX; self.vertex_count()];
            dist[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        let len = dist[v] + dist[u] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Invariant used to pre-sort vertices in the isomorphism search: valency
    /// plus the sorted multiset of incident multiplicities.
    fn vertex_invariant(&self, v: usize) -> (usize, Vec<usize>) {
        let mut mults: Vec<usize> = self
            .neighbors(v)
            .into_iter()
            .map(|u| self.multiplicity(v, u))
            .collect();
        mults.sort_unstable();
        (self.incident[v].len(), mults)
    }
}

/// Witness for a graph isomorphism: `vertex_map[v]` and `edge_map[e]` give the
/// images in the second graph.
#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

pub const DEFAULT_ISO_BUDGET: u64 = 10_000_000;

/// Brute-force backtracking isomorphism test with degree/multiplicity pruning.
///
/// Returns a witness on success, `None` if the graphs are not isomorphic, and
/// an error if the node budget is exhausted first.
pub fn graph_isomorphic(
    g1: &MultiGraph,
    g2: &MultiGraph,
    budget: u64,
) -> Result<Option<IsoWitness>, GraphError> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let n = g1.vertex_count();
    if n == 0 {
        return Ok(Some(IsoWitness {
            vertex_map: vec![],
            edge_map: vec![],
        }));
    }
    let inv1: Vec<_> = (0..n).map(|v| g1.vertex_invariant(v)).collect();
    let inv2: Vec<_> = (0..n).map(|v| g2.vertex_invariant(v)).collect();
    {
        let mut s1 = inv1.clone();
        let mut s2 = inv2.clone();
        s1.sort();
        s2.sort();
        if s1 != s2 {
            return Ok(None);
        }
    }

    // order g1's vertices by invariant rarity, then keep the search connected
    let mut by_inv: HashMap<&(usize, Vec<usize>), usize> = HashMap::new();
    for inv in &inv1 {
        *by_inv.entry(inv).or_insert(0) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (by_inv[&inv1[v]], inv1[v].clone(), v));
    let mut placed = vec![false; n];
    let mut search_order = Vec::with_capacity(n);
    for &seed in &order {
        if placed[seed] {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([seed]);
        placed[seed] = true;
        while let Some(v) = queue.pop_front() {
            search_order.push(v);
            let mut nb = g1.neighbors(v);
            nb.sort_by_key(|&u| (by_inv[&inv1[u]], u));
            for u in nb {
                if !placed[u] {
                    placed[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }

    // candidates that share a label are tried first: coset constructions over
    // the same subgroup pair compare against themselves frequently
    let label_index: HashMap<&str, usize> = (0..n).map(|v| (g2.vertex_label(v), v)).collect();

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut nodes: u64 = 0;

    fn consistent(g1: &MultiGraph, g2: &MultiGraph, mapping: &[usize], v: usize, w: usize) -> bool {
        for u in g1.neighbors(v) {
            let mu = mapping[u];
            if mu != usize::MAX && g2.multiplicity(w, mu) != g1.multiplicity(v, u) {
                return false;
            }
        }
        // also forbid images adjacent to non-neighbours
        for x in g2.neighbors(w) {
            if let Some(v1) = mapping.iter().position(|&m| m == x) {
                if g1.multiplicity(v, v1) != g2.multiplicity(w, x) {
                    return false;
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn backtrack(
        g1: &MultiGraph,
        g2: &MultiGraph,
        inv1: &[(usize, Vec<usize>)],
        inv2: &[(usize, Vec<usize>)],
        label_index: &HashMap<&str, usize>,
        search_order: &[usize],
        depth: usize,
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool, GraphError> {
        if depth == search_order.len() {
            return Ok(true);
        }
        let v = search_order[depth];
        let mut candidates: Vec<usize> = (0..g2.vertex_count())
            .filter(|&w| !used[w] && inv2[w] == inv1[v])
            .collect();
        if let Some(&same) = label_index.get(g1.vertex_label(v)) {
            if let Some(pos) = candidates.iter().position(|&w| w == same) {
                candidates.swap(0, pos);
            }
        }
        for w in candidates {
            *nodes += 1;
            if *nodes > budget {
                return Err(GraphError::SearchCapExceeded { budget });
            }
            if !consistent(g1, g2, mapping, v, w) {
                continue;
            }
            mapping[v] = w;
            used[w] = true;
            if backtrack(
                g1,
                g2,
                inv1,
                inv2,
                label_index,
                search_order,
                depth + 1,
                mapping,
                used,
                nodes,
                budget,
            )? {
                return Ok(true);
            }
            mapping[v] = usize::MAX;
            used[w] = false;
        }
        Ok(false)
    }

    let found = backtrack(
        g1,
        g2,
        &inv1,
        &inv2,
        &label_index,
        &search_order,
        0,
        &mut mapping,
        &mut used,
        &mut nodes,
        budget,
    )?;
    if !found {
        return Ok(None);
    }

    // pair edges within each parallel class, in index order
    let mut buckets: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (ei, e) in g2.edges().iter().enumerate() {
        let mut ends = e.ends;
        ends.sort_unstable();
        buckets.entry((ends[0], ends[1])).or_default().push(ei);
    }
    let mut edge_map = vec![usize::MAX; g1.edge_count()];
    for (ei, e) in g1.edges().iter().enumerate() {
        let mut ends = [mapping[e.ends[0]], mapping[e.ends[1]]];
        ends.sort_unstable();
        let bucket = buckets
            .get_mut(&(ends[0], ends[1]))
            .expect("consistent vertex map preserves multiplicities");
        edge_map[ei] = bucket.pop().expect("multiplicities match");
    }
    Ok(Some(IsoWitness {
        vertex_map: mapping,
        edge_map,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> MultiGraph {
        let labels = (0..n).map(|i| format!("v{i}")).collect();
        let edges = (0..n)
            .map(|i| Edge {
                label: format!("e{i}"),
                ends: [i, (i + 1) % n],
            })
            .collect();
        MultiGraph::new(labels, edges).unwrap()
    }

    #[test]
    fn rejects_loops_and_bad_vertices() {
        let bad = MultiGraph::new(
            vec!["a".into()],
            vec![Edge {
                label: "e".into(),
                ends: [0, 0],
            }],
        );
        assert!(matches!(bad, Err(GraphError::LoopEdge)));
        let bad = MultiGraph::new(
            vec!["a".into()],
            vec![Edge {
                label: "e".into(),
                ends: [0, 1],
            }],
        );
        assert!(matches!(bad, Err(GraphError::BadVertex)));
    }

    #[test]
    fn triangle_is_isomorphic_to_itself_and_k3() {
        let c3 = cycle(3);
        let w = graph_isomorphic(&c3, &c3, DEFAULT_ISO_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(w.vertex_map.len(), 3);
        let k3 = MultiGraph::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![
                Edge {
                    label: "xy".into(),
                    ends: [0, 1],
                },
                Edge {
                    label: "yz".into(),
                    ends: [1, 2],
                },
                Edge {
                    label: "xz".into(),
                    ends: [0, 2],
                },
            ],
        )
        .unwrap();
        assert!(graph_isomorphic(&c3, &k3, DEFAULT_ISO_BUDGET)
            .unwrap()
            .is_some());
    }

    #[test]
    fn distinguishes_multiplicity() {
        let c3 = cycle(3);
        let mut edges: Vec<Edge> = c3.edges().to_vec();
        edges.push(Edge {
            label: "extra".into(),
            ends: [0, 1],
        });
        let doubled_edge = MultiGraph::new(c3.vertex_labels().to_vec(), edges).unwrap();
        let c4 = cycle(4);
        assert!(graph_isomorphic(&c3, &doubled_edge, DEFAULT_ISO_BUDGET)
            .unwrap()
            .is_none());
        assert!(graph_isomorphic(&c3, &c4, DEFAULT_ISO_BUDGET)
            .unwrap()
            .is_none());
        assert_eq!(doubled_edge.regularity(), None);
        assert_eq!(doubled_edge.girth(), Some(2));
    }

    #[test]
    fn search_budget_is_enforced() {
        let c = cycle(12);
        let err = graph_isomorphic(&c, &c, 3).unwrap_err();
        assert!(matches!(err, GraphError::SearchCapExceeded { budget: 3 }));
    }

    #[test]
    fn cycle_properties() {
        let c5 = cycle(5);
        assert_eq!(c5.regularity(), Some((2, 1)));
        assert!(c5.is_connected());
        assert!(c5.is_simple());
        assert_eq!(c5.girth(), Some(5));
    }
}
