//! Arc-transitive coset graphs with finite edge-multiplicity.
//!
//! Given a group G with subgroups H, J such that H ≠ G and |J : H∩J| = 2, the
//! coset graph Cos(G,H,J) has vertex set [G:H], edge set [G:J], and the edge
//! Jy incident with the two distinct vertices Hy and Hgy, where g is an
//! arc-reverser chosen from J∖(H∩J). Setting K = H∩H^g and L = K⟨g⟩, the graph
//! is regular of valency k = |H:K| with edge-multiplicity λ = |K:H∩J|, and
//! Cos(G,H,L) is its simple base graph.

use std::collections::{HashMap, HashSet};

use crate::coset::{core, CosetSpace};
use crate::error::{GraphError, GroupError};
use crate::graph::{graph_isomorphic, Edge, IsoWitness, MultiGraph, DEFAULT_ISO_BUDGET};
use crate::group::Group;
use crate::perm::Perm;

/// Derived data of a coset-graph construction.
#[derive(Clone, Debug)]
pub struct GraphParams {
    pub k: usize,
    pub lambda: usize,
    pub connected: bool,
    /// K = H ∩ H^g, the stabiliser of the base vertex pair.
    pub k_group: Group,
    /// L = K⟨g⟩, the setwise stabiliser of the base pair; Cos(G,H,L) is the
    /// base graph.
    pub l_group: Group,
    /// The chosen arc-reverser: the least element of J∖(H∩J).
    pub g: Perm,
}

/// A built coset graph together with the acting data.
#[derive(Clone, Debug)]
pub struct CosetGraph {
    pub graph: MultiGraph,
    pub params: GraphParams,
    pub ambient: Group,
    pub vspace: CosetSpace,
    pub espace: CosetSpace,
}

impl CosetGraph {
    /// Vertex index of the base vertex H (the coset of the identity).
    pub fn base_vertex(&self) -> usize {
        self.vspace.index_of(&self.ambient.identity())
    }

    /// Edge index of the base edge J.
    pub fn base_edge(&self) -> usize {
        self.espace.index_of(&self.ambient.identity())
    }

    pub fn act_vertex(&self, v: usize, g: &Perm) -> usize {
        self.vspace.act(v, g)
    }

    pub fn act_edge(&self, e: usize, g: &Perm) -> usize {
        self.espace.act(e, g)
    }
}

fn check_subgroups(ambient: &Group, h: &Group, j: &Group) -> Result<(), GraphError> {
    if !h.is_subgroup_of(ambient) || !j.is_subgroup_of(ambient) {
        return Err(GroupError::NotASubgroup.into());
    }
    Ok(())
}

/// Builds Cos(G,H,J) with the canonical arc-reverser (the least element of
/// J∖(H∩J)).
pub fn build_coset_graph(ambient: &Group, h: &Group, j: &Group) -> Result<CosetGraph, GraphError> {
    build_with(ambient, h, j, None)
}

/// Builds Cos(G,H,J) with a caller-chosen arc-reverser from J∖(H∩J); the
/// resulting incidence does not depend on the choice.
pub fn build_coset_graph_with_reverser(
    ambient: &Group,
    h: &Group,
    j: &Group,
    g: &Perm,
) -> Result<CosetGraph, GraphError> {
    build_with(ambient, h, j, Some(g.clone()))
}

fn build_with(
    ambient: &Group,
    h: &Group,
    j: &Group,
    reverser: Option<Perm>,
) -> Result<CosetGraph, GraphError> {
    check_subgroups(ambient, h, j)?;
    if h.order() == ambient.order() {
        return Err(GraphError::HEqualsG);
    }
    let h_cap_j = h.intersect(j);
    let index = j.order() / h_cap_j.order();
    if index != 2 {
        return Err(GraphError::BadIndex { found: index });
    }
    let g = match reverser {
        Some(g) => {
            if !j.contains(&g) || h_cap_j.contains(&g) {
                return Err(GraphError::GInH);
            }
            g
        }
        None => j
            .elements()
            .iter()
            .filter(|x| !h_cap_j.contains(x))
            .min()
            .expect("index 2 guarantees elements outside H∩J")
            .clone(),
    };
    debug_assert!(h_cap_j.contains(&(&g * &g)));

    let k_group = h.intersect(&h.conjugate(&g));
    let mut l_gens = k_group.generators().to_vec();
    l_gens.push(g.clone());
    let l_group = Group::generated(ambient.degree(), &l_gens)?;
    let k = h.order() / k_group.order();
    let lambda = k_group.order() / h_cap_j.order();

    let vspace = CosetSpace::new(ambient, h)?;
    let espace = CosetSpace::new(ambient, j)?;

    let mut edges = Vec::with_capacity(espace.len());
    for y in espace.reps() {
        let u = vspace.index_of(y);
        let v = vspace.index_of(&(&g * y));
        debug_assert_ne!(u, v, "g ∉ H forces distinct endpoints");
        edges.push(Edge {
            label: y.label(),
            ends: [u, v],
        });
    }
    let vertex_labels = vspace.reps().iter().map(|r| r.label()).collect();
    let graph = MultiGraph::new(vertex_labels, edges)?;

    let mut hj_gens = h.generators().to_vec();
    hj_gens.extend_from_slice(j.generators());
    let connected = Group::generated(ambient.degree(), &hj_gens)?.order() == ambient.order();

    Ok(CosetGraph {
        graph,
        params: GraphParams {
            k,
            lambda,
            connected,
            k_group,
            l_group,
            g,
        },
        ambient: ambient.clone(),
        vspace,
        espace,
    })
}

/// The simple base graph Cos(G,H,L) with L = K⟨g⟩.
pub fn base_graph(ambient: &Group, h: &Group, j: &Group) -> Result<CosetGraph, GraphError> {
    let built = build_coset_graph(ambient, h, j)?;
    build_coset_graph(ambient, h, &built.params.l_group)
}

/// The simple coset graph SimpCos(G,H,HgH): vertices [G:H], with Hx ~ Hy iff
/// yx⁻¹ ∈ HgH.
pub fn simp_cos(ambient: &Group, h: &Group, g: &Perm) -> Result<MultiGraph, GraphError> {
    check_subgroups(ambient, h, &Group::cyclic(g))?;
    if h.contains(g) {
        return Err(GraphError::GInH);
    }
    let vspace = CosetSpace::new(ambient, h)?;
    let mut pairs: HashSet<(usize, usize)> = HashSet::new();
    for (vi, rep) in vspace.reps().iter().enumerate() {
        for hh in h.elements() {
            // neighbour coset H(ghx) of Hx
            let w = vspace.index_of(&(&(g * hh) * rep));
            if w != vi {
                pairs.insert((vi.min(w), vi.max(w)));
            }
        }
    }
    let mut pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
    pairs.sort_unstable();
    let vertex_labels: Vec<String> = vspace.reps().iter().map(|r| r.label()).collect();
    let edges = pairs
        .into_iter()
        .map(|(u, v)| Edge {
            label: format!("{}|{}", vertex_labels[u], vertex_labels[v]),
            ends: [u, v],
        })
        .collect();
    MultiGraph::new(vertex_labels, edges)
}

/// All subgroups of a small group, by growing the subgroup lattice one
/// generator at a time.
pub fn all_subgroups(g: &Group) -> Vec<Group> {
    let mut known: Vec<Group> = vec![Group::trivial(g.degree())];
    let mut keys: HashSet<Vec<Perm>> = HashSet::new();
    keys.insert(known[0].elements().to_vec());
    let mut head = 0;
    while head < known.len() {
        let current = known[head].clone();
        head += 1;
        for x in g.elements() {
            if current.contains(x) {
                continue;
            }
            let mut gens = current.generators().to_vec();
            gens.push(x.clone());
            let bigger = Group::generated(g.degree(), &gens)
                .expect("subgroup of a materialised group stays under the cap");
            let mut key: Vec<Perm> = bigger.elements().to_vec();
            key.sort();
            if keys.insert(key) {
                known.push(bigger);
            }
        }
    }
    known.sort_by_key(|s| (s.order(), s.elements().to_vec()));
    known
}

/// Enumerates the (G,μ)-extenders of Cos(G,H,J) obtained by replacing J with a
/// subgroup J′ ≤ J that contains an odd power of an arc-reverser: each yields
/// Cos(G,H,J′) with edge-multiplicity scaled by μ = |J:J′|.
pub fn mu_extenders(
    ambient: &Group,
    h: &Group,
    j: &Group,
) -> Result<Vec<(Group, u64)>, GraphError> {
    check_subgroups(ambient, h, j)?;
    if h.order() == ambient.order() {
        return Err(GraphError::HEqualsG);
    }
    if j.order() > 256 {
        return Err(GraphError::SubgroupTooLarge { order: j.order() });
    }
    let h_cap_j = h.intersect(j);
    if j.order() / h_cap_j.order() != 2 {
        return Err(GraphError::BadIndex {
            found: j.order() / h_cap_j.order(),
        });
    }
    let reversers: Vec<&Perm> = j
        .elements()
        .iter()
        .filter(|x| !h_cap_j.contains(x))
        .collect();
    let mut odd_powers: HashSet<Perm> = HashSet::new();
    for r in &reversers {
        let order = r.order();
        let mut b = 1;
        while b <= order {
            odd_powers.insert(r.pow(b as i64));
            b += 2;
        }
    }
    let mut out = Vec::new();
    for sub in all_subgroups(j) {
        if !odd_powers.iter().any(|p| sub.contains(p)) {
            continue;
        }
        let meet = h.intersect(&sub);
        if sub.order() / meet.order() != 2 {
            continue;
        }
        let mu = (j.order() / sub.order()) as u64;
        out.push((sub, mu));
    }
    out.sort_by_key(|(sub, mu)| (*mu, sub.elements().to_vec()));
    Ok(out)
}

/// The permutation group that G induces on V ∪ E (vertices first, then edges).
pub fn induced_group(cg: &CosetGraph) -> Group {
    let nv = cg.vspace.len();
    let ne = cg.espace.len();
    let project = |g: &Perm| -> Perm {
        let mut images = Vec::with_capacity(nv + ne);
        for v in 0..nv {
            images.push(cg.vspace.act(v, g));
        }
        for e in 0..ne {
            images.push(nv + cg.espace.act(e, g));
        }
        Perm::from_images(images).expect("group action permutes V ∪ E")
    };
    let gens: Vec<Perm> = cg.ambient.generators().iter().map(project).collect();
    Group::generated(nv + ne, &gens).expect("induced group is no larger than G")
}

/// Quotients out M = Core_G(H∩J): returns the faithfully acting induced group
/// on V ∪ E and the coset graph it defines, which is isomorphic to the input
/// construction.
pub fn quotient_core(
    ambient: &Group,
    h: &Group,
    j: &Group,
) -> Result<(Group, CosetGraph), GraphError> {
    let cg = build_coset_graph(ambient, h, j)?;
    let induced = induced_group(&cg);
    let m = core(ambient, &h.intersect(j))?;
    debug_assert_eq!(induced.order() * m.order(), ambient.order());
    let nv = cg.vspace.len();
    let base_v = cg.base_vertex();
    let base_e = nv + cg.base_edge();
    let h_bar = Group::from_elements(
        induced.degree(),
        induced
            .elements()
            .iter()
            .filter(|p| p.apply(base_v) == base_v)
            .cloned()
            .collect(),
    );
    let j_bar = Group::from_elements(
        induced.degree(),
        induced
            .elements()
            .iter()
            .filter(|p| p.apply(base_e) == base_e)
            .cloned()
            .collect(),
    );
    let quotient = build_coset_graph(&induced, &h_bar, &j_bar)?;
    Ok((induced, quotient))
}

/// Recovers the coset representation of an arc-transitive action: H is the
/// stabiliser of the arc's vertex, J the stabiliser of its edge.
///
/// `act_v` and `act_e` give the action of a group element on vertex and edge
/// indices of `graph`.
pub fn recover_coset_rep(
    ambient: &Group,
    graph: &MultiGraph,
    act_v: impl Fn(&Perm, usize) -> usize,
    act_e: impl Fn(&Perm, usize) -> usize,
    arc: (usize, usize),
) -> Result<(Group, Group), GraphError> {
    let (alpha, e) = arc;
    if !graph.edge(e).ends.contains(&alpha) {
        return Err(GraphError::BadVertex);
    }
    // orbit of the base arc must cover all 2|E| arcs
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut queue = vec![(alpha, e)];
    seen.insert((alpha, e));
    while let Some((v, ed)) = queue.pop() {
        for g in ambient.generators() {
            let img = (act_v(g, v), act_e(g, ed));
            if seen.insert(img) {
                queue.push(img);
            }
        }
    }
    if seen.len() != 2 * graph.edge_count() {
        return Err(GraphError::NotArcTransitive);
    }
    let h = Group::from_elements(
        ambient.degree(),
        ambient
            .elements()
            .iter()
            .filter(|g| act_v(g, alpha) == alpha)
            .cloned()
            .collect(),
    );
    let j = Group::from_elements(
        ambient.degree(),
        ambient
            .elements()
            .iter()
            .filter(|g| act_e(g, e) == e)
            .cloned()
            .collect(),
    );
    Ok((h, j))
}

/// The identity-on-cosets witness that a quotient construction is isomorphic
/// to the original: maps each coset label through the induced element.
pub fn quotient_witness(
    original: &CosetGraph,
    induced: &Group,
    quotient: &CosetGraph,
) -> Option<IsoWitness> {
    let nv = original.vspace.len();
    let ne = original.espace.len();
    if quotient.vspace.len() != nv || quotient.espace.len() != ne {
        return None;
    }
    let project = |g: &Perm| -> Perm {
        let mut images = Vec::with_capacity(nv + ne);
        for v in 0..nv {
            images.push(original.vspace.act(v, g));
        }
        for e in 0..ne {
            images.push(nv + original.espace.act(e, g));
        }
        Perm::from_images(images).expect("group action permutes V ∪ E")
    };
    let _ = induced;
    let vertex_map: Vec<usize> = (0..nv)
        .map(|v| quotient.vspace.index_of(&project(original.vspace.rep(v))))
        .collect();
    let edge_map: Vec<usize> = (0..ne)
        .map(|e| quotient.espace.index_of(&project(original.espace.rep(e))))
        .collect();
    // verify bijectivity and incidence
    let mut vseen = vec![false; nv];
    for &v in &vertex_map {
        if vseen[v] {
            return None;
        }
        vseen[v] = true;
    }
    let mut eseen = vec![false; ne];
    for &e in &edge_map {
        if eseen[e] {
            return None;
        }
        eseen[e] = true;
    }
    for (ei, edge) in original.graph.edges().iter().enumerate() {
        let image = &quotient.graph.edge(edge_map[ei]).ends;
        let mut expect = [vertex_map[edge.ends[0]], vertex_map[edge.ends[1]]];
        expect.sort_unstable();
        let mut got = *image;
        got.sort_unstable();
        if expect != got {
            return None;
        }
    }
    Some(IsoWitness {
        vertex_map,
        edge_map,
    })
}

/// Convenience: isomorphism test with the default budget.
pub fn isomorphic(g1: &MultiGraph, g2: &MultiGraph) -> Result<bool, GraphError> {
    Ok(graph_isomorphic(g1, g2, DEFAULT_ISO_BUDGET)?.is_some())
}

/// Parallel-class view used by DOT export and the multiplicity checks:
/// (u, v, multiplicity) per adjacent pair.
pub fn parallel_classes(graph: &MultiGraph) -> Vec<(usize, usize, usize)> {
    let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
    for e in graph.edges() {
        let mut ends = e.ends;
        ends.sort_unstable();
        *counts.entry((ends[0], ends[1])).or_insert(0) += 1;
    }
    let mut out: Vec<(usize, usize, usize)> =
        counts.into_iter().map(|((u, v), m)| (u, v, m)).collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn smallest_legal_instance_is_k2() {
        let g = Group::cyclic(&Perm::from_cycles(2, &[&[0, 1]]));
        let h = Group::trivial(2);
        let cg = build_coset_graph(&g, &h, &g).unwrap();
        assert_eq!(cg.graph.vertex_count(), 2);
        assert_eq!(cg.graph.edge_count(), 1);
        assert_eq!(cg.params.k, 1);
        assert_eq!(cg.params.lambda, 1);
        let (hh, jj) = recover_coset_rep(
            &g,
            &cg.graph,
            |p, v| cg.act_vertex(v, p),
            |p, e| cg.act_edge(e, p),
            (cg.base_vertex(), cg.base_edge()),
        )
        .unwrap();
        assert_eq!(hh.order(), 1);
        assert_eq!(jj.order(), 2);
    }

    #[test]
    fn h_equals_g_rejected() {
        let g = Group::cyclic(&Perm::from_cycles(2, &[&[0, 1]]));
        assert!(matches!(
            build_coset_graph(&g, &g, &g),
            Err(GraphError::HEqualsG)
        ));
    }

    #[test]
    fn bad_index_rejected() {
        let g = Group::generated(
            3,
            &[
                Perm::from_cycles(3, &[&[0, 1, 2]]),
                Perm::from_cycles(3, &[&[0, 1]]),
            ],
        )
        .unwrap();
        let h = Group::cyclic(&Perm::from_cycles(3, &[&[0, 1]]));
        let err = build_coset_graph(&g, &h, &g).unwrap_err();
        assert!(matches!(err, GraphError::BadIndex { found: 3 }));
    }

    #[test]
    fn remark_core_example_is_extended_triangle() {
        let entry = catalog::core_example(3).unwrap();
        let cg = build_coset_graph(
            &entry.group,
            entry.subgroup("H").unwrap(),
            entry.subgroup("J").unwrap(),
        )
        .unwrap();
        assert_eq!(cg.graph.vertex_count(), 3);
        assert_eq!(cg.graph.edge_count(), 9);
        assert_eq!(cg.params.k, 2);
        assert_eq!(cg.params.lambda, 3);
        let base = base_graph(
            &entry.group,
            entry.subgroup("H").unwrap(),
            entry.subgroup("J").unwrap(),
        )
        .unwrap();
        assert_eq!(base.graph.edge_count(), 3);
        assert!(base.graph.is_simple());
        // Core_G(L) is the Z factor
        let l_core = core(&entry.group, &cg.params.l_group).unwrap();
        assert_eq!(l_core.order(), 3);
    }

    #[test]
    fn petersen_two_extender() {
        let entry = catalog::petersen(catalog::PetersenVariant::A5).unwrap();
        let h = entry.subgroup("H").unwrap();
        let j = entry.subgroup("J").unwrap();
        let cg = build_coset_graph(&entry.group, h, j).unwrap();
        assert_eq!(cg.graph.vertex_count(), 10);
        assert_eq!(cg.graph.edge_count(), 30);
        assert_eq!(cg.params.k, 3);
        assert_eq!(cg.params.lambda, 2);
        let base = base_graph(&entry.group, h, j).unwrap();
        assert_eq!(base.graph.edge_count(), 15);
        assert_eq!(base.graph.regularity(), Some((3, 1)));
        // base graph matches SimpCos
        let sc = simp_cos(&entry.group, h, &cg.params.g).unwrap();
        assert!(isomorphic(&base.graph, &sc).unwrap());
    }

    #[test]
    fn petersen_extender_counts() {
        let a5 = catalog::petersen(catalog::PetersenVariant::A5).unwrap();
        let exts = mu_extenders(
            &a5.group,
            a5.subgroup("H").unwrap(),
            a5.subgroup("L").unwrap(),
        )
        .unwrap();
        let proper: Vec<_> = exts.iter().filter(|(_, mu)| *mu > 1).collect();
        assert_eq!(proper.len(), 2);
        assert!(proper.iter().all(|(_, mu)| *mu == 2));

        let s5 = catalog::petersen(catalog::PetersenVariant::S5).unwrap();
        let exts = mu_extenders(
            &s5.group,
            s5.subgroup("H").unwrap(),
            s5.subgroup("L").unwrap(),
        )
        .unwrap();
        let four: Vec<_> = exts.iter().filter(|(_, mu)| *mu == 4).collect();
        assert_eq!(four.len(), 2);
        assert!(exts.iter().any(|(_, mu)| *mu == 1));
    }

    #[test]
    fn g_in_h_rejected_by_simp_cos() {
        let g = Group::generated(
            3,
            &[
                Perm::from_cycles(3, &[&[0, 1, 2]]),
                Perm::from_cycles(3, &[&[0, 1]]),
            ],
        )
        .unwrap();
        let h = Group::cyclic(&Perm::from_cycles(3, &[&[0, 1]]));
        assert!(matches!(
            simp_cos(&g, &h, &Perm::from_cycles(3, &[&[0, 1]])),
            Err(GraphError::GInH)
        ));
    }

    #[test]
    fn quotient_core_shrinks_engineered_example() {
        // G = S3 × Z3 with H ∩ J ⊇ Z3 so that the core is non-trivial
        let entry = catalog::core_example(3).unwrap();
        let g = &entry.group;
        let t = entry.element("t").unwrap().clone(); // the Z3 shift
        let mut h_gens = entry.subgroup("H").unwrap().generators().to_vec();
        h_gens.push(t.clone());
        let h = Group::generated(g.degree(), &h_gens).unwrap();
        let mut j_gens = entry.subgroup("J").unwrap().generators().to_vec();
        j_gens.push(t);
        let j = Group::generated(g.degree(), &j_gens).unwrap();
        let (induced, quotient) = quotient_core(g, &h, &j).unwrap();
        assert_eq!(induced.order(), g.order() / 3);
        let original = build_coset_graph(g, &h, &j).unwrap();
        assert!(quotient_witness(&original, &induced, &quotient).is_some());
        assert!(isomorphic(&original.graph, &quotient.graph).unwrap());
    }

    #[test]
    fn recover_rejects_intransitive_actions() {
        let entry = catalog::petersen(catalog::PetersenVariant::A5).unwrap();
        let cg = build_coset_graph(
            &entry.group,
            entry.subgroup("H").unwrap(),
            entry.subgroup("J").unwrap(),
        )
        .unwrap();
        // the arc orbit of a cyclic subgroup cannot cover all 60 arcs
        let small = Group::cyclic(entry.element("r").unwrap());
        let err = recover_coset_rep(
            &small,
            &cg.graph,
            |p, v| cg.act_vertex(v, p),
            |p, e| cg.act_edge(e, p),
            (cg.base_vertex(), cg.base_edge()),
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::NotArcTransitive));
    }

    #[test]
    fn extender_enumeration_rejects_large_subgroups() {
        let big_cycle: Vec<usize> = (0..512).collect();
        let g = Group::cyclic(&Perm::from_cycles(512, &[&big_cycle]));
        let h = Group::trivial(512);
        let err = mu_extenders(&g, &h, &g).unwrap_err();
        assert!(matches!(err, GraphError::SubgroupTooLarge { order: 512 }));
    }

    #[test]
    fn recover_round_trip_on_extended_triangle() {
        let entry = catalog::core_example(3).unwrap();
        let cg = build_coset_graph(
            &entry.group,
            entry.subgroup("H").unwrap(),
            entry.subgroup("J").unwrap(),
        )
        .unwrap();
        let (h, j) = recover_coset_rep(
            &entry.group,
            &cg.graph,
            |p, v| cg.act_vertex(v, p),
            |p, e| cg.act_edge(e, p),
            (cg.base_vertex(), cg.base_edge()),
        )
        .unwrap();
        let rebuilt = build_coset_graph(&entry.group, &h, &j).unwrap();
        assert!(isomorphic(&cg.graph, &rebuilt.graph).unwrap());
    }
}
