//! Combinatorial maps: the rotary, bi-rotary and flag-regular constructions,
//! the surface certificate, orientability, kernels, and map comparison.
//!
//! A map is a multigraph plus a face set, each face carrying its boundary
//! cycle as a sequence class. The three constructions share a pattern: a base
//! boundary cycle through the base edge, translated around the group by coset
//! representatives of the face stabiliser.
//!
//! * rotary: faces [G:⟨az⟩], boundary C(az) of length m = |az|, cyclic face
//!   stabiliser; the edge involution z swaps the two faces at the base edge.
//! * bi-rotary: faces are the translates of C(zzᵃ), one per coset of
//!   W = ⟨z,zᵃ⟩, length 2ℓ, dihedral stabiliser; z fixes both faces at the
//!   base edge. The coset triple alone does not determine the map, so faces
//!   are keyed by the normal form of their boundary cycle.
//! * flag-regular: from a triple (x,y,z) of involutions with xz = zx: faces
//!   [G:⟨y,z⟩], boundary (Jb⁰, …, Jb^{m-1}) with b = zy.

use std::collections::HashMap;

use crate::cosetgraph::{build_coset_graph, CosetGraph};
use crate::error::{GroupError, MapError, TripleError};
use crate::group::Group;
use crate::perm::Perm;
use crate::rotary::{
    canonical_cycle, vertex_rotary_graph, CycleKind, CycleSeq, RegularCycleKind, RotaryPair,
};

/// A validated flag-regular triple with its derived parameters.
#[derive(Clone)]
pub struct FlagRegularTriple {
    pub x: Perm,
    pub y: Perm,
    pub z: Perm,
    pub group: Group,
    /// a = xy, the vertex rotation.
    pub a: Perm,
    /// b = zy, the face rotation; m = |b| is the face length.
    pub b: Perm,
    pub k: usize,
    pub lambda: usize,
    pub m: u64,
    /// λ′ = |⟨a⟩ ∩ ⟨b⟩|.
    pub lambda_p: usize,
}

/// Checks the flag-regular-triple conditions: x, y, z distinct involutions,
/// xz = zx, z ∉ ⟨x,y⟩, plus |xy| ≥ 3 and |zy| ≥ 3 so the construction does
/// not degenerate.
pub fn validate_flag_regular_triple(
    x: &Perm,
    y: &Perm,
    z: &Perm,
) -> Result<FlagRegularTriple, TripleError> {
    if x.degree() != y.degree() || y.degree() != z.degree() {
        return Err(TripleError::DegreeMismatch);
    }
    for (p, name) in [(x, "x"), (y, "y"), (z, "z")] {
        if p.order() != 2 {
            return Err(TripleError::NotInvolution(name));
        }
    }
    if x == y || y == z || x == z {
        return Err(TripleError::NotDistinct);
    }
    if (x * z) != (z * x) {
        return Err(TripleError::NotCommuting);
    }
    let h = Group::generated(x.degree(), &[x.clone(), y.clone()])
        .map_err(|_| TripleError::DegreeMismatch)?;
    if h.contains(z) {
        return Err(TripleError::ZInsideH);
    }
    let a = x * y;
    let b = z * y;
    if a.order() < 3 {
        return Err(TripleError::EdgeOrderTooSmall(a.order()));
    }
    if b.order() < 3 {
        return Err(TripleError::FaceOrderTooSmall(b.order()));
    }
    let group = Group::generated(x.degree(), &[x.clone(), y.clone(), z.clone()])
        .map_err(|_| TripleError::DegreeMismatch)?;
    let ha = Group::cyclic(&a);
    let meet = ha.intersect(&ha.conjugate(z));
    let lambda = meet.order();
    let k = ha.order() / lambda;
    let lambda_p = ha.intersect(&Group::cyclic(&b)).order();
    let m = b.order();
    Ok(FlagRegularTriple {
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
        group,
        a,
        b,
        k,
        lambda,
        m,
        lambda_p,
    })
}

/// Which construction produced a map, with its generating data.
#[derive(Clone)]
pub enum MapMeta {
    Rota { pair: RotaryPair },
    BiRo { pair: RotaryPair },
    Reg { triple: FlagRegularTriple },
}

impl MapMeta {
    pub fn kind_name(&self) -> &'static str {
        match self {
            MapMeta::Rota { .. } => "rotamap",
            MapMeta::BiRo { .. } => "biromap",
            MapMeta::Reg { .. } => "regmap",
        }
    }
}

#[derive(Clone)]
pub struct Face {
    pub label: String,
    pub boundary: CycleSeq,
}

/// A combinatorial map: underlying coset graph, faces with boundary cycles,
/// and the construction metadata.
#[derive(Clone)]
pub struct CombMap {
    pub cg: CosetGraph,
    pub faces: Vec<Face>,
    pub meta: MapMeta,
    face_lookup: HashMap<Vec<String>, usize>,
    edge_faces: Vec<Vec<usize>>,
}

/// Rotary / bi-rotary verdict for a vertex-rotary map, with the taxonomy
/// label recorded as metadata.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapKind {
    Rotary,
    BiRotary,
}

impl MapKind {
    /// Edge-transitive-type tag recorded for downstream tooling.
    pub fn type_label(&self) -> &'static str {
        match self {
            MapKind::Rotary => "2^Pex",
            MapKind::BiRotary => "2*ex",
        }
    }
}

fn assemble(cg: CosetGraph, faces: Vec<Face>, meta: MapMeta) -> Result<CombMap, MapError> {
    if faces.len() < 3 {
        return Err(MapError::FewFaces);
    }
    let mut face_lookup = HashMap::with_capacity(faces.len());
    let mut edge_faces = vec![Vec::new(); cg.graph.edge_count()];
    for (fi, face) in faces.iter().enumerate() {
        if !face.boundary.validate(&cg.graph) {
            return Err(MapError::CrossCheckFailed(format!(
                "boundary of face {} is not a cycle of the underlying graph",
                face.label
            )));
        }
        let nf = face.boundary.normal_form(&cg.graph);
        if face_lookup.insert(nf, fi).is_some() {
            return Err(MapError::CrossCheckFailed(format!(
                "face {} duplicates another boundary cycle",
                face.label
            )));
        }
        for &e in &face.boundary.edge_ids {
            edge_faces[e].push(fi);
        }
    }
    Ok(CombMap {
        cg,
        faces,
        meta,
        face_lookup,
        edge_faces,
    })
}

/// Translates a base boundary cycle by each coset representative.
fn orbit_faces(cg: &CosetGraph, base: &CycleSeq, reps: &[Perm]) -> Vec<Face> {
    reps.iter()
        .map(|g| Face {
            label: g.label(),
            boundary: base.image(cg, g),
        })
        .collect()
}

/// The rotary map of a pair: faces [G:⟨az⟩] with boundary translates of
/// C(az).
pub fn rota_map(rp: &RotaryPair) -> Result<CombMap, MapError> {
    let cg = vertex_rotary_graph(rp)?;
    let (base, stab, _) = canonical_cycle(rp, &cg, CycleKind::AZ)?;
    let fspace = crate::coset::CosetSpace::new(&rp.group, &stab).map_err(GroupError::from_other)?;
    let faces = orbit_faces(&cg, &base, fspace.reps());
    assemble(cg, faces, MapMeta::Rota { pair: rp.clone() })
}

/// The bi-rotary map of a pair: one face per coset of W = ⟨z,zᵃ⟩, boundary
/// translates of C(zzᵃ).
pub fn biro_map(rp: &RotaryPair) -> Result<CombMap, MapError> {
    let cg = vertex_rotary_graph(rp)?;
    let (base, stab, _) = canonical_cycle(rp, &cg, CycleKind::ZZa)?;
    let wspace = crate::coset::CosetSpace::new(&rp.group, &stab).map_err(GroupError::from_other)?;
    let faces = orbit_faces(&cg, &base, wspace.reps());
    assemble(cg, faces, MapMeta::BiRo { pair: rp.clone() })
}

/// The flag-regular map of a triple: underlying graph Cos(G,⟨x,y⟩,⟨x,z⟩),
/// faces [G:⟨y,z⟩] with boundary (Jb⁰, …, Jb^{m-1}).
pub fn reg_map(t: &FlagRegularTriple) -> Result<CombMap, MapError> {
    let h = Group::generated(t.group.degree(), &[t.x.clone(), t.y.clone()])
        .map_err(MapError::from_group)?;
    let j = Group::generated(t.group.degree(), &[t.x.clone(), t.z.clone()])
        .map_err(MapError::from_group)?;
    let cg = build_coset_graph(&t.group, &h, &j)?;
    if cg.params.k <= 2 {
        // k = 1 is the two-vertex extender, k = 2 an extended cycle
        return Err(MapError::DegenerateGraph);
    }
    let m = t.m as usize;
    // edge Jbⁱ joins the vertices Hb^{i-1} and Hbⁱ (zb = y ∈ H)
    let mut edge_ids = Vec::with_capacity(m);
    let mut vertex_trace = Vec::with_capacity(m);
    let mut edge_power = t.group.identity();
    let mut vertex_power = t.b.inverse();
    for _ in 0..m {
        edge_ids.push(cg.espace.index_of(&edge_power));
        vertex_trace.push(cg.vspace.index_of(&vertex_power));
        edge_power = &edge_power * &t.b;
        vertex_power = &vertex_power * &t.b;
    }
    let base = CycleSeq {
        edge_ids,
        vertex_trace,
    };
    if !base.validate(&cg.graph) {
        return Err(MapError::CrossCheckFailed(
            "face rotation does not trace a cycle".to_string(),
        ));
    }
    let w = Group::generated(t.group.degree(), &[t.y.clone(), t.z.clone()])
        .map_err(MapError::from_group)?;
    let wspace = crate::coset::CosetSpace::new(&t.group, &w).map_err(GroupError::from_other)?;
    let faces = orbit_faces(&cg, &base, wspace.reps());
    assemble(cg, faces, MapMeta::Reg { triple: t.clone() })
}

impl GroupError {
    fn from_other(e: GroupError) -> MapError {
        MapError::Graph(e.into())
    }
}

impl MapError {
    fn from_group(e: GroupError) -> MapError {
        MapError::Graph(e.into())
    }
}

// -- flag structure ---------------------------------------------------------
//
// A slot is one occurrence of an edge on a face boundary; each slot carries
// two flags, one per endpoint. The three involutions are: s0 swaps the
// endpoint, s1 pivots to the neighbouring edge in the same face corner, s2
// crosses to the other face along the same edge.

pub(crate) struct FlagSystem {
    /// (face, position) per slot.
    slots: Vec<(usize, usize)>,
    slots_of_edge: Vec<Vec<usize>>,
    /// vertex of each flag; flag = 2*slot + side (0 = tail, 1 = head).
    vertex_of_flag: Vec<usize>,
    pub s0: Vec<usize>,
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
}

impl FlagSystem {
    pub(crate) fn build(map: &CombMap) -> Result<FlagSystem, MapError> {
        let graph = &map.cg.graph;
        let mut slots = Vec::new();
        let mut slot_of_face_pos = HashMap::new();
        let mut slots_of_edge = vec![Vec::new(); graph.edge_count()];
        for (fi, face) in map.faces.iter().enumerate() {
            for (pos, &e) in face.boundary.edge_ids.iter().enumerate() {
                let slot = slots.len();
                slots.push((fi, pos));
                slot_of_face_pos.insert((fi, pos), slot);
                slots_of_edge[e].push(slot);
            }
        }
        for (e, se) in slots_of_edge.iter().enumerate() {
            if se.len() != 2 {
                return Err(MapError::NotASurface(format!(
                    "edge {} lies on {} boundary positions, expected 2",
                    graph.edge(e).label,
                    se.len()
                )));
            }
        }
        let n_flags = 2 * slots.len();
        let mut vertex_of_flag = vec![0usize; n_flags];
        for (slot, &(fi, pos)) in slots.iter().enumerate() {
            let boundary = &map.faces[fi].boundary;
            let len = boundary.len();
            vertex_of_flag[2 * slot] = boundary.vertex_trace[pos];
            vertex_of_flag[2 * slot + 1] = boundary.vertex_trace[(pos + 1) % len];
        }
        let mut s0 = vec![0usize; n_flags];
        let mut s1 = vec![0usize; n_flags];
        let mut s2 = vec![0usize; n_flags];
        for slot in 0..slots.len() {
            s0[2 * slot] = 2 * slot + 1;
            s0[2 * slot + 1] = 2 * slot;
        }
        for (slot, &(fi, pos)) in slots.iter().enumerate() {
            let boundary = &map.faces[fi].boundary;
            let len = boundary.len();
            // head flag pivots to the tail of the next edge in this face
            let next = slot_of_face_pos[&(fi, (pos + 1) % len)];
            s1[2 * slot + 1] = 2 * next;
            s1[2 * next] = 2 * slot + 1;
            // flag on the other face across this edge, matching the vertex
            let e = boundary.edge_ids[pos];
            let other = slots_of_edge[e]
                .iter()
                .copied()
                .find(|&s| s != slot)
                .expect("each edge has two slots");
            for side in 0..2 {
                let flag = 2 * slot + side;
                let v = vertex_of_flag[flag];
                let twin = if vertex_of_flag[2 * other] == v {
                    2 * other
                } else {
                    2 * other + 1
                };
                s2[flag] = twin;
            }
        }
        // the three maps are involutions and s0 commutes with s2
        debug_assert!((0..n_flags).all(|f| s0[s0[f]] == f && s1[s1[f]] == f && s2[s2[f]] == f));
        debug_assert!((0..n_flags).all(|f| s0[s2[f]] == s2[s0[f]]));
        Ok(FlagSystem {
            slots,
            slots_of_edge,
            vertex_of_flag,
            s0,
            s1,
            s2,
        })
    }

    pub(crate) fn flag_count(&self) -> usize {
        self.vertex_of_flag.len()
    }

    /// (vertex, edge, face) of a flag.
    pub(crate) fn triple(&self, map: &CombMap, flag: usize) -> (usize, usize, usize) {
        let (fi, pos) = self.slots[flag / 2];
        let e = map.faces[fi].boundary.edge_ids[pos];
        (self.vertex_of_flag[flag], e, fi)
    }

    /// Checks the umbrella condition at every vertex: the flags at a vertex
    /// form a single ⟨s1,s2⟩-orbit.
    fn check_umbrellas(&self, map: &CombMap) -> Result<(), MapError> {
        let n = map.cg.graph.vertex_count();
        let mut flags_at: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (flag, &v) in self.vertex_of_flag.iter().enumerate() {
            flags_at[v].push(flag);
        }
        for (v, flags) in flags_at.iter().enumerate() {
            if flags.is_empty() {
                return Err(MapError::NotASurface(format!(
                    "vertex {} lies on no face",
                    map.cg.graph.vertex_label(v)
                )));
            }
            let mut seen: HashMap<usize, bool> = flags.iter().map(|&f| (f, false)).collect();
            let mut queue = vec![flags[0]];
            seen.insert(flags[0], true);
            let mut reached = 1;
            while let Some(f) = queue.pop() {
                for img in [self.s1[f], self.s2[f]] {
                    debug_assert_eq!(self.vertex_of_flag[img], v);
                    if let Some(mark) = seen.get_mut(&img) {
                        if !*mark {
                            *mark = true;
                            reached += 1;
                            queue.push(img);
                        }
                    }
                }
            }
            if reached != flags.len() {
                return Err(MapError::NotASurface(format!(
                    "umbrella at vertex {} splits into several fans",
                    map.cg.graph.vertex_label(v)
                )));
            }
        }
        Ok(())
    }

    /// Independent orientability oracle: the flag graph under s0, s1, s2 is
    /// bipartite iff the supporting surface is orientable.
    pub(crate) fn bipartite(&self) -> bool {
        let n = self.flag_count();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(f) = queue.pop() {
                for img in [self.s0[f], self.s1[f], self.s2[f]] {
                    if color[img] == u8::MAX {
                        color[img] = 1 - color[f];
                        queue.push(img);
                    } else if color[img] == color[f] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.flag_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut queue = vec![start];
            while let Some(f) = queue.pop() {
                for img in [self.s0[f], self.s1[f], self.s2[f]] {
                    if comp[img] == usize::MAX {
                        comp[img] = id;
                        members.push(img);
                        queue.push(img);
                    }
                }
            }
            out.push(members);
        }
        out
    }
}

impl CombMap {
    pub fn graph(&self) -> &crate::graph::MultiGraph {
        &self.cg.graph
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// The two faces incident with an edge (indices into `faces`).
    pub fn faces_of_edge(&self, e: usize) -> &[usize] {
        &self.edge_faces[e]
    }

    /// Image of a face under the right action of a group element, identified
    /// by its boundary's normal form.
    pub fn act_face(&self, face: usize, g: &Perm) -> Option<usize> {
        let image = self.faces[face].boundary.image(&self.cg, g);
        self.face_lookup
            .get(&image.normal_form(&self.cg.graph))
            .copied()
    }

    /// Euler characteristic and flag count, after verifying the surface
    /// certificate: every edge on exactly two boundary positions and a single
    /// umbrella at every vertex. The flag count always equals 4|E| for a
    /// surface.
    pub fn surface_check(&self) -> Result<(i64, usize), MapError> {
        let flags = FlagSystem::build(self)?;
        flags.check_umbrellas(self)?;
        let chi = self.cg.graph.vertex_count() as i64 - self.cg.graph.edge_count() as i64
            + self.faces.len() as i64;
        let count = flags.flag_count();
        debug_assert_eq!(count, 4 * self.cg.graph.edge_count());
        Ok((chi, count))
    }

    /// True iff the face boundaries can be directed so that every edge is
    /// traversed once in each direction, decided by 2-colouring the face
    /// adjacency; cross-checkable against flag-graph bipartiteness.
    pub fn orientability(&self) -> Result<bool, MapError> {
        let flags = FlagSystem::build(self)?;
        flags.check_umbrellas(self)?;
        // For each edge: its two slots, with their natural traversal
        // directions. Same direction means the two faces must take opposite
        // orientations.
        let nf = self.faces.len();
        let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); nf];
        for (e, slots) in flags.slots_of_edge.iter().enumerate() {
            let _ = e;
            let (f1, p1) = flags.slots[slots[0]];
            let (f2, p2) = flags.slots[slots[1]];
            let b1 = &self.faces[f1].boundary;
            let b2 = &self.faces[f2].boundary;
            let d1 = (b1.vertex_trace[p1], b1.vertex_trace[(p1 + 1) % b1.len()]);
            let d2 = (b2.vertex_trace[p2], b2.vertex_trace[(p2 + 1) % b2.len()]);
            let same_direction = d1 == d2;
            adj[f1].push((f2, same_direction));
            adj[f2].push((f1, same_direction));
        }
        let mut orientation = vec![u8::MAX; nf];
        for start in 0..nf {
            if orientation[start] != u8::MAX {
                continue;
            }
            orientation[start] = 0;
            let mut queue = vec![start];
            while let Some(f) = queue.pop() {
                for &(g, same_direction) in &adj[f] {
                    let want = if same_direction {
                        1 - orientation[f]
                    } else {
                        orientation[f]
                    };
                    if orientation[g] == u8::MAX {
                        orientation[g] = want;
                        queue.push(g);
                    } else if orientation[g] != want {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Group-theoretic kernels of the action on V and on V ∪ F, cross-checked
    /// against the kernels computed directly from the actions; `circular` is
    /// equivalent to the V∪F kernel being trivial and to all boundaries being
    /// simple cycles.
    pub fn map_kernels(&self) -> Result<(Group, Group, bool), MapError> {
        let (a, z_like, g_vf_formula): (&Perm, &Perm, Group) = match &self.meta {
            MapMeta::Rota { pair } => {
                let az = &pair.a * &pair.z;
                (
                    &pair.a,
                    &pair.z,
                    Group::cyclic(&pair.a).intersect(&Group::cyclic(&az)),
                )
            }
            MapMeta::BiRo { pair } => {
                let zza = &pair.z * &pair.z.conj(&pair.a);
                (
                    &pair.a,
                    &pair.z,
                    Group::cyclic(&pair.a).intersect(&Group::cyclic(&zza)),
                )
            }
            MapMeta::Reg { triple } => (
                &triple.a,
                &triple.z,
                Group::cyclic(&triple.a).intersect(&Group::cyclic(&triple.b)),
            ),
        };
        let ha = Group::cyclic(a);
        let g_v_formula = ha.intersect(&ha.conjugate(z_like));
        let ambient = &self.cg.ambient;

        let nv = self.cg.graph.vertex_count();
        let fixes_vertices = |g: &Perm| -> bool { (0..nv).all(|v| self.cg.act_vertex(v, g) == v) };
        let fixes_faces =
            |g: &Perm| -> bool { (0..self.faces.len()).all(|f| self.act_face(f, g) == Some(f)) };
        let g_v_direct: Vec<Perm> = ambient
            .elements()
            .iter()
            .filter(|g| fixes_vertices(g))
            .cloned()
            .collect();
        let g_vf_direct: Vec<Perm> = g_v_direct
            .iter()
            .filter(|g| fixes_faces(g))
            .cloned()
            .collect();
        let g_v_direct = Group::from_elements(ambient.degree(), g_v_direct);
        let g_vf_direct = Group::from_elements(ambient.degree(), g_vf_direct);

        if !g_v_formula.same_group(&g_v_direct) {
            return Err(MapError::CrossCheckFailed(format!(
                "vertex kernel: formula order {} vs direct order {}",
                g_v_formula.order(),
                g_v_direct.order()
            )));
        }
        if !g_vf_formula.same_group(&g_vf_direct) {
            return Err(MapError::CrossCheckFailed(format!(
                "vertex-face kernel: formula order {} vs direct order {}",
                g_vf_formula.order(),
                g_vf_direct.order()
            )));
        }
        let circular = g_vf_formula.is_trivial();
        let all_simple = self.faces.iter().all(|f| {
            matches!(
                f.boundary.classify_induced(),
                RegularCycleKind::SimpleCycle(_)
            )
        });
        if circular != all_simple {
            return Err(MapError::CrossCheckFailed(
                "circularity disagrees with boundary simplicity".to_string(),
            ));
        }
        Ok((g_v_formula, g_vf_formula, circular))
    }

    /// Face length, if constant.
    pub fn face_length(&self) -> Option<usize> {
        let len = self.faces.first()?.boundary.len();
        self.faces
            .iter()
            .all(|f| f.boundary.len() == len)
            .then_some(len)
    }
}

/// Independent orientability oracle: bipartiteness of the flag graph under
/// the three involutions. Cross-checks [`CombMap::orientability`].
pub fn orientability_flag_oracle(map: &CombMap) -> Result<bool, MapError> {
    Ok(FlagSystem::build(map)?.bipartite())
}

/// Equality of maps over the same labelled ground sets: the face multisets of
/// boundary sequence classes agree.
pub fn maps_equal(m1: &CombMap, m2: &CombMap) -> Result<bool, MapError> {
    let mut v1: Vec<&String> = m1.cg.graph.vertex_labels().iter().collect();
    let mut v2: Vec<&String> = m2.cg.graph.vertex_labels().iter().collect();
    v1.sort();
    v2.sort();
    if v1 != v2 {
        return Err(MapError::LabelMismatch);
    }
    let mut e1: Vec<&str> = m1
        .cg
        .graph
        .edges()
        .iter()
        .map(|e| e.label.as_str())
        .collect();
    let mut e2: Vec<&str> = m2
        .cg
        .graph
        .edges()
        .iter()
        .map(|e| e.label.as_str())
        .collect();
    e1.sort();
    e2.sort();
    if e1 != e2 {
        return Err(MapError::LabelMismatch);
    }
    let mut b1: Vec<Vec<String>> = m1
        .faces
        .iter()
        .map(|f| f.boundary.normal_form(&m1.cg.graph))
        .collect();
    let mut b2: Vec<Vec<String>> = m2
        .faces
        .iter()
        .map(|f| f.boundary.normal_form(&m2.cg.graph))
        .collect();
    b1.sort();
    b2.sort();
    Ok(b1 == b2)
}

pub const DEFAULT_MAP_ISO_BUDGET: u64 = 50_000_000;

/// Map isomorphism via colored flag-graph propagation: an isomorphism is
/// determined by the image of one flag per component, and candidates are
/// checked by propagating along the three involutions.
pub fn map_isomorphic(m1: &CombMap, m2: &CombMap, budget: u64) -> Result<bool, MapError> {
    let f1 = FlagSystem::build(m1)?;
    let f2 = FlagSystem::build(m2)?;
    if f1.flag_count() != f2.flag_count()
        || m1.cg.graph.vertex_count() != m2.cg.graph.vertex_count()
        || m1.cg.graph.edge_count() != m2.cg.graph.edge_count()
        || m1.faces.len() != m2.faces.len()
    {
        return Ok(false);
    }
    let comps1 = f1.components();
    let comps2 = f2.components();
    if comps1.len() != comps2.len() {
        return Ok(false);
    }
    let n = f1.flag_count();
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut nodes = 0u64;
    let ok = match_components(
        &f1,
        &f2,
        &comps1,
        &comps2,
        0,
        &mut mapping,
        &mut used,
        &mut nodes,
        budget,
    )?;
    Ok(ok)
}

#[allow(clippy::too_many_arguments)]
fn match_components(
    f1: &FlagSystem,
    f2: &FlagSystem,
    comps1: &[Vec<usize>],
    comps2: &[Vec<usize>],
    index: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool, MapError> {
    if index == comps1.len() {
        return Ok(true);
    }
    let comp = &comps1[index];
    let start = comp[0];
    for target_comp in comps2 {
        if target_comp.len() != comp.len() || used[target_comp[0]] {
            continue;
        }
        for &candidate in target_comp {
            *nodes += 1;
            if *nodes > budget {
                return Err(MapError::SearchCapExceeded { budget });
            }
            if let Some(partial) = propagate(f1, f2, start, candidate) {
                let mut touched = Vec::new();
                let mut clash = false;
                for &(a, b) in &partial {
                    if used[b] {
                        clash = true;
                        break;
                    }
                    used[b] = true;
                    mapping[a] = b;
                    touched.push((a, b));
                }
                if !clash
                    && match_components(
                        f1,
                        f2,
                        comps1,
                        comps2,
                        index + 1,
                        mapping,
                        used,
                        nodes,
                        budget,
                    )?
                {
                    return Ok(true);
                }
                for (a, b) in touched {
                    mapping[a] = usize::MAX;
                    used[b] = false;
                }
            }
        }
    }
    Ok(false)
}

/// Attempts to extend `start → candidate` to the whole component, following
/// the colored involutions; returns the flag pairing on success.
fn propagate(
    f1: &FlagSystem,
    f2: &FlagSystem,
    start: usize,
    candidate: usize,
) -> Option<Vec<(usize, usize)>> {
    let mut image: HashMap<usize, usize> = HashMap::new();
    let mut hit: std::collections::HashSet<usize> = std::collections::HashSet::new();
    image.insert(start, candidate);
    hit.insert(candidate);
    let mut queue = vec![start];
    let mut pairs = vec![(start, candidate)];
    while let Some(f) = queue.pop() {
        let g = image[&f];
        for (m1, m2) in [(&f1.s0, &f2.s0), (&f1.s1, &f2.s1), (&f1.s2, &f2.s2)] {
            let fi = m1[f];
            let gi = m2[g];
            match image.get(&fi) {
                Some(&existing) => {
                    if existing != gi {
                        return None;
                    }
                }
                None => {
                    if !hit.insert(gi) {
                        return None;
                    }
                    image.insert(fi, gi);
                    pairs.push((fi, gi));
                    queue.push(fi);
                }
            }
        }
    }
    Some(pairs)
}

/// Classifies a vertex-rotary map against a rotary pair by the action of z on
/// the two faces at the base edge: swap means rotary, fix means bi-rotary.
/// Cross-checks against the matching construction (maps_equal when the
/// labelled ground sets coincide, map_isomorphic otherwise).
pub fn classify_vertex_rotary(map: &CombMap, rp: &RotaryPair) -> Result<MapKind, MapError> {
    if !rp.group.is_subgroup_of(&map.cg.ambient) {
        return Err(MapError::InconsistentAction);
    }
    let base_edge = map.cg.espace.index_of(&map.cg.ambient.identity());
    if map.cg.act_edge(base_edge, &rp.z) != base_edge {
        return Err(MapError::InconsistentAction);
    }
    let incident = map.faces_of_edge(base_edge);
    if incident.len() != 2 {
        return Err(MapError::NotASurface(format!(
            "base edge lies on {} faces",
            incident.len()
        )));
    }
    let (fa, fb) = (incident[0], incident[1]);
    let za = map
        .act_face(fa, &rp.z)
        .ok_or(MapError::InconsistentAction)?;
    let zb = map
        .act_face(fb, &rp.z)
        .ok_or(MapError::InconsistentAction)?;
    let kind = if za == fb && zb == fa {
        MapKind::Rotary
    } else if za == fa && zb == fb {
        MapKind::BiRotary
    } else {
        return Err(MapError::InconsistentAction);
    };
    let reference = match kind {
        MapKind::Rotary => rota_map(rp)?,
        MapKind::BiRotary => biro_map(rp)?,
    };
    let agrees = match maps_equal(map, &reference) {
        Ok(eq) => eq,
        Err(MapError::LabelMismatch) => map_isomorphic(map, &reference, DEFAULT_MAP_ISO_BUDGET)?,
        Err(e) => return Err(e),
    };
    if !agrees {
        return Err(MapError::CrossCheckFailed(format!(
            "classified {kind:?} but the map differs from the construction"
        )));
    }
    Ok(kind)
}

/// True iff G acts regularly on the flags: transitive, with trivial flag
/// stabiliser, and |G| equal to the flag count.
pub fn flag_regular_check(map: &CombMap, group: &Group) -> Result<bool, MapError> {
    if !group.is_subgroup_of(&map.cg.ambient) {
        return Ok(false);
    }
    let flags = FlagSystem::build(map)?;
    let total = flags.flag_count();
    if group.order() != total {
        return Ok(false);
    }
    let act_triple = |t: (usize, usize, usize), g: &Perm| -> Option<(usize, usize, usize)> {
        Some((
            map.cg.act_vertex(t.0, g),
            map.cg.act_edge(t.1, g),
            map.act_face(t.2, g)?,
        ))
    };
    let base = flags.triple(map, 0);
    // orbit of the base flag
    let mut seen = std::collections::HashSet::new();
    seen.insert(base);
    let mut queue = vec![base];
    while let Some(t) = queue.pop() {
        for g in group.generators() {
            match act_triple(t, g) {
                Some(img) => {
                    if seen.insert(img) {
                        queue.push(img);
                    }
                }
                None => return Ok(false),
            }
        }
    }
    if seen.len() != total {
        return Ok(false);
    }
    let stabilizer = group
        .elements()
        .iter()
        .filter(|g| act_triple(base, g) == Some(base))
        .count();
    Ok(stabilizer == 1)
}

/// All boundary cycles are regular cycles of one common type: the shared
/// classification, or an error message naming the offender.
pub fn uniform_boundary_kind(map: &CombMap) -> Result<RegularCycleKind, String> {
    let mut kind: Option<RegularCycleKind> = None;
    for face in &map.faces {
        let k = face.boundary.classify_induced();
        if !k.is_regular() {
            return Err(format!("face {} has a non-regular boundary", face.label));
        }
        match &kind {
            None => kind = Some(k),
            Some(prev) if *prev == k => {}
            Some(prev) => {
                return Err(format!(
                    "face {} classifies as {:?}, others as {:?}",
                    face.label, k, prev
                ))
            }
        }
    }
    kind.ok_or_else(|| "map has no faces".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rotary::validate_rotary_pair;

    fn hypercube_pair(n: usize, lambda: usize, which: &str) -> RotaryPair {
        let e = catalog::hypercube(n, lambda).unwrap();
        match which {
            "x" => validate_rotary_pair(e.element("a").unwrap(), e.element("z").unwrap()).unwrap(),
            "y" => validate_rotary_pair(e.element("a").unwrap(), e.element("zx").unwrap()).unwrap(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn rota_map_of_small_hypercube() {
        let rp = hypercube_pair(3, 1, "x");
        let m = rota_map(&rp).unwrap();
        assert_eq!(m.graph().vertex_count(), 8);
        assert_eq!(m.graph().edge_count(), 12);
        assert_eq!(m.face_count(), 4);
        assert_eq!(m.face_length(), Some(6));
        let (chi, flags) = m.surface_check().unwrap();
        assert_eq!(chi, 0);
        assert_eq!(flags, 48);
        assert!(m.orientability().unwrap());
    }

    #[test]
    fn biro_map_of_small_hypercube() {
        let rp = hypercube_pair(3, 1, "x");
        let m = biro_map(&rp).unwrap();
        assert_eq!(m.face_count(), 6);
        assert_eq!(m.face_length(), Some(4));
        let (chi, flags) = m.surface_check().unwrap();
        assert_eq!(chi, 2);
        assert_eq!(flags, 48);
        let (_, gvf, circular) = m.map_kernels().unwrap();
        assert!(circular);
        assert!(gvf.is_trivial());
    }

    #[test]
    fn reg_map_is_the_cube() {
        let e = catalog::hypercube(3, 1).unwrap();
        let t = validate_flag_regular_triple(
            e.element("x").unwrap(),
            e.element("y").unwrap(),
            e.element("z").unwrap(),
        )
        .unwrap();
        let m = reg_map(&t).unwrap();
        assert_eq!(m.graph().vertex_count(), 8);
        assert_eq!(m.graph().edge_count(), 12);
        assert_eq!(m.face_count(), 6);
        let (chi, flags) = m.surface_check().unwrap();
        assert_eq!(chi, 2);
        assert_eq!(flags, 48);
        assert!(m.orientability().unwrap());
        assert!(flag_regular_check(&m, &e.group).unwrap());
    }

    #[test]
    fn triple_validation_errors() {
        let e = catalog::hypercube(3, 1).unwrap();
        let x = e.element("x").unwrap();
        let y = e.element("y").unwrap();
        let z = e.element("z").unwrap();
        assert!(matches!(
            validate_flag_regular_triple(x, y, x),
            Err(TripleError::NotDistinct)
        ));
        let a = e.element("a").unwrap();
        assert!(matches!(
            validate_flag_regular_triple(a, y, z),
            Err(TripleError::NotInvolution("x"))
        ));
        // y' = a x with x z ≠ z x: use v1 instead of z to break commuting
        let v1 = e.element("v1").unwrap();
        assert!(matches!(
            validate_flag_regular_triple(x, y, v1),
            Err(TripleError::NotCommuting)
        ));
        // the central involution a³ of H = D₁₂ commutes with x but lies in H
        let e2 = catalog::hypercube(3, 2).unwrap();
        let central = e2.element("a").unwrap().pow(3);
        assert!(matches!(
            validate_flag_regular_triple(
                e2.element("x").unwrap(),
                e2.element("y").unwrap(),
                &central
            ),
            Err(TripleError::ZInsideH)
        ));
    }

    #[test]
    fn regmap_equals_biromap_on_hypercube() {
        let e = catalog::hypercube(3, 1).unwrap();
        let t = validate_flag_regular_triple(
            e.element("x").unwrap(),
            e.element("y").unwrap(),
            e.element("z").unwrap(),
        )
        .unwrap();
        let reg = reg_map(&t).unwrap();
        let biro = biro_map(&hypercube_pair(3, 1, "x")).unwrap();
        let rota = rota_map(&hypercube_pair(3, 1, "y")).unwrap();
        assert!(map_isomorphic(&reg, &biro, DEFAULT_MAP_ISO_BUDGET).unwrap());
        assert!(map_isomorphic(&reg, &rota, DEFAULT_MAP_ISO_BUDGET).unwrap());
        // the two embeddings of the same pair differ (χ 0 vs 2)
        let rota_x = rota_map(&hypercube_pair(3, 1, "x")).unwrap();
        assert!(!map_isomorphic(&rota_x, &biro, DEFAULT_MAP_ISO_BUDGET).unwrap());
    }

    #[test]
    fn classification_round_trip() {
        let rp = hypercube_pair(3, 1, "x");
        let rota = rota_map(&rp).unwrap();
        let biro = biro_map(&rp).unwrap();
        assert_eq!(classify_vertex_rotary(&rota, &rp).unwrap(), MapKind::Rotary);
        assert_eq!(
            classify_vertex_rotary(&biro, &rp).unwrap(),
            MapKind::BiRotary
        );
        assert_eq!(MapKind::Rotary.type_label(), "2^Pex");
        assert_eq!(MapKind::BiRotary.type_label(), "2*ex");
    }

    #[test]
    fn regmap_classified_with_subgroup_pairs() {
        let e = catalog::hypercube(3, 1).unwrap();
        let t = validate_flag_regular_triple(
            e.element("x").unwrap(),
            e.element("y").unwrap(),
            e.element("z").unwrap(),
        )
        .unwrap();
        let reg = reg_map(&t).unwrap();
        let xp = hypercube_pair(3, 1, "x");
        let yp = hypercube_pair(3, 1, "y");
        assert_eq!(
            classify_vertex_rotary(&reg, &xp).unwrap(),
            MapKind::BiRotary
        );
        assert_eq!(classify_vertex_rotary(&reg, &yp).unwrap(), MapKind::Rotary);
    }

    #[test]
    fn reg_map_of_four_cube() {
        let e = catalog::hypercube(4, 1).unwrap();
        let t = validate_flag_regular_triple(
            e.element("x").unwrap(),
            e.element("y").unwrap(),
            e.element("z").unwrap(),
        )
        .unwrap();
        let m = reg_map(&t).unwrap();
        assert_eq!(m.graph().vertex_count(), 16);
        assert_eq!(m.graph().edge_count(), 32);
        assert_eq!(m.face_count(), 16);
        let (chi, _) = m.surface_check().unwrap();
        assert_eq!(chi, 0);
    }

    #[test]
    fn base_edge_lies_on_the_named_faces() {
        let rp = hypercube_pair(3, 2, "x");
        let identity = rp.group.identity();

        // rotary: the faces at the base edge are f and f^z
        let rota = rota_map(&rp).unwrap();
        let base_edge = rota.cg.espace.index_of(&identity);
        let f = rota
            .faces
            .iter()
            .position(|face| face.boundary.edge_ids.contains(&base_edge))
            .unwrap();
        let fz = rota.act_face(f, &rp.z).unwrap();
        let mut expect = [f, fz];
        expect.sort_unstable();
        let mut got = rota.faces_of_edge(base_edge).to_vec();
        got.sort_unstable();
        assert_ne!(f, fz);
        assert_eq!(got, expect);

        // bi-rotary: the faces at the base edge are C(W) and C(W)(za)⁻¹
        let biro = biro_map(&rp).unwrap();
        let base_edge = biro.cg.espace.index_of(&identity);
        let f = biro
            .faces
            .iter()
            .position(|face| face.label == identity.label())
            .unwrap();
        let za_inv = (&rp.z * &rp.a).inverse();
        let f2 = biro.act_face(f, &za_inv).unwrap();
        let mut expect = [f, f2];
        expect.sort_unstable();
        let mut got = biro.faces_of_edge(base_edge).to_vec();
        got.sort_unstable();
        assert_ne!(f, f2);
        assert_eq!(got, expect);

        // flag-regular: the faces at the base edge are f and f^x
        let e = catalog::hypercube(3, 2).unwrap();
        let t = validate_flag_regular_triple(
            e.element("x").unwrap(),
            e.element("y").unwrap(),
            e.element("z").unwrap(),
        )
        .unwrap();
        let reg = reg_map(&t).unwrap();
        let base_edge = reg.cg.espace.index_of(&identity);
        let f = reg
            .faces
            .iter()
            .position(|face| face.label == identity.label())
            .unwrap();
        let fx = reg.act_face(f, &t.x).unwrap();
        let mut expect = [f, fx];
        expect.sort_unstable();
        let mut got = reg.faces_of_edge(base_edge).to_vec();
        got.sort_unstable();
        assert_ne!(f, fx);
        assert_eq!(got, expect);
    }

    #[test]
    fn maps_equal_is_sequence_class_invariant() {
        let rp = hypercube_pair(3, 2, "x");
        let m = rota_map(&rp).unwrap();
        assert!(maps_equal(&m, &m).unwrap());
        let mut rotated = m.clone();
        for face in &mut rotated.faces {
            face.boundary.edge_ids.rotate_left(1);
            face.boundary.vertex_trace.rotate_left(1);
        }
        assert!(maps_equal(&m, &rotated).unwrap());
    }

    #[test]
    fn maps_over_different_ground_sets_mismatch() {
        let m1 = rota_map(&hypercube_pair(3, 1, "x")).unwrap();
        let m2 = rota_map(&hypercube_pair(3, 2, "x")).unwrap();
        assert!(matches!(maps_equal(&m1, &m2), Err(MapError::LabelMismatch)));
    }

    #[test]
    fn classify_rejects_foreign_pairs() {
        let m = rota_map(&hypercube_pair(3, 1, "x")).unwrap();
        let foreign = hypercube_pair(3, 2, "x");
        assert!(matches!(
            classify_vertex_rotary(&m, &foreign),
            Err(MapError::InconsistentAction)
        ));
    }

    #[test]
    fn flag_check_fails_for_index_two_subgroup_and_trivial_group() {
        let e = catalog::hypercube(3, 1).unwrap();
        let rp = hypercube_pair(3, 1, "x");
        let m = rota_map(&rp).unwrap();
        assert!(!flag_regular_check(&m, &rp.group).unwrap());
        let trivial = Group::trivial(e.group.degree());
        assert!(!flag_regular_check(&m, &trivial).unwrap());
    }

    #[test]
    fn rotamap_kernels_match_formula() {
        let rp = hypercube_pair(3, 4, "x");
        let m = rota_map(&rp).unwrap();
        let (gv, gvf, circular) = m.map_kernels().unwrap();
        assert_eq!(gv.order(), 4);
        assert_eq!(gvf.order(), 2); // λ' = λ/gcd(2,λ) = 2
        assert!(!circular);
        let rp2 = hypercube_pair(3, 2, "x");
        let m2 = rota_map(&rp2).unwrap();
        let (_, gvf2, circular2) = m2.map_kernels().unwrap();
        assert_eq!(gvf2.order(), 1);
        assert!(circular2);
    }

    #[test]
    fn uniform_boundaries() {
        let rp = hypercube_pair(3, 4, "x");
        let m = rota_map(&rp).unwrap();
        assert_eq!(
            uniform_boundary_kind(&m).unwrap(),
            RegularCycleKind::ExtendedCycle(6, 2)
        );
    }

    #[test]
    fn tetrahedral_biro_map_is_nonorientable() {
        // three quadrilateral faces on 4 vertices and 6 edges: χ = 1, the
        // projective-plane embedding of the complete graph on 4 vertices
        let a = Perm::from_cycles(4, &[&[1, 2, 3]]);
        let z = Perm::from_cycles(4, &[&[0, 1], &[2, 3]]);
        let rp = validate_rotary_pair(&a, &z).unwrap();
        let m = biro_map(&rp).unwrap();
        assert_eq!(m.graph().vertex_count(), 4);
        assert_eq!(m.graph().edge_count(), 6);
        assert_eq!(m.face_count(), 3);
        let (chi, flags) = m.surface_check().unwrap();
        assert_eq!(chi, 1);
        assert_eq!(flags, 24);
        assert!(!m.orientability().unwrap());
        assert!(!orientability_flag_oracle(&m).unwrap());
    }

    #[test]
    fn orientability_agrees_with_flag_bipartiteness() {
        for (n, lambda) in [(3usize, 1usize), (3, 2), (4, 1)] {
            let rp = hypercube_pair(n, lambda, "x");
            for m in [rota_map(&rp).unwrap(), biro_map(&rp).unwrap()] {
                let direct = m.orientability().unwrap();
                let flags = FlagSystem::build(&m).unwrap();
                assert_eq!(direct, flags.bipartite());
            }
        }
    }
}
