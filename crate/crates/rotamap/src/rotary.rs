//! Rotary pairs and the canonical cycles of a vertex-rotary graph.
//!
//! A rotary pair (a,z) for G = ⟨a,z⟩ has |z| = 2, z ∉ ⟨a⟩, |a| finite. The
//! coset graph Cos(G,⟨a⟩,⟨z⟩) is then G-vertex-rotary with valency
//! k = |⟨a⟩ : ⟨a⟩∩⟨a⟩ᶻ| and edge-multiplicity λ = |⟨a⟩∩⟨a⟩ᶻ|. Away from the
//! degenerate cases, the base edge ⟨z⟩ lies on four canonical cycles: the
//! m-cycles C(az), C(a⁻¹z) with cyclic stabilisers, and the 2ℓ-cycles C(zzᵃ),
//! C(zzᵃ⁻¹) with dihedral stabilisers, where m = |az| and ℓ = |zzᵃ|.

use crate::coset::action_kernel;
use crate::cosetgraph::{build_coset_graph, CosetGraph};
use crate::error::RotaryError;
use crate::graph::MultiGraph;
use crate::group::Group;
use crate::perm::Perm;

/// A validated rotary pair with its derived parameters.
#[derive(Clone)]
pub struct RotaryPair {
    pub a: Perm,
    pub z: Perm,
    pub group: Group,
    pub k: usize,
    pub lambda: usize,
    /// m = |az|: length of C(az).
    pub m: u64,
    /// ℓ = |zzᵃ|: half the length of C(zzᵃ).
    pub ell: u64,
    /// λ′ = |⟨a⟩ ∩ ⟨az⟩|.
    pub lambda_p: usize,
    /// λ″ = |⟨a⟩ ∩ ⟨zzᵃ⟩|.
    pub lambda_pp: usize,
}

/// Shape of the underlying graph of a rotary pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DegenerateClass {
    /// ⟨a⟩ = ⟨a⟩ᶻ (k = 1): the graph is the two-vertex extender K₂^(λ).
    TwoVertexExtender,
    /// k = 2, λ = 1: the graph is a simple cycle of the given length.
    SimpleCycleGraph(usize),
    General,
}

/// The four canonical cycles through the base edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycleKind {
    AZ,
    AInvZ,
    ZZa,
    ZZaInv,
}

/// Classification of the edge-induced subgraph of a cycle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RegularCycleKind {
    SimpleCycle(usize),
    /// C_n^(λ) with n ≥ 3, λ ≥ 2.
    ExtendedCycle(usize, usize),
    /// K₂^(ℓ) with ℓ ≥ 4 even.
    DoubledPair(usize),
    NotRegular,
}

impl RegularCycleKind {
    pub fn is_regular(&self) -> bool {
        !matches!(self, RegularCycleKind::NotRegular)
    }
}

/// A cyclic edge sequence with its vertex trace: `edge_ids[i]` joins
/// `vertex_trace[i]` to `vertex_trace[i+1]` (cyclically), as indices into a
/// host graph.
#[derive(Clone, Debug)]
pub struct CycleSeq {
    pub edge_ids: Vec<usize>,
    pub vertex_trace: Vec<usize>,
}

impl CycleSeq {
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    /// All edge ids pairwise distinct and consecutive incidences hold in the
    /// host graph.
    pub fn validate(&self, host: &MultiGraph) -> bool {
        let n = self.len();
        if n == 0 || self.vertex_trace.len() != n {
            return false;
        }
        let mut sorted = self.edge_ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != n {
            return false;
        }
        (0..n).all(|i| {
            let e = host.edge(self.edge_ids[i]);
            let u = self.vertex_trace[i];
            let v = self.vertex_trace[(i + 1) % n];
            (e.ends == [u, v] || e.ends == [v, u]) && u != v
        })
    }

    /// Lexicographically least rotation of the edge labels or of the reversed
    /// edge labels: the identity of the sequence class.
    pub fn normal_form(&self, host: &MultiGraph) -> Vec<String> {
        let labels: Vec<&str> = self
            .edge_ids
            .iter()
            .map(|&e| host.edge(e).label.as_str())
            .collect();
        let n = labels.len();
        let reversed: Vec<&str> = labels.iter().rev().cloned().collect();
        let mut best: Option<Vec<&str>> = None;
        for seq in [&labels, &reversed] {
            for start in 0..n {
                let rotated: Vec<&str> = (0..n).map(|i| seq[(start + i) % n]).collect();
                if best.as_ref().is_none_or(|b| rotated < *b) {
                    best = Some(rotated);
                }
            }
        }
        best.expect("cycle is non-empty")
            .into_iter()
            .map(str::to_string)
            .collect()
    }

    /// True iff the two cycles are rotations of each other, directly or after
    /// reversal.
    pub fn seq_class_equal(&self, other: &CycleSeq, host: &MultiGraph) -> bool {
        self.len() == other.len() && self.normal_form(host) == other.normal_form(host)
    }

    /// Inspects the vertex-trace periodicity and classifies the edge-induced
    /// subgraph.
    pub fn classify_induced(&self) -> RegularCycleKind {
        let n = self.len();
        let trace = &self.vertex_trace;
        let mut period = n;
        for p in 1..n {
            if n.is_multiple_of(p) && (0..n).all(|i| trace[i] == trace[(i + p) % n]) {
                period = p;
                break;
            }
        }
        let window = &trace[..period];
        let mut distinct = window.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != period {
            return RegularCycleKind::NotRegular;
        }
        let lambda = n / period;
        match (period, lambda) {
            (p, 1) if p >= 3 => RegularCycleKind::SimpleCycle(n),
            (p, l) if p >= 3 && l >= 2 => RegularCycleKind::ExtendedCycle(p, l),
            (2, _) if n >= 4 && n.is_multiple_of(2) => RegularCycleKind::DoubledPair(n),
            _ => RegularCycleKind::NotRegular,
        }
    }

    /// The image cycle under a group element, in a coset-graph host.
    pub fn image(&self, cg: &CosetGraph, g: &Perm) -> CycleSeq {
        CycleSeq {
            edge_ids: self.edge_ids.iter().map(|&e| cg.act_edge(e, g)).collect(),
            vertex_trace: self
                .vertex_trace
                .iter()
                .map(|&v| cg.act_vertex(v, g))
                .collect(),
        }
    }
}

/// Checks |z| = 2, z ∉ ⟨a⟩, and computes the derived parameters.
pub fn validate_rotary_pair(a: &Perm, z: &Perm) -> Result<RotaryPair, RotaryError> {
    if a.degree() != z.degree() {
        return Err(crate::error::GroupError::DegreeMismatch.into());
    }
    if z.order() != 2 {
        return Err(RotaryError::ZNotInvolution);
    }
    let ha = Group::cyclic(a);
    if ha.contains(z) {
        return Err(RotaryError::ZInsideA);
    }
    let group = Group::generated(a.degree(), &[a.clone(), z.clone()])?;
    let ha_z = ha.conjugate(z);
    let meet = ha.intersect(&ha_z);
    let lambda = meet.order();
    let k = ha.order() / lambda;
    let az = a * z;
    let zza = z * &z.conj(a);
    let m = az.order();
    let ell = zza.order();
    let lambda_p = ha.intersect(&Group::cyclic(&az)).order();
    let lambda_pp = ha.intersect(&Group::cyclic(&zza)).order();
    Ok(RotaryPair {
        a: a.clone(),
        z: z.clone(),
        group,
        k,
        lambda,
        m,
        ell,
        lambda_p,
        lambda_pp,
    })
}

impl RotaryPair {
    pub fn degenerate_class(&self) -> DegenerateClass {
        if self.k == 1 {
            DegenerateClass::TwoVertexExtender
        } else if self.k == 2 && self.lambda == 1 {
            DegenerateClass::SimpleCycleGraph(self.group.order() / 2)
        } else {
            DegenerateClass::General
        }
    }

    pub fn is_general(&self) -> bool {
        self.degenerate_class() == DegenerateClass::General
    }

    /// ⟨a⟩ ∩ ⟨aᶻ⟩, cross-checked against the kernel of the vertex action.
    pub fn vertex_kernel(&self) -> Result<Group, RotaryError> {
        let ha = Group::cyclic(&self.a);
        let meet = ha.intersect(&ha.conjugate(&self.z));
        let kernel = action_kernel(&self.group, &ha)?;
        if !meet.same_group(&kernel) {
            return Err(RotaryError::CrossCheckFailed(format!(
                "⟨a⟩∩⟨aᶻ⟩ has order {} but the vertex-action kernel has order {}",
                meet.order(),
                kernel.order()
            )));
        }
        Ok(meet)
    }
}

/// The G-vertex-rotary graph Cos(⟨a,z⟩, ⟨a⟩, ⟨z⟩) of a pair.
pub fn vertex_rotary_graph(rp: &RotaryPair) -> Result<CosetGraph, RotaryError> {
    let ha = Group::cyclic(&rp.a);
    let jz = Group::cyclic(&rp.z);
    let cg = build_coset_graph(&rp.group, &ha, &jz).map_err(|e| match e {
        crate::error::GraphError::Group(g) => RotaryError::Group(g),
        other => RotaryError::CrossCheckFailed(format!("construction failed: {other}")),
    })?;
    debug_assert_eq!(cg.params.k, rp.k);
    debug_assert_eq!(cg.params.lambda, rp.lambda);
    Ok(cg)
}

/// Builds one of the four canonical cycles through the base edge ⟨z⟩ of the
/// vertex-rotary graph, returning the cycle, its stabiliser, and the matching
/// λ-parameter (λ′ for the m-cycles, λ″ for the 2ℓ-cycles).
///
/// Requires a non-degenerate pair: on K₂^(λ) and simple cycles the edge
/// sequences degenerate.
pub fn canonical_cycle(
    rp: &RotaryPair,
    cg: &CosetGraph,
    kind: CycleKind,
) -> Result<(CycleSeq, Group, usize), RotaryError> {
    if !rp.is_general() {
        return Err(RotaryError::DegenerateGraph);
    }
    let a = match kind {
        CycleKind::AZ | CycleKind::ZZa => rp.a.clone(),
        CycleKind::AInvZ | CycleKind::ZZaInv => rp.a.inverse(),
    };
    let z = &rp.z;
    let degree = rp.group.degree();
    let identity = Perm::identity(degree);
    let (cycle, stab) = match kind {
        CycleKind::AZ | CycleKind::AInvZ => {
            let az = &a * z;
            let m = az.order() as usize;
            let mut edge_ids = Vec::with_capacity(m);
            let mut vertex_trace = Vec::with_capacity(m);
            let mut power = identity.clone();
            for _ in 0..m {
                edge_ids.push(cg.espace.index_of(&power));
                vertex_trace.push(cg.vspace.index_of(&power));
                power = &power * &az;
            }
            let stab = Group::cyclic(&az);
            (
                CycleSeq {
                    edge_ids,
                    vertex_trace,
                },
                stab,
            )
        }
        CycleKind::ZZa | CycleKind::ZZaInv => {
            let za = z.conj(&a);
            let zza = z * &za;
            let ell = zza.order() as usize;
            let mut edge_ids = Vec::with_capacity(2 * ell);
            let mut vertex_trace = Vec::with_capacity(2 * ell);
            let mut power = identity.clone();
            for _ in 0..ell {
                // e'_{2i} = ⟨z⟩(zzᵃ)ⁱ from ⟨a⟩z(zzᵃ)ⁱ to ⟨a⟩(zzᵃ)ⁱ
                edge_ids.push(cg.espace.index_of(&power));
                vertex_trace.push(cg.vspace.index_of(&(z * &power)));
                // e'_{2i+1} = ⟨z⟩a(zzᵃ)ⁱ from ⟨a⟩(zzᵃ)ⁱ to ⟨a⟩z(zzᵃ)^{i+1}
                edge_ids.push(cg.espace.index_of(&(&a * &power)));
                vertex_trace.push(cg.vspace.index_of(&power));
                power = &power * &zza;
            }
            let stab = Group::generated(degree, &[z.clone(), za])?;
            (
                CycleSeq {
                    edge_ids,
                    vertex_trace,
                },
                stab,
            )
        }
    };
    if !cycle.validate(&cg.graph) {
        return Err(RotaryError::CrossCheckFailed(
            "canonical cycle is not a cycle of the host graph".to_string(),
        ));
    }
    let lambda_param = match kind {
        CycleKind::AZ | CycleKind::AInvZ => rp.lambda_p,
        CycleKind::ZZa | CycleKind::ZZaInv => rp.lambda_pp,
    };
    Ok((cycle, stab, lambda_param))
}

/// Brute-force stabiliser of a cycle's sequence class in the acting group:
/// the oracle for the stabiliser claims.
pub fn cycle_class_stabilizer(cg: &CosetGraph, cycle: &CycleSeq) -> Group {
    let reference = cycle.normal_form(&cg.graph);
    let elements = cg
        .ambient
        .elements()
        .iter()
        .filter(|g| cycle.image(cg, g).normal_form(&cg.graph) == reference)
        .cloned()
        .collect();
    Group::from_elements(cg.ambient.degree(), elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn s4_pair() -> RotaryPair {
        let a = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let z = Perm::from_cycles(4, &[&[0, 1]]);
        validate_rotary_pair(&a, &z).unwrap()
    }

    #[test]
    fn rejects_bad_pairs() {
        let a = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        assert!(matches!(
            validate_rotary_pair(&a, &Perm::from_cycles(4, &[&[0, 1, 2]])),
            Err(RotaryError::ZNotInvolution)
        ));
        // a^2 is an involution inside ⟨a⟩
        assert!(matches!(
            validate_rotary_pair(&a, &a.pow(2)),
            Err(RotaryError::ZInsideA)
        ));
    }

    #[test]
    fn hypercube_pair_parameters() {
        let e = catalog::hypercube(3, 2).unwrap();
        let rp = validate_rotary_pair(e.element("a").unwrap(), e.element("z").unwrap()).unwrap();
        assert_eq!(rp.k, 3);
        assert_eq!(rp.lambda, 2);
        assert!(rp.is_general());
        let cg = vertex_rotary_graph(&rp).unwrap();
        assert_eq!(cg.graph.vertex_count(), 8);
        assert_eq!(cg.graph.edge_count(), 24);
    }

    #[test]
    fn knn_pair_gives_complete_bipartite_extender() {
        let e = catalog::knn(3, 4).unwrap();
        let rp = validate_rotary_pair(e.element("a").unwrap(), e.element("z").unwrap()).unwrap();
        let cg = vertex_rotary_graph(&rp).unwrap();
        assert_eq!(cg.graph.vertex_count(), 6);
        assert_eq!(cg.graph.edge_count(), 36);
        assert_eq!(cg.graph.regularity(), Some((3, 4)));
    }

    #[test]
    fn abelian_pair_is_two_vertex_extender() {
        // Z4 × Z2 with z central
        let a = Perm::from_cycles(6, &[&[0, 1, 2, 3]]);
        let z = Perm::from_cycles(6, &[&[4, 5]]);
        let rp = validate_rotary_pair(&a, &z).unwrap();
        assert_eq!(rp.degenerate_class(), DegenerateClass::TwoVertexExtender);
        let cg = vertex_rotary_graph(&rp).unwrap();
        assert_eq!(cg.graph.vertex_count(), 2);
        assert_eq!(cg.graph.edge_count(), 4);
        assert!(matches!(
            canonical_cycle(&rp, &cg, CycleKind::AZ),
            Err(RotaryError::DegenerateGraph)
        ));
    }

    #[test]
    fn dihedral_pair_is_simple_cycle() {
        // |a| = 2 and ⟨a,z⟩ = D_{2r}
        let a = Perm::from_cycles(5, &[&[1, 4], &[2, 3]]);
        let z = Perm::from_cycles(5, &[&[0, 1], &[2, 4]]);
        let rp = validate_rotary_pair(&a, &z).unwrap();
        let r = (&a * &z).order() as usize;
        assert_eq!(rp.degenerate_class(), DegenerateClass::SimpleCycleGraph(r));
    }

    #[test]
    fn s4_canonical_cycles() {
        let rp = s4_pair();
        assert_eq!(rp.ell, 3);
        let cg = vertex_rotary_graph(&rp).unwrap();
        let (c, stab, _) = canonical_cycle(&rp, &cg, CycleKind::ZZa).unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(stab.order(), 6);
        assert!(stab.same_group(&cycle_class_stabilizer(&cg, &c)));
        let (caz, stab_az, _) = canonical_cycle(&rp, &cg, CycleKind::AZ).unwrap();
        assert_eq!(caz.len() as u64, rp.m);
        assert!(stab_az.same_group(&cycle_class_stabilizer(&cg, &caz)));
    }

    #[test]
    fn sequence_class_comparisons() {
        let rp = s4_pair();
        let cg = vertex_rotary_graph(&rp).unwrap();
        let (c, _, _) = canonical_cycle(&rp, &cg, CycleKind::AZ).unwrap();
        let rotated = CycleSeq {
            edge_ids: c.edge_ids[2..]
                .iter()
                .chain(&c.edge_ids[..2])
                .cloned()
                .collect(),
            vertex_trace: c.vertex_trace[2..]
                .iter()
                .chain(&c.vertex_trace[..2])
                .cloned()
                .collect(),
        };
        assert!(c.seq_class_equal(&rotated, &cg.graph));
        let reversed = CycleSeq {
            edge_ids: c.edge_ids.iter().rev().cloned().collect(),
            vertex_trace: {
                let n = c.len();
                (0..n).map(|i| c.vertex_trace[(n - i) % n]).collect()
            },
        };
        assert!(c.seq_class_equal(&reversed, &cg.graph));
        let (cinv, _, _) = canonical_cycle(&rp, &cg, CycleKind::AInvZ).unwrap();
        assert!(!c.seq_class_equal(&cinv, &cg.graph));
    }

    #[test]
    fn hypercube_cycles_and_classification() {
        let e = catalog::hypercube(3, 1).unwrap();
        let rp = validate_rotary_pair(e.element("a").unwrap(), e.element("z").unwrap()).unwrap();
        let cg = vertex_rotary_graph(&rp).unwrap();
        let (caz, stab, lp) = canonical_cycle(&rp, &cg, CycleKind::AZ).unwrap();
        assert_eq!(caz.len(), 6);
        assert_eq!(stab.order(), 6);
        assert_eq!(lp, 1);
        assert_eq!(caz.classify_induced(), RegularCycleKind::SimpleCycle(6));
        let (czza, stab, _) = canonical_cycle(&rp, &cg, CycleKind::ZZa).unwrap();
        assert_eq!(czza.len(), 4);
        assert_eq!(stab.order(), 4);
        assert_eq!(czza.classify_induced(), RegularCycleKind::SimpleCycle(4));
    }

    #[test]
    fn extended_cycle_classification() {
        let e = catalog::hypercube(3, 4).unwrap();
        let rp = validate_rotary_pair(e.element("a").unwrap(), e.element("z").unwrap()).unwrap();
        let cg = vertex_rotary_graph(&rp).unwrap();
        let (caz, _, lp) = canonical_cycle(&rp, &cg, CycleKind::AZ).unwrap();
        assert_eq!(lp, 2);
        assert_eq!(
            caz.classify_induced(),
            RegularCycleKind::ExtendedCycle(6, 2)
        );
    }

    #[test]
    fn doubled_pair_classification() {
        let c = CycleSeq {
            edge_ids: vec![0, 1, 2, 3],
            vertex_trace: vec![0, 1, 0, 1],
        };
        assert_eq!(c.classify_induced(), RegularCycleKind::DoubledPair(4));
    }

    #[test]
    fn vertex_kernel_cross_checks() {
        let e = catalog::hypercube(3, 2).unwrap();
        let rp = validate_rotary_pair(e.element("a").unwrap(), e.element("z").unwrap()).unwrap();
        assert_eq!(rp.vertex_kernel().unwrap().order(), 2);
        let e = catalog::knn(3, 4).unwrap();
        let rp = validate_rotary_pair(e.element("a").unwrap(), e.element("z").unwrap()).unwrap();
        let vk = rp.vertex_kernel().unwrap();
        assert_eq!(vk.order(), 4);
        // ⟨b^{μ+δ}⟩ = ⟨b⟩ since gcd(μ+δ, λ) = 1
        assert!(vk.same_group(&Group::cyclic(e.element("b").unwrap())));
    }

    #[test]
    fn intersections_are_normal_in_g() {
        {
            let rp = s4_pair();
            let ha = Group::cyclic(&rp.a);
            let az = Group::cyclic(&(&rp.a * &rp.z));
            let zza = Group::cyclic(&(&rp.z * &rp.z.conj(&rp.a)));
            assert!(ha.intersect(&az).is_normal_in(&rp.group));
            assert!(ha.intersect(&zza).is_normal_in(&rp.group));
        }
    }

    #[test]
    fn tetrahedral_pair_has_four_cycle_boundary() {
        // k = 3, λ = 1 on 4 vertices; ℓ = 2 with λ″ = 1, so the dihedral-side
        // cycle is a simple 4-cycle: the minimal case of 2ℓ/λ″ = 4
        let a = Perm::from_cycles(4, &[&[1, 2, 3]]);
        let z = Perm::from_cycles(4, &[&[0, 1], &[2, 3]]);
        let rp = validate_rotary_pair(&a, &z).unwrap();
        assert_eq!(rp.group.order(), 12);
        assert_eq!((rp.k, rp.lambda), (3, 1));
        assert_eq!(rp.ell, 2);
        assert_eq!(rp.lambda_pp, 1);
        assert!(rp.is_general());
        let cg = vertex_rotary_graph(&rp).unwrap();
        let (c, stab, _) = canonical_cycle(&rp, &cg, CycleKind::ZZa).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.classify_induced(), RegularCycleKind::SimpleCycle(4));
        assert_eq!(stab.order(), 4);
    }

    #[test]
    fn small_index_forces_two_vertex_graph() {
        // abelian pair: |⟨az⟩ : ⟨a⟩∩⟨az⟩| ≤ 2 and the graph is K₂^(λ)
        let a = Perm::from_cycles(6, &[&[0, 1, 2, 3]]);
        let z = Perm::from_cycles(6, &[&[4, 5]]);
        let rp = validate_rotary_pair(&a, &z).unwrap();
        let az = Group::cyclic(&(&a * &z));
        let meet = Group::cyclic(&a).intersect(&az);
        assert!(az.order() / meet.order() <= 2);
        assert_eq!(rp.degenerate_class(), DegenerateClass::TwoVertexExtender);

        // dihedral pair with a inverted by z: ⟨a⟩ = ⟨a⟩ᶻ, again K₂^(λ)
        let a = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let z = Perm::from_cycles(4, &[&[1, 3]]);
        let rp = validate_rotary_pair(&a, &z).unwrap();
        assert_eq!(a.conj(&z), a.inverse());
        let w = Group::generated(4, &[z.clone(), z.conj(&a)]).unwrap();
        let meet = Group::cyclic(&a).intersect(&w);
        assert!(w.order() / meet.order() <= 2);
        assert_eq!(rp.degenerate_class(), DegenerateClass::TwoVertexExtender);
        assert_eq!(rp.lambda, 4);
        let cg = vertex_rotary_graph(&rp).unwrap();
        assert_eq!(cg.graph.vertex_count(), 2);
        assert_eq!(cg.graph.edge_count(), 4);
    }
}
