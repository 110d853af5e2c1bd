//! Finite permutation groups with eagerly materialised element sets.
//!
//! Everything here is desk scale: groups are stored as explicit element lists
//! (breadth-first closure order) plus a hash set for membership, with no
//! stabiliser chains. All values are immutable after construction, so sharing
//! across threads is free.

use std::collections::HashSet;

use crate::error::GroupError;
use crate::perm::Perm;

/// Default element-count cap for closures (CLI-configurable).
pub const DEFAULT_CAP: usize = 1_000_000;

/// Breadth-first closure of a generating set.
///
/// Enumeration order is deterministic: by word length, then by generator order
/// within each length. The identity comes first.
pub fn closure(degree: usize, generators: &[Perm], cap: usize) -> Result<Vec<Perm>, GroupError> {
    if generators.iter().any(|g| g.degree() != degree) {
        return Err(GroupError::DegreeMismatch);
    }
    let cap = cap.max(1);
    let identity = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(identity.clone());
    let mut elements = vec![identity];
    let mut frontier_start = 0;
    while frontier_start < elements.len() {
        let frontier_end = elements.len();
        for i in frontier_start..frontier_end {
            for g in generators {
                let next = &elements[i] * g;
                if seen.insert(next.clone()) {
                    if elements.len() + 1 > cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    elements.push(next);
                }
            }
        }
        frontier_start = frontier_end;
    }
    Ok(elements)
}

/// A finite permutation group: generators plus the materialised element set.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    member: HashSet<Perm>,
}

impl Group {
    pub fn trivial(degree: usize) -> Self {
        Group::generated(degree, &[]).expect("trivial group cannot exceed any cap")
    }

    /// ⟨generators⟩ with the default cap.
    pub fn generated(degree: usize, generators: &[Perm]) -> Result<Self, GroupError> {
        Group::generated_with_cap(degree, generators, DEFAULT_CAP)
    }

    pub fn generated_with_cap(
        degree: usize,
        generators: &[Perm],
        cap: usize,
    ) -> Result<Self, GroupError> {
        let elements = closure(degree, generators, cap)?;
        let member = elements.iter().cloned().collect();
        Ok(Group {
            degree,
            generators: generators
                .iter()
                .filter(|g| !g.is_identity())
                .cloned()
                .collect(),
            elements,
            member,
        })
    }

    /// ⟨p⟩, built from the powers of `p` directly.
    pub fn cyclic(p: &Perm) -> Self {
        let mut elements = vec![Perm::identity(p.degree())];
        let mut q = p.clone();
        while !q.is_identity() {
            elements.push(q.clone());
            q = &q * p;
        }
        let member = elements.iter().cloned().collect();
        let generators = if p.is_identity() {
            vec![]
        } else {
            vec![p.clone()]
        };
        Group {
            degree: p.degree(),
            generators,
            elements,
            member,
        }
    }

    /// Wraps a set already known to be closed (intersections, conjugates,
    /// kernels). Greedily extracts a small generating set; debug builds verify
    /// closure.
    pub(crate) fn from_elements(degree: usize, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        elements.dedup();
        debug_assert!(elements.iter().any(|e| e.is_identity()));
        let member: HashSet<Perm> = elements.iter().cloned().collect();
        debug_assert!(elements
            .iter()
            .all(|a| elements.iter().all(|b| member.contains(&(a * b)))));
        let mut generators: Vec<Perm> = Vec::new();
        let mut span: HashSet<Perm> = HashSet::new();
        span.insert(Perm::identity(degree));
        for e in &elements {
            if !span.contains(e) {
                generators.push(e.clone());
                span = closure(degree, &generators, elements.len())
                    .expect("closed set cannot out-grow itself")
                    .into_iter()
                    .collect();
            }
        }
        // keep the canonical breadth-first order for the stored elements
        let ordered = closure(degree, &generators, elements.len().max(1))
            .expect("closed set cannot out-grow itself");
        Group {
            degree,
            generators,
            elements: ordered,
            member,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.member.contains(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Subgroup test by element containment.
    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree == other.degree
            && self.order() <= other.order()
            && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn same_group(&self, other: &Group) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// `{g⁻¹ h g : h ∈ self}`.
    pub fn conjugate(&self, g: &Perm) -> Group {
        let elements = self.elements.iter().map(|h| h.conj(g)).collect();
        Group::from_elements(self.degree, elements)
    }

    /// Element-wise intersection.
    pub fn intersect(&self, other: &Group) -> Group {
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let elements = small
            .elements
            .iter()
            .filter(|e| big.contains(e))
            .cloned()
            .collect();
        Group::from_elements(self.degree, elements)
    }

    pub fn is_normal_in(&self, ambient: &Group) -> bool {
        ambient
            .generators()
            .iter()
            .all(|g| self.elements.iter().all(|h| self.contains(&h.conj(g))))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i..].iter().all(|b| (a * b) == (b * a)))
    }

    /// The derived subgroup ⟨[x, y] : x, y ∈ G⟩, computed as the closure of the
    /// generator commutators under the group operations and conjugation.
    pub fn derived_subgroup(&self) -> Group {
        let mut seeds: Vec<Perm> = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.commutator(b);
                if !c.is_identity() && !seeds.contains(&c) {
                    seeds.push(c);
                }
            }
        }
        let mut member: HashSet<Perm> = HashSet::new();
        member.insert(self.identity());
        let mut queue: Vec<Perm> = Vec::new();
        for s in seeds {
            if member.insert(s.clone()) {
                queue.push(s);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let e = queue[head].clone();
            head += 1;
            for g in &self.generators {
                let c = e.conj(g);
                if member.insert(c.clone()) {
                    queue.push(c);
                }
            }
            let snapshot: Vec<Perm> = member.iter().cloned().collect();
            for other in snapshot {
                let prod = &e * &other;
                if member.insert(prod.clone()) {
                    queue.push(prod);
                }
            }
        }
        Group::from_elements(self.degree, member.into_iter().collect())
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// Elements commuting with every element of the group.
    pub fn center(&self) -> Group {
        let elements = self
            .elements
            .iter()
            .filter(|e| self.generators.iter().all(|g| (*e * g) == (g * *e)))
            .cloned()
            .collect();
        Group::from_elements(self.degree, elements)
    }
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Group(degree={}, order={})", self.degree, self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_generating_set_is_trivial() {
        let g = Group::generated(3, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.contains(&Perm::identity(3)));
    }

    #[test]
    fn symmetric_group_on_three_points() {
        let gens = [
            Perm::from_cycles(3, &[&[0, 1, 2]]),
            Perm::from_cycles(3, &[&[0, 1]]),
        ];
        let g = Group::generated(3, &gens).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn cap_is_enforced() {
        let gens = [
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]),
            Perm::from_cycles(4, &[&[0, 1]]),
        ];
        let err = Group::generated_with_cap(4, &gens, 10).unwrap_err();
        assert_eq!(err, GroupError::CapExceeded { cap: 10 });
    }

    #[test]
    fn closure_order_independent_as_set() {
        let a = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let b = Perm::from_cycles(4, &[&[0, 1]]);
        let mut one = closure(4, &[a.clone(), b.clone()], DEFAULT_CAP).unwrap();
        let mut two = closure(4, &[b, a], DEFAULT_CAP).unwrap();
        one.sort();
        two.sort();
        assert_eq!(one, two);
    }

    #[test]
    fn cyclic_of_identity_is_trivial() {
        let g = Group::cyclic(&Perm::identity(5));
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn conjugate_by_identity_is_same() {
        let h = Group::generated(3, &[Perm::from_cycles(3, &[&[0, 1]])]).unwrap();
        let hc = h.conjugate(&Perm::identity(3));
        assert!(h.same_group(&hc));
    }

    #[test]
    fn intersect_with_self_is_self() {
        let g = Group::generated(
            4,
            &[
                Perm::from_cycles(4, &[&[0, 1, 2, 3]]),
                Perm::from_cycles(4, &[&[0, 1]]),
            ],
        )
        .unwrap();
        assert!(g.intersect(&g).same_group(&g));
    }

    #[test]
    fn derived_subgroup_of_s4_is_a4() {
        let s4 = Group::generated(
            4,
            &[
                Perm::from_cycles(4, &[&[0, 1, 2, 3]]),
                Perm::from_cycles(4, &[&[0, 1]]),
            ],
        )
        .unwrap();
        let a4 = s4.derived_subgroup();
        assert_eq!(a4.order(), 12);
        assert!(a4.is_normal_in(&s4));
    }

    #[test]
    fn center_of_dihedral_eight() {
        let r = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let s = Perm::from_cycles(4, &[&[1, 3]]);
        let d8 = Group::generated(4, &[r, s]).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(d8.center().order(), 2);
    }
}
