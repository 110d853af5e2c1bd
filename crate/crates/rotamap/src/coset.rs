//! Right coset spaces [G:H] with canonical representatives, plus cores and
//! action kernels.
//!
//! The canonical representative of a coset Hx is the lexicographically least
//! image array among {hx : h ∈ H}, so labels are stable across runs and
//! platforms.

use std::collections::HashMap;

use crate::error::GroupError;
use crate::group::Group;
use crate::perm::Perm;

/// The right coset space [G:H]: one canonical representative per coset, plus
/// a lookup from every element of G to its coset index.
#[derive(Clone)]
pub struct CosetSpace {
    subgroup: Group,
    reps: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl std::fmt::Debug for CosetSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CosetSpace({} cosets of order-{} subgroup)",
            self.reps.len(),
            self.subgroup.order()
        )
    }
}

impl CosetSpace {
    /// Requires H ≤ G (membership-checked).
    pub fn new(ambient: &Group, subgroup: &Group) -> Result<Self, GroupError> {
        if !subgroup.is_subgroup_of(ambient) {
            return Err(GroupError::NotASubgroup);
        }
        let mut index: HashMap<Perm, usize> = HashMap::with_capacity(ambient.order());
        let mut reps: Vec<Perm> = Vec::with_capacity(ambient.order() / subgroup.order());
        for x in ambient.elements() {
            if index.contains_key(x) {
                continue;
            }
            let members: Vec<Perm> = subgroup.elements().iter().map(|h| h * x).collect();
            let rep = members.iter().min().expect("coset is non-empty").clone();
            let pos = reps.len();
            reps.push(rep);
            for m in members {
                index.insert(m, pos);
            }
        }
        // order cosets by their canonical representative
        let mut order: Vec<usize> = (0..reps.len()).collect();
        order.sort_by(|&a, &b| reps[a].cmp(&reps[b]));
        let mut rank = vec![0usize; reps.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let mut sorted_reps = reps.clone();
        for (old, rep) in reps.into_iter().enumerate() {
            sorted_reps[rank[old]] = rep;
        }
        for slot in index.values_mut() {
            *slot = rank[*slot];
        }
        Ok(CosetSpace {
            subgroup: subgroup.clone(),
            reps: sorted_reps,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn subgroup(&self) -> &Group {
        &self.subgroup
    }

    pub fn reps(&self) -> &[Perm] {
        &self.reps
    }

    pub fn rep(&self, i: usize) -> &Perm {
        &self.reps[i]
    }

    /// Index of the coset containing `x` (any element of G).
    pub fn index_of(&self, x: &Perm) -> usize {
        self.index[x]
    }

    /// Index of the coset of `rep * g`: the right-multiplication action.
    pub fn act(&self, i: usize, g: &Perm) -> usize {
        self.index[&(&self.reps[i] * g)]
    }

    pub fn canonical(&self, x: &Perm) -> &Perm {
        &self.reps[self.index[x]]
    }
}

/// Core of H in G: the largest normal subgroup of G inside H, computed as the
/// kernel of the right-multiplication action on [G:H].
pub fn core(ambient: &Group, subgroup: &Group) -> Result<Group, GroupError> {
    let space = CosetSpace::new(ambient, subgroup)?;
    let kernel = ambient
        .elements()
        .iter()
        .filter(|g| (0..space.len()).all(|i| space.act(i, g) == i))
        .cloned()
        .collect();
    Ok(Group::from_elements(ambient.degree(), kernel))
}

/// Alias for [`core`]: the kernel of the G-action on [G:H].
pub fn action_kernel(ambient: &Group, subgroup: &Group) -> Result<Group, GroupError> {
    core(ambient, subgroup)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Group {
        Group::generated(
            3,
            &[
                Perm::from_cycles(3, &[&[0, 1, 2]]),
                Perm::from_cycles(3, &[&[0, 1]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn whole_group_gives_one_coset() {
        let g = s3();
        let space = CosetSpace::new(&g, &g).unwrap();
        assert_eq!(space.len(), 1);
    }

    #[test]
    fn index_times_order_is_group_order() {
        let g = s3();
        let h = Group::generated(3, &[Perm::from_cycles(3, &[&[0, 1]])]).unwrap();
        let space = CosetSpace::new(&g, &h).unwrap();
        assert_eq!(space.len() * h.order(), g.order());
    }

    #[test]
    fn canonical_is_stable_under_subgroup_translation() {
        let g = s3();
        let h = Group::generated(3, &[Perm::from_cycles(3, &[&[0, 1]])]).unwrap();
        let space = CosetSpace::new(&g, &h).unwrap();
        for x in g.elements() {
            for hh in h.elements() {
                assert_eq!(space.canonical(x), space.canonical(&(hh * x)));
            }
        }
    }

    #[test]
    fn not_a_subgroup_is_rejected() {
        let g = Group::cyclic(&Perm::from_cycles(3, &[&[0, 1, 2]]));
        let h = Group::generated(3, &[Perm::from_cycles(3, &[&[0, 1]])]).unwrap();
        assert_eq!(
            CosetSpace::new(&g, &h).unwrap_err(),
            GroupError::NotASubgroup
        );
    }

    #[test]
    fn core_of_whole_group_and_trivial() {
        let g = s3();
        assert_eq!(core(&g, &g).unwrap().order(), g.order());
        assert_eq!(core(&g, &Group::trivial(3)).unwrap().order(), 1);
    }

    #[test]
    fn core_is_normal_and_contained() {
        let g = s3();
        let h = Group::generated(3, &[Perm::from_cycles(3, &[&[0, 1]])]).unwrap();
        let c = core(&g, &h).unwrap();
        assert!(c.is_subgroup_of(&h));
        assert!(c.is_normal_in(&g));
        assert_eq!(c.order(), 1);
    }
}
