//! Subgroups of an ambient group, stored as sorted element-index sets.

use std::sync::Arc;

use crate::group::GroupHandle;
use crate::perm::Perm;

/// A subgroup of a parent [`GroupHandle`], with its full element set and a
/// small generating set. Ordered by `(order, element list)`: that is the
/// canonical ordering used for witness selection.
#[derive(Clone)]
pub struct Subgroup {
    parent: GroupHandle,
    elems: Arc<Vec<u32>>,
    gens: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}
impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.elems.len(), self.elems.as_slice()).cmp(&(other.elems.len(), other.elems.as_slice()))
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order={})", self.order())
    }
}

impl Subgroup {
    pub fn trivial(parent: &GroupHandle) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            elems: Arc::new(vec![parent.identity_idx()]),
            gens: Vec::new(),
        }
    }

    pub fn full(parent: &GroupHandle) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            elems: Arc::new((0..parent.order() as u32).collect()),
            gens: parent.gen_idxs(),
        }
    }

    /// The subgroup generated by the given element indices.
    pub fn generated(parent: &GroupHandle, gens: &[u32]) -> Subgroup {
        let elems = close_indices(parent, gens);
        let mut sub = Subgroup {
            parent: parent.clone(),
            elems: Arc::new(elems),
            gens: gens.to_vec(),
        };
        sub.gens.retain(|&g| g != parent.identity_idx());
        sub
    }

    /// Wraps a sorted element list that is already known to be a subgroup,
    /// computing a small generating set greedily.
    pub fn from_sorted_elements(parent: &GroupHandle, elems: Vec<u32>) -> Subgroup {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elems.contains(&parent.identity_idx()));
        let gens = greedy_gens(parent, &elems);
        Subgroup {
            parent: parent.clone(),
            elems: Arc::new(elems),
            gens,
        }
    }

    pub fn parent(&self) -> &GroupHandle {
        &self.parent
    }

    pub fn parent_is(&self, g: &GroupHandle) -> bool {
        Arc::ptr_eq(&self.parent.0, &g.0)
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn index_in_parent(&self) -> u64 {
        self.parent.order() / self.order()
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn elems_arc(&self) -> Arc<Vec<u32>> {
        self.elems.clone()
    }

    pub fn gen_idxs(&self) -> &[u32] {
        &self.gens
    }

    pub fn gen_perms(&self) -> Vec<Perm> {
        self.gens.iter().map(|&g| self.parent.perm(g).clone()).collect()
    }

    pub fn contains_idx(&self, idx: u32) -> bool {
        self.elems.binary_search(&idx).is_ok()
    }

    pub fn contains_perm(&self, p: &Perm) -> bool {
        self.parent.index_of(p).is_some_and(|i| self.contains_idx(i))
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent_is(&other.parent) && self.elems.iter().all(|&e| other.contains_idx(e))
    }

    /// Lagrange sanity: the order divides the parent's order.
    pub fn order_divides_parent(&self) -> bool {
        self.parent.order().is_multiple_of(self.order())
    }

    /// `H^g`, by mapping every element.
    pub fn conj_by(&self, g: u32) -> Subgroup {
        let mut elems: Vec<u32> = self.elems.iter().map(|&x| self.parent.conj_idx(x, g)).collect();
        elems.sort_unstable();
        let gens = self.gens.iter().map(|&x| self.parent.conj_idx(x, g)).collect();
        Subgroup {
            parent: self.parent.clone(),
            elems: Arc::new(elems),
            gens,
        }
    }

    pub fn is_normalized_by_idx(&self, g: u32) -> bool {
        self.gens
            .iter()
            .all(|&x| self.contains_idx(self.parent.conj_idx(x, g)))
    }

    /// Normal in the parent group.
    pub fn is_normal(&self) -> bool {
        self.parent
            .gen_idxs()
            .iter()
            .all(|&g| self.is_normalized_by_idx(g))
    }

    /// Normal in an overgroup `H` (checked against `H`'s generators).
    pub fn is_normal_in(&self, h: &Subgroup) -> bool {
        self.is_subgroup_of(h) && h.gen_idxs().iter().all(|&g| self.is_normalized_by_idx(g))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elems: Vec<u32> = self
            .elems
            .iter()
            .copied()
            .filter(|&e| other.contains_idx(e))
            .collect();
        Subgroup::from_sorted_elements(&self.parent, elems)
    }

    /// Promotes the subgroup to a standalone group handle. Elements are shared
    /// in parent-table order, which is already the canonical sorted order.
    pub fn to_group(&self) -> GroupHandle {
        let perms: Vec<Perm> = self.elems.iter().map(|&i| self.parent.perm(i).clone()).collect();
        let gens = self.gen_perms();
        GroupHandle::from_sorted_elements(self.parent.degree(), gens, Arc::new(perms))
    }

    /// Translates an element index of `self.to_group()`'s table back to the
    /// parent index. Both tables are sorted, so this is positional.
    pub fn local_to_parent(&self, local: u32) -> u32 {
        self.elems[local as usize]
    }

    pub fn parent_to_local(&self, parent_idx: u32) -> Option<u32> {
        self.elems.binary_search(&parent_idx).ok().map(|i| i as u32)
    }

    /// Lifts a subgroup of `self.to_group()` into the parent.
    pub fn lift(&self, local: &Subgroup) -> Subgroup {
        let elems: Vec<u32> = local.elems().iter().map(|&i| self.local_to_parent(i)).collect();
        let gens = local.gen_idxs().iter().map(|&i| self.local_to_parent(i)).collect();
        Subgroup {
            parent: self.parent.clone(),
            elems: Arc::new(elems),
            gens,
        }
    }
}

/// Closes a generator set to a full subgroup element list (sorted), by
/// breadth-first multiplication in index space.
pub(crate) fn close_indices(parent: &GroupHandle, gens: &[u32]) -> Vec<u32> {
    if gens.is_empty() {
        return vec![parent.identity_idx()];
    }
    // Quick cyclic path.
    if gens.len() == 1 {
        let mut elems = vec![parent.identity_idx()];
        let mut x = gens[0];
        while x != parent.identity_idx() {
            elems.push(x);
            x = parent.mul_idx(x, gens[0]);
        }
        elems.sort_unstable();
        return elems;
    }
    let mut in_set = vec![false; parent.order() as usize];
    in_set[parent.identity_idx() as usize] = true;
    let mut elems = vec![parent.identity_idx()];
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head];
        head += 1;
        for &g in gens {
            let y = parent.mul_idx(x, g);
            if !in_set[y as usize] {
                in_set[y as usize] = true;
                elems.push(y);
            }
        }
    }
    elems.sort_unstable();
    elems
}

/// Picks a small generating set from a full element list: repeatedly adjoin
/// the first element not yet generated.
fn greedy_gens(parent: &GroupHandle, elems: &[u32]) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    let mut have: Vec<u32> = vec![parent.identity_idx()];
    while (have.len()) < elems.len() {
        let next = *elems
            .iter()
            .find(|&&e| have.binary_search(&e).is_err())
            .expect("closure not yet complete");
        gens.push(next);
        have = close_indices(parent, &gens);
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;

    fn s4() -> GroupHandle {
        let caps = Caps::default();
        GroupHandle::from_generators(
            4,
            vec![
                Perm::parse_cycles("(1 2)", 4).unwrap(),
                Perm::parse_cycles("(1 2 3 4)", 4).unwrap(),
            ],
            &caps,
        )
        .unwrap()
    }

    #[test]
    fn generated_subgroups() {
        let g = s4();
        g.ensure_table();
        let four_cycle = g.index_of(&Perm::parse_cycles("(1 2 3 4)", 4).unwrap()).unwrap();
        let c4 = Subgroup::generated(&g, &[four_cycle]);
        assert_eq!(c4.order(), 4);
        assert!(c4.order_divides_parent());
        let n = g.normalizer(&c4).unwrap();
        assert_eq!(n.order(), 8);
    }

    #[test]
    fn normality_and_lagrange() {
        let g = s4();
        let v4: Vec<u32> = ["(1 2)(3 4)", "(1 3)(2 4)"]
            .iter()
            .map(|c| g.index_of(&Perm::parse_cycles(c, 4).unwrap()).unwrap())
            .collect();
        let v = Subgroup::generated(&g, &v4);
        assert_eq!(v.order(), 4);
        assert!(v.is_normal());
        let c4 = Subgroup::generated(
            &g,
            &[g.index_of(&Perm::parse_cycles("(1 2 3 4)", 4).unwrap()).unwrap()],
        );
        assert!(!c4.is_normal());
    }

    #[test]
    fn to_group_roundtrip() {
        let g = s4();
        let a4: Vec<u32> = ["(1 2 3)", "(2 3 4)"]
            .iter()
            .map(|c| g.index_of(&Perm::parse_cycles(c, 4).unwrap()).unwrap())
            .collect();
        let a = Subgroup::generated(&g, &a4);
        assert_eq!(a.order(), 12);
        let ah = a.to_group();
        assert_eq!(ah.order(), 12);
        assert!(ah.perm(0).is_identity());
        // positional mapping agrees with perms
        for i in 0..12u32 {
            assert_eq!(g.perm(a.local_to_parent(i)), ah.perm(i));
        }
    }

    #[test]
    fn intersection_of_subgroups() {
        let g = s4();
        let c4 = Subgroup::generated(
            &g,
            &[g.index_of(&Perm::parse_cycles("(1 2 3 4)", 4).unwrap()).unwrap()],
        );
        let v4 = Subgroup::generated(
            &g,
            &[
                g.index_of(&Perm::parse_cycles("(1 2)(3 4)", 4).unwrap()).unwrap(),
                g.index_of(&Perm::parse_cycles("(1 3)(2 4)", 4).unwrap()).unwrap(),
            ],
        );
        let i = c4.intersection(&v4);
        assert_eq!(i.order(), 2);
    }
}
