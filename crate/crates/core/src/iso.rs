//! Isomorphism testing and automorphism groups by generator-image
//! backtracking with invariant pruning.

use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::hom::GroupHom;
use crate::subgroup::{close_indices, Subgroup};

/// Cheap isomorphism invariants compared before any search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantProfile {
    pub order: u64,
    pub order_histogram: Vec<(u64, u64)>,
    pub class_sizes: Vec<u64>,
    pub center_order: u64,
    pub is_abelian: bool,
}

pub fn invariant_profile(g: &GroupHandle) -> InvariantProfile {
    InvariantProfile {
        order: g.order(),
        order_histogram: g.order_histogram().into_iter().collect(),
        class_sizes: g.class_size_histogram(),
        center_order: g.center().order(),
        is_abelian: g.is_abelian(),
    }
}

/// A generating sequence that greedily maximizes the generated order at each
/// step; deterministic, and short for every group in practice.
fn greedy_generating_sequence(g: &GroupHandle) -> Vec<u32> {
    let n = g.order() as u32;
    let mut gens: Vec<u32> = Vec::new();
    let mut generated: Vec<u32> = vec![g.identity_idx()];
    while (generated.len() as u64) < g.order() {
        let mut best: Option<(u64, u32, Vec<u32>)> = None;
        for cand in 1..n {
            if generated.binary_search(&cand).is_ok() {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(cand);
            let closure = close_indices(g, &trial);
            let size = closure.len() as u64;
            let better = match &best {
                None => true,
                Some((b, _, _)) => size > *b,
            };
            if better {
                let full = size == g.order();
                best = Some((size, cand, closure));
                if full {
                    break;
                }
            }
        }
        let (_, cand, closure) = best.expect("proper subgroup has an extension");
        gens.push(cand);
        generated = closure;
    }
    gens
}

/// Per-element fingerprint used to filter candidate images.
fn element_fingerprint(g: &GroupHandle, idx: u32) -> (u64, u64) {
    let classes = g.classes();
    let cls = classes.class_of[idx as usize] as usize;
    (g.element_order(idx), classes.classes[cls].len() as u64)
}

/// Words in two generators whose element orders must be preserved; a cheap
/// pairwise prune during backtracking.
fn pair_word_orders(g: &GroupHandle, a: u32, b: u32) -> [u64; 4] {
    let ab = g.mul_idx(a, b);
    let ab_inv = g.mul_idx(a, g.inv_idx(b));
    let comm = g.comm_idx(a, b);
    let aab = g.mul_idx(a, ab);
    [
        g.element_order(ab),
        g.element_order(ab_inv),
        g.element_order(comm),
        g.element_order(aab),
    ]
}

struct IsoSearch<'a> {
    a: &'a GroupHandle,
    b: &'a GroupHandle,
    a_gens: Vec<u32>,
    /// Orders of the subgroups generated by each prefix of `a_gens`.
    prefix_orders: Vec<u64>,
    candidates: Vec<Vec<u32>>,
}

impl<'a> IsoSearch<'a> {
    fn new(a: &'a GroupHandle, b: &'a GroupHandle) -> IsoSearch<'a> {
        let a_gens = greedy_generating_sequence(a);
        let mut prefix_orders = Vec::with_capacity(a_gens.len());
        for k in 1..=a_gens.len() {
            prefix_orders.push(close_indices(a, &a_gens[..k]).len() as u64);
        }
        let candidates = a_gens
            .iter()
            .map(|&ga| {
                let fp = element_fingerprint(a, ga);
                (0..b.order() as u32)
                    .filter(|&x| element_fingerprint(b, x) == fp)
                    .collect()
            })
            .collect();
        IsoSearch {
            a,
            b,
            a_gens,
            prefix_orders,
            candidates,
        }
    }

    /// Depth-first search over image tuples in canonical order; the first
    /// image tuple that validates yields the returned isomorphism.
    fn run(&self) -> Option<GroupHom> {
        let mut images: Vec<u32> = Vec::new();
        self.extend(&mut images)
    }

    fn extend(&self, images: &mut Vec<u32>) -> Option<GroupHom> {
        let depth = images.len();
        if depth == self.a_gens.len() {
            return self.validate(images);
        }
        'cand: for &cand in &self.candidates[depth] {
            for (i, &prev) in images.iter().enumerate() {
                if pair_word_orders(self.a, self.a_gens[i], self.a_gens[depth])
                    != pair_word_orders(self.b, prev, cand)
                {
                    continue 'cand;
                }
            }
            images.push(cand);
            // The generated subgroup orders must agree prefix by prefix.
            if close_indices(self.b, images).len() as u64 == self.prefix_orders[depth] {
                if let Some(hom) = self.extend(images) {
                    return Some(hom);
                }
            }
            images.pop();
        }
        None
    }

    fn validate(&self, images: &[u32]) -> Option<GroupHom> {
        // The backtracking works with the greedy generating sequence, not the
        // handle's own generators; express the handle generators through a
        // temporary hom on the greedy sequence.
        let a_seq = SeqGroup::new(self.a, &self.a_gens);
        let b_imgs: Vec<_> = images.iter().map(|&i| self.b.perm(i).clone()).collect();
        let hom = GroupHom::new(&a_seq.handle, self.b, b_imgs).ok()?;
        if !hom.is_bijective() {
            return None;
        }
        // Re-express with source = a (same elements, same indices).
        let gen_images: Vec<_> = self
            .a
            .gen_idxs()
            .iter()
            .map(|&g| self.b.perm(hom.apply_idx(g)).clone())
            .collect();
        GroupHom::new(self.a, self.b, gen_images).ok()
    }
}

/// A copy of `g` whose declared generators are the given sequence.
struct SeqGroup {
    handle: GroupHandle,
}

impl SeqGroup {
    fn new(g: &GroupHandle, gens: &[u32]) -> SeqGroup {
        let perms = gens.iter().map(|&i| g.perm(i).clone()).collect();
        let elems = g.elements_arc().expect("enumerated");
        SeqGroup {
            handle: GroupHandle::from_sorted_elements(g.degree(), perms, elems),
        }
    }
}

/// Searches for an isomorphism `A -> B`. Returns the canonical-first witness
/// (image tuples explored in ascending element order) or `None` after an
/// exhaustive search.
pub fn is_isomorphic(a: &GroupHandle, b: &GroupHandle, caps: &Caps) -> Result<Option<GroupHom>> {
    if a.order() > caps.enumeration || b.order() > caps.enumeration {
        return Err(Error::infeasible(
            "isomorphism search",
            a.order().max(b.order()),
            caps.enumeration,
        ));
    }
    if a.order() != b.order() {
        return Ok(None);
    }
    if invariant_profile(a) != invariant_profile(b) {
        return Ok(None);
    }
    Ok(IsoSearch::new(a, b).run())
}

/// All automorphisms of `g`, by the same backtracking collecting every
/// solution. The result forms a group under composition.
pub fn automorphism_group(g: &GroupHandle, caps: &Caps) -> Result<Arc<Vec<GroupHom>>> {
    if g.order() > caps.aut {
        return Err(Error::infeasible("automorphism enumeration", g.order(), caps.aut));
    }
    if let Some(cached) = g.0.automorphisms.get() {
        return Ok(cached.clone());
    }
    let search = IsoSearch::new(g, g);
    let mut found: Vec<GroupHom> = Vec::new();
    let mut images: Vec<u32> = Vec::new();
    collect_all(&search, &mut images, &mut found);
    let arc = Arc::new(found);
    let _ = g.0.automorphisms.set(arc.clone());
    Ok(g.0.automorphisms.get().expect("just set").clone())
}

fn collect_all(search: &IsoSearch, images: &mut Vec<u32>, out: &mut Vec<GroupHom>) {
    let depth = images.len();
    if depth == search.a_gens.len() {
        if let Some(hom) = search.validate(images) {
            out.push(hom);
        }
        return;
    }
    'cand: for &cand in &search.candidates[depth] {
        for (i, &prev) in images.iter().enumerate() {
            if pair_word_orders(search.a, search.a_gens[i], search.a_gens[depth])
                != pair_word_orders(search.b, prev, cand)
            {
                continue 'cand;
            }
        }
        images.push(cand);
        if close_indices(search.b, images).len() as u64 == search.prefix_orders[depth] {
            collect_all(search, images, out);
        }
        images.pop();
    }
}

/// Whether a subgroup is invariant under every automorphism of its parent.
pub fn is_characteristic(h: &Subgroup, caps: &Caps) -> Result<bool> {
    let auts = automorphism_group(h.parent(), caps)?;
    Ok(auts.iter().all(|aut| {
        h.elems()
            .iter()
            .all(|&x| h.contains_idx(aut.apply_idx(x)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn from_cycles(degree: usize, cycles: &[&str]) -> GroupHandle {
        let gens = cycles
            .iter()
            .map(|c| Perm::parse_cycles(c, degree).unwrap())
            .collect();
        GroupHandle::from_generators(degree, gens, &Caps::default()).unwrap()
    }

    #[test]
    fn c6_isomorphic_to_c2_x_c3() {
        let caps = Caps::default();
        let c6 = from_cycles(6, &["(1 2 3 4 5 6)"]);
        let c2c3 = from_cycles(5, &["(1 2)", "(3 4 5)"]);
        let iso = is_isomorphic(&c6, &c2c3, &caps).unwrap();
        assert!(iso.is_some());
        let iso = iso.unwrap();
        assert!(iso.is_bijective());
        let inv = iso.inverse().unwrap();
        for i in 0..6u32 {
            assert_eq!(inv.apply_idx(iso.apply_idx(i)), i);
        }
    }

    #[test]
    fn q8_not_isomorphic_to_d8() {
        let caps = Caps::default();
        // Q8 by right-regular action; D8 on 4 points.
        let q8 = from_cycles(8, &["(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"]);
        assert_eq!(q8.order(), 8);
        let d8 = from_cycles(4, &["(1 2 3 4)", "(1 3)"]);
        assert_eq!(d8.order(), 8);
        // One involution versus five.
        assert_eq!(q8.order_histogram()[&2], 1);
        assert_eq!(d8.order_histogram()[&2], 5);
        assert!(is_isomorphic(&q8, &d8, &caps).unwrap().is_none());
    }

    #[test]
    fn iso_is_reflexive_and_symmetric() {
        let caps = Caps::default();
        let s4a = from_cycles(4, &["(1 2)", "(1 2 3 4)"]);
        let s4b = from_cycles(4, &["(1 2 3 4)", "(3 4)"]);
        assert!(is_isomorphic(&s4a, &s4a, &caps).unwrap().is_some());
        assert!(is_isomorphic(&s4a, &s4b, &caps).unwrap().is_some());
        assert!(is_isomorphic(&s4b, &s4a, &caps).unwrap().is_some());
    }

    #[test]
    fn automorphism_counts() {
        let caps = Caps::default();
        let c3 = from_cycles(3, &["(1 2 3)"]);
        assert_eq!(automorphism_group(&c3, &caps).unwrap().len(), 2);
        let v4 = from_cycles(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(automorphism_group(&v4, &caps).unwrap().len(), 6);
        let q8 = from_cycles(8, &["(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"]);
        assert_eq!(automorphism_group(&q8, &caps).unwrap().len(), 24);
    }

    #[test]
    fn automorphisms_form_a_group() {
        let caps = Caps::default();
        let s3 = from_cycles(3, &["(1 2)", "(1 2 3)"]);
        let auts = automorphism_group(&s3, &caps).unwrap();
        assert_eq!(auts.len(), 6);
        for a in auts.iter() {
            assert!(a.inverse().is_ok());
            for b in auts.iter() {
                let c = a.then(b).unwrap();
                assert!(auts.iter().any(|d| {
                    (0..6u32).all(|i| d.apply_idx(i) == c.apply_idx(i))
                }));
            }
        }
    }
}
