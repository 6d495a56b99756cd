//! Subgroup enumeration and the section predicates: does a group involve
//! (or p'-involve) Qd(p)?

use std::collections::HashSet;
use std::sync::Arc;

use crate::caps::Caps;
use crate::constructors;
use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::hom::GroupHom;
use crate::iso::{invariant_profile, is_isomorphic};
use crate::pgroup::{p_part, sylow_subgroup};
use crate::subgroup::Subgroup;

/// Every subgroup of `g`, by fixpoint closure: seed with all cyclic
/// subgroups and repeatedly adjoin one generator, deduplicating by element
/// set. One representative `g` per right coset of the current subgroup
/// suffices, since `<H, g> = <H, hg>`. The result is cached on the handle
/// and canonically sorted by `(order, element list)`.
pub fn all_subgroups(g: &GroupHandle, caps: &Caps) -> Result<Arc<Vec<Subgroup>>> {
    if g.order() > caps.subgroups {
        return Err(Error::infeasible("subgroup enumeration", g.order(), caps.subgroups));
    }
    if let Some(cached) = g.0.lattice.get() {
        return Ok(cached.clone());
    }
    g.elements()?;
    g.ensure_table();
    let n = g.order() as usize;

    let mut seen: HashSet<Arc<Vec<u32>>> = HashSet::new();
    let mut subs: Vec<Subgroup> = Vec::new();
    let push = |sub: Subgroup, seen: &mut HashSet<Arc<Vec<u32>>>, subs: &mut Vec<Subgroup>| {
        if seen.insert(sub.elems_arc()) {
            subs.push(sub);
        }
    };
    push(g.trivial_subgroup(), &mut seen, &mut subs);
    for x in 1..n as u32 {
        push(Subgroup::generated(g, &[x]), &mut seen, &mut subs);
    }
    let mut head = 0;
    while head < subs.len() {
        let h = subs[head].clone();
        head += 1;
        if h.order() == g.order() {
            continue;
        }
        let mut coset_seen = vec![false; n];
        for &e in h.elems() {
            coset_seen[e as usize] = true;
        }
        for x in 1..n as u32 {
            if coset_seen[x as usize] {
                continue;
            }
            for &e in h.elems() {
                coset_seen[g.mul_idx(e, x) as usize] = true;
            }
            let mut gens = h.gen_idxs().to_vec();
            gens.push(x);
            push(Subgroup::generated(g, &gens), &mut seen, &mut subs);
        }
    }
    subs.sort();
    let arc = Arc::new(subs);
    let _ = g.0.lattice.set(arc);
    Ok(g.0.lattice.get().expect("just set").clone())
}

/// All subgroups containing `s`, by upward fixpoint closure.
pub fn overgroups(g: &GroupHandle, s: &Subgroup) -> Result<Vec<Subgroup>> {
    if !s.parent_is(g) {
        return Err(Error::NotInGroup("overgroup base".into()));
    }
    g.elements()?;
    let n = g.order() as usize;
    let mut seen: HashSet<Arc<Vec<u32>>> = HashSet::new();
    seen.insert(s.elems_arc());
    let mut subs: Vec<Subgroup> = vec![s.clone()];
    let mut head = 0;
    while head < subs.len() {
        let h = subs[head].clone();
        head += 1;
        if h.order() == g.order() {
            continue;
        }
        let mut coset_seen = vec![false; n];
        for &e in h.elems() {
            coset_seen[e as usize] = true;
        }
        for x in 1..n as u32 {
            if coset_seen[x as usize] {
                continue;
            }
            for &e in h.elems() {
                coset_seen[g.mul_idx(e, x) as usize] = true;
            }
            let mut gens = h.gen_idxs().to_vec();
            gens.push(x);
            let k = Subgroup::generated(g, &gens);
            if seen.insert(k.elems_arc()) {
                subs.push(k);
            }
        }
    }
    subs.sort();
    Ok(subs)
}

/// All normal subgroups: joins of normal closures of conjugacy classes.
/// Every normal subgroup is the join of the closures of the classes it
/// contains, so the join-closure of the class closures is complete.
pub fn normal_subgroups(g: &GroupHandle) -> Result<Vec<Subgroup>> {
    g.elements()?;
    let classes = g.classes();
    let mut seen: HashSet<Arc<Vec<u32>>> = HashSet::new();
    let mut subs: Vec<Subgroup> = Vec::new();
    for class in &classes.classes {
        let sub = Subgroup::generated(g, class);
        if seen.insert(sub.elems_arc()) {
            subs.push(sub);
        }
    }
    let mut head = 0;
    while head < subs.len() {
        let a = subs[head].clone();
        head += 1;
        for bi in 0..head.saturating_sub(1) {
            let b = subs[bi].clone();
            if a.is_subgroup_of(&b) || b.is_subgroup_of(&a) {
                continue;
            }
            let mut gens = a.gen_idxs().to_vec();
            gens.extend_from_slice(b.gen_idxs());
            let join = Subgroup::generated(g, &gens);
            if seen.insert(join.elems_arc()) {
                subs.push(join);
            }
        }
    }
    for sub in &subs {
        debug_assert!(sub.is_normal());
    }
    subs.sort();
    Ok(subs)
}

/// A section `H/K ≅ Qd(p)` exhibiting involvement.
pub struct InvolvementWitness {
    pub h: Subgroup,
    pub k: Subgroup,
    /// `H/K` as a group, with the projection from `H`.
    pub section: GroupHandle,
    pub proj: GroupHom,
    /// Isomorphism from the section onto the reference Qd(p).
    pub iso: GroupHom,
    /// `gcd(|K|, p) = 1`.
    pub pprime: bool,
}

impl InvolvementWitness {
    /// Re-validates the witness from scratch.
    pub fn validate(&self, p: u64) -> bool {
        self.k.is_normal_in(&self.h)
            && self.iso.is_bijective()
            && self.proj.kernel().order() == self.k.order()
            && self.pprime == (num::integer::gcd(self.k.order(), p) == 1)
    }
}

pub fn qd_order(p: u64) -> u64 {
    p.pow(3) * (p * p - 1)
}

/// Candidate overgroups `H` for a Qd(p) section, in canonical order.
///
/// Under the lattice cap the full lattice is used. Beyond it, when the p-part
/// of `|G|` is exactly p^3, any candidate contains a full Sylow p-subgroup,
/// so overgroups of one Sylow subgroup expanded by conjugation are complete.
/// Otherwise the search refuses.
fn section_candidates(g: &GroupHandle, p: u64, caps: &Caps) -> Result<Vec<Subgroup>> {
    let q = qd_order(p);
    if !g.order().is_multiple_of(q) {
        return Ok(Vec::new());
    }
    if g.order() <= caps.subgroups {
        let lattice = all_subgroups(g, caps)?;
        return Ok(lattice
            .iter()
            .filter(|h| h.order() % q == 0)
            .cloned()
            .collect());
    }
    if p_part(g.order(), p) != p.pow(3) {
        return Err(Error::infeasible(
            "involvement search (p-part exceeds p^3 and lattice cap exceeded)",
            g.order(),
            caps.subgroups,
        ));
    }
    let s = sylow_subgroup(g, p)?;
    let overs = overgroups(g, &s)?;
    // expand by conjugacy: every Sylow is conjugate to s
    let mut seen: HashSet<Arc<Vec<u32>>> = HashSet::new();
    let mut out: Vec<Subgroup> = Vec::new();
    let gen_idxs = g.gen_idxs();
    let mut queue: Vec<Subgroup> = Vec::new();
    for h in overs {
        if h.order() % q != 0 {
            continue;
        }
        if seen.insert(h.elems_arc()) {
            queue.push(h);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let h = queue[head].clone();
        head += 1;
        out.push(h.clone());
        for &x in &gen_idxs {
            let hc = h.conj_by(x);
            if seen.insert(hc.elems_arc()) {
                queue.push(hc);
            }
        }
    }
    out.sort();
    Ok(out)
}

fn involvement_search(
    g: &GroupHandle,
    p: u64,
    require_pprime: bool,
    caps: &Caps,
) -> Result<Option<InvolvementWitness>> {
    let q = qd_order(p);
    let qd_ref = constructors::qd(p, caps)?;
    let qd_profile = invariant_profile(&qd_ref);
    let candidates = section_candidates(g, p, caps)?;
    for h in candidates {
        let k_order = h.order() / q;
        if require_pprime && k_order.is_multiple_of(p) {
            continue;
        }
        let hh = h.to_group();
        let kernels: Vec<Subgroup> = if k_order == 1 {
            vec![hh.trivial_subgroup()]
        } else {
            normal_subgroups(&hh)?
                .into_iter()
                .filter(|k| k.order() == k_order)
                .collect()
        };
        for k_local in kernels {
            let (section, proj) = hh.quotient(&k_local, caps)?;
            if invariant_profile(&section) != qd_profile {
                continue;
            }
            if let Some(iso) = is_isomorphic(&section, &qd_ref, caps)? {
                let k = h.lift(&k_local);
                let pprime = num::integer::gcd(k.order(), p) == 1;
                return Ok(Some(InvolvementWitness {
                    h,
                    k,
                    section,
                    proj,
                    iso,
                    pprime,
                }));
            }
        }
    }
    Ok(None)
}

/// Does `G` have subgroups `K ⊴ H ≤ G` with `H/K ≅ Qd(p)`? Returns the
/// canonical-first witness.
pub fn involves_qd(g: &GroupHandle, p: u64, caps: &Caps) -> Result<Option<InvolvementWitness>> {
    involvement_search(g, p, false, caps)
}

/// Like [`involves_qd`] but requiring `|K|` coprime to `p`.
pub fn pprime_involves_qd(
    g: &GroupHandle,
    p: u64,
    caps: &Caps,
) -> Result<Option<InvolvementWitness>> {
    involvement_search(g, p, true, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn subgroup_counts() {
        let caps = Caps::default();
        let s3 = corpus::sym(3, &caps).unwrap();
        assert_eq!(all_subgroups(&s3, &caps).unwrap().len(), 6);
        let q8 = constructors::quaternion8(&caps).unwrap();
        assert_eq!(all_subgroups(&q8, &caps).unwrap().len(), 6);
        let c5 = constructors::cyclic(5, &caps).unwrap();
        assert_eq!(all_subgroups(&c5, &caps).unwrap().len(), 2);
        let a5 = corpus::alt(5, &caps).unwrap();
        assert_eq!(all_subgroups(&a5, &caps).unwrap().len(), 59);
    }

    #[test]
    fn lattice_matches_bounded_generation_oracle() {
        // Oracle: in a group of order <= 24 every subgroup is generated by at
        // most 4 elements, so closures of all <=4-subsets are complete.
        let caps = Caps::default();
        for g in [
            corpus::sym(4, &caps).unwrap(),
            corpus::alt(4, &caps).unwrap(),
            constructors::sl2(3, &caps).unwrap(),
            corpus::dihedral(12, &caps).unwrap(),
        ] {
            g.ensure_table();
            let n = g.order() as u32;
            let mut oracle: HashSet<Vec<u32>> = HashSet::new();
            for a in 0..n {
                for b in a..n {
                    for c in b..n {
                        for d in c..n {
                            oracle.insert(crate::subgroup::close_indices(&g, &[a, b, c, d]));
                        }
                    }
                }
            }
            let lattice = all_subgroups(&g, &caps).unwrap();
            assert_eq!(lattice.len(), oracle.len(), "order {}", g.order());
        }
    }

    #[test]
    fn overgroups_of_sylow2_in_a5() {
        let caps = Caps::default();
        let a5 = corpus::alt(5, &caps).unwrap();
        let s = sylow_subgroup(&a5, 2).unwrap();
        let overs = overgroups(&a5, &s).unwrap();
        let orders: Vec<u64> = overs.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![4, 12, 60]);
        let all = overgroups(&a5, &a5.trivial_subgroup()).unwrap();
        assert_eq!(all.len(), 59);
    }

    #[test]
    fn normal_subgroup_lists() {
        let caps = Caps::default();
        let s3 = corpus::sym(3, &caps).unwrap();
        let ns = normal_subgroups(&s3).unwrap();
        let orders: Vec<u64> = ns.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);
        let s4 = corpus::sym(4, &caps).unwrap();
        assert_eq!(normal_subgroups(&s4).unwrap().len(), 4);
        let c12 = constructors::cyclic(12, &caps).unwrap();
        assert_eq!(normal_subgroups(&c12).unwrap().len(), 6);
    }

    #[test]
    fn qd3_has_no_normal_c3() {
        let caps = Caps::default();
        let qd3 = constructors::qd(3, &caps).unwrap();
        let ns = normal_subgroups(&qd3).unwrap();
        assert!(ns.iter().all(|k| k.order() != 3));
        // but it does have the normal (Z/3)^2
        assert!(ns.iter().any(|k| k.order() == 9));
    }

    #[test]
    fn involvement_basics() {
        let caps = Caps::default();
        let qd3 = constructors::qd(3, &caps).unwrap();
        let w = involves_qd(&qd3, 3, &caps).unwrap().expect("Qd(3) involves itself");
        assert_eq!(w.h.order(), 216);
        assert_eq!(w.k.order(), 1);
        assert!(w.validate(3));

        let a5 = corpus::alt(5, &caps).unwrap();
        assert!(involves_qd(&a5, 2, &caps).unwrap().is_none());

        let s5 = corpus::sym(5, &caps).unwrap();
        let w = involves_qd(&s5, 2, &caps).unwrap().expect("S4 <= S5");
        assert_eq!(w.h.order(), 24);
        assert_eq!(w.k.order(), 1);
        assert!(w.validate(2));
    }

    #[test]
    fn pprime_with_direct_factor() {
        let caps = Caps::default();
        let qd3 = constructors::qd(3, &caps).unwrap();
        let c2 = constructors::cyclic(2, &caps).unwrap();
        let g = GroupHandle::direct_product(&qd3, &c2, &caps).unwrap();
        let w = pprime_involves_qd(&g, 3, &caps).unwrap().expect("involves");
        assert!(w.pprime);
        assert!(w.validate(3));
    }
}
