//! Fusion control, the p-core, p-stability, and the search for
//! characteristic subgroups sandwiched between Omega(Z(S)) and
//! Omega(Z(Je(S))) whose normalizers control fusion.

use std::collections::HashSet;
use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::iso::automorphism_group;
use crate::pgroup::{is_p_power, p_part, sylow_subgroup, thompson};
use crate::sections::all_subgroups;
use crate::subgroup::Subgroup;

/// Outcome of a fusion-control check.
pub struct FusionVerdict {
    pub controls: bool,
    /// `(P, g)` with `P^g <= S` but `g` not in `H * C_G(P)`.
    pub counterexample: Option<(Subgroup, u32)>,
}

/// Does `H` control `G`-fusion in `S`? For every `P <= S` and `g` in `G`
/// with `g P g^-1 <= S` there must exist `h` in `H` and `c` in `C_G(P)`
/// with `g = hc`. Membership in `H * C_G(P)` is decided over coset
/// representatives of `C_G(P) ∩ H` in `H`. The first counterexample in
/// canonical `(P, g)` order is returned.
pub fn controls_fusion(
    g: &GroupHandle,
    s: &Subgroup,
    h: &Subgroup,
    caps: &Caps,
) -> Result<FusionVerdict> {
    if !s.parent_is(g) || !h.parent_is(g) || !s.is_subgroup_of(h) {
        return Err(Error::NotInGroup("need S <= H <= G".into()));
    }
    if s.order() > 1 {
        let p = smallest_prime_factor(s.order());
        if !is_p_power(s.order(), p) || s.order() != p_part(g.order(), p) {
            return Err(Error::BadParams("S must be a Sylow p-subgroup of G".into()));
        }
    }
    g.ensure_table();
    let s_local_lattice = all_subgroups(&s.to_group(), caps)?;
    let subgroups_of_s: Vec<Subgroup> = s_local_lattice.iter().map(|p| s.lift(p)).collect();

    let n = g.order() as u32;
    for p_sub in &subgroups_of_s {
        let cent = g.centralizer(p_sub)?;
        // coset representatives of C ∩ H in H
        let mut reps: Vec<u32> = Vec::new();
        {
            let mut covered = vec![false; n as usize];
            for &x in h.elems() {
                if covered[x as usize] {
                    continue;
                }
                reps.push(x);
                // mark x * (C ∩ H)
                for &c in cent.elems() {
                    if h.contains_idx(c) {
                        covered[g.mul_idx(x, c) as usize] = true;
                    }
                }
            }
        }
        let in_h_cent = |x: u32| -> bool {
            reps.iter()
                .any(|&r| cent.contains_idx(g.mul_idx(g.inv_idx(r), x)))
        };
        let p_gens = p_sub.gen_idxs();
        for conj in 0..n {
            // g P g^-1 <= S  <=>  P^(g^-1) <= S
            let inv = g.inv_idx(conj);
            if !p_gens.iter().all(|&x| s.contains_idx(g.conj_idx(x, inv))) {
                continue;
            }
            if !in_h_cent(conj) {
                return Ok(FusionVerdict {
                    controls: false,
                    counterexample: Some((p_sub.clone(), conj)),
                });
            }
        }
    }
    Ok(FusionVerdict {
        controls: true,
        counterexample: None,
    })
}

/// Independent brute-force oracle for [`controls_fusion`]: builds the full
/// product set `H * C_G(P)` as a bitset for each `P` and tests membership
/// directly. Used by the acceptance suite for cross-checking.
pub fn controls_fusion_oracle(
    g: &GroupHandle,
    s: &Subgroup,
    h: &Subgroup,
    caps: &Caps,
) -> Result<FusionVerdict> {
    g.ensure_table();
    let s_local_lattice = all_subgroups(&s.to_group(), caps)?;
    let n = g.order() as u32;
    for p_local in s_local_lattice.iter() {
        let p_sub = s.lift(p_local);
        let cent = g.centralizer(&p_sub)?;
        let mut product = vec![false; n as usize];
        for &hh in h.elems() {
            for &c in cent.elems() {
                product[g.mul_idx(hh, c) as usize] = true;
            }
        }
        let p_gens = p_sub.gen_idxs();
        for conj in 0..n {
            let inv = g.inv_idx(conj);
            if !p_gens.iter().all(|&x| s.contains_idx(g.conj_idx(x, inv))) {
                continue;
            }
            if !product[conj as usize] {
                return Ok(FusionVerdict {
                    controls: false,
                    counterexample: Some((p_sub.clone(), conj)),
                });
            }
        }
    }
    Ok(FusionVerdict {
        controls: true,
        counterexample: None,
    })
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

/// `O_p(G)`: the largest normal p-subgroup, as the intersection of all
/// Sylow p-subgroups (they are conjugate, so intersecting the conjugation
/// orbit of one suffices).
pub fn p_core(g: &GroupHandle, p: u64) -> Result<Subgroup> {
    let s = sylow_subgroup(g, p)?;
    let mut core = s.clone();
    let mut seen: HashSet<Arc<Vec<u32>>> = HashSet::new();
    seen.insert(s.elems_arc());
    let mut queue = vec![s];
    let gen_idxs = g.gen_idxs();
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head].clone();
        head += 1;
        for &x in &gen_idxs {
            let conj = cur.conj_by(x);
            if seen.insert(conj.elems_arc()) {
                core = core.intersection(&conj);
                queue.push(conj);
            }
        }
    }
    Ok(core)
}

/// Outcome of a p-stability check.
pub struct PStabilityVerdict {
    pub stable: bool,
    /// `(P, g)` with `g` in `N_G(P)`, `[P,g,g] = 1`, but `g C_G(P)` outside
    /// `O_p(N_G(P)/C_G(P))`.
    pub violation: Option<(Subgroup, u32)>,
}

/// Enumerates all p-subgroups: the lattice of one Sylow subgroup closed
/// under conjugation.
pub fn all_p_subgroups(g: &GroupHandle, p: u64, caps: &Caps) -> Result<Vec<Subgroup>> {
    let s = sylow_subgroup(g, p)?;
    let lattice = all_subgroups(&s.to_group(), caps)?;
    let mut seen: HashSet<Arc<Vec<u32>>> = HashSet::new();
    let mut queue: Vec<Subgroup> = Vec::new();
    for local in lattice.iter() {
        let sub = s.lift(local);
        if seen.insert(sub.elems_arc()) {
            queue.push(sub);
        }
    }
    let gen_idxs = g.gen_idxs();
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head].clone();
        head += 1;
        for &x in &gen_idxs {
            let conj = cur.conj_by(x);
            if seen.insert(conj.elems_arc()) {
                queue.push(conj);
            }
        }
    }
    queue.sort();
    Ok(queue)
}

/// Is `G` p-stable: whenever `P` is a p-subgroup, `g ∈ N_G(P)` and
/// `[P,g,g] = 1`, the coset `g C_G(P)` lies in `O_p(N_G(P)/C_G(P))`.
pub fn is_p_stable(g: &GroupHandle, p: u64, caps: &Caps) -> Result<PStabilityVerdict> {
    g.ensure_table();
    for p_sub in all_p_subgroups(g, p, caps)? {
        if p_sub.order() == 1 {
            continue;
        }
        let normalizer = g.normalizer(&p_sub)?;
        let cent = g.centralizer(&p_sub)?;
        let nh = normalizer.to_group();
        let cent_local: Vec<u32> = cent
            .elems()
            .iter()
            .filter_map(|&x| normalizer.parent_to_local(x))
            .collect();
        debug_assert_eq!(cent_local.len() as u64, cent.order());
        let cent_in_n = Subgroup::from_sorted_elements(&nh, cent_local);
        let (quot, proj) = nh.quotient(&cent_in_n, caps)?;
        let core = p_core(&quot, p)?;
        for (local, &gidx) in normalizer.elems().iter().enumerate() {
            if !g.iterated_commutator_trivial(&p_sub, gidx) {
                continue;
            }
            if !core.contains_idx(proj.apply_idx(local as u32)) {
                return Ok(PStabilityVerdict {
                    stable: false,
                    violation: Some((p_sub, gidx)),
                });
            }
        }
    }
    Ok(PStabilityVerdict {
        stable: true,
        violation: None,
    })
}

/// A characteristic subgroup between Omega(Z(S)) and Omega(Z(Je(S))) whose
/// normalizer controls fusion.
pub struct SandwichWitness {
    pub w: Subgroup,
    pub characteristic_certified: bool,
    pub normalizer: Subgroup,
}

/// Finds all sandwich witnesses for the Sylow p-subgroup of `g`: subgroups
/// `W` with `Omega(Z(S)) <= W <= Omega(Z(Je(S)))`, invariant under every
/// automorphism of `S`, such that `N_G(W)` controls `G`-fusion in `S`.
pub fn sandwich_witnesses(g: &GroupHandle, p: u64, caps: &Caps) -> Result<Vec<SandwichWitness>> {
    let s = sylow_subgroup(g, p)?;
    let td = thompson(&s, p, caps)?;
    let bottom = &td.omega_zs;
    let top = &td.omega_zje;

    // candidate W: subgroups of the elementary abelian `top` containing `bottom`
    let top_h = top.to_group();
    let top_lattice = all_subgroups(&top_h, caps)?;
    let candidates: Vec<Subgroup> = top_lattice
        .iter()
        .map(|w| top.lift(w))
        .filter(|w| bottom.is_subgroup_of(w))
        .collect();

    // full automorphism group of S; refuse rather than approximate
    let sh = s.to_group();
    let auts = automorphism_group(&sh, caps)?;

    let mut out = Vec::new();
    for w in candidates {
        let w_local: Vec<u32> = w
            .elems()
            .iter()
            .map(|&x| s.parent_to_local(x).expect("W inside S"))
            .collect();
        let characteristic = auts.iter().all(|aut| {
            w_local
                .iter()
                .all(|&x| w_local.binary_search(&aut.apply_idx(x)).is_ok())
        });
        if !characteristic {
            continue;
        }
        let normalizer = g.normalizer(&w)?;
        let verdict = controls_fusion(g, &s, &normalizer, caps)?;
        if verdict.controls {
            out.push(SandwichWitness {
                w,
                characteristic_certified: true,
                normalizer,
            });
        }
    }
    out.sort_by(|a, b| a.w.cmp(&b.w));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;
    use crate::corpus;

    #[test]
    fn burnside_on_a5() {
        let caps = Caps::default();
        let a5 = corpus::alt(5, &caps).unwrap();
        let s = sylow_subgroup(&a5, 2).unwrap();
        let n = a5.normalizer(&s).unwrap();
        assert_eq!(n.order(), 12);
        let v = controls_fusion(&a5, &s, &n, &caps).unwrap();
        assert!(v.controls);
        let o = controls_fusion_oracle(&a5, &s, &n, &caps).unwrap();
        assert!(o.controls);
    }

    #[test]
    fn whole_group_always_controls() {
        let caps = Caps::default();
        let s4 = corpus::sym(4, &caps).unwrap();
        let s = sylow_subgroup(&s4, 2).unwrap();
        let v = controls_fusion(&s4, &s, &s4.full_subgroup(), &caps).unwrap();
        assert!(v.controls);
    }

    #[test]
    fn s3_sylow2_self_controls() {
        let caps = Caps::default();
        let s3 = corpus::sym(3, &caps).unwrap();
        let s = sylow_subgroup(&s3, 2).unwrap();
        assert_eq!(s.order(), 2);
        // only elements normalizing S conjugate it into itself, and
        // N_G(S) = S here, so S controls its own fusion
        let v = controls_fusion(&s3, &s, &s, &caps).unwrap();
        assert!(v.controls);
    }

    #[test]
    fn p_core_examples() {
        let caps = Caps::default();
        let s4 = corpus::sym(4, &caps).unwrap();
        assert_eq!(p_core(&s4, 2).unwrap().order(), 4);
        let qd3 = constructors::qd(3, &caps).unwrap();
        let core = p_core(&qd3, 3).unwrap();
        assert_eq!(core.order(), 9);
        assert!(core.is_normal());
        let c21 = corpus::frobenius21(&caps).unwrap();
        assert_eq!(p_core(&c21, 2).unwrap().order(), 1);
    }

    #[test]
    fn p_stability_examples() {
        let caps = Caps::default();
        let c12 = constructors::cyclic(12, &caps).unwrap();
        assert!(is_p_stable(&c12, 2, &caps).unwrap().stable);
        let s3 = corpus::sym(3, &caps).unwrap();
        assert!(is_p_stable(&s3, 3, &caps).unwrap().stable);
        let qd3 = constructors::qd(3, &caps).unwrap();
        let v = is_p_stable(&qd3, 3, &caps).unwrap();
        assert!(!v.stable);
        assert!(v.violation.is_some());
    }

    #[test]
    fn sandwich_on_a5() {
        let caps = Caps::default();
        let a5 = corpus::alt(5, &caps).unwrap();
        let w = sandwich_witnesses(&a5, 2, &caps).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].w.order(), 4);
        assert_eq!(w[0].normalizer.order(), 12);
    }

    #[test]
    fn sandwich_on_s3xs3() {
        let caps = Caps::default();
        let s3 = corpus::sym(3, &caps).unwrap();
        let g = GroupHandle::direct_product(&s3, &s3, &caps).unwrap();
        let w = sandwich_witnesses(&g, 3, &caps).unwrap();
        assert!(!w.is_empty());
        assert_eq!(w[0].w.order(), 9);
        assert_eq!(w[0].normalizer.order(), 36);
    }
}
