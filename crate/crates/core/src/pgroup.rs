//! p-group machinery: Sylow subgroups, elementary abelian subgroup search,
//! p-rank, Thompson subgroups, Omega, Frattini and maximal subgroups.

use std::collections::HashSet;
use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::subgroup::Subgroup;

/// The exact power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        part *= p;
        n /= p;
    }
    part
}

pub fn is_p_power(n: u64, p: u64) -> bool {
    p_part(n, p) == n
}

/// A Sylow p-subgroup, built deterministically by greedy extension: start at
/// the first element of maximal p-power order, then repeatedly adjoin the
/// first p-element of the normalizer not yet inside.
pub fn sylow_subgroup(g: &GroupHandle, p: u64) -> Result<Subgroup> {
    if !crate::constructors::is_prime(p) {
        return Err(Error::BadParams(format!("{p} is not prime")));
    }
    let target = p_part(g.order(), p);
    if target == 1 {
        return Ok(g.trivial_subgroup());
    }
    g.elements()?;
    let orders = g.element_orders();
    let max_p_order = orders
        .iter()
        .copied()
        .filter(|&o| is_p_power(o, p))
        .max()
        .expect("identity is a p-power element");
    let seed = (0..g.order() as u32)
        .find(|&i| orders[i as usize] == max_p_order)
        .expect("element of maximal p-power order");
    let mut syl = Subgroup::generated(g, &[seed]);
    while syl.order() < target {
        let normalizer = g.normalizer(&syl)?;
        let next = normalizer
            .elems()
            .iter()
            .copied()
            .find(|&x| !syl.contains_idx(x) && is_p_power(orders[x as usize], p))
            .ok_or_else(|| Error::Internal("no p-element extends the p-subgroup".into()))?;
        let mut gens = syl.gen_idxs().to_vec();
        gens.push(next);
        syl = Subgroup::generated(g, &gens);
        if !is_p_power(syl.order(), p) {
            return Err(Error::Internal("greedy Sylow extension left the p-group".into()));
        }
    }
    Ok(syl)
}

/// Omega_1 of an abelian subgroup: all elements of order dividing p.
pub fn omega1(a: &Subgroup, p: u64) -> Result<Subgroup> {
    if !a.to_group().is_abelian() {
        return Err(Error::NotAbelian);
    }
    let g = a.parent();
    let elems: Vec<u32> = a
        .elems()
        .iter()
        .copied()
        .filter(|&x| {
            let o = g.element_order(x);
            o == 1 || o == p
        })
        .collect();
    Ok(Subgroup::from_sorted_elements(g, elems))
}

fn check_p_group(s: &Subgroup, p: u64) -> Result<()> {
    if !is_p_power(s.order(), p) {
        return Err(Error::NotPGroup(p));
    }
    Ok(())
}

/// All elementary abelian subgroups of `S` of maximal order, by exhaustive
/// extension over commuting order-p elements. Results are subgroups of `S`'s
/// parent, canonically ordered.
pub fn max_elementary_abelians(s: &Subgroup, p: u64, caps: &Caps) -> Result<Vec<Subgroup>> {
    check_p_group(s, p)?;
    if s.order() > caps.abelian_search {
        return Err(Error::infeasible(
            "elementary abelian search",
            s.order(),
            caps.abelian_search,
        ));
    }
    let local = s.to_group();
    local.ensure_table();
    let n = local.order() as u32;
    let unit: Vec<u32> = (1..n).filter(|&x| local.element_order(x) == p).collect();

    // commuting table over unit elements, as adjacency bitsets
    let commutes = |a: u32, b: u32| local.mul_idx(a, b) == local.mul_idx(b, a);

    let mut best: u64 = 1;
    let mut seen: HashSet<Arc<Vec<u32>>> = HashSet::new();
    let mut maximal: Vec<Arc<Vec<u32>>> = Vec::new();
    // stack of (element set, candidate extension elements)
    let trivial: Arc<Vec<u32>> = Arc::new(vec![0]);
    seen.insert(trivial.clone());
    let mut stack: Vec<(Arc<Vec<u32>>, Vec<u32>)> = vec![(trivial.clone(), unit.clone())];
    maximal.push(trivial);
    while let Some((elems, cands)) = stack.pop() {
        if elems.len() as u64 > best {
            best = elems.len() as u64;
        }
        for (ci, &x) in cands.iter().enumerate() {
            if elems.binary_search(&x).is_ok() {
                continue;
            }
            if !elems.iter().all(|&e| commutes(e, x)) {
                continue;
            }
            // extension: E x <x>, all products e * x^i
            let mut bigger: Vec<u32> = Vec::with_capacity(elems.len() * p as usize);
            for &e in elems.iter() {
                let mut xi = e;
                for _ in 0..p {
                    bigger.push(xi);
                    xi = local.mul_idx(xi, x);
                }
            }
            bigger.sort_unstable();
            bigger.dedup();
            if bigger.len() != elems.len() * p as usize {
                continue;
            }
            let bigger = Arc::new(bigger);
            if seen.insert(bigger.clone()) {
                // candidates for deeper extension: those commuting with x
                let next_cands: Vec<u32> = cands[ci..]
                    .iter()
                    .copied()
                    .filter(|&y| commutes(y, x))
                    .collect();
                maximal.push(bigger.clone());
                stack.push((bigger, next_cands));
            }
        }
    }
    let mut result: Vec<Subgroup> = maximal
        .into_iter()
        .filter(|e| e.len() as u64 == best)
        .map(|e| {
            let lifted: Vec<u32> = e.iter().map(|&i| s.local_to_parent(i)).collect();
            Subgroup::from_sorted_elements(s.parent(), lifted)
        })
        .collect();
    result.sort();
    result.dedup();
    Ok(result)
}

/// log_p of the largest elementary abelian subgroup order in a Sylow
/// p-subgroup; 0 when p does not divide the order.
pub fn p_rank(g: &GroupHandle, p: u64, caps: &Caps) -> Result<u32> {
    let s = sylow_subgroup(g, p)?;
    if s.order() == 1 {
        return Ok(0);
    }
    let maxes = max_elementary_abelians(&s, p, caps)?;
    let m = maxes[0].order();
    Ok(m.ilog(p) as u32)
}

/// Thompson-subgroup data for a Sylow p-subgroup.
pub struct ThompsonData {
    pub s: Subgroup,
    /// Generated by all abelian subgroups of maximal order.
    pub j: Subgroup,
    /// Generated by all elementary abelian subgroups of maximal order.
    pub je: Subgroup,
    pub zj: Subgroup,
    pub zje: Subgroup,
    pub omega_zs: Subgroup,
    pub omega_zje: Subgroup,
    pub max_abelian_order: u64,
    pub max_elem_abelian_order: u64,
}

/// All abelian subgroups of maximal order, by exhaustive extension inside
/// centralizers with a dominance bound.
fn max_abelian_subgroups_local(local: &GroupHandle) -> Vec<Subgroup> {
    local.ensure_table();
    let n = local.order() as u32;
    let centralizer_size = |elems: &[u32]| -> u64 {
        (0..n)
            .filter(|&g| {
                elems
                    .iter()
                    .all(|&e| local.mul_idx(g, e) == local.mul_idx(e, g))
            })
            .count() as u64
    };

    let mut best: u64 = 1;
    let mut seen: HashSet<Arc<Vec<u32>>> = HashSet::new();
    let mut all: Vec<Arc<Vec<u32>>> = Vec::new();
    let trivial: Arc<Vec<u32>> = Arc::new(vec![0]);
    seen.insert(trivial.clone());
    all.push(trivial.clone());
    let mut stack = vec![trivial];
    while let Some(elems) = stack.pop() {
        if elems.len() as u64 > best {
            best = elems.len() as u64;
        }
        // abelian overgroups live inside the centralizer of the current set
        let cents: Vec<u32> = (0..n)
            .filter(|&g| {
                elems
                    .iter()
                    .all(|&e| local.mul_idx(g, e) == local.mul_idx(e, g))
            })
            .collect();
        if (cents.len() as u64) < best {
            continue;
        }
        for &x in &cents {
            if elems.binary_search(&x).is_ok() {
                continue;
            }
            // <elems, x> is abelian iff x also commutes with itself-generated
            // powers, which it does; close the set
            let mut gens: Vec<u32> = vec![x];
            gens.extend(elems.iter().copied());
            let bigger = Arc::new(crate::subgroup::close_indices(local, &gens));
            if bigger.len() == elems.len() {
                continue;
            }
            if centralizer_size(&bigger) < bigger.len() as u64 {
                continue; // not abelian (cannot happen: kept for clarity)
            }
            if seen.insert(bigger.clone()) {
                all.push(bigger.clone());
                stack.push(bigger);
            }
        }
    }
    let mut result: Vec<Subgroup> = all
        .into_iter()
        .filter(|e| e.len() as u64 == best)
        .map(|e| Subgroup::from_sorted_elements(local, e.to_vec()))
        .collect();
    result.sort();
    result
}

pub fn thompson(s: &Subgroup, p: u64, caps: &Caps) -> Result<ThompsonData> {
    check_p_group(s, p)?;
    if s.order() > caps.abelian_search {
        return Err(Error::infeasible(
            "abelian subgroup search",
            s.order(),
            caps.abelian_search,
        ));
    }
    let local = s.to_group();
    local.ensure_table();

    let max_abelians = max_abelian_subgroups_local(&local);
    let max_abelian_order = max_abelians[0].order();
    let mut j_gens: Vec<u32> = Vec::new();
    for a in &max_abelians {
        j_gens.extend(a.elems().iter().copied());
    }
    j_gens.sort_unstable();
    j_gens.dedup();
    let j_local = Subgroup::generated(&local, &j_gens);

    let s_in_s = local.full_subgroup();
    let max_elem = max_elementary_abelians(&s_in_s, p, caps)?;
    let max_elem_abelian_order = max_elem[0].order();
    let mut je_gens: Vec<u32> = Vec::new();
    for a in &max_elem {
        je_gens.extend(a.elems().iter().copied());
    }
    je_gens.sort_unstable();
    je_gens.dedup();
    let je_local = Subgroup::generated(&local, &je_gens);

    let center_of = |sub: &Subgroup| -> Subgroup {
        let members: Vec<u32> = sub
            .elems()
            .iter()
            .copied()
            .filter(|&x| {
                sub.gen_idxs()
                    .iter()
                    .all(|&g| local.mul_idx(x, g) == local.mul_idx(g, x))
                    && sub
                        .elems()
                        .iter()
                        .all(|&e| local.mul_idx(x, e) == local.mul_idx(e, x))
            })
            .collect();
        Subgroup::from_sorted_elements(&local, members)
    };

    let zj_local = center_of(&j_local);
    let zje_local = center_of(&je_local);
    let zs_local = local.center();
    let omega_zs_local = omega1(&zs_local, p)?;
    let omega_zje_local = omega1(&zje_local, p)?;

    let lift = |sub: &Subgroup| s.lift(sub);
    let data = ThompsonData {
        s: s.clone(),
        j: lift(&j_local),
        je: lift(&je_local),
        zj: lift(&zj_local),
        zje: lift(&zje_local),
        omega_zs: lift(&omega_zs_local),
        omega_zje: lift(&omega_zje_local),
        max_abelian_order,
        max_elem_abelian_order,
    };
    if !data.omega_zs.is_subgroup_of(&data.omega_zje) {
        return Err(Error::Internal(
            "Omega(Z(S)) is not inside Omega(Z(Je(S)))".into(),
        ));
    }
    Ok(data)
}

/// Frattini subgroup of a p-group: generated by all commutators and all p-th
/// powers.
pub fn frattini(p_sub: &Subgroup, p: u64) -> Result<Subgroup> {
    check_p_group(p_sub, p)?;
    let local = p_sub.to_group();
    local.ensure_table();
    let n = local.order() as u32;
    let mut gens: Vec<u32> = Vec::new();
    for x in 0..n {
        let xp = power_idx(&local, x, p);
        if xp != 0 {
            gens.push(xp);
        }
        for y in (x + 1)..n {
            let c = local.comm_idx(x, y);
            if c != 0 {
                gens.push(c);
            }
        }
    }
    gens.sort_unstable();
    gens.dedup();
    let phi_local = Subgroup::generated(&local, &gens);
    Ok(p_sub.lift(&phi_local))
}

fn power_idx(g: &GroupHandle, x: u32, e: u64) -> u32 {
    let mut acc = g.identity_idx();
    for _ in 0..e {
        acc = g.mul_idx(acc, x);
    }
    acc
}

/// Maximal subgroups of a p-group: preimages of the hyperplanes of P/Φ(P).
pub fn maximal_subgroups_pgroup(p_sub: &Subgroup, p: u64, caps: &Caps) -> Result<Vec<Subgroup>> {
    check_p_group(p_sub, p)?;
    if p_sub.order() == 1 {
        return Ok(Vec::new());
    }
    let phi = frattini(p_sub, p)?;
    let local = p_sub.to_group();
    local.ensure_table();
    let phi_local_elems: Vec<u32> = phi
        .elems()
        .iter()
        .map(|&i| p_sub.parent_to_local(i).expect("phi inside P"))
        .collect();
    let phi_local = Subgroup::from_sorted_elements(&local, phi_local_elems);
    let (quot, proj) = local.quotient(&phi_local, caps)?;

    // coordinates on the elementary abelian quotient
    let qn = quot.order() as u32;
    let mut basis: Vec<u32> = Vec::new();
    let mut span: Vec<u32> = vec![0];
    for x in 1..qn {
        if span.binary_search(&x).is_ok() {
            continue;
        }
        basis.push(x);
        let mut bigger = Vec::with_capacity(span.len() * p as usize);
        for &e in &span {
            let mut xi = e;
            for _ in 0..p {
                bigger.push(xi);
                xi = quot.mul_idx(xi, x);
            }
        }
        bigger.sort_unstable();
        bigger.dedup();
        span = bigger;
        if span.len() as u64 == quot.order() {
            break;
        }
    }
    let d = basis.len();
    debug_assert_eq!(p.pow(d as u32), quot.order());
    // coordinates of every quotient element
    let mut coords = vec![vec![0u64; d]; qn as usize];
    {
        let mut elems = vec![quot.identity_idx()];
        let mut vecs = vec![vec![0u64; d]];
        for (bi, &b) in basis.iter().enumerate() {
            let mut new_elems = Vec::new();
            let mut new_vecs = Vec::new();
            for (e, v) in elems.iter().zip(&vecs) {
                let mut x = *e;
                for k in 0..p {
                    let mut vv = v.clone();
                    vv[bi] = k;
                    new_elems.push(x);
                    new_vecs.push(vv);
                    x = quot.mul_idx(x, b);
                }
            }
            elems = new_elems;
            vecs = new_vecs;
        }
        for (e, v) in elems.iter().zip(vecs) {
            coords[*e as usize] = v;
        }
    }

    // functionals with leading coefficient 1, one per hyperplane
    let mut result: Vec<Subgroup> = Vec::new();
    let mut lambda = vec![0u64; d];
    loop {
        // next nonzero functional in lexicographic order
        let mut i = d;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            lambda[i] += 1;
            if lambda[i] < p {
                break;
            }
            lambda[i] = 0;
        }
        if lambda.iter().all(|&x| x == 0) {
            break;
        }
        if lambda[lambda.iter().position(|&x| x != 0).unwrap()] != 1 {
            continue;
        }
        let members_local: Vec<u32> = (0..local.order() as u32)
            .filter(|&x| {
                let q = proj.apply_idx(x);
                coords[q as usize]
                    .iter()
                    .zip(&lambda)
                    .map(|(&c, &l)| c * l)
                    .sum::<u64>()
                    % p
                    == 0
            })
            .collect();
        result.push(p_sub.lift(&Subgroup::from_sorted_elements(&local, members_local)));
    }
    result.sort();
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn sylow_examples() {
        let caps = Caps::default();
        let a5 = corpus::alt(5, &caps).unwrap();
        let s2 = sylow_subgroup(&a5, 2).unwrap();
        assert_eq!(s2.order(), 4);
        assert_eq!(s2.to_group().exponent(), 2);
        let s5 = sylow_subgroup(&a5, 5).unwrap();
        assert_eq!(s5.order(), 5);
        let c6 = crate::constructors::cyclic(6, &caps).unwrap();
        assert_eq!(sylow_subgroup(&c6, 5).unwrap().order(), 1);
    }

    #[test]
    fn sylow3_of_qd3_is_extraspecial() {
        let caps = Caps::default();
        let qd3 = crate::constructors::qd(3, &caps).unwrap();
        let s = sylow_subgroup(&qd3, 3).unwrap();
        assert_eq!(s.order(), 27);
        let sh = s.to_group();
        assert!(!sh.is_abelian());
        assert_eq!(sh.exponent(), 3);
        // maximal elementary abelians all have order 9, and the Thompson
        // sandwich endpoints are nested
        let maxes = max_elementary_abelians(&s, 3, &caps).unwrap();
        assert!(maxes.iter().all(|e| e.order() == 9));
        let td = thompson(&s, 3, &caps).unwrap();
        assert_eq!(td.omega_zs.order(), 3);
        assert!(td.omega_zs.is_subgroup_of(&td.omega_zje));
        assert_eq!(td.je.order(), 27);
    }

    #[test]
    fn omega_of_cyclic_groups() {
        let caps = Caps::default();
        let c9 = crate::constructors::cyclic(9, &caps).unwrap();
        let full = c9.full_subgroup();
        let om = omega1(&full, 3).unwrap();
        assert_eq!(om.order(), 3);
        let c3c9 = GroupHandle::direct_product(
            &crate::constructors::cyclic(3, &caps).unwrap(),
            &c9,
            &caps,
        )
        .unwrap();
        assert_eq!(omega1(&c3c9.full_subgroup(), 3).unwrap().order(), 9);
        let v25 = crate::constructors::elem_abelian(5, 2, &caps).unwrap();
        assert_eq!(omega1(&v25.full_subgroup(), 5).unwrap().order(), 25);
    }

    #[test]
    fn max_elem_abelians_of_q8() {
        let caps = Caps::default();
        let q8 = crate::constructors::quaternion8(&caps).unwrap();
        let full = q8.full_subgroup();
        let maxes = max_elementary_abelians(&full, 2, &caps).unwrap();
        assert_eq!(maxes.len(), 1);
        assert_eq!(maxes[0].order(), 2);
    }

    #[test]
    fn p_rank_examples() {
        let caps = Caps::default();
        let qd3 = crate::constructors::qd(3, &caps).unwrap();
        assert_eq!(p_rank(&qd3, 3, &caps).unwrap(), 2);
        let v4 = crate::constructors::elem_abelian(2, 2, &caps).unwrap();
        assert_eq!(p_rank(&v4, 2, &caps).unwrap(), 2);
        let c6 = crate::constructors::cyclic(6, &caps).unwrap();
        assert_eq!(p_rank(&c6, 5, &caps).unwrap(), 0);
    }

    #[test]
    fn thompson_of_q8() {
        let caps = Caps::default();
        let q8 = crate::constructors::quaternion8(&caps).unwrap();
        let full = q8.full_subgroup();
        let td = thompson(&full, 2, &caps).unwrap();
        // the three cyclic order-4 subgroups are the maximal abelians
        assert_eq!(td.max_abelian_order, 4);
        assert_eq!(td.j.order(), 8);
        assert_eq!(td.zj.order(), 2);
        assert_eq!(td.max_elem_abelian_order, 2);
        assert_eq!(td.je.order(), 2);
        assert!(td.omega_zs.is_subgroup_of(&td.omega_zje));
    }

    #[test]
    fn thompson_of_elementary_abelian() {
        let caps = Caps::default();
        let v9 = crate::constructors::elem_abelian(3, 2, &caps).unwrap();
        let td = thompson(&v9.full_subgroup(), 3, &caps).unwrap();
        assert_eq!(td.j.order(), 9);
        assert_eq!(td.je.order(), 9);
        assert_eq!(td.zj.order(), 9);
        assert_eq!(td.omega_zs.order(), 9);
    }

    #[test]
    fn frattini_oracle_small() {
        // Frattini via commutators and p-th powers equals the intersection of
        // all maximal subgroups.
        let caps = Caps::default();
        for (g, p) in [
            (crate::constructors::quaternion8(&caps).unwrap(), 2u64),
            (crate::constructors::extraspecial_exp_p(3, &caps).unwrap(), 3),
            (crate::constructors::cyclic(8, &caps).unwrap(), 2),
            (crate::constructors::metacyclic_m(3, 3, &caps).unwrap(), 3),
        ] {
            let full = g.full_subgroup();
            let phi = frattini(&full, p).unwrap();
            let maxes = maximal_subgroups_pgroup(&full, p, &caps).unwrap();
            let mut inter = full.clone();
            for m in &maxes {
                inter = inter.intersection(m);
            }
            assert_eq!(phi.elems(), inter.elems(), "order {}", g.order());
        }
    }

    #[test]
    fn frattini_of_elem_abelian_is_trivial() {
        let caps = Caps::default();
        let v = crate::constructors::elem_abelian(5, 2, &caps).unwrap();
        assert_eq!(frattini(&v.full_subgroup(), 5).unwrap().order(), 1);
        let maxes = maximal_subgroups_pgroup(&v.full_subgroup(), 5, &caps).unwrap();
        assert_eq!(maxes.len(), 6);
    }
}
