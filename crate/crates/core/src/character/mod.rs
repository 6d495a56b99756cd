//! Class functions and characters with exact cyclotomic values: linear
//! characters of abelian groups, induction, restriction, inner products,
//! p-effectiveness and fusion-respect, and the induced-character pipeline
//! built on a sandwich witness.

pub mod cyclotomic;

use num::{BigInt, One};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::fusion::{sandwich_witnesses, SandwichWitness};
use crate::group::GroupHandle;
use crate::pgroup::{max_elementary_abelians, sylow_subgroup};
use crate::sections::involves_qd;
use crate::subgroup::Subgroup;

pub use cyclotomic::{Cyclotomic, Rational};

/// A conjugation-invariant function from a group to a cyclotomic field,
/// stored by one value per conjugacy class.
#[derive(Clone)]
pub struct ClassFunction {
    group: GroupHandle,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn from_class_values(group: &GroupHandle, values: Vec<Cyclotomic>) -> Result<ClassFunction> {
        if values.len() != group.classes().classes.len() {
            return Err(Error::Internal("one value per conjugacy class required".into()));
        }
        Ok(ClassFunction {
            group: group.clone(),
            values,
        })
    }

    /// Builds from per-element values, validating class constancy.
    pub fn from_element_values(group: &GroupHandle, values: Vec<Cyclotomic>) -> Result<ClassFunction> {
        if values.len() as u64 != group.order() {
            return Err(Error::Internal("one value per element required".into()));
        }
        let classes = group.classes();
        let mut per_class = Vec::with_capacity(classes.classes.len());
        for class in &classes.classes {
            let v = &values[class[0] as usize];
            for &e in class.iter() {
                if &values[e as usize] != v {
                    return Err(Error::Internal("values not constant on a class".into()));
                }
            }
            per_class.push(v.clone());
        }
        Ok(ClassFunction {
            group: group.clone(),
            values: per_class,
        })
    }

    pub fn trivial(group: &GroupHandle) -> ClassFunction {
        let count = group.classes().classes.len();
        ClassFunction {
            group: group.clone(),
            values: vec![Cyclotomic::one(1); count],
        }
    }

    pub fn group(&self) -> &GroupHandle {
        &self.group
    }

    pub fn class_values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_at_idx(&self, elem: u32) -> &Cyclotomic {
        let cls = self.group.classes().class_of[elem as usize];
        &self.values[cls as usize]
    }

    /// Value at the identity.
    pub fn degree(&self) -> Cyclotomic {
        self.value_at_idx(self.group.identity_idx()).clone()
    }

    pub fn degree_rational(&self) -> Result<Rational> {
        self.degree().expect_rational()
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(ClassFunction {
            group: self.group.clone(),
            values,
        })
    }

    fn check_same_group(&self, other: &ClassFunction) -> Result<()> {
        if !std::sync::Arc::ptr_eq(&self.group.0, &other.group.0) {
            return Err(Error::Internal("class functions on different groups".into()));
        }
        Ok(())
    }

    /// Pointwise equality of two class functions over the same element set
    /// (the groups may be distinct handles with equal element tables).
    pub fn equal_on_elements(&self, other: &ClassFunction) -> bool {
        if self.group.order() != other.group.order() {
            return false;
        }
        (0..self.group.order() as u32).all(|i| {
            self.group.perm(i) == other.group.perm(i) && self.value_at_idx(i) == other.value_at_idx(i)
        })
    }
}

/// `(1/|G|) * sum_g a(g) * conj(b(g))`, evaluated classwise. The result of
/// pairing two characters is a nonnegative rational integer; a non-rational
/// result is an internal defect.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Rational> {
    a.check_same_group(b)?;
    let classes = a.group.classes();
    let mut sum = Cyclotomic::zero(1);
    for (i, class) in classes.classes.iter().enumerate() {
        let size = Rational::from_integer(BigInt::from(class.len()));
        let term = a.values[i].mul(&b.values[i].conj()).scale(&size);
        sum = sum.add(&term);
    }
    let total = sum.expect_rational()?;
    Ok(total / Rational::from_integer(BigInt::from(a.group.order())))
}

/// All `|Z|` linear characters of an abelian group, ordered by exponent
/// tuple with respect to a deterministic basis; index 0 is trivial. Each
/// character is validated to be multiplicative.
pub fn linear_characters(z: &GroupHandle) -> Result<Vec<ClassFunction>> {
    if !z.is_abelian() {
        return Err(Error::NotAbelian);
    }
    z.elements()?;
    z.ensure_table();
    let n = z.order() as u32;

    // basis: scan by descending element order, keeping elements whose cyclic
    // span meets the current span trivially
    let orders = z.element_orders();
    let mut by_order: Vec<u32> = (1..n).collect();
    by_order.sort_by_key(|&i| (std::cmp::Reverse(orders[i as usize]), i));
    let mut basis: Vec<u32> = Vec::new();
    let mut span: Vec<u32> = vec![z.identity_idx()];
    for cand in by_order {
        if span.len() as u64 == z.order() {
            break;
        }
        let mut gens = basis.clone();
        gens.push(cand);
        let bigger = crate::subgroup::close_indices(z, &gens);
        if bigger.len() as u64 == span.len() as u64 * orders[cand as usize] {
            basis.push(cand);
            span = bigger;
        }
    }
    if span.len() as u64 != z.order() {
        return Err(Error::Internal("abelian basis construction failed".into()));
    }
    let dims: Vec<u64> = basis.iter().map(|&b| orders[b as usize]).collect();
    let exponent = dims.iter().fold(1u64, |acc, &d| num::integer::lcm(acc, d));

    // exponent tuple of every element
    let mut tuple_of: Vec<Vec<u64>> = vec![Vec::new(); n as usize];
    {
        let mut elems = vec![z.identity_idx()];
        let mut tuples = vec![vec![0u64; basis.len()]];
        for (bi, &b) in basis.iter().enumerate() {
            let mut new_elems = Vec::new();
            let mut new_tuples = Vec::new();
            for (e, t) in elems.iter().zip(&tuples) {
                let mut x = *e;
                for k in 0..dims[bi] {
                    let mut tt = t.clone();
                    tt[bi] = k;
                    new_elems.push(x);
                    new_tuples.push(tt);
                    x = z.mul_idx(x, b);
                }
            }
            elems = new_elems;
            tuples = new_tuples;
        }
        for (e, t) in elems.iter().zip(tuples) {
            tuple_of[*e as usize] = t;
        }
    }

    // characters indexed by their own tuple, in mixed-radix ascending order
    let mut chars = Vec::with_capacity(n as usize);
    let mut ctuple = vec![0u64; basis.len()];
    loop {
        let values: Vec<Cyclotomic> = (0..n)
            .map(|e| {
                let expo: u64 = tuple_of[e as usize]
                    .iter()
                    .zip(&ctuple)
                    .zip(&dims)
                    .map(|((&a, &c), &d)| a * c % exponent * (exponent / d) % exponent)
                    .sum::<u64>()
                    % exponent;
                Cyclotomic::root_of_unity(exponent, expo)
            })
            .collect();
        chars.push(ClassFunction::from_element_values(z, values)?);

        // multiplicativity validation on generator steps
        let chi = chars.last().unwrap();
        for &b in &basis {
            for x in 0..n {
                let prod = chi.value_at_idx(x).mul(chi.value_at_idx(b));
                if prod != *chi.value_at_idx(z.mul_idx(x, b)) {
                    return Err(Error::Internal("linear character not multiplicative".into()));
                }
            }
        }

        // next tuple
        let mut i = basis.len();
        loop {
            if i == 0 {
                return Ok(chars);
            }
            i -= 1;
            ctuple[i] += 1;
            if ctuple[i] < dims[i] {
                break;
            }
            ctuple[i] = 0;
        }
        if ctuple.iter().all(|&c| c == 0) {
            return Ok(chars);
        }
    }
}

fn subgroup_matches_handle(sub: &Subgroup, handle: &GroupHandle) -> bool {
    sub.order() == handle.order()
        && (0..handle.order() as u32).all(|i| sub.parent().perm(sub.local_to_parent(i)) == handle.perm(i))
}

/// The induced class function `Ind_Z^N rho`: at `g`,
/// `(1/|Z|) * sum over x in N with x g x^-1 in Z of rho(x g x^-1)`.
pub fn induce(rho: &ClassFunction, z_in_n: &Subgroup) -> Result<ClassFunction> {
    let n = z_in_n.parent();
    if !subgroup_matches_handle(z_in_n, rho.group()) {
        return Err(Error::Internal("character domain differs from the subgroup".into()));
    }
    n.elements()?;
    let classes = n.classes();
    let z_order = Rational::from_integer(BigInt::from(z_in_n.order()));
    let mut values = Vec::with_capacity(classes.classes.len());
    for &rep in &classes.reps {
        let mut sum = Cyclotomic::zero(1);
        for x in 0..n.order() as u32 {
            let t = n.mul_idx(n.mul_idx(x, rep), n.inv_idx(x));
            if let Some(local) = z_in_n.parent_to_local(t) {
                sum = sum.add(rho.value_at_idx(local));
            }
        }
        values.push(sum.scale(&(Rational::one() / &z_order)));
    }
    ClassFunction::from_class_values(n, values)
}

/// Restriction of a class function to a subgroup, as a class function on the
/// subgroup's standalone handle.
pub fn restrict(chi: &ClassFunction, e: &Subgroup) -> Result<ClassFunction> {
    if !std::sync::Arc::ptr_eq(&e.parent().0, &chi.group().0) {
        return Err(Error::Internal("restriction subgroup not in the character's group".into()));
    }
    let eh = e.to_group();
    let values: Vec<Cyclotomic> = (0..eh.order() as u32)
        .map(|local| chi.value_at_idx(e.local_to_parent(local)).clone())
        .collect();
    ClassFunction::from_element_values(&eh, values)
}

/// Outcome of a p-effectiveness check: the first violating maximal-rank
/// elementary abelian subgroup, if any.
pub struct PEffectiveness {
    pub effective: bool,
    pub violating: Option<Subgroup>,
}

/// A character of `H` is p-effective if its restriction to every elementary
/// abelian p-subgroup `E` of maximal rank satisfies `[chi|_E, 1_E] = 0`.
/// The subgroups checked are the maximal-order elementary abelians of a
/// Sylow p-subgroup together with all their conjugates.
pub fn is_p_effective(chi: &ClassFunction, p: u64, caps: &Caps) -> Result<PEffectiveness> {
    let h = chi.group();
    let s = sylow_subgroup(h, p)?;
    let maxes = max_elementary_abelians(&s, p, caps)?;
    // close under conjugation
    let mut seen: std::collections::HashSet<std::sync::Arc<Vec<u32>>> =
        std::collections::HashSet::new();
    let mut queue: Vec<Subgroup> = Vec::new();
    for e in maxes {
        if seen.insert(e.elems_arc()) {
            queue.push(e);
        }
    }
    let gen_idxs = h.gen_idxs();
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
    for e in queue {
        let mut sum = Cyclotomic::zero(1);
        for &x in e.elems() {
            sum = sum.add(chi.value_at_idx(x));
        }
        if !sum.is_zero() {
            return Ok(PEffectiveness {
                effective: false,
                violating: Some(e),
            });
        }
    }
    Ok(PEffectiveness {
        effective: true,
        violating: None,
    })
}

/// Outcome of a fusion-respect check on a character of `S`.
pub struct FusionRespect {
    pub respects: bool,
    /// `(x, g)` with `g x g^-1` in `S` but different character value.
    pub violating: Option<(u32, u32)>,
}

/// `chi` (a character of `s.to_group()`) respects fusion in `G = s.parent()`
/// if `chi(x) = chi(g x g^-1)` whenever both sides are defined.
pub fn respects_fusion(chi: &ClassFunction, s: &Subgroup) -> Result<FusionRespect> {
    if !subgroup_matches_handle(s, chi.group()) {
        return Err(Error::Internal("character domain differs from the subgroup".into()));
    }
    let g = s.parent();
    g.elements()?;
    for &x in s.elems() {
        let x_local = s.parent_to_local(x).expect("element of S");
        for conj in 0..g.order() as u32 {
            // g x g^-1 = x^(g^-1)
            let t = g.conj_idx(x, g.inv_idx(conj));
            if let Some(t_local) = s.parent_to_local(t) {
                if chi.value_at_idx(x_local) != chi.value_at_idx(t_local) {
                    return Ok(FusionRespect {
                        respects: false,
                        violating: Some((x, conj)),
                    });
                }
            }
        }
    }
    Ok(FusionRespect {
        respects: true,
        violating: None,
    })
}

/// The full induced-character pipeline built on the first sandwich witness:
/// `W`, `N = N_G(W)`, a nontrivial linear `rho` of `W`, `V = Ind_W^N rho`,
/// and `chi_S = Res_S V`, together with the two verdicts.
pub struct PipelineData {
    pub witness: SandwichWitness,
    pub n: Subgroup,
    pub rho: ClassFunction,
    pub v: ClassFunction,
    pub chi_s: ClassFunction,
    pub s: Subgroup,
    pub p_effective: bool,
    pub violating_e: Option<Subgroup>,
    pub respects: bool,
    pub violating_pair: Option<(u32, u32)>,
    /// True when `G` was verified not to involve Qd(p); `None` when that
    /// check was infeasible under the caps.
    pub hypothesis_qd_free: Option<bool>,
}

pub fn character_pipeline(g: &GroupHandle, p: u64, caps: &Caps) -> Result<PipelineData> {
    let hypothesis_qd_free = match involves_qd(g, p, caps) {
        Ok(w) => Some(w.is_none()),
        Err(ref e) if e.is_infeasible() => None,
        Err(e) => return Err(e),
    };
    let mut wits = sandwich_witnesses(g, p, caps)?;
    if wits.is_empty() {
        return Err(Error::Internal(
            "no sandwich witness found; on a Qd-free input this is a defect".into(),
        ));
    }
    let witness = wits.remove(0);
    let s = sylow_subgroup(g, p)?;
    let n = witness.normalizer.clone();
    let w = &witness.w;

    let wh = w.to_group();
    let chars = linear_characters(&wh)?;
    if chars.len() < 2 {
        return Err(Error::Internal("W is trivial; no nontrivial linear character".into()));
    }
    let rho = chars[1].clone();

    // W and S as subgroups of N's standalone handle
    let nh = n.to_group();
    let to_local = |sub: &Subgroup| -> Result<Subgroup> {
        let elems: Vec<u32> = sub
            .elems()
            .iter()
            .map(|&x| {
                n.parent_to_local(x)
                    .ok_or_else(|| Error::Internal("subgroup not inside N".into()))
            })
            .collect::<Result<_>>()?;
        Ok(Subgroup::from_sorted_elements(&nh, elems))
    };
    let w_in_n = to_local(w)?;
    let s_in_n = to_local(&s)?;

    let v = induce(&rho, &w_in_n)?;
    let chi_s = restrict(&v, &s_in_n)?;

    let eff = is_p_effective(&chi_s, p, caps)?;
    let resp = respects_fusion(&chi_s, &s)?;

    Ok(PipelineData {
        witness,
        n,
        rho,
        v,
        chi_s,
        s,
        p_effective: eff.effective,
        violating_e: eff.violating,
        respects: resp.respects,
        violating_pair: resp.violating,
        hypothesis_qd_free,
    })
}
