//! Finite permutation groups with cached element tables.
//!
//! A [`GroupHandle`] is a cheap-to-clone immutable handle. Elements are kept in
//! ascending lexicographic order of their image tables whenever the order is
//! within the enumeration cap; that ordering is the canonical ordering used by
//! every deterministic search and witness selection in this crate. The
//! identity always has index 0.
//!
//! Conventions: products compose left to right, `x^g = g^-1 x g`, and
//! `[x, y] = x^-1 y^-1 x y`.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::bsgs::Bsgs;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::hom::GroupHom;
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// Orders up to this bound get a full multiplication table on demand.
pub(crate) const CAYLEY_CAP: u64 = 2_048;

#[derive(Clone)]
pub struct GroupHandle(pub(crate) Arc<GroupCore>);

pub struct GroupCore {
    degree: usize,
    gens: Vec<Perm>,
    order: u64,
    bsgs: Option<Bsgs>,
    /// Sorted element table; present iff `order <= caps.enumeration`.
    elements: Option<Arc<Vec<Perm>>>,
    tags: BTreeMap<String, Perm>,
    inverses: OnceLock<Vec<u32>>,
    cayley: OnceLock<Option<Vec<u32>>>,
    classes: OnceLock<Arc<Classes>>,
    element_orders: OnceLock<Arc<Vec<u64>>>,
    pub(crate) lattice: OnceLock<Arc<Vec<Subgroup>>>,
    pub(crate) automorphisms: OnceLock<Arc<Vec<GroupHom>>>,
}

/// Conjugacy class data: classes are indexed in order of their minimal element.
pub struct Classes {
    pub class_of: Vec<u32>,
    pub classes: Vec<Vec<u32>>,
    pub reps: Vec<u32>,
}

impl std::fmt::Debug for GroupHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupHandle(degree={}, order={})", self.degree(), self.order())
    }
}

impl GroupHandle {
    /// Builds a group from generators, running Schreier–Sims for the order and
    /// enumerating all elements when the order is within `caps.enumeration`.
    pub fn from_generators(degree: usize, gens: Vec<Perm>, caps: &Caps) -> Result<GroupHandle> {
        if degree == 0 {
            return Err(Error::BadPerm("degree must be at least 1".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let mut gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        gens.dedup();
        let bsgs = Bsgs::new(degree, &gens);
        let order = bsgs.order();
        if order > caps.hard {
            return Err(Error::TooLarge { cap: caps.hard });
        }
        let elements = if order <= caps.enumeration {
            Some(Arc::new(enumerate_elements(degree, &gens, order)))
        } else {
            None
        };
        Ok(GroupHandle(Arc::new(GroupCore {
            degree,
            gens,
            order,
            bsgs: Some(bsgs),
            elements,
            tags: BTreeMap::new(),
            inverses: OnceLock::new(),
            cayley: OnceLock::new(),
            classes: OnceLock::new(),
            element_orders: OnceLock::new(),
            lattice: OnceLock::new(),
            automorphisms: OnceLock::new(),
        })))
    }

    pub fn trivial(degree: usize) -> GroupHandle {
        GroupHandle::from_generators(degree, Vec::new(), &Caps::default()).expect("trivial group")
    }

    /// Builds a handle from a known sorted element list (used when a subgroup
    /// is promoted to a standalone group; no Schreier–Sims run is needed).
    pub(crate) fn from_sorted_elements(
        degree: usize,
        gens: Vec<Perm>,
        elements: Arc<Vec<Perm>>,
    ) -> GroupHandle {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let order = elements.len() as u64;
        GroupHandle(Arc::new(GroupCore {
            degree,
            gens,
            order,
            bsgs: None,
            elements: Some(elements),
            tags: BTreeMap::new(),
            inverses: OnceLock::new(),
            cayley: OnceLock::new(),
            classes: OnceLock::new(),
            element_orders: OnceLock::new(),
            lattice: OnceLock::new(),
            automorphisms: OnceLock::new(),
        }))
    }

    /// Returns a handle sharing this group's data with tag names attached.
    pub fn with_tags(&self, tags: BTreeMap<String, Perm>) -> GroupHandle {
        let core = &self.0;
        GroupHandle(Arc::new(GroupCore {
            degree: core.degree,
            gens: core.gens.clone(),
            order: core.order,
            bsgs: None,
            elements: core.elements.clone(),
            tags,
            inverses: OnceLock::new(),
            cayley: OnceLock::new(),
            classes: OnceLock::new(),
            element_orders: OnceLock::new(),
            lattice: OnceLock::new(),
            automorphisms: OnceLock::new(),
        }))
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn gens(&self) -> &[Perm] {
        &self.0.gens
    }

    pub fn tags(&self) -> &BTreeMap<String, Perm> {
        &self.0.tags
    }

    pub fn tag(&self, name: &str) -> Option<&Perm> {
        self.0.tags.get(name)
    }

    /// The tagged element, as an element index. Panics when missing:
    /// constructor tags are a build-time contract.
    pub fn tag_idx(&self, name: &str) -> u32 {
        let p = self.tag(name).unwrap_or_else(|| panic!("missing tag {name}"));
        self.index_of(p).unwrap_or_else(|| panic!("tag {name} not in element table"))
    }

    pub fn is_enumerated(&self) -> bool {
        self.0.elements.is_some()
    }

    /// The sorted element table.
    pub fn elements(&self) -> Result<&[Perm]> {
        self.0
            .elements
            .as_deref()
            .map(|v| v.as_slice())
            .ok_or_else(|| Error::infeasible("element enumeration", self.order(), 0))
    }

    pub(crate) fn elements_arc(&self) -> Result<Arc<Vec<Perm>>> {
        self.0
            .elements
            .clone()
            .ok_or_else(|| Error::infeasible("element enumeration", self.order(), 0))
    }

    pub fn perm(&self, idx: u32) -> &Perm {
        &self.0.elements.as_ref().expect("enumerated group")[idx as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        let elems = self.0.elements.as_ref()?;
        elems.binary_search(p).ok().map(|i| i as u32)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree() {
            return false;
        }
        if let Some(elems) = self.0.elements.as_ref() {
            elems.binary_search(p).is_ok()
        } else {
            self.0.bsgs.as_ref().expect("bsgs or elements").contains(p)
        }
    }

    pub fn identity_idx(&self) -> u32 {
        0
    }

    /// Generator indices into the element table.
    pub fn gen_idxs(&self) -> Vec<u32> {
        self.gens()
            .iter()
            .map(|g| self.index_of(g).expect("generator in table"))
            .collect()
    }

    /// Index product `i * j` (apply `i` first).
    pub fn mul_idx(&self, i: u32, j: u32) -> u32 {
        if let Some(Some(table)) = self.0.cayley.get() {
            return table[i as usize * self.order() as usize + j as usize];
        }
        let p = self.perm(i).mul(self.perm(j));
        self.index_of(&p).expect("product stays in group")
    }

    pub fn inv_idx(&self, i: u32) -> u32 {
        let inv = self.0.inverses.get_or_init(|| {
            let elems = self.0.elements.as_ref().expect("enumerated group");
            elems
                .iter()
                .map(|p| {
                    elems
                        .binary_search(&p.inverse())
                        .expect("inverse stays in group") as u32
                })
                .collect()
        });
        inv[i as usize]
    }

    /// `g^-1 * x * g` on indices.
    pub fn conj_idx(&self, x: u32, g: u32) -> u32 {
        self.mul_idx(self.inv_idx(g), self.mul_idx(x, g))
    }

    /// `[x, y] = x^-1 y^-1 x y` on indices.
    pub fn comm_idx(&self, x: u32, y: u32) -> u32 {
        let xi = self.inv_idx(x);
        let yi = self.inv_idx(y);
        self.mul_idx(self.mul_idx(xi, yi), self.mul_idx(x, y))
    }

    /// Builds the multiplication table when the order is small enough.
    /// Heavy element-arithmetic passes call this once up front.
    pub fn ensure_table(&self) {
        self.0.cayley.get_or_init(|| {
            if self.order() > CAYLEY_CAP || !self.is_enumerated() {
                return None;
            }
            let elems = self.0.elements.as_ref().unwrap();
            let n = elems.len();
            let mut table = vec![0u32; n * n];
            for (i, p) in elems.iter().enumerate() {
                for (j, q) in elems.iter().enumerate() {
                    let r = p.mul(q);
                    table[i * n + j] = elems.binary_search(&r).expect("closed") as u32;
                }
            }
            Some(table)
        });
    }

    pub fn element_orders(&self) -> Arc<Vec<u64>> {
        self.0
            .element_orders
            .get_or_init(|| {
                let elems = self.0.elements.as_ref().expect("enumerated group");
                Arc::new(elems.iter().map(|p| p.order()).collect())
            })
            .clone()
    }

    pub fn element_order(&self, idx: u32) -> u64 {
        self.element_orders()[idx as usize]
    }

    pub fn exponent(&self) -> u64 {
        self.element_orders()
            .iter()
            .fold(1u64, |acc, &o| num::integer::lcm(acc, o))
    }

    /// Histogram of element orders, a cheap isomorphism invariant.
    pub fn order_histogram(&self) -> BTreeMap<u64, u64> {
        let mut hist = BTreeMap::new();
        for &o in self.element_orders().iter() {
            *hist.entry(o).or_insert(0) += 1;
        }
        hist
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.gens();
        gens.iter()
            .enumerate()
            .all(|(i, g)| gens[i + 1..].iter().all(|h| g.mul(h) == h.mul(g)))
    }

    /// Conjugacy classes in canonical order (by minimal member index).
    pub fn classes(&self) -> Arc<Classes> {
        self.0
            .classes
            .get_or_init(|| {
                let n = self.order() as usize;
                let gen_idxs = self.gen_idxs();
                let mut class_of = vec![u32::MAX; n];
                let mut classes: Vec<Vec<u32>> = Vec::new();
                let mut reps = Vec::new();
                for start in 0..n as u32 {
                    if class_of[start as usize] != u32::MAX {
                        continue;
                    }
                    let cid = classes.len() as u32;
                    let mut orbit = vec![start];
                    class_of[start as usize] = cid;
                    let mut head = 0;
                    while head < orbit.len() {
                        let x = orbit[head];
                        head += 1;
                        for &g in &gen_idxs {
                            let y = self.conj_idx(x, g);
                            if class_of[y as usize] == u32::MAX {
                                class_of[y as usize] = cid;
                                orbit.push(y);
                            }
                        }
                    }
                    orbit.sort_unstable();
                    reps.push(start);
                    classes.push(orbit);
                }
                Arc::new(Classes {
                    class_of,
                    classes,
                    reps,
                })
            })
            .clone()
    }

    /// Sorted multiset of conjugacy class sizes (isomorphism invariant).
    pub fn class_size_histogram(&self) -> Vec<u64> {
        let mut sizes: Vec<u64> = self.classes().classes.iter().map(|c| c.len() as u64).collect();
        sizes.sort_unstable();
        sizes
    }

    // ----- subgroup-valued operations -----

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup::full(self)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::trivial(self)
    }

    /// Centralizer of a set of elements (given by indices), by element scan.
    pub fn centralizer_of_idxs(&self, xs: &[u32]) -> Subgroup {
        let n = self.order() as u32;
        let mut members = Vec::new();
        for g in 0..n {
            if xs.iter().all(|&x| self.mul_idx(g, x) == self.mul_idx(x, g)) {
                members.push(g);
            }
        }
        Subgroup::from_sorted_elements(self, members)
    }

    /// `C_G(X)`: elements commuting with every member of `X`. Checking the
    /// generators of `X` suffices.
    pub fn centralizer(&self, x: &Subgroup) -> Result<Subgroup> {
        if !x.parent_is(self) {
            return Err(Error::NotInGroup("centralizer argument".into()));
        }
        Ok(self.centralizer_of_idxs(x.gen_idxs()))
    }

    pub fn centralizer_of_perm(&self, p: &Perm) -> Result<Subgroup> {
        let idx = self
            .index_of(p)
            .ok_or_else(|| Error::NotInGroup(format!("{p}")))?;
        Ok(self.centralizer_of_idxs(&[idx]))
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer_of_idxs(&self.gen_idxs())
    }

    /// `N_G(H)` by element scan: `g` normalizes `H` iff it conjugates every
    /// generator of `H` into `H`.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        if !h.parent_is(self) {
            return Err(Error::NotInGroup("normalizer argument".into()));
        }
        let n = self.order() as u32;
        let gens = h.gen_idxs();
        let mut members = Vec::new();
        for g in 0..n {
            if gens.iter().all(|&x| h.contains_idx(self.conj_idx(x, g))) {
                members.push(g);
            }
        }
        Ok(Subgroup::from_sorted_elements(self, members))
    }

    /// `[P, g]`: subgroup generated by `x^-1 x^g` over all `x` in `P`.
    pub fn commutator_subgroup_with(&self, p: &Subgroup, g: u32) -> Subgroup {
        let mut gens = Vec::new();
        for &x in p.elems() {
            let c = self.comm_idx(x, g);
            if c != 0 {
                gens.push(c);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        Subgroup::generated(self, &gens)
    }

    /// `[P, g, g] = 1`: the quadratic action condition.
    pub fn iterated_commutator_trivial(&self, p: &Subgroup, g: u32) -> bool {
        let pg = self.commutator_subgroup_with(p, g);
        let pgg = self.commutator_subgroup_with(&pg, g);
        pgg.order() == 1
    }

    // ----- products and quotients -----

    /// Direct product acting on the disjoint union of the two domains.
    pub fn direct_product(a: &GroupHandle, b: &GroupHandle, caps: &Caps) -> Result<GroupHandle> {
        let degree = a.degree() + b.degree();
        let mut gens = Vec::new();
        for g in a.gens() {
            gens.push(g.extend_degree(degree));
        }
        for g in b.gens() {
            gens.push(g.shift(a.degree(), degree));
        }
        let product = GroupHandle::from_generators(degree, gens, caps)?;
        if product.order() != a.order() * b.order() {
            return Err(Error::Internal("direct product order mismatch".into()));
        }
        Ok(product)
    }

    /// Semidirect product `N ⋊ H`.
    ///
    /// `action[i]` must be the automorphism of `N` realized as left conjugation
    /// by the i-th generator of `H`: in the product, `h n h^-1 = action_h(n)`.
    /// The generator assignment must extend to a homomorphism `H -> Aut(N)`,
    /// which is verified by propagating the action over the whole element
    /// table of `H`. The realization acts on the element set of `N` together
    /// with the natural domain of `H`, and is always faithful.
    ///
    /// Returns the product with the two embeddings.
    pub fn semidirect_product(
        n: &GroupHandle,
        h: &GroupHandle,
        action: &[GroupHom],
        caps: &Caps,
    ) -> Result<(GroupHandle, GroupHom, GroupHom)> {
        if action.len() != h.gens().len() {
            return Err(Error::BadHom(
                "one automorphism per generator of the acting group".into(),
            ));
        }
        for a in action {
            if !a.source_is(n) || !a.target_is(n) || !a.is_bijective() {
                return Err(Error::BadHom("action images must be automorphisms of N".into()));
            }
        }
        let n_elems = n.elements()?;
        let n_count = n_elems.len();

        // The action as permutations of N's element indices.
        let gen_action: Vec<Perm> = action
            .iter()
            .map(|a| {
                Perm::new((0..n_count as u32).map(|i| a.apply_idx(i) as u16).collect())
                    .expect("automorphism is a bijection")
            })
            .collect();

        // Verify the assignment extends to a homomorphism H -> Aut(N):
        // action(g*h) must equal action(g) ∘ action(h) (function composition),
        // checked by propagating over H's element table.
        let h_elems = h.elements()?;
        let h_count = h_elems.len();
        let mut act_of: Vec<Option<Perm>> = vec![None; h_count];
        act_of[h.identity_idx() as usize] = Some(Perm::identity(n_count));
        let h_gen_idxs = h.gen_idxs();
        let mut queue = vec![h.identity_idx()];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let ax = act_of[x as usize].clone().expect("visited");
            for (gi, &g) in h_gen_idxs.iter().enumerate() {
                let y = h.mul_idx(x, g);
                // action(x*g)(m) = action(x)(action(g)(m)): apply action(g) first.
                let ay = gen_action[gi].mul(&ax);
                match &act_of[y as usize] {
                    Some(existing) => {
                        if *existing != ay {
                            return Err(Error::BadHom(
                                "generator automorphisms do not extend to the acting group".into(),
                            ));
                        }
                    }
                    None => {
                        act_of[y as usize] = Some(ay);
                        queue.push(y);
                    }
                }
            }
        }

        // Points: element set of N, then H's own domain.
        let degree = n_count + h.degree();
        let mut gens: Vec<Perm> = Vec::new();
        // N-part right translations for N's generators.
        let n_gen_idxs = n.gen_idxs();
        for &g in &n_gen_idxs {
            let mut images: Vec<u16> = (0..degree as u16).collect();
            for m in 0..n_count as u32 {
                images[m as usize] = n.mul_idx(m, g) as u16;
            }
            gens.push(Perm::new(images).expect("translation is a bijection"));
        }
        // H generators: inverse action on the N-part, native action on H's domain.
        for (gi, hg) in h.gens().iter().enumerate() {
            let inv_act = gen_action[gi].inverse();
            let mut images: Vec<u16> = (0..degree as u16).collect();
            for m in 0..n_count {
                images[m] = inv_act.apply(m) as u16;
            }
            for p in 0..h.degree() {
                images[n_count + p] = (n_count + hg.apply(p)) as u16;
            }
            gens.push(Perm::new(images).expect("bijection"));
        }

        let product = GroupHandle::from_generators(degree, gens, caps)?;
        if product.order() != n.order() * h.order() {
            return Err(Error::Internal(format!(
                "semidirect product order {} != {} * {}",
                product.order(),
                n.order(),
                h.order()
            )));
        }

        let n_images: Vec<Perm> = n_gen_idxs
            .iter()
            .map(|&g| {
                let mut images: Vec<u16> = (0..degree as u16).collect();
                for m in 0..n_count as u32 {
                    images[m as usize] = n.mul_idx(m, g) as u16;
                }
                Perm::new(images).unwrap()
            })
            .collect();
        let embed_n = GroupHom::new(n, &product, n_images)?;
        let h_images: Vec<Perm> = h
            .gens()
            .iter()
            .enumerate()
            .map(|(gi, hg)| {
                let inv_act = gen_action[gi].inverse();
                let mut images: Vec<u16> = (0..degree as u16).collect();
                for m in 0..n_count {
                    images[m] = inv_act.apply(m) as u16;
                }
                for p in 0..h.degree() {
                    images[n_count + p] = (n_count + hg.apply(p)) as u16;
                }
                Perm::new(images).unwrap()
            })
            .collect();
        let embed_h = GroupHom::new(h, &product, h_images)?;

        // The N-embedding must be normal in the product.
        let n_sub = embed_n.image();
        if !n_sub.is_normal() {
            return Err(Error::Internal("embedded N is not normal".into()));
        }
        Ok((product, embed_n, embed_h))
    }

    /// Quotient `G/K` as the action on cosets of `K`, with the projection.
    ///
    /// `K` must be normal (verified). For trivial `K` the group itself is
    /// returned with the identity projection.
    pub fn quotient(&self, k: &Subgroup, caps: &Caps) -> Result<(GroupHandle, GroupHom)> {
        self.elements()?;
        if !k.parent_is(self) {
            return Err(Error::NotInGroup("quotient kernel".into()));
        }
        if !k.is_normal() {
            return Err(Error::NotNormal);
        }
        if k.order() == 1 {
            let proj = GroupHom::new(self, self, self.gens().to_vec())?;
            return Ok((self.clone(), proj));
        }
        let n = self.order() as usize;
        // Coset ids in canonical order of minimal member.
        let mut coset_of = vec![u32::MAX; n];
        let mut reps: Vec<u32> = Vec::new();
        for x in 0..n as u32 {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let cid = reps.len() as u32;
            reps.push(x);
            for &kk in k.elems() {
                let y = self.mul_idx(x, kk);
                coset_of[y as usize] = cid;
            }
        }
        let coset_count = reps.len();
        debug_assert_eq!(coset_count as u64 * k.order(), self.order());

        let coset_perm = |g: u32| -> Perm {
            let images: Vec<u16> = reps
                .iter()
                .map(|&r| coset_of[self.mul_idx(r, g) as usize] as u16)
                .collect();
            Perm::new(images).expect("coset action is a permutation")
        };
        let gen_idxs = self.gen_idxs();
        let gen_images: Vec<Perm> = gen_idxs.iter().map(|&g| coset_perm(g)).collect();
        let q = GroupHandle::from_generators(coset_count, gen_images.clone(), caps)?;
        if q.order() * k.order() != self.order() {
            return Err(Error::Internal("quotient order mismatch".into()));
        }
        let q = q.with_tags(
            self.tags()
                .iter()
                .map(|(name, p)| {
                    let idx = self.index_of(p).expect("tag in table");
                    (name.clone(), coset_perm(idx))
                })
                .collect(),
        );
        let proj = GroupHom::new(self, &q, gen_images)?;
        if proj.kernel().elems() != k.elems() {
            return Err(Error::Internal("projection kernel differs from K".into()));
        }
        Ok((q, proj))
    }
}

/// Enumerates all elements by closing the generator set, given the known order.
fn enumerate_elements(degree: usize, gens: &[Perm], order: u64) -> Vec<Perm> {
    let mut elems: Vec<Perm> = vec![Perm::identity(degree)];
    let mut seen: std::collections::HashSet<Perm> = elems.iter().cloned().collect();
    let mut head = 0;
    while head < elems.len() && (elems.len() as u64) < order {
        let p = elems[head].clone();
        head += 1;
        for g in gens {
            let q = p.mul(g);
            if seen.insert(q.clone()) {
                elems.push(q);
            }
        }
    }
    debug_assert_eq!(elems.len() as u64, order);
    elems.sort_unstable();
    elems
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> GroupHandle {
        let caps = Caps::default();
        let mut gens = vec![Perm::parse_cycles("(1 2)", n).unwrap()];
        if n > 2 {
            let cycle: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            gens.push(Perm::parse_cycles(&format!("({})", cycle.join(" ")), n).unwrap());
        }
        GroupHandle::from_generators(n, gens, &caps).unwrap()
    }

    #[test]
    fn orders_and_enumeration() {
        let s5 = sym(5);
        assert_eq!(s5.order(), 120);
        assert_eq!(s5.elements().unwrap().len(), 120);
        assert!(s5.perm(0).is_identity());
        let c3 = GroupHandle::from_generators(
            3,
            vec![Perm::parse_cycles("(1 2 3)", 3).unwrap()],
            &Caps::default(),
        )
        .unwrap();
        assert_eq!(c3.order(), 3);
        let trivial = GroupHandle::trivial(1);
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn index_arithmetic_matches_perms() {
        let s4 = sym(4);
        s4.ensure_table();
        for i in 0..s4.order() as u32 {
            assert_eq!(s4.mul_idx(i, s4.inv_idx(i)), 0);
            for j in [0u32, 1, 5, 17] {
                let expect = s4.perm(i).mul(s4.perm(j));
                assert_eq!(s4.perm(s4.mul_idx(i, j)), &expect);
            }
        }
    }

    #[test]
    fn center_and_centralizer() {
        let s3 = sym(3);
        assert_eq!(s3.center().order(), 1);
        let z = s3.centralizer_of_idxs(&[s3.identity_idx()]);
        assert_eq!(z.order(), 6);
    }

    #[test]
    fn classes_of_s3() {
        let s3 = sym(3);
        let cls = s3.classes();
        let mut sizes: Vec<usize> = cls.classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn direct_product_c2_c3_is_c6() {
        let caps = Caps::default();
        let c2 = GroupHandle::from_generators(2, vec![Perm::parse_cycles("(1 2)", 2).unwrap()], &caps)
            .unwrap();
        let c3 = GroupHandle::from_generators(3, vec![Perm::parse_cycles("(1 2 3)", 3).unwrap()], &caps)
            .unwrap();
        let p = GroupHandle::direct_product(&c2, &c3, &caps).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.exponent(), 6);
    }

    #[test]
    fn exponent_and_histogram() {
        let s4 = sym(4);
        assert_eq!(s4.exponent(), 12);
        let hist = s4.order_histogram();
        assert_eq!(hist[&1], 1);
        assert_eq!(hist[&2], 9);
        assert_eq!(hist[&3], 8);
        assert_eq!(hist[&4], 6);
    }
}
