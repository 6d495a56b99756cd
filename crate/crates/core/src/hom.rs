//! Homomorphisms between enumerated groups, given by generator images and
//! validated over the full element table.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// A validated homomorphism. Carries the complete element map, so kernel and
/// image queries are direct.
#[derive(Clone)]
pub struct GroupHom {
    source: GroupHandle,
    target: GroupHandle,
    gen_images: Vec<Perm>,
    map: Arc<Vec<u32>>,
}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}, kernel order {})",
            self.source.order(),
            self.target.order(),
            self.kernel().order()
        )
    }
}

impl GroupHom {
    /// Builds the homomorphism defined by `gens(source)[i] -> gen_images[i]`.
    ///
    /// Validation: the map is propagated over the whole element table of the
    /// source; whenever an element is reached by two different generator
    /// words the images must agree. This is exactly well-definedness, hence
    /// the assignment extends to a homomorphism iff the propagation succeeds.
    pub fn new(source: &GroupHandle, target: &GroupHandle, gen_images: Vec<Perm>) -> Result<GroupHom> {
        if gen_images.len() != source.gens().len() {
            return Err(Error::BadHom(format!(
                "{} generator images for {} generators",
                gen_images.len(),
                source.gens().len()
            )));
        }
        let n = source.order() as usize;
        source.elements()?;
        target.elements()?;
        let image_idxs: Vec<u32> = gen_images
            .iter()
            .map(|p| {
                target
                    .index_of(p)
                    .ok_or_else(|| Error::BadHom(format!("image {p} not in target group")))
            })
            .collect::<Result<_>>()?;
        let gen_idxs = source.gen_idxs();

        let mut map = vec![u32::MAX; n];
        map[source.identity_idx() as usize] = target.identity_idx();
        let mut queue = vec![source.identity_idx()];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let fx = map[x as usize];
            for (gi, &g) in gen_idxs.iter().enumerate() {
                let y = source.mul_idx(x, g);
                let fy = target.mul_idx(fx, image_idxs[gi]);
                let slot = &mut map[y as usize];
                if *slot == u32::MAX {
                    *slot = fy;
                    queue.push(y);
                } else if *slot != fy {
                    return Err(Error::BadHom(
                        "generator images do not define a homomorphism".into(),
                    ));
                }
            }
        }
        if map.contains(&u32::MAX) {
            return Err(Error::Internal("source not generated by its generators".into()));
        }
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            gen_images,
            map: Arc::new(map),
        })
    }

    pub fn identity(g: &GroupHandle) -> Result<GroupHom> {
        GroupHom::new(g, g, g.gens().to_vec())
    }

    pub fn source(&self) -> &GroupHandle {
        &self.source
    }

    pub fn target(&self) -> &GroupHandle {
        &self.target
    }

    pub fn source_is(&self, g: &GroupHandle) -> bool {
        Arc::ptr_eq(&self.source.0, &g.0)
    }

    pub fn target_is(&self, g: &GroupHandle) -> bool {
        Arc::ptr_eq(&self.target.0, &g.0)
    }

    pub fn gen_images(&self) -> &[Perm] {
        &self.gen_images
    }

    pub fn apply_idx(&self, idx: u32) -> u32 {
        self.map[idx as usize]
    }

    pub fn apply_perm(&self, p: &Perm) -> Result<Perm> {
        let idx = self
            .source
            .index_of(p)
            .ok_or_else(|| Error::NotInGroup(format!("{p}")))?;
        Ok(self.target.perm(self.apply_idx(idx)).clone())
    }

    pub fn kernel(&self) -> Subgroup {
        let elems: Vec<u32> = (0..self.source.order() as u32)
            .filter(|&i| self.map[i as usize] == self.target.identity_idx())
            .collect();
        Subgroup::from_sorted_elements(&self.source, elems)
    }

    pub fn image(&self) -> Subgroup {
        let mut elems: Vec<u32> = self.map.iter().copied().collect();
        elems.sort_unstable();
        elems.dedup();
        Subgroup::from_sorted_elements(&self.target, elems)
    }

    /// `|source| = |kernel| * |image|` always holds for a validated map.
    pub fn first_isomorphism_check(&self) -> bool {
        self.source.order() == self.kernel().order() * self.image().order()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order()
            && self.kernel().order() == 1
            && self.image().order() == self.target.order()
    }

    /// Image of a subgroup of the source.
    pub fn image_of(&self, h: &Subgroup) -> Subgroup {
        let mut elems: Vec<u32> = h.elems().iter().map(|&i| self.apply_idx(i)).collect();
        elems.sort_unstable();
        elems.dedup();
        Subgroup::from_sorted_elements(&self.target, elems)
    }

    /// Full preimage of a subgroup of the target.
    pub fn preimage_of(&self, h: &Subgroup) -> Subgroup {
        let elems: Vec<u32> = (0..self.source.order() as u32)
            .filter(|&i| h.contains_idx(self.map[i as usize]))
            .collect();
        Subgroup::from_sorted_elements(&self.source, elems)
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_bijective() {
            return Err(Error::BadHom("inverse of a non-bijective map".into()));
        }
        let n = self.source.order() as usize;
        let mut inv_map = vec![u32::MAX; n];
        for (i, &fi) in self.map.iter().enumerate() {
            inv_map[fi as usize] = i as u32;
        }
        let gen_images: Vec<Perm> = self
            .target
            .gen_idxs()
            .iter()
            .map(|&g| self.source.perm(inv_map[g as usize]).clone())
            .collect();
        Ok(GroupHom {
            source: self.target.clone(),
            target: self.source.clone(),
            gen_images,
            map: Arc::new(inv_map),
        })
    }

    /// `self` then `other`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if !other.source_is(&self.target) {
            return Err(Error::BadHom("composition target/source mismatch".into()));
        }
        let map: Vec<u32> = self.map.iter().map(|&i| other.map[i as usize]).collect();
        let gen_images = self
            .gen_images
            .iter()
            .map(|p| other.apply_perm(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupHom {
            source: self.source.clone(),
            target: other.target.clone(),
            gen_images,
            map: Arc::new(map),
        })
    }
}
