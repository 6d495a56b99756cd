//! Base and strong generating set via a deterministic Schreier–Sims procedure.
//!
//! Gives group order (product of basic orbit lengths) and membership testing
//! (sifting). No randomization: identical generator lists always produce the
//! same chain.

use crate::perm::Perm;

pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

struct Level {
    point: usize,
    /// Strong generators assigned to this level; they fix every earlier base point.
    gens: Vec<Perm>,
    /// `transversal[p]` maps `point` to `p` when `p` is in the basic orbit.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(degree: usize, point: usize) -> Level {
        let mut transversal = vec![None; degree];
        transversal[point] = Some(Perm::identity(degree));
        Level {
            point,
            gens: Vec::new(),
            transversal,
            orbit: vec![point],
        }
    }
}

impl Bsgs {
    pub fn new(degree: usize, gens: &[Perm]) -> Bsgs {
        let mut b = Bsgs {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            if !g.is_identity() {
                b.insert(g.clone());
            }
        }
        b.close();
        b
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (_, residue) = self.sift_from(0, g.clone());
        residue.is_identity()
    }

    /// Sifts `g` through levels `from..`, returning the level where it stuck
    /// and the residue (identity residue means full membership below `from`).
    fn sift_from(&self, from: usize, mut g: Perm) -> (usize, Perm) {
        for l in from..self.levels.len() {
            if g.is_identity() {
                return (l, g);
            }
            let lv = &self.levels[l];
            let delta = g.apply(lv.point);
            match lv.transversal[delta].as_ref() {
                Some(t) => g = g.mul(&t.inverse()),
                None => return (l, g),
            }
        }
        (self.levels.len(), g)
    }

    fn insert(&mut self, g: Perm) {
        let (l, residue) = self.sift_from(0, g);
        if residue.is_identity() {
            return;
        }
        if l == self.levels.len() {
            let point = residue.first_moved_point().expect("non-identity residue");
            self.levels.push(Level::new(self.degree, point));
        }
        self.levels[l].gens.push(residue);
    }

    /// Generators of the stabilizer-chain subgroup at `level`: every strong
    /// generator stored at this level or deeper.
    fn gens_at(&self, level: usize) -> Vec<Perm> {
        self.levels[level..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    fn rebuild_orbit(&mut self, level: usize) {
        let gens = self.gens_at(level);
        let point = self.levels[level].point;
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
        transversal[point] = Some(Perm::identity(self.degree));
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let delta = orbit[head];
            head += 1;
            let t = transversal[delta].clone().expect("orbit point has transversal");
            for s in &gens {
                let image = s.apply(delta);
                if transversal[image].is_none() {
                    transversal[image] = Some(t.mul(s));
                    orbit.push(image);
                }
            }
        }
        self.levels[level].transversal = transversal;
        self.levels[level].orbit = orbit;
    }

    /// Re-verifies the Schreier condition at every level, promoting residues
    /// of failed Schreier generators to deeper levels until stable.
    fn close(&mut self) {
        'outer: loop {
            for l in 0..self.levels.len() {
                self.rebuild_orbit(l);
                let gens = self.gens_at(l);
                let point = self.levels[l].point;
                for oi in 0..self.levels[l].orbit.len() {
                    let delta = self.levels[l].orbit[oi];
                    let t = self.levels[l].transversal[delta]
                        .clone()
                        .expect("orbit point");
                    for s in &gens {
                        let u = t.mul(s);
                        let delta2 = u.apply(point);
                        let t2 = self.levels[l].transversal[delta2]
                            .as_ref()
                            .expect("orbit closed under generators");
                        let schreier = u.mul(&t2.inverse());
                        if schreier.is_identity() {
                            continue;
                        }
                        let (m, residue) = self.sift_from(l + 1, schreier);
                        if residue.is_identity() {
                            continue;
                        }
                        if m == self.levels.len() {
                            let pt = residue.first_moved_point().expect("non-identity");
                            self.levels.push(Level::new(self.degree, pt));
                        }
                        self.levels[m].gens.push(residue);
                        // refresh the stuck level right away so the same
                        // residue cannot be re-added against a stale orbit
                        self.rebuild_orbit(m);
                        continue 'outer;
                    }
                }
            }
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn brute_closure(degree: usize, gens: &[Perm]) -> usize {
        let mut set: BTreeSet<Perm> = BTreeSet::new();
        set.insert(Perm::identity(degree));
        let mut frontier: Vec<Perm> = vec![Perm::identity(degree)];
        while let Some(p) = frontier.pop() {
            for g in gens {
                let q = p.mul(g);
                if set.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        set.len()
    }

    fn check(degree: usize, cycles: &[&str], expected: u64) {
        let gens: Vec<Perm> = cycles
            .iter()
            .map(|c| Perm::parse_cycles(c, degree).unwrap())
            .collect();
        let b = Bsgs::new(degree, &gens);
        assert_eq!(b.order(), expected);
        assert_eq!(brute_closure(degree, &gens) as u64, expected);
        for g in &gens {
            assert!(b.contains(g));
        }
    }

    #[test]
    fn classic_orders() {
        check(3, &["(1 2 3)"], 3);
        check(5, &["(1 2)", "(1 2 3 4 5)"], 120);
        check(5, &["(1 2 3)", "(3 4 5)"], 60);
        check(4, &["(1 2 3 4)", "(1 3)"], 8);
        // Frobenius group of order 21: the second generator doubles mod 7
        check(7, &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"], 21);
        check(7, &["(1 2 3 4 5 6 7)", "(2 7)(3 6)(4 5)"], 14);
        check(6, &["(1 2)", "(1 2 3 4 5 6)"], 720);
        check(6, &["(1 2 3 4 5 6)"], 6);
    }

    #[test]
    fn trivial_group() {
        let b = Bsgs::new(4, &[]);
        assert_eq!(b.order(), 1);
        assert!(b.contains(&Perm::identity(4)));
        assert!(!b.contains(&Perm::parse_cycles("(1 2)", 4).unwrap()));
    }

    #[test]
    fn membership() {
        let gens = vec![
            Perm::parse_cycles("(1 2)", 4).unwrap(),
            Perm::parse_cycles("(1 2 3 4)", 4).unwrap(),
        ];
        let b = Bsgs::new(4, &gens);
        assert_eq!(b.order(), 24);
        assert!(b.contains(&Perm::parse_cycles("(1 3)(2 4)", 4).unwrap()));

        let a4 = vec![
            Perm::parse_cycles("(1 2 3)", 4).unwrap(),
            Perm::parse_cycles("(2 3 4)", 4).unwrap(),
        ];
        let b = Bsgs::new(4, &a4);
        assert_eq!(b.order(), 12);
        assert!(!b.contains(&Perm::parse_cycles("(1 2)", 4).unwrap()));
    }
}
