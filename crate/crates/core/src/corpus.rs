//! Standard small groups and the fixed test corpus shared by the fusion,
//! sandwich and character suites.

use crate::caps::Caps;
use crate::constructors;
use crate::error::Result;
use crate::group::GroupHandle;
use crate::perm::Perm;

pub fn sym(n: usize, caps: &Caps) -> Result<GroupHandle> {
    if n <= 1 {
        return Ok(GroupHandle::trivial(1));
    }
    let mut gens = vec![Perm::parse_cycles("(1 2)", n)?];
    if n > 2 {
        let pts: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        gens.push(Perm::parse_cycles(&format!("({})", pts.join(" ")), n)?);
    }
    GroupHandle::from_generators(n, gens, caps)
}

pub fn alt(n: usize, caps: &Caps) -> Result<GroupHandle> {
    if n <= 2 {
        return Ok(GroupHandle::trivial(1));
    }
    let mut gens = vec![Perm::parse_cycles("(1 2 3)", n)?];
    if n > 3 {
        for i in 2..n - 1 {
            gens.push(Perm::parse_cycles(&format!("(1 2)({} {})", i + 1, i + 2), n)?);
        }
    }
    GroupHandle::from_generators(n, gens, caps)
}

/// Dihedral group of order `2n` on `n` points.
pub fn dihedral(two_n: usize, caps: &Caps) -> Result<GroupHandle> {
    let n = two_n / 2;
    assert!(two_n.is_multiple_of(2) && n >= 2, "dihedral order must be even and >= 4");
    let rot: Vec<u16> = (0..n).map(|i| ((i + 1) % n) as u16).collect();
    let flip: Vec<u16> = (0..n).map(|i| ((n - i) % n) as u16).collect();
    GroupHandle::from_generators(n, vec![Perm::new(rot)?, Perm::new(flip)?], caps)
}

/// The Frobenius group C7 ⋊ C3 of order 21 on 7 points.
pub fn frobenius21(caps: &Caps) -> Result<GroupHandle> {
    let shift: Vec<u16> = (0..7).map(|i| ((i + 1) % 7) as u16).collect();
    let double: Vec<u16> = (0..7).map(|i| ((2 * i) % 7) as u16).collect();
    let g = GroupHandle::from_generators(7, vec![Perm::new(shift)?, Perm::new(double)?], caps)?;
    debug_assert_eq!(g.order(), 21);
    Ok(g)
}

/// A named group of the fixed corpus.
pub struct CorpusGroup {
    pub name: &'static str,
    pub group: GroupHandle,
}

/// The corpus used by the fusion oracle suite: every member has order <= 120.
pub fn fusion_corpus(caps: &Caps) -> Result<Vec<CorpusGroup>> {
    let mut list = Vec::new();
    let mut add = |name: &'static str, g: GroupHandle| list.push(CorpusGroup { name, group: g });
    add("C2", constructors::cyclic(2, caps)?);
    add("C6", constructors::cyclic(6, caps)?);
    add("C9", constructors::cyclic(9, caps)?);
    add("S3", sym(3, caps)?);
    add("D8", dihedral(8, caps)?);
    add("Q8", constructors::quaternion8(caps)?);
    add("D10", dihedral(10, caps)?);
    add("A4", alt(4, caps)?);
    add("C7:C3", frobenius21(caps)?);
    add("SL(2,3)", constructors::sl2(3, caps)?);
    add("S4", sym(4, caps)?);
    add("S3xS3", GroupHandle::direct_product(&sym(3, caps)?, &sym(3, caps)?, caps)?);
    add("GL(2,3)", constructors::example_qd2_cover(caps)?.g);
    add("A5", alt(5, caps)?);
    Ok(list)
}

/// Groups known not to involve Qd(p) for the stated prime, used by the
/// sandwich-witness and character-pipeline suites.
pub fn qd_free_corpus(caps: &Caps) -> Result<Vec<(CorpusGroup, u64)>> {
    Ok(vec![
        (
            CorpusGroup {
                name: "A5",
                group: alt(5, caps)?,
            },
            2,
        ),
        (
            CorpusGroup {
                name: "S3xS3",
                group: GroupHandle::direct_product(&sym(3, caps)?, &sym(3, caps)?, caps)?,
            },
            3,
        ),
        (
            CorpusGroup {
                name: "D10",
                group: dihedral(10, caps)?,
            },
            5,
        ),
        (
            CorpusGroup {
                name: "C7:C3",
                group: frobenius21(caps)?,
            },
            7,
        ),
        (
            CorpusGroup {
                name: "C5",
                group: constructors::cyclic(5, caps)?,
            },
            5,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_orders() {
        let caps = Caps::default();
        assert_eq!(sym(5, &caps).unwrap().order(), 120);
        assert_eq!(alt(5, &caps).unwrap().order(), 60);
        assert_eq!(alt(4, &caps).unwrap().order(), 12);
        assert_eq!(dihedral(8, &caps).unwrap().order(), 8);
        assert_eq!(dihedral(10, &caps).unwrap().order(), 10);
        assert_eq!(frobenius21(&caps).unwrap().order(), 21);
    }
}
