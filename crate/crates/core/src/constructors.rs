//! Constructors for the specific finite groups the engine studies: cyclic and
//! elementary abelian groups, Q8, extraspecial groups of exponent p, SL(2,p),
//! Qd(p), the rank-two families M(p,r), C(p,r) and G(p,r;eps), the two cover
//! examples, and E ⋊ SL(2,p).
//!
//! Every presentation-based constructor validates all defining relations and
//! the order formula on the built group; a failure aborts with
//! [`Error::ConstructionDefect`]. Distinguished generators carry tag names
//! (`a`, `b`, `c`, `x`, `y`, `z`, …) so downstream code can refer to them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::hom::GroupHom;
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// The group families addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `cyclic n`
    Cyclic,
    /// `elem-abelian p k`: (Z/p)^k
    ElemAbelian,
    /// `q8`: the quaternion group of order 8
    Quaternion8,
    /// `heisenberg p`: extraspecial p^(1+2) of exponent p, p odd
    ExtraspecialExpP,
    /// `sl2 p`
    Sl2,
    /// `qd p`: (Z/p x Z/p) ⋊ SL(2,p)
    Qd,
    /// `M p r`: the modular (metacyclic) group of order p^r
    MetacyclicM,
    /// `C p r`
    FamilyC,
    /// `G p r eps`
    FamilyGEps,
    /// `qd3-cover`: the order-648 central extension of Qd(3)
    ExampleQd3Cover,
    /// `qd2-cover`: the order-48 double cover of S4
    ExampleQd2Cover,
    /// `esl2 p`: extraspecial p^(1+2) ⋊ SL(2,p)
    ExtraspecialSl2,
}

impl Family {
    pub fn token(&self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::ElemAbelian => "elem-abelian",
            Family::Quaternion8 => "q8",
            Family::ExtraspecialExpP => "heisenberg",
            Family::Sl2 => "sl2",
            Family::Qd => "qd",
            Family::MetacyclicM => "M",
            Family::FamilyC => "C",
            Family::FamilyGEps => "G",
            Family::ExampleQd3Cover => "qd3-cover",
            Family::ExampleQd2Cover => "qd2-cover",
            Family::ExtraspecialSl2 => "esl2",
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Ok(match s {
            "cyclic" => Family::Cyclic,
            "elem-abelian" | "elem_abelian" => Family::ElemAbelian,
            "q8" | "quaternion8" => Family::Quaternion8,
            "heisenberg" | "extraspecial" | "extraspecial_exp_p" => Family::ExtraspecialExpP,
            "sl2" => Family::Sl2,
            "qd" => Family::Qd,
            "M" | "metacyclic" | "metacyclic_M" => Family::MetacyclicM,
            "C" | "family_C" => Family::FamilyC,
            "G" | "family_G_eps" => Family::FamilyGEps,
            "qd3-cover" | "example_qd3_cover" => Family::ExampleQd3Cover,
            "qd2-cover" | "example_qd2_cover" => Family::ExampleQd2Cover,
            "esl2" | "extraspecial_sl2" => Family::ExtraspecialSl2,
            other => return Err(Error::BadParams(format!("unknown family {other:?}"))),
        })
    }
}

/// A family name with its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<u64>,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.token())?;
        for p in &self.params {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn least_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&x| mod_pow(x, (p - 1) / 2, p) != 1)
        .expect("odd prime has a non-residue")
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Dispatches a family spec to its constructor.
pub fn make_group(spec: &FamilySpec, caps: &Caps) -> Result<GroupHandle> {
    let p = |i: usize| -> Result<u64> {
        spec.params
            .get(i)
            .copied()
            .ok_or_else(|| Error::BadParams(format!("{spec}: missing parameter {i}")))
    };
    match spec.family {
        Family::Cyclic => cyclic(p(0)? as usize, caps),
        Family::ElemAbelian => elem_abelian(p(0)?, p(1)? as usize, caps),
        Family::Quaternion8 => quaternion8(caps),
        Family::ExtraspecialExpP => extraspecial_exp_p(p(0)?, caps),
        Family::Sl2 => sl2(p(0)?, caps),
        Family::Qd => qd(p(0)?, caps),
        Family::MetacyclicM => metacyclic_m(p(0)?, p(1)? as u32, caps),
        Family::FamilyC => family_c(p(0)?, p(1)? as u32, caps),
        Family::FamilyGEps => family_g_eps(p(0)?, p(1)? as u32, p(2)?, caps),
        Family::ExampleQd3Cover => Ok(example_qd3_cover(caps)?.gbar),
        Family::ExampleQd2Cover => Ok(example_qd2_cover(caps)?.g),
        Family::ExtraspecialSl2 => extraspecial_sl2(p(0)?, caps),
    }
}

fn tagged(g: GroupHandle, tags: Vec<(&str, Perm)>) -> GroupHandle {
    let map: BTreeMap<String, Perm> = tags.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    g.with_tags(map)
}

fn check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ConstructionDefect(what.to_string()))
    }
}

fn check_relation(_g: &GroupHandle, what: &str, lhs: &Perm, rhs: &Perm) -> Result<()> {
    check(lhs == rhs, &format!("relation {what} fails"))
}

pub fn cyclic(n: usize, caps: &Caps) -> Result<GroupHandle> {
    if n == 0 {
        return Err(Error::BadParams("cyclic group order must be positive".into()));
    }
    if n == 1 {
        return Ok(tagged(GroupHandle::trivial(1), vec![("a", Perm::identity(1))]));
    }
    let images: Vec<u16> = (0..n).map(|i| ((i + 1) % n) as u16).collect();
    let a = Perm::new(images)?;
    let g = GroupHandle::from_generators(n, vec![a.clone()], caps)?;
    check(g.order() == n as u64, "cyclic order")?;
    Ok(tagged(g, vec![("a", a)]))
}

pub fn elem_abelian(p: u64, k: usize, caps: &Caps) -> Result<GroupHandle> {
    if !is_prime(p) {
        return Err(Error::BadParams(format!("{p} is not prime")));
    }
    if k == 0 {
        return Ok(GroupHandle::trivial(1));
    }
    let degree = p as usize * k;
    let mut gens = Vec::new();
    let mut tags = Vec::new();
    let names = ["e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"];
    for i in 0..k {
        let base = cyclic(p as usize, caps)?.gens()[0].clone();
        let g = base.shift(i * p as usize, degree);
        gens.push(g.clone());
        if i < names.len() {
            tags.push((names[i], g));
        }
    }
    let g = GroupHandle::from_generators(degree, gens, caps)?;
    check(g.order() == p.pow(k as u32), "elementary abelian order")?;
    Ok(tagged(g, tags))
}

/// Q8 in its right regular representation on {1, -1, i, -i, j, -j, k, -k}.
pub fn quaternion8(caps: &Caps) -> Result<GroupHandle> {
    // element = (sign, axis) with axis 0=1, 1=i, 2=j, 3=k; index = axis*2 + (sign<0)
    fn idx(sign: i8, axis: usize) -> usize {
        axis * 2 + usize::from(sign < 0)
    }
    fn mul(a: (i8, usize), b: (i8, usize)) -> (i8, usize) {
        let (sa, xa) = a;
        let (sb, xb) = b;
        let s = sa * sb;
        match (xa, xb) {
            (0, x) => (s, x),
            (x, 0) => (s, x),
            (x, y) if x == y => (-s, 0),
            // i*j=k, j*k=i, k*i=j and the reversed products flip sign
            (1, 2) => (s, 3),
            (2, 3) => (s, 1),
            (3, 1) => (s, 2),
            (2, 1) => (-s, 3),
            (3, 2) => (-s, 1),
            (1, 3) => (-s, 2),
            _ => unreachable!(),
        }
    }
    let all: Vec<(i8, usize)> = (0..4).flat_map(|x| [(1i8, x), (-1i8, x)]).collect();
    let right_mul = |q: (i8, usize)| -> Perm {
        let mut images = vec![0u16; 8];
        for &e in &all {
            images[idx(e.0, e.1)] = idx(mul(e, q).0, mul(e, q).1) as u16;
        }
        Perm::new(images).expect("regular action is a bijection")
    };
    let i = right_mul((1, 1));
    let j = right_mul((1, 2));
    let k = right_mul((1, 3));
    let g = GroupHandle::from_generators(8, vec![i.clone(), j.clone()], caps)?;
    check(g.order() == 8, "Q8 order")?;
    check_relation(&g, "i^2 = j^2", &i.pow(2), &j.pow(2))?;
    check_relation(&g, "ij = k", &i.mul(&j), &k)?;
    check_relation(&g, "j^-1 i j = i^-1", &i.conj(&j), &i.inverse())?;
    Ok(tagged(g, vec![("i", i), ("j", j), ("k", k)]))
}

/// Row-vector action of a 2x2 matrix over F_p on the p^2-1 nonzero vectors.
fn perm_from_mat2(m: [[u64; 2]; 2], p: u64) -> Result<Perm> {
    let n = (p * p - 1) as usize;
    let index = |a: u64, b: u64| -> usize { (a * p + b - 1) as usize };
    let mut images = vec![0u16; n];
    for a in 0..p {
        for b in 0..p {
            if a == 0 && b == 0 {
                continue;
            }
            let a2 = (a * m[0][0] + b * m[1][0]) % p;
            let b2 = (a * m[0][1] + b * m[1][1]) % p;
            if a2 == 0 && b2 == 0 {
                return Err(Error::BadParams("singular matrix".into()));
            }
            images[index(a, b)] = index(a2, b2) as u16;
        }
    }
    Perm::new(images)
}

pub fn sl2(p: u64, caps: &Caps) -> Result<GroupHandle> {
    if !is_prime(p) {
        return Err(Error::BadParams(format!("{p} is not prime")));
    }
    let s = perm_from_mat2([[0, 1], [p - 1, 0]], p)?;
    let t = perm_from_mat2([[1, 1], [0, 1]], p)?;
    let g = GroupHandle::from_generators((p * p - 1) as usize, vec![s.clone(), t.clone()], caps)?;
    check(g.order() == p * (p * p - 1), "SL(2,p) order")?;
    Ok(tagged(g, vec![("s", s), ("t", t)]))
}

/// The automorphism of a two-generator group induced by a determinant-one
/// matrix `[[u, v], [s, t]]`.
///
/// On an elementary abelian group with tags `e1`, `e2` this is the plain
/// module action `e1 -> e1^u e2^s`, `e2 -> e1^v e2^t`, and `M -> aut(M)` is
/// a homomorphism. On an extraspecial group with tags `x`, `y`, `z` the
/// plain formula composes only up to inner twists, so the generator images
/// carry the central corrections `z^(-us/2)` and `z^(-vt/2)` (p odd); with
/// these the assignment is again a homomorphism, acting on `x`, `y` by the
/// matrix modulo the center and centralizing `z`.
fn matrix_aut(g: &GroupHandle, m: [[u64; 2]; 2]) -> Result<GroupHom> {
    let (x, y, z) = match (g.tag("x"), g.tag("y"), g.tag("z")) {
        (Some(x), Some(y), z) => (x.clone(), y.clone(), z.cloned()),
        _ => {
            let x = g
                .tag("e1")
                .ok_or_else(|| Error::Internal("matrix_aut needs x/e1 tag".into()))?;
            let y = g
                .tag("e2")
                .ok_or_else(|| Error::Internal("matrix_aut needs y/e2 tag".into()))?;
            (x.clone(), y.clone(), None)
        }
    };
    let [[u, v], [s, t]] = m;
    let image_of = |a: u64, b: u64| -> Perm {
        let base = x.pow(a as i64).mul(&y.pow(b as i64));
        match &z {
            None => base,
            Some(z) => {
                let p = z.order();
                let half = p.div_ceil(2);
                let corr = (p - a * b % p) % p * half % p;
                base.mul(&z.pow(corr as i64))
            }
        }
    };
    let gx = image_of(u, s);
    let gy = image_of(v, t);
    let hom = GroupHom::new(g, g, vec![gx, gy])?;
    if !hom.is_bijective() {
        return Err(Error::ConstructionDefect("matrix action is not bijective".into()));
    }
    Ok(hom)
}

/// The inner automorphism `e -> w e w^-1`.
fn inner_aut(g: &GroupHandle, w: &Perm) -> Result<GroupHom> {
    let images: Vec<Perm> = g
        .gens()
        .iter()
        .map(|gen| w.mul(gen).mul(&w.inverse()))
        .collect();
    GroupHom::new(g, g, images)
}

pub fn qd(p: u64, caps: &Caps) -> Result<GroupHandle> {
    if !is_prime(p) {
        return Err(Error::BadParams(format!("{p} is not prime")));
    }
    let v = elem_abelian(p, 2, caps)?;
    let l = sl2(p, caps)?;
    let act_s = matrix_aut(&v, [[0, 1], [p - 1, 0]])?;
    let act_t = matrix_aut(&v, [[1, 1], [0, 1]])?;
    let (g, embed_v, embed_l) = GroupHandle::semidirect_product(&v, &l, &[act_s, act_t], caps)?;
    check(g.order() == p.pow(3) * (p * p - 1), "Qd(p) order")?;
    let e1 = embed_v.apply_perm(v.tag("e1").unwrap())?;
    let e2 = embed_v.apply_perm(v.tag("e2").unwrap())?;
    let s = embed_l.apply_perm(l.tag("s").unwrap())?;
    let t = embed_l.apply_perm(l.tag("t").unwrap())?;
    Ok(tagged(g, vec![("e1", e1), ("e2", e2), ("s", s), ("t", t)]))
}

/// Extraspecial p^(1+2) of exponent p (p odd), as upper unitriangular 3x3
/// matrices over F_p acting on row vectors.
pub fn extraspecial_exp_p(p: u64, caps: &Caps) -> Result<GroupHandle> {
    if !is_prime(p) || p == 2 {
        return Err(Error::BadParams("exponent-p extraspecial group needs an odd prime".into()));
    }
    let n = (p * p * p) as usize;
    // point (v0,v1,v2) -> v0 p^2 + v1 p + v2; matrix [[1,a,b],[0,1,c],[0,0,1]]
    let tri = |a: u64, b: u64, c: u64| -> Result<Perm> {
        let mut images = vec![0u16; n];
        for v0 in 0..p {
            for v1 in 0..p {
                for v2 in 0..p {
                    let w1 = (v1 + v0 * a) % p;
                    let w2 = (v2 + v1 * c + v0 * b) % p;
                    let from = (v0 * p * p + v1 * p + v2) as usize;
                    images[from] = (v0 * p * p + w1 * p + w2) as u16;
                }
            }
        }
        Perm::new(images)
    };
    let x = tri(1, 0, 0)?;
    let y = tri(0, 0, 1)?;
    let z = tri(0, 1, 0)?;
    let g = GroupHandle::from_generators(n, vec![x.clone(), y.clone()], caps)?;
    g.elements()?;
    check(g.order() == p.pow(3), "extraspecial order p^3")?;
    check_relation(&g, "[x,y] = z", &x.commutator(&y), &z)?;
    check_relation(&g, "x^p = 1", &x.pow(p as i64), &Perm::identity(n))?;
    check_relation(&g, "y^p = 1", &y.pow(p as i64), &Perm::identity(n))?;
    check_relation(&g, "z^p = 1", &z.pow(p as i64), &Perm::identity(n))?;
    check_relation(&g, "[x,z] = 1", &x.commutator(&z), &Perm::identity(n))?;
    check_relation(&g, "[y,z] = 1", &y.commutator(&z), &Perm::identity(n))?;
    check(g.exponent() == p, "exponent p")?;
    Ok(tagged(g, vec![("x", x), ("y", y), ("z", z)]))
}

/// The modular metacyclic group M(p,r) of order p^r (r >= 3):
/// `<a, b | a^(p^(r-1)) = b^p = 1, b a b^-1 = a^(1+p^(r-2))>`.
pub fn metacyclic_m(p: u64, r: u32, caps: &Caps) -> Result<GroupHandle> {
    if !is_prime(p) || r < 3 {
        return Err(Error::BadParams("M(p,r) needs a prime and r >= 3".into()));
    }
    let n_ord = p.pow(r - 1);
    let n = cyclic(n_ord as usize, caps)?;
    let h = cyclic(p as usize, caps)?;
    let a0 = n.tag("a").unwrap().clone();
    let beta = GroupHom::new(&n, &n, vec![a0.pow((1 + p.pow(r - 2)) as i64)])?;
    let (g, embed_n, embed_h) = GroupHandle::semidirect_product(&n, &h, &[beta], caps)?;
    check(g.order() == p.pow(r), "M(p,r) order")?;
    let a = embed_n.apply_perm(&a0)?;
    let b = embed_h.apply_perm(h.tag("a").unwrap())?;
    let deg = g.degree();
    check_relation(&g, "a^(p^(r-1)) = 1", &a.pow(n_ord as i64), &Perm::identity(deg))?;
    check_relation(&g, "b^p = 1", &b.pow(p as i64), &Perm::identity(deg))?;
    check_relation(
        &g,
        "b a b^-1 = a^(1+p^(r-2))",
        &b.mul(&a).mul(&b.inverse()),
        &a.pow((1 + p.pow(r - 2)) as i64),
    )?;
    Ok(tagged(g, vec![("a", a), ("b", b)]))
}

/// C(p,r) of order p^r (r >= 3):
/// `<a, b, c | a^p = b^p = c^(p^(r-2)) = 1, [a,b] = c^(p^(r-3)), [a,c] = [b,c] = 1>`.
pub fn family_c(p: u64, r: u32, caps: &Caps) -> Result<GroupHandle> {
    if !is_prime(p) || r < 3 {
        return Err(Error::BadParams("C(p,r) needs a prime and r >= 3".into()));
    }
    let c_ord = p.pow(r - 2);
    let q = p.pow(r - 3);
    // N = <a> x <c> abelian, acted on by <b>.
    let ca = cyclic(p as usize, caps)?;
    let cc = cyclic(c_ord as usize, caps)?;
    let nn = GroupHandle::direct_product(&ca, &cc, caps)?;
    let a0 = nn.gens()[0].clone();
    let c0 = nn.gens()[1].clone();
    let nn = tagged(nn, vec![("a", a0.clone()), ("c", c0.clone())]);
    // b a b^-1 = a c^-q (so that [a,b] = c^q), b c b^-1 = c.
    let beta = GroupHom::new(&nn, &nn, vec![a0.mul(&c0.pow(-(q as i64))), c0.clone()])?;
    let h = cyclic(p as usize, caps)?;
    let (g, embed_n, embed_h) = GroupHandle::semidirect_product(&nn, &h, &[beta], caps)?;
    check(g.order() == p.pow(r), "C(p,r) order")?;
    let a = embed_n.apply_perm(&a0)?;
    let c = embed_n.apply_perm(&c0)?;
    let b = embed_h.apply_perm(h.tag("a").unwrap())?;
    let deg = g.degree();
    check_relation(&g, "a^p = 1", &a.pow(p as i64), &Perm::identity(deg))?;
    check_relation(&g, "b^p = 1", &b.pow(p as i64), &Perm::identity(deg))?;
    check_relation(&g, "c^(p^(r-2)) = 1", &c.pow(c_ord as i64), &Perm::identity(deg))?;
    check_relation(&g, "[a,b] = c^(p^(r-3))", &a.commutator(&b), &c.pow(q as i64))?;
    check_relation(&g, "[a,c] = 1", &a.commutator(&c), &Perm::identity(deg))?;
    check_relation(&g, "[b,c] = 1", &b.commutator(&c), &Perm::identity(deg))?;
    Ok(tagged(g, vec![("a", a), ("b", b), ("c", c)]))
}

/// G(p,r;eps) of order p^r (r >= 4, eps = 1 or a quadratic non-residue):
/// `<a, b, c | a^p = b^p = c^(p^(r-2)) = [b,c] = 1, [a,b^-1] = c^(eps p^(r-3)), [a,c] = b>`.
pub fn family_g_eps(p: u64, r: u32, eps: u64, caps: &Caps) -> Result<GroupHandle> {
    if !is_prime(p) || p == 2 || r < 4 {
        return Err(Error::BadParams("G(p,r;eps) needs an odd prime and r >= 4".into()));
    }
    let eps = eps % p;
    if eps != 1 && mod_pow(eps, (p - 1) / 2, p) != p - 1 {
        return Err(Error::BadParams(format!(
            "eps {eps} must be 1 or a quadratic non-residue mod {p}"
        )));
    }
    let c_ord = p.pow(r - 2);
    let q = p.pow(r - 3);
    let cb = cyclic(p as usize, caps)?;
    let cc = cyclic(c_ord as usize, caps)?;
    let nn = GroupHandle::direct_product(&cb, &cc, caps)?;
    let b0 = nn.gens()[0].clone();
    let c0 = nn.gens()[1].clone();
    // Right conjugation by a: b -> b c^(eps q), c -> c b^-1 (from the two
    // commutator relations); the left-conjugation action is its inverse.
    let alpha = GroupHom::new(
        &nn,
        &nn,
        vec![b0.mul(&c0.pow((eps * q) as i64)), c0.mul(&b0.inverse())],
    )?;
    let beta = alpha.inverse()?;
    let beta_images: Vec<Perm> = nn
        .gens()
        .iter()
        .map(|g| beta.apply_perm(g))
        .collect::<Result<_>>()?;
    let beta = GroupHom::new(&nn, &nn, beta_images)?;
    let h = cyclic(p as usize, caps)?;
    let (g, embed_n, embed_h) = GroupHandle::semidirect_product(&nn, &h, &[beta], caps)?;
    check(g.order() == p.pow(r), "G(p,r;eps) order")?;
    let b = embed_n.apply_perm(&b0)?;
    let c = embed_n.apply_perm(&c0)?;
    let a = embed_h.apply_perm(h.tag("a").unwrap())?;
    let deg = g.degree();
    check_relation(&g, "a^p = 1", &a.pow(p as i64), &Perm::identity(deg))?;
    check_relation(&g, "b^p = 1", &b.pow(p as i64), &Perm::identity(deg))?;
    check_relation(&g, "c^(p^(r-2)) = 1", &c.pow(c_ord as i64), &Perm::identity(deg))?;
    check_relation(&g, "[b,c] = 1", &b.commutator(&c), &Perm::identity(deg))?;
    check_relation(
        &g,
        "[a,b^-1] = c^(eps p^(r-3))",
        &a.commutator(&b.inverse()),
        &c.pow((eps * q) as i64),
    )?;
    check_relation(&g, "[a,c] = b", &a.commutator(&c), &b)?;
    Ok(tagged(g, vec![("a", a), ("b", b), ("c", c)]))
}

/// E ⋊ SL(2,p) for E extraspecial of exponent p; SL(2,p) acts through the
/// matrix formula on x, y and centralizes z.
pub fn extraspecial_sl2(p: u64, caps: &Caps) -> Result<GroupHandle> {
    if !is_prime(p) || p == 2 || p > 7 {
        return Err(Error::BadParams("esl2 needs an odd prime p <= 7".into()));
    }
    let e = extraspecial_exp_p(p, caps)?;
    let l = sl2(p, caps)?;
    let act_s = matrix_aut(&e, [[0, 1], [p - 1, 0]])?;
    let act_t = matrix_aut(&e, [[1, 1], [0, 1]])?;
    let (g, embed_e, embed_l) = GroupHandle::semidirect_product(&e, &l, &[act_s, act_t], caps)?;
    check(g.order() == p.pow(4) * (p * p - 1), "E ⋊ SL(2,p) order")?;
    let x = embed_e.apply_perm(e.tag("x").unwrap())?;
    let y = embed_e.apply_perm(e.tag("y").unwrap())?;
    let z = embed_e.apply_perm(e.tag("z").unwrap())?;
    let s = embed_l.apply_perm(l.tag("s").unwrap())?;
    let t = embed_l.apply_perm(l.tag("t").unwrap())?;
    // z stays central: determinant-one actions fix it.
    for gen in g.gens() {
        check(z.mul(gen) == gen.mul(&z), "z central in E ⋊ SL(2,p)")?;
    }
    Ok(tagged(g, vec![("x", x), ("y", y), ("z", z), ("s", s), ("t", t)]))
}

/// The order-648 cover: G = E ⋊ T with T = Q8 ⋊ C9, and Gbar = G/<z^-1 a^3>.
pub struct Qd3Cover {
    /// E ⋊ T, order 1944; tags x, y, z, i, j, k, a.
    pub g: GroupHandle,
    /// G / <z^-1 a^3>, order 648; tags are the images of G's tags.
    pub gbar: GroupHandle,
    pub proj: GroupHom,
    /// Central order-3 image of z in gbar.
    pub zbar: Perm,
    /// P = <x, y, a> <= G, the Sylow 3-subgroup, order 243.
    pub p: Subgroup,
    /// Image of P in gbar, order 81.
    pub pbar: Subgroup,
}

pub fn example_qd3_cover(caps: &Caps) -> Result<Qd3Cover> {
    let e = extraspecial_exp_p(3, caps)?;
    let q = quaternion8(caps)?;
    let a9 = cyclic(9, caps)?;

    // T = Q8 ⋊ C9: conjugation by a cycles i -> j -> k -> i, and a^3 is
    // central. Left conjugation by a is therefore the inverse 3-cycle.
    let qi = q.tag("i").unwrap().clone();
    let qj = q.tag("j").unwrap().clone();
    let qk = q.tag("k").unwrap().clone();
    let beta_a = GroupHom::new(&q, &q, vec![qk.clone(), qi.clone()])?;
    let (t, embed_q, embed_a) = GroupHandle::semidirect_product(&q, &a9, &[beta_a], caps)?;
    check(t.order() == 72, "T order 72")?;
    let ti = embed_q.apply_perm(&qi)?;
    let tj = embed_q.apply_perm(&qj)?;
    let tk = embed_q.apply_perm(&qk)?;
    let ta = embed_a.apply_perm(a9.tag("a").unwrap())?;
    check_relation(&t, "i^a = j", &ti.conj(&ta), &tj)?;
    check_relation(&t, "j^a = k", &tj.conj(&ta), &tk)?;
    // C_A(Q) = <a^3>: a^3 centralizes Q, a does not.
    check(ti.conj(&ta.pow(3)) == ti && tj.conj(&ta.pow(3)) == tj, "a^3 centralizes Q")?;
    check(ti.conj(&ta) != ti, "a acts nontrivially on Q")?;
    let t = tagged(
        t,
        vec![("i", ti.clone()), ("j", tj.clone()), ("k", tk), ("a", ta.clone())],
    );

    // T/<a^3> must be SL(2,3); the matrices below realize i, j, a so that
    // conjugation by [[1,1],[0,1]] cycles the quaternion triple forward.
    let m_i = [[0, 1], [2, 0]];
    let m_j = [[1, 2], [2, 2]];
    let m_a = [[1, 1], [0, 1]];
    // Conjugate the splitting M -> aut(M) inside Aut(E) so that the image of
    // a acts by x -> x, y -> xy on the nose (not merely modulo the center).
    let ex = e.tag("x").unwrap().clone();
    let ey = e.tag("y").unwrap().clone();
    let ez = e.tag("z").unwrap().clone();
    let sigma_a = matrix_aut(&e, m_a)?;
    let image_y = sigma_a.apply_perm(&ey)?;
    let d = (0..3)
        .find(|&d| image_y == ex.mul(&ey).mul(&ez.pow(d)))
        .ok_or_else(|| Error::ConstructionDefect("unexpected action of a on y".into()))?;
    let w = ey.pow(d);
    let conj_in = inner_aut(&e, &w.inverse())?;
    let conj_out = inner_aut(&e, &w)?;
    let twist = |m: [[u64; 2]; 2]| -> Result<GroupHom> {
        conj_in.then(&matrix_aut(&e, m)?)?.then(&conj_out)
    };
    let phi_i = twist(m_i)?;
    let phi_j = twist(m_j)?;
    let phi_a = twist(m_a)?;
    // T's generators are [i, j, a] in construction order.
    let (g, embed_e, embed_t) = GroupHandle::semidirect_product(&e, &t, &[phi_i, phi_j, phi_a], caps)?;
    check(g.order() == 1944, "|G| = 1944")?;

    let x = embed_e.apply_perm(e.tag("x").unwrap())?;
    let y = embed_e.apply_perm(e.tag("y").unwrap())?;
    let z = embed_e.apply_perm(e.tag("z").unwrap())?;
    let gi = embed_t.apply_perm(t.tag("i").unwrap())?;
    let gj = embed_t.apply_perm(t.tag("j").unwrap())?;
    let gk = embed_t.apply_perm(t.tag("k").unwrap())?;
    let ga = embed_t.apply_perm(t.tag("a").unwrap())?;
    // The normalization pinning the action of a on E.
    check_relation(&g, "a x a^-1 = x", &ga.mul(&x).mul(&ga.inverse()), &x)?;
    check_relation(&g, "a y a^-1 = x y", &ga.mul(&y).mul(&ga.inverse()), &x.mul(&y))?;
    let g = tagged(
        g,
        vec![
            ("x", x.clone()),
            ("y", y.clone()),
            ("z", z.clone()),
            ("i", gi),
            ("j", gj),
            ("k", gk),
            ("a", ga.clone()),
        ],
    );

    // w = z^-1 a^3 is central of order 3.
    let w = z.inverse().mul(&ga.pow(3));
    check(w.order() == 3, "z^-1 a^3 has order 3")?;
    for gen in g.gens() {
        check(w.mul(gen) == gen.mul(&w), "z^-1 a^3 central")?;
    }
    let w_idx = g.index_of(&w).ok_or_else(|| Error::Internal("w not found".into()))?;
    let k_sub = Subgroup::generated(&g, &[w_idx]);
    let (gbar, proj) = g.quotient(&k_sub, caps)?;
    check(gbar.order() == 648, "|Gbar| = 648")?;
    let zbar = proj.apply_perm(&z)?;
    check(!zbar.is_identity(), "zbar nontrivial")?;

    let p_sub = Subgroup::generated(
        &g,
        &[
            g.index_of(&x).unwrap(),
            g.index_of(&y).unwrap(),
            g.index_of(&ga).unwrap(),
        ],
    );
    check(p_sub.order() == 243, "|P| = 243")?;
    let pbar = proj.image_of(&p_sub);
    check(pbar.order() == 81, "|Pbar| = 81")?;

    Ok(Qd3Cover {
        g,
        gbar,
        proj,
        zbar,
        p: p_sub,
        pbar,
    })
}

/// The order-48 double cover of S4 realized as GL(2,3) on the 8 nonzero
/// vectors, with its central subgroup of order 2.
pub struct Qd2Cover {
    pub g: GroupHandle,
    pub z: Subgroup,
}

pub fn example_qd2_cover(caps: &Caps) -> Result<Qd2Cover> {
    let t = perm_from_mat2([[1, 1], [0, 1]], 3)?;
    let s = perm_from_mat2([[0, 1], [2, 0]], 3)?;
    let d = perm_from_mat2([[1, 0], [0, 2]], 3)?;
    let g = GroupHandle::from_generators(8, vec![t, s, d], caps)?;
    g.elements()?;
    check(g.order() == 48, "|GL(2,3)| = 48")?;
    let z = g.center();
    check(z.order() == 2, "center of order 2")?;

    // G/Z must be S4.
    let (quot, _) = g.quotient(&z, caps)?;
    let s4 = crate::corpus::sym(4, caps)?;
    let iso = crate::iso::is_isomorphic(&quot, &s4, caps)?;
    check(iso.is_some(), "G/Z isomorphic to S4")?;

    // Rank two, and no subgroup isomorphic to S4.
    check(crate::pgroup::p_rank(&g, 2, caps)? == 2, "rk_2(G) = 2")?;
    let subs = crate::sections::all_subgroups(&g, caps)?;
    for h in subs.iter().filter(|h| h.order() == 24) {
        if crate::iso::is_isomorphic(&h.to_group(), &s4, caps)?.is_some() {
            return Err(Error::ConstructionDefect("found an S4 subgroup".into()));
        }
    }
    Ok(Qd2Cover { g, z })
}
