//! Permutations of a finite point set `{0, …, degree-1}`.
//!
//! Products compose left to right: `(a * b).apply(i) == b.apply(a.apply(i))`,
//! so conjugation is written `x.conj(g) = g^-1 * x * g`. Points are 0-based
//! internally; disjoint-cycle text I/O is 1-based.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum supported degree (point images are stored as `u16`).
pub const MAX_DEGREE: usize = u16::MAX as usize;

/// A permutation given by its image table: point `i` maps to `images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    /// Builds a permutation from an image table, checking bijectivity.
    pub fn new(images: Vec<u16>) -> Result<Perm> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::BadPerm(format!("degree {n} out of range")));
        }
        let mut seen = vec![false; n];
        for &img in &images {
            let img = img as usize;
            if img >= n || seen[img] {
                return Err(Error::BadPerm("image table is not a bijection".into()));
            }
            seen[img] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// `self * other`: apply `self` first, then `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Perm { images }
    }

    /// `g^-1 * self * g`.
    pub fn conj(&self, g: &Perm) -> Perm {
        g.inverse().mul(self).mul(g)
    }

    /// `self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse().mul(&other.inverse()).mul(self).mul(other)
    }

    pub fn pow(&self, mut e: i64) -> Perm {
        let mut base = if e < 0 {
            e = -e;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Perm::identity(self.degree());
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, via the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord: u64 = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            ord = num::integer::lcm(ord, len);
        }
        ord
    }

    /// Smallest point moved by the permutation, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &j)| *i != j as usize).map(|(i, _)| i)
    }

    /// Extends the permutation to a larger degree, fixing the new points.
    pub fn extend_degree(&self, degree: usize) -> Perm {
        debug_assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u16..degree as u16);
        Perm { images }
    }

    /// Embeds into a larger point set with the moved points shifted by `offset`.
    pub fn shift(&self, offset: usize, degree: usize) -> Perm {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[offset + i] = (offset + j as usize) as u16;
        }
        Perm { images }
    }

    /// Parses 1-based disjoint-cycle notation, e.g. `(1 2 3)(4 5)`; identity is `()`.
    ///
    /// `degree` is the minimum degree of the result; the largest point mentioned
    /// may raise it.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
        let cycles = parse_cycle_points(text)?;
        let max_pt = cycles.iter().flatten().copied().max().unwrap_or(0);
        let degree = degree.max(max_pt).max(1);
        if degree > MAX_DEGREE {
            return Err(Error::BadPerm(format!("degree {degree} out of range")));
        }
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut touched = vec![false; degree];
        for cycle in &cycles {
            for window in 0..cycle.len() {
                let from = cycle[window] - 1;
                let to = cycle[(window + 1) % cycle.len()] - 1;
                if touched[from] {
                    return Err(Error::BadPerm(format!(
                        "point {} appears in two cycles",
                        from + 1
                    )));
                }
                touched[from] = true;
                images[from] = to as u16;
            }
        }
        Perm::new(images)
    }

    /// Formats as 1-based disjoint cycles ordered by least moved point; identity is `()`.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&(p + 1).to_string());
                first = false;
                p = self.apply(p);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

fn parse_cycle_points(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut number = String::new();
    let bad = |msg: &str| Error::BadPerm(format!("bad cycle notation {text:?}: {msg}"));

    for ch in text.chars() {
        match ch {
            '(' => {
                if current.is_some() {
                    return Err(bad("nested '('"));
                }
                current = Some(Vec::new());
            }
            ')' => {
                let mut cyc = current.take().ok_or_else(|| bad("unmatched ')'"))?;
                if !number.is_empty() {
                    cyc.push(number.parse::<usize>().map_err(|_| bad("bad point"))?);
                    number.clear();
                }
                if cyc.contains(&0) {
                    return Err(bad("points are 1-based"));
                }
                if cyc.len() == 1 {
                    return Err(bad("singleton cycle"));
                }
                if !cyc.is_empty() {
                    cycles.push(cyc);
                }
            }
            c if c.is_ascii_digit() => {
                if current.is_none() {
                    return Err(bad("digit outside parentheses"));
                }
                number.push(c);
            }
            c if c.is_whitespace() || c == ',' => {
                if let Some(cyc) = current.as_mut() {
                    if !number.is_empty() {
                        cyc.push(number.parse::<usize>().map_err(|_| bad("bad point"))?);
                        number.clear();
                    }
                }
            }
            _ => return Err(bad("unexpected character")),
        }
    }
    if current.is_some() {
        return Err(bad("unterminated cycle"));
    }
    Ok(cycles)
}

/// Splits a whitespace-separated list of cycle-notation permutations.
///
/// Whitespace inside parentheses separates points, whitespace at paren depth
/// zero separates permutations: `"(1 2 3)(4 5) (1 2)"` is two permutations.
pub fn split_perm_tokens(line: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in line.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    tokens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_order_is_left_to_right() {
        let a = Perm::parse_cycles("(1 2)", 3).unwrap();
        let b = Perm::parse_cycles("(2 3)", 3).unwrap();
        // apply a first: 0 -> 1, then b: 1 -> 2
        assert_eq!(a.mul(&b).apply(0), 2);
        assert_eq!(b.mul(&a).apply(0), 1);
    }

    #[test]
    fn inverse_and_order() {
        let c = Perm::parse_cycles("(1 2 3 4 5)", 5).unwrap();
        assert_eq!(c.order(), 5);
        assert!(c.mul(&c.inverse()).is_identity());
        let t = Perm::parse_cycles("(1 2)(3 4 5)", 5).unwrap();
        assert_eq!(t.order(), 6);
    }

    #[test]
    fn cycle_roundtrip() {
        for text in ["()", "(1 2)", "(1 2 3)(4 5)", "(2 4)(3 7 5)"] {
            let p = Perm::parse_cycles(text, 1).unwrap();
            let q = Perm::parse_cycles(&p.cycle_string(), p.degree()).unwrap();
            assert_eq!(p, q, "roundtrip of {text}");
        }
        assert_eq!(Perm::identity(4).cycle_string(), "()");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Perm::parse_cycles("(1 2", 2).is_err());
        assert!(Perm::parse_cycles("(0 1)", 2).is_err());
        assert!(Perm::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Perm::parse_cycles("(1)", 2).is_err());
    }

    #[test]
    fn split_tokens() {
        let toks = split_perm_tokens("(1 2 3)(4 5) (1 2) ()");
        assert_eq!(toks, vec!["(1 2 3)(4 5)", "(1 2)", "()"]);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let c = Perm::parse_cycles("(1 2 3 4)(5 6)", 6).unwrap();
        let mut acc = Perm::identity(6);
        for e in 0..10 {
            assert_eq!(c.pow(e), acc);
            acc = acc.mul(&c);
        }
        assert_eq!(c.pow(-1), c.inverse());
    }
}
