//! The line-oriented group-description format used by the CLI.
//!
//! A file is a sequence of named definitions; the last one is the result.
//!
//! ```text
//! # comment
//! name v
//! family qd 3
//!
//! name g
//! generators
//! (1 2 3)
//! (1 2)
//!
//! name q
//! quotient g (1 2 3)
//!
//! name p
//! product v g
//! ```
//!
//! Permutations use 1-based disjoint-cycle notation; the identity is `()`.
//! `quotient` takes the base group's name followed by generators of the
//! normal subgroup, inline (cycles of one permutation are written without
//! separating spaces between the closing and opening parentheses).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::caps::Caps;
use crate::constructors::{make_group, Family, FamilySpec};
use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::perm::{split_perm_tokens, Perm};
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecDef {
    Family(FamilySpec),
    Generators(Vec<String>),
    Quotient { base: String, kernel_gens: Vec<String> },
    Product(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecStatement {
    pub name: String,
    pub def: SpecDef,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupSpecFile {
    pub statements: Vec<SpecStatement>,
}

impl GroupSpecFile {
    pub fn parse(text: &str) -> Result<GroupSpecFile> {
        let mut statements = Vec::new();
        let mut pending_name: Option<String> = None;
        let mut auto = 0usize;
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let mut i = 0;
        let err = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        while i < lines.len() {
            let (lineno, line) = lines[i];
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap();
            match keyword {
                "name" => {
                    let id = words
                        .next()
                        .ok_or_else(|| err(lineno, "name needs an identifier"))?;
                    if words.next().is_some() {
                        return Err(err(lineno, "trailing tokens after name"));
                    }
                    if pending_name.is_some() {
                        return Err(err(lineno, "two name lines in a row"));
                    }
                    pending_name = Some(id.to_string());
                    i += 1;
                }
                "family" | "generators" | "quotient" | "product" => {
                    let name = pending_name.take().unwrap_or_else(|| {
                        auto += 1;
                        format!("g{auto}")
                    });
                    let def = match keyword {
                        "family" => {
                            let fam_tok = words
                                .next()
                                .ok_or_else(|| err(lineno, "family needs a family name"))?;
                            let family: Family = fam_tok
                                .parse()
                                .map_err(|e| err(lineno, &format!("{e}")))?;
                            let params: Vec<u64> = words
                                .map(|w| {
                                    w.parse::<u64>()
                                        .map_err(|_| err(lineno, &format!("bad parameter {w:?}")))
                                })
                                .collect::<Result<_>>()?;
                            i += 1;
                            SpecDef::Family(FamilySpec { family, params })
                        }
                        "generators" => {
                            if words.next().is_some() {
                                return Err(err(lineno, "generators takes no inline arguments"));
                            }
                            i += 1;
                            let mut perms = Vec::new();
                            while i < lines.len() && lines[i].1.starts_with('(') {
                                let (pl, ptext) = lines[i];
                                Perm::parse_cycles(ptext, 1)
                                    .map_err(|e| err(pl, &format!("{e}")))?;
                                perms.push(ptext.to_string());
                                i += 1;
                            }
                            if perms.is_empty() {
                                return Err(err(lineno, "generators needs at least one permutation line"));
                            }
                            SpecDef::Generators(perms)
                        }
                        "quotient" => {
                            let base = words
                                .next()
                                .ok_or_else(|| err(lineno, "quotient needs a base group name"))?
                                .to_string();
                            let rest: String = words.collect::<Vec<_>>().join(" ");
                            let kernel_gens = split_perm_tokens(&rest);
                            if kernel_gens.is_empty() {
                                return Err(err(lineno, "quotient needs kernel generators"));
                            }
                            for t in &kernel_gens {
                                Perm::parse_cycles(t, 1).map_err(|e| err(lineno, &format!("{e}")))?;
                            }
                            i += 1;
                            SpecDef::Quotient { base, kernel_gens }
                        }
                        "product" => {
                            let a = words
                                .next()
                                .ok_or_else(|| err(lineno, "product needs two group names"))?;
                            let b = words
                                .next()
                                .ok_or_else(|| err(lineno, "product needs two group names"))?;
                            if words.next().is_some() {
                                return Err(err(lineno, "trailing tokens after product"));
                            }
                            i += 1;
                            SpecDef::Product(a.to_string(), b.to_string())
                        }
                        _ => unreachable!(),
                    };
                    statements.push(SpecStatement { name, def });
                }
                other => return Err(err(lineno, &format!("unknown keyword {other:?}"))),
            }
        }
        if pending_name.is_some() {
            return Err(Error::Parse {
                line: text.lines().count(),
                msg: "dangling name line".into(),
            });
        }
        if statements.is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: "empty group specification".into(),
            });
        }
        Ok(GroupSpecFile { statements })
    }

    /// Canonical text form; `parse(serialize(f)) == canonicalize(f)`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (i, st) in self.statements.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "name {}", st.name);
            match &st.def {
                SpecDef::Family(f) => {
                    let _ = writeln!(out, "family {f}");
                }
                SpecDef::Generators(perms) => {
                    let _ = writeln!(out, "generators");
                    for p in perms {
                        let canon = Perm::parse_cycles(p, 1).expect("validated").cycle_string();
                        let _ = writeln!(out, "{canon}");
                    }
                }
                SpecDef::Quotient { base, kernel_gens } => {
                    let canon: Vec<String> = kernel_gens
                        .iter()
                        .map(|t| Perm::parse_cycles(t, 1).expect("validated").cycle_string())
                        .collect();
                    let _ = writeln!(out, "quotient {} {}", base, canon.join(" "));
                }
                SpecDef::Product(a, b) => {
                    let _ = writeln!(out, "product {a} {b}");
                }
            }
        }
        out
    }

    /// Builds every named group; returns the map and the result (the last
    /// definition).
    pub fn build(&self, caps: &Caps) -> Result<(BTreeMap<String, GroupHandle>, GroupHandle)> {
        let mut map: BTreeMap<String, GroupHandle> = BTreeMap::new();
        let mut last: Option<GroupHandle> = None;
        for st in &self.statements {
            let lookup = |name: &str| -> Result<GroupHandle> {
                map.get(name)
                    .cloned()
                    .ok_or_else(|| Error::BadParams(format!("unknown group name {name:?}")))
            };
            let g = match &st.def {
                SpecDef::Family(f) => make_group(f, caps)?,
                SpecDef::Generators(perm_texts) => {
                    let mut degree = 1;
                    let mut perms = Vec::new();
                    for t in perm_texts {
                        let p = Perm::parse_cycles(t, 1)?;
                        degree = degree.max(p.degree());
                        perms.push(p);
                    }
                    let perms = perms.into_iter().map(|p| p.extend_degree(degree)).collect();
                    GroupHandle::from_generators(degree, perms, caps)?
                }
                SpecDef::Quotient { base, kernel_gens } => {
                    let base = lookup(base)?;
                    let mut idxs = Vec::new();
                    for t in kernel_gens {
                        let p = Perm::parse_cycles(t, base.degree())?;
                        if p.degree() != base.degree() {
                            return Err(Error::BadParams(format!(
                                "kernel generator {t} exceeds the base group degree"
                            )));
                        }
                        let idx = base
                            .index_of(&p)
                            .ok_or_else(|| Error::NotInGroup(t.to_string()))?;
                        idxs.push(idx);
                    }
                    let k = Subgroup::generated(&base, &idxs);
                    let (q, _) = base.quotient(&k, caps)?;
                    q
                }
                SpecDef::Product(a, b) => {
                    GroupHandle::direct_product(&lookup(a)?, &lookup(b)?, caps)?
                }
            };
            map.insert(st.name.clone(), g.clone());
            last = Some(g);
        }
        Ok((map, last.expect("nonempty spec")))
    }
}

/// Convenience: parse and build, returning the resulting group.
pub fn parse_group_spec(text: &str, caps: &Caps) -> Result<GroupHandle> {
    let (_, g) = GroupSpecFile::parse(text)?.build(caps)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_specs() {
        let caps = Caps::default();
        let g = parse_group_spec("family qd 3\n", &caps).unwrap();
        assert_eq!(g.order(), 216);
        let g = parse_group_spec("family C 5 3\n", &caps).unwrap();
        assert_eq!(g.order(), 125);
    }

    #[test]
    fn generator_block() {
        let caps = Caps::default();
        let g = parse_group_spec("generators\n(1 2 3)\n(1 2)\n", &caps).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn named_pipeline() {
        let caps = Caps::default();
        let text = "name a\nfamily cyclic 3\n\nname b\nfamily cyclic 4\n\nname p\nproduct a b\n";
        let (map, last) = GroupSpecFile::parse(text).unwrap().build(&caps).unwrap();
        assert_eq!(map["a"].order(), 3);
        assert_eq!(last.order(), 12);
    }

    #[test]
    fn quotient_def() {
        let caps = Caps::default();
        let text = "name s4\ngenerators\n(1 2)\n(1 2 3 4)\n\nname q\nquotient s4 (1 2)(3 4) (1 3)(2 4)\n";
        let g = parse_group_spec(text, &caps).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let caps = Caps::default();
        let text = "name s4\ngenerators\n(1 2)\n(1 2 3 4)\n\nname q\nquotient s4 (1 2)\n";
        assert!(parse_group_spec(text, &caps).is_err());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = GroupSpecFile::parse("family qd 3\nbogus line\n").unwrap_err();
        match e {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn roundtrip_is_identity_on_canonical_form() {
        let text = "name a\nfamily qd 3\n\nname b\ngenerators\n(1 2 3)(4 5)\n(1 2)\n\nname q\nquotient b (4 5)\n\nname p\nproduct a b\n";
        let f = GroupSpecFile::parse(text).unwrap();
        let canon = f.serialize();
        let f2 = GroupSpecFile::parse(&canon).unwrap();
        assert_eq!(f2.serialize(), canon);
        assert_eq!(f, f2);
    }
}
