//! The built-in verification suite: every desk-checkable structural claim,
//! run in a fixed order with one record per check.

use std::time::Instant;

use num::BigInt;

use crate::caps::Caps;
use crate::character::{
    character_pipeline, induce, inner_product, is_p_effective, linear_characters, restrict,
    ClassFunction, Cyclotomic, Rational,
};
use crate::constructors;
use crate::corpus;
use crate::error::{Error, Result};
use crate::fusion::{controls_fusion, controls_fusion_oracle, sandwich_witnesses};
use crate::group::GroupHandle;
use crate::iso::is_isomorphic;
use crate::pgroup::{frattini, maximal_subgroups_pgroup, p_rank, sylow_subgroup};
use crate::report::{CheckRecord, Report, Verdict};
use crate::sections::{involves_qd, pprime_involves_qd};
use crate::subgroup::Subgroup;

/// Which sections to run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scope {
    All,
    Section(String),
}

impl Scope {
    pub fn parse(s: &str) -> Scope {
        if s == "all" {
            Scope::All
        } else {
            Scope::Section(s.to_string())
        }
    }

    fn includes(&self, section: &str) -> bool {
        match self {
            Scope::All => true,
            Scope::Section(s) => s == section,
        }
    }
}

pub const SECTIONS: &[&str] = &[
    "constructors",
    "lemma-2.1",
    "theorem-1.1",
    "example-2.2",
    "example-2.3",
    "fusion",
    "stellmacher",
    "characters",
];

struct Runner<'a> {
    caps: &'a Caps,
    report: Report,
    progress: Option<&'a mut dyn FnMut(&CheckRecord)>,
}

impl<'a> Runner<'a> {
    fn check(
        &mut self,
        section: &str,
        id: &str,
        description: &str,
        anchor: &str,
        f: impl FnOnce(&Caps) -> Result<(bool, String)>,
    ) {
        let t0 = Instant::now();
        let (verdict, witness) = match f(self.caps) {
            Ok((true, w)) => (Verdict::Pass, w),
            Ok((false, w)) => (Verdict::Fail, w),
            Err(e) if e.is_infeasible() => (Verdict::Skipped, format!("{e}")),
            Err(e) => (Verdict::Fail, format!("error: {e}")),
        };
        let record = CheckRecord {
            id: id.to_string(),
            section: section.to_string(),
            description: description.to_string(),
            anchor: anchor.to_string(),
            verdict,
            witness,
            elapsed: t0.elapsed(),
        };
        if let Some(cb) = self.progress.as_mut() {
            cb(&record);
        }
        self.report.checks.push(record);
    }

    /// Marks a whole section as skipped when a shared construction failed.
    fn skip_section(&mut self, section: &str, reason: &str) {
        self.check(section, "setup", "section setup", "", |_| {
            Err(Error::infeasible(reason.to_string(), 0, 0))
        });
    }
}

/// Runs the suite. Failures are report entries, never process errors.
pub fn verify_paper<'a>(
    scope: &Scope,
    caps: &'a Caps,
    progress: Option<&'a mut dyn FnMut(&CheckRecord)>,
) -> Report {
    let mut r = Runner {
        caps,
        report: Report::default(),
        progress,
    };
    if scope.includes("constructors") {
        section_constructors(&mut r);
    }
    if scope.includes("lemma-2.1") {
        section_lemma(&mut r);
    }
    if scope.includes("theorem-1.1") {
        section_theorem(&mut r);
    }
    if scope.includes("example-2.2") {
        section_example_p3(&mut r);
    }
    if scope.includes("example-2.3") {
        section_example_p2(&mut r);
    }
    if scope.includes("fusion") {
        section_fusion(&mut r);
    }
    if scope.includes("stellmacher") {
        section_stellmacher(&mut r);
    }
    if scope.includes("characters") {
        section_characters(&mut r);
    }
    r.report
}

fn order_check(g: Result<GroupHandle>, expected: u64) -> Result<(bool, String)> {
    let g = g?;
    Ok((g.order() == expected, format!("order={}", g.order())))
}

fn section_constructors(r: &mut Runner) {
    const SECTION: &str = "constructors";
    r.check(SECTION, "qd3-order", "|Qd(3)| = 216", "Qd(p):=(Z/p x Z/p) ⋊ SL(2,p)", |caps| {
        order_check(constructors::qd(3, caps), 216)
    });
    r.check(SECTION, "qd5-order", "|Qd(5)| = 3000", "Qd(p):=(Z/p x Z/p) ⋊ SL(2,p)", |caps| {
        order_check(constructors::qd(5, caps), 3000)
    });
    r.check(SECTION, "sl25-order", "|SL(2,5)| = 120", "usual action of 2x2 matrices", |caps| {
        order_check(constructors::sl2(5, caps), 120)
    });
    r.check(SECTION, "c53-order", "|C(5,3)| = 125", "|P|=p^3=|P/U|", |caps| {
        order_check(constructors::family_c(5, 3, caps), 125)
    });
    r.check(SECTION, "c54-order", "|C(5,4)| = 625", "[a, b] = c^{p^{r-3}}", |caps| {
        order_check(constructors::family_c(5, 4, caps), 625)
    });
    r.check(
        SECTION,
        "g54-orders",
        "|G(5,4;eps)| = 625 for both eps",
        "a^p=b^p=c^{p^{r-2}}=[b, c]=1",
        |caps| {
            let a = constructors::family_g_eps(5, 4, 1, caps)?;
            let b = constructors::family_g_eps(5, 4, constructors::least_nonresidue(5), caps)?;
            Ok((
                a.order() == 625 && b.order() == 625,
                format!("orders={},{}", a.order(), b.order()),
            ))
        },
    );
    r.check(
        SECTION,
        "presentations",
        "every defining relation of each family holds exactly",
        "C(p,r):=<a, b, c | ...>",
        |caps| {
            // constructors abort on any relation failure
            constructors::quaternion8(caps)?;
            constructors::extraspecial_exp_p(3, caps)?;
            constructors::extraspecial_exp_p(5, caps)?;
            constructors::metacyclic_m(5, 3, caps)?;
            constructors::family_c(3, 3, caps)?;
            constructors::family_c(5, 3, caps)?;
            constructors::family_c(5, 4, caps)?;
            constructors::family_g_eps(5, 4, 1, caps)?;
            constructors::family_g_eps(5, 4, 2, caps)?;
            Ok((true, "all relation sets validated at construction".into()))
        },
    );
}

fn section_lemma(r: &mut Runner) {
    const SECTION: &str = "lemma-2.1";
    r.check(
        SECTION,
        "sylow5-qd5",
        "Sylow 5-subgroup of Qd(5) is nonabelian of order 125 and exponent 5",
        "extra-special p-group of order p^3 and of exponent p",
        |caps| {
            let qd5 = constructors::qd(5, caps)?;
            let s = sylow_subgroup(&qd5, 5)?;
            let sh = s.to_group();
            let ok = s.order() == 125 && !sh.is_abelian() && sh.exponent() == 5;
            Ok((ok, format!("order={} exponent={}", s.order(), sh.exponent())))
        },
    );
    r.check(
        SECTION,
        "g54-cp-central",
        "c^5 lies in the center of G(5,4;eps) for both eps",
        "Thus, c^p in Z(P)",
        |caps| {
            let mut witness = String::new();
            for eps in [1, constructors::least_nonresidue(5)] {
                let g = constructors::family_g_eps(5, 4, eps, caps)?;
                let c5 = g.tag("c").expect("tag c").pow(5);
                let central = g.gens().iter().all(|x| c5.mul(x) == x.mul(&c5));
                if !central {
                    return Ok((false, format!("eps={eps}: c^5 not central")));
                }
                witness.push_str(&format!("eps={eps}: central; "));
            }
            Ok((true, witness))
        },
    );
    r.check(
        SECTION,
        "g54-quotient-order",
        "|P/<c^5>| = 125 for both eps",
        "P/<c^p> has order p^3",
        |caps| {
            let mut orders = Vec::new();
            for eps in [1, constructors::least_nonresidue(5)] {
                let g = constructors::family_g_eps(5, 4, eps, caps)?;
                let c5 = g.tag("c").expect("tag c").pow(5);
                let idx = g.index_of(&c5).expect("c^5 in table");
                let k = Subgroup::generated(&g, &[idx]);
                let (q, _) = g.quotient(&k, caps)?;
                orders.push(q.order());
            }
            Ok((orders.iter().all(|&o| o == 125), format!("orders={orders:?}")))
        },
    );
    r.check(
        SECTION,
        "g54-maximal-types",
        "maximal subgroups of G(5,4;eps) realize exactly C5xC25, C(5,3), M(5,3)",
        "either A=<b, c>, or A=<b, c^p, ac^i>",
        |caps| {
            let c5xc25 = GroupHandle::direct_product(
                &constructors::cyclic(5, caps)?,
                &constructors::cyclic(25, caps)?,
                caps,
            )?;
            let c53 = constructors::family_c(5, 3, caps)?;
            let m53 = constructors::metacyclic_m(5, 3, caps)?;
            let mut witness = String::new();
            for eps in [1, constructors::least_nonresidue(5)] {
                let g = constructors::family_g_eps(5, 4, eps, caps)?;
                let maxes = maximal_subgroups_pgroup(&g.full_subgroup(), 5, caps)?;
                let mut counts = [0usize; 4];
                for m in &maxes {
                    let mh = m.to_group();
                    let ty = if is_isomorphic(&mh, &c5xc25, caps)?.is_some() {
                        0
                    } else if is_isomorphic(&mh, &c53, caps)?.is_some() {
                        1
                    } else if is_isomorphic(&mh, &m53, caps)?.is_some() {
                        2
                    } else {
                        3
                    };
                    counts[ty] += 1;
                }
                witness.push_str(&format!("eps={eps}: abelian/C/M/other={counts:?}; "));
                if counts[0] == 0 || counts[1] == 0 || counts[2] == 0 || counts[3] != 0 {
                    return Ok((false, witness));
                }
            }
            Ok((true, witness))
        },
    );
    r.check(
        SECTION,
        "esl25-rank",
        "rk_5 of the extraspecial-by-SL(2,5) group is 3",
        "<x, b, z> iso (Z/p)^3",
        |caps| {
            let g = constructors::extraspecial_sl2(5, caps)?;
            let rank = p_rank(&g, 5, caps)?;
            Ok((rank == 3, format!("order={} rank={rank}", g.order())))
        },
    );
}

fn section_theorem(r: &mut Runner) {
    const SECTION: &str = "theorem-1.1";
    let qd5 = match constructors::qd(5, r.caps) {
        Ok(g) => g,
        Err(e) => {
            r.skip_section(SECTION, &format!("Qd(5) construction failed: {e}"));
            return;
        }
    };
    let cases: Vec<(&str, Result<GroupHandle>)> = vec![
        ("qd5", Ok(qd5.clone())),
        (
            "qd5xC2",
            constructors::cyclic(2, r.caps)
                .and_then(|c| GroupHandle::direct_product(&qd5, &c, r.caps)),
        ),
        (
            "qd5xC3",
            constructors::cyclic(3, r.caps)
                .and_then(|c| GroupHandle::direct_product(&qd5, &c, r.caps)),
        ),
    ];
    for (name, g) in cases {
        let id = format!("iff-{name}");
        r.check(
            SECTION,
            &id,
            "rank is 2, and involving Qd(5) is equivalent to 5'-involving it",
            "involves Qd(p) if and only if",
            |caps| {
                let g = g?;
                let rank = p_rank(&g, 5, caps)?;
                if rank != 2 {
                    return Ok((false, format!("rank={rank}")));
                }
                let inv = involves_qd(&g, 5, caps)?;
                let ppr = pprime_involves_qd(&g, 5, caps)?;
                let witnesses_valid = inv.as_ref().is_none_or(|w| w.validate(5))
                    && ppr.as_ref().is_none_or(|w| w.validate(5));
                let equivalent = inv.is_some() == ppr.is_some();
                Ok((
                    equivalent && witnesses_valid,
                    format!(
                        "order={} rank=2 involves={} pprime={}",
                        g.order(),
                        inv.is_some(),
                        ppr.is_some()
                    ),
                ))
            },
        );
    }
}

fn section_example_p3(r: &mut Runner) {
    const SECTION: &str = "example-2.2";
    let cover = match constructors::example_qd3_cover(r.caps) {
        Ok(c) => c,
        Err(e) => {
            r.skip_section(SECTION, &format!("cover construction failed: {e}"));
            return;
        }
    };
    r.check(SECTION, "gbar-order", "|Gbar| = 648 = 3 |Qd(3)|", "|Gbar| = 3|Qd(3)|", |_| {
        Ok((cover.gbar.order() == 648, format!("order={}", cover.gbar.order())))
    });
    r.check(
        SECTION,
        "gbar-rank",
        "rk_3(Gbar) = 2",
        "rank equal to 2, therefore rk_3(Gbar)=2",
        |caps| {
            let rank = p_rank(&cover.gbar, 3, caps)?;
            Ok((rank == 2, format!("rank={rank}")))
        },
    );
    r.check(
        SECTION,
        "frattini-p",
        "Phi(P) = <z, x, a^3> with P/Phi(P) iso C3 x C3",
        "generated by the elements z, x, a^3",
        |caps| {
            let phi = frattini(&cover.p, 3)?;
            let g = &cover.g;
            let z = g.tag_idx("z");
            let x = g.tag_idx("x");
            let a3 = g.index_of(&g.tag("a").unwrap().pow(3)).expect("a^3");
            let expected = Subgroup::generated(g, &[z, x, a3]);
            if phi.elems() != expected.elems() {
                return Ok((false, format!("Phi order {}, <z,x,a^3> order {}", phi.order(), expected.order())));
            }
            let ph = cover.p.to_group();
            let phi_local: Vec<u32> = phi
                .elems()
                .iter()
                .map(|&i| cover.p.parent_to_local(i).expect("Phi inside P"))
                .collect();
            let (quot, _) = ph.quotient(&Subgroup::from_sorted_elements(&ph, phi_local), caps)?;
            let v9 = constructors::elem_abelian(3, 2, caps)?;
            let iso = is_isomorphic(&quot, &v9, caps)?;
            Ok((
                iso.is_some(),
                format!("Phi order={} quotient iso C3xC3={}", phi.order(), iso.is_some()),
            ))
        },
    );
    r.check(
        SECTION,
        "maximal-count",
        "P has exactly 4 maximal subgroups",
        "there are 4 possibilities",
        |caps| {
            let maxes = maximal_subgroups_pgroup(&cover.p, 3, caps)?;
            Ok((maxes.len() == 4, format!("count={}", maxes.len())))
        },
    );
    r.check(
        SECTION,
        "abelian-maximal",
        "the unique abelian maximal subgroup of P is <z, x, a> iso C3 x C3 x C9",
        "M is isomorphic to C3 x C3 x C9",
        |caps| {
            let maxes = maximal_subgroups_pgroup(&cover.p, 3, caps)?;
            let abelians: Vec<&Subgroup> =
                maxes.iter().filter(|m| m.to_group().is_abelian()).collect();
            if abelians.len() != 1 {
                return Ok((false, format!("{} abelian maximal subgroups", abelians.len())));
            }
            let g = &cover.g;
            let expected = Subgroup::generated(g, &[g.tag_idx("z"), g.tag_idx("x"), g.tag_idx("a")]);
            if abelians[0].elems() != expected.elems() {
                return Ok((false, "abelian maximal is not <z, x, a>".into()));
            }
            let reference = GroupHandle::direct_product(
                &constructors::elem_abelian(3, 2, caps)?,
                &constructors::cyclic(9, caps)?,
                caps,
            )?;
            let iso = is_isomorphic(&abelians[0].to_group(), &reference, caps)?;
            Ok((iso.is_some(), format!("order={} iso={}", abelians[0].order(), iso.is_some())))
        },
    );
    r.check(
        SECTION,
        "abelian-maximal-image",
        "the image of <z, x, a> in Gbar is iso C3 x C9",
        "isomorphic to C3 x C9",
        |caps| {
            let g = &cover.g;
            let m = Subgroup::generated(g, &[g.tag_idx("z"), g.tag_idx("x"), g.tag_idx("a")]);
            let mbar = cover.proj.image_of(&m);
            let reference = GroupHandle::direct_product(
                &constructors::cyclic(3, caps)?,
                &constructors::cyclic(9, caps)?,
                caps,
            )?;
            let iso = is_isomorphic(&mbar.to_group(), &reference, caps)?;
            Ok((iso.is_some(), format!("order={} iso={}", mbar.order(), iso.is_some())))
        },
    );
    r.check(
        SECTION,
        "gbar-mod-zbar",
        "Gbar/<zbar> is isomorphic to Qd(3)",
        "Gbar/<zbar> iso Qd(3)",
        |caps| {
            let zbar = cover.gbar.index_of(&cover.zbar).expect("zbar");
            let k = Subgroup::generated(&cover.gbar, &[zbar]);
            let (q, _) = cover.gbar.quotient(&k, caps)?;
            let qd3 = constructors::qd(3, caps)?;
            let iso = is_isomorphic(&q, &qd3, caps)?;
            Ok((iso.is_some(), format!("quotient order={} iso={}", q.order(), iso.is_some())))
        },
    );
    r.check(
        SECTION,
        "gbar-involves",
        "Gbar involves Qd(3), with witness (Gbar, <zbar>)",
        "hence Gbar involves Qd(3)",
        |caps| {
            let w = match involves_qd(&cover.gbar, 3, caps)? {
                Some(w) => w,
                None => return Ok((false, "no witness".into())),
            };
            let zbar = cover.gbar.index_of(&cover.zbar).expect("zbar");
            let zsub = Subgroup::generated(&cover.gbar, &[zbar]);
            let ok = w.validate(3)
                && w.h.order() == cover.gbar.order()
                && w.k.elems() == zsub.elems();
            Ok((ok, format!("H order={} K order={}", w.h.order(), w.k.order())))
        },
    );
    r.check(
        SECTION,
        "gbar-not-pprime",
        "Gbar does not 3'-involve Qd(3) (exhaustive subgroup search)",
        "does not 3'-involve Qd(3)",
        |caps| {
            let w = pprime_involves_qd(&cover.gbar, 3, caps)?;
            let lattice = crate::sections::all_subgroups(&cover.gbar, caps)?;
            let n216 = lattice.iter().filter(|h| h.order() == 216).count();
            Ok((
                w.is_none(),
                format!("pprime witness={} order-216 subgroups examined={n216}", w.is_some()),
            ))
        },
    );
}

fn section_example_p2(r: &mut Runner) {
    const SECTION: &str = "example-2.3";
    r.check(
        SECTION,
        "cover-order",
        "the double cover has order 48 with central Z of order 2",
        "central extension 1 -> Z/2 -> G -> S4 -> 1",
        |caps| {
            let c = constructors::example_qd2_cover(caps)?;
            Ok((
                c.g.order() == 48 && c.z.order() == 2,
                format!("order={} |Z|={}", c.g.order(), c.z.order()),
            ))
        },
    );
    r.check(SECTION, "cover-quotient-s4", "G/Z is isomorphic to S4", "with extension class y_2", |caps| {
        let c = constructors::example_qd2_cover(caps)?;
        let (q, _) = c.g.quotient(&c.z, caps)?;
        let s4 = corpus::sym(4, caps)?;
        let iso = is_isomorphic(&q, &s4, caps)?;
        Ok((iso.is_some(), format!("iso={}", iso.is_some())))
    });
    r.check(SECTION, "cover-rank", "rk_2(G) = 2", "hence rk(G) = 2", |caps| {
        let c = constructors::example_qd2_cover(caps)?;
        let rank = p_rank(&c.g, 2, caps)?;
        Ok((rank == 2, format!("rank={rank}")))
    });
    r.check(
        SECTION,
        "cover-no-s4",
        "G has no subgroup isomorphic to S4",
        "does not include Qd(2) iso S4 as a subgroup",
        |caps| {
            let c = constructors::example_qd2_cover(caps)?;
            let s4 = corpus::sym(4, caps)?;
            let subs = crate::sections::all_subgroups(&c.g, caps)?;
            let mut examined = 0;
            for h in subs.iter().filter(|h| h.order() == 24) {
                examined += 1;
                if is_isomorphic(&h.to_group(), &s4, caps)?.is_some() {
                    return Ok((false, "found an S4 subgroup".into()));
                }
            }
            Ok((true, format!("order-24 subgroups examined={examined}")))
        },
    );
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while n > 1 {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    out
}

fn section_fusion(r: &mut Runner) {
    const SECTION: &str = "fusion";
    r.check(
        SECTION,
        "oracle-agreement",
        "fusion-control verdicts match the brute-force double-coset oracle on the corpus",
        "there exist h in H and c in C_G(P)",
        |caps| {
            let mut comparisons = 0;
            for entry in corpus::fusion_corpus(caps)? {
                let g = &entry.group;
                if g.order() > 120 {
                    continue;
                }
                for p in prime_divisors(g.order()) {
                    let s = sylow_subgroup(g, p)?;
                    let ns = g.normalizer(&s)?;
                    for h in [&ns, &s] {
                        let primary = controls_fusion(g, &s, h, caps)?;
                        let oracle = controls_fusion_oracle(g, &s, h, caps)?;
                        if primary.controls != oracle.controls {
                            return Ok((
                                false,
                                format!("disagreement on {} p={p}", entry.name),
                            ));
                        }
                        if let (Some((p1, g1)), Some((p2, g2))) =
                            (&primary.counterexample, &oracle.counterexample)
                        {
                            if p1.elems() != p2.elems() || g1 != g2 {
                                return Ok((
                                    false,
                                    format!("counterexamples differ on {} p={p}", entry.name),
                                ));
                            }
                        }
                        comparisons += 1;
                    }
                }
            }
            Ok((true, format!("comparisons={comparisons}")))
        },
    );
    r.check(
        SECTION,
        "burnside-abelian-sylow",
        "whenever the Sylow subgroup is abelian, its normalizer controls fusion",
        "controls G-fusion in S",
        |caps| {
            let mut cases = 0;
            for entry in corpus::fusion_corpus(caps)? {
                let g = &entry.group;
                if g.order() > 120 {
                    continue;
                }
                for p in prime_divisors(g.order()) {
                    let s = sylow_subgroup(g, p)?;
                    if !s.to_group().is_abelian() {
                        continue;
                    }
                    let ns = g.normalizer(&s)?;
                    let verdict = controls_fusion(g, &s, &ns, caps)?;
                    if !verdict.controls {
                        return Ok((false, format!("failed on {} p={p}", entry.name)));
                    }
                    cases += 1;
                }
            }
            Ok((true, format!("cases={cases}")))
        },
    );
}

fn section_stellmacher(r: &mut Runner) {
    const SECTION: &str = "stellmacher";
    let corpus = match corpus::qd_free_corpus(r.caps) {
        Ok(c) => c,
        Err(e) => {
            r.skip_section(SECTION, &format!("corpus construction failed: {e}"));
            return;
        }
    };
    for (entry, p) in corpus {
        let id = format!("sandwich-{}-p{}", entry.name.to_lowercase().replace(':', ""), p);
        let g = entry.group.clone();
        r.check(
            SECTION,
            &id,
            "a characteristic sandwich subgroup with fusion-controlling normalizer exists",
            "there exists a characteristic subgroup W(S)",
            |caps| {
                let td = crate::pgroup::thompson(&sylow_subgroup(&g, p)?, p, caps)?;
                let wits = sandwich_witnesses(&g, p, caps)?;
                if wits.is_empty() {
                    return Ok((false, "no witness".into()));
                }
                let w = &wits[0];
                let sandwiched =
                    td.omega_zs.is_subgroup_of(&w.w) && w.w.is_subgroup_of(&td.omega_zje);
                Ok((
                    w.characteristic_certified && sandwiched,
                    format!(
                        "witnesses={} |W|={} |N_G(W)|={}",
                        wits.len(),
                        w.w.order(),
                        w.normalizer.order()
                    ),
                ))
            },
        );
    }
}

fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && *r >= rational_int(0)
}

fn section_characters(r: &mut Runner) {
    const SECTION: &str = "characters";
    r.check(
        SECTION,
        "frobenius-reciprocity",
        "[Ind rho, Ind sigma]_N = [rho, Res Ind sigma]_Z for all linear pairs on C3 <= S3",
        "By Frobenius reciprocity",
        |caps| {
            let s3 = corpus::sym(3, caps)?;
            let z = sylow_subgroup(&s3, 3)?;
            let zh = z.to_group();
            let chars = linear_characters(&zh)?;
            let mut pairs = 0;
            for rho in &chars {
                let ind_rho = induce(rho, &z)?;
                for sigma in &chars {
                    let ind_sigma = induce(sigma, &z)?;
                    let lhs = inner_product(&ind_rho, &ind_sigma)?;
                    let res = restrict(&ind_sigma, &z)?;
                    let res_on_zh = ClassFunction::from_element_values(
                        &zh,
                        (0..zh.order() as u32)
                            .map(|i| res.value_at_idx(i).clone())
                            .collect(),
                    )?;
                    let rhs = inner_product(rho, &res_on_zh)?;
                    if lhs != rhs {
                        return Ok((false, "reciprocity mismatch".into()));
                    }
                    pairs += 1;
                }
            }
            Ok((true, format!("pairs={pairs}")))
        },
    );
    r.check(
        SECTION,
        "res-ind-normal",
        "Res_Z Ind_Z^N 1 = [N:Z] * 1 for normal Z (C3 in S3, V4 in A4)",
        "Res^N_Z Ind_Z^N 1=[N:Z] 1",
        |caps| {
            let fixtures: Vec<(GroupHandle, u64)> =
                vec![(corpus::sym(3, caps)?, 3), (corpus::alt(4, caps)?, 2)];
            for (n, p) in fixtures {
                let z = sylow_subgroup(&n, p)?;
                if !z.is_normal() {
                    return Ok((false, "fixture subgroup not normal".into()));
                }
                let index = n.order() / z.order();
                let ind = induce(&ClassFunction::trivial(&z.to_group()), &z)?;
                let res = restrict(&ind, &z)?;
                for i in 0..res.group().order() as u32 {
                    if res.value_at_idx(i) != &Cyclotomic::from_integer(1, index as i64) {
                        return Ok((false, "restriction is not [N:Z] * 1".into()));
                    }
                }
            }
            Ok((true, "both fixtures".into()))
        },
    );
    r.check(
        SECTION,
        "a4-fixture",
        "Ind from a nontrivial linear of V4 to A4 is irreducible of degree 3 with [Res_E, 1] = 0",
        "So, C_V(Z)=0",
        |caps| {
            let a4 = corpus::alt(4, caps)?;
            let v4 = sylow_subgroup(&a4, 2)?;
            let rho = linear_characters(&v4.to_group())?[1].clone();
            let ind = induce(&rho, &v4)?;
            let degree = ind.degree_rational()?;
            let norm = inner_product(&ind, &ind)?;
            let res = restrict(&ind, &v4)?;
            let pairing = inner_product(&res, &ClassFunction::trivial(res.group()))?;
            let eff = is_p_effective(&ind, 2, caps)?;
            let ok = degree == rational_int(3)
                && norm == rational_int(1)
                && pairing == rational_int(0)
                && eff.effective;
            Ok((
                ok,
                format!("degree={degree} [chi,chi]={norm} [Res,1]={pairing} effective={}", eff.effective),
            ))
        },
    );
    let corpus_list = match corpus::qd_free_corpus(r.caps) {
        Ok(c) => c,
        Err(e) => {
            r.skip_section(SECTION, &format!("corpus construction failed: {e}"));
            return;
        }
    };
    for (entry, p) in corpus_list {
        let id = format!("pipeline-{}-p{}", entry.name.to_lowercase().replace(':', ""), p);
        let g = entry.group.clone();
        r.check(
            SECTION,
            &id,
            "the induced character is p-effective and respects fusion, with integral inner products",
            "[chi|_E , 1_E]=0",
            |caps| {
                let data = character_pipeline(&g, p, caps)?;
                let vv = inner_product(&data.v, &data.v)?;
                let cc = inner_product(&data.chi_s, &data.chi_s)?;
                let integral = is_nonneg_integer(&vv) && is_nonneg_integer(&cc);
                // every maximal-rank elementary abelian subgroup of N contains W
                let nh = data.n.to_group();
                let ns = sylow_subgroup(&nh, p)?;
                let mut containment = true;
                for e in crate::pgroup::max_elementary_abelians(&ns, p, caps)? {
                    let lifted: Vec<u32> = e
                        .elems()
                        .iter()
                        .map(|&i| data.n.local_to_parent(i))
                        .collect();
                    if !data.witness.w.elems().iter().all(|x| lifted.binary_search(x).is_ok()) {
                        containment = false;
                    }
                }
                let ok = data.p_effective
                    && data.respects
                    && data.hypothesis_qd_free == Some(true)
                    && integral
                    && containment;
                Ok((
                    ok,
                    format!(
                        "deg V={} effective={} respects={} [V,V]={vv} W-containment={containment}",
                        data.v.degree_rational()?,
                        data.p_effective,
                        data.respects
                    ),
                ))
            },
        );
    }
}
