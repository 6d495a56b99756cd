//! Cross-module invariants and frozen fixtures that go beyond the
//! per-module unit tests.

use qdp_core::caps::Caps;
use qdp_core::character::{induce, inner_product, linear_characters, ClassFunction, Rational};
use qdp_core::constructors;
use qdp_core::corpus;
use qdp_core::fusion::{controls_fusion, controls_fusion_oracle, p_core};
use qdp_core::iso::automorphism_group;
use qdp_core::pgroup::{max_elementary_abelians, sylow_subgroup, thompson};
use qdp_core::sections::{all_subgroups, involves_qd, normal_subgroups, pprime_involves_qd};
use qdp_core::{GroupHandle, Perm, Subgroup};

fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[test]
fn involvement_is_monotone_on_corpus_pairs() {
    let caps = Caps::default();
    // S4 <= S5 at p = 2
    let s4 = corpus::sym(4, &caps).unwrap();
    let s5 = corpus::sym(5, &caps).unwrap();
    assert!(involves_qd(&s4, 2, &caps).unwrap().is_some());
    assert!(involves_qd(&s5, 2, &caps).unwrap().is_some());
    // Qd(3) <= Qd(3) x C2 at p = 3
    let qd3 = constructors::qd(3, &caps).unwrap();
    let prod = GroupHandle::direct_product(&qd3, &constructors::cyclic(2, &caps).unwrap(), &caps)
        .unwrap();
    assert!(involves_qd(&qd3, 3, &caps).unwrap().is_some());
    let w = involves_qd(&prod, 3, &caps).unwrap().expect("monotone");
    assert!(w.validate(3));
}

#[test]
fn pprime_involvement_implies_involvement() {
    let caps = Caps::default();
    let qd3 = constructors::qd(3, &caps).unwrap();
    for factor in [2usize, 3] {
        let g = GroupHandle::direct_product(
            &qd3,
            &constructors::cyclic(factor, &caps).unwrap(),
            &caps,
        )
        .unwrap();
        if pprime_involves_qd(&g, 3, &caps).unwrap().is_some() {
            assert!(involves_qd(&g, 3, &caps).unwrap().is_some());
        }
    }
}

/// An order-p element of the embedded SL(2,p) copy acting on the
/// extraspecial part by fixing one generator and shifting the other, which
/// together with that generator and the center spans an elementary abelian
/// subgroup of order p^3.
#[test]
fn winter_style_element_exists_in_esl2() {
    let caps = Caps::default();
    for p in [3u64, 5] {
        let g = constructors::extraspecial_sl2(p, &caps).unwrap();
        let x = g.tag_idx("x");
        let y = g.tag_idx("y");
        let z = g.tag_idx("z");
        let l = Subgroup::generated(&g, &[g.tag_idx("s"), g.tag_idx("t")]);
        assert_eq!(l.order(), p * (p * p - 1));
        let found = l.elems().iter().copied().find(|&w| {
            g.element_order(w) == p
                && g.conj_idx(y, w) == y
                && (0..p as i64).any(|c| {
                    let zc = g.index_of(&g.perm(z).pow(c)).unwrap();
                    g.conj_idx(x, w) == g.mul_idx(g.mul_idx(x, y), zc)
                })
        });
        let w = found.expect("a transvection-like element exists in L");
        let span = Subgroup::generated(&g, &[w, y, z]);
        assert_eq!(span.order(), p.pow(3), "p = {p}");
        assert!(span.to_group().is_abelian());
        assert_eq!(span.to_group().exponent(), p);
    }
}

#[test]
fn thompson_subgroups_are_characteristic() {
    let caps = Caps::default();
    let cases: Vec<(GroupHandle, u64)> = vec![
        (constructors::quaternion8(&caps).unwrap(), 2),
        (constructors::extraspecial_exp_p(3, &caps).unwrap(), 3),
        (
            sylow_subgroup(&constructors::example_qd2_cover(&caps).unwrap().g, 2)
                .unwrap()
                .to_group(),
            2,
        ),
        (constructors::metacyclic_m(3, 3, &caps).unwrap(), 3),
    ];
    for (s, p) in cases {
        let td = thompson(&s.full_subgroup(), p, &caps).unwrap();
        let auts = automorphism_group(&s, &caps).unwrap();
        for sub in [&td.j, &td.je] {
            for aut in auts.iter() {
                assert!(sub
                    .elems()
                    .iter()
                    .all(|&e| sub.contains_idx(aut.apply_idx(e))));
            }
        }
    }
}

#[test]
fn je_of_cyclic_nine_follows_the_definition() {
    let caps = Caps::default();
    let c9 = constructors::cyclic(9, &caps).unwrap();
    let td = thompson(&c9.full_subgroup(), 3, &caps).unwrap();
    assert_eq!(td.j.order(), 9);
    // the largest elementary abelian subgroup of C9 is its C3
    assert_eq!(td.max_elem_abelian_order, 3);
    assert_eq!(td.je.order(), 3);
}

/// Regression fixture: in the order-48 double cover, the Sylow 2-subgroup
/// does not control its own fusion, and the first counterexample
/// re-validates against the independent oracle.
#[test]
fn qd2_cover_fusion_fixture() {
    let caps = Caps::default();
    let c = constructors::example_qd2_cover(&caps).unwrap();
    let s = sylow_subgroup(&c.g, 2).unwrap();
    assert_eq!(s.order(), 16);
    let primary = controls_fusion(&c.g, &s, &s, &caps).unwrap();
    let oracle = controls_fusion_oracle(&c.g, &s, &s, &caps).unwrap();
    assert!(!primary.controls);
    assert!(!oracle.controls);
    let (p1, g1) = primary.counterexample.expect("counterexample");
    let (p2, g2) = oracle.counterexample.expect("counterexample");
    assert_eq!(p1.elems(), p2.elems());
    assert_eq!(g1, g2);
    assert_eq!(p1.order(), 4);
    // soundness: P^g <= S yet no h in H with h^-1 g centralizing P
    let inv = c.g.inv_idx(g1);
    assert!(p1
        .gen_idxs()
        .iter()
        .all(|&x| s.contains_idx(c.g.conj_idx(x, inv))));
    let cent = c.g.centralizer(&p1).unwrap();
    assert!(!s
        .elems()
        .iter()
        .any(|&h| cent.contains_idx(c.g.mul_idx(c.g.inv_idx(h), g1))));
}

#[test]
fn p_core_contains_every_normal_p_subgroup() {
    let caps = Caps::default();
    for (g, p) in [
        (corpus::sym(4, &caps).unwrap(), 2u64),
        (constructors::qd(3, &caps).unwrap(), 3),
        (corpus::alt(4, &caps).unwrap(), 2),
    ] {
        let core = p_core(&g, p).unwrap();
        assert!(core.is_normal());
        assert!(qdp_core::pgroup::is_p_power(core.order(), p));
        for n in normal_subgroups(&g).unwrap() {
            if qdp_core::pgroup::is_p_power(n.order(), p) {
                assert!(n.is_subgroup_of(&core), "|N| = {}", n.order());
            }
        }
    }
}

#[test]
fn induced_characters_orthogonality_fixtures() {
    let caps = Caps::default();
    // S3: inducing a nontrivial linear character of C3 gives the 2-dim
    // irreducible, orthogonal to the trivial character
    let s3 = corpus::sym(3, &caps).unwrap();
    let c3 = sylow_subgroup(&s3, 3).unwrap();
    let rho = linear_characters(&c3.to_group()).unwrap()[1].clone();
    let chi = induce(&rho, &c3).unwrap();
    assert_eq!(chi.degree_rational().unwrap(), rational(2));
    assert_eq!(inner_product(&chi, &chi).unwrap(), rational(1));
    assert_eq!(
        inner_product(&chi, &ClassFunction::trivial(&s3)).unwrap(),
        rational(0)
    );
    // Q8: inducing the faithful linear character of the center gives twice
    // the 2-dimensional irreducible
    let q8 = constructors::quaternion8(&caps).unwrap();
    let z = q8.center();
    assert_eq!(z.order(), 2);
    let rho = linear_characters(&z.to_group()).unwrap()[1].clone();
    let chi = induce(&rho, &z).unwrap();
    assert_eq!(chi.degree_rational().unwrap(), rational(4));
    assert_eq!(inner_product(&chi, &chi).unwrap(), rational(4));
    assert_eq!(
        inner_product(&chi, &ClassFunction::trivial(&q8)).unwrap(),
        rational(0)
    );
}

#[test]
fn bsgs_order_matches_brute_closure_at_scale() {
    let caps = Caps::default();
    let g = constructors::extraspecial_sl2(3, &caps).unwrap();
    assert_eq!(g.order(), 648);
    let mut set = std::collections::HashSet::new();
    let id = Perm::identity(g.degree());
    set.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for gen in g.gens() {
            let q = p.mul(gen);
            if set.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    assert_eq!(set.len() as u64, g.order());
}

#[test]
fn caps_produce_infeasibility_errors() {
    let mut caps = Caps::default();
    let a5 = corpus::alt(5, &caps).unwrap();
    caps.subgroups = 10;
    let err = all_subgroups(&a5, &caps).unwrap_err();
    assert!(err.is_infeasible());
    caps.aut = 2;
    let err = automorphism_group(&a5, &caps).unwrap_err();
    assert!(err.is_infeasible());
    caps.abelian_search = 2;
    let s = sylow_subgroup(&a5, 2).unwrap();
    let err = max_elementary_abelians(&s, 2, &caps).unwrap_err();
    assert!(err.is_infeasible());
}

#[test]
fn membership_error_paths() {
    let caps = Caps::default();
    let s3 = corpus::sym(3, &caps).unwrap();
    let s4 = corpus::sym(4, &caps).unwrap();
    let foreign = s4.full_subgroup();
    assert!(s3.centralizer(&foreign).is_err());
    assert!(s3.normalizer(&foreign).is_err());
    // omega of a nonabelian subgroup is rejected
    let full = s3.full_subgroup();
    assert!(qdp_core::pgroup::omega1(&full, 2).is_err());
    // quotient by a non-normal subgroup is rejected
    let c2 = Subgroup::generated(&s3, &[s3.index_of(&Perm::parse_cycles("(1 2)", 3).unwrap()).unwrap()]);
    assert!(s3.quotient(&c2, &caps).is_err());
    // sylow needs a prime
    assert!(sylow_subgroup(&s3, 4).is_err());
}

#[test]
fn deterministic_witnesses_across_runs() {
    let caps = Caps::default();
    // same construction twice gives identical canonical witnesses
    let run = || {
        let g = constructors::qd(3, &caps).unwrap();
        let w = involves_qd(&g, 3, &caps).unwrap().unwrap();
        let s = sylow_subgroup(&g, 3).unwrap();
        let auts = automorphism_group(&s.to_group(), &caps).unwrap().len();
        (
            w.h.elems().to_vec(),
            w.k.elems().to_vec(),
            auts,
            s.elems().to_vec(),
        )
    };
    assert_eq!(run(), run());
}
