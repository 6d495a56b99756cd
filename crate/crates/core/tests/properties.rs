//! Property-based invariants over randomly generated inputs.

use proptest::prelude::*;

use qdp_core::caps::Caps;
use qdp_core::character::{Cyclotomic, Rational};
use qdp_core::perm::Perm;
use qdp_core::specfile::{GroupSpecFile, SpecDef, SpecStatement};
use qdp_core::GroupHandle;

fn arb_perm(degree: usize) -> impl Strategy<Value = Perm> {
    proptest::collection::vec(0usize..degree, degree).prop_map(move |choices| {
        // Fisher-Yates driven by the generated choice vector
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for i in (1..degree).rev() {
            let j = choices[i] % (i + 1);
            images.swap(i, j);
        }
        Perm::new(images).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perm_group_laws(a in arb_perm(8), b in arb_perm(8), c in arb_perm(8)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert!(a.inverse().mul(&a).is_identity());
        let id = Perm::identity(8);
        prop_assert_eq!(a.mul(&id), a.clone());
        prop_assert_eq!(id.mul(&a), a);
    }

    #[test]
    fn cycle_notation_roundtrip(p in arb_perm(10)) {
        let text = p.cycle_string();
        let q = Perm::parse_cycles(&text, 10).unwrap();
        prop_assert_eq!(p, q);
    }

    #[test]
    fn bsgs_order_matches_brute_closure(a in arb_perm(6), b in arb_perm(6)) {
        let caps = Caps::default();
        let g = GroupHandle::from_generators(6, vec![a.clone(), b.clone()], &caps).unwrap();
        // independent closure
        let mut set = std::collections::BTreeSet::new();
        set.insert(Perm::identity(6));
        let mut frontier = vec![Perm::identity(6)];
        while let Some(p) = frontier.pop() {
            for gen in [&a, &b] {
                let q = p.mul(gen);
                if set.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        prop_assert_eq!(g.order(), set.len() as u64);
        // Lagrange for a couple of cyclic subgroups
        for gen in [&a, &b] {
            if let Some(idx) = g.index_of(gen) {
                let sub = qdp_core::Subgroup::generated(&g, &[idx]);
                prop_assert_eq!(g.order() % sub.order(), 0);
            }
        }
    }

    #[test]
    fn cyclotomic_ring_laws(
        k1 in 0u64..12, k2 in 0u64..12, k3 in 0u64..12,
        num in -6i64..6, den in 1i64..6,
    ) {
        let a = Cyclotomic::root_of_unity(12, k1);
        let scale = Rational::new(num.into(), den.into());
        let b = Cyclotomic::root_of_unity(12, k2).scale(&scale);
        let c = Cyclotomic::root_of_unity(12, k3);
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        // conjugation is a ring map
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
    }

    #[test]
    fn spec_roundtrip(seed in 0u64..5000) {
        // build a small random spec file from a seed, deterministically
        let mut statements = Vec::new();
        let fam = match seed % 4 {
            0 => SpecDef::Family(qdp_core::constructors::FamilySpec {
                family: qdp_core::constructors::Family::Cyclic,
                params: vec![2 + seed % 9],
            }),
            1 => SpecDef::Generators(vec!["(1 2 3)".into(), "(1 2)".into()]),
            2 => SpecDef::Generators(vec![format!("(1 {})", 2 + seed % 7)]),
            _ => SpecDef::Family(qdp_core::constructors::FamilySpec {
                family: qdp_core::constructors::Family::Quaternion8,
                params: vec![],
            }),
        };
        statements.push(SpecStatement { name: "a".into(), def: fam });
        if seed % 3 == 0 {
            statements.push(SpecStatement {
                name: "b".into(),
                def: SpecDef::Product("a".into(), "a".into()),
            });
        }
        let file = GroupSpecFile { statements };
        let canon = file.serialize();
        let parsed = GroupSpecFile::parse(&canon).unwrap();
        prop_assert_eq!(parsed.serialize(), canon);
    }
}

#[test]
fn handles_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<GroupHandle>();
    assert_send_sync::<qdp_core::Subgroup>();
    assert_send_sync::<qdp_core::GroupHom>();
}
