//! Property tests for the group-theory invariants over random small groups.

use proptest::prelude::*;

use rotamap::coset::{core, CosetSpace};
use rotamap::group::{closure, Group, DEFAULT_CAP};
use rotamap::perm::Perm;

fn arb_perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Perm::from_images(images).expect("shuffle is a bijection"))
}

fn arb_group(degree: usize) -> impl Strategy<Value = Group> {
    proptest::collection::vec(arb_perm(degree), 1..=2)
        .prop_map(move |gens| Group::generated(degree, &gens).expect("small degree fits the cap"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lagrange_on_coset_spaces(g in arb_group(5), pick in 0usize..1000) {
        let h = Group::cyclic(&g.elements()[pick % g.order()]);
        let space = CosetSpace::new(&g, &h).unwrap();
        prop_assert_eq!(space.len() * h.order(), g.order());
    }

    #[test]
    fn canonicalization_is_stable(g in arb_group(5), pick in 0usize..1000) {
        let h = Group::cyclic(&g.elements()[pick % g.order()]);
        let space = CosetSpace::new(&g, &h).unwrap();
        for x in g.elements().iter().take(20) {
            for hh in h.elements() {
                prop_assert_eq!(space.canonical(x), space.canonical(&(hh * x)));
            }
        }
    }

    #[test]
    fn core_is_normal_and_contained(g in arb_group(5), pick in 0usize..1000) {
        let h = Group::cyclic(&g.elements()[pick % g.order()]);
        let c = core(&g, &h).unwrap();
        prop_assert!(c.is_subgroup_of(&h));
        prop_assert!(c.is_normal_in(&g));
    }

    #[test]
    fn closure_ignores_generator_order(a in arb_perm(5), b in arb_perm(5)) {
        let mut fwd = closure(5, &[a.clone(), b.clone()], DEFAULT_CAP).unwrap();
        let mut rev = closure(5, &[b, a], DEFAULT_CAP).unwrap();
        fwd.sort();
        rev.sort();
        prop_assert_eq!(fwd, rev);
    }

    #[test]
    fn order_divides_symmetric_group_order(g in arb_group(5)) {
        prop_assert_eq!(120 % g.order(), 0);
    }

    #[test]
    fn element_orders_divide_group_order(g in arb_group(6)) {
        for e in g.elements() {
            prop_assert_eq!(g.order() as u64 % e.order(), 0);
        }
    }
}
