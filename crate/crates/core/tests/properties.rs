use proptest::prelude::*;

use nonret_core::automata::{are_equivalent, minimize, text};
use nonret_core::{compose, Dfa, DfaBuilder, Transformation};

fn transformation(n: usize) -> impl Strategy<Value = Transformation> {
    prop::collection::vec(0..n, n).prop_map(|v| Transformation::new(v).unwrap())
}

prop_compose! {
    fn dfa()(n in 1usize..7, k in 1usize..4)
        (tables in prop::collection::vec(prop::collection::vec(0..n, n), k),
         finals in prop::collection::vec(any::<bool>(), n),
         initial in 0..n) -> Dfa {
        let mut b = DfaBuilder::new(tables[0].len()).initial(initial);
        for (i, t) in tables.iter().enumerate() {
            let name = ["a", "b", "c"][i];
            b = b.images(name, t);
        }
        let f: Vec<usize> = finals.iter().enumerate().filter(|(_, &x)| x).map(|(q, _)| q).collect();
        b.finals(f).build().unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn compose_is_associative(
        (s, t, u) in (2usize..8).prop_flat_map(|n| (transformation(n), transformation(n), transformation(n)))
    ) {
        let left = compose(&compose(&s, &t).unwrap(), &u).unwrap();
        let right = compose(&s, &compose(&t, &u).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rank_never_grows(
        (s, t) in (2usize..8).prop_flat_map(|n| (transformation(n), transformation(n)))
    ) {
        let st = compose(&s, &t).unwrap();
        prop_assert!(st.rank() <= s.rank().min(t.rank()));
    }

    #[test]
    fn transformation_literal_round_trip(t in (1usize..10).prop_flat_map(transformation)) {
        let back: Transformation = t.to_string().parse().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn minimize_idempotent_and_equivalent(d in dfa()) {
        let m = minimize(&d);
        prop_assert_eq!(minimize(&m), m.clone());
        prop_assert!(are_equivalent(&d, &m).unwrap());
        prop_assert!(m.states() <= d.states());
    }

    #[test]
    fn text_round_trip(d in dfa()) {
        let back = text::parse(&text::print(&d)).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn complement_flips_membership(d in dfa(), word in prop::collection::vec(0usize..3, 0..8)) {
        let k = d.alphabet().len();
        let w: Vec<usize> = word.into_iter().map(|c| c % k).collect();
        prop_assert_eq!(d.complement().accepts(&w), !d.accepts(&w));
    }
}
