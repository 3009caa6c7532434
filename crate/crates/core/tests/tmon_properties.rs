use std::collections::BTreeSet;

use augcheck_core::tmon::{
    is_0_transitive, is_primitive, is_transitive, GreenData, MonoidData, Transformation,
};
use proptest::prelude::*;

fn generators(max_degree: usize) -> impl Strategy<Value = (usize, Vec<Transformation>)> {
    (2..=max_degree).prop_flat_map(|n| {
        let map = prop::collection::vec(0..n, n).prop_map(|v| Transformation::new(v).unwrap());
        (Just(n), prop::collection::vec(map, 1..=3))
    })
}

fn element_set(m: &MonoidData) -> BTreeSet<Transformation> {
    m.elements().iter().cloned().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_ignores_generator_order((n, gens) in generators(4), rotate in 0usize..3) {
        let a = MonoidData::closure(n, &gens).unwrap();
        let mut shuffled = gens.clone();
        let k = rotate % shuffled.len();
        shuffled.rotate_left(k);
        shuffled.reverse();
        let b = MonoidData::closure(n, &shuffled).unwrap();
        prop_assert_eq!(element_set(&a), element_set(&b));
    }

    #[test]
    fn words_evaluate_to_their_elements((n, gens) in generators(4)) {
        let m = MonoidData::closure(n, &gens).unwrap();
        prop_assert!(m.element(0).is_identity());
        for id in 0..m.len() {
            prop_assert_eq!(&m.evaluate(&m.word(id)), m.element(id));
        }
    }

    #[test]
    fn reclosure_is_a_no_op((n, gens) in generators(4)) {
        let m = MonoidData::closure(n, &gens).unwrap();
        let again = MonoidData::closure(n, m.elements()).unwrap();
        prop_assert_eq!(element_set(&m), element_set(&again));
        for a in 0..m.len() {
            for b in 0..m.len() {
                prop_assert_eq!(m.element(m.product(a, b)), &m.element(a).compose(m.element(b)));
            }
        }
    }

    #[test]
    fn green_stability_and_rank((n, gens) in generators(4)) {
        let m = MonoidData::closure(n, &gens).unwrap();
        let g = GreenData::new(&m);
        for x in 0..m.len() {
            let j = g.j_class(x);
            let xm: BTreeSet<usize> = (0..m.len()).map(|y| m.product(x, y)).filter(|&z| g.j_class(z) == j).collect();
            let mx: BTreeSet<usize> = (0..m.len()).map(|y| m.product(y, x)).filter(|&z| g.j_class(z) == j).collect();
            let r: BTreeSet<usize> = g.r_classes()[g.r_class(x)].iter().copied().collect();
            let l: BTreeSet<usize> = g.l_classes()[g.l_class(x)].iter().copied().collect();
            prop_assert_eq!(xm, r);
            prop_assert_eq!(mx, l);
        }
        for class in g.j_classes() {
            let ranks: BTreeSet<usize> = class.iter().map(|&x| m.rank(x)).collect();
            prop_assert_eq!(ranks.len(), 1);
        }
        let min = g.minimal_ideal();
        for x in 0..m.len() {
            prop_assert!(g.j_leq(min, g.j_class(x)));
        }
    }

    #[test]
    fn congruence_witness_is_a_congruence((n, gens) in generators(5)) {
        let m = MonoidData::closure(n, &gens).unwrap();
        let report = is_primitive(&m);
        if let Some(blocks) = &report.witness {
            prop_assert!(!report.primitive);
            prop_assert!(augcheck_core::tmon::is_congruence(&m, blocks));
            prop_assert!(blocks.len() > 1 && blocks.len() < n);
        }
        prop_assert!(!(is_transitive(&m) && is_0_transitive(&m)));
    }
}

#[test]
fn t3_has_three_j_classes_and_s3_one() {
    let t3 = MonoidData::closure(
        3,
        &[Transformation::cycle(3), Transformation::transposition(3, 0, 1), Transformation::collapse(3, 1, 0)],
    )
    .unwrap();
    assert_eq!(GreenData::new(&t3).j_classes().len(), 3);
    let s3 = MonoidData::closure(3, &[Transformation::cycle(3), Transformation::transposition(3, 0, 1)]).unwrap();
    assert_eq!(GreenData::new(&s3).j_classes().len(), 1);
}
