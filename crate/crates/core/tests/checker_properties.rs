mod common;

use augcheck_core::augcheck::{
    decide, partial_module_simple, two_transitive_consequences, CheckOptions, Final, Verdict,
};
use augcheck_core::exactlin::FieldTag;
use augcheck_core::tmon::{
    is_0_transitive, is_2_transitive, is_primitive, is_transitive, GreenData, MonoidData, Transformation,
};
use augcheck_core::zoo::{
    affine_monoid, counterexample_matrix, end_graph, m_digraph_b, m_gamma_a, Digraph, Graph, ZeroOneMatrix,
};
use common::{corpus, gf};
use proptest::prelude::*;

const ORACLE: CheckOptions = CheckOptions { oracle: true };

fn random_monoid(min: usize, max: usize) -> impl Strategy<Value = MonoidData> {
    (min..=max).prop_flat_map(|n| {
        let map = prop::collection::vec(0..n, n).prop_map(|v| Transformation::new(v).unwrap());
        prop::collection::vec(map, 1..=3).prop_map(move |gens| MonoidData::closure(n, &gens).unwrap())
    })
}

fn graph_and_matrix() -> impl Strategy<Value = (Graph, ZeroOneMatrix)> {
    (2usize..=5, 1usize..=4).prop_flat_map(|(n, r)| {
        let tree = prop::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = prop::collection::vec(any::<bool>(), n * (n - 1) / 2);
        let rows = prop::collection::vec(prop::collection::vec(0u8..2, r), n);
        (Just(n), tree, extra, rows).prop_filter_map("degenerate columns", |(n, tree, extra, rows)| {
            let mut edges: Vec<(usize, usize)> = tree.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            for ((a, b), keep) in pairs.zip(extra) {
                if keep && !edges.contains(&(a, b)) {
                    edges.push((a, b));
                }
            }
            let a = ZeroOneMatrix::from_rows(&rows).ok()?;
            let ok = (0..a.ncols()).all(|j| {
                let c = a.column(j);
                c.contains(&true) && c.contains(&false)
            });
            ok.then(|| (Graph::new(n, &edges).unwrap(), a))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn checker_agrees_with_oracle(m in random_monoid(3, 5)) {
        for field in [gf(2), gf(3), gf(5), FieldTag::Rationals] {
            let r = decide(&m, field, ORACLE).unwrap();
            prop_assert_eq!(r.agreement, Some(true), "{:?}", r);
        }
    }

    #[test]
    fn simple_monoids_are_primitive_and_transitive_or_zero_transitive(m in random_monoid(3, 5)) {
        if decide(&m, FieldTag::Rationals, CheckOptions::default()).unwrap().is_simple() {
            prop_assert!(is_primitive(&m).primitive);
            prop_assert!(is_transitive(&m) != is_0_transitive(&m));
        }
    }

    #[test]
    fn small_two_transitive_monoids_are_simple_over_c(m in random_monoid(2, 3)) {
        if is_2_transitive(&m) {
            prop_assert!(decide(&m, FieldTag::Complexes, CheckOptions::default()).unwrap().is_simple());
        }
    }

    #[test]
    fn edge_matrix_monoids_are_simple_iff_full_rank((graph, a) in graph_and_matrix()) {
        prop_assume!(graph.edges().all(|(x, y)| a.row(x) != a.row(y)));
        let m = m_gamma_a(&graph, &a).unwrap();
        let n = graph.vertex_count();
        for field in [gf(2), gf(3), FieldTag::Rationals, FieldTag::Complexes] {
            let r = decide(&m, field, CheckOptions { oracle: field.is_computable() }).unwrap();
            let full = a.rank_with_ones(field).unwrap() == n;
            prop_assert_eq!(r.is_simple(), full, "{} {:?}", field, r);
            if n > 2 {
                for c in [&r.c1, &r.c2, &r.c3, &r.c5] {
                    prop_assert_eq!(c.verdict, Verdict::Holds);
                }
            }
        }
    }

    #[test]
    fn directed_matrix_monoids_are_simple_iff_full_rank(n in 2usize..=5, cols in prop::collection::vec(1usize..5, 1..=3)) {
        let d = Digraph::chain(n);
        let rows: Vec<Vec<u8>> = (0..n).map(|i| cols.iter().map(|&c| u8::from(i >= c.min(n - 1))).collect()).collect();
        let b = ZeroOneMatrix::from_rows(&rows).unwrap();
        prop_assume!(d.arcs().all(|(x, y)| b.row(x) != b.row(y)));
        let m = m_digraph_b(&d, &b).unwrap();
        for field in [gf(2), FieldTag::Rationals] {
            let r = decide(&m, field, ORACLE).unwrap();
            prop_assert_eq!(r.is_simple(), b.rank_with_ones(field).unwrap() == n);
        }
    }
}

#[test]
fn modular_simplicity_implies_rational_simplicity() {
    for e in corpus() {
        let q = decide(&e.monoid, FieldTag::Rationals, ORACLE).unwrap();
        for p in [2, 3, 5] {
            let r = decide(&e.monoid, gf(p), ORACLE).unwrap();
            if r.is_simple() {
                assert!(q.is_simple(), "{} simple over GF({p}) but not over Q", e.name);
            }
        }
    }
}

#[test]
fn full_monoid_has_all_two_transitive_consequences() {
    let t4 = end_graph(&Graph::complete(4)).unwrap();
    let r = two_transitive_consequences(&t4, &GreenData::new(&t4)).unwrap();
    assert!(r.all_hold());
}

#[test]
fn displayed_matrix_monoid_has_consequences_but_fails_rank() {
    let m = m_gamma_a(&Graph::complete(4), &counterexample_matrix(4)).unwrap();
    let r = two_transitive_consequences(&m, &GreenData::new(&m)).unwrap();
    assert!(r.all_hold());
    let report = decide(&m, FieldTag::Complexes, CheckOptions::default()).unwrap();
    assert_eq!(report.c4.verdict, Verdict::Fails);
    assert_eq!(report.final_verdict, Final::NotSimple);
}

#[test]
fn affine_monoid_consequences() {
    let m = affine_monoid(3).unwrap();
    let g = GreenData::new(&m);
    assert!(two_transitive_consequences(&m, &g).unwrap().all_hold());
    let min_nonconstant = m.elements().iter().map(Transformation::rank).filter(|&r| r > 1).min();
    assert_eq!(min_nonconstant, Some(3));
}

#[test]
fn identity_on_two_partial_points_is_not_simple() {
    let m = MonoidData::closure(3, &[Transformation::identity(3)]).unwrap();
    let v = partial_module_simple(&m, FieldTag::Rationals, ORACLE).unwrap();
    assert_eq!(v.simple, Final::NotSimple);
}

#[test]
fn reports_are_deterministic() {
    let m = m_gamma_a(&Graph::complete(4), &counterexample_matrix(4)).unwrap();
    let a = serde_json::to_string(&decide(&m, FieldTag::Rationals, ORACLE).unwrap()).unwrap();
    let b = serde_json::to_string(&decide(&m, FieldTag::Rationals, ORACLE).unwrap()).unwrap();
    assert_eq!(a, b);
}
