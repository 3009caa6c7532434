mod common;

use std::collections::BTreeSet;

use augcheck_core::actmod::{gamma_graph, kernel_blocks};
use augcheck_core::augcheck::{decide, CheckOptions, Final};
use augcheck_core::exactlin::FieldTag;
use augcheck_core::tmon::{is_2_transitive, GreenData, MonoidData, Transformation};
use augcheck_core::zoo::{
    affine_monoid, end_digraph_acyclic, end_graph, end_poset, end_simplicial, example_0_tran, lattice_endos,
    m_digraph_b, rees_map, rees_monoid, Digraph, Graph, Poset, SimplicialComplex, ZeroOneMatrix,
};
use common::{corpus, fence, gf, zo, Source};
use proptest::prelude::*;

fn simple_over(m: &MonoidData, fields: &[FieldTag]) -> bool {
    fields.iter().all(|&f| decide(m, f, CheckOptions { oracle: true }).unwrap().is_simple())
}

fn connected_graph(max: usize) -> impl Strategy<Value = Graph> {
    (2..=max).prop_flat_map(|n| {
        let tree = prop::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = prop::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (Just(n), tree, extra).prop_map(|(n, tree, extra)| {
            let mut edges: Vec<(usize, usize)> = tree.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            for ((a, b), keep) in pairs.zip(extra) {
                if keep && !edges.contains(&(a, b)) {
                    edges.push((a, b));
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn zero_one(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(prop::collection::vec(0u8..2, cols), rows)
}

fn edge_set(edges: impl Iterator<Item = (usize, usize)>) -> BTreeSet<(usize, usize)> {
    edges.map(|(a, b)| (a.min(b), a.max(b))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rees_maps_follow_the_product_law(data in (1usize..=4, 1usize..=3).prop_flat_map(|(n, r)| zero_one(n, r))) {
        let a = ZeroOneMatrix::from_rows(&data).unwrap();
        let n = a.nrows();
        let zero = Transformation::constant(n + 1, 0);
        for i in 1..=n {
            for j in 0..a.ncols() {
                for i2 in 1..=n {
                    for j2 in 0..a.ncols() {
                        let product = rees_map(&a, i, j).compose(&rees_map(&a, i2, j2));
                        let expected = if a.get(i2 - 1, j) { rees_map(&a, i, j2) } else { zero.clone() };
                        prop_assert_eq!(product, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn graph_endomorphisms_recover_the_graph(graph in connected_graph(5)) {
        let m = end_graph(&graph).unwrap();
        let g = GreenData::new(&m);
        let [j] = g.minimal_nonzero()[..] else { panic!("no unique minimal nonzero class") };
        let gamma = gamma_graph(&m, &g, j).unwrap();
        prop_assert_eq!(edge_set(gamma.edge_list().into_iter()), edge_set(graph.edges()));
        if is_2_transitive(&m) {
            prop_assert!(graph.is_complete());
        }
    }
}

#[test]
fn complete_graphs_give_full_monoids() {
    for n in 2..=4 {
        assert_eq!(end_graph(&Graph::complete(n)).unwrap().len(), n.pow(n as u32));
    }
}

#[test]
fn corpus_is_closed() {
    for e in corpus() {
        let again = MonoidData::closure(e.monoid.degree(), e.monoid.elements()).unwrap();
        assert_eq!(again.len(), e.monoid.len(), "{}", e.name);
        assert!(e.monoid.id_of(&Transformation::identity(e.monoid.degree())).is_some());
    }
}

#[test]
fn two_transitive_complexes_are_simplices() {
    for e in corpus() {
        if let Source::Complex(k) = &e.source {
            if is_2_transitive(&e.monoid) {
                assert!(k.skeleton().is_complete(), "{}", e.name);
            }
        }
    }
}

fn unique_minimum(order: &Poset, block: &[usize], alpha: usize) -> bool {
    block.contains(&alpha) && block.iter().all(|&b| order.leq(alpha, b))
}

fn up_set(order: &Poset, alpha: usize) -> Vec<usize> {
    (0..order.len()).filter(|&x| order.leq(alpha, x)).collect()
}

// Block selector from the directed case: singletons at minimal points, principal up-sets elsewhere.
fn directed_selector(order: &Poset, blocks: &[Vec<usize>], alpha: usize) -> Vec<usize> {
    let n = order.len();
    if (0..n).all(|x| order.leq(alpha, x)) {
        return blocks.iter().find(|b| b.contains(&alpha)).unwrap().clone();
    }
    if (0..n).all(|x| x == alpha || !order.leq(x, alpha)) {
        return vec![alpha];
    }
    up_set(order, alpha)
}

#[test]
fn block_selectors_exist() {
    let mut checked = 0;
    for e in corpus() {
        let order = match &e.source {
            Source::Poset(p) => p.clone(),
            Source::Digraph(d) => d.path_order().unwrap(),
            Source::Semilattice(s) => s.order().clone(),
            _ => continue,
        };
        let m = &e.monoid;
        let g = GreenData::new(m);
        let [j] = g.minimal_nonzero()[..] else { panic!("{}", e.name) };
        let blocks: Vec<Vec<usize>> = kernel_blocks(m, &g, j).unwrap().blocks();
        let n = m.degree();
        for alpha in 0..n {
            let chosen = match &e.source {
                Source::Semilattice(s) if alpha == s.bottom() => {
                    let beta = (0..n).find(|&b| b != alpha).unwrap();
                    let up = up_set(&order, beta);
                    (0..n).filter(|x| !up.contains(x)).collect()
                }
                Source::Semilattice(_) => up_set(&order, alpha),
                _ => directed_selector(&order, &blocks, alpha),
            };
            assert!(blocks.contains(&chosen), "{}: {chosen:?} is not a kernel block", e.name);
            assert!(unique_minimum(&order, &chosen, alpha), "{}: {alpha} not least in {chosen:?}", e.name);
        }
        checked += 1;
    }
    assert!(checked >= 5);
}

#[test]
fn example_families_are_simple() {
    let all = [gf(2), gf(3), FieldTag::Rationals];
    assert!(simple_over(&end_graph(&Graph::path(3)).unwrap(), &all));
    assert!(simple_over(&end_graph(&Graph::star(5)).unwrap(), &all));
    assert!(simple_over(&end_poset(&fence()).unwrap(), &all));
    assert!(simple_over(&end_digraph_acyclic(&Digraph::chain(3)).unwrap(), &[gf(2), FieldTag::Rationals]));
    assert!(simple_over(&example_0_tran(2).unwrap(), &all));
    assert!(simple_over(&example_0_tran(3).unwrap(), &all));
    let k = SimplicialComplex::new(4, &[vec![0, 1, 2], vec![2, 3]]).unwrap();
    assert!(simple_over(&end_simplicial(&k).unwrap(), &all));
}

#[test]
fn rees_examples() {
    let id = zo(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    let m = rees_monoid(&id).unwrap();
    assert_eq!(m.degree(), 4);
    assert!(simple_over(&m, &[gf(2), FieldTag::Rationals]));
    let low = zo(&[&[1, 0], &[1, 1], &[0, 1]]);
    let m = rees_monoid(&low).unwrap();
    for f in [gf(2), FieldTag::Rationals] {
        assert_eq!(decide(&m, f, CheckOptions { oracle: true }).unwrap().final_verdict, Final::NotSimple);
    }
}

#[test]
fn digraph_matrix_examples() {
    let d = Digraph::chain(3);
    let b = zo(&[&[0, 0], &[1, 0], &[1, 1]]);
    assert_eq!(b.rank_with_ones(FieldTag::Rationals).unwrap(), 3);
    let m = m_digraph_b(&d, &b).unwrap();
    assert!(simple_over(&m, &[gf(2), gf(3), FieldTag::Rationals]));
    let equal_rows = zo(&[&[0], &[0], &[1]]);
    let m = m_digraph_b(&d, &equal_rows).unwrap();
    let r = decide(&m, FieldTag::Rationals, CheckOptions { oracle: true }).unwrap();
    assert_eq!(r.agreement, Some(true));
}

#[test]
fn lattice_rank_two_kernels_split_by_an_atom() {
    let m = lattice_endos(2).unwrap();
    assert!(m.id_of(&Transformation::constant(4, 0)).is_some());
    // Points are subsets of {a, b} as bitmasks: 1 = {a}, 2 = {b}, 3 = {a, b}.
    let atom_up_sets: [BTreeSet<usize>; 2] = [[1, 3].into(), [2, 3].into()];
    let mut seen = BTreeSet::new();
    for t in m.elements().iter().filter(|t| t.rank() == 2) {
        let mut classes: Vec<BTreeSet<usize>> = (0..4).map(|w| t.kernel_class(w).into_iter().collect()).collect();
        classes.sort();
        classes.dedup();
        assert_eq!(classes.len(), 2);
        let a = classes.iter().find(|c| atom_up_sets.contains(c)).expect("one class is an atom up-set");
        seen.insert(a.clone());
    }
    assert_eq!(seen.len(), 2);
}

#[test]
fn affine_monoids_have_no_rank_two_maps() {
    for p in [3, 5, 7] {
        let m = affine_monoid(p).unwrap();
        assert_eq!(m.len(), (p * p) as usize);
        assert!(m.elements().iter().all(|t| t.rank() != 2));
    }
    assert!(affine_monoid(2).unwrap().elements().iter().any(|t| t.rank() == 2));
}
