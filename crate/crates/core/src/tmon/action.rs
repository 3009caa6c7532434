use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::tmon::MonoidData;

/// Sorted orbit `Mω`.
pub fn orbit(m: &MonoidData, point: usize) -> Vec<usize> {
    let n = m.degree();
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for g in m.generators() {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    (0..n).filter(|&x| seen[x]).collect()
}

pub fn is_transitive(m: &MonoidData) -> bool {
    (0..m.degree()).all(|w| orbit(m, w).len() == m.degree())
}

/// The sink `ω₀` when the action is 0-transitive.
pub fn zero_transitive_sink(m: &MonoidData) -> Option<usize> {
    let n = m.degree();
    let fixed: Vec<usize> = (0..n).filter(|&w| m.generators().iter().all(|g| g.fixes(w))).collect();
    let [sink] = fixed[..] else {
        return None;
    };
    let ok = (0..n).filter(|&w| w != sink).all(|w| orbit(m, w).len() == n);
    ok.then_some(sink)
}

pub fn is_0_transitive(m: &MonoidData) -> bool {
    zero_transitive_sink(m).is_some()
}

/// Every ordered pair of distinct points can be sent to every other.
pub fn is_2_transitive(m: &MonoidData) -> bool {
    let n = m.degree();
    if n < 2 {
        return true;
    }
    let code = |a: usize, b: usize| a * n + b;
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n * n, 0);
    for _ in 0..n * n {
        g.add_node(());
    }
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            for t in m.generators() {
                let (x, y) = (t.apply(a), t.apply(b));
                if x != y {
                    g.add_edge((code(a, b) as u32).into(), (code(x, y) as u32).into(), ());
                }
            }
        }
    }
    // Diagonal nodes are isolated; every other node must share one component.
    tarjan_scc(&g).iter().filter(|c| c[0].index() / n != c[0].index() % n).count() == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub primitive: bool,
    /// Blocks of a nontrivial proper congruence, each sorted, ordered by least point.
    pub witness: Option<Vec<Vec<usize>>>,
}

/// Blocks of the smallest M-stable equivalence identifying `a` and `b`.
pub fn principal_congruence(m: &MonoidData, a: usize, b: usize) -> Vec<Vec<usize>> {
    let n = m.degree();
    let mut uf = UnionFind::<usize>::new(n);
    let mut queue = vec![(a, b)];
    uf.union(a, b);
    while let Some((x, y)) = queue.pop() {
        for g in m.generators() {
            let (gx, gy) = (g.apply(x), g.apply(y));
            if uf.union(gx, gy) {
                queue.push((gx, gy));
            }
        }
    }
    partition_from(&uf, n)
}

fn partition_from(uf: &UnionFind<usize>, n: usize) -> Vec<Vec<usize>> {
    let labels = uf.clone().into_labeling();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for w in 0..n {
        let r = labels[w];
        if slot[r] == usize::MAX {
            slot[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot[r]].push(w);
    }
    blocks
}

pub fn is_primitive(m: &MonoidData) -> CongruenceReport {
    let n = m.degree();
    for a in 0..n {
        for b in a + 1..n {
            let blocks = principal_congruence(m, a, b);
            if blocks.len() > 1 {
                return CongruenceReport { primitive: false, witness: Some(blocks) };
            }
        }
    }
    CongruenceReport { primitive: true, witness: None }
}

/// Whether `blocks` is an M-stable partition of the points.
pub fn is_congruence(m: &MonoidData, blocks: &[Vec<usize>]) -> bool {
    let n = m.degree();
    let mut label = vec![usize::MAX; n];
    for (i, b) in blocks.iter().enumerate() {
        for &w in b {
            if w >= n || label[w] != usize::MAX {
                return false;
            }
            label[w] = i;
        }
    }
    if label.contains(&usize::MAX) {
        return false;
    }
    m.generators().iter().all(|g| {
        blocks.iter().all(|b| b.windows(2).all(|p| label[g.apply(p[0])] == label[g.apply(p[1])]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tmon::Transformation;

    fn t(image: &[usize]) -> Transformation {
        Transformation::new(image.to_vec()).unwrap()
    }

    fn t3() -> MonoidData {
        let gens = [Transformation::cycle(3), Transformation::transposition(3, 0, 1), Transformation::collapse(3, 1, 0)];
        MonoidData::closure(3, &gens).unwrap()
    }

    #[test]
    fn full_monoid_predicates() {
        let m = t3();
        assert!(is_transitive(&m));
        assert!(!is_0_transitive(&m));
        assert!(is_2_transitive(&m));
        assert!(is_primitive(&m).primitive);
    }

    #[test]
    fn symmetric_inverse_on_two_points_with_sink() {
        // Partial bijections of {1, 2}; point 0 is the sink.
        let gens = [t(&[0, 2, 1]), t(&[0, 0, 2])];
        let m = MonoidData::closure(3, &gens).unwrap();
        assert_eq!(m.len(), 7);
        assert_eq!(zero_transitive_sink(&m), Some(0));
        assert!(!is_transitive(&m));
    }

    #[test]
    fn constant_map_on_three_points_is_neither() {
        let m = MonoidData::closure(3, &[Transformation::constant(3, 0)]).unwrap();
        assert!(!is_transitive(&m));
        assert!(!is_0_transitive(&m));
        assert_eq!(orbit(&m, 1), vec![0, 1]);
    }

    #[test]
    fn trivial_monoid_is_not_primitive() {
        let m = MonoidData::closure(4, &[]).unwrap();
        let r = is_primitive(&m);
        assert!(!r.primitive);
        let w = r.witness.unwrap();
        assert!(is_congruence(&m, &w));
        assert!(w.len() > 1 && w.len() < 4);
    }

    #[test]
    fn cyclic_group_on_four_points_has_blocks() {
        let m = MonoidData::closure(4, &[Transformation::cycle(4)]).unwrap();
        assert!(is_transitive(&m));
        let r = is_primitive(&m);
        assert_eq!(r.witness, Some(vec![vec![0, 2], vec![1, 3]]));
        assert!(!is_2_transitive(&m));
    }

    #[test]
    fn is_congruence_rejects_bad_partitions() {
        let m = MonoidData::closure(4, &[Transformation::cycle(4)]).unwrap();
        assert!(!is_congruence(&m, &[vec![0, 1], vec![2, 3]]));
        assert!(!is_congruence(&m, &[vec![0, 2], vec![1]]));
        assert!(is_congruence(&m, &[vec![0, 1, 2, 3]]));
    }
}
