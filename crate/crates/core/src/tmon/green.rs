use fixedbitset::FixedBitSet;
use petgraph::algo::{tarjan_scc, toposort};
use petgraph::graph::DiGraph;

use crate::error::{Error, Result};
use crate::tmon::MonoidData;

/// Green's relations of a [`MonoidData`].
///
/// Class ids of each relation are ordered by the smallest element id in the class.
#[derive(Clone, Debug)]
pub struct GreenData {
    r: Vec<usize>,
    l: Vec<usize>,
    j: Vec<usize>,
    h: Vec<usize>,
    r_classes: Vec<Vec<usize>>,
    l_classes: Vec<Vec<usize>>,
    j_classes: Vec<Vec<usize>>,
    h_classes: Vec<Vec<usize>>,
    // below[c] holds d iff J_d ≤ J_c.
    below: Vec<FixedBitSet>,
    regular: Vec<bool>,
    j_rank: Vec<usize>,
    idempotents: Vec<usize>,
    minimal_ideal: usize,
}

fn scc_labels(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, 0);
    for _ in 0..n {
        g.add_node(());
    }
    for (a, b) in edges {
        if a != b {
            g.add_edge((a as u32).into(), (b as u32).into(), ());
        }
    }
    let mut comps: Vec<Vec<usize>> = tarjan_scc(&g)
        .into_iter()
        .map(|c| {
            let mut v: Vec<usize> = c.into_iter().map(|x| x.index()).collect();
            v.sort_unstable();
            v
        })
        .collect();
    comps.sort_unstable_by_key(|c| c[0]);
    let mut label = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for &x in c {
            label[x] = i;
        }
    }
    (label, comps)
}

impl GreenData {
    pub fn new(m: &MonoidData) -> Self {
        let n = m.len();
        let right_edges = || (0..n).flat_map(|x| m.right(x).iter().map(move |&y| (x, y)));
        let left_edges = || (0..n).flat_map(|x| m.left(x).iter().map(move |&y| (x, y)));
        let (r, r_classes) = scc_labels(n, right_edges());
        let (l, l_classes) = scc_labels(n, left_edges());
        let (j, j_classes) = scc_labels(n, right_edges().chain(left_edges()));

        let mut pairs: Vec<(usize, usize, usize)> = (0..n).map(|x| (r[x], l[x], x)).collect();
        pairs.sort_unstable();
        let mut h = vec![0; n];
        let mut h_classes: Vec<Vec<usize>> = Vec::new();
        let mut start = 0;
        while start < n {
            let mut end = start;
            while end < n && pairs[end].0 == pairs[start].0 && pairs[end].1 == pairs[start].1 {
                end += 1;
            }
            h_classes.push(pairs[start..end].iter().map(|p| p.2).collect());
            start = end;
        }
        for c in &mut h_classes {
            c.sort_unstable();
        }
        h_classes.sort_unstable_by_key(|c| c[0]);
        for (i, c) in h_classes.iter().enumerate() {
            for &x in c {
                h[x] = i;
            }
        }

        let k = j_classes.len();
        let mut dag: DiGraph<(), ()> = DiGraph::with_capacity(k, 0);
        for _ in 0..k {
            dag.add_node(());
        }
        let mut seen = std::collections::HashSet::new();
        for (a, b) in right_edges().chain(left_edges()) {
            let (ca, cb) = (j[a], j[b]);
            if ca != cb && seen.insert((ca, cb)) {
                dag.add_edge((ca as u32).into(), (cb as u32).into(), ());
            }
        }
        let order = toposort(&dag, None).expect("J-class condensation is acyclic");
        let mut below = vec![FixedBitSet::with_capacity(k); k];
        for node in order.into_iter().rev() {
            let c = node.index();
            let mut set = FixedBitSet::with_capacity(k);
            set.insert(c);
            for succ in dag.neighbors(node) {
                set.union_with(&below[succ.index()]);
            }
            below[c] = set;
        }

        let idempotents = m.idempotents();
        let mut regular = vec![false; k];
        for &e in &idempotents {
            regular[j[e]] = true;
        }
        let j_rank = j_classes.iter().map(|c| m.rank(c[0])).collect();
        let minimal_ideal = (0..k)
            .find(|&c| (0..k).all(|d| below[d].contains(c)))
            .expect("a finite monoid has a minimal ideal");

        GreenData {
            r,
            l,
            j,
            h,
            r_classes,
            l_classes,
            j_classes,
            h_classes,
            below,
            regular,
            j_rank,
            idempotents,
            minimal_ideal,
        }
    }

    pub fn r_class(&self, x: usize) -> usize {
        self.r[x]
    }

    pub fn l_class(&self, x: usize) -> usize {
        self.l[x]
    }

    pub fn j_class(&self, x: usize) -> usize {
        self.j[x]
    }

    pub fn h_class(&self, x: usize) -> usize {
        self.h[x]
    }

    pub fn r_classes(&self) -> &[Vec<usize>] {
        &self.r_classes
    }

    pub fn l_classes(&self) -> &[Vec<usize>] {
        &self.l_classes
    }

    pub fn j_classes(&self) -> &[Vec<usize>] {
        &self.j_classes
    }

    pub fn h_classes(&self) -> &[Vec<usize>] {
        &self.h_classes
    }

    pub fn j_class_members(&self, c: usize) -> &[usize] {
        &self.j_classes[c]
    }

    /// `J_a ≤ J_b` for J-class ids `a` and `b`.
    pub fn j_leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn is_regular(&self, c: usize) -> bool {
        self.regular[c]
    }

    /// Common rank of the elements of J-class `c`.
    pub fn j_rank(&self, c: usize) -> usize {
        self.j_rank[c]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// Idempotents lying in J-class `c`, in element id order.
    pub fn idempotents_in(&self, c: usize) -> Vec<usize> {
        self.idempotents.iter().copied().filter(|&e| self.j[e] == c).collect()
    }

    pub fn minimal_ideal(&self) -> usize {
        self.minimal_ideal
    }

    /// J-classes whose only strictly smaller class is the minimal ideal.
    pub fn minimal_nonzero(&self) -> Vec<usize> {
        let k = self.j_classes.len();
        (0..k)
            .filter(|&c| c != self.minimal_ideal)
            .filter(|&c| (0..k).all(|d| d == c || d == self.minimal_ideal || !self.j_leq(d, c)))
            .collect()
    }
}

/// The maximal subgroup `H_e` at idempotent `e`, checked to be a group with identity `e`.
pub fn maximal_subgroup(m: &MonoidData, g: &GreenData, e: usize) -> Result<Vec<usize>> {
    if !m.element(e).is_idempotent() {
        return Err(Error::NotIdempotent(e));
    }
    let members = g.h_classes()[g.h_class(e)].clone();
    for &a in &members {
        if m.product(e, a) != a || m.product(a, e) != a {
            return Err(Error::Inconsistent(format!("idempotent {e} is not an identity for H-class member {a}")));
        }
        if !members.iter().any(|&b| m.product(a, b) == e) {
            return Err(Error::Inconsistent(format!("H-class member {a} has no inverse")));
        }
        for &b in &members {
            if g.h_class(m.product(a, b)) != g.h_class(e) {
                return Err(Error::Inconsistent("H-class is not closed under products".into()));
            }
        }
    }
    Ok(members)
}
