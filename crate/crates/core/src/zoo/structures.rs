use std::collections::BTreeSet;

use petgraph::algo::toposort;
use petgraph::graph::DiGraph;
use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};

fn check_vertex(n: usize, v: usize) -> Result<()> {
    if v >= n {
        return Err(Error::InvalidStructure(format!("vertex {v} outside 0..{n}")));
    }
    Ok(())
}

fn connected(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut uf = UnionFind::<usize>::new(n);
    for (a, b) in edges {
        uf.union(a, b);
    }
    (1..n).all(|v| uf.equiv(0, v))
}

/// A simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            check_vertex(n, a)?;
            check_vertex(n, b)?;
            if a == b {
                return Err(Error::InvalidStructure(format!("loop at vertex {a}")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        Graph { n, edges: (1..n).map(|v| (v - 1, v)).collect() }
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n > 2 {
            g.edges.insert((0, n - 1));
        }
        g
    }

    /// Star with centre 0 and `n − 1` leaves.
    pub fn star(n: usize) -> Self {
        Graph { n, edges: (1..n).map(|v| (0, v)).collect() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn is_connected(&self) -> bool {
        connected(self.n, self.edges())
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }
}

/// A loopless directed graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(a, b) in arcs {
            check_vertex(n, a)?;
            check_vertex(n, b)?;
            if a == b {
                return Err(Error::InvalidStructure(format!("loop at vertex {a}")));
            }
            set.insert((a, b));
        }
        Ok(Digraph { n, arcs: set })
    }

    /// `0 → 1 → .. → n−1`.
    pub fn chain(n: usize) -> Self {
        Digraph { n, arcs: (1..n).map(|v| (v - 1, v)).collect() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.arcs.contains(&(a, b))
    }

    pub fn is_acyclic(&self) -> bool {
        let g: DiGraph<(), ()> = DiGraph::from_edges(self.arcs.iter().map(|&(a, b)| (a as u32, b as u32)));
        toposort(&g, None).is_ok()
    }

    pub fn underlying(&self) -> Graph {
        Graph { n: self.n, edges: self.arcs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect() }
    }

    /// `reach[a][b]` iff there is a directed path from `a` to `b` (including `a = b`).
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.n;
        let mut reach = vec![vec![false; n]; n];
        for (a, row) in reach.iter_mut().enumerate() {
            row[a] = true;
            let mut stack = vec![a];
            while let Some(x) = stack.pop() {
                for &(_, y) in self.arcs.range((x, 0)..(x + 1, 0)) {
                    if !row[y] {
                        row[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        reach
    }

    /// Path order as a poset; fails on a directed cycle.
    pub fn path_order(&self) -> Result<Poset> {
        if !self.is_acyclic() {
            return Err(Error::Cyclic);
        }
        Poset::from_relation(self.reachability())
    }
}

/// A simplicial complex on `0..n` stored by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Keeps the maximal sets among `faces`; every vertex must lie in some face.
    pub fn new(n: usize, faces: &[Vec<usize>]) -> Result<Self> {
        if n > 64 {
            return Err(Error::SizeBound(format!("{n} vertices exceed the 64-vertex limit for complexes")));
        }
        let mut masks = Vec::new();
        for f in faces {
            if f.is_empty() {
                continue;
            }
            let mut mask = 0u64;
            for &v in f {
                check_vertex(n, v)?;
                mask |= 1 << v;
            }
            masks.push(mask);
        }
        let covered = masks.iter().fold(0u64, |acc, m| acc | m);
        if let Some(v) = (0..n).find(|&v| covered & (1 << v) == 0) {
            return Err(Error::InvalidStructure(format!("vertex {v} lies in no face")));
        }
        masks.sort_unstable();
        masks.dedup();
        let facets: Vec<u64> =
            masks.iter().copied().filter(|&m| !masks.iter().any(|&o| o != m && o & m == m)).collect();
        Ok(SimplicialComplex { n, facets })
    }

    /// The 1-dimensional complex of a graph; isolated vertices become 0-faces.
    pub fn from_graph(g: &Graph) -> Self {
        let mut faces: Vec<Vec<usize>> = g.edges().map(|(a, b)| vec![a, b]).collect();
        faces.extend((0..g.vertex_count()).map(|v| vec![v]));
        Self::new(g.vertex_count(), &faces).expect("graph vertices are in range")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| (0..self.n).filter(|&v| m & (1 << v) != 0).collect()).collect()
    }

    pub(crate) fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_face_mask(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| f & mask == mask)
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        face.iter().all(|&v| v < self.n) && self.is_face_mask(face.iter().fold(0, |m, &v| m | (1 << v)))
    }

    /// The 1-skeleton.
    pub fn skeleton(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for &f in &self.facets {
            let vs: Vec<usize> = (0..self.n).filter(|&v| f & (1 << v) != 0).collect();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    edges.insert((a, b));
                }
            }
        }
        Graph { n: self.n, edges }
    }
}

/// A finite partial order on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn from_relation(leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = leq.len();
        if leq.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidStructure("order relation is not square".into()));
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::InvalidStructure(format!("relation is not reflexive at {a}")));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::InvalidStructure(format!("{a} and {b} are mutually below each other")));
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(Error::InvalidStructure(format!("relation is not transitive at {a}, {b}, {c}")));
                    }
                }
            }
        }
        Ok(Poset { leq })
    }

    /// Reflexive-transitive closure of `lower < upper` pairs.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let d = Digraph::new(n, covers)?;
        d.path_order().map_err(|e| match e {
            Error::Cyclic => Error::InvalidStructure("cover relation has a cycle".into()),
            e => e,
        })
    }

    pub fn chain(n: usize) -> Self {
        Poset { leq: (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect() }
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Cover pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let lt = |a: usize, b: usize| a != b && self.leq[a][b];
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_hasse_connected(&self) -> bool {
        connected(self.len(), self.hasse().into_iter())
    }

    /// Whether `set` is closed upwards.
    pub fn is_upper_set(&self, set: &[bool]) -> bool {
        let n = self.len();
        (0..n).all(|a| !set[a] || (0..n).all(|b| !self.leq[a][b] || set[b]))
    }

    /// Greatest lower bound of `a` and `b`, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.len();
        let lower: Vec<usize> = (0..n).filter(|&c| self.leq[c][a] && self.leq[c][b]).collect();
        lower.iter().copied().find(|&c| lower.iter().all(|&d| self.leq[d][c]))
    }
}

/// A finite meet semilattice with a minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetSemilattice {
    order: Poset,
    meet: Vec<Vec<usize>>,
    bottom: usize,
}

impl MeetSemilattice {
    pub fn from_poset(order: Poset) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(Error::NoMinimum("empty order".into()));
        }
        let mut meet = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                meet[a][b] = order.meet(a, b).ok_or_else(|| Error::NoMinimum(format!("no meet of {a} and {b}")))?;
            }
        }
        let bottom = (0..n)
            .find(|&c| (0..n).all(|d| order.leq(c, d)))
            .ok_or_else(|| Error::NoMinimum("no least element".into()))?;
        Ok(MeetSemilattice { order, meet, bottom })
    }

    pub fn len(&self) -> usize {
        self.meet.len()
    }

    pub fn is_empty(&self) -> bool {
        self.meet.is_empty()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    /// An antichain of `k` atoms above a bottom element 0.
    pub fn antichain_with_bottom(k: usize) -> Self {
        let covers: Vec<(usize, usize)> = (1..=k).map(|v| (0, v)).collect();
        Self::from_poset(Poset::from_covers(k + 1, &covers).expect("valid covers")).expect("has meets")
    }
}
