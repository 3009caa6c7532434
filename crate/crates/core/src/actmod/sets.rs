use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use indexmap::IndexSet;
use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{FieldTag, Matrix};
use crate::tmon::{GreenData, MonoidData};

/// A family of distinct nonempty subsets of `{0, .., ground-1}`, in insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    ground: usize,
    blocks: IndexSet<FixedBitSet>,
}

impl SetSystem {
    pub fn new(ground: usize) -> Self {
        SetSystem { ground, blocks: IndexSet::new() }
    }

    pub fn from_blocks(ground: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut s = SetSystem::new(ground);
        for b in blocks {
            s.insert(b)?;
        }
        Ok(s)
    }

    /// Adds a block; returns false when it was already present.
    pub fn insert(&mut self, block: &[usize]) -> Result<bool> {
        if block.is_empty() {
            return Err(Error::InvalidStructure("empty block".into()));
        }
        let mut bits = FixedBitSet::with_capacity(self.ground);
        for &w in block {
            if w >= self.ground {
                return Err(Error::InvalidStructure(format!("point {w} outside ground set of size {}", self.ground)));
            }
            bits.insert(w);
        }
        Ok(self.blocks.insert(bits))
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains(&self, block: &[usize]) -> bool {
        let mut bits = FixedBitSet::with_capacity(self.ground);
        for &w in block {
            if w >= self.ground {
                return false;
            }
            bits.insert(w);
        }
        self.blocks.contains(&bits)
    }

    /// Blocks as sorted point lists.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.ones().collect()).collect()
    }

    /// `|Ω| × |blocks|` membership matrix; ℝ and ℂ are built over ℚ.
    pub fn incidence_matrix(&self, field: FieldTag) -> Matrix {
        let field = field.rank_delegate();
        let mut a = Matrix::zeros(field, self.ground, self.blocks.len());
        for (j, b) in self.blocks.iter().enumerate() {
            for w in b.ones() {
                a.set(w, j, field.one());
            }
        }
        a
    }

    pub fn incidence_rank(&self, field: FieldTag) -> Result<usize> {
        self.incidence_matrix(field).rank()
    }
}

/// `{f⁻¹(fω) : f ∈ E(J), ω ∈ Ω}`, idempotents taken in element id order.
pub fn kernel_blocks(m: &MonoidData, g: &GreenData, j: usize) -> Result<SetSystem> {
    let idempotents = g.idempotents_in(j);
    if idempotents.is_empty() {
        return Err(Error::NoIdempotents(j));
    }
    let n = m.degree();
    let mut s = SetSystem::new(n);
    for f in idempotents {
        let t = m.element(f);
        let mut done = vec![false; n];
        for w in 0..n {
            if done[w] {
                continue;
            }
            let block = t.kernel_class(w);
            for &x in &block {
                done[x] = true;
            }
            s.insert(&block)?;
        }
    }
    Ok(s)
}

/// Graph on Ω joining two points fixed by a common idempotent of a J-class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaGraph {
    pub vertices: usize,
    /// `(a, b) -> f` with `a < b` and `f` the first idempotent fixing both.
    #[serde(serialize_with = "serialize_edges")]
    pub edges: BTreeMap<(usize, usize), usize>,
    /// Component label per vertex; labels ordered by least vertex.
    pub components: Vec<usize>,
}

fn serialize_edges<S: serde::Serializer>(
    edges: &BTreeMap<(usize, usize), usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(edges.keys().map(|&(a, b)| [a, b]))
}

impl GammaGraph {
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains_key(&(a.min(b), a.max(b)))
    }

    pub fn witness(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges.keys().copied().collect()
    }

    pub fn component_count(&self) -> usize {
        self.components.iter().max().map_or(0, |&c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Two vertices in different components, when disconnected.
    pub fn disconnected_pair(&self) -> Option<(usize, usize)> {
        let b = (0..self.vertices).find(|&v| self.components[v] != self.components[0])?;
        Some((0, b))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertices;
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    /// Every edge contains `center` and every other vertex is adjacent to it.
    pub fn is_star(&self, center: usize) -> bool {
        self.edges.keys().all(|&(a, b)| a == center || b == center) && self.edges.len() + 1 == self.vertices
    }
}

pub fn gamma_graph(m: &MonoidData, g: &GreenData, j: usize) -> Result<GammaGraph> {
    let idempotents = g.idempotents_in(j);
    if idempotents.is_empty() {
        return Err(Error::NoIdempotents(j));
    }
    let n = m.degree();
    let mut edges = BTreeMap::new();
    let mut uf = UnionFind::<usize>::new(n);
    for f in idempotents {
        // The fixed points of an idempotent are its image.
        let fixed = m.element(f).image_set();
        for (i, &a) in fixed.iter().enumerate() {
            for &b in &fixed[i + 1..] {
                edges.entry((a, b)).or_insert(f);
                uf.union(a, b);
            }
        }
    }
    let roots = uf.into_labeling();
    let mut label = vec![usize::MAX; n];
    let mut components = vec![0; n];
    let mut next = 0;
    for v in 0..n {
        let r = roots[v];
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        components[v] = label[r];
    }
    Ok(GammaGraph { vertices: n, edges, components })
}
