use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::tmon::Transformation;

/// Default cap on the number of elements produced by [`MonoidData::closure`].
pub const DEFAULT_SIZE_BOUND: usize = 2_000_000;

/// Environment variable overriding [`DEFAULT_SIZE_BOUND`].
pub const SIZE_BOUND_VAR: &str = "AUGCHECK_SIZE_BOUND";

pub fn size_bound() -> usize {
    std::env::var(SIZE_BOUND_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SIZE_BOUND)
}

/// A finite transformation monoid with its elements enumerated.
///
/// Element 0 is the identity. Ids follow breadth-first discovery order
/// under right multiplication by the generators.
#[derive(Clone, Debug)]
pub struct MonoidData {
    degree: usize,
    generators: Vec<Transformation>,
    elements: Vec<Transformation>,
    index: HashMap<Transformation, usize>,
    // (parent, generator) such that element = parent * generator.
    parent: Vec<Option<(usize, usize)>>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
}

impl MonoidData {
    /// Closure of `generators` under composition, with the default size bound.
    pub fn closure(degree: usize, generators: &[Transformation]) -> Result<Self> {
        Self::closure_bounded(degree, generators, size_bound())
    }

    pub fn closure_bounded(degree: usize, generators: &[Transformation], bound: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidTransformation("degree must be at least 1".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.degree() != degree {
                return Err(Error::InvalidTransformation(format!(
                    "generator {i} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let id = Transformation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut parent = vec![None];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mut row = Vec::with_capacity(generators.len());
            for (gi, g) in generators.iter().enumerate() {
                let y = elements[x].compose(g);
                let id = match index.get(&y) {
                    Some(&id) => id,
                    None => {
                        let id = elements.len();
                        if id >= bound {
                            return Err(Error::SizeBound(format!("more than {bound} elements")));
                        }
                        index.insert(y.clone(), id);
                        elements.push(y);
                        parent.push(Some((x, gi)));
                        queue.push_back(id);
                        id
                    }
                };
                row.push(id);
            }
            // BFS pops ids in increasing order.
            debug_assert_eq!(right.len(), x);
            right.push(row);
        }
        let left = elements
            .iter()
            .map(|x| generators.iter().map(|g| index[&g.compose(x)]).collect())
            .collect();
        Ok(MonoidData { degree, generators: generators.to_vec(), elements, index, parent, right, left })
    }

    /// Builds a monoid from an explicit element list that must already be
    /// closed under composition and contain the identity.
    ///
    /// A generating set is chosen greedily and the closure of that set is
    /// compared against the input.
    pub fn from_elements(degree: usize, elements: &[Transformation]) -> Result<Self> {
        let mut sorted: Vec<&Transformation> = elements.iter().collect();
        for t in &sorted {
            if t.degree() != degree {
                return Err(Error::InvalidTransformation(format!(
                    "element {t} has degree {}, expected {degree}",
                    t.degree()
                )));
            }
        }
        sorted.sort_by(|a, b| b.rank().cmp(&a.rank()).then_with(|| a.cmp(b)));
        sorted.dedup();
        let target: std::collections::HashSet<&Transformation> = sorted.iter().copied().collect();
        if !target.contains(&Transformation::identity(degree)) {
            return Err(Error::NotClosed);
        }

        let mut gens: Vec<Transformation> = Vec::new();
        let mut current = Self::closure_bounded(degree, &gens, target.len() + 1)?;
        for t in sorted {
            if current.id_of(t).is_some() {
                continue;
            }
            gens.push(t.clone());
            current = match Self::closure_bounded(degree, &gens, target.len() + 1) {
                Ok(m) => m,
                Err(Error::SizeBound(_)) => return Err(Error::NotClosed),
                Err(e) => return Err(e),
            };
        }
        if current.len() != target.len() || current.elements.iter().any(|e| !target.contains(e)) {
            return Err(Error::NotClosed);
        }
        Ok(current)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Transformation] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &Transformation {
        &self.elements[id]
    }

    pub fn id_of(&self, t: &Transformation) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// `right(x)[g]` is the id of `x * generator_g`.
    pub fn right(&self, x: usize) -> &[usize] {
        &self.right[x]
    }

    /// `left(x)[g]` is the id of `generator_g * x`.
    pub fn left(&self, x: usize) -> &[usize] {
        &self.left[x]
    }

    /// Id of the product `a * b`.
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    /// Generator indices whose product, left to right, is element `id`.
    pub fn word(&self, id: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = id;
        while let Some((p, g)) = self.parent[cur] {
            word.push(g);
            cur = p;
        }
        word.reverse();
        word
    }

    pub fn evaluate(&self, word: &[usize]) -> Transformation {
        word.iter()
            .fold(Transformation::identity(self.degree), |acc, &g| acc.compose(&self.generators[g]))
    }

    pub fn rank(&self, id: usize) -> usize {
        self.elements[id].rank()
    }

    pub fn min_rank(&self) -> usize {
        self.elements.iter().map(Transformation::rank).min().unwrap_or(0)
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.elements[i].is_idempotent()).collect()
    }

    /// True when every element is a permutation.
    pub fn is_group(&self) -> bool {
        self.generators.iter().all(Transformation::is_permutation)
    }
}
