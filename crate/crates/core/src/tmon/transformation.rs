use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A total self-map of `{0, .., degree-1}` stored as its image array.
///
/// Products act on the left: `(a * b)(ω) = a(b(ω))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Transformation {
    image: Vec<usize>,
}

impl Transformation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidTransformation("degree must be at least 1".into()));
        }
        if let Some((w, &x)) = image.iter().enumerate().find(|(_, &x)| x >= n) {
            return Err(Error::InvalidTransformation(format!("point {w} maps to {x}, outside 0..{n}")));
        }
        Ok(Transformation { image })
    }

    pub fn identity(degree: usize) -> Self {
        Transformation { image: (0..degree).collect() }
    }

    pub fn constant(degree: usize, point: usize) -> Self {
        assert!(point < degree);
        Transformation { image: vec![point; degree] }
    }

    /// Swaps `a` and `b`, fixing everything else.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut t = Self::identity(degree);
        t.image.swap(a, b);
        t
    }

    /// Sends `from` to `to` and fixes every other point.
    pub fn collapse(degree: usize, from: usize, to: usize) -> Self {
        let mut t = Self::identity(degree);
        t.image[from] = to;
        t
    }

    /// The cycle `0 -> 1 -> .. -> degree-1 -> 0`.
    pub fn cycle(degree: usize) -> Self {
        Transformation { image: (0..degree).map(|i| (i + 1) % degree).collect() }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, point: usize) -> usize {
        self.image[point]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Transformation) -> Transformation {
        debug_assert_eq!(self.degree(), other.degree());
        Transformation { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    /// Sorted list of points in the image.
    pub fn image_set(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        for &x in &self.image {
            seen[x] = true;
        }
        (0..self.degree()).filter(|&x| seen[x]).collect()
    }

    pub fn rank(&self) -> usize {
        self.image_set().len()
    }

    pub fn is_idempotent(&self) -> bool {
        self.image.iter().all(|&x| self.image[x] == x)
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.image[point] == point
    }

    /// Points with the same image as `point`.
    pub fn kernel_class(&self, point: usize) -> Vec<usize> {
        let y = self.image[point];
        (0..self.degree()).filter(|&w| self.image[w] == y).collect()
    }
}

impl TryFrom<Vec<usize>> for Transformation {
    type Error = Error;

    fn try_from(image: Vec<usize>) -> Result<Self> {
        Transformation::new(image)
    }
}

impl From<Transformation> for Vec<usize> {
    fn from(t: Transformation) -> Self {
        t.image
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}
