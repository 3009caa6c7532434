use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{FieldTag, Matrix};
use crate::tmon::{maximal_subgroup, GreenData, MonoidData, Transformation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// The points of Ω.
    Omega,
    /// `{ω_i − ω_0 : i ≥ 1}`.
    Aug,
}

/// One matrix per monoid element, acting on column vectors.
#[derive(Clone, Debug)]
pub struct ActionModule {
    basis: Basis,
    field: FieldTag,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl ActionModule {
    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, id: usize) -> &Matrix {
        &self.matrices[id]
    }

    /// Distinct matrices, in first-seen order.
    pub fn distinct_matrices(&self) -> Vec<Matrix> {
        let set: indexmap::IndexSet<&Matrix> = self.matrices.iter().collect();
        set.into_iter().cloned().collect()
    }
}

/// The permutation matrix-like 0/1 matrix of `t` on the point basis.
pub fn omega_matrix(t: &Transformation, field: FieldTag) -> Matrix {
    let n = t.degree();
    let mut a = Matrix::zeros(field, n, n);
    for w in 0..n {
        a.set(t.apply(w), w, field.one());
    }
    a
}

/// Matrix of `t` on the basis `{ω_i − ω_0}` given by an image array.
fn aug_matrix_of_image(image: &[usize], field: FieldTag) -> Matrix {
    let n = image.len();
    let d = n.saturating_sub(1);
    let mut a = Matrix::zeros(field, d, d);
    // t(ω_i − ω_0) = (ω_{t i} − ω_0) − (ω_{t 0} − ω_0).
    let base = image[0];
    for i in 1..n {
        let target = image[i];
        if target == base {
            continue;
        }
        if target != 0 {
            a.set(target - 1, i - 1, a.get(target - 1, i - 1) + &field.one());
        }
        if base != 0 {
            a.set(base - 1, i - 1, a.get(base - 1, i - 1) - &field.one());
        }
    }
    a
}

pub fn aug_matrix(t: &Transformation, field: FieldTag) -> Matrix {
    aug_matrix_of_image(t.image(), field)
}

pub fn omega_module(m: &MonoidData, field: FieldTag) -> Result<ActionModule> {
    field.require_computable()?;
    Ok(ActionModule {
        basis: Basis::Omega,
        field,
        dim: m.degree(),
        matrices: m.elements().iter().map(|t| omega_matrix(t, field)).collect(),
    })
}

/// Restriction of an Ω-basis module to the augmentation submodule.
pub fn aug_module(a: &ActionModule) -> ActionModule {
    assert_eq!(a.basis, Basis::Omega, "aug_module expects a point-basis module");
    let n = a.dim;
    let d = n.saturating_sub(1);
    let field = a.field;
    let matrices = a
        .matrices
        .iter()
        .map(|p| {
            let mut out = Matrix::zeros(field, d, d);
            for i in 1..n {
                for k in 1..n {
                    out.set(k - 1, i - 1, p.get(k, i) - p.get(k, 0));
                }
            }
            out
        })
        .collect();
    ActionModule { basis: Basis::Aug, field, dim: d, matrices }
}

/// Aug-basis module of the whole monoid, built directly from the image arrays.
pub fn monoid_aug_module(m: &MonoidData, field: FieldTag) -> Result<ActionModule> {
    field.require_computable()?;
    Ok(ActionModule {
        basis: Basis::Aug,
        field,
        dim: m.degree().saturating_sub(1),
        matrices: m.elements().iter().map(|t| aug_matrix(t, field)).collect(),
    })
}

/// A permutation group given by its elements acting on a sorted point list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    /// The points, as indices into Ω.
    pub points: Vec<usize>,
    /// Each element as a permutation of `0..points.len()`.
    pub perms: Vec<Vec<usize>>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.points.len()
    }

    fn orbit_count<T: Ord + Clone>(&self, items: Vec<T>, act: impl Fn(&[usize], &T) -> T) -> usize {
        let mut uf = petgraph::unionfind::UnionFind::<usize>::new(items.len());
        let index = |x: &T| items.binary_search(x).expect("action preserves the item set");
        for (i, x) in items.iter().enumerate() {
            for p in &self.perms {
                uf.union(i, index(&act(p, x)));
            }
        }
        let mut roots: Vec<usize> = (0..items.len()).map(|i| uf.find(i)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    /// Transitive on ordered pairs of distinct points.
    pub fn is_2_transitive(&self) -> bool {
        let n = self.degree();
        if n <= 2 {
            return self.orbit_count((0..n).collect(), |p, &x| p[x]) <= 1;
        }
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
        self.orbit_count(pairs, |p, &(a, b)| (p[a], p[b])) == 1
    }

    /// Transitive on unordered pairs of distinct points.
    pub fn is_2_homogeneous(&self) -> bool {
        let n = self.degree();
        if n < 2 {
            return true;
        }
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        self.orbit_count(pairs, |p, &(a, b)| (p[a].min(p[b]), p[a].max(p[b]))) == 1
    }

    pub fn aug_matrices(&self, field: FieldTag) -> Vec<Matrix> {
        self.perms.iter().map(|p| aug_matrix_of_image(p, field)).collect()
    }
}

/// `H_e` acting on `eΩ`.
pub fn restricted_group(m: &MonoidData, g: &GreenData, e: usize) -> Result<PermGroup> {
    let members = maximal_subgroup(m, g, e)?;
    let points = m.element(e).image_set();
    let local = |w: usize| points.binary_search(&w).expect("H_e preserves eΩ");
    let perms = members
        .iter()
        .map(|&h| points.iter().map(|&w| local(m.element(h).apply(w))).collect())
        .collect();
    Ok(PermGroup { points, perms })
}

/// Aug-basis module of `H_e` on `eΩ`, of dimension `|eΩ| − 1`.
pub fn restricted_group_module(m: &MonoidData, g: &GreenData, e: usize, field: FieldTag) -> Result<ActionModule> {
    field.require_computable()?;
    let group = restricted_group(m, g, e)?;
    let dim = group.degree().saturating_sub(1);
    Ok(ActionModule { basis: Basis::Aug, field, dim, matrices: group.aug_matrices(field) })
}

/// Checks that every matrix is square of the module's dimension.
pub fn validate(a: &ActionModule) -> Result<()> {
    for (i, x) in a.matrices.iter().enumerate() {
        if x.rows() != a.dim || x.cols() != a.dim {
            return Err(Error::DimensionMismatch(format!("matrix {i} does not match dimension {}", a.dim)));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t3() -> MonoidData {
        let gens = [Transformation::cycle(3), Transformation::transposition(3, 0, 1), Transformation::collapse(3, 1, 0)];
        MonoidData::closure(3, &gens).unwrap()
    }

    #[test]
    fn omega_matrices() {
        let q = FieldTag::Rationals;
        let m = t3();
        let a = omega_module(&m, q).unwrap();
        assert_eq!(a.matrix(0), &Matrix::identity(q, 3));
        let c = m.id_of(&Transformation::constant(3, 0)).unwrap();
        assert_eq!(a.matrix(c), &Matrix::from_i64_rows(q, &[vec![1, 1, 1], vec![0, 0, 0], vec![0, 0, 0]]).unwrap());
        let cyc = m.id_of(&Transformation::cycle(3)).unwrap();
        assert_eq!(a.matrix(cyc), &Matrix::from_i64_rows(q, &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]).unwrap());
        assert!(omega_module(&m, FieldTag::Reals).is_err());
    }

    #[test]
    fn aug_matrices() {
        let q = FieldTag::Rationals;
        let m = t3();
        let aug = aug_module(&omega_module(&m, q).unwrap());
        assert_eq!(aug.dim(), 2);
        assert_eq!(aug.matrix(0), &Matrix::identity(q, 2));
        for c in 0..3 {
            let id = m.id_of(&Transformation::constant(3, c)).unwrap();
            assert_eq!(aug.matrix(id), &Matrix::zeros(q, 2, 2));
        }
        // (w1 - w0) -> -(w1 - w0), (w2 - w0) -> (w2 - w0) - (w1 - w0).
        let swap = m.id_of(&Transformation::transposition(3, 0, 1)).unwrap();
        assert_eq!(aug.matrix(swap), &Matrix::from_i64_rows(q, &[vec![-1, -1], vec![0, 1]]).unwrap());
        let direct = monoid_aug_module(&m, q).unwrap();
        assert_eq!(direct.matrices(), aug.matrices());
    }

    #[test]
    fn restricted_modules_of_t3() {
        let q = FieldTag::Rationals;
        let m = t3();
        let g = GreenData::new(&m);
        let units = restricted_group_module(&m, &g, 0, q).unwrap();
        assert_eq!((units.dim(), units.matrices().len()), (2, 6));
        let e = m.id_of(&Transformation::collapse(3, 1, 0)).unwrap();
        assert_eq!(restricted_group_module(&m, &g, e, q).unwrap().dim(), 1);
        let c = m.id_of(&Transformation::constant(3, 1)).unwrap();
        assert_eq!(restricted_group_module(&m, &g, c, q).unwrap().dim(), 0);
        let cyc = m.id_of(&Transformation::cycle(3)).unwrap();
        assert!(matches!(restricted_group_module(&m, &g, cyc, q), Err(Error::NotIdempotent(_))));
    }

    #[test]
    fn perm_group_criteria() {
        let s3 = PermGroup {
            points: vec![0, 1, 2],
            perms: vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1], vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]],
        };
        assert!(s3.is_2_transitive() && s3.is_2_homogeneous());
        let c3 = PermGroup { points: vec![0, 1, 2], perms: vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]] };
        assert!(!c3.is_2_transitive());
        assert!(c3.is_2_homogeneous());
        let c4 = PermGroup {
            points: vec![0, 1, 2, 3],
            perms: (0..4).map(|s| (0..4).map(|i| (i + s) % 4).collect()).collect(),
        };
        assert!(!c4.is_2_homogeneous());
        let trivial = PermGroup { points: vec![3, 5], perms: vec![vec![0, 1]] };
        assert!(trivial.is_2_homogeneous());
        assert!(!trivial.is_2_transitive());
    }
}
