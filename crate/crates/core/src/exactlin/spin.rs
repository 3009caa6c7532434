use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::exactlin::{EchelonBasis, FieldTag, Matrix, Scalar, Vector};

pub(crate) fn check_actions(actions: &[Matrix], dim: usize, field: FieldTag) -> Result<()> {
    for (i, a) in actions.iter().enumerate() {
        if a.rows() != dim || a.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "action {i} is {}x{}, expected {dim}x{dim}",
                a.rows(),
                a.cols()
            )));
        }
        if a.field() != field {
            return Err(Error::DimensionMismatch(format!(
                "action {i} is over {}, expected {field}",
                a.field()
            )));
        }
    }
    Ok(())
}

/// Basis (reduced echelon form) of the smallest subspace containing every
/// seed and invariant under every action matrix.
pub fn spin_many(seeds: &[Vector], actions: &[Matrix], field: FieldTag, dim: usize) -> Result<EchelonBasis> {
    field.require_computable()?;
    check_actions(actions, dim, field)?;
    let mut basis = EchelonBasis::new(field, dim);
    let mut queue = VecDeque::new();
    for s in seeds {
        if s.len() != dim {
            return Err(Error::DimensionMismatch(format!("seed of length {} in dimension {dim}", s.len())));
        }
        if basis.insert(s) {
            queue.push_back(s.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        if basis.is_full() {
            break;
        }
        for a in actions {
            let w = a.mul_vec(&v)?;
            if basis.insert(&w) {
                queue.push_back(w);
            }
        }
    }
    Ok(basis)
}

/// Basis of the submodule generated by `seed`.
pub fn spin(seed: &[Scalar], actions: &[Matrix]) -> Result<Vec<Vector>> {
    let field = match (seed.first(), actions.first()) {
        (_, Some(a)) => a.field(),
        (Some(Scalar::Gf { p, .. }), None) => FieldTag::gf(*p)?,
        _ => FieldTag::Rationals,
    };
    Ok(spin_many(&[seed.to_vec()], actions, field, seed.len())?.into_vectors())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_seed_spins_to_nothing() {
        let f = FieldTag::Rationals;
        let basis = spin(&[f.zero(), f.zero()], &[Matrix::identity(f, 2)]).unwrap();
        assert!(basis.is_empty());
    }

    #[test]
    fn identity_action_keeps_a_line() {
        let f = FieldTag::gf(5).unwrap();
        let e1 = vec![f.one(), f.zero(), f.zero()];
        let basis = spin(&e1, &[Matrix::identity(f, 3)]).unwrap();
        assert_eq!(basis, vec![e1]);
    }

    #[test]
    fn cyclic_shift_fills_space() {
        let f = FieldTag::Rationals;
        let shift = Matrix::from_i64_rows(f, &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let e1 = vec![f.one(), f.zero(), f.zero()];
        assert_eq!(spin(&e1, std::slice::from_ref(&shift)).unwrap().len(), 3);
        // The all-ones vector is fixed.
        let ones = vec![f.one(); 3];
        assert_eq!(spin(&ones, &[shift]).unwrap().len(), 1);
    }

    #[test]
    fn mismatched_dimensions_error() {
        let f = FieldTag::Rationals;
        let r = spin(&[f.one(), f.zero()], &[Matrix::identity(f, 3)]);
        assert!(matches!(r, Err(Error::DimensionMismatch(_))));
    }
}
