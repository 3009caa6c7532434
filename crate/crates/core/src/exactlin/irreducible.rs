//! Irreducibility of a matrix representation.
//!
//! The main entry point is a deterministic Norton test: search the algebra
//! spanned by the action matrices for a singular element, spin its null
//! vectors, and spin one null vector of its transpose under the transposed
//! action. When the pivot has a one-dimensional null space the answer is
//! conclusive over any field. Over GF(p) a larger null space is handled by
//! spinning every projective null vector. Over ℚ the remaining cases are
//! settled by the trace-form radical and the commutant when possible, and
//! otherwise reported as not certified.

use indexmap::IndexSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::spin::{check_actions, spin_many};
use crate::exactlin::{EchelonBasis, FieldTag, Matrix, Scalar, Vector};

/// Default bound on `p^dim` for exhaustive vector enumeration.
pub const DEFAULT_BRUTE_FORCE_BOUND: u128 = 1 << 20;

#[derive(Clone, Debug)]
pub struct NortonConfig {
    /// Longest generator word enumerated while looking for a pivot.
    pub max_word_len: usize,
    /// Cap on distinct word matrices kept.
    pub max_words: usize,
    /// Cap on candidate algebra elements whose nullity is computed.
    pub max_candidates: usize,
    pub brute_force_bound: u128,
}

impl Default for NortonConfig {
    fn default() -> Self {
        NortonConfig {
            max_word_len: 6,
            max_words: 512,
            max_candidates: 20_000,
            brute_force_bound: DEFAULT_BRUTE_FORCE_BOUND,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    OneDimensional,
    /// Norton test with a nullity-one pivot.
    Norton,
    /// Norton test with every projective null vector spun (finite fields).
    NullVectorEnumeration,
    /// A submodule was found by spinning.
    SpunSubmodule,
    /// Nonzero radical of the spanned algebra (characteristic zero).
    Radical,
    /// Semisimple with scalar commutant (characteristic zero).
    ScalarCommutant,
    BruteForce,
    /// Every basis and dual basis vector spins to the whole space; not a proof.
    SpinFallback,
}

#[derive(Clone, Debug)]
pub struct Irreducibility {
    pub irreducible: bool,
    /// Basis of a proper nonzero invariant subspace when reducible.
    pub witness: Option<Vec<Vector>>,
    pub certificate: Certificate,
}

impl Irreducibility {
    /// Whether the verdict is backed by a complete argument.
    pub fn is_certified(&self) -> bool {
        self.certificate != Certificate::SpinFallback
    }

    fn simple(certificate: Certificate) -> Self {
        Irreducibility { irreducible: true, witness: None, certificate }
    }

    fn reducible(witness: Vec<Vector>, certificate: Certificate) -> Self {
        Irreducibility { irreducible: false, witness: Some(witness), certificate }
    }
}

struct Module<'a> {
    field: FieldTag,
    dim: usize,
    actions: &'a [Matrix],
    transposed: Option<Vec<Matrix>>,
}

impl<'a> Module<'a> {
    fn spin(&self, v: &Vector) -> Result<EchelonBasis> {
        spin_many(std::slice::from_ref(v), self.actions, self.field, self.dim)
    }

    fn transposed(&mut self) -> &[Matrix] {
        self.transposed
            .get_or_insert_with(|| self.actions.iter().map(Matrix::transpose).collect())
    }

    /// Spins one null vector of `aᵀ` under the dual action. A proper result
    /// gives a proper submodule of the original module: its annihilator.
    fn dual_check(&mut self, pivot: &Matrix) -> Result<Option<Vec<Vector>>> {
        let null = pivot.transpose().null_space()?;
        let Some(w) = null.into_iter().next() else {
            return Ok(None);
        };
        let (field, dim) = (self.field, self.dim);
        let dual = spin_many(&[w], self.transposed(), field, dim)?;
        if dual.is_full() {
            return Ok(None);
        }
        let ann = Matrix::from_rows(field, dual.into_vectors(), dim)?.null_space()?;
        Ok(Some(ann))
    }
}

fn projective_combinations(field: FieldTag, basis: &[Vector], coeffs: &[Scalar]) -> Vec<Vector> {
    // Coefficient tuples whose first nonzero entry is one.
    let k = basis.len();
    let dim = basis.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut tuple = vec![0usize; k];
    loop {
        let lead = tuple.iter().position(|&i| !coeffs[i].is_zero());
        if let Some(l) = lead {
            if coeffs[tuple[l]].is_one() {
                let mut v = vec![field.zero(); dim];
                for (b, &ci) in basis.iter().zip(&tuple) {
                    let c = &coeffs[ci];
                    if c.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = &*x + &(c * y);
                    }
                }
                out.push(v);
            }
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return out;
            }
            tuple[pos] += 1;
            if tuple[pos] < coeffs.len() {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

fn pow_bound(p: u64, k: usize) -> u128 {
    (p as u128).saturating_pow(k as u32)
}

/// Candidate algebra elements in a fixed order: words in length-lex order,
/// each followed by small scalar shifts, then pairwise sums.
struct CandidateSearch<'a> {
    field: FieldTag,
    dim: usize,
    actions: &'a [Matrix],
    config: &'a NortonConfig,
}

enum Pivot {
    NullityOne(Matrix),
    Singular(Matrix, usize),
    None,
}

impl CandidateSearch<'_> {
    fn shifts(&self) -> Vec<Scalar> {
        let mut seen = IndexSet::new();
        for c in [-1i64, 1, -2, 2] {
            let s = self.field.from_i64(c);
            if !s.is_zero() {
                seen.insert(s);
            }
        }
        seen.into_iter().collect()
    }

    fn find(&self) -> Result<Pivot> {
        let shifts = self.shifts();
        let mut words: IndexSet<Matrix> = IndexSet::new();
        let mut frontier: Vec<Matrix> = Vec::new();
        let mut best: Option<(Matrix, usize)> = None;
        let mut tried = 0usize;
        let mut tried_set: IndexSet<Matrix> = IndexSet::new();

        let mut consider = |m: Matrix, best: &mut Option<(Matrix, usize)>, tried: &mut usize| -> Result<Option<Matrix>> {
            if *tried >= self.config.max_candidates || !tried_set.insert(m.clone()) {
                return Ok(None);
            }
            *tried += 1;
            let k = m.nullity()?;
            if k == 1 {
                return Ok(Some(m));
            }
            if k > 0 && k < self.dim && best.as_ref().is_none_or(|(_, b)| k < *b) {
                *best = Some((m, k));
            }
            Ok(None)
        };

        for len in 1..=self.config.max_word_len {
            let level: Vec<Matrix> = if len == 1 {
                self.actions.to_vec()
            } else {
                let mut next = Vec::new();
                'outer: for w in &frontier {
                    for g in self.actions {
                        if words.len() + next.len() >= self.config.max_words {
                            break 'outer;
                        }
                        next.push(w.mul(g)?);
                    }
                }
                next
            };
            let mut fresh = Vec::new();
            for w in level {
                if words.len() >= self.config.max_words {
                    break;
                }
                if words.insert(w.clone()) {
                    fresh.push(w);
                }
            }
            if fresh.is_empty() {
                break;
            }
            for w in &fresh {
                if let Some(p) = consider(w.clone(), &mut best, &mut tried)? {
                    return Ok(Pivot::NullityOne(p));
                }
                for c in &shifts {
                    if let Some(p) = consider(w.add_scalar_identity(c), &mut best, &mut tried)? {
                        return Ok(Pivot::NullityOne(p));
                    }
                }
            }
            let first_fresh = words.len() - fresh.len();
            for i in first_fresh..words.len() {
                for j in 0..i {
                    let s = words[i].add(&words[j])?;
                    if let Some(p) = consider(s, &mut best, &mut tried)? {
                        return Ok(Pivot::NullityOne(p));
                    }
                }
            }
            if tried >= self.config.max_candidates {
                break;
            }
            frontier = fresh;
        }
        Ok(match best {
            Some((m, k)) => Pivot::Singular(m, k),
            None => Pivot::None,
        })
    }
}

/// Basis of the algebra spanned by all words in `actions`, identity included.
pub fn spanned_algebra(actions: &[Matrix], field: FieldTag, dim: usize) -> Result<Vec<Matrix>> {
    field.require_computable()?;
    check_actions(actions, dim, field)?;
    let mut span = EchelonBasis::new(field, dim * dim);
    let mut basis = Vec::new();
    let id = Matrix::identity(field, dim);
    span.insert(id.entries());
    basis.push(id);
    let mut next = 0;
    while next < basis.len() && !span.is_full() {
        let x = basis[next].clone();
        next += 1;
        for g in actions {
            let y = x.mul(g)?;
            if span.insert(y.entries()) {
                basis.push(y);
            }
        }
    }
    Ok(basis)
}

/// Jacobson radical of a matrix algebra over ℚ, as the kernel of the trace form.
fn rational_radical(basis: &[Matrix]) -> Result<Vec<Matrix>> {
    let field = FieldTag::Rationals;
    let n = basis.len();
    let mut gram = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in i..n {
            let prod = basis[i].mul(&basis[j])?;
            let tr = (0..prod.rows()).fold(field.zero(), |acc, k| &acc + prod.get(k, k));
            gram.set(i, j, tr.clone());
            gram.set(j, i, tr);
        }
    }
    gram.null_space()?
        .into_iter()
        .map(|c| {
            let dim = basis[0].rows();
            let mut m = Matrix::zeros(field, dim, dim);
            for (ci, b) in c.iter().zip(basis) {
                if !ci.is_zero() {
                    let scaled = Matrix::from_rows(
                        field,
                        (0..dim).map(|r| b.row(r).iter().map(|x| ci * x).collect()).collect(),
                        dim,
                    )?;
                    m = m.add(&scaled)?;
                }
            }
            Ok(m)
        })
        .collect()
}

/// Dimension of `{X : XG = GX for every G in gens}`.
pub fn commutant_dim(gens: &[Matrix], field: FieldTag, dim: usize) -> Result<usize> {
    let n2 = dim * dim;
    let mut rows = EchelonBasis::new(field, n2);
    for g in gens {
        for i in 0..dim {
            for j in 0..dim {
                // (XG - GX)_{ij} as a linear form in the entries of X.
                let mut row = vec![field.zero(); n2];
                for k in 0..dim {
                    row[i * dim + k] = &row[i * dim + k] + g.get(k, j);
                    row[k * dim + j] = &row[k * dim + j] - g.get(i, k);
                }
                rows.insert(&row);
            }
        }
        if rows.is_full() {
            break;
        }
    }
    Ok(n2 - rows.len())
}

enum Settled {
    Done(Irreducibility),
    Open,
}

fn rational_certificate(module: &Module<'_>) -> Result<Settled> {
    if module.field != FieldTag::Rationals {
        return Ok(Settled::Open);
    }
    let algebra = spanned_algebra(module.actions, module.field, module.dim)?;
    let radical = rational_radical(&algebra)?;
    if !radical.is_empty() {
        let mut image = EchelonBasis::new(module.field, module.dim);
        for r in &radical {
            for j in 0..module.dim {
                image.insert(&r.column(j));
            }
        }
        return Ok(Settled::Done(Irreducibility::reducible(image.into_vectors(), Certificate::Radical)));
    }
    if commutant_dim(&algebra, module.field, module.dim)? == 1 {
        return Ok(Settled::Done(Irreducibility::simple(Certificate::ScalarCommutant)));
    }
    Ok(Settled::Open)
}

/// Decides whether the module given by `actions` on `dim`-dimensional
/// column vectors has a proper nonzero invariant subspace.
pub fn is_irreducible(actions: &[Matrix], dim: usize) -> Result<Irreducibility> {
    is_irreducible_with(actions, dim, &NortonConfig::default())
}

pub fn is_irreducible_with(actions: &[Matrix], dim: usize, config: &NortonConfig) -> Result<Irreducibility> {
    let Some(first) = actions.first() else {
        return Err(Error::DimensionMismatch("no action matrices".into()));
    };
    let field = first.field();
    field.require_computable()?;
    if dim == 0 {
        return Err(Error::DimensionMismatch("zero-dimensional module".into()));
    }
    check_actions(actions, dim, field)?;
    if dim == 1 {
        return Ok(Irreducibility::simple(Certificate::OneDimensional));
    }

    let mut module = Module { field, dim, actions, transposed: None };
    let search = CandidateSearch { field, dim, actions, config };
    match search.find()? {
        Pivot::NullityOne(a) => {
            let v = a.null_space()?.remove(0);
            let s = module.spin(&v)?;
            if !s.is_full() {
                return Ok(Irreducibility::reducible(s.into_vectors(), Certificate::Norton));
            }
            Ok(match module.dual_check(&a)? {
                Some(w) => Irreducibility::reducible(w, Certificate::Norton),
                None => Irreducibility::simple(Certificate::Norton),
            })
        }
        Pivot::Singular(a, k) => {
            let null = a.null_space()?;
            let (vectors, exhaustive) = match field {
                FieldTag::Gf(p) if pow_bound(p.get(), k) <= config.brute_force_bound => {
                    (projective_combinations(field, &null, &field.elements().unwrap_or_default()), true)
                }
                _ => {
                    let small: Vec<Scalar> = [0, 1, -1].iter().map(|&c| field.from_i64(c)).collect();
                    (projective_combinations(field, &null, &small), false)
                }
            };
            for v in &vectors {
                let s = module.spin(v)?;
                if !s.is_full() {
                    return Ok(Irreducibility::reducible(s.into_vectors(), Certificate::SpunSubmodule));
                }
            }
            if let Some(w) = module.dual_check(&a)? {
                return Ok(Irreducibility::reducible(w, Certificate::SpunSubmodule));
            }
            if exhaustive {
                return Ok(Irreducibility::simple(Certificate::NullVectorEnumeration));
            }
            if let Settled::Done(r) = rational_certificate(&module)? {
                return Ok(r);
            }
            Ok(Irreducibility::simple(Certificate::SpinFallback))
        }
        Pivot::None => fallback(&mut module, config),
    }
}

fn fallback(module: &mut Module<'_>, config: &NortonConfig) -> Result<Irreducibility> {
    let (field, dim) = (module.field, module.dim);
    if let FieldTag::Gf(p) = field {
        if pow_bound(p.get(), dim) <= config.brute_force_bound {
            return Ok(match reducing_vector(module.actions, field, dim)? {
                Some(w) => Irreducibility::reducible(w, Certificate::BruteForce),
                None => Irreducibility::simple(Certificate::BruteForce),
            });
        }
    }
    let unit = |i: usize| -> Vector {
        let mut v = vec![field.zero(); dim];
        v[i] = field.one();
        v
    };
    for i in 0..dim {
        let s = module.spin(&unit(i))?;
        if !s.is_full() {
            return Ok(Irreducibility::reducible(s.into_vectors(), Certificate::SpunSubmodule));
        }
    }
    for i in 0..dim {
        let dual = spin_many(&[unit(i)], module.transposed(), field, dim)?;
        if !dual.is_full() {
            let ann = Matrix::from_rows(field, dual.into_vectors(), dim)?.null_space()?;
            return Ok(Irreducibility::reducible(ann, Certificate::SpunSubmodule));
        }
    }
    if let Settled::Done(r) = rational_certificate(module)? {
        return Ok(r);
    }
    Ok(Irreducibility::simple(Certificate::SpinFallback))
}

/// First normalized nonzero vector whose spin is proper, by exhaustive enumeration.
fn reducing_vector(actions: &[Matrix], field: FieldTag, dim: usize) -> Result<Option<Vec<Vector>>> {
    let elements = field.elements().ok_or(Error::FieldNotComputable(field))?;
    let units: Vec<Vector> = (0..dim)
        .map(|i| {
            let mut v = vec![field.zero(); dim];
            v[i] = field.one();
            v
        })
        .collect();
    for v in projective_combinations(field, &units, &elements) {
        let s = spin_many(&[v], actions, field, dim)?;
        if !s.is_full() {
            return Ok(Some(s.into_vectors()));
        }
    }
    Ok(None)
}

/// Exhaustive irreducibility test over GF(p): spins every nonzero vector.
pub fn brute_force_irreducible_gfp(actions: &[Matrix], dim: usize, bound: u128) -> Result<bool> {
    let Some(first) = actions.first() else {
        return Err(Error::DimensionMismatch("no action matrices".into()));
    };
    let field = first.field();
    let FieldTag::Gf(p) = field else {
        return Err(Error::FieldNotComputable(field));
    };
    let needed = pow_bound(p.get(), dim);
    if needed > bound {
        return Err(Error::BoundExceeded { needed, bound });
    }
    check_actions(actions, dim, field)?;
    if dim <= 1 {
        return Ok(true);
    }
    Ok(reducing_vector(actions, field, dim)?.is_none())
}
