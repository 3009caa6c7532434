use crate::error::{Error, Result};
use crate::exactlin::{FieldTag, Matrix, Prime};
use crate::tmon::{size_bound, MonoidData, Transformation};
use crate::zoo::{Digraph, Graph, MeetSemilattice, Poset, SimplicialComplex};

/// Largest point set accepted by the constructors.
pub const DEFAULT_DEGREE_BOUND: usize = 12;

fn check_degree(n: usize) -> Result<()> {
    if n > DEFAULT_DEGREE_BOUND {
        return Err(Error::SizeBound(format!("{n} points exceed the bound of {DEFAULT_DEGREE_BOUND}")));
    }
    if n < 2 {
        return Err(Error::InvalidStructure(format!("need at least 2 points, got {n}")));
    }
    Ok(())
}

/// All maps `0..n → 0..n` accepted by `ok`, found by assigning images in
/// vertex order. `ok(image, v)` sees images of `0..=v` and must check every
/// constraint whose largest vertex is `v`.
fn backtrack(n: usize, ok: impl Fn(&[usize], usize) -> bool) -> Result<Vec<Transformation>> {
    let bound = size_bound();
    let mut out = Vec::new();
    let mut image = vec![0usize; n];
    let mut v = 0usize;
    // image[v] holds the next candidate to try at depth v.
    loop {
        if image[v] == n {
            if v == 0 {
                break;
            }
            image[v] = 0;
            v -= 1;
            image[v] += 1;
            continue;
        }
        if ok(&image[..=v], v) {
            if v + 1 == n {
                if out.len() == bound {
                    return Err(Error::SizeBound(format!("more than {bound} maps")));
                }
                out.push(Transformation::new(image.clone()).expect("images are in range"));
                image[v] += 1;
            } else {
                v += 1;
            }
        } else {
            image[v] += 1;
        }
    }
    Ok(out)
}

/// Simplicial endomorphisms of a connected graph viewed as a 1-dimensional complex.
pub fn end_graph(g: &Graph) -> Result<MonoidData> {
    end_simplicial(&SimplicialComplex::from_graph(g))
}

/// All self-maps sending every face to a face.
pub fn end_simplicial(k: &SimplicialComplex) -> Result<MonoidData> {
    let n = k.vertex_count();
    check_degree(n)?;
    if !k.skeleton().is_connected() {
        return Err(Error::Disconnected);
    }
    let by_vertex: Vec<Vec<u64>> =
        (0..n).map(|v| k.facet_masks().iter().copied().filter(|f| f & (1 << v) != 0).collect()).collect();
    let elements = backtrack(n, |img, v| {
        let assigned = if v == 63 { u64::MAX } else { (1u64 << (v + 1)) - 1 };
        by_vertex[v].iter().all(|&f| {
            let part = f & assigned;
            let mask = (0..=v).filter(|&u| part & (1 << u) != 0).fold(0u64, |m, u| m | (1 << img[u]));
            k.is_face_mask(mask)
        })
    })?;
    MonoidData::from_elements(n, &elements)
}

/// Orientation-preserving simplicial endomorphisms of an acyclic connected digraph.
pub fn end_digraph_acyclic(d: &Digraph) -> Result<MonoidData> {
    let n = d.vertex_count();
    check_degree(n)?;
    if !d.is_acyclic() {
        return Err(Error::Cyclic);
    }
    if !d.underlying().is_connected() {
        return Err(Error::Disconnected);
    }
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    let elements = backtrack(n, |img, v| {
        arcs.iter()
            .filter(|&&(a, b)| a.max(b) == v)
            .all(|&(a, b)| img[a] == img[b] || d.has_arc(img[a], img[b]))
    })?;
    MonoidData::from_elements(n, &elements)
}

/// Order-preserving self-maps of a poset with connected Hasse diagram.
pub fn end_poset(p: &Poset) -> Result<MonoidData> {
    let n = p.len();
    check_degree(n)?;
    if !p.is_hasse_connected() {
        return Err(Error::Disconnected);
    }
    let elements = backtrack(n, |img, v| {
        (0..=v).all(|u| (!p.leq(u, v) || p.leq(img[u], img[v])) && (!p.leq(v, u) || p.leq(img[v], img[u])))
    })?;
    MonoidData::from_elements(n, &elements)
}

/// Meet endomorphisms fixing the minimum.
pub fn end_meet_semilattice(s: &MeetSemilattice) -> Result<MonoidData> {
    let n = s.len();
    check_degree(n)?;
    let bottom = s.bottom();
    let elements = backtrack(n, |img, v| {
        if v == bottom && img[v] != bottom {
            return false;
        }
        (0..=v).all(|a| {
            (0..=v).all(|b| {
                let c = s.meet(a, b);
                c > v || a.max(b).max(c) != v || img[c] == s.meet(img[a], img[b])
            })
        })
    })?;
    MonoidData::from_elements(n, &elements)
}

/// Lattice endomorphisms of the power set of an `x_size`-element set.
///
/// Points are subsets encoded as bitmasks, so point 0 is the empty set.
pub fn lattice_endos(x_size: usize) -> Result<MonoidData> {
    if x_size < 2 {
        return Err(Error::InvalidStructure("the base set needs at least 2 elements".into()));
    }
    if x_size > 3 {
        return Err(Error::SizeBound(format!("power set of a {x_size}-element set is too large")));
    }
    let n = 1usize << x_size;
    let elements = backtrack(n, |img, v| {
        (0..=v).all(|a| {
            (0..=v).all(|b| {
                let (j, m) = (a | b, a & b);
                j > v || (v != a && v != b && v != j) || (img[j] == img[a] | img[b] && img[m] == img[a] & img[b])
            })
        })
    })?;
    MonoidData::from_elements(n, &elements)
}

/// A rectangular 0/1 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroOneMatrix {
    rows: Vec<Vec<bool>>,
    cols: usize,
}

impl ZeroOneMatrix {
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::BadMatrix("matrix must be nonempty".into()));
        }
        let mut out = Vec::with_capacity(rows.len());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::BadMatrix(format!("row {i} has length {}, expected {cols}", r.len())));
            }
            let mut row = Vec::with_capacity(cols);
            for (j, &x) in r.iter().enumerate() {
                match x {
                    0 => row.push(false),
                    1 => row.push(true),
                    _ => return Err(Error::BadMatrix(format!("entry ({i}, {j}) is {x}"))),
                }
            }
            out.push(row);
        }
        Ok(ZeroOneMatrix { rows: out, cols })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> Vec<bool> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn to_matrix(&self, field: FieldTag) -> Matrix {
        let field = field.rank_delegate();
        let mut m = Matrix::zeros(field, self.nrows(), self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                if x {
                    m.set(i, j, field.one());
                }
            }
        }
        m
    }

    pub fn rank(&self, field: FieldTag) -> Result<usize> {
        self.to_matrix(field).rank()
    }

    /// Rank of the matrix with an all-ones column appended.
    pub fn rank_with_ones(&self, field: FieldTag) -> Result<usize> {
        let mut rows = self.rows.clone();
        for r in &mut rows {
            r.push(true);
        }
        ZeroOneMatrix { rows, cols: self.cols + 1 }.rank(field)
    }

    fn check_no_zero_column(&self) -> Result<()> {
        match (0..self.cols).find(|&j| self.column(j).iter().all(|&x| !x)) {
            Some(j) => Err(Error::BadMatrix(format!("column {j} is zero"))),
            None => Ok(()),
        }
    }

    fn check_no_ones_column(&self) -> Result<()> {
        match (0..self.cols).find(|&j| self.column(j).iter().all(|&x| x)) {
            Some(j) => Err(Error::BadMatrix(format!("column {j} is all ones"))),
            None => Ok(()),
        }
    }

    fn check_distinct_columns(&self) -> Result<()> {
        for a in 0..self.cols {
            for b in a + 1..self.cols {
                if self.column(a) == self.column(b) {
                    return Err(Error::BadMatrix(format!("columns {a} and {b} are equal")));
                }
            }
        }
        Ok(())
    }
}

/// The `n × (n−2)` matrix with a top row of ones, an identity block and a zero last row.
pub fn counterexample_matrix(n: usize) -> ZeroOneMatrix {
    assert!(n >= 4);
    let r = n - 2;
    let mut rows = vec![vec![1u8; r]];
    for i in 0..r {
        rows.push((0..r).map(|j| u8::from(i == j)).collect());
    }
    rows.push(vec![0; r]);
    ZeroOneMatrix::from_rows(&rows).expect("well-formed")
}

fn two_valued(n: usize, column: &[bool], on: usize, off: usize) -> Transformation {
    Transformation::new((0..n).map(|g| if column[g] { on } else { off }).collect()).expect("in range")
}

fn identity_and_constants(n: usize) -> Vec<Transformation> {
    let mut out = vec![Transformation::identity(n)];
    out.extend((0..n).map(|c| Transformation::constant(n, c)));
    out
}

/// Identity, constants and the rank-2 maps `f_{α,β,j}` for every edge and column.
pub fn m_gamma_a(g: &Graph, a: &ZeroOneMatrix) -> Result<MonoidData> {
    let n = g.vertex_count();
    check_degree(n)?;
    if a.nrows() != n {
        return Err(Error::BadMatrix(format!("{} rows for {n} vertices", a.nrows())));
    }
    a.check_no_zero_column()?;
    a.check_no_ones_column()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut elements = identity_and_constants(n);
    for (x, y) in g.edges() {
        for j in 0..a.ncols() {
            let col = a.column(j);
            elements.push(two_valued(n, &col, x, y));
            elements.push(two_valued(n, &col, y, x));
        }
    }
    MonoidData::from_elements(n, &elements)
}

/// Directed analogue: columns of `b` are upper sets of the path order and
/// each arc `w → w'` gives the map sending the column's set to `w'` and the rest to `w`.
pub fn m_digraph_b(d: &Digraph, b: &ZeroOneMatrix) -> Result<MonoidData> {
    let n = d.vertex_count();
    check_degree(n)?;
    if b.nrows() != n {
        return Err(Error::BadMatrix(format!("{} rows for {n} vertices", b.nrows())));
    }
    let order = d.path_order()?;
    if !d.underlying().is_connected() {
        return Err(Error::Disconnected);
    }
    b.check_no_zero_column()?;
    b.check_no_ones_column()?;
    if let Some(j) = (0..b.ncols()).find(|&j| !order.is_upper_set(&b.column(j))) {
        return Err(Error::NotUpperSets(j));
    }
    let mut elements = identity_and_constants(n);
    for (w, w2) in d.arcs() {
        for j in 0..b.ncols() {
            elements.push(two_valued(n, &b.column(j), w2, w));
        }
    }
    MonoidData::from_elements(n, &elements)
}

/// The map of the Rees element `(i, j)` on `{0 = sink, 1..n}`; `i` is 1-based.
pub fn rees_map(a: &ZeroOneMatrix, i: usize, j: usize) -> Transformation {
    let n = a.nrows();
    let mut image = vec![0; n + 1];
    for alpha in 1..=n {
        if a.get(alpha - 1, j) {
            image[alpha] = i;
        }
    }
    Transformation::new(image).expect("in range")
}

/// Rees matrix monoid with structure matrix `aᵀ`, acting on a sink plus `n` points.
pub fn rees_monoid(a: &ZeroOneMatrix) -> Result<MonoidData> {
    let n = a.nrows();
    check_degree(n + 1)?;
    a.check_no_zero_column()?;
    a.check_distinct_columns()?;
    let mut elements = vec![Transformation::identity(n + 1), Transformation::constant(n + 1, 0)];
    for i in 1..=n {
        for j in 0..a.ncols() {
            elements.push(rees_map(a, i, j));
        }
    }
    MonoidData::from_elements(n + 1, &elements)
}

// Every map {1..n} -> {0..n} with the sink fixed, optionally injective off the sink.
fn partial_maps(n: usize, injective: bool) -> Result<MonoidData> {
    check_degree(n + 1)?;
    let elements = backtrack(n + 1, |img, v| {
        if v == 0 {
            return img[0] == 0;
        }
        !injective || img[v] == 0 || (1..v).all(|u| img[u] != img[v])
    })?;
    MonoidData::from_elements(n + 1, &elements)
}

/// Partial injections of `{1..n}`, with 0 as the sink.
pub fn symmetric_inverse(n: usize) -> Result<MonoidData> {
    partial_maps(n, true)
}

/// All partial maps of `{1..n}`, with 0 as the sink.
pub fn partial_transformations(n: usize) -> Result<MonoidData> {
    partial_maps(n, false)
}

/// All maps `x ↦ ax + b` on the integers mod `p`.
pub fn affine_monoid(p: u64) -> Result<MonoidData> {
    let p = Prime::new(p)?.get() as usize;
    check_degree(p)?;
    let mut elements = Vec::with_capacity(p * p);
    for a in 0..p {
        for b in 0..p {
            elements.push(Transformation::new((0..p).map(|x| (a * x + b) % p).collect()).expect("in range"));
        }
    }
    MonoidData::from_elements(p, &elements)
}

/// Closure of the identity, the maps `ω_k ↦ ω_0` and the maps `ω_i ↦ ω_j`
/// (all other points fixed) on `{ω_0, .., ω_n}`.
pub fn example_0_tran(n: usize) -> Result<MonoidData> {
    if n < 2 {
        return Err(Error::InvalidStructure("need n ≥ 2".into()));
    }
    check_degree(n + 1)?;
    let mut gens = vec![Transformation::identity(n + 1)];
    gens.extend((1..=n).map(|k| Transformation::collapse(n + 1, k, 0)));
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                gens.push(Transformation::collapse(n + 1, i, j));
            }
        }
    }
    MonoidData::closure(n + 1, &gens)
}
