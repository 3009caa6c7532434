#![allow(dead_code)]

use augcheck_core::exactlin::{FieldTag, Matrix, Vector};
use augcheck_core::tmon::{MonoidData, Transformation};
use augcheck_core::zoo::{
    affine_monoid, counterexample_matrix, end_digraph_acyclic, end_graph, end_meet_semilattice, end_poset,
    end_simplicial, example_0_tran, lattice_endos, m_digraph_b, m_gamma_a, partial_transformations, rees_monoid,
    symmetric_inverse, Digraph, Graph, MeetSemilattice, Poset, SimplicialComplex, ZeroOneMatrix,
};

/// Where a corpus monoid came from.
#[derive(Clone, Debug)]
pub enum Source {
    Complex(SimplicialComplex),
    Poset(Poset),
    Digraph(Digraph),
    Semilattice(MeetSemilattice),
    Lattice,
    MGamma(Graph, ZeroOneMatrix),
    MDigraph(Digraph, ZeroOneMatrix),
    Rees(ZeroOneMatrix),
    Partial,
    Other,
}

pub struct Entry {
    pub name: &'static str,
    pub monoid: MonoidData,
    pub source: Source,
}

pub fn gf(p: u64) -> FieldTag {
    FieldTag::gf(p).unwrap()
}

pub fn computable_fields() -> Vec<FieldTag> {
    vec![gf(2), gf(3), gf(5), FieldTag::Rationals]
}

pub fn zo(rows: &[&[u8]]) -> ZeroOneMatrix {
    ZeroOneMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

pub fn identity_zo(n: usize) -> ZeroOneMatrix {
    let rows: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect();
    ZeroOneMatrix::from_rows(&rows).unwrap()
}

pub fn s3() -> MonoidData {
    MonoidData::closure(3, &[Transformation::cycle(3), Transformation::transposition(3, 0, 1)]).unwrap()
}

pub fn c4_regular() -> MonoidData {
    MonoidData::closure(4, &[Transformation::cycle(4)]).unwrap()
}

pub fn trivial(n: usize) -> MonoidData {
    MonoidData::closure(n, &[Transformation::identity(n)]).unwrap()
}

pub fn fence() -> Poset {
    Poset::from_covers(3, &[(0, 1), (2, 1)]).unwrap()
}

pub fn two_triangles() -> SimplicialComplex {
    SimplicialComplex::new(4, &[vec![0, 1, 2], vec![1, 2, 3]]).unwrap()
}

fn graph_entry(name: &'static str, g: Graph) -> Entry {
    let k = SimplicialComplex::from_graph(&g);
    Entry { name, monoid: end_graph(&g).unwrap(), source: Source::Complex(k) }
}

/// Every monoid used by the cross-checks, built once.
pub fn corpus() -> Vec<Entry> {
    let mut out = vec![
        graph_entry("End(P3)", Graph::path(3)),
        graph_entry("End(P4)", Graph::path(4)),
        graph_entry("End(C4)", Graph::cycle(4)),
        graph_entry("End(C5)", Graph::cycle(5)),
        graph_entry("End(K1,4)", Graph::star(5)),
        graph_entry("End(K3)", Graph::complete(3)),
        graph_entry("End(K4)", Graph::complete(4)),
    ];
    let k = two_triangles();
    out.push(Entry { name: "End(two triangles)", monoid: end_simplicial(&k).unwrap(), source: Source::Complex(k) });
    for (name, p) in [("poset 2-chain", Poset::chain(2)), ("poset 3-chain", Poset::chain(3)), ("fence", fence())] {
        out.push(Entry { name, monoid: end_poset(&p).unwrap(), source: Source::Poset(p) });
    }
    let d = Digraph::chain(3);
    out.push(Entry { name: "digraph chain3", monoid: end_digraph_acyclic(&d).unwrap(), source: Source::Digraph(d) });
    out.push(Entry { name: "lattice endos |X|=2", monoid: lattice_endos(2).unwrap(), source: Source::Lattice });
    for (name, n) in [("M(K4, displayed)", 4), ("M(K5, displayed)", 5)] {
        let g = Graph::complete(n);
        let a = counterexample_matrix(n);
        out.push(Entry { name, monoid: m_gamma_a(&g, &a).unwrap(), source: Source::MGamma(g, a) });
    }
    let full_rank: [(&'static str, Graph, ZeroOneMatrix); 3] = [
        ("M(K3, I3)", Graph::complete(3), identity_zo(3)),
        ("M(P4, I4)", Graph::path(4), identity_zo(4)),
        ("M(C4, 3 cols)", Graph::cycle(4), zo(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 0]])),
    ];
    for (name, g, a) in full_rank {
        out.push(Entry { name, monoid: m_gamma_a(&g, &a).unwrap(), source: Source::MGamma(g, a) });
    }
    let d = Digraph::chain(3);
    let b = zo(&[&[0, 0], &[1, 0], &[1, 1]]);
    out.push(Entry { name: "M(chain3, B)", monoid: m_digraph_b(&d, &b).unwrap(), source: Source::MDigraph(d, b) });
    for (name, a) in [("Rees(I3)", identity_zo(3)), ("Rees(rank 2)", zo(&[&[1, 0], &[1, 1], &[0, 1]]))] {
        out.push(Entry { name, monoid: rees_monoid(&a).unwrap(), source: Source::Rees(a) });
    }
    out.push(Entry { name: "I2", monoid: symmetric_inverse(2).unwrap(), source: Source::Partial });
    out.push(Entry { name: "I3", monoid: symmetric_inverse(3).unwrap(), source: Source::Partial });
    out.push(Entry { name: "PT2", monoid: partial_transformations(2).unwrap(), source: Source::Partial });
    out.push(Entry { name: "PT3", monoid: partial_transformations(3).unwrap(), source: Source::Partial });
    let semilattices = [
        ("antichain3 + bottom", MeetSemilattice::antichain_with_bottom(3)),
        ("semilattice 3-chain", MeetSemilattice::from_poset(Poset::chain(3)).unwrap()),
        (
            "Boolean B2",
            MeetSemilattice::from_poset(Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()).unwrap(),
        ),
    ];
    for (name, s) in semilattices {
        out.push(Entry { name, monoid: end_meet_semilattice(&s).unwrap(), source: Source::Semilattice(s) });
    }
    out.push(Entry { name: "example 0-tran(2)", monoid: example_0_tran(2).unwrap(), source: Source::Other });
    out.push(Entry { name: "example 0-tran(3)", monoid: example_0_tran(3).unwrap(), source: Source::Other });
    out.push(Entry { name: "affine(3)", monoid: affine_monoid(3).unwrap(), source: Source::Other });
    out.push(Entry { name: "S3", monoid: s3(), source: Source::Other });
    out.push(Entry { name: "C4 regular", monoid: c4_regular(), source: Source::Other });
    out.push(Entry { name: "{id} on 3", monoid: trivial(3), source: Source::Other });
    out
}

/// `1_B` as a vector over `field`.
pub fn indicator(block: &[usize], n: usize, field: FieldTag) -> Vector {
    let mut v = vec![field.zero(); n];
    for &w in block {
        v[w] = field.one();
    }
    v
}

/// Matrix of `v ↦ v ∘ t` on functions `Ω → 𝔽`.
pub fn pullback_matrix(t: &Transformation, field: FieldTag) -> Matrix {
    let n = t.degree();
    let mut p = Matrix::zeros(field, n, n);
    for w in 0..n {
        p.set(w, t.apply(w), field.one());
    }
    p
}
