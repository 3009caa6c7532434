//! Constructors for the monoids studied here, built from combinatorial data.

mod constructors;
mod structures;

pub use constructors::{
    affine_monoid, counterexample_matrix, end_digraph_acyclic, end_graph, end_meet_semilattice, end_poset,
    end_simplicial, example_0_tran, lattice_endos, m_digraph_b, m_gamma_a, partial_transformations, rees_map,
    rees_monoid, symmetric_inverse, ZeroOneMatrix, DEFAULT_DEGREE_BOUND,
};
pub use structures::{Digraph, Graph, MeetSemilattice, Poset, SimplicialComplex};
