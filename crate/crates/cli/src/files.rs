use std::path::Path;

use augcheck_core::tmon::{MonoidData, Transformation};
use augcheck_core::zoo::{
    affine_monoid, end_digraph_acyclic, end_graph, end_meet_semilattice, end_poset, end_simplicial, example_0_tran,
    lattice_endos, m_digraph_b, m_gamma_a, partial_transformations, rees_monoid, symmetric_inverse, Digraph, Graph,
    MeetSemilattice, Poset, SimplicialComplex, ZeroOneMatrix,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A monoid given by generators on `0..degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidFile {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    /// Generators are partial maps on `1..degree` with 0 as the undefined value.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub partial_with_sink: bool,
}

impl MonoidFile {
    pub fn from_monoid(m: &MonoidData, partial_with_sink: bool) -> Self {
        MonoidFile {
            degree: m.degree(),
            generators: m.generators().iter().map(|t| t.image().to_vec()).collect(),
            partial_with_sink,
        }
    }

    pub fn to_monoid(&self) -> Result<MonoidData, CliError> {
        let mut gens = Vec::with_capacity(self.generators.len());
        for (i, g) in self.generators.iter().enumerate() {
            if g.len() != self.degree {
                return Err(CliError::Invalid(format!(
                    "generators[{i}] has length {}, expected degree {}",
                    g.len(),
                    self.degree
                )));
            }
            let t = Transformation::new(g.clone()).map_err(|e| CliError::Invalid(format!("generators[{i}]: {e}")))?;
            if self.partial_with_sink && !t.fixes(0) {
                return Err(CliError::Invalid(format!("generators[{i}] moves the sink 0")));
            }
            gens.push(t);
        }
        Ok(MonoidData::closure(self.degree, &gens)?)
    }
}

/// Combinatorial input for one of the monoid constructors.
#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum StructureFile {
    Graph { vertices: usize, edges: Vec<(usize, usize)> },
    Digraph { vertices: usize, arcs: Vec<(usize, usize)> },
    Poset { elements: usize, covers: Vec<(usize, usize)> },
    Complex { vertices: usize, facets: Vec<Vec<usize>> },
    Semilattice { elements: usize, covers: Vec<(usize, usize)> },
    /// The edge-matrix monoid over the complete graph on the rows of `matrix`.
    Matrix { matrix: Vec<Vec<u8>> },
    Rees { matrix: Vec<Vec<u8>> },
    Mgamma { vertices: usize, edges: Vec<(usize, usize)>, matrix: Vec<Vec<u8>> },
    Mdigraph { vertices: usize, arcs: Vec<(usize, usize)>, matrix: Vec<Vec<u8>> },
    Inverse { n: usize },
    Partial { n: usize },
    Affine { p: u64 },
    BooleanLattice { x_size: usize },
    #[serde(rename = "example-0tran")]
    Example0Tran { n: usize },
}

impl StructureFile {
    /// Builds the monoid and reports whether it is a partial monoid with sink 0.
    pub fn build(&self) -> Result<(MonoidData, bool), CliError> {
        let m = match self {
            StructureFile::Graph { vertices, edges } => end_graph(&Graph::new(*vertices, edges)?)?,
            StructureFile::Digraph { vertices, arcs } => end_digraph_acyclic(&Digraph::new(*vertices, arcs)?)?,
            StructureFile::Poset { elements, covers } => end_poset(&Poset::from_covers(*elements, covers)?)?,
            StructureFile::Complex { vertices, facets } => end_simplicial(&SimplicialComplex::new(*vertices, facets)?)?,
            StructureFile::Semilattice { elements, covers } => {
                end_meet_semilattice(&MeetSemilattice::from_poset(Poset::from_covers(*elements, covers)?)?)?
            }
            StructureFile::Matrix { matrix } => {
                let a = ZeroOneMatrix::from_rows(matrix)?;
                m_gamma_a(&Graph::complete(a.nrows()), &a)?
            }
            StructureFile::Rees { matrix } => rees_monoid(&ZeroOneMatrix::from_rows(matrix)?)?,
            StructureFile::Mgamma { vertices, edges, matrix } => {
                m_gamma_a(&Graph::new(*vertices, edges)?, &ZeroOneMatrix::from_rows(matrix)?)?
            }
            StructureFile::Mdigraph { vertices, arcs, matrix } => {
                m_digraph_b(&Digraph::new(*vertices, arcs)?, &ZeroOneMatrix::from_rows(matrix)?)?
            }
            StructureFile::Inverse { n } => symmetric_inverse(*n)?,
            StructureFile::Partial { n } => partial_transformations(*n)?,
            StructureFile::Affine { p } => affine_monoid(*p)?,
            StructureFile::BooleanLattice { x_size } => lattice_endos(*x_size)?,
            StructureFile::Example0Tran { n } => example_0_tran(*n)?,
        };
        let partial = matches!(
            self,
            StructureFile::Rees { .. }
                | StructureFile::Inverse { .. }
                | StructureFile::Partial { .. }
                | StructureFile::Example0Tran { .. }
        );
        Ok((m, partial))
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}
