//! The packaged surface Tutte polynomial by three independent routes, its
//! specializations, the small-instance corpus and the cross-validation driver.

mod corpus;
mod delcon;
mod quasitree;
mod specialize;
mod state_sum;
mod validate;

pub use corpus::{corpus, corpus_graphs, random_graph, random_packaging, CorpusItem, CORPUS_MAX_VERTICES};
pub use delcon::{edge_exponents, pst_delcon, pst_delcon_counted, terminal_polynomial, DelconStats, PivotRule};
pub use quasitree::{minor_shape_check, pst_quasitree, quasi_tree_terms, QuasiTreeTerm};
pub use specialize::{
    classical_tutte, classical_tutte_with, krushkal_direct, krushkal_quasitree, krushkal_quasitree_with,
    krushkal_substitution, plane_specialization, rank_terms, surface_tutte, NullityReading,
};
pub use state_sum::{pst_state_sum, subset_monomial};
pub use validate::{cross_validate, cross_validate_with, Counters, QuasiTreeRun, ValidationReport};

use thiserror::Error;

use crate::packaged::PackagedRibbonGraph;
use crate::poly::{MultiPoly, PolyError};
use crate::rg::{EdgeOrder, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("ribbon graph is not orientable")]
    NonOrientable,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvaluationMethod {
    StateSum,
    DeletionContraction(PivotRule),
    /// Needs a connected graph.
    QuasiTree(EdgeOrder),
}

impl EvaluationMethod {
    pub fn name(&self) -> &'static str {
        match self {
            EvaluationMethod::StateSum => "statesum",
            EvaluationMethod::DeletionContraction(_) => "delcon",
            EvaluationMethod::QuasiTree(_) => "quasitree",
        }
    }
}

pub fn evaluate(pg: &PackagedRibbonGraph, method: &EvaluationMethod) -> Result<MultiPoly, GraphError> {
    match method {
        EvaluationMethod::StateSum => Ok(pst_state_sum(pg)),
        EvaluationMethod::DeletionContraction(rule) => Ok(pst_delcon(pg, *rule)),
        EvaluationMethod::QuasiTree(order) => pst_quasitree(pg, order),
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::format::{parse_graph, EXAMPLE_GRAPH};
    use crate::packaged::PackagedRibbonGraph;
    use crate::rg::{EdgeOrder, RibbonGraph};

    /// Expansion of `x(x x_2 y_0 (x y_0 + 1) + y x_0 y_0 (x y_0 + 1)) + 2 x y x_0 y_0 + x^2 x_2 y_0 + y^2 x_0 y_2`.
    pub const EXAMPLE_POLY: &str = "x^3*x_2*y_0^2 + x^2*y*x_0*y_0^2 + 2*x^2*x_2*y_0 + 3*x*y*x_0*y_0 + y^2*x_0*y_2";

    pub fn example() -> PackagedRibbonGraph {
        PackagedRibbonGraph::discrete(parse_graph(EXAMPLE_GRAPH).unwrap())
    }

    pub fn efg(g: &RibbonGraph) -> EdgeOrder {
        EdgeOrder::new(g, ["e", "f", "g"].iter().map(|n| g.edge_by_name(n).unwrap()).collect()).unwrap()
    }
}
