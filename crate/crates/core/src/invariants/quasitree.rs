use super::delcon::{pst_delcon, PivotRule};
use crate::packaged::{packaged_minor, PackagedRibbonGraph, PackagingGraph};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::rg::{activities, classify_edge, enumerate_quasi_trees, ActivityReport, EdgeClass, EdgeOrder, EdgeSet, GraphError};

/// One summand of the quasi-tree expansion.
#[derive(Clone, Debug)]
pub struct QuasiTreeTerm {
    pub quasi_tree: EdgeSet,
    pub activities: ActivityReport,
    /// `x^n(G(G*|D* u N*; B)) y^n(G(G|D u N; V))`.
    pub prefactor: Monomial,
    pub minor: PackagedRibbonGraph,
    pub minor_polynomial: MultiPoly,
    /// Live orientable internal edges are bridges and live orientable
    /// external edges are plane loops in the minor.
    pub shape_holds: bool,
}

impl QuasiTreeTerm {
    pub fn contribution(&self) -> MultiPoly {
        self.minor_polynomial.mul_monomial(&self.prefactor)
    }
}

pub fn quasi_tree_terms(pg: &PackagedRibbonGraph, order: &EdgeOrder) -> Result<Vec<QuasiTreeTerm>, GraphError> {
    let g = pg.graph();
    let (d, dparts) = pg.dual_side();
    let mut out = Vec::new();
    for q in enumerate_quasi_trees(g)? {
        let report = activities(g, &q, order)?;
        let (deleted, contracted) = (report.deleted(), report.contracted());
        let minor = packaged_minor(pg, &deleted, &contracted)?;
        let nx = PackagingGraph::of(&d, &dparts, &deleted).nullity();
        let ny = PackagingGraph::of(g, pg.vparts(), &contracted).nullity();
        let prefactor = Monomial::one().with(Var::X, nx as u32).with(Var::Y, ny as u32);
        let minor_polynomial = pst_delcon(&minor, PivotRule::First);
        let shape_holds = shape_holds(&minor, &report)?;
        out.push(QuasiTreeTerm { quasi_tree: q, activities: report, prefactor, minor, minor_polynomial, shape_holds });
    }
    Ok(out)
}

pub fn pst_quasitree(pg: &PackagedRibbonGraph, order: &EdgeOrder) -> Result<MultiPoly, GraphError> {
    Ok(quasi_tree_terms(pg, order)?.iter().map(QuasiTreeTerm::contribution).sum())
}

pub fn minor_shape_check(pg: &PackagedRibbonGraph, q: &EdgeSet, order: &EdgeOrder) -> Result<bool, GraphError> {
    let report = activities(pg.graph(), q, order)?;
    let minor = packaged_minor(pg, &report.deleted(), &report.contracted())?;
    shape_holds(&minor, &report)
}

fn shape_holds(minor: &PackagedRibbonGraph, report: &ActivityReport) -> Result<bool, GraphError> {
    let h = minor.graph();
    for e in report.internally_live_orientable() {
        if classify_edge(h, e)? != EdgeClass::Bridge {
            return Ok(false);
        }
    }
    for e in report.externally_live_orientable() {
        if classify_edge(h, e)? != EdgeClass::PlaneLoop {
            return Ok(false);
        }
    }
    Ok(h.num_edges() == report.internally_live_orientable().len() + report.externally_live_orientable().len())
}
