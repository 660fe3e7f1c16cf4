use std::time::{Duration, Instant};

use super::delcon::{pst_delcon_counted, DelconStats, PivotRule};
use super::quasitree::{quasi_tree_terms, QuasiTreeTerm};
use super::state_sum::pst_state_sum;
use crate::packaged::PackagedRibbonGraph;
use crate::poly::MultiPoly;
use crate::rg::EdgeOrder;

#[derive(Clone, Debug)]
pub struct QuasiTreeRun {
    pub order: EdgeOrder,
    pub total: MultiPoly,
    pub terms: Vec<QuasiTreeTerm>,
}

/// Structural counters are deterministic; timings are not.
#[derive(Clone, Debug, Default)]
pub struct Counters {
    pub subsets: u64,
    pub delcon: DelconStats,
    pub quasi_trees: u64,
    pub state_sum_time: Duration,
    pub delcon_time: Duration,
    pub quasi_tree_time: Duration,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub state_sum: MultiPoly,
    pub delcon: Vec<(PivotRule, MultiPoly)>,
    /// Empty when the graph is disconnected.
    pub quasi_tree: Vec<QuasiTreeRun>,
    pub counters: Counters,
}

impl ValidationReport {
    pub fn delcon_agrees(&self) -> bool {
        self.delcon.iter().all(|(_, p)| *p == self.state_sum)
    }

    pub fn quasi_tree_agrees(&self) -> bool {
        self.quasi_tree.iter().all(|r| r.total == self.state_sum)
    }

    pub fn shapes_hold(&self) -> bool {
        self.quasi_tree.iter().flat_map(|r| &r.terms).all(|t| t.shape_holds)
    }

    pub fn passed(&self) -> bool {
        self.delcon_agrees() && self.quasi_tree_agrees() && self.shapes_hold()
    }
}

pub fn cross_validate(pg: &PackagedRibbonGraph, orders: &[EdgeOrder]) -> ValidationReport {
    cross_validate_with(pg, orders, &[PivotRule::First, PivotRule::Last, PivotRule::Random(0)])
}

pub fn cross_validate_with(pg: &PackagedRibbonGraph, orders: &[EdgeOrder], pivots: &[PivotRule]) -> ValidationReport {
    let mut counters = Counters { subsets: 1 << pg.graph().num_edges(), ..Default::default() };

    let start = Instant::now();
    let state_sum = pst_state_sum(pg);
    counters.state_sum_time = start.elapsed();

    let start = Instant::now();
    let delcon = pivots.iter().map(|&rule| (rule, pst_delcon_counted(pg, rule, &mut counters.delcon))).collect();
    counters.delcon_time = start.elapsed();

    let start = Instant::now();
    let mut quasi_tree = Vec::new();
    if pg.graph().is_connected() {
        for order in orders {
            let terms = quasi_tree_terms(pg, order).expect("connected graph with a valid order");
            counters.quasi_trees += terms.len() as u64;
            let total = terms.iter().map(QuasiTreeTerm::contribution).sum();
            quasi_tree.push(QuasiTreeRun { order: order.clone(), total, terms });
        }
    }
    counters.quasi_tree_time = start.elapsed();

    ValidationReport { state_sum, delcon, quasi_tree, counters }
}
