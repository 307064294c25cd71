//! Minimum feedback arc set via linear orderings.
//!
//! At optimum, the minimum number of arcs whose deletion makes a digraph
//! acyclic equals the minimum number of backward arcs over all vertex
//! orderings: an ordering's backward arcs are a feedback arc set, and any
//! feedback arc set admits a topological order of the residual whose backward
//! arcs all belong to the set. This module works in the ordering form and
//! shares the exact engine with Kemeny search.

use crate::ordering::{self, OrderWeights};
use crate::{Error, Limits, Result};

use super::Digraph;

/// Minimum feedback arc set with a witness ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FasReport {
    pub size: u64,
    /// An ordering whose backward arcs form a minimum feedback arc set.
    pub ordering: Vec<usize>,
}

fn weights_for(d: &Digraph) -> OrderWeights {
    let mut w = OrderWeights::new(d.n());
    for (u, v) in d.arcs() {
        // Placing v above u makes arc (u,v) backward.
        w.set(v, u, 1);
    }
    w
}

/// Exact minimum feedback arc set size and a witness ordering. Uses the
/// subset DP up to `limits.order_dp_vertices` vertices and branch and bound
/// beyond it.
pub fn min_feedback_arc_set(d: &Digraph, limits: &Limits) -> Result<FasReport> {
    let w = weights_for(d);
    let (size, ordering) = ordering::some_optimal_order(&w, limits)?;
    Ok(FasReport { size, ordering })
}

/// Backward arcs of an ordering: the feedback arc set it witnesses.
pub fn backward_arcs(d: &Digraph, ordering: &[usize]) -> Vec<(usize, usize)> {
    let mut pos = vec![usize::MAX; d.n()];
    for (i, &v) in ordering.iter().enumerate() {
        pos[v] = i;
    }
    d.arcs().filter(|&(u, v)| pos[u] > pos[v]).collect()
}

/// Does some minimum feedback arc set of `d` contain all arcs entering
/// `target`? Equivalently: does some ordering with `target` first achieve
/// the unconstrained backward-arc minimum? (With `target` first, every arc
/// entering it is backward, so the witnessed set contains them all.)
pub fn fas_top_membership(d: &Digraph, target: usize, limits: &Limits) -> Result<bool> {
    if target >= d.n() {
        return Err(Error::invalid(format!("no vertex {target}")));
    }
    let w = weights_for(d);
    let optimal = ordering::optimal_cost(&w, limits)?;
    let with_target_first = ordering::optimal_cost_with_first(&w, target, limits)?;
    Ok(with_target_first == optimal)
}
