//! The seven graph-level control problems: exact decisions by enumerating
//! chair actions (vertex or arc subsets) and evaluating the inner membership
//! predicate with the exact oracles.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::{Error, Limits, Result};

use super::{
    fas_top_membership, has_clique, independence, vc_membership, Digraph, Graph,
};

/// One instance of a graph control problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphControlInstance {
    /// Delete up to `limit` vertices from `deletable` so that `target` is in
    /// a minimum vertex cover of the rest.
    Vcms {
        graph: Graph,
        deletable: Vec<usize>,
        limit: usize,
        target: usize,
    },
    /// `graph` spans base and addable vertices; add up to `limit` of
    /// `addable` so that `target` is in a minimum vertex cover of the
    /// induced result.
    Vcma {
        graph: Graph,
        addable: Vec<usize>,
        limit: usize,
        target: usize,
    },
    /// Delete up to `limit` arbitrary vertices so that `target` is in a
    /// maximum independent set of the rest.
    Ismd {
        graph: Graph,
        limit: usize,
        target: usize,
    },
    /// Delete up to `limit` vertices from `deletable` so that some minimum
    /// feedback arc set of the rest contains all arcs entering `target`.
    Fasms {
        digraph: Digraph,
        deletable: Vec<usize>,
        limit: usize,
        target: usize,
    },
    /// Add up to `limit` of `addable` (vertices) with the analogous goal.
    Fasma {
        digraph: Digraph,
        addable: Vec<usize>,
        limit: usize,
        target: usize,
    },
    /// Add up to `limit` arcs from `addable_arcs` with the analogous goal.
    Fasmaa {
        digraph: Digraph,
        addable_arcs: Vec<(usize, usize)>,
        limit: usize,
        target: usize,
    },
    /// Delete up to `limit` vertices so that no clique on `clique_bound + 1`
    /// vertices remains (Generalized Node Deletion).
    Gnd {
        graph: Graph,
        limit: usize,
        clique_bound: usize,
    },
}

impl GraphControlInstance {
    pub fn kind_name(&self) -> &'static str {
        match self {
            GraphControlInstance::Vcms { .. } => "vcms",
            GraphControlInstance::Vcma { .. } => "vcma",
            GraphControlInstance::Ismd { .. } => "ismd",
            GraphControlInstance::Fasms { .. } => "fasms",
            GraphControlInstance::Fasma { .. } => "fasma",
            GraphControlInstance::Fasmaa { .. } => "fasmaa",
            GraphControlInstance::Gnd { .. } => "gnd",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            GraphControlInstance::Vcms {
                graph,
                deletable,
                target,
                ..
            } => {
                check_vertices(graph.n(), deletable)?;
                check_vertex(graph.n(), *target)
            }
            GraphControlInstance::Vcma {
                graph,
                addable,
                target,
                ..
            } => {
                check_vertices(graph.n(), addable)?;
                check_vertex(graph.n(), *target)?;
                if addable.contains(target) {
                    return Err(Error::invalid("target vertex cannot be addable"));
                }
                Ok(())
            }
            GraphControlInstance::Ismd { graph, target, .. } => check_vertex(graph.n(), *target),
            GraphControlInstance::Fasms {
                digraph,
                deletable,
                target,
                ..
            } => {
                check_vertices(digraph.n(), deletable)?;
                check_vertex(digraph.n(), *target)?;
                if deletable.contains(target) {
                    return Err(Error::invalid(
                        "target vertex cannot be deletable in fasms",
                    ));
                }
                Ok(())
            }
            GraphControlInstance::Fasma {
                digraph,
                addable,
                target,
                ..
            } => {
                check_vertices(digraph.n(), addable)?;
                check_vertex(digraph.n(), *target)?;
                if addable.contains(target) {
                    return Err(Error::invalid("target vertex cannot be addable"));
                }
                Ok(())
            }
            GraphControlInstance::Fasmaa {
                digraph,
                addable_arcs,
                target,
                ..
            } => {
                check_vertex(digraph.n(), *target)?;
                let mut all: BTreeSet<(usize, usize)> = digraph.arcs().collect();
                for &(u, v) in addable_arcs {
                    if u == v || u >= digraph.n() || v >= digraph.n() {
                        return Err(Error::invalid(format!("bad addable arc ({u},{v})")));
                    }
                    if digraph.has_arc(u, v) {
                        return Err(Error::invalid(format!(
                            "addable arc ({u},{v}) already present"
                        )));
                    }
                    if !all.insert((u, v)) {
                        return Err(Error::invalid(format!(
                            "duplicate addable arc ({u},{v})"
                        )));
                    }
                    if all.contains(&(v, u)) {
                        return Err(Error::invalid(format!(
                            "addable arc ({u},{v}) would break antisymmetry"
                        )));
                    }
                }
                Ok(())
            }
            GraphControlInstance::Gnd { .. } => Ok(()),
        }
    }
}

fn check_vertex(n: usize, v: usize) -> Result<()> {
    if v >= n {
        Err(Error::invalid(format!("vertex {v} outside range 0..{n}")))
    } else {
        Ok(())
    }
}

fn check_vertices(n: usize, vs: &[usize]) -> Result<()> {
    for &v in vs {
        check_vertex(n, v)?;
    }
    Ok(())
}

/// Decision with the first witness in size-then-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphControlOutcome {
    pub decision: bool,
    /// Chosen vertices for vertex-action kinds.
    pub witness_vertices: Option<Vec<usize>>,
    /// Chosen arcs for fasmaa.
    pub witness_arcs: Option<Vec<(usize, usize)>>,
    pub subsets_examined: u64,
}

fn subset_budget(n: usize, k: usize, limits: &Limits) -> Result<()> {
    let mut total: u64 = 0;
    for s in 0..=k.min(n) {
        let mut binom: u64 = 1;
        for i in 0..s {
            binom = binom.saturating_mul((n - i) as u64) / (i as u64 + 1);
        }
        total = total.saturating_add(binom);
        if total > limits.control_subsets {
            return Err(Error::limit(format!(
                "action enumeration needs more than {} subsets",
                limits.control_subsets
            )));
        }
    }
    Ok(())
}

/// Decides a graph control instance by exhaustive action enumeration in
/// size-then-lexicographic order.
pub fn decide_graph_control(
    inst: &GraphControlInstance,
    limits: &Limits,
) -> Result<GraphControlOutcome> {
    inst.validate()?;
    match inst {
        GraphControlInstance::Vcms {
            graph,
            deletable,
            limit,
            target,
        } => enumerate_vertex_subsets(deletable, *limit, limits, |w| {
            let kept: BTreeSet<usize> = (0..graph.n()).filter(|v| !w.contains(v)).collect();
            if !kept.contains(target) {
                return Ok(false);
            }
            let (sub, old_ids) = graph.induced(&kept);
            let t = old_ids.binary_search(target).expect("target kept");
            vc_membership(&sub, t, limits)
        }),
        GraphControlInstance::Vcma {
            graph,
            addable,
            limit,
            target,
        } => {
            let addable_set: BTreeSet<usize> = addable.iter().copied().collect();
            enumerate_vertex_subsets(addable, *limit, limits, |w| {
                let kept: BTreeSet<usize> = (0..graph.n())
                    .filter(|v| !addable_set.contains(v) || w.contains(v))
                    .collect();
                let (sub, old_ids) = graph.induced(&kept);
                let t = old_ids.binary_search(target).expect("target is base");
                vc_membership(&sub, t, limits)
            })
        }
        GraphControlInstance::Ismd {
            graph,
            limit,
            target,
        } => {
            let all: Vec<usize> = (0..graph.n()).collect();
            enumerate_vertex_subsets(&all, *limit, limits, |w| {
                if w.contains(target) {
                    return Ok(false);
                }
                let kept: BTreeSet<usize> = (0..graph.n()).filter(|v| !w.contains(v)).collect();
                let (sub, old_ids) = graph.induced(&kept);
                let t = old_ids.binary_search(target).expect("target kept");
                let (alpha, alpha_t) = independence(&sub, t, limits)?;
                Ok(alpha_t == alpha)
            })
        }
        GraphControlInstance::Fasms {
            digraph,
            deletable,
            limit,
            target,
        } => enumerate_vertex_subsets(deletable, *limit, limits, |w| {
            let kept: BTreeSet<usize> = (0..digraph.n()).filter(|v| !w.contains(v)).collect();
            let (sub, old_ids) = digraph.induced(&kept);
            let t = old_ids.binary_search(target).expect("target kept");
            fas_top_membership(&sub, t, limits)
        }),
        GraphControlInstance::Fasma {
            digraph,
            addable,
            limit,
            target,
        } => {
            let addable_set: BTreeSet<usize> = addable.iter().copied().collect();
            enumerate_vertex_subsets(addable, *limit, limits, |w| {
                let kept: BTreeSet<usize> = (0..digraph.n())
                    .filter(|v| !addable_set.contains(v) || w.contains(v))
                    .collect();
                let (sub, old_ids) = digraph.induced(&kept);
                let t = old_ids.binary_search(target).expect("target is base");
                fas_top_membership(&sub, t, limits)
            })
        }
        GraphControlInstance::Fasmaa {
            digraph,
            addable_arcs,
            limit,
            target,
        } => {
            subset_budget(addable_arcs.len(), *limit, limits)?;
            let mut examined = 0;
            for size in 0..=*limit.min(&addable_arcs.len()) {
                for chosen in addable_arcs.iter().combinations(size) {
                    examined += 1;
                    let arcs: Vec<(usize, usize)> = digraph
                        .arcs()
                        .chain(chosen.iter().map(|&&a| a))
                        .collect();
                    let with_added = Digraph::new(digraph.n(), arcs)?;
                    if fas_top_membership(&with_added, *target, limits)? {
                        return Ok(GraphControlOutcome {
                            decision: true,
                            witness_vertices: None,
                            witness_arcs: Some(chosen.into_iter().copied().collect()),
                            subsets_examined: examined,
                        });
                    }
                }
            }
            Ok(GraphControlOutcome {
                decision: false,
                witness_vertices: None,
                witness_arcs: None,
                subsets_examined: examined,
            })
        }
        GraphControlInstance::Gnd {
            graph,
            limit,
            clique_bound,
        } => {
            let all: Vec<usize> = (0..graph.n()).collect();
            enumerate_vertex_subsets(&all, *limit, limits, |w| {
                let kept: BTreeSet<usize> = (0..graph.n()).filter(|v| !w.contains(v)).collect();
                let (sub, _) = graph.induced(&kept);
                Ok(!has_clique(&sub, clique_bound + 1, limits)?)
            })
        }
    }
}

fn enumerate_vertex_subsets(
    pool: &[usize],
    k: usize,
    limits: &Limits,
    mut predicate: impl FnMut(&BTreeSet<usize>) -> Result<bool>,
) -> Result<GraphControlOutcome> {
    let mut sorted: Vec<usize> = pool.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    subset_budget(sorted.len(), k, limits)?;
    let mut examined = 0;
    for size in 0..=k.min(sorted.len()) {
        for chosen in sorted.iter().copied().combinations(size) {
            examined += 1;
            let w: BTreeSet<usize> = chosen.iter().copied().collect();
            if predicate(&w)? {
                return Ok(GraphControlOutcome {
                    decision: true,
                    witness_vertices: Some(chosen),
                    witness_arcs: None,
                    subsets_examined: examined,
                });
            }
        }
    }
    Ok(GraphControlOutcome {
        decision: false,
        witness_vertices: None,
        witness_arcs: None,
        subsets_examined: examined,
    })
}
