//! Liftings of the vertex-cover membership problems to feedback-arc-set
//! membership problems via the doubled digraph f(G), plus the arc
//! subdivision used for the four-voter variant.
//!
//! f(G) has a vertex v and a primed copy v' for every vertex of G, the arc
//! (v, v'), and for every edge {v, w} the arcs (v', w) and (w', v). A
//! minimum cover of G containing v corresponds to a minimum feedback arc set
//! of f(G) containing (v, v'), the only arc entering v'.

use crate::graphs::{Digraph, Graph, GraphControlInstance};
use crate::{Error, Result};

use super::ReductionTrace;

/// Primed copy id inside f(G): original ids stay put, copies follow.
fn primed(v: usize, n: usize) -> usize {
    v + n
}

fn doubled_arcs(g: &Graph, self_arc_vertices: impl Iterator<Item = usize>) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut arcs: Vec<(usize, usize)> = self_arc_vertices.map(|v| (v, primed(v, n))).collect();
    for (v, w) in g.edges() {
        arcs.push((primed(v, n), w));
        arcs.push((primed(w, n), v));
    }
    arcs
}

/// Vertex-Cover-Member-Select to Feedback-Arc-Set-Member-Select:
/// (G, V', k, v) maps to (f(G), V' minus the target, k, v').
pub fn vcms_to_fasms(inst: &GraphControlInstance) -> Result<(GraphControlInstance, ReductionTrace)> {
    let GraphControlInstance::Vcms {
        graph,
        deletable,
        limit,
        target,
    } = inst
    else {
        return Err(Error::invalid("expected a vcms instance"));
    };
    let n = graph.n();
    let digraph = Digraph::new(2 * n, doubled_arcs(graph, 0..n))?;
    let mut deletable: Vec<usize> = deletable.iter().copied().filter(|v| v != target).collect();
    deletable.sort_unstable();
    let trace = ReductionTrace::new("vcms-to-fasms")
        .count("vertices", 2 * n as u64)
        .count("arcs", digraph.num_arcs() as u64)
        .part("deletable", deletable.clone())
        .part("target", vec![primed(*target, n)]);
    let out = GraphControlInstance::Fasms {
        digraph,
        deletable,
        limit: *limit,
        target: primed(*target, n),
    };
    Ok((out, trace))
}

/// Vertex-Cover-Member-Add to Feedback-Arc-Set-Member-Add. The doubled
/// digraph spans base and addable vertices; the primed copies of addable
/// vertices sit in the base part, where they are harmless sources until
/// their unprimed partner joins.
pub fn vcma_to_fasma(inst: &GraphControlInstance) -> Result<(GraphControlInstance, ReductionTrace)> {
    let GraphControlInstance::Vcma {
        graph,
        addable,
        limit,
        target,
    } = inst
    else {
        return Err(Error::invalid("expected a vcma instance"));
    };
    let n = graph.n();
    let digraph = Digraph::new(2 * n, doubled_arcs(graph, 0..n))?;
    let mut addable = addable.clone();
    addable.sort_unstable();
    let trace = ReductionTrace::new("vcma-to-fasma")
        .count("vertices", 2 * n as u64)
        .count("arcs", digraph.num_arcs() as u64)
        .part("addable", addable.clone())
        .part("target", vec![primed(*target, n)]);
    let out = GraphControlInstance::Fasma {
        digraph,
        addable,
        limit: *limit,
        target: primed(*target, n),
    };
    Ok((out, trace))
}

/// Vertex-Cover-Member-Add to Feedback-Arc-Set-Member-Add-Arcs: all doubled
/// vertices are present; the self-arcs of addable vertices become the
/// addable arcs.
pub fn vcma_to_fasmaa(
    inst: &GraphControlInstance,
) -> Result<(GraphControlInstance, ReductionTrace)> {
    let GraphControlInstance::Vcma {
        graph,
        addable,
        limit,
        target,
    } = inst
    else {
        return Err(Error::invalid("expected a vcma instance"));
    };
    let n = graph.n();
    let base: Vec<usize> = (0..n).filter(|v| !addable.contains(v)).collect();
    let digraph = Digraph::new(2 * n, doubled_arcs(graph, base.into_iter()))?;
    let mut addable_arcs: Vec<(usize, usize)> =
        addable.iter().map(|&w| (w, primed(w, n))).collect();
    addable_arcs.sort_unstable();
    let trace = ReductionTrace::new("vcma-to-fasmaa")
        .count("vertices", 2 * n as u64)
        .count("base-arcs", digraph.num_arcs() as u64)
        .count("addable-arcs", addable_arcs.len() as u64)
        .part("target", vec![primed(*target, n)]);
    let out = GraphControlInstance::Fasmaa {
        digraph,
        addable_arcs,
        limit: *limit,
        target: primed(*target, n),
    };
    Ok((out, trace))
}

/// Arc subdivision: every arc becomes a fresh midpoint vertex with an arc in
/// and an arc out. Preserves, for every deletion set of original vertices,
/// the minimum feedback arc sets and their all-arcs-entering-target
/// property, while enabling realization with four voters.
pub fn dwork_hat(d: &Digraph) -> Result<(Digraph, ReductionTrace)> {
    let n = d.n();
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    let mut new_arcs = Vec::with_capacity(2 * arcs.len());
    for (i, &(u, v)) in arcs.iter().enumerate() {
        let mid = n + i;
        new_arcs.push((u, mid));
        new_arcs.push((mid, v));
    }
    let out = Digraph::new(n + arcs.len(), new_arcs)?;
    let trace = ReductionTrace::new("dwork-hat")
        .count("vertices", (n + arcs.len()) as u64)
        .count("arcs", out.num_arcs() as u64)
        .part("midpoints", (n..n + arcs.len()).collect());
    Ok((out, trace))
}
