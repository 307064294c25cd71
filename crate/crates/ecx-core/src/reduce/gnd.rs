//! Generalized-Node-Deletion reductions. "x" is the graph join: every
//! vertex on one side becomes adjacent to every vertex on the other, so an
//! independent set of a join lies entirely within one side.

use crate::graphs::{Graph, GraphControlInstance};
use crate::{Error, Result};

use super::ReductionTrace;

/// GND to Vertex-Cover-Member-Select: H is the complement of G plus an
/// isolated target, joined with an edgeless graph on `clique_bound + 1`
/// vertices; every vertex of H is deletable.
pub fn gnd_to_vcms(
    g: &Graph,
    limit: usize,
    clique_bound: usize,
) -> Result<(GraphControlInstance, ReductionTrace)> {
    if clique_bound == 0 {
        return Err(Error::invalid("the clique bound must be at least 1"));
    }
    let mut left = g.complement();
    let target = left.grow(1)[0];
    let graph = left.join(&Graph::empty(clique_bound + 1));
    let trace = ReductionTrace::new("gnd-to-vcms")
        .count("vertices", graph.n() as u64)
        .count("edges", graph.num_edges() as u64)
        .part("target", vec![target])
        .part(
            "right-side",
            (g.n() + 1..g.n() + 1 + clique_bound + 1).collect(),
        );
    let deletable = (0..graph.n()).collect();
    let out = GraphControlInstance::Vcms {
        graph,
        deletable,
        limit,
        target,
    };
    Ok((out, trace))
}

/// GND to Independent-Set-Member-Delete: H is the complement of G joined
/// with an edgeless graph on `clique_bound` vertices; the target lives on
/// the edgeless side.
pub fn gnd_to_ismd(
    g: &Graph,
    limit: usize,
    clique_bound: usize,
) -> Result<(GraphControlInstance, ReductionTrace)> {
    if clique_bound == 0 {
        return Err(Error::invalid("the clique bound must be at least 1"));
    }
    let graph = g.complement().join(&Graph::empty(clique_bound));
    let target = g.n();
    let trace = ReductionTrace::new("gnd-to-ismd")
        .count("vertices", graph.n() as u64)
        .count("edges", graph.num_edges() as u64)
        .part("target", vec![target])
        .part("right-side", (g.n()..g.n() + clique_bound).collect());
    let out = GraphControlInstance::Ismd {
        graph,
        limit,
        target,
    };
    Ok((out, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::decide_graph_control;
    use crate::Limits;

    fn limits() -> Limits {
        Limits::default()
    }

    fn gnd_decide(g: &Graph, limit: usize, clique_bound: usize) -> bool {
        let inst = GraphControlInstance::Gnd {
            graph: g.clone(),
            limit,
            clique_bound,
        };
        decide_graph_control(&inst, &limits()).unwrap().decision
    }

    #[test]
    fn triangle_with_no_deletions() {
        let k3 = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!gnd_decide(&k3, 0, 2));
        let (vcms, _) = gnd_to_vcms(&k3, 0, 2).unwrap();
        assert!(!decide_graph_control(&vcms, &limits()).unwrap().decision);
        let (ismd, _) = gnd_to_ismd(&k3, 0, 2).unwrap();
        assert!(!decide_graph_control(&ismd, &limits()).unwrap().decision);
        // one deletion suffices
        assert!(gnd_decide(&k3, 1, 2));
        let (vcms, _) = gnd_to_vcms(&k3, 1, 2).unwrap();
        assert!(decide_graph_control(&vcms, &limits()).unwrap().decision);
        let (ismd, _) = gnd_to_ismd(&k3, 1, 2).unwrap();
        assert!(decide_graph_control(&ismd, &limits()).unwrap().decision);
    }

    #[test]
    fn edgeless_graph_is_always_yes() {
        let g = Graph::empty(3);
        for l in 1..3 {
            assert!(gnd_decide(&g, 0, l));
            let (vcms, _) = gnd_to_vcms(&g, 0, l).unwrap();
            assert!(decide_graph_control(&vcms, &limits()).unwrap().decision);
            let (ismd, _) = gnd_to_ismd(&g, 0, l).unwrap();
            assert!(decide_graph_control(&ismd, &limits()).unwrap().decision);
        }
    }

    #[test]
    fn zero_bound_is_invalid() {
        let g = Graph::empty(2);
        assert!(gnd_to_vcms(&g, 0, 0).is_err());
        assert!(gnd_to_ismd(&g, 0, 0).is_err());
    }
}
