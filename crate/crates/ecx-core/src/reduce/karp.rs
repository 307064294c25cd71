//! The 3SAT-to-Vertex-Cover construction and its two-quantifier liftings to
//! vertex-cover membership control problems.
//!
//! For a CNF with V variables and m clauses the base graph has a vertex per
//! literal and per clause-literal slot: an edge inside every literal pair, a
//! triangle on every clause, and an edge from each slot to its literal. The
//! graph has a vertex cover of size V + 2m iff the formula is satisfiable.
//!
//! The lifted graph H replaces each clause triangle by a K4 with an extra
//! vertex that is also tied to a fresh global vertex; deleting (or adding
//! pendant copies of) x-literal vertices then encodes the outer existential
//! block of a QSAT2 formula.

use crate::graphs::{CnfFormula, Graph, GraphControlInstance, Lit, Qbf2Formula};
use crate::{Error, Result};

use super::ReductionTrace;

/// Vertex layout of a Karp graph: literal vertices first (positive and
/// negated interleaved per variable), then clause-literal slots row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KarpLayout {
    pub num_vars: usize,
    pub num_clauses: usize,
}

impl KarpLayout {
    pub fn literal_vertex(&self, lit: Lit) -> usize {
        2 * lit.var + usize::from(lit.negated)
    }

    pub fn clause_vertex(&self, clause: usize, slot: usize) -> usize {
        2 * self.num_vars + 3 * clause + slot
    }

    pub fn base_vertices(&self) -> usize {
        2 * self.num_vars + 3 * self.num_clauses
    }

    /// Cover size equivalent to satisfiability: one per variable, two per
    /// clause.
    pub fn cover_target(&self) -> usize {
        self.num_vars + 2 * self.num_clauses
    }
}

/// Karp's reduction from 3SAT to Vertex-Cover.
pub fn karp_3sat_to_vc(f: &CnfFormula) -> Result<(Graph, KarpLayout, ReductionTrace)> {
    let layout = KarpLayout {
        num_vars: f.num_vars,
        num_clauses: f.clauses.len(),
    };
    let mut edges = Vec::new();
    for v in 0..f.num_vars {
        edges.push((
            layout.literal_vertex(Lit::pos(v)),
            layout.literal_vertex(Lit::neg(v)),
        ));
    }
    for (i, clause) in f.clauses.iter().enumerate() {
        for a in 0..3 {
            for b in a + 1..3 {
                edges.push((layout.clause_vertex(i, a), layout.clause_vertex(i, b)));
            }
            edges.push((layout.clause_vertex(i, a), layout.literal_vertex(clause[a])));
        }
    }
    let graph = Graph::new(layout.base_vertices(), edges)?;
    let trace = ReductionTrace::new("karp-3sat-to-vc")
        .count("vertices", layout.base_vertices() as u64)
        .count("edges", graph.num_edges() as u64)
        .count("cover-target", layout.cover_target() as u64);
    Ok((graph, layout, trace))
}

/// Vertex layout of the lifted graph H: the Karp graph over both blocks,
/// then a clause-gadget vertex per clause, then the membership target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedLayout {
    pub karp: KarpLayout,
    pub block: usize,
}

impl LiftedLayout {
    pub fn gadget_vertex(&self, clause: usize) -> usize {
        self.karp.base_vertices() + clause
    }

    pub fn target(&self) -> usize {
        self.karp.base_vertices() + self.karp.num_clauses
    }

    pub fn x_literal_vertices(&self) -> Vec<usize> {
        (0..2 * self.block).collect()
    }
}

fn lifted_graph(f: &Qbf2Formula) -> Result<(Graph, LiftedLayout)> {
    let matrix = f.matrix();
    let (base, karp, _) = karp_3sat_to_vc(&matrix)?;
    let layout = LiftedLayout {
        karp,
        block: f.block_size,
    };
    let mut graph = base;
    let new = graph.grow(f.num_clauses() + 1);
    debug_assert_eq!(new[0], layout.gadget_vertex(0));
    for i in 0..f.num_clauses() {
        for slot in 0..3 {
            graph.add_edge(layout.gadget_vertex(i), layout.karp.clause_vertex(i, slot))?;
        }
        graph.add_edge(layout.gadget_vertex(i), layout.target())?;
    }
    Ok((graph, layout))
}

/// QSAT2 to Vertex-Cover-Member-Select: delete up to n x-literal vertices of
/// H so the global vertex joins a minimum cover.
pub fn qsat2_to_vcms(f: &Qbf2Formula) -> Result<(GraphControlInstance, ReductionTrace)> {
    if f.num_clauses() == 0 {
        return Err(Error::invalid("the matrix needs at least one clause"));
    }
    let (graph, layout) = lifted_graph(f)?;
    let trace = ReductionTrace::new("qsat2-to-vcms")
        .count("vertices", graph.n() as u64)
        .count("edges", graph.num_edges() as u64)
        .count("limit", f.block_size as u64)
        .part("deletable", layout.x_literal_vertices())
        .part(
            "gadget",
            (0..f.num_clauses()).map(|i| layout.gadget_vertex(i)).collect(),
        )
        .part("target", vec![layout.target()]);
    let inst = GraphControlInstance::Vcms {
        deletable: layout.x_literal_vertices(),
        limit: f.block_size,
        target: layout.target(),
        graph,
    };
    Ok((inst, trace))
}

/// QSAT2 to Vertex-Cover-Member-Add: H plus one pendant addable copy of
/// every x-literal vertex; add up to n copies.
pub fn qsat2_to_vcma(f: &Qbf2Formula) -> Result<(GraphControlInstance, ReductionTrace)> {
    if f.num_clauses() == 0 {
        return Err(Error::invalid("the matrix needs at least one clause"));
    }
    let (mut graph, layout) = lifted_graph(f)?;
    let base_n = graph.n();
    let addable = graph.grow(2 * f.block_size);
    for (offset, &copy) in addable.iter().enumerate() {
        // copy of x-literal vertex `offset` (same interleaved order)
        graph.add_edge(copy, offset)?;
    }
    let trace = ReductionTrace::new("qsat2-to-vcma")
        .count("base-vertices", base_n as u64)
        .count("vertices", graph.n() as u64)
        .count("edges", graph.num_edges() as u64)
        .count("limit", f.block_size as u64)
        .part("addable", addable.clone())
        .part("target", vec![layout.target()]);
    let inst = GraphControlInstance::Vcma {
        graph,
        addable,
        limit: f.block_size,
        target: layout.target(),
    };
    Ok((inst, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{min_vertex_cover, QLit};
    use crate::Limits;

    fn worked_formula() -> Qbf2Formula {
        Qbf2Formula::new(
            1,
            vec![
                [QLit::x(0), QLit::x(0), QLit::y(0)],
                [QLit::nx(0), QLit::ny(0), QLit::ny(0)],
                [QLit::nx(0), QLit::y(0), QLit::y(0)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_clause_counts() {
        let f = CnfFormula::new(
            2,
            vec![[Lit::pos(0), Lit::pos(0), Lit::pos(1)]],
        )
        .unwrap();
        let (g, layout, _) = karp_3sat_to_vc(&f).unwrap();
        // 2 vars -> 4 literal vertices + 3 clause slots
        assert_eq!(g.n(), 7);
        // 2 literal-pair edges + 3 triangle edges + 3 occurrence edges,
        // but slots 0 and 1 both attach to the same literal vertex: the
        // occurrence edges {slot0, x0} and {slot1, x0} stay distinct.
        assert_eq!(g.num_edges(), 2 + 3 + 3);
        assert_eq!(layout.cover_target(), 2 + 2);
    }

    #[test]
    fn worked_example_karp_graph() {
        let f = worked_formula();
        let (g, layout, _) = karp_3sat_to_vc(&f.matrix()).unwrap();
        assert_eq!(g.n(), 13);
        let cover = min_vertex_cover(&g, &Limits::default()).unwrap();
        assert_eq!(cover.size, 8);
        assert_eq!(layout.cover_target(), 8);
    }

    #[test]
    fn lifted_graph_has_4n_4m_1_vertices() {
        let f = worked_formula();
        let (inst, trace) = qsat2_to_vcms(&f).unwrap();
        let GraphControlInstance::Vcms { graph, deletable, limit, target } = &inst else {
            panic!("wrong kind")
        };
        assert_eq!(graph.n(), 4 * 1 + 4 * 3 + 1);
        assert_eq!(trace.get_count("vertices"), Some(17));
        assert_eq!(*limit, 1);
        assert_eq!(deletable, &vec![0, 1]);
        assert_eq!(*target, graph.n() - 1);
    }

    #[test]
    fn vcma_adds_2n_pendants() {
        let f = worked_formula();
        let (inst, trace) = qsat2_to_vcma(&f).unwrap();
        let GraphControlInstance::Vcma { graph, addable, .. } = &inst else {
            panic!("wrong kind")
        };
        assert_eq!(graph.n(), 17 + 2);
        assert_eq!(addable.len(), 2);
        assert_eq!(trace.get_count("base-vertices"), Some(17));
        for (offset, &copy) in addable.iter().enumerate() {
            assert!(graph.has_edge(copy, offset));
            assert_eq!(graph.degree(copy), 1);
        }
    }
}
