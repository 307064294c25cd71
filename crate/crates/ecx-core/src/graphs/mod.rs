//! Graph and formula decision problems: the independent oracles the
//! reductions are verified against.

mod control;
mod fas;
mod qbf;
mod vertex_cover;

pub use control::{decide_graph_control, GraphControlInstance, GraphControlOutcome};
pub use fas::{backward_arcs, fas_top_membership, min_feedback_arc_set, FasReport};
pub use qbf::{qsat2_decide, sat3_decide, CnfFormula, Lit, QLit, Qbf2Formula, VarBlock};
pub use vertex_cover::{
    alpha, has_clique, independence, min_vertex_cover, min_vertex_cover_forcing, vc_membership,
    VertexCoverReport,
};

use std::collections::BTreeSet;

use crate::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) outside vertex range 0..{n}"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::invalid(format!("bad edge ({u},{v})")));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    /// Appends `extra` fresh vertices, returning their ids.
    pub fn grow(&mut self, extra: usize) -> Vec<usize> {
        let ids = (self.n..self.n + extra).collect();
        self.n += extra;
        ids
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        let mut touched = vec![false; self.n];
        for &(u, v) in &self.edges {
            touched[u] = true;
            touched[v] = true;
        }
        touched.iter().any(|&t| !t)
    }

    /// Complement graph on the same vertices.
    pub fn complement(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.edges.contains(&(u, v)) {
                    edges.insert((u, v));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    /// Induced subgraph on the kept vertices (sorted ascending), renumbered
    /// to `0..kept.len()`; returns the new graph and the old ids in order.
    pub fn induced(&self, kept: &BTreeSet<usize>) -> (Graph, Vec<usize>) {
        let old_ids: Vec<usize> = kept.iter().copied().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        (
            Graph {
                n: old_ids.len(),
                edges,
            },
            old_ids,
        )
    }

    /// Disjoint union followed by a join: every vertex of `self` is connected
    /// to every vertex of `other`. `other`'s vertices are renumbered to
    /// follow `self`'s.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut edges = self.edges.clone();
        for (u, v) in other.edges() {
            edges.insert((u + self.n, v + self.n));
        }
        for u in 0..self.n {
            for v in 0..other.n {
                edges.insert((u, v + self.n));
            }
        }
        Graph {
            n: self.n + other.n,
            edges,
        }
    }
}

/// Irreflexive, antisymmetric directed graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            if u == v {
                return Err(Error::invalid(format!("self-loop arc at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "arc ({u},{v}) outside vertex range 0..{n}"
                )));
            }
            set.insert((u, v));
        }
        for &(u, v) in &set {
            if set.contains(&(v, u)) {
                return Err(Error::invalid(format!(
                    "arcs ({u},{v}) and ({v},{u}) violate antisymmetry"
                )));
            }
        }
        Ok(Digraph { n, arcs: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, to)| to == v).count()
    }

    /// Induced sub-digraph on the kept vertices, renumbered ascending.
    pub fn induced(&self, kept: &BTreeSet<usize>) -> (Digraph, Vec<usize>) {
        let old_ids: Vec<usize> = kept.iter().copied().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        (
            Digraph {
                n: old_ids.len(),
                arcs,
            },
            old_ids,
        )
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm.
        let mut indeg = vec![0usize; self.n];
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            adj[u].push(v);
            indeg[v] += 1;
        }
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &to in &adj[v] {
                indeg[to] -= 1;
                if indeg[to] == 0 {
                    queue.push(to);
                }
            }
        }
        seen == self.n
    }
}
