//! Exact minimum vertex cover by branch and bound, plus the membership and
//! independence queries derived from it.

use crate::{Error, Limits, Result};

use super::Graph;

/// A minimum vertex cover with one witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCoverReport {
    pub size: usize,
    /// One minimum cover, ascending. Deterministic for a given graph.
    pub cover: Vec<usize>,
}

/// Exact minimum vertex cover. Branches on the lexicographically first
/// uncovered edge with a maximal-matching lower bound.
pub fn min_vertex_cover(g: &Graph, limits: &Limits) -> Result<VertexCoverReport> {
    min_vertex_cover_forcing(g, &[], limits)
}

/// Minimum vertex cover among covers containing all of `forced`.
pub fn min_vertex_cover_forcing(
    g: &Graph,
    forced: &[usize],
    limits: &Limits,
) -> Result<VertexCoverReport> {
    if g.n() > limits.vc_vertices {
        return Err(Error::limit(format!(
            "vertex cover search over {} vertices exceeds the cap of {}",
            g.n(),
            limits.vc_vertices
        )));
    }
    for &v in forced {
        if v >= g.n() {
            return Err(Error::invalid(format!("forced vertex {v} out of range")));
        }
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut search = Search {
        edges: &edges,
        in_cover: vec![false; g.n()],
        best: None,
    };
    for &v in forced {
        search.in_cover[v] = true;
    }
    let start = forced.iter().collect::<std::collections::BTreeSet<_>>().len();
    search.branch(start);
    let (size, cover) = search.best.expect("branching always finds some cover");
    Ok(VertexCoverReport { size, cover })
}

struct Search<'a> {
    edges: &'a [(usize, usize)],
    in_cover: Vec<bool>,
    best: Option<(usize, Vec<usize>)>,
}

impl Search<'_> {
    fn branch(&mut self, size: usize) {
        if let Some((best, _)) = &self.best {
            if size + self.matching_bound() >= *best {
                return;
            }
        }
        let Some(&(u, v)) = self
            .edges
            .iter()
            .find(|&&(a, b)| !self.in_cover[a] && !self.in_cover[b])
        else {
            let cover: Vec<usize> = (0..self.in_cover.len())
                .filter(|&x| self.in_cover[x])
                .collect();
            if self.best.as_ref().map_or(true, |(b, _)| size < *b) {
                self.best = Some((size, cover));
            }
            return;
        };
        self.in_cover[u] = true;
        self.branch(size + 1);
        self.in_cover[u] = false;
        self.in_cover[v] = true;
        self.branch(size + 1);
        self.in_cover[v] = false;
    }

    /// Greedy maximal matching on uncovered edges: each matched edge needs
    /// one more cover vertex.
    fn matching_bound(&self) -> usize {
        let mut used = vec![false; self.in_cover.len()];
        let mut bound = 0;
        for &(a, b) in self.edges {
            if !self.in_cover[a] && !self.in_cover[b] && !used[a] && !used[b] {
                used[a] = true;
                used[b] = true;
                bound += 1;
            }
        }
        bound
    }
}

/// Is `v` a member of some minimum vertex cover?
pub fn vc_membership(g: &Graph, v: usize, limits: &Limits) -> Result<bool> {
    if v >= g.n() {
        return Err(Error::invalid(format!("no vertex {v}")));
    }
    let unforced = min_vertex_cover(g, limits)?;
    let forced = min_vertex_cover_forcing(g, &[v], limits)?;
    Ok(forced.size == unforced.size)
}

/// Independence numbers: `alpha` (maximum independent set size) and
/// `alpha_v` (maximum over independent sets containing `v`). `alpha` comes
/// from the complement identity `alpha = n - min_vertex_cover`; `alpha_v`
/// forces `v` in by removing it and its neighborhood.
pub fn independence(g: &Graph, v: usize, limits: &Limits) -> Result<(usize, usize)> {
    if v >= g.n() {
        return Err(Error::invalid(format!("no vertex {v}")));
    }
    let a = alpha(g, limits)?;
    // alpha_v = 1 + alpha(G - N[v])
    let kept: std::collections::BTreeSet<usize> = (0..g.n())
        .filter(|&u| u != v && !g.has_edge(u, v))
        .collect();
    let (rest, _) = g.induced(&kept);
    let alpha_v = 1 + alpha(&rest, limits)?;
    Ok((a, alpha_v))
}

/// Maximum independent set size.
pub fn alpha(g: &Graph, limits: &Limits) -> Result<usize> {
    Ok(g.n() - min_vertex_cover(g, limits)?.size)
}

/// Does `g` contain a clique on `size` vertices? A clique in `g` is an
/// independent set in the complement.
pub fn has_clique(g: &Graph, size: usize, limits: &Limits) -> Result<bool> {
    if size == 0 {
        return Ok(true);
    }
    if size > g.n() {
        return Ok(false);
    }
    Ok(alpha(&g.complement(), limits)? >= size)
}
