//! Independent-Set-Member-Delete to Young control by deleting voters.
//!
//! Candidates are the edges of the graph plus three specials a, p, q. Every
//! vertex contributes one voter ranking its incident edges first; vertices
//! adjacent to the membership target rank p last (type IB), all others rank
//! p right behind q (type IA). One fixed voter (type II) and a block of
//! 2|V| padding voters (type III) complete the election.
//!
//! After deleting a voter set X that spares the type-II voter, with W the
//! vertices of the deleted type-I voters, the Young scores obey
//! score(q) = 2 * alpha(G - W) and score(p) = 2 * alpha_target(G - W).
//! These are the score claims the verification suite replays.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::control::{ControlAction, ControlInstance, Rule};
use crate::elections::{Election, Vote};
use crate::graphs::{alpha, Graph};
use crate::{Error, Limits, Result};

use super::ReductionTrace;

/// The Young election with its gadget layout.
#[derive(Debug, Clone)]
pub struct YoungGadget {
    pub instance: ControlInstance,
    /// Candidate id of edge `i` in the sorted edge list.
    pub edge_candidates: Vec<(usize, usize)>,
    pub candidate_a: usize,
    pub candidate_p: usize,
    pub candidate_q: usize,
    /// Vote entry index of each vertex's type-I voter, indexed by vertex.
    pub vertex_voter: Vec<usize>,
    pub type_ii_entry: usize,
    pub type_iii_entry: usize,
}

/// Do the construction's preconditions hold: no isolated vertices, and
/// alpha(G - W) >= 3 for every deletion set W of size at most `limit`?
pub fn young_preconditions_hold(g: &Graph, limit: usize, limits: &Limits) -> Result<bool> {
    if g.has_isolated_vertices() {
        return Ok(false);
    }
    for size in 0..=limit.min(g.n()) {
        for w in (0..g.n()).combinations(size) {
            let kept: BTreeSet<usize> = (0..g.n()).filter(|v| !w.contains(v)).collect();
            let (sub, _) = g.induced(&kept);
            if alpha(&sub, limits)? < 3 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Repairs the alpha precondition by appending disjoint cliques that survive
/// any deletion of up to `limit` vertices. Starts with two cliques and keeps
/// adding until the brute-force check passes. Cliques have
/// `max(limit + 1, 2)` vertices so they never become isolated vertices.
/// Fails if the input already has isolated vertices: that defect is not
/// repairable by padding.
pub fn ensure_young_preconditions(g: &Graph, limit: usize, limits: &Limits) -> Result<Graph> {
    if g.has_isolated_vertices() {
        return Err(Error::invalid(
            "the graph has isolated vertices; the young construction requires none",
        ));
    }
    let clique_size = (limit + 1).max(2);
    let mut padded = g.clone();
    if young_preconditions_hold(&padded, limit, limits)? {
        return Ok(padded);
    }
    fn add_clique(p: &mut Graph, size: usize) -> Result<()> {
        let fresh = p.grow(size);
        for i in 0..size {
            for j in i + 1..size {
                p.add_edge(fresh[i], fresh[j])?;
            }
        }
        Ok(())
    }
    // the paper's hint: start from two cliques, then keep checking
    add_clique(&mut padded, clique_size)?;
    add_clique(&mut padded, clique_size)?;
    for _ in 0..8 {
        if young_preconditions_hold(&padded, limit, limits)? {
            return Ok(padded);
        }
        add_clique(&mut padded, clique_size)?;
    }
    Err(Error::Internal(
        "young precondition repair did not converge".to_string(),
    ))
}

/// Builds the Young-CCDV gadget election for (G, limit, target). The caller
/// must satisfy the preconditions first (see [`ensure_young_preconditions`]).
pub fn ismd_to_young_ccdv(
    g: &Graph,
    limit: usize,
    target: usize,
    limits: &Limits,
) -> Result<(YoungGadget, ReductionTrace)> {
    if target >= g.n() {
        return Err(Error::invalid(format!("no vertex {target}")));
    }
    if !young_preconditions_hold(g, limit, limits)? {
        return Err(Error::invalid(
            "preconditions violated: the graph needs no isolated vertices and \
             alpha(G - W) >= 3 for every deletion set within the limit",
        ));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let edge_count = edges.len();
    let candidate_a = edge_count;
    let candidate_p = edge_count + 1;
    let candidate_q = edge_count + 2;
    let num_candidates = edge_count + 3;

    let mut votes: Vec<Vote> = Vec::new();
    let mut vertex_voter = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let incident: Vec<usize> = (0..edge_count)
            .filter(|&i| edges[i].0 == v || edges[i].1 == v)
            .collect();
        let rest: Vec<usize> = (0..edge_count).filter(|i| !incident.contains(i)).collect();
        let adjacent_to_target = g.has_edge(v, target);
        let mut order = incident;
        if adjacent_to_target {
            // Type IB: ... > a > q > rest > p
            order.push(candidate_a);
            order.push(candidate_q);
            order.extend(rest);
            order.push(candidate_p);
        } else {
            // Type IA: ... > a > q > p > rest
            order.push(candidate_a);
            order.push(candidate_q);
            order.push(candidate_p);
            order.extend(rest);
        }
        vertex_voter.push(votes.len());
        votes.push(Vote::complete(1, order));
    }
    // Type II: p > q > edges > a
    let type_ii_entry = votes.len();
    let mut order = vec![candidate_p, candidate_q];
    order.extend(0..edge_count);
    order.push(candidate_a);
    votes.push(Vote::complete(1, order));
    // Type III: edges > p > q > a, with multiplicity 2|V|
    let type_iii_entry = votes.len();
    let mut order: Vec<usize> = (0..edge_count).collect();
    order.extend([candidate_p, candidate_q, candidate_a]);
    votes.push(Vote::complete(2 * g.n() as u64, order));

    let election = Election::new(num_candidates, votes)?;
    let trace = ReductionTrace::new("ismd-to-young-ccdv")
        .count("candidates", num_candidates as u64)
        .count("voters", election.num_voters())
        .count("type-i-voters", g.n() as u64)
        .count("type-iii-multiplicity", 2 * g.n() as u64)
        .part("edge-candidates", (0..edge_count).collect())
        .part("special-a-p-q", vec![candidate_a, candidate_p, candidate_q]);
    let gadget = YoungGadget {
        instance: ControlInstance {
            rule: Rule::Young,
            election,
            action: ControlAction::DeleteVoters,
            limit: limit as u64,
            preferred: candidate_p,
        },
        edge_candidates: edges,
        candidate_a,
        candidate_p,
        candidate_q,
        vertex_voter,
        type_ii_entry,
        type_iii_entry,
    };
    Ok((gadget, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elections::young_score;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn precondition_repair_pads_cliques() {
        // path on 4 vertices: alpha = 2 < 3, needs padding
        let p4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!young_preconditions_hold(&p4, 1, &limits()).unwrap());
        let padded = ensure_young_preconditions(&p4, 1, &limits()).unwrap();
        assert!(young_preconditions_hold(&padded, 1, &limits()).unwrap());
        assert_eq!(padded.n(), 4 + 2 * 2);
        // isolated vertices are not repairable
        let lonely = Graph::new(3, vec![(0, 1)]).unwrap();
        assert!(ensure_young_preconditions(&lonely, 0, &limits()).is_err());
    }

    #[test]
    fn deleting_type_ii_zeroes_both_scores() {
        let p4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let g = ensure_young_preconditions(&p4, 0, &limits()).unwrap();
        let (gadget, _) = ismd_to_young_ccdv(&g, 0, 0, &limits()).unwrap();
        let e = &gadget.instance.election;
        // remove the type-II voter
        let votes: Vec<Vote> = e
            .votes()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != gadget.type_ii_entry)
            .map(|(_, v)| v.clone())
            .collect();
        let without = Election::new(e.num_candidates(), votes).unwrap();
        assert_eq!(
            young_score(&without, gadget.candidate_p, &limits()).unwrap().score,
            0
        );
        assert_eq!(
            young_score(&without, gadget.candidate_q, &limits()).unwrap().score,
            0
        );
    }

    #[test]
    fn full_election_scores_match_independence_numbers() {
        let p4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let g = ensure_young_preconditions(&p4, 0, &limits()).unwrap();
        let (gadget, _) = ismd_to_young_ccdv(&g, 0, 0, &limits()).unwrap();
        let e = &gadget.instance.election;
        let (a, a_v) = crate::graphs::independence(&g, 0, &limits()).unwrap();
        assert_eq!(
            young_score(e, gadget.candidate_q, &limits()).unwrap().score,
            2 * a as u64
        );
        assert_eq!(
            young_score(e, gadget.candidate_p, &limits()).unwrap().score,
            2 * a_v as u64
        );
    }
}
