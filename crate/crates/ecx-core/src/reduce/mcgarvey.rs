//! McGarvey's construction: an election whose pairwise margin matrix is
//! exactly twice the adjacency matrix of a given digraph.
//!
//! Every arc (v, w) contributes two voters: one voting v > w > rest in
//! ascending order, one voting rest in descending order > v > w. The two
//! rest-blocks cancel on every pair not equal to (v, w), so the arc's pair
//! gains a margin of exactly 2 and nothing else moves.

use crate::elections::{Election, Vote};
use crate::graphs::Digraph;
use crate::Result;

use super::ReductionTrace;

/// Builds the two-voters-per-arc election over the digraph's vertices.
pub fn mcgarvey(d: &Digraph) -> Result<(Election, ReductionTrace)> {
    let n = d.n();
    let mut votes = Vec::with_capacity(2 * d.num_arcs());
    for (v, w) in d.arcs() {
        let rest: Vec<usize> = (0..n).filter(|&c| c != v && c != w).collect();
        let mut forward = vec![v, w];
        forward.extend(rest.iter().copied());
        let mut backward: Vec<usize> = rest.iter().rev().copied().collect();
        backward.push(v);
        backward.push(w);
        votes.push(Vote::complete(1, forward));
        votes.push(Vote::complete(1, backward));
    }
    let election = Election::new(n, votes)?;
    let trace = ReductionTrace::new("mcgarvey")
        .count("candidates", n as u64)
        .count("voters", 2 * d.num_arcs() as u64);
    Ok((election, trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arcless_digraph_gives_no_voters() {
        let d = Digraph::new(3, Vec::<(usize, usize)>::new()).unwrap();
        let (e, _) = mcgarvey(&d).unwrap();
        assert_eq!(e.num_voters(), 0);
        assert_eq!(e.num_candidates(), 3);
    }

    #[test]
    fn single_arc_margins() {
        let d = Digraph::new(3, vec![(0, 1)]).unwrap();
        let (e, trace) = mcgarvey(&d).unwrap();
        assert_eq!(e.num_voters(), 2);
        assert_eq!(trace.get_count("voters"), Some(2));
        let pw = e.pairwise();
        assert_eq!(pw.margin(0, 1), 2);
        assert_eq!(pw.margin(0, 2), 0);
        assert_eq!(pw.margin(1, 2), 0);
    }

    #[test]
    fn margins_equal_twice_adjacency() {
        let d = Digraph::new(5, vec![(0, 1), (1, 2), (2, 0), (3, 1), (4, 3), (2, 4)]).unwrap();
        let (e, _) = mcgarvey(&d).unwrap();
        let pw = e.pairwise();
        for a in 0..5 {
            for b in 0..5 {
                if a == b {
                    continue;
                }
                let expected = if d.has_arc(a, b) { 2 } else if d.has_arc(b, a) { -2 } else { 0 };
                assert_eq!(pw.margin(a, b), expected, "pair ({a},{b})");
            }
        }
    }
}
