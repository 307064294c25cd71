//! Independent oracles for the integration suites: exhaustive enumerations
//! that share no search code with the solvers they validate.

#![allow(dead_code)]

use ecx_core::elections::Election;
use ecx_core::graphs::{CnfFormula, Digraph, Graph, QLit, Qbf2Formula};
use itertools::Itertools;

/// Locally computed consensus score: summed pairwise disagreements, counting
/// a pair only when the vote lists both candidates. Matches Kemeny on
/// complete votes and Kemeny' on partial ones.
pub fn score_by_pair_count(e: &Election, consensus: &[usize]) -> u64 {
    let m = e.num_candidates();
    let mut pos = vec![usize::MAX; m];
    for (i, &c) in consensus.iter().enumerate() {
        pos[c] = i;
    }
    let mut score = 0;
    for vote in e.votes() {
        let order = vote.ranking.order();
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                // vote prefers order[i] over order[j]
                if pos[order[i]] > pos[order[j]] {
                    score += vote.count;
                }
            }
        }
    }
    score
}

/// Exhaustive Kemeny optimum over all m! consensuses: score, winner set,
/// and the lexicographically smallest optimal consensus.
pub fn kemeny_by_permutations(e: &Election) -> (u64, Vec<usize>, Vec<usize>) {
    let m = e.num_candidates();
    let mut best = u64::MAX;
    let mut tops = vec![false; m];
    let mut witness: Option<Vec<usize>> = None;
    for perm in (0..m).permutations(m) {
        let s = score_by_pair_count(e, &perm);
        if s < best {
            best = s;
            tops = vec![false; m];
            tops[perm[0]] = true;
            witness = Some(perm);
        } else if s == best {
            tops[perm[0]] = true;
        }
    }
    let winners = (0..m).filter(|&c| tops[c]).collect();
    (best, winners, witness.expect("at least one permutation"))
}

/// Exhaustive minimum vertex cover by subset enumeration (n <= 20).
pub fn min_vc_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "oracle is exponential");
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = n;
    for mask in 0..1usize << n {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        if edges
            .iter()
            .all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0)
        {
            best = size;
        }
    }
    best
}

/// Exhaustive membership: is `v` in some minimum vertex cover?
pub fn vc_membership_by_subsets(g: &Graph, v: usize) -> bool {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let best = min_vc_by_subsets(g);
    (0..1usize << n).any(|mask| {
        mask.count_ones() as usize == best
            && mask & (1 << v) != 0
            && edges
                .iter()
                .all(|&(u, w)| mask & (1 << u) != 0 || mask & (1 << w) != 0)
    })
}

/// Exhaustive independence numbers (alpha, alpha_v).
pub fn independence_by_subsets(g: &Graph, v: usize) -> (usize, usize) {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut alpha = 0;
    let mut alpha_v = 0;
    for mask in 0..1usize << n {
        if edges
            .iter()
            .any(|&(u, w)| mask & (1 << u) != 0 && mask & (1 << w) != 0)
        {
            continue;
        }
        let size = mask.count_ones() as usize;
        alpha = alpha.max(size);
        if mask & (1 << v) != 0 {
            alpha_v = alpha_v.max(size);
        }
    }
    (alpha, alpha_v)
}

fn is_acyclic_without(d: &Digraph, removed: u64, arcs: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0usize; d.n()];
    let mut adj = vec![Vec::new(); d.n()];
    for (i, &(u, v)) in arcs.iter().enumerate() {
        if removed & (1 << i) == 0 {
            adj[u].push(v);
            indeg[v] += 1;
        }
    }
    let mut queue: Vec<usize> = (0..d.n()).filter(|&v| indeg[v] == 0).collect();
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
    seen == d.n()
}

/// Exhaustive minimum feedback arc set size via arc-subset enumeration.
pub fn min_fas_by_arc_subsets(d: &Digraph) -> u64 {
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    assert!(arcs.len() <= 20, "oracle is exponential");
    let mut best = arcs.len() as u64;
    for mask in 0..1u64 << arcs.len() {
        let size = mask.count_ones() as u64;
        if size < best && is_acyclic_without(d, mask, &arcs) {
            best = size;
        }
    }
    best
}

/// The arc-set formulation of top membership: does some minimum-size
/// feedback arc set contain every arc entering `target`?
pub fn fas_membership_by_arc_subsets(d: &Digraph, target: usize) -> bool {
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    let entering: u64 = arcs
        .iter()
        .enumerate()
        .filter(|(_, &(_, v))| v == target)
        .map(|(i, _)| 1u64 << i)
        .sum();
    let best = min_fas_by_arc_subsets(d);
    (0..1u64 << arcs.len()).any(|mask| {
        mask.count_ones() as u64 == best
            && mask & entering == entering
            && is_acyclic_without(d, mask, &arcs)
    })
}

/// Exhaustive Young score: maximize kept voters over all sub-multisets.
pub fn young_by_submultisets(e: &Election, c: usize) -> u64 {
    let m = e.num_candidates();
    let votes = e.votes();
    let mut best = 0u64;
    let mut kept = vec![0u64; votes.len()];
    fn rec(
        e: &Election,
        c: usize,
        m: usize,
        idx: usize,
        kept: &mut Vec<u64>,
        best: &mut u64,
    ) {
        if idx == e.votes().len() {
            // weak Condorcet check of c under `kept`
            let mut net = vec![0i64; m];
            for (vote, &k) in e.votes().iter().zip(kept.iter()) {
                let order = vote.ranking.order();
                let pc = order.iter().position(|&x| x == c).unwrap();
                for (pd, &d) in order.iter().enumerate() {
                    if d != c {
                        net[d] += if pc < pd { k as i64 } else { -(k as i64) };
                    }
                }
            }
            if (0..m).filter(|&d| d != c).all(|d| net[d] >= 0) {
                let total: u64 = kept.iter().sum();
                *best = (*best).max(total);
            }
            return;
        }
        for k in 0..=e.votes()[idx].count {
            kept[idx] = k;
            rec(e, c, m, idx + 1, kept, best);
        }
        kept[idx] = 0;
    }
    rec(e, c, m, 0, &mut kept, &mut best);
    let _ = votes;
    best
}

/// Exhaustive Dodgson score by enumerating every lift vector (one lift depth
/// per individual voter). Tiny instances only.
pub fn dodgson_by_lift_vectors(e: &Election, c: usize) -> u64 {
    // expand to individual voters
    let mut rankings: Vec<Vec<usize>> = Vec::new();
    for vote in e.votes() {
        for _ in 0..vote.count {
            rankings.push(vote.ranking.order().to_vec());
        }
    }
    let m = e.num_candidates();
    let positions: Vec<usize> = rankings
        .iter()
        .map(|r| r.iter().position(|&x| x == c).unwrap())
        .collect();
    let space: u64 = positions.iter().map(|&p| p as u64 + 1).product();
    assert!(space <= 4_000_000, "oracle is exponential");
    let mut best = u64::MAX;
    let mut lifts = vec![0usize; rankings.len()];
    loop {
        let cost: u64 = lifts.iter().map(|&l| l as u64).sum();
        if cost < best {
            // apply lifts and test strict pairwise majority for c
            let mut net = vec![0i64; m];
            for ((r, &lift), &pos) in rankings.iter().zip(&lifts).zip(&positions) {
                let new_pos = pos - lift;
                for (pd, &d) in r.iter().enumerate() {
                    if d == c {
                        continue;
                    }
                    // d's effective position shifts down one if it was
                    // jumped over
                    let dp = if pd >= new_pos && pd < pos { pd + 1 } else { pd };
                    net[d] += if new_pos < dp { 1 } else { -1 };
                }
            }
            if (0..m).filter(|&d| d != c).all(|d| net[d] > 0) {
                best = cost;
            }
        }
        // odometer over lift vectors
        let mut i = 0;
        loop {
            if i == lifts.len() {
                return best;
            }
            if lifts[i] < positions[i] {
                lifts[i] += 1;
                break;
            }
            lifts[i] = 0;
            i += 1;
        }
    }
}

/// Exhaustive Dodgson score by breadth-first search over entire profiles,
/// allowing adjacent swaps anywhere (not just around `c`). Confirms that
/// swaps not involving the scored candidate never help. Micro instances.
pub fn dodgson_by_all_swaps(e: &Election, c: usize) -> u64 {
    use std::collections::{HashSet, VecDeque};
    let mut profile: Vec<Vec<usize>> = Vec::new();
    for vote in e.votes() {
        for _ in 0..vote.count {
            profile.push(vote.ranking.order().to_vec());
        }
    }
    let m = e.num_candidates();
    let is_condorcet = |profile: &Vec<Vec<usize>>| -> bool {
        let mut net = vec![0i64; m];
        for r in profile {
            let pc = r.iter().position(|&x| x == c).unwrap();
            for (pd, &d) in r.iter().enumerate() {
                if d != c {
                    net[d] += if pc < pd { 1 } else { -1 };
                }
            }
        }
        (0..m).filter(|&d| d != c).all(|d| net[d] > 0)
    };
    let mut seen: HashSet<Vec<Vec<usize>>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(profile.clone());
    queue.push_back((profile, 0u64));
    while let Some((profile, depth)) = queue.pop_front() {
        if is_condorcet(&profile) {
            return depth;
        }
        assert!(seen.len() < 3_000_000, "oracle state space exploded");
        for vi in 0..profile.len() {
            for pos in 0..m - 1 {
                let mut next = profile.clone();
                next[vi].swap(pos, pos + 1);
                if seen.insert(next.clone()) {
                    queue.push_back((next, depth + 1));
                }
            }
        }
    }
    unreachable!("lifting c to the top everywhere always succeeds");
}

/// Fixed enumeration of QSAT2 formulas with one variable per block: all 64
/// single-clause formulas plus every 19th of the 4096 two-clause patterns
/// (280 distinct formulas in total).
pub fn qbf2_pattern_enumeration() -> Vec<Qbf2Formula> {
    let literals = [QLit::x(0), QLit::nx(0), QLit::y(0), QLit::ny(0)];
    let clause = |id: usize| -> [QLit; 3] {
        [
            literals[id % 4],
            literals[id / 4 % 4],
            literals[id / 16 % 4],
        ]
    };
    let mut formulas = Vec::new();
    for a in 0..64 {
        formulas.push(Qbf2Formula::new(1, vec![clause(a)]).unwrap());
    }
    let mut p = 0usize;
    while p < 64 * 64 {
        formulas.push(Qbf2Formula::new(1, vec![clause(p % 64), clause(p / 64)]).unwrap());
        p += 19;
    }
    formulas
}

/// Every 3CNF with at most `max_clauses` clauses over the fixed clause
/// patterns (all sorted literal triples) for `vars` variables.
pub fn cnf_pattern_enumeration(vars: usize, max_clauses: usize) -> Vec<CnfFormula> {
    use ecx_core::graphs::Lit;
    let mut literals = Vec::new();
    for v in 0..vars {
        literals.push(Lit::pos(v));
        literals.push(Lit::neg(v));
    }
    let mut patterns = Vec::new();
    for a in 0..literals.len() {
        for b in a..literals.len() {
            for c in b..literals.len() {
                patterns.push([literals[a], literals[b], literals[c]]);
            }
        }
    }
    let mut formulas = Vec::new();
    for &pattern in &patterns {
        formulas.push(CnfFormula::new(vars, vec![pattern]).unwrap());
    }
    if max_clauses >= 2 {
        for &first in &patterns {
            for &second in &patterns {
                formulas.push(CnfFormula::new(vars, vec![first, second]).unwrap());
            }
        }
    }
    formulas
}
