//! Exact minimization of linear-ordering cost.
//!
//! Both Kemeny consensus search and minimum feedback arc set minimize the
//! same objective: over all orderings of `0..n`, the sum of `w[a][b]` for
//! every ordered pair with `a` placed above `b`. Kemeny uses
//! `w[a][b] = prefers[b][a]` (votes disagreeing with `a > b`); feedback arc
//! set uses `w[a][b] = 1` iff the arc `b -> a` exists.
//!
//! Two engines share this objective:
//!
//! * a subset dynamic program, exact and exhaustive, O(2^n) memory — used up
//!   to `Limits::order_dp_vertices` and whenever the full per-first-candidate
//!   cost vector or the lexicographically smallest optimum is required;
//! * a branch-and-bound search on the pair-delta digraph (cycle branching
//!   with a cycle-packing lower bound, after strongly-connected-component
//!   decomposition) — used for larger sparse instances such as the doubled
//!   digraphs produced by the vertex-cover reductions.

use std::collections::HashMap;

use crate::{Error, Limits, Result};

/// Pair costs for a linear-ordering problem: `w[a][b]` is the cost incurred
/// when `a` is placed above `b`.
#[derive(Debug, Clone)]
pub struct OrderWeights {
    n: usize,
    w: Vec<u64>,
}

impl OrderWeights {
    pub fn new(n: usize) -> Self {
        OrderWeights { n, w: vec![0; n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, above: usize, below: usize) -> u64 {
        self.w[above * self.n + below]
    }

    pub fn set(&mut self, above: usize, below: usize, cost: u64) {
        self.w[above * self.n + below] = cost;
    }

    /// Restriction to the complement of `drop`, preserving relative ids.
    fn without(&self, drop: usize) -> (OrderWeights, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != drop).collect();
        let mut sub = OrderWeights::new(keep.len());
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if i != j {
                    sub.set(i, j, self.get(a, b));
                }
            }
        }
        (sub, keep)
    }

    /// Total cost of a concrete ordering (top first).
    pub fn cost_of(&self, order: &[usize]) -> u64 {
        let mut total = 0;
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                total += self.get(order[i], order[j]);
            }
        }
        total
    }
}

/// Exact optimum: minimum cost and the lexicographically smallest optimal
/// ordering. Requires the subset DP, so `n` must be within
/// `limits.order_dp_vertices`.
pub fn optimal_order(w: &OrderWeights, limits: &Limits) -> Result<(u64, Vec<usize>)> {
    let dp = SuffixDp::build(w, limits.order_dp_vertices)?;
    Ok((dp.optimal(), dp.lex_smallest_optimal_order()))
}

/// Minimum ordering cost. Uses the subset DP when `n` fits, branch and bound
/// otherwise.
pub fn optimal_cost(w: &OrderWeights, limits: &Limits) -> Result<u64> {
    if w.n <= limits.order_dp_vertices {
        Ok(SuffixDp::build(w, limits.order_dp_vertices)?.optimal())
    } else {
        branch_and_bound_cost(w, limits)
    }
}

/// Minimum cost over orderings that place `first` on top.
pub fn optimal_cost_with_first(w: &OrderWeights, first: usize, limits: &Limits) -> Result<u64> {
    if first >= w.n {
        return Err(Error::invalid(format!("no element {first}")));
    }
    let top_cost: u64 = (0..w.n).filter(|&d| d != first).map(|d| w.get(first, d)).sum();
    if w.n == 1 {
        return Ok(0);
    }
    let (sub, _) = w.without(first);
    Ok(top_cost + optimal_cost(&sub, limits)?)
}

/// Minimum cost over orderings with each element first, as a vector.
/// DP-only: needed for full winner sets, which are capped accordingly.
pub fn first_fixed_costs(w: &OrderWeights, limits: &Limits) -> Result<Vec<u64>> {
    let dp = SuffixDp::build(w, limits.order_dp_vertices)?;
    Ok((0..w.n).map(|c| dp.first_fixed(c)).collect())
}

/// A deterministic optimal ordering for instances beyond the DP cap.
/// Unlike [`optimal_order`] the result is only guaranteed to be *an* optimum,
/// reproducible across runs, not the lexicographically smallest one.
pub fn some_optimal_order(w: &OrderWeights, limits: &Limits) -> Result<(u64, Vec<usize>)> {
    if w.n <= limits.order_dp_vertices {
        return optimal_order(w, limits);
    }
    let (cost, order) = branch_and_bound_order(w, limits)?;
    Ok((cost, order))
}

// ---------------------------------------------------------------------------
// Subset dynamic program
// ---------------------------------------------------------------------------

struct SuffixDp<'a> {
    w: &'a OrderWeights,
    /// f[mask] = min cost of ordering the elements *outside* `mask`, given
    /// that every element of `mask` is already placed above all of them.
    f: Vec<u64>,
}

impl<'a> SuffixDp<'a> {
    fn build(w: &'a OrderWeights, cap: usize) -> Result<Self> {
        let n = w.n;
        if n > cap {
            return Err(Error::limit(format!(
                "ordering DP over {n} elements exceeds the cap of {cap}"
            )));
        }
        if n == 0 {
            return Ok(SuffixDp { w, f: vec![0] });
        }
        let full: usize = (1usize << n) - 1;
        let mut f = vec![0u64; 1usize << n];
        for mask in (0..full).rev() {
            let mut best = u64::MAX;
            for c in 0..n {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let cost = Self::place_cost(w, mask, c) + f[mask | (1 << c)];
                if cost < best {
                    best = cost;
                }
            }
            f[mask] = best;
        }
        Ok(SuffixDp { w, f })
    }

    /// Cost of placing `c` directly below the elements of `mask`: `c` ends up
    /// above every remaining element.
    fn place_cost(w: &OrderWeights, mask: usize, c: usize) -> u64 {
        let mut cost = 0;
        for d in 0..w.n {
            if d != c && mask & (1 << d) == 0 {
                cost += w.get(c, d);
            }
        }
        cost
    }

    fn optimal(&self) -> u64 {
        self.f[0]
    }

    fn first_fixed(&self, c: usize) -> u64 {
        Self::place_cost(self.w, 0, c) + self.f[1 << c]
    }

    fn lex_smallest_optimal_order(&self) -> Vec<usize> {
        let n = self.w.n;
        let mut order = Vec::with_capacity(n);
        let mut mask = 0usize;
        for _ in 0..n {
            for c in 0..n {
                if mask & (1 << c) != 0 {
                    continue;
                }
                if Self::place_cost(self.w, mask, c) + self.f[mask | (1 << c)] == self.f[mask] {
                    order.push(c);
                    mask |= 1 << c;
                    break;
                }
            }
        }
        debug_assert_eq!(order.len(), n);
        order
    }
}

// ---------------------------------------------------------------------------
// Branch and bound on the pair-delta digraph
// ---------------------------------------------------------------------------

/// Weighted arc in the delta digraph: violating `u -> v` (placing `v` above
/// `u`) costs `w` beyond the unavoidable pair minimum.
#[derive(Debug, Clone, Copy)]
struct DeltaArc {
    from: usize,
    to: usize,
    weight: u64,
}

fn delta_digraph(w: &OrderWeights) -> (u64, Vec<DeltaArc>) {
    let mut base = 0;
    let mut arcs = Vec::new();
    for a in 0..w.n {
        for b in a + 1..w.n {
            let ab = w.get(a, b);
            let ba = w.get(b, a);
            base += ab.min(ba);
            if ab < ba {
                arcs.push(DeltaArc { from: a, to: b, weight: ba - ab });
            } else if ba < ab {
                arcs.push(DeltaArc { from: b, to: a, weight: ab - ba });
            }
        }
    }
    (base, arcs)
}

fn branch_and_bound_cost(w: &OrderWeights, limits: &Limits) -> Result<u64> {
    Ok(branch_and_bound_order(w, limits)?.0)
}

fn branch_and_bound_order(w: &OrderWeights, limits: &Limits) -> Result<(u64, Vec<usize>)> {
    let n = w.n;
    if n > limits.order_bb_vertices {
        return Err(Error::limit(format!(
            "ordering search over {n} elements exceeds the cap of {}",
            limits.order_bb_vertices
        )));
    }
    let (base, arcs) = delta_digraph(w);
    // Solve each strongly connected component of the delta digraph
    // independently; arcs between components are satisfied for free by
    // ordering the condensation topologically.
    let comps = tarjan_sccs(n, &arcs);
    let mut removed = Vec::new();
    let mut total = base;
    let mut budget = limits.order_bb_nodes;
    for comp in &comps {
        if comp.len() < 2 {
            continue;
        }
        let comp_arcs: Vec<DeltaArc> = arcs
            .iter()
            .filter(|a| comp.contains(&a.from) && comp.contains(&a.to))
            .copied()
            .collect();
        if comp_arcs.is_empty() {
            continue;
        }
        let mut solver = WfasSolver::new(n, comp_arcs, budget)?;
        let (cost, cut) = solver.solve()?;
        budget = budget.saturating_sub(solver.nodes);
        total += cost;
        removed.extend(cut);
    }
    // Residual digraph (all delta arcs minus the removed set) is acyclic;
    // a topological order of it, smallest id first among the ready vertices,
    // is an optimal ordering.
    let order = topo_order(n, &arcs, &removed);
    debug_assert_eq!(w.cost_of(&order), total);
    Ok((total, order))
}

fn tarjan_sccs(n: usize, arcs: &[DeltaArc]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for a in arcs {
        adj[a.from].push(a.to);
    }
    // Iterative Tarjan.
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut counter = 0;
    for start in 0..n {
        if index[start] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(start, 0)];
        while let Some(&mut (v, ref mut ei)) = call.last_mut() {
            if *ei == 0 {
                index[v] = counter;
                low[v] = counter;
                counter += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if *ei < adj[v].len() {
                let to = adj[v][*ei];
                *ei += 1;
                if index[to] == usize::MAX {
                    call.push((to, 0));
                } else if on_stack[to] {
                    low[v] = low[v].min(index[to]);
                }
            } else {
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let u = stack.pop().unwrap();
                        on_stack[u] = false;
                        comp.push(u);
                        if u == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
                let lv = low[v];
                call.pop();
                if let Some(&mut (parent, _)) = call.last_mut() {
                    low[parent] = low[parent].min(lv);
                }
            }
        }
    }
    comps
}

fn topo_order(n: usize, arcs: &[DeltaArc], removed: &[(usize, usize)]) -> Vec<usize> {
    let removed_set: std::collections::HashSet<(usize, usize)> = removed.iter().copied().collect();
    let mut indeg = vec![0usize; n];
    let mut adj = vec![Vec::new(); n];
    for a in arcs {
        if !removed_set.contains(&(a.from, a.to)) {
            adj[a.from].push(a.to);
            indeg[a.to] += 1;
        }
    }
    let mut ready: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        order.push(v);
        for &to in &adj[v] {
            indeg[to] -= 1;
            if indeg[to] == 0 {
                ready.insert(to);
            }
        }
    }
    debug_assert_eq!(order.len(), n, "residual digraph must be acyclic");
    order
}

/// Exact minimum-weight feedback arc set on one strongly connected component,
/// by branching on the arcs of a shortest cycle.
struct WfasSolver {
    n: usize,
    arcs: Vec<DeltaArc>,
    alive: Vec<bool>,
    best: u64,
    best_cut: Vec<usize>,
    nodes: u64,
    node_limit: u64,
    /// removed-arc bitmask -> cheapest accumulated cost seen
    seen: HashMap<u128, u64>,
}

impl WfasSolver {
    fn new(n: usize, arcs: Vec<DeltaArc>, node_limit: u64) -> Result<Self> {
        if arcs.len() > 128 {
            return Err(Error::limit(format!(
                "delta digraph with {} weighted arcs is too dense for the cycle search",
                arcs.len()
            )));
        }
        Ok(WfasSolver {
            n,
            alive: vec![true; arcs.len()],
            arcs,
            best: u64::MAX,
            best_cut: Vec::new(),
            nodes: 0,
            node_limit,
            seen: HashMap::new(),
        })
    }

    fn solve(&mut self) -> Result<(u64, Vec<(usize, usize)>)> {
        // Upper bound: remove every arc.
        self.best = self.arcs.iter().map(|a| a.weight).sum::<u64>();
        self.best_cut = (0..self.arcs.len()).collect();
        self.dfs(0, 0)?;
        let cut = self
            .best_cut
            .iter()
            .map(|&i| (self.arcs[i].from, self.arcs[i].to))
            .collect();
        Ok((self.best, cut))
    }

    fn mask(&self) -> u128 {
        let mut m = 0u128;
        for (i, &alive) in self.alive.iter().enumerate() {
            if !alive {
                m |= 1 << i;
            }
        }
        m
    }

    fn dfs(&mut self, acc: u64, depth: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::limit(
                "ordering branch-and-bound exceeded its node budget".to_string(),
            ));
        }
        if acc >= self.best {
            return Ok(());
        }
        let mask = self.mask();
        if let Some(&prev) = self.seen.get(&mask) {
            if prev <= acc {
                return Ok(());
            }
        }
        if self.seen.len() > 2_000_000 {
            self.seen.clear();
        }
        self.seen.insert(mask, acc);
        let Some(cycle) = self.shortest_cycle() else {
            // Acyclic: the removed arcs form a feasible cut.
            self.best = acc;
            self.best_cut = (0..self.arcs.len()).filter(|&i| !self.alive[i]).collect();
            return Ok(());
        };
        let bound = self.packing_bound();
        if acc + bound >= self.best {
            return Ok(());
        }
        for &ai in &cycle {
            self.alive[ai] = false;
            self.dfs(acc + self.arcs[ai].weight, depth + 1)?;
            self.alive[ai] = true;
        }
        Ok(())
    }

    /// Shortest cycle over alive arcs, as arc indices. BFS from every vertex.
    fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, arc) in self.arcs.iter().enumerate() {
            if self.alive[i] {
                adj[arc.from].push(i);
            }
        }
        let mut best: Option<Vec<usize>> = None;
        for s in 0..self.n {
            if adj[s].is_empty() {
                continue;
            }
            // BFS back to s.
            let mut parent_arc = vec![usize::MAX; self.n];
            let mut dist = vec![usize::MAX; self.n];
            let mut queue = std::collections::VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            'bfs: while let Some(v) = queue.pop_front() {
                if let Some(b) = &best {
                    if dist[v] + 1 >= b.len() {
                        break;
                    }
                }
                for &ai in &adj[v] {
                    let to = self.arcs[ai].to;
                    if to == s {
                        // Reconstruct cycle ending with arc ai.
                        let mut cyc = vec![ai];
                        let mut cur = v;
                        while cur != s {
                            let pa = parent_arc[cur];
                            cyc.push(pa);
                            cur = self.arcs[pa].from;
                        }
                        cyc.reverse();
                        if best.as_ref().map_or(true, |b| cyc.len() < b.len()) {
                            best = Some(cyc);
                        }
                        break 'bfs;
                    }
                    if dist[to] == usize::MAX {
                        dist[to] = dist[v] + 1;
                        parent_arc[to] = ai;
                        queue.push_back(to);
                    }
                }
            }
            if best.as_ref().is_some_and(|b| b.len() == 2) {
                break;
            }
        }
        best
    }

    /// Greedy arc-disjoint (in weight) cycle packing: a valid lower bound on
    /// the remaining cut weight.
    fn packing_bound(&mut self) -> u64 {
        let saved = self.alive.clone();
        let mut weights: Vec<u64> = self.arcs.iter().map(|a| a.weight).collect();
        let mut bound = 0;
        while let Some(cycle) = self.shortest_cycle() {
            let delta = cycle.iter().map(|&i| weights[i]).min().unwrap();
            bound += delta;
            for &i in &cycle {
                weights[i] -= delta;
                if weights[i] == 0 {
                    self.alive[i] = false;
                }
            }
        }
        self.alive = saved;
        bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weights_from(n: usize, costs: &[(usize, usize, u64)]) -> OrderWeights {
        let mut w = OrderWeights::new(n);
        for &(a, b, c) in costs {
            w.set(a, b, c);
        }
        w
    }

    #[test]
    fn dp_three_cycle() {
        // Arcs 0->1->2->0, FAS weights: placing b above a where a->b costs 1.
        // w[above][below]: violating arc (u,v) means v above u: w[v][u] = 1.
        let w = weights_from(3, &[(1, 0, 1), (2, 1, 1), (0, 2, 1)]);
        let (cost, order) = optimal_order(&w, &Limits::default()).unwrap();
        assert_eq!(cost, 1);
        assert_eq!(w.cost_of(&order), 1);
        // Lexicographically smallest optimum starts with 0.
        assert_eq!(order[0], 0);
    }

    #[test]
    fn bb_matches_dp_on_random_instances() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut limits = Limits::default();
        for trial in 0..60 {
            let n = 3 + (trial % 6);
            let mut w = OrderWeights::new(n);
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        w.set(a, b, rng.gen_range(0..4));
                    }
                }
            }
            limits.order_dp_vertices = 20;
            let dp_cost = optimal_cost(&w, &limits).unwrap();
            limits.order_dp_vertices = 1; // force branch and bound
            let bb_cost = optimal_cost(&w, &limits).unwrap();
            assert_eq!(dp_cost, bb_cost, "trial {trial}");
            let (bb_total, bb_order) = some_optimal_order(&w, &limits).unwrap();
            assert_eq!(bb_total, dp_cost);
            assert_eq!(w.cost_of(&bb_order), dp_cost);
            for first in 0..n {
                limits.order_dp_vertices = 20;
                let a = optimal_cost_with_first(&w, first, &limits).unwrap();
                limits.order_dp_vertices = 1;
                let b = optimal_cost_with_first(&w, first, &limits).unwrap();
                assert_eq!(a, b, "trial {trial} first {first}");
            }
        }
    }

    #[test]
    fn first_fixed_consistency() {
        let w = weights_from(3, &[(1, 0, 2), (2, 1, 1), (0, 2, 1)]);
        let limits = Limits::default();
        let costs = first_fixed_costs(&w, &limits).unwrap();
        let opt = optimal_cost(&w, &limits).unwrap();
        assert_eq!(costs.iter().min().copied().unwrap(), opt);
        for c in 0..3 {
            assert_eq!(costs[c], optimal_cost_with_first(&w, c, &limits).unwrap());
        }
    }

    #[test]
    fn dp_cap_reports_limit() {
        let w = OrderWeights::new(25);
        let mut limits = Limits::default();
        limits.order_dp_vertices = 20;
        assert!(matches!(
            SuffixDp::build(&w, limits.order_dp_vertices),
            Err(Error::ResourceLimit(_))
        ));
    }
}
