//! Seeded random instance generators. Every generator is a pure function of
//! the RNG state, so equal seeds give byte-identical instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::elections::{Election, Vote};
use crate::graphs::{CnfFormula, Digraph, Graph, GraphControlInstance, Lit, QLit, Qbf2Formula};
use crate::Result;

pub fn rng_from_seed(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// Erdos-Renyi graph: each edge kept with probability `edge_prob`.
pub fn graph(rng: &mut impl Rng, n: usize, edge_prob: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are valid")
}

/// Random antisymmetric digraph: each unordered pair independently gets no
/// arc or one arc of random orientation.
pub fn digraph(rng: &mut impl Rng, n: usize, arc_prob: f64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(arc_prob) {
                if rng.gen_bool(0.5) {
                    arcs.push((u, v));
                } else {
                    arcs.push((v, u));
                }
            }
        }
    }
    Digraph::new(n, arcs).expect("generated arcs are valid")
}

/// Election of uniform random complete votes, one entry per voter.
pub fn election(rng: &mut impl Rng, m: usize, voters: usize) -> Result<Election> {
    let mut votes = Vec::with_capacity(voters);
    for _ in 0..voters {
        let mut order: Vec<usize> = (0..m).collect();
        order.shuffle(rng);
        votes.push(Vote::complete(1, order));
    }
    Election::new(m, votes)
}

/// Random 3CNF over `vars` variables.
pub fn cnf(rng: &mut impl Rng, vars: usize, clauses: usize) -> CnfFormula {
    let make_lit = |rng: &mut dyn rand::RngCore| Lit {
        var: rng.gen_range(0..vars as u64) as usize,
        negated: rng.gen_range(0..2u32) == 1,
    };
    let clauses = (0..clauses)
        .map(|_| [make_lit(rng), make_lit(rng), make_lit(rng)])
        .collect();
    CnfFormula::new(vars, clauses).expect("generated clauses are valid")
}

/// Random QSAT2 formula with equal blocks of size `n`.
pub fn qbf2(rng: &mut impl Rng, n: usize, clauses: usize) -> Qbf2Formula {
    let make_lit = |rng: &mut dyn rand::RngCore| {
        let index = rng.gen_range(0..n as u64) as usize;
        let negated = rng.gen_range(0..2u32) == 1;
        if rng.gen_range(0..2u32) == 1 {
            QLit {
                block: crate::graphs::VarBlock::Y,
                index,
                negated,
            }
        } else {
            QLit {
                block: crate::graphs::VarBlock::X,
                index,
                negated,
            }
        }
    };
    let clauses = (0..clauses)
        .map(|_| [make_lit(rng), make_lit(rng), make_lit(rng)])
        .collect();
    Qbf2Formula::new(n, clauses).expect("generated clauses are valid")
}

fn random_subset(rng: &mut impl Rng, pool: &[usize], prob: f64) -> Vec<usize> {
    pool.iter().copied().filter(|_| rng.gen_bool(prob)).collect()
}

/// Random instance of one of the seven graph control kinds.
pub fn graph_control(
    rng: &mut impl Rng,
    kind: &str,
    n: usize,
    limit: usize,
) -> Result<GraphControlInstance> {
    let inst = match kind {
        "vcms" => {
            let g = graph(rng, n, 0.5);
            let target = rng.gen_range(0..n);
            GraphControlInstance::Vcms {
                graph: g,
                deletable: random_subset(rng, &(0..n).collect::<Vec<_>>(), 0.5),
                limit,
                target,
            }
        }
        "vcma" => {
            let g = graph(rng, n, 0.5);
            let target = rng.gen_range(0..n);
            let pool: Vec<usize> = (0..n).filter(|&v| v != target).collect();
            GraphControlInstance::Vcma {
                graph: g,
                addable: random_subset(rng, &pool, 0.4),
                limit,
                target,
            }
        }
        "ismd" => GraphControlInstance::Ismd {
            graph: graph(rng, n, 0.5),
            limit,
            target: rng.gen_range(0..n),
        },
        "fasms" => {
            let d = digraph(rng, n, 0.6);
            let target = rng.gen_range(0..n);
            let pool: Vec<usize> = (0..n).filter(|&v| v != target).collect();
            GraphControlInstance::Fasms {
                digraph: d,
                deletable: random_subset(rng, &pool, 0.5),
                limit,
                target,
            }
        }
        "fasma" => {
            let d = digraph(rng, n, 0.6);
            let target = rng.gen_range(0..n);
            let pool: Vec<usize> = (0..n).filter(|&v| v != target).collect();
            GraphControlInstance::Fasma {
                digraph: d,
                addable: random_subset(rng, &pool, 0.4),
                limit,
                target,
            }
        }
        "fasmaa" => {
            let d = digraph(rng, n, 0.4);
            let target = rng.gen_range(0..n);
            let mut addable_arcs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !d.has_arc(u, v) && !d.has_arc(v, u) && rng.gen_bool(0.3) {
                        if rng.gen_bool(0.5) {
                            addable_arcs.push((u, v));
                        } else {
                            addable_arcs.push((v, u));
                        }
                    }
                }
            }
            GraphControlInstance::Fasmaa {
                digraph: d,
                addable_arcs,
                limit,
                target,
            }
        }
        "gnd" => GraphControlInstance::Gnd {
            graph: graph(rng, n, 0.5),
            limit,
            clique_bound: rng.gen_range(1..=3),
        },
        other => {
            return Err(crate::Error::invalid(format!(
                "unknown graph control kind '{other}'"
            )))
        }
    };
    inst.validate()?;
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_seeds_equal_instances() {
        let a = election(&mut rng_from_seed(42), 4, 6).unwrap();
        let b = election(&mut rng_from_seed(42), 4, 6).unwrap();
        assert_eq!(a, b);
        let c = election(&mut rng_from_seed(43), 4, 6).unwrap();
        assert_ne!(a, c);
        let g1 = graph(&mut rng_from_seed(7), 6, 0.5);
        let g2 = graph(&mut rng_from_seed(7), 6, 0.5);
        assert_eq!(g1, g2);
    }

    #[test]
    fn generated_instances_validate() {
        let mut rng = rng_from_seed(1);
        for kind in ["vcms", "vcma", "ismd", "fasms", "fasma", "fasmaa", "gnd"] {
            for _ in 0..5 {
                graph_control(&mut rng, kind, 5, 2).unwrap();
            }
        }
        assert!(graph_control(&mut rng, "nope", 5, 2).is_err());
    }
}
