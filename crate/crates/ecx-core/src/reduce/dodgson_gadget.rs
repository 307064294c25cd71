//! Dodgson gadgets: the 3SAT-to-Dodgson-score election and its lifting to
//! QSAT2 control by deleting (or adding) the x-literal candidates.
//!
//! Every unnamed tail "..." in a gadget vote expands to the remaining
//! candidates in ascending id order, and every set written inside a vote
//! expands in ascending id order; the candidate id layout below therefore
//! fixes the construction bit-exactly.

use crate::control::{ControlAction, ControlInstance, Rule};
use crate::elections::{Election, Vote};
use crate::graphs::{CnfFormula, Qbf2Formula};
use crate::{Error, Result};

use super::ReductionTrace;

/// Completes a partially specified vote: the slot `usize::MAX` marks where
/// the remaining candidates flow in ascending order.
fn fill_tail(explicit: &[usize], num_candidates: usize) -> Vec<usize> {
    let mut used = vec![false; num_candidates];
    for &c in explicit {
        if c != usize::MAX {
            used[c] = true;
        }
    }
    let mut rest = (0..num_candidates).filter(|&c| !used[c]);
    let mut order = Vec::with_capacity(num_candidates);
    for &c in explicit {
        if c == usize::MAX {
            order.extend(&mut rest);
        } else {
            order.push(c);
        }
    }
    order.extend(rest);
    order
}

const TAIL: usize = usize::MAX;

// ---------------------------------------------------------------------------
// 3SAT -> Dodgson score
// ---------------------------------------------------------------------------

/// The score-problem election: the formula is satisfiable iff the Dodgson
/// score of `q` is at most `budget` = 4m + n.
#[derive(Debug, Clone)]
pub struct DodgsonScoreGadget {
    pub election: Election,
    pub q: usize,
    pub b: usize,
    pub budget: u64,
    /// id of clause candidate i
    pub clause_candidates: Vec<usize>,
    /// id of slot candidate (i, j)
    pub slot_candidates: Vec<[usize; 3]>,
    /// id of variable candidate t
    pub variable_candidates: Vec<usize>,
}

/// Builds the Dodgson score gadget for a 3CNF with n >= 1 variables and
/// m >= 1 clauses (and 2n + 3m >= 5, so the padding block is nonnegative).
pub fn sat3_to_dodgson_score(f: &CnfFormula) -> Result<(DodgsonScoreGadget, ReductionTrace)> {
    let n = f.num_vars;
    let m = f.clauses.len();
    if n == 0 || m == 0 {
        return Err(Error::invalid("need at least one variable and one clause"));
    }
    if 2 * n + 3 * m < 5 {
        return Err(Error::invalid("2n + 3m must be at least 5"));
    }
    // candidate ids: c_i | c_{i,j} row-major | z-hat_t | q | b
    let clause_candidates: Vec<usize> = (0..m).collect();
    let slot_candidates: Vec<[usize; 3]> = (0..m)
        .map(|i| [m + 3 * i, m + 3 * i + 1, m + 3 * i + 2])
        .collect();
    let variable_candidates: Vec<usize> = (0..n).map(|t| 4 * m + t).collect();
    let q = 4 * m + n;
    let b = 4 * m + n + 1;
    let num_candidates = 4 * m + n + 2;

    let mut votes = Vec::new();
    // Block I: (c_i > c_{i,j} > q > ...)
    for i in 0..m {
        for j in 0..3 {
            votes.push(Vote::complete(
                1,
                fill_tail(&[clause_candidates[i], slot_candidates[i][j], q, TAIL], num_candidates),
            ));
        }
    }
    // Block II: (z-hat_t > {slots of literal} > q > ...), positive then negative
    for t in 0..n {
        for negated in [false, true] {
            let mut explicit = vec![variable_candidates[t]];
            for i in 0..m {
                for j in 0..3 {
                    if f.clauses[i][j].var == t && f.clauses[i][j].negated == negated {
                        explicit.push(slot_candidates[i][j]);
                    }
                }
            }
            explicit.push(q);
            explicit.push(TAIL);
            votes.push(Vote::complete(1, fill_tail(&explicit, num_candidates)));
        }
    }
    // Block III: (... > b > q > {c_1..c_m}) and 2n+3m-5 of (... > b > q)
    {
        let mut explicit = vec![TAIL, b, q];
        explicit.extend(&clause_candidates);
        votes.push(Vote::complete(1, fill_tail(&explicit, num_candidates)));
        let pad = (2 * n + 3 * m - 5) as u64;
        if pad > 0 {
            votes.push(Vote::complete(pad, fill_tail(&[TAIL, b, q], num_candidates)));
        }
    }

    let election = Election::new(num_candidates, votes)?;
    let trace = ReductionTrace::new("sat3-to-dodgson-score")
        .count("candidates", num_candidates as u64)
        .count("voters", election.num_voters())
        .count("budget", (4 * m + n) as u64)
        .part("clause-candidates", clause_candidates.clone())
        .part("variable-candidates", variable_candidates.clone())
        .part("q-b", vec![q, b]);
    let gadget = DodgsonScoreGadget {
        election,
        q,
        b,
        budget: (4 * m + n) as u64,
        clause_candidates,
        slot_candidates,
        variable_candidates,
    };
    Ok((gadget, trace))
}

// ---------------------------------------------------------------------------
// QSAT2 -> Dodgson control
// ---------------------------------------------------------------------------

/// The control gadget: candidates, blocks, and the two control instances
/// (delete the x-literal candidates, or start without them and add them).
#[derive(Debug, Clone)]
pub struct DodgsonControlGadget {
    /// The full election over all 4n + m + m-hat + 7 candidates.
    pub election: Election,
    pub n: usize,
    pub m: usize,
    pub m_hat: usize,
    pub preferred_p: usize,
    pub q: usize,
    pub d: usize,
    pub buffers: [usize; 4],
    /// x-hat_t ids
    pub x_marker_candidates: Vec<usize>,
    /// y-hat_t ids
    pub y_marker_candidates: Vec<usize>,
    pub clause_candidates: Vec<usize>,
    /// (clause, slot) -> candidate id, only for y-literal occurrences
    pub y_slot_candidates: Vec<(usize, usize, usize)>,
    /// positive literal candidate x_t, then negated x-bar_t, per variable
    pub x_literal_candidates: Vec<(usize, usize)>,
}

impl DodgsonControlGadget {
    /// All deletable (or unregistered) x-literal candidate ids, ascending.
    pub fn x_literal_pool(&self) -> Vec<usize> {
        let mut pool = Vec::with_capacity(2 * self.n);
        for &(pos, neg) in &self.x_literal_candidates {
            pool.push(pos);
            pool.push(neg);
        }
        pool.sort_unstable();
        pool
    }

    pub fn expected_voters(&self) -> u64 {
        (16 * self.n + 8 * self.m + 2 * self.m_hat) as u64 - 8
    }

    /// Dodgson score the gadget pins for candidate d (and for p under any
    /// assignment-compatible deletion): 2n + m + m-hat + 2.
    pub fn pinned_score(&self) -> u64 {
        (2 * self.n + self.m + self.m_hat + 2) as u64
    }
}

/// Pads a QSAT2 formula until the control construction's preconditions hold:
/// block size strictly above the clause count and above 6.
pub fn pad_for_dodgson_control(f: &Qbf2Formula) -> Result<Qbf2Formula> {
    let target = f.block_size.max(f.num_clauses() + 1).max(7);
    f.padded(target)
}

fn build_control_gadget(f: &Qbf2Formula) -> Result<(DodgsonControlGadget, ReductionTrace)> {
    let n = f.block_size;
    let m = f.num_clauses();
    let m_hat = f.y_occurrences();
    if n <= m || n <= 6 {
        return Err(Error::invalid(format!(
            "need block size > clause count and > 6 (got n={n}, m={m}); \
             pad the formula first"
        )));
    }

    // candidate ids:
    // x-hat_t | y-hat_t | c_i | y-slot c_{i,j} | b1..b4 | x_t,x-bar_t... | p q d
    let x_marker: Vec<usize> = (0..n).collect();
    let y_marker: Vec<usize> = (n..2 * n).collect();
    let clause: Vec<usize> = (2 * n..2 * n + m).collect();
    let mut y_slots = Vec::new();
    {
        let mut next = 2 * n + m;
        for i in 0..m {
            for j in 0..3 {
                if f.clauses[i][j].is_y() {
                    y_slots.push((i, j, next));
                    next += 1;
                }
            }
        }
    }
    let b_base = 2 * n + m + m_hat;
    let buffers = [b_base, b_base + 1, b_base + 2, b_base + 3];
    let x_lit_base = b_base + 4;
    let x_literals: Vec<(usize, usize)> = (0..n)
        .map(|t| (x_lit_base + 2 * t, x_lit_base + 2 * t + 1))
        .collect();
    let p = x_lit_base + 2 * n;
    let q = p + 1;
    let d = p + 2;
    let num_candidates = 4 * n + m + m_hat + 7;
    debug_assert_eq!(d + 1, num_candidates);

    let y_slot_id = |i: usize, j: usize| -> Option<usize> {
        y_slots
            .iter()
            .find(|&&(ci, cj, _)| ci == i && cj == j)
            .map(|&(_, _, id)| id)
    };
    let [b1, b2, b3, b4] = buffers;
    let all_x_literals: Vec<usize> = {
        let mut v = Vec::new();
        for &(pos, neg) in &x_literals {
            v.push(pos);
            v.push(neg);
        }
        v
    };

    let mut votes: Vec<Vote> = Vec::new();
    let mut push = |count: u64, explicit: Vec<usize>| {
        votes.push(Vote::complete(count, fill_tail(&explicit, num_candidates)));
    };

    // Block IA: y-occurrences: (c_i > c_{i,j} > q > b1 > p > d > ...)
    for &(i, _, slot) in &y_slots {
        push(1, vec![clause[i], slot, q, b1, p, d, TAIL]);
    }
    // Block IB: x-occurrences: (c_i > x-literal > q > b1 > p > d > ...)
    for i in 0..m {
        for j in 0..3 {
            let lit = f.clauses[i][j];
            if !lit.is_y() {
                let cand = if lit.negated {
                    x_literals[lit.index].1
                } else {
                    x_literals[lit.index].0
                };
                push(1, vec![clause[i], cand, q, b1, p, d, TAIL]);
            }
        }
    }
    // Block II: per t: (y-hat_t > {y-slots of y_t} > q > b1 > p > d > ...),
    // then the negated-literal vote.
    for t in 0..n {
        for negated in [false, true] {
            let mut explicit = vec![y_marker[t]];
            for i in 0..m {
                for j in 0..3 {
                    let lit = f.clauses[i][j];
                    if lit.is_y() && lit.index == t && lit.negated == negated {
                        explicit.push(y_slot_id(i, j).expect("y slot exists"));
                    }
                }
            }
            explicit.extend([q, b1, p, d, TAIL]);
            push(1, explicit);
        }
    }
    // Block III: per t: (x-hat_t > x_t > p > q > d > ...) and the negated one.
    for t in 0..n {
        push(1, vec![x_marker[t], x_literals[t].0, p, q, d, TAIL]);
        push(1, vec![x_marker[t], x_literals[t].1, p, q, d, TAIL]);
    }
    // Block IV:
    // (d > ... > b2 > {c_i} > {all c_{i,j}} > {y-hat} > p > b1 > q)
    {
        let mut explicit = vec![d, TAIL, b2];
        explicit.extend(&clause);
        explicit.extend(y_slots.iter().map(|&(_, _, id)| id));
        explicit.extend(&y_marker);
        explicit.extend([p, b1, q]);
        push(1, explicit);
        // (d > ... > b2 > {x-hat} > q > b1 > b3 > p)
        let mut explicit = vec![d, TAIL, b2];
        explicit.extend(&x_marker);
        explicit.extend([q, b1, b3, p]);
        push(1, explicit);
    }
    // Block V: (d > ... > b2 > p > q > {c_i}) and 2n+3m-6 copies of
    // (d > ... > b2 > p > b1 > q)
    {
        let mut explicit = vec![d, TAIL, b2, p, q];
        explicit.extend(&clause);
        push(1, explicit);
        push((2 * n + 3 * m - 6) as u64, vec![d, TAIL, b2, p, b1, q]);
    }
    // Block VI
    {
        push((4 * n + m + m_hat - 2) as u64, vec![p, q, d, TAIL]);
        let mut explicit = vec![TAIL, b3, q, b4, d, p, b1, b2];
        explicit.extend(&all_x_literals);
        push((2 * n + m + m_hat - 4) as u64, explicit);
        let mut explicit = vec![d, TAIL, b2, q, b1, p, b3, b4];
        explicit.extend(&all_x_literals);
        push((4 * n - 1) as u64, explicit);
        let mut explicit = vec![TAIL, b3, d, p, b4, q, b1, b2];
        explicit.extend(&all_x_literals);
        push(2, explicit);
    }

    let election = Election::new(num_candidates, votes)?;
    let gadget = DodgsonControlGadget {
        election,
        n,
        m,
        m_hat,
        preferred_p: p,
        q,
        d,
        buffers,
        x_marker_candidates: x_marker,
        y_marker_candidates: y_marker,
        clause_candidates: clause,
        y_slot_candidates: y_slots,
        x_literal_candidates: x_literals,
    };
    debug_assert_eq!(gadget.election.num_voters(), gadget.expected_voters());
    let trace = ReductionTrace::new("qsat2-to-dodgson-control")
        .count("candidates", num_candidates as u64)
        .count("voters", gadget.election.num_voters())
        .count("limit", 2 * n as u64)
        .part("x-literals", gadget.x_literal_pool())
        .part("p-q-d", vec![p, q, d])
        .part("buffers", buffers.to_vec());
    Ok((gadget, trace))
}

/// QSAT2 to Dodgson control by deleting designated candidates: the chair may
/// delete any subset of the x-literal candidates (limit 2n).
pub fn qsat2_to_dodgson_ccdcstar(
    f: &Qbf2Formula,
) -> Result<(DodgsonControlGadget, ControlInstance, ReductionTrace)> {
    let (gadget, trace) = build_control_gadget(f)?;
    let inst = ControlInstance {
        rule: Rule::Dodgson,
        election: gadget.election.clone(),
        action: ControlAction::DeleteCandidatesRestricted {
            deletable: gadget.x_literal_pool(),
        },
        limit: 2 * gadget.n as u64,
        preferred: gadget.preferred_p,
    };
    Ok((gadget, inst, trace))
}

/// QSAT2 to Dodgson control by adding candidates: the same election with the
/// x-literal candidates unregistered. Deleting a subset X-hat from the full
/// election is equivalent to adding its complement to the reduced one.
pub fn qsat2_to_dodgson_ccac(
    f: &Qbf2Formula,
) -> Result<(DodgsonControlGadget, ControlInstance, ReductionTrace)> {
    let (gadget, trace) = build_control_gadget(f)?;
    let inst = ControlInstance {
        rule: Rule::Dodgson,
        election: gadget.election.clone(),
        action: ControlAction::AddCandidates {
            unregistered: gadget.x_literal_pool(),
        },
        limit: 2 * gadget.n as u64,
        preferred: gadget.preferred_p,
    };
    Ok((gadget, inst, trace))
}
