//! Configurable resource limits for the exact searches.
//!
//! Every solver in this crate is exact and exponential in the worst case, so
//! each one checks an explicit limit before (and sometimes during) the search
//! and reports [`crate::Error::ResourceLimit`] instead of hanging.

/// Caps for the exact solvers. `Limits::default()` is tuned for desk-scale
/// instances; raise individual fields deliberately.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Candidate cap for the subset dynamic program used by full Kemeny
    /// winner-set determination (memory is O(2^m)).
    pub kemeny_dp_candidates: usize,
    /// Vertex cap for the ordering subset DP used by feedback-arc-set
    /// search. Larger instances fall back to branch and bound.
    pub order_dp_vertices: usize,
    /// Vertex cap for the branch-and-bound linear-ordering search.
    pub order_bb_vertices: usize,
    /// Node budget for the branch-and-bound linear-ordering search.
    pub order_bb_nodes: u64,
    /// log2 of the number of voter sub-multisets Young score enumeration may
    /// visit. 22 matches one subset per voter for 22 distinct voters.
    pub young_enum_bits: u32,
    /// Node budget for the Dodgson lift search.
    pub dodgson_nodes: u64,
    /// Vertex cap for exact vertex-cover branch and bound.
    pub vc_vertices: usize,
    /// Subset budget for control / graph-control action enumeration.
    pub control_subsets: u64,
    /// Per-block variable cap for QSAT2 enumeration (the loop is 4^n).
    pub qsat2_block_vars: usize,
    /// Variable cap for plain 3SAT enumeration.
    pub sat_vars: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            kemeny_dp_candidates: 20,
            order_dp_vertices: 20,
            order_bb_vertices: 64,
            order_bb_nodes: 50_000_000,
            young_enum_bits: 22,
            dodgson_nodes: 50_000_000,
            vc_vertices: 30,
            control_subsets: 1 << 22,
            qsat2_block_vars: 12,
            sat_vars: 24,
        }
    }
}
