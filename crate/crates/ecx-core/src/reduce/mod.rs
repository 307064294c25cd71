//! The instance transformations connecting formulas, graphs, and elections.
//!
//! Every function here is a total, deterministic mapping from a source
//! instance to a target instance, paired with a [`ReductionTrace`] recording
//! the gadget layout. Decision preservation is not assumed; the test suite
//! checks it against the exact oracles on small instances.

mod dodgson_gadget;
mod fas_reductions;
mod gnd;
mod karp;
mod kemeny_reductions;
mod mcgarvey;
mod young_gadget;

pub use dodgson_gadget::{
    pad_for_dodgson_control, qsat2_to_dodgson_ccac, qsat2_to_dodgson_ccdcstar,
    sat3_to_dodgson_score, DodgsonControlGadget, DodgsonScoreGadget,
};
pub use fas_reductions::{dwork_hat, vcma_to_fasma, vcma_to_fasmaa, vcms_to_fasms};
pub use gnd::{gnd_to_ismd, gnd_to_vcms};
pub use karp::{karp_3sat_to_vc, qsat2_to_vcma, qsat2_to_vcms, KarpLayout};
pub use kemeny_reductions::{
    fasma_to_kemeny_ccac, fasmaa_to_kemeny_prime_ccav, fasms_to_kemeny_ccdcstar,
};
pub use mcgarvey::mcgarvey;
pub use young_gadget::{
    ensure_young_preconditions, ismd_to_young_ccdv, young_preconditions_hold, YoungGadget,
};

use std::fmt;

/// Structural metadata about one reduction application: named counts and
/// named id groups of the target instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub reduction: &'static str,
    pub counts: Vec<(&'static str, u64)>,
    pub parts: Vec<(&'static str, Vec<usize>)>,
}

impl ReductionTrace {
    pub fn new(reduction: &'static str) -> Self {
        ReductionTrace {
            reduction,
            counts: Vec::new(),
            parts: Vec::new(),
        }
    }

    pub fn count(mut self, name: &'static str, value: u64) -> Self {
        self.counts.push((name, value));
        self
    }

    pub fn part(mut self, name: &'static str, ids: Vec<usize>) -> Self {
        self.parts.push((name, ids));
        self
    }

    pub fn get_count(&self, name: &str) -> Option<u64> {
        self.counts.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    pub fn get_part(&self, name: &str) -> Option<&[usize]> {
        self.parts
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v.as_slice())
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "reduction: {}", self.reduction)?;
        for (name, value) in &self.counts {
            writeln!(f, "count {name}: {value}")?;
        }
        for (name, ids) in &self.parts {
            let rendered: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
            writeln!(f, "part {name}: {}", rendered.join(","))?;
        }
        Ok(())
    }
}
