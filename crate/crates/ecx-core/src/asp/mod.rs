//! Answer-set-programming artifacts for Kemeny control by adding candidates:
//! the fixed guess/check/saturate program, instance fact emission, and an
//! optional external grounder/solver driver with a brute-force cross-check.
//!
//! The program encodes the control question as satisfiability: the emitted
//! program plus facts has an answer set iff some subset of at most K
//! unregistered candidates makes the preferred candidate a Kemeny winner.
//! The guess part picks the added candidates and a consensus topped by the
//! preferred candidate; the check part re-guesses a rival consensus with a
//! disjunctive head; the saturation part blows the model up whenever the
//! rival is malformed, no cheaper, or also topped by the preferred
//! candidate, so only genuine counterexamples block an answer set.

mod external;
mod facts;
mod program;

pub use external::{cross_check, run_external, solver_from_env, CrossCheckReport, SolveStatus,
    SolverConfig};
pub use facts::{fact_base_to_control, facts_from_ccac, parse_facts, FactBase};
pub use program::emit_program;

/// A complete solver input: the fixed rule set and the instance facts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AspArtifact {
    pub program: String,
    pub facts: String,
}

impl AspArtifact {
    pub fn new(facts: &FactBase) -> Self {
        AspArtifact {
            program: emit_program().to_string(),
            facts: facts.render(),
        }
    }

    /// The facts followed by the program, ready for a grounder.
    pub fn combined(&self) -> String {
        format!("{}\n{}", self.facts, self.program)
    }

    pub fn write_to(&self, path: &std::path::Path) -> crate::Result<()> {
        std::fs::write(path, self.combined())?;
        Ok(())
    }
}
