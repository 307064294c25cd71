//! Exact solvers for very hard electoral-control problems.
//!
//! The crate provides, at desk scale:
//!
//! * exact Kemeny, Kemeny', Young, and Dodgson scores and winner sets
//!   ([`elections`]);
//! * brute-force decision of constructive control by adding/deleting
//!   candidates or voters under those rules ([`control`]);
//! * exact solvers for the graph and formula problems the control problems
//!   reduce from: vertex cover and independent set membership variants,
//!   feedback arc set membership variants, generalized node deletion,
//!   3SAT, and the two-quantifier QSAT2 fragment ([`graphs`]);
//! * the polynomial-time reductions connecting them, as instance
//!   transformations whose decisions can be cross-checked end to end
//!   ([`reduce`]);
//! * a guess/check/saturate answer-set-programming encoding emitter for
//!   Kemeny control by adding candidates, with an optional external solver
//!   driver ([`asp`]);
//! * a PrefLib SOC ingester and experiment harness ([`preflib`]);
//! * text formats for every instance type ([`io`]) and seeded random
//!   instance generators ([`gen`]).

pub mod asp;
pub mod control;
pub mod elections;
pub mod gen;
pub mod graphs;
pub mod io;
pub mod preflib;
pub mod reduce;

mod error;
mod limits;
pub mod ordering;

pub use error::{Error, Result};
pub use limits::Limits;
