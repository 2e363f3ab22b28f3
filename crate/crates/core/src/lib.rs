//! Scheduling jobs on identical parallel machines to minimize total completion
//! time when every job holds an exclusive resource (`P|partition|ΣCj`).
//!
//! The crate is organised bottom-up:
//!
//! - [`instance`]: problem and schedule data model, feasibility checking and the
//!   objective.
//! - [`structure`]: slack, blocking pairs, suffixes, untangling, tight-schedule
//!   normalization, train sequences and the SPT-order predicate.
//! - [`heuristics`]: the SPT-available list rule, the shrinking algorithm and the
//!   `k_j` / single-machine lower bounds.
//! - [`flow`]: the exact position-indexed min-cost-flow solver for unit jobs.
//! - [`oracle`]: brute-force reference optimum over no-idle schedules, plus an
//!   edge-coloring decider.
//! - [`reductions`]: instance families and hardness gadgets with thresholds.
//! - [`bench`]: benchmark rows checking every approximation bound.
//! - [`io`]: the JSON instance / schedule / metadata file formats.
//!
//! All time arithmetic is exact ([`Rational`]).

pub mod bench;
pub mod error;
pub mod flow;
pub mod heuristics;
pub mod instance;
pub mod io;
pub mod oracle;
pub mod rational;
pub mod reductions;
pub mod structure;

pub use error::{Error, Result};
pub use instance::{
    objective, validate_instance, validate_schedule, Assignment, Instance, Job, JobId, MachineId,
    ResourceId, Schedule, Slot, Timeline, ValidationReport, Violation,
};
pub use rational::Rational;
