//! Iterated Kirwan blow-up and the reports attached to its leaves.

mod checks;
mod driver;
mod obstruction;

pub use checks::{dagger_check, quasi_smooth_check};
pub use driver::{stabilizer_reduce, Branch, Child, InvariantCheck, ReductionConfig, ReductionNode};
pub use obstruction::{generic_delta_rank, obstruction_report, ObstructionReport};
