//! The semi-random planted model and the algorithms that recover from it.
//!
//! An instance hides a k-colorable part among `eps n` adversarial vertices,
//! but every good-bad pair is joined at random. Those random edges make the
//! bad vertices visible locally: their neighborhoods contain many disjoint
//! short odd cycles (three colors) or a large matching (two colors), while a
//! good vertex's neighborhood can only get such structure through bad
//! vertices.

mod generate;
mod p2c;
mod p3c;
mod wigderson;

pub use generate::{
    bad_count, generate, AdversarySpec, BadPolicy, CrossPolicy, GenerateError, GoodGraph,
    PlantedInstance,
};
pub use p2c::{neighborhood_matchings, p2c_random, P2cOutput, P2cResult};
pub use p3c::{double_eps_threshold, neighborhood_cycle_sets, p3c_random, Branch, P3cOutput};
pub use wigderson::{wigderson_budget, wigderson_color, wigderson_threshold, WigdersonError};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SemiRandomError {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    /// A step that cannot fail on valid input did; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}
