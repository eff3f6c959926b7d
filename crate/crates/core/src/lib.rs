//! Bi-criteria coloring of partially 2- and 3-colorable graphs.
//!
//! [`rounding`] holds the relaxation-based pipelines for adversarial inputs,
//! [`semirandom`] the planted-instance generator and the recovery algorithms,
//! and [`oracle`] exact solvers for small graphs that the tests check
//! against. The guide in `book/` walks through each piece; its snippets run
//! as doctests of this crate.

pub mod graph;
pub mod oddcycle;
pub mod oracle;
pub mod rounding;
pub mod sdp;
pub mod seed;
pub mod semirandom;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/relaxation.md")]
    mod relaxation {}
    #[doc = include_str!("../../../book/src/odd-cycles.md")]
    mod odd_cycles {}
    #[doc = include_str!("../../../book/src/pipelines.md")]
    mod pipelines {}
    #[doc = include_str!("../../../book/src/semi-random.md")]
    mod semi_random {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
