//! First-passage percolation on random `d`-regular graphs.
//!
//! This crate is the allocation-only (`no_std` + `alloc`) core: configuration
//! model sampling, i.i.d. `Exp(1)` edge weights, exact shortest-weight paths
//! with hopcount tracking, the continuous-time half-edge exploration process,
//! the hopcount threshold constants and a few Galton-Watson helpers.
//!
//! Everything that touches the filesystem, the clock or the command line
//! lives in the `fpp-regular` companion crate.
#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod branching;
pub mod constants;
mod error;
pub mod exploration;
pub mod fpp;
pub mod graph;
mod math;
pub mod seed;
pub mod weights;

pub use error::{Error, Result};
pub use graph::RegularMultigraph;
pub use weights::WeightedGraph;
