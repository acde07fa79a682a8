//! Event-driven simulation of single-layer leaky-integrate-and-fire networks
//! with lateral inhibition and a dopaminergic neuron that steers plasticity
//! toward rarely-used units, letting a fixed-size network absorb a sequence of
//! disjoint tasks without catastrophic forgetting.
//!
//! The crate also ships closed-form statistics for the pre-firing membrane
//! potential of a Poisson-driven LIF neuron (a shot-noise process), together
//! with Monte Carlo and quadrature oracles that cross-check them, and a
//! spherical k-means baseline used to relate firing thresholds to cluster
//! geometry.
//!
//! The core is `no_std` compatible (`alloc` required); disable default
//! features for embedded targets. The `parallel` feature adds rayon-backed
//! drivers for label assignment and evaluation.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod encoding;
pub mod engine;
pub mod error;
pub mod kmeans;
pub mod lifecycle;
pub mod math;
pub mod plasticity;
pub mod quadrature;
pub mod seeds;
pub mod stats;

pub use error::{Error, Result};
