//! Algorithmic core for studying time-step size in offline RL on ICU-style
//! event streams.
//!
//! Everything in this crate is pure computation over `alloc` collections:
//! a continuous-time patient simulator with known dynamics, window
//! discretization, small hand-differentiated neural primitives, a recurrent
//! state encoder, kNN behavior cloning, discrete batch-constrained
//! Q-learning, weighted importance sampling with per-horizon normalization,
//! cross-step-size action mapping, and Pareto model selection.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, configuration,
//! and the CLI live in the companion `dtrl` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod action;
pub mod behavior;
pub mod bcq;
pub mod crossdt;
pub mod discretize;
pub mod math;
pub mod nn;
pub mod ope;
pub mod represent;
pub mod rng;
pub mod select;
pub mod simgen;
pub mod trajectory;

pub use action::{ActionSpace, JointAction, ACTION_COUNT, LEVELS_PER_DRUG};
pub use trajectory::{discounted_return, Cohort, DiscretizedTrajectory, Partition, TimeGrid};
