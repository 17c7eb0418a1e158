//! Graded rings, free modules, module presentations and minimal free
//! resolutions.

pub mod betti;
pub mod free;
pub mod koszul;
pub mod presentation;
pub mod resolution;
pub mod ring;

pub use betti::BettiTable;
pub use free::{GradedFreeModule, GradedMap};
pub use koszul::{is_regular_sequence, koszul_complex, subsets, tor1_self_test, Tor1Report};
pub use presentation::{Length, ModulePresentation};
pub use resolution::{default_cap, minimal_free_resolution, Resolution};
pub use ring::GradedRing;
