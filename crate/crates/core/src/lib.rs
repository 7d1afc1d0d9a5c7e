//! Exact computations for group-theoretical fusion categories `C(G, ω, H, ψ)`.

pub mod error;
pub mod based_ring;
pub mod bimodule;
pub mod cli;
pub mod cochain;
pub mod group;
pub mod gt_category;
pub mod phase;
pub mod smith;
pub mod verify;

pub use error::{Error, Result};
pub use group::{FiniteGroup, Subgroup};
pub use phase::Phase;
