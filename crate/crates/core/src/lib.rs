//! Toolkit for binary self-dual codes: shadows and doubly even neighbors,
//! covering radii and coset census, and the exact Gleason-type weight
//! enumerators of s-extremal codes.

pub mod bridge;
pub mod catalog;
pub mod code;
pub mod combin;
pub mod config;
pub mod coset;
pub(crate) mod enumerate;
pub mod error;
pub mod gf2;
pub mod gleason;
pub mod shadow;
pub(crate) mod lanes;

pub use code::{LinearCode, ParityClass, WeightEnum};
pub use config::Budget;
pub use error::{Error, Result};
pub use gf2::{BitMat, BitVec};
