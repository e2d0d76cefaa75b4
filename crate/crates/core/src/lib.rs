//! Finite connectivity spaces and the structures built on them: connectivity
//! order, foliations, representations, finite-category dynamics and
//! connective categories.
//!
//! Points are `0..n` with `n <= 63`; subsets are `u64` bitmasks.

pub mod adjunction;
pub mod conncat;
pub mod conndyn;
pub mod device;
pub mod dynamics;
pub mod dynamorphism;
pub mod error;
pub mod fincat;
pub mod fixtures;
pub mod foliation;
pub mod interpretation;
pub mod json;
pub mod order;
pub mod representation;
pub mod space;
pub mod subset;
pub mod tc;

pub use error::{Error, Result};
pub use foliation::Foliation;
pub use representation::{RepMorphism, Representation};
pub use space::Space;
