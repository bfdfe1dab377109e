//! Exact interval arithmetic, the shrink/expand instance model, endpoint
//! normalization, instance file I/O, and seeded instance generators.
//!
//! Coordinates are exact integers throughout. A degenerate interval `[a, a]`
//! denotes the empty interval: it contains no point and intersects nothing.
//! Vertex and pair indices are 1-based.

pub mod error;
pub mod gen;
pub mod instance;
pub mod interval;
pub mod normalize;
pub mod sxi;
pub mod value;

pub use error::CoreError;
pub use instance::{Instance, Mode, ModificationSet, SpEndpoints};
pub use interval::Interval;
pub use normalize::{normalize, normalize_intervals, CoordMap};
pub use value::OptValue;
